//! Terms in `k[x_1, ..., x_n]`, the lexicographic order with
//! `x_1 < ... < x_n`, projections and order-ideal predicates.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A power product `x_1^g1 * ... * x_n^gn`, stored in natural variable order.
///
/// `Ord` is lex with `x_1 < ... < x_n`. Terms of different length are
/// ordered by length first, which never happens inside one computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term(Vec<u32>);

impl Term {
    pub fn new(exponents: Vec<u32>) -> Self {
        Term(exponents)
    }

    pub fn one(n: usize) -> Self {
        Term(vec![0; n])
    }

    /// The variable `x_var` (1-based).
    pub fn var(n: usize, var: usize) -> Self {
        let mut e = vec![0; n];
        e[var - 1] = 1;
        Term(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Exponent of `x_var` (1-based).
    pub fn deg(&self, var: usize) -> u32 {
        self.0[var - 1]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `x_var * self`.
    pub fn mul_var(&self, var: usize) -> Term {
        let mut e = self.0.clone();
        e[var - 1] += 1;
        Term(e)
    }

    /// `self / x_var`, if `x_var` divides `self`.
    pub fn div_var(&self, var: usize) -> Option<Term> {
        let mut e = self.0.clone();
        if e[var - 1] == 0 {
            return None;
        }
        e[var - 1] -= 1;
        Some(Term(e))
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Smallest index `i` with a positive exponent, i.e. `min(t)` as a variable.
    pub fn min_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0).map(|i| i + 1)
    }

    /// Largest index with a positive exponent.
    pub fn max_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0).map(|i| i + 1)
    }

    /// Exponents in column order `[x_n, ..., x_1]`.
    pub fn to_elist(&self) -> Vec<u32> {
        self.0.iter().rev().copied().collect()
    }

    pub fn from_elist(elist: &[u32]) -> Term {
        Term(elist.iter().rev().copied().collect())
    }

    /// Renders as `x1^2*x3`, or `1` for the unit term.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{}", i + 1, e)),
            }
        }
        if parts.is_empty() {
            String::from("1")
        } else {
            parts.join("*")
        }
    }

    /// Parses the `x1^2*x3` form into a term over `n` variables.
    pub fn parse(text: &str, n: usize) -> Result<Term> {
        let text = text.trim();
        let mut e = vec![0u32; n];
        if text == "1" {
            return Ok(Term(e));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let bad = || Error::Parse(format!("invalid term factor '{factor}'"));
            let rest = factor.strip_prefix('x').ok_or_else(bad)?;
            let (var, pow) = match rest.split_once('^') {
                Some((v, p)) => (v, p.parse::<u32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let var: usize = var.parse().map_err(|_| bad())?;
            if var == 0 || var > n {
                return Err(Error::IndexOutOfRange { index: var, max: n });
            }
            e[var - 1] += pow;
        }
        Ok(Term(e))
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Lex comparison scanning exponents from `x_n` down to `x_1`.
pub fn lex_cmp(a: &Term, b: &Term) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    Ok(a.cmp(b))
}

fn check_level(t: &Term, m: usize) -> Result<()> {
    if m == 0 || m > t.nvars() {
        Err(Error::IndexOutOfRange {
            index: m,
            max: t.nvars(),
        })
    } else {
        Ok(())
    }
}

/// `pi_m`: keeps `x_1..x_m`, as a term in `m` variables.
pub fn project_low(t: &Term, m: usize) -> Result<Term> {
    check_level(t, m)?;
    Ok(Term(t.0[..m].to_vec()))
}

/// `pi^m`: keeps `x_m..x_n`, as a term in `n - m + 1` variables.
pub fn project_high(t: &Term, m: usize) -> Result<Term> {
    check_level(t, m)?;
    Ok(Term(t.0[m - 1..].to_vec()))
}

/// `pi^m` kept in the ambient ring: exponents below `m` are zeroed.
pub fn project_high_embedded(t: &Term, m: usize) -> Result<Term> {
    check_level(t, m)?;
    let mut e = t.0.clone();
    for x in &mut e[..m - 1] {
        *x = 0;
    }
    Ok(Term(e))
}

/// True iff every divisor of every member is a member.
pub fn is_order_ideal(terms: &[Term]) -> bool {
    let set: BTreeSet<&Term> = terms.iter().collect();
    terms.iter().all(|t| {
        (1..=t.nvars()).all(|v| match t.div_var(v) {
            Some(d) => set.contains(&d),
            None => true,
        })
    })
}

/// Minimal generators of the monomial ideal whose complement is the
/// order ideal `ideal` in `n` variables, sorted lex.
pub fn minimal_generators(ideal: &[Term], n: usize) -> Result<Vec<Term>> {
    check_terms(ideal, n)?;
    if ideal.is_empty() {
        return Ok(vec![Term::one(n)]);
    }
    let set: BTreeSet<&Term> = ideal.iter().collect();
    let mut out = BTreeSet::new();
    for t in ideal {
        for v in 1..=n {
            let c = t.mul_var(v);
            if set.contains(&c) {
                continue;
            }
            let minimal = (1..=n).all(|w| match c.div_var(w) {
                Some(d) => set.contains(&d),
                None => true,
            });
            if minimal {
                out.insert(c);
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn check_terms(ideal: &[Term], n: usize) -> Result<()> {
    if let Some(t) = ideal.iter().find(|t| t.nvars() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: t.nvars(),
        });
    }
    if !is_order_ideal(ideal) {
        return Err(Error::NotOrderIdeal);
    }
    Ok(())
}

/// Star set `{t not in N : t / min(t) in N}` by exhaustive search over the
/// box one step beyond the exponents of `ideal`. Sorted lex.
pub fn star_set_brute(ideal: &[Term], n: usize) -> Result<Vec<Term>> {
    check_terms(ideal, n)?;
    if ideal.is_empty() {
        return Ok(Vec::new());
    }
    let set: BTreeSet<&Term> = ideal.iter().collect();
    let mut bounds = vec![0u32; n];
    for t in ideal {
        for (b, &e) in bounds.iter_mut().zip(t.exponents()) {
            *b = (*b).max(e + 1);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let t = Term(cur.clone());
        if !set.contains(&t) {
            if let Some(v) = t.min_var() {
                if set.contains(&t.div_var(v).expect("min variable divides")) {
                    out.push(t);
                }
            }
        }
        let mut i = 0;
        while i < n {
            if cur[i] < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    out.sort();
    Ok(out)
}
