//! Sparse polynomials keyed by term.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::monomial::Term;
use crate::scalar::{parse_scalar, FieldSpec, Scalar};
use crate::trie::Point;

/// A polynomial as a map from terms to non-zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    field: FieldSpec,
    terms: BTreeMap<Term, Scalar>,
}

impl Poly {
    pub fn zero(n: usize, field: FieldSpec) -> Self {
        Poly {
            n,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Self::monomial(Term::one(n), c)
    }

    pub fn monomial(t: Term, c: Scalar) -> Self {
        let mut p = Poly::zero(t.nvars(), c.field());
        p.add_term(t, c);
        p
    }

    pub fn term(t: Term, field: FieldSpec) -> Self {
        Self::monomial(t, Scalar::one(field))
    }

    /// `scale * (x_var - root)`.
    pub fn linear(n: usize, var: usize, root: &Scalar, scale: &Scalar) -> Self {
        let mut p = Poly::monomial(Term::var(n, var), scale.clone());
        p.add_term(Term::one(n), -(scale * root));
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms with coefficients, increasing lex.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Term, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Term) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.keys().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Term::degree).max()
    }

    pub fn support(&self) -> Vec<Term> {
        self.terms.keys().cloned().collect()
    }

    pub fn add_term(&mut self, t: Term, c: Scalar) {
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Scalar::one(self.field)))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut out = Poly::zero(self.n, self.field);
        for (t, a) in &self.terms {
            out.add_term(t.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.n, self.field);
        for (t, a) in &self.terms {
            for (u, b) in &other.terms {
                out.add_term(t.mul(u), a * b);
            }
        }
        out
    }

    pub fn evaluate(&self, p: &Point) -> Result<Scalar> {
        if p.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.dim(),
            });
        }
        let mut acc = Scalar::zero(self.field);
        for (t, c) in &self.terms {
            acc = acc.checked_add(&c.checked_mul(&crate::oracle::eval_term(t, p, self.field))?)?;
        }
        Ok(acc)
    }

    /// Parses sums such as `x1^2 - 3/2*x1*x3 + 4`.
    pub fn parse(text: &str, n: usize, field: FieldSpec) -> Result<Poly> {
        let mut out = Poly::zero(n, field);
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse(String::from("empty polynomial")));
        }
        let mut chunks = Vec::new();
        let mut start = 0;
        for (k, ch) in cleaned.char_indices() {
            if (ch == '+' || ch == '-') && k > 0 && !cleaned[..k].ends_with('^') {
                chunks.push(&cleaned[start..k]);
                start = k;
            }
        }
        chunks.push(&cleaned[start..]);
        for chunk in chunks {
            let (neg, body) = match chunk.as_bytes().first() {
                Some(b'-') => (true, &chunk[1..]),
                Some(b'+') => (false, &chunk[1..]),
                _ => (false, chunk),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in '{text}'")));
            }
            let mut coeff = Scalar::one(field);
            let mut factors = Vec::new();
            for f in body.split('*') {
                if f.starts_with('x') {
                    factors.push(f);
                } else {
                    coeff = &coeff * &parse_scalar(f, field)?;
                }
            }
            let t = if factors.is_empty() {
                Term::one(n)
            } else {
                Term::parse(&factors.join("*"), n)?
            };
            if neg {
                coeff = -coeff;
            }
            out.add_term(t, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if c.signum() < 0 { (true, -c) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{mag}*{t}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const Q: FieldSpec = FieldSpec::RATIONALS;

    fn q(v: i64) -> Scalar {
        Scalar::from_i64(v, Q)
    }

    #[test]
    fn product_and_render() {
        let a = Poly::linear(2, 1, &q(1), &q(1));
        let b = Poly::linear(2, 2, &q(2), &q(1));
        let p = a.mul(&b);
        assert_eq!(p.to_string(), "x1*x2 - x2 - 2*x1 + 2");
        assert_eq!(Poly::parse("x1*x2 - x2 - 2*x1 + 2", 2, Q).unwrap(), p);
        assert_eq!(p.leading_term().unwrap().render(), "x1*x2");
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn evaluation() {
        let p = Poly::parse("x2^2 - 3/2*x1 + 1", 2, Q).unwrap();
        let pt = Point::from_i64(&[2, 3], Q);
        assert_eq!(p.evaluate(&pt).unwrap(), q(7));
        assert!(p.evaluate(&Point::from_i64(&[1], Q)).is_err());
        assert_eq!(Poly::constant(2, q(1)).evaluate(&pt).unwrap(), q(1));
    }

    #[test]
    fn parse_errors() {
        assert!(Poly::parse("", 2, Q).is_err());
        assert!(Poly::parse("x1 +", 2, Q).is_err());
        assert!(Poly::parse("y", 2, Q).is_err());
    }
}
