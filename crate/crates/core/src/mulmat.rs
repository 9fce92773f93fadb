//! Evaluation matrix `B` (`b_lj = t_l(P_j)`), its inverse `C`, the matrices
//! `D_h` (`d_lj = a_hj * b_lj`) and the multiplication matrices `A_h = D_h C`,
//! all bordered by one row and column per new point.

#![allow(clippy::needless_range_loop)]

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::monomial::{minimal_generators, Term};
use crate::poly::Poly;
use crate::scalar::{FieldSpec, Scalar};
use crate::trie::Point;

/// Incrementally maintained `B`, `C`, `D_h` and `A_h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulState {
    n: usize,
    field: FieldSpec,
    points: Vec<Point>,
    terms: Vec<Term>,
    sigma: Vec<Option<(usize, usize)>>,
    b: Matrix,
    c: Matrix,
    d: Vec<Matrix>,
    a: Vec<Matrix>,
}

/// Residuals of the defining identities; all zero for a consistent state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residuals {
    /// `B C - I`.
    pub inverse: Matrix,
    /// `A_h B - D_h` per variable.
    pub eigen: Vec<Matrix>,
    /// `A_h A_k - A_k A_h` for `h < k`, in order.
    pub commutators: Vec<Matrix>,
    /// `D_h - diag(a_h) B` per variable, read column-wise.
    pub scaling: Vec<Matrix>,
}

impl Residuals {
    pub fn all_zero(&self) -> bool {
        self.inverse.is_zero()
            && self.eigen.iter().all(Matrix::is_zero)
            && self.commutators.iter().all(Matrix::is_zero)
            && self.scaling.iter().all(Matrix::is_zero)
    }
}

/// New column and row of `B` for the newest point. `sigma[h] = (s, l)` with
/// `t_h = x_s * t_l`, `None` only for `t_1 = 1`.
pub fn eval_matrix_extend(b: &mut Matrix, points: &[Point], sigma: &[Option<(usize, usize)>]) -> Result<()> {
    let k = b.nrows();
    if points.len() != k + 1 || sigma.len() != k + 1 {
        return Err(Error::InconsistentState(alloc::format!(
            "bordering a {k}x{k} matrix needs {} points and factorizations",
            k + 1
        )));
    }
    let field = b.field();
    b.grow();
    let pk = &points[k];
    // New column: t_h(P_k) for h < k.
    for h in 0..k {
        let v = match sigma[h] {
            None => Scalar::one(field),
            Some((s, l)) => check_antecedent(l, h).map(|_| pk.coord(s) * b.get(l, k))?,
        };
        b.set(h, k, v);
    }
    // New row: t_k(P_m) for m <= k.
    for m in 0..=k {
        let v = match sigma[k] {
            None if k == 0 => Scalar::one(field),
            None => return Err(Error::InconsistentState(alloc::format!("term {} lacks a factorization", k + 1))),
            Some((s, l)) => check_antecedent(l, k).map(|_| points[m].coord(s) * b.get(l, m))?,
        };
        b.set(k, m, v);
    }
    Ok(())
}

fn check_antecedent(l: usize, h: usize) -> Result<()> {
    if l < h {
        Ok(())
    } else {
        Err(Error::InconsistentState(alloc::format!("term {} built from later term {}", h + 1, l + 1)))
    }
}

/// Borders `D_h` the same way, starting from `d_{1,m} = a_{h,m}`.
pub fn d_matrix_extend(d: &mut Matrix, h: usize, points: &[Point], sigma: &[Option<(usize, usize)>]) -> Result<()> {
    let k = d.nrows();
    if points.len() != k + 1 || sigma.len() != k + 1 {
        return Err(Error::InconsistentState(alloc::format!(
            "bordering a {k}x{k} matrix needs {} points",
            k + 1
        )));
    }
    d.grow();
    let pk = &points[k];
    for r in 0..k {
        let v = match sigma[r] {
            None => pk.coord(h).clone(),
            Some((s, l)) => check_antecedent(l, r).map(|_| pk.coord(s) * d.get(l, k))?,
        };
        d.set(r, k, v);
    }
    for m in 0..=k {
        let v = match sigma[k] {
            None => points[m].coord(h).clone(),
            Some((s, l)) => check_antecedent(l, k).map(|_| points[m].coord(s) * d.get(l, m))?,
        };
        d.set(k, m, v);
    }
    Ok(())
}

/// Data produced while bordering `C`, reused by the `A_h` update.
#[derive(Debug, Clone)]
pub struct Bordering {
    /// `(b_{N,1}, ..., b_{N,N-1}) C'`.
    pub row: Vec<Scalar>,
    pub pivot: Scalar,
}

/// Extends `c = B'^{-1}` to the inverse of the already bordered `b`.
/// Fails before touching `c` if the pivot vanishes.
pub fn inverse_extend(b: &Matrix, c: &mut Matrix) -> Result<Bordering> {
    let k = c.nrows();
    if b.nrows() != k + 1 {
        return Err(Error::DimensionMismatch {
            expected: k + 1,
            found: b.nrows(),
        });
    }
    let field = b.field();
    let zero = Scalar::zero(field);
    // i_m = sum_j b_{N j} c'_{j m}
    let mut row = vec![zero.clone(); k];
    for (j, bj) in b.row(k)[..k].iter().enumerate() {
        if bj.is_zero() {
            continue;
        }
        for (m, x) in row.iter_mut().enumerate() {
            *x = &*x + &(bj * c.get(j, m));
        }
    }
    let mut pivot = b.get(k, k).clone();
    for (j, i) in row.iter().enumerate() {
        pivot = &pivot - &(b.get(j, k) * i);
    }
    let inv = pivot.inv().map_err(|_| Error::SingularPivot)?;
    // New column before scaling: c_{hN} = -sum_j c'_{hj} b_{jN}.
    let mut col = vec![zero.clone(); k];
    for (h, x) in col.iter_mut().enumerate() {
        let mut acc = zero.clone();
        for j in 0..k {
            acc = &acc + &(c.get(h, j) * b.get(j, k));
        }
        *x = -(&acc * &inv);
    }
    c.grow();
    for h in 0..k {
        for m in 0..k {
            let v = c.get(h, m) - &(&row[m] * &col[h]);
            c.set(h, m, v);
        }
        c.set(h, k, col[h].clone());
    }
    for m in 0..k {
        c.set(k, m, -(&row[m] * &inv));
    }
    c.set(k, k, inv.clone());
    Ok(Bordering { row, pivot })
}

/// Updates `A = D C` after `D` and `C` have been bordered:
/// `a_{lj} = a'_{lj} - i_j a_{lN}` for `l, j < N`, with the new column
/// `a_{lN} = sum_k d_{lk} c_{kN}` and the new row `a_{Nj} = sum_k d_{Nk} c_{kj}`.
pub fn as_matrices_update(a: &mut Matrix, d: &Matrix, c: &Matrix, bordering: &Bordering) -> Result<()> {
    let k = a.nrows();
    if d.nrows() != k + 1 || c.nrows() != k + 1 || bordering.row.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k + 1,
            found: d.nrows(),
        });
    }
    let field = a.field();
    a.grow();
    let dot = |l: usize, j: usize| {
        let mut acc = Scalar::zero(field);
        for q in 0..=k {
            let x = d.get(l, q);
            if !x.is_zero() {
                acc = &acc + &(x * c.get(q, j));
            }
        }
        acc
    };
    for l in 0..k {
        let aln = dot(l, k);
        if !aln.is_zero() {
            for j in 0..k {
                let v = a.get(l, j) - &(&bordering.row[j] * &aln);
                a.set(l, j, v);
            }
        }
        a.set(l, k, aln);
    }
    for j in 0..=k {
        let v = dot(k, j);
        a.set(k, j, v);
    }
    Ok(())
}

impl MulState {
    pub fn new(n: usize, field: FieldSpec) -> Self {
        MulState {
            n,
            field,
            points: Vec::new(),
            terms: Vec::new(),
            sigma: Vec::new(),
            b: Matrix::zeros(0, 0, field),
            c: Matrix::zeros(0, 0, field),
            d: vec![Matrix::zeros(0, 0, field); n],
            a: vec![Matrix::zeros(0, 0, field); n],
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn c(&self) -> &Matrix {
        &self.c
    }

    /// `D_h`, 1-based variable.
    pub fn d(&self, h: usize) -> &Matrix {
        &self.d[h - 1]
    }

    /// `A_h`, 1-based variable.
    pub fn a(&self, h: usize) -> &Matrix {
        &self.a[h - 1]
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn sigma_log(&self) -> &[Option<(usize, usize)>] {
        &self.sigma
    }

    /// Borders every matrix for a new point whose term is `term`, with
    /// `factor = (s, l)` such that `term = x_s * t_l`. On error nothing changes.
    pub fn add_point(&mut self, p: Point, term: Term, factor: Option<(usize, usize)>) -> Result<()> {
        if p.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.dim(),
            });
        }
        let k = self.len();
        match factor {
            None if k > 0 => {
                return Err(Error::InconsistentState(alloc::format!("term {} lacks a factorization", k + 1)))
            }
            Some((s, l)) if l >= k || self.terms[l].mul_var(s) != term => {
                return Err(Error::InconsistentState(alloc::format!("{term} is not x{s} times term {}", l + 1)))
            }
            _ => {}
        }
        let mut points = self.points.clone();
        points.push(p);
        let mut sigma = self.sigma.clone();
        sigma.push(factor);
        let mut b = self.b.clone();
        eval_matrix_extend(&mut b, &points, &sigma)?;
        #[cfg(debug_assertions)]
        {
            let field = b.field();
            let terms: Vec<&Term> = self.terms.iter().chain([&term]).collect();
            for (l, t) in terms.iter().enumerate() {
                for (j, q) in points.iter().enumerate() {
                    debug_assert_eq!(*b.get(l, j), crate::oracle::eval_term(t, q, field), "b[{l}][{j}]");
                }
            }
        }
        let mut c = self.c.clone();
        let bordering = inverse_extend(&b, &mut c)?;
        let mut d = self.d.clone();
        let mut a = self.a.clone();
        for h in 0..self.n {
            d_matrix_extend(&mut d[h], h + 1, &points, &sigma)?;
            as_matrices_update(&mut a[h], &d[h], &c, &bordering)?;
        }
        self.points = points;
        self.sigma = sigma;
        self.terms.push(term);
        self.b = b;
        self.c = c;
        self.d = d;
        self.a = a;
        Ok(())
    }

    /// Coefficients of `f` modulo the ideal of the points in the basis
    /// `t_1, ..., t_N`: `C^T (f(P_1), ..., f(P_N))`.
    pub fn normal_form(&self, f: &Poly) -> Result<Vec<Scalar>> {
        let values = self
            .points
            .iter()
            .map(|p| f.evaluate(p))
            .collect::<Result<Vec<_>>>()?;
        self.c.transpose().mul_vec(&values)
    }

    /// `t - Nf(t)` as a polynomial.
    pub fn border_polynomial(&self, t: &Term) -> Result<Poly> {
        let nf = self.normal_form(&Poly::term(t.clone(), self.field))?;
        let mut g = Poly::term(t.clone(), self.field);
        for (tk, v) in self.terms.iter().zip(nf) {
            g.add_term(tk.clone(), -v);
        }
        Ok(g)
    }

    /// `g_t = t - Nf(t)` for every `t` of `star`, in the given order.
    pub fn groebner_border(&self, star: &[Term]) -> Result<Vec<Poly>> {
        star.iter().map(|t| self.border_polynomial(t)).collect()
    }

    /// The reduced lex Gröbner basis: `g_t` for the minimal generators of the
    /// initial ideal.
    pub fn reduced_groebner_basis(&self) -> Result<Vec<Poly>> {
        let gens = minimal_generators(&self.terms, self.n)?;
        self.groebner_border(&gens)
    }

    pub fn residuals(&self) -> Result<Residuals> {
        let nn = self.len();
        let inverse = self.b.mul(&self.c)?.sub(&Matrix::identity(nn, self.field))?;
        let mut eigen = Vec::new();
        let mut scaling = Vec::new();
        for h in 0..self.n {
            eigen.push(self.a[h].mul(&self.b)?.sub(&self.d[h])?);
            let mut s = self.d[h].clone();
            for l in 0..nn {
                for j in 0..nn {
                    let v = s.get(l, j) - &(self.points[j].coord(h + 1) * self.b.get(l, j));
                    s.set(l, j, v);
                }
            }
            scaling.push(s);
        }
        let mut commutators = Vec::new();
        for h in 0..self.n {
            for k in h + 1..self.n {
                let x = self.a[h].mul(&self.a[k])?;
                let y = self.a[k].mul(&self.a[h])?;
                commutators.push(x.sub(&y)?);
            }
        }
        Ok(Residuals {
            inverse,
            eigen,
            commutators,
            scaling,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const Q: FieldSpec = FieldSpec::RATIONALS;

    fn example() -> MulState {
        let mut m = MulState::new(2, Q);
        m.add_point(Point::from_i64(&[1, 0], Q), Term::one(2), None).unwrap();
        m.add_point(Point::from_i64(&[0, 1], Q), Term::var(2, 1), Some((1, 0))).unwrap();
        m
    }

    #[test]
    fn two_point_step() {
        let m = example();
        assert_eq!(*m.c(), Matrix::from_i64(&[&[0, 1], &[1, -1]], Q));
        assert_eq!(*m.a(2), Matrix::from_i64(&[&[1, -1], &[0, 0]], Q));
    }

    #[test]
    fn three_point_example() {
        let mut m = example();
        m.add_point(Point::from_i64(&[0, 2], Q), Term::var(2, 2), Some((2, 0))).unwrap();
        assert_eq!(*m.b(), Matrix::from_i64(&[&[1, 1, 1], &[1, 0, 0], &[0, 1, 2]], Q));
        assert_eq!(*m.c(), Matrix::from_i64(&[&[0, 1, 0], &[2, -2, -1], &[-1, 1, 1]], Q));
        assert_eq!(*m.d(1), Matrix::from_i64(&[&[1, 0, 0], &[1, 0, 0], &[0, 0, 0]], Q));
        assert_eq!(*m.d(2), Matrix::from_i64(&[&[0, 1, 2], &[0, 0, 0], &[0, 1, 4]], Q));
        assert_eq!(*m.a(1), Matrix::from_i64(&[&[0, 1, 0], &[0, 1, 0], &[0, 0, 0]], Q));
        assert_eq!(*m.a(2), Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-2, 2, 3]], Q));
        assert!(m.residuals().unwrap().all_zero());
        let nf = m.normal_form(&Poly::parse("x2^2", 2, Q).unwrap()).unwrap();
        assert_eq!(nf, [-2, 2, 3].map(|v| Scalar::from_i64(v, Q)));
        let g = m.border_polynomial(&Term::parse("x1^2", 2).unwrap()).unwrap();
        assert_eq!(g.to_string(), "x1^2 - x1");
    }

    #[test]
    fn bad_factorization_rejected() {
        let mut m = example();
        let before = m.clone();
        let err = m.add_point(Point::from_i64(&[0, 2], Q), Term::var(2, 2), Some((1, 1)));
        assert!(matches!(err, Err(Error::InconsistentState(_))));
        assert_eq!(m, before);
    }

    #[test]
    fn zero_pivot_leaves_state_untouched() {
        // A duplicate point gives a singular evaluation matrix.
        let mut m = example();
        let before = m.clone();
        let err = m.add_point(Point::from_i64(&[0, 1], Q), Term::var(2, 2), Some((2, 0)));
        assert_eq!(err, Err(Error::SingularPivot));
        assert_eq!(m, before);
    }

    #[test]
    fn single_point_basis() {
        let mut m = MulState::new(2, Q);
        m.add_point(Point::from_i64(&[3, -1], Q), Term::one(2), None).unwrap();
        assert!(m.b().is_identity() && m.c().is_identity());
        let basis: Vec<_> = m.reduced_groebner_basis().unwrap().iter().map(|g| g.to_string()).collect();
        assert_eq!(basis, ["x1 - 3", "x2 + 1"]);
    }
}
