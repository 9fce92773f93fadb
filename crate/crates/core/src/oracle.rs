//! Slow reference computations of the lex escalier, used to cross-check the
//! incremental game.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::Term;
use crate::scalar::Scalar;
use crate::trie::{find_duplicate, Point};

fn check_distinct(points: &[Point]) -> Result<()> {
    match find_duplicate(points) {
        Some((index, duplicate_of)) => Err(Error::DuplicatePoint { index, duplicate_of }),
        None => Ok(()),
    }
}

/// The Cerlienco-Mureddu correspondence, computed point by point with the
/// inductive sub-problem solved from scratch each time. Returns `t_i` for each
/// point in order.
pub fn cerlienco_mureddu(points: &[Point]) -> Result<Vec<Term>> {
    check_distinct(points)?;
    let coords: Vec<&[Scalar]> = points.iter().map(Point::coords).collect();
    Ok(cm(&coords).into_iter().map(Term::new).collect())
}

/// Exponent vectors (natural order) for points given as coordinate slices of
/// a common length.
fn cm(points: &[&[Scalar]]) -> Vec<Vec<u32>> {
    let dim = points.first().map_or(0, |p| p.len());
    let mut alpha: Vec<Vec<u32>> = Vec::with_capacity(points.len());
    for (k, p) in points.iter().enumerate() {
        if k == 0 {
            alpha.push(vec![0; dim]);
            continue;
        }
        let shared = |q: &[Scalar]| q.iter().zip(p.iter()).take_while(|(a, b)| a == b).count();
        let s = points[..k].iter().map(|q| shared(q)).max().expect("k > 0") + 1;
        let l = (0..k)
            .rev()
            .find(|&m| shared(points[m]) >= s - 1 && alpha[m][s..].iter().all(|&e| e == 0))
            .expect("an antecedent exists");
        let mut a = vec![0; dim];
        a[s - 1] = alpha[l][s - 1] + 1;
        if s > 1 {
            let y: Vec<&[Scalar]> = (0..=k)
                .filter(|&i| i == k || (alpha[i][s - 1] == a[s - 1] && alpha[i][s..].iter().all(|&e| e == 0)))
                .map(|i| &points[i][..s - 1])
                .collect();
            let sub = cm(&y);
            a[..s - 1].copy_from_slice(sub.last().expect("non-empty"));
        }
        alpha.push(a);
    }
    alpha
}

/// The lex escalier from linear algebra: scan terms in increasing lex order
/// and keep those whose evaluation vectors are independent of the ones kept.
/// Only terms with `prod(g_i + 1) <= N` are scanned; every escalier term
/// qualifies since all its divisors are in the escalier too.
pub fn bm_escalier_oracle(points: &[Point]) -> Result<Vec<Term>> {
    check_distinct(points)?;
    let nn = points.len();
    let Some(first) = points.first() else {
        return Ok(Vec::new());
    };
    let n = first.dim();
    let field = first.field().unwrap_or_default();
    let mut candidates = Vec::new();
    let mut cur = vec![0u32; n];
    enumerate_box(&mut cur, 0, 1, nn, &mut candidates);
    candidates.sort();

    // Echelon rows kept with their pivot columns.
    let mut basis: Vec<(usize, Vec<Scalar>)> = Vec::new();
    let mut kept = Vec::new();
    for t in candidates {
        let mut v: Vec<Scalar> = points.iter().map(|p| eval_term(&t, p, field)).collect();
        for (pivot, row) in &basis {
            if !v[*pivot].is_zero() {
                let c = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = &*x - &(&c * r);
                }
            }
        }
        if let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[pivot].inv().expect("non-zero pivot");
            let v: Vec<Scalar> = v.iter().map(|x| x * &inv).collect();
            // Keep rows fully reduced on pivot columns.
            for (_, row) in basis.iter_mut() {
                if !row[pivot].is_zero() {
                    let c = row[pivot].clone();
                    for (x, r) in row.iter_mut().zip(&v) {
                        *x = &*x - &(&c * r);
                    }
                }
            }
            basis.push((pivot, v));
            kept.push(t);
            if kept.len() == nn {
                break;
            }
        }
    }
    Ok(kept)
}

fn enumerate_box(cur: &mut Vec<u32>, i: usize, prod: usize, bound: usize, out: &mut Vec<Term>) {
    if i == cur.len() {
        out.push(Term::new(cur.clone()));
        return;
    }
    let mut e = 0;
    while prod * (e as usize + 1) <= bound {
        cur[i] = e;
        enumerate_box(cur, i + 1, prod * (e as usize + 1), bound, out);
        e += 1;
    }
    cur[i] = 0;
}

/// `t(P)`.
pub fn eval_term(t: &Term, p: &Point, field: crate::scalar::FieldSpec) -> Scalar {
    let mut acc = Scalar::one(field);
    for (h, &e) in t.exponents().iter().enumerate() {
        if e > 0 {
            acc = &acc * &p.coord(h + 1).pow(e);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;
    use alloc::string::String;

    fn pts(rows: &[&[i64]]) -> Vec<Point> {
        rows.iter().map(|r| Point::from_i64(r, FieldSpec::RATIONALS)).collect()
    }

    fn render(t: &[Term]) -> Vec<String> {
        t.iter().map(Term::render).collect()
    }

    #[test]
    fn three_points() {
        let x = pts(&[&[1, 0], &[0, 1], &[0, 2]]);
        assert_eq!(render(&bm_escalier_oracle(&x).unwrap()), ["1", "x1", "x2"]);
        assert_eq!(render(&cerlienco_mureddu(&x).unwrap()), ["1", "x1", "x2"]);
    }

    #[test]
    fn single_point() {
        let x = pts(&[&[5, 6, 7]]);
        assert_eq!(render(&bm_escalier_oracle(&x).unwrap()), ["1"]);
        assert_eq!(render(&cerlienco_mureddu(&x).unwrap()), ["1"]);
    }

    #[test]
    fn line_of_points() {
        let x = pts(&[&[0], &[1], &[2], &[3]]);
        assert_eq!(render(&bm_escalier_oracle(&x).unwrap()), ["1", "x1", "x1^2", "x1^3"]);
    }

    #[test]
    fn duplicates_rejected() {
        let x = pts(&[&[0, 1], &[0, 1]]);
        assert!(matches!(cerlienco_mureddu(&x), Err(Error::DuplicatePoint { .. })));
        assert!(matches!(bm_escalier_oracle(&x), Err(Error::DuplicatePoint { .. })));
    }
}
