//! Squarefree separator polynomials `Q_i` with `Q_i(P_j) = δ_ij`, kept as
//! products of linear factors and extended one point at a time from the trie.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{FieldSpec, Scalar};
use crate::trie::{Point, PointTrie};

/// `scale * (x_var - root)`, equal to 1 at its owner and 0 at the point whose
/// `var` coordinate is `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFactor {
    pub var: usize,
    pub root: Scalar,
    pub scale: Scalar,
}

impl LinearFactor {
    pub fn evaluate(&self, p: &Point) -> Scalar {
        &self.scale * &(p.coord(self.var) - &self.root)
    }

    pub fn to_poly(&self, n: usize) -> Poly {
        Poly::linear(n, self.var, &self.root, &self.scale)
    }
}

/// The factor `p_{i,j}` in the first variable where `P_i` and `P_j` differ.
/// Indices are 0-based.
pub fn lagrange_factor(i: usize, j: usize, points: &[Point]) -> Result<LinearFactor> {
    if i == j {
        return Err(Error::SamePoint);
    }
    let (pi, pj) = (&points[i], &points[j]);
    let var = (1..=pi.dim())
        .find(|&h| pi.coord(h) != pj.coord(h))
        .ok_or(Error::DuplicatePoint {
            index: i.max(j),
            duplicate_of: i.min(j),
        })?;
    factor_in(var, pi, pj)
}

fn factor_in(var: usize, own: &Point, other: &Point) -> Result<LinearFactor> {
    let diff = own.coord(var) - other.coord(var);
    let scale = diff
        .inv()
        .map_err(|_| Error::InconsistentState(alloc::format!("points agree on x{var} where they should differ")))?;
    Ok(LinearFactor {
        var,
        root: other.coord(var).clone(),
        scale,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    pub owner: usize,
    pub factors: Vec<LinearFactor>,
}

impl Separator {
    pub fn evaluate(&self, p: &Point) -> Result<Scalar> {
        let field = p.field().unwrap_or_default();
        let mut acc = Scalar::one(field);
        for f in &self.factors {
            if f.var > p.dim() {
                return Err(Error::DimensionMismatch {
                    expected: f.var,
                    found: p.dim(),
                });
            }
            acc = acc.checked_mul(&f.evaluate(p))?;
        }
        Ok(acc)
    }

    /// The product of the factors, distributed.
    pub fn expand(&self, n: usize, field: FieldSpec) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(n, Scalar::one(field)), |acc, f| acc.mul(&f.to_poly(n)))
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// No two factors share both variable and root.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().enumerate().all(|(k, f)| {
            self.factors[..k]
                .iter()
                .all(|g| g.var != f.var || g.root != f.root)
        })
    }
}

/// Separators for the points of a trie, in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorFamily {
    n: usize,
    field: FieldSpec,
    seps: Vec<Separator>,
}

impl SeparatorFamily {
    pub fn new(n: usize, field: FieldSpec) -> Self {
        SeparatorFamily {
            n,
            field,
            seps: Vec::new(),
        }
    }

    /// Builds the family for every point of `trie`, one step at a time.
    pub fn from_trie(trie: &PointTrie, field: FieldSpec) -> Result<Self> {
        let mut fam = SeparatorFamily::new(trie.nvars(), field);
        let mut partial = PointTrie::new(trie.nvars());
        for p in trie.points() {
            partial.extend(p.clone())?;
            fam.add_point(&partial)?;
        }
        Ok(fam)
    }

    pub fn separators(&self) -> &[Separator] {
        &self.seps
    }

    pub fn get(&self, i: usize) -> &Separator {
        &self.seps[i]
    }

    pub fn len(&self) -> usize {
        self.seps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seps.is_empty()
    }

    /// Accounts for the newest point of `trie`. At every level, the new
    /// separator takes one factor per sibling of the new point's node, using
    /// the sibling's leftmost point; where the new node holds only the new
    /// point, every point under a sibling takes a factor vanishing at it.
    pub fn add_point(&mut self, trie: &PointTrie) -> Result<()> {
        let nn = trie.len();
        if nn != self.seps.len() + 1 {
            return Err(Error::InconsistentState(alloc::format!(
                "trie holds {nn} points, separators cover {}",
                self.seps.len()
            )));
        }
        let new = nn - 1;
        let points = trie.points();
        let pn = &points[new];
        let mut q = Separator {
            owner: new,
            factors: Vec::new(),
        };
        for j in 1..=self.n {
            let u = trie.node_of(new, j);
            let fresh = trie.label(u) == [new];
            for sib in trie.siblings(u) {
                let label = trie.label(sib);
                q.factors.push(factor_in(j, pn, &points[label[0]])?);
                if fresh {
                    for &i in label {
                        let f = factor_in(j, &points[i], pn)?;
                        self.seps[i].factors.push(f);
                    }
                }
            }
        }
        self.seps.push(q);
        Ok(())
    }

    /// Checks `Q_i(P_j) = δ_ij` for all pairs.
    pub fn check_kronecker(&self, points: &[Point]) -> Result<bool> {
        for (i, q) in self.seps.iter().enumerate() {
            for (j, p) in points.iter().enumerate() {
                let v = q.evaluate(p)?;
                if (i == j && !v.is_one()) || (i != j && !v.is_zero()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const Q: FieldSpec = FieldSpec::RATIONALS;

    fn trie(rows: &[&[i64]], field: FieldSpec) -> PointTrie {
        let mut t = PointTrie::new(rows[0].len());
        for r in rows {
            t.extend(Point::from_i64(r, field)).unwrap();
        }
        t
    }

    #[test]
    fn three_point_example() {
        let t = trie(&[&[1, 0], &[0, 1], &[0, 2]], Q);
        let fam = SeparatorFamily::from_trie(&t, Q).unwrap();
        let expanded: Vec<_> = fam.separators().iter().map(|s| s.expand(2, Q).to_string()).collect();
        assert_eq!(expanded, ["x1", "x1*x2 - x2 - 2*x1 + 2", "-x1*x2 + x2 + x1 - 1"]);
        assert!(fam.check_kronecker(t.points()).unwrap());
        assert!(fam.separators().iter().all(Separator::is_squarefree));
    }

    #[test]
    fn factors() {
        let t = trie(&[&[1, 0], &[0, 1], &[0, 2]], Q);
        let f21 = lagrange_factor(1, 0, t.points()).unwrap();
        assert_eq!(f21.to_poly(2).to_string(), "-x1 + 1");
        let f12 = lagrange_factor(0, 1, t.points()).unwrap();
        assert_eq!(f12.to_poly(2).to_string(), "x1");
        assert_eq!(lagrange_factor(1, 1, t.points()), Err(Error::SamePoint));

        let f7 = FieldSpec::prime(7).unwrap();
        let t = trie(&[&[1], &[3]], f7);
        let f = lagrange_factor(0, 1, t.points()).unwrap();
        assert_eq!(f.scale, Scalar::from_i64(3, f7));
        assert_eq!(f.root, Scalar::from_i64(3, f7));
    }

    #[test]
    fn single_point_separator_is_one() {
        let t = trie(&[&[4, 5, 6]], Q);
        let fam = SeparatorFamily::from_trie(&t, Q).unwrap();
        assert_eq!(fam.get(0).expand(3, Q).to_string(), "1");
        assert!(fam.get(0).evaluate(&Point::from_i64(&[9, 9, 9], Q)).unwrap().is_one());
    }
}
