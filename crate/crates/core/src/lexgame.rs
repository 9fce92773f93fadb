//! The iterative Lex Game: point trie, Bar Code and e-list matrix `M`
//! updated together, one point at a time.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::barcode::{BarCode, EList};
use crate::error::{Error, Result};
use crate::monomial::Term;
use crate::scalar::FieldSpec;
use crate::trie::{Candidates, Point, PointTrie};

/// The matrix `M` (row `i` is the e-list of `t_i`, columns `[x_n, ..., x_1]`)
/// together with the correspondence `i -> t_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscalierTable {
    n: usize,
    rows: Vec<EList>,
    terms: Vec<Term>,
    index: BTreeMap<Term, usize>,
    factors: Vec<Option<(usize, usize)>>,
    writes: u64,
}

impl EscalierTable {
    fn new(n: usize) -> Self {
        EscalierTable {
            n,
            rows: Vec::new(),
            terms: Vec::new(),
            index: BTreeMap::new(),
            factors: Vec::new(),
            writes: 0,
        }
    }

    pub fn rows(&self) -> &[EList] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.rows[i]
    }

    /// `t_1, ..., t_N` in point order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> &Term {
        &self.terms[i]
    }

    /// Position of `t` in the correspondence, if it belongs to the escalier.
    pub fn index_of(&self, t: &Term) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// `(s, l)` with `t_i = x_s * t_l`; `None` for `t_1 = 1`.
    pub fn factor(&self, i: usize) -> Option<(usize, usize)> {
        self.factors[i]
    }

    /// Number of cell assignments made to `M` so far.
    pub fn writes(&self) -> u64 {
        self.writes
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The escalier sorted lex.
    pub fn escalier(&self) -> Vec<Term> {
        self.index.keys().cloned().collect()
    }

    fn push(&mut self, row: EList) -> Result<()> {
        let t = Term::from_elist(&row);
        let i = self.rows.len();
        if let Some(&j) = self.index.get(&t) {
            return Err(Error::InconsistentState(format!(
                "term {t} assigned to points {} and {}",
                j + 1,
                i + 1
            )));
        }
        let factor = match t.max_var() {
            None => None,
            Some(_) => {
                let var = (1..=self.n)
                    .rev()
                    .find(|&v| t.deg(v) > 0)
                    .expect("non-unit term");
                let below = t.div_var(var).expect("variable divides term");
                let l = *self.index.get(&below).ok_or_else(|| {
                    Error::InconsistentState(format!("{below} missing below {t}"))
                })?;
                Some((var, l))
            }
        };
        self.index.insert(t.clone(), i);
        self.terms.push(t);
        self.rows.push(row);
        self.factors.push(factor);
        Ok(())
    }

    fn set_factor(&mut self, i: usize, var: usize) -> Result<()> {
        let t = &self.terms[i];
        let below = t
            .div_var(var)
            .ok_or_else(|| Error::InconsistentState(format!("x{var} does not divide {t}")))?;
        let l = *self
            .index
            .get(&below)
            .ok_or_else(|| Error::InconsistentState(format!("{below} missing below {t}")))?;
        self.factors[i] = Some((var, l));
        Ok(())
    }
}

/// What one call of [`LexGame::add_point`] did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTrace {
    /// Level at which the new path leaves the trie.
    pub fork: usize,
    /// `(s, l)` per visited fork: level and 0-based antecedent.
    pub pairs: Vec<(usize, usize)>,
    /// Candidate sets read off the Bar Code after each case-b step.
    pub sets: Vec<Vec<usize>>,
}

/// Trie, Bar Code and `M` for the points inserted so far.
#[derive(Debug, Clone)]
pub struct LexGame {
    n: usize,
    field: FieldSpec,
    trie: PointTrie,
    barcode: BarCode,
    table: EscalierTable,
    trace: Vec<StepTrace>,
    trie_ops: u64,
    bar_ops: u64,
}

struct RowWriter {
    cells: Vec<Option<u32>>,
    writes: u64,
}

impl RowWriter {
    fn set(&mut self, col: usize, value: u32) -> Result<()> {
        if self.cells[col].is_some() {
            return Err(Error::InconsistentState(format!("cell {col} of M written twice")));
        }
        self.cells[col] = Some(value);
        self.writes += 1;
        Ok(())
    }

    fn finish(self) -> Result<EList> {
        self.cells
            .into_iter()
            .map(|c| c.ok_or_else(|| Error::InconsistentState("row of M left incomplete".into())))
            .collect()
    }
}

impl LexGame {
    pub fn new(n: usize, field: FieldSpec) -> Self {
        assert!(n >= 1, "at least one variable");
        LexGame {
            n,
            field,
            trie: PointTrie::new(n),
            barcode: BarCode::new(n),
            table: EscalierTable::new(n),
            trace: Vec::new(),
            trie_ops: 0,
            bar_ops: 0,
        }
    }

    /// Runs the game on `points` in order.
    pub fn full_run(n: usize, field: FieldSpec, points: &[Point]) -> Result<Self> {
        let mut g = LexGame::new(n, field);
        for p in points {
            g.add_point(p.clone())?;
        }
        Ok(g)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        self.trie.points()
    }

    pub fn trie(&self) -> &PointTrie {
        &self.trie
    }

    pub fn barcode(&self) -> &BarCode {
        &self.barcode
    }

    pub fn table(&self) -> &EscalierTable {
        &self.table
    }

    pub fn trace(&self) -> &[StepTrace] {
        &self.trace
    }

    /// Work spent in the trie: insertions, fork tests, antecedent scans.
    pub fn trie_ops(&self) -> u64 {
        self.trie.ops() + self.trie_ops
    }

    /// Work spent in Bar Code lookups and insertions.
    pub fn bar_ops(&self) -> u64 {
        self.barcode.ops() + self.bar_ops
    }

    fn check_point(&self, p: &Point) -> Result<()> {
        if p.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.dim(),
            });
        }
        match p.field() {
            Some(f) if f != self.field => Err(Error::FieldMismatch),
            _ => Ok(()),
        }
    }

    /// Inserts `p` and returns its term. Earlier rows of `M` are untouched.
    pub fn add_point(&mut self, p: Point) -> Result<Term> {
        self.check_point(&p)?;
        let n = self.n;
        let i = self.len();
        let (fork, mu) = self.trie.extend(p)?;
        let mut row = RowWriter {
            cells: vec![None; n],
            writes: 0,
        };
        let mut step = StepTrace {
            fork,
            pairs: Vec::new(),
            sets: Vec::new(),
        };
        let mut last_s = 0;
        if i == 0 {
            for c in 0..n {
                row.set(c, 0)?;
            }
            self.barcode.insert_new_block(&[0], 0)?;
        } else {
            let mut trie_ops = 0;
            let mut bar_ops = 0;
            for c in 0..n - fork {
                row.set(c, 0)?;
            }
            let mut set = Candidates::Below(i);
            let mut s = fork;
            let mut v = mu;
            let mut f = fork;
            let mut placed = false;
            while s > 0 {
                if f == s {
                    let l = self.trie.sigma_antecedent_counted(v, &set, &mut trie_ops)?;
                    step.pairs.push((s, l));
                    last_s = s;
                    let row_l = self.table.rows[l].clone();
                    let col = n - s;
                    match self.barcode.next_bar_counted(s, &row_l, &mut bar_ops) {
                        None => {
                            let mut prefix = row_l[..=col].to_vec();
                            prefix[col] += 1;
                            let written: Vec<u32> = row.cells[..col].iter().map(|c| c.unwrap_or(u32::MAX)).collect();
                            if written != row_l[..col] {
                                return Err(Error::InconsistentState(format!(
                                    "point {} does not lie under the bars of its antecedent",
                                    i + 1
                                )));
                            }
                            self.barcode.insert_new_block(&prefix, i)?;
                            row.set(col, row_l[col] + 1)?;
                            for c in col + 1..n {
                                row.set(c, 0)?;
                            }
                            placed = true;
                            s = 0;
                        }
                        Some(prefix) => {
                            if s == 1 {
                                return Err(Error::InconsistentState(format!(
                                    "point {} lands on an occupied 1-bar",
                                    i + 1
                                )));
                            }
                            row.set(col, row_l[col] + 1)?;
                            let mut over = self.barcode.points_over_counted(&prefix, &mut bar_ops)?;
                            over.sort_unstable();
                            step.sets.push(over.clone());
                            set = Candidates::Set(over);
                            s -= 1;
                            v = self.trie.parent(v).expect("below root");
                            f = self.trie.fork_counted(s, v, &set, &mut trie_ops);
                        }
                    }
                } else {
                    row.set(n - s, 0)?;
                    s -= 1;
                    v = self.trie.parent(v).expect("below root");
                    f = self.trie.fork_counted(s, v, &set, &mut trie_ops);
                }
            }
            if !placed {
                return Err(Error::InconsistentState(format!("point {} was never placed", i + 1)));
            }
            self.trie_ops += trie_ops;
            self.bar_ops += bar_ops;
        }
        let writes = row.writes;
        let e = row.finish()?;
        self.table.push(e)?;
        if last_s > 0 {
            self.table.set_factor(i, last_s)?;
        }
        self.table.writes += writes;
        self.trace.push(step);
        Ok(self.table.terms[i].clone())
    }

    /// Rebuilds a game from its points and the rows of `M`, without replaying
    /// the algorithm. The rows must form an order ideal assigned one per point.
    pub fn from_parts(n: usize, field: FieldSpec, points: Vec<Point>, rows: Vec<EList>) -> Result<Self> {
        if points.len() != rows.len() {
            return Err(Error::DimensionMismatch {
                expected: points.len(),
                found: rows.len(),
            });
        }
        let mut g = LexGame::new(n, field);
        for p in points {
            g.check_point(&p)?;
            g.trie.extend(p)?;
        }
        g.barcode = BarCode::from_elists(n, &rows)?;
        let terms: Vec<Term> = rows.iter().map(|r| Term::from_elist(r)).collect();
        if !crate::monomial::is_order_ideal(&terms) {
            return Err(Error::NotOrderIdeal);
        }
        for r in rows {
            g.table.push(r)?;
        }
        g.table.writes = (g.len() * n) as u64;
        g.trace = vec![
            StepTrace {
                fork: 0,
                pairs: Vec::new(),
                sets: Vec::new(),
            };
            g.len()
        ];
        Ok(g)
    }
}

/// `M[N][n-s+1] = M[l][n-s+1] + 1` with zeros to its right; `row` must hold
/// the columns left of the `s` column already.
pub fn update_row(row: &mut [u32], s: usize, row_l: &[u32]) {
    let n = row.len();
    let col = n - s;
    row[col] = row_l[col] + 1;
    for c in &mut row[col + 1..] {
        *c = 0;
    }
}
