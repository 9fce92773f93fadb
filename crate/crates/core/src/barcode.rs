//! Bar Codes: rows of bars stacked over one another, stored as nested lists.
//!
//! A Bar Code over `n` variables is a list of `n`-bars; an `i`-bar is a list
//! of the `(i-1)`-bars lying over it, and a 1-bar is a list of point indices.
//! A bar is addressed by an e-list prefix `(b_n, ..., b_s)` of child
//! positions, so handles survive insertions to their right.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::monomial::Term;

/// One bar. Rows above 1 hold `Bars`; 1-bars hold `Points`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bar {
    Bars(Vec<Bar>),
    Points(Vec<usize>),
}

/// Entries `(b_n, ..., b_1)` locating a 1-bar; equal to the exponents of its
/// term read from `x_n` down to `x_1`.
pub type EList = Vec<u32>;

#[derive(Debug, Clone)]
pub struct BarCode {
    n: usize,
    bars: Vec<Bar>,
    ops: u64,
}

impl PartialEq for BarCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bars == other.bars
    }
}

impl Eq for BarCode {}

/// Term whose exponents are the e-list entries.
pub fn term_of_elist(e: &[u32]) -> Term {
    Term::from_elist(e)
}

impl Bar {
    fn leaves<'a>(&'a self, prefix: &mut Vec<u32>, out: &mut Vec<(EList, &'a [usize])>) {
        match self {
            Bar::Points(p) => out.push((prefix.clone(), p)),
            Bar::Bars(children) => {
                for (k, c) in children.iter().enumerate() {
                    prefix.push(k as u32);
                    c.leaves(prefix, out);
                    prefix.pop();
                }
            }
        }
    }

    fn flatten(&self, out: &mut Vec<usize>, ops: &mut u64) {
        *ops += 1;
        match self {
            Bar::Points(p) => out.extend_from_slice(p),
            Bar::Bars(children) => children.iter().for_each(|c| c.flatten(out, ops)),
        }
    }

    fn leaf_count(&self) -> usize {
        match self {
            Bar::Points(_) => 1,
            Bar::Bars(c) => c.iter().map(Bar::leaf_count).sum(),
        }
    }

    /// A column of bars of length one down to a 1-bar holding `index`.
    fn column(rows: usize, index: usize) -> Bar {
        let mut bar = Bar::Points(vec![index]);
        for _ in 1..rows {
            bar = Bar::Bars(vec![bar]);
        }
        bar
    }

    fn bracket(&self, out: &mut String) {
        out.push('[');
        match self {
            Bar::Points(p) => {
                let items: Vec<String> = p.iter().map(|i| format!("{}", i + 1)).collect();
                out.push_str(&items.join(","));
            }
            Bar::Bars(children) => {
                for (k, c) in children.iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    c.bracket(out);
                }
            }
        }
        out.push(']');
    }

    fn check(&self, row: usize, seen: &mut BTreeSet<usize>) -> Result<()> {
        match (self, row) {
            (Bar::Points(p), 1) if !p.is_empty() => {
                for &i in p {
                    if !seen.insert(i) {
                        return Err(Error::InconsistentState(format!("point {} labels two 1-bars", i + 1)));
                    }
                }
                Ok(())
            }
            (Bar::Bars(c), r) if r > 1 && !c.is_empty() => c.iter().try_for_each(|b| b.check(r - 1, seen)),
            _ => Err(Error::InconsistentState(format!("malformed bar at row {row}"))),
        }
    }
}

impl BarCode {
    pub fn new(n: usize) -> Self {
        BarCode {
            n,
            bars: Vec::new(),
            ops: 0,
        }
    }

    /// Builds a Bar Code from the nested bars of row `n`, validating shape.
    pub fn from_bars(n: usize, bars: Vec<Bar>) -> Result<Self> {
        let b = BarCode { n, bars, ops: 0 };
        b.validate()?;
        Ok(b)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    /// Elementary steps spent in lookups and insertions.
    pub fn ops(&self) -> u64 {
        self.ops
    }

    /// Structural check: every branch has `n` rows, no bar is empty, and no
    /// point labels two 1-bars.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        if self.n == 0 {
            return Err(Error::InconsistentState(String::from("zero rows")));
        }
        self.bars.iter().try_for_each(|b| b.check(self.n, &mut seen))
    }

    /// The bar addressed by an e-list prefix `(b_n, ..., b_s)`.
    pub fn get(&self, prefix: &[u32]) -> Option<&Bar> {
        let mut ops = 0;
        self.get_counted(prefix, &mut ops)
    }

    fn get_counted(&self, prefix: &[u32], ops: &mut u64) -> Option<&Bar> {
        let (first, rest) = prefix.split_first()?;
        let mut bar = self.bars.get(*first as usize)?;
        for &k in rest {
            *ops += 1;
            bar = match bar {
                Bar::Bars(c) => c.get(k as usize)?,
                Bar::Points(_) => return None,
            };
        }
        Some(bar)
    }

    /// 1-bars left to right with their e-lists.
    pub fn leaves(&self) -> Vec<(EList, &[usize])> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.n);
        for (k, b) in self.bars.iter().enumerate() {
            prefix.push(k as u32);
            b.leaves(&mut prefix, &mut out);
            prefix.pop();
        }
        out
    }

    /// Terms labeling the 1-bars, left to right.
    pub fn reconstruct_terms(&self) -> Vec<Term> {
        self.leaves().iter().map(|(e, _)| term_of_elist(e)).collect()
    }

    /// Every 1-bar with `b_k > 0` has a companion 1-bar with `b_k` lowered by one.
    pub fn is_admissible(&self) -> bool {
        let elists: BTreeSet<EList> = self.leaves().into_iter().map(|(e, _)| e).collect();
        elists.iter().all(|e| {
            (0..e.len()).all(|k| {
                if e[k] == 0 {
                    return true;
                }
                let mut d = e.clone();
                d[k] -= 1;
                elists.contains(&d)
            })
        })
    }

    /// The star set, sorted lex: for every `i`-bar that is the last one over
    /// its `(i+1)`-bar (or the last `n`-bar), `x_i * pi^i(t)` for a term `t`
    /// over it.
    pub fn star_set(&self) -> Result<Vec<Term>> {
        if !self.is_admissible() {
            return Err(Error::NotAdmissible);
        }
        let mut out = BTreeSet::new();
        let mut stack: Vec<(Vec<u32>, &[Bar])> = vec![(Vec::new(), &self.bars)];
        while let Some((prefix, siblings)) = stack.pop() {
            let row = self.n - prefix.len();
            if let Some(last) = siblings.len().checked_sub(1) {
                let mut t = prefix.clone();
                t.push(last as u32);
                t.resize(self.n, 0);
                let e = Term::from_elist(&t).mul_var(row);
                out.insert(e);
            }
            for (k, b) in siblings.iter().enumerate() {
                if let Bar::Bars(c) = b {
                    let mut p = prefix.clone();
                    p.push(k as u32);
                    stack.push((p, c));
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// The `s`-bar right after the one holding point `l`'s 1-bar, under the
    /// same `(s+1)`-bar. `row_l` is the e-list of `t_l`. Returns its prefix.
    pub fn next_bar(&self, s: usize, row_l: &[u32]) -> Option<Vec<u32>> {
        let mut ops = 0;
        self.next_bar_counted(s, row_l, &mut ops)
    }

    pub(crate) fn next_bar_counted(&self, s: usize, row_l: &[u32], ops: &mut u64) -> Option<Vec<u32>> {
        let mut prefix = row_l[..self.n - s + 1].to_vec();
        *prefix.last_mut()? += 1;
        self.get_counted(&prefix, ops).map(|_| prefix)
    }

    /// Point indices over the bar at `prefix`, left to right.
    pub fn points_over(&self, prefix: &[u32]) -> Result<Vec<usize>> {
        let mut ops = 0;
        self.points_over_counted(prefix, &mut ops)
    }

    pub(crate) fn points_over_counted(&self, prefix: &[u32], ops: &mut u64) -> Result<Vec<usize>> {
        let bar = self.get_counted(prefix, ops).ok_or(Error::InvalidPosition)?;
        let mut out = Vec::new();
        bar.flatten(&mut out, ops);
        Ok(out)
    }

    /// Appends a fresh column of length-one bars at `prefix` (the position
    /// right of the last bar under its parent), labeled by `index`. Returns the
    /// e-list of the new 1-bar.
    pub fn insert_new_block(&mut self, prefix: &[u32], index: usize) -> Result<EList> {
        if prefix.is_empty() || prefix.len() > self.n {
            return Err(Error::InvalidPosition);
        }
        let (last, parent) = prefix.split_last().expect("non-empty prefix");
        let rows = self.n - prefix.len() + 1;
        let mut ops = 0;
        let siblings: &mut Vec<Bar> = if parent.is_empty() {
            &mut self.bars
        } else {
            let mut bar = self.bars.get_mut(parent[0] as usize).ok_or(Error::InvalidPosition)?;
            for &k in &parent[1..] {
                ops += 1;
                bar = match bar {
                    Bar::Bars(c) => c.get_mut(k as usize).ok_or(Error::InvalidPosition)?,
                    Bar::Points(_) => return Err(Error::InvalidPosition),
                };
            }
            match bar {
                Bar::Bars(c) => c,
                Bar::Points(_) => return Err(Error::InvalidPosition),
            }
        };
        if *last as usize != siblings.len() {
            return Err(Error::InvalidPosition);
        }
        siblings.push(Bar::column(rows, index));
        self.ops += ops + rows as u64;
        let mut e = prefix.to_vec();
        e.resize(self.n, 0);
        Ok(e)
    }

    /// Bracket notation with 1-based point indices, e.g. `[[[1],[3]],[[2]]]`.
    pub fn to_bracket_string(&self) -> String {
        let mut out = String::from("[");
        for (k, b) in self.bars.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            b.bracket(&mut out);
        }
        out.push(']');
        out
    }

    /// Rows of bars as text: terms on top, then row 1 up to row `n`.
    pub fn to_text(&self) -> String {
        let leaves = self.leaves();
        let labels: Vec<String> = leaves.iter().map(|(e, _)| term_of_elist(e).render()).collect();
        let width = labels.iter().map(String::len).max().unwrap_or(1).max(3) + 1;
        let mut out = String::new();
        let _ = write!(out, "   ");
        for l in &labels {
            let _ = write!(out, "{l:<width$}");
        }
        out = String::from(out.trim_end());
        out.push('\n');
        for row in 1..=self.n {
            let _ = write!(out, "{row}: ");
            let mut line = String::new();
            for (k, span) in self.row_spans(row).into_iter().enumerate() {
                if k > 0 {
                    line.push(' ');
                }
                for _ in 0..span * width - 1 {
                    line.push('-');
                }
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    /// Number of 1-bars under each bar of `row`, left to right.
    pub fn row_spans(&self, row: usize) -> Vec<usize> {
        fn walk(b: &Bar, depth: usize, target: usize, out: &mut Vec<usize>) {
            if depth == target {
                out.push(b.leaf_count());
            } else if let Bar::Bars(c) = b {
                c.iter().for_each(|x| walk(x, depth - 1, target, out));
            }
        }
        let mut out = Vec::new();
        for b in &self.bars {
            walk(b, self.n, row, &mut out);
        }
        out
    }

    /// Standalone SVG drawing of the rows with term labels.
    pub fn to_svg(&self) -> String {
        const CELL: usize = 60;
        const GAP: usize = 8;
        const ROW_H: usize = 30;
        let leaves = self.leaves();
        let width = leaves.len().max(1) * CELL + 40;
        let height = (self.n + 1) * ROW_H + 20;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" font-family=\"sans-serif\" font-size=\"12\">"
        );
        for (k, (e, _)) in leaves.iter().enumerate() {
            let x = 30 + k * CELL + CELL / 2;
            let _ = writeln!(
                out,
                "  <text x=\"{x}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
                ROW_H - 8,
                term_of_elist(e).render()
            );
        }
        for row in 1..=self.n {
            let y = row * ROW_H + 10;
            let _ = writeln!(out, "  <text x=\"4\" y=\"{}\">{row}</text>", y + 4);
            let mut start = 0;
            for span in self.row_spans(row) {
                let x1 = 30 + start * CELL;
                let x2 = 30 + (start + span) * CELL - GAP;
                let _ = writeln!(
                    out,
                    "  <line x1=\"{x1}\" y1=\"{y}\" x2=\"{x2}\" y2=\"{y}\" stroke=\"black\" stroke-width=\"2\"/>"
                );
                start += span;
            }
        }
        out.push_str("</svg>\n");
        out
    }

    /// Builds the Bar Code whose 1-bars carry the given e-lists, one point
    /// each (`elists[i]` belongs to point `i`). The e-lists must form an
    /// admissible set.
    pub fn from_elists(n: usize, elists: &[EList]) -> Result<Self> {
        let mut order: Vec<usize> = (0..elists.len()).collect();
        if let Some(e) = elists.iter().find(|e| e.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: e.len() });
        }
        order.sort_by(|&a, &b| elists[a].cmp(&elists[b]));
        let mut b = BarCode::new(n);
        for &i in &order {
            let e = &elists[i];
            // Longest prefix already present decides where the new column goes.
            let mut depth = 0;
            while depth < n && b.get(&e[..=depth]).is_some() {
                depth += 1;
            }
            if depth == n {
                return Err(Error::InvalidPosition);
            }
            b.insert_new_block(&e[..=depth], i)?;
            if e[depth + 1..].iter().any(|&x| x != 0) {
                return Err(Error::NotAdmissible);
            }
        }
        b.ops = 0;
        Ok(b)
    }
}
