//! The point trie: a depth-`n` labeled tree in which the level-`h` node of a
//! point is shared exactly by the points agreeing with it on `x_1..x_h`.
//!
//! Point indices are 0-based. Nodes live in per-level arenas and are never
//! moved, so a [`NodeId`] stays valid while the trie grows.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A point of `k^n`; all coordinates lie in one field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if let Some(first) = coords.first() {
            let field = first.field();
            if coords.iter().any(|c| c.field() != field) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Point(coords))
    }

    pub fn from_i64(coords: &[i64], field: FieldSpec) -> Self {
        Point(coords.iter().map(|&c| Scalar::from_i64(c, field)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Coordinate `a_h` (1-based).
    pub fn coord(&self, h: usize) -> &Scalar {
        &self.0[h - 1]
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn field(&self) -> Option<FieldSpec> {
        self.0.first().map(Scalar::field)
    }
}

/// Returns the first duplicated pair `(later, earlier)`, if any.
pub fn find_duplicate(points: &[Point]) -> Option<(usize, usize)> {
    for (i, p) in points.iter().enumerate() {
        if let Some(j) = points[..i].iter().position(|q| q == p) {
            return Some((i, j));
        }
    }
    None
}

/// Stable handle of a trie node. The root is `level 0, index 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId {
    pub level: usize,
    pub index: usize,
}

#[derive(Debug, Clone)]
struct Node {
    parent: usize,
    value: Option<Scalar>,
    label: Vec<usize>,
    children: Vec<usize>,
}

/// The set `S` of point indices a search is restricted to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Candidates {
    /// Every index below the bound.
    Below(usize),
    /// An explicit set, sorted ascending.
    Set(Vec<usize>),
}

impl Candidates {
    pub fn contains(&self, i: usize) -> bool {
        match self {
            Candidates::Below(b) => i < *b,
            Candidates::Set(s) => s.binary_search(&i).is_ok(),
        }
    }

    /// Smallest member of `label ∩ self`; `label` must be ascending.
    fn min_in(&self, label: &[usize], ops: &mut u64) -> Option<usize> {
        for &i in label {
            *ops += 1;
            if self.contains(i) {
                return Some(i);
            }
            if let Candidates::Below(b) = self {
                if i >= *b {
                    return None;
                }
            }
        }
        None
    }
}

/// Incremental point trie.
#[derive(Debug, Clone)]
pub struct PointTrie {
    n: usize,
    levels: Vec<Vec<Node>>,
    points: Vec<Point>,
    leaves: Vec<usize>,
    ops: u64,
}

impl PointTrie {
    pub fn new(n: usize) -> Self {
        let root = Node {
            parent: 0,
            value: None,
            label: Vec::new(),
            children: Vec::new(),
        };
        let mut levels = vec![Vec::new(); n + 1];
        levels[0].push(root);
        PointTrie {
            n,
            levels,
            points: Vec::new(),
            leaves: Vec::new(),
            ops: 0,
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Elementary steps spent so far (child comparisons, label scans).
    pub fn ops(&self) -> u64 {
        self.ops
    }

    pub fn root(&self) -> NodeId {
        NodeId { level: 0, index: 0 }
    }

    fn node(&self, id: NodeId) -> &Node {
        &self.levels[id.level][id.index]
    }

    pub fn label(&self, id: NodeId) -> &[usize] {
        &self.node(id).label
    }

    /// Value of the edge entering `id`; `None` for the root.
    pub fn edge_value(&self, id: NodeId) -> Option<&Scalar> {
        self.node(id).value.as_ref()
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        (id.level > 0).then(|| NodeId {
            level: id.level - 1,
            index: self.node(id).parent,
        })
    }

    pub fn children(&self, id: NodeId) -> Vec<NodeId> {
        self.node(id)
            .children
            .iter()
            .map(|&index| NodeId {
                level: id.level + 1,
                index,
            })
            .collect()
    }

    /// The other children of `id`'s parent, left to right.
    pub fn siblings(&self, id: NodeId) -> Vec<NodeId> {
        match self.parent(id) {
            None => Vec::new(),
            Some(p) => self.children(p).into_iter().filter(|&c| c != id).collect(),
        }
    }

    /// The level-`h` node on the path of point `i`.
    pub fn node_of(&self, i: usize, h: usize) -> NodeId {
        let mut id = NodeId {
            level: self.n,
            index: self.leaves[i],
        };
        while id.level > h {
            id = self.parent(id).expect("level above root");
        }
        id
    }

    fn find_child(&self, level: usize, parent: usize, value: &Scalar, ops: &mut u64) -> Option<usize> {
        self.levels[level][parent].children.iter().copied().find(|&c| {
            *ops += 1;
            self.levels[level + 1][c].value.as_ref() == Some(value)
        })
    }

    /// Inserts `p` as the next point. Returns the fork level (the first level
    /// whose label becomes `{index}`) and the node at that level. For the first
    /// point the fork level is 1.
    pub fn extend(&mut self, p: Point) -> Result<(usize, NodeId)> {
        if p.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.dim(),
            });
        }
        if let (Some(f), Some(q)) = (p.field(), self.points.first().and_then(Point::field)) {
            if f != q {
                return Err(Error::FieldMismatch);
            }
        }
        let index = self.points.len();
        let mut ops = 0;
        // Walk the shared prefix first so that a duplicate leaves no trace.
        let mut path = Vec::with_capacity(self.n);
        let mut cur = 0;
        for h in 1..=self.n {
            match self.find_child(h - 1, cur, p.coord(h), &mut ops) {
                Some(c) => {
                    path.push(c);
                    cur = c;
                }
                None => break,
            }
        }
        if path.len() == self.n {
            return Err(Error::DuplicatePoint {
                index,
                duplicate_of: self.levels[self.n][cur].label[0],
            });
        }
        self.levels[0][0].label.push(index);
        for (h, &c) in path.iter().enumerate() {
            self.levels[h + 1][c].label.push(index);
            ops += 1;
        }
        let fork = path.len() + 1;
        let mut parent = path.last().copied().unwrap_or(0);
        for h in fork..=self.n {
            let id = self.levels[h].len();
            self.levels[h].push(Node {
                parent,
                value: Some(p.coord(h).clone()),
                label: vec![index],
                children: Vec::new(),
            });
            self.levels[h - 1][parent].children.push(id);
            parent = id;
            ops += 1;
        }
        self.leaves.push(parent);
        self.points.push(p);
        self.ops += ops;
        let fork_node = self.node_of(index, fork);
        Ok((fork, fork_node))
    }

    /// `s` if the label of `v`'s parent meets `set`, else 0.
    pub fn fork(&self, s: usize, v: NodeId, set: &Candidates) -> usize {
        let mut ops = 0;
        self.fork_counted(s, v, set, &mut ops)
    }

    pub(crate) fn fork_counted(&self, s: usize, v: NodeId, set: &Candidates, ops: &mut u64) -> usize {
        match self.parent(v) {
            Some(w) if set.min_in(self.label(w), ops).is_some() => s,
            _ => 0,
        }
    }

    /// The antecedent of the newest point among `set`: over all siblings of
    /// `v`, the largest of the per-sibling minima of `label ∩ set`.
    ///
    /// Each such minimum is the first point of `set` to enter that subtree, so
    /// the result is the latest point of `set` that agrees with the newest one
    /// above `v` and opened its own branch at `v`'s level.
    pub fn sigma_antecedent(&self, v: NodeId, set: &Candidates) -> Result<usize> {
        let mut ops = 0;
        self.sigma_antecedent_counted(v, set, &mut ops)
    }

    pub(crate) fn sigma_antecedent_counted(&self, v: NodeId, set: &Candidates, ops: &mut u64) -> Result<usize> {
        let parent = self.parent(v).ok_or(Error::NoAntecedent)?;
        let mut best = None;
        for &c in &self.node(parent).children {
            let sib = NodeId {
                level: v.level,
                index: c,
            };
            if sib == v {
                continue;
            }
            if let Some(l) = set.min_in(self.label(sib), ops) {
                best = best.max(Some(l));
            }
        }
        best.ok_or(Error::NoAntecedent)
    }

    /// Right-to-left scan stopping at the first sibling label that meets
    /// `set` and returning its smallest member there. Agrees with
    /// [`sigma_antecedent`](Self::sigma_antecedent) when `set` holds every
    /// earlier point, but not after the set has been narrowed.
    pub fn sigma_antecedent_first_hit(&self, v: NodeId, set: &Candidates) -> Result<usize> {
        let mut ops = 0;
        let parent = self.parent(v).ok_or(Error::NoAntecedent)?;
        for &c in self.node(parent).children.iter().rev() {
            let sib = NodeId {
                level: v.level,
                index: c,
            };
            if sib == v {
                continue;
            }
            if let Some(l) = set.min_in(self.label(sib), &mut ops) {
                return Ok(l);
            }
        }
        Err(Error::NoAntecedent)
    }

    /// Witness matrix read off the trie: one more than the deepest level at
    /// which two paths share a node.
    pub fn witness_matrix(&self) -> Vec<Vec<usize>> {
        let nn = self.len();
        let paths: Vec<Vec<usize>> = (0..nn)
            .map(|i| (1..=self.n).map(|h| self.node_of(i, h).index).collect())
            .collect();
        let mut c = vec![vec![0; nn]; nn];
        for i in 0..nn {
            for j in 0..i {
                let shared = paths[i].iter().zip(&paths[j]).take_while(|(a, b)| a == b).count();
                c[i][j] = shared + 1;
                c[j][i] = shared + 1;
            }
        }
        c
    }

    /// Level-order text dump. Each level lists its nodes as
    /// `value{labels}`, grouped by parent with `|`; indices are 1-based.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let root: Vec<String> = self.levels[0][0].label.iter().map(|i| format!("{}", i + 1)).collect();
        let _ = writeln!(out, "0: {{{}}}", root.join(","));
        for h in 1..=self.n {
            let mut groups = Vec::new();
            for parent in &self.levels[h - 1] {
                if parent.children.is_empty() {
                    continue;
                }
                let nodes: Vec<String> = parent
                    .children
                    .iter()
                    .map(|&c| {
                        let node = &self.levels[h][c];
                        let lab: Vec<String> = node.label.iter().map(|i| format!("{}", i + 1)).collect();
                        format!("{}{{{}}}", node.value.as_ref().expect("non-root"), lab.join(","))
                    })
                    .collect();
                groups.push(nodes.join(" "));
            }
            let _ = writeln!(out, "{h}: {}", groups.join(" | "));
        }
        out
    }
}

/// Witness matrix by direct coordinate comparison.
pub fn witness_matrix(points: &[Point]) -> Result<Vec<Vec<usize>>> {
    if let Some((index, duplicate_of)) = find_duplicate(points) {
        return Err(Error::DuplicatePoint { index, duplicate_of });
    }
    let nn = points.len();
    let mut c = vec![vec![0; nn]; nn];
    for i in 0..nn {
        for j in 0..nn {
            if i != j {
                let h = points[i]
                    .coords()
                    .iter()
                    .zip(points[j].coords())
                    .position(|(a, b)| a != b)
                    .expect("distinct points differ somewhere");
                c[i][j] = h + 1;
            }
        }
    }
    Ok(c)
}
