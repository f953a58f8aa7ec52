//! Digraph model, acyclicity, longest-path levels and left-to-right orders.
//!
//! Vertices are labeled `1..=n` throughout the public API.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A directed graph on vertices `1..=n` without self-loops or parallel arcs.
///
/// Acyclicity is not enforced; see [`Digraph::is_acyclic`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

impl Digraph {
    /// Builds a digraph, deduplicating arcs.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidN { n, reason: "a digraph needs at least one vertex".into() });
        }
        let mut set = BTreeSet::new();
        for (tail, head) in arcs {
            if tail == 0 || head == 0 || tail > n || head > n {
                return Err(Error::EndpointOutOfRange { tail, head, n });
            }
            if tail == head {
                return Err(Error::SelfLoop { vertex: tail });
            }
            set.insert((tail, head));
        }
        Ok(Self::from_checked(n, set))
    }

    fn from_checked(n: usize, arcs: BTreeSet<(usize, usize)>) -> Self {
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        // BTreeSet iteration keeps both adjacency lists sorted.
        for &(t, h) in &arcs {
            succ[t - 1].push(h);
        }
        for &(t, h) in &arcs {
            pred[h - 1].push(t);
        }
        for p in &mut pred {
            p.sort_unstable();
        }
        Self { n, arcs, succ, pred }
    }

    /// Edgeless digraph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.arcs.contains(&(tail, head))
    }

    /// Either `(u, v)` or `(v, u)` is an arc.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.succ[v - 1]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.pred[v - 1]
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Parses the text edge-list format: the first content line is `n`, every
    /// following content line is `tail head`. Lines starting with `#` are
    /// comments and blank lines are skipped.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut arcs = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let parse = |tok: &str| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected a non-negative integer, found {tok:?}"),
                })
            };
            match n {
                None => {
                    let value = parse(fields.next().unwrap_or_default())?;
                    if fields.next().is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "header line must hold only the vertex count".into(),
                        });
                    }
                    if value == 0 {
                        return Err(Error::Parse { line: line_no, message: "vertex count must be positive".into() });
                    }
                    n = Some(value);
                }
                Some(count) => {
                    let (Some(t), Some(h), None) = (fields.next(), fields.next(), fields.next()) else {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "expected exactly two fields \"tail head\"".into(),
                        });
                    };
                    let (tail, head) = (parse(t)?, parse(h)?);
                    if tail == 0 || head == 0 || tail > count || head > count {
                        return Err(Error::EndpointOutOfRange { tail, head, n: count });
                    }
                    if tail == head {
                        return Err(Error::SelfLoop { vertex: tail });
                    }
                    arcs.insert((tail, head));
                }
            }
        }
        let n = n.ok_or(Error::Parse { line: 1, message: "missing vertex count".into() })?;
        Ok(Self::from_checked(n, arcs))
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (t, h) in self.arcs() {
            let _ = writeln!(out, "{t} {h}");
        }
        out
    }

    /// Parses `{"n": int, "arcs": [[t, h], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text)?;
        Self::new(raw.n, raw.arcs.into_iter().map(|[t, h]| (t, h)))
    }

    pub fn to_json(&self) -> String {
        let raw = GraphJson { n: self.n, arcs: self.arcs().map(|(t, h)| [t, h]).collect() };
        serde_json::to_string(&raw).expect("graph json serializes")
    }

    /// Accepts either native format, choosing JSON when the content starts with `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_edge_list(text)
        }
    }

    /// Kahn's algorithm; returns `None` when a directed cycle exists.
    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = self.pred.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = self.vertices().filter(|&v| indeg[v - 1] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in self.out_neighbors(v) {
                indeg[w - 1] -= 1;
                if indeg[w - 1] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Longest-path level decomposition, linear in `n + |arcs|`.
    pub fn longest_path_levels(&self) -> Result<LevelDecomposition> {
        let order = self.topological_order().ok_or(Error::Cyclic)?;
        let mut gamma = vec![0usize; self.n];
        for &v in &order {
            for &w in self.out_neighbors(v) {
                gamma[w - 1] = gamma[w - 1].max(gamma[v - 1] + 1);
            }
        }
        let top = gamma.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); top + 1];
        for v in self.vertices() {
            levels[gamma[v - 1]].push(v);
        }
        Ok(LevelDecomposition { gamma, levels })
    }

    /// Topological order sorted by (level, label).
    pub fn left_to_right_order(&self) -> Result<VertexOrder> {
        let levels = self.longest_path_levels()?;
        Ok(VertexOrder(levels.levels.concat()))
    }

    /// Subgraph induced by `subset`, relabeled `1..=|subset|` in ascending label order.
    ///
    /// The second component lists the original label of each new vertex.
    pub fn induced_subgraph(&self, subset: &BTreeSet<usize>) -> Result<(Digraph, Vec<usize>)> {
        if subset.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&bad) = subset.iter().find(|&&v| v == 0 || v > self.n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let kept: Vec<usize> = subset.iter().copied().collect();
        let mut new_label = vec![0usize; self.n + 1];
        for (i, &v) in kept.iter().enumerate() {
            new_label[v] = i + 1;
        }
        let arcs = self
            .arcs()
            .filter(|&(t, h)| new_label[t] != 0 && new_label[h] != 0)
            .map(|(t, h)| (new_label[t], new_label[h]))
            .collect();
        Ok((Self::from_checked(kept.len(), arcs), kept))
    }

    /// Relabels vertices so that the vertex at position `i` of `order` becomes `i + 1`.
    pub fn relabel_by(&self, order: &VertexOrder) -> Digraph {
        let position = order.positions(self.n);
        let arcs = self.arcs().map(|(t, h)| (position[t], position[h])).collect();
        Self::from_checked(self.n, arcs)
    }

    /// True if there is a vertex triple with all of `(i,j)`, `(j,k)`, `(i,k)`.
    pub fn has_directed_triangle(&self) -> bool {
        self.arcs().any(|(i, j)| self.out_neighbors(j).iter().any(|&k| self.has_arc(i, k)))
    }

    /// True if the vertices can be visited by one directed path. Exponential; small n only.
    pub fn has_hamiltonian_path(&self) -> bool {
        if self.is_acyclic() {
            // A DAG has a Hamiltonian path iff consecutive vertices of any
            // topological order are joined by arcs.
            let order = self.topological_order().expect("acyclic");
            return order.windows(2).all(|w| self.has_arc(w[0], w[1]));
        }
        let n = self.n;
        assert!(n <= 20, "Hamiltonian path search on a cyclic digraph is limited to n <= 20");
        let full = (1usize << n) - 1;
        let mut reach = vec![0u32; 1 << n];
        for v in 0..n {
            reach[1 << v] |= 1 << v;
        }
        for mask in 1..=full {
            let ends = reach[mask];
            if ends == 0 {
                continue;
            }
            for v in 0..n {
                if ends & (1 << v) == 0 {
                    continue;
                }
                for &w in &self.succ[v] {
                    let w = w - 1;
                    if mask & (1 << w) == 0 {
                        reach[mask | (1 << w)] |= 1 << w;
                    }
                }
            }
        }
        reach[full] != 0
    }
}

/// A permutation of `1..=n` in which every arc points forward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder(pub Vec<usize>);

impl VertexOrder {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `positions(n)[v]` is the 1-based position of vertex `v`.
    pub fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![0usize; n + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i + 1;
        }
        pos
    }

    pub fn is_topological_for(&self, graph: &Digraph) -> bool {
        if self.0.len() != graph.n() {
            return false;
        }
        let pos = self.positions(graph.n());
        if pos[1..].contains(&0) {
            return false;
        }
        graph.arcs().all(|(t, h)| pos[t] < pos[h])
    }
}

/// Longest-path levels: `gamma[v - 1]` is the arc length of the longest path ending at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub gamma: Vec<usize>,
    pub levels: Vec<Vec<usize>>,
}

impl LevelDecomposition {
    pub fn gamma_of(&self, v: usize) -> usize {
        self.gamma[v - 1]
    }

    /// Index of the last level.
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }
}
