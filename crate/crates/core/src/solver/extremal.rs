use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;

use super::{exact_din, SolveOptions, SolveStatus};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalResult {
    pub n: usize,
    /// Largest exact DIN among the solved digraphs.
    pub max_din: usize,
    /// Every solved digraph attaining `max_din`, in enumeration order.
    #[serde(serialize_with = "serialize_graphs")]
    pub witnesses: Vec<Digraph>,
    pub graphs_checked: usize,
    /// Digraphs whose solve ran out of budget; nonempty means `max_din` is only a lower bound.
    #[serde(serialize_with = "serialize_graphs")]
    pub unresolved: Vec<Digraph>,
    pub nodes_explored: u64,
}

impl ExtremalResult {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }
}

fn serialize_graphs<S: serde::Serializer>(graphs: &[Digraph], s: S) -> std::result::Result<S::Ok, S::Error> {
    let arcs: Vec<Vec<[usize; 2]>> = graphs.iter().map(|g| g.arcs().map(|(t, h)| [t, h]).collect()).collect();
    arcs.serialize(s)
}

/// Arc subsets of the complete DAG on `1..=n`, indexed by bitmask over the
/// pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn labeled_dag(n: usize, mask: u64) -> Digraph {
    let slots = (1..n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
    let arcs = slots.enumerate().filter(|(bit, _)| mask >> bit & 1 == 1).map(|(_, a)| a);
    Digraph::new(n, arcs).expect("slots are valid arcs")
}

/// Maximum exact DIN over every labeled DAG on `n` vertices, `2 <= n <= 5`
/// (or 6 with `allow_six`). Every DAG appears under some topological labeling,
/// so the arc subsets of the complete DAG cover all of them.
pub fn extremal_din(n: usize, allow_six: bool, options: &SolveOptions) -> Result<ExtremalResult> {
    let cap = if allow_six { 6 } else { 5 };
    if !(2..=cap).contains(&n) {
        return Err(Error::InvalidN { n, reason: format!("extremal enumeration supports 2 <= n <= {cap}") });
    }
    let slots = n * (n - 1) / 2;
    let per_graph = SolveOptions { threads: 1, ..*options };
    let solve = |mask: u64| {
        let g = labeled_dag(n, mask);
        let res = exact_din(&g, &per_graph);
        (g, res)
    };
    let masks: Vec<u64> = (0..1u64 << slots).collect();
    let results: Vec<_> = if options.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(options.threads).build().expect("thread pool");
        pool.install(|| masks.par_iter().map(|&m| solve(m)).collect())
    } else {
        masks.iter().map(|&m| solve(m)).collect()
    };

    let mut max_din = 0;
    let mut witnesses = Vec::new();
    let mut unresolved = Vec::new();
    let mut nodes_explored = 0;
    for (g, res) in results {
        nodes_explored += res.nodes_explored;
        match res.status {
            SolveStatus::Optimal { din } if din > max_din => {
                max_din = din;
                witnesses = vec![g];
            }
            SolveStatus::Optimal { din } if din == max_din => witnesses.push(g),
            SolveStatus::Optimal { .. } => {}
            SolveStatus::BudgetExhausted { .. } => unresolved.push(g),
            SolveStatus::Infeasible => unreachable!("labeled DAGs are acyclic"),
        }
    }
    Ok(ExtremalResult { n, max_din, witnesses, graphs_checked: 1 << slots, unresolved, nodes_explored })
}
