//! Exact directed intersection numbers by complete search.
//!
//! [`exact_din`] deepens the palette size `k = 1, 2, ...` and returns the first
//! feasible `k`; exhaustion at `k - 1` is the optimality certificate.

mod extremal;
mod search;

pub use extremal::{extremal_din, ExtremalResult};

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::construct::{inductive_construction, pairing_construction};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::representation::{ColorSet, Representation};

use search::{Counter, Instance, Outcome, MAX_BITS};

/// Limits on a solve. Both fields are positive; `max_palette` is at most 64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolveBudget {
    pub max_nodes: u64,
    pub max_palette: usize,
}

impl Default for SolveBudget {
    fn default() -> Self {
        Self { max_nodes: 100_000_000, max_palette: 64 }
    }
}

impl SolveBudget {
    pub fn new(max_nodes: u64, max_palette: usize) -> Result<Self> {
        if max_nodes == 0 || max_palette == 0 {
            return Err(Error::Domain("solve budget limits must be positive".into()));
        }
        if max_palette > MAX_BITS {
            return Err(Error::Domain(format!("max palette is capped at {MAX_BITS}")));
        }
        Ok(Self { max_nodes, max_palette })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: SolveBudget,
    /// Worker threads for the size-function fan-out; 1 keeps the search sequential.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { budget: SolveBudget::default(), threads: 1 }
    }
}

impl SolveOptions {
    pub fn with_budget(budget: SolveBudget) -> Self {
        Self { budget, threads: 1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveStatus {
    Optimal { din: usize },
    Infeasible,
    BudgetExhausted { best_upper: Option<usize> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Canonicalized optimal representation, or the best constructed one when
    /// the budget ran out.
    pub witness: Option<Representation>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SolveResult {
    pub fn din(&self) -> Option<usize> {
        match self.status {
            SolveStatus::Optimal { din } => Some(din),
            _ => None,
        }
    }
}

/// Outcome of the decision problem "is there a representation with at most `k` colors?".
#[derive(Debug, Clone, PartialEq)]
pub enum Feasibility {
    Feasible(Representation),
    Infeasible,
    Unknown,
}

/// Instance prepared in left-to-right position order.
struct Prepared {
    instance: Instance,
    order: Vec<usize>,
}

fn prepare(graph: &Digraph) -> Result<Prepared> {
    let order = graph.left_to_right_order()?;
    let positional = graph.relabel_by(&order);
    Ok(Prepared { instance: Instance::new(&positional), order: order.0 })
}

fn to_representation(masks: &[u64], order: &[usize]) -> Representation {
    let mut phi = vec![ColorSet::new(); masks.len()];
    for (pos, &mask) in masks.iter().enumerate() {
        phi[order[pos] - 1] = (0..64).filter(|c| mask >> c & 1 == 1).collect();
    }
    Representation::new(phi).expect("search assigns nonempty sets").canonicalize()
}

fn decide(prepared: &Prepared, k: usize, counter: &Counter, threads: usize) -> Feasibility {
    match search::search(&prepared.instance, k, counter, threads) {
        Outcome::Found(masks) => Feasibility::Feasible(to_representation(&masks, &prepared.order)),
        Outcome::Exhausted => Feasibility::Unknown,
        Outcome::None => Feasibility::Infeasible,
    }
}

/// Decides whether `graph` has a representation with at most `k` colors.
pub fn feasible_with_palette(graph: &Digraph, k: usize, options: &SolveOptions) -> Result<Feasibility> {
    if k == 0 {
        return Err(Error::Domain("palette size must be at least 1".into()));
    }
    if !graph.is_acyclic() {
        return Err(Error::Cyclic);
    }
    if k > MAX_BITS || graph.n() > MAX_BITS {
        return Ok(Feasibility::Unknown);
    }
    let prepared = prepare(graph)?;
    let counter = Counter::new(options.budget.max_nodes);
    Ok(decide(&prepared, k, &counter, options.threads))
}

/// Smallest palette among the general constructions, used as a fallback upper bound.
fn constructive_upper(graph: &Digraph) -> Option<Representation> {
    [pairing_construction(graph), inductive_construction(graph)]
        .into_iter()
        .filter_map(Result::ok)
        .min_by_key(Representation::palette_size)
}

pub fn exact_din(graph: &Digraph, options: &SolveOptions) -> SolveResult {
    let start = Instant::now();
    if !graph.is_acyclic() {
        return SolveResult {
            status: SolveStatus::Infeasible,
            witness: None,
            nodes_explored: 0,
            elapsed: start.elapsed(),
        };
    }
    let counter = Counter::new(options.budget.max_nodes);
    let give_up = |counter: &Counter| {
        let fallback = constructive_upper(graph).map(|r| r.canonicalize());
        SolveResult {
            status: SolveStatus::BudgetExhausted { best_upper: fallback.as_ref().map(Representation::palette_size) },
            witness: fallback,
            nodes_explored: counter.nodes(),
            elapsed: start.elapsed(),
        }
    };
    if graph.n() > MAX_BITS {
        return give_up(&counter);
    }
    let prepared = prepare(graph).expect("acyclic");
    for k in 1..=options.budget.max_palette.min(MAX_BITS) {
        match decide(&prepared, k, &counter, options.threads) {
            Feasibility::Feasible(witness) => {
                return SolveResult {
                    status: SolveStatus::Optimal { din: k },
                    witness: Some(witness),
                    nodes_explored: counter.nodes(),
                    elapsed: start.elapsed(),
                };
            }
            Feasibility::Infeasible => {}
            Feasibility::Unknown => return give_up(&counter),
        }
    }
    give_up(&counter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_family, Family};
    use crate::representation::verify;

    fn din(g: &Digraph) -> usize {
        exact_din(g, &SolveOptions::default()).din().expect("solved")
    }

    #[test]
    fn triangle_is_infeasible() {
        let g = Digraph::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        let res = exact_din(&g, &SolveOptions::default());
        assert_eq!(res.status, SolveStatus::Infeasible);
        assert!(res.witness.is_none());
        assert_eq!(feasible_with_palette(&g, 3, &SolveOptions::default()), Err(Error::Cyclic));
    }

    #[test]
    fn small_values() {
        assert_eq!(din(&Digraph::empty(1).unwrap()), 1);
        assert_eq!(din(&Digraph::empty(4).unwrap()), 1);
        assert_eq!(din(&gen_family(Family::Star, 5).unwrap()), 2);
        assert_eq!(din(&gen_family(Family::CompleteDag, 3).unwrap()), 3);
        assert_eq!(din(&gen_family(Family::Fig3TreeSmall, 0).unwrap()), 5);
    }

    #[test]
    fn single_arc_decisions() {
        let g = Digraph::new(2, [(1, 2)]).unwrap();
        let opts = SolveOptions::default();
        assert!(matches!(feasible_with_palette(&g, 2, &opts).unwrap(), Feasibility::Feasible(_)));
        assert_eq!(feasible_with_palette(&g, 1, &opts).unwrap(), Feasibility::Infeasible);
    }

    #[test]
    fn witness_is_valid_and_canonical() {
        let g = gen_family(Family::SourceArcPath, 4).unwrap();
        let res = exact_din(&g, &SolveOptions::default());
        assert_eq!(res.din(), Some(8));
        let w = res.witness.unwrap();
        assert!(verify(&g, &w).unwrap().valid);
        assert_eq!(w.palette_size(), 8);
        assert_eq!(w.canonicalize(), w);
    }

    #[test]
    fn tiny_budget_runs_out() {
        let g = gen_family(Family::SourceArcPath, 6).unwrap();
        let opts = SolveOptions::with_budget(SolveBudget::new(50, 64).unwrap());
        let res = exact_din(&g, &opts);
        let SolveStatus::BudgetExhausted { best_upper: Some(upper) } = res.status else {
            panic!("expected exhaustion, got {:?}", res.status);
        };
        assert!(upper >= 18);
        assert!(verify(&g, res.witness.as_ref().unwrap()).unwrap().valid);
    }

    #[test]
    fn palette_cap_reports_exhaustion() {
        let g = gen_family(Family::DirectedPath, 4).unwrap();
        let opts = SolveOptions::with_budget(SolveBudget::new(1_000_000, 5).unwrap());
        assert!(matches!(exact_din(&g, &opts).status, SolveStatus::BudgetExhausted { .. }));
    }

    #[test]
    fn budget_validation() {
        assert!(SolveBudget::new(0, 3).is_err());
        assert!(SolveBudget::new(3, 0).is_err());
        assert!(SolveBudget::new(3, 65).is_err());
    }

    #[test]
    fn threads_agree() {
        let g = gen_family(Family::SourceArcPath, 5).unwrap();
        let seq = exact_din(&g, &SolveOptions::default());
        let par = exact_din(&g, &SolveOptions { threads: 4, ..SolveOptions::default() });
        assert_eq!(seq.status, par.status);
        assert_eq!(seq.witness, par.witness);
    }
}
