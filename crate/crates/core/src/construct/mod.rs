//! Constructive representation algorithms.
//!
//! The general constructors work on vertices relabeled by their position in the
//! deterministic left-to-right order, so vertex `i` below always means the
//! `i`-th vertex of that order.

mod closed_form;
mod inductive;
mod pairing;

pub use closed_form::{augmented_representation, closed_form_for, source_arc_path_representation, ClosedForm};
pub use inductive::inductive_construction;
pub use pairing::{pairing_construction, pairing_construction_with_stats, PairingStats};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexOrder};
use crate::representation::{Color, ColorSet, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Pairing,
    Inductive,
    ClosedForm,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Pairing => "pairing",
            Method::Inductive => "inductive",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pairing" => Ok(Method::Pairing),
            "inductive" => Ok(Method::Inductive),
            "closed-form" | "closed_form" => Ok(Method::ClosedForm),
            _ => Err(Error::Domain(format!("unknown construction method {s:?}"))),
        }
    }
}

/// Runs `method` on `graph`.
pub fn construct(graph: &Digraph, method: Method) -> Result<Representation> {
    match method {
        Method::Pairing => pairing_construction(graph),
        Method::Inductive => inductive_construction(graph),
        Method::ClosedForm => closed_form_for(graph).map(|(_, rep)| rep),
    }
}

/// Hands out fresh color ids.
#[derive(Debug, Default)]
pub(crate) struct ColorMint {
    next: Color,
}

impl ColorMint {
    pub(crate) fn fresh(&mut self) -> Color {
        let c = self.next;
        self.next += 1;
        c
    }

    pub(crate) fn fresh_n(&mut self, count: usize) -> Vec<Color> {
        (0..count).map(|_| self.fresh()).collect()
    }
}

/// The graph relabeled by position in its left-to-right order, plus that order.
pub(crate) fn positional(graph: &Digraph) -> Result<(Digraph, VertexOrder)> {
    let order = graph.left_to_right_order()?;
    Ok((graph.relabel_by(&order), order))
}

/// Maps position-indexed color sets back onto the original vertex labels.
pub(crate) fn unposition(sets: Vec<ColorSet>, order: &VertexOrder) -> Result<Representation> {
    let mut phi = vec![ColorSet::new(); sets.len()];
    for (set, &v) in sets.into_iter().zip(order.as_slice()) {
        phi[v - 1] = set;
    }
    Representation::new(phi)
}

/// Runs an even-n construction, padding odd `n` with an isolated vertex `n + 1`
/// that is dropped afterwards.
pub(crate) fn with_even_padding(
    graph: &Digraph,
    even: impl FnOnce(&Digraph) -> Result<Representation>,
) -> Result<Representation> {
    if !graph.is_acyclic() {
        return Err(Error::Cyclic);
    }
    if graph.n().is_multiple_of(2) {
        return even(graph);
    }
    let padded = Digraph::new(graph.n() + 1, graph.arcs())?;
    let rep = even(&padded)?;
    let kept: Vec<usize> = graph.vertices().collect();
    rep.restrict(&kept)
}
