//! Generators for the named DAG families and fixtures.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Digraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    DirectedPath,
    Star,
    CompleteDag,
    SourceArcPath,
    AugmentedSourceArcPath,
    Fig3TreeSmall,
    Fig3TreeLarge,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::DirectedPath,
        Family::Star,
        Family::CompleteDag,
        Family::SourceArcPath,
        Family::AugmentedSourceArcPath,
        Family::Fig3TreeSmall,
        Family::Fig3TreeLarge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DirectedPath => "directed-path",
            Family::Star => "star",
            Family::CompleteDag => "complete-dag",
            Family::SourceArcPath => "source-arc-path",
            Family::AugmentedSourceArcPath => "augmented",
            Family::Fig3TreeSmall => "fig3-tree-small",
            Family::Fig3TreeLarge => "fig3-tree-large",
        }
    }

    /// Fixtures ignore the requested `n`.
    pub fn is_fixture(self) -> bool {
        matches!(self, Family::Fig3TreeSmall | Family::Fig3TreeLarge)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Ok(match key.as_str() {
            "directed-path" | "path" => Family::DirectedPath,
            "star" => Family::Star,
            "complete-dag" | "complete" => Family::CompleteDag,
            "source-arc-path" | "sap" => Family::SourceArcPath,
            "augmented" | "augmented-source-arc-path" => Family::AugmentedSourceArcPath,
            "fig3-tree-small" | "tree4" => Family::Fig3TreeSmall,
            "fig3-tree-large" | "tree6" => Family::Fig3TreeLarge,
            _ => return Err(Error::Domain(format!("unknown family {s:?}"))),
        })
    }
}

/// Four-vertex rooted tree labeled in preorder.
pub const FIG3_TREE_SMALL: [(usize, usize); 3] = [(1, 2), (1, 3), (3, 4)];

/// Six-vertex rooted tree labeled in preorder.
pub const FIG3_TREE_LARGE: [(usize, usize); 5] = [(1, 2), (1, 3), (3, 4), (1, 5), (5, 6)];

pub fn gen_family(family: Family, n: usize) -> Result<Digraph> {
    match family {
        Family::Fig3TreeSmall => return Digraph::new(4, FIG3_TREE_SMALL),
        Family::Fig3TreeLarge => return Digraph::new(6, FIG3_TREE_LARGE),
        _ => {}
    }
    if n < 2 {
        return Err(Error::InvalidN { n, reason: format!("{family} needs n >= 2") });
    }
    match family {
        Family::DirectedPath => directed_path(n),
        Family::Star => Digraph::new(n, (1..n).map(|k| (k, n))),
        Family::CompleteDag => Digraph::new(n, (1..n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)))),
        Family::SourceArcPath => source_arc_path(n),
        Family::AugmentedSourceArcPath => augmented_source_arc_path(n),
        Family::Fig3TreeSmall | Family::Fig3TreeLarge => unreachable!(),
    }
}

fn directed_path(n: usize) -> Result<Digraph> {
    Digraph::new(n, (1..n).map(|k| (k, k + 1)))
}

fn source_arc_path(n: usize) -> Result<Digraph> {
    let spokes = (1..=n / 2).map(|k| (1, 2 * k));
    let path = (1..n).map(|k| (k, k + 1));
    Digraph::new(n, spokes.chain(path))
}

/// Odd-labeled vertex blocks `(X, Y)` joined by the extra arcs of the augmented family.
pub fn augmented_blocks(n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if !n.is_multiple_of(2) {
        return Err(Error::Parity { n });
    }
    if n < 8 {
        return Err(Error::InvalidN { n, reason: "augmented family needs n >= 8".into() });
    }
    let half = n / 2;
    let (x_last, y_first) = if ((n - 2) / 2).is_multiple_of(2) { (half, half + 2) } else { (half + 1, half + 3) };
    let x = (3..=x_last).step_by(2).collect();
    let y = (y_first..n).step_by(2).collect();
    Ok((x, y))
}

/// The extra arcs layered over the source arc-path, in lexicographic order.
pub fn augmented_extra_arcs(n: usize) -> Result<Vec<(usize, usize)>> {
    let (x, y) = augmented_blocks(n)?;
    let skip = (*x.last().expect("X nonempty"), y[0]);
    let mut arcs: Vec<_> = x.iter().flat_map(|&a| y.iter().map(move |&b| (a, b))).filter(|&arc| arc != skip).collect();
    arcs.sort_unstable();
    Ok(arcs)
}

fn augmented_source_arc_path(n: usize) -> Result<Digraph> {
    let extra = augmented_extra_arcs(n)?;
    let base = source_arc_path(n)?;
    Digraph::new(n, base.arcs().chain(extra))
}
