//! Pair-based construction: disjoint reservoirs per vertex, one copied color per
//! (vertex, later pair) arc pattern, then per-pair padding.
//!
//! For even `n` the palette never exceeds `5n^2/8 - n/4`.

use crate::error::Result;
use crate::graph::Digraph;
use crate::representation::{ColorSet, Representation};

use super::{positional, unposition, with_even_padding, ColorMint};

/// Color accounting of one pairing run (on the padded graph for odd `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairingStats {
    /// Colors minted for the initial disjoint reservoirs.
    pub reservoir_colors: usize,
    /// Colors minted while padding pairs to their target sizes.
    pub padding_colors: usize,
}

pub fn pairing_construction(graph: &Digraph) -> Result<Representation> {
    pairing_construction_with_stats(graph).map(|(rep, _)| rep)
}

pub fn pairing_construction_with_stats(graph: &Digraph) -> Result<(Representation, PairingStats)> {
    let mut stats = None;
    let rep = with_even_padding(graph, |g| {
        let (rep, s) = pairing_even(g)?;
        stats = Some(s);
        Ok(rep)
    })?;
    Ok((rep, stats.expect("even construction ran")))
}

fn pair_of(i: usize) -> usize {
    i.div_ceil(2)
}

fn pairing_even(graph: &Digraph) -> Result<(Representation, PairingStats)> {
    let (g, order) = positional(graph)?;
    let n = g.n();
    let half = n / 2;
    let mut mint = ColorMint::default();
    let mut sets = vec![ColorSet::new(); n];

    // Reservoirs: vertex i owns half - ceil(i/2) colors, one per later pair.
    let reservoirs: Vec<Vec<_>> = (1..=n).map(|i| mint.fresh_n(half - pair_of(i))).collect();
    let reservoir_colors = reservoirs.iter().map(Vec::len).sum();
    for (set, own) in sets.iter_mut().zip(&reservoirs) {
        set.extend(own.iter().copied());
    }

    // Each vertex spends the j-th unused reservoir color on the j-th later pair it reaches.
    for i in 1..=n.saturating_sub(2) {
        let mut spare = reservoirs[i - 1].iter().copied();
        for j in pair_of(i) + 1..=half {
            let (a, b) = (2 * j - 1, 2 * j);
            let hits_a = g.has_arc(i, a);
            let hits_b = g.has_arc(i, b);
            if !(hits_a || hits_b) {
                continue;
            }
            let c = spare.next().expect("reservoir holds one color per later pair");
            if hits_a {
                sets[a - 1].insert(c);
            }
            if hits_b {
                sets[b - 1].insert(c);
            }
        }
    }

    // Pad pair j to sizes (half+2j-2, half+2j-1) when it is an arc, else both
    // half+2j-1. Pad colors are shared inside the pair.
    let mut padding_colors = 0;
    for j in 1..=half {
        let (a, b) = (2 * j - 1, 2 * j);
        let target_b = half + 2 * j - 1;
        let target_a = if g.has_arc(a, b) { target_b - 1 } else { target_b };
        let need_a = target_a - sets[a - 1].len();
        let need_b = target_b - sets[b - 1].len();
        let pad = mint.fresh_n(need_a.max(need_b));
        padding_colors += pad.len();
        sets[a - 1].extend(&pad[..need_a]);
        sets[b - 1].extend(&pad[..need_b]);
    }

    let rep = unposition(sets, &order)?;
    Ok((rep, PairingStats { reservoir_colors, padding_colors }))
}
