//! Closed-form representations of the source arc-path and its augmented variant.

use crate::error::{Error, Result};
use crate::families::{augmented_extra_arcs, gen_family, Family};
use crate::graph::Digraph;
use crate::representation::{Color, ColorSet, Representation};

use super::ColorMint;

fn check_even_at_least(n: usize, min: usize) -> Result<()> {
    if !n.is_multiple_of(2) {
        return Err(Error::Parity { n });
    }
    if n < min {
        return Err(Error::InvalidN { n, reason: format!("closed form needs n >= {min}") });
    }
    Ok(())
}

/// Source arc-path representation plus, for each odd vertex `2i-1 >= 3`, the
/// `g` colors it shares with its pair mate (the reservoir the augmented form draws on).
struct SourceArcPathColors {
    sets: Vec<ColorSet>,
    reservoirs: Vec<Vec<Color>>,
    mint: ColorMint,
}

fn source_arc_path_colors(n: usize) -> SourceArcPathColors {
    let h = n / 2;
    let mut mint = ColorMint::default();
    // Index 0 unused so that c[i], d[i], f[i] follow 1-based pair numbers.
    let c: Vec<Color> = (0..=h).map(|_| mint.fresh()).collect();
    let d: Vec<Color> = (0..=h).map(|_| mint.fresh()).collect();
    let f: Vec<Color> = (0..h).map(|_| mint.fresh()).collect();
    // g[i] holds g_{1,i}, g_{2,i}, ...; the even member of the last pair holds one extra.
    let g_len = |i: usize| match i {
        1 => h - 1,
        i if i == h => h + n - 3,
        i => h + 2 * i - 4,
    };
    let g: Vec<Vec<Color>> = (0..=h).map(|i| if i == 0 { Vec::new() } else { mint.fresh_n(g_len(i)) }).collect();

    let mut sets = vec![ColorSet::new(); n];
    let at = |v: usize| v - 1;
    sets[at(1)] = c[1..=h].iter().copied().collect();
    sets[at(2)] = [c[1], f[1]].into_iter().chain(g[1].iter().copied()).collect();
    for i in 2..h {
        sets[at(2 * i)] = [c[i], d[i], f[i]].into_iter().chain(g[i].iter().copied()).collect();
        sets[at(2 * i - 1)] = [d[i], f[i - 1]].into_iter().chain(g[i].iter().copied()).collect();
    }
    sets[at(n)] = [c[h], d[h]].into_iter().chain(g[h].iter().copied()).collect();
    let last_odd = &g[h][..g[h].len() - 1];
    sets[at(n - 1)] = [f[h - 1], d[h]].into_iter().chain(last_odd.iter().copied()).collect();

    // Unused slots c[0], d[0], d[1] were minted for indexing only; they never
    // appear in a set and so never reach the palette.
    let mut reservoirs = vec![Vec::new(); n + 1];
    for i in 2..h {
        reservoirs[2 * i - 1] = g[i].clone();
    }
    reservoirs[n - 1] = last_odd.to_vec();
    SourceArcPathColors { sets, reservoirs, mint }
}

/// Closed-form representation of the source arc-path on `n` vertices (even
/// `n >= 4`) with `n^2/2` colors.
pub fn source_arc_path_representation(n: usize) -> Result<Representation> {
    check_even_at_least(n, 4)?;
    Ok(Representation::new(source_arc_path_colors(n).sets)?.canonicalize())
}

/// Representation of the augmented source arc-path (even `n >= 8`) with
/// `n^2/2 + m` colors, `m` being the number of extra arcs.
///
/// Extra arcs are processed in lexicographic order. Each gets a fresh color on
/// both endpoints, and each endpoint gives up the lowest untouched color of its
/// reservoir. Those reservoir colors survive in the even pair mate.
pub fn augmented_representation(n: usize) -> Result<Representation> {
    check_even_at_least(n, 8)?;
    let SourceArcPathColors { mut sets, mut reservoirs, mut mint } = source_arc_path_colors(n);
    for (tail, head) in augmented_extra_arcs(n)? {
        let fresh = mint.fresh();
        for v in [tail, head] {
            let g = reservoirs[v].remove(0);
            sets[v - 1].remove(&g);
            sets[v - 1].insert(fresh);
        }
    }
    Ok(Representation::new(sets)?.canonicalize())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    SourceArcPath,
    Augmented,
}

/// Matches `graph` exactly against the source arc-path or augmented family of
/// its size and returns the corresponding closed-form representation.
pub fn closed_form_for(graph: &Digraph) -> Result<(ClosedForm, Representation)> {
    let n = graph.n();
    if n >= 8 && n.is_multiple_of(2) && gen_family(Family::AugmentedSourceArcPath, n)? == *graph {
        return Ok((ClosedForm::Augmented, augmented_representation(n)?));
    }
    if n >= 4 && n.is_multiple_of(2) && gen_family(Family::SourceArcPath, n)? == *graph {
        return Ok((ClosedForm::SourceArcPath, source_arc_path_representation(n)?));
    }
    Err(Error::Domain(
        "closed-form construction applies only to an even source arc-path (n >= 4) or augmented source arc-path (n >= 8)"
            .into(),
    ))
}
