//! Inductive construction with the one-color saving for arc pairs.
//!
//! Pairs are inserted from the back of the left-to-right order towards the
//! front. After inserting pair `(1, 2)` on top of a representation of the
//! suffix `3..=m` (local size `m`, `h = m/2`), the result satisfies:
//!
//! * `|phi(1)| = h`, `|phi(2)| >= h`, `|phi(i)| >= h + 1` for `i >= 3`;
//! * each pair `(2i-1, 2i)` has sizes differing by exactly one when it is an
//!   arc and equal sizes otherwise;
//! * the palette holds at most `5m^2/8 - 3m/4 + 1` colors.

use crate::error::Result;
use crate::graph::Digraph;
use crate::representation::{Color, ColorSet, Representation};

use super::{positional, unposition, with_even_padding, ColorMint};

pub fn inductive_construction(graph: &Digraph) -> Result<Representation> {
    with_even_padding(graph, inductive_even)
}

fn inductive_even(graph: &Digraph) -> Result<Representation> {
    let (g, order) = positional(graph)?;
    let n = g.n();
    let mut mint = ColorMint::default();
    let mut sets = vec![ColorSet::new(); n];

    // Base pair: the singleton goes to the tail.
    let c = mint.fresh();
    sets[n - 2].insert(c);
    sets[n - 1].insert(c);
    if g.has_arc(n - 1, n) {
        sets[n - 1].insert(mint.fresh());
    }

    for pair in (0..n / 2 - 1).rev() {
        insert_front_pair(&g, &mut sets, &mut mint, 2 * pair + 1);
    }
    unposition(sets, &order)
}

/// Which color-saving rewrite applies when the inserted pair is an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Saving {
    /// Pair 2 already shares a copied color, so its padding needs at most two colors.
    Inherent,
    /// Move vertex 3 from `beta_1` to `delta` and vertex 2 from `beta_1` to `alpha_1`.
    SwapBetaThroughThree,
    /// `alpha_1` reaches no later vertex; vertex 1 takes `delta` instead.
    AlphaToDelta,
    /// Vertex 4 trades `alpha_1` for a pad color of vertex 3; vertex 1 takes `beta_1`.
    AlphaToBeta,
    /// `beta_1` reaches no later vertex; vertex 2 takes `alpha_1` instead.
    BetaToAlpha,
    /// Pad every later vertex by two instead of three.
    PadByTwo,
}

fn choose_saving(a13: bool, a14: bool, a23: bool, a24: bool) -> Saving {
    if a23 {
        if a24 {
            Saving::Inherent
        } else if a13 {
            if a14 {
                Saving::Inherent
            } else {
                Saving::SwapBetaThroughThree
            }
        } else if a14 {
            Saving::Inherent
        } else {
            Saving::AlphaToDelta
        }
    } else if a24 {
        if a13 {
            Saving::Inherent
        } else if a14 {
            Saving::AlphaToBeta
        } else {
            Saving::AlphaToDelta
        }
    } else if a13 && a14 {
        Saving::Inherent
    } else if !a13 && !a14 {
        Saving::BetaToAlpha
    } else {
        Saving::PadByTwo
    }
}

fn replace(set: &mut ColorSet, old: Color, new: Color) {
    let removed = set.remove(&old);
    debug_assert!(removed, "color {old} expected in set");
    set.insert(new);
}

/// Inserts the pair at positions `(first, first + 1)` in front of an already
/// represented suffix `first + 2..=n`.
fn insert_front_pair(g: &Digraph, sets: &mut [ColorSet], mint: &mut ColorMint, first: usize) {
    let n = g.n();
    let (v1, v2, v3, v4) = (first, first + 1, first + 2, first + 3);
    let m = n - first + 1;
    let h = m / 2;
    let later_pairs: Vec<(usize, usize)> = (v3..n).step_by(2).map(|a| (a, a + 1)).collect();
    let before: Vec<usize> = sets.iter().map(ColorSet::len).collect();
    let at = |v: usize| v - 1;

    let alpha = mint.fresh_n(h - 1);
    let beta = mint.fresh_n(h - 1);
    let gamma = mint.fresh();
    sets[at(v1)] = alpha.iter().copied().chain([gamma]).collect();
    sets[at(v2)] = beta.iter().copied().chain([gamma]).collect();
    let pair_arc = g.has_arc(v1, v2);
    let delta = pair_arc.then(|| {
        let d = mint.fresh();
        sets[at(v2)].insert(d);
        d
    });

    // Copy alpha_{i-1} / beta_{i-1} into the members of later pair i that are hit.
    for (k, &(a, b)) in later_pairs.iter().enumerate() {
        for (src, palette) in [(v1, &alpha), (v2, &beta)] {
            for dst in [a, b] {
                if g.has_arc(src, dst) {
                    sets[at(dst)].insert(palette[k]);
                }
            }
        }
    }

    let saving =
        pair_arc.then(|| choose_saving(g.has_arc(v1, v3), g.has_arc(v1, v4), g.has_arc(v2, v3), g.has_arc(v2, v4)));
    let grow = if saving == Some(Saving::PadByTwo) { 2 } else { 3 };

    // Pad each later pair with shared fresh colors up to `before + grow`.
    let mut second_pair_pad = Vec::new();
    for (k, &(a, b)) in later_pairs.iter().enumerate() {
        let need_a = before[at(a)] + grow - sets[at(a)].len();
        let need_b = before[at(b)] + grow - sets[at(b)].len();
        let pad = mint.fresh_n(need_a.max(need_b));
        sets[at(a)].extend(&pad[..need_a]);
        sets[at(b)].extend(&pad[..need_b]);
        if k == 0 {
            second_pair_pad = pad;
        }
    }

    let (alpha1, beta1) = (alpha[0], beta[0]);
    match saving {
        None | Some(Saving::Inherent) | Some(Saving::PadByTwo) => {}
        Some(Saving::SwapBetaThroughThree) => {
            replace(&mut sets[at(v3)], beta1, delta.expect("arc pair"));
            replace(&mut sets[at(v2)], beta1, alpha1);
        }
        Some(Saving::AlphaToDelta) => {
            replace(&mut sets[at(v1)], alpha1, delta.expect("arc pair"));
        }
        Some(Saving::AlphaToBeta) => {
            let spare = second_pair_pad
                .iter()
                .copied()
                .find(|c| !sets[at(v4)].contains(c))
                .expect("vertex 3 was padded by three, vertex 4 by one");
            replace(&mut sets[at(v4)], alpha1, spare);
            replace(&mut sets[at(v1)], alpha1, beta1);
        }
        Some(Saving::BetaToAlpha) => {
            replace(&mut sets[at(v2)], beta1, alpha1);
        }
    }
}
