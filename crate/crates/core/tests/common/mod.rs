#![allow(dead_code)]

use std::collections::BTreeSet;

use din_core::representation::{ColorSet, Representation};
use din_core::Digraph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Weakly connected DAG with shuffled labels: a random spanning tree oriented
/// along a hidden topological order, plus forward arcs with probability `density`.
pub fn random_connected_dag(rng: &mut StdRng, n: usize, density: f64) -> Digraph {
    let mut hidden: Vec<usize> = (1..=n).collect();
    hidden.shuffle(rng);
    let mut arcs = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        arcs.insert((hidden[j], hidden[i]));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                arcs.insert((hidden[i], hidden[j]));
            }
        }
    }
    Digraph::new(n, arcs).unwrap()
}

/// Same as [`random_connected_dag`] with a random density in `[0, 0.6)`.
pub fn random_dag(rng: &mut StdRng, n: usize) -> Digraph {
    let density = rng.gen_range(0.0..0.6);
    random_connected_dag(rng, n, density)
}

/// DAG containing the Hamiltonian path along a hidden order.
pub fn random_hamiltonian_dag(rng: &mut StdRng, n: usize) -> Digraph {
    let mut hidden: Vec<usize> = (1..=n).collect();
    hidden.shuffle(rng);
    let mut arcs: BTreeSet<_> = hidden.windows(2).map(|w| (w[0], w[1])).collect();
    let density = rng.gen_range(0.0..0.5);
    for i in 0..n {
        for j in i + 2..n {
            if rng.gen_bool(density) {
                arcs.insert((hidden[i], hidden[j]));
            }
        }
    }
    Digraph::new(n, arcs).unwrap()
}

/// Arbitrary digraph without loops; may contain cycles.
pub fn random_digraph(rng: &mut StdRng, n: usize, density: f64) -> Digraph {
    let arcs: Vec<_> = (1..=n).flat_map(|u| (1..=n).map(move |v| (u, v))).filter(|&(u, v)| u != v).collect();
    let chosen: Vec<_> = arcs.into_iter().filter(|_| rng.gen_bool(density)).collect();
    Digraph::new(n, chosen).unwrap()
}

/// Random nonempty color sets drawn from `0..palette`.
pub fn random_representation(rng: &mut StdRng, n: usize, palette: u32) -> Representation {
    let phi = (0..n)
        .map(|_| {
            let mut set: ColorSet = (0..palette).filter(|_| rng.gen_bool(0.4)).collect();
            if set.is_empty() {
                set.insert(rng.gen_range(0..palette));
            }
            set
        })
        .collect();
    Representation::new(phi).unwrap()
}

/// Definition check written independently of the library verifier.
pub fn oracle_valid(graph: &Digraph, rep: &Representation) -> bool {
    let n = graph.n();
    if rep.n() != n {
        return false;
    }
    let sets: Vec<Vec<u32>> = (1..=n).map(|v| rep.colors(v).iter().copied().collect()).collect();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let shared = sets[u].iter().any(|c| sets[v].contains(c));
            let implied = shared && sets[u].len() < sets[v].len();
            if implied != graph.has_arc(u + 1, v + 1) {
                return false;
            }
        }
    }
    true
}
