//! Complete search for a representation over a palette of `k` colors.
//!
//! Vertices are the positions `0..n` of the left-to-right order. A size
//! function `s` with `s(u) < s(v)` for every arc fixes, for every pair, whether
//! the color sets must intersect (adjacent), must be disjoint (non-adjacent with
//! different sizes) or are unconstrained (non-adjacent, equal sizes). Colors are
//! then assigned vertex by vertex as `u64` masks. Existing colors held by the
//! same set of earlier vertices are interchangeable, so only the lowest ones of
//! each such class are tried, and fresh colors are always the next unused ids.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::graph::Digraph;

pub(crate) const MAX_BITS: usize = 64;

/// Shared search accounting.
pub(crate) struct Counter {
    nodes: AtomicU64,
    limit: u64,
    exhausted: AtomicBool,
}

impl Counter {
    pub(crate) fn new(limit: u64) -> Self {
        Self { nodes: AtomicU64::new(0), limit, exhausted: AtomicBool::new(false) }
    }

    /// Counts one node; false once the budget is spent.
    fn tick(&self) -> bool {
        let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if seen > self.limit {
            self.exhausted.store(true, Ordering::Relaxed);
            false
        } else {
            true
        }
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed).min(self.limit)
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }
}

/// Graph data in position order, as bitmasks.
pub(crate) struct Instance {
    n: usize,
    /// `adj[v]`: positions adjacent to `v` in either direction.
    adj: Vec<u64>,
    preds: Vec<Vec<usize>>,
    /// Longest path (in arcs) starting at `v`.
    height: Vec<usize>,
}

impl Instance {
    /// `graph` must be acyclic with the identity as a topological order.
    pub(crate) fn new(graph: &Digraph) -> Self {
        let n = graph.n();
        assert!(n <= MAX_BITS);
        let mut adj = vec![0u64; n];
        let mut preds = vec![Vec::new(); n];
        for (t, h) in graph.arcs() {
            let (t, h) = (t - 1, h - 1);
            debug_assert!(t < h, "positions must be topologically ordered");
            adj[t] |= 1 << h;
            adj[h] |= 1 << t;
            preds[h].push(t);
        }
        let mut height = vec![0usize; n];
        for v in (0..n).rev() {
            for &p in &preds[v] {
                height[p] = height[p].max(height[v] + 1);
            }
        }
        Self { n, adj, preds, height }
    }
}

#[derive(Debug)]
pub(crate) enum Outcome {
    /// Color masks per position.
    Found(Vec<u64>),
    Exhausted,
    None,
}

/// Searches for a representation with at most `k` colors (`k <= 64`).
pub(crate) fn search(inst: &Instance, k: usize, counter: &Counter, threads: usize) -> Outcome {
    if threads <= 1 {
        let mut sizes = vec![0usize; inst.n];
        let mut found = None;
        let finished =
            enumerate_sizes(inst, k, 0, &mut sizes, counter, &mut |s| match assign_colors(inst, k, s, counter, None) {
                Outcome::Found(phi) => {
                    found = Some(phi);
                    false
                }
                Outcome::Exhausted => false,
                Outcome::None => true,
            });
        return match found {
            Some(phi) => Outcome::Found(phi),
            None if !finished || counter.exhausted() => Outcome::Exhausted,
            None => Outcome::None,
        };
    }

    let mut candidates = Vec::new();
    let mut sizes = vec![0usize; inst.n];
    let finished = enumerate_sizes(inst, k, 0, &mut sizes, counter, &mut |s| {
        candidates.push(s.to_vec());
        true
    });
    if !finished {
        return Outcome::Exhausted;
    }
    let best = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
    let found = pool.install(|| {
        candidates.par_iter().enumerate().find_map_first(|(idx, s)| {
            let stop = StopAfter { best: &best, idx };
            match assign_colors(inst, k, s, counter, Some(&stop)) {
                Outcome::Found(phi) => {
                    best.fetch_min(idx, Ordering::Relaxed);
                    Some(phi)
                }
                _ => None,
            }
        })
    });
    match found {
        Some(phi) => Outcome::Found(phi),
        None if counter.exhausted() => Outcome::Exhausted,
        None => Outcome::None,
    }
}

struct StopAfter<'a> {
    best: &'a AtomicUsize,
    idx: usize,
}

impl StopAfter<'_> {
    fn should_stop(&self) -> bool {
        self.best.load(Ordering::Relaxed) < self.idx
    }
}

/// Enumerates size functions in lexicographic order, passing each one that
/// survives the disjointness bound to `visit`. Returns false if stopped early.
fn enumerate_sizes(
    inst: &Instance,
    k: usize,
    v: usize,
    sizes: &mut [usize],
    counter: &Counter,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if v == inst.n {
        if disjoint_weight_bound(inst, sizes) > k {
            return true;
        }
        return visit(sizes);
    }
    if !counter.tick() {
        return false;
    }
    let lo = inst.preds[v].iter().map(|&p| sizes[p] + 1).max().unwrap_or(1);
    let hi = k.saturating_sub(inst.height[v]);
    for value in lo..=hi {
        sizes[v] = value;
        if !enumerate_sizes(inst, k, v + 1, sizes, counter, visit) {
            return false;
        }
    }
    true
}

/// Mask of positions whose sets must be disjoint from `v`'s.
fn disjoint_mask(inst: &Instance, sizes: &[usize], v: usize) -> u64 {
    let mut mask = 0u64;
    for u in 0..inst.n {
        if u != v && inst.adj[v] >> u & 1 == 0 && sizes[u] != sizes[v] {
            mask |= 1 << u;
        }
    }
    mask
}

/// Maximum total size over a set of pairwise must-disjoint vertices. Every
/// such set needs that many distinct colors.
fn disjoint_weight_bound(inst: &Instance, sizes: &[usize]) -> usize {
    let masks: Vec<u64> = (0..inst.n).map(|v| disjoint_mask(inst, sizes, v)).collect();
    let mut best = 0;
    max_weight_clique(&masks, sizes, low_mask(inst.n), 0, &mut best);
    best
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn max_weight_clique(masks: &[u64], weight: &[usize], mut cand: u64, acc: usize, best: &mut usize) {
    if acc > *best {
        *best = acc;
    }
    let mut rest: usize = bits(cand).map(|v| weight[v]).sum();
    while cand != 0 {
        if acc + rest <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        rest -= weight[v];
        max_weight_clique(masks, weight, cand & masks[v], acc + weight[v], best);
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            b
        })
    })
}

struct ColorSearch<'a> {
    inst: &'a Instance,
    k: usize,
    sizes: &'a [usize],
    /// Must-disjoint masks per position.
    apart: Vec<u64>,
    phi: Vec<u64>,
    /// Holders (position masks) of each color in use.
    holders: [u64; MAX_BITS],
    used: usize,
    counter: &'a Counter,
    stop: Option<&'a StopAfter<'a>>,
    aborted: bool,
}

fn assign_colors(
    inst: &Instance,
    k: usize,
    sizes: &[usize],
    counter: &Counter,
    stop: Option<&StopAfter<'_>>,
) -> Outcome {
    let apart = (0..inst.n).map(|v| disjoint_mask(inst, sizes, v)).collect();
    let mut search = ColorSearch {
        inst,
        k,
        sizes,
        apart,
        phi: vec![0; inst.n],
        holders: [0; MAX_BITS],
        used: 0,
        counter,
        stop,
        aborted: false,
    };
    if search.place(0) {
        Outcome::Found(search.phi)
    } else if search.aborted {
        Outcome::Exhausted
    } else {
        Outcome::None
    }
}

impl ColorSearch<'_> {
    fn forbidden(&self, w: usize, done: u64) -> u64 {
        bits(self.apart[w] & done).fold(0, |acc, u| acc | self.phi[u])
    }

    /// Every unplaced vertex can still reach its size and meet its placed neighbors.
    fn lookahead(&self, done: u64) -> bool {
        for w in bits(!done & low_mask(self.inst.n)) {
            let forb = self.forbidden(w, done);
            if forb.count_ones() as usize + self.sizes[w] > self.k {
                return false;
            }
            if bits(self.inst.adj[w] & done).any(|u| self.phi[u] & !forb == 0) {
                return false;
            }
        }
        true
    }

    fn place(&mut self, v: usize) -> bool {
        if v == self.inst.n {
            return true;
        }
        if !self.counter.tick() || self.stop.is_some_and(StopAfter::should_stop) {
            self.aborted = true;
            return false;
        }
        let done = low_mask(v);
        let in_use = low_mask(self.used);
        let allowed = in_use & !self.forbidden(v, done);

        // Interchangeable classes: allowed colors with identical holders.
        let mut classes: Vec<(u64, Vec<usize>)> = Vec::new();
        for c in bits(allowed) {
            match classes.iter_mut().find(|(sig, _)| *sig == self.holders[c]) {
                Some((_, members)) => members.push(c),
                None => classes.push((self.holders[c], vec![c])),
            }
        }
        let must_meet: Vec<u64> = bits(self.inst.adj[v] & done).map(|u| self.phi[u]).collect();
        let mut picked = vec![0usize; classes.len()];
        self.choose(v, &classes, &must_meet, 0, &mut picked, 0)
    }

    /// Chooses how many colors to take from each class (most first), then fresh colors.
    fn choose(
        &mut self,
        v: usize,
        classes: &[(u64, Vec<usize>)],
        must_meet: &[u64],
        idx: usize,
        picked: &mut [usize],
        taken: usize,
    ) -> bool {
        let size = self.sizes[v];
        let fresh_room = self.k - self.used;
        if idx == classes.len() {
            let fresh = size - taken;
            if fresh > fresh_room {
                return false;
            }
            let mut mask = 0u64;
            for ((_, members), &count) in classes.iter().zip(picked.iter()) {
                for &c in &members[..count] {
                    mask |= 1 << c;
                }
            }
            if must_meet.iter().any(|&m| m & mask == 0) {
                return false;
            }
            return self.commit(v, mask, fresh);
        }
        let remaining: usize = classes[idx..].iter().map(|(_, m)| m.len()).sum();
        if taken + remaining + fresh_room < size {
            return false;
        }
        let most = classes[idx].1.len().min(size - taken);
        for count in (0..=most).rev() {
            picked[idx] = count;
            if self.choose(v, classes, must_meet, idx + 1, picked, taken + count) {
                return true;
            }
            if self.aborted {
                return false;
            }
        }
        picked[idx] = 0;
        false
    }

    fn commit(&mut self, v: usize, existing: u64, fresh: usize) -> bool {
        let start = self.used;
        let fresh_mask = low_mask(start + fresh) & !low_mask(start);
        let mask = existing | fresh_mask;
        self.phi[v] = mask;
        self.used += fresh;
        for c in bits(mask) {
            self.holders[c] |= 1 << v;
        }
        let done = low_mask(v + 1);
        if self.lookahead(done) && self.place(v + 1) {
            return true;
        }
        for c in bits(mask) {
            self.holders[c] &= !(1 << v);
        }
        self.used = start;
        self.phi[v] = 0;
        false
    }
}
