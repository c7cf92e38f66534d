//! Edge-colored clique expansion, the oriented line graph, and the two
//! brute-force oracles on it (closed-path traces and prime-cycle counts).
//!
//! Every hyperedge `e` becomes a clique colored `e`; each clique edge appears
//! in both directions. The oriented line graph has one vertex per arc and a
//! succession `a -> b` whenever `a` ends where `b` starts and the two arcs
//! carry different colors. Its adjacency matrix `T` is the Perron-Frobenius
//! operator, and `det(I - uT)` is the reciprocal zeta function.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub origin: usize,
    pub terminus: usize,
    /// Index of the hyperedge this arc came from.
    pub color: usize,
}

/// How clique edges are oriented and ordered before both directions are
/// added.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Arcs ordered by `(color, min endpoint, max endpoint)`, the forward arc
    /// `min -> max` immediately followed by its inverse.
    Canonical,
    /// Random first direction per edge and a random arc order. Only useful
    /// for checking that nothing depends on the choice.
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredOrientedGraph {
    pub n_vertices: usize,
    pub arcs: Vec<Arc>,
    /// `inverse[i]` is the index of the arc reversing `arcs[i]`.
    pub inverse: Vec<usize>,
}

impl ColoredOrientedGraph {
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedLineGraph {
    /// `successors[i]` lists the `j` with an arc `(i, j)`, ascending.
    successors: Vec<Vec<usize>>,
}

pub fn clique_expand(h: &Hypergraph, orientation: Orientation) -> ColoredOrientedGraph {
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for (color, e) in h.hyperedges().iter().enumerate() {
        for (i, &v) in e.iter().enumerate() {
            for &w in &e[i + 1..] {
                pairs.push((color, v, w));
            }
        }
    }
    let mut arcs = Vec::with_capacity(2 * pairs.len());
    match orientation {
        Orientation::Canonical => {
            for (color, v, w) in pairs {
                arcs.push(Arc { origin: v, terminus: w, color });
                arcs.push(Arc { origin: w, terminus: v, color });
            }
        }
        Orientation::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for (color, v, w) in pairs {
                let (a, b) = if rng.gen_bool(0.5) { (v, w) } else { (w, v) };
                arcs.push(Arc { origin: a, terminus: b, color });
                arcs.push(Arc { origin: b, terminus: a, color });
            }
            arcs.shuffle(&mut rng);
        }
    }
    let mut position = std::collections::HashMap::with_capacity(arcs.len());
    for (i, a) in arcs.iter().enumerate() {
        position.insert(*a, i);
    }
    let inverse = arcs
        .iter()
        .map(|a| {
            position[&Arc {
                origin: a.terminus,
                terminus: a.origin,
                color: a.color,
            }]
        })
        .collect();
    ColoredOrientedGraph {
        n_vertices: h.n_vertices(),
        arcs,
        inverse,
    }
}

pub fn oriented_line_graph(g: &ColoredOrientedGraph) -> OrientedLineGraph {
    let mut leaving: Vec<Vec<usize>> = vec![Vec::new(); g.n_vertices];
    for (j, a) in g.arcs.iter().enumerate() {
        leaving[a.origin].push(j);
    }
    let successors = g
        .arcs
        .iter()
        .map(|a| {
            leaving[a.terminus]
                .iter()
                .copied()
                .filter(|&j| g.arcs[j].color != a.color)
                .collect()
        })
        .collect();
    OrientedLineGraph { successors }
}

/// Convenience: canonical line graph of `h`.
pub fn line_graph_of(h: &Hypergraph) -> OrientedLineGraph {
    oriented_line_graph(&clique_expand(h, Orientation::Canonical))
}

impl OrientedLineGraph {
    pub fn from_successors(successors: Vec<Vec<usize>>) -> Self {
        OrientedLineGraph { successors }
    }

    pub fn n_vertices(&self) -> usize {
        self.successors.len()
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.successors[i]
    }

    pub fn arc_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |&j| (i, j)))
    }

    /// The 0/1 Perron-Frobenius matrix `T`.
    pub fn perron_frobenius_matrix(&self) -> IntMatrix {
        let n = self.n_vertices();
        let mut t = IntMatrix::zeros(n, n);
        for (i, j) in self.arcs() {
            t.set(i, j, BigInt::one());
        }
        t
    }

    /// Strongly connected components (Tarjan, iterative), each sorted, in
    /// reverse topological order.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comps = Vec::new();
        let mut counter = 0;
        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            // (vertex, next successor position)
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if let Some(&w) = self.successors[v].get(*pos) {
                    *pos += 1;
                    if index[w] == UNSEEN {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
        comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n_vertices() > 0 && self.strongly_connected_components().len() == 1
    }

    /// `N_k = trace(T^k)` for `k = 1..=max_len`, exactly.
    pub fn closed_path_counts(&self, max_len: usize) -> Vec<BigInt> {
        let n = self.n_vertices();
        let per_start: Vec<Vec<BigInt>> = (0..n)
            .into_par_iter()
            .map(|s| {
                let mut v = vec![BigInt::zero(); n];
                v[s] = BigInt::one();
                let mut out = Vec::with_capacity(max_len);
                for _ in 0..max_len {
                    let mut next = vec![BigInt::zero(); n];
                    for (i, x) in v.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        for &j in &self.successors[i] {
                            next[j] += x;
                        }
                    }
                    out.push(next[s].clone());
                    v = next;
                }
                out
            })
            .collect();
        (0..max_len)
            .map(|k| per_start.iter().map(|row| &row[k]).sum())
            .collect()
    }

    /// Counts prime cycles (rotation classes of primitive closed walks) of
    /// each length up to `max_len` by explicit enumeration.
    ///
    /// Each prime cycle is counted once, through its least rotation, which
    /// is a Lyndon word starting at its smallest vertex `s`. The walk from
    /// `s` only visits vertices `>= s` and is cut as soon as it stops being
    /// a prefix of a necklace (the Fredricksen-Kessler-Maiorana test).
    /// `budget` caps the total number of search steps.
    pub fn enumerate_prime_cycles(
        &self,
        max_len: usize,
        budget: u64,
    ) -> Result<BTreeMap<usize, u64>> {
        let n = self.n_vertices();
        let results: Vec<Result<(BTreeMap<usize, u64>, u64)>> = (0..n)
            .into_par_iter()
            .map(|s| self.primes_from(s, max_len, budget))
            .collect();
        let mut total = BTreeMap::new();
        let mut steps = 0u64;
        for r in results {
            let (counts, used) = r?;
            steps += used;
            if steps > budget {
                return Err(Error::EnumerationTooLarge { limit: budget });
            }
            for (len, c) in counts {
                *total.entry(len).or_insert(0) += c;
            }
        }
        Ok(total)
    }

    fn primes_from(
        &self,
        s: usize,
        max_len: usize,
        budget: u64,
    ) -> Result<(BTreeMap<usize, u64>, u64)> {
        let n = self.n_vertices();
        // Backward BFS distance to s inside the vertices >= s.
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, j) in self.arcs() {
            if i >= s && j >= s {
                preds[j].push(i);
            }
        }
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &p in &preds[x] {
                if dist[p] == usize::MAX {
                    dist[p] = dist[x] + 1;
                    queue.push_back(p);
                }
            }
        }
        let mut counts = BTreeMap::new();
        let mut steps = 0u64;
        let mut path = vec![s];
        // Successor cursors and necklace-prefix periods, aligned with `path`.
        let mut cursor = vec![0usize];
        let mut period = vec![1usize];
        while let Some(pos) = cursor.last_mut() {
            let v = *path.last().expect("path tracks cursor");
            let succ = &self.successors[v];
            if *pos >= succ.len() {
                cursor.pop();
                path.pop();
                period.pop();
                continue;
            }
            let w = succ[*pos];
            *pos += 1;
            steps += 1;
            if steps > budget {
                return Err(Error::EnumerationTooLarge { limit: budget });
            }
            let len = path.len();
            let p = *period.last().expect("period tracks path");
            if w == s {
                if p == len {
                    debug_assert!(is_least_rotation(&path) && is_primitive(&path));
                    *counts.entry(len).or_insert(0) += 1;
                }
                // keep walking: a prime cycle may pass through s again
                if len >= max_len {
                    continue;
                }
            } else if w < s || dist[w] == usize::MAX || len + dist[w] > max_len {
                continue;
            }
            let next_period = match w.cmp(&path[len - p]) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => p,
                std::cmp::Ordering::Greater => len + 1,
            };
            path.push(w);
            cursor.push(0);
            period.push(next_period);
        }
        Ok((counts, steps))
    }
}

fn is_least_rotation(seq: &[usize]) -> bool {
    let n = seq.len();
    (1..n).all(|r| {
        for k in 0..n {
            let a = seq[k];
            let b = seq[(k + r) % n];
            if a != b {
                return a < b;
            }
        }
        true
    })
}

fn is_primitive(seq: &[usize]) -> bool {
    let n = seq.len();
    (1..n)
        .filter(|p| n.is_multiple_of(*p))
        .all(|p| (0..n).any(|k| seq[k] != seq[(k + p) % n]))
}
