//! Separating graphs by collapsing cliques into hyperedges.
//!
//! Two graphs with the same spectrum and the same Ihara zeta function can
//! still differ once chosen `k`-cliques are replaced by single hyperedges:
//! the zeta function of the collapsed hypergraph forgets exactly the closed
//! walks that take two consecutive steps inside one collapsed clique.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::IntMatrix;
use crate::poly::{char_poly, IntPoly};
use crate::zeta::{bass_formula, formal_reciprocal, zeta_core, Warning};

/// A simple loopless graph, stored as a hypergraph with order-2 edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph(Hypergraph);

impl Graph {
    pub fn new(n_vertices: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::from_hypergraph(Hypergraph::from_edges(n_vertices, edges)?)
    }

    pub fn from_hypergraph(h: Hypergraph) -> Result<Graph> {
        if !h.is_graph() {
            return Err(Error::NotAGraph("a hyperedge does not have order 2".into()));
        }
        let mut seen = BTreeSet::new();
        for e in h.hyperedges() {
            if !seen.insert((e[0], e[1])) {
                return Err(Error::NotAGraph(format!("duplicate edge {}-{}", e[0], e[1])));
            }
        }
        Ok(Graph(h))
    }

    pub fn n_vertices(&self) -> usize {
        self.0.n_vertices()
    }

    pub fn n_edges(&self) -> usize {
        self.0.n_hyperedges()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.hyperedges().iter().map(|e| (e[0], e[1]))
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        self.0.adjacency_matrix()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.0.vertex_degrees()
    }

    pub fn neighbour_sets(&self) -> Vec<BTreeSet<usize>> {
        let mut nb = vec![BTreeSet::new(); self.n_vertices()];
        for (a, b) in self.edges() {
            nb[a].insert(b);
            nb[b].insert(a);
        }
        nb
    }

    pub fn is_connected(&self) -> bool {
        self.0.validate().connected
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        Ok(Graph(self.0.relabel(perm)?))
    }

    pub fn to_hg_string(&self) -> String {
        self.0.to_hg_string()
    }
}

impl TryFrom<Hypergraph> for Graph {
    type Error = Error;

    fn try_from(h: Hypergraph) -> Result<Graph> {
        Graph::from_hypergraph(h)
    }
}

/// All `k`-cliques, each sorted, in lexicographic order.
pub fn enumerate_cliques(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let nb = g.neighbour_sets();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn extend(
        nb: &[BTreeSet<usize>],
        k: usize,
        candidates: &[usize],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|w| nb[v].contains(w))
                .collect();
            if next.len() + current.len() + 1 < k {
                continue;
            }
            current.push(v);
            extend(nb, k, &next, current, out);
            current.pop();
        }
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let all: Vec<usize> = (0..g.n_vertices()).collect();
    extend(&nb, k, &all, &mut current, &mut out);
    out
}

/// A graph together with the cliques collapsed and the resulting hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseFamily {
    pub base: Graph,
    pub cliques: Vec<Vec<usize>>,
    pub result: Hypergraph,
}

/// Replaces each chosen clique by one hyperedge. Base edges lying in at least
/// one chosen clique are dropped once; the other edges come first in the
/// result, followed by the cliques.
pub fn collapse(g: &Graph, cliques: &[Vec<usize>]) -> Result<CollapseFamily> {
    let nb = g.neighbour_sets();
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    for c in cliques {
        let mut c = c.clone();
        c.sort_unstable();
        c.dedup();
        let is_clique = c.iter().all(|&v| v < g.n_vertices())
            && c.iter()
                .enumerate()
                .all(|(i, &a)| c[i + 1..].iter().all(|b| nb[a].contains(b)));
        if !is_clique || c.len() < 2 {
            return Err(Error::NotAClique(c));
        }
        if !chosen.contains(&c) {
            chosen.push(c);
        }
    }
    chosen.sort();
    let covered = |a: usize, b: usize| chosen.iter().any(|c| c.contains(&a) && c.contains(&b));
    let mut hyperedges: Vec<Vec<usize>> = g
        .edges()
        .filter(|&(a, b)| !covered(a, b))
        .map(|(a, b)| vec![a, b])
        .collect();
    hyperedges.extend(chosen.iter().cloned());
    Ok(CollapseFamily {
        base: g.clone(),
        result: Hypergraph::new(g.n_vertices(), hyperedges)?,
        cliques: chosen,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    /// Each `k`-clique on its own.
    AllSingletons,
    /// Every maximum-size family of pairwise vertex-disjoint `k`-cliques.
    DisjointPairs,
    /// All `k`-cliques at once.
    AllCliquesAtOnce,
    /// Caller-chosen collapse choices.
    Explicit(Vec<Vec<Vec<usize>>>),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::AllSingletons => "all-singletons",
            Mode::DisjointPairs => "disjoint-pairs",
            Mode::AllCliquesAtOnce => "all-at-once",
            Mode::Explicit(_) => "explicit",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "all-singletons" | "singletons" => Ok(Mode::AllSingletons),
            "disjoint-pairs" | "disjoint" => Ok(Mode::DisjointPairs),
            "all-at-once" | "all-cliques-at-once" | "all" => Ok(Mode::AllCliquesAtOnce),
            _ => Err(Error::InvalidHypergraph(format!("unknown collapse mode {s:?}"))),
        }
    }
}

/// Maximum-size sets of pairwise vertex-disjoint cliques.
pub fn maximum_disjoint_families(cliques: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    fn search(
        cliques: &[Vec<usize>],
        start: usize,
        used: &mut BTreeSet<usize>,
        current: &mut Vec<usize>,
        best: &mut (usize, Vec<Vec<usize>>),
    ) {
        if current.len() > best.0 {
            *best = (current.len(), Vec::new());
        }
        if current.len() == best.0 {
            best.1.push(current.clone());
        }
        for i in start..cliques.len() {
            if cliques[i].iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(cliques[i].iter().copied());
            current.push(i);
            search(cliques, i + 1, used, current, best);
            current.pop();
            for v in &cliques[i] {
                used.remove(v);
            }
        }
    }
    let mut best = (0, Vec::new());
    search(cliques, 0, &mut BTreeSet::new(), &mut Vec::new(), &mut best);
    best.1
        .into_iter()
        .map(|ix| ix.into_iter().map(|i| cliques[i].clone()).collect())
        .collect()
}

/// The collapse choices a mode generates. A graph without `k`-cliques gets
/// the single empty choice in every mode.
pub fn collapse_choices(g: &Graph, k: usize, mode: &Mode) -> Vec<Vec<Vec<usize>>> {
    if let Mode::Explicit(list) = mode {
        return list.clone();
    }
    let cliques = enumerate_cliques(g, k);
    if cliques.is_empty() {
        return vec![Vec::new()];
    }
    match mode {
        Mode::AllSingletons => cliques.into_iter().map(|c| vec![c]).collect(),
        Mode::DisjointPairs => maximum_disjoint_families(&cliques),
        Mode::AllCliquesAtOnce => vec![cliques],
        Mode::Explicit(_) => unreachable!(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantMultiset {
    /// One reciprocal zeta per collapse choice, sorted.
    pub polys: Vec<IntPoly>,
    /// Warnings raised for the choice at the given index (before sorting).
    pub warnings: Vec<(usize, Warning)>,
    pub choices: Vec<Vec<Vec<usize>>>,
}

pub fn invariant_multiset(g: &Graph, k: usize, mode: &Mode) -> Result<InvariantMultiset> {
    let choices = collapse_choices(g, k, mode);
    let mut polys = Vec::with_capacity(choices.len());
    let mut warnings = Vec::new();
    for (i, choice) in choices.iter().enumerate() {
        let family = collapse(g, choice)?;
        let (p, w) = formal_reciprocal(&family.result)?;
        warnings.extend(w.into_iter().map(|w| (i, w)));
        polys.push(p);
    }
    polys.sort();
    Ok(InvariantMultiset {
        polys,
        warnings,
        choices,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The invariant differs, so the graphs are not isomorphic.
    Distinguished,
    /// Equal invariants; nothing is claimed about isomorphism.
    NotDistinguishedByThisInvariant,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Distinguished => "Distinguished",
            Verdict::NotDistinguishedByThisInvariant => "NotDistinguishedByThisInvariant",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub cospectral: bool,
    pub same_ihara: bool,
    pub invariant_multisets_equal: bool,
    pub verdict: Verdict,
    pub first: InvariantMultiset,
    pub second: InvariantMultiset,
}

pub fn distinguish(g1: &Graph, g2: &Graph, k: usize, mode: &Mode) -> Result<Comparison> {
    let cospectral = char_poly(&g1.adjacency_matrix())? == char_poly(&g2.adjacency_matrix())?;
    let same_ihara = formal_reciprocal(g1.as_hypergraph())?.0 == formal_reciprocal(g2.as_hypergraph())?.0;
    let first = invariant_multiset(g1, k, mode)?;
    let second = invariant_multiset(g2, k, mode)?;
    let equal = first.polys == second.polys;
    Ok(Comparison {
        cospectral,
        same_ihara,
        invariant_multisets_equal: equal,
        verdict: if equal {
            Verdict::NotDistinguishedByThisInvariant
        } else {
            Verdict::Distinguished
        },
        first,
        second,
    })
}

/// Reciprocal Ihara zeta by Bass's formula on the graph itself,
/// `(1 - u^2)^(-chi) det(I - uA + u^2 Q)` with `chi = |V| - |E|`, after
/// removing degree-1 vertices.
pub fn ihara_zeta_graph(g: &Graph) -> Result<IntPoly> {
    let (core, _) = zeta_core(g.as_hypergraph())?;
    let a = core.adjacency_matrix();
    let n = a.rows();
    let q = &core.degree_matrix() - &IntMatrix::identity(n);
    let chi = n as i64 - core.n_hyperedges() as i64;
    bass_formula(&a, &q, chi)
}
