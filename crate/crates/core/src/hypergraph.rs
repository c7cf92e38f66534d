//! Hypergraphs, their associated bipartite graphs and duals, and the integer
//! matrices built from the incidence relation.
//!
//! A hypergraph is a vertex count plus an ordered list of hyperedges. Each
//! hyperedge is a nonempty set of distinct vertex indices; the same set may
//! appear more than once, and every vertex must lie in at least one
//! hyperedge. Graphs are hypergraphs whose hyperedges all have order 2.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, ParseErrorKind, Result};
use crate::matrix::IntMatrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n_vertices: usize,
    /// Each hyperedge is kept sorted ascending.
    hyperedges: Vec<Vec<usize>>,
}

/// The incidence graph `B_H`: left side indexed by vertices, right side by
/// hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub left_count: usize,
    pub right_count: usize,
    /// `(vertex, hyperedge)` pairs, ordered by hyperedge then vertex.
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn vertex_count(&self) -> usize {
        self.left_count + self.right_count
    }

    /// Degrees in `B_H`, left side first.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for &(v, e) in &self.edges {
            deg[v] += 1;
            deg[self.left_count + e] += 1;
        }
        deg
    }

    /// Adjacency matrix in the block form `[[0, M], [M^t, 0]]`.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut a = IntMatrix::zeros(n, n);
        for &(v, e) in &self.edges {
            let w = self.left_count + e;
            a.set(v, w, a.get(v, w) + 1);
            a.set(w, v, a.get(w, v) + 1);
        }
        a
    }

    /// `Q = D - I` for Bass's determinant formula.
    pub fn q_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.degrees().into_iter().map(|d| BigInt::from(d) - 1))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for &(v, e) in &self.edges {
            adj[v].push(self.left_count + e);
            adj[self.left_count + e].push(v);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == n
    }

    /// Same graph with the roles of the two sides exchanged.
    pub fn swap_sides(&self) -> BipartiteGraph {
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|&(v, e)| (e, v)).collect();
        edges.sort_by_key(|&(a, b)| (b, a));
        BipartiteGraph {
            left_count: self.right_count,
            right_count: self.left_count,
            edges,
        }
    }
}

/// Outcome of [`Hypergraph::validate`]. Never an error: callers decide which
/// flags they need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub n_vertices: usize,
    pub n_hyperedges: usize,
    pub connected: bool,
    pub min_vertex_degree: usize,
    pub min_degree_at_least_two: bool,
    pub min_order: usize,
    pub all_orders_at_least_two: bool,
}

impl ValidationReport {
    /// The hypothesis the zeta factorizations need: connected and every vertex
    /// in at least two hyperedges.
    pub fn zeta_ready(&self) -> bool {
        self.connected && self.min_degree_at_least_two
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.connected {
            out.push("bipartite graph is not connected");
        }
        if !self.min_degree_at_least_two {
            out.push("some vertex lies in fewer than two hyperedges");
        }
        if !self.all_orders_at_least_two {
            out.push("some hyperedge has order below two");
        }
        out
    }
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each hyperedge and checking the invariants.
    pub fn new(n_vertices: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        let mut covered = vec![false; n_vertices];
        let mut sorted = Vec::with_capacity(hyperedges.len());
        for (idx, mut e) in hyperedges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::InvalidHypergraph(format!("hyperedge {idx} is empty")));
            }
            e.sort_unstable();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::InvalidHypergraph(format!(
                        "vertex {} repeated in hyperedge {idx}",
                        w[0]
                    )));
                }
            }
            if let Some(&v) = e.last().filter(|&&v| v >= n_vertices) {
                return Err(Error::InvalidHypergraph(format!(
                    "vertex {v} out of range in hyperedge {idx}"
                )));
            }
            for &v in &e {
                covered[v] = true;
            }
            sorted.push(e);
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::InvalidHypergraph(format!("vertex {v} lies in no hyperedge")));
        }
        Ok(Hypergraph {
            n_vertices,
            hyperedges: sorted,
        })
    }

    /// A graph given by its edge list, as a hypergraph of order-2 hyperedges.
    pub fn from_edges(n_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n_vertices, edges.iter().map(|&(a, b)| vec![a, b]).collect())
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_hyperedges(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn hyperedge(&self, e: usize) -> &[usize] {
        &self.hyperedges[e]
    }

    pub fn orders(&self) -> Vec<usize> {
        self.hyperedges.iter().map(Vec::len).collect()
    }

    /// `sum |e|`, which is also the edge count of `B_H`.
    pub fn total_order(&self) -> usize {
        self.hyperedges.iter().map(Vec::len).sum()
    }

    /// Number of hyperedges containing each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertices];
        for e in &self.hyperedges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn is_graph(&self) -> bool {
        self.hyperedges.iter().all(|e| e.len() == 2)
    }

    pub fn bipartite(&self) -> BipartiteGraph {
        let edges = self
            .hyperedges
            .iter()
            .enumerate()
            .flat_map(|(j, e)| e.iter().map(move |&v| (v, j)))
            .collect();
        BipartiteGraph {
            left_count: self.n_vertices,
            right_count: self.hyperedges.len(),
            edges,
        }
    }

    /// The dual: one vertex per hyperedge, one hyperedge per vertex.
    pub fn dual(&self) -> Hypergraph {
        let mut edges = vec![Vec::new(); self.n_vertices];
        for (j, e) in self.hyperedges.iter().enumerate() {
            for &v in e {
                edges[v].push(j);
            }
        }
        Hypergraph {
            n_vertices: self.hyperedges.len(),
            hyperedges: edges,
        }
    }

    /// Vertex-by-hyperedge 0/1 incidence matrix `M`.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n_vertices, self.hyperedges.len());
        for (j, e) in self.hyperedges.iter().enumerate() {
            for &v in e {
                m.set(v, j, BigInt::from(1));
            }
        }
        m
    }

    /// Diagonal of vertex degrees, `D_V`.
    pub fn degree_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.vertex_degrees().into_iter().map(BigInt::from))
    }

    /// `A = M M^t - D_V`: entry `(i, j)` counts length-2 paths `v_i, e, v_j` in
    /// `B_H` that do not backtrack.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let m = self.incidence_matrix();
        &(&m * &m.transpose()) - &self.degree_matrix()
    }

    /// `Some((d, r))` when every vertex lies in `d` hyperedges and every
    /// hyperedge has order `r`.
    pub fn regularity(&self) -> Option<(usize, usize)> {
        let deg = self.vertex_degrees();
        let d = *deg.first()?;
        let r = self.hyperedges.first()?.len();
        (deg.iter().all(|&x| x == d) && self.hyperedges.iter().all(|e| e.len() == r))
            .then_some((d, r))
    }

    /// Euler number `|V(B_H)| - |E(B_H)|`.
    pub fn euler_chi_bipartite(&self) -> i64 {
        (self.n_vertices + self.hyperedges.len()) as i64 - self.total_order() as i64
    }

    pub fn validate(&self) -> ValidationReport {
        let min_vertex_degree = self.vertex_degrees().into_iter().min().unwrap_or(0);
        let min_order = self.hyperedges.iter().map(Vec::len).min().unwrap_or(0);
        ValidationReport {
            n_vertices: self.n_vertices,
            n_hyperedges: self.hyperedges.len(),
            connected: self.bipartite().is_connected(),
            min_vertex_degree,
            min_degree_at_least_two: min_vertex_degree >= 2,
            min_order,
            all_orders_at_least_two: min_order >= 2,
        }
    }

    /// Repeatedly deletes degree-1 vertices of `B_H`: a vertex lying in a
    /// single hyperedge is removed from it, and a hyperedge of order one is
    /// dropped. Vertices and hyperedges are renumbered in their original
    /// relative order. Neither deletion changes the zeta function.
    pub fn prune_leaves(&self) -> Hypergraph {
        let mut alive_v = vec![true; self.n_vertices];
        let mut edges: Vec<Option<Vec<usize>>> =
            self.hyperedges.iter().cloned().map(Some).collect();
        loop {
            let mut changed = false;
            let mut deg = vec![0usize; self.n_vertices];
            for e in edges.iter().flatten() {
                for &v in e {
                    deg[v] += 1;
                }
            }
            for v in 0..self.n_vertices {
                if alive_v[v] && deg[v] <= 1 {
                    alive_v[v] = false;
                    changed = true;
                }
            }
            for slot in edges.iter_mut() {
                if let Some(e) = slot {
                    e.retain(|&v| alive_v[v]);
                    if e.len() <= 1 {
                        *slot = None;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        // Vertices still alive have degree >= 2 in surviving hyperedges.
        let mut new_index = vec![usize::MAX; self.n_vertices];
        let mut next = 0;
        for v in 0..self.n_vertices {
            if alive_v[v] {
                new_index[v] = next;
                next += 1;
            }
        }
        let hyperedges = edges
            .into_iter()
            .flatten()
            .map(|e| e.into_iter().map(|v| new_index[v]).collect())
            .collect();
        Hypergraph {
            n_vertices: next,
            hyperedges,
        }
    }

    /// Applies a vertex permutation `perm[old] = new`; hyperedge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph> {
        if perm.len() != self.n_vertices {
            return Err(Error::DimensionMismatch("permutation length".into()));
        }
        Hypergraph::new(
            self.n_vertices,
            self.hyperedges
                .iter()
                .map(|e| e.iter().map(|&v| perm[v]).collect())
                .collect(),
        )
    }

    /// Text in the `.hg` format accepted by [`parse_hypergraph`].
    pub fn to_hg_string(&self) -> String {
        let mut out = format!("vertices {}\n", self.n_vertices);
        for e in &self.hyperedges {
            let items: Vec<String> = e.iter().map(ToString::to_string).collect();
            out.push_str("edge ");
            out.push_str(&items.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph({}; {:?})", self.n_vertices, self.hyperedges)
    }
}

/// Parses the line-oriented `.hg` format:
///
/// ```text
/// # comment
/// vertices 4
/// edge 0 1 2
/// edge 0 3
/// ```
///
/// Indices are 0-based. Hyperedge order and duplicates are preserved.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let err = |line: usize, kind| Error::Parse { line, kind };
    let mut n_vertices: Option<(usize, usize)> = None;
    let mut hyperedges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        match (keyword, n_vertices) {
            ("vertices", None) => {
                let n = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or_else(|| err(line_no, ParseErrorKind::Malformed(line.to_string())))?;
                if words.next().is_some() {
                    return Err(err(line_no, ParseErrorKind::Malformed(line.to_string())));
                }
                n_vertices = Some((n, line_no));
            }
            ("edge", Some((n, _))) => {
                let mut e = Vec::new();
                for w in words {
                    let v: usize = w
                        .parse()
                        .map_err(|_| err(line_no, ParseErrorKind::Malformed(line.to_string())))?;
                    if v >= n {
                        return Err(err(
                            line_no,
                            ParseErrorKind::VertexOutOfRange {
                                index: v,
                                n_vertices: n,
                            },
                        ));
                    }
                    if e.contains(&v) {
                        return Err(err(line_no, ParseErrorKind::RepeatedVertex(v)));
                    }
                    e.push(v);
                }
                if e.is_empty() {
                    return Err(err(line_no, ParseErrorKind::EmptyHyperedge));
                }
                hyperedges.push(e);
            }
            ("edge", None) => return Err(err(line_no, ParseErrorKind::MissingHeader)),
            _ => return Err(err(line_no, ParseErrorKind::Malformed(line.to_string()))),
        }
    }
    let (n, header_line) = n_vertices.ok_or_else(|| err(1, ParseErrorKind::MissingHeader))?;
    let mut covered = vec![false; n];
    for e in &hyperedges {
        for &v in e {
            covered[v] = true;
        }
    }
    if let Some(v) = covered.iter().position(|c| !c) {
        return Err(err(header_line, ParseErrorKind::UncoveredVertex(v)));
    }
    Hypergraph::new(n, hyperedges)
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_hypergraph(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG3: &str = "vertices 4\nedge 0 1 2\nedge 0 3\nedge 1 3\nedge 2 3";

    fn k3() -> Hypergraph {
        Hypergraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn parses_hub() {
        let h = parse_hypergraph(FIG3).unwrap();
        assert_eq!(h.n_vertices(), 4);
        assert_eq!(h.orders(), vec![3, 2, 2, 2]);
    }

    #[test]
    fn parses_smallest_input() {
        let h = parse_hypergraph("vertices 1\nedge 0").unwrap();
        assert_eq!(h.n_vertices(), 1);
        assert_eq!(h.hyperedges(), &[vec![0]]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = parse_hypergraph("vertices 2\nedge 0 0").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 2,
                kind: ParseErrorKind::RepeatedVertex(0)
            }
        );
        let e = parse_hypergraph("# c\nvertices 2\nedge 0 1\nedge 0 5").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse {
                line: 4,
                kind: ParseErrorKind::VertexOutOfRange { index: 5, .. }
            }
        ));
        let e = parse_hypergraph("vertices 2\nedge").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, kind: ParseErrorKind::EmptyHyperedge }));
        let e = parse_hypergraph("vertices 2\nedge 0 x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, kind: ParseErrorKind::Malformed(_) }));
        let e = parse_hypergraph("edge 0 1").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, kind: ParseErrorKind::MissingHeader }));
        let e = parse_hypergraph("vertices 3\nedge 0 1").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse {
                line: 1,
                kind: ParseErrorKind::UncoveredVertex(2)
            }
        ));
    }

    #[test]
    fn duplicates_preserved_and_roundtrip() {
        let h = parse_hypergraph("vertices 2\nedge 1 0\nedge 0 1").unwrap();
        assert_eq!(h.n_hyperedges(), 2);
        assert_eq!(h.incidence_matrix().cols(), 2);
        assert_eq!(parse_hypergraph(&h.to_hg_string()).unwrap(), h);
    }

    #[test]
    fn validation_flags() {
        let h = parse_hypergraph(FIG3).unwrap();
        let rep = h.validate();
        assert!(rep.connected && rep.min_degree_at_least_two && rep.all_orders_at_least_two);
        assert_eq!(h.vertex_degrees(), vec![2, 2, 2, 3]);

        let single = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap().validate();
        assert!(single.connected && !single.min_degree_at_least_two);

        let split = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap().validate();
        assert!(!split.connected);
    }

    #[test]
    fn bipartite_of_hub() {
        let b = parse_hypergraph(FIG3).unwrap().bipartite();
        assert_eq!((b.left_count, b.right_count), (4, 4));
        assert_eq!(b.edges.len(), 9);
        let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); 4];
        for &(v, e) in &b.edges {
            by_vertex[v].push(e);
        }
        for list in &mut by_vertex {
            list.sort();
        }
        assert_eq!(by_vertex, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn bipartite_of_triangle_is_six_cycle() {
        let b = k3().bipartite();
        assert_eq!(b.vertex_count(), 6);
        assert_eq!(b.edges.len(), 6);
        assert!(b.degrees().iter().all(|&d| d == 2));
        assert!(b.is_connected());
    }

    #[test]
    fn bipartite_of_single_loopless_edge() {
        let b = Hypergraph::new(1, vec![vec![0]]).unwrap().bipartite();
        assert_eq!(b.edges, vec![(0, 0)]);
    }

    #[test]
    fn dual_of_hub() {
        let h = parse_hypergraph(FIG3).unwrap();
        let d = h.dual();
        assert_eq!(d.n_vertices(), 4);
        assert_eq!(d.hyperedges(), &[vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2, 3]]);
        assert_eq!(d.dual(), h);
        assert_eq!(d.bipartite(), h.bipartite().swap_sides());
        let k3d = k3().dual();
        assert_eq!(k3d.n_vertices(), 3);
        assert_eq!(k3d.orders(), vec![2, 2, 2]);
    }

    #[test]
    fn incidence_and_adjacency() {
        let h = parse_hypergraph(FIG3).unwrap();
        let m = h.incidence_matrix();
        assert_eq!(m.col_sums(), ints(&[3, 2, 2, 2]));
        assert_eq!(m.row_sums(), ints(&[2, 2, 2, 3]));
        let a = h.adjacency_matrix();
        let expected = IntMatrix::from_rows(&[
            vec![0, 1, 1, 1],
            vec![1, 0, 1, 1],
            vec![1, 1, 0, 1],
            vec![1, 1, 1, 0],
        ])
        .unwrap();
        assert_eq!(a, expected);

        let one = Hypergraph::new(1, vec![vec![0]]).unwrap();
        assert_eq!(one.incidence_matrix(), IntMatrix::identity(1));

        let t = k3();
        assert_eq!(t.incidence_matrix().row_sums(), ints(&[2, 2, 2]));
        let a = t.adjacency_matrix();
        assert_eq!(
            a,
            IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap()
        );
    }

    #[test]
    fn regularity_and_euler_number() {
        let k4 = Hypergraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.regularity(), Some((3, 2)));
        assert_eq!(k4.euler_chi_bipartite(), -2);
        let hub = parse_hypergraph(FIG3).unwrap();
        assert_eq!(hub.regularity(), None);
        assert_eq!(hub.euler_chi_bipartite(), -1);
    }

    #[test]
    fn prune_removes_pendant_structure() {
        // triangle with a pendant path 2-3-4 and an order-1 edge on 4
        let h = Hypergraph::new(5, vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![2, 3], vec![3, 4], vec![4]])
            .unwrap();
        let core = h.prune_leaves();
        assert_eq!(core, k3());
        // a lone 3-edge prunes away entirely
        let lone = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap().prune_leaves();
        assert_eq!(lone.n_vertices(), 0);
        assert_eq!(lone.n_hyperedges(), 0);
    }
}
