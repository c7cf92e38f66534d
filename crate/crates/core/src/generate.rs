//! Named instances and seeded random generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::distinguish::Graph;
use crate::hypergraph::Hypergraph;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("built-in graph is valid")
}

pub fn complete_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    graph(n, &edges)
}

pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    graph(n, &edges)
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let edges: Vec<_> = (0..m).flat_map(|a| (0..n).map(move |b| (a, m + b))).collect();
    graph(m + n, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    graph(10, &edges)
}

pub fn cube() -> Graph {
    let edges: Vec<_> = (0..8usize)
        .flat_map(|v| (0..3).map(move |bit| (v, v ^ (1 << bit))))
        .filter(|(a, b)| a < b)
        .collect();
    graph(8, &edges)
}

/// Points and lines of the projective plane of order 2.
pub fn fano() -> Hypergraph {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    Hypergraph::new(7, lines.iter().map(|l| l.to_vec()).collect()).expect("Fano plane")
}

/// Five vertices, hyperedges `{0,1,2}`, `{0,3,4}`, `{1,3}`, `{2,4}`.
pub fn bowtie() -> Hypergraph {
    Hypergraph::new(5, vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3], vec![2, 4]]).expect("bowtie")
}

/// One 3-edge `{0,1,2}` and 2-edges joining each of its vertices to vertex 3.
pub fn hub() -> Hypergraph {
    Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]).expect("hub")
}

/// Triangular prism: inner triangle `0 1 2`, outer triangle `3 4 5`.
pub fn prism() -> Graph {
    graph(6, &[(0, 3), (2, 5), (1, 4), (3, 4), (4, 5), (5, 3), (0, 1), (1, 2), (2, 0)])
}

/// Vertex `v_ab` (`a` in 1..=4, `b` in 1..=7) of the 28-vertex pair.
fn st(label: u32) -> usize {
    let a = (label / 10) as usize;
    let b = (label % 10) as usize;
    4 * (b - 1) + (a - 1)
}

fn st_graph(extra: &[(u32, u32)]) -> Graph {
    let mut edges = Vec::new();
    for b in 1..=7 {
        for a in 2..=4 {
            edges.push((st(10 + b), st(10 * a + b)));
        }
    }
    edges.extend(extra.iter().map(|&(x, y)| (st(x), st(y))));
    graph(28, &edges)
}

/// First of two cospectral 3-regular graphs on 28 vertices with equal Ihara
/// zeta functions; its triangles `{12,32,42}` and `{14,24,44}` are disjoint.
pub fn stark_terras_x1() -> Graph {
    st_graph(&[
        (41, 22), (42, 23), (43, 34), (45, 26), (46, 27), (44, 24), (24, 34), (42, 32),
        (47, 25), (47, 35), (27, 36), (37, 45), (37, 25), (46, 33), (26, 35), (36, 41),
        (44, 31), (43, 21), (23, 32), (33, 21), (22, 31),
    ])
}

/// Second graph of the pair; its four triangles sit in two diamonds.
pub fn stark_terras_x2() -> Graph {
    st_graph(&[
        (24, 34), (24, 44), (35, 45), (46, 37),
        (47, 26), (47, 33), (27, 45), (27, 35), (37, 26), (46, 25), (36, 25), (36, 42),
        (44, 31), (34, 41), (43, 22), (43, 32), (23, 41), (23, 31), (33, 22), (42, 21),
        (32, 21),
    ])
}

/// Connected 3-regular graph on 16 vertices whose second eigenvalue exceeds
/// `2 sqrt(2)`: `K_{3,3}` and the cube, each with one edge subdivided, joined
/// by a bridge between the two subdivision vertices.
pub fn non_ramanujan_cubic() -> Graph {
    let mut edges = Vec::new();
    // K_{3,3} on 0..6 without 0-3; vertex 6 subdivides it
    for a in 0..3 {
        for b in 3..6 {
            if (a, b) != (0, 3) {
                edges.push((a, b));
            }
        }
    }
    edges.extend([(0, 6), (6, 3)]);
    // cube on 7..15 without 7-8; vertex 15 subdivides it
    for (a, b) in cube().edges() {
        if (a, b) != (0, 1) {
            edges.push((7 + a, 7 + b));
        }
    }
    edges.extend([(7, 15), (15, 8), (6, 15)]);
    graph(16, &edges)
}

/// Rejection-samples a connected hypergraph with every vertex degree and
/// every order at least 2. Sizes stay within the given bounds; when
/// `max_line_vertices` is set, `sum |e|(|e|-1)` (the line-graph size) does too.
pub fn random_hypergraph<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_order: usize,
    max_line_vertices: Option<usize>,
) -> Hypergraph {
    let max_vertices = max_vertices.max(3);
    let max_order = max_order.max(2);
    loop {
        let n = rng.gen_range(3..=max_vertices);
        let m = rng.gen_range(2..=n + 2);
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let k = rng.gen_range(2..=max_order.min(n));
            let mut verts: Vec<usize> = (0..n).collect();
            verts.shuffle(rng);
            verts.truncate(k);
            edges.push(verts);
        }
        let line: usize = edges.iter().map(|e| e.len() * (e.len() - 1)).sum();
        if max_line_vertices.is_some_and(|cap| line > cap) {
            continue;
        }
        if let Ok(h) = Hypergraph::new(n, edges) {
            if h.validate().zeta_ready() {
                return h;
            }
        }
    }
}

/// Random connected bipartite graph with minimum degree 2 and sides of 2 to
/// `max_side` vertices.
pub fn random_bipartite_graph<R: Rng>(rng: &mut R, max_side: usize) -> Graph {
    let max_side = max_side.max(2);
    loop {
        let a = rng.gen_range(2..=max_side);
        let b = rng.gen_range(2..=max_side);
        let p: f64 = rng.gen_range(0.4..0.9);
        let edges: Vec<_> = (0..a)
            .flat_map(|x| (0..b).map(move |y| (x, a + y)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if let Ok(g) = Graph::new(a + b, &edges) {
            if g.as_hypergraph().validate().zeta_ready() {
                return g;
            }
        }
    }
}

/// Random connected simple graph with minimum degree 2.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if let Ok(g) = Graph::new(n, &edges) {
            if g.as_hypergraph().validate().zeta_ready() {
                return g;
            }
        }
    }
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random connected `(d, r)`-regular hypergraph on `n` vertices by the
/// configuration model, or `None` if `n d` is not divisible by `r` or no
/// sample succeeds within `attempts`.
pub fn random_regular_hypergraph<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    r: usize,
    attempts: usize,
) -> Option<Hypergraph> {
    if r == 0 || !(n * d).is_multiple_of(r) || r > n {
        return None;
    }
    let m = n * d / r;
    for _ in 0..attempts {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        stubs.shuffle(rng);
        let edges: Vec<Vec<usize>> = (0..m).map(|e| stubs[e * r..(e + 1) * r].to_vec()).collect();
        if let Ok(h) = Hypergraph::new(n, edges) {
            if h.validate().connected {
                return Some(h);
            }
        }
    }
    None
}

/// Regular instances used throughout the test suites.
pub fn regular_zoo() -> Vec<(&'static str, Hypergraph)> {
    vec![
        ("K4", complete_graph(4).as_hypergraph().clone()),
        ("K4*", complete_graph(4).as_hypergraph().dual()),
        ("K5", complete_graph(5).as_hypergraph().clone()),
        ("K3,3", complete_bipartite(3, 3).as_hypergraph().clone()),
        ("C6", cycle_graph(6).as_hypergraph().clone()),
        ("C5", cycle_graph(5).as_hypergraph().clone()),
        ("Petersen", petersen().as_hypergraph().clone()),
        ("cube", cube().as_hypergraph().clone()),
        ("Fano", fano()),
        ("nonramanujan16", non_ramanujan_cubic().as_hypergraph().clone()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn named_families_are_regular() {
        assert_eq!(petersen().as_hypergraph().regularity(), Some((3, 2)));
        assert_eq!(cube().as_hypergraph().regularity(), Some((3, 2)));
        assert_eq!(fano().regularity(), Some((3, 3)));
        let nr = non_ramanujan_cubic();
        assert_eq!(nr.n_vertices(), 16);
        assert_eq!(nr.as_hypergraph().regularity(), Some((3, 2)));
        assert!(nr.is_connected());
        for g in [stark_terras_x1(), stark_terras_x2()] {
            assert_eq!(g.n_vertices(), 28);
            assert_eq!(g.n_edges(), 42);
            assert_eq!(g.as_hypergraph().regularity(), Some((3, 2)));
        }
    }

    #[test]
    fn random_generators_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let h = random_hypergraph(&mut rng, 8, 4, Some(30));
            assert!(h.validate().zeta_ready());
            assert!(h.n_vertices() <= 8 && h.orders().iter().all(|&k| (2..=4).contains(&k)));
        }
        let g = random_bipartite_graph(&mut rng, 4);
        assert!(g.as_hypergraph().validate().zeta_ready());
        let h = random_regular_hypergraph(&mut rng, 6, 2, 3, 100).unwrap();
        assert_eq!(h.regularity(), Some((2, 3)));
    }
}
