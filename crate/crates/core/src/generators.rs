//! Deterministic constructions of the example graph families.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand_core::{RngCore, SeedableRng};

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub enum GenError {
    ParamTooSmall { family: &'static str, min: u32, got: u32 },
    BadProbability { p: f64 },
    RetryExhausted { attempts: u32 },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::ParamTooSmall { family, min, got } => {
                write!(f, "{family} requires parameter >= {min}, got {got}")
            }
            GenError::BadProbability { p } => write!(f, "edge probability {p} not in (0, 1]"),
            GenError::RetryExhausted { attempts } => {
                write!(f, "no connected sample after {attempts} attempts")
            }
        }
    }
}

impl core::error::Error for GenError {}

/// Cycle graph `C_n`: `n` vertices in a ring.
pub fn cycle_graph(n: u32) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::ParamTooSmall { family: "cycle", min: 3, got: n });
    }
    let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges).expect("valid"))
}

pub fn path_graph(n: u32) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::ParamTooSmall { family: "path", min: 1, got: n });
    }
    let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edges(n, &edges).expect("valid"))
}

pub fn complete_graph(n: u32) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::ParamTooSmall { family: "complete", min: 1, got: n });
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("valid"))
}

/// Octahedron graph `K_{2,2,2}`: all pairs among six vertices except the
/// three antipodal ones.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6u32 {
        for v in u + 1..6 {
            if v != u + 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(6, &edges).expect("valid")
}

/// 1-skeleton of the `d`-dimensional hypercube: ids are bit strings,
/// edges flip one bit. `d = 3` is the unit-cube skeleton.
pub fn hypercube_skeleton(d: u32) -> Result<Graph, GenError> {
    if d < 1 {
        return Err(GenError::ParamTooSmall { family: "hypercube", min: 1, got: d });
    }
    let n = 1u32 << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("valid"))
}

/// Unit-cube skeleton with one diagonal per face, chosen so that the clique
/// complex is a triangulated 2-sphere (12 triangles, no 4-cliques). This is
/// asserted at build time.
pub fn cube_with_diagonals() -> Graph {
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for v in 0..8u32 {
        for b in 0..3 {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    edges.extend([(0, 3), (5, 6), (1, 4), (2, 7), (0, 6), (3, 5)]);
    let g = Graph::from_edges(8, &edges).expect("valid");
    debug_sphere_check(&g);
    g
}

/// Panics unless the clique complex of `g` is a triangulated 2-sphere.
fn debug_sphere_check(g: &Graph) {
    let n = g.n_vertices() as u32;
    let mut triangles: Vec<[u32; 3]> = Vec::new();
    for u in 0..n {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            for &w in g.neighbors(v).iter().filter(|&&w| w > v) {
                if g.has_edge(u, w) {
                    triangles.push([u, v, w]);
                    assert!(
                        !g.neighbors(w).iter().any(|&x| {
                            x > w && g.has_edge(u, x) && g.has_edge(v, x)
                        }),
                        "unexpected 4-clique at [{u},{v},{w}]"
                    );
                }
            }
        }
    }
    assert_eq!(triangles.len(), 12, "expected 12 triangles");
    let mut edge_count: alloc::collections::BTreeMap<(u32, u32), u32> =
        alloc::collections::BTreeMap::new();
    for t in &triangles {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            *edge_count.entry((a, b)).or_insert(0) += 1;
        }
    }
    assert!(edge_count.values().all(|&c| c == 2), "non-manifold edge");
    assert_eq!(edge_count.len(), g.n_edges(), "stray edge outside the surface");
}

/// Triangulated box surface of dimension `1 x 1 x m`: `m+1` rings of four
/// vertices (`ring i` vertex `k` is id `4i+k`), each side square split by
/// the diagonal towards `(k+1) mod 4`, each end square split once.
pub fn thin_box(m: u32) -> Result<Graph, GenError> {
    if m < 1 {
        return Err(GenError::ParamTooSmall { family: "thin_box", min: 1, got: m });
    }
    let id = |ring: u32, k: u32| 4 * ring + (k % 4);
    let mut edges = Vec::new();
    for i in 0..=m {
        for k in 0..4 {
            edges.push((id(i, k), id(i, k + 1)));
        }
    }
    for i in 0..m {
        for k in 0..4 {
            edges.push((id(i, k), id(i + 1, k)));
            edges.push((id(i, k), id(i + 1, k + 1)));
        }
    }
    edges.push((id(0, 0), id(0, 2)));
    edges.push((id(m, 0), id(m, 2)));
    Ok(Graph::from_edges(4 * (m + 1), &edges).expect("valid"))
}

/// The canonical 2-cycle of [`thin_box`]: `8m+4` triangles.
pub fn thin_box_surface(m: u32) -> Vec<[u32; 3]> {
    assert!(m >= 1);
    let id = |ring: u32, k: u32| 4 * ring + (k % 4);
    let mut tris = Vec::with_capacity((8 * m + 4) as usize);
    tris.push(sorted3([id(0, 0), id(0, 1), id(0, 2)]));
    tris.push(sorted3([id(0, 0), id(0, 2), id(0, 3)]));
    tris.push(sorted3([id(m, 0), id(m, 1), id(m, 2)]));
    tris.push(sorted3([id(m, 0), id(m, 2), id(m, 3)]));
    for i in 0..m {
        for k in 0..4 {
            let (a, b) = (id(i, k), id(i, k + 1));
            let (a1, b1) = (id(i + 1, k), id(i + 1, k + 1));
            tris.push(sorted3([a, b, b1]));
            tris.push(sorted3([a, b1, a1]));
        }
    }
    tris.sort_unstable();
    tris
}

fn sorted3(mut t: [u32; 3]) -> [u32; 3] {
    t.sort_unstable();
    t
}

/// 1-skeleton of the degree-`m` edgewise subdivision of the tetrahedron
/// boundary: `2m^2 + 2` vertices, `6m^2` edges, `4m^2` surface triangles.
pub fn tetrahedron_surface(m: u32) -> Result<Graph, GenError> {
    if m < 1 {
        return Err(GenError::ParamTooSmall { family: "tetrahedron_surface", min: 1, got: m });
    }
    let (vertices, edges, _) = tetrahedron_lattice(m);
    let g = Graph::from_edges(vertices as u32, &edges).expect("valid");
    debug_assert_eq!(g.n_vertices() as u32, 2 * m * m + 2);
    debug_assert_eq!(g.n_edges() as u32, 6 * m * m);
    Ok(g)
}

/// The canonical 2-cycle of [`tetrahedron_surface`]: `4m^2` triangles.
pub fn tetrahedron_surface_triangles(m: u32) -> Vec<[u32; 3]> {
    assert!(m >= 1);
    let (_, _, mut tris) = tetrahedron_lattice(m);
    tris.sort_unstable();
    tris
}

/// Shared lattice construction. Points carry a weight per tetrahedron
/// corner summing to `m`; ids are assigned in sorted key order.
fn tetrahedron_lattice(m: u32) -> (usize, Vec<(u32, u32)>, Vec<[u32; 3]>) {
    const FACES: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut keys: BTreeSet<[u32; 4]> = BTreeSet::new();
    for face in FACES {
        for i in 0..=m {
            for j in 0..=m - i {
                let k = m - i - j;
                let mut key = [0u32; 4];
                key[face[0]] = i;
                key[face[1]] = j;
                key[face[2]] = k;
                keys.insert(key);
            }
        }
    }
    let keys: Vec<[u32; 4]> = keys.into_iter().collect();
    let id_of = |key: &[u32; 4]| keys.binary_search(key).expect("present") as u32;

    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut tris: Vec<[u32; 3]> = Vec::new();
    for face in FACES {
        let key_at = |i: u32, j: u32, k: u32| {
            let mut key = [0u32; 4];
            key[face[0]] = i;
            key[face[1]] = j;
            key[face[2]] = k;
            id_of(&key)
        };
        // Up triangles: one per lattice point of weight m-1.
        for i in 0..m {
            for j in 0..m - i {
                let k = m - 1 - i - j;
                let a = key_at(i + 1, j, k);
                let b = key_at(i, j + 1, k);
                let c = key_at(i, j, k + 1);
                for (u, v) in [(a, b), (a, c), (b, c)] {
                    edges.insert((u.min(v), u.max(v)));
                }
                tris.push(sorted3([a, b, c]));
            }
        }
        // Down triangles: one per lattice point of weight m-2.
        if m >= 2 {
            for i in 0..m - 1 {
                for j in 0..m - 1 - i {
                    let k = m - 2 - i - j;
                    let a = key_at(i + 1, j + 1, k);
                    let b = key_at(i + 1, j, k + 1);
                    let c = key_at(i, j + 1, k + 1);
                    tris.push(sorted3([a, b, c]));
                }
            }
        }
    }
    (keys.len(), edges.into_iter().collect(), tris)
}

const GNP_MAX_ATTEMPTS: u32 = 512;

/// Erdős–Rényi `G(n, p)` conditioned on connectivity: resamples until the
/// graph is connected, deterministically for a fixed seed.
pub fn gnp_random(n: u32, p: f64, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::ParamTooSmall { family: "gnp", min: 1, got: n });
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(GenError::BadProbability { p });
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    // Integer threshold sampling keeps generation exactly reproducible.
    let threshold: u64 = if p >= 1.0 { u64::MAX } else { (p * (u64::MAX as f64)) as u64 };
    for _ in 0..GNP_MAX_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let keep = if p >= 1.0 { true } else { rng.next_u64() < threshold };
                if keep {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("valid");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenError::RetryExhausted { attempts: GNP_MAX_ATTEMPTS })
}

/// A named example family with parameters. Generation is a pure function
/// of the spec and the seed (the seed only matters for `Gnp`).
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Cycle { n: u32 },
    Path { n: u32 },
    Complete { n: u32 },
    Hypercube { d: u32 },
    CubeWithDiagonals,
    Octahedron,
    ThinBox { m: u32 },
    TetrahedronSurface { m: u32 },
    Gnp { n: u32, p: f64 },
}

impl FamilySpec {
    pub fn generate(&self, seed: u64) -> Result<Graph, GenError> {
        match *self {
            FamilySpec::Cycle { n } => cycle_graph(n),
            FamilySpec::Path { n } => path_graph(n),
            FamilySpec::Complete { n } => complete_graph(n),
            FamilySpec::Hypercube { d } => hypercube_skeleton(d),
            FamilySpec::CubeWithDiagonals => Ok(cube_with_diagonals()),
            FamilySpec::Octahedron => Ok(octahedron()),
            FamilySpec::ThinBox { m } => thin_box(m),
            FamilySpec::TetrahedronSurface { m } => tetrahedron_surface(m),
            FamilySpec::Gnp { n, p } => gnp_random(n, p, seed),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Hypercube { .. } => "hypercube",
            FamilySpec::CubeWithDiagonals => "cube_with_diagonals",
            FamilySpec::Octahedron => "octahedron",
            FamilySpec::ThinBox { .. } => "thin_box",
            FamilySpec::TetrahedronSurface { .. } => "tetrahedron_surface",
            FamilySpec::Gnp { .. } => "gnp",
        }
    }

    pub fn params(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        match *self {
            FamilySpec::Cycle { n } | FamilySpec::Path { n } | FamilySpec::Complete { n } => {
                let _ = write!(s, "{n}");
            }
            FamilySpec::Hypercube { d } => {
                let _ = write!(s, "{d}");
            }
            FamilySpec::CubeWithDiagonals | FamilySpec::Octahedron => {}
            FamilySpec::ThinBox { m } | FamilySpec::TetrahedronSurface { m } => {
                let _ = write!(s, "{m}");
            }
            FamilySpec::Gnp { n, p } => {
                let _ = write!(s, "{n},{p}");
            }
        }
        s
    }
}
