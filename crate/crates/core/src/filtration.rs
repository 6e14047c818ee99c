//! The power filtration as a single filtered flag complex: every simplex
//! with the integer scale at which it first appears.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::graph::DistanceMatrix;

/// A simplex as a strictly increasing vertex id sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Simplex {
    vertices: Vec<u32>,
}

impl Simplex {
    /// `vertices` must be strictly increasing and nonempty.
    pub fn new(vertices: Vec<u32>) -> Simplex {
        assert!(!vertices.is_empty(), "simplex needs at least one vertex");
        assert!(vertices.windows(2).all(|w| w[0] < w[1]), "vertices must be strictly increasing");
        Simplex { vertices }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// Flag complex of a power filtration, truncated to `max_dim` and
/// `max_scale`. Simplex ids are positions in the filtration order
/// `(value, dim, lexicographic vertices)`, so every snapshot is a prefix.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    values: Vec<u16>,
    vertex_lists: Vec<Vec<u32>>,
    /// Per dimension, simplex ids in filtration order.
    by_dim: Vec<Vec<u32>>,
    /// Per dimension, simplex ids sorted by vertex list, for facet lookup.
    lex_index: Vec<Vec<u32>>,
    n_vertices: usize,
    max_dim: usize,
    max_scale: u16,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    /// Enumeration would exceed the simplex budget; holds the count reached.
    BudgetExceeded { count: usize, budget: usize },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::BudgetExceeded { count, budget } => {
                write!(f, "simplex count {count} exceeds budget {budget}")
            }
        }
    }
}

impl core::error::Error for BuildError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleOutOfRange {
    pub scale: u16,
    pub max_scale: u16,
}

impl fmt::Display for ScaleOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "scale {} out of range (max {})", self.scale, self.max_scale)
    }
}

impl core::error::Error for ScaleOutOfRange {}

pub const DEFAULT_SIMPLEX_BUDGET: usize = 20_000_000;

/// Builds the filtered flag complex with the default simplex budget.
///
/// Callers needing death times in dimension `k` must pass `max_dim >= k+1`;
/// `max_scale` is normally the graph diameter.
pub fn build_filtration(
    dm: &DistanceMatrix,
    max_dim: usize,
    max_scale: u16,
) -> Result<FilteredComplex, BuildError> {
    build_filtration_with_budget(dm, max_dim, max_scale, DEFAULT_SIMPLEX_BUDGET)
}

/// As [`build_filtration`] with an explicit simplex budget.
pub fn build_filtration_with_budget(
    dm: &DistanceMatrix,
    max_dim: usize,
    max_scale: u16,
    budget: usize,
) -> Result<FilteredComplex, BuildError> {
    assert!(max_scale >= 1, "max_scale must be at least 1");
    let n = dm.n_vertices();
    let mut all: Vec<(u16, Vec<u32>)> = Vec::new();
    let mut count = 0usize;

    // Incremental clique expansion: extend each simplex by vertices greater
    // than its maximum, so every clique is enumerated exactly once with its
    // filtration value already known.
    let mut frontier: Vec<(u16, Vec<u32>)> =
        (0..n as u32).map(|v| (0u16, alloc::vec![v])).collect();
    count += frontier.len();
    if count > budget {
        return Err(BuildError::BudgetExceeded { count, budget });
    }
    all.extend(frontier.iter().cloned());

    for _dim in 1..=max_dim {
        let mut next: Vec<(u16, Vec<u32>)> = Vec::new();
        for (value, verts) in &frontier {
            let last = *verts.last().expect("nonempty");
            for u in last + 1..n as u32 {
                let mut val = *value;
                let mut ok = true;
                for &v in verts {
                    let d = dm.get(u, v);
                    if d > max_scale {
                        ok = false;
                        break;
                    }
                    val = val.max(d);
                }
                if !ok {
                    continue;
                }
                count += 1;
                if count > budget {
                    return Err(BuildError::BudgetExceeded { count, budget });
                }
                let mut w = verts.clone();
                w.push(u);
                next.push((val, w));
            }
        }
        all.extend(next.iter().cloned());
        if next.is_empty() {
            break;
        }
        frontier = next;
    }

    all.sort_unstable_by(|a, b| {
        a.0.cmp(&b.0).then(a.1.len().cmp(&b.1.len())).then_with(|| a.1.cmp(&b.1))
    });

    let mut values = Vec::with_capacity(all.len());
    let mut vertex_lists = Vec::with_capacity(all.len());
    let mut by_dim: Vec<Vec<u32>> = alloc::vec![Vec::new(); max_dim + 1];
    for (id, (value, verts)) in all.into_iter().enumerate() {
        by_dim[verts.len() - 1].push(id as u32);
        values.push(value);
        vertex_lists.push(verts);
    }
    let lex_index = by_dim
        .iter()
        .map(|ids| {
            let mut ix = ids.clone();
            ix.sort_unstable_by(|&a, &b| vertex_lists[a as usize].cmp(&vertex_lists[b as usize]));
            ix
        })
        .collect();

    Ok(FilteredComplex {
        values,
        vertex_lists,
        by_dim,
        lex_index,
        n_vertices: n,
        max_dim,
        max_scale,
    })
}

impl FilteredComplex {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn max_scale(&self) -> u16 {
        self.max_scale
    }

    #[inline]
    pub fn value(&self, id: u32) -> u16 {
        self.values[id as usize]
    }

    #[inline]
    pub fn vertices(&self, id: u32) -> &[u32] {
        &self.vertex_lists[id as usize]
    }

    #[inline]
    pub fn dim(&self, id: u32) -> usize {
        self.vertex_lists[id as usize].len() - 1
    }

    /// Simplex ids of one dimension, in filtration order.
    pub fn ids_of_dim(&self, dim: usize) -> &[u32] {
        self.by_dim.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn n_of_dim(&self, dim: usize) -> usize {
        self.ids_of_dim(dim).len()
    }

    /// Id of the simplex with exactly these vertices, if present.
    pub fn id_of(&self, vertices: &[u32]) -> Option<u32> {
        let dim = vertices.len().checked_sub(1)?;
        let index = self.lex_index.get(dim)?;
        index
            .binary_search_by(|&id| self.vertex_lists[id as usize].as_slice().cmp(vertices))
            .ok()
            .map(|pos| index[pos])
    }

    /// Facet ids of a simplex, ascending. Empty for vertices.
    pub fn boundary_ids(&self, id: u32) -> Vec<u32> {
        let verts = &self.vertex_lists[id as usize];
        if verts.len() == 1 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(verts.len());
        let mut face = Vec::with_capacity(verts.len() - 1);
        for skip in 0..verts.len() {
            face.clear();
            face.extend(verts.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
            out.push(self.id_of(&face).expect("face of a stored simplex is stored"));
        }
        out.sort_unstable();
        out
    }

    /// Ids of all simplices with value `<= n` — the clique complex of the
    /// `n`-th power, truncated to `max_dim`. A prefix of the filtration.
    pub fn snapshot(&self, n: u16) -> Result<Range<u32>, ScaleOutOfRange> {
        if n > self.max_scale {
            return Err(ScaleOutOfRange { scale: n, max_scale: self.max_scale });
        }
        let len = self.values.partition_point(|&v| v <= n);
        Ok(0..len as u32)
    }

    /// Debug dump: one simplex per line, `value dim v0 v1 …`, filtration order.
    pub fn dump(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for id in 0..self.len() as u32 {
            let _ = write!(out, "{} {}", self.value(id), self.dim(id));
            for &v in self.vertices(id) {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }

    /// Checks the face-monotonicity invariant; used by property tests.
    pub fn face_monotone(&self) -> bool {
        (0..self.len() as u32).all(|id| {
            self.boundary_ids(id)
                .iter()
                .all(|&f| f < id && self.value(f) <= self.value(id))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::shortest_paths;

    fn complex_of(g: &crate::graph::Graph, max_dim: usize) -> FilteredComplex {
        let dm = shortest_paths(g).unwrap();
        build_filtration(&dm, max_dim, dm.diameter()).unwrap()
    }

    #[test]
    fn triangle_counts() {
        let g = generators::cycle_graph(3).unwrap();
        let fc = complex_of(&g, 2);
        assert_eq!(fc.n_of_dim(0), 3);
        assert_eq!(fc.n_of_dim(1), 3);
        assert_eq!(fc.n_of_dim(2), 1);
        assert!(fc.ids_of_dim(1).iter().all(|&e| fc.value(e) == 1));
        assert_eq!(fc.value(fc.ids_of_dim(2)[0]), 1);
    }

    #[test]
    fn path_p3_values() {
        let g = generators::path_graph(3).unwrap();
        let fc = complex_of(&g, 2);
        assert_eq!(fc.value(fc.id_of(&[0, 1]).unwrap()), 1);
        assert_eq!(fc.value(fc.id_of(&[1, 2]).unwrap()), 1);
        assert_eq!(fc.value(fc.id_of(&[0, 2]).unwrap()), 2);
        assert_eq!(fc.value(fc.id_of(&[0, 1, 2]).unwrap()), 2);
    }

    #[test]
    fn hexagon_octahedron_triangles() {
        let g = generators::cycle_graph(6).unwrap();
        let fc = complex_of(&g, 3);
        let at_two: Vec<u32> =
            fc.ids_of_dim(2).iter().copied().filter(|&t| fc.value(t) <= 2).collect();
        assert_eq!(at_two.len(), 8);
        let snap = fc.snapshot(2).unwrap();
        let mut by_dim = [0usize; 3];
        for id in snap {
            if fc.dim(id) < 3 {
                by_dim[fc.dim(id)] += 1;
            }
        }
        assert_eq!(by_dim, [6, 12, 8]);
    }

    #[test]
    fn snapshot_zero_is_vertices() {
        let g = generators::cycle_graph(5).unwrap();
        let fc = complex_of(&g, 2);
        let snap = fc.snapshot(0).unwrap();
        assert_eq!(snap.len(), 5);
        assert!(snap.into_iter().all(|id| fc.dim(id) == 0));
    }

    #[test]
    fn snapshot_at_diameter_is_complete_skeleton() {
        let g = generators::path_graph(5).unwrap();
        let fc = complex_of(&g, 3);
        let snap = fc.snapshot(fc.max_scale()).unwrap();
        // C(5,1)+C(5,2)+C(5,3)+C(5,4)
        assert_eq!(snap.len(), 5 + 10 + 10 + 5);
        assert_eq!(fc.n_of_dim(3), 5);
    }

    #[test]
    fn snapshot_out_of_range_errors() {
        let g = generators::cycle_graph(4).unwrap();
        let fc = complex_of(&g, 1);
        assert!(fc.snapshot(fc.max_scale() + 1).is_err());
    }

    #[test]
    fn budget_error_reports_count() {
        let g = generators::complete_graph(12).unwrap();
        let dm = shortest_paths(&g).unwrap();
        match build_filtration_with_budget(&dm, 6, 1, 100) {
            Err(BuildError::BudgetExceeded { count, budget: 100 }) => assert!(count > 100),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn face_monotone_on_examples() {
        for g in [
            generators::cycle_graph(7).unwrap(),
            generators::gnp_random(8, 0.4, 3).unwrap(),
            generators::hypercube_skeleton(3).unwrap(),
        ] {
            let fc = complex_of(&g, 3);
            assert!(fc.face_monotone());
        }
    }

    #[test]
    fn dump_lines_are_sorted() {
        let g = generators::cycle_graph(4).unwrap();
        let fc = complex_of(&g, 2);
        let dump = fc.dump();
        let first: Vec<&str> = dump.lines().take(5).collect();
        assert_eq!(first[0], "0 0 0");
        assert_eq!(first[4], "1 1 0 1");
    }
}
