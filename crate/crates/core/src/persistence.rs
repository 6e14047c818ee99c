//! Z/2 persistent homology by boundary-matrix column reduction in
//! filtration order, with the clearing optimization and explicit cycle
//! representatives.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::filtration::FilteredComplex;
use crate::linalg;

/// Z/2 simplicial chain: a set of simplex ids of one dimension.
/// Addition is symmetric difference.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chain {
    dim: usize,
    support: Vec<u32>,
}

impl Chain {
    /// `support` must be ascending ids, all of dimension `dim`.
    pub fn new(dim: usize, mut support: Vec<u32>) -> Chain {
        support.sort_unstable();
        support.dedup();
        Chain { dim, support }
    }

    pub fn empty(dim: usize) -> Chain {
        Chain { dim, support: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    pub fn volume(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Symmetric difference with another chain of the same dimension.
    pub fn xor(&self, other: &Chain) -> Chain {
        assert_eq!(self.dim, other.dim, "chain dimensions differ");
        let mut out = Vec::with_capacity(self.support.len() + other.support.len());
        let (mut i, mut j) = (0, 0);
        while i < self.support.len() && j < other.support.len() {
            match self.support[i].cmp(&other.support[j]) {
                core::cmp::Ordering::Less => {
                    out.push(self.support[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(other.support[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.support[i..]);
        out.extend_from_slice(&other.support[j..]);
        Chain { dim: self.dim, support: out }
    }

    /// Z/2 boundary: facets appearing an odd number of times.
    pub fn boundary(&self, fc: &FilteredComplex) -> Chain {
        if self.dim == 0 {
            return Chain::empty(0);
        }
        let mut facets: Vec<u32> = Vec::with_capacity(self.support.len() * (self.dim + 1));
        for &id in &self.support {
            facets.extend(fc.boundary_ids(id));
        }
        facets.sort_unstable();
        let mut out = Vec::new();
        let mut i = 0;
        while i < facets.len() {
            let mut j = i + 1;
            while j < facets.len() && facets[j] == facets[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                out.push(facets[i]);
            }
            i = j;
        }
        Chain { dim: self.dim - 1, support: out }
    }

    pub fn is_cycle(&self, fc: &FilteredComplex) -> bool {
        self.boundary(fc).is_empty()
    }

    /// Largest filtration value over the support (None when empty).
    pub fn max_value(&self, fc: &FilteredComplex) -> Option<u16> {
        self.support.iter().map(|&id| fc.value(id)).max()
    }
}

/// One diagram point with its dying cycle.
#[derive(Clone, Debug)]
pub struct PersistencePair {
    pub dim: usize,
    pub birth: u16,
    /// `None` encodes an infinite death.
    pub death: Option<u16>,
    pub birth_simplex: u32,
    pub death_simplex: Option<u32>,
    /// A cycle born at `birth` representing the class.
    pub representative: Chain,
}

impl PersistencePair {
    pub fn lifespan(&self) -> Option<u16> {
        self.death.map(|d| d - self.birth)
    }
}

/// A zero-persistence pairing (birth value = death value), kept out of the
/// diagrams but retained for auditing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditPair {
    pub dim: usize,
    pub scale: u16,
    pub birth_simplex: u32,
    pub death_simplex: u32,
}

#[derive(Clone, Debug, Default)]
pub struct PersistenceDiagram {
    dims: Vec<Vec<PersistencePair>>,
    audit: Vec<AuditPair>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairNotFound {
    pub dim: usize,
    pub index: usize,
}

impl fmt::Display for PairNotFound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no diagram point {}:{}", self.dim, self.index)
    }
}

impl core::error::Error for PairNotFound {}

impl PersistenceDiagram {
    /// Number of homological dimensions carried (max_dim of the complex).
    pub fn n_dims(&self) -> usize {
        self.dims.len()
    }

    /// Pairs of one dimension, sorted by (birth, death, birth simplex);
    /// infinite deaths sort last.
    pub fn pairs(&self, dim: usize) -> &[PersistencePair] {
        self.dims.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn audit(&self) -> &[AuditPair] {
        &self.audit
    }

    /// `(birth, death)` multiset of one dimension.
    pub fn points(&self, dim: usize) -> Vec<(u16, Option<u16>)> {
        self.pairs(dim).iter().map(|p| (p.birth, p.death)).collect()
    }

    /// Interval count at scale `n`: pairs with `birth <= n < death`.
    pub fn betti_at(&self, dim: usize, n: u16) -> usize {
        self.pairs(dim)
            .iter()
            .filter(|p| p.birth <= n && p.death.map_or(true, |d| n < d))
            .count()
    }

    pub fn representative_at_birth(&self, dim: usize, index: usize) -> Result<&Chain, PairNotFound> {
        self.dims
            .get(dim)
            .and_then(|v| v.get(index))
            .map(|p| &p.representative)
            .ok_or(PairNotFound { dim, index })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ReduceOptions {
    /// Clear columns already known to die from the pass one dimension up.
    pub clearing: bool,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions { clearing: true }
    }
}

/// Sparse/dense hybrid column over local row indices. A column switches to
/// a dense bit vector above 1/64 fill.
enum Col {
    Sparse(Vec<u32>),
    Dense { words: Vec<u64>, count: usize },
}

impl Col {
    fn pivot(&self) -> Option<u32> {
        match self {
            Col::Sparse(v) => v.last().copied(),
            Col::Dense { words, .. } => linalg::top_bit(words).map(|b| b as u32),
        }
    }

    fn len(&self) -> usize {
        match self {
            Col::Sparse(v) => v.len(),
            Col::Dense { count, .. } => *count,
        }
    }

    fn densify(&mut self, n_rows: usize) {
        if let Col::Sparse(v) = self {
            let mut words = alloc::vec![0u64; linalg::words_for(n_rows)];
            for &r in v.iter() {
                linalg::set_bit(&mut words, r as usize);
            }
            *self = Col::Dense { words, count: v.len() };
        }
    }

    fn xor_assign(&mut self, other: &Col, n_rows: usize, scratch: &mut Vec<u32>) {
        match (&mut *self, other) {
            (Col::Sparse(a), Col::Sparse(b)) => {
                scratch.clear();
                let (mut i, mut j) = (0, 0);
                while i < a.len() && j < b.len() {
                    match a[i].cmp(&b[j]) {
                        core::cmp::Ordering::Less => {
                            scratch.push(a[i]);
                            i += 1;
                        }
                        core::cmp::Ordering::Greater => {
                            scratch.push(b[j]);
                            j += 1;
                        }
                        core::cmp::Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                    }
                }
                scratch.extend_from_slice(&a[i..]);
                scratch.extend_from_slice(&b[j..]);
                core::mem::swap(a, scratch);
                if a.len() > n_rows / 64 + 1 {
                    self.densify(n_rows);
                }
            }
            (Col::Dense { words, count }, Col::Sparse(b)) => {
                for &r in b {
                    let (w, m) = (r as usize / 64, 1u64 << (r % 64));
                    if words[w] & m != 0 {
                        *count -= 1;
                    } else {
                        *count += 1;
                    }
                    words[w] ^= m;
                }
            }
            (slf @ Col::Sparse(_), Col::Dense { .. }) => {
                slf.densify(n_rows);
                slf.xor_assign(other, n_rows, scratch);
            }
            (Col::Dense { words, count }, Col::Dense { words: b, .. }) => {
                linalg::xor_into(words, b);
                *count = linalg::popcount(words);
            }
        }
    }

    fn to_sorted_ids(&self, rows: &[u32]) -> Vec<u32> {
        let locals: Vec<usize> = match self {
            Col::Sparse(v) => v.iter().map(|&r| r as usize).collect(),
            Col::Dense { words, .. } => linalg::bits_of(words),
        };
        locals.into_iter().map(|r| rows[r]).collect()
    }
}

/// Persistence diagrams of the filtered complex, dimensions `0..max_dim-1`,
/// with default options (clearing on).
pub fn compute_pd(fc: &FilteredComplex) -> PersistenceDiagram {
    compute_pd_with(fc, ReduceOptions::default())
}

pub fn compute_pd_with(fc: &FilteredComplex, opts: ReduceOptions) -> PersistenceDiagram {
    let max_dim = fc.max_dim();
    let mut diagram = PersistenceDiagram::default();
    diagram.dims = alloc::vec![Vec::new(); max_dim];
    if max_dim == 0 {
        return diagram;
    }

    // Birth simplices paired by the pass one dimension up.
    let mut killed: BTreeSet<u32> = BTreeSet::new();

    for d in (1..=max_dim).rev() {
        let rows: &[u32] = fc.ids_of_dim(d - 1);
        let cols: &[u32] = fc.ids_of_dim(d);
        let n_rows = rows.len();
        let track_reps = d < max_dim;

        let mut reduced: Vec<Option<Col>> = Vec::with_capacity(cols.len());
        let mut v_cols: Vec<Option<Col>> = if track_reps { Vec::with_capacity(cols.len()) } else { Vec::new() };
        let mut pivot_owner: Vec<Option<u32>> = alloc::vec![None; n_rows];
        let mut killed_next: BTreeSet<u32> = BTreeSet::new();
        let mut scratch: Vec<u32> = Vec::new();

        for (local, &gid) in cols.iter().enumerate() {
            if opts.clearing && killed.contains(&gid) {
                reduced.push(None);
                if track_reps {
                    v_cols.push(None);
                }
                continue;
            }
            let mut col = Col::Sparse(
                fc.boundary_ids(gid)
                    .iter()
                    .map(|f| rows.binary_search(f).expect("facet present") as u32)
                    .collect(),
            );
            let mut v = if track_reps { Some(Col::Sparse(alloc::vec![local as u32])) } else { None };

            loop {
                let Some(p) = col.pivot() else {
                    // Zero column: gid creates a d-cycle.
                    if !killed.contains(&gid) {
                        if let Some(v) = &v {
                            let rep = Chain::new(d, v.to_sorted_ids(cols));
                            diagram.dims[d].push(PersistencePair {
                                dim: d,
                                birth: fc.value(gid),
                                death: None,
                                birth_simplex: gid,
                                death_simplex: None,
                                representative: rep,
                            });
                        }
                    }
                    break;
                };
                match pivot_owner[p as usize] {
                    Some(owner) => {
                        let other = reduced[owner as usize].as_ref().expect("owner kept");
                        col.xor_assign(other, n_rows, &mut scratch);
                        if let Some(v) = &mut v {
                            let vo = v_cols[owner as usize].as_ref().expect("owner v kept");
                            v.xor_assign(vo, cols.len(), &mut scratch);
                        }
                    }
                    None => {
                        pivot_owner[p as usize] = Some(local as u32);
                        let birth_gid = rows[p as usize];
                        killed_next.insert(birth_gid);
                        let (bv, dv) = (fc.value(birth_gid), fc.value(gid));
                        if bv == dv {
                            diagram.audit.push(AuditPair {
                                dim: d - 1,
                                scale: bv,
                                birth_simplex: birth_gid,
                                death_simplex: gid,
                            });
                        } else {
                            let rep = Chain::new(d - 1, col.to_sorted_ids(rows));
                            diagram.dims[d - 1].push(PersistencePair {
                                dim: d - 1,
                                birth: bv,
                                death: Some(dv),
                                birth_simplex: birth_gid,
                                death_simplex: Some(gid),
                                representative: rep,
                            });
                        }
                        break;
                    }
                }
            }
            reduced.push(Some(col));
            if track_reps {
                v_cols.push(v);
            }
        }

        killed = killed_next;
    }

    // Dimension 0: vertices not killed by an edge pairing are immortal
    // components, each represented by its own vertex.
    for &v in fc.ids_of_dim(0) {
        if !killed.contains(&v) {
            diagram.dims[0].push(PersistencePair {
                dim: 0,
                birth: 0,
                death: None,
                birth_simplex: v,
                death_simplex: None,
                representative: Chain::new(0, alloc::vec![v]),
            });
        }
    }

    for pairs in &mut diagram.dims {
        pairs.sort_by_key(|p| (p.birth, p.death.unwrap_or(u16::MAX), (p.death.is_none()) as u8, p.birth_simplex));
    }
    diagram.audit.sort_by_key(|a| (a.dim, a.scale, a.birth_simplex));
    diagram
}

/// Betti numbers `rank H_k` of the scale-`n` snapshot for `k < max_dim`,
/// by plain Gaussian elimination on the snapshot boundary matrices. This is
/// the independent rank oracle for the diagram's interval counts; it shares
/// no code with the reduction above.
pub fn betti_numbers(fc: &FilteredComplex, n: u16) -> Vec<usize> {
    let snap = fc.snapshot(n).expect("scale in range");
    let snap_len = snap.end;
    let max_dim = fc.max_dim();
    // Per-dim counts within the snapshot (per-dim prefixes).
    let counts: Vec<usize> = (0..=max_dim)
        .map(|d| fc.ids_of_dim(d).partition_point(|&id| id < snap_len))
        .collect();

    let mut ranks = alloc::vec![0usize; max_dim + 2];
    for d in 1..=max_dim {
        let rows = &fc.ids_of_dim(d - 1)[..counts[d - 1]];
        let mut elim = linalg::Eliminator::new(rows.len().max(1));
        let words = linalg::words_for(rows.len().max(1));
        for &gid in &fc.ids_of_dim(d)[..counts[d]] {
            let mut v = alloc::vec![0u64; words];
            for f in fc.boundary_ids(gid) {
                let local = rows.binary_search(&f).expect("facet in snapshot");
                linalg::set_bit(&mut v, local);
            }
            elim.insert(v);
        }
        ranks[d] = elim.rank();
    }

    (0..max_dim).map(|k| counts[k] - ranks[k] - ranks[k + 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::build_filtration;
    use crate::generators;
    use crate::graph::{shortest_paths, Graph};

    fn pd_of(g: &Graph, max_dim: usize) -> (FilteredComplex, PersistenceDiagram) {
        let dm = shortest_paths(g).unwrap();
        let fc = build_filtration(&dm, max_dim, dm.diameter()).unwrap();
        let pd = compute_pd(&fc);
        (fc, pd)
    }

    #[test]
    fn hexagon_pd2_is_octahedron_point() {
        let g = generators::cycle_graph(6).unwrap();
        let (fc, pd) = pd_of(&g, 3);
        assert_eq!(pd.points(2), alloc::vec![(2, Some(3))]);
        let rep = &pd.pairs(2)[0].representative;
        assert_eq!(rep.volume(), 8);
        assert!(rep.is_cycle(&fc));
        assert!(rep.max_value(&fc).unwrap() <= 2);
    }

    #[test]
    fn cube_with_diagonals_diagram() {
        let g = generators::cube_with_diagonals();
        let (_, pd) = pd_of(&g, 3);
        assert_eq!(pd.points(2), alloc::vec![(1, Some(2))]);
        assert!(pd.points(1).is_empty());
    }

    #[test]
    fn cube_skeleton_diagram() {
        let g = generators::hypercube_skeleton(3).unwrap();
        let (_, pd) = pd_of(&g, 4);
        assert!(pd.points(2).is_empty());
        assert_eq!(pd.points(3), alloc::vec![(2, Some(3))]);
    }

    #[test]
    fn pd0_closed_form() {
        for g in [
            generators::cycle_graph(9).unwrap(),
            generators::gnp_random(10, 0.3, 5).unwrap(),
        ] {
            let n = g.n_vertices();
            let (_, pd) = pd_of(&g, 1);
            let mut pts = pd.points(0);
            pts.sort();
            let mut expect = alloc::vec![(0u16, Some(1u16)); n - 1];
            expect.push((0, None));
            expect.sort();
            assert_eq!(pts, expect);
        }
    }

    #[test]
    fn hexagon_pd1_representative_is_six_edge_loop() {
        let g = generators::cycle_graph(6).unwrap();
        let (fc, pd) = pd_of(&g, 2);
        assert_eq!(pd.points(1), alloc::vec![(1, Some(2))]);
        let rep = &pd.pairs(1)[0].representative;
        assert_eq!(rep.volume(), 6);
        assert!(rep.is_cycle(&fc));
        assert!(rep.max_value(&fc).unwrap() <= 1);
    }

    #[test]
    fn infinite_pd0_representative_is_vertex() {
        let g = generators::path_graph(4).unwrap();
        let (_, pd) = pd_of(&g, 1);
        let inf: Vec<_> = pd.pairs(0).iter().filter(|p| p.death.is_none()).collect();
        assert_eq!(inf.len(), 1);
        assert_eq!(inf[0].representative.volume(), 1);
    }

    #[test]
    fn audit_holds_zero_length_pairs() {
        // K3: the 2-simplex enters with its last edge at scale 1.
        let g = generators::complete_graph(3).unwrap();
        let (_, pd) = pd_of(&g, 2);
        assert!(pd.points(1).is_empty());
        assert_eq!(pd.audit().len(), 1);
        assert_eq!(pd.audit()[0].dim, 1);
        assert_eq!(pd.audit()[0].scale, 1);
    }

    #[test]
    fn clearing_matches_plain_reduction() {
        for seed in [1u64, 2, 3] {
            let g = generators::gnp_random(9, 0.35, seed).unwrap();
            let dm = shortest_paths(&g).unwrap();
            let fc = build_filtration(&dm, 3, dm.diameter()).unwrap();
            let on = compute_pd_with(&fc, ReduceOptions { clearing: true });
            let off = compute_pd_with(&fc, ReduceOptions { clearing: false });
            for k in 0..3 {
                assert_eq!(on.points(k), off.points(k), "dim {k} seed {seed}");
            }
            assert_eq!(on.audit(), off.audit());
        }
    }

    #[test]
    fn betti_oracle_on_spec_examples() {
        let g = generators::cycle_graph(6).unwrap();
        let dm = shortest_paths(&g).unwrap();
        let fc = build_filtration(&dm, 3, dm.diameter()).unwrap();
        assert_eq!(betti_numbers(&fc, 2), alloc::vec![1, 0, 1]);

        let g = generators::cycle_graph(9).unwrap();
        let dm = shortest_paths(&g).unwrap();
        let fc = build_filtration(&dm, 3, dm.diameter()).unwrap();
        assert_eq!(betti_numbers(&fc, 3)[2], 2);
        assert_eq!(betti_numbers(&fc, 1)[0], 1);
    }

    #[test]
    fn betti_curve_identity_small() {
        let g = generators::gnp_random(8, 0.4, 17).unwrap();
        let dm = shortest_paths(&g).unwrap();
        let fc = build_filtration(&dm, 3, dm.diameter()).unwrap();
        let pd = compute_pd(&fc);
        for n in 0..=dm.diameter() {
            let betti = betti_numbers(&fc, n);
            for k in 0..3 {
                assert_eq!(pd.betti_at(k, n), betti[k], "k={k} n={n}");
            }
        }
    }

    #[test]
    fn representative_lookup() {
        let g = generators::cycle_graph(6).unwrap();
        let (_, pd) = pd_of(&g, 3);
        assert!(pd.representative_at_birth(2, 0).is_ok());
        assert_eq!(
            pd.representative_at_birth(9, 0),
            Err(PairNotFound { dim: 9, index: 0 })
        );
    }
}
