//! Unweighted simple graphs, edge-list parsing, the shortest-path metric,
//! and graph powers.

use alloc::collections::BTreeSet;
use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Undirected simple graph with dense vertex ids `0..n`.
///
/// Adjacency lists are sorted and symmetric; construction rejects
/// self-loops and collapses duplicate edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: u32 },
    VertexOutOfRange { vertex: u32, n: u32 },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
        }
    }
}

impl core::error::Error for GraphError {}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let mut adj = alloc::vec![Vec::new(); n as usize];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter().copied().filter_map(move |v| (u < v).then_some((u, v)))
        })
    }

    pub fn is_connected(&self) -> bool {
        self.n_vertices() == 0 || shortest_paths(self).is_ok()
    }

    /// Serializes to the edge-list text format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Graph power from precomputed distances: edge `(u,v)` iff `d(u,v) <= n`.
    pub fn power_from_distances(&self, dm: &DistanceMatrix, n: u16) -> Graph {
        let nv = self.n_vertices();
        let mut adj = alloc::vec![Vec::new(); nv];
        for u in 0..nv {
            for v in 0..nv {
                if u != v && dm.get(u as u32, v as u32) <= n {
                    adj[u].push(v as u32);
                }
            }
        }
        Graph { adj }
    }
}

/// Result of parsing an edge-list document. Sparse vertex ids are remapped
/// to a dense range; `vertex_ids[i]` is the original label of vertex `i`.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub vertex_ids: Vec<u64>,
    /// True when the input ids were already dense `0..n`.
    pub ids_were_dense: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// Line did not hold exactly two nonnegative integers.
    Malformed { line: usize, content: String },
    SelfLoop { line: usize, id: u64 },
    NoEdges,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Malformed { line, content } => {
                write!(f, "line {line}: expected two vertex ids, got {content:?}")
            }
            ParseError::SelfLoop { line, id } => {
                write!(f, "line {line}: self-loop at vertex {id}")
            }
            ParseError::NoEdges => write!(f, "input contains no edges"),
        }
    }
}

impl core::error::Error for ParseError {}

/// Parses the edge-list text format: one `u v` pair per line, `#` starts a
/// comment, whitespace-separated, 0-based ids.
pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut raw_edges: Vec<(u64, u64)> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            if line.trim().is_empty() {
                continue;
            }
            return Err(ParseError::Malformed { line: line_no, content: String::from(raw_line) });
        };
        if tokens.next().is_some() {
            return Err(ParseError::Malformed { line: line_no, content: String::from(raw_line) });
        }
        let parse = |s: &str| s.parse::<u64>().ok();
        let (Some(u), Some(v)) = (parse(a), parse(b)) else {
            return Err(ParseError::Malformed { line: line_no, content: String::from(raw_line) });
        };
        if u == v {
            return Err(ParseError::SelfLoop { line: line_no, id: u });
        }
        raw_edges.push((u, v));
    }
    if raw_edges.is_empty() {
        return Err(ParseError::NoEdges);
    }

    let ids: BTreeSet<u64> = raw_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let max_id = *ids.iter().next_back().expect("nonempty");
    let dense = max_id as usize + 1 == ids.len();
    let vertex_ids: Vec<u64> =
        if dense { (0..=max_id).collect() } else { ids.iter().copied().collect() };
    let index_of = |id: u64| -> u32 {
        if dense {
            id as u32
        } else {
            vertex_ids.binary_search(&id).expect("id present") as u32
        }
    };
    let edges: Vec<(u32, u32)> =
        raw_edges.iter().map(|&(u, v)| (index_of(u), index_of(v))).collect();
    let graph =
        Graph::from_edges(vertex_ids.len() as u32, &edges).expect("self-loops rejected above");
    Ok(ParsedGraph { graph, vertex_ids, ids_were_dense: dense })
}

/// All-pairs shortest-path hop distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u16>,
    diameter: u16,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisconnectedError {
    /// A pair of mutually unreachable vertices.
    pub from: u32,
    pub to: u32,
}

impl fmt::Display for DisconnectedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph is disconnected: no path from vertex {} to vertex {}", self.from, self.to)
    }
}

impl core::error::Error for DisconnectedError {}

const UNREACHED: u16 = u16::MAX;

/// BFS hop distances from every source. Errors on disconnected input,
/// naming two unreachable vertices.
pub fn shortest_paths(g: &Graph) -> Result<DistanceMatrix, DisconnectedError> {
    let n = g.n_vertices();
    let mut dist = alloc::vec![UNREACHED; n * n];
    let mut diameter = 0u16;
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s as u32);
        while let Some(u) = queue.pop_front() {
            let du = row[u as usize];
            for &v in g.neighbors(u) {
                if row[v as usize] == UNREACHED {
                    row[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        for (v, &d) in row.iter().enumerate() {
            if d == UNREACHED {
                return Err(DisconnectedError { from: s as u32, to: v as u32 });
            }
            diameter = diameter.max(d);
        }
    }
    Ok(DistanceMatrix { n, dist, diameter })
}

impl DistanceMatrix {
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: u32, v: u32) -> u16 {
        self.dist[u as usize * self.n + v as usize]
    }

    pub fn diameter(&self) -> u16 {
        self.diameter
    }

    /// Distance of the farthest vertex from `v`.
    pub fn eccentricity(&self, v: u32) -> u16 {
        let row = &self.dist[v as usize * self.n..(v as usize + 1) * self.n];
        row.iter().copied().max().unwrap_or(0)
    }

    /// Maximum pairwise distance over a vertex set (0 for fewer than two).
    pub fn diameter_of(&self, vertices: &[u32]) -> u16 {
        let mut best = 0;
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                best = best.max(self.get(u, v));
            }
        }
        best
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerError {
    ScaleZero,
    Disconnected(DisconnectedError),
}

impl fmt::Display for PowerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerError::ScaleZero => write!(f, "graph power requires scale n >= 1"),
            PowerError::Disconnected(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for PowerError {}

/// The `n`-th power of `g`: same vertices, edge `(u,v)` iff `d(u,v) <= n`.
pub fn graph_power(g: &Graph, n: u16) -> Result<Graph, PowerError> {
    if n < 1 {
        return Err(PowerError::ScaleZero);
    }
    let dm = shortest_paths(g).map_err(PowerError::Disconnected)?;
    Ok(g.power_from_distances(&dm, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn parse_path_graph() {
        let p = parse_graph("0 1\n1 2").unwrap();
        assert_eq!(p.graph.n_vertices(), 3);
        assert_eq!(p.graph.n_edges(), 2);
        assert!(p.ids_were_dense);
    }

    #[test]
    fn parse_collapses_duplicate_edges() {
        let p = parse_graph("0 1\n1 2\n2 0\n2 0").unwrap();
        assert_eq!(p.graph.n_edges(), 3);
    }

    #[test]
    fn parse_rejects_self_loop() {
        assert_eq!(parse_graph("0 0"), Err(ParseError::SelfLoop { line: 1, id: 0 }));
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_graph("0 1\nbogus line\n").unwrap_err();
        match err {
            ParseError::Malformed { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_remaps_sparse_ids() {
        let p = parse_graph("10 20\n20 30").unwrap();
        assert_eq!(p.graph.n_vertices(), 3);
        assert_eq!(p.vertex_ids, alloc::vec![10, 20, 30]);
        assert!(!p.ids_were_dense);
    }

    #[test]
    fn parse_handles_comments_and_blanks() {
        let p = parse_graph("# header\n0 1 # inline\n\n1 2\n").unwrap();
        assert_eq!(p.graph.n_edges(), 2);
    }

    #[test]
    fn distances_on_hexagon() {
        let g = generators::cycle_graph(6).unwrap();
        let dm = shortest_paths(&g).unwrap();
        assert_eq!(dm.get(0, 3), 3);
        assert_eq!(dm.get(1, 4), 3);
        assert_eq!(dm.get(0, 2), 2);
        assert_eq!(dm.diameter(), 3);
        assert_eq!(dm.eccentricity(2), 3);
    }

    #[test]
    fn distances_on_complete_graph() {
        let g = generators::complete_graph(4).unwrap();
        let dm = shortest_paths(&g).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(dm.get(u, v), u16::from(u != v));
            }
        }
        assert_eq!(dm.diameter(), 1);
        assert_eq!(dm.eccentricity(0), 1);
    }

    #[test]
    fn cube_skeleton_has_diameter_three() {
        let g = generators::hypercube_skeleton(3).unwrap();
        let dm = shortest_paths(&g).unwrap();
        assert_eq!(dm.diameter(), 3);
    }

    #[test]
    fn path_midpoint_eccentricity() {
        let g = generators::path_graph(5).unwrap();
        let dm = shortest_paths(&g).unwrap();
        assert_eq!(dm.eccentricity(2), 2);
    }

    #[test]
    fn disconnected_graph_names_vertices() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let err = shortest_paths(&g).unwrap_err();
        assert_eq!(dm_pair(&err), (0, 2));
    }

    fn dm_pair(e: &DisconnectedError) -> (u32, u32) {
        (e.from, e.to)
    }

    #[test]
    fn power_of_hexagon_at_two() {
        let g = generators::cycle_graph(6).unwrap();
        let p = graph_power(&g, 2).unwrap();
        assert_eq!(p.n_edges(), 12);
        for v in 0..3 {
            assert!(!p.has_edge(v, v + 3), "antipodal pair {v} present");
        }
    }

    #[test]
    fn power_at_one_is_identity() {
        let g = generators::gnp_random(9, 0.35, 11).unwrap();
        assert_eq!(graph_power(&g, 1).unwrap(), g);
    }

    #[test]
    fn power_at_diameter_is_complete() {
        let g = generators::cycle_graph(7).unwrap();
        let dm = shortest_paths(&g).unwrap();
        let p = graph_power(&g, dm.diameter()).unwrap();
        assert_eq!(p.n_edges(), 7 * 6 / 2);
    }

    #[test]
    fn power_rejects_scale_zero() {
        let g = generators::cycle_graph(4).unwrap();
        assert_eq!(graph_power(&g, 0), Err(PowerError::ScaleZero));
    }
}
