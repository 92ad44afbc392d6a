//! Simple undirected graphs: adjacency storage, named test graphs,
//! breadth-first utilities, the Cartesian product with K_2, and the
//! edge-list / DOT text formats.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`. Adjacency lists are sorted
/// and duplicate-free; loops and parallel edges are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    name: Option<String>,
}

impl Graph {
    /// Build from an edge list; loops are rejected, duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidGenerators(format!("loop at vertex {u}")));
            }
            let (u, v) = (u as usize, v as usize);
            if u >= n || v >= n {
                return Err(Error::InvalidGenerators(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, name: None })
    }

    pub(crate) fn from_adjacency(adj: Vec<Vec<u32>>) -> Graph {
        Graph { adj, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn is_regular(&self) -> bool {
        self.adj.iter().all(|l| l.len() == self.adj[0].len())
    }

    /// Breadth-first distances from `src`; unreachable vertices are `None`.
    pub fn bfs_distances(&self, src: u32) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[src as usize] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].expect("queued vertices have distances");
            for &w in self.neighbors(u) {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.adj.is_empty() {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Maximum over vertex pairs of the shortest-path length.
    pub fn diameter(&self) -> Result<u32> {
        let mut best = 0;
        for v in 0..self.adj.len() as u32 {
            for d in self.bfs_distances(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Err(Error::Disconnected),
                }
            }
        }
        Ok(best)
    }

    /// Eccentricity of one vertex (max BFS distance from it).
    pub fn eccentricity(&self, v: u32) -> Result<u32> {
        let mut best = 0;
        for d in self.bfs_distances(v) {
            match d {
                Some(d) => best = best.max(d),
                None => return Err(Error::Disconnected),
            }
        }
        Ok(best)
    }

    /// Cartesian product with K_2: two copies of the graph plus a perfect
    /// matching between corresponding vertices.
    pub fn product_with_k2(&self) -> Graph {
        let n = self.adj.len();
        let mut adj = vec![Vec::new(); 2 * n];
        for (u, list) in self.adj.iter().enumerate() {
            for &w in list {
                adj[u].push(w);
                adj[u + n].push(w + n as u32);
            }
            adj[u].push((u + n) as u32);
            adj[u + n].push(u as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, name: None }
    }

    /// Sorted `"u v"` lines with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, list) in self.adj.iter().enumerate() {
            for &w in list {
                if (u as u32) < w {
                    writeln!(out, "{u} {w}").expect("write to string");
                }
            }
        }
        out
    }

    /// Undirected DOT description.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = self.name.as_deref().unwrap_or("g");
        writeln!(out, "graph \"{name}\" {{").expect("write to string");
        for u in 0..self.adj.len() {
            writeln!(out, "  {u};").expect("write to string");
        }
        for (u, list) in self.adj.iter().enumerate() {
            for &w in list {
                if (u as u32) < w {
                    writeln!(out, "  {u} -- {w};").expect("write to string");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Parse the edge-list format produced by [`Graph::to_edge_list`].
    /// Blank lines and `#` comments are skipped; the vertex count is one
    /// past the largest endpoint, capped at 10^7 to bound allocation on
    /// untrusted input.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        const MAX_VERTEX: u32 = 10_000_000;
        let mut edges = Vec::new();
        let mut max = 0u32;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<u32> {
                tok.ok_or_else(|| Error::parse(lineno, "expected 'u v' pair"))?
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad vertex id on line {}", lineno + 1)))
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::parse(lineno, format!("trailing tokens on line {}", lineno + 1)));
            }
            if u == v {
                return Err(Error::parse(lineno, format!("loop at vertex {u} on line {}", lineno + 1)));
            }
            if u > MAX_VERTEX || v > MAX_VERTEX {
                return Err(Error::parse(lineno, format!("vertex id beyond {MAX_VERTEX} on line {}", lineno + 1)));
            }
            max = max.max(u).max(v);
            edges.push((u, v));
        }
        if edges.is_empty() {
            return Err(Error::parse(0, "empty edge list"));
        }
        Graph::from_edges(max as usize + 1, &edges)
    }
}

/// Standard named graphs: `petersen`, `cycle(n)` and `complete(n)`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let name = name.trim();
    if name == "petersen" {
        return Ok(petersen());
    }
    if let Some(arg) = name.strip_prefix("cycle(").and_then(|s| s.strip_suffix(')')) {
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::UnknownGraph(name.into()))?;
        if n < 3 {
            return Err(Error::UnknownGraph(format!("cycle({n}) requires n >= 3")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i as u32, ((i + 1) % n) as u32)).collect();
        return Ok(Graph::from_edges(n, &edges)?.with_name(format!("cycle({n})")));
    }
    if let Some(arg) = name.strip_prefix("complete(").and_then(|s| s.strip_suffix(')')) {
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::UnknownGraph(name.into()))?;
        if n < 1 {
            return Err(Error::UnknownGraph("complete(0) is empty".into()));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u as u32, v as u32));
            }
        }
        return Ok(Graph::from_edges(n, &edges)?.with_name(format!("complete({n})")));
    }
    Err(Error::UnknownGraph(name.into()))
}

/// The Petersen graph: outer 5-cycle 0..4, spokes i <-> i+5, inner
/// pentagram 5-7-9-6-8-5.
fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges)
        .expect("static edge list")
        .with_name("petersen")
}
