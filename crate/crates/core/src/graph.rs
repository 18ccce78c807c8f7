//! Finite simple undirected graphs on the vertex set `0..n`.
//!
//! Edges are stored as `(i, j)` with `i < j`, sorted lexicographically; that
//! order is the canonical edge order used for the Lie algebra basis.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{GraphError, ParseError, ParseErrorKind};

const NO_EDGE: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    // n*n table, entry = canonical edge index or NO_EDGE
    index: Vec<u32>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, normalising each edge to `i < j`.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        let mut index = vec![NO_EDGE; n * n];
        for (k, &(i, j)) in edges.iter().enumerate() {
            adj[i].push(j);
            adj[j].push(i);
            index[i * n + j] = k as u32;
            index[j * n + i] = k as u32;
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj, index }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of edge `{u, v}` in canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let k = self.index[u * self.n + v];
        (k != NO_EDGE).then_some(k as usize)
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v].is_empty()
    }

    pub fn odd_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS distances from `s`; `None` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n
    }

    /// Whether `edges` (as vertex pairs) cover every vertex exactly once.
    pub fn is_perfect_matching(&self, edges: &[(usize, usize)]) -> bool {
        let mut hit = vec![false; self.n];
        for &(a, b) in edges {
            if !self.has_edge(a, b) || hit[a] || hit[b] {
                return false;
            }
            hit[a] = true;
            hit[b] = true;
        }
        hit.iter().all(|&h| h)
    }

    /// Exhaustive perfect-matching test; intended for small graphs.
    pub fn has_perfect_matching(&self) -> bool {
        fn go(g: &Graph, used: &mut [bool]) -> bool {
            let Some(v) = used.iter().position(|&u| !u) else {
                return true;
            };
            used[v] = true;
            for &w in g.neighbors(v) {
                if !used[w] {
                    used[w] = true;
                    if go(g, used) {
                        return true;
                    }
                    used[w] = false;
                }
            }
            used[v] = false;
            false
        }
        self.n.is_multiple_of(2) && go(self, &mut vec![false; self.n])
    }

    /// Appends `k` isolated vertices.
    pub fn with_isolated(&self, k: usize) -> Graph {
        Self::from_sorted(self.n + k, self.edges.clone())
    }

    /// Disjoint union; `other` is shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + off, b + off)));
        Graph::new(self.n + other.n, edges).expect("union of valid graphs")
    }

    /// Image under `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        Graph::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
            .expect("relabelling by a permutation")
    }

    /// Replaces vertex `i` by an independent set of `k[i]` copies and each
    /// edge by the complete bipartite graph between the copy sets. Copies
    /// are numbered vertex by vertex.
    pub fn blow_up(&self, k: &[usize]) -> Graph {
        assert_eq!(k.len(), self.n, "one multiplicity per vertex");
        let offsets = self.blow_up_offsets(k);
        let mut edges = Vec::new();
        for &(i, j) in &self.edges {
            for a in 0..k[i] {
                for b in 0..k[j] {
                    edges.push((offsets[i] + a, offsets[j] + b));
                }
            }
        }
        Graph::new(offsets[self.n], edges).expect("blow-up of a simple graph")
    }

    /// Start index of each vertex's copies in [`Graph::blow_up`], with the
    /// total as the final entry.
    pub fn blow_up_offsets(&self, k: &[usize]) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(k.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &x in k {
            acc += x;
            offsets.push(acc);
        }
        offsets
    }

    /// Parses the edge-list format: header `n m`, then `m` lines `i j`.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| {
            ParseError::new(1, ParseErrorKind::MalformedHeader("empty input".into()))
        })?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let parse_usize = |s: &str| s.parse::<usize>().ok();
        let (n, m) = match nums.as_slice() {
            [a, b] => match (parse_usize(a), parse_usize(b)) {
                (Some(n), Some(m)) => (n, m),
                _ => {
                    return Err(ParseError::new(
                        hline,
                        ParseErrorKind::MalformedHeader(header.to_string()),
                    ))
                }
            },
            _ => {
                return Err(ParseError::new(
                    hline,
                    ParseErrorKind::MalformedHeader(header.to_string()),
                ))
            }
        };
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::with_capacity(m);
        let mut last_line = hline;
        for (ln, line) in lines {
            last_line = ln;
            let parts: Vec<&str> = line.split_whitespace().collect();
            let (i, j) = match parts.as_slice() {
                [a, b] => match (parse_usize(a), parse_usize(b)) {
                    (Some(i), Some(j)) => (i, j),
                    _ => {
                        return Err(ParseError::new(
                            ln,
                            ParseErrorKind::MalformedLine(line.to_string()),
                        ))
                    }
                },
                _ => {
                    return Err(ParseError::new(
                        ln,
                        ParseErrorKind::MalformedLine(line.to_string()),
                    ))
                }
            };
            for v in [i, j] {
                if v >= n {
                    return Err(ParseError::new(
                        ln,
                        ParseErrorKind::Graph(GraphError::VertexOutOfRange { vertex: v, n }),
                    ));
                }
            }
            if i == j {
                return Err(ParseError::new(
                    ln,
                    ParseErrorKind::Graph(GraphError::SelfLoop(i)),
                ));
            }
            let e = (i.min(j), i.max(j));
            if !seen.insert(e) {
                return Err(ParseError::new(
                    ln,
                    ParseErrorKind::Graph(GraphError::DuplicateEdge(e.0, e.1)),
                ));
            }
            if edges.len() == m {
                return Err(ParseError::new(
                    ln,
                    ParseErrorKind::CountMismatch { expected: m, found: m + 1 },
                ));
            }
            edges.push(e);
        }
        if edges.len() != m {
            return Err(ParseError::new(
                last_line,
                ParseErrorKind::CountMismatch { expected: m, found: edges.len() },
            ));
        }
        Ok(Graph::new(n, edges).expect("validated above"))
    }

    /// Canonical serialisation; `parse(to_text(g)) == g`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for &(i, j) in &self.edges {
            let _ = writeln!(s, "{i} {j}");
        }
        s
    }

    /// Graphviz export with vertices labelled `v1..vn`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(s, "  v{};", v + 1);
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(s, "  v{} -- v{};", i + 1, j + 1);
        }
        s.push_str("}\n");
        s
    }

    /// Compact one-line form `n:i-j,i-j` with 1-based vertices.
    pub fn to_compact(&self) -> String {
        let body: Vec<String> =
            self.edges.iter().map(|&(i, j)| format!("{}-{}", i + 1, j + 1)).collect();
        format!("{}:{}", self.n, body.join(","))
    }
}
