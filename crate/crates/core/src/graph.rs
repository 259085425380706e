//! Loopless multigraphs and their compositions.
//!
//! A composition of `G` is a partition of `V(G)` into blocks that each
//! induce a connected subgraph; compositions are in bijection with the
//! flats of the graphic matroid `M(G)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Vertex cap for operations that enumerate set partitions.
pub const MAX_ENUM_VERTICES: usize = 11;

/// Vertex cap for the deletion–contraction chromatic polynomial.
pub const MAX_CHROMATIC_VERTICES: usize = 16;

/// Loopless undirected multigraph on vertices `0..n_vertices`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted, so two graphs with
/// the same labeled edge multiset compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n_vertices} vertices"
                )));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Multigraph {
            n_vertices,
            edges: out,
        })
    }

    pub fn edgeless(n_vertices: usize) -> Self {
        Multigraph {
            n_vertices,
            edges: Vec::new(),
        }
    }

    /// The fan `F_n`: apex `0` joined to every vertex of the path `1 - 2 - ... - n`.
    pub fn fan(n: usize) -> Self {
        let spokes = (1..=n).map(|i| (0, i));
        let path = (1..n).map(|i| (i, i + 1));
        Self::new(n + 1, spokes.chain(path)).expect("fan edges are valid")
    }

    pub fn path(n_vertices: usize) -> Self {
        Self::new(n_vertices, (1..n_vertices).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn complete(n_vertices: usize) -> Self {
        let edges = (0..n_vertices).flat_map(|u| (u + 1..n_vertices).map(move |v| (u, v)));
        Self::new(n_vertices, edges).expect("complete graph edges are valid")
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Replaces every bundle of parallel edges by a single edge.
    pub fn simplify(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.dedup();
        Multigraph {
            n_vertices: self.n_vertices,
            edges,
        }
    }

    /// Component index of every vertex, numbered by smallest member.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.n_vertices);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let mut label = vec![usize::MAX; self.n_vertices];
        let mut root_label = HashMap::new();
        for v in 0..self.n_vertices {
            let r = uf.find(v);
            let next = root_label.len();
            label[v] = *root_label.entry(r).or_insert(next);
        }
        label
    }

    pub fn n_components(&self) -> usize {
        self.component_labels().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n_components() <= 1
    }

    /// `|V| - #components`.
    pub fn rank(&self) -> usize {
        self.n_vertices - self.n_components()
    }

    /// Subgraph induced on `vertices` (sorted, distinct), relabeled in
    /// increasing order.
    pub fn induced(&self, vertices: &[usize]) -> Multigraph {
        let mut index = vec![usize::MAX; self.n_vertices];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Multigraph::new(vertices.len(), edges).expect("induced edges are valid")
    }

    /// Connected components as induced subgraphs, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Multigraph> {
        let label = self.component_labels();
        let k = label.iter().max().map_or(0, |m| m + 1);
        let mut members = vec![Vec::new(); k];
        for (v, &c) in label.iter().enumerate() {
            members[c].push(v);
        }
        members.iter().map(|vs| self.induced(vs)).collect()
    }

    fn check_enum_cap(&self) -> Result<()> {
        if self.n_vertices > MAX_ENUM_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertex count for composition enumeration",
                cap: MAX_ENUM_VERTICES,
                got: self.n_vertices,
            });
        }
        Ok(())
    }

    /// Every composition of the graph, in restricted-growth-string order.
    pub fn compositions(&self) -> Result<Vec<Composition>> {
        self.check_enum_cap()?;
        let mut out = Vec::new();
        for rgs in RestrictedGrowthStrings::new(self.n_vertices) {
            let blocks = blocks_from_rgs(&rgs);
            if blocks.iter().all(|b| self.block_is_connected(b)) {
                out.push(Composition { blocks });
            }
        }
        Ok(out)
    }

    fn block_is_connected(&self, block: &[usize]) -> bool {
        if block.len() <= 1 {
            return true;
        }
        let mut inside = vec![false; self.n_vertices];
        for &v in block {
            inside[v] = true;
        }
        let mut uf = UnionFind::new(self.n_vertices);
        let mut merges = 0;
        for &(u, v) in &self.edges {
            if inside[u] && inside[v] && uf.union(u, v) {
                merges += 1;
            }
        }
        merges == block.len() - 1
    }

    /// Keeps only the edges inside blocks; the vertex set is unchanged.
    pub fn restrict(&self, c: &Composition) -> Result<Multigraph> {
        c.validate(self)?;
        let block_of = c.block_of(self.n_vertices);
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| block_of[u] == block_of[v]);
        Multigraph::new(self.n_vertices, edges)
    }

    /// Collapses each block to one vertex (block `i` becomes vertex `i`)
    /// and keeps inter-block edges with multiplicity.
    pub fn contract(&self, c: &Composition) -> Result<Multigraph> {
        c.validate(self)?;
        Ok(self.contract_unchecked(c))
    }

    pub(crate) fn contract_unchecked(&self, c: &Composition) -> Multigraph {
        let block_of = c.block_of(self.n_vertices);
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (block_of[u], block_of[v]))
            .filter(|(a, b)| a != b);
        Multigraph::new(c.len(), edges).expect("contracted edges are valid")
    }

    /// Chromatic polynomial of the underlying simple graph.
    pub fn chromatic_polynomial(&self) -> Result<IntPoly> {
        if self.n_vertices > MAX_CHROMATIC_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertex count for the chromatic polynomial",
                cap: MAX_CHROMATIC_VERTICES,
                got: self.n_vertices,
            });
        }
        let mut memo = HashMap::new();
        Ok(chromatic_rec(&self.simplify(), &mut memo))
    }

    /// `chi_G(t) / t^k` with `k` the number of components.
    pub fn characteristic_polynomial(&self) -> Result<IntPoly> {
        let chi = self.chromatic_polynomial()?;
        let k = self.n_components();
        if chi.coeffs().iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::Consistency(format!(
                "chromatic polynomial {chi} is not divisible by t^{k}"
            )));
        }
        Ok(IntPoly::new(chi.coeffs()[k..].to_vec()))
    }

    /// Constant term of the characteristic polynomial.
    pub fn mobius_invariant(&self) -> Result<BigInt> {
        Ok(self.characteristic_polynomial()?.coeff(0))
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    fn remove_vertex(&self, x: usize) -> Multigraph {
        let keep: Vec<usize> = (0..self.n_vertices).filter(|&v| v != x).collect();
        self.induced(&keep)
    }

    fn delete_edge(&self, e: (usize, usize)) -> Multigraph {
        let mut edges = self.edges.clone();
        let pos = edges.iter().position(|&f| f == e).expect("edge present");
        edges.remove(pos);
        Multigraph {
            n_vertices: self.n_vertices,
            edges,
        }
    }

    /// Identifies the endpoints of `e` (the larger label merges into the
    /// smaller) and simplifies.
    fn contract_edge(&self, (a, b): (usize, usize)) -> Multigraph {
        let relabel = |v: usize| match v.cmp(&b) {
            std::cmp::Ordering::Less => v,
            std::cmp::Ordering::Equal => a,
            std::cmp::Ordering::Greater => v - 1,
        };
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (relabel(u), relabel(v)))
            .filter(|(u, v)| u != v);
        Multigraph::new(self.n_vertices - 1, edges)
            .expect("contracted edges are valid")
            .simplify()
    }
}

fn falling_factorial(n: usize) -> IntPoly {
    (0..n).fold(IntPoly::one(), |acc, i| {
        acc * IntPoly::new(vec![-BigInt::from(i), BigInt::one()])
    })
}

fn chromatic_rec(g: &Multigraph, memo: &mut HashMap<Multigraph, IntPoly>) -> IntPoly {
    let n = g.n_vertices;
    if g.edges.is_empty() {
        return IntPoly::monomial(BigInt::one(), n);
    }
    if g.edges.len() == n * (n - 1) / 2 {
        return falling_factorial(n);
    }
    if let Some(p) = memo.get(g) {
        return p.clone();
    }
    let deg = g.degrees();
    let (x, &dx) = deg
        .iter()
        .enumerate()
        .min_by_key(|&(_, d)| *d)
        .expect("nonempty graph");
    let result = match dx {
        0 => chromatic_rec(&g.remove_vertex(x), memo).shift(1),
        1 => {
            let rest = chromatic_rec(&g.remove_vertex(x), memo);
            rest * IntPoly::from_i64s(&[-1, 1])
        }
        _ => {
            let e = *g
                .edges
                .iter()
                .find(|&&(u, v)| u == x || v == x)
                .expect("vertex of positive degree has an edge");
            chromatic_rec(&g.delete_edge(e), memo) - chromatic_rec(&g.contract_edge(e), memo)
        }
    };
    memo.insert(g.clone(), result.clone());
    result
}

impl fmt::Display for Multigraph {
    /// The ingestion format: `vertices N` followed by one `u v` line per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.n_vertices)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Multigraph {
    type Err = Error;

    /// Blank lines and `#` comments are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut n_vertices = None;
        let mut edges = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match (n_vertices, fields.as_slice()) {
                (None, ["vertices", n]) => {
                    n_vertices = Some(
                        n.parse::<usize>()
                            .map_err(|e| parse_err(format!("bad vertex count {n:?}: {e}")))?,
                    );
                }
                (None, _) => {
                    return Err(parse_err("expected header `vertices N`".into()));
                }
                (Some(n), [u, v]) => {
                    let u = u
                        .parse::<usize>()
                        .map_err(|e| parse_err(format!("bad vertex {u:?}: {e}")))?;
                    let v = v
                        .parse::<usize>()
                        .map_err(|e| parse_err(format!("bad vertex {v:?}: {e}")))?;
                    if u == v {
                        return Err(parse_err(format!("loop at vertex {u}")));
                    }
                    if u >= n || v >= n {
                        return Err(parse_err(format!("vertex out of range 0..{n}")));
                    }
                    edges.push((u, v));
                }
                (Some(_), _) => {
                    return Err(parse_err(format!("expected `u v`, got {line:?}")));
                }
            }
        }
        let n = n_vertices.ok_or(Error::Parse {
            line: 0,
            message: "missing header `vertices N`".into(),
        })?;
        Multigraph::new(n, edges)
    }
}

/// Partition of the vertex set into blocks. Blocks are sorted internally
/// and ordered by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    blocks: Vec<Vec<usize>>,
}

impl Composition {
    /// Builds a composition of `g` from arbitrary blocks, validating the
    /// partition and the connectivity of every block.
    pub fn new(g: &Multigraph, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let c = Self::canonical(blocks);
        c.validate(g)?;
        Ok(c)
    }

    pub fn singletons(n_vertices: usize) -> Self {
        Composition {
            blocks: (0..n_vertices).map(|v| vec![v]).collect(),
        }
    }

    pub fn whole(n_vertices: usize) -> Self {
        Composition {
            blocks: vec![(0..n_vertices).collect()],
        }
    }

    fn canonical(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b.first().copied());
        Composition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks `|C|`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    fn block_of(&self, n_vertices: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n_vertices];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }

    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let n = g.n_vertices();
        let mut seen = vec![false; n];
        for b in &self.blocks {
            if b.is_empty() {
                return Err(Error::InvalidComposition("empty block".into()));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::InvalidComposition(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidComposition(format!("vertex {v} repeated")));
                }
            }
            if !g.block_is_connected(b) {
                return Err(Error::InvalidComposition(format!(
                    "block {b:?} does not induce a connected subgraph"
                )));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidComposition(format!("vertex {v} not covered")));
        }
        Ok(())
    }
}

/// Iterator over restricted growth strings `a` of length `n`
/// (`a[0] = 0`, `a[i] <= 1 + max(a[..i])`), one per set partition.
pub struct RestrictedGrowthStrings {
    current: Vec<usize>,
    // prefix_max[i] = max(current[..=i])
    prefix_max: Vec<usize>,
    done: bool,
}

impl RestrictedGrowthStrings {
    pub fn new(n: usize) -> Self {
        RestrictedGrowthStrings {
            current: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for RestrictedGrowthStrings {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let n = self.current.len();
        // advance: bump the rightmost position that can grow, reset the tail
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] <= self.prefix_max[i - 1] {
                self.current[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.current[i]);
                for j in i + 1..n {
                    self.current[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                break;
            }
        }
        Some(out)
    }
}

fn blocks_from_rgs(rgs: &[usize]) -> Vec<Vec<usize>> {
    let k = rgs.iter().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); k];
    for (v, &b) in rgs.iter().enumerate() {
        blocks[b].push(v);
    }
    blocks
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if `a` and `b` were in different sets.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
