//! Explicit graph construction for powers of paths and cycles, plus the
//! bit-vector vertex sets the enumeration code works with.

use std::collections::BTreeSet;
use std::fmt;

/// Which family of graphs to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    /// P_n^(h): vertices v_1..v_n, edges between indices at distance <= h.
    PathPower,
    /// Q_n^(h): as the path, plus wrap-around edges at distance >= n - h.
    CyclePower,
}

/// A concrete graph to construct: family, vertex count, and power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphSpec {
    pub family: GraphFamily,
    pub n: u32,
    pub h: u32,
}

impl GraphSpec {
    pub fn path(n: u32, h: u32) -> Self {
        GraphSpec {
            family: GraphFamily::PathPower,
            n,
            h,
        }
    }

    pub fn cycle(n: u32, h: u32) -> Self {
        GraphSpec {
            family: GraphFamily::CyclePower,
            n,
            h,
        }
    }
}

/// An undirected simple graph on vertices 1..=n, stored as a sorted edge
/// set. Vertex counts are small here (these graphs get enumerated over, or
/// are Hamming cubes over a few hundred strings), so a plain `BTreeSet`
/// keeps everything canonical and deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl Graph {
    pub fn new(n: u32) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Inserts the undirected edge {u, v}. Loops are rejected, duplicate
    /// inserts are no-ops.
    pub fn add_edge(&mut self, u: u32, v: u32) {
        assert!(u != v, "no self-loops");
        assert!(
            (1..=self.n).contains(&u) && (1..=self.n).contains(&v),
            "vertices are 1..={}",
            self.n
        );
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    /// One "u v" pair per line, 1-indexed, sorted ascending.
    pub fn edge_list_text(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Neighbourhoods as bit masks with vertex v_i at bit i-1. Only valid
    /// when n fits a machine word; enumeration enforces its capacity limit
    /// before calling this.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bit masks hold at most 64 vertices");
        let mut masks = vec![0u64; self.n as usize];
        for &(u, v) in &self.edges {
            masks[(u - 1) as usize] |= 1 << (v - 1);
            masks[(v - 1) as usize] |= 1 << (u - 1);
        }
        masks
    }
}

/// Builds P_n^(h) or Q_n^(h): vertices i != j are adjacent iff
/// |j - i| <= h, and for cycles additionally iff |j - i| >= n - h.
pub fn build_graph(spec: &GraphSpec) -> Graph {
    let n = spec.n;
    let h = spec.h as i64;
    let mut g = Graph::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let dist = (j - i) as i64;
            let adjacent = match spec.family {
                GraphFamily::PathPower => dist <= h,
                GraphFamily::CyclePower => dist <= h || dist >= n as i64 - h,
            };
            if adjacent {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// A subset of the vertices 1..=n, stored as a bit mask with v_i at
/// bit i-1. Ordering is by mask value, which makes sorted collections of
/// subsets come out in the canonical enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    mask: u64,
    n: u32,
}

impl VertexSet {
    pub fn empty(n: u32) -> Self {
        VertexSet { mask: 0, n }
    }

    pub fn from_mask(mask: u64, n: u32) -> Self {
        assert!(n <= 64);
        assert!(
            n == 64 || mask < (1u64 << n),
            "mask has bits above width {n}"
        );
        VertexSet { mask, n }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn width(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Membership of vertex v_i (1-indexed).
    pub fn contains(&self, i: u32) -> bool {
        i >= 1 && i <= self.n && self.mask & (1 << (i - 1)) != 0
    }

    pub fn with_vertex(&self, i: u32) -> Self {
        assert!((1..=self.n).contains(&i));
        VertexSet {
            mask: self.mask | 1 << (i - 1),
            n: self.n,
        }
    }

    pub fn without_vertex(&self, i: u32) -> Self {
        assert!((1..=self.n).contains(&i));
        VertexSet {
            mask: self.mask & !(1 << (i - 1)),
            n: self.n,
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.mask & !other.mask == 0
    }

    /// Member vertices, ascending.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.n).filter(|&i| self.contains(i))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (idx, v) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
