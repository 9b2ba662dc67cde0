//! Brute-force ground truth: explicit enumeration of independent subsets,
//! Fibonacci/Lucas strings, Hamming-distance cubes, and the
//! characteristic-vector correspondence between the two worlds.
//!
//! Everything is ordered canonically (subsets ascending as bit patterns,
//! strings lexicographically) so output is deterministic.

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph, GraphSpec, VertexSet};
use crate::hasse::build_hasse;
use crate::report::{Mismatch, VerificationReport};
use crate::ExactInt;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

/// Default cap on enumerable vertex counts: 2^24 candidate subsets.
pub const DEFAULT_ENUM_LIMIT: u32 = 24;

/// Carries the enumeration capacity limit. Subset masks live in a u64, so
/// the effective ceiling is 63 bits regardless of the configured limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    limit: u32,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator::new(DEFAULT_ENUM_LIMIT)
    }
}

impl Enumerator {
    pub fn new(limit: u32) -> Self {
        Enumerator {
            limit: limit.min(63),
        }
    }

    pub fn limit(&self) -> u32 {
        self.limit
    }

    fn check_capacity(&self, n: u32) -> Result<()> {
        if n > self.limit {
            Err(Error::CapacityExceeded {
                n,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// Every independent subset of `g`, ascending as bit patterns.
    ///
    /// A subset is independent iff no member's neighbourhood intersects it.
    pub fn independent_sets(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        self.check_capacity(g.n())?;
        let n = g.n();
        let masks = g.neighbor_masks();
        let mut out = Vec::new();
        for mask in 0..(1u64 << n) {
            let mut rest = mask;
            let mut independent = true;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if masks[v] & mask != 0 {
                    independent = false;
                    break;
                }
            }
            if independent {
                out.push(VertexSet::from_mask(mask, n));
            }
        }
        Ok(out)
    }

    /// Exact census of independent subsets: how many per size k, and how
    /// many of each size contain each vertex.
    pub fn census(&self, g: &Graph) -> Result<IndependenceCensus> {
        let sets = self.independent_sets(g)?;
        let mut by_size: BTreeMap<u32, u64> = BTreeMap::new();
        let mut by_vertex: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for s in &sets {
            let k = s.len();
            *by_size.entry(k).or_insert(0) += 1;
            for v in s.iter() {
                *by_vertex.entry((k, v)).or_insert(0) += 1;
            }
        }
        Ok(IndependenceCensus {
            total: sets.len() as u64,
            by_size,
            by_vertex,
        })
    }

    /// All binary strings of length n with no two consecutive 1s, in
    /// lexicographic order.
    pub fn fibonacci_strings(&self, n: u32) -> Result<Vec<BinaryString>> {
        self.check_capacity(n)?;
        let mut out = Vec::new();
        let mut bits = vec![0u8; n as usize];
        collect_no_adjacent_ones(&mut bits, 0, &mut out);
        Ok(out)
    }

    /// All binary strings of length n (n >= 2) with no two consecutive 1s
    /// and not both first and last bit set, in lexicographic order.
    pub fn lucas_strings(&self, n: u32) -> Result<Vec<BinaryString>> {
        if n < 2 {
            return Err(Error::LucasTooShort { n });
        }
        self.check_capacity(n)?;
        Ok(self
            .fibonacci_strings(n)?
            .into_iter()
            .filter(|s| !(s.bit(1) == 1 && s.bit(n) == 1))
            .collect())
    }

    /// Checks that independent subsets of P_n^(1) (or Q_n^(1)) are exactly
    /// the Fibonacci (or Lucas) strings under the characteristic-vector
    /// map, and that Hasse covers correspond exactly to Hamming-distance-1
    /// cube edges.
    pub fn cube_correspondence(&self, n: u32, variant: CubeVariant) -> Result<VerificationReport> {
        let (spec, strings) = match variant {
            CubeVariant::Fibonacci => (GraphSpec::path(n, 1), self.fibonacci_strings(n)?),
            CubeVariant::Lucas => (GraphSpec::cycle(n, 1), self.lucas_strings(n)?),
        };
        let subsets = self.independent_sets(&build_graph(&spec))?;
        let hasse = build_hasse(&subsets)?;
        let cube = build_hamming_cube(&strings)?;

        let mut report = VerificationReport::new(format!("cube {variant} n={n}"));
        report.note(format!(
            "{} independent subsets, {} strings, {} covers, {} cube edges",
            subsets.len(),
            strings.len(),
            hasse.cover_count(),
            cube.edge_count()
        ));

        // Vertex bijection: characteristic vectors of the subsets must be
        // exactly the enumerated strings.
        let mut characteristic: Vec<BinaryString> =
            subsets.iter().map(characteristic_string).collect();
        characteristic.sort();
        let mut expected = strings.clone();
        expected.sort();
        report.check_that(characteristic == expected, || Mismatch {
            location: format!("vertex bijection n={n}"),
            values: vec![
                ("subsets".into(), characteristic.len().to_string()),
                ("strings".into(), expected.len().to_string()),
            ],
        });

        // Edge correspondence: covers and Hamming-1 edges, both as
        // canonical string pairs, must coincide exactly.
        let cover_edges: BTreeSet<(BinaryString, BinaryString)> = hasse
            .cover_sets()
            .map(|(lo, hi)| ordered_pair(characteristic_string(&lo), characteristic_string(&hi)))
            .collect();
        let cube_edges: BTreeSet<(BinaryString, BinaryString)> = cube
            .edges()
            .map(|(u, v)| {
                ordered_pair(
                    strings[(u - 1) as usize].clone(),
                    strings[(v - 1) as usize].clone(),
                )
            })
            .collect();
        for missing in cube_edges.difference(&cover_edges) {
            report.check_that(false, || Mismatch {
                location: format!("cube edge without cover n={n}"),
                values: vec![
                    ("left".into(), missing.0.to_string()),
                    ("right".into(), missing.1.to_string()),
                ],
            });
        }
        for extra in cover_edges.difference(&cube_edges) {
            report.check_that(false, || Mismatch {
                location: format!("cover without cube edge n={n}"),
                values: vec![
                    ("lower".into(), extra.0.to_string()),
                    ("upper".into(), extra.1.to_string()),
                ],
            });
        }
        report.check_that(cover_edges.len() == cube_edges.len(), || Mismatch {
            location: format!("edge count n={n}"),
            values: vec![
                ("covers".into(), cover_edges.len().to_string()),
                ("cube".into(), cube_edges.len().to_string()),
            ],
        });
        Ok(report)
    }
}

fn collect_no_adjacent_ones(bits: &mut Vec<u8>, pos: usize, out: &mut Vec<BinaryString>) {
    if pos == bits.len() {
        out.push(BinaryString::new(bits.clone()));
        return;
    }
    bits[pos] = 0;
    collect_no_adjacent_ones(bits, pos + 1, out);
    if pos == 0 || bits[pos - 1] == 0 {
        bits[pos] = 1;
        collect_no_adjacent_ones(bits, pos + 1, out);
        bits[pos] = 0;
    }
}

fn ordered_pair(a: BinaryString, b: BinaryString) -> (BinaryString, BinaryString) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Which cube family a correspondence check targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubeVariant {
    Fibonacci,
    Lucas,
}

impl fmt::Display for CubeVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubeVariant::Fibonacci => write!(f, "fibonacci"),
            CubeVariant::Lucas => write!(f, "lucas"),
        }
    }
}

/// A fixed-length binary string; b_1 is the leftmost bit. Ordering is
/// lexicographic, matching the canonical string enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryString {
    bits: Vec<u8>,
}

impl BinaryString {
    pub fn new(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "bits are 0 or 1");
        BinaryString { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The i-th bit b_i, 1-indexed.
    pub fn bit(&self, i: u32) -> u8 {
        self.bits[(i - 1) as usize]
    }

    pub fn ones(&self) -> u32 {
        self.bits.iter().map(|&b| b as u32).sum()
    }

    /// Number of positions where the strings differ. Both strings must
    /// have the same length.
    pub fn hamming(&self, other: &BinaryString) -> u32 {
        assert_eq!(self.len(), other.len(), "Hamming distance needs equal lengths");
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count() as u32
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// The characteristic vector of a vertex subset: b_i = 1 iff v_i is a
/// member.
pub fn characteristic_string(set: &VertexSet) -> BinaryString {
    BinaryString::new(
        (1..=set.width())
            .map(|i| u8::from(set.contains(i)))
            .collect(),
    )
}

/// The graph on `strings` with edges exactly at Hamming distance 1.
/// Vertices are 1-indexed in enumeration order. All strings must share one
/// length; neighbours are found by single-bit flips, so construction is
/// linear in strings times length.
pub fn build_hamming_cube(strings: &[BinaryString]) -> Result<Graph> {
    if let Some(first) = strings.first() {
        for s in strings {
            if s.len() != first.len() {
                return Err(Error::WidthMismatch {
                    left: first.len(),
                    right: s.len(),
                });
            }
        }
    }
    let index: HashMap<&[u8], u32> = strings
        .iter()
        .enumerate()
        .map(|(idx, s)| (s.bits.as_slice(), idx as u32 + 1))
        .collect();
    debug_assert_eq!(index.len(), strings.len(), "strings are distinct");

    let mut g = Graph::new(strings.len() as u32);
    let mut flipped = Vec::new();
    for (idx, s) in strings.iter().enumerate() {
        let u = idx as u32 + 1;
        for pos in 0..s.len() {
            flipped.clear();
            flipped.extend_from_slice(&s.bits);
            flipped[pos] ^= 1;
            if let Some(&v) = index.get(flipped.as_slice()) {
                if v > u {
                    g.add_edge(u, v);
                }
            }
        }
    }
    Ok(g)
}

/// Per-size and per-vertex counts of the independent subsets of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceCensus {
    total: u64,
    by_size: BTreeMap<u32, u64>,
    by_vertex: BTreeMap<(u32, u32), u64>,
}

impl IndependenceCensus {
    pub fn total(&self) -> ExactInt {
        ExactInt::from(self.total)
    }

    /// Number of independent subsets of size k (0 when none).
    pub fn size_count(&self, k: u32) -> ExactInt {
        ExactInt::from(self.by_size.get(&k).copied().unwrap_or(0))
    }

    /// Number of independent k-subsets containing vertex v_i (0 when none).
    pub fn vertex_count(&self, k: u32, i: u32) -> ExactInt {
        ExactInt::from(self.by_vertex.get(&(k, i)).copied().unwrap_or(0))
    }

    pub fn max_size(&self) -> u32 {
        self.by_size.keys().next_back().copied().unwrap_or(0)
    }

    /// (size, count) pairs ascending by size.
    pub fn sizes(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.by_size.iter().map(|(&k, &c)| (k, c))
    }
}
