//! The inclusion-order Hasse diagram of a downward-closed family of vertex
//! sets. In such a family B covers A exactly when A = B minus one vertex,
//! so covers can be read off each element directly instead of comparing
//! pairs.

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use std::collections::HashMap;

/// Elements (sorted ascending as bit patterns) plus the cover relation as
/// index pairs (lower, upper) into the element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    elements: Vec<VertexSet>,
    covers: Vec<(u32, u32)>,
}

impl HasseDiagram {
    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    pub fn cover_count(&self) -> usize {
        self.covers.len()
    }

    /// Covers as (lower, upper) set pairs, in cover-list order.
    pub fn cover_sets(&self) -> impl Iterator<Item = (VertexSet, VertexSet)> + '_ {
        self.covers
            .iter()
            .map(|&(lo, hi)| (self.elements[lo as usize], self.elements[hi as usize]))
    }
}

/// Builds the Hasse diagram of `family`, which must be downward closed
/// under inclusion (every subset of a member is a member). Duplicates are
/// folded; elements are canonicalized to ascending bit-pattern order.
pub fn build_hasse(family: &[VertexSet]) -> Result<HasseDiagram> {
    let mut elements: Vec<VertexSet> = family.to_vec();
    elements.sort();
    elements.dedup();

    if let Some(first) = elements.first() {
        let width = first.width();
        for e in &elements {
            if e.width() != width {
                return Err(Error::WidthMismatch {
                    left: width as usize,
                    right: e.width() as usize,
                });
            }
        }
    }

    let index: HashMap<u64, u32> = elements
        .iter()
        .enumerate()
        .map(|(idx, e)| (e.mask(), idx as u32))
        .collect();

    let mut covers = Vec::new();
    for (hi, upper) in elements.iter().enumerate() {
        for v in upper.iter() {
            let lower = upper.without_vertex(v);
            match index.get(&lower.mask()) {
                Some(&lo) => covers.push((lo, hi as u32)),
                None => {
                    return Err(Error::NotDownwardClosed {
                        missing: lower.to_string(),
                        parent: upper.to_string(),
                    })
                }
            }
        }
    }
    covers.sort();

    Ok(HasseDiagram { elements, covers })
}
