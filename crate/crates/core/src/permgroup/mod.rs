//! Permutations of ring elements, subgroup closure, and the group of
//! polynomial permutations.

mod experiment;
mod functions;

use std::collections::VecDeque;
use std::fmt;

use indexmap::IndexSet;

pub use experiment::{
    question_experiment, ExperimentReport, ExperimentRow, SamplingConfig, SamplingMode,
};
pub use functions::{
    all_polynomial_functions, polynomial_permutation_group, ClosureBounds, PolynomialFunctions,
};

use crate::error::{Error, Result};
use crate::poly::FunctionTable;
use crate::ring::{check_same, Elem, Ring};

/// A bijection of a ring's elements, by canonical index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermutationTable {
    ring: Ring,
    image: Vec<u32>,
}

impl PermutationTable {
    pub fn new(ring: &Ring, image: Vec<u32>) -> Result<PermutationTable> {
        if image.len() != ring.size() {
            return Err(Error::NotBijective);
        }
        let mut seen = vec![false; image.len()];
        for &i in &image {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::NotBijective),
            }
        }
        Ok(PermutationTable {
            ring: ring.clone(),
            image,
        })
    }

    pub fn identity(ring: &Ring) -> PermutationTable {
        PermutationTable {
            ring: ring.clone(),
            image: (0..ring.size() as u32).collect(),
        }
    }

    pub fn from_function_table(table: &FunctionTable) -> Result<PermutationTable> {
        PermutationTable::new(
            table.ring(),
            table.values().iter().map(|e| e.index() as u32).collect(),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn apply(&self, x: Elem) -> Elem {
        Elem(self.image[x.index()])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PermutationTable) -> Result<PermutationTable> {
        check_same(&self.ring, &other.ring)?;
        Ok(PermutationTable {
            ring: self.ring.clone(),
            image: compose_raw(&self.image, &other.image),
        })
    }

    pub fn inverse(&self) -> PermutationTable {
        let mut inv = vec![0u32; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        PermutationTable {
            ring: self.ring.clone(),
            image: inv,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by
    /// that point. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32);
                i = self.image[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths, largest first; they sum to |R|.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// `(-1)^(|R| - #cycles)`.
    pub fn sign(&self) -> i8 {
        if (self.image.len() - self.cycles().len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for PermutationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        write!(f, " on {}", self.ring)
    }
}

fn compose_raw(outer: &[u32], inner: &[u32]) -> Vec<u32> {
    inner.iter().map(|&i| outer[i as usize]).collect()
}

/// A finite permutation group, stored element by element.
#[derive(Clone, Debug)]
pub struct GroupClosure {
    ring: Ring,
    generators: Vec<PermutationTable>,
    elements: IndexSet<Box<[u32]>>,
}

impl GroupClosure {
    pub(crate) fn from_elements(
        ring: &Ring,
        generators: Vec<PermutationTable>,
        elements: IndexSet<Box<[u32]>>,
    ) -> GroupClosure {
        GroupClosure {
            ring: ring.clone(),
            generators,
            elements,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Generators this group was closed from; empty for groups built by
    /// filtering a known element set.
    pub fn generators(&self) -> &[PermutationTable] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &PermutationTable) -> bool {
        p.ring == self.ring && self.elements.contains(p.image.as_slice())
    }

    /// Elements in discovery order.
    pub fn elements(&self) -> impl Iterator<Item = PermutationTable> + '_ {
        self.elements.iter().map(|img| PermutationTable {
            ring: self.ring.clone(),
            image: img.to_vec(),
        })
    }

    pub fn element(&self, i: usize) -> Option<PermutationTable> {
        self.elements.get_index(i).map(|img| PermutationTable {
            ring: self.ring.clone(),
            image: img.to_vec(),
        })
    }

    pub fn is_subgroup_of(&self, other: &GroupClosure) -> bool {
        self.ring == other.ring
            && self
                .elements
                .iter()
                .all(|e| other.elements.contains(e.as_ref()))
    }
}

/// Smallest subgroup containing `gens`, by breadth-first multiplication
/// from the identity.
pub fn generated_subgroup(gens: &[PermutationTable]) -> Result<GroupClosure> {
    let first = gens.first().ok_or(Error::EmptyGenerators)?;
    let ring = first.ring.clone();
    for g in gens {
        check_same(&ring, &g.ring)?;
    }
    let mut elements: IndexSet<Box<[u32]>> = IndexSet::new();
    let identity = PermutationTable::identity(&ring).image.into_boxed_slice();
    elements.insert(identity.clone());
    let mut frontier = VecDeque::from([identity]);
    while let Some(current) = frontier.pop_front() {
        for g in gens {
            let next = compose_raw(&g.image, &current).into_boxed_slice();
            if elements.insert(next.clone()) {
                frontier.push_back(next);
            }
        }
    }
    Ok(GroupClosure::from_elements(&ring, gens.to_vec(), elements))
}
