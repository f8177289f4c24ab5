use indexmap::IndexSet;

use super::GroupClosure;
use crate::error::{Error, Result};
use crate::poly::FunctionTable;
use crate::ring::{Elem, Ring};

/// Function tables are stored one byte per point.
const HARD_MAX_RING_SIZE: usize = 256;

/// Limits for enumerating polynomial functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureBounds {
    pub max_ring_size: usize,
    pub max_functions: usize,
}

impl Default for ClosureBounds {
    fn default() -> Self {
        ClosureBounds {
            max_ring_size: 100,
            max_functions: 1 << 21,
        }
    }
}

/// Every function `R -> R` induced by a polynomial in `R[x]`.
#[derive(Clone, Debug)]
pub struct PolynomialFunctions {
    ring: Ring,
    tables: IndexSet<Box<[u8]>>,
}

impl PolynomialFunctions {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn contains(&self, t: &FunctionTable) -> bool {
        t.ring() == &self.ring && {
            let key: Vec<u8> = t.values().iter().map(|e| e.index() as u8).collect();
            self.tables.contains(key.as_slice())
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = FunctionTable> + '_ {
        self.tables.iter().map(|t| {
            FunctionTable::new(&self.ring, t.iter().map(|&v| Elem(v as u32)).collect())
                .expect("stored tables fit the ring")
        })
    }
}

/// Fixed point of the constants under `F -> F * id + c`.
///
/// Every polynomial function is reached by Horner's rule, and every step
/// uses only pointwise `+` and `*` with the identity and constants, so the
/// result is exactly the closure of `{id} ∪ constants` under `+` and `*`.
pub fn all_polynomial_functions(
    ring: &Ring,
    bounds: &ClosureBounds,
) -> Result<PolynomialFunctions> {
    let n = ring.size();
    if n > bounds.max_ring_size.min(HARD_MAX_RING_SIZE) {
        return Err(Error::RingTooLarge(format!(
            "{ring} has {n} elements, bound is {}",
            bounds.max_ring_size.min(HARD_MAX_RING_SIZE)
        )));
    }
    let elems: Vec<Elem> = ring.elements().collect();
    // times_x[v * n + x] = v * x, plus[v * n + c] = v + c
    let mut times_x = vec![0u8; n * n];
    let mut plus = vec![0u8; n * n];
    for &v in &elems {
        for &x in &elems {
            times_x[v.index() * n + x.index()] = ring.mul(v, x).index() as u8;
            plus[v.index() * n + x.index()] = ring.add(v, x).index() as u8;
        }
    }

    let mut tables: IndexSet<Box<[u8]>> = IndexSet::new();
    for c in 0..n {
        tables.insert(vec![c as u8; n].into_boxed_slice());
    }
    let mut next = 0;
    let mut scratch = vec![0u8; n];
    while next < tables.len() {
        let current = tables[next].clone();
        next += 1;
        for (x, slot) in scratch.iter_mut().enumerate() {
            *slot = times_x[current[x] as usize * n + x];
        }
        for c in 0..n {
            let candidate: Box<[u8]> = scratch.iter().map(|&v| plus[v as usize * n + c]).collect();
            if tables.insert(candidate) && tables.len() > bounds.max_functions {
                return Err(Error::RingTooLarge(format!(
                    "{ring} has more than {} polynomial functions",
                    bounds.max_functions
                )));
            }
        }
    }
    Ok(PolynomialFunctions {
        ring: ring.clone(),
        tables,
    })
}

/// P(R): the bijective polynomial functions, as a permutation group.
pub fn polynomial_permutation_group(ring: &Ring, bounds: &ClosureBounds) -> Result<GroupClosure> {
    let functions = all_polynomial_functions(ring, bounds)?;
    let n = ring.size();
    let elements: IndexSet<Box<[u32]>> = functions
        .tables
        .iter()
        .filter(|t| {
            let mut seen = vec![false; n];
            t.iter()
                .all(|&v| !std::mem::replace(&mut seen[v as usize], true))
        })
        .map(|t| t.iter().map(|&v| v as u32).collect())
        .collect();
    Ok(GroupClosure::from_elements(ring, Vec::new(), elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::PermutationTable;
    use crate::poly::Polynomial;
    use std::collections::HashSet;

    fn r(s: &str) -> Ring {
        s.parse().unwrap()
    }

    /// Naive closure of {id} ∪ constants under pointwise + and *, over all
    /// pairs, until nothing new appears.
    fn pairwise_closure(ring: &Ring) -> HashSet<Vec<Elem>> {
        let mut set: HashSet<Vec<Elem>> = ring.elements().map(|c| vec![c; ring.size()]).collect();
        set.insert(ring.elements().collect());
        loop {
            let current: Vec<Vec<Elem>> = set.iter().cloned().collect();
            let before = set.len();
            for f in &current {
                for g in &current {
                    let sum = f.iter().zip(g).map(|(&a, &b)| ring.add(a, b)).collect();
                    let prod = f.iter().zip(g).map(|(&a, &b)| ring.mul(a, b)).collect();
                    set.insert(sum);
                    set.insert(prod);
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    #[test]
    fn counts_match_pairwise_closure() {
        for ring in ["zmod:2^2", "gf:3", "fqu:2,2", "gf:2^2"].map(r) {
            let fast = all_polynomial_functions(&ring, &ClosureBounds::default()).unwrap();
            let slow = pairwise_closure(&ring);
            assert_eq!(fast.len(), slow.len(), "{ring}");
            for t in fast.iter() {
                assert!(slow.contains(t.values()));
            }
        }
    }

    #[test]
    fn function_count_examples() {
        let b = ClosureBounds::default();
        assert_eq!(
            all_polynomial_functions(&r("zmod:2^2"), &b).unwrap().len(),
            64
        );
        assert_eq!(all_polynomial_functions(&r("gf:3"), &b).unwrap().len(), 27);
        assert_eq!(
            all_polynomial_functions(&r("gf:2^2"), &b).unwrap().len(),
            256
        );
        // F_2[u]/(u^2): regression value from the closure, matched by the
        // pairwise oracle above.
        assert_eq!(
            all_polynomial_functions(&r("fqu:2,2"), &b).unwrap().len(),
            64
        );
    }

    #[test]
    fn bounds_enforced() {
        let tight = ClosureBounds {
            max_ring_size: 8,
            max_functions: 1 << 21,
        };
        assert!(matches!(
            all_polynomial_functions(&r("zmod:3^2"), &tight),
            Err(Error::RingTooLarge(_))
        ));
        let few = ClosureBounds {
            max_ring_size: 100,
            max_functions: 100,
        };
        assert!(matches!(
            all_polynomial_functions(&r("gf:5"), &few),
            Err(Error::RingTooLarge(_))
        ));
    }

    #[test]
    fn group_examples() {
        let b = ClosureBounds::default();
        assert_eq!(
            polynomial_permutation_group(&r("gf:3"), &b)
                .unwrap()
                .order(),
            6
        );
        assert_eq!(
            polynomial_permutation_group(&r("zmod:2^2"), &b)
                .unwrap()
                .order(),
            8
        );
        let z9 = polynomial_permutation_group(&r("zmod:3^2"), &b).unwrap();
        assert_eq!(362_880 % z9.order(), 0);
        assert!(z9.order() < 362_880);
        assert_eq!(z9.order(), 1296);
    }

    #[test]
    fn low_degree_polynomials_witness_z4_group() {
        let z4 = r("zmod:2^2");
        let group = polynomial_permutation_group(&z4, &ClosureBounds::default()).unwrap();
        let mut witnessed = HashSet::new();
        for code in 0..256u32 {
            let coeffs: Vec<Elem> = (0..4).map(|i| Elem((code >> (2 * i)) & 3)).collect();
            let table = Polynomial::new(&z4, coeffs).function_table();
            if let Ok(p) = PermutationTable::from_function_table(&table) {
                assert!(group.contains(&p));
                witnessed.insert(p.image().to_vec());
            }
        }
        assert_eq!(witnessed.len(), group.order());
    }
}
