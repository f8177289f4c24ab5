use std::time::Instant;

use indexmap::IndexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{generated_subgroup, polynomial_permutation_group, ClosureBounds, PermutationTable};
use crate::error::{Error, Result};
use crate::lift::LiftInputs;
use crate::poly::Polynomial;
use crate::ring::{Elem, Ring};

/// Upper bound on the number of candidate `g` polynomials scanned.
const MAX_G_CANDIDATES: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SamplingMode {
    /// Every `(a, b, g, l)` in the grid.
    Exhaustive,
    /// `samples` grid points drawn uniformly with replacement.
    Random { samples: usize },
}

/// The `(g, l)` grid swept by [`question_experiment`].
///
/// `g` ranges over all polynomials of degree at most `g_max_degree` taking
/// unit values on the residue system; `l` over `0` and the monomials
/// `1, x, .., x^l_max_degree`. `(a, b)` always ranges over all ordered
/// pairs with distinct residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingConfig {
    pub g_max_degree: usize,
    pub l_max_degree: usize,
    pub mode: SamplingMode,
    pub seed: u64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            g_max_degree: 1,
            l_max_degree: 2,
            mode: SamplingMode::Exhaustive,
            seed: 0,
        }
    }
}

impl SamplingConfig {
    pub fn to_json(&self) -> Value {
        let mode = match self.mode {
            SamplingMode::Exhaustive => json!("exhaustive"),
            SamplingMode::Random { samples } => json!({"random": samples}),
        };
        json!({
            "mode": mode,
            "g_max_degree": self.g_max_degree,
            "l_max_degree": self.l_max_degree,
        })
    }
}

/// One constructed polynomial of the sweep.
#[derive(Clone, Debug)]
pub struct ExperimentRow {
    pub a: Elem,
    pub b: Elem,
    pub g: Polynomial,
    pub l: Polynomial,
    pub h: Polynomial,
    pub permutation: PermutationTable,
}

#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub ring: Ring,
    pub sampling: SamplingConfig,
    pub rows: Vec<ExperimentRow>,
    /// |A|: distinct permutations among the rows.
    pub a_size: usize,
    pub generated_order: usize,
    pub group_order: usize,
    pub equals: bool,
    /// |P(R)| / |<A>|.
    pub index: usize,
    pub runtime_ms: u128,
}

impl ExperimentReport {
    pub fn odd_count(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.permutation.sign() < 0)
            .count()
    }

    pub fn to_json(&self) -> Value {
        let odd = self.odd_count();
        json!({
            "schema": 1,
            "ring": self.ring.to_string(),
            "sampling": self.sampling.to_json(),
            "seed": self.sampling.seed,
            "instances": self.rows.len(),
            "a_size": self.a_size,
            "generated_order": self.generated_order,
            "group_order": self.group_order,
            "equals": self.equals,
            "index": self.index,
            "parity": {"odd": odd, "even": self.rows.len() - odd},
            "runtime_ms": self.runtime_ms as u64,
        })
    }

    /// One line per row: `a,b,g,l,sign,cycle_type`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,g,l,sign,cycle_type\n");
        for row in &self.rows {
            let cycles: Vec<String> = row
                .permutation
                .cycle_type()
                .iter()
                .map(usize::to_string)
                .collect();
            out.push_str(&format!(
                "\"{}\",\"{}\",\"{}\",\"{}\",{},{}\n",
                self.ring.encode(row.a),
                self.ring.encode(row.b),
                row.g,
                row.l,
                row.permutation.sign(),
                cycles.join(" ")
            ));
        }
        out
    }
}

fn unit_valued_g_grid(ring: &Ring, max_degree: usize) -> Result<Vec<Polynomial>> {
    let n = ring.size();
    let count = n
        .checked_pow(max_degree as u32 + 1)
        .filter(|&c| c <= MAX_G_CANDIDATES)
        .ok_or_else(|| Error::RingTooLarge(format!("g grid of degree {max_degree} over {ring}")))?;
    let reps: Vec<Elem> = ring.residue_system().collect();
    let mut out = Vec::new();
    for code in 0..count {
        let mut rest = code;
        let coeffs: Vec<Elem> = (0..=max_degree)
            .map(|_| {
                let c = Elem((rest % n) as u32);
                rest /= n;
                c
            })
            .collect();
        let g = Polynomial::new(ring, coeffs);
        if reps.iter().all(|&r| ring.is_unit(g.eval(r))) {
            out.push(g);
        }
    }
    Ok(out)
}

fn l_grid(ring: &Ring, max_degree: usize) -> Vec<Polynomial> {
    std::iter::once(Polynomial::zero(ring))
        .chain((0..=max_degree).map(|d| Polynomial::monomial(ring, ring.one(), d)))
        .collect()
}

/// Builds the set A of permutations induced by the lifted transposition
/// polynomials over the sampling grid, and compares the group it generates
/// with P(R). The outcome is reported, not judged.
pub fn question_experiment(
    ring: &Ring,
    sampling: &SamplingConfig,
    bounds: &ClosureBounds,
) -> Result<ExperimentReport> {
    let started = Instant::now();
    if ring.is_field() {
        return Err(Error::NotLocalRing(ring.to_string()));
    }
    let q = ring.residue_size();
    if q <= 2 {
        return Err(Error::ResidueFieldTooSmall(q));
    }
    if ring.size() > bounds.max_ring_size {
        return Err(Error::RingTooLarge(format!(
            "{ring} exceeds the enumeration bound"
        )));
    }
    let pairs: Vec<(Elem, Elem)> = ring
        .elements()
        .flat_map(|a| ring.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| ring.residue(a) != ring.residue(b))
        .collect();
    let gs = unit_valued_g_grid(ring, sampling.g_max_degree)?;
    let ls = l_grid(ring, sampling.l_max_degree);
    let total = pairs.len() * gs.len() * ls.len();

    let picks: Vec<usize> = match sampling.mode {
        SamplingMode::Exhaustive => (0..total).collect(),
        SamplingMode::Random { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
            (0..samples).map(|_| rng.gen_range(0..total)).collect()
        }
    };

    let mut rows = Vec::with_capacity(picks.len());
    let mut a_set: IndexSet<Vec<u32>> = IndexSet::new();
    for pick in picks {
        let (pair, rest) = (pick / (gs.len() * ls.len()), pick % (gs.len() * ls.len()));
        let (a, b) = pairs[pair];
        let (g, l) = (&gs[rest / ls.len()], &ls[rest % ls.len()]);
        let h = LiftInputs::corollary(ring, a, b, g, l)?.build();
        let permutation = PermutationTable::from_function_table(&h.function_table())?;
        a_set.insert(permutation.image().to_vec());
        rows.push(ExperimentRow {
            a,
            b,
            g: g.clone(),
            l: l.clone(),
            h,
            permutation,
        });
    }

    let gens: Vec<PermutationTable> = a_set
        .iter()
        .map(|img| PermutationTable::new(ring, img.clone()))
        .collect::<Result<_>>()?;
    let generated = generated_subgroup(&gens)?;
    let group = polynomial_permutation_group(ring, bounds)?;
    debug_assert!(generated.is_subgroup_of(&group));
    Ok(ExperimentReport {
        ring: ring.clone(),
        sampling: *sampling,
        a_size: a_set.len(),
        generated_order: generated.order(),
        group_order: group.order(),
        equals: generated.order() == group.order(),
        index: group.order() / generated.order(),
        rows,
        runtime_ms: started.elapsed().as_millis(),
    })
}
