use proptest::prelude::*;

use transpoly_core::*;

const FIELDS: [&str; 7] = [
    "gf:3", "gf:2^2", "gf:5", "gf:7", "gf:2^3", "gf:3^2", "gf:11",
];
const LOCAL: [&str; 6] = [
    "zmod:3^2",
    "zmod:2^3",
    "zmod:5^2",
    "fqu:3,2",
    "fqu:2,3",
    "fqu:2^2,2",
];

fn ring(s: &str) -> Ring {
    s.parse().unwrap()
}

fn poly(r: &Ring, raw: &[u64]) -> Polynomial {
    let n = r.size() as u64;
    Polynomial::new(r, raw.iter().map(|&c| r.elem(c % n).unwrap()).collect())
}

proptest! {
    #[test]
    fn transposition_swaps_exactly_two_points(f in 0..FIELDS.len(), a in 0u64..64, d in 1u64..64) {
        let f = ring(FIELDS[f]);
        let n = f.size() as u64;
        let (a, b) = (f.elem(a % n).unwrap(), f.elem((a + d % (n - 1) + 1) % n).unwrap());
        let t = transposition_poly_for(&f, a, b).unwrap();
        prop_assert_eq!(t.degree(), Some(f.size() - 2));
        prop_assert_eq!(transposition_poly_for(&f, b, a).unwrap().function_table(), t.function_table());
        for x in f.elements() {
            let want = if x == a { b } else if x == b { a } else { x };
            prop_assert_eq!(t.eval(x), want);
        }
    }

    #[test]
    fn criterion_agrees_with_evaluation(r in 0..LOCAL.len(), raw in prop::collection::vec(0u64..1000, 0..7)) {
        let r = ring(LOCAL[r]);
        let f = poly(&r, &raw);
        prop_assert_eq!(noebauer_is_permutation(&f).unwrap().verdict, brute_force_is_permutation(&f));
    }

    #[test]
    fn lifted_polynomials_permute(
        r in 0..LOCAL.len(),
        a in 0u64..1000,
        b in 0u64..1000,
        g in prop::collection::vec(0u64..1000, 1..3),
        l in prop::collection::vec(0u64..1000, 0..4),
    ) {
        let r = ring(LOCAL[r]);
        prop_assume!(r.residue_size() > 2);
        let n = r.size() as u64;
        let (a, b) = (r.elem(a % n).unwrap(), r.elem(b % n).unwrap());
        prop_assume!(r.residue(a) != r.residue(b));
        let (g, l) = (poly(&r, &g), poly(&r, &l));
        prop_assume!(r.elements().all(|x| r.is_unit(g.eval(x))));
        let h = corollary_h(&r, a, b, &g, &l).unwrap();
        prop_assert!(brute_force_is_permutation(&h));
        let k = r.residue_field();
        let (ra, rb) = (r.residue(a), r.residue(b));
        for c in k.elements() {
            let want = if c == ra { rb } else if c == rb { ra } else { c };
            prop_assert_eq!(residue_poly(&h).eval(c), want);
        }
    }

    #[test]
    fn sign_is_multiplicative(r in 0..LOCAL.len(), p in prop::collection::vec(0u64..1000, 2..4), q in prop::collection::vec(0u64..1000, 2..4)) {
        let r = ring(LOCAL[r]);
        let (f, g) = (poly(&r, &p), poly(&r, &q));
        let (Ok(s), Ok(t)) = (
            PermutationTable::from_function_table(&f.function_table()),
            PermutationTable::from_function_table(&g.function_table()),
        ) else {
            return Ok(());
        };
        let st = s.compose(&t).unwrap();
        prop_assert_eq!(st.sign(), s.sign() * t.sign());
        prop_assert_eq!(st.cycle_type().iter().sum::<usize>(), r.size());
        prop_assert!(s.compose(&s.inverse()).unwrap().is_identity());
        // composition of permutation polynomials is induced by f(g(x))
        prop_assert_eq!(st, PermutationTable::from_function_table(&f.compose(&g).unwrap().function_table()).unwrap());
    }
}
