use proptest::prelude::*;

use fpkz::acceptance::sweep_instances;
use fpkz::construct::{all_solutions, hypergeometric_solution};
use fpkz::fp::beta_fp;
use fpkz::oracle::{
    admissible_solutions, module_generators, solve_degrees, solve_homogeneous, span_rank, DEFAULT_CAP,
};
use fpkz::poly::PolyJson;
use fpkz::{Exec, KzInstance, Monomial, Permutation, Poly, PrimeField, VecPoly};

const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

fn arb_poly(arity: usize) -> impl Strategy<Value = Poly> {
    (prop::sample::select(&PRIMES[..]), prop::collection::vec((prop::collection::vec(0u32..4, arity), 0u32..13), 0..8))
        .prop_map(move |(p, terms)| {
            let f = PrimeField::new(p).unwrap();
            Poly::from_terms(f, arity, terms.into_iter().map(|(e, c)| (Monomial::new(&e).unwrap(), c)))
        })
}

/// Three polynomials over a common field.
fn arb_triple() -> impl Strategy<Value = (Poly, Poly, Poly)> {
    (arb_poly(3), arb_poly(3), arb_poly(3)).prop_map(|(a, b, c)| {
        let f = a.field();
        let rebase = |x: Poly| Poly::from_terms(f, 3, x.terms().to_vec());
        (a, rebase(b), rebase(c))
    })
}

fn arb_sigma(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_zero_based(v).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in arb_triple()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&a.neg()), Poly::zero(a.field(), 3));
    }

    #[test]
    fn leading_monomial_is_multiplicative((a, b, _c) in arb_triple(), sigma in arb_sigma(3)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let la = a.leading_term(&sigma).unwrap();
        let lb = b.leading_term(&sigma).unwrap();
        let lab = a.mul(&b).leading_term(&sigma).unwrap();
        prop_assert_eq!(lab.monomial, la.monomial.mul(&lb.monomial));
        prop_assert_eq!(lab.coeff[0], la.coeff[0] * lb.coeff[0]);
    }

    #[test]
    fn poly_json_round_trip(a in arb_poly(4)) {
        let text = serde_json::to_string(&a.to_json()).unwrap();
        let doc: PolyJson = serde_json::from_str(&text).unwrap();
        let back = Poly::from_json(&doc).unwrap();
        prop_assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn vecpoly_json_round_trip((a, b, c) in arb_triple()) {
        let v = VecPoly::new(vec![a, b, c]).unwrap();
        let back = VecPoly::from_json(&v.to_json()).unwrap();
        prop_assert_eq!(back, v);
    }

    /// Derivatives have no `x^(p-1)` term: the analog of Stokes' theorem.
    #[test]
    fn derivative_has_no_top_residue(a in arb_poly(2), extra in 0u32..40) {
        let p = a.field().modulus();
        let g = a.mul_term(&Monomial::var(0, extra), 1);
        let d = g.partial_derivative(0, 1);
        for &(m, _) in d.terms() {
            prop_assert!(m.exp(0) % p != p - 1);
        }
    }

    #[test]
    fn beta_is_symmetric(p in prop::sample::select(&PRIMES[..]), a in 1i64..13, b in 1i64..13) {
        let f = PrimeField::new(p).unwrap();
        let (x, y) = (beta_fp(a, b, f), beta_fp(b, a, f));
        prop_assert_eq!(x.is_ok(), y.is_ok());
        prop_assert_eq!(x.ok(), y.ok());
    }

    #[test]
    fn derivative_is_a_derivation((a, b, _c) in arb_triple(), var in 0usize..3) {
        let lhs = a.mul(&b).partial_derivative(var, 1);
        let rhs = a.partial_derivative(var, 1).mul(&b).add(&a.mul(&b.partial_derivative(var, 1)));
        prop_assert_eq!(lhs, rhs);
    }
}

fn instance_strategy() -> impl Strategy<Value = KzInstance> {
    let all: Vec<(u32, u32, Vec<u32>)> = sweep_instances()
        .into_iter()
        .filter(|i| i.rank() > 0 && i.n() <= 3)
        .map(|i| (i.p(), i.q(), i.m().to_vec()))
        .collect();
    prop::sample::select(all).prop_map(|(p, q, m)| KzInstance::new(p as u64, q as u64, &m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn frobenius_shift_preserves_solutions(inst in instance_strategy(), a in prop::collection::vec(0u32..3, 3)) {
        let n = inst.n();
        for s in all_solutions(&inst) {
            let shifted = inst.frobenius_shift(&s.poly, &a[..n]).unwrap();
            prop_assert!(inst.verify_solution(&shifted).passed());
        }
    }

    #[test]
    fn oracle_contains_hypergeometric_solutions(inst in instance_strategy()) {
        for s in all_solutions(&inst) {
            let basis = solve_homogeneous(&inst, s.degree).unwrap();
            let mut with = basis.clone();
            with.push(s.poly.clone());
            prop_assert_eq!(span_rank(&inst, s.degree, &with), basis.len());
        }
    }

    #[test]
    fn degree_filter(inst in instance_strategy(), d in 0u32..40) {
        let p = inst.p();
        prop_assume!(d % p != inst.sum_big_m() % p);
        prop_assert!(solve_homogeneous(&inst, d).unwrap().is_empty());
    }

    /// Relabelling the points permutes variables and components of `I^{[l]}`.
    #[test]
    fn relabelling_points(inst in instance_strategy(), sigma in arb_sigma(3)) {
        let n = inst.n();
        prop_assume!(n == 3);
        let order = sigma.as_slice().to_vec();
        let moved = inst.reordered(&order);
        for l in 1..=inst.rank() {
            let orig = hypergeometric_solution(&inst, l).unwrap().poly;
            let perm = hypergeometric_solution(&moved, l).unwrap().poly;
            // Coordinate k of `moved` is coordinate order[k] of `inst`, with z'_k = z_{order[k]}.
            for k in 0..n {
                let renamed = Poly::from_terms(
                    inst.field(),
                    n,
                    perm.coords()[k].terms().iter().map(|&(m, c)| {
                        let mut e = vec![0u32; n];
                        for (slot, &var) in order.iter().enumerate() {
                            e[var] = m.exp(slot);
                        }
                        (Monomial::new(&e).unwrap(), c)
                    }),
                );
                prop_assert_eq!(&renamed, &orig.coords()[order[k]]);
            }
        }
    }
}

#[test]
fn admissible_solutions_span_the_module() {
    for (p, q, m) in [(5u64, 3u64, vec![1u32, 1]), (7, 5, vec![1, 2, 3]), (7, 3, vec![2, 2, 1]), (11, 5, vec![2, 1])] {
        let inst = KzInstance::new(p, q, &m).unwrap();
        let sols = all_solutions(&inst);
        for d in 0..=inst.sum_big_m() + 2 * inst.p() {
            let adm = admissible_solutions(&inst, d, DEFAULT_CAP).unwrap();
            let gens = module_generators(&inst, &sols, d);
            let r = span_rank(&inst, d, &gens);
            assert_eq!(adm.len(), r, "{inst} d={d}");
            let mut both = adm;
            both.extend(gens);
            assert_eq!(span_rank(&inst, d, &both), r, "{inst} d={d}");
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let inst = KzInstance::new(11, 5, &[3, 4, 4]).unwrap();
    let degrees: Vec<u32> = (0..=inst.sum_big_m()).collect();
    let seq = solve_degrees(&inst, &degrees, Exec::Sequential);
    let par = solve_degrees(&inst, &degrees, Exec::Parallel);
    assert_eq!(seq, par);
}

#[test]
fn non_ample_solutions_verify() {
    let inst = KzInstance::new(13, 3, &[2, 2, 2, 1, 1, 1]).unwrap();
    assert!(!inst.is_ample());
    let s = hypergeometric_solution(&inst, 2).unwrap();
    assert!(inst.verify_solution(&s.poly).passed());
}
