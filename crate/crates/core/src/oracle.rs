//! Brute-force cross-checks: every homogeneous polynomial solution of a
//! given degree by linear algebra, and reduction of an arbitrary solution to
//! the module spanned by the `I^{[l]}` over `F_p[z^p]`.

use std::collections::HashMap;

use crate::analysis::coordinate_matrix;
use crate::construct::{all_solutions, hypergeometric_solution, HypergeomSolution};
use crate::error::{Error, Result};
use crate::kz::KzInstance;
use crate::linalg::{rref, FpMatrix, SparseEchelon, SparseRow};
use crate::par::Exec;
use crate::poly::{LeadingTerm, Monomial, Permutation, Poly, VecPoly};
use crate::sl2::{is_singular, to_w_coords, SingVector};

pub const DEFAULT_CAP: usize = 20_000;

/// All monomials of total degree `d` in `n` variables, id-lex descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, i: usize, cur: &mut [u32], out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = d;
            out.push(Monomial::new(cur).expect("n within bounds"));
            return;
        }
        for e in (0..=d).rev() {
            cur[i] = e;
            rec(n, d - e, i + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, 0, &mut vec![0; n], &mut out);
    }
    out
}

/// Number of unknowns of the degree-`d` system.
pub fn unknown_count(n: usize, d: u32) -> usize {
    // n * C(d + n - 1, n - 1), computed without overflow for small n.
    let mut c: u128 = 1;
    for k in 1..n as u128 {
        c = c * (d as u128 + k) / k;
    }
    (n as u128 * c).min(usize::MAX as u128) as usize
}

/// Basis of all homogeneous degree-`d` solutions: the reduced kernel of the
/// system formed by the algebraic constraint at every monomial and each
/// denominator-cleared differential identity at every monomial.
pub fn solve_homogeneous(inst: &KzInstance, d: u32) -> Result<Vec<VecPoly>> {
    solve_homogeneous_with(inst, d, DEFAULT_CAP, |_| true)
}

/// As [`solve_homogeneous`], with an explicit cap and restricted to vectors
/// supported on monomials accepted by `keep`.
pub fn solve_homogeneous_with(
    inst: &KzInstance,
    d: u32,
    cap: usize,
    keep: impl Fn(&Monomial) -> bool,
) -> Result<Vec<VecPoly>> {
    let n = inst.n();
    let unknowns = unknown_count(n, d);
    if unknowns > cap {
        return Err(Error::ResourceLimit { unknowns, cap });
    }
    let monos: Vec<Monomial> = monomials_of_degree(n, d).into_iter().filter(|m| keep(m)).collect();
    let ncols = monos.len() * n;
    let f = inst.field();
    let mut ech = SparseEchelon::new(f, ncols);
    if ncols == 0 {
        return Ok(Vec::new());
    }
    let col = |mi: usize, k: usize| (mi * n + k) as u32;

    let mut rows: Vec<SparseRow> = Vec::new();
    for mi in 0..monos.len() {
        let row: SparseRow = (0..n)
            .filter(|&k| !inst.m()[k].is_multiple_of(f.modulus()))
            .map(|k| (col(mi, k), inst.m()[k] % f.modulus()))
            .collect();
        rows.push(row);
    }

    let q = inst.q() % f.modulus();
    for j in 0..n {
        let a_j = inst.vandermonde_factor(j, None);
        let others: Vec<(usize, FpMatrix, Poly)> = (0..n)
            .filter(|&l| l != j)
            .map(|l| (l, inst.omega(j, l).expect("valid pair"), inst.vandermonde_factor(j, Some(l))))
            .collect();
        // Equations indexed by (component k, output monomial).
        let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
        let mut eqs: Vec<Vec<(u32, u32)>> = Vec::new();
        let mut push = |k: usize, mono: Monomial, c: u32, v: u32| {
            let id = *index.entry((k, mono)).or_insert_with(|| {
                eqs.push(Vec::new());
                eqs.len() - 1
            });
            eqs[id].push((c, v));
        };
        for (mi, m) in monos.iter().enumerate() {
            // q A_j d/dz_j applied to z^m in component k.
            let e = m.exp(j);
            if e > 0 && q != 0 {
                let base = m.with_exp(j, e - 1);
                let s = f.mul(q, e % f.modulus());
                if s != 0 {
                    for &(t, a) in a_j.terms() {
                        let out = base.mul(&t);
                        for k in 0..n {
                            push(k, out, col(mi, k), f.mul(s, a));
                        }
                    }
                }
            }
            // -sum_l B_jl Omega_jl applied to z^m in component c.
            for (l, om, b) in &others {
                for &k in &[j, *l] {
                    for &c in &[j, *l] {
                        let w = om.get(k, c);
                        if w == 0 {
                            continue;
                        }
                        for &(t, bv) in b.terms() {
                            push(k, m.mul(&t), col(mi, c), f.neg(f.mul(w, bv)));
                        }
                    }
                }
            }
        }
        for mut e in eqs {
            e.sort_unstable_by_key(|x| x.0);
            let mut merged: SparseRow = Vec::with_capacity(e.len());
            for (c, v) in e {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 = f.add(last.1, v),
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|x| x.1 != 0);
            rows.push(merged);
        }
    }

    rows.sort_by_key(|r| r.first().map_or(u32::MAX, |x| x.0));
    for r in rows {
        if ech.is_full() {
            break;
        }
        if !r.is_empty() {
            ech.insert(r);
        }
    }
    Ok(ech
        .kernel()
        .into_iter()
        .map(|x| dense_to_vecpoly(inst, &monos, &x))
        .collect())
}

fn dense_to_vecpoly(inst: &KzInstance, monos: &[Monomial], x: &[u32]) -> VecPoly {
    let n = inst.n();
    let coords = (0..n)
        .map(|k| {
            Poly::from_terms(
                inst.field(),
                n,
                monos.iter().enumerate().filter_map(|(mi, m)| {
                    let v = x[mi * n + k];
                    (v != 0).then_some((*m, v))
                }),
            )
        })
        .collect();
    VecPoly::new(coords).expect("shared field and arity")
}

/// Coordinates of a degree-`d` vector in the oracle's column order.
fn vecpoly_to_dense(monos: &[Monomial], index: &HashMap<Monomial, usize>, v: &VecPoly) -> Option<Vec<u32>> {
    let n = v.len();
    let mut x = vec![0u32; monos.len() * n];
    for (k, c) in v.coords().iter().enumerate() {
        for (m, val) in c.terms() {
            x[index.get(m)? * n + k] = *val;
        }
    }
    Some(x)
}

/// Solves several degrees independently.
pub fn solve_degrees(inst: &KzInstance, degrees: &[u32], exec: Exec) -> Vec<Result<Vec<VecPoly>>> {
    exec.map(degrees, |&d| solve_homogeneous(inst, d))
}

/// Whether `m` survives the order-`L_j` derivative test with
/// `L = (M_1 + 1, ..., M_n + 1)`: every exponent has residue at most `M_j`.
pub fn is_admissible_monomial(inst: &KzInstance, m: &Monomial) -> bool {
    inst.big_m()
        .iter()
        .enumerate()
        .all(|(j, &mm)| m.exp(j) % inst.p() <= mm)
}

/// Admissible solutions of degree `d`: those killed by `d^{M_j + 1}/dz_j^{M_j + 1}` for all `j`.
pub fn admissible_solutions(inst: &KzInstance, d: u32, cap: usize) -> Result<Vec<VecPoly>> {
    solve_homogeneous_with(inst, d, cap, |m| is_admissible_monomial(inst, m))
}

/// All products `z^{p a} I^{[l]}` of total degree `d`.
pub fn module_generators(inst: &KzInstance, sols: &[HypergeomSolution], d: u32) -> Vec<VecPoly> {
    let n = inst.n();
    let p = inst.p();
    let mut out = Vec::new();
    for s in sols {
        if d < s.degree || !(d - s.degree).is_multiple_of(p) {
            continue;
        }
        for a in monomials_of_degree(n, (d - s.degree) / p) {
            let shift: Vec<u32> = a.exps(n).iter().map(|&e| e * p).collect();
            out.push(s.poly.mul_term(&Monomial::new(&shift).expect("bounded arity"), 1));
        }
    }
    out
}

/// Rank of a set of degree-`d` vectors.
pub fn span_rank(inst: &KzInstance, d: u32, vecs: &[VecPoly]) -> usize {
    let monos = monomials_of_degree(inst.n(), d);
    let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let dense: Vec<Vec<u32>> = vecs
        .iter()
        .map(|v| vecpoly_to_dense(&monos, &index, v).expect("homogeneous of degree d"))
        .collect();
    crate::linalg::rank(inst.field(), &dense)
}

/// One step of a reduction certificate: `I` contains `coeff * I^{[l]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateEntry {
    pub l: usize,
    pub coeff: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// `I = sum coeff_l I^{[l]}` with every `coeff_l` in `F_p[z^p]`.
    Reduced(Vec<CertificateEntry>),
    /// The leading term of the remainder matched no `I^{[l]}`.
    Irreducible {
        blocking: LeadingTerm,
        remainder: VecPoly,
    },
}

impl Reduction {
    pub fn is_reduced(&self) -> bool {
        matches!(self, Reduction::Reduced(_))
    }
}

/// `c` with `a = c * b`, if the vectors are proportional.
fn proportional(f: crate::fp::PrimeField, a: &[u32], b: &[u32]) -> Option<u32> {
    let i = b.iter().position(|&x| x != 0)?;
    let c = f.mul(a[i], f.inv(b[i]).ok()?);
    a.iter().zip(b).all(|(&x, &y)| x == f.mul(c, y)).then_some(c)
}

/// Peels off id-leading terms against the `I^{[l]}` until nothing is left.
pub fn reduce_to_hypergeometric(inst: &KzInstance, sol: &VecPoly) -> Result<Reduction> {
    if sol.len() != inst.n() || sol.arity() != inst.n() || !inst.verify_solution(sol).passed() {
        return Err(Error::NotASolution);
    }
    let n = inst.n();
    let f = inst.field();
    let p = inst.p();
    let id = Permutation::identity(n);
    let sols = all_solutions(inst);
    let leads: Vec<LeadingTerm> = sols
        .iter()
        .map(|s| s.poly.leading_term(&id).expect("nonzero"))
        .collect();
    let mut coeffs: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); sols.len()];
    let mut rest = sol.clone();
    while !rest.is_zero() {
        let lt = rest.leading_term(&id)?;
        let target = lt.coeff_values();
        let hit = leads.iter().enumerate().find_map(|(idx, ld)| {
            let shift = lt.monomial.checked_div(&ld.monomial)?;
            if (0..n).any(|i| shift.exp(i) % p != 0) {
                return None;
            }
            let c = proportional(f, &target, &ld.coeff_values())?;
            Some((idx, shift, c))
        });
        let Some((idx, shift, c)) = hit else {
            return Ok(Reduction::Irreducible {
                blocking: lt,
                remainder: rest,
            });
        };
        rest = rest.sub(&sols[idx].poly.mul_term(&shift, c));
        coeffs[idx].push((shift, c));
    }
    Ok(Reduction::Reduced(
        coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, t)| !t.is_empty())
            .map(|(i, t)| CertificateEntry {
                l: i + 1,
                coeff: Poly::from_terms(f, n, t),
            })
            .collect(),
    ))
}

/// `true` iff `I^{[l]}` is the only degree-`delta_l` solution with its
/// id-leading term: it lies in the oracle space and no solution has a
/// strictly smaller leading monomial.
pub fn uniqueness_check(inst: &KzInstance, l: usize) -> Result<bool> {
    uniqueness_within(inst, l, |_| true)
}

/// [`uniqueness_check`] among solutions whose exponents are all below `p`.
/// Multiples `z_k^p I^{[l + 1]}` share the degree of `I^{[l]}` and can have a
/// smaller leading monomial, so the unrestricted check may fail.
pub fn uniqueness_check_reduced(inst: &KzInstance, l: usize) -> Result<bool> {
    let p = inst.p();
    let n = inst.n();
    uniqueness_within(inst, l, |m| (0..n).all(|i| m.exp(i) < p))
}

fn uniqueness_within(inst: &KzInstance, l: usize, keep: impl Fn(&Monomial) -> bool) -> Result<bool> {
    let target = hypergeometric_solution(inst, l)?;
    let basis = solve_homogeneous_with(inst, target.degree, DEFAULT_CAP, keep)?;
    let n = inst.n();
    let monos = monomials_of_degree(n, target.degree);
    let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let dense: Vec<Vec<u32>> = basis
        .iter()
        .map(|v| vecpoly_to_dense(&monos, &index, v).expect("degree matches"))
        .collect();
    let f = inst.field();
    let reduced = rref(f, &dense);
    let mine = vecpoly_to_dense(&monos, &index, &target.poly).expect("degree matches");
    let mut with_target = dense;
    with_target.push(mine);
    if crate::linalg::rank(f, &with_target) != reduced.len() {
        return Ok(false);
    }
    let lead = target.poly.leading_term(&Permutation::identity(n))?.monomial;
    let lead_idx = index[&lead];
    Ok(reduced.iter().all(|row| {
        let pc = row.iter().position(|&x| x != 0).expect("nonzero row");
        pc / n <= lead_idx
    }))
}

/// The unique `c` with `w = sum_l c_l I^{[l]}(x)`.
pub fn initial_value(inst: &KzInstance, x: &[u32], w: &SingVector) -> Result<Vec<u32>> {
    if !inst.is_ample() {
        return Err(Error::Precondition("reduction is not ample".into()));
    }
    let n = inst.n();
    let p = inst.p();
    if x.len() != n {
        return Err(Error::Precondition(format!("point has {} coordinates, n = {n}", x.len())));
    }
    let xs: Vec<u32> = x.iter().map(|&v| v % p).collect();
    for i in 0..n {
        if xs[i + 1..].contains(&xs[i]) {
            return Err(Error::Precondition("point has repeated coordinates".into()));
        }
    }
    if !is_singular(inst, &w.a_coords) {
        return Err(Error::Precondition("vector is not singular".into()));
    }
    let target = to_w_coords(inst, &w.a_coords)?;
    let values = coordinate_matrix(inst)?.evaluate(&xs);
    // values[l][j]: column l of the system matrix is the w-coordinate vector of I^{[l]}(x).
    let system = FpMatrix::from_rows(inst.field(), values).transpose();
    system
        .solve(&target)
        .map_err(|_| Error::Precondition("evaluation matrix is singular".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(p: u64, q: u64, m: &[u32]) -> KzInstance {
        KzInstance::new(p, q, m).unwrap()
    }

    #[test]
    fn monomial_enumeration() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(ms[0].exps(3), vec![2, 0, 0]);
        assert_eq!(unknown_count(3, 2), 18);
        assert_eq!(monomials_of_degree(1, 4).len(), 1);
    }

    #[test]
    fn two_point_example_space() {
        let k = inst(3, 2, &[1, 1]);
        let f = k.field();
        let basis = solve_homogeneous(&k, 2).unwrap();
        assert_eq!(basis.len(), 1);
        let want = VecPoly::from_scalar_vector(&Poly::binomial_power(f, 2, 0, 1, 2), &[1, 2]);
        assert_eq!(span_rank(&k, 2, &[basis[0].clone(), want.clone()]), 1);
        assert!(solve_homogeneous(&k, 1).unwrap().is_empty());
        match reduce_to_hypergeometric(&k, &want).unwrap() {
            Reduction::Irreducible { blocking, .. } => assert_eq!(blocking.exponents(), vec![2, 0]),
            r => panic!("{r:?}"),
        }
    }

    #[test]
    fn degree_one_matches_construction() {
        let k = inst(5, 3, &[1, 1]);
        let basis = solve_homogeneous(&k, 1).unwrap();
        assert_eq!(basis.len(), 1);
        let i1 = hypergeometric_solution(&k, 1).unwrap().poly;
        assert_eq!(span_rank(&k, 1, &[basis[0].clone(), i1]), 1);
    }

    #[test]
    fn resource_cap() {
        let k = inst(5, 3, &[1, 1, 1]);
        assert!(matches!(
            solve_homogeneous_with(&k, 500, 100, |_| true),
            Err(Error::ResourceLimit { cap: 100, .. })
        ));
    }

    #[test]
    fn reduce_constructed_member() {
        let k = inst(5, 3, &[1, 1]);
        let f = k.field();
        let c = Poly::constant(f, 2, 1).add(&Poly::monomial(f, 2, Monomial::var(0, 5), 1));
        let i1 = hypergeometric_solution(&k, 1).unwrap().poly;
        match reduce_to_hypergeometric(&k, &i1.mul_poly(&c)).unwrap() {
            Reduction::Reduced(cert) => {
                assert_eq!(cert, vec![CertificateEntry { l: 1, coeff: c }]);
            }
            r => panic!("{r:?}"),
        }
        let bogus = VecPoly::from_scalar_vector(&Poly::var(f, 2, 0), &[1, 1]);
        assert_eq!(reduce_to_hypergeometric(&k, &bogus), Err(Error::NotASolution));
    }

    #[test]
    fn every_low_degree_solution_reduces() {
        let k = inst(5, 3, &[1, 1]);
        for d in 0..=k.sum_big_m() + 10 {
            for b in solve_homogeneous(&k, d).unwrap() {
                assert!(reduce_to_hypergeometric(&k, &b).unwrap().is_reduced(), "d={d}");
            }
        }
    }

    #[test]
    fn uniqueness_examples() {
        assert!(uniqueness_check(&inst(5, 3, &[1, 1]), 1).unwrap());
        let k = inst(19, 5, &[1, 1, 1]);
        // I^{[1]} + z_2^19 I^{[2]} has the leading term of I^{[1]}.
        assert!(!uniqueness_check(&k, 1).unwrap());
        assert!(uniqueness_check(&k, 2).unwrap());
        assert!(uniqueness_check_reduced(&k, 1).unwrap());
        assert!(uniqueness_check_reduced(&k, 2).unwrap());
        assert!(matches!(uniqueness_check(&inst(3, 2, &[1, 1]), 1), Err(Error::CycleOutOfRange { .. })));
    }

    #[test]
    fn initial_value_examples() {
        let k = inst(5, 3, &[1, 1]);
        let w1 = SingVector::from_w(&k, vec![1]).unwrap();
        assert_eq!(initial_value(&k, &[0, 1], &w1).unwrap(), vec![1]);
        let zero = SingVector::new(&k, vec![0, 0]).unwrap();
        assert_eq!(initial_value(&k, &[2, 4], &zero).unwrap(), vec![0]);
        assert!(matches!(initial_value(&k, &[1, 1], &w1), Err(Error::Precondition(_))));

        let k = inst(19, 5, &[1, 1, 1]);
        let x = [1, 5, 11];
        for l in 1..=2 {
            let v = hypergeometric_solution(&k, l).unwrap().poly.evaluate(&x);
            let w = SingVector::new(&k, v.iter().map(|s| s.value()).collect()).unwrap();
            let mut e = vec![0, 0];
            e[l - 1] = 1;
            assert_eq!(initial_value(&k, &x, &w).unwrap(), e);
        }
    }

    #[test]
    fn admissible_space_equals_module() {
        let k = inst(7, 3, &[1, 2]);
        let sols = all_solutions(&k);
        for d in 0..=k.sum_big_m() + 2 * k.p() {
            let adm = admissible_solutions(&k, d, DEFAULT_CAP).unwrap();
            let gens = module_generators(&k, &sols, d);
            let r = span_rank(&k, d, &gens);
            assert_eq!(adm.len(), r, "d={d}");
            let mut both = adm.clone();
            both.extend(gens);
            assert_eq!(span_rank(&k, d, &both), r);
        }
    }

    #[test]
    fn deterministic_basis() {
        let k = inst(7, 5, &[1, 2, 3]);
        let d = crate::construct::hypergeometric_solution(&k, 1).unwrap().degree;
        assert_eq!(solve_homogeneous(&k, d).unwrap(), solve_homogeneous(&k, d).unwrap());
    }
}
