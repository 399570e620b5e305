//! KZ instances, the Omega matrices and the polynomial verifier.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{is_prime, PrimeField};
use crate::linalg::FpMatrix;
use crate::poly::{Monomial, Poly, VecPoly, MAX_VARS};

/// Arithmetic data of the system: primes `p > q`, weights `0 < m_i < q`,
/// and the derived exponents `M_i`, rank `r` and ample flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KzInstance {
    field: PrimeField,
    q: u32,
    m: Vec<u32>,
    big_m: Vec<u32>,
    rank: usize,
    ample: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub p: u32,
    pub q: u32,
    pub m: Vec<u32>,
}

impl KzInstance {
    pub fn new(p: u64, q: u64, m: &[u32]) -> Result<Self> {
        let bad = |s: String| Err(Error::InvalidInstance(s));
        let n = m.len();
        if !is_prime(p) {
            return bad(format!("p = {p} is not prime"));
        }
        if !is_prime(q) {
            return bad(format!("q = {q} is not prime"));
        }
        if p <= q {
            return bad(format!("need p > q, got p = {p}, q = {q}"));
        }
        if n < 2 || p <= n as u64 {
            return bad(format!("need p > n >= 2, got n = {n}, p = {p}"));
        }
        if n + 1 > MAX_VARS {
            return bad(format!("n = {n} exceeds the supported maximum {}", MAX_VARS - 1));
        }
        if let Some(mi) = m.iter().find(|&&mi| mi == 0 || mi as u64 >= q) {
            return bad(format!("weights must satisfy 0 < m_i < q = {q}, got {mi}"));
        }
        let field = PrimeField::new(p).map_err(|e| Error::InvalidInstance(e.to_string()))?;
        let q_inv = field.inv(q as u32 % field.modulus())?;
        let big_m: Vec<u32> = m
            .iter()
            .map(|&mi| field.mul(field.neg(mi), q_inv))
            .collect();
        debug_assert!(big_m.iter().all(|&x| x > 0));
        let total: u64 = big_m.iter().map(|&x| x as u64).sum();
        let rank = (total / p) as usize;
        Ok(KzInstance {
            field,
            q: q as u32,
            m: m.to_vec(),
            big_m,
            rank,
            ample: rank == n - 1,
        })
    }

    pub fn from_json(doc: &InstanceJson) -> Result<Self> {
        Self::new(doc.p as u64, doc.q as u64, &doc.m)
    }

    pub fn to_json(&self) -> InstanceJson {
        InstanceJson {
            p: self.p(),
            q: self.q,
            m: self.m.clone(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self) -> &[u32] {
        &self.m
    }

    /// The exponents `M_i`: least positive integers with `q M_i = -m_i (mod p)`.
    pub fn big_m(&self) -> &[u32] {
        &self.big_m
    }

    pub fn sum_big_m(&self) -> u32 {
        self.big_m.iter().sum()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_ample(&self) -> bool {
        self.ample
    }

    /// Homogeneity degree `sum M_j - l p` of the `l`-th solution.
    pub fn delta(&self, l: usize) -> Result<u32> {
        self.check_cycle(l)?;
        Ok(self.sum_big_m() - l as u32 * self.p())
    }

    pub fn check_cycle(&self, l: usize) -> Result<()> {
        if l == 0 || l > self.rank {
            return Err(Error::CycleOutOfRange { l, r: self.rank });
        }
        Ok(())
    }

    /// The same data with parameters listed in the order `sigma`.
    pub fn reordered(&self, sigma: &[usize]) -> KzInstance {
        KzInstance {
            field: self.field,
            q: self.q,
            m: sigma.iter().map(|&i| self.m[i]).collect(),
            big_m: sigma.iter().map(|&i| self.big_m[i]).collect(),
            rank: self.rank,
            ample: self.ample,
        }
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        let n = self.n();
        if i == j || i >= n || j >= n {
            return Err(Error::Index(format!("pair ({}, {}) with n = {n}", i + 1, j + 1)));
        }
        Ok(())
    }

    /// `Omega_ij` (0-based indices): row `i` has `-m_j, m_j` at columns
    /// `i, j`; row `j` has `m_i, -m_i`.
    pub fn omega(&self, i: usize, j: usize) -> Result<FpMatrix> {
        self.check_pair(i, j)?;
        Ok(pair_matrix(self.field, self.n(), i, j, -(self.m[j] as i64), -(self.m[i] as i64)))
    }

    /// `Omega^M_jl`: `M_l, -M_l` in row `j`; `-M_j, M_j` in row `l`.
    pub fn omega_m(&self, j: usize, l: usize) -> Result<FpMatrix> {
        self.check_pair(j, l)?;
        Ok(pair_matrix(self.field, self.n(), j, l, self.big_m[l] as i64, self.big_m[j] as i64))
    }

    /// `Omega^M_j = sum_{l > j} Omega^M_jl`.
    pub fn omega_m_row_sum(&self, j: usize) -> Result<FpMatrix> {
        if j >= self.n() {
            return Err(Error::Index(format!("row {} with n = {}", j + 1, self.n())));
        }
        let zero = FpMatrix::zeros(self.field, self.n(), self.n());
        (j + 1..self.n()).try_fold(zero, |acc, l| Ok(acc.add(&self.omega_m(j, l)?)))
    }

    /// `(z_j - z_k)` as a polynomial in `n` variables.
    fn diff(&self, j: usize, k: usize) -> Poly {
        Poly::binomial_power(self.field, self.n(), j, k, 1)
    }

    /// `prod_{k not in skip} (z_j - z_k)` over `k != j`.
    pub fn vandermonde_factor(&self, j: usize, skip: Option<usize>) -> Poly {
        (0..self.n())
            .filter(|&k| k != j && Some(k) != skip)
            .fold(Poly::constant(self.field, self.n(), 1), |acc, k| acc.mul(&self.diff(j, k)))
    }

    /// Checks the algebraic constraint and every denominator-cleared
    /// differential equation as polynomial identities.
    pub fn verify_solution(&self, sol: &VecPoly) -> VerificationReport {
        let n = self.n();
        let f = self.field;
        let algebraic = sol.dot(&self.m);
        let q = self.q % f.modulus();
        let equations = (0..n)
            .map(|j| {
                let lhs = sol.partial_derivative(j, 1).mul_poly(&self.vandermonde_factor(j, None)).scale(q);
                let rhs = (0..n).filter(|&l| l != j).fold(VecPoly::zero(f, n, n), |acc, l| {
                    let om = self.omega(j, l).expect("valid pair");
                    acc.add(&sol.apply_matrix(om.rows()).mul_poly(&self.vandermonde_factor(j, Some(l))))
                });
                EquationResidual {
                    j: j + 1,
                    residual: lhs.sub(&rhs),
                }
            })
            .collect();
        VerificationReport {
            algebraic_residual: algebraic,
            equations,
        }
    }

    /// `true` when the order-`order[j]` derivative in `z_j` vanishes for every `j`.
    pub fn is_l_admissible(&self, sol: &VecPoly, order: &[u32]) -> Result<bool> {
        if order.len() != self.n() {
            return Err(Error::Index(format!(
                "admissibility vector has length {}, n = {}",
                order.len(),
                self.n()
            )));
        }
        Ok(order
            .iter()
            .enumerate()
            .all(|(j, &k)| sol.partial_derivative(j, k).is_zero()))
    }

    /// `(l-1) p < sum_{i in S} M_i < l p` for every subset `S` of size `l < n`.
    pub fn ample_inequalities_check(&self) -> Result<bool> {
        if !self.ample {
            return Err(Error::Precondition("reduction is not ample".into()));
        }
        let n = self.n();
        let p = self.p() as u64;
        for mask in 1u32..(1 << n) {
            let l = mask.count_ones() as u64;
            if l as usize >= n {
                continue;
            }
            let s: u64 = (0..n)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| self.big_m[i] as u64)
                .sum();
            if !((l - 1) * p < s && s < l * p) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiplies by `z^{p a}`, an element of `F_p[z^p]`.
    pub fn frobenius_shift(&self, sol: &VecPoly, a: &[u32]) -> Result<VecPoly> {
        let exps: Vec<u32> = a.iter().map(|&x| x * self.p()).collect();
        Ok(sol.mul_term(&Monomial::new(&exps)?, 1))
    }
}

fn pair_matrix(field: PrimeField, n: usize, i: usize, j: usize, a: i64, b: i64) -> FpMatrix {
    // Row i: (a at i, -a at j); row j: (-b at i, b at j).
    let mut out = FpMatrix::zeros(field, n, n);
    out.set(i, i, field.reduce(a));
    out.set(i, j, field.reduce(-a));
    out.set(j, i, field.reduce(-b));
    out.set(j, j, field.reduce(b));
    out
}

impl fmt::Display for KzInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} q={} m={:?}", self.p(), self.q, self.m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationResidual {
    /// One-based equation index.
    pub j: usize,
    pub residual: VecPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub algebraic_residual: Poly,
    pub equations: Vec<EquationResidual>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.algebraic_residual.is_zero() && self.equations.iter().all(|e| e.residual.is_zero())
    }

    /// Description of the first violated identity, if any.
    pub fn first_failure(&self) -> Option<String> {
        if !self.algebraic_residual.is_zero() {
            return Some(format!("algebraic constraint: residual {}", self.algebraic_residual));
        }
        self.equations
            .iter()
            .find(|e| !e.residual.is_zero())
            .map(|e| format!("differential equation {}: residual {}", e.j, e.residual))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Permutation;

    #[test]
    fn instance_examples() {
        let a = KzInstance::new(13, 3, &[2, 2, 2, 1, 1, 1]).unwrap();
        assert_eq!(a.big_m(), &[8, 8, 8, 4, 4, 4]);
        assert_eq!((a.rank(), a.is_ample()), (2, false));

        let b = KzInstance::new(3, 2, &[1, 1]).unwrap();
        assert_eq!(b.big_m(), &[1, 1]);
        assert_eq!((b.rank(), b.is_ample()), (0, false));

        let c = KzInstance::new(19, 5, &[1, 1, 1]).unwrap();
        assert_eq!(c.big_m(), &[15, 15, 15]);
        assert_eq!((c.rank(), c.is_ample()), (2, true));
        assert_eq!((5 * 15 + 1) % 19, 0);
    }

    #[test]
    fn invalid_instances() {
        for (p, q, m) in [
            (9u64, 2u64, vec![1u32, 1]),
            (7, 4, vec![1, 1]),
            (3, 5, vec![1, 1]),
            (5, 3, vec![1]),
            (5, 3, vec![1, 3]),
            (5, 3, vec![0, 1]),
            (5, 3, vec![1, 1, 1, 1, 1]),
        ] {
            assert!(
                matches!(KzInstance::new(p, q, &m), Err(Error::InvalidInstance(_))),
                "{p} {q} {m:?}"
            );
        }
    }

    #[test]
    fn omega_templates() {
        let inst = KzInstance::new(3, 2, &[1, 1]).unwrap();
        let om = inst.omega(0, 1).unwrap();
        assert_eq!(om, FpMatrix::from_signed(inst.field(), &[vec![-1, 1], vec![1, -1]]));
        assert_eq!(om, inst.omega(1, 0).unwrap());
        assert!(inst.omega(0, 0).is_err());
        assert!(inst.omega(0, 2).is_err());

        // The example's displayed matrix ((1,-1),(-1,1)) absorbs the 1/q factor:
        // (1/2) * Omega_12 = ((1,-1),(-1,1)) over F_3.
        let half = inst.field().inv(2).unwrap();
        let scaled = FpMatrix::from_rows(
            inst.field(),
            om.rows().iter().map(|r| r.iter().map(|&v| inst.field().mul(v, half)).collect()).collect(),
        );
        assert_eq!(scaled, FpMatrix::from_signed(inst.field(), &[vec![1, -1], vec![-1, 1]]));

        let inst = KzInstance::new(5, 3, &[1, 1]).unwrap();
        assert_eq!(inst.big_m(), &[3, 3]);
        assert_eq!(
            inst.omega_m(0, 1).unwrap(),
            FpMatrix::from_signed(inst.field(), &[vec![3, -3], vec![-3, 3]])
        );
        assert_eq!(inst.omega_m_row_sum(0).unwrap(), inst.omega_m(0, 1).unwrap());
    }

    #[test]
    fn omega_annihilates_weighted_vectors() {
        let inst = KzInstance::new(11, 5, &[1, 2, 4]).unwrap();
        let f = inst.field();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let om = inst.omega(i, j).unwrap();
                // Columns i and j of Omega_ij are proportional to (-m_j, m_i)
                // and (m_j, -m_i), so the all-ones vector is annihilated.
                assert_eq!(om.apply(&[1, 1, 1]), vec![0, 0, 0]);
                // The image lies in the hyperplane sum m_k x_k = 0.
                let img = om.apply(&[3, 7, 5]);
                let s = img.iter().zip(inst.m()).fold(0, |acc, (&x, &m)| f.add(acc, f.mul(x, m)));
                assert_eq!(s, 0);
                let om_m = inst.omega_m(i, j).unwrap();
                assert_eq!(om_m.apply(&[1, 1, 1]), vec![0, 0, 0]);
            }
        }
    }

    fn example_solution() -> (KzInstance, VecPoly) {
        let inst = KzInstance::new(3, 2, &[1, 1]).unwrap();
        let d = Poly::binomial_power(inst.field(), 2, 0, 1, 2);
        let sol = VecPoly::from_scalar_vector(&d, &[1, 2]);
        (inst, sol)
    }

    #[test]
    fn verifies_rank_zero_example() {
        let (inst, sol) = example_solution();
        let report = inst.verify_solution(&sol);
        assert!(report.passed(), "{:?}", report.first_failure());
        assert!(inst.verify_solution(&VecPoly::zero(inst.field(), 2, 2)).passed());
    }

    #[test]
    fn verifies_n2_hypergeometric_by_hand() {
        let inst = KzInstance::new(5, 3, &[1, 1]).unwrap();
        let f = inst.field();
        let a = Poly::from_terms(f, 2, [(Monomial::var(0, 1), 3), (Monomial::var(1, 1), 2)]);
        let b = Poly::from_terms(f, 2, [(Monomial::var(0, 1), 2), (Monomial::var(1, 1), 3)]);
        let sol = VecPoly::new(vec![a, b]).unwrap();
        assert!(inst.verify_solution(&sol).passed());
    }

    #[test]
    fn rejects_non_solutions() {
        let inst = KzInstance::new(5, 3, &[1, 1]).unwrap();
        let f = inst.field();
        let z1 = Poly::var(f, 2, 0);
        let bad = VecPoly::from_scalar_vector(&z1, &[1, 4]);
        let report = inst.verify_solution(&bad);
        assert!(report.algebraic_residual.is_zero());
        assert!(!report.passed());
        assert!(report.first_failure().unwrap().starts_with("differential equation 1"));
        let bad = VecPoly::from_scalar_vector(&z1, &[1, 1]);
        assert!(inst.verify_solution(&bad).first_failure().unwrap().starts_with("algebraic"));
    }

    #[test]
    fn frobenius_closure() {
        let (inst, sol) = example_solution();
        let shifted = inst.frobenius_shift(&sol, &[1, 2]).unwrap();
        assert!(inst.verify_solution(&shifted).passed());
        let lt = shifted.leading_term(&Permutation::identity(2)).unwrap();
        assert_eq!(lt.exponents(), vec![5, 6]);
    }

    #[test]
    fn admissibility_examples() {
        let (inst, sol) = example_solution();
        assert!(inst.is_l_admissible(&sol, &[3, 3]).unwrap());
        assert!(!inst.is_l_admissible(&sol, &[2, 2]).unwrap());
        let f = inst.field();
        let zp = Poly::monomial(f, 2, Monomial::var(0, 3), 1);
        let v = VecPoly::from_scalar_vector(&zp, &[1, 2]);
        assert!(inst.is_l_admissible(&v, &[1, 1]).unwrap());
        assert!(inst.is_l_admissible(&sol, &[1]).is_err());
    }

    #[test]
    fn ample_inequalities() {
        assert!(KzInstance::new(19, 5, &[1, 1, 1]).unwrap().ample_inequalities_check().unwrap());
        assert!(KzInstance::new(5, 3, &[1, 1]).unwrap().ample_inequalities_check().unwrap());
        assert!(matches!(
            KzInstance::new(3, 2, &[1, 1]).unwrap().ample_inequalities_check(),
            Err(Error::Precondition(_))
        ));
    }
}
