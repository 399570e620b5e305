//! The weight slice `V[-2]` of `V_{m_1} (x) ... (x) V_{m_n}`, its singular
//! subspace, and the Casimir operators acting on it.
//!
//! Vectors of `V[-2]` are stored by their coordinates in the basis
//! `f^{(1)}v, ..., f^{(n)}v`. The singular subspace has the basis
//! `w_j = f^{(j)}v / M_j - f^{(j+1)}v / M_{j+1}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fp::PrimeField;
use crate::kz::KzInstance;
use crate::linalg::FpMatrix;

/// A vector of `Sing V[-2]`, optionally with its `w`-coordinates attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingVector {
    pub a_coords: Vec<u32>,
    pub w_coords: Option<Vec<u32>>,
}

impl SingVector {
    pub fn new(inst: &KzInstance, a_coords: Vec<u32>) -> Result<Self> {
        let w = to_w_coords(inst, &a_coords)?;
        Ok(SingVector {
            a_coords,
            w_coords: Some(w),
        })
    }

    pub fn from_w(inst: &KzInstance, w_coords: Vec<u32>) -> Result<Self> {
        let a_coords = from_w_coords(inst, &w_coords)?;
        Ok(SingVector {
            a_coords,
            w_coords: Some(w_coords),
        })
    }
}

pub fn is_singular(inst: &KzInstance, a: &[u32]) -> bool {
    let f = inst.field();
    a.len() == inst.n()
        && a.iter()
            .zip(inst.m())
            .fold(0, |acc, (&x, &m)| f.add(acc, f.mul(x, m)))
            == 0
}

/// Coordinates in the `w` basis: `c_j = sum_{i <= j} M_i a_i`.
pub fn to_w_coords(inst: &KzInstance, a: &[u32]) -> Result<Vec<u32>> {
    if !is_singular(inst, a) {
        return Err(Error::NotSingular);
    }
    let f = inst.field();
    let mut acc = 0;
    Ok(a[..inst.n() - 1]
        .iter()
        .zip(inst.big_m())
        .map(|(&x, &mm)| {
            acc = f.add(acc, f.mul(mm, x));
            acc
        })
        .collect())
}

/// Expands `sum_j c_j w_j` in the `f^{(i)}v` basis.
pub fn from_w_coords(inst: &KzInstance, c: &[u32]) -> Result<Vec<u32>> {
    let n = inst.n();
    if c.len() != n - 1 {
        return Err(Error::Index(format!("{} w-coordinates, expected {}", c.len(), n - 1)));
    }
    let f = inst.field();
    let mut out = vec![0u32; n];
    for (j, &cj) in c.iter().enumerate() {
        let wj = w_basis_vector(inst, j);
        for (o, w) in out.iter_mut().zip(wj) {
            *o = f.add(*o, f.mul(cj, w));
        }
    }
    Ok(out)
}

/// `w_j` (0-based `j`) in the `f^{(i)}v` basis.
pub fn w_basis_vector(inst: &KzInstance, j: usize) -> Vec<u32> {
    let f = inst.field();
    let mm = inst.big_m();
    let mut v = vec![0u32; inst.n()];
    v[j] = f.inv(mm[j]).expect("0 < M_j < p");
    v[j + 1] = f.neg(f.inv(mm[j + 1]).expect("0 < M_j < p"));
    v
}

pub fn w_basis(inst: &KzInstance) -> Vec<Vec<u32>> {
    (0..inst.n() - 1).map(|j| w_basis_vector(inst, j)).collect()
}

/// Matrix of an operator on `V[-2]` restricted to `Sing V[-2]`, in the `w` basis.
pub fn restrict_to_sing(inst: &KzInstance, op: &FpMatrix) -> Result<FpMatrix> {
    let k = inst.n() - 1;
    let mut out = FpMatrix::zeros(inst.field(), k, k);
    for j in 0..k {
        let image = op.apply(&w_basis_vector(inst, j));
        let coords = to_w_coords(inst, &image)?;
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    Ok(out)
}

/// A linear combination of tensor basis vectors `f^{k_1}v (x) ... (x) f^{k_n}v`.
type TensorVec = BTreeMap<Vec<u32>, u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gen {
    E,
    F,
    H,
}

/// Standard action on `V_m` with basis `f^k v_m`, applied at tensor slot `slot`.
fn act(field: PrimeField, m: &[u32], g: Gen, slot: usize, v: &TensorVec) -> TensorVec {
    let mut out = TensorVec::new();
    for (state, &c) in v {
        let k = state[slot] as i64;
        let mi = m[slot] as i64;
        let (coeff, new_k) = match g {
            Gen::E if k >= 1 => (k * (mi - k + 1), k - 1),
            Gen::F if k < mi => (1, k + 1),
            Gen::H => (mi - 2 * k, k),
            _ => continue,
        };
        let coeff = field.mul(c, field.reduce(coeff));
        if coeff == 0 {
            continue;
        }
        let mut s = state.clone();
        s[slot] = new_k as u32;
        let e = out.entry(s).or_insert(0);
        *e = field.add(*e, coeff);
    }
    out.retain(|_, c| *c != 0);
    out
}

fn combine(field: PrimeField, acc: &mut TensorVec, v: &TensorVec, scale: u32) {
    for (s, &c) in v {
        let e = acc.entry(s.clone()).or_insert(0);
        *e = field.add(*e, field.mul(c, scale));
    }
    acc.retain(|_, c| *c != 0);
}

/// The Casimir operator `h_i h_j / 2 + e_i f_j + f_i e_j - m_i m_j / 2`
/// restricted to `V[-2]`, computed from the generator actions on the tensor
/// product. Column `k` is the image of `f^{(k)}v`.
pub fn casimir_matrix(inst: &KzInstance, i: usize, j: usize) -> Result<FpMatrix> {
    let n = inst.n();
    if i == j || i >= n || j >= n {
        return Err(Error::Index(format!("pair ({}, {}) with n = {n}", i + 1, j + 1)));
    }
    let f = inst.field();
    let m = inst.m();
    let half = f.inv(2)?;
    let mut out = FpMatrix::zeros(f, n, n);
    for k in 0..n {
        let mut state = vec![0u32; n];
        state[k] = 1;
        let v: TensorVec = [(state, 1u32)].into_iter().collect();

        let mut image = TensorVec::new();
        let hh = act(f, m, Gen::H, i, &act(f, m, Gen::H, j, &v));
        combine(f, &mut image, &hh, half);
        let ef = act(f, m, Gen::E, i, &act(f, m, Gen::F, j, &v));
        combine(f, &mut image, &ef, 1);
        let fe = act(f, m, Gen::F, i, &act(f, m, Gen::E, j, &v));
        combine(f, &mut image, &fe, 1);
        let shift = f.neg(f.mul(f.mul(m[i], m[j]), half));
        combine(f, &mut image, &v, shift);

        for (s, c) in image {
            let Some(row) = s.iter().position(|&x| x == 1) else {
                unreachable!("Casimir left the weight space");
            };
            debug_assert_eq!(s.iter().sum::<u32>(), 1);
            out.set(row, k, c);
        }
    }
    Ok(out)
}

/// Trace of `Omega^M_ij` on `Sing V[-2]`.
pub fn omega_m_trace_on_sing(inst: &KzInstance, i: usize, j: usize) -> Result<u32> {
    let op = inst.omega_m(i, j)?;
    Ok(restrict_to_sing(inst, &op)?.trace().value())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w_coordinates_example() {
        let inst = KzInstance::new(5, 3, &[1, 1]).unwrap();
        assert_eq!(to_w_coords(&inst, &[3, 2]).unwrap(), vec![4]);
        assert_eq!(to_w_coords(&inst, &[0, 0]).unwrap(), vec![0]);
        assert_eq!(to_w_coords(&inst, &[1, 0]), Err(Error::NotSingular));
        // Oracle: w_1 = 2 f1 - 2 f2 (since 1/3 = 2 mod 5); solve c * w_1 = (3, 2).
        assert_eq!(w_basis_vector(&inst, 0), vec![2, 3]);
        assert_eq!(from_w_coords(&inst, &[4]).unwrap(), vec![3, 2]);
    }

    #[test]
    fn w_basis_unit_vectors() {
        let inst = KzInstance::new(13, 3, &[2, 2, 2, 1, 1, 1]).unwrap();
        for j in 0..5 {
            let w = w_basis_vector(&inst, j);
            let mut e = vec![0; 5];
            e[j] = 1;
            assert_eq!(to_w_coords(&inst, &w).unwrap(), e);
            assert_eq!(SingVector::from_w(&inst, e.clone()).unwrap().a_coords, w);
        }
        assert_eq!(crate::linalg::rank(inst.field(), &w_basis(&inst)), 5);
    }

    #[test]
    fn casimir_matches_omega_small() {
        let inst = KzInstance::new(5, 3, &[1, 1]).unwrap();
        assert_eq!(casimir_matrix(&inst, 0, 1).unwrap(), inst.omega(0, 1).unwrap());
        assert_eq!(casimir_matrix(&inst, 1, 0).unwrap(), inst.omega(1, 0).unwrap());
        assert!(casimir_matrix(&inst, 1, 1).is_err());
    }

    #[test]
    fn casimir_preserves_singular_subspace() {
        let inst = KzInstance::new(11, 5, &[1, 3, 4, 2]).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i == j {
                    continue;
                }
                let c = casimir_matrix(&inst, i, j).unwrap();
                for w in w_basis(&inst) {
                    assert!(is_singular(&inst, &c.apply(&w)));
                }
            }
        }
    }

    #[test]
    fn trace_identity() {
        let inst = KzInstance::new(7, 5, &[1, 2, 3]).unwrap();
        let mm = inst.big_m();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    let t = omega_m_trace_on_sing(&inst, i, j).unwrap();
                    assert_eq!(t, (mm[i] + mm[j]) % 7);
                }
            }
        }
    }
}
