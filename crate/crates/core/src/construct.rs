//! The F_p-hypergeometric solutions `I^{[l]}`: coefficients of `x^{lp-1}` in
//! `Phi_p(x, z) / (x - z_j)`, where `Phi_p = prod_i (x - z_i)^{M_i}`.

use crate::error::{Error, Result};
use crate::fp::{binom_mod_p, gamma_fp, sign_offset, FpScalar};
use crate::kz::KzInstance;
use crate::poly::{Monomial, Poly, VecPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergeomSolution {
    pub l: usize,
    pub degree: u32,
    pub poly: VecPoly,
}

/// `P(x, z)`: coordinate `j` is `prod_{i != j} (x - z_i)^{M_i} (x - z_j)^{M_j - 1}`.
/// The auxiliary variable `x` occupies slot `n`.
pub fn integrand_vector(inst: &KzInstance) -> VecPoly {
    let n = inst.n();
    let f = inst.field();
    let coords = (0..n)
        .map(|j| {
            (0..n).fold(Poly::constant(f, n + 1, 1), |acc, i| {
                let e = inst.big_m()[i] - u32::from(i == j);
                acc.mul(&Poly::binomial_power(f, n + 1, n, i, e))
            })
        })
        .collect();
    VecPoly::new(coords).expect("coordinates share field and arity")
}

/// Coefficient of `x^target` in `prod_i (x - z_i)^{exps[i]}`, found by
/// convolving the binomial expansions one factor at a time and discarding
/// every partial product whose `x`-degree can no longer reach `target`.
fn x_coefficient_of_product(inst: &KzInstance, exps: &[u32], target: u32) -> Poly {
    let n = inst.n();
    let f = inst.field();
    let target = target as usize;
    // slots[a] = coefficient of x^a of the partial product.
    let mut slots: Vec<Poly> = vec![Poly::zero(f, n); target + 1];
    slots[0] = Poly::constant(f, n, 1);
    let mut remaining: u32 = exps.iter().sum();
    for (i, &e) in exps.iter().enumerate() {
        remaining -= e;
        let binoms: Vec<u32> = (0..=e)
            .map(|k| {
                let c = binom_mod_p(e as u64, k as u64, f).value();
                if (e - k) % 2 == 1 {
                    f.neg(c)
                } else {
                    c
                }
            })
            .collect();
        let mut next: Vec<Poly> = vec![Poly::zero(f, n); target + 1];
        for (a, coeff) in slots.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (k, &b) in binoms.iter().enumerate() {
                let deg = a + k;
                if deg > target || b == 0 {
                    continue;
                }
                if deg + (remaining as usize) < target {
                    continue;
                }
                let term = coeff.mul_term(&Monomial::var(i, e - k as u32), b);
                next[deg] = next[deg].add(&term);
            }
        }
        slots = next;
    }
    slots.swap_remove(target)
}

/// `I^{[l]}(z)` for `1 <= l <= r`.
pub fn hypergeometric_solution(inst: &KzInstance, l: usize) -> Result<HypergeomSolution> {
    let degree = inst.delta(l)?;
    let target = l as u32 * inst.p() - 1;
    let coords = (0..inst.n())
        .map(|j| {
            let exps: Vec<u32> = inst
                .big_m()
                .iter()
                .enumerate()
                .map(|(i, &mm)| mm - u32::from(i == j))
                .collect();
            x_coefficient_of_product(inst, &exps, target)
        })
        .collect();
    Ok(HypergeomSolution {
        l,
        degree,
        poly: VecPoly::new(coords)?,
    })
}

/// All `I^{[l]}` for `l = 1..=r`.
pub fn all_solutions(inst: &KzInstance) -> Vec<HypergeomSolution> {
    (1..=inst.rank())
        .map(|l| hypergeometric_solution(inst, l).expect("l within range"))
        .collect()
}

/// Closed form of the coefficient of `z^d` in `I^{[l]}`:
/// `(-1)^{delta_l} prod_j C(M_j, d_j) (1 - d_1/M_1, ..., 1 - d_n/M_n)`,
/// zero off the support `sum d = delta_l`, `d_i <= M_i`.
pub fn coefficient_closed_form(inst: &KzInstance, l: usize, d: &[u32]) -> Result<Vec<FpScalar>> {
    let delta = inst.delta(l)?;
    let f = inst.field();
    let n = inst.n();
    if d.len() != n {
        return Err(Error::Index(format!("exponent vector of length {}, n = {n}", d.len())));
    }
    let mm = inst.big_m();
    let zero = vec![f.zero(); n];
    if d.iter().sum::<u32>() != delta || d.iter().zip(mm).any(|(&di, &mi)| di > mi) {
        return Ok(zero);
    }
    let scalar = d.iter().zip(mm).fold(f.elem(f.sign(delta as i64) as i64), |acc, (&di, &mi)| {
        acc * binom_mod_p(mi as u64, di as u64, f)
    });
    Ok(d.iter()
        .zip(mm)
        .map(|(&di, &mi)| {
            let ratio = f.elem(di as i64) * f.elem(mi as i64).inv().expect("0 < M_i < p");
            scalar * (f.one() - ratio)
        })
        .collect())
}

/// Enumerates exponent vectors with `sum = total` and `d_i <= bounds[i]`.
pub fn bounded_compositions(bounds: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn rec(bounds: &[u32], total: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if bounds.is_empty() {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: u32 = bounds[1..].iter().sum();
        let lo = total.saturating_sub(rest);
        for d in lo..=bounds[0].min(total) {
            cur.push(d);
            rec(&bounds[1..], total - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(bounds, total, &mut Vec::new(), &mut out);
    out
}

/// `I^{[l]}` assembled from the closed-form coefficients over its support.
pub fn closed_form_solution(inst: &KzInstance, l: usize) -> Result<VecPoly> {
    let delta = inst.delta(l)?;
    let n = inst.n();
    let f = inst.field();
    let mut coords: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); n];
    for d in bounded_compositions(inst.big_m(), delta) {
        let c = coefficient_closed_form(inst, l, &d)?;
        let mono = Monomial::new(&d)?;
        for (k, v) in c.into_iter().enumerate() {
            coords[k].push((mono, v.value()));
        }
    }
    VecPoly::new(coords.into_iter().map(|t| Poly::from_terms(f, n, t)).collect())
}

/// The `n = 2` ample solution in binomial form, together with the printed
/// gamma-function form and the sign reconciling the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSolutionN2 {
    pub solution: HypergeomSolution,
    pub gamma_form: VecPoly,
    /// `Some(e)` when `solution = (-1)^e * gamma_form`.
    pub gamma_form_sign_offset: Option<u8>,
}

/// `(z_1 - z_2)^{M_1+M_2-p} (C(M_2, p-M_1), C(M_2-1, p-M_1-1))`.
pub fn beta_solution_n2(inst: &KzInstance) -> Result<BetaSolutionN2> {
    if inst.n() != 2 || !inst.is_ample() {
        return Err(Error::Precondition(
            "closed form needs n = 2 and ample reduction".into(),
        ));
    }
    let f = inst.field();
    let p = inst.p();
    let (m1, m2) = (inst.big_m()[0], inst.big_m()[1]);
    let e = m1 + m2 - p;
    let base = Poly::binomial_power(f, 2, 0, 1, e);
    let vector = [
        binom_mod_p(m2 as u64, (p - m1) as u64, f).value(),
        binom_mod_p((m2 - 1) as u64, (p - m1 - 1) as u64, f).value(),
    ];
    let poly = VecPoly::from_scalar_vector(&base, &vector);

    let ratio = gamma_fp(m1 as i64 + 1, f) * gamma_fp(m2 as i64 + 1, f)
        * gamma_fp(e as i64 + 1, f).inv()?;
    let scalar = f.elem(f.sign(m2 as i64) as i64) * ratio;
    let gamma_vec = [
        f.inv(m1)?,
        f.neg(f.inv(m2)?),
    ];
    let reversed = Poly::binomial_power(f, 2, 1, 0, e).scale(scalar.value());
    let gamma_form = VecPoly::from_scalar_vector(&reversed, &gamma_vec);

    let offset = if poly == gamma_form {
        Some(0)
    } else if poly == gamma_form.scale(f.neg(1)) {
        Some(1)
    } else {
        None
    };
    Ok(BetaSolutionN2 {
        solution: HypergeomSolution {
            l: 1,
            degree: e,
            poly,
        },
        gamma_form,
        gamma_form_sign_offset: offset,
    })
}

/// The scalar `M_2 C(M_2 - 1, p - M_1 - 1)` in binomial and factorial form;
/// returns the sign exponent between the factorial form and the gamma form.
pub fn n2_scalar_offset(inst: &KzInstance) -> Result<Option<u8>> {
    let (a, b) = (inst.big_m()[0] as i64, inst.big_m()[1] as i64);
    let forms = crate::fp::AbScalarForms::new(a, b, inst.field())?;
    Ok(sign_offset(forms.factorial, forms.gamma_printed))
}
