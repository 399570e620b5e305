//! Sparse multivariate polynomials over F_p.
//!
//! Slots `0..n` hold the exponents of `z_1..z_n`; when present, the trailing
//! slot holds the auxiliary integration variable `x`. Terms are kept sorted
//! in descending lexicographic order with `z_1` most significant and never
//! store a zero coefficient, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{binom_mod_p, FpScalar, PrimeField};

pub const MAX_VARS: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([u16; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn new(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Index(format!(
                "{} variables, at most {MAX_VARS} supported",
                exps.len()
            )));
        }
        let mut out = [0u16; MAX_VARS];
        for (slot, &e) in out.iter_mut().zip(exps) {
            *slot = u16::try_from(e)
                .map_err(|_| Error::Domain(format!("exponent {e} too large")))?;
        }
        Ok(Monomial(out))
    }

    pub fn var(i: usize, e: u32) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[i] = e as u16;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.0[i] as u32
    }

    pub fn exps(&self, arity: usize) -> Vec<u32> {
        self.0[..arity].iter().map(|&e| e as u32).collect()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0;
        for (a, b) in out.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0;
        for (a, b) in out.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(out))
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut out = self.0;
        out[i] = e as u16;
        Monomial(out)
    }

    /// Comparison under the ordering `z_{sigma_1} > z_{sigma_2} > ...`.
    pub fn cmp_by(&self, other: &Monomial, sigma: &Permutation) -> Ordering {
        for &v in sigma.as_slice() {
            match self.0[v].cmp(&other.0[v]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// A variable ordering, stored 0-based: `order()[0]` is the most significant
/// variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_zero_based(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &i in &order {
            if i >= n || seen[i] {
                return Err(Error::Index(format!("{order:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation(order))
    }

    /// From the one-based notation `(sigma_1, ..., sigma_n)`.
    pub fn from_one_based(order: &[usize]) -> Result<Self> {
        if order.contains(&0) {
            return Err(Error::Index(format!("{order:?} is not a permutation")));
        }
        Self::from_zero_based(order.iter().map(|&i| i - 1).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i + 1).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: PrimeField,
    arity: usize,
    terms: Vec<(Monomial, u32)>,
}

impl Poly {
    pub fn zero(field: PrimeField, arity: usize) -> Self {
        assert!(arity <= MAX_VARS, "arity {arity} exceeds {MAX_VARS}");
        Poly {
            field,
            arity,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, arity: usize, c: u32) -> Self {
        Self::monomial(field, arity, Monomial::ONE, c)
    }

    pub fn monomial(field: PrimeField, arity: usize, m: Monomial, c: u32) -> Self {
        let mut out = Self::zero(field, arity);
        let c = c % field.modulus();
        if c != 0 {
            out.terms.push((m, c));
        }
        out
    }

    pub fn var(field: PrimeField, arity: usize, i: usize) -> Self {
        assert!(i < arity);
        Self::monomial(field, arity, Monomial::var(i, 1), 1)
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(
        field: PrimeField,
        arity: usize,
        terms: impl IntoIterator<Item = (Monomial, u32)>,
    ) -> Self {
        let mut raw: Vec<(Monomial, u32)> = terms.into_iter().collect();
        raw.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            let c = c % field.modulus();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Poly {
            field,
            arity,
            terms: out,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order.
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> FpScalar {
        let c = self
            .terms
            .binary_search_by(|t| m.cmp(&t.0))
            .map(|i| self.terms[i].1)
            .unwrap_or(0);
        self.field.elem(c as i64)
    }

    pub fn check_compatible(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                left: self.field.modulus(),
                right: other.field.modulus(),
            });
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let field = self.field;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: u32| if negate { field.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, rhs(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(a[i].1, rhs(b[j].1));
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(m, c)| (m, rhs(c))));
        Poly {
            field,
            arity: self.arity,
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Panicking variants for internal use where compatibility is structural.
    pub fn add(&self, other: &Poly) -> Poly {
        self.try_add(other).expect("incompatible polynomials")
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.try_sub(other).expect("incompatible polynomials")
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.try_mul(other).expect("incompatible polynomials")
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> Poly {
        let c = c % self.field.modulus();
        if c == 0 {
            return Poly::zero(self.field, self.arity);
        }
        let field = self.field;
        Poly {
            field,
            arity: self.arity,
            terms: self.terms.iter().map(|&(m, a)| (m, field.mul(a, c))).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial keeps the term order.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Poly {
        let c = c % self.field.modulus();
        if c == 0 {
            return Poly::zero(self.field, self.arity);
        }
        let field = self.field;
        Poly {
            field,
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|&(t, a)| (t.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field, self.arity);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        mul_split(&small.terms, large)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(self.field, self.arity, 1);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `(v_a - v_b)^e` expanded by the binomial theorem.
    pub fn binomial_power(field: PrimeField, arity: usize, a: usize, b: usize, e: u32) -> Poly {
        assert!(a < arity && b < arity && a != b);
        let terms = (0..=e).filter_map(|k| {
            let c = binom_mod_p(e as u64, k as u64, field).value();
            if c == 0 {
                return None;
            }
            let c = if k % 2 == 1 { field.neg(c) } else { c };
            let mut m = Monomial::var(a, e - k);
            m.0[b] = k as u16;
            Some((m, c))
        });
        Poly::from_terms(field, arity, terms)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|t| t.0.exp(var)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|t| t.0.degree() == d)
            }
        }
    }

    /// `k`-fold formal derivative in `var`.
    pub fn partial_derivative(&self, var: usize, k: u32) -> Poly {
        let field = self.field;
        let p = field.modulus() as u64;
        let terms = self.terms.iter().filter_map(|&(m, c)| {
            let e = m.exp(var);
            if e < k {
                return None;
            }
            let mut ff = 1u32;
            for i in 0..k {
                ff = field.mul(ff, ((e - i) as u64 % p) as u32);
                if ff == 0 {
                    return None;
                }
            }
            Some((m.with_exp(var, e - k), field.mul(c, ff)))
        });
        // Distinct monomials stay distinct and keep their relative order.
        Poly {
            field,
            arity: self.arity,
            terms: terms.collect(),
        }
    }

    /// The coefficient of `x^k`, where `x` is the trailing slot; the result
    /// drops that slot.
    pub fn extract_x_coeff(&self, k: u32) -> Result<Poly> {
        if self.arity == 0 {
            return Err(Error::Index("no auxiliary slot".into()));
        }
        let xs = self.arity - 1;
        let terms = self
            .terms
            .iter()
            .filter(|t| t.0.exp(xs) == k)
            .map(|&(m, c)| (m.with_exp(xs, 0), c));
        Ok(Poly::from_terms(self.field, xs, terms))
    }

    pub fn leading_term(&self, sigma: &Permutation) -> Result<LeadingTerm> {
        self.check_sigma(sigma)?;
        let (m, c) = self
            .terms
            .iter()
            .max_by(|a, b| a.0.cmp_by(&b.0, sigma))
            .ok_or(Error::ZeroPolynomial)?;
        Ok(LeadingTerm {
            coeff: vec![self.field.elem(*c as i64)],
            monomial: *m,
            arity: self.arity,
            sigma: sigma.clone(),
        })
    }

    fn check_sigma(&self, sigma: &Permutation) -> Result<()> {
        if sigma.len() > self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: sigma.len(),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, point: &[u32]) -> FpScalar {
        let field = self.field;
        let mut acc = 0u32;
        for (m, c) in &self.terms {
            let mut t = *c;
            for (i, &x) in point.iter().enumerate().take(self.arity) {
                t = field.mul(t, field.pow(x % field.modulus(), m.exp(i) as u64));
            }
            acc = field.add(acc, t);
        }
        field.elem(acc as i64)
    }

    /// Adds a trailing slot (exponent zero everywhere).
    pub fn extend_arity(&self, arity: usize) -> Poly {
        assert!(arity >= self.arity && arity <= MAX_VARS);
        Poly {
            field: self.field,
            arity,
            terms: self.terms.clone(),
        }
    }

    pub fn fmt_with(&self, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = (0..self.arity)
                .filter(|&i| m.exp(i) > 0)
                .map(|i| match m.exp(i) {
                    1 => names[i].clone(),
                    e => format!("{}^{}", names[i], e),
                })
                .collect();
            match (vars.is_empty(), *c) {
                (true, c) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{}", vars.join("*"))?,
                (false, c) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }

    pub fn default_names(arity: usize) -> Vec<String> {
        (1..=arity).map(|i| format!("z{i}")).collect()
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            p: self.field.modulus(),
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exp: m.exps(self.arity),
                    coeff: *c,
                })
                .collect(),
        }
    }

    pub fn from_json(doc: &PolyJson) -> Result<Poly> {
        let field = PrimeField::new(doc.p as u64)?;
        if doc.arity > MAX_VARS {
            return Err(Error::Format(format!("arity {} exceeds {MAX_VARS}", doc.arity)));
        }
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in &doc.terms {
            if t.exp.len() != doc.arity {
                return Err(Error::Format(format!(
                    "term has {} exponents, arity is {}",
                    t.exp.len(),
                    doc.arity
                )));
            }
            terms.push((Monomial::new(&t.exp)?, t.coeff % field.modulus()));
        }
        Ok(Poly::from_terms(field, doc.arity, terms))
    }
}

fn mul_split(small: &[(Monomial, u32)], large: &Poly) -> Poly {
    if small.len() == 1 {
        return large.mul_term(&small[0].0, small[0].1);
    }
    let mid = small.len() / 2;
    let lo = mul_split(&small[..mid], large);
    let hi = mul_split(&small[mid..], large);
    lo.merge(&hi, false)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(&Poly::default_names(self.arity), f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub p: u32,
    pub arity: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VecPolyJson {
    pub p: u32,
    pub arity: usize,
    pub coords: Vec<PolyJson>,
}

/// An `n`-vector of polynomials sharing field and arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecPoly {
    coords: Vec<Poly>,
}

impl VecPoly {
    pub fn new(coords: Vec<Poly>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Index("empty vector".into()));
        }
        for c in &coords[1..] {
            coords[0].check_compatible(c)?;
        }
        Ok(VecPoly { coords })
    }

    pub fn zero(field: PrimeField, arity: usize, n: usize) -> Self {
        VecPoly {
            coords: vec![Poly::zero(field, arity); n],
        }
    }

    /// `poly * (v_1, ..., v_n)` for a constant vector.
    pub fn from_scalar_vector(poly: &Poly, v: &[u32]) -> Self {
        VecPoly {
            coords: v.iter().map(|&c| poly.scale(c)).collect(),
        }
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Poly> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn field(&self) -> PrimeField {
        self.coords[0].field()
    }

    pub fn arity(&self) -> usize {
        self.coords[0].arity()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }

    fn check(&self, other: &VecPoly) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::ArityMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        self.coords[0].check_compatible(&other.coords[0])
    }

    pub fn try_add(&self, other: &VecPoly) -> Result<VecPoly> {
        self.check(other)?;
        Ok(VecPoly {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn try_sub(&self, other: &VecPoly) -> Result<VecPoly> {
        self.check(other)?;
        Ok(VecPoly {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn add(&self, other: &VecPoly) -> VecPoly {
        self.try_add(other).expect("incompatible vectors")
    }

    pub fn sub(&self, other: &VecPoly) -> VecPoly {
        self.try_sub(other).expect("incompatible vectors")
    }

    pub fn scale(&self, c: u32) -> VecPoly {
        VecPoly {
            coords: self.coords.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Poly) -> VecPoly {
        VecPoly {
            coords: self.coords.iter().map(|p| p.mul(f)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: u32) -> VecPoly {
        VecPoly {
            coords: self.coords.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    /// Applies a constant `n x n` matrix (row-major residues).
    pub fn apply_matrix(&self, mat: &[Vec<u32>]) -> VecPoly {
        let (field, arity) = (self.field(), self.arity());
        let coords = mat
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.coords)
                    .filter(|(c, _)| **c != 0)
                    .fold(Poly::zero(field, arity), |acc, (c, f)| acc.add(&f.scale(*c)))
            })
            .collect();
        VecPoly { coords }
    }

    /// Linear combination `sum_k weights[k] * coords[k]`.
    pub fn dot(&self, weights: &[u32]) -> Poly {
        self.coords
            .iter()
            .zip(weights)
            .fold(Poly::zero(self.field(), self.arity()), |acc, (f, &w)| {
                acc.add(&f.scale(w))
            })
    }

    pub fn partial_derivative(&self, var: usize, k: u32) -> VecPoly {
        VecPoly {
            coords: self.coords.iter().map(|p| p.partial_derivative(var, k)).collect(),
        }
    }

    pub fn extract_x_coeff(&self, k: u32) -> Result<VecPoly> {
        Ok(VecPoly {
            coords: self
                .coords
                .iter()
                .map(|p| p.extract_x_coeff(k))
                .collect::<Result<_>>()?,
        })
    }

    /// The vector coefficient at `m`.
    pub fn coeff(&self, m: &Monomial) -> Vec<FpScalar> {
        self.coords.iter().map(|p| p.coeff(m)).collect()
    }

    pub fn coeff_values(&self, m: &Monomial) -> Vec<u32> {
        self.coords.iter().map(|p| p.coeff(m).value()).collect()
    }

    /// Union of the supports, in descending lexicographic order.
    pub fn support(&self) -> Vec<Monomial> {
        let mut all: Vec<Monomial> = self
            .coords
            .iter()
            .flat_map(|p| p.terms().iter().map(|t| t.0))
            .collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        all.dedup();
        all
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut deg = None;
        for p in &self.coords {
            if !p.is_homogeneous() {
                return false;
            }
            if let Some(d) = p.total_degree() {
                if *deg.get_or_insert(d) != d {
                    return false;
                }
            }
        }
        true
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.coords.iter().filter_map(Poly::total_degree).max()
    }

    pub fn leading_term(&self, sigma: &Permutation) -> Result<LeadingTerm> {
        self.coords[0].check_sigma(sigma)?;
        let m = self
            .coords
            .iter()
            .filter_map(|p| p.terms().iter().max_by(|a, b| a.0.cmp_by(&b.0, sigma)))
            .map(|t| t.0)
            .max_by(|a, b| a.cmp_by(b, sigma))
            .ok_or(Error::ZeroPolynomial)?;
        Ok(LeadingTerm {
            coeff: self.coeff(&m),
            monomial: m,
            arity: self.arity(),
            sigma: sigma.clone(),
        })
    }

    pub fn evaluate(&self, point: &[u32]) -> Vec<FpScalar> {
        self.coords.iter().map(|p| p.evaluate(point)).collect()
    }

    pub fn to_json(&self) -> VecPolyJson {
        VecPolyJson {
            p: self.field().modulus(),
            arity: self.arity(),
            coords: self.coords.iter().map(Poly::to_json).collect(),
        }
    }

    pub fn from_json(doc: &VecPolyJson) -> Result<VecPoly> {
        let coords = doc
            .coords
            .iter()
            .map(|c| {
                if c.p != doc.p || c.arity != doc.arity {
                    return Err(Error::Format("coordinate disagrees with vector header".into()));
                }
                Poly::from_json(c)
            })
            .collect::<Result<Vec<_>>>()?;
        VecPoly::new(coords)
    }
}

impl fmt::Display for VecPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The summand at the largest monomial under a variable ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub coeff: Vec<FpScalar>,
    pub monomial: Monomial,
    pub arity: usize,
    pub sigma: Permutation,
}

impl LeadingTerm {
    pub fn coeff_values(&self) -> Vec<u32> {
        self.coeff.iter().map(|c| c.value()).collect()
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.monomial.exps(self.arity)
    }
}
