//! Homogeneous symmetric functions stored sparsely in the elementary basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::compositions::{Composition, Partition};

/// Builds a rational from a small integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `Σ c_λ e_λ`, homogeneous of a single degree.
///
/// Coefficients are never stored as zero, and every key has size equal to
/// `degree`. The zero function has degree 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ESymFunc {
    terms: BTreeMap<Partition, BigRational>,
    degree: usize,
}

impl ESymFunc {
    pub fn zero() -> Self {
        ESymFunc::default()
    }

    /// The constant 1, i.e. `e_∅`.
    pub fn one() -> Self {
        ESymFunc::term(Partition::empty(), BigRational::one())
    }

    /// `e_k` (with `e_0 = 1`).
    pub fn e(k: usize) -> Self {
        if k == 0 {
            ESymFunc::one()
        } else {
            ESymFunc::term(Partition::from_parts(vec![k]), BigRational::one())
        }
    }

    /// `c · e_λ`.
    pub fn term(partition: Partition, coeff: BigRational) -> Self {
        let mut f = ESymFunc::zero();
        f.add_term(partition, coeff);
        f
    }

    /// `c · e_{ρ(I)}`.
    pub fn e_term(comp: &Composition, coeff: BigRational) -> Self {
        ESymFunc::term(comp.rho(), coeff)
    }

    pub fn degree(&self) -> usize {
        self.degree
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

    /// Terms in ascending partition order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, partition: &Partition) -> BigRational {
        self.terms
            .get(partition)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Adds `coeff · e_λ` in place.
    ///
    /// # Panics
    ///
    /// If `λ` has a size different from the degree of a nonzero `self`.
    pub fn add_term(&mut self, partition: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        if self.terms.is_empty() {
            self.degree = partition.size();
        } else {
            assert_eq!(
                partition.size(),
                self.degree,
                "cannot add e{partition} to a function of degree {}",
                self.degree
            );
        }
        match self.terms.entry(partition) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        if self.terms.is_empty() {
            self.degree = 0;
        }
    }

    /// Adds `coeff · e_{ρ(I)}` in place.
    pub fn add_e_term(&mut self, comp: &Composition, coeff: BigRational) {
        self.add_term(comp.rho(), coeff);
    }

    pub fn add_assign(&mut self, other: &ESymFunc) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &BigRational) -> ESymFunc {
        if c.is_zero() {
            return ESymFunc::zero();
        }
        ESymFunc {
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
            degree: self.degree,
        }
    }

    /// Ring product; `e_λ · e_μ = e_{λ ∪ μ}`.
    pub fn mul(&self, other: &ESymFunc) -> ESymFunc {
        let mut out = ESymFunc::zero();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                out.add_term(p.union(q), c * d);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> ESymFunc {
        (0..k).fold(ESymFunc::one(), |acc, _| ESymFunc::mul(&acc, self))
    }

    /// True iff every stored coefficient is nonnegative.
    pub fn is_e_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The smallest coefficient together with its partition, ties broken by
    /// the descending partition order used for display.
    pub fn min_coefficient(&self) -> Option<(&Partition, &BigRational)> {
        self.terms.iter().rev().min_by(|a, b| a.1.cmp(b.1))
    }

    /// Specializes to the finitely many variables `xs` (all others zero).
    pub fn evaluate_at(&self, xs: &[BigRational]) -> BigRational {
        let elementary = elementary_values(xs);
        let e_at = |k: usize| elementary.get(k).cloned().unwrap_or_else(BigRational::zero);
        self.terms
            .iter()
            .map(|(p, c)| p.parts().iter().fold(c.clone(), |acc, &k| acc * e_at(k)))
            .fold(BigRational::zero(), |acc, v| acc + v)
    }
}

/// `e_0(xs), e_1(xs), …, e_m(xs)` for `m = xs.len()`.
fn elementary_values(xs: &[BigRational]) -> Vec<BigRational> {
    let mut e = vec![BigRational::zero(); xs.len() + 1];
    e[0] = BigRational::one();
    for (j, x) in xs.iter().enumerate() {
        for k in (1..=j + 1).rev() {
            let prev = &e[k - 1] * x;
            e[k] += prev;
        }
    }
    e
}

impl Add for &ESymFunc {
    type Output = ESymFunc;
    fn add(self, rhs: &ESymFunc) -> ESymFunc {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Add for ESymFunc {
    type Output = ESymFunc;
    fn add(mut self, rhs: ESymFunc) -> ESymFunc {
        self.add_assign(&rhs);
        self
    }
}

impl Neg for &ESymFunc {
    type Output = ESymFunc;
    fn neg(self) -> ESymFunc {
        ESymFunc {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
            degree: self.degree,
        }
    }
}

impl Neg for ESymFunc {
    type Output = ESymFunc;
    fn neg(self) -> ESymFunc {
        -&self
    }
}

impl Sub for &ESymFunc {
    type Output = ESymFunc;
    fn sub(self, rhs: &ESymFunc) -> ESymFunc {
        self + &(-rhs)
    }
}

impl Sub for ESymFunc {
    type Output = ESymFunc;
    fn sub(self, rhs: ESymFunc) -> ESymFunc {
        &self - &rhs
    }
}

impl Mul for &ESymFunc {
    type Output = ESymFunc;
    fn mul(self, rhs: &ESymFunc) -> ESymFunc {
        ESymFunc::mul(self, rhs)
    }
}

impl Mul for ESymFunc {
    type Output = ESymFunc;
    fn mul(self, rhs: ESymFunc) -> ESymFunc {
        ESymFunc::mul(&self, &rhs)
    }
}

impl Mul<&ESymFunc> for ESymFunc {
    type Output = ESymFunc;
    fn mul(self, rhs: &ESymFunc) -> ESymFunc {
        ESymFunc::mul(&self, rhs)
    }
}

impl Mul<&BigRational> for &ESymFunc {
    type Output = ESymFunc;
    fn mul(self, rhs: &BigRational) -> ESymFunc {
        self.scale(rhs)
    }
}

impl Mul<i64> for ESymFunc {
    type Output = ESymFunc;
    fn mul(self, rhs: i64) -> ESymFunc {
        self.scale(&rat(rhs))
    }
}

impl fmt::Display for ESymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::serial::to_text(self))
    }
}

fn power_sum_table() -> &'static RwLock<Vec<ESymFunc>> {
    static TABLE: OnceLock<RwLock<Vec<ESymFunc>>> = OnceLock::new();
    // index 0 is an unused placeholder so that table[k] = p_k
    TABLE.get_or_init(|| RwLock::new(vec![ESymFunc::zero()]))
}

/// The power sum `p_k` expanded in the elementary basis via Newton's
/// identities, `p_k = (-1)^(k-1) k e_k + Σ_{i<k} (-1)^(k-1-i) e_{k-i} p_i`.
///
/// Results are memoized process-wide.
///
/// # Panics
///
/// If `k == 0`.
pub fn p_to_e(k: usize) -> ESymFunc {
    assert!(k >= 1, "p_0 is not a power sum");
    {
        let table = power_sum_table().read().expect("power-sum table poisoned");
        if let Some(p) = table.get(k) {
            return p.clone();
        }
    }
    let mut table = power_sum_table().write().expect("power-sum table poisoned");
    while table.len() <= k {
        let m = table.len();
        let sign = |exp: usize| if exp.is_multiple_of(2) { 1 } else { -1 };
        let mut p = ESymFunc::e(m).scale(&rat(sign(m - 1) * m as i64));
        for i in 1..m {
            let term = ESymFunc::mul(&ESymFunc::e(m - i), &table[i]).scale(&rat(sign(m - 1 - i)));
            p.add_assign(&term);
        }
        table.push(p);
    }
    table[k].clone()
}
