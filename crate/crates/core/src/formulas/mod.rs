//! Closed-form positive `e_I`-expansions, one evaluator per graph family.
//!
//! Every evaluator returns the full chromatic symmetric function (factorial
//! prefactors multiplied back in). Intermediate coefficients are exact
//! rationals; each result is checked to be integral before it is returned.

mod chains;
mod family;
mod kayak;
mod kpkp;
mod twins;

pub use chains::{
    f123_check, x_cycle, x_kchain, x_kkp, x_kpc, x_kpk, x_kpk_b3, x_lollipop, x_melting_lollipop,
    x_path, x_pkp, x_tadpole,
};
pub use family::{Family, FamilyKind};
pub use kayak::{x_infinity, x_kayak};
pub use kpkp::{x_kpkp, x_kpkp_b3};
pub use twins::{x_tw_cycle, x_tw_lollipop, x_tw_path};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::compositions::{Composition, Partition};
use crate::error::{invalid, Result};
use crate::symfunc::ESymFunc;

pub(crate) fn factorial(n: usize) -> BigRational {
    BigRational::from_integer((1..=n).map(BigInt::from).product())
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn frac(num: i64, den: i64) -> BigRational {
    assert_ne!(den, 0, "zero denominator in an expansion coefficient");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn require(family: &'static str, ok: bool, message: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(invalid(family, message))
    }
}

/// Accumulates `Σ c · e_{ρ(K)}` over compositions.
#[derive(Default)]
pub(crate) struct Expansion(ESymFunc);

impl Expansion {
    pub(crate) fn new() -> Self {
        Expansion(ESymFunc::zero())
    }

    pub(crate) fn add(&mut self, comp: &Composition, coeff: BigRational) {
        self.0.add_e_term(comp, coeff);
    }

    pub(crate) fn add_partition(&mut self, partition: Partition, coeff: BigRational) {
        self.0.add_term(partition, coeff);
    }

    /// Multiplies by `prefactor` and checks that every coefficient came out
    /// an integer.
    pub(crate) fn finish(self, prefactor: &BigRational, family: &str) -> ESymFunc {
        let out = self.0.scale(prefactor);
        assert!(
            out.is_integral(),
            "{family}: expansion has a non-integral coefficient: {out}"
        );
        out
    }
}

/// `k_{-2}`, absent for one-part compositions. Conditions that mention
/// `k_{-2}` are false when it is absent.
pub(crate) fn second_last(comp: &Composition) -> Option<usize> {
    comp.part(-2)
}
