//! Kayak paddles `P^l(C_a, C_b)` and infinity graphs `P^0(C_a, C_b)`.

use num_rational::BigRational;

use super::{frac, int, require, Expansion};
use crate::compositions::{
    compositions_min2, compositions_of, gap, theta, theta_minus, w, Composition,
};
use crate::error::Result;
use crate::symfunc::ESymFunc;

/// `X_{P^l(C_a, C_b)}` for `a, b >= 3`, `l >= 0`, `n = a + b + l - 1`.
///
/// With `g(K) = Θ_K(a+l) w_K e_K`: four sums over `K ⊨ n` split by `k_1`,
/// plus two sums over the splits `K = IJ` of `K ∈ 𝓦_n` into nonempty
/// halves with `a + l - j_1 + 1 <= |I| <= a - 1`.
pub fn x_kayak(a: usize, b: usize, l: usize) -> Result<ESymFunc> {
    require("kayak", a >= 3 && b >= 3, "requires a, b >= 3")?;
    let n = a + b + l - 1;
    let (ai, li) = (a as i64, l as i64);
    let mut sum = Expansion::new();

    for comp in compositions_of(n) {
        let g = g_factor(&comp, a + l);
        if g == 0 {
            continue;
        }
        let k1 = comp.parts()[0];
        let small_overshoot = theta(&comp, a) <= l;
        let coeff: i64 = if k1 == 1 {
            theta_minus(&comp, a) as i64
        } else if k1 <= l + 1 {
            if !small_overshoot {
                continue;
            }
            theta_minus(&comp, k1 + a - 1) as i64
        } else if k1 < l + a {
            if !small_overshoot {
                continue;
            }
            theta_minus(&comp, a + l) as i64 + k1 as i64 - li - 1
        } else {
            ai - 1
        };
        sum.add(&comp, int(coeff * g));
    }

    for comp in compositions_min2(n) {
        let g = g_factor(&comp, a + l);
        if g == 0 {
            continue;
        }
        let parts = comp.parts();
        let mut head_size = 0i64;
        for split in 1..parts.len() {
            head_size += parts[split - 1] as i64;
            let (i1, j1) = (parts[0] as i64, parts[split] as i64);
            if head_size < ai + li - j1 + 1 || head_size > ai - 1 {
                continue;
            }
            let slack = ai - 1 - head_size;
            if i1 < li + 2 || i1 == j1 || head_size >= ai + i1 - j1 {
                let coeff = int(slack) + frac(j1 - i1, j1 - 1);
                sum.add(&comp, coeff * int(g));
            }
            if i1 > j1 {
                let ratio = frac(j1, i1) * frac(i1 - 1, j1 - 1);
                let coeff = int(i1 - j1) + int(slack) * (int(1) + ratio);
                sum.add(&comp, coeff * int(g));
            }
        }
    }
    let out = sum.finish(&int(1), "kayak");
    Ok(out)
}

/// `Θ_K(x) w_K`.
fn g_factor(comp: &Composition, x: usize) -> i64 {
    theta(comp, x) as i64 * w(comp) as i64
}

/// `X_{∞_{ab}}` for `a, b >= 3`, `n = a + b - 1`, written with the
/// statistic `I(a) = Θ_I(a) + Θ⁻_I(a)` and `g(I) = Θ_I(a) w_I e_I`.
///
/// The fractions `(I(a) - i_1)/(I(a) - 1)` and `I(a)/i_1 · (i_1-1)/(I(a)-1)`
/// only arise for `g(I) != 0`, where `a` is not a prefix sum and `I(a)`
/// is a part of size at least 2.
pub fn x_infinity(a: usize, b: usize) -> Result<ESymFunc> {
    require("infinity", a >= 3 && b >= 3, "requires a, b >= 3")?;
    let n = a + b - 1;
    let ai = a as i64;
    let mut sum = Expansion::new();
    for comp in compositions_of(n) {
        let g = g_factor(&comp, a);
        if g == 0 {
            continue;
        }
        let i1 = comp.parts()[0] as i64;
        let over = theta(&comp, a) as i64;
        let under = theta_minus(&comp, a) as i64;
        let straddle = gap(&comp, a) as i64;
        debug_assert!(straddle >= 2);
        let gi = int(g);
        if i1 == 1 {
            sum.add(&comp, int(under) * &gi);
        }
        if (2..ai).contains(&i1) && (i1 <= over || i1 == straddle) {
            let coeff: BigRational = int(under - 1) + frac(straddle - i1, straddle - 1);
            sum.add(&comp, coeff * &gi);
        }
        if 3 <= straddle + 1 && straddle < i1 && i1 < ai {
            let ratio = frac(straddle, i1) * frac(i1 - 1, straddle - 1);
            let coeff = int(i1 - straddle) + int(under - 1) * (int(1) + ratio);
            sum.add(&comp, coeff * &gi);
        }
        if i1 >= ai {
            sum.add(&comp, int(ai - 1) * &gi);
        }
    }
    Ok(sum.finish(&int(1), "infinity"))
}
