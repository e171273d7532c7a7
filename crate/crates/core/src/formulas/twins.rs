//! Twinned paths, cycles and lollipops.

use num_rational::BigRational;

use super::{factorial, frac, int, require, second_last, Expansion};
use crate::compositions::{compositions_min2, compositions_of, theta, w, w_without_last};
use crate::error::Result;
use crate::symfunc::ESymFunc;

/// `tw_l(P_n)` for `n >= 3` and `2 <= l <= n - 1`; degree `n + 1`.
pub fn x_tw_path(n: usize, l: usize) -> Result<ESymFunc> {
    require("tw-path", n >= 3, "requires n >= 3")?;
    require("tw-path", l >= 2 && l < n, "requires 2 <= l <= n - 1")?;
    let mut sum = Expansion::new();
    for comp in compositions_of(n) {
        let wi = w(&comp) as i64;
        if wi == 0 {
            continue;
        }
        let with_one = comp.push(1);
        if theta(&comp, l - 1) >= 3 {
            sum.add(&with_one, int(wi));
        }
        if comp.all_parts_at_least_two() {
            if theta(&comp, n - l) >= 3 {
                sum.add(&with_one, int(wi));
            }
            let i1 = comp.parts()[0] as i64;
            sum.add(&with_one, frac(i1 - 2, i1) * int(wi));
        }
    }
    for comp in compositions_min2(n + 1) {
        let wk = w(&comp) as i64;
        let t = theta(&comp, l - 1);
        if t <= 2 {
            let inner = theta(&comp, l + t);
            assert!(
                inner >= 1,
                "tw-path: Θ_K(l + Θ_K(l-1)) vanished for K = {comp}"
            );
            sum.add(&comp, frac(inner as i64 - 1, inner as i64) * int(wk));
        } else {
            sum.add(&comp, int(2 * wk));
        }
    }
    Ok(sum.finish(&int(2), "tw-path"))
}

/// `tw(C_n)` for `n >= 3`:
/// `Σ_{I ⊨ n, i_1 >= 4} 2(i_1-3) w_{1I} e_{1I}
///  + Σ_{I ∈ 𝓦_{n+1}, i_1, i_{-1} >= 3} 2(2i_1-5) w_I e_I
///  + Σ_{I ∈ 𝓦_{n-1}, i_1 >= 3} 4(i_1 - 3 + 1/i_1) w_I e_{I2}`.
pub fn x_tw_cycle(n: usize) -> Result<ESymFunc> {
    require("tw-cycle", n >= 3, "requires n >= 3")?;
    let mut sum = Expansion::new();
    for comp in compositions_of(n) {
        let i1 = comp.parts()[0] as i64;
        if i1 >= 4 {
            let one_i = comp.prepend(1);
            sum.add(&one_i, int(2 * (i1 - 3) * w(&one_i) as i64));
        }
    }
    for comp in compositions_min2(n + 1) {
        let i1 = comp.parts()[0] as i64;
        if i1 >= 3 && comp.last().unwrap() >= 3 {
            sum.add(&comp, int(2 * (2 * i1 - 5) * w(&comp) as i64));
        }
    }
    for comp in compositions_min2(n - 1) {
        let i1 = comp.parts()[0] as i64;
        if i1 >= 3 {
            let coeff = int(4) * (int(i1 - 3) + frac(1, i1)) * int(w(&comp) as i64);
            sum.add(&comp.push(2), coeff);
        }
    }
    Ok(sum.finish(&int(1), "tw-cycle"))
}

/// `tw_h(K_a^l)` for `a >= 1`, `l >= 2`, `1 <= h <= l - 1`; `n = a + l + 1`.
/// The expansion divided by `2(a-1)!` is
/// `Σ_{k_{-1} >= a, Θ_K(h) >= 3} 2 w_K e_K
///  + Σ_{I ⊨ n-1, i_{-1} >= a, Θ_I(h) >= 3} w_I e_{1I}
///  + Σ_{Θ_K(h) <= 1, k_{-1} >= 3, (k_{-1}+k_{-2} >= n-h+1 or k_{-2} >= a)} (k_{-1}-2) w_{K∖k_{-1}} e_K
///  + Σ_{k_{-1} >= a, Θ_K(h+3) >= Θ_K(h) = 2} (Θ_K(h+3)-1)/Θ_K(h+3) w_K e_K`.
pub fn x_tw_lollipop(a: usize, l: usize, h: usize) -> Result<ESymFunc> {
    require("tw-lollipop", a >= 1, "requires a >= 1")?;
    require("tw-lollipop", l >= 2, "requires l >= 2")?;
    require("tw-lollipop", h >= 1 && h < l, "requires 1 <= h <= l - 1")?;
    let n = a + l + 1;
    let mut sum = Expansion::new();
    for comp in compositions_of(n) {
        let last = comp.last().unwrap();
        let t = theta(&comp, h);
        let wk = w(&comp) as i64;
        if last >= a && t >= 3 {
            sum.add(&comp, int(2 * wk));
        }
        if t <= 1 && last >= 3 && second_last(&comp).is_some_and(|p| last + p > n - h || p >= a) {
            sum.add(&comp, int((last as i64 - 2) * w_without_last(&comp) as i64));
        }
        if last >= a && t == 2 {
            let t3 = theta(&comp, h + 3);
            if t3 >= 2 {
                let coeff: BigRational = frac(t3 as i64 - 1, t3 as i64) * int(wk);
                sum.add(&comp, coeff);
            }
        }
    }
    for comp in compositions_of(n - 1) {
        if comp.last().unwrap() >= a && theta(&comp, h) >= 3 {
            sum.add(&comp.prepend(1), int(w(&comp) as i64));
        }
    }
    Ok(sum.finish(&(int(2) * factorial(a - 1)), "tw-lollipop"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::Partition;
    use crate::symfunc::rat;

    fn expansion(terms: &[(&[usize], i64)]) -> ESymFunc {
        let mut f = ESymFunc::zero();
        for (p, c) in terms {
            f.add_term(Partition::from_parts(p.to_vec()), rat(*c));
        }
        f
    }

    #[test]
    fn twinned_cycles_match_printed_values() {
        assert_eq!(x_tw_cycle(3).unwrap(), expansion(&[(&[4], 24)]));
        assert_eq!(
            x_tw_cycle(4).unwrap(),
            expansion(&[(&[5], 50), (&[4, 1], 6), (&[3, 2], 4)])
        );
        assert_eq!(
            x_tw_cycle(5).unwrap(),
            expansion(&[(&[6], 84), (&[5, 1], 16), (&[4, 2], 20), (&[3, 3], 12)])
        );
        assert_eq!(
            x_tw_cycle(6).unwrap(),
            expansion(&[
                (&[7], 126),
                (&[6, 1], 30),
                (&[5, 2], 44),
                (&[4, 3], 66),
                (&[4, 2, 1], 6),
                (&[3, 2, 2], 4),
            ])
        );
    }

    #[test]
    fn parameter_ranges() {
        assert!(x_tw_path(3, 1).is_err());
        assert!(x_tw_path(3, 3).is_err());
        assert!(x_tw_cycle(2).is_err());
        assert!(x_tw_lollipop(3, 3, 0).is_err());
        assert!(x_tw_lollipop(3, 1, 1).is_err());
        assert!(x_tw_lollipop(0, 3, 1).is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(x_tw_path(5, 3).unwrap().degree(), 6);
        assert_eq!(x_tw_cycle(5).unwrap().degree(), 6);
        assert_eq!(x_tw_lollipop(2, 3, 2).unwrap().degree(), 6);
    }
}
