//! KPKP graphs `P^g(K_a, K_b^h) = K_a + P_{g+1} + K_b + P_{h+1}`.

use num_rational::BigRational;

use super::{factorial, int, require, second_last, Expansion};
use crate::compositions::{compositions_of, theta, w, w_without_last, Composition, Partition};
use crate::error::Result;
use crate::symfunc::ESymFunc;

/// `X_{P^g(K_a, K_b^h)}` with `n = a + g + b + h - 1`, `g, h >= 0`,
/// `a >= 1`, `b >= 2`.
///
/// With `f_1 = (b-1) w_K`, `f_2 = (b-2) k_{-1} w_{K∖k_{-1}}` and
/// `f_3 = (k_{-1}-b+1) w_{K∖k_{-1}}`, the expansion divided by
/// `(a-1)!(b-2)!` is `(b-1) n e_n` plus five sums over `K ⊨ n`, split by
/// whether `Θ_K(h+1) >= b-1` and by the sizes of the last two parts. The
/// fourth sum enters with a minus sign.
pub fn x_kpkp(a: usize, g: usize, b: usize, h: usize) -> Result<ESymFunc> {
    require("kpkp", a >= 1 && b >= 2, "requires a >= 1 and b >= 2")?;
    let n = a + g + b + h - 1;
    let cut = n - h; // k_{-1} + k_{-2} >= n - h  vs  <= n - h - 1

    let mut sum = Expansion::new();
    sum.add_partition(Partition::from_parts(vec![n]), int(((b - 1) * n) as i64));
    for comp in compositions_of(n) {
        let Some(prev) = second_last(&comp) else {
            continue;
        };
        let last = comp.last().unwrap();
        let wide = last + prev >= cut;
        if theta(&comp, h + 1) + 1 >= b {
            if !wide && last + 1 >= b && prev >= a {
                sum.add(&comp, f1(&comp, b));
            }
            if wide && last >= a.max(b - 1) {
                sum.add(&comp, f1(&comp, b));
            }
            if last + 2 <= b && prev >= a && (last >= a || !wide) {
                sum.add(&comp, f2(&comp, b));
            }
            if wide && last < a && last + 2 <= b {
                sum.add(&comp, -f3(&comp, b));
            }
        } else if last + 1 >= b && (wide || prev >= a) {
            sum.add(&comp, f3(&comp, b));
        }
    }
    let out = sum.finish(&(factorial(a - 1) * factorial(b - 2)), "kpkp");
    assert!(
        out.is_e_positive(),
        "kpkp({a}, {g}, {b}, {h}) is not e-positive: {out}"
    );
    Ok(out)
}

fn f1(comp: &Composition, b: usize) -> BigRational {
    int((b as i64 - 1) * w(comp) as i64)
}

fn f2(comp: &Composition, b: usize) -> BigRational {
    int((b as i64 - 2) * comp.last().unwrap() as i64 * w_without_last(comp) as i64)
}

fn f3(comp: &Composition, b: usize) -> BigRational {
    int((comp.last().unwrap() as i64 - b as i64 + 1) * w_without_last(comp) as i64)
}

/// The `b = 3` case, `n = a + g + h + 2`:
/// `(a-1)! [ Σ_{Θ_K(h+1) >= 2, k_{-1} >= a} 2 w_K
///         + Σ_{Θ_K(h+1) >= 2, k_{-1} = 1, k_{-2} >= a} k_{-1} w_{K∖k_{-1}}
///         + Σ_{Θ_K(h+1) <= 1, k_{-1} >= 2, (k_{-1}+k_{-2} >= n-h or k_{-2} >= a)} (k_{-1}-2) w_{K∖k_{-1}} ]`.
pub fn x_kpkp_b3(a: usize, g: usize, h: usize) -> Result<ESymFunc> {
    require("kpkp-b3", a >= 1, "requires a >= 1")?;
    let n = a + g + h + 2;
    let mut sum = Expansion::new();
    for comp in compositions_of(n) {
        let last = comp.last().unwrap();
        let prev = second_last(&comp);
        let rest = w_without_last(&comp) as i64;
        if theta(&comp, h + 1) >= 2 {
            if last >= a {
                sum.add(&comp, int(2 * w(&comp) as i64));
            }
            if last == 1 && prev.is_some_and(|p| p >= a) {
                sum.add(&comp, int(last as i64 * rest));
            }
        } else if last >= 2 && prev.is_some_and(|p| last + p >= n - h || p >= a) {
            sum.add(&comp, int((last as i64 - 2) * rest));
        }
    }
    Ok(sum.finish(&factorial(a - 1), "kpkp-b3"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{x_kkp, x_kpk, x_lollipop, x_path, x_pkp};

    #[test]
    fn all_edges_is_path() {
        assert_eq!(x_kpkp(2, 0, 2, 0).unwrap(), x_path(3).unwrap());
        assert_eq!(x_kpkp(1, 0, 2, 0).unwrap(), x_path(2).unwrap());
    }

    #[test]
    fn specializations() {
        assert_eq!(x_kpkp(3, 1, 2, 1).unwrap(), x_lollipop(3, 3).unwrap());
        assert_eq!(x_kpkp(3, 2, 4, 0).unwrap(), x_kpk(3, 4, 2).unwrap());
        assert_eq!(x_kpkp(3, 0, 4, 2).unwrap(), x_kkp(3, 4, 2).unwrap());
        assert_eq!(x_kpkp(1, 2, 4, 1).unwrap(), x_pkp(2, 4, 1).unwrap());
        assert_eq!(x_kpkp(2, 2, 4, 1).unwrap(), x_pkp(3, 4, 1).unwrap());
    }

    #[test]
    fn b3_closed_form() {
        assert_eq!(x_kpkp_b3(2, 1, 1).unwrap(), x_kpkp(2, 1, 3, 1).unwrap());
        assert_eq!(x_kpkp_b3(1, 1, 1).unwrap(), x_pkp(1, 3, 1).unwrap());
    }
}
