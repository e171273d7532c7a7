//! Paths, cycles, K-chains and the two- and three-piece chains built from
//! cliques, paths and a cycle.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{factorial, frac, int, require, Expansion};
use crate::compositions::{
    compositions_min2, compositions_of, theta, w, w_without_last, weak_compositions, Composition,
    Partition,
};
use crate::error::Result;
use crate::symfunc::ESymFunc;

/// `X_{P_n} = Σ_{I ⊨ n} w_I e_I`.
pub fn x_path(n: usize) -> Result<ESymFunc> {
    require("path", n >= 1, "requires n >= 1")?;
    let mut sum = Expansion::new();
    for comp in compositions_of(n) {
        sum.add(&comp, int(w(&comp) as i64));
    }
    Ok(sum.finish(&BigRational::one(), "path"))
}

/// `X_{C_n} = Σ_{I ⊨ n} (i_1 - 1) w_I e_I`, defined for `n >= 2` (`C_2` is
/// read as a single edge).
pub fn x_cycle(n: usize) -> Result<ESymFunc> {
    require("cycle", n >= 2, "requires n >= 2")?;
    let mut sum = Expansion::new();
    for comp in compositions_min2(n) {
        let i1 = comp.parts()[0] as i64;
        sum.add(&comp, int((i1 - 1) * w(&comp) as i64));
    }
    Ok(sum.finish(&BigRational::one(), "cycle"))
}

/// The K-chain expansion: a factorial prefactor times a sum over the weak
/// compositions `K ⊨ n - l + 1` of length `l` satisfying, for each
/// `2 <= j <= l`, either `k_j < i_{j-1}` together with a strict suffix-sum
/// bound, or `k_j >= i_{j-1}` together with the reverse bound.
pub fn x_kchain(comp: &Composition) -> Result<ESymFunc> {
    require(
        "k-chain",
        !comp.is_empty() && comp.all_parts_at_least_two(),
        "requires a nonempty composition with every part >= 2",
    )?;
    let parts = comp.parts();
    let l = parts.len();
    let n = comp.size();

    let mut prefactor = factorial(parts[l - 1] - 1);
    for &i in &parts[..l - 1] {
        prefactor *= factorial(i - 2);
    }

    // suffix_i[j] = i_{j+1} + ⋯ + i_l (0-based j)
    let suffix_i: Vec<i64> = (0..l)
        .map(|j| parts[j..].iter().sum::<usize>() as i64)
        .collect();

    let mut sum = Expansion::new();
    for weak in weak_compositions(n - l + 1, l) {
        let k = weak.parts();
        let mut coeff = k[0] as i64;
        let mut admissible = true;
        let mut suffix_k = k.iter().sum::<usize>() as i64;
        for j in 1..l {
            suffix_k -= k[j - 1] as i64;
            // 1-based index j + 1, so the bound is i_{j+1} + ⋯ + i_l - (l - j - 1)
            let bound = suffix_i[j] - (l - j - 1) as i64;
            let (kj, prev) = (k[j] as i64, parts[j - 1] as i64);
            let ok = if kj < prev {
                suffix_k < bound
            } else {
                suffix_k >= bound
            };
            if !ok {
                admissible = false;
                break;
            }
            coeff *= (kj - prev + 1).abs();
        }
        if admissible && coeff != 0 {
            sum.add_partition(weak.rho(), int(coeff));
        }
    }
    Ok(sum.finish(&prefactor, "k-chain"))
}

/// The melting lollipop `K_a^l(k)`, `n = a + l`:
/// `(a-2)! [ Σ_{i_{-1} = a-1} k w_{I∖i_{-1}} e_I + Σ_{i_{-1} >= a} (a-k-1) w_I e_I ]`.
pub fn x_melting_lollipop(a: usize, l: usize, k: usize) -> Result<ESymFunc> {
    require("melting-lollipop", a >= 2, "requires a >= 2")?;
    require("melting-lollipop", k < a, "requires 0 <= k <= a - 1")?;
    let n = a + l;
    let mut sum = Expansion::new();
    for comp in compositions_of(n) {
        let last = comp.last().expect("nonempty");
        if last == a - 1 {
            sum.add(&comp, int(k as i64 * w_without_last(&comp) as i64));
        } else if last >= a {
            sum.add(&comp, int((a - k - 1) as i64 * w(&comp) as i64));
        }
    }
    Ok(sum.finish(&factorial(a - 2), "melting-lollipop"))
}

/// The lollipop `K_a^l`.
pub fn x_lollipop(a: usize, l: usize) -> Result<ESymFunc> {
    x_melting_lollipop(a, l, 0).map_err(|_| crate::error::invalid("lollipop", "requires a >= 2"))
}

/// `P^l(K_a, K_b)`, `n = a + b + l - 1`.
pub fn x_kpk(a: usize, b: usize, l: usize) -> Result<ESymFunc> {
    require("kpk", a >= 1 && b >= 1, "requires a, b >= 1")?;
    let n = a + b + l - 1;
    let mut sum = Expansion::new();
    for comp in compositions_of(n) {
        let parts = comp.parts();
        if comp.last().unwrap() < a {
            continue;
        }
        let i1 = parts[0];
        if i1 >= b {
            sum.add(&comp, int(w(&comp) as i64));
        } else if let Some(&i2) = parts.get(1) {
            if i2 > b - 1 {
                let tail: i64 = parts[2..].iter().map(|&p| p as i64 - 1).product();
                sum.add(&comp, int((i2 as i64 - i1 as i64) * tail));
            }
        }
    }
    Ok(sum.finish(&(factorial(a - 1) * factorial(b - 1)), "kpk"))
}

/// `P^l(K_a, K_3)`, `n = a + l + 2`:
/// `2(a-1)! [ (n-4) e_{2(n-2)} + Σ w_I e_I ]` over `i_{-1} >= a`,
/// `i_{-1} != n-2` and (`I = n` or `i_2 >= 3`).
pub fn x_kpk_b3(a: usize, l: usize) -> Result<ESymFunc> {
    require("kpk-b3", a >= 3, "requires a >= 3")?;
    let n = a + l + 2;
    let mut sum = Expansion::new();
    sum.add_partition(Partition::from_parts(vec![2, n - 2]), int(n as i64 - 4));
    for comp in compositions_of(n) {
        let last = comp.last().unwrap();
        let head_ok = comp.len() == 1 || comp.parts()[1] >= 3;
        if last >= a && last != n - 2 && head_ok {
            sum.add(&comp, int(w(&comp) as i64));
        }
    }
    Ok(sum.finish(&(int(2) * factorial(a - 1)), "kpk-b3"))
}

/// `f_1(I, b) = (b-1) w_I`.
fn f1(comp: &Composition, b: usize) -> BigRational {
    int((b as i64 - 1) * w(comp) as i64)
}

/// `f_2(I, b) = (b-2) i_{-1} w_{I∖i_{-1}}`.
fn f2(comp: &Composition, b: usize) -> BigRational {
    int((b as i64 - 2) * comp.last().unwrap() as i64 * w_without_last(comp) as i64)
}

/// `f_3(I, b) = (i_{-1} - b + 1) w_{I∖i_{-1}}`.
fn f3(comp: &Composition, b: usize) -> BigRational {
    int((comp.last().unwrap() as i64 - b as i64 + 1) * w_without_last(comp) as i64)
}

/// Checks `f_1(I,a) - f_2(I,a) - f_3(I,a)`, which must be `(a-1) e_n` for
/// `I = n` and zero otherwise.
pub fn f123_check(a: usize, comp: &Composition) -> bool {
    assert!(
        a >= 2 && !comp.is_empty(),
        "f123_check requires a >= 2 and a nonempty composition"
    );
    let combined = f1(comp, a) - f2(comp, a) - f3(comp, a);
    let lhs = ESymFunc::e_term(comp, combined);
    let rhs = if comp.len() == 1 {
        ESymFunc::e_term(comp, int(a as i64 - 1))
    } else {
        ESymFunc::zero()
    };
    lhs == rhs
}

/// The PKP graph `P_{g+1} + K_a + P_{h+1}`, `n = g + h + a`:
/// `(a-2)! [ (a-1) e_n + Σ_{Θ_I(h+1) >= a-1} f_2(I,a) + Σ_{i_{-1} >= a-1} f_3(I,a) ]`.
pub fn x_pkp(g: usize, a: usize, h: usize) -> Result<ESymFunc> {
    require("pkp", a >= 2, "requires a >= 2")?;
    let n = g + h + a;
    let mut sum = Expansion::new();
    sum.add_partition(Partition::from_parts(vec![n]), int(a as i64 - 1));
    for comp in compositions_of(n) {
        if theta(&comp, h + 1) + 1 >= a {
            sum.add(&comp, f2(&comp, a));
        }
        if comp.last().unwrap() + 1 >= a {
            sum.add(&comp, f3(&comp, a));
        }
    }
    Ok(sum.finish(&factorial(a - 2), "pkp"))
}

/// The KKP graph `K_a + K_b + P_{h+1}`, `n = a + b + h - 1`. One of the
/// three sums is subtracted; positivity holds for the total only.
pub fn x_kkp(a: usize, b: usize, h: usize) -> Result<ESymFunc> {
    require("kkp", a >= 1 && b >= 2, "requires a >= 1 and b >= 2")?;
    let n = a + b + h - 1;
    let mut sum = Expansion::new();
    for comp in compositions_of(n) {
        let last = comp.last().unwrap();
        if last >= n - h {
            sum.add(&comp, f1(&comp, b));
        }
        let Some(prev) = comp.part(-2) else { continue };
        if last + prev < n - h {
            continue;
        }
        if last < a.min(b - 1) {
            sum.add(&comp, -f3(&comp, b));
        }
        if a.max(b) <= last && last + h < n {
            sum.add(&comp, f3(&comp, b));
        }
    }
    let out = sum.finish(&(factorial(a - 1) * factorial(b - 2)), "kkp");
    assert!(
        out.is_e_positive(),
        "kkp({a}, {b}, {h}) is not e-positive: {out}"
    );
    Ok(out)
}

/// `P^l(K_a, C_c)`, `n = a + l + c - 1`: `(a-1)! Σ_{I ⊨ n} c_I w_I e_I` with
/// `c_I = 0` if `ℓ(I) >= 2` and `i_2 < a`; `i_2 - a - l + (i_2 - i_1)/(i_2 - 1)`
/// if `i_1 <= a-1` and `i_2 >= a+l`; and `Θ_I(a+l)` otherwise.
pub fn x_kpc(a: usize, l: usize, c: usize) -> Result<ESymFunc> {
    require("kpc", a >= 1 && c >= 2, "requires a >= 1 and c >= 2")?;
    let n = a + l + c - 1;
    let mut sum = Expansion::new();
    for comp in compositions_of(n) {
        let wi = w(&comp) as i64;
        if wi == 0 {
            continue;
        }
        let i1 = comp.parts()[0];
        let coeff = match comp.part(2) {
            Some(i2) if i2 < a => BigRational::zero(),
            Some(i2) if i1 < a && i2 >= a + l => {
                let (i1, i2) = (i1 as i64, i2 as i64);
                int(i2 - (a + l) as i64) + frac(i2 - i1, i2 - 1)
            }
            _ => int(theta(&comp, a + l) as i64),
        };
        sum.add(&comp, coeff * int(wi));
    }
    Ok(sum.finish(&factorial(a - 1), "kpc"))
}

/// The tadpole `C_c^l = P^l(K_1, C_c)`.
pub fn x_tadpole(c: usize, l: usize) -> Result<ESymFunc> {
    require("tadpole", c >= 2, "requires c >= 2")?;
    x_kpc(1, l, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::rat;

    fn e(parts: &[usize], c: i64) -> ESymFunc {
        ESymFunc::term(Partition::from_parts(parts.to_vec()), rat(c))
    }

    #[test]
    fn path_examples() {
        assert_eq!(x_path(1).unwrap(), e(&[1], 1));
        assert_eq!(x_path(3).unwrap(), e(&[3], 3) + e(&[2, 1], 1));
        assert_eq!(
            x_path(4).unwrap(),
            e(&[4], 4) + e(&[3, 1], 2) + e(&[2, 2], 2)
        );
        assert!(x_path(0).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(x_cycle(3).unwrap(), e(&[3], 6));
        assert_eq!(x_cycle(2).unwrap(), e(&[2], 2));
        assert!(x_cycle(1).is_err());
    }

    #[test]
    fn kchain_examples() {
        for n in 2..=7 {
            assert_eq!(
                x_kchain(&Composition::from(&[n][..])).unwrap(),
                e(&[n], 1).scale(&factorial(n))
            );
        }
        assert_eq!(
            x_kchain(&Composition::from([2, 2, 2])).unwrap(),
            x_path(4).unwrap()
        );
        assert!(x_kchain(&Composition::from([2, 1])).is_err());
        assert!(x_kchain(&Composition::empty()).is_err());
    }

    #[test]
    fn lollipop_examples() {
        for a in 2..=6 {
            assert_eq!(x_lollipop(a, 0).unwrap(), e(&[a], 1).scale(&factorial(a)));
        }
        assert_eq!(x_lollipop(2, 3).unwrap(), x_path(5).unwrap());
        assert!(x_melting_lollipop(3, 1, 3).is_err());
        assert!(x_lollipop(1, 2).is_err());
    }

    #[test]
    fn kpk_examples() {
        assert_eq!(x_kpk(2, 2, 1).unwrap(), x_path(4).unwrap());
        for l in 0..5 {
            assert_eq!(x_kpk(1, 1, l).unwrap(), x_path(l + 1).unwrap());
        }
        assert_eq!(x_kpk_b3(3, 0).unwrap(), x_kpk(3, 3, 0).unwrap());
        assert_eq!(x_kpk_b3(3, 1).unwrap(), x_kpc(3, 1, 3).unwrap());
        assert!(x_kpk_b3(2, 1).is_err());
    }

    #[test]
    fn pkp_examples() {
        for a in 2..=6 {
            assert_eq!(x_pkp(0, a, 0).unwrap(), e(&[a], 1).scale(&factorial(a)));
        }
        assert_eq!(x_pkp(1, 2, 1).unwrap(), x_path(4).unwrap());
    }

    #[test]
    fn tadpole_reduces_to_cycle() {
        for c in 2..=8 {
            assert_eq!(x_tadpole(c, 0).unwrap(), x_cycle(c).unwrap());
        }
    }

    #[test]
    fn tadpole_matches_theta_form() {
        // X_{C_c^l} = Σ Θ_I(l+1) w_I e_I
        for c in 2..=5 {
            for l in 0..=3 {
                let n = c + l;
                let mut direct = ESymFunc::zero();
                for comp in compositions_of(n) {
                    direct.add_e_term(&comp, rat((theta(&comp, l + 1) as u64 * w(&comp)) as i64));
                }
                assert_eq!(x_tadpole(c, l).unwrap(), direct, "c = {c}, l = {l}");
            }
        }
    }

    #[test]
    fn f123_examples() {
        assert!(f123_check(3, &Composition::from([5])));
        assert_eq!(
            f1(&Composition::from([5]), 3)
                - f2(&Composition::from([5]), 3)
                - f3(&Composition::from([5]), 3),
            rat(2)
        );
        assert!(f123_check(3, &Composition::from([2, 3])));
        for a in 2..=6 {
            for n in 1..=7 {
                for comp in compositions_of(n) {
                    assert!(f123_check(a, &comp), "a = {a}, I = {comp}");
                }
            }
        }
    }
}
