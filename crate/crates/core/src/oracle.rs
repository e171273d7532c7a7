//! Independent computations of chromatic symmetric functions, used to check
//! the closed-form evaluators.
//!
//! [`csf_bruteforce`] expands `X_G = Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}`, where
//! `λ(S)` lists the component sizes of the spanning subgraph `(V, S)`, and
//! converts the power sums to the elementary basis. The subset enumeration
//! walks the edges in order and drops a branch as soon as the next edge
//! joins two vertices that are already connected: including or excluding
//! such an edge leads to identical component structures with opposite
//! signs, so the two subtrees cancel exactly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{invalid, Error, Result};
use crate::formulas;
use crate::graphs::{self, conjoin, Graph, RootedGraph};
use crate::symfunc::{p_to_e, rat, ESymFunc};

pub const DEFAULT_EDGE_BUDGET: usize = 24;

/// Depth of the edge recursion below which branches are handed to rayon.
const PARALLEL_DEPTH: usize = 6;

type PowerSumCounts = BTreeMap<Vec<usize>, i64>;

struct Enumerator<'a> {
    order: usize,
    edges: &'a [(usize, usize)],
}

impl Enumerator<'_> {
    fn walk(&self, depth: usize, labels: &[usize], sign: i64, out: &mut PowerSumCounts) {
        if depth == self.edges.len() {
            let mut sizes = vec![0usize; self.order];
            for &c in labels.iter() {
                sizes[c] += 1;
            }
            let mut key: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
            key.sort_unstable_by(|a, b| b.cmp(a));
            *out.entry(key).or_insert(0) += sign;
            return;
        }
        let (u, v) = self.edges[depth];
        let (cu, cv) = (labels[u], labels[v]);
        if cu == cv {
            return;
        }
        let mut merged = labels.to_vec();
        for c in merged.iter_mut() {
            if *c == cv {
                *c = cu;
            }
        }
        if depth < PARALLEL_DEPTH {
            let mut other = PowerSumCounts::new();
            rayon::join(
                || self.walk(depth + 1, labels, sign, out),
                || self.walk(depth + 1, &merged, -sign, &mut other),
            );
            merge_counts(out, other);
        } else {
            self.walk(depth + 1, labels, sign, out);
            self.walk(depth + 1, &merged, -sign, out);
        }
    }
}

fn merge_counts(into: &mut PowerSumCounts, from: PowerSumCounts) {
    for (k, v) in from {
        *into.entry(k).or_insert(0) += v;
    }
}

/// `X_G` as a signed combination of power sums `p_λ`, keyed by `λ`.
pub fn csf_power_sums(g: &Graph, max_edges: usize) -> Result<BTreeMap<Vec<usize>, i64>> {
    if g.edge_count() > max_edges {
        return Err(Error::EdgeBudgetExceeded {
            edges: g.edge_count(),
            limit: max_edges,
        });
    }
    let edges: Vec<_> = g.edges().collect();
    let enumerator = Enumerator {
        order: g.order(),
        edges: &edges,
    };
    let labels: Vec<usize> = (0..g.order()).collect();
    let mut counts = PowerSumCounts::new();
    enumerator.walk(0, &labels, 1, &mut counts);
    counts.retain(|_, v| *v != 0);
    Ok(counts)
}

/// The chromatic symmetric function of `g` in the elementary basis, by
/// inclusion–exclusion over edge subsets.
///
/// Fails with [`Error::EdgeBudgetExceeded`] if `g` has more than
/// `max_edges` edges.
pub fn csf_bruteforce(g: &Graph, max_edges: usize) -> Result<ESymFunc> {
    let counts = csf_power_sums(g, max_edges)?;
    let mut out = ESymFunc::zero();
    for (sizes, count) in counts {
        let product = sizes
            .iter()
            .fold(ESymFunc::one(), |acc, &k| acc.mul(&p_to_e(k)));
        out.add_assign(&product.scale(&BigRational::from_integer(BigInt::from(count))));
    }
    debug_assert!(out.is_integral());
    Ok(out)
}

/// Checks both triple-deletion identities for the stable set `t`, with
/// `e_1 = t_0 t_1`, `e_2 = t_1 t_2` and `e_3 = t_0 t_2`:
///
/// `X_{G_12} = X_{G_1} + X_{G_23} - X_{G_3}` and
/// `X_{G_123} = X_{G_13} + X_{G_23} - X_{G_3}`.
pub fn triple_deletion_check(g: &Graph, t: [usize; 3], max_edges: usize) -> Result<(bool, bool)> {
    let [x, y, z] = t;
    let distinct = x != y && y != z && x != z;
    let in_range = t.iter().all(|&v| v < g.order());
    if !distinct || !in_range || g.has_edge(x, y) || g.has_edge(y, z) || g.has_edge(x, z) {
        return Err(Error::NotStable(t));
    }
    let extra = [(x, y), (y, z), (x, z)];
    let with = |set: &[usize]| -> Result<ESymFunc> {
        let mut h = g.clone();
        for &j in set {
            let (u, v) = extra[j - 1];
            h.add_edge(u, v)?;
        }
        csf_bruteforce(&h, max_edges)
    };
    let (g1, g3, g12, g13, g23, g123) = (
        with(&[1])?,
        with(&[3])?,
        with(&[1, 2])?,
        with(&[1, 3])?,
        with(&[2, 3])?,
        with(&[1, 2, 3])?,
    );
    let first = g12 == &(&g1 + &g23) - &g3;
    let second = g123 == &(&g13 + &g23) - &g3;
    Ok((first, second))
}

fn factorial(n: usize) -> BigRational {
    BigRational::from_integer((1..=n).map(BigInt::from).product())
}

/// `H^m = P^m(H, K_1)`.
fn pendant(h: &RootedGraph, m: usize) -> Graph {
    conjoin(h, &graphs::complete_rooted(1).expect("K_1"), m)
}

/// `X_{P^l(K_a, H)} = (a-1)! Σ_{i=0}^{a-1} (1-i) e_i X_{H^{a+l-i-1}}`, with
/// every `X_{H^m}` computed by brute force.
pub fn x_via_kpg(l: usize, a: usize, h: &RootedGraph, max_edges: usize) -> Result<ESymFunc> {
    if a < 2 {
        return Err(invalid("kpg", "requires a >= 2"));
    }
    let mut sum = ESymFunc::zero();
    for i in 0..a {
        let x_h = csf_bruteforce(&pendant(h, a + l - i - 1), max_edges)?;
        sum.add_assign(&ESymFunc::e(i).mul(&x_h).scale(&rat(1 - i as i64)));
    }
    Ok(sum.scale(&factorial(a - 1)))
}

/// `X_{P^l(C_a, H)} = (a-1) X_{H^{a+l-1}} - Σ_{i=1}^{a-2} X_{C_{a-i}} X_{H^{i+l-1}}`,
/// with `X_{C_2} = X_{K_2}` and every term computed by brute force.
pub fn x_via_cpg(l: usize, a: usize, h: &RootedGraph, max_edges: usize) -> Result<ESymFunc> {
    if a < 2 {
        return Err(invalid("cpg", "requires a >= 2"));
    }
    let mut sum = csf_bruteforce(&pendant(h, a + l - 1), max_edges)?.scale(&rat(a as i64 - 1));
    for i in 1..=a.saturating_sub(2) {
        let cycle = match a - i {
            2 => graphs::complete(2)?,
            k => graphs::cycle(k)?,
        };
        let term = csf_bruteforce(&cycle, max_edges)?
            .mul(&csf_bruteforce(&pendant(h, i + l - 1), max_edges)?);
        sum = &sum - &term;
    }
    Ok(sum)
}

/// `X_{P_m}` from the path formula, with `X_{P_0} = 1`.
fn xp(m: usize) -> ESymFunc {
    if m == 0 {
        ESymFunc::one()
    } else {
        formulas::x_path(m).expect("m >= 1")
    }
}

/// The right-hand side of the twinned-path recurrence
/// `X = -2 X_{P_{l-1}} X_{P_{n-l+2}} + 2 e_1 X_{P_n} + 4 X_{P_{n+1}}
///      - 2 X_{P_l} X_{P_{n-l+1}} + 2 e_2 X_{P_{l-1}} X_{P_{n-l}} - 2 X_{P_{l+1}} X_{P_{n-l}}`.
pub fn x_tw_path_rec(n: usize, l: usize) -> Result<ESymFunc> {
    if !(l >= 2 && l < n) {
        return Err(invalid("tw-path", "requires 2 <= l <= n - 1"));
    }
    let terms = [
        (-2, xp(l - 1).mul(&xp(n - l + 2))),
        (2, ESymFunc::e(1).mul(&xp(n))),
        (4, xp(n + 1)),
        (-2, xp(l).mul(&xp(n - l + 1))),
        (2, ESymFunc::e(2).mul(&xp(l - 1)).mul(&xp(n - l))),
        (-2, xp(l + 1).mul(&xp(n - l))),
    ];
    Ok(terms
        .into_iter()
        .fold(ESymFunc::zero(), |acc, (c, f)| acc + f.scale(&rat(c))))
}

/// `X_{tw(C_n)} = 4 X_{C_{n+1}} + 2 e_1 X_{C_n} - 6 X_{P_{n+1}} + 2 e_2 X_{P_{n-1}}`.
pub fn x_tw_cycle_rec(n: usize) -> Result<ESymFunc> {
    if n < 3 {
        return Err(invalid("tw-cycle", "requires n >= 3"));
    }
    let terms = [
        (4, formulas::x_cycle(n + 1)?),
        (2, ESymFunc::e(1).mul(&formulas::x_cycle(n)?)),
        (-6, xp(n + 1)),
        (2, ESymFunc::e(2).mul(&xp(n - 1))),
    ];
    Ok(terms
        .into_iter()
        .fold(ESymFunc::zero(), |acc, (c, f)| acc + f.scale(&rat(c))))
}

/// `X_{tw_h(K_a^l)} = 2 X_{P^{g+1}(K_a, K_3^{h-1})} - X_{K_3^{h-1}} X_{K_a^g}`
/// with `g = l - h - 1`, each term from its closed form.
pub fn x_tw_lollipop_rec(a: usize, l: usize, h: usize) -> Result<ESymFunc> {
    if !(a >= 1 && l >= 2 && h >= 1 && h < l) {
        return Err(invalid(
            "tw-lollipop",
            "requires a >= 1, l >= 2 and 1 <= h <= l - 1",
        ));
    }
    let g = l - h - 1;
    let kpkp = formulas::x_kpkp_b3(a, g + 1, h - 1)?;
    let lariat = formulas::x_lollipop(3, h - 1)?;
    let clique_side = if a == 1 {
        xp(g + 1)
    } else {
        formulas::x_lollipop(a, g)?
    };
    Ok(&kpkp.scale(&rat(2)) - &lariat.mul(&clique_side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::Partition;
    use crate::graphs::*;
    use rand::{Rng, SeedableRng};

    fn bf(g: &Graph) -> ESymFunc {
        csf_bruteforce(g, DEFAULT_EDGE_BUDGET).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(bf(&complete(1).unwrap()), ESymFunc::e(1));
        assert_eq!(bf(&complete(4).unwrap()), ESymFunc::e(4).scale(&rat(24)));
        let p3 = ESymFunc::e(3).scale(&rat(3)) + ESymFunc::term(Partition::from([2, 1]), rat(1));
        assert_eq!(bf(&path(3).unwrap()), p3);
        assert_eq!(bf(&Graph::empty(3)), ESymFunc::e(1).pow(3));
        assert_eq!(bf(&Graph::empty(0)), ESymFunc::one());
    }

    #[test]
    fn budget_is_enforced() {
        let k8 = complete(8).unwrap();
        assert_eq!(
            csf_bruteforce(&k8, 24),
            Err(Error::EdgeBudgetExceeded {
                edges: 28,
                limit: 24
            })
        );
        assert_eq!(
            csf_bruteforce(&k8, 28).unwrap(),
            ESymFunc::e(8).scale(&factorial(8))
        );
    }

    /// Proper colorings of `g` with at most `m` colors, by direct search.
    fn chromatic_polynomial(g: &Graph, m: usize) -> u64 {
        fn rec(g: &Graph, m: usize, v: usize, colors: &mut Vec<usize>) -> u64 {
            if v == g.order() {
                return 1;
            }
            let mut total = 0;
            for c in 0..m {
                if g.neighbors(v).iter().all(|&u| u > v || colors[u] != c) {
                    colors[v] = c;
                    total += rec(g, m, v + 1, colors);
                }
            }
            total
        }
        rec(g, m, 0, &mut vec![0; g.order()])
    }

    fn random_graph(rng: &mut impl Rng, max_order: usize) -> Graph {
        let n = rng.gen_range(1..=max_order);
        let p = rng.gen_range(0.1..0.8);
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn degree_and_chromatic_polynomial() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let g = random_graph(&mut rng, 7);
            let x = bf(&g);
            assert_eq!(x.degree(), g.order());
            assert!(x.is_integral());
            for m in 1..=4 {
                let ones = vec![rat(1); m];
                assert_eq!(
                    x.evaluate_at(&ones),
                    rat(chromatic_polynomial(&g, m) as i64),
                    "{g}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn multiplicative_over_disjoint_union() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..30 {
            let g = random_graph(&mut rng, 5);
            let h = random_graph(&mut rng, 5);
            assert_eq!(bf(&disjoint_union(&g, &h)), bf(&g).mul(&bf(&h)));
        }
    }

    #[test]
    fn parallel_split_is_deterministic() {
        let g = kayak(4, 4, 2).unwrap();
        let first = bf(&g);
        for _ in 0..3 {
            assert_eq!(bf(&g), first);
        }
    }

    #[test]
    fn triple_deletion_examples() {
        assert_eq!(
            triple_deletion_check(&Graph::empty(3), [0, 1, 2], 24).unwrap(),
            (true, true)
        );
        let p5 = path(5).unwrap();
        assert_eq!(
            triple_deletion_check(&p5, [0, 2, 4], 24).unwrap(),
            (true, true)
        );
        assert_eq!(
            triple_deletion_check(&p5, [0, 1, 4], 24),
            Err(Error::NotStable([0, 1, 4]))
        );
        assert!(triple_deletion_check(&p5, [0, 0, 4], 24).is_err());
    }

    #[test]
    fn kpg_assembly() {
        let k1 = complete_rooted(1).unwrap();
        assert_eq!(
            x_via_kpg(0, 2, &k1, 24).unwrap(),
            ESymFunc::e(2).scale(&rat(2))
        );
        assert_eq!(
            x_via_kpg(2, 3, &k1, 24).unwrap(),
            bf(&lollipop(3, 2).unwrap())
        );
        let c4 = cycle_rooted(4).unwrap();
        assert_eq!(
            x_via_kpg(1, 3, &c4, 24).unwrap(),
            bf(&kpc(3, 1, 4).unwrap())
        );
    }

    #[test]
    fn cpg_assembly() {
        let c3 = cycle_rooted(3).unwrap();
        assert_eq!(
            x_via_cpg(1, 3, &c3, 24).unwrap(),
            bf(&kayak(3, 3, 1).unwrap())
        );
        let k1 = complete_rooted(1).unwrap();
        assert_eq!(
            x_via_cpg(0, 3, &k1, 24).unwrap(),
            ESymFunc::e(3).scale(&rat(6))
        );
        assert_eq!(
            x_via_cpg(2, 5, &k1, 24).unwrap(),
            bf(&tadpole(5, 2).unwrap())
        );
    }

    #[test]
    fn recurrences_match_bruteforce() {
        assert_eq!(x_tw_cycle_rec(3).unwrap(), ESymFunc::e(4).scale(&rat(24)));
        assert_eq!(x_tw_path_rec(3, 2).unwrap(), bf(&tw_path(3, 2).unwrap()));
        assert_eq!(x_tw_cycle_rec(5).unwrap(), bf(&tw_cycle(5).unwrap()));
        assert_eq!(
            x_tw_lollipop_rec(3, 2, 1).unwrap(),
            bf(&tw_lollipop(3, 2, 1).unwrap())
        );
        assert_eq!(
            x_tw_lollipop_rec(1, 4, 2).unwrap(),
            bf(&tw_lollipop(1, 4, 2).unwrap())
        );
    }
}
