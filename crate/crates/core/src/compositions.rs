//! Compositions, weak compositions and partitions, together with the
//! prefix-sum statistics that index every expansion formula in the crate.
//!
//! Parts are addressed with 1-based indices. A negative index counts from
//! the end, so `part(-1)` is the last part and `part(-2)` the one before it.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

/// A finite sequence of nonnegative integers of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakComposition(Vec<usize>);

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Composition {
    /// Builds a composition, returning `None` if some part is zero.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        if parts.iter().all(|&p| p >= 1) {
            Some(Composition(parts))
        } else {
            None
        }
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Size `|I|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length `ℓ(I)`, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The part `i_k` for `k >= 1`, or `i_{-k}` (the `|k|`-th last part) for
    /// `k <= -1`. Returns `None` when the index is out of range or zero.
    pub fn part(&self, k: isize) -> Option<usize> {
        self.index_of(k).map(|idx| self.0[idx])
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    fn index_of(&self, k: isize) -> Option<usize> {
        let len = self.0.len() as isize;
        let idx = match k {
            0 => return None,
            k if k > 0 => k - 1,
            k => len + k,
        };
        (0..len).contains(&idx).then_some(idx as usize)
    }

    /// `ρ(I)`: the parts sorted into a partition.
    pub fn rho(&self) -> Partition {
        Partition::from_parts(self.0.clone())
    }

    /// The reversal `Ī`.
    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `I \ i_k`, with the same signed indexing as [`Composition::part`].
    pub fn remove_part(&self, k: isize) -> Option<Composition> {
        let idx = self.index_of(k)?;
        let mut parts = self.0.clone();
        parts.remove(idx);
        Some(Composition(parts))
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// The composition with `p` appended as a new last part.
    pub fn push(&self, p: usize) -> Composition {
        assert!(p >= 1, "composition parts must be positive");
        let mut parts = self.0.clone();
        parts.push(p);
        Composition(parts)
    }

    /// The composition with `p` prepended as a new first part.
    pub fn prepend(&self, p: usize) -> Composition {
        assert!(p >= 1, "composition parts must be positive");
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.push(p);
        parts.extend_from_slice(&self.0);
        Composition(parts)
    }

    /// Prefix sums `0, i_1, i_1 + i_2, …, |I|`, empty prefix included.
    pub fn prefix_sums(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(0).chain(self.0.iter().scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        }))
    }

    pub fn is_prefix_sum(&self, a: usize) -> bool {
        self.prefix_sums().any(|s| s == a)
    }

    /// Whether every part is at least 2, i.e. `I ∈ 𝓦_n`.
    pub fn all_parts_at_least_two(&self) -> bool {
        self.0.iter().all(|&p| p >= 2)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl From<&[usize]> for Composition {
    /// Panics if some part is zero.
    fn from(parts: &[usize]) -> Self {
        Composition::new(parts.to_vec()).expect("composition parts must be positive")
    }
}

impl<const N: usize> From<[usize; N]> for Composition {
    fn from(parts: [usize; N]) -> Self {
        Composition::from(&parts[..])
    }
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The partition formed by the nonzero parts.
    pub fn rho(&self) -> Partition {
        Partition::from_parts(self.0.iter().copied().filter(|&p| p > 0).collect())
    }
}

impl Partition {
    /// Sorts `parts` descending. Panics if some part is zero.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        assert!(
            parts.iter().all(|&p| p >= 1),
            "partition parts must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.0[i..]);
        parts.extend_from_slice(&other.0[j..]);
        Partition(parts)
    }
}

/// Partitions are ordered lexicographically on their (descending) parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl From<&Composition> for Partition {
    fn from(c: &Composition) -> Self {
        c.rho()
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::from_parts(parts.to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All compositions of `n` with every part at least `min_part`, in
/// lexicographic order of their part sequences.
fn compositions_with_min_part(n: usize, min_part: usize) -> Vec<Composition> {
    fn rec(rest: usize, min_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for p in min_part..=rest {
            prefix.push(p);
            rec(rest - p, min_part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, min_part.max(1), &mut Vec::new(), &mut out);
    out
}

/// All `2^(n-1)` compositions of `n` (just the empty composition for `n = 0`),
/// in lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    compositions_with_min_part(n, 1)
}

/// The set `𝓦_n` of compositions of `n` whose parts are all at least 2.
pub fn compositions_min2(n: usize) -> Vec<Composition> {
    compositions_with_min_part(n, 2)
}

/// All weak compositions of `total` with exactly `length` parts, in
/// lexicographic order.
pub fn weak_compositions(total: usize, length: usize) -> Vec<WeakComposition> {
    fn rec(rest: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
        if slots == 1 {
            prefix.push(rest);
            out.push(WeakComposition(prefix.clone()));
            prefix.pop();
            return;
        }
        for p in 0..=rest {
            prefix.push(p);
            rec(rest - p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if length == 0 {
        if total == 0 {
            out.push(WeakComposition(Vec::new()));
        }
        return out;
    }
    rec(total, length, &mut Vec::new(), &mut out);
    out
}

/// `w_I = i_1 (i_2 - 1) ⋯ (i_l - 1)`.
///
/// # Panics
///
/// If `comp` is empty.
pub fn w(comp: &Composition) -> u64 {
    let parts = comp.parts();
    assert!(!parts.is_empty(), "w is undefined on the empty composition");
    parts[1..]
        .iter()
        .fold(parts[0] as u64, |acc, &p| acc * (p as u64 - 1))
}

/// `w` of the composition with its last part removed, where removing the
/// only part leaves the empty product 1.
pub fn w_without_last(comp: &Composition) -> u64 {
    match comp.parts() {
        [] => panic!("cannot drop the last part of the empty composition"),
        [_] => 1,
        [init @ .., _] => init[1..]
            .iter()
            .fold(init[0] as u64, |acc, &p| acc * (p as u64 - 1)),
    }
}

fn check_range(comp: &Composition, a: usize) {
    assert!(
        !comp.is_empty(),
        "prefix statistics are undefined on the empty composition"
    );
    assert!(
        a <= comp.size(),
        "argument {a} outside [0, {}] for composition {comp}",
        comp.size()
    );
}

/// `σ_I(a)`: the smallest prefix sum of `comp` that is at least `a`.
///
/// # Panics
///
/// If `comp` is empty or `a > |I|`.
pub fn sigma(comp: &Composition, a: usize) -> usize {
    check_range(comp, a);
    comp.prefix_sums()
        .find(|&s| s >= a)
        .expect("full sum bounds a")
}

/// `Θ_I(a) = σ_I(a) - a`.
pub fn theta(comp: &Composition, a: usize) -> usize {
    sigma(comp, a) - a
}

/// `σ⁻_I(a)`: the largest prefix sum of `comp` that is at most `a`.
pub fn sigma_minus(comp: &Composition, a: usize) -> usize {
    check_range(comp, a);
    comp.prefix_sums()
        .take_while(|&s| s <= a)
        .last()
        .expect("empty prefix is 0")
}

/// `Θ⁻_I(a) = a - σ⁻_I(a)`.
pub fn theta_minus(comp: &Composition, a: usize) -> usize {
    a - sigma_minus(comp, a)
}

/// The statistic `I(a) = Θ_I(a) + Θ⁻_I(a)`: zero when `a` is a prefix sum,
/// otherwise the part that straddles `a`.
///
/// # Panics
///
/// Unless `1 <= a <= |I| - 1`.
pub fn gap(comp: &Composition, a: usize) -> usize {
    assert!(
        a >= 1 && a < comp.size(),
        "gap argument {a} outside [1, {}]",
        comp.size().saturating_sub(1)
    );
    theta(comp, a) + theta_minus(comp, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::from(parts)
    }

    #[test]
    fn enumerates_compositions() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        let three: Vec<_> = compositions_of(3)
            .into_iter()
            .map(Composition::into_parts)
            .collect();
        assert_eq!(three, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
        assert_eq!(compositions_of(10).len(), 512);
    }

    #[test]
    fn enumerates_min2_compositions() {
        assert!(compositions_min2(1).is_empty());
        assert_eq!(compositions_min2(4), vec![comp(&[2, 2]), comp(&[4])]);
        let mut six = compositions_min2(6);
        six.sort();
        let mut expected = vec![
            comp(&[6]),
            comp(&[4, 2]),
            comp(&[2, 4]),
            comp(&[3, 3]),
            comp(&[2, 2, 2]),
        ];
        expected.sort();
        assert_eq!(six, expected);
    }

    #[test]
    fn min2_counts_follow_recurrence() {
        // c(n) = c(n-1) + c(n-2), c(0) = 1, c(1) = 0, counted without the
        // enumerator: a part-at-least-two composition either starts with 2
        // or lowers its first part by one.
        let mut c = vec![1usize, 0];
        for n in 2..=16 {
            c.push(c[n - 1] + c[n - 2]);
        }
        for n in 0..=16 {
            assert_eq!(compositions_min2(n).len(), c[n], "n = {n}");
        }
    }

    #[test]
    fn w_values() {
        assert_eq!(w(&comp(&[5])), 5);
        assert_eq!(w(&comp(&[1, 3])), 2);
        assert_eq!(w(&comp(&[2, 1])), 0);
        assert_eq!(w_without_last(&comp(&[4])), 1);
        assert_eq!(w_without_last(&comp(&[3, 4, 9])), 9);
    }

    #[test]
    #[should_panic]
    fn w_rejects_empty() {
        w(&Composition::empty());
    }

    #[test]
    fn sigma_theta_examples() {
        let i = comp(&[8, 3, 6, 1, 7]);
        assert_eq!(sigma(&i, 15), 17);
        assert_eq!(theta(&i, 15), 2);
        assert_eq!(sigma(&i, 0), 0);
        assert_eq!(theta(&i, 0), 0);
        assert_eq!(sigma(&comp(&[4, 2]), 4), 4);
        assert_eq!(theta(&comp(&[4, 2]), 4), 0);

        assert_eq!(sigma_minus(&i, 15), 11);
        assert_eq!(theta_minus(&i, 15), 4);
        assert_eq!(theta_minus(&i, 25), 0);
        assert_eq!(sigma_minus(&comp(&[2, 2]), 3), 2);
        assert_eq!(theta_minus(&comp(&[2, 2]), 3), 1);
    }

    #[test]
    #[should_panic]
    fn sigma_rejects_out_of_range() {
        sigma(&comp(&[2, 2]), 5);
    }

    #[test]
    fn gap_examples() {
        let i = comp(&[8, 3, 6, 1, 7]);
        assert_eq!(gap(&i, 15), 6);
        assert_eq!(gap(&i, 17), 0);
        assert_eq!(gap(&comp(&[5]), 2), 5);
    }

    #[test]
    #[should_panic]
    fn gap_rejects_full_size() {
        gap(&comp(&[2, 3]), 5);
    }

    #[test]
    fn structural_helpers() {
        assert_eq!(comp(&[1, 3, 2]).rho(), Partition::from([3, 2, 1]));
        assert_eq!(comp(&[8, 3, 6, 1, 7]).reverse(), comp(&[7, 1, 6, 3, 8]));
        assert_eq!(comp(&[2, 5, 3]).remove_part(-1), Some(comp(&[2, 5])));
        assert_eq!(comp(&[2, 5, 3]).remove_part(1), Some(comp(&[5, 3])));
        assert_eq!(comp(&[2, 5, 3]).remove_part(4), None);
        assert_eq!(comp(&[2, 5, 3]).remove_part(0), None);
        assert_eq!(comp(&[2, 5]).concat(&comp(&[1])), comp(&[2, 5, 1]));
        assert_eq!(Composition::empty().concat(&comp(&[4])), comp(&[4]));
        assert_eq!(comp(&[2, 5, 3]).part(-2), Some(5));
        assert_eq!(comp(&[2]).part(-2), None);
        assert!(Composition::new(vec![2, 0]).is_none());
    }

    #[test]
    fn weak_composition_examples() {
        assert_eq!(
            weak_compositions(0, 3),
            vec![WeakComposition::new(vec![0, 0, 0])]
        );
        let two: Vec<_> = weak_compositions(2, 2)
            .into_iter()
            .map(|k| k.parts().to_vec())
            .collect();
        assert_eq!(two, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(weak_compositions(4, 3).len(), 15);
    }

    fn arb_composition() -> impl Strategy<Value = Composition> {
        prop::collection::vec(1usize..7, 1..7).prop_map(|v| Composition::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn theta_minus_is_reversed_theta(c in arb_composition(), frac in 0.0f64..=1.0) {
            let n = c.size();
            let a = ((n as f64) * frac).round() as usize;
            prop_assert_eq!(theta_minus(&c, a), theta(&c.reverse(), n - a));
        }

        #[test]
        fn sigma_minus_shift(c in arb_composition(), frac in 0.0f64..=1.0) {
            let k1 = c.first().unwrap();
            let rest = c.remove_part(1).unwrap();
            let a = ((rest.size() as f64) * frac).round() as usize;
            if rest.is_empty() {
                prop_assert_eq!(sigma_minus(&c, k1), k1);
            } else {
                prop_assert_eq!(sigma_minus(&c, k1 + a), sigma_minus(&rest, a) + k1);
            }
        }

        #[test]
        fn gap_zero_iff_prefix_sum(c in arb_composition(), frac in 0.0f64..=1.0) {
            let n = c.size();
            prop_assume!(n >= 2);
            let a = 1 + ((n as f64 - 2.0) * frac).round() as usize;
            prop_assert_eq!(gap(&c, a) == 0, c.is_prefix_sum(a));
            if gap(&c, a) != 0 {
                prop_assert!(c.parts().contains(&gap(&c, a)));
            }
        }

        #[test]
        fn rho_preserves_size_and_length(c in arb_composition()) {
            let r = c.rho();
            prop_assert_eq!(r.size(), c.size());
            prop_assert_eq!(r.len(), c.len());
            prop_assert!(r.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn composition_counts() {
        for n in 1..=14 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
    }
}
