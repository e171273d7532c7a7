//! A registry tying each family's closed-form evaluator to its graph
//! constructor, parameter ranges and verification grid.

use std::collections::BTreeMap;
use std::fmt;

use super::*;
use crate::compositions::{compositions_min2, Composition};
use crate::error::{invalid, Error, Result};
use crate::graphs::{self, Graph};

/// A graph family together with concrete parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    KChain {
        parts: Composition,
    },
    MeltingLollipop {
        a: usize,
        l: usize,
        k: usize,
    },
    Lollipop {
        a: usize,
        l: usize,
    },
    Kpk {
        a: usize,
        b: usize,
        l: usize,
    },
    KpkB3 {
        a: usize,
        l: usize,
    },
    Pkp {
        g: usize,
        a: usize,
        h: usize,
    },
    Kkp {
        a: usize,
        b: usize,
        h: usize,
    },
    Kpc {
        a: usize,
        l: usize,
        c: usize,
    },
    Tadpole {
        c: usize,
        l: usize,
    },
    Kpkp {
        a: usize,
        g: usize,
        b: usize,
        h: usize,
    },
    KpkpB3 {
        a: usize,
        g: usize,
        h: usize,
    },
    TwPath {
        n: usize,
        l: usize,
    },
    TwCycle {
        n: usize,
    },
    TwLollipop {
        a: usize,
        l: usize,
        h: usize,
    },
    Kayak {
        a: usize,
        b: usize,
        l: usize,
    },
    Infinity {
        a: usize,
        b: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    KChain,
    MeltingLollipop,
    Lollipop,
    Kpk,
    KpkB3,
    Pkp,
    Kkp,
    Kpc,
    Tadpole,
    Kpkp,
    KpkpB3,
    TwPath,
    TwCycle,
    TwLollipop,
    Kayak,
    Infinity,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 19] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::KChain,
        FamilyKind::MeltingLollipop,
        FamilyKind::Lollipop,
        FamilyKind::Kpk,
        FamilyKind::KpkB3,
        FamilyKind::Pkp,
        FamilyKind::Kkp,
        FamilyKind::Kpc,
        FamilyKind::Tadpole,
        FamilyKind::Kpkp,
        FamilyKind::KpkpB3,
        FamilyKind::TwPath,
        FamilyKind::TwCycle,
        FamilyKind::TwLollipop,
        FamilyKind::Kayak,
        FamilyKind::Infinity,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::KChain => "k-chain",
            FamilyKind::MeltingLollipop => "melting-lollipop",
            FamilyKind::Lollipop => "lollipop",
            FamilyKind::Kpk => "kpk",
            FamilyKind::KpkB3 => "kpk-b3",
            FamilyKind::Pkp => "pkp",
            FamilyKind::Kkp => "kkp",
            FamilyKind::Kpc => "kpc",
            FamilyKind::Tadpole => "tadpole",
            FamilyKind::Kpkp => "kpkp",
            FamilyKind::KpkpB3 => "kpkp-b3",
            FamilyKind::TwPath => "tw-path",
            FamilyKind::TwCycle => "tw-cycle",
            FamilyKind::TwLollipop => "tw-lollipop",
            FamilyKind::Kayak => "kayak",
            FamilyKind::Infinity => "infinity",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.tag() == tag)
            .ok_or_else(|| Error::UnknownFamily(tag.to_string()))
    }

    /// Integer parameter names, in the order they are displayed. `k-chain`
    /// takes a composition (`parts`) instead.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            FamilyKind::Path | FamilyKind::Cycle | FamilyKind::Complete | FamilyKind::TwCycle => {
                &["n"]
            }
            FamilyKind::KChain => &[],
            FamilyKind::MeltingLollipop => &["a", "l", "k"],
            FamilyKind::Lollipop | FamilyKind::KpkB3 => &["a", "l"],
            FamilyKind::Kpk | FamilyKind::Kayak => &["a", "b", "l"],
            FamilyKind::Pkp => &["g", "a", "h"],
            FamilyKind::Kkp => &["a", "b", "h"],
            FamilyKind::Kpc => &["a", "l", "c"],
            FamilyKind::Tadpole => &["c", "l"],
            FamilyKind::Kpkp => &["a", "g", "b", "h"],
            FamilyKind::KpkpB3 => &["a", "g", "h"],
            FamilyKind::TwPath => &["n", "l"],
            FamilyKind::TwLollipop => &["a", "l", "h"],
            FamilyKind::Infinity => &["a", "b"],
        }
    }

    /// One-line description with the parameter hypotheses.
    pub fn describe(self) -> &'static str {
        match self {
            FamilyKind::Path => "path P_n; n >= 1",
            FamilyKind::Cycle => "cycle C_n; n >= 3 (the evaluator also accepts n = 2)",
            FamilyKind::Complete => "complete graph K_n; n >= 1",
            FamilyKind::KChain => "K-chain K_{i_1} + ... + K_{i_l}; --parts with every part >= 2",
            FamilyKind::MeltingLollipop => {
                "lollipop K_a^l with k center edges removed; a >= 2, 0 <= k <= a-1"
            }
            FamilyKind::Lollipop => "lollipop K_a^l; a >= 2, l >= 0",
            FamilyKind::Kpk => "P^l(K_a, K_b); a, b >= 1, l >= 0",
            FamilyKind::KpkB3 => "P^l(K_a, K_3), b = 3 closed form; a >= 3, l >= 0",
            FamilyKind::Pkp => "P_{g+1} + K_a + P_{h+1}; a >= 2, g, h >= 0",
            FamilyKind::Kkp => "K_a + K_b + P_{h+1}; a >= 1, b >= 2, h >= 0",
            FamilyKind::Kpc => "P^l(K_a, C_c); a >= 1, l >= 0, c >= 3",
            FamilyKind::Tadpole => "tadpole C_c^l; c >= 3, l >= 0",
            FamilyKind::Kpkp => "P^g(K_a, K_b^h); a >= 1, b >= 2, g, h >= 0",
            FamilyKind::KpkpB3 => "P^g(K_a, K_3^h), b = 3 closed form; a >= 1, g, h >= 0",
            FamilyKind::TwPath => "path P_n twinned at v_l; n >= 3, 2 <= l <= n-1",
            FamilyKind::TwCycle => "cycle C_n twinned at a vertex; n >= 3",
            FamilyKind::TwLollipop => {
                "lollipop K_a^l twinned at distance h from the leaf; a >= 1, l >= 2, 1 <= h <= l-1"
            }
            FamilyKind::Kayak => "kayak paddle P^l(C_a, C_b); a, b >= 3, l >= 0",
            FamilyKind::Infinity => "infinity graph (two cycles sharing a vertex); a, b >= 3",
        }
    }

    /// Every parameter tuple satisfying the family's hypotheses with size at
    /// most `max_order`, in lexicographic parameter order. The size is the
    /// graph's order, except for `tw-path` and `tw-cycle` where it is the
    /// `n` of the graph before twinning.
    pub fn grid(self, max_order: usize) -> Vec<Family> {
        let m = max_order;
        let mut out = Vec::new();
        match self {
            FamilyKind::Path => out.extend((1..=m).map(|n| Family::Path { n })),
            FamilyKind::Cycle => out.extend((3..=m).map(|n| Family::Cycle { n })),
            FamilyKind::Complete => out.extend((1..=m).map(|n| Family::Complete { n })),
            FamilyKind::KChain => {
                for n in 2..=m {
                    let mut comps = compositions_min2(n);
                    comps.sort();
                    out.extend(comps.into_iter().map(|parts| Family::KChain { parts }));
                }
            }
            FamilyKind::MeltingLollipop => {
                for a in 2..=m {
                    for l in 0..=m - a {
                        out.extend((0..a).map(|k| Family::MeltingLollipop { a, l, k }));
                    }
                }
            }
            FamilyKind::Lollipop => {
                for a in 2..=m {
                    out.extend((0..=m - a).map(|l| Family::Lollipop { a, l }));
                }
            }
            FamilyKind::Kpk => {
                for a in 1..=m {
                    for b in 1..=m + 1 - a {
                        out.extend((0..=m + 1 - a - b).map(|l| Family::Kpk { a, b, l }));
                    }
                }
            }
            FamilyKind::KpkB3 => {
                for a in 3..=m.saturating_sub(2) {
                    out.extend((0..=m - 2 - a).map(|l| Family::KpkB3 { a, l }));
                }
            }
            FamilyKind::Pkp => {
                for g in 0..=m {
                    for a in 2..=m.saturating_sub(g) {
                        out.extend((0..=m - g - a).map(|h| Family::Pkp { g, a, h }));
                    }
                }
            }
            FamilyKind::Kkp => {
                for a in 1..=m {
                    for b in 2..=m + 1 - a {
                        out.extend((0..=m + 1 - a - b).map(|h| Family::Kkp { a, b, h }));
                    }
                }
            }
            FamilyKind::Kpc => {
                for a in 1..=m {
                    for l in 0..=m - a {
                        out.extend((3..=m + 1 - a - l).map(|c| Family::Kpc { a, l, c }));
                    }
                }
            }
            FamilyKind::Tadpole => {
                for c in 3..=m {
                    out.extend((0..=m - c).map(|l| Family::Tadpole { c, l }));
                }
            }
            FamilyKind::Kpkp => {
                for a in 1..=m {
                    for g in 0..=m - a {
                        for b in 2..=m + 1 - a - g {
                            out.extend((0..=m + 1 - a - g - b).map(|h| Family::Kpkp {
                                a,
                                g,
                                b,
                                h,
                            }));
                        }
                    }
                }
            }
            FamilyKind::KpkpB3 => {
                for a in 1..=m.saturating_sub(2) {
                    for g in 0..=m - 2 - a {
                        out.extend((0..=m - 2 - a - g).map(|h| Family::KpkpB3 { a, g, h }));
                    }
                }
            }
            FamilyKind::TwPath => {
                for n in 3..=m {
                    out.extend((2..n).map(|l| Family::TwPath { n, l }));
                }
            }
            FamilyKind::TwCycle => out.extend((3..=m).map(|n| Family::TwCycle { n })),
            FamilyKind::TwLollipop => {
                for a in 1..=m {
                    for l in 2..=m.saturating_sub(a + 1) {
                        out.extend((1..l).map(|h| Family::TwLollipop { a, l, h }));
                    }
                }
            }
            FamilyKind::Kayak => {
                for a in 3..=m {
                    for b in 3..=(m + 1).saturating_sub(a) {
                        out.extend((0..=m + 1 - a - b).map(|l| Family::Kayak { a, b, l }));
                    }
                }
            }
            FamilyKind::Infinity => {
                for a in 3..=m {
                    out.extend((3..=(m + 1).saturating_sub(a)).map(|b| Family::Infinity { a, b }));
                }
            }
        }
        out
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Family {
    /// Builds a family from its tag and named integer parameters. The
    /// parameters are checked against the family's hypotheses.
    pub fn from_params(
        tag: &str,
        params: &BTreeMap<String, usize>,
        parts: Option<&Composition>,
    ) -> Result<Family> {
        let kind = FamilyKind::from_tag(tag)?;
        let names = kind.params();
        for key in params.keys() {
            if !names.contains(&key.as_str()) {
                return Err(invalid(kind.tag(), format!("unexpected parameter `{key}`")));
            }
        }
        if parts.is_some() && kind != FamilyKind::KChain {
            return Err(invalid(kind.tag(), "unexpected parameter `parts`"));
        }
        let get = |name: &str| -> Result<usize> {
            params
                .get(name)
                .copied()
                .ok_or_else(|| invalid(kind.tag(), format!("missing parameter `{name}`")))
        };
        let family = match kind {
            FamilyKind::Path => Family::Path { n: get("n")? },
            FamilyKind::Cycle => Family::Cycle { n: get("n")? },
            FamilyKind::Complete => Family::Complete { n: get("n")? },
            FamilyKind::KChain => Family::KChain {
                parts: parts
                    .cloned()
                    .ok_or_else(|| invalid("k-chain", "missing parameter `parts`"))?,
            },
            FamilyKind::MeltingLollipop => Family::MeltingLollipop {
                a: get("a")?,
                l: get("l")?,
                k: get("k")?,
            },
            FamilyKind::Lollipop => Family::Lollipop {
                a: get("a")?,
                l: get("l")?,
            },
            FamilyKind::Kpk => Family::Kpk {
                a: get("a")?,
                b: get("b")?,
                l: get("l")?,
            },
            FamilyKind::KpkB3 => Family::KpkB3 {
                a: get("a")?,
                l: get("l")?,
            },
            FamilyKind::Pkp => Family::Pkp {
                g: get("g")?,
                a: get("a")?,
                h: get("h")?,
            },
            FamilyKind::Kkp => Family::Kkp {
                a: get("a")?,
                b: get("b")?,
                h: get("h")?,
            },
            FamilyKind::Kpc => Family::Kpc {
                a: get("a")?,
                l: get("l")?,
                c: get("c")?,
            },
            FamilyKind::Tadpole => Family::Tadpole {
                c: get("c")?,
                l: get("l")?,
            },
            FamilyKind::Kpkp => Family::Kpkp {
                a: get("a")?,
                g: get("g")?,
                b: get("b")?,
                h: get("h")?,
            },
            FamilyKind::KpkpB3 => Family::KpkpB3 {
                a: get("a")?,
                g: get("g")?,
                h: get("h")?,
            },
            FamilyKind::TwPath => Family::TwPath {
                n: get("n")?,
                l: get("l")?,
            },
            FamilyKind::TwCycle => Family::TwCycle { n: get("n")? },
            FamilyKind::TwLollipop => Family::TwLollipop {
                a: get("a")?,
                l: get("l")?,
                h: get("h")?,
            },
            FamilyKind::Kayak => Family::Kayak {
                a: get("a")?,
                b: get("b")?,
                l: get("l")?,
            },
            FamilyKind::Infinity => Family::Infinity {
                a: get("a")?,
                b: get("b")?,
            },
        };
        family.validate()?;
        Ok(family)
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Path { .. } => FamilyKind::Path,
            Family::Cycle { .. } => FamilyKind::Cycle,
            Family::Complete { .. } => FamilyKind::Complete,
            Family::KChain { .. } => FamilyKind::KChain,
            Family::MeltingLollipop { .. } => FamilyKind::MeltingLollipop,
            Family::Lollipop { .. } => FamilyKind::Lollipop,
            Family::Kpk { .. } => FamilyKind::Kpk,
            Family::KpkB3 { .. } => FamilyKind::KpkB3,
            Family::Pkp { .. } => FamilyKind::Pkp,
            Family::Kkp { .. } => FamilyKind::Kkp,
            Family::Kpc { .. } => FamilyKind::Kpc,
            Family::Tadpole { .. } => FamilyKind::Tadpole,
            Family::Kpkp { .. } => FamilyKind::Kpkp,
            Family::KpkpB3 { .. } => FamilyKind::KpkpB3,
            Family::TwPath { .. } => FamilyKind::TwPath,
            Family::TwCycle { .. } => FamilyKind::TwCycle,
            Family::TwLollipop { .. } => FamilyKind::TwLollipop,
            Family::Kayak { .. } => FamilyKind::Kayak,
            Family::Infinity { .. } => FamilyKind::Infinity,
        }
    }

    /// Checks the hypotheses under which the family's closed form holds.
    pub fn validate(&self) -> Result<()> {
        let tag = self.kind().tag();
        let check = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(invalid(tag, msg)) };
        match *self {
            Family::Path { n } | Family::Complete { n } => check(n >= 1, "requires n >= 1"),
            Family::Cycle { n } => check(n >= 2, "requires n >= 2"),
            Family::KChain { ref parts } => check(
                !parts.is_empty() && parts.all_parts_at_least_two(),
                "requires a nonempty composition with every part >= 2",
            ),
            Family::MeltingLollipop { a, k, .. } => {
                check(a >= 2 && k < a, "requires a >= 2 and 0 <= k <= a - 1")
            }
            Family::Lollipop { a, .. } => check(a >= 2, "requires a >= 2"),
            Family::Kpk { a, b, .. } => check(a >= 1 && b >= 1, "requires a, b >= 1"),
            Family::KpkB3 { a, .. } => check(a >= 3, "requires a >= 3"),
            Family::Pkp { a, .. } => check(a >= 2, "requires a >= 2"),
            Family::Kkp { a, b, .. } | Family::Kpkp { a, b, .. } => {
                check(a >= 1 && b >= 2, "requires a >= 1 and b >= 2")
            }
            Family::Kpc { a, c, .. } => check(a >= 1 && c >= 2, "requires a >= 1 and c >= 2"),
            Family::Tadpole { c, .. } => check(c >= 2, "requires c >= 2"),
            Family::KpkpB3 { a, .. } => check(a >= 1, "requires a >= 1"),
            Family::TwPath { n, l } => check(
                n >= 3 && l >= 2 && l < n,
                "requires n >= 3 and 2 <= l <= n - 1",
            ),
            Family::TwCycle { n } => check(n >= 3, "requires n >= 3"),
            Family::TwLollipop { a, l, h } => check(
                a >= 1 && l >= 2 && h >= 1 && h < l,
                "requires a >= 1, l >= 2 and 1 <= h <= l - 1",
            ),
            Family::Kayak { a, b, .. } | Family::Infinity { a, b } => {
                check(a >= 3 && b >= 3, "requires a, b >= 3")
            }
        }
    }

    /// The closed-form expansion.
    pub fn evaluate(&self) -> Result<ESymFunc> {
        match *self {
            Family::Path { n } => x_path(n),
            Family::Cycle { n } => x_cycle(n),
            Family::Complete { n } => {
                require("complete", n >= 1, "requires n >= 1")?;
                Ok(ESymFunc::e(n).scale(&factorial(n)))
            }
            Family::KChain { ref parts } => x_kchain(parts),
            Family::MeltingLollipop { a, l, k } => x_melting_lollipop(a, l, k),
            Family::Lollipop { a, l } => x_lollipop(a, l),
            Family::Kpk { a, b, l } => x_kpk(a, b, l),
            Family::KpkB3 { a, l } => x_kpk_b3(a, l),
            Family::Pkp { g, a, h } => x_pkp(g, a, h),
            Family::Kkp { a, b, h } => x_kkp(a, b, h),
            Family::Kpc { a, l, c } => x_kpc(a, l, c),
            Family::Tadpole { c, l } => x_tadpole(c, l),
            Family::Kpkp { a, g, b, h } => x_kpkp(a, g, b, h),
            Family::KpkpB3 { a, g, h } => x_kpkp_b3(a, g, h),
            Family::TwPath { n, l } => x_tw_path(n, l),
            Family::TwCycle { n } => x_tw_cycle(n),
            Family::TwLollipop { a, l, h } => x_tw_lollipop(a, l, h),
            Family::Kayak { a, b, l } => x_kayak(a, b, l),
            Family::Infinity { a, b } => x_infinity(a, b),
        }
    }

    /// The graph the closed form describes.
    pub fn graph(&self) -> Result<Graph> {
        match *self {
            Family::Path { n } => graphs::path(n),
            Family::Cycle { n } => graphs::cycle(n),
            Family::Complete { n } => graphs::complete(n),
            Family::KChain { ref parts } => graphs::k_chain(parts),
            Family::MeltingLollipop { a, l, k } => graphs::melting_lollipop(a, l, k),
            Family::Lollipop { a, l } => graphs::lollipop(a, l),
            Family::Kpk { a, b, l } => graphs::kpk(a, b, l),
            Family::KpkB3 { a, l } => graphs::kpk(a, 3, l),
            Family::Pkp { g, a, h } => graphs::pkp(g, a, h),
            Family::Kkp { a, b, h } => graphs::kkp(a, b, h),
            Family::Kpc { a, l, c } => graphs::kpc(a, l, c),
            Family::Tadpole { c, l } => graphs::tadpole(c, l),
            Family::Kpkp { a, g, b, h } => graphs::kpkp(a, g, b, h),
            Family::KpkpB3 { a, g, h } => graphs::kpkp(a, g, 3, h),
            Family::TwPath { n, l } => graphs::tw_path(n, l),
            Family::TwCycle { n } => graphs::tw_cycle(n),
            Family::TwLollipop { a, l, h } => graphs::tw_lollipop(a, l, h),
            Family::Kayak { a, b, l } => graphs::kayak(a, b, l),
            Family::Infinity { a, b } => graphs::infinity(a, b),
        }
    }

    /// Number of vertices, i.e. the degree of the expansion.
    pub fn order(&self) -> usize {
        match *self {
            Family::Path { n } | Family::Cycle { n } | Family::Complete { n } => n,
            Family::KChain { ref parts } => parts.size() + 1 - parts.len(),
            Family::MeltingLollipop { a, l, .. } | Family::Lollipop { a, l } => a + l,
            Family::Kpk { a, b, l } => a + b + l - 1,
            Family::KpkB3 { a, l } => a + l + 2,
            Family::Pkp { g, a, h } => g + a + h,
            Family::Kkp { a, b, h } => a + b + h - 1,
            Family::Kpc { a, l, c } => a + l + c - 1,
            Family::Tadpole { c, l } => c + l,
            Family::Kpkp { a, g, b, h } => a + g + b + h - 1,
            Family::KpkpB3 { a, g, h } => a + g + h + 2,
            Family::TwPath { n, .. } | Family::TwCycle { n } => n + 1,
            Family::TwLollipop { a, l, .. } => a + l + 1,
            Family::Kayak { a, b, l } => a + b + l - 1,
            Family::Infinity { a, b } => a + b - 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = self.kind();
        write!(f, "{kind}")?;
        if let Family::KChain { parts } = self {
            return write!(f, " parts={parts}");
        }
        let values: Vec<usize> = match *self {
            Family::Path { n }
            | Family::Cycle { n }
            | Family::Complete { n }
            | Family::TwCycle { n } => vec![n],
            Family::KChain { .. } => vec![],
            Family::MeltingLollipop { a, l, k } => vec![a, l, k],
            Family::Lollipop { a, l } | Family::KpkB3 { a, l } => vec![a, l],
            Family::Kpk { a, b, l } | Family::Kayak { a, b, l } => vec![a, b, l],
            Family::Pkp { g, a, h } => vec![g, a, h],
            Family::Kkp { a, b, h } => vec![a, b, h],
            Family::Kpc { a, l, c } => vec![a, l, c],
            Family::Tadpole { c, l } => vec![c, l],
            Family::Kpkp { a, g, b, h } => vec![a, g, b, h],
            Family::KpkpB3 { a, g, h } => vec![a, g, h],
            Family::TwPath { n, l } => vec![n, l],
            Family::TwLollipop { a, l, h } => vec![a, l, h],
            Family::Infinity { a, b } => vec![a, b],
        };
        for (name, v) in kind.params().iter().zip(values) {
            write!(f, " {name}={v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for kind in FamilyKind::ALL {
            assert_eq!(FamilyKind::from_tag(kind.tag()).unwrap(), kind);
        }
        assert!(matches!(
            FamilyKind::from_tag("bowtie"),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn grid_orders_and_graphs_agree() {
        for kind in FamilyKind::ALL {
            let grid = kind.grid(8);
            assert!(!grid.is_empty(), "{kind}");
            for fam in grid {
                assert!(fam.order() <= 9, "{fam}");
                fam.validate().unwrap();
                assert_eq!(fam.graph().unwrap().order(), fam.order(), "{fam}");
            }
        }
    }

    #[test]
    fn from_params_validates() {
        let params = |kv: &[(&str, usize)]| {
            kv.iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect::<BTreeMap<_, _>>()
        };
        let fam = Family::from_params("tw-cycle", &params(&[("n", 4)]), None).unwrap();
        assert_eq!(fam, Family::TwCycle { n: 4 });
        assert_eq!(fam.to_string(), "tw-cycle n=4");
        assert!(Family::from_params("tw-cycle", &params(&[("n", 2)]), None).is_err());
        assert!(Family::from_params("tw-cycle", &params(&[]), None).is_err());
        assert!(Family::from_params("tw-cycle", &params(&[("n", 4), ("a", 1)]), None).is_err());
        assert!(Family::from_params(
            "tw-lollipop",
            &params(&[("a", 3), ("l", 3), ("h", 0)]),
            None
        )
        .is_err());
        let parts = Composition::from([3, 3]);
        let chain = Family::from_params("k-chain", &params(&[]), Some(&parts)).unwrap();
        assert_eq!(chain.to_string(), "k-chain parts=(3,3)");
        assert!(Family::from_params("path", &params(&[("n", 3)]), Some(&parts)).is_err());
    }
}
