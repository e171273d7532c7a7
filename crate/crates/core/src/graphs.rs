//! Simple graphs and the graph families built from rooted pieces.
//!
//! Gluing keeps the labels of the graph built so far and appends the new
//! piece's non-root vertices in their original order, so every constructor
//! produces a reproducible edge list. Equality is label-sensitive.

use std::collections::BTreeSet;
use std::fmt;

use crate::compositions::Composition;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// A graph with one distinguished vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

/// A graph with two distinct distinguished vertices, glued on at `root_u`
/// and glued onto at `root_v` when chaining.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleRootedGraph {
    graph: Graph,
    root_u: usize,
    root_v: usize,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Adds the edge `uv`. Loops are rejected; adding an existing edge is a
    /// no-op and returns `false`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(invalid("graph", format!("loop at vertex {u}")));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        self.edges.remove(&(u.min(v), u.max(v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Glues `piece` onto `self` by identifying `piece_root` with `at`.
    /// Returns the new labels of the piece's vertices.
    fn glue(&mut self, at: usize, piece: &Graph, piece_root: usize) -> Vec<usize> {
        let mut labels = vec![usize::MAX; piece.order];
        labels[piece_root] = at;
        let mut next = self.order;
        for (v, label) in labels.iter_mut().enumerate() {
            if v != piece_root {
                *label = next;
                next += 1;
            }
        }
        self.order = next;
        for (a, b) in piece.edges() {
            let (x, y) = (labels[a], labels[b]);
            self.edges.insert((x.min(y), x.max(y)));
        }
        labels
    }

    /// Parses the edge-list format: the vertex count on the first line, then
    /// one whitespace-separated `u v` pair per line (0-indexed). Blank lines
    /// and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let order: usize = header.parse().map_err(|_| Error::Parse {
            line: first_line,
            message: format!("expected a vertex count, found `{header}`"),
        })?;
        let mut g = Graph::empty(order);
        for (line, content) in lines {
            let fields: Vec<_> = content.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad vertex `{s}`"),
                })
            };
            let [u, v] = fields[..] else {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, found `{content}`"),
                });
            };
            let (u, v) = (parse(u)?, parse(v)?);
            if u == v || u >= order || v >= order {
                return Err(Error::Parse {
                    line,
                    message: format!("invalid edge {u} {v}"),
                });
            }
            if !g.add_edge(u, v)? {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate edge {u} {v}"),
                });
            }
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices with edges {{", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "}}")
    }
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        graph.check_vertex(root)?;
        Ok(RootedGraph { graph, root })
    }
}

impl DoubleRootedGraph {
    pub fn new(graph: Graph, root_u: usize, root_v: usize) -> Result<Self> {
        graph.check_vertex(root_u)?;
        graph.check_vertex(root_v)?;
        if root_u == root_v {
            return Err(invalid("double-rooted graph", "roots must be distinct"));
        }
        Ok(DoubleRootedGraph {
            graph,
            root_u,
            root_v,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn roots(&self) -> (usize, usize) {
        (self.root_u, self.root_v)
    }
}

/// The path `P_n` on vertices `0, 1, …, n-1`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("path", "requires n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The cycle `C_n` on vertices `0, …, n-1`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle", "requires n >= 3"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete", "requires n >= 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `P_n` rooted at its two endpoints. Requires `n >= 2`.
pub fn path_double_rooted(n: usize) -> Result<DoubleRootedGraph> {
    if n < 2 {
        return Err(invalid("path", "a double-rooted path needs n >= 2"));
    }
    DoubleRootedGraph::new(path(n)?, 0, n - 1)
}

/// `K_n` rooted at vertices `0` and `n - 1`. Requires `n >= 2`.
pub fn complete_double_rooted(n: usize) -> Result<DoubleRootedGraph> {
    if n < 2 {
        return Err(invalid("complete", "a double-rooted clique needs n >= 2"));
    }
    DoubleRootedGraph::new(complete(n)?, 0, n - 1)
}

/// `K_n` rooted at vertex `n - 1`.
pub fn complete_rooted(n: usize) -> Result<RootedGraph> {
    RootedGraph::new(complete(n)?, n.saturating_sub(1))
}

/// `C_n` rooted at vertex 0.
pub fn cycle_rooted(n: usize) -> Result<RootedGraph> {
    RootedGraph::new(cycle(n)?, 0)
}

/// `G_1 + ⋯ + G_l`: identifies `root_v` of each piece with `root_u` of the
/// next. The first piece keeps its labels.
pub fn chain(pieces: &[DoubleRootedGraph]) -> Result<Graph> {
    let (first, rest) = pieces
        .split_first()
        .ok_or_else(|| invalid("chain", "needs at least one piece"))?;
    let mut g = first.graph.clone();
    let mut attach = first.root_v;
    for piece in rest {
        let labels = g.glue(attach, &piece.graph, piece.root_u);
        attach = labels[piece.root_v];
    }
    Ok(g)
}

/// Chains pieces where `None` stands for the one-vertex graph `K_1`, which
/// contributes nothing to a chain.
fn chain_with_trivial(pieces: Vec<Option<DoubleRootedGraph>>) -> Result<Graph> {
    let pieces: Vec<_> = pieces.into_iter().flatten().collect();
    if pieces.is_empty() {
        complete(1)
    } else {
        chain(&pieces)
    }
}

fn clique_piece(a: usize) -> Result<Option<DoubleRootedGraph>> {
    match a {
        0 => Err(invalid("complete", "requires n >= 1")),
        1 => Ok(None),
        _ => complete_double_rooted(a).map(Some),
    }
}

fn path_piece(n: usize) -> Result<Option<DoubleRootedGraph>> {
    match n {
        0 => Err(invalid("path", "requires n >= 1")),
        1 => Ok(None),
        _ => path_double_rooted(n).map(Some),
    }
}

/// The K-chain `K_{i_1} + ⋯ + K_{i_l}` for `I ∈ 𝓦_n`.
pub fn k_chain(comp: &Composition) -> Result<Graph> {
    if comp.is_empty() || !comp.all_parts_at_least_two() {
        return Err(invalid(
            "k-chain",
            "requires a nonempty composition with every part >= 2",
        ));
    }
    let pieces = comp
        .parts()
        .iter()
        .map(|&i| complete_double_rooted(i))
        .collect::<Result<Vec<_>>>()?;
    chain(&pieces)
}

/// `P^l(G, H)`: joins the roots of `G` and `H` by a path of length `l`
/// (`l = 0` identifies the roots). Order `|G| + |H| + l - 1`.
pub fn conjoin(g: &RootedGraph, h: &RootedGraph, l: usize) -> Graph {
    let mut out = g.graph.clone();
    let mut attach = g.root;
    if l > 0 {
        let p = path(l + 1).expect("l + 1 >= 1");
        attach = out.glue(attach, &p, 0)[l];
    }
    out.glue(attach, &h.graph, h.root);
    out
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let mut out = g.clone();
    let shift = g.order;
    out.order += h.order;
    out.edges
        .extend(h.edges().map(|(u, v)| (u + shift, v + shift)));
    out
}

/// The twin of `G` at `v`: a new vertex adjacent to `v` and to every
/// neighbor of `v`.
pub fn twin(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let mut out = g.clone();
    let new = out.order;
    out.order += 1;
    out.add_edge(new, v)?;
    for u in g.neighbors(v) {
        out.add_edge(new, u)?;
    }
    Ok(out)
}

fn require(family: &'static str, ok: bool, message: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(invalid(family, message))
    }
}

/// The lollipop `K_a^l = K_a + P_{l+1}`. The center is vertex `a - 1`, the
/// path continues on `a, …, a + l - 1`.
pub fn lollipop(a: usize, l: usize) -> Result<Graph> {
    require("lollipop", a >= 2, "requires a >= 2")?;
    lollipop_unchecked(a, l)
}

fn lollipop_unchecked(a: usize, l: usize) -> Result<Graph> {
    chain_with_trivial(vec![clique_piece(a)?, path_piece(l + 1)?])
}

/// `K_a^l(k)`: the lollipop with the `k` clique edges from the center to
/// vertices `0, …, k-1` removed.
pub fn melting_lollipop(a: usize, l: usize, k: usize) -> Result<Graph> {
    require("melting-lollipop", a >= 2, "requires a >= 2")?;
    require("melting-lollipop", k < a, "requires 0 <= k <= a - 1")?;
    let mut g = lollipop(a, l)?;
    for j in 0..k {
        g.remove_edge(a - 1, j);
    }
    Ok(g)
}

/// `P^l(K_a, K_b)`.
pub fn kpk(a: usize, b: usize, l: usize) -> Result<Graph> {
    require("kpk", a >= 1 && b >= 1, "requires a, b >= 1")?;
    chain_with_trivial(vec![clique_piece(a)?, path_piece(l + 1)?, clique_piece(b)?])
}

/// `P_{g+1} + K_a + P_{h+1}`.
pub fn pkp(g: usize, a: usize, h: usize) -> Result<Graph> {
    require("pkp", a >= 2, "requires a >= 2")?;
    chain_with_trivial(vec![
        path_piece(g + 1)?,
        clique_piece(a)?,
        path_piece(h + 1)?,
    ])
}

/// `K_a + K_b + P_{h+1}`.
pub fn kkp(a: usize, b: usize, h: usize) -> Result<Graph> {
    require("kkp", a >= 1 && b >= 2, "requires a >= 1 and b >= 2")?;
    chain_with_trivial(vec![clique_piece(a)?, clique_piece(b)?, path_piece(h + 1)?])
}

/// The KPKP graph `P^g(K_a, K_b^h) = K_a + P_{g+1} + K_b + P_{h+1}`.
pub fn kpkp(a: usize, g: usize, b: usize, h: usize) -> Result<Graph> {
    require("kpkp", a >= 1 && b >= 2, "requires a >= 1 and b >= 2")?;
    chain_with_trivial(vec![
        clique_piece(a)?,
        path_piece(g + 1)?,
        clique_piece(b)?,
        path_piece(h + 1)?,
    ])
}

/// `P^l(K_a, C_c)`.
pub fn kpc(a: usize, l: usize, c: usize) -> Result<Graph> {
    require("kpc", a >= 1 && c >= 3, "requires a >= 1 and c >= 3")?;
    Ok(conjoin(&complete_rooted(a)?, &cycle_rooted(c)?, l))
}

/// The tadpole `C_c^l`: the cycle on `0, …, c-1` with a path of length `l`
/// hanging from vertex 0.
pub fn tadpole(c: usize, l: usize) -> Result<Graph> {
    require("tadpole", c >= 3, "requires c >= 3")?;
    Ok(conjoin(&cycle_rooted(c)?, &complete_rooted(1)?, l))
}

/// The kayak paddle `P^l(C_a, C_b)`.
pub fn kayak(a: usize, b: usize, l: usize) -> Result<Graph> {
    require("kayak", a >= 3 && b >= 3, "requires a, b >= 3")?;
    Ok(conjoin(&cycle_rooted(a)?, &cycle_rooted(b)?, l))
}

/// The infinity graph: two cycles sharing one vertex.
pub fn infinity(a: usize, b: usize) -> Result<Graph> {
    require("infinity", a >= 3 && b >= 3, "requires a, b >= 3")?;
    kayak(a, b, 0)
}

/// `tw_l(P_n)`: the path `v_1 ⋯ v_n` twinned at `v_l`.
pub fn tw_path(n: usize, l: usize) -> Result<Graph> {
    require("tw-path", l >= 2 && l < n, "requires 2 <= l <= n - 1")?;
    twin(&path(n)?, l - 1)
}

pub fn tw_cycle(n: usize) -> Result<Graph> {
    require("tw-cycle", n >= 3, "requires n >= 3")?;
    twin(&cycle(n)?, 0)
}

/// `tw_h(K_a^l)`: the lollipop twinned at the path vertex at distance `h`
/// from the leaf. For `a = 1` this is a twinned path.
pub fn tw_lollipop(a: usize, l: usize, h: usize) -> Result<Graph> {
    require("tw-lollipop", a >= 1, "requires a >= 1")?;
    require("tw-lollipop", l >= 2, "requires l >= 2")?;
    require("tw-lollipop", h >= 1 && h < l, "requires 1 <= h <= l - 1")?;
    let g = lollipop_unchecked(a, l)?;
    twin(&g, a + l - 1 - h)
}

/// The tadpole `C_c^l` twinned at the cycle vertex at distance `i` from the
/// center (measured along the cycle).
pub fn tw_tadpole(c: usize, l: usize, i: usize) -> Result<Graph> {
    require("tw-tadpole", i <= c / 2, "distance must be at most c / 2")?;
    twin(&tadpole(c, l)?, i)
}
