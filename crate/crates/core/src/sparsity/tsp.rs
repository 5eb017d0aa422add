//! Graphs on monomial bases: term sparsity patterns and support extensions.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::basis::{standard_basis, MonomialBasis};
use crate::ncalg::{Canon, NcPoly, Word};

use super::graph::Graph;

/// A graph whose nodes are the words of a monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonGraph {
    pub nodes: MonomialBasis,
    pub graph: Graph,
}

impl MonGraph {
    pub fn empty(nodes: MonomialBasis) -> Self {
        let graph = Graph::new(nodes.len());
        MonGraph { nodes, graph }
    }

    /// Builds a graph from word pairs; pairs naming unknown words are ignored.
    pub fn from_word_edges<'a>(nodes: MonomialBasis, edges: impl IntoIterator<Item = (&'a Word, &'a Word)>) -> Self {
        let mut g = MonGraph::empty(nodes);
        for (u, v) in edges {
            if let (Some(i), Some(j)) = (g.nodes.index_of(u), g.nodes.index_of(v)) {
                g.graph.add_edge(i, j);
            }
        }
        g
    }

    /// Edges as word pairs `(u, v)` with `u < v`.
    pub fn word_edges(&self) -> Vec<(Word, Word)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(i, j)| (self.nodes.get(i).clone(), self.nodes.get(j).clone()))
            .collect()
    }

    /// `{ star(u) v : {u, v} an edge }`, both orientations.
    pub fn support(&self) -> HashSet<Word> {
        let mut out = HashSet::new();
        for (i, j) in self.graph.edges() {
            let (u, v) = (self.nodes.get(i), self.nodes.get(j));
            out.insert(u.sandwich(&Word::one(), v));
            out.insert(v.sandwich(&Word::one(), u));
        }
        out
    }

    /// Edge list dump, one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.word_edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

/// Canonical forms of `{ star(u) u : u in nodes }`.
pub fn squares(nodes: &MonomialBasis, canon: Canon) -> HashSet<Word> {
    nodes.iter().map(|u| canon.apply(&u.sandwich(&Word::one(), u))).collect()
}

fn canonical_set<'a>(words: impl IntoIterator<Item = &'a Word>, canon: Canon) -> HashSet<Word> {
    words.into_iter().map(|w| canon.apply(w)).collect()
}

/// Edges `{u, v}`, `u != v`, with `[star(u) v]` in `pool` (already canonical).
fn pattern_graph(nodes: MonomialBasis, pool: &HashSet<Word>, canon: Canon) -> MonGraph {
    let mut g = MonGraph::empty(nodes);
    let r = g.nodes.len();
    for i in 0..r {
        for j in i + 1..r {
            let w = g.nodes.get(i).sandwich(&Word::one(), g.nodes.get(j));
            if pool.contains(&canon.apply(&w)) {
                g.graph.add_edge(i, j);
            }
        }
    }
    g
}

fn extension(g: &MonGraph, canon: Canon) -> MonGraph {
    let mut pool = canonical_set(g.support().iter(), canon);
    pool.extend(squares(&g.nodes, canon));
    pattern_graph(g.nodes.clone(), &pool, canon)
}

/// Support extension: `{u, v}` is an edge iff `star(u) v` lies in the support
/// of `g` or is a square of a node.
pub fn support_extension(g: &MonGraph) -> MonGraph {
    extension(g, Canon::Symmetric)
}

/// Support extension with membership tested up to cyclic equivalence.
pub fn cyclic_support_extension(g: &MonGraph) -> MonGraph {
    extension(g, Canon::Cyclic)
}

fn support_with_one(f: &NcPoly) -> Vec<Word> {
    let mut a: Vec<Word> = f.support().cloned().collect();
    a.push(Word::one());
    a
}

/// Term sparsity pattern graph of an unconstrained problem on basis `b`.
/// The word `1` is always treated as part of the support.
pub fn tsp_graph_unconstrained(f: &NcPoly, b: &MonomialBasis) -> MonGraph {
    tsp_graph_on(&support_with_one(f), b.clone(), Canon::Symmetric)
}

/// Term sparsity pattern graph on `nodes` for the word set `a`.
pub fn tsp_graph_on(a: &[Word], nodes: MonomialBasis, canon: Canon) -> MonGraph {
    let mut pool = canonical_set(a.iter(), canon);
    pool.extend(squares(&nodes, canon));
    pattern_graph(nodes, &pool, canon)
}

/// Term sparsity pattern graph on `W_dhat` for the word set `a`.
pub fn tsp_graph_constrained(a: &[Word], dhat: usize, n: usize) -> MonGraph {
    tsp_graph_on(a, standard_basis(n, dhat), Canon::Symmetric)
}

/// Cyclic term sparsity pattern graph on `W_dhat`.
pub fn cyclic_tsp_graph(a: &[Word], dhat: usize, n: usize) -> MonGraph {
    tsp_graph_on(a, standard_basis(n, dhat), Canon::Cyclic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_poly;

    fn w(v: &[u16]) -> Word {
        Word::new(v.to_vec())
    }

    fn edges_of(g: &MonGraph) -> HashSet<(Word, Word)> {
        g.word_edges().into_iter().collect()
    }

    #[test]
    fn support_extension_adds_one_edge() {
        // X=1, Y=2, Z=3
        let nodes = MonomialBasis::from_words(
            3,
            [Word::one(), w(&[1]), w(&[2]), w(&[3]), w(&[2, 3]), w(&[3, 1]), w(&[1, 2])],
        );
        let g = MonGraph::from_word_edges(nodes, [(&Word::one(), &w(&[2, 3])), (&w(&[2]), &w(&[3, 1]))]);
        let se = support_extension(&g);
        let mut expect = edges_of(&g);
        expect.insert((w(&[2]), w(&[3])));
        assert_eq!(edges_of(&se), expect);
    }

    #[test]
    fn support_extension_fixes_complete() {
        let nodes = standard_basis(2, 1);
        let g = MonGraph { graph: Graph::complete(3), nodes };
        assert_eq!(support_extension(&g), g);
    }

    #[test]
    fn cyclic_extension_links_rotations() {
        let nodes = MonomialBasis::from_words(2, [Word::one(), w(&[1, 2]), w(&[2, 1])]);
        let g = MonGraph::from_word_edges(nodes, [(&Word::one(), &w(&[1, 2]))]);
        let e = edges_of(&cyclic_support_extension(&g));
        assert!(e.contains(&(Word::one(), w(&[2, 1]))));
        let e = edges_of(&support_extension(&g));
        assert!(e.contains(&(Word::one(), w(&[2, 1]))), "star(1)*X2X1 is the reversal of X1X2");
        let g = MonGraph::empty(standard_basis(1, 1));
        assert_eq!(cyclic_support_extension(&g).graph.num_edges(), 0);
    }

    #[test]
    fn tsp_edge_cases() {
        let f = parse_poly("1 + x1^2").unwrap();
        let g = tsp_graph_unconstrained(&f, &standard_basis(1, 1));
        assert_eq!(g.graph.num_edges(), 0);
        let g = tsp_graph_constrained(&[Word::one()], 1, 1);
        assert_eq!(g.graph.num_edges(), 0);
        let all: Vec<Word> = standard_basis(2, 2).words().to_vec();
        let g = tsp_graph_constrained(&all, 1, 2);
        assert_eq!(g.graph.num_edges(), 3);
    }

    #[test]
    fn three_variable_tsp_edges() {
        let f = parse_poly(
            "x1^2 - x1x2 - x2x1 + 3x2^2 - 2x1x2x1 + 2x1x2^2x1 - x2x3 - x3x2 + 6x3^2 \
             + 9x2^2x3 + 9x3x2^2 - 54x3x2x3 + 142x3x2^2x3",
        )
        .unwrap();
        let b = crate::basis::newton_chip(&f).unwrap();
        let g = tsp_graph_unconstrained(&f, &b);
        let one = Word::one();
        let (x, y, z) = (w(&[1]), w(&[2]), w(&[3]));
        let (yx, yz) = (w(&[2, 1]), w(&[2, 3]));
        let expect: HashSet<(Word, Word)> = [
            (one.clone(), yx.clone()),
            (one.clone(), yz.clone()),
            (x.clone(), y.clone()),
            (x.clone(), yx.clone()),
            (y.clone(), z.clone()),
            (y.clone(), yz.clone()),
            (z.clone(), yz.clone()),
        ]
        .into_iter()
        .collect();
        assert_eq!(edges_of(&g), expect);
        assert_eq!(support_extension(&g), g);
    }

    #[test]
    fn two_variable_constrained_tsp() {
        // A = supp(f) ∪ supp(g) for f = 2 - X^2 + XY^2X - Y^2, S = {4 - X^2 - Y^2, XY + YX - 2}
        let f = parse_poly("2 - x1^2 + x1x2^2x1 - x2^2").unwrap();
        let g1 = parse_poly("4 - x1^2 - x2^2").unwrap();
        let g2 = parse_poly("x1x2 + x2x1 - 2").unwrap();
        let mut a: Vec<Word> = f.support().cloned().collect();
        a.extend(g1.support().cloned());
        a.extend(g2.support().cloned());
        let g = tsp_graph_constrained(&a, 2, 2);
        let one = Word::one();
        let expect: HashSet<(Word, Word)> = [
            (one.clone(), w(&[1, 1])),
            (one.clone(), w(&[1, 2])),
            (one.clone(), w(&[2, 1])),
            (one.clone(), w(&[2, 2])),
            (w(&[1]), w(&[2])),
        ]
        .into_iter()
        .collect();
        assert_eq!(edges_of(&g), expect);
        assert!(g.graph.is_chordal());
        let h = cyclic_tsp_graph(&a, 2, 2);
        let e = edges_of(&h);
        assert!(e.contains(&(w(&[1, 1]), w(&[2, 2]))));
        assert_eq!(e.len(), edges_of(&g).len() + 1);
    }
}
