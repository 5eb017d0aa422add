//! The sparse-order iteration: alternating support extension and chordal
//! extension on every localizing block at once.

use std::collections::HashSet;

use crate::basis::{subset_basis, MonomialBasis};
use crate::ncalg::{Canon, NcPoly, Word};

use super::graph::{chordal_extension, CliqueSet, ExtensionKind, Graph};
use super::tsp::{squares, tsp_graph_on, MonGraph};

/// One localizing block: constraint `j` (0 is the unit constraint) restricted
/// to variable clique `clique`, with its current graph.
#[derive(Clone, Debug)]
pub struct TsBlock {
    pub clique: usize,
    pub constraint: usize,
    /// Support of the constraint polynomial (`[1]` for `j = 0`).
    pub g_support: Vec<Word>,
    pub graph: MonGraph,
    pub cliques: CliqueSet,
}

/// State of the graph sequence at sparse order `k`.
#[derive(Clone, Debug)]
pub struct IterState {
    pub canon: Canon,
    pub blocks: Vec<TsBlock>,
    /// Canonical squares `star(u) u` over the moment-matrix nodes.
    squares: HashSet<Word>,
    pub k: usize,
    pub stabilized: bool,
}

/// Data needed to start the iteration for a constrained problem.
#[derive(Clone, Debug)]
pub struct TsSetup<'a> {
    pub canon: Canon,
    pub f: &'a NcPoly,
    pub constraints: &'a [NcPoly],
    pub dhat: usize,
    /// Variable cliques (sorted letter lists).
    pub var_cliques: &'a [Vec<u16>],
    /// For each clique, the constraint indices (1-based) assigned to it.
    pub groups: &'a [Vec<usize>],
}

/// `ceil(deg(g) / 2)`.
pub fn half_degree(g: &NcPoly) -> usize {
    g.degree().div_ceil(2)
}

impl IterState {
    /// Initial graphs for a constrained problem: the term sparsity pattern
    /// graph on each clique's moment basis and empty localizing graphs.
    pub fn constrained(setup: &TsSetup<'_>) -> Self {
        let mut a: Vec<Word> = setup.f.support().cloned().collect();
        for g in setup.constraints {
            a.extend(g.support().cloned());
        }
        a.push(Word::one());
        let mut blocks = Vec::new();
        let mut sq = HashSet::new();
        for (l, vars) in setup.var_cliques.iter().enumerate() {
            let a_l: Vec<Word> = a
                .iter()
                .filter(|w| w.letters().iter().all(|x| vars.binary_search(x).is_ok()))
                .cloned()
                .collect();
            let nodes = subset_basis(vars, setup.dhat);
            sq.extend(squares(&nodes, setup.canon));
            let graph = tsp_graph_on(&a_l, nodes, setup.canon);
            blocks.push(TsBlock {
                clique: l,
                constraint: 0,
                g_support: vec![Word::one()],
                graph,
                cliques: CliqueSet::default(),
            });
            for &j in &setup.groups[l] {
                let g = &setup.constraints[j - 1];
                let dj = half_degree(g);
                let nodes = subset_basis(vars, setup.dhat.saturating_sub(dj));
                blocks.push(TsBlock {
                    clique: l,
                    constraint: j,
                    g_support: g.support().cloned().collect(),
                    graph: MonGraph::empty(nodes),
                    cliques: CliqueSet::default(),
                });
            }
        }
        IterState { canon: setup.canon, blocks, squares: sq, k: 0, stabilized: false }
    }

    /// Initial graph for an unconstrained problem on basis `b`.
    pub fn unconstrained(f: &NcPoly, b: MonomialBasis, canon: Canon) -> Self {
        let mut a: Vec<Word> = f.support().cloned().collect();
        a.push(Word::one());
        let sq = squares(&b, canon);
        let graph = tsp_graph_on(&a, b, canon);
        let block = TsBlock {
            clique: 0,
            constraint: 0,
            g_support: vec![Word::one()],
            graph,
            cliques: CliqueSet::default(),
        };
        IterState { canon, blocks: vec![block], squares: sq, k: 0, stabilized: false }
    }

    /// Canonical words `star(u) w v` over all edges and constraint words, plus squares.
    pub fn pool(&self) -> HashSet<Word> {
        let mut pool = self.squares.clone();
        for b in &self.blocks {
            for (i, j) in b.graph.graph.edges() {
                let (u, v) = (b.graph.nodes.get(i), b.graph.nodes.get(j));
                for w in &b.g_support {
                    pool.insert(self.canon.apply(&u.sandwich(w, v)));
                    pool.insert(self.canon.apply(&v.sandwich(w, u)));
                }
            }
        }
        pool
    }

    /// Advances the sparse order by one.
    pub fn step(&self, ext: ExtensionKind) -> IterState {
        self.step_with(|_, g| chordal_extension(g, ext))
    }

    /// Advances with a caller-supplied chordal extension.
    pub fn step_with(&self, mut extend: impl FnMut(&TsBlock, &Graph) -> (Graph, CliqueSet)) -> IterState {
        let pool = self.pool();
        let mut blocks = Vec::with_capacity(self.blocks.len());
        let mut unchanged = true;
        for b in &self.blocks {
            let nodes = &b.graph.nodes;
            let r = nodes.len();
            let mut f = Graph::new(r);
            for i in 0..r {
                for j in i + 1..r {
                    let (u, v) = (nodes.get(i), nodes.get(j));
                    if b.g_support.iter().any(|w| pool.contains(&self.canon.apply(&u.sandwich(w, v)))) {
                        f.add_edge(i, j);
                    }
                }
            }
            let (g, cliques) = extend(b, &f);
            unchanged &= g == b.graph.graph;
            blocks.push(TsBlock {
                clique: b.clique,
                constraint: b.constraint,
                g_support: b.g_support.clone(),
                graph: MonGraph { nodes: nodes.clone(), graph: g },
                cliques,
            });
        }
        IterState {
            canon: self.canon,
            blocks,
            squares: self.squares.clone(),
            k: self.k + 1,
            stabilized: self.k >= 1 && unchanged,
        }
    }

    /// Iterates to sparse order `k`.
    pub fn run_to(self, k: usize, ext: ExtensionKind) -> IterState {
        let mut s = self;
        while s.k < k {
            s = s.step(ext);
        }
        s
    }

    /// Iterates until the graphs stop changing; the returned state is the
    /// first order at which the fixed point is reached.
    pub fn run_to_stable(self, ext: ExtensionKind) -> IterState {
        let mut s = self.step(ext);
        loop {
            let next = s.step(ext);
            if next.stabilized {
                s.stabilized = true;
                return s;
            }
            s = next;
        }
    }

    /// Largest clique over all blocks.
    pub fn max_clique(&self) -> usize {
        self.blocks.iter().map(|b| b.cliques.max_size()).max().unwrap_or(0)
    }
}
