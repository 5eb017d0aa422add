//! Undirected simple graphs, chordal extensions and maximal cliques.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::SparsityError;

/// Undirected graph on nodes `0..n` without self-loops.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![BTreeSet::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn num_nodes(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Adds `{u, v}`; self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, u: usize) -> &BTreeSet<usize> {
        &self.adj[u]
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.adj.len() <= other.adj.len()
            && self.adj.iter().enumerate().all(|(u, nb)| nb.iter().all(|&v| other.has_edge(u, v)))
    }

    pub fn union_with(&mut self, other: &Graph) {
        for (u, v) in other.edges() {
            self.add_edge(u, v);
        }
    }

    /// Connected components, each sorted, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Maximum cardinality search ordering; its reverse is a perfect
    /// elimination ordering exactly when the graph is chordal.
    fn mcs_order(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut weight = vec![0usize; n];
        let mut done = vec![false; n];
        // buckets keyed by weight, ties broken by smallest index
        let mut queue: BTreeSet<(std::cmp::Reverse<usize>, usize)> =
            (0..n).map(|v| (std::cmp::Reverse(0), v)).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(&(w, v)) = queue.iter().next() {
            queue.remove(&(w, v));
            done[v] = true;
            order.push(v);
            for &u in &self.adj[v] {
                if !done[u] {
                    queue.remove(&(std::cmp::Reverse(weight[u]), u));
                    weight[u] += 1;
                    queue.insert((std::cmp::Reverse(weight[u]), u));
                }
            }
        }
        order.reverse();
        order
    }

    fn is_perfect_elimination(&self, order: &[usize]) -> bool {
        let pos = positions(order);
        for &v in order {
            let later: Vec<usize> = self.adj[v].iter().copied().filter(|&u| pos[u] > pos[v]).collect();
            if let Some(&p) = later.iter().min_by_key(|&&u| pos[u]) {
                if later.iter().any(|&u| u != p && !self.has_edge(p, u)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_chordal(&self) -> bool {
        self.is_perfect_elimination(&self.mcs_order())
    }
}

fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Chordal extension strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionKind {
    /// Complete every connected component.
    Maximal,
    /// Greedy elimination of the node creating the fewest fill edges.
    MinFill,
    /// Greedy elimination of the node of smallest degree.
    MinDegree,
}

impl std::str::FromStr for ExtensionKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "maximal" => Ok(ExtensionKind::Maximal),
            "min-fill" => Ok(ExtensionKind::MinFill),
            "min-degree" => Ok(ExtensionKind::MinDegree),
            _ => Err(format!("unknown extension '{s}'")),
        }
    }
}

/// Maximal cliques of a chordal graph; each clique is sorted and the list is
/// in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CliqueSet {
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueSet {
    pub fn max_size(&self) -> usize {
        self.cliques.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

fn cliques_from_peo(g: &Graph, order: &[usize]) -> CliqueSet {
    let pos = positions(order);
    let n = order.len();
    let higher: Vec<Vec<usize>> = (0..n)
        .map(|v| g.adj[v].iter().copied().filter(|&u| pos[u] > pos[v]).collect())
        .collect();
    let mut maximal = vec![true; n];
    for v in 0..n {
        if let Some(&p) = higher[v].iter().min_by_key(|&&u| pos[u]) {
            if higher[v].len() == higher[p].len() + 1 {
                maximal[p] = false;
            }
        }
    }
    let mut cliques: Vec<Vec<usize>> = (0..n)
        .filter(|&v| maximal[v])
        .map(|v| {
            let mut c = higher[v].clone();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    cliques.sort();
    CliqueSet { cliques }
}

/// Enumerates the maximal cliques of a chordal graph.
pub fn maximal_cliques(g: &Graph) -> Result<CliqueSet, SparsityError> {
    let order = g.mcs_order();
    if !g.is_perfect_elimination(&order) {
        return Err(SparsityError::NotChordal);
    }
    Ok(cliques_from_peo(g, &order))
}

/// Returns a chordal supergraph of `g` and its maximal cliques.
pub fn chordal_extension(g: &Graph, kind: ExtensionKind) -> (Graph, CliqueSet) {
    match kind {
        ExtensionKind::Maximal => {
            let comps = g.components();
            let mut out = Graph::new(g.num_nodes());
            for c in &comps {
                for (i, &u) in c.iter().enumerate() {
                    for &v in &c[i + 1..] {
                        out.add_edge(u, v);
                    }
                }
            }
            let mut cliques = comps;
            cliques.sort();
            (out, CliqueSet { cliques })
        }
        ExtensionKind::MinFill | ExtensionKind::MinDegree => {
            let (filled, order) = greedy_elimination(g, kind == ExtensionKind::MinFill);
            let cliques = cliques_from_peo(&filled, &order);
            (filled, cliques)
        }
    }
}

fn fill_count(work: &[HashSet<usize>], v: usize) -> usize {
    let nb: Vec<usize> = work[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !work[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

/// Greedy elimination; ties go to the smallest node index.
fn greedy_elimination(g: &Graph, min_fill: bool) -> (Graph, Vec<usize>) {
    let n = g.num_nodes();
    let mut work: Vec<HashSet<usize>> = g.adj.iter().map(|s| s.iter().copied().collect()).collect();
    let mut out = g.clone();
    let score = |work: &[HashSet<usize>], v: usize| {
        if min_fill {
            fill_count(work, v)
        } else {
            work[v].len()
        }
    };
    let mut scores: Vec<usize> = (0..n).map(|v| score(&work, v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (scores[v], v)).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&(s, v)) = queue.iter().next() {
        queue.remove(&(s, v));
        order.push(v);
        let nb: Vec<usize> = work[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if work[a].insert(b) {
                    work[b].insert(a);
                    out.add_edge(a, b);
                }
            }
        }
        for &a in &nb {
            work[a].remove(&v);
        }
        work[v].clear();
        let mut affected: BTreeSet<usize> = nb.iter().copied().collect();
        if min_fill {
            for &a in &nb {
                affected.extend(work[a].iter().copied());
            }
        }
        for u in affected {
            let new = score(&work, u);
            if new != scores[u] && queue.remove(&(scores[u], u)) {
                scores[u] = new;
                queue.insert((new, u));
            }
        }
    }
    (out, order)
}
