//! Correlative sparsity: variable co-occurrence graph and its clique decomposition.

use crate::ncalg::NcPoly;

use super::graph::{chordal_extension, ExtensionKind, Graph};
use super::SparsityError;

/// Variable cliques and the constraints assigned to each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspDecomposition {
    /// Sorted 1-based variable indices per clique.
    pub cliques: Vec<Vec<u16>>,
    /// 1-based constraint indices per clique.
    pub groups: Vec<Vec<usize>>,
}

impl CspDecomposition {
    /// One clique holding every variable and every constraint.
    pub fn single(n: usize, m: usize) -> Self {
        CspDecomposition { cliques: vec![(1..=n as u16).collect()], groups: vec![(1..=m).collect()] }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cliques.iter().map(Vec::len).collect()
    }
}

/// Graph on variables `0..n` (node `i` is `X_{i+1}`): linked when they share
/// a monomial of `f` or appear together in one constraint.
pub fn csp_graph(n: usize, f: &NcPoly, constraints: &[NcPoly]) -> Graph {
    let mut g = Graph::new(n);
    let link_all = |g: &mut Graph, vars: &[u16]| {
        for (a, &x) in vars.iter().enumerate() {
            for &y in &vars[a + 1..] {
                g.add_edge(x as usize - 1, y as usize - 1);
            }
        }
    };
    for w in f.support() {
        link_all(&mut g, &w.variables());
    }
    for c in constraints {
        link_all(&mut g, &c.variables());
    }
    g
}

/// Cliques of a chordal extension of the csp graph, with each constraint sent
/// to the first clique containing its variables.
pub fn decompose_csp(
    g: &Graph,
    constraints: &[NcPoly],
    ext: ExtensionKind,
) -> Result<CspDecomposition, SparsityError> {
    let (_, cs) = chordal_extension(g, ext);
    let cliques: Vec<Vec<u16>> = cs
        .cliques
        .iter()
        .map(|c| c.iter().map(|&i| i as u16 + 1).collect())
        .collect();
    let mut groups = vec![Vec::new(); cliques.len()];
    for (j, c) in constraints.iter().enumerate() {
        let vars = c.variables();
        let l = cliques
            .iter()
            .position(|cl| vars.iter().all(|v| cl.binary_search(v).is_ok()))
            .ok_or(SparsityError::UncoveredConstraint(j + 1))?;
        groups[l].push(j + 1);
    }
    Ok(CspDecomposition { cliques, groups })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_poly;

    #[test]
    fn single_monomial_edge() {
        let f = parse_poly("x1x2 + x3^2").unwrap();
        let g = csp_graph(3, &f, &[]);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn coupled_monomial_complete() {
        let f = parse_poly("x1x2x3x4").unwrap();
        assert_eq!(csp_graph(4, &f, &[]).num_edges(), 6);
    }

    #[test]
    fn constraint_assignment() {
        let f = parse_poly("x1x2 + x2x1 + x2x3 + x3x2").unwrap();
        let s = [parse_poly("1 - x2^2 - x3^2").unwrap(), parse_poly("1 - x1^2").unwrap()];
        let g = csp_graph(3, &f, &s);
        let d = decompose_csp(&g, &s, ExtensionKind::MinFill).unwrap();
        assert_eq!(d.cliques, vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(d.groups, vec![vec![2], vec![1]]);
    }

    #[test]
    fn uncovered_constraint() {
        let f = parse_poly("x1^2 + x2^2").unwrap();
        let s = [parse_poly("1 - x1x2 - x2x1").unwrap()];
        let g = csp_graph(2, &f, &[]);
        assert_eq!(decompose_csp(&g, &s, ExtensionKind::MinFill), Err(SparsityError::UncoveredConstraint(1)));
    }

    #[test]
    fn single_clique() {
        let f = parse_poly("x1x2x3").unwrap();
        let s = [parse_poly("1 - x1^2").unwrap()];
        let d = decompose_csp(&csp_graph(3, &f.symmetrize(), &s), &s, ExtensionKind::MinFill).unwrap();
        assert_eq!(d, CspDecomposition::single(3, 1));
    }
}
