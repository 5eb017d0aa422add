//! Block assembly for every relaxation family.

use std::collections::{HashMap, HashSet};

use crate::basis::{newton_chip, subset_basis, BasisError};
use crate::ncalg::{Canon, NcPoly, Word};
use crate::sparsity::{csp_graph, decompose_csp, half_degree, CspDecomposition, IterState, TsSetup};

use super::{BlockEntry, MomentBlock, MomentSdp, Mode, Problem, RelaxError, RelaxationSpec, Sparsity, TsOrder};

/// A block to emit: constraint index (0 for the moment matrix) and the basis
/// words indexing its rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockPlan {
    pub constraint: usize,
    pub nodes: Vec<Word>,
}

/// An assembled relaxation together with the data that produced it.
#[derive(Clone, Debug)]
pub struct Relaxation {
    pub sdp: MomentSdp,
    pub dhat: usize,
    /// Sparse order reached (0 for dense and correlative-only relaxations).
    pub k: usize,
    pub state: Option<IterState>,
    pub csp: Option<CspDecomposition>,
}

/// Builds the moment SDP for the given block layout. Blocks with the same
/// constraint and node list are emitted once.
pub fn assemble_blocks(problem: &Problem, canon: Canon, plans: &[BlockPlan]) -> MomentSdp {
    let mut polys = vec![NcPoly::constant(problem.n, 1.0)];
    polys.extend(problem.constraints.iter().cloned());
    let mut index: HashMap<Word, usize> = HashMap::new();
    let mut vars = vec![Word::one()];
    index.insert(Word::one(), 0);
    let mut var_of = |w: Word, index: &mut HashMap<Word, usize>| -> usize {
        if let Some(&i) = index.get(&w) {
            return i;
        }
        vars.push(w.clone());
        index.insert(w, vars.len() - 1);
        vars.len() - 1
    };
    let mut seen = HashSet::new();
    let mut blocks = Vec::new();
    for plan in plans {
        if !seen.insert(plan.clone()) {
            continue;
        }
        let g: Vec<(Word, f64)> = polys[plan.constraint].terms().map(|(w, c)| (w.clone(), c)).collect();
        let mut entries = Vec::new();
        let mut acc: Vec<(usize, f64)> = Vec::new();
        for (a, u) in plan.nodes.iter().enumerate() {
            for (b, v) in plan.nodes.iter().enumerate().skip(a) {
                acc.clear();
                for (w, c) in &g {
                    let var = var_of(canon.apply(&u.sandwich(w, v)), &mut index);
                    match acc.iter_mut().find(|(i, _)| *i == var) {
                        Some(e) => e.1 += c,
                        None => acc.push((var, *c)),
                    }
                }
                acc.sort_by_key(|e| e.0);
                for &(var, coef) in &acc {
                    if coef.abs() >= crate::ncalg::COEF_EPS {
                        entries.push(BlockEntry { row: a as u32, col: b as u32, var: var as u32, coef });
                    }
                }
            }
        }
        blocks.push(MomentBlock { constraint: plan.constraint, nodes: plan.nodes.clone(), entries });
    }
    let objective = problem
        .f
        .canonicalize(canon)
        .terms()
        .map(|(w, c)| (var_of(w.clone(), &mut index), c))
        .collect();
    MomentSdp { canon, vars, blocks, objective, polys }
}

fn check_symmetric(problem: &Problem) -> Result<(), RelaxError> {
    if !problem.f.is_symmetric() {
        return Err(BasisError::NotSymmetric.into());
    }
    for (j, g) in problem.constraints.iter().enumerate() {
        if !g.is_symmetric() {
            return Err(RelaxError::ConstraintNotSymmetric(j + 1));
        }
    }
    Ok(())
}

/// One plan per maximal clique of every graph in `state`.
pub fn plans_from_state(state: &IterState) -> Vec<BlockPlan> {
    let mut plans = Vec::new();
    for b in &state.blocks {
        for c in &b.cliques.cliques {
            plans.push(BlockPlan {
                constraint: b.constraint,
                nodes: c.iter().map(|&i| b.graph.nodes.get(i).clone()).collect(),
            });
        }
    }
    plans
}

fn advance(state: IterState, spec: &RelaxationSpec) -> Result<IterState, RelaxError> {
    match spec.ts_order {
        TsOrder::Fixed(0) => Err(RelaxError::ZeroSparseOrder),
        TsOrder::Fixed(k) => Ok(state.run_to(k, spec.extension)),
        TsOrder::Stabilize => Ok(state.run_to_stable(spec.extension)),
    }
}

/// Builds the relaxation selected by `spec`.
///
/// Unconstrained eigenvalue problems use the Newton chip basis in the dense and
/// term-sparse families; everything else works on standard bases over the
/// variable cliques.
pub fn relax(problem: &Problem, spec: &RelaxationSpec) -> Result<Relaxation, RelaxError> {
    check_symmetric(problem)?;
    let canon = spec.mode.canon();
    let min = problem.min_order(spec.mode);
    let dhat = spec.order.unwrap_or(min);
    if dhat < min {
        return Err(RelaxError::OrderTooLow { given: dhat, min });
    }
    let chip_path = problem.constraints.is_empty()
        && spec.mode == Mode::Eigen
        && matches!(spec.sparsity, Sparsity::Dense | Sparsity::Ts);
    if chip_path {
        let b = newton_chip(&problem.f)?;
        return Ok(match spec.sparsity {
            Sparsity::Dense => {
                let plans = [BlockPlan { constraint: 0, nodes: b.words().to_vec() }];
                let sdp = assemble_blocks(problem, canon, &plans);
                Relaxation { sdp, dhat, k: 0, state: None, csp: None }
            }
            _ => {
                let state = advance(IterState::unconstrained(&problem.f, b, canon), spec)?;
                let sdp = assemble_blocks(problem, canon, &plans_from_state(&state));
                Relaxation { sdp, dhat, k: state.k, state: Some(state), csp: None }
            }
        });
    }
    let csp = if spec.sparsity.uses_cliques() {
        let g = csp_graph(problem.n, &problem.f, &problem.constraints);
        decompose_csp(&g, &problem.constraints, spec.csp_extension)?
    } else {
        CspDecomposition::single(problem.n, problem.constraints.len())
    };
    if spec.sparsity.uses_terms() {
        let setup = TsSetup {
            canon,
            f: &problem.f,
            constraints: &problem.constraints,
            dhat,
            var_cliques: &csp.cliques,
            groups: &csp.groups,
        };
        let state = advance(IterState::constrained(&setup), spec)?;
        let sdp = assemble_blocks(problem, canon, &plans_from_state(&state));
        let csp = spec.sparsity.uses_cliques().then_some(csp);
        return Ok(Relaxation { sdp, dhat, k: state.k, state: Some(state), csp });
    }
    let mut plans = Vec::new();
    for (vars, group) in csp.cliques.iter().zip(&csp.groups) {
        plans.push(BlockPlan { constraint: 0, nodes: subset_basis(vars, dhat).words().to_vec() });
        for &j in group {
            let dj = half_degree(&problem.constraints[j - 1]);
            plans.push(BlockPlan { constraint: j, nodes: subset_basis(vars, dhat - dj).words().to_vec() });
        }
    }
    let sdp = assemble_blocks(problem, canon, &plans);
    let csp = spec.sparsity.uses_cliques().then_some(csp);
    Ok(Relaxation { sdp, dhat, k: 0, state: None, csp })
}
