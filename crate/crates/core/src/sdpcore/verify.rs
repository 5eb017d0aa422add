//! Numerical check of the sum-of-hermitian-squares certificate.

use crate::ncalg::NcPoly;
use crate::relax::MomentSdp;

use super::SdpSolution;

/// Rebuilds `sum_k sum_{a,b} Q_k[a,b] star(u_a) g_k u_b + lambda` from the dual
/// blocks and returns the largest coefficient deviation from `f`, after
/// mapping words to their moment classes. `lambda` is the dual objective.
pub fn verify_sohs(f: &NcPoly, sdp: &MomentSdp, sol: &SdpSolution) -> f64 {
    let n = f.n();
    let mut rec = NcPoly::constant(n, sol.dual_objective);
    for (block, q) in sdp.blocks.iter().zip(&sol.dual_blocks) {
        let g = &sdp.polys[block.constraint];
        for (a, u) in block.nodes.iter().enumerate() {
            for (b, v) in block.nodes.iter().enumerate() {
                let coef = q[(a, b)];
                if coef == 0.0 {
                    continue;
                }
                for (w, c) in g.terms() {
                    rec.add_term(u.sandwich(w, v), coef * c);
                }
            }
        }
    }
    let diff = (&rec - f).canonicalize(sdp.canon);
    diff.max_abs_coef()
}

