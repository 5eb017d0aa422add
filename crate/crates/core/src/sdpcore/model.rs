//! Block LMI data: minimize `offset + c'y` subject to
//! `F0 + sum_i y_i F_i >= 0` on every block.

use std::collections::BTreeMap;

use crate::relax::MomentSdp;

/// One upper-triangle entry (`row <= col`) of a symmetric block matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SdpEntry {
    pub block: u32,
    pub row: u32,
    pub col: u32,
    pub val: f64,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct BlockSdp {
    pub block_sizes: Vec<usize>,
    /// Entries of `F0`.
    pub constant: Vec<SdpEntry>,
    /// Entries of `F_i`, one list per free variable.
    pub columns: Vec<Vec<SdpEntry>>,
    /// Objective vector `c`, same length as `columns`.
    pub objective: Vec<f64>,
    /// Constant added to `c'y`; the SDP data cannot carry it.
    pub offset: f64,
}

impl BlockSdp {
    pub fn num_vars(&self) -> usize {
        self.columns.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.block_sizes.len()
    }

    /// `F0 + sum_i y_i F_i` for block `k`, as a dense row-major matrix.
    pub fn slack(&self, k: usize, y: &[f64]) -> Vec<f64> {
        let n = self.block_sizes[k];
        let mut m = vec![0.0; n * n];
        let mut put = |e: &SdpEntry, s: f64| {
            if e.block as usize == k {
                let (r, c) = (e.row as usize, e.col as usize);
                m[r * n + c] += s * e.val;
                if r != c {
                    m[c * n + r] += s * e.val;
                }
            }
        };
        for e in &self.constant {
            put(e, 1.0);
        }
        for (col, &yi) in self.columns.iter().zip(y) {
            for e in col {
                put(e, yi);
            }
        }
        m
    }

    pub fn objective_value(&self, y: &[f64]) -> f64 {
        self.offset + self.objective.iter().zip(y).map(|(c, v)| c * v).sum::<f64>()
    }
}

/// Substitutes `y_1 = 1` into the moment SDP. Moment variable `i >= 1`
/// becomes free variable `i - 1`; block order is preserved.
pub fn to_block_sdp(sdp: &MomentSdp) -> BlockSdp {
    let m = sdp.vars.len() - 1;
    let mut constant = Vec::new();
    let mut columns = vec![Vec::new(); m];
    for (k, b) in sdp.blocks.iter().enumerate() {
        for e in &b.entries {
            let entry = SdpEntry { block: k as u32, row: e.row, col: e.col, val: e.coef };
            match e.var {
                0 => constant.push(entry),
                v => columns[v as usize - 1].push(entry),
            }
        }
    }
    let mut objective = vec![0.0; m];
    let mut offset = 0.0;
    for &(v, c) in &sdp.objective {
        match v {
            0 => offset += c,
            v => objective[v - 1] += c,
        }
    }
    BlockSdp {
        block_sizes: sdp.blocks.iter().map(|b| b.size()).collect(),
        constant,
        columns,
        objective,
        offset,
    }
}

/// Sums duplicate positions within each matrix and drops zeros.
pub(crate) fn merge_entries(entries: &[SdpEntry]) -> Vec<SdpEntry> {
    let mut acc: BTreeMap<(u32, u32, u32), f64> = BTreeMap::new();
    for e in entries {
        let (r, c) = if e.row <= e.col { (e.row, e.col) } else { (e.col, e.row) };
        *acc.entry((e.block, r, c)).or_insert(0.0) += e.val;
    }
    acc.into_iter()
        .filter(|(_, v)| *v != 0.0)
        .map(|((block, row, col), val)| SdpEntry { block, row, col, val })
        .collect()
}
