//! SDPA sparse (`.dat-s`) export.
//!
//! SDPA minimizes `c'x` subject to `sum x_i F_i - F_0 >= 0`, so the objective
//! line is `c` and the constant matrix is written as `-F0`. A nonzero offset
//! is recorded in a leading comment line.

use std::io::{self, Write};

use super::model::{merge_entries, BlockSdp};

pub fn write_sdpa<W: Write>(sdp: &BlockSdp, mut out: W) -> io::Result<()> {
    if sdp.offset != 0.0 {
        writeln!(out, "* objective offset {:.16e}", sdp.offset)?;
    }
    writeln!(out, "{}", sdp.num_vars())?;
    writeln!(out, "{}", sdp.num_blocks())?;
    let sizes: Vec<String> = sdp.block_sizes.iter().map(usize::to_string).collect();
    writeln!(out, "{}", sizes.join(" "))?;
    let c: Vec<String> = sdp.objective.iter().map(|v| format!("{v:.16e}")).collect();
    writeln!(out, "{}", c.join(" "))?;
    let mut emit = |mat: usize, entries: &[super::SdpEntry], sign: f64| -> io::Result<()> {
        for e in merge_entries(entries) {
            writeln!(out, "{mat} {} {} {} {:.16e}", e.block + 1, e.row + 1, e.col + 1, sign * e.val)?;
        }
        Ok(())
    };
    emit(0, &sdp.constant, -1.0)?;
    for (i, col) in sdp.columns.iter().enumerate() {
        emit(i + 1, col, 1.0)?;
    }
    Ok(())
}

pub fn sdpa_string(sdp: &BlockSdp) -> String {
    let mut buf = Vec::new();
    write_sdpa(sdp, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}
