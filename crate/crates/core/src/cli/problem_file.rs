//! Problem files.
//!
//! ```text
//! # minimize f subject to g_j >= 0
//! [objective]
//! 2 - x1^2 + x1 x2^2 x1
//!   - x2^2
//! [constraints]
//! 4 - x1^2 - x2^2
//! x1x2 + x2x1 - 2
//! ```
//!
//! The objective may span several lines. Each nonblank line of the
//! constraints section is one constraint. A file without section headers is
//! read as an objective alone.

use crate::ncalg::{parse_poly_at, ParseError};
use crate::relax::Problem;

#[derive(PartialEq)]
enum Section {
    Objective,
    Constraints,
}

fn blank(line: &str) -> bool {
    line.split('#').next().unwrap_or("").trim().is_empty()
}

pub fn parse_problem(src: &str) -> Result<Problem, ParseError> {
    let mut section = Section::Objective;
    let mut objective = String::new();
    let mut objective_start = None;
    let mut constraints = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let lineno = i + 1;
        let head = raw.trim();
        if head.starts_with('[') {
            section = match head.to_ascii_lowercase().as_str() {
                "[objective]" => Section::Objective,
                "[constraints]" => Section::Constraints,
                _ => return Err(ParseError { line: lineno, col: 1, msg: format!("unknown section {head}") }),
            };
            continue;
        }
        if blank(raw) {
            if section == Section::Objective && objective_start.is_some() {
                objective.push('\n');
            }
            continue;
        }
        match section {
            Section::Objective => {
                objective_start.get_or_insert(lineno);
                objective.push_str(raw);
                objective.push('\n');
            }
            Section::Constraints => constraints.push(parse_poly_at(raw, lineno)?),
        }
    }
    let Some(start) = objective_start else {
        return Err(ParseError { line: src.lines().count().max(1), col: 1, msg: "missing objective".into() });
    };
    let f = parse_poly_at(&objective, start)?;
    Ok(Problem::new(f, constraints))
}

/// Renders `problem` in the file format.
pub fn format_problem(problem: &Problem) -> String {
    let mut out = format!("[objective]\n{}\n", problem.f);
    if !problem.constraints.is_empty() {
        out.push_str("[constraints]\n");
        for g in &problem.constraints {
            out.push_str(&format!("{g}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_poly;

    #[test]
    fn sections_and_continuation() {
        let src = "# ex\n[objective]\n2 - x1^2 + x1x2^2x1\n  - x2^2\n\n[constraints]\n4 - x1^2 - x2^2\n# skip\nx1x2 + x2x1 - 2\n";
        let p = parse_problem(src).unwrap();
        assert_eq!(p.f, parse_poly("2 - x1^2 + x1x2^2x1 - x2^2").unwrap());
        assert_eq!(p.constraints.len(), 2);
        assert_eq!(p.n, 2);
        assert_eq!(parse_problem(&format_problem(&p)).unwrap(), p);
    }

    #[test]
    fn bare_objective() {
        let p = parse_problem("1 + x1^2\n").unwrap();
        assert!(p.constraints.is_empty());
        assert_eq!(p.f.len(), 2);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_problem("[objective]\nx1\n[constraints]\n1 - x1^^2\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert_eq!(parse_problem("[objective]\n\n").unwrap_err().msg, "missing objective");
        assert_eq!(parse_problem("[goal]\n").unwrap_err().line, 1);
    }
}
