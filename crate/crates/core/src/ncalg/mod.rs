//! Free-algebra arithmetic: words, polynomials, involution and cyclic canonical forms.

mod parse;
mod poly;
mod word;

pub use parse::{parse_poly, parse_poly_at, ParseError};
pub use poly::{Canon, NcPoly, COEF_EPS};
pub use word::Word;
