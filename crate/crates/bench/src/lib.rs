//! Fixed inputs for the benchmarks.

use monoreg::format::parse_generators;
use monoreg::verifier::rp2_ideal;
use monoreg::MonomialIdeal;

/// Named ideals of increasing size, all weakly stable except `rp2`.
pub fn fixtures() -> Vec<(&'static str, MonomialIdeal)> {
    let inline = [
        ("example", "x1^2, x1*x2, x1*x3, x2^2", 3),
        ("m2-cubed", "x1^3, x1^2*x2, x1*x2^2, x2^3", 2),
        ("lex-4", "x1^2, x1*x2, x1*x3, x1*x4^2, x2^3, x2^2*x3", 4),
        ("maximal-4", "x1, x2, x3, x4", 4),
    ];
    let mut out: Vec<(&'static str, MonomialIdeal)> = inline
        .iter()
        .map(|&(name, src, n)| (name, parse_generators(src, Some(n)).unwrap()))
        .collect();
    out.push(("rp2", rp2_ideal()));
    out
}
