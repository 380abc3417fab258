//! Reference tables used by the checks.
//!
//! Signed bivector strings such as `"+12-34"` denote `e_1e_2 − e_3e_4`.
//! Matrices are row-major; the σ* and τ* arrays carry an implicit `½`.

use crate::error::{Error, Result};

/// Parses `"+12-34+56"` into `[(1, 1, 2), (-1, 3, 4), (1, 5, 6)]`.
pub fn parse_signed_pairs(text: &str) -> Result<Vec<(i8, usize, usize)>> {
    let bytes = text.as_bytes();
    if !bytes.len().is_multiple_of(3) {
        return Err(Error::Parse(format!("malformed pair list {text:?}")));
    }
    bytes
        .chunks(3)
        .map(|chunk| {
            let sign = match chunk[0] {
                b'+' => 1,
                b'-' => -1,
                _ => return Err(Error::Parse(format!("missing sign in {text:?}"))),
            };
            let digit = |b: u8| {
                if b.is_ascii_digit() && b != b'0' {
                    Ok((b - b'0') as usize)
                } else {
                    Err(Error::Parse(format!("bad index in {text:?}")))
                }
            };
            Ok((sign, digit(chunk[1])?, digit(chunk[2])?))
        })
        .collect()
}

/// Parses a table cell such as `"-3"` into `(−1, 3)`.
pub fn parse_signed_index(text: &str) -> Result<(i8, usize)> {
    let (sign, rest) = match text.as_bytes().first() {
        Some(b'+') => (1, &text[1..]),
        Some(b'-') => (-1, &text[1..]),
        _ => return Err(Error::Parse(format!("missing sign in {text:?}"))),
    };
    let index = rest.parse().map_err(|_| Error::Parse(format!("bad index in {text:?}")))?;
    Ok((sign, index))
}

/// Printed `κ₆(e₁)` and `κ₆(e₂)`: the same 2×2 block, entries `(re, im)`,
/// repeated four times along the diagonal.
pub const KAPPA6_E1_BLOCK: [[(i64, i64); 2]; 2] = [[(0, 0), (0, 1)], [(0, 1), (0, 0)]];
pub const KAPPA6_E2_BLOCK: [[(i64, i64); 2]; 2] = [[(0, 0), (-1, 0)], [(1, 0), (0, 0)]];

/// Diagonal of the printed `κ₆(e₁e₂)`.
pub const KAPPA6_E12_DIAGONAL: [(i64, i64); 8] = [(0, 1), (0, -1), (0, 1), (0, -1), (0, 1), (0, -1), (0, 1), (0, -1)];

/// Diagonal of the printed `λ₆(e₁e₂)`.
pub const LAMBDA6_E12_DIAGONAL: [i64; 6] = [-1, -1, 1, 1, 1, 1];

/// Half-spinor real basis used for triality: `(index, i-exponent)` pairs,
/// each vector being `i^{e₁}u_{a₁} + i^{e₂}u_{a₂}`.
pub const TRIALITY_PLUS_BASIS: [[(u64, u8); 2]; 8] = [
    [(0, 0), (15, 2)],
    [(0, 1), (15, 1)],
    [(3, 0), (12, 0)],
    [(3, 3), (12, 1)],
    [(5, 2), (10, 0)],
    [(5, 1), (10, 1)],
    [(6, 0), (9, 0)],
    [(6, 1), (9, 3)],
];

/// Diagonal of the general Spin(6) torus element: row `a` carries
/// `e^{i(s₁φ₁ + s₂φ₂ + s₃φ₃)/2}`.
pub const TORUS_PHASES: [[i8; 3]; 8] = [
    [1, 1, 1],
    [-1, 1, 1],
    [1, -1, 1],
    [-1, -1, 1],
    [1, 1, -1],
    [-1, 1, -1],
    [1, -1, -1],
    [-1, -1, -1],
];

/// Block position of the rotation in `κ₈⁻(exp(t(e₂e₃ + e₆e₇)))`; the
/// remaining diagonal entries are 1.
pub const G2_ROTATION_BLOCKS: [(usize, usize); 2] = [(1, 2), (5, 6)];

/// Signs `s_i` of the octonion identification `v_i ↦ s_i ê_i`.
pub const OCTONION_IDENTIFICATION: [i8; 8] = [1, -1, -1, 1, 1, -1, -1, -1];

pub const KAPPA_MINUS_E: [&str; 28] = [
    "-12-34-56-78",
    "-13+24-57+68",
    "-14-23+58+67",
    "-15+26+37-48",
    "-16-25-38-47",
    "-17+28-35+46",
    "-18-27+36+45",
    "+14+23+58+67",
    "-13+24+57-68",
    "+16+25-38-47",
    "-15+26-37+48",
    "+18+27+36+45",
    "-17+28+35-46",
    "+12+34-56-78",
    "+17+28+35+46",
    "-18+27+36-45",
    "-15-26+37+48",
    "+16-25+38-47",
    "-18+27-36+45",
    "-17-28+35+46",
    "+16-25-38+47",
    "+15+26+37+48",
    "+12-34+56-78",
    "+13+24+57+68",
    "-14+23+58-67",
    "-14+23-58+67",
    "-13-24+57+68",
    "+12-34-56+78",
];

/// As printed; entry 8 (`e₂e₄`) repeats entry 7.
pub const KAPPA_MINUS_LAMBDA: [&str; 28] = [
    "-12-34-56-78",
    "-13+24-57+68",
    "-14-23+58+67",
    "-15+26+37-48",
    "-16-25-38-47",
    "-17+28-35+46",
    "-18-27+36+45",
    "+14+23+58+67",
    "+14+23+58+67",
    "+16+25-38-47",
    "-15+26-37+48",
    "+18+27+36+45",
    "-17+28+35-46",
    "+12+34-56-78",
    "+17+28+35+46",
    "-18+27+36-45",
    "-15-26+37+48",
    "+16-25+38-47",
    "-18+27-36+45",
    "-17-28+35+46",
    "+16-25-38+47",
    "+15+26+37+48",
    "+12-34+56-78",
    "+13+24+57+68",
    "-14+23+58-67",
    "-14+23-58+67",
    "-13-24+57+68",
    "+12-34-56+78",
];

pub const KAPPA_PLUS_E: [&str; 28] = [
    "+12+34+56+78",
    "+13-24+57-68",
    "+14+23-58-67",
    "+15-26-37+48",
    "+16+25+38+47",
    "+17-28+35-46",
    "+18+27-36-45",
    "+14+23+58+67",
    "-13+24+57-68",
    "+16+25-38-47",
    "-15+26-37+48",
    "+18+27+36+45",
    "-17+28+35-46",
    "+12+34-56-78",
    "+17+28+35+46",
    "-18+27+36-45",
    "-15-26+37+48",
    "+16-25+38-47",
    "-18+27-36+45",
    "-17-28+35+46",
    "+16-25-38+47",
    "+15+26+37+48",
    "+12-34+56-78",
    "+13+24+57+68",
    "-14+23+58-67",
    "-14+23-58+67",
    "-13-24+57+68",
    "+12-34-56+78",
];

pub const KAPPA_PLUS_LAMBDA: [&str; 28] = [
    "+12+34+56+78",
    "+13-24+57-68",
    "+14+23-58-67",
    "+15-26-37+48",
    "+16+25+38+47",
    "+17-28+35-46",
    "+18+27-36-45",
    "+14+23+58+67",
    "-13+24+57-68",
    "+16+25-38-47",
    "-15+26-37+48",
    "+18+27+36+45",
    "-17+28+35-46",
    "+12+34-56-78",
    "+17+28+35+46",
    "-18+27+36-45",
    "-15-26+37+48",
    "+16-25+38-47",
    "-18+27-36+45",
    "-17-28+35+46",
    "+16-25-38+47",
    "+15+26+37+48",
    "+12-34+56-78",
    "+13+24+57+68",
    "-14+23+58-67",
    "-14+23-58+67",
    "-13-24+57+68",
    "+12-34-56+78",
];

pub const SIGMA_STAR_IMAGES: [&str; 28] = [
    "-12-34-56-78",
    "-13+24-57+68",
    "-14-23+58+67",
    "-15+26+37-48",
    "-16-25-38-47",
    "-17+28-35+46",
    "-18-27+36+45",
    "+14+23+58+67",
    "-13+24+57-68",
    "+16+25-38-47",
    "-15+26-37+48",
    "+18+27+36+45",
    "-17+28+35-46",
    "+12+34-56-78",
    "+17+28+35+46",
    "-18+27+36-45",
    "-15-26+37+48",
    "+16-25+38-47",
    "-18+27-36+45",
    "-17-28+35+46",
    "+16-25-38+47",
    "+15+26+37+48",
    "+12-34+56-78",
    "+13+24+57+68",
    "-14+23+58-67",
    "-14+23-58+67",
    "-13-24+57+68",
    "+12-34-56+78",
];

/// Column `j` is `2σ*(e_ie_j)` for the `j`-th pair in lexicographic order.
pub const SIGMA_STAR_MATRIX: [[i8; 28]; 28] = [
    [-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
    [0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0],
    [0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
    [0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1],
];

pub const TAU_STAR_IMAGES: [&str; 28] = [
    "+12+34+56+78",
    "+13-24+57-68",
    "+14+23-58-67",
    "+15-26-37+48",
    "+16+25+38+47",
    "+17-28+35-46",
    "+18+27-36-45",
    "+14+23+58+67",
    "-13+24+57-68",
    "+16+25-38-47",
    "-15+26-37+48",
    "+18+27+36+45",
    "-17+28+35-46",
    "+12+34-56-78",
    "+17+28+35+46",
    "-18+27+36-45",
    "-15-26+37+48",
    "+16-25+38-47",
    "-18+27-36+45",
    "-17-28+35+46",
    "+16-25-38+47",
    "+15+26+37+48",
    "+12-34+56-78",
    "+13+24+57+68",
    "-14+23+58-67",
    "-14+23-58+67",
    "-13-24+57+68",
    "+12-34-56+78",
];

pub const TAU_STAR_MATRIX: [[i8; 28]; 28] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
    [0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
    [0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1],
];

pub const G2_GENERATORS: [&str; 14] = [
    "+23+67",
    "-24+68",
    "-34+78",
    "-26+37",
    "-25+38",
    "+27+45",
    "-28+46",
    "-25+47",
    "+26+48",
    "-34+56",
    "+24+57",
    "+23+58",
    "+28+35",
    "+27+36",
];

/// `(real part, sign of the i√3 term, pair)` for the `e^{2πi/3}` eigenvectors.
pub const SIGMA_EIGEN_OMEGA: [(&str, i8, (usize, usize)); 7] = [
    ("+68-57+24", 1, (1, 3)),
    ("+47+38+25", -1, (1, 6)),
    ("+46-35+28", 1, (1, 7)),
    ("+78+56+34", -1, (1, 2)),
    ("+45+36-27", 1, (1, 8)),
    ("+48-37-26", -1, (1, 5)),
    ("+67+58-23", 1, (1, 4)),
];

pub const SIGMA_EIGEN_OMEGA_BAR: [(&str, i8, (usize, usize)); 7] = [
    ("+68-57+24", -1, (1, 3)),
    ("+47+38+25", 1, (1, 6)),
    ("+46-35+28", -1, (1, 7)),
    ("+78+56+34", 1, (1, 2)),
    ("+45+36-27", -1, (1, 8)),
    ("+48-37-26", 1, (1, 5)),
    ("+67+58-23", -1, (1, 4)),
];

pub const TAU_EIGEN_PLUS: [&str; 21] = [
    "+14+23",
    "-13+24",
    "+16+25",
    "-15+26",
    "+18+27",
    "-17+28",
    "+12+34",
    "+17+35",
    "-18+36",
    "-15+37",
    "+16+38",
    "-18+45",
    "-17+46",
    "+16+47",
    "+15+48",
    "+12+56",
    "+13+57",
    "-14+58",
    "-14+67",
    "-13+68",
    "+12+78",
];

pub const TAU_EIGEN_MINUS: [&str; 7] = [
    "+13+24-57+68",
    "+14-23+58+67",
    "+17+28-35+46",
    "+18-27+36+45",
    "-16+25+38+47",
    "-12+34+56+78",
    "-15-26-37+48",
];

/// Cell `(i, j)` lists signed indices `k` of `±α_k`; the displayed matrix is
/// twice the cellwise sums.
pub const G2_ACTION_DISPLAY: [[&[i8]; 8]; 8] = [
    [&[], &[], &[], &[], &[], &[], &[], &[]],
    [&[], &[], &[1, 12], &[-2, 11], &[-5, -8], &[-4, 9], &[6, 14], &[-7, 13]],
    [&[], &[-1, -12], &[], &[-3, -10], &[13], &[14], &[4], &[5]],
    [&[], &[2, -11], &[3, 10], &[], &[6], &[7], &[8], &[9]],
    [&[], &[5, 8], &[-13], &[-6], &[], &[10], &[11], &[12]],
    [&[], &[4, -9], &[-14], &[-7], &[-10], &[], &[1], &[2]],
    [&[], &[-6, -14], &[-4], &[-8], &[-11], &[-1], &[], &[3]],
    [&[], &[7, -13], &[-5], &[-9], &[-12], &[-2], &[-3], &[]],
];

pub const TWO_FORMS: [((usize, usize), &str); 21] = [
    ((2, 3), "+14+23+58+67"),
    ((2, 4), "-13+24+57-68"),
    ((2, 5), "+16+25-38-47"),
    ((2, 6), "-15+26-37+48"),
    ((2, 7), "+18+27+36+45"),
    ((2, 8), "-17+28+35-46"),
    ((3, 4), "+12+34-56-78"),
    ((3, 5), "+17+28+35+46"),
    ((3, 6), "-18+27+36-45"),
    ((3, 7), "-15-26+37+48"),
    ((3, 8), "+16-25+38-47"),
    ((4, 5), "-18+27-36+45"),
    ((4, 6), "-17-28+35+46"),
    ((4, 7), "+16-25-38+47"),
    ((4, 8), "+15+26+37+48"),
    ((5, 6), "+12-34+56-78"),
    ((5, 7), "+13+24+57+68"),
    ((5, 8), "-14+23+58-67"),
    ((6, 7), "-14+23-58+67"),
    ((6, 8), "-13-24+57+68"),
    ((7, 8), "+12-34-56+78"),
];

/// Terms of `Ω/6` as printed, index order not normalized.
pub const OMEGA_TERMS: [(i8, [usize; 4]); 14] = [
    (-1, [1, 2, 3, 4]),
    (-1, [1, 2, 5, 6]),
    (1, [1, 7, 2, 8]),
    (-1, [1, 7, 3, 5]),
    (1, [1, 7, 4, 6]),
    (1, [1, 8, 3, 6]),
    (1, [1, 8, 4, 5]),
    (1, [2, 3, 5, 8]),
    (1, [2, 3, 6, 7]),
    (1, [2, 7, 4, 5]),
    (-1, [2, 8, 4, 6]),
    (-1, [3, 6, 4, 5]),
    (1, [3, 7, 4, 8]),
    (-1, [5, 6, 7, 8]),
];

/// Terms of `φ/6`.
pub const PHI_TERMS: [(i8, [usize; 3]); 7] = [
    (-1, [2, 3, 4]),
    (-1, [2, 5, 6]),
    (-1, [2, 7, 8]),
    (-1, [3, 5, 7]),
    (1, [4, 6, 7]),
    (1, [3, 6, 8]),
    (1, [4, 5, 8]),
];

pub const CLIFFORD_TABLE: [[&str; 8]; 8] = [
    ["+0", "+1", "+2", "+3", "+4", "+5", "+6", "+7"],
    ["-1", "+0", "+3", "-2", "+5", "-4", "-7", "+6"],
    ["-2", "-3", "+0", "+1", "+6", "+7", "-4", "-5"],
    ["+3", "-2", "+1", "-0", "-7", "+6", "-5", "+4"],
    ["+4", "+5", "+6", "+7", "-0", "-1", "-2", "-3"],
    ["-5", "+4", "-7", "+6", "-1", "+0", "-3", "+2"],
    ["-6", "+7", "+4", "-5", "-2", "+3", "+0", "-1"],
    ["-7", "-6", "+5", "+4", "-3", "-2", "+1", "+0"],
];

pub const OCTONION_TABLE: [[&str; 8]; 8] = [
    ["+0", "+1", "+2", "+3", "+4", "+5", "+6", "+7"],
    ["+1", "-0", "-3", "+2", "-5", "+4", "+7", "-6"],
    ["+2", "+3", "-0", "-1", "-6", "-7", "+4", "+5"],
    ["+3", "-2", "+1", "-0", "-7", "+6", "-5", "+4"],
    ["+4", "+5", "+6", "+7", "-0", "-1", "-2", "-3"],
    ["+5", "-4", "+7", "-6", "+1", "-0", "+3", "-2"],
    ["+6", "-7", "-4", "+5", "+2", "-3", "-0", "+1"],
    ["+7", "+6", "-5", "-4", "+3", "+2", "-1", "-0"],
];

/// `V_j` on S³¹ in spinor form: `(a, e, b)` means the coefficient of `u_a`
/// is `i^e (X_b + iY_b)`.
pub const S31_SPINOR_ROWS: [[(u64, u8, u64); 16]; 9] = [
    [(0, 1, 0), (3, 3, 3), (5, 3, 5), (6, 1, 6), (9, 3, 9), (10, 1, 10), (12, 1, 12), (15, 3, 15), (17, 3, 17), (18, 1, 18), (20, 1, 20), (23, 3, 23), (24, 1, 24), (27, 3, 27), (29, 3, 29), (30, 1, 30)],
    [(0, 2, 3), (3, 0, 0), (5, 0, 6), (6, 2, 5), (9, 0, 10), (10, 2, 9), (12, 2, 15), (15, 0, 12), (17, 0, 18), (18, 2, 17), (20, 2, 23), (23, 0, 20), (24, 2, 27), (27, 0, 24), (29, 0, 30), (30, 2, 29)],
    [(0, 3, 3), (3, 3, 0), (5, 1, 6), (6, 1, 5), (9, 1, 10), (10, 1, 9), (12, 3, 15), (15, 3, 12), (17, 1, 18), (18, 1, 17), (20, 3, 23), (23, 3, 20), (24, 3, 27), (27, 3, 24), (29, 1, 30), (30, 1, 29)],
    [(0, 0, 5), (3, 0, 6), (5, 2, 0), (6, 2, 3), (9, 2, 12), (10, 2, 15), (12, 0, 9), (15, 0, 10), (17, 2, 20), (18, 2, 23), (20, 0, 17), (23, 0, 18), (24, 0, 29), (27, 0, 30), (29, 2, 24), (30, 2, 27)],
    [(0, 1, 5), (3, 1, 6), (5, 1, 0), (6, 1, 3), (9, 3, 12), (10, 3, 15), (12, 3, 9), (15, 3, 10), (17, 3, 20), (18, 3, 23), (20, 3, 17), (23, 3, 18), (24, 1, 29), (27, 1, 30), (29, 1, 24), (30, 1, 27)],
    [(0, 2, 9), (3, 2, 10), (5, 2, 12), (6, 2, 15), (9, 0, 0), (10, 0, 3), (12, 0, 5), (15, 0, 6), (17, 0, 24), (18, 0, 27), (20, 0, 29), (23, 0, 30), (24, 2, 17), (27, 2, 18), (29, 2, 20), (30, 2, 23)],
    [(0, 3, 9), (3, 3, 10), (5, 3, 12), (6, 3, 15), (9, 3, 0), (10, 3, 3), (12, 3, 5), (15, 3, 6), (17, 1, 24), (18, 1, 27), (20, 1, 29), (23, 1, 30), (24, 1, 17), (27, 1, 18), (29, 1, 20), (30, 1, 23)],
    [(0, 0, 17), (3, 0, 18), (5, 0, 20), (6, 0, 23), (9, 0, 24), (10, 0, 27), (12, 0, 29), (15, 0, 30), (17, 2, 0), (18, 2, 3), (20, 2, 5), (23, 2, 6), (24, 2, 9), (27, 2, 10), (29, 2, 12), (30, 2, 15)],
    [(0, 1, 17), (3, 1, 18), (5, 1, 20), (6, 1, 23), (9, 1, 24), (10, 1, 27), (12, 1, 29), (15, 1, 30), (17, 1, 0), (18, 1, 3), (20, 1, 5), (23, 1, 6), (24, 1, 9), (27, 1, 10), (29, 1, 12), (30, 1, 15)],
];

/// As printed. Two cells disagree with the spinor form above: `V_5`
/// position 6 and `V_6` position 8 carry the opposite sign.
pub const S31_RELABELED_ROWS: [&str; 9] = [
    "(-v2, v1, v4, -v3, v6, -v5, -v8, v7, v10, -v9, -v12, v11, -v14, v13, v16, -v15, v18, -v17, -v20, v19, -v22, v21, v24, -v23, -v26, v25, v28, -v27, v30, -v29, -v32, v31)",
    "(-v3, -v4, v1, v2, v7, v8, -v5, -v6, v11, v12, -v9, -v10, -v15, -v16, v13, v14, v19, v20, -v17, -v18, -v23, -v24, v21, v22, -v27, -v28, v25, v26, v31, v32, -v29, -v30)",
    "(v4, -v3, v2, -v1, -v8, v7, -v6, v5, -v12, v11, -v10, v9, v16, -v15, v14, -v13, -v20, v19, -v18, v17, v24, -v23, v22, -v21, v28, -v27, v26, -v25, -v32, v31, -v30, v29)",
    "(v5, v6, v7, v8, -v1, -v2, -v3, -v4, -v13, -v14, -v15, -v16, v9, v10, v11, v12, -v21, -v22, -v23, -v24, v17, v18, v19, v20, v29, v30, v31, v32, -v25, -v26, -v27, -v28)",
    "(-v6, v5, -v8, v7, -v2, -v1, -v4, v3, v14, -v13, v16, -v15, v10, -v9, v12, -v11, v22, -v21, v24, -v23, v18, -v17, v20, -v19, -v30, v29, -v32, v31, -v26, v25, -v28, v27)",
    "(-v9, -v10, -v11, -v12, -v13, -v14, -v15, v16, v1, v2, v3, v4, v5, v6, v7, v8, v25, v26, v27, v28, v29, v30, v31, v32, -v17, -v18, -v19, -v20, -v21, -v22, -v23, -v24)",
    "(v10, -v9, v12, -v11, v14, -v13, v16, -v15, v2, -v1, v4, -v3, v6, -v5, v8, -v7, -v26, v25, -v28, v27, -v30, v29, -v32, v31, -v18, v17, -v20, v19, -v22, v21, -v24, v23)",
    "(v17, v18, v19, v20, v21, v22, v23, v24, v25, v26, v27, v28, v29, v30, v31, v32, -v1, -v2, -v3, -v4, -v5, -v6, -v7, -v8, -v9, -v10, -v11, -v12, -v13, -v14, -v15, -v16)",
    "(-v18, v17, -v20, v19, -v22, v21, -v24, v23, -v26, v25, -v28, v27, -v30, v29, -v32, v31, -v2, v1, -v4, v3, -v6, v5, -v8, v7, -v10, v9, -v12, v11, -v14, v13, -v16, v15)",
];
