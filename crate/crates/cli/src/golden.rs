//! Published reference values the verify command checks against.

/// Symbolic Hopf-Galois cell: `Dash` never applies, `Fixed(c)` is
/// unconditional, `P(c, d)` means c·p when d | p−1 and a dash otherwise.
#[derive(Clone, Copy)]
pub enum Cell {
    Dash,
    Fixed(usize),
    P(usize, usize),
}

impl Cell {
    pub fn instantiate(self, p: usize) -> Option<usize> {
        match self {
            Cell::Dash => None,
            Cell::Fixed(c) => Some(c),
            Cell::P(c, d) => ((p - 1) % d == 0).then_some(c * p),
        }
    }
}

pub const MULT_COLUMNS: [&str; 5] = ["C12", "C6xC2", "A4", "D12", "Dic12"];

/// Brace counts of size 12 by (additive, multiplicative) type.
pub const BRACE_TABLE_12: [(&str, [usize; 5]); 2] =
    [("C12", [1, 1, 0, 2, 1]), ("C6xC2", [1, 1, 1, 1, 1])];

/// Regular subgroups of Hol(E) by isomorphism type.
pub const REGULAR_TABLE_12: [(&str, [usize; 5]); 2] =
    [("C12", [1, 1, 0, 3, 1]), ("C6xC2", [3, 1, 2, 3, 3])];

/// Size-12p census rows and total, keyed by the residue of p mod 12.
pub fn census_for_residue(p: usize) -> Option<([usize; 5], [usize; 5], usize)> {
    match p % 12 {
        11 => Some(([2, 3, 0, 7, 2], [2, 2, 1, 3, 2], 24)),
        5 => Some(([3, 3, 0, 7, 3], [3, 2, 1, 3, 3], 28)),
        7 => Some(([4, 6, 0, 7, 2], [4, 4, 2, 3, 2], 34)),
        1 => Some(([6, 6, 0, 7, 3], [6, 4, 2, 3, 3], 40)),
        _ => None,
    }
}

/// Single-size brace counts with published values.
pub const BRUTE_FORCE_TOTALS: [(usize, usize); 3] = [(24, 96), (36, 46), (60, 28)];

/// Conjugacy-class counts of regular subgroups of Hol(Z7 × E).
pub const DUAL_ROUTE_AT_7: [(&str, usize); 2] = [("C12", 19), ("C6xC2", 15)];

/// Symbolic Hopf-Galois tables; rows follow the five multiplicative types,
/// cells follow the kernel columns [F, C6, D6, C4, C2xC2, C3, C2, 1].
pub fn hgs_rows(e_label: &str) -> [(&'static str, [Cell; 8]); 5] {
    use Cell::*;
    match e_label {
        "C12" => [
            ("C12", [Fixed(1), P(1, 2), Dash, P(1, 3), Dash, P(1, 4), P(1, 6), P(1, 12)]),
            ("C6xC2", [Fixed(3), P(3, 2), Dash, Dash, P(3, 3), Dash, P(3, 6), Dash]),
            ("A4", [Fixed(0), Dash, Dash, Dash, Fixed(0), Dash, Dash, Dash]),
            ("D12", [Fixed(9), P(9, 2), P(9, 2), Dash, Dash, Dash, Dash, Dash]),
            ("Dic12", [Fixed(3), P(3, 2), Dash, Dash, Dash, P(3, 4), Dash, Dash]),
        ],
        "C6xC2" => [
            ("C12", [Fixed(1), P(1, 2), Dash, P(1, 3), Dash, P(1, 4), P(1, 6), P(1, 12)]),
            ("C6xC2", [Fixed(1), P(1, 2), Dash, Dash, P(1, 3), Dash, P(1, 6), Dash]),
            ("A4", [Fixed(4), Dash, Dash, Dash, P(4, 3), Dash, Dash, Dash]),
            ("D12", [Fixed(3), P(3, 2), P(3, 2), Dash, Dash, Dash, Dash, Dash]),
            ("Dic12", [Fixed(3), P(3, 2), Dash, Dash, Dash, P(3, 4), Dash, Dash]),
        ],
        other => panic!("no Hopf-Galois golden table for E = {other}"),
    }
}
