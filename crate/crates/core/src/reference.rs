//! Printed constants that the computations are checked against. K-elements are written in the
//! `parse_k` syntax with c7 = c2.

use alloc::vec::Vec;

use crate::exact::{parse_k, qpoly, CycNum, QPoly};

/// Nonzero H3 coefficients as (q9-exponent, value).
pub const H3_TERMS: [(i64, i64); 6] = [(-3, 1), (6, 5), (15, -7), (24, 3), (33, 15), (42, -32)];

pub const F_TERMS: [(i64, &str); 6] = [(-1, "1"), (0, "-1"), (1, "c4"), (2, "c1"), (3, "c2+2"), (4, "c4")];

pub const X_TERMS: [(i64, &str); 5] =
    [(0, "-c1"), (1, "2c2+c4"), (2, "3-3c1"), (3, "6-7c1+c2"), (4, "15-16c1+7c2")];

pub const Y_TERMS: [(i64, &str); 4] = [(0, "-c2"), (1, "c4-c2+3"), (2, "3c4-6c7+9"), (3, "10c4-22c7+27")];

pub const PHI1_TERMS: [(i64, &str); 9] = [
    (1, "c4"),
    (3, "-3"),
    (4, "-2c2"),
    (7, "-c1"),
    (12, "6"),
    (13, "5c2"),
    (16, "4c1"),
    (19, "-7c4"),
    (21, "3"),
];

pub const PHI2_TERMS: [(i64, &str); 7] =
    [(1, "1"), (2, "c4-c1"), (4, "1"), (5, "2c2+c4"), (7, "2"), (8, "c2+c4"), (10, "-3")];

pub const PHI3_TERMS: [(i64, &str); 7] =
    [(1, "c4-c2"), (2, "-3"), (4, "c2-c1"), (5, "3"), (7, "2c1-2c4"), (8, "3"), (10, "3c2-3c4")];

/// Highest exponent shown in each printed phi expansion.
pub const PHI_PRINTED_THROUGH: [i64; 3] = [21, 10, 10];

/// Expand printed (exponent, K-element) pairs.
pub fn parse_terms(terms: &[(i64, &str)]) -> Vec<(i64, CycNum)> {
    terms.iter().map(|(e, s)| (*e, parse_k(s).expect("well-formed printed coefficient"))).collect()
}

/// The sextic appearing cubed in the numerator of f.
pub fn f_sextic() -> QPoly {
    qpoly(&[16, 12, -3, 1, 6, 3, 1])
}

pub fn f_cubic() -> QPoly {
    qpoly(&[-5, -3, 3, 2])
}

/// x^3 - 3x - 1, the printed denominator cubic.
pub fn denominator_cubic() -> QPoly {
    qpoly(&[-1, -3, 0, 1])
}

pub fn sextic_a() -> QPoly {
    qpoly(&[-23, -18, 12, 4, 0, 6, 1])
}

pub fn sextic_b() -> QPoly {
    qpoly(&[28, 18, -33, -26, 18, 24, 7])
}

/// 2x^3 - 3x^2 + 4 from the 1728-form.
pub fn cubic_1728() -> QPoly {
    qpoly(&[4, 0, -3, 2])
}

/// Printed row: x as (m, n) meaning m/n, j, curve coefficients, conductor factorization.
pub struct TableRow {
    pub x: (i64, i64),
    pub j: &'static str,
    pub curve: [i64; 5],
    pub conductor: &'static [(u64, u32)],
}

pub const TABLE: [TableRow; 7] = [
    TableRow { x: (1, 0), j: "4374", curve: [0, 0, 0, -27, -42], conductor: &[(2, 3), (3, 5)] },
    TableRow { x: (-2, 1), j: "419904", curve: [0, 0, 0, -162, 792], conductor: &[(2, 8), (3, 5)] },
    TableRow { x: (0, 1), j: "-44789760", curve: [0, 0, 1, -135, -604], conductor: &[(3, 5), (5, 2)] },
    TableRow { x: (-1, 2), j: "15786448344", curve: [0, 0, 0, -5427, 153882], conductor: &[(2, 5), (3, 5)] },
    TableRow {
        x: (2, 1),
        j: "24992518538304",
        curve: [0, 0, 0, -201042, 34695912],
        conductor: &[(2, 8), (3, 5), (17, 2)],
    },
    TableRow {
        x: (-3, 2),
        j: "-92515041526500",
        curve: [0, 0, 0, -1126035, 459913278],
        conductor: &[(2, 3), (3, 5), (19, 2)],
    },
    TableRow {
        x: (-1, 3),
        j: "-70043919611288518656",
        curve: [0, 0, 1, -1127379978, -14569799990728],
        conductor: &[(3, 5), (97, 2), (101, 2)],
    },
];

/// The printed solutions of m^3 - 3mn^2 - n^3 = 1.
pub const THUE_ONE: [(i64, i64); 6] = [(1, 0), (0, -1), (-1, 1), (2, 1), (1, -3), (-3, 2)];

/// x-values printed for the value 3 of the cubic form.
pub const THUE_THREE_X: [(i64, i64); 3] = [(1, 1), (-2, 1), (-1, 2)];
