//! Small-size reference values for Z_L F_L(x), used as golden data by the
//! test suites and the `table` subcommand. Columns: unnormalized
//! coefficients (index = loop count), Z_L, Z_L F_L(-1), Z_L F_L(2).

use crate::pattern::BoundaryKind;

#[derive(Debug, Clone, Copy)]
pub struct RefRow {
    pub l: usize,
    pub coeffs: &'static [i64],
    pub z: i64,
    pub zf_m1: i64,
    pub zf_2: i64,
}

pub const PER_EVEN: &[RefRow] = &[
    RefRow { l: 2, coeffs: &[0, 1], z: 1, zf_m1: -1, zf_2: 2 },
    RefRow { l: 4, coeffs: &[0, 1, 1], z: 2, zf_m1: 0, zf_2: 6 },
    RefRow { l: 6, coeffs: &[0, 2, 3, 2], z: 7, zf_m1: -1, zf_2: 32 },
    RefRow { l: 8, coeffs: &[0, 7, 14, 14, 7], z: 42, zf_m1: 0, zf_2: 294 },
    RefRow { l: 10, coeffs: &[0, 42, 105, 135, 105, 42], z: 429, zf_m1: -9, zf_2: 4608 },
    RefRow { l: 12, coeffs: &[0, 429, 1287, 2002, 2002, 1287, 429], z: 7436, zf_m1: 0, zf_2: 122694 },
    RefRow {
        l: 14,
        coeffs: &[0, 7436, 26026, 47320, 56784, 47320, 26026, 7436],
        z: 218348,
        zf_m1: -676,
        zf_2: 5537792,
    },
];

pub const PER_ODD: &[RefRow] = &[
    RefRow { l: 3, coeffs: &[2, 1], z: 3, zf_m1: 1, zf_2: 4 },
    RefRow { l: 5, coeffs: &[10, 11, 4], z: 25, zf_m1: 3, zf_2: 48 },
    RefRow { l: 7, coeffs: &[140, 232, 167, 49], z: 588, zf_m1: 26, zf_2: 1664 },
    RefRow { l: 9, coeffs: &[5544, 12182, 12617, 7097, 1764], z: 39204, zf_m1: 646, zf_2: 165376 },
    RefRow {
        l: 11,
        coeffs: &[622908, 1699522, 2262448, 1804988, 849080, 184041],
        z: 7422987,
        zf_m1: 45885,
        zf_2: 46986240,
    },
    RefRow {
        l: 13,
        coeffs: &[198846076, 646978332, 1044949413, 1059015059, 703061958, 286853502, 55294096],
        z: 3994998436,
        zf_m1: 9304650,
        zf_2: 38111846400,
    },
];

pub const REFL_EVEN: &[RefRow] = &[
    RefRow { l: 2, coeffs: &[0, 1], z: 1, zf_m1: -1, zf_2: 2 },
    RefRow { l: 4, coeffs: &[0, 1, 2], z: 3, zf_m1: 1, zf_2: 10 },
    RefRow { l: 6, coeffs: &[0, 4, 11, 11], z: 26, zf_m1: -4, zf_2: 140 },
    RefRow { l: 8, coeffs: &[0, 50, 171, 255, 170], z: 646, zf_m1: 36, zf_2: 5544 },
    RefRow { l: 10, coeffs: &[0, 1862, 7540, 14196, 14858, 7429], z: 45885, zf_m1: -1089, zf_2: 622908 },
    RefRow {
        l: 12,
        coeffs: &[0, 202860, 944119, 2107417, 2828644, 2301150, 920460],
        z: 9304650,
        zf_m1: 81796,
        zf_2: 198846076,
    },
    RefRow {
        l: 14,
        coeffs: &[0, 64080720, 335905878, 859371991, 1374229792, 1453822999, 971405460, 323801820],
        z: 5382618660,
        zf_m1: -19536400,
        zf_2: 180473355920,
    },
];

pub const REFL_ODD: &[RefRow] = &[
    RefRow { l: 3, coeffs: &[1, 1], z: 2, zf_m1: 0, zf_2: 3 },
    RefRow { l: 5, coeffs: &[3, 5, 3], z: 11, zf_m1: 1, zf_2: 25 },
    RefRow { l: 7, coeffs: &[26, 59, 59, 26], z: 170, zf_m1: 0, zf_2: 588 },
    RefRow { l: 9, coeffs: &[646, 1837, 2463, 1837, 646], z: 7429, zf_m1: 81, zf_2: 39204 },
    RefRow {
        l: 11,
        coeffs: &[45885, 156107, 258238, 258238, 156107, 45885],
        z: 920460,
        zf_m1: 0,
        zf_2: 7422987,
    },
    RefRow {
        l: 13,
        coeffs: &[9304650, 36756435, 71760049, 88159552, 71760049, 36756435, 9304650],
        z: 323801820,
        zf_m1: 456976,
        zf_2: 3994998436,
    },
];

pub fn rows(kind: BoundaryKind) -> &'static [RefRow] {
    match kind {
        BoundaryKind::PeriodicEven => PER_EVEN,
        BoundaryKind::PeriodicOdd => PER_ODD,
        BoundaryKind::ReflectingEven => REFL_EVEN,
        BoundaryKind::ReflectingOdd => REFL_ODD,
    }
}
