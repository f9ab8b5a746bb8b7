//! The trigonometric parametrisation x(r) = sin(pi(r+1)/3) / sin(pi r/3)
//! on 0 < r < 3, strictly decreasing, with x(5/2) = -1 marking the
//! crossover between the two asymptotic branches.

use crate::consts::pi;
use rug::Float;

/// Which closed-form branch applies: `Low` covers x >= -1 (r <= 5/2),
/// `High` covers x <= -1 (r >= 5/2). Both are defined at the crossover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Low,
    High,
}

#[derive(Debug, Clone)]
pub struct RParam {
    pub r: Float,
    pub branch: Branch,
}

/// x(r); precision follows `r`.
pub fn x_of_r(r: &Float) -> Float {
    let prec = r.prec();
    let pi = pi(prec);
    let num = (pi.clone() * (r.clone() + 1u32) / 3u32).sin();
    let den = (pi * r.clone() / 3u32).sin();
    num / den
}

/// Inverse parametrisation: r = (3/pi) atan2(sqrt 3, 2x - 1), always in
/// (0, 3); the branch is assigned from the sign of x + 1.
pub fn r_of_x(x: &Float) -> RParam {
    let prec = x.prec();
    let pi = pi(prec);
    let sqrt3 = Float::with_val(prec, 3u32).sqrt();
    let arg = Float::with_val(prec, 2u32 * x.clone() - 1u32);
    let theta = sqrt3.atan2(&arg);
    let r = Float::with_val(prec, 3u32) * theta / pi;
    let branch = if *x >= -1f64 { Branch::Low } else { Branch::High };
    RParam { r, branch }
}

/// Shifted parameter used by the high branch: r - 3.
pub fn shift_high(r: &Float) -> Float {
    r.clone() - 3u32
}
