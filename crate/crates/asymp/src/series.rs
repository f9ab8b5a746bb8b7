//! Exact finite-size data for the fitter: the reduced generating function
//! F~_L(x) evaluated exactly at a rational weight, its sign recorded, and
//! the log of its absolute value taken at a precision sized by the data.

use crate::{Error, Result};
use rayon::prelude::*;
use rug::{Float, Rational};
use tlbe_core::closedform::{self, SpecialX};
use tlbe_core::groundstate;
use tlbe_core::pattern::BoundaryKind;

/// Parity filter on the half-size n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
    All,
}

impl Parity {
    pub fn admits(self, n: u32) -> bool {
        match self {
            Parity::Odd => n % 2 == 1,
            Parity::Even => n % 2 == 0,
            Parity::All => true,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
            Parity::All => "all",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SeriesEntry {
    pub n: u32,
    pub sign: i8,
    pub log_abs: Float,
}

/// Exact-data series for one (kind, x): per half-size n the sign of
/// F~_L(x) and log |F~_L(x)|. Exact zeros are excluded and listed aside.
#[derive(Debug, Clone)]
pub struct SampleSeries {
    pub kind: BoundaryKind,
    pub x: Rational,
    pub parity: Parity,
    pub entries: Vec<SeriesEntry>,
    pub zeros: Vec<u32>,
    pub prec: u32,
}

/// Exact value of F~_L(x) at half-size n.
///
/// Even cylinder: reduced refined-count polynomial. Strips: one Bareiss
/// determinant per point, with the proved product form replacing the
/// x = 0 evaluation on the even strip (where the determinant itself
/// vanishes and the x-coefficient is wanted instead). Odd cylinder: the
/// kernel oracle, practical only at small n.
pub fn tilde_f_exact(kind: BoundaryKind, n: u32, x: &Rational) -> Result<Rational> {
    let nu = n as usize;
    match kind {
        BoundaryKind::PeriodicEven => Ok(closedform::genfun_per_even(nu).eval_tilde(x)),
        BoundaryKind::ReflectingEven => {
            if x.cmp0() == std::cmp::Ordering::Equal {
                Ok(closedform::refl_tilde_special(kind, nu, SpecialX::Zero)?)
            } else {
                Ok(closedform::eval_det_at(kind, nu, x)? / x.clone())
            }
        }
        BoundaryKind::ReflectingOdd => Ok(closedform::eval_det_at(kind, nu, x)?),
        BoundaryKind::PeriodicOdd => {
            Ok(groundstate::genfun_oracle(kind, 2 * nu + 1)?.eval_tilde(x))
        }
    }
}

/// Exact value of F~ at a special weight on the strip through the counting
/// identities; orders of magnitude faster than the determinant and usable
/// far beyond its practical sizes.
pub fn tilde_f_fastpath(kind: BoundaryKind, n: u32, sx: SpecialX) -> Result<Rational> {
    Ok(closedform::refl_tilde_special(kind, n as usize, sx)?)
}

/// Precision policy: max(requested, 512, 4 * decimal digits of the value).
fn precision_for(requested: u32, v: &Rational) -> u32 {
    let bits = v.numer().significant_bits().max(v.denom().significant_bits());
    let digits = (bits as f64 * std::f64::consts::LOG10_2).ceil() as u32;
    requested.max(512).max(4 * digits)
}

fn entry_from_value(n: u32, v: Rational, requested: u32) -> Option<SeriesEntry> {
    let sign = match v.cmp0() {
        std::cmp::Ordering::Equal => return None,
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Less => -1,
    };
    let prec = precision_for(requested, &v);
    let log_abs = Float::with_val(prec, &v).abs().ln();
    Some(SeriesEntry { n, sign, log_abs })
}

/// How wide around the crossover a mixed-parity series is refused: the two
/// size parities follow different expansions there.
const CROSSOVER_GUARD: (i32, i32) = (-11, 10); // |x + 1| <= 1/10

pub fn collect_series(
    kind: BoundaryKind,
    x: &Rational,
    n_min: u32,
    n_max: u32,
    parity: Parity,
    bits: u32,
) -> Result<SampleSeries> {
    if n_min < 1 || n_max < n_min {
        return Err(Error::Domain(format!("bad size range {n_min}..{n_max}")));
    }
    let near_crossover = {
        let lo = Rational::from((CROSSOVER_GUARD.0, CROSSOVER_GUARD.1));
        let hi = Rational::from((-9, 10));
        *x >= lo && *x <= hi
    };
    if near_crossover && parity == Parity::All {
        return Err(Error::Fit(
            "mixed size parities near the crossover x = -1 follow different expansions; \
             pass an explicit parity"
                .into(),
        ));
    }
    let ns: Vec<u32> = (n_min..=n_max).filter(|&n| parity.admits(n)).collect();
    let values: Vec<(u32, Result<Rational>)> = ns
        .par_iter()
        .map(|&n| (n, tilde_f_exact(kind, n, x)))
        .collect();
    let mut entries = Vec::new();
    let mut zeros = Vec::new();
    let mut prec = bits.max(512);
    for (n, v) in values {
        match entry_from_value(n, v?, bits) {
            Some(e) => {
                prec = prec.max(e.log_abs.prec());
                entries.push(e);
            }
            None => zeros.push(n),
        }
    }
    Ok(SampleSeries { kind, x: x.clone(), parity, entries, zeros, prec })
}

/// Series over a special weight using the counting-number fast path.
pub fn collect_series_fastpath(
    kind: BoundaryKind,
    sx: SpecialX,
    n_min: u32,
    n_max: u32,
    parity: Parity,
    bits: u32,
) -> Result<SampleSeries> {
    let ns: Vec<u32> = (n_min..=n_max).filter(|&n| parity.admits(n)).collect();
    let values: Vec<(u32, Result<Rational>)> = ns
        .par_iter()
        .map(|&n| (n, tilde_f_fastpath(kind, n, sx)))
        .collect();
    let mut entries = Vec::new();
    let mut zeros = Vec::new();
    let mut prec = bits.max(512);
    for (n, v) in values {
        match entry_from_value(n, v?, bits) {
            Some(e) => {
                prec = prec.max(e.log_abs.prec());
                entries.push(e);
            }
            None => zeros.push(n),
        }
    }
    Ok(SampleSeries { kind, x: sx.rational(), parity, entries, zeros, prec })
}

/// Synthetic series with prescribed values, for fitter self-tests.
pub fn synthetic_series(entries: Vec<(u32, Float)>, prec: u32) -> SampleSeries {
    SampleSeries {
        kind: BoundaryKind::PeriodicEven,
        x: Rational::from(0),
        parity: Parity::All,
        entries: entries
            .into_iter()
            .map(|(n, log_abs)| SeriesEntry { n, sign: 1, log_abs })
            .collect(),
        zeros: Vec::new(),
        prec,
    }
}
