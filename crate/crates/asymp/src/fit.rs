//! Extraction of expansion coefficients from exact-data series by solving
//! square (or least-squares) linear systems on sliding windows of
//! consecutive sizes, at the precision the data was collected at.

use crate::series::SampleSeries;
use crate::{Error, Result};
use rug::Float;
use tlbe_core::pattern::BoundaryKind;

/// One basis function of the size n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisFn {
    /// n itself (leading, extensive term)
    N,
    /// log n (corner term, strips only)
    LogN,
    /// constant term
    One,
    /// n^{-k}
    InvN(u32),
}

impl BasisFn {
    pub fn eval(self, n: u32, prec: u32) -> Float {
        match self {
            BasisFn::N => Float::with_val(prec, n),
            BasisFn::LogN => Float::with_val(prec, n).ln(),
            BasisFn::One => Float::with_val(prec, 1),
            BasisFn::InvN(k) => Float::with_val(prec, n).pow_neg(k),
        }
    }

    pub fn name(self) -> String {
        match self {
            BasisFn::N => "n".into(),
            BasisFn::LogN => "log n".into(),
            BasisFn::One => "1".into(),
            BasisFn::InvN(k) => format!("n^-{k}"),
        }
    }
}

trait PowNeg {
    fn pow_neg(self, k: u32) -> Float;
}

impl PowNeg for Float {
    fn pow_neg(self, k: u32) -> Float {
        let prec = self.prec();
        let mut r = Float::with_val(prec, 1);
        for _ in 0..k {
            r /= &self;
        }
        r
    }
}

/// Ordered list of distinct basis functions; `n` and `1` are always
/// required, `log n` belongs to reflecting geometries.
#[derive(Debug, Clone)]
pub struct BasisSpec(Vec<BasisFn>);

impl BasisSpec {
    pub fn new(fns: Vec<BasisFn>) -> Result<Self> {
        if fns.len() < 2 {
            return Err(Error::Fit("basis needs at least two functions".into()));
        }
        for (i, a) in fns.iter().enumerate() {
            if fns[i + 1..].contains(a) {
                return Err(Error::Fit(format!("duplicate basis function {}", a.name())));
            }
        }
        if !fns.contains(&BasisFn::N) || !fns.contains(&BasisFn::One) {
            return Err(Error::Fit("basis must contain n and 1".into()));
        }
        Ok(BasisSpec(fns))
    }

    /// Default protocol: cylinders use pure powers {n, 1, 1/n, ...}, strips
    /// additionally carry the log n corner term.
    pub fn default_for(kind: BoundaryKind, terms: usize) -> Result<Self> {
        let mut fns = vec![BasisFn::N];
        let fixed = if kind.is_periodic() {
            fns.push(BasisFn::One);
            2
        } else {
            fns.push(BasisFn::LogN);
            fns.push(BasisFn::One);
            3
        };
        if terms < fixed {
            return Err(Error::Fit(format!("need at least {fixed} terms for {kind:?}")));
        }
        for k in 1..=(terms - fixed) as u32 {
            fns.push(BasisFn::InvN(k));
        }
        BasisSpec::new(fns)
    }

    pub fn fns(&self) -> &[BasisFn] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// One extracted coefficient: final-window estimate plus the spread of the
/// estimate across the trailing windows (a stability radius, not a
/// statistical error bar).
#[derive(Debug, Clone)]
pub struct CoeffEstimate {
    pub basis: BasisFn,
    pub value: Float,
    pub stability: Float,
}

#[derive(Debug, Clone)]
pub struct FitReport {
    pub coeffs: Vec<CoeffEstimate>,
    pub window: usize,
    pub windows_used: usize,
    pub n_min: u32,
    pub n_max: u32,
}

impl FitReport {
    pub fn coeff(&self, b: BasisFn) -> Option<&CoeffEstimate> {
        self.coeffs.iter().find(|c| c.basis == b)
    }
}

/// Dense solve of A c = y with partial pivoting at the operands' precision.
fn solve_dense(mut a: Vec<Vec<Float>>, mut y: Vec<Float>) -> Result<Vec<Float>> {
    let n = a.len();
    for k in 0..n {
        let piv = (k..n)
            .max_by(|&i, &j| {
                a[i][k].clone().abs().partial_cmp(&a[j][k].clone().abs()).expect("no NaN")
            })
            .expect("nonempty");
        if a[piv][k].is_zero() {
            return Err(Error::Fit("singular window system".into()));
        }
        a.swap(k, piv);
        y.swap(k, piv);
        for i in k + 1..n {
            let f = Float::with_val(a[i][k].prec(), &a[i][k] / &a[k][k]);
            for j in k..n {
                let t = Float::with_val(f.prec(), &f * &a[k][j]);
                a[i][j] -= t;
            }
            let t = Float::with_val(f.prec(), &f * &y[k]);
            y[i] -= t;
        }
    }
    let mut c = y;
    for k in (0..n).rev() {
        for j in k + 1..n {
            let t = Float::with_val(c[k].prec(), &a[k][j] * &c[j]);
            c[k] -= t;
        }
        let t = Float::with_val(c[k].prec(), &c[k] / &a[k][k]);
        c[k] = t;
    }
    Ok(c)
}

/// Solves one window: square system when the window length equals the basis
/// size, otherwise least squares through the normal equations (the working
/// precision far exceeds the conditioning loss).
fn solve_window(entries: &[(u32, &Float)], basis: &BasisSpec, prec: u32) -> Result<Vec<Float>> {
    let m = entries.len();
    let b = basis.len();
    let design: Vec<Vec<Float>> = entries
        .iter()
        .map(|(n, _)| basis.fns().iter().map(|f| f.eval(*n, prec)).collect())
        .collect();
    let rhs: Vec<Float> = entries.iter().map(|(_, v)| Float::with_val(prec, *v)).collect();
    if m == b {
        return solve_dense(design, rhs);
    }
    // normal equations
    let mut ata = vec![vec![Float::with_val(prec, 0); b]; b];
    let mut aty = vec![Float::with_val(prec, 0); b];
    for (row, yv) in design.iter().zip(&rhs) {
        for i in 0..b {
            for j in 0..b {
                let t = Float::with_val(prec, &row[i] * &row[j]);
                ata[i][j] += t;
            }
            let t = Float::with_val(prec, &row[i] * yv);
            aty[i] += t;
        }
    }
    solve_dense(ata, aty)
}

/// Number of trailing windows entering the stability radius.
const STABILITY_WINDOWS: usize = 3;

/// Fits `log |F~|` against the basis on sliding windows of `window`
/// consecutive entries. The last window gives the estimates; the spread
/// over the trailing three windows gives the per-coefficient stability.
pub fn fit_expansion(series: &SampleSeries, basis: &BasisSpec, window: usize) -> Result<FitReport> {
    let m = series.entries.len();
    if window < basis.len() {
        return Err(Error::Fit(format!("window {window} smaller than basis {}", basis.len())));
    }
    if m < window + STABILITY_WINDOWS - 1 {
        return Err(Error::Fit(format!(
            "series has {m} entries; need at least {} for window {window} plus stability",
            window + STABILITY_WINDOWS - 1
        )));
    }
    {
        let mut seen = std::collections::HashSet::new();
        for e in &series.entries {
            if !seen.insert(e.n) {
                return Err(Error::Fit(format!("duplicate size n = {} in series", e.n)));
            }
        }
    }
    let prec = series.prec;
    let total_windows = m - window + 1;
    let first_tracked = total_windows.saturating_sub(STABILITY_WINDOWS);
    let mut tracked: Vec<Vec<Float>> = Vec::new();
    for w in first_tracked..total_windows {
        let slice: Vec<(u32, &Float)> =
            series.entries[w..w + window].iter().map(|e| (e.n, &e.log_abs)).collect();
        tracked.push(solve_window(&slice, basis, prec)?);
    }
    let last = tracked.last().expect("at least one window");
    let coeffs = basis
        .fns()
        .iter()
        .enumerate()
        .map(|(i, &bf)| {
            let mut lo = tracked[0][i].clone();
            let mut hi = tracked[0][i].clone();
            for sol in &tracked {
                if sol[i] < lo {
                    lo = sol[i].clone();
                }
                if sol[i] > hi {
                    hi = sol[i].clone();
                }
            }
            CoeffEstimate { basis: bf, value: last[i].clone(), stability: hi - lo }
        })
        .collect();
    Ok(FitReport {
        coeffs,
        window,
        windows_used: tracked.len(),
        n_min: series.entries.first().map_or(0, |e| e.n),
        n_max: series.entries.last().map_or(0, |e| e.n),
    })
}
