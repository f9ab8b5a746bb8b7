//! Dyck paths and the statistics carried by the pattern bijection.
//!
//! Up-steps open links, down-steps close them; an odd-size path ends at
//! height one and its single unmatched up-step is the defect. The two tile
//! statistics live here: the signed tile sum s_alpha and the ribbon count
//! d_alpha obtained by repeatedly peeling the maximal boundary ribbon.

use crate::pattern::{BoundaryKind, LinkPattern};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A lattice path with nonnegative heights ending at 0 (even length) or 1
/// (odd length).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for (t, s) in steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidPath(format!("height drops below zero after step {}", t + 1)));
            }
        }
        let want = (steps.len() % 2) as i64;
        if h != want {
            return Err(Error::InvalidPath(format!("final height {h}, expected {want}")));
        }
        Ok(DyckPath { steps })
    }

    /// Parses a string of `U`/`D` characters.
    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(Error::InvalidPath(format!("bad step character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn end_height(&self) -> usize {
        self.steps.len() % 2
    }

    /// Heights after each step; index 0 is the start at height 0.
    pub fn heights(&self) -> Vec<u32> {
        let mut h = vec![0u32; self.len() + 1];
        for (t, s) in self.steps.iter().enumerate() {
            h[t + 1] = if *s == Step::Up { h[t] + 1 } else { h[t] - 1 };
        }
        h
    }
}

impl std::fmt::Display for DyckPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

/// All valid paths of the given length and end height, lexicographic with
/// Up < Down.
pub fn enumerate_paths(len: usize, end_height: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len);
    fn rec(steps: &mut Vec<Step>, h: i64, len: usize, end: i64, out: &mut Vec<DyckPath>) {
        let t = steps.len();
        if t == len {
            if h == end {
                out.push(DyckPath { steps: steps.clone() });
            }
            return;
        }
        let remaining = (len - t - 1) as i64;
        // an up-step is viable if we can still come back down to `end`
        if h + 1 - remaining <= end {
            steps.push(Step::Up);
            rec(steps, h + 1, len, end, out);
            steps.pop();
        }
        if h >= 1 && h - 1 + remaining >= end {
            steps.push(Step::Down);
            rec(steps, h - 1, len, end, out);
            steps.pop();
        }
    }
    rec(&mut steps, 0, len, end_height as i64, &mut out);
    out
}

/// Openings map to up-steps, closings to down-steps, an odd-size defect to
/// the unmatched up-step. Defined for the strip kinds and the even cylinder;
/// odd-cylinder patterns may have arcs over the defect strand and carry no
/// Dyck encoding.
pub fn to_dyck(p: &LinkPattern) -> Result<DyckPath> {
    if p.kind() == BoundaryKind::PeriodicOdd {
        return Err(Error::NotDyckRepresentable { kind: p.kind(), l: p.size() });
    }
    let steps = (1..=p.size())
        .map(|i| match p.partner(i) {
            None => Step::Up,
            Some(q) if q > i => Step::Up,
            Some(_) => Step::Down,
        })
        .collect();
    DyckPath::new(steps)
}

/// Inverse of [`to_dyck`] for the given kind.
pub fn from_dyck(d: &DyckPath, kind: BoundaryKind) -> Result<LinkPattern> {
    kind.check_size(d.len())?;
    if kind == BoundaryKind::PeriodicOdd {
        return Err(Error::NotDyckRepresentable { kind, l: d.len() });
    }
    let l = d.len();
    let mut pairing = vec![0u16; l];
    let mut stack = Vec::new();
    for (t, s) in d.steps().iter().enumerate() {
        match s {
            Step::Up => stack.push(t + 1),
            Step::Down => {
                let j = stack.pop().ok_or_else(|| {
                    Error::InvalidPath("path dips below zero".into())
                })?;
                pairing[j - 1] = (t + 1) as u16;
                pairing[t] = j as u16;
            }
        }
    }
    Ok(LinkPattern::from_parts(kind, pairing))
}

/// Signed sum of the complete (diamond) tiles under the path: +1 on odd
/// rows, -1 on even rows, the first row of complete tiles being row 1.
/// A diamond centred at column c, row r >= 1 (c + r odd) lies under the
/// path exactly when the height at c is at least r + 1.
pub fn signed_tile_sum(d: &DyckPath) -> i64 {
    let h = d.heights();
    let mut s: i64 = 0;
    for (c, &hc) in h.iter().enumerate().skip(1) {
        if c == d.len() {
            continue;
        }
        for r in 1..hc as usize {
            if (c + r) % 2 == 1 {
                s += if r % 2 == 1 { 1 } else { -1 };
            }
        }
    }
    s
}

/// Same sum assigned by column instead of row: +1 on even sites, -1 on odd
/// sites. Tiles only exist where column and row parities are opposite, so
/// this must agree with [`signed_tile_sum`].
pub fn signed_tile_sum_by_column(d: &DyckPath) -> i64 {
    let h = d.heights();
    let mut s: i64 = 0;
    for (c, &hc) in h.iter().enumerate().skip(1) {
        if c == d.len() {
            continue;
        }
        for r in 1..hc as usize {
            if (c + r) % 2 == 1 {
                s += if c % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    s
}

/// Ribbon count d_alpha by iterated peeling. Each peel removes the maximal
/// boundary ribbon of a contiguous run of occupied columns (the topmost
/// tile of every column in the run, which may include the half-tiles of the
/// 0th row but never crosses the base line); removing it lowers the column
/// profile by two, clamped at zero.
pub fn dyck_ribbons(d: &DyckPath) -> usize {
    let mut h: Vec<i64> = d.heights().iter().map(|&x| x as i64).collect();
    // column c holds tiles iff h[c] >= 1; for odd length the final column
    // carries the half-tile cut off by the right edge at height one
    let cols = if d.len() % 2 == 0 { d.len().saturating_sub(1) } else { d.len() };
    let occupied = |h: &[i64], c: usize| c >= 1 && c <= cols && h[c] >= 1;
    let mut count = 0;
    loop {
        let mut c = 1;
        let mut any = false;
        while c <= cols {
            if occupied(&h, c) {
                // one ribbon per maximal occupied run
                any = true;
                count += 1;
                while c <= cols && h[c] >= 1 {
                    h[c] = (h[c] - 2).max(0);
                    c += 1;
                }
            } else {
                c += 1;
            }
        }
        if !any {
            break;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_small() {
        // smallest arcs open and close immediately
        let a0 = LinkPattern::alpha0(BoundaryKind::ReflectingEven, 4).unwrap();
        assert_eq!(to_dyck(&a0).unwrap().to_string(), "UDUD");
        // fully nested
        let nested = from_dyck(&DyckPath::parse("UUDD").unwrap(), BoundaryKind::ReflectingEven).unwrap();
        assert_eq!(nested.partner(1), Some(4));
        assert_eq!(nested.partner(2), Some(3));
        assert_eq!(to_dyck(&nested).unwrap().to_string(), "UUDD");
    }

    #[test]
    fn roundtrip_all_paths_len_12() {
        let paths = enumerate_paths(12, 0);
        assert_eq!(paths.len(), 132);
        for path in &paths {
            let p = from_dyck(path, BoundaryKind::ReflectingEven).unwrap();
            assert_eq!(&to_dyck(&p).unwrap(), path);
        }
        for path in enumerate_paths(11, 1) {
            let p = from_dyck(&path, BoundaryKind::ReflectingOdd).unwrap();
            assert_eq!(to_dyck(&p).unwrap(), path);
        }
    }

    #[test]
    fn roundtrip_patterns_up_to_12() {
        for kind in [BoundaryKind::ReflectingEven, BoundaryKind::ReflectingOdd, BoundaryKind::PeriodicEven] {
            for l in (kind.min_size()..=12).step_by(2) {
                for p in LinkPattern::enumerate(kind, l).unwrap() {
                    let d = to_dyck(&p).unwrap();
                    assert_eq!(from_dyck(&d, kind).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn odd_defect_is_odd_positioned_up_step() {
        for path in enumerate_paths(9, 1) {
            let p = from_dyck(&path, BoundaryKind::ReflectingOdd).unwrap();
            let d = p.defect().unwrap();
            assert_eq!(d % 2, 1, "defect at even site in {p}");
            assert_eq!(path.steps()[d - 1], Step::Up);
        }
    }

    #[test]
    fn periodic_odd_has_no_encoding() {
        let p = LinkPattern::enumerate(BoundaryKind::PeriodicOdd, 5).unwrap();
        assert!(matches!(to_dyck(&p[0]), Err(Error::NotDyckRepresentable { .. })));
    }

    #[test]
    fn invalid_paths_rejected() {
        assert!(DyckPath::parse("DU").is_err());
        assert!(DyckPath::parse("UDU").is_ok()); // odd length ends at height 1
        assert!(DyckPath::parse("UUDU").is_err()); // even length ending at 2
    }

    #[test]
    fn signed_tile_sum_worked_example() {
        // the size-10 staircase with s = 4 - 2 + 1 = 3
        let d = DyckPath::parse("UUUUDDDUDD").unwrap();
        assert_eq!(signed_tile_sum(&d), 3);
        assert_eq!(signed_tile_sum_by_column(&d), 3);
    }

    #[test]
    fn signed_tile_sum_alpha0_is_zero() {
        for n in 1..=6 {
            let a0 = LinkPattern::alpha0(BoundaryKind::ReflectingEven, 2 * n).unwrap();
            assert_eq!(signed_tile_sum(&to_dyck(&a0).unwrap()), 0);
        }
    }

    #[test]
    fn row_and_column_rules_agree_everywhere() {
        for path in enumerate_paths(10, 0).iter().chain(enumerate_paths(9, 1).iter()) {
            assert_eq!(signed_tile_sum(path), signed_tile_sum_by_column(path));
        }
    }

    #[test]
    fn ribbons_worked_example() {
        // the size-18 peeling example with four ribbons
        let d = DyckPath::parse("UUUUDUDDDUUDUUDDDD").unwrap();
        assert_eq!(dyck_ribbons(&d), 4);
        let p = from_dyck(&d, BoundaryKind::ReflectingEven).unwrap();
        assert_eq!(p.partner(1), Some(18));
        assert_eq!(p.partner(2), Some(9));
        assert_eq!(p.partner(13), Some(16));
        assert_eq!(p.loop_count(), 4);
        assert_eq!(signed_tile_sum(&d), 9 - 4);
    }

    #[test]
    fn ribbons_alpha0() {
        // each half-tile of row 0 is its own ribbon
        for n in 1..=6 {
            let a0 = LinkPattern::alpha0(BoundaryKind::ReflectingEven, 2 * n).unwrap();
            assert_eq!(dyck_ribbons(&to_dyck(&a0).unwrap()), n);
        }
    }

    #[test]
    fn three_way_agreement() {
        // k = right openings = n - s = ribbons (even) / ribbons - 1 (odd),
        // for every pattern up to size 12
        for l in (2..=12).step_by(2) {
            let n = (l / 2) as i64;
            for p in LinkPattern::enumerate(BoundaryKind::ReflectingEven, l).unwrap() {
                let d = to_dyck(&p).unwrap();
                let k = p.loop_count() as i64;
                assert_eq!(k, p.loops_right_openings() as i64);
                assert_eq!(k, n - signed_tile_sum(&d));
                assert_eq!(k, dyck_ribbons(&d) as i64);
            }
        }
        for l in (3..=11).step_by(2) {
            let n = (l / 2) as i64;
            for p in LinkPattern::enumerate(BoundaryKind::ReflectingOdd, l).unwrap() {
                let d = to_dyck(&p).unwrap();
                let k = p.loop_count() as i64;
                assert_eq!(k, p.loops_right_openings() as i64);
                assert_eq!(k, n - signed_tile_sum(&d));
                assert_eq!(k, dyck_ribbons(&d) as i64 - 1);
            }
        }
    }
}
