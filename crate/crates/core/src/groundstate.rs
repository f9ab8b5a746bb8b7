//! Brute-force oracle: the Hamiltonian H = sum_i (1 - e_i) in the link
//! pattern basis and its exact integer kernel vector.
//!
//! The kernel is found by Gaussian elimination over word-sized prime fields,
//! CRT lifting and rational reconstruction, then certified exactly: the
//! modular ranks pin the kernel dimension to one and the reconstructed
//! integer vector is verified to satisfy H psi = 0 over the integers. The
//! result is as exact as a rational elimination at a fraction of the cost.

use crate::genfun::GenFun;
use crate::pattern::{BoundaryKind, LinkPattern};
use crate::{Error, Result};
use rug::{Integer, Rational};
use std::collections::HashMap;

/// Default cap on L for oracle computations; beyond this the state space
/// gets impractical for a dense kernel solve.
pub const DEFAULT_SIZE_CAP: usize = 16;

/// H in the link pattern basis, stored by column. Entry lists are coalesced
/// and include the diagonal.
#[derive(Debug, Clone)]
pub struct Hamiltonian {
    pub kind: BoundaryKind,
    pub l: usize,
    pub basis: Vec<LinkPattern>,
    cols: Vec<Vec<(u32, i64)>>,
}

impl Hamiltonian {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.cols[col]
            .iter()
            .find(|(r, _)| *r as usize == row)
            .map_or(0, |(_, v)| *v)
    }

    /// Exact matrix-vector product over the integers.
    pub fn apply(&self, v: &[Integer]) -> Vec<Integer> {
        let mut out = vec![Integer::ZERO; self.dim()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, coeff) in col {
                out[*r as usize] += Integer::from(&v[c] * *coeff);
            }
        }
        out
    }

    pub fn column_sum(&self, col: usize) -> i64 {
        self.cols[col].iter().map(|(_, v)| v).sum()
    }
}

pub fn build_hamiltonian(kind: BoundaryKind, l: usize) -> Result<Hamiltonian> {
    build_hamiltonian_capped(kind, l, DEFAULT_SIZE_CAP)
}

pub fn build_hamiltonian_capped(kind: BoundaryKind, l: usize, cap: usize) -> Result<Hamiltonian> {
    kind.check_size(l)?;
    if l > cap {
        return Err(Error::SizeCapExceeded { kind, l, cap });
    }
    let basis = LinkPattern::enumerate(kind, l)?;
    let index: HashMap<&LinkPattern, u32> =
        basis.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
    let mut cols = vec![Vec::new(); basis.len()];
    for (c, p) in basis.iter().enumerate() {
        let mut entries: HashMap<u32, i64> = HashMap::new();
        for i in 1..=kind.generator_count(l) {
            let (q, _loops) = p.apply_ei(i)?;
            let r = *index.get(&q).ok_or_else(|| {
                Error::GroundStateDefect(format!("e_{i} image of {p} is not a basis pattern"))
            })?;
            if r as usize != c {
                *entries.entry(c as u32).or_insert(0) += 1;
                *entries.entry(r).or_insert(0) -= 1;
            }
        }
        let mut list: Vec<(u32, i64)> = entries.into_iter().filter(|(_, v)| *v != 0).collect();
        list.sort_unstable();
        cols[c] = list;
    }
    Ok(Hamiltonian { kind, l, basis, cols })
}

/// The exact ground state: positive coprime integer components summing to Z.
#[derive(Debug, Clone)]
pub struct GroundState {
    pub kind: BoundaryKind,
    pub l: usize,
    pub psi: Vec<Integer>,
    pub z: Integer,
}

// 2^61 - 1, the largest prime below 10^18, and the largest prime below 2^63.
const PRIMES: [u64; 3] = [2305843009213693951, 999999999999999989, 9223372036854775783];

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Row-echelon elimination mod p. Returns the pivot columns and, when the
/// nullity is exactly one, the kernel vector normalized to 1 at the free
/// column.
fn kernel_mod_p(h: &Hamiltonian, p: u64) -> (Vec<usize>, Option<Vec<u64>>) {
    let dim = h.dim();
    let mut m = vec![0u64; dim * dim];
    for (c, col) in h.cols.iter().enumerate() {
        for (r, v) in col {
            let vm = v.rem_euclid(p as i64) as u64;
            m[*r as usize * dim + c] = vm;
        }
    }
    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for c in 0..dim {
        let mut pr = None;
        for rr in row..dim {
            if m[rr * dim + c] != 0 {
                pr = Some(rr);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        if pr != row {
            for j in c..dim {
                m.swap(row * dim + j, pr * dim + j);
            }
        }
        let inv = invmod(m[row * dim + c], p);
        for j in c..dim {
            m[row * dim + j] = mulmod(m[row * dim + j], inv, p);
        }
        let (top, rest) = m.split_at_mut((row + 1) * dim);
        let prow = &top[row * dim..row * dim + dim];
        for rr in 0..dim - row - 1 {
            let f = rest[rr * dim + c];
            if f == 0 {
                continue;
            }
            let target = &mut rest[rr * dim..rr * dim + dim];
            for j in c..dim {
                let t = mulmod(f, prow[j], p);
                target[j] = (target[j] + p - t) % p;
            }
        }
        pivot_cols.push(c);
        row += 1;
        if row == dim {
            break;
        }
    }
    if pivot_cols.len() != dim - 1 {
        return (pivot_cols, None);
    }
    let free = (0..dim).find(|c| !pivot_cols.contains(c)).expect("one free column");
    let mut v = vec![0u64; dim];
    v[free] = 1;
    for (i, &c) in pivot_cols.iter().enumerate().rev() {
        let mut s = 0u64;
        for j in c + 1..dim {
            if v[j] != 0 {
                s = (s + mulmod(m[i * dim + j], v[j], p)) % p;
            }
        }
        v[c] = (p - s) % p;
    }
    (pivot_cols, Some(v))
}

/// Rational reconstruction of r mod m with both numerator and denominator
/// bounded by sqrt(m/2).
fn rational_reconstruct(r: &Integer, m: &Integer) -> Option<Rational> {
    let bound = Integer::from(m / 2u32).sqrt();
    let mut r0 = m.clone();
    let mut r1 = r.clone();
    let mut t0 = Integer::ZERO;
    let mut t1 = Integer::from(1);
    while r1 > bound {
        let q = Integer::from(&r0 / &r1);
        let r2 = r0 - Integer::from(&q * &r1);
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = t0 - q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.cmp0() == std::cmp::Ordering::Equal || Integer::from(t1.abs_ref()) > bound {
        return None;
    }
    if t1.cmp0() == std::cmp::Ordering::Less {
        r1 = -r1;
        t1 = -t1;
    }
    if Integer::from(r1.gcd_ref(&t1)) != 1 {
        return None;
    }
    Some(Rational::from((r1, t1)))
}

pub fn solve_ground_state(h: &Hamiltonian) -> Result<GroundState> {
    let dim = h.dim();
    let mut used: Vec<(u64, Vec<u64>)> = Vec::new();
    let mut pivots: Option<Vec<usize>> = None;
    for &p in &PRIMES {
        let (piv, v) = kernel_mod_p(h, p);
        match v {
            Some(v) => {
                if let Some(prev) = &pivots {
                    if *prev != piv {
                        // inconsistent pivot structure: one prime hit a bad
                        // reduction, start over with this one discarded
                        continue;
                    }
                } else {
                    pivots = Some(piv);
                }
                used.push((p, v));
                if used.len() == 2 {
                    break;
                }
            }
            None => {
                if piv.len() > dim - 1 {
                    return Err(Error::KernelDefect { rank: piv.len(), dim });
                }
                // nullity > 1 mod p can be a bad prime; try the next
                continue;
            }
        }
    }
    if used.len() < 2 {
        return Err(Error::GroundStateDefect("no two primes gave a rank dim-1 reduction".into()));
    }

    // Garner CRT on each coordinate, then rational reconstruction.
    let (p1, v1) = &used[0];
    let (p2, v2) = &used[1];
    let m = Integer::from(*p1) * Integer::from(*p2);
    let inv_p1_mod_p2 = invmod(*p1 % *p2, *p2);
    let mut rat = Vec::with_capacity(dim);
    for c in 0..dim {
        let a = v1[c];
        let b = v2[c];
        let diff = (b + *p2 - a % *p2) % *p2;
        let k = mulmod(diff, inv_p1_mod_p2, *p2);
        let x = Integer::from(a) + Integer::from(*p1) * Integer::from(k);
        let q = rational_reconstruct(&x, &m).ok_or_else(|| {
            Error::GroundStateDefect(format!("rational reconstruction failed at coordinate {c}"))
        })?;
        rat.push(q);
    }

    // clear denominators, reduce to coprime integers, fix the overall sign
    let mut den_lcm = Integer::from(1);
    for q in &rat {
        den_lcm.lcm_mut(q.denom());
    }
    let mut psi: Vec<Integer> = rat
        .iter()
        .map(|q| Integer::from(q.numer() * &den_lcm) / q.denom())
        .collect();
    let mut g = Integer::ZERO;
    for v in &psi {
        g.gcd_mut(v);
    }
    if g.cmp0() == std::cmp::Ordering::Equal {
        return Err(Error::GroundStateDefect("kernel vector is zero".into()));
    }
    for v in &mut psi {
        v.div_exact_mut(&g);
    }
    let neg = psi.iter().filter(|v| v.cmp0() == std::cmp::Ordering::Less).count();
    if neg == dim {
        for v in &mut psi {
            *v = -v.clone();
        }
    } else if neg > 0 {
        return Err(Error::GroundStateDefect("kernel vector has mixed signs".into()));
    }
    if psi.iter().any(|v| v.cmp0() != std::cmp::Ordering::Greater) {
        return Err(Error::GroundStateDefect("kernel vector has a zero component".into()));
    }

    // exact certification: H psi = 0 over the integers, smallest component 1
    let hv = h.apply(&psi);
    if hv.iter().any(|v| v.cmp0() != std::cmp::Ordering::Equal) {
        return Err(Error::GroundStateDefect("H psi != 0 after reconstruction".into()));
    }
    let min = psi.iter().min().expect("nonempty");
    if *min != 1 {
        return Err(Error::GroundStateDefect(format!("smallest component is {min}, expected 1")));
    }
    let z = psi.iter().fold(Integer::ZERO, |acc, v| acc + v);
    Ok(GroundState { kind: h.kind, l: h.l, psi, z })
}

/// Assembles the generating function from the ground state: coefficient k
/// collects the components of patterns that close k loops against alpha_0.
pub fn genfun_oracle(kind: BoundaryKind, l: usize) -> Result<GenFun> {
    genfun_oracle_capped(kind, l, DEFAULT_SIZE_CAP)
}

pub fn genfun_oracle_capped(kind: BoundaryKind, l: usize, cap: usize) -> Result<GenFun> {
    let h = build_hamiltonian_capped(kind, l, cap)?;
    let gs = solve_ground_state(&h)?;
    let mut coeffs = vec![Integer::ZERO; l / 2 + 1];
    for (p, psi) in h.basis.iter().zip(&gs.psi) {
        coeffs[p.loop_count()] += psi;
    }
    Ok(GenFun { kind, l, coeffs, z: gs.z })
}
