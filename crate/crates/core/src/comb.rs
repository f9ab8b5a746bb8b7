//! Alternating-sign-matrix counting families, as exact product formulas.
//!
//! - [`asm`]: A_n, n x n alternating sign matrices
//! - [`asm_refined`]: A_{n,k}, ASMs with the top-row 1 in column k
//! - [`asm_vertical`]: AV_{2n+1}, vertically symmetric ASMs
//! - [`cstcpp`]: C_{2n}, cyclically symmetric transpose complement plane partitions
//! - [`asm_vh`]: AVH_{2n+1}, vertically and horizontally symmetric ASMs
//! - [`asm_half_turn`]: AHT_m, half-turn symmetric ASMs (either parity)
//!
//! These are the normalizations and special values of the boundary entropy
//! generating functions. All values are exact `rug::Integer`s; the divisions
//! in the product formulas are checked to be exact.

use crate::{Error, Result};
use rug::{Integer, Rational};

fn fact(k: u64) -> Integer {
    Integer::factorial(k as u32).into()
}

pub fn binom(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::ZERO;
    }
    Integer::binomial_u(n as u32, k as u32).into()
}

/// Exact division helper; panics if the division is not exact, which would
/// indicate a transcribed formula error.
fn div_exact(num: Integer, den: &Integer) -> Integer {
    debug_assert!(num.is_divisible(den), "inexact division in product formula");
    num / den
}

/// A_n = prod_{j=0}^{n-1} (3j+1)!/(n+j)!
pub fn asm(n: u64) -> Integer {
    let mut num = Integer::from(1);
    let mut den = Integer::from(1);
    for j in 0..n {
        num *= fact(3 * j + 1);
        den *= fact(n + j);
    }
    div_exact(num, &den)
}

/// A_{n,k} = binom(n+k-2, k-1) (2n-k-1)!/(n-k)! (n-1)!/(2n-2)! A_{n-1}
pub fn asm_refined(n: u64, k: u64) -> Result<Integer> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::CombDomain(format!("A_{{n,k}} needs 1 <= k <= n, got n={n} k={k}")));
    }
    let num = binom(n + k - 2, (k - 1) as i64) * fact(2 * n - k - 1) * fact(n - 1) * asm(n - 1);
    let den = fact(n - k) * fact(2 * n - 2);
    Ok(div_exact(num, &den))
}

/// AV_{2n+1} = prod_{j=0}^{n-1} (3j+2) (6j+3)!(2j+1)! / ((4j+3)!(4j+2)!),
/// takes the odd size 2n+1 as index.
pub fn asm_vertical(size: u64) -> Result<Integer> {
    if size % 2 == 0 {
        return Err(Error::CombDomain(format!("AV is defined for odd sizes, got {size}")));
    }
    let n = (size - 1) / 2;
    let mut num = Integer::from(1);
    let mut den = Integer::from(1);
    for j in 0..n {
        num *= Integer::from(3 * j + 2) * fact(6 * j + 3) * fact(2 * j + 1);
        den *= fact(4 * j + 3) * fact(4 * j + 2);
    }
    Ok(div_exact(num, &den))
}

/// C_{2n} = prod_{j=0}^{n-1} (3j+1) (6j)!(2j)! / ((4j)!(4j+1)!),
/// takes the even size 2n as index.
pub fn cstcpp(size: u64) -> Result<Integer> {
    if size % 2 == 1 {
        return Err(Error::CombDomain(format!("C is defined for even sizes, got {size}")));
    }
    let n = size / 2;
    let mut num = Integer::from(1);
    let mut den = Integer::from(1);
    for j in 0..n {
        num *= Integer::from(3 * j + 1) * fact(6 * j) * fact(2 * j);
        den *= fact(4 * j) * fact(4 * j + 1);
    }
    Ok(div_exact(num, &den))
}

/// AVH_{2n+1} = AV_{2 floor(n/2) + 1} * C_{2 floor((n+1)/2)}
pub fn asm_vh(size: u64) -> Result<Integer> {
    if size % 2 == 0 {
        return Err(Error::CombDomain(format!("AVH is defined for odd sizes, got {size}")));
    }
    let n = (size - 1) / 2;
    Ok(asm_vertical(2 * (n / 2) + 1)? * cstcpp(2 * ((n + 1) / 2))?)
}

/// AHT_m for either parity:
/// AHT_{2n} = prod_{j=0}^{n-1} (3j)!(3j+2)!/((n+j)!)^2,
/// AHT_{2n+1} = n!/(3n+2)! prod_{j=0}^{n} (3j)!(3j+2)!/((n+j)!)^2.
pub fn asm_half_turn(size: u64) -> Result<Integer> {
    if size < 1 {
        return Err(Error::CombDomain("AHT needs size >= 1".into()));
    }
    if size % 2 == 0 {
        let n = size / 2;
        let mut num = Integer::from(1);
        let mut den = Integer::from(1);
        for j in 0..n {
            num *= fact(3 * j) * fact(3 * j + 2);
            den *= fact(n + j).square();
        }
        Ok(div_exact(num, &den))
    } else {
        let n = (size - 1) / 2;
        let mut num = fact(n);
        let mut den = fact(3 * n + 2);
        for j in 0..=n {
            num *= fact(3 * j) * fact(3 * j + 2);
            den *= fact(n + j).square();
        }
        Ok(div_exact(num, &den))
    }
}

/// The six families behind one dispatching call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Asm,
    AsmRefined,
    AsmVertical,
    Cstcpp,
    AsmVh,
    AsmHalfTurn,
}

/// Uniform entry point: `AsmRefined` takes `[n, k]`, every other family a
/// single index (the families indexed by matrix size take that size).
pub fn comb_number(family: Family, index: &[u64]) -> Result<Integer> {
    let one = |ix: &[u64]| -> Result<u64> {
        if ix.len() == 1 {
            Ok(ix[0])
        } else {
            Err(Error::CombDomain(format!("expected one index, got {ix:?}")))
        }
    };
    match family {
        Family::Asm => Ok(asm(one(index)?)),
        Family::AsmRefined => {
            if index.len() != 2 {
                return Err(Error::CombDomain(format!("A_{{n,k}} takes [n,k], got {index:?}")));
            }
            asm_refined(index[0], index[1])
        }
        Family::AsmVertical => asm_vertical(one(index)?),
        Family::Cstcpp => cstcpp(one(index)?),
        Family::AsmVh => asm_vh(one(index)?),
        Family::AsmHalfTurn => asm_half_turn(one(index)?),
    }
}

/// Catalan numbers through the ballot recursion C_{m+1} = sum C_i C_{m-i};
/// deliberately independent of any product formula, used as an enumeration
/// oracle in tests.
pub fn catalan_table(up_to: usize) -> Vec<Integer> {
    let mut c = vec![Integer::from(1)];
    for m in 0..up_to {
        let mut s = Integer::ZERO;
        for i in 0..=m {
            s += Integer::from(&c[i] * &c[m - i]);
        }
        c.push(s);
    }
    c
}

/// Exact power x^k for rationals with k possibly negative (x nonzero).
pub fn rational_pow(x: &Rational, k: i64) -> Rational {
    let mut r = Rational::from(1);
    let ax = if k >= 0 { x.clone() } else { Rational::from(x.recip_ref()) };
    for _ in 0..k.unsigned_abs() {
        r *= &ax;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let a: Vec<u64> = (1..=7).map(|n| asm(n).to_u64().unwrap()).collect();
        assert_eq!(a, [1, 2, 7, 42, 429, 7436, 218348]);
        let av: Vec<u64> = (0..=6).map(|n| asm_vertical(2 * n + 1).unwrap().to_u64().unwrap()).collect();
        assert_eq!(av, [1, 1, 3, 26, 646, 45885, 9304650]);
        let c: Vec<u64> = (1..=7).map(|n| cstcpp(2 * n).unwrap().to_u64().unwrap()).collect();
        assert_eq!(c, [1, 2, 11, 170, 7429, 920460, 323801820]);
        let aht_even: Vec<u64> = (1..=5).map(|n| asm_half_turn(2 * n).unwrap().to_u64().unwrap()).collect();
        assert_eq!(aht_even, [2, 10, 140, 5544, 622908]);
        let aht_odd: Vec<u64> = (1..=6).map(|n| asm_half_turn(2 * n + 1).unwrap().to_u64().unwrap()).collect();
        assert_eq!(aht_odd, [3, 25, 588, 39204, 7422987, 3994998436]);
        let avh: Vec<u64> = (1..=7).map(|n| asm_vh(2 * n + 1).unwrap().to_u64().unwrap()).collect();
        assert_eq!(avh, [1, 1, 2, 6, 33, 286, 4420]);
    }

    #[test]
    fn refined_row_sums_and_palindromy() {
        for n in 1..=30u64 {
            let mut sum = Integer::ZERO;
            for k in 1..=n {
                let a = asm_refined(n, k).unwrap();
                assert!(a > 0);
                assert_eq!(a, asm_refined(n, n + 1 - k).unwrap(), "A_{{n,k}} palindromy at n={n} k={k}");
                sum += a;
            }
            assert_eq!(sum, asm(n), "row sum at n={n}");
        }
        // boundary columns count once-smaller matrices
        for n in 2..=20u64 {
            assert_eq!(asm_refined(n, 1).unwrap(), asm(n - 1));
        }
    }

    #[test]
    fn domain_errors() {
        assert!(asm_refined(5, 0).is_err());
        assert!(asm_refined(5, 6).is_err());
        assert!(asm_vertical(4).is_err());
        assert!(cstcpp(5).is_err());
        assert!(comb_number(Family::Asm, &[1, 2]).is_err());
    }

    #[test]
    fn dispatch_examples() {
        assert_eq!(comb_number(Family::Asm, &[4]).unwrap(), 42);
        assert_eq!(comb_number(Family::AsmVertical, &[5]).unwrap(), 3);
        assert_eq!(comb_number(Family::AsmHalfTurn, &[7]).unwrap(), 588);
        assert_eq!(comb_number(Family::AsmRefined, &[4, 2]).unwrap(), 14);
    }

    #[test]
    fn catalan_matches_closed_form() {
        let table = catalan_table(12);
        for (n, c) in table.iter().enumerate() {
            let closed = binom(2 * n as u64, n as i64) / Integer::from(n as u64 + 1);
            assert_eq!(*c, closed);
        }
    }
}
