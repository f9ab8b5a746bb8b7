//! The boundary entropy generating function at finite size, held exactly:
//! Z_L * F_L(x) = sum_k a_k x^k with integer a_k, plus the normalization Z_L.

use crate::pattern::BoundaryKind;
use crate::{Error, Result};
use rug::{Integer, Rational};

/// Exact generating function for one (kind, L). `coeffs[k]` is the integer
/// coefficient of x^k in Z_L F_L(x); the vector always has length n+1 where
/// L = 2n or 2n+1, with zeros outside the attained range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFun {
    pub kind: BoundaryKind,
    pub l: usize,
    pub coeffs: Vec<Integer>,
    pub z: Integer,
}

impl GenFun {
    pub fn n(&self) -> usize {
        self.l / 2
    }

    pub fn coeff(&self, k: usize) -> &Integer {
        &self.coeffs[k]
    }

    /// Exact Horner evaluation of F(x) = (sum_k a_k x^k) / Z.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for a in self.coeffs.iter().rev() {
            acc *= x;
            acc += a;
        }
        acc / Rational::from(&self.z)
    }

    /// Exact evaluation of the reduced function: F with the overall factor
    /// of x removed for even sizes (the x-coefficient at x = 0), F itself
    /// for odd sizes.
    pub fn eval_tilde(&self, x: &Rational) -> Rational {
        if self.l % 2 == 1 {
            return self.eval(x);
        }
        if x.cmp0() == std::cmp::Ordering::Equal {
            return Rational::from((&self.coeffs[1], &self.z));
        }
        self.eval(x) / x.clone()
    }

    /// Renders `a_1 x + a_2 x^2 + ...` skipping zero coefficients.
    pub fn poly_string(&self) -> String {
        let mut parts = Vec::new();
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            let mag = if *a == 1 {
                String::new()
            } else if *a == -1 {
                "-".to_string()
            } else {
                a.to_string()
            };
            let term = match k {
                0 => a.to_string(),
                1 => format!("{mag}x"),
                _ => format!("{mag}x^{k}"),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Plain-text serialization, one key per line, big integers as decimal
    /// strings. Used by the result cache and the CLI `--format txt` output.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("kind = {}\n", self.kind.tag()));
        s.push_str(&format!("L = {}\n", self.l));
        s.push_str(&format!("Z = {}\n", self.z));
        for (k, a) in self.coeffs.iter().enumerate() {
            s.push_str(&format!("a{k} = {a}\n"));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<GenFun> {
        let mut kind = None;
        let mut l = None;
        let mut z = None;
        let mut coeffs: Vec<(usize, Integer)> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::BadGenFunText(format!("missing '=' in {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| Error::BadGenFunText(format!("bad {what}: {value:?}"));
            match key {
                "kind" => kind = Some(BoundaryKind::from_tag(value).ok_or_else(|| bad("kind"))?),
                "L" => l = Some(value.parse::<usize>().map_err(|_| bad("L"))?),
                "Z" => z = Some(value.parse::<Integer>().map_err(|_| bad("Z"))?),
                k if k.starts_with('a') => {
                    let idx: usize = k[1..].parse().map_err(|_| bad("coefficient index"))?;
                    coeffs.push((idx, value.parse::<Integer>().map_err(|_| bad("coefficient"))?));
                }
                other => return Err(Error::BadGenFunText(format!("unknown key {other:?}"))),
            }
        }
        let kind = kind.ok_or_else(|| Error::BadGenFunText("missing kind".into()))?;
        let l = l.ok_or_else(|| Error::BadGenFunText("missing L".into()))?;
        let z = z.ok_or_else(|| Error::BadGenFunText("missing Z".into()))?;
        let mut vec = vec![Integer::ZERO; l / 2 + 1];
        for (idx, a) in coeffs {
            if idx >= vec.len() {
                return Err(Error::BadGenFunText(format!("coefficient index {idx} out of range")));
            }
            vec[idx] = a;
        }
        Ok(GenFun { kind, l, coeffs: vec, z })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> GenFun {
        GenFun {
            kind: BoundaryKind::PeriodicEven,
            l: 6,
            coeffs: vec![0, 2, 3, 2].into_iter().map(Integer::from).collect(),
            z: Integer::from(7),
        }
    }

    #[test]
    fn eval_normalizes() {
        let g = sample();
        assert_eq!(g.eval(&Rational::from(1)), Rational::from(1));
        assert_eq!(g.eval(&Rational::from(2)), Rational::from((32, 7)));
        assert_eq!(g.eval_tilde(&Rational::from(0)), Rational::from((2, 7)));
    }

    #[test]
    fn text_roundtrip() {
        let g = sample();
        assert_eq!(GenFun::from_text(&g.to_text()).unwrap(), g);
        assert!(GenFun::from_text("kind = nonsense\n").is_err());
        assert!(GenFun::from_text("L = 6\nZ = 7\n").is_err());
    }

    #[test]
    fn display_skips_zeros() {
        assert_eq!(sample().poly_string(), "2x + 3x^2 + 2x^3");
    }
}
