//! Embedded mathematical constants at 120 significant digits, with start-up
//! self-tests based on the Gamma reflection formula so that a transcription
//! error cannot slip through silently.

use crate::{Error, Result};
use rug::Float;
use std::sync::OnceLock;

/// Highest precision the embedded literals support (120 decimal digits).
pub const LITERAL_PREC_BITS: u32 = 396;

const GLAISHER: &str = "1.282427129100622636875342568869791727767688927325001192063740021740406308858826461129736491958202374394206461203990007489";
const GAMMA_1_3: &str = "2.678938534707747633655692940974677644128689377957301100950428327590417610167743819540982889041188789419159049200072263336";
const GAMMA_2_3: &str = "1.354117939426400416945288028154513785519327266056793698394022467963782965401742541675834147952972911106434823610033058854";
const GAMMA_1_6: &str = "5.566316001780235204250096895207726111398799114872853461616744626322907502817802305503389653621021754659819633338468834778";
const GAMMA_5_6: &str = "1.128787029908125961260901090258842013326787441664755451752083514333770510987503987055400904438409757465141489563209219003";

fn parse(prec: u32, lit: &str) -> Float {
    assert!(prec <= LITERAL_PREC_BITS, "requested precision exceeds the embedded literals");
    Float::with_val(prec, Float::parse(lit).expect("well-formed literal"))
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, rug::float::Constant::Pi)
}

/// Glaisher-Kinkelin constant A.
pub fn glaisher(prec: u32) -> Float {
    self_test_once();
    parse(prec, GLAISHER)
}

pub fn gamma_third(prec: u32) -> Float {
    self_test_once();
    parse(prec, GAMMA_1_3)
}

pub fn gamma_sixth(prec: u32) -> Float {
    self_test_once();
    parse(prec, GAMMA_1_6)
}

/// Reflection-formula check of the Gamma literals: Gamma(z) Gamma(1-z) =
/// pi / sin(pi z) at z = 1/3 and z = 1/6, evaluated at full literal
/// precision. Returns the worst residual.
pub fn self_test() -> Result<Float> {
    let prec = LITERAL_PREC_BITS;
    let pi = pi(prec);
    let mut worst = Float::with_val(prec, 0);
    for (a, b, z_den) in [(GAMMA_1_3, GAMMA_2_3, 3u32), (GAMMA_1_6, GAMMA_5_6, 6u32)] {
        let lhs = parse(prec, a) * parse(prec, b);
        let rhs = pi.clone() / (pi.clone() / z_den).sin();
        let resid = (lhs - rhs).abs();
        if resid > worst {
            worst = resid;
        }
    }
    // 120 digits should agree to ~1e-118; anything above 1e-100 means a typo
    if worst.clone().log10() > -100 {
        return Err(Error::Domain(format!("Gamma literal self-test failed: residual {worst}")));
    }
    Ok(worst)
}

fn self_test_once() {
    static TESTED: OnceLock<()> = OnceLock::new();
    TESTED.get_or_init(|| {
        self_test().expect("constant literals are internally consistent");
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_pass_reflection_identities() {
        let worst = self_test().unwrap();
        assert!(worst.clone().log10() < -110, "residual {worst}");
    }

    #[test]
    fn glaisher_matches_low_precision_value() {
        let a = glaisher(64).to_f64();
        assert!((a - 1.2824271291).abs() < 1e-9);
    }
}
