//! Property tests over randomly generated Dyck paths and boundary weights.

use proptest::prelude::*;
use rug::Rational;
use tlbe_core::closedform;
use tlbe_core::dyck::{from_dyck, signed_tile_sum, signed_tile_sum_by_column, to_dyck, DyckPath, Step};
use tlbe_core::pattern::BoundaryKind;

/// Random valid path of the given length via a random balanced shuffle,
/// cyclically rotated to its unique nonnegative representative.
fn arb_path(len: usize) -> impl Strategy<Value = DyckPath> {
    let ups = (len + len % 2) / 2;
    Just(()).prop_perturb(move |_, mut rng| {
        let mut steps: Vec<Step> = (0..len)
            .map(|i| if i < ups { Step::Up } else { Step::Down })
            .collect();
        for i in (1..len).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            steps.swap(i, j);
        }
        // cycle lemma: rotate to the position after the minimum prefix height
        let mut h = 0i64;
        let mut min_h = 0i64;
        let mut cut = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < min_h {
                min_h = h;
                cut = i + 1;
            }
        }
        steps.rotate_left(cut % len.max(1));
        DyckPath::new(steps).expect("rotation yields a valid path")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn path_pattern_roundtrip_even(path in arb_path(16)) {
        let p = from_dyck(&path, BoundaryKind::ReflectingEven).unwrap();
        p.validate().unwrap();
        prop_assert_eq!(to_dyck(&p).unwrap(), path);
    }

    #[test]
    fn path_pattern_roundtrip_odd(path in arb_path(15)) {
        let p = from_dyck(&path, BoundaryKind::ReflectingOdd).unwrap();
        p.validate().unwrap();
        prop_assert_eq!(to_dyck(&p).unwrap(), path);
    }

    #[test]
    fn tile_sum_rules_agree(path in arb_path(20)) {
        prop_assert_eq!(signed_tile_sum(&path), signed_tile_sum_by_column(&path));
    }

    #[test]
    fn per_even_functional_equation(n in 1usize..=12, p in 1i64..=9, q in 1i64..=9) {
        // F(x) = x^{n+1} F(1/x) away from x = 0
        let g = closedform::genfun_per_even(n);
        let x = Rational::from((p, q));
        let inv = Rational::from((q, p));
        let mut pow = Rational::from(1);
        for _ in 0..=n {
            pow *= &x;
        }
        prop_assert_eq!(g.eval(&x), pow * g.eval(&inv));
    }

    #[test]
    fn refl_odd_functional_equation(n in 1usize..=8, p in 1i64..=9, q in 1i64..=9) {
        // F(x) = x^n F(1/x)
        let g = closedform::genfun_refl_odd(n);
        let x = Rational::from((p, q));
        let inv = Rational::from((q, p));
        let mut pow = Rational::from(1);
        for _ in 0..n {
            pow *= &x;
        }
        prop_assert_eq!(g.eval(&x), pow * g.eval(&inv));
    }

    #[test]
    fn hypergeom_equals_reduced_polynomial(n in 1usize..=20, p in -9i64..=9, q in 1i64..=9) {
        let g = closedform::genfun_per_even(n);
        let x = Rational::from((p, q));
        prop_assert_eq!(closedform::hypergeom_form(n, &x), g.eval_tilde(&x));
    }
}
