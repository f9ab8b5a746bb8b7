//! The `check` subcommand: exact verification suites with one summary line
//! each. Proved-identity failures are fatal; conjectured-identity failures
//! are reported and only fail the run under --strict-conjectures.

use crate::{CheckScope, Output};
use anyhow::Result;
use rug::Rational;
use tlbe_core::closedform::{self, IdentityStatus};
use tlbe_core::dyck::{dyck_ribbons, signed_tile_sum, to_dyck};
use tlbe_core::genfun::GenFun;
use tlbe_core::groundstate::genfun_oracle;
use tlbe_core::pattern::{BoundaryKind, LinkPattern};
use tlbe_core::reference;

pub fn run_checks(scope: CheckScope, strict: bool, max_l: usize, out: &mut Output) -> Result<bool> {
    let mut all_ok = true;
    let run_tables = matches!(scope, CheckScope::Tables | CheckScope::All);
    let run_idents = matches!(scope, CheckScope::Identities | CheckScope::All);
    let run_lemma = matches!(scope, CheckScope::Lemma | CheckScope::All);
    let run_ode = matches!(scope, CheckScope::Ode | CheckScope::All);

    if run_tables {
        let mut ok = true;
        let mut cells = 0usize;
        for kind in BoundaryKind::ALL {
            for row in reference::rows(kind) {
                if row.l > max_l.max(8) {
                    continue;
                }
                let oracle = genfun_oracle(kind, row.l)?;
                ok &= table_row_matches(&oracle, row, &mut cells);
                if kind != BoundaryKind::PeriodicOdd {
                    let closed = closedform::genfun_closed(kind, row.l)?;
                    ok &= table_row_matches(&closed, row, &mut cells);
                }
            }
        }
        out.emit(&format!("tables     : {} ({cells} cells, both paths)\n", pass(ok)))?;
        all_ok &= ok;
    }

    if run_idents {
        let mut proved_ok = true;
        let mut conj_ok = true;
        let max_n_closed = (max_l / 2).max(4);
        for kind in BoundaryKind::ALL {
            let max_n = if kind == BoundaryKind::PeriodicOdd { 5.min(max_n_closed) } else { max_n_closed };
            for n in 1..=max_n {
                for c in closedform::check_special_values(kind, n)? {
                    match c.status {
                        IdentityStatus::Proved => proved_ok &= c.pass,
                        IdentityStatus::Conjectured => conj_ok &= c.pass,
                    }
                    if !c.pass {
                        out.emit(&format!(
                            "  identity failure [{:?}] {} n={n}: {} != {}\n",
                            c.status, c.name, c.lhs, c.rhs
                        ))?;
                    }
                }
            }
        }
        out.emit(&format!("identities : proved {}, conjectured {}\n", pass(proved_ok), pass(conj_ok)))?;
        all_ok &= proved_ok;
        if strict {
            all_ok &= conj_ok;
        }
    }

    if run_lemma {
        let mut ok = true;
        let mut count = 0usize;
        for kind in [BoundaryKind::ReflectingEven, BoundaryKind::ReflectingOdd, BoundaryKind::PeriodicEven] {
            for l in (kind.min_size()..=max_l).step_by(2) {
                let n = (l / 2) as i64;
                for p in LinkPattern::enumerate(kind, l)? {
                    let d = to_dyck(&p)?;
                    let k = p.loop_count() as i64;
                    let ribbons = dyck_ribbons(&d) as i64;
                    let ribbon_k = if l % 2 == 0 { ribbons } else { ribbons - 1 };
                    ok &= k == p.loops_right_openings() as i64
                        && k == n - signed_tile_sum(&d)
                        && k == ribbon_k;
                    count += 1;
                }
            }
        }
        out.emit(&format!("lemma      : {} (three-way loop count on {count} patterns)\n", pass(ok)))?;
        all_ok &= ok;
    }

    if run_ode {
        let mut ok = true;
        for n in 1..=50usize {
            ok &= closedform::ode_residual(n).iter().all(|c| c.cmp0() == std::cmp::Ordering::Equal);
        }
        let xs: Vec<Rational> = vec![
            Rational::from(1),
            Rational::from(-1),
            Rational::from(2),
            Rational::from((1, 2)),
            Rational::from((-7, 3)),
        ];
        for n in 1..=50usize {
            let g = closedform::genfun_per_even(n);
            for x in &xs {
                ok &= closedform::hypergeom_form(n, x) == g.eval_tilde(x);
            }
        }
        out.emit(&format!("ode        : {} (residual zero and series agreement, n <= 50)\n", pass(ok)))?;
        all_ok &= ok;
    }

    out.emit(&format!("overall    : {}\n", pass(all_ok)))?;
    Ok(all_ok)
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn table_row_matches(g: &GenFun, row: &reference::RefRow, cells: &mut usize) -> bool {
    let mut ok = g.z == *&rug::Integer::from(row.z);
    for (k, want) in row.coeffs.iter().enumerate() {
        ok &= *g.coeff(k) == rug::Integer::from(*want);
        *cells += 1;
    }
    let zf = |x: Rational| g.eval(&x) * Rational::from(&g.z);
    ok &= zf(Rational::from(-1)) == Rational::from(row.zf_m1);
    ok &= zf(Rational::from(2)) == Rational::from(row.zf_2);
    *cells += 3;
    ok
}
