use rug::Rational;
use tlbe_asymp::figures::{reproduce_figure, FigureId, FitOptions};

fn main() {
    for fig in [FigureId::RefldataEven, FigureId::RefldataOdd] {
        for xr in [(0i64,1u64), (1,2), (2,1), (-9,10), (-2,1)] {
            let x = Rational::from(xr);
            let opts = FitOptions::recommended(fig.kind(), &x);
            let rows = reproduce_figure(fig, &[x.clone()], &opts).unwrap();
            let r = &rows[0];
            println!("{:14} x={:>5} terms={} dev={:.3e} stab={:.2e}", fig.tag(), x.to_string(), opts.basis_terms, r.deviation.to_f64(), r.stability.to_f64());
        }
    }
}
