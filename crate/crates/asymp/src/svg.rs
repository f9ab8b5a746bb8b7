//! Minimal self-contained SVG scatter/curve plots: axes, tick labels, two
//! closed-form polylines and fitted points. No plotting dependency; the
//! output renders in any browser.

use std::fmt::Write as _;

pub struct Plot {
    pub title: String,
    pub width: f64,
    pub height: f64,
    /// (label, color, samples)
    pub curves: Vec<(String, String, Vec<(f64, f64)>)>,
    /// fitted points
    pub points: Vec<(f64, f64)>,
}

impl Plot {
    pub fn new(title: &str) -> Self {
        Plot {
            title: title.to_string(),
            width: 720.0,
            height: 480.0,
            curves: Vec::new(),
            points: Vec::new(),
        }
    }

    pub fn render(&self) -> String {
        let margin = 56.0;
        let (w, h) = (self.width, self.height);
        let all: Vec<(f64, f64)> = self
            .curves
            .iter()
            .flat_map(|(_, _, c)| c.iter().copied())
            .chain(self.points.iter().copied())
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .collect();
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for (x, y) in &all {
            x0 = x0.min(*x);
            x1 = x1.max(*x);
            y0 = y0.min(*y);
            y1 = y1.max(*y);
        }
        if all.is_empty() {
            x0 = 0.0;
            x1 = 1.0;
            y0 = 0.0;
            y1 = 1.0;
        }
        let pad = |lo: &mut f64, hi: &mut f64| {
            let span = (*hi - *lo).abs().max(1e-12);
            *lo -= 0.06 * span;
            *hi += 0.06 * span;
        };
        pad(&mut x0, &mut x1);
        pad(&mut y0, &mut y1);
        let sx = |x: f64| margin + (x - x0) / (x1 - x0) * (w - 2.0 * margin);
        let sy = |y: f64| h - margin - (y - y0) / (y1 - y0) * (h - 2.0 * margin);

        let mut s = String::new();
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
        );
        let _ = writeln!(s, "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>");
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{}</text>",
            w / 2.0,
            xml_escape(&self.title)
        );
        // frame and ticks
        let _ = writeln!(
            s,
            "<rect x=\"{margin}\" y=\"{margin}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#444\"/>",
            w - 2.0 * margin,
            h - 2.0 * margin
        );
        for i in 0..=5 {
            let fx = x0 + (x1 - x0) * i as f64 / 5.0;
            let fy = y0 + (y1 - y0) * i as f64 / 5.0;
            let _ = writeln!(
                s,
                "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#444\"/>\
                 <text x=\"{0}\" y=\"{3}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{4:.3}</text>",
                sx(fx),
                h - margin,
                h - margin + 5.0,
                h - margin + 18.0,
                fx
            );
            let _ = writeln!(
                s,
                "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"#444\"/>\
                 <text x=\"{3}\" y=\"{4}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{5:.3}</text>",
                sy(fy),
                margin - 5.0,
                margin,
                margin - 8.0,
                sy(fy) + 4.0,
                fy
            );
        }
        // curves
        for (label, color, samples) in &self.curves {
            let pts: Vec<String> = samples
                .iter()
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|(x, y)| format!("{:.2},{:.2}", sx(*x), sy(*y)))
                .collect();
            let _ = writeln!(
                s,
                "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"><title>{}</title></polyline>",
                pts.join(" "),
                xml_escape(label)
            );
        }
        // fitted points
        for (x, y) in &self.points {
            if x.is_finite() && y.is_finite() {
                let _ = writeln!(
                    s,
                    "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3.5\" fill=\"#1f5fbf\" stroke=\"white\"/>",
                    sx(*x),
                    sy(*y)
                );
            }
        }
        // legend
        let mut ly = margin + 14.0;
        for (label, color, _) in &self.curves {
            let _ = writeln!(
                s,
                "<line x1=\"{0}\" y1=\"{ly}\" x2=\"{1}\" y2=\"{ly}\" stroke=\"{color}\" stroke-width=\"2\"/>\
                 <text x=\"{2}\" y=\"{3}\" font-family=\"sans-serif\" font-size=\"12\">{4}</text>",
                margin + 8.0,
                margin + 32.0,
                margin + 38.0,
                ly + 4.0,
                xml_escape(label)
            );
            ly += 16.0;
        }
        s.push_str("</svg>\n");
        s
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_wellformed_document() {
        let mut p = Plot::new("test & demo");
        p.curves.push(("low".into(), "#1f5fbf".into(), vec![(0.0, 0.0), (1.0, 1.0)]));
        p.curves.push(("high".into(), "#bf1f1f".into(), vec![(0.0, 1.0), (1.0, 0.0)]));
        p.points.push((0.5, 0.5));
        let svg = p.render();
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.contains("test &amp; demo"));
    }

    #[test]
    fn empty_plot_still_renders() {
        let svg = Plot::new("empty").render();
        assert!(svg.contains("</svg>"));
    }
}
