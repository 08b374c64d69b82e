//! Hand-rolled SVG scatter plots of aggregate means with a fitted line.
//! No plotting dependency; the output is a standalone file with axes, tick
//! labels, one circle marker per grid entry and exactly one path element for
//! the fitted line (axes and ticks are line elements).

use crate::experiments::{AggregateRow, FitModel, FitResult};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 440.0;
const MARGIN_L: f64 = 70.0;
const MARGIN_R: f64 = 25.0;
const MARGIN_T: f64 = 40.0;
const MARGIN_B: f64 = 55.0;

pub fn render_fit_svg(rows: &[AggregateRow], fit: &FitResult, title: &str) -> String {
    // Transformed coordinates matching the fit: log-log for power/polylog,
    // semilog for the log model.
    let coords: Vec<(f64, f64, u64)> = rows
        .iter()
        .map(|r| {
            let x = (r.n as f64).ln();
            let y = match fit.model {
                FitModel::Log => r.mean,
                _ => r.mean.max(1e-300).ln(),
            };
            (x, y, r.n)
        })
        .collect();
    let predict = |x: f64| match fit.model {
        FitModel::Power => fit.a.ln() + fit.b * x,
        FitModel::Log => fit.a + fit.b * x,
        FitModel::Polylog => fit.a.ln() + fit.b * x.ln(),
    };

    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y, _) in &coords {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y).min(predict(x));
        ymax = ymax.max(y).max(predict(x));
    }
    if xmax == xmin {
        xmax = xmin + 1.0;
    }
    if ymax == ymin {
        ymax = ymin + 1.0;
    }
    let pad = 0.06 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    let plot_w = WIDTH - MARGIN_L - MARGIN_R;
    let plot_h = HEIGHT - MARGIN_T - MARGIN_B;
    let px = |x: f64| MARGIN_L + (x - xmin) / (xmax - xmin) * plot_w;
    let py = |y: f64| MARGIN_T + (ymax - y) / (ymax - ymin) * plot_h;

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    s.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    s.push_str(&format!(
        "<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"14\">{}</text>\n",
        WIDTH / 2.0,
        xml_escape(title)
    ));

    // Axes.
    let (x0, y0) = (MARGIN_L, MARGIN_T + plot_h);
    s.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{}\" y2=\"{y0}\" stroke=\"black\"/>\n",
        MARGIN_L + plot_w
    ));
    s.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{MARGIN_T}\" stroke=\"black\"/>\n"
    ));

    // X ticks at the n values.
    for &(x, _, n) in &coords {
        let tx = px(x);
        s.push_str(&format!(
            "<line x1=\"{tx}\" y1=\"{y0}\" x2=\"{tx}\" y2=\"{}\" stroke=\"black\"/>\n",
            y0 + 5.0
        ));
        s.push_str(&format!(
            "<text x=\"{tx}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
             font-size=\"10\">{n}</text>\n",
            y0 + 18.0
        ));
    }
    // A few y ticks.
    for i in 0..=4 {
        let y = ymin + (ymax - ymin) * i as f64 / 4.0;
        let ty = py(y);
        s.push_str(&format!(
            "<line x1=\"{}\" y1=\"{ty}\" x2=\"{x0}\" y2=\"{ty}\" stroke=\"black\"/>\n",
            x0 - 5.0
        ));
        s.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-family=\"sans-serif\" \
             font-size=\"10\">{:.3}</text>\n",
            x0 - 8.0,
            ty + 3.0,
            y
        ));
    }
    let y_label = match fit.model {
        FitModel::Log => "mean",
        _ => "ln mean",
    };
    s.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"12\">n (ln scale)</text>\n",
        MARGIN_L + plot_w / 2.0,
        HEIGHT - 12.0
    ));
    s.push_str(&format!(
        "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"12\" transform=\"rotate(-90 16 {})\">{y_label}</text>\n",
        MARGIN_T + plot_h / 2.0,
        MARGIN_T + plot_h / 2.0
    ));

    // The fitted line: the single path element.
    s.push_str(&format!(
        "<path d=\"M {:.2} {:.2} L {:.2} {:.2}\" stroke=\"#c0392b\" fill=\"none\" \
         stroke-width=\"1.5\"/>\n",
        px(xmin),
        py(predict(xmin).clamp(ymin, ymax)),
        px(xmax),
        py(predict(xmax).clamp(ymin, ymax)),
    ));

    // Markers.
    for &(x, y, _) in &coords {
        s.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"#2c3e50\"/>\n",
            px(x),
            py(y)
        ));
    }
    s.push_str("</svg>\n");
    s
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_path_and_one_marker_per_row() {
        let rows: Vec<AggregateRow> = [(64u64, 4.0), (256, 6.3), (1024, 10.1)]
            .iter()
            .map(|&(n, mean)| AggregateRow {
                n,
                trials: 10,
                mean,
                stddev: 0.5,
                stderr: 0.16,
                min: mean - 1.0,
                max: mean + 1.0,
            })
            .collect();
        let fit = crate::experiments::fit(&rows, FitModel::Power).unwrap();
        let svg = render_fit_svg(&rows, &fit, "hull_vertices, disk");
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg.matches("<circle").count(), rows.len());
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
