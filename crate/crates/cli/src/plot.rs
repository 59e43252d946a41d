//! SVG rendering of a two-objective decision in normalized coordinates.

use std::fmt::Write as _;

use knee_mcdm::{Decision, NormalizedFront};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 56.0;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PlotError {
    #[error("plots need exactly two objectives, the front has {0}")]
    Dimensions(usize),
}

struct Frame {
    x0: f64,
    y0: f64,
    span: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) / self.span * (SIZE - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        SIZE - MARGIN - (y - self.y0) / self.span * (SIZE - 2.0 * MARGIN)
    }
}

/// Scatter of the normalized front with the ideal vector, the rhombus
/// `||y - y_opt||_1 = c_min` and the winner class highlighted.
///
/// Coordinates are printed with three decimals so the output is stable.
pub fn render_svg(nf: &NormalizedFront<'_>, decision: &Decision) -> Result<String, PlotError> {
    if nf.dims() != 2 {
        return Err(PlotError::Dimensions(nf.dims()));
    }
    let ideal = [nf.y_opt()[0], nf.y_opt()[1]];
    let c = decision.c_min_mmd;
    let rhombus = [
        [ideal[0] + c, ideal[1]],
        [ideal[0], ideal[1] + c],
        [ideal[0] - c, ideal[1]],
        [ideal[0], ideal[1] - c],
    ];
    let points: Vec<[f64; 2]> = (0..nf.len()).map(|r| [nf.y(r)[0], nf.y(r)[1]]).collect();

    // Square frame around everything drawn, with 5% padding.
    let all = points.iter().chain(&rhombus).chain(std::iter::once(&ideal));
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in all {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-12) * 1.1;
    let frame = Frame {
        x0: (lo[0] + hi[0] - span) / 2.0,
        y0: (lo[1] + hi[1] - span) / 2.0,
        span,
    };

    let names = nf.front().objective_names();
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (left, right, top, bottom) = (MARGIN, SIZE - MARGIN, MARGIN, SIZE - MARGIN);
    let _ = writeln!(
        svg,
        r##"<g class="axes" stroke="#333"><line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}"/><line x1="{left}" y1="{bottom}" x2="{left}" y2="{top}"/></g>"##
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.3}" y="{:.3}" text-anchor="middle">{} / L</text>"#,
        SIZE / 2.0,
        SIZE - 16.0,
        escape(&names[0])
    );
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{:.3}" text-anchor="middle" transform="rotate(-90 16 {:.3})">{} / L</text>"#,
        SIZE / 2.0,
        SIZE / 2.0,
        escape(&names[1])
    );
    for (value, anchor) in [(frame.x0, "start"), (frame.x0 + span, "end")] {
        let _ = writeln!(
            svg,
            r#"<text x="{:.3}" y="{:.3}" text-anchor="{anchor}">{value:.3}</text>"#,
            frame.px(value),
            bottom + 16.0
        );
    }
    for value in [frame.y0, frame.y0 + span] {
        let _ = writeln!(
            svg,
            r#"<text x="{:.3}" y="{:.3}" text-anchor="end">{value:.3}</text>"#,
            left - 6.0,
            frame.py(value) + 4.0
        );
    }

    let corners: Vec<String> = rhombus
        .iter()
        .map(|p| format!("{:.3},{:.3}", frame.px(p[0]), frame.py(p[1])))
        .collect();
    let _ = writeln!(
        svg,
        r##"<polygon class="rhombus" points="{}" fill="none" stroke="#1f77b4" stroke-dasharray="6 4"/>"##,
        corners.join(" ")
    );

    let ids = nf.front().solutions().iter().map(|s| s.id.as_str());
    for (p, id) in points.iter().zip(ids) {
        let knee = decision.winner.iter().any(|w| w == id);
        let (class, r, fill) = if knee {
            ("knee", 5.0, "#d62728")
        } else {
            ("solution", 3.0, "#7f7f7f")
        };
        let _ = writeln!(
            svg,
            r#"<circle class="{class}" cx="{:.3}" cy="{:.3}" r="{r}" fill="{fill}"><title>{}</title></circle>"#,
            frame.px(p[0]),
            frame.py(p[1]),
            escape(id)
        );
    }
    let (ix, iy) = (frame.px(ideal[0]), frame.py(ideal[1]));
    let _ = writeln!(
        svg,
        r##"<path class="ideal" d="M{:.3},{:.3}L{:.3},{:.3}M{:.3},{:.3}L{:.3},{:.3}" stroke="#2ca02c" stroke-width="2"><title>y_opt</title></path>"##,
        ix - 5.0,
        iy - 5.0,
        ix + 5.0,
        iy + 5.0,
        ix - 5.0,
        iy + 5.0,
        ix + 5.0,
        iy - 5.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.3}" y="24" text-anchor="middle">c_min = {c:.6}, knee: {}</text>"#,
        SIZE / 2.0,
        escape(&decision.winner.join(", "))
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
