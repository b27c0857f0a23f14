//! SVG drawing of the fundamental domain with the table points marked.

use jinverse::special::SpecialValueEntry;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;
pub const RE_RANGE: (f64, f64) = (-1.5, 1.5);
pub const IM_MAX: f64 = 4.5;

/// Pixels per unit, equal on both axes so the arc stays circular.
const SCALE: f64 = 120.0;
const BOTTOM: f64 = 558.0;
const MARKER_RADIUS: f64 = 4.0;

pub fn to_px(re: f64, im: f64) -> (f64, f64) {
    (WIDTH / 2.0 + re * SCALE, BOTTOM - im * SCALE)
}

pub fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Figure label for a table descriptor: `1/2 + √−2` is written `√−2 + 1/2`.
pub fn marker_label(descriptor: &str) -> String {
    match descriptor.strip_prefix("1/2 + ") {
        Some(rest) => format!("{rest} + 1/2"),
        None => descriptor.to_string(),
    }
}

enum Anchor {
    Left,
    Right,
    BelowLeft,
    BelowRight,
}

fn anchor_for(re: f64) -> Anchor {
    if re.abs() < 1e-12 {
        Anchor::Left
    } else if (re - 0.5).abs() < 1e-12 {
        Anchor::Right
    } else if re < 0.25 {
        Anchor::BelowLeft
    } else {
        Anchor::BelowRight
    }
}

fn fmt_px(v: f64) -> String {
    let r = (v * 100.0).round() / 100.0;
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r}")
    }
}

/// Real-axis ticks with the text row of their label.
const REAL_TICKS: [(f64, &str, u8); 11] = [
    (-1.5, "−3/2", 0),
    (-1.0, "−1", 0),
    (-std::f64::consts::FRAC_1_SQRT_2, "−√2/2", 2),
    (-0.577_350_269_189_625_8, "−√3/3", 1),
    (-0.5, "−1/2", 0),
    (0.0, "0", 0),
    (0.5, "1/2", 0),
    (0.577_350_269_189_625_8, "√3/3", 1),
    (std::f64::consts::FRAC_1_SQRT_2, "√2/2", 2),
    (1.0, "1", 0),
    (1.5, "3/2", 0),
];

pub fn render(entries: &[SpecialValueEntry]) -> String {
    let mut svg = String::new();
    let w = |svg: &mut String, line: String| {
        svg.push_str(&line);
        svg.push('\n');
    };
    w(
        &mut svg,
        r#"<?xml version="1.0" encoding="UTF-8"?>"#.to_string(),
    );
    w(
        &mut svg,
        format!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
        ),
    );
    w(
        &mut svg,
        "<title>Fundamental domain of SL(2, Z) with special points of j</title>".to_string(),
    );
    w(
        &mut svg,
        concat!(
            "<style>",
            ".axis{stroke:#000;stroke-width:1}",
            ".circle{fill:none;stroke:#999;stroke-width:1;stroke-dasharray:4 3}",
            ".arc,.wall{fill:none;stroke:#000;stroke-width:2}",
            ".tick{stroke:#000;stroke-width:1}",
            ".marker{fill:#c00;stroke:#000;stroke-width:0.5}",
            ".marker.offscale{fill:#fff;stroke:#c00;stroke-width:1.5}",
            "text{font-family:sans-serif;font-size:11px}",
            "</style>"
        )
        .to_string(),
    );

    // Axes.
    let (x_lo, y0) = to_px(RE_RANGE.0, 0.0);
    let (x_hi, _) = to_px(RE_RANGE.1, 0.0);
    let (xc, y_top) = to_px(0.0, IM_MAX);
    w(
        &mut svg,
        format!(
            r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt_px(x_lo),
            fmt_px(y0),
            fmt_px(x_hi),
            fmt_px(y0)
        ),
    );
    w(
        &mut svg,
        format!(
            r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt_px(xc),
            fmt_px(y0),
            fmt_px(xc),
            fmt_px(y_top)
        ),
    );
    for (re, label, row) in REAL_TICKS {
        let (x, y) = to_px(re, 0.0);
        let dy = 16.0 + 12.0 * f64::from(row);
        w(
            &mut svg,
            format!(
                r#"<line class="tick" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                fmt_px(x),
                fmt_px(y),
                fmt_px(x),
                fmt_px(y + dy - 10.0)
            ),
        );
        w(
            &mut svg,
            format!(
                r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
                fmt_px(x),
                fmt_px(y + dy),
                escape(label)
            ),
        );
    }
    for im in 1..=4 {
        let (x, y) = to_px(RE_RANGE.0, f64::from(im));
        w(
            &mut svg,
            format!(
                r#"<line class="tick" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                fmt_px(x),
                fmt_px(y),
                fmt_px(x + 5.0),
                fmt_px(y)
            ),
        );
        w(
            &mut svg,
            format!(
                r#"<text x="{}" y="{}" text-anchor="end">{im}i</text>"#,
                fmt_px(x - 4.0),
                fmt_px(y + 4.0)
            ),
        );
    }

    // Unit circle, then the domain boundary on top of it.
    let (left, _) = to_px(-1.0, 0.0);
    let (right, _) = to_px(1.0, 0.0);
    w(
        &mut svg,
        format!(
            r#"<path class="circle" d="M {} {} A {SCALE} {SCALE} 0 0 1 {} {}"/>"#,
            fmt_px(left),
            fmt_px(y0),
            fmt_px(right),
            fmt_px(y0)
        ),
    );
    let foot = 3f64.sqrt() / 2.0;
    let (ax, ay) = to_px(-0.5, foot);
    let (bx, by) = to_px(0.5, foot);
    w(
        &mut svg,
        format!(
            r#"<path class="arc" d="M {} {} A {SCALE} {SCALE} 0 0 1 {} {}"/>"#,
            fmt_px(ax),
            fmt_px(ay),
            fmt_px(bx),
            fmt_px(by)
        ),
    );
    for re in [-0.5, 0.5] {
        let (x1, y1) = to_px(re, foot);
        let (x2, y2) = to_px(re, IM_MAX);
        w(
            &mut svg,
            format!(
                r#"<line class="wall" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                fmt_px(x1),
                fmt_px(y1),
                fmt_px(x2),
                fmt_px(y2)
            ),
        );
    }

    // Markers; rows above the window are pinned just below the top edge,
    // highest Im first.
    let mut off_scale: Vec<&SpecialValueEntry> =
        entries.iter().filter(|e| e.tau.im() > IM_MAX).collect();
    off_scale.sort_by(|a, b| b.tau.im().total_cmp(&a.tau.im()));
    for e in entries {
        let label = marker_label(&e.tau_descriptor);
        let pinned = off_scale
            .iter()
            .position(|o| o.order_index == e.order_index);
        let (im, class, text) = match pinned {
            Some(k) => (
                IM_MAX - 0.15 * (k as f64 + 0.5),
                "marker offscale",
                format!("{label} (off-scale, Im = {:.3})", e.tau.im()),
            ),
            None => (e.tau.im(), "marker", label),
        };
        let (x, y) = to_px(e.tau.re(), im);
        w(
            &mut svg,
            format!(
                r#"<circle class="{class}" cx="{}" cy="{}" r="{MARKER_RADIUS}" data-order="{}"/>"#,
                fmt_px(x),
                fmt_px(y),
                e.order_index
            ),
        );
        let (tx, ty, anchor) = match anchor_for(e.tau.re()) {
            Anchor::Left => (x - 8.0, y + 4.0, "end"),
            Anchor::Right => (x + 8.0, y + 4.0, "start"),
            Anchor::BelowLeft => (x - 4.0, y + 24.0, "end"),
            Anchor::BelowRight => (x + 2.0, y + 36.0, "start"),
        };
        w(
            &mut svg,
            format!(
                r#"<text x="{}" y="{}" text-anchor="{anchor}">{}</text>"#,
                fmt_px(tx),
                fmt_px(ty),
                escape(&text)
            ),
        );
    }
    w(&mut svg, "</svg>".to_string());
    svg
}
