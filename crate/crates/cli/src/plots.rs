//! Bar, density and scatter charts on top of the core SVG writer.

use lingdist::stats::DensityCurve;
use lingdist::svg::{self, Anchor, Svg};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 70.0;

/// Maps data coordinates into the plotting area.
struct Axes {
    x_lo: f64,
    x_hi: f64,
    y_lo: f64,
    y_hi: f64,
}

impl Axes {
    fn new(x: (f64, f64), y: (f64, f64)) -> Axes {
        let widen = |(lo, hi): (f64, f64)| {
            if hi > lo {
                (lo, hi)
            } else {
                (lo - 0.5, hi + 0.5)
            }
        };
        let (x_lo, x_hi) = widen(x);
        let (y_lo, y_hi) = widen(y);
        Axes {
            x_lo,
            x_hi,
            y_lo,
            y_hi,
        }
    }

    fn x(&self, v: f64) -> f64 {
        LEFT + (v - self.x_lo) / (self.x_hi - self.x_lo) * (WIDTH - LEFT - RIGHT)
    }

    fn y(&self, v: f64) -> f64 {
        HEIGHT - BOTTOM - (v - self.y_lo) / (self.y_hi - self.y_lo) * (HEIGHT - TOP - BOTTOM)
    }

    fn draw_y(&self, doc: &mut Svg, label: &str) {
        doc.line(LEFT, TOP, LEFT, HEIGHT - BOTTOM, "black", 1.0);
        for t in svg::ticks(self.y_lo, self.y_hi, 5) {
            let y = self.y(t);
            doc.line(LEFT - 4.0, y, LEFT, y, "black", 1.0);
            doc.text(LEFT - 6.0, y + 4.0, &svg::tick_label(t), 10.0, Anchor::End);
        }
        doc.text_rotated(
            18.0,
            (TOP + HEIGHT - BOTTOM) / 2.0,
            label,
            12.0,
            Anchor::Middle,
            -90.0,
        );
    }

    fn draw_x(&self, doc: &mut Svg, label: &str) {
        let base = HEIGHT - BOTTOM;
        doc.line(LEFT, base, WIDTH - RIGHT, base, "black", 1.0);
        for t in svg::ticks(self.x_lo, self.x_hi, 6) {
            let x = self.x(t);
            doc.line(x, base, x, base + 4.0, "black", 1.0);
            doc.text(x, base + 16.0, &svg::tick_label(t), 10.0, Anchor::Middle);
        }
        doc.text(
            (LEFT + WIDTH - RIGHT) / 2.0,
            HEIGHT - 20.0,
            label,
            12.0,
            Anchor::Middle,
        );
    }
}

fn title(doc: &mut Svg, text: &str) {
    doc.text(WIDTH / 2.0, 24.0, text, 14.0, Anchor::Middle);
}

fn range(values: impl IntoIterator<Item = f64>) -> (f64, f64) {
    values
        .into_iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        })
}

/// Grouped bars: one group per category, one bar per series.
pub fn bar_chart(
    heading: &str,
    categories: &[String],
    series: &[(&str, Vec<f64>)],
    y_label: &str,
) -> String {
    let top = range(series.iter().flat_map(|(_, v)| v.iter().copied()))
        .1
        .max(0.0);
    let axes = Axes::new((0.0, categories.len() as f64), (0.0, top));
    let mut doc = Svg::new(WIDTH, HEIGHT);
    title(&mut doc, heading);
    let slot = axes.x(1.0) - axes.x(0.0);
    let bar = slot * 0.8 / series.len().max(1) as f64;
    for (c, name) in categories.iter().enumerate() {
        for (s, (_, values)) in series.iter().enumerate() {
            let v = values[c].max(0.0);
            let x = axes.x(c as f64) + slot * 0.1 + bar * s as f64;
            doc.rect(x, axes.y(v), bar, axes.y(0.0) - axes.y(v), svg::palette(s));
        }
        let cx = axes.x(c as f64 + 0.5);
        doc.text_rotated(cx, HEIGHT - BOTTOM + 14.0, name, 10.0, Anchor::End, -45.0);
    }
    axes.draw_y(&mut doc, y_label);
    doc.line(LEFT, axes.y(0.0), WIDTH - RIGHT, axes.y(0.0), "black", 1.0);
    for (s, (name, _)) in series.iter().enumerate() {
        let x = WIDTH - RIGHT - 110.0;
        let y = TOP + 14.0 * s as f64;
        doc.rect(x, y - 8.0, 10.0, 10.0, svg::palette(s));
        doc.text(x + 14.0, y + 1.0, name, 10.0, Anchor::Start);
    }
    doc.finish()
}

/// Density curve with a rug of the underlying values.
pub fn density_plot(heading: &str, curve: &DensityCurve, values: &[f64], x_label: &str) -> String {
    let axes = Axes::new(
        range(curve.xs.iter().copied()),
        (0.0, range(curve.ys.iter().copied()).1),
    );
    let mut doc = Svg::new(WIDTH, HEIGHT);
    title(&mut doc, heading);
    let points: Vec<(f64, f64)> = curve
        .xs
        .iter()
        .zip(&curve.ys)
        .map(|(x, y)| (axes.x(*x), axes.y(*y)))
        .collect();
    doc.polyline(&points, svg::palette(0), 1.5);
    let base = HEIGHT - BOTTOM;
    for &v in values {
        doc.line(axes.x(v), base, axes.x(v), base - 6.0, "black", 0.5);
    }
    axes.draw_x(&mut doc, x_label);
    axes.draw_y(&mut doc, "density");
    doc.text(
        WIDTH - RIGHT,
        TOP,
        &format!("bandwidth {}", svg::tick_label(curve.bandwidth)),
        10.0,
        Anchor::End,
    );
    doc.finish()
}

/// Points with an optional fitted line `y = slope * x + intercept`.
pub fn scatter_plot(
    heading: &str,
    xs: &[f64],
    ys: &[f64],
    fit: Option<(f64, f64)>,
    x_label: &str,
    y_label: &str,
) -> String {
    let (x_lo, x_hi) = range(xs.iter().copied());
    let axes = Axes::new((x_lo, x_hi), range(ys.iter().copied()));
    let mut doc = Svg::new(WIDTH, HEIGHT);
    title(&mut doc, heading);
    for (x, y) in xs.iter().zip(ys) {
        doc.circle(axes.x(*x), axes.y(*y), 3.0, svg::palette(0));
    }
    if let Some((slope, intercept)) = fit {
        let clamp = |y: f64| y.clamp(axes.y_lo, axes.y_hi);
        doc.line(
            axes.x(x_lo),
            axes.y(clamp(slope * x_lo + intercept)),
            axes.x(x_hi),
            axes.y(clamp(slope * x_hi + intercept)),
            svg::palette(3),
            1.5,
        );
    }
    axes.draw_x(&mut doc, x_label);
    axes.draw_y(&mut doc, y_label);
    doc.finish()
}
