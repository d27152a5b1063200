//! SVG figure of real pencil members in the chart z = 1.

use std::fmt::Write as _;
use std::path::Path;

use hesse_core::field::q;
use hesse_core::hesse::{hesse_data, PencilParameter};
use hesse_core::plane::incidence_table;
use num_traits::ToPrimitive;

use crate::error::{LabError, Result};

const SIZE: f64 = 600.0;
const INSET: f64 = 220.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

#[derive(Clone, Debug, PartialEq)]
pub struct PlotConfig {
    pub lambdas: Vec<String>,
    /// xmin, xmax, ymin, ymax.
    pub window: [f64; 4],
    /// Cells per side for marching squares.
    pub grid: usize,
}

impl Default for PlotConfig {
    fn default() -> Self {
        PlotConfig { lambdas: vec![], window: [-3.0, 3.0, -3.0, 3.0], grid: 300 }
    }
}

pub fn parse_window(s: &str) -> Result<[f64; 4]> {
    let v: Vec<f64> = s.split(',').map(|p| p.trim().parse::<f64>()).collect::<std::result::Result<_, _>>().map_err(|e| LabError::Config(format!("window `{s}`: {e}")))?;
    match v[..] {
        [a, b, c, d] if a < b && c < d && v.iter().all(|x| x.is_finite()) => Ok([a, b, c, d]),
        _ => Err(LabError::Config(format!("window `{s}` must be xmin,xmax,ymin,ymax with xmin < xmax, ymin < ymax"))),
    }
}

type Seg = ((f64, f64), (f64, f64));

/// Zero set of f on a regular grid; saddles are split by the cell-center value.
pub fn marching_squares(f: impl Fn(f64, f64) -> f64, window: [f64; 4], n: usize) -> Vec<Seg> {
    let [x0, x1, y0, y1] = window;
    let dx = (x1 - x0) / n as f64;
    let dy = (y1 - y0) / n as f64;
    let xs: Vec<f64> = (0..=n).map(|i| x0 + i as f64 * dx).collect();
    let ys: Vec<f64> = (0..=n).map(|j| y0 + j as f64 * dy).collect();
    let vals: Vec<Vec<f64>> = ys.iter().map(|&y| xs.iter().map(|&x| f(x, y)).collect()).collect();
    let mut out = vec![];
    for j in 0..n {
        for i in 0..n {
            // corners counterclockwise from bottom-left
            let c = [(xs[i], ys[j], vals[j][i]), (xs[i + 1], ys[j], vals[j][i + 1]), (xs[i + 1], ys[j + 1], vals[j + 1][i + 1]), (xs[i], ys[j + 1], vals[j + 1][i])];
            let pos: Vec<bool> = c.iter().map(|p| p.2 >= 0.0).collect();
            // edge k joins corner k and k+1
            let cross = |k: usize| -> Option<(f64, f64)> {
                let (mut a, mut b) = (c[k], c[(k + 1) % 4]);
                // interpolate in a fixed direction so neighbouring cells agree bitwise
                if (a.0, a.1) > (b.0, b.1) {
                    std::mem::swap(&mut a, &mut b);
                }
                (pos[k] != pos[(k + 1) % 4]).then(|| {
                    let t = a.2 / (a.2 - b.2);
                    (a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1))
                })
            };
            let edges: Vec<(usize, (f64, f64))> = (0..4).filter_map(|k| cross(k).map(|p| (k, p))).collect();
            match edges.len() {
                2 => out.push((edges[0].1, edges[1].1)),
                4 => {
                    let center = c.iter().map(|p| p.2).sum::<f64>() >= 0.0;
                    for k in 0..4 {
                        // cut off each corner whose sign differs from the center
                        if pos[k] != center {
                            let before = (k + 3) % 4;
                            out.push((edges[before].1, edges[k].1));
                        }
                    }
                }
                _ => {}
            }
        }
    }
    out
}

struct Frame {
    window: [f64; 4],
}

impl Frame {
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let [x0, x1, y0, y1] = self.window;
        ((x - x0) / (x1 - x0) * SIZE, (y1 - y) / (y1 - y0) * SIZE)
    }

    /// Where the ray from the window center in direction d leaves the window.
    fn boundary(&self, d: (f64, f64)) -> (f64, f64) {
        let [x0, x1, y0, y1] = self.window;
        let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        let tx = if d.0 != 0.0 { (x1 - x0) / 2.0 / d.0.abs() } else { f64::INFINITY };
        let ty = if d.1 != 0.0 { (y1 - y0) / 2.0 / d.1.abs() } else { f64::INFINITY };
        let t = tx.min(ty);
        (cx + t * d.0, cy + t * d.1)
    }
}

fn real_parameter(s: &str) -> Result<(PencilParameter, f64, f64)> {
    let p = PencilParameter::parse(&q(), s).map_err(|e| LabError::Config(format!("λ `{s}` is not a rational parameter: {e}")))?;
    let c = |x: &hesse_core::FieldElement| x.to_rational().and_then(|r| r.to_f64()).ok_or_else(|| LabError::Config(format!("λ `{s}` is not real")));
    let (t0, t1) = (c(p.t0())?, c(p.t1())?);
    Ok((p, t0, t1))
}

fn path_data(segs: &[Seg], frame: &Frame) -> String {
    let mut d = String::new();
    for (a, b) in segs {
        let (a, b) = (frame.map(*a), frame.map(*b));
        let _ = write!(d, "M{:.2} {:.2}L{:.2} {:.2}", a.0, a.1, b.0, b.1);
    }
    d
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders the figure; identical configs give identical bytes.
pub fn plot_pencil(cfg: &PlotConfig) -> Result<String> {
    let frame = Frame { window: cfg.window };
    let [x0, x1, y0, y1] = cfg.window;
    let mut s = String::new();
    let width = SIZE + INSET;
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{SIZE}" viewBox="0 0 {width} {SIZE}">"#);
    let _ = writeln!(s, r#"<title>Hesse pencil, chart z = 1, window [{x0}, {x1}] x [{y0}, {y1}]</title>"#);
    let _ = writeln!(s, r##"<rect class="frame" x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff" stroke="#000000"/>"##);

    for (k, l) in cfg.lambdas.iter().enumerate() {
        let (p, t0, t1) = real_parameter(l)?;
        let color = PALETTE[k % PALETTE.len()];
        let label = xml_escape(&p.to_text());
        let _ = writeln!(s, r#"<g class="curve" data-lambda="{label}" stroke="{color}" fill="none" stroke-width="1.5">"#);
        if p.is_infinity() {
            // xyz = 0: the two coordinate axes and the line at infinity (the frame)
            let lines = [((0.0, y0), (0.0, y1)), ((x0, 0.0), (x1, 0.0))];
            for (a, b) in lines {
                let _ = writeln!(s, r#"<path class="line" d="{}"/>"#, path_data(&[(a, b)], &frame));
            }
            let _ = writeln!(s, r#"<path class="line at-infinity" stroke-dasharray="6 4" d="M1 1H{0}V{0}H1Z"/>"#, SIZE - 1.0);
        } else {
            let segs = marching_squares(|x, y| t0 * (x * x * x + y * y * y + 1.0) + t1 * x * y, cfg.window, cfg.grid);
            let _ = writeln!(s, r#"<path d="{}"/>"#, path_data(&segs, &frame));
        }
        let _ = writeln!(s, "</g>");
    }

    // the twelve lines as collinear triples on the 3×3 label grid
    let d = hesse_data();
    let inc = incidence_table(&d.base_points, &d.inflection_lines);
    let (ix, iy, step) = (SIZE + 50.0, 60.0, 60.0);
    let pos = |i: usize| (ix + step * (i % 3) as f64, iy + step * (i / 3) as f64);
    let _ = writeln!(s, r#"<g class="inset" font-family="sans-serif" font-size="12">"#);
    let _ = writeln!(s, r#"<text x="{}" y="{}">inflection lines</text>"#, SIZE + 30.0, 25.0);
    for j in 0..d.inflection_lines.len() {
        let pts: Vec<usize> = (0..9).filter(|&i| inc.matrix[i][j]).collect();
        let coords: Vec<String> = pts.iter().map(|&i| pos(i)).map(|(x, y)| format!("{x:.1},{y:.1}")).collect();
        let color = PALETTE[j / 3 % PALETTE.len()];
        let names: Vec<String> = pts.iter().map(|i| format!("p{i}")).collect();
        let _ = writeln!(
            s,
            r#"<polyline class="inflection-line" data-line="{j}" data-points="{}" points="{}" fill="none" stroke="{color}" stroke-opacity="0.6"/>"#,
            names.join(" "),
            coords.join(" ")
        );
    }
    for i in 0..9 {
        let (x, y) = pos(i);
        let _ = writeln!(s, r##"<circle cx="{x:.1}" cy="{y:.1}" r="3" fill="#000000"/><text x="{:.1}" y="{:.1}">p{i}</text>"##, x + 5.0, y - 5.0);
    }
    let _ = writeln!(s, "</g>");

    // real base points; those on z = 0 are marked on the boundary in their direction
    let _ = writeln!(s, r#"<g class="real-points" font-family="sans-serif" font-size="12">"#);
    for (i, p) in d.base_points.iter().enumerate() {
        let c: Option<Vec<f64>> = p.coords().iter().map(|x| x.to_rational().and_then(|r| r.to_f64())).collect();
        let Some(c) = c else { continue };
        let (class, (x, y)) = if c[2] != 0.0 { ("base-point", (c[0] / c[2], c[1] / c[2])) } else { ("base-point at-infinity", frame.boundary((c[0], c[1]))) };
        let (u, v) = frame.map((x, y));
        let _ = writeln!(
            s,
            r##"<circle class="{class}" data-label="p{i}" cx="{u:.2}" cy="{v:.2}" r="5" fill="#000000"/><text x="{:.2}" y="{:.2}">p{i}</text>"##,
            u + 7.0,
            v - 7.0
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

pub fn write_plot(cfg: &PlotConfig, path: &Path) -> Result<()> {
    let svg = plot_pencil(cfg)?;
    std::fs::write(path, svg).map_err(|e| LabError::Io(path.display().to_string(), e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_contour_is_closed() {
        // r² = 1.1 has no points on the 0.1 grid, so no contour vertex sits on a node
        let segs = marching_squares(|x, y| x * x + y * y - 1.1, [-2.0, 2.0, -2.0, 2.0], 40);
        assert!(!segs.is_empty());
        for (a, b) in &segs {
            for p in [a, b] {
                assert!(((p.0 * p.0 + p.1 * p.1) - 1.1).abs() < 0.01);
            }
        }
        // every endpoint is shared by exactly two segments
        let key = |p: &(f64, f64)| ((p.0 * 1e9).round() as i64, (p.1 * 1e9).round() as i64);
        let mut counts = std::collections::BTreeMap::new();
        for (a, b) in &segs {
            *counts.entry(key(a)).or_insert(0) += 1;
            *counts.entry(key(b)).or_insert(0) += 1;
        }
        let odd: Vec<_> = counts.iter().filter(|(_, &c)| c != 2).collect();
        assert!(odd.is_empty(), "{odd:?}");
    }

    #[test]
    fn window_parsing() {
        assert_eq!(parse_window("-1,1,-2,2").unwrap(), [-1.0, 1.0, -2.0, 2.0]);
        assert!(parse_window("1,-1,0,1").is_err());
        assert!(parse_window("1,2,3").is_err());
    }

    #[test]
    fn non_real_member_is_rejected() {
        let cfg = PlotConfig { lambdas: vec!["eps".into()], ..Default::default() };
        assert!(plot_pencil(&cfg).is_err());
    }
}
