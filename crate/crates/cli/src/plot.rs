//! SVG rendering. Coordinates are converted to `f64` for display only.

use std::fmt::Write;

use emptyconv::reduction::{tangent_pairs, DiskInstance, ReductionOutput};
use emptyconv::Rational;
use num_traits::ToPrimitive;

use crate::error::{CliError, Result};
use crate::formats::Input;

const SCALE: f64 = 40.0;
const MARGIN: f64 = 1.5;

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

struct Frame {
    min_x: f64,
    max_y: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn around(xy: &[(f64, f64)], pad: f64) -> Frame {
        let min_x = xy.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) - pad;
        let max_x = xy.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max) + pad;
        let min_y = xy.iter().map(|p| p.1).fold(f64::INFINITY, f64::min) - pad;
        let max_y = xy.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max) + pad;
        Frame {
            min_x,
            max_y,
            width: (max_x - min_x) * SCALE,
            height: (max_y - min_y) * SCALE,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.min_x) * SCALE, (self.max_y - y) * SCALE)
    }

    fn open(&self, out: &mut String) {
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.3} {h:.3}">"#,
            w = self.width,
            h = self.height
        );
        let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    }
}

pub fn plot_instance(d: &DiskInstance) -> Result<String> {
    if d.is_empty() {
        return Err(CliError::Validation("nothing to plot: empty instance".into()));
    }
    let xy: Vec<(f64, f64)> = d.centers().iter().map(|c| (f(&c.x), f(&c.y))).collect();
    let frame = Frame::around(&xy, 1.0 + MARGIN);
    let mut out = String::new();
    frame.open(&mut out);
    for (i, &c) in xy.iter().enumerate() {
        let (x, y) = frame.map(c);
        let _ = writeln!(
            out,
            r#"<circle class="disk" cx="{x:.3}" cy="{y:.3}" r="{r:.3}" fill="none" stroke="black"/>"#,
            r = SCALE
        );
        let _ = writeln!(
            out,
            r#"<text x="{x:.3}" y="{y:.3}" font-size="12" text-anchor="middle">{}</text>"#,
            i + 1
        );
    }
    for p in tangent_pairs(d)? {
        let a = xy[p.i];
        let b = xy[p.j];
        let (x, y) = frame.map(((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0));
        let _ = writeln!(
            out,
            r#"<circle class="tangency" cx="{x:.3}" cy="{y:.3}" r="4.000" fill="red"/>"#
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// The xy-projection of `P`: `L` as filled circles, `B` as squares, and a
/// segment between the two lifted centres each blocker belongs to.
pub fn plot_points(r: &ReductionOutput) -> Result<String> {
    if r.point_count() == 0 {
        return Err(CliError::Validation("nothing to plot: empty point set".into()));
    }
    let proj = |p: &emptyconv::Point3| (f(&p.x), f(&p.y));
    let lifted: Vec<(f64, f64)> = r.lifted().iter().map(proj).collect();
    let all: Vec<(f64, f64)> = r.points().iter().map(proj).collect();
    let frame = Frame::around(&all, MARGIN);
    let mut out = String::new();
    frame.open(&mut out);
    for b in r.blockers() {
        let (Some(&a), Some(&c)) = (lifted.get(b.pair.i), lifted.get(b.pair.j)) else {
            return Err(CliError::Validation(format!(
                "blocker pair {:?} out of range",
                b.pair.one_based()
            )));
        };
        let (x1, y1) = frame.map(a);
        let (x2, y2) = frame.map(c);
        let _ = writeln!(
            out,
            r#"<line class="segment" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="gray"/>"#
        );
    }
    for &p in &lifted {
        let (x, y) = frame.map(p);
        let _ = writeln!(
            out,
            r#"<circle class="marker L" cx="{x:.3}" cy="{y:.3}" r="5.000" fill="black"/>"#
        );
    }
    for b in r.blockers() {
        let (x, y) = frame.map(proj(&b.point));
        let _ = writeln!(
            out,
            r#"<rect class="marker B" x="{:.3}" y="{:.3}" width="8.000" height="8.000" fill="red"/>"#,
            x - 4.0,
            y - 4.0
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn cmd_plot(input: &Input) -> Result<String> {
    match input {
        Input::Instance(d) => plot_instance(d),
        Input::Points(r) => plot_points(r),
    }
}
