//! SVG contour plots of implicit plane curves.
//!
//! Values at grid nodes are computed exactly; crossings on cell edges are
//! placed by linear interpolation of the two corner values. Saddle cells are
//! resolved by the sign at the cell center.

use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::plane_curves::PlaneCurve;
use crate::poly::{check_same_ring, Polynomial, Rational};

const CANVAS: f64 = 512.0;
const PALETTE: [&str; 6] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

#[derive(Clone, Debug, PartialEq)]
pub struct Stroke {
    pub color: String,
    pub width: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlotSpec {
    xmin: Rational,
    xmax: Rational,
    ymin: Rational,
    ymax: Rational,
    resolution: usize,
    /// Stroke per curve; curves beyond the list cycle through a default palette.
    pub strokes: Vec<Stroke>,
}

impl PlotSpec {
    pub const MIN_RESOLUTION: usize = 8;

    pub fn new(window: [Rational; 4], resolution: usize) -> Result<PlotSpec> {
        let [xmin, xmax, ymin, ymax] = window;
        if xmin >= xmax || ymin >= ymax {
            return Err(Error::Window("window must satisfy xmin < xmax and ymin < ymax".into()));
        }
        if resolution < Self::MIN_RESOLUTION {
            return Err(Error::Window(format!("resolution must be at least {}", Self::MIN_RESOLUTION)));
        }
        Ok(PlotSpec { xmin, xmax, ymin, ymax, resolution, strokes: Vec::new() })
    }

    pub fn window(&self) -> [&Rational; 4] {
        [&self.xmin, &self.xmax, &self.ymin, &self.ymax]
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn stroke(&self, index: usize) -> Stroke {
        self.strokes.get(index).cloned().unwrap_or_else(|| Stroke {
            color: PALETTE[index % PALETTE.len()].to_string(),
            width: if index == 0 { 2.0 } else { 1.25 },
        })
    }

    fn node(&self, i: usize, j: usize) -> [Rational; 2] {
        let n = Rational::from_integer(self.resolution.into());
        let x = &self.xmin + (&self.xmax - &self.xmin) * Rational::from_integer(i.into()) / &n;
        let y = &self.ymin + (&self.ymax - &self.ymin) * Rational::from_integer(j.into()) / &n;
        [x, y]
    }

    fn to_canvas(&self, p: &[Rational; 2]) -> (f64, f64) {
        let fx = ((&p[0] - &self.xmin) / (&self.xmax - &self.xmin)).to_f64().unwrap_or(f64::NAN);
        let fy = ((&self.ymax - &p[1]) / (&self.ymax - &self.ymin)).to_f64().unwrap_or(f64::NAN);
        (fx * CANVAS, fy * CANVAS)
    }
}

/// A contour piece inside one grid cell, with exact endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub cell: (usize, usize),
    pub ends: [Crossing; 2],
}

/// A point where the contour meets a cell edge.
#[derive(Clone, Debug, PartialEq)]
pub struct Crossing {
    pub point: [Rational; 2],
    /// The grid nodes bounding the edge and their values.
    pub edge: [([Rational; 2], Rational); 2],
}

fn positive(v: &Rational) -> bool {
    v.is_positive()
}

fn crossing(a: &([Rational; 2], Rational), b: &([Rational; 2], Rational)) -> Crossing {
    let t = &a.1 / (&a.1 - &b.1);
    let point = [&a.0[0] + (&b.0[0] - &a.0[0]) * &t, &a.0[1] + (&b.0[1] - &a.0[1]) * &t];
    Crossing { point, edge: [a.clone(), b.clone()] }
}

/// Marching squares over the grid of `spec`.
pub fn contour(f: &Polynomial, spec: &PlotSpec) -> Result<Vec<Segment>> {
    if f.ring().len() != 2 {
        return Err(Error::InvalidRing("contours need a two-variable ring".into()));
    }
    let n = spec.resolution;
    let mut values: Vec<Vec<([Rational; 2], Rational)>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut column = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let p = spec.node(i, j);
            let v = f.evaluate(&p)?;
            column.push((p, v));
        }
        values.push(column);
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // counterclockwise from the lower left corner
            let c = [&values[i][j], &values[i + 1][j], &values[i + 1][j + 1], &values[i][j + 1]];
            let s: Vec<bool> = c.iter().map(|(_, v)| positive(v)).collect();
            let edges: Vec<usize> = (0..4).filter(|&e| s[e] != s[(e + 1) % 4]).collect();
            let at = |e: usize| crossing(c[e], c[(e + 1) % 4]);
            let pairs: Vec<(usize, usize)> = match edges.len() {
                2 => vec![(edges[0], edges[1])],
                4 => {
                    let [x0, y0] = &c[0].0;
                    let [x1, y1] = &c[2].0;
                    let two = Rational::from_integer(2.into());
                    let center = f.evaluate(&[(x0 + x1) / &two, (y0 + y1) / &two])?;
                    if positive(&center) == s[0] {
                        // corners 0 and 2 are joined through the center
                        vec![(0, 1), (2, 3)]
                    } else {
                        vec![(3, 0), (1, 2)]
                    }
                }
                _ => Vec::new(),
            };
            for (a, b) in pairs {
                let ends = [at(a), at(b)];
                // both ends on a zero-valued corner
                if ends[0].point != ends[1].point {
                    out.push(Segment { cell: (i, j), ends });
                }
            }
        }
    }
    Ok(out)
}

/// Deterministic SVG with one path per curve; the first curve gets the accent stroke.
pub fn plot_implicit(curves: &[PlaneCurve], spec: &PlotSpec) -> Result<String> {
    if let Some(first) = curves.first() {
        for c in &curves[1..] {
            check_same_ring(first.ring(), c.ring())?;
        }
    }
    let mut svg = String::new();
    let size = format!("{CANVAS:.0}");
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(svg, r#"  <rect x="0" y="0" width="{size}" height="{size}" fill="white"/>"#);
    let zero = Rational::zero();
    let [xmin, xmax, ymin, ymax] = spec.window();
    if xmin <= &zero && &zero <= xmax {
        let (x, _) = spec.to_canvas(&[zero.clone(), zero.clone()]);
        let _ = writeln!(svg, r##"  <line x1="{x:.6}" y1="0" x2="{x:.6}" y2="{size}" stroke="#cccccc" stroke-width="0.5"/>"##);
    }
    if ymin <= &zero && &zero <= ymax {
        let (_, y) = spec.to_canvas(&[zero.clone(), zero.clone()]);
        let _ = writeln!(svg, r##"  <line x1="0" y1="{y:.6}" x2="{size}" y2="{y:.6}" stroke="#cccccc" stroke-width="0.5"/>"##);
    }
    for (k, c) in curves.iter().enumerate() {
        let mut d = String::new();
        for seg in contour(c.polynomial(), spec)? {
            let (ax, ay) = spec.to_canvas(&seg.ends[0].point);
            let (bx, by) = spec.to_canvas(&seg.ends[1].point);
            if !d.is_empty() {
                d.push(' ');
            }
            let _ = write!(d, "M{ax:.6},{ay:.6} L{bx:.6},{by:.6}");
        }
        let stroke = spec.stroke(k);
        let _ = writeln!(
            svg,
            r#"  <path d="{d}" fill="none" stroke="{}" stroke-width="{}" stroke-linecap="round"/>"#,
            stroke.color, stroke.width
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// `|f|` at a crossing never exceeds the larger corner value of its edge when
/// `f` is monotone along the edge; used as the acceptance bound for emitted vertices.
pub fn edge_bound(c: &Crossing) -> Rational {
    c.edge[0].1.abs().max(c.edge[1].1.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_polynomial;
    use crate::poly::Ring;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn curve(s: &str) -> PlaneCurve {
        let r = Ring::new(["x", "y"]).unwrap();
        PlaneCurve::new(parse_polynomial(s, &r).unwrap()).unwrap()
    }

    fn square(res: usize) -> PlotSpec {
        PlotSpec::new([q(-2), q(2), q(-2), q(2)], res).unwrap()
    }

    #[test]
    fn window_validation() {
        assert!(matches!(PlotSpec::new([q(1), q(1), q(0), q(1)], 16), Err(Error::Window(_))));
        assert!(matches!(PlotSpec::new([q(0), q(1), q(2), q(1)], 16), Err(Error::Window(_))));
        assert!(matches!(PlotSpec::new([q(0), q(1), q(0), q(1)], 7), Err(Error::Window(_))));
    }

    #[test]
    fn circle_contour_is_closed_and_bounded() {
        let c = curve("x^2+y^2-1");
        let segs = contour(c.polynomial(), &square(64)).unwrap();
        assert!(!segs.is_empty());
        for s in &segs {
            for e in &s.ends {
                let v = c.polynomial().evaluate(&e.point).unwrap();
                assert!(v.abs() <= edge_bound(e));
            }
        }
        // closed: every endpoint is shared by exactly two segments
        let mut counts = std::collections::BTreeMap::new();
        for s in &segs {
            for e in &s.ends {
                *counts.entry(e.point.clone()).or_insert(0) += 1;
            }
        }
        assert!(counts.values().all(|&k| k == 2));
    }

    #[test]
    fn constant_has_no_segments() {
        let svg = plot_implicit(&[curve("1")], &square(16)).unwrap();
        assert!(svg.contains(r#"<path d="""#));
        assert!(contour(curve("1").polynomial(), &square(16)).unwrap().is_empty());
    }

    #[test]
    fn saddle_cells_use_the_center() {
        // xy = 0 has saddles on the axes; shifted so the axes cross inside cells
        let f = curve("(x-1/16)*(y-1/16)");
        let segs = contour(f.polynomial(), &square(8)).unwrap();
        let saddle: Vec<_> = segs.iter().filter(|s| s.cell == (4, 4)).collect();
        assert_eq!(saddle.len(), 2);
    }

    #[test]
    fn svg_is_deterministic_and_well_formed() {
        let curves = [curve("x^3-y^2"), curve("4*x^3+27*y^2")];
        let a = plot_implicit(&curves, &square(32)).unwrap();
        let b = plot_implicit(&curves, &square(32)).unwrap();
        assert_eq!(a, b);
        let doc = roxmltree::Document::parse(&a).unwrap();
        let root = doc.root_element();
        assert_eq!(root.tag_name().name(), "svg");
        let paths: Vec<_> = root.children().filter(|n| n.has_tag_name("path")).collect();
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].attribute("stroke"), Some("#d62728"));
        assert_ne!(paths[1].attribute("stroke"), paths[0].attribute("stroke"));
        assert!(!paths[0].attribute("d").unwrap().is_empty());
    }
}
