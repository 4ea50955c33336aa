//! Deterministic SVG rendering of two-variable staircase regions.
//!
//! The filled region is the union of the corner orthants clipped to the
//! axis range. Boundary pieces are drawn solid where their points belong to
//! the region and dashed where they do not; boundary vertices away from the
//! axes get a circle, filled exactly when the corner point itself is a
//! monomial of the ideal. Everything is computed in exact rationals and
//! formatted with fixed precision, so output is byte-identical across runs.

use std::fmt::Write as _;

use staircase_core::{Ideal, Rational};

use crate::CliError;

pub struct RenderSpec {
    /// Side length of the plot area in pixels.
    pub size: u32,
    /// Axis range; defaults to 1 + the largest exponent.
    pub range: Option<Rational>,
}

impl Default for RenderSpec {
    fn default() -> RenderSpec {
        RenderSpec { size: 480, range: None }
    }
}

const MARGIN: f64 = 40.0;

struct Frame {
    size: f64,
    range: Rational,
}

impl Frame {
    /// Pixel x for a rational coordinate.
    fn px(&self, v: &Rational) -> String {
        let scaled = &(v / &self.range) * &Rational::from_int(self.size as i64);
        let offset = &scaled + &Rational::from_int(MARGIN as i64);
        offset.to_decimal(2, false)
    }

    /// Pixel y (flipped axis).
    fn py(&self, v: &Rational) -> String {
        let scaled = &(v / &self.range) * &Rational::from_int(self.size as i64);
        let flipped = &Rational::from_int((MARGIN + self.size) as i64) - &scaled;
        flipped.to_decimal(2, false)
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Axis {
    X,
    Y,
}

/// One boundary piece, vertical or horizontal, with inclusive rational
/// endpoints along its running axis.
struct Segment {
    axis: Axis,
    at: Rational,
    from: Rational,
    to: Rational,
}

pub fn render_svg(ideal: &Ideal, spec: &RenderSpec) -> Result<String, CliError> {
    if ideal.cfg().dim != 2 {
        return Err(CliError::Domain(format!(
            "plotting requires exactly 2 variables, got {}",
            ideal.cfg().dim
        )));
    }

    let max_exp = ideal
        .corners()
        .iter()
        .flat_map(|c| c.alpha().iter())
        .max()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let range = spec
        .range
        .clone()
        .unwrap_or_else(|| &max_exp + &Rational::one());
    if !range.is_positive() {
        return Err(CliError::Domain("axis range must be positive".into()));
    }
    let frame = Frame { size: spec.size as f64, range: range.clone() };

    // Profile corners: the closed-hull staircase, i.e. the minimal corner
    // thresholds under componentwise order, restricted to the axis range.
    let mut profile: Vec<(Rational, Rational)> = ideal
        .corners()
        .iter()
        .map(|c| (c.alpha()[0].clone(), c.alpha()[1].clone()))
        .filter(|(x, y)| *x <= range && *y <= range)
        .collect();
    profile.sort();
    profile.dedup();
    let kept: Vec<(Rational, Rational)> = profile
        .iter()
        .filter(|(x, y)| {
            !profile
                .iter()
                .any(|(ox, oy)| (ox, oy) != (x, y) && ox <= x && oy <= y)
        })
        .cloned()
        .collect();

    let total = 2.0 * MARGIN + spec.size as f64;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{total}\" height=\"{total}\" viewBox=\"0 0 {total} {total}\">"
    );

    // Filled region.
    if !kept.is_empty() {
        let mut path = String::new();
        let first = &kept[0];
        let _ = write!(path, "M {} {}", frame.px(&first.0), frame.py(&range));
        let mut prev_y: Option<&Rational> = None;
        for (x, y) in &kept {
            if let Some(py) = prev_y {
                let _ = write!(path, " L {} {}", frame.px(x), frame.py(py));
            }
            let _ = write!(path, " L {} {}", frame.px(x), frame.py(y));
            prev_y = Some(y);
        }
        let last_y = &kept.last().unwrap().1;
        let _ = write!(
            path,
            " L {} {} L {} {} Z",
            frame.px(&range),
            frame.py(last_y),
            frame.px(&range),
            frame.py(&range)
        );
        let _ = writeln!(svg, "  <path d=\"{path}\" fill=\"#b3b3b3\" stroke=\"none\"/>");
    }

    // Axes with integer tick marks.
    let origin_x = frame.px(&Rational::zero());
    let origin_y = frame.py(&Rational::zero());
    let end_x = frame.px(&range);
    let top_y = frame.py(&range);
    let _ = writeln!(
        svg,
        "  <line x1=\"{origin_x}\" y1=\"{origin_y}\" x2=\"{}\" y2=\"{origin_y}\" stroke=\"black\" stroke-width=\"1\"/>",
        end_x
    );
    let _ = writeln!(
        svg,
        "  <line x1=\"{origin_x}\" y1=\"{origin_y}\" x2=\"{origin_x}\" y2=\"{top_y}\" stroke=\"black\" stroke-width=\"1\"/>"
    );
    let mut tick = Rational::one();
    while tick < range {
        let tx = frame.px(&tick);
        let ty = frame.py(&tick);
        let _ = writeln!(
            svg,
            "  <line x1=\"{tx}\" y1=\"{}\" x2=\"{tx}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1\"/>",
            (MARGIN + spec.size as f64) - 4.0,
            (MARGIN + spec.size as f64) + 4.0
        );
        let _ = writeln!(
            svg,
            "  <line x1=\"{}\" y1=\"{ty}\" x2=\"{}\" y2=\"{ty}\" stroke=\"black\" stroke-width=\"1\"/>",
            MARGIN - 4.0,
            MARGIN + 4.0
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{tx}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{tick}</text>",
            (MARGIN + spec.size as f64) + 18.0
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{}\" y=\"{ty}\" font-size=\"12\" text-anchor=\"end\" dominant-baseline=\"middle\">{tick}</text>",
            MARGIN - 8.0
        );
        tick = &tick + &Rational::one();
    }

    // Boundary pieces, split wherever a corner threshold could flip
    // membership, then classified by the midpoint.
    let mut segments: Vec<Segment> = Vec::new();
    for (k, (x, y)) in kept.iter().enumerate() {
        let y_top = if k == 0 { range.clone() } else { kept[k - 1].1.clone() };
        segments.push(Segment { axis: Axis::Y, at: x.clone(), from: y.clone(), to: y_top });
        let x_right = if k + 1 < kept.len() { kept[k + 1].0.clone() } else { range.clone() };
        segments.push(Segment { axis: Axis::X, at: y.clone(), from: x.clone(), to: x_right });
    }

    let mut vertices: Vec<(Rational, Rational)> = Vec::new();
    let mut lines: Vec<String> = Vec::new();
    for segment in &segments {
        // Boundary on an axis is not drawn; the axes already are.
        if segment.at.is_zero() {
            continue;
        }
        let mut cuts: Vec<Rational> = vec![segment.from.clone(), segment.to.clone()];
        for corner in ideal.corners() {
            let candidate = match segment.axis {
                Axis::Y => &corner.alpha()[1],
                Axis::X => &corner.alpha()[0],
            };
            if *candidate > segment.from && *candidate < segment.to {
                cuts.push(candidate.clone());
            }
        }
        cuts.sort();
        cuts.dedup();
        for pair in cuts.windows(2) {
            let mid = &(&pair[0] + &pair[1]) / &Rational::from_int(2);
            let point = match segment.axis {
                Axis::Y => vec![segment.at.clone(), mid],
                Axis::X => vec![mid, segment.at.clone()],
            };
            let inside = ideal.region_contains(&point);
            let style = if inside {
                "stroke=\"black\" stroke-width=\"2\""
            } else {
                "stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"8 6\""
            };
            let (x1, y1, x2, y2) = match segment.axis {
                Axis::Y => (
                    frame.px(&segment.at),
                    frame.py(&pair[0]),
                    frame.px(&segment.at),
                    frame.py(&pair[1]),
                ),
                Axis::X => (
                    frame.px(&pair[0]),
                    frame.py(&segment.at),
                    frame.px(&pair[1]),
                    frame.py(&segment.at),
                ),
            };
            lines.push(format!(
                "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" {style}/>"
            ));
            for value in pair {
                let vertex = match segment.axis {
                    Axis::Y => (segment.at.clone(), value.clone()),
                    Axis::X => (value.clone(), segment.at.clone()),
                };
                // Skip clip-boundary endpoints and points on the axes.
                if vertex.0.is_zero()
                    || vertex.1.is_zero()
                    || vertex.0 == range
                    || vertex.1 == range
                {
                    continue;
                }
                vertices.push(vertex);
            }
        }
    }
    for line in lines {
        let _ = writeln!(svg, "{line}");
    }

    vertices.sort();
    vertices.dedup();
    for (x, y) in &vertices {
        let inside = ideal.region_contains(&[x.clone(), y.clone()]);
        let fill = if inside { "black" } else { "white" };
        let _ = writeln!(
            svg,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"1.5\"/>",
            frame.px(x),
            frame.py(y)
        );
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
