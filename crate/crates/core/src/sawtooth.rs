//! The modified sawtooth wave with circular ramps.
//!
//! Frame: `A₀` at the origin, the unit hypotenuse `A₀C` along the positive
//! horizontal axis with `C = (1, 0)`, and the right-angle vertex `B₀` below
//! it, so that the angle at `A₀` is `x`. Each `A_{i+1}` lies on `A₀C` at
//! distance `|A_iB_i|` past `A_i`, and `B_{i+1}` is the foot of the
//! perpendicular from `A_{i+1}` to the baseline `B₀C`. Tooth `i` is the
//! circular sector centred at `A_i` swept counter-clockwise from `B_i` to
//! `A_{i+1}`.

use std::io::{self, Write};

use num_traits::{Float, FloatConst};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::families::i_recurrence_table;
use crate::pi_expr::PiExpr;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<F> {
    pub x: F,
    pub y: F,
}

impl<F: Float> Point<F> {
    pub fn new(x: F, y: F) -> Self {
        Point { x, y }
    }

    fn sub(self, o: Self) -> Self {
        Point::new(self.x - o.x, self.y - o.y)
    }

    fn add(self, o: Self) -> Self {
        Point::new(self.x + o.x, self.y + o.y)
    }

    fn scale(self, s: F) -> Self {
        Point::new(self.x * s, self.y * s)
    }

    fn dot(self, o: Self) -> F {
        self.x * o.x + self.y * o.y
    }

    fn cross(self, o: Self) -> F {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> F {
        self.dot(self).sqrt()
    }

    pub fn distance(self, o: Self) -> F {
        self.sub(o).norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment<F> {
    pub start: Point<F>,
    pub end: Point<F>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ToothArc<F> {
    pub index: usize,
    /// `A_i`
    pub center: Point<F>,
    pub radius: F,
    /// Direction of `B_i` seen from the centre.
    pub start_angle: F,
    /// Direction of `A_{i+1}` seen from the centre.
    pub end_angle: F,
    /// Sector area from the measured radius and swept angle.
    pub area: F,
}

impl<F: Float> ToothArc<F> {
    pub fn start(&self) -> Point<F> {
        self.point_at(F::zero())
    }

    pub fn end(&self) -> Point<F> {
        self.point_at(F::one())
    }

    /// Point on the arc at parameter `t ∈ [0, 1]`, from `B_i` to `A_{i+1}`.
    pub fn point_at(&self, t: F) -> Point<F> {
        let theta = self.start_angle + (self.end_angle - self.start_angle) * t;
        Point::new(
            self.center.x + self.radius * theta.cos(),
            self.center.y + self.radius * theta.sin(),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WaveGeometry<F> {
    pub angle_x: F,
    pub teeth: Vec<ToothArc<F>>,
    /// `C`
    pub hypotenuse_end: Point<F>,
    /// `B₀C`
    pub baseline: Segment<F>,
}

impl<F: Float> WaveGeometry<F> {
    /// The line that bounds the amplitudes, `A₀C`.
    pub fn hypotenuse(&self) -> Segment<F> {
        Segment {
            start: Point::new(F::zero(), F::zero()),
            end: self.hypotenuse_end,
        }
    }
}

fn check_angle<F: Float + FloatConst>(x: F) -> Result<()> {
    if x > F::zero() && x < F::FRAC_PI_2() {
        Ok(())
    } else {
        Err(Error::AngleOutOfRange(x.to_f64().unwrap_or(f64::NAN)))
    }
}

/// `A_i(x) = (1/2) x cos²x (1 - cos x)^{2i}`.
pub fn sector_area<F: Float + FloatConst>(i: usize, x: F) -> Result<F> {
    check_angle(x)?;
    let c = x.cos();
    let half = F::one() / (F::one() + F::one());
    Ok(half * x * c * c * (F::one() - c).powi(2 * i as i32))
}

/// Closed sum of all sector areas, `x cos²x / (2(1 - (1 - cos x)²))`.
pub fn total_sector_area<F: Float + FloatConst>(x: F) -> Result<F> {
    check_angle(x)?;
    let c = x.cos();
    let r = (F::one() - c) * (F::one() - c);
    let two = F::one() + F::one();
    Ok(x * c * c / (two * (F::one() - r)))
}

/// Orthogonal projection of `p` onto the line through `a` and `b`.
fn project<F: Float>(p: Point<F>, a: Point<F>, b: Point<F>) -> Point<F> {
    let d = b.sub(a);
    a.add(d.scale(p.sub(a).dot(d) / d.dot(d)))
}

/// Builds the first `n_teeth` teeth by running the point recursion literally.
pub fn build_wave<F: Float + FloatConst>(x: F, n_teeth: usize) -> Result<WaveGeometry<F>> {
    check_angle(x)?;
    if n_teeth == 0 {
        return Err(Error::InvalidParameter("need at least one tooth".into()));
    }
    let a0 = Point::new(F::zero(), F::zero());
    let c = Point::new(F::one(), F::zero());
    let b0 = Point::new(x.cos() * x.cos(), -(x.cos() * x.sin()));

    let mut a = a0;
    let mut b = b0;
    let mut teeth = Vec::with_capacity(n_teeth);
    for index in 0..n_teeth {
        let radius = a.distance(b);
        let toward_c = c.sub(a);
        if !(toward_c.norm() > F::zero()) || !radius.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "tooth {index} collapses onto C at working precision"
            )));
        }
        let next_a = a.add(toward_c.scale(radius / toward_c.norm()));

        let u = b.sub(a);
        let v = next_a.sub(a);
        let swept = u.cross(v).atan2(u.dot(v));
        let start_angle = u.y.atan2(u.x);
        let half = F::one() / (F::one() + F::one());
        teeth.push(ToothArc {
            index,
            center: a,
            radius,
            start_angle,
            end_angle: start_angle + swept,
            area: half * swept * radius * radius,
        });

        a = next_a;
        b = project(a, b0, c);
    }
    Ok(WaveGeometry {
        angle_x: x,
        teeth,
        hypotenuse_end: c,
        baseline: Segment { start: b0, end: c },
    })
}

/// Exact average sector area over `x ∈ (0, π/2)`:
/// `Ã_i = (1/π) Σ_{m=0}^{2i} (-1)^m C(2i, m) I_{m+2}`.
pub fn average_area_exact<S: Scalar>(i: usize) -> PiExpr<S> {
    let top = 2 * i;
    let table = i_recurrence_table::<S>(top + 2);
    let mut sum = PiExpr::zero();
    for m in 0..=top {
        let c = S::from_ratio(&binomial(top as u64, m as u64).into(), &1.into());
        let c = if m % 2 == 0 { c } else { -c };
        sum = sum + table[m + 2].scale(&c);
    }
    // I_k has no 1/pi term, so the shift stays inside the basis
    sum.shift(-1).expect("I_k carries no pi^-1 coefficient")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveFormat {
    Csv,
    Svg,
}

/// Samples per tooth in the CSV rendering, endpoints included.
pub const CSV_SAMPLES: usize = 17;

fn sig17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes the geometry.
///
/// CSV: header `tooth,t,x,y`, then [`CSV_SAMPLES`] rows per tooth with `t`
/// running from 0 at `B_i` to 1 at `A_{i+1}`; numbers carry 17 significant
/// digits; LF line endings.
///
/// SVG: a standalone document in the wave's frame with `y` flipped, one
/// `<path>` per tooth (an elliptical-arc command from `B_i` to `A_{i+1}`)
/// and two `<line>` elements, the baseline `B₀C` and the hypotenuse `A₀C`.
pub fn emit_wave<F: Float, W: Write>(geom: &WaveGeometry<F>, format: WaveFormat, out: &mut W) -> io::Result<()> {
    let f = |v: F| v.to_f64().unwrap_or(f64::NAN);
    // svg y grows downward; subtracting from +0 avoids printing -0
    let flip = |v: F| 0.0 - f(v);
    match format {
        WaveFormat::Csv => {
            out.write_all(b"tooth,t,x,y\n")?;
            for tooth in &geom.teeth {
                for s in 0..CSV_SAMPLES {
                    let t = s as f64 / (CSV_SAMPLES - 1) as f64;
                    let p = tooth.point_at(F::from(t).unwrap());
                    writeln!(out, "{},{},{},{}", tooth.index, sig17(t), sig17(f(p.x)), sig17(f(p.y)))?;
                }
            }
        }
        WaveFormat::Svg => {
            let stroke = "stroke=\"black\" stroke-width=\"0.004\"";
            writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>")?;
            writeln!(
                out,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.05 -0.05 1.1 0.6\">"
            )?;
            let line = |out: &mut W, class: &str, s: Segment<F>| {
                writeln!(
                    out,
                    "  <line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {stroke}/>",
                    sig17(f(s.start.x)),
                    sig17(flip(s.start.y)),
                    sig17(f(s.end.x)),
                    sig17(flip(s.end.y)),
                )
            };
            line(out, "hypotenuse", geom.hypotenuse())?;
            line(out, "baseline", geom.baseline)?;
            for tooth in &geom.teeth {
                let (s, e) = (tooth.start(), tooth.end());
                let r = sig17(f(tooth.radius));
                // counter-clockwise in the wave frame is sweep-flag 1 once y is flipped
                writeln!(
                    out,
                    "  <path class=\"tooth\" data-index=\"{}\" d=\"M {} {} A {r} {r} 0 0 1 {} {}\" fill=\"none\" {stroke}/>",
                    tooth.index,
                    sig17(f(s.x)),
                    sig17(flip(s.y)),
                    sig17(f(e.x)),
                    sig17(flip(e.y)),
                )?;
            }
            writeln!(out, "</svg>")?;
        }
    }
    Ok(())
}
