//! Cross-route agreement and exact-versus-quadrature reports.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::families::{
    i_even_closed, i_even_pascal, i_even_via_j, i_recurrence, i_unrolled, j_from_relation,
    wallis_closed, wallis_recurrence, Family, FamilyValue,
};
use crate::quadrature::{integrate, QuadError, QuadResult, DEFAULT_TOL};
use crate::rational::Rational;
use crate::sawtooth::average_area_exact;
use crate::scalar::Scalar;
use crate::series::series_value;

/// Every applicable route for `family` at index `k`.
pub fn route_values<S: Scalar>(family: Family, k: usize) -> Result<Vec<FamilyValue<S>>> {
    let mut out = Vec::new();
    match family {
        Family::W => {
            out.push(wallis_closed(k));
            out.push(wallis_recurrence(k));
        }
        Family::I => {
            out.push(i_recurrence(k));
            for n in 1..=k / 2 {
                out.push(i_unrolled(k, n)?);
            }
            if k >= 2 && k % 2 == 0 {
                out.push(i_even_closed(k / 2)?);
                out.push(i_even_via_j(k / 2)?);
                out.push(i_even_pascal(k / 2)?);
            }
        }
        Family::J => out.push(j_from_relation(k)?),
    }
    if let Some(v) = series_value(family, k) {
        out.push(v?);
    }
    Ok(out)
}

/// Evaluates every route, demands agreement and the parity structure, and
/// returns the agreed value.
pub fn check_routes<S: Scalar>(family: Family, k: usize) -> Result<FamilyValue<S>> {
    let mut values = route_values::<S>(family, k)?.into_iter();
    let first = values.next().expect("every family has a route");
    for v in values {
        if !v.value.agrees(&first.value) {
            return Err(Error::RouteMismatch {
                family: family.letter(),
                k,
                left: format!("{} ({})", first.value, first.route),
                right: format!("{} ({})", v.value, v.route),
            });
        }
        if !v.has_parity_structure() {
            return Err(Error::InvalidParameter(format!(
                "{family}_{k} via {} has terms outside its parity structure: {}",
                v.route, v.value
            )));
        }
    }
    if !first.has_parity_structure() {
        return Err(Error::InvalidParameter(format!(
            "{family}_{k} has terms outside its parity structure: {}",
            first.value
        )));
    }
    Ok(first)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFamily {
    W,
    I,
    J,
    SectorAvg,
}

impl From<Family> for ReportFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::W => ReportFamily::W,
            Family::I => ReportFamily::I,
            Family::J => ReportFamily::J,
        }
    }
}

impl fmt::Display for ReportFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFamily::W => "W",
            ReportFamily::I => "I",
            ReportFamily::J => "J",
            ReportFamily::SectorAvg => "A",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub family: ReportFamily,
    pub k_or_i: usize,
    pub exact_float: f64,
    pub quad: std::result::Result<QuadResult<f64>, QuadError>,
    /// NaN when the quadrature failed.
    pub abs_diff: f64,
    pub pass: bool,
}

impl VerificationReport {
    fn new(family: ReportFamily, k_or_i: usize, exact_float: f64, quad: std::result::Result<QuadResult<f64>, QuadError>, tol: f64) -> Self {
        let abs_diff = match &quad {
            Ok(q) => (exact_float - q.value).abs(),
            Err(_) => f64::NAN,
        };
        VerificationReport {
            family,
            k_or_i,
            exact_float,
            quad,
            abs_diff,
            pass: abs_diff <= tol,
        }
    }

    pub fn quad_value(&self) -> f64 {
        self.quad.as_ref().map(|q| q.value).unwrap_or(f64::NAN)
    }
}

/// The integrand on `[0, π/2]` whose integral is `family_k`.
pub fn integrand(family: Family, k: usize) -> impl Fn(f64) -> f64 {
    let k = k as i32;
    move |x: f64| match family {
        Family::W => x.cos().powi(k),
        Family::I => x * x.cos().powi(k),
        Family::J => x * (2.0 * x).cos().powi(k),
    }
}

/// One report per `k` in `0..=k_max` comparing the exact value with quadrature.
pub fn verify_family(family: Family, k_max: usize, tol: f64) -> Vec<VerificationReport> {
    (0..=k_max)
        .map(|k| {
            let exact = match family {
                Family::W => Ok(wallis_closed::<Rational>(k)),
                Family::I => Ok(i_recurrence::<Rational>(k)),
                Family::J => j_from_relation::<Rational>(k),
            };
            let quad = integrate(integrand(family, k), 0.0, FRAC_PI_2, DEFAULT_TOL);
            match exact {
                Ok(v) => VerificationReport::new(family.into(), k, v.value.eval(), quad, tol),
                Err(_) => VerificationReport::new(family.into(), k, f64::NAN, quad, tol),
            }
        })
        .collect()
}

/// Average sector area `Ã_i` against `(1/π) ∫ x cos²x (1 - cos x)^{2i} dx`.
pub fn verify_sector_average(i_max: usize, tol: f64) -> Vec<VerificationReport> {
    (0..=i_max)
        .map(|i| {
            let exact = average_area_exact::<Rational>(i).eval();
            let p = 2 * i as i32;
            let quad = integrate(
                |x: f64| x * x.cos().powi(2) * (1.0 - x.cos()).powi(p),
                0.0,
                FRAC_PI_2,
                DEFAULT_TOL,
            )
            .map(|q| QuadResult {
                value: q.value / PI,
                est_error: q.est_error / PI,
                evaluations: q.evaluations,
            });
            VerificationReport::new(ReportFamily::SectorAvg, i, exact, quad, tol)
        })
        .collect()
}

fn num(v: f64, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), v)
}

/// One human-readable line per report.
pub fn write_reports_text<W: Write>(reports: &[VerificationReport], digits: usize, out: &mut W) -> io::Result<()> {
    for r in reports {
        write!(
            out,
            "{} {:>3}  exact {}  quad {}  diff {}  {}",
            r.family,
            r.k_or_i,
            num(r.exact_float, digits),
            num(r.quad_value(), digits),
            num(r.abs_diff, 3),
            if r.pass { "PASS" } else { "FAIL" }
        )?;
        if let Err(e) = &r.quad {
            write!(out, "  ({e})")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// `family,k,exact,quad,diff,pass` with a header row.
pub fn write_reports_csv<W: Write>(reports: &[VerificationReport], digits: usize, out: &mut W) -> io::Result<()> {
    writeln!(out, "family,k,exact,quad,diff,pass")?;
    for r in reports {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.family,
            r.k_or_i,
            num(r.exact_float, digits),
            num(r.quad_value(), digits),
            num(r.abs_diff, 3),
            r.pass
        )?;
    }
    Ok(())
}
