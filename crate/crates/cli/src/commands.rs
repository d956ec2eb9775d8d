use std::io::Write;

use serde_json::{json, Map, Value};

use cosint::families::{i_coeffs, ICoeffs};
use cosint::sawtooth::{average_area_exact, build_wave, emit_wave, WaveFormat};
use cosint::series::{
    inv_sqrt_coeff, inv_three_halves_coeff, j_even_from_series, w_even_from_series,
    w_odd_reciprocal_check,
};
use cosint::verify::{
    check_routes, route_values, verify_family, verify_sector_average, write_reports_csv,
    write_reports_text, VerificationReport,
};
use cosint::{ExactPiExpr, Family, Rational, Scalar};

use crate::{CliError, FamilyArg, Format, Output, SeriesArg};

/// Highest index the quadrature oracle is asked about.
const ORACLE_KMAX: usize = 30;
/// Highest sector-average index checked against quadrature.
const SECTOR_IMAX: usize = 4;

fn check_range(k_from: usize, k_to: usize) -> Result<(), CliError> {
    if k_from > k_to {
        return Err(CliError::Usage(format!("empty range {k_from}..={k_to}")));
    }
    Ok(())
}

fn exact_json(e: &ExactPiExpr) -> Value {
    let coeffs: Map<String, Value> = e
        .terms()
        .map(|(exp, c)| (exp.to_string(), Value::String(c.to_string())))
        .collect();
    json!({ "rendered": e.to_string(), "coefficients": coeffs })
}

fn float_json(out: &Output, v: f64) -> Value {
    // round to the requested precision, then store as a plain number
    let rounded: f64 = out.float(v).parse().unwrap_or(f64::NAN);
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

fn write_json(out: &mut Output, v: &Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out.sink, v).map_err(std::io::Error::from)?;
    writeln!(out.sink)?;
    Ok(())
}

pub fn table(out: &mut Output, family: FamilyArg, k_from: usize, k_to: usize) -> Result<(), CliError> {
    check_range(k_from, k_to)?;
    let families: &[Family] = match family {
        FamilyArg::W => &[Family::W],
        FamilyArg::I => &[Family::I],
        FamilyArg::J => &[Family::J],
        FamilyArg::All => &Family::ALL,
    };

    let mut rows = Vec::new();
    for &fam in families {
        for k in k_from..=k_to {
            let value = check_routes::<Rational>(fam, k)?;
            let mut routes: Vec<String> = Vec::new();
            for v in route_values::<Rational>(fam, k)? {
                let name = v.route.to_string();
                if !routes.contains(&name) {
                    routes.push(name);
                }
            }
            rows.push((fam, k, value.value, routes));
        }
    }

    match out.format {
        Format::Text => {
            writeln!(out.sink, "{:<6} {:>4}  {:<32} {:>24}  routes", "family", "k", "exact", "float")?;
            for (fam, k, v, routes) in &rows {
                let f = out.float(v.eval());
                writeln!(out.sink, "{:<6} {:>4}  {:<32} {:>24}  {}", fam, k, v.to_string(), f, routes.join(","))?;
            }
        }
        Format::Csv => {
            writeln!(out.sink, "family,k,exact,float,routes")?;
            for (fam, k, v, routes) in &rows {
                let f = out.float(v.eval());
                writeln!(out.sink, "{fam},{k},{v},{f},{}", routes.join(";"))?;
            }
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(fam, k, v, routes)| {
                    json!({
                        "family": fam.to_string(),
                        "k": k,
                        "exact": exact_json(v),
                        "float": float_json(out, v.eval()),
                        "routes": routes,
                    })
                })
                .collect();
            write_json(out, &Value::Array(items))?;
        }
    }
    Ok(())
}

pub fn coeffs(out: &mut Output, k_from: usize, k_to: usize) -> Result<(), CliError> {
    check_range(k_from, k_to)?;
    let rows: Vec<(usize, ICoeffs<Rational>)> = (k_from..=k_to).map(|k| (k, i_coeffs(k))).collect();
    let parts = |c: &ICoeffs<Rational>| match c {
        ICoeffs::Even(e) => ("even", "a", "b", e.a.clone(), e.b.clone()),
        ICoeffs::Odd(o) => ("odd", "c", "d", o.c.clone(), o.d.clone()),
    };
    match out.format {
        Format::Text => {
            writeln!(out.sink, "I_k = a*pi^2 + b (k even), c*pi + d (k odd)")?;
            for (k, c) in &rows {
                let (parity, n1, n2, v1, v2) = parts(c);
                writeln!(out.sink, "{k:>4}  {parity:<4}  {n1} = {v1:<24} {n2} = {v2}")?;
            }
        }
        Format::Csv => {
            writeln!(out.sink, "k,parity,pi_coeff,constant")?;
            for (k, c) in &rows {
                let (parity, _, _, v1, v2) = parts(c);
                writeln!(out.sink, "{k},{parity},{v1},{v2}")?;
            }
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(k, c)| {
                    let (parity, n1, n2, v1, v2) = parts(c);
                    json!({ "k": k, "parity": parity, n1: v1.to_string(), n2: v2.to_string() })
                })
                .collect();
            write_json(out, &Value::Array(items))?;
        }
    }
    Ok(())
}

enum SeriesTerm {
    Rational(Rational),
    Pi(ExactPiExpr),
}

impl SeriesTerm {
    fn render(&self) -> String {
        match self {
            SeriesTerm::Rational(q) => q.to_string(),
            SeriesTerm::Pi(e) => e.to_string(),
        }
    }

    fn eval(&self) -> f64 {
        match self {
            SeriesTerm::Rational(q) => Scalar::to_f64(q),
            SeriesTerm::Pi(e) => e.eval(),
        }
    }
}

pub fn series(out: &mut Output, which: SeriesArg, n_terms: usize) -> Result<(), CliError> {
    if n_terms < 1 {
        return Err(CliError::Usage("need at least one term".into()));
    }
    let mut terms = Vec::with_capacity(n_terms);
    for n in 0..n_terms {
        terms.push(match which {
            SeriesArg::InvSqrt => SeriesTerm::Rational(inv_sqrt_coeff(n)),
            SeriesArg::InvThreeHalves => SeriesTerm::Rational(inv_three_halves_coeff(n)),
            SeriesArg::JEven => SeriesTerm::Pi(j_even_from_series(n)),
            SeriesArg::WEven => SeriesTerm::Pi(w_even_from_series(n)),
            SeriesArg::WOddRecip => SeriesTerm::Rational(w_odd_reciprocal_check(n)?),
        });
    }
    match out.format {
        Format::Text => {
            for (n, t) in terms.iter().enumerate() {
                writeln!(out.sink, "{n:>4}  {:<32} {:>24}", t.render(), out.float(t.eval()))?;
            }
        }
        Format::Csv => {
            writeln!(out.sink, "n,exact,float")?;
            for (n, t) in terms.iter().enumerate() {
                writeln!(out.sink, "{n},{},{}", t.render(), out.float(t.eval()))?;
            }
        }
        Format::Json => {
            let items: Vec<Value> = terms
                .iter()
                .enumerate()
                .map(|(n, t)| {
                    let exact = match t {
                        SeriesTerm::Rational(q) => Value::String(q.to_string()),
                        SeriesTerm::Pi(e) => exact_json(e),
                    };
                    json!({ "n": n, "exact": exact, "float": float_json(out, t.eval()) })
                })
                .collect();
            write_json(out, &Value::Array(items))?;
        }
    }
    Ok(())
}

pub fn sawtooth(out: &mut Output, angle: f64, teeth: usize, avg_upto: usize, svg: bool) -> Result<(), CliError> {
    if teeth < 1 {
        return Err(CliError::Usage("--teeth must be at least 1".into()));
    }
    let geom = build_wave(angle, teeth)?;
    let averages: Vec<(usize, ExactPiExpr)> = (0..=avg_upto).map(|i| (i, average_area_exact(i))).collect();

    let format = if svg { WaveFormat::Svg } else { WaveFormat::Csv };
    emit_wave(&geom, format, &mut out.sink)?;

    let mut table = Vec::new();
    match out.format {
        Format::Text => {
            writeln!(table, "average sector area over (0, pi/2)")?;
            for (i, a) in &averages {
                writeln!(table, "{i:>4}  {:<40} {:>24}", a.to_string(), out.float(a.eval()))?;
            }
        }
        Format::Csv => {
            writeln!(table, "i,exact,float")?;
            for (i, a) in &averages {
                writeln!(table, "{i},{a},{}", out.float(a.eval()))?;
            }
        }
        Format::Json => {
            let items: Vec<Value> = averages
                .iter()
                .map(|(i, a)| json!({ "i": i, "exact": exact_json(a), "float": float_json(out, a.eval()) }))
                .collect();
            serde_json::to_writer_pretty(&mut table, &Value::Array(items)).map_err(std::io::Error::from)?;
            writeln!(table)?;
        }
    }
    let table = String::from_utf8(table).expect("utf-8 table");
    if svg {
        // trailing comments are legal after the root element
        write!(out.sink, "<!--\n{}-->\n", table.replace("--", "- -"))?;
    } else {
        writeln!(out.sink)?;
        out.sink.write_all(table.as_bytes())?;
    }
    Ok(())
}

pub fn verify(out: &mut Output, k_max: usize, tol: f64, route_kmax: usize) -> Result<(), CliError> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(CliError::Usage(format!("tolerance must be positive, got {tol}")));
    }
    let route_top = k_max.min(route_kmax);
    let mut failures = Vec::new();
    let mut route_summary = Vec::new();
    for fam in Family::ALL {
        let mut ok = true;
        for k in 0..=route_top {
            if let Err(e) = check_routes::<Rational>(fam, k) {
                failures.push(e.to_string());
                ok = false;
            }
        }
        route_summary.push((fam, ok));
    }

    let oracle_top = k_max.min(ORACLE_KMAX);
    let mut reports: Vec<VerificationReport> = Vec::new();
    for fam in Family::ALL {
        reports.extend(verify_family(fam, oracle_top, tol));
    }
    reports.extend(verify_sector_average(k_max.min(SECTOR_IMAX), tol));
    for r in reports.iter().filter(|r| !r.pass) {
        failures.push(format!("oracle {}_{}: diff {} exceeds {tol}", r.family, r.k_or_i, r.abs_diff));
    }

    match out.format {
        Format::Text => {
            for (fam, ok) in &route_summary {
                let status = if *ok { "PASS" } else { "FAIL" };
                writeln!(out.sink, "routes {fam} k=0..={route_top}  {status}")?;
            }
            write_reports_text(&reports, out.precision, &mut out.sink)?;
            writeln!(out.sink, "{} failure(s)", failures.len())?;
        }
        Format::Csv => write_reports_csv(&reports, out.precision, &mut out.sink)?,
        Format::Json => {
            let routes: Vec<Value> = route_summary
                .iter()
                .map(|(fam, ok)| json!({ "family": fam.to_string(), "k_max": route_top, "pass": ok }))
                .collect();
            let oracle: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "family": r.family.to_string(),
                        "k": r.k_or_i,
                        "exact": float_json(out, r.exact_float),
                        "quad": float_json(out, r.quad_value()),
                        "diff": serde_json::Number::from_f64(r.abs_diff).map_or(Value::Null, Value::Number),
                        "pass": r.pass,
                    })
                })
                .collect();
            write_json(out, &json!({ "routes": routes, "oracle": oracle, "failures": failures }))?;
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(failures.join("\n")))
    }
}
