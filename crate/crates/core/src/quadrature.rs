//! Adaptive Simpson quadrature.
//!
//! This is the floating-point oracle for the exact routes. It only ever
//! samples the integrand pointwise and shares no code with the exact engine.

use num_traits::Float;
use thiserror::Error;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_DEPTH: u32 = 50;
/// Levels that are always bisected before the error test may accept.
pub const MIN_DEPTH: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<F> {
    pub value: F,
    /// Sum of the per-panel Richardson estimates `|S2 - S1| / 15`.
    pub est_error: F,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("invalid interval [{a}, {b}]")]
    BadInterval { a: f64, b: f64 },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("integrand not finite at {0}")]
    NonFinite(f64),
    #[error("depth cap {MAX_DEPTH} reached; best estimate {best} (error estimate {est_error})")]
    DepthExceeded { best: f64, est_error: f64 },
}

struct Panel<F> {
    a: F,
    b: F,
    fa: F,
    fm: F,
    fb: F,
    whole: F,
}

struct State<'f, F> {
    f: &'f dyn Fn(F) -> F,
    evaluations: usize,
    est_error: F,
    depth_exceeded: bool,
}

impl<F: Float> State<'_, F> {
    fn eval(&mut self, x: F) -> Result<F, QuadError> {
        self.evaluations += 1;
        let y = (self.f)(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(QuadError::NonFinite(x.to_f64().unwrap_or(f64::NAN)))
        }
    }

    fn recurse(&mut self, p: Panel<F>, tol: F, depth: u32) -> Result<F, QuadError> {
        let two = F::one() + F::one();
        let six = two + two + two;
        let fifteen = F::from(15.0).unwrap();

        let m = (p.a + p.b) / two;
        let lm = (p.a + m) / two;
        let rm = (m + p.b) / two;
        let flm = self.eval(lm)?;
        let frm = self.eval(rm)?;
        let left = (m - p.a) / six * (p.fa + (two + two) * flm + p.fm);
        let right = (p.b - m) / six * (p.fm + (two + two) * frm + p.fb);
        let diff = left + right - p.whole;

        if depth >= MIN_DEPTH && diff.abs() <= fifteen * tol {
            self.est_error = self.est_error + diff.abs() / fifteen;
            return Ok(left + right + diff / fifteen);
        }
        if depth >= MAX_DEPTH {
            self.depth_exceeded = true;
            self.est_error = self.est_error + diff.abs() / fifteen;
            return Ok(left + right + diff / fifteen);
        }
        let half_tol = tol / two;
        let l = self.recurse(
            Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, whole: left },
            half_tol,
            depth + 1,
        )?;
        let r = self.recurse(
            Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, whole: right },
            half_tol,
            depth + 1,
        )?;
        Ok(l + r)
    }
}

/// Integrates `f` over `[a, b]` to an estimated absolute error of `tol`.
pub fn integrate<F: Float>(f: impl Fn(F) -> F, a: F, b: F, tol: F) -> Result<QuadResult<F>, QuadError> {
    let as_f64 = |v: F| v.to_f64().unwrap_or(f64::NAN);
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(QuadError::BadInterval { a: as_f64(a), b: as_f64(b) });
    }
    if !(tol > F::zero()) {
        return Err(QuadError::BadTolerance(as_f64(tol)));
    }
    let mut st = State {
        f: &f,
        evaluations: 0,
        est_error: F::zero(),
        depth_exceeded: false,
    };
    let two = F::one() + F::one();
    let m = (a + b) / two;
    let fa = st.eval(a)?;
    let fm = st.eval(m)?;
    let fb = st.eval(b)?;
    let whole = (b - a) / (two + two + two) * (fa + (two + two) * fm + fb);
    let value = st.recurse(Panel { a, b, fa, fm, fb, whole }, tol, 0)?;

    if st.depth_exceeded {
        return Err(QuadError::DepthExceeded {
            best: as_f64(value),
            est_error: as_f64(st.est_error),
        });
    }
    Ok(QuadResult {
        value,
        est_error: st.est_error,
        evaluations: st.evaluations,
    })
}
