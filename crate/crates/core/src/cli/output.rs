//! Output normalization: every float is rounded to 12 significant digits so
//! that identical runs produce identical bytes.

use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::walk::CurvePoint;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits; `-0` becomes `0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let y: f64 = s.parse().expect("scientific notation round-trips");
    if y == 0.0 {
        0.0
    } else {
        y
    }
}

pub fn format_float(x: f64) -> String {
    let y = round_sig(x);
    if !y.is_finite() {
        String::new()
    } else if y != 0.0 && !(1e-5..1e15).contains(&y.abs()) {
        format!("{y:e}")
    } else {
        format!("{y}")
    }
}

fn normalize(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64 number"));
            *v = serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number);
        }
        Value::Array(items) => items.iter_mut().for_each(normalize),
        Value::Object(map) => map.values_mut().for_each(normalize),
        _ => {}
    }
}

/// Serializes `value` as pretty JSON with normalized floats.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut v = serde_json::to_value(value)?;
    normalize(&mut v);
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

/// `t,fidelity,phase_re,phase_im`, with empty phase cells where the phase is
/// undefined. A `# config=...` line leads when `header` is given.
pub fn curve_csv(points: &[CurvePoint], header: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        writeln!(out, "# config={h}").unwrap();
    }
    out.push_str("t,fidelity,phase_re,phase_im\n");
    for p in points {
        let (re, im) = match p.phase {
            Some(z) => (format_float(z.re), format_float(z.im)),
            None => (String::new(), String::new()),
        };
        writeln!(
            out,
            "{},{},{re},{im}",
            format_float(p.t),
            format_float(p.fidelity)
        )
        .unwrap();
    }
    out
}

/// Compact single-line JSON with normalized floats, for CSV headers.
pub fn compact_json<T: Serialize>(value: &T) -> Result<String> {
    let mut v = serde_json::to_value(value)?;
    normalize(&mut v);
    Ok(serde_json::to_string(&v)?)
}
