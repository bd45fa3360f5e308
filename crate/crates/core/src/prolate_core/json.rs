use super::{ProlateBasis, ProlateError, DEFAULT_MARGIN};
use crate::bessel_bases::{Bandwidth, Family};
use crate::specfun::Order;
use nalgebra::DMatrix;
use serde::Deserialize;
use std::fmt::Write;

/// Seventeen significant digits.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// `{"family", "alpha", "c", "K", "lambdas", "B"}` with `B[k][n]`.
pub fn basis_to_json(basis: &ProlateBasis) -> String {
    let mut s = String::new();
    let (family, alpha) = match basis.family {
        Family::Fourier => ("fourier", "null".to_string()),
        Family::Hankel(a) => ("hankel", num(a.value())),
    };
    write!(s, "{{\n  \"family\": \"{family}\",\n  \"alpha\": {alpha},\n  \"c\": {},\n  \"K\": {},\n", num(basis.c.value()), basis.k).unwrap();
    let lambdas: Vec<String> = basis.lambdas.iter().map(|v| num(*v)).collect();
    write!(s, "  \"lambdas\": [{}],\n  \"B\": [\n", lambdas.join(", ")).unwrap();
    for k in 0..basis.k {
        let row: Vec<String> = (0..basis.k).map(|n| num(basis.b[(k, n)])).collect();
        let sep = if k + 1 < basis.k { "," } else { "" };
        writeln!(s, "    [{}]{sep}", row.join(", ")).unwrap();
    }
    s.push_str("  ]\n}\n");
    s
}

#[derive(Deserialize)]
struct Raw {
    family: String,
    alpha: Option<f64>,
    c: f64,
    #[serde(rename = "K")]
    k: usize,
    lambdas: Vec<f64>,
    #[serde(rename = "B")]
    b: Vec<Vec<f64>>,
}

pub fn basis_from_json(text: &str) -> Result<ProlateBasis, ProlateError> {
    let raw: Raw = serde_json::from_str(text).map_err(|e| ProlateError::Format(e.to_string()))?;
    let bad = |m: &str| ProlateError::Format(m.to_string());
    let c = Bandwidth::new(raw.c).map_err(|e| ProlateError::Format(e.to_string()))?;
    let family = match (raw.family.as_str(), raw.alpha) {
        ("fourier", None) => Family::Fourier,
        ("hankel", Some(a)) => Family::Hankel(Order::new(a).map_err(|e| ProlateError::Format(e.to_string()))?),
        _ => return Err(bad("family/alpha combination")),
    };
    if raw.k < 4 || raw.lambdas.len() != raw.k || raw.b.len() != raw.k || raw.b.iter().any(|r| r.len() != raw.k) {
        return Err(bad("dimensions do not match K"));
    }
    let b = DMatrix::from_fn(raw.k, raw.k, |r, c| raw.b[r][c]);
    Ok(ProlateBasis { family, c, k: raw.k, b, lambdas: raw.lambdas, margin: DEFAULT_MARGIN.min(raw.k / 2) })
}
