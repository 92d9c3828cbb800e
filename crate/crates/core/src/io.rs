//! JSON input formats.  Numbers are decimal or "p/q" strings so exact
//! rational values survive the round trip (JSON numbers are floats).
//!
//! Jet file:   { "n": 4, "V": [4], "gradV": [4][4], "T": [4][4][4],
//!               "gradT": [4][4][4][4], "riem_g": [4][4][4][4], "lapRg": s }
//! Twist file: { "m": m, "gamma_diag": [m], "Phi": [m][m] of [re, im],
//!               "gradPhi": [4][m][m], "Omega": [4][4][m][m] }

use serde_json::Value;

use crate::clifford::CMat;
use crate::scalar::{parse_rat, GRat, Rat, Scalar};
use crate::spectral::TwistData;
use crate::tensor::Tensor;
use crate::torsion::TorsionJet;
use crate::Error;

fn parse_err(path: &str, what: &str) -> Error {
    Error::Parse(format!("{path}: {what}"))
}

fn get<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value, Error> {
    v.get(key).ok_or_else(|| parse_err(path, &format!("missing field `{key}`")))
}

fn as_array<'a>(v: &'a Value, len: usize, path: &str) -> Result<&'a Vec<Value>, Error> {
    let arr = v.as_array().ok_or_else(|| parse_err(path, "expected an array"))?;
    if arr.len() != len {
        return Err(parse_err(path, &format!("expected {len} entries, got {}", arr.len())));
    }
    Ok(arr)
}

/// A rational from a JSON string ("p/q", integer or decimal) or number.
fn scalar_value(v: &Value, path: &str) -> Result<Rat, Error> {
    match v {
        Value::String(s) => parse_rat(s).map_err(|e| parse_err(path, &e.to_string())),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_int(i))
            } else {
                parse_rat(&n.to_string()).map_err(|e| parse_err(path, &e.to_string()))
            }
        }
        _ => Err(parse_err(path, "expected a number or a rational string")),
    }
}

/// Nested arrays of shape dim^rank into a tensor, tracking the field path.
fn tensor_value(v: &Value, dim: usize, rank: usize, path: &str) -> Result<Tensor<Rat>, Error> {
    let mut t = Tensor::zeros(dim, rank);
    fn walk(
        v: &Value,
        dim: usize,
        depth: usize,
        rank: usize,
        idx: &mut Vec<usize>,
        t: &mut Tensor<Rat>,
        path: &str,
    ) -> Result<(), Error> {
        if depth == rank {
            let x = scalar_value(v, path)?;
            t.set(idx, x);
            return Ok(());
        }
        let arr = as_array(v, dim, path)?;
        for (i, entry) in arr.iter().enumerate() {
            idx.push(i);
            walk(entry, dim, depth + 1, rank, idx, t, &format!("{path}[{i}]"))?;
            idx.pop();
        }
        Ok(())
    }
    walk(v, dim, 0, rank, &mut Vec::new(), &mut t, path)?;
    Ok(t)
}

/// Parse a jet file into an exact-rational jet.
pub fn parse_jet(text: &str) -> Result<TorsionJet<GRat>, Error> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("jet file: {e}")))?;
    let n = get(&root, "n", "jet")?
        .as_u64()
        .ok_or_else(|| parse_err("jet.n", "expected a positive integer"))? as usize;
    if n != 4 {
        return Err(parse_err("jet.n", "only dimension 4 is supported"));
    }
    let v = tensor_value(get(&root, "V", "jet")?, n, 1, "jet.V")?;
    let grad_v = tensor_value(get(&root, "gradV", "jet")?, n, 2, "jet.gradV")?;
    let t = tensor_value(get(&root, "T", "jet")?, n, 3, "jet.T")?;
    let grad_t = tensor_value(get(&root, "gradT", "jet")?, n, 4, "jet.gradT")?;
    let riem_g = tensor_value(get(&root, "riem_g", "jet")?, n, 4, "jet.riem_g")?;
    let lap_rg = scalar_value(get(&root, "lapRg", "jet")?, "jet.lapRg")?;
    let jet = TorsionJet::new(
        n,
        v.map(|x| GRat::from_rat(x)),
        grad_v.map(|x| GRat::from_rat(x)),
        t.map(|x| GRat::from_rat(x)),
        grad_t.map(|x| GRat::from_rat(x)),
        riem_g.map(|x| GRat::from_rat(x)),
        GRat::from_rat(&lap_rg),
    )?;
    Ok(jet)
}

/// A complex entry [re, im] (each a rational string or number).
fn complex_value(v: &Value, path: &str) -> Result<GRat, Error> {
    let arr = as_array(v, 2, path)?;
    let re = scalar_value(&arr[0], &format!("{path}[0]"))?;
    let im = scalar_value(&arr[1], &format!("{path}[1]"))?;
    Ok(GRat::new(re, im))
}

fn cmat_value(v: &Value, m: usize, path: &str) -> Result<CMat<GRat>, Error> {
    let rows = as_array(v, m, path)?;
    let mut out = CMat::zeros(m);
    for (i, row) in rows.iter().enumerate() {
        let cols = as_array(row, m, &format!("{path}[{i}]"))?;
        for (j, entry) in cols.iter().enumerate() {
            out.set(i, j, complex_value(entry, &format!("{path}[{i}][{j}]"))?);
        }
    }
    Ok(out)
}

/// Parse a twist file into exact-rational twist data.
pub fn parse_twist(text: &str) -> Result<TwistData<GRat>, Error> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("twist file: {e}")))?;
    let m = get(&root, "m", "twist")?
        .as_u64()
        .ok_or_else(|| parse_err("twist.m", "expected a positive integer"))? as usize;
    if m == 0 {
        return Err(parse_err("twist.m", "rank must be positive"));
    }
    let gd = as_array(get(&root, "gamma_diag", "twist")?, m, "twist.gamma_diag")?;
    let mut gamma_diag = Vec::with_capacity(m);
    for (i, g) in gd.iter().enumerate() {
        let x = g
            .as_i64()
            .ok_or_else(|| parse_err(&format!("twist.gamma_diag[{i}]"), "expected +-1"))?;
        gamma_diag.push(x);
    }
    let phi = cmat_value(get(&root, "Phi", "twist")?, m, "twist.Phi")?;
    let gp = as_array(get(&root, "gradPhi", "twist")?, 4, "twist.gradPhi")?;
    let mut grad_phi = Vec::with_capacity(4);
    for (i, entry) in gp.iter().enumerate() {
        grad_phi.push(cmat_value(entry, m, &format!("twist.gradPhi[{i}]"))?);
    }
    let om = as_array(get(&root, "Omega", "twist")?, 4, "twist.Omega")?;
    let mut omega_h = Vec::with_capacity(4);
    for (i, row) in om.iter().enumerate() {
        let cols = as_array(row, 4, &format!("twist.Omega[{i}]"))?;
        let mut out_row = Vec::with_capacity(4);
        for (j, entry) in cols.iter().enumerate() {
            out_row.push(cmat_value(entry, m, &format!("twist.Omega[{i}][{j}]"))?);
        }
        omega_h.push(out_row);
    }
    TwistData::new(gamma_diag, phi, grad_phi, omega_h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_to_string;

    #[test]
    fn jet_round_trip() {
        let text = r#"{
            "n": 4,
            "V": ["0", "0", "0", "1/2"],
            "gradV": [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
            "T": [[["0","0","0","0"],["0","0","1","0"],["0","-1","0","0"],["0","0","0","0"]],
                  [["0","0","-1","0"],["0","0","0","0"],["1","0","0","0"],["0","0","0","0"]],
                  [["0","1","0","0"],["-1","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                  [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]],
            "gradT": [[[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]],
                      [[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]],
                      [[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]],
                      [[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                       [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]]],
            "riem_g": [[[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]],
                       [[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]],
                       [[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]],
                       [[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                        [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]]],
            "lapRg": "0"
        }"#;
        let jet = parse_jet(text).unwrap();
        assert_eq!(rat_to_string(&jet.v.get(&[3]).re), "1/2");
        assert_eq!(jet.t.get(&[0, 1, 2]), &GRat::from_int(1));
    }

    #[test]
    fn errors_carry_field_paths() {
        let bad = r#"{"n": 4, "V": ["0","0","0"]}"#;
        let err = parse_jet(bad).unwrap_err();
        assert!(format!("{err}").contains("jet.V"), "{err}");
        let bad2 = r#"{"n": 4, "V": ["0","0","0","x"],
            "gradV": [], "T": [], "gradT": [], "riem_g": [], "lapRg": "0"}"#;
        let err2 = parse_jet(bad2).unwrap_err();
        assert!(format!("{err2}").contains("jet.V[3]"), "{err2}");
    }

    #[test]
    fn twist_parse_and_validation() {
        let text = r#"{
            "m": 1,
            "gamma_diag": [1],
            "Phi": [[["1/3", "0"]]],
            "gradPhi": [[[["0","0"]]],[[["0","0"]]],[[["0","0"]]],[[["0","0"]]]],
            "Omega": [[[[["0","0"]]],[[["0","0"]]],[[["0","0"]]],[[["0","0"]]]],
                      [[[["0","0"]]],[[["0","0"]]],[[["0","0"]]],[[["0","0"]]]],
                      [[[["0","0"]]],[[["0","0"]]],[[["0","0"]]],[[["0","0"]]]],
                      [[[["0","0"]]],[[["0","0"]]],[[["0","0"]]],[[["0","0"]]]]]
        }"#;
        let twist = parse_twist(text).unwrap();
        assert_eq!(twist.m, 1);
        assert_eq!(twist.tr_gamma(), 1);
        // non-Hermitian Phi is rejected
        let bad = text.replace(r#"[[["1/3", "0"]]]"#, r#"[[["0", "1/3"]]]"#);
        assert!(parse_twist(&bad).is_err());
    }
}

// ---------------------------------------------------------------------------
// Report serialization.
// ---------------------------------------------------------------------------

/// A Gaussian rational as JSON: a "p/q" string when real, {re, im} otherwise.
pub fn grat_json(x: &GRat) -> Value {
    if x.im == Rat::zero() {
        Value::String(x.re.to_string())
    } else {
        serde_json::json!({ "re": x.re.to_string(), "im": x.im.to_string() })
    }
}

fn terms_json(terms: &[(&'static str, GRat)]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|(name, v)| serde_json::json!({ "term": name, "value": grat_json(v) }))
            .collect(),
    )
}

/// Per-term coefficient breakdown with exact totals, as a JSON value.
pub fn coeff_report_json(rep: &crate::spectral::CoeffReport<GRat>) -> Value {
    serde_json::json!({
        "method": rep.method,
        "a0": terms_json(&rep.a0),
        "a2": terms_json(&rep.a2),
        "a4": terms_json(&rep.a4),
        "totals": {
            "a0": grat_json(&rep.a0_total()),
            "a2": grat_json(&rep.a2_total()),
            "a4": grat_json(&rep.a4_total()),
        },
    })
}
