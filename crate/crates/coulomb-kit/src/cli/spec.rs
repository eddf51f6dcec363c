//! JSON input format: a versioned document naming a product group and a
//! representation built from a small prefix-tree expression language.
//!
//! ```json
//! {
//!   "schema": "coulomb-kit/repspec/1",
//!   "group": [ {"preset": "Sp", "size": 4}, {"preset": "SO", "size": 4} ],
//!   "representation": [ ["tensor", ["defining", 0], ["defining", 1]] ]
//! }
//! ```
//!
//! Expressions are arrays `[op, args…]`:
//! `["defining", factor?]`, `["sl2_irrep", k, factor?]`, `["dual", e]`,
//! `["tensor", e, e, …]`, `["direct_sum", e, …]`, `["cotangent", e]`,
//! `["weights", [[coords, mult], …]]`. Factor indices default to 0.
//! The `representation` list is direct-summed.

use crate::lie::{
    cotangent, defining_rep, direct_sum, dual, sl2_irrep, tensor, Preset, RootDatum, WeightRep,
};
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

pub const REPSPEC_SCHEMA: &str = "coulomb-kit/repspec/1";

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid spec at {location}: {message}")]
pub struct SpecError {
    pub location: String,
    pub message: String,
}

fn err(location: impl Into<String>, message: impl Into<String>) -> SpecError {
    SpecError {
        location: location.into(),
        message: message.into(),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    schema: String,
    group: Vec<Value>,
    representation: Vec<Value>,
}

/// A resolved input: the product datum, the representation, and the factor
/// layout (offset, rank, preset when applicable).
#[derive(Debug, Clone)]
pub struct ResolvedSpec {
    pub datum: RootDatum,
    pub rep: WeightRep,
    pub factors: Vec<FactorInfo>,
    /// Canonical re-serialization of the accepted input.
    pub echo: Value,
}

#[derive(Debug, Clone)]
pub struct FactorInfo {
    pub offset: usize,
    pub rank: usize,
    pub preset: Option<Preset>,
    pub name: String,
}

pub fn parse_spec(text: &str) -> Result<ResolvedSpec, SpecError> {
    let raw: RawSpec = serde_json::from_str(text)
        .map_err(|e| err("document", format!("not a valid spec document: {e}")))?;
    if raw.schema != REPSPEC_SCHEMA {
        return Err(err(
            "schema",
            format!("unsupported schema {:?}, expected {REPSPEC_SCHEMA:?}", raw.schema),
        ));
    }
    if raw.group.is_empty() {
        return Err(err("group", "at least one factor is required"));
    }

    let mut factors: Vec<FactorInfo> = Vec::new();
    let mut factor_data: Vec<RootDatum> = Vec::new();
    let mut datum = RootDatum::torus(0);
    for (i, f) in raw.group.iter().enumerate() {
        let loc = format!("group[{i}]");
        let (fd, preset) = parse_factor(f, &loc)?;
        factors.push(FactorInfo {
            offset: datum.rank(),
            rank: fd.rank(),
            preset,
            name: fd.name().to_string(),
        });
        datum = datum.product(&fd);
        factor_data.push(fd);
    }

    let total = datum.rank();
    let mut rep = WeightRep::empty(total);
    for (i, expr) in raw.representation.iter().enumerate() {
        let loc = format!("representation[{i}]");
        let part = resolve_expr(expr, &loc, &factors, &factor_data, total)?;
        rep = direct_sum(&rep, &part)
            .map_err(|e| err(&loc, format!("cannot sum representation parts: {e}")))?;
    }

    let echo = serde_json::json!({
        "schema": raw.schema,
        "group": raw.group,
        "representation": raw.representation,
    });
    Ok(ResolvedSpec {
        datum,
        rep,
        factors,
        echo,
    })
}

fn parse_factor(v: &Value, loc: &str) -> Result<(RootDatum, Option<Preset>), SpecError> {
    let obj = v
        .as_object()
        .ok_or_else(|| err(loc, "factor must be an object"))?;
    if let Some(preset_name) = obj.get("preset") {
        let name = preset_name
            .as_str()
            .ok_or_else(|| err(format!("{loc}.preset"), "preset must be a string"))?;
        let size = |key: &str| -> Result<usize, SpecError> {
            obj.get(key)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| err(loc, format!("preset {name:?} needs a non-negative integer field {key:?}")))
        };
        let preset = match name {
            "SL" => Preset::Sl(size("size")?),
            "PGL" => Preset::Pgl(size("size")?),
            "Sp" => Preset::Sp(size("size")?),
            "SO" => Preset::So(size("size")?),
            "GL" => Preset::Gl(size("size")?),
            "Torus" => Preset::Torus(size("rank")?),
            other => {
                return Err(err(
                    format!("{loc}.preset"),
                    format!("unknown preset {other:?}; expected SL, PGL, Sp, SO, GL or Torus"),
                ))
            }
        };
        let datum = RootDatum::preset(preset).map_err(|e| err(loc, e.to_string()))?;
        Ok((datum, Some(preset)))
    } else {
        #[derive(Deserialize)]
        struct Explicit {
            rank: usize,
            simple_roots: Vec<Vec<i64>>,
            simple_coroots: Vec<Vec<i64>>,
            #[serde(default)]
            name: Option<String>,
        }
        let ex: Explicit = serde_json::from_value(v.clone())
            .map_err(|e| err(loc, format!("explicit factor is malformed: {e}")))?;
        let datum = RootDatum::new(
            ex.rank,
            ex.simple_roots,
            ex.simple_coroots,
            ex.name.unwrap_or_else(|| "explicit".to_string()),
        )
        .map_err(|e| err(loc, e.to_string()))?;
        Ok((datum, None))
    }
}

fn resolve_expr(
    v: &Value,
    loc: &str,
    factors: &[FactorInfo],
    factor_data: &[RootDatum],
    total: usize,
) -> Result<WeightRep, SpecError> {
    let arr = v
        .as_array()
        .ok_or_else(|| err(loc, "expression must be an array [op, args…]"))?;
    let op = arr
        .first()
        .and_then(Value::as_str)
        .ok_or_else(|| err(loc, "expression must start with an operation name"))?;
    let factor_index = |pos: usize| -> Result<usize, SpecError> {
        match arr.get(pos) {
            None => Ok(0),
            Some(x) => x
                .as_u64()
                .map(|i| i as usize)
                .filter(|&i| i < factors.len())
                .ok_or_else(|| {
                    err(
                        format!("{loc}[{pos}]"),
                        format!("factor index must be an integer below {}", factors.len()),
                    )
                }),
        }
    };
    match op {
        "defining" => {
            let f = factor_index(1)?;
            let preset = factors[f].preset.ok_or_else(|| {
                err(loc, "defining requires a preset factor (explicit data have no defining rep)")
            })?;
            let rep = defining_rep(preset).map_err(|e| err(loc, e.to_string()))?;
            Ok(rep.embed(factors[f].offset, total))
        }
        "sl2_irrep" => {
            let k = arr
                .get(1)
                .and_then(Value::as_u64)
                .ok_or_else(|| err(format!("{loc}[1]"), "sl2_irrep needs a highest weight k ≥ 0"))?;
            let f = factor_index(2)?;
            let rep = sl2_irrep(&factor_data[f], k).map_err(|e| err(loc, e.to_string()))?;
            Ok(rep.embed(factors[f].offset, total))
        }
        "dual" => {
            let inner = arr
                .get(1)
                .ok_or_else(|| err(loc, "dual needs one argument"))?;
            Ok(dual(&resolve_expr(inner, &format!("{loc}[1]"), factors, factor_data, total)?))
        }
        "cotangent" => {
            let inner = arr
                .get(1)
                .ok_or_else(|| err(loc, "cotangent needs one argument"))?;
            Ok(cotangent(&resolve_expr(
                inner,
                &format!("{loc}[1]"),
                factors,
                factor_data,
                total,
            )?))
        }
        "tensor" | "direct_sum" => {
            if arr.len() < 3 {
                return Err(err(loc, format!("{op} needs at least two arguments")));
            }
            let mut acc =
                resolve_expr(&arr[1], &format!("{loc}[1]"), factors, factor_data, total)?;
            for (j, item) in arr.iter().enumerate().skip(2) {
                let part = resolve_expr(item, &format!("{loc}[{j}]"), factors, factor_data, total)?;
                acc = if op == "tensor" {
                    tensor(&acc, &part)
                } else {
                    direct_sum(&acc, &part)
                }
                .map_err(|e| err(loc, e.to_string()))?;
            }
            Ok(acc)
        }
        "weights" => {
            let pairs = arr
                .get(1)
                .and_then(Value::as_array)
                .ok_or_else(|| err(loc, "weights needs a list of [coords, multiplicity] pairs"))?;
            let mut out = Vec::new();
            for (j, p) in pairs.iter().enumerate() {
                let ploc = format!("{loc}[1][{j}]");
                let pair = p
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| err(&ploc, "expected [coords, multiplicity]"))?;
                let coords: Vec<i64> = pair[0]
                    .as_array()
                    .ok_or_else(|| err(&ploc, "coords must be an integer array"))?
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(|| err(&ploc, "coords must be integers")))
                    .collect::<Result<_, _>>()?;
                if coords.len() != total {
                    return Err(err(
                        &ploc,
                        format!("weight has {} coordinates, the group has rank {total}", coords.len()),
                    ));
                }
                let mult = pair[1]
                    .as_u64()
                    .ok_or_else(|| err(&ploc, "multiplicity must be a non-negative integer"))?;
                out.push((coords, mult));
            }
            WeightRep::from_pairs(total, out).map_err(|e| err(loc, e.to_string()))
        }
        other => Err(err(
            loc,
            format!("unknown operation {other:?}; expected defining, sl2_irrep, dual, tensor, direct_sum, cotangent or weights"),
        )),
    }
}
