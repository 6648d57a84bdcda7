//! Resolution of command arguments into values: a fixture name, a file
//! path, `-` or nothing for stdin, or inline text. Text may be the
//! human-readable form or JSON, including JSON emitted by another command.

use std::io::Read;
use std::path::Path;

use braidcurve_core::{BandRepresentation, BraidWord, BranchParam};
use braidcurve_group::GroupPresentation;
use braidcurve_monodromy::PolyCurve;
use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::error::CliError;
use crate::fixtures::{FixtureData, FixtureSet};

/// Reads the raw text behind an argument.
pub fn read_source(arg: Option<&str>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match arg {
        None | Some("-") => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
            if text.trim().is_empty() {
                return Err(CliError::Usage("no input given and stdin is empty".into()));
            }
            Ok(text)
        }
        Some(s) if Path::new(s).is_file() => {
            std::fs::read_to_string(s).map_err(|e| CliError::Usage(format!("reading {s}: {e}")))
        }
        Some(s) => Ok(s.to_string()),
    }
}

/// Deserializes `T` from `v` or from a nested field named in `keys`, so
/// that wrapped outputs of other commands are accepted.
fn extract<T: DeserializeOwned>(v: &Value, keys: &[&str]) -> Option<T> {
    if let Ok(t) = serde_json::from_value(v.clone()) {
        return Some(t);
    }
    keys.iter().filter_map(|k| v.get(k)).find_map(|inner| match inner {
        Value::String(s) => serde_json::from_value(Value::String(s.clone())).ok(),
        other => extract(other, keys),
    })
}

fn json_value(text: &str) -> Option<Value> {
    let t = text.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        serde_json::from_str(t).ok()
    } else {
        None
    }
}

fn nested_text<'a>(v: &'a Value, keys: &[&str]) -> Option<&'a str> {
    keys.iter().find_map(|k| v.get(k).and_then(Value::as_str))
}

pub fn braid(arg: Option<&str>, stdin: &mut dyn Read) -> Result<BraidWord, CliError> {
    let text = read_source(arg, stdin)?;
    if let Some(v) = json_value(&text) {
        if let Some(b) = extract::<BraidWord>(&v, &["word"]) {
            return Ok(b);
        }
        if let Some(s) = nested_text(&v, &["word"]) {
            return Ok(s.parse()?);
        }
        return Err(CliError::Domain("JSON input does not describe a braid word".into()));
    }
    Ok(text.trim().parse()?)
}

/// Band fixtures resolve to the factorization of `Δ²` they stand for.
pub fn bands(arg: Option<&str>, stdin: &mut dyn Read, fixtures: &FixtureSet) -> Result<BandRepresentation, CliError> {
    if let Some(f) = arg.and_then(|a| fixtures.get(a)) {
        return match &f.data {
            FixtureData::Bands { bands, target, .. } => {
                crate::fixtures::full_twist_factorization(bands, *target).map_err(CliError::Domain)
            }
            _ => Err(CliError::Usage(format!("fixture {} is not a band representation", f.name))),
        };
    }
    let text = read_source(arg, stdin)?;
    if let Some(v) = json_value(&text) {
        if let Some(r) = extract::<BandRepresentation>(&v, &["bands", "representation"]) {
            return Ok(r);
        }
        if let Some(s) = nested_text(&v, &["bands", "representation"]) {
            return Ok(s.parse()?);
        }
        return Err(CliError::Domain("JSON input does not describe a band representation".into()));
    }
    Ok(text.trim().parse()?)
}

pub fn branch(arg: Option<&str>, stdin: &mut dyn Read, fixtures: &FixtureSet) -> Result<BranchParam, CliError> {
    if let Some(f) = arg.and_then(|a| fixtures.get(a)) {
        return match &f.data {
            FixtureData::Branch { branch, .. } => Ok(branch.parse()?),
            _ => Err(CliError::Usage(format!("fixture {} is not a branch", f.name))),
        };
    }
    let text = read_source(arg, stdin)?;
    if let Some(v) = json_value(&text) {
        if let Some(b) = extract::<BranchParam>(&v, &["branch"]) {
            return Ok(b);
        }
        if let Some(s) = nested_text(&v, &["branch"]) {
            return Ok(s.parse()?);
        }
        return Err(CliError::Domain("JSON input does not describe a branch".into()));
    }
    Ok(text.trim().parse()?)
}

pub fn poly(arg: Option<&str>, stdin: &mut dyn Read, fixtures: &FixtureSet) -> Result<PolyCurve, CliError> {
    if let Some(f) = arg.and_then(|a| fixtures.get(a)) {
        return match &f.data {
            FixtureData::Polynomial { poly, .. } => Ok(poly.clone()),
            _ => Err(CliError::Usage(format!("fixture {} is not a polynomial", f.name))),
        };
    }
    let text = read_source(arg, stdin)?;
    let v = json_value(&text).ok_or_else(|| CliError::Domain("polynomials are read as JSON".into()))?;
    if let Some(p) = extract::<PolyCurve>(&v, &["poly", "polynomial"]) {
        return Ok(p);
    }
    Ok(PolyCurve::from_json(&text)?)
}

pub fn presentation(arg: Option<&str>, stdin: &mut dyn Read) -> Result<GroupPresentation, CliError> {
    let text = read_source(arg, stdin)?;
    if let Some(v) = json_value(&text) {
        return extract::<GroupPresentation>(&v, &["presentation"])
            .ok_or_else(|| CliError::Domain("JSON input does not describe a group presentation".into()));
    }
    Ok(text.trim().parse()?)
}
