//! Structure definition files.
//!
//! ```toml
//! variables = ["x", "y", "z", "a", "b", "c"]
//! central = ["a", "b", "c"]
//!
//! [brackets]
//! "x,y" = "a*z^2"
//! "x,z" = "b*y^2"
//! "y,z" = "c*x^2"
//! ```
//!
//! Log-canonical structures may instead give `omega`, a skew matrix whose
//! entries are integers or rational strings such as `"-1/2"`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use super::format::format_expr;
use super::parse::parse_expr;
use crate::algebra::{parse_scalar, Scalar};
use crate::error::{Error, Result};
use crate::poisson::{structure_validate, PoissonStructure, SkewMatrix};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadOptions {
    pub skip_jacobi: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StructureFile {
    variables: Vec<String>,
    #[serde(default)]
    central: Vec<String>,
    omega: Option<Vec<Vec<toml::Value>>>,
    brackets: Option<BTreeMap<String, String>>,
}

pub fn load_structure(path: impl AsRef<Path>, options: LoadOptions) -> Result<PoissonStructure> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    parse_structure(&text, options)
}

/// Same as [`load_structure`] on the file contents.
pub fn parse_structure(text: &str, options: LoadOptions) -> Result<PoissonStructure> {
    let file: StructureFile = toml::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    check_names(&file.variables)?;
    let vars = file.variables;
    let mut s = match (file.omega, file.brackets) {
        (Some(rows), None) => {
            let rows = rows
                .iter()
                .map(|r| r.iter().map(scalar_value).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            if rows.len() != vars.len() {
                return Err(Error::Malformed(format!(
                    "omega has {} rows for {} variables",
                    rows.len(),
                    vars.len()
                )));
            }
            PoissonStructure::log_canonical(vars, SkewMatrix::new(rows)?)?
        }
        (None, Some(brackets)) => {
            let mut entries = Vec::new();
            for (pair, expr) in &brackets {
                let (a, b) = pair.split_once(',').ok_or_else(|| {
                    Error::Malformed(format!("bracket key {pair:?} is not \"u,v\""))
                })?;
                let index = |name: &str| {
                    vars.iter().position(|v| v == name.trim()).ok_or_else(|| {
                        Error::Malformed(format!("undeclared variable {:?}", name.trim()))
                    })
                };
                entries.push(((index(a)?, index(b)?), parse_expr(expr, &vars)?));
            }
            PoissonStructure::from_upper(vars, entries)?
        }
        _ => {
            return Err(Error::Malformed(
                "exactly one of `omega` and `brackets` is required".into(),
            ))
        }
    };
    let central: Vec<&str> = file.central.iter().map(String::as_str).collect();
    s = s.with_central(&central)?;
    if !options.skip_jacobi {
        let report = structure_validate(&mut s)?;
        if let Some(((i, j, k), jac)) = report.failures.first() {
            let v = s.variables();
            return Err(Error::JacobiFailed(format!(
                "({}, {}, {}): {}",
                v[*i],
                v[*j],
                v[*k],
                format_expr(jac, v)
            )));
        }
    }
    Ok(s)
}

fn scalar_value(v: &toml::Value) -> Result<Scalar> {
    match v {
        toml::Value::Integer(k) => Ok(Scalar::from_integer((*k).into())),
        toml::Value::String(s) => {
            parse_scalar(s).ok_or_else(|| Error::Malformed(format!("bad rational {s:?}")))
        }
        other => Err(Error::Malformed(format!("bad omega entry {other}"))),
    }
}

fn check_names(vars: &[String]) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        let mut chars = v.chars();
        let ok = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && chars.all(|c| c.is_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::Malformed(format!("invalid variable name {v:?}")));
        }
        if vars[..i].contains(v) {
            return Err(Error::Malformed(format!("variable {v:?} declared twice")));
        }
    }
    Ok(())
}
