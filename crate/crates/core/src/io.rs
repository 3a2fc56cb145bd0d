//! JSON formats for algebras, modules, and elements.
//!
//! Rationals travel as strings `"p/q"` in lowest terms. Writing a parsed file
//! back out with [`to_canonical_json`] reproduces a canonical file byte for
//! byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{LieSuperalgebra, Parity};
use crate::enveloping::{QuotientClass, TermOrder, UEElement};
use crate::error::{Error, Result};
use crate::frobenius::OddSubsetOrder;
use crate::linalg::Matrix;
use crate::repr::GradedModule;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub basis: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub left: String,
    pub right: String,
    pub result: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub even_basis: Vec<String>,
    pub odd_basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub algebra: String,
    pub dim: usize,
    pub parities: Vec<Parity>,
    /// Basis name → dense matrix of rational strings; absent means zero.
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<String>>>,
}

impl<'de> Deserialize<'de> for Parity {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        match String::deserialize(de)?.as_str() {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(serde::de::Error::custom(format!(
                "parity must be \"even\" or \"odd\", got \"{other}\""
            ))),
        }
    }
}

fn scalar(text: &str) -> Result<Scalar> {
    parse_scalar(text).map_err(|e| Error::Input(e.to_string()))
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<LieSuperalgebra> {
        let mut names = self.even_basis.clone();
        names.extend(self.odd_basis.iter().cloned());
        let lookup = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Input(format!("unknown basis element `{name}`")))
        };
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for rec in &self.brackets {
            let pair = (lookup(&rec.left)?, lookup(&rec.right)?);
            let mut result = Vec::with_capacity(rec.result.len());
            for t in &rec.result {
                result.push((lookup(&t.basis)?, scalar(&t.coeff)?));
            }
            brackets.push((pair, result));
        }
        LieSuperalgebra::new(
            self.name.clone(),
            self.even_basis.clone(),
            self.odd_basis.clone(),
            brackets,
        )
    }

    /// Canonical file for an algebra: nonzero brackets in index order.
    pub fn from_algebra(alg: &LieSuperalgebra) -> Self {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let result = alg.bracket(i, j);
                if result.is_empty() {
                    continue;
                }
                brackets.push(BracketRecord {
                    left: alg.basis_name(i).into(),
                    right: alg.basis_name(j).into(),
                    result: result
                        .iter()
                        .map(|(k, c)| TermRecord {
                            basis: alg.basis_name(*k).into(),
                            coeff: format_scalar(c),
                        })
                        .collect(),
                });
            }
        }
        AlgebraFile {
            name: alg.name().into(),
            even_basis: alg.names()[..alg.n_even()].to_vec(),
            odd_basis: alg.names()[alg.n_even()..].to_vec(),
            brackets,
        }
    }
}

impl ModuleFile {
    pub fn to_module(&self, alg: &LieSuperalgebra) -> Result<GradedModule> {
        if self.algebra != alg.name() {
            return Err(Error::Input(format!(
                "module is for algebra `{}`, loaded algebra is `{}`",
                self.algebra,
                alg.name()
            )));
        }
        if self.parities.len() != self.dim {
            return Err(Error::Input(format!(
                "{} parities for dimension {}",
                self.parities.len(),
                self.dim
            )));
        }
        let d = self.dim;
        let mut rho = vec![Matrix::zeros(d, d); alg.dim()];
        for (name, rows) in &self.action {
            let i = alg.index_of(name).ok_or_else(|| {
                Error::Input(format!("action given for unknown basis element `{name}`"))
            })?;
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Err(Error::Input(format!("action of `{name}` is not {d}x{d}")));
            }
            let parsed = rows
                .iter()
                .map(|r| r.iter().map(|s| scalar(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            rho[i] = Matrix::from_rows(parsed);
        }
        GradedModule::new(alg, self.parities.clone(), rho)
    }

    /// Canonical file for a module: zero actions omitted.
    pub fn from_module(alg: &LieSuperalgebra, module: &GradedModule) -> Self {
        let action = module
            .rho
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, m)| (alg.basis_name(i).to_string(), matrix_strings(m)))
            .collect();
        ModuleFile {
            algebra: alg.name().into(),
            dim: module.dim(),
            parities: module.parities.clone(),
            action,
        }
    }
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_scalar).collect())
        .collect()
}

/// Pretty JSON with a trailing newline; the canonical on-disk form.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

pub fn parse_algebra_json(text: &str) -> Result<AlgebraFile> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("algebra file: {e}")))
}

pub fn parse_module_json(text: &str) -> Result<ModuleFile> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("module file: {e}")))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExprTerm {
    pub monomial: Vec<String>,
    pub coeff: String,
}

/// An element as a list of `{monomial: [generator names], coeff}`, the
/// monomial spelled in even-first order. Terms sorted by degree, then word.
pub fn expression(u: &UEElement) -> Vec<ExprTerm> {
    let alg = u.algebra();
    let mut terms: Vec<_> = u.terms().iter().collect();
    terms.sort_by_key(|(m, _)| (m.degree(), m.word(TermOrder::EvenFirst)));
    terms
        .into_iter()
        .map(|(m, c)| ExprTerm {
            monomial: m
                .word(TermOrder::EvenFirst)
                .into_iter()
                .map(|g| alg.basis_name(g).to_string())
                .collect(),
            coeff: format_scalar(c),
        })
        .collect()
}

/// Human-readable single-line form of an element.
pub fn expression_string(u: &UEElement) -> String {
    u.to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassTerm {
    pub subset: Vec<String>,
    pub coeff: String,
}

pub fn subset_names(alg: &LieSuperalgebra, subset: u64) -> Vec<String> {
    let n0 = alg.n_even();
    (0..alg.n_odd())
        .filter(|b| subset >> b & 1 == 1)
        .map(|b| alg.basis_name(n0 + b).to_string())
        .collect()
}

/// A quotient class listed in subset order.
pub fn class_expression(alg: &LieSuperalgebra, class: &QuotientClass) -> Vec<ClassTerm> {
    let order = OddSubsetOrder::new(alg.n_odd());
    order
        .subsets()
        .iter()
        .filter_map(|s| {
            class.get(s).map(|c| ClassTerm {
                subset: subset_names(alg, *s),
                coeff: format_scalar(c),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn algebra_round_trip() {
        let text = r#"{
  "name": "bad2",
  "even_basis": ["X"],
  "odd_basis": ["theta"],
  "brackets": [
    {"left": "X", "right": "theta", "result": [{"basis": "theta", "coeff": "2/2"}]},
    {"left": "theta", "right": "X", "result": [{"basis": "theta", "coeff": "-1"}]}
  ]
}"#;
        let alg = parse_algebra_json(text).unwrap().to_algebra().unwrap();
        assert_eq!(alg.structure_constant(0, 1, 1), int(1));
        let canonical = to_canonical_json(&AlgebraFile::from_algebra(&alg));
        let again = parse_algebra_json(&canonical)
            .unwrap()
            .to_algebra()
            .unwrap();
        assert_eq!(
            to_canonical_json(&AlgebraFile::from_algebra(&again)),
            canonical
        );
        assert!(canonical.contains("\"coeff\": \"1\""));
    }

    #[test]
    fn unknown_names_and_bad_rationals() {
        let unknown = r#"{"name":"a","even_basis":["X"],"odd_basis":[],
            "brackets":[{"left":"X","right":"Y","result":[]}]}"#;
        assert!(matches!(
            parse_algebra_json(unknown).unwrap().to_algebra(),
            Err(Error::Input(_))
        ));
        let zero_den = r#"{"name":"a","even_basis":["X"],"odd_basis":[],
            "brackets":[{"left":"X","right":"X","result":[{"basis":"X","coeff":"1/0"}]}]}"#;
        assert!(matches!(
            parse_algebra_json(zero_den).unwrap().to_algebra(),
            Err(Error::Input(_))
        ));
        assert!(parse_algebra_json("{\"name\": ").is_err());
    }

    #[test]
    fn module_parsing_checks_shape() {
        let alg = LieSuperalgebra::new("g1", vec![], vec!["x".into()], vec![]).unwrap();
        let good = r#"{"algebra":"g1","dim":2,"parities":["even","odd"],
            "action":{"x":[["0","0"],["1","0"]]}}"#;
        let module = parse_module_json(good).unwrap().to_module(&alg).unwrap();
        assert_eq!(module.rho[0][(1, 0)], int(1));
        let bad_shape =
            r#"{"algebra":"g1","dim":2,"parities":["even","odd"],"action":{"x":[["0"]]}}"#;
        assert!(matches!(
            parse_module_json(bad_shape).unwrap().to_module(&alg),
            Err(Error::Input(_))
        ));
        let wrong_alg = r#"{"algebra":"other","dim":1,"parities":["even"]}"#;
        assert!(matches!(
            parse_module_json(wrong_alg).unwrap().to_module(&alg),
            Err(Error::Input(_))
        ));
        assert!(parse_module_json(r#"{"algebra":"g1","dim":1,"parities":["up"]}"#).is_err());
    }
}
