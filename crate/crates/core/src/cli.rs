//! Batch commands behind the `superhaar` binary.
//!
//! Every command yields an [`Outcome`]: a JSON document for stdout, optional
//! diagnostics for stderr, and an exit code drawn from [`exit`].

use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::{EvenPartReport, LieSuperalgebra};
use crate::error::Error;
use crate::frobenius::{dual_pair, invariant_from_matrix, pi_parity, FrobeniusMatrix};
use crate::io::{
    class_expression, expression, matrix_strings, parse_algebra_json, parse_module_json,
    subset_names,
};
use crate::repr::{
    brute_force_quotient_invariants, check_right_integral, check_semisimple_over_even,
    integral_matrix, is_left_invariant, proportional, validate_module,
};
use crate::scalar::format_scalar;

pub mod exit {
    pub const OK: i32 = 0;
    /// Unreadable file, malformed JSON, unknown names, bad shapes.
    pub const IO_OR_PARSE: i32 = 1;
    /// The algebra or module violates its defining identities, or exceeds
    /// the odd-dimension bound.
    pub const INVALID: i32 = 2;
    pub const NO_INVARIANT: i32 = 3;
    pub const NOT_SEMISIMPLE: i32 = 4;
    /// A property guaranteed by theory failed to hold; indicates a bug.
    pub const INTERNAL: i32 = 5;
}

pub const MAX_ODD_VAR: &str = "SUPERHAAR_MAX_ODD";
pub const DEFAULT_MAX_ODD: usize = 6;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Option<Value>,
    pub stderr: Vec<String>,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome {
            code: exit::OK,
            stdout: Some(value),
            stderr: Vec::new(),
        }
    }

    fn with(code: i32, value: Value) -> Self {
        Outcome {
            code,
            stdout: Some(value),
            stderr: Vec::new(),
        }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        Outcome {
            code,
            stdout: None,
            stderr: vec![message.into()],
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct InvariantFlags {
    pub emit_matrix: bool,
    pub emit_dual_pair: bool,
    pub oracle: bool,
    pub assume_reductive: bool,
}

/// Reads the odd-dimension bound from the environment.
pub fn max_odd_from_env() -> Result<usize, String> {
    match std::env::var(MAX_ODD_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_ODD_VAR} must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_MAX_ODD),
    }
}

fn load_algebra(path: &Path) -> Result<LieSuperalgebra, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Outcome::fail(
            exit::IO_OR_PARSE,
            format!("cannot read {}: {e}", path.display()),
        )
    })?;
    parse_algebra_json(&text)
        .and_then(|f| f.to_algebra())
        .map_err(|e| Outcome::fail(exit::IO_OR_PARSE, format!("{}: {e}", path.display())))
}

fn load_valid_algebra(path: &Path, max_odd: usize) -> Result<Arc<LieSuperalgebra>, Outcome> {
    let alg = load_algebra(path)?;
    let report = alg.validate();
    if !report.is_valid() {
        let mut out = Outcome::with(
            exit::INVALID,
            json!({ "algebra": alg.name(), "valid": false, "violations": report.violations }),
        );
        out.stderr
            .push(format!("{} is not a Lie superalgebra", alg.name()));
        return Err(out);
    }
    if alg.n_odd() > max_odd {
        return Err(Outcome::fail(
            exit::INVALID,
            Error::TooManyOdd {
                m: alg.n_odd(),
                max: max_odd,
            }
            .to_string(),
        ));
    }
    Ok(Arc::new(alg))
}

fn internal(e: Error) -> Outcome {
    Outcome::fail(exit::INTERNAL, e.to_string())
}

fn lambda_json(alg: &LieSuperalgebra) -> Value {
    let mut map = Map::new();
    for (i, l) in alg.lambda_values().iter().enumerate() {
        map.insert(alg.basis_name(i).to_string(), json!(format_scalar(l)));
    }
    Value::Object(map)
}

fn even_part_json(report: &EvenPartReport) -> Value {
    let vecs = |vs: &[Vec<crate::Scalar>]| -> Vec<Vec<String>> {
        vs.iter()
            .map(|v| v.iter().map(format_scalar).collect())
            .collect()
    };
    json!({
        "center": vecs(&report.center),
        "derived": vecs(&report.derived),
        "center_complements_derived": report.center_complements_derived,
        "killing_nondegenerate_on_derived": report.killing_nondegenerate_on_derived,
        "certified_reductive": report.certified_reductive,
        "assumed_reductive": report.assumed_reductive,
        "central_odd_action_diagonalizable": report.central_odd_action_diagonalizable,
    })
}

fn oracle_json(alg: &Arc<LieSuperalgebra>) -> (usize, Value) {
    let basis = brute_force_quotient_invariants(alg);
    let listed: Vec<Value> = basis
        .iter()
        .map(|c| json!(class_expression(alg, c)))
        .collect();
    (basis.len(), Value::Array(listed))
}

pub fn cmd_validate(path: &Path) -> Outcome {
    let alg = match load_algebra(path) {
        Ok(a) => a,
        Err(o) => return o,
    };
    let report = alg.validate();
    let value = json!({ "algebra": alg.name(), "valid": report.is_valid(), "violations": report.violations });
    if report.is_valid() {
        Outcome::ok(value)
    } else {
        Outcome::with(exit::INVALID, value)
    }
}

pub fn cmd_invariant(path: &Path, flags: InvariantFlags, max_odd: usize) -> Outcome {
    let alg = match load_valid_algebra(path, max_odd) {
        Ok(a) => a,
        Err(o) => return o,
    };
    let even = alg.even_part_structure(flags.assume_reductive);
    let mut out = Map::new();
    out.insert("algebra".into(), json!(alg.name()));
    out.insert("trace_condition".into(), json!(alg.trace_condition_holds()));
    out.insert("lambda_values".into(), lambda_json(&alg));
    out.insert("even_part".into(), even_part_json(&even));
    out.insert("pi_parity".into(), json!(pi_parity(&alg)));
    out.insert("warnings".into(), json!(even.warnings));
    let order = crate::frobenius::OddSubsetOrder::new(alg.n_odd());
    let order_names: Vec<Vec<String>> = order
        .subsets()
        .iter()
        .map(|&s| subset_names(&alg, s))
        .collect();
    out.insert("odd_subset_order".into(), json!(order_names));

    let mut oracle_basis = None;
    if flags.oracle {
        let (dim, listed) = oracle_json(&alg);
        out.insert("oracle_dimension".into(), json!(dim));
        out.insert("oracle_basis".into(), listed);
        oracle_basis = Some(brute_force_quotient_invariants(&alg));
    }

    if let Some((index, lambda)) = alg.trace_violation() {
        let violator = alg.basis_name(index).to_string();
        out.insert("error".into(), json!("no_invariant"));
        out.insert("violator".into(), json!(violator));
        out.insert("lambda".into(), json!(format_scalar(&lambda)));
        let mut o = Outcome::with(exit::NO_INVARIANT, Value::Object(out));
        o.stderr.push(format!(
            "no invariant: trace of ad'({violator}) is {lambda}"
        ));
        return o;
    }

    let fm = match FrobeniusMatrix::build(&alg) {
        Ok(fm) => fm,
        Err(e) => return internal(e),
    };
    let inv = match invariant_from_matrix(&alg, &fm) {
        Ok(inv) => inv,
        Err(e) => return internal(e),
    };
    out.insert("z".into(), json!(expression(&inv.z)));
    out.insert("z_parity".into(), json!(inv.parity()));
    out.insert("counit_z".into(), json!(format_scalar(&inv.z.counit())));
    out.insert("z_class".into(), json!(class_expression(&alg, &inv.class)));
    let certificate: Vec<Value> = inv
        .certificate
        .iter()
        .enumerate()
        .map(|(w, residue)| json!({ "generator": alg.basis_name(w), "residue": class_expression(&alg, residue) }))
        .collect();
    out.insert("certificate".into(), Value::Array(certificate));

    if let Some(basis) = oracle_basis {
        let agrees = basis.len() == 1 && proportional(&inv.class, &basis[0]).is_some();
        out.insert("oracle_agrees".into(), json!(agrees));
    }
    if flags.emit_matrix {
        let grid = |rows: &[Vec<crate::UEElement>]| -> Value {
            json!(rows
                .iter()
                .map(|r| r.iter().map(expression).collect::<Vec<_>>())
                .collect::<Vec<_>>())
        };
        out.insert("frobenius_matrix".into(), grid(&fm.entries));
        out.insert("frobenius_matrix_inverse".into(), grid(&fm.right_inverse));
    }
    if flags.emit_dual_pair {
        let ys = match dual_pair(&alg, &fm) {
            Ok(ys) => ys,
            Err(e) => return internal(e),
        };
        let listed: Vec<Value> = fm
            .order
            .subsets()
            .iter()
            .zip(&ys)
            .map(|(&s, y)| json!({ "subset": subset_names(&alg, s), "y": expression(y) }))
            .collect();
        out.insert("dual_pair".into(), Value::Array(listed));
    }
    Outcome::ok(Value::Object(out))
}

pub fn cmd_integrate(
    algebra_path: &Path,
    module_path: &Path,
    assume_reductive: bool,
    max_odd: usize,
) -> Outcome {
    let alg = match load_valid_algebra(algebra_path, max_odd) {
        Ok(a) => a,
        Err(o) => return o,
    };
    let module = match std::fs::read_to_string(module_path)
        .map_err(|e| format!("cannot read {}: {e}", module_path.display()))
        .and_then(|t| parse_module_json(&t).map_err(|e| e.to_string()))
        .and_then(|f| f.to_module(&alg).map_err(|e| e.to_string()))
    {
        Ok(m) => m,
        Err(msg) => return Outcome::fail(exit::IO_OR_PARSE, msg),
    };
    let module_report = match validate_module(&alg, &module) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(exit::IO_OR_PARSE, e.to_string()),
    };
    if !module_report.is_valid() {
        let mut o = Outcome::with(
            exit::INVALID,
            json!({ "valid": false, "violations": module_report.violations }),
        );
        o.stderr
            .push("module violates parity or bracket compatibility".into());
        return o;
    }

    let inv = match crate::frobenius::invariant_z(&alg) {
        Ok(inv) => inv,
        Err(Error::NoInvariant {
            element, lambda, ..
        }) => {
            let mut o = Outcome::with(
                exit::NO_INVARIANT,
                json!({ "error": "no_invariant", "violator": element, "lambda": format_scalar(&lambda) }),
            );
            o.stderr
                .push(format!("no invariant: trace of ad'({element}) is {lambda}"));
            return o;
        }
        Err(e) => return internal(e),
    };

    let even = alg.even_part_structure(assume_reductive);
    let report = check_semisimple_over_even(&alg, &module, &even);
    let mut out = Map::new();
    out.insert("algebra".into(), json!(alg.name()));
    out.insert("module_dim".into(), json!(module.dim()));
    out.insert("even_part".into(), even_part_json(&even));
    out.insert("semisimple_report".into(), json!(report));
    out.insert("warnings".into(), json!(even.warnings));
    if !even.reductive() {
        out.insert("error".into(), json!("even_part_not_reductive"));
        let mut o = Outcome::with(exit::NOT_SEMISIMPLE, Value::Object(out));
        o.stderr
            .push("reductivity of g0 not certified; pass --assume-reductive to override".into());
        return o;
    }
    if !report.semisimple {
        out.insert("error".into(), json!("not_semisimple"));
        let mut o = Outcome::with(exit::NOT_SEMISIMPLE, Value::Object(out));
        o.stderr
            .push("module is not semisimple over the even part".into());
        return o;
    }
    let m = match integral_matrix(&alg, &module, &inv, &even) {
        Ok(m) => m,
        Err(Error::NotSemisimple(msg)) => return Outcome::fail(exit::NOT_SEMISIMPLE, msg),
        Err(e) => return internal(e),
    };
    let left = is_left_invariant(&alg, &module, &m.entries);
    let right = check_right_integral(&alg, &module, &m.entries);
    out.insert("z".into(), json!(expression(&inv.z)));
    out.insert("projector".into(), json!(matrix_strings(&m.projector)));
    out.insert("integral_matrix".into(), json!(matrix_strings(&m.entries)));
    out.insert("left_invariant".into(), json!(left));
    out.insert("right_invariant".into(), json!(right));
    out.insert("parity".into(), json!(m.parity));
    out.insert(
        "parity_support_ok".into(),
        json!(m.respects_parity(&module)),
    );
    Outcome::with(
        if left { exit::OK } else { exit::INTERNAL },
        Value::Object(out),
    )
}
