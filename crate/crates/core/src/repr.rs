//! Graded representations, the even invariant projector, and the left
//! integral on matrix elements.
//!
//! For a module `V` with matrices `ρ(b_i)`, the matrix element `t_ij` is
//! `u ↦ ρ(u)[i][j]`. The even integral acts on matrix elements as projection
//! onto `V^{g0}` along `g0·V`, and the integral of `t_ij` is
//! `(ρ(z)·P₀)[i][j]`.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{EvenPartReport, LieSuperalgebra, Parity};
use crate::enveloping::{act_on_quotient, QuotientClass, TermOrder, UEElement};
use crate::error::{Error, Result};
use crate::frobenius::InvariantZ;
use crate::linalg::{is_direct_complement, poly, Matrix};
use crate::scalar::Scalar;

/// A finite-dimensional graded module: one `dim × dim` matrix per basis
/// element of the algebra, over a homogeneous basis with the given parities.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedModule {
    pub parities: Vec<Parity>,
    pub rho: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleViolation {
    /// `ρ(b)[r][c] ≠ 0` although `|r| ≠ |c| + |b|`.
    Parity {
        element: String,
        row: usize,
        col: usize,
    },
    /// `ρ([x, y]) ≠ ρ(x)ρ(y) − (−1)^{|x||y|} ρ(y)ρ(x)`.
    Bracket { left: String, right: String },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ModuleReport {
    pub violations: Vec<ModuleViolation>,
}

impl ModuleReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl GradedModule {
    pub fn new(alg: &LieSuperalgebra, parities: Vec<Parity>, rho: Vec<Matrix>) -> Result<Self> {
        let d = parities.len();
        if rho.len() != alg.dim() {
            return Err(Error::Input(format!(
                "module has {} action matrices, algebra has dimension {}",
                rho.len(),
                alg.dim()
            )));
        }
        if let Some((i, m)) = rho
            .iter()
            .enumerate()
            .find(|(_, m)| m.rows() != d || m.cols() != d)
        {
            return Err(Error::Input(format!(
                "action of `{}` is {}x{}, expected {d}x{d}",
                alg.basis_name(i),
                m.rows(),
                m.cols()
            )));
        }
        Ok(GradedModule { parities, rho })
    }

    /// The one-dimensional even module where everything acts by zero.
    pub fn trivial(alg: &LieSuperalgebra) -> Self {
        GradedModule {
            parities: vec![Parity::Even],
            rho: vec![Matrix::zeros(1, 1); alg.dim()],
        }
    }

    /// The adjoint module `ρ(b_i) = ad(b_i)`.
    pub fn adjoint(alg: &LieSuperalgebra) -> Self {
        GradedModule {
            parities: (0..alg.dim()).map(|i| alg.parity(i)).collect(),
            rho: (0..alg.dim()).map(|i| alg.ad_matrix(i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    /// `ρ` extended multiplicatively to `U(g)`.
    pub fn rho_of(&self, u: &UEElement) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(d, d);
        for (mono, c) in u.terms() {
            let mut acc = Matrix::identity(d);
            for g in mono.word(TermOrder::EvenFirst) {
                acc = &acc * &self.rho[g];
            }
            out = &out + &acc.scale(c);
        }
        out
    }

    /// `ρ(Σ c_i b_i)` for a coordinate vector on the even part.
    fn rho_even_vector(&self, v: &[Scalar]) -> Matrix {
        let d = self.dim();
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(d, d), |acc, (i, c)| {
                &acc + &self.rho[i].scale(c)
            })
    }

    fn invariant_and_image(&self, alg: &LieSuperalgebra) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
        let d = self.dim();
        let even: Vec<Matrix> = alg.even_indices().map(|i| self.rho[i].clone()).collect();
        if even.is_empty() {
            let all = (0..d).map(|k| {
                (0..d)
                    .map(|r| {
                        if r == k {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            });
            return (all.collect(), Vec::new());
        }
        (
            Matrix::vstack(&even).nullspace(),
            Matrix::hstack(&even).column_space(),
        )
    }
}

pub fn validate_module(alg: &LieSuperalgebra, module: &GradedModule) -> Result<ModuleReport> {
    let d = module.dim();
    if module.rho.len() != alg.dim() || module.rho.iter().any(|m| m.rows() != d || m.cols() != d) {
        return Err(Error::Input(
            "module shape does not match the algebra".into(),
        ));
    }
    let mut violations = Vec::new();
    for (i, m) in module.rho.iter().enumerate() {
        for r in 0..d {
            for c in 0..d {
                if !m[(r, c)].is_zero() && module.parities[r] != module.parities[c] + alg.parity(i)
                {
                    violations.push(ModuleViolation::Parity {
                        element: alg.basis_name(i).into(),
                        row: r,
                        col: c,
                    });
                }
            }
        }
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let mut lhs = Matrix::zeros(d, d);
            for (k, c) in alg.bracket(i, j) {
                lhs = &lhs + &module.rho[*k].scale(c);
            }
            let s = alg.parity(i).koszul(alg.parity(j));
            let xy = &module.rho[i] * &module.rho[j];
            let yx = &module.rho[j] * &module.rho[i];
            let rhs = &xy - &yx.scale(&s);
            if lhs != rhs {
                violations.push(ModuleViolation::Bracket {
                    left: alg.basis_name(i).into(),
                    right: alg.basis_name(j).into(),
                });
            }
        }
    }
    Ok(ModuleReport { violations })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralAction {
    /// Central element of `g0`, in even coordinates.
    pub element: Vec<String>,
    /// Minimal polynomial of its action, constant term first.
    pub minimal_polynomial: Vec<String>,
    pub squarefree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SemisimpleReport {
    pub central_actions: Vec<CentralAction>,
    pub invariant_dim: usize,
    pub even_image_dim: usize,
    /// `V = V^{g0} ⊕ g0·V`.
    pub direct_sum: bool,
    pub semisimple: bool,
    /// Semisimplicity of the derived part of `g0` is taken from Weyl's
    /// theorem, not checked.
    pub assumptions: Vec<String>,
}

pub fn check_semisimple_over_even(
    alg: &LieSuperalgebra,
    module: &GradedModule,
    even: &EvenPartReport,
) -> SemisimpleReport {
    let central_actions: Vec<CentralAction> = even
        .center
        .iter()
        .map(|z| {
            let p = poly::minimal_polynomial(&module.rho_even_vector(z));
            CentralAction {
                element: z.iter().map(|c| c.to_string()).collect(),
                squarefree: poly::is_squarefree(&p),
                minimal_polynomial: p.iter().map(|c| c.to_string()).collect(),
            }
        })
        .collect();
    let (inv, img) = module.invariant_and_image(alg);
    let direct_sum = is_direct_complement(&inv, &img, module.dim());
    let semisimple = direct_sum && central_actions.iter().all(|c| c.squarefree);
    let mut assumptions = vec!["the derived part of g0 acts semisimply (Weyl)".to_string()];
    assumptions.extend(even.warnings.iter().cloned());
    SemisimpleReport {
        central_actions,
        invariant_dim: inv.len(),
        even_image_dim: img.len(),
        direct_sum,
        semisimple,
        assumptions,
    }
}

/// Projector onto `V^{g0}` along `g0·V`.
pub fn invariant_projector(alg: &LieSuperalgebra, module: &GradedModule) -> Result<Matrix> {
    let d = module.dim();
    let (inv, img) = module.invariant_and_image(alg);
    if !is_direct_complement(&inv, &img, d) {
        return Err(Error::NotSemisimple(format!(
            "V^g0 (dim {}) and g0·V (dim {}) do not form a direct sum",
            inv.len(),
            img.len()
        )));
    }
    let k = inv.len();
    let mut cols = inv;
    cols.extend(img);
    let basis = Matrix::from_columns(d, &cols);
    let basis_inv = basis.inverse().expect("direct sum basis is invertible");
    let mut keep = Matrix::zeros(d, d);
    for i in 0..k {
        keep[(i, i)] = Scalar::one();
    }
    Ok(&(&basis * &keep) * &basis_inv)
}

/// `M[i][j] = ∫(t_ij)` for a module, with the parity of the integral.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralMatrix {
    pub entries: Matrix,
    pub projector: Matrix,
    pub parity: Parity,
}

impl IntegralMatrix {
    /// `M[i][j] = 0` unless `|i| + |j| = |z|`.
    pub fn respects_parity(&self, module: &GradedModule) -> bool {
        let d = module.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                module.parities[i] + module.parities[j] == self.parity
                    || self.entries[(i, j)].is_zero()
            })
        })
    }
}

/// Evaluates the integral on all matrix elements of `module`.
///
/// With the sign convention used here `M = ρ(z)·P₀` with no extra Koszul
/// factor; every call verifies `ρ(w)·M = ε(w)·M` for each basis `w`.
pub fn integral_matrix(
    alg: &Arc<LieSuperalgebra>,
    module: &GradedModule,
    z: &InvariantZ,
    even: &EvenPartReport,
) -> Result<IntegralMatrix> {
    let report = check_semisimple_over_even(alg, module, even);
    if !report.semisimple {
        return Err(Error::NotSemisimple(if report.direct_sum {
            "a central element of g0 acts with a non-squarefree minimal polynomial".into()
        } else {
            "V is not V^g0 ⊕ g0·V".into()
        }));
    }
    let projector = invariant_projector(alg, module)?;
    let entries = &module.rho_of(&z.z) * &projector;
    let m = IntegralMatrix {
        entries,
        projector,
        parity: z.parity(),
    };
    if !is_left_invariant(alg, module, &m.entries) {
        return Err(Error::Internal(
            "integral matrix fails left invariance".into(),
        ));
    }
    Ok(m)
}

/// `ρ(w)·M = ε(w)·M` for every basis element `w` (where `ε(w) = 0`).
pub fn is_left_invariant(alg: &LieSuperalgebra, module: &GradedModule, m: &Matrix) -> bool {
    (0..alg.dim()).all(|w| (&module.rho[w] * m).is_zero())
}

/// `M·ρ(w) = ε(w)·M` for every basis element `w`.
pub fn check_right_integral(alg: &LieSuperalgebra, module: &GradedModule, m: &Matrix) -> bool {
    (0..alg.dim()).all(|w| (m * &module.rho[w]).is_zero())
}

/// Action matrix of `b_i` on `U/J` in the basis `x^I`, `I` indexed by
/// bitmask.
pub fn quotient_action_matrix(alg: &Arc<LieSuperalgebra>, i: usize) -> Matrix {
    let size = 1usize << alg.n_odd();
    let mut m = Matrix::zeros(size, size);
    for col in 0..size {
        let basis = QuotientClass::from([(col as u64, Scalar::one())]);
        for (row, c) in act_on_quotient(alg, i, &basis) {
            m[(row as usize, col)] = c;
        }
    }
    m
}

/// Basis of the `U(g)`-invariant classes in `U/J`, solved directly from the
/// action matrices without any Frobenius machinery.
pub fn brute_force_quotient_invariants(alg: &Arc<LieSuperalgebra>) -> Vec<QuotientClass> {
    let size = 1usize << alg.n_odd();
    // ε(b_i) = 0 for every basis element, so invariance is `action(b_i)·v = 0`.
    let blocks: Vec<Matrix> = (0..alg.dim())
        .map(|i| quotient_action_matrix(alg, i))
        .collect();
    let solutions = if blocks.is_empty() {
        vec![vec![Scalar::one()]]
    } else {
        Matrix::vstack(&blocks).nullspace()
    };
    solutions
        .into_iter()
        .map(|v| {
            (0..size)
                .filter(|&k| !v[k].is_zero())
                .map(|k| (k as u64, v[k].clone()))
                .collect()
        })
        .collect()
}

/// `a = c·b` for some nonzero scalar `c`.
pub fn proportional(a: &QuotientClass, b: &QuotientClass) -> Option<Scalar> {
    let (k, va) = a.iter().next()?;
    let vb = b.get(k)?;
    let c = va / vb;
    if c.is_zero() || a.len() != b.len() {
        return None;
    }
    b.iter()
        .all(|(key, v)| a.get(key) == Some(&(v * &c)))
        .then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::invariant_z;
    use crate::scalar::int;

    fn g2() -> Arc<LieSuperalgebra> {
        Arc::new(
            LieSuperalgebra::new("g2", vec![], vec!["x1".into(), "x2".into()], vec![]).unwrap(),
        )
    }

    /// Exterior algebra on `x1, x2` in basis `1, x1, x2, x1x2`.
    fn exterior2(alg: &LieSuperalgebra) -> GradedModule {
        let mut x1 = Matrix::zeros(4, 4);
        x1[(1, 0)] = int(1);
        x1[(3, 2)] = int(1);
        let mut x2 = Matrix::zeros(4, 4);
        x2[(2, 0)] = int(1);
        x2[(3, 1)] = int(-1);
        GradedModule::new(
            alg,
            vec![Parity::Even, Parity::Odd, Parity::Odd, Parity::Even],
            vec![x1, x2],
        )
        .unwrap()
    }

    #[test]
    fn trivial_module_is_valid_and_projects_to_itself() {
        let alg = g2();
        let v = GradedModule::trivial(&alg);
        assert!(validate_module(&alg, &v).unwrap().is_valid());
        assert_eq!(invariant_projector(&alg, &v).unwrap(), Matrix::identity(1));
    }

    #[test]
    fn exterior_module_integral() {
        let alg = g2();
        let v = exterior2(&alg);
        assert!(validate_module(&alg, &v).unwrap().is_valid());
        let even = alg.even_part_structure(false);
        let report = check_semisimple_over_even(&alg, &v, &even);
        assert!(report.semisimple);
        assert_eq!(report.invariant_dim, 4);
        let z = invariant_z(&alg).unwrap();
        let m = integral_matrix(&alg, &v, &z, &even).unwrap();
        let mut expected = Matrix::zeros(4, 4);
        expected[(3, 0)] = int(1);
        assert_eq!(m.entries, expected);
        assert!(check_right_integral(&alg, &v, &m.entries));
        assert!(m.respects_parity(&v));
    }

    #[test]
    fn shape_mismatch_is_input_error() {
        let alg = g2();
        let r = GradedModule::new(
            &alg,
            vec![Parity::Even],
            vec![Matrix::zeros(2, 2), Matrix::zeros(1, 1)],
        );
        assert!(matches!(r, Err(Error::Input(_))));
        let r = GradedModule::new(&alg, vec![Parity::Even], vec![Matrix::zeros(1, 1)]);
        assert!(matches!(r, Err(Error::Input(_))));
    }

    #[test]
    fn oracle_on_grassmann() {
        let alg = g2();
        let basis = brute_force_quotient_invariants(&alg);
        assert_eq!(basis, vec![QuotientClass::from([(0b11, int(1))])]);
    }

    #[test]
    fn proportionality() {
        let a = QuotientClass::from([(1, int(2)), (2, int(4))]);
        let b = QuotientClass::from([(1, int(1)), (2, int(2))]);
        assert_eq!(proportional(&a, &b), Some(int(2)));
        assert_eq!(proportional(&a, &QuotientClass::from([(1, int(1))])), None);
        assert_eq!(proportional(&QuotientClass::new(), &b), None);
    }
}
