//! Finite-dimensional Lie superalgebras given by structure constants.

use std::fmt;
use std::ops::Add;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{is_direct_complement, poly, Matrix};
use crate::scalar::{sign, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Parity {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Koszul sign `(-1)^{|a||b|}`.
    pub fn koszul(self, other: Parity) -> Scalar {
        sign(self.is_odd() && other.is_odd())
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Sparse vector `Σ c_k b_k`, sorted by basis index, no zero coefficients.
pub type SparseVec = Vec<(usize, Scalar)>;

/// A Lie superalgebra with homogeneous basis `b_0, ..., b_{n-1}`: the first
/// `n0` elements are even, the remaining `m` are odd.
///
/// Brackets are stored for every ordered pair; super antisymmetry is checked
/// by [`LieSuperalgebra::validate`], never imposed.
#[derive(Debug, Clone, PartialEq)]
pub struct LieSuperalgebra {
    name: String,
    names: Vec<String>,
    n_even: usize,
    table: Vec<SparseVec>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `c_{ij}^k ≠ 0` with `|k| ≠ |i| + |j|`.
    Parity {
        left: String,
        right: String,
        result: String,
    },
    Antisymmetry {
        left: String,
        right: String,
    },
    Jacobi {
        a: String,
        b: String,
        c: String,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Structure of the even part `g0`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenPartReport {
    /// Basis of the center of `g0`, in even-basis coordinates.
    pub center: Vec<Vec<Scalar>>,
    /// Basis of `[g0, g0]`, in even-basis coordinates.
    pub derived: Vec<Vec<Scalar>>,
    pub center_complements_derived: bool,
    pub killing_nondegenerate_on_derived: bool,
    /// `center ⊕ derived = g0` with a nondegenerate Killing form on the
    /// derived part.
    pub certified_reductive: bool,
    pub assumed_reductive: bool,
    /// `ad'(Z)` has squarefree minimal polynomial for every central basis `Z`.
    pub central_odd_action_diagonalizable: bool,
    pub warnings: Vec<String>,
}

impl EvenPartReport {
    pub fn reductive(&self) -> bool {
        self.certified_reductive || self.assumed_reductive
    }
}

impl LieSuperalgebra {
    /// Builds an algebra from `(left, right) -> Σ coeff·b_k` records. Pairs
    /// not listed bracket to zero. Repeated pairs and out-of-range indices
    /// are input errors.
    pub fn new<I>(
        name: impl Into<String>,
        even_names: Vec<String>,
        odd_names: Vec<String>,
        brackets: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vec<(usize, Scalar)>)>,
    {
        let n_even = even_names.len();
        let mut names = even_names;
        names.extend(odd_names);
        let n = names.len();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::Input(format!("duplicate basis name `{a}`")));
            }
        }
        let mut table = vec![SparseVec::new(); n * n];
        let mut seen = vec![false; n * n];
        for ((i, j), result) in brackets {
            if i >= n || j >= n {
                return Err(Error::Input(format!(
                    "bracket index ({i}, {j}) out of range for dimension {n}"
                )));
            }
            if std::mem::replace(&mut seen[i * n + j], true) {
                return Err(Error::Input(format!(
                    "bracket [{}, {}] given twice",
                    names[i], names[j]
                )));
            }
            let mut dense = vec![Scalar::zero(); n];
            for (k, c) in result {
                if k >= n {
                    return Err(Error::Input(format!(
                        "result index {k} out of range for dimension {n}"
                    )));
                }
                dense[k] += c;
            }
            table[i * n + j] = dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
        }
        Ok(LieSuperalgebra {
            name: name.into(),
            names,
            n_even,
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn n_even(&self) -> usize {
        self.n_even
    }

    pub fn n_odd(&self) -> usize {
        self.names.len() - self.n_even
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.n_even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn even_indices(&self) -> std::ops::Range<usize> {
        0..self.n_even
    }

    pub fn odd_indices(&self) -> std::ops::Range<usize> {
        self.n_even..self.dim()
    }

    /// `[b_i, b_j]` as a sparse vector.
    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    /// The structure constant `c_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.bracket(i, j)
            .iter()
            .find(|(idx, _)| *idx == k)
            .map_or_else(Scalar::zero, |(_, c)| c.clone())
    }

    /// Bilinear extension of the bracket to dense coordinate vectors.
    pub fn bracket_vectors(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.bracket(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Matrix of `ad(b_i)` on all of `g`: column `j` holds `[b_i, b_j]`.
    pub fn ad_matrix(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.bracket(i, j) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Matrix of `ad'(X)` on `g1` for a vector `X` in even coordinates.
    pub fn ad_prime_matrix(&self, even_vector: &[Scalar]) -> Matrix {
        let m = self.n_odd();
        let off = self.n_even;
        let mut out = Matrix::zeros(m, m);
        for (i, a) in even_vector.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for j in 0..m {
                for (k, c) in self.bracket(i, off + j) {
                    out[(*k - off, j)] += a * c;
                }
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        let name = |i: usize| self.names[i].clone();
        for i in 0..n {
            for j in 0..n {
                let expected = self.parity(i) + self.parity(j);
                for (k, _) in self.bracket(i, j) {
                    if self.parity(*k) != expected {
                        violations.push(Violation::Parity {
                            left: name(i),
                            right: name(j),
                            result: name(*k),
                        });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                let s = self.parity(i).koszul(self.parity(j));
                let ok = (0..n).all(|k| {
                    (self.structure_constant(i, j, k) + &s * self.structure_constant(j, i, k))
                        .is_zero()
                });
                if !ok {
                    violations.push(Violation::Antisymmetry {
                        left: name(i),
                        right: name(j),
                    });
                }
            }
        }
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        let unit = |i: usize| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            v
        };
        for a in 0..n {
            for b in 0..n {
                let ab = self.bracket_vectors(&unit(a), &unit(b));
                let s = self.parity(a).koszul(self.parity(b));
                for c in 0..n {
                    let bc = self.bracket_vectors(&unit(b), &unit(c));
                    let ac = self.bracket_vectors(&unit(a), &unit(c));
                    let lhs = self.bracket_vectors(&unit(a), &bc);
                    let r1 = self.bracket_vectors(&ab, &unit(c));
                    let r2 = self.bracket_vectors(&unit(b), &ac);
                    let ok = (0..n).all(|k| (&lhs[k] - &r1[k] - &s * &r2[k]).is_zero());
                    if !ok {
                        violations.push(Violation::Jacobi {
                            a: name(a),
                            b: name(b),
                            c: name(c),
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// `λ(b_i) = Tr ad'(b_i)`, the trace of `b_i` acting on the odd part.
    pub fn ad_prime_trace(&self, i: usize) -> Result<Scalar> {
        if i >= self.dim() {
            return Err(Error::Input(format!("basis index {i} out of range")));
        }
        if self.parity(i).is_odd() {
            return Err(Error::Precondition(format!(
                "`{}` is odd; ad' is defined on g0 only",
                self.names[i]
            )));
        }
        Ok(self
            .odd_indices()
            .map(|j| self.structure_constant(i, j, j))
            .sum())
    }

    /// `λ` on every even basis element, in index order.
    pub fn lambda_values(&self) -> Vec<Scalar> {
        self.even_indices()
            .map(|i| self.ad_prime_trace(i).expect("even index"))
            .collect()
    }

    /// `λ` on an arbitrary even vector.
    pub fn lambda_of(&self, even_vector: &[Scalar]) -> Scalar {
        self.ad_prime_matrix(even_vector).trace()
    }

    pub fn trace_condition_holds(&self) -> bool {
        self.trace_violation().is_none()
    }

    /// First even basis element with `λ ≠ 0`.
    pub fn trace_violation(&self) -> Option<(usize, Scalar)> {
        self.lambda_values()
            .into_iter()
            .enumerate()
            .find(|(_, l)| !l.is_zero())
    }

    pub fn even_part_structure(&self, assume_reductive: bool) -> EvenPartReport {
        let n0 = self.n_even;
        // X ↦ ([X, b_j])_j restricted to g0; its kernel is the center.
        let mut rows = Vec::new();
        for j in 0..n0 {
            for k in 0..n0 {
                rows.push(
                    (0..n0)
                        .map(|i| self.structure_constant(i, j, k))
                        .collect::<Vec<_>>(),
                );
            }
        }
        let center = if n0 == 0 {
            Vec::new()
        } else {
            Matrix::from_rows(rows).nullspace()
        };

        let mut brackets = Vec::new();
        for i in 0..n0 {
            for j in 0..n0 {
                let mut v = vec![Scalar::zero(); n0];
                for (k, c) in self.bracket(i, j) {
                    if *k < n0 {
                        v[*k] = c.clone();
                    }
                }
                brackets.push(v);
            }
        }
        let derived = if n0 == 0 {
            Vec::new()
        } else {
            Matrix::from_columns(n0, &brackets).column_space()
        };
        let center_complements_derived = is_direct_complement(&center, &derived, n0);

        let ad_even: Vec<Matrix> = (0..n0)
            .map(|i| {
                let mut m = Matrix::zeros(n0, n0);
                for j in 0..n0 {
                    for (k, c) in self.bracket(i, j) {
                        if *k < n0 {
                            m[(*k, j)] = c.clone();
                        }
                    }
                }
                m
            })
            .collect();
        let ad_of = |v: &[Scalar]| {
            v.iter()
                .zip(&ad_even)
                .filter(|(c, _)| !c.is_zero())
                .fold(Matrix::zeros(n0, n0), |acc, (c, m)| &acc + &m.scale(c))
        };
        let ads: Vec<Matrix> = derived.iter().map(|d| ad_of(d)).collect();
        let gram = Matrix::from_rows(
            ads.iter()
                .map(|a| ads.iter().map(|b| (a * b).trace()).collect())
                .collect(),
        );
        let killing_nondegenerate_on_derived = derived.is_empty() || gram.rank() == derived.len();
        let certified_reductive = center_complements_derived && killing_nondegenerate_on_derived;

        let central_odd_action_diagonalizable = center
            .iter()
            .all(|z| poly::is_squarefree(&poly::minimal_polynomial(&self.ad_prime_matrix(z))));

        let mut warnings = Vec::new();
        if assume_reductive && !certified_reductive {
            warnings.push(format!(
                "reductivity of the even part of `{}` is assumed by the caller, not certified",
                self.name
            ));
        }
        EvenPartReport {
            center,
            derived,
            center_complements_derived,
            killing_nondegenerate_on_derived,
            certified_reductive,
            assumed_reductive: assume_reductive,
            central_odd_action_diagonalizable,
            warnings,
        }
    }

    /// Re-expresses the algebra in a new homogeneous basis. Row `r` of
    /// `even` (resp. `odd`) gives the `r`-th new even (odd) basis vector in
    /// old even (odd) coordinates. Basis names are kept.
    pub fn change_basis(&self, even: &Matrix, odd: &Matrix) -> Result<LieSuperalgebra> {
        let (n0, m) = (self.n_even, self.n_odd());
        if even.rows() != n0 || even.cols() != n0 || odd.rows() != m || odd.cols() != m {
            return Err(Error::Input(
                "basis change matrices have the wrong shape".into(),
            ));
        }
        let even_inv = even
            .inverse()
            .ok_or_else(|| Error::Input("even basis change is singular".into()))?;
        let odd_inv = odd
            .inverse()
            .ok_or_else(|| Error::Input("odd basis change is singular".into()))?;
        let n = self.dim();
        let mut p = Matrix::zeros(n, n);
        let mut p_inv = Matrix::zeros(n, n);
        for r in 0..n0 {
            for c in 0..n0 {
                p[(r, c)] = even[(r, c)].clone();
                p_inv[(r, c)] = even_inv[(r, c)].clone();
            }
        }
        for r in 0..m {
            for c in 0..m {
                p[(n0 + r, n0 + c)] = odd[(r, c)].clone();
                p_inv[(n0 + r, n0 + c)] = odd_inv[(r, c)].clone();
            }
        }
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let w = self.bracket_vectors(p.row(i), p.row(j));
                let coords = p_inv.transpose().apply(&w);
                let result: Vec<(usize, Scalar)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !result.is_empty() {
                    brackets.push(((i, j), result));
                }
            }
        }
        LieSuperalgebra::new(
            self.name.clone(),
            self.names[..n0].to_vec(),
            self.names[n0..].to_vec(),
            brackets,
        )
    }
}
