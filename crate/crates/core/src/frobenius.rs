//! `U(g)` as a Frobenius extension of `U(g0)`.
//!
//! With `x^I` the odd monomials, every `u ∈ U(g)` is uniquely
//! `Σ_I u_I x^I` with `u_I ∈ U(g0)`. The Frobenius homomorphism `π` keeps the
//! coefficient of the top monomial `x^T`, and `⟨x, y⟩ = π(xy)` is an
//! `α⁻¹`-associative form. The matrix `A = (⟨x^I, x^{J'}⟩)` is lower
//! triangular with `±1` on the diagonal in any order refining `|I|`; its
//! right inverse yields a dual free pair and the invariant `z` of `U/Ug0`.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{LieSuperalgebra, Parity};
use crate::enveloping::{QuotientClass, UEElement};
use crate::error::{Error, Result};
use crate::scalar::{is_unit_sign, Scalar};

/// Total order on odd subsets refining cardinality; ties broken
/// lexicographically on the ascending index tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSubsetOrder {
    m: usize,
    subsets: Vec<u64>,
}

impl OddSubsetOrder {
    pub fn new(m: usize) -> Self {
        assert!(m < 64, "odd dimension too large for a bitmask");
        let indices = |s: u64| (0..m).filter(|b| s >> b & 1 == 1).collect::<Vec<_>>();
        let mut subsets: Vec<u64> = (0..1u64 << m).collect();
        subsets.sort_by(|a, b| {
            a.count_ones()
                .cmp(&b.count_ones())
                .then_with(|| indices(*a).cmp(&indices(*b)))
        });
        OddSubsetOrder { m, subsets }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[u64] {
        &self.subsets
    }

    pub fn position(&self, subset: u64) -> usize {
        self.subsets
            .iter()
            .position(|&s| s == subset)
            .expect("subset outside the order")
    }

    pub fn top(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    pub fn complement(&self, subset: u64) -> u64 {
        self.top() & !subset
    }
}

/// `π(Σ_I u_I x^I) = u_T`.
pub fn frobenius_pi(u: &UEElement) -> UEElement {
    let top = OddSubsetOrder::new(u.algebra().n_odd()).top();
    u.left_coefficients()
        .remove(&top)
        .unwrap_or_else(|| UEElement::zero(u.algebra()))
}

/// The `α⁻¹`-associative form `⟨x, y⟩ = π(xy)`.
pub fn form(x: &UEElement, y: &UEElement) -> Result<UEElement> {
    Ok(frobenius_pi(&x.multiply(y)?))
}

/// Parity of `π`: `m mod 2`.
pub fn pi_parity(alg: &LieSuperalgebra) -> Parity {
    Parity::from_bit(alg.n_odd())
}

/// The matrix `A[I][J] = ⟨x^I, x^{J'}⟩` over `U(g0)` and its right inverse,
/// both indexed in [`OddSubsetOrder`].
#[derive(Debug, Clone)]
pub struct FrobeniusMatrix {
    pub order: OddSubsetOrder,
    pub entries: Vec<Vec<UEElement>>,
    pub right_inverse: Vec<Vec<UEElement>>,
}

impl FrobeniusMatrix {
    pub fn build(alg: &Arc<LieSuperalgebra>) -> Result<Self> {
        let order = OddSubsetOrder::new(alg.n_odd());
        let size = order.len();
        let mut entries = Vec::with_capacity(size);
        for &row in order.subsets() {
            let x = UEElement::odd_monomial(alg, row);
            let mut line = Vec::with_capacity(size);
            for &col in order.subsets() {
                let xc = UEElement::odd_monomial(alg, order.complement(col));
                line.push(form(&x, &xc)?);
            }
            entries.push(line);
        }

        for (r, line) in entries.iter().enumerate() {
            for (c, entry) in line.iter().enumerate() {
                if !entry.is_even_only() {
                    return Err(Error::Internal(format!("A[{r}][{c}] has odd generators")));
                }
                if c > r && !entry.is_zero() {
                    return Err(Error::Internal(format!(
                        "A is not lower triangular at ({r}, {c})"
                    )));
                }
            }
            if !line[r].as_scalar().is_some_and(|d| is_unit_sign(&d)) {
                return Err(Error::Internal(format!(
                    "A[{r}][{r}] = {} is not ±1",
                    line[r]
                )));
            }
        }

        // Column-wise forward substitution: A[r][r]·B[r][c] = δ_rc − Σ_{k<r} A[r][k]·B[k][c],
        // and A[r][r] = ±1 is its own inverse.
        let zero = UEElement::zero(alg);
        let mut inverse = vec![vec![zero.clone(); size]; size];
        #[allow(clippy::needless_range_loop)]
        for c in 0..size {
            for r in 0..size {
                let mut rhs = if r == c {
                    UEElement::one(alg)
                } else {
                    zero.clone()
                };
                for k in 0..r {
                    if entries[r][k].is_zero() || inverse[k][c].is_zero() {
                        continue;
                    }
                    rhs = &rhs - &(&entries[r][k] * &inverse[k][c]);
                }
                let diag = entries[r][r].as_scalar().expect("checked above");
                inverse[r][c] = rhs.scale(&diag);
            }
        }

        let fm = FrobeniusMatrix {
            order,
            entries,
            right_inverse: inverse,
        };
        if !fm.is_right_inverse() {
            return Err(Error::Internal("A·A⁻¹ is not the identity".into()));
        }
        Ok(fm)
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    /// Checks `A·B = I` exactly in `U(g0)`.
    pub fn is_right_inverse(&self) -> bool {
        let n = self.size();
        (0..n).all(|r| {
            (0..n).all(|c| {
                let alg = self.entries[r][c].algebra();
                let mut acc = UEElement::zero(alg);
                for k in 0..n {
                    if !self.entries[r][k].is_zero() && !self.right_inverse[k][c].is_zero() {
                        acc = &acc + &(&self.entries[r][k] * &self.right_inverse[k][c]);
                    }
                }
                acc.as_scalar()
                    == Some(if r == c {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    })
            })
        })
    }

    pub fn is_lower_triangular(&self) -> bool {
        let n = self.size();
        (0..n).all(|r| (r + 1..n).all(|c| self.entries[r][c].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.size())
            .map(|r| {
                self.entries[r][r]
                    .as_scalar()
                    .expect("diagonal entries are scalars")
            })
            .collect()
    }
}

/// The dual free pair partner `y^I = Σ_J x^{J'} α((A⁻¹)_{JI})` of each `x^I`,
/// listed in [`OddSubsetOrder`].
pub fn dual_pair(alg: &Arc<LieSuperalgebra>, fm: &FrobeniusMatrix) -> Result<Vec<UEElement>> {
    let order = &fm.order;
    let n = fm.size();
    let mut ys = Vec::with_capacity(n);
    for i in 0..n {
        let mut y = UEElement::zero(alg);
        for (j, &subset) in order.subsets().iter().enumerate() {
            let entry = &fm.right_inverse[j][i];
            if entry.is_zero() {
                continue;
            }
            let x = UEElement::odd_monomial(alg, order.complement(subset));
            y = &y + &(&x * &entry.alpha()?);
        }
        ys.push(y);
    }
    for (i, &subset) in order.subsets().iter().enumerate() {
        let x = UEElement::odd_monomial(alg, subset);
        for (j, y) in ys.iter().enumerate() {
            let expected = if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            if form(&x, y)?.as_scalar() != Some(expected) {
                return Err(Error::Internal(format!("⟨x^I, y^J⟩ ≠ δ at ({i}, {j})")));
            }
        }
    }
    Ok(ys)
}

/// A representative `z` of the invariant line in `U/Ug0`, with its
/// invariance certificate.
#[derive(Debug, Clone)]
pub struct InvariantZ {
    pub z: UEElement,
    /// Image of `z` in `U/J`; never zero.
    pub class: QuotientClass,
    /// For each basis element `w`, the class of `w·z − ε(w)·z`; all empty.
    pub certificate: Vec<QuotientClass>,
    pub order: OddSubsetOrder,
}

impl InvariantZ {
    pub fn parity(&self) -> Parity {
        self.z.parity().unwrap_or(Parity::Even)
    }

    pub fn certified(&self) -> bool {
        self.certificate.iter().all(|c| c.is_empty())
    }
}

/// `z = Σ_J x^{J'} ε((A⁻¹)_{J,∅})`.
pub fn invariant_z(alg: &Arc<LieSuperalgebra>) -> Result<InvariantZ> {
    if let Some((index, lambda)) = alg.trace_violation() {
        return Err(Error::NoInvariant {
            element: alg.basis_name(index).to_string(),
            index,
            lambda,
        });
    }
    let fm = FrobeniusMatrix::build(alg)?;
    invariant_from_matrix(alg, &fm)
}

pub fn invariant_from_matrix(
    alg: &Arc<LieSuperalgebra>,
    fm: &FrobeniusMatrix,
) -> Result<InvariantZ> {
    let order = fm.order.clone();
    let empty_pos = order.position(0);
    let mut z = UEElement::zero(alg);
    for (j, &subset) in order.subsets().iter().enumerate() {
        let entry = &fm.right_inverse[j][empty_pos];
        let c = entry.counit();
        if entry.alpha()?.counit() != c {
            return Err(Error::Internal("ε∘α ≠ ε on a column of A⁻¹".into()));
        }
        if !c.is_zero() {
            z = &z + &UEElement::odd_monomial(alg, order.complement(subset)).scale(&c);
        }
    }

    let class = z.quotient_project();
    if class.is_empty() {
        return Err(Error::Internal("z lies in J".into()));
    }
    let certificate: Vec<QuotientClass> = (0..alg.dim())
        .map(|w| {
            let gen = UEElement::generator(alg, w);
            let residue = &(&gen * &z) - &z.scale(&gen.counit());
            residue.quotient_project()
        })
        .collect();
    let inv = InvariantZ {
        z,
        class,
        certificate,
        order,
    };
    if !inv.certified() {
        return Err(Error::Internal("z is not invariant modulo J".into()));
    }
    Ok(inv)
}
