//! The universal enveloping algebra `U(g)` in PBW normal form.
//!
//! Elements are stored in the even-first order: all even generators in
//! ascending index with exponents, followed by a set of distinct odd
//! generators in ascending index. The odd-first order (odd generators on the
//! left) is available as a derived view through [`UEElement::odd_first_form`].
//!
//! Products are normalized by inserting one generator at a time into a
//! normal monomial, using
//!
//! * `g h = (-1)^{|g||h|} h g + [g, h]` when `h` precedes `g`,
//! * `x x = ½ [x, x]` for an odd generator `x`,
//!
//! with memoization of `generator × monomial` products for the duration of
//! one product computation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{LieSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::scalar::{format_scalar, ratio, Scalar};

/// A PBW monomial: exponents of the even generators and the set of odd
/// generators present (bit `b` stands for odd generator `n0 + b`).
///
/// Which word it denotes depends on the [`TermOrder`] it is read in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub even: Vec<u32>,
    pub odd: u64,
}

impl Monomial {
    pub fn one(n_even: usize) -> Self {
        Monomial {
            even: vec![0; n_even],
            odd: 0,
        }
    }

    /// The pure odd monomial `x^I`.
    pub fn odd_subset(n_even: usize, subset: u64) -> Self {
        Monomial {
            even: vec![0; n_even],
            odd: subset,
        }
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().sum::<u32>() + self.odd.count_ones()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.odd.count_ones() as usize)
    }

    pub fn is_even_only(&self) -> bool {
        self.odd == 0
    }

    pub fn is_one(&self) -> bool {
        self.odd == 0 && self.even.iter().all(|&e| e == 0)
    }

    pub fn even_part(&self) -> Monomial {
        Monomial {
            even: self.even.clone(),
            odd: 0,
        }
    }

    /// Generator indices of the word this monomial denotes in `order`.
    pub fn word(&self, order: TermOrder) -> Vec<usize> {
        let n0 = self.even.len();
        let evens = self
            .even
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize));
        let odds = (0..64).filter(|b| self.odd >> b & 1 == 1).map(|b| n0 + b);
        match order {
            TermOrder::EvenFirst => evens.chain(odds).collect(),
            TermOrder::OddFirst => odds.chain(evens).collect(),
        }
    }
}

/// Generator order used to read and normalize monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Even generators first, then odd; the canonical storage order.
    EvenFirst,
    /// Odd generators first, then even; used for right `U(g0)`-coefficients.
    OddFirst,
}

pub type Terms = BTreeMap<Monomial, Scalar>;

fn add_term(terms: &mut Terms, mono: Monomial, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(mono) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn add_scaled(target: &mut Terms, source: &Terms, factor: &Scalar) {
    for (mono, c) in source {
        add_term(target, mono.clone(), c * factor);
    }
}

/// Normalizes words in one term order.
pub(crate) struct Rewriter<'a> {
    alg: &'a LieSuperalgebra,
    order: TermOrder,
    cache: HashMap<(usize, Monomial), Terms>,
}

impl<'a> Rewriter<'a> {
    pub(crate) fn new(alg: &'a LieSuperalgebra, order: TermOrder) -> Self {
        Rewriter {
            alg,
            order,
            cache: HashMap::new(),
        }
    }

    fn rank(&self, g: usize) -> usize {
        let (n0, m) = (self.alg.n_even(), self.alg.n_odd());
        match self.order {
            TermOrder::EvenFirst => g,
            TermOrder::OddFirst if g >= n0 => g - n0,
            TermOrder::OddFirst => m + g,
        }
    }

    fn first_generator(&self, mono: &Monomial) -> Option<usize> {
        let n0 = self.alg.n_even();
        let first_even = mono.even.iter().position(|&e| e > 0);
        let first_odd = (mono.odd != 0).then(|| n0 + mono.odd.trailing_zeros() as usize);
        match self.order {
            TermOrder::EvenFirst => first_even.or(first_odd),
            TermOrder::OddFirst => first_odd.or(first_even),
        }
    }

    fn shift(&self, g: usize, mono: &Monomial, up: bool) -> Monomial {
        let n0 = self.alg.n_even();
        let mut out = mono.clone();
        if g < n0 {
            if up {
                out.even[g] += 1;
            } else {
                out.even[g] -= 1;
            }
        } else {
            out.odd ^= 1 << (g - n0);
        }
        out
    }

    /// Normal form of `b_g · mono`, with `mono` read in this order.
    pub(crate) fn mul_gen_mono(&mut self, g: usize, mono: &Monomial) -> Terms {
        let key = (g, mono.clone());
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let mut out = Terms::new();
        match self.first_generator(mono) {
            Some(h) if self.rank(h) < self.rank(g) => {
                let rest = self.shift(h, mono, false);
                let moved = self.mul_gen_mono(g, &rest);
                let swapped = self.mul_gen_terms(h, &moved);
                add_scaled(
                    &mut out,
                    &swapped,
                    &self.alg.parity(g).koszul(self.alg.parity(h)),
                );
                for (k, c) in self.alg.bracket(g, h) {
                    let t = self.mul_gen_mono(*k, &rest);
                    add_scaled(&mut out, &t, c);
                }
            }
            Some(h) if h == g && self.alg.parity(g).is_odd() => {
                let rest = self.shift(h, mono, false);
                let half = ratio(1, 2);
                for (k, c) in self.alg.bracket(g, g) {
                    let t = self.mul_gen_mono(*k, &rest);
                    add_scaled(&mut out, &t, &(c * &half));
                }
            }
            _ => {
                out.insert(self.shift(g, mono, true), Scalar::one());
            }
        }
        self.cache.insert(key, out.clone());
        out
    }

    pub(crate) fn mul_gen_terms(&mut self, g: usize, terms: &Terms) -> Terms {
        let mut out = Terms::new();
        for (mono, c) in terms {
            let t = self.mul_gen_mono(g, mono);
            add_scaled(&mut out, &t, c);
        }
        out
    }

    /// Normal form of `word · terms`.
    pub(crate) fn mul_word_terms(&mut self, word: &[usize], terms: &Terms) -> Terms {
        let mut acc = terms.clone();
        for &g in word.iter().rev() {
            acc = self.mul_gen_terms(g, &acc);
        }
        acc
    }

    /// Normal form of `lhs · rhs`, both already normal in this order.
    pub(crate) fn mul_terms(&mut self, lhs: &Terms, rhs: &Terms) -> Terms {
        let mut out = Terms::new();
        for (mono, c) in lhs {
            let word = mono.word(self.order);
            let t = self.mul_word_terms(&word, rhs);
            add_scaled(&mut out, &t, c);
        }
        out
    }
}

/// An element of `U(g)` as a combination of even-first PBW monomials.
#[derive(Clone)]
pub struct UEElement {
    alg: Arc<LieSuperalgebra>,
    terms: Terms,
}

/// Class in `U/J`, `J = U·g0`, as coefficients on the odd monomials `x^I`
/// (keyed by subset bitmask, no zeros stored).
pub type QuotientClass = BTreeMap<u64, Scalar>;

/// `u = Σ_I x^I · u_I` with `u_I ∈ U(g0)` written on the right.
#[derive(Clone, Debug, PartialEq)]
pub struct OddFirstForm {
    pub coefficients: BTreeMap<u64, UEElement>,
}

impl UEElement {
    pub fn zero(alg: &Arc<LieSuperalgebra>) -> Self {
        UEElement {
            alg: Arc::clone(alg),
            terms: Terms::new(),
        }
    }

    pub fn scalar(alg: &Arc<LieSuperalgebra>, c: Scalar) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, Monomial::one(alg.n_even()), c);
        UEElement {
            alg: Arc::clone(alg),
            terms,
        }
    }

    pub fn one(alg: &Arc<LieSuperalgebra>) -> Self {
        Self::scalar(alg, Scalar::one())
    }

    pub fn generator(alg: &Arc<LieSuperalgebra>, i: usize) -> Self {
        assert!(i < alg.dim(), "generator index out of range");
        Self::from_word(alg, &[i])
    }

    /// `c · mono`, with `mono` read in even-first order.
    pub fn monomial(alg: &Arc<LieSuperalgebra>, mono: Monomial, c: Scalar) -> Self {
        assert_eq!(mono.even.len(), alg.n_even());
        let mut terms = Terms::new();
        add_term(&mut terms, mono, c);
        UEElement {
            alg: Arc::clone(alg),
            terms,
        }
    }

    /// The odd monomial `x^I = x_{i1} ⋯ x_{ik}` (ascending indices).
    pub fn odd_monomial(alg: &Arc<LieSuperalgebra>, subset: u64) -> Self {
        Self::monomial(
            alg,
            Monomial::odd_subset(alg.n_even(), subset),
            Scalar::one(),
        )
    }

    /// Normal form of the product of generators `word[0] ⋯ word[k-1]`.
    pub fn from_word(alg: &Arc<LieSuperalgebra>, word: &[usize]) -> Self {
        let mut rw = Rewriter::new(alg, TermOrder::EvenFirst);
        let mut one = Terms::new();
        one.insert(Monomial::one(alg.n_even()), Scalar::one());
        UEElement {
            alg: Arc::clone(alg),
            terms: rw.mul_word_terms(word, &one),
        }
    }

    /// Wraps terms that are already in even-first normal form.
    pub fn from_terms(alg: &Arc<LieSuperalgebra>, terms: Terms) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        UEElement {
            alg: Arc::clone(alg),
            terms,
        }
    }

    pub fn algebra(&self) -> &Arc<LieSuperalgebra> {
        &self.alg
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Scalar {
        self.terms.get(mono).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Parity if every monomial shares one; `None` for zero or mixed elements.
    pub fn parity(&self) -> Option<Parity> {
        let mut parities = self.terms.keys().map(Monomial::parity);
        let first = parities.next()?;
        parities.all(|p| p == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.parity().is_some()
    }

    /// Lies in `U(g0)`: no odd generators in any monomial.
    pub fn is_even_only(&self) -> bool {
        self.terms.keys().all(Monomial::is_even_only)
    }

    /// Is `c · 1` for a scalar `c`; returns it.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    fn same_algebra(&self, other: &UEElement) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || *self.alg == *other.alg
    }

    pub fn multiply(&self, other: &UEElement) -> Result<UEElement> {
        if !self.same_algebra(other) {
            return Err(Error::AlgebraMismatch);
        }
        let mut rw = Rewriter::new(&self.alg, TermOrder::EvenFirst);
        Ok(UEElement {
            alg: Arc::clone(&self.alg),
            terms: rw.mul_terms(&self.terms, &other.terms),
        })
    }

    pub fn scale(&self, c: &Scalar) -> UEElement {
        let mut terms = Terms::new();
        add_scaled(&mut terms, &self.terms, c);
        UEElement {
            alg: Arc::clone(&self.alg),
            terms,
        }
    }

    /// The counit: coefficient of the empty monomial.
    pub fn counit(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.alg.n_even()))
    }

    /// Image under the algebra homomorphism `U(g) → U(target)` sending
    /// generator `b_i` to `images[i]`. The images must respect the defining
    /// relations for the result to be meaningful.
    pub fn map_generators(&self, target: &Arc<LieSuperalgebra>, images: &[UEElement]) -> UEElement {
        assert_eq!(images.len(), self.alg.dim());
        let mut rw = Rewriter::new(target, TermOrder::EvenFirst);
        let mut out = Terms::new();
        for (mono, c) in &self.terms {
            let mut acc = Terms::new();
            acc.insert(Monomial::one(target.n_even()), Scalar::one());
            for g in mono.word(TermOrder::EvenFirst).into_iter().rev() {
                acc = rw.mul_terms(&images[g].terms, &acc);
            }
            add_scaled(&mut out, &acc, c);
        }
        UEElement {
            alg: Arc::clone(target),
            terms: out,
        }
    }

    fn twist(&self, forward: bool) -> Result<UEElement> {
        if !self.is_even_only() {
            return Err(Error::Precondition("α is only defined on U(g0)".into()));
        }
        let lambdas = self.alg.lambda_values();
        let images: Vec<UEElement> = (0..self.alg.dim())
            .map(|i| {
                let g = UEElement::generator(&self.alg, i);
                match lambdas.get(i) {
                    Some(l) if !l.is_zero() => {
                        let shift = if forward { l.clone() } else { -l.clone() };
                        &g + &UEElement::scalar(&self.alg, shift)
                    }
                    _ => g,
                }
            })
            .collect();
        Ok(self.map_generators(&self.alg, &images))
    }

    /// The automorphism `α` of `U(g0)` with `α(X) = X + λ(X)·1`.
    pub fn alpha(&self) -> Result<UEElement> {
        self.twist(true)
    }

    /// `α⁻¹`, sending `X` to `X − λ(X)·1`.
    pub fn alpha_inv(&self) -> Result<UEElement> {
        self.twist(false)
    }

    /// Even-first coefficients `u = Σ_I u_I · x^I`, keyed by odd subset.
    pub fn left_coefficients(&self) -> BTreeMap<u64, UEElement> {
        let mut grouped: BTreeMap<u64, Terms> = BTreeMap::new();
        for (mono, c) in &self.terms {
            add_term(
                grouped.entry(mono.odd).or_default(),
                mono.even_part(),
                c.clone(),
            );
        }
        grouped
            .into_iter()
            .map(|(subset, terms)| {
                (
                    subset,
                    UEElement {
                        alg: Arc::clone(&self.alg),
                        terms,
                    },
                )
            })
            .collect()
    }

    /// Terms rewritten in odd-first normal form.
    pub(crate) fn odd_first_terms(&self) -> Terms {
        let mut rw = Rewriter::new(&self.alg, TermOrder::OddFirst);
        let mut one = Terms::new();
        one.insert(Monomial::one(self.alg.n_even()), Scalar::one());
        let mut out = Terms::new();
        for (mono, c) in &self.terms {
            let t = rw.mul_word_terms(&mono.word(TermOrder::EvenFirst), &one);
            add_scaled(&mut out, &t, c);
        }
        out
    }

    pub fn odd_first_form(&self) -> OddFirstForm {
        let mut grouped: BTreeMap<u64, Terms> = BTreeMap::new();
        for (mono, c) in self.odd_first_terms() {
            add_term(grouped.entry(mono.odd).or_default(), mono.even_part(), c);
        }
        OddFirstForm {
            coefficients: grouped
                .into_iter()
                .map(|(subset, terms)| {
                    (
                        subset,
                        UEElement {
                            alg: Arc::clone(&self.alg),
                            terms,
                        },
                    )
                })
                .collect(),
        }
    }

    /// Image in `U/J`: `I ↦ ε(u_I)` for the odd-first form `Σ x^I u_I`.
    pub fn quotient_project(&self) -> QuotientClass {
        let mut class = QuotientClass::new();
        for (mono, c) in self.odd_first_terms() {
            if mono.even.iter().all(|&e| e == 0) {
                class.insert(mono.odd, c);
            }
        }
        class
    }

    /// Membership in the left ideal `J = U·g0`.
    pub fn in_j(&self) -> bool {
        self.quotient_project().is_empty()
    }

    /// A representative `Σ_I c_I x^I` of a quotient class.
    pub fn lift_class(alg: &Arc<LieSuperalgebra>, class: &QuotientClass) -> UEElement {
        let mut terms = Terms::new();
        for (subset, c) in class {
            add_term(
                &mut terms,
                Monomial::odd_subset(alg.n_even(), *subset),
                c.clone(),
            );
        }
        UEElement {
            alg: Arc::clone(alg),
            terms,
        }
    }
}

impl OddFirstForm {
    /// `Σ_I x^I · u_I` back in even-first normal form.
    pub fn reassemble(&self, alg: &Arc<LieSuperalgebra>) -> UEElement {
        let mut out = UEElement::zero(alg);
        for (subset, u) in &self.coefficients {
            let x = UEElement::odd_monomial(alg, *subset);
            out = &out + &(&x * u);
        }
        out
    }
}

/// Left action of the basis element `b_i` on `U/J`.
pub fn act_on_quotient(
    alg: &Arc<LieSuperalgebra>,
    i: usize,
    class: &QuotientClass,
) -> QuotientClass {
    let mut rw = Rewriter::new(alg, TermOrder::OddFirst);
    let mut out = Terms::new();
    for (subset, c) in class {
        // x^I reads the same in both orders
        let t = rw.mul_gen_mono(i, &Monomial::odd_subset(alg.n_even(), *subset));
        add_scaled(&mut out, &t, c);
    }
    out.into_iter()
        .filter(|(mono, _)| mono.even.iter().all(|&e| e == 0))
        .map(|(mono, c)| (mono.odd, c))
        .collect()
}

impl PartialEq for UEElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.terms == other.terms
    }
}

impl Add for &UEElement {
    type Output = UEElement;

    fn add(self, rhs: &UEElement) -> UEElement {
        assert!(
            self.same_algebra(rhs),
            "adding elements of different algebras"
        );
        let mut terms = self.terms.clone();
        add_scaled(&mut terms, &rhs.terms, &Scalar::one());
        UEElement {
            alg: Arc::clone(&self.alg),
            terms,
        }
    }
}

impl Sub for &UEElement {
    type Output = UEElement;

    fn sub(self, rhs: &UEElement) -> UEElement {
        assert!(
            self.same_algebra(rhs),
            "subtracting elements of different algebras"
        );
        let mut terms = self.terms.clone();
        add_scaled(&mut terms, &rhs.terms, &-Scalar::one());
        UEElement {
            alg: Arc::clone(&self.alg),
            terms,
        }
    }
}

impl Neg for &UEElement {
    type Output = UEElement;

    fn neg(self) -> UEElement {
        self.scale(&-Scalar::one())
    }
}

/// Panics on mismatched algebras; use [`UEElement::multiply`] to get an error.
impl Mul for &UEElement {
    type Output = UEElement;

    fn mul(self, rhs: &UEElement) -> UEElement {
        self.multiply(rhs)
            .expect("multiplying elements of different algebras")
    }
}

pub fn format_monomial(alg: &LieSuperalgebra, mono: &Monomial) -> String {
    if mono.is_one() {
        return "1".into();
    }
    let n0 = alg.n_even();
    let mut parts = Vec::new();
    for (i, &e) in mono.even.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(alg.basis_name(i).to_string()),
            _ => parts.push(format!("{}^{}", alg.basis_name(i), e)),
        }
    }
    for b in (0..64).filter(|b| mono.odd >> b & 1 == 1) {
        parts.push(alg.basis_name(n0 + b).to_string());
    }
    parts.join("*")
}

impl fmt::Display for UEElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by_key(|(m, _)| (m.degree(), m.word(TermOrder::EvenFirst)));
        for (k, (mono, c)) in sorted.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if mono.is_one() {
                write!(f, "{}", format_scalar(c))?;
            } else if c.is_one() {
                write!(f, "{}", format_monomial(&self.alg, mono))?;
            } else {
                write!(
                    f,
                    "({})*{}",
                    format_scalar(c),
                    format_monomial(&self.alg, mono)
                )?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UEElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UEElement({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn bad2() -> Arc<LieSuperalgebra> {
        Arc::new(
            LieSuperalgebra::new(
                "bad2",
                vec!["X".into()],
                vec!["theta".into()],
                vec![((0, 1), vec![(1, int(1))]), ((1, 0), vec![(1, int(-1))])],
            )
            .unwrap(),
        )
    }

    fn g2() -> Arc<LieSuperalgebra> {
        Arc::new(
            LieSuperalgebra::new("g2", vec![], vec!["x1".into(), "x2".into()], vec![]).unwrap(),
        )
    }

    fn gen(alg: &Arc<LieSuperalgebra>, i: usize) -> UEElement {
        UEElement::generator(alg, i)
    }

    #[test]
    fn grassmann_sign_swap() {
        let alg = g2();
        let prod = &gen(&alg, 1) * &gen(&alg, 0);
        assert_eq!(prod, UEElement::odd_monomial(&alg, 0b11).scale(&int(-1)));
        assert!((&gen(&alg, 0) * &gen(&alg, 0)).is_zero());
    }

    #[test]
    fn bad2_products() {
        let alg = bad2();
        let (x, t) = (gen(&alg, 0), gen(&alg, 1));
        assert_eq!(&t * &x, &(&x * &t) - &t);
        assert!((&t * &t).is_zero());
    }

    #[test]
    fn counit_extracts_constant() {
        let alg = bad2();
        let (x, t) = (gen(&alg, 0), gen(&alg, 1));
        assert_eq!(UEElement::one(&alg).counit(), int(1));
        assert_eq!(x.counit(), int(0));
        let u = &(&(&x * &t) - &t) + &UEElement::scalar(&alg, int(3));
        assert_eq!(u.counit(), int(3));
    }

    #[test]
    fn alpha_on_bad2() {
        let alg = bad2();
        let x = gen(&alg, 0);
        let one = UEElement::one(&alg);
        assert_eq!(x.alpha().unwrap(), &x + &one);
        let x2 = &x * &x;
        let expected = &(&x2 + &x.scale(&int(2))) + &one;
        assert_eq!(x2.alpha().unwrap(), expected);
        assert_eq!(x2.alpha().unwrap().alpha_inv().unwrap(), x2);
        assert!(matches!(gen(&alg, 1).alpha(), Err(Error::Precondition(_))));
    }

    #[test]
    fn odd_first_form_of_x_theta() {
        let alg = bad2();
        let xt = &gen(&alg, 0) * &gen(&alg, 1);
        let form = xt.odd_first_form();
        assert_eq!(form.coefficients.len(), 1);
        assert_eq!(form.coefficients[&1], &gen(&alg, 0) + &UEElement::one(&alg));
        assert_eq!(form.reassemble(&alg), xt);
    }

    #[test]
    fn quotient_membership() {
        let alg = bad2();
        let (x, t) = (gen(&alg, 0), gen(&alg, 1));
        assert!(x.in_j());
        let class = (&x * &t).quotient_project();
        assert_eq!(class, QuotientClass::from([(1, int(1))]));
        let g = g2();
        let top = UEElement::odd_monomial(&g, 0b11);
        assert_eq!(
            top.quotient_project(),
            QuotientClass::from([(0b11, int(1))])
        );
        assert!(!top.in_j());
    }

    #[test]
    fn quotient_action() {
        let alg = bad2();
        let theta_class = QuotientClass::from([(1, int(1))]);
        assert_eq!(act_on_quotient(&alg, 0, &theta_class), theta_class);
        let unit_class = QuotientClass::from([(0, int(1))]);
        assert_eq!(act_on_quotient(&alg, 1, &unit_class), theta_class);
        let g = g2();
        assert!(act_on_quotient(&g, 0, &QuotientClass::from([(1, int(1))])).is_empty());
    }

    #[test]
    fn mismatched_algebras() {
        let a = bad2();
        let b = g2();
        assert_eq!(
            gen(&a, 0).multiply(&gen(&b, 0)),
            Err(Error::AlgebraMismatch)
        );
    }

    #[test]
    fn display() {
        let alg = bad2();
        let u = &(&gen(&alg, 0) * &gen(&alg, 1)).scale(&int(2)) - &UEElement::one(&alg);
        assert_eq!(u.to_string(), "-1 + (2)*X*theta");
    }
}
