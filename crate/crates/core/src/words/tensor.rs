use std::fmt;

use crate::error::{Error, Result};
use crate::graded::{koszul_sign_unchecked, GradingView, Permutation, Sign};
use crate::scalar::Scalar;
use crate::words::{Element, LinComb, Word};

/// A formal combination of `k`-tuples of words (`a ⊠ b ⊠ …`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorPowerElement {
    arity: usize,
    terms: LinComb<Vec<Word>>,
}

impl TensorPowerElement {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor power arity must be at least 1");
        TensorPowerElement {
            arity,
            terms: LinComb::zero(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &LinComb<Vec<Word>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, legs: Vec<Word>, coeff: Scalar) {
        assert_eq!(legs.len(), self.arity, "leg count does not match arity");
        self.terms.add_term(legs, coeff);
    }

    pub fn add_signed(&mut self, legs: Vec<Word>, coeff: &Scalar, sign: Sign) {
        self.add_term(legs, coeff.signed(sign));
    }

    pub fn add_scaled(&mut self, other: &TensorPowerElement, c: &Scalar) {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        self.terms.add_scaled(&other.terms, c);
    }

    pub fn add(&mut self, other: &TensorPowerElement) {
        self.add_scaled(other, &Scalar::one());
    }

    pub fn sub(&mut self, other: &TensorPowerElement) {
        self.add_scaled(other, &-Scalar::one());
    }

    pub fn difference(&self, other: &TensorPowerElement) -> TensorPowerElement {
        let mut out = self.clone();
        out.sub(other);
        out
    }

    pub fn signed(&self, sign: Sign) -> Self {
        TensorPowerElement {
            arity: self.arity,
            terms: self.terms.signed(sign),
        }
    }

    /// `a ⊠ b` extended bilinearly.
    pub fn from_pair(a: &Element, b: &Element) -> Self {
        let mut out = Self::zero(2);
        for (x, c) in a {
            for (y, d) in b {
                out.add_term(vec![x.clone(), y.clone()], c * d);
            }
        }
        out
    }

    /// Wraps an element as a 1-fold tensor power.
    pub fn from_element(e: &Element) -> Self {
        let mut out = Self::zero(1);
        for (w, c) in e {
            out.add_term(vec![w.clone()], c.clone());
        }
        out
    }

    /// The element underlying a 1-fold tensor power.
    pub fn into_element(self) -> Result<Element> {
        if self.arity != 1 {
            return Err(Error::arg("not a 1-fold tensor power"));
        }
        Ok(self
            .terms
            .into_iter()
            .map(|(mut legs, c)| (legs.pop().expect("one leg"), c))
            .collect())
    }

    /// Permutes the legs with the Koszul sign of their degrees in `view`.
    pub fn permute_legs(&self, perm: &Permutation, view: GradingView) -> Result<Self> {
        if perm.len() != self.arity {
            return Err(Error::arg("leg permutation size mismatch"));
        }
        let mut out = Self::zero(self.arity);
        for (legs, c) in &self.terms {
            let degrees: Vec<i64> = legs.iter().map(|w| w.degree(view)).collect();
            let s = koszul_sign_unchecked(&degrees, perm.images());
            out.add_signed(perm.apply(legs), c, s);
        }
        Ok(out)
    }

    /// The signed swap of legs `i` and `i+1` (0-based).
    pub fn volte(&self, i: usize, view: GradingView) -> Result<Self> {
        if i + 1 >= self.arity {
            return Err(Error::arg("volte index out of range"));
        }
        self.permute_legs(&Permutation::transposition(self.arity, i, i + 1), view)
    }

    /// Replaces leg `i` by the tensor power `f(leg)`, with the Koszul sign of
    /// moving a map of the given parity past the earlier legs.
    pub fn expand_leg(
        &self,
        i: usize,
        parity: i64,
        view: GradingView,
        mut f: impl FnMut(&Word) -> Result<TensorPowerElement>,
    ) -> Result<Self> {
        if i >= self.arity {
            return Err(Error::arg("leg index out of range"));
        }
        let mut out: Option<TensorPowerElement> = None;
        for (legs, c) in &self.terms {
            let image = f(&legs[i])?;
            let acc = out.get_or_insert_with(|| Self::zero(self.arity - 1 + image.arity));
            if image.is_zero() {
                continue;
            }
            if acc.arity != self.arity - 1 + image.arity {
                return Err(Error::arg("leg map produced inconsistent arities"));
            }
            let before: i64 = legs[..i].iter().map(|w| w.degree(view)).sum();
            let s = Sign::from_parity(parity * before);
            for (inner, d) in &image.terms {
                let mut new_legs = Vec::with_capacity(acc.arity);
                new_legs.extend_from_slice(&legs[..i]);
                new_legs.extend(inner.iter().cloned());
                new_legs.extend_from_slice(&legs[i + 1..]);
                acc.add_signed(new_legs, &(c * d), s);
            }
        }
        Ok(out.unwrap_or_else(|| Self::zero(self.arity)))
    }

    /// Like [`expand_leg`](Self::expand_leg) for an element-valued map.
    pub fn map_leg(
        &self,
        i: usize,
        parity: i64,
        view: GradingView,
        mut f: impl FnMut(&Word) -> Result<Element>,
    ) -> Result<Self> {
        self.expand_leg(i, parity, view, |w| Ok(TensorPowerElement::from_element(&f(w)?)))
    }

    /// Like [`expand_leg`](Self::expand_leg) but the result always has the
    /// given arity, even when every image vanishes.
    pub fn expand_leg_to(
        &self,
        i: usize,
        parity: i64,
        view: GradingView,
        image_arity: usize,
        f: impl FnMut(&Word) -> Result<TensorPowerElement>,
    ) -> Result<Self> {
        let out = self.expand_leg(i, parity, view, f)?;
        if out.is_zero() {
            Ok(Self::zero(self.arity - 1 + image_arity))
        } else {
            Ok(out)
        }
    }

    /// All leg-wise degrees `(d₁,…,d_k)` occurring, for homogeneity scans.
    pub fn leg_degrees(&self, view: GradingView) -> Vec<Vec<i64>> {
        self.terms
            .keys()
            .map(|legs| legs.iter().map(|w| w.degree(view)).collect())
            .collect()
    }
}

impl fmt::Display for TensorPowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return f.write_str("0");
        }
        for (n, (legs, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} * ")?;
            for (i, w) in legs.iter().enumerate() {
                if i > 0 {
                    f.write_str(" # ")?;
                }
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}
