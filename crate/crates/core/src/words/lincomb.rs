use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::graded::Sign;
use crate::scalar::Scalar;

/// A finite formal linear combination with exact coefficients. Zero
/// coefficients are never stored, so the empty map is the zero vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_signed(&mut self, key: K, coeff: &Scalar, sign: Sign) {
        self.add_term(key, coeff.signed(sign));
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn signed(&self, sign: Sign) -> Self {
        match sign {
            Sign::Plus => self.clone(),
            Sign::Minus => -self.clone(),
        }
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    /// The first term in canonical order, if any.
    pub fn leading(&self) -> Option<(&K, &Scalar)> {
        self.terms.iter().next()
    }

    /// Extends `f: K → LinComb<L>` linearly.
    pub fn flat_map<L: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<L>, E>,
    ) -> Result<LinComb<L>, E> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for v in self.terms.values_mut() {
            *v = -std::mem::take(v);
        }
        self
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), -v);
        }
    }
}

impl<K: Ord + Clone> Add<&LinComb<K>> for LinComb<K> {
    type Output = Self;
    fn add(mut self, rhs: &LinComb<K>) -> Self {
        self += rhs;
        self
    }
}

impl<K: Ord + Clone> Sub<&LinComb<K>> for LinComb<K> {
    type Output = Self;
    fn sub(mut self, rhs: &LinComb<K>) -> Self {
        self -= rhs;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut a = LinComb::term("w", Scalar::from_int(2));
        a.add_term("w", Scalar::from_int(-2));
        assert!(a.is_zero());
        let b = LinComb::basis("x") - &LinComb::basis("x");
        assert!(b.is_zero());
    }

    #[test]
    fn flat_map_is_linear() {
        let a: LinComb<i32> = [(1, Scalar::from_int(2)), (2, Scalar::from_int(3))]
            .into_iter()
            .collect();
        let out = a
            .flat_map(|k| Ok::<_, ()>(LinComb::term(k % 2, Scalar::from_int(*k as i64))))
            .unwrap();
        assert_eq!(out.coeff(&1), Scalar::from_int(2));
        assert_eq!(out.coeff(&0), Scalar::from_int(6));
    }
}
