//! Degrees, Koszul signs, permutations and shuffles.
//!
//! Permutations are stored 0-based and act on positions: the letter at
//! position `i` is sent to position `images[i]`, so `apply(seq)[images[i]] =
//! seq[i]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, MulAssign, Neg};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^exponent`.
    pub fn from_parity(exponent: i64) -> Sign {
        if exponent.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Which of the three gradings a sign computation uses.
///
/// `Base` is `|x|`, `Shift1` is `deg(x) = |x| - 1`, `Shift2` is
/// `deg'(x) = |x| - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GradingView {
    Base,
    Shift1,
    Shift2,
}

impl GradingView {
    pub fn offset(self) -> i64 {
        match self {
            GradingView::Base => 0,
            GradingView::Shift1 => 1,
            GradingView::Shift2 => 2,
        }
    }
}

/// A named generator with its base degree `|x|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    name: Arc<str>,
    base_degree: i32,
}

impl Generator {
    pub fn new(name: impl AsRef<str>, base_degree: i32) -> Self {
        Generator {
            name: Arc::from(name.as_ref()),
            base_degree,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base_degree(&self) -> i32 {
        self.base_degree
    }

    pub fn degree(&self, view: GradingView) -> i64 {
        self.base_degree as i64 - view.offset()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A set of generators with unique names.
#[derive(Clone, Debug, Default)]
pub struct GeneratorRegistry {
    gens: BTreeMap<String, Generator>,
}

impl GeneratorRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: &str, base_degree: i32) -> Result<Generator> {
        if !valid_name(name) {
            return Err(Error::arg(format!("invalid generator name `{name}`")));
        }
        if self.gens.contains_key(name) {
            return Err(Error::arg(format!("duplicate generator `{name}`")));
        }
        let g = Generator::new(name, base_degree);
        self.gens.insert(name.to_string(), g.clone());
        Ok(g)
    }

    pub fn get(&self, name: &str) -> Option<&Generator> {
        self.gens.get(name)
    }

    pub fn resolve(&self, name: &str) -> Result<Generator> {
        self.get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.gens.values()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '^' | '.'))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Validates that `images` (0-based) is a bijection of `0..n`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::arg(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from the 1-based image notation `σ(1), …, σ(n)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::arg("1-based image list contains 0"));
        }
        Self::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    /// The permutation placing the letters in target order: `order[t]` is the
    /// original index of the letter ending up at position `t`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let mut images = vec![usize::MAX; order.len()];
        for (t, &i) in order.iter().enumerate() {
            if i >= order.len() || images[i] != usize::MAX {
                return Err(Error::arg(format!("not an ordering: {order:?}")));
            }
            images[i] = t;
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Moves entries by position: `out[σ(i)] = seq[i]`.
    pub fn apply<T: Clone>(&self, seq: &[T]) -> Vec<T> {
        assert_eq!(self.len(), seq.len(), "permutation size mismatch");
        let mut out: Vec<Option<T>> = vec![None; seq.len()];
        for (i, x) in seq.iter().enumerate() {
            out[self.images[i]] = Some(x.clone());
        }
        out.into_iter().map(|x| x.expect("bijection")).collect()
    }

    /// `σ ⊕ id_k`: acts as `self` on the first letters and fixes `k` more.
    pub fn extend(&self, k: usize) -> Self {
        let n = self.len();
        let mut images = self.images.clone();
        images.extend(n..n + k);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The Koszul sign of moving letters of the given degrees by `perm`: the
/// product over inversions `i < j, σ(i) > σ(j)` of `(-1)^{d_i d_j}`.
pub fn koszul_sign(degrees: &[i64], perm: &Permutation) -> Result<Sign> {
    if degrees.len() != perm.len() {
        return Err(Error::arg(format!(
            "koszul_sign: {} degrees for a permutation of size {}",
            degrees.len(),
            perm.len()
        )));
    }
    Ok(koszul_sign_unchecked(degrees, perm.images()))
}

pub(crate) fn koszul_sign_unchecked(degrees: &[i64], images: &[usize]) -> Sign {
    let mut odd_pairs = 0i64;
    for i in 0..images.len() {
        if degrees[i] & 1 == 0 {
            continue;
        }
        for j in i + 1..images.len() {
            if images[i] > images[j] && degrees[j] & 1 == 1 {
                odd_pairs += 1;
            }
        }
    }
    Sign::from_parity(odd_pairs)
}

/// Sign of rearranging letters into `order` (see [`Permutation::from_order`]).
/// Only the relative order of odd letters matters.
pub fn reorder_sign(degrees: &[i64], order: &[usize]) -> Sign {
    let mut odd_pairs = 0i64;
    for a in 0..order.len() {
        if degrees[order[a]] & 1 == 0 {
            continue;
        }
        for b in a + 1..order.len() {
            if order[a] > order[b] && degrees[order[b]] & 1 == 1 {
                odd_pairs += 1;
            }
        }
    }
    Sign::from_parity(odd_pairs)
}

/// `(-1)^{Σ_{i=1..n} (n-i)·d_i}`.
pub fn decalage_sign(degrees: &[i64]) -> Sign {
    let n = degrees.len() as i64;
    let e: i64 = degrees
        .iter()
        .enumerate()
        .map(|(i, d)| (n - 1 - i as i64) * d)
        .sum();
    Sign::from_parity(e)
}

/// All p-element subsets of `0..n`, in lexicographic order.
pub fn subsets_of_size(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if p > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..p).collect();
    loop {
        out.push(cur.clone());
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - p + i {
                cur[i] += 1;
                for j in i + 1..p {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The (p,q)-shuffles: permutations of `p+q` letters keeping the first `p`
/// and the last `q` letters in order. Enumerated lexicographically by the set
/// of positions receiving the first block. An empty side gives `[id]`.
pub fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    if p == 0 || q == 0 {
        return vec![Permutation::identity(n)];
    }
    subsets_of_size(n, p)
        .into_iter()
        .map(|s| Permutation {
            images: block_images(n, &s),
        })
        .collect()
}

/// Images of a shuffle sending the first block to `first` positions and the
/// rest, in order, to the complement.
fn block_images(n: usize, first: &[usize]) -> Vec<usize> {
    let mut taken = vec![false; n];
    for &i in first {
        taken[i] = true;
    }
    let mut images = first.to_vec();
    images.extend((0..n).filter(|&i| !taken[i]));
    images
}

/// Permutations of `k + 1 + m` letters increasing on the first `k` and on the
/// last `m` images. Ordered by the image of the middle letter, then by the
/// positions of the first block.
pub fn shuffles_k1m(k: usize, m: usize) -> Vec<Permutation> {
    let n = k + 1 + m;
    let mut out = Vec::new();
    for mid in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&i| i != mid).collect();
        for s in subsets_of_size(n - 1, k) {
            let first: Vec<usize> = s.iter().map(|&i| rest[i]).collect();
            let mut taken = vec![false; n];
            taken[mid] = true;
            for &i in &first {
                taken[i] = true;
            }
            let mut images = first;
            images.push(mid);
            images.extend((0..n).filter(|&i| !taken[i]));
            out.push(Permutation { images });
        }
    }
    out
}

/// Every permutation of `0..n` in lexicographic order of images.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let n = used.len();
        if cur.len() == n {
            out.push(Permutation { images: cur.clone() });
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_sign(degrees: &[i64], perm: &Permutation) -> Sign {
        // bubble-sort the image sequence; each adjacent swap of letters a, b
        // contributes (-1)^{ab}
        let mut pos: Vec<(usize, i64)> = perm
            .images()
            .iter()
            .zip(degrees)
            .map(|(&t, &d)| (t, d))
            .collect();
        let mut sign = Sign::Plus;
        for _ in 0..pos.len() {
            for i in 0..pos.len().saturating_sub(1) {
                if pos[i].0 > pos[i + 1].0 {
                    sign *= Sign::from_parity(pos[i].1 * pos[i + 1].1);
                    pos.swap(i, i + 1);
                }
            }
        }
        sign
    }

    #[test]
    fn koszul_examples() {
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(koszul_sign(&[1, 1], &swap).unwrap(), Sign::Minus);
        assert_eq!(
            koszul_sign(&[3, -1, 2], &Permutation::identity(3)).unwrap(),
            Sign::Plus
        );
        let rev = Permutation::from_one_based(&[3, 2, 1]).unwrap();
        assert_eq!(koszul_sign(&[1, 2, 1], &rev).unwrap(), Sign::Minus);
        assert!(koszul_sign(&[1], &swap).is_err());
    }

    #[test]
    fn koszul_matches_transposition_decomposition() {
        for n in 0..=5 {
            for p in all_permutations(n) {
                for mask in 0..(1u32 << n) {
                    let d: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64 + 2).collect();
                    assert_eq!(koszul_sign(&d, &p).unwrap(), brute_sign(&d, &p));
                }
            }
        }
    }

    #[test]
    fn koszul_cocycle() {
        // sign(σ∘ρ, d) = sign(ρ, d) · sign(σ, ρ·d), with ρ·d the moved degrees
        for n in 0..=5 {
            let perms = all_permutations(n);
            for mask in 0..(1u32 << n) {
                let d: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64).collect();
                for s in &perms {
                    for r in &perms {
                        let lhs = koszul_sign(&d, &s.compose(r)).unwrap();
                        let moved = r.apply(&d);
                        let rhs = koszul_sign(&d, r).unwrap() * koszul_sign(&moved, s).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn koszul_parity_extremes() {
        for p in all_permutations(4) {
            assert_eq!(koszul_sign(&[0, 2, -2, 4], &p).unwrap(), Sign::Plus);
            let inversions = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| p.image(i) > p.image(j))
                .count();
            assert_eq!(
                koszul_sign(&[1, 1, 3, -1], &p).unwrap(),
                Sign::from_parity(inversions as i64)
            );
        }
    }

    #[test]
    fn reorder_sign_agrees_with_koszul() {
        for p in all_permutations(4) {
            let d = [1, 2, 1, 3];
            let order = p.inverse().images().to_vec();
            assert_eq!(reorder_sign(&d, &order), koszul_sign(&d, &p).unwrap());
            assert_eq!(Permutation::from_order(&order).unwrap(), p);
        }
    }

    fn is_shuffle(p: &Permutation, first: usize) -> bool {
        let im = p.images();
        im[..first].windows(2).all(|w| w[0] < w[1]) && im[first..].windows(2).all(|w| w[0] < w[1])
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn fact(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(
            shuffles(1, 1),
            vec![Permutation::identity(2), Permutation::transposition(2, 0, 1)]
        );
        assert_eq!(shuffles(2, 2).len(), 6);
        assert_eq!(shuffles(1, 2).len(), 3);
        assert_eq!(shuffles(0, 3), vec![Permutation::identity(3)]);
        assert_eq!(shuffles(2, 0), vec![Permutation::identity(2)]);
    }

    #[test]
    fn shuffle_counts_and_monotonicity() {
        for n in 2..=8 {
            for p in 1..n {
                let sh = shuffles(p, n - p);
                assert_eq!(sh.len(), binom(n, p));
                assert!(sh.iter().all(|s| is_shuffle(s, p)));
                // exactly the shuffles among all permutations
                if n <= 6 {
                    let brute = all_permutations(n).into_iter().filter(|s| is_shuffle(s, p)).count();
                    assert_eq!(brute, sh.len());
                }
            }
        }
    }

    #[test]
    fn shuffle_block_swap() {
        // Sh(p,q) = Sh(q,p) ∘ w, where w moves the first p letters behind the last q
        use std::collections::BTreeSet;
        for n in 2..=6 {
            for p in 1..n {
                let q = n - p;
                let swap = Permutation::from_order(&(p..n).chain(0..p).collect::<Vec<_>>()).unwrap();
                let lhs: BTreeSet<_> = shuffles(q, p).into_iter().collect();
                let rhs: BTreeSet<_> = shuffles(p, q).iter().map(|s| s.compose(&swap.inverse())).collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn k1m_counts() {
        assert_eq!(shuffles_k1m(0, 0), vec![Permutation::identity(1)]);
        assert_eq!(shuffles_k1m(1, 0).len(), 2);
        assert_eq!(shuffles_k1m(0, 1).len(), 2);
        for k in 0..4 {
            for m in 0..4 {
                let n = k + 1 + m;
                let all = shuffles_k1m(k, m);
                assert_eq!(all.len(), fact(n) / (fact(k) * fact(m)));
                let distinct: std::collections::BTreeSet<_> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
                for s in &all {
                    let im = s.images();
                    assert!(im[..k].windows(2).all(|w| w[0] < w[1]));
                    assert!(im[k + 1..].windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }

    #[test]
    fn decalage_examples() {
        assert_eq!(decalage_sign(&[5]), Sign::Plus);
        assert_eq!(decalage_sign(&[1, 1]), Sign::Minus);
        assert_eq!(decalage_sign(&[0, 0, 0, 0]), Sign::Plus);
        assert_eq!(decalage_sign(&[1, 0, 1]), Sign::Plus);
    }

    #[test]
    fn registry_rejects_duplicates() {
        let mut r = GeneratorRegistry::new();
        r.insert("a", 1).unwrap();
        assert!(r.insert("a", 2).is_err());
        assert!(r.insert("bad name", 1).is_err());
        assert_eq!(r.resolve("a").unwrap().degree(GradingView::Shift1), 0);
        assert!(r.resolve("zz").is_err());
    }
}
