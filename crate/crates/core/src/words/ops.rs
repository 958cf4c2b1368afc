//! Signed permutations, shuffle products, the `μₙ` maps, symmetric products
//! and the embedding of symmetric words into pair words.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::graded::{koszul_sign_unchecked, reorder_sign, shuffles, Generator, GradingView, Permutation, Sign};
use crate::scalar::Scalar;
use crate::words::{Element, Word};

fn letters<'a>(w: &'a Word, op: &str) -> Result<&'a [Generator]> {
    match w {
        Word::Tensor(ls) => Ok(ls),
        _ => Err(Error::schema(format!("{op} expects tensor words, got {w}"))),
    }
}

pub(crate) fn letter_degrees(ls: &[Generator], view: GradingView) -> Vec<i64> {
    ls.iter().map(|g| g.degree(view)).collect()
}

/// `ε(σ) · σ(x)` for a tensor word `x`.
pub fn signed_permute(word: &Word, perm: &Permutation, view: GradingView) -> Result<Element> {
    let ls = letters(word, "signed_permute")?;
    if ls.len() != perm.len() {
        return Err(Error::arg(format!(
            "permutation of size {} applied to a word of length {}",
            perm.len(),
            ls.len()
        )));
    }
    let s = koszul_sign_unchecked(&letter_degrees(ls, view), perm.images());
    Ok(Element::term(Word::Tensor(perm.apply(ls)), Scalar::from_sign(s)))
}

/// Signed interleavings of two letter sequences.
pub(crate) fn shuffle_letters(
    left: &[Generator],
    right: &[Generator],
    view: GradingView,
    signed: bool,
) -> Vec<(Sign, Vec<Generator>)> {
    let mut all: Vec<Generator> = left.to_vec();
    all.extend_from_slice(right);
    let degrees = letter_degrees(&all, view);
    shuffles(left.len(), right.len())
        .into_iter()
        .map(|sigma| {
            let s = if signed {
                koszul_sign_unchecked(&degrees, sigma.images())
            } else {
                Sign::Plus
            };
            (s, sigma.apply(&all))
        })
        .collect()
}

/// `sh_{p,q}(x ⊗ y)`: the signed sum over (p,q)-shuffles.
pub fn shuffle_product(left: &Word, right: &Word, view: GradingView) -> Result<Element> {
    shuffle_product_with(left, right, view, true)
}

pub(crate) fn shuffle_product_with(
    left: &Word,
    right: &Word,
    view: GradingView,
    signed: bool,
) -> Result<Element> {
    let l = letters(left, "shuffle_product")?;
    let r = letters(right, "shuffle_product")?;
    let mut out = Element::zero();
    for (s, w) in shuffle_letters(l, r, view, signed) {
        out.add_term(Word::Tensor(w), Scalar::from_sign(s));
    }
    Ok(out)
}

/// Bilinear extension of [`shuffle_product`].
pub fn shuffle_elements(a: &Element, b: &Element, view: GradingView) -> Result<Element> {
    let mut out = Element::zero();
    for (x, c) in a {
        for (y, d) in b {
            out.add_scaled(&shuffle_product(x, y, view)?, &(c * d));
        }
    }
    Ok(out)
}

type MuTable = Arc<Vec<(i64, Permutation)>>;

/// `μₙ` as a combination of place permutations, built from
/// `μ₁ = id`, `μ_{n+1} = μₙ⊗id − (μₙ⊗id)∘τ⁻¹`, where `τ⁻¹` moves the first
/// letter to the end. With `mu2_identity`, the recursion starts from `μ₂ = id`.
pub fn mu_permutations(n: usize, mu2_identity: bool) -> MuTable {
    static CACHE: OnceLock<Mutex<HashMap<(usize, bool), MuTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("mu cache").get(&(n, mu2_identity)) {
        return t.clone();
    }
    let table: MuTable = Arc::new(if n <= 1 || (n == 2 && mu2_identity) {
        vec![(1, Permutation::identity(n))]
    } else {
        let prev = mu_permutations(n - 1, mu2_identity);
        let mut tau_inv: Vec<usize> = (0..n).map(|i| i.wrapping_sub(1)).collect();
        tau_inv[0] = n - 1;
        let tau_inv = Permutation::new(tau_inv).expect("cycle");
        let mut acc: BTreeMap<Permutation, i64> = BTreeMap::new();
        for (c, p) in prev.iter() {
            let ext = p.extend(1);
            *acc.entry(ext.compose(&tau_inv)).or_default() -= c;
            *acc.entry(ext).or_default() += c;
        }
        acc.into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(p, c)| (c, p))
            .collect()
    });
    cache
        .lock()
        .expect("mu cache")
        .insert((n, mu2_identity), table.clone());
    table
}

/// `μₙ(x)` for a tensor word of length `n`, acting with Koszul signs.
pub fn mu(word: &Word, view: GradingView) -> Result<Element> {
    mu_with(word, view, false)
}

/// `μₙ` with an explicit arity check.
pub fn mu_n(n: usize, word: &Word, view: GradingView) -> Result<Element> {
    let ls = letters(word, "mu")?;
    if ls.len() != n {
        return Err(Error::arg(format!("mu{n} applied to a word of length {}", ls.len())));
    }
    mu(word, view)
}

pub(crate) fn mu_with(word: &Word, view: GradingView, mu2_identity: bool) -> Result<Element> {
    let ls = letters(word, "mu")?;
    Ok(mu_letters(ls, view, mu2_identity)
        .into_iter()
        .map(|(w, c)| (Word::Tensor(w), c))
        .collect())
}

pub(crate) fn mu_letters(
    ls: &[Generator],
    view: GradingView,
    mu2_identity: bool,
) -> Vec<(Vec<Generator>, Scalar)> {
    let degrees = letter_degrees(ls, view);
    let mut acc: BTreeMap<Vec<Generator>, i64> = BTreeMap::new();
    for (c, p) in mu_permutations(ls.len(), mu2_identity).iter() {
        let s = koszul_sign_unchecked(&degrees, p.images());
        *acc.entry(p.apply(ls)).or_default() += c * s.to_i64();
    }
    acc.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(w, c)| (w, Scalar::from_int(c)))
        .collect()
}

/// Linear extension of [`mu`].
pub fn mu_element(e: &Element, view: GradingView) -> Result<Element> {
    e.flat_map(|w| mu(w, view))
}

/// Concatenation of tensor words.
pub fn concat(a: &Word, b: &Word) -> Result<Word> {
    let mut ls = letters(a, "concat")?.to_vec();
    ls.extend_from_slice(letters(b, "concat")?);
    Ok(Word::Tensor(ls))
}

/// The graded-commutative product of symmetric words.
pub fn sym_product(a: &Element, b: &Element, view: GradingView) -> Result<Element> {
    let mut out = Element::zero();
    for (x, c) in a {
        for (y, d) in b {
            let (Word::Sym(xs), Word::Sym(ys)) = (x, y) else {
                return Err(Error::schema("sym_product expects symmetric words"));
            };
            let mut fs = xs.clone();
            fs.extend(ys.iter().cloned());
            out.add_word(Word::Sym(fs), &(c * d), view);
        }
    }
    out.check_schema()?;
    Ok(out)
}

/// `f₀…fₙ ↦ Σₕ ε · f_h ⊗ (f₀…f̂_h…fₙ)`: the identification of a symmetric
/// word with a sum of pair words, one term per choice of head.
pub fn embed_sym_into_pair(s: &Word, view: GradingView) -> Result<Element> {
    let Word::Sym(fs) = s else {
        return Err(Error::schema(format!("embed expects a symmetric word, got {s}")));
    };
    if fs.is_empty() {
        return Err(Error::arg("cannot embed the empty symmetric word"));
    }
    let degrees: Vec<i64> = fs.iter().map(|f| f.degree(view)).collect();
    let mut out = Element::zero();
    for h in 0..fs.len() {
        let mut order = vec![h];
        order.extend((0..fs.len()).filter(|&i| i != h));
        let sign = reorder_sign(&degrees, &order);
        let tail: Vec<Word> = order[1..].iter().map(|&i| fs[i].clone()).collect();
        out.add_word(
            Word::Pair(Box::new(fs[h].clone()), tail),
            &Scalar::from_sign(sign),
            view,
        );
    }
    Ok(out)
}

/// Linear extension of [`embed_sym_into_pair`].
pub fn embed_element(e: &Element, view: GradingView) -> Result<Element> {
    e.flat_map(|w| embed_sym_into_pair(w, view))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::text::format_element;

    fn g(n: &str, d: i32) -> Generator {
        Generator::new(n, d)
    }

    fn t(ls: &[Generator]) -> Word {
        Word::Tensor(ls.to_vec())
    }

    const V: GradingView = GradingView::Base;

    #[test]
    fn signed_permute_examples() {
        let (x1, x2) = (g("x1", 1), g("x2", 1));
        let w = t(&[x1.clone(), x2.clone()]);
        assert_eq!(signed_permute(&w, &Permutation::identity(2), V).unwrap(), Element::basis(w.clone()));
        assert_eq!(
            format_element(&signed_permute(&w, &Permutation::transposition(2, 0, 1), V).unwrap()),
            "-1/1 * T(x2,x1)"
        );
        let e = t(&[g("a", 0), g("b", 2), g("c", 4)]);
        let p = Permutation::from_one_based(&[3, 1, 2]).unwrap();
        let out = signed_permute(&e, &p, V).unwrap();
        assert_eq!(out.leading().unwrap().1, &Scalar::one());
        assert!(signed_permute(&w, &Permutation::identity(3), V).is_err());
    }

    #[test]
    fn shuffle_examples() {
        let x = t(&[g("x", 0)]);
        let y = t(&[g("y", 0)]);
        assert_eq!(
            format_element(&shuffle_product(&x, &y, V).unwrap()),
            "1/1 * T(x,y) + 1/1 * T(y,x)"
        );
        let x = t(&[g("x", 1)]);
        let y = t(&[g("y", 1)]);
        assert_eq!(
            format_element(&shuffle_product(&x, &y, V).unwrap()),
            "1/1 * T(x,y) + -1/1 * T(y,x)"
        );
        let ab = t(&[g("a", 0), g("b", 0)]);
        assert_eq!(shuffle_product(&ab, &t(&[g("c", 0)]), V).unwrap().len(), 3);
    }

    #[test]
    fn mu_examples() {
        let x = g("x", 1);
        let y = g("y", 1);
        assert_eq!(mu(&t(std::slice::from_ref(&x)), V).unwrap(), Element::basis(t(std::slice::from_ref(&x))));
        // μ₂(x⊗y) = x⊗y − (−1)^{xy} y⊗x
        assert_eq!(
            format_element(&mu(&t(&[x.clone(), y.clone()]), V).unwrap()),
            "1/1 * T(x,y) + 1/1 * T(y,x)"
        );
        let sh = shuffle_product(&t(std::slice::from_ref(&x)), &t(std::slice::from_ref(&y)), V).unwrap();
        assert!(mu_element(&sh, V).unwrap().is_zero());
        assert_eq!(mu_permutations(3, false).len(), 4);
        assert!(mu_n(3, &t(&[x]), V).is_err());
    }

    #[test]
    fn embed_examples() {
        let x = t(&[g("a", 2)]);
        let y = t(&[g("b", 2)]);
        let v = GradingView::Shift2;
        assert_eq!(
            format_element(&embed_sym_into_pair(&Word::Sym(vec![x.clone()]), v).unwrap()),
            "1/1 * P(T(a); S())"
        );
        assert_eq!(
            format_element(&embed_sym_into_pair(&Word::Sym(vec![x.clone(), y.clone()]), v).unwrap()),
            "1/1 * P(T(a); S(T(b))) + 1/1 * P(T(b); S(T(a)))"
        );
        assert!(embed_sym_into_pair(&Word::Sym(vec![]), v).is_err());
    }

    #[test]
    fn sym_product_odd_square() {
        let v = GradingView::Shift2;
        let x = Element::basis(Word::Sym(vec![t(&[g("a", 3)])]));
        assert!(sym_product(&x, &x, v).unwrap().is_zero());
        let y = Element::basis(Word::Sym(vec![t(&[g("b", 2)])]));
        assert_eq!(
            format_element(&sym_product(&y, &x, v).unwrap()),
            "1/1 * S(T(a),T(b))"
        );
    }
}
