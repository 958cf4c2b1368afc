//! Words and the free modules they span.
//!
//! * `Tensor` words are elements `α₁⊗…⊗α_p` of the tensor coalgebra over
//!   shifted generators.
//! * `Sym` words are monomials of a graded-symmetric algebra; their factors
//!   are kept sorted, the sorting sign is folded into the coefficient.
//! * `Pair` words `X₀ ⊗ X₁…Xₙ` have a distinguished head and a symmetric tail
//!   (an empty tail is `X₀ ⊗ 1`).

mod lincomb;
pub mod ops;
mod tensor;
pub mod text;

use std::collections::BTreeMap;

pub use lincomb::LinComb;
pub use tensor::TensorPowerElement;

use crate::error::{Error, Result};
use crate::graded::{reorder_sign, Generator, GradingView, Sign};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Word {
    Gen(Generator),
    Tensor(Vec<Generator>),
    Sym(Vec<Word>),
    Pair(Box<Word>, Vec<Word>),
}

pub type Element = LinComb<Word>;

/// The nesting schema of a word; elements must be schema-homogeneous.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schema {
    Gen,
    Tensor,
    /// Symmetric words over the given leaf kind (`None` for the empty word).
    Sym(Option<Leaf>),
    Pair(Leaf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leaf {
    Gen,
    Tensor,
}

impl Schema {
    fn compatible(self, other: Schema) -> bool {
        match (self, other) {
            (Schema::Sym(None), Schema::Sym(_)) | (Schema::Sym(_), Schema::Sym(None)) => true,
            (a, b) => a == b,
        }
    }
}

impl Word {
    pub fn gen(g: Generator) -> Word {
        Word::Gen(g)
    }

    pub fn tensor(letters: Vec<Generator>) -> Result<Word> {
        if letters.is_empty() {
            return Err(Error::arg("tensor word must have at least one letter"));
        }
        Ok(Word::Tensor(letters))
    }

    /// Total degree in the given view. A tensor word `α₁⊗…⊗α_p` has
    /// `Shift1` degree `Σ(|αᵢ|-1)` and `Shift2` degree one less, so as a
    /// single letter it behaves like a generator of base degree
    /// `Σ(|αᵢ|-1) + 1`.
    pub fn degree(&self, view: GradingView) -> i64 {
        match self {
            Word::Gen(g) => g.degree(view),
            Word::Tensor(ls) => {
                ls.iter().map(|g| g.base_degree() as i64 - 1).sum::<i64>() + 1 - view.offset()
            }
            Word::Sym(fs) => fs.iter().map(|f| f.degree(view)).sum(),
            Word::Pair(h, t) => h.degree(view) + t.iter().map(|f| f.degree(view)).sum::<i64>(),
        }
    }

    pub fn letters(&self) -> Option<&[Generator]> {
        match self {
            Word::Tensor(ls) => Some(ls),
            _ => None,
        }
    }

    /// Tensor length (1 for a generator).
    pub fn tensor_len(&self) -> Option<usize> {
        match self {
            Word::Gen(_) => Some(1),
            Word::Tensor(ls) => Some(ls.len()),
            _ => None,
        }
    }

    pub fn factors(&self) -> Option<&[Word]> {
        match self {
            Word::Sym(fs) => Some(fs),
            _ => None,
        }
    }

    fn leaf(&self) -> Result<Leaf> {
        match self {
            Word::Gen(_) => Ok(Leaf::Gen),
            Word::Tensor(_) => Ok(Leaf::Tensor),
            _ => Err(Error::schema(format!("nested composite word {self}"))),
        }
    }

    pub fn schema(&self) -> Result<Schema> {
        fn leaf_of(fs: &[Word]) -> Result<Option<Leaf>> {
            let mut leaf = None;
            for f in fs {
                let l = f.leaf()?;
                if leaf.is_some_and(|x| x != l) {
                    return Err(Error::schema("symmetric word mixes leaf kinds"));
                }
                leaf = Some(l);
            }
            Ok(leaf)
        }
        match self {
            Word::Gen(_) => Ok(Schema::Gen),
            Word::Tensor(ls) if ls.is_empty() => Err(Error::schema("empty tensor word")),
            Word::Tensor(_) => Ok(Schema::Tensor),
            Word::Sym(fs) => Ok(Schema::Sym(leaf_of(fs)?)),
            Word::Pair(h, t) => {
                let l = h.leaf()?;
                if leaf_of(t)?.is_some_and(|x| x != l) {
                    return Err(Error::schema("pair head and tail have different kinds"));
                }
                Ok(Schema::Pair(l))
            }
        }
    }

    /// Puts the word in canonical form, returning the sorting sign, or `None`
    /// when a repeated odd factor annihilates it.
    pub fn normalized(&self, view: GradingView) -> Option<(Sign, Word)> {
        match self {
            Word::Gen(_) | Word::Tensor(_) => Some((Sign::Plus, self.clone())),
            Word::Sym(fs) => {
                let (s, fs) = sort_factors(fs, view)?;
                Some((s, Word::Sym(fs)))
            }
            Word::Pair(h, t) => {
                let (s0, h) = h.normalized(view)?;
                let (s1, t) = sort_factors(t, view)?;
                Some((s0 * s1, Word::Pair(Box::new(h), t)))
            }
        }
    }
}

/// Sorts symmetric factors with their Koszul sign.
pub(crate) fn sort_factors(fs: &[Word], view: GradingView) -> Option<(Sign, Vec<Word>)> {
    let mut sign = Sign::Plus;
    let mut normed = Vec::with_capacity(fs.len());
    for f in fs {
        let (s, w) = f.normalized(view)?;
        sign *= s;
        normed.push(w);
    }
    let degrees: Vec<i64> = normed.iter().map(|f| f.degree(view)).collect();
    let mut order: Vec<usize> = (0..normed.len()).collect();
    order.sort_by(|&a, &b| normed[a].cmp(&normed[b]));
    sign *= reorder_sign(&degrees, &order);
    let sorted: Vec<Word> = order.iter().map(|&i| normed[i].clone()).collect();
    for w in sorted.windows(2) {
        if w[0] == w[1] && w[0].degree(view) & 1 == 1 {
            return None;
        }
    }
    Some((sign, sorted))
}

impl Element {
    /// Adds `c · w` after normalizing `w`.
    pub fn add_word(&mut self, w: Word, c: &Scalar, view: GradingView) {
        if let Some((s, w)) = w.normalized(view) {
            self.add_signed(w, c, s);
        }
    }

    /// Re-normalizes every word and checks schema homogeneity.
    pub fn normalize(&self, view: GradingView) -> Result<Element> {
        self.check_schema()?;
        let mut out = Element::zero();
        for (w, c) in self {
            out.add_word(w.clone(), c, view);
        }
        Ok(out)
    }

    /// The common schema of all words (`None` for the zero element).
    pub fn check_schema(&self) -> Result<Option<Schema>> {
        let mut schema: Option<Schema> = None;
        for w in self.keys() {
            let s = w.schema()?;
            match schema {
                None => schema = Some(s),
                Some(prev) if prev.compatible(s) => {
                    if matches!(prev, Schema::Sym(None)) {
                        schema = Some(s);
                    }
                }
                Some(prev) => {
                    return Err(Error::schema(format!(
                        "element mixes {prev:?} and {s:?} words"
                    )))
                }
            }
        }
        Ok(schema)
    }

    pub fn homogeneous_components(&self, view: GradingView) -> BTreeMap<i64, Element> {
        let mut out: BTreeMap<i64, Element> = BTreeMap::new();
        for (w, c) in self {
            out.entry(w.degree(view))
                .or_default()
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// The degree if the element is nonzero and homogeneous.
    pub fn homogeneous_degree(&self, view: GradingView) -> Option<i64> {
        let comps = self.homogeneous_components(view);
        if comps.len() == 1 {
            comps.keys().next().copied()
        } else {
            None
        }
    }
}
