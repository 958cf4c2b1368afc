//! Deterministic random inputs: one ChaCha stream per `(seed, instance)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graded::GradingView;
use crate::model::AlgebraModel;
use crate::scalar::Scalar;
use crate::words::{Element, Word};

/// The generator for instance `index` of a run seeded with `seed`; streams
/// are independent so instances can be evaluated in any order.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn coefficient(rng: &mut ChaCha8Rng) -> Scalar {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-3..=3);
    }
    Scalar::from_int(c)
}

/// A tensor word of `len` sampled letters.
pub fn tensor_word_of_len(model: &dyn AlgebraModel, rng: &mut ChaCha8Rng, len: usize) -> Word {
    Word::Tensor((0..len).map(|_| model.sample_letter(rng)).collect())
}

/// A tensor word whose length is uniform in `1..=max_len`.
pub fn tensor_word(model: &dyn AlgebraModel, rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len.max(1));
    tensor_word_of_len(model, rng, len)
}

/// `c · w` for a sampled tensor word.
pub fn tensor_element(model: &dyn AlgebraModel, rng: &mut ChaCha8Rng, max_len: usize) -> Element {
    let w = tensor_word(model, rng, max_len);
    Element::term(w, coefficient(rng))
}

/// A pair word `X₀ ⊗ X₁…Xₙ` of tensor words with the given bounds; the
/// element is normalized (and may vanish when an odd factor repeats).
pub fn pair_element(
    model: &dyn AlgebraModel,
    rng: &mut ChaCha8Rng,
    max_head: usize,
    max_factors: usize,
    max_factor_len: usize,
) -> Element {
    let head = tensor_word(model, rng, max_head);
    let n = rng.gen_range(0..=max_factors);
    let tail: Vec<Word> = (0..n).map(|_| tensor_word(model, rng, max_factor_len)).collect();
    let mut e = Element::zero();
    e.add_word(Word::Pair(Box::new(head), tail), &coefficient(rng), GradingView::Shift2);
    e
}

/// A symmetric word of `1..=max_factors` tensor words.
pub fn sym_element(
    model: &dyn AlgebraModel,
    rng: &mut ChaCha8Rng,
    max_factors: usize,
    max_factor_len: usize,
) -> Element {
    let n = rng.gen_range(1..=max_factors.max(1));
    let fs: Vec<Word> = (0..n).map(|_| tensor_word(model, rng, max_factor_len)).collect();
    let mut e = Element::zero();
    e.add_word(Word::Sym(fs), &coefficient(rng), GradingView::Shift2);
    e
}

/// A pair word of generators `x₀ ⊗ x₁…xₙ`, `n ≤ max_factors`.
pub fn gen_pair_element(model: &dyn AlgebraModel, rng: &mut ChaCha8Rng, max_factors: usize) -> Element {
    let head = Word::Gen(model.sample_letter(rng));
    let n = rng.gen_range(0..=max_factors);
    let tail: Vec<Word> = (0..n).map(|_| Word::Gen(model.sample_letter(rng))).collect();
    let mut e = Element::zero();
    e.add_word(Word::Pair(Box::new(head), tail), &coefficient(rng), GradingView::Shift2);
    e
}

/// A symmetric word of `1..=max_factors` generators.
pub fn gen_sym_element(model: &dyn AlgebraModel, rng: &mut ChaCha8Rng, max_factors: usize) -> Element {
    let n = rng.gen_range(1..=max_factors.max(1));
    let fs: Vec<Word> = (0..n).map(|_| Word::Gen(model.sample_letter(rng))).collect();
    let mut e = Element::zero();
    e.add_word(Word::Sym(fs), &coefficient(rng), GradingView::Shift2);
    e
}
