//! Fixtures shared by the benches in `benches/`.

use pregerst_core::sampling::{instance_rng, pair_element};
use pregerst_core::{Element, FormsModel, Generator, GradingView, Scalar, Word};

/// `x0 ⊗ … ⊗ x_{n−1}` over letters of alternating parity.
pub fn letters(n: usize) -> Word {
    Word::Tensor((0..n).map(|i| Generator::new(format!("x{i}"), 1 + (i % 2) as i32)).collect())
}

/// `P(x0⊗…⊗x_{head−1}; y-words)` with `tail` factors of length `factor_len`.
pub fn pair(head: usize, tail: usize, factor_len: usize) -> Element {
    let h = letters(head);
    let t = (0..tail)
        .map(|k| {
            Word::Tensor(
                (0..factor_len)
                    .map(|i| Generator::new(format!("y{k}_{i}"), 2 + ((i + k) % 2) as i32))
                    .collect(),
            )
        })
        .collect();
    let mut e = Element::zero();
    e.add_word(Word::Pair(Box::new(h), t), &Scalar::one(), GradingView::Shift2);
    e
}

/// Seeded forms-model pair inputs of the size used by the Q suites.
pub fn forms_pairs(model: &FormsModel, count: u64) -> Vec<Element> {
    (0..count)
        .map(|i| pair_element(model, &mut instance_rng(42, i), 2, 2, 2))
        .filter(|e| !e.is_zero())
        .collect()
}
