//! Enveloping codifferentials built from a model's `∧`, `◇` and `d`.
//!
//! * `D` on `𝓗 = T⁺(𝓖[1])` (tensor words, `Shift1`), the Z∞ envelope of `∧`;
//! * the preL∞ envelope of `(𝓖[1], ◇)` on pair words of generators and the
//!   L∞ envelope of its bracket on symmetric words of generators (`Shift2`);
//! * `R₂`, the pre-Lie extension of `◇` to `𝓗` (`Shift1`);
//! * `m`, `R` and `Q = m + R` on `𝓗[1] ⊗ S(𝓗[1])` (pair words of tensor
//!   words, `Shift2`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coalgebra::{Coalgebra, CoproductId, DEFAULT_MAX_TERMS};
use crate::error::{Error, Result};
use crate::graded::{reorder_sign, Generator, GradingView, Sign};
use crate::model::{bracket_gen, AlgebraModel, Vector};
use crate::mutation::{self, Mutation};
use crate::scalar::Scalar;
use crate::words::ops::shuffle_letters;
use crate::words::{Element, TensorPowerElement, Word};

const H_VIEW: GradingView = GradingView::Shift1;
const PAIR_VIEW: GradingView = GradingView::Shift2;

fn parity(e: i64) -> Sign {
    Sign::from_parity(e)
}

/// Which part of `Q = m + R` to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QPart {
    M,
    R,
    Total,
}

impl fmt::Display for QPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QPart::M => "m",
            QPart::R => "R",
            QPart::Total => "Q",
        })
    }
}

impl FromStr for QPart {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(QPart::M),
            "R" | "r" => Ok(QPart::R),
            "Q" | "q" => Ok(QPart::Total),
            _ => Err(Error::arg(format!("unknown part of Q `{s}`"))),
        }
    }
}

fn tensor_letters<'a>(w: &'a Word, op: &str) -> Result<&'a [Generator]> {
    w.letters()
        .ok_or_else(|| Error::schema(format!("{op} expects tensor words, got {w}")))
}

fn gen_of<'a>(w: &'a Word, op: &str) -> Result<&'a Generator> {
    match w {
        Word::Gen(g) => Ok(g),
        _ => Err(Error::schema(format!("{op} expects generator leaves, got {w}"))),
    }
}

fn pair_parts<'a>(w: &'a Word, op: &str) -> Result<(&'a Word, &'a [Word])> {
    match w {
        Word::Pair(h, t) => Ok((h, t)),
        _ => Err(Error::schema(format!("{op} expects pair words, got {w}"))),
    }
}

fn sym_factors<'a>(w: &'a Word, op: &str) -> Result<&'a [Word]> {
    w.factors()
        .ok_or_else(|| Error::schema(format!("{op} expects symmetric words, got {w}")))
}

/// `order` puts the listed indices first, then the rest in their order.
fn front_order(n: usize, first: &[usize]) -> Vec<usize> {
    let mut order = first.to_vec();
    order.extend((0..n).filter(|i| !first.contains(i)));
    order
}

fn others(fs: &[Word], skip: &[usize]) -> Vec<Word> {
    fs.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, f)| f.clone())
        .collect()
}

fn pair(head: Word, tail: Vec<Word>) -> Word {
    Word::Pair(Box::new(head), tail)
}

/// Everything the envelope maps need: the model, an optional mutation and
/// the term cap on intermediates.
#[derive(Clone, Copy)]
pub struct EnvelopeContext<'a> {
    pub model: &'a dyn AlgebraModel,
    pub mutation: Option<Mutation>,
    pub max_terms: usize,
}

impl<'a> EnvelopeContext<'a> {
    pub fn new(model: &'a dyn AlgebraModel) -> Self {
        EnvelopeContext {
            model,
            mutation: None,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }

    pub fn with_mutation(mut self, mutation: Option<Mutation>) -> Self {
        self.mutation = mutation;
        self
    }

    /// The coalgebra settings matching this context.
    pub fn coalgebra(&self) -> Coalgebra {
        Coalgebra {
            mutation: self.mutation,
            max_terms: self.max_terms,
        }
    }

    fn mutated(&self, m: Mutation) -> bool {
        mutation::is(self.mutation, m)
    }

    fn require_products(&self, op: &str) -> Result<()> {
        if self.model.has_products() {
            Ok(())
        } else {
            Err(Error::Unsupported {
                model: self.model.label().into(),
                op: op.into(),
            })
        }
    }

    fn cap(&self, e: &Element) -> Result<()> {
        if e.len() > self.max_terms {
            Err(Error::TermCap {
                terms: e.len(),
                cap: self.max_terms,
            })
        } else {
            Ok(())
        }
    }

    fn linear(&self, e: &Element, f: impl Fn(&Word) -> Result<Element>) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e {
            out.add_scaled(&f(w)?, c);
            self.cap(&out)?;
        }
        Ok(out)
    }

    fn bilinear(
        &self,
        a: &Element,
        b: &Element,
        f: impl Fn(&Word, &Word) -> Result<Element>,
    ) -> Result<Element> {
        let mut out = Element::zero();
        for (x, c) in a {
            for (y, d) in b {
                out.add_scaled(&f(x, y)?, &(c * d));
                self.cap(&out)?;
            }
        }
        Ok(out)
    }

    // ----- Z∞ envelope -------------------------------------------------

    /// `D` on a tensor word: `Q₁ = d` at every slot with the prefix sign
    /// `(−1)^{Σ_{i<k} xᵢ}`, `Q₂(x₁⊗x₂) = (−1)^{x₁} x₁∧x₂` at the head, and
    /// `Q₂∘μ₂` at every interior adjacent pair.
    pub fn z_infinity_d_word(&self, w: &Word) -> Result<Element> {
        self.require_products("z_infinity_D")?;
        let ls = tensor_letters(w, "z_infinity_D")?;
        let n = ls.len();
        let deg: Vec<i64> = ls.iter().map(|g| g.degree(H_VIEW)).collect();
        let mut out = Element::zero();
        let mut put = |k: usize, width: usize, v: &Vector, s: Sign| {
            for (g, c) in v {
                let mut word = ls[..k].to_vec();
                word.push(g.clone());
                word.extend_from_slice(&ls[k + width..]);
                out.add_signed(Word::Tensor(word), c, s);
            }
        };

        if self.model.has_differential() {
            let mut prefix = 0;
            for k in 0..n {
                put(k, 1, &self.model.differential(&ls[k])?, parity(prefix));
                prefix += deg[k];
            }
        }
        if n >= 2 {
            put(0, 2, &self.model.wedge(&ls[0], &ls[1])?, parity(deg[0]));
        }
        for k in 1..n.saturating_sub(1) {
            let prefix = if self.mutated(Mutation::ZinfPrefix) {
                Sign::Plus
            } else {
                parity(deg[..k].iter().sum())
            };
            let (x, y) = (&ls[k], &ls[k + 1]);
            let mut q = self.model.wedge(x, y)?.signed(parity(deg[k]));
            if !self.mutated(Mutation::ZinfInteriorMu) {
                let swapped = self.model.wedge(y, x)?;
                q.add_scaled(&swapped, &-Scalar::from_sign(parity(deg[k] * deg[k + 1] + deg[k + 1])));
            }
            put(k, 2, &q, prefix);
        }
        Ok(out)
    }

    pub fn z_infinity_d(&self, e: &Element) -> Result<Element> {
        self.linear(e, |w| self.z_infinity_d_word(w))
    }

    // ----- preL∞ and L∞ envelopes of 𝓖 ---------------------------------

    /// The preL∞ envelope of `(𝓖[1], ◇, d)` on a pair word of generators
    /// `x₀ ⊗ x₁…xₙ`, with `Q₂(x⊗y) = (−1)^x x◇y`.
    pub fn prelie_envelope_q_word(&self, w: &Word) -> Result<Element> {
        self.require_products("prelie_envelope_Q")?;
        let (h, t) = pair_parts(w, "prelie_envelope_Q")?;
        let x0 = gen_of(h, "prelie_envelope_Q")?;
        let xs: Vec<&Generator> = t
            .iter()
            .map(|f| gen_of(f, "prelie_envelope_Q"))
            .collect::<Result<_>>()?;
        let n = xs.len();
        let d0 = x0.degree(PAIR_VIEW);
        let deg: Vec<i64> = xs.iter().map(|g| g.degree(PAIR_VIEW)).collect();
        let m = self.model;
        let mut out = Element::zero();
        let q2 = |a: &Generator, b: &Generator| -> Result<Vector> {
            Ok(m.diamond(a, b)?.signed(parity(a.degree(PAIR_VIEW))))
        };

        if m.has_differential() {
            for (g, c) in &m.differential(x0)? {
                out.add_word(pair(Word::Gen(g.clone()), t.to_vec()), c, PAIR_VIEW);
            }
            let mut prefix = 0;
            for k in 0..n {
                let s = parity(d0 + prefix);
                for (g, c) in &m.differential(xs[k])? {
                    let mut tail = t.to_vec();
                    tail[k] = Word::Gen(g.clone());
                    out.add_word(pair(h.clone(), tail), &c.signed(s), PAIR_VIEW);
                }
                prefix += deg[k];
            }
        }
        for (i, &xi) in xs.iter().enumerate() {
            let s = reorder_sign(&deg, &front_order(n, &[i]));
            for (g, c) in &q2(x0, xi)? {
                out.add_word(pair(Word::Gen(g.clone()), others(t, &[i])), &c.signed(s), PAIR_VIEW);
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let s = parity(d0) * reorder_sign(&deg, &front_order(n, &[i, j]));
                for (g, c) in &q2(xs[i], xs[j])? {
                    let mut tail = vec![Word::Gen(g.clone())];
                    tail.extend(others(t, &[i, j]));
                    out.add_word(pair(h.clone(), tail), &c.signed(s), PAIR_VIEW);
                }
            }
        }
        Ok(out)
    }

    pub fn prelie_envelope_q(&self, e: &Element) -> Result<Element> {
        self.linear(e, |w| self.prelie_envelope_q_word(w))
    }

    /// The L∞ envelope of `(𝓖[1], [,], d)` on a symmetric word of
    /// generators, with `Q₂(x.y) = (−1)^x [x,y]`.
    pub fn l_infinity_q_word(&self, w: &Word) -> Result<Element> {
        self.require_products("l_infinity_Q")?;
        let fs = sym_factors(w, "l_infinity_Q")?;
        let xs: Vec<&Generator> = fs
            .iter()
            .map(|f| gen_of(f, "l_infinity_Q"))
            .collect::<Result<_>>()?;
        let n = xs.len();
        let deg: Vec<i64> = xs.iter().map(|g| g.degree(PAIR_VIEW)).collect();
        let m = self.model;
        let mut out = Element::zero();
        let mut put = |v: &Vector, rest: Vec<Word>, s: Sign| {
            for (g, c) in v {
                let mut f = vec![Word::Gen(g.clone())];
                f.extend(rest.iter().cloned());
                out.add_word(Word::Sym(f), &c.signed(s), PAIR_VIEW);
            }
        };
        if m.has_differential() {
            for (i, &xi) in xs.iter().enumerate() {
                let s = reorder_sign(&deg, &front_order(n, &[i]));
                put(&m.differential(xi)?, others(fs, &[i]), s);
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let s = parity(deg[i]) * reorder_sign(&deg, &front_order(n, &[i, j]));
                put(&bracket_gen(m, xs[i], xs[j])?, others(fs, &[i, j]), s);
            }
        }
        Ok(out)
    }

    pub fn l_infinity_q(&self, e: &Element) -> Result<Element> {
        self.linear(e, |w| self.l_infinity_q_word(w))
    }

    // ----- R₂ -------------------------------------------------------------

    fn r2_bracket(&self, x: &Generator, y: &Generator) -> Result<Vector> {
        if self.mutated(Mutation::R2BracketSignFlipped) {
            let mut out = self.model.diamond(x, y)?;
            let s = parity(x.degree(H_VIEW) * y.degree(H_VIEW));
            out.add_scaled(&self.model.diamond(y, x)?, &Scalar::from_sign(s));
            Ok(out)
        } else {
            bracket_gen(self.model, x, y)
        }
    }

    /// `R₂(α₁…α_p, β₁…β_q)`: the head term `(α₁◇β₁) ⊗ sh(α₂…, β₂…)` plus, for
    /// `2 ≤ k ≤ p`, `α₁…α_{k−1} ⊗ [α_k, β₁] ⊗ sh(α_{k+1}…, β₂…)`, each with
    /// the sign of moving `β₁` into place.
    pub fn r2_words(&self, x: &Word, y: &Word) -> Result<Element> {
        self.require_products("r2")?;
        let a = tensor_letters(x, "r2")?;
        let b = tensor_letters(y, "r2")?;
        let p = a.len();
        let deg_a: Vec<i64> = a.iter().map(|g| g.degree(H_VIEW)).collect();
        let b1 = b[0].degree(H_VIEW);
        let signed = !self.mutated(Mutation::ShuffleUnsigned);
        let mut out = Element::zero();
        let mut put = |prefix: &[Generator], v: &Vector, rest: &[Generator], s: Sign| {
            for (t, word) in shuffle_letters(rest, &b[1..], H_VIEW, signed) {
                for (g, c) in v {
                    let mut w = prefix.to_vec();
                    w.push(g.clone());
                    w.extend(word.iter().cloned());
                    out.add_signed(Word::Tensor(w), c, s * t);
                }
            }
        };

        let s = parity(deg_a[1..].iter().sum::<i64>() * b1);
        put(&[], &self.model.diamond(&a[0], &b[0])?, &a[1..], s);
        if !self.mutated(Mutation::R2BracketDropped) {
            for k in 1..p {
                let s = parity(deg_a[k + 1..].iter().sum::<i64>() * b1);
                put(&a[..k], &self.r2_bracket(&a[k], &b[0])?, &a[k + 1..], s);
            }
        }
        Ok(out)
    }

    pub fn r2(&self, x: &Element, y: &Element) -> Result<Element> {
        self.bilinear(x, y, |a, b| self.r2_words(a, b))
    }

    /// `R′₂(X,Y) = (−1)^{x'} R₂(X,Y)`.
    pub fn r2_prime_words(&self, x: &Word, y: &Word) -> Result<Element> {
        Ok(self.r2_words(x, y)?.signed(parity(x.degree(PAIR_VIEW))))
    }

    /// `ℓ₂(X,Y) = R′₂(X,Y) + (−1)^{x'y'} R′₂(Y,X)`.
    pub fn ell2_words(&self, x: &Word, y: &Word) -> Result<Element> {
        let mut out = self.r2_prime_words(x, y)?;
        let s = parity(x.degree(PAIR_VIEW) * y.degree(PAIR_VIEW));
        out.add_scaled(&self.r2_prime_words(y, x)?, &Scalar::from_sign(s));
        Ok(out)
    }

    // ----- m, R and Q on 𝓗[1] ⊗ S(𝓗[1]) --------------------------------

    /// `m(X₀ ⊗ X₁…Xₙ) = D(X₀) ⊗ X₁…Xₙ + (−1)^{x₀'} Σⱼ ε X₀ ⊗ D(Xⱼ).X₁…X̂ⱼ…Xₙ`.
    pub fn m_word(&self, w: &Word) -> Result<Element> {
        let (h, t) = pair_parts(w, "m")?;
        let n = t.len();
        let deg: Vec<i64> = t.iter().map(|f| f.degree(PAIR_VIEW)).collect();
        let mut out = Element::zero();
        for (dh, c) in &self.z_infinity_d_word(h)? {
            out.add_word(pair(dh.clone(), t.to_vec()), c, PAIR_VIEW);
        }
        let s0 = if self.mutated(Mutation::MTailPrefix) {
            Sign::Plus
        } else {
            parity(h.degree(PAIR_VIEW))
        };
        for j in 0..n {
            let s = s0 * reorder_sign(&deg, &front_order(n, &[j]));
            for (dx, c) in &self.z_infinity_d_word(&t[j])? {
                let mut tail = vec![dx.clone()];
                tail.extend(others(t, &[j]));
                out.add_word(pair(h.clone(), tail), &c.signed(s), PAIR_VIEW);
            }
        }
        Ok(out)
    }

    /// `R(X₀ ⊗ X₁…Xₙ) = Σᵢ ε R′₂(X₀,Xᵢ) ⊗ X₁…X̂ᵢ…Xₙ
    ///   + (−1)^{x₀'} Σ_{i<j} ε X₀ ⊗ ℓ₂(Xᵢ,Xⱼ).X₁…X̂ᵢⱼ…Xₙ`.
    pub fn r_word(&self, w: &Word) -> Result<Element> {
        let (h, t) = pair_parts(w, "R")?;
        let n = t.len();
        let deg: Vec<i64> = t.iter().map(|f| f.degree(PAIR_VIEW)).collect();
        let mut out = Element::zero();
        for i in 0..n {
            let s = reorder_sign(&deg, &front_order(n, &[i]));
            for (r, c) in &self.r2_prime_words(h, &t[i])? {
                out.add_word(pair(r.clone(), others(t, &[i])), &c.signed(s), PAIR_VIEW);
            }
        }
        let s0 = parity(h.degree(PAIR_VIEW));
        for i in 0..n {
            for j in i + 1..n {
                let s = s0 * reorder_sign(&deg, &front_order(n, &[i, j]));
                for (l, c) in &self.ell2_words(&t[i], &t[j])? {
                    let mut tail = vec![l.clone()];
                    tail.extend(others(t, &[i, j]));
                    out.add_word(pair(h.clone(), tail), &c.signed(s), PAIR_VIEW);
                }
            }
        }
        Ok(out)
    }

    pub fn q_part_word(&self, part: QPart, w: &Word) -> Result<Element> {
        match part {
            QPart::M => self.m_word(w),
            QPart::R => self.r_word(w),
            QPart::Total => {
                let mut out = self.m_word(w)?;
                out += &self.r_word(w)?;
                Ok(out)
            }
        }
    }

    pub fn q_part(&self, part: QPart, e: &Element) -> Result<Element> {
        self.linear(e, |w| self.q_part_word(part, w))
    }

    /// `Q = m + R`.
    pub fn q_total(&self, e: &Element) -> Result<Element> {
        self.q_part(QPart::Total, e)
    }

    // ----- checkers -----------------------------------------------------

    pub fn d_square(&self, e: &Element) -> Result<Element> {
        self.z_infinity_d(&self.z_infinity_d(e)?)
    }

    pub fn prelie_envelope_q_square(&self, e: &Element) -> Result<Element> {
        self.prelie_envelope_q(&self.prelie_envelope_q(e)?)
    }

    pub fn l_infinity_q_square(&self, e: &Element) -> Result<Element> {
        self.l_infinity_q(&self.l_infinity_q(e)?)
    }

    pub fn q_square(&self, part: QPart, e: &Element) -> Result<Element> {
        self.q_part(part, &self.q_part(part, e)?)
    }

    /// The coderivation defect of a degree-one map against a coproduct:
    /// `C∘Q − (Q⊗id + id⊗Q)∘C` for the even coproducts (δ with `D`,
    /// Δ_perm with `part`), and `κ∘Q + (Q⊗id + id⊗Q)∘κ` for κ.
    /// `(id⊗Q)(a⊠b)` carries `(−1)^{deg a}` in the coproduct's view.
    pub fn check_coderivation(
        &self,
        id: CoproductId,
        part: QPart,
        input: &Element,
    ) -> Result<TensorPowerElement> {
        let c = self.coalgebra();
        let view = id.view();
        let q = |w: &Word| match id {
            CoproductId::DeltaLeibniz => self.z_infinity_d_word(w),
            _ => self.q_part_word(part, w),
        };
        match id {
            CoproductId::DeltaLeibniz | CoproductId::DeltaPerm | CoproductId::Kappa => {}
            _ => {
                return Err(Error::arg(format!(
                    "no codifferential is defined on the domain of {id:?}"
                )))
            }
        }
        let image = self.linear(input, q)?;
        let lhs = c.coproduct(id, &image)?;
        let split = c.coproduct(id, input)?;
        let mut rhs = split.map_leg(0, 1, view, q)?;
        rhs.add(&split.map_leg(1, 1, view, q)?);
        let mut defect = lhs;
        if id.parity() == 0 {
            defect.sub(&rhs);
        } else {
            defect.add(&rhs);
        }
        Ok(defect)
    }

    /// The pre-Lie relation of `R₂`:
    /// `R₂(R₂(X,Y),Z) − R₂(X,R₂(Y,Z)) − (−1)^{yz}(R₂(R₂(X,Z),Y) − R₂(X,R₂(Z,Y)))`.
    pub fn prelie_defect(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (dy, y) in y.homogeneous_components(H_VIEW) {
            for (dz, z) in z.homogeneous_components(H_VIEW) {
                let mut yz = self.r2(&self.r2(x, &y)?, &z)?;
                yz -= &self.r2(x, &self.r2(&y, &z)?)?;
                let mut zy = self.r2(&self.r2(x, &z)?, &y)?;
                zy -= &self.r2(x, &self.r2(&z, &y)?)?;
                out += &yz;
                out.add_scaled(&zy, &-Scalar::from_sign(parity(dy * dz)));
            }
        }
        Ok(out)
    }

    /// `D∘R₂(X,Y) − R₂(D X, Y) − (−1)^x R₂(X, D Y)`.
    pub fn derivation_defect(&self, x: &Element, y: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (dx, x) in x.homogeneous_components(H_VIEW) {
            out += &self.z_infinity_d(&self.r2(&x, y)?)?;
            out -= &self.r2(&self.z_infinity_d(&x)?, y)?;
            out.add_scaled(&self.r2(&x, &self.z_infinity_d(y)?)?, &-Scalar::from_sign(parity(dx)));
        }
        Ok(out)
    }
}
