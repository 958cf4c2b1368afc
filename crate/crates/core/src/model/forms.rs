//! Polynomial differential forms on `ℚⁿ` with `|α| = k + 1` for a k-form,
//! `α ∧_model β = (1/|β|) α ∧ dβ` and `α ◇ β = α ∧ β`.
//!
//! Basis forms are named like `u1^2.u2.du1.du3` (coefficient monomial, then
//! the sorted differentials); the constant function is `1`.

use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graded::{Generator, Sign};
use crate::model::{AlgebraModel, Vector};
use crate::scalar::Scalar;

pub const MAX_COORDS: usize = 8;

/// A monomial form `u^e du_I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormBasis {
    pub exps: Vec<u32>,
    /// Bit `i` set iff `du_{i+1}` occurs.
    pub mask: u32,
}

impl FormBasis {
    pub fn form_degree(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Shifted form grading `|α| = k + 1`.
    pub fn base_degree(&self) -> i32 {
        self.form_degree() as i32 + 1
    }

    pub fn name(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("u{}", i + 1)),
                _ => parts.push(format!("u{}^{e}", i + 1)),
            }
        }
        for i in 0..self.exps.len() {
            if self.mask >> i & 1 == 1 {
                parts.push(format!("du{}", i + 1));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(".")
        }
    }

    pub fn to_generator(&self) -> Generator {
        Generator::new(self.name(), self.base_degree())
    }

    pub fn parse(name: &str, n: usize) -> Result<FormBasis> {
        let bad = || Error::UnknownGenerator(name.to_string());
        let mut b = FormBasis {
            exps: vec![0; n],
            mask: 0,
        };
        if name != "1" {
            for tok in name.split('.') {
                let index = |s: &str| -> Result<usize> {
                    let k: usize = s.parse().map_err(|_| bad())?;
                    if k == 0 || k > n {
                        return Err(bad());
                    }
                    Ok(k - 1)
                };
                if let Some(rest) = tok.strip_prefix("du") {
                    b.mask |= 1 << index(rest)?;
                } else if let Some(rest) = tok.strip_prefix('u') {
                    let (k, e) = match rest.split_once('^') {
                        Some((k, e)) => (k, e.parse::<u32>().map_err(|_| bad())?),
                        None => (rest, 1),
                    };
                    b.exps[index(k)?] += e;
                } else {
                    return Err(bad());
                }
            }
        }
        // only canonical spellings name a basis form
        if b.name() != name {
            return Err(bad());
        }
        Ok(b)
    }

    /// Exterior product with its reordering sign, `None` if it vanishes.
    pub fn wedge(&self, other: &FormBasis) -> Option<(Sign, FormBasis)> {
        if self.mask & other.mask != 0 {
            return None;
        }
        // each dx_j of `other` passes the dx_i of `self` with i > j
        let crossings: u32 = (0..32)
            .filter(|j| other.mask >> j & 1 == 1)
            .map(|j| (self.mask >> (j + 1)).count_ones())
            .sum();
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Some((
            Sign::from_parity(crossings as i64),
            FormBasis {
                exps,
                mask: self.mask | other.mask,
            },
        ))
    }

    /// `d(u^e du_I) = Σ_j e_j u^{e−1_j} du_j ∧ du_I`.
    pub fn exterior_derivative(&self) -> Vec<(i64, FormBasis)> {
        let mut out = Vec::new();
        for j in 0..self.exps.len() {
            let e = self.exps[j];
            if e == 0 || self.mask >> j & 1 == 1 {
                continue;
            }
            let mut exps = self.exps.clone();
            exps[j] -= 1;
            let before = (self.mask & ((1 << j) - 1)).count_ones();
            let s = Sign::from_parity(before as i64).to_i64();
            out.push((
                s * e as i64,
                FormBasis {
                    exps,
                    mask: self.mask | 1 << j,
                },
            ));
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct FormsModel {
    n: usize,
    max_poly_degree: u32,
    with_differential: bool,
    drop_wedge_scale: bool,
    label: String,
}

impl FormsModel {
    pub fn new(n: usize, max_poly_degree: u32) -> Result<Self> {
        if n == 0 || n > MAX_COORDS {
            return Err(Error::arg(format!("forms model needs 1..={MAX_COORDS} coordinates")));
        }
        Ok(FormsModel {
            n,
            max_poly_degree,
            with_differential: false,
            drop_wedge_scale: false,
            label: format!("forms(n={n})"),
        })
    }

    /// Uses the exterior derivative as the model differential.
    pub fn with_differential(mut self, on: bool) -> Self {
        self.with_differential = on;
        self
    }

    /// Forgets the `1/|β|` factor in `∧` (mutation testing only).
    pub fn with_dropped_wedge_scale(mut self, on: bool) -> Self {
        self.drop_wedge_scale = on;
        self
    }

    pub fn n_coords(&self) -> usize {
        self.n
    }

    pub fn basis(&self, g: &Generator) -> Result<FormBasis> {
        FormBasis::parse(g.name(), self.n)
    }

    /// The exterior product `α ∧ β` of the underlying forms.
    pub fn exterior(&self, a: &Generator, b: &Generator) -> Result<Vector> {
        let (x, y) = (self.basis(a)?, self.basis(b)?);
        Ok(match x.wedge(&y) {
            Some((s, f)) => Vector::term(f.to_generator(), Scalar::from_sign(s)),
            None => Vector::zero(),
        })
    }

    /// The exterior derivative of a basis form.
    pub fn exterior_derivative(&self, a: &Generator) -> Result<Vector> {
        Ok(self
            .basis(a)?
            .exterior_derivative()
            .into_iter()
            .map(|(c, f)| (f.to_generator(), Scalar::from_int(c)))
            .collect())
    }

    fn random_basis(&self, rng: &mut ChaCha8Rng, form_degree: usize) -> FormBasis {
        let mut mask = 0u32;
        for i in sample(rng, self.n, form_degree) {
            mask |= 1 << i;
        }
        let mut exps = vec![0; self.n];
        let total = rng.gen_range(0..=self.max_poly_degree);
        for _ in 0..total {
            exps[rng.gen_range(0..self.n)] += 1;
        }
        FormBasis { exps, mask }
    }
}

impl AlgebraModel for FormsModel {
    fn label(&self) -> &str {
        &self.label
    }

    fn resolve(&self, name: &str) -> Result<Generator> {
        Ok(FormBasis::parse(name, self.n)?.to_generator())
    }

    fn wedge(&self, a: &Generator, b: &Generator) -> Result<Vector> {
        let x = self.basis(a)?;
        let y = self.basis(b)?;
        let scale = if self.drop_wedge_scale {
            Scalar::one()
        } else {
            Scalar::ratio(1, y.base_degree() as i64)
        };
        let mut out = Vector::zero();
        for (c, dy) in y.exterior_derivative() {
            if let Some((s, f)) = x.wedge(&dy) {
                out.add_term(f.to_generator(), scale.signed(s) * Scalar::from_int(c));
            }
        }
        Ok(out)
    }

    fn diamond(&self, a: &Generator, b: &Generator) -> Result<Vector> {
        self.exterior(a, b)
    }

    fn differential(&self, a: &Generator) -> Result<Vector> {
        if self.with_differential {
            self.exterior_derivative(a)
        } else {
            Ok(Vector::zero())
        }
    }

    fn has_differential(&self) -> bool {
        self.with_differential
    }

    fn sample_homogeneous(&self, rng: &mut ChaCha8Rng) -> Vector {
        loop {
            let k = rng.gen_range(0..=self.n);
            let terms = rng.gen_range(1..=3);
            let mut v = Vector::zero();
            for _ in 0..terms {
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-3..=3);
                }
                v.add_term(self.random_basis(rng, k).to_generator(), Scalar::from_int(c));
            }
            if !v.is_zero() {
                return v;
            }
        }
    }

    fn sample_letter(&self, rng: &mut ChaCha8Rng) -> Generator {
        // favour low form degree so that products rarely vanish
        let k = match rng.gen_range(0..6) {
            0..=2 => 0,
            3 | 4 => 1,
            _ => rng.gen_range(0..=self.n),
        };
        let mut b = self.random_basis(rng, k.min(self.n));
        if b.exps.iter().all(|&e| e == 0) && self.max_poly_degree > 0 {
            b.exps[rng.gen_range(0..self.n)] = 1;
        }
        b.to_generator()
    }
}

/// Renders a vector as `c * name + …`.
pub fn format_vector(v: &Vector) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (g, c)) in v.iter().enumerate() {
        if i > 0 {
            s.push_str(" + ");
        }
        let _ = write!(s, "{c} * {g}");
    }
    s
}
