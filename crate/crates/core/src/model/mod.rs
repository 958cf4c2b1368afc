//! Concrete graded algebras supplying `∧`, `◇` and `d`.

mod axioms;
mod formal;
mod forms;

use rand_chacha::ChaCha8Rng;

pub use axioms::{check_axiom, dot, homogeneous_parts, AxiomId};
pub use formal::FormalModel;
pub use forms::{format_vector, FormBasis, FormsModel, MAX_COORDS};

use crate::error::Result;
use crate::graded::{Generator, Sign};
use crate::scalar::Scalar;
use crate::words::LinComb;

/// A vector of the algebra: a combination of basis generators.
pub type Vector = LinComb<Generator>;

/// A graded algebra with a Zinbiel product `∧` (degree 0), a pre-Lie product
/// `◇` (degree −1) and a differential `d` (degree +1, zero by default), all
/// given on basis generators and extended bilinearly.
pub trait AlgebraModel: Send + Sync {
    fn label(&self) -> &str;

    /// Looks up a basis generator by name.
    fn resolve(&self, name: &str) -> Result<Generator>;

    fn wedge(&self, a: &Generator, b: &Generator) -> Result<Vector>;

    fn diamond(&self, a: &Generator, b: &Generator) -> Result<Vector>;

    fn differential(&self, _a: &Generator) -> Result<Vector> {
        Ok(Vector::zero())
    }

    fn has_differential(&self) -> bool {
        false
    }

    /// Whether `∧` and `◇` are defined at all.
    fn has_products(&self) -> bool {
        true
    }

    /// A random homogeneous vector with at most three terms and nonzero
    /// integer coefficients in `[-3, 3]`.
    fn sample_homogeneous(&self, rng: &mut ChaCha8Rng) -> Vector;

    /// A random basis generator (used as a letter of tensor words).
    fn sample_letter(&self, rng: &mut ChaCha8Rng) -> Generator;
}

/// Bilinear extension of a basis-level product.
pub fn extend_bilinear(
    a: &Vector,
    b: &Vector,
    f: impl Fn(&Generator, &Generator) -> Result<Vector>,
) -> Result<Vector> {
    let mut out = Vector::zero();
    for (x, c) in a {
        for (y, d) in b {
            out.add_scaled(&f(x, y)?, &(c * d));
        }
    }
    Ok(out)
}

pub fn wedge(m: &dyn AlgebraModel, a: &Vector, b: &Vector) -> Result<Vector> {
    extend_bilinear(a, b, |x, y| m.wedge(x, y))
}

pub fn diamond(m: &dyn AlgebraModel, a: &Vector, b: &Vector) -> Result<Vector> {
    extend_bilinear(a, b, |x, y| m.diamond(x, y))
}

pub fn differential(m: &dyn AlgebraModel, a: &Vector) -> Result<Vector> {
    a.flat_map(|x| m.differential(x))
}

/// `[x,y] = x◇y − (−1)^{(|x|−1)(|y|−1)} y◇x` on basis generators.
pub fn bracket_gen(m: &dyn AlgebraModel, x: &Generator, y: &Generator) -> Result<Vector> {
    let mut out = m.diamond(x, y)?;
    let s = Sign::from_parity((x.base_degree() as i64 - 1) * (y.base_degree() as i64 - 1));
    out.add_scaled(&m.diamond(y, x)?, &-Scalar::from_sign(s));
    Ok(out)
}

pub fn bracket(m: &dyn AlgebraModel, a: &Vector, b: &Vector) -> Result<Vector> {
    extend_bilinear(a, b, |x, y| bracket_gen(m, x, y))
}

/// Base degree of a homogeneous vector (`None` for zero or mixed vectors).
pub fn vector_degree(v: &Vector) -> Option<i32> {
    let mut it = v.keys().map(|g| g.base_degree());
    let first = it.next()?;
    it.all(|d| d == first).then_some(first)
}
