use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graded::{Generator, GeneratorRegistry};
use crate::model::{AlgebraModel, Vector};
use crate::scalar::Scalar;

/// Abstract generators with assigned degrees and no products; only the
/// coproduct laws can run against it.
#[derive(Clone, Debug)]
pub struct FormalModel {
    registry: GeneratorRegistry,
    letters: Vec<Generator>,
}

impl FormalModel {
    pub fn new(registry: GeneratorRegistry) -> Self {
        let letters = registry.iter().cloned().collect();
        FormalModel { registry, letters }
    }

    /// Generators `g0, g1, …` with the given base degrees.
    pub fn with_degrees(degrees: &[i32]) -> Self {
        let mut r = GeneratorRegistry::new();
        for (i, &d) in degrees.iter().enumerate() {
            r.insert(&format!("g{i}"), d).expect("fresh names");
        }
        Self::new(r)
    }

    pub fn registry(&self) -> &GeneratorRegistry {
        &self.registry
    }

    fn unsupported(&self, op: &str) -> Error {
        Error::Unsupported {
            model: "formal".into(),
            op: op.into(),
        }
    }
}

impl AlgebraModel for FormalModel {
    fn label(&self) -> &str {
        "formal"
    }

    fn resolve(&self, name: &str) -> Result<Generator> {
        self.registry.resolve(name)
    }

    fn wedge(&self, _a: &Generator, _b: &Generator) -> Result<Vector> {
        Err(self.unsupported("wedge"))
    }

    fn diamond(&self, _a: &Generator, _b: &Generator) -> Result<Vector> {
        Err(self.unsupported("diamond"))
    }

    fn has_products(&self) -> bool {
        false
    }

    fn sample_homogeneous(&self, rng: &mut ChaCha8Rng) -> Vector {
        let g = self.sample_letter(rng);
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3..=3);
        }
        Vector::term(g, Scalar::from_int(c))
    }

    fn sample_letter(&self, rng: &mut ChaCha8Rng) -> Generator {
        assert!(!self.letters.is_empty(), "formal model has no generators");
        self.letters[rng.gen_range(0..self.letters.len())].clone()
    }
}
