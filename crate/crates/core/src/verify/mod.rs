//! Named verification suites over seeded instance batches.
//!
//! A suite expands to a list of instances; each instance yields one or more
//! checks whose defect must vanish. Instances are evaluated in parallel and
//! reported in index order, so a report depends only on its [`SuiteConfig`].

mod report;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coalgebra::{CoproductId, LawId, DEFAULT_MAX_TERMS};
use crate::envelopes::{EnvelopeContext, QPart};
use crate::error::{Error, Result};
use crate::graded::{Generator, GeneratorRegistry, GradingView};
use crate::model::{check_axiom, format_vector, AlgebraModel, AxiomId, FormalModel, FormsModel};
use crate::mutation::Mutation;
use crate::sampling::{
    gen_pair_element, gen_sym_element, instance_rng, pair_element, sym_element, tensor_element,
    tensor_word,
};
use crate::words::ops::{mu_letters, shuffle_letters};
use crate::words::text::format_element;
use crate::words::{Element, Word};

pub use report::{CheckRecord, ReportFormat, Summary, Verdict, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteId {
    ZinbielAxioms,
    PrelieAxioms,
    Compat,
    Aguiar,
    GerstDerived,
    MuShuffleLemma,
    LeibnizCoalgebra,
    PermCoalgebra,
    KappaCojacobi,
    KappaCompat,
    R2Prelie,
    R2Derivation,
    ZinfSquare,
    PrelinfSquare,
    LinfSquare,
    QCoderivDelta,
    QCoderivKappa,
    QSquare,
    MutationSanity,
}

impl SuiteId {
    pub const ALL: [SuiteId; 19] = [
        SuiteId::ZinbielAxioms,
        SuiteId::PrelieAxioms,
        SuiteId::Compat,
        SuiteId::Aguiar,
        SuiteId::GerstDerived,
        SuiteId::MuShuffleLemma,
        SuiteId::LeibnizCoalgebra,
        SuiteId::PermCoalgebra,
        SuiteId::KappaCojacobi,
        SuiteId::KappaCompat,
        SuiteId::R2Prelie,
        SuiteId::R2Derivation,
        SuiteId::ZinfSquare,
        SuiteId::PrelinfSquare,
        SuiteId::LinfSquare,
        SuiteId::QCoderivDelta,
        SuiteId::QCoderivKappa,
        SuiteId::QSquare,
        SuiteId::MutationSanity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::ZinbielAxioms => "zinbiel-axioms",
            SuiteId::PrelieAxioms => "prelie-axioms",
            SuiteId::Compat => "compat",
            SuiteId::Aguiar => "aguiar",
            SuiteId::GerstDerived => "gerst-derived",
            SuiteId::MuShuffleLemma => "mu-shuffle-lemma",
            SuiteId::LeibnizCoalgebra => "leibniz-coalgebra",
            SuiteId::PermCoalgebra => "perm-coalgebra",
            SuiteId::KappaCojacobi => "kappa-cojacobi",
            SuiteId::KappaCompat => "kappa-compat",
            SuiteId::R2Prelie => "r2-prelie",
            SuiteId::R2Derivation => "r2-derivation",
            SuiteId::ZinfSquare => "zinf-square",
            SuiteId::PrelinfSquare => "prelinf-square",
            SuiteId::LinfSquare => "linf-square",
            SuiteId::QCoderivDelta => "q-coderiv-delta",
            SuiteId::QCoderivKappa => "q-coderiv-kappa",
            SuiteId::QSquare => "q-square",
            SuiteId::MutationSanity => "mutation-sanity",
        }
    }

    /// Whether the suite needs `∧`/`◇` (and so the forms model).
    pub fn needs_products(self) -> bool {
        !matches!(
            self,
            SuiteId::MuShuffleLemma
                | SuiteId::LeibnizCoalgebra
                | SuiteId::PermCoalgebra
                | SuiteId::KappaCojacobi
                | SuiteId::KappaCompat
                | SuiteId::MutationSanity
        )
    }

    /// `(max_tensor_len, max_tail_factors, max_factor_len, samples)`.
    fn default_bounds(self) -> (usize, usize, usize, usize) {
        match self {
            SuiteId::ZinbielAxioms
            | SuiteId::PrelieAxioms
            | SuiteId::Compat
            | SuiteId::Aguiar
            | SuiteId::GerstDerived => (1, 1, 1, 200),
            SuiteId::MuShuffleLemma => (6, 1, 1, 100),
            SuiteId::LeibnizCoalgebra => (5, 1, 1, 100),
            SuiteId::PermCoalgebra | SuiteId::KappaCojacobi | SuiteId::KappaCompat => (3, 2, 2, 100),
            SuiteId::R2Prelie | SuiteId::R2Derivation => (3, 2, 2, 100),
            SuiteId::ZinfSquare => (4, 1, 1, 50),
            SuiteId::PrelinfSquare | SuiteId::LinfSquare => (4, 4, 1, 50),
            SuiteId::QCoderivDelta | SuiteId::QCoderivKappa | SuiteId::QSquare => (2, 2, 2, 50),
            SuiteId::MutationSanity => (3, 2, 2, 40),
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Forms,
    Formal,
}

impl FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forms" => Ok(ModelKind::Forms),
            "formal" => Ok(ModelKind::Formal),
            _ => Err(Error::Argument(format!("unknown model `{s}` (forms|formal)"))),
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Forms => "forms",
            ModelKind::Formal => "formal",
        })
    }
}

/// Generators of the formal model when none are given.
pub const DEFAULT_FORMAL_DEGREES: [i32; 6] = [0, 1, 2, 3, 1, 2];

/// Everything that determines a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: SuiteId,
    pub model: ModelKind,
    pub n_coords: usize,
    pub max_poly_degree: u32,
    /// Forms model with the exterior derivative as its differential.
    pub differential: bool,
    /// Longest tensor word (the head, for pair inputs).
    pub max_tensor_len: usize,
    pub max_tail_factors: usize,
    /// Longest tensor word inside a symmetric tail.
    pub max_factor_len: usize,
    pub samples: usize,
    pub seed: u64,
    pub max_terms: usize,
    /// Formal generators `(name, base degree)`; empty means the default set.
    pub generators: Vec<(String, i32)>,
    pub mutation: Option<Mutation>,
    pub report_format: ReportFormat,
}

impl SuiteConfig {
    /// The defaults for a suite: forms model when it needs products, the
    /// formal model otherwise.
    pub fn new(suite: SuiteId) -> Self {
        let (len, tail, factor, samples) = suite.default_bounds();
        SuiteConfig {
            suite,
            model: if suite.needs_products() {
                ModelKind::Forms
            } else {
                ModelKind::Formal
            },
            n_coords: 3,
            max_poly_degree: 3,
            differential: true,
            max_tensor_len: len,
            max_tail_factors: tail,
            max_factor_len: factor,
            samples,
            seed: 42,
            max_terms: DEFAULT_MAX_TERMS,
            generators: Vec::new(),
            mutation: None,
            report_format: ReportFormat::Structured,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("n-coords", self.n_coords),
            ("max-tensor-len", self.max_tensor_len),
            ("max-tail-factors", self.max_tail_factors),
            ("max-factor-len", self.max_factor_len),
            ("samples", self.samples),
            ("max-terms", self.max_terms),
        ];
        if let Some((name, _)) = positive.iter().find(|(_, v)| *v == 0) {
            return Err(Error::Argument(format!("{name} must be positive")));
        }
        if self.suite.needs_products() && self.model == ModelKind::Formal {
            return Err(Error::Unsupported {
                model: "formal".into(),
                op: format!("suite {} (needs products)", self.suite),
            });
        }
        Ok(())
    }

    pub fn build_model(&self) -> Result<Box<dyn AlgebraModel>> {
        Ok(match self.model {
            ModelKind::Forms => Box::new(
                FormsModel::new(self.n_coords, self.max_poly_degree)?
                    .with_differential(self.differential)
                    .with_dropped_wedge_scale(self.mutation == Some(Mutation::WedgeScaleDropped)),
            ),
            ModelKind::Formal => Box::new(self.formal_model()?),
        })
    }

    fn formal_model(&self) -> Result<FormalModel> {
        if self.generators.is_empty() {
            return Ok(FormalModel::with_degrees(&DEFAULT_FORMAL_DEGREES));
        }
        let mut r = GeneratorRegistry::new();
        for (name, d) in &self.generators {
            r.insert(name, *d)?;
        }
        Ok(FormalModel::new(r))
    }

    fn degree_set(&self) -> Vec<i32> {
        let mut ds: Vec<i32> = if self.generators.is_empty() {
            DEFAULT_FORMAL_DEGREES.to_vec()
        } else {
            self.generators.iter().map(|(_, d)| *d).collect()
        };
        ds.sort_unstable();
        ds.dedup();
        ds
    }
}

/// The mutations exercised by `mutation-sanity` and the suite expected to
/// notice each one. `R2BracketDropped` is absent: the bracket of the forms
/// model vanishes identically, so that mutant is equivalent to the original.
pub const MUTATION_DETECTORS: [(Mutation, SuiteId); 9] = [
    (Mutation::Mu2Identity, SuiteId::LeibnizCoalgebra),
    (Mutation::ShuffleUnsigned, SuiteId::MuShuffleLemma),
    (Mutation::R2BracketSignFlipped, SuiteId::R2Derivation),
    (Mutation::MTailPrefix, SuiteId::QSquare),
    (Mutation::KappaHeadSign, SuiteId::KappaCompat),
    (Mutation::KappaPrimeSign, SuiteId::KappaCompat),
    (Mutation::WedgeScaleDropped, SuiteId::ZinbielAxioms),
    (Mutation::ZinfPrefix, SuiteId::ZinfSquare),
    (Mutation::ZinfInteriorMu, SuiteId::ZinfSquare),
];

/// One check of one instance before it becomes a record.
struct Outcome {
    check: String,
    inputs: Vec<String>,
    result: Result<Option<String>>,
}

impl Outcome {
    fn element(check: impl Into<String>, inputs: Vec<String>, r: Result<Element>) -> Self {
        Outcome {
            check: check.into(),
            inputs,
            result: r.map(|e| (!e.is_zero()).then(|| format_element(&e))),
        }
    }

    fn tensor(
        check: impl Into<String>,
        inputs: Vec<String>,
        r: Result<crate::words::TensorPowerElement>,
    ) -> Self {
        Outcome {
            check: check.into(),
            inputs,
            result: r.map(|t| (!t.is_zero()).then(|| t.to_string())),
        }
    }
}

/// Re-draws until the sampler returns a nonzero element (pair and symmetric
/// words vanish when an odd factor repeats).
fn nonzero(rng: &mut ChaCha8Rng, mut f: impl FnMut(&mut ChaCha8Rng) -> Element) -> Element {
    for _ in 0..64 {
        let e = f(rng);
        if !e.is_zero() {
            return e;
        }
    }
    Element::zero()
}

/// Distinct letters `x0, x1, …` carrying a degree pattern.
fn pattern_letters(degrees: &[i32]) -> Vec<Generator> {
    degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| Generator::new(format!("x{i}"), d))
        .collect()
}

/// Every degree pattern of length `n` over `set`.
fn patterns(set: &[i32], n: usize) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                set.iter().map(move |&d| {
                    let mut q = p.clone();
                    q.push(d);
                    q
                })
            })
            .collect();
    }
    out
}

enum Cases {
    Sampled(usize),
    /// `(left, right)` tensor words for the shuffle lemma.
    Shuffles(Vec<(Word, Word)>),
    Tensors(Vec<Word>),
}

impl Cases {
    fn len(&self) -> usize {
        match self {
            Cases::Sampled(n) => *n,
            Cases::Shuffles(v) => v.len(),
            Cases::Tensors(v) => v.len(),
        }
    }
}

struct Runner<'a> {
    cfg: &'a SuiteConfig,
    model: &'a dyn AlgebraModel,
    ctx: EnvelopeContext<'a>,
    cases: Cases,
}

const TENSOR_VIEW: GradingView = GradingView::Shift1;

impl<'a> Runner<'a> {
    fn new(cfg: &'a SuiteConfig, model: &'a dyn AlgebraModel) -> Self {
        let ctx = EnvelopeContext {
            model,
            mutation: cfg.mutation,
            max_terms: cfg.max_terms,
        };
        let exhaustive = cfg.model == ModelKind::Formal;
        let cases = match cfg.suite {
            SuiteId::MuShuffleLemma if exhaustive => {
                let mut v = Vec::new();
                for n in 2..=cfg.max_tensor_len {
                    for pat in patterns(&cfg.degree_set(), n) {
                        let ls = pattern_letters(&pat);
                        for p in 1..n {
                            v.push((Word::Tensor(ls[..p].to_vec()), Word::Tensor(ls[p..].to_vec())));
                        }
                    }
                }
                Cases::Shuffles(v)
            }
            SuiteId::LeibnizCoalgebra if exhaustive => Cases::Tensors(
                (1..=cfg.max_tensor_len)
                    .flat_map(|n| patterns(&cfg.degree_set(), n))
                    .map(|pat| Word::Tensor(pattern_letters(&pat)))
                    .collect(),
            ),
            _ => Cases::Sampled(cfg.samples),
        };
        Runner {
            cfg,
            model,
            ctx,
            cases,
        }
    }

    fn axioms(&self, rng: &mut ChaCha8Rng, axioms: &[AxiomId]) -> Vec<Outcome> {
        let args: Vec<_> = (0..3).map(|_| self.model.sample_homogeneous(rng)).collect();
        axioms
            .iter()
            .map(|&a| {
                let used = &args[..a.arity()];
                Outcome {
                    check: a.name().into(),
                    inputs: used.iter().map(format_vector).collect(),
                    result: check_axiom(self.model, a, used)
                        .map(|v| (!v.is_zero()).then(|| format_vector(&v))),
                }
            })
            .collect()
    }

    fn laws(&self, input: &Element, laws: &[LawId]) -> Vec<Outcome> {
        let c = self.ctx.coalgebra();
        let inputs = vec![format_element(input)];
        laws.iter()
            .map(|&l| Outcome::tensor(l.name(), inputs.clone(), c.check_law(l, input)))
            .collect()
    }

    fn pair_input(&self, rng: &mut ChaCha8Rng) -> Element {
        let c = self.cfg;
        nonzero(rng, |r| {
            pair_element(self.model, r, c.max_tensor_len, c.max_tail_factors, c.max_factor_len)
        })
    }

    fn shuffle_lemma(&self, x: &Word, y: &Word) -> Outcome {
        let signed = self.cfg.mutation != Some(Mutation::ShuffleUnsigned);
        let (Some(l), Some(r)) = (x.letters(), y.letters()) else {
            unreachable!("shuffle lemma inputs are tensor words")
        };
        let mut out = Element::zero();
        for (s, w) in shuffle_letters(l, r, TENSOR_VIEW, signed) {
            for (m, c) in mu_letters(&w, TENSOR_VIEW, self.cfg.mutation == Some(Mutation::Mu2Identity)) {
                out.add_term(Word::Tensor(m), c.signed(s));
            }
        }
        Outcome::element("MU_SH", vec![x.to_string(), y.to_string()], Ok(out))
    }

    fn instance(&self, index: usize) -> Vec<Outcome> {
        match &self.cases {
            Cases::Shuffles(v) => return vec![self.shuffle_lemma(&v[index].0, &v[index].1)],
            Cases::Tensors(v) => {
                return self.laws(&Element::basis(v[index].clone()), &[LawId::LeibnizCoalg, LawId::CojacobiDelta])
            }
            Cases::Sampled(_) => {}
        }
        let mut rng = instance_rng(self.cfg.seed, index as u64);
        let rng = &mut rng;
        let cfg = self.cfg;
        let ctx = &self.ctx;
        match cfg.suite {
            SuiteId::ZinbielAxioms => self.axioms(rng, &[AxiomId::Zinbiel]),
            SuiteId::PrelieAxioms => self.axioms(rng, &[AxiomId::Prelie]),
            SuiteId::Compat => self.axioms(rng, &[AxiomId::CompatA, AxiomId::CompatB, AxiomId::CompatC]),
            SuiteId::Aguiar => self.axioms(rng, &[AxiomId::Aguiar1, AxiomId::Aguiar2]),
            SuiteId::GerstDerived => {
                let mut ax = vec![AxiomId::Derived1, AxiomId::Derived2, AxiomId::LeibnizGerst];
                if self.model.has_differential() {
                    ax.extend([AxiomId::DDerivWedge, AxiomId::DDerivDiamond]);
                }
                self.axioms(rng, &ax)
            }
            SuiteId::MuShuffleLemma => {
                let n = rng.gen_range(2..=cfg.max_tensor_len.max(2));
                let p = rng.gen_range(1..n);
                let x = crate::sampling::tensor_word_of_len(self.model, rng, p);
                let y = crate::sampling::tensor_word_of_len(self.model, rng, n - p);
                vec![self.shuffle_lemma(&x, &y)]
            }
            SuiteId::LeibnizCoalgebra => {
                let w = tensor_word(self.model, rng, cfg.max_tensor_len);
                self.laws(&Element::basis(w), &[LawId::LeibnizCoalg, LawId::CojacobiDelta])
            }
            SuiteId::PermCoalgebra => {
                let p = self.pair_input(rng);
                let s = nonzero(rng, |r| {
                    sym_element(self.model, r, cfg.max_tail_factors.max(1) + 1, cfg.max_factor_len)
                });
                let mut out = self.laws(&p, &[LawId::PermCoalg]);
                out.extend(self.laws(&s, &[LawId::Coassoc, LawId::Cocomm]));
                out
            }
            SuiteId::KappaCojacobi => {
                let p = self.pair_input(rng);
                let s = nonzero(rng, |r| {
                    sym_element(self.model, r, cfg.max_tail_factors, cfg.max_tensor_len)
                });
                let mut out = self.laws(&s, &[LawId::KappaCosym]);
                out.extend(self.laws(&p, &[LawId::KappaCojacobi]));
                out
            }
            SuiteId::KappaCompat => {
                let p = self.pair_input(rng);
                self.laws(&p, &[LawId::Compat1, LawId::Compat2, LawId::Compat3])
            }
            SuiteId::R2Prelie => {
                let x = tensor_element(self.model, rng, cfg.max_tensor_len);
                let y = tensor_element(self.model, rng, cfg.max_factor_len);
                let z = tensor_element(self.model, rng, cfg.max_factor_len);
                let inputs = [&x, &y, &z].map(format_element).to_vec();
                vec![Outcome::element("R2_PRELIE", inputs, ctx.prelie_defect(&x, &y, &z))]
            }
            SuiteId::R2Derivation => {
                let x = tensor_element(self.model, rng, cfg.max_tensor_len);
                let y = tensor_element(self.model, rng, cfg.max_factor_len);
                let inputs = [&x, &y].map(format_element).to_vec();
                vec![Outcome::element("R2_DERIVATION", inputs, ctx.derivation_defect(&x, &y))]
            }
            SuiteId::ZinfSquare => {
                let x = tensor_element(self.model, rng, cfg.max_tensor_len);
                let inputs = vec![format_element(&x)];
                vec![
                    Outcome::element("D_SQUARE", inputs.clone(), ctx.d_square(&x)),
                    Outcome::tensor(
                        "D_CODERIVATION",
                        inputs,
                        ctx.check_coderivation(CoproductId::DeltaLeibniz, QPart::Total, &x),
                    ),
                ]
            }
            SuiteId::PrelinfSquare => {
                let x = nonzero(rng, |r| gen_pair_element(self.model, r, cfg.max_tail_factors));
                let inputs = vec![format_element(&x)];
                vec![Outcome::element("PRELINF_Q_SQUARE", inputs, ctx.prelie_envelope_q_square(&x))]
            }
            SuiteId::LinfSquare => {
                let x = nonzero(rng, |r| gen_sym_element(self.model, r, cfg.max_tail_factors));
                let inputs = vec![format_element(&x)];
                vec![Outcome::element("LINF_Q_SQUARE", inputs, ctx.l_infinity_q_square(&x))]
            }
            SuiteId::QCoderivDelta | SuiteId::QCoderivKappa => {
                let (id, name) = if cfg.suite == SuiteId::QCoderivDelta {
                    (CoproductId::DeltaPerm, "DELTA")
                } else {
                    (CoproductId::Kappa, "KAPPA")
                };
                let x = self.pair_input(rng);
                let inputs = vec![format_element(&x)];
                [QPart::M, QPart::R, QPart::Total]
                    .into_iter()
                    .map(|part| {
                        Outcome::tensor(
                            format!("{name}_CODERIVATION_{}", part.to_string().to_uppercase()),
                            inputs.clone(),
                            ctx.check_coderivation(id, part, &x),
                        )
                    })
                    .collect()
            }
            SuiteId::QSquare => {
                let x = self.pair_input(rng);
                let inputs = vec![format_element(&x)];
                [QPart::M, QPart::R, QPart::Total]
                    .into_iter()
                    .map(|part| {
                        Outcome::element(
                            format!("{}_SQUARE", part.to_string().to_uppercase()),
                            inputs.clone(),
                            ctx.q_square(part, &x),
                        )
                    })
                    .collect()
            }
            SuiteId::MutationSanity => unreachable!("handled by run_mutation_sanity"),
        }
    }

    fn records(&self) -> Vec<CheckRecord> {
        (0..self.cases.len())
            .into_par_iter()
            .map(|i| {
                self.instance(i)
                    .into_iter()
                    .map(|o| CheckRecord::from_outcome(i, o.check, o.inputs, o.result))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }
}

/// Runs a suite; the report is a pure function of the configuration.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let records = if cfg.suite == SuiteId::MutationSanity {
        run_mutation_sanity(cfg)?
    } else {
        let model = cfg.build_model()?;
        Runner::new(cfg, model.as_ref()).records()
    };
    Ok(VerificationReport::new(cfg.clone(), records))
}

/// The configuration a mutation's detector runs under.
pub fn detector_config(cfg: &SuiteConfig, mutation: Mutation, detector: SuiteId) -> SuiteConfig {
    let mut sub = SuiteConfig::new(detector);
    sub.seed = cfg.seed;
    sub.samples = cfg.samples;
    sub.n_coords = cfg.n_coords;
    sub.max_poly_degree = cfg.max_poly_degree;
    sub.differential = cfg.differential;
    sub.max_terms = cfg.max_terms;
    sub.generators = cfg.generators.clone();
    sub.mutation = Some(mutation);
    sub
}

/// One record per mutation: `pass` iff its detector finds a nonzero defect.
fn run_mutation_sanity(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for (i, (mutation, detector)) in MUTATION_DETECTORS.into_iter().enumerate() {
        let sub = detector_config(cfg, mutation, detector);
        sub.validate()?;
        let model = sub.build_model()?;
        let records = Runner::new(&sub, model.as_ref()).records();
        let check = format!("{mutation}@{detector}");
        let found = records.iter().find(|r| r.verdict == Verdict::Fail);
        let aborted = records.iter().find(|r| r.verdict == Verdict::Abort);
        let rec = match (found, aborted) {
            (Some(r), _) => CheckRecord {
                index: i,
                check,
                verdict: Verdict::Pass,
                input: r.input.clone(),
                defect: format!("{}: {}", r.check, r.defect),
            },
            (None, Some(r)) => CheckRecord {
                index: i,
                check,
                verdict: Verdict::Abort,
                input: r.input.clone(),
                defect: r.defect.clone(),
            },
            (None, None) => CheckRecord {
                index: i,
                check,
                verdict: Verdict::Fail,
                input: Vec::new(),
                defect: "0".into(),
            },
        };
        out.push(rec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in SuiteId::ALL {
            assert_eq!(s.name().parse::<SuiteId>().unwrap(), s);
        }
        assert!("no-such-suite".parse::<SuiteId>().is_err());
    }

    #[test]
    fn product_suites_reject_the_formal_model() {
        let mut c = SuiteConfig::new(SuiteId::QSquare);
        c.model = ModelKind::Formal;
        assert!(matches!(run_suite(&c), Err(Error::Unsupported { .. })));
        let mut c = SuiteConfig::new(SuiteId::KappaCompat);
        c.model = ModelKind::Forms;
        c.samples = 3;
        assert!(run_suite(&c).unwrap().passed());
    }

    #[test]
    fn zero_bounds_are_rejected() {
        let mut c = SuiteConfig::new(SuiteId::ZinfSquare);
        c.samples = 0;
        assert!(run_suite(&c).is_err());
    }

    #[test]
    fn term_cap_aborts_instead_of_truncating() {
        let mut c = SuiteConfig::new(SuiteId::QSquare);
        c.samples = 5;
        c.max_terms = 1;
        let r = run_suite(&c).unwrap();
        assert_eq!(r.summary.verdict, Verdict::Abort);
        assert_eq!(r.exit_code(), 3);
        assert!(r.records.iter().any(|x| x.defect.contains("term cap")));
    }

    #[test]
    fn structured_lines_have_a_stable_shape() {
        let mut c = SuiteConfig::new(SuiteId::ZinfSquare);
        c.samples = 2;
        let r = run_suite(&c).unwrap();
        let text = r.to_structured();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), r.records.len() + 1);
        assert!(lines[0].starts_with(r#"{"record":"check","suite":"zinf-square","index":0,"check":"D_SQUARE","verdict":"pass","input":["#));
        assert!(lines.last().unwrap().starts_with(r#"{"record":"summary","suite":"zinf-square","config":{"suite":"zinf-square""#));
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn failing_suite_reports_first_failure() {
        let mut c = SuiteConfig::new(SuiteId::Aguiar);
        c.samples = 40;
        let r = run_suite(&c).unwrap();
        assert_eq!(r.exit_code(), 1);
        let first = r.summary.first_failure.as_ref().unwrap();
        assert!(first.check.starts_with("AGUIAR"));
        assert!(r.to_text().contains("FAIL #"));
    }

    #[test]
    fn exhaustive_cases_count() {
        let mut c = SuiteConfig::new(SuiteId::MuShuffleLemma);
        c.generators = vec![("a".into(), 0), ("b".into(), 1)];
        c.max_tensor_len = 3;
        // Σ_{n=2}^{3} 2ⁿ·(n−1) = 4 + 16
        assert_eq!(run_suite(&c).unwrap().records.len(), 20);
    }
}
