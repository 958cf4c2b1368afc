//! Single-operation evaluation on parsed elements, for inspection.

use std::fmt;
use std::str::FromStr;

use crate::coalgebra::Coalgebra;
use crate::envelopes::{EnvelopeContext, QPart};
use crate::error::{Error, Result};
use crate::graded::GradingView;
use crate::model::AlgebraModel;
use crate::words::ops::{embed_element, mu_element, shuffle_elements, sym_product};
use crate::words::text::{format_element, parse_element};
use crate::words::{Element, Word};

/// Operations reachable from `eval`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Normalize,
    /// `μ`, optionally with an arity that every word must match.
    Mu(Option<usize>),
    Shuffle,
    SymProduct,
    Embed,
    Delta,
    DeltaCocom,
    DeltaPerm,
    KappaPrime,
    Kappa,
    Cobracket,
    ZinfD,
    PrelinfQ,
    LinfQ,
    R2,
    R2Prime,
    Ell2,
    Q(QPart),
}

impl Op {
    pub const NAMES: [&'static str; 21] = [
        "normalize",
        "mu",
        "mu<n>",
        "shuffle",
        "sym-product",
        "embed",
        "delta",
        "delta-cocom",
        "delta-perm",
        "kappa-prime",
        "kappa",
        "cobracket",
        "zinf-d",
        "prelinf-q",
        "linf-q",
        "r2",
        "r2-prime",
        "ell2",
        "m",
        "r",
        "q",
    ];

    /// Whether the op reads a second operand.
    pub fn binary(self) -> bool {
        matches!(self, Op::Shuffle | Op::SymProduct | Op::R2 | Op::R2Prime | Op::Ell2)
    }

    /// The grading view the op signs in when none is given.
    fn default_view(self) -> GradingView {
        match self {
            Op::Mu(_) | Op::Shuffle | Op::Delta | Op::Cobracket | Op::ZinfD | Op::R2 | Op::R2Prime | Op::Ell2 => {
                GradingView::Shift1
            }
            _ => GradingView::Shift2,
        }
    }
}

impl FromStr for Op {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "normalize" => Op::Normalize,
            "mu" => Op::Mu(None),
            "shuffle" => Op::Shuffle,
            "sym-product" => Op::SymProduct,
            "embed" => Op::Embed,
            "delta" => Op::Delta,
            "delta-cocom" => Op::DeltaCocom,
            "delta-perm" => Op::DeltaPerm,
            "kappa-prime" => Op::KappaPrime,
            "kappa" => Op::Kappa,
            "cobracket" => Op::Cobracket,
            "zinf-d" => Op::ZinfD,
            "prelinf-q" => Op::PrelinfQ,
            "linf-q" => Op::LinfQ,
            "r2" => Op::R2,
            "r2-prime" => Op::R2Prime,
            "ell2" => Op::Ell2,
            "m" => Op::Q(QPart::M),
            "r" => Op::Q(QPart::R),
            "q" => Op::Q(QPart::Total),
            _ => match s.strip_prefix("mu").and_then(|n| n.parse().ok()) {
                Some(n) => Op::Mu(Some(n)),
                None => return Err(Error::Argument(format!("unknown op `{s}`"))),
            },
        })
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Mu(Some(n)) => write!(f, "mu{n}"),
            other => write!(f, "{other:?}"),
        }
    }
}

pub fn parse_view(s: &str) -> Result<GradingView> {
    match s {
        "base" => Ok(GradingView::Base),
        "shift1" => Ok(GradingView::Shift1),
        "shift2" => Ok(GradingView::Shift2),
        _ => Err(Error::Argument(format!("unknown view `{s}` (base|shift1|shift2)"))),
    }
}

/// Parses an operand against the model's generators and normalizes it in
/// `view`.
pub fn parse_operand(model: &dyn AlgebraModel, src: &str, view: GradingView) -> Result<Element> {
    parse_element(src, &|n| model.resolve(n))?.normalize(view)
}

fn check_mu_arity(e: &Element, n: usize) -> Result<()> {
    for w in e.keys() {
        match w.tensor_len() {
            Some(k) if k == n => {}
            _ => return Err(Error::Argument(format!("mu{n} applied to {w}"))),
        }
    }
    Ok(())
}

/// Evaluates `op` and renders the normalized result canonically.
pub fn eval_expr(
    model: &dyn AlgebraModel,
    op: Op,
    expr: &str,
    expr2: Option<&str>,
    view: Option<GradingView>,
) -> Result<String> {
    let view = view.unwrap_or(op.default_view());
    let x = parse_operand(model, expr, view)?;
    let y = match (op.binary(), expr2) {
        (true, Some(s)) => parse_operand(model, s, view)?,
        (true, None) => return Err(Error::Argument(format!("{op} needs a second operand"))),
        (false, Some(_)) => return Err(Error::Argument(format!("{op} takes one operand"))),
        (false, None) => Element::zero(),
    };
    let ctx = EnvelopeContext::new(model);
    let c = Coalgebra::default();
    let element = |e: Element| format_element(&e);
    Ok(match op {
        Op::Normalize => element(x),
        Op::Mu(n) => {
            if let Some(n) = n {
                check_mu_arity(&x, n)?;
            }
            element(mu_element(&x, view)?)
        }
        Op::Shuffle => element(shuffle_elements(&x, &y, view)?),
        Op::SymProduct => element(sym_product(&x, &y, view)?),
        Op::Embed => element(embed_element(&x, view)?),
        Op::Delta => c.delta_leibniz(&x)?.to_string(),
        Op::DeltaCocom => c.delta_cocom(&x, view)?.to_string(),
        Op::DeltaPerm => c.delta_perm(&x, view)?.to_string(),
        Op::KappaPrime => c.kappa_prime(&x)?.to_string(),
        Op::Kappa => c.kappa(&x)?.to_string(),
        Op::Cobracket => {
            let mut out = crate::words::TensorPowerElement::zero(2);
            for (w, k) in &x {
                out.add_scaled(&c.cobracket_word(w)?, k);
            }
            out.to_string()
        }
        Op::ZinfD => element(ctx.z_infinity_d(&x)?),
        Op::PrelinfQ => element(ctx.prelie_envelope_q(&x)?),
        Op::LinfQ => element(ctx.l_infinity_q(&x)?),
        Op::R2 => element(ctx.r2(&x, &y)?),
        Op::R2Prime | Op::Ell2 => {
            let mut out = Element::zero();
            for (a, ca) in &x {
                for (b, cb) in &y {
                    let w = if op == Op::R2Prime {
                        ctx.r2_prime_words(a, b)?
                    } else {
                        ctx.ell2_words(a, b)?
                    };
                    out.add_scaled(&w, &(ca * cb));
                }
            }
            element(out)
        }
        Op::Q(part) => element(ctx.q_part(part, &x)?),
    })
}

/// Convenience for tests and callers holding an already built word.
pub fn eval_word(model: &dyn AlgebraModel, op: Op, w: &Word) -> Result<String> {
    eval_expr(model, op, &format!("1/1 * {w}"), None, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GeneratorRegistry;
    use crate::model::{FormalModel, FormsModel};

    fn formal(gens: &[(&str, i32)]) -> FormalModel {
        let mut r = GeneratorRegistry::new();
        for (n, d) in gens {
            r.insert(n, *d).unwrap();
        }
        FormalModel::new(r)
    }

    fn op(s: &str) -> Op {
        s.parse().unwrap()
    }

    #[test]
    fn documented_examples() {
        let m = formal(&[("a", 1), ("b", 1)]);
        let out = eval_expr(&m, op("mu2"), "1/1 * T(a,b)", None, Some(GradingView::Base)).unwrap();
        assert_eq!(out, "1/1 * T(a,b) + 1/1 * T(b,a)");
        assert_eq!(eval_expr(&m, op("delta"), "1/1 * T(a)", None, None).unwrap(), "0");
        let m = formal(&[("a", 2), ("b", 2)]);
        let out = eval_expr(&m, op("kappa"), "1/1 * P(T(a,b); S())", None, None).unwrap();
        assert_eq!(out, "1/1 * P(T(a); S()) # P(T(b); S()) + 1/1 * P(T(b); S()) # P(T(a); S())");
    }

    #[test]
    fn operand_checks() {
        let m = formal(&[("a", 1), ("b", 1)]);
        assert!(eval_expr(&m, op("mu3"), "1/1 * T(a,b)", None, None).is_err());
        assert!(eval_expr(&m, op("shuffle"), "1/1 * T(a)", None, None).is_err());
        assert!(eval_expr(&m, op("delta"), "1/1 * T(a)", Some("1/1 * T(b)"), None).is_err());
        assert!(matches!(
            eval_expr(&m, op("delta"), "1/1 * T(a,zz)", None, None),
            Err(Error::Parse { pos: 10, .. })
        ));
        assert!("frobnicate".parse::<Op>().is_err());
    }

    #[test]
    fn products_need_the_forms_model() {
        let m = formal(&[("a", 1)]);
        assert!(eval_expr(&m, op("r2"), "1/1 * T(a)", Some("1/1 * T(a)"), None).is_err());
        let f = FormsModel::new(2, 2).unwrap();
        let out = eval_expr(&f, op("r2"), "1/1 * T(u1)", Some("1/1 * T(u2)"), None).unwrap();
        assert_eq!(out, "1/1 * T(u1.u2)");
        let out = eval_expr(&f, op("shuffle"), "1/1 * T(u1)", Some("1/1 * T(u2)"), None).unwrap();
        assert_eq!(out, "1/1 * T(u1,u2) + 1/1 * T(u2,u1)");
    }
}
