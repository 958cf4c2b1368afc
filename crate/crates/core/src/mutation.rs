//! Deliberate single-point breakages used to show that each checker can fail.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mutation {
    /// `μ₂` replaced by the identity (and the recursion built on it).
    #[serde(rename = "mu2-identity")]
    Mu2Identity,
    /// Shuffle products lose their Koszul signs.
    #[serde(rename = "shuffle-unsigned")]
    ShuffleUnsigned,
    /// The bracket sum of `R₂` is dropped.
    #[serde(rename = "r2-bracket-dropped")]
    R2BracketDropped,
    /// `[x,y] = x◇y + (−1)^{xy} y◇x` inside `R₂`.
    #[serde(rename = "r2-bracket-sign")]
    R2BracketSignFlipped,
    /// The `(−1)^{x₀'}` prefix of `m`'s tail term is dropped.
    #[serde(rename = "m-tail-prefix")]
    MTailPrefix,
    /// The `(−1)^{u₀'}` factor in `κ`'s head split is dropped.
    #[serde(rename = "kappa-head-sign")]
    KappaHeadSign,
    /// The `(−1)^{u'}` factor inside `κ'` is dropped.
    #[serde(rename = "kappa-prime-sign")]
    KappaPrimeSign,
    /// The forms model's `∧` forgets the `1/|β|` factor.
    #[serde(rename = "wedge-scale-dropped")]
    WedgeScaleDropped,
    /// The `(−1)^{Σ_{i<k} xᵢ}` prefix of the Z∞ codifferential is dropped.
    #[serde(rename = "zinf-prefix")]
    ZinfPrefix,
    /// The interior `Q₂∘μ₂` terms of the Z∞ codifferential use `Q₂` alone.
    #[serde(rename = "zinf-interior-mu")]
    ZinfInteriorMu,
}

impl Mutation {
    pub const ALL: [Mutation; 10] = [
        Mutation::Mu2Identity,
        Mutation::ShuffleUnsigned,
        Mutation::R2BracketDropped,
        Mutation::R2BracketSignFlipped,
        Mutation::MTailPrefix,
        Mutation::KappaHeadSign,
        Mutation::KappaPrimeSign,
        Mutation::WedgeScaleDropped,
        Mutation::ZinfPrefix,
        Mutation::ZinfInteriorMu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::Mu2Identity => "mu2-identity",
            Mutation::ShuffleUnsigned => "shuffle-unsigned",
            Mutation::R2BracketDropped => "r2-bracket-dropped",
            Mutation::R2BracketSignFlipped => "r2-bracket-sign",
            Mutation::MTailPrefix => "m-tail-prefix",
            Mutation::KappaHeadSign => "kappa-head-sign",
            Mutation::KappaPrimeSign => "kappa-prime-sign",
            Mutation::WedgeScaleDropped => "wedge-scale-dropped",
            Mutation::ZinfPrefix => "zinf-prefix",
            Mutation::ZinfInteriorMu => "zinf-interior-mu",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown mutation `{s}`")))
    }
}

/// Helper for `Option<Mutation>` fields.
pub(crate) fn is(active: Option<Mutation>, m: Mutation) -> bool {
    active == Some(m)
}
