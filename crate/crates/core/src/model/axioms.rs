use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::Sign;
use crate::model::{bracket, diamond, differential, wedge, AlgebraModel, Vector};
use crate::scalar::Scalar;

/// The pre-Gerstenhaber identities, each written as `lhs − rhs` in base
/// degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AxiomId {
    Zinbiel,
    Prelie,
    CompatA,
    CompatB,
    CompatC,
    Derived1,
    Derived2,
    LeibnizGerst,
    Aguiar1,
    Aguiar2,
    /// `d` is a derivation of `∧`.
    DDerivWedge,
    /// `d` is a derivation of `◇` (of degree 1 on the shift).
    DDerivDiamond,
}

impl AxiomId {
    pub const ALL: [AxiomId; 12] = [
        AxiomId::Zinbiel,
        AxiomId::Prelie,
        AxiomId::CompatA,
        AxiomId::CompatB,
        AxiomId::CompatC,
        AxiomId::Derived1,
        AxiomId::Derived2,
        AxiomId::LeibnizGerst,
        AxiomId::Aguiar1,
        AxiomId::Aguiar2,
        AxiomId::DDerivWedge,
        AxiomId::DDerivDiamond,
    ];

    /// The ten identities of the algebra itself (no differential).
    pub const ALGEBRA: [AxiomId; 10] = [
        AxiomId::Zinbiel,
        AxiomId::Prelie,
        AxiomId::CompatA,
        AxiomId::CompatB,
        AxiomId::CompatC,
        AxiomId::Derived1,
        AxiomId::Derived2,
        AxiomId::LeibnizGerst,
        AxiomId::Aguiar1,
        AxiomId::Aguiar2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Zinbiel => "ZINBIEL",
            AxiomId::Prelie => "PRELIE",
            AxiomId::CompatA => "COMPAT_A",
            AxiomId::CompatB => "COMPAT_B",
            AxiomId::CompatC => "COMPAT_C",
            AxiomId::Derived1 => "DERIVED_1",
            AxiomId::Derived2 => "DERIVED_2",
            AxiomId::LeibnizGerst => "LEIBNIZ_GERST",
            AxiomId::Aguiar1 => "AGUIAR_1",
            AxiomId::Aguiar2 => "AGUIAR_2",
            AxiomId::DDerivWedge => "D_DERIV_WEDGE",
            AxiomId::DDerivDiamond => "D_DERIV_DIAMOND",
        }
    }

    /// Number of arguments.
    pub fn arity(self) -> usize {
        match self {
            AxiomId::DDerivWedge | AxiomId::DDerivDiamond => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::arg(format!("unknown axiom `{s}`")))
    }
}

/// Splits a vector into its homogeneous components by base degree.
pub fn homogeneous_parts(v: &Vector) -> Vec<(i64, Vector)> {
    let mut parts: Vec<(i64, Vector)> = Vec::new();
    for (g, c) in v {
        let d = g.base_degree() as i64;
        match parts.iter_mut().find(|(e, _)| *e == d) {
            Some((_, p)) => p.add_term(g.clone(), c.clone()),
            None => parts.push((d, Vector::term(g.clone(), c.clone()))),
        }
    }
    parts
}

fn sign(e: i64) -> Scalar {
    Scalar::from_sign(Sign::from_parity(e))
}

/// `α·β = α∧β + (−1)^{|α||β|} β∧α`.
pub fn dot(m: &dyn AlgebraModel, a: &Vector, b: &Vector) -> Result<Vector> {
    let mut out = Vector::zero();
    for (da, x) in homogeneous_parts(a) {
        for (db, y) in homogeneous_parts(b) {
            out += &wedge(m, &x, &y)?;
            out.add_scaled(&wedge(m, &y, &x)?, &sign(da * db));
        }
    }
    Ok(out)
}

/// The defect of `axiom` on homogeneous arguments of base degrees `deg`.
fn defect_homogeneous(
    m: &dyn AlgebraModel,
    axiom: AxiomId,
    v: &[&Vector],
    deg: &[i64],
) -> Result<Vector> {
    let w = |a: &Vector, b: &Vector| wedge(m, a, b);
    let dm = |a: &Vector, b: &Vector| diamond(m, a, b);
    let br = |a: &Vector, b: &Vector| bracket(m, a, b);
    let mut out = Vector::zero();
    match axiom {
        AxiomId::Zinbiel => {
            let (x, y, z) = (v[0], v[1], v[2]);
            let (b, c) = (deg[1], deg[2]);
            out += &w(&w(x, y)?, z)?;
            out -= &w(x, &w(y, z)?)?;
            out.add_scaled(&w(x, &w(z, y)?)?, &-sign(b * c));
        }
        AxiomId::Prelie => {
            let (x, y, z) = (v[0], v[1], v[2]);
            let (b, c) = (deg[1] - 1, deg[2] - 1);
            let mut assoc_yz = dm(&dm(x, y)?, z)?;
            assoc_yz -= &dm(x, &dm(y, z)?)?;
            let mut assoc_zy = dm(&dm(x, z)?, y)?;
            assoc_zy -= &dm(x, &dm(z, y)?)?;
            out += &assoc_yz;
            out.add_scaled(&assoc_zy, &-sign(b * c));
        }
        AxiomId::CompatA => {
            let (a, b, c) = (v[0], v[1], v[2]);
            out += &w(a, &dm(b, c)?)?;
            out.add_scaled(&w(a, &dm(c, b)?)?, &-sign((deg[1] - 1) * (deg[2] - 1)));
        }
        AxiomId::CompatB => {
            let (a, b, c) = (v[0], v[1], v[2]);
            out += &dm(a, &w(b, c)?)?;
            out -= &w(&dm(a, b)?, c)?;
        }
        AxiomId::CompatC => {
            let (a, b, c) = (v[0], v[1], v[2]);
            out += &w(&dm(a, b)?, c)?;
            out.add_scaled(&dm(&w(a, c)?, b)?, &-sign((deg[1] - 1) * deg[2]));
        }
        AxiomId::Derived1 => {
            out += &w(v[0], &br(v[1], v[2])?)?;
        }
        AxiomId::Derived2 => {
            let (a, b, c) = (v[0], v[1], v[2]);
            out += &br(a, &w(b, c)?)?;
            out -= &w(&br(a, b)?, c)?;
        }
        AxiomId::LeibnizGerst => {
            let (a, b, c) = (v[0], v[1], v[2]);
            let (da, db) = (deg[0], deg[1]);
            out += &br(a, &dot(m, b, c)?)?;
            out -= &dot(m, &br(a, b)?, c)?;
            out.add_scaled(&dot(m, b, &br(a, c)?)?, &-sign(db * (da - 1)));
        }
        AxiomId::Aguiar1 => {
            let (a, b, c) = (v[0], v[1], v[2]);
            let (da, db) = (deg[0], deg[1]);
            out += &w(&br(a, b)?, c)?;
            out -= &dm(a, &w(b, c)?)?;
            out.add_scaled(&w(b, &dm(a, c)?)?, &sign((da - 1) * db));
        }
        AxiomId::Aguiar2 => {
            let (a, b, c) = (v[0], v[1], v[2]);
            let (da, db, dc) = (deg[0], deg[1], deg[2]);
            out += &dm(&dot(m, a, b)?, c)?;
            out.add_scaled(&w(a, &dm(b, c)?)?, &-sign(da * (dc - 1)));
            out.add_scaled(&w(b, &dm(a, c)?)?, &-sign((da + dc - 1) * db));
        }
        AxiomId::DDerivWedge => {
            let (x, y) = (v[0], v[1]);
            out += &differential(m, &w(x, y)?)?;
            out -= &w(&differential(m, x)?, y)?;
            out.add_scaled(&w(x, &differential(m, y)?)?, &-sign(deg[0]));
        }
        AxiomId::DDerivDiamond => {
            let (x, y) = (v[0], v[1]);
            out += &differential(m, &dm(x, y)?)?;
            out -= &dm(&differential(m, x)?, y)?;
            out.add_scaled(&dm(x, &differential(m, y)?)?, &-sign(deg[0] - 1));
        }
    }
    Ok(out)
}

/// The exact defect of `axiom` on `args`; zero iff the identity holds.
/// Mixed-degree arguments are split into homogeneous components.
pub fn check_axiom(m: &dyn AlgebraModel, axiom: AxiomId, args: &[Vector]) -> Result<Vector> {
    if args.len() != axiom.arity() {
        return Err(Error::arg(format!(
            "{axiom} takes {} arguments, got {}",
            axiom.arity(),
            args.len()
        )));
    }
    if !m.has_products() {
        return Err(Error::Unsupported {
            model: m.label().into(),
            op: axiom.name().into(),
        });
    }
    let parts: Vec<Vec<(i64, Vector)>> = args.iter().map(homogeneous_parts).collect();
    let mut out = Vector::zero();
    let mut idx = vec![0usize; args.len()];
    if parts.iter().any(|p| p.is_empty()) {
        return Ok(out);
    }
    loop {
        let vs: Vec<&Vector> = idx.iter().zip(&parts).map(|(&i, p)| &p[i].1).collect();
        let ds: Vec<i64> = idx.iter().zip(&parts).map(|(&i, p)| p[i].0).collect();
        out += &defect_homogeneous(m, axiom, &vs, &ds)?;
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < parts[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}
