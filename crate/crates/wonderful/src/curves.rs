//! Rational curves obtained as closures of one-parameter subgroups, and their
//! numerical invariants: line-bundle degrees, limit orbits at 0 and infinity,
//! smoothness and indivisibility.
//!
//! Limit orbits are always computed as the support of the intersection numbers
//! against the boundary divisors (`O_X(D_i)` corresponds to `alpha_i`); the
//! multiplicative and additive cases are two instances of that one rule.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{Cocharacter, Coroot, Root, RootDatum, SimpleType, Weight};
use crate::weyl;
use crate::wonderful::OrbitLabel;

/// Closure of a dominant indivisible multiplicative one-parameter subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultCurve {
    eta: Cocharacter,
}

impl MultCurve {
    pub fn new(datum: &RootDatum, eta: Cocharacter) -> Result<Self> {
        datum.check_cocharacter(&eta)?;
        check_dominant(&eta)?;
        check_indivisible(&eta)?;
        Ok(MultCurve { eta })
    }

    pub fn eta(&self) -> &Cocharacter {
        &self.eta
    }
}

/// Which dominant root an additive curve is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AdditiveClass {
    /// The highest root.
    #[serde(rename = "theta")]
    Theta,
    /// The highest short root (two root lengths only).
    #[serde(rename = "theta-short")]
    ThetaShort,
}

/// Closure of the root subgroup of the highest (or highest short) root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddCurve {
    class: AdditiveClass,
    root: Root,
    /// Which simple factor the curve lives on (0 for a single factor).
    factor: usize,
}

impl AddCurve {
    pub fn new(datum: &RootDatum, class: AdditiveClass) -> Result<Self> {
        let root = match class {
            AdditiveClass::Theta => datum.theta().clone(),
            AdditiveClass::ThetaShort => datum
                .theta_short()
                .ok_or_else(|| Error::NoShortRoot {
                    simple_type: datum.simple_type().to_string(),
                })?
                .clone(),
        };
        Ok(AddCurve {
            class,
            root,
            factor: 0,
        })
    }

    pub fn class(&self) -> AdditiveClass {
        self.class
    }

    pub fn root(&self) -> &Root {
        &self.root
    }

    pub fn factor(&self) -> usize {
        self.factor
    }
}

/// Either kind of curve, for report aggregation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Curve {
    Mult(MultCurve),
    Add(AddCurve),
}

/// Invariants of one curve class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    /// Degrees against the fundamental weights, in index order.
    pub degrees: BTreeMap<Weight, i64>,
    pub orbit_at_zero: OrbitLabel,
    pub orbit_at_infinity: OrbitLabel,
    pub smooth: bool,
    pub anticanonical_degree: i64,
}

fn check_dominant(eta: &Cocharacter) -> Result<()> {
    if eta.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant {
            what: "cocharacter",
            coords: eta.coords().to_vec(),
        })
    }
}

fn check_indivisible(eta: &Cocharacter) -> Result<()> {
    if eta.is_indivisible() {
        Ok(())
    } else {
        Err(Error::NotIndivisible {
            coords: eta.coords().to_vec(),
            gcd: eta.gcd(),
        })
    }
}

/// The dominant Weyl conjugate of a cocharacter, for callers holding a
/// non-dominant one-parameter subgroup. Each step reflects at a negative
/// coordinate, mirroring the dominance algorithm on weights.
pub fn dominant_cocharacter_representative(
    datum: &RootDatum,
    eta: &Cocharacter,
) -> Result<Cocharacter> {
    datum.check_cocharacter(eta)?;
    let mut v = eta.clone();
    loop {
        match v.coords().iter().position(|&c| c < 0) {
            None => return Ok(v),
            Some(idx) => {
                v = weyl::simple_reflection_on_cocharacter(datum, idx + 1, &v)?;
            }
        }
    }
}

/// `deg eta^* L_X(lambda) = <lambda - w0 lambda, eta>`; an integer because
/// `lambda - w0 lambda` lies in the root lattice, and non-negative for
/// dominant `lambda`.
pub fn mult_degree(datum: &RootDatum, lam: &Weight, eta: &Cocharacter) -> Result<i64> {
    datum.check_weight(lam)?;
    datum.check_cocharacter(eta)?;
    check_dominant(eta)?;
    let diff = lam.sub(&weyl::w0_on_weight(datum, lam)?);
    let value = datum.pairing(&diff, eta)?;
    assert!(
        value.is_integer(),
        "lambda - w0 lambda must lie in the root lattice"
    );
    Ok(value.to_integer())
}

/// Limit orbits of the curve: at 0 the support `I = {i : <alpha_i, eta> != 0}`,
/// at infinity its image `J` under the `-w0` permutation of the simple roots.
pub fn mult_limit_orbits(datum: &RootDatum, eta: &Cocharacter) -> Result<(OrbitLabel, OrbitLabel)> {
    datum.check_cocharacter(eta)?;
    check_dominant(eta)?;
    let rank = datum.rank();
    let at_zero = OrbitLabel::new(
        rank,
        eta.coords()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1),
    )?;
    let sigma = weyl::minus_w0_permutation(datum);
    // <w0 alpha_j, eta> = -<alpha_{sigma(j)}, eta>
    let at_infinity = OrbitLabel::new(
        rank,
        (0..rank)
            .filter(|&j| eta.coords()[sigma[j] - 1] != 0)
            .map(|j| j + 1),
    )?;
    Ok((at_zero, at_infinity))
}

/// A multiplicative curve is smooth exactly when some `<alpha_i, eta> = 1`.
pub fn mult_is_smooth(datum: &RootDatum, eta: &Cocharacter) -> Result<bool> {
    datum.check_cocharacter(eta)?;
    check_dominant(eta)?;
    check_indivisible(eta)?;
    Ok(eta.coords().contains(&1))
}

fn additive_coroot(datum: &RootDatum, class: AdditiveClass) -> Result<&Coroot> {
    match class {
        AdditiveClass::Theta => Ok(datum.theta_coroot()),
        AdditiveClass::ThetaShort => datum
            .theta_short_coroot()
            .ok_or_else(|| Error::NoShortRoot {
                simple_type: datum.simple_type().to_string(),
            }),
    }
}

/// `L_X(lambda) . C = <lambda, coroot>` for the additive curve of the chosen
/// dominant root.
pub fn additive_degree(datum: &RootDatum, lam: &Weight, class: AdditiveClass) -> Result<i64> {
    datum.check_weight(lam)?;
    let cv = additive_coroot(datum, class)?;
    datum.pairing_with_coroot(lam, cv)
}

/// Boundary orbit of the point at infinity: the set of divisors meeting the
/// curve, `{ i : <alpha_i, coroot> != 0 }`.
pub fn additive_infinity_orbit(datum: &RootDatum, class: AdditiveClass) -> Result<OrbitLabel> {
    let cv = additive_coroot(datum, class)?;
    let c = datum.coroot_to_cocharacter(cv);
    OrbitLabel::new(
        datum.rank(),
        c.coords()
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i + 1),
    )
}

/// The irreducible Borel-stable curves through the base point of a product of
/// simple factors: one highest-root curve per factor, factor-tagged.
pub fn b_stable_curves(factors: &[SimpleType]) -> Result<Vec<AddCurve>> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let mut curves = Vec::with_capacity(factors.len());
    for (k, t) in factors.iter().enumerate() {
        let datum = RootDatum::build(*t)?;
        let mut curve = AddCurve::new(&datum, AdditiveClass::Theta)?;
        curve.factor = k;
        curves.push(curve);
    }
    Ok(curves)
}

/// All invariants of one curve: degrees against every fundamental weight,
/// limit orbits, smoothness, and the anticanonical degree.
pub fn curve_report(datum: &RootDatum, curve: &Curve) -> Result<CurveReport> {
    let rank = datum.rank();
    let fundamental: Vec<Weight> = (1..=rank)
        .map(|i| datum.fundamental_weight(i).expect("in range"))
        .collect();
    match curve {
        Curve::Mult(c) => {
            let eta = c.eta();
            datum.check_cocharacter(eta)?;
            let mut degrees = BTreeMap::new();
            for w in &fundamental {
                degrees.insert(w.clone(), mult_degree(datum, w, eta)?);
            }
            let (orbit_at_zero, orbit_at_infinity) = mult_limit_orbits(datum, eta)?;
            Ok(CurveReport {
                degrees,
                orbit_at_zero,
                orbit_at_infinity,
                smooth: mult_is_smooth(datum, eta)?,
                anticanonical_degree: mult_degree(datum, datum.kappa(), eta)?,
            })
        }
        Curve::Add(c) => {
            if c.root().rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: c.root().rank(),
                });
            }
            let mut degrees = BTreeMap::new();
            for w in &fundamental {
                degrees.insert(w.clone(), additive_degree(datum, w, c.class())?);
            }
            Ok(CurveReport {
                degrees,
                // the additive group passes through the base point, which lies
                // in the open orbit
                orbit_at_zero: OrbitLabel::open_orbit(rank),
                orbit_at_infinity: additive_infinity_orbit(datum, c.class())?,
                smooth: true,
                anticanonical_degree: additive_degree(datum, datum.kappa(), c.class())?,
            })
        }
    }
}
