//! Discrete invariants of the wonderful compactification of an adjoint simple
//! group: Picard lattice tests, the boundary-orbit poset, dimensions of the
//! minimal family and of the projectivized minimal nilpotent orbit, the
//! minimum-degree bound, line-covered contractions, and the product rule for
//! minimal families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::reference;
use crate::root_system::{Family, RootDatum, SimpleType, Weight};

/// A Picard class, identified with a weight under the lattice isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicardClass {
    weight: Weight,
}

impl PicardClass {
    pub fn new(weight: Weight) -> Self {
        PicardClass { weight }
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// Globally generated exactly when the weight is dominant.
    pub fn is_globally_generated(&self) -> bool {
        self.weight.is_dominant()
    }

    /// Ample exactly when the weight is regular dominant.
    pub fn is_ample(&self) -> bool {
        self.weight.is_regular_dominant()
    }
}

/// Label of a boundary orbit: a subset of {1..l}. The empty set labels the
/// open orbit, the full set the closed orbit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct OrbitLabel {
    rank: usize,
    subset: BTreeSet<usize>,
}

impl OrbitLabel {
    pub fn new(rank: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let subset: BTreeSet<usize> = indices.into_iter().collect();
        for &i in &subset {
            if !(1..=rank).contains(&i) {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
        }
        Ok(OrbitLabel { rank, subset })
    }

    pub fn open_orbit(rank: usize) -> Self {
        OrbitLabel {
            rank,
            subset: BTreeSet::new(),
        }
    }

    pub fn closed_orbit(rank: usize) -> Self {
        OrbitLabel {
            rank,
            subset: (1..=rank).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn subset(&self) -> &BTreeSet<usize> {
        &self.subset
    }

    pub fn is_open(&self) -> bool {
        self.subset.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.subset.len() == self.rank
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.subset.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Closure order on boundary orbits: the closure of O_a contains O_b exactly
/// when a is a subset of b.
pub fn orbit_closure_contains(a: &OrbitLabel, b: &OrbitLabel) -> Result<bool> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch {
            expected: a.rank,
            found: b.rank,
        });
    }
    Ok(a.subset.is_subset(&b.subset))
}

/// The anticanonical class `kappa = 2 rho + sum_i alpha_i`.
pub fn anticanonical(datum: &RootDatum) -> PicardClass {
    PicardClass::new(datum.kappa().clone())
}

/// `dim P(O_min) = (sum over positive roots of <alpha, theta^vee>) - 1
///              = <2 rho, theta^vee> - 1`,
/// also equal to the number of positive roots non-orthogonal to theta. All
/// three routes are computed and must agree.
pub fn dim_projectivized_min_orbit(datum: &RootDatum) -> i64 {
    let by_sum = dim_p_omin_by_root_sum(datum);
    let by_rho = dim_p_omin_by_rho_pairing(datum);
    let by_count = dim_p_omin_by_nonorthogonal_count(datum);
    assert_eq!(by_sum, by_rho, "root-sum route disagrees with 2rho route");
    assert_eq!(
        by_sum, by_count,
        "root-sum route disagrees with counting route"
    );
    by_sum
}

pub fn dim_p_omin_by_root_sum(datum: &RootDatum) -> i64 {
    let theta_vee = datum.theta_coroot();
    let sum: i64 = datum
        .positive_roots()
        .iter()
        .map(|alpha| {
            datum
                .pairing_with_coroot(&datum.root_to_weight(alpha), theta_vee)
                .expect("matching rank")
        })
        .sum();
    sum - 1
}

pub fn dim_p_omin_by_rho_pairing(datum: &RootDatum) -> i64 {
    let two_rho = datum.rho().add(datum.rho());
    datum
        .pairing_with_coroot(&two_rho, datum.theta_coroot())
        .expect("matching rank")
        - 1
}

pub fn dim_p_omin_by_nonorthogonal_count(datum: &RootDatum) -> i64 {
    let theta_vee = datum.theta_coroot();
    datum
        .positive_roots()
        .iter()
        .filter(|alpha| {
            datum
                .pairing_with_coroot(&datum.root_to_weight(alpha), theta_vee)
                .expect("matching rank")
                != 0
        })
        .count() as i64
}

/// What the minimal family through a general point looks like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MinimalFamilyKind {
    /// `K_x` is the adjoint variety, the closed orbit in P(g): every type
    /// outside family A.
    #[serde(rename = "adjoint_variety")]
    AdjointVariety,
    /// `K_x` is P^l x (P^l)*, mapped into P(g) by the Segre embedding followed
    /// by the projection away from the identity: type A_l, l >= 2.
    #[serde(rename = "segre_projection")]
    SegreProjection,
    /// Rank one: X is P^3 and `K_x` is the full P^2 of lines through a point.
    #[serde(rename = "P3_full")]
    P3Full,
}

/// Dimension bookkeeping for the minimal family and its tangent image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VmrtReport {
    pub dim_kx: i64,
    pub dim_p_omin: i64,
    /// `dim_kx - dim_p_omin`: 1 in type A (any rank), 0 otherwise.
    pub offset: i64,
    /// The unique simple-root index pairing to 1 with theta^vee; populated
    /// outside family A only.
    pub i0: Option<usize>,
    pub family: MinimalFamilyKind,
}

pub fn vmrt_report(datum: &RootDatum) -> VmrtReport {
    let kappa_theta = datum
        .pairing_with_coroot(datum.kappa(), datum.theta_coroot())
        .expect("matching rank");
    let dim_kx = kappa_theta - 2;
    let dim_p_omin = dim_projectivized_min_orbit(datum);
    let offset = dim_kx - dim_p_omin;
    let family_a = datum.simple_type().family() == Family::A;
    let rank = datum.rank();
    let i0 = if family_a {
        None
    } else {
        let theta_cochar = datum.coroot_to_cocharacter(datum.theta_coroot());
        let ones: Vec<usize> = theta_cochar
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(ones.len(), 1, "outside type A there is a unique i0");
        Some(ones[0])
    };
    let family = if family_a {
        if rank == 1 {
            MinimalFamilyKind::P3Full
        } else {
            MinimalFamilyKind::SegreProjection
        }
    } else {
        MinimalFamilyKind::AdjointVariety
    };
    if family_a && rank >= 2 {
        assert_eq!(
            dim_kx,
            2 * rank as i64,
            "type A minimal family has dimension 2l"
        );
        assert_eq!(offset, 1);
    }
    if !family_a {
        assert_eq!(
            offset, 0,
            "outside type A the family has the orbit dimension"
        );
    }
    VmrtReport {
        dim_kx,
        dim_p_omin,
        offset,
        i0,
        family,
    }
}

/// Degree of an ample class on any curve through the base point is at least
/// the rank; returns `<lambda, theta^vee>`.
pub fn min_degree_bound(datum: &RootDatum, lam: &Weight) -> Result<i64> {
    datum.check_weight(lam)?;
    if !lam.is_regular_dominant() {
        return Err(Error::NotAmple {
            coords: lam.coords().to_vec(),
        });
    }
    let value = datum
        .pairing_with_coroot(lam, datum.theta_coroot())
        .expect("matching rank");
    assert!(
        value >= datum.rank() as i64,
        "ample degree below the rank bound"
    );
    Ok(value)
}

/// Fundamental weights whose contraction is covered by lines, the minuscule
/// subset, and the reference normality/smoothness flags of those contractions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionTable {
    pub type_name: String,
    /// `{ i : theta^vee has coefficient 1 at alpha_i^vee }`
    pub line_weights: BTreeSet<usize>,
    /// `{ i : the highest coroot has coefficient 1 at alpha_i^vee }`
    pub minuscule_weights: BTreeSet<usize>,
    /// Reference data (not re-derived here), keyed by line-weight index.
    pub normality: BTreeMap<usize, bool>,
    pub smoothness: BTreeMap<usize, bool>,
}

pub fn contraction_table(datum: &RootDatum) -> ContractionTable {
    let line_weights: BTreeSet<usize> = datum
        .theta_coroot()
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &m)| m == 1)
        .map(|(i, _)| i + 1)
        .collect();
    // The highest coroot is theta_s^vee when two lengths exist, and theta^vee
    // itself in the simply-laced case.
    let highest_coroot = datum
        .theta_short_coroot()
        .unwrap_or_else(|| datum.theta_coroot());
    let minuscule_weights: BTreeSet<usize> = highest_coroot
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &m)| m == 1)
        .map(|(i, _)| i + 1)
        .collect();
    let mut normality = BTreeMap::new();
    let mut smoothness = BTreeMap::new();
    for &i in &line_weights {
        let (normal, smooth) = reference::contraction_flags(datum.simple_type(), i);
        normality.insert(i, normal);
        smoothness.insert(i, smooth);
    }
    ContractionTable {
        type_name: datum.simple_type().to_string(),
        line_weights,
        minuscule_weights,
        normality,
        smoothness,
    }
}

/// For a product of simple factors with one ample class per factor, the
/// factors that can host a minimal family: all indices attaining
/// `min_i <lambda_i, theta_i^vee>` (0-based). A singleton pins the family to
/// one factor.
pub fn minimal_family_product(
    factors: &[SimpleType],
    polarization: &[Weight],
) -> Result<Vec<usize>> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    if factors.len() != polarization.len() {
        return Err(Error::InvalidInput(format!(
            "{} factors but {} weights",
            factors.len(),
            polarization.len()
        )));
    }
    let mut degrees = Vec::with_capacity(factors.len());
    for (t, lam) in factors.iter().zip(polarization) {
        let datum = RootDatum::build(*t)?;
        degrees.push(min_degree_bound(&datum, lam)?);
    }
    let min = *degrees.iter().min().expect("non-empty");
    Ok(degrees
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == min)
        .map(|(i, _)| i)
        .collect())
}
