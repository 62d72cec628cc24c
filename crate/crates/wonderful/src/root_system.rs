//! Exact root data for the simple types, in fixed coordinates.
//!
//! Conventions, used everywhere downstream:
//! - roots are integer vectors in the simple-root basis,
//! - coroots are integer vectors in the simple-coroot basis,
//! - weights are integer vectors in the fundamental-weight basis
//!   (`a_i = <lambda, alpha_i^vee>`),
//! - cocharacters are integer vectors in the fundamental-coweight basis
//!   (`c_i = <alpha_i, eta>`),
//! - `cartan[i][j] = <alpha_i, alpha_j^vee>`, simple roots numbered as in
//!   Bourbaki.
//!
//! With these choices every pairing below is a dot product or a single
//! Cartan-matrix multiply, and all arithmetic stays exact.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// The seven families of simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple type such as `A2`, `D5` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            // D3 is rejected rather than silently renamed to A3.
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InadmissibleRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Parse a type name such as "A2" or "E8".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || {
            Error::InvalidInput(format!(
                "cannot parse simple type {s:?} (expected e.g. \"A2\")"
            ))
        };
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let family = Family::ALL
            .into_iter()
            .find(|f| f.letter() == letter)
            .ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        SimpleType::new(family, rank)
    }

    /// Every admissible simple type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

macro_rules! coord_vector {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        pub struct $name(Vec<i64>);

        impl $name {
            pub fn new(coords: Vec<i64>) -> Self {
                $name(coords)
            }

            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (k, x) in self.0.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    };
}

coord_vector! {
    /// A root, in simple-root coordinates. All coordinates of a root share one
    /// sign.
    Root
}

coord_vector! {
    /// A coroot, in simple-coroot coordinates.
    Coroot
}

coord_vector! {
    /// A weight, in fundamental-weight coordinates (`a_i = <lambda, alpha_i^vee>`).
    Weight
}

coord_vector! {
    /// A one-parameter subgroup of the adjoint maximal torus, in
    /// fundamental-coweight coordinates (`c_i = <alpha_i, eta>`).
    Cocharacter
}

impl Weight {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 1)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Cocharacter {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// A cocharacter is indivisible when its coordinate gcd is 1.
    pub fn is_indivisible(&self) -> bool {
        self.gcd() == 1
    }

    pub fn gcd(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| num_integer::gcd(g, c))
    }

    pub fn neg(&self) -> Cocharacter {
        Cocharacter(self.0.iter().map(|c| -c).collect())
    }
}

/// The full combinatorial root system of one simple type.
///
/// Immutable after [`RootDatum::build`]; every operation on it is a pure
/// function, safe for concurrent reads.
#[derive(Debug, Clone)]
pub struct RootDatum {
    simple_type: SimpleType,
    cartan: Vec<Vec<i64>>,
    /// Symmetrizer: d_i * cartan[i][j] = d_j * cartan[j][i], normalized to
    /// coprime positive integers. (alpha_i, alpha_i) = 2 d_i.
    symmetrizer: Vec<i64>,
    /// Positive roots sorted by height, then lexicographically.
    positive_roots: Vec<Root>,
    coroots: BTreeMap<Root, Coroot>,
    theta: Root,
    theta_short: Option<Root>,
    rho: Weight,
    kappa: Weight,
    /// Inverse of the transposed Cartan matrix, used to pass from
    /// fundamental-weight to simple-root coordinates.
    inverse_cartan_t: Vec<Vec<Rational>>,
}

impl RootDatum {
    /// Construct the root datum of a simple type: Cartan matrix, positive
    /// roots by root-string closure, coroots, and the distinguished elements
    /// theta, theta_s, rho, kappa.
    pub fn build(simple_type: SimpleType) -> Result<RootDatum> {
        let cartan = cartan_matrix(simple_type);
        let rank = simple_type.rank();
        let symmetrizer = symmetrizer(&cartan);
        let positive_roots = positive_roots_by_closure(&cartan);

        let mut coroots = BTreeMap::new();
        for root in &positive_roots {
            coroots.insert(root.clone(), coroot_of(&cartan, &symmetrizer, root));
        }

        // theta is the unique dominant long root; theta_s the unique dominant
        // short root when two lengths exist.
        let norms: Vec<i64> = positive_roots
            .iter()
            .map(|r| norm2(&cartan, &symmetrizer, r))
            .collect();
        let long = *norms.iter().max().expect("non-empty root system");
        let short = *norms.iter().min().expect("non-empty root system");
        let dominant: Vec<(usize, &Root)> = positive_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| weight_coords(&cartan, r).iter().all(|&a| a >= 0))
            .collect();
        let longs: Vec<&Root> = dominant
            .iter()
            .filter(|(k, _)| norms[*k] == long)
            .map(|(_, r)| *r)
            .collect();
        assert_eq!(longs.len(), 1, "dominant long root must be unique");
        let theta = longs[0].clone();
        let theta_short = if short == long {
            None
        } else {
            let shorts: Vec<&Root> = dominant
                .iter()
                .filter(|(k, _)| norms[*k] == short)
                .map(|(_, r)| *r)
                .collect();
            assert_eq!(shorts.len(), 1, "dominant short root must be unique");
            Some(shorts[0].clone())
        };

        let rho = Weight::new(vec![1; rank]);
        // kappa = 2 rho + sum of the simple roots, in weight coordinates.
        let kappa = Weight::new(
            (0..rank)
                .map(|j| 2 + (0..rank).map(|k| cartan[k][j]).sum::<i64>())
                .collect(),
        );

        let inverse_cartan_t = invert_transpose(&cartan);

        Ok(RootDatum {
            simple_type,
            cartan,
            symmetrizer,
            positive_roots,
            coroots,
            theta,
            theta_short,
            rho,
            kappa,
            inverse_cartan_t,
        })
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The coroot of a positive root.
    pub fn coroot(&self, root: &Root) -> Option<&Coroot> {
        self.coroots.get(root)
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    pub fn theta_short(&self) -> Option<&Root> {
        self.theta_short.as_ref()
    }

    pub fn theta_coroot(&self) -> &Coroot {
        self.coroots
            .get(&self.theta)
            .expect("theta is a positive root")
    }

    pub fn theta_short_coroot(&self) -> Option<&Coroot> {
        self.theta_short
            .as_ref()
            .map(|t| self.coroots.get(t).expect("theta_short is a positive root"))
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn kappa(&self) -> &Weight {
        &self.kappa
    }

    /// The i-th simple root (1-based, Bourbaki numbering).
    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_index(i)?;
        let mut coords = vec![0; self.rank()];
        coords[i - 1] = 1;
        Ok(Root::new(coords))
    }

    /// The i-th fundamental weight (1-based).
    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        let mut coords = vec![0; self.rank()];
        coords[i - 1] = 1;
        Ok(Weight::new(coords))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn check_weight(&self, lam: &Weight) -> Result<()> {
        if lam.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                found: lam.rank(),
            })
        }
    }

    pub fn check_cocharacter(&self, eta: &Cocharacter) -> Result<()> {
        if eta.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                found: eta.rank(),
            })
        }
    }

    /// Exact pairing `<lambda, eta>` of a weight with a cocharacter.
    ///
    /// Solves `a^T = r^T cartan` for the simple-root coordinates `r` of
    /// `lambda` and returns `sum_i r_i c_i`. The value is an integer whenever
    /// `eta` lies in the coroot lattice or `lambda` in the root lattice.
    pub fn pairing(&self, lam: &Weight, eta: &Cocharacter) -> Result<Rational> {
        self.check_weight(lam)?;
        self.check_cocharacter(eta)?;
        let r = self.simple_root_coords(lam);
        Ok(r.iter()
            .zip(eta.coords())
            .map(|(ri, &ci)| ri * Rational::from_integer(ci))
            .sum())
    }

    /// Pairing `<lambda, cv> = sum_i a_i m_i` with an element of the coroot
    /// lattice; always an integer.
    pub fn pairing_with_coroot(&self, lam: &Weight, cv: &Coroot) -> Result<i64> {
        if cv.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: cv.rank(),
            });
        }
        self.check_weight(lam)?;
        Ok(lam
            .coords()
            .iter()
            .zip(cv.coords())
            .map(|(a, m)| a * m)
            .sum())
    }

    /// Fundamental-weight coordinates of a root: `a_j = sum_k r_k cartan[k][j]`.
    pub fn root_to_weight(&self, root: &Root) -> Weight {
        Weight::new(weight_coords(&self.cartan, root))
    }

    /// Fundamental-coweight coordinates of a coroot: `c_i = sum_j cartan[i][j] m_j`.
    pub fn coroot_to_cocharacter(&self, cv: &Coroot) -> Cocharacter {
        Cocharacter::new(
            (0..self.rank())
                .map(|i| {
                    cv.coords()
                        .iter()
                        .enumerate()
                        .map(|(j, m)| self.cartan[i][j] * m)
                        .sum()
                })
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight, as exact rationals.
    pub fn simple_root_coords(&self, lam: &Weight) -> Vec<Rational> {
        (0..self.rank())
            .map(|i| {
                lam.coords()
                    .iter()
                    .enumerate()
                    .map(|(j, &a)| self.inverse_cartan_t[i][j] * Rational::from_integer(a))
                    .sum()
            })
            .collect()
    }

    /// Squared length of a root, normalized so that `(alpha_i, alpha_i) = 2 d_i`.
    pub fn norm2(&self, root: &Root) -> i64 {
        norm2(&self.cartan, &self.symmetrizer, root)
    }

    pub fn is_long(&self, root: &Root) -> bool {
        self.norm2(root) == self.norm2(&self.theta)
    }
}

/// Bourbaki Cartan matrix of a simple type: `cartan[i][j] = <alpha_i, alpha_j^vee>`.
fn cartan_matrix(simple_type: SimpleType) -> Vec<Vec<i64>> {
    let rank = simple_type.rank();
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    match simple_type.family() {
        Family::A => {
            for i in 1..rank {
                link(i, i + 1);
            }
        }
        Family::B => {
            for i in 1..rank - 1 {
                link(i, i + 1);
            }
            // alpha_{l-1} long, alpha_l short
            c[rank - 2][rank - 1] = -2;
            c[rank - 1][rank - 2] = -1;
        }
        Family::C => {
            for i in 1..rank - 1 {
                link(i, i + 1);
            }
            // alpha_{l-1} short, alpha_l long
            c[rank - 2][rank - 1] = -1;
            c[rank - 1][rank - 2] = -2;
        }
        Family::D => {
            for i in 1..rank - 1 {
                link(i, i + 1);
            }
            link(rank - 2, rank);
        }
        Family::E => {
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for i in 4..rank {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(1, 2);
            link(3, 4);
            // alpha_2 long, alpha_3 short
            c[1][2] = -2;
            c[2][1] = -1;
        }
        Family::G => {
            // alpha_1 short, alpha_2 long
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

/// Coprime positive integers d with `d_i cartan[i][j] = d_j cartan[j][i]`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let rank = cartan.len();
    let mut d = vec![Rational::zero(); rank];
    d[0] = Rational::from_integer(1);
    let mut stack = vec![0usize];
    let mut seen = vec![false; rank];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..rank {
            if i != j && cartan[i][j] != 0 && !seen[j] {
                // symmetry of (alpha_i, alpha_j): d_j cartan[i][j] = d_i cartan[j][i]
                d[j] = d[i] * Rational::new(cartan[j][i], cartan[i][j]);
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    assert!(seen.iter().all(|&s| s), "Dynkin diagram must be connected");
    let lcm_den = d.iter().fold(1i64, |l, x| num_integer::lcm(l, *x.denom()));
    let ints: Vec<i64> = d
        .iter()
        .map(|x| x.numer() * (lcm_den / x.denom()))
        .collect();
    let g = ints.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    ints.iter().map(|x| x / g).collect()
}

fn weight_coords(cartan: &[Vec<i64>], root: &Root) -> Vec<i64> {
    let rank = cartan.len();
    (0..rank)
        .map(|j| {
            root.coords()
                .iter()
                .enumerate()
                .map(|(k, &r)| r * cartan[k][j])
                .sum()
        })
        .collect()
}

fn norm2(cartan: &[Vec<i64>], symmetrizer: &[i64], root: &Root) -> i64 {
    let a = weight_coords(cartan, root);
    root.coords()
        .iter()
        .zip(&a)
        .zip(symmetrizer)
        .map(|((&c, &aj), &dj)| c * aj * dj)
        .sum()
}

/// `alpha^vee = 2 alpha / (alpha, alpha)`, expanded in the simple coroots.
fn coroot_of(cartan: &[Vec<i64>], symmetrizer: &[i64], root: &Root) -> Coroot {
    let n2 = norm2(cartan, symmetrizer, root);
    let coords = root
        .coords()
        .iter()
        .zip(symmetrizer)
        .map(|(&c, &d)| {
            let num = 2 * c * d;
            assert_eq!(num % n2, 0, "coroot coordinates must be integral");
            num / n2
        })
        .collect();
    Coroot::new(coords)
}

/// Generate the positive roots level by level: a root is extended along
/// `alpha_i` exactly when its root string through `alpha_i` continues upward
/// (`q = p - <alpha, alpha_i^vee> >= 1`).
fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Root> {
    let rank = cartan.len();
    let mut found: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    let mut level: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut c = vec![0; rank];
        c[i] = 1;
        found.insert(c.clone());
        level.push(c);
    }
    while !level.is_empty() {
        let mut next: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        for c in &level {
            for i in 0..rank {
                // p = how far the string continues downward inside R+
                let mut p = 0i64;
                let mut down = c.clone();
                loop {
                    down[i] -= 1;
                    if down[i] >= 0 && found.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing_i: i64 = (0..rank).map(|k| c[k] * cartan[k][i]).sum();
                if p - pairing_i >= 1 {
                    let mut up = c.clone();
                    up[i] += 1;
                    if found.insert(up.clone()) {
                        next.insert(up);
                    }
                }
            }
        }
        level = next.into_iter().collect();
    }
    let mut roots: Vec<Root> = found.into_iter().map(Root::new).collect();
    roots.sort_by_key(|r| (r.coords().iter().sum::<i64>(), r.coords().to_vec()));
    roots
}

/// Exact inverse of the transposed Cartan matrix, by Gaussian elimination.
fn invert_transpose(cartan: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = cartan.len();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        Rational::from_integer(cartan[j][i])
                    } else if j - n == i {
                        Rational::from_integer(1)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * *p;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}
