//! Weyl group actions: simple reflections, the dominance algorithm for the
//! longest element, and an exhaustive enumeration oracle for small groups.
//!
//! The longest element is never obtained by enumeration on the main path; the
//! dominance algorithm is rank-polynomial and works for every type, while the
//! oracle is capped and intended for cross-checks.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::root_system::{Cocharacter, RootDatum, Weight};

/// Default cap on the enumeration oracle; large enough for every classical
/// type of rank <= 7, A8, D7, E6 and F4, and refused by E7, E8, B8, C8, D8.
pub const DEFAULT_ORACLE_CAP: usize = 1_000_000;

/// A Weyl group element, as an integer matrix acting on fundamental-weight
/// coordinates together with a witnessing word of simple reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// Row-major rank x rank matrix; the image of a weight with coordinate
    /// column `a` has coordinates `M a`.
    pub matrix: Vec<i32>,
    /// 1-based simple-reflection indices; the element is the left-to-right
    /// product `s_{word[0]} s_{word[1]} ...`.
    pub word: Vec<u8>,
    rank: usize,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement {
            matrix,
            word: Vec::new(),
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn apply(&self, lam: &Weight) -> Weight {
        let n = self.rank;
        Weight::new(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| i64::from(self.matrix[i * n + j]) * lam.coords()[j])
                        .sum()
                })
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
            || self.matrix == WeylElement::identity(self.rank).matrix
    }
}

/// Matrix of the simple reflection s_i on weight coordinates:
/// `(s_i lambda)_j = a_j - a_i cartan[i][j]`.
fn reflection_matrix(datum: &RootDatum, i: usize) -> Vec<i32> {
    let n = datum.rank();
    let mut m = vec![0i32; n * n];
    for r in 0..n {
        for c in 0..n {
            let mut v = i64::from(r == c);
            if c == i - 1 {
                v -= datum.cartan()[i - 1][r];
            }
            m[r * n + c] = i32::try_from(v).expect("reflection entries are small");
        }
    }
    m
}

fn matrix_mul(a: &[i32], b: &[i32], n: usize) -> Vec<i32> {
    let mut out = vec![0i32; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// `s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i`, with `i` 1-based.
pub fn simple_reflection(datum: &RootDatum, i: usize, lam: &Weight) -> Result<Weight> {
    if !(1..=datum.rank()).contains(&i) {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: datum.rank(),
        });
    }
    datum.check_weight(lam)?;
    let a_i = lam.coords()[i - 1];
    Ok(Weight::new(
        (0..datum.rank())
            .map(|j| lam.coords()[j] - a_i * datum.cartan()[i - 1][j])
            .collect(),
    ))
}

/// Dual action on cocharacters: `(s_i eta)_j = c_j - c_i cartan[j][i]`.
pub fn simple_reflection_on_cocharacter(
    datum: &RootDatum,
    i: usize,
    eta: &Cocharacter,
) -> Result<Cocharacter> {
    if !(1..=datum.rank()).contains(&i) {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: datum.rank(),
        });
    }
    datum.check_cocharacter(eta)?;
    let c_i = eta.coords()[i - 1];
    Ok(Cocharacter::new(
        (0..datum.rank())
            .map(|j| eta.coords()[j] - c_i * datum.cartan()[j][i - 1])
            .collect(),
    ))
}

/// The unique dominant weight in the Weyl orbit of `lam`, with a witnessing
/// word (left-to-right product, applied to `lam`, yields the result).
///
/// Ascent: while some coordinate is negative, reflect at the first such index;
/// each step increases the height of the weight, so the word length is at most
/// the number of positive roots.
pub fn dominant_representative(datum: &RootDatum, lam: &Weight) -> (Weight, Vec<u8>) {
    let mut v = lam.clone();
    let mut steps: Vec<u8> = Vec::new();
    loop {
        match v.coords().iter().position(|&a| a < 0) {
            None => break,
            Some(idx) => {
                let i = idx + 1;
                v = simple_reflection(datum, i, &v).expect("index in range");
                steps.push(i as u8);
            }
        }
    }
    // steps were applied to lam in order s_{i1}, then s_{i2}, ...; as a group
    // element that is the product s_{ik} ... s_{i1}.
    steps.reverse();
    (v, steps)
}

/// The longest element w0, computed by the dominance algorithm: the word
/// carrying -rho to rho is a reduced word for w0.
pub fn w0_element(datum: &RootDatum) -> WeylElement {
    let minus_rho = datum.rho().neg();
    let (dom, word) = dominant_representative(datum, &minus_rho);
    debug_assert_eq!(&dom, datum.rho());
    let n = datum.rank();
    let mut matrix = WeylElement::identity(n).matrix;
    for &i in &word {
        matrix = matrix_mul(&matrix, &reflection_matrix(datum, i as usize), n);
    }
    let element = WeylElement {
        matrix,
        word,
        rank: n,
    };
    debug_assert_eq!(element.apply(datum.rho()), datum.rho().neg());
    element
}

/// `w0(lambda)`, extended linearly from the fundamental weights.
pub fn w0_on_weight(datum: &RootDatum, lam: &Weight) -> Result<Weight> {
    datum.check_weight(lam)?;
    Ok(w0_element(datum).apply(lam))
}

/// The permutation sigma of {1..l} with `w0(alpha_i) = -alpha_{sigma(i)}`;
/// equivalently `-w0` as a permutation of the simple roots (and of the
/// fundamental weights).
pub fn minus_w0_permutation(datum: &RootDatum) -> Vec<usize> {
    let w0 = w0_element(datum);
    let n = datum.rank();
    let mut sigma = vec![0usize; n];
    for (i, slot) in sigma.iter_mut().enumerate() {
        let image = w0.apply(&datum.fundamental_weight(i + 1).expect("in range"));
        let negatives: Vec<usize> = (0..n).filter(|&j| image.coords()[j] != 0).collect();
        assert_eq!(
            negatives.len(),
            1,
            "-w0 must permute the fundamental weights"
        );
        let j = negatives[0];
        assert_eq!(image.coords()[j], -1);
        *slot = j + 1;
    }
    sigma
}

/// Dual action of w0 on cocharacters, so that `<w0 lambda, w0 eta> = <lambda, eta>`
/// holds exactly: `(w0 eta)_j = -c_{sigma(j)}`.
pub fn w0_on_cocharacter(datum: &RootDatum, eta: &Cocharacter) -> Result<Cocharacter> {
    datum.check_cocharacter(eta)?;
    let sigma = minus_w0_permutation(datum);
    Ok(Cocharacter::new(
        (0..datum.rank())
            .map(|j| -eta.coords()[sigma[j] - 1])
            .collect(),
    ))
}

/// Enumerate the full Weyl group by breadth-first closure over the simple
/// reflections, deduplicating elements by their weight-coordinate matrix.
/// Fails with `GroupTooLarge` as soon as more than `cap` elements appear.
pub fn enumerate_weyl_group(datum: &RootDatum, cap: usize) -> Result<Vec<WeylElement>> {
    let n = datum.rank();
    let generators: Vec<Vec<i32>> = (1..=n).map(|i| reflection_matrix(datum, i)).collect();
    let identity = WeylElement::identity(n);

    let mut index: HashMap<Box<[i32]>, u32> = HashMap::new();
    let mut elements: Vec<WeylElement> = vec![identity.clone()];
    index.insert(identity.matrix.clone().into_boxed_slice(), 0);

    let mut frontier: Vec<u32> = vec![0];
    while !frontier.is_empty() {
        let mut next: Vec<u32> = Vec::new();
        for &e in &frontier {
            for (g, gen) in generators.iter().enumerate() {
                let element = &elements[e as usize];
                // right multiplication appends one letter to the word
                let product = matrix_mul(&element.matrix, gen, n);
                let key = product.clone().into_boxed_slice();
                if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(key) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    let mut word = elements[e as usize].word.clone();
                    word.push((g + 1) as u8);
                    let id = elements.len() as u32;
                    slot.insert(id);
                    elements.push(WeylElement {
                        matrix: product,
                        word,
                        rank: n,
                    });
                    next.push(id);
                }
            }
        }
        frontier = next;
    }
    Ok(elements)
}

/// Order of the Weyl group from the classical product formulas; used to decide
/// up front whether enumeration is feasible.
pub fn weyl_order(datum: &RootDatum) -> u64 {
    use crate::root_system::Family;
    let l = datum.rank() as u64;
    let factorial = |n: u64| (1..=n).product::<u64>();
    match datum.simple_type().family() {
        Family::A => factorial(l + 1),
        Family::B | Family::C => (1u64 << l) * factorial(l),
        Family::D => (1u64 << (l - 1)) * factorial(l),
        Family::E => match l {
            6 => 51_840,
            7 => 2_903_040,
            8 => 696_729_600,
            _ => unreachable!("admissible E ranks are 6..8"),
        },
        Family::F => 1152,
        Family::G => 12,
    }
}
