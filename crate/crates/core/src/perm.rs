//! Finite permutations in position-image form, plus the sign and pair
//! homomorphisms defined on centrally symmetric permutations.
//!
//! A [`Permutation`] stores, for every position `i`, the position the card
//! currently at `i` moves to. So `image[i]` is "where card `i` goes". The
//! top-to-bottom arrangement of a deck after the permutation is applied to
//! the sorted deck `0, 1, ..., d-1` is the *inverse* map; see
//! [`Permutation::arrangement`].

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation must have degree at least 1")]
    Empty,
    #[error("not a bijection: {0}")]
    NotBijection(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {0} is odd; central symmetry needs an even degree")]
    OddDegree(usize),
    #[error("permutation is not centrally symmetric")]
    NotCentrallySymmetric,
    #[error("element order overflows 64 bits")]
    OrderOverflow,
    #[error("cannot parse permutation: {0}")]
    Parse(String),
}

/// Sign of a permutation, or the value of any homomorphism into `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => f.write_str("+1"),
            Sign::Minus => f.write_str("-1"),
        }
    }
}

/// A bijection on `{0, .., degree-1}`; `image[i]` is the new position of the
/// element currently at position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    /// The identity of the given degree. Panics if `degree == 0`.
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be at least 1");
        Permutation {
            image: (0..degree as u32).collect(),
        }
    }

    pub fn from_images<I>(images: I) -> Result<Self, PermError>
    where
        I: IntoIterator<Item = usize>,
    {
        let images: Vec<usize> = images.into_iter().collect();
        if images.is_empty() {
            return Err(PermError::Empty);
        }
        let degree = images.len();
        if degree > u32::MAX as usize {
            return Err(PermError::NotBijection(format!(
                "degree {degree} too large"
            )));
        }
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree {
                return Err(PermError::NotBijection(format!(
                    "image {x} out of range for degree {degree}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotBijection(format!("image {x} repeated")));
            }
        }
        Ok(Permutation {
            image: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Caller guarantees `image` is a bijection on `0..image.len()`.
    pub(crate) fn from_raw(image: Vec<u32>) -> Self {
        debug_assert!(!image.is_empty());
        Permutation { image }
    }

    /// The permutation whose arrangement (top-to-bottom card labels) is
    /// `cards`; the inverse of [`Permutation::arrangement`].
    pub fn from_arrangement<I>(cards: I) -> Result<Self, PermError>
    where
        I: IntoIterator<Item = usize>,
    {
        Ok(Self::from_images(cards)?.inverse())
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.image
    }

    /// New position of the element at position `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`. Panics on a degree mismatch; use
    /// [`compose`] for the checked form.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "degree mismatch in composition"
        );
        Permutation {
            image: self
                .image
                .iter()
                .map(|&x| other.image[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { image: inv }
    }

    /// `self` performed `exp` times; negative exponents use the inverse.
    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// Top-to-bottom card labels after applying `self` to the sorted deck.
    pub fn arrangement(&self) -> Vec<usize> {
        self.inverse()
            .image
            .into_iter()
            .map(|x| x as usize)
            .collect()
    }

    /// Disjoint cycles including fixed points, each starting at its minimum,
    /// ordered by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn parity(&self) -> Sign {
        let n_cycles = self.cycles().len();
        Sign::from_parity((self.degree() - n_cycles) % 2 == 1)
    }

    /// Least `k >= 1` with `self^k` the identity, as the lcm of cycle lengths.
    pub fn element_order(&self) -> Result<u64, PermError> {
        let mut acc: u64 = 1;
        for c in self.cycles() {
            let len = c.len() as u64;
            let g = gcd(acc, len);
            acc = (acc / g).checked_mul(len).ok_or(PermError::OrderOverflow)?;
        }
        Ok(acc)
    }

    pub fn is_centrally_symmetric(&self) -> Result<bool, PermError> {
        let d = self.degree();
        if d % 2 == 1 {
            return Err(PermError::OddDegree(d));
        }
        let top = (d - 1) as u32;
        Ok((0..d / 2).all(|i| self.image[i] + self.image[d - 1 - i] == top))
    }

    /// The permutation induced on the `n` centrally symmetric pairs. Pair `p`
    /// is `{p, 2n-1-p}`, indexed by its smaller element.
    pub fn phi(&self) -> Result<PairPermutation, PermError> {
        if !self.is_centrally_symmetric()? {
            return Err(PermError::NotCentrallySymmetric);
        }
        let d = self.degree() as u32;
        let n = self.degree() / 2;
        let image = self.image[..n].iter().map(|&x| x.min(d - 1 - x)).collect();
        Ok(PairPermutation(Permutation::from_raw(image)))
    }

    /// Sign of the induced pair permutation.
    pub fn sgn_bar(&self) -> Result<Sign, PermError> {
        Ok(self.phi()?.parity())
    }

    /// Cycle notation with fixed points omitted, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect();
        if parts.is_empty() {
            "()".to_string()
        } else {
            parts.concat()
        }
    }

    /// Parses cycle notation such as `(0 2 1)(3 4)` on `degree` points.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Permutation, PermError> {
        if degree == 0 {
            return Err(PermError::Empty);
        }
        let mut image: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| PermError::Parse(format!("malformed cycles: {s:?}")))?;
            let body = &rest[1..=body_end];
            rest = rest[body_end + 2..].trim_start();
            let pts = body
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|e| PermError::Parse(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            for (k, &p) in pts.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::Parse(format!("point {p} out of range")));
                }
                if std::mem::replace(&mut moved[p], true) {
                    return Err(PermError::Parse(format!("point {p} appears twice")));
                }
                image[p] = pts[(k + 1) % pts.len()];
            }
        }
        Permutation::from_images(image)
    }
}

/// `first` followed by `second`: `result[i] == second[first[i]]`.
pub fn compose(first: &Permutation, second: &Permutation) -> Result<Permutation, PermError> {
    if first.degree() != second.degree() {
        return Err(PermError::DegreeMismatch {
            left: first.degree(),
            right: second.degree(),
        });
    }
    Ok(first.then(second))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Image form, e.g. `2,5,1,4,0,3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| PermError::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::from_images(images)
    }
}

/// A permutation of the `n` centrally symmetric pairs of a `2n`-point set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairPermutation(Permutation);

impl PairPermutation {
    pub fn n(&self) -> usize {
        self.0.degree()
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn into_permutation(self) -> Permutation {
        self.0
    }

    pub fn parity(&self) -> Sign {
        self.0.parity()
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
