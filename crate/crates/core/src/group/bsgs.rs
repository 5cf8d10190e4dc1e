//! Deterministic Schreier-Sims.
//!
//! Each level keeps a base point, the generators added at that level, and a
//! transversal mapping every orbit point `b` to an element taking the base
//! point to `b`. Schreier generators are formed once per (orbit point,
//! generator) pair, when that pair first appears, and sifted through the
//! levels below; a non-trivial residue becomes a new generator one level
//! down. Transversal entries never change once set, so a Schreier generator
//! that sifts successfully keeps doing so as the chain grows.

use num_bigint::BigUint;
use num_traits::One;

use super::{common_degree, GroupError};
use crate::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Permutation>>,
    inverses: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverses = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        inverses[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            generators: Vec::new(),
            orbit: vec![base_point],
            transversal,
            inverses,
        }
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

/// Builds a [`Bsgs`] for the group generated by `generators`. New base
/// points are the smallest point moved by the generator that forces them.
pub fn schreier_sims(generators: &[Permutation]) -> Result<Bsgs, GroupError> {
    let degree = common_degree(generators)?;
    let mut bsgs = Bsgs {
        degree,
        levels: Vec::new(),
    };
    for g in generators {
        if !g.is_identity() && bsgs.sift_from(0, g.clone()).is_some() {
            bsgs.add_generator(0, g.clone());
        }
    }
    Ok(bsgs)
}

impl Bsgs {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Generators introduced at `level`; they fix every earlier base point.
    pub fn level_generators(&self, level: usize) -> &[Permutation] {
        &self.levels[level].generators
    }

    /// All strong generators, level by level.
    pub fn strong_generators(&self) -> Vec<&Permutation> {
        self.levels
            .iter()
            .flat_map(|l| l.generators.iter())
            .collect()
    }

    /// Coset representatives at `level` as `(orbit point, element)` pairs,
    /// sorted by point.
    pub fn transversal(&self, level: usize) -> Vec<(usize, &Permutation)> {
        let l = &self.levels[level];
        let mut out: Vec<(usize, &Permutation)> = l
            .orbit
            .iter()
            .map(|&b| {
                (
                    b,
                    l.transversal[b]
                        .as_ref()
                        .expect("orbit point has a representative"),
                )
            })
            .collect();
        out.sort_by_key(|&(b, _)| b);
        out
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool, GroupError> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.sift_from(0, p.clone()).is_none())
    }

    /// True when every strong generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &Bsgs) -> Result<bool, GroupError> {
        for g in self.strong_generators() {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strips `g` through levels `start..`. Returns `None` when it reduces to
    /// the identity, otherwise the (possibly partial) residue.
    fn sift_from(&self, start: usize, mut g: Permutation) -> Option<Permutation> {
        for level in &self.levels[start..] {
            let b = g.apply(level.base_point);
            match &level.inverses[b] {
                Some(inv) => g = g.then(inv),
                None => return Some(g),
            }
        }
        if g.is_identity() {
            None
        } else {
            Some(g)
        }
    }

    /// Adds `g`, which fixes the base points of levels `0..level`, as a
    /// generator at `level`, then closes the orbit and processes the new
    /// Schreier generators.
    fn add_generator(&mut self, level: usize, g: Permutation) {
        if level == self.levels.len() {
            let point = (0..self.degree)
                .find(|&i| g.apply(i) != i)
                .expect("only non-identity elements are added");
            self.levels.push(Level::new(self.degree, point));
        }
        let lvl = &mut self.levels[level];
        lvl.generators.push(g);
        let new_gen = lvl.generators.len() - 1;
        let old_len = lvl.orbit.len();

        for idx in 0..old_len {
            let b = self.levels[level].orbit[idx];
            self.process_pair(level, b, new_gen);
        }
        let mut idx = old_len;
        while idx < self.levels[level].orbit.len() {
            let b = self.levels[level].orbit[idx];
            for s in 0..self.levels[level].generators.len() {
                self.process_pair(level, b, s);
            }
            idx += 1;
        }
    }

    fn process_pair(&mut self, level: usize, b: usize, gen: usize) {
        let lvl = &mut self.levels[level];
        let s = &lvl.generators[gen];
        let c = s.apply(b);
        let u_b_s = lvl.transversal[b]
            .as_ref()
            .expect("b is in the orbit")
            .then(s);
        match &lvl.inverses[c] {
            None => {
                lvl.inverses[c] = Some(u_b_s.inverse());
                lvl.transversal[c] = Some(u_b_s);
                lvl.orbit.push(c);
            }
            Some(u_c_inv) => {
                let schreier = u_b_s.then(u_c_inv);
                if schreier.is_identity() {
                    return;
                }
                if let Some(residue) = self.sift_from(level + 1, schreier) {
                    self.add_generator(level + 1, residue);
                }
            }
        }
    }
}

/// Order of the kernel of the pair homomorphism restricted to the group
/// generated by `generators`, as `|G| / |phi(G)|`.
pub fn kernel_order(generators: &[Permutation]) -> Result<BigUint, GroupError> {
    let whole = schreier_sims(generators)?;
    let images = generators
        .iter()
        .map(|g| g.phi().map(|p| p.into_permutation()))
        .collect::<Result<Vec<_>, _>>()?;
    let pairs = schreier_sims(&images)?;
    Ok(whole.order() / pairs.order())
}
