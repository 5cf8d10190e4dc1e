use std::collections::HashSet;

use super::{common_degree, GroupError};
use crate::perm::Permutation;

pub const DEFAULT_BFS_CAP: usize = 10_000_000;

/// Every element of a group, found by breadth-first closure. Elements are
/// stored as byte image arrays.
#[derive(Debug, Clone)]
pub struct BfsGroup {
    degree: usize,
    elements: HashSet<Box<[u8]>>,
}

impl BfsGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.contains(&encode(p)[..])
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        self.elements
            .iter()
            .map(|e| Permutation::from_raw(e.iter().map(|&x| x as u32).collect()))
    }

    /// Same element set.
    pub fn same_elements(&self, other: &BfsGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

fn encode(p: &Permutation) -> Box<[u8]> {
    p.images().iter().map(|&x| x as u8).collect()
}

/// Breadth-first closure of the identity under right multiplication by the
/// generators. Fails once more than `cap` elements have been found.
pub fn bfs_enumerate(generators: &[Permutation], cap: usize) -> Result<BfsGroup, GroupError> {
    let degree = common_degree(generators)?;
    if degree > 256 {
        return Err(GroupError::DegreeTooLarge(degree));
    }
    let gens: Vec<Box<[u8]>> = generators.iter().map(encode).collect();
    let identity: Box<[u8]> = (0..degree).map(|x| x as u8).collect();

    let mut elements: HashSet<Box<[u8]>> = HashSet::new();
    elements.insert(identity.clone());
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y: Box<[u8]> = x.iter().map(|&i| g[i as usize]).collect();
                if !elements.contains(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    elements.insert(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(BfsGroup { degree, elements })
}
