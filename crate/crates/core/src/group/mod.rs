//! Finite permutation groups with a fully enumerated element list.
//!
//! A [`Group`] is built by breadth-first closure from its generators and then
//! answers structural questions (classes, centralizers, Sylow subgroups,
//! normal subgroups, Frobenius structure, the subgroup lattice) by working
//! over element indices. Index 0 is always the identity.

mod classes;
mod iso;
mod lattice;
mod structure;
mod subset;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

pub use classes::ConjugacyClass;
pub use structure::FrobeniusStructure;
pub(crate) use subset::Subset;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Groups up to this order get a cached Cayley table.
const TABLE_MAX: usize = 3000;

/// Order caps for the expensive operations.
///
/// Exceeding a cap is reported as [`Error::CapExceeded`]; nothing is
/// silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group `generate` will enumerate.
    pub max_order: usize,
    /// Largest group for normal subgroups, simplicity and Frobenius structure.
    pub normal_subgroups: usize,
    /// Largest group whose whole subgroup lattice is enumerated.
    pub all_subgroups: usize,
    /// Largest order for the isomorphism search.
    pub isomorphism: usize,
    /// Largest group for which quotients are built from coset tables.
    pub quotient: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 250_000,
            normal_subgroups: 5000,
            all_subgroups: 720,
            isomorphism: 1000,
            quotient: 2000,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, operation: &'static str, limit: usize, size: usize) -> Result<()> {
        if size > limit {
            Err(Error::CapExceeded {
                operation,
                limit,
                size,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Default)]
struct Cache {
    table: OnceLock<Option<Vec<u32>>>,
    inverses: OnceLock<Vec<u32>>,
    orders: OnceLock<Vec<u64>>,
    classes: OnceLock<(Vec<ConjugacyClass>, Vec<u32>)>,
}

/// A permutation group given by generators, with every element enumerated.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    /// `elements[i] = elements[tree[i].0] * generators[tree[i].1]` for `i > 0`.
    tree: Vec<(u32, u32)>,
    limits: Limits,
    cache: Cache,
}

impl Group {
    /// Closes `gens` under composition with the default [`Limits`].
    pub fn generate(degree: usize, gens: &[Perm]) -> Result<Group> {
        Group::generate_with(degree, gens, Limits::default())
    }

    /// Closes `gens` under composition.
    ///
    /// Elements are listed in breadth-first order from the identity, trying
    /// generators in the order given, so equal inputs give equal orderings.
    pub fn generate_with(degree: usize, gens: &[Perm], limits: Limits) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0u32);
        let mut tree = vec![(0u32, u32::MAX)];
        let mut head = 0;
        while head < elements.len() {
            for (k, g) in gens.iter().enumerate() {
                let y = elements[head].then(g);
                if index.contains_key(&y) {
                    continue;
                }
                if elements.len() >= limits.max_order {
                    return Err(Error::CapExceeded {
                        operation: "generate",
                        limit: limits.max_order,
                        size: elements.len() + 1,
                    });
                }
                index.insert(y.clone(), elements.len() as u32);
                elements.push(y);
                tree.push((head as u32, k as u32));
            }
            head += 1;
        }
        Ok(Group {
            degree,
            generators: gens.to_vec(),
            elements,
            index,
            tree,
            limits,
            cache: Cache::default(),
        })
    }

    /// Convenience constructor from cycle-notation generator strings.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Group> {
        let perms = gens
            .iter()
            .map(|g| Perm::parse(g, degree))
            .collect::<Result<Vec<_>>>()?;
        Group::generate(degree, &perms)
    }

    pub fn trivial(degree: usize) -> Group {
        Group::generate(degree, &[]).expect("trivial group")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Returns a copy of the group carrying different caps.
    pub fn with_limits(mut self, limits: Limits) -> Group {
        self.limits = limits;
        self
    }

    pub fn index_of(&self, x: &Perm) -> Option<usize> {
        self.index.get(x).map(|&i| i as usize)
    }

    pub fn contains(&self, x: &Perm) -> bool {
        self.index.contains_key(x)
    }

    pub(crate) fn require(&self, x: &Perm) -> Result<usize> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: x.degree(),
            });
        }
        self.index_of(x)
            .ok_or_else(|| Error::NotInGroup(x.to_string()))
    }

    fn table(&self) -> Option<&[u32]> {
        self.cache
            .table
            .get_or_init(|| {
                let n = self.order();
                if n > TABLE_MAX {
                    return None;
                }
                let ng = self.generators.len();
                let mut right = vec![0u32; n * ng];
                for (i, x) in self.elements.iter().enumerate() {
                    for (k, g) in self.generators.iter().enumerate() {
                        right[i * ng + k] = self.index[&x.then(g)];
                    }
                }
                let mut table = vec![0u32; n * n];
                for i in 0..n {
                    let row = &mut table[i * n..(i + 1) * n];
                    row[0] = i as u32;
                    for j in 1..n {
                        let (parent, k) = self.tree[j];
                        row[j] = right[row[parent as usize] as usize * ng + k as usize];
                    }
                }
                Some(table)
            })
            .as_deref()
    }

    /// Index of `elements[i] * elements[j]` (apply `i`, then `j`).
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match self.table() {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.mul_direct(i, j),
        }
    }

    fn mul_direct(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].then(&self.elements[j])] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.cache.inverses.get_or_init(|| {
            self.elements
                .iter()
                .map(|x| self.index[&x.inverse()])
                .collect()
        })[i] as usize
    }

    /// Index of `g^-1 x g`.
    pub(crate) fn conj(&self, x: usize, g: usize) -> usize {
        match self.table() {
            Some(_) => self.mul(self.mul(self.inv(g), x), g),
            None => {
                let y = self.elements[self.inv(g)]
                    .then(&self.elements[x])
                    .then(&self.elements[g]);
                self.index[&y] as usize
            }
        }
    }

    pub(crate) fn commutes(&self, x: usize, y: usize) -> bool {
        let (a, b) = (&self.elements[x], &self.elements[y]);
        a.images()
            .iter()
            .zip(b.images())
            .all(|(&ai, &bi)| b.images()[ai as usize] == a.images()[bi as usize])
    }

    /// Element orders by index.
    pub fn element_orders(&self) -> &[u64] {
        self.cache
            .orders
            .get_or_init(|| self.elements.iter().map(Perm::order).collect())
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.element_orders()[i]
    }

    /// Histogram of element orders.
    pub fn element_order_profile(&self) -> BTreeMap<u64, usize> {
        let mut profile = BTreeMap::new();
        for &o in self.element_orders() {
            *profile.entry(o).or_insert(0) += 1;
        }
        profile
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.element_orders()
            .iter()
            .fold(1, |acc, &o| crate::arith::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].then(&g[j]) == g[j].then(&g[i])))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders()
            .iter()
            .any(|&o| o as usize == self.order())
    }

    /// `C_G(x) = { g : gx = xg }`.
    pub fn centralizer(&self, x: &Perm) -> Result<Group> {
        let xi = self.require(x)?;
        Ok(self.to_group(&self.centralizer_subset(xi)))
    }

    pub(crate) fn centralizer_subset(&self, x: usize) -> Subset {
        let members: Vec<usize> = (0..self.order()).filter(|&g| self.commutes(x, g)).collect();
        self.subset_from_members(&members)
    }

    pub(crate) fn centralizer_order(&self, x: usize) -> usize {
        (0..self.order()).filter(|&g| self.commutes(x, g)).count()
    }

    /// `<x> = { x^k }`.
    pub fn cyclic_subgroup(&self, x: &Perm) -> Result<Group> {
        self.require(x)?;
        Group::generate_with(self.degree, std::slice::from_ref(x), self.limits)
    }

    /// `true` when every element of `sub` lies in `self`.
    pub fn contains_group(&self, sub: &Group) -> bool {
        sub.degree == self.degree && sub.generators.iter().all(|g| self.contains(g))
    }

    /// `true` when `sub` is a subgroup of `self` closed under conjugation.
    pub fn is_normal_subgroup(&self, sub: &Group) -> bool {
        self.contains_group(sub)
            && self
                .generators
                .iter()
                .all(|g| sub.generators.iter().all(|h| sub.contains(&g.inverse().then(h).then(g))))
    }

    /// Rebuilds a subset of `self` as a stand-alone group.
    pub(crate) fn to_group(&self, s: &Subset) -> Group {
        let gens: Vec<Perm> = s.gens.iter().map(|&i| self.elements[i as usize].clone()).collect();
        Group::generate_with(self.degree, &gens, self.limits).expect("subgroup of an enumerated group")
    }

    /// Maps a subgroup given as a [`Group`] onto indices of `self`.
    pub(crate) fn subset_of(&self, sub: &Group) -> Result<Subset> {
        let gens = sub
            .generators
            .iter()
            .map(|g| self.require(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&gens))
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Equality of element sets.
impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.elements.iter().all(|x| other.contains(x))
    }
}

impl Eq for Group {}
