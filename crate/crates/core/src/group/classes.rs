use super::Group;
use crate::perm::Perm;

/// A conjugacy class `x^G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Minimal member under the canonical permutation ordering.
    pub representative: Perm,
    pub rep_index: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub centralizer_order: usize,
    pub element_order: u64,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_identity(&self) -> bool {
        self.rep_index == 0
    }
}

impl Group {
    /// Conjugacy classes ordered by representative; the identity class is
    /// first. Computed once and cached.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().0
    }

    /// Position in [`Group::conjugacy_classes`] of the class of element `i`.
    pub fn class_index(&self, i: usize) -> usize {
        self.class_data().1[i] as usize
    }

    fn class_data(&self) -> &(Vec<ConjugacyClass>, Vec<u32>) {
        self.cache.classes.get_or_init(|| {
            let n = self.order();
            let gens: Vec<usize> = self.generators.iter().map(|g| self.index[g] as usize).collect();
            let mut seen = vec![false; n];
            let mut orbits: Vec<Vec<usize>> = Vec::new();
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                seen[start] = true;
                let mut orbit = vec![start];
                let mut head = 0;
                while head < orbit.len() {
                    let x = orbit[head];
                    for &g in &gens {
                        let y = self.conj(x, g);
                        if !seen[y] {
                            seen[y] = true;
                            orbit.push(y);
                        }
                    }
                    head += 1;
                }
                orbit.sort_unstable();
                orbits.push(orbit);
            }
            let mut classes: Vec<ConjugacyClass> = orbits
                .into_iter()
                .map(|members| {
                    let rep_index = *members
                        .iter()
                        .min_by(|&&a, &&b| self.elements[a].cmp(&self.elements[b]))
                        .unwrap();
                    ConjugacyClass {
                        representative: self.elements[rep_index].clone(),
                        rep_index,
                        centralizer_order: self.centralizer_order(rep_index),
                        element_order: self.element_order(rep_index),
                        members,
                    }
                })
                .collect();
            classes.sort_by(|a, b| a.representative.cmp(&b.representative));
            let mut map = vec![0u32; n];
            for (c, class) in classes.iter().enumerate() {
                for &m in &class.members {
                    map[m] = c as u32;
                }
            }
            (classes, map)
        })
    }

    /// `Z(G)`, the union of the singleton classes.
    pub fn center(&self) -> Group {
        let members: Vec<usize> = self
            .conjugacy_classes()
            .iter()
            .filter(|c| c.size() == 1)
            .map(|c| c.rep_index)
            .collect();
        let mut sorted = members;
        sorted.sort_unstable();
        self.to_group(&self.subset_from_members(&sorted))
    }

    /// Elements commuting with every generator; an independent route to `Z(G)`.
    pub fn center_by_generators(&self) -> Vec<usize> {
        let gens: Vec<usize> = self.generators.iter().map(|g| self.index[g] as usize).collect();
        (0..self.order())
            .filter(|&x| gens.iter().all(|&g| self.commutes(x, g)))
            .collect()
    }
}
