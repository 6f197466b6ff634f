//! Subgroups as index sets of a parent group.

use super::Group;

/// A subgroup of a parent [`Group`], stored as parent element indices.
#[derive(Clone, Debug)]
pub(crate) struct Subset {
    pub member: Vec<bool>,
    /// Members in insertion order; the identity comes first.
    pub elems: Vec<u32>,
    pub gens: Vec<u32>,
}

impl Subset {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.member[i]
    }

    pub fn sorted(&self) -> Vec<u32> {
        let mut v = self.elems.clone();
        v.sort_unstable();
        v
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.elems.iter().all(|&x| other.member[x as usize])
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.member == other.member
    }
}

impl Eq for Subset {}

impl Group {
    pub(crate) fn trivial_subset(&self) -> Subset {
        let mut member = vec![false; self.order()];
        member[0] = true;
        Subset {
            member,
            elems: vec![0],
            gens: Vec::new(),
        }
    }

    pub(crate) fn full_subset(&self) -> Subset {
        Subset {
            member: vec![true; self.order()],
            elems: (0..self.order() as u32).collect(),
            gens: (0..self.generators.len())
                .map(|k| self.index[&self.generators[k]])
                .collect(),
        }
    }

    /// `<H, g>` by Dimino's coset method.
    pub(crate) fn join(&self, h: &Subset, g: usize) -> Subset {
        self.join_until(h, g, |_| false)
            .expect("unbounded join never aborts")
    }

    /// `<H, g>`, or `None` as soon as an element satisfying `stop` appears.
    pub(crate) fn join_until(
        &self,
        h: &Subset,
        g: usize,
        stop: impl Fn(usize) -> bool,
    ) -> Option<Subset> {
        if h.member[g] {
            return Some(h.clone());
        }
        let mut k = h.clone();
        k.gens.push(g as u32);
        let base: Vec<u32> = h.elems.clone();
        let gens = k.gens.clone();
        let mut reps: Vec<u32> = vec![0];
        let add_coset = |k: &mut Subset, t: usize| -> bool {
            for &x in &base {
                let y = self.mul(x as usize, t);
                if stop(y) {
                    return false;
                }
                k.member[y] = true;
                k.elems.push(y as u32);
            }
            true
        };
        if !add_coset(&mut k, g) {
            return None;
        }
        reps.push(g as u32);
        let mut head = 1;
        while head < reps.len() {
            let r = reps[head] as usize;
            for &s in &gens {
                let t = self.mul(r, s as usize);
                if !k.member[t] {
                    if !add_coset(&mut k, t) {
                        return None;
                    }
                    reps.push(t as u32);
                }
            }
            head += 1;
        }
        Some(k)
    }

    pub(crate) fn closure(&self, gens: &[usize]) -> Subset {
        gens.iter()
            .fold(self.trivial_subset(), |h, &g| self.join(&h, g))
    }

    /// Wraps a member list already known to be a subgroup, finding a
    /// generating set greedily in index order.
    pub(crate) fn subset_from_members(&self, members: &[usize]) -> Subset {
        let mut h = self.trivial_subset();
        for &x in members {
            if !h.member[x] {
                h = self.join(&h, x);
            }
        }
        debug_assert_eq!(h.order(), members.len());
        h
    }

    /// `N_G(H)` as a member list.
    pub(crate) fn normalizer_members(&self, h: &Subset) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| h.gens.iter().all(|&x| h.member[self.conj(x as usize, g)]))
            .collect()
    }

    /// Smallest normal subgroup containing `gens`.
    pub(crate) fn normal_closure(&self, gens: &[usize]) -> Subset {
        let mut h = self.closure(gens);
        let outer: Vec<usize> = self.full_subset().gens.iter().map(|&g| g as usize).collect();
        loop {
            let mut grew = false;
            let current: Vec<u32> = h.gens.clone();
            for &x in &current {
                for &g in &outer {
                    let y = self.conj(x as usize, g);
                    if !h.member[y] {
                        h = self.join(&h, y);
                        grew = true;
                    }
                }
            }
            if !grew {
                return h;
            }
        }
    }
}
