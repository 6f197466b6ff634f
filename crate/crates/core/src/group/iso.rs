use std::collections::BTreeMap;

use super::Group;
use crate::error::Result;

impl Group {
    /// Searches for an isomorphism `self -> other` by backtracking over
    /// generator images, pruned by element order and class size.
    pub fn is_isomorphic(&self, other: &Group) -> Result<bool> {
        let n = self.order();
        if n != other.order() {
            return Ok(false);
        }
        self.limits.check("is_isomorphic", self.limits.isomorphism, n)?;
        if self.class_signature() != other.class_signature() {
            return Ok(false);
        }
        let gens = self.small_generating_set();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let key = self.fingerprint(g);
                (0..n).filter(|&h| other.fingerprint(h) == key).collect()
            })
            .collect();
        let mut images = Vec::with_capacity(gens.len());
        Ok(self.extend(other, &gens, &candidates, &mut images))
    }

    fn fingerprint(&self, i: usize) -> (u64, usize) {
        let class = &self.conjugacy_classes()[self.class_index(i)];
        (class.element_order, class.size())
    }

    /// Multiset of (element order, class size) over all classes.
    fn class_signature(&self) -> BTreeMap<(u64, usize), usize> {
        let mut sig = BTreeMap::new();
        for c in self.conjugacy_classes() {
            *sig.entry((c.element_order, c.size())).or_insert(0) += 1;
        }
        sig
    }

    fn small_generating_set(&self) -> Vec<usize> {
        let mut h = self.trivial_subset();
        let mut gens = Vec::new();
        for g in &self.generators {
            let gi = self.index[g] as usize;
            if !h.contains(gi) {
                h = self.join(&h, gi);
                gens.push(gi);
            }
        }
        gens
    }

    fn extend(
        &self,
        other: &Group,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
    ) -> bool {
        let depth = images.len();
        if depth == gens.len() {
            return true;
        }
        for &h in &candidates[depth] {
            images.push(h);
            if self.consistent(other, &gens[..=depth], images) && self.extend(other, gens, candidates, images) {
                return true;
            }
            images.pop();
        }
        false
    }

    /// Whether `gens[i] -> images[i]` extends to an injective homomorphism on
    /// `<gens>`, checked along every edge of its Cayley graph.
    fn consistent(&self, other: &Group, gens: &[usize], images: &[usize]) -> bool {
        let mut phi = vec![usize::MAX; self.order()];
        let mut used = vec![false; other.order()];
        phi[0] = 0;
        used[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            for (&g, &h) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let py = other.mul(phi[x], h);
                if phi[y] == usize::MAX {
                    if used[py] {
                        return false;
                    }
                    used[py] = true;
                    phi[y] = py;
                    queue.push(y);
                } else if phi[y] != py {
                    return false;
                }
            }
            head += 1;
        }
        true
    }
}
