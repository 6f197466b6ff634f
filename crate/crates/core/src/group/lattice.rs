use std::collections::HashMap;

use super::{Group, Subset};
use crate::error::Result;

/// One subgroup found by [`Group::subgroup_lattice`].
#[derive(Debug, Clone)]
pub struct SubgroupRecord {
    /// Sorted indices into the parent group; doubles as the fingerprint.
    pub elements: Vec<u32>,
    /// Parent indices generating the subgroup.
    pub generators: Vec<u32>,
}

impl SubgroupRecord {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

impl Group {
    /// Every subgroup exactly once, as stand-alone groups ordered by order and
    /// then by fingerprint.
    pub fn all_subgroups(&self) -> Result<Vec<Group>> {
        Ok(self
            .subgroup_lattice()?
            .iter()
            .map(|r| {
                let gens: Vec<usize> = r.generators.iter().map(|&g| g as usize).collect();
                self.to_group(&self.closure(&gens))
            })
            .collect())
    }

    /// Every subgroup as a parent index set.
    ///
    /// Seeds with the cyclic subgroups, then closes `H ∪ {g}` for every known
    /// `H` and every `g ∉ H`, one `g` per right coset of `H` (all of `Hg`
    /// give the same join). Deduplication is by exact element set.
    pub fn subgroup_lattice(&self) -> Result<Vec<SubgroupRecord>> {
        let n = self.order();
        self.limits
            .check("all_subgroups", self.limits.all_subgroups, n)?;
        let mut found: Vec<Subset> = Vec::new();
        let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
        let key = |s: &Subset| -> Vec<u64> {
            let mut words = vec![0u64; n.div_ceil(64)];
            for &x in &s.elems {
                words[x as usize / 64] |= 1 << (x % 64);
            }
            words
        };
        let trivial = self.trivial_subset();
        seen.insert(key(&trivial), 0);
        found.push(trivial);
        let mut head = 0;
        while head < found.len() {
            let h = found[head].clone();
            let mut done = h.member.clone();
            for g in 0..n {
                if done[g] {
                    continue;
                }
                // every element of Hg gives the same join
                for &x in &h.elems {
                    done[self.mul(x as usize, g)] = true;
                }
                let k = self.join(&h, g);
                let k_key = key(&k);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(k_key) {
                    e.insert(found.len());
                    found.push(k);
                }
            }
            head += 1;
        }
        let mut records: Vec<SubgroupRecord> = found
            .into_iter()
            .map(|s| SubgroupRecord {
                elements: s.sorted(),
                generators: s.gens,
            })
            .collect();
        records.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        Ok(records)
    }
}
