use std::collections::HashSet;

use super::{Group, Subset};
use crate::arith::{gcd, is_prime, p_part, prime_divisors, prime_power_base};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Kernel and complement of a Frobenius group `K ⋊ B`.
#[derive(Debug, Clone)]
pub struct FrobeniusStructure {
    pub kernel: Group,
    pub complement: Group,
    /// `|K| ≡ 1 (mod |B|)`.
    pub congruence_holds: bool,
}

impl Group {
    fn is_p_element(&self, i: usize, p: u64) -> bool {
        let o = self.element_order(i);
        o > 1 && prime_power_base(o) == Some(p)
    }

    /// A Sylow `p`-subgroup, grown inside normalizers from a cyclic
    /// `p`-subgroup until it reaches the full `p`-part of `|G|`.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Group> {
        Ok(self.to_group(&self.sylow_subset(p)?))
    }

    pub(crate) fn sylow_subset(&self, p: u64) -> Result<Subset> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        let target = p_part(self.order() as u64, p) as usize;
        if target == 1 {
            return Err(Error::Precondition(format!(
                "{p} does not divide the group order {}",
                self.order()
            )));
        }
        // start from a p-element of largest order
        let seed = (0..self.order())
            .filter(|&i| self.is_p_element(i, p))
            .max_by_key(|&i| (self.element_order(i), std::cmp::Reverse(i)))
            .expect("Cauchy: a p-element exists");
        let mut h = self.closure(&[seed]);
        while h.order() < target {
            let normalizer = self.normalizer_members(&h);
            // an element of order p in N(H)/H
            let g = normalizer
                .into_iter()
                .find(|&g| !h.contains(g) && h.contains(self.power(g, p)))
                .expect("Sylow: p divides [N(H):H] while H is not Sylow");
            h = self.join(&h, g);
        }
        debug_assert_eq!(h.order(), target);
        Ok(h)
    }

    pub(crate) fn power(&self, i: usize, e: u64) -> usize {
        self.index[&self.elements[i].pow(e)] as usize
    }

    /// `true` when the Sylow `p`-subgroup is normal, i.e. unique. That holds
    /// exactly when the `p`-elements together with 1 number the full `p`-part.
    pub fn is_sylow_normal(&self, p: u64) -> bool {
        let count = 1 + (0..self.order()).filter(|&i| self.is_p_element(i, p)).count();
        count as u64 == p_part(self.order() as u64, p)
    }

    /// The normal closure of all commutators `[g, h]`.
    pub fn derived_subgroup(&self) -> Group {
        self.to_group(&self.derived_subset())
    }

    pub(crate) fn derived_subset(&self) -> Subset {
        let gens = &self.generators;
        let mut comms = Vec::new();
        for a in gens {
            for b in gens {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() {
                    comms.push(self.index[&c] as usize);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Derived series `G = G0 > G1 > ...` down to its stable term.
    pub fn derived_series(&self) -> Vec<Group> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    /// Finite nilpotency: every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> bool {
        prime_divisors(self.order() as u64)
            .into_iter()
            .all(|p| self.is_sylow_normal(p))
    }

    /// All normal subgroups, sorted by order and then by element set.
    ///
    /// Each is a union of conjugacy classes: the lattice is generated by the
    /// normal closures of single classes, joined until nothing new appears.
    pub fn normal_subgroups(&self) -> Result<Vec<Group>> {
        Ok(self
            .normal_subsets()?
            .iter()
            .map(|s| self.to_group(s))
            .collect())
    }

    pub(crate) fn normal_subsets(&self) -> Result<Vec<Subset>> {
        self.limits
            .check("normal_subgroups", self.limits.normal_subgroups, self.order())?;
        let atoms: Vec<Subset> = {
            let mut seen = HashSet::new();
            self.conjugacy_classes()
                .iter()
                .filter(|c| !c.is_identity())
                .map(|c| self.normal_closure(&[c.rep_index]))
                .filter(|s| seen.insert(s.member.clone()))
                .collect()
        };
        let mut found: Vec<Subset> = vec![self.trivial_subset()];
        let mut keys: HashSet<Vec<bool>> = HashSet::new();
        keys.insert(found[0].member.clone());
        let mut head = 0;
        while head < found.len() {
            for atom in &atoms {
                if atom.is_subset_of(&found[head]) {
                    continue;
                }
                let mut joined = found[head].clone();
                for &g in &atom.gens {
                    joined = self.join(&joined, g as usize);
                }
                if keys.insert(joined.member.clone()) {
                    found.push(joined);
                }
            }
            head += 1;
        }
        found.sort_by_cached_key(|s| (s.order(), s.sorted()));
        Ok(found)
    }

    /// Non-abelian with no normal subgroups besides 1 and G.
    pub fn is_simple(&self) -> Result<bool> {
        self.limits
            .check("is_simple", self.limits.normal_subgroups, self.order())?;
        if self.order() == 1 || self.is_abelian() {
            return Ok(false);
        }
        Ok(self
            .conjugacy_classes()
            .iter()
            .filter(|c| !c.is_identity())
            .all(|c| self.normal_closure(&[c.rep_index]).order() == self.order()))
    }

    /// The Frobenius kernel and a complement, when `G` is a Frobenius group.
    pub fn frobenius_structure(&self) -> Result<Option<FrobeniusStructure>> {
        let n = self.order();
        self.limits
            .check("frobenius_structure", self.limits.normal_subgroups, n)?;
        if n < 6 || self.is_abelian() {
            return Ok(None);
        }
        for kernel in self.normal_subsets()? {
            let k = kernel.order();
            if k == 1 || k == n || gcd(k as u64, (n / k) as u64) != 1 {
                continue;
            }
            if !self.kernel_condition(&kernel) {
                continue;
            }
            if let Some(complement) = self.complement(&kernel) {
                return Ok(Some(FrobeniusStructure {
                    congruence_holds: k % complement.order() == 1,
                    kernel: self.to_group(&kernel),
                    complement: self.to_group(&complement),
                }));
            }
        }
        Ok(None)
    }

    /// `C_G(k) ≤ K` for every `k ∈ K \ {1}`; checked on class representatives
    /// since `K` is normal.
    pub(crate) fn kernel_condition(&self, kernel: &Subset) -> bool {
        self.conjugacy_classes()
            .iter()
            .filter(|c| !c.is_identity() && kernel.contains(c.rep_index))
            .all(|c| {
                kernel.order().is_multiple_of(c.centralizer_order)
                    && (0..self.order())
                        .filter(|&g| self.commutes(c.rep_index, g))
                        .all(|g| kernel.contains(g))
            })
    }

    /// A subgroup `B` with `B ∩ K = 1` and `|K||B| = |G|`. Grown greedily from
    /// the first element outside `K`: a subgroup avoiding `K` lies in a single
    /// Frobenius complement, so the greedy pass collects all of one.
    fn complement(&self, kernel: &Subset) -> Option<Subset> {
        let target = self.order() / kernel.order();
        let seed = (0..self.order()).find(|&i| !kernel.contains(i))?;
        let hits_kernel = |y: usize| y != 0 && kernel.contains(y);
        let mut b = self.join_until(&self.trivial_subset(), seed, hits_kernel)?;
        for y in 0..self.order() {
            if b.order() == target {
                break;
            }
            if kernel.contains(y) || b.contains(y) {
                continue;
            }
            if let Some(bigger) = self.join_until(&b, y, hits_kernel) {
                b = bigger;
            }
        }
        (b.order() == target).then_some(b)
    }

    /// The largest normal `r`-subgroup `O_r(G)`.
    pub fn greatest_normal_p_subgroup(&self, r: u64) -> Result<Group> {
        Ok(self.to_group(&self.o_p_subset(r)?))
    }

    pub(crate) fn o_p_subset(&self, r: u64) -> Result<Subset> {
        Ok(self
            .normal_subsets()?
            .into_iter()
            .filter(|s| s.order() == 1 || prime_power_base(s.order() as u64) == Some(r))
            .max_by_key(Subset::order)
            .expect("trivial subgroup is always present"))
    }

    /// `G/N` as the permutation action of `G` on the right cosets of `N`.
    pub fn quotient(&self, normal: &Group) -> Result<Group> {
        self.limits
            .check("quotient", self.limits.quotient, self.order())?;
        if !self.is_normal_subgroup(normal) {
            return Err(Error::Precondition("quotient by a non-normal subgroup".into()));
        }
        let n = self.subset_of(normal)?;
        Ok(self.quotient_by(&n))
    }

    pub(crate) fn quotient_by(&self, n: &Subset) -> Group {
        let mut coset = vec![u32::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if coset[g] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for &x in &n.elems {
                coset[self.mul(x as usize, g)] = id;
            }
        }
        let index = reps.len();
        let gens: Vec<Perm> = self
            .generators
            .iter()
            .map(|s| {
                let si = self.index[s] as usize;
                let images = reps
                    .iter()
                    .map(|&r| coset[self.mul(r, si)])
                    .collect();
                Perm::from_images(images).expect("right multiplication permutes cosets")
            })
            .collect();
        let q = Group::generate_with(index, &gens, self.limits).expect("quotient is no larger than G");
        debug_assert_eq!(q.order(), index);
        q
    }
}
