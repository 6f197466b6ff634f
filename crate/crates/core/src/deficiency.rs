//! Deficient elements, the defect of a group, and the structural property
//! suites that every group of small defect must satisfy.
//!
//! An element `x ≠ 1` is deficient when `|C_G(x)| > |x|`. Deficiency is
//! constant on conjugacy classes, so it is decided once per class
//! representative. The identity is never deficient, and the trivial group
//! has defect 0.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::arith::{factorize, is_prime, p_part, prime_divisors, prime_power_base};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, Group};
use crate::perm::Perm;

/// The defect of a group together with the data it was computed from.
#[derive(Debug, Clone)]
pub struct DeficiencyReport {
    pub group_order: usize,
    pub defect: usize,
    pub deficient_classes: Vec<ConjugacyClass>,
    pub nondeficient_classes: Vec<ConjugacyClass>,
    /// Every non-trivial element has prime-power order.
    pub is_cp: bool,
    pub order_profile: BTreeMap<u64, usize>,
}

impl DeficiencyReport {
    /// Element orders occurring in deficient classes.
    pub fn deficient_element_orders(&self) -> BTreeSet<u64> {
        self.deficient_classes.iter().map(|c| c.element_order).collect()
    }

    /// Every non-trivial element has prime order.
    pub fn all_prime_order(&self) -> bool {
        self.order_profile
            .keys()
            .all(|&o| o == 1 || is_prime(o))
    }
}

fn class_is_deficient(class: &ConjugacyClass) -> bool {
    class.centralizer_order as u64 > class.element_order
}

/// `<x> < C_G(x)` for `x ≠ 1`.
pub fn is_deficient(group: &Group, x: &Perm) -> Result<bool> {
    let i = group.require(x)?;
    if i == 0 {
        return Err(Error::Precondition(
            "deficiency is only defined for non-identity elements".into(),
        ));
    }
    Ok(group.centralizer_order(i) as u64 > group.element_order(i))
}

/// Counts the deficient non-trivial classes.
pub fn defect(group: &Group) -> DeficiencyReport {
    let (deficient, nondeficient): (Vec<_>, Vec<_>) = group
        .conjugacy_classes()
        .iter()
        .filter(|c| !c.is_identity())
        .cloned()
        .partition(class_is_deficient);
    let order_profile = group.element_order_profile();
    let is_cp = order_profile
        .keys()
        .all(|&o| o == 1 || prime_power_base(o).is_some());
    DeficiencyReport {
        group_order: group.order(),
        defect: deficient.len(),
        deficient_classes: deficient,
        nondeficient_classes: nondeficient,
        is_cp,
        order_profile,
    }
}

/// The defect 0 criterion as a biconditional: defect 0 holds exactly when
/// every non-trivial element has prime order and every Sylow subgroup has
/// prime order. Returns whether the two sides agree.
pub fn defect_zero_criterion(group: &Group) -> bool {
    let report = defect(group);
    let sylows_prime = prime_divisors(group.order() as u64).into_iter().all(|p| {
        group
            .sylow_subgroup(p)
            .map(|s| s.order() as u64 == p)
            .unwrap_or(false)
    });
    (report.defect == 0) == (report.all_prime_order() && sylows_prime)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "n/a",
        })
    }
}

impl From<bool> for Outcome {
    fn from(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    /// 1 to 8.
    pub number: u8,
    pub outcome: Outcome,
    pub detail: String,
}

/// The eight structural statements about a group of defect 1.
#[derive(Debug, Clone)]
pub struct DefectOneReport {
    /// The unique prime whose Sylow subgroup is not of prime order, if found.
    pub p: Option<u64>,
    pub sylow_order: usize,
    pub statements: Vec<Statement>,
}

impl DefectOneReport {
    pub fn all_pass(&self) -> bool {
        self.statements.iter().all(|s| s.outcome != Outcome::Fail)
    }

    pub fn statement(&self, number: u8) -> &Statement {
        &self.statements[number as usize - 1]
    }
}

/// Evaluates the eight statements every defect 1 group satisfies:
///
/// 1. non-trivial elements have order `p` or `p^2` for primes `p`;
/// 2. exactly one prime `p` has a Sylow subgroup `P` with `|P| >= p^2`, all
///    other Sylow subgroups have prime order, and `exp(P)` is `p` or `p^2`;
/// 3. all elements of order `p` are conjugate;
/// 4. if `exp(P) = p^2` then `P = C_{p^2}`, or `|Z(P)| = p` and `|P| >= p^3`;
/// 5. if `|P| >= p^3` then `exp(P) = p`, or `exp(P) = p^2` and `|Z(P)| = p`;
///    `Z(P)` is elementary abelian;
/// 6. if `p > 2` then `G` is solvable;
/// 7. if `G > P` then `Z(G) = 1`;
/// 8. a non-trivial proper normal Sylow `r`-subgroup `R` is a Frobenius kernel.
///
/// Several primes with large Sylow subgroups are reported as a failure of
/// statement 2 rather than resolved by picking one.
pub fn defect_one_properties(group: &Group) -> Result<DefectOneReport> {
    let report = defect(group);
    if report.defect != 1 {
        return Err(Error::Precondition(format!(
            "group has defect {}, not 1",
            report.defect
        )));
    }
    let n = group.order() as u64;
    let mut statements = Vec::with_capacity(8);
    let mut push = |number: u8, outcome: Outcome, detail: String| {
        statements.push(Statement {
            number,
            outcome,
            detail,
        })
    };

    let orders_ok = report.order_profile.keys().all(|&o| {
        o == 1
            || is_prime(o)
            || prime_power_base(o).is_some_and(|p| p * p == o)
    });
    let orders: Vec<u64> = report.order_profile.keys().copied().collect();
    push(1, orders_ok.into(), format!("element orders {orders:?}"));

    let large: Vec<u64> = factorize(n)
        .into_iter()
        .filter(|&(_, e)| e >= 2)
        .map(|(p, _)| p)
        .collect();
    let (p, sylow) = match large.as_slice() {
        [p] => (Some(*p), Some(group.sylow_subgroup(*p)?)),
        _ => (None, None),
    };
    let Some((p, sylow)) = p.zip(sylow) else {
        let detail = if large.is_empty() {
            "every Sylow subgroup has prime order".to_string()
        } else {
            format!("inconsistency: several primes {large:?} with non-prime Sylow order")
        };
        push(2, Outcome::Fail, detail);
        for number in 3..=8 {
            push(number, Outcome::NotApplicable, "needs statement 2".into());
        }
        return Ok(DefectOneReport {
            p: None,
            sylow_order: 0,
            statements,
        });
    };
    let sylow_order = sylow.order();
    let exp = sylow.exponent();
    push(
        2,
        (exp == p || exp == p * p).into(),
        format!("p = {p}, |P| = {sylow_order}, exp(P) = {exp}"),
    );

    let order_p_classes: BTreeSet<usize> = (0..group.order())
        .filter(|&i| group.element_order(i) == p)
        .map(|i| group.class_index(i))
        .collect();
    push(
        3,
        (order_p_classes.len() == 1).into(),
        format!("{} class(es) of elements of order {p}", order_p_classes.len()),
    );

    let center_p = sylow.center();
    let z = center_p.order() as u64;
    let big_p = sylow_order as u64 >= p * p * p;
    if exp == p * p {
        let cyclic = sylow_order as u64 == p * p && sylow.is_cyclic();
        push(
            4,
            (cyclic || (z == p && big_p)).into(),
            format!("|Z(P)| = {z}, P cyclic: {}", sylow.is_cyclic()),
        );
    } else {
        push(4, Outcome::NotApplicable, "exp(P) = p".into());
    }

    if big_p {
        let exp_ok = exp == p || (exp == p * p && z == p);
        let center_elementary = center_p.exponent() == p;
        push(
            5,
            (exp_ok && center_elementary).into(),
            format!("exp(P) = {exp}, |Z(P)| = {z}, exp(Z(P)) = {}", center_p.exponent()),
        );
    } else {
        push(5, Outcome::NotApplicable, "|P| < p^3".into());
    }

    if p > 2 {
        push(6, group.is_solvable().into(), format!("p = {p} > 2"));
    } else {
        push(6, Outcome::NotApplicable, "p = 2".into());
    }

    if (sylow_order as u64) < n {
        let zg = group.center().order();
        push(7, (zg == 1).into(), format!("|Z(G)| = {zg}"));
    } else {
        push(7, Outcome::NotApplicable, "G = P".into());
    }

    let normal_sylows: Vec<u64> = prime_divisors(n)
        .into_iter()
        .filter(|&r| p_part(n, r) < n && group.is_sylow_normal(r))
        .collect();
    if normal_sylows.is_empty() {
        push(8, Outcome::NotApplicable, "no proper normal Sylow subgroup".into());
    } else {
        let fs = group.frobenius_structure()?;
        let ok = normal_sylows.iter().all(|&r| {
            fs.as_ref()
                .is_some_and(|f| f.kernel.order() as u64 == p_part(n, r))
        });
        let kernel = fs.map(|f| f.kernel.order());
        push(
            8,
            ok.into(),
            format!("normal Sylow primes {normal_sylows:?}, Frobenius kernel order {kernel:?}"),
        );
    }

    Ok(DefectOneReport {
        p: Some(p),
        sylow_order,
        statements,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrichotomyBranch {
    /// Trivial, or a `p`-group of exponent `p`.
    Nilpotent,
    /// A Frobenius group `P ⋊ C_q` with `exp(P) = p`.
    SolvableFrobenius,
    /// `A_5`.
    NonSolvable,
}

#[derive(Debug, Clone)]
pub struct TrichotomyReport {
    pub branch: TrichotomyBranch,
    pub holds: bool,
    pub detail: String,
}

/// For a group whose non-trivial elements all have prime order: nilpotent
/// means trivial or exponent `p`; solvable non-nilpotent means a Frobenius
/// group with kernel a Sylow `p`-subgroup of exponent `p` and complement of
/// prime order; otherwise the group has order 60 and is simple.
pub fn prime_order_trichotomy(group: &Group) -> Result<TrichotomyReport> {
    if !defect(group).all_prime_order() {
        return Err(Error::Precondition(
            "some non-trivial element does not have prime order".into(),
        ));
    }
    let n = group.order();
    if group.is_nilpotent() {
        let holds = n == 1
            || prime_power_base(n as u64).is_some_and(|p| group.exponent() == p);
        return Ok(TrichotomyReport {
            branch: TrichotomyBranch::Nilpotent,
            holds,
            detail: format!("order {n}, exponent {}", group.exponent()),
        });
    }
    if group.is_solvable() {
        let fs = group.frobenius_structure()?;
        let (holds, detail) = match fs {
            Some(f) => {
                let k = f.kernel.order() as u64;
                let c = f.complement.order() as u64;
                let holds = prime_power_base(k).is_some_and(|p| {
                    f.kernel.exponent() == p && p_part(n as u64, p) == k && is_prime(c) && c != p
                });
                (holds, format!("kernel order {k}, complement order {c}"))
            }
            None => (false, "no Frobenius structure".to_string()),
        };
        return Ok(TrichotomyReport {
            branch: TrichotomyBranch::SolvableFrobenius,
            holds,
            detail,
        });
    }
    let simple = group.is_simple()?;
    Ok(TrichotomyReport {
        branch: TrichotomyBranch::NonSolvable,
        holds: n == 60 && simple,
        detail: format!("order {n}, simple: {simple}"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientShape {
    /// `G/R` cyclic of order a power of a prime other than `r`.
    CyclicPrimePower,
    /// `r` odd and `G/R` generalized quaternion.
    GeneralizedQuaternion,
    /// `|G/R| = r^a t^b` with `t ≡ 1 (mod r^a)` prime and cyclic Sylow subgroups.
    CyclicSylows,
}

/// The check for one prime `r` with `O_r(G) > 1`.
#[derive(Debug, Clone)]
pub struct QuotientCase {
    pub r: u64,
    /// `|O_r(G)|`, the largest normal `r`-subgroup.
    pub r_order: usize,
    pub quotient_order: usize,
    pub shape: Option<QuotientShape>,
    pub at_most_two_primes: bool,
    pub metabelian: bool,
}

impl QuotientCase {
    pub fn holds(&self) -> bool {
        self.shape.is_some() && self.at_most_two_primes && self.metabelian
    }
}

#[derive(Debug, Clone)]
pub enum QuotientReport {
    Evaluated(Vec<QuotientCase>),
    /// The group is above the quotient cap; this is never a pass.
    NotEvaluated { order: usize },
}

impl QuotientReport {
    /// `None` when not evaluated.
    pub fn holds(&self) -> Option<bool> {
        match self {
            QuotientReport::Evaluated(cases) => Some(cases.iter().all(QuotientCase::holds)),
            QuotientReport::NotEvaluated { .. } => None,
        }
    }
}

/// Whether [`prime_power_quotients`] applies: solvable, every element of
/// prime-power order, and some non-trivial normal `r`-subgroup.
pub fn quotient_check_applies(group: &Group) -> bool {
    group.order() > 1 && defect(group).is_cp && group.is_solvable()
}

/// For a solvable group with all elements of prime-power order: for every
/// prime `r` with `R = O_r(G) > 1`, the quotient `G/R` is built from a coset
/// table and must be cyclic of prime-power order prime to `r`, generalized
/// quaternion with `r` odd, or of order `r^a t^b` (`t ≡ 1 mod r^a`) with
/// cyclic Sylow subgroups. Also `|G|` has at most two prime divisors and
/// `G/R` is metabelian.
pub fn prime_power_quotients(group: &Group) -> Result<QuotientReport> {
    let report = defect(group);
    if !report.is_cp || !group.is_solvable() {
        return Err(Error::Precondition(
            "needs a solvable group with all elements of prime-power order".into(),
        ));
    }
    let n = group.order();
    if n > group.limits().quotient {
        return Ok(QuotientReport::NotEvaluated { order: n });
    }
    let primes = prime_divisors(n as u64);
    let mut cases = Vec::new();
    for &r in &primes {
        let o_r = group.o_p_subset(r)?;
        if o_r.order() == 1 {
            continue;
        }
        let q = group.quotient_by(&o_r);
        cases.push(QuotientCase {
            r,
            r_order: o_r.order(),
            quotient_order: q.order(),
            shape: quotient_shape(&q, r)?,
            at_most_two_primes: primes.len() <= 2,
            metabelian: q.derived_subgroup().derived_subgroup().order() == 1,
        });
    }
    if cases.is_empty() {
        return Err(Error::Precondition("no non-trivial normal r-subgroup".into()));
    }
    Ok(QuotientReport::Evaluated(cases))
}

fn quotient_shape(q: &Group, r: u64) -> Result<Option<QuotientShape>> {
    let m = q.order() as u64;
    if q.is_cyclic() && (m == 1 || prime_power_base(m).is_some_and(|t| t != r)) {
        return Ok(Some(QuotientShape::CyclicPrimePower));
    }
    let involutions = q.element_orders().iter().filter(|&&o| o == 2).count();
    if r % 2 == 1 && m >= 8 && m.is_power_of_two() && involutions == 1 && !q.is_cyclic() {
        return Ok(Some(QuotientShape::GeneralizedQuaternion));
    }
    let r_a = p_part(m, r);
    let others: Vec<u64> = prime_divisors(m).into_iter().filter(|&t| t != r).collect();
    let form_ok = match others.as_slice() {
        [] => true,
        [t] => (t - 1) % r_a == 0,
        _ => false,
    };
    if form_ok {
        let mut sylows_cyclic = true;
        for t in prime_divisors(m) {
            sylows_cyclic &= q.sylow_subgroup(t)?.is_cyclic();
        }
        if sylows_cyclic {
            return Ok(Some(QuotientShape::CyclicSylows));
        }
    }
    Ok(None)
}
