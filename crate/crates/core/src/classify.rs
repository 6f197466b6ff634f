//! Which structural form a group of defect 0 or 1 takes.
//!
//! Defect 0 groups are trivial, cyclic of prime order, or Frobenius groups
//! `C_p ⋊ C_q`. Defect 1 groups are `C_4`, `Q_8`, `E_{2^s} ⋊ C_q` for a
//! Mersenne prime `q = 2^s - 1`, `C_q ⋊ C_4` for a prime `q ≡ 1 (mod 4)`,
//! `D_18`, `A_5` and `PSL(2,7)`.
//!
//! Forms are recognized from invariants (order, Sylow subgroups, Frobenius
//! kernel, simplicity) and never by isomorphism search. A simple group of
//! order 60 is taken to be `A_5` and one of order 168 to be `PSL(2,7)`; both
//! are unique up to isomorphism.

use std::fmt;

use crate::arith::{factorize, is_prime};
use crate::deficiency::defect;
use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    Trivial,
    Cp { p: u64 },
    FrobeniusPq { p: u64, q: u64 },
    C4,
    Q8,
    MersenneFrobenius { s: u32, q: u64 },
    CqC4 { q: u64 },
    D18,
    A5,
    Psl27,
    OutsideD0D1 { defect: usize },
}

impl Form {
    /// The defect every group of this form has.
    pub fn defect(&self) -> usize {
        match self {
            Form::Trivial | Form::Cp { .. } | Form::FrobeniusPq { .. } => 0,
            Form::OutsideD0D1 { defect } => *defect,
            _ => 1,
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Trivial => f.write_str("Trivial"),
            Form::Cp { p } => write!(f, "Cp({p})"),
            Form::FrobeniusPq { p, q } => write!(f, "FrobeniusPQ({p},{q})"),
            Form::C4 => f.write_str("C4"),
            Form::Q8 => f.write_str("Q8"),
            Form::MersenneFrobenius { s, q } => write!(f, "MersenneFrobenius({s},{q})"),
            Form::CqC4 { q } => write!(f, "CqC4({q})"),
            Form::D18 => f.write_str("D18"),
            Form::A5 => f.write_str("A5"),
            Form::Psl27 => f.write_str("PSL27"),
            Form::OutsideD0D1 { defect } => write!(f, "OutsideD0D1({defect})"),
        }
    }
}

pub type Evidence = Vec<(String, String)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub defect: usize,
    pub form: Form,
    /// `(property, value)` pairs the recognition relied on.
    pub evidence: Evidence,
}

fn note(evidence: &mut Evidence, key: &str, value: impl ToString) {
    evidence.push((key.to_string(), value.to_string()));
}

/// Computes the defect and, for defect 0 or 1, the matching form.
///
/// A defect of 0 or 1 with no matching form is an [`Error::Inconsistency`]:
/// either the classification or the engine would be wrong.
pub fn classify(group: &Group) -> Result<ClassificationVerdict> {
    let j = defect(group).defect;
    if j >= 2 {
        return Ok(ClassificationVerdict {
            defect: j,
            form: Form::OutsideD0D1 { defect: j },
            evidence: vec![("order".into(), group.order().to_string())],
        });
    }
    let candidates = if j == 0 { D0_RECOGNIZERS } else { D1_RECOGNIZERS };
    for recognizer in candidates {
        let mut evidence = Vec::new();
        if let Some(form) = recognizer(group, &mut evidence)? {
            return Ok(ClassificationVerdict {
                defect: j,
                form,
                evidence,
            });
        }
    }
    Err(Error::Inconsistency(format!(
        "group of order {} has defect {j} but matches no form",
        group.order()
    )))
}

/// The first form whose structural conditions hold, without computing the
/// defect.
pub fn recognize(group: &Group) -> Result<Option<Form>> {
    for recognizer in D0_RECOGNIZERS.iter().chain(D1_RECOGNIZERS) {
        if let Some(form) = recognizer(group, &mut Vec::new())? {
            return Ok(Some(form));
        }
    }
    Ok(None)
}

/// Whether the structural conditions of `claimed` hold, parameters included.
///
/// [`Form::OutsideD0D1`] is defined by the defect alone, so it is the one
/// claim decided by computing the defect.
pub fn recognize_only(group: &Group, claimed: &Form) -> bool {
    if let Form::OutsideD0D1 { defect: j } = claimed {
        return *j >= 2 && defect(group).defect == *j;
    }
    matches!(recognize(group), Ok(Some(form)) if form == *claimed)
}

type Recognizer = fn(&Group, &mut Evidence) -> Result<Option<Form>>;

const D0_RECOGNIZERS: &[Recognizer] = &[match_trivial, match_prime_cyclic, match_frobenius_pq];
const D1_RECOGNIZERS: &[Recognizer] =
    &[match_c4_or_q8, match_mersenne_frobenius, match_cq_c4, match_d18, match_simple_60_or_168];

fn match_trivial(group: &Group, evidence: &mut Evidence) -> Result<Option<Form>> {
    note(evidence, "order", group.order());
    Ok((group.order() == 1).then_some(Form::Trivial))
}

fn match_prime_cyclic(group: &Group, evidence: &mut Evidence) -> Result<Option<Form>> {
    let n = group.order() as u64;
    note(evidence, "order", n);
    if !is_prime(n) || !group.is_cyclic() {
        return Ok(None);
    }
    note(evidence, "cyclic", true);
    Ok(Some(Form::Cp { p: n }))
}

/// The Frobenius kernel's order, when `G` is a Frobenius group whose kernel
/// satisfies `kernel_ok`.
fn frobenius_kernel(
    group: &Group,
    evidence: &mut Evidence,
    kernel_ok: impl Fn(&Group) -> bool,
) -> Result<Option<usize>> {
    let Some(fs) = group.frobenius_structure()? else {
        return Ok(None);
    };
    note(evidence, "frobenius_kernel_order", fs.kernel.order());
    note(evidence, "frobenius_complement_order", fs.complement.order());
    Ok(kernel_ok(&fs.kernel).then_some(fs.kernel.order()))
}

fn match_frobenius_pq(group: &Group, evidence: &mut Evidence) -> Result<Option<Form>> {
    let n = group.order() as u64;
    note(evidence, "order", n);
    let (p, q) = match factorize(n).as_slice() {
        [(a, 1), (b, 1)] => (*a.max(b), *a.min(b)),
        _ => return Ok(None),
    };
    if (p - 1) % q != 0 || group.is_abelian() {
        return Ok(None);
    }
    note(evidence, "abelian", false);
    let kernel = frobenius_kernel(group, evidence, |k| k.order() as u64 == p && k.is_cyclic())?;
    Ok(kernel.map(|_| Form::FrobeniusPq { p, q }))
}

/// Order 4 or 8 with a unique involution and exponent 4.
fn match_c4_or_q8(group: &Group, evidence: &mut Evidence) -> Result<Option<Form>> {
    let n = group.order();
    note(evidence, "order", n);
    if n != 4 && n != 8 {
        return Ok(None);
    }
    let involutions = group.element_orders().iter().filter(|&&o| o == 2).count();
    note(evidence, "involutions", involutions);
    note(evidence, "exponent", group.exponent());
    if involutions != 1 || group.exponent() != 4 {
        return Ok(None);
    }
    Ok(Some(if n == 4 { Form::C4 } else { Form::Q8 }))
}

fn match_mersenne_frobenius(group: &Group, evidence: &mut Evidence) -> Result<Option<Form>> {
    let n = group.order() as u64;
    note(evidence, "order", n);
    let (s, q) = match factorize(n).as_slice() {
        [(2, s), (q, 1)] if (1u64 << s) - 1 == *q => (*s, *q),
        _ => return Ok(None),
    };
    if !group.is_sylow_normal(2) {
        return Ok(None);
    }
    let sylow = group.sylow_subgroup(2)?;
    note(evidence, "sylow_2_exponent", sylow.exponent());
    if !sylow.is_abelian() || sylow.exponent() != 2 {
        return Ok(None);
    }
    let kernel = frobenius_kernel(group, evidence, |k| k.order() as u64 == 1 << s)?;
    Ok(kernel.map(|_| Form::MersenneFrobenius { s, q }))
}

fn match_cq_c4(group: &Group, evidence: &mut Evidence) -> Result<Option<Form>> {
    let n = group.order() as u64;
    note(evidence, "order", n);
    let q = match factorize(n).as_slice() {
        [(2, 2), (q, 1)] if q % 4 == 1 => *q,
        _ => return Ok(None),
    };
    let sylow = group.sylow_subgroup(2)?;
    note(evidence, "sylow_2_cyclic", sylow.is_cyclic());
    if !sylow.is_cyclic() {
        return Ok(None);
    }
    let kernel = frobenius_kernel(group, evidence, |k| k.order() as u64 == q)?;
    Ok(kernel.map(|_| Form::CqC4 { q }))
}

fn match_d18(group: &Group, evidence: &mut Evidence) -> Result<Option<Form>> {
    note(evidence, "order", group.order());
    if group.order() != 18 {
        return Ok(None);
    }
    let kernel = frobenius_kernel(group, evidence, |k| k.order() == 9 && k.is_cyclic())?;
    Ok(kernel.map(|_| Form::D18))
}

fn match_simple_60_or_168(group: &Group, evidence: &mut Evidence) -> Result<Option<Form>> {
    let n = group.order();
    note(evidence, "order", n);
    if n != 60 && n != 168 {
        return Ok(None);
    }
    let simple = group.is_simple()?;
    note(evidence, "simple", simple);
    Ok(simple.then_some(if n == 60 { Form::A5 } else { Form::Psl27 }))
}
