//! Constructions of the group families that appear in the defect 0 and
//! defect 1 classifications, plus the negative controls.
//!
//! Every family acts on a small faithful point set: Frobenius groups act on
//! their kernel, `PSL(2,q)` on the projective line, quaternion groups on
//! themselves. All orders are checked after closure.

pub mod field;
mod spec;

pub use field::{FieldElement, GaloisField};
pub use spec::{Family, GroupSpec};

use crate::arith::{is_prime, smallest_of_order};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// Permutation of `0..n` (printed 1-based) from an image function.
fn perm_from_fn(n: usize, f: impl Fn(usize) -> usize) -> Perm {
    Perm::from_images((0..n).map(|i| f(i) as u32).collect()).expect("constructed map is a bijection")
}

fn expect_order(group: Group, expected: usize, what: &str) -> Result<Group> {
    if group.order() != expected {
        return Err(invalid(format!(
            "{what}: closure has order {}, expected {expected}",
            group.order()
        )));
    }
    Ok(group)
}

/// `C_n` as an `n`-cycle.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(invalid("cyclic group needs n >= 1"));
    }
    Group::generate(n, &[perm_from_fn(n, |i| (i + 1) % n)])
}

/// The dihedral group of order `2m` on the `m` vertices of a polygon.
pub fn dihedral(m: usize) -> Result<Group> {
    if m < 3 {
        return Err(invalid("dihedral group needs m >= 3"));
    }
    let rotation = perm_from_fn(m, |i| (i + 1) % m);
    let reflection = perm_from_fn(m, |i| (m - i) % m);
    expect_order(Group::generate(m, &[rotation, reflection])?, 2 * m, "dihedral")
}

/// `E_{p^s}` as `s` disjoint `p`-cycles.
pub fn elementary_abelian(p: u64, s: usize) -> Result<Group> {
    if !is_prime(p) || s == 0 {
        return Err(invalid("elementary abelian group needs a prime p and s >= 1"));
    }
    let p = p as usize;
    let n = p * s;
    let gens: Vec<Perm> = (0..s)
        .map(|b| perm_from_fn(n, |i| if i / p == b { b * p + (i % p + 1) % p } else { i }))
        .collect();
    expect_order(Group::generate(n, &gens)?, p.pow(s as u32), "elementary abelian")
}

/// The generalized quaternion group of the given order `2^t`, `t >= 3`,
/// in its right regular action.
///
/// With `n = 2^(t-1)` the points are `a^i` (block 1) and `a^i b` (block 2).
/// Right multiplication by `a` turns block 1 forwards and block 2 backwards;
/// right multiplication by `b` swaps the blocks, using `b^2 = a^(n/2)`.
pub fn generalized_quaternion(order: usize) -> Result<Group> {
    if order < 8 || !order.is_power_of_two() {
        return Err(invalid("generalized quaternion order must be 2^t with t >= 3"));
    }
    let n = order / 2;
    let a = perm_from_fn(order, |x| {
        if x < n {
            (x + 1) % n
        } else {
            n + (x - n + n - 1) % n
        }
    });
    let b = perm_from_fn(order, |x| if x < n { n + x } else { (x - n + n / 2) % n });
    expect_order(Group::generate(order, &[a, b])?, order, "generalized quaternion")
}

/// `A ⋊ <automorphism>`: the kernel's generators together with a point
/// permutation normalizing it. The closure must have order
/// `|A| * complement_order`.
pub fn semidirect(kernel: &Group, automorphism: &Perm, complement_order: usize) -> Result<Group> {
    if automorphism.degree() != kernel.degree() {
        return Err(Error::DegreeMismatch {
            left: kernel.degree(),
            right: automorphism.degree(),
        });
    }
    let inv = automorphism.inverse();
    for g in kernel.generators() {
        if !kernel.contains(&inv.then(g).then(automorphism)) {
            return Err(invalid("automorphism does not normalize the kernel"));
        }
    }
    let mut gens = kernel.generators().to_vec();
    gens.push(automorphism.clone());
    let group = Group::generate(kernel.degree(), &gens)?;
    expect_order(group, kernel.order() * complement_order, "semidirect product")
}

/// `x -> x + 1` and `x -> g x` on `Z/p`, with `g` of multiplicative order `k`.
fn affine(p: u64, k: u64) -> Result<Group> {
    let g = smallest_of_order(k, p).expect("k divides p - 1");
    let n = p as usize;
    let kernel = cyclic(n)?;
    let scale = perm_from_fn(n, |x| (x as u64 * g % p) as usize);
    semidirect(&kernel, &scale, k as usize)
}

/// The Frobenius group `C_p ⋊ C_q` of order `pq`.
pub fn frobenius_pq(p: u64, q: u64) -> Result<Group> {
    if !is_prime(p) || !is_prime(q) || p == q {
        return Err(invalid(format!("frobenius:{p},{q} needs distinct primes")));
    }
    if !(p - 1).is_multiple_of(q) {
        return Err(invalid(format!("{q} does not divide {p} - 1")));
    }
    affine(p, q)
}

/// The Frobenius group `C_q ⋊ C_4` of order `4q` for a prime `q ≡ 1 (mod 4)`.
pub fn c4_frobenius(q: u64) -> Result<Group> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(invalid(format!("c4frob:{q} needs a prime q ≡ 1 (mod 4)")));
    }
    affine(q, 4)
}

/// Multiplication by a generator of `GF(2^s)^*` on the `2^s` field elements.
///
/// This is the companion matrix of the modulus acting on coordinate vectors;
/// it must move the nonzero vectors in one `(2^s - 1)`-cycle.
pub fn singer_cycle(s: u32) -> Result<Perm> {
    let field = GaloisField::smallest(2, s)?;
    let q = field.size() as usize;
    let w = field.primitive_element();
    let perm = perm_from_fn(q, |v| field.mul(w, FieldElement(v as u32)).0 as usize);
    let cycles = perm.cycles();
    if cycles.len() != 1 || cycles[0].len() != q - 1 || perm.apply(1) != 1 {
        return Err(invalid("multiplier does not act regularly on nonzero vectors"));
    }
    Ok(perm)
}

/// The Frobenius group `E_{2^s} ⋊ C_q` with `q = 2^s - 1` a Mersenne prime,
/// acting on `GF(2)^s`.
pub fn mersenne_frobenius(s: u32) -> Result<Group> {
    if !(2..=20).contains(&s) || !is_prime((1u64 << s) - 1) {
        return Err(invalid(format!("mersenne:{s} needs 2^{s} - 1 prime")));
    }
    let n = 1usize << s;
    let translations: Vec<Perm> = (0..s).map(|b| perm_from_fn(n, |v| v ^ (1 << b))).collect();
    let kernel = Group::generate(n, &translations)?;
    semidirect(&kernel, &singer_cycle(s)?, n - 1)
}

/// `A_n` for `1 <= n <= 10`.
pub fn alternating(n: usize) -> Result<Group> {
    if !(1..=10).contains(&n) {
        return Err(invalid("alternating group needs 1 <= n <= 10"));
    }
    let gens: Vec<Perm> = match n {
        1 | 2 => Vec::new(),
        _ if n % 2 == 1 => vec![
            perm_from_fn(n, |i| (i + 1) % n),
            Perm::from_cycles(n, &[&[n - 2, n - 1, n]])?,
        ],
        _ => vec![
            perm_from_fn(n, |i| if i == 0 { 0 } else { i % (n - 1) + 1 }),
            Perm::from_cycles(n, &[&[1, 2, 3]])?,
        ],
    };
    let group = Group::generate(n, &gens)?;
    let expected = (1..=n).product::<usize>() / if n >= 2 { 2 } else { 1 };
    expect_order(group, expected, "alternating")
}

/// `S_n` for `1 <= n <= 10`.
pub fn symmetric(n: usize) -> Result<Group> {
    if !(1..=10).contains(&n) {
        return Err(invalid("symmetric group needs 1 <= n <= 10"));
    }
    let gens: Vec<Perm> = match n {
        1 => Vec::new(),
        _ => vec![
            perm_from_fn(n, |i| (i + 1) % n),
            Perm::from_cycles(n, &[&[1, 2]])?,
        ],
    };
    let group = Group::generate(n, &gens)?;
    expect_order(group, (1..=n).product(), "symmetric")
}

/// Supported fields for [`psl2`].
pub const PSL2_FIELDS: [u32; 5] = [5, 7, 8, 9, 17];

/// `PSL(2,q)` on the `q + 1` points of the projective line, generated by
/// `z -> z + 1`, `z -> a z` and `z -> -1/z`, where `a` is a primitive element
/// for even `q` and its square for odd `q`.
pub fn psl2(q: u32) -> Result<Group> {
    if !PSL2_FIELDS.contains(&q) {
        return Err(invalid(format!("psl2:{q} is not supported (use one of {PSL2_FIELDS:?})")));
    }
    let field = GaloisField::new(q)?;
    let n = q as usize + 1;
    let infinity = q as usize;
    let w = field.primitive_element();
    let a = if q % 2 == 1 { field.mul(w, w) } else { w };
    let translate = perm_from_fn(n, |z| {
        if z == infinity {
            z
        } else {
            field.add(FieldElement(z as u32), field.one()).0 as usize
        }
    });
    let scale = perm_from_fn(n, |z| {
        if z == infinity {
            z
        } else {
            field.mul(a, FieldElement(z as u32)).0 as usize
        }
    });
    let invert = perm_from_fn(n, |z| {
        if z == infinity {
            0
        } else if z == 0 {
            infinity
        } else {
            let inv = field.inv(FieldElement(z as u32)).unwrap();
            field.neg(inv).0 as usize
        }
    });
    let group = Group::generate(n, &[translate, scale, invert])?;
    let q = q as usize;
    let d = if q % 2 == 1 { 2 } else { 1 };
    expect_order(group, q * (q * q - 1) / d, "psl2")
}
