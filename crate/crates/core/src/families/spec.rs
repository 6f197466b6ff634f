//! Textual group descriptions such as `"frobenius:7,3"` or
//! `"gens:(1 2 3)(4 5),(1 2)@5"`.

use std::fmt;
use std::str::FromStr;

use super::*;
use crate::group::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic,
    Dihedral,
    GeneralizedQuaternion,
    ElementaryAbelian,
    FrobeniusPq,
    MersenneFrobenius,
    C4Frobenius,
    Alternating,
    Symmetric,
    Psl2,
    RawGenerators,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Cyclic,
        Family::Dihedral,
        Family::GeneralizedQuaternion,
        Family::ElementaryAbelian,
        Family::FrobeniusPq,
        Family::MersenneFrobenius,
        Family::C4Frobenius,
        Family::Alternating,
        Family::Symmetric,
        Family::Psl2,
        Family::RawGenerators,
    ];

    /// The tag used in spec text.
    pub fn tag(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::GeneralizedQuaternion => "genq",
            Family::ElementaryAbelian => "elemab",
            Family::FrobeniusPq => "frobenius",
            Family::MersenneFrobenius => "mersenne",
            Family::C4Frobenius => "c4frob",
            Family::Alternating => "alt",
            Family::Symmetric => "sym",
            Family::Psl2 => "psl2",
            Family::RawGenerators => "gens",
        }
    }

    /// Human-readable parameter synopsis.
    pub fn synopsis(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic:n          C_n, n >= 1",
            Family::Dihedral => "dihedral:m        dihedral group of order 2m, m >= 3",
            Family::GeneralizedQuaternion => "genq:2^t          generalized quaternion group, t >= 3",
            Family::ElementaryAbelian => "elemab:p,s        E_{p^s}",
            Family::FrobeniusPq => "frobenius:p,q     Frobenius C_p x| C_q, q | p - 1",
            Family::MersenneFrobenius => "mersenne:s        Frobenius E_{2^s} x| C_q, q = 2^s - 1 prime",
            Family::C4Frobenius => "c4frob:q          Frobenius C_q x| C_4, q ≡ 1 (mod 4)",
            Family::Alternating => "alt:n             A_n, 1 <= n <= 10",
            Family::Symmetric => "sym:n             S_n, 1 <= n <= 10",
            Family::Psl2 => "psl2:q            PSL(2,q), q in {5, 7, 8, 9, 17}",
            Family::RawGenerators => "gens:g1,g2,...@n  generated by cycle-notation permutations of degree n",
        }
    }

    fn from_tag(tag: &str) -> Option<Family> {
        let family = match tag {
            "cyclic" | "c" => Family::Cyclic,
            "dihedral" | "d" => Family::Dihedral,
            "genq" | "generalized_quaternion" => Family::GeneralizedQuaternion,
            "elemab" | "elementary_abelian" => Family::ElementaryAbelian,
            "frobenius" | "frobenius_pq" => Family::FrobeniusPq,
            "mersenne" | "mersenne_frobenius" => Family::MersenneFrobenius,
            "c4frob" | "c4_frobenius" => Family::C4Frobenius,
            "alt" | "alternating" => Family::Alternating,
            "sym" | "symmetric" => Family::Symmetric,
            "psl2" => Family::Psl2,
            "gens" | "raw_generators" => Family::RawGenerators,
            _ => return None,
        };
        Some(family)
    }

    fn arity(self) -> usize {
        match self {
            Family::ElementaryAbelian | Family::FrobeniusPq => 2,
            Family::RawGenerators => 0,
            _ => 1,
        }
    }
}

/// A validated description of a group to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub family: Family,
    pub params: Vec<u64>,
    /// Generators and degree, for [`Family::RawGenerators`].
    pub generators: Option<(Vec<Perm>, usize)>,
}

impl GroupSpec {
    pub fn new(family: Family, params: &[u64]) -> Result<Self> {
        let spec = GroupSpec {
            family,
            params: params.to_vec(),
            generators: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn raw(gens: Vec<Perm>, degree: usize) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        Ok(GroupSpec {
            family: Family::RawGenerators,
            params: Vec::new(),
            generators: Some((gens, degree)),
        })
    }

    /// Parameter checks, without building the group.
    fn validate(&self) -> Result<()> {
        let p = &self.params;
        if p.len() != self.family.arity() {
            return Err(invalid(format!(
                "{} takes {} parameter(s), got {}",
                self.family.tag(),
                self.family.arity(),
                p.len()
            )));
        }
        let ok = match self.family {
            Family::Cyclic => p[0] >= 1,
            Family::Dihedral => p[0] >= 3,
            Family::GeneralizedQuaternion => p[0] >= 8 && p[0].is_power_of_two(),
            Family::ElementaryAbelian => is_prime(p[0]) && p[1] >= 1,
            Family::FrobeniusPq => {
                is_prime(p[0]) && is_prime(p[1]) && p[0] != p[1] && (p[0] - 1).is_multiple_of(p[1])
            }
            Family::MersenneFrobenius => (2..=20).contains(&p[0]) && is_prime((1 << p[0]) - 1),
            Family::C4Frobenius => is_prime(p[0]) && p[0] % 4 == 1,
            Family::Alternating | Family::Symmetric => (1..=10).contains(&p[0]),
            Family::Psl2 => PSL2_FIELDS.contains(&(p[0] as u32)),
            Family::RawGenerators => true,
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!("{self} violates the family's preconditions")))
        }
    }

    pub fn build(&self) -> Result<Group> {
        self.build_with(Limits::default())
    }

    /// Builds the group and attaches `limits` to it.
    pub fn build_with(&self, limits: Limits) -> Result<Group> {
        let p = &self.params;
        let group = match self.family {
            Family::Cyclic => cyclic(p[0] as usize),
            Family::Dihedral => dihedral(p[0] as usize),
            Family::GeneralizedQuaternion => generalized_quaternion(p[0] as usize),
            Family::ElementaryAbelian => elementary_abelian(p[0], p[1] as usize),
            Family::FrobeniusPq => frobenius_pq(p[0], p[1]),
            Family::MersenneFrobenius => mersenne_frobenius(p[0] as u32),
            Family::C4Frobenius => c4_frobenius(p[0]),
            Family::Alternating => alternating(p[0] as usize),
            Family::Symmetric => symmetric(p[0] as usize),
            Family::Psl2 => psl2(p[0] as u32),
            Family::RawGenerators => {
                let (gens, degree) = self.generators.as_ref().expect("raw spec has generators");
                return Group::generate_with(*degree, gens, limits);
            }
        }?;
        limits.check("generate", limits.max_order, group.order())?;
        Ok(group.with_limits(limits))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let colon = text
            .find(':')
            .ok_or_else(|| Error::parse(text.len(), "expected 'family:parameters'"))?;
        let tag = text[..colon].trim();
        let family = Family::from_tag(tag)
            .ok_or_else(|| Error::parse(0, format!("unknown family {tag:?}")))?;
        let body = &text[colon + 1..];
        let body_start = colon + 1;
        if family == Family::RawGenerators {
            let at = body
                .rfind('@')
                .ok_or_else(|| Error::parse(text.len(), "expected '@degree' after the generators"))?;
            let degree: usize = body[at + 1..]
                .trim()
                .parse()
                .map_err(|_| Error::parse(body_start + at + 1, "degree is not a positive integer"))?;
            if degree == 0 {
                return Err(Error::parse(body_start + at + 1, "degree must be positive"));
            }
            let mut gens = Vec::new();
            let mut depth = 0i32;
            let mut start = 0;
            let list = &body[..at];
            for (i, c) in list.char_indices().chain(std::iter::once((list.len(), '\0'))) {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    ',' | '\0' if depth == 0 || c == '\0' => {
                        let piece = &list[start..i];
                        if !piece.trim().is_empty() {
                            let perm = Perm::parse(piece, degree).map_err(|e| match e {
                                Error::Parse { position, message } => Error::Parse {
                                    position: position + body_start + start,
                                    message,
                                },
                                other => other,
                            })?;
                            gens.push(perm);
                        }
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            return GroupSpec::raw(gens, degree);
        }
        let mut params = Vec::new();
        let mut offset = body_start;
        for piece in body.split(',') {
            let value = piece
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::parse(offset, format!("expected an integer, got {:?}", piece.trim())))?;
            params.push(value);
            offset += piece.len() + 1;
        }
        GroupSpec::new(family, &params)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family.tag())?;
        if let Some((gens, degree)) = &self.generators {
            let text: Vec<String> = gens.iter().map(Perm::to_string).collect();
            return write!(f, "{}@{degree}", text.join(","));
        }
        let params: Vec<String> = self.params.iter().map(u64::to_string).collect();
        f.write_str(&params.join(","))
    }
}
