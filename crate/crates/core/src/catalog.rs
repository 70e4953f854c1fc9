//! Constructors for the standard 3-transposition families.
//!
//! Every family is addressed by a descriptor string such as `symmetric:n=5`
//! or `orthogonal-f2:dim=6,eps=+`. Building a descriptor yields generators
//! for the group together with one seed transposition per conjugacy class
//! of transpositions.
//!
//! Fixed forms:
//!
//! * symplectic F2: `B(x, y) = sum_i x_{2i} y_{2i+1} + x_{2i+1} y_{2i}`;
//! * orthogonal F2, `eps = +`: `q(x) = x0 x1 + x2 x3 + ...`;
//!   `eps = -`: the first hyperbolic pair is replaced by `x0^2 + x0 x1 + x1^2`;
//!   transvections are taken along vectors with `q(v) = 1`;
//! * orthogonal F3: `q(x) = sum_i d_i x_i^2` for a user-supplied diagonal
//!   (default all ones); reflections along vectors with `q(v) = 1` (class
//!   `+`) or `q(v) = -1` (class `-`).
//!
//! Group labels are fingerprints only; no isomorphism type is certified.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::groups::{conjugacy_closure, FpMatrix, GroupElement, Permutation};
use crate::{Error, Result};

pub const MAX_SYMMETRIC_DEGREE: usize = 12;
pub const MAX_SYMPLECTIC_RANK: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" => Ok(Sign::Minus),
            _ => Err(Error::InvalidParameter(format!("not a sign: {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AdeType {
    A,
    D,
    E,
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Symmetric { n: usize },
    SymplecticF2 { n: usize },
    OrthogonalF2 { dim: usize, eps: Sign },
    OrthogonalF3 { diag: Vec<u8>, class: Sign },
    Weyl { kind: AdeType, rank: usize },
}

/// Static description of one family, for listings.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyInfo {
    pub name: &'static str,
    pub syntax: &'static str,
    pub ranges: &'static str,
    pub example: &'static str,
}

pub fn families() -> Vec<FamilyInfo> {
    vec![
        FamilyInfo {
            name: "symmetric",
            syntax: "symmetric:n=<n>",
            ranges: "2 <= n <= 12",
            example: "symmetric:n=5",
        },
        FamilyInfo {
            name: "symplectic-f2",
            syntax: "symplectic-f2:n=<n>",
            ranges: "1 <= n <= 3 (dimension 2n)",
            example: "symplectic-f2:n=3",
        },
        FamilyInfo {
            name: "orthogonal-f2",
            syntax: "orthogonal-f2:dim=<d>,eps=<+|->",
            ranges: "d in {4, 6, 8}",
            example: "orthogonal-f2:dim=6,eps=+",
        },
        FamilyInfo {
            name: "orthogonal-f3",
            syntax: "orthogonal-f3:dim=<d>[,diag=<d1.d2...>][,class=<+|->]",
            ranges: "3 <= d <= 5, diagonal entries nonzero mod 3",
            example: "orthogonal-f3:dim=5",
        },
        FamilyInfo {
            name: "weyl",
            syntax: "weyl:type=<A|D|E>,rank=<r>",
            ranges: "A: 1 <= r <= 7, D: 4 <= r <= 6, E: 6 <= r <= 8",
            example: "weyl:type=E,rank=6",
        },
    ]
}

impl Descriptor {
    /// Every supported descriptor, including each diagonal form over F3.
    pub fn all() -> Vec<Descriptor> {
        let mut out: Vec<Descriptor> =
            (2..=MAX_SYMMETRIC_DEGREE).map(|n| Descriptor::Symmetric { n }).collect();
        out.extend((1..=MAX_SYMPLECTIC_RANK).map(|n| Descriptor::SymplecticF2 { n }));
        for dim in [4, 6, 8] {
            for eps in [Sign::Plus, Sign::Minus] {
                out.push(Descriptor::OrthogonalF2 { dim, eps });
            }
        }
        for dim in 3..=5 {
            for bits in 0..1u32 << dim {
                let diag: Vec<u8> = (0..dim).map(|k| 1 + (bits >> k & 1) as u8).collect();
                for class in [Sign::Plus, Sign::Minus] {
                    out.push(Descriptor::OrthogonalF3 { diag: diag.clone(), class });
                }
            }
        }
        for (kind, ranks) in [(AdeType::A, 1..=7), (AdeType::D, 4..=6), (AdeType::E, 6..=8)] {
            out.extend(ranks.map(|rank| Descriptor::Weyl { kind, rank }));
        }
        out
    }

    pub fn family(&self) -> &'static str {
        match self {
            Descriptor::Symmetric { .. } => "symmetric",
            Descriptor::SymplecticF2 { .. } => "symplectic-f2",
            Descriptor::OrthogonalF2 { .. } => "orthogonal-f2",
            Descriptor::OrthogonalF3 { .. } => "orthogonal-f3",
            Descriptor::Weyl { .. } => "weyl",
        }
    }

    fn validate(self) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match &self {
            Descriptor::Symmetric { n } if !(2..=MAX_SYMMETRIC_DEGREE).contains(n) => {
                bad(format!("symmetric degree {n} outside 2..={MAX_SYMMETRIC_DEGREE}"))
            }
            Descriptor::SymplecticF2 { n } if !(1..=MAX_SYMPLECTIC_RANK).contains(n) => {
                bad(format!("symplectic rank {n} outside 1..={MAX_SYMPLECTIC_RANK}"))
            }
            Descriptor::OrthogonalF2 { dim, .. } if ![4, 6, 8].contains(dim) => {
                bad(format!("orthogonal-f2 dimension {dim} not in {{4, 6, 8}}"))
            }
            Descriptor::OrthogonalF3 { diag, .. } if !(3..=5).contains(&diag.len()) => {
                bad(format!("orthogonal-f3 dimension {} outside 3..=5", diag.len()))
            }
            Descriptor::OrthogonalF3 { diag, .. } if diag.iter().any(|&d| d % 3 == 0) => {
                bad(format!("degenerate form: diagonal {diag:?} has a zero mod 3"))
            }
            Descriptor::Weyl { kind, rank } => {
                let ok = match kind {
                    AdeType::A => (1..=7).contains(rank),
                    AdeType::D => (4..=6).contains(rank),
                    AdeType::E => (6..=8).contains(rank),
                };
                if ok {
                    Ok(self)
                } else {
                    bad(format!("unsupported Weyl type {kind}{rank}"))
                }
            }
            _ => Ok(self),
        }
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Descriptor::Symmetric { n }.validate()
    }

    pub fn symplectic_f2(n: usize) -> Result<Self> {
        Descriptor::SymplecticF2 { n }.validate()
    }

    pub fn orthogonal_f2(dim: usize, eps: Sign) -> Result<Self> {
        Descriptor::OrthogonalF2 { dim, eps }.validate()
    }

    /// Diagonal entries are taken mod 3.
    pub fn orthogonal_f3(diag: &[i64], class: Sign) -> Result<Self> {
        let diag = diag.iter().map(|d| d.rem_euclid(3) as u8).collect();
        Descriptor::OrthogonalF3 { diag, class }.validate()
    }

    pub fn weyl(kind: AdeType, rank: usize) -> Result<Self> {
        Descriptor::Weyl { kind, rank }.validate()
    }

    pub fn build(&self) -> Result<Instance> {
        Ok(match self {
            Descriptor::Symmetric { n } => Instance::Permutation(symmetric(*n)?),
            Descriptor::SymplecticF2 { n } => Instance::Matrix(symplectic_f2(*n)?),
            Descriptor::OrthogonalF2 { dim, eps } => Instance::Matrix(orthogonal_f2(*dim, *eps)?),
            Descriptor::OrthogonalF3 { diag, class } => {
                let diag: Vec<i64> = diag.iter().map(|&d| d as i64).collect();
                Instance::Matrix(orthogonal_f3(&diag, *class)?)
            }
            Descriptor::Weyl { kind, rank } => Instance::Permutation(weyl(*kind, *rank)?),
        })
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Symmetric { n } => write!(f, "symmetric:n={n}"),
            Descriptor::SymplecticF2 { n } => write!(f, "symplectic-f2:n={n}"),
            Descriptor::OrthogonalF2 { dim, eps } => write!(f, "orthogonal-f2:dim={dim},eps={eps}"),
            Descriptor::OrthogonalF3 { diag, class } => {
                let d: Vec<String> = diag.iter().map(|x| x.to_string()).collect();
                write!(f, "orthogonal-f3:dim={},diag={},class={class}", diag.len(), d.join("."))
            }
            Descriptor::Weyl { kind, rank } => write!(f, "weyl:type={kind},rank={rank}"),
        }
    }
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidParameter(format!("descriptor {text:?}: {msg}"));
        let (family, params) = text.split_once(':').unwrap_or((text, ""));
        let mut map: HashMap<&str, &str> = HashMap::new();
        for pair in params.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = pair.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            if map.insert(k.trim(), v.trim()).is_some() {
                return Err(bad("repeated key"));
            }
        }
        let allow = |keys: &[&str]| -> Result<()> {
            match map.keys().find(|k| !keys.contains(k)) {
                Some(k) => Err(bad(&format!("unknown key {k:?}"))),
                None => Ok(()),
            }
        };
        let number = |key: &str| -> Result<usize> {
            map.get(key)
                .ok_or_else(|| bad(&format!("missing {key}")))?
                .parse()
                .map_err(|_| bad(&format!("{key} is not a number")))
        };
        match family.trim() {
            "symmetric" => {
                allow(&["n"])?;
                Descriptor::symmetric(number("n")?)
            }
            "symplectic-f2" => {
                allow(&["n"])?;
                Descriptor::symplectic_f2(number("n")?)
            }
            "orthogonal-f2" => {
                allow(&["dim", "eps"])?;
                let eps = map.get("eps").ok_or_else(|| bad("missing eps"))?.parse()?;
                Descriptor::orthogonal_f2(number("dim")?, eps)
            }
            "orthogonal-f3" => {
                allow(&["dim", "diag", "class"])?;
                let diag: Vec<i64> = match map.get("diag") {
                    Some(d) => d
                        .split('.')
                        .map(|x| x.trim().parse().map_err(|_| bad("bad diagonal entry")))
                        .collect::<Result<_>>()?,
                    None => vec![1; number("dim")?],
                };
                if map.contains_key("dim") && number("dim")? != diag.len() {
                    return Err(bad("dim does not match diagonal length"));
                }
                let class = match map.get("class") {
                    Some(c) => c.parse()?,
                    None => Sign::Plus,
                };
                Descriptor::orthogonal_f3(&diag, class)
            }
            "weyl" => {
                allow(&["type", "rank"])?;
                let kind = match map.get("type").map(|t| t.to_ascii_uppercase()).as_deref() {
                    Some("A") => AdeType::A,
                    Some("D") => AdeType::D,
                    Some("E") => AdeType::E,
                    _ => return Err(bad("type must be A, D or E")),
                };
                Descriptor::weyl(kind, number("rank")?)
            }
            _ => Err(bad("unknown family")),
        }
    }
}

/// Generators of a group plus one seed transposition per class.
#[derive(Clone, Debug)]
pub struct CatalogInstance<E: GroupElement> {
    pub generators: Vec<E>,
    pub seeds: Vec<E>,
}

/// A built catalog entry; the element type depends on the family.
#[derive(Clone, Debug)]
pub enum Instance {
    Permutation(CatalogInstance<Permutation>),
    Matrix(CatalogInstance<FpMatrix>),
}

/// Code that is generic over the element type of an [`Instance`].
pub trait InstanceVisitor {
    type Output;
    fn visit<E: GroupElement>(self, instance: CatalogInstance<E>) -> Self::Output;
}

impl Instance {
    pub fn visit<V: InstanceVisitor>(self, visitor: V) -> V::Output {
        match self {
            Instance::Permutation(i) => visitor.visit(i),
            Instance::Matrix(i) => visitor.visit(i),
        }
    }
}

/// `S_n` on `{0..n-1}`: adjacent transpositions, seeded by `(0 1)`.
pub fn symmetric(n: usize) -> Result<CatalogInstance<Permutation>> {
    Descriptor::symmetric(n)?;
    let generators =
        (0..n - 1).map(|i| Permutation::transposition(n, i, i + 1)).collect::<Result<Vec<_>>>()?;
    let seeds = vec![generators[0].clone()];
    Ok(CatalogInstance { generators, seeds })
}

/// All vectors of `F_p^dim` in lexicographic order, zero first.
pub fn vectors(p: u8, dim: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![0u8; dim]];
    for _ in 0..(p as usize).pow(dim as u32) - 1 {
        let mut v = out.last().unwrap().clone();
        for k in (0..dim).rev() {
            v[k] += 1;
            if v[k] == p {
                v[k] = 0;
            } else {
                break;
            }
        }
        out.push(v);
    }
    out
}

/// Standard alternating form on `F_2^{2n}` with hyperbolic pairs `(2i, 2i+1)`.
pub fn symplectic_form(x: &[u8], y: &[u8]) -> u8 {
    let mut acc = 0;
    for i in (0..x.len()).step_by(2) {
        acc ^= (x[i] & y[i + 1]) ^ (x[i + 1] & y[i]);
    }
    acc
}

/// The F2 quadratic form of type `eps` (see module docs).
pub fn quadratic_form_f2(eps: Sign, x: &[u8]) -> u8 {
    let mut q = 0;
    for i in (0..x.len()).step_by(2) {
        q ^= x[i] & x[i + 1];
    }
    if eps == Sign::Minus {
        q ^= x[0] ^ x[1];
    }
    q
}

/// `t_v: x -> x + B(x, v) v` as the matrix `I + v (B v)^T`.
fn transvection(v: &[u8], polar: impl Fn(&[u8], &[u8]) -> u8) -> Result<FpMatrix> {
    let dim = v.len();
    let row: Vec<u8> = (0..dim)
        .map(|c| {
            let mut e = vec![0u8; dim];
            e[c] = 1;
            polar(&e, v)
        })
        .collect();
    FpMatrix::identity_plus_outer(2, v, &row)
}

/// Sp_{2n}(2) with its transvection class.
pub fn symplectic_f2(n: usize) -> Result<CatalogInstance<FpMatrix>> {
    Descriptor::symplectic_f2(n)?;
    let class = vectors(2, 2 * n)
        .into_iter()
        .skip(1)
        .map(|v| transvection(&v, symplectic_form))
        .collect::<Result<Vec<_>>>()?;
    from_class(class)
}

/// The group generated by the transvections along nonsingular vectors of the
/// quadratic form of type `eps` on `F_2^dim`.
pub fn orthogonal_f2(dim: usize, eps: Sign) -> Result<CatalogInstance<FpMatrix>> {
    Descriptor::orthogonal_f2(dim, eps)?;
    let polar = |x: &[u8], y: &[u8]| {
        let sum: Vec<u8> = x.iter().zip(y).map(|(a, b)| a ^ b).collect();
        quadratic_form_f2(eps, &sum) ^ quadratic_form_f2(eps, x) ^ quadratic_form_f2(eps, y)
    };
    let class = vectors(2, dim)
        .into_iter()
        .filter(|v| quadratic_form_f2(eps, v) == 1)
        .map(|v| transvection(&v, polar))
        .collect::<Result<Vec<_>>>()?;
    from_class(class)
}

pub fn diagonal_form_f3(diag: &[u8], x: &[u8], y: &[u8]) -> u8 {
    (diag.iter().zip(x.iter().zip(y)).map(|(&d, (&a, &b))| d as u32 * a as u32 * b as u32).sum::<u32>() % 3)
        as u8
}

/// Reflection `r_v: x -> x - (2 B(x, v) / q(v)) v` over F3, `q(v) = B(v, v)`.
pub fn reflection_f3(diag: &[u8], v: &[u8]) -> Result<FpMatrix> {
    let q = diagonal_form_f3(diag, v, v);
    if q == 0 {
        return Err(Error::InvalidParameter(format!("isotropic vector {v:?}")));
    }
    // -2/q = 1/q = q in F3.
    let row: Vec<u8> = (0..v.len()).map(|c| ((diag[c] as u32 * v[c] as u32 * q as u32) % 3) as u8).collect();
    FpMatrix::identity_plus_outer(3, v, &row)
}

/// The group generated by reflections along vectors with `q(v) = 1`
/// (`class = +`) or `q(v) = -1` (`class = -`) for the diagonal form `diag`.
pub fn orthogonal_f3(diag: &[i64], class: Sign) -> Result<CatalogInstance<FpMatrix>> {
    let Descriptor::OrthogonalF3 { diag, .. } = Descriptor::orthogonal_f3(diag, class)? else {
        unreachable!()
    };
    let target = match class {
        Sign::Plus => 1,
        Sign::Minus => 2,
    };
    let mut class_elems = vectors(3, diag.len())
        .into_iter()
        .filter(|v| diagonal_form_f3(&diag, v, v) == target)
        .map(|v| reflection_f3(&diag, &v))
        .collect::<Result<Vec<_>>>()?;
    class_elems.sort();
    class_elems.dedup();
    from_class(class_elems)
}

/// Picks generators and per-orbit seeds out of a full transposition class.
///
/// Generators are chosen greedily in class order: an element is added when
/// it is not yet a conjugate of an earlier generator under the group they
/// generate. When every class member is such a conjugate, the generators
/// generate the whole group.
fn from_class<E: GroupElement>(mut class: Vec<E>) -> Result<CatalogInstance<E>> {
    class.sort();
    if class.is_empty() {
        return Err(Error::InvalidParameter("empty transposition class".into()));
    }
    let cap = class.len();
    let mut generators = vec![class[0].clone()];
    let mut reached = conjugacy_closure(&generators, &generators, cap)?;
    for t in &class {
        if reached.binary_search(t).is_err() {
            generators.push(t.clone());
            reached = conjugacy_closure(&generators, &generators, cap)?;
        }
    }
    let mut seeds: Vec<E> = Vec::new();
    let mut covered: Vec<E> = Vec::new();
    for t in &class {
        if covered.binary_search(t).is_err() {
            seeds.push(t.clone());
            covered = conjugacy_closure(&seeds, &generators, cap)?;
        }
    }
    Ok(CatalogInstance { generators, seeds })
}

/// Root system of type `kind` and rank `rank` with integer coordinates,
/// sorted lexicographically. `E` roots are scaled by 2.
pub fn root_system(kind: AdeType, rank: usize) -> Result<Vec<Vec<i32>>> {
    Descriptor::weyl(kind, rank)?;
    let mut roots = match kind {
        AdeType::A => {
            let dim = rank + 1;
            let mut r = Vec::new();
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        let mut v = vec![0; dim];
                        v[i] = 1;
                        v[j] = -1;
                        r.push(v);
                    }
                }
            }
            r
        }
        AdeType::D => d_roots(rank, 1),
        AdeType::E => {
            let mut e8 = d_roots(8, 2);
            for mask in 0u32..256 {
                if mask.count_ones() % 2 == 0 {
                    e8.push((0..8).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect());
                }
            }
            let all_ones = vec![1; 8];
            let mut second = vec![0; 8];
            second[0] = -2;
            second[1] = -2;
            let fixed: Vec<Vec<i32>> = match rank {
                8 => vec![],
                7 => vec![all_ones],
                _ => vec![all_ones, second],
            };
            e8.into_iter().filter(|r| fixed.iter().all(|f| dot(r, f) == 0)).collect()
        }
    };
    roots.sort();
    Ok(roots)
}

fn d_roots(n: usize, scale: i32) -> Vec<Vec<i32>> {
    let mut r = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; n];
                v[i] = a * scale;
                v[j] = b * scale;
                r.push(v);
            }
        }
    }
    r
}

fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Simple roots for the positive system cut out by a generic functional.
pub fn simple_roots(roots: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let functional =
        |r: &[i32]| -> i64 { r.iter().enumerate().map(|(k, &x)| x as i64 * 5i64.pow(k as u32)).sum() };
    let positive: Vec<&Vec<i32>> = roots.iter().filter(|r| functional(r) > 0).collect();
    let is_sum = |r: &[i32]| {
        positive.iter().any(|a| {
            let diff: Vec<i32> = r.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
            positive.iter().any(|b| **b == diff)
        })
    };
    positive.iter().filter(|r| !is_sum(r)).map(|r| (*r).clone()).collect()
}

/// Reflection in `alpha` as a permutation of the indices of `roots`.
pub fn root_reflection(roots: &[Vec<i32>], alpha: &[i32]) -> Result<Permutation> {
    let index: HashMap<&[i32], u32> =
        roots.iter().enumerate().map(|(k, r)| (r.as_slice(), k as u32)).collect();
    let norm = dot(alpha, alpha);
    let images = roots
        .iter()
        .map(|beta| {
            let c = 2 * dot(beta, alpha) / norm;
            let image: Vec<i32> = beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect();
            index
                .get(image.as_slice())
                .copied()
                .ok_or_else(|| Error::internal(format!("root system not closed at {image:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}

/// Weyl group of type `kind` acting on its roots, generated by the simple
/// reflections and seeded by the first of them.
pub fn weyl(kind: AdeType, rank: usize) -> Result<CatalogInstance<Permutation>> {
    let roots = root_system(kind, rank)?;
    let simple = simple_roots(&roots);
    if simple.len() != rank {
        return Err(Error::internal(format!("found {} simple roots for {kind}{rank}", simple.len())));
    }
    let generators = simple.iter().map(|a| root_reflection(&roots, a)).collect::<Result<Vec<_>>>()?;
    let seeds = vec![generators[0].clone()];
    Ok(CatalogInstance { generators, seeds })
}
