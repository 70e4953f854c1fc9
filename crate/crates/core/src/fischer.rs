//! Transposition systems and their Fischer graphs.
//!
//! For a conjugation-closed set `I` of involutions in which every product
//! has order at most 3, the Fischer graph joins `i` and `j` when `ij` has
//! order 3. For such a pair `i∘j = j i j = i j i` is again in `I`.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::groups::{self, conjugacy_closure, GeneratedGroup, GroupElement};
use crate::{Error, Result};

/// Default cap on the size of a transposition class.
pub const DEFAULT_MAX_CLASS: usize = 4096;

const NO_CIRC: u32 = u32::MAX;

/// The element-free part of a transposition system: product orders,
/// adjacency and the `∘` table, indexed by position in `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FischerGraph {
    n: usize,
    order: Vec<u8>,
    neighbors: Vec<Vec<usize>>,
    adjacency: Vec<Vec<u64>>,
    circ: Vec<u32>,
}

impl FischerGraph {
    fn empty(n: usize) -> Self {
        let mut order = vec![2u8; n * n];
        for i in 0..n {
            order[i * n + i] = 1;
        }
        Self {
            n,
            order,
            neighbors: vec![Vec::new(); n],
            adjacency: vec![vec![0u64; n.div_ceil(64)]; n],
            circ: vec![NO_CIRC; n * n],
        }
    }

    fn join(&mut self, i: usize, j: usize, circ: usize) {
        let n = self.n;
        self.order[i * n + j] = 3;
        self.order[j * n + i] = 3;
        self.adjacency[i][j / 64] |= 1 << (j % 64);
        self.adjacency[j][i / 64] |= 1 << (i % 64);
        self.circ[i * n + j] = circ as u32;
        self.circ[j * n + i] = circ as u32;
    }

    /// Builds a graph directly from an `∘` table given as a list of
    /// `(i, j, i∘j)` for adjacent pairs `i < j`.
    pub fn from_circ_table(n: usize, adjacent: &[(usize, usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(i, j, k) in adjacent {
            if i >= n || j >= n || k >= n || i == j || k == i || k == j {
                return Err(Error::Structure(format!("bad adjacency triple ({i}, {j}, {k})")));
            }
            g.join(i, j, k);
        }
        g.finish();
        Ok(g)
    }

    fn finish(&mut self) {
        for i in 0..self.n {
            self.neighbors[i] = (0..self.n).filter(|&j| self.adjacent(i, j)).collect();
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Order of the product of transpositions `i` and `j`: 1, 2 or 3.
    pub fn product_order(&self, i: usize, j: usize) -> u8 {
        self.order[i * self.n + j]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    /// `i∘j` for adjacent `i`, `j`.
    pub fn circ(&self, i: usize, j: usize) -> Option<usize> {
        match self.circ[i * self.n + j] {
            NO_CIRC => None,
            k => Some(k as usize),
        }
    }

    /// Image of `j` under conjugation by `i`: `i∘j` if adjacent, else `j`.
    pub fn conjugate(&self, i: usize, j: usize) -> usize {
        self.circ(i, j).unwrap_or(j)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            label[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &self.neighbors[v] {
                    if label[w] == usize::MAX {
                        label[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
    }

    /// The common valency of a connected component.
    pub fn valency(&self, component: &[usize]) -> Result<usize> {
        let degrees = component.iter().map(|&i| self.degree(i));
        let (min, max) = degrees.fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
        if component.is_empty() || min != max {
            let id = component.first().copied().unwrap_or(0);
            return Err(Error::IrregularComponent { component: id, min, max });
        }
        Ok(min)
    }

    /// Graphviz rendering: one vertex per canonical index, one edge per
    /// adjacent pair.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph fischer {\n");
        for i in 0..self.n {
            let _ = writeln!(out, "  {i};");
        }
        for i in 0..self.n {
            for &j in self.neighbors(i).iter().filter(|&&j| j > i) {
                let _ = writeln!(out, "  {i} -- {j};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// A closed transposition set `I` with its Fischer graph.
#[derive(Clone, Debug)]
pub struct TranspositionSystem<E: GroupElement> {
    generators: Vec<E>,
    transpositions: Vec<E>,
    index: HashMap<E, usize>,
    graph: FischerGraph,
}

impl<E: GroupElement> TranspositionSystem<E> {
    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn transpositions(&self) -> &[E] {
        &self.transpositions
    }

    pub fn len(&self) -> usize {
        self.transpositions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transpositions.is_empty()
    }

    pub fn graph(&self) -> &FischerGraph {
        &self.graph
    }

    pub fn index_of(&self, t: &E) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Index of `g t g^-1` for transposition `t`.
    pub fn conjugate_index(&self, g: &E, t: usize) -> Result<usize> {
        let image = self.transpositions[t].conjugate_by(g);
        self.index_of(&image).ok_or_else(|| Error::internal(format!("conjugate of transposition {t} left I")))
    }

    /// Connected components, cross-checked against conjugacy classes: each
    /// component must be the orbit of its first member under `<I>`.
    pub fn components(&self) -> Result<Vec<Vec<usize>>> {
        let comps = self.graph.components();
        for comp in &comps {
            let class =
                conjugacy_closure(&[self.transpositions[comp[0]].clone()], &self.transpositions, self.len())?;
            let mut members: Vec<usize> = class
                .iter()
                .map(|t| self.index_of(t).ok_or_else(|| Error::internal("class left I")))
                .collect::<Result<_>>()?;
            members.sort_unstable();
            if &members != comp {
                return Err(Error::internal(format!(
                    "component of {} is not a conjugacy class of <I>",
                    comp[0]
                )));
            }
        }
        Ok(comps)
    }
}

/// Conjugacy-closes `seeds` under `generators` and tabulates the Fischer
/// graph, failing on the first pair whose product has order above 3.
pub fn build_system<E: GroupElement>(
    generators: &[E],
    seeds: &[E],
    max_class: usize,
) -> Result<TranspositionSystem<E>> {
    let transpositions = conjugacy_closure(seeds, generators, max_class)?;
    let index: HashMap<E, usize> = transpositions.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
    let n = transpositions.len();

    let rows: Vec<Vec<(usize, usize)>> = (0..n)
        .into_par_iter()
        .map(|i| -> Result<Vec<(usize, usize)>> {
            let mut adjacent = Vec::new();
            for j in i + 1..n {
                let (a, b) = (&transpositions[i], &transpositions[j]);
                let p = a.mul(b);
                if p.mul(&p).is_identity() {
                    continue;
                }
                if !p.pow(3).is_identity() {
                    return Err(Error::NotThreeTransposition { i, j, order: p.order(1 << 20).ok() });
                }
                let c = a.mul(b).mul(a);
                let k = *index.get(&c).ok_or_else(|| Error::internal(format!("{i}∘{j} is not in I")))?;
                adjacent.push((j, k));
            }
            Ok(adjacent)
        })
        .collect::<Result<_>>()?;

    let mut graph = FischerGraph::empty(n);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, k) in row {
            graph.join(i, j, k);
        }
    }
    graph.finish();
    Ok(TranspositionSystem { generators: generators.to_vec(), transpositions, index, graph })
}

/// Checks that every pairwise product in `involutions` has order at most 3.
pub fn verify_three_transposition<E: GroupElement>(involutions: &[E]) -> Result<()> {
    for (i, a) in involutions.iter().enumerate() {
        for (j, b) in involutions.iter().enumerate().skip(i + 1) {
            let p = groups::compose(a, b)?;
            if !(p.pow(2).is_identity() || p.pow(3).is_identity()) {
                return Err(Error::NotThreeTransposition { i, j, order: p.order(1 << 20).ok() });
            }
        }
    }
    Ok(())
}

/// How a triple of pairwise adjacent transpositions collapses, by the order
/// of `abac`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TripleKind {
    /// `abac = 1`: the triple generates `S_3`.
    S3Collapse,
    /// `abac` of order 2: a quotient of `S_4`.
    S4Type,
    /// `abac` of order 3: `H = 3^{1+2}:2` or its quotient `3^2:2`.
    HType,
    /// Any other order (not expected in a 3-transposition group).
    Other(u64),
}

pub fn classify_triple<E: GroupElement>(a: &E, b: &E, c: &E) -> TripleKind {
    let w = a.mul(b).mul(a).mul(c);
    match w.order(64) {
        Ok(1) => TripleKind::S3Collapse,
        Ok(2) => TripleKind::S4Type,
        Ok(3) => TripleKind::HType,
        Ok(k) => TripleKind::Other(k),
        Err(_) => TripleKind::Other(0),
    }
}

/// Searches ordered triples `(a, b, c)` of pairwise adjacent transpositions
/// in lexicographic index order and returns the first `H`-type one.
///
/// `None` means the system is of symplectic type.
pub fn detect_h_triple<E: GroupElement>(sys: &TranspositionSystem<E>) -> Option<[usize; 3]> {
    let g = sys.graph();
    let t = sys.transpositions();
    (0..sys.len()).into_par_iter().find_map_first(|a| {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(a) {
                if c != b && g.adjacent(b, c) && classify_triple(&t[a], &t[b], &t[c]) == TripleKind::HType {
                    return Some([a, b, c]);
                }
            }
        }
        None
    })
}

/// Counts pairwise adjacent ordered triples by kind.
pub fn triple_census<E: GroupElement>(sys: &TranspositionSystem<E>) -> Vec<(TripleKind, usize)> {
    let g = sys.graph();
    let t = sys.transpositions();
    let mut counts: Vec<(TripleKind, usize)> = Vec::new();
    for a in 0..sys.len() {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(a) {
                if c != b && g.adjacent(b, c) {
                    let kind = classify_triple(&t[a], &t[b], &t[c]);
                    match counts.iter_mut().find(|(k, _)| *k == kind) {
                        Some((_, n)) => *n += 1,
                        None => counts.push((kind, 1)),
                    }
                }
            }
        }
    }
    counts
}

/// The subgroup `<a, b, c>` of an `H`-type triple, with its center.
#[derive(Clone, Debug)]
pub struct HSubgroup<E: GroupElement> {
    pub group: GeneratedGroup<E>,
    pub center: Vec<E>,
    /// `(abc)^2`, which generates the center.
    pub center_generator: E,
}

/// Generates `<a, b, c>` and checks it is `3^{1+2}:2`: order 54 with a
/// center of order 3 generated by `(abc)^2`.
pub fn extract_h<E: GroupElement>(sys: &TranspositionSystem<E>, witness: [usize; 3]) -> Result<HSubgroup<E>> {
    let t = sys.transpositions();
    let [a, b, c] = witness.map(|k| t[k].clone());
    let group = match groups::generate(&[a.clone(), b.clone(), c.clone()], 10_000) {
        Ok(g) => g,
        Err(Error::EnumerationCap { .. }) => return Err(Error::UnexpectedSubgroup { order: None }),
        Err(e) => return Err(e),
    };
    if group.order() != 54 {
        return Err(Error::UnexpectedSubgroup { order: Some(group.order()) });
    }
    let center = groups::center(&group);
    let z = a.mul(&b).mul(&c).pow(2);
    let generated = [z.identity_like(), z.clone(), z.mul(&z)];
    let ok = center.len() == 3 && !z.is_identity() && generated.iter().all(|g| center.contains(g));
    if !ok {
        return Err(Error::internal(format!(
            "order-54 subgroup with center of order {} not generated by (abc)^2",
            center.len()
        )));
    }
    Ok(HSubgroup { group, center, center_generator: z })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub size: usize,
    pub valency: usize,
    /// Index of the smallest member.
    pub first: usize,
}

/// Classification of the transposition system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FischerReport {
    pub transpositions: usize,
    pub components: Vec<ComponentSummary>,
    pub connected: bool,
    /// `"symplectic"` when no `H`-triple exists, else
    /// `"non-symplectic (undetermined beyond H)"`.
    pub symplectic_type: String,
    pub h_triple: Option<[usize; 3]>,
    pub h_subgroup_order: Option<usize>,
    pub h_center_order: Option<usize>,
    pub group_order: Option<usize>,
    pub center_order: Option<usize>,
}

/// Everything about the system except the group order and center, which
/// need a full enumeration and are filled in by the caller when available.
pub fn report<E: GroupElement>(sys: &TranspositionSystem<E>) -> Result<FischerReport> {
    let comps = sys.components()?;
    let components = comps
        .iter()
        .map(|c| Ok(ComponentSummary { size: c.len(), valency: sys.graph().valency(c)?, first: c[0] }))
        .collect::<Result<Vec<_>>>()?;
    let witness = detect_h_triple(sys);
    let (h_order, h_center) = match witness {
        Some(w) => match extract_h(sys, w) {
            Ok(h) => (Some(h.group.order()), Some(h.center.len())),
            Err(Error::UnexpectedSubgroup { order }) => (order, None),
            Err(e) => return Err(e),
        },
        None => (None, None),
    };
    Ok(FischerReport {
        transpositions: sys.len(),
        connected: components.len() <= 1,
        components,
        symplectic_type: match witness {
            None => "symplectic".to_string(),
            Some(_) => "non-symplectic (undetermined beyond H)".to_string(),
        },
        h_triple: witness,
        h_subgroup_order: h_order,
        h_center_order: h_center,
        group_order: None,
        center_order: None,
    })
}
