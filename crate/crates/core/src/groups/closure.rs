use indexmap::IndexSet;
use rayon::prelude::*;

use super::{check_compatible, GroupElement};
use crate::{Error, Result};

/// Default enumeration cap: room for Sp6(2), order 1 451 520.
pub const DEFAULT_MAX_ORDER: usize = 2_000_000;

/// A fully enumerated finite group.
///
/// Elements are listed breadth-first from the identity: layer by layer in
/// word length over the generators, each layer sorted by the element order.
#[derive(Clone, Debug)]
pub struct GeneratedGroup<E: GroupElement> {
    generators: Vec<E>,
    elements: IndexSet<E>,
}

impl<E: GroupElement> GeneratedGroup<E> {
    pub(crate) fn from_parts(generators: Vec<E>, elements: IndexSet<E>) -> Self {
        Self { generators, elements }
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &E> {
        self.elements.iter()
    }

    pub fn element(&self, index: usize) -> &E {
        &self.elements[index]
    }

    pub fn contains(&self, g: &E) -> bool {
        self.elements.contains(g)
    }

    pub fn index_of(&self, g: &E) -> Option<usize> {
        self.elements.get_index_of(g)
    }

    pub fn identity(&self) -> &E {
        &self.elements[0]
    }
}

/// Breadth-first closure of `generators` under right multiplication.
///
/// Each layer is computed in parallel and then sorted, so the enumeration
/// order does not depend on the thread count.
pub fn generate<E: GroupElement>(generators: &[E], max_order: usize) -> Result<GeneratedGroup<E>> {
    let first =
        generators.first().ok_or_else(|| Error::Structure("cannot generate from an empty list".into()))?;
    check_compatible(generators)?;

    let mut elements = IndexSet::new();
    elements.insert(first.identity_like());
    let mut frontier = 0..1;
    while !frontier.is_empty() {
        let known = &elements;
        let mut layer: Vec<E> = frontier
            .clone()
            .into_par_iter()
            .flat_map_iter(|k| {
                let x = &known[k];
                generators.iter().map(move |g| x.mul(g))
            })
            .filter(|y| !known.contains(y))
            .collect();
        layer.par_sort_unstable();
        layer.dedup();
        let start = elements.len();
        if start + layer.len() > max_order {
            return Err(Error::EnumerationCap { cap: max_order, reached: start + layer.len() });
        }
        elements.extend(layer);
        frontier = start..elements.len();
    }
    Ok(GeneratedGroup::from_parts(generators.to_vec(), elements))
}

/// Smallest set containing `seed` and closed under conjugation by
/// `generators`, returned sorted.
pub fn conjugacy_closure<E: GroupElement>(seed: &[E], generators: &[E], cap: usize) -> Result<Vec<E>> {
    if let Some(bad) = seed.iter().find(|s| !s.is_involution()) {
        return Err(Error::Structure(format!("seed element {bad:?} is not an involution")));
    }
    let all: Vec<E> = seed.iter().chain(generators).cloned().collect();
    check_compatible(&all)?;
    let inverses: Vec<E> = generators.iter().map(|g| g.inverse()).collect();

    let mut found: IndexSet<E> = seed.iter().cloned().collect();
    let mut next = 0;
    while next < found.len() {
        let x = found[next].clone();
        next += 1;
        for (g, g_inv) in generators.iter().zip(&inverses) {
            found.insert(g.mul(&x).mul(g_inv));
        }
        if found.len() > cap {
            return Err(Error::EnumerationCap { cap, reached: found.len() });
        }
    }
    let mut out: Vec<E> = found.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Elements of `group` commuting with every generator.
pub fn center<E: GroupElement>(group: &GeneratedGroup<E>) -> Vec<E> {
    let gens = group.generators();
    group.elements.par_iter().filter(|z| gens.iter().all(|g| z.mul(g) == g.mul(z))).cloned().collect()
}
