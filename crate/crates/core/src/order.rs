//! Quasi-orders, sieves and the divisibility order on maps into `{1..n}`.
//!
//! For maps `f, g` into the same set, `f ≤ g` when `f = g ∘ h` for some
//! ordered surjection `h`. On `Γ(n)` this order is a well-quasi-order; the
//! [`find_domination`] search and the [`higman_data`] reduction are the
//! finitary faces of that fact.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::finset::{enumerate_homs, CatKind, FinMap};

/// A decidable quasi-order on a carrier enumerable up to a size bound.
pub trait QOrderOracle {
    type Elem: Clone + Ord + fmt::Debug;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// Carrier elements of size at most `bound`.
    fn universe(&self, bound: usize) -> Vec<Self::Elem>;

    fn in_universe(&self, x: &Self::Elem, bound: usize) -> bool {
        self.universe(bound).contains(x)
    }
}

/// The natural numbers with their usual order; size is the value itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaturalOrder;

impl QOrderOracle for NaturalOrder {
    type Elem = usize;

    fn leq(&self, a: &usize, b: &usize) -> bool {
        a <= b
    }

    fn universe(&self, bound: usize) -> Vec<usize> {
        (0..=bound).collect()
    }

    fn in_universe(&self, x: &usize, bound: usize) -> bool {
        *x <= bound
    }
}

/// `Γ(n)` under divisibility by ordered surjections; size is the domain size.
#[derive(Debug, Clone, Copy)]
pub struct MapDivisibility {
    pub n: usize,
}

impl QOrderOracle for MapDivisibility {
    type Elem = FinMap;

    fn leq(&self, a: &FinMap, b: &FinMap) -> bool {
        a.codomain_size() == b.codomain_size() && first_witness(a, b).is_some()
    }

    fn universe(&self, bound: usize) -> Vec<FinMap> {
        (0..=bound)
            .flat_map(|m| enumerate_homs(CatKind::All, m, self.n))
            .collect()
    }

    fn in_universe(&self, x: &FinMap, bound: usize) -> bool {
        x.codomain_size() == self.n && x.domain_size() <= bound
    }
}

/// The lexicographically least ordered surjection `h` with `g ∘ h = f`.
pub fn divides_os(f: &FinMap, g: &FinMap) -> Result<Option<FinMap>> {
    if f.codomain_size() != g.codomain_size() {
        return domain(format!(
            "divisibility needs a shared codomain, got {} and {}",
            f.codomain_size(),
            g.codomain_size()
        ));
    }
    Ok(first_witness(f, g))
}

/// Every ordered surjection `h` with `g ∘ h = f`, in lexicographic order.
/// Returns an empty list when the codomains differ.
pub fn all_witnesses(f: &FinMap, g: &FinMap) -> Vec<FinMap> {
    let mut out = Vec::new();
    if f.codomain_size() == g.codomain_size() {
        witness_search(f, g, &mut |h| {
            out.push(h);
            true
        });
    }
    out
}

pub(crate) fn first_witness(f: &FinMap, g: &FinMap) -> Option<FinMap> {
    let mut found = None;
    witness_search(f, g, &mut |h| {
        found = Some(h);
        false
    });
    found
}

/// Backtracks over `h(i) ∈ g⁻¹(f(i))` keeping `h` a restricted growth
/// sequence that can still reach every value of `{1..m_g}`. The callback
/// returns whether to keep searching.
fn witness_search(f: &FinMap, g: &FinMap, emit: &mut dyn FnMut(FinMap) -> bool) {
    let (mf, mg) = (f.domain_size(), g.domain_size());
    if mf < mg {
        return;
    }
    // preimages[v] lists g⁻¹(v) in increasing order
    let mut preimages = vec![Vec::new(); g.codomain_size() + 1];
    for (j, &v) in g.values().iter().enumerate() {
        preimages[v].push(j + 1);
    }
    let mut h = Vec::with_capacity(mf);
    rec(f, mg, &preimages, &mut h, 0, emit);

    fn rec(
        f: &FinMap,
        mg: usize,
        preimages: &[Vec<usize>],
        h: &mut Vec<usize>,
        max: usize,
        emit: &mut dyn FnMut(FinMap) -> bool,
    ) -> bool {
        let i = h.len();
        if i == f.domain_size() {
            if max == mg {
                return emit(FinMap::new_unchecked(mg, h.clone()));
            }
            return true;
        }
        let remaining_after = f.domain_size() - i - 1;
        for &c in &preimages[f.values()[i]] {
            if c > max + 1 {
                break;
            }
            let new_max = max.max(c);
            if new_max + remaining_after < mg {
                continue;
            }
            h.push(c);
            let go_on = rec(f, mg, preimages, h, new_max, emit);
            h.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// The reduction data attached to a map by Higman's lemma.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HigmanData {
    /// Domain size of the map.
    pub lambda: usize,
    /// `None` exactly when the map is injective.
    pub reduction: Option<HigmanReduction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HigmanReduction {
    /// `m - p` where `p` is the largest position repeating an earlier value.
    pub mu: usize,
    /// The repeated value `f(p)`.
    pub pi: usize,
    /// `f` with position `p` deleted.
    pub reduced: FinMap,
}

pub fn higman_data(f: &FinMap) -> HigmanData {
    let m = f.domain_size();
    let mut seen = vec![false; f.codomain_size() + 1];
    let mut last_repeat = None;
    for (i, &v) in f.values().iter().enumerate() {
        if seen[v] {
            last_repeat = Some(i + 1);
        }
        seen[v] = true;
    }
    let reduction = last_repeat.map(|p| {
        let mut values = f.values().to_vec();
        let pi = values.remove(p - 1);
        HigmanReduction {
            mu: m - p,
            pi,
            reduced: FinMap::new_unchecked(f.codomain_size(), values),
        }
    });
    HigmanData {
        lambda: m,
        reduction,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DominationMode {
    FirstPair,
    Chain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domination {
    /// Indices `i < j` with `x_j ≤ x_i`.
    Pair(usize, usize),
    /// Increasing indices `α` with `x_α(b) ≤ x_α(a)` whenever `a < b`.
    Chain(Vec<usize>),
    None,
}

/// Searches the first `budget` terms of `seq` for a domination.
///
/// `FirstPair` returns the pair `i < j` with `x_j ≤ x_i` that is least in
/// the lexicographic order on `(j, i)`.
///
/// `Chain` follows the recursion for a dominated subsequence with "for
/// infinitely many later terms" replaced by "for the most later terms": at
/// each step the pool is the set of later indices dominated by the last
/// chosen term, and the next index is the smallest pool member dominating
/// the largest number of pool members after it.
pub fn find_domination<Q, I>(order: &Q, seq: I, budget: usize, mode: DominationMode) -> Domination
where
    Q: QOrderOracle,
    I: IntoIterator<Item = Q::Elem>,
{
    let mut terms: Vec<Q::Elem> = Vec::new();
    match mode {
        DominationMode::FirstPair => {
            for x in seq.into_iter().take(budget) {
                let j = terms.len();
                if let Some(i) = terms.iter().position(|y| order.leq(&x, y)) {
                    return Domination::Pair(i, j);
                }
                terms.push(x);
            }
            Domination::None
        }
        DominationMode::Chain => {
            terms.extend(seq.into_iter().take(budget));
            if terms.is_empty() {
                return Domination::None;
            }
            let len = terms.len();
            // below[i][j]: x_j ≤ x_i for j > i
            let below: Vec<Vec<bool>> = (0..len)
                .map(|i| {
                    (0..len)
                        .map(|j| j > i && order.leq(&terms[j], &terms[i]))
                        .collect()
                })
                .collect();
            let mut chain = Vec::new();
            let mut pool: Vec<usize> = (0..len).collect();
            while !pool.is_empty() {
                let score = |i: usize| pool.iter().filter(|&&j| below[i][j]).count();
                let best = pool
                    .iter()
                    .copied()
                    .max_by(|&a, &b| score(a).cmp(&score(b)).then(b.cmp(&a)))
                    .expect("pool is nonempty");
                chain.push(best);
                pool.retain(|&j| below[best][j]);
            }
            Domination::Chain(chain)
        }
    }
}

/// A downward-closed subset of a bounded universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sieve<T: Ord> {
    pub members: BTreeSet<T>,
    pub bound: usize,
}

impl<T: Ord + Clone> Sieve<T> {
    /// A pair `(x, y)` with `x ≤ y`, `y` a member and `x` not, if any.
    pub fn closure_violation<Q>(&self, order: &Q) -> Option<(T, T)>
    where
        Q: QOrderOracle<Elem = T>,
    {
        let universe = order.universe(self.bound);
        for y in &self.members {
            for x in &universe {
                if order.leq(x, y) && !self.members.contains(x) {
                    return Some((x.clone(), y.clone()));
                }
            }
        }
        None
    }
}

/// All universe elements below some generator.
pub fn generated_sieve<Q: QOrderOracle>(
    order: &Q,
    generators: &[Q::Elem],
    bound: usize,
) -> Result<Sieve<Q::Elem>> {
    if let Some(g) = generators.iter().find(|g| !order.in_universe(g, bound)) {
        return domain(format!("generator {g:?} lies outside the universe"));
    }
    let members = order
        .universe(bound)
        .into_iter()
        .filter(|x| generators.iter().any(|g| order.leq(x, g)))
        .collect();
    Ok(Sieve { members, bound })
}
