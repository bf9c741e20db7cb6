//! Graded presentations of small categories for the Gröbner engine.
//!
//! Objects are identified with natural numbers (their level). A category
//! instance supplies finite hom-sets, composition and divisor search. Its
//! admissible order on each hom-set `C(t, x)` is the `Ord` of the morphism
//! type restricted to that hom-set.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{domain, GcatError, Result};
use crate::finset::{compose, enumerate_homs, CatKind, FinMap};
use crate::order::all_witnesses;

pub trait CategoryOracle: Sync {
    type Mor: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync + Serialize;

    /// Short identifier recorded in basis files.
    fn id(&self) -> &'static str;

    /// `C(source, target)` in ascending admissible order.
    fn homs(&self, source: usize, target: usize) -> Vec<Self::Mor>;

    fn source(&self, f: &Self::Mor) -> usize;

    fn target(&self, f: &Self::Mor) -> usize;

    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;

    fn identity(&self, object: usize) -> Self::Mor;

    /// Every `e` with `basis ∘ e = target`, ascending.
    fn divisors(&self, basis: &Self::Mor, target: &Self::Mor) -> Vec<Self::Mor>;

    fn first_divisor(&self, basis: &Self::Mor, target: &Self::Mor) -> Option<Self::Mor> {
        self.divisors(basis, target).into_iter().next()
    }

    fn admissible_cmp(&self, a: &Self::Mor, b: &Self::Mor) -> Ordering {
        a.cmp(b)
    }
}

/// `Γ_os`: finite sets and ordered surjections, ordered lexicographically.
#[derive(Debug, Clone, Copy, Default)]
pub struct OrderedSurjections;

impl CategoryOracle for OrderedSurjections {
    type Mor = FinMap;

    fn id(&self) -> &'static str {
        "os"
    }

    fn homs(&self, source: usize, target: usize) -> Vec<FinMap> {
        enumerate_homs(CatKind::OrderedSurjections, source, target)
    }

    fn source(&self, f: &FinMap) -> usize {
        f.domain_size()
    }

    fn target(&self, f: &FinMap) -> usize {
        f.codomain_size()
    }

    fn compose(&self, g: &FinMap, f: &FinMap) -> Result<FinMap> {
        compose(g, f)
    }

    fn identity(&self, object: usize) -> FinMap {
        FinMap::identity(object)
    }

    fn divisors(&self, basis: &FinMap, target: &FinMap) -> Vec<FinMap> {
        all_witnesses(target, basis)
    }

    fn first_divisor(&self, basis: &FinMap, target: &FinMap) -> Option<FinMap> {
        if basis.codomain_size() != target.codomain_size() {
            return None;
        }
        crate::order::first_witness(target, basis)
    }
}

/// Multiplication by `x^degree`, viewed as a morphism `from -> to` of the
/// degree-filtered monoid `ℕ`.
///
/// The objects are the filtration levels `t ∈ ℕ`; `C(s, t)` holds the
/// degrees `d ≤ s - t`, composition adds degrees. With target `0` the free
/// module at level `t` is the space of polynomials of degree at most `t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PowerMap {
    pub from: usize,
    pub to: usize,
    pub degree: usize,
}

impl Ord for PowerMap {
    /// Within a hom-set: reversed numeric order on degrees, so the highest
    /// degree is the minimum.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.from, self.to)
            .cmp(&(other.from, other.to))
            .then(other.degree.cmp(&self.degree))
    }
}

impl PartialOrd for PowerMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PowerMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}:{}->{}", self.degree, self.from, self.to)
    }
}

/// The monoid `ℕ` filtered by degree.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaturalMonoid;

impl CategoryOracle for NaturalMonoid {
    type Mor = PowerMap;

    fn id(&self) -> &'static str {
        "nat"
    }

    fn homs(&self, source: usize, target: usize) -> Vec<PowerMap> {
        if source < target {
            return Vec::new();
        }
        (0..=source - target)
            .rev()
            .map(|degree| PowerMap {
                from: source,
                to: target,
                degree,
            })
            .collect()
    }

    fn source(&self, f: &PowerMap) -> usize {
        f.from
    }

    fn target(&self, f: &PowerMap) -> usize {
        f.to
    }

    fn compose(&self, g: &PowerMap, f: &PowerMap) -> Result<PowerMap> {
        if f.to != g.from {
            return Err(GcatError::Composition {
                g_domain: g.from,
                g_codomain: g.to,
                f_domain: f.from,
                f_codomain: f.to,
            });
        }
        Ok(PowerMap {
            from: f.from,
            to: g.to,
            degree: f.degree + g.degree,
        })
    }

    fn identity(&self, object: usize) -> PowerMap {
        PowerMap {
            from: object,
            to: object,
            degree: 0,
        }
    }

    fn divisors(&self, basis: &PowerMap, target: &PowerMap) -> Vec<PowerMap> {
        if basis.to != target.to || target.from < basis.from || target.degree < basis.degree {
            return Vec::new();
        }
        let degree = target.degree - basis.degree;
        if degree > target.from - basis.from {
            return Vec::new();
        }
        vec![PowerMap {
            from: target.from,
            to: basis.from,
            degree,
        }]
    }
}

impl PowerMap {
    pub fn new(from: usize, to: usize, degree: usize) -> Result<Self> {
        if from < to || degree > from - to {
            return domain(format!("x^{degree} is not a morphism {from} -> {to}"));
        }
        Ok(PowerMap { from, to, degree })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn os_divisors_agree_with_filtering() {
        let c = OrderedSurjections;
        for t in 0..=5 {
            for s in 0..=t {
                for x in 0..=s {
                    for b in c.homs(s, x) {
                        for g in c.homs(t, x) {
                            let filtered: Vec<FinMap> = c
                                .homs(t, s)
                                .into_iter()
                                .filter(|e| c.compose(&b, e).unwrap() == g)
                                .collect();
                            assert_eq!(c.divisors(&b, &g), filtered);
                            assert_eq!(c.first_divisor(&b, &g), filtered.first().cloned());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn monoid_divisors_agree_with_filtering() {
        let c = NaturalMonoid;
        for t in 0..=6 {
            for s in 0..=t {
                for b in c.homs(s, 0) {
                    for g in c.homs(t, 0) {
                        let filtered: Vec<PowerMap> = c
                            .homs(t, s)
                            .into_iter()
                            .filter(|e| c.compose(&b, e).unwrap() == g)
                            .collect();
                        assert_eq!(c.divisors(&b, &g), filtered);
                    }
                }
            }
        }
    }

    #[test]
    fn monoid_homs_ascend_in_admissible_order() {
        let hs = NaturalMonoid.homs(4, 1);
        assert_eq!(hs.iter().map(|h| h.degree).collect::<Vec<_>>(), vec![3, 2, 1, 0]);
        assert!(hs.windows(2).all(|w| w[0] < w[1]));
        assert!(NaturalMonoid.homs(1, 2).is_empty());
        assert!(PowerMap::new(3, 1, 3).is_err());
    }

    #[test]
    fn composition_is_associative() {
        let c = OrderedSurjections;
        for a in c.homs(5, 4) {
            for b in c.homs(4, 3) {
                for d in c.homs(3, 2) {
                    let left = c.compose(&d, &c.compose(&b, &a).unwrap()).unwrap();
                    let right = c.compose(&c.compose(&d, &b).unwrap(), &a).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }
}
