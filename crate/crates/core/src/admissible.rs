//! Admissible orders on the morphisms into an object.
//!
//! An order is admissible when (1) it is total on every hom-set `C(t, x)`
//! and (2) `f < f'` implies `f ∘ e < f' ∘ e` for every composable `e`.
//! Ascending chains in finite hom-sets always stabilise, so only totality,
//! antisymmetry and transitivity are checked for (1).

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::category::CategoryOracle;
use crate::error::{domain, Result};
use crate::finset::FinMap;

/// First differing position decides.
pub fn lex_compare(f: &FinMap, g: &FinMap) -> Result<Ordering> {
    if f.domain_size() != g.domain_size() || f.codomain_size() != g.codomain_size() {
        return domain(format!("{f} and {g} lie in different hom-sets"));
    }
    Ok(f.values().cmp(g.values()))
}

/// A comparison on a hom-set; `None` means incomparable.
pub trait AdmissibleComparator<M>: Sync {
    fn compare(&self, a: &M, b: &M) -> Option<Ordering>;
}

impl<M, F> AdmissibleComparator<M> for F
where
    F: Fn(&M, &M) -> Option<Ordering> + Sync,
{
    fn compare(&self, a: &M, b: &M) -> Option<Ordering> {
        self(a, b)
    }
}

/// The built-in order of a category instance.
pub struct NativeOrder<'a, C>(pub &'a C);

impl<C: CategoryOracle> AdmissibleComparator<C::Mor> for NativeOrder<'_, C> {
    fn compare(&self, a: &C::Mor, b: &C::Mor) -> Option<Ordering> {
        Some(self.0.admissible_cmp(a, b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Axiom1Violation<M> {
    Incomparable { a: M, b: M },
    /// `compare(a, b)` disagrees with `compare(b, a)`, or reports `Equal`
    /// for distinct morphisms.
    Antisymmetry { a: M, b: M },
    Transitivity { a: M, b: M, c: M },
}

/// `a < b` but `a ∘ e` is not below `b ∘ e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Axiom2Violation<M> {
    pub a: M,
    pub b: M,
    pub e: M,
}

/// `a ≠ b` with `a ∘ e = b ∘ e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CancellationViolation<M> {
    pub a: M,
    pub b: M,
    pub e: M,
}

#[derive(Debug, Clone, Serialize)]
pub struct AdmissibilityReport<M> {
    pub category: String,
    pub bound: usize,
    pub hom_sets: usize,
    pub pairs_checked: usize,
    pub axiom1: Vec<Axiom1Violation<M>>,
    pub axiom2: Vec<Axiom2Violation<M>>,
    pub cancellation: Vec<CancellationViolation<M>>,
}

impl<M> AdmissibilityReport<M> {
    pub fn passed(&self) -> bool {
        self.axiom1.is_empty() && self.axiom2.is_empty() && self.cancellation.is_empty()
    }
}

struct HomSetFindings<M> {
    pairs: usize,
    axiom1: Vec<Axiom1Violation<M>>,
    axiom2: Vec<Axiom2Violation<M>>,
    cancellation: Vec<CancellationViolation<M>>,
}

/// Exhaustively checks both axioms on every hom-set `C(t, x)` with
/// `t, x ≤ bound`, against every `e: s -> t` with `s ≤ bound`.
pub fn check_admissible<C, K>(oracle: &C, cmp: &K, bound: usize) -> AdmissibilityReport<C::Mor>
where
    C: CategoryOracle,
    K: AdmissibleComparator<C::Mor>,
{
    let hom_sets: Vec<(usize, usize)> = (0..=bound)
        .flat_map(|t| (0..=bound).map(move |x| (t, x)))
        .collect();
    let findings: Vec<HomSetFindings<C::Mor>> = hom_sets
        .par_iter()
        .map(|&(t, x)| check_hom_set(oracle, cmp, t, x, bound))
        .collect();
    let mut report = AdmissibilityReport {
        category: oracle.id().to_string(),
        bound,
        hom_sets: hom_sets.len(),
        pairs_checked: 0,
        axiom1: Vec::new(),
        axiom2: Vec::new(),
        cancellation: Vec::new(),
    };
    for f in findings {
        report.pairs_checked += f.pairs;
        report.axiom1.extend(f.axiom1);
        report.axiom2.extend(f.axiom2);
        report.cancellation.extend(f.cancellation);
    }
    report
}

fn check_hom_set<C, K>(oracle: &C, cmp: &K, t: usize, x: usize, bound: usize) -> HomSetFindings<C::Mor>
where
    C: CategoryOracle,
    K: AdmissibleComparator<C::Mor>,
{
    let homs = oracle.homs(t, x);
    let mut out = HomSetFindings {
        pairs: 0,
        axiom1: Vec::new(),
        axiom2: Vec::new(),
        cancellation: Vec::new(),
    };
    let n = homs.len();
    // order[i][j] caches compare(homs[i], homs[j])
    let order: Vec<Vec<Option<Ordering>>> = homs
        .iter()
        .map(|a| homs.iter().map(|b| cmp.compare(a, b)).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            out.pairs += 1;
            let (a, b) = (&homs[i], &homs[j]);
            match (order[i][j], order[j][i]) {
                (None, _) | (_, None) => out.axiom1.push(Axiom1Violation::Incomparable {
                    a: a.clone(),
                    b: b.clone(),
                }),
                (Some(Ordering::Equal), _) | (Some(_), Some(Ordering::Equal)) => out
                    .axiom1
                    .push(Axiom1Violation::Antisymmetry {
                        a: a.clone(),
                        b: b.clone(),
                    }),
                (Some(o1), Some(o2)) if o1 != o2.reverse() => {
                    out.axiom1.push(Axiom1Violation::Antisymmetry {
                        a: a.clone(),
                        b: b.clone(),
                    })
                }
                _ => {}
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if order[i][j] != Some(Ordering::Less) {
                continue;
            }
            for l in 0..n {
                if order[j][l] == Some(Ordering::Less) && order[i][l] != Some(Ordering::Less) {
                    out.axiom1.push(Axiom1Violation::Transitivity {
                        a: homs[i].clone(),
                        b: homs[j].clone(),
                        c: homs[l].clone(),
                    });
                }
            }
        }
    }
    for s in 0..=bound {
        for e in oracle.homs(s, t) {
            let composed: Vec<C::Mor> = homs
                .iter()
                .map(|a| oracle.compose(a, &e).expect("composable by construction"))
                .collect();
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    if i < j && composed[i] == composed[j] {
                        out.cancellation.push(CancellationViolation {
                            a: homs[i].clone(),
                            b: homs[j].clone(),
                            e: e.clone(),
                        });
                    }
                    if order[i][j] == Some(Ordering::Less)
                        && cmp.compare(&composed[i], &composed[j]) != Some(Ordering::Less)
                    {
                        out.axiom2.push(Axiom2Violation {
                            a: homs[i].clone(),
                            b: homs[j].clone(),
                            e: e.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{NaturalMonoid, OrderedSurjections};
    use crate::order::divides_os;

    fn map(n: usize, values: &[usize]) -> FinMap {
        FinMap::new(n, values.to_vec()).unwrap()
    }

    #[test]
    fn lex_examples() {
        assert_eq!(
            lex_compare(&map(2, &[1, 1, 2]), &map(2, &[1, 2, 1])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            lex_compare(&map(2, &[1, 2, 1]), &map(2, &[1, 2, 2])).unwrap(),
            Ordering::Less
        );
        let f = map(3, &[1, 2, 3, 1]);
        assert_eq!(lex_compare(&f, &f).unwrap(), Ordering::Equal);
        assert!(lex_compare(&map(2, &[1, 2]), &map(2, &[1, 2, 2])).is_err());
    }

    #[test]
    fn right_compatibility_sample() {
        let (a, b) = (map(2, &[1, 1, 2]), map(2, &[1, 2, 1]));
        let e = map(3, &[1, 2, 2, 3]);
        let ae = crate::finset::compose(&a, &e).unwrap();
        let be = crate::finset::compose(&b, &e).unwrap();
        assert_eq!(ae, map(2, &[1, 1, 1, 2]));
        assert_eq!(be, map(2, &[1, 2, 2, 1]));
        assert_eq!(lex_compare(&ae, &be).unwrap(), Ordering::Less);
    }

    #[test]
    fn lex_is_admissible_on_os() {
        let lex = |a: &FinMap, b: &FinMap| lex_compare(a, b).ok();
        let report = check_admissible(&OrderedSurjections, &lex, 4);
        assert!(report.passed(), "{:?}", report.axiom1.first());
        assert!(report.pairs_checked > 0);
    }

    #[test]
    fn divisibility_is_not_total() {
        let div = |a: &FinMap, b: &FinMap| {
            if a == b {
                Some(Ordering::Equal)
            } else if divides_os(a, b).ok().flatten().is_some() {
                Some(Ordering::Less)
            } else if divides_os(b, a).ok().flatten().is_some() {
                Some(Ordering::Greater)
            } else {
                None
            }
        };
        let report = check_admissible(&OrderedSurjections, &div, 3);
        assert!(report.axiom1.contains(&Axiom1Violation::Incomparable {
            a: map(2, &[1, 1, 2]),
            b: map(2, &[1, 2, 1]),
        }));
    }

    #[test]
    fn reversed_degree_is_admissible_on_monoid() {
        let report = check_admissible(&NaturalMonoid, &NativeOrder(&NaturalMonoid), 6);
        assert!(report.passed());
    }

    #[test]
    fn broken_order_is_caught() {
        // reversing the order on one level keeps every hom-set totally
        // ordered but breaks compatibility with precomposition
        let rev = |a: &FinMap, b: &FinMap| lex_compare(a, b).ok().map(|o| {
            if a.domain_size() == 3 {
                o.reverse()
            } else {
                o
            }
        });
        let report = check_admissible(&OrderedSurjections, &rev, 4);
        assert!(report.axiom1.is_empty());
        assert!(!report.axiom2.is_empty());
    }
}
