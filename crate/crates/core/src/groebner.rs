//! Truncated Gröbner bases for subfunctors of `F_p^k[C(-, x)]`.
//!
//! The leading monomial of an element is the minimum of its support. A
//! monomial `(g, i)` is divisible by `(f, i)` when `g = f ∘ e` for some
//! morphism `e`; admissibility makes `lm(v ∘ e) = lm(v) ∘ e`, which is what
//! division and completion rely on.
//!
//! Completion runs level by level up to the width bound `T`. At level `t`
//! the generators living at `t` are reduced into the basis, then S-pairs are
//! formed from every coincidence `lm(b1) ∘ e1 = lm(b2) ∘ e2` of translated
//! leading monomials at level `t`, and nonzero remainders are appended.
//! All hom-sets are finite, so each level terminates.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::category::CategoryOracle;
use crate::error::{domain, GcatError, Result};
use crate::field::PrimeField;
use crate::module::{ModElement, Monomial};

/// Generators of a subfunctor together with the truncation width.
#[derive(Debug, Clone)]
pub struct SubfunctorPresentation<M: Ord> {
    generators: Vec<ModElement<M>>,
    target: usize,
    k: usize,
    field: PrimeField,
    width: usize,
}

impl<M: Ord + Clone> SubfunctorPresentation<M> {
    pub fn new(
        target: usize,
        k: usize,
        field: PrimeField,
        width: usize,
        generators: Vec<ModElement<M>>,
    ) -> Result<Self> {
        for g in &generators {
            if g.target() != target || g.k() != k || g.field() != field {
                return domain(format!(
                    "generator lives in F_{}^{}[C(-, {})], expected F_{}^{}[C(-, {})]",
                    g.field().characteristic(),
                    g.k(),
                    g.target(),
                    field.characteristic(),
                    k,
                    target
                ));
            }
            if g.level() > width {
                return Err(GcatError::Truncation {
                    level: g.level(),
                    width,
                });
            }
        }
        Ok(SubfunctorPresentation {
            generators,
            target,
            k,
            field,
            width,
        })
    }

    pub fn generators(&self) -> &[ModElement<M>] {
        &self.generators
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Same presentation with one more generator.
    pub fn with_generator(&self, g: ModElement<M>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.push(g);
        SubfunctorPresentation::new(self.target, self.k, self.field, self.width, gens)
    }

    pub(crate) fn check_element(&self, v: &ModElement<M>) -> Result<()> {
        if v.target() != self.target || v.k() != self.k || v.field() != self.field {
            return domain("element does not live in the presented module");
        }
        if v.level() > self.width {
            return Err(GcatError::Truncation {
                level: v.level(),
                width: self.width,
            });
        }
        Ok(())
    }
}

/// A basis complete up to `width`, auto-reduced on leading monomials.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<M: Ord> {
    pub elements: Vec<ModElement<M>>,
    pub width: usize,
    pub category: String,
    pub target: usize,
    pub k: usize,
    pub field: PrimeField,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientTerm<M> {
    pub index: usize,
    pub e: M,
    pub scalar: u32,
}

#[derive(Debug, Clone)]
pub struct Division<M: Ord> {
    pub remainder: ModElement<M>,
    pub quotient: Vec<QuotientTerm<M>>,
}

/// Fully reduces `v` by `basis`.
///
/// The smallest remaining monomial is cancelled against the first basis
/// element whose leading monomial divides it, using the least divisor `e`.
/// Afterwards `v = Σ scalar · (basis[index] ∘ e) + remainder`.
pub fn divide<C: CategoryOracle>(
    oracle: &C,
    v: &ModElement<C::Mor>,
    basis: &[ModElement<C::Mor>],
) -> Result<Division<C::Mor>> {
    for b in basis {
        if b.target() != v.target() || b.k() != v.k() || b.field() != v.field() {
            return domain("divisor lives in a different module");
        }
        if b.is_zero() {
            return domain("cannot divide by zero");
        }
    }
    let field = v.field();
    let mut work = v.clone();
    let mut remainder = ModElement::zero(v.level(), v.target(), v.k(), field);
    let mut quotient = Vec::new();
    while let Some((m, c)) = work.leading() {
        let m = m.clone();
        let hit = basis.iter().enumerate().find_map(|(i, b)| {
            let (lm, lc) = b.leading().expect("nonzero basis element");
            if lm.coord != m.coord {
                return None;
            }
            oracle
                .first_divisor(&lm.morphism, &m.morphism)
                .map(|e| (i, e, lc))
        });
        match hit {
            Some((index, e, lc)) => {
                let scalar = field.div(c, lc);
                let shifted = basis[index].act(oracle, &e)?;
                work.add_scaled(&shifted, field.neg(scalar));
                quotient.push(QuotientTerm { index, e, scalar });
            }
            None => {
                remainder.add_term(m.clone(), c);
                work.add_term(m, field.neg(c));
            }
        }
    }
    Ok(Division {
        remainder,
        quotient,
    })
}

struct HomCache<'a, C: CategoryOracle> {
    oracle: &'a C,
    cache: HashMap<(usize, usize), Vec<C::Mor>>,
}

impl<'a, C: CategoryOracle> HomCache<'a, C> {
    fn get(&mut self, s: usize, t: usize) -> &[C::Mor] {
        let oracle = self.oracle;
        self.cache
            .entry((s, t))
            .or_insert_with(|| oracle.homs(s, t))
    }
}

type PairKey<M> = (usize, M, usize, M);

/// Completes a presentation to a Gröbner basis up to its width.
pub fn buchberger<C: CategoryOracle>(
    oracle: &C,
    presentation: &SubfunctorPresentation<C::Mor>,
) -> Result<GroebnerBasis<C::Mor>> {
    let mut gens: Vec<ModElement<C::Mor>> = Vec::new();
    for g in presentation.generators() {
        if !g.is_zero() && !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    gens.sort_by_key(|g| g.level());

    let mut homs = HomCache {
        oracle,
        cache: HashMap::new(),
    };
    let mut basis: Vec<ModElement<C::Mor>> = Vec::new();
    let mut next_gen = 0;
    for t in 0..=presentation.width() {
        while next_gen < gens.len() && gens[next_gen].level() == t {
            let r = divide(oracle, &gens[next_gen], &basis)?.remainder;
            push_monic(&mut basis, r);
            next_gen += 1;
        }

        let mut done: HashSet<PairKey<C::Mor>> = HashSet::new();
        loop {
            let mut by_monomial: BTreeMap<Monomial<C::Mor>, Vec<(usize, C::Mor)>> = BTreeMap::new();
            for (i, b) in basis.iter().enumerate() {
                if b.level() > t {
                    continue;
                }
                let (lm, _) = b.leading().expect("basis elements are nonzero");
                for e in homs.get(t, b.level()) {
                    let key = Monomial {
                        morphism: oracle.compose(&lm.morphism, e)?,
                        coord: lm.coord,
                    };
                    by_monomial.entry(key).or_default().push((i, e.clone()));
                }
            }
            let mut pairs = Vec::new();
            for hits in by_monomial.values() {
                let (i1, e1) = &hits[0];
                for (i2, e2) in &hits[1..] {
                    let key = (*i1, e1.clone(), *i2, e2.clone());
                    if done.insert(key) {
                        pairs.push(((*i1, e1.clone()), (*i2, e2.clone())));
                    }
                }
            }
            if pairs.is_empty() {
                break;
            }
            for ((i1, e1), (i2, e2)) in pairs {
                // both elements are monic, so the leading terms cancel
                let mut s = basis[i1].act(oracle, &e1)?;
                s.add_scaled(&basis[i2].act(oracle, &e2)?, s.field().neg(1));
                let r = divide(oracle, &s, &basis)?.remainder;
                push_monic(&mut basis, r);
            }
        }
    }

    let elements = interreduce(oracle, basis);
    Ok(GroebnerBasis {
        elements,
        width: presentation.width(),
        category: oracle.id().to_string(),
        target: presentation.target(),
        k: presentation.k(),
        field: presentation.field(),
    })
}

fn push_monic<M: Ord + Clone>(basis: &mut Vec<ModElement<M>>, mut r: ModElement<M>) {
    if !r.is_zero() {
        r.make_monic();
        basis.push(r);
    }
}

/// Drops elements whose leading monomial is divisible by another one; of two
/// mutually divisible leading monomials the earlier element is kept.
fn interreduce<C: CategoryOracle>(
    oracle: &C,
    basis: Vec<ModElement<C::Mor>>,
) -> Vec<ModElement<C::Mor>> {
    let mut kept: Vec<ModElement<C::Mor>> = Vec::with_capacity(basis.len());
    let lms: Vec<Monomial<C::Mor>> = basis
        .iter()
        .map(|b| b.leading().expect("nonzero").0.clone())
        .collect();
    for (i, b) in basis.iter().enumerate() {
        let redundant = lms.iter().enumerate().any(|(j, other)| {
            j != i
                && other.coord == lms[i].coord
                && oracle.first_divisor(&other.morphism, &lms[i].morphism).is_some()
                && !(j > i && oracle.first_divisor(&lms[i].morphism, &other.morphism).is_some())
        });
        if !redundant {
            kept.push(b.clone());
        }
    }
    kept
}

fn check_basis_element<M: Ord + Clone>(v: &ModElement<M>, gb: &GroebnerBasis<M>) -> Result<()> {
    if v.target() != gb.target || v.k() != gb.k || v.field() != gb.field {
        return domain("element does not live in the module of the basis");
    }
    if v.level() > gb.width {
        return Err(GcatError::Truncation {
            level: v.level(),
            width: gb.width,
        });
    }
    Ok(())
}

pub fn is_member<C: CategoryOracle>(
    oracle: &C,
    v: &ModElement<C::Mor>,
    gb: &GroebnerBasis<C::Mor>,
) -> Result<bool> {
    check_basis_element(v, gb)?;
    Ok(divide(oracle, v, &gb.elements)?.remainder.is_zero())
}

/// Monomials at level `t` divisible by a leading monomial of the basis.
pub fn leading_sieve<C: CategoryOracle>(
    oracle: &C,
    gb: &GroebnerBasis<C::Mor>,
    t: usize,
) -> Vec<Monomial<C::Mor>> {
    let lms: Vec<&Monomial<C::Mor>> = gb
        .elements
        .iter()
        .map(|b| b.leading().expect("nonzero").0)
        .collect();
    let mut out = Vec::new();
    for f in oracle.homs(t, gb.target) {
        for coord in 1..=gb.k {
            let covered = lms
                .iter()
                .any(|lm| lm.coord == coord && oracle.first_divisor(&lm.morphism, &f).is_some());
            if covered {
                out.push(Monomial {
                    morphism: f.clone(),
                    coord,
                });
            }
        }
    }
    out
}

/// `dim F(t)` for `t = 0..=width`, read off the leading monomials.
pub fn hilbert_function<C: CategoryOracle>(oracle: &C, gb: &GroebnerBasis<C::Mor>) -> Vec<usize> {
    (0..=gb.width)
        .map(|t| leading_sieve(oracle, gb, t).len())
        .collect()
}
