//! Elements of free functor modules `F_p^k[C(-, x)]`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::category::CategoryOracle;
use crate::error::{domain, Result};
use crate::field::PrimeField;

/// A basis element `(f, i)` of `F_p^k[C(t, x)]`: morphism `f` in coordinate `i`
/// (1-indexed). Ordered by the admissible order on `f`, then by `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial<M> {
    pub morphism: M,
    pub coord: usize,
}

impl<M: fmt::Debug> fmt::Debug for Monomial<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}{:?}", self.coord, self.morphism)
    }
}

/// A level-homogeneous element of `F_p^k[C(-, x)]`.
///
/// Terms are kept in ascending monomial order with nonzero coefficients in
/// `0..p`; the first term is the leading one.
#[derive(Clone, PartialEq, Eq)]
pub struct ModElement<M: Ord> {
    level: usize,
    target: usize,
    k: usize,
    field: PrimeField,
    terms: BTreeMap<Monomial<M>, u32>,
}

impl<M: Ord + fmt::Debug> fmt::Debug for ModElement<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0@{}", self.level);
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{m:?}")?;
        }
        Ok(())
    }
}

impl<M: Ord + Clone> ModElement<M> {
    pub fn zero(level: usize, target: usize, k: usize, field: PrimeField) -> Self {
        ModElement {
            level,
            target,
            k,
            field,
            terms: BTreeMap::new(),
        }
    }

    /// Builds an element from `(morphism, coord, coefficient)` triples,
    /// checking every morphism lies in `C(level, target)`.
    pub fn from_terms<C, I>(
        oracle: &C,
        level: usize,
        target: usize,
        k: usize,
        field: PrimeField,
        terms: I,
    ) -> Result<Self>
    where
        C: CategoryOracle<Mor = M>,
        M: fmt::Debug,
        I: IntoIterator<Item = (M, usize, i64)>,
    {
        let mut v = ModElement::zero(level, target, k, field);
        for (morphism, coord, coeff) in terms {
            if oracle.source(&morphism) != level || oracle.target(&morphism) != target {
                return domain(format!(
                    "{:?} is not a morphism {level} -> {target}",
                    morphism
                ));
            }
            if coord == 0 || coord > k {
                return domain(format!("coordinate {coord} is outside 1..={k}"));
            }
            v.add_term(Monomial { morphism, coord }, field.reduce(coeff));
        }
        Ok(v)
    }

    pub fn level(&self) -> usize {
        self.level
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<M>, u32)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial<M>) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Monomial<M>, u32)> {
        self.terms.iter().next().map(|(m, &c)| (m, c))
    }

    /// The minimal monomial of the support with its coefficient.
    pub fn leading_monomial(&self) -> Result<(Monomial<M>, u32)> {
        match self.leading() {
            Some((m, c)) => Ok((m.clone(), c)),
            None => domain("the zero element has no leading monomial"),
        }
    }

    /// True when both elements live in the same `F_p^k[C(level, target)]`.
    pub fn same_space(&self, other: &Self) -> bool {
        self.level == other.level
            && self.target == other.target
            && self.k == other.k
            && self.field == other.field
    }

    pub fn add_term(&mut self, m: Monomial<M>, c: u32) {
        let f = self.field;
        let c = c % f.characteristic();
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                let sum = f.add(*o.get(), c);
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: u32) {
        assert!(self.same_space(other), "adding elements of different spaces");
        let f = self.field;
        for (m, &oc) in &other.terms {
            self.add_term(m.clone(), f.mul(c, oc));
        }
    }

    pub fn scale(&mut self, c: u32) {
        let f = self.field;
        if c % f.characteristic() == 0 {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v = f.mul(*v, c);
        }
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn make_monic(&mut self) {
        if let Some((_, c)) = self.leading() {
            let inv = self.field.inv(c);
            self.scale(inv);
        }
    }

    /// Precomposition `(f, i) ↦ (f ∘ e, i)` for `e: s -> level`.
    pub fn act<C>(&self, oracle: &C, e: &M) -> Result<Self>
    where
        C: CategoryOracle<Mor = M>,
        M: fmt::Debug,
    {
        if oracle.target(e) != self.level {
            return domain(format!(
                "cannot act by {:?}: its target is not level {}",
                e, self.level
            ));
        }
        let mut out = ModElement::zero(oracle.source(e), self.target, self.k, self.field);
        for (m, &c) in &self.terms {
            let morphism = oracle.compose(&m.morphism, e)?;
            out.add_term(
                Monomial {
                    morphism,
                    coord: m.coord,
                },
                c,
            );
        }
        Ok(out)
    }
}
