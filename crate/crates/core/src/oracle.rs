//! Row-reduction oracle for subfunctors.
//!
//! `F(t)` is computed directly as the row space of all translates `g ∘ e`
//! of the generators, with no reference to leading monomials or division.

use std::collections::HashMap;

use crate::category::CategoryOracle;
use crate::error::{domain, GcatError, Result};
use crate::groebner::SubfunctorPresentation;
use crate::linalg::RowEchelon;
use crate::module::{ModElement, Monomial};

/// The basis `C(t, x) × {1..k}` of level `t`, in ascending monomial order.
pub fn level_monomials<C: CategoryOracle>(
    oracle: &C,
    t: usize,
    target: usize,
    k: usize,
) -> Vec<Monomial<C::Mor>> {
    let mut out = Vec::new();
    for f in oracle.homs(t, target) {
        for coord in 1..=k {
            out.push(Monomial {
                morphism: f.clone(),
                coord,
            });
        }
    }
    out
}

/// `F(t)` as a row-reduced subspace of the dense coordinate space.
#[derive(Debug, Clone)]
pub struct LevelSpan<M> {
    pub level: usize,
    pub monomials: Vec<Monomial<M>>,
    index: HashMap<Monomial<M>, usize>,
    pub echelon: RowEchelon,
}

impl<M: Ord + Clone + std::hash::Hash> LevelSpan<M> {
    pub fn dense(&self, v: &ModElement<M>) -> Result<Vec<u32>> {
        let mut row = vec![0u32; self.monomials.len()];
        for (m, c) in v.terms() {
            match self.index.get(m) {
                Some(&i) => row[i] = c,
                None => return domain("monomial outside the level basis"),
            }
        }
        Ok(row)
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }
}

pub fn level_span<C: CategoryOracle>(
    oracle: &C,
    presentation: &SubfunctorPresentation<C::Mor>,
    t: usize,
) -> Result<LevelSpan<C::Mor>> {
    if t > presentation.width() {
        return Err(GcatError::Truncation {
            level: t,
            width: presentation.width(),
        });
    }
    let monomials = level_monomials(oracle, t, presentation.target(), presentation.k());
    let index: HashMap<Monomial<C::Mor>, usize> = monomials
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut span = LevelSpan {
        level: t,
        echelon: RowEchelon::new(presentation.field(), monomials.len()),
        monomials,
        index,
    };
    for g in presentation.generators() {
        for e in oracle.homs(t, g.level()) {
            let row = span.dense(&g.act(oracle, &e)?)?;
            span.echelon.insert(row);
        }
    }
    Ok(span)
}

/// Membership by solving the linear system of translates at `level(v)`.
pub fn oracle_member<C: CategoryOracle>(
    oracle: &C,
    v: &ModElement<C::Mor>,
    presentation: &SubfunctorPresentation<C::Mor>,
) -> Result<bool> {
    presentation.check_element(v)?;
    let span = level_span(oracle, presentation, v.level())?;
    Ok(span.echelon.contains(&span.dense(v)?))
}

/// `dim F(t)` for `t = 0..=width` by rank computation.
pub fn oracle_dims<C: CategoryOracle>(
    oracle: &C,
    presentation: &SubfunctorPresentation<C::Mor>,
) -> Result<Vec<usize>> {
    (0..=presentation.width())
        .map(|t| level_span(oracle, presentation, t).map(|s| s.dim()))
        .collect()
}
