//! Initial data of a subfunctor.
//!
//! For `F ⊆ F_p^k[C(-, x)]` and `f ∈ C(t, x)` the initial subspace at `f` is
//! the image under the `f`-coordinate projection of the elements of `F(t)`
//! supported on `{g | f ≤ g}`. In reduced row echelon form with columns in
//! ascending monomial order, those elements are spanned by the rows whose
//! pivot lies at or after the first column of `f`.

use crate::category::CategoryOracle;
use crate::error::Result;
use crate::field::PrimeField;
use crate::groebner::SubfunctorPresentation;
use crate::linalg::RowEchelon;
use crate::oracle::level_span;

/// One subspace of `F_p^k` per morphism of `C(t, x)`, in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialData<M> {
    pub level: usize,
    pub entries: Vec<(M, RowEchelon)>,
}

impl<M: PartialEq> InitialData<M> {
    pub fn at(&self, f: &M) -> Option<&RowEchelon> {
        self.entries.iter().find(|(g, _)| g == f).map(|(_, s)| s)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.entries.iter().map(|(_, s)| s.rank()).collect()
    }
}

pub fn tilde_at<C: CategoryOracle>(
    oracle: &C,
    presentation: &SubfunctorPresentation<C::Mor>,
    t: usize,
) -> Result<InitialData<C::Mor>> {
    let span = level_span(oracle, presentation, t)?;
    let k = presentation.k();
    let field: PrimeField = presentation.field();
    let rows = span.echelon.rows();
    let pivots = span.echelon.pivots();
    let entries = oracle
        .homs(t, presentation.target())
        .into_iter()
        .enumerate()
        .map(|(i, f)| {
            let first = i * k;
            let projected = rows
                .iter()
                .zip(pivots)
                .filter(|(_, &p)| p >= first)
                .map(|(r, _)| r[first..first + k].to_vec());
            (f, RowEchelon::from_rows(field, k, projected))
        })
        .collect();
    Ok(InitialData { level: t, entries })
}

/// Violations of `F̃(t)_f ⊆ F̃(s)_{f∘e}` for `e: s -> t`, all `s, t ≤ max_level`.
pub fn monotonicity_violations<C: CategoryOracle>(
    oracle: &C,
    presentation: &SubfunctorPresentation<C::Mor>,
    max_level: usize,
) -> Result<Vec<(C::Mor, C::Mor)>> {
    let top = max_level.min(presentation.width());
    let data: Vec<InitialData<C::Mor>> = (0..=top)
        .map(|t| tilde_at(oracle, presentation, t))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for t in 0..=top {
        for (f, sub) in &data[t].entries {
            for s in t..=top {
                for e in oracle.homs(s, t) {
                    let fe = oracle.compose(f, &e)?;
                    let bigger = data[s].at(&fe).expect("composite lies in C(s, x)");
                    if !sub.is_subspace_of(bigger) {
                        out.push((f.clone(), e));
                    }
                }
            }
        }
    }
    Ok(out)
}
