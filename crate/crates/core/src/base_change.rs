//! Factorisations and base-change data between the categories of finite
//! sets, and the free-module adjunction over `Z/q`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{domain, GcatError, Result};
use crate::finset::{classify, compose, image_factorization, splitting, FinMap, Permutation};

/// Splits a surjection `g` as `g = τ ∘ f` with `f` ordered.
///
/// `τ` lists the values of `g` in order of first appearance, so `g^! ∘ τ`
/// is increasing.
pub fn sur_to_os_perm(g: &FinMap) -> Result<(FinMap, Permutation)> {
    if !classify(g).surjective {
        return domain(format!("{g} is not surjective"));
    }
    let n = g.codomain_size();
    let mut label = vec![0usize; n + 1];
    let mut tau = Vec::with_capacity(n);
    for &v in g.values() {
        if label[v] == 0 {
            tau.push(v);
            label[v] = tau.len();
        }
    }
    let f = FinMap::new_unchecked(n, g.values().iter().map(|&v| label[v]).collect());
    Ok((f, Permutation::from_values(tau)?))
}

/// `σ ∘ f`.
pub fn os_perm_to_sur(f: &FinMap, sigma: &Permutation) -> Result<FinMap> {
    compose(sigma.as_map(), f)
}

/// The functor to injections: `f ↦ f^!`.
pub fn os_to_inj(f: &FinMap) -> Result<FinMap> {
    if !classify(f).ordered_surjective {
        return domain(format!("{f} is not an ordered surjection"));
    }
    splitting(f)
}

/// The ordered surjection `{1..m} -> {1..k}` whose preimage minima are the
/// given increasing positions; requires `mins[0] = 1`.
fn ordered_surjection_with_minima(m: usize, mins: &[usize]) -> FinMap {
    debug_assert!(mins.first() == Some(&1) && mins.windows(2).all(|w| w[0] < w[1]));
    let mut values = Vec::with_capacity(m);
    let mut block = 0;
    for i in 1..=m {
        if block < mins.len() && mins[block] == i {
            block += 1;
        }
        values.push(block);
    }
    FinMap::new_unchecked(mins.len(), values)
}

/// Writes an injection `u: {1..n} -> {1..m}` as `f^! ∘ σ`.
///
/// `f^!` is increasing and always sends 1 to 1, so only injections whose
/// image contains 1 are in the image of `(f, σ) ↦ f^! ∘ σ`; others are
/// rejected with a domain error. The pair is unique when it exists.
pub fn inj_cover(u: &FinMap) -> Result<(FinMap, Permutation)> {
    if !classify(u).injective {
        return domain(format!("{u} is not injective"));
    }
    let image: Vec<usize> = u.values().iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if image.first() != Some(&1) {
        return domain(format!(
            "{u} misses 1, which every splitting f^! hits, so it is not of the form f^! σ"
        ));
    }
    let f = ordered_surjection_with_minima(u.codomain_size(), &image);
    let sigma = u
        .values()
        .iter()
        .map(|v| image.binary_search(v).expect("value lies in the image") + 1)
        .collect();
    Ok((f, Permutation::from_values(sigma)?))
}

/// A cover of injections by ordered surjections that reaches everything:
/// `u = f^! ∘ v` with `f: {1..m} -> {1..n'}` ordered and `v: {1..n} -> {1..n'}`
/// injective, where `n' = n` when the image of `u` contains 1 and
/// `n' = n + 1` otherwise.
pub fn inj_cover_extended(u: &FinMap) -> Result<(FinMap, FinMap)> {
    if !classify(u).injective {
        return domain(format!("{u} is not injective"));
    }
    if u.codomain_size() == 0 {
        return Ok((FinMap::identity(0), FinMap::new_unchecked(0, Vec::new())));
    }
    let mut image: BTreeSet<usize> = u.values().iter().copied().collect();
    image.insert(1);
    let mins: Vec<usize> = image.into_iter().collect();
    let f = ordered_surjection_with_minima(u.codomain_size(), &mins);
    let v = u
        .values()
        .iter()
        .map(|x| mins.binary_search(x).expect("value lies in the image") + 1)
        .collect();
    Ok((f, FinMap::new_unchecked(mins.len(), v)))
}

/// The coproduct decomposition of `Γ(-, n)`: the component is the increasing
/// injection onto the image, the element is the surjection onto it.
pub fn gamma_decompose(f: &FinMap) -> (FinMap, FinMap) {
    image_factorization(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepDirection {
    Epi,
    Mono,
}

/// One step of a chain of epimorphisms and monomorphisms, certified on the
/// elements of a single evaluated object.
#[derive(Debug, Clone, Serialize)]
pub struct ChainStep {
    pub direction: StepDirection,
    pub level: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub hit: usize,
    pub injective: bool,
}

impl ChainStep {
    pub fn holds(&self) -> bool {
        match self.direction {
            StepDirection::Epi => self.hit == self.codomain_size,
            StepDirection::Mono => self.injective,
        }
    }
}

/// Evaluates `map` on `domain` and compares against `codomain`.
pub fn check_step<S, T, F>(
    direction: StepDirection,
    level: usize,
    domain: &[S],
    codomain: &[T],
    map: F,
) -> ChainStep
where
    T: Ord + Clone,
    F: Fn(&S) -> T,
{
    let targets: BTreeSet<T> = codomain.iter().cloned().collect();
    let images: Vec<T> = domain.iter().map(&map).collect();
    let distinct: BTreeSet<&T> = images.iter().collect();
    let hit = distinct.iter().filter(|t| targets.contains(**t)).count();
    ChainStep {
        direction,
        level,
        domain_size: domain.len(),
        codomain_size: targets.len(),
        hit,
        injective: distinct.len() == images.len(),
    }
}

/// A matrix over `Z/q`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct Matrix {
    pub q: u32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct RawMatrix {
    q: u32,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u32>>,
}

impl TryFrom<RawMatrix> for Matrix {
    type Error = GcatError;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        Matrix::new(raw.q, raw.rows, raw.cols, raw.entries)
    }
}

impl Matrix {
    pub fn new(q: u32, rows: usize, cols: usize, entries: Vec<Vec<u32>>) -> Result<Self> {
        if q < 2 {
            return domain(format!("modulus {q} must be at least 2"));
        }
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return domain(format!("entries do not form a {rows}x{cols} matrix"));
        }
        if entries.iter().flatten().any(|&e| e >= q) {
            return domain(format!("entries must be reduced mod {q}"));
        }
        Ok(Matrix {
            q,
            rows,
            cols,
            entries,
        })
    }

    /// The module map `(Z/q)^cols -> (Z/q)^rows`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let q = self.q as u64;
        self.entries
            .iter()
            .map(|row| {
                (row.iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum::<u64>()
                    % q) as u32
            })
            .collect()
    }
}

/// The map `A[X] -> A^r` sending basis element `i` to `phi[i]`, as the
/// `r × X` matrix with columns `phi`.
pub fn adjunction_to_matrix(q: u32, x: usize, r: usize, phi: &[Vec<u32>]) -> Result<Matrix> {
    if phi.len() != x {
        return domain(format!("expected {x} images, got {}", phi.len()));
    }
    if let Some(bad) = phi.iter().find(|v| v.len() != r) {
        return domain(format!("image {bad:?} is not a vector of length {r}"));
    }
    if q < 2 {
        return domain(format!("modulus {q} must be at least 2"));
    }
    let entries = (0..r)
        .map(|row| phi.iter().map(|col| col[row] % q).collect())
        .collect();
    Matrix::new(q, r, x, entries)
}

/// The columns of the matrix: where each basis element of `A[X]` goes.
pub fn matrix_to_adjunction(mx: &Matrix) -> Vec<Vec<u32>> {
    (0..mx.cols)
        .map(|c| mx.entries.iter().map(|row| row[c]).collect())
        .collect()
}

/// All vectors of `(Z/q)^r` in lexicographic order.
pub fn all_vectors(q: u32, r: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}
