//! Seeded random inputs for property checks.
//!
//! Every generator takes the RNG explicitly; [`trial_rng`] derives an
//! independent stream per trial so that parallel runs stay reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{CategoryOracle, OrderedSurjections, PowerMap};
use crate::error::Result;
use crate::field::PrimeField;
use crate::finset::{FinMap, Permutation};
use crate::groebner::SubfunctorPresentation;
use crate::module::ModElement;
use crate::oracle::{level_monomials, oracle_member};
use crate::upoly::UPoly;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A map `{1..m} -> {1..n}` with uniform values.
pub fn map_with_domain<R: Rng>(rng: &mut R, m: usize, n: usize) -> FinMap {
    assert!(n > 0 || m == 0, "no maps from a nonempty set to the empty set");
    FinMap::new_unchecked(n, (0..m).map(|_| rng.gen_range(1..=n)).collect())
}

/// Domain size uniform in `0..=max_domain`, values uniform in `1..=n`.
pub fn map<R: Rng>(rng: &mut R, n: usize, max_domain: usize) -> FinMap {
    let m = rng.gen_range(0..=max_domain);
    map_with_domain(rng, m, n)
}

/// A random ordered surjection `{1..m} -> {1..n}`, built as a restricted
/// growth string. Not uniform over the hom-set, but every map has positive
/// probability.
pub fn ordered_surjection<R: Rng>(rng: &mut R, m: usize, n: usize) -> Option<FinMap> {
    if m < n || (n == 0 && m > 0) {
        return None;
    }
    let mut values = Vec::with_capacity(m);
    let mut top = 0;
    for i in 0..m {
        let remaining = m - i;
        let v = if remaining == n - top {
            top + 1
        } else if top == 0 {
            1
        } else {
            rng.gen_range(1..=(top + 1).min(n))
        };
        top = top.max(v);
        values.push(v);
    }
    Some(FinMap::new_unchecked(n, values))
}

pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut values: Vec<usize> = (1..=n).collect();
    values.shuffle(rng);
    Permutation::from_values(values).expect("shuffled identity")
}

/// Shape of random presentations over `Γ_os`.
#[derive(Debug, Clone)]
pub struct PresentationParams {
    pub max_target: usize,
    pub max_width: usize,
    pub primes: Vec<u32>,
    pub max_generators: usize,
    pub max_k: usize,
    pub max_terms: usize,
}

impl Default for PresentationParams {
    fn default() -> Self {
        PresentationParams {
            max_target: 3,
            max_width: 6,
            primes: vec![2, 5],
            max_generators: 3,
            max_k: 2,
            max_terms: 4,
        }
    }
}

/// An element at `level` with up to `terms` random monomials.
pub fn element<R: Rng>(
    rng: &mut R,
    level: usize,
    target: usize,
    k: usize,
    field: PrimeField,
    terms: usize,
) -> ModElement<FinMap> {
    let monomials = level_monomials(&OrderedSurjections, level, target, k);
    let mut v = ModElement::zero(level, target, k, field);
    if monomials.is_empty() {
        return v;
    }
    let p = field.characteristic();
    for _ in 0..terms {
        let m = monomials.choose(rng).expect("nonempty").clone();
        v.add_term(m, rng.gen_range(1..p));
    }
    v
}

pub fn presentation<R: Rng>(rng: &mut R, params: &PresentationParams) -> SubfunctorPresentation<FinMap> {
    let target = rng.gen_range(1..=params.max_target);
    let width = rng.gen_range(target..=params.max_width.max(target));
    let field = PrimeField::new(*params.primes.choose(rng).expect("a prime")).expect("prime");
    let k = rng.gen_range(1..=params.max_k);
    let count = rng.gen_range(0..=params.max_generators);
    let gens = (0..count)
        .map(|_| {
            let level = rng.gen_range(target..=width);
            let terms = rng.gen_range(1..=params.max_terms);
            element(rng, level, target, k, field, terms)
        })
        .collect();
    SubfunctorPresentation::new(target, k, field, width, gens).expect("consistent by construction")
}

/// A random linear combination of translates of the generators at a level
/// where at least one translate exists; `None` when there are no generators.
pub fn member_probe<R: Rng>(
    rng: &mut R,
    presentation: &SubfunctorPresentation<FinMap>,
) -> Option<ModElement<FinMap>> {
    let os = OrderedSurjections;
    let gens = presentation.generators();
    let min_level = gens.iter().map(|g| g.level()).min()?;
    let t = rng.gen_range(min_level..=presentation.width());
    let p = presentation.field().characteristic();
    let mut v = ModElement::zero(t, presentation.target(), presentation.k(), presentation.field());
    for g in gens.iter().filter(|g| g.level() <= t) {
        let homs = os.homs(t, g.level());
        for _ in 0..rng.gen_range(1..=3) {
            let e = homs.choose(rng).expect("levels at or above the target have homs");
            let c = rng.gen_range(0..p);
            v.add_scaled(&g.act(&os, e).expect("composable"), c);
        }
    }
    Some(v)
}

/// A random element at a random level, with no relation to the generators.
pub fn free_probe<R: Rng>(
    rng: &mut R,
    presentation: &SubfunctorPresentation<FinMap>,
) -> ModElement<FinMap> {
    let t = rng.gen_range(presentation.target()..=presentation.width());
    let terms = rng.gen_range(1..=4);
    element(
        rng,
        t,
        presentation.target(),
        presentation.k(),
        presentation.field(),
        terms,
    )
}

/// `F ⊆ G` with `G = F + ⟨v⟩` for some `v ∉ F(t)`; returns `(F, G, t)`.
pub fn nested_pair<R: Rng>(
    rng: &mut R,
    params: &PresentationParams,
) -> (
    SubfunctorPresentation<FinMap>,
    SubfunctorPresentation<FinMap>,
    usize,
) {
    loop {
        let f = presentation(rng, params);
        for _ in 0..8 {
            let v = free_probe(rng, &f);
            if v.is_zero() {
                continue;
            }
            if !oracle_member(&OrderedSurjections, &v, &f).expect("within width") {
                let t = v.level();
                let g = f.with_generator(v).expect("same module");
                return (f, g, t);
            }
        }
    }
}

/// Nonzero polynomial of degree at most `max_degree`.
pub fn nonzero_poly<R: Rng>(rng: &mut R, field: PrimeField, max_degree: usize) -> UPoly {
    loop {
        let p = UPoly::random(rng, field, max_degree);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Generators for the monoid instance: `1..=max_generators` nonzero
/// polynomials of degree at most `max_degree`.
pub fn poly_generators<R: Rng>(
    rng: &mut R,
    field: PrimeField,
    max_generators: usize,
    max_degree: usize,
) -> Vec<UPoly> {
    let count = rng.gen_range(1..=max_generators);
    (0..count)
        .map(|_| nonzero_poly(rng, field, max_degree))
        .collect()
}

/// The monoid presentation generated by `polys`, each placed at the level of
/// its degree.
pub fn poly_presentation(
    field: PrimeField,
    width: usize,
    polys: &[UPoly],
) -> Result<SubfunctorPresentation<PowerMap>> {
    let gens = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.to_element(p.degree().expect("nonzero")))
        .collect::<Result<Vec<_>>>()?;
    SubfunctorPresentation::new(0, 1, field, width, gens)
}

/// A degree-`≤ max_degree` probe: half the time a multiple of `divisor`.
pub fn poly_probe<R: Rng>(rng: &mut R, divisor: &UPoly, max_degree: usize) -> UPoly {
    let field = divisor.field();
    let d = divisor.degree().unwrap_or(0);
    if rng.gen_bool(0.5) && d <= max_degree {
        UPoly::random(rng, field, max_degree - d).mul(divisor)
    } else {
        UPoly::random(rng, field, max_degree)
    }
}
