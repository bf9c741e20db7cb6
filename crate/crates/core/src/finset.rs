//! Morphisms between the standard finite sets `{1, …, n}`.
//!
//! A [`FinMap`] is a dense, 1-indexed value sequence. Composition is written
//! `compose(g, f) = g ∘ f` and applies `f` first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, GcatError, Result};

/// A total map `{1..m} -> {1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFinMap", into = "RawFinMap")]
pub struct FinMap {
    // Field order matters: the derived `Ord` is lexicographic on `values`
    // within a fixed hom-set.
    m: usize,
    n: usize,
    values: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawFinMap {
    m: usize,
    n: usize,
    values: Vec<usize>,
}

impl TryFrom<RawFinMap> for FinMap {
    type Error = GcatError;

    fn try_from(raw: RawFinMap) -> Result<Self> {
        if raw.values.len() != raw.m {
            return domain(format!(
                "map declares m = {} but has {} values",
                raw.m,
                raw.values.len()
            ));
        }
        FinMap::new(raw.n, raw.values)
    }
}

impl From<FinMap> for RawFinMap {
    fn from(f: FinMap) -> Self {
        RawFinMap {
            m: f.m,
            n: f.n,
            values: f.values,
        }
    }
}

impl FinMap {
    /// Builds the map with the given value sequence into `{1..n}`.
    pub fn new(n: usize, values: Vec<usize>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|&&v| v == 0 || v > n) {
            return domain(format!("value {bad} is outside 1..={n}"));
        }
        Ok(FinMap {
            m: values.len(),
            n,
            values,
        })
    }

    pub(crate) fn new_unchecked(n: usize, values: Vec<usize>) -> Self {
        debug_assert!(values.iter().all(|&v| v >= 1 && v <= n));
        FinMap {
            m: values.len(),
            n,
            values,
        }
    }

    pub fn identity(n: usize) -> Self {
        FinMap::new_unchecked(n, (1..=n).collect())
    }

    pub fn domain_size(&self) -> usize {
        self.m
    }

    pub fn codomain_size(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `f(i)` for `i` in `1..=m`.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.m == self.n && self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn classify(&self) -> MapClass {
        classify(self)
    }
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{}->{}", self.values, self.m, self.n)
    }
}

impl fmt::Display for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "] ({}->{})", self.m, self.n)
    }
}

/// `g ∘ f`, i.e. `i ↦ g(f(i))`.
pub fn compose(g: &FinMap, f: &FinMap) -> Result<FinMap> {
    if f.n != g.m {
        return Err(GcatError::Composition {
            g_domain: g.m,
            g_codomain: g.n,
            f_domain: f.m,
            f_codomain: f.n,
        });
    }
    Ok(FinMap::new_unchecked(
        g.n,
        f.values.iter().map(|&v| g.values[v - 1]).collect(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapClass {
    pub injective: bool,
    pub surjective: bool,
    pub ordered_surjective: bool,
    pub bijective: bool,
}

pub fn classify(f: &FinMap) -> MapClass {
    let mut first_hit = vec![0usize; f.n + 1];
    let mut injective = true;
    for (i, &v) in f.values.iter().enumerate() {
        if first_hit[v] == 0 {
            first_hit[v] = i + 1;
        } else {
            injective = false;
        }
    }
    let surjective = first_hit[1..].iter().all(|&p| p != 0);
    let ordered_surjective = surjective && first_hit[1..].windows(2).all(|w| w[0] < w[1]);
    MapClass {
        injective,
        surjective,
        ordered_surjective,
        bijective: injective && surjective,
    }
}

/// One of the four categories of finite sets handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CatKind {
    All,
    Surjections,
    OrderedSurjections,
    Injections,
}

impl CatKind {
    pub fn contains(self, f: &FinMap) -> bool {
        let c = classify(f);
        match self {
            CatKind::All => true,
            CatKind::Surjections => c.surjective,
            CatKind::OrderedSurjections => c.ordered_surjective,
            CatKind::Injections => c.injective,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            CatKind::All => "all",
            CatKind::Surjections => "sur",
            CatKind::OrderedSurjections => "os",
            CatKind::Injections => "inj",
        }
    }
}

impl FromStr for CatKind {
    type Err = GcatError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(CatKind::All),
            "sur" | "surjections" => Ok(CatKind::Surjections),
            "os" | "ordered_surjections" => Ok(CatKind::OrderedSurjections),
            "inj" | "injections" => Ok(CatKind::Injections),
            other => Err(GcatError::Parse(format!(
                "unknown category `{other}` (expected all, sur, os or inj)"
            ))),
        }
    }
}

impl fmt::Display for CatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// All morphisms `{1..m} -> {1..n}` of `kind`, lexicographic in the values.
pub fn enumerate_homs(kind: CatKind, m: usize, n: usize) -> Vec<FinMap> {
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(m);
    let mut hits = vec![0usize; n + 1];
    enumerate_rec(kind, m, n, &mut values, &mut hits, 0, &mut out);
    out
}

fn enumerate_rec(
    kind: CatKind,
    m: usize,
    n: usize,
    values: &mut Vec<usize>,
    hits: &mut [usize],
    distinct: usize,
    out: &mut Vec<FinMap>,
) {
    let pos = values.len();
    if pos == m {
        let complete = match kind {
            CatKind::All | CatKind::Injections => true,
            CatKind::Surjections | CatKind::OrderedSurjections => distinct == n,
        };
        if complete {
            out.push(FinMap::new_unchecked(n, values.clone()));
        }
        return;
    }
    let remaining = m - pos;
    let upper = match kind {
        // Restricted growth: the next value is at most one past the largest so far.
        CatKind::OrderedSurjections => (distinct + 1).min(n),
        _ => n,
    };
    for v in 1..=upper {
        let fresh = hits[v] == 0;
        if kind == CatKind::Injections && !fresh {
            continue;
        }
        let distinct_after = distinct + usize::from(fresh);
        if matches!(kind, CatKind::Surjections | CatKind::OrderedSurjections)
            && distinct_after + (remaining - 1) < n
        {
            continue;
        }
        hits[v] += 1;
        values.push(v);
        enumerate_rec(kind, m, n, values, hits, distinct_after, out);
        values.pop();
        hits[v] -= 1;
    }
}

/// A bijection `{1..n} -> {1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FinMap", into = "FinMap")]
pub struct Permutation(FinMap);

impl TryFrom<FinMap> for Permutation {
    type Error = GcatError;

    fn try_from(f: FinMap) -> Result<Self> {
        Permutation::new(f)
    }
}

impl From<Permutation> for FinMap {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn new(f: FinMap) -> Result<Self> {
        if f.m != f.n || !classify(&f).bijective {
            return domain(format!("{f} is not a permutation"));
        }
        Ok(Permutation(f))
    }

    pub fn from_values(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        Permutation::new(FinMap::new(n, values)?)
    }

    pub fn identity(n: usize) -> Self {
        Permutation(FinMap::identity(n))
    }

    pub fn as_map(&self) -> &FinMap {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.m
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.m];
        for (i, &v) in self.0.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(FinMap::new_unchecked(self.0.n, inv))
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        enumerate_homs(CatKind::Injections, n, n)
            .into_iter()
            .map(Permutation)
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0.values)
    }
}

/// The section `f^!` of a surjection: `f^!(i) = min f⁻¹(i)`.
pub fn splitting(f: &FinMap) -> Result<FinMap> {
    let mut first = vec![0usize; f.n];
    for (i, &v) in f.values.iter().enumerate() {
        if first[v - 1] == 0 {
            first[v - 1] = i + 1;
        }
    }
    if first.contains(&0) {
        return domain(format!("{f} is not surjective"));
    }
    Ok(FinMap::new_unchecked(f.m, first))
}

/// Factors `f = u ∘ s` with `s` surjective onto the image and `u` the
/// increasing injection enumerating the image.
pub fn image_factorization(f: &FinMap) -> (FinMap, FinMap) {
    let mut in_image = vec![false; f.n + 1];
    for &v in &f.values {
        in_image[v] = true;
    }
    let image: Vec<usize> = (1..=f.n).filter(|&v| in_image[v]).collect();
    let mut rank = vec![0usize; f.n + 1];
    for (r, &v) in image.iter().enumerate() {
        rank[v] = r + 1;
    }
    let k = image.len();
    let s = FinMap::new_unchecked(k, f.values.iter().map(|&v| rank[v]).collect());
    let u = FinMap::new_unchecked(f.n, image);
    (u, s)
}
