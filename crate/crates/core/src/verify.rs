//! Property suites behind `gcat verify`.
//!
//! Every suite is deterministic in its seed: random trials draw from
//! per-trial streams and results are merged in trial order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::admissible::{check_admissible, lex_compare, NativeOrder};
use crate::base_change::{
    adjunction_to_matrix, all_vectors, gamma_decompose, inj_cover, matrix_to_adjunction,
    os_perm_to_sur, sur_to_os_perm,
};
use crate::category::{NaturalMonoid, OrderedSurjections};
use crate::error::{GcatError, Result};
use crate::field::PrimeField;
use crate::finset::{classify, compose, enumerate_homs, splitting, CatKind, FinMap, Permutation};
use crate::groebner::{buchberger, hilbert_function, is_member};
use crate::oracle::{oracle_dims, oracle_member};
use crate::order::{
    divides_os, find_domination, generated_sieve, higman_data, Domination, DominationMode,
    MapDivisibility,
};
use crate::sample;
use crate::tilde::{monotonicity_violations, tilde_at};
use crate::upoly::UPoly;

const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    StronglyNoeth,
    Higman,
    Contra1,
    Admissible,
    Tilde,
    Adjunction,
    FiEpi,
    OracleEquiv,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::StronglyNoeth,
        Suite::Higman,
        Suite::Contra1,
        Suite::Admissible,
        Suite::Tilde,
        Suite::Adjunction,
        Suite::FiEpi,
        Suite::OracleEquiv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::StronglyNoeth => "stronglynoeth",
            Suite::Higman => "higman",
            Suite::Contra1 => "contra1",
            Suite::Admissible => "admissible",
            Suite::Tilde => "tilde",
            Suite::Adjunction => "adjunction",
            Suite::FiEpi => "fi-epi",
            Suite::OracleEquiv => "oracle-equiv",
        }
    }

    /// `(max, trials)` used when the caller gives none.
    pub fn defaults(self) -> (usize, usize) {
        match self {
            Suite::StronglyNoeth => (12, 500),
            Suite::Higman => (8, 10_000),
            Suite::Contra1 => (4, 0),
            Suite::Admissible => (4, 0),
            Suite::Tilde => (4, 200),
            Suite::Adjunction => (3, 0),
            Suite::FiEpi => (6, 0),
            Suite::OracleEquiv => (6, 100),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = GcatError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                GcatError::Parse(format!("unknown suite `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub max: usize,
    pub trials: usize,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn for_suite(suite: Suite, max: Option<usize>, trials: Option<usize>, seed: u64) -> Self {
        let (dm, dt) = suite.defaults();
        SuiteConfig {
            max: max.unwrap_or(dm),
            trials: trials.unwrap_or(dt),
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub max: usize,
    pub trials: usize,
    pub cases: u64,
    pub failures: u64,
    pub checks: Vec<Check>,
    pub counterexamples: Vec<Value>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Outcomes gathered by one worker, merged in a fixed order afterwards.
#[derive(Default)]
struct Tally {
    checks: Vec<Check>,
    counterexamples: Vec<Value>,
}

impl Tally {
    fn record(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> Value) {
        let check = match self.checks.iter_mut().position(|c| c.name == name) {
            Some(i) => &mut self.checks[i],
            None => {
                self.checks.push(Check {
                    name: name.to_string(),
                    cases: 0,
                    failures: 0,
                });
                self.checks.last_mut().expect("just pushed")
            }
        };
        check.cases += 1;
        if !ok {
            check.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                let mut w = witness();
                if let Value::Object(map) = &mut w {
                    map.insert("check".into(), json!(name));
                }
                self.counterexamples.push(w);
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        for c in other.checks {
            match self.checks.iter_mut().find(|d| d.name == c.name) {
                Some(d) => {
                    d.cases += c.cases;
                    d.failures += c.failures;
                }
                None => self.checks.push(c),
            }
        }
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
    }

    fn merge_all(tallies: Vec<Tally>) -> Tally {
        let mut out = Tally::default();
        for t in tallies {
            out.merge(t);
        }
        out
    }
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let tally = match suite {
        Suite::StronglyNoeth => strongly_noetherian(cfg),
        Suite::Higman => higman(cfg),
        Suite::Contra1 => contra1(cfg),
        Suite::Admissible => admissible(cfg),
        Suite::Tilde => tilde(cfg)?,
        Suite::Adjunction => adjunction(cfg)?,
        Suite::FiEpi => fi_epi(cfg),
        Suite::OracleEquiv => oracle_equiv(cfg)?,
    };
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        seed: cfg.seed,
        max: cfg.max,
        trials: cfg.trials,
        cases: tally.checks.iter().map(|c| c.cases).sum(),
        failures: tally.checks.iter().map(|c| c.failures).sum(),
        checks: tally.checks,
        counterexamples: tally.counterexamples,
    })
}

fn par_trials<F>(cfg: &SuiteConfig, body: F) -> Tally
where
    F: Fn(&mut rand_chacha::ChaCha8Rng, &mut Tally, u64) + Sync,
{
    let tallies: Vec<Tally> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|trial| {
            let mut rng = sample::trial_rng(cfg.seed, trial);
            let mut tally = Tally::default();
            body(&mut rng, &mut tally, trial);
            tally
        })
        .collect();
    Tally::merge_all(tallies)
}

fn par_trials_fallible<F>(cfg: &SuiteConfig, body: F) -> Result<Tally>
where
    F: Fn(&mut rand_chacha::ChaCha8Rng, &mut Tally, u64) -> Result<()> + Sync,
{
    let tallies: Vec<Tally> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|trial| {
            let mut rng = sample::trial_rng(cfg.seed, trial);
            let mut tally = Tally::default();
            body(&mut rng, &mut tally, trial).map(|_| tally)
        })
        .collect::<Result<_>>()?;
    Ok(Tally::merge_all(tallies))
}

fn leq(f: &FinMap, g: &FinMap) -> bool {
    matches!(divides_os(f, g), Ok(Some(_)))
}

/// Sequence length for the bad-sequence experiment.
const SEQUENCE_LENGTH: usize = 200;

fn strongly_noetherian(cfg: &SuiteConfig) -> Tally {
    let max_domain = cfg.max;
    par_trials(cfg, |rng, tally, trial| {
        let n = rng.gen_range(1..=3);
        let seq: Vec<FinMap> = (0..SEQUENCE_LENGTH)
            .map(|_| sample::map(rng, n, max_domain))
            .collect();
        let order = MapDivisibility { n };
        let found = find_domination(&order, seq.iter().cloned(), SEQUENCE_LENGTH, DominationMode::FirstPair);
        let ok = match &found {
            Domination::Pair(i, j) => i < j && leq(&seq[*j], &seq[*i]),
            _ => false,
        };
        tally.record("domination_found", ok, || json!({ "trial": trial, "n": n, "result": found }));

        for _ in 0..20 {
            let d = rng.gen_range(0..=max_domain.min(8));
            let h = sample::map_with_domain(rng, d, n);
            let d1 = if d == 0 { 0 } else { rng.gen_range(d..=max_domain.min(8)) };
            let e1 = sample::ordered_surjection(rng, d1, d).expect("d1 >= d");
            let g = compose(&h, &e1).expect("composable");
            let d2 = if d1 == 0 { 0 } else { rng.gen_range(d1..=max_domain.min(8)) };
            let e2 = sample::ordered_surjection(rng, d2, d1).expect("d2 >= d1");
            let f = compose(&g, &e2).expect("composable");
            tally.record("reflexive", divides_os(&f, &f).ok().flatten().map_or(false, |w| w.is_identity()), || {
                json!({ "f": f })
            });
            let ok = leq(&f, &g) && leq(&g, &h) && leq(&f, &h);
            tally.record("transitive", ok, || json!({ "f": f, "g": g, "h": h }));
        }

        if trial % 10 == 0 {
            let order = MapDivisibility { n: 2 };
            let gens: Vec<FinMap> = (0..rng.gen_range(1..=2))
                .map(|_| sample::map(rng, 2, 3))
                .collect();
            let sieve = generated_sieve(&order, &gens, 4).expect("generators lie in the universe");
            let violation = sieve.closure_violation(&order);
            tally.record("sieve_closed", violation.is_none(), || {
                json!({ "generators": gens, "violation": violation })
            });
        }
    })
}

fn insert_at(f: &FinMap, position: usize, value: usize) -> FinMap {
    let mut values = f.values().to_vec();
    values.insert(position - 1, value);
    FinMap::new(f.codomain_size(), values).expect("value within codomain")
}

fn higman(cfg: &SuiteConfig) -> Tally {
    let max_domain = cfg.max.max(1);
    par_trials(cfg, |rng, tally, _| {
        let n = rng.gen_range(1..=4);

        let m = rng.gen_range(1..=max_domain);
        let f = sample::map_with_domain(rng, m, n);
        if let Some(r) = higman_data(&f).reduction {
            tally.record("below_reduction", leq(&f, &r.reduced), || {
                json!({ "f": f, "reduced": r.reduced })
            });
        }

        // Build f, g with equal (μ, π) and f̃ ≤ g̃ by construction, then
        // check the conclusion f ≤ g.
        for _ in 0..64 {
            let dg = rng.gen_range(0..max_domain);
            let df = if dg == 0 { 0 } else { rng.gen_range(dg..max_domain) };
            let g_red = sample::map_with_domain(rng, dg, n);
            let h = sample::ordered_surjection(rng, df, dg).expect("df >= dg");
            let f_red = compose(&g_red, &h).expect("composable");
            let mu = rng.gen_range(0..=dg);
            let pi = rng.gen_range(1..=n);
            let f = insert_at(&f_red, df + 1 - mu, pi);
            let g = insert_at(&g_red, dg + 1 - mu, pi);
            let (hf, hg) = (higman_data(&f), higman_data(&g));
            let premise = match (&hf.reduction, &hg.reduction) {
                (Some(a), Some(b)) => {
                    a.mu == b.mu && a.pi == b.pi && a.reduced == f_red && b.reduced == g_red
                }
                _ => false,
            };
            if premise {
                tally.record("implication", leq(&f, &g), || json!({ "f": f, "g": g }));
                break;
            }
        }

        let f = sample::map(rng, n, max_domain);
        let g = sample::map(rng, n, max_domain);
        if let (Some(a), Some(b)) = (higman_data(&f).reduction, higman_data(&g).reduction) {
            if a.mu == b.mu && a.pi == b.pi && leq(&a.reduced, &b.reduced) {
                tally.record("implication", leq(&f, &g), || json!({ "f": f, "g": g }));
            }
        }
    })
}

fn is_increasing(u: &FinMap) -> bool {
    u.values().windows(2).all(|w| w[0] < w[1])
}

fn contra1(cfg: &SuiteConfig) -> Tally {
    let sizes: Vec<(usize, usize)> = (1..=cfg.max)
        .flat_map(|m| (1..=cfg.max).map(move |n| (m, n)))
        .collect();
    let tallies: Vec<Tally> = sizes
        .par_iter()
        .map(|&(m, n)| {
            let mut tally = Tally::default();
            let os = enumerate_homs(CatKind::OrderedSurjections, m, n);
            let sur = enumerate_homs(CatKind::Surjections, m, n);
            let perms = Permutation::all(n);
            tally.record("os_times_perms", os.len() * perms.len() == sur.len(), || {
                json!({ "m": m, "n": n, "os": os.len(), "sur": sur.len() })
            });
            for g in &sur {
                let ok = match sur_to_os_perm(g) {
                    Ok((f, tau)) => {
                        classify(&f).ordered_surjective
                            && os_perm_to_sur(&f, &tau).ok().as_ref() == Some(g)
                    }
                    Err(_) => false,
                };
                tally.record("sur_round_trip", ok, || json!({ "g": g }));
            }
            for f in &os {
                for sigma in &perms {
                    let ok = os_perm_to_sur(f, sigma)
                        .and_then(|g| sur_to_os_perm(&g))
                        .map_or(false, |(f2, s2)| &f2 == f && &s2 == sigma);
                    tally.record("pair_round_trip", ok, || json!({ "f": f, "sigma": sigma }));
                }
            }

            // (t, n) = (m, n) for the coproduct decomposition of Γ(t, n).
            let t = m;
            let mut total = 0usize;
            let mut seen = BTreeSet::new();
            for k in 0..=n {
                let incs: Vec<FinMap> = enumerate_homs(CatKind::Injections, k, n)
                    .into_iter()
                    .filter(is_increasing)
                    .collect();
                let surs = enumerate_homs(CatKind::Surjections, t, k);
                total += incs.len() * surs.len();
                for u in &incs {
                    for s in &surs {
                        let f = compose(u, s).expect("composable");
                        let ok = gamma_decompose(&f) == (u.clone(), s.clone()) && seen.insert(f.clone());
                        tally.record("coproduct_round_trip", ok, || json!({ "u": u, "s": s }));
                    }
                }
            }
            let all = enumerate_homs(CatKind::All, t, n);
            let ok = total == all.len() && all.iter().all(|f| seen.contains(f));
            tally.record("coproduct_count", ok, || {
                json!({ "t": t, "n": n, "sum": total, "expected": all.len() })
            });
            tally
        })
        .collect();
    Tally::merge_all(tallies)
}

fn admissible(cfg: &SuiteConfig) -> Tally {
    let mut tally = Tally::default();
    let lex = |a: &FinMap, b: &FinMap| lex_compare(a, b).ok();
    let report = check_admissible(&OrderedSurjections, &lex, cfg.max);
    push_admissibility(&mut tally, "os_lex", &report);
    let report = check_admissible(&NaturalMonoid, &NativeOrder(&NaturalMonoid), cfg.max);
    push_admissibility(&mut tally, "nat_reversed_degree", &report);
    tally
}

fn push_admissibility<M: Serialize>(
    tally: &mut Tally,
    prefix: &str,
    report: &crate::admissible::AdmissibilityReport<M>,
) {
    let name = |s: &str| format!("{prefix}_{s}");
    let mut add = |check: String, cases: u64, failures: Vec<Value>| {
        tally.checks.push(Check {
            name: check.clone(),
            cases,
            failures: failures.len() as u64,
        });
        for mut w in failures.into_iter().take(MAX_COUNTEREXAMPLES) {
            if tally.counterexamples.len() >= MAX_COUNTEREXAMPLES {
                break;
            }
            if let Value::Object(map) = &mut w {
                map.insert("check".into(), json!(check));
            }
            tally.counterexamples.push(w);
        }
    };
    let pairs = report.pairs_checked as u64;
    add(
        name("axiom1"),
        pairs,
        report.axiom1.iter().map(|v| json!({ "violation": v })).collect(),
    );
    add(
        name("axiom2"),
        pairs,
        report.axiom2.iter().map(|v| json!({ "violation": v })).collect(),
    );
    add(
        name("cancellation"),
        pairs,
        report.cancellation.iter().map(|v| json!({ "violation": v })).collect(),
    );
}

fn tilde(cfg: &SuiteConfig) -> Result<Tally> {
    let params = sample::PresentationParams {
        max_width: 5,
        ..Default::default()
    };
    let os = OrderedSurjections;
    par_trials_fallible(cfg, |rng, tally, trial| {
        let (f, g, t) = sample::nested_pair(rng, &params);
        let tf = tilde_at(&os, &f, t)?;
        let tg = tilde_at(&os, &g, t)?;
        tally.record("proper_inclusion_detected", tf != tg, || {
            json!({ "trial": trial, "level": t, "dims_f": tf.dims(), "dims_g": tg.dims() })
        });
        let contained = tf
            .entries
            .iter()
            .zip(&tg.entries)
            .all(|((_, a), (_, b))| a.is_subspace_of(b));
        tally.record("inclusion_preserved", contained, || json!({ "trial": trial, "level": t }));
        if trial % 10 == 0 {
            let bad = monotonicity_violations(&os, &g, cfg.max)?;
            tally.record("monotone_along_action", bad.is_empty(), || {
                json!({ "trial": trial, "violations": bad.iter().take(5).collect::<Vec<_>>() })
            });
        }
        Ok(())
    })
}

fn adjunction(cfg: &SuiteConfig) -> Result<Tally> {
    let mut shapes = Vec::new();
    for q in [2u32, 3, 4] {
        for x in 0..=cfg.max {
            for r in 0..=cfg.max {
                shapes.push((q, x, r));
            }
        }
    }
    let tallies: Vec<Tally> = shapes
        .par_iter()
        .map(|&(q, x, r)| -> Result<Tally> {
            let mut tally = Tally::default();
            let vectors = all_vectors(q, r);
            let basis: Vec<Vec<u32>> = (0..x)
                .map(|i| (0..x).map(|j| u32::from(i == j)).collect())
                .collect();
            let mut matrices = BTreeSet::new();
            let mut count = 0u64;
            // Every phi is an x-tuple of vectors: walk them as base-|vectors| digits.
            let total = (vectors.len() as u64).pow(x as u32);
            for code in 0..total {
                let mut c = code;
                let phi: Vec<Vec<u32>> = (0..x)
                    .map(|_| {
                        let v = vectors[(c % vectors.len() as u64) as usize].clone();
                        c /= vectors.len() as u64;
                        v
                    })
                    .collect();
                let mx = adjunction_to_matrix(q, x, r, &phi)?;
                let ok = matrix_to_adjunction(&mx) == phi
                    && basis.iter().zip(&phi).all(|(e, v)| &mx.apply(e) == v);
                tally.record("round_trip", ok, || json!({ "q": q, "x": x, "r": r, "phi": phi }));
                matrices.insert(mx.entries);
                count += 1;
            }
            let expected = (q as u64).pow((r * x) as u32);
            tally.record(
                "cardinality",
                count == expected && matrices.len() as u64 == expected,
                || json!({ "q": q, "x": x, "r": r, "maps": count, "matrices": matrices.len(), "expected": expected }),
            );
            Ok(tally)
        })
        .collect::<Result<_>>()?;
    Ok(Tally::merge_all(tallies))
}

fn fi_epi(cfg: &SuiteConfig) -> Tally {
    let sizes: Vec<(usize, usize)> = (1..=cfg.max)
        .flat_map(|m| (1..=m.min(3)).map(move |n| (n, m)))
        .collect();
    let tallies: Vec<Tally> = sizes
        .par_iter()
        .map(|&(n, m)| {
            let mut tally = Tally::default();
            let mut image = BTreeSet::new();
            for f in enumerate_homs(CatKind::OrderedSurjections, m, n) {
                let split = splitting(&f).expect("surjective");
                for sigma in Permutation::all(n) {
                    image.insert(compose(&split, sigma.as_map()).expect("composable"));
                }
            }
            for u in enumerate_homs(CatKind::Injections, n, m) {
                tally.record("hit_by_cover", image.contains(&u), || json!({ "u": u }));
                if image.contains(&u) {
                    let ok = inj_cover(&u).map_or(false, |(f, sigma)| {
                        compose(&splitting(&f).expect("surjective"), sigma.as_map()).ok() == Some(u.clone())
                    });
                    tally.record("inj_cover_factors", ok, || json!({ "u": u }));
                }
            }
            tally
        })
        .collect();
    Tally::merge_all(tallies)
}

/// Probes per presentation.
const PROBES: usize = 10;

fn oracle_equiv(cfg: &SuiteConfig) -> Result<Tally> {
    let params = sample::PresentationParams {
        max_width: cfg.max,
        ..Default::default()
    };
    let os = OrderedSurjections;
    let nat = NaturalMonoid;
    par_trials_fallible(cfg, |rng, tally, trial| {
        let p = sample::presentation(rng, &params);
        let gb = buchberger(&os, &p)?;
        let hilbert = hilbert_function(&os, &gb);
        let dims = oracle_dims(&os, &p)?;
        tally.record("hilbert_matches_rank", hilbert == dims, || {
            json!({ "trial": trial, "hilbert": hilbert, "rank": dims })
        });
        for i in 0..PROBES {
            let v = if i % 2 == 0 {
                sample::member_probe(rng, &p).unwrap_or_else(|| sample::free_probe(rng, &p))
            } else {
                sample::free_probe(rng, &p)
            };
            let engine = is_member(&os, &v, &gb)?;
            let oracle = oracle_member(&os, &v, &p)?;
            tally.record("membership_agrees", engine == oracle, || {
                json!({ "trial": trial, "probe": i, "engine": engine, "oracle": oracle })
            });
        }

        let field = PrimeField::new(if trial % 2 == 0 { 2 } else { 5 })?;
        let polys = sample::poly_generators(rng, field, 3, 4);
        let presentation = sample::poly_presentation(field, 8, &polys)?;
        let gb = buchberger(&nat, &presentation)?;
        let gcd = UPoly::gcd_all(field, &polys);
        for _ in 0..PROBES {
            let probe = sample::poly_probe(rng, &gcd, 8);
            let engine = is_member(&nat, &probe.to_element(8)?, &gb)?;
            let expected = gcd.divides(&probe);
            tally.record("gcd_divisibility_agrees", engine == expected, || {
                json!({
                    "trial": trial,
                    "p": field.characteristic(),
                    "generators": polys.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "probe": probe.to_string(),
                    "engine": engine,
                })
            });
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(suite: Suite, max: usize, trials: usize) -> SuiteReport {
        run(suite, &SuiteConfig { max, trials, seed: 3 }).unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn contra1_is_vacuous_at_zero() {
        let r = quick(Suite::Contra1, 0, 0);
        assert_eq!(r.cases, 0);
        assert!(r.passed());
    }

    #[test]
    fn small_suites_pass() {
        assert!(quick(Suite::Contra1, 3, 0).passed());
        assert!(quick(Suite::Admissible, 3, 0).passed());
        assert!(quick(Suite::Adjunction, 2, 0).passed());
        assert!(quick(Suite::Higman, 6, 50).passed());
        assert!(quick(Suite::StronglyNoeth, 6, 5).passed());
    }

    #[test]
    fn reports_are_reproducible() {
        let a = serde_json::to_string(&quick(Suite::Higman, 6, 40)).unwrap();
        let b = serde_json::to_string(&quick(Suite::Higman, 6, 40)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fi_epi_reports_missed_injections() {
        let r = quick(Suite::FiEpi, 2, 0);
        assert!(!r.passed());
        assert_eq!(r.counterexamples[0]["u"]["values"], json!([2]));
    }
}
