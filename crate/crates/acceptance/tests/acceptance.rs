//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Expected values come from oracles written here, independent of the
//! library: odometer enumeration, a Stirling table, a brute-force search
//! for divisibility witnesses, dense Gaussian elimination and polynomial gcd.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use gcat_core::admissible::{check_admissible, lex_compare};
use gcat_core::base_change::{
    adjunction_to_matrix, gamma_decompose, inj_cover, matrix_to_adjunction, os_perm_to_sur,
    sur_to_os_perm,
};
use gcat_core::finset::{enumerate_homs, splitting};
use gcat_core::groebner::{hilbert_function, is_member};
use gcat_core::oracle::{oracle_dims, oracle_member};
use gcat_core::order::{find_domination, higman_data, Domination, DominationMode, MapDivisibility};
use gcat_core::sample::{self, PresentationParams};
use gcat_core::tilde::tilde_at;
use gcat_core::upoly::UPoly;
use gcat_core::{
    buchberger, CatKind, FinMap, ModElement, NaturalMonoid, OrderedSurjections, Permutation,
    PrimeField, SubfunctorPresentation,
};

// ---------------------------------------------------------------- oracles

/// All value sequences of length `m` over `1..=n`, lexicographically.
fn all_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut v = vec![1; m];
    loop {
        out.push(v.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < n {
                v[i] += 1;
                for w in v.iter_mut().skip(i + 1) {
                    *w = 1;
                }
                break;
            }
        }
    }
}

fn is_injective(v: &[usize]) -> bool {
    v.iter().collect::<BTreeSet<_>>().len() == v.len()
}

fn is_surjective(v: &[usize], n: usize) -> bool {
    v.iter().collect::<BTreeSet<_>>().len() == n
}

fn is_ordered_surjective(v: &[usize], n: usize) -> bool {
    if !is_surjective(v, n) {
        return false;
    }
    let mins: Vec<usize> = (1..=n)
        .map(|j| v.iter().position(|&x| x == j).expect("surjective"))
        .collect();
    mins.windows(2).all(|w| w[0] < w[1])
}

fn stirling_table(max: usize) -> Vec<Vec<u64>> {
    let mut s = vec![vec![0u64; max + 1]; max + 1];
    s[0][0] = 1;
    for m in 1..=max {
        for k in 1..=m {
            s[m][k] = k as u64 * s[m - 1][k] + s[m - 1][k - 1];
        }
    }
    s
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `(g ∘ f)(i) = g(f(i))` on value sequences.
fn compose_values(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&i| g[i - 1]).collect()
}

/// Is there an ordered surjection `h` with `g ∘ h = f`? Depth-first over
/// restricted growth strings.
fn divides_brute(f: &[usize], g: &[usize]) -> bool {
    fn go(f: &[usize], g: &[usize], pos: usize, top: usize) -> bool {
        if pos == f.len() {
            return top == g.len();
        }
        if g.len() - top > f.len() - pos {
            return false;
        }
        (1..=(top + 1).min(g.len())).any(|v| g[v - 1] == f[pos] && go(f, g, pos + 1, top.max(v)))
    }
    go(f, g, 0, 0)
}

/// `(μ, π, f̃)` straight from the definitions, or `None` when injective.
fn higman_reference(f: &[usize]) -> Option<(usize, usize, Vec<usize>)> {
    let m = f.len();
    let p = (1..=m).rev().find(|&i| (1..i).any(|j| f[j - 1] == f[i - 1]))?;
    let reduced = (1..m)
        .map(|i| if i < p { f[i - 1] } else { f[i] })
        .collect();
    Some((m - p, f[p - 1], reduced))
}

/// Rank over `F_p` by Gaussian elimination on a copy of `rows`.
fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] % p != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let factor = a[r][c];
                for j in 0..cols {
                    a[r][j] = (a[r][j] + p * p - factor * a[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Dense rows of all translates `g ∘ e` at level `t`, plus the column index.
fn translate_rows(
    p: &SubfunctorPresentation<FinMap>,
    t: usize,
) -> (Vec<(Vec<usize>, usize)>, Vec<Vec<u64>>) {
    let x = p.target();
    let columns: Vec<(Vec<usize>, usize)> = all_maps(t, x)
        .into_iter()
        .filter(|v| is_ordered_surjective(v, x))
        .flat_map(|v| (1..=p.k()).map(move |c| (v.clone(), c)))
        .collect();
    let mut rows = Vec::new();
    for g in p.generators() {
        for e in all_maps(t, g.level())
            .into_iter()
            .filter(|v| is_ordered_surjective(v, g.level()))
        {
            let mut row = vec![0u64; columns.len()];
            for (mono, c) in g.terms() {
                let image = compose_values(mono.morphism.values(), &e);
                let col = columns
                    .iter()
                    .position(|(v, k)| v == &image && *k == mono.coord)
                    .expect("translate lies in the level basis");
                row[col] = (row[col] + c as u64) % p.field().characteristic() as u64;
            }
            rows.push(row);
        }
    }
    (columns, rows)
}

fn dense(columns: &[(Vec<usize>, usize)], v: &ModElement<FinMap>) -> Vec<u64> {
    let mut row = vec![0u64; columns.len()];
    for (mono, c) in v.terms() {
        let col = columns
            .iter()
            .position(|(w, k)| w.as_slice() == mono.morphism.values() && *k == mono.coord)
            .expect("monomial in level basis");
        row[col] = c as u64;
    }
    row
}

fn local_dim(p: &SubfunctorPresentation<FinMap>, t: usize) -> usize {
    let (_, rows) = translate_rows(p, t);
    rank_mod_p(&rows, p.field().characteristic() as u64)
}

fn local_member(p: &SubfunctorPresentation<FinMap>, v: &ModElement<FinMap>) -> bool {
    let (columns, mut rows) = translate_rows(p, v.level());
    let q = p.field().characteristic() as u64;
    let before = rank_mod_p(&rows, q);
    rows.push(dense(&columns, v));
    rank_mod_p(&rows, q) == before
}

/// Coefficients low to high, trimmed.
fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let inv = pow_mod(*b.last().expect("nonzero divisor"), p - 2, p);
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * inv % p;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p * p - c * bj % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn coeffs(u: &UPoly) -> Vec<u64> {
    u.coeffs().iter().map(|&c| c as u64).collect()
}

// ---------------------------------------------------------------- criteria

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn hom_counts() -> Outcome {
    let s = stirling_table(6);
    let mut mismatches = Vec::new();
    let mut sets = 0;
    for m in 0..=6 {
        for n in 0..=4 {
            let maps = all_maps(m, n);
            let inj = maps.iter().filter(|v| is_injective(v)).count() as u64;
            let sur = maps.iter().filter(|v| is_surjective(v, n)).count() as u64;
            let os = maps.iter().filter(|v| is_ordered_surjective(v, n)).count() as u64;
            let falling: u64 = (0..m).map(|i| n.saturating_sub(i) as u64).product();
            let expected = [
                (CatKind::All, (n as u64).pow(m as u32)),
                (CatKind::Injections, falling),
                (CatKind::OrderedSurjections, s[m][n]),
                (CatKind::Surjections, factorial(n) * s[m][n]),
            ];
            assert_eq!((inj, os, sur), (falling, s[m][n], factorial(n) * s[m][n]));
            for (kind, want) in expected {
                sets += 1;
                let got = enumerate_homs(kind, m, n).len() as u64;
                if got != want {
                    mismatches.push(format!("{kind}({m},{n}) = {got}, expected {want}"));
                }
            }
        }
    }
    outcome(
        mismatches.is_empty(),
        format!("{sets} hom-set counts, {} mismatches {:?}", mismatches.len(), mismatches.first()),
    )
}

fn factorization_bijections() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for m in 1..=6 {
        for n in 1..=4 {
            let sur: Vec<Vec<usize>> = all_maps(m, n)
                .into_iter()
                .filter(|v| is_surjective(v, n))
                .collect();
            let os: Vec<Vec<usize>> = sur.iter().filter(|v| is_ordered_surjective(v, n)).cloned().collect();
            let mut pairs = BTreeSet::new();
            for g in &sur {
                cases += 1;
                let gm = FinMap::new(n, g.clone()).unwrap();
                let Ok((f, tau)) = sur_to_os_perm(&gm) else {
                    failures.push(format!("sur_to_os_perm({g:?}) failed"));
                    continue;
                };
                let ok = is_ordered_surjective(f.values(), n)
                    && compose_values(tau.as_map().values(), f.values()) == *g
                    && os_perm_to_sur(&f, &tau).ok().as_ref() == Some(&gm);
                if !ok {
                    failures.push(format!("round trip of {g:?}"));
                }
                pairs.insert((f.values().to_vec(), tau.as_map().values().to_vec()));
            }
            if pairs.len() as u64 != os.len() as u64 * factorial(n) || pairs.len() != sur.len() {
                failures.push(format!("|os({m},{n})|·{n}! != |sur({m},{n})|"));
            }
            for f in &os {
                for sigma in Permutation::all(n) {
                    cases += 1;
                    let fm = FinMap::new(n, f.clone()).unwrap();
                    let back = os_perm_to_sur(&fm, &sigma).and_then(|g| sur_to_os_perm(&g));
                    if back.ok() != Some((fm, sigma.clone())) {
                        failures.push(format!("pair round trip of {f:?}"));
                    }
                }
            }
        }
    }
    let s = stirling_table(5);
    for t in 1..=5 {
        for n in 1..=5 {
            // Σ over subsets of size k of |Γ_sur(t, k)| must be n^t.
            let sum: u64 = (0..=n)
                .map(|k| binomial(n, k) * factorial(k) * s[t][k])
                .sum();
            if sum != (n as u64).pow(t as u32) {
                failures.push(format!("coproduct count at t={t}, n={n}"));
            }
            let mut seen = BTreeSet::new();
            for f in all_maps(t, n) {
                cases += 1;
                let (u, s_) = gamma_decompose(&FinMap::new(n, f.clone()).unwrap());
                let u_ok = u.values().windows(2).all(|w| w[0] < w[1]) && u.codomain_size() == n;
                let k = u.domain_size();
                let ok = u_ok
                    && is_surjective(s_.values(), k)
                    && s_.codomain_size() == k
                    && compose_values(u.values(), s_.values()) == f;
                if !ok {
                    failures.push(format!("gamma_decompose({f:?})"));
                }
                seen.insert((u.values().to_vec(), s_.values().to_vec()));
            }
            if seen.len() as u64 != (n as u64).pow(t as u32) {
                failures.push(format!("decomposition not injective at t={t}, n={n}"));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{cases} cases, {} failures {:?}", failures.len(), failures.first()),
    )
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn higman_suite() -> Outcome {
    let mut rng = sample::trial_rng(2024, 0);
    let mut failures = Vec::new();
    let mut implication_cases = 0;
    let mut reduction_cases = 0;
    while implication_cases < 10_000 {
        let n = rng.gen_range(1..=4);

        let m = rng.gen_range(1..=8);
        let f = sample::map_with_domain(&mut rng, m, n);
        let lib = higman_data(&f);
        let reference = higman_reference(f.values());
        match (&lib.reduction, &reference) {
            (None, None) => {}
            (Some(r), Some((mu, pi, red))) => {
                reduction_cases += 1;
                if (r.mu, r.pi, r.reduced.values()) != (*mu, *pi, red.as_slice()) {
                    failures.push(format!("higman data of {f}"));
                }
                if !divides_brute(f.values(), red) {
                    failures.push(format!("{f} is not below its reduction"));
                }
            }
            _ => failures.push(format!("injectivity of {f}")),
        }

        // A pair with matching (μ, π) and f̃ ≤ g̃ by construction.
        let dg = rng.gen_range(0..8);
        let df = if dg == 0 { 0 } else { rng.gen_range(dg..8) };
        let g_red = sample::map_with_domain(&mut rng, dg, n);
        let h = sample::ordered_surjection(&mut rng, df, dg).unwrap();
        let f_red = compose_values(g_red.values(), h.values());
        let mu = rng.gen_range(0..=dg);
        let pi = rng.gen_range(1..=n);
        let mut fv = f_red.clone();
        fv.insert(df - mu, pi);
        let mut gv = g_red.values().to_vec();
        gv.insert(dg - mu, pi);
        let (Some(a), Some(b)) = (higman_reference(&fv), higman_reference(&gv)) else {
            continue;
        };
        if !(a.0 == b.0 && a.1 == b.1 && divides_brute(&a.2, &b.2)) {
            continue;
        }
        implication_cases += 1;
        let lib_f = FinMap::new(n, fv.clone()).unwrap();
        let lib_g = FinMap::new(n, gv.clone()).unwrap();
        let lib_leq = gcat_core::order::divides_os(&lib_f, &lib_g).unwrap().is_some();
        if !lib_leq || !divides_brute(&fv, &gv) {
            failures.push(format!("implication fails for {fv:?}, {gv:?}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{implication_cases} implication pairs, {reduction_cases} reductions, {} violations {:?}",
            failures.len(),
            failures.first()
        ),
    )
}

fn wqo_witness() -> Outcome {
    let mut failures = 0;
    let mut longest_prefix = 0;
    for trial in 0..500u64 {
        let mut rng = sample::trial_rng(77, trial);
        let n = rng.gen_range(1..=3);
        let seq: Vec<FinMap> = (0..200).map(|_| sample::map(&mut rng, n, 12)).collect();
        match find_domination(&MapDivisibility { n }, seq.iter().cloned(), 200, DominationMode::FirstPair) {
            Domination::Pair(i, j) if i < j && divides_brute(seq[j].values(), seq[i].values()) => {
                // no earlier j has a dominating predecessor
                let minimal = (1..j).all(|jj| (0..jj).all(|ii| !divides_brute(seq[jj].values(), seq[ii].values())))
                    && (0..i).all(|ii| !divides_brute(seq[j].values(), seq[ii].values()));
                if !minimal {
                    failures += 1;
                }
                longest_prefix = longest_prefix.max(j);
            }
            _ => failures += 1,
        }
    }
    outcome(
        failures == 0,
        format!("500 sequences, {failures} without a valid first pair, latest j = {longest_prefix}"),
    )
}

fn admissibility() -> Outcome {
    let lex = |a: &FinMap, b: &FinMap| lex_compare(a, b).ok();
    let report = check_admissible(&OrderedSurjections, &lex, 4);
    // Independent re-check of right compatibility and cancellation.
    let mut local = 0;
    for t in 0..=4 {
        for x in 0..=4 {
            let homs: Vec<Vec<usize>> = all_maps(t, x)
                .into_iter()
                .filter(|v| is_ordered_surjective(v, x))
                .collect();
            for s in 0..=4 {
                let es: Vec<Vec<usize>> = all_maps(s, t)
                    .into_iter()
                    .filter(|v| is_ordered_surjective(v, t))
                    .collect();
                for a in &homs {
                    for b in &homs {
                        if a >= b {
                            continue;
                        }
                        for e in &es {
                            let (ae, be) = (compose_values(a, e), compose_values(b, e));
                            if ae >= be {
                                local += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(
        report.passed() && local == 0,
        format!(
            "{} pairs over {} hom-sets; axiom1 {}, axiom2 {}, cancellation {}, independent {}",
            report.pairs_checked,
            report.hom_sets,
            report.axiom1.len(),
            report.axiom2.len(),
            report.cancellation.len(),
            local
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    let os = OrderedSurjections;
    let params = PresentationParams::default();
    let mut disagreements = Vec::new();
    let mut probes = 0;
    let mut levels = 0;
    for trial in 0..100u64 {
        let mut rng = sample::trial_rng(606, trial);
        let p = sample::presentation(&mut rng, &params);
        let gb = buchberger(&os, &p).expect("consistent presentation");
        let hilbert = hilbert_function(&os, &gb);
        let dims = oracle_dims(&os, &p).unwrap();
        for t in 0..=p.width() {
            levels += 1;
            let local = local_dim(&p, t);
            if hilbert[t] != local || dims[t] != local {
                disagreements.push(format!("trial {trial} level {t}: {} vs {local}", hilbert[t]));
            }
        }
        for i in 0..10 {
            probes += 1;
            let v = if i % 2 == 0 {
                sample::member_probe(&mut rng, &p).unwrap_or_else(|| sample::free_probe(&mut rng, &p))
            } else {
                sample::free_probe(&mut rng, &p)
            };
            let engine = is_member(&os, &v, &gb).unwrap();
            let oracle = oracle_member(&os, &v, &p).unwrap();
            let local = local_member(&p, &v);
            if engine != oracle || engine != local {
                disagreements.push(format!("trial {trial} probe {i}: {engine}/{oracle}/{local}"));
            }
        }
    }
    outcome(
        disagreements.is_empty() && probes == 1000,
        format!(
            "{probes} probes, {levels} Hilbert levels, {} disagreements {:?}",
            disagreements.len(),
            disagreements.first()
        ),
    )
}

fn tilde_strictness() -> Outcome {
    let os = OrderedSurjections;
    let params = PresentationParams {
        max_width: 5,
        ..Default::default()
    };
    let mut violations = Vec::new();
    for trial in 0..200u64 {
        let mut rng = sample::trial_rng(909, trial);
        let (f, g, t) = sample::nested_pair(&mut rng, &params);
        let (df, dg) = (local_dim(&f, t), local_dim(&g, t));
        if df >= dg {
            violations.push(format!("trial {trial}: pair is not proper ({df} vs {dg})"));
            continue;
        }
        if tilde_at(&os, &f, t).unwrap() == tilde_at(&os, &g, t).unwrap() {
            violations.push(format!("trial {trial}: equal initial data at level {t}"));
        }
    }
    outcome(
        violations.is_empty(),
        format!("200 nested pairs, {} violations {:?}", violations.len(), violations.first()),
    )
}

fn hilbert_basis_demo() -> Outcome {
    let nat = NaturalMonoid;
    let mut disagreements = Vec::new();
    let mut probes = 0;
    for (fi, p) in [2u32, 5].into_iter().enumerate() {
        let field = PrimeField::new(p).unwrap();
        for trial in 0..50u64 {
            let mut rng = sample::trial_rng(31 + fi as u64, trial);
            let polys = sample::poly_generators(&mut rng, field, 3, 4);
            let presentation = sample::poly_presentation(field, 8, &polys).unwrap();
            let gb = buchberger(&nat, &presentation).unwrap();
            let gcd = polys
                .iter()
                .fold(Vec::new(), |acc, g| poly_gcd(&acc, &coeffs(g), p as u64));
            for _ in 0..10 {
                probes += 1;
                let probe = sample::poly_probe(&mut rng, &UPoly::new(field, gcd.iter().map(|&c| c as u32).collect()), 8);
                let expected = poly_rem(&coeffs(&probe), &gcd, p as u64).is_empty();
                let engine = is_member(&nat, &probe.to_element(8).unwrap(), &gb).unwrap();
                if engine != expected {
                    disagreements.push(format!("p={p}: {probe} against gcd of {polys:?}"));
                }
            }
        }
    }
    outcome(
        disagreements.is_empty() && probes == 1000,
        format!("{probes} polynomials over F_2 and F_5, {} disagreements {:?}", disagreements.len(), disagreements.first()),
    )
}

fn injection_cover() -> Outcome {
    let mut missed = Vec::new();
    let mut cases = 0;
    for n in 1..=3 {
        for m in n..=6 {
            for u in all_maps(n, m).into_iter().filter(|v| is_injective(v)) {
                cases += 1;
                let um = FinMap::new(m, u.clone()).unwrap();
                let produced = inj_cover(&um).ok().filter(|(f, sigma)| {
                    is_ordered_surjective(f.values(), n)
                        && f.domain_size() == m
                        && compose_values(splitting(f).unwrap().values(), sigma.as_map().values()) == u
                });
                if produced.is_none() {
                    missed.push(um);
                }
            }
        }
    }
    outcome(
        missed.is_empty(),
        format!(
            "{cases} injections, {} not produced; first {:?}",
            missed.len(),
            missed.first()
        ),
    )
}

fn adjunction() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for q in [2u32, 3, 4] {
        for x in 0..=3usize {
            for r in 0..=3usize {
                let vectors: Vec<Vec<u32>> = all_maps(r, q as usize)
                    .into_iter()
                    .map(|v| v.into_iter().map(|c| c as u32 - 1).collect())
                    .collect();
                let mut matrices = BTreeSet::new();
                let mut maps = 0u64;
                for choice in all_maps(x, vectors.len()) {
                    maps += 1;
                    cases += 1;
                    let phi: Vec<Vec<u32>> = choice.iter().map(|&i| vectors[i - 1].clone()).collect();
                    let mx = adjunction_to_matrix(q, x, r, &phi).unwrap();
                    let columns_ok = (0..x).all(|i| (0..r).all(|j| mx.entries[j][i] == phi[i][j]));
                    let basis_ok = (0..x).all(|i| {
                        let e: Vec<u32> = (0..x).map(|j| u32::from(i == j)).collect();
                        mx.apply(&e) == phi[i]
                    });
                    if !(columns_ok && basis_ok && matrix_to_adjunction(&mx) == phi) {
                        failures.push(format!("q={q} X={x} r={r} phi={phi:?}"));
                    }
                    matrices.insert(mx.entries);
                }
                let expected = (q as u64).pow((r * x) as u32);
                if maps != expected || matrices.len() as u64 != expected {
                    failures.push(format!("cardinality q={q} X={x} r={r}"));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{cases} maps, {} failures {:?}", failures.len(), failures.first()),
    )
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "hom-count identities", limit: Duration::from_secs(5), run: hom_counts },
        Criterion { id: 2, name: "factorisation bijections", limit: Duration::from_secs(10), run: factorization_bijections },
        Criterion { id: 3, name: "Higman reduction", limit: Duration::from_secs(10), run: higman_suite },
        Criterion { id: 4, name: "WQO witness", limit: Duration::from_secs(60), run: wqo_witness },
        Criterion { id: 5, name: "admissibility of lex", limit: Duration::from_secs(10), run: admissibility },
        Criterion { id: 6, name: "Groebner/oracle equivalence", limit: Duration::from_secs(120), run: oracle_equivalence },
        Criterion { id: 7, name: "tilde strictness", limit: Duration::from_secs(60), run: tilde_strictness },
        Criterion { id: 8, name: "univariate gcd membership", limit: Duration::from_secs(10), run: hilbert_basis_demo },
        Criterion { id: 9, name: "injection cover is onto", limit: Duration::from_secs(5), run: injection_cover },
        Criterion { id: 10, name: "free-module adjunction", limit: Duration::from_secs(5), run: adjunction },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let out = (c.run)();
        let elapsed = start.elapsed();
        let pass = out.pass && elapsed <= c.limit;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({}; {:.2}s, limit {}s)",
            c.id,
            c.name,
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
