//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weyl_lie::classify::{self, CatalogEntry, CatalogName};
use weyl_lie::enumerate::{brute_force_spans, enumerate_subalgebras, glossary_report, span_set};
use weyl_lie::fock_oracle;
use weyl_lie::igusa::{identity_check, symplectic_search, Verdict};
use weyl_lie::lie_engine::{closure_budgeted, decide_with_free_hamiltonian, search_chain, CHAIN_MIN_INCREASES, CHAIN_STEPS};
use weyl_lie::wei_norman::{self, Algebra, Control, ControlSpec};
use weyl_lie::weyl_core::{rat, MultiIndex, SkewKey};
use weyl_lie::{lie_closure, named, Budget, GaussianRational, LieSpan, Rational, Sign, SkewPoly, WeylPoly};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g(sign: Sign, alpha: u32, beta: u32) -> SkewPoly {
    SkewPoly::g(sign, alpha, beta, 1)
}

fn q(n: i64, d: i64) -> Rational {
    rat(n, d)
}

fn closed(gens: &[SkewPoly]) -> LieSpan {
    lie_closure(gens, Budget::default()).span().expect("finite closure").clone()
}

fn table1() -> Outcome {
    let basis = named::schrodinger_basis();
    let table = named::table1();
    let mut checked = 0;
    for e in &table {
        let got = basis[e.row].bracket(&basis[e.col]);
        ensure(got == e.value, || format!("[{}, {}] = {got}, expected {}", e.row, e.col, e.value))?;
        let back = basis[e.col].bracket(&basis[e.row]);
        ensure(back == e.value.scale(&q(-1, 1)), || format!("antisymmetry fails at ({}, {})", e.row, e.col))?;
        checked += 1;
    }
    for b in &basis {
        ensure(b.bracket(b).is_zero(), || format!("[{b}, {b}] != 0"))?;
    }
    ensure(checked == 15, || format!("{checked} entries"))?;
    Ok(format!("table1: {checked}/15"))
}

fn glossary() -> Outcome {
    let report = glossary_report().map_err(|e| e.to_string())?;
    ensure(report.total == 22, || format!("{} spans", report.total))?;
    let want = vec![(1, 6), (2, 7), (3, 4), (4, 4), (6, 1)];
    ensure(report.dims == want, || format!("dimensions {:?}", report.dims))?;
    let mismatches = report.mismatches();
    ensure(mismatches.is_empty(), || mismatches.join("; "))?;
    let labels: BTreeMap<&str, usize> = report
        .rows
        .iter()
        .filter(|r| !r.name.starts_with("R^"))
        .map(|r| (r.name.as_str(), r.count))
        .collect();
    Ok(format!("22 spans, dims {:?}, classes {:?}", report.dims, labels))
}

fn algorithm_oracle() -> Outcome {
    let basis = named::schrodinger_basis();
    let mut bases = Vec::new();
    for mask in 1u32..64 {
        let subset: Vec<SkewPoly> = (0..6).filter(|i| mask >> i & 1 == 1).map(|i| basis[i].clone()).collect();
        let mut reversed = subset.clone();
        reversed.reverse();
        bases.push(subset);
        if reversed.len() > 2 {
            bases.push(reversed);
        }
    }
    for b in &bases {
        let records = enumerate_subalgebras(b).map_err(|e| e.to_string())?;
        let brute = brute_force_spans(b, Budget::default()).map_err(|e| e.to_string())?;
        let a = span_set(records.iter().map(|r| &r.span));
        let o = span_set(brute.iter().map(|(_, s)| s));
        ensure(a == o && records.len() == brute.len(), || {
            format!("basis of size {}: {} spans vs {} by brute force", b.len(), records.len(), brute.len())
        })?;
    }
    Ok(format!("{} bases agree with all-subsets closure", bases.len()))
}

fn finiteness_suite() -> Vec<(&'static str, Vec<SkewPoly>)> {
    use Sign::{Minus, Plus};
    let n = named::n;
    let i = named::i;
    let free = |w: i64, c: i64| n().scale(&q(w, 1)).add(&i().scale(&q(c, 1)));
    vec![
        // no Aperp, no Aeq together with A1 + A2
        ("finite", vec![n()]),
        ("finite", vec![free(2, 3), named::gp1()]),
        ("finite", vec![n(), named::gp2(), named::gm1()]),
        ("finite", vec![free(1, -1), named::gm2()]),
        ("finite", vec![n(), g(Plus, 2, 2), g(Plus, 3, 3)]),
        // support in Aperp
        ("perp", vec![n(), g(Plus, 3, 0)]),
        ("perp", vec![n(), g(Minus, 2, 1)]),
        ("perp", vec![free(1, 1), g(Plus, 3, 0), named::gp1()]),
        ("perp", vec![n(), g(Plus, 4, 1)]),
        ("perp", vec![free(2, 0), g(Minus, 3, 0), named::gp2()]),
        // Aeq together with A1 + A2
        ("mixed", vec![n(), g(Plus, 2, 2), named::gp1()]),
        ("mixed", vec![n(), g(Plus, 2, 2), named::gm2()]),
        ("mixed", vec![n(), g(Plus, 3, 3), named::gp2()]),
        ("mixed", vec![n(), g(Plus, 2, 2).add(&named::gp1())]),
        ("mixed", vec![free(1, -1), g(Plus, 2, 2), named::gm1()]),
        // both
        ("both", vec![n(), g(Plus, 2, 2), g(Plus, 3, 0)]),
        ("both", vec![n(), g(Plus, 2, 2).add(&g(Minus, 2, 1)), named::gp1()]),
        ("both", vec![n(), g(Plus, 3, 3), g(Plus, 3, 0), named::gm1()]),
        ("both", vec![n(), g(Plus, 2, 2), g(Minus, 4, 1), named::gp2()]),
        ("both", vec![free(2, 1), g(Plus, 3, 3), named::gp1(), g(Minus, 3, 1)]),
    ]
}

fn finiteness() -> Outcome {
    let small = Budget {
        max_dim: 30,
        max_degree: 10,
    };
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for (kind, gens) in finiteness_suite() {
        let decided = decide_with_free_hamiltonian(&gens, Budget::default()).map_err(|e| e.to_string())?;
        let pipeline = lie_closure(&gens, Budget::default());
        let names: Vec<String> = gens.iter().map(|x| x.to_string()).collect();
        if kind == "finite" {
            let (Some(a), Some(b)) = (decided.span(), closure_budgeted(&gens, Budget::default()).span().cloned()) else {
                return Err(format!("{names:?}: expected finite"));
            };
            ensure(a.same_subspace(&b) && a.dim() <= 6 && pipeline.is_finite(), || {
                format!("{names:?}: decision and closure disagree")
            })?;
        } else {
            let witness = decided.witness().ok_or_else(|| format!("{names:?}: expected infinite"))?;
            let chain = witness.chain.as_ref().ok_or_else(|| format!("{names:?}: no chain witness"))?;
            ensure(chain.verify() && chain.steps() >= 3 && witness.verify(), || format!("{names:?}: bad chain"))?;
            ensure(!closure_budgeted(&gens, small).is_finite() && pipeline.is_infinite(), || {
                format!("{names:?}: budgeted closure closed")
            })?;
        }
        *counts.entry(kind).or_default() += 1;
    }
    Ok(format!("20 sets agree {counts:?}"))
}

fn classification() -> Outcome {
    let h1 = closed(&[named::gp1(), named::gm1()]);
    let lcs: Vec<usize> = classify::lower_central_series(&h1).map_err(|e| e.to_string())?.iter().map(|s| s.dim()).collect();
    ensure(lcs == vec![3, 1, 0], || format!("h1 lcs {lcs:?}"))?;
    let s = closed(&named::schrodinger_basis());
    let ds: Vec<usize> = classify::derived_series(&s).map_err(|e| e.to_string())?.iter().map(|x| x.dim()).collect();
    let fp = classify::fingerprint(&s).map_err(|e| e.to_string())?;
    ensure(ds == vec![6, 6] && !fp.solvable, || format!("Schrodinger derived {ds:?}"))?;
    let wh1 = closed(&[named::i(), named::gm2(), named::gp1(), named::gm1()]);
    let wh2 = closed(&[named::i(), named::n(), named::gp1(), named::gm1()]);
    let k1 = classify::killing_form(&wh1).map_err(|e| e.to_string())?.signature;
    let k2 = classify::killing_form(&wh2).map_err(|e| e.to_string())?.signature;
    ensure(k1 != k2, || format!("equal signatures {k1:?}"))?;
    Ok(format!("h1 lcs {lcs:?}, Schrodinger derived {ds:?}, Killing wh1 {k1:?} vs wh2 {k2:?}"))
}

/// `a - a†` as a Weyl polynomial.
fn p_op() -> WeylPoly {
    WeylPoly::a().sub(&WeylPoly::adag())
}

/// `a + a†`.
fn q_op() -> WeylPoly {
    WeylPoly::a().add(&WeylPoly::adag())
}

fn power(x: &WeylPoly, k: u32) -> WeylPoly {
    (0..k).fold(WeylPoly::one(), |acc, _| acc.mul(x))
}

/// The skew-hermitian one of `x` and `i x` for a (skew-)hermitian `x`.
fn skew(x: &WeylPoly) -> SkewPoly {
    SkewPoly::from_weyl(x).unwrap_or_else(|_| {
        let i = GaussianRational::new(q(0, 1), q(1, 1));
        SkewPoly::from_weyl(&x.scale(&i)).expect("hermitian or skew-hermitian")
    })
}

/// `[images_i, images_j] = sum_k c_ijk images_k` for the catalog constants, with independent images.
fn realizes(images: &[SkewPoly], entry: &CatalogEntry) -> bool {
    let s = entry.algebra();
    if images.len() != s.dim() || LieSpan::spanned_by(images).dim() != s.dim() {
        return false;
    }
    for i in 0..s.dim() {
        for j in 0..s.dim() {
            let mut rhs = SkewPoly::zero();
            for (k, c) in s.constant(i, j).iter().enumerate() {
                rhs.axpy(c, &images[k]);
            }
            if images[i].bracket(&images[j]) != rhs {
                return false;
            }
        }
    }
    true
}

fn sum(xs: &[&SkewPoly]) -> SkewPoly {
    xs.iter().fold(SkewPoly::zero(), |acc, x| acc.add(x))
}

/// Catalog entry, images of its reference basis in the Weyl algebra, and the two generators.
fn nullity_cases() -> Vec<(CatalogEntry, Vec<SkewPoly>, [SkewPoly; 2])> {
    let half = |x: SkewPoly, n: i64, d: i64| x.scale(&q(n, d));
    // i(a†a + 1/2)
    let k = named::n().add(&half(named::i(), 1, 2));
    let mut out = Vec::new();

    let sl2 = vec![
        half(named::gm2(), 1, 2),
        named::gp2().add(&half(k.clone(), 2, 1)),
        half(named::gp2().sub(&half(k.clone(), 2, 1)), 1, 16),
    ];
    out.push((CatalogEntry::concrete(CatalogName::Sl2), sl2.clone(), [sl2[1].clone(), sl2[2].clone()]));
    let mut sl2r = sl2.clone();
    sl2r.push(named::i());
    let pair = [sl2r[1].clone(), sum(&[&sl2r[2], &sl2r[3]])];
    out.push((CatalogEntry::concrete(CatalogName::Sl2PlusR), sl2r, pair));

    let two_k = half(k.clone(), 2, 1);
    let schrodinger = vec![
        half(named::gm2(), 1, 2),
        half(two_k.add(&named::gp2()), -1, 4),
        half(two_k.sub(&named::gp2()), 1, 4),
        named::gp1(),
        named::gm1(),
        half(named::i(), -2, 1),
    ];
    let pair = [schrodinger[2].clone(), sum(&[&schrodinger[0], &schrodinger[1], &schrodinger[4]])];
    out.push((CatalogEntry::concrete(CatalogName::Schrodinger), schrodinger, pair));

    let wh1 = vec![half(named::i(), 2, 1), named::gm1(), named::gp1(), half(named::gm2(), 1, 2)];
    let pair = [sum(&[&wh1[1], &wh1[2]]), wh1[3].clone()];
    out.push((CatalogEntry::concrete(CatalogName::Wh1), wh1, pair));

    let wh2 = vec![named::n(), named::gp1(), named::gm1().scale(&q(-1, 1)), half(named::i(), 2, 1)];
    let pair = [wh2[0].clone(), wh2[1].clone()];
    out.push((CatalogEntry::concrete(CatalogName::Wh2), wh2, pair));

    // e1 = i(a + a†) lowers powers of (a - a†); e2 is the top power
    let ladder = |top: u32| {
        let mut es = vec![named::gp1(), skew(&power(&p_op(), top))];
        for _ in 0..top {
            let next = es[0].bracket(es.last().unwrap());
            es.push(next);
        }
        es
    };
    for n in [3usize, 5] {
        let es = ladder(n as u32 - 1);
        let pair = [es[0].clone(), es[1].clone()];
        out.push((CatalogEntry::filiform(n), es, pair));
    }
    for n in [2usize, 4] {
        let mut es = vec![half(named::gm2(), 1, 2)];
        es.extend(ladder(n as u32 - 1));
        let pair = [es[0].clone(), sum(&[&es[1], &es[2]])];
        out.push((CatalogEntry::filiform_extension(n), es, pair));
    }
    for j in [vec![1i64, 2], vec![0, 1, 3], vec![1, 2, 4]] {
        let mut es = vec![half(named::gm2(), -1, 2)];
        es.extend(j.iter().map(|&jk| skew(&power(&q_op(), jk as u32))));
        let refs: Vec<&SkewPoly> = es[1..].iter().collect();
        let pair = [es[0].clone(), sum(&refs)];
        out.push((CatalogEntry::diagonal(j), es, pair));
    }
    out
}

fn random_element(rng: &mut ChaCha8Rng, b: &LieSpan) -> SkewPoly {
    loop {
        let coords: Vec<Rational> = (0..b.dim()).map(|_| q(rng.random_range(-5..=5), rng.random_range(1..=3))).collect();
        let x = b.combine(&coords);
        if !x.is_zero() {
            return x;
        }
    }
}

fn nullity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut names = Vec::new();
    for (entry, images, pair) in nullity_cases() {
        ensure(realizes(&images, &entry), || format!("{}: images do not realize the catalog basis", entry.label()))?;
        let b = closed(&images);
        ensure(b.dim() == images.len(), || format!("{}: realization not closed", entry.label()))?;
        let generated = classify::nullity_witness(&b, [&pair[0], &pair[1]]).map_err(|e| e.to_string())?;
        ensure(generated, || format!("{}: pair does not generate", entry.label()))?;
        for _ in 0..20 {
            let x = random_element(&mut rng, &b);
            let one = closure_budgeted(std::slice::from_ref(&x), Budget::default());
            ensure(one.span().is_some_and(|s| s.dim() == 1), || format!("{}: single element generated more", entry.label()))?;
            ensure(!classify::nullity_witness(&b, [&x, &x]).unwrap_or(true), || {
                format!("{}: one generator suffices", entry.label())
            })?;
        }
        names.push(entry.label());
    }
    let wh2 = closed(&[named::i(), named::n(), named::gp1(), named::gm1()]);
    ensure(classify::nullity_witness(&wh2, [&named::n(), &named::gm1()]).unwrap_or(false), || {
        "wh2: {ia†a, g-(1,0)} does not generate".to_string()
    })?;
    Ok(format!("pairs generate {}", names.join(", ")))
}

fn constant(algebra: Algebra, u: &[f64], h: f64, n: usize) -> ControlSpec {
    ControlSpec {
        algebra,
        h,
        n_steps: n,
        controls: u.iter().map(|&c| Control::Constant(c)).collect(),
    }
}

fn wh2_closed_form() -> Outcome {
    let (w, e) = (1.0, 0.2);
    let spec = constant(Algebra::Wh2, &[w, e, 0.0], 1e-3, 2000);
    let sol = wei_norman::wh2_factors(&spec).map_err(|e| e.to_string())?;
    let mut err: f64 = 0.0;
    for k in 0..=spec.n_steps {
        let t = spec.time(k);
        err = err.max((sol.f[0][k] - w * t).abs());
        err = err.max((sol.f[1][k] - e * (w * t).sin() / w).abs());
        err = err.max((sol.f[2][k] - e * ((w * t).cos() - 1.0) / w).abs());
    }
    ensure(err <= 1e-10, || format!("closed form off by {err:e}"))?;
    let a = wei_norman::factored_propagator(&sol, spec.n_steps, 64).map_err(|e| e.to_string())?;
    let b = wei_norman::direct_propagator(&spec, 64, spec.n_steps).map_err(|e| e.to_string())?;
    let fid = wei_norman::min_fidelity(&a, &b);
    ensure(1.0 - fid <= 1e-6, || format!("fidelity 1 - {:e}", 1.0 - fid))?;
    Ok(format!("analytic error {err:.1e}, 1 - fidelity {:.1e} at N=64, t=2", 1.0 - fid))
}

fn schrodinger_factors() -> Outcome {
    let (w, e) = (1.0, 0.2);
    let spec = constant(Algebra::Schrodinger, &[w, e, 0.0, 0.0, 0.0], 1e-3, 2000);
    let sol = wei_norman::schrodinger_factors(&spec).map_err(|e| e.to_string())?;
    let wh2 = wei_norman::wh2_factors(&constant(Algebra::Wh2, &[w, e, 0.0], 1e-3, 2000)).map_err(|e| e.to_string())?;
    let mut err: f64 = 0.0;
    for k in 0..=spec.n_steps {
        let t = spec.time(k);
        let exact = [w * t, e * (w * t).sin() / w, e * ((w * t).cos() - 1.0) / w];
        for j in 0..3 {
            err = err.max((sol.f[j][k] - exact[j]).abs()).max((sol.f[j][k] - wh2.f[j][k]).abs());
        }
    }
    ensure(err <= 1e-8, || format!("reduction off by {err:e}"))?;
    let squeeze = constant(Algebra::Schrodinger, &[1.0, 0.0, 0.0, 0.0, 0.1], 1e-3, 1000);
    let sol = wei_norman::schrodinger_factors(&squeeze).map_err(|e| e.to_string())?;
    let residual = wei_norman::residual_check(&squeeze, &sol).map_err(|e| e.to_string())?;
    ensure(residual < 1e-8, || format!("residual {residual:e}"))?;
    let a = wei_norman::factored_propagator(&sol, squeeze.n_steps, 96).map_err(|e| e.to_string())?;
    let b = wei_norman::direct_propagator(&squeeze, 96, squeeze.n_steps).map_err(|e| e.to_string())?;
    let fid = wei_norman::min_fidelity(&a, &b);
    ensure(1.0 - fid <= 1e-5, || format!("fidelity 1 - {:e}", 1.0 - fid))?;
    Ok(format!(
        "reduction error {err:.1e}, residual {residual:.1e}, 1 - fidelity {:.1e} at N=96",
        1.0 - fid
    ))
}

fn igusa() -> Outcome {
    use Sign::{Minus, Plus};
    let e1 = g(Minus, 3, 0);
    let e2 = g(Plus, 3, 0);
    let id = identity_check(&e1, &e2).map_err(|e| e.to_string())?;
    ensure(id.verdict == Verdict::Inconclusive, || "identity frame already certifies".to_string())?;
    let cert = symplectic_search(&e1, &e2, 256, 7).map_err(|e| e.to_string())?;
    ensure(cert.as_ref().is_some_and(|c| c.is_infinite() && c.recheck()), || "no frame found".to_string())?;
    let pairs = vec![
        (e1.clone(), e2.clone()),
        (g(Plus, 3, 0), g(Plus, 2, 1)),
        (g(Minus, 3, 1), g(Plus, 3, 0).add(&g(Minus, 2, 1))),
        (g(Plus, 4, 0), g(Minus, 3, 0)),
        (g(Plus, 3, 0).add(&named::gp1()), g(Minus, 3, 0)),
        (g(Plus, 3, 0), g(Plus, 3, 0).scale(&q(2, 1))),
        (g(Plus, 2, 2).add(&g(Plus, 3, 0)), g(Minus, 4, 1)),
    ];
    let mut infinite = 0;
    for (x, y) in &pairs {
        let found = symplectic_search(x, y, 256, 7).map_err(|e| e.to_string())?;
        let identity = identity_check(x, y).map_err(|e| e.to_string())?;
        for c in found.iter().chain(identity.is_infinite().then_some(&identity)) {
            ensure(c.recheck(), || format!("({x}, {y}): certificate does not recheck"))?;
            let chain = search_chain(&[x.clone(), y.clone()], CHAIN_STEPS, CHAIN_MIN_INCREASES);
            ensure(chain.is_some_and(|ch| ch.verify() && ch.steps() >= 3), || format!("({x}, {y}): no 3-step chain"))?;
        }
        infinite += usize::from(found.is_some());
    }
    Ok(format!(
        "cubic pair Inconclusive -> Infinite; {infinite} of {} pairs certified, each confirmed by a 3-step chain",
        pairs.len()
    ))
}

fn random_skew(rng: &mut ChaCha8Rng, max_degree: u32, terms: usize) -> SkewPoly {
    let mut out = SkewPoly::zero();
    for _ in 0..terms {
        let d = rng.random_range(0..=max_degree);
        let beta = rng.random_range(0..=d / 2);
        let alpha = d - beta;
        let sign = if alpha == beta || rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let c = q(rng.random_range(-4..=4), rng.random_range(1..=3));
        let m = SkewPoly::from_terms([(SkewKey::new(sign, MultiIndex::new(alpha, beta)), c)]).expect("valid monomial");
        out = out.add(&m);
    }
    out
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..500 {
        let (x, y, z) = (random_skew(&mut rng, 5, 3), random_skew(&mut rng, 5, 3), random_skew(&mut rng, 5, 3));
        ensure(x.bracket(&y) == y.bracket(&x).scale(&q(-1, 1)), || format!("antisymmetry fails for {x}, {y}"))?;
        let jacobi = x.bracket(&y.bracket(&z)).add(&y.bracket(&z.bracket(&x))).add(&z.bracket(&x.bracket(&y)));
        ensure(jacobi.is_zero(), || format!("Jacobi fails for {x}, {y}, {z}"))?;
    }
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let (x, y) = (random_skew(&mut rng, 3, 3).to_weyl(), random_skew(&mut rng, 3, 3).to_weyl());
        worst = worst.max(fock_oracle::commutator_crosscheck(&x, &y, 16).map_err(|e| e.to_string())?);
    }
    ensure(worst < 1e-10, || format!("Fock cross-check error {worst:e}"))?;
    for _ in 0..500 {
        let (x, y) = (random_skew(&mut rng, 5, 3), random_skew(&mut rng, 5, 3));
        let c = x.to_weyl().commutator(&y.to_weyl());
        ensure(c.dagger() == c.scale(&GaussianRational::new(q(-1, 1), q(0, 1))), || format!("[{x}, {y}] is not skew"))?;
        ensure(SkewPoly::from_weyl(&c).ok() == Some(x.bracket(&y)), || format!("[{x}, {y}] disagrees with the skew bracket"))?;
    }
    Ok(format!("500 Jacobi triples, 100 Fock pairs (max error {worst:.1e}), 500 skew pairs"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 10] = [
        ("1 table1", table1, 1),
        ("2 glossary", glossary, 5),
        ("3 algorithm-oracle", algorithm_oracle, 30),
        ("4 finiteness", finiteness, 30),
        ("5 classification", classification, 1),
        ("6 nullity", nullity, 5),
        ("7 wei-norman-wh2", wh2_closed_form, 20),
        ("8 wei-norman-schrodinger", schrodinger_factors, 60),
        ("9 igusa", igusa, 10),
        ("10 properties", properties, 60),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (status, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over time limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} criterion {name} ({:.2} s, limit {limit} s): {detail}", elapsed.as_secs_f64());
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 10 criteria failed");
        ExitCode::FAILURE
    }
}
