//! Acceptance suite: one PASS/FAIL line per criterion, with pinned limits.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ccmap::character::{cc_product, cc_value, CCObject};
use ccmap::cluster::{enumerate_cluster_variables, mutate_matrix, mutate_seed, mutate_sequence, quiver_to_matrix};
use ccmap::cluster::{ExchangeMatrix, Seed};
use ccmap::forms::{antisym_against_simples, antisym_form_matrix, coindex, index};
use ccmap::grassmannian::{degree_bound, dimension_vectors_below, euler_char_with, submodule_classes, GrassmannianOptions};
use ccmap::laurent::{default_names, ExponentVector};
use ccmap::polygon::{all_arcs, interval_sequences, verify_an, PolygonModel};
use ccmap::quiver::{injective, projective, simple};
use ccmap::{Algebra, LaurentPoly, QField, QMatrix, Rational, Representation};

const LIMIT_A4: Duration = Duration::from_secs(1);
const LIMIT_D4: Duration = Duration::from_secs(1);
const LIMIT_AN: Duration = Duration::from_secs(120);
const LIMIT_BIJECTION: Duration = Duration::from_secs(60);
const LIMIT_DESCENT: Duration = Duration::from_secs(10);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(180);

/// Random cases per randomized property.
const RANDOM_CASES: usize = 200;

type Outcome = Result<String, String>;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn ccmap_cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ccmap"))
        .args(args)
        .current_dir(data(""))
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "`ccmap {}` exited with {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn support(m: &Representation) -> Result<Vec<(Vec<usize>, i64)>, String> {
    Ok(submodule_classes(m)
        .map_err(err)?
        .into_iter()
        .map(|(e, c)| (e.0, c))
        .collect())
}

fn criterion_1() -> Outcome {
    let out = ccmap_cli(&["xvalue", "a4.alg", "a4_M.mod"])?;
    ensure(out.contains("fraction: (x2*x4 + x4 + x1*x3) / (x1*x2)\n"), || {
        format!("xvalue printed {out:?}")
    })?;
    let a = Algebra::load(data("a4.alg")).map_err(err)?;
    let m = Representation::load_with(data("a4_M.mod"), a.clone()).map_err(err)?;
    let v = |i: usize| LaurentPoly::var(4, i);
    let numerator = &(&(&v(1) * &v(3)) + &v(3)) + &(&v(0) * &v(2));
    let expected = numerator.mul_monomial(&ExponentVector::new(vec![-1, -1, 0, 0]));
    let x = cc_value(&CCObject::from_module(m.clone())).map_err(err)?;
    ensure(x == expected, || format!("X = {x}"))?;

    let out = ccmap_cli(&["index", "a4.alg", "a4_M.mod"])?;
    ensure(out == "index: [P_2] - [P_3]\ncoindex: [P_1] - [P_4]\n", || format!("index printed {out:?}"))?;
    ensure(index(&m).map_err(err)?.0 == vec![0, 1, -1, 0], || "index vector".into())?;
    ensure(coindex(&m).map_err(err)?.0 == vec![1, 0, 0, -1], || "coindex vector".into())?;

    let s = support(&m)?;
    let want = vec![(vec![0, 0, 0, 0], 1), (vec![1, 0, 0, 0], 1), (vec![1, 1, 0, 0], 1)];
    ensure(s == want, || format!("support {s:?}"))?;
    Ok("X, ind = [P_2]-[P_3], coind = [P_1]-[P_4], support {0, S_1, S_1+S_2}".into())
}

fn criterion_2() -> Outcome {
    let a = Algebra::load(data("d4.alg")).map_err(err)?;
    let m = Representation::load_with(data("d4_M.mod"), a.clone()).map_err(err)?;
    let v = |i: usize| LaurentPoly::var(4, i);
    let s = &v(0) + &v(3);
    let numerator = &(&s * &s) + &(&(&v(1) * &v(2)) * &v(3));
    let expected = numerator.mul_monomial(&ExponentVector::new(vec![-1, -1, -1, 0]));
    let x = cc_value(&CCObject::from_module(m.clone())).map_err(err)?;
    ensure(x == expected, || format!("X = {x}"))?;

    let out = ccmap_cli(&["xvalue", "d4.alg", "d4_M.mod"])?;
    let names = a.variable_names();
    let printed = out
        .lines()
        .find_map(|l| l.strip_prefix("laurent: "))
        .ok_or_else(|| format!("xvalue printed {out:?}"))?;
    let parsed = LaurentPoly::parse_with(printed, &names).map_err(err)?;
    ensure(parsed == expected, || format!("CLI value {printed}"))?;

    ensure(index(&m).map_err(err)?.0 == vec![1, 0, 0, -1], || "index".into())?;
    ensure(coindex(&m).map_err(err)?.0 == vec![-1, 1, 1, 0], || "coindex".into())?;

    let mut s = support(&m)?;
    s.sort();
    let want = vec![
        (vec![0, 0, 0, 0], 1),
        (vec![0, 0, 1, 0], 1),
        (vec![0, 1, 0, 0], 1),
        (vec![0, 1, 1, 0], 1),
        (vec![1, 1, 1, 0], 1),
    ];
    ensure(s == want, || format!("support {s:?}"))?;
    Ok("X, ind = [P_0]-[P_3], coind = [P_1]+[P_2]-[P_0], five classes with chi 1".into())
}

fn criterion_3() -> Outcome {
    let mut parts = Vec::new();
    for (n, arcs) in [(2, 5), (3, 9), (4, 14), (5, 20)] {
        let r = verify_an(n).map_err(err)?;
        ensure(r.arcs == arcs, || format!("n = {n}: {} arcs", r.arcs))?;
        let (ok, total) = r.count(ccmap::polygon::CheckKind::Triangle);
        ensure(ok == total && total == r.crossing_pairs, || {
            format!("n = {n}: {ok}/{total} triangles of {}", r.crossing_pairs)
        })?;
        ensure(r.passed(), || {
            let first: Vec<String> = r.failures().take(3).map(|c| c.to_string()).collect();
            format!("n = {n}: {}", first.join("; "))
        })?;
        parts.push(format!("n={n}: {total}/{total}"));
    }
    Ok(format!("multiplication identity on all crossing pairs ({})", parts.join(", ")))
}

fn criterion_4() -> Outcome {
    let mut parts = Vec::new();
    for (n, size) in [(2, 5), (3, 9), (4, 14)] {
        let model = PolygonModel::new(n).map_err(err)?;
        let from_arcs: BTreeSet<LaurentPoly> = all_arcs(n)
            .map_err(err)?
            .iter()
            .map(|d| cc_value(&model.arc_to_object(d)?))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        let b = quiver_to_matrix(model.algebra().quiver()).map_err(err)?;
        let vars = enumerate_cluster_variables(&b, 10_000).map_err(err)?;
        ensure(from_arcs == vars, || format!("n = {n}: sets differ"))?;
        ensure(vars.len() == size, || format!("n = {n}: {} variables", vars.len()))?;
        parts.push(size.to_string());
    }
    Ok(format!("arc values = cluster variables, sizes {}", parts.join(", ")))
}

fn descent_modules() -> Result<Vec<Representation>, String> {
    let mut out = Vec::new();
    for (alg, mods) in [("a4.alg", vec!["a4_M.mod"]), ("d4.alg", vec!["d4_M.mod", "d4_N.mod"])] {
        let a = Algebra::load(data(alg)).map_err(err)?;
        for m in mods {
            out.push(Representation::load_with(data(m), a.clone()).map_err(err)?);
        }
        for i in 0..a.vertex_count() {
            out.extend([simple(&a, i), projective(&a, i), injective(&a, i)]);
        }
    }
    for n in 2..=6 {
        let a = Algebra::load(data(&format!("linear_a{n}.alg"))).map_err(err)?;
        let model = PolygonModel::new(n).map_err(err)?;
        for l in 1..=n {
            for r in l..=n {
                out.push(model.interval(l, r).map_err(err)?.rehome(&a).map_err(err)?);
            }
        }
    }
    Ok(out)
}

fn criterion_5() -> Outcome {
    let mods = descent_modules()?;
    for m in &mods {
        let f = antisym_form_matrix(m.algebra()).map_err(err)?;
        let direct = antisym_against_simples(m).map_err(err)?;
        let via_matrix = f.apply(m.dims());
        ensure(direct == via_matrix, || format!("dims {:?}: {direct:?} vs {via_matrix:?}", m.dims()))?;
        let diff = coindex(m).map_err(err)?.sub(&index(m).map_err(err)?);
        ensure(diff.0 == direct, || format!("dims {:?}: coind - ind = {:?}", m.dims(), diff.0))?;
    }
    Ok(format!("{} modules", mods.len()))
}

fn random_laurent(rng: &mut StdRng, n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero(n);
    for _ in 0..rng.gen_range(0..4) {
        let e: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
        let c = BigInt::from(rng.gen_range(-5i64..=5));
        p = &p + &LaurentPoly::monomial(ExponentVector::new(e), c);
    }
    p
}

fn unimodular(d: usize, rng: &mut StdRng) -> QMatrix {
    let mut g = QMatrix::identity(QField::new(), d);
    for _ in 0..4 {
        if d < 2 {
            break;
        }
        let (r, c) = (rng.gen_range(0..d), rng.gen_range(0..d));
        if r != c {
            let mut e = QMatrix::identity(QField::new(), d);
            e[(r, c)] = Rational::from_integer(rng.gen_range(-2i64..=2).into());
            g = e.mul(&g).expect("square");
        }
    }
    g
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut tally = Vec::new();

    // Laurent ring axioms
    for _ in 0..RANDOM_CASES {
        let n = 3;
        let (a, b, c) = (random_laurent(&mut rng, n), random_laurent(&mut rng, n), random_laurent(&mut rng, n));
        ensure(&a + &b == &b + &a, || "addition not commutative".into())?;
        ensure(&a * &b == &b * &a, || "multiplication not commutative".into())?;
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || "multiplication not associative".into())?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || "not distributive".into())?;
        ensure(&a - &a.clone() == LaurentPoly::zero(n), || "a - a != 0".into())?;
        ensure(&a * &LaurentPoly::one(n) == a, || "one is not neutral".into())?;
        let text = a.render_with(&default_names(n));
        ensure(LaurentPoly::parse_with(&text, &default_names(n)).map_err(err)? == a, || {
            format!("round trip of {text}")
        })?;
        if !b.is_zero() {
            ensure((&a * &b).div_exact(&b).map_err(err)? == a, || "exact division".into())?;
        }
    }
    tally.push(format!("ring axioms x{RANDOM_CASES}"));

    let mods = descent_modules()?;
    let small: Vec<&Representation> = mods.iter().filter(|m| m.algebra().vertex_count() <= 4).collect();

    // χ convolution on direct sums and the extra-prime check on every χ call
    let opts = GrassmannianOptions::default();
    let mut pairs = 0;
    for (i, m) in small.iter().enumerate() {
        for n in small.iter().skip(i).step_by(3) {
            if !m.algebra().same_as(n.algebra()) {
                continue;
            }
            let sum = m.direct_sum(n).map_err(err)?;
            for e in dimension_vectors_below(sum.dims()) {
                let r = euler_char_with(&sum, &e, &opts).map_err(err)?;
                ensure(r.counts.len() == degree_bound(&sum, &e) + 2, || "prime count".into())?;
                ensure(
                    r.counts.iter().all(|(p, c)| r.polynomial.eval(*p as i64) == BigInt::from(*c)),
                    || format!("counts off the fitted polynomial for e = {e}"),
                )?;
                let mut conv = 0i64;
                for f in dimension_vectors_below(m.dims()) {
                    let g: Vec<usize> = e.iter().zip(f.iter()).map(|(a, b)| a.wrapping_sub(*b)).collect();
                    if g.iter().zip(n.dims()).all(|(x, d)| x <= d) {
                        let g = ccmap::modules::DimVector(g);
                        conv += euler_char_with(m, &f, &opts).map_err(err)?.chi
                            * euler_char_with(n, &g, &opts).map_err(err)?.chi;
                    }
                }
                ensure(r.chi == conv, || format!("chi convolution at e = {e}"))?;
            }
            cc_product(&CCObject::from_module((*m).clone()), &CCObject::from_module((*n).clone())).map_err(err)?;
            pairs += 1;
        }
    }
    tally.push(format!("chi convolution on {pairs} pairs"));

    // mutation involutions
    for _ in 0..RANDOM_CASES {
        let n = rng.gen_range(1..=5);
        let mut rows = vec![vec![0i64; n]; n];
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.gen_range(-3..=3);
                rows[i][j] = v;
                rows[j][i] = -v;
            }
        }
        let b = ExchangeMatrix::from_rows(&rows).map_err(err)?;
        let k = rng.gen_range(0..n);
        let back = mutate_matrix(&mutate_matrix(&b, k).map_err(err)?, k).map_err(err)?;
        ensure(back == b, || format!("matrix involution fails on {rows:?}"))?;
    }
    for file in ["linear_a4.mat", "a4.mat", "d4.mat"] {
        let b = ExchangeMatrix::load(data(file)).map_err(err)?;
        for _ in 0..RANDOM_CASES / 4 {
            let prefix: Vec<usize> = (0..rng.gen_range(0..6)).map(|_| rng.gen_range(0..4)).collect();
            let s = mutate_sequence(&Seed::initial(b.clone()), &prefix).map_err(err)?;
            let k = rng.gen_range(0..4);
            let back = mutate_seed(&mutate_seed(&s, k).map_err(err)?, k).map_err(err)?;
            ensure(back == s, || format!("{file}: seed involution after {prefix:?}"))?;
        }
    }
    tally.push("mutation involutions".into());

    // base change invariance
    let d4 = Algebra::load(data("d4.alg")).map_err(err)?;
    let a4 = Algebra::load(data("a4.alg")).map_err(err)?;
    let cases = [
        Representation::load_with(data("d4_M.mod"), d4.clone())
            .and_then(|m| m.direct_sum(&Representation::load_with(data("d4_N.mod"), d4.clone())?)),
        Representation::load_with(data("a4_M.mod"), a4.clone()).and_then(|m| m.direct_sum(&m)),
        Ok(projective(&d4, 0).direct_sum(&injective(&d4, 0)).map_err(err)?),
    ];
    for m in cases {
        let m = m.map_err(err)?;
        let x = cc_value(&CCObject::from_module(m.clone())).map_err(err)?;
        for _ in 0..8 {
            let g: Vec<QMatrix> = m.dims().iter().map(|&d| unimodular(d, &mut rng)).collect();
            let y = cc_value(&CCObject::from_module(m.change_basis(&g).map_err(err)?)).map_err(err)?;
            ensure(x == y, || format!("base change alters X for dims {:?}", m.dims()))?;
        }
    }
    tally.push("base change".into());

    // SES additivity on interval sequences
    let mut seqs = 0;
    for n in 2..=5 {
        let model = PolygonModel::new(n).map_err(err)?;
        for [s, x, q] in interval_sequences(n) {
            let get = |(a, b)| model.interval(a, b).map_err(err);
            let (s, x, q) = (get(s)?, get(x)?, get(q)?);
            let add = |f: fn(&Representation) -> ccmap::Result<ccmap::modules::K0ProjClass>| -> Result<bool, String> {
                Ok(f(&x).map_err(err)? == f(&s).map_err(err)?.add(&f(&q).map_err(err)?))
            };
            ensure(add(index)? && add(coindex)?, || format!("n = {n}: additivity fails"))?;
            seqs += 1;
        }
    }
    tally.push(format!("additivity on {seqs} sequences"));

    Ok(tally.join(", "))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 6] = [
        ("A4 reproduction", criterion_1, LIMIT_A4),
        ("D4 reproduction", criterion_2, LIMIT_D4),
        ("multiplication identity in type A_n, n = 2..5", criterion_3, LIMIT_AN),
        ("arc values = cluster variables, n = 2..4", criterion_4, LIMIT_BIJECTION),
        ("form descent and coind - ind", criterion_5, LIMIT_DESCENT),
        ("property suite", criterion_6, LIMIT_PROPERTIES),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(format!("panic: {:?}", p.downcast_ref::<String>().cloned().unwrap_or_default())));
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed <= *limit {
                Ok(msg)
            } else {
                Err(format!("{msg}; took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(msg) => println!("PASS criterion {} ({name}): {msg} [{elapsed:.2?} / {limit:?}]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {msg} [{elapsed:.2?} / {limit:?}]", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
