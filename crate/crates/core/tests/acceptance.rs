//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints exactly one line, pass or fail, with its wall time.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use chromatic_reciprocity::chromatic::{
    chi_hat_d, chromatic_polynomial, chromatic_polynomial_dp, count_proper_colorings, multicolor_polynomial,
};
use chromatic_reciprocity::family::{small_family, DEFAULT_SEED};
use chromatic_reciprocity::graph::SearchOrder;
use chromatic_reciprocity::heaps::{
    direct_heap_count, exponent_vectors, heap_series, pyramid_series, trivial_series, verify_heap_identities,
};
use chromatic_reciprocity::orientations::{enumerate_acyclic, source_components};
use chromatic_reciprocity::reciprocity::{
    check_bipolar, check_bivariate_reciprocity, check_corollary43, check_greene_zaslavsky, check_stanley,
    check_theorem1, check_theorem44, check_theorem45_relabeled, ReciprocityReport,
};
use chromatic_reciprocity::symfunc::{
    csf_powersum, expand_finite, omega, verify_combined, verify_prop51, verify_prop52, verify_superfication,
    verify_thm53,
};
use chromatic_reciprocity::{ExponentVector, Graph, IntPolynomial, Partition, VertexSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

const TIME_LIMIT: Duration = Duration::from_secs(10);

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(k: i64) -> BigInt {
    BigInt::from(k)
}

fn c4() -> Graph {
    Graph::cycle(4).expect("cycle")
}

fn poly(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::new(coeffs.iter().map(|&c| big(c)).collect())
}

fn passed(report: &ReciprocityReport, graph: &Graph) -> Outcome {
    ensure(report.passed(), || format!("{graph:?}: {report}"))
}

fn criterion1() -> Outcome {
    let chi = chromatic_polynomial(&c4()).map_err(|e| e.to_string())?;
    ensure(chi == poly(&[0, -3, 6, -4, 1]), || format!("got {chi}"))?;
    let dp = chromatic_polynomial_dp(&c4()).map_err(|e| e.to_string())?;
    ensure(dp == chi, || format!("second route gives {dp}"))?;
    for q in 0..6 {
        let value = chi.evaluate(&big(q as i64));
        ensure(value == count_proper_colorings(&c4(), q), || format!("q={q}: {value}"))?;
    }
    Ok(())
}

fn criterion2() -> Outcome {
    let r = check_theorem1(&c4(), 1, 1).map_err(|e| e.to_string())?;
    ensure(r.count == big(31), || format!("count {}", r.count))?;
    let strata: Vec<BigInt> = r.strata.values().cloned().collect();
    ensure(r.strata.keys().copied().eq(1..=4), || format!("strata keys {:?}", r.strata))?;
    ensure(strata == vec![big(16), big(8), big(4), big(3)], || format!("strata {strata:?}"))?;
    let chi = chromatic_polynomial(&c4()).map_err(|e| e.to_string())?;
    let minus_derivative = -chi.derivative(1).evaluate(&big(-1));
    ensure(minus_derivative == big(31) && r.poly_side == minus_derivative, || {
        format!("-chi'(-1) = {minus_derivative}, reported {}", r.poly_side)
    })?;
    ensure(r.passed(), || r.to_string())
}

fn criterion3() -> Outcome {
    let g = c4();
    let all: Vec<_> = enumerate_acyclic(&g).map_err(|e| e.to_string())?.collect();
    ensure(all.len() == 14, || format!("{} acyclic orientations", all.len()))?;
    let mut tally = [0i64; 5];
    for &o in &all {
        tally[source_components(&g, o).map_err(|e| e.to_string())?.len()] += 1;
    }
    ensure(tally == [0, 3, 6, 4, 1], || format!("tally {tally:?}"))?;
    let chi = chromatic_polynomial(&g).map_err(|e| e.to_string())?;
    for i in 1..=4usize {
        let signed = if (4 - i) % 2 == 0 { chi.coeff(i) } else { -chi.coeff(i) };
        ensure(signed == big(tally[i]), || format!("i={i}: coefficient {signed}"))?;
        let r = check_greene_zaslavsky(&g, i).map_err(|e| e.to_string())?;
        passed(&r, &g)?;
    }
    Ok(())
}

fn criterion4() -> Outcome {
    let hat = chi_hat_d(&c4(), 2).map_err(|e| e.to_string())?;
    ensure(hat == poly(&[3, -3, 1]), || format!("chi_hat_2 = {hat}"))?;
    let r = check_theorem44(&c4(), 2, 1, 0).map_err(|e| e.to_string())?;
    ensure(r.count == big(3), || format!("count {}", r.count))?;
    ensure(-hat.derivative(1).evaluate(&BigInt::zero()) == big(3), || "-chi_hat_2'(0) != 3".into())?;
    ensure(r.passed(), || r.to_string())
}

fn criterion5() -> Outcome {
    let g = c4();
    let x = |e: [u32; 4]| ExponentVector::new(e.to_vec());
    let one = BigRational::one();
    let half = BigRational::new(big(1), big(2));
    let t = trivial_series(&g, 4);
    let mut expected_t = vec![x([0, 0, 0, 0]), x([1, 0, 1, 0]), x([0, 1, 0, 1])];
    for k in 0..4 {
        let mut e = [0; 4];
        e[k] = 1;
        expected_t.push(x(e));
    }
    ensure(t.len() == expected_t.len(), || format!("T has {} terms", t.len()))?;
    for e in &expected_t {
        ensure(t.coefficient(e) == one, || format!("T coefficient of {e:?}"))?;
    }
    let h = heap_series(&g, 2);
    let p = pyramid_series(&g, 2);
    for e in exponent_vectors(4, 2) {
        let support = e.support();
        let adjacent_pair = e.total() == 2 && support.len() == 2 && g.is_clique(support);
        let (h_expected, p_expected) = match e.total() {
            0 => (one.clone(), BigRational::zero()),
            1 => (one.clone(), one.clone()),
            _ if support.len() == 1 => (one.clone(), half.clone()),
            _ if adjacent_pair => (big(2).into(), one.clone()),
            _ => (one.clone(), BigRational::zero()),
        };
        ensure(h.coefficient(&e) == h_expected, || format!("H coefficient of {e:?}: {}", h.coefficient(&e)))?;
        ensure(p.coefficient(&e) == p_expected, || format!("P coefficient of {e:?}: {}", p.coefficient(&e)))?;
    }
    Ok(())
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).map(|t| n - t).product::<i64>() / (1..=k).product::<i64>()
}

fn criterion6() -> Outcome {
    let x = csf_powersum(&c4()).map_err(|e| e.to_string())?;
    let four = expand_finite(&x, 4).map_err(|e| e.to_string())?;
    ensure(four.coefficient(&[1, 1, 1, 1]) == big(24), || "z1z2z3z4".into())?;
    for e in four.terms().keys() {
        let mut shape: Vec<u32> = e.as_slice().iter().copied().filter(|&k| k > 0).collect();
        shape.sort_unstable_by(|a, b| b.cmp(a));
        let expected = match shape.as_slice() {
            [1, 1, 1, 1] => 24,
            [2, 1, 1] => 4,
            [2, 2] => 2,
            _ => 0,
        };
        ensure(four.coefficient(e.as_slice()) == big(expected), || format!("monomial {e:?}"))?;
    }
    ensure(four.coefficient(&[2, 1, 0, 1]) == big(4), || "z1^2 z2 z4".into())?;
    ensure(four.coefficient(&[0, 2, 0, 2]) == big(2), || "z2^2 z4^2".into())?;
    for j in 0..=6i64 {
        let value = expand_finite(&x, j as usize).map_err(|e| e.to_string())?.sum_of_coefficients();
        let formula = 24 * binomial(j, 4) + 12 * binomial(j, 3) + 2 * binomial(j, 2);
        ensure(value == big(formula), || format!("j={j}: {value} vs {formula}"))?;
        ensure(count_proper_colorings(&c4(), j as usize) == big(formula), || format!("j={j} colorings"))?;
    }
    Ok(())
}

fn criterion7() -> Outcome {
    let x = csf_powersum(&c4()).map_err(|e| e.to_string())?;
    let w = omega(&x);
    let order: Vec<Partition> = [vec![1, 1, 1, 1], vec![2, 1, 1], vec![3, 1], vec![2, 2], vec![4]]
        .into_iter()
        .map(Partition::new)
        .collect();
    let values = |p: &chromatic_reciprocity::symfunc::PPoly| -> Vec<BigRational> {
        order.iter().map(|l| p.coeff(l)).collect()
    };
    let ints = |v: &[i64]| -> Vec<BigRational> { v.iter().map(|&k| BigRational::from_integer(big(k))).collect() };
    ensure(x.len() == 5 && values(&x) == ints(&[1, -4, 4, 2, -3]), || format!("X = {x}"))?;
    ensure(w.len() == 5 && values(&w) == ints(&[1, 4, 4, 2, 3]), || format!("omega(X) = {w}"))?;
    Ok(())
}

fn err(g: &Graph) -> impl Fn(chromatic_reciprocity::Error) -> String + '_ {
    move |e| format!("{g:?}: {e}")
}

fn criterion8() -> Outcome {
    let family = small_family(DEFAULT_SEED);
    ensure(family.len() >= 200, || format!("family of {}", family.len()))?;
    for g in &family {
        let n = g.vertex_count();
        for i in 0..=3 {
            for j in 0..=3 - i {
                passed(&check_theorem1(g, i, j).map_err(err(g))?, g)?;
            }
        }
        for j in 0..=3 {
            passed(&check_stanley(g, j).map_err(err(g))?, g)?;
        }
        for i in 0..=n + 1 {
            passed(&check_greene_zaslavsky(g, i).map_err(err(g))?, g)?;
        }
        for i in 0..=2 {
            for j in 0..=2 - i {
                passed(&check_corollary43(g, i, j).map_err(err(g))?, g)?;
            }
        }
        for d in 0..=2.min(n) {
            if !g.is_clique(VertexSet::full(d)) {
                continue;
            }
            for i in 0..=2 {
                for j in 0..=2 - i {
                    passed(&check_theorem44(g, d, i, j).map_err(err(g))?, g)?;
                }
            }
        }
        if g.is_connected() {
            for d in 1..=2.min(n) {
                if !g.is_clique(VertexSet::full(d)) {
                    continue;
                }
                for i in 0..=3 {
                    let a = check_theorem45_relabeled(g, d, i, SearchOrder::SmallestFirst).map_err(err(g))?;
                    let b = check_theorem45_relabeled(g, d, i, SearchOrder::LargestFirst).map_err(err(g))?;
                    passed(&a, g)?;
                    passed(&b, g)?;
                    ensure(a.count == b.count, || format!("{g:?}: relabeling changes count"))?;
                }
            }
        }
        for j in 0..=2 {
            for k in 0..=2 - j {
                passed(&check_bivariate_reciprocity(g, j, k).map_err(err(g))?, g)?;
            }
        }
        let heaps = verify_heap_identities(g, 6).map_err(err(g))?;
        ensure(heaps.passed(), || format!("{g:?}: {heaps}"))?;
        let mut reports = vec![verify_prop52(g).map_err(err(g))?];
        for a in 0..=2 {
            reports.push(verify_prop51(g, a).map_err(err(g))?);
            for b in 0..=2 {
                reports.push(verify_thm53(g, a, b).map_err(err(g))?);
                reports.push(verify_superfication(g, a, b).map_err(err(g))?);
            }
        }
        reports.push(verify_combined(g, 1, 1, 1).map_err(err(g))?);
        reports.push(verify_combined(g, 2, 2, 2).map_err(err(g))?);
        for r in reports {
            ensure(r.passed(), || format!("{g:?}: {r}"))?;
        }
    }
    Ok(())
}

fn criterion9() -> Outcome {
    let mut connected = 0;
    for g in small_family(DEFAULT_SEED) {
        if !g.is_connected() || g.edge_count() == 0 {
            continue;
        }
        connected += 1;
        let mut counts = Vec::new();
        for &(a, b) in g.edges() {
            for (u, v) in [(a, b), (b, a)] {
                let r = check_bipolar(&g, u, v).map_err(|e| format!("{g:?}: {e}"))?;
                passed(&r, &g)?;
                counts.push(r.count);
            }
        }
        ensure(counts.windows(2).all(|w| w[0] == w[1]), || format!("{g:?}: counts {counts:?}"))?;
    }
    ensure(connected > 50, || format!("only {connected} connected graphs"))
}

fn criterion10() -> Outcome {
    let graphs = [
        c4(),
        Graph::complete(3).expect("complete"),
        Graph::path(3).expect("path"),
        Graph::from_edge_list(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]).expect("paw"),
    ];
    let mut checked = 0;
    for g in &graphs {
        for m in exponent_vectors(g.vertex_count(), 8) {
            if m.total() == 0 {
                continue;
            }
            let chi_m = multicolor_polynomial(g, &m).map_err(|e| e.to_string())?;
            let blown = g.blowup(&m).map_err(|e| e.to_string())?;
            let chi_blown = chromatic_polynomial(&blown).map_err(|e| e.to_string())?.to_rational();
            let factorial = BigRational::from_integer(m.factorial());
            ensure(chi_m.scale(&factorial) == chi_blown, || format!("{g:?} m={m:?}: m! chi_m != chi of blow-up"))?;
            let at_minus_one = chi_m.evaluate(&-BigRational::one());
            let signed = if m.total() % 2 == 0 { at_minus_one } else { -at_minus_one };
            let heaps = direct_heap_count(g, &m).map_err(|e| e.to_string())?;
            ensure(signed == BigRational::from_integer(BigInt::from(heaps)), || {
                format!("{g:?} m={m:?}: {signed} vs {heaps} heaps")
            })?;
            checked += 1;
        }
    }
    ensure(checked > 300, || format!("only {checked} types"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("chromatic polynomial of the 4-cycle", criterion1),
        ("31 pairs with strata 16, 8, 4, 3", criterion2),
        ("14 acyclic orientations tallied by source-components", criterion3),
        ("chi_hat_2 of the 4-cycle and its 3 triples", criterion4),
        ("T, H, P of the 4-cycle", criterion5),
        ("monomial expansion of X of the 4-cycle", criterion6),
        ("power-sum expansions of X and omega(X)", criterion7),
        ("property suite over the seeded family", criterion8),
        ("bipolar orientation counts", criterion9),
        ("multicoloring polynomials and heaps of type m", criterion10),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed < TIME_LIMIT, || format!("took {:.1}s", elapsed.as_secs_f64()))
        });
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({:.2}s)", k + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name} ({:.2}s): {msg}", k + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
