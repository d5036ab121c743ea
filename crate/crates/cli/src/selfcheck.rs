//! Worked examples on the 4-cycle and a few tiny graphs, replayed end to end.

use std::fmt::Write as _;

use chromatic_reciprocity::chromatic::{chi_hat_d, chromatic_polynomial, multicolor_polynomial};
use chromatic_reciprocity::heaps::{
    direct_heap_count, heap_series, pyramid_series, restricted_heap_series, trivial_series,
};
use chromatic_reciprocity::orientations::{
    acyclic_count_table, count_bipolar, enumerate_acyclic, source_components,
    unique_source_min_table,
};
use chromatic_reciprocity::reciprocity::{
    check_greene_zaslavsky, check_stanley, check_theorem1, check_theorem44,
};
use chromatic_reciprocity::symfunc::{
    csf_from_colorings, csf_powersum, expand_finite, omega, orientation_tally, specialize_p_to_q,
    verify_prop51, verify_prop52, PPoly,
};
use chromatic_reciprocity::{
    Error, ExponentVector, Graph, IntPolynomial, Partition, Result, VertexSet,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use crate::Output;

fn c4() -> Graph {
    Graph::cycle(4).expect("4-cycle")
}

fn int_poly(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

fn ev(e: &[u32]) -> ExponentVector {
    ExponentVector::new(e.to_vec())
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn set(vertices: &[usize]) -> VertexSet {
    VertexSet::from_vertices(vertices.iter().copied())
}

fn ppoly(entries: &[(&[u32], i64)]) -> Result<PPoly> {
    let degree = entries
        .first()
        .map_or(0, |(p, _)| p.iter().sum::<u32>() as usize);
    PPoly::from_terms(
        degree,
        entries.iter().map(|(p, c)| {
            (
                Partition::new(p.to_vec()),
                BigRational::from_integer((*c).into()),
            )
        }),
    )
}

fn binomial(n: i64, k: i64) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

type Example = (&'static str, fn() -> Result<bool>);

const EXAMPLES: &[Example] = &[
    (
        "chromatic polynomial of the 4-cycle is q^4 - 4q^3 + 6q^2 - 3q",
        || Ok(chromatic_polynomial(&c4())? == int_poly(&[0, -3, 6, -4, 1])),
    ),
    (
        "blow-up of the 4-cycle by (3,2,0,1) has 6 vertices and 13 edges",
        || {
            let b = c4().blowup(&ev(&[3, 2, 0, 1]))?;
            Ok(b.vertex_count() == 6 && b.edge_count() == 13)
        },
    ),
    ("{1,2} is a clique of the 4-cycle and {1,3} is not", || {
        let g = c4();
        Ok(g.is_clique(set(&[1, 2])) && !g.is_clique(set(&[1, 3])))
    }),
    ("the 4-cycle has 7 independent sets", || {
        let sets = c4().independent_sets();
        let expected = [&[][..], &[1], &[2], &[3], &[4], &[1, 3], &[2, 4]].map(set);
        Ok(sets.len() == 7 && expected.iter().all(|s| sets.contains(s)))
    }),
    ("the 4-cycle has 14 acyclic orientations", || {
        Ok(enumerate_acyclic(&c4())?.count() == 14)
    }),
    (
        "1, 4, 6, 3 orientations have 4, 3, 2, 1 source-components",
        || {
            let g = c4();
            let mut tally = [0; 5];
            for o in enumerate_acyclic(&g)? {
                tally[source_components(&g, o)?.len()] += 1;
            }
            Ok(tally == [0, 3, 6, 4, 1])
        },
    ),
    ("orientations tallied by lambda: 1, 4, 4, 2, 3", || {
        let expected = ppoly(&[
            (&[1, 1, 1, 1], 1),
            (&[2, 1, 1], 4),
            (&[3, 1], 4),
            (&[2, 2], 2),
            (&[4], 3),
        ])?;
        Ok(orientation_tally(&c4())? == expected)
    }),
    ("a[{1,2,3,4}] = 14, a[{1,2}] = 2, b[{1,2,3,4}] = 3", || {
        let g = c4();
        let a = acyclic_count_table(&g)?;
        let b = unique_source_min_table(&g)?;
        Ok(a.get(g.vertices()) == 14 && a.get(set(&[1, 2])) == 2 && b.get(g.vertices()) == 3)
    }),
    (
        "bipolar orientations need adjacent poles: (1,3) is rejected",
        || {
            Ok(matches!(
                count_bipolar(&c4(), 1, 3),
                Err(Error::NotAdjacent(1, 3))
            ))
        },
    ),
    ("chi'(-1) = -31 for the 4-cycle", || {
        Ok(chromatic_polynomial(&c4())?
            .derivative(1)
            .evaluate(&BigInt::from(-1))
            == BigInt::from(-31))
    }),
    ("chi_hat_2 of the 4-cycle is q^2 - 3q + 3", || {
        Ok(chi_hat_d(&c4(), 2)? == int_poly(&[3, -3, 1]))
    }),
    ("(-1)^|m| chi_m(-1) counts heaps of type m", || {
        let g = c4();
        for m in [[1, 1, 1, 1], [2, 1, 0, 1], [2, 2, 1, 0], [3, 1, 1, 1]] {
            let m = ev(&m);
            let value = multicolor_polynomial(&g, &m)?.evaluate(&rat(-1, 1));
            let sign = if m.total() % 2 == 0 { 1 } else { -1 };
            if value * rat(sign, 1) != rat(direct_heap_count(&g, &m)? as i64, 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }),
    ("T(x) = 1 + x1 + x2 + x3 + x4 + x1x3 + x2x4", || {
        let t = trivial_series(&c4(), 6);
        let expected = [
            [0, 0, 0, 0],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 0, 1, 0],
            [0, 1, 0, 1],
        ];
        Ok(t.len() == 7 && expected.iter().all(|m| t.coefficient(&ev(m)) == rat(1, 1)))
    }),
    ("H(x) has 2 x1x2, x1x3 and x1^2", || {
        let h = heap_series(&c4(), 4);
        Ok(h.coefficient(&ev(&[1, 1, 0, 0])) == rat(2, 1)
            && h.coefficient(&ev(&[1, 0, 1, 0])) == rat(1, 1)
            && h.coefficient(&ev(&[2, 0, 0, 0])) == rat(1, 1))
    }),
    ("P(x) has x1x2 and x1^2 / 2", || {
        let p = pyramid_series(&c4(), 4);
        Ok(p.coefficient(&ev(&[1, 1, 0, 0])) == rat(1, 1)
            && p.coefficient(&ev(&[2, 0, 0, 0])) == rat(1, 2))
    }),
    ("squarefree coefficients of P are b[V]", || {
        let g = c4();
        let p = pyramid_series(&g, 4);
        let b = unique_source_min_table(&g)?;
        Ok(g.vertices()
            .subsets()
            .all(|v| p.coefficient_of_set(v) == rat(b.get(v) as i64, 1)))
    }),
    (
        "squarefree coefficients of H_{k} count orientations with unique source k",
        || {
            let g = c4();
            for k in 1..=4 {
                let hk = restricted_heap_series(&g, VertexSet::singleton(k), 4)?;
                for v in g.vertices().subsets().filter(|v| v.contains(k)) {
                    let (sub, labels) = g.induced_subgraph(v)?;
                    let position = labels.iter().position(|&w| w == k).expect("k in V") + 1;
                    let direct = enumerate_acyclic(&sub)?
                        .filter(|o| o.sources(&sub) == VertexSet::singleton(position))
                        .count();
                    if hk.coefficient_of_set(v) != rat(direct as i64, 1) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        },
    ),
    ("two adjacent pieces form 2 heaps", || {
        Ok(direct_heap_count(&Graph::complete(2)?, &ev(&[1, 1]))? == 2)
    }),
    ("one rooted and one acyclic block: 31 pairs, 16 + 8 + 4 + 3", || {
        let r = check_theorem1(&c4(), 1, 1)?;
        let strata: Vec<BigInt> = r.strata.values().cloned().collect();
        Ok(r.passed() && r.count == BigInt::from(31) && strata == [16, 8, 4, 3].map(BigInt::from))
    }),
    ("one acyclic block: 14 tuples", || {
        let r = check_theorem1(&c4(), 0, 1)?;
        Ok(r.passed() && r.count == BigInt::from(14))
    }),
    ("one color, no descents: 14 pairs", || {
        let r = check_stanley(&c4(), 1)?;
        Ok(r.passed() && r.count == BigInt::from(14))
    }),
    (
        "3 orientations with one source-component, 1 with four",
        || {
            let one = check_greene_zaslavsky(&c4(), 1)?;
            let four = check_greene_zaslavsky(&c4(), 4)?;
            Ok(one.passed()
                && four.passed()
                && one.count == BigInt::from(3)
                && four.count == BigInt::from(1))
        },
    ),
    ("3 triples for d = 2, i = 1, j = 0", || {
        let r = check_theorem44(&c4(), 2, 1, 0)?;
        Ok(r.passed() && r.count == BigInt::from(3))
    }),
    ("X = p1111 - 4p211 + 4p31 + 2p22 - 3p4", || {
        let expected = ppoly(&[
            (&[1, 1, 1, 1], 1),
            (&[2, 1, 1], -4),
            (&[3, 1], 4),
            (&[2, 2], 2),
            (&[4], -3),
        ])?;
        Ok(csf_powersum(&c4())? == expected)
    }),
    ("omega(X) = p1111 + 4p211 + 4p31 + 2p22 + 3p4", || {
        let expected = ppoly(&[
            (&[1, 1, 1, 1], 1),
            (&[2, 1, 1], 4),
            (&[3, 1], 4),
            (&[2, 2], 2),
            (&[4], 3),
        ])?;
        Ok(omega(&csf_powersum(&c4())?) == expected)
    }),
    ("p_k -> q sends X to the chromatic polynomial", || {
        let g = c4();
        Ok(specialize_p_to_q(&csf_powersum(&g)?)? == chromatic_polynomial(&g)?)
    }),
    ("omega(X)(1^j) = chi(-j)", || {
        let g = c4();
        let chi = chromatic_polynomial(&g)?;
        let dual = omega(&csf_powersum(&g)?);
        for j in 1..=4 {
            if expand_finite(&dual, j)?.sum_of_coefficients()
                != chi.evaluate(&BigInt::from(-(j as i64)))
            {
                return Ok(false);
            }
        }
        Ok(true)
    }),
    ("X has 24 z1z2z3z4, 4 z1^2z2z3 and 2 z1^2z2^2", || {
        let x = csf_powersum(&c4())?;
        let four = expand_finite(&x, 4)?;
        let two = expand_finite(&x, 2)?;
        Ok(four.coefficient(&[1, 1, 1, 1]) == BigInt::from(24)
            && four.coefficient(&[2, 1, 1, 0]) == BigInt::from(4)
            && two.coefficient(&[2, 2]) == BigInt::from(2))
    }),
    ("X(1^j) = 24C(j,4) + 12C(j,3) + 2C(j,2)", || {
        let x = csf_powersum(&c4())?;
        for j in 1..=6 {
            let expected = 24 * binomial(j, 4) + 12 * binomial(j, 3) + 2 * binomial(j, 2);
            if expand_finite(&x, j as usize)?.sum_of_coefficients() != BigInt::from(expected) {
                return Ok(false);
            }
        }
        Ok(true)
    }),
    ("proper colorings in 2 colors: 2 z1^2z2^2", || {
        let f = csf_from_colorings(&c4(), 2)?;
        Ok(f.len() == 1 && f.coefficient(&[2, 2]) == BigInt::from(2))
    }),
    ("descent-free pairs with one color: 14 z1^4", || {
        let r = verify_prop51(&c4(), 1)?;
        let f = expand_finite(&omega(&csf_powersum(&c4())?), 1)?;
        Ok(r.passed() && f.coefficient(&[4]) == BigInt::from(14))
    }),
    ("orientation tally equals omega(X)", || {
        Ok(verify_prop52(&c4())?.passed())
    }),
];

pub(crate) fn run() -> Output {
    let mut table = String::new();
    let mut entries = Vec::new();
    let mut all = true;
    for (name, example) in EXAMPLES {
        let (passed, detail) = match example() {
            Ok(passed) => (passed, None),
            Err(e) => (false, Some(e.to_string())),
        };
        all &= passed;
        let _ = write!(table, "{} {name}", if passed { "PASS" } else { "FAIL" });
        if let Some(d) = &detail {
            let _ = write!(table, " ({d})");
        }
        table.push('\n');
        entries.push(json!({ "example": name, "passed": passed, "error": detail }));
    }
    let count = entries.iter().filter(|e| e["passed"] == true).count();
    let _ = writeln!(table, "{count}/{} examples passed", EXAMPLES.len());
    Output {
        json: json!({ "examples": entries, "passed": count, "total": EXAMPLES.len() }),
        table,
        passed: all,
    }
}
