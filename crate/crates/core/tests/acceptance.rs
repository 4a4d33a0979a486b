//! Acceptance criteria, one line per criterion. All comparisons are exact.

use std::process::ExitCode;
use std::time::Instant;

use rmatrix::bialgebra::{delta, delta_op, BlockFamily, DirectSumElement};
use rmatrix::braid::{verify_braid_relations, verify_involution, RepSpace};
use rmatrix::monoid::{check_wcs_coassoc, check_wcs_unit};
use rmatrix::rmatrix::{
    build_p, build_q, chi, verify_counit_r, verify_hexagon_left, verify_hexagon_right,
    verify_intertwiner, verify_intertwiner_with, verify_triangularity, verify_triangularity_with,
    verify_ybe, IdentityR, InvertedBlockR,
};
use rmatrix::{kron, mat_unit, verify_counit_law, Limits, SparseSquareMatrix, VerificationReport};

type Verdict = Result<(), String>;

fn all_pass(reports: &[VerificationReport]) -> Verdict {
    match reports.iter().find(|r| !r.pass) {
        None => Ok(()),
        Some(r) => Err(r.to_string()),
    }
}

fn e(n: usize, i: usize, j: usize) -> SparseSquareMatrix {
    mat_unit(n, i, j).unwrap()
}

fn chi_values() -> Verdict {
    let got = (chi(2, 3, 1, 2).unwrap(), chi(2, 3, 2, 1).unwrap());
    if got == ((2, 1), (2, 2)) {
        Ok(())
    } else {
        Err(format!("got {got:?}"))
    }
}

fn non_cocommutativity() -> Verdict {
    let x = DirectSumElement::unit(6, 2, 2).unwrap();
    let d = delta(&x).unwrap();
    // I_1 ⊗ E^(6)_22 + E^(2)_11 ⊗ E^(3)_22 + E^(3)_11 ⊗ E^(2)_22 + E^(6)_22 ⊗ I_1
    let mut expected = BlockFamily::new(6);
    for (n, a, m, b) in [(1, (1, 1), 6, (2, 2)), (2, (1, 1), 3, (2, 2)), (3, (1, 1), 2, (2, 2)), (6, (2, 2), 1, (1, 1))] {
        let block = kron(n, m, &e(n, a.0, a.1), &e(m, b.0, b.1)).unwrap();
        expected.accumulate(n, m, block).unwrap();
    }
    let got: Vec<_> = d.blocks().collect();
    let want: Vec<_> = expected.blocks().collect();
    if got != want {
        return Err(format!("Δ(E^(6)_22) = {got:?}"));
    }
    let op = delta_op(&x).unwrap();
    if op.blocks().collect::<Vec<_>>() == got {
        return Err("Δ^op(E^(6)_22) = Δ(E^(6)_22)".into());
    }
    Ok(())
}

fn wcs_axioms(limits: &Limits) -> Verdict {
    let mut reports = Vec::new();
    for a in 1..=64u64 {
        for b in 1..=64 / a {
            for c in 1..=64 / (a * b) {
                reports.push(check_wcs_coassoc(a, b, c, limits).map_err(|e| e.to_string())?);
            }
        }
    }
    for a in 1..=16 {
        reports.push(check_wcs_unit(a, limits).map_err(|e| e.to_string())?);
    }
    all_pass(&reports)
}

fn counit_laws(limits: &Limits) -> Verdict {
    all_pass(&[verify_counit_law(16, limits).map_err(|e| e.to_string())?])
}

fn run<F>(dual: &mut Vec<VerificationReport>, mut f: F) -> Verdict
where
    F: FnMut() -> rmatrix::Result<Vec<VerificationReport>>,
{
    let reports = f().map_err(|e| e.to_string())?;
    let verdict = all_pass(&reports);
    dual.extend(reports);
    verdict
}

fn pairs(max: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max).flat_map(move |n| (1..=max).map(move |m| (n, m)))
}

fn triples(max: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=max).flat_map(move |n| pairs(max).map(move |(m, l)| (n, m, l)))
}

fn p_equals_q() -> Verdict {
    for (n, m, l) in triples(6) {
        if build_p(n, m, l).unwrap() != build_q(n, m, l).unwrap() {
            return Err(format!("P ≠ Q at ({n},{m},{l})"));
        }
    }
    Ok(())
}

fn negative_controls(limits: &Limits, dual: &mut Vec<VerificationReport>) -> Verdict {
    let inter = verify_intertwiner_with(&IdentityR, 2, 3, limits).map_err(|e| e.to_string())?;
    let tri = verify_triangularity_with(&InvertedBlockR { n: 2, m: 3 }, 2, 3, limits).map_err(|e| e.to_string())?;
    let verdict = match (&inter.counterexample, &tri.counterexample) {
        _ if inter.pass => Err("intertwiner passed with identity R".into()),
        _ if tri.pass => Err("triangularity passed with χ inverted on (2,3)".into()),
        (Some(c), Some(_)) if c.indices == [2, 2] => Ok(()),
        (Some(c), Some(_)) => Err(format!("intertwiner counterexample at {:?}, expected E^(6)_22", c.indices)),
        _ => Err("failure without counterexample".into()),
    };
    dual.push(inter);
    dual.push(tri);
    verdict
}

fn dual_agreement(dual: &[VerificationReport]) -> Verdict {
    let mut counted = 0;
    for r in dual {
        match (r.permutation_path, r.matrix_path) {
            (Some(p), Some(m)) if p == m => counted += 1,
            (Some(_), Some(_)) => return Err(format!("paths disagree: {r}")),
            _ => {}
        }
    }
    if counted == 0 {
        return Err("no dual-path reports".into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let limits = Limits::default();
    let started = Instant::now();
    let mut dual = Vec::new();
    let hexagons = run(&mut dual, || {
        let mut out = Vec::new();
        for (n, m, l) in triples(4) {
            out.push(verify_hexagon_left(n, m, l, &limits)?);
            out.push(verify_hexagon_right(n, m, l, &limits)?);
        }
        Ok(out)
    });
    let results: Vec<(&str, Verdict)> = vec![
        ("1 chi values", chi_values()),
        ("2 non-cocommutativity of Δ(E^(6)_22)", non_cocommutativity()),
        ("3 WCS coassociativity abc ≤ 64, unit a ≤ 16", wcs_axioms(&limits)),
        ("4 counit laws n ≤ 16", counit_laws(&limits)),
        (
            "5 intertwiner n,m ≤ 8",
            run(&mut dual, || pairs(8).map(|(n, m)| verify_intertwiner(n, m, &limits)).collect()),
        ),
        ("6 hexagons n,m,l ≤ 4 and P = Q n,m,l ≤ 6", hexagons.and_then(|_| p_equals_q())),
        (
            "7 triangularity n,m ≤ 12",
            run(&mut dual, || pairs(12).map(|(n, m)| verify_triangularity(n, m, &limits)).collect()),
        ),
        (
            "8 Yang-Baxter n,m,l ≤ 5",
            run(&mut dual, || triples(5).map(|(n, m, l)| verify_ybe(n, m, l, &limits)).collect()),
        ),
        (
            "9 counit of R, m ≤ 32",
            run(&mut dual, || Ok(vec![verify_counit_r(32, &limits)?])),
        ),
        (
            "10 braid relations {1,2,3} k=3, far commutation {1,2} k=4, C² = I on {1..5}",
            run(&mut dual, || {
                Ok(vec![
                    verify_braid_relations(&RepSpace::upto(3)?, 3, &limits)?,
                    verify_braid_relations(&RepSpace::upto(2)?, 4, &limits)?,
                    verify_involution(&RepSpace::upto(5)?, &limits)?,
                ])
            }),
        ),
        ("11 negative controls", negative_controls(&limits, &mut dual)),
        ("12 permutation and matrix paths agree", dual_agreement(&dual)),
    ];

    let mut failed = 0;
    for (name, verdict) in &results {
        match verdict {
            Ok(()) => println!("PASS {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1} s ({} dual-path reports)",
        results.len() - failed,
        results.len(),
        started.elapsed().as_secs_f64(),
        dual.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
