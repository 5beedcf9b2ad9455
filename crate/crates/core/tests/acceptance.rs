//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Pinned tolerances: full analysis under 5 s per catalog ring; reconstruction at 192 bits with
//! height bound 1000 over 100 samples drawn with seed 2024. Every other comparison is exact.

mod common;

use std::time::{Duration, Instant};

use common::{match_with_group, Group};
use fuscat::chartable::{first_orthogonality, second_orthogonality};
use fuscat::checks::{self, Status};
use fuscat::exactnum::{embed, reconstruct, totient};
use fuscat::fusionring::catalog_names;
use fuscat::galois::{galois_group, galois_report, row_permutation, RowPermutation};
use fuscat::report::{analyze, load_input, RunConfig};
use fuscat::structconst::{class_algebra, class_structure_constants};
use fuscat::theorems::{modular_check, perfect_identity, zero_rows, PerfectVerdict, SMatrixSpec};
use fuscat::{catalog, compute_table, CharacterTable, CycNumber, TableConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ANALYSIS_BUDGET: Duration = Duration::from_secs(5);
const RECONSTRUCT_BITS: usize = 192;
const RECONSTRUCT_HEIGHT: i64 = 1000;
const RECONSTRUCT_SAMPLES: usize = 100;
const RECONSTRUCT_SEED: u64 = 2024;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn table(name: &str) -> CharacterTable {
    compute_table(&catalog(name).unwrap(), &TableConfig::default()).unwrap()
}

fn int(v: i64) -> CycNumber {
    CycNumber::from_integer(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn orthogonality() -> Outcome {
    let mut slowest = Duration::ZERO;
    for name in catalog_names() {
        let input = load_input(&format!("catalog:{name}"), true).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let report = analyze(&input, &RunConfig::default()).map_err(|e| format!("{name}: {e}"))?;
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure(elapsed < ANALYSIS_BUDGET, || format!("{name}: analysis took {elapsed:?}"))?;
        ensure(report.all_pass(), || format!("{name}: report has failing checks"))?;
        let t = table(name);
        ensure(first_orthogonality(&t).is_none(), || format!("{name}: first orthogonality residual nonzero"))?;
        ensure(second_orthogonality(&t).is_none(), || format!("{name}: second orthogonality residual nonzero"))?;
    }
    Ok(format!("7 rings, exact zero residual, slowest analysis {:.0} ms", slowest.as_secs_f64() * 1e3))
}

fn certificate() -> Outcome {
    let mut triples = 0usize;
    for name in catalog_names() {
        let t = table(name);
        let ring = &t.ring;
        let r = t.rank();
        for a in 0..r {
            for b in 0..r {
                for j in 0..r {
                    let lhs = &t.alpha[a][j] * &t.alpha[b][j];
                    let rhs: CycNumber = (0..r).map(|k| &int(i64::from(ring.coeff(a, b, k))) * &t.alpha[k][j]).sum();
                    ensure(lhs == rhs, || format!("{name}: ({a}, {b}, {j})"))?;
                    triples += 1;
                }
            }
        }
        ensure(t.homomorphism_witness().is_none(), || format!("{name}: library certificate disagrees"))?;
    }
    Ok(format!("{triples} index triples checked exactly"))
}

fn structure_constants() -> Outcome {
    for (name, g) in [("rep_s3", Group::s3()), ("rep_a4", Group::a4())] {
        let t = table(name);
        let c = class_structure_constants(&t).map_err(|e| e.to_string())?;
        ensure(match_with_group(&t, &c, &g).is_some(), || format!("{name}: differs from Z[G] oracle"))?;
    }
    for name in catalog_names() {
        class_structure_constants(&table(name)).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok("Rep(S3), Rep(A4) equal the group-algebra oracle; triple agreement on all rings".into())
}

fn galois_instance() -> Outcome {
    let t = table("rep_a4");
    let alg = class_algebra(&t).map_err(|e| e.to_string())?;
    let rep = galois_report(&t, &alg).map_err(|e| e.to_string())?;
    ensure(rep.elements.len() == 2, || format!("group has {} elements", rep.elements.len()))?;
    let s = &rep.elements[1];
    let three_cycles: Vec<usize> = (0..4).filter(|&j| t.classdims[j] == int(4)).collect();
    let mut expected: Vec<usize> = (0..4).collect();
    expected.swap(three_cycles[0], three_cycles[1]);
    ensure(s.tau == expected, || format!("τ = {:?}", s.tau))?;
    // rows ω and ω² are the nontrivial invertibles
    ensure(s.eta.as_deref() == Some(&[0, 2, 1, 3][..]), || format!("η = {:?}", s.eta))?;
    let bad: Vec<&str> =
        s.identity_checks.iter().filter(|c| c.status != Status::Pass).map(|c| c.name.as_str()).collect();
    ensure(bad.is_empty(), || format!("identity checks not passing: {bad:?}"))?;
    ensure(!rep.group_checks.iter().any(checks::Check::failed), || "group law check failed".into())?;
    Ok(format!("τ = {}, η = (1 2), {} identity checks pass", s.tau_cycles, s.identity_checks.len()))
}

fn zero_entries() -> Outcome {
    let mut rows = 0;
    for name in catalog_names() {
        let t = table(name);
        if !t.is_weakly_integral() {
            continue;
        }
        let z = zero_rows(&t);
        for row in z.rows.iter().filter(|r| !r.invertible) {
            ensure(!row.zeros.is_empty(), || format!("{name}: row {} has no zero", row.row))?;
            let cert =
                row.certificate.as_ref().ok_or_else(|| format!("{name}: row {} lacks a certificate", row.row))?;
            ensure(cert.galois_fixed && cert.p_is_positive_integer, || format!("{name}: P = {}", cert.p))?;
            ensure(cert.amgm_holds, || format!("{name}: AM-GM fails on row {}", row.row))?;
            ensure(row.inequality_holds == Some(true), || format!("{name}: inequality fails on row {}", row.row))?;
            rows += 1;
        }
    }
    let s3 = zero_rows(&table("rep_s3"));
    ensure(s3.rows[2].zero_mass == int(4) && s3.rows[2].d_squared == int(4), || "Rep(S3) not 4 ≥ 4".into())?;
    let a4 = zero_rows(&table("rep_a4"));
    ensure(a4.rows[3].zero_mass == int(9) && a4.rows[3].d_squared == int(9), || "Rep(A4) not 9 ≥ 9".into())?;
    Ok(format!("{rows} non-invertible rows certified; Rep(S3) 4 ≥ 4, Rep(A4) 9 ≥ 9"))
}

fn integrality_boundary() -> Outcome {
    let t = table("ising");
    ensure(t.is_weakly_integral() && !t.is_integral(), || "Ising integrality misclassified".into())?;
    let group = galois_group(&t);
    let s = group.elements.iter().copied().find(|s| !s.is_identity()).ok_or("no nontrivial σ")?;
    let alg = class_algebra(&t).map_err(|e| e.to_string())?;
    let rep = galois_report(&t, &alg).map_err(|e| e.to_string())?;
    let a = rep.elements.iter().find(|a| a.sigma == s).ok_or("σ missing from report")?;
    ensure(!a.tau_fixes_zero, || "τ(0) = 0".into())?;
    match row_permutation(s, &t) {
        RowPermutation::NotAnAlgebraMap { row, .. } => {
            Ok(format!("σ_{}: τ(0) = {}, no row permutation (row {row})", s.residue, a.tau[0]))
        }
        RowPermutation::Permutation { eta, .. } => Err(format!("unexpected row permutation {eta:?}")),
    }
}

fn perfect() -> Outcome {
    let s3 = perfect_identity(&table("rep_s3")).map_err(|e| e.to_string())?;
    ensure(s3.verdict == PerfectVerdict::NotPerfectConsistent, || format!("Rep(S3): {:?}", s3.verdict))?;
    ensure(s3.lhs == vec![int(6), int(0), int(0)], || format!("LHS {:?}", s3.lhs))?;
    ensure(s3.rhs == vec![int(6), int(-6), int(0)], || format!("RHS {:?}", s3.rhs))?;
    let trivial = perfect_identity(&table("trivial")).map_err(|e| e.to_string())?;
    ensure(trivial.verdict == PerfectVerdict::PerfectConsistent, || format!("trivial: {:?}", trivial.verdict))?;
    for name in catalog_names() {
        let p = perfect_identity(&table(name)).map_err(|e| e.to_string())?;
        ensure(p.verdict != PerfectVerdict::Inconsistent, || format!("{name}: inconsistent"))?;
    }
    Ok("Rep(S3) (6,0,0) vs (6,-6,0); trivial perfect; no inconsistent verdicts".into())
}

fn modular() -> Outcome {
    let sqrt2 = CycNumber::from_int_coeffs(8, &[0, 1, 0, -1]).unwrap();
    let neg = -&sqrt2;
    let one = int(1);
    let s = SMatrixSpec {
        rank: 3,
        entries: vec![
            vec![one.clone(), one.clone(), sqrt2.clone()],
            vec![one.clone(), one.clone(), neg.clone()],
            vec![sqrt2, neg, int(0)],
        ],
    };
    let ring = catalog("ising").unwrap();
    let rep = modular_check(&s, Some(&ring), &TableConfig::default()).map_err(|e| e.to_string())?;
    ensure(rep.dim_c == int(4), || format!("dim C = {}", rep.dim_c))?;
    let orth = checks::find(&rep.checks, "s_matrix_orthogonality").ok_or("orthogonality check missing")?;
    ensure(orth.passed(), || format!("{orth:?}"))?;
    ensure(checks::all_pass(&rep.checks), || format!("{:?}", rep.checks))?;
    let pi = rep.column_permutation.ok_or("no column permutation recorded")?;
    let t = table("ising");
    for (j, &pj) in pi.iter().enumerate() {
        let column: Vec<CycNumber> = (0..3).map(|i| t.alpha[i][pj].clone()).collect();
        let derived: Vec<CycNumber> = (0..3).map(|i| rep.alpha[i][j].clone()).collect();
        ensure(column == derived, || format!("column {j} differs"))?;
    }
    Ok(format!("dim C = 4 exactly, column permutation {pi:?}"))
}

fn reconstruction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(RECONSTRUCT_SEED);
    let mut failures = Vec::new();
    for sample in 0..RECONSTRUCT_SAMPLES {
        let n: u32 = rng.gen_range(1..=24);
        let coeffs: Vec<i64> =
            (0..totient(n)).map(|_| rng.gen_range(-RECONSTRUCT_HEIGHT..=RECONSTRUCT_HEIGHT)).collect();
        let x = CycNumber::from_int_coeffs(n, &coeffs).unwrap();
        let z = embed(&x, RECONSTRUCT_BITS);
        match reconstruct(&z, n, RECONSTRUCT_HEIGHT as u64) {
            Ok(y) if y == x => {}
            other => failures.push(format!("sample {sample} (n = {n}): {other:?}")),
        }
    }
    ensure(failures.is_empty(), || format!("{} failures: {}", failures.len(), failures.join("; ")))?;
    Ok(format!("{RECONSTRUCT_SAMPLES} samples, 0 failures"))
}

fn determinism() -> Outcome {
    for name in catalog_names() {
        let input = load_input(&format!("catalog:{name}"), true).map_err(|e| e.to_string())?;
        let a = analyze(&input, &RunConfig::default()).map_err(|e| e.to_string())?.to_json();
        let b = analyze(&input, &RunConfig::default()).map_err(|e| e.to_string())?.to_json();
        ensure(a == b, || format!("{name}: reports differ"))?;
    }
    Ok("byte-identical reports for all 7 rings".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("orthogonality", orthogonality),
        ("homomorphism certificate", certificate),
        ("structure-constant oracle", structure_constants),
        ("Galois conjugation on Rep(A4)", galois_instance),
        ("zero entries and AM-GM certificate", zero_entries),
        ("integrality boundary on Ising", integrality_boundary),
        ("perfect-category identity", perfect),
        ("modular Ising S-matrix", modular),
        ("reconstruction round trip", reconstruction),
        ("report determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {label}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {label}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
