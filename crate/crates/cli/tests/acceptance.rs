//! One line per acceptance criterion. Exits nonzero if any fails.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use skewcell::cellcore::{composition_factors_bruteforce, gram, graded_decomp, verify_skew_datum};
use skewcell::exactmath::{Field, FieldDescriptor, LaurentPoly};
use skewcell::gcomb::{brute_force_dominates, derive_params, dominates, enumerate_partitions, lemma_sweep, minimal_strict_charge, uglov, Multipartition};
use skewcell::instances::{gen_matrix, gen_toy, klr_fixture, AlgebraFile};
use skewcell::shiftfix::{adjustment, clifford_suite, find_z, fixed_point_datum, verify_shift, ShiftError};

type Outcome = Result<String, String>;

const GRID: [(i64, i64, usize); 5] = [(2, 2, 1), (3, 2, 1), (2, 2, 2), (3, 3, 1), (4, 2, 1)];
const D4: [i64; 4] = [1, 2, -2, -1];
const D4_GRADED: [i64; 4] = [1, 1, -1, -1];
const W4: [usize; 4] = [2, 1, 4, 3];
const D6: [i64; 6] = [1, 1, 1, -1, -1, -1];
const W6: [usize; 6] = [2, 3, 1, 6, 4, 5];

fn fields() -> [FieldDescriptor; 3] {
    [FieldDescriptor::Rational, FieldDescriptor::Cyclotomic(2), FieldDescriptor::PrimeField(3)]
}

fn klr(desc: FieldDescriptor) -> Result<AlgebraFile, String> {
    let f = Field::get(desc).map_err(|e| e.to_string())?;
    klr_fixture("klr-2-2-2").map_err(|e| e.to_string())?.base_change(f).map_err(|e| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let mut n = 0;
    for desc in fields() {
        let mut insts = Vec::new();
        for m in 1..=4 {
            insts.push((format!("toy:{m}"), gen_toy(m, desc).map_err(|e| e.to_string())?));
        }
        insts.push(("matrix4".into(), gen_matrix(4, &D4, &W4, desc).map_err(|e| e.to_string())?));
        insts.push(("matrix6".into(), gen_matrix(6, &D6, &W6, desc).map_err(|e| e.to_string())?));
        insts.push(("klr-2-2-2".into(), klr(desc)?));
        for (name, f) in insts {
            let rep = verify_skew_datum(&f.alg, f.datum.as_ref().ok_or("missing datum")?);
            ensure(rep.all_passed(), || format!("{name} over {desc}: {rep}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} instance/field pairs verified"))
}

fn fixed_ok(name: &str, file: &AlgebraFile, expect_cellular: bool) -> Result<bool, String> {
    let ca = file.cell_algebra().map_err(|e| e.to_string())?;
    let f = ca.field();
    let sh = file.shift.as_ref().ok_or("missing shift")?;
    let s_p = verify_shift(&ca.alg, &ca.datum, sh).s_p;
    let eps = f.root_of_unity(s_p as u32).map_err(|e| e.to_string())?;
    let fp = fixed_point_datum(&ca, sh, &eps).map_err(|e| format!("{name} over {}: {e}", f.descriptor()))?;
    let rep = verify_skew_datum(&fp.fixed.alg, &fp.fixed.datum);
    ensure(rep.all_passed(), || format!("{name}: fixed datum fails\n{rep}"))?;
    ensure(fp.cellular == expect_cellular, || format!("{name}: cellular flag {}", fp.cellular))?;
    let z = find_z(&ca.alg, sh, &fp.eps, s_p).is_some();
    if z {
        ensure(fp.fixed.alg.dim() * s_p == ca.alg.dim(), || format!("{name}: dim {} vs {}", fp.fixed.alg.dim(), ca.alg.dim()))?;
    }
    Ok(z)
}

fn criterion_2() -> Outcome {
    let mut runs = 0;
    let mut free = 0;
    for desc in fields() {
        let cases = [
            ("toy:3", gen_toy(3, desc).map_err(|e| e.to_string())?),
            ("matrix4", gen_matrix(4, &D4_GRADED, &W4, desc).map_err(|e| e.to_string())?),
            ("klr", klr(desc)?),
        ];
        for (name, f) in &cases {
            free += fixed_ok(name, f, true)? as usize;
            runs += 1;
        }
    }
    for desc in [FieldDescriptor::Cyclotomic(3), FieldDescriptor::CyclotomicOverPrime(3, 7)] {
        let m6 = gen_matrix(6, &D6, &W6, desc).map_err(|e| e.to_string())?;
        free += fixed_ok("matrix6", &m6, false)? as usize;
        runs += 1;
    }
    // the permutation (1 2)(3 4) does not preserve the grading d = (1,2,−2,−1)
    let bad = gen_matrix(4, &D4, &W4, FieldDescriptor::Rational).map_err(|e| e.to_string())?;
    let ca = bad.cell_algebra().map_err(|e| e.to_string())?;
    let sh = bad.shift.as_ref().ok_or("missing shift")?;
    let r = verify_shift(&ca.alg, &ca.datum, sh);
    ensure(r.report.failures().iter().any(|c| c.name == "shift.degree" && c.witness.is_some()), || "degree defect not reported".into())?;
    let rejected = matches!(fixed_point_datum(&ca, sh, &ca.field().from_int(-1)), Err(ShiftError::ShiftNotVerified(_)));
    ensure(rejected, || "ungraded shift accepted".into())?;
    Ok(format!(
        "{runs} fixed points re-verified, {free} with z and dim A/p; matrix4 shift uses d=(1,1,-1,-1) since d=(1,2,-2,-1) is rejected with a shift.degree witness; matrix6 runs over cyclotomic:3 and fpc:3,7"
    ))
}

fn criterion_3() -> Outcome {
    let cases = [
        ("matrix4", gen_matrix(4, &D4_GRADED, &W4, FieldDescriptor::Rational).map_err(|e| e.to_string())?),
        ("matrix6", gen_matrix(6, &D6, &W6, FieldDescriptor::Cyclotomic(3)).map_err(|e| e.to_string())?),
        ("klr/cyclotomic:2", klr(FieldDescriptor::Cyclotomic(2))?),
        ("klr/fp:3", klr(FieldDescriptor::PrimeField(3))?),
    ];
    let mut checks = 0;
    for (name, file) in &cases {
        let ca = file.cell_algebra().map_err(|e| e.to_string())?;
        let sh = file.shift.as_ref().ok_or("missing shift")?;
        let s_p = verify_shift(&ca.alg, &ca.datum, sh).s_p;
        let eps = ca.field().root_of_unity(s_p as u32).map_err(|e| e.to_string())?;
        let fp = fixed_point_datum(&ca, sh, &eps).map_err(|e| e.to_string())?;
        let r = clifford_suite(&ca, sh, &fp);
        ensure(r.complete_and_passed(), || format!("{name}: skipped {:?}\n{}", r.skipped, r.report))?;
        checks += r.report.checks.len();
    }
    Ok(format!("{checks} checks on {} instances, none skipped", cases.len()))
}

fn criterion_4() -> Outcome {
    let toy = gen_toy(3, FieldDescriptor::Rational).map_err(|e| e.to_string())?.cell_algebra().map_err(|e| e.to_string())?;
    let dm = graded_decomp(&toy).map_err(|e| e.to_string())?;
    ensure(dm.is_unitriangular(&toy), || "toy not unitriangular".into())?;
    for l in 0..6 {
        let want = LaurentPoly::monomial(1, (l % 3) as i64);
        ensure(dm.entry(l, l - l % 3) == Some(&want), || format!("toy entry at {l}"))?;
    }
    ensure(composition_factors_bruteforce(&toy).map_err(|e| e.to_string())? == dm, || "toy differs from oracle".into())?;
    for desc in [FieldDescriptor::Cyclotomic(2), FieldDescriptor::PrimeField(3)] {
        let ca = klr(desc)?.cell_algebra().map_err(|e| e.to_string())?;
        ensure(ca.alg.dim() == 8, || format!("klr dim {}", ca.alg.dim()))?;
        let dm = graded_decomp(&ca).map_err(|e| e.to_string())?;
        ensure(dm.is_unitriangular(&ca), || format!("klr over {desc} not unitriangular"))?;
        ensure(composition_factors_bruteforce(&ca).map_err(|e| e.to_string())? == dm, || format!("klr over {desc} differs from oracle"))?;
    }
    Ok("toy:3 and klr over cyclotomic:2, fp:3 equal the oracle, all unitriangular".into())
}

fn criterion_5() -> Outcome {
    let k = klr(FieldDescriptor::Cyclotomic(2))?;
    let ca = k.cell_algebra().map_err(|e| e.to_string())?;
    let adj = adjustment(&ca, k.shift.as_ref().ok_or("missing shift")?, 3).map_err(|e| e.to_string())?;
    for name in ["adjust.equation", "adjust.diagonal", "adjust.triangular", "adjust.nonnegative", "adjust.bar_symmetric"] {
        ensure(adj.report.passed(name), || format!("{name} failed\n{}", adj.report))?;
    }
    ensure(adj.report.all_passed(), || adj.report.to_string())?;
    Ok(format!("A_F is {}x{}, D_F = D_Q A_F exactly", adj.rows.len(), adj.cols.len()))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for &(e, p, d) in &GRID {
        for n in 1..=3 {
            let h = derive_params(e, p, n, &minimal_strict_charge(e, d, n), true).map_err(|e| e.to_string())?;
            for r in lemma_sweep(&h) {
                ensure(r.passed(), || format!("e={e} p={p} d={d} n={n}: {} {:?}", r.name, r.failures))?;
                checked += r.checked;
            }
        }
    }
    Ok(format!("{checked} instances checked, 0 counterexamples"))
}

fn criterion_7() -> Outcome {
    let mut pairs = 0;
    for &(e, p, d) in &GRID {
        for n in 1..=3 {
            let h = derive_params(e, p, n, &minimal_strict_charge(e, d, n), true).map_err(|e| e.to_string())?;
            let parts = enumerate_partitions(n, h.ell);
            for a in &parts {
                for b in &parts {
                    let fast = dominates(a, b, &h).map_err(|e| e.to_string())?;
                    ensure(fast == brute_force_dominates(a, b, &h), || format!("e={e} p={p} d={d}: {a} vs {b}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs agree"))
}

fn criterion_8() -> Outcome {
    let k = klr(FieldDescriptor::Cyclotomic(2))?;
    let ca = k.cell_algebra().map_err(|e| e.to_string())?;
    let sh = k.shift.as_ref().ok_or("missing shift")?;
    let eps = ca.field().root_of_unity(2).map_err(|e| e.to_string())?;
    let fp = fixed_point_datum(&ca, sh, &eps).map_err(|e| e.to_string())?;
    let h = derive_params(2, 2, 2, &[0], true).map_err(|e| e.to_string())?;
    let ug: Vec<String> = uglov(2, &h).map_err(|e| e.to_string())?.iter().map(Multipartition::to_string).collect();
    let mut nonzero = Vec::new();
    let mut expected = Vec::new();
    for (e, &(oi, k)) in fp.elements.iter().enumerate() {
        let lam = &ca.datum.elements[fp.orbits[oi].lambda];
        if !gram(&fp.fixed, e).is_zero() {
            nonzero.push(format!("({lam},{k})"));
        }
        if ug.contains(lam) {
            expected.push(format!("({lam},{k})"));
        }
    }
    ensure(nonzero == expected, || format!("G nonzero at {nonzero:?}, Uglov gives {expected:?}"))?;
    Ok(format!("nonzero forms at {}", nonzero.join(" ")))
}

/// The command lines behind the artifacts of criteria 1 to 8.
fn artifact_commands() -> Vec<Vec<String>> {
    let mut cmds: Vec<String> = Vec::new();
    let m4 = "matrix:4:1,2,-2,-1:2,1,4,3";
    let m4g = "matrix:4:1,1,-1,-1:2,1,4,3";
    let m6 = "matrix:6:1,1,1,-1,-1,-1:2,3,1,6,4,5";
    for f in ["rational", "cyclotomic:2", "fp:3"] {
        for g in ["toy:1", "toy:2", "toy:3", "toy:4", m4, m6, "klr-2-2-2"] {
            cmds.push(format!("verify --gen {g} --field {f}"));
        }
        for g in ["toy:3", m4g, "klr-2-2-2"] {
            cmds.push(format!("fixedpoint --gen {g} --field {f}"));
        }
    }
    for f in ["cyclotomic:3", "fpc:3,7"] {
        cmds.push(format!("fixedpoint --gen {m6} --field {f}"));
    }
    cmds.push(format!("clifford --gen {m4g} --field rational"));
    cmds.push(format!("clifford --gen {m6} --field cyclotomic:3"));
    cmds.push("clifford --gen klr-2-2-2 --field cyclotomic:2".into());
    cmds.push("clifford --gen klr-2-2-2 --field fp:3".into());
    cmds.push("decomp --gen toy:3 --field rational --format csv".into());
    cmds.push("decomp --gen klr-2-2-2 --field cyclotomic:2 --format csv".into());
    cmds.push("decomp --gen klr-2-2-2 --field fp:3".into());
    cmds.push("adjust --gen klr-2-2-2 --field cyclotomic:2 --char 3 --format csv".into());
    cmds.push("adjust --gen klr-2-2-2 --field cyclotomic:2 --char 3".into());
    for &(e, p, d) in &GRID {
        for n in 1..=3usize {
            let rho: Vec<String> = minimal_strict_charge(e, d, n).iter().map(i64::to_string).collect();
            let h = format!("--e {e} --p {p} --n {n} --rho {} --strict", rho.join(","));
            cmds.push(format!("dominance {h}"));
            cmds.push(format!("skeleton {h}"));
            cmds.push(format!("uglov {h}"));
        }
    }
    cmds.push("tableaux --e 2 --p 2 --n 2 --rho 0 --strict --shape (1|1) --format csv".into());
    cmds.into_iter().map(|c| c.split(' ').map(String::from).collect()).collect()
}

/// stdout, exit code and every file written under --out.
fn run_cli(args: &[String], threads: &str, dir: &Path) -> Result<(Vec<u8>, i32, BTreeMap<String, Vec<u8>>), String> {
    if dir.exists() {
        fs::remove_dir_all(dir).map_err(|e| e.to_string())?;
    }
    let out = Command::new(env!("CARGO_BIN_EXE_skewcell"))
        .args(args)
        .arg("--out")
        .arg(dir)
        .env("SKEWCELL_THREADS", threads)
        .output()
        .map_err(|e| e.to_string())?;
    let mut files = BTreeMap::new();
    if dir.exists() {
        for entry in fs::read_dir(dir).map_err(|e| e.to_string())? {
            let p = entry.map_err(|e| e.to_string())?.path();
            let name = p.file_name().and_then(|s| s.to_str()).unwrap_or_default().to_string();
            files.insert(name, fs::read(&p).map_err(|e| e.to_string())?);
        }
    }
    Ok((out.stdout, out.status.code().unwrap_or(-1), files))
}

fn criterion_9() -> Outcome {
    let base = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    let cmds = artifact_commands();
    let mut bytes = 0;
    for args in &cmds {
        let line = args.join(" ");
        let mut first = None;
        for (i, threads) in ["0", "4", "0", "4"].iter().enumerate() {
            let run = run_cli(args, threads, &base.join(format!("run{i}")))?;
            ensure(run.0.len() > 0 && !run.2.is_empty(), || format!("{line}: no output"))?;
            match &first {
                None => {
                    bytes += run.0.len() + run.2.values().map(Vec::len).sum::<usize>();
                    first = Some(run);
                }
                Some(f) => ensure(*f == run, || format!("{line}: run {i} with SKEWCELL_THREADS={threads} differs"))?,
            }
        }
    }
    Ok(format!("{} command lines, 4 runs each over SKEWCELL_THREADS 0 and 4, {bytes} bytes identical", cmds.len()))
}

fn main() {
    let criteria: [(usize, fn() -> Outcome, Duration); 9] = [
        (1, criterion_1, Duration::from_secs(10)),
        (2, criterion_2, Duration::from_secs(30)),
        (3, criterion_3, Duration::from_secs(60)),
        (4, criterion_4, Duration::from_secs(30)),
        (5, criterion_5, Duration::from_secs(30)),
        (6, criterion_6, Duration::from_secs(300)),
        (7, criterion_7, Duration::from_secs(300)),
        (8, criterion_8, Duration::from_secs(30)),
        (9, criterion_9, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (n, f, limit) in criteria {
        let start = Instant::now();
        let res = f();
        let t = start.elapsed();
        let res = res.and_then(|msg| if t <= limit { Ok(msg) } else { Err(format!("{msg}; over the {}s limit", limit.as_secs())) });
        match res {
            Ok(msg) => println!("criterion {n}: PASS ({msg}; {:.1}s)", t.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: FAIL ({msg}; {:.1}s)", t.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
