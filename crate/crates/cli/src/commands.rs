use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use skewcell::cellcore::{graded_decomp, phi_property_suite, verify_skew_datum, CellAlgebra, Report};
use skewcell::exactmath::{Field, FieldDescriptor};
use skewcell::gcomb::{derive_params, dominates, enumerate_partitions, enumerate_std, tableau_degree, uglov, HeckeParams, Multipartition};
use skewcell::instances::{from_spec, klr_fixture, skeleton_for_hecke, AlgebraFile, InstanceError, FIXTURES};
use skewcell::shiftfix::{adjustment, clifford_suite, fixed_point_datum, verify_shift, FixedPointResult, ShiftAutomorphism};

use crate::{Command, Format, Hecke, Instance, Output};

enum Failure {
    /// Bad flags, unreadable input: exit 2.
    Usage(String),
    /// A check or a computation failed: exit 1.
    Failed(String),
}

type Res<T> = Result<T, Failure>;

/// What a command produces: the main artifact for stdout, files for --out and
/// a human summary for stderr.
struct Outcome {
    stdout: String,
    files: Vec<(String, String)>,
    summary: String,
    passed: bool,
}

impl Outcome {
    fn single(name: &str, body: String, summary: String, passed: bool) -> Self {
        Outcome { stdout: body.clone(), files: vec![(name.to_string(), body)], summary, passed }
    }
}

/// Configures the global pool from SKEWCELL_THREADS: 0 means sequential.
pub fn init_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("SKEWCELL_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("SKEWCELL_THREADS must be a number, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global().map_err(|e| e.to_string())
}

pub fn run(cmd: Command) -> u8 {
    let out_dir = match &cmd {
        Command::Verify { out, .. }
        | Command::Decomp { out, .. }
        | Command::Fixedpoint { out, .. }
        | Command::Clifford { out, .. }
        | Command::Adjust { out, .. }
        | Command::Uglov { out, .. }
        | Command::Dominance { out, .. }
        | Command::Tableaux { out, .. }
        | Command::Skeleton { out, .. } => out.out.clone(),
    };
    let res = match cmd {
        Command::Verify { inst, out } => verify(&inst, &out),
        Command::Decomp { inst, out } => decomp(&inst, &out),
        Command::Fixedpoint { inst, out } => fixedpoint(&inst, &out),
        Command::Clifford { inst, out } => clifford(&inst, &out),
        Command::Adjust { inst, out, char_c } => adjust(&inst, &out, char_c),
        Command::Uglov { hecke, out } => uglov_cmd(&hecke, &out),
        Command::Dominance { hecke, out } => dominance(&hecke, &out),
        Command::Tableaux { hecke, shape, out } => tableaux(&hecke, &shape, &out),
        Command::Skeleton { hecke, out } => skeleton(&hecke, &out),
    };
    match res {
        Ok(o) => {
            if let Some(dir) = out_dir {
                if let Err(e) = write_files(&dir, &o.files) {
                    eprintln!("error: {e}");
                    return 2;
                }
            }
            print!("{}", o.stdout);
            eprint!("{}", o.summary);
            if o.passed {
                0
            } else {
                eprintln!("verification failed");
                1
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Failed(m)) => {
            eprintln!("verification failed: {m}");
            1
        }
    }
}

fn write_files(dir: &Path, files: &[(String, String)]) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    for (name, body) in files {
        let p = dir.join(name);
        fs::write(&p, body).map_err(|e| format!("{}: {e}", p.display()))?;
    }
    Ok(())
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn field_of(s: &str) -> Res<FieldDescriptor> {
    s.parse::<FieldDescriptor>().map_err(|e| Failure::Usage(format!("--field {s:?}: {e}")))
}

fn instance_error(e: InstanceError) -> Failure {
    match e {
        InstanceError::Verify { .. } => Failure::Failed(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

/// A missing file whose stem names a builtin fixture loads the fixture.
fn load_file(path: &PathBuf) -> Res<AlgebraFile> {
    if !path.exists() {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
        if path.extension().is_some_and(|e| e == "json") && FIXTURES.contains(&stem) {
            eprintln!("note: {} not found, using the builtin fixture {stem}", path.display());
            return klr_fixture(stem).map_err(instance_error);
        }
    }
    AlgebraFile::load(path).map_err(instance_error)
}

fn load(inst: &Instance) -> Res<AlgebraFile> {
    match (&inst.gen, &inst.file) {
        (Some(spec), _) => {
            let Some(f) = &inst.field else {
                return Err(Failure::Usage("--field is required with --gen".into()));
            };
            from_spec(spec, field_of(f)?).map_err(instance_error)
        }
        (None, Some(path)) => {
            let file = load_file(path)?;
            match &inst.field {
                None => Ok(file),
                Some(f) => {
                    let field = Field::get(field_of(f)?).map_err(|e| Failure::Usage(e.to_string()))?;
                    file.base_change(field).map_err(|e| Failure::Usage(format!("cannot change field: {e}")))
                }
            }
        }
        (None, None) => Err(Failure::Usage("one of --gen or --file is required".into())),
    }
}

fn cell_algebra(file: &AlgebraFile) -> Res<CellAlgebra> {
    if file.datum.is_none() {
        return Err(Failure::Usage("the instance has no cell datum".into()));
    }
    file.cell_algebra().map_err(|e| Failure::Failed(e.to_string()))
}

fn shift_of(file: &AlgebraFile) -> Res<&ShiftAutomorphism> {
    file.shift.as_ref().ok_or_else(|| Failure::Usage("the instance has no shift automorphism".into()))
}

fn json_only(out: &Output, cmd: &str) -> Res<()> {
    match out.format {
        Format::Json => Ok(()),
        Format::Csv => Err(Failure::Usage(format!("{cmd} has no CSV output"))),
    }
}

fn failure_summary(rep: &Report) -> String {
    let n = rep.checks.len();
    let bad = rep.failures().len();
    let mut s = format!("{} of {n} checks passed\n", n - bad);
    for c in rep.failures() {
        s.push_str(&format!("FAIL {}: {}\n", c.name, c.witness.clone().unwrap_or_default()));
    }
    s
}

fn verify(inst: &Instance, out: &Output) -> Res<Outcome> {
    json_only(out, "verify")?;
    let file = load(inst)?;
    let mut rep = match &file.datum {
        Some(d) => verify_skew_datum(&file.alg, d),
        None => file.alg.structure_report(),
    };
    let mut s_p = None;
    if let (Some(d), Some(sh)) = (&file.datum, &file.shift) {
        let sr = verify_shift(&file.alg, d, sh);
        s_p = Some(sr.s_p);
        rep.extend(sr.report);
    }
    if rep.all_passed() && file.datum.is_some() {
        rep.extend(phi_property_suite(&cell_algebra(&file)?));
    }
    let passed = rep.all_passed();
    let body = pretty(&json!({
        "field": file.alg.field.descriptor().to_string(),
        "dim": file.alg.dim(),
        "s_p": s_p,
        "passed": passed,
        "checks": rep.checks,
    }));
    Ok(Outcome::single("verify.json", body, failure_summary(&rep), passed))
}

fn decomp(inst: &Instance, out: &Output) -> Res<Outcome> {
    let ca = cell_algebra(&load(inst)?)?;
    let dm = graded_decomp(&ca).map_err(|e| Failure::Failed(e.to_string()))?;
    let unitri = dm.is_unitriangular(&ca);
    let summary = format!("{} rows, {} columns, unitriangular: {unitri}\n", dm.rows.len(), dm.cols.len());
    Ok(match out.format {
        Format::Csv => Outcome::single("decomp.csv", dm.to_csv(), summary, unitri),
        Format::Json => Outcome::single("decomp.json", pretty(&dm), summary, unitri),
    })
}

fn fixed_point(file: &AlgebraFile) -> Res<(CellAlgebra, FixedPointResult)> {
    let ca = cell_algebra(file)?;
    let sh = shift_of(file)?;
    let s_p = verify_shift(&ca.alg, &ca.datum, sh).s_p.max(1);
    let eps = ca.field().root_of_unity(s_p as u32).map_err(|e| Failure::Failed(e.to_string()))?;
    let fp = fixed_point_datum(&ca, sh, &eps).map_err(|e| Failure::Failed(e.to_string()))?;
    Ok((ca, fp))
}

fn fixedpoint(inst: &Instance, out: &Output) -> Res<Outcome> {
    json_only(out, "fixedpoint")?;
    let file = load(inst)?;
    let (ca, fp) = fixed_point(&file)?;
    let rep = verify_skew_datum(&fp.fixed.alg, &fp.fixed.datum);
    let fixed = AlgebraFile {
        alg: fp.fixed.alg.clone(),
        datum: Some(fp.fixed.datum.clone()),
        shift: None,
        embedding: Some(fp.embedding.clone()),
    };
    let orbits: Vec<_> = fp
        .orbits
        .iter()
        .map(|o| {
            json!({
                "lambda": ca.datum.elements[o.lambda],
                "orbit": o.orbit.iter().map(|&l| ca.datum.elements[l].clone()).collect::<Vec<_>>(),
                "o": o.o,
                "p": o.p,
                "tilde_o": o.tilde_o,
            })
        })
        .collect();
    let report = pretty(&json!({
        "s_p": fp.s_p,
        "dim": fp.fixed.alg.dim(),
        "ambient_dim": ca.alg.dim(),
        "cellular": fp.cellular,
        "elements": fp.fixed.datum.elements,
        "orbits": orbits,
        "checks": rep.checks,
    }));
    let passed = rep.all_passed();
    let summary = format!(
        "s_p = {}, dim {} of {}, {} cells, cellular: {}\n{}",
        fp.s_p,
        fp.fixed.alg.dim(),
        ca.alg.dim(),
        fp.fixed.datum.elements.len(),
        fp.cellular,
        failure_summary(&rep)
    );
    let body = fixed.to_json();
    Ok(Outcome { stdout: body.clone(), files: vec![("fixed.json".into(), body), ("fixedpoint.json".into(), report)], summary, passed })
}

fn clifford(inst: &Instance, out: &Output) -> Res<Outcome> {
    json_only(out, "clifford")?;
    let file = load(inst)?;
    let (ca, fp) = fixed_point(&file)?;
    let r = clifford_suite(&ca, shift_of(&file)?, &fp);
    let mut summary = failure_summary(&r.report);
    for s in &r.skipped {
        summary.push_str(&format!("skipped {s}\n"));
    }
    let passed = r.report.all_passed();
    Ok(Outcome::single("clifford.json", pretty(&r), summary, passed))
}

fn adjust(inst: &Instance, out: &Output, c: u64) -> Res<Outcome> {
    let file = load(inst)?;
    let ca = cell_algebra(&file)?;
    let adj = adjustment(&ca, shift_of(&file)?, c).map_err(|e| Failure::Failed(e.to_string()))?;
    let passed = adj.report.all_passed();
    let summary = format!(
        "D_Q {}x{}, D_F {}x{}, A_F {}x{}\n{}",
        adj.d_q.rows.len(),
        adj.d_q.cols.len(),
        adj.d_f.rows.len(),
        adj.d_f.cols.len(),
        adj.rows.len(),
        adj.cols.len(),
        failure_summary(&adj.report)
    );
    Ok(match out.format {
        Format::Csv => {
            let (q, f, a) = (adj.d_q.to_csv(), adj.d_f.to_csv(), adj.to_csv());
            let stdout = format!("# D_Q\n{q}\n# D_F\n{f}\n# A_F\n{a}");
            let files = vec![("d_q.csv".into(), q), ("d_f.csv".into(), f), ("a_f.csv".into(), a)];
            Outcome { stdout, files, summary, passed }
        }
        Format::Json => Outcome::single("adjust.json", pretty(&adj), summary, passed),
    })
}

fn params(h: &Hecke) -> Res<HeckeParams> {
    derive_params(h.e, h.p, h.n, &h.rho, h.strict).map_err(|e| Failure::Usage(e.to_string()))
}

fn uglov_cmd(h: &Hecke, out: &Output) -> Res<Outcome> {
    let hp = params(h)?;
    let list: Vec<String> = uglov(h.n, &hp).map_err(|e| Failure::Failed(e.to_string()))?.iter().map(Multipartition::to_string).collect();
    let summary = format!("{} Uglov multipartitions of {}\n", list.len(), h.n);
    Ok(match out.format {
        Format::Csv => {
            let body: String = std::iter::once("lambda".to_string()).chain(list.iter().map(|l| format!("\"{l}\""))).map(|l| l + "\n").collect();
            Outcome::single("uglov.csv", body, summary, true)
        }
        Format::Json => Outcome::single("uglov.json", pretty(&list), summary, true),
    })
}

fn dominance(h: &Hecke, out: &Output) -> Res<Outcome> {
    let hp = params(h)?;
    let parts = enumerate_partitions(h.n, hp.ell);
    let above: Vec<Vec<bool>> = parts
        .par_iter()
        .map(|l| parts.iter().map(|m| l != m && dominates(l, m, &hp).unwrap_or(false)).collect())
        .collect();
    let names: Vec<String> = parts.iter().map(Multipartition::to_string).collect();
    let summary = format!("{} multipartitions of {}\n", names.len(), h.n);
    Ok(match out.format {
        Format::Csv => {
            let mut body = String::from("lambda");
            for n in &names {
                body.push_str(&format!(",\"{n}\""));
            }
            body.push('\n');
            for (n, row) in names.iter().zip(&above) {
                body.push_str(&format!("\"{n}\""));
                for &b in row {
                    body.push_str(if b { ",1" } else { ",0" });
                }
                body.push('\n');
            }
            Outcome::single("dominance.csv", body, summary, true)
        }
        Format::Json => Outcome::single("dominance.json", pretty(&json!({ "elements": names, "above": above })), summary, true),
    })
}

fn tableaux(h: &Hecke, shape: &str, out: &Output) -> Res<Outcome> {
    let hp = params(h)?;
    let lam: Multipartition = shape.parse().map_err(|e: skewcell::gcomb::CombError| Failure::Usage(e.to_string()))?;
    if lam.ell() != hp.ell || lam.size() != h.n {
        return Err(Failure::Usage(format!("shape {lam} is not an {}-multipartition of {}", hp.ell, h.n)));
    }
    let rows: Vec<(String, i64, String)> = enumerate_std(&lam)
        .par_iter()
        .map(|t| {
            let res: Vec<String> = t.residue_sequence(&hp).iter().map(ToString::to_string).collect();
            (t.to_string(), tableau_degree(t, &hp), res.join(" "))
        })
        .collect();
    let summary = format!("{} standard tableaux of shape {lam}\n", rows.len());
    Ok(match out.format {
        Format::Csv => {
            let mut body = String::from("tableau,degree,residues\n");
            for (t, d, r) in &rows {
                body.push_str(&format!("\"{t}\",{d},\"{r}\"\n"));
            }
            Outcome::single("tableaux.csv", body, summary, true)
        }
        Format::Json => {
            let v: Vec<_> = rows.iter().map(|(t, d, r)| json!({ "tableau": t, "degree": d, "residues": r })).collect();
            Outcome::single("tableaux.json", pretty(&v), summary, true)
        }
    })
}

fn skeleton(h: &Hecke, out: &Output) -> Res<Outcome> {
    json_only(out, "skeleton")?;
    let sk = skeleton_for_hecke(h.n, &params(h)?);
    let summary = format!("{} elements\n", sk.elements.len());
    Ok(Outcome::single("skeleton.json", pretty(&sk), summary, true))
}
