use skewcell::cellcore::{
    composition_factors_bruteforce, dual_simple_check, gram, graded_decomp, jacobson_radical, p0, phi_property_suite, row_graded_dim,
    simple_module, verify_skew_datum, CellAlgebra,
};
use skewcell::exactmath::{Field, FieldDescriptor, LaurentPoly};
use skewcell::gcomb::{derive_params, uglov, Multipartition};
use skewcell::instances::{gen_matrix, gen_toy, klr_fixture, AlgebraFile};
use skewcell::shiftfix::{adjustment, clifford_suite, find_z, fixed_point_datum, verify_shift, ShiftError};

fn klr(desc: FieldDescriptor) -> AlgebraFile {
    klr_fixture("klr-2-2-2").unwrap().base_change(Field::get(desc).unwrap()).unwrap()
}

fn fields() -> [FieldDescriptor; 3] {
    [FieldDescriptor::Rational, FieldDescriptor::Cyclotomic(2), FieldDescriptor::PrimeField(3)]
}

#[test]
fn toy_cells() {
    let t = gen_toy(3, FieldDescriptor::Rational).unwrap();
    let ca = t.cell_algebra().unwrap();
    assert!(phi_property_suite(&ca).all_passed());
    for l in 0..6 {
        let g = gram(&ca, l);
        let want = if l % 3 == 0 { 1 } else { 0 };
        assert_eq!(*g.get(0, 0), ca.field().from_int(want));
    }
    assert_eq!(p0(&ca), vec![0, 3]);
    let simples: Vec<_> = [0, 3].iter().map(|&l| simple_module(&ca, l).unwrap()).collect();
    assert_eq!(jacobson_radical(&ca, &simples).unwrap().len(), 4);
    let dm = graded_decomp(&ca).unwrap();
    for l in 0..6 {
        let col = if l < 3 { 0 } else { 3 };
        assert_eq!(dm.entry(l, col).unwrap(), &LaurentPoly::monomial(1, (l % 3) as i64));
        assert_eq!(row_graded_dim(&dm, &ca, l), LaurentPoly::monomial(1, (l % 3) as i64));
    }
    assert_eq!(composition_factors_bruteforce(&ca).unwrap(), dm);
    assert!(dual_simple_check(&ca, 0) && dual_simple_check(&ca, 3));
}

#[test]
fn injected_c3_fault_has_witness() {
    let mut t = gen_toy(3, FieldDescriptor::Rational).unwrap();
    // x^1 · x^0 now lands in the lower cell (0,0)
    let one = t.alg.field.one();
    t.alg.mult[1][0] = vec![(0, one)];
    let rep = verify_skew_datum(&t.alg, t.datum.as_ref().unwrap());
    assert!(!rep.passed("C3") || !rep.passed("algebra.grading"));
    assert!(rep.failures().iter().all(|c| c.witness.is_some()));
}

#[test]
fn criterion_1_all_instances_verify() {
    for desc in fields() {
        for m in 1..=4 {
            let t = gen_toy(m, desc).unwrap();
            assert!(verify_skew_datum(&t.alg, t.datum.as_ref().unwrap()).all_passed());
        }
        let m4 = gen_matrix(4, &[1, 2, -2, -1], &[2, 1, 4, 3], desc).unwrap();
        assert!(verify_skew_datum(&m4.alg, m4.datum.as_ref().unwrap()).all_passed());
        let m6 = gen_matrix(6, &[1, 1, 1, -1, -1, -1], &[2, 3, 1, 6, 4, 5], desc).unwrap();
        assert!(verify_skew_datum(&m6.alg, m6.datum.as_ref().unwrap()).all_passed());
        let k = klr(desc);
        assert!(verify_skew_datum(&k.alg, k.datum.as_ref().unwrap()).all_passed());
    }
}

fn fixed_ok(file: &AlgebraFile, desc: FieldDescriptor, expect_cellular: bool) {
    let f = Field::get(desc).unwrap();
    let ca = file.cell_algebra().unwrap();
    let sh = file.shift.as_ref().unwrap();
    let s_p = verify_shift(&ca.alg, &ca.datum, sh).s_p;
    let fp = fixed_point_datum(&ca, sh, &f.root_of_unity(s_p as u32).unwrap()).unwrap();
    assert!(verify_skew_datum(&fp.fixed.alg, &fp.fixed.datum).all_passed());
    assert_eq!(fp.cellular, expect_cellular);
    if find_z(&ca.alg, sh, &fp.eps, s_p).is_some() {
        assert_eq!(fp.fixed.alg.dim() * s_p, ca.alg.dim());
    }
}

#[test]
fn criterion_2_fixed_points() {
    for desc in [FieldDescriptor::Rational, FieldDescriptor::Cyclotomic(2), FieldDescriptor::PrimeField(3)] {
        fixed_ok(&gen_toy(3, desc).unwrap(), desc, true);
        fixed_ok(&gen_matrix(4, &[1, 1, -1, -1], &[2, 1, 4, 3], desc).unwrap(), desc, true);
        fixed_ok(&klr(desc), desc, true);
    }
    for desc in [FieldDescriptor::Cyclotomic(3), FieldDescriptor::CyclotomicOverPrime(3, 7)] {
        fixed_ok(&gen_matrix(6, &[1, 1, 1, -1, -1, -1], &[2, 3, 1, 6, 4, 5], desc).unwrap(), desc, false);
    }
    // the degree-changing permutation is caught with a witness
    let bad = gen_matrix(4, &[1, 2, -2, -1], &[2, 1, 4, 3], FieldDescriptor::Rational).unwrap();
    let ca = bad.cell_algebra().unwrap();
    let r = verify_shift(&ca.alg, &ca.datum, bad.shift.as_ref().unwrap());
    assert!(r.report.failures().iter().any(|c| c.name == "shift.degree" && c.witness.is_some()));
    let eps = ca.field().from_int(-1);
    assert!(matches!(fixed_point_datum(&ca, bad.shift.as_ref().unwrap(), &eps), Err(ShiftError::ShiftNotVerified(_))));
    // order 3 needs a cube root of unity and characteristic ≠ 3
    let m6 = gen_matrix(6, &[1, 1, 1, -1, -1, -1], &[2, 3, 1, 6, 4, 5], FieldDescriptor::PrimeField(3)).unwrap();
    let ca = m6.cell_algebra().unwrap();
    let one = ca.field().one();
    assert!(matches!(fixed_point_datum(&ca, m6.shift.as_ref().unwrap(), &one), Err(ShiftError::CharDividesOrder { .. })));
    let m6 = gen_matrix(6, &[1, 1, 1, -1, -1, -1], &[2, 3, 1, 6, 4, 5], FieldDescriptor::Cyclotomic(3)).unwrap();
    let ca = m6.cell_algebra().unwrap();
    assert!(matches!(fixed_point_datum(&ca, m6.shift.as_ref().unwrap(), &ca.field().from_int(-1)), Err(ShiftError::BadRootOrder { .. })));
}

#[test]
fn criterion_3_clifford() {
    let cases = [
        (gen_matrix(4, &[1, 1, -1, -1], &[2, 1, 4, 3], FieldDescriptor::Rational).unwrap(), 2),
        (gen_matrix(6, &[1, 1, 1, -1, -1, -1], &[2, 3, 1, 6, 4, 5], FieldDescriptor::Cyclotomic(3)).unwrap(), 3),
        (klr(FieldDescriptor::Cyclotomic(2)), 2),
        (klr(FieldDescriptor::PrimeField(3)), 2),
    ];
    for (file, s_p) in cases {
        let ca = file.cell_algebra().unwrap();
        let sh = file.shift.as_ref().unwrap();
        let fp = fixed_point_datum(&ca, sh, &ca.field().root_of_unity(s_p).unwrap()).unwrap();
        let r = clifford_suite(&ca, sh, &fp);
        assert!(r.complete_and_passed(), "{}\n{:?}", r.report, r.skipped);
    }
}

#[test]
fn criterion_4_klr_decomposition_matches_oracle() {
    for desc in [FieldDescriptor::Cyclotomic(2), FieldDescriptor::PrimeField(3)] {
        let ca: CellAlgebra = klr(desc).cell_algebra().unwrap();
        let dm = graded_decomp(&ca).unwrap();
        assert!(dm.is_unitriangular(&ca));
        assert_eq!(composition_factors_bruteforce(&ca).unwrap(), dm);
    }
}

#[test]
fn criterion_5_klr_adjustment() {
    let k = klr(FieldDescriptor::Cyclotomic(2));
    let ca = k.cell_algebra().unwrap();
    let adj = adjustment(&ca, k.shift.as_ref().unwrap(), 3).unwrap();
    assert!(adj.report.all_passed(), "{}", adj.report);
}

#[test]
fn criterion_8_uglov() {
    let k = klr(FieldDescriptor::Cyclotomic(2));
    let ca = k.cell_algebra().unwrap();
    let sh = k.shift.as_ref().unwrap();
    let fp = fixed_point_datum(&ca, sh, &ca.field().root_of_unity(2).unwrap()).unwrap();
    let h = derive_params(2, 2, 2, &[0], true).unwrap();
    let ug: Vec<String> = uglov(2, &h).unwrap().iter().map(Multipartition::to_string).collect();
    for (e, &(oi, _)) in fp.elements.iter().enumerate() {
        let lam = &ca.datum.elements[fp.orbits[oi].lambda];
        let nonzero = !gram(&fp.fixed, e).is_zero();
        assert_eq!(nonzero, ug.contains(lam), "{lam}");
    }
}
