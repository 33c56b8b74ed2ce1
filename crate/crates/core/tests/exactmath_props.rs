use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use skewcell::exactmath::{reduce_pi, Field, FieldDescriptor, LaurentPoly, Matrix, Scalar};

const DESCRIPTORS: [FieldDescriptor; 7] = [
    FieldDescriptor::Rational,
    FieldDescriptor::Cyclotomic(2),
    FieldDescriptor::Cyclotomic(5),
    FieldDescriptor::Cyclotomic(12),
    FieldDescriptor::PrimeField(3),
    FieldDescriptor::CyclotomicOverPrime(4, 3),
    FieldDescriptor::CyclotomicOverPrime(5, 2),
];

fn scalar_from(field: &'static Field, coeffs: &[(i64, i64)]) -> Scalar {
    let eps = field.primitive_root().ok();
    let mut acc = field.zero();
    let mut power = field.one();
    for &(n, d) in coeffs {
        let q = BigRational::new(BigInt::from(n), BigInt::from(d));
        let c = match field.from_rational(&q) {
            Ok(c) => c,
            Err(_) => field.from_int(n),
        };
        acc = &acc + &(&c * &power);
        match &eps {
            Some(e) => power = &power * e,
            None => break,
        }
    }
    acc
}

fn coeff_strategy() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..10, 1i64..6), 1..6)
}

proptest! {
    #[test]
    fn field_axioms(idx in 0usize..DESCRIPTORS.len(), a in coeff_strategy(), b in coeff_strategy(), c in coeff_strategy()) {
        let f = Field::get(DESCRIPTORS[idx]).unwrap();
        let (a, b, c) = (scalar_from(f, &a), scalar_from(f, &b), scalar_from(f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), f.one());
        }
        prop_assert_eq!(f.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn reduction_is_a_ring_map(p in prop::sample::select(vec![2u32, 3, 4, 5, 6]), a in coeff_strategy(), b in coeff_strategy()) {
        let c = 7u64;
        let f = Field::get(FieldDescriptor::Cyclotomic(p)).unwrap();
        let (a, b) = (scalar_from(f, &a), scalar_from(f, &b));
        let (ra, rb) = (reduce_pi(&a, c).unwrap(), reduce_pi(&b, c).unwrap());
        prop_assert_eq!(reduce_pi(&(&a * &b), c).unwrap(), &ra * &rb);
        prop_assert_eq!(reduce_pi(&(&a + &b), c).unwrap(), &ra + &rb);
    }

    #[test]
    fn linear_algebra_consistency(idx in 0usize..DESCRIPTORS.len(), rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(coeff_strategy(), 25)) {
        let f = Field::get(DESCRIPTORS[idx]).unwrap();
        let entries: Vec<Vec<Scalar>> = (0..rows)
            .map(|i| (0..cols).map(|j| scalar_from(f, &seed[i * 5 + j][..1])).collect())
            .collect();
        let m = Matrix::from_rows(f, entries).unwrap();
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len() + m.rank(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        let x: Vec<Scalar> = (0..cols).map(|j| scalar_from(f, &seed[20 + j % 5])).collect();
        let b = m.mul_vec(&x);
        let sol = m.solve_vec(&b).unwrap();
        prop_assert_eq!(m.mul_vec(&sol), b);
    }

    #[test]
    fn laurent_bar_is_multiplicative(a in prop::collection::vec((-5i64..6, -4i64..5), 0..5), b in prop::collection::vec((-5i64..6, -4i64..5), 0..5)) {
        let mk = |v: &[(i64, i64)]| v.iter().fold(LaurentPoly::zero(), |acc, &(c, k)| acc.add(&LaurentPoly::monomial(c, k)));
        let (f, g) = (mk(&a), mk(&b));
        prop_assert_eq!(f.mul(&g).bar(), f.bar().mul(&g.bar()));
        prop_assert_eq!(f.bar().bar(), f.clone());
        prop_assert_eq!(f.to_string().parse::<LaurentPoly>().unwrap(), f);
    }
}

#[test]
fn primitive_roots_have_exact_order() {
    for d in DESCRIPTORS {
        let f = Field::get(d).unwrap();
        let Some(p) = d.root_order() else { continue };
        let e = f.primitive_root().unwrap();
        assert_eq!(e.pow(p as i64), f.one(), "{d}");
        for k in 1..p {
            assert_ne!(e.pow(k as i64), f.one(), "{d} at {k}");
        }
    }
}
