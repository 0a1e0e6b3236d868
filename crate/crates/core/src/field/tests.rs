use super::*;
use proptest::prelude::*;

const ORDERS: &[u64] = &[5, 7, 9, 11, 13, 25, 27, 49];

fn gf(q: u64) -> Field {
    Field::of_order(q).unwrap()
}

#[test]
fn prime_field_basics() {
    let f = gf(7);
    assert_eq!(f.add(Fe(3), Fe(5)), Fe(1));
    assert_eq!(f.inv(Fe(3)).unwrap(), Fe(5));
    assert_eq!(f.primitive_element(), Fe(3));
    // 3^3 = 27 = -1 mod 7
    assert!(!f.is_square(Fe(3)).unwrap());
}

#[test]
fn gf9_with_conway_modulus() {
    let f = gf(9);
    assert_eq!(f.spec().modulus(), &[2, 2, 1]);
    let x = f.from_coeffs(&[0, 1]).unwrap();
    let two_x_plus_one = f.from_coeffs(&[1, 2]).unwrap();
    assert_eq!(f.add(x, two_x_plus_one), Fe::ONE);
    assert_eq!(f.coeffs(f.mul(x, x)), vec![1, 1]);
    assert_eq!(f.primitive_element(), x);
    assert_eq!(f.order(x), Some(8));
    for g in f.elements() {
        assert_eq!(f.add(Fe::ZERO, g), g);
    }
    assert!(f.is_square(f.neg(Fe::ONE)).unwrap());
}

#[test]
fn sigma_is_an_involution_fixing_the_subfield() {
    let f = gf(9);
    let mut fixed = 0;
    for a in f.elements() {
        let s = f.sigma(a).unwrap();
        assert_eq!(s, f.pow(a, 3).unwrap());
        assert_eq!(f.sigma(s).unwrap(), a);
        if s == a {
            fixed += 1;
        }
    }
    assert_eq!(fixed, 3);
    let f = gf(81);
    assert_eq!(f.elements().filter(|&a| f.sigma(a).unwrap() == a).count(), 9);
}

#[test]
fn frobenius_identity_and_group_order() {
    for &q in ORDERS {
        let f = gf(q);
        for a in f.elements() {
            assert_eq!(f.frobenius(a, 0), a);
            // the automorphism group has order m
            assert_eq!(f.frobenius(a, f.m()), a);
            let mut b = a;
            for _ in 0..f.m() {
                b = f.frobenius(b, 1);
            }
            assert_eq!(b, a);
        }
        // distinct powers are distinct automorphisms
        let g = f.primitive_element();
        let images: Vec<_> = (0..f.m()).map(|j| f.frobenius(g, j)).collect();
        for i in 0..images.len() {
            for j in i + 1..images.len() {
                assert_ne!(images[i], images[j]);
            }
        }
    }
}

#[test]
fn field_axioms_exhaustive() {
    for &q in ORDERS {
        let f = gf(q);
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                assert_eq!(f.pow(a, q as i64 - 1).unwrap(), Fe::ONE);
                assert_eq!(f.pow(a, -1).unwrap(), f.inv(a).unwrap());
            }
            for b in f.elements() {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in f.elements() {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn square_classes() {
    for &q in ORDERS {
        let f = gf(q);
        let squares = f.nonzero().filter(|&x| f.is_square(x).unwrap()).count();
        assert_eq!(squares as u64, (q - 1) / 2);
        assert!(!f.is_square(f.fixed_nonsquare()).unwrap());
        for x in f.nonzero() {
            assert!(f.is_square(f.mul(x, x)).unwrap());
            for y in f.nonzero() {
                let xy = f.is_square(f.mul(x, y)).unwrap();
                assert_eq!(xy, f.is_square(x).unwrap() == f.is_square(y).unwrap());
            }
        }
        // -1 is a square exactly when q = 1 mod 4
        assert_eq!(f.is_square(f.neg(Fe::ONE)).unwrap(), q % 4 == 1);
    }
}

#[test]
fn legendre_criterion_for_two() {
    for &q in &[5u64, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 49, 81, 121, 125, 169] {
        let f = gf(q);
        let p = f.p() as i64;
        let symbol: i64 = if ((p * p - 1) / 8) % 2 == 0 { 1 } else { -1 };
        let predicted = symbol.pow(f.m()) == 1;
        assert_eq!(f.is_square(f.two()).unwrap(), predicted, "q = {q}");
    }
}

#[test]
fn builtin_moduli_are_primitive_and_compatible() {
    for q in [9u64, 25, 27, 49, 81, 121, 125, 169] {
        let f = gf(q);
        let x = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.order(x), Some(q as u32 - 1), "q = {q}");
    }
    // Conway compatibility: the norm of x from GF(81) down to GF(9) is a root
    // of the GF(9) polynomial x^2 + 2x + 2.
    let f = gf(81);
    let x = f.from_coeffs(&[0, 1]).unwrap();
    let y = f.pow(x, 10).unwrap();
    let val = f.add(f.add(f.mul(y, y), f.mul(f.two(), y)), f.two());
    assert_eq!(val, Fe::ZERO);
}

#[test]
fn rejects_bad_parameters() {
    assert_eq!(FieldSpec::builtin(8), Err(Error::BadOrder(8)));
    assert_eq!(FieldSpec::builtin(6), Err(Error::BadOrder(6)));
    assert_eq!(FieldSpec::builtin(3), Err(Error::BadOrder(3)));
    assert_eq!(FieldSpec::prime(2), Err(Error::BadCharacteristic(2)));
    assert_eq!(FieldSpec::new(5, vec![1, 0, 1]), Err(Error::ReducibleModulus { p: 5 }));
    assert!(FieldSpec::new(3, vec![1, 0, 2]).is_err());
    assert_eq!(FieldSpec::builtin(343), Err(Error::NoBuiltinModulus(343)));
    let user = FieldSpec::with_override(9, Some(&[1, 0, 1])).unwrap();
    let f = Field::new(user);
    assert_eq!(f.q(), 9);
    // x^2 + 1: x has order 4, so x is not the primitive element
    assert_ne!(f.primitive_element(), f.from_coeffs(&[0, 1]).unwrap());
    assert_eq!(f.order(f.primitive_element()), Some(8));
}

#[test]
fn error_paths() {
    let f = gf(7);
    assert_eq!(f.inv(Fe::ZERO), Err(Error::DivisionByZero));
    assert_eq!(f.pow(Fe::ZERO, -2), Err(Error::DivisionByZero));
    assert_eq!(f.is_square(Fe::ZERO), Err(Error::ZeroSquareClass));
    assert_eq!(f.sigma(Fe(2)), Err(Error::NoInvolution { q: 7 }));
    assert_eq!(gf(27).sigma(Fe(2)), Err(Error::NoInvolution { q: 27 }));
    let big = gf(9).from_coeffs(&[2, 2]).unwrap();
    assert_eq!(f.checked_add(big, Fe::ONE), Err(Error::SpecMismatch { q: 7 }));
    assert!(f.from_coeffs(&[7]).is_err());
}

proptest! {
    #[test]
    fn frobenius_is_a_field_automorphism(a in 0u16..81, b in 0u16..81, j in 0u32..4) {
        let f = Field::of_order(81).unwrap();
        let (a, b) = (Fe(a), Fe(b));
        prop_assert_eq!(f.frobenius(f.add(a, b), j), f.add(f.frobenius(a, j), f.frobenius(b, j)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), j), f.mul(f.frobenius(a, j), f.frobenius(b, j)));
    }
}
