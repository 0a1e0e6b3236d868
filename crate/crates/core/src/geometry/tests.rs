use super::*;

const ORDERS: &[u64] = &[5, 7, 9, 11, 13];

fn gf(q: u64) -> Field {
    Field::of_order(q).unwrap()
}

fn fin(x: Fe) -> ProjPoint1 {
    ProjPoint1::Finite(x)
}

#[test]
fn quadratic_and_bilinear_forms() {
    let f = gf(9);
    let (o, i) = (Fe::ZERO, Fe::ONE);
    assert_eq!(quadratic_form(&f, [i, o, o]), o);
    assert_eq!(quadratic_form(&f, [o, i, o]), i);
    for xi in f.elements() {
        assert_eq!(quadratic_form(&f, [f.mul(xi, xi), xi, i]), o);
    }
    assert_eq!(bilinear_form(&f, [i, o, o], [i, o, o]), o);
    assert_eq!(bilinear_form(&f, [o, i, o], [o, i, o]), f.two());
    let f = gf(5);
    let all: Vec<[Fe; 3]> = ProjPoint2::all(5).map(|p| p.coords()).collect();
    for &u in &all {
        assert_eq!(bilinear_form(&f, u, u), f.mul(f.two(), quadratic_form(&f, u)));
        for &v in &all {
            assert_eq!(bilinear_form(&f, u, v), bilinear_form(&f, v, u));
        }
    }
}

#[test]
fn plane_indexing_round_trips() {
    for &q in ORDERS {
        let f = gf(q);
        let q = f.q();
        for (i, p) in ProjPoint2::all(q).enumerate() {
            assert_eq!(p.index(q), i);
            assert_eq!(ProjPoint2::new(&f, p.coords()).unwrap(), p);
        }
        for (i, pair) in pairs(q).enumerate() {
            assert_eq!(pair.index(q), i);
            assert!(pair.lo() < pair.hi());
        }
        assert_eq!(pairs(q).count(), pair_count(q));
        assert_eq!(pairs(q).last().unwrap().hi(), ProjPoint1::Infinity);
    }
}

#[test]
fn conic_has_q_plus_one_points_no_three_collinear() {
    for &q in ORDERS {
        let f = gf(q);
        let conic = conic_points(&f);
        assert_eq!(conic.len() as u64, q + 1);
        assert_eq!(conic.last(), Some(&ProjPoint2::new(&f, [Fe::ONE, Fe::ZERO, Fe::ZERO]).unwrap()));
        for &p in &conic {
            assert!(quadratic_form(&f, p.coords()).is_zero());
            assert_eq!(conic_param(&f, conic_preimage(&f, p).unwrap()), p);
        }
        for a in 0..conic.len() {
            for b in a + 1..conic.len() {
                let l = line_through(&f, conic[a], conic[b]).unwrap();
                for (c, &r) in conic.iter().enumerate() {
                    if c != a && c != b {
                        assert!(!incident(&f, r, l));
                    }
                }
            }
        }
        assert_eq!(conic_param(&f, fin(Fe::ZERO)).coords(), [Fe::ZERO, Fe::ZERO, Fe::ONE]);
    }
}

#[test]
fn line_classes_have_the_expected_sizes() {
    for &q in ORDERS {
        let f = gf(q);
        let mut counts = [0usize; 3];
        for l in ProjLine::all(f.q()) {
            let class = classify_line(&f, l);
            counts[class as usize] += 1;
            // the pole has the matching square type
            assert_eq!(classify_point(&f, pole(&f, l)), class);
        }
        let q = q as usize;
        assert_eq!(counts, [q * (q + 1) / 2, q + 1, q * (q - 1) / 2]);
        let hyperbolic_points =
            ProjPoint2::all(f.q()).filter(|&p| classify_point(&f, p) == LineClass::Hyperbolic).count();
        assert_eq!(hyperbolic_points, q * (q + 1) / 2);
    }
}

#[test]
fn polarity_is_an_incidence_preserving_involution() {
    for &q in &[5u64, 9] {
        let f = gf(q);
        for p in ProjPoint2::all(f.q()) {
            let l = polar_line(&f, p);
            assert_eq!(pole(&f, l), p);
            assert_eq!(polar_line(&f, pole(&f, polar_line(&f, p))), l);
            for m in ProjLine::all(f.q()) {
                assert_eq!(incident(&f, p, m), incident(&f, pole(&f, m), l));
            }
        }
        for p in conic_points(&f) {
            let t = polar_line(&f, p);
            assert_eq!(classify_line(&f, t), LineClass::Tangent);
            assert!(incident(&f, p, t));
        }
    }
}

#[test]
fn secant_poles_match_the_closed_form() {
    for &q in ORDERS {
        let f = gf(q);
        let base = hyperbolic_line(&f, fin(Fe::ZERO), ProjPoint1::Infinity).unwrap();
        assert_eq!(pole(&f, base).coords(), [Fe::ZERO, Fe::ONE, Fe::ZERO]);
        for pair in pairs(f.q()) {
            let l = hyperbolic_line(&f, pair.lo(), pair.hi()).unwrap();
            assert_eq!(classify_line(&f, l), LineClass::Hyperbolic);
            assert_eq!(secant_pair(&f, l), Some(pair));
            assert_eq!(pole(&f, l), secant_pole(&f, pair));
            // Q of the unnormalized closed-form representative
            let xi = pair.lo().finite().unwrap();
            match pair.hi() {
                ProjPoint1::Finite(gamma) => {
                    let v = [f.mul(gamma, xi), f.mul(f.add(xi, gamma), f.half()), Fe::ONE];
                    let h = f.mul(f.sub(gamma, xi), f.half());
                    assert_eq!(quadratic_form(&f, v), f.mul(h, h));
                }
                ProjPoint1::Infinity => {
                    let v = [f.mul(f.two(), xi), Fe::ONE, Fe::ZERO];
                    assert_eq!(quadratic_form(&f, v), Fe::ONE);
                }
            }
            assert_eq!(classify_point(&f, pole(&f, l)), LineClass::Hyperbolic);
        }
    }
}

#[test]
fn degenerate_inputs_are_rejected() {
    let f = gf(7);
    assert_eq!(hyperbolic_line(&f, fin(Fe::ONE), fin(Fe::ONE)), Err(Error::DegeneratePair));
    assert_eq!(Pair::new(ProjPoint1::Infinity, ProjPoint1::Infinity), Err(Error::DegeneratePair));
    assert_eq!(ProjPoint2::new(&f, [Fe::ZERO; 3]), Err(Error::ZeroVector));
    let z = fin(Fe::ZERO);
    assert_eq!(cross_ratio(&f, z, z, z, fin(Fe::ONE)), Err(Error::IndeterminateCrossRatio));
}

#[test]
fn cross_ratio_limit_rules() {
    let f = gf(11);
    let (zero, one, inf) = (fin(Fe::ZERO), fin(Fe::ONE), ProjPoint1::Infinity);
    for lambda in f.nonzero() {
        let cr = cross_ratio(&f, zero, inf, one, fin(lambda)).unwrap();
        assert_eq!(cr, fin(f.inv(lambda).unwrap()));
    }
    let minus_one = fin(f.neg(Fe::ONE));
    assert_eq!(cross_ratio(&f, zero, inf, one, minus_one).unwrap(), minus_one);
    // a coincidence in the denominator gives ∞, in the numerator 0
    assert_eq!(cross_ratio(&f, zero, one, one, inf).unwrap(), inf);
    assert_eq!(cross_ratio(&f, zero, one, zero, inf).unwrap(), zero);
}

#[test]
fn cross_ratio_is_well_defined_on_unordered_pairs() {
    let f = gf(9);
    let pts: Vec<ProjPoint1> = line_points(&f).collect();
    for &x in &pts {
        for &y in &pts {
            for &z in &pts {
                for &w in &pts {
                    if x == y || z == w || [z, w].contains(&x) || [z, w].contains(&y) {
                        continue;
                    }
                    let r = cross_ratio(&f, x, y, z, w).unwrap().finite().unwrap();
                    let inv = f.inv(r).unwrap();
                    for (a, b, c, d) in [(y, x, z, w), (x, y, w, z)] {
                        assert_eq!(cross_ratio(&f, a, b, c, d).unwrap(), fin(inv));
                    }
                    assert_eq!(cross_ratio(&f, y, x, w, z).unwrap(), fin(r));
                }
            }
        }
    }
}
