use std::sync::Arc;

use hyperjac::cantor::{cantor_add, CantorSum};
use hyperjac::curve::Curve;
use hyperjac::field::FieldModulus;
use hyperjac::grouplaw::{
    self, add, add_traced, compose_u, compose_v, interpolate, v_system, GroupLawError, SolveMethod,
};
use hyperjac::mumford::{is_on_z, MumfordDivisor};
use hyperjac::poly::Polynomial;
use hyperjac::rng::{derive_seed, SeededRng};

fn setup(p: u64, g: usize, seed: u64) -> (Arc<Curve>, MumfordDivisor, MumfordDivisor) {
    let m = FieldModulus::new(p).unwrap();
    let c = Arc::new(Curve::random(m, g, derive_seed(seed, 0)).unwrap());
    let d1 = MumfordDivisor::random(c.clone(), derive_seed(seed, 1), false).unwrap();
    let d2 = MumfordDivisor::random(c.clone(), derive_seed(seed, 2), false).unwrap();
    (c, d1, d2)
}

#[test]
fn explicit_sum_matches_cantor() {
    for g in 1..=8 {
        let mut ok = 0;
        for trial in 0..40 {
            let (_, d1, d2) = setup(10007, g, 1000 * g as u64 + trial);
            let Ok(sum) = add(&d1, &d2) else { continue };
            let oracle = cantor_add(&d1, &d2).unwrap();
            assert_eq!(oracle, CantorSum::Generic(sum), "g={g} trial={trial}");
            ok += 1;
        }
        assert!(ok >= 38, "g={g}: only {ok} successes");
    }
}

#[test]
fn cramer_route_matches_gaussian_route() {
    for g in 1..=6 {
        for trial in 0..10 {
            let (_, d1, d2) = setup(10007, g, 77 + trial);
            let (Ok(a), Ok(b)) = (
                add_traced(&d1, &d2, SolveMethod::Gaussian),
                add_traced(&d1, &d2, SolveMethod::Cramer),
            ) else {
                continue;
            };
            assert_eq!(a.sum, b.sum);
            assert_eq!(b.interpolant.normalized().unwrap(), a.interpolant);
        }
    }
}

#[test]
fn v_system_agrees_with_direct_solve() {
    // Solve p + q v'' = 0 mod u'' by brute linear algebra on the residue
    // map and compare with the assembled Q + T system.
    for g in 1..=7 {
        for trial in 0..8 {
            let (c, d1, d2) = setup(10007, g, 500 + trial);
            let Ok(interp) = interpolate(&d1, &d2) else {
                continue;
            };
            let Ok(u3) = compose_u(&c, &d1, &d2, &interp) else {
                continue;
            };
            let m = c.modulus();
            // column s: (q x^s) mod u''; rhs: -(p mod u'')
            let cols: Vec<Polynomial> = (0..g)
                .map(|s| {
                    (&interp.q * &Polynomial::monomial(m.one(), s))
                        .rem(&u3)
                        .unwrap()
                })
                .collect();
            let rhs = (-&interp.p).rem(&u3).unwrap();
            let matrix = (0..g)
                .map(|i| (0..g).map(|s| cols[s].coeff(i as i64)).collect())
                .collect();
            let direct =
                grouplaw::LinearSystem::new(matrix, (0..g).map(|i| rhs.coeff(i as i64)).collect());
            let expected = direct.solve();
            let assembled = v_system(&c, &interp, &u3).unwrap().solve();
            assert_eq!(assembled.is_ok(), expected.is_ok());
            if let (Ok(a), Ok(b)) = (assembled, expected) {
                assert_eq!(a, b, "g={g} trial={trial}");
                assert_eq!(compose_v(&c, &interp, &u3).unwrap(), Polynomial::new(m, a));
            }
        }
    }
}

#[test]
fn shared_support_is_reported() {
    // D' shares one point with D conjugated; the rest is fresh.
    let m = FieldModulus::new(10007).unwrap();
    let mut seen = std::collections::BTreeMap::new();
    for g in 2..=4 {
        let c = Arc::new(Curve::random(m, g, 40 + g as u64).unwrap());
        for seed in 0..20u64 {
            let mut rng = SeededRng::new(seed);
            let mut pts = Vec::new();
            while pts.len() < 2 * g - 1 {
                let p = c.sample_point_with(&mut rng, true, true).unwrap();
                if pts
                    .iter()
                    .all(|q: &hyperjac::curve::AffinePoint| q.x != p.x)
                {
                    pts.push(p);
                }
            }
            let d1 = MumfordDivisor::from_points(c.clone(), &pts[..g]).unwrap();
            let mut other = pts[g..].to_vec();
            other.push(pts[0].involution());
            let d2 = MumfordDivisor::from_points(c.clone(), &other).unwrap();
            let err = interpolate(&d1, &d2).unwrap_err();
            assert!(matches!(
                err,
                GroupLawError::SharedSupport { gcd_degree: 1 } | GroupLawError::SingularM { .. }
            ));
            *seen.entry(err.name()).or_insert(0) += 1;
            assert!(add(&d1, &d2).is_err());
        }
    }
    assert!(seen.contains_key("SharedSupport"), "{seen:?}");
}

#[test]
fn is_on_z_holds_for_every_sum() {
    for g in 1..=5 {
        for trial in 0..10 {
            let (c, d1, d2) = setup(1_000_003, g, 9000 + trial);
            if let Ok(s) = add(&d1, &d2) {
                assert!(is_on_z(&c, s.u(), s.v()).unwrap().is_some());
            }
        }
    }
}
