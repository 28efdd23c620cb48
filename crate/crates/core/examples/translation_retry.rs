//! A divisor with a point at x = 0 makes the constant term of `u u'`
//! vanish. Translating x by a random constant sidesteps that.

use std::sync::Arc;

use hyperjac::cantor::cantor_add;
use hyperjac::curve::{AffinePoint, Curve};
use hyperjac::field::FieldModulus;
use hyperjac::grouplaw::{self, GroupLawError};
use hyperjac::mumford::MumfordDivisor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = FieldModulus::new(10007)?;
    // Find a genus-2 curve whose f(0) is a nonzero square.
    let (curve, y0) = (0u64..)
        .find_map(|seed| {
            let c = Curve::random(m, 2, seed).ok()?;
            let y = c.f().coeff(0).sqrt().filter(|y| !y.is_zero())?;
            Some((Arc::new(c), y))
        })
        .expect("some curve has f(0) square");
    let other = curve.sample_point(3, true, true)?;
    let d1 = MumfordDivisor::from_points(curve.clone(), &[AffinePoint { x: m.zero(), y: y0 }, other])?;
    let d2 = MumfordDivisor::random(curve.clone(), 4, true)?;

    match grouplaw::add(&d1, &d2) {
        Err(e @ GroupLawError::ZeroOmega { .. }) => println!("plain add: {e}"),
        other => println!("plain add: {other:?}"),
    }
    let t = grouplaw::add_translated(&d1, &d2, 16, 7)?;
    println!("translated add after {} retries: {}", t.retries, t.sum);
    assert_eq!(cantor_add(&d1, &d2)?.generic(), Some(t.sum));
    Ok(())
}
