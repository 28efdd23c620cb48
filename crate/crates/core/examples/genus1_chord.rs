//! Adds two points on y^2 = x^3 + 1 over F_7 with the explicit law and
//! with Cantor's algorithm, then compares against the chord through them.

use std::sync::Arc;

use hyperjac::cantor::cantor_add;
use hyperjac::curve::Curve;
use hyperjac::field::FieldModulus;
use hyperjac::grouplaw;
use hyperjac::mumford::MumfordDivisor;
use hyperjac::poly::Polynomial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = FieldModulus::new(7)?;
    let curve = Arc::new(Curve::new(1, Polynomial::from_u64s(m, &[1, 0, 0, 1]))?);
    let p = curve.point(m.elem(2), m.elem(3))?;
    let q = curve.point(m.elem(1), m.elem(3))?;
    let d1 = MumfordDivisor::from_points(curve.clone(), &[p])?;
    let d2 = MumfordDivisor::from_points(curve.clone(), &[q])?;

    let sum = grouplaw::add(&d1, &d2)?;
    println!("explicit: {sum}");
    println!("cantor:   {}", cantor_add(&d1, &d2)?.generic().expect("generic sum"));

    // The third intersection of the chord, reflected.
    let slope = (q.y - p.y).div(q.x - p.x)?;
    let x3 = slope.square() - p.x - q.x;
    let y3 = slope * (p.x - x3) - p.y;
    println!("chord:    ({}, {})", x3.value(), y3.value());
    assert_eq!(sum.u().coeff(0), -x3);
    assert_eq!(sum.v().coeff(0), y3);
    Ok(())
}
