//! One genus-3 addition step by step: the interpolating function, the
//! new `u`, the new `v`, and the check against Cantor's algorithm.

use std::sync::Arc;

use hyperjac::cantor::{cantor_add, CantorSum};
use hyperjac::curve::Curve;
use hyperjac::field::FieldModulus;
use hyperjac::grouplaw::{compose_u, compose_v, interpolate, rho};
use hyperjac::mumford::MumfordDivisor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = FieldModulus::new(10007)?;
    let curve = Arc::new(Curve::random(m, 3, 11)?);
    let d1 = MumfordDivisor::random(curve.clone(), 1, false)?;
    let d2 = MumfordDivisor::random(curve.clone(), 2, false)?;
    println!("curve: f = {}", curve.f());
    println!("D  = {d1}");
    println!("D' = {d2}");

    let interp = interpolate(&d1, &d2)?;
    println!("p = {}\nq = {}", interp.p, interp.q);
    println!("rho = {}", rho(&curve, &interp)?.value());
    let u3 = compose_u(&curve, &d1, &d2, &interp)?;
    let v3 = compose_v(&curve, &interp, &u3)?;
    let sum = MumfordDivisor::new(curve.clone(), u3, v3)?;
    println!("D + D' = {sum}");

    match cantor_add(&d1, &d2)? {
        CantorSum::Generic(c) if c == sum => println!("cantor agrees"),
        other => println!("cantor differs: {other:?}"),
    }
    Ok(())
}
