//! Doubling. The interpolation system is singular when both inputs are
//! equal, so `double` routes through a random auxiliary divisor.

use std::sync::Arc;

use hyperjac::cantor::cantor_add;
use hyperjac::curve::Curve;
use hyperjac::field::FieldModulus;
use hyperjac::grouplaw::{self, interpolate};
use hyperjac::mumford::MumfordDivisor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = FieldModulus::new(10007)?;
    for g in 1..=5 {
        let curve = Arc::new(Curve::random(m, g, 100 + g as u64)?);
        let d = MumfordDivisor::random(curve, 5, false)?;
        let direct = interpolate(&d, &d).unwrap_err();
        let twice = grouplaw::double(&d, 9)?;
        let oracle = cantor_add(&d, &d)?.generic();
        println!("g={g}: direct -> {}, 2D = {twice}", direct.name());
        assert_eq!(oracle, Some(twice));
    }
    Ok(())
}
