//! Curve files and divisor literals: parse, validate, print, and the
//! same commands the binary exposes.

use std::sync::Arc;

use hyperjac::cli::{cmd_add, cmd_check, cmd_neg, Method};
use hyperjac::curve::Curve;
use hyperjac::mumford::MumfordDivisor;

const CURVE: &str = "\
# y^2 = x^5 + 4x + 4 over F_7
p = 7
g = 2
f = [4,4,0,0,0,1]
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = Arc::new(Curve::parse(CURVE)?);
    print!("{}", curve.to_file_string());
    let d = MumfordDivisor::random(curve.clone(), 1, false)?;
    let e = MumfordDivisor::random(curve.clone(), 2, false)?;
    let (ds, es) = (d.to_string(), e.to_string());
    assert_eq!(MumfordDivisor::parse(curve.clone(), &ds)?, d);

    print!("{}", cmd_check(CURVE, &ds).text);
    print!("neg: {}", cmd_neg(CURVE, &ds).text);
    for retry in [false, true] {
        let out = cmd_add(CURVE, &ds, &es, Method::Both, retry, 0);
        println!("{}exit {}", out.text, out.status.code());
    }
    let bad = cmd_check(CURVE, "u=[1,2]; v=[3]");
    println!("{}exit {}", bad.text, bad.status.code());
    Ok(())
}
