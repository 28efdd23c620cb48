//! The composition-sum closed forms for iterated reduction and for
//! dividing out a known factor, checked against direct computation.

use hyperjac::field::FieldModulus;
use hyperjac::kernels::{compositions, reduction_iterative, ProductInverter, ReductionKernel};
use hyperjac::poly::Polynomial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for c in compositions(4)?.iter() {
        print!("{:?} ", c.parts());
    }
    println!();

    let m = FieldModulus::new(10007)?;
    let alpha = Polynomial::from_u64s(m, &[3, 1, 4, 1, 5, 9, 2, 6]);
    let beta = Polynomial::from_u64s(m, &[5, 3, 5, 1]);
    // Reducing a degree-7 polynomial by a monic cubic takes d = 4 steps.
    let (d, k) = (4, 7);
    let kernel = ReductionKernel::new(&beta, d, k, d)?;
    let closed = Polynomial::new(m, (0..k).map(|i| kernel.coefficient(&alpha, i)).collect());
    println!("closed form: {closed}");
    println!("iterated:    {}", reduction_iterative(&alpha, &beta, d, k, d)?);
    println!("remainder:   {}", alpha.rem(&beta)?);

    let gamma = Polynomial::from_u64s(m, &[2, 7, 1, 8]);
    let product = &beta * &gamma;
    let inv = ProductInverter::new(&gamma, 3)?;
    let recovered: Vec<u64> = (0..=3).map(|k| inv.coefficient(product.coeffs(), k).value()).collect();
    println!("product / gamma: {recovered:?} (beta = {beta})");
    Ok(())
}
