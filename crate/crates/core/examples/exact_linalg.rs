//! Rank, kernel and spectral projectors over exact rationals.

use projrep::linalg::{
    characteristic_polynomial, display_rational, idempotent_from_spectrum, kernel_basis, rank,
    rat, rational_spectrum, Matrix,
};

fn main() -> projrep::Result<()> {
    let m = Matrix::from_i64(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 3]]);
    println!("rank {}", rank(&m));

    let singular = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    for v in kernel_basis(&singular) {
        let v: Vec<String> = v.iter().map(display_rational).collect();
        println!("kernel vector [{}]", v.join(", "));
    }

    let poly: Vec<String> = characteristic_polynomial(&m)?.iter().map(display_rational).collect();
    println!("characteristic polynomial (ascending) [{}]", poly.join(", "));

    let spectrum = rational_spectrum(&m)?;
    for (root, mult) in &spectrum.roots {
        println!("eigenvalue {} with multiplicity {mult}", display_rational(root));
    }

    let p = idempotent_from_spectrum(&m, &rat(3, 1), &[rat(1, 1)])?;
    println!("projector onto the 3-eigenspace is idempotent: {}", p.mul(&p) == p);
    println!("its rank: {}", rank(&p));
    Ok(())
}
