use super::{IntMatrix, RatMatrix};
use crate::rational::Rational;

/// Moore-Penrose pseudoinverse via the rank factorization `D = B·C`, where
/// `B` holds the pivot columns of `D` and `C` the nonzero rows of its RREF:
/// `D† = Cᵀ (C Cᵀ)⁻¹ (Bᵀ B)⁻¹ Bᵀ`.
pub fn pseudoinverse(d: &IntMatrix) -> RatMatrix {
    let a = d.to_rational();
    let (rref, pivots) = a.rref();
    let r = pivots.len();
    if r == 0 {
        return RatMatrix::zeros(a.cols(), a.rows());
    }
    let b = RatMatrix::from_fn(a.rows(), r, |i, j| a[(i, pivots[j])].clone());
    let c = RatMatrix::from_fn(r, a.cols(), |i, j| rref[(i, j)].clone());
    let ct = c.transpose();
    let bt = b.transpose();
    let cct_inv = c.mul(&ct).inverse().expect("C has full row rank");
    let btb_inv = bt.mul(&b).inverse().expect("B has full column rank");
    ct.mul(&cct_inv).mul(&btb_inv).mul(&bt)
}

pub fn pseudoinverse_apply(d: &IntMatrix, b: &[Rational]) -> Vec<Rational> {
    pseudoinverse(d).mul_vec(b)
}
