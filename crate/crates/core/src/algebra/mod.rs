//! Exact arithmetic: rationals, polynomials, weight systems, cyclotomic
//! integers and rational matrices.

mod cyclotomic;
mod matrix;
mod poly;
mod polymatrix;
mod rational;
mod weights;

pub use cyclotomic::{cyclotomic_poly, CyclotomicInt};
pub use matrix::{KernelImage, RatMatrix};
pub use poly::Poly;
pub use polymatrix::PolyMatrix;
pub use rational::{format_rational, int, parse_rational, rat, sign_pow, to_f64, to_i64, Rational};
pub use weights::{
    check_quasi_homogeneous, chi_at_one, is_regular_weight_system, milnor_number,
    RegularityVerdict, RegularityWitness, WeightSystem,
};

use crate::error::{Error, Result};

/// `Res[g(x) dx / (h x^{h-1})] = (1/h) * [x^{h-2}] g` for univariate `g`.
pub fn residue_div(g: &Poly, h: u32) -> Result<Rational> {
    if h < 2 {
        return Err(Error::ResidueIndex(h));
    }
    if g.nvars() != 1 {
        return Err(Error::NotUnivariate("residue needs one variable".into()));
    }
    Ok(g.coefficient(&[h - 2]) / int(h as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        assert_eq!(residue_div(&Poly::x_pow(2), 4).unwrap(), rat(1, 4));
        assert!(residue_div(&Poly::x_pow(3), 4).unwrap() == int(0));
        let g = &Poly::univariate_monomial(int(5), 1) + &Poly::x_pow(4);
        assert_eq!(residue_div(&g, 3).unwrap(), rat(5, 3));
        assert_eq!(residue_div(&g, 1), Err(Error::ResidueIndex(1)));
    }
}
