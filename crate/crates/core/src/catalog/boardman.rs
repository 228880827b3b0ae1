use std::fmt;

use crate::algebra::{determinant, Polynomial, Variable};
use crate::{Error, Result};

/// Thom–Boardman symbol `Σ^{i,j}` with `i ≥ j ≥ 0`; `j = 0` is `Σⁱ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoardmanSymbol {
    i: u32,
    j: u32,
}

impl BoardmanSymbol {
    pub fn new(i: u32, j: u32) -> Result<Self> {
        if i == 0 {
            return Err(Error::Precondition("Boardman symbol needs i ≥ 1".into()));
        }
        if j > i {
            return Err(Error::Precondition(format!("Boardman symbol needs j ≤ i (got {i},{j})")));
        }
        Ok(BoardmanSymbol { i, j })
    }

    pub fn corank(r: u32) -> Result<Self> {
        BoardmanSymbol::new(r, 0)
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }
}

impl fmt::Display for BoardmanSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.j == 0 {
            write!(f, "Sigma^{}", self.i)
        } else {
            write!(f, "Sigma^{},{}", self.i, self.j)
        }
    }
}

/// Giambelli–Thom–Porteous: `det(d_{r−1+j−i})_{i,j=1..r}`.
pub fn gtp_sigma_r(r: u32) -> Polynomial {
    let r = r as i32;
    let matrix: Vec<Vec<Polynomial>> =
        (1..=r).map(|i| (1..=r).map(|j| Polynomial::var(Variable::d(r - 1 + j - i))).collect()).collect();
    determinant(&matrix)
}

/// Codimension of `Σ^{i,j}` germs with relative dimension `k = m − n`:
/// `(i+k)i + j((i+k)(2i−j+1) − 2(i−j))/2`.
pub fn codim_sigma_ij(sym: BoardmanSymbol, k: i64) -> Result<i64> {
    let (i, j) = (i64::from(sym.i), i64::from(sym.j));
    let twice = j * ((i + k) * (2 * i - j + 1) - 2 * (i - j));
    if twice % 2 != 0 {
        return Err(Error::Precondition(format!("codimension of {sym} at k = {k} is not an integer")));
    }
    let codim = (i + k) * i + twice / 2;
    if codim < 0 {
        return Err(Error::Precondition(format!("{sym} does not occur at relative dimension {k}")));
    }
    Ok(codim)
}

/// `(degree, factors)` of the Thom series of `Σ^{i,j}`: degree
/// `i(i−1) + j(2i² − ij − 3i + 3j − 1)/2`, factor count `i(j+1) − C(j,2)`.
pub fn shape_sigma_ij(sym: BoardmanSymbol) -> Result<(i64, i64)> {
    let (i, j) = (i64::from(sym.i), i64::from(sym.j));
    let twice = j * (2 * i * i - i * j - 3 * i + 3 * j - 1);
    if twice % 2 != 0 {
        return Err(Error::Precondition(format!("degree of {sym} is not an integer")));
    }
    let degree = i * (i - 1) + twice / 2;
    let factors = i * (j + 1) - j * (j - 1) / 2;
    Ok((degree, factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(i: u32, j: u32) -> BoardmanSymbol {
        BoardmanSymbol::new(i, j).unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(gtp_sigma_r(1), "d[0]".parse().unwrap());
        assert_eq!(gtp_sigma_r(2).to_string(), "d[1]^2 - d[0]*d[2]");
        let three = gtp_sigma_r(3);
        assert!(three.terms().all(|(m, _)| m.degree() == 6 && m.factor_count() == 3));
    }

    #[test]
    fn codimension_values() {
        assert_eq!(codim_sigma_ij(sym(1, 1), 0), Ok(2));
        assert_eq!(codim_sigma_ij(sym(2, 2), 0), Ok(10));
        assert_eq!(codim_sigma_ij(sym(3, 0), 2), Ok(15));
        assert!(codim_sigma_ij(sym(1, 0), -2).is_err());
    }

    #[test]
    fn shape_values() {
        assert_eq!(shape_sigma_ij(sym(4, 0)), Ok((12, 4)));
        assert_eq!(shape_sigma_ij(sym(1, 1)), Ok((0, 2)));
        assert_eq!(shape_sigma_ij(sym(2, 1)), Ok((3, 4)));
        assert_eq!(shape_sigma_ij(sym(2, 2)), Ok((5, 5)));
    }

    #[test]
    fn invalid_symbols() {
        assert!(BoardmanSymbol::new(1, 2).is_err());
        assert!(BoardmanSymbol::new(0, 0).is_err());
    }
}
