//! Weyl dimension formula for type `C2`.

use crate::error::{Error, Result};

/// `dim L(λ)` for the partition `λ = (λ1, λ2)`:
/// `(λ1 − λ2 + 1)(λ2 + 1)(λ1 + 2)(λ1 + λ2 + 3) / 6`.
pub fn weyl_dim(l1: i64, l2: i64) -> Result<u64> {
    if l2 < 0 || l1 < l2 {
        return Err(Error::NotAPartition(l1, l2));
    }
    let (l1, l2) = (l1 as u128, l2 as u128);
    let product = (l1 - l2 + 1) * (l2 + 1) * (l1 + 2) * (l1 + l2 + 3);
    if product % 6 != 0 {
        return Err(Error::Internal(format!("Weyl product {product} is not divisible by 6")));
    }
    u64::try_from(product / 6).map_err(|_| Error::Internal("dimension overflows u64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_dimensions() {
        assert_eq!(weyl_dim(0, 0), Ok(1));
        assert_eq!(weyl_dim(1, 0), Ok(4));
        assert_eq!(weyl_dim(1, 1), Ok(5));
        assert_eq!(weyl_dim(2, 0), Ok(10));
        assert_eq!(weyl_dim(2, 1), Ok(16));
        assert_eq!(weyl_dim(3, 1), Ok(35));
        assert_eq!(weyl_dim(3, 2), Ok(40));
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(weyl_dim(1, 2).is_err());
        assert!(weyl_dim(0, -1).is_err());
    }

    #[test]
    fn divisibility() {
        for l1 in 0..=50 {
            for l2 in 0..=l1 {
                assert!(weyl_dim(l1, l2).is_ok());
            }
        }
    }
}
