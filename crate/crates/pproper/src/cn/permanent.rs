use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Permanent by Ryser's inclusion-exclusion formula,
/// `(-1)^n * sum over column subsets S of (-1)^|S| * prod_i sum_{j in S} a_ij`,
/// walking the subsets in Gray-code order so each step updates the row sums
/// by one column.
pub fn permanent(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    assert!(mat.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    assert!(n < 63, "matrix too large for subset enumeration");
    let mut row_sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut gray: u64 = 0;
    for step in 1u64..(1 << n) {
        let next = step ^ (step >> 1);
        let flipped = (gray ^ next).trailing_zeros() as usize;
        let adding = next & (1 << flipped) != 0;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if adding {
                *s += &mat[i][flipped];
            } else {
                *s -= &mat[i][flipped];
            }
        }
        gray = next;
        let prod = row_sums.iter().fold(BigInt::one(), |acc, s| acc * s);
        if next.count_ones() % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn naive(mat: &[Vec<BigInt>]) -> BigInt {
        let n = mat.len();
        (0..n)
            .permutations(n)
            .map(|p| p.iter().enumerate().fold(BigInt::one(), |acc, (i, &j)| acc * &mat[i][j]))
            .sum()
    }

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_permanents() {
        assert_eq!(permanent(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), BigInt::one());
        assert_eq!(permanent(&m(&[&[1, 1], &[1, 1]])), BigInt::from(2));
        assert_eq!(permanent(&m(&[&[1, 2], &[3, 4]])), BigInt::from(10));
        assert_eq!(permanent(&[]), BigInt::one());
    }

    #[test]
    fn ryser_matches_naive_on_random_5x5() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mat: Vec<Vec<BigInt>> = (0..5)
                .map(|_| (0..5).map(|_| BigInt::from(rng.gen_range(-2..=2))).collect())
                .collect();
            assert_eq!(permanent(&mat), naive(&mat));
        }
    }
}
