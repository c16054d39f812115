//! Integer determinants by elimination modulo word-size primes and Chinese
//! remaindering, with the Hadamard bound deciding how many primes suffice.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use super::{bareiss_det, Matrix};

const PRIME_COUNT: usize = 2048;

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// Miller-Rabin with bases 2, 7, 61, which is exact below 4.7·10⁹.
fn is_prime_u32(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 61] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    [2, 7, 61].iter().all(|&a| {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

/// The largest primes below 2³¹, in descending order. Products of two
/// residues fit in a `u64`.
pub(crate) fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        (1u64 << 30..1u64 << 31)
            .rev()
            .filter(|&n| is_prime_u32(n))
            .take(PRIME_COUNT)
            .collect()
    })
}

fn det_mod(m: &Matrix<BigInt>, p: u64) -> u64 {
    let n = m.rows();
    let pb = BigInt::from(p);
    let mut a: Vec<u64> = (0..n * n)
        .map(|k| {
            let r = &m[(k / n, k % n)] % &pb;
            let r = if r.sign() == Sign::Minus { r + &pb } else { r };
            r.try_into().expect("residue below p")
        })
        .collect();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i * n + k] != 0) else {
            return 0;
        };
        if piv != k {
            for j in 0..n {
                a.swap(k * n + j, piv * n + j);
            }
            det = p - det;
        }
        let pivot = a[k * n + k];
        det = mul_mod(det, pivot, p);
        let inv = pow_mod(pivot, p - 2, p);
        for i in k + 1..n {
            let f = mul_mod(a[i * n + k], inv, p);
            if f == 0 {
                continue;
            }
            for j in k..n {
                let sub = mul_mod(f, a[k * n + j], p);
                a[i * n + j] = (a[i * n + j] + p - sub) % p;
            }
        }
    }
    det % p
}

/// Bits of the Hadamard bound `∏ ‖row‖₂`, or `None` for a zero row.
fn hadamard_bits(m: &Matrix<BigInt>) -> Option<u64> {
    let mut bits = 0;
    for i in 0..m.rows() {
        let s: BigInt = m.row(i).iter().map(|x| x * x).sum();
        if s.is_zero() {
            return None;
        }
        bits += s.bits().div_ceil(2);
    }
    Some(bits)
}

/// Characteristic polynomial `det(tI - b)` of a row-major `n × n` matrix
/// over `𝔽_p`, coefficients from the constant term up. Reduces to upper
/// Hessenberg form by similarity, then runs the Hessenberg recurrence.
pub(crate) fn charpoly_mod(mut h: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i * n + j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                h.swap(piv * n + c, (j + 1) * n + c);
            }
            for r in 0..n {
                h.swap(r * n + piv, r * n + j + 1);
            }
        }
        let inv = pow_mod(h[(j + 1) * n + j], p - 2, p);
        for r in j + 2..n {
            let u = mul_mod(h[r * n + j], inv, p);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let sub = mul_mod(u, h[(j + 1) * n + c], p);
                h[r * n + c] = (h[r * n + c] + p - sub) % p;
            }
            for row in 0..n {
                let add = mul_mod(u, h[row * n + r], p);
                h[row * n + j + 1] = (h[row * n + j + 1] + add) % p;
            }
        }
    }
    // polys[m] is the characteristic polynomial of the leading m × m block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - mul_mod(h[m * n + m], c, p)) % p;
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = mul_mod(prod, h[(i + 1) * n + i], p);
            let f = mul_mod(prod, h[i * n + m], p);
            if f == 0 {
                continue;
            }
            for (k, &c) in polys[i].iter().enumerate() {
                next[k] = (next[k] + p - mul_mod(f, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the empty block")
}

/// Coefficients, constant term first, of the polynomial of degree below
/// `ys.len()` taking the value `ys[x]` at `x = 0, 1, ...` over `𝔽_p`.
pub(crate) fn interpolate_mod(ys: &[u64], p: u64) -> Vec<u64> {
    let m = ys.len();
    // Newton divided differences on the nodes 0..m.
    let mut d = ys.to_vec();
    for level in 1..m {
        let inv = pow_mod(level as u64, p - 2, p);
        for i in (level..m).rev() {
            d[i] = mul_mod((d[i] + p - d[i - 1]) % p, inv, p);
        }
    }
    // Horner on the Newton form: c ← c·(x - node) + d[i].
    let mut c = vec![0u64; m];
    for i in (0..m).rev() {
        for k in (1..m).rev() {
            c[k] = (c[k - 1] + p - mul_mod(c[k], i as u64, p)) % p;
        }
        c[0] = (p - mul_mod(c[0], i as u64, p) + d[i]) % p;
    }
    c
}

/// The integer of absolute value below half the product of `primes` with
/// the given residues.
pub(crate) fn crt_symmetric(primes: &[u64], residues: &[u64]) -> BigInt {
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (&p, &r) in primes.iter().zip(residues) {
        let pb = BigInt::from(p);
        let xm: u64 = (&x % &pb).try_into().expect("residue below p");
        let mm: u64 = (&modulus % &pb).try_into().expect("residue below p");
        let delta = mul_mod((r + p - xm) % p, pow_mod(mm, p - 2, p), p);
        x += &modulus * delta;
        modulus *= pb;
    }
    if &x * 2 > modulus {
        x - modulus
    } else {
        x
    }
}

/// Number of tabulated primes whose product exceeds `2^(bits + 1)`.
pub(crate) fn primes_for_bits(bits: u64) -> usize {
    (bits + 2).div_ceil(30) as usize
}

/// Determinant of an integer matrix.
///
/// Falls back to Bareiss elimination if the Hadamard bound needs more
/// primes than are tabulated.
pub fn integer_det(m: &Matrix<BigInt>) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    if m.rows() == 0 {
        return BigInt::one();
    }
    let Some(bits) = hadamard_bits(m) else {
        return BigInt::zero();
    };
    // Each prime exceeds 2³⁰; the modulus must exceed twice the bound.
    let needed = primes_for_bits(bits);
    let table = primes();
    if needed > table.len() {
        return bareiss_det(m).expect("square");
    }
    let residues: Vec<u64> = table[..needed].iter().map(|&p| det_mod(m, p)).collect();
    crt_symmetric(&table[..needed], &residues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_matrix(n: usize, entries: &[i64]) -> Matrix<BigInt> {
        Matrix::from_fn(n, n, |i, j| BigInt::from(entries[i * n + j]))
    }

    #[test]
    fn small_examples() {
        assert_eq!(integer_det(&Matrix::zeros(0, 0)), BigInt::one());
        assert_eq!(integer_det(&int_matrix(2, &[1, 2, 3, 4])), BigInt::from(-2));
        assert_eq!(integer_det(&int_matrix(2, &[0, 0, 3, 4])), BigInt::zero());
        assert_eq!(integer_det(&int_matrix(2, &[2, 4, 1, 2])), BigInt::zero());
        assert!(is_prime_u32(2_147_483_647) && !is_prime_u32(2_147_483_649));
    }

    #[test]
    fn large_entries_need_many_primes() {
        let big = BigInt::from(10).pow(40);
        let m = Matrix::from_fn(3, 3, |i, j| {
            if i == j {
                &big + i
            } else {
                BigInt::from(j as i64)
            }
        });
        assert_eq!(integer_det(&m), bareiss_det(&m).unwrap());
    }

    #[test]
    fn charpoly_mod_small() {
        let p = primes()[0];
        // [[0, 1], [1, 0]] has characteristic polynomial t² - 1.
        assert_eq!(charpoly_mod(vec![0, 1, 1, 0], 2, p), vec![p - 1, 0, 1]);
        assert_eq!(charpoly_mod(vec![], 0, p), vec![1]);
        // A lower triangular matrix needs row and column swaps.
        let c = charpoly_mod(vec![2, 0, 0, 0, 3, 0, 5, 7, 4], 3, p);
        let expect: Vec<u64> = [-24i64, 26, -9, 1]
            .iter()
            .map(|&x| x.rem_euclid(p as i64) as u64)
            .collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn interpolation_mod_recovers_coefficients() {
        let p = primes()[1];
        let coeffs = [5u64, 0, 3, 1];
        let ys: Vec<u64> = (0..4u64)
            .map(|x| {
                coeffs
                    .iter()
                    .rev()
                    .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
            })
            .collect();
        assert_eq!(interpolate_mod(&ys, p), coeffs.to_vec());
    }

    proptest! {
        #[test]
        fn agrees_with_bareiss(n in 1usize..7, seed in proptest::collection::vec(-50i64..50, 36)) {
            let m = int_matrix(n, &seed);
            prop_assert_eq!(integer_det(&m), bareiss_det(&m).unwrap());
        }
    }
}
