//! Word-size modular helpers, primality, Dedekind psi and prime selection.

/// Largest modulus accepted by the word-size field arithmetic.
pub const MAX_MODULUS: u64 = 1 << 61;

#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `p`, or `None` if `gcd(a, p) != 1`.
pub fn invmod(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(p as i128) as u64)
}

/// Reduce a signed integer into `[0, p)`.
pub fn reduce_i64(n: i64, p: u64) -> u64 {
    (n as i128).rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors of `n` by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dedekind psi: `m * prod_{q | m} (1 + 1/q)`, the number of cyclic subgroups of order m.
pub fn psi(m: u64) -> u64 {
    assert!(m >= 1, "psi is defined for m >= 1");
    prime_factors(m)
        .into_iter()
        .fold(m, |acc, q| acc / q * (q + 1))
}

pub fn odd_part(mut n: u64) -> u64 {
    while n > 0 && n % 2 == 0 {
        n /= 2;
    }
    n
}

/// Smallest prime `p > max(after, min_size, 11)` with `p ≡ 3 (mod 4)` and
/// `4·ℓ·N' | p + 1`, where `N'` is the odd part of `N`.
///
/// Such a `p` makes the supersingular curve `y² = x³ + 6x² + x` have full
/// rational ℓ- and N-torsion over F_{p²}.
pub fn next_suitable_prime(ell: u64, level: u64, after: u64, min_size: u64) -> u64 {
    let step = 4 * ell * odd_part(level.max(1));
    let lower = after.max(min_size).max(11);
    // first candidate of the form k·step − 1 strictly above `lower`
    let mut cand = (lower + 1).div_ceil(step) * step - 1;
    if cand <= lower {
        cand += step;
    }
    loop {
        assert!(cand < MAX_MODULUS, "prime search exceeded the supported modulus range");
        if cand % 4 == 3 && is_prime_u64(cand) {
            return cand;
        }
        cand += step;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_values() {
        assert_eq!(psi(1), 1);
        assert_eq!(psi(3), 4);
        assert_eq!(psi(12), 24);
        assert_eq!(psi(2), 3);
    }

    #[test]
    fn prime_scan_examples() {
        assert_eq!(next_suitable_prime(3, 4, 11, 0), 23);
        assert_eq!(next_suitable_prime(5, 4, 11, 0), 19);
        assert_eq!(next_suitable_prime(2, 3, 11, 0), 23);
    }

    #[test]
    fn prime_scan_matches_brute_force() {
        for &(ell, n) in &[(3u64, 1u64), (3, 4), (5, 3), (7, 4), (2, 3), (13, 3)] {
            for after in [11u64, 100, 1000, 5000] {
                let got = next_suitable_prime(ell, n, after, 0);
                let m = 4 * ell * odd_part(n);
                let want = (after + 1..)
                    .find(|&p| p % 4 == 3 && (p + 1) % m == 0 && is_prime_u64(p))
                    .unwrap();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn miller_rabin_against_sieve() {
        let n = 20000;
        let mut sieve = vec![true; n];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..n {
            if sieve[i] {
                for j in (i * i..n).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (i, &s) in sieve.iter().enumerate() {
            assert_eq!(is_prime_u64(i as u64), s, "{i}");
        }
        assert!(is_prime_u64((1 << 61) - 1));
    }

    #[test]
    fn inverse() {
        for a in 1..23 {
            assert_eq!(mulmod(a, invmod(a, 23).unwrap(), 23), 1);
        }
        assert_eq!(invmod(6, 9), None);
    }
}
