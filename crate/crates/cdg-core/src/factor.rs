//! Exact 64-bit factorization: deterministic Miller–Rabin primality plus
//! Pollard's rho with Brent cycle detection after bounded trial division.

use alloc::vec::Vec;
use core::fmt;

/// Errors from [`factorize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorError {
    /// Inputs below 2 have no prime factorization.
    InputTooSmall(u64),
}

impl fmt::Display for FactorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorError::InputTooSmall(m) => write!(f, "cannot factor {m}: input must be >= 2"),
        }
    }
}

impl core::error::Error for FactorError {}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the witness set decides primality exactly
/// for all inputs below 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Brent-style rho: returns a nontrivial factor of composite odd `n`.
fn rho_brent(n: u64) -> u64 {
    debug_assert!(n % 2 == 1 && n > 3 && !is_prime(n));
    let mut c = 1u64;
    loop {
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let mut q = 1u64;
        let mut r = 1u64;
        let mut ys = y;
        while d == 1 {
            x = y;
            for _ in 0..r {
                y = mul_mod(y, y, n).wrapping_add(c) % n;
            }
            let mut k = 0u64;
            while k < r && d == 1 {
                ys = y;
                let batch = 128.min(r - k);
                for _ in 0..batch {
                    y = mul_mod(y, y, n).wrapping_add(c) % n;
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                d = gcd(q, n);
                k += batch;
            }
            r *= 2;
        }
        if d == n {
            // Backtrack one step at a time to recover the factor.
            loop {
                ys = mul_mod(ys, ys, n).wrapping_add(c) % n;
                d = gcd(x.abs_diff(ys), n);
                if d > 1 {
                    break;
                }
            }
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Prime factorization with multiplicity, ascending. The product of the
/// returned primes equals the input.
pub fn factorize(m: u64) -> Result<Vec<u64>, FactorError> {
    if m < 2 {
        return Err(FactorError::InputTooSmall(m));
    }
    let mut rest = m;
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        while rest.is_multiple_of(p) {
            out.push(p);
            rest /= p;
        }
    }
    let mut d = 7u64;
    let mut step = [4u64, 2, 4, 2, 4, 6, 2, 6].iter().cycle();
    while d <= TRIAL_LIMIT && d * d <= rest {
        while rest.is_multiple_of(d) {
            out.push(d);
            rest /= d;
        }
        d += step.next().unwrap();
    }
    if rest > 1 {
        split(rest, &mut out);
    }
    out.sort_unstable();
    Ok(out)
}

fn split(n: u64, out: &mut Vec<u64>) {
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho_brent(n);
    split(d, out);
    split(n / d, out);
}

/// Distinct prime divisors, ascending.
pub fn distinct_primes(m: u64) -> Result<Vec<u64>, FactorError> {
    let mut fs = factorize(m)?;
    fs.dedup();
    Ok(fs)
}
