//! Point evaluation and printing of Φ(x, Y).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use modpoly_core::arith::primes::is_prime_u64;
use modpoly_core::arith::{BivarIntPoly, Fp, Poly, Ring, ZOmega};
use modpoly_core::{Error, Result};

/// Printed result: the value at (x, y), or the univariate Φ(x, Y).
pub fn evaluate(phi: &BivarIntPoly, x: &str, y: Option<&str>, prime: Option<u64>) -> Result<String> {
    let x: ZOmega = x.parse()?;
    let y: Option<ZOmega> = y.map(str::parse).transpose()?;
    if let Some(p) = prime {
        if !is_prime_u64(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        let to_fp = |z: &ZOmega| {
            if z.b.is_zero() {
                Ok(Fp::from_bigint(&z.a, p))
            } else {
                Err(Error::Parse("w-values cannot be reduced mod p; use integers with --prime".into()))
            }
        };
        let f = phi.specialize_x_in(&to_fp(&x)?, |c| Fp::from_bigint(c, p));
        return Ok(match y {
            Some(y) => f.eval(&to_fp(&y)?).value().to_string(),
            None => format_poly(&f, |c| (false, c.value().to_string())),
        });
    }
    let integral = x.b.is_zero() && y.as_ref().map_or(true, |y| y.b.is_zero());
    if integral {
        let f = phi.specialize_x(&x.a);
        return Ok(match y {
            Some(y) => f.eval(&y.a).to_string(),
            None => with_power_form(format_poly(&f, int_term), &f, |r| ZOmega::from_int(r.clone())),
        });
    }
    let f = phi.specialize_x_in(&x, |c| ZOmega::from_int(c.clone()));
    Ok(match y {
        Some(y) => f.eval(&y).to_string(),
        None => with_power_form(format_poly(&f, omega_term), &f, Clone::clone),
    })
}

fn int_term(c: &BigInt) -> (bool, String) {
    (c.is_negative(), c.abs().to_string())
}

fn omega_term(c: &ZOmega) -> (bool, String) {
    if c.b.is_zero() {
        int_term(&c.a)
    } else if c.a.is_zero() {
        (c.b.is_negative(), format!("{}*w", c.b.abs()))
    } else {
        (false, format!("({c})"))
    }
}

/// `c_n*Y^n + ... + c_0`, highest degree first; `term` gives sign and magnitude.
pub fn format_poly<T: Ring>(f: &Poly<T>, term: impl Fn(&T) -> (bool, String)) -> String {
    let mut out = String::new();
    for (k, c) in f.coeffs().iter().enumerate().rev() {
        if c.eq_zero() {
            continue;
        }
        let (neg, mag) = term(c);
        let mono = match k {
            0 => String::new(),
            1 => "Y".to_string(),
            _ => format!("Y^{k}"),
        };
        let body = match (mag.as_str(), k) {
            (m, 0) => m.to_string(),
            ("1", _) => mono,
            (m, _) => format!("{m}*{mono}"),
        };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&body),
            (true, true) => out.push_str(&format!("-{body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
            (false, true) => out.push_str(&format!(" - {body}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Appends `= (Y - r)^n` when the monic polynomial is a pure power of a linear factor.
fn with_power_form<T: Ring + std::fmt::Display>(s: String, f: &Poly<T>, to_omega: impl Fn(&T) -> ZOmega) -> String {
    let Some(n) = f.degree().filter(|&n| n > 0) else { return s };
    let coeffs: Vec<ZOmega> = f.coeffs().iter().map(&to_omega).collect();
    if coeffs[n] != ZOmega::from_int(BigInt::one()) {
        return s;
    }
    // root r = −c_{n−1}/n
    let Some(r) = (-coeffs[n - 1].clone()).try_div(&ZOmega::from_int(BigInt::from(n))) else { return s };
    let lin = Poly::new(vec![-r.clone(), ZOmega::from_int(BigInt::one())]);
    if lin.pow(n as u32, &ZOmega::from_int(BigInt::one())).coeffs() != &coeffs[..] {
        return s;
    }
    let root = if r.eq_zero() {
        "Y".to_string()
    } else {
        let (neg, mag) = omega_power(&r).unwrap_or_else(|| omega_term(&r));
        format!("(Y {} {mag})", if neg { '+' } else { '-' })
    };
    format!("{s}\n= {root}^{n}")
}

/// `r = c·w^i` with integer `c`, as sign and `|c|*w^i`.
fn omega_power(r: &ZOmega) -> Option<(bool, String)> {
    (0..3u64).find_map(|i| {
        // r·w^(3−i) is an integer exactly when r = c·w^i
        let c = r.clone() * ZOmega::omega().powu((3 - i) % 3);
        c.b.is_zero().then(|| {
            let mag = c.a.abs();
            (c.a.is_negative(), match i {
                0 => mag.to_string(),
                1 => format!("{mag}*w"),
                _ => format!("{mag}*w^{i}"),
            })
        })
    })
}
