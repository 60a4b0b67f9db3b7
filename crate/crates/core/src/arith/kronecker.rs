//! Exact products and quotients in Z[d][t] by Kronecker substitution.
//!
//! A polynomial `Σ a_{ij} tⁱ dʲ` is packed into the integer `Σ a_{ij} 2^{64L(iW + j)}`,
//! multiplied or divided with subquadratic big-integer arithmetic, and unpacked
//! with balanced digits. Slot sizes are chosen so unpacking is injective; quotients
//! are re-checked against the dividend before being returned.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use rug::integer::Order;
use rug::Integer;

use super::poly::Poly;
use crate::error::{Error, Result};

/// A polynomial in `t` whose coefficients are polynomials in `d`.
pub type ZdtPoly = Poly<Poly<BigInt>>;

fn d_degree(a: &ZdtPoly) -> usize {
    a.coeffs().iter().filter_map(|c| c.degree()).max().unwrap_or(0)
}

fn max_bits(a: &ZdtPoly) -> u64 {
    a.coeffs().iter().flat_map(|c| c.coeffs().iter().map(|x| x.bits())).max().unwrap_or(0)
}

fn term_count(a: &ZdtPoly) -> usize {
    a.coeffs().iter().map(|c| c.coeffs().len()).sum()
}

fn ceil_log2(n: usize) -> u64 {
    (usize::BITS - n.max(1).saturating_sub(1).leading_zeros()) as u64
}

/// Layout: `w` d-slots per t-coefficient, `l` limbs per slot.
#[derive(Clone, Copy)]
struct Layout {
    w: usize,
    l: usize,
}

impl Layout {
    fn capacity_bits(self) -> u64 {
        64 * self.l as u64 - 1
    }
}

fn pack(a: &ZdtPoly, lay: Layout) -> Integer {
    let n = a.coeffs().len() * lay.w * lay.l;
    let mut pos = vec![0u64; n];
    let mut neg = vec![0u64; n];
    let mut any_neg = false;
    for (i, c) in a.coeffs().iter().enumerate() {
        for (j, x) in c.coeffs().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let base = (i * lay.w + j) * lay.l;
            let (sign, digits) = x.to_u64_digits();
            debug_assert!(digits.len() <= lay.l);
            let dst = if sign == Sign::Minus {
                any_neg = true;
                &mut neg
            } else {
                &mut pos
            };
            dst[base..base + digits.len()].copy_from_slice(&digits);
        }
    }
    let p = Integer::from_digits(&pos, Order::Lsf);
    if any_neg {
        p - Integer::from_digits(&neg, Order::Lsf)
    } else {
        p
    }
}

fn biguint_from_u64(limbs: &[u64]) -> BigUint {
    let mut v = Vec::with_capacity(limbs.len() * 2);
    for &x in limbs {
        v.push(x as u32);
        v.push((x >> 32) as u32);
    }
    BigUint::new(v)
}

/// Balanced-digit unpacking into `t_len` t-coefficients of `lay.w` d-slots.
fn unpack(x: &Integer, t_len: usize, lay: Layout) -> Option<ZdtPoly> {
    let negative = *x < 0;
    let mut limbs = x.as_abs().to_digits::<u64>(Order::Lsf);
    let slots = t_len * lay.w;
    if limbs.len() > slots * lay.l {
        return None;
    }
    limbs.resize(slots * lay.l + 1, 0);
    let mut carry = 0u64;
    let mut rows = Vec::with_capacity(t_len);
    let mut row = Vec::with_capacity(lay.w);
    for s in 0..slots {
        let chunk = &mut limbs[s * lay.l..(s + 1) * lay.l];
        // add the incoming carry
        let mut c = carry;
        for limb in chunk.iter_mut() {
            if c == 0 {
                break;
            }
            let (v, o) = limb.overflowing_add(c);
            *limb = v;
            c = o as u64;
        }
        let wrapped = c == 1; // chunk overflowed to exactly 2^{64L}
        let top = chunk[lay.l - 1] >> 63 == 1;
        let digit = if wrapped {
            carry = 1;
            BigInt::zero()
        } else if top {
            // value − 2^{64L}
            let mut comp: Vec<u64> = chunk.iter().map(|v| !v).collect();
            for limb in comp.iter_mut() {
                let (v, o) = limb.overflowing_add(1);
                *limb = v;
                if !o {
                    break;
                }
            }
            carry = 1;
            -BigInt::from(biguint_from_u64(&comp))
        } else {
            carry = 0;
            BigInt::from(biguint_from_u64(chunk))
        };
        row.push(if negative { -digit } else { digit });
        if row.len() == lay.w {
            rows.push(Poly::new(std::mem::take(&mut row)));
        }
    }
    if carry != 0 || limbs[slots * lay.l] != 0 {
        return None;
    }
    Some(Poly::new(rows))
}

/// `a·b` in Z[d][t].
pub fn zdt_mul(a: &ZdtPoly, b: &ZdtPoly) -> ZdtPoly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let bits = max_bits(a) + max_bits(b) + ceil_log2(term_count(a).min(term_count(b))) + 1;
    let lay = Layout { w: d_degree(a) + d_degree(b) + 1, l: bits.div_ceil(64) as usize + 1 };
    let prod = Integer::from(pack(a, lay) * pack(b, lay));
    unpack(&prod, a.coeffs().len() + b.coeffs().len() - 1, lay).expect("slots sized for the product")
}

/// Exact quotient `a / b` in Z[d][t]; `NonExactDivision` unless `a = q·b` with `q ∈ Z[d][t]`.
pub fn zdt_div_exact(a: &ZdtPoly, b: &ZdtPoly) -> Result<ZdtPoly> {
    if b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a.is_zero() {
        return Ok(Poly::zero());
    }
    let (na, nb) = (a.coeffs().len(), b.coeffs().len());
    let (da, db) = (d_degree(a), d_degree(b));
    if na < nb || da < db {
        return Err(Error::NonExactDivision);
    }
    let nq = na - nb + 1;
    let w = da + 1;
    let mut extra = 64u64;
    for _ in 0..6 {
        let lay = Layout { w, l: (max_bits(a) + extra).div_ceil(64) as usize + 1 };
        let ka = pack(a, lay);
        let kb = pack(b, lay);
        let kq = Integer::from(ka.div_exact_ref(&kb));
        if Integer::from(&kq * &kb) == ka {
            if let Some(q) = unpack(&kq, nq, lay) {
                // injectivity: q·b must fit the slots, and degrees must fit the layout
                let prod_bits = max_bits(&q) + max_bits(b) + ceil_log2(term_count(&q).min(term_count(b))) + 1;
                if prod_bits <= lay.capacity_bits() && d_degree(&q) + db < w {
                    return Ok(q);
                }
            }
        }
        extra *= 4;
    }
    Err(Error::NonExactDivision)
}
