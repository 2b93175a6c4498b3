//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficient vectors are ascending (`p[i]` is the coefficient of `x^i`) and
//! carry no trailing zeros, so the zero polynomial is the empty vector.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntPoly = Vec<BigInt>;
pub type RatPoly = Vec<BigRational>;

pub fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn to_rat(p: &[BigInt]) -> RatPoly {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn int_sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out: IntPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn int_shift_mul_x(a: &[BigInt]) -> IntPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero()];
    out.extend(a.iter().cloned());
    out
}

/// Exact division by a monic integer polynomial. Panics if the division leaves a remainder.
fn int_div_exact_monic(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    assert!(b[db].is_one(), "divisor must be monic");
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        assert!(rem.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); rem.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        q[k] = c;
    }
    trim(&mut rem);
    assert!(rem.is_empty(), "inexact polynomial division");
    trim(&mut q);
    q
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: u32) -> IntPoly {
    fn go(n: u32, memo: &mut HashMap<u32, IntPoly>) -> IntPoly {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        // x^n - 1 divided by every proper divisor's cyclotomic polynomial.
        let mut p = vec![BigInt::zero(); n as usize + 1];
        p[0] = -BigInt::one();
        p[n as usize] = BigInt::one();
        for d in 1..n {
            if n % d == 0 {
                let q = go(d, memo);
                p = int_div_exact_monic(&p, &q);
            }
        }
        memo.insert(n, p.clone());
        p
    }
    go(n, &mut HashMap::new())
}

/// Dickson polynomials `D_k(x)` with `D_k(z + 1/z) = z^k + z^-k`.
pub fn dickson(k: u32) -> IntPoly {
    let mut prev: IntPoly = vec![BigInt::from(2)];
    if k == 0 {
        return prev;
    }
    let mut cur: IntPoly = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..k {
        let next = int_sub(&int_shift_mul_x(&cur), &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Minimal polynomial of `2 cos(pi / k)` over the rationals, monic with integer coefficients.
pub fn min_poly_two_cos_pi_over(k: u32) -> IntPoly {
    assert!(k >= 1);
    if k == 1 {
        // 2 cos(pi) = -2
        return vec![BigInt::from(2), BigInt::one()];
    }
    let phi = cyclotomic(2 * k);
    let deg = phi.len() - 1;
    debug_assert!(deg % 2 == 0);
    let d = deg / 2;
    // z^-d * Phi(z) = a_d + sum_{j>=1} a_{d+j} (z^j + z^-j)
    let mut out: IntPoly = vec![phi[d].clone()];
    for j in 1..=d {
        let c = &phi[d + j];
        if c.is_zero() {
            continue;
        }
        let dj = dickson(j as u32);
        if out.len() < dj.len() {
            out.resize(dj.len(), BigInt::zero());
        }
        for (i, v) in dj.iter().enumerate() {
            out[i] += c * v;
        }
    }
    trim(&mut out);
    out
}

pub fn eval_rat(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn rat_sub(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out: RatPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

pub fn rat_mul(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Polynomial division with remainder; `b` must be nonzero.
pub fn rat_divrem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); rem.len() - db];
    for k in (0..q.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        q[k] = c;
    }
    trim(&mut rem);
    trim(&mut q);
    (q, rem)
}

pub fn derivative(p: &[BigRational]) -> RatPoly {
    let mut out: RatPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

/// Number of distinct real roots of a squarefree `p` in the half-open interval `(lo, hi]`.
pub fn sturm_count(p: &[BigRational], lo: &BigRational, hi: &BigRational) -> usize {
    let mut seq: Vec<RatPoly> = vec![p.to_vec(), derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let (_, r) = rat_divrem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    let changes = |x: &BigRational| {
        let signs: Vec<i8> = seq
            .iter()
            .map(|q| {
                let v = eval_rat(q, x);
                if v.is_positive() {
                    1
                } else if v.is_negative() {
                    -1
                } else {
                    0
                }
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(lo).saturating_sub(changes(hi))
}
