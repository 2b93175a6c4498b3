//! Exact arithmetic in the real cyclotomic field `Q(2 cos(pi/L))`.
//!
//! Every form value `-cos(pi/m)` of a Coxeter matrix with finite labels
//! dividing `L` lives in this field. Elements are polynomials in the primitive
//! element `c = 2 cos(pi/L)` reduced modulo its minimal polynomial, so the zero
//! test is purely algebraic. Signs of nonzero elements are decided by evaluating
//! on a rational isolating interval of `c`, refined on demand.

mod poly;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::label::Label;

pub use poly::{cyclotomic, dickson, min_poly_two_cos_pi_over, IntPoly, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field context mismatch: level {0} vs level {1}")]
    ContextMismatch(u32, u32),
    #[error("field too small: cos(pi/{label}) is not available at level {level}")]
    FieldTooSmall { label: u32, level: u32 },
    #[error("invalid label {0}; finite labels must be at least 2")]
    InvalidLabel(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field `Q(c)` with `c = 2 cos(pi / level)`.
pub struct FieldContext {
    level: u32,
    degree: usize,
    minpoly: IntPoly,
    minpoly_q: RatPoly,
    /// `x^(degree + k) mod minpoly` for `k < degree - 1`.
    reduce_table: Vec<RatPoly>,
    approx: f64,
    /// For degree two: `c = h + sqrt(disc)` with rational `h`, `disc > 0`.
    quadratic: Option<(BigRational, BigRational)>,
    interval: Mutex<(BigRational, BigRational)>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("level", &self.level)
            .field("degree", &self.degree)
            .field("minpoly", &self.minpoly)
            .finish()
    }
}

static CONTEXTS: LazyLock<Mutex<HashMap<u32, Arc<FieldContext>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Level needed to house `cos(pi/m)` for each label: the lcm of the labels whose
/// cosine is irrational. Labels 2 and 3 have rational cosines.
pub fn level_for_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<u32, FieldError> {
    let mut level = 1u32;
    for m in labels {
        if m < 2 {
            return Err(FieldError::InvalidLabel(m));
        }
        if m > 3 {
            level = level.lcm(&m);
        }
    }
    Ok(level)
}

/// Context whose field contains `cos(pi/m)` for every input label.
pub fn make_context<I: IntoIterator<Item = u32>>(labels: I) -> Result<Arc<FieldContext>, FieldError> {
    Ok(context_for_level(level_for_labels(labels)?))
}

/// Shared context for `Q(2 cos(pi/level))`; contexts are cached per level.
pub fn context_for_level(level: u32) -> Arc<FieldContext> {
    assert!(level >= 1);
    let mut cache = CONTEXTS.lock().unwrap();
    cache
        .entry(level)
        .or_insert_with(|| Arc::new(FieldContext::build(level)))
        .clone()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl FieldContext {
    fn build(level: u32) -> FieldContext {
        let minpoly = min_poly_two_cos_pi_over(level);
        let degree = minpoly.len() - 1;
        let minpoly_q = poly::to_rat(&minpoly);
        let approx = 2.0 * (std::f64::consts::PI / level as f64).cos();

        // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
        let mut reduce_table: Vec<RatPoly> = Vec::new();
        if degree > 1 {
            let mut cur: RatPoly = minpoly_q[..degree].iter().map(|c| -c).collect();
            cur.resize(degree, BigRational::zero());
            for _ in 0..degree - 1 {
                reduce_table.push(cur.clone());
                // multiply by x and reduce
                let top = cur[degree - 1].clone();
                let mut next = vec![BigRational::zero(); degree];
                for i in (1..degree).rev() {
                    next[i] = cur[i - 1].clone();
                }
                if !top.is_zero() {
                    for i in 0..degree {
                        next[i] -= &top * &minpoly_q[i];
                    }
                }
                cur = next;
            }
        }

        let quadratic = (degree == 2).then(|| {
            // x^2 + p x + q, c is the larger root
            let p = &minpoly_q[1];
            let q = &minpoly_q[0];
            let h = -p / BigRational::from_integer(2.into());
            let disc = &h * &h - q;
            (h, disc)
        });

        let interval = if degree <= 1 {
            let exact = -&minpoly_q[0];
            (exact.clone(), exact)
        } else {
            isolating_interval_for(level, &minpoly_q)
        };

        FieldContext {
            level,
            degree,
            minpoly,
            minpoly_q,
            reduce_table,
            approx,
            quadratic,
            interval: Mutex::new(interval),
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn minimal_polynomial(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn isolating_interval(&self) -> (BigRational, BigRational) {
        self.interval.lock().unwrap().clone()
    }

    /// Approximate value of the primitive element.
    pub fn approx_generator(&self) -> f64 {
        self.approx
    }

    pub fn is_rational(&self) -> bool {
        self.degree == 1
    }

    /// Whether `cos(pi/m)` lies in this field under the level construction.
    pub fn contains_label(&self, m: u32) -> bool {
        m == 1 || m == 2 || m == 3 || self.level % m == 0
    }

    fn reduce(&self, mut p: RatPoly) -> Vec<BigRational> {
        let d = self.degree;
        if p.len() > d {
            if d == 1 {
                let c = -&self.minpoly_q[0];
                let v = poly::eval_rat(&p, &c);
                p = vec![v];
            } else {
                let high: Vec<BigRational> = p.drain(d..).collect();
                p.resize(d, BigRational::zero());
                for (k, coef) in high.into_iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    for (i, t) in self.reduce_table[k].iter().enumerate() {
                        if !t.is_zero() {
                            p[i] += &coef * t;
                        }
                    }
                }
            }
        }
        poly::trim(&mut p);
        p
    }

    fn elem(self: &Arc<Self>, coeffs: Vec<BigRational>) -> FieldElem {
        let coeffs = self.reduce(coeffs);
        FieldElem {
            ctx: self.clone(),
            coeffs,
        }
    }

    pub fn zero(self: &Arc<Self>) -> FieldElem {
        FieldElem {
            ctx: self.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElem {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> FieldElem {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(self: &Arc<Self>, n: i64, d: i64) -> FieldElem {
        self.from_rational(rat(n, d))
    }

    pub fn from_rational(self: &Arc<Self>, q: BigRational) -> FieldElem {
        self.elem(vec![q])
    }

    /// Element from coefficients in the power basis of `c`.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<BigRational>) -> FieldElem {
        self.elem(coeffs)
    }

    /// The primitive element `c = 2 cos(pi / level)`.
    pub fn generator(self: &Arc<Self>) -> FieldElem {
        self.elem(vec![BigRational::zero(), BigRational::one()])
    }

    /// Evaluates an integer polynomial at a field element.
    pub fn eval_int_poly(self: &Arc<Self>, p: &[BigInt], x: &FieldElem) -> FieldElem {
        let mut acc = self.zero();
        for c in p.iter().rev() {
            acc = &(&acc * x) + &self.from_rational(BigRational::from_integer(c.clone()));
        }
        acc
    }

    /// `2 cos(pi / m)`, expressed through the Dickson polynomial `D_{level/m}(c)`.
    pub fn two_cos_pi_over(self: &Arc<Self>, m: u32) -> Result<FieldElem, FieldError> {
        match m {
            0 => Err(FieldError::InvalidLabel(0)),
            1 => Ok(self.from_int(-2)),
            2 => Ok(self.zero()),
            3 => Ok(self.one()),
            _ if self.level % m != 0 => Err(FieldError::FieldTooSmall {
                label: m,
                level: self.level,
            }),
            _ => {
                let d = dickson(self.level / m);
                Ok(self.eval_int_poly(&d, &self.generator()))
            }
        }
    }

    /// Form value `<alpha_s, alpha_t>` for label `m(s,t)`: `-cos(pi/m)`, with
    /// `m = 1` giving the diagonal `1` and `m = oo` giving `-1`.
    pub fn form_entry(self: &Arc<Self>, m: Label) -> Result<FieldElem, FieldError> {
        match m {
            Label::Infinite => Ok(self.from_int(-1)),
            Label::Finite(1) => Ok(self.one()),
            Label::Finite(0) => Err(FieldError::InvalidLabel(0)),
            Label::Finite(m) => {
                let two_cos = self.two_cos_pi_over(m)?;
                Ok(-(&two_cos * &self.from_ratio(1, 2)))
            }
        }
    }

    fn sign_of_coeffs(&self, coeffs: &[BigRational]) -> Sign {
        if coeffs.is_empty() {
            return Sign::Zero;
        }
        if coeffs.len() == 1 {
            return rational_sign(&coeffs[0]);
        }
        if let Some((h, disc)) = &self.quadratic {
            // a + b c = (a + b h) + b sqrt(disc)
            let u = &coeffs[0] + &coeffs[1] * h;
            let v = coeffs[1].clone();
            return sign_of_surd(&u, &v, disc);
        }
        self.sign_by_interval(coeffs)
    }

    fn sign_by_interval(&self, coeffs: &[BigRational]) -> Sign {
        let mut guard = self.interval.lock().unwrap();
        loop {
            let (lo, hi) = &*guard;
            // lo > 0 whenever the degree exceeds two, so powers are monotone.
            let mut lower = BigRational::zero();
            let mut upper = BigRational::zero();
            let mut plo = BigRational::one();
            let mut phi = BigRational::one();
            for a in coeffs {
                if a.is_positive() {
                    lower += a * &plo;
                    upper += a * &phi;
                } else if a.is_negative() {
                    lower += a * &phi;
                    upper += a * &plo;
                }
                plo = &plo * lo;
                phi = &phi * hi;
            }
            if lower.is_positive() {
                return Sign::Positive;
            }
            if upper.is_negative() {
                return Sign::Negative;
            }
            let refined = self.bisect(lo.clone(), hi.clone(), 12);
            *guard = refined;
        }
    }

    fn bisect(&self, mut lo: BigRational, mut hi: BigRational, steps: usize) -> (BigRational, BigRational) {
        let slo = rational_sign(&poly::eval_rat(&self.minpoly_q, &lo));
        let two = BigRational::from_integer(2.into());
        for _ in 0..steps {
            let mid = (&lo + &hi) / &two;
            let smid = rational_sign(&poly::eval_rat(&self.minpoly_q, &mid));
            if smid == Sign::Zero {
                return (mid.clone(), mid);
            }
            if smid == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo, hi)
    }
}

/// Rational interval `(lo, hi]` around `2 cos(pi/k)` narrower than the gap to
/// every other root of its minimal polynomial, certified by a Sturm count.
fn isolating_interval_for(k: u32, minpoly: &[BigRational]) -> (BigRational, BigRational) {
    let approx = 2.0 * (std::f64::consts::PI / k as f64).cos();
    let l = k as u64;
    let mut gap = f64::INFINITY;
    for j in (3..l).step_by(2) {
        if j.gcd(&l) != 1 {
            continue;
        }
        let other = 2.0 * (std::f64::consts::PI * j as f64 / k as f64).cos();
        gap = gap.min((approx - other).abs());
    }
    let delta = if gap.is_finite() { gap / 4.0 } else { 0.25 };
    let lo = BigRational::from_f64(approx - delta).unwrap();
    let hi = BigRational::from_f64(approx + delta).unwrap();
    let count = poly::sturm_count(minpoly, &lo, &hi);
    assert_eq!(count, 1, "interval for 2cos(pi/{k}) is not isolating");
    (lo, hi)
}

fn rational_sign(q: &BigRational) -> Sign {
    if q.is_positive() {
        Sign::Positive
    } else if q.is_negative() {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

/// Sign of `u + v sqrt(d)` for rational `u, v` and rational `d > 0`.
fn sign_of_surd(u: &BigRational, v: &BigRational, d: &BigRational) -> Sign {
    let su = rational_sign(u);
    let sv = rational_sign(v);
    match (su, sv) {
        (Sign::Zero, s) | (s, Sign::Zero) => s,
        (a, b) if a == b => a,
        _ => {
            let uu = u * u;
            let vv = v * v * d;
            match uu.cmp(&vv) {
                Ordering::Greater => su,
                Ordering::Less => sv,
                Ordering::Equal => Sign::Zero,
            }
        }
    }
}

/// Element of `Q(2 cos(pi/L))`.
#[derive(Clone)]
pub struct FieldElem {
    ctx: Arc<FieldContext>,
    coeffs: Vec<BigRational>,
}

impl FieldElem {
    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn level(&self) -> u32 {
        self.ctx.level
    }

    /// Coefficients in the power basis of the primitive element, trailing zeros removed.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn sign(&self) -> Sign {
        self.ctx.sign_of_coeffs(&self.coeffs)
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    fn check(&self, other: &FieldElem) -> Result<(), FieldError> {
        if self.ctx.level != other.ctx.level {
            Err(FieldError::ContextMismatch(self.ctx.level, other.ctx.level))
        } else {
            Ok(())
        }
    }

    pub fn inverse(&self) -> Result<FieldElem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(self.ctx.from_rational(self.coeffs[0].recip()));
        }
        // Extended Euclid on (self, minpoly): s * self + t * minpoly = g, g constant.
        let mut r0: RatPoly = self.ctx.minpoly_q.clone();
        let mut r1: RatPoly = self.coeffs.clone();
        let mut s0: RatPoly = Vec::new();
        let mut s1: RatPoly = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, r) = poly::rat_divrem(&r0, &r1);
            let s = poly::rat_sub(&s0, &poly::rat_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // minpoly irreducible, so the final remainder is a nonzero constant
        let g = r1[0].clone();
        let inv: RatPoly = s1.into_iter().map(|c| c / &g).collect();
        Ok(self.ctx.elem(inv))
    }

    /// Exact arithmetic with explicit error reporting.
    pub fn arith(&self, op: ArithOp, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.check(other)?;
        Ok(match op {
            ArithOp::Add => self.add_raw(other),
            ArithOp::Sub => self.sub_raw(other),
            ArithOp::Mul => self.mul_raw(other),
            ArithOp::Div => self.mul_raw(&other.inverse()?),
        })
    }

    fn add_raw(&self, other: &FieldElem) -> FieldElem {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        poly::trim(&mut out);
        FieldElem {
            ctx: self.ctx.clone(),
            coeffs: out,
        }
    }

    fn sub_raw(&self, other: &FieldElem) -> FieldElem {
        self.add_raw(&other.neg_raw())
    }

    fn neg_raw(&self) -> FieldElem {
        FieldElem {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul_raw(&self, other: &FieldElem) -> FieldElem {
        if self.is_zero() || other.is_zero() {
            return self.ctx.zero();
        }
        if self.coeffs.len() == 1 && other.coeffs.len() == 1 {
            return self.ctx.from_rational(&self.coeffs[0] * &other.coeffs[0]);
        }
        self.ctx.elem(poly::rat_mul(&self.coeffs, &other.coeffs))
    }

    /// Floating approximation, for display and diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let c = self.ctx.approx;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, q| acc * c + q.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact test `self == 2 cos(pi/k)`: the element must be a root of the
    /// minimal polynomial of `2 cos(pi/k)` lying in its isolating interval.
    pub fn equals_two_cos_pi_over(&self, k: u32) -> bool {
        match k {
            0 => false,
            1 => *self == self.ctx.from_int(-2),
            2 => self.is_zero(),
            3 => self.is_one(),
            _ => {
                let p = min_poly_two_cos_pi_over(k);
                if !self.ctx.eval_int_poly(&p, self).is_zero() {
                    return false;
                }
                let (lo, hi) = isolating_interval_for(k, &poly::to_rat(&p));
                let lo = self.ctx.from_rational(lo);
                let hi = self.ctx.from_rational(hi);
                (self - &lo).is_positive() && !(&hi - self).is_negative()
            }
        }
    }

    pub fn abs(&self) -> FieldElem {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.level == other.ctx.level && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.level.hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order. Panics on context mismatch.
impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $raw:ident) => {
        impl $tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                assert_eq!(self.ctx.level, rhs.ctx.level, "field context mismatch");
                self.$raw(rhs)
            }
        }
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, add_raw);
binop!(Sub, sub, sub_raw);
binop!(Mul, mul, mul_raw);

impl Div<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero; use [`FieldElem::arith`] for a checked variant.
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self.arith(ArithOp::Div, rhs).expect("field division failed")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_raw()
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_raw()
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Symbol used for the primitive element: `r2` for `sqrt 2`, `r3` for
/// `sqrt 3`, otherwise `c<L>` for `2cos(pi/L)`.
pub fn generator_symbol(level: u32) -> String {
    match level {
        4 => "r2".to_string(),
        6 => "r3".to_string(),
        l => format!("c{l}"),
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = generator_symbol(self.ctx.level);
        let mut first = true;
        for (i, q) in self.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let a = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => sym.clone(),
                _ => format!("{sym}^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}
