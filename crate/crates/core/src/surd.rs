//! Exact arithmetic in the field Q(sqrt2, sqrt3).
//!
//! Every scalar is stored on the basis (1, sqrt2, sqrt3, sqrt6) with
//! `BigRational` coordinates.  This field is big enough for all the exact
//! geometry in this crate: cosines of the dihedral angles pi/m for
//! m in {2,3,4,6,12}, the polytope normal fixtures, and the eighth-root
//! cosine values cos(k*pi/4).

use crate::arith::hpreal::HighPrecisionReal;
use crate::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element a + b*sqrt2 + c*sqrt3 + d*sqrt6 of Q(sqrt2, sqrt3).
#[derive(Clone, PartialEq, Eq)]
pub struct SurdScalar {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl SurdScalar {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        SurdScalar { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(a: BigRational) -> Self {
        SurdScalar {
            a,
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn sqrt2() -> Self {
        SurdScalar {
            a: BigRational::zero(),
            b: BigRational::one(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    pub fn sqrt3() -> Self {
        SurdScalar {
            a: BigRational::zero(),
            b: BigRational::zero(),
            c: BigRational::one(),
            d: BigRational::zero(),
        }
    }

    pub fn sqrt6() -> Self {
        SurdScalar {
            a: BigRational::zero(),
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::one(),
        }
    }

    /// `r * sqrt(k)` for square-free k in {1, 2, 3, 6}; `None` otherwise.
    pub fn rational_times_sqrt(r: BigRational, k: u64) -> Option<Self> {
        let mut out = Self::zero();
        match k {
            1 => out.a = r,
            2 => out.b = r,
            3 => out.c = r,
            6 => out.d = r,
            _ => return None,
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Exact rational value, if the surd parts vanish.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    /// Field automorphism sqrt2 -> -sqrt2 (and hence sqrt6 -> -sqrt6).
    pub fn conj2(&self) -> Self {
        SurdScalar {
            a: self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Field automorphism sqrt3 -> -sqrt3 (and hence sqrt6 -> -sqrt6).
    pub fn conj3(&self) -> Self {
        SurdScalar {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Multiplicative inverse.  Panics on zero (callers check first).
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero SurdScalar");
        // x * conj2(x) * conj3(x) * conj2(conj3(x)) is the field norm, a
        // nonzero rational; divide the product of the three conjugates by it.
        let c2 = self.conj2();
        let c3 = self.conj3();
        let c23 = c2.conj3();
        let prod = c2.clone() * c3.clone() * c23;
        let norm = (self.clone() * prod.clone())
            .as_rational()
            .expect("field norm must be rational");
        assert!(!norm.is_zero());
        prod.mul_rational(&norm.recip())
    }

    pub fn mul_rational(&self, r: &BigRational) -> Self {
        SurdScalar {
            a: &self.a * r,
            b: &self.b * r,
            c: &self.c * r,
            d: &self.d * r,
        }
    }

    /// Exact square root within the field, when one exists with at most two
    /// basis components (covers every radicand this crate meets).  Requires
    /// the value to be a square of a field element of shape u + v*sqrt(k).
    pub fn try_sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Pure rational radicand: sqrt(p/q) = sqrt(p*q)/q with the square
        // part pulled out; representable iff the square-free part is 1,2,3,6.
        if let Some(r) = self.as_rational() {
            if r.is_negative() {
                return None;
            }
            let num = r.numer().magnitude().clone();
            let den = r.denom().magnitude().clone();
            let (ns, nf) = square_free_split(&num);
            let (ds, df) = square_free_split(&den);
            // sqrt(num/den) = (ns/ds) * sqrt(nf/df) = (ns/(ds*df)) * sqrt(nf*df)
            let k = &nf * &df;
            let kf: u64 = match u64::try_from(&k) {
                Ok(v) => v,
                Err(_) => return None,
            };
            let coeff = BigRational::new(ns.into(), (ds * df).into());
            return Self::rational_times_sqrt(coeff, kf);
        }
        // Two-component ansatz: (u + v*s)^2 = u^2 + v^2*s^2 + 2uv*s where s is
        // one of sqrt2, sqrt3, sqrt6.  The nonzero surd coordinate of self
        // determines s; the other two coordinates must vanish.
        {
            let (s, p, qq) = if !self.b.is_zero() && self.c.is_zero() && self.d.is_zero() {
                (Self::sqrt2(), self.a.clone(), self.b.clone())
            } else if !self.c.is_zero() && self.b.is_zero() && self.d.is_zero() {
                (Self::sqrt3(), self.a.clone(), self.c.clone())
            } else if !self.d.is_zero() && self.b.is_zero() && self.c.is_zero() {
                (Self::sqrt6(), self.a.clone(), self.d.clone())
            } else {
                return None;
            };
            let ssq = (s.clone() * s.clone()).as_rational().unwrap();
            // u^2 + v^2*ssq = p, 2uv = qq  =>  u^2 solves t^2 - p t + ssq*qq^2/4 = 0
            let disc = &p * &p - &ssq * &qq * &qq;
            let disc_sqrt = rational_exact_sqrt(&disc)?;
            for sign in [1i64, -1] {
                let t = (&p + disc_sqrt.clone() * rat(sign, 1)) / rat(2, 1);
                if let Some(u) = rational_exact_sqrt(&t) {
                    if !u.is_zero() {
                        let v = &qq / (&u * rat(2, 1));
                        let mut cand = Self::from_rational(u.clone());
                        cand = cand + s.clone().mul_rational(&v);
                        if &(cand.clone() * cand.clone()) == self && cand.to_f64() >= 0.0 {
                            return Some(cand);
                        }
                        let neg = -cand.clone();
                        if &(neg.clone() * neg.clone()) == self && neg.to_f64() >= 0.0 {
                            return Some(neg);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn to_f64(&self) -> f64 {
        fn r2f(r: &BigRational) -> f64 {
            let n = r.numer();
            let d = r.denom();
            // good enough for sampling weights; exact paths never use this
            let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
            let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
            nf / df
        }
        r2f(&self.a)
            + r2f(&self.b) * std::f64::consts::SQRT_2
            + r2f(&self.c) * 3.0_f64.sqrt()
            + r2f(&self.d) * 6.0_f64.sqrt()
    }

    /// Certified evaluation: value with a proven error bound at `digits`
    /// significant decimal digits of absolute precision.
    pub fn evaluate(&self, digits: u32) -> HighPrecisionReal {
        let s = digits + 6;
        let mut acc = HighPrecisionReal::from_rational(&self.a, s);
        if !self.b.is_zero() {
            acc = acc.add(&HighPrecisionReal::sqrt_u64(2, s).mul_rational(&self.b));
        }
        if !self.c.is_zero() {
            acc = acc.add(&HighPrecisionReal::sqrt_u64(3, s).mul_rational(&self.c));
        }
        if !self.d.is_zero() {
            acc = acc.add(&HighPrecisionReal::sqrt_u64(6, s).mul_rational(&self.d));
        }
        acc
    }
}

/// Split m = s^2 * f with f square-free; returns (s, f).
pub fn square_free_split(m: &crate::BigUint) -> (crate::BigUint, crate::BigUint) {
    use num_traits::ToPrimitive;
    let mut rem = m.clone();
    let mut s = crate::BigUint::from(1u32);
    let mut f = crate::BigUint::from(1u32);
    if rem.is_zero() {
        return (crate::BigUint::zero(), crate::BigUint::from(1u32));
    }
    let mut p = crate::BigUint::from(2u32);
    // trial division is fine: inputs here are tiny (radicands, denominators)
    while &p * &p <= rem {
        let mut e = 0u64;
        while (&rem % &p).is_zero() {
            rem /= &p;
            e += 1;
        }
        if e > 0 {
            let half = e / 2;
            for _ in 0..half {
                s *= &p;
            }
            if e % 2 == 1 {
                f *= &p;
            }
        }
        p += if p.to_u32() == Some(2) { 1u32 } else { 2u32 };
    }
    if rem > crate::BigUint::from(1u32) {
        f *= &rem;
    }
    (s, f)
}

/// Exact rational square root, if it exists.
fn rational_exact_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().magnitude();
    let d = r.denom().magnitude();
    let ns = n.sqrt();
    let ds = d.sqrt();
    if &(&ns * &ns) == n && &(&ds * &ds) == d {
        Some(BigRational::new(ns.into(), ds.into()))
    } else {
        None
    }
}

impl Add for SurdScalar {
    type Output = SurdScalar;
    fn add(self, o: SurdScalar) -> SurdScalar {
        SurdScalar {
            a: self.a + o.a,
            b: self.b + o.b,
            c: self.c + o.c,
            d: self.d + o.d,
        }
    }
}

impl Sub for SurdScalar {
    type Output = SurdScalar;
    fn sub(self, o: SurdScalar) -> SurdScalar {
        self + (-o)
    }
}

impl Neg for SurdScalar {
    type Output = SurdScalar;
    fn neg(self) -> SurdScalar {
        SurdScalar {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

impl Mul for SurdScalar {
    type Output = SurdScalar;
    fn mul(self, o: SurdScalar) -> SurdScalar {
        // basis products: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
        // sqrt3*sqrt6 = 3*sqrt2, sqrt6^2 = 6
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        let two = rat(2, 1);
        let three = rat(3, 1);
        let six = rat(6, 1);
        SurdScalar {
            a: a1 * a2 + b1 * b2 * &two + c1 * c2 * &three + d1 * d2 * &six,
            b: a1 * b2 + b1 * a2 + (c1 * d2 + d1 * c2) * &three,
            c: a1 * c2 + c1 * a2 + (b1 * d2 + d1 * b2) * &two,
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }
}

impl fmt::Debug for SurdScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SurdScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (coef, tag) in [
            (&self.a, ""),
            (&self.b, "*sqrt(2)"),
            (&self.c, "*sqrt(3)"),
            (&self.d, "*sqrt(6)"),
        ] {
            if !coef.is_zero() {
                parts.push(format!("{}{}", coef, tag));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Dense matrix over SurdScalar, column-major access helpers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurdMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<SurdScalar>, // row-major
}

impl SurdMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SurdMatrix {
            rows,
            cols,
            data: vec![SurdScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = SurdScalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<SurdScalar>>) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        assert!(rows.iter().all(|row| row.len() == c));
        SurdMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn column(&self, j: usize) -> Vec<SurdScalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn matmul(&self, o: &SurdMatrix) -> SurdMatrix {
        assert_eq!(self.cols, o.rows);
        let mut out = SurdMatrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = SurdScalar::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * o[(k, j)].clone();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    /// Lorentzian inner product of columns i and j: spatial coordinates carry
    /// +1, the last row carries -1.
    pub fn lorentz_gram_entry(&self, i: usize, j: usize) -> SurdScalar {
        let mut acc = SurdScalar::zero();
        for r in 0..self.rows {
            let term = self[(r, i)].clone() * self[(r, j)].clone();
            if r + 1 == self.rows {
                acc = acc - term;
            } else {
                acc = acc + term;
            }
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for SurdMatrix {
    type Output = SurdScalar;
    fn index(&self, (i, j): (usize, usize)) -> &SurdScalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SurdMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut SurdScalar {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64, c: i64, d: i64, den: i64) -> SurdScalar {
        SurdScalar::new(rat(a, den), rat(b, den), rat(c, den), rat(d, den))
    }

    #[test]
    fn multiplication_table() {
        let r2 = SurdScalar::sqrt2();
        let r3 = SurdScalar::sqrt3();
        let r6 = SurdScalar::sqrt6();
        assert_eq!(r2.clone() * r2.clone(), SurdScalar::from_int(2));
        assert_eq!(r3.clone() * r3.clone(), SurdScalar::from_int(3));
        assert_eq!(r6.clone() * r6.clone(), SurdScalar::from_int(6));
        assert_eq!(r2.clone() * r3.clone(), r6);
        assert_eq!(r2.clone() * r6.clone(), r3.mul_rational(&rat(2, 1)));
        assert_eq!(r3 * r6, SurdScalar::sqrt2().mul_rational(&rat(3, 1)));
    }

    #[test]
    fn inverse_round_trip() {
        let xs = [
            s(1, 1, 0, 0, 2),
            s(3, -2, 1, 0, 5),
            s(0, 0, 1, 0, 1),
            s(1, 2, 3, 4, 7),
            s(-5, 1, 1, -1, 3),
        ];
        for x in xs {
            let inv = x.inverse();
            assert_eq!(x * inv, SurdScalar::one());
        }
    }

    #[test]
    fn f64_agrees_with_components() {
        let x = s(1, 1, 1, 1, 1);
        let expect = 1.0 + 2f64.sqrt() + 3f64.sqrt() + 6f64.sqrt();
        assert!((x.to_f64() - expect).abs() < 1e-12);
    }

    #[test]
    fn sqrt_of_rational_radicands() {
        // sqrt(1/2) = sqrt2/2
        let x = SurdScalar::from_ratio(1, 2);
        assert_eq!(
            x.try_sqrt().unwrap(),
            SurdScalar::sqrt2().mul_rational(&rat(1, 2))
        );
        // sqrt(3/2) = sqrt6/2
        let x = SurdScalar::from_ratio(3, 2);
        assert_eq!(
            x.try_sqrt().unwrap(),
            SurdScalar::sqrt6().mul_rational(&rat(1, 2))
        );
        // sqrt(9/4) = 3/2
        let x = SurdScalar::from_ratio(9, 4);
        assert_eq!(x.try_sqrt().unwrap(), SurdScalar::from_ratio(3, 2));
        // sqrt(12) = 2*sqrt3
        let x = SurdScalar::from_int(12);
        assert_eq!(
            x.try_sqrt().unwrap(),
            SurdScalar::sqrt3().mul_rational(&rat(2, 1))
        );
        // sqrt(5) leaves the field
        assert!(SurdScalar::from_int(5).try_sqrt().is_none());
    }

    #[test]
    fn sqrt_of_two_component_squares() {
        // (1 + sqrt2)^2 = 3 + 2*sqrt2
        let sq = s(3, 2, 0, 0, 1);
        let root = sq.try_sqrt().unwrap();
        assert_eq!(root.clone() * root, sq);
        // (1/2 + sqrt3)^2 = 13/4 + sqrt3
        let v = s(1, 0, 2, 0, 2);
        let sq = v.clone() * v.clone();
        let root = sq.clone().try_sqrt().unwrap();
        assert_eq!(root.clone() * root, sq);
    }

    #[test]
    fn evaluate_matches_f64() {
        let x = s(1, -1, 2, 1, 3);
        let hp = x.evaluate(30);
        let approx: f64 = hp.to_sci_string(15).parse().unwrap();
        assert!((approx - x.to_f64()).abs() < 1e-10);
    }
}
