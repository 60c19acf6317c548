//! Arbitrary-precision decimal fixed point with certified error bounds.
//!
//! A value is `mantissa * 10^-scale` together with `error` (in units of the
//! last place) such that the true quantity being approximated lies in
//! `[value - error*10^-scale, value + error*10^-scale]`.  Every operation
//! propagates the bound conservatively, so a result's interval always
//! contains the exact answer.  There is no hidden rounding: anything that
//! rounds adds at least one ulp to `error`.

use crate::{BigInt, BigRational, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::Mutex;

#[derive(Clone, Debug)]
pub struct HighPrecisionReal {
    mantissa: BigInt,
    /// decimal digits after the point
    scale: u32,
    /// half-width of the certified interval, in ulps (10^-scale)
    error: BigUint,
}

fn pow10(k: u32) -> BigUint {
    BigUint::from(10u32).pow(k)
}

fn pow10_int(k: u32) -> BigInt {
    BigInt::from(pow10(k))
}

/// round(x / 10^k) to nearest, ties away from zero
fn round_div_pow10(x: &BigInt, k: u32) -> BigInt {
    if k == 0 {
        return x.clone();
    }
    let d = pow10_int(k);
    let (q, r) = x.div_rem(&d);
    let r2: BigInt = r.abs() * 2;
    if r2 >= d {
        if x.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

/// round(p/q) to nearest, ties away from zero; q > 0
fn round_div(p: &BigInt, q: &BigInt) -> BigInt {
    let (quo, rem) = p.div_rem(q);
    let r2: BigInt = rem.abs() * 2;
    if &r2 >= q {
        if p.is_negative() {
            quo - 1
        } else {
            quo + 1
        }
    } else {
        quo
    }
}

fn ceil_div_uint(p: &BigUint, q: &BigUint) -> BigUint {
    (p + q - BigUint::one()) / q
}

impl HighPrecisionReal {
    pub fn zero(scale: u32) -> Self {
        HighPrecisionReal {
            mantissa: BigInt::zero(),
            scale,
            error: BigUint::zero(),
        }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Exact center of the interval as a rational.
    pub fn center(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), pow10_int(self.scale))
    }

    /// Certified half-width of the interval as a rational.
    pub fn error_bound(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.error.clone()),
            pow10_int(self.scale),
        )
    }

    /// True if the certified error is at most 10^-digits.
    pub fn error_at_most_pow10(&self, digits: u32) -> bool {
        if digits > self.scale {
            return self.error.is_zero();
        }
        self.error <= pow10(self.scale - digits)
    }

    pub fn from_rational(r: &BigRational, scale: u32) -> Self {
        let scaled = r * BigRational::from_integer(pow10_int(scale));
        let m = round_div(scaled.numer(), scaled.denom());
        // nearest rounding is off by at most 1/2 ulp
        let error = if scaled.is_integer() {
            BigUint::zero()
        } else {
            BigUint::one()
        };
        HighPrecisionReal {
            mantissa: m,
            scale,
            error,
        }
    }

    pub fn from_int(n: i64, scale: u32) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()), scale)
    }

    /// Change scale; exact when widening, adds <= 1 ulp when narrowing.
    pub fn rescale(&self, new_scale: u32) -> Self {
        if new_scale == self.scale {
            return self.clone();
        }
        if new_scale > self.scale {
            let k = new_scale - self.scale;
            let f = pow10(k);
            HighPrecisionReal {
                mantissa: &self.mantissa * BigInt::from(f.clone()),
                scale: new_scale,
                error: &self.error * f,
            }
        } else {
            let k = self.scale - new_scale;
            let m = round_div_pow10(&self.mantissa, k);
            let e = &self.error / pow10(k) + BigUint::one();
            HighPrecisionReal {
                mantissa: m,
                scale: new_scale,
                error: e,
            }
        }
    }

    pub fn neg(&self) -> Self {
        HighPrecisionReal {
            mantissa: -self.mantissa.clone(),
            scale: self.scale,
            error: self.error.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let s = self.scale.max(o.scale);
        let a = self.rescale(s);
        let b = o.rescale(s);
        HighPrecisionReal {
            mantissa: a.mantissa + b.mantissa,
            scale: s,
            error: a.error + b.error,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let s = self.scale.max(o.scale);
        // raw product sits at scale self.scale + o.scale
        let raw_scale = self.scale + o.scale;
        let m = &self.mantissa * &o.mantissa;
        // |x*y - mx*my| <= |mx|*ey + |my|*ex + ex*ey  (ulps at raw scale)
        let e_raw = self.mantissa.magnitude() * &o.error
            + o.mantissa.magnitude() * &self.error
            + &self.error * &o.error;
        let k = raw_scale - s;
        let mantissa = round_div_pow10(&m, k);
        let error = ceil_div_uint(&e_raw, &pow10(k)) + BigUint::from(2u32);
        HighPrecisionReal {
            mantissa,
            scale: s,
            error,
        }
    }

    /// Multiply by an exact rational.
    pub fn mul_rational(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(self.scale);
        }
        let num = r.numer();
        let den = r.denom(); // positive by BigRational invariant
        let m = round_div(&(&self.mantissa * num), den);
        let e = ceil_div_uint(
            &(&self.error * num.magnitude()),
            den.magnitude(),
        ) + BigUint::one();
        HighPrecisionReal {
            mantissa: m,
            scale: self.scale,
            error: e,
        }
    }

    pub fn div_rational(&self, r: &BigRational) -> Self {
        assert!(!r.is_zero());
        self.mul_rational(&r.recip())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::from_int(1, self.scale);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// sqrt of a small nonnegative integer.
    pub fn sqrt_u64(k: u64, scale: u32) -> Self {
        let v = BigUint::from(k) * pow10(2 * scale);
        let m = v.sqrt(); // floor square root
        HighPrecisionReal {
            mantissa: BigInt::from(m),
            scale,
            error: BigUint::one(),
        }
    }

    /// sqrt of a nonnegative rational.
    pub fn sqrt_rational(r: &BigRational, scale: u32) -> Self {
        assert!(!r.is_negative());
        let scaled = r * BigRational::from_integer(pow10_int(2 * scale));
        let v = scaled.to_integer().magnitude().clone();
        let m = v.sqrt();
        HighPrecisionReal {
            mantissa: BigInt::from(m),
            scale,
            error: BigUint::from(2u32),
        }
    }

    /// pi at the given scale, Machin's formula with certified rounding.
    pub fn pi(scale: u32) -> Self {
        static CACHE: Mutex<Option<(u32, BigInt)>> = Mutex::new(None);
        let mut guard = CACHE.lock().unwrap();
        let need_compute = match &*guard {
            Some((s, _)) => *s < scale,
            None => true,
        };
        if need_compute {
            let work = scale + 8;
            // pi = 16 atan(1/5) - 4 atan(1/239); each atan term is floored,
            // so the accumulated error is counted per term below.
            let (a5, n5) = atan_inv_scaled(5, work);
            let (a239, n239) = atan_inv_scaled(239, work);
            let m = a5 * 16 - a239 * 4;
            // error in ulps at `work`: 16*(terms+2) + 4*(terms+2)
            let e = 16 * (n5 + 2) + 4 * (n239 + 2);
            assert!(e < 10u64.pow(7));
            // fold the error into the 8 guard digits: round to `scale`
            let mant = round_div_pow10(&m, 8);
            *guard = Some((scale, mant));
        }
        let (cached_scale, mant) = guard.as_ref().unwrap();
        let out = HighPrecisionReal {
            mantissa: mant.clone(),
            scale: *cached_scale,
            // 1 ulp from rounding the guard digits + folded series error
            error: BigUint::from(2u32),
        };
        drop(guard);
        out.rescale(scale)
    }

    /// Upper bound on |self_true - other_true| as an exact rational.
    pub fn diff_upper_bound(&self, o: &Self) -> BigRational {
        let center_diff = (self.center() - o.center()).abs();
        center_diff + self.error_bound() + o.error_bound()
    }

    /// Certified check that the two true values differ by at most `tol`.
    pub fn certified_within(&self, o: &Self, tol: &BigRational) -> bool {
        self.diff_upper_bound(o) <= *tol
    }

    /// True if the certified intervals intersect (necessary if both bound the
    /// same exact quantity).
    pub fn consistent_with(&self, o: &Self) -> bool {
        let center_diff = (self.center() - o.center()).abs();
        center_diff <= self.error_bound() + o.error_bound()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.center().to_f64().unwrap_or(f64::NAN)
    }

    /// Scientific-notation rendering with `sig` significant digits
    /// (e.g. "2.617993878e-1").  Rounds the displayed digits to nearest.
    pub fn to_sci_string(&self, sig: usize) -> String {
        assert!(sig >= 1);
        if self.mantissa.is_zero() {
            return format!("{}e0", fixed_digits("0", sig));
        }
        let neg = self.mantissa.is_negative();
        let digits = self.mantissa.magnitude().to_string();
        let len = digits.len() as i64;
        // value = 0.digits * 10^(len - scale)
        let mut exp = len - 1 - self.scale as i64;
        let rounded = if digits.len() <= sig {
            let mut d = digits.clone();
            while d.len() < sig {
                d.push('0');
            }
            d
        } else {
            let keep: String = digits.chars().take(sig).collect();
            let next = digits.as_bytes()[sig] - b'0';
            if next >= 5 {
                // increment the kept digits
                let inc = BigUint::parse_bytes(keep.as_bytes(), 10).unwrap() + BigUint::one();
                let s = inc.to_string();
                if s.len() > sig {
                    exp += 1;
                    s.chars().take(sig).collect()
                } else {
                    s
                }
            } else {
                keep
            }
        };
        let body = fixed_digits(&rounded, sig);
        format!("{}{}e{}", if neg { "-" } else { "" }, body, exp)
    }
}

fn fixed_digits(d: &str, sig: usize) -> String {
    let mut chars: Vec<char> = d.chars().collect();
    while chars.len() < sig {
        chars.push('0');
    }
    if sig == 1 {
        return chars[0].to_string();
    }
    let head = chars[0];
    let tail: String = chars[1..sig].iter().collect();
    format!("{}.{}", head, tail)
}

/// atan(1/x)*10^scale (floored series), and the number of terms used.
fn atan_inv_scaled(x: u64, scale: u32) -> (BigInt, u64) {
    let p = pow10(scale);
    let xbig = BigUint::from(x);
    let xsq = &xbig * &xbig;
    let mut xpow = xbig.clone(); // x^(2j+1)
    let mut acc = BigInt::zero();
    let mut j = 0u64;
    loop {
        let denom = &xpow * BigUint::from(2 * j + 1);
        let term = &p / denom;
        if term.is_zero() {
            break;
        }
        if j % 2 == 0 {
            acc += BigInt::from(term);
        } else {
            acc -= BigInt::from(term);
        }
        xpow *= &xsq;
        j += 1;
    }
    (acc, j + 1)
}

/// Parse "d.ddde-k" style scientific notation into an exact rational.
pub fn rational_from_sci(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mant_str, exp_str) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e),
        None => (s, "0"),
    };
    let exp: i64 = exp_str.parse().ok()?;
    let neg = mant_str.starts_with('-');
    let mant_str = mant_str.trim_start_matches(['-', '+']);
    let (int_part, frac_part) = match mant_str.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mant_str, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all: String = format!("{}{}", int_part, frac_part);
    if !all.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = BigInt::parse_bytes(all.as_bytes(), 10)?;
    let shift = exp - frac_part.len() as i64;
    let mut r = BigRational::from_integer(digits);
    if shift >= 0 {
        r *= BigRational::from_integer(pow10_int(shift as u32));
    } else {
        r /= BigRational::from_integer(pow10_int((-shift) as u32));
    }
    Some(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn pi_reference_digits() {
        // 50 digits of pi, checked against the classical decimal expansion
        let p = HighPrecisionReal::pi(50);
        let s = p.to_sci_string(50);
        assert!(s.starts_with("3.141592653589793238462643383279502884197169399375"));
        assert!(p.error_at_most_pow10(48));
    }

    #[test]
    fn pi_scales_nest() {
        let lo = HighPrecisionReal::pi(15);
        let hi = HighPrecisionReal::pi(40);
        assert!(lo.consistent_with(&hi));
    }

    #[test]
    fn arithmetic_contains_exact_value() {
        // (1/3 + 1/7) * 22/5 = 44/21... verify interval containment
        let s = 25;
        let a = HighPrecisionReal::from_rational(&rat(1, 3), s);
        let b = HighPrecisionReal::from_rational(&rat(1, 7), s);
        let c = a.add(&b).mul_rational(&rat(22, 5));
        let exact = (rat(1, 3) + rat(1, 7)) * rat(22, 5);
        let diff = (c.center() - exact).abs();
        assert!(diff <= c.error_bound());
    }

    #[test]
    fn multiplication_interval_is_sound() {
        let s = 20;
        let a = HighPrecisionReal::sqrt_u64(2, s);
        let sq = a.mul(&a);
        let exact = BigRational::from_integer(2.into());
        assert!((sq.center() - exact).abs() <= sq.error_bound());
    }

    #[test]
    fn sqrt_matches_known_value() {
        let r = HighPrecisionReal::sqrt_u64(3, 40);
        let s = r.to_sci_string(30);
        assert!(s.starts_with("1.7320508075688772935274463415"));
    }

    #[test]
    fn sci_string_rounding() {
        let x = HighPrecisionReal::from_rational(&rat(26179938779915, 100000000000000), 20);
        assert_eq!(x.to_sci_string(10), "2.617993878e-1");
        let y = HighPrecisionReal::from_rational(&rat(-999999, 1000000), 12);
        assert_eq!(y.to_sci_string(3), "-1.00e0");
    }

    #[test]
    fn sci_parse_round_trip() {
        let r = rational_from_sci("2.617993878e-1").unwrap();
        assert_eq!(r, rat(2617993878, 10_000_000_000));
        let r = rational_from_sci("-4.633381297e-9").unwrap();
        assert_eq!(r, -rat(4633381297, 1) / rat(10i64.pow(18), 1));
        let r = rational_from_sci("1.25e0").unwrap();
        assert_eq!(r, rat(5, 4));
    }

    #[test]
    fn rescale_keeps_containment() {
        let x = HighPrecisionReal::from_rational(&rat(1, 7), 30);
        let y = x.rescale(10);
        let exact = rat(1, 7);
        assert!((y.center() - exact.clone()).abs() <= y.error_bound());
        let z = x.rescale(45);
        assert!((z.center() - exact).abs() <= z.error_bound());
    }
}
