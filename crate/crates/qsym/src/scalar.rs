//! Exact arithmetic in cyclotomic number fields.
//!
//! A [`CycScalar`] is an element of Q(ζ_N) for some conductor N, stored as a
//! vector of exact rational coefficients with respect to the power basis
//! 1, ζ, ζ², …, ζ^{φ(N)−1}, i.e. reduced modulo the N-th cyclotomic polynomial
//! Φ_N. The representation is canonical, so equality of values at a shared
//! conductor is coefficient-wise equality; values at different conductors are
//! compared after lifting both to the least common conductor.
//!
//! The module also provides root-of-unity constructors, multiplicative order
//! detection, complex conjugation, square roots of the scalars that admit one
//! without leaving the cyclotomic lattice (rational squares times roots of
//! unity), and Gaussian binomial coefficients evaluated at a root of unity.
//! The Gaussian binomial is computed as a polynomial in an indeterminate
//! *before* substituting the root of unity, so the vanishing cases
//! (0 < s < n at a primitive n-th root) come out exactly zero with no division
//! by a vanished factor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Mutex;
use std::sync::OnceLock;

/// Euler's totient function.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            ds.push(i);
            if i != n / i {
                ds.push(n / i);
            }
        }
        i += 1;
    }
    ds.sort_unstable();
    ds
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Dense polynomial over Q, used internally for Φ_N computation and for the
/// modular reduction in [`CycScalar`] arithmetic. Coefficient k is the
/// coefficient of x^k; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct QPoly(pub Vec<BigRational>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn monomial(deg: usize, c: BigRational) -> Self {
        let mut v = vec![BigRational::zero(); deg + 1];
        v[deg] = c;
        let mut p = QPoly(v);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut v = vec![BigRational::zero(); self.0.len().max(other.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        let mut p = QPoly(v);
        p.trim();
        p
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return QPoly::zero();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] += a * b;
            }
        }
        let mut p = QPoly(v);
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        let mut p = QPoly(self.0.iter().map(|a| a * c).collect());
        p.trim();
        p
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.0[dd].clone();
        let mut rem = self.0.clone();
        let mut quot = vec![
            BigRational::zero();
            if rem.len() > dd { rem.len() - dd } else { 1 }
        ];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if !c.is_zero() {
                let q = &c / &lead;
                quot[k - dd] = q.clone();
                for (i, b) in divisor.0.iter().enumerate() {
                    let idx = k - dd + i;
                    let delta = &q * b;
                    rem[idx] -= delta;
                }
            }
            rem.pop();
        }
        let mut qq = QPoly(quot);
        qq.trim();
        let mut rr = QPoly(rem);
        rr.trim();
        (qq, rr)
    }
}

/// Cached cyclotomic polynomials Φ_N (integer coefficients, stored as rationals).
fn phi_poly(n: u64) -> QPoly {
    static CACHE: OnceLock<Mutex<HashMap<u64, QPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // Φ_N = (x^N − 1) / ∏_{d|N, d<N} Φ_d, computed recursively.
    let mut numer = QPoly::monomial(n as usize, BigRational::one());
    numer.0[0] = -BigRational::one();
    let mut result = numer;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phid = phi_poly(d);
        let (q, r) = result.div_rem(&phid);
        debug_assert!(r.0.is_empty(), "cyclotomic division must be exact");
        result = q;
    }
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// An element of the cyclotomic field Q(ζ_N), in canonical reduced form.
#[derive(Clone)]
pub struct CycScalar {
    /// Conductor N: the element lives in Q(ζ_N). Always ≥ 1.
    conductor: u64,
    /// Coefficients over the power basis 1, ζ, …, ζ^{φ(N)−1}. Length is exactly
    /// φ(N); zero coefficients are stored explicitly.
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    fn make(conductor: u64, mut coeffs: Vec<BigRational>) -> Self {
        let deg = euler_phi(conductor) as usize;
        coeffs.resize(deg, BigRational::zero());
        CycScalar { conductor, coeffs }
    }

    /// The zero element (conductor 1).
    pub fn zero() -> Self {
        CycScalar::make(1, vec![BigRational::zero()])
    }

    /// The unit element (conductor 1).
    pub fn one() -> Self {
        CycScalar::make(1, vec![BigRational::one()])
    }

    /// A rational number as a scalar.
    pub fn from_rational(r: BigRational) -> Self {
        CycScalar::make(1, vec![r])
    }

    /// An integer as a scalar.
    pub fn from_int(n: i64) -> Self {
        CycScalar::from_rational(rat(n))
    }

    /// A rational p/q as a scalar. Panics if q = 0.
    pub fn from_frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        CycScalar::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The primitive root of unity ζ_N^k.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let kk = k.rem_euclid(n as i64) as u64;
        let phi = phi_poly(n);
        let deg = phi.degree().unwrap();
        if (kk as usize) < deg {
            let mut coeffs = vec![BigRational::zero(); deg];
            coeffs[kk as usize] = BigRational::one();
            return CycScalar {
                conductor: n,
                coeffs,
            };
        }
        // Reduce x^kk mod Φ_N.
        let p = QPoly::monomial(kk as usize, BigRational::one());
        let (_, r) = p.div_rem(&phi);
        CycScalar::make(n, r.0)
    }

    /// True if the element is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True if the element equals 1.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The conductor of the current representation (not necessarily minimal).
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The coefficient vector over the power basis at the current conductor.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// If the element is rational, return it.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// If the element is a (small, nonnegative-denominator) integer, return it.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    /// Lift to conductor `m` (must be a multiple of the current conductor):
    /// ζ_N ↦ ζ_M^{M/N}, then reduce mod Φ_M.
    pub fn lift(&self, m: u64) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(
            m % self.conductor == 0,
            "lift target {} is not a multiple of conductor {}",
            m,
            self.conductor
        );
        let step = (m / self.conductor) as usize;
        let mut poly = QPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly = poly.add(&QPoly::monomial(i * step, c.clone()));
            }
        }
        if poly.0.is_empty() {
            return CycScalar::make(m, Vec::new());
        }
        let (_, r) = poly.div_rem(&phi_poly(m));
        CycScalar::make(m, r.0)
    }

    /// Bring two scalars to a shared conductor.
    fn align(&self, other: &CycScalar) -> (CycScalar, CycScalar) {
        if self.conductor == other.conductor {
            (self.clone(), other.clone())
        } else {
            let m = self.conductor.lcm(&other.conductor);
            (self.lift(m), other.lift(m))
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        // Extended Euclid in Q[x]: a·f + b·Φ_N = 1 with f our representative.
        let phi = phi_poly(self.conductor);
        let f = {
            let mut p = QPoly(self.coeffs.clone());
            p.trim();
            p
        };
        let (mut r0, mut r1) = (phi.clone(), f);
        let (mut s0, mut s1) = (QPoly::zero(), QPoly::monomial(0, BigRational::one()));
        while let Some(d1) = r1.degree() {
            if d1 == 0 {
                break;
            }
            let (q, r) = r0.div_rem(&r1);
            let s = s0.add(&q.mul(&s1).scale(&-BigRational::one()));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let unit = r1
            .0
            .first()
            .cloned()
            .filter(|c| !c.is_zero())
            .expect("element is a zero divisor mod the cyclotomic polynomial");
        let inv_poly = s1.scale(&unit.recip());
        let (_, reduced) = inv_poly.div_rem(&phi);
        CycScalar::make(self.conductor, reduced.0)
    }

    /// Integer power (negative exponents use the inverse).
    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inverse().pow(-e);
        }
        let mut acc = CycScalar::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation ζ_N ↦ ζ_N^{−1}.
    pub fn conj(&self) -> Self {
        let n = self.conductor;
        let mut acc = CycScalar::make(n, Vec::new());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let term = CycScalar::root_of_unity(n, -(i as i64))
                    .mul_rational(c);
                acc = &acc + &term;
            }
        }
        acc
    }

    fn mul_rational(&self, c: &BigRational) -> Self {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// If the element is a root of unity, return its multiplicative order.
    /// The roots of unity in Q(ζ_N) are ±ζ_N^k, so the order divides lcm(2, N).
    pub fn order_of(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let e = self.conductor.lcm(&2);
        if !self.pow(e as i64).is_one() {
            return None;
        }
        divisors(e)
            .into_iter()
            .find(|&d| self.pow(d as i64).is_one())
    }

    /// Square root, when one exists of the form √(r·ζ_M^k) with r a rational
    /// whose absolute value is a perfect square. Negative rationals use
    /// √(−1) = ζ_4; the root-of-unity part uses ζ_{2M}^k. Returns `None` for
    /// scalars outside this (catalog-sufficient) family.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(CycScalar::zero());
        }
        // Try to write self = r · ζ_M^k at the current conductor.
        let m = self.conductor;
        for k in 0..m {
            let z = CycScalar::root_of_unity(m, k as i64);
            let q = self * &z.inverse();
            if let Some(r) = q.as_rational() {
                let (num, den) = (r.numer().abs(), r.denom().abs());
                let (sn, sd) = (num.sqrt(), den.sqrt());
                if &sn * &sn != num || &sd * &sd != den {
                    return None;
                }
                let mag = CycScalar::from_rational(BigRational::new(sn, sd));
                let sign = if r.is_negative() {
                    CycScalar::root_of_unity(4, 1)
                } else {
                    CycScalar::one()
                };
                let zroot = CycScalar::root_of_unity(2 * m, k as i64);
                let cand = &(&mag * &sign) * &zroot;
                debug_assert!(&(&cand * &cand) == self);
                return Some(cand);
            }
        }
        None
    }

    /// Canonical text form `cyc(N; c0, c1, ...)`, with rationals as `a` or `a/b`.
    pub fn to_text(&self) -> String {
        let body: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    format!("{}", c.numer())
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect();
        format!("cyc({}; {})", self.conductor, body.join(", "))
    }

    /// Parse the grammar accepted on the CLI: `cyc(N; c0, c1, ...)`,
    /// `zeta:N:k`, or a plain rational `a` / `a/b`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("zeta:") {
            let parts: Vec<&str> = rest.split(':').collect();
            if parts.len() != 2 {
                return Err(format!("malformed root of unity `{}`", s));
            }
            let n: u64 = parts[0]
                .parse()
                .map_err(|_| format!("bad conductor in `{}`", s))?;
            let k: i64 = parts[1]
                .parse()
                .map_err(|_| format!("bad exponent in `{}`", s))?;
            if n == 0 {
                return Err("conductor must be positive".into());
            }
            return Ok(CycScalar::root_of_unity(n, k));
        }
        if let Some(rest) = s.strip_prefix("cyc(") {
            let rest = rest
                .strip_suffix(')')
                .ok_or_else(|| format!("missing `)` in `{}`", s))?;
            let (n_str, coeff_str) = rest
                .split_once(';')
                .ok_or_else(|| format!("missing `;` in `{}`", s))?;
            let n: u64 = n_str
                .trim()
                .parse()
                .map_err(|_| format!("bad conductor in `{}`", s))?;
            if n == 0 {
                return Err("conductor must be positive".into());
            }
            let mut coeffs = Vec::new();
            let trimmed = coeff_str.trim();
            if !trimmed.is_empty() {
                for part in trimmed.split(',') {
                    coeffs.push(parse_rational(part.trim())?);
                }
            }
            if coeffs.len() > euler_phi(n) as usize {
                return Err(format!(
                    "too many coefficients for conductor {} (expected at most {})",
                    n,
                    euler_phi(n)
                ));
            }
            return Ok(CycScalar::make(n, coeffs));
        }
        Ok(CycScalar::from_rational(parse_rational(s)?))
    }

    /// Fixed total order on values: align conductors, then compare coefficient
    /// vectors lexicographically. Used only to make container iteration and
    /// output deterministic; it is not compatible with arithmetic.
    pub fn canonical_cmp(&self, other: &CycScalar) -> Ordering {
        let (a, b) = self.align(other);
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            match x.cmp(y) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator `{}`", p))?;
        let den: BigInt = q
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator `{}`", q))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(num, den))
    } else {
        let n: BigInt = s
            .trim()
            .parse()
            .map_err(|_| format!("bad integer `{}`", s))?;
        Ok(BigRational::from(n))
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.align(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, other: &CycScalar) -> CycScalar {
        let (mut a, b) = self.align(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, other: &CycScalar) -> CycScalar {
        let (mut a, b) = self.align(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, other: &CycScalar) -> CycScalar {
        let (a, b) = self.align(other);
        // Fast paths: zero and rational multipliers avoid the polynomial product.
        if a.is_zero() || b.is_zero() {
            return CycScalar::make(a.conductor, Vec::new());
        }
        if let Some(r) = a.as_rational() {
            return b.mul_rational(&r);
        }
        if let Some(r) = b.as_rational() {
            return a.mul_rational(&r);
        }
        let pa = QPoly(a.coeffs.clone());
        let pb = QPoly(b.coeffs.clone());
        let prod = pa.mul(&pb);
        let (_, r) = prod.div_rem(&phi_poly(a.conductor));
        CycScalar::make(a.conductor, r.0)
    }
}

impl Div for &CycScalar {
    type Output = CycScalar;
    fn div(self, other: &CycScalar) -> CycScalar {
        self * &other.inverse()
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, other: &CycScalar) {
        *self = &*self + other;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, other: &CycScalar) {
        *self = &*self - other;
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, other: &CycScalar) {
        *self = &*self * other;
    }
}

/// The Gaussian binomial coefficient `[r choose s]_t` as a polynomial in t
/// with (nonnegative integer) coefficients, built from the t-Pascal recurrence
/// `[r s] = [r−1 s−1] + t^s [r−1 s]`.
fn gaussian_polynomial(r: u64, s: u64) -> QPoly {
    if s > r {
        return QPoly::zero();
    }
    if s == 0 || s == r {
        return QPoly::monomial(0, BigRational::one());
    }
    let a = gaussian_polynomial(r - 1, s - 1);
    let b = gaussian_polynomial(r - 1, s);
    a.add(&QPoly::monomial(s as usize, BigRational::one()).mul(&b))
}

/// The quantum binomial coefficient `[r choose s]_p` evaluated at the scalar
/// `p`. The Gaussian polynomial is expanded first and `p` substituted after,
/// so roots of unity give exact (possibly zero) values with no division.
///
/// With the convention `Y·X = p·X·Y`, the quantum binomial theorem reads
/// `(X+Y)^n = Σ_s [n choose s]_p X^s Y^{n−s}`.
pub fn qbinom(r: u64, s: u64, p: &CycScalar) -> CycScalar {
    let poly = gaussian_polynomial(r, s);
    let mut acc = CycScalar::zero();
    let mut power = CycScalar::one();
    for c in poly.0.iter() {
        if !c.is_zero() {
            acc = &acc + &power.mul_rational(c);
        }
        power = &power * p;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64, k: i64) -> CycScalar {
        CycScalar::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomial_degrees_and_values() {
        for n in 1..=30u64 {
            assert_eq!(
                phi_poly(n).degree().unwrap() as u64,
                euler_phi(n),
                "deg Φ_{}",
                n
            );
        }
        // Φ_12 = x^4 − x^2 + 1.
        let p = phi_poly(12);
        let want: Vec<i64> = vec![1, 0, -1, 0, 1];
        assert_eq!(p.0, want.into_iter().map(rat).collect::<Vec<_>>());
    }

    #[test]
    fn roots_of_unity_have_right_order() {
        for n in 1..=16u64 {
            let z = zeta(n, 1);
            assert_eq!(z.order_of(), Some(n), "ζ_{}", n);
            assert!(z.pow(n as i64).is_one());
            for k in 1..n {
                assert!(!z.pow(k as i64).is_one(), "ζ_{}^{} ≠ 1", n, k);
            }
        }
        assert_eq!(CycScalar::from_int(-1).order_of(), Some(2));
        assert_eq!(CycScalar::from_int(1).order_of(), Some(1));
        assert_eq!(CycScalar::from_int(2).order_of(), None);
        assert_eq!((&zeta(5, 1) + &CycScalar::one()).order_of(), None);
    }

    #[test]
    fn cross_conductor_identities() {
        // ζ_6 = −ζ_3², and ζ_3 = ζ_6².
        assert_eq!(zeta(6, 1), -&zeta(3, 2));
        assert_eq!(zeta(3, 1), zeta(6, 2));
        // ζ_4² = −1 at conductor 1.
        assert_eq!(zeta(4, 1).pow(2), CycScalar::from_int(-1));
        // 1 + ζ_3 + ζ_3² = 0.
        let s = &(&CycScalar::one() + &zeta(3, 1)) + &zeta(3, 2);
        assert!(s.is_zero());
        // Mixed-conductor product: ζ_3 · ζ_4 = ζ_12^7.
        assert_eq!(&zeta(3, 1) * &zeta(4, 1), zeta(12, 7));
    }

    #[test]
    fn field_axioms_spot_checks() {
        let samples = vec![
            CycScalar::from_frac(3, 7),
            zeta(5, 2),
            &zeta(8, 1) + &CycScalar::from_int(2),
            &zeta(12, 5) - &CycScalar::from_frac(1, 3),
        ];
        for a in &samples {
            for b in &samples {
                for c in &samples {
                    let ab_c = &(a * b) * c;
                    let a_bc = a * &(b * c);
                    assert_eq!(ab_c, a_bc);
                    let dist = a * &(b + c);
                    assert_eq!(dist, &(a * b) + &(a * c));
                }
                assert_eq!(a * b, b * a);
                assert_eq!(a + b, b + a);
            }
            if !a.is_zero() {
                assert!((a * &a.inverse()).is_one());
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution_and_fixes_rationals() {
        let a = &zeta(7, 3) + &CycScalar::from_frac(2, 5);
        assert_eq!(a.conj().conj(), a);
        assert_eq!(zeta(5, 1).conj(), zeta(5, 4));
        let r = CycScalar::from_frac(-9, 4);
        assert_eq!(r.conj(), r);
        // z·conj(z) for a root of unity is 1.
        assert!((&zeta(20, 3) * &zeta(20, 3).conj()).is_one());
    }

    #[test]
    fn qbinom_matches_pascal_and_vanishes_at_roots() {
        // At p = 1 the quantum binomial is the ordinary binomial.
        let one = CycScalar::one();
        assert_eq!(qbinom(5, 2, &one), CycScalar::from_int(10));
        assert_eq!(qbinom(6, 3, &one), CycScalar::from_int(20));
        // Vanishing: [n choose s]_p = 0 for 0 < s < n, p primitive n-th root.
        for n in [2u64, 3, 4, 5, 6] {
            let p = zeta(n, 1);
            for s in 1..n {
                assert!(qbinom(n, s, &p).is_zero(), "[{} choose {}]", n, s);
            }
            assert!(qbinom(n, 0, &p).is_one());
            assert!(qbinom(n, n, &p).is_one());
        }
        // q-Pascal at a root of unity: [r s] = [r−1 s−1] + p^s [r−1 s].
        let p = zeta(6, 1);
        for r in 1..8u64 {
            for s in 0..=r {
                let lhs = qbinom(r, s, &p);
                let mut rhs = if s > 0 {
                    qbinom(r - 1, s - 1, &p)
                } else {
                    CycScalar::zero()
                };
                rhs = &rhs + &(&p.pow(s as i64) * &qbinom(r - 1, s, &p));
                assert_eq!(lhs, rhs);
            }
        }
        // [4 choose 2]_{ζ4} at the primitive 4th root is 0, but at −1 (=ζ4²,
        // a primitive square root) it is 2.
        assert!(qbinom(4, 2, &zeta(4, 1)).is_zero());
        assert_eq!(
            qbinom(4, 2, &CycScalar::from_int(-1)),
            CycScalar::from_int(2)
        );
    }

    #[test]
    fn sqrt_of_rational_times_root_of_unity() {
        let cases = vec![
            CycScalar::from_int(4),
            CycScalar::from_int(-9),
            CycScalar::from_frac(9, 25),
            zeta(3, 1),
            &zeta(8, 3) * &CycScalar::from_int(-16),
        ];
        for c in cases {
            let s = c.sqrt().expect("sqrt should exist");
            assert_eq!(&s * &s, c);
        }
        // √2 is not of the supported form at conductor 1.
        assert!(CycScalar::from_int(2).sqrt().is_none());
    }

    #[test]
    fn parse_round_trip() {
        for text in ["zeta:5:2", "cyc(8; 0, 1/2, -3)", "7", "-3/4"] {
            let v = CycScalar::parse(text).unwrap();
            let again = CycScalar::parse(&v.to_text()).unwrap();
            assert_eq!(v, again);
        }
        assert!(CycScalar::parse("zeta:0:1").is_err());
        assert!(CycScalar::parse("cyc(4; 1, 2, 3)").is_err());
        assert!(CycScalar::parse("1/0").is_err());
    }
}
