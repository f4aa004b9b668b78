//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! An element is stored as coordinates in the power basis 1, ζ, …, ζ^{φ(N)-1}
//! after reduction modulo the N-th cyclotomic polynomial. Elements of
//! different orders are combined in Q(ζ_L) with L = lcm of the orders.
//! Elements that turn out to be rational are collapsed to order 1.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};


use super::rational::{format_scalar, int, to_f64, Scalar};
use crate::error::{Error, Result};

type Dense = Vec<Scalar>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn dense_mul(a: &[Scalar], b: &[Scalar]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
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

fn dense_sub(a: &[Scalar], b: &[Scalar]) -> Dense {
    let mut out = vec![Scalar::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn dense_divmod(a: &[Scalar], b: &[Scalar]) -> (Dense, Dense) {
    let mut r: Dense = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quot = vec![Scalar::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        quot[k] = c;
        trim(&mut r);
    }
    trim(&mut quot);
    (quot, r)
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u64, Arc<Dense>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Dense>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The N-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Dense> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 = prod_{d | n} Phi_d
    let mut p: Dense = vec![Scalar::zero(); n as usize + 1];
    p[0] = int(-1);
    p[n as usize] = int(1);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = dense_divmod(&p, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    let p = Arc::new(p);
    cyclotomic_cache().write().unwrap().insert(n, p.clone());
    p
}

pub fn euler_phi(n: u64) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

#[derive(Clone)]
pub struct CycloNumber {
    order: u64,
    coords: Vec<Scalar>,
}

impl CycloNumber {
    pub fn rational(s: Scalar) -> Self {
        CycloNumber {
            order: 1,
            coords: vec![s],
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Builds an element of Q(ζ_order) from power-basis coordinates of any
    /// length; they are reduced modulo the cyclotomic polynomial.
    pub fn from_coords(order: u64, coords: Vec<Scalar>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Self::reduced(order, coords)
    }

    fn reduced(order: u64, mut coords: Dense) -> Self {
        let phi = cyclotomic_polynomial(order);
        let d = phi.len() - 1;
        // phi is monic
        while coords.len() > d {
            let top = coords.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = coords.len() - d;
            for (j, pj) in phi.iter().take(d).enumerate() {
                coords[k + j] -= &top * pj;
            }
        }
        coords.resize(d, Scalar::zero());
        let mut out = CycloNumber { order, coords };
        out.collapse();
        out
    }

    fn collapse(&mut self) {
        if self.order > 1 && self.coords.iter().skip(1).all(Zero::is_zero) {
            let c = self
                .coords
                .first()
                .cloned()
                .unwrap_or_else(Scalar::zero);
            self.order = 1;
            self.coords = vec![c];
        }
    }

    /// Re-expresses the element in Q(ζ_target); `target` must be a multiple of the order.
    pub fn embed(&self, target: u64) -> Self {
        assert!(
            target.is_multiple_of(self.order),
            "cannot embed order {} into order {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut dense = vec![Scalar::zero(); (self.coords.len().saturating_sub(1)) * step + 1];
        for (i, c) in self.coords.iter().enumerate() {
            dense[i * step] = c.clone();
        }
        let phi = cyclotomic_polynomial(target);
        let d = phi.len() - 1;
        let mut coords = dense;
        while coords.len() > d {
            let top = coords.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = coords.len() - d;
            for (j, pj) in phi.iter().take(d).enumerate() {
                coords[k + j] -= &top * pj;
            }
        }
        coords.resize(d, Scalar::zero());
        CycloNumber {
            order: target,
            coords,
        }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let l = self.order.lcm(&other.order);
        (self.embed(l), other.embed(l))
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Scalar> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.coords[0].is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.order == 1 && other.order == 1 {
            return CycloNumber::rational(&self.coords[0] + &other.coords[0]);
        }
        let (a, b) = self.common(other);
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        let mut out = CycloNumber {
            order: a.order,
            coords,
        };
        out.collapse();
        out
    }

    pub fn neg(&self) -> Self {
        CycloNumber {
            order: self.order,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.order == 1 {
            return other.scale(&self.coords[0]);
        }
        if other.order == 1 {
            return self.scale(&other.coords[0]);
        }
        let (a, b) = self.common(other);
        Self::reduced(a.order, dense_mul(&a.coords, &b.coords))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return CycloNumber::rational(Scalar::zero());
        }
        CycloNumber {
            order: self.order,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = CycloNumber::rational(Scalar::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(CycloNumber::rational(self.coords[0].recip()));
        }
        let phi = cyclotomic_polynomial(self.order);
        let mut r0: Dense = phi.to_vec();
        let mut r1: Dense = self.coords.clone();
        trim(&mut r1);
        let mut s0: Dense = Vec::new();
        let mut s1: Dense = vec![Scalar::one()];
        while !r1.is_empty() {
            let (q, r) = dense_divmod(&r0, &r1);
            let s2 = dense_sub(&s0, &dense_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant because Phi_N is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let coords = s0.iter().map(|x| x * &c).collect();
        Ok(Self::reduced(self.order, coords))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Value under the embedding ζ ↦ exp(2πi/N).
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coords
            .iter()
            .enumerate()
            .map(|(k, c)| {
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n) * to_f64(c)
            })
            .sum()
    }
}

/// The exact root of unity exp(2πi·num/den), of order den / gcd(num, den).
pub fn cyclo_root_of_unity(num: i64, den: i64) -> Result<CycloNumber> {
    if den <= 0 {
        return Err(Error::ZeroDenominator);
    }
    let num = num.rem_euclid(den);
    let g = num.gcd(&den);
    let order = (den / g) as u64;
    let exp = (num / g) as usize;
    let mut dense = vec![Scalar::zero(); exp + 1];
    dense[exp] = Scalar::one();
    Ok(CycloNumber::reduced(order, dense))
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coords == other.coords;
        }
        let (a, b) = self.common(other);
        a.coords == b.coords
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            return write!(f, "{}", format_scalar(&self.coords[0]));
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format_scalar(c),
                1 => format!("{}*z{}", format_scalar(c), self.order),
                _ => format!("{}*z{}^{}", format_scalar(c), self.order, k),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl super::poly::Ring for CycloNumber {
    fn zero() -> Self {
        CycloNumber::rational(<Scalar as Zero>::zero())
    }
    fn one() -> Self {
        CycloNumber::rational(<Scalar as One>::one())
    }
    fn is_zero(&self) -> bool {
        CycloNumber::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn from_scalar(s: &Scalar) -> Self {
        CycloNumber::rational(s.clone())
    }
}
