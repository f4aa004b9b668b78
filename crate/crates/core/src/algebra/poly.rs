//! Sparse multivariate polynomials over an exact coefficient ring.
//!
//! A [`MultiPoly`] carries its own ordered list of variable names and a map
//! from exponent vectors to nonzero coefficients. Binary operations between
//! polynomials over different variable lists first embed both operands into
//! the union of the two lists (left operand's order first).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_scalar, Scalar};

/// Minimal commutative-ring interface needed by [`MultiPoly`].
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_scalar(s: &Scalar) -> Self;

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
}

pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<C = Scalar> {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, C>,
}

pub fn var_names<I, S>(names: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    names.into_iter().map(Into::into).collect()
}

impl<C: Ring> MultiPoly<C> {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: C) -> Self {
        let mut p = Self::zero(vars);
        let exps = vec![0; p.vars.len()];
        p.add_term(exps, c);
        p
    }

    pub fn one(vars: Vec<String>) -> Self {
        Self::constant(vars, C::one())
    }

    /// The polynomial consisting of the single variable at `index`.
    pub fn var(vars: Vec<String>, index: usize) -> Self {
        assert!(index < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        let mut p = Self::zero(vars);
        p.add_term(exps, C::one());
        p
    }

    pub fn monomial(vars: Vec<String>, exps: Exponents, c: C) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent arity mismatch");
        let mut p = Self::zero(vars);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, C)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent arity mismatch");
            p.add_term(e, c);
        }
        p
    }

    /// Univariate polynomial from dense coefficients, constant term first.
    pub fn univariate(var: &str, coeffs: &[C]) -> Self {
        Self::from_terms(
            vec![var.to_string()],
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![i as u32], c.clone())),
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c * x^exps` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, index: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[index]).max()
    }

    /// True when every term has total degree exactly `d` (vacuously true for 0).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable of `self` that occurs with a nonzero exponent.
    pub fn with_vars(&self, vars: &[String]) -> Self {
        if self.vars == vars {
            return self.clone();
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let mut out = Self::zero(vars.to_vec());
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].unwrap_or_else(|| {
                    panic!("variable {} missing from target ordering", self.vars[i])
                });
                ne[j] = k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (self.with_vars(&vars), other.with_vars(&vars))
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        if self.vars != other.vars {
            let (a, b) = self.aligned(other);
            return a.add_poly(&b);
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub_poly(&self, other: &Self) -> Self {
        self.add_poly(&other.neg_poly())
    }

    pub fn neg_poly(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        if self.vars != other.vars {
            let (a, b) = self.aligned(other);
            return a.mul_poly(&b);
        }
        let mut out = Self::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        let mut out = Self::zero(self.vars.clone());
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k.mul_ref(c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// Evaluates at a full assignment of the variables.
    pub fn eval(&self, values: &[C]) -> C {
        assert_eq!(values.len(), self.vars.len(), "assignment arity mismatch");
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term.mul_ref(&values[i]);
                }
            }
            acc = acc.add_ref(&term);
        }
        acc
    }

    /// Substitutes a polynomial for every variable. All images must share a
    /// variable list, which becomes the variable list of the result.
    pub fn compose(&self, images: &[MultiPoly<C>]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "substitution arity mismatch");
        let target: Vec<String> = match images.first() {
            Some(p) => p.vars.clone(),
            None => Vec::new(),
        };
        let images: Vec<MultiPoly<C>> = images.iter().map(|p| p.with_vars(&target)).collect();
        let mut powers: Vec<Vec<MultiPoly<C>>> = vec![Vec::new(); images.len()];
        let mut out = Self::zero(target.clone());
        for (e, c) in &self.terms {
            let mut term = Self::constant(target.clone(), c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Self::one(target.clone()));
                }
                while cache.len() <= k as usize {
                    let next = cache.last().unwrap().mul_poly(&images[i]);
                    cache.push(next);
                }
                term = term.mul_poly(&cache[k as usize]);
            }
            out = out.add_poly(&term);
        }
        out
    }

    /// Replaces a single variable by a polynomial (over any variable list);
    /// the substituted variable is kept in the list with exponent zero.
    pub fn substitute(&self, index: usize, image: &MultiPoly<C>) -> Self {
        let (base, image) = self.aligned(image);
        let images: Vec<MultiPoly<C>> = (0..base.vars.len())
            .map(|i| {
                if i == index {
                    image.clone()
                } else {
                    Self::var(base.vars.clone(), i)
                }
            })
            .collect();
        base.compose(&images)
    }

    pub fn derivative(&self, index: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let k = e[index];
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[index] = k - 1;
            out.add_term(ne, c.mul_ref(&C::from_scalar(&Scalar::from_integer(k.into()))));
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Dense coefficient list of a polynomial in the variable at `index`,
    /// where every other variable must have exponent zero.
    pub fn univariate_coeffs(&self, index: usize) -> Vec<C> {
        let deg = self.degree_in(index).unwrap_or(0) as usize;
        let mut out = vec![C::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (e, c) in &self.terms {
            assert!(
                e.iter().enumerate().all(|(i, &k)| i == index || k == 0),
                "polynomial is not univariate in {}",
                self.vars[index]
            );
            out[e[index] as usize] = c.clone();
        }
        out
    }

    /// Collects the coefficient of each power of the variable at `index`;
    /// the coefficients keep the full variable list with that exponent zeroed.
    pub fn coefficients_in(&self, index: usize) -> Vec<MultiPoly<C>> {
        let deg = self.degree_in(index).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.vars.clone()); deg + 1];
        for (e, c) in &self.terms {
            let k = e[index] as usize;
            let mut ne = e.clone();
            ne[index] = 0;
            out[k].add_term(ne, c.clone());
        }
        out
    }
}

impl MultiPoly<Scalar> {
    pub fn eval_scalar(&self, values: &[Scalar]) -> Scalar {
        self.eval(values)
    }
}

impl<C: Ring> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        self.add_poly(rhs)
    }
}

impl<C: Ring> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        self.sub_poly(rhs)
    }
}

impl<C: Ring> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        self.mul_poly(rhs)
    }
}

impl<C: Ring> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.neg_poly()
    }
}

impl<C: Ring> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        self.add_poly(&rhs)
    }
}

impl<C: Ring> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        self.sub_poly(&rhs)
    }
}

impl<C: Ring> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        self.mul_poly(&rhs)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiPoly")
            .field("vars", &self.vars)
            .field("terms", &self.terms)
            .finish()
    }
}

/// Human-oriented rendering of a rational polynomial, e.g. `4/3*q^3 - q + 1`.
pub fn pretty(p: &MultiPoly<Scalar>) -> String {
    pretty_ordered(p, |a, b| b.cmp(a))
}

/// Like [`pretty`] but with a caller-supplied term order on exponent vectors.
pub fn pretty_ordered(
    p: &MultiPoly<Scalar>,
    order: impl Fn(&Exponents, &Exponents) -> std::cmp::Ordering,
) -> String {
    use num_traits::Signed;
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Exponents, &Scalar)> = p.terms().collect();
    terms.sort_by(|a, b| order(a.0, b.0));
    let mut out = String::new();
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono: Vec<String> = p
            .vars()
            .iter()
            .zip(e.iter())
            .filter(|(_, &k)| k > 0)
            .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
            .collect();
        if mono.is_empty() {
            out.push_str(&format_scalar(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&format_scalar(&mag));
                out.push('*');
            }
            out.push_str(&mono.join("*"));
        }
    }
    out
}
