//! Sparse multivariate polynomials in canonical (graded-lex) normal form.
//!
//! Variables are opaque `u32` ids; callers fix their own indexing (umbral
//! letter coordinates, matrix entry coordinates, ...). The normal form is
//! deterministic, which is what makes zero-polynomial assertions work.

use crate::scalar::Ring;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Monomial: sorted sparse exponent vector, strictly positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub Vec<(u32, u16)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Mono(vec![(v, 1)])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| u32::from(e)).sum()
    }

    pub fn exponent(&self, v: u32) -> u16 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn mul(&self, rhs: &Mono) -> Mono {
        let mut out = Vec::with_capacity(self.0.len() + rhs.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < rhs.0.len() {
            match self.0[i].0.cmp(&rhs.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(rhs.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + rhs.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&rhs.0[j..]);
        Mono(out)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                // lex on the dense vector: on the first differing variable,
                // the larger exponent wins
                let (mut i, mut j) = (0, 0);
                loop {
                    match (self.0.get(i), other.0.get(j)) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                            Ordering::Equal => {
                                match ea.cmp(&eb) {
                                    Ordering::Equal => {}
                                    ord => return ord,
                                }
                                i += 1;
                                j += 1;
                            }
                        },
                    }
                }
            })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial as a descending-sorted term list with nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<C> {
    pub terms: Vec<(Mono, C)>,
}

impl<C: Ring> MPoly<C> {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly {
                terms: vec![(Mono::one(), c)],
            }
        }
    }

    pub fn var(v: u32) -> Self {
        MPoly {
            terms: vec![(Mono::var(v), C::one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    pub fn from_map(map: BTreeMap<Mono, C>) -> Self {
        let mut terms: Vec<(Mono, C)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse(); // descending
        MPoly { terms }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out: Vec<(Mono, C)> = self
            .terms
            .iter()
            .map(|(w, a)| (w.mul(m), a.clone() * c.clone()))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        MPoly { terms: out }
    }

    /// Substitute values for the variables.
    pub fn eval<S: Ring>(&self, mut value_of: impl FnMut(u32) -> S, embed: impl Fn(&C) -> S) -> S {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = embed(c);
            for &(v, e) in &m.0 {
                let val = value_of(v);
                for _ in 0..e {
                    t = t * val.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Apply a derivation defined on variables: D(x_v) = sum of (var, coeff)
    /// terms, extended by the Leibniz rule.
    pub fn derive(&self, rule: impl Fn(u32) -> Vec<(u32, i64)>) -> Self {
        let mut map: BTreeMap<Mono, C> = BTreeMap::new();
        for (mono, coeff) in &self.terms {
            for (pos, &(v, e)) in mono.0.iter().enumerate() {
                for (w, c) in rule(v) {
                    // coeff * e * c * mono / x_v * x_w
                    let mut rest: Vec<(u32, u16)> = mono.0.clone();
                    if e == 1 {
                        rest.remove(pos);
                    } else {
                        rest[pos].1 -= 1;
                    }
                    let newm = Mono(rest).mul(&Mono::var(w));
                    let scalar = coeff.clone() * C::from_i64(i64::from(e) * c);
                    if scalar.is_zero() {
                        continue;
                    }
                    let entry = map.entry(newm).or_insert_with(C::zero);
                    *entry = entry.clone() + scalar;
                }
            }
        }
        Self::from_map(map)
    }
}

impl<C: Ring> Add for MPoly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            match self.terms[i].0.cmp(&rhs.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(rhs.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.clone() + rhs.terms[j].1.clone();
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        MPoly { terms: out }
    }
}

impl<C: Ring> Sub for MPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Ring> Neg for MPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, c.neg())).collect(),
        }
    }
}

impl<C: Ring> Mul for MPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut map: BTreeMap<Mono, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                if c.is_zero() {
                    continue;
                }
                let entry = map.entry(m).or_insert_with(C::zero);
                *entry = entry.clone() + c;
            }
        }
        Self::from_map(map)
    }
}

impl<C: Ring> Ring for MPoly<C> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::constant(C::one())
    }
    fn from_i64(n: i64) -> Self {
        MPoly::constant(C::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}")?;
            for &(v, e) in &m.0 {
                write!(f, "*v{v}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Int;

    type P = MPoly<Int>;

    #[test]
    fn arithmetic_normal_form() {
        let x = P::var(0);
        let y = P::var(1);
        let p = (x.clone() + y.clone()) * (x.clone() - y.clone());
        let q = x.clone() * x.clone() - y.clone() * y.clone();
        assert_eq!(p, q);
        let z = p - q;
        assert!(z.is_zero());
    }

    #[test]
    fn derive_leibniz() {
        // derivation D with D(x) = y, D(y) = 0: D(x^2 y) = 2 x y^2
        let x = P::var(0);
        let y = P::var(1);
        let p = x.clone() * x.clone() * y.clone();
        let d = p.derive(|v| if v == 0 { vec![(1, 1)] } else { vec![] });
        let expect = P::from_i64(2) * x * y.clone() * y;
        assert_eq!(d, expect);
    }

    #[test]
    fn eval_matches() {
        let x = P::var(0);
        let y = P::var(1);
        let p = x.clone() * x + P::from_i64(3) * y;
        let v = p.eval(
            |v| if v == 0 { Int::from(5) } else { Int::from(7) },
            |c| c.clone(),
        );
        assert_eq!(v, Int::from(25 + 21));
    }
}
