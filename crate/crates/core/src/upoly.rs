//! Dense univariate polynomials over `F_p`.
//!
//! Used as the gcd oracle for the monoid instance of the engine and for the
//! `"x^3+1"` text form of its elements.

use std::fmt;

use rand::Rng;

use crate::category::{NaturalMonoid, PowerMap};
use crate::error::{domain, GcatError, Result};
use crate::field::PrimeField;
use crate::module::ModElement;

#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    field: PrimeField,
    /// Coefficients from the constant term upwards, no trailing zeros.
    coeffs: Vec<u32>,
}

impl UPoly {
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let p = field.characteristic();
        let mut coeffs: Vec<u32> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UPoly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        UPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading_coeff());
        UPoly::new(
            self.field,
            self.coeffs.iter().map(|&c| self.field.mul(c, inv)).collect(),
        )
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        UPoly::new(f, out)
    }

    pub fn divrem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let f = self.field;
        let mut rem = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        let inv = f.inv(divisor.leading_coeff());
        let mut quot = vec![0u32; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = f.mul(*rem.last().unwrap(), inv);
            let shift = top - dd;
            quot[shift] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = f.sub(rem[shift + j], f.mul(c, d));
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (UPoly::new(f, quot), UPoly::new(f, rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn divides(&self, other: &UPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    pub fn gcd_all(field: PrimeField, polys: &[UPoly]) -> UPoly {
        polys
            .iter()
            .fold(UPoly::zero(field), |acc, p| acc.gcd(p))
    }

    /// Uniform random polynomial of degree at most `max_degree`.
    pub fn random<R: Rng>(rng: &mut R, field: PrimeField, max_degree: usize) -> UPoly {
        let p = field.characteristic();
        UPoly::new(field, (0..=max_degree).map(|_| rng.gen_range(0..p)).collect())
    }

    /// Parses forms like `x^3+1`, `2x^2 - x + 4`, `3*x`, `0`.
    pub fn parse(s: &str, field: PrimeField) -> Result<UPoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(GcatError::Parse("empty polynomial".into()));
        }
        let bad = || GcatError::Parse(format!("cannot parse polynomial `{s}`"));
        let mut coeffs: Vec<i64> = Vec::new();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1i64;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            } else if !first {
                return Err(bad());
            }
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let (coeff, degree) = match term.find('x') {
                None => (term.parse::<i64>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let c = term[..pos].trim_end_matches('*');
                    let coeff = if c.is_empty() {
                        1
                    } else {
                        c.parse::<i64>().map_err(|_| bad())?
                    };
                    let after = &term[pos + 1..];
                    let degree = if after.is_empty() {
                        1
                    } else {
                        after
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?
                    };
                    (coeff, degree)
                }
            };
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, 0);
            }
            coeffs[degree] += sign * coeff;
        }
        Ok(UPoly::new(
            field,
            coeffs.into_iter().map(|c| field.reduce(c)).collect(),
        ))
    }

    /// The element at filtration level `level` of the monoid module.
    pub fn to_element(&self, level: usize) -> Result<ModElement<PowerMap>> {
        if let Some(d) = self.degree() {
            if d > level {
                return domain(format!("degree {d} exceeds level {level}"));
            }
        }
        ModElement::from_terms(
            &NaturalMonoid,
            level,
            0,
            1,
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(d, &c)| (PowerMap { from: level, to: 0, degree: d }, 1, c as i64)),
        )
    }

    pub fn from_element(v: &ModElement<PowerMap>) -> UPoly {
        let mut coeffs = vec![0u32; v.level() + 1];
        for (m, c) in v.terms() {
            coeffs[m.morphism.degree] = c;
        }
        UPoly::new(v.field(), coeffs)
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod {})", self.field.characteristic())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (c, d) {
                (_, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "x^{d}")?,
                (_, 1) => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{d}")?,
            }
        }
        Ok(())
    }
}
