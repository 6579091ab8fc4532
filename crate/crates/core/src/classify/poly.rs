//! Dense integer polynomials in one variable, coefficients in ascending degree.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_integer::Integer;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        IntPoly::new(vec![0, 1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: i64) -> IntPoly {
        IntPoly::new(self.0.iter().map(|c| c * k).collect())
    }

    /// Exact division by an integer, `None` if some coefficient is not divisible.
    pub fn div_exact(&self, k: i64) -> Option<IntPoly> {
        if k == 0 || self.0.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(IntPoly::new(self.0.iter().map(|c| c / k).collect()))
    }

    /// gcd of the coefficients, signed like the leading coefficient.
    pub fn content(&self) -> i64 {
        let g = self.0.iter().fold(0i64, |g, c| g.gcd(c));
        match self.0.last() {
            Some(&lead) if lead < 0 => -g,
            _ => g,
        }
    }

    /// The polynomial divided by its content: coprime coefficients, positive leading term.
    pub fn primitive(&self) -> IntPoly {
        match self.content() {
            0 => self.clone(),
            g => self.div_exact(g).expect("content divides every coefficient"),
        }
    }

    /// Interpolates the linear polynomial through (0, at0) and (1, at1).
    pub fn linear_through(at0: i64, at1: i64) -> IntPoly {
        IntPoly::new(vec![at0, at1 - at0])
    }

    /// All integer roots, ascending. A nonzero integer root divides the lowest
    /// nonzero coefficient, so the candidate set is finite.
    pub fn integer_roots(&self) -> Vec<i64> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let low = self.0.iter().position(|&c| c != 0).expect("nonzero polynomial");
        if low > 0 {
            roots.push(0);
        }
        if self.degree() > Some(low) {
            let c = self.0[low].abs();
            for d in (1..=c).filter(|d| c % d == 0) {
                for r in [d, -d] {
                    if self.eval(r) == 0 {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort_unstable();
        roots.dedup();
        roots
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::new(
            (0..n)
                .map(|i| self.0.get(i).copied().unwrap_or(0) + rhs.0.get(i).copied().unwrap_or(0))
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &rhs.scale(-1)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{i}")?,
                _ => write!(f, "{a}q^{i}")?,
            }
        }
        Ok(())
    }
}
