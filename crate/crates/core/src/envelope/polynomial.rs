use alloc::vec::Vec;
use core::fmt;
use core::ops::Sub;

/// Real polynomial, coefficients constant term first, trailing zeros
/// trimmed (so the zero polynomial has no coefficients).
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(alloc::vec![c])
    }

    /// `slope * x + intercept`.
    pub fn line(slope: f64, intercept: f64) -> Self {
        Polynomial::new(alloc::vec![intercept, slope])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    /// Sign of the polynomial as `x -> +inf` (`toward_plus`) or `-inf`.
    pub fn sign_at_infinity(&self, toward_plus: bool) -> i8 {
        let lead = self.leading();
        let s = if lead > 0.0 {
            1
        } else if lead < 0.0 {
            -1
        } else {
            0
        };
        match self.degree() {
            Some(d) if !toward_plus && d % 2 == 1 => -s,
            _ => s,
        }
    }

    /// Cauchy bound: every real root lies in `[-b, b]`.
    pub fn cauchy_bound(&self) -> f64 {
        let lead = self.leading().abs();
        if self.coeffs.len() < 2 || lead == 0.0 {
            return 1.0;
        }
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / lead)
            .fold(0.0, f64::max);
        1.0 + m
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).copied().unwrap_or(0.0)
                        - rhs.coeffs.get(i).copied().unwrap_or(0.0)
                })
                .collect(),
        )
    }
}

impl fmt::Display for Polynomial {
    /// Comma-separated coefficients, constant term first; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
