//! Exact integer primitives: zero-extended binomial coefficients, the
//! h-Fibonacci and h-Lucas sequence families, and discrete convolution.
//!
//! Everything here is a pure function over arbitrary-precision integers;
//! nothing is cached, so all of it is trivially safe to call from multiple
//! threads.

use crate::error::{Error, Result};
use crate::ExactInt;
use num_traits::{One, Zero};

/// Zero-extended binomial coefficient.
///
/// Returns C(a, b) for 0 <= b <= a and 0 everywhere else (negative a,
/// negative b, or b > a). This is the combinatorial convention — not the
/// polynomial extension to negative upper arguments, which would give
/// nonzero values for a < 0.
pub fn binom(a: i64, b: i64) -> ExactInt {
    if b < 0 || a < 0 || b > a {
        return ExactInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = ExactInt::one();
    for i in 0..b {
        // Exact at every step: the partial product is C(a, i+1) * (i+1)!/(i+1)!.
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// The two one-parameter sequence families used for edge counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceFamily {
    /// F^(h): 1 for n <= h+1, then F(n-1) + F(n-h-1). F^(1) is the
    /// classical Fibonacci sequence, F^(0) the powers of two.
    HFibonacci,
    /// L^(h): h+1 at n = 1, 1 for 2 <= n <= h+1, then the same recurrence.
    /// L^(1) is the classical Lucas sequence shifted by one.
    HLucas,
}

/// Identifies one concrete sequence: a family together with its parameter h.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequenceSpec {
    pub family: SequenceFamily,
    pub h: u32,
}

impl SequenceSpec {
    pub fn h_fibonacci(h: u32) -> Self {
        SequenceSpec {
            family: SequenceFamily::HFibonacci,
            h,
        }
    }

    pub fn h_lucas(h: u32) -> Self {
        SequenceSpec {
            family: SequenceFamily::HLucas,
            h,
        }
    }

    /// First `count` terms, 1-indexed: returns t[0] = term 1 .. t[count-1].
    pub fn terms(&self, count: u32) -> Vec<ExactInt> {
        let h = self.h as usize;
        let count = count as usize;
        let mut terms: Vec<ExactInt> = Vec::with_capacity(count);
        for n in 1..=count {
            let value = if n == 1 {
                match self.family {
                    SequenceFamily::HFibonacci => ExactInt::one(),
                    SequenceFamily::HLucas => ExactInt::from(self.h + 1),
                }
            } else if n <= h + 1 {
                ExactInt::one()
            } else {
                &terms[n - 2] + &terms[n - h - 2]
            };
            terms.push(value);
        }
        terms
    }

    /// The n-th term (n >= 1).
    pub fn term(&self, n: u32) -> Result<ExactInt> {
        if n == 0 {
            return Err(Error::ZeroSequenceIndex);
        }
        Ok(self.terms(n).pop().expect("n >= 1 terms computed"))
    }
}

/// F_n^(h), the n-th h-Fibonacci number (n >= 1).
pub fn h_fibonacci(h: u32, n: u32) -> Result<ExactInt> {
    SequenceSpec::h_fibonacci(h).term(n)
}

/// L_n^(h), the n-th h-Lucas number (n >= 1).
pub fn h_lucas(h: u32, n: u32) -> Result<ExactInt> {
    SequenceSpec::h_lucas(h).term(n)
}

/// Discrete convolution (a * b)(n) = sum over i of a_i * b_{n-i+1},
/// i = 1..n. The empty sum at n = 0 is 0.
pub fn convolve(a: SequenceSpec, b: SequenceSpec, n: u32) -> ExactInt {
    let ta = a.terms(n);
    let tb = b.terms(n);
    let n = n as usize;
    let mut acc = ExactInt::zero();
    for i in 0..n {
        acc += &ta[i] * &tb[n - 1 - i];
    }
    acc
}
