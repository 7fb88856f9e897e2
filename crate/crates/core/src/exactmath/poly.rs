use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::BigRational;
use crate::error::{Error, Result};

/// Univariate polynomial over Q, coefficients in ascending degree.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial is the
/// empty coefficient list and `degree()` is `None` exactly for it.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigRational>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Primitive integer polynomial with the same roots: denominators cleared,
    /// content divided out, leading coefficient positive.
    pub fn primitive_integer_coefficients(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let negate = ints.last().is_some_and(Signed::is_negative);
        for c in &mut ints {
            *c /= &content;
            if negate {
                *c = -&*c;
            }
        }
        ints
    }

    /// Same polynomial rescaled to primitive integer coefficients.
    pub fn normalized(&self) -> Self {
        Self::new(
            self.primitive_integer_coefficients()
                .into_iter()
                .map(BigRational::from_integer)
                .collect(),
        )
    }

    /// All rational roots, ascending, without multiplicity.
    ///
    /// Candidates are `±d/e` with `d` dividing the constant term and `e` dividing
    /// the leading term of the primitive integer form; each one is confirmed by
    /// exact evaluation. A root at zero is split off first.
    pub fn rational_roots(&self) -> Result<Vec<BigRational>> {
        if self.is_zero() {
            return Err(Error::Input(
                "rational roots of the zero polynomial (every value is a root)".into(),
            ));
        }
        let ints = self.primitive_integer_coefficients();
        let shift = ints.iter().take_while(|c| c.is_zero()).count();
        let core = &ints[shift..];
        let mut roots = Vec::new();
        if shift > 0 {
            roots.push(BigRational::zero());
        }
        if core.len() > 1 {
            let lead = core.last().unwrap().magnitude().clone();
            let constant = core[0].magnitude().clone();
            let numerators = divisors(&constant);
            let denominators = divisors(&lead);
            for p in &numerators {
                for q in &denominators {
                    if !p.gcd(q).is_one() {
                        continue;
                    }
                    for sign in [Sign::Minus, Sign::Plus] {
                        let num = BigInt::from_biguint(sign, p.clone());
                        let den = BigInt::from_biguint(Sign::Plus, q.clone());
                        if integer_root_test(core, &num, &den) {
                            roots.push(BigRational::new(num, den));
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }
}

/// `den^d * P(num/den) == 0` evaluated in integers.
fn integer_root_test(coeffs: &[BigInt], num: &BigInt, den: &BigInt) -> bool {
    let d = coeffs.len() - 1;
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    let mut num_pows = Vec::with_capacity(d + 1);
    let mut np = BigInt::one();
    for _ in 0..=d {
        num_pows.push(np.clone());
        np *= num;
    }
    for i in (0..=d).rev() {
        acc += &coeffs[i] * &num_pows[i] * &den_pow;
        den_pow *= den;
    }
    acc.is_zero()
}

/// Positive divisors by trial division.
fn divisors(n: &BigUint) -> Vec<BigUint> {
    assert!(!n.is_zero());
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut push = |p: BigUint, e: u32| factors.push((p, e));
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            push(p.clone(), e);
        }
        p += if p.to_u32() == Some(2) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        push(rest, 1);
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            for _ in 0..=e {
                next.push(pk.clone());
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new(
            (0..len)
                .map(|i| {
                    let a = self
                        .coeffs
                        .get(i)
                        .cloned()
                        .unwrap_or_else(BigRational::zero);
                    match rhs.coeffs.get(i) {
                        Some(b) => a + b,
                        None => a,
                    }
                })
                .collect(),
        )
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = super::format_rational(&c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coeff = if mag == "1" && i > 0 {
                String::new()
            } else {
                mag
            };
            match i {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{i}")?,
            }
        }
        Ok(())
    }
}
