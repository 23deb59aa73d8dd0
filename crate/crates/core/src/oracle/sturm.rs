//! Exact real-root counting with Sturm chains over primitive integer
//! polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::Poly;

/// Integer polynomial, ascending degree, no trailing zeros (empty = 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    /// Clears denominators of a rational polynomial, keeping the sign of
    /// every coefficient.
    pub fn from_rationals(coeffs: &[BigRational]) -> Self {
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the (positive) content.
    pub fn primitive(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly(self.0.iter().map(|c| c / &g).collect())
    }

    fn neg(&self) -> IntPoly {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Pseudo-remainder scaled by `|lc(divisor)|^(deg diff + 1)`, so its sign
    /// agrees with the true remainder.
    pub fn signed_prem(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree();
        let lc = divisor.leading().unwrap().clone();
        let lc_abs = lc.abs();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return self.clone();
        }
        let steps = r.len() - dd;
        for _ in 0..steps {
            let top = r.len() - 1;
            let t = r[top].clone();
            // r <- |lc| r - sign(lc) t x^(top - dd) divisor
            for c in r.iter_mut() {
                *c *= &lc_abs;
            }
            let shift = top - dd;
            let t = if lc.is_negative() { -t } else { t };
            for (i, d) in divisor.0.iter().enumerate() {
                r[shift + i] -= &t * d;
            }
            debug_assert!(r[top].is_zero());
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            if r.len() <= dd {
                break;
            }
        }
        IntPoly::new(r)
    }

    /// Exact quotient, assuming `divisor` divides `self` over the rationals;
    /// the result is made primitive with positive leading coefficient.
    pub fn exact_div(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree();
        if self.degree() < dd {
            return IntPoly::new(vec![]);
        }
        let lc = divisor.leading().unwrap();
        let mut r: Vec<BigRational> = self.0.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let mut q = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] / BigRational::from_integer(lc.clone());
            for (i, d) in divisor.0.iter().enumerate() {
                r[k + i] -= &t * BigRational::from_integer(d.clone());
            }
            q[k] = t;
        }
        debug_assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        let q = IntPoly::from_rationals(&q).primitive();
        if q.leading().is_some_and(|c| c.is_negative()) {
            q.neg()
        } else {
            q
        }
    }

    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        while !b.is_zero() {
            let r = a.signed_prem(&b).primitive();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(|c| c.is_negative()) {
            a.neg()
        } else {
            a
        }
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let v = self
            .0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()));
        sign(&v)
    }

    pub fn sign_at_pos_inf(&self) -> i8 {
        self.leading().map_or(0, sign_int)
    }

    pub fn sign_at_neg_inf(&self) -> i8 {
        let s = self.sign_at_pos_inf();
        if self.degree() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    /// Sum of coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Divides by `(x - 1)` as long as 1 is a root; returns the quotient and
    /// the multiplicity removed.
    pub fn deflate_at_one(&self) -> (IntPoly, u32) {
        let mut p = self.clone();
        let mut mult = 0;
        let x_minus_1 = IntPoly::new(vec![-BigInt::one(), BigInt::one()]);
        while !p.is_zero() && p.degree() > 0 && p.value_at_one().is_zero() {
            p = p.exact_div(&x_minus_1);
            mult += 1;
        }
        (p, mult)
    }
}

fn sign(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_int(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl IntoIterator<Item = i8>) -> u32 {
    let mut last = 0;
    let mut count = 0;
    for s in signs.into_iter().filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `p, p', -rem(p, p'), ...` down to a constant, each made primitive.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut polys = vec![p.primitive()];
        if p.degree() == 0 {
            return SturmChain { polys };
        }
        polys.push(p.derivative().primitive());
        loop {
            let n = polys.len();
            let r = polys[n - 2].signed_prem(&polys[n - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(r.neg().primitive());
        }
        SturmChain { polys }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    pub fn variations_at(&self, x: &BigRational) -> u32 {
        variations(self.polys.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> u32 {
        variations(self.polys.iter().map(IntPoly::sign_at_pos_inf))
    }

    pub fn variations_at_neg_inf(&self) -> u32 {
        variations(self.polys.iter().map(IntPoly::sign_at_neg_inf))
    }

    /// Distinct roots in `(a, b]` for a squarefree chain head with `p(a) != 0`.
    pub fn count_between(&self, a: &BigRational, b: &BigRational) -> u32 {
        self.variations_at(a) - self.variations_at(b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmCounts {
    /// distinct roots in `(1, inf)`
    pub n1: u32,
    /// distinct roots in `(0, 1)`
    pub n2: u32,
    /// distinct roots in `(-inf, 0)`
    pub n3: u32,
    /// multiplicity of the root `z = 1`
    pub mult_at_one: u32,
    /// multiplicity of the root `z = 0`
    pub mult_at_zero: u32,
}

impl SturmCounts {
    pub fn counts(&self) -> (u32, u32, u32) {
        (self.n1, self.n2, self.n3)
    }
}

/// Distinct real roots of `q` in each open interval, plus the multiplicity
/// of `z = 1` (and of `z = 0`, which never occurs for hypergeometric
/// polynomials since their constant term is 1).
pub fn sturm_counts(q: &Poly) -> Result<SturmCounts> {
    let coeffs = q.as_exact().ok_or(Error::ExactRequired)?;
    let mut p = IntPoly::from_rationals(coeffs);
    if p.is_zero() {
        return Err(Error::InvalidParameter("zero polynomial has no root count".into()));
    }
    let mult_at_zero = p.0.iter().take_while(|c| c.is_zero()).count() as u32;
    if mult_at_zero > 0 {
        p = IntPoly::new(p.0[mult_at_zero as usize..].to_vec());
    }
    let (p, mult_at_one) = p.deflate_at_one();
    let squarefree = squarefree_part(&p);
    let chain = SturmChain::new(&squarefree);
    let zero = BigRational::zero();
    let one = BigRational::one();
    let v_neg = chain.variations_at_neg_inf();
    let v0 = chain.variations_at(&zero);
    let v1 = chain.variations_at(&one);
    let v_pos = chain.variations_at_pos_inf();
    Ok(SturmCounts {
        n1: v1 - v_pos,
        n2: v0 - v1,
        n3: v_neg - v0,
        mult_at_one,
        mult_at_zero,
    })
}

/// `p / gcd(p, p')`.
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    if p.degree() == 0 {
        return p.primitive();
    }
    let g = p.gcd(&p.derivative());
    if g.degree() == 0 {
        p.primitive()
    } else {
        p.exact_div(&g)
    }
}

/// True when `gcd(q, q')` is constant.
pub fn is_squarefree(q: &Poly) -> Result<bool> {
    let coeffs = q.as_exact().ok_or(Error::ExactRequired)?;
    let p = IntPoly::from_rationals(coeffs);
    Ok(p.degree() == 0 || p.gcd(&p.derivative()).degree() == 0)
}
