//! Univariate polynomials over the rationals, just enough for minimal
//! polynomials and rational root extraction.

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use super::Q;

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Q::one()] }
    }

    /// `x - root`
    pub fn linear(root: &Q) -> Self {
        Poly::new(vec![-root.clone(), Q::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Q::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        self.mul(other).div_rem(&g).0.monic()
    }

    /// True iff the polynomial has no repeated factor over the algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Content-normalized integer coefficients (primitive, positive leading).
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().map(|c| c.sign()) == Some(Sign::Minus) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        for c in ints.iter_mut() {
            *c = &*c / &content * &sign;
        }
        ints
    }

    /// All distinct rational roots, ascending, found with the rational-root
    /// theorem on the primitive integer form: a root `p/q` in lowest terms has
    /// `q | leading` and `p | constant`. Roots are deflated as they are found.
    pub fn rational_roots(&self) -> Vec<Q> {
        let mut roots = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let mut ints = self.primitive_integer();
        if ints[0].is_zero() {
            roots.push(Q::zero());
            while ints.first().is_some_and(Zero::is_zero) {
                ints.remove(0);
            }
        }
        'search: loop {
            if ints.len() < 2 {
                break;
            }
            let lead = ints.last().unwrap().clone();
            let constant = ints[0].clone();
            let bound = fujiwara_bound(&ints);
            for qd in positive_divisors(&lead) {
                let limit = (&bound * &qd) + BigInt::one();
                let mut p = BigInt::one();
                while p <= limit {
                    if constant.is_multiple_of(&p) && p.gcd(&qd).is_one() {
                        for cand in [p.clone(), -p.clone()] {
                            if eval_int(&ints, &cand, &qd).is_zero() {
                                roots.push(Q::new(cand.clone(), qd.clone()));
                                ints = deflate(&ints, &cand, &qd);
                                continue 'search;
                            }
                        }
                    }
                    p += 1;
                }
            }
            break;
        }
        roots.sort();
        roots
    }
}

/// `sum a_i p^i q^(d-i)`: zero iff `p/q` is a root.
fn eval_int(ints: &[BigInt], p: &BigInt, q: &BigInt) -> BigInt {
    let d = ints.len() - 1;
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    let mut terms = Vec::with_capacity(ints.len());
    for _ in 0..=d {
        terms.push(qpow.clone());
        qpow *= q;
    }
    let mut ppow = BigInt::one();
    for (i, a) in ints.iter().enumerate() {
        acc += a * &ppow * &terms[d - i];
        ppow *= p;
    }
    acc
}

/// Exact division of the integer polynomial by `(q x - p)`, made primitive.
fn deflate(ints: &[BigInt], p: &BigInt, q: &BigInt) -> Vec<BigInt> {
    let as_q: Vec<Q> = ints.iter().map(|a| Q::from_integer(a.clone())).collect();
    let divisor = Poly::new(vec![Q::from_integer(-p.clone()), Q::from_integer(q.clone())]);
    let (quot, rem) = Poly::new(as_q).div_rem(&divisor);
    debug_assert!(rem.is_zero());
    quot.primitive_integer()
}

/// Fujiwara's bound on root moduli, rounded up generously.
fn fujiwara_bound(ints: &[BigInt]) -> BigInt {
    let d = ints.len() - 1;
    let lead = ints[d].abs();
    let mut best = 0.0f64;
    for k in 1..=d {
        let a = ints[d - k].abs();
        if a.is_zero() {
            continue;
        }
        let mut ratio = Q::new(a, lead.clone()).to_f64().unwrap_or(f64::MAX);
        if k == d {
            ratio /= 2.0;
        }
        let r = ratio.powf(1.0 / k as f64);
        if r > best {
            best = r;
        }
    }
    let b = (2.0 * best * 1.001).ceil() + 1.0;
    if b.is_finite() && b < 1e18 {
        BigInt::from(b as i64)
    } else {
        // Cauchy's bound as a fallback when the float estimate overflows.
        let max = ints[..d].iter().map(|a| a.abs()).max().unwrap_or_default();
        max / lead + BigInt::from(2)
    }
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &d * &d <= n && d <= limit {
        if n.is_multiple_of(&d) {
            let mut e = 0;
            while n.is_multiple_of(&d) {
                n /= &d;
                e += 1;
            }
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for dv in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    fn from_roots(roots: &[Q]) -> Poly {
        roots.iter().fold(Poly::one(), |acc, r| acc.mul(&Poly::linear(r)))
    }

    #[test]
    fn roots_of_products_of_linear_factors() {
        let third = |n: i64| Q::new(n.into(), 3.into());
        let roots = vec![third(-4), q(-1), third(-2), q(0), third(1), third(2), q(2), q(5)];
        let p = from_roots(&roots).mul(&Poly::new(vec![q(7)]));
        assert_eq!(p.rational_roots(), roots);
    }

    #[test]
    fn irrational_roots_are_not_reported() {
        // x^2 - 2
        let p = Poly::new(vec![q(-2), q(0), q(1)]);
        assert!(p.rational_roots().is_empty());
        let with_one = p.mul(&Poly::linear(&q(1)));
        assert_eq!(with_one.rational_roots(), vec![q(1)]);
    }

    #[test]
    fn squarefree_detection() {
        assert!(from_roots(&[q(1), q(2)]).is_squarefree());
        assert!(!from_roots(&[q(1), q(1), q(2)]).is_squarefree());
        assert!(!Poly::new(vec![q(0), q(0), q(1)]).is_squarefree());
    }

    #[test]
    fn lcm_and_gcd() {
        let a = from_roots(&[q(1), q(2)]);
        let b = from_roots(&[q(2), q(3)]);
        assert_eq!(a.gcd(&b), from_roots(&[q(2)]));
        assert_eq!(a.lcm(&b), from_roots(&[q(1), q(2), q(3)]));
    }
}
