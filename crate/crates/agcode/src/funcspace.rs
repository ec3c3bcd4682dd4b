//! Function spaces on an elliptic curve with poles confined to the point at
//! infinity and at most one extra point Q.
//!
//! Two concrete function shapes cover everything the code constructions
//! need: monomials x^i y^j spanning L(mO), and the line ratio l1/l2 that
//! extends a monomial basis of L((k-1)O) to one of L(Q + (k-1)O).
//!
//! Pole orders at O follow from (x)_inf = 2O and (y)_inf = 3O: the monomial
//! x^i y^j has pole order 2i + 3j, and order 1 is the Weierstrass gap.

use num_bigint::BigUint;
use rand::Rng;
use thiserror::Error;

use crate::arith::{ArithError, FieldElement};
use crate::curve::{Curve, CurveError, CurvePoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuncError {
    #[error("pole bound must be at least 1")]
    InvalidDegree,
    #[error("cannot evaluate at the point at infinity")]
    PoleAtInfinity,
    #[error("cannot evaluate at the auxiliary pole Q")]
    PoleAtQ,
    #[error("invalid divisor point: {0}")]
    InvalidDivisor(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// The monomial x^i y^j with j restricted to {0, 1}; higher powers of y
/// reduce through the curve equation and never appear in a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    x_exp: u32,
    y_exp: u32,
}

impl Monomial {
    pub fn new(x_exp: u32, y_exp: u32) -> Monomial {
        assert!(y_exp <= 1, "y exponent must be 0 or 1");
        Monomial { x_exp, y_exp }
    }

    pub fn x_exp(&self) -> u32 {
        self.x_exp
    }

    pub fn y_exp(&self) -> u32 {
        self.y_exp
    }

    /// Pole order at O: 2i + 3j.
    pub fn pole_order(&self) -> u32 {
        2 * self.x_exp + 3 * self.y_exp
    }

    pub fn eval(&self, point: &CurvePoint) -> Result<FieldElement, FuncError> {
        let (x, y) = point.coordinates().ok_or(FuncError::PoleAtInfinity)?;
        let mut v = x.pow(&BigUint::from(self.x_exp));
        if self.y_exp == 1 {
            v = &v * y;
        }
        Ok(v)
    }
}

/// The monomial basis of L(mO): all x^i y^j with j in {0, 1} and
/// 2i + 3j <= m, sorted by pole order. Its length is exactly m.
pub fn monomial_basis(m: usize) -> Result<Vec<Monomial>, FuncError> {
    if m == 0 {
        return Err(FuncError::InvalidDegree);
    }
    let mut basis = Vec::with_capacity(m);
    for i in 0..=(m as u32 / 2) {
        basis.push(Monomial::new(i, 0));
    }
    if m >= 3 {
        for i in 0..=((m as u32 - 3) / 2) {
            basis.push(Monomial::new(i, 1));
        }
    }
    basis.sort_by_key(Monomial::pole_order);
    debug_assert_eq!(basis.len(), m);
    Ok(basis)
}

/// The function f' = l1 / l2 with divisor Q' + Q'' - Q - O, where l1 is the
/// chord through Q' and Q'' (= Q - Q'), and l2 is the vertical line at Q.
///
/// Two algebraically equal representations are kept, because the primary
/// ratio degenerates to 0/0 at -Q:
///
/// * primary:   (y - lambda*x - mu) / (x - x_Q)
/// * fallback:  (x - x_Q')(x - x_Q'') / (y + lambda*x + mu)
///
/// They agree wherever both denominators are nonzero, by the curve identity
/// y^2 - (lambda*x + mu)^2 = (x - x_Q')(x - x_Q'')(x - x_Q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FPrime {
    lambda: FieldElement,
    mu: FieldElement,
    x_q: FieldElement,
    y_q: FieldElement,
    x_q1: FieldElement,
    x_q2: FieldElement,
}

impl FPrime {
    /// Builds f' from an explicit chord point Q' (not in {Q, O}).
    pub fn from_chord(
        curve: &Curve,
        q_point: &CurvePoint,
        q_prime: &CurvePoint,
    ) -> Result<FPrime, FuncError> {
        let (x_q, y_q) = q_point
            .coordinates()
            .ok_or_else(|| FuncError::InvalidDivisor("Q must be affine".into()))?;
        if q_prime.is_infinity() || q_prime == q_point {
            return Err(FuncError::InvalidDivisor(
                "chord point Q' must avoid Q and O".into(),
            ));
        }
        if !curve.contains(q_point) || !curve.contains(q_prime) {
            return Err(CurveError::NotOnCurve.into());
        }
        let q_second = curve.add(q_point, &curve.negate(q_prime)?)?;
        let (x1, y1) = q_prime.coordinates().expect("Q' is affine");
        // Q'' = Q - Q' = O would force Q' = Q, which is excluded
        let (x2, y2) = q_second.coordinates().expect("Q'' is affine");

        let lambda = if q_prime == &q_second {
            // tangent case 2Q' = Q; y1 = 0 would give 2Q' = O = Q, excluded
            let three = curve.field().element_from_u64(3);
            let two = curve.field().element_from_u64(2);
            let num = &(&three * &(x1 * x1)) + curve.a();
            &num * &(&two * y1).inv()?
        } else {
            // a vertical chord would force Q = Q' + Q'' = O, excluded
            let den = x2 - x1;
            &(y2 - y1) * &den.inv()?
        };
        let mu = y1 - &(&lambda * x1);
        // l1 passes through -Q = (x_Q, -y_Q), the third chord intersection
        debug_assert_eq!(-y_q, &(&lambda * x_q) + &mu);

        Ok(FPrime {
            lambda,
            mu,
            x_q: x_q.clone(),
            y_q: y_q.clone(),
            x_q1: x1.clone(),
            x_q2: x2.clone(),
        })
    }

    /// Evaluates f' at an affine point other than Q. At -Q the fallback
    /// representation applies; its denominator there is -2*y_Q, nonzero
    /// because -Q = Q would contradict P != Q.
    pub fn eval(&self, point: &CurvePoint) -> Result<FieldElement, FuncError> {
        let (x, y) = point.coordinates().ok_or(FuncError::PoleAtInfinity)?;
        let l1 = &(y - &(&self.lambda * x)) - &self.mu;
        if x != &self.x_q {
            let den = x - &self.x_q;
            return Ok(&l1 * &den.inv()?);
        }
        if y == &self.y_q {
            return Err(FuncError::PoleAtQ);
        }
        // P = -Q
        let num = &(x - &self.x_q1) * &(x - &self.x_q2);
        let den = &(y + &(&self.lambda * x)) + &self.mu;
        Ok(&num * &den.inv()?)
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }

    pub fn mu(&self) -> &FieldElement {
        &self.mu
    }

    pub fn x_q(&self) -> &FieldElement {
        &self.x_q
    }

    pub fn y_q(&self) -> &FieldElement {
        &self.y_q
    }

    pub fn chord_abscissae(&self) -> (&FieldElement, &FieldElement) {
        (&self.x_q1, &self.x_q2)
    }
}

/// Builds f' for a uniformly sampled chord point Q' in E(F_p) \ {Q, O}.
/// Requires the supersingular sampler, i.e. the Lemma-1 curve shape.
pub fn build_fprime<R: Rng>(
    curve: &Curve,
    q_point: &CurvePoint,
    rng: &mut R,
) -> Result<FPrime, FuncError> {
    let (fprime, _) = build_fprime_traced(curve, q_point, rng)?;
    Ok(fprime)
}

/// As [`build_fprime`], also returning the sampled chord point for
/// transcripts.
pub fn build_fprime_traced<R: Rng>(
    curve: &Curve,
    q_point: &CurvePoint,
    rng: &mut R,
) -> Result<(FPrime, CurvePoint), FuncError> {
    if q_point.is_infinity() {
        return Err(FuncError::InvalidDivisor("Q must be affine".into()));
    }
    // the sampler never returns O, so only Q needs rejection; a miss has
    // probability 1/p per draw
    for _ in 0..100_000 {
        let candidate = curve.random_point_supersingular(rng)?;
        if &candidate != q_point {
            let fprime = FPrime::from_chord(curve, q_point, &candidate)?;
            return Ok((fprime, candidate));
        }
    }
    unreachable!("rejection sampling failed 100000 times on a field with p >= 5");
}

/// A row function of a generator matrix: either a basis monomial of L(mO)
/// or the extension function f'.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisFunction {
    Monomial(Monomial),
    FPrime(FPrime),
}

impl BasisFunction {
    pub fn eval(&self, point: &CurvePoint) -> Result<FieldElement, FuncError> {
        match self {
            BasisFunction::Monomial(m) => m.eval(point),
            BasisFunction::FPrime(f) => f.eval(point),
        }
    }
}
