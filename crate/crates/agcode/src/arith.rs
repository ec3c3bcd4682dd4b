//! Arbitrary-precision arithmetic in prime fields, plus the number-theoretic
//! primitives behind the parameter search: Miller-Rabin primality testing,
//! a two-modulus Chinese remainder solver, and cube roots for moduli
//! congruent to 2 mod 3.
//!
//! All randomness is drawn from an injectable `rand::Rng`, so every caller
//! that seeds its generator gets replayable results.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Default Miller-Rabin round count; composite acceptance probability is
/// at most 4^-64.
pub const DEFAULT_MR_ROUNDS: u32 = 64;

/// Fixed seed for the primality check performed by [`Field::new`]. Field
/// construction is deterministic regardless of the caller's generator.
const FIELD_CHECK_SEED: u64 = 0x6167_636f_6465;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(BigUint, BigUint),
    #[error("modulus {0} is not congruent to 2 mod 3")]
    UnsupportedModulus(BigUint),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// A prime field F_p. The modulus is primality-tested once here and shared
/// (by reference count) with every element, so elements stay cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Field {
    modulus: Arc<BigUint>,
}

impl Field {
    /// Builds the field F_p, rejecting composite or trivial moduli.
    pub fn new(p: BigUint) -> Result<Field, ArithError> {
        let mut rng = ChaCha8Rng::seed_from_u64(FIELD_CHECK_SEED);
        if p < BigUint::from(2u32) || !miller_rabin(&p, DEFAULT_MR_ROUNDS, &mut rng)? {
            return Err(ArithError::NotPrime(p));
        }
        Ok(Field {
            modulus: Arc::new(p),
        })
    }

    pub fn from_u64(p: u64) -> Result<Field, ArithError> {
        Field::new(BigUint::from(p))
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    /// Reduces an arbitrary non-negative integer into the field.
    pub fn element(&self, value: BigUint) -> FieldElement {
        FieldElement {
            value: value % self.modulus.as_ref(),
            field: self.clone(),
        }
    }

    pub fn element_from_u64(&self, value: u64) -> FieldElement {
        self.element(BigUint::from(value))
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn element_from_bigint(&self, value: &BigInt) -> FieldElement {
        let p = BigInt::from(self.modulus.as_ref().clone());
        let mut r = value % &p;
        if r.is_negative() {
            r += &p;
        }
        self.element(r.to_biguint().expect("non-negative after reduction"))
    }

    pub fn zero(&self) -> FieldElement {
        self.element(BigUint::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.element(BigUint::one())
    }

    /// Uniform element of `[0, p)`.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> FieldElement {
        self.element(rng.gen_biguint_below(&self.modulus))
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.modulus)
    }
}

/// A residue in `[0, p)` tagged with its field.
///
/// The arithmetic operators panic when the operands disagree on the modulus;
/// mixing fields is a programming error. Code that assembles elements from
/// external data should call [`FieldElement::same_field`] first to surface
/// [`ArithError::FieldMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: BigUint,
    field: Field,
}

impl FieldElement {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn modulus(&self) -> &BigUint {
        self.field.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Checks that two elements live in the same field.
    pub fn same_field(&self, other: &FieldElement) -> Result<(), ArithError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(ArithError::FieldMismatch)
        }
    }

    fn expect_same_field(&self, other: &FieldElement) {
        assert!(
            self.field == other.field,
            "field mismatch: F_{} vs F_{}",
            self.modulus(),
            other.modulus()
        );
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(&self, exp: &BigUint) -> FieldElement {
        FieldElement {
            value: self.value.modpow(exp, self.modulus()),
            field: self.field.clone(),
        }
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(&self) -> Result<FieldElement, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let exp = self.modulus() - BigUint::from(2u32);
        Ok(self.pow(&exp))
    }

    /// The unique cube root in a field with p = 2 (mod 3), where cubing is a
    /// bijection: the root is `c^e` with `e = 3^-1 mod (p-1)`.
    pub fn cube_root(&self) -> Result<FieldElement, ArithError> {
        let p = self.modulus();
        if p % BigUint::from(3u32) != BigUint::from(2u32) {
            return Err(ArithError::UnsupportedModulus(p.clone()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let e = mod_inverse(&BigUint::from(3u32), &(p - BigUint::one()))
            .expect("3 is invertible mod p-1 when p = 2 (mod 3)");
        Ok(self.pow(&e))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.expect_same_field(rhs);
        let mut v = &self.value + &rhs.value;
        if &v >= self.modulus() {
            v -= self.modulus();
        }
        FieldElement {
            value: v,
            field: self.field.clone(),
        }
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.expect_same_field(rhs);
        let v = if self.value >= rhs.value {
            &self.value - &rhs.value
        } else {
            self.modulus() - &rhs.value + &self.value
        };
        FieldElement {
            value: v,
            field: self.field.clone(),
        }
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.expect_same_field(rhs);
        FieldElement {
            value: &self.value * &rhs.value % self.modulus(),
            field: self.field.clone(),
        }
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let v = if self.value.is_zero() {
            BigUint::zero()
        } else {
            self.modulus() - &self.value
        };
        FieldElement {
            value: v,
            field: self.field.clone(),
        }
    }
}

/// Probabilistic primality test. `false` certifies compositeness; `true`
/// is wrong with probability at most 4^-rounds.
pub fn miller_rabin<R: Rng>(n: &BigUint, rounds: u32, rng: &mut R) -> Result<bool, ArithError> {
    if n < &BigUint::from(2u32) {
        return Err(ArithError::InvalidInput(format!(
            "primality of {n} is undefined here; need n >= 2"
        )));
    }
    let two = BigUint::from(2u32);
    let three = BigUint::from(3u32);
    if *n == two || *n == three {
        return Ok(true);
    }
    if n.is_even() {
        return Ok(false);
    }

    // n - 1 = 2^s * d with d odd
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().expect("n - 1 > 0");
    let d = &n_minus_1 >> s;

    'witness: for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &n_minus_1);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Deterministic convenience wrapper around [`miller_rabin`] with the
/// default round count and a fixed internal seed.
pub fn is_prime(n: &BigUint) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(FIELD_CHECK_SEED);
    matches!(miller_rabin(n, DEFAULT_MR_ROUNDS, &mut rng), Ok(true))
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if b.is_zero() {
        return (a.clone(), BigInt::one(), BigInt::zero());
    }
    let (g, x, y) = extended_gcd(b, &(a % b));
    let q = a / b;
    (g, y.clone(), x - q * y)
}

/// Inverse of `a` modulo `m` (any modulus `m >= 1`), or `None` when
/// `gcd(a, m) != 1`.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_zero() {
        return None;
    }
    if m.is_one() {
        return Some(BigUint::zero());
    }
    let a_int = BigInt::from(a % m);
    let m_int = BigInt::from(m.clone());
    let (g, x, _) = extended_gcd(&a_int, &m_int);
    if !g.is_one() {
        return None;
    }
    let mut x = x % &m_int;
    if x.is_negative() {
        x += &m_int;
    }
    x.to_biguint()
}

/// Solves `x = r1 (mod m1)`, `x = r2 (mod m2)` for coprime moduli, returning
/// the unique solution in `[0, m1*m2)`.
pub fn crt2(
    r1: &BigUint,
    m1: &BigUint,
    r2: &BigUint,
    m2: &BigUint,
) -> Result<BigUint, ArithError> {
    if m1.is_zero() || m2.is_zero() {
        return Err(ArithError::InvalidInput("moduli must be positive".into()));
    }
    let m1_inv = mod_inverse(m1, m2).ok_or_else(|| ArithError::NotCoprime(m1.clone(), m2.clone()))?;
    let r1 = r1 % m1;
    let r2 = r2 % m2;
    // x = r1 + m1 * ((r2 - r1) * m1^-1 mod m2)
    let diff = (BigInt::from(r2) - BigInt::from(r1.clone())) * BigInt::from(m1_inv);
    let m2_int = BigInt::from(m2.clone());
    let mut t = diff % &m2_int;
    if t.is_negative() {
        t += &m2_int;
    }
    let t = t.to_biguint().expect("non-negative after reduction");
    Ok(r1 + m1 * t)
}

/// Uniform integer in `[0, bound)`.
pub fn rand_below<R: Rng>(bound: &BigUint, rng: &mut R) -> Result<BigUint, ArithError> {
    if bound.is_zero() {
        return Err(ArithError::InvalidInput(
            "sampling bound must be positive".into(),
        ));
    }
    Ok(rng.gen_biguint_below(bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> Field {
        Field::from_u64(p).unwrap()
    }

    #[test]
    fn field_rejects_composites() {
        assert!(matches!(Field::from_u64(1), Err(ArithError::NotPrime(_))));
        assert!(matches!(Field::from_u64(15), Err(ArithError::NotPrime(_))));
        assert!(Field::from_u64(2).is_ok());
    }

    #[test]
    fn basic_ops_mod_5() {
        let f5 = f(5);
        let three = f5.element_from_u64(3);
        let four = f5.element_from_u64(4);
        assert_eq!(&three + &four, f5.element_from_u64(2));
        assert_eq!(&three - &four, f5.element_from_u64(4));
        assert_eq!(&three * &four, f5.element_from_u64(2));
        assert_eq!(-&three, f5.element_from_u64(2));
        assert_eq!(f5.one().inv().unwrap(), f5.one());
        // 2^4 = 16 = 1 (mod 5), cross-checked by repeated multiplication
        let two = f5.element_from_u64(2);
        assert_eq!(two.pow(&BigUint::from(4u32)), f5.one());
        let mut acc = f5.one();
        for _ in 0..4 {
            acc = &acc * &two;
        }
        assert_eq!(acc, f5.one());
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(f(7).zero().inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = &f(5).one() + &f(7).one();
    }

    #[test]
    fn same_field_reports_mismatch() {
        assert_eq!(
            f(5).one().same_field(&f(7).one()),
            Err(ArithError::FieldMismatch)
        );
        assert!(f(5).one().same_field(&f(5).zero()).is_ok());
    }

    #[test]
    fn fermat_and_inverse_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [5u64, 29, 101, 999_983] {
            let field = f(p);
            let exp = field.modulus() - BigUint::one();
            for _ in 0..50 {
                let x = field.random_element(&mut rng);
                if x.is_zero() {
                    continue;
                }
                assert_eq!(&x.inv().unwrap() * &x, field.one());
                assert_eq!(x.pow(&exp), field.one());
            }
        }
    }

    #[test]
    fn miller_rabin_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(miller_rabin(&BigUint::from(97u32), 64, &mut rng).unwrap());
        assert!(miller_rabin(&BigUint::from(2u32), 64, &mut rng).unwrap());
        // 561 = 3 * 11 * 17 is a Carmichael number
        assert_eq!(561u32 % 3, 0);
        assert!(!miller_rabin(&BigUint::from(561u32), 64, &mut rng).unwrap());
        assert!(matches!(
            miller_rabin(&BigUint::one(), 64, &mut rng),
            Err(ArithError::InvalidInput(_))
        ));
    }

    #[test]
    fn crt2_examples() {
        let n = |x: u64| BigUint::from(x);
        assert_eq!(crt2(&n(2), &n(3), &n(4), &n(5)).unwrap(), n(14));
        assert_eq!(crt2(&n(0), &n(3), &n(0), &n(5)).unwrap(), n(0));
        // the Lemma-1 shape: x = -1 (mod q), x = 2 (mod 3) for q = 5
        assert_eq!(crt2(&n(4), &n(5), &n(2), &n(3)).unwrap(), n(14));
        assert!(matches!(
            crt2(&n(1), &n(4), &n(3), &n(6)),
            Err(ArithError::NotCoprime(_, _))
        ));
    }

    #[test]
    fn cube_root_examples() {
        let f5 = f(5);
        assert_eq!(
            f5.element_from_u64(3).cube_root().unwrap(),
            f5.element_from_u64(2)
        );
        assert_eq!(f5.zero().cube_root().unwrap(), f5.zero());
        assert_eq!(f5.one().cube_root().unwrap(), f5.one());
        // 7 = 1 (mod 3): cubing is not a bijection there
        assert!(matches!(
            f(7).element_from_u64(2).cube_root(),
            Err(ArithError::UnsupportedModulus(_))
        ));
    }

    #[test]
    fn cube_root_is_total_inverse_of_cubing() {
        for p in [5u64, 11, 17, 23, 29] {
            let field = f(p);
            for c in 0..p {
                let c = field.element_from_u64(c);
                let root = c.cube_root().unwrap();
                assert_eq!(root.pow(&BigUint::from(3u32)), c);
            }
        }
    }

    #[test]
    fn rand_below_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        assert_eq!(
            rand_below(&BigUint::one(), &mut rng).unwrap(),
            BigUint::zero()
        );
        assert!(matches!(
            rand_below(&BigUint::zero(), &mut rng),
            Err(ArithError::InvalidInput(_))
        ));

        // determinism under a fixed seed
        let bound = BigUint::from(1u64 << 32);
        let a = rand_below(&bound, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = rand_below(&bound, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);

        // empirical mean of 10^4 draws below 100 should be near 49.5
        let bound = BigUint::from(100u32);
        let mut sum = 0u64;
        for _ in 0..10_000 {
            sum += u64::try_from(rand_below(&bound, &mut rng).unwrap()).unwrap();
        }
        let mean = sum as f64 / 10_000.0;
        assert!((mean - 49.5).abs() < 3.0, "mean {mean} too far from 49.5");
    }

    proptest! {
        #[test]
        fn crt2_satisfies_both_congruences(r1 in 0u64..1000, r2 in 0u64..1000, i in 0usize..4, j in 0usize..4) {
            // coprime modulus pairs
            let pairs = [(3u64, 5u64), (7, 8), (11, 13), (4, 9)];
            let (m1, _) = pairs[i];
            let (_, m2) = pairs[j];
            let (m1, m2) = (BigUint::from(m1), BigUint::from(m2));
            prop_assume!(num_integer::gcd(m1.clone(), m2.clone()).is_one());
            let (r1, r2) = (BigUint::from(r1), BigUint::from(r2));
            let x = crt2(&r1, &m1, &r2, &m2).unwrap();
            prop_assert_eq!(&x % &m1, &r1 % &m1);
            prop_assert_eq!(&x % &m2, &r2 % &m2);
            prop_assert!(x < &m1 * &m2);
        }

        #[test]
        fn field_ops_satisfy_ring_axioms(a in 0u64..1000, b in 0u64..1000, c in 0u64..1000, pi in 0usize..3) {
            let p = [5u64, 101, 65_537][pi];
            let field = f(p);
            let (a, b, c) = (
                field.element_from_u64(a),
                field.element_from_u64(b),
                field.element_from_u64(c),
            );
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, field.zero());
            prop_assert_eq!(&a + &(-&a), field.zero());
        }
    }
}
