//! Exact field elements: arbitrary-precision rationals and prime-field residues.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The ground field a computation runs over.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Field {
    /// The rational numbers.
    Q,
    /// The prime field of the given characteristic.
    Fp(u64),
}

impl Field {
    /// Prime field constructor; rejects non-primes and characteristic 0.
    pub fn fp(p: u64) -> Result<Field, String> {
        if p < 2 {
            return Err(format!("{p} is not prime"));
        }
        if p > (1 << 31) {
            return Err(format!("prime {p} too large (must fit in 31 bits)"));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(format!("{p} is not prime"));
            }
            d += 1;
        }
        Ok(Field::Fp(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { p: *p, r: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { p: *p, r: 1 },
        }
    }

    /// Image of an integer in the field.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, r: m }
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (num-rational's canonical form); residues live in [0, p).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, r: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { r, .. } => *r == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, r: a }, Scalar::Fp { p: q, r: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { p: *p, r: (a + b) % p }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, r: a }, Scalar::Fp { p: q, r: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                let prod = (*a as u128 * *b as u128) % (*p as u128);
                Scalar::Fp { p: *p, r: prod as u64 }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, r } => Scalar::Fp { p: *p, r: if *r == 0 { 0 } else { p - r } },
        }
    }

    /// Multiplicative inverse; panics on zero (pivots are checked nonzero first).
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Q(a.recip())
            }
            Scalar::Fp { p, r } => {
                assert!(*r != 0, "inverse of zero");
                Scalar::Fp { p: *p, r: mod_inv(*r, *p) }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }
}

/// Inverse of a mod p by extended Euclid.
fn mod_inv(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "not invertible mod p");
    t.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { r, .. } => write!(f, "{r}"),
        }
    }
}

/// Evaluate a polynomial (coefficients low to high) at a point by Horner.
pub fn eval_poly(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let field = x.field();
    let mut acc = field.zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// All roots of a nonzero polynomial that lie in its field, sorted, each
/// listed once. None when completeness cannot be certified: over Q the
/// rational root theorem needs the cleared coefficients to stay below a
/// divisor-enumeration bound, over F_p residues are scanned only for
/// p <= 65536.
pub fn field_roots(field: Field, coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
    let deg = coeffs.iter().rposition(|c| !c.is_zero())?;
    let coeffs = &coeffs[..=deg];
    if deg == 0 {
        return Some(Vec::new());
    }
    match field {
        Field::Fp(p) => {
            if p > 65536 {
                return None;
            }
            let mut roots = Vec::new();
            for r in 0..p {
                let x = Scalar::Fp { p, r };
                if eval_poly(coeffs, &x).is_zero() {
                    roots.push(x);
                }
            }
            Some(roots)
        }
        Field::Q => {
            // strip t^k so the constant term is nonzero
            let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
            let body = &coeffs[low..];
            let mut roots: Vec<BigRational> = Vec::new();
            if low > 0 {
                roots.push(BigRational::zero());
            }
            if body.len() > 1 {
                let rats: Vec<&BigRational> = body
                    .iter()
                    .map(|c| match c {
                        Scalar::Q(q) => q,
                        Scalar::Fp { .. } => unreachable!("field tag says Q"),
                    })
                    .collect();
                let mut lcm_den = BigInt::one();
                for r in &rats {
                    lcm_den = num_integer::lcm(lcm_den, r.denom().clone());
                }
                let ints: Vec<BigInt> = rats
                    .iter()
                    .map(|r| (r.numer() * &lcm_den) / r.denom())
                    .collect();
                let head = divisors_clamped(ints.first().unwrap())?;
                let tail = divisors_clamped(ints.last().unwrap())?;
                for p in &head {
                    for q in &tail {
                        for sign in [1i64, -1] {
                            let cand = BigRational::new(
                                BigInt::from(*p as i64 * sign),
                                BigInt::from(*q),
                            );
                            if eval_poly(body, &Scalar::Q(cand.clone())).is_zero()
                                && !roots.contains(&cand)
                            {
                                roots.push(cand);
                            }
                        }
                    }
                }
            }
            roots.sort();
            Some(roots.into_iter().map(Scalar::Q).collect())
        }
    }
}

/// Positive divisors, or None when the value is too large to enumerate.
fn divisors_clamped(n: &BigInt) -> Option<Vec<u64>> {
    let m = u64::try_from(n.abs()).ok()?;
    assert!(m != 0, "constant and leading terms are nonzero here");
    if m > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            out.push(m / d);
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    Some(out)
}

/// Parse "a" or "a/b" into a field element.
pub fn parse_scalar(field: Field, text: &str) -> Result<Scalar, String> {
    let parse_int = |s: &str| -> Result<i64, String> {
        s.trim().parse::<i64>().map_err(|e| format!("bad integer {s:?}: {e}"))
    };
    match text.split_once('/') {
        None => Ok(field.from_i64(parse_int(text)?)),
        Some((n, d)) => {
            let num = field.from_i64(parse_int(n)?);
            let den = field.from_i64(parse_int(d)?);
            if den.is_zero() {
                return Err(format!("zero denominator in {text:?}"));
            }
            Ok(num.div(&den))
        }
    }
}
