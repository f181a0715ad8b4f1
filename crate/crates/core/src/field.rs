//! Exact arithmetic in GF(p^m).
//!
//! Elements are stored by their integer encoding `Σ c_i p^i`, where `c_i` are the
//! polynomial-basis coordinates modulo the field's monic irreducible modulus. All
//! "first element such that ..." searches walk elements in increasing encoding.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Fields at or below this order get full addition tables.
const ADD_TABLE_LIMIT: u32 = 256;

/// A field element, identified by its integer encoding.
///
/// An `Elem` carries no reference to its field; the [`Field`] that produced it
/// interprets it. Matrices pin the field for whole blocks of elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Default moduli, low coefficient first. x is primitive under each of them.
const DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
];

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    /// exp[i] = g^i for i in 0..2(q-1), g the cached primitive element.
    exp: Vec<u32>,
    /// log[a] for a != 0.
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u16>>,
    /// x -> x^sqrt(q), present when m is even.
    conj: Option<Vec<u32>>,
    primitive: u32,
}

/// A finite field GF(p^m) with an explicit modulus. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; modulus={:?})", self.0.p, self.0.m, self.0.modulus)
    }
}

impl Field {
    /// Builds GF(p^m) with the built-in default modulus, or the first irreducible
    /// modulus (in encoding order) with x primitive when the table has no entry.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        check_order(p, m)?;
        if let Some((_, _, modulus)) = DEFAULT_MODULI.iter().find(|(pp, mm, _)| *pp == p && *mm == m) {
            return Field::with_modulus(p, m, modulus);
        }
        if m == 1 {
            return Field::with_modulus(p, 1, &[0, 1]);
        }
        let q = p.pow(m);
        for low in 0..q {
            let mut modulus = digits(low, p, m as usize);
            modulus.push(1);
            if modulus[0] == 0 || !is_irreducible(&modulus, p) {
                continue;
            }
            let field = Field::with_modulus(p, m, &modulus)?;
            // x has encoding p.
            if field.order_of(Elem(p)) == q - 1 {
                return Ok(field);
            }
        }
        Err(Error::InvalidField(format!("no primitive modulus found for GF({p}^{m})")))
    }

    /// Builds GF(p^m) with the given monic modulus of degree m (low coefficient first).
    pub fn with_modulus(p: u32, m: u32, modulus: &[u32]) -> Result<Field> {
        let q = check_order(p, m)?;
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidField(format!(
                "modulus needs {} coefficients, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus coefficient not reduced mod p".into()));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::InvalidField("modulus is not monic".into()));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::InvalidField(format!("modulus {modulus:?} is reducible over GF({p})")));
        }

        let md = m as usize;
        let order = q - 1;
        let factors = prime_factors(order);
        let primitive = (1..q)
            .find(|&g| {
                let g = digits(g, p, md);
                factors
                    .iter()
                    .all(|&r| poly_pow(&g, (order / r) as u64, modulus, p) != one_digits(md))
            })
            .ok_or_else(|| Error::Internal("irreducible modulus without primitive element".into()))?;

        let g = digits(primitive, p, md);
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = one_digits(md);
        for i in 0..order {
            let e = encode(&cur, p);
            exp.push(e);
            log[e as usize] = i;
            cur = poly_mulmod(&cur, &g, modulus, p);
        }
        exp.extend_from_within(..);

        let neg = (0..q)
            .map(|a| encode(&digits(a, p, md).iter().map(|&c| (p - c) % p).collect::<Vec<_>>(), p))
            .collect();

        let mut inner = Inner {
            p,
            m,
            q,
            modulus: modulus.to_vec(),
            exp,
            log,
            neg,
            add: None,
            conj: None,
            primitive,
        };
        if q <= ADD_TABLE_LIMIT {
            let mut table = Vec::with_capacity((q * q) as usize);
            for a in 0..q {
                for b in 0..q {
                    table.push(add_digits(a, b, p, md) as u16);
                }
            }
            inner.add = Some(table);
        }
        let mut field = Field(Arc::new(inner));
        if m.is_multiple_of(2) {
            let root = p.pow(m / 2) as u64;
            let conj = (0..q).map(|a| field.pow(Elem(a), root).0).collect();
            Arc::get_mut(&mut field.0).expect("fresh field").conj = Some(conj);
        }
        Ok(field)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_odd(&self) -> bool {
        self.0.p != 2
    }

    /// True when the field has square order, i.e. carries a Hermitian conjugation.
    pub fn is_hermitian(&self) -> bool {
        self.0.conj.is_some()
    }

    /// √q for fields of square order.
    pub fn sqrt_order(&self) -> Option<u32> {
        self.is_hermitian().then(|| self.0.p.pow(self.0.m / 2))
    }

    /// Text header used by the matrix file format.
    pub fn header(&self) -> String {
        let modulus: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        format!("field p={} m={} modulus={}", self.0.p, self.0.m, modulus.join(","))
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Element with the given integer encoding.
    pub fn elem(&self, value: u32) -> Result<Elem> {
        if value < self.0.q {
            Ok(Elem(value))
        } else {
            Err(Error::ElementOutOfRange { value: value as u64, q: self.0.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.m as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::InvalidField(format!("coefficients {coeffs:?} are not canonical")));
        }
        Ok(Elem(encode(coeffs, self.0.p)))
    }

    /// Polynomial-basis coordinates, low to high, length m.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        digits(a.0, self.0.p, self.0.m as usize)
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.0.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (1..self.0.q).map(Elem)
    }

    pub fn primitive_element(&self) -> Elem {
        Elem(self.0.primitive)
    }

    /// Discrete log base the cached primitive element.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.0.log[a.0 as usize])
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        if inner.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if let Some(table) = &inner.add {
            return Elem(table[(a.0 * inner.q + b.0) as usize] as u32);
        }
        if inner.m == 1 {
            return Elem((a.0 + b.0) % inner.p);
        }
        Elem(add_digits(a.0, b.0, inner.p, inner.m as usize))
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let inner = &*self.0;
        Elem(inner.exp[(inner.log[a.0 as usize] + inner.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.0;
        let order = inner.q - 1;
        Ok(Elem(inner.exp[((order - inner.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let inner = &*self.0;
        let order = (inner.q - 1) as u64;
        let l = inner.log[a.0 as usize] as u64;
        Elem(inner.exp[((l * (e % order)) % order) as usize])
    }

    /// Multiplicative order of a nonzero element (0 for zero).
    pub fn order_of(&self, a: Elem) -> u32 {
        match self.log(a) {
            None => 0,
            Some(l) => {
                let order = self.0.q - 1;
                order / gcd(order, l)
            }
        }
    }

    /// Conjugation x -> x^√q.
    pub fn conj(&self, a: Elem) -> Result<Elem> {
        match &self.0.conj {
            Some(table) => Ok(Elem(table[a.0 as usize])),
            None => Err(Error::NotAHermitianField),
        }
    }

    /// Conjugation, or the identity when the field has no Hermitian structure.
    #[inline]
    pub(crate) fn conj_or_id(&self, a: Elem) -> Elem {
        match &self.0.conj {
            Some(table) => Elem(table[a.0 as usize]),
            None => a,
        }
    }

    pub fn is_square(&self, a: Elem) -> Result<bool> {
        if !self.is_odd() {
            return Err(Error::EvenCharacteristic);
        }
        if a.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(self.pow(a, ((self.0.q - 1) / 2) as u64) == Elem::ONE)
    }

    /// Square root; of the two roots, the one with smaller encoding.
    pub fn sqrt(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Ok(Elem::ZERO);
        }
        let l = self.0.log[a.0 as usize];
        if !self.is_odd() {
            // Squaring is a bijection; the root is a^(q/2).
            return Ok(self.pow(a, (self.0.q / 2) as u64));
        }
        if l % 2 == 1 {
            return Err(Error::NotASquare);
        }
        let r = Elem(self.0.exp[(l / 2) as usize]);
        Ok(r.min(self.neg(r)))
    }

    /// The nonsquare with smallest encoding.
    pub fn canonical_nonsquare(&self) -> Result<Elem> {
        if !self.is_odd() {
            return Err(Error::EvenCharacteristic);
        }
        self.nonzero_elements()
            .find(|&a| self.0.log[a.0 as usize] % 2 == 1)
            .ok_or_else(|| Error::Internal("odd field without nonsquare".into()))
    }

    /// (z1, z2) with z1² + z2² = z, z1 the first element in encoding order for
    /// which z - z1² is a square or zero.
    pub fn sum_of_two_squares(&self, z: Elem) -> Result<(Elem, Elem)> {
        if !self.is_odd() {
            return Err(Error::EvenCharacteristic);
        }
        if z.is_zero() {
            return Err(Error::ZeroArgument);
        }
        for z1 in self.elements() {
            let rest = self.sub(z, self.mul(z1, z1));
            if let Ok(z2) = self.sqrt(rest) {
                return Ok((z1, z2));
            }
        }
        Err(Error::Internal("no representation as a sum of two squares".into()))
    }

    /// An element a with a^(√q+1) = -1.
    pub fn neg_norm_one_element(&self) -> Result<Elem> {
        let root = self.sqrt_order().ok_or(Error::NotAHermitianField)?;
        if !self.is_odd() {
            return Ok(Elem::ONE);
        }
        Ok(self.pow(self.primitive_element(), ((root - 1) / 2) as u64))
    }

    /// First c (encoding order) with c·conj(c) = d, for d in the fixed subfield.
    pub fn norm_solve(&self, d: Elem) -> Result<Elem> {
        let conj = self.0.conj.as_ref().ok_or(Error::NotAHermitianField)?;
        if d.is_zero() {
            return Err(Error::ZeroArgument);
        }
        if conj[d.0 as usize] != d.0 {
            return Err(Error::NotInFixedSubfield);
        }
        self.nonzero_elements()
            .find(|&c| self.mul(c, Elem(conj[c.0 as usize])) == d)
            .ok_or_else(|| Error::Internal("norm map not onto".into()))
    }
}

fn check_order(p: u32, m: u32) -> Result<u32> {
    if p < 2 || !is_prime(p) {
        return Err(Error::InvalidField(format!("characteristic {p} is not prime")));
    }
    if m == 0 {
        return Err(Error::InvalidField("extension degree must be at least 1".into()));
    }
    let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER as u64);
    q.map(|q| q as u32)
        .ok_or_else(|| Error::InvalidField(format!("GF({p}^{m}) exceeds the supported order {MAX_ORDER}")))
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn digits(mut v: u32, p: u32, m: usize) -> Vec<u32> {
    let mut out = vec![0; m];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

fn encode(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn one_digits(m: usize) -> Vec<u32> {
    let mut d = vec![0; m];
    d[0] = 1;
    d
}

fn add_digits(mut a: u32, mut b: u32, p: u32, m: usize) -> u32 {
    let mut out = 0;
    let mut place = 1;
    for _ in 0..m {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// Product of two reduced polynomials modulo a monic modulus.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let m = modulus.len() - 1;
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * m];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    for deg in (m..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &mc) in modulus[..m].iter().enumerate() {
            let idx = deg - m + i;
            prod[idx] = (prod[idx] + (p64 - c) * mc as u64) % p64;
        }
    }
    prod[..m].iter().map(|&c| c as u32).collect()
}

fn poly_pow(base: &[u32], mut e: u64, modulus: &[u32], p: u32) -> Vec<u32> {
    let mut result = one_digits(base.len());
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &b, modulus, p);
        }
        b = poly_mulmod(&b, &b, modulus, p);
        e >>= 1;
    }
    result
}

/// Remainder of `f` modulo a monic `h`.
fn poly_rem(f: &[u32], h: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dh = h.len() - 1;
    let p64 = p as u64;
    for deg in (dh..r.len()).rev() {
        let c = r[deg] % p64;
        if c == 0 {
            continue;
        }
        for (i, &hc) in h.iter().enumerate() {
            let idx = deg - dh + i;
            r[idx] = (r[idx] + (p64 - c) * hc as u64) % p64;
        }
    }
    r.truncate(dh);
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut h = digits(low as u32, p, d);
            h.push(1);
            if poly_rem(f, &h, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, m: u32) -> Field {
        Field::new(p, m).unwrap()
    }

    #[test]
    fn gf4_zeta_squared() {
        let f = Field::with_modulus(2, 2, &[1, 1, 1]).unwrap();
        let zeta = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.mul(zeta, zeta), f.add(zeta, f.one()));
    }

    #[test]
    fn gf9_w_squared() {
        let f = Field::with_modulus(3, 2, &[2, 2, 1]).unwrap();
        let w = f.elem(3).unwrap();
        assert_eq!(f.mul(w, w), f.elem(4).unwrap());
        assert_eq!(f.mul(w, w), f.add(w, f.one()));
    }

    #[test]
    fn additive_identity() {
        for f in [gf(2, 1), gf(3, 2), gf(5, 1), gf(2, 3)] {
            for a in f.elements() {
                assert_eq!(f.add(a, f.zero()), a);
            }
        }
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        let f = gf(5, 1);
        assert_eq!(f.inv(Elem::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f.div(f.one(), Elem::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(2, 17).is_err());
        assert!(Field::new(2, 0).is_err());
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert!(Field::with_modulus(2, 2, &[1, 0, 1]).is_err());
        // not monic
        assert!(Field::with_modulus(3, 2, &[2, 2, 2]).is_err());
        assert!(Field::new(2, 16).is_ok());
    }

    #[test]
    fn conjugation_examples() {
        let f4 = gf(2, 2);
        let zeta = f4.elem(2).unwrap();
        assert_eq!(f4.conj(zeta).unwrap(), f4.mul(zeta, zeta));
        let f9 = gf(3, 2);
        let w = f9.elem(3).unwrap();
        assert_eq!(f9.conj(w).unwrap(), f9.pow(w, 3));
        assert_eq!(f9.conj(f9.elem(2).unwrap()).unwrap(), f9.elem(2).unwrap());
        assert_eq!(gf(5, 1).conj(Elem::ONE), Err(Error::NotAHermitianField));
    }

    #[test]
    fn conj_fixes_exactly_the_subfield() {
        let f = gf(5, 2);
        let fixed = f.elements().filter(|&a| f.conj(a).unwrap() == a).count();
        assert_eq!(fixed, 5);
    }

    #[test]
    fn squares() {
        let f5 = gf(5, 1);
        assert!(f5.is_square(f5.elem(4).unwrap()).unwrap());
        assert!(!f5.is_square(f5.elem(2).unwrap()).unwrap());
        let f3 = gf(3, 1);
        assert!(!f3.is_square(f3.elem(2).unwrap()).unwrap());
        assert_eq!(f3.is_square(Elem::ZERO), Err(Error::ZeroArgument));
        assert_eq!(gf(2, 2).is_square(Elem::ONE), Err(Error::EvenCharacteristic));
    }

    #[test]
    fn square_roots() {
        let f5 = gf(5, 1);
        assert_eq!(f5.sqrt(f5.elem(4).unwrap()).unwrap(), f5.elem(2).unwrap());
        assert_eq!(f5.sqrt(f5.elem(2).unwrap()), Err(Error::NotASquare));
        let f4 = gf(2, 2);
        let zeta = f4.elem(2).unwrap();
        let zeta2 = f4.mul(zeta, zeta);
        assert_eq!(f4.sqrt(zeta).unwrap(), zeta2);
        // exhaustive: the only root of zeta in GF(4)
        let roots: Vec<_> = f4.elements().filter(|&r| f4.mul(r, r) == zeta).collect();
        assert_eq!(roots, vec![zeta2]);
        let f9 = gf(3, 2);
        assert_eq!(f9.sqrt(Elem::ONE).unwrap(), Elem::ONE);
    }

    #[test]
    fn canonical_nonsquares() {
        assert_eq!(gf(3, 1).canonical_nonsquare().unwrap(), Elem(2));
        assert_eq!(gf(5, 1).canonical_nonsquare().unwrap(), Elem(2));
        let f9 = Field::with_modulus(3, 2, &[2, 2, 1]).unwrap();
        assert_eq!(f9.canonical_nonsquare().unwrap(), Elem(3));
        assert_eq!(gf(2, 3).canonical_nonsquare(), Err(Error::EvenCharacteristic));
    }

    #[test]
    fn sums_of_two_squares() {
        let f5 = gf(5, 1);
        assert_eq!(f5.sum_of_two_squares(Elem(2)).unwrap(), (Elem(1), Elem(1)));
        let f3 = gf(3, 1);
        assert_eq!(f3.sum_of_two_squares(Elem(2)).unwrap(), (Elem(1), Elem(1)));

        // Brute-force oracle over all 13² pairs: first z1 in encoding order having
        // some z2, with z2 the smaller root.
        let f13 = gf(13, 1);
        let z = 11u32;
        let mut expected = None;
        'outer: for z1 in 0..13u32 {
            for z2 in 0..13u32 {
                if (z1 * z1 + z2 * z2) % 13 == z {
                    expected = Some((z1, z2));
                    break 'outer;
                }
            }
        }
        let (z1, z2) = f13.sum_of_two_squares(Elem(z)).unwrap();
        assert_eq!(Some((z1.0, z2.0)), expected);
        assert_eq!((z1.0 * z1.0 + z2.0 * z2.0) % 13, z);
    }

    #[test]
    fn neg_norm_one() {
        let f9 = Field::with_modulus(3, 2, &[2, 2, 1]).unwrap();
        let a = f9.neg_norm_one_element().unwrap();
        assert_eq!(a, Elem(3));
        assert_eq!(f9.pow(a, 4), f9.neg(Elem::ONE));
        assert_eq!(gf(2, 2).neg_norm_one_element().unwrap(), Elem::ONE);

        let f25 = gf(5, 2);
        let a = f25.neg_norm_one_element().unwrap();
        let candidates: Vec<_> = f25
            .nonzero_elements()
            .filter(|&x| f25.pow(x, 6) == f25.neg(Elem::ONE))
            .collect();
        assert!(candidates.contains(&a));
        assert_eq!(gf(7, 1).neg_norm_one_element(), Err(Error::NotAHermitianField));
    }

    #[test]
    fn norm_equation() {
        let f4 = gf(2, 2);
        assert_eq!(f4.norm_solve(Elem::ONE).unwrap(), Elem::ONE);
        let f9 = gf(3, 2);
        assert_eq!(f9.norm_solve(Elem::ONE).unwrap(), Elem::ONE);
        let c = f9.norm_solve(Elem(2)).unwrap();
        assert_eq!(f9.pow(c, 4), Elem(2));
        let first = f9.nonzero_elements().find(|&x| f9.pow(x, 4) == Elem(2)).unwrap();
        assert_eq!(c, first);
        assert_eq!(f9.norm_solve(Elem(3)), Err(Error::NotInFixedSubfield));
        assert_eq!(f9.norm_solve(Elem::ZERO), Err(Error::ZeroArgument));
    }

    #[test]
    fn default_moduli_are_irreducible_with_primitive_x() {
        for &(p, m, modulus) in DEFAULT_MODULI {
            let f = Field::with_modulus(p, m, modulus).unwrap();
            assert_eq!(f.order_of(Elem(p)), f.q() - 1, "GF({p}^{m})");
        }
        // fallback search
        let f = Field::new(11, 2).unwrap();
        assert_eq!(f.order_of(Elem(11)), 120);
    }

    #[test]
    fn header_text() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.header(), "field p=3 m=2 modulus=2,2,1");
    }
}
