//! Power products and term orders.

use alloc::boxed::Box;
use alloc::vec;
use core::cmp::Ordering;
use core::fmt;

/// Errors from monomial arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialError {
    /// Operands have different variable counts.
    DimensionMismatch,
    /// An exponent left the 16-bit range.
    ExponentOverflow,
    /// Quotient requested for a non-divisor.
    NotDivisible,
}

impl fmt::Display for MonomialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialError::DimensionMismatch => write!(f, "variable count mismatch"),
            MonomialError::ExponentOverflow => write!(f, "exponent exceeds 16-bit range"),
            MonomialError::NotDivisible => write!(f, "monomial does not divide"),
        }
    }
}

/// A power product x_0^{e_0} * ... * x_{n-1}^{e_{n-1}}.
///
/// Exponents are 16 bits wide; operations that would overflow report
/// `ExponentOverflow` rather than wrapping. The total degree is cached so
/// graded comparisons touch the exponent vector only on ties.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    deg: u32,
}

impl Monomial {
    /// The identity power product (all exponents zero).
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0u16; nvars].into_boxed_slice(),
            deg: 0,
        }
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: exps.into(),
            deg,
        }
    }

    /// x_i^e in an nvars-variable ring.
    pub fn var_pow(nvars: usize, i: usize, e: u16) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0u16; nvars];
        exps[i] = e;
        Monomial {
            exps: exps.into_boxed_slice(),
            deg: e as u32,
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        if self.exps.len() != other.exps.len() {
            return Err(MonomialError::DimensionMismatch);
        }
        let mut exps = vec![0u16; self.exps.len()].into_boxed_slice();
        for i in 0..self.exps.len() {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .ok_or(MonomialError::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps,
            deg: self.deg + other.deg,
        })
    }

    /// self / other. Callers use the error to filter reducer candidates.
    pub fn checked_div(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        if self.exps.len() != other.exps.len() {
            return Err(MonomialError::DimensionMismatch);
        }
        let mut exps = vec![0u16; self.exps.len()].into_boxed_slice();
        for i in 0..self.exps.len() {
            exps[i] = self.exps[i]
                .checked_sub(other.exps[i])
                .ok_or(MonomialError::NotDivisible)?;
        }
        Ok(Monomial {
            exps,
            deg: self.deg - other.deg,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum. Cannot overflow.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = vec![0u16; self.exps.len()].into_boxed_slice();
        let mut deg = 0u32;
        for i in 0..self.exps.len() {
            exps[i] = self.exps[i].max(other.exps[i]);
            deg += exps[i] as u32;
        }
        Monomial { exps, deg }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The supported term order families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    GrevLex,
    /// Graded lexicographic.
    GrLex,
    /// Pure lexicographic.
    Lex,
}

impl OrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::GrevLex => "grevlex",
            OrderKind::GrLex => "grlex",
            OrderKind::Lex => "lex",
        }
    }

    pub fn parse(s: &str) -> Option<OrderKind> {
        match s {
            "grevlex" => Some(OrderKind::GrevLex),
            "grlex" => Some(OrderKind::GrLex),
            "lex" => Some(OrderKind::Lex),
            _ => None,
        }
    }
}

/// A term order on power products in a fixed number of variables.
/// Variable 0 is the largest variable in all three families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub nvars: usize,
}

impl TermOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        TermOrder { kind, nvars }
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, MonomialError> {
        if a.nvars() != b.nvars() || a.nvars() != self.nvars {
            return Err(MonomialError::DimensionMismatch);
        }
        Ok(self.compare(a, b))
    }

    /// Compare two monomials. Greater means "larger in the order".
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert!(a.nvars() == self.nvars && b.nvars() == self.nvars);
        self.cmp_impl(a.deg, b.deg, |i| a.exps[i] as i32 - b.exps[i] as i32)
    }

    /// Compare `a` with `b * s` without materializing the product.
    pub fn compare_scaled(&self, a: &Monomial, b: &Monomial, s: &Monomial) -> Ordering {
        debug_assert!(
            a.nvars() == self.nvars && b.nvars() == self.nvars && s.nvars() == self.nvars
        );
        self.cmp_impl(a.deg, b.deg + s.deg, |i| {
            a.exps[i] as i32 - (b.exps[i] as i32 + s.exps[i] as i32)
        })
    }

    /// Compare `a * s` with `b * t` without materializing either product.
    pub fn compare_products(
        &self,
        a: &Monomial,
        s: &Monomial,
        b: &Monomial,
        t: &Monomial,
    ) -> Ordering {
        debug_assert!(a.nvars() == self.nvars && b.nvars() == self.nvars);
        debug_assert!(s.nvars() == self.nvars && t.nvars() == self.nvars);
        self.cmp_impl(a.deg + s.deg, b.deg + t.deg, |i| {
            (a.exps[i] as i32 + s.exps[i] as i32) - (b.exps[i] as i32 + t.exps[i] as i32)
        })
    }

    #[inline]
    fn cmp_impl(&self, da: u32, db: u32, diff: impl Fn(usize) -> i32) -> Ordering {
        match self.kind {
            OrderKind::GrevLex => {
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                // Rightmost nonzero exponent difference decides, inverted:
                // the smaller entry there belongs to the larger monomial.
                for i in (0..self.nvars).rev() {
                    let d = diff(i);
                    if d != 0 {
                        return if d < 0 {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrLex => {
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                self.lex_scan(&diff)
            }
            OrderKind::Lex => self.lex_scan(&diff),
        }
    }

    #[inline]
    fn lex_scan(&self, diff: &impl Fn(usize) -> i32) -> Ordering {
        for i in 0..self.nvars {
            let d = diff(i);
            if d != 0 {
                return if d > 0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps)
    }

    #[test]
    fn grevlex_examples() {
        let ord = TermOrder::new(OrderKind::GrevLex, 3);
        // xy vs xz: same degree, rightmost nonzero difference negative
        assert_eq!(
            ord.compare(&m(&[1, 1, 0]), &m(&[1, 0, 1])),
            Ordering::Greater
        );
        // x^2 vs xy^5: degree decides
        assert_eq!(ord.compare(&m(&[2, 0, 0]), &m(&[1, 5, 0])), Ordering::Less);
        assert_eq!(ord.compare(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
        // x > y > z
        assert_eq!(
            ord.compare(&m(&[1, 0, 0]), &m(&[0, 1, 0])),
            Ordering::Greater
        );
        assert_eq!(
            ord.compare(&m(&[0, 1, 0]), &m(&[0, 0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_and_grlex() {
        let lex = TermOrder::new(OrderKind::Lex, 3);
        // x beats y^5 under lex
        assert_eq!(
            lex.compare(&m(&[1, 0, 0]), &m(&[0, 5, 0])),
            Ordering::Greater
        );
        let grlex = TermOrder::new(OrderKind::GrLex, 3);
        // degree first under grlex
        assert_eq!(
            grlex.compare(&m(&[1, 0, 0]), &m(&[0, 5, 0])),
            Ordering::Less
        );
        // same degree: leftmost difference decides
        assert_eq!(
            grlex.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_grlex_differ() {
        // Classic separating example: x^2*y*z^2 vs x*y^3*z.
        let a = m(&[2, 1, 2]);
        let b = m(&[1, 3, 1]);
        let grevlex = TermOrder::new(OrderKind::GrevLex, 3);
        let grlex = TermOrder::new(OrderKind::GrLex, 3);
        assert_eq!(grevlex.compare(&a, &b), Ordering::Less);
        assert_eq!(grlex.compare(&a, &b), Ordering::Greater);
    }

    #[test]
    fn mul_div_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[0, 1, 3]);
        let ab = a.checked_mul(&b).unwrap();
        assert_eq!(ab.exps(), &[1, 3, 3]);
        assert_eq!(ab.degree(), 7);
        assert_eq!(ab.checked_div(&b).unwrap(), a);
        assert_eq!(a.checked_div(&b), Err(MonomialError::NotDivisible));
        assert_eq!(a.lcm(&b).exps(), &[1, 2, 3]);
        assert!(a.divides(&ab));
        assert!(!ab.divides(&a));
        assert!(Monomial::one(3).divides(&a));
    }

    #[test]
    fn overflow_detected() {
        let big = m(&[u16::MAX, 0]);
        let one_x = m(&[1, 0]);
        assert_eq!(
            big.checked_mul(&one_x),
            Err(MonomialError::ExponentOverflow)
        );
        assert!(big.checked_mul(&m(&[0, 1])).is_ok());
    }

    #[test]
    fn dimension_mismatch_detected() {
        let ord = TermOrder::new(OrderKind::GrevLex, 3);
        assert_eq!(
            ord.try_compare(&m(&[1, 0, 0]), &m(&[1, 0])),
            Err(MonomialError::DimensionMismatch)
        );
        assert_eq!(
            m(&[1, 0]).checked_mul(&m(&[1])),
            Err(MonomialError::DimensionMismatch)
        );
    }

    #[test]
    fn lazy_product_compare_matches_materialized() {
        let ord = TermOrder::new(OrderKind::GrevLex, 4);
        let cases = [
            (
                [1u16, 0, 2, 1],
                [0u16, 3, 0, 0],
                [2u16, 0, 0, 1],
                [0u16, 1, 1, 1],
            ),
            ([0, 0, 0, 0], [1, 1, 1, 1], [1, 1, 1, 1], [0, 0, 0, 0]),
            ([5, 0, 0, 0], [0, 5, 0, 0], [0, 0, 5, 0], [0, 0, 0, 5]),
        ];
        for (a, s, b, t) in cases {
            let (a, s, b, t) = (m(&a), m(&s), m(&b), m(&t));
            let lazy = ord.compare_products(&a, &s, &b, &t);
            let strict = ord.compare(&a.checked_mul(&s).unwrap(), &b.checked_mul(&t).unwrap());
            assert_eq!(lazy, strict);
            assert_eq!(
                ord.compare_scaled(&a, &b, &t),
                ord.compare(&a, &b.checked_mul(&t).unwrap())
            );
        }
    }
}
