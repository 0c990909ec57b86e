//! Exact arithmetic on the projective rational line and the group of
//! integer Moebius transformations generated by `T: x -> x + 1` and
//! `S: x -> -1/x`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A point of the projective rational line `Q ∪ {∞}`, stored as a
/// normalized homogeneous integer pair `(p : q)`.
///
/// Normal form: `gcd(|p|, |q|) = 1` and `q > 0`, or `(1 : 0)` for the
/// point at infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    p: BigInt,
    q: BigInt,
}

impl ProjPoint {
    /// Builds the point `(p : q)`, normalizing sign and common factors.
    ///
    /// Panics if both coordinates are zero; `(0 : 0)` is not a point and
    /// cannot arise from applying a nondegenerate map to a point.
    pub fn new(p: BigInt, q: BigInt) -> Self {
        assert!(
            !(p.is_zero() && q.is_zero()),
            "(0 : 0) is not a projective point"
        );
        let g = p.gcd(&q);
        let mut p = p / &g;
        let mut q = q / &g;
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        ProjPoint { p, q }
    }

    pub fn infinity() -> Self {
        ProjPoint {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        ProjPoint::new(BigInt::from(n), BigInt::one())
    }

    /// `num/den` as a projective point; `den` may be zero (giving `∞`).
    pub fn from_ratio(num: i64, den: i64) -> Self {
        ProjPoint::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        ProjPoint::new(r.numer().clone(), r.denom().clone())
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    /// The finite value as an exact rational, or `None` for `∞`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_infinity() {
            None
        } else {
            Some(BigRational::new(self.p.clone(), self.q.clone()))
        }
    }

    /// `|x|`; fixes `∞`.
    pub fn abs(&self) -> Self {
        ProjPoint {
            p: self.p.abs(),
            q: self.q.clone(),
        }
    }

    /// Value comparison of two finite points.
    ///
    /// Panics on `∞` (the projective line is a circle; only the cut
    /// domain [`CutPoint`] carries a total order).
    pub fn cmp_finite(&self, other: &Self) -> Ordering {
        assert!(!self.is_infinity() && !other.is_infinity());
        (&self.p * &other.q).cmp(&(&other.p * &self.q))
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinity() {
            f64::INFINITY
        } else {
            crate::golden::rational_to_f64(&self.to_rational().unwrap())
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else if self.q.is_one() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A point of the cut domain: the projective line cut open at `∞`, so the
/// single point `∞` appears as the two formal ends `-∞` and `+∞`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CutPoint {
    NegInf,
    Fin(ProjPoint),
    PosInf,
}

impl CutPoint {
    /// Wraps a finite point. Panics on `∞`; the ends are `NegInf`/`PosInf`.
    pub fn finite(p: ProjPoint) -> Self {
        assert!(!p.is_infinity(), "∞ is represented by the two ends");
        CutPoint::Fin(p)
    }

    pub fn from_integer(n: i64) -> Self {
        CutPoint::Fin(ProjPoint::from_integer(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        CutPoint::finite(ProjPoint::from_ratio(num, den))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        CutPoint::Fin(ProjPoint::from_rational(r))
    }

    pub fn as_finite(&self) -> Option<&ProjPoint> {
        match self {
            CutPoint::Fin(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_end(&self) -> bool {
        !matches!(self, CutPoint::Fin(_))
    }

    /// Forgets the cut: both ends become the projective point `∞`.
    pub fn to_proj(&self) -> ProjPoint {
        match self {
            CutPoint::Fin(p) => p.clone(),
            _ => ProjPoint::infinity(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            CutPoint::NegInf => f64::NEG_INFINITY,
            CutPoint::PosInf => f64::INFINITY,
            CutPoint::Fin(p) => p.to_f64(),
        }
    }
}

impl Ord for CutPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        use CutPoint::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) => Ordering::Less,
            (_, NegInf) => Ordering::Greater,
            (PosInf, _) => Ordering::Greater,
            (_, PosInf) => Ordering::Less,
            (Fin(x), Fin(y)) => x.cmp_finite(y),
        }
    }
}

impl PartialOrd for CutPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CutPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutPoint::NegInf => write!(f, "-inf"),
            CutPoint::PosInf => write!(f, "+inf"),
            CutPoint::Fin(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for CutPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Side from which a one-sided limit is taken.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// An integer Moebius transformation `x -> (a x + b) / (c x + d)` in
/// PSL-canonical form: the first nonzero entry of `(a, b, c, d)` is
/// positive, so two maps are equal in PSL(2, Z) iff they are equal
/// entrywise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MoebiusMap {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl MoebiusMap {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let mut m = MoebiusMap { a, b, c, d };
        assert!(!m.det().is_zero(), "degenerate Moebius map");
        m.normalize();
        m
    }

    fn normalize(&mut self) {
        let lead = [&self.a, &self.b, &self.c, &self.d]
            .into_iter()
            .find(|x| !x.is_zero());
        if let Some(lead) = lead {
            if lead.is_negative() {
                self.a = -self.a.clone();
                self.b = -self.b.clone();
                self.c = -self.c.clone();
                self.d = -self.d.clone();
            }
        }
    }

    pub fn identity() -> Self {
        MoebiusMap::new(
            BigInt::one(),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::one(),
        )
    }

    /// `x -> x + n`.
    pub fn translation(n: i64) -> Self {
        MoebiusMap::new(
            BigInt::one(),
            BigInt::from(n),
            BigInt::zero(),
            BigInt::one(),
        )
    }

    /// The generator `S: x -> -1/x`.
    pub fn neg_reciprocal() -> Self {
        MoebiusMap::new(
            BigInt::zero(),
            BigInt::from(-1),
            BigInt::one(),
            BigInt::zero(),
        )
    }

    /// `x -> 1/x` (the reflecting branch of the slow Gauss map).
    pub fn reciprocal() -> Self {
        MoebiusMap::new(BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero())
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn entries(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    /// Projective action on homogeneous coordinates:
    /// `(p : q) -> (a p + b q : c p + d q)`, normalized.
    pub fn apply(&self, x: &ProjPoint) -> ProjPoint {
        ProjPoint::new(
            &self.a * &x.p + &self.b * &x.q,
            &self.c * &x.p + &self.d * &x.q,
        )
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        MoebiusMap::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
    }

    /// The PSL inverse (adjugate). Requires `det = ±1`.
    pub fn inverse(&self) -> Self {
        debug_assert!(self.det().abs().is_one());
        MoebiusMap::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    /// Equality in PSL(2, Z), i.e. equality up to global sign.
    pub fn psl_equal(&self, other: &Self) -> bool {
        self == other
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d && self.a.is_one()
    }

    /// Strictly increasing away from the pole iff the determinant is
    /// positive.
    pub fn is_increasing(&self) -> bool {
        self.det().is_positive()
    }

    /// The finite pole (where the denominator vanishes), if any.
    pub fn pole(&self) -> Option<ProjPoint> {
        if self.c.is_zero() {
            None
        } else {
            Some(ProjPoint::new(-self.d.clone(), self.c.clone()))
        }
    }

    /// One-sided limit of the map at a cut point.
    ///
    /// At the pole the image is the cut itself, and which end is reached
    /// depends on the approach side and on the orientation of the map; at
    /// the domain ends the side is immaterial.
    pub fn apply_germ(&self, x: &CutPoint, side: Side) -> CutPoint {
        match x {
            CutPoint::Fin(p) => {
                let y = self.apply(p);
                if !y.is_infinity() {
                    CutPoint::Fin(y)
                } else {
                    match (self.is_increasing(), side) {
                        (true, Side::Left) | (false, Side::Right) => CutPoint::PosInf,
                        (true, Side::Right) | (false, Side::Left) => CutPoint::NegInf,
                    }
                }
            }
            CutPoint::NegInf => {
                let y = self.apply(&ProjPoint::infinity());
                if !y.is_infinity() {
                    CutPoint::Fin(y)
                } else if self.is_increasing() {
                    CutPoint::NegInf
                } else {
                    CutPoint::PosInf
                }
            }
            CutPoint::PosInf => {
                let y = self.apply(&ProjPoint::infinity());
                if !y.is_infinity() {
                    CutPoint::Fin(y)
                } else if self.is_increasing() {
                    CutPoint::PosInf
                } else {
                    CutPoint::NegInf
                }
            }
        }
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The order-preserving compactification `k(x) = x / (1 + |x|)` sending
/// the cut domain onto `[-1, 1]` exactly: `k(∓∞) = ∓1`,
/// `k(p/q) = p / (q + |p|)`.
pub fn compactify(x: &CutPoint) -> BigRational {
    match x {
        CutPoint::NegInf => -BigRational::one(),
        CutPoint::PosInf => BigRational::one(),
        CutPoint::Fin(p) => BigRational::new(p.p.clone(), &p.q + p.p.abs()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t() -> MoebiusMap {
        MoebiusMap::translation(1)
    }

    fn s() -> MoebiusMap {
        MoebiusMap::neg_reciprocal()
    }

    #[test]
    fn apply_generators() {
        assert_eq!(t().apply(&ProjPoint::infinity()), ProjPoint::infinity());
        assert_eq!(s().apply(&ProjPoint::from_integer(-1)), ProjPoint::from_integer(1));
        assert_eq!(s().apply(&ProjPoint::from_integer(0)), ProjPoint::infinity());
    }

    #[test]
    fn compose_and_inverse() {
        assert!(t().compose(&t().inverse()).is_identity());
        assert!(s().compose(&s()).is_identity());
        let ts = t().compose(&s());
        assert!(ts.compose(&ts).compose(&ts).is_identity());
        assert_eq!(
            t().compose(&s()).inverse(),
            s().inverse().compose(&t().inverse())
        );
    }

    #[test]
    fn psl_identities() {
        // S T S = T^{-1} S T^{-1}
        let lhs = s().compose(&t()).compose(&s());
        let rhs = MoebiusMap::translation(-1)
            .compose(&s())
            .compose(&MoebiusMap::translation(-1));
        assert!(lhs.psl_equal(&rhs));
        assert!(!t().psl_equal(&s()));
        // M and -M normalize to the same representative.
        let m = MoebiusMap::new(
            BigInt::from(-2),
            BigInt::from(-1),
            BigInt::from(-1),
            BigInt::from(-1),
        );
        let mm = MoebiusMap::new(
            BigInt::from(2),
            BigInt::from(1),
            BigInt::from(1),
            BigInt::from(1),
        );
        assert!(m.psl_equal(&mm));
    }

    #[test]
    fn compactify_examples() {
        assert_eq!(
            compactify(&CutPoint::from_integer(0)),
            BigRational::from_integer(0.into())
        );
        assert_eq!(
            compactify(&CutPoint::from_ratio(-4, 5)),
            BigRational::new((-4).into(), 9.into())
        );
        assert_eq!(
            compactify(&CutPoint::from_ratio(2, 5)),
            BigRational::new(2.into(), 7.into())
        );
        assert_eq!(compactify(&CutPoint::NegInf), -BigRational::one());
        assert_eq!(compactify(&CutPoint::PosInf), BigRational::one());
    }

    #[test]
    fn cut_order() {
        let pts = [
            CutPoint::NegInf,
            CutPoint::from_integer(-2),
            CutPoint::from_ratio(-1, 2),
            CutPoint::from_integer(0),
            CutPoint::from_ratio(1, 3),
            CutPoint::from_integer(7),
            CutPoint::PosInf,
        ];
        for w in pts.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn germ_at_pole() {
        // S is increasing; approaching its pole 0 from the left gives +∞,
        // from the right -∞.
        assert_eq!(
            s().apply_germ(&CutPoint::from_integer(0), Side::Left),
            CutPoint::PosInf
        );
        assert_eq!(
            s().apply_germ(&CutPoint::from_integer(0), Side::Right),
            CutPoint::NegInf
        );
        // 1/x is decreasing: the sides flip.
        let r = MoebiusMap::reciprocal();
        assert_eq!(
            r.apply_germ(&CutPoint::from_integer(0), Side::Right),
            CutPoint::PosInf
        );
        // T fixes both ends.
        assert_eq!(t().apply_germ(&CutPoint::NegInf, Side::Right), CutPoint::NegInf);
        assert_eq!(t().apply_germ(&CutPoint::PosInf, Side::Left), CutPoint::PosInf);
    }

    fn word_strategy() -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(0u8..4, 0..12)
    }

    fn word_to_map(word: &[u8]) -> MoebiusMap {
        let mut m = MoebiusMap::identity();
        for &g in word {
            let step = match g {
                0 => MoebiusMap::translation(1),
                1 => MoebiusMap::translation(-1),
                2 => MoebiusMap::neg_reciprocal(),
                _ => MoebiusMap::reciprocal(),
            };
            m = m.compose(&step);
        }
        m
    }

    proptest! {
        #[test]
        fn inverse_roundtrip(word in word_strategy(), p in -50i64..50, q in 1i64..20) {
            let m = word_to_map(&word);
            let x = ProjPoint::from_ratio(p, q);
            let y = m.inverse().apply(&m.apply(&x));
            prop_assert_eq!(y, x);
        }

        #[test]
        fn apply_preserves_normal_form(word in word_strategy(), p in -50i64..50, q in 0i64..20) {
            prop_assume!(p != 0 || q != 0);
            let m = word_to_map(&word);
            let y = m.apply(&ProjPoint::from_ratio(p, q));
            let g = y.numer().gcd(y.denom());
            prop_assert!(g.is_one());
            prop_assert!(y.denom().is_positive() || (y.denom().is_zero() && y.numer().is_one()));
        }

        #[test]
        fn compactify_monotone(vals in proptest::collection::vec((-90i64..90, 1i64..40), 2..20)) {
            let mut pts: Vec<CutPoint> = std::iter::once(CutPoint::NegInf)
                .chain(vals.iter().map(|&(p, q)| CutPoint::from_ratio(p, q)))
                .chain(std::iter::once(CutPoint::PosInf))
                .collect();
            pts.sort();
            pts.dedup();
            let ks: Vec<_> = pts.iter().map(compactify).collect();
            for w in ks.windows(2) {
                prop_assert!(w[0] < w[1]);
            }
            prop_assert!(ks.iter().all(|k| k.abs() <= BigRational::one()));
        }
    }
}
