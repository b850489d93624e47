//! Extended real line: finite scalars plus the two infinities.
//!
//! Extended-real function values are the natural codomain for lower
//! semicontinuous functions (`+inf` outside the domain), and set distances
//! use `+inf` for empty or boundedness-mismatched operands. The order is
//! total because NaN is excluded by construction.

use crate::scalar::Scalar;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy)]
pub enum ExtReal<F: Scalar> {
    NegInf,
    Finite(F),
    PosInf,
}

pub use ExtReal::{Finite, NegInf, PosInf};

impl<F: Scalar> ExtReal<F> {
    pub fn finite(v: F) -> Self {
        debug_assert!(!v.is_nan(), "NaN is not an extended real");
        if v.is_infinite() {
            if v > F::zero() {
                PosInf
            } else {
                NegInf
            }
        } else {
            Finite(v)
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn as_finite(&self) -> Option<F> {
        match self {
            Finite(v) => Some(*v),
            _ => None,
        }
    }

    /// Finite value, or the nearest representable stand-in for an infinity.
    pub fn to_float(&self) -> F {
        match self {
            NegInf => F::neg_infinity(),
            Finite(v) => *v,
            PosInf => F::infinity(),
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl<F: Scalar> From<F> for ExtReal<F> {
    fn from(v: F) -> Self {
        ExtReal::finite(v)
    }
}

impl<F: Scalar> PartialEq for ExtReal<F> {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.cmp(other), Ordering::Equal)
    }
}

impl<F: Scalar> Eq for ExtReal<F> {}

impl<F: Scalar> PartialOrd for ExtReal<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Scalar> Ord for ExtReal<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.partial_cmp(b).expect("non-NaN by invariant"),
        }
    }
}

impl<F: Scalar> std::ops::Add for ExtReal<F> {
    type Output = Self;

    /// Extended addition. `+inf + -inf` has no meaning for proper functions
    /// and is rejected.
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Finite(a), Finite(b)) => ExtReal::finite(a + b),
            (PosInf, NegInf) | (NegInf, PosInf) => {
                panic!("inf + -inf is undefined for proper functions")
            }
            (PosInf, _) | (_, PosInf) => PosInf,
            (NegInf, _) | (_, NegInf) => NegInf,
        }
    }
}

impl<F: Scalar> std::ops::Neg for ExtReal<F> {
    type Output = Self;

    fn neg(self) -> Self {
        match self {
            NegInf => PosInf,
            Finite(v) => Finite(-v),
            PosInf => NegInf,
        }
    }
}

impl<F: Scalar> fmt::Display for ExtReal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInf => write!(f, "-inf"),
            Finite(v) => write!(f, "{v}"),
            PosInf => write!(f, "inf"),
        }
    }
}

impl<F: Scalar> Serialize for ExtReal<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            NegInf => serializer.serialize_str("-inf"),
            PosInf => serializer.serialize_str("inf"),
            Finite(v) => serializer.serialize_f64(v.to_f64().expect("finite scalar")),
        }
    }
}

struct ExtRealVisitor<F>(std::marker::PhantomData<F>);

impl<'de, F: Scalar> Visitor<'de> for ExtRealVisitor<F> {
    type Value = ExtReal<F>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a number or the string \"inf\"/\"-inf\"")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Self::Value, E> {
        if v.is_nan() {
            return Err(E::custom("NaN is not an extended real"));
        }
        F::from_f64(v)
            .map(ExtReal::finite)
            .ok_or_else(|| E::custom("value out of range for scalar type"))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
        self.visit_f64(v as f64)
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
        self.visit_f64(v as f64)
    }

    fn visit_str<E: de::Error>(self, s: &str) -> Result<Self::Value, E> {
        match s {
            "inf" | "+inf" => Ok(PosInf),
            "-inf" => Ok(NegInf),
            _ => Err(E::custom(format!("unknown extended-real token {s:?}"))),
        }
    }
}

impl<'de, F: Scalar> Deserialize<'de> for ExtReal<F> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(ExtRealVisitor(std::marker::PhantomData))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order() {
        let vals: Vec<ExtReal<f64>> = vec![NegInf, Finite(-2.0), Finite(0.0), Finite(3.5), PosInf];
        for w in vals.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(Finite(1.0), ExtReal::finite(1.0));
    }

    #[test]
    fn addition_saturates_at_infinities() {
        let a: ExtReal<f64> = Finite(2.0);
        assert_eq!(a + Finite(3.0), Finite(5.0));
        assert_eq!(PosInf + a, PosInf::<f64>);
        assert_eq!(NegInf + a, NegInf::<f64>);
    }

    #[test]
    fn infinite_floats_normalize() {
        assert_eq!(ExtReal::finite(f64::INFINITY), PosInf);
        assert_eq!(ExtReal::finite(f64::NEG_INFINITY), NegInf);
    }

    #[test]
    fn json_tokens() {
        let v: Vec<ExtReal<f64>> = vec![NegInf, Finite(0.5), PosInf];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["-inf",0.5,"inf"]"#);
        let back: Vec<ExtReal<f64>> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
