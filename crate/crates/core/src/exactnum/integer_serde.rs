//! Serde adapters writing `BigInt` as a plain JSON integer when it fits in
//! 64 bits and as a decimal string otherwise. Both forms are accepted on input.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Wire(BigInt);

impl Serialize for Wire {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

struct WireVisitor;

impl Visitor<'_> for WireVisitor {
    type Value = Wire;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Wire, E> {
        Ok(Wire(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Wire, E> {
        Ok(Wire(BigInt::from(v)))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Wire, E> {
        v.trim().parse().map(Wire).map_err(|_| E::custom(format!("invalid integer {v:?}")))
    }
}

impl<'de> Deserialize<'de> for Wire {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(WireVisitor)
    }
}

pub mod scalar {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        Wire(v.clone()).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        Wire::deserialize(deserializer).map(|w| w.0)
    }
}

pub mod vector {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(v.iter().map(|x| Wire(x.clone())))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<Wire>::deserialize(deserializer)?.into_iter().map(|w| w.0).collect())
    }
}

pub mod rows {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(v.iter().map(|r| r.iter().map(|x| Wire(x.clone())).collect::<Vec<_>>()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Ok(Vec::<Vec<Wire>>::deserialize(deserializer)?
            .into_iter()
            .map(|r| r.into_iter().map(|w| w.0).collect())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Holder {
        #[serde(with = "vector")]
        v: Vec<BigInt>,
    }

    #[test]
    fn small_as_numbers_large_as_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let h = Holder { v: vec![BigInt::from(-3), big] };
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, r#"{"v":[-3,"123456789012345678901234567890"]}"#);
        assert_eq!(serde_json::from_str::<Holder>(&json).unwrap(), h);
        assert!(serde_json::from_str::<Holder>(r#"{"v":[1.5]}"#).is_err());
    }
}
