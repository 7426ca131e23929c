use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, Partition, Rational};
use crate::error::{usage, Error, Result};

/// Partition-indexed Pontryagin numbers `⟨p_λ, [M]⟩` of a `dim`-manifold.
/// Absent keys are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PontryaginNumbers {
    dim: u32,
    numbers: BTreeMap<Partition, Rational>,
}

impl PontryaginNumbers {
    pub fn new(dim: u32) -> Result<Self> {
        if !dim.is_multiple_of(4) {
            return usage(format!("dimension {dim} is not a multiple of 4"));
        }
        Ok(PontryaginNumbers {
            dim,
            numbers: BTreeMap::new(),
        })
    }

    /// Builds from `(partition, value)` pairs; every key must have weight
    /// `dim / 4`.
    pub fn from_entries(
        dim: u32,
        entries: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::new(dim)?;
        for (lambda, value) in entries {
            if lambda.weight() != dim / 4 {
                return usage(format!(
                    "partition {lambda} has weight {}, expected {}",
                    lambda.weight(),
                    dim / 4
                ));
            }
            out.set(lambda, value);
        }
        Ok(out)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn get(&self, lambda: &Partition) -> Rational {
        self.numbers.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Stores a value; zeros are dropped. Panics on a key of wrong weight.
    pub fn set(&mut self, lambda: Partition, value: Rational) {
        assert_eq!(lambda.weight(), self.dim / 4, "partition weight mismatch");
        if value.is_zero() {
            self.numbers.remove(&lambda);
        } else {
            self.numbers.insert(lambda, value);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.numbers.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.numbers.is_empty()
    }

    /// True when every number involving `p_1` vanishes.
    pub fn is_string(&self) -> bool {
        self.numbers.keys().all(|l| !l.contains_part(1))
    }

    pub fn scale(&self, c: &Rational) -> PontryaginNumbers {
        let mut out = PontryaginNumbers {
            dim: self.dim,
            numbers: BTreeMap::new(),
        };
        for (l, v) in &self.numbers {
            out.set(l.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &PontryaginNumbers) -> Result<PontryaginNumbers> {
        if self.dim != other.dim {
            return usage(format!("dimension mismatch: {} vs {}", self.dim, other.dim));
        }
        let mut out = self.clone();
        for (l, v) in &other.numbers {
            let sum = out.get(l) + v;
            out.set(l.clone(), sum);
        }
        Ok(out)
    }

    /// `Σ c_i · xs_i` over vectors of one dimension.
    pub fn linear_combination(terms: &[(Rational, &PontryaginNumbers)]) -> Result<PontryaginNumbers> {
        let dim = match terms.first() {
            Some((_, n)) => n.dim,
            None => return usage("empty linear combination"),
        };
        let mut acc = PontryaginNumbers::new(dim)?;
        for (c, n) in terms {
            acc = acc.add(&n.scale(c))?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializing numbers cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct RawNumbers {
    dim: u32,
    numbers: BTreeMap<String, String>,
}

impl Serialize for PontryaginNumbers {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // keep the partition order of the map (descending parts) in the output
        use serde::ser::SerializeMap;
        struct Ordered<'a>(&'a BTreeMap<Partition, Rational>);
        impl Serialize for Ordered<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0.iter().rev() {
                    map.serialize_entry(&k.to_string(), &v.to_string())?;
                }
                map.end()
            }
        }
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("PontryaginNumbers", 2)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("numbers", &Ordered(&self.numbers))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PontryaginNumbers {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawNumbers::deserialize(deserializer)?;
        let mut entries = Vec::with_capacity(raw.numbers.len());
        for (k, v) in raw.numbers {
            let lambda: Partition = k.parse().map_err(D::Error::custom)?;
            let value = parse_rational(&v).map_err(D::Error::custom)?;
            entries.push((lambda, value));
        }
        PontryaginNumbers::from_entries(raw.dim, entries).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn json_shape() {
        let text = r#"{"dim": 24, "numbers": {"6": "1958", "4,2": "2868", "3,3": "200", "2,2,2": "3888"}}"#;
        let nums = PontryaginNumbers::from_json(text).unwrap();
        assert_eq!(nums.get(&"2,2,2".parse().unwrap()), rat(3888));
        assert_eq!(nums.get(&"5,1".parse().unwrap()), rat(0));
        assert!(nums.is_string());
        assert_eq!(
            nums.to_json(),
            r#"{"dim":24,"numbers":{"6":"1958","4,2":"2868","3,3":"200","2,2,2":"3888"}}"#
        );
    }

    #[test]
    fn rejects_wrong_weight_and_dim() {
        assert!(PontryaginNumbers::from_json(r#"{"dim": 24, "numbers": {"4": "1"}}"#).is_err());
        assert!(PontryaginNumbers::from_json(r#"{"dim": 22, "numbers": {}}"#).is_err());
        assert!(PontryaginNumbers::from_json(r#"{"dim": 8, "numbers": {"2": "1/3"}}"#).is_ok());
    }

    #[test]
    fn string_detection() {
        let mut n = PontryaginNumbers::new(8).unwrap();
        n.set("1,1".parse().unwrap(), rat(2));
        assert!(!n.is_string());
    }
}
