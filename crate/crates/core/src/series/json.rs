//! JSON form of a series: `{"valuation": v, "order": N, "coeffs": [["num", "den"], ...]}`.
//!
//! Integers are decimal strings because coefficients leave the 64-bit range
//! almost immediately. `coeffs` lists `q^v ..= q^N` densely.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LaurentSeries;
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Serialize, Deserialize)]
struct Wire {
    valuation: i64,
    order: i64,
    coeffs: Vec<[String; 2]>,
}

pub fn rational_to_wire(r: &Rational) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

pub fn rational_from_wire(w: &[String; 2]) -> Result<Rational> {
    let num: BigInt = w[0]
        .parse()
        .map_err(|_| Error::Json(format!("bad numerator {:?}", w[0])))?;
    let den: BigInt = w[1]
        .parse()
        .map_err(|_| Error::Json(format!("bad denominator {:?}", w[1])))?;
    if den <= BigInt::from(0) {
        return Err(Error::Json(format!(
            "denominator must be positive, got {den}"
        )));
    }
    Ok(Rational::new(num, den))
}

impl LaurentSeries {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("series serialization is infallible")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))
    }

    fn to_wire(&self) -> Wire {
        Wire {
            valuation: self.valuation,
            order: self.order,
            coeffs: self.coeffs.iter().map(rational_to_wire).collect(),
        }
    }

    fn from_wire(w: Wire) -> Result<Self> {
        let span = w.order as i128 - w.valuation as i128 + 1;
        if (w.coeffs.len() as i128) > span.max(0) {
            return Err(Error::Json(format!(
                "{} coefficients do not fit between q^{} and q^{}",
                w.coeffs.len(),
                w.valuation,
                w.order
            )));
        }
        let coeffs = w
            .coeffs
            .iter()
            .map(rational_from_wire)
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentSeries::from_coeffs(w.valuation, coeffs, w.order))
    }
}

impl Serialize for LaurentSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        LaurentSeries::from_wire(w).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_shape() {
        let f = LaurentSeries::from_coeffs(
            -1,
            vec![
                Rational::from_integer(1.into()),
                Rational::new(3.into(), 4.into()),
            ],
            1,
        );
        let v = f.to_json();
        assert_eq!(
            v,
            serde_json::json!({"valuation": -1, "order": 1, "coeffs": [["1","1"],["3","4"],["0","1"]]})
        );
        assert_eq!(LaurentSeries::from_json(&v).unwrap(), f);
    }

    #[test]
    fn zero_series_round_trips() {
        let z = LaurentSeries::zero(6);
        let v = z.to_json();
        assert_eq!(v["valuation"], 7);
        let back = LaurentSeries::from_json(&v).unwrap();
        assert!(back.is_zero());
        assert_eq!(back.order(), 6);
    }

    #[test]
    fn rejects_malformed() {
        let too_many =
            serde_json::json!({"valuation": 0, "order": 0, "coeffs": [["1","1"],["2","1"]]});
        assert!(LaurentSeries::from_json(&too_many).is_err());
        let bad_den = serde_json::json!({"valuation": 0, "order": 0, "coeffs": [["1","0"]]});
        assert!(LaurentSeries::from_json(&bad_den).is_err());
        let not_num = serde_json::json!({"valuation": 0, "order": 0, "coeffs": [["x","1"]]});
        assert!(LaurentSeries::from_json(&not_num).is_err());
    }
}
