//! Big integers serialize as decimal strings so JSON consumers never lose
//! precision.

use num_bigint::BigUint;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_str_radix(10))
}

pub fn serialize_vec<S: Serializer>(values: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_str_radix(10))?;
    }
    seq.end()
}
