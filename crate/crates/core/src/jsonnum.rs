//! Float serialization for reports: every float is emitted with 17
//! significant digits so JSON consumers recover the exact f64 without
//! recomputation.

use serde::ser::{Error as _, SerializeSeq};
use serde::{Serialize, Serializer};

struct Sig17(f64);

impl Serialize for Sig17 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(S::Error::custom("non-finite float in report"));
        }
        let raw = serde_json::value::RawValue::from_string(format!("{:.16e}", self.0))
            .map_err(S::Error::custom)?;
        raw.serialize(s)
    }
}

pub(crate) fn f64_sig17<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    Sig17(*v).serialize(s)
}

pub(crate) fn f64_vec_sig17<S: Serializer>(
    v: &[f64],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Sig17(*x))?;
    }
    seq.end()
}
