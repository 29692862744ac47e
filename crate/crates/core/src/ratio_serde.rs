//! `Ratio<u64>` as `{"numerator": .., "denominator": ..}` in reduced form.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

#[derive(Serialize)]
struct Parts {
    numerator: u64,
    denominator: u64,
}

pub fn serialize<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    Parts {
        numerator: *r.numer(),
        denominator: *r.denom(),
    }
    .serialize(s)
}
