use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// User-supplied description of a number field with a chosen root of unity.
///
/// `poly` is the monic defining polynomial with ascending integer
/// coefficients. `integral_basis` row `i` gives `ω_i` in the power basis of
/// a root of `poly`; entries are rational strings like `"1/2"`. `zeta` is a
/// root of unity in the same power-basis coordinates and `m` its asserted
/// multiplicative order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldSpec {
    pub name: String,
    pub degree: usize,
    pub poly: Vec<i64>,
    pub integral_basis: Vec<Vec<String>>,
    pub zeta: Vec<String>,
    pub m: u64,
}

impl FieldSpec {
    /// Parse from TOML or JSON; the format is detected from the content.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::SpecParse(e.to_string()))
        } else {
            toml::from_str(text).map_err(|e| Error::SpecParse(e.to_string()))
        }
    }

    pub fn poly_bigint(&self) -> Vec<BigInt> {
        self.poly.iter().map(|&c| BigInt::from(c)).collect()
    }

    pub fn basis_rational(&self) -> Result<Vec<Vec<BigRational>>> {
        self.integral_basis
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect())
            .collect()
    }

    pub fn zeta_rational(&self) -> Result<Vec<BigRational>> {
        self.zeta.iter().map(|s| parse_rational(s)).collect()
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| Error::SpecParse(format!("bad rational {s:?}")))
}
