//! Bundled example field specs, embedded from `specs/` at the repo root.

use crate::field::FieldSpec;

macro_rules! builtin {
    ($name:ident, $file:literal) => {
        pub fn $name() -> FieldSpec {
            FieldSpec::parse(include_str!(concat!("../../../specs/", $file)))
                .expect("bundled spec must parse")
        }
    };
}

builtin!(rationals, "rationals.toml");
builtin!(gaussian, "gaussian.toml");
builtin!(eisenstein, "eisenstein.toml");
builtin!(sqrt2, "sqrt2.toml");
builtin!(cbrt2, "cbrt2.toml");
builtin!(zeta5, "zeta5.toml");

/// All bundled specs, in a fixed report order.
pub fn all() -> Vec<FieldSpec> {
    vec![
        rationals(),
        gaussian(),
        eisenstein(),
        sqrt2(),
        cbrt2(),
        zeta5(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bundled_specs_load() {
        for spec in all() {
            let order = crate::field::load_field(&spec).expect(&spec.name);
            assert_eq!(order.degree(), spec.degree);
        }
    }
}
