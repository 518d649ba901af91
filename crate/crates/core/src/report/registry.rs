//! Built-in matrix pairs.

use std::fmt;

use serde::Serialize;

use crate::algebra::Mat2;
use crate::error::{Error, Result};

/// A known closed form for the fastest growth rate of a named pair.
#[derive(Clone, Copy, Debug)]
pub struct ClosedForm {
    pub expression: &'static str,
    pub value: fn() -> f64,
    /// The cycle whose powers attain the rate.
    pub cycle: &'static str,
    /// `true` when the maximizing cycle is proven, `false` when it is only
    /// supported by exhaustive experiments.
    pub proven: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct RegistryEntry {
    pub name: &'static str,
    pub a: [i64; 4],
    pub b: [i64; 4],
    pub s_max: Option<ClosedForm>,
}

impl RegistryEntry {
    pub fn matrices(&self) -> (Mat2, Mat2) {
        let [a0, a1, a2, a3] = self.a;
        let [b0, b1, b2, b3] = self.b;
        (
            Mat2::from_ints(a0, a1, a2, a3),
            Mat2::from_ints(b0, b1, b2, b3),
        )
    }
}

fn golden() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

fn silver() -> f64 {
    1.0 + 2f64.sqrt()
}

fn sqrt_two_plus_sqrt_three() -> f64 {
    (2.0 + 3f64.sqrt()).sqrt()
}

fn two_plus_sqrt_three() -> f64 {
    2.0 + 3f64.sqrt()
}

fn binary_rate() -> f64 {
    ((3.0 + 13f64.sqrt()) / 2.0).powf(0.25)
}

pub const REGISTRY: [RegistryEntry; 6] = [
    RegistryEntry {
        name: "a1b1",
        a: [1, 1, 0, 1],
        b: [1, 0, 1, 1],
        s_max: Some(ClosedForm {
            expression: "(1+sqrt5)/2",
            value: golden,
            cycle: "AB",
            proven: true,
        }),
    },
    RegistryEntry {
        name: "a2b2",
        a: [1, 2, 0, 1],
        b: [1, 0, 2, 1],
        s_max: Some(ClosedForm {
            expression: "1+sqrt2",
            value: silver,
            cycle: "AB",
            proven: true,
        }),
    },
    RegistryEntry {
        name: "a2bm2",
        a: [1, 2, 0, 1],
        b: [1, 0, -2, 1],
        s_max: Some(ClosedForm {
            expression: "sqrt(2+sqrt3)",
            value: sqrt_two_plus_sqrt_three,
            cycle: "AABB",
            proven: false,
        }),
    },
    RegistryEntry {
        name: "pollicott",
        a: [2, 1, 1, 1],
        b: [3, 1, 2, 1],
        s_max: Some(ClosedForm {
            expression: "2+sqrt3",
            value: two_plus_sqrt_three,
            cycle: "B",
            proven: true,
        }),
    },
    RegistryEntry {
        name: "binary24",
        a: [1, 1, 0, 1],
        b: [0, 1, 1, 0],
        s_max: Some(ClosedForm {
            expression: "((3+sqrt13)/2)^(1/4)",
            value: binary_rate,
            cycle: "AAAB",
            proven: false,
        }),
    },
    RegistryEntry {
        name: "jurga_morris",
        a: [3, 1, 1, 3],
        b: [5, 2, 2, 5],
        s_max: None,
    },
];

pub fn registry_entry(name: &str) -> Option<&'static RegistryEntry> {
    REGISTRY.iter().find(|e| e.name == name)
}

/// A pair of matrices, optionally resolved from the registry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairSpec {
    pub name: Option<String>,
    pub a: Mat2,
    pub b: Mat2,
}

impl PairSpec {
    pub fn new(a: Mat2, b: Mat2) -> Self {
        PairSpec { name: None, a, b }
    }

    pub fn named(name: &str) -> Result<Self> {
        let entry = registry_entry(name).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "unknown pair '{name}', expected one of {}",
                REGISTRY.map(|e| e.name).join(", ")
            ))
        })?;
        let (a, b) = entry.matrices();
        Ok(PairSpec {
            name: Some(entry.name.to_string()),
            a,
            b,
        })
    }

    /// Accepts a registry name or two matrices separated by `|`,
    /// e.g. `1,2;0,1|1,0;2,1`.
    pub fn parse(text: &str) -> Result<Self> {
        match text.split_once('|') {
            Some((a, b)) => Ok(PairSpec::new(a.parse()?, b.parse()?)),
            None if text.contains([',', ';']) => Err(Error::InvalidArgument(format!(
                "'{text}' is not a pair; separate the two matrices with '|'"
            ))),
            None => PairSpec::named(text.trim()),
        }
    }

    pub fn entry(&self) -> Option<&'static RegistryEntry> {
        self.name.as_deref().and_then(registry_entry)
    }

    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("{}|{}", self.a, self.b))
    }
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
