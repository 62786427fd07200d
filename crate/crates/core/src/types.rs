//! Vector-valued domain types shared by every module.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Optimization sense shared by all objectives of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Min => "min",
            Direction::Max => "max",
        })
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

macro_rules! rational_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        #[serde(transparent)]
        pub struct $name(Vec<Rational>);

        impl $name {
            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
                self.0.iter()
            }

            pub fn as_slice(&self) -> &[Rational] {
                &self.0
            }

            pub fn into_inner(self) -> Vec<Rational> {
                self.0
            }
        }

        impl Index<usize> for $name {
            type Output = Rational;
            fn index(&self, i: usize) -> &Rational {
                &self.0[i]
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("(")?;
                for (i, v) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str(")")
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let values = Vec::<Rational>::deserialize(d)?;
                $name::new(values).map_err(serde::de::Error::custom)
            }
        }
    };
}

rational_vector!(
    /// Image `f(x)` of a feasible solution: `p >= 2` strictly positive values.
    ObjectiveVector
);

rational_vector!(
    /// Strictly positive weights of a weighted-sum scalarization.
    WeightVector
);

rational_vector!(
    /// Componentwise approximation factors, each at least one.
    FactorVector
);

impl ObjectiveVector {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::ContractViolation(format!(
                "objective vectors need at least two components, got {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::ContractViolation(format!(
                "objective values must be strictly positive, got {v}"
            )));
        }
        Ok(ObjectiveVector(values))
    }

    /// Convenience for tests and generators: `(num, den)` pairs.
    pub fn from_ratios(values: &[(i64, i64)]) -> Result<Self> {
        Self::new(values.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&n| Rational::from_integer(n)).collect())
    }

    /// `sum_j w_j * f_j`.
    pub fn weighted_sum(&self, w: &WeightVector) -> Result<Rational> {
        check_dim(self.len(), w.len())?;
        Ok(self.0.iter().zip(w.iter()).map(|(f, w)| f * w).sum())
    }

    /// Componentwise sum, used to accumulate path and tree costs.
    pub fn add(&self, other: &ObjectiveVector) -> Result<ObjectiveVector> {
        check_dim(self.len(), other.len())?;
        Ok(ObjectiveVector(
            self.0.iter().zip(other.iter()).map(|(a, b)| a + b).collect(),
        ))
    }
}

impl WeightVector {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::ContractViolation("empty weight vector".into()));
        }
        if let Some(v) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::ContractViolation(format!(
                "weights must be strictly positive, got {v}"
            )));
        }
        Ok(WeightVector(values))
    }

    pub fn from_ratios(values: &[(i64, i64)]) -> Result<Self> {
        Self::new(values.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    /// Componentwise reciprocals, e.g. the grid points `b` behind `w = 1/b`.
    pub fn reciprocals(&self) -> Vec<Rational> {
        self.0.iter().map(Rational::recip).collect()
    }

    /// The same direction rescaled so that the smallest weight is one.
    pub fn normalized(&self) -> WeightVector {
        let min = self.0.iter().min().cloned().expect("nonempty");
        WeightVector(self.0.iter().map(|w| w / &min).collect())
    }
}

impl FactorVector {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| **v < Rational::one()) {
            return Err(Error::ContractViolation(format!(
                "approximation factors must be at least 1, got {v}"
            )));
        }
        Ok(FactorVector(values))
    }

    pub fn ones(p: usize) -> Self {
        FactorVector(vec![Rational::one(); p])
    }

    pub fn from_ratios(values: &[(i64, i64)]) -> Result<Self> {
        Self::new(values.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    /// `sum_{j : beta_j > 1} beta_j`, the quantity the multi-factor
    /// guarantees constrain.
    pub fn excess_sum(&self) -> Rational {
        let one = Rational::one();
        self.0.iter().filter(|b| **b > one).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &FactorVector) -> Result<bool> {
        check_dim(self.len(), other.len())?;
        Ok(self.0.iter().zip(other.iter()).all(|(a, b)| a <= b))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<Rational>) -> Self {
        FactorVector(values)
    }
}

/// Per-objective bounds with `0 < lower[j] <= f_j(x) <= upper[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    lower: Vec<Rational>,
    upper: Vec<Rational>,
}

impl Bounds {
    pub fn new(lower: Vec<Rational>, upper: Vec<Rational>) -> Result<Self> {
        check_dim(lower.len(), upper.len())?;
        for (lb, ub) in lower.iter().zip(&upper) {
            if !lb.is_positive() || lb > ub {
                return Err(Error::ContractViolation(format!(
                    "bounds must satisfy 0 < LB <= UB, got LB={lb} UB={ub}"
                )));
            }
        }
        Ok(Bounds { lower, upper })
    }

    pub fn p(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn contains(&self, y: &ObjectiveVector) -> bool {
        y.len() == self.p()
            && y
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lb, ub))| lb <= v && v <= ub)
    }
}
