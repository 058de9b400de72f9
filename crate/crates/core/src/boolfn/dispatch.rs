//! The dichotomy: which bases admit polynomial connectivity algorithms and,
//! on the hard side, which reduction applies.

use std::fmt;

use serde::Serialize;

use super::base::BaseSet;
use super::props::{property_report, PropertyReport, SepDegree};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EasyClass {
    Monotone,
    Linear,
    ZeroSeparating,
}

/// Target class of a hardness reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "variant", content = "k", rename_all = "snake_case")]
pub enum TVariant {
    /// `T_ψ = ψ ∧ y`, landing in S₁₂.
    S12,
    /// Self-dual construction with three new variables, landing in D₁.
    D1,
    /// Degree-`k` 0-separating construction, landing in S₀₂ᵏ.
    S02K(u32),
    /// `∀z ((ψ ∧ y) ∨ z)`, quantified formulas only.
    S02Q,
}

impl fmt::Display for TVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TVariant::S12 => f.write_str("s12"),
            TVariant::D1 => f.write_str("d1"),
            TVariant::S02K(k) => write!(f, "s02k({k})"),
            TVariant::S02Q => f.write_str("s02q"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "side", rename_all = "snake_case")]
pub enum DichotomyVerdict {
    Easy { class: EasyClass, quantified: bool },
    Hard { variant: TVariant, quantified: bool },
}

impl DichotomyVerdict {
    pub fn is_easy(&self) -> bool {
        matches!(self, DichotomyVerdict::Easy { .. })
    }

    pub fn easy_class(&self) -> Option<EasyClass> {
        match self {
            DichotomyVerdict::Easy { class, .. } => Some(*class),
            DichotomyVerdict::Hard { .. } => None,
        }
    }

    pub fn hard_variant(&self) -> Option<TVariant> {
        match self {
            DichotomyVerdict::Hard { variant, .. } => Some(*variant),
            DichotomyVerdict::Easy { .. } => None,
        }
    }
}

impl fmt::Display for DichotomyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DichotomyVerdict::Easy { class, .. } => {
                let c = match class {
                    EasyClass::Monotone => "MONOTONE",
                    EasyClass::Linear => "LINEAR",
                    EasyClass::ZeroSeparating => "ZERO_SEPARATING",
                };
                write!(f, "EASY({c})")
            }
            DichotomyVerdict::Hard { variant, .. } => write!(f, "HARD({variant})"),
        }
    }
}

/// Class memberships shared by every function of a base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseMembership {
    pub monotone: bool,
    pub linear: bool,
    pub zero_separating: bool,
    pub self_dual: bool,
    /// Largest degree of 0-separation common to all functions.
    pub zero_sep_degree: SepDegree,
}

impl BaseMembership {
    pub fn of(reports: &[PropertyReport]) -> Self {
        let zero_sep_degree = reports
            .iter()
            .map(|r| r.sep_degree0)
            .min_by_key(|d| d.known_degree())
            .unwrap_or(SepDegree::All);
        Self {
            monotone: reports.iter().all(|r| r.monotone),
            linear: reports.iter().all(|r| r.is_affine()),
            zero_separating: reports.iter().all(|r| r.separating0),
            self_dual: reports.iter().all(|r| r.self_dual),
            zero_sep_degree,
        }
    }

    pub fn compute(base: &BaseSet, degree_bound: u32) -> Result<Self> {
        let reports = base
            .tables()
            .map(|f| property_report(f, degree_bound))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::of(&reports))
    }
}

/// Applies the unquantified or quantified dichotomy to `base`.
pub fn dispatch(base: &BaseSet, quantified: bool, degree_bound: u32) -> Result<DichotomyVerdict> {
    Ok(verdict(&BaseMembership::compute(base, degree_bound)?, quantified, degree_bound))
}

pub fn verdict(m: &BaseMembership, quantified: bool, degree_bound: u32) -> DichotomyVerdict {
    let easy = |class| DichotomyVerdict::Easy { class, quantified };
    if m.monotone {
        return easy(EasyClass::Monotone);
    }
    if m.linear {
        return easy(EasyClass::Linear);
    }
    if m.zero_separating && !quantified {
        return easy(EasyClass::ZeroSeparating);
    }
    let variant = if m.self_dual {
        TVariant::D1
    } else if quantified && m.zero_separating {
        TVariant::S02Q
    } else {
        match m.zero_sep_degree {
            SepDegree::Never => TVariant::S12,
            d => TVariant::S02K(d.known_degree().min(degree_bound)),
        }
    };
    DichotomyVerdict::Hard {
        variant,
        quantified,
    }
}
