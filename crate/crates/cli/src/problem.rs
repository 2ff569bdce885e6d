//! Problem files: a single JSON document with `states`, `consequences`,
//! and `acts`. Plausibility levels and weights are optional per state;
//! weights are exact rationals written as `"2/9"` strings or integers.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use ordec_core::ordinal::{Act, Event, OutcomeScale, StateSpace};
use ordec_core::{PossibilityProfile, WeightProfile};

/// Exact nonnegative rational, serialized canonically as a string
/// (`"2/9"`, or `"2"` for integers).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight(pub BigRational);

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct WeightVisitor;
        impl Visitor<'_> for WeightVisitor {
            type Value = Weight;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or a rational string like \"2/9\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Weight, E> {
                Ok(Weight(BigRational::from_integer(BigInt::from(v))))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Weight, E> {
                if v < 0 {
                    return Err(E::custom("weights must be nonnegative"));
                }
                Ok(Weight(BigRational::from_integer(BigInt::from(v))))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Weight, E> {
                let parsed = BigRational::from_str(v.trim())
                    .map_err(|e| E::custom(format!("bad rational '{v}': {e}")))?;
                if parsed < BigRational::zero() {
                    return Err(E::custom("weights must be nonnegative"));
                }
                Ok(Weight(parsed))
            }
        }
        deserializer.deserialize_any(WeightVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateDecl {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Weight>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConsequenceDecl {
    pub name: String,
    pub rank: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActDecl {
    pub name: String,
    pub outcomes: BTreeMap<String, String>,
}

/// The raw document, in declaration order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub states: Vec<StateDecl>,
    pub consequences: Vec<ConsequenceDecl>,
    #[serde(default)]
    pub acts: Vec<ActDecl>,
}

/// A parsed and validated problem: core objects plus the canonical file.
#[derive(Debug, Clone)]
pub struct Problem {
    pub file: ProblemFile,
    pub space: StateSpace,
    pub scale: OutcomeScale,
    pub acts: Vec<(String, Act)>,
    pub pi: Option<PossibilityProfile>,
    pub weights: Option<WeightProfile>,
}

impl Problem {
    pub fn load(path: &Path) -> Result<Problem> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        Problem::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Problem> {
        let file: ProblemFile = serde_json::from_str(text).context("problem file")?;
        Problem::from_parts(file)
    }

    pub fn from_parts(file: ProblemFile) -> Result<Problem> {
        let space = StateSpace::new(file.states.iter().map(|s| s.name.clone()))?;
        let scale = OutcomeScale::new(file.consequences.iter().map(|c| (c.name.clone(), c.rank)))?;

        let mut acts = Vec::with_capacity(file.acts.len());
        for decl in &file.acts {
            if acts.iter().any(|(n, _)| n == &decl.name) {
                bail!("duplicate act name '{}'", decl.name);
            }
            let act = Act::new(
                &space,
                &scale,
                decl.outcomes.iter().map(|(s, c)| (s.as_str(), c.as_str())),
            )
            .with_context(|| format!("act '{}'", decl.name))?;
            acts.push((decl.name.clone(), act));
        }

        let pi_count = file.states.iter().filter(|s| s.pi.is_some()).count();
        let pi = match pi_count {
            0 => None,
            n if n == file.states.len() => Some(PossibilityProfile::new(
                &space,
                file.states.iter().map(|s| s.pi.unwrap()).collect(),
            )?),
            _ => bail!("either every state carries a pi level or none does"),
        };

        let weight_count = file.states.iter().filter(|s| s.weight.is_some()).count();
        let weights = match weight_count {
            0 => None,
            n if n == file.states.len() => Some(WeightProfile::new(
                &space,
                file.states
                    .iter()
                    .map(|s| s.weight.clone().unwrap().0)
                    .collect(),
            )?),
            _ => bail!("either every state carries a weight or none does"),
        };

        Ok(Problem {
            file,
            space,
            scale,
            acts,
            pi,
            weights,
        })
    }

    /// Canonical rendering: pretty JSON plus a trailing newline. Parsing
    /// the canonical form and re-serializing is the identity.
    pub fn canonical_json(&self) -> String {
        let mut out =
            serde_json::to_string_pretty(&self.file).expect("problem files always serialize");
        out.push('\n');
        out
    }

    pub fn act(&self, name: &str) -> Result<&Act> {
        self.acts
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, a)| a)
            .ok_or_else(|| anyhow!("unknown act '{name}'"))
    }

    pub fn require_pi(&self) -> Result<&PossibilityProfile> {
        self.pi
            .as_ref()
            .ok_or_else(|| anyhow!("this operation needs pi levels on every state"))
    }

    pub fn require_weights(&self) -> Result<&WeightProfile> {
        self.weights
            .as_ref()
            .ok_or_else(|| anyhow!("this operation needs weights on every state"))
    }
}

/// Parse an event literal: `{s1,s2}`, `!{s1}` for the complement, `{}` for
/// the empty event.
pub fn parse_event_literal(space: &StateSpace, input: &str) -> Result<Event> {
    let trimmed = input.trim();
    let (complemented, body) = match trimmed.strip_prefix('!') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, trimmed),
    };
    let inner = body
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .ok_or_else(|| {
            anyhow!("malformed event literal '{input}': expected {{name,...}}, !{{...}}, or {{}}")
        })?;
    let mut event = space.empty_event();
    if !inner.trim().is_empty() {
        for part in inner.split(',') {
            let name = part.trim();
            if name.is_empty() {
                bail!("malformed event literal '{input}': empty state name");
            }
            event = event.union(&space.singleton(name)?);
        }
    }
    Ok(if complemented {
        event.complement()
    } else {
        event
    })
}
