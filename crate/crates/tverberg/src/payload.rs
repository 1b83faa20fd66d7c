//! Serializable certificates. A payload carries its instance along with the
//! evidence, so it can be replayed from the JSON alone.

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use tverberg_core::{
    Certificate, Counterexample, FeasibilityOutcome, Functional, Hyperplane, Point, Rational,
    Sign, Witness,
};

use crate::format::parse_rational;

/// A rational serialized as its canonical `p/q` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s)
            .map(Q)
            .ok_or_else(|| de::Error::custom(format!("malformed rational `{s}`")))
    }
}

pub fn qs(v: &[Rational]) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

pub fn rats(v: &[Q]) -> Vec<Rational> {
    v.iter().map(|q| q.0.clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Evidence {
    /// A common point and, per block, convex coefficients reaching it.
    Witness {
        point: Vec<Q>,
        coefficients: Vec<Vec<Q>>,
    },
    EmptyBlock {
        block: usize,
    },
    /// `block` lies strictly on side `side` (+1 or -1) of
    /// `normal . x = offset`, every other block strictly on the other side.
    Separation {
        normal: Vec<Q>,
        offset: Q,
        block: usize,
        side: i8,
    },
    Farkas {
        functionals: Vec<FunctionalJson>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalJson {
    pub normal: Vec<Q>,
    pub bound: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    /// Do the hulls of these blocks share a point?
    HullIntersection {
        dim: usize,
        blocks: Vec<Vec<Vec<Q>>>,
        evidence: Evidence,
    },
    /// Moment-curve parameters whose alternating `r`-partition has no
    /// common point.
    Counterexample {
        dim: usize,
        r: usize,
        alphas: Vec<Q>,
        evidence: Evidence,
    },
}

impl Evidence {
    pub fn from_outcome(outcome: &FeasibilityOutcome) -> Evidence {
        match outcome {
            FeasibilityOutcome::Feasible(w) => Evidence::Witness {
                point: qs(w.point.coords()),
                coefficients: w.coefficients.iter().map(|c| qs(c)).collect(),
            },
            FeasibilityOutcome::Infeasible(Certificate::EmptyBlock { block }) => {
                Evidence::EmptyBlock { block: *block }
            }
            FeasibilityOutcome::Infeasible(Certificate::Separation {
                hyperplane,
                block,
                side,
            }) => Evidence::Separation {
                normal: qs(hyperplane.normal()),
                offset: Q(hyperplane.offset().clone()),
                block: *block,
                side: side.to_i8(),
            },
            FeasibilityOutcome::Infeasible(Certificate::Farkas { functionals }) => Evidence::Farkas {
                functionals: functionals
                    .iter()
                    .map(|f| FunctionalJson {
                        normal: qs(&f.normal),
                        bound: Q(f.bound.clone()),
                    })
                    .collect(),
            },
        }
    }

    /// Back to the core type. Fails only on evidence that cannot even be
    /// represented (zero normal, side not +-1).
    pub fn to_outcome(&self) -> Result<FeasibilityOutcome, String> {
        Ok(match self {
            Evidence::Witness {
                point,
                coefficients,
            } => FeasibilityOutcome::Feasible(Witness {
                point: Point::new(rats(point)),
                coefficients: coefficients.iter().map(|c| rats(c)).collect(),
            }),
            Evidence::EmptyBlock { block } => {
                FeasibilityOutcome::Infeasible(Certificate::EmptyBlock { block: *block })
            }
            Evidence::Separation {
                normal,
                offset,
                block,
                side,
            } => {
                let side = match side {
                    1 => Sign::Positive,
                    -1 => Sign::Negative,
                    s => return Err(format!("separation side must be 1 or -1, got {s}")),
                };
                let hyperplane =
                    Hyperplane::new(rats(normal), offset.0.clone()).map_err(|e| e.to_string())?;
                FeasibilityOutcome::Infeasible(Certificate::Separation {
                    hyperplane,
                    block: *block,
                    side,
                })
            }
            Evidence::Farkas { functionals } => FeasibilityOutcome::Infeasible(Certificate::Farkas {
                functionals: functionals
                    .iter()
                    .map(|f| Functional {
                        normal: rats(&f.normal),
                        bound: f.bound.0.clone(),
                    })
                    .collect(),
            }),
        })
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Evidence::Witness { .. })
    }
}

impl Payload {
    pub fn hulls(dim: usize, blocks: &[Vec<Point>], outcome: &FeasibilityOutcome) -> Payload {
        Payload::HullIntersection {
            dim,
            blocks: blocks
                .iter()
                .map(|b| b.iter().map(|p| qs(p.coords())).collect())
                .collect(),
            evidence: Evidence::from_outcome(outcome),
        }
    }

    pub fn counterexample(c: &Counterexample) -> Payload {
        Payload::Counterexample {
            dim: c.dim,
            r: c.r,
            alphas: qs(&c.alphas),
            evidence: Evidence::from_outcome(&c.outcome),
        }
    }
}
