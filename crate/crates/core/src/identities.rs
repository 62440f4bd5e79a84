//! Exact evaluation of the alternative-algebra identities on random samples.

use serde::Serialize;

use crate::rational::Rational;

/// The operations the identity suite needs from an algebra element.
pub trait AlgebraElement: Clone + PartialEq + std::fmt::Debug {
    /// Panics if the operands live in different algebras.
    fn product(&self, other: &Self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn to_json(&self) -> serde_json::Value;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    LeftAlternative,
    RightAlternative,
    Flexible,
    MoufangLeft,
    MoufangRight,
    MoufangMiddle,
    Composition,
}

impl Identity {
    pub const ALGEBRAIC: [Identity; 6] = [
        Identity::LeftAlternative,
        Identity::RightAlternative,
        Identity::Flexible,
        Identity::MoufangLeft,
        Identity::MoufangRight,
        Identity::MoufangMiddle,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            Identity::LeftAlternative => "x(xy) = (xx)y",
            Identity::RightAlternative => "(yx)x = y(xx)",
            Identity::Flexible => "x(yx) = (xy)x",
            Identity::MoufangLeft => "z(x(zy)) = ((zx)z)y",
            Identity::MoufangRight => "x(z(yz)) = ((xz)y)z",
            Identity::MoufangMiddle => "(zx)(yz) = (z(xy))z",
            Identity::Composition => "N(xy) = N(x)N(y)",
        }
    }

    /// `lhs - rhs` for the algebraic identities.
    fn residual<E: AlgebraElement>(self, x: &E, y: &E, z: &E) -> E {
        let m = |a: &E, b: &E| a.product(b);
        match self {
            Identity::LeftAlternative => m(x, &m(x, y)).minus(&m(&m(x, x), y)),
            Identity::RightAlternative => m(&m(y, x), x).minus(&m(y, &m(x, x))),
            Identity::Flexible => m(x, &m(y, x)).minus(&m(&m(x, y), x)),
            Identity::MoufangLeft => m(z, &m(x, &m(z, y))).minus(&m(&m(&m(z, x), z), y)),
            Identity::MoufangRight => m(x, &m(z, &m(y, z))).minus(&m(&m(&m(x, z), y), z)),
            Identity::MoufangMiddle => m(&m(z, x), &m(y, z)).minus(&m(&m(z, &m(x, y)), z)),
            Identity::Composition => unreachable!("composition is checked through the norm"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityOutcome {
    pub identity: Identity,
    pub formula: &'static str,
    pub checked: usize,
    pub passed: bool,
    /// The first failing triple `[x, y, z]`, when any.
    pub counterexample: Option<Vec<serde_json::Value>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub samples: usize,
    pub outcomes: Vec<IdentityOutcome>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, id: Identity) -> Option<&IdentityOutcome> {
        self.outcomes.iter().find(|o| o.identity == id)
    }
}

/// Scalar-valued norm used by the composition check.
pub type NormFn<'a, E, S> = &'a dyn Fn(&E) -> S;

/// Runs every algebraic identity on `samples` random triples, plus the
/// composition law when a norm is supplied.
pub fn identity_suite<E, S>(
    mut sample: impl FnMut() -> E,
    samples: usize,
    norm: Option<NormFn<'_, E, S>>,
) -> IdentityReport
where
    E: AlgebraElement,
    S: PartialEq + MulLike,
{
    assert!(samples > 0, "identity suite needs at least one sample");
    let mut outcomes: Vec<IdentityOutcome> = Identity::ALGEBRAIC
        .iter()
        .map(|id| IdentityOutcome {
            identity: *id,
            formula: id.formula(),
            checked: 0,
            passed: true,
            counterexample: None,
        })
        .collect();
    if norm.is_some() {
        outcomes.push(IdentityOutcome {
            identity: Identity::Composition,
            formula: Identity::Composition.formula(),
            checked: 0,
            passed: true,
            counterexample: None,
        });
    }
    for _ in 0..samples {
        let (x, y, z) = (sample(), sample(), sample());
        for o in outcomes.iter_mut() {
            o.checked += 1;
            let ok = match o.identity {
                Identity::Composition => {
                    let n = norm.expect("pushed only with a norm");
                    n(&x.product(&y)) == n(&x).times(&n(&y))
                }
                id => id.residual(&x, &y, &z).is_zero(),
            };
            if !ok && o.passed {
                o.passed = false;
                o.counterexample = Some(vec![x.to_json(), y.to_json(), z.to_json()]);
            }
        }
    }
    IdentityReport { samples, outcomes }
}

/// First sampled triple with `(xy)z != x(yz)`.
pub fn associativity_witness<E: AlgebraElement>(
    mut sample: impl FnMut() -> E,
    attempts: usize,
) -> Option<(E, E, E)> {
    (0..attempts).find_map(|_| {
        let (x, y, z) = (sample(), sample(), sample());
        let lhs = x.product(&y).product(&z);
        let rhs = x.product(&y.product(&z));
        (lhs != rhs).then_some((x, y, z))
    })
}

/// Multiplication for norm values (rationals or ring scalars).
pub trait MulLike {
    fn times(&self, other: &Self) -> Self;
}

impl MulLike for Rational {
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}
