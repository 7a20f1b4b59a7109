use crate::dataset::{AttrSet, BiSet, Universe};
use crate::error::{Error, Result};

/// A selection condition on a bi-set `(X, Y)`.
///
/// Thresholds are strict: `MinLength(γ)` holds when `|X| > γ` and
/// `MaxLength(γ)` when `|X| < γ`; frequency uses `|Y|` and area `|X|·|Y|`.
/// Attribute and object references are indices into the universe of the
/// graph the predicate is evaluated on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    MinLength(usize),
    MaxLength(usize),
    MinFrequency(usize),
    MaxFrequency(usize),
    MinArea(usize),
    MaxArea(usize),
    HasAttr(usize),
    NotHasAttr(usize),
    HasObj(usize),
    NotHasObj(usize),
    And(Vec<Predicate>),
    Or(Vec<Predicate>),
    Not(Box<Predicate>),
}

/// Behaviour of a predicate along the concept order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Monotonicity {
    /// Failing at a concept implies failing at every concept above it.
    AntiMonotone,
    /// Failing at a concept implies failing at every concept below it.
    Monotone,
    /// Constant.
    Both,
    Neither,
}

impl Monotonicity {
    fn from_flags(anti: bool, mono: bool) -> Self {
        match (anti, mono) {
            (true, true) => Monotonicity::Both,
            (true, false) => Monotonicity::AntiMonotone,
            (false, true) => Monotonicity::Monotone,
            (false, false) => Monotonicity::Neither,
        }
    }

    fn flags(self) -> (bool, bool) {
        match self {
            Monotonicity::Both => (true, true),
            Monotonicity::AntiMonotone => (true, false),
            Monotonicity::Monotone => (false, true),
            Monotonicity::Neither => (false, false),
        }
    }

    pub fn is_anti_monotone(self) -> bool {
        self.flags().0
    }

    pub fn is_monotone(self) -> bool {
        self.flags().1
    }
}

impl Predicate {
    /// The always-true predicate (an empty conjunction).
    pub fn always() -> Predicate {
        Predicate::And(Vec::new())
    }

    pub fn never() -> Predicate {
        Predicate::Or(Vec::new())
    }

    pub fn and(ps: impl IntoIterator<Item = Predicate>) -> Predicate {
        Predicate::And(ps.into_iter().collect())
    }

    pub fn or(ps: impl IntoIterator<Item = Predicate>) -> Predicate {
        Predicate::Or(ps.into_iter().collect())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(p: Predicate) -> Predicate {
        Predicate::Not(Box::new(p))
    }

    pub fn has_attr(universe: &Universe, name: &str) -> Result<Predicate> {
        universe
            .attrs
            .index_of(name)
            .map(Predicate::HasAttr)
            .ok_or_else(|| Error::domain(format!("unknown attribute `{name}`")))
    }

    pub fn has_obj(universe: &Universe, name: &str) -> Result<Predicate> {
        universe
            .objs
            .index_of(name)
            .map(Predicate::HasObj)
            .ok_or_else(|| Error::domain(format!("unknown object `{name}`")))
    }

    pub fn evaluate(&self, c: &BiSet) -> bool {
        let (x, y) = (c.attrs.len(), c.objs.len());
        match self {
            Predicate::MinLength(g) => x > *g,
            Predicate::MaxLength(g) => x < *g,
            Predicate::MinFrequency(g) => y > *g,
            Predicate::MaxFrequency(g) => y < *g,
            Predicate::MinArea(g) => x * y > *g,
            Predicate::MaxArea(g) => x * y < *g,
            Predicate::HasAttr(a) => c.attrs.contains(*a),
            Predicate::NotHasAttr(a) => !c.attrs.contains(*a),
            Predicate::HasObj(o) => c.objs.contains(*o),
            Predicate::NotHasObj(o) => !c.objs.contains(*o),
            Predicate::And(ps) => ps.iter().all(|p| p.evaluate(c)),
            Predicate::Or(ps) => ps.iter().any(|p| p.evaluate(c)),
            Predicate::Not(p) => !p.evaluate(c),
        }
    }

    /// Conservative structural classification: along the order `X` grows
    /// and `Y` shrinks. Area predicates are never classified.
    pub fn classify(&self) -> Monotonicity {
        use Monotonicity::*;
        match self {
            Predicate::MaxLength(_)
            | Predicate::MinFrequency(_)
            | Predicate::HasObj(_)
            | Predicate::NotHasAttr(_) => AntiMonotone,
            Predicate::MinLength(_)
            | Predicate::MaxFrequency(_)
            | Predicate::HasAttr(_)
            | Predicate::NotHasObj(_) => Monotone,
            Predicate::MinArea(_) | Predicate::MaxArea(_) => Neither,
            Predicate::And(ps) | Predicate::Or(ps) => {
                let (anti, mono) = ps.iter().fold((true, true), |(a, m), p| {
                    let (pa, pm) = p.classify().flags();
                    (a && pa, m && pm)
                });
                Monotonicity::from_flags(anti, mono)
            }
            Predicate::Not(p) => {
                let (anti, mono) = p.classify().flags();
                Monotonicity::from_flags(mono, anti)
            }
        }
    }

    /// Syntactic check that the predicate depends on `X` only through
    /// `X ∩ attrs`.
    pub fn commutes_with(&self, attrs: &AttrSet) -> bool {
        match self {
            Predicate::MinFrequency(_)
            | Predicate::MaxFrequency(_)
            | Predicate::HasObj(_)
            | Predicate::NotHasObj(_) => true,
            Predicate::HasAttr(a) | Predicate::NotHasAttr(a) => attrs.contains(*a),
            Predicate::MinLength(_)
            | Predicate::MaxLength(_)
            | Predicate::MinArea(_)
            | Predicate::MaxArea(_) => false,
            Predicate::And(ps) | Predicate::Or(ps) => ps.iter().all(|p| p.commutes_with(attrs)),
            Predicate::Not(p) => p.commutes_with(attrs),
        }
    }

    pub fn is_trivially_true(&self) -> bool {
        match self {
            Predicate::And(ps) => ps.iter().all(Predicate::is_trivially_true),
            Predicate::Or(ps) => ps.iter().any(Predicate::is_trivially_true),
            Predicate::Not(p) => p.is_trivially_false(),
            _ => false,
        }
    }

    pub fn is_trivially_false(&self) -> bool {
        match self {
            Predicate::And(ps) => ps.iter().any(Predicate::is_trivially_false),
            Predicate::Or(ps) => ps.iter().all(Predicate::is_trivially_false),
            Predicate::Not(p) => p.is_trivially_true(),
            _ => false,
        }
    }

    /// Fail if an attribute or object reference lies outside `universe`.
    pub fn check_universe(&self, universe: &Universe) -> Result<()> {
        match self {
            Predicate::HasAttr(a) | Predicate::NotHasAttr(a) if *a >= universe.attrs.len() => Err(
                Error::domain(format!("predicate refers to unknown attribute index {a}")),
            ),
            Predicate::HasObj(o) | Predicate::NotHasObj(o) if *o >= universe.objs.len() => Err(
                Error::domain(format!("predicate refers to unknown object index {o}")),
            ),
            Predicate::And(ps) | Predicate::Or(ps) => {
                ps.iter().try_for_each(|p| p.check_universe(universe))
            }
            Predicate::Not(p) => p.check_universe(universe),
            _ => Ok(()),
        }
    }

    /// The same predicate over the transposed universe: attribute and
    /// object roles swap, and length and frequency trade places.
    pub fn transpose(&self) -> Predicate {
        match self {
            Predicate::MinLength(g) => Predicate::MinFrequency(*g),
            Predicate::MaxLength(g) => Predicate::MaxFrequency(*g),
            Predicate::MinFrequency(g) => Predicate::MinLength(*g),
            Predicate::MaxFrequency(g) => Predicate::MaxLength(*g),
            Predicate::MinArea(g) => Predicate::MinArea(*g),
            Predicate::MaxArea(g) => Predicate::MaxArea(*g),
            Predicate::HasAttr(a) => Predicate::HasObj(*a),
            Predicate::NotHasAttr(a) => Predicate::NotHasObj(*a),
            Predicate::HasObj(o) => Predicate::HasAttr(*o),
            Predicate::NotHasObj(o) => Predicate::NotHasAttr(*o),
            Predicate::And(ps) => Predicate::And(ps.iter().map(Predicate::transpose).collect()),
            Predicate::Or(ps) => Predicate::Or(ps.iter().map(Predicate::transpose).collect()),
            Predicate::Not(p) => Predicate::not(p.transpose()),
        }
    }
}

pub fn evaluate(p: &Predicate, c: &BiSet) -> bool {
    p.evaluate(c)
}

pub fn classify(p: &Predicate) -> Monotonicity {
    p.classify()
}

pub fn commutes(p: &Predicate, attrs: &AttrSet) -> bool {
    p.commutes_with(attrs)
}

/// `X₁ ∩ A = X₂ ∩ A`.
pub fn a_equivalent(c1: &BiSet, c2: &BiSet, attrs: &AttrSet) -> bool {
    c1.attrs.intersection(attrs) == c2.attrs.intersection(attrs)
}

/// `Y₁ ∩ O = Y₂ ∩ O`.
pub fn o_equivalent(c1: &BiSet, c2: &BiSet, objs: &AttrSet) -> bool {
    c1.objs.intersection(objs) == c2.objs.intersection(objs)
}
