//! Structured outcome of a realization run: one entry per root, plus totals.

use curve_model::ArcDiagram;
use root_system::{Perm, Root};

/// How a curve was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Gamma,
    TypeAClosedForm,
    SubquiverLift,
    LeafLoop,
    CoxeterLift,
    TableFixture,
    BoundedSearch,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Gamma => "gamma",
            Method::TypeAClosedForm => "type_a_closed_form",
            Method::SubquiverLift => "subquiver_lift",
            Method::LeafLoop => "leaf_loop",
            Method::CoxeterLift => "coxeter_lift",
            Method::TableFixture => "table_fixture",
            Method::BoundedSearch => "bounded_search",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub budget: usize,
    /// True when the search stopped on the node cap rather than exhausting
    /// the space within budget.
    pub capped: bool,
}

/// A realized (or unrealized) root together with its witness.
#[derive(Debug, Clone)]
pub struct Entry {
    pub root: Root,
    pub pi: Option<Perm>,
    pub diagram: Option<ArcDiagram>,
    pub method: Option<Method>,
    pub word_len: usize,
    pub stats: SearchStats,
    /// Strategies attempted, in order, when no witness was found.
    pub failure: Vec<String>,
}

impl Entry {
    pub fn realized(&self) -> bool {
        self.diagram.is_some()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub realized: usize,
    pub unrealized: usize,
}

/// Outcome of checking a stronger per-permutation claim.
#[derive(Debug, Clone)]
pub struct AnyPiSummary {
    pub pis_checked: usize,
    pub pis_total: usize,
    pub sampled: bool,
    /// (permutation images, root) pairs with no witness.
    pub failures: Vec<(Vec<usize>, Root)>,
}

#[derive(Debug, Clone)]
pub struct RealizationReport {
    /// Text form of the quiver the run was about.
    pub quiver: String,
    pub mode: Mode,
    pub entries: Vec<Entry>,
    pub summary: Summary,
    pub any_pi: Option<AnyPiSummary>,
    /// Free-form result lines (sampling decisions, cross-check outcomes).
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    NonDecreasing,
    StrictlyIncreasing,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::NonDecreasing => "nd",
            Mode::StrictlyIncreasing => "strict",
        }
    }
}

impl RealizationReport {
    pub fn summarize(quiver: String, mode: Mode, entries: Vec<Entry>) -> RealizationReport {
        let total = entries.len();
        let realized = entries.iter().filter(|e| e.realized()).count();
        RealizationReport {
            quiver,
            mode,
            entries,
            summary: Summary { total, realized, unrealized: total - realized },
            any_pi: None,
            notes: Vec::new(),
        }
    }

    pub fn complete(&self) -> bool {
        self.summary.unrealized == 0
            && self.any_pi.as_ref().map_or(true, |a| a.failures.is_empty())
    }

    /// Count of witnesses per construction method, in a fixed order.
    pub fn method_histogram(&self) -> Vec<(Method, usize)> {
        use Method::*;
        [Gamma, TypeAClosedForm, SubquiverLift, LeafLoop, CoxeterLift, TableFixture, BoundedSearch]
            .iter()
            .map(|&m| (m, self.entries.iter().filter(|e| e.method == Some(m)).count()))
            .filter(|&(_, c)| c > 0)
            .collect()
    }
}
