//! Statement-level checks. Each statement evaluates its hypotheses first,
//! clause by clause, and only then its conclusion. A failed conclusion of a
//! proven statement is a `Violation`; a failed conjecture is routed to
//! `ConjectureCounterexample`. Both carry a replayable [`WitnessBundle`].

use std::cell::OnceCell;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::coloring::{chromatic_number, g0_given_membership, Coloring, G0Verdict};
use crate::cycles::{self, chordless_cycles, HoleWitness, Parity};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::graph6;
use crate::layers::{self, EdgeDeletionVerdict, LayerTheoremVerdict};
use crate::named::PatternName;
use crate::structure::{self, CutsetReport};

/// Environment variable holding the per-graph budget in milliseconds.
pub const BUDGET_ENV: &str = "ODDHOLE_BUDGET_MS";
pub const DEFAULT_BUDGET_MS: u64 = 60_000;

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StatementId {
    T1_2_layers,
    T1_2_edge,
    T1_2_chi4,
    T1_4,
    T1_5,
    T1_6_L4_1,
    T1_7,
    P5_1,
    P5_2,
    C1_1,
    C1_6,
    C6_1,
}

impl StatementId {
    pub const ALL: [StatementId; 12] = [
        StatementId::T1_2_layers,
        StatementId::T1_2_edge,
        StatementId::T1_2_chi4,
        StatementId::T1_4,
        StatementId::T1_5,
        StatementId::T1_6_L4_1,
        StatementId::T1_7,
        StatementId::P5_1,
        StatementId::P5_2,
        StatementId::C1_1,
        StatementId::C1_6,
        StatementId::C6_1,
    ];

    pub fn is_conjecture(self) -> bool {
        matches!(self, StatementId::C1_1 | StatementId::C1_6 | StatementId::C6_1)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::T1_2_layers => "T1_2_layers",
            StatementId::T1_2_edge => "T1_2_edge",
            StatementId::T1_2_chi4 => "T1_2_chi4",
            StatementId::T1_4 => "T1_4",
            StatementId::T1_5 => "T1_5",
            StatementId::T1_6_L4_1 => "T1_6_L4_1",
            StatementId::T1_7 => "T1_7",
            StatementId::P5_1 => "P5_1",
            StatementId::P5_2 => "P5_2",
            StatementId::C1_1 => "C1_1",
            StatementId::C1_6 => "C1_6",
            StatementId::C6_1 => "C6_1",
        }
    }

    /// One-line statement of what is checked.
    pub fn description(self) -> &'static str {
        match self {
            StatementId::T1_2_layers => {
                "family member, connected source of size <= 3: bipartite layers 1..l/2 force all layers bipartite"
            }
            StatementId::T1_2_edge => "family member: deleting an edge on no (2l+1)-cycle stays in the family",
            StatementId::T1_2_chi4 => "connected family member: the layered coloring from every vertex is a proper 4-coloring",
            StatementId::T1_4 => {
                "4-critical girth-5 member: every edge on a 5-hole, min degree >= 4, 3-connected, no neighborhood 4-cutset, stable 3-cutsets"
            }
            StatementId::T1_5 => "girth-5 member without two 5-holes sharing an edge: 3-colorable",
            StatementId::T1_6_L4_1 => {
                "3-connected girth-5 member with a 5-hole: stable 3-cutsets force a sharing pair; without one, every 5-hole carries a cutset {u_i, u_i+1, w}"
            }
            StatementId::T1_7 => "3-connected girth-5 member with stable 3-cutsets: Petersen or theta+-free",
            StatementId::P5_1 => "3-connected girth-5 member: qualifying holes have strong induced ears of length >= 3",
            StatementId::P5_2 => "3-connected girth-5 member with stable 3-cutsets: Petersen or induces no P-",
            StatementId::C1_1 => "conjecture: girth-5 members are 3-colorable",
            StatementId::C1_6 => "conjecture: 4-critical girth-5 members induce neither theta nor theta-",
            StatementId::C6_1 => "conjecture: members of every family with l >= 2 are 3-colorable",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }
}

/// Parses `all` or a comma-separated list of statement ids.
pub fn parse_statements(spec: &str) -> Result<Vec<StatementId>> {
    if spec.trim().eq_ignore_ascii_case("all") {
        return Ok(StatementId::ALL.to_vec());
    }
    let mut out: Vec<StatementId> = spec
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BundleKind {
    Violation,
    ConjectureCounterexample,
}

/// Everything needed to replay a failed check independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessBundle {
    pub graph6: String,
    pub statement: StatementId,
    pub kind: BundleKind,
    pub detail: String,
    pub witnesses: Vec<Vec<usize>>,
}

impl WitnessBundle {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("bundle serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        serde_json::from_str(line.trim()).map_err(|e| Error::MalformedBundle(e.to_string()))
    }
}

/// Re-runs the bundle's statement on its graph. Returns true iff the same
/// bundle comes out.
pub fn replay(bundle: &WitnessBundle) -> Result<bool> {
    let g = graph6::decode(&bundle.graph6)?;
    let verdict = verify_with_budget(&g, bundle.statement, Duration::MAX)?;
    Ok(verdict.bundle() == Some(bundle))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    HypothesesMet,
    HypothesesNotMet { clause: String },
    TimedOut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Confirmed,
    /// The hypotheses hold and the statement's stated exception applies.
    ConfirmedByException {
        exception: String,
    },
    Violation(WitnessBundle),
    ConjectureCounterexample(WitnessBundle),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub statement: StatementId,
    pub applicability: Applicability,
    /// Present exactly when the hypotheses are met.
    pub outcome: Option<Outcome>,
    pub elapsed: Duration,
}

impl TheoremVerdict {
    pub fn is_violation(&self) -> bool {
        matches!(self.outcome, Some(Outcome::Violation(_)))
    }

    pub fn is_conjecture_counterexample(&self) -> bool {
        matches!(self.outcome, Some(Outcome::ConjectureCounterexample(_)))
    }

    pub fn hypotheses_met(&self) -> bool {
        self.applicability == Applicability::HypothesesMet
    }

    pub fn bundle(&self) -> Option<&WitnessBundle> {
        match &self.outcome {
            Some(Outcome::Violation(b)) | Some(Outcome::ConjectureCounterexample(b)) => Some(b),
            _ => None,
        }
    }

    /// Equal up to the `elapsed` field.
    pub fn same_result(&self, other: &TheoremVerdict) -> bool {
        self.statement == other.statement && self.applicability == other.applicability && self.outcome == other.outcome
    }
}

/// Budget from [`BUDGET_ENV`], falling back to [`DEFAULT_BUDGET_MS`].
pub fn budget_from_env() -> Duration {
    let ms = std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .unwrap_or(DEFAULT_BUDGET_MS);
    Duration::from_millis(ms)
}

struct Deadline(Option<Instant>);

impl Deadline {
    fn new(budget: Duration) -> Self {
        Deadline(Instant::now().checked_add(budget))
    }

    fn check(&self) -> std::result::Result<(), Stop> {
        match self.0 {
            Some(t) if Instant::now() >= t => Err(Stop::TimedOut),
            _ => Ok(()),
        }
    }
}

enum Stop {
    TimedOut,
    Failed(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Failed(e)
    }
}

type Step<T> = std::result::Result<T, Stop>;

enum Eval {
    NotMet(String),
    Confirmed,
    Exception(String),
    Failed { detail: String, witnesses: Vec<Vec<usize>> },
}

fn not_met(clause: impl Into<String>) -> Step<Eval> {
    Ok(Eval::NotMet(clause.into()))
}

fn failed(detail: impl Into<String>, witnesses: Vec<Vec<usize>>) -> Step<Eval> {
    Ok(Eval::Failed {
        detail: detail.into(),
        witnesses,
    })
}

/// Per-graph facts shared by the statements, computed on first use.
struct Facts<'a> {
    g: &'a Graph,
    deadline: Deadline,
    member2: OnceCell<bool>,
    ell: OnceCell<Option<usize>>,
    chi: OnceCell<(usize, Coloring)>,
    three_connected: OnceCell<bool>,
    five_holes: OnceCell<Vec<HoleWitness>>,
    sharing: OnceCell<Option<(HoleWitness, HoleWitness)>>,
    unstable3: OnceCell<Option<CutsetReport>>,
    petersen: OnceCell<bool>,
    g0: OnceCell<G0Verdict>,
}

impl<'a> Facts<'a> {
    fn new(g: &'a Graph, budget: Duration) -> Self {
        Facts {
            g,
            deadline: Deadline::new(budget),
            member2: OnceCell::new(),
            ell: OnceCell::new(),
            chi: OnceCell::new(),
            three_connected: OnceCell::new(),
            five_holes: OnceCell::new(),
            sharing: OnceCell::new(),
            unstable3: OnceCell::new(),
            petersen: OnceCell::new(),
            g0: OnceCell::new(),
        }
    }

    fn ell(&self) -> Option<usize> {
        *self.ell.get_or_init(|| cycles::family_parameter(self.g))
    }

    fn member2(&self) -> bool {
        *self.member2.get_or_init(|| self.ell() == Some(2))
    }

    fn chi(&self) -> usize {
        self.chi.get_or_init(|| chromatic_number(self.g)).0
    }

    fn three_connected(&self) -> bool {
        *self
            .three_connected
            .get_or_init(|| structure::is_k_connected(self.g, 3))
    }

    fn five_holes(&self) -> &[HoleWitness] {
        self.five_holes
            .get_or_init(|| chordless_cycles(self.g, 5, 5, Parity::Any).collect())
    }

    fn sharing(&self) -> Option<&(HoleWitness, HoleWitness)> {
        self.sharing
            .get_or_init(|| structure::five_cycles_sharing_edge(self.g))
            .as_ref()
    }

    fn unstable3(&self) -> Option<&CutsetReport> {
        self.unstable3
            .get_or_init(|| structure::first_unstable_cutset(self.g, 3))
            .as_ref()
    }

    fn petersen(&self) -> bool {
        *self
            .petersen
            .get_or_init(|| structure::is_isomorphic_to_petersen(self.g))
    }

    fn g0(&self) -> &G0Verdict {
        self.g0.get_or_init(|| {
            if !self.member2() {
                G0Verdict::NotInFamily
            } else {
                g0_given_membership(self.g, self.chi())
            }
        })
    }

    /// Shared hypothesis chain: girth-5 member, 3-connected.
    fn require_member2_3conn(&self) -> Option<String> {
        if !self.member2() {
            return Some("not a girth-5 member of the family".into());
        }
        if !self.three_connected() {
            return Some("not 3-connected".into());
        }
        None
    }

    fn require_stable_3cutsets(&self) -> Option<String> {
        if let Some(r) = self.require_member2_3conn() {
            return Some(r);
        }
        self.unstable3()
            .map(|r| format!("unstable 3-cutset {:?}", r.cutset.to_vec()))
    }
}

fn connected_sources(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |vs: Vec<usize>| {
        let mut vs = vs;
        vs.sort_unstable();
        if seen.insert(vs.clone()) {
            out.push(VertexSet::from_slice(n, &vs));
        }
    };
    for v in 0..n {
        push(vec![v]);
    }
    for (u, v) in g.edges() {
        push(vec![u, v]);
    }
    for c in 0..n {
        let nb = g.neighbors(c).to_vec();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                push(vec![a, c, b]);
            }
        }
    }
    out
}

fn eval(f: &Facts<'_>, id: StatementId) -> Step<Eval> {
    f.deadline.check()?;
    let g = f.g;
    match id {
        StatementId::T1_2_layers => {
            let Some(ell) = f.ell() else {
                return not_met("not in any family with l >= 2");
            };
            for s in connected_sources(g) {
                f.deadline.check()?;
                if let LayerTheoremVerdict::TheoremViolated { layer, odd_cycle } =
                    layers::layer_theorem_unchecked(g, &s, ell)?
                {
                    return failed(
                        format!("layer {layer} is not bipartite although layers 1..={} are", ell / 2),
                        vec![s.to_vec(), odd_cycle],
                    );
                }
            }
            Ok(Eval::Confirmed)
        }
        StatementId::T1_2_edge => {
            let Some(ell) = f.ell() else {
                return not_met("not in any family with l >= 2");
            };
            let mut qualifying = 0;
            for (u, v) in g.edges() {
                f.deadline.check()?;
                match layers::edge_closure_unchecked(g, (u, v), ell)? {
                    EdgeDeletionVerdict::InOddGirthCycle { .. } => {}
                    EdgeDeletionVerdict::ClosureHolds => qualifying += 1,
                    EdgeDeletionVerdict::TheoremViolated { violation } => {
                        return failed(
                            format!("deleting ({u}, {v}) leaves the family: {violation:?}"),
                            vec![vec![u, v]],
                        );
                    }
                }
            }
            if qualifying == 0 {
                return not_met(format!("every edge lies on a {}-cycle", 2 * ell + 1));
            }
            Ok(Eval::Confirmed)
        }
        StatementId::T1_2_chi4 => {
            if f.ell().is_none() {
                return not_met("not in any family with l >= 2");
            }
            if !g.is_connected() {
                return not_met("disconnected");
            }
            for u in 0..g.n() {
                f.deadline.check()?;
                match layers::layered_unchecked(g, u) {
                    Ok(c) if c.palette_size() <= 4 => {}
                    Ok(c) => {
                        return failed(
                            format!("layered coloring from {u} uses {} colors", c.palette_size()),
                            vec![vec![u]],
                        )
                    }
                    Err(Error::LayerNotBipartite { layer }) => {
                        return failed(format!("layer {layer} from {u} is not bipartite"), vec![vec![u]]);
                    }
                    Err(Error::ImproperColoring(a, b)) => {
                        return failed(
                            format!("layered coloring from {u} is improper"),
                            vec![vec![u], vec![a, b]],
                        );
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            if f.chi() > 4 {
                return failed(format!("chromatic number is {}", f.chi()), Vec::new());
            }
            Ok(Eval::Confirmed)
        }
        StatementId::T1_4 => {
            match f.g0() {
                G0Verdict::Member => {}
                G0Verdict::NotInFamily => return not_met("not a girth-5 member of the family"),
                G0Verdict::ChromaticNumber(k) => return not_met(format!("chromatic number is {k}, not 4")),
                G0Verdict::NotCritical { edge } => {
                    return not_met(format!("not 4-critical: removing {edge:?} keeps chromatic number 4"))
                }
            }
            let mut covered = HashSet::new();
            for h in f.five_holes() {
                covered.extend(h.edges());
            }
            if let Some(e) = g.edges().into_iter().find(|e| !covered.contains(e)) {
                return failed("an edge lies on no 5-hole", vec![vec![e.0, e.1]]);
            }
            if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < 4) {
                return failed(format!("vertex {v} has degree {}", g.degree(v)), vec![vec![v]]);
            }
            if !f.three_connected() {
                return failed("not 3-connected", Vec::new());
            }
            for u in 0..g.n() {
                f.deadline.check()?;
                if let Some(r) = structure::neighborhood_cutset_check(g, u)?.first() {
                    return failed(format!("neighborhood cutset at {u}"), vec![r.cutset.to_vec()]);
                }
            }
            if let Some(r) = f.unstable3() {
                return failed("unstable 3-cutset", vec![r.cutset.to_vec()]);
            }
            Ok(Eval::Confirmed)
        }
        StatementId::T1_5 => {
            if !f.member2() {
                return not_met("not a girth-5 member of the family");
            }
            if let Some((a, b)) = f.sharing() {
                return not_met(format!(
                    "5-holes {:?} and {:?} share an edge",
                    a.vertices(),
                    b.vertices()
                ));
            }
            if f.chi() > 3 {
                return failed(format!("chromatic number is {}", f.chi()), Vec::new());
            }
            Ok(Eval::Confirmed)
        }
        StatementId::T1_6_L4_1 => {
            if let Some(clause) = f.require_member2_3conn() {
                return not_met(clause);
            }
            if f.five_holes().is_empty() {
                return not_met("no 5-hole");
            }
            if f.unstable3().is_none() && f.sharing().is_none() {
                return failed("all 3-cutsets are stable but no two 5-holes share an edge", Vec::new());
            }
            if f.sharing().is_none() {
                for h in f.five_holes() {
                    f.deadline.check()?;
                    if structure::find_unstable_cutset_on_5cycle(g, h)?.is_none() {
                        return failed("5-hole without a cutset {u_i, u_i+1, w}", vec![h.vertices().to_vec()]);
                    }
                }
            }
            Ok(Eval::Confirmed)
        }
        StatementId::T1_7 | StatementId::P5_2 => {
            if let Some(clause) = f.require_stable_3cutsets() {
                return not_met(clause);
            }
            if f.petersen() {
                return Ok(Eval::Exception("the graph is the Petersen graph".into()));
            }
            let name = if id == StatementId::T1_7 {
                PatternName::ThetaPlus
            } else {
                PatternName::PMinus
            };
            if let Some(emb) = structure::find_named_pattern(g, name) {
                return failed(format!("induces {name}"), vec![emb.map]);
            }
            Ok(Eval::Confirmed)
        }
        StatementId::P5_1 => {
            if let Some(clause) = f.require_member2_3conn() {
                return not_met(clause);
            }
            let mut hosts = 0;
            for hole in chordless_cycles(g, 5, g.n(), Parity::Any) {
                f.deadline.check()?;
                let h = hole.vertex_set(g.n());
                let outside = g.vertex_set().difference(&h);
                if h.len() == g.n() || outside.iter().any(|v| g.neighbors(v).intersection_len(&h) > 1) {
                    continue;
                }
                hosts += 1;
                match structure::shortest_ear(g, &h)? {
                    None => return failed("no ear between nonadjacent host vertices", vec![h.to_vec()]),
                    Some(ear) => {
                        if ear.len() < 3 {
                            return failed("shortest ear has length below 3", vec![h.to_vec(), ear.path]);
                        }
                        if let Err(why) = ear.verify(g) {
                            return failed(format!("shortest ear is not strong: {why}"), vec![h.to_vec(), ear.path]);
                        }
                    }
                }
            }
            if hosts == 0 {
                return not_met("no hole has at most one neighbor per outside vertex");
            }
            Ok(Eval::Confirmed)
        }
        StatementId::C1_1 => {
            if !f.member2() {
                return not_met("not a girth-5 member of the family");
            }
            three_colorable(f)
        }
        StatementId::C1_6 => {
            if !f.g0().is_member() {
                return not_met("not 4-critical");
            }
            for name in [PatternName::Theta, PatternName::ThetaMinus] {
                if let Some(emb) = structure::find_named_pattern(g, name) {
                    return failed(format!("4-critical member induces {name}"), vec![emb.map]);
                }
            }
            Ok(Eval::Confirmed)
        }
        StatementId::C6_1 => {
            if f.ell().is_none() {
                return not_met("not in any family with l >= 2");
            }
            three_colorable(f)
        }
    }
}

fn three_colorable(f: &Facts<'_>) -> Step<Eval> {
    if f.chi() > 3 {
        return failed(format!("chromatic number is {}", f.chi()), Vec::new());
    }
    Ok(Eval::Confirmed)
}

fn run(f: &Facts<'_>, id: StatementId) -> Result<TheoremVerdict> {
    let start = Instant::now();
    let (applicability, outcome) = match eval(f, id) {
        Err(Stop::Failed(e)) => return Err(e),
        Err(Stop::TimedOut) => (Applicability::TimedOut, None),
        Ok(Eval::NotMet(clause)) => (Applicability::HypothesesNotMet { clause }, None),
        Ok(Eval::Confirmed) => (Applicability::HypothesesMet, Some(Outcome::Confirmed)),
        Ok(Eval::Exception(exception)) => (
            Applicability::HypothesesMet,
            Some(Outcome::ConfirmedByException { exception }),
        ),
        Ok(Eval::Failed { detail, witnesses }) => {
            let kind = if id.is_conjecture() {
                BundleKind::ConjectureCounterexample
            } else {
                BundleKind::Violation
            };
            let bundle = WitnessBundle {
                graph6: graph6::encode(f.g),
                statement: id,
                kind,
                detail,
                witnesses,
            };
            let outcome = match kind {
                BundleKind::Violation => Outcome::Violation(bundle),
                BundleKind::ConjectureCounterexample => Outcome::ConjectureCounterexample(bundle),
            };
            (Applicability::HypothesesMet, Some(outcome))
        }
    };
    Ok(TheoremVerdict {
        statement: id,
        applicability,
        outcome,
        elapsed: start.elapsed(),
    })
}

/// Checks one statement under the environment budget.
pub fn verify(g: &Graph, id: StatementId) -> Result<TheoremVerdict> {
    verify_with_budget(g, id, budget_from_env())
}

/// Checks a statement given by name.
pub fn verify_named(g: &Graph, id: &str) -> Result<TheoremVerdict> {
    verify(g, id.parse()?)
}

pub fn verify_with_budget(g: &Graph, id: StatementId, budget: Duration) -> Result<TheoremVerdict> {
    run(&Facts::new(g, budget), id)
}

/// Checks `ids` in the given order, sharing intermediate results and one
/// budget across them.
pub fn verify_statements(g: &Graph, ids: &[StatementId], budget: Duration) -> Result<Vec<TheoremVerdict>> {
    let facts = Facts::new(g, budget);
    ids.iter().map(|&id| run(&facts, id)).collect()
}

/// Every statement in fixed order under the environment budget.
pub fn verify_all(g: &Graph) -> Vec<TheoremVerdict> {
    verify_statements(g, &StatementId::ALL, budget_from_env()).expect("statements evaluate on any graph")
}
