//! Decidable structure checks on finite rings. Each check states a
//! biconditional or implication about the annihilating-ideal graph and the
//! ideal lattice, evaluates both sides independently, and reports which
//! side triggered. Checks never pass by silently skipping a hypothesis:
//! hypothesis failure is the distinct "not-applicable" verdict.

pub mod corpus;
pub mod report;

use std::sync::Arc;

use once_cell::unsync::OnceCell;
use serde::Serialize;

use crate::arith;
use crate::error::Result;
use crate::graph::{build_ag_graph, build_zero_divisor_graph, ElementGraph, GraphInvariants, IdealGraph};
use crate::ideal::{enumerate_ideals, FieldProduct, IdealLattice, RingClassification};
use crate::ring::{FiniteRing, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckId {
    ConnDiam,
    GirthBound,
    VertexAll,
    VertexCount,
    ConjCard,
    PrimeExists,
    MaxAnn,
    BrauerMin,
    SocleMax,
    CyclicVert,
    UnivVertex,
    ReducedStar,
    ArtinianUniv,
    StarM4,
    StarCases,
    CompleteCases,
    GammaVsAg,
    SmallGraphs,
    PrimeVerts,
}

/// Catalog order; reports list results in this order for each ring.
pub const ALL_CHECKS: [CheckId; 19] = [
    CheckId::ConnDiam,
    CheckId::GirthBound,
    CheckId::VertexAll,
    CheckId::VertexCount,
    CheckId::ConjCard,
    CheckId::PrimeExists,
    CheckId::MaxAnn,
    CheckId::BrauerMin,
    CheckId::SocleMax,
    CheckId::CyclicVert,
    CheckId::UnivVertex,
    CheckId::ReducedStar,
    CheckId::ArtinianUniv,
    CheckId::StarM4,
    CheckId::StarCases,
    CheckId::CompleteCases,
    CheckId::GammaVsAg,
    CheckId::SmallGraphs,
    CheckId::PrimeVerts,
];

impl CheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::ConnDiam => "conn_diam",
            CheckId::GirthBound => "girth_bound",
            CheckId::VertexAll => "vertex_all",
            CheckId::VertexCount => "vertex_count",
            CheckId::ConjCard => "conj_card",
            CheckId::PrimeExists => "prime_exists",
            CheckId::MaxAnn => "max_ann",
            CheckId::BrauerMin => "brauer_min",
            CheckId::SocleMax => "socle_max",
            CheckId::CyclicVert => "cyclic_vert",
            CheckId::UnivVertex => "univ_vertex",
            CheckId::ReducedStar => "reduced_star",
            CheckId::ArtinianUniv => "artinian_univ",
            CheckId::StarM4 => "star_m4",
            CheckId::StarCases => "star_cases",
            CheckId::CompleteCases => "complete_cases",
            CheckId::GammaVsAg => "gamma_vs_ag",
            CheckId::SmallGraphs => "small_graphs",
            CheckId::PrimeVerts => "prime_verts",
        }
    }

    pub fn parse(s: &str) -> Option<CheckId> {
        ALL_CHECKS.iter().copied().find(|c| c.as_str() == s)
    }
}

impl std::fmt::Display for CheckId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub ring: String,
    pub order: usize,
    pub verdict: Verdict,
    pub detail: String,
    pub witness: Option<String>,
}

/// verdict, detail, witness
type Outcome = (Verdict, String, Option<String>);

fn pass(detail: impl Into<String>) -> Outcome {
    (Verdict::Pass, detail.into(), None)
}

fn pass_noting(detail: impl Into<String>, note: impl Into<String>) -> Outcome {
    (Verdict::Pass, detail.into(), Some(note.into()))
}

fn fail(detail: impl Into<String>, witness: impl Into<String>) -> Outcome {
    (Verdict::Fail, detail.into(), Some(witness.into()))
}

fn na(detail: impl Into<String>) -> Outcome {
    (Verdict::NotApplicable, detail.into(), None)
}

/// Lazily shared per-ring state: the lattice, both graphs, and the
/// classification facts the checks keep asking for.
pub struct RingCtx {
    ring: Arc<FiniteRing>,
    limits: Limits,
    lattice: OnceCell<IdealLattice>,
    ag: OnceCell<IdealGraph>,
    ag_inv: OnceCell<GraphInvariants>,
    gamma: OnceCell<Option<(ElementGraph, GraphInvariants)>>,
    split: OnceCell<Option<FieldProduct>>,
    class: OnceCell<RingClassification>,
    zset_id: OnceCell<Option<usize>>,
}

impl RingCtx {
    pub fn new(ring: Arc<FiniteRing>, limits: Limits) -> RingCtx {
        RingCtx {
            ring,
            limits,
            lattice: OnceCell::new(),
            ag: OnceCell::new(),
            ag_inv: OnceCell::new(),
            gamma: OnceCell::new(),
            split: OnceCell::new(),
            class: OnceCell::new(),
            zset_id: OnceCell::new(),
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn lattice(&self) -> Result<&IdealLattice> {
        self.lattice
            .get_or_try_init(|| enumerate_ideals(&self.ring, self.limits))
    }

    pub fn ag(&self) -> Result<&IdealGraph> {
        let lat = self.lattice()?;
        Ok(self.ag.get_or_init(|| build_ag_graph(lat)))
    }

    pub fn ag_inv(&self) -> Result<&GraphInvariants> {
        let ag = self.ag()?;
        Ok(self.ag_inv.get_or_init(|| ag.graph.invariants()))
    }

    /// None when the order exceeds the cap for element-level graphs.
    pub fn gamma(&self) -> Option<&(ElementGraph, GraphInvariants)> {
        self.gamma
            .get_or_init(|| {
                if self.ring.order() > self.limits.order_cap {
                    None
                } else {
                    let g = build_zero_divisor_graph(&self.ring);
                    let inv = g.graph.invariants();
                    Some((g, inv))
                }
            })
            .as_ref()
    }

    pub fn split(&self) -> Result<Option<&FieldProduct>> {
        let lat = self.lattice()?;
        Ok(self.split.get_or_init(|| lat.detect_field_product()).as_ref())
    }

    pub fn classification(&self) -> Result<RingClassification> {
        let lat = self.lattice()?;
        Ok(*self.class.get_or_init(|| lat.ring_classification()))
    }

    /// Lattice id of Z(R) when the zero-divisor set is an ideal.
    pub fn zset_ideal_id(&self) -> Result<Option<usize>> {
        let lat = self.lattice()?;
        self.zset_id
            .get_or_try_init(|| match self.ring.zn_modulus() {
                Some(n) => {
                    // Z(Z_n) is pZ_n for a prime power n = p^k, otherwise
                    // not closed under addition
                    let facs = arith::factorize(n);
                    if facs.len() != 1 {
                        return Ok(None);
                    }
                    let (p, k) = facs[0];
                    Ok(Some(if k == 1 {
                        lat.zero_id()
                    } else {
                        lat.principal_id(p as usize)
                    }))
                }
                None => Ok(lat.find_by_elements(&self.ring.zero_divisors())),
            })
            .copied()
    }

    fn is_domain(&self) -> Result<bool> {
        Ok(self.classification()?.is_domain)
    }

    /// A readable ideal description; element lists only at table scale.
    fn ideal_desc(&self, id: usize) -> String {
        let lat = self.lattice().expect("lattice already built");
        if self.ring.order() <= self.limits.order_cap {
            format!("{} = {:?}", lat.label(id), lat.elements(id))
        } else {
            format!("{} (size {})", lat.label(id), lat.size(id))
        }
    }
}

fn label_set(lat: &IdealLattice, ids: &[usize]) -> String {
    let labels: Vec<String> = ids.iter().map(|&id| lat.label(id)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

pub fn run_check(ctx: &RingCtx, id: CheckId) -> Result<CheckResult> {
    let (verdict, detail, witness) = if ctx.ring().order() == 1 {
        na("trivial ring")
    } else {
        match id {
            CheckId::ConnDiam => conn_diam(ctx)?,
            CheckId::GirthBound => girth_bound(ctx)?,
            CheckId::VertexAll => vertex_all(ctx)?,
            CheckId::VertexCount => vertex_count(ctx)?,
            CheckId::ConjCard => conj_card(ctx)?,
            CheckId::PrimeExists => prime_exists(ctx)?,
            CheckId::MaxAnn => max_ann(ctx)?,
            CheckId::BrauerMin => brauer_min(ctx)?,
            CheckId::SocleMax => socle_max(ctx)?,
            CheckId::CyclicVert => cyclic_vert(ctx)?,
            CheckId::UnivVertex => univ_vertex(ctx)?,
            CheckId::ReducedStar => reduced_star(ctx)?,
            CheckId::ArtinianUniv => artinian_univ(ctx)?,
            CheckId::StarM4 => star_m4(ctx)?,
            CheckId::StarCases => star_cases(ctx)?,
            CheckId::CompleteCases => complete_cases(ctx)?,
            CheckId::GammaVsAg => gamma_vs_ag(ctx)?,
            CheckId::SmallGraphs => small_graphs(ctx)?,
            CheckId::PrimeVerts => prime_verts(ctx)?,
        }
    };
    debug_assert!(verdict != Verdict::Fail || witness.is_some());
    Ok(CheckResult {
        check: id.as_str(),
        ring: ctx.ring().name().to_string(),
        order: ctx.ring().order(),
        verdict,
        detail,
        witness,
    })
}

/// AG(R) is connected with diameter at most 3.
fn conn_diam(ctx: &RingCtx) -> Result<Outcome> {
    use crate::graph::Diameter;
    let inv = ctx.ag_inv()?;
    let diam_ok = match inv.diameter {
        Diameter::Undefined => true,
        Diameter::Finite(d) => d <= 3,
        Diameter::Infinite => false,
    };
    Ok(if inv.is_connected && diam_ok {
        pass(format!("connected with diameter {}", inv.diameter))
    } else {
        fail(
            "connectivity or diameter bound violated",
            format!(
                "is_connected = {}, diameter = {}, vertex_count = {}",
                inv.is_connected, inv.diameter, inv.vertex_count
            ),
        )
    })
}

/// If AG(R) has a cycle, its girth is at most 4.
fn girth_bound(ctx: &RingCtx) -> Result<Outcome> {
    use crate::graph::Girth;
    Ok(match ctx.ag_inv()?.girth {
        Girth::Infinite => na("acyclic graph"),
        Girth::Finite(g) if g <= 4 => pass(format!("girth {g}")),
        Girth::Finite(g) => fail("girth bound violated", format!("girth = {g} exceeds 4")),
    })
}

/// Every nonzero proper ideal is a vertex.
fn vertex_all(ctx: &RingCtx) -> Result<Outcome> {
    let lat = ctx.lattice()?;
    let vertices = &ctx.ag()?.ids;
    let nzp = lat.nonzero_proper_ids();
    let missing: Vec<usize> = nzp
        .iter()
        .copied()
        .filter(|id| vertices.binary_search(id).is_err())
        .collect();
    Ok(if missing.is_empty() {
        pass(format!(
            "all {} nonzero proper ideals have nonzero annihilators",
            nzp.len()
        ))
    } else {
        fail(
            "a nonzero proper ideal is not a vertex",
            format!("ideal {} has zero annihilator", ctx.ideal_desc(missing[0])),
        )
    })
}

/// The vertex count equals the count of nonzero proper ideals.
fn vertex_count(ctx: &RingCtx) -> Result<Outcome> {
    let lat = ctx.lattice()?;
    let v = ctx.ag()?.ids.len();
    let n = lat.nonzero_proper_ids().len();
    Ok(if v == n {
        pass(format!("{v} vertices = {n} nonzero proper ideals"))
    } else {
        fail(
            "vertex count differs from nonzero proper ideal count",
            format!("{v} vertices, {n} nonzero proper ideals"),
        )
    })
}

/// For non-domains, the vertex set and the set of nonzero proper ideals
/// have the same cardinality.
fn conj_card(ctx: &RingCtx) -> Result<Outcome> {
    if ctx.is_domain()? {
        return Ok(na("domain"));
    }
    let lat = ctx.lattice()?;
    let v = ctx.ag()?.ids.len();
    let n = lat.nonzero_proper_ids().len();
    Ok(if v == n {
        pass(format!("|A(R)*| = {v} = nonzero proper ideal count"))
    } else {
        fail(
            "cardinalities differ",
            format!("|A(R)*| = {v}, nonzero proper ideals = {n}"),
        )
    })
}

/// Non-domains have a prime ideal among the vertices.
fn prime_exists(ctx: &RingCtx) -> Result<Outcome> {
    if ctx.is_domain()? {
        return Ok(na("domain"));
    }
    let lat = ctx.lattice()?;
    let vertices = &ctx.ag()?.ids;
    Ok(
        match vertices
            .iter()
            .copied()
            .find(|&id| lat.classify_ideal(id).is_prime)
        {
            Some(id) => pass(format!("prime vertex {}", lat.label(id))),
            None => fail(
                "no prime ideal among the vertices",
                format!("vertices = {}", label_set(lat, vertices)),
            ),
        },
    )
}

/// Every maximal ideal that is a vertex is the annihilator of a single
/// nonzero element.
fn max_ann(ctx: &RingCtx) -> Result<Outcome> {
    let lat = ctx.lattice()?;
    let vertices = &ctx.ag()?.ids;
    let candidates: Vec<usize> = lat
        .maximal_ids()
        .into_iter()
        .filter(|id| vertices.binary_search(id).is_ok())
        .collect();
    if candidates.is_empty() {
        return Ok(na("no maximal ideal is a vertex"));
    }
    let mut shown = Vec::new();
    for &p in &candidates {
        match lat.element_with_annihilator(p) {
            Some(x) => shown.push(format!("{} = Ann({})", lat.label(p), ctx.ring().label(x))),
            None => {
                return Ok(fail(
                    "a maximal vertex is not an element annihilator",
                    format!(
                        "maximal ideal {} is not Ann(x) for any nonzero x",
                        ctx.ideal_desc(p)
                    ),
                ))
            }
        }
    }
    Ok(pass(shown.join("; ")))
}

/// Every minimal ideal I and its annihilator are vertices, and I either
/// squares to zero or is generated by an idempotent.
fn brauer_min(ctx: &RingCtx) -> Result<Outcome> {
    let lat = ctx.lattice()?;
    let minimals = lat.minimal_ids();
    if minimals.is_empty() {
        return Ok(na("no minimal ideals"));
    }
    let zero = lat.zero_id();
    let mut notes = Vec::new();
    for &i in &minimals {
        let ann = lat.annihilator_id(i);
        if ann == zero || lat.annihilator_id(ann) == zero {
            return Ok(fail(
                "a minimal ideal or its annihilator is not a vertex",
                format!(
                    "minimal {} has Ann = {}",
                    ctx.ideal_desc(i),
                    ctx.ideal_desc(ann)
                ),
            ));
        }
        if lat.product(i, i) == zero {
            notes.push(format!("{}² = (0)", lat.label(i)));
            continue;
        }
        match idempotent_generator(ctx, i)? {
            Some(e) => notes.push(format!(
                "{} = ({}) with idempotent generator",
                lat.label(i),
                ctx.ring().label(e)
            )),
            None => {
                return Ok(fail(
                    "a minimal ideal with nonzero square has no idempotent generator",
                    format!("minimal ideal {}", ctx.ideal_desc(i)),
                ))
            }
        }
    }
    Ok(pass(notes.join("; ")))
}

/// An idempotent e with Re equal to the given ideal, if one exists.
fn idempotent_generator(ctx: &RingCtx, id: usize) -> Result<Option<usize>> {
    let lat = ctx.lattice()?;
    if let Some(n) = ctx.ring().zn_modulus() {
        // dZ_n with d = n/p has an idempotent generator exactly when
        // p² ∤ n; build it by the Chinese remainder theorem
        let d = (n as usize / lat.size(id)) as u64;
        let p = n / d;
        if !arith::is_prime(p) || d.is_multiple_of(p) {
            return Ok(None);
        }
        let e = (d as u128 * arith::mod_inv(d % p, p).expect("gcd(d, p) = 1") as u128
            % n as u128) as usize;
        debug_assert_eq!(ctx.ring().mul(e, e), e);
        debug_assert_eq!(lat.principal_id(e), id);
        return Ok(Some(e));
    }
    Ok(ctx
        .ring()
        .idempotents()
        .into_iter()
        .find(|&e| e != 0 && lat.principal_id(e) == id))
}

/// For non-domains, a maximal ideal is a vertex exactly when the socle is
/// nonzero.
fn socle_max(ctx: &RingCtx) -> Result<Outcome> {
    if ctx.is_domain()? {
        return Ok(na("domain"));
    }
    let lat = ctx.lattice()?;
    let vertices = &ctx.ag()?.ids;
    let lhs = lat
        .maximal_ids()
        .iter()
        .any(|id| vertices.binary_search(id).is_ok());
    let (socle, _) = lat.socle_and_radical();
    let rhs = socle != lat.zero_id();
    Ok(if lhs == rhs {
        pass(format!(
            "maximal vertex exists = {lhs}, soc(R) = {}",
            lat.label(socle)
        ))
    } else {
        fail(
            "socle criterion violated",
            format!(
                "maximal vertex exists = {lhs} but soc(R) = {}",
                ctx.ideal_desc(socle)
            ),
        )
    })
}

/// Both of: every nonzero proper cyclic ideal is a vertex, and every
/// element is a unit or a zero-divisor. At finite order both sides of the
/// equivalence hold unconditionally, so each is asserted outright.
fn cyclic_vert(ctx: &RingCtx) -> Result<Outcome> {
    let lat = ctx.lattice()?;
    let zero = lat.zero_id();
    let unit = lat.unit_id();
    let bad_cyclic = (0..lat.count()).find(|&id| {
        id != zero
            && id != unit
            && lat.classify_ideal(id).is_principal
            && lat.annihilator_id(id) == zero
    });
    if let Some(id) = bad_cyclic {
        return Ok(fail(
            "a nonzero proper cyclic ideal is not a vertex",
            format!("cyclic ideal {}", ctx.ideal_desc(id)),
        ));
    }
    if ctx.ring().zn_modulus().is_some() {
        // gcd(x, n) = 1 makes x a unit, gcd > 1 a zero-divisor
        return Ok(pass(
            "every nonzero proper cyclic ideal is a vertex; units and zero-divisors \
             partition the carrier by gcd arithmetic",
        ));
    }
    let m = ctx.ring().order();
    let units = ctx.ring().units();
    let zdivs = ctx.ring().zero_divisors();
    let partitioned =
        units.len() + zdivs.len() == m && units.iter().all(|u| zdivs.binary_search(u).is_err());
    Ok(if partitioned {
        pass(format!(
            "every nonzero proper cyclic ideal is a vertex; {} units and {} zero-divisors \
             partition the carrier",
            units.len(),
            zdivs.len()
        ))
    } else {
        fail(
            "units and zero-divisors do not partition the carrier",
            format!("|units| = {}, |zero-divisors| = {}, order = {m}", units.len(), zdivs.len()),
        )
    })
}

/// Z(R) = Ann(x) for a nonzero x, if the zero-divisors form an element
/// annihilator at all.
fn zset_annihilating_element(ctx: &RingCtx) -> Result<Option<usize>> {
    let lat = ctx.lattice()?;
    Ok(match ctx.zset_ideal_id()? {
        Some(id) => lat.element_with_annihilator(id),
        None => None,
    })
}

/// For non-domains: AG(R) has a universal vertex exactly when R splits
/// into two fields or Z(R) is the annihilator of a single element.
fn univ_vertex(ctx: &RingCtx) -> Result<Outcome> {
    if ctx.is_domain()? {
        return Ok(na("domain (Z(R) = {0} is the annihilator of any unit)"));
    }
    let lhs = !ctx.ag_inv()?.universal_vertices.is_empty();
    let split = ctx.split()?.is_some();
    let zann = zset_annihilating_element(ctx)?;
    let rhs = split || zann.is_some();
    let rhs_desc = if split {
        "splits into two fields".to_string()
    } else if let Some(x) = zann {
        format!("Z(R) = Ann({})", ctx.ring().label(x))
    } else {
        "Z(R) is not an element annihilator and R does not split".to_string()
    };
    Ok(if lhs == rhs {
        pass(format!("universal vertex exists = {lhs}; {rhs_desc}"))
    } else {
        fail(
            "universal vertex criterion violated",
            format!("universal vertex exists = {lhs} but {rhs_desc}"),
        )
    })
}

/// For reduced rings: universal vertex ⟺ star ⟺ split into two fields.
fn reduced_star(ctx: &RingCtx) -> Result<Outcome> {
    if !ctx.ring().is_reduced() {
        return Ok(na("not reduced"));
    }
    let inv = ctx.ag_inv()?;
    let u = !inv.universal_vertices.is_empty();
    let s = inv.is_star;
    let p = ctx.split()?.is_some();
    Ok(if u == s && s == p {
        pass(format!("universal = {u}, star = {s}, two-field split = {p}"))
    } else {
        fail(
            "three-way equivalence broken on a reduced ring",
            format!("universal = {u}, star = {s}, two-field split = {p}"),
        )
    })
}

/// Universal vertex ⟺ split into two fields, or local with nonzero
/// maximal ideal.
fn artinian_univ(ctx: &RingCtx) -> Result<Outcome> {
    let lat = ctx.lattice()?;
    let lhs = !ctx.ag_inv()?.universal_vertices.is_empty();
    let split = ctx.split()?.is_some();
    let class = ctx.classification()?;
    let local_nonzero = class.local_maximal.is_some_and(|m| m != lat.zero_id());
    let rhs = split || local_nonzero;
    Ok(if lhs == rhs {
        pass(format!(
            "universal vertex exists = {lhs}; split = {split}, local with nonzero maximal = {local_nonzero}"
        ))
    } else {
        fail(
            "universal vertex structure criterion violated",
            format!(
                "universal vertex exists = {lhs}, split = {split}, local with nonzero maximal = {local_nonzero}"
            ),
        )
    })
}

fn ideal_power(lat: &IdealLattice, id: usize, k: u32) -> usize {
    let mut acc = id;
    for _ in 1..k {
        acc = lat.product(acc, id);
    }
    acc
}

/// If AG(R) is a star, R splits into two fields or is local with M⁴ = (0).
fn star_m4(ctx: &RingCtx) -> Result<Outcome> {
    if !ctx.ag_inv()?.is_star {
        return Ok(na("AG(R) is not a star"));
    }
    if ctx.split()?.is_some() {
        return Ok(pass("splits into two fields"));
    }
    let lat = ctx.lattice()?;
    let class = ctx.classification()?;
    Ok(match class.local_maximal {
        Some(m) if ideal_power(lat, m, 4) == lat.zero_id() => {
            pass(format!("local with {}⁴ = (0)", lat.label(m)))
        }
        Some(m) => fail(
            "star graph on a local ring whose maximal ideal has nonzero fourth power",
            format!(
                "M = {}, M⁴ = {}",
                ctx.ideal_desc(m),
                ctx.ideal_desc(ideal_power(lat, m, 4))
            ),
        ),
        None => fail(
            "star graph on a ring that neither splits nor is local",
            format!("maximal ideals: {}", label_set(lat, &lat.maximal_ids())),
        ),
    })
}

struct StarCaseMatch {
    case: Option<&'static str>,
    vacuous_pairs: bool,
}

/// Which of the three local star shapes M matches, if any.
fn star_case_of(ctx: &RingCtx, m: usize) -> Result<StarCaseMatch> {
    let lat = ctx.lattice()?;
    let zero = lat.zero_id();
    let m2 = lat.product(m, m);
    let m3 = lat.product(m2, m);
    let m4 = lat.product(m3, m);
    let nzp = lat.nonzero_proper_ids();
    if m2 == zero {
        return Ok(StarCaseMatch {
            case: (nzp == [m]).then_some("case (i)"),
            vacuous_pairs: false,
        });
    }
    if m3 == zero {
        let others: Vec<usize> = nzp.iter().copied().filter(|&i| i != m2).collect();
        let minimal_is_m2 = lat.minimal_ids() == [m2];
        let pairs_hit_m2 = others.iter().all(|&a| {
            others
                .iter()
                .all(|&b| b == a || lat.product(a, b) == m2)
        });
        return Ok(StarCaseMatch {
            case: (minimal_is_m2 && pairs_hit_m2).then_some("case (ii)"),
            vacuous_pairs: others.len() < 2,
        });
    }
    if m4 == zero {
        let mut expected = vec![m, m2, m3];
        expected.sort_unstable();
        expected.dedup();
        let vertices = &ctx.ag()?.ids;
        return Ok(StarCaseMatch {
            case: (expected.len() == 3 && *vertices == expected).then_some("case (iii)"),
            vacuous_pairs: false,
        });
    }
    Ok(StarCaseMatch {
        case: None,
        vacuous_pairs: false,
    })
}

/// AG(R) is a star ⟺ R splits into two fields, or R is local and M falls
/// into exactly one of three shapes: (i) M² = (0) with M the only nonzero
/// proper ideal; (ii) M³ = (0), M² the only minimal ideal, and every pair
/// of distinct nonzero proper ideals outside {M²} multiplies to M²;
/// (iii) M³ ≠ (0) = M⁴ with vertex set exactly {M, M², M³}.
fn star_cases(ctx: &RingCtx) -> Result<Outcome> {
    let lat = ctx.lattice()?;
    let lhs = ctx.ag_inv()?.is_star;
    let split = ctx.split()?.is_some();
    let class = ctx.classification()?;
    let (case, vacuous) = match (split, class.local_maximal) {
        (true, _) => (Some("split into two fields"), false),
        (false, Some(m)) if m != lat.zero_id() => {
            let matched = star_case_of(ctx, m)?;
            (matched.case, matched.vacuous_pairs)
        }
        _ => (None, false),
    };
    let rhs = case.is_some();
    let vacuity_note = (vacuous && case == Some("case (ii)")).then(|| {
        "case (ii) pair condition is vacuous: fewer than two nonzero proper ideals outside {M²}"
            .to_string()
    });
    Ok(if lhs == rhs {
        let detail = match case {
            Some(c) => format!(
                "star = {lhs}; matched {c} with A*(R) = {}",
                label_set(lat, &ctx.ag()?.ids)
            ),
            None => format!("star = {lhs}; no structural case matches"),
        };
        match vacuity_note {
            Some(note) => pass_noting(detail, note),
            None => pass(detail),
        }
    } else {
        fail(
            "star shape criterion violated",
            format!(
                "star = {lhs} but matched case = {}; A*(R) = {}",
                case.unwrap_or("none"),
                label_set(lat, &ctx.ag()?.ids)
            ),
        )
    })
}

/// AG(R) is complete ⟺ R splits into two fields, or Z(R) is an ideal
/// squaring to zero, or R is local with exactly two nonzero proper ideals
/// Z(R) and Z(R)².
fn complete_cases(ctx: &RingCtx) -> Result<Outcome> {
    let lat = ctx.lattice()?;
    let lhs = ctx.ag_inv()?.is_complete;
    let zero = lat.zero_id();
    let split = ctx.split()?.is_some();
    let z = ctx.zset_ideal_id()?;
    let type2 = z.is_some_and(|z| lat.product(z, z) == zero);
    let type3 = ctx.classification()?.is_local
        && z.is_some_and(|z| {
            let z2 = lat.product(z, z);
            z2 != zero && z2 != z && lat.nonzero_proper_ids() == sorted_pair(z, z2)
        });
    let matched = if split {
        Some("type (1): splits into two fields")
    } else if type2 {
        Some("type (2): Z(R) is an ideal with Z(R)² = (0)")
    } else if type3 {
        Some("type (3): local with exactly two nonzero proper ideals Z(R) and Z(R)²")
    } else {
        None
    };
    let rhs = matched.is_some();
    Ok(if lhs == rhs {
        pass(match matched {
            Some(t) => format!("complete = {lhs}; matched {t}"),
            None => format!("complete = {lhs}; no structural type matches"),
        })
    } else {
        fail(
            "completeness criterion violated",
            format!(
                "complete = {lhs} but matched type = {}; Z(R) ideal id = {:?}",
                matched.unwrap_or("none"),
                z.map(|id| lat.label(id))
            ),
        )
    })
}

fn sorted_pair(a: usize, b: usize) -> Vec<usize> {
    if a <= b {
        vec![a, b]
    } else {
        vec![b, a]
    }
}

/// Γ(R) complete implies AG(R) complete; rings where only AG is complete
/// are recorded as the known converse gap.
fn gamma_vs_ag(ctx: &RingCtx) -> Result<Outcome> {
    let ag_complete = ctx.ag_inv()?.is_complete;
    let Some((_, gamma_inv)) = ctx.gamma() else {
        return Ok(na("order exceeds the cap for element graphs"));
    };
    Ok(match (gamma_inv.is_complete, ag_complete) {
        (true, true) => pass("Γ(R) and AG(R) are both complete"),
        (true, false) => fail(
            "Γ(R) complete but AG(R) is not",
            format!(
                "Γ has {} vertices, AG has {} vertices and {} edges",
                gamma_inv.vertex_count,
                ctx.ag_inv()?.vertex_count,
                ctx.ag_inv()?.edge_count
            ),
        ),
        (false, true) => pass("AG(R) complete while Γ(R) is not; converse gap recorded"),
        (false, false) => na("Γ(R) is not complete"),
    })
}

/// Vertex counts 1, 2, 3 correspond exactly to the three smallest ideal
/// structures: one nonzero proper ideal; a two-field split or the chain
/// Z(R) ⊃ Z(R)²; the chain Z(R) ⊃ Z(R)² ⊃ Z(R)³.
fn small_graphs(ctx: &RingCtx) -> Result<Outcome> {
    let lat = ctx.lattice()?;
    let zero = lat.zero_id();
    let k = ctx.ag()?.ids.len();
    let nzp = lat.nonzero_proper_ids();
    let split = ctx.split()?.is_some();
    let local = ctx.classification()?.is_local;
    let z = ctx.zset_ideal_id()?;

    let s1 = nzp.len() == 1;
    let chain2 = local
        && z.is_some_and(|z| {
            let z2 = lat.product(z, z);
            z2 != zero && z2 != z && nzp == sorted_pair(z, z2)
        });
    let s2 = split || chain2;
    let s3 = local
        && z.is_some_and(|z| {
            let z2 = lat.product(z, z);
            let z3 = lat.product(z2, z);
            let mut expected = vec![z, z2, z3];
            expected.sort_unstable();
            expected.dedup();
            z3 != zero && expected.len() == 3 && nzp == expected
        });

    let checks = [(1usize, s1), (2, s2), (3, s3)];
    let broken: Vec<String> = checks
        .iter()
        .filter(|&&(n, s)| (k == n) != s)
        .map(|&(n, s)| format!("n = {n}: vertex count match = {}, structure match = {s}", k == n))
        .collect();
    Ok(if broken.is_empty() {
        pass(format!(
            "{k} vertices; structure flags: one-ideal = {s1}, split-or-2-chain = {s2}, 3-chain = {s3}"
        ))
    } else {
        fail("small vertex count criterion violated", broken.join("; "))
    })
}

/// For non-domains, five statements agree: A(R)* ⊆ Max(R), A(R)* = Max(R),
/// A(R)* = Spec(R), A(R)* ⊆ Spec(R), and (R splits into two fields or has
/// exactly one nonzero proper ideal).
fn prime_verts(ctx: &RingCtx) -> Result<Outcome> {
    if ctx.is_domain()? {
        return Ok(na("domain"));
    }
    let lat = ctx.lattice()?;
    let vertices = &ctx.ag()?.ids;
    let max_ids = lat.maximal_ids();
    let spec_ids: Vec<usize> = (0..lat.count())
        .filter(|&id| lat.classify_ideal(id).is_prime)
        .collect();
    let split = ctx.split()?.is_some();
    let b = [
        is_subset(vertices, &max_ids),
        *vertices == max_ids,
        *vertices == spec_ids,
        is_subset(vertices, &spec_ids),
        split || lat.nonzero_proper_ids().len() == 1,
    ];
    Ok(if b.iter().all(|&x| x == b[0]) {
        pass(format!(
            "all equivalent at {}: A* ⊆ Max = {}, A* = Max = {}, A* = Spec = {}, A* ⊆ Spec = {}, split-or-one-ideal = {}",
            b[0], b[0], b[1], b[2], b[3], b[4]
        ))
    } else {
        fail(
            "five-way equivalence broken",
            format!(
                "A* ⊆ Max = {}, A* = Max = {}, A* = Spec = {}, A* ⊆ Spec = {}, split-or-one-ideal = {}; A* = {}",
                b[0], b[1], b[2], b[3], b[4],
                label_set(lat, vertices)
            ),
        )
    })
}
