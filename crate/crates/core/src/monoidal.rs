//! Falsification checks for the monoidal, symmetric and closed properties of
//! a product, whether a built-in kind or one derived from a seed.
//!
//! Every check runs over an explicit finite list of instances and stops at the
//! first failure. A failure carries a [`Witness`] naming the instance, which
//! [`recheck`] can run again in isolation. Passing means no counterexample was
//! found among the instances given, nothing more.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::graph::{disjoint_union, for_each_map, is_isomorphism_map, point, pushout, Bijection, Graph, GraphMap};
use crate::iso::are_isomorphic;
use crate::kan::{lan, lan_map_between, FunctorSeed, LanResult, Side};
use crate::products::{pair_index, product, product_coords, Currying, HomKind, ProductKind};
use crate::universe::graphs_up_to;

/// A product to be checked.
#[derive(Clone, Debug)]
pub enum ProductUnderTest {
    Kind(ProductKind),
    Seed(Box<FunctorSeed>),
}

impl ProductUnderTest {
    pub fn name(&self) -> String {
        match self {
            ProductUnderTest::Kind(k) => k.name().to_string(),
            ProductUnderTest::Seed(s) => format!("seed on {} vertices", s.gee.vertex_count()),
        }
    }
}

impl From<ProductKind> for ProductUnderTest {
    fn from(kind: ProductKind) -> Self {
        ProductUnderTest::Kind(kind)
    }
}

impl From<FunctorSeed> for ProductUnderTest {
    fn from(seed: FunctorSeed) -> Self {
        ProductUnderTest::Seed(Box::new(seed))
    }
}

/// `X ⊗ Y` together with the coordinates of its vertices, when they have
/// well-defined coordinates in `V(X) × V(Y)`.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub graph: Graph,
    pub coords: Option<Vec<(usize, usize)>>,
    lan: Option<LanResult>,
}

impl Evaluated {
    /// Inverse of the coordinate function, indexed by `x·|Y| + y`.
    fn index_of_coords(&self, ny: usize, total: usize) -> Option<Vec<usize>> {
        let coords = self.coords.as_ref()?;
        if coords.len() != total {
            return None;
        }
        let mut inverse = vec![usize::MAX; total];
        for (k, &(a, b)) in coords.iter().enumerate() {
            inverse[a * ny + b] = k;
        }
        Some(inverse)
    }
}

/// Memoized evaluation of one product.
struct Session<'a> {
    p: &'a ProductUnderTest,
    cache: RefCell<HashMap<(Graph, Graph), Rc<Evaluated>>>,
}

impl<'a> Session<'a> {
    fn new(p: &'a ProductUnderTest) -> Self {
        Session { p, cache: RefCell::new(HashMap::new()) }
    }

    fn eval(&self, x: &Graph, y: &Graph) -> Result<Rc<Evaluated>, String> {
        let key = (x.clone(), y.clone());
        if let Some(e) = self.cache.borrow().get(&key) {
            return Ok(e.clone());
        }
        let e = match self.p {
            ProductUnderTest::Kind(k) => {
                Evaluated { graph: product(*k, x, y), coords: Some(product_coords(x, y)), lan: None }
            }
            ProductUnderTest::Seed(s) => {
                let r = lan(s, x, y).map_err(|e| e.to_string())?;
                Evaluated { graph: r.graph().clone(), coords: r.coords.clone(), lan: Some(r) }
            }
        };
        let e = Rc::new(e);
        self.cache.borrow_mut().insert(key, e.clone());
        Ok(e)
    }

    /// `f ⊗ g` between two evaluated products, if it is a graph map.
    fn map(&self, from: &Evaluated, to: &Evaluated, f: &GraphMap, g: &GraphMap) -> Option<GraphMap> {
        match (&from.lan, &to.lan) {
            (Some(a), Some(b)) => lan_map_between(a, b, f, g).ok(),
            _ => {
                let images = product_coords(f.source(), g.source())
                    .into_iter()
                    .map(|(a, b)| pair_index(g.target(), f.apply(a), g.apply(b)))
                    .collect();
                GraphMap::between(&from.graph, &to.graph, images).ok()
            }
        }
    }

    /// Evaluates with `fixed` held in the slot opposite `variable`.
    fn eval_in(&self, variable: Side, fixed: &Graph, moving: &Graph) -> Result<Rc<Evaluated>, String> {
        match variable {
            Side::Right => self.eval(fixed, moving),
            Side::Left => self.eval(moving, fixed),
        }
    }

    fn map_in(
        &self,
        variable: Side,
        from: &Evaluated,
        to: &Evaluated,
        fixed: &Graph,
        h: &GraphMap,
    ) -> Option<GraphMap> {
        let id = GraphMap::identity(fixed);
        match variable {
            Side::Right => self.map(from, to, &id, h),
            Side::Left => self.map(from, to, h, &id),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Unit,
    Associativity,
    Symmetry,
    Adjunction,
    AdjunctionCount,
    Cocontinuity,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Unit => "unit",
            Property::Associativity => "associativity",
            Property::Symmetry => "symmetry",
            Property::Adjunction => "adjunction",
            Property::AdjunctionCount => "adjunction-count",
            Property::Cocontinuity => "cocontinuity",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnitCandidate {
    Empty,
    Point,
}

impl UnitCandidate {
    pub const ALL: [UnitCandidate; 2] = [UnitCandidate::Empty, UnitCandidate::Point];

    pub fn graph(self) -> Graph {
        match self {
            UnitCandidate::Empty => Graph::empty(),
            UnitCandidate::Point => point(),
        }
    }
}

impl fmt::Display for UnitCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitCandidate::Empty => "∅",
            UnitCandidate::Point => "I_0",
        })
    }
}

/// A single checked instance, enough to run it again.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    /// `u ⊗ X ≅ X` when `side` is `Left`, `X ⊗ u ≅ X` when `Right`.
    Unit {
        candidate: UnitCandidate,
        side: Side,
        x: Graph,
    },
    Associativity {
        x: Graph,
        y: Graph,
        z: Graph,
    },
    Symmetry {
        x: Graph,
        y: Graph,
    },
    Adjunction {
        kind: HomKind,
        x: Graph,
        y: Graph,
        z: Graph,
    },
    /// `X ⊗ (Y ⊔ Z)` when `variable` is `Right`, `(Y ⊔ Z) ⊗ X` when `Left`.
    Coproduct {
        variable: Side,
        x: Graph,
        y: Graph,
        z: Graph,
    },
    /// As for `Coproduct`, with the pushout of `Y <- I_0 -> Z` picking
    /// vertices `ya` and `za`.
    Pushout {
        variable: Side,
        x: Graph,
        y: Graph,
        z: Graph,
        ya: usize,
        za: usize,
    },
}

impl Instance {
    pub fn property(&self) -> Property {
        match self {
            Instance::Unit { .. } => Property::Unit,
            Instance::Associativity { .. } => Property::Associativity,
            Instance::Symmetry { .. } => Property::Symmetry,
            Instance::Adjunction { .. } => Property::Adjunction,
            Instance::Coproduct { .. } | Instance::Pushout { .. } => Property::Cocontinuity,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub instance: Instance,
    /// The two graphs expected to be isomorphic, when that is what failed.
    pub compared: Option<(Graph, Graph)>,
    pub detail: String,
}

type Checked = Result<(), Box<Witness>>;

impl Witness {
    fn mismatch(instance: Instance, left: Graph, right: Graph, detail: impl Into<String>) -> Box<Self> {
        Box::new(Witness { instance, compared: Some((left, right)), detail: detail.into() })
    }

    fn other(instance: Instance, detail: impl Into<String>) -> Box<Self> {
        Box::new(Witness { instance, compared: None, detail: detail.into() })
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub property: Property,
    pub label: String,
    pub passed: bool,
    /// Instances examined, including the failing one.
    pub checked: usize,
    pub witness: Option<Witness>,
    /// Sub-reports, e.g. one per unit candidate.
    pub parts: Vec<CheckReport>,
}

impl CheckReport {
    fn run(
        property: Property,
        label: String,
        instances: impl IntoIterator<Item = Instance>,
        mut one: impl FnMut(&Instance) -> Checked,
    ) -> Self {
        let mut checked = 0;
        for inst in instances {
            checked += 1;
            if let Err(w) = one(&inst) {
                return CheckReport { property, label, passed: false, checked, witness: Some(*w), parts: vec![] };
            }
        }
        CheckReport { property, label, passed: true, checked, witness: None, parts: vec![] }
    }
}

fn iso_or_canonical(a: &Graph, b: &Graph, canonical: Option<Vec<usize>>) -> bool {
    canonical.is_some_and(|m| is_isomorphism_map(a, b, &m)) || are_isomorphic(a, b).is_some()
}

fn unit_instance(s: &Session, candidate: UnitCandidate, side: Side, x: &Graph) -> Checked {
    let inst = || Instance::Unit { candidate, side, x: x.clone() };
    let u = candidate.graph();
    let e = s.eval_in(side.flip(), x, &u).map_err(|d| Witness::other(inst(), d))?;
    // the projection onto the X coordinate
    let canonical =
        e.coords.as_ref().map(|c| c.iter().map(|&(a, b)| if side == Side::Left { b } else { a }).collect::<Vec<_>>());
    if iso_or_canonical(&e.graph, x, canonical) {
        Ok(())
    } else {
        let detail = match side {
            Side::Left => format!("{candidate} ⊗ X is not isomorphic to X"),
            Side::Right => format!("X ⊗ {candidate} is not isomorphic to X"),
        };
        Err(Witness::mismatch(inst(), e.graph.clone(), x.clone(), detail))
    }
}

fn associativity_instance(s: &Session, x: &Graph, y: &Graph, z: &Graph) -> Checked {
    let inst = || Instance::Associativity { x: x.clone(), y: y.clone(), z: z.clone() };
    let fail = |d: String| Witness::other(inst(), d);
    let xy = s.eval(x, y).map_err(fail)?;
    let yz = s.eval(y, z).map_err(fail)?;
    let left = s.eval(&xy.graph, z).map_err(fail)?;
    let right = s.eval(x, &yz.graph).map_err(fail)?;
    let (nx, ny, nz) = (x.vertex_count(), y.vertex_count(), z.vertex_count());
    let no_bijection =
        || Witness::mismatch(inst(), left.graph.clone(), right.graph.clone(), "no canonical rebracketing bijection");
    let (Some(lc), Some(xyc), Some(yzc)) = (&left.coords, &xy.coords, &yz.coords) else {
        return Err(no_bijection());
    };
    let right_index = right.index_of_coords(yz.graph.vertex_count(), nx * yz.graph.vertex_count());
    let yz_index = yz.index_of_coords(nz, ny * nz);
    let (Some(right_index), Some(yz_index)) = (right_index, yz_index) else {
        return Err(no_bijection());
    };
    if lc.len() != nx * ny * nz {
        return Err(no_bijection());
    }
    // ((a, b), c) ↦ (a, (b, c))
    let forward: Vec<usize> = lc
        .iter()
        .map(|&(ab, c)| {
            let (a, b) = xyc[ab];
            right_index[a * yzc.len() + yz_index[b * nz + c]]
        })
        .collect();
    if is_isomorphism_map(&left.graph, &right.graph, &forward) {
        Ok(())
    } else {
        Err(Witness::mismatch(
            inst(),
            left.graph.clone(),
            right.graph.clone(),
            "rebracketing ((x,y),z) ↦ (x,(y,z)) is not an isomorphism",
        ))
    }
}

fn symmetry_instance(s: &Session, x: &Graph, y: &Graph) -> Checked {
    let inst = || Instance::Symmetry { x: x.clone(), y: y.clone() };
    let fail = |d: String| Witness::other(inst(), d);
    let xy = s.eval(x, y).map_err(fail)?;
    let yx = s.eval(y, x).map_err(fail)?;
    let (nx, ny) = (x.vertex_count(), y.vertex_count());
    let forward = match (&xy.coords, yx.index_of_coords(nx, nx * ny)) {
        (Some(c), Some(inverse)) if c.len() == nx * ny => {
            Some(c.iter().map(|&(a, b)| inverse[b * nx + a]).collect::<Vec<_>>())
        }
        _ => None,
    };
    if forward.is_some_and(|m| is_isomorphism_map(&xy.graph, &yx.graph, &m)) {
        Ok(())
    } else {
        Err(Witness::mismatch(inst(), xy.graph.clone(), yx.graph.clone(), "swap (x,y) ↦ (y,x) is not an isomorphism"))
    }
}

/// Hom-set counts and the currying round trips for one triple.
fn adjunction_instance(kind: HomKind, x: &Graph, y: &Graph, z: &Graph) -> Checked {
    let inst = || Instance::Adjunction { kind, x: x.clone(), y: y.clone(), z: z.clone() };
    let c = Currying::new(kind, x, y, z);
    let mut left = 0u64;
    let mut broken: Option<String> = None;
    for_each_map(&c.product, z, |h| {
        left += 1;
        if broken.is_none() {
            let back = c.curry_images(h).and_then(|g| c.uncurry_images(&g));
            if back.as_deref() != Ok(h) {
                broken = Some(format!("uncurry ∘ curry moves {h:?}"));
            }
        }
    });
    let mut right = 0u64;
    for_each_map(x, c.hom_graph(), |g| {
        right += 1;
        if broken.is_none() {
            let back = c.uncurry_images(g).and_then(|h| c.curry_images(&h));
            if back.as_deref() != Ok(g) {
                broken = Some(format!("curry ∘ uncurry moves {g:?}"));
            }
        }
    });
    if left != right {
        return Err(Witness::other(inst(), format!("|Hom(X⊗Y,Z)| = {left} but |Hom(X,hom(Y,Z))| = {right}")));
    }
    broken.map_or(Ok(()), |d| Err(Witness::other(inst(), d)))
}

/// Only the two hom-set cardinalities, with `X ⊗ Y` from the product under test.
fn adjunction_count_instance(s: &Session, kind: HomKind, x: &Graph, y: &Graph, z: &Graph) -> Checked {
    let inst = || Instance::Adjunction { kind, x: x.clone(), y: y.clone(), z: z.clone() };
    let xy = s.eval(x, y).map_err(|d| Witness::other(inst(), d))?;
    let hom = crate::products::internal_hom(kind, y, z);
    let left = crate::graph::count_maps(&xy.graph, z);
    let right = crate::graph::count_maps(x, &hom.graph);
    if left == right {
        Ok(())
    } else {
        Err(Witness::other(inst(), format!("|Hom(X⊗Y,Z)| = {left} but |Hom(X,hom(Y,Z))| = {right}")))
    }
}

fn coproduct_instance(s: &Session, variable: Side, x: &Graph, y: &Graph, z: &Graph) -> Checked {
    let inst = || Instance::Coproduct { variable, x: x.clone(), y: y.clone(), z: z.clone() };
    let fail = |d: String| Witness::other(inst(), d);
    let c = disjoint_union(y, z);
    let whole = s.eval_in(variable, x, &c.graph).map_err(fail)?;
    let a = s.eval_in(variable, x, y).map_err(fail)?;
    let b = s.eval_in(variable, x, z).map_err(fail)?;
    let sum = disjoint_union(&a.graph, &b.graph).graph;
    let canonical = match (s.map_in(variable, &a, &whole, x, &c.left), s.map_in(variable, &b, &whole, x, &c.right)) {
        (Some(ma), Some(mb)) => Some(ma.images().iter().chain(mb.images()).copied().collect()),
        _ => None,
    };
    if iso_or_canonical(&sum, &whole.graph, canonical) {
        Ok(())
    } else {
        Err(Witness::mismatch(inst(), whole.graph.clone(), sum, "product does not preserve the coproduct"))
    }
}

fn pushout_instance(s: &Session, variable: Side, x: &Graph, y: &Graph, z: &Graph, ya: usize, za: usize) -> Checked {
    let inst = || Instance::Pushout { variable, x: x.clone(), y: y.clone(), z: z.clone(), ya, za };
    let fail = |d: String| Witness::other(inst(), d);
    let pt = point();
    let (fy, fz) = match (GraphMap::between(&pt, y, vec![ya]), GraphMap::between(&pt, z, vec![za])) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return Err(fail("span vertex out of range".into())),
    };
    let po = pushout(&fy, &fz).expect("common source");
    let xp = s.eval_in(variable, x, &pt).map_err(fail)?;
    let xy = s.eval_in(variable, x, y).map_err(fail)?;
    let xz = s.eval_in(variable, x, z).map_err(fail)?;
    let whole = s.eval_in(variable, x, &po.graph).map_err(fail)?;
    let legs = (s.map_in(variable, &xp, &xy, x, &fy), s.map_in(variable, &xp, &xz, x, &fz));
    let (Some(l), Some(r)) = legs else {
        return Err(fail("the product is not functorial on the span".into()));
    };
    let image_po = pushout(&l, &r).expect("common source");
    let canonical = match (s.map_in(variable, &xy, &whole, x, &po.left), s.map_in(variable, &xz, &whole, x, &po.right))
    {
        (Some(ml), Some(mr)) => {
            let mut images = vec![usize::MAX; image_po.graph.vertex_count()];
            let mut ok = true;
            let pairs =
                image_po.left.images().iter().zip(ml.images()).chain(image_po.right.images().iter().zip(mr.images()));
            for (&cls, &w) in pairs {
                ok &= images[cls] == usize::MAX || images[cls] == w;
                images[cls] = w;
            }
            ok.then_some(images)
        }
        _ => None,
    };
    if iso_or_canonical(&image_po.graph, &whole.graph, canonical) {
        Ok(())
    } else {
        Err(Witness::mismatch(
            inst(),
            whole.graph.clone(),
            image_po.graph.clone(),
            "product does not preserve the pushout",
        ))
    }
}

fn run_instance(s: &Session, inst: &Instance) -> Checked {
    match inst {
        Instance::Unit { candidate, side, x } => unit_instance(s, *candidate, *side, x),
        Instance::Associativity { x, y, z } => associativity_instance(s, x, y, z),
        Instance::Symmetry { x, y } => symmetry_instance(s, x, y),
        Instance::Adjunction { kind, x, y, z } => match s.p {
            ProductUnderTest::Kind(k) if k.hom_kind() == Some(*kind) => adjunction_instance(*kind, x, y, z),
            _ => adjunction_count_instance(s, *kind, x, y, z),
        },
        Instance::Coproduct { variable, x, y, z } => coproduct_instance(s, *variable, x, y, z),
        Instance::Pushout { variable, x, y, z, ya, za } => pushout_instance(s, *variable, x, y, z, *ya, *za),
    }
}

/// Runs the witness's instance again. True iff it still fails with the same
/// compared graphs.
pub fn recheck(p: &ProductUnderTest, witness: &Witness) -> bool {
    match run_instance(&Session::new(p), &witness.instance) {
        Ok(()) => false,
        Err(w) => w.compared == witness.compared,
    }
}

/// Per candidate unit, whether `u ⊗ X ≅ X ≅ X ⊗ u` for every test graph. The
/// report passes if some candidate does; its witness comes from `I_0`.
pub fn check_unit(p: &ProductUnderTest, candidates: &[UnitCandidate], tests: &[Graph]) -> CheckReport {
    let s = Session::new(p);
    let parts: Vec<CheckReport> = candidates
        .iter()
        .map(|&candidate| {
            let instances = tests
                .iter()
                .flat_map(|x| [Side::Left, Side::Right].map(|side| Instance::Unit { candidate, side, x: x.clone() }));
            CheckReport::run(Property::Unit, format!("unit {candidate}"), instances, |i| run_instance(&s, i))
        })
        .collect();
    let passed = parts.iter().any(|r| r.passed);
    let witness = if passed { None } else { parts.iter().rev().find_map(|r| r.witness.clone()) };
    CheckReport {
        property: Property::Unit,
        label: "unit".into(),
        passed,
        checked: parts.iter().map(|r| r.checked).sum(),
        witness,
        parts,
    }
}

pub fn check_associativity(p: &ProductUnderTest, triples: &[(Graph, Graph, Graph)]) -> CheckReport {
    let s = Session::new(p);
    let instances =
        triples.iter().map(|(x, y, z)| Instance::Associativity { x: x.clone(), y: y.clone(), z: z.clone() });
    CheckReport::run(Property::Associativity, "associativity".into(), instances, |i| run_instance(&s, i))
}

pub fn check_symmetry(p: &ProductUnderTest, pairs: &[(Graph, Graph)]) -> CheckReport {
    let s = Session::new(p);
    let instances = pairs.iter().map(|(x, y)| Instance::Symmetry { x: x.clone(), y: y.clone() });
    CheckReport::run(Property::Symmetry, "symmetry".into(), instances, |i| run_instance(&s, i))
}

/// The full adjunction for a kind with an internal hom: hom-set counts agree
/// and currying is a bijection on every triple.
pub fn check_adjunction(kind: HomKind, triples: &[(Graph, Graph, Graph)]) -> CheckReport {
    let p = ProductUnderTest::Kind(kind.product_kind());
    let s = Session::new(&p);
    let instances =
        triples.iter().map(|(x, y, z)| Instance::Adjunction { kind, x: x.clone(), y: y.clone(), z: z.clone() });
    CheckReport::run(Property::Adjunction, format!("adjunction ({kind})"), instances, |i| run_instance(&s, i))
}

/// Whether `|Hom(X⊗Y, Z)| = |Hom(X, hom(Y, Z))|` on every triple for one of
/// the two known homs. Passes if either hom matches throughout.
pub fn check_adjunction_counts(p: &ProductUnderTest, triples: &[(Graph, Graph, Graph)]) -> CheckReport {
    let s = Session::new(p);
    let parts: Vec<CheckReport> = HomKind::ALL
        .iter()
        .map(|&kind| {
            let instances =
                triples.iter().map(|(x, y, z)| Instance::Adjunction { kind, x: x.clone(), y: y.clone(), z: z.clone() });
            CheckReport::run(Property::AdjunctionCount, format!("adjunction-count ({kind} hom)"), instances, |i| {
                let Instance::Adjunction { kind, x, y, z } = i else { unreachable!() };
                adjunction_count_instance(&s, *kind, x, y, z)
            })
        })
        .collect();
    let passed = parts.iter().any(|r| r.passed);
    CheckReport {
        property: Property::AdjunctionCount,
        label: "adjunction-count".into(),
        passed,
        checked: parts.iter().map(|r| r.checked).sum(),
        witness: if passed { None } else { parts[0].witness.clone() },
        parts,
    }
}

/// Coproduct and pushout preservation in each variable. Pushouts are taken
/// over every span `Y <- I_0 -> Z`.
pub fn check_cocontinuity(p: &ProductUnderTest, probes: &[(Graph, Graph, Graph)]) -> CheckReport {
    let s = Session::new(p);
    let instances = probes.iter().flat_map(|(x, y, z)| {
        let mut out = Vec::new();
        for variable in [Side::Right, Side::Left] {
            out.push(Instance::Coproduct { variable, x: x.clone(), y: y.clone(), z: z.clone() });
        }
        for ya in 0..y.vertex_count() {
            for za in 0..z.vertex_count() {
                for variable in [Side::Right, Side::Left] {
                    out.push(Instance::Pushout { variable, x: x.clone(), y: y.clone(), z: z.clone(), ya, za });
                }
            }
        }
        out
    });
    CheckReport::run(Property::Cocontinuity, "cocontinuity".into(), instances, |i| run_instance(&s, i))
}

pub fn pairs_of(graphs: &[Graph]) -> Vec<(Graph, Graph)> {
    graphs.iter().flat_map(|x| graphs.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

pub fn triples_of(graphs: &[Graph]) -> Vec<(Graph, Graph, Graph)> {
    graphs
        .iter()
        .flat_map(|x| graphs.iter().flat_map(move |y| graphs.iter().map(move |z| (x.clone(), y.clone(), z.clone()))))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    NotApplicable,
}

impl Verdict {
    fn of(passed: bool) -> Self {
        if passed {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "Yes",
            Verdict::No => "No",
            Verdict::NotApplicable => "N/A",
        })
    }
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub kind: ProductKind,
    pub monoidal: Verdict,
    pub symmetric: Verdict,
    pub closed: Verdict,
    /// Raw outcomes of every check run, including those hidden behind N/A.
    pub reports: Vec<CheckReport>,
}

#[derive(Clone, Debug)]
pub struct PropertyTable {
    pub max_n: usize,
    pub rows: Vec<TableRow>,
}

/// Runs every check for one kind over all graphs with at most `max_n` vertices.
pub fn table_row(kind: ProductKind, max_n: usize) -> TableRow {
    let graphs = graphs_up_to(max_n);
    let pairs = pairs_of(&graphs);
    let triples = triples_of(&graphs);
    let p = ProductUnderTest::Kind(kind);
    let unit = check_unit(&p, &UnitCandidate::ALL, &graphs);
    let assoc = check_associativity(&p, &triples);
    let sym = check_symmetry(&p, &pairs);
    let cocont = check_cocontinuity(&p, &triples);
    let adjunction = kind.hom_kind().map(|h| check_adjunction(h, &triples));
    let monoidal = unit.passed && assoc.passed;
    let closed = cocont.passed && adjunction.as_ref().is_none_or(|r| r.passed);
    let gated = |v: bool| if monoidal { Verdict::of(v) } else { Verdict::NotApplicable };
    let mut reports = vec![unit, assoc, sym, cocont];
    reports.extend(adjunction);
    TableRow {
        kind,
        monoidal: Verdict::of(monoidal),
        symmetric: gated(reports[2].passed),
        closed: gated(closed),
        reports,
    }
}

pub fn property_table(max_n: usize) -> PropertyTable {
    assert!(max_n >= 2, "the table needs graphs with at least two vertices");
    PropertyTable { max_n, rows: ProductKind::ALL.iter().map(|&k| table_row(k, max_n)).collect() }
}

/// Maps each vertex of a seed's product back to `(x, y)` and checks that this
/// is an isomorphism onto the kind's product.
pub fn certify_against(seed: &FunctorSeed, kind: ProductKind, x: &Graph, y: &Graph) -> Result<Bijection, String> {
    let r = lan(seed, x, y).map_err(|e| e.to_string())?;
    let coords = r.coords.as_ref().ok_or("classes do not biject onto V(X) × V(Y)")?;
    let forward: Vec<usize> = coords.iter().map(|&(a, b)| pair_index(y, a, b)).collect();
    let bij = Bijection::from_forward(forward).ok_or("coordinates are not a bijection")?;
    if bij.is_isomorphism(r.graph(), &product(kind, x, y)) {
        Ok(bij)
    } else {
        Err(format!("class bijection is not an isomorphism onto the {kind} product"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge, path};
    use crate::kan::{box_seed, categorical_seed};

    fn small() -> Vec<Graph> {
        vec![point(), edge(), path(2)]
    }

    #[test]
    fn box_unit_passes_with_point_only() {
        let r = check_unit(&ProductKind::Box.into(), &UnitCandidate::ALL, &graphs_up_to(4));
        assert!(r.passed);
        assert!(!r.parts[0].passed);
        assert!(r.parts[1].passed);
    }

    #[test]
    fn tensor_and_modular_units_fail() {
        for kind in [ProductKind::Tensor, ProductKind::Modular] {
            let p = kind.into();
            let r = check_unit(&p, &UnitCandidate::ALL, &[point(), edge()]);
            assert!(!r.passed);
            let w = r.witness.unwrap();
            assert_eq!(w.instance, Instance::Unit { candidate: UnitCandidate::Point, side: Side::Left, x: edge() });
            assert_eq!(w.compared, Some((Graph::discrete(2), edge())));
            assert!(recheck(&p, &w));
        }
    }

    #[test]
    fn associativity_on_small_triples() {
        let t = triples_of(&small());
        for kind in [ProductKind::Box, ProductKind::Lexicographic, ProductKind::Tensor] {
            assert!(check_associativity(&kind.into(), &t).passed, "{kind}");
        }
    }

    #[test]
    fn lexicographic_swap_fails() {
        let p = ProductKind::Lexicographic.into();
        let pair = (edge(), Graph::discrete(2));
        let r = check_symmetry(&p, &[pair]);
        let w = r.witness.unwrap();
        let (xy, yx) = w.compared.clone().unwrap();
        // K_{2,2} against two disjoint edges
        assert_eq!(xy.edge_count(), 4);
        assert_eq!(yx.edge_count(), 2);
        assert!(recheck(&p, &w));
        assert!(check_symmetry(&ProductKind::Conormal.into(), &pairs_of(&graphs_up_to(3))).passed);
    }

    #[test]
    fn box_adjunction_spot_value() {
        assert!(check_adjunction(HomKind::Box, &[(edge(), edge(), edge())]).passed);
        let c = Currying::new(HomKind::Box, &edge(), &edge(), &edge());
        assert_eq!(crate::graph::count_maps(&c.product, &edge()), 16);
        assert_eq!(crate::graph::count_maps(&edge(), c.hom_graph()), 16);
    }

    #[test]
    fn conormal_and_lexicographic_fail_cocontinuity() {
        let probe = [(edge(), point(), point())];
        for kind in [ProductKind::Conormal, ProductKind::Lexicographic] {
            let p = kind.into();
            let r = check_cocontinuity(&p, &probe);
            assert!(!r.passed, "{kind}");
            let w = r.witness.unwrap();
            assert_eq!(w.instance, Instance::Coproduct { variable: Side::Right, x: edge(), y: point(), z: point() });
            let (whole, sum) = w.compared.clone().unwrap();
            assert_eq!((whole.edge_count(), sum.edge_count()), (4, 2));
            assert!(recheck(&p, &w));
        }
        assert!(check_cocontinuity(&ProductKind::Box.into(), &triples_of(&small())).passed);
    }

    #[test]
    fn seeds_behave_like_their_products() {
        let t = triples_of(&[point(), edge()]);
        for seed in [box_seed(), categorical_seed()] {
            let p = ProductUnderTest::from(seed);
            assert!(check_unit(&p, &UnitCandidate::ALL, &small()).passed);
            assert!(check_associativity(&p, &t).passed);
            assert!(check_symmetry(&p, &pairs_of(&small())).passed);
            assert!(check_adjunction_counts(&p, &t).passed);
            assert!(check_cocontinuity(&p, &t).passed);
        }
    }

    #[test]
    fn certificates() {
        assert!(certify_against(&box_seed(), ProductKind::Box, &edge(), &path(2)).is_ok());
        assert!(certify_against(&box_seed(), ProductKind::Categorical, &edge(), &edge()).is_err());
        assert!(certify_against(&categorical_seed(), ProductKind::Categorical, &path(2), &edge()).is_ok());
    }
}
