//! Candidate functors `𝔾 × 𝔾 -> Graph`, described by their value on `(E, E)`.

use std::fmt;

use thiserror::Error;

use crate::gg::{gg_compose, GGMorphism};
use crate::graph::Graph;

/// An end of the edge: `s` (vertex 0 of `I_1`) or `t` (vertex 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    S,
    T,
}

impl End {
    pub const BOTH: [End; 2] = [End::S, End::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn morphism(self) -> GGMorphism {
        match self {
            End::S => GGMorphism::S,
            End::T => GGMorphism::T,
        }
    }

    /// The end picked out by a morphism `V -> E`.
    pub fn of_morphism(m: GGMorphism) -> Option<End> {
        match m {
            GGMorphism::S => Some(End::S),
            GGMorphism::T => Some(End::T),
            _ => None,
        }
    }

    /// Where an endomorphism of `E` sends this end.
    pub fn act(self, h: GGMorphism) -> End {
        let m = gg_compose(h, self.morphism()).expect("endomorphism of E");
        End::of_morphism(m).expect("V -> E")
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            End::S => "s",
            End::T => "t",
        })
    }
}

/// A pair of ends, naming one of the four point maps `I_0 -> F(E, E)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(pub End, pub End);

impl Label {
    pub const ALL: [Label; 4] =
        [Label(End::S, End::S), Label(End::S, End::T), Label(End::T, End::S), Label(End::T, End::T)];

    pub fn index(self) -> usize {
        2 * self.0.index() + self.1.index()
    }

    pub fn key(self) -> &'static str {
        ["ss", "st", "ts", "tt"][self.index()]
    }

    pub fn from_key(key: &str) -> Option<Label> {
        Label::ALL.into_iter().find(|l| l.key() == key)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "first",
            Side::Right => "second",
        })
    }
}

/// The six generator pairs `(σ,id), (id,σ), (sr,id), (id,sr), (tr,id), (id,tr)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    SigmaL,
    SigmaR,
    SrL,
    SrR,
    TrL,
    TrR,
}

impl Generator {
    pub const ALL: [Generator; 6] =
        [Generator::SigmaL, Generator::SigmaR, Generator::SrL, Generator::SrR, Generator::TrL, Generator::TrR];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn key(self) -> &'static str {
        ["sigma_l", "sigma_r", "sr_l", "sr_r", "tr_l", "tr_r"][self.index()]
    }

    pub fn from_key(key: &str) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.key() == key)
    }

    pub fn side(self) -> Side {
        match self {
            Generator::SigmaL | Generator::SrL | Generator::TrL => Side::Left,
            _ => Side::Right,
        }
    }

    pub fn morphism(self) -> GGMorphism {
        match self {
            Generator::SigmaL | Generator::SigmaR => GGMorphism::Sigma,
            Generator::SrL | Generator::SrR => GGMorphism::SR,
            Generator::TrL | Generator::TrR => GGMorphism::TR,
        }
    }

    pub fn of(side: Side, h: GGMorphism) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.side() == side && g.morphism() == h)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side() {
            Side::Left => write!(f, "({},id)", self.morphism()),
            Side::Right => write!(f, "(id,{})", self.morphism()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedViolation {
    #[error("label {0} names a vertex outside the seed graph")]
    LabelOutOfRange(Label),
    #[error("action {0} has the wrong length or leaves the seed graph")]
    ActionShape(Generator),
    #[error("action {0} is not a graph map")]
    ActionNotGraphMap(Generator),
    #[error("relation {lhs} = {rhs} fails in the {side} coordinate")]
    Relation { side: Side, lhs: String, rhs: String },
    #[error("actions {0} and {1} do not commute")]
    NotCommuting(Generator, Generator),
    #[error("action {generator} does not send label {label} to label {expected}")]
    LabelNotEquivariant { generator: Generator, label: Label, expected: Label },
    #[error("labels {0} and {1} must be equal or adjacent")]
    MissingForcedEdge(Label, Label),
    #[error("vertex {0} carries no label, so its actions cannot be derived")]
    Unlabelled(usize),
    #[error("labels on vertex {0} determine conflicting actions")]
    ConflictingLabels(usize),
}

/// The data of a candidate `F: 𝔾 × 𝔾 -> Graph` with `F(V,V) = I_0` and
/// `F(V,E) = F(E,V) = I_1`: the graph `F(E,E)`, the four labelled points and
/// the actions of the six generator pairs on `F(E,E)`.
///
/// Construction does not validate; see [`FunctorSeed::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunctorSeed {
    pub gee: Graph,
    /// Indexed by [`Label::index`].
    pub labels: [usize; 4],
    /// Indexed by [`Generator::index`].
    pub actions: [Vec<usize>; 6],
}

impl FunctorSeed {
    pub fn label(&self, l: Label) -> usize {
        self.labels[l.index()]
    }

    pub fn labels_of(&self, v: usize) -> impl Iterator<Item = Label> + '_ {
        Label::ALL.into_iter().filter(move |&l| self.label(l) == v)
    }

    pub fn is_labelled(&self, v: usize) -> bool {
        self.labels.contains(&v)
    }

    pub fn action(&self, g: Generator) -> &[usize] {
        &self.actions[g.index()]
    }

    /// Derives all six actions from the labels. Every vertex must be labelled,
    /// and the labels on a shared vertex must agree on where each generator sends it.
    pub fn from_labels(gee: Graph, labels: [usize; 4]) -> Result<Self, SeedViolation> {
        let n = gee.vertex_count();
        for l in Label::ALL {
            if labels[l.index()] >= n {
                return Err(SeedViolation::LabelOutOfRange(l));
            }
        }
        let mut actions: [Vec<usize>; 6] = Default::default();
        for g in Generator::ALL {
            let mut images = vec![usize::MAX; n];
            for l in Label::ALL {
                let moved = match g.side() {
                    Side::Left => Label(l.0.act(g.morphism()), l.1),
                    Side::Right => Label(l.0, l.1.act(g.morphism())),
                };
                let (v, w) = (labels[l.index()], labels[moved.index()]);
                if images[v] != usize::MAX && images[v] != w {
                    return Err(SeedViolation::ConflictingLabels(v));
                }
                images[v] = w;
            }
            if let Some(v) = images.iter().position(|&w| w == usize::MAX) {
                return Err(SeedViolation::Unlabelled(v));
            }
            actions[g.index()] = images;
        }
        Ok(FunctorSeed { gee, labels, actions })
    }

    /// Action of `(h, id)` or `(id, h)` for an endomorphism `h` of `E`.
    pub fn endo(&self, side: Side, h: GGMorphism) -> Vec<usize> {
        match h {
            GGMorphism::IdE => (0..self.gee.vertex_count()).collect(),
            _ => self.action(Generator::of(side, h).expect("endomorphism of E")).to_vec(),
        }
    }

    /// Action of `(h, h')` on `F(E,E)`, composed from the generator actions.
    pub fn pair_action(&self, h: GGMorphism, h2: GGMorphism) -> Vec<usize> {
        let left = self.endo(Side::Left, h);
        self.endo(Side::Right, h2).into_iter().map(|v| left[v]).collect()
    }

    /// Checks every seed invariant, reporting the first violation.
    pub fn validate(&self) -> Result<(), SeedViolation> {
        let n = self.gee.vertex_count();
        for l in Label::ALL {
            if self.label(l) >= n {
                return Err(SeedViolation::LabelOutOfRange(l));
            }
        }
        for g in Generator::ALL {
            let a = self.action(g);
            if a.len() != n || a.iter().any(|&w| w >= n) {
                return Err(SeedViolation::ActionShape(g));
            }
        }
        for g in Generator::ALL {
            if !self.gee.is_map_into(&self.gee, self.action(g)).unwrap_or(false) {
                return Err(SeedViolation::ActionNotGraphMap(g));
            }
        }
        for side in [Side::Left, Side::Right] {
            for h in GGMorphism::ENDO_E {
                for k in GGMorphism::ENDO_E {
                    let hk = gg_compose(h, k).expect("endomorphisms compose");
                    let (ah, ak) = (self.endo(side, h), self.endo(side, k));
                    let composed: Vec<usize> = ak.iter().map(|&v| ah[v]).collect();
                    if composed != self.endo(side, hk) {
                        return Err(SeedViolation::Relation { side, lhs: format!("{h}∘{k}"), rhs: hk.to_string() });
                    }
                }
            }
        }
        for gl in Generator::ALL.into_iter().filter(|g| g.side() == Side::Left) {
            for gr in Generator::ALL.into_iter().filter(|g| g.side() == Side::Right) {
                let (l, r) = (self.action(gl), self.action(gr));
                if (0..n).any(|v| l[r[v]] != r[l[v]]) {
                    return Err(SeedViolation::NotCommuting(gl, gr));
                }
            }
        }
        for g in Generator::ALL {
            for l in Label::ALL {
                let expected = match g.side() {
                    Side::Left => Label(l.0.act(g.morphism()), l.1),
                    Side::Right => Label(l.0, l.1.act(g.morphism())),
                };
                if self.action(g)[self.label(l)] != self.label(expected) {
                    return Err(SeedViolation::LabelNotEquivariant { generator: g, label: l, expected });
                }
            }
        }
        for (a, b) in forced_pairs() {
            if !self.gee.linked(self.label(a), self.label(b)) {
                return Err(SeedViolation::MissingForcedEdge(a, b));
            }
        }
        Ok(())
    }
}

/// Label pairs that differ in one coordinate. Their vertices must be equal or
/// adjacent, since they are the images of the edge under `F(a, -)` and `F(-, b)`.
pub fn forced_pairs() -> [(Label, Label); 4] {
    use End::*;
    [(Label(S, S), Label(S, T)), (Label(T, S), Label(T, T)), (Label(S, S), Label(T, S)), (Label(S, T), Label(T, T))]
}

/// The seed whose `F(E,E)` has the four labelled vertices `ss, st, ts, tt`
/// (indices 0..4) and the given edges.
pub fn labelled_seed(edges: impl IntoIterator<Item = (usize, usize)>) -> FunctorSeed {
    let gee = Graph::new(4, edges).expect("four-vertex edge set");
    FunctorSeed::from_labels(gee, [0, 1, 2, 3]).expect("injective labels determine actions")
}

/// `F(E,E) = C_4`: edges between labels agreeing in one coordinate.
pub fn box_seed() -> FunctorSeed {
    labelled_seed(forced_pairs().map(|(a, b)| (a.index(), b.index())))
}

/// `F(E,E) = K_4`.
pub fn categorical_seed() -> FunctorSeed {
    labelled_seed([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn end_actions() {
        assert_eq!(End::S.act(GGMorphism::Sigma), End::T);
        assert_eq!(End::T.act(GGMorphism::SR), End::S);
        assert_eq!(End::S.act(GGMorphism::TR), End::T);
    }

    #[test]
    fn box_and_categorical_seeds_validate() {
        assert_eq!(box_seed().validate(), Ok(()));
        assert_eq!(categorical_seed().validate(), Ok(()));
        assert_eq!(box_seed().gee.edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn derived_actions_for_the_square() {
        let seed = box_seed();
        assert_eq!(seed.action(Generator::SigmaL), &[2, 3, 0, 1]);
        assert_eq!(seed.action(Generator::SigmaR), &[1, 0, 3, 2]);
        assert_eq!(seed.action(Generator::SrL), &[0, 1, 0, 1]);
        assert_eq!(seed.action(Generator::TrR), &[1, 1, 3, 3]);
        assert_eq!(seed.pair_action(GGMorphism::Sigma, GGMorphism::SR), &[2, 2, 0, 0]);
    }

    #[test]
    fn one_diagonal_breaks_the_flip() {
        let mut edges: Vec<(usize, usize)> = box_seed().gee.edges().to_vec();
        edges.push((0, 3));
        let seed = labelled_seed(edges);
        assert_eq!(seed.validate(), Err(SeedViolation::ActionNotGraphMap(Generator::SigmaL)));
    }

    #[test]
    fn edgeless_seed_misses_forced_edge() {
        let seed = labelled_seed([]);
        let err = seed.validate().unwrap_err();
        assert_eq!(err, SeedViolation::MissingForcedEdge(Label(End::S, End::S), Label(End::S, End::T)));
        assert_eq!(err.to_string(), "labels (s,s) and (s,t) must be equal or adjacent");
    }

    #[test]
    fn relation_violation_is_named() {
        let mut seed = box_seed();
        seed.actions[Generator::SigmaL.index()] = vec![0, 1, 2, 3];
        assert!(matches!(seed.validate(), Err(SeedViolation::Relation { side: Side::Left, .. })));
    }

    #[test]
    fn unlabelled_vertices_need_explicit_actions() {
        let gee = Graph::new(5, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(FunctorSeed::from_labels(gee, [0, 1, 2, 3]), Err(SeedViolation::Unlabelled(4)));
    }
}
