//! The two-object index category with objects `V`, `E` and generators
//! `s, t: V -> E`, `r: E -> V`, `σ: E -> E`, subject to
//! `rs = rt = id_V`, `σσ = id_E`, `σs = t`, `σt = s`, `rσ = r`.
//!
//! Every morphism has one of eight normal forms; composition is a fixed table.

use std::fmt;

use crate::graph::{edge, point, GraphMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GGObject {
    V,
    E,
}

/// A morphism in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GGMorphism {
    IdV,
    S,
    T,
    R,
    IdE,
    Sigma,
    /// `s ∘ r`, constant at the source end.
    SR,
    /// `t ∘ r`, constant at the target end.
    TR,
}

use GGMorphism::*;

impl GGMorphism {
    pub const ALL: [GGMorphism; 8] = [IdV, S, T, R, IdE, Sigma, SR, TR];

    /// The endomorphisms of `E`, in the order `id, σ, sr, tr`.
    pub const ENDO_E: [GGMorphism; 4] = [IdE, Sigma, SR, TR];

    pub fn source(self) -> GGObject {
        match self {
            IdV | S | T => GGObject::V,
            R | IdE | Sigma | SR | TR => GGObject::E,
        }
    }

    pub fn target(self) -> GGObject {
        match self {
            IdV | R => GGObject::V,
            S | T | IdE | Sigma | SR | TR => GGObject::E,
        }
    }

    pub fn identity(obj: GGObject) -> Self {
        match obj {
            GGObject::V => IdV,
            GGObject::E => IdE,
        }
    }

    pub fn is_identity(self) -> bool {
        matches!(self, IdV | IdE)
    }

    /// Position within [`GGMorphism::ENDO_E`], for endomorphisms of `E`.
    pub fn endo_index(self) -> Option<usize> {
        GGMorphism::ENDO_E.iter().position(|&m| m == self)
    }
}

impl fmt::Display for GGMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdV => "id_V",
            S => "s",
            T => "t",
            R => "r",
            IdE => "id_E",
            Sigma => "σ",
            SR => "sr",
            TR => "tr",
        })
    }
}

/// Complete hom-set in the fixed order of [`GGMorphism::ALL`].
pub fn gg_homset(a: GGObject, b: GGObject) -> Vec<GGMorphism> {
    GGMorphism::ALL.into_iter().filter(|m| m.source() == a && m.target() == b).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotComposable {
    pub outer: GGMorphism,
    pub inner: GGMorphism,
}

impl fmt::Display for NotComposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot compose {} after {}", self.outer, self.inner)
    }
}

impl std::error::Error for NotComposable {}

/// `g ∘ f`.
pub fn gg_compose(g: GGMorphism, f: GGMorphism) -> Result<GGMorphism, NotComposable> {
    if f.target() != g.source() {
        return Err(NotComposable { outer: g, inner: f });
    }
    if f.is_identity() {
        return Ok(g);
    }
    if g.is_identity() {
        return Ok(f);
    }
    let out = match (g, f) {
        // into V then out again
        (S, R) => SR,
        (T, R) => TR,
        (R, S) | (R, T) => IdV,
        (R, Sigma) | (R, SR) | (R, TR) => R,
        // E -> E -> E
        (Sigma, Sigma) => IdE,
        (Sigma, SR) => TR,
        (Sigma, TR) => SR,
        (SR, Sigma) | (SR, SR) | (SR, TR) => SR,
        (TR, Sigma) | (TR, SR) | (TR, TR) => TR,
        // V -> E -> E
        (Sigma, S) => T,
        (Sigma, T) => S,
        (SR, S) | (SR, T) => S,
        (TR, S) | (TR, T) => T,
        _ => unreachable!("composable pair ({g}, {f}) missing from table"),
    };
    Ok(out)
}

/// The image of a morphism under the embedding `V ↦ I_0`, `E ↦ I_1`, where
/// vertex 0 of `I_1` is the `s` end and vertex 1 the `t` end.
pub fn yoneda_images(h: GGMorphism) -> Vec<usize> {
    match h {
        IdV => vec![0],
        S => vec![0],
        T => vec![1],
        R => vec![0, 0],
        IdE => vec![0, 1],
        Sigma => vec![1, 0],
        SR => vec![0, 0],
        TR => vec![1, 1],
    }
}

pub fn yoneda_object(obj: GGObject) -> crate::graph::Graph {
    match obj {
        GGObject::V => point(),
        GGObject::E => edge(),
    }
}

pub fn yoneda_action(h: GGMorphism) -> GraphMap {
    GraphMap::between(&yoneda_object(h.source()), &yoneda_object(h.target()), yoneda_images(h))
        .expect("generator images are graph maps")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homset_sizes() {
        use GGObject::*;
        assert_eq!(gg_homset(V, V), vec![IdV]);
        assert_eq!(gg_homset(E, E), vec![IdE, Sigma, SR, TR]);
        assert_eq!(gg_homset(V, E), vec![S, T]);
        assert_eq!(gg_homset(E, V), vec![R]);
    }

    #[test]
    fn defining_relations() {
        assert_eq!(gg_compose(Sigma, Sigma), Ok(IdE));
        assert_eq!(gg_compose(R, S), Ok(IdV));
        assert_eq!(gg_compose(R, T), Ok(IdV));
        assert_eq!(gg_compose(Sigma, S), Ok(T));
        assert_eq!(gg_compose(R, Sigma), Ok(R));
        assert_eq!(gg_compose(Sigma, SR), Ok(TR));
        assert!(gg_compose(S, S).is_err());
    }

    /// Reduces a word of generators (outermost first) using only the defining
    /// relations, then reads off the normal form.
    fn normal_form(word: &[char], obj: GGObject) -> GGMorphism {
        let mut w: Vec<char> = word.to_vec();
        loop {
            let hit = w.windows(2).position(|p| {
                matches!((p[0], p[1]), ('r', 's') | ('r', 't') | ('σ', 'σ') | ('σ', 's') | ('σ', 't') | ('r', 'σ'))
            });
            let Some(i) = hit else { break };
            let replacement: &[char] = match (w[i], w[i + 1]) {
                ('σ', 's') => &['t'],
                ('σ', 't') => &['s'],
                ('r', 'σ') => &['r'],
                _ => &[],
            };
            w.splice(i..i + 2, replacement.iter().copied());
        }
        match w.as_slice() {
            [] => GGMorphism::identity(obj),
            ['s'] => S,
            ['t'] => T,
            ['r'] => R,
            ['σ'] => Sigma,
            ['s', 'r'] => SR,
            ['t', 'r'] => TR,
            other => panic!("irreducible word {other:?}"),
        }
    }

    #[test]
    fn composition_table_matches_word_rewriting() {
        let generator = |c: char| match c {
            's' => S,
            't' => T,
            'r' => R,
            _ => Sigma,
        };
        // every composable word of length up to 6, grown from the innermost letter
        let mut frontier: Vec<Vec<char>> = vec![vec![]];
        let mut reached = std::collections::BTreeSet::new();
        for _ in 0..6 {
            let mut next = Vec::new();
            for w in &frontier {
                for c in ['s', 't', 'r', 'σ'] {
                    let g = generator(c);
                    if let Some(&inner) = w.first() {
                        if generator(inner).target() != g.source() {
                            continue;
                        }
                    }
                    let mut longer = vec![c];
                    longer.extend(w);
                    let mut acc = generator(*longer.last().unwrap());
                    for &d in longer[..longer.len() - 1].iter().rev() {
                        acc = gg_compose(generator(d), acc).unwrap();
                    }
                    let domain = generator(*longer.last().unwrap()).source();
                    assert_eq!(acc, normal_form(&longer, domain), "{longer:?}");
                    reached.insert(acc);
                    next.push(longer);
                }
            }
            frontier = next;
        }
        assert_eq!(reached.len(), 8, "every normal form is a word");
        for m in GGMorphism::ALL {
            assert_eq!(gg_compose(m, GGMorphism::identity(m.source())), Ok(m));
            assert_eq!(gg_compose(GGMorphism::identity(m.target()), m), Ok(m));
        }
    }

    #[test]
    fn composition_is_associative() {
        for h in GGMorphism::ALL {
            for g in GGMorphism::ALL {
                for f in GGMorphism::ALL {
                    if let (Ok(gf), Ok(hg)) = (gg_compose(g, f), gg_compose(h, g)) {
                        assert_eq!(gg_compose(h, gf), gg_compose(hg, f));
                    }
                }
            }
        }
    }

    #[test]
    fn yoneda_examples() {
        assert_eq!(yoneda_action(Sigma).images(), &[1, 0]);
        assert_eq!(yoneda_action(SR).images(), &[0, 0]);
        assert_eq!(yoneda_action(IdV).images(), &[0]);
        assert_eq!(yoneda_action(R).target().vertex_count(), 1);
    }

    #[test]
    fn yoneda_is_functorial_and_faithful() {
        for g in GGMorphism::ALL {
            for f in GGMorphism::ALL {
                if let Ok(gf) = gg_compose(g, f) {
                    let composed = yoneda_action(g).after(&yoneda_action(f)).unwrap();
                    assert_eq!(yoneda_action(gf), composed, "{g} ∘ {f}");
                }
                if f != g && f.source() == g.source() && f.target() == g.target() {
                    assert_ne!(yoneda_action(f), yoneda_action(g));
                }
            }
        }
    }
}
