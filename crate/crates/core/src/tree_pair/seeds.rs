use rayon::prelude::*;

use crate::e4::{Colour, TriColouring};
use crate::planar::{mask_of, PlanarGraph};

use super::{extend_cover, Choice, ChoiceVector, ClosedPair, Condition, CoverPair, Side, TreePairError, Violation};

/// Upper limit on the number of choice vectors [`enumerate_thm13_covers`]
/// will expand.
pub const MAX_CHOICE_VECTORS: u128 = 1 << 24;

/// `STAR` followed by `PATH(r)` for each red neighbour `r`, ascending.
pub fn legal_choices(graph: &PlanarGraph, colouring: &TriColouring, v: usize) -> Vec<Choice> {
    let mut reds: Vec<usize> = graph.neighbors(v).filter(|&w| colouring.is(w, Colour::Red)).collect();
    reds.sort_unstable();
    std::iter::once(Choice::Star)
        .chain(reds.into_iter().map(Choice::Path))
        .collect()
}

/// `N(v) \ {removed}` in rotation order, starting just after `removed`.
pub fn path_subgraph(graph: &PlanarGraph, v: usize, removed: usize) -> Result<Vec<usize>, TreePairError> {
    let not_a_path = TreePairError::NotAPath { vertex: v, removed };
    let cycle = graph.neighbor_cycle(v).map_err(|_| not_a_path.clone())?;
    let at = cycle.iter().position(|&w| w == removed).ok_or(not_a_path.clone())?;
    let k = cycle.len();
    let path: Vec<usize> = (1..k).map(|i| cycle[(at + i) % k]).collect();
    let inner_edges = (0..path.len())
        .flat_map(|i| (i + 1..path.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| graph.has_edge(path[i], path[j]))
        .count();
    if inner_edges + 1 != path.len() {
        return Err(not_a_path);
    }
    Ok(path)
}

/// `{center} ∪ (N(center) ∩ leaves)`, sorted.
pub fn star_with_leaves(graph: &PlanarGraph, colouring: &TriColouring, center: usize, leaves: Colour) -> Vec<usize> {
    let mut star: Vec<usize> = graph.neighbors(center).filter(|&w| colouring.is(w, leaves)).collect();
    star.push(center);
    star.sort_unstable();
    star
}

/// Star around a black or white vertex whose leaves are its neighbours of the
/// other non-red colour.
pub fn star_subgraph(graph: &PlanarGraph, colouring: &TriColouring, v: usize) -> Result<Vec<usize>, TreePairError> {
    let leaves = match colouring.colour(v) {
        Colour::Black => Colour::White,
        Colour::White => Colour::Black,
        Colour::Red => return Err(TreePairError::CenterIsRed { vertex: v }),
    };
    Ok(star_with_leaves(graph, colouring, v, leaves))
}

/// All breaches of the absorption rules; empty iff the pair is closed.
pub fn check_bw_closed(graph: &PlanarGraph, colouring: &TriColouring, pair: &ClosedPair) -> Vec<Violation> {
    let n = graph.vertex_count();
    let in_c = mask_of(n, pair.c.iter().copied());
    let in_d = mask_of(n, pair.d.iter().copied());
    let mut violations = Vec::new();
    for v in graph.vertices() {
        match colouring.colour(v) {
            Colour::Black if !in_c[v] => {
                let witness = graph.neighbors(v).find(|&w| {
                    in_c[w] && (colouring.is(w, Colour::White) || (colouring.is(w, Colour::Red) && !in_d[v]))
                });
                if let Some(witness) = witness {
                    violations.push(Violation {
                        vertex: v,
                        condition: Condition::BlackIntoC,
                        witness,
                    });
                }
            }
            Colour::White if !in_d[v] => {
                let witness = graph.neighbors(v).find(|&w| {
                    in_d[w] && (colouring.is(w, Colour::Black) || (colouring.is(w, Colour::Red) && !in_c[v]))
                });
                if let Some(witness) = witness {
                    violations.push(Violation {
                        vertex: v,
                        condition: Condition::WhiteIntoD,
                        witness,
                    });
                }
            }
            _ => {}
        }
    }
    violations
}

/// Disjoint, both sides induce forests, and closed.
pub fn validate_closed_pair(
    graph: &PlanarGraph,
    colouring: &TriColouring,
    pair: &ClosedPair,
) -> Result<(), TreePairError> {
    let n = graph.vertex_count();
    if let Some(v) = pair.c.iter().find(|v| pair.d.binary_search(v).is_ok()) {
        return Err(TreePairError::SeedConflict(format!("vertex {v} lies in both C and D")));
    }
    for (name, side) in [("C", &pair.c), ("D", &pair.d)] {
        if !graph.induces_forest(&mask_of(n, side.iter().copied())) {
            return Err(TreePairError::SeedConflict(format!("{name} contains a cycle")));
        }
    }
    let violations = check_bw_closed(graph, colouring, pair);
    if let Some(first) = violations.first() {
        return Err(TreePairError::SeedConflict(format!(
            "{} closure violations, first at vertex {} ({:?})",
            violations.len(),
            first.vertex,
            first.condition
        )));
    }
    Ok(())
}

/// Seeds a closed pair from one choice per vertex of `K`: white vertices feed
/// `C`, black vertices feed `D`.
pub fn seed_pair_thm13(
    graph: &PlanarGraph,
    colouring: &TriColouring,
    k: &[usize],
    choices: &ChoiceVector,
) -> Result<ClosedPair, TreePairError> {
    let mut expected = k.to_vec();
    expected.sort_unstable();
    let listed: Vec<usize> = choices.0.iter().map(|&(v, _)| v).collect();
    if listed != expected {
        let vertex = listed
            .iter()
            .chain(&expected)
            .copied()
            .find(|v| !listed.contains(v) || !expected.contains(v));
        return Err(TreePairError::IllegalChoice {
            vertex: vertex.unwrap_or(0),
            reason: "choice vector does not match K".into(),
        });
    }
    let (mut c, mut d) = (Vec::new(), Vec::new());
    for &(v, choice) in &choices.0 {
        let part = match choice {
            Choice::Star => star_subgraph(graph, colouring, v)?,
            Choice::Path(r) => {
                if !colouring.is(r, Colour::Red) || !graph.has_edge(v, r) {
                    return Err(TreePairError::IllegalChoice {
                        vertex: v,
                        reason: format!("{r} is not a red neighbour"),
                    });
                }
                path_subgraph(graph, v, r)?
            }
        };
        match colouring.colour(v) {
            Colour::White => c.extend(part),
            Colour::Black => d.extend(part),
            Colour::Red => return Err(TreePairError::CenterIsRed { vertex: v }),
        }
    }
    let total = c.len() + d.len();
    let pair = ClosedPair::new(c, d);
    if pair.c.len() + pair.d.len() != total {
        return Err(TreePairError::SeedConflict("seed structures overlap".into()));
    }
    validate_closed_pair(graph, colouring, &pair)?;
    Ok(pair)
}

/// `∏ (deg(v)/2 + 1)` over `K`.
pub fn thm13_choice_count(graph: &PlanarGraph, colouring: &TriColouring, k: &[usize]) -> u128 {
    k.iter()
        .map(|&v| legal_choices(graph, colouring, v).len() as u128)
        .product()
}

/// The `index`-th choice vector in lexicographic order (lowest vertex most
/// significant, choices in [`legal_choices`] order).
pub fn thm13_choice_vector(graph: &PlanarGraph, colouring: &TriColouring, k: &[usize], index: u128) -> ChoiceVector {
    let mut sorted = k.to_vec();
    sorted.sort_unstable();
    let options: Vec<Vec<Choice>> = sorted.iter().map(|&v| legal_choices(graph, colouring, v)).collect();
    let mut rest = index;
    let mut picks = vec![Choice::Star; sorted.len()];
    for i in (0..sorted.len()).rev() {
        let radix = options[i].len() as u128;
        picks[i] = options[i][(rest % radix) as usize];
        rest /= radix;
    }
    ChoiceVector(sorted.into_iter().zip(picks).collect())
}

/// Every choice vector over `K` with its extended cover, in lexicographic
/// order of choice vectors. Work is spread over the rayon pool; the output
/// order does not depend on the number of threads.
pub fn enumerate_thm13_covers(
    graph: &PlanarGraph,
    colouring: &TriColouring,
    k: &[usize],
) -> Result<Vec<(ChoiceVector, CoverPair)>, TreePairError> {
    let count = thm13_choice_count(graph, colouring, k);
    if count > MAX_CHOICE_VECTORS {
        return Err(TreePairError::TooManyChoices {
            count,
            cap: MAX_CHOICE_VECTORS,
        });
    }
    let covers: Vec<(ChoiceVector, CoverPair)> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let choices = thm13_choice_vector(graph, colouring, k, i as u128);
            let pair = seed_pair_thm13(graph, colouring, k, &choices)?;
            let cover = extend_cover(graph, colouring, &pair)?;
            Ok((choices, cover))
        })
        .collect::<Result<_, TreePairError>>()?;
    debug_assert_eq!(covers.len() as u128, count);
    Ok(covers)
}

/// The side that must end up holding `N(v) \ {n(v)}`: `X` for white `v` and
/// for red `v` with a white `n(v)`, `Y` otherwise.
pub fn prescribed_side(colouring: &TriColouring, v: usize, nv: usize) -> Side {
    match (colouring.colour(v), colouring.colour(nv)) {
        (Colour::White, _) | (Colour::Red, Colour::White) => Side::X,
        _ => Side::Y,
    }
}

/// Seeds a closed pair that forces `N(v) \ {n(v)}` into one side for every
/// `(v, n(v))` in `targets`. Targets must be pairwise at distance at least 5.
///
/// For white `v`: `C ⊇ N(v) \ {n(v)}` and `D ⊇ {n(v)} ∪ (N(n(v)) ∩ W)`.
/// For black `v`: the mirror image with `C` and `D` swapped.
/// For red `v` (degree 4), let `o` be the neighbour opposite `n(v)` on its
/// rotation. Then `N(v) \ {n(v)}` is the star of `o`: if `n(v)` is black, `D`
/// gets `{o} ∪ (N(o) ∩ W)`; if white, `C` gets `{o} ∪ (N(o) ∩ B)`. Red `v`
/// itself is then pushed to the side of `n(v)` during extension.
pub fn seed_pair_thm14(
    graph: &PlanarGraph,
    colouring: &TriColouring,
    targets: &[(usize, usize)],
) -> Result<ClosedPair, TreePairError> {
    for (i, &(a, na)) in targets.iter().enumerate() {
        if !graph.has_edge(a, na) {
            return Err(TreePairError::IllegalChoice {
                vertex: a,
                reason: format!("{na} is not a neighbour"),
            });
        }
        let dist = graph.distances_from(a);
        for &(b, _) in &targets[i + 1..] {
            if dist[b] < 5 {
                return Err(TreePairError::DistanceViolation {
                    a,
                    b,
                    distance: dist[b],
                });
            }
        }
    }

    let (mut c, mut d) = (Vec::new(), Vec::new());
    for &(v, nv) in targets {
        match colouring.colour(v) {
            Colour::White => {
                c.extend(path_subgraph(graph, v, nv)?);
                d.extend(star_with_leaves(graph, colouring, nv, Colour::White));
            }
            Colour::Black => {
                d.extend(path_subgraph(graph, v, nv)?);
                c.extend(star_with_leaves(graph, colouring, nv, Colour::Black));
            }
            Colour::Red => {
                let cycle = graph
                    .neighbor_cycle(v)
                    .map_err(|_| TreePairError::NotAPath { vertex: v, removed: nv })?;
                if cycle.len() != 4 {
                    return Err(TreePairError::IllegalChoice {
                        vertex: v,
                        reason: "red vertex of degree != 4".into(),
                    });
                }
                let at = cycle.iter().position(|&w| w == nv).unwrap();
                let opposite = cycle[(at + 2) % 4];
                if colouring.is(nv, Colour::Black) {
                    d.extend(star_with_leaves(graph, colouring, opposite, Colour::White));
                } else {
                    c.extend(star_with_leaves(graph, colouring, opposite, Colour::Black));
                }
            }
        }
    }
    let total = c.len() + d.len();
    let pair = ClosedPair::new(c, d);
    if pair.c.len() + pair.d.len() != total {
        return Err(TreePairError::SeedConflict("seed structures overlap".into()));
    }
    validate_closed_pair(graph, colouring, &pair)?;
    Ok(pair)
}
