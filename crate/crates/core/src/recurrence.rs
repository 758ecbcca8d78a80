//! Annelation recurrences for the edge-Hosoya polynomial.
//!
//! Fusing a hexagon onto a graph `G0` along an edge `e = uv` whose end-vertices
//! have degree 2 adds four vertices `p, q, r, s` (cycle `u p q r s v`) and five
//! edges. The new polynomial only depends on `H_e(G0)`, the rooted polynomials
//! at `u`, `v` and `e`, and fixed correction terms for the new hexagon.
//!
//! For a chain the rooted polynomials at the next attachment edge are again
//! expressible through the previous ones, which gives the state quadruple
//! `(alpha, beta, gamma, delta)` folded over the chain's annelation cases.

use crate::chain::ChainSpec;
use crate::poly::{PolyError, Polynomial};

/// Which edge of the new hexagon becomes the next attachment edge.
///
/// Case 1 takes `pq` (next to `u`), Case 2 the opposite edge `qr`, Case 3 `rs`
/// (next to `v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnnelationCase {
    Case1,
    Case2,
    Case3,
}

impl AnnelationCase {
    pub const ALL: [AnnelationCase; 3] = [AnnelationCase::Case1, AnnelationCase::Case2, AnnelationCase::Case3];
}

/// A new vertex or edge of the annelated hexagon. The edges are named by their
/// endpoints (`pq`, `qr`, `rs`) rather than by single letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootedSite {
    P,
    Q,
    R,
    S,
    EdgePQ,
    EdgeQR,
    EdgeRS,
}

/// Pairs inside the new hexagon not accounted for by the shifted `G0` terms:
/// `5 + 4x + 3x^2 + 3x^3`.
const HEXAGON_PAIRS: [u64; 4] = [5, 4, 3, 3];
/// New vertex adjacent to the old attachment edge (p, s): `2 + x + 2x^2`.
const NEAR_VERTEX: [u64; 3] = [2, 1, 2];
/// New vertex at distance two from the old attachment edge (q, r): `2 + 2x + x^2`.
const FAR_VERTEX: [u64; 3] = [2, 2, 1];
/// Any new non-fused edge (pq, qr, rs): `1 + 2x + x^2 + x^3`.
const NEW_EDGE: [u64; 4] = [1, 2, 1, 1];

fn constant(c: &[u64]) -> Polynomial {
    Polynomial::new(c.to_vec())
}

/// `H_e(G) = H_e(G0) + (x + x^2)(H_e(G0,u) + H_e(G0,v)) + x^2 H_e(G0,e) + 5 + 4x + 3x^2 + 3x^3`.
pub fn annelate_edge_hosoya(
    whole: &Polynomial,
    at_u: &Polynomial,
    at_v: &Polynomial,
    at_e: &Polynomial,
) -> Result<Polynomial, PolyError> {
    let ends = at_u.add(at_v)?;
    whole
        .add(&ends.shift(1))?
        .add(&ends.shift(2))?
        .add(&at_e.shift(2))?
        .add(&constant(&HEXAGON_PAIRS))
}

/// Rooted polynomial of the annelated graph at a new vertex or edge.
pub fn annelate_rooted(
    site: RootedSite,
    at_u: &Polynomial,
    at_v: &Polynomial,
    at_e: &Polynomial,
) -> Result<Polynomial, PolyError> {
    let (base, shift, tail) = match site {
        RootedSite::P => (at_u, 1, &NEAR_VERTEX[..]),
        RootedSite::Q => (at_u, 2, &FAR_VERTEX[..]),
        RootedSite::R => (at_v, 2, &FAR_VERTEX[..]),
        RootedSite::S => (at_v, 1, &NEAR_VERTEX[..]),
        RootedSite::EdgePQ => (at_u, 2, &NEW_EDGE[..]),
        RootedSite::EdgeQR => (at_e, 2, &NEW_EDGE[..]),
        RootedSite::EdgeRS => (at_v, 2, &NEW_EDGE[..]),
    };
    base.shift(shift).add(&constant(tail))
}

/// `alpha = H_e(B_h)`, `beta = H_e(B_h, u_h)`, `gamma = H_e(B_h, v_h)`,
/// `delta = H_e(B_h, u_h v_h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainState {
    pub alpha: Polynomial,
    pub beta: Polynomial,
    pub gamma: Polynomial,
    pub delta: Polynomial,
    pub hexagons: usize,
}

impl Default for ChainState {
    fn default() -> Self {
        Self::initial()
    }
}

impl ChainState {
    /// The seed edge `K2` with no hexagons: every polynomial is `1`.
    pub fn initial() -> Self {
        Self {
            alpha: Polynomial::one(),
            beta: Polynomial::one(),
            gamma: Polynomial::one(),
            delta: Polynomial::one(),
            hexagons: 0,
        }
    }

    pub fn step(&self, case: AnnelationCase) -> Result<Self, PolyError> {
        let alpha = annelate_edge_hosoya(&self.alpha, &self.beta, &self.gamma, &self.delta)?;
        let (u, v, e) = match case {
            AnnelationCase::Case1 => (RootedSite::P, RootedSite::Q, RootedSite::EdgePQ),
            AnnelationCase::Case2 => (RootedSite::Q, RootedSite::R, RootedSite::EdgeQR),
            AnnelationCase::Case3 => (RootedSite::R, RootedSite::S, RootedSite::EdgeRS),
        };
        let rooted = |site| annelate_rooted(site, &self.beta, &self.gamma, &self.delta);
        Ok(Self {
            alpha,
            beta: rooted(u)?,
            gamma: rooted(v)?,
            delta: rooted(e)?,
            hexagons: self.hexagons + 1,
        })
    }
}

/// Folds [`ChainState::step`] over `cases`, returning the final state.
pub fn fold_cases(cases: impl IntoIterator<Item = AnnelationCase>) -> Result<ChainState, PolyError> {
    cases
        .into_iter()
        .try_fold(ChainState::initial(), |state, case| state.step(case))
}

/// Every intermediate state, starting with the seed state.
pub fn chain_states(spec: &ChainSpec) -> Result<Vec<ChainState>, PolyError> {
    let mut states = vec![ChainState::initial()];
    for case in spec.annelation_cases() {
        let next = states.last().expect("non-empty").step(case)?;
        states.push(next);
    }
    Ok(states)
}

/// Edge-Hosoya polynomial of a chain in `O(h^2)` coefficient operations.
pub fn chain_edge_hosoya(spec: &ChainSpec) -> Result<Polynomial, PolyError> {
    Ok(fold_cases(spec.annelation_cases())?.alpha)
}
