//! Benzenoid chains: the turn-sequence encoding and the explicit graph builder.
//!
//! A chain with `h` hexagons is written `h[:turns]`, where `turns` has one
//! letter per inner hexagon (`h - 2` of them) from the alphabet `L`, `S`, `R`.
//! `S` continues straight (linear annelation), `L` and `R` kink the chain
//! counter-clockwise and clockwise respectively.
//!
//! Hexagons are embedded on the hexagonal lattice. Hexagon centres use axial
//! coordinates in the basis `a = (1, 0)`, `b = (1/2, sqrt(3)/2)`; corner `k` of
//! a hexagon sits between neighbour directions `k` and `k + 1` and is stored as
//! `3 * centre + dir[k] + dir[k + 1]`, which keeps every vertex on integer
//! coordinates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::recurrence::AnnelationCase;

/// Largest `h` accepted by [`enumerate_chains`] unless a cap is passed explicitly.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("malformed hexagon count {0:?}")]
    MalformedCount(String),
    #[error("a chain needs at least one hexagon")]
    NoHexagons,
    #[error("chain with {hexagons} hexagons needs {expected} turns, got {found}")]
    WrongTurnCount { hexagons: usize, expected: usize, found: usize },
    #[error("illegal turn {ch:?} at position {position} (expected L, S or R)")]
    IllegalTurn { ch: char, position: usize },
    #[error("exhaustive enumeration of h = {h} exceeds the cap of {cap}")]
    EnumerationCap { h: usize, cap: usize },
    #[error("prefix of {requested} hexagons requested from a chain of {hexagons}")]
    PrefixTooLong { requested: usize, hexagons: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Turn {
    L,
    S,
    R,
}

impl Turn {
    pub const ALL: [Turn; 3] = [Turn::L, Turn::S, Turn::R];

    pub fn case(self) -> AnnelationCase {
        match self {
            Turn::L => AnnelationCase::Case1,
            Turn::S => AnnelationCase::Case2,
            Turn::R => AnnelationCase::Case3,
        }
    }

    pub fn mirrored(self) -> Turn {
        match self {
            Turn::L => Turn::R,
            Turn::S => Turn::S,
            Turn::R => Turn::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Turn::L => 'L',
            Turn::S => 'S',
            Turn::R => 'R',
        }
    }

    fn from_char(ch: char, position: usize) -> Result<Self, ChainError> {
        match ch {
            'L' => Ok(Turn::L),
            'S' => Ok(Turn::S),
            'R' => Ok(Turn::R),
            _ => Err(ChainError::IllegalTurn { ch, position }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainSpec {
    hexagons: usize,
    turns: Vec<Turn>,
}

fn expected_turns(hexagons: usize) -> usize {
    hexagons.saturating_sub(2)
}

impl ChainSpec {
    pub fn new(hexagons: usize, turns: Vec<Turn>) -> Result<Self, ChainError> {
        if hexagons == 0 {
            return Err(ChainError::NoHexagons);
        }
        let expected = expected_turns(hexagons);
        if turns.len() != expected {
            return Err(ChainError::WrongTurnCount { hexagons, expected, found: turns.len() });
        }
        Ok(Self { hexagons, turns })
    }

    /// The linear chain (polyacene) with `hexagons` hexagons.
    pub fn polyacene(hexagons: usize) -> Result<Self, ChainError> {
        Self::new(hexagons, vec![Turn::S; expected_turns(hexagons)])
    }

    pub fn hexagons(&self) -> usize {
        self.hexagons
    }

    pub fn turns(&self) -> &[Turn] {
        &self.turns
    }

    /// True when every inner hexagon is linearly annelated.
    pub fn is_linear(&self) -> bool {
        self.turns.iter().all(|&t| t == Turn::S)
    }

    /// The annelation case applied at each of the `h` steps. The first and last
    /// steps have no turn letter and use Case 2.
    pub fn annelation_cases(&self) -> Vec<AnnelationCase> {
        let mut cases = Vec::with_capacity(self.hexagons);
        cases.push(AnnelationCase::Case2);
        cases.extend(self.turns.iter().map(|t| t.case()));
        if self.hexagons >= 2 {
            cases.push(AnnelationCase::Case2);
        }
        cases
    }

    /// L and R exchanged.
    pub fn mirrored(&self) -> Self {
        Self {
            hexagons: self.hexagons,
            turns: self.turns.iter().map(|t| t.mirrored()).collect(),
        }
    }

    /// Turn string read from the other end.
    pub fn reversed(&self) -> Self {
        Self {
            hexagons: self.hexagons,
            turns: self.turns.iter().rev().copied().collect(),
        }
    }

    pub fn turn_string(&self) -> String {
        self.turns.iter().map(|t| t.as_char()).collect()
    }
}

impl FromStr for ChainSpec {
    type Err = ChainError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        let (count, turns) = match text.split_once(':') {
            Some((c, t)) => (c, t),
            None => (text, ""),
        };
        let hexagons: usize = count
            .trim()
            .parse()
            .map_err(|_| ChainError::MalformedCount(count.to_string()))?;
        let turns = turns
            .chars()
            .enumerate()
            .map(|(i, ch)| Turn::from_char(ch, i))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(hexagons, turns)
    }
}

/// `h:turns`, with an empty turn string kept after the colon (`"2:"`).
impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.hexagons, self.turn_string())
    }
}

pub fn parse_spec(text: &str) -> Result<ChainSpec, ChainError> {
    text.parse()
}

/// Every chain with `h` hexagons, turn strings in lexicographic order over the
/// alphabet order `L < S < R`.
pub fn enumerate_chains(h: usize) -> Result<Vec<ChainSpec>, ChainError> {
    enumerate_chains_capped(h, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_chains_capped(h: usize, cap: usize) -> Result<Vec<ChainSpec>, ChainError> {
    if h == 0 {
        return Err(ChainError::NoHexagons);
    }
    if h > cap {
        return Err(ChainError::EnumerationCap { h, cap });
    }
    let mut strings: Vec<Vec<Turn>> = vec![Vec::new()];
    for _ in 0..expected_turns(h) {
        strings = strings
            .into_iter()
            .flat_map(|s| {
                Turn::ALL.into_iter().map(move |t| {
                    let mut next = s.clone();
                    next.push(t);
                    next
                })
            })
            .collect();
    }
    Ok(strings.into_iter().map(|turns| ChainSpec { hexagons: h, turns }).collect())
}

/// Axial lattice coordinates.
pub type LatticePoint = (i64, i64);

const DIRECTIONS: [LatticePoint; 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

fn direction(k: i64) -> LatticePoint {
    DIRECTIONS[k.rem_euclid(6) as usize]
}

fn corner(centre: LatticePoint, k: i64) -> LatticePoint {
    let (a, b) = (direction(k), direction(k + 1));
    (3 * centre.0 + a.0 + b.0, 3 * centre.1 + a.1 + b.1)
}

fn turn_offset(case: AnnelationCase) -> i64 {
    match case {
        AnnelationCase::Case1 => 1,
        AnnelationCase::Case2 => 0,
        AnnelationCase::Case3 => -1,
    }
}

/// A new vertex whose lattice position coincides with an older vertex of a
/// non-adjacent hexagon. The graph stays valid; only the drawing overlaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overlap {
    pub hexagon: usize,
    pub vertex: usize,
    pub existing: usize,
}

#[derive(Debug, Clone)]
pub struct BenzenoidGraph {
    graph: Graph,
    coordinates: Vec<LatticePoint>,
    centres: Vec<LatticePoint>,
    /// Cycle order `u, p, q, r, s, v` for each hexagon.
    hexagons: Vec<[usize; 6]>,
    /// `attachments[k]` is the edge `u_k v_k` of the chain with `k` hexagons;
    /// `attachments[0]` is the seed edge.
    attachments: Vec<(usize, usize)>,
    overlaps: Vec<Overlap>,
}

impl BenzenoidGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn hexagon_count(&self) -> usize {
        self.hexagons.len()
    }

    pub fn coordinates(&self) -> &[LatticePoint] {
        &self.coordinates
    }

    pub fn centres(&self) -> &[LatticePoint] {
        &self.centres
    }

    pub fn hexagons(&self) -> &[[usize; 6]] {
        &self.hexagons
    }

    /// The edge `u_h v_h` available for a further annelation.
    pub fn attachment_edge(&self) -> (usize, usize) {
        self.attachments[self.hexagons.len()]
    }

    /// The attachment edge `u_k v_k` after `k` hexagons.
    pub fn attachment(&self, k: usize) -> Option<(usize, usize)> {
        self.attachments.get(k).copied()
    }

    pub fn overlaps(&self) -> &[Overlap] {
        &self.overlaps
    }

    pub fn has_self_overlap(&self) -> bool {
        !self.overlaps.is_empty()
    }

    /// The subchain made of the first `k` hexagons. `k = 0` gives the seed
    /// edge `K2`.
    pub fn prefix(&self, k: usize) -> Result<Self, ChainError> {
        let h = self.hexagons.len();
        if k > h {
            return Err(ChainError::PrefixTooLong { requested: k, hexagons: h });
        }
        let n = 4 * k + 2;
        let graph = Graph::from_edges(n, self.graph.edges()[..5 * k + 1].iter().copied())
            .expect("prefix of a valid chain is valid");
        Ok(Self {
            graph,
            coordinates: self.coordinates[..n].to_vec(),
            centres: self.centres[..k].to_vec(),
            hexagons: self.hexagons[..k].to_vec(),
            attachments: self.attachments[..=k].to_vec(),
            overlaps: self.overlaps.iter().filter(|o| o.vertex < n).copied().collect(),
        })
    }
}

/// Builds the chain graph.
///
/// Vertex numbering: hexagon 1 takes ids 0..5 in cycle order starting from the
/// seed edge (`0 = u_0`, `1 = v_0`); each later hexagon appends its four new
/// vertices `p, q, r, s` in that order. Edge ids follow the same pattern: the
/// seed edge first, then five new edges per hexagon.
pub fn build_graph(spec: &ChainSpec) -> BenzenoidGraph {
    let cases = spec.annelation_cases();
    let mut coordinates: Vec<LatticePoint> = Vec::with_capacity(4 * cases.len() + 2);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(5 * cases.len() + 1);
    let mut centres = vec![(0, 0)];
    let mut hexagons = Vec::with_capacity(cases.len());
    let mut attachments = vec![(0, 1)];
    let mut overlaps = Vec::new();
    let mut position: HashMap<LatticePoint, usize> = HashMap::new();

    // Hexagon 1, entered along heading 0: the seed edge u0 v0 is corners 2 and
    // 3, then the cycle continues through s, r, q, p (corners 4, 5, 0, 1).
    let mut heading: i64 = 0;
    let mut centre: LatticePoint = (0, 0);
    for (id, k) in [2, 3, 4, 5, 0, 1].into_iter().enumerate() {
        let c = corner(centre, k);
        position.insert(c, id);
        coordinates.push(c);
    }
    edges.extend([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
    let [u, v, s, r, q, p] = [0, 1, 2, 3, 4, 5];
    hexagons.push([u, p, q, r, s, v]);
    let mut attach = next_attachment(cases[0], p, q, r, s);
    attachments.push(attach);
    heading += turn_offset(cases[0]);

    for (index, &case) in cases.iter().enumerate().skip(1) {
        let hexagon = index + 1;
        let d = direction(heading);
        centre = (centre.0 + d.0, centre.1 + d.1);
        let (u, v) = attach;
        debug_assert_eq!(coordinates[u], corner(centre, heading + 2));
        debug_assert_eq!(coordinates[v], corner(centre, heading + 3));

        let mut fresh = [0usize; 4];
        for (slot, k) in fresh.iter_mut().zip([1, 0, -1, -2]) {
            let c = corner(centre, heading + k);
            let id = coordinates.len();
            match position.get(&c) {
                Some(&existing) => overlaps.push(Overlap { hexagon, vertex: id, existing }),
                None => {
                    position.insert(c, id);
                }
            }
            coordinates.push(c);
            *slot = id;
        }
        let [p, q, r, s] = fresh;
        edges.extend([(u, p), (p, q), (q, r), (r, s), (s, v)]);
        hexagons.push([u, p, q, r, s, v]);
        centres.push(centre);
        attach = next_attachment(case, p, q, r, s);
        attachments.push(attach);
        heading += turn_offset(case);
    }

    let graph = Graph::from_edges(coordinates.len(), edges).expect("chain construction yields a simple graph");
    BenzenoidGraph { graph, coordinates, centres, hexagons, attachments, overlaps }
}

fn next_attachment(case: AnnelationCase, p: usize, q: usize, r: usize, s: usize) -> (usize, usize) {
    match case {
        AnnelationCase::Case1 => (p, q),
        AnnelationCase::Case2 => (q, r),
        AnnelationCase::Case3 => (r, s),
    }
}
