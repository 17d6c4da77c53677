use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// How an internal hexagon continues the chain, relative to the direction in
/// which it was entered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attachment {
    /// Kink turning left (counter-clockwise).
    Left,
    /// Kink turning right (clockwise).
    Right,
    /// Linear continuation.
    Straight,
}

impl Attachment {
    pub fn letter(self) -> char {
        match self {
            Attachment::Left => 'L',
            Attachment::Right => 'R',
            Attachment::Straight => 'S',
        }
    }

    fn turn(self) -> i32 {
        match self {
            Attachment::Left => 1,
            Attachment::Right => -1,
            Attachment::Straight => 0,
        }
    }
}

/// Largest chain accepted by [`build_chain`].
pub const MAX_CHAIN_HEXAGONS: usize = 24;

/// A catacondensed chain of hexagons described by the attachment of each
/// internal hexagon.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HexChain {
    hexagons: usize,
    code: Vec<Attachment>,
}

/// Where the linear triple sits in a lucasene.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LucaseneVariant {
    /// The first internal hexagon is the straight one.
    StraightFirst,
    /// The last internal hexagon is the straight one.
    StraightLast,
}

impl LucaseneVariant {
    pub const ALL: [LucaseneVariant; 2] = [LucaseneVariant::StraightFirst, LucaseneVariant::StraightLast];
}

impl HexChain {
    /// A chain of `hexagons` hexagons; `code` has one letter per internal
    /// hexagon, so its length is `hexagons - 2` (empty for one or two).
    pub fn new(hexagons: usize, code: Vec<Attachment>) -> Result<Self> {
        if hexagons == 0 {
            return Err(Error::MalformedChain("a chain needs at least one hexagon".into()));
        }
        if code.len() != hexagons.saturating_sub(2) {
            return Err(Error::MalformedChain(format!(
                "{hexagons} hexagons need a code of length {}, got {}",
                hexagons.saturating_sub(2),
                code.len()
            )));
        }
        Ok(HexChain { hexagons, code })
    }

    /// Parses a code over `L`, `R`, `S`; the chain has `len + 2` hexagons.
    pub fn parse(code: &str) -> Result<Self> {
        let code = code
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'L' => Ok(Attachment::Left),
                'R' => Ok(Attachment::Right),
                'S' => Ok(Attachment::Straight),
                other => Err(Error::MalformedChain(format!("unexpected letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(code.len() + 2, code)
    }

    /// Zigzag kinks `L R L R ...`.
    fn zigzag(len: usize) -> Vec<Attachment> {
        (0..len)
            .map(|i| if i % 2 == 0 { Attachment::Left } else { Attachment::Right })
            .collect()
    }

    /// The zigzag fibonaccene with `n` hexagons.
    pub fn fibonaccene(n: usize) -> Result<Self> {
        Self::new(n, Self::zigzag(n.saturating_sub(2)))
    }

    /// A lucasene with `n >= 2` hexagons: one straight internal hexagon at an
    /// end of the code, zigzag kinks elsewhere. At `n = 2` there is no
    /// internal hexagon and the chain is naphthalene.
    pub fn lucasene(n: usize, variant: LucaseneVariant) -> Result<Self> {
        if n < 2 {
            return Err(Error::MalformedChain("a lucasene needs at least two hexagons".into()));
        }
        if n == 2 {
            return Self::new(2, Vec::new());
        }
        let mut code = Self::zigzag(n - 3);
        match variant {
            LucaseneVariant::StraightFirst => code.insert(0, Attachment::Straight),
            LucaseneVariant::StraightLast => code.push(Attachment::Straight),
        }
        Self::new(n, code)
    }

    pub fn hexagons(&self) -> usize {
        self.hexagons
    }

    pub fn code(&self) -> &[Attachment] {
        &self.code
    }

    /// No internal hexagon is straight.
    pub fn is_fibonaccene(&self) -> bool {
        !self.code.contains(&Attachment::Straight)
    }

    /// Exactly one straight internal hexagon, at one end of the code. The
    /// two-hexagon chain counts as the degenerate case.
    pub fn is_lucasene(&self) -> bool {
        if self.hexagons == 2 {
            return true;
        }
        let straight: Vec<usize> = (0..self.code.len()).filter(|&i| self.code[i] == Attachment::Straight).collect();
        straight.len() == 1 && (straight[0] == 0 || straight[0] + 1 == self.code.len())
    }
}

impl fmt::Display for HexChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.code.is_empty() {
            return write!(f, "<{} hexagon{}>", self.hexagons, if self.hexagons == 1 { "" } else { "s" });
        }
        self.code.iter().try_for_each(|a| write!(f, "{}", a.letter()))
    }
}

impl FromStr for HexChain {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

/// Lattice point of the hexagonal grid. With unit circumradius the real
/// position is `(x · √3/2, y / 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub fn real(self) -> (f64, f64) {
        (f64::from(self.x) * 3f64.sqrt() / 2.0, f64::from(self.y) / 2.0)
    }
}

/// Hexagonal chain drawn in the plane: coloured vertices, edges, and the
/// hexagonal cells listed clockwise.
#[derive(Debug, Clone)]
pub struct PlaneBipartiteGraph {
    points: Vec<Point>,
    colors: Vec<Color>,
    graph: Graph,
    cells: Vec<Vec<usize>>,
}

// Neighbour directions in axial coordinates, counter-clockwise from east.
const DIRECTIONS: [(i32, i32); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
// Corner offsets in lattice units, counter-clockwise from 30°.
const CORNERS: [(i32, i32); 6] = [(1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1)];

/// Twice the signed area of a polygon; positive when counter-clockwise.
pub fn signed_area(points: &[(f64, f64)]) -> f64 {
    (0..points.len())
        .map(|i| {
            let (a, b) = (points[i], points[(i + 1) % points.len()]);
            a.0 * b.1 - b.0 * a.1
        })
        .sum()
}

/// Lays the chain out on the hexagonal grid and builds its plane graph.
pub fn build_chain(chain: &HexChain) -> Result<PlaneBipartiteGraph> {
    if chain.hexagons > MAX_CHAIN_HEXAGONS {
        return Err(Error::SizeLimit {
            what: "hexagonal chain",
            actual: chain.hexagons,
            limit: MAX_CHAIN_HEXAGONS,
        });
    }
    let mut centers = vec![(0i32, 0i32)];
    let mut dir = 0i32;
    for i in 1..chain.hexagons {
        if i >= 2 {
            dir = (dir + chain.code[i - 2].turn()).rem_euclid(6);
        }
        let (a, b) = centers[i - 1];
        let (da, db) = DIRECTIONS[dir as usize];
        let next = (a + da, b + db);
        // only the previous hexagon may touch the new one
        for &(c, d) in &centers[..i - 1] {
            let (x, y) = (next.0 - c, next.1 - d);
            if (x, y) == (0, 0) || DIRECTIONS.contains(&(x, y)) {
                return Err(Error::MalformedChain(format!(
                    "{chain} is not a plane chain: hexagon {} touches an earlier one",
                    i + 1
                )));
            }
        }
        centers.push(next);
    }
    let mut index: BTreeMap<Point, usize> = BTreeMap::new();
    let mut points = Vec::new();
    let mut cells = Vec::new();
    let mut edges = Vec::new();
    for &(a, b) in &centers {
        let (cx, cy) = (2 * a + b, 3 * b);
        let cell: Vec<usize> = CORNERS
            .iter()
            .map(|&(dx, dy)| {
                let p = Point { x: cx + dx, y: cy + dy };
                *index.entry(p).or_insert_with(|| {
                    points.push(p);
                    points.len() - 1
                })
            })
            .collect();
        for i in 0..6 {
            let (u, v) = (cell[i], cell[(i + 1) % 6]);
            edges.push((u.min(v), u.max(v)));
        }
        cells.push(cell);
    }
    edges.sort_unstable();
    edges.dedup();
    for cell in &mut cells {
        let real: Vec<(f64, f64)> = cell.iter().map(|&v| points[v].real()).collect();
        if signed_area(&real) > 0.0 {
            cell.reverse();
        }
    }
    let colors = points
        .iter()
        .map(|p| if p.y.rem_euclid(3) == 1 { Color::Black } else { Color::White })
        .collect();
    let graph = Graph::new(points.len(), edges)?;
    Ok(PlaneBipartiteGraph {
        points,
        colors,
        graph,
        cells,
    })
}

impl PlaneBipartiteGraph {
    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    /// Hexagonal cells, each listed clockwise.
    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// Every edge joins the two colours.
    pub fn is_properly_colored(&self) -> bool {
        self.graph.edges().iter().all(|&(a, b)| self.colors[a] != self.colors[b])
    }

    /// Every cell is a clockwise 6-cycle of the graph.
    pub fn cells_are_hexagons(&self) -> bool {
        self.cells.iter().all(|c| {
            let real: Vec<(f64, f64)> = c.iter().map(|&v| self.points[v].real()).collect();
            c.len() == 6 && (0..6).all(|i| self.graph.has_edge(c[i], c[(i + 1) % 6])) && signed_area(&real) < 0.0
        })
    }

    pub fn to_json(&self) -> String {
        let vertices: Vec<_> = self
            .points
            .iter()
            .zip(&self.colors)
            .map(|(p, c)| {
                json!({
                    "x": p.x,
                    "y": p.y,
                    "color": if *c == Color::Black { "black" } else { "white" },
                })
            })
            .collect();
        let edges: Vec<[usize; 2]> = self.graph.edges().iter().map(|&(a, b)| [a, b]).collect();
        json!({ "vertices": vertices, "edges": edges, "cells": self.cells }).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes() {
        let c = HexChain::parse("SLRLR").unwrap();
        assert_eq!(c.hexagons(), 7);
        assert!(c.is_lucasene() && !c.is_fibonaccene());
        assert!(!HexChain::parse("LSR").unwrap().is_lucasene());
        assert!(HexChain::parse("LRX").is_err());
        assert!(HexChain::new(1, vec![Attachment::Left]).is_err());
        assert_eq!(HexChain::lucasene(5, LucaseneVariant::StraightLast).unwrap().to_string(), "LRS");
    }

    #[test]
    fn sizes_and_coloring() {
        for h in 1..=8 {
            let g = build_chain(&HexChain::fibonaccene(h).unwrap()).unwrap();
            assert_eq!(g.vertex_count(), 4 * h + 2);
            assert_eq!(g.graph().edge_count(), 5 * h + 1);
            assert!(g.is_properly_colored());
            assert!(g.cells_are_hexagons());
        }
        let straight = build_chain(&HexChain::parse("SS").unwrap()).unwrap();
        assert_eq!(straight.vertex_count(), 18);
        assert!(build_chain(&HexChain::fibonaccene(25).unwrap()).is_err());
        assert!(build_chain(&HexChain::parse("LLL").unwrap()).is_ok());
        assert!(build_chain(&HexChain::parse("LLLL").unwrap()).is_err());
    }
}
