//! Hexagonal chains, their perfect matchings and resonance digraphs.
//!
//! A chain is laid out on the hexagonal grid, vertices are 2-coloured, and
//! each cell is stored clockwise so that proper alternating cycles can be
//! read off directly.

mod chain;
mod matching;

pub use chain::{
    build_chain, signed_area, Attachment, Color, HexChain, LucaseneVariant, PlaneBipartiteGraph, Point,
    MAX_CHAIN_HEXAGONS,
};
pub use matching::{
    matchings_to_json, perfect_matchings, verify_fibonaccene, verify_ztgfl, z_digraph, FibonacceneReport, Orientation,
    PerfectMatching, ZtgflReport,
};
