//! Domain types, unit conventions, and validity checking for conductor pairs.
//!
//! All lengths are in meters, currents in amperes, forces in N/m. `d` and `h`
//! are **center-to-center** distances, so the validity constraints `d > 2a`
//! and `h > 2b` coincide with a strictly positive edge gap. The comparisons
//! are strict: touching conductors (`d = 2a` or `h = 2b`) are rejected.

use crate::{Error, Result};

/// Rectangular conductor cross-section: spans `2a` horizontally and `2b`
/// vertically. Both conductors of a pair share the same section.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossSection {
    a: f64,
    b: f64,
}

impl CrossSection {
    /// Build a cross-section from half-width `a` (m) and half-height `b` (m).
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain(format!(
                "cross-section dimensions must be finite, got a = {a}, b = {b}"
            )));
        }
        if a <= 0.0 || b <= 0.0 {
            return Err(Error::Domain(format!(
                "cross-section dimensions must be positive, got a = {a}, b = {b}"
            )));
        }
        Ok(Self { a, b })
    }

    /// Half-width (m); the conductor spans `2a` horizontally.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Half-height (m); the conductor spans `2b` vertically.
    pub fn b(&self) -> f64 {
        self.b
    }
}

/// Two conductors offset horizontally only (the second at `(+d, 0)`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdjacentLayout {
    section: CrossSection,
    d: f64,
}

impl AdjacentLayout {
    pub fn section(&self) -> CrossSection {
        self.section
    }

    /// Horizontal center-to-center distance (m).
    pub fn d(&self) -> f64 {
        self.d
    }
}

/// Two conductors offset both horizontally and vertically (the second at
/// `(+d, +h)`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonAdjacentLayout {
    section: CrossSection,
    d: f64,
    h: f64,
}

impl NonAdjacentLayout {
    pub fn section(&self) -> CrossSection {
        self.section
    }

    /// Horizontal center-to-center distance (m).
    pub fn d(&self) -> f64 {
        self.d
    }

    /// Vertical center-to-center distance (m).
    pub fn h(&self) -> f64 {
        self.h
    }
}

/// Either conductor-pair placement, for code generic over the two layouts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Layout {
    Adjacent(AdjacentLayout),
    NonAdjacent(NonAdjacentLayout),
}

impl Layout {
    pub fn section(&self) -> CrossSection {
        match self {
            Layout::Adjacent(l) => l.section(),
            Layout::NonAdjacent(l) => l.section(),
        }
    }

    /// Horizontal center-to-center distance (m).
    pub fn d(&self) -> f64 {
        match self {
            Layout::Adjacent(l) => l.d(),
            Layout::NonAdjacent(l) => l.d(),
        }
    }

    /// Vertical center-to-center distance (m); zero for adjacent layouts.
    pub fn h(&self) -> f64 {
        match self {
            Layout::Adjacent(_) => 0.0,
            Layout::NonAdjacent(l) => l.h(),
        }
    }
}

impl From<AdjacentLayout> for Layout {
    fn from(l: AdjacentLayout) -> Self {
        Layout::Adjacent(l)
    }
}

impl From<NonAdjacentLayout> for Layout {
    fn from(l: NonAdjacentLayout) -> Self {
        Layout::NonAdjacent(l)
    }
}

/// Currents in the two conductors (A). Any finite values, including zero and
/// negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentPair {
    pub i1: f64,
    pub i2: f64,
}

impl CurrentPair {
    pub fn new(i1: f64, i2: f64) -> Result<Self> {
        if !i1.is_finite() || !i2.is_finite() {
            return Err(Error::Domain(format!(
                "currents must be finite, got i1 = {i1}, i2 = {i2}"
            )));
        }
        Ok(Self { i1, i2 })
    }
}

/// Force per unit length (N/m) on conductor 1 exerted by conductor 2.
///
/// With both currents of the same sign the force is attractive and points
/// from conductor 1 toward conductor 2 at `(+d, +h)`, so `fx >= 0` and (for
/// `h > 0`) `fy >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcePerLength {
    pub fx: f64,
    pub fy: f64,
}

/// Validate an adjacent placement: requires `a > 0`, `b > 0`, and strictly
/// `d > 2a`.
pub fn validate_adjacent(section: CrossSection, d: f64) -> Result<AdjacentLayout> {
    if !d.is_finite() {
        return Err(Error::Domain(format!("distance d must be finite, got {d}")));
    }
    if d <= 2.0 * section.a() {
        return Err(Error::Domain(format!(
            "adjacent layout requires d > 2a (strictly): d = {d}, 2a = {}",
            2.0 * section.a()
        )));
    }
    Ok(AdjacentLayout { section, d })
}

/// Validate a non-adjacent placement: requires strictly `d > 2a` and
/// strictly `h > 2b`.
pub fn validate_non_adjacent(section: CrossSection, d: f64, h: f64) -> Result<NonAdjacentLayout> {
    if !d.is_finite() || !h.is_finite() {
        return Err(Error::Domain(format!(
            "distances must be finite, got d = {d}, h = {h}"
        )));
    }
    let mut problems = Vec::new();
    if d <= 2.0 * section.a() {
        problems.push(format!("d > 2a violated: d = {d}, 2a = {}", 2.0 * section.a()));
    }
    if h <= 2.0 * section.b() {
        problems.push(format!("h > 2b violated: h = {h}, 2b = {}", 2.0 * section.b()));
    }
    if !problems.is_empty() {
        return Err(Error::Domain(format!(
            "non-adjacent layout invalid: {}",
            problems.join("; ")
        )));
    }
    Ok(NonAdjacentLayout { section, d, h })
}
