//! Closed-form DIN bounds and family values, in exact integer arithmetic.

use crate::error::{Error, Result};

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

fn require_even(n: u64) -> Result<()> {
    if n.is_multiple_of(2) {
        Ok(())
    } else {
        Err(Error::Parity { n: n as usize })
    }
}

/// `floor(5n^2/8 - 3n/4 + 1)`; exact for even `n`, floored for odd `n`.
pub fn general_upper_bound(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(domain(format!("general bound needs n >= 2, got {n}")));
    }
    Ok((5 * n * n + 8 - 6 * n) / 8)
}

/// `5n^2/8 - n/4` for even `n`, the palette bound of the pairing construction.
pub fn lemma_upper_bound(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(domain(format!("lemma bound needs n >= 2, got {n}")));
    }
    require_even(n)?;
    Ok((5 * n * n - 2 * n) / 8)
}

pub fn directed_path_din(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(domain(format!("directed path needs n >= 2, got {n}")));
    }
    Ok(if n.is_multiple_of(2) { (n * n + 2 * n) / 4 } else { (n * n + 2 * n + 1) / 4 })
}

pub fn source_arc_path_din(n: u64) -> Result<u64> {
    if n < 4 {
        return Err(domain(format!("source arc-path formula needs n >= 4, got {n}")));
    }
    Ok(n * n / 2)
}

/// Number of extra arcs in the augmented family, `floor((n-2)^2/16) - 1`.
pub fn augmented_extra_arcs(n: u64) -> Result<u64> {
    if n < 8 {
        return Err(domain(format!("augmented family needs n >= 8, got {n}")));
    }
    require_even(n)?;
    Ok((n - 2) * (n - 2) / 16 - 1)
}

/// `n^2/2 + floor(n^2/16 - n/4 + 1/4) - 1`.
pub fn augmented_din(n: u64) -> Result<u64> {
    let extra = augmented_extra_arcs(n)?;
    Ok(n * n / 2 + extra)
}

/// Upper bound for the p-intersection number: `din + p - 1`.
pub fn p_intersection_upper_bound(din: u64, p: u64) -> Result<u64> {
    if din < 1 || p < 1 {
        return Err(domain(format!("p-intersection bound needs din >= 1 and p >= 1, got ({din}, {p})")));
    }
    Ok(din + p - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    General,
    Lemma,
    DirectedPath,
    SourceArcPath,
    Augmented,
}

impl Formula {
    pub const ALL: [Formula; 5] =
        [Formula::General, Formula::Lemma, Formula::DirectedPath, Formula::SourceArcPath, Formula::Augmented];

    pub fn name(self) -> &'static str {
        match self {
            Formula::General => "general",
            Formula::Lemma => "lemma",
            Formula::DirectedPath => "directed-path",
            Formula::SourceArcPath => "source-arc-path",
            Formula::Augmented => "augmented",
        }
    }

    pub fn from_name(name: &str) -> Option<Formula> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn eval(self, n: u64) -> Result<u64> {
        match self {
            Formula::General => general_upper_bound(n),
            Formula::Lemma => lemma_upper_bound(n),
            Formula::DirectedPath => directed_path_din(n),
            Formula::SourceArcPath => source_arc_path_din(n),
            Formula::Augmented => augmented_din(n),
        }
    }
}

/// Every formula defined at `n`, in [`Formula::ALL`] order.
pub fn applicable(n: u64) -> Vec<(Formula, u64)> {
    Formula::ALL.into_iter().filter_map(|f| f.eval(n).ok().map(|v| (f, v))).collect()
}
