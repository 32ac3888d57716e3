use crate::error::{Error, Result};

/// Resource caps shared by every engine operation. All caps are at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Buchberger pair queue refuses S-pairs whose lcm exceeds this total degree.
    pub groebner_degree: u32,
    /// Colon-iteration cap for coefficient ideals; hitting it yields an
    /// uncertified (not erroneous) result.
    pub colon_iterations: u32,
    /// Redraw attempts for generic minimal reductions.
    pub reduction_retries: u32,
    /// Largest reduction number searched for.
    pub r_cap: u32,
    /// Padding ladder depth T.
    pub ladder_depth: u32,
    /// Largest lattice-point count enumerated for an integral closure.
    pub box_budget: u64,
    /// Largest variable count accepted from a script ring declaration.
    pub var_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            groebner_degree: 30,
            colon_iterations: 12,
            reduction_retries: 8,
            r_cap: 6,
            ladder_depth: 5,
            box_budget: 200_000,
            var_cap: 6,
        }
    }
}

impl Caps {
    pub fn validate(&self) -> Result<()> {
        if self.groebner_degree < 1
            || self.colon_iterations < 1
            || self.reduction_retries < 1
            || self.r_cap < 1
            || self.ladder_depth < 1
            || self.box_budget < 1
            || self.var_cap < 1
        {
            return Err(Error::Config("all caps must be at least 1".into()));
        }
        Ok(())
    }
}
