/// Default cap on semigroup order (bounds n² tables and n³ checks).
pub const DEFAULT_MAX_ORDER: usize = 4096;
/// Default largest order enumerated by the census.
pub const DEFAULT_CENSUS_ORDER: usize = 4;
/// Default largest order for which subsemigroups are enumerated.
pub const DEFAULT_SUBSEMIGROUP_CAP: usize = 16;
/// Environment variable overriding [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "SEMIKIT_MAX_ORDER";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub census_max_order: usize,
    pub subsemigroup_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            census_max_order: DEFAULT_CENSUS_ORDER,
            subsemigroup_cap: DEFAULT_SUBSEMIGROUP_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with `max_order` taken from `SEMIKIT_MAX_ORDER` when it
    /// parses as a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
        {
            limits.max_order = v;
        }
        limits
    }
}
