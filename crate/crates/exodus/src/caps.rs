use crate::error::{Error, Result};

/// Resource caps for materializing operations.
///
/// Every operation that builds a category or enumerates assignments checks
/// these before allocating. Exceeding a cap is an explicit error
/// ([`Error::CapExceeded`]), never a silent truncation; enumerators that can
/// usefully return partial output carry a separate truncation flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of objects in any materialized category.
    pub max_objects: usize,
    /// Maximum number of morphisms in any materialized category.
    pub max_morphisms: usize,
    /// Maximum number of candidates visited by a single enumeration search.
    pub max_search: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_objects: 10_000,
            max_morphisms: 100_000,
            max_search: 2_000_000,
        }
    }
}

impl Caps {
    /// Reads overrides from the `EXODUS_CAPS` environment variable, a
    /// comma-separated list like `objects=5000,morphisms=20000,search=100000`.
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        let Ok(raw) = std::env::var("EXODUS_CAPS") else {
            return Ok(caps);
        };
        for part in raw.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let Some((key, value)) = part.split_once('=') else {
                return Err(Error::input(format!("EXODUS_CAPS: missing '=' in `{part}`")));
            };
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("EXODUS_CAPS: bad number in `{part}`")))?;
            match key.trim() {
                "objects" => caps.max_objects = value,
                "morphisms" => caps.max_morphisms = value,
                "search" => caps.max_search = value,
                other => {
                    return Err(Error::input(format!("EXODUS_CAPS: unknown key `{other}`")));
                }
            }
        }
        Ok(caps)
    }

    pub fn check_objects(&self, what: &str, needed: usize) -> Result<()> {
        if needed > self.max_objects {
            return Err(Error::CapExceeded {
                what: format!("{what} (objects)"),
                needed,
                cap: self.max_objects,
            });
        }
        Ok(())
    }

    pub fn check_morphisms(&self, what: &str, needed: usize) -> Result<()> {
        if needed > self.max_morphisms {
            return Err(Error::CapExceeded {
                what: format!("{what} (morphisms)"),
                needed,
                cap: self.max_morphisms,
            });
        }
        Ok(())
    }

    /// Bumps a search counter, failing once the budget is exhausted.
    pub fn tick(&self, what: &str, counter: &mut usize) -> Result<()> {
        *counter += 1;
        if *counter > self.max_search {
            return Err(Error::CapExceeded {
                what: format!("{what} (search budget)"),
                needed: *counter,
                cap: self.max_search,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_morphism_cap_is_100k() {
        assert_eq!(Caps::default().max_morphisms, 100_000);
    }

    #[test]
    fn tick_fails_past_budget() {
        let caps = Caps { max_search: 3, ..Caps::default() };
        let mut counter = 0;
        for _ in 0..3 {
            caps.tick("test", &mut counter).unwrap();
        }
        assert!(caps.tick("test", &mut counter).is_err());
    }
}
