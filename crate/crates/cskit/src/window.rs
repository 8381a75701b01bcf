//! Windows: the finite view ports through which infinite objects are probed.
//!
//! A window is a half-open ordinal interval plus optional explicit extra
//! points and a probe cap. Every verdict computed against a window carries
//! the window along, so a report never claims more than what was checked.

use serde::{Deserialize, Serialize};

use crate::club::Club;
use crate::ord::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: Ordinal,
    pub hi: Ordinal,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extras: Vec<Ordinal>,
    #[serde(default = "default_cap")]
    pub cap: usize,
}

fn default_cap() -> usize {
    128
}

impl Window {
    pub fn new(lo: Ordinal, hi: Ordinal) -> Window {
        Window {
            lo,
            hi,
            extras: Vec::new(),
            cap: default_cap(),
        }
    }

    pub fn upto(hi: Ordinal) -> Window {
        Window::new(Ordinal::zero(), hi)
    }

    pub fn with_extras(mut self, extras: Vec<Ordinal>) -> Window {
        self.extras = extras;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Window {
        self.cap = cap;
        self
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        (*x >= self.lo && *x < self.hi) || self.extras.contains(x)
    }

    /// Limit ordinals inside the window (up to the cap), plus any extra
    /// points that are limits. Returns the probe points and a truncation
    /// flag.
    pub fn limit_points(&self) -> (Vec<Ordinal>, bool) {
        let limits = Club::arithmetic(
            Ordinal::omega(),
            Ordinal::omega(),
            self.hi.count_limits_below(),
        );
        let (mut pts, truncated) = limits.enumerate_in(&self.lo, &self.hi, self.cap);
        for e in &self.extras {
            if e.is_limit() && !pts.contains(e) {
                pts.push(e.clone());
            }
        }
        pts.sort();
        (pts, truncated)
    }

    /// Members of a club inside the window (up to the cap).
    pub fn members_of(&self, c: &Club) -> (Vec<Ordinal>, bool) {
        let (mut pts, truncated) = c.enumerate_in(&self.lo, &self.hi, self.cap);
        for e in &self.extras {
            if c.contains(e) && !pts.contains(e) {
                pts.push(e.clone());
            }
        }
        pts.sort();
        (pts, truncated)
    }

    /// A deterministic lattice of probe vertices in the window: for each
    /// limit point, the point itself and a few successors above it, plus an
    /// initial successor run from `lo`.
    pub fn vertex_lattice(&self, run: usize) -> Vec<Ordinal> {
        let mut out = Vec::new();
        let push_run = |start: &Ordinal, out: &mut Vec<Ordinal>| {
            let mut x = start.clone();
            for _ in 0..run {
                if x >= self.hi {
                    break;
                }
                if x >= self.lo {
                    out.push(x.clone());
                }
                x = x.succ();
            }
        };
        push_run(&self.lo, &mut out);
        let (limits, _) = self.limit_points();
        for l in limits {
            push_run(&l, &mut out);
        }
        for e in &self.extras {
            if !out.contains(e) {
                out.push(e.clone());
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

impl std::fmt::Display for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)?;
        if !self.extras.is_empty() {
            write!(f, "+{{")?;
            for (i, e) in self.extras.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Parses "lo..hi" window syntax with ordinal literals.
impl std::str::FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("window must look like `lo..hi`, got {s:?}"))?;
        let lo: Ordinal = lo.parse().map_err(|e| format!("bad window start: {e}"))?;
        let hi: Ordinal = hi.parse().map_err(|e| format!("bad window end: {e}"))?;
        if lo >= hi {
            return Err(format!("empty window {lo}..{hi}"));
        }
        Ok(Window::new(lo, hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn limit_enumeration() {
        let w = Window::upto(o("w*3+1"));
        let (pts, trunc) = w.limit_points();
        assert!(!trunc);
        assert_eq!(pts, vec![o("w"), o("w*2"), o("w*3")]);
        let w2 = Window::upto(o("w^(2)")).with_cap(4);
        let (pts2, trunc2) = w2.limit_points();
        assert!(trunc2);
        assert_eq!(pts2.len(), 4);
    }

    #[test]
    fn parse_and_display() {
        let w: Window = "0..w*2".parse().unwrap();
        assert_eq!(w.lo, o("0"));
        assert_eq!(w.hi, o("w*2"));
        assert!("w..w".parse::<Window>().is_err());
        assert_eq!(w.to_string(), "0..w*2");
    }

    #[test]
    fn lattice_is_sorted_and_bounded() {
        let w = Window::upto(o("w*2")).with_cap(8);
        let v = w.vertex_lattice(3);
        assert!(v.windows(2).all(|p| p[0] < p[1]));
        assert!(v.iter().all(|x| *x < o("w*2")));
        assert!(v.contains(&o("w")));
        assert!(v.contains(&o("w+2")));
    }
}
