//! Permutations of {0, ..., d-1} with cycle-notation parsing and printing.

use std::fmt;

use crate::arith::lcm_u64;
use crate::error::{Error, Result};

/// A permutation stored in image form: `map[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            map: (0..degree).collect(),
        }
    }

    /// Build from an image vector, validating bijectivity.
    pub fn from_images(map: Vec<usize>) -> Result<Self> {
        let d = map.len();
        let mut seen = vec![false; d];
        for &x in &map {
            if x >= d || seen[x] {
                return Err(Error::Parse("not a bijection".into()));
            }
            seen[x] = true;
        }
        Ok(Perm { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Composition `self` after `other`: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            map[x] = i;
        }
        Perm { map }
    }

    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    pub fn pow(&self, e: i64) -> Perm {
        if e < 0 {
            return self.inverse().pow(-e);
        }
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.map.len()];
        let mut order = 1u64;
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.map[x];
                len += 1;
            }
            order = lcm_u64(order, len);
        }
        order
    }

    /// Cycle decomposition, fixed points omitted; cycles start at their
    /// smallest point and are sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.map.len()];
        let mut out = Vec::new();
        for start in 0..self.map.len() {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.map[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Parse cycle notation like "(0 1 2)(3 4)"; "()" is the identity.
    /// Cycles are applied left to right.
    pub fn parse_cycles(degree: usize, input: &str) -> Result<Perm> {
        let mut acc = Perm::identity(degree);
        let mut chars = input.char_indices().peekable();
        let mut saw_cycle = false;
        while let Some(&(pos, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(Error::Parse(format!(
                    "expected '(' at position {pos} in cycle string {input:?}"
                )));
            }
            chars.next();
            let mut points: Vec<usize> = Vec::new();
            let mut cur = String::new();
            loop {
                match chars.next() {
                    None => return Err(Error::Parse(format!("unclosed cycle in {input:?}"))),
                    Some((_, ')')) => {
                        if !cur.is_empty() {
                            points.push(parse_point(&cur, degree, input)?);
                        }
                        break;
                    }
                    Some((_, c)) if c.is_ascii_digit() => cur.push(c),
                    Some((_, c)) if c.is_whitespace() || c == ',' => {
                        if !cur.is_empty() {
                            points.push(parse_point(&cur, degree, input)?);
                            cur.clear();
                        }
                    }
                    Some((pos, c)) => {
                        return Err(Error::Parse(format!(
                            "unexpected character {c:?} at position {pos} in {input:?}"
                        )))
                    }
                }
            }
            saw_cycle = true;
            if points.len() >= 2 {
                let mut sorted = points.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != points.len() {
                    return Err(Error::Parse(format!("repeated point in cycle {input:?}")));
                }
                let mut map: Vec<usize> = (0..degree).collect();
                for w in 0..points.len() {
                    map[points[w]] = points[(w + 1) % points.len()];
                }
                let cycle_perm = Perm { map };
                acc = cycle_perm.compose(&acc);
            }
        }
        if !saw_cycle {
            return Err(Error::Parse(format!("empty cycle string {input:?}")));
        }
        Ok(acc)
    }
}

fn parse_point(s: &str, degree: usize, input: &str) -> Result<usize> {
    let n: usize = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad point {s:?} in {input:?}")))?;
    if n >= degree {
        return Err(Error::Parse(format!(
            "point {n} out of range for degree {degree} in {input:?}"
        )));
    }
    Ok(n)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let p = Perm::parse_cycles(5, "(0 1 2)(3 4)").unwrap();
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(3), 4);
        let id = Perm::parse_cycles(3, "()").unwrap();
        assert!(id.is_identity());
        assert_eq!(id.to_string(), "()");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Perm::parse_cycles(3, "(0 5)").is_err());
        assert!(Perm::parse_cycles(3, "(0 1").is_err());
        assert!(Perm::parse_cycles(3, "(0 0)").is_err());
        assert!(Perm::parse_cycles(3, "").is_err());
        assert!(Perm::parse_cycles(3, "0 1").is_err());
    }

    #[test]
    fn composition_order_and_inverse() {
        let a = Perm::parse_cycles(3, "(0 1)").unwrap();
        let b = Perm::parse_cycles(3, "(1 2)").unwrap();
        // (a then b) should send 0 -> 1 -> 2.
        let ab = b.compose(&a);
        assert_eq!(ab.apply(0), 2);
        // Left-to-right convention in a single string matches.
        let joint = Perm::parse_cycles(3, "(0 1)(1 2)").unwrap();
        assert_eq!(joint, ab);
        assert!(ab.compose(&ab.inverse()).is_identity());
        assert_eq!(ab.order(), 3);
        assert_eq!(a.order(), 2);
        assert_eq!(ab.pow(-1), ab.inverse());
    }
}
