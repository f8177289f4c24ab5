use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Textual description of a supported ring.
///
/// Grammar:
///
/// ```text
/// gf:p^n              GF(p^n), smallest monic irreducible modulus
/// gf:p^n/c0,c1,...,1  GF(p^n) with an explicit modulus, constant term first
/// zmod:p^k            Z/p^k, k >= 2
/// fqu:p^n,k           GF(p^n)[u]/(u^k), k >= 2
/// ```
///
/// `gf:p` and `fqu:p,k` are accepted as shorthands for `n = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Gf {
        p: u64,
        n: u32,
        modulus: Option<Vec<u64>>,
    },
    Zmod {
        p: u64,
        k: u32,
    },
    Fqu {
        p: u64,
        n: u32,
        k: u32,
    },
}

fn bad(s: &str, why: &str) -> Error {
    Error::InvalidRingSpec(format!("{s:?}: {why}"))
}

fn parse_num<T: FromStr>(s: &str, full: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| bad(full, &format!("expected an integer, found {s:?}")))
}

fn parse_power(s: &str, full: &str) -> Result<(u64, u32)> {
    match s.split_once('^') {
        Some((base, exp)) => Ok((parse_num(base, full)?, parse_num(exp, full)?)),
        None => Ok((parse_num(s, full)?, 1)),
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, rest) = s
            .split_once(':')
            .ok_or_else(|| bad(s, "missing family prefix (gf:, zmod:, fqu:)"))?;
        match family.trim() {
            "gf" => {
                let (pow, modulus) = match rest.split_once('/') {
                    Some((pow, m)) => {
                        let coeffs = m
                            .split(',')
                            .map(|c| parse_num::<u64>(c, s))
                            .collect::<Result<Vec<_>>>()?;
                        (pow, Some(coeffs))
                    }
                    None => (rest, None),
                };
                let (p, n) = parse_power(pow, s)?;
                Ok(RingSpec::Gf { p, n, modulus })
            }
            "zmod" => {
                let (p, k) = parse_power(rest, s)?;
                Ok(RingSpec::Zmod { p, k })
            }
            "fqu" => {
                let (pow, k) = rest
                    .split_once(',')
                    .ok_or_else(|| bad(s, "expected fqu:p^n,k"))?;
                let (p, n) = parse_power(pow, s)?;
                Ok(RingSpec::Fqu {
                    p,
                    n,
                    k: parse_num(k, s)?,
                })
            }
            other => Err(bad(s, &format!("unknown ring family {other:?}"))),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Gf { p, n, modulus } => {
                if *n == 1 {
                    write!(f, "gf:{p}")?;
                } else {
                    write!(f, "gf:{p}^{n}")?;
                }
                if let Some(m) = modulus {
                    let parts: Vec<String> = m.iter().map(u64::to_string).collect();
                    write!(f, "/{}", parts.join(","))?;
                }
                Ok(())
            }
            RingSpec::Zmod { p, k } => write!(f, "zmod:{p}^{k}"),
            RingSpec::Fqu { p, n, k } => write!(f, "fqu:{p}^{n},{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar() {
        assert_eq!(
            "gf:5".parse::<RingSpec>().unwrap(),
            RingSpec::Gf {
                p: 5,
                n: 1,
                modulus: None
            }
        );
        assert_eq!(
            "gf:2^2/1,1,1".parse::<RingSpec>().unwrap(),
            RingSpec::Gf {
                p: 2,
                n: 2,
                modulus: Some(vec![1, 1, 1])
            }
        );
        assert_eq!(
            "zmod:3^2".parse::<RingSpec>().unwrap(),
            RingSpec::Zmod { p: 3, k: 2 }
        );
        assert_eq!(
            "fqu:2^2,2".parse::<RingSpec>().unwrap(),
            RingSpec::Fqu { p: 2, n: 2, k: 2 }
        );
        assert_eq!(
            "fqu:3,2".parse::<RingSpec>().unwrap(),
            RingSpec::Fqu { p: 3, n: 1, k: 2 }
        );
    }

    #[test]
    fn rejects_garbage() {
        for s in [
            "",
            "gf",
            "gf:x",
            "zmod:3^",
            "fqu:3",
            "ring:3",
            "gf:3^2/1,a,1",
        ] {
            assert!(
                matches!(s.parse::<RingSpec>(), Err(Error::InvalidRingSpec(_))),
                "{s}"
            );
        }
    }

    #[test]
    fn display_reparses() {
        for s in ["gf:7", "gf:3^2", "gf:2^3/1,0,1,1", "zmod:5^2", "fqu:2^2,3"] {
            let spec: RingSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<RingSpec>().unwrap(), spec);
        }
    }
}
