//! Named group constructions and the `family:params` group syntax.
//!
//! Accepted specs: `cyclic:N`, `dihedral:N` (order 2N, N >= 3),
//! `symmetric:N`, `alternating:N`, `quaternion8`, `product:A,B,...` (direct
//! product of comma-separated specs without nested products), `file:PATH`,
//! and any name from the default catalog such as `C5`, `S3` or `C2xC4`.

use std::fmt;
use std::path::PathBuf;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{Perm, PermGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    DirectProduct(Vec<Construction>),
    FromFile(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub construction: Construction,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, construction: Construction) -> Self {
        CatalogEntry {
            name: name.into(),
            construction,
        }
    }

    pub fn build(&self, config: &Config) -> Result<PermGroup> {
        self.construction.build(config)
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Construction {
    /// Order predicted by the family formula; unknown for file input.
    pub fn expected_order(&self) -> Option<usize> {
        Some(match self {
            Construction::Cyclic(n) => *n,
            Construction::Dihedral(n) => 2 * n,
            Construction::Symmetric(n) => factorial(*n),
            Construction::Alternating(n) => factorial(*n).div_ceil(2),
            Construction::Quaternion8 => 8,
            Construction::DirectProduct(parts) => {
                parts.iter().map(Construction::expected_order).product::<Option<usize>>()?
            }
            Construction::FromFile(_) => return None,
        })
    }

    fn generators(&self) -> Result<(usize, Vec<Perm>)> {
        let cyc = |d: usize, pts: Vec<u32>| Perm::from_cycles(d, &[&pts]);
        Ok(match *self {
            Construction::Cyclic(0)
            | Construction::Symmetric(0)
            | Construction::Alternating(0) => {
                return Err(Error::MalformedInput("group parameter must be positive".into()))
            }
            Construction::Cyclic(1) | Construction::Symmetric(1) => (1, vec![]),
            Construction::Cyclic(n) => (n, vec![cyc(n, (0..n as u32).collect())?]),
            Construction::Dihedral(n) => {
                if n < 3 {
                    return Err(Error::MalformedInput(format!(
                        "dihedral:{n}: the dihedral family starts at 3"
                    )));
                }
                let rotation = cyc(n, (0..n as u32).collect())?;
                let reflection = Perm::new((0..n).map(|i| ((n - i) % n) as u32).collect())?;
                (n, vec![rotation, reflection])
            }
            Construction::Symmetric(n) => {
                let mut gens = vec![cyc(n, vec![0, 1])?];
                if n > 2 {
                    gens.push(cyc(n, (0..n as u32).collect())?);
                }
                (n, gens)
            }
            Construction::Alternating(n) if n < 3 => (n, vec![]),
            Construction::Alternating(n) => (
                n,
                (2..n as u32)
                    .map(|k| cyc(n, vec![0, 1, k]))
                    .collect::<Result<_>>()?,
            ),
            Construction::Quaternion8 => (8, quaternion_generators()),
            Construction::DirectProduct(ref parts) => {
                let built = parts
                    .iter()
                    .map(Construction::generators)
                    .collect::<Result<Vec<_>>>()?;
                let degree: usize = built.iter().map(|(d, _)| d).sum();
                let mut gens = Vec::new();
                let mut offset = 0;
                for (d, part) in &built {
                    for g in part {
                        let mut images: Vec<u32> = (0..degree as u32).collect();
                        for (i, &x) in g.images().iter().enumerate() {
                            images[offset + i] = x + offset as u32;
                        }
                        gens.push(Perm::new(images)?);
                    }
                    offset += d;
                }
                (degree, gens)
            }
            Construction::FromFile(ref path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))?;
                let file: crate::group::GroupFile = serde_json::from_str(&text)
                    .map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))?;
                let gens = file
                    .generators
                    .into_iter()
                    .map(|g| Perm::new(g).map_err(|e| Error::MalformedInput(e.to_string())))
                    .collect::<Result<_>>()?;
                (file.degree, gens)
            }
        })
    }

    pub fn build(&self, config: &Config) -> Result<PermGroup> {
        let (degree, gens) = self.generators()?;
        if degree == 0 {
            return Err(Error::MalformedInput("group of degree 0".into()));
        }
        PermGroup::new(degree, gens, &config.budgets)
    }
}

/// Left multiplications by `i` and `j` on `{1, i, j, k, -1, -i, -j, -k}`,
/// encoded as `4 * sign + unit`.
fn quaternion_generators() -> Vec<Perm> {
    // unit products: TABLE[a][b] = (sign, unit) of a*b for a, b in {1, i, j, k}
    const TABLE: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let left = |a: u32| {
        let images = (0..8u32)
            .map(|y| {
                let (s, u) = TABLE[a as usize][(y % 4) as usize];
                4 * ((s + y / 4) % 2) + u
            })
            .collect();
        Perm::new(images).expect("left multiplication is a bijection")
    };
    vec![left(1), left(2)]
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Cyclic(n) => write!(f, "cyclic:{n}"),
            Construction::Dihedral(n) => write!(f, "dihedral:{n}"),
            Construction::Symmetric(n) => write!(f, "symmetric:{n}"),
            Construction::Alternating(n) => write!(f, "alternating:{n}"),
            Construction::Quaternion8 => write!(f, "quaternion8"),
            Construction::DirectProduct(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "product:{}", parts.join(","))
            }
            Construction::FromFile(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// The default catalog: `C1..C12`, dihedral groups of degree 3 to 6, `S3`,
/// `S4`, `A4`, `Q8`, `C2xC2`, `C2xC4` and `C3xC3`.
pub fn build_catalog() -> Vec<CatalogEntry> {
    use Construction::*;
    let mut out: Vec<CatalogEntry> = (1..=12)
        .map(|n| CatalogEntry::new(format!("C{n}"), Cyclic(n)))
        .collect();
    out.extend((3..=6).map(|n| CatalogEntry::new(format!("D{n}"), Dihedral(n))));
    out.push(CatalogEntry::new("S3", Symmetric(3)));
    out.push(CatalogEntry::new("S4", Symmetric(4)));
    out.push(CatalogEntry::new("A4", Alternating(4)));
    out.push(CatalogEntry::new("Q8", Quaternion8));
    out.push(CatalogEntry::new("C2xC2", DirectProduct(vec![Cyclic(2), Cyclic(2)])));
    out.push(CatalogEntry::new("C2xC4", DirectProduct(vec![Cyclic(2), Cyclic(4)])));
    out.push(CatalogEntry::new("C3xC3", DirectProduct(vec![Cyclic(3), Cyclic(3)])));
    out
}

/// Groups outside the default catalog used by optional checks.
pub fn extended_entries() -> Vec<CatalogEntry> {
    vec![CatalogEntry::new("A5", Construction::Alternating(5))]
}

fn parse_param(family: &str, text: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| Error::MalformedInput(format!("{family}: expected a positive integer, got {text:?}")))
}

pub fn parse_construction(spec: &str) -> Result<Construction> {
    let spec = spec.trim();
    if let Some(entry) = build_catalog()
        .into_iter()
        .chain(extended_entries())
        .find(|e| e.name == spec)
    {
        return Ok(entry.construction);
    }
    let (family, rest) = spec.split_once(':').unwrap_or((spec, ""));
    Ok(match family {
        "cyclic" => Construction::Cyclic(parse_param(family, rest)?),
        "dihedral" => Construction::Dihedral(parse_param(family, rest)?),
        "symmetric" => Construction::Symmetric(parse_param(family, rest)?),
        "alternating" => Construction::Alternating(parse_param(family, rest)?),
        "quaternion8" => Construction::Quaternion8,
        "quaternion" if rest.trim() == "8" => Construction::Quaternion8,
        "file" if !rest.is_empty() => Construction::FromFile(PathBuf::from(rest)),
        "product" => {
            let parts = rest
                .split(',')
                .map(|p| match parse_construction(p)? {
                    Construction::DirectProduct(_) => Err(Error::MalformedInput(
                        "nested products are not supported".into(),
                    )),
                    c => Ok(c),
                })
                .collect::<Result<Vec<_>>>()?;
            if parts.len() < 2 {
                return Err(Error::MalformedInput("product needs at least two factors".into()));
            }
            Construction::DirectProduct(parts)
        }
        _ => return Err(Error::MalformedInput(format!("unknown group spec {spec:?}"))),
    })
}

pub fn parse_group_spec(spec: &str, config: &Config) -> Result<PermGroup> {
    parse_construction(spec)?.build(config)
}

/// Display name for a spec: the catalog name when it is one.
pub fn display_name(spec: &str) -> String {
    match parse_construction(spec) {
        Ok(c) => build_catalog()
            .into_iter()
            .chain(extended_entries())
            .find(|e| e.construction == c)
            .map_or_else(|| c.to_string(), |e| e.name),
        Err(_) => spec.to_string(),
    }
}
