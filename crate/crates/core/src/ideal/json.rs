//! JSON interchange: `{"ring":{"vars":k,"relations":[...]},"generators":[...]}`.

use serde::{Deserialize, Serialize};

use super::Ideal;
use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub vars: usize,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: RingJson,
    pub generators: Vec<String>,
}

impl RingJson {
    pub fn to_ring(&self) -> Result<Ring> {
        if !self.names.is_empty() && self.names.len() != self.vars {
            return Err(Error::Parse("names must list every variable".into()));
        }
        let names: Vec<&str> = self.names.iter().map(String::as_str).collect();
        let base = if names.is_empty() {
            Ring::polynomial(self.vars)
        } else {
            Ring::with_names(self.vars, &names)
        };
        let rels = self.relations.iter().map(|s| base.parse(s)).collect::<Result<Vec<_>>>()?;
        base.with_relations(rels)
    }

    pub fn from_ring(ring: &Ring) -> RingJson {
        let names = ring.names();
        let default: Vec<String> = (1..=ring.nvars()).map(|i| format!("x{i}")).collect();
        RingJson {
            vars: ring.nvars(),
            relations: ring.relations().iter().map(|p| ring.display(p)).collect(),
            names: if names == default { Vec::new() } else { names },
        }
    }
}

impl IdealJson {
    pub fn parse_str(s: &str) -> Result<IdealJson> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_ideal(&self) -> Result<Ideal> {
        let ring = self.ring.to_ring()?;
        self.to_ideal_in(&ring)
    }

    /// Builds the ideal inside an existing ring (the embedded ring must match).
    pub fn to_ideal_in(&self, ring: &Ring) -> Result<Ideal> {
        if self.ring.to_ring()? != *ring {
            return Err(Error::RingMismatch);
        }
        let gens = self.generators.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn from_ideal(i: &Ideal) -> Result<IdealJson> {
        let ring = i.ring();
        Ok(IdealJson {
            ring: RingJson::from_ring(ring),
            generators: i.display_generators()?.iter().map(|p| ring.display(p)).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let src = r#"{"ring":{"vars":1,"relations":[]},"generators":["x1^2"]}"#;
        let j = IdealJson::parse_str(src).unwrap();
        let i = j.to_ideal().unwrap();
        assert_eq!(i.to_text().unwrap(), "(x1^2)");
        assert_eq!(IdealJson::from_ideal(&i).unwrap(), j);
    }

    #[test]
    fn relations_and_names() {
        let src = r#"{"ring":{"vars":1,"relations":["t^2","2"],"names":["t"]},"generators":["t"]}"#;
        let i = IdealJson::parse_str(src).unwrap().to_ideal().unwrap();
        assert!(i.contains(&i.ring().parse("t + 2").unwrap()).unwrap());
        assert!(IdealJson::parse_str("{\"ring\":3}").is_err());
    }
}
