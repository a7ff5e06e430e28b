//! JSON form of character triples. Ideals use the ideal interchange format
//! and characters are lists of `(representative, value)` pairs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::triple::{CharacterTriple, ClassValues};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, RingJson};
use crate::matgroup::RMatrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassValueJson {
    pub rep: Vec<Vec<String>>,
    pub value: [f64; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TripleJson {
    pub ring: RingJson,
    pub d: usize,
    pub level: Vec<String>,
    pub kernel: Vec<String>,
    pub orbit: Vec<Vec<ClassValueJson>>,
}

impl TripleJson {
    pub fn parse_str(s: &str) -> Result<TripleJson> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_triple(&self) -> Result<CharacterTriple> {
        let ring = self.ring.to_ring()?;
        let ideal = |gens: &[String]| -> Result<Ideal> {
            Ideal::new(&ring, gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?)
        };
        let mut orbit = Vec::new();
        for ch in &self.orbit {
            let mut entries = Vec::new();
            for cv in ch {
                let rows = cv
                    .rep
                    .iter()
                    .map(|r| r.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                let m = RMatrix::from_rows(&ring, rows)?;
                if m.dim() != self.d {
                    return Err(Error::Parse("representative has the wrong size".into()));
                }
                entries.push((m, Complex64::new(cv.value[0], cv.value[1])));
            }
            orbit.push(ClassValues { entries });
        }
        Ok(CharacterTriple { level: ideal(&self.level)?, kernel: ideal(&self.kernel)?, ring, d: self.d, orbit })
    }

    pub fn from_triple(t: &CharacterTriple) -> Result<TripleJson> {
        let gens = |i: &Ideal| -> Result<Vec<String>> {
            Ok(i.display_generators()?.iter().map(|p| t.ring.display(p)).collect())
        };
        let orbit = t
            .orbit
            .iter()
            .map(|cv| {
                cv.entries
                    .iter()
                    .map(|(m, v)| ClassValueJson {
                        rep: m.rows().iter().map(|r| r.iter().map(|p| t.ring.display(p)).collect()).collect(),
                        value: [v.re, v.im],
                    })
                    .collect()
            })
            .collect();
        Ok(TripleJson {
            ring: RingJson::from_ring(&t.ring),
            d: t.d,
            level: gens(&t.level)?,
            kernel: gens(&t.kernel)?,
            orbit,
        })
    }
}
