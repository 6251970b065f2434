//! JSON records for clusters, sequences and configurations. Field names are
//! declared in alphabetical order so serialized objects come out sorted.

use serde::{Deserialize, Serialize};

use crate::config::{MConfiguration, TildeCVector};
use crate::error::{input_err, Result};
use crate::rep::RepEngine;
use crate::root::DimVector;
use crate::shift::ShiftedObject;
use crate::wide::ExcSequence;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectRecord {
    pub dim: Vec<i64>,
    pub level: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClusterRecord {
    pub m: u32,
    pub objects: Vec<ObjectRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MExcSequenceRecord {
    pub m: u32,
    pub terms: Vec<ObjectRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TildeCRecord {
    pub root: Vec<i64>,
    pub slope: u32,
}

/// An ordered cluster together with its dual configuration, given by
/// t̃-c-vectors paired entrywise with `objects`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigRecord {
    pub m: u32,
    pub objects: Vec<ObjectRecord>,
    pub tilde_c: Vec<TildeCRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExcSequenceRecord {
    pub rel_proj: Vec<bool>,
    pub terms: Vec<Vec<i64>>,
}

pub fn object_record(e: &RepEngine, o: ShiftedObject) -> ObjectRecord {
    ObjectRecord {
        dim: e.dim(o.module).entries().to_vec(),
        level: o.level,
    }
}

pub fn object_from_record(e: &RepEngine, m: u32, r: &ObjectRecord) -> Result<ShiftedObject> {
    let module = e.module_of_entries(&r.dim).ok_or_else(|| {
        input_err!(
            "{} is not a positive root of {}",
            DimVector(r.dim.clone()),
            e.quiver().diagram().type_tag()
        )
    })?;
    if r.level > m {
        return Err(input_err!("level {} exceeds m = {m}", r.level));
    }
    Ok(ShiftedObject::new(module, r.level))
}

fn objects_from(e: &RepEngine, m: u32, rs: &[ObjectRecord]) -> Result<Vec<ShiftedObject>> {
    rs.iter().map(|r| object_from_record(e, m, r)).collect()
}

pub fn cluster_record(e: &RepEngine, m: u32, objs: &[ShiftedObject]) -> ClusterRecord {
    ClusterRecord {
        m,
        objects: objs.iter().map(|&o| object_record(e, o)).collect(),
    }
}

impl ClusterRecord {
    pub fn decode(&self, e: &RepEngine) -> Result<Vec<ShiftedObject>> {
        objects_from(e, self.m, &self.objects)
    }
}

pub fn m_exc_record(e: &RepEngine, m: u32, terms: &[ShiftedObject]) -> MExcSequenceRecord {
    MExcSequenceRecord {
        m,
        terms: terms.iter().map(|&o| object_record(e, o)).collect(),
    }
}

impl MExcSequenceRecord {
    pub fn decode(&self, e: &RepEngine) -> Result<Vec<ShiftedObject>> {
        objects_from(e, self.m, &self.terms)
    }
}

pub fn config_record(e: &RepEngine, ordered: &[ShiftedObject], config: &MConfiguration) -> ConfigRecord {
    ConfigRecord {
        m: config.m,
        objects: ordered.iter().map(|&o| object_record(e, o)).collect(),
        tilde_c: config
            .tilde_c(e)
            .into_iter()
            .map(|t| TildeCRecord {
                root: t.root.0,
                slope: t.slope,
            })
            .collect(),
    }
}

impl ConfigRecord {
    pub fn decode(&self, e: &RepEngine) -> Result<(Vec<ShiftedObject>, MConfiguration)> {
        let ordered = objects_from(e, self.m, &self.objects)?;
        let tc: Vec<TildeCVector> = self
            .tilde_c
            .iter()
            .map(|t| TildeCVector {
                root: DimVector(t.root.clone()),
                slope: t.slope,
            })
            .collect();
        Ok((ordered, MConfiguration::from_tilde_c(e, self.m, &tc)?))
    }
}

pub fn exc_record(e: &RepEngine, s: &ExcSequence) -> ExcSequenceRecord {
    ExcSequenceRecord {
        rel_proj: s.rel_proj.clone(),
        terms: s.terms.iter().map(|&t| e.dim(t).entries().to_vec()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::objects_of;
    use crate::wide::WideSubcat;
    use proptest::prelude::*;

    #[test]
    fn field_order() {
        let e = RepEngine::parse("A2").unwrap();
        let p1 = ShiftedObject::new(e.module_of_entries(&[1, 1]).unwrap(), 0);
        let json = serde_json::to_string(&cluster_record(&e, 1, &[p1])).unwrap();
        assert_eq!(json, r#"{"m":1,"objects":[{"dim":[1,1],"level":0}]}"#);
    }

    #[test]
    fn rejects_bad_records() {
        let e = RepEngine::parse("A2").unwrap();
        let bad_root: ClusterRecord = serde_json::from_str(r#"{"m":1,"objects":[{"dim":[2,1],"level":0}]}"#).unwrap();
        assert!(bad_root.decode(&e).is_err());
        let bad_level: ClusterRecord = serde_json::from_str(r#"{"m":1,"objects":[{"dim":[1,1],"level":2}]}"#).unwrap();
        assert!(bad_level.decode(&e).is_err());
        assert!(serde_json::from_str::<ClusterRecord>(r#"{"m":1,"objects":[],"x":0}"#).is_err());
    }

    proptest! {
        #[test]
        fn cluster_records_round_trip(picks in proptest::collection::vec(0usize..14, 0..4), m in 0u32..3) {
            let e = RepEngine::parse("A3").unwrap();
            let objs = objects_of(&e, &WideSubcat::whole(&e), m);
            let chosen: Vec<ShiftedObject> = picks.iter().map(|&i| objs[i % objs.len()]).collect();
            let rec = cluster_record(&e, m, &chosen);
            let text = serde_json::to_string(&rec).unwrap();
            let back: ClusterRecord = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, &rec);
            prop_assert_eq!(back.decode(&e).unwrap(), chosen);
        }
    }
}
