//! JSON and DOT serialization for decompositions, quivers and imported
//! groups.

use std::sync::Arc;

use ndarray::Array2;
use num_complex::Complex64;
use serde_json::{json, Value};

use wreathlr_core::{Decomposition, MultiPartition, Partition, Quiver};

use crate::oracle::{GroupData, MatrixRep, OracleError};

fn bad(msg: impl Into<String>) -> OracleError {
    OracleError::Import(msg.into())
}

fn partition_to_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

fn multipartition_to_json(mp: &MultiPartition) -> Value {
    Value::Array(mp.components().iter().map(partition_to_json).collect())
}

fn partition_from_json(v: &Value) -> Result<Partition, OracleError> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad("partition must be an array"))?;
    let parts = arr
        .iter()
        .map(|x| {
            x.as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| bad("partition part must be a small non-negative integer"))
        })
        .collect::<Result<Vec<u32>, _>>()?;
    Partition::new(parts).map_err(|e| bad(e.to_string()))
}

fn multipartition_from_json(v: &Value) -> Result<MultiPartition, OracleError> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad("multipartition must be an array of partitions"))?;
    let components = arr
        .iter()
        .map(partition_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MultiPartition::new(components))
}

/// `{"terms":[{"mult":m,"mp":[[..],..]}, ..]}` in canonical order.
pub fn decomposition_to_json(d: &Decomposition) -> Value {
    let terms: Vec<Value> = d
        .iter()
        .map(|(mp, mult)| json!({"mult": mult, "mp": multipartition_to_json(mp)}))
        .collect();
    json!({ "terms": terms })
}

pub fn decomposition_from_json(v: &Value) -> Result<Decomposition, OracleError> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("expected object with a `terms` array"))?;
    let mut out = Decomposition::new();
    for term in terms {
        let mult = term
            .get("mult")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("term `mult` must be a non-negative integer"))?;
        let mp =
            multipartition_from_json(term.get("mp").ok_or_else(|| bad("term is missing `mp`"))?)?;
        out.add(mp, mult);
    }
    Ok(out)
}

/// `{"n":n,"l":l,"vertices":[mp..],"arrows":[[src,dst]..]}` with vertices in
/// the quiver's own (weight, then canonical) order.
pub fn quiver_to_json(q: &Quiver) -> Value {
    json!({
        "n": q.n(),
        "l": q.l(),
        "vertices": q.vertices().iter().map(multipartition_to_json).collect::<Vec<_>>(),
        "arrows": q.arrows().iter().map(|&(s, d)| json!([s, d])).collect::<Vec<_>>(),
    })
}

/// The fields of a serialized quiver, for round-tripping.
#[derive(Debug, PartialEq, Eq)]
pub struct QuiverData {
    pub n: u32,
    pub l: usize,
    pub vertices: Vec<MultiPartition>,
    pub arrows: Vec<(usize, usize)>,
}

impl QuiverData {
    pub fn of(q: &Quiver) -> Self {
        QuiverData {
            n: q.n(),
            l: q.l(),
            vertices: q.vertices().to_vec(),
            arrows: q.arrows().to_vec(),
        }
    }
}

pub fn quiver_from_json(v: &Value) -> Result<QuiverData, OracleError> {
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| bad("quiver `n` must be a small non-negative integer"))?;
    let l = v
        .get("l")
        .and_then(Value::as_u64)
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| bad("quiver `l` must be a positive integer"))?;
    let vertices = v
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("quiver `vertices` must be an array"))?
        .iter()
        .map(multipartition_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    let arrows = v
        .get("arrows")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("quiver `arrows` must be an array"))?
        .iter()
        .map(|a| {
            let pair = a.as_array().filter(|p| p.len() == 2);
            let src = pair.and_then(|p| p[0].as_u64());
            let dst = pair.and_then(|p| p[1].as_u64());
            match (src, dst) {
                (Some(s), Some(d))
                    if (s as usize) < vertices.len() && (d as usize) < vertices.len() =>
                {
                    Ok((s as usize, d as usize))
                }
                _ => Err(bad("arrow must be a [src,dst] pair of vertex indices")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QuiverData {
        n,
        l,
        vertices,
        arrows,
    })
}

/// DOT export: one node per vertex labeled with the multipartition text
/// form; the connected-component key (all components after the first) goes
/// into a `comp` node attribute.
pub fn quiver_to_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for (i, mp) in q.vertices().iter().enumerate() {
        let comp = Quiver::component_key(mp)
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!("  v{i} [label=\"{mp}\", comp=\"({comp})\"];\n"));
    }
    for &(src, dst) in q.arrows() {
        out.push_str(&format!("  v{src} -> v{dst};\n"));
    }
    out.push_str("}\n");
    out
}

/// Load a group with its irreducibles from
/// `{"order":m,"mul":[[..]..],"irreps":[{"degree":d,"matrices":[[[re,im]..]..]..}]}`.
///
/// `mul` is the full multiplication table as rows; `matrices` holds one
/// matrix per group element, each as rows of `[re,im]` pairs. The table is
/// validated as a group; homomorphism, completeness and trivial-first checks
/// are left to the oracle constructor.
pub fn group_from_json(v: &Value) -> Result<(Arc<GroupData>, Vec<MatrixRep>), OracleError> {
    let order = v
        .get("order")
        .and_then(Value::as_u64)
        .and_then(|x| usize::try_from(x).ok())
        .filter(|&x| x > 0)
        .ok_or_else(|| bad("group `order` must be a positive integer"))?;
    let rows = v
        .get("mul")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("group `mul` must be an array of rows"))?;
    if rows.len() != order {
        return Err(bad("group `mul` must have one row per element"));
    }
    let mut mul = Vec::with_capacity(order * order);
    for row in rows {
        let row = row
            .as_array()
            .filter(|r| r.len() == order)
            .ok_or_else(|| bad("each `mul` row must have one entry per element"))?;
        for entry in row {
            let x = entry
                .as_u64()
                .and_then(|x| usize::try_from(x).ok())
                .filter(|&x| x < order)
                .ok_or_else(|| bad("`mul` entries must be element indices"))?;
            mul.push(x);
        }
    }
    let group = GroupData::from_table(order, mul)?;

    let irreps_json = v
        .get("irreps")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("group `irreps` must be an array"))?;
    let mut irreps = Vec::with_capacity(irreps_json.len());
    for irrep in irreps_json {
        let degree = irrep
            .get("degree")
            .and_then(Value::as_u64)
            .and_then(|x| usize::try_from(x).ok())
            .filter(|&x| x > 0)
            .ok_or_else(|| bad("irrep `degree` must be a positive integer"))?;
        let matrices = irrep
            .get("matrices")
            .and_then(Value::as_array)
            .filter(|m| m.len() == order)
            .ok_or_else(|| bad("irrep `matrices` must hold one matrix per element"))?;
        let mats = matrices
            .iter()
            .map(|m| matrix_from_json(m, degree))
            .collect::<Result<Vec<_>, _>>()?;
        irreps.push(MatrixRep::new(group.clone(), mats));
    }
    Ok((group, irreps))
}

fn matrix_from_json(v: &Value, degree: usize) -> Result<Array2<Complex64>, OracleError> {
    let rows = v
        .as_array()
        .filter(|r| r.len() == degree)
        .ok_or_else(|| bad("matrix must have `degree` rows"))?;
    let mut out = Array2::zeros((degree, degree));
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|r| r.len() == degree)
            .ok_or_else(|| bad("matrix row must have `degree` entries"))?;
        for (j, entry) in row.iter().enumerate() {
            let pair = entry.as_array().filter(|p| p.len() == 2);
            let re = pair.and_then(|p| p[0].as_f64());
            let im = pair.and_then(|p| p[1].as_f64());
            match (re, im) {
                (Some(re), Some(im)) => out[(i, j)] = Complex64::new(re, im),
                _ => return Err(bad("matrix entry must be an [re,im] pair")),
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{WreathOracle, DEFAULT_BUDGET};
    use wreathlr_core::{build_quiver, lr_expand, wreath_lr_expand};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(components: &[&[u32]]) -> MultiPartition {
        MultiPartition::new(components.iter().map(|c| p(c)).collect::<Vec<_>>())
    }

    #[test]
    fn decomposition_round_trip() {
        let d = wreath_lr_expand(&mp(&[&[1], &[1]]), &mp(&[&[1], &[]])).unwrap();
        let v = decomposition_to_json(&d);
        assert_eq!(decomposition_from_json(&v).unwrap(), d);
    }

    #[test]
    fn classical_expansion_as_decomposition() {
        let expanded = lr_expand(&p(&[2, 1]), &p(&[1]));
        let d: Decomposition = expanded
            .into_iter()
            .map(|(gamma, mult)| (MultiPartition::new(vec![gamma]), mult))
            .collect();
        let v = decomposition_to_json(&d);
        assert_eq!(decomposition_from_json(&v).unwrap(), d);
    }

    #[test]
    fn quiver_round_trip() {
        let q = build_quiver(2, 3);
        let v = quiver_to_json(&q);
        let data = quiver_from_json(&v).unwrap();
        assert_eq!(data, QuiverData::of(&q));
        assert_eq!(data.vertices.len(), 13);
        assert_eq!(data.arrows.len(), 5);
    }

    #[test]
    fn dot_output_mentions_every_vertex_and_arrow() {
        let q = build_quiver(1, 2);
        let dot = quiver_to_dot(&q);
        assert!(dot.starts_with("digraph quiver {"));
        for i in 0..q.vertices().len() {
            assert!(dot.contains(&format!("v{i} [label=")));
        }
        assert_eq!(dot.matches(" -> ").count(), q.arrows().len());
    }

    #[test]
    fn group_import_accepts_c2_with_its_characters() {
        let v = serde_json::json!({
            "order": 2,
            "mul": [[0, 1], [1, 0]],
            "irreps": [
                {"degree": 1, "matrices": [[[[1.0, 0.0]]], [[[1.0, 0.0]]]]},
                {"degree": 1, "matrices": [[[[1.0, 0.0]]], [[[-1.0, 0.0]]]]},
            ],
        });
        let (group, irreps) = group_from_json(&v).unwrap();
        assert_eq!(group.order(), 2);
        let oracle = WreathOracle::new(group, irreps, DEFAULT_BUDGET).unwrap();
        assert_eq!(oracle.dims(), &[1, 1]);
    }

    #[test]
    fn group_import_rejects_bad_tables() {
        let v = serde_json::json!({
            "order": 2,
            "mul": [[0, 0], [0, 0]],
            "irreps": [],
        });
        assert!(group_from_json(&v).is_err());
    }
}
