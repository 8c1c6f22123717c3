//! DOT and JSON renderings. Vertices, semiarcs and colors are 1-based.

use std::fmt::Write;

use mcbq_core::{Coloring, Homset, Quiver};
use serde_json::{json, Map, Value};

fn coloring_object(c: &Coloring) -> Value {
    let map: Map<String, Value> = c
        .colors()
        .iter()
        .enumerate()
        .map(|(s, &v)| ((s + 1).to_string(), json!(v + 1)))
        .collect();
    Value::Object(map)
}

/// `[{"1": color, "2": color, …}, …]`, keyed by semiarc.
pub fn homset_json(h: &Homset) -> Value {
    Value::Array(h.colorings.iter().map(coloring_object).collect())
}

pub fn quiver_json(h: &Homset, q: &Quiver) -> Value {
    let vertices: Vec<Value> = h
        .colorings
        .iter()
        .enumerate()
        .map(|(i, c)| json!({ "id": i + 1, "coloring": coloring_object(c) }))
        .collect();
    let edges: Vec<Value> = q
        .edges
        .iter()
        .map(|e| json!({ "src": e.src + 1, "dst": e.dst + 1, "endo": q.endos[e.endo].to_string() }))
        .collect();
    json!({
        "endomorphisms": q.endos.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "vertices": vertices,
        "edges": edges,
        "indegree_polynomial": q.indegree_polynomial().to_string(),
    })
}

pub fn quiver_dot(h: &Homset, q: &Quiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for (i, c) in h.colorings.iter().enumerate() {
        writeln!(out, "  v{} [label=\"{c}\"];", i + 1).unwrap();
    }
    for e in &q.edges {
        writeln!(
            out,
            "  v{} -> v{} [label=\"{}\"];",
            e.src + 1,
            e.dst + 1,
            q.endos[e.endo]
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcbq_core::{build_quiver, find_colorings, parse_gauss, Endomorphism, McBiquandle};

    #[test]
    fn single_vertex_self_loop() {
        let x = McBiquandle::trivial(1).unwrap();
        let h = find_colorings(&x, &parse_gauss("").unwrap());
        let q = build_quiver(&x, &h, &[Endomorphism::identity(1)]).unwrap();
        assert_eq!(
            quiver_dot(&h, &q),
            "digraph quiver {\n  v1 [label=\"(1)\"];\n  v1 -> v1 [label=\"[1]\"];\n}\n"
        );
    }

    #[test]
    fn json_round_trips() {
        let x = McBiquandle::trivial(2).unwrap();
        let h = find_colorings(&x, &parse_gauss("O1+ U2+ ; U1+ O2+").unwrap());
        let q = build_quiver(&x, &h, &[Endomorphism::identity(2)]).unwrap();
        let v = quiver_json(&h, &q);
        let text = serde_json::to_string_pretty(&v).unwrap();
        assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), v);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
        assert_eq!(homset_json(&h)[0], json!({"1": 1, "2": 1, "3": 1, "4": 1}));
    }
}
