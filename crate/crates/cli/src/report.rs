//! Machine-readable mirrors of the library report types, plus the shared
//! rational rendering. JSON field order follows struct order, so output is
//! byte-deterministic for fixed inputs.

use num_traits::ToPrimitive;
use saturn_core::bounds::{BoundKind, BoundReport, Rat};
use saturn_core::constructions::VertexRole;
use saturn_core::oracle::{AuditReport, SatResult};
use saturn_core::saturation::SaturationVerdict;
use saturn_core::weights::WeightSummary;
use saturn_core::{emit_graph6, Graph};
use serde::Serialize;

/// Exact value as `p/q` text plus a convenience decimal.
#[derive(Debug, Clone, Serialize)]
pub struct JsonRat {
    pub text: String,
    pub decimal: f64,
}

pub fn rat_text(r: Rat) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl From<Rat> for JsonRat {
    fn from(r: Rat) -> JsonRat {
        JsonRat {
            text: rat_text(r),
            decimal: r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

// ---------------------------------------------------------------------------
// weights
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct EdgeWeightsOut {
    pub edge: (usize, usize),
    pub wt0: usize,
    pub wt1: Option<usize>,
    pub wt_cp: usize,
}

#[derive(Serialize)]
pub struct WitnessOut {
    pub k0: (usize, usize),
    pub k1: (usize, usize),
    pub k0p: (usize, usize),
    pub k1p: (usize, usize),
    pub min_wt_cp: (usize, usize),
}

#[derive(Serialize)]
pub struct WeightsOut {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub k0: usize,
    pub k1: usize,
    pub k0p: usize,
    pub k1p: usize,
    pub min_wt_cp: usize,
    pub witnesses: WitnessOut,
    pub per_edge: Vec<EdgeWeightsOut>,
}

pub fn weights_out(g: &Graph, s: &WeightSummary) -> WeightsOut {
    WeightsOut {
        graph6: emit_graph6(g),
        order: s.order,
        size: s.per_edge.len(),
        k0: s.k0,
        k1: s.k1,
        k0p: s.k0p,
        k1p: s.k1p,
        min_wt_cp: s.min_wt_cp,
        witnesses: WitnessOut {
            k0: s.witnesses.k0,
            k1: s.witnesses.k1,
            k0p: s.witnesses.k0p,
            k1p: s.witnesses.k1p,
            min_wt_cp: s.witnesses.min_wt_cp,
        },
        per_edge: s
            .per_edge
            .iter()
            .map(|e| EdgeWeightsOut { edge: e.edge, wt0: e.wt0, wt1: e.wt1, wt_cp: e.wt_cp })
            .collect(),
    }
}

pub fn print_weights_text(out: &WeightsOut) {
    println!("pattern: {}  (order {}, size {})", out.graph6, out.order, out.size);
    let w = &out.witnesses;
    println!("k0  = {:<3} (edge {}-{})", out.k0, w.k0.0, w.k0.1);
    println!("k1  = {:<3} (edge {}-{})", out.k1, w.k1.0, w.k1.1);
    println!("k0' = {:<3} (edge {}-{})", out.k0p, w.k0p.0, w.k0p.1);
    println!("k1' = {:<3} (edge {}-{})", out.k1p, w.k1p.0, w.k1p.1);
    println!("min wt_cp = {} (edge {}-{})", out.min_wt_cp, w.min_wt_cp.0, w.min_wt_cp.1);
    println!();
    println!("{:>7}  {:>4} {:>4} {:>6}", "edge", "wt0", "wt1", "wt_cp");
    for e in &out.per_edge {
        let wt1 = e.wt1.map_or("-".to_string(), |v| v.to_string());
        println!("{:>3}-{:<3}  {:>4} {:>4} {:>6}", e.edge.0, e.edge.1, e.wt0, wt1, e.wt_cp);
    }
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct BoundOut {
    pub name: String,
    pub kind: &'static str,
    pub applicable: bool,
    pub reason: String,
    pub slope: Option<JsonRat>,
    pub constant: Option<JsonRat>,
    pub value: Option<JsonRat>,
    pub integer_bound: Option<i64>,
    pub asymptotic_only: bool,
}

pub fn bound_out(r: &BoundReport) -> BoundOut {
    BoundOut {
        name: r.name.to_string(),
        kind: match r.kind {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Exact => "exact",
        },
        applicable: r.applicable,
        reason: r.reason.clone(),
        slope: r.slope.map(Into::into),
        constant: r.constant.map(Into::into),
        value: r.value_at_n.map(Into::into),
        integer_bound: r.integer_bound,
        asymptotic_only: r.asymptotic_only,
    }
}

#[derive(Serialize)]
pub struct BoundsOut {
    pub graph6: String,
    pub n: usize,
    pub which: String,
    pub reports: Vec<BoundOut>,
    /// The selected best explicit lower bound, when `which` computes one.
    pub best: Option<BoundOut>,
}

pub fn print_bounds_text(out: &BoundsOut) {
    println!("pattern: {}  n = {}  ({})", out.graph6, out.n, out.which);
    println!(
        "{:<26} {:<6} {:<11} {:<12} {:<12} {:<6} note",
        "name", "kind", "slope", "constant", "value", "int"
    );
    for r in &out.reports {
        let cell = |o: &Option<JsonRat>| o.as_ref().map_or("-".to_string(), |j| j.text.clone());
        let int = r.integer_bound.map_or("-".to_string(), |i| i.to_string());
        let note = if !r.applicable {
            format!("n/a: {}", r.reason)
        } else if r.asymptotic_only {
            "asymptotic".to_string()
        } else {
            String::new()
        };
        println!(
            "{:<26} {:<6} {:<11} {:<12} {:<12} {:<6} {}",
            r.name,
            r.kind,
            cell(&r.slope),
            cell(&r.constant),
            cell(&r.value),
            int,
            note
        );
    }
    if let Some(best) = &out.best {
        match (&best.value, best.integer_bound) {
            (Some(v), Some(i)) => {
                println!("best: {}  value {}  →  sat ≥ {}", best.name, v.text, i)
            }
            _ => println!("best: {}", best.name),
        }
    }
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct PropertyOut {
    pub name: String,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct ConstructOut {
    pub name: String,
    pub order: usize,
    pub size: usize,
    pub graph6: String,
    pub roles: Vec<String>,
    pub properties: Vec<PropertyOut>,
}

pub fn role_label(role: &VertexRole) -> String {
    match role {
        VertexRole::Hub { class, partner } => match partner {
            Some(p) => format!("hub(class {}, partner {})", class, p),
            None => format!("hub(class {})", class),
        },
        VertexRole::Leaf { class } => format!("leaf(class {})", class),
        VertexRole::CliqueB => "clique-B".to_string(),
        VertexRole::SpecialV => "special-v".to_string(),
        VertexRole::Center { copy } => format!("center(copy {})", copy),
        VertexRole::Part { index } => format!("part {}", index),
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct VerifyOut {
    pub host: String,
    pub pattern: String,
    pub is_free: bool,
    pub is_saturated: bool,
    /// Pattern-to-host vertex map of a contained copy, when not free.
    pub free_witness: Option<Vec<usize>>,
    /// A non-edge whose addition creates no copy, when free but not
    /// saturated.
    pub maximality_counterexample: Option<(usize, usize)>,
}

pub fn verify_out(host: &Graph, pattern: &Graph, v: &SaturationVerdict) -> VerifyOut {
    VerifyOut {
        host: emit_graph6(host),
        pattern: emit_graph6(pattern),
        is_free: v.is_free,
        is_saturated: v.is_saturated,
        free_witness: v.free_witness.as_ref().map(|e| e.map.clone()),
        maximality_counterexample: v.maximality_counterexample,
    }
}

pub fn print_verify_text(out: &VerifyOut, explain: bool) {
    println!("host:    {}", out.host);
    println!("pattern: {}", out.pattern);
    println!("free:      {}", out.is_free);
    println!("saturated: {}", out.is_saturated);
    if let Some(map) = &out.free_witness {
        println!("contains a copy of the pattern");
        if explain {
            for (p, h) in map.iter().enumerate() {
                println!("  pattern vertex {} → host vertex {}", p, h);
            }
        }
    }
    if let Some((u, v)) = out.maximality_counterexample {
        println!("not maximal: adding {}-{} creates no copy", u, v);
    }
}

// ---------------------------------------------------------------------------
// sat
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct AuditEntryOut {
    pub pattern: String,
    pub n: usize,
    pub sat_value: usize,
    pub lower_bound_ceiling: Option<i64>,
    pub construction_sizes: Vec<(String, usize)>,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct AuditOut {
    pub entries: Vec<AuditEntryOut>,
    pub violations: Vec<String>,
}

#[derive(Serialize)]
pub struct SatOut {
    pub pattern: String,
    pub n: usize,
    pub sat_value: usize,
    pub graphs_examined: usize,
    pub witnesses: Vec<String>,
    pub audit: Option<AuditOut>,
}

pub fn sat_out(result: &SatResult, audit: Option<&AuditReport>) -> SatOut {
    SatOut {
        pattern: emit_graph6(&result.pattern),
        n: result.n,
        sat_value: result.sat_value,
        graphs_examined: result.graphs_examined,
        witnesses: result.witnesses.iter().map(emit_graph6).collect(),
        audit: audit.map(|a| AuditOut {
            entries: a
                .entries
                .iter()
                .map(|e| AuditEntryOut {
                    pattern: e.pattern.clone(),
                    n: e.n,
                    sat_value: e.sat_value,
                    lower_bound_ceiling: e.lower_bound_ceiling,
                    construction_sizes: e.construction_sizes.clone(),
                    ok: e.ok,
                })
                .collect(),
            violations: a.violations.clone(),
        }),
    }
}

pub fn print_sat_text(out: &SatOut) {
    println!(
        "sat({}, {}) = {}   ({} graphs examined)",
        out.n, out.pattern, out.sat_value, out.graphs_examined
    );
    println!("witnesses ({}):", out.witnesses.len());
    for w in &out.witnesses {
        println!("  {}", w);
    }
    if let Some(audit) = &out.audit {
        println!();
        println!("audit over orders up to {}:", out.n);
        for e in &audit.entries {
            let lb = e.lower_bound_ceiling.map_or("-".to_string(), |v| v.to_string());
            let sizes: Vec<String> = e
                .construction_sizes
                .iter()
                .map(|(f, s)| format!("{} = {}", f, s))
                .collect();
            println!(
                "  n = {}: sat = {}, bound ceiling = {}, constructions: {}  [{}]",
                e.n,
                e.sat_value,
                lb,
                if sizes.is_empty() { "-".to_string() } else { sizes.join(", ") },
                if e.ok { "ok" } else { "VIOLATION" }
            );
        }
        for v in &audit.violations {
            println!("  violation: {}", v);
        }
    }
}
