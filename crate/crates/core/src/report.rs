//! Report assembly and rendering: a structured (JSON) form with stable field
//! order for golden-file testing, and a table form for reading.

use serde::Serialize;

use crate::digraph::{CheckReport, HomologyDigraph};
use crate::field::Field;

#[derive(Clone, Debug, Serialize)]
pub struct SpaceInfo {
    pub name: String,
    pub points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_subset: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassEntry {
    pub degree: i64,
    pub index: usize,
    pub label: String,
    pub representative: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DefiningEntry {
    pub total_degree: i64,
    pub dim: usize,
    pub ambient_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointingEntry {
    pub source: String,
    pub target: String,
    pub points: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessEntry {
    pub source: String,
    pub target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extent: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intent: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub source: String,
    pub points_to: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DigraphReport {
    pub field: String,
    pub space: SpaceInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub betti: Vec<(i64, usize)>,
    pub classes: Vec<ClassEntry>,
    pub defining_dims: Vec<DefiningEntry>,
    pub pointing: Vec<PointingEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableRow>>,
}

pub struct ReportOptions {
    pub witnesses: bool,
    pub max_degree: Option<i64>,
    pub seed: Option<u64>,
}

fn render_chain<F: Field>(field: &F, labels: &[String], v: &[F::Elem]) -> String {
    let mut parts = Vec::new();
    for (i, e) in v.iter().enumerate() {
        if field.is_zero(e) {
            continue;
        }
        if field.is_one(e) {
            parts.push(format!("{{{}}}", labels[i]));
        } else {
            parts.push(format!("{}*{{{}}}", field.render(e), labels[i]));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Nonzero classes of one degree as (label, coordinates), for the optional
/// full pointing table. Only meaningful over GF(2), where the 0/1 coordinate
/// vectors exhaust the vector space.
fn nonzero_classes<F: Field>(
    field: &F,
    labels: &[String],
    dim: usize,
) -> Vec<(String, Vec<F::Elem>)> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << dim) {
        let v: Vec<F::Elem> = (0..dim)
            .map(|i| {
                if (mask >> i) & 1 == 1 {
                    field.one()
                } else {
                    field.zero()
                }
            })
            .collect();
        let name = (0..dim)
            .filter(|i| (mask >> i) & 1 == 1)
            .map(|i| labels[i].clone())
            .collect::<Vec<_>>()
            .join("+");
        out.push((name, v));
    }
    out
}

const TABLE_DIM_CAP: usize = 5;

pub fn digraph_report<F: Field>(
    field: &F,
    digraph: &HomologyDigraph<F>,
    name: &str,
    opts: &ReportOptions,
) -> DigraphReport {
    let h = digraph.ctx.h();
    let within = |deg: i64| opts.max_degree.map(|m| deg <= m).unwrap_or(true);
    let space_info = SpaceInfo {
        name: name.to_string(),
        points: digraph.ctx.space.len(),
        pair_subset: digraph.ctx.subset.as_ref().map(|a| {
            a.iter()
                .map(|i| digraph.ctx.space.id(i).to_string())
                .collect()
        }),
    };
    let betti: Vec<(i64, usize)> = h
        .dims()
        .iter()
        .filter(|(&d, _)| within(d))
        .map(|(&d, &n)| (d, n))
        .collect();

    let mut classes = Vec::new();
    for (&deg, &dim) in h.dims() {
        if !within(deg) {
            continue;
        }
        let chain_labels = digraph.ctx.chain.gvs.labels(deg);
        for idx in 0..dim {
            let rep = digraph.ctx.basis.rep(field, deg, idx);
            classes.push(ClassEntry {
                degree: deg,
                index: idx,
                label: h.label(deg, idx),
                representative: render_chain(field, chain_labels, &rep),
            });
        }
    }

    let defining = &digraph.dgvs.pointing.defining;
    let indexer = &digraph.dgvs.pointing.indexer;
    let mut defining_dims = Vec::new();
    for &n in indexer.space().dims().keys() {
        if !within(n) {
            continue;
        }
        defining_dims.push(DefiningEntry {
            total_degree: n,
            dim: defining.dim(n),
            ambient_dim: indexer.dim(n),
        });
    }

    let basis_list: Vec<(i64, usize)> = h
        .dims()
        .iter()
        .filter(|(&d, _)| within(d))
        .flat_map(|(&d, &n)| (0..n).map(move |i| (d, i)))
        .collect();
    let mut pointing = Vec::new();
    for &src in &basis_list {
        for &dst in &basis_list {
            pointing.push(PointingEntry {
                source: h.label(src.0, src.1),
                target: h.label(dst.0, dst.1),
                points: digraph.basis_points_to(field, src, dst),
            });
        }
    }

    let witnesses = opts.witnesses.then(|| {
        let mut out = Vec::new();
        for &src in &basis_list {
            for &dst in &basis_list {
                if !digraph.basis_points_to(field, src, dst) {
                    continue;
                }
                let unit = |deg: i64, idx: usize| {
                    let mut v = vec![field.zero(); h.dim(deg)];
                    v[idx] = field.one();
                    v
                };
                let sv = unit(src.0, src.1);
                let dv = unit(dst.0, dst.1);
                // smallest justifying extent in the deterministic witness order
                let mut found: Option<&crate::digraph::Witness<F>> = None;
                for w in &digraph.witnesses {
                    let justifies = w.image_e.contains(field, src.0, &sv).unwrap_or(false)
                        && w.image_f.contains(field, dst.0, &dv).unwrap_or(false);
                    if justifies
                        && found
                            .map(|best| w.pair.extent.count() < best.pair.extent.count())
                            .unwrap_or(true)
                    {
                        found = Some(w);
                    }
                }
                let ids = |s: &crate::space::PointSet| {
                    s.iter()
                        .map(|i| digraph.ctx.space.id(i).to_string())
                        .collect::<Vec<_>>()
                };
                out.push(WitnessEntry {
                    source: h.label(src.0, src.1),
                    target: h.label(dst.0, dst.1),
                    extent: found.map(|w| ids(&w.pair.extent)),
                    intent: found.map(|w| ids(&w.pair.intent)),
                });
            }
        }
        out
    });

    let table =
        (field.name() == "gf2" && h.dims().values().all(|&d| d <= TABLE_DIM_CAP)).then(|| {
            let mut rows = Vec::new();
            let mut all: Vec<(i64, String, Vec<F::Elem>)> = Vec::new();
            for (&deg, &dim) in h.dims() {
                if !within(deg) {
                    continue;
                }
                for (label, v) in nonzero_classes(field, h.labels(deg), dim) {
                    all.push((deg, label, v));
                }
            }
            for (sdeg, sname, sv) in &all {
                let mut targets = Vec::new();
                for (ddeg, dname, dv) in &all {
                    if digraph
                        .points_to(field, *sdeg, sv, *ddeg, dv)
                        .expect("table vectors conform")
                    {
                        targets.push(dname.clone());
                    }
                }
                rows.push(TableRow {
                    source: sname.clone(),
                    points_to: targets,
                });
            }
            rows
        });

    DigraphReport {
        field: field.name(),
        space: space_info,
        seed: opts.seed,
        betti,
        classes,
        defining_dims,
        pointing,
        witnesses,
        table,
    }
}

pub fn render_digraph_table(report: &DigraphReport) -> String {
    let mut out = String::new();
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };
    push(
        &mut out,
        format!(
            "space: {} ({} points)",
            report.space.name, report.space.points
        ),
    );
    if let Some(subset) = &report.space.pair_subset {
        push(&mut out, format!("pair subset: {{{}}}", subset.join(",")));
    }
    push(&mut out, format!("field: {}", report.field));
    let betti: Vec<String> = report
        .betti
        .iter()
        .map(|(d, n)| format!("b{d}={n}"))
        .collect();
    push(
        &mut out,
        format!(
            "betti: {}",
            if betti.is_empty() {
                "0".into()
            } else {
                betti.join(" ")
            }
        ),
    );
    push(&mut out, "classes:".into());
    for c in &report.classes {
        push(&mut out, format!("  {} = {}", c.label, c.representative));
    }
    push(&mut out, "defining space dimensions:".into());
    for d in &report.defining_dims {
        push(
            &mut out,
            format!(
                "  degree {}: {} of {}",
                d.total_degree, d.dim, d.ambient_dim
            ),
        );
    }
    push(&mut out, "pointing (basis classes):".into());
    for p in &report.pointing {
        push(
            &mut out,
            format!(
                "  {} -> {} : {}",
                p.source,
                p.target,
                if p.points { "yes" } else { "no" }
            ),
        );
    }
    if let Some(ws) = &report.witnesses {
        push(&mut out, "witnesses:".into());
        for w in ws {
            match (&w.extent, &w.intent) {
                (Some(e), Some(i)) => push(
                    &mut out,
                    format!(
                        "  {} -> {} via E={{{}}} F={{{}}}",
                        w.source,
                        w.target,
                        e.join(","),
                        i.join(",")
                    ),
                ),
                _ => push(
                    &mut out,
                    format!("  {} -> {} via the bilinear hull", w.source, w.target),
                ),
            }
        }
    }
    if let Some(rows) = &report.table {
        push(&mut out, "pointing (all nonzero classes):".into());
        for row in rows {
            push(
                &mut out,
                format!(
                    "  {} -> {}",
                    row.source,
                    if row.points_to.is_empty() {
                        "(nothing)".into()
                    } else {
                        row.points_to.join(", ")
                    }
                ),
            );
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub field: String,
    pub space: SpaceInfo,
    pub betti: Vec<(i64, usize)>,
    pub classes: Vec<ClassEntry>,
}

pub fn homology_report<F: Field>(
    field: &F,
    ctx: &crate::homology::SpaceHomology<F>,
    name: &str,
    max_degree: Option<i64>,
) -> HomologyReport {
    let h = ctx.h();
    let within = |deg: i64| max_degree.map(|m| deg <= m).unwrap_or(true);
    let mut classes = Vec::new();
    for (&deg, &dim) in h.dims() {
        if !within(deg) {
            continue;
        }
        let chain_labels = ctx.chain.gvs.labels(deg);
        for idx in 0..dim {
            let rep = ctx.basis.rep(field, deg, idx);
            classes.push(ClassEntry {
                degree: deg,
                index: idx,
                label: h.label(deg, idx),
                representative: render_chain(field, chain_labels, &rep),
            });
        }
    }
    HomologyReport {
        field: field.name(),
        space: SpaceInfo {
            name: name.to_string(),
            points: ctx.space.len(),
            pair_subset: ctx
                .subset
                .as_ref()
                .map(|a| a.iter().map(|i| ctx.space.id(i).to_string()).collect()),
        },
        betti: h
            .dims()
            .iter()
            .filter(|(&d, _)| within(d))
            .map(|(&d, &n)| (d, n))
            .collect(),
        classes,
    }
}

pub fn render_homology_table(report: &HomologyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "space: {} ({} points)\n",
        report.space.name, report.space.points
    ));
    if let Some(subset) = &report.space.pair_subset {
        out.push_str(&format!("pair subset: {{{}}}\n", subset.join(",")));
    }
    out.push_str(&format!("field: {}\n", report.field));
    let betti: Vec<String> = report
        .betti
        .iter()
        .map(|(d, n)| format!("b{d}={n}"))
        .collect();
    out.push_str(&format!(
        "betti: {}\n",
        if betti.is_empty() {
            "0".into()
        } else {
            betti.join(" ")
        }
    ));
    out.push_str("classes:\n");
    for c in &report.classes {
        out.push_str(&format!("  {} = {}\n", c.label, c.representative));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckDocument {
    pub check: String,
    pub field: String,
    pub passed: bool,
    pub details: Vec<(String, String)>,
}

pub fn check_document(field_name: &str, report: &CheckReport) -> CheckDocument {
    CheckDocument {
        check: report.name.clone(),
        field: field_name.to_string(),
        passed: report.passed,
        details: report.details.clone(),
    }
}

pub fn render_check_table(doc: &CheckDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{} over {}: {}\n",
        doc.check,
        doc.field,
        if doc.passed { "PASS" } else { "FAIL" }
    ));
    for (k, v) in &doc.details {
        out.push_str(&format!("  {k}: {v}\n"));
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::homology_digraph;
    use crate::exec::Mode;
    use crate::field::Gf2;
    use crate::models;

    #[test]
    fn ordered_circle_report_contents() {
        let f = Gf2;
        let model = models::ordered_circle();
        let dg = homology_digraph(&f, &model.space, Mode::Sequential);
        let opts = ReportOptions {
            witnesses: true,
            max_degree: None,
            seed: None,
        };
        let report = digraph_report(&f, &dg, &model.name, &opts);
        assert_eq!(report.betti, vec![(0, 1), (1, 1)]);
        // degree-2 block of the defining space is zero
        let deg2 = report
            .defining_dims
            .iter()
            .find(|d| d.total_degree == 2)
            .unwrap();
        assert_eq!(deg2.dim, 0);
        // the degree-0 -> degree-1 pointing is witnessed by ({m}, everything)
        let ws = report.witnesses.as_ref().unwrap();
        let w = ws
            .iter()
            .find(|w| w.source == "H0[0]" && w.target == "H1[0]")
            .expect("witnessed pointing");
        assert_eq!(w.extent.as_deref(), Some(["m".to_string()].as_slice()));
        assert_eq!(w.intent.as_ref().unwrap().len(), 4);
        // structured output is stable
        let json1 = to_json(&report);
        let report2 = digraph_report(&f, &dg, &model.name, &opts);
        assert_eq!(json1, to_json(&report2));
        // table present over GF(2)
        assert!(report.table.is_some());
    }
}
