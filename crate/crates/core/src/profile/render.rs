//! Report rendering: pretty JSON for machines, a single self-contained
//! HTML page for people. Every numeric cell in the HTML carries the exact
//! JSON encoding of its value in a `data-v` attribute, so the two outputs
//! never disagree even after display rounding.

use super::{MeasureReport, ProfileReport, Section};
use crate::error::{Error, Result};
use crate::profile::stats::Histogram;
use std::fmt::Write as _;

pub fn render_json(report: &ProfileReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization cannot fail")
}

pub fn parse_json(text: &str) -> Result<ProfileReport> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        path: "<json>".into(),
        line: e.line() as u64,
        msg: e.to_string(),
    })
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// The exact token serde_json would emit for this value.
fn json_num(v: f64) -> String {
    serde_json::to_string(&v).unwrap_or_else(|_| "null".into())
}

fn num_cell(v: f64) -> String {
    let s = json_num(v);
    format!("<td class=\"num\" data-v=\"{s}\">{s}</td>")
}

fn int_cell(v: u64) -> String {
    format!("<td class=\"num\" data-v=\"{v}\">{v}</td>")
}

fn failed_note(err: &str) -> String {
    format!("<p class=\"failed\">not available: {}</p>", esc(err))
}

fn svg_histogram(h: &Histogram) -> String {
    const W: f64 = 420.0;
    const H: f64 = 130.0;
    const PAD: f64 = 4.0;
    let bins = h.counts.len().max(1);
    let peak = h.counts.iter().copied().max().unwrap_or(0).max(1) as f64;
    let bw = (W - 2.0 * PAD) / bins as f64;
    let mut s = format!(
        "<svg class=\"hist\" viewBox=\"0 0 {W} {H}\" width=\"{W}\" height=\"{H}\" role=\"img\">"
    );
    for (i, &c) in h.counts.iter().enumerate() {
        let bh = (H - 2.0 * PAD) * c as f64 / peak;
        let x = PAD + i as f64 * bw;
        let y = H - PAD - bh;
        let _ = write!(
            s,
            "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{:.2}\" height=\"{bh:.2}\"><title>[{} .. {}]: {c}</title></rect>",
            (bw - 1.0).max(0.5),
            json_num(h.edges[i]),
            json_num(h.edges[i + 1]),
        );
    }
    s.push_str("</svg>");
    s
}

fn measure_block(name: &str, section: &Section<MeasureReport>, out: &mut String) {
    let _ = write!(out, "<section id=\"measure-{0}\"><h2>{0}</h2>", esc(name));
    match section {
        Section::Failed { error } => out.push_str(&failed_note(error)),
        Section::Ok { data } => {
            let _ = write!(
                out,
                "<p>estimator: <code>{}</code>{}</p>",
                esc(&data.estimator),
                if data.normalized { ", normalized" } else { "" }
            );
            match &data.summary {
                Some(s) => {
                    out.push_str(
                        "<table><tr><th>count</th><th>min</th><th>median</th><th>mean</th>\
                         <th>max</th><th>stddev</th></tr><tr>",
                    );
                    out.push_str(&int_cell(s.count));
                    out.push_str(&num_cell(s.min));
                    out.push_str(&num_cell(s.median));
                    out.push_str(&num_cell(s.mean));
                    out.push_str(&num_cell(s.max));
                    out.push_str(&num_cell(s.stddev));
                    out.push_str("</tr></table>");
                    out.push_str(&svg_histogram(&s.histogram));
                }
                None => out.push_str("<p class=\"failed\">no summary (empty or non-finite)</p>"),
            }
            match &data.centralization {
                Section::Ok { data: c } => {
                    let _ = write!(
                        out,
                        "<p>centralization{}: <span class=\"num\" data-v=\"{v}\">{v}</span></p>",
                        if c.normalized { " (normalized)" } else { "" },
                        v = json_num(c.value),
                    );
                }
                Section::Failed { error } => out.push_str(&failed_note(error)),
            }
            match &data.assortativity {
                Section::Ok { data: a } => {
                    let _ = write!(
                        out,
                        "<p>assortativity: <span class=\"num\" data-v=\"{0}\">{0}</span></p>",
                        json_num(*a),
                    );
                }
                Section::Failed { error } => out.push_str(&failed_note(error)),
            }
            if !data.top.is_empty() {
                out.push_str("<table><tr><th>node</th><th>score</th></tr>");
                for t in &data.top {
                    let _ = write!(out, "<tr>{}{}</tr>", int_cell(t.node), num_cell(t.score));
                }
                out.push_str("</table>");
            }
        }
    }
    out.push_str("</section>");
}

/// Render the report as one HTML document with no external references.
pub fn render_html(report: &ProfileReport) -> String {
    let mut out = String::with_capacity(1 << 16);
    out.push_str("<!DOCTYPE html><html><head><meta charset=\"utf-8\">");
    let _ = write!(
        out,
        "<title>{} profile</title>",
        esc(&report.tool)
    );
    out.push_str(
        "<style>
body{font-family:system-ui,sans-serif;margin:2rem auto;max-width:60rem;color:#222}
h1{border-bottom:2px solid #446;padding-bottom:.3rem}
section{margin:1.5rem 0;padding:.5rem 1rem;border:1px solid #ddd;border-radius:6px}
table{border-collapse:collapse;margin:.5rem 0}
td,th{border:1px solid #ccc;padding:.25rem .6rem;text-align:right}
th{background:#eef}
.failed{color:#a33;font-style:italic}
.hist rect{fill:#58a}
code{background:#f4f4f8;padding:0 .25rem}
</style></head><body>",
    );

    let _ = write!(
        out,
        "<h1>{} {} profile</h1><p>detail: <code>{:?}</code>, seed: {}</p>",
        esc(&report.tool),
        esc(&report.version),
        report.detail,
        report.seed,
    );

    out.push_str("<section id=\"global\"><h2>graph</h2><table>");
    let _ = write!(
        out,
        "<tr><th>nodes</th><th>edges</th><th>density</th><th>directed</th>\
         <th>weighted</th><th>self loops</th></tr><tr>{}{}{}<td>{}</td><td>{}</td>{}</tr>",
        int_cell(report.global.nodes),
        int_cell(report.global.edges),
        num_cell(report.global.density),
        report.global.directed,
        report.global.weighted,
        int_cell(report.global.self_loops),
    );
    out.push_str("</table>");
    match &report.global.diameter {
        Section::Ok { data } => {
            let _ = write!(
                out,
                "<p>diameter: {} (lower {}, upper {}, {} traversals)</p>",
                if data.exact { "exact" } else { "bounded" },
                data.lower,
                data.upper,
                data.bfs_count,
            );
        }
        Section::Failed { error } => out.push_str(&failed_note(error)),
    }
    out.push_str("</section>");

    for m in &report.measures {
        measure_block(&m.name, &m.body, &mut out);
    }

    out.push_str("<section id=\"correlations\"><h2>rank correlations</h2>");
    match &report.correlations {
        Section::Ok { data } => {
            out.push_str("<table><tr><th></th>");
            for n in &data.names {
                let _ = write!(out, "<th>{}</th>", esc(n));
            }
            out.push_str("</tr>");
            for (i, row) in data.entries.iter().enumerate() {
                let _ = write!(out, "<tr><th>{}</th>", esc(&data.names[i]));
                for cell in row {
                    match cell {
                        Some(v) => out.push_str(&num_cell(*v)),
                        None => out.push_str("<td class=\"num\">-</td>"),
                    }
                }
                out.push_str("</tr>");
            }
            out.push_str("</table>");
        }
        Section::Failed { error } => out.push_str(&failed_note(error)),
    }
    out.push_str("</section>");

    out.push_str("<section id=\"partitions\"><h2>partitions</h2>");
    match &report.partitions.components {
        Section::Ok { data } => {
            let _ = write!(
                out,
                "<p>components: {} (largest {})</p>",
                data.count, data.largest
            );
        }
        Section::Failed { error } => out.push_str(&failed_note(error)),
    }
    match &report.partitions.communities {
        Section::Ok { data } => {
            let _ = write!(
                out,
                "<p>communities: {}, modularity <span class=\"num\" data-v=\"{1}\">{1}</span></p>",
                data.count,
                json_num(data.modularity),
            );
        }
        Section::Failed { error } => out.push_str(&failed_note(error)),
    }
    match &report.partitions.cores {
        Section::Ok { data } => {
            let _ = write!(
                out,
                "<p>max core: {}, shells: {}</p>",
                data.max_core, data.shell_count
            );
        }
        Section::Failed { error } => out.push_str(&failed_note(error)),
    }
    out.push_str("</section></body></html>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_erdos_renyi;
    use crate::profile::{build_profile, ProfileConfig};

    fn report() -> ProfileReport {
        let g = gen_erdos_renyi(80, 0.1, 5).unwrap();
        build_profile(&g, &ProfileConfig::default())
    }

    #[test]
    fn json_round_trips() {
        let r = report();
        let text = render_json(&r);
        let back = parse_json(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn html_is_self_contained() {
        let html = render_html(&report());
        assert!(html.starts_with("<!DOCTYPE html>"));
        assert!(html.ends_with("</html>"));
        for banned in ["http://", "https://", "<script", "src="] {
            assert!(!html.contains(banned), "found {banned}");
        }
        assert!(html.contains("<svg"));
    }

    #[test]
    fn data_v_attributes_match_json_numbers() {
        let r = report();
        let html = render_html(&r);
        let json: serde_json::Value = serde_json::from_str(&render_json(&r)).unwrap();
        let density = json["global"]["density"].to_string();
        assert!(html.contains(&format!("data-v=\"{density}\"")));
        let mean = json["measures"][0]["data"]["summary"]["mean"].to_string();
        assert_ne!(mean, "null");
        assert!(html.contains(&format!("data-v=\"{mean}\"")));
    }

    #[test]
    fn failed_sections_render_as_notes() {
        let mut r = report();
        r.correlations = Section::Failed {
            error: "broke <here>".into(),
        };
        let html = render_html(&r);
        assert!(html.contains("not available: broke &lt;here&gt;"));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_json("{not json").is_err());
    }
}
