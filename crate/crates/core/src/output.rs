//! Serialization of rankings, robustness reports, validation summaries and
//! citation-flow graphs.
//!
//! Floating-point values in JSON and in the `*_full` CSV columns are written
//! in shortest round-trip form, so both formats parse back to the same `f64`.

use std::fmt::Write as _;
use std::io::{self, Write};

use serde::Serialize;

use crate::analysis::{RobustnessReport, TrialStatus};
use crate::graph::{JournalRegistry, ValidationSummary};
use crate::ranking::{JournalScore, NormalizedMatrix, RankingMetadata, RankingResult};

pub const RANKINGS_CSV_HEADER: &str = "rank,id,name,eigenfactor,article_influence,pi";
const FULL_COLUMNS: &str = "eigenfactor_full,article_influence_full,pi_full";

/// Marker for an Article Influence that is undefined (journal with no articles).
pub const UNDEFINED: &str = "NA";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown output format `{other}` (expected csv or json)")),
        }
    }
}

#[derive(Serialize)]
struct RankingDocument<'a> {
    metadata: &'a RankingMetadata,
    /// Computed over every journal, including any not shown.
    eigenfactor_sum: f64,
    shown: usize,
    journals: &'a [JournalScore],
}

fn shown(result: &RankingResult, top: Option<usize>) -> &[JournalScore] {
    let n = top.unwrap_or(result.journals.len()).min(result.journals.len());
    &result.journals[..n]
}

fn eigenfactor_sum(result: &RankingResult) -> f64 {
    result.journals.iter().map(|j| j.eigenfactor).sum()
}

pub fn write_rankings<W: Write>(
    out: W,
    result: &RankingResult,
    format: Format,
    top: Option<usize>,
) -> io::Result<()> {
    match format {
        Format::Csv => write_rankings_csv(out, result, top),
        Format::Json => write_rankings_json(out, result, top),
    }
}

/// CSV with six display columns rounded to six decimals, full-precision
/// companions, and trailing `# key=value` metadata lines.
pub fn write_rankings_csv<W: Write>(
    out: W,
    result: &RankingResult,
    top: Option<usize>,
) -> io::Result<()> {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    let header: Vec<&str> = RANKINGS_CSV_HEADER.split(',').chain(FULL_COLUMNS.split(',')).collect();
    writer.write_record(&header)?;
    for s in shown(result, top) {
        let ai_display = s.article_influence.map_or(UNDEFINED.to_string(), |v| format!("{v:.6}"));
        let ai_full = s.article_influence.map_or(UNDEFINED.to_string(), |v| v.to_string());
        writer.write_record([
            s.rank.to_string(),
            s.id.clone(),
            s.name.clone(),
            format!("{:.6}", s.eigenfactor),
            ai_display,
            format!("{:.6}", s.pi),
            s.eigenfactor.to_string(),
            ai_full,
            s.pi.to_string(),
        ])?;
    }
    let mut out = writer.into_inner().map_err(|e| e.into_error())?;

    let m = &result.metadata;
    writeln!(out, "# alpha={}", m.alpha)?;
    writeln!(out, "# tolerance={}", m.tolerance)?;
    writeln!(out, "# max_iterations={}", m.max_iterations)?;
    writeln!(out, "# iterations={}", m.iterations)?;
    writeln!(out, "# residual={}", m.residual)?;
    writeln!(out, "# journals={}", m.journals)?;
    writeln!(out, "# dangling={}", m.dangling)?;
    if let Some(year) = m.census_year {
        writeln!(out, "# census_year={year}")?;
    }
    writeln!(out, "# eigenfactor_sum={}", eigenfactor_sum(result))?;
    writeln!(out, "# shown={}", shown(result, top).len())?;
    Ok(())
}

pub fn write_rankings_json<W: Write>(
    mut out: W,
    result: &RankingResult,
    top: Option<usize>,
) -> io::Result<()> {
    let journals = shown(result, top);
    let doc = RankingDocument {
        metadata: &result.metadata,
        eigenfactor_sum: eigenfactor_sum(result),
        shown: journals.len(),
        journals,
    };
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)
}

pub fn write_robustness<W: Write>(
    mut out: W,
    report: &RobustnessReport,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)
        }
        Format::Csv => {
            writeln!(out, "trial,status,correlation")?;
            for o in &report.outcomes {
                let status = match o.status {
                    TrialStatus::Ok => "ok",
                    TrialStatus::SkippedNoInternalCitations => "skipped_no_internal_citations",
                    TrialStatus::SkippedZeroArticles => "skipped_zero_articles",
                };
                let rho = o.correlation.map_or(UNDEFINED.to_string(), |r| r.to_string());
                writeln!(out, "{},{status},{rho}", o.trial)?;
            }
            writeln!(out, "# trials={}", report.trials)?;
            writeln!(out, "# keep_fraction={}", report.keep_fraction)?;
            writeln!(out, "# sample_size={}", report.sample_size)?;
            writeln!(out, "# journals={}", report.journals)?;
            writeln!(out, "# seed={}", report.seed)?;
            writeln!(out, "# alpha={}", report.alpha)?;
            match &report.summary {
                Some(s) => {
                    writeln!(out, "# completed={}", s.completed)?;
                    writeln!(out, "# skipped={}", s.skipped)?;
                    writeln!(out, "# mean={}", s.mean)?;
                    writeln!(out, "# min={}", s.min)?;
                    writeln!(out, "# max={}", s.max)?;
                }
                None => writeln!(out, "# completed=0")?,
            }
            Ok(())
        }
    }
}

/// Human-readable validation report.
pub fn validation_report(
    registry: &JournalRegistry,
    edge_count: usize,
    summary: &ValidationSummary,
) -> String {
    let mut s = String::new();
    let names = |positions: &[usize]| -> String {
        positions
            .iter()
            .map(|&p| registry.journals()[p].id.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(s, "journals: {}", summary.journals);
    let _ = writeln!(s, "edges: {edge_count}");
    let _ = writeln!(s, "stored matrix entries: {}", summary.stored_entries);
    let _ = writeln!(s, "citation mass: {}", summary.total_mass);
    let _ = writeln!(s, "dropped self-citation mass: {}", summary.dropped_self_citations);
    let _ = write!(s, "dangling journals: {}", summary.dangling.len());
    if !summary.dangling.is_empty() {
        let _ = write!(s, " ({})", names(&summary.dangling));
    }
    let _ = writeln!(s);
    let _ = write!(s, "isolated journals: {}", summary.isolated.len());
    if !summary.isolated.is_empty() {
        let _ = write!(s, " ({})", names(&summary.isolated));
    }
    let _ = writeln!(s);
    let zero_articles = registry.iter().filter(|j| j.articles == 0).count();
    let _ = writeln!(s, "journals without articles: {zero_articles}");
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    GraphMl,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "dot" | "gv" => Ok(GraphFormat::Dot),
            "graphml" => Ok(GraphFormat::GraphMl),
            other => Err(format!("unknown graph format `{other}` (expected dot or graphml)")),
        }
    }
}

/// Citation-flow graph: one node per journal sized by Eigenfactor, one edge
/// per citing -> cited pair weighted by the citation probability `H_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct CitationFlowGraph {
    pub nodes: Vec<FlowNode>,
    pub edges: Vec<FlowEdge>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowNode {
    pub id: String,
    pub name: String,
    pub eigenfactor: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowEdge {
    pub citing: String,
    pub cited: String,
    pub weight: f64,
}

impl CitationFlowGraph {
    /// Keeps edges with `H_ij >= threshold`. Nodes are in registry order and
    /// edges in column-major order.
    pub fn new(
        registry: &JournalRegistry,
        h: &NormalizedMatrix,
        eigenfactor: &[f64],
        threshold: f64,
    ) -> Self {
        let nodes = registry
            .iter()
            .zip(eigenfactor)
            .map(|(j, &ef)| FlowNode {
                id: j.id.clone(),
                name: j.name.clone(),
                eigenfactor: ef,
            })
            .collect();
        let ids = registry.journals();
        let edges = h
            .triplets()
            .filter(|&(_, _, w)| w >= threshold)
            .map(|(i, j, w)| FlowEdge {
                citing: ids[j].id.clone(),
                cited: ids[i].id.clone(),
                weight: w,
            })
            .collect();
        CitationFlowGraph { nodes, edges }
    }

    pub fn render(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::Dot => self.to_dot(),
            GraphFormat::GraphMl => self.to_graphml(),
        }
    }

    /// Graphviz DOT. Node `size` is the Eigenfactor score; edge `probability`
    /// is `H_ij` and drives `penwidth`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph citations {\n");
        for n in &self.nodes {
            let _ = writeln!(
                s,
                "  \"{}\" [label=\"{}\", size={}];",
                dot_escape(&n.id),
                dot_escape(&n.name),
                n.eigenfactor
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [probability={}, penwidth={}];",
                dot_escape(&e.citing),
                dot_escape(&e.cited),
                e.weight,
                1.0 + 4.0 * e.weight
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_graphml(&self) -> String {
        let mut s = String::new();
        s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        s.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
        s.push_str("  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n");
        s.push_str("  <key id=\"size\" for=\"node\" attr.name=\"size\" attr.type=\"double\"/>\n");
        s.push_str("  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n");
        s.push_str("  <graph id=\"citations\" edgedefault=\"directed\">\n");
        for n in &self.nodes {
            let _ = writeln!(s, "    <node id=\"{}\">", xml_escape(&n.id));
            let _ = writeln!(s, "      <data key=\"name\">{}</data>", xml_escape(&n.name));
            let _ = writeln!(s, "      <data key=\"size\">{}</data>", n.eigenfactor);
            s.push_str("    </node>\n");
        }
        for (k, e) in self.edges.iter().enumerate() {
            let _ = writeln!(
                s,
                "    <edge id=\"e{k}\" source=\"{}\" target=\"{}\">",
                xml_escape(&e.citing),
                xml_escape(&e.cited)
            );
            let _ = writeln!(s, "      <data key=\"weight\">{}</data>", e.weight);
            s.push_str("    </edge>\n");
        }
        s.push_str("  </graph>\n</graphml>\n");
        s
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"").replace('\n', "\\n")
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}
