//! Page tables as JSON, CSV and plain text.
//!
//! JSON follows `{"graph", "ring", "l_max", "pages": [{"r", "entries": [{"p",
//! "q", "rank", "torsion", "exact"}]}]}`. CSV has the columns
//! `r,p,q,k,l,rank,torsion,exact` with `k = p + q` and `l = p`, torsion orders
//! joined by `;`. Text tables put `q` on rows (descending) and `p` on columns.

use std::fmt::Write as _;

use mpss_core::homalg::Int;
use mpss_core::mpss::Page;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// A torsion order; orders beyond `u64` are written as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Order {
    Small(u64),
    Big(String),
}

impl From<&Int> for Order {
    fn from(d: &Int) -> Self {
        d.to_u64()
            .map_or_else(|| Order::Big(d.to_string()), Order::Small)
    }
}

/// One coefficient of a representative chain on a vertex tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub tuple: Vec<usize>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub p: i64,
    pub q: i64,
    pub rank: usize,
    pub torsion: Vec<Order>,
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<Term>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageReport {
    pub r: u32,
    pub entries: Vec<EntryReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub graph: String,
    pub ring: String,
    pub l_max: u32,
    pub pages: Vec<PageReport>,
}

impl Report {
    pub fn new(graph: &str, ring: &str, l_max: u32, pages: &[Page]) -> Self {
        let pages = pages
            .iter()
            .map(|page| PageReport {
                r: page.r,
                entries: page
                    .entries
                    .values()
                    .map(|e| EntryReport {
                        p: e.p,
                        q: e.q,
                        rank: e.group.free_rank,
                        torsion: e.group.torsion.iter().map(Order::from).collect(),
                        exact: e.exact,
                        representatives: e.representatives.as_ref().map(|reps| {
                            reps.iter()
                                .map(|chain| {
                                    chain
                                        .iter()
                                        .map(|(t, c)| Term {
                                            tuple: t.clone(),
                                            coefficient: c.to_string(),
                                        })
                                        .collect()
                                })
                                .collect()
                        }),
                    })
                    .collect(),
            })
            .collect();
        Report {
            graph: graph.to_string(),
            ring: ring.to_string(),
            l_max,
            pages,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,p,q,k,l,rank,torsion,exact\n");
        for page in &self.pages {
            for e in &page.entries {
                let torsion: Vec<String> = e.torsion.iter().map(order_string).collect();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    page.r,
                    e.p,
                    e.q,
                    e.p + e.q,
                    e.p,
                    e.rank,
                    torsion.join(";"),
                    e.exact
                )
                .unwrap();
            }
        }
        out
    }

    /// One table per page in spectral coordinates.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for page in &self.pages {
            writeln!(
                out,
                "E^{} of {} over {} (l_max = {})",
                page.r, self.graph, self.ring, self.l_max
            )
            .unwrap();
            let cell = |p: i64, q: i64| page.entries.iter().find(|e| e.p == p && e.q == q);
            let q_min = page.entries.iter().map(|e| e.q).min().unwrap_or(0);
            let rows: Vec<(String, Vec<String>)> = (q_min..=0)
                .rev()
                .map(|q| {
                    let cells = (0..=self.l_max as i64)
                        .map(|p| cell(p, q).map_or_else(String::new, entry_cell))
                        .collect();
                    (format!("q={q}"), cells)
                })
                .collect();
            let header: Vec<String> = (0..=self.l_max).map(|p| format!("p={p}")).collect();
            out.push_str(&grid(&header, &rows));
            for e in page
                .entries
                .iter()
                .filter(|e| e.representatives.as_ref().is_some_and(|r| !r.is_empty()))
            {
                for (i, chain) in e.representatives.as_ref().unwrap().iter().enumerate() {
                    let terms: Vec<String> = chain
                        .iter()
                        .map(|t| format!("{}*{:?}", t.coefficient, t.tuple))
                        .collect();
                    writeln!(out, "  ({},{}) #{i}: {}", e.p, e.q, terms.join(" + ")).unwrap();
                }
            }
            out.push('\n');
        }
        out
    }

    /// Page 1 read as magnitude homology: rows `k`, columns `l`.
    pub fn to_magnitude_text(&self) -> String {
        let mut out = String::new();
        let Some(page) = self.pages.first() else {
            return out;
        };
        writeln!(
            out,
            "MH of {} over {} (l_max = {})",
            self.graph, self.ring, self.l_max
        )
        .unwrap();
        let header: Vec<String> = (0..=self.l_max).map(|l| format!("l={l}")).collect();
        let rows = (0..=self.l_max as i64)
            .map(|k| {
                let cells = (0..=self.l_max as i64)
                    .map(|l| {
                        page.entries
                            .iter()
                            .find(|e| e.p == l && e.p + e.q == k)
                            .map_or_else(String::new, entry_cell)
                    })
                    .collect();
                (format!("k={k}"), cells)
            })
            .collect::<Vec<_>>();
        out.push_str(&grid(&header, &rows));
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

fn order_string(o: &Order) -> String {
    match o {
        Order::Small(d) => d.to_string(),
        Order::Big(s) => s.clone(),
    }
}

/// `.` for zero, the rank, torsion as `Z/d`, `?` when the truncation leaves
/// the entry undetermined.
fn entry_cell(e: &EntryReport) -> String {
    if !e.exact {
        return "?".into();
    }
    let mut parts = Vec::new();
    if e.rank > 0 {
        parts.push(e.rank.to_string());
    }
    parts.extend(e.torsion.iter().map(|o| format!("Z/{}", order_string(o))));
    if parts.is_empty() {
        ".".into()
    } else {
        parts.join("+")
    }
}

fn grid(header: &[String], rows: &[(String, Vec<String>)]) -> String {
    let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let width = header
        .iter()
        .chain(rows.iter().flat_map(|(_, c)| c))
        .map(String::len)
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    write!(out, "{:label_width$}", "").unwrap();
    for h in header {
        write!(out, " {h:>width$}").unwrap();
    }
    out.push('\n');
    for (label, cells) in rows {
        write!(out, "{label:label_width$}").unwrap();
        for c in cells {
            write!(out, " {c:>width$}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use mpss_core::digraph::directed_cycle;
    use mpss_core::homalg::Ring;
    use mpss_core::mpss::compute_pages;

    fn z3_report() -> Report {
        let pages = compute_pages(
            &directed_cycle(3).unwrap(),
            &[1, 2],
            4,
            Ring::Integers,
            false,
        );
        Report::new("Zm:3", "Z", 4, &pages)
    }

    #[test]
    fn json_round_trips() {
        let r = z3_report();
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_columns() {
        let csv = z3_report().to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("r,p,q,k,l,rank,torsion,exact"));
        assert!(csv.contains("\n1,3,-1,2,3,3,,true\n"));
        assert!(csv.contains("\n2,0,0,0,0,1,,true\n"));
    }

    #[test]
    fn text_rows_descend() {
        let text = z3_report().to_text();
        let first = text.lines().nth(2).unwrap();
        assert!(first.starts_with("q=0 "), "{text}");
        assert!(text.lines().any(|l| l.starts_with("q=-1")));
        let mh = z3_report().to_magnitude_text();
        assert!(
            mh.lines().any(|l| l.starts_with("k=2") && l.contains('3')),
            "{mh}"
        );
    }

    #[test]
    fn big_orders_are_strings() {
        let big = Int::from(u64::MAX) * Int::from(3i64);
        assert_eq!(Order::from(&big), Order::Big(big.to_string()));
        assert_eq!(Order::from(&Int::from(6i64)), Order::Small(6));
    }
}
