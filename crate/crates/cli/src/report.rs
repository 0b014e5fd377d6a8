//! Machine-readable run reports and their text/JSON/CSV renderings.

use serde::Serialize;
use tauring::golden_ring::GoldenVec;

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, pass: bool) -> Self {
        Check {
            name: name.to_string(),
            pass,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SolutionJson {
    pub entries: Vec<Entry>,
    pub display: String,
}

#[derive(Debug, Serialize)]
pub struct Entry {
    pub a: i64,
    pub b: i64,
}

impl SolutionJson {
    pub fn from_vec(k: &GoldenVec) -> Self {
        SolutionJson {
            entries: k
                .iter()
                .map(|g| Entry {
                    a: g.a(),
                    b: g.b(),
                })
                .collect(),
            display: k.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PairFiber {
    pub a2: i64,
    pub b3: i64,
    pub solution_count: usize,
    pub solutions: Vec<SolutionJson>,
}

/// One report per invocation; serialization is deterministic given
/// fixed inputs, and `elapsed_ms` is omitted under `--stable-output`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Vec<SolutionJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairFiber>>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            form: None,
            method: None,
            seed: None,
            solution_count: None,
            solutions: None,
            pairs: None,
            checks: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let line = |out: &mut String, s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(&mut out, format!("command: {}", self.command));
        if let Some(form) = &self.form {
            line(&mut out, format!("form: {form}"));
        }
        if let Some(method) = &self.method {
            line(&mut out, format!("method: {method}"));
        }
        if let Some(seed) = &self.seed {
            line(&mut out, format!("seed: {seed}"));
        }
        if let Some(solutions) = &self.solutions {
            let label = if self.command == "orbit" {
                "orbit"
            } else {
                "solutions"
            };
            line(&mut out, format!("{label} ({}):", solutions.len()));
            for s in solutions {
                line(&mut out, format!("  {}", s.display));
            }
        }
        if let Some(pairs) = &self.pairs {
            line(&mut out, format!("pairs ({}):", pairs.len()));
            for p in pairs {
                if p.solutions.is_empty() {
                    line(&mut out, format!("  ({}, {}): no solutions", p.a2, p.b3));
                } else {
                    line(
                        &mut out,
                        format!("  ({}, {}): {} solutions", p.a2, p.b3, p.solution_count),
                    );
                    for s in &p.solutions {
                        line(&mut out, format!("    {}", s.display));
                    }
                }
            }
        }
        if !self.checks.is_empty() {
            line(&mut out, "checks:".to_string());
            for c in &self.checks {
                let verdict = if c.pass { "pass" } else { "fail" };
                line(&mut out, format!("  {}: {}", c.name, verdict));
            }
        }
        if let Some(ms) = self.elapsed_ms {
            line(&mut out, format!("elapsed: {ms} ms"));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(pairs) = &self.pairs {
            out.push_str("a2,b3,solution\n");
            for p in pairs {
                if p.solutions.is_empty() {
                    out.push_str(&format!("{},{},\n", p.a2, p.b3));
                } else {
                    for s in &p.solutions {
                        out.push_str(&format!(
                            "{},{},{}\n",
                            p.a2,
                            p.b3,
                            csv_quote(&s.display)
                        ));
                    }
                }
            }
            return out;
        }
        if let Some(solutions) = &self.solutions {
            let d = solutions.first().map_or(0, |s| s.entries.len());
            let header: Vec<String> = (1..=d)
                .flat_map(|i| [format!("a{i}"), format!("b{i}")])
                .collect();
            out.push_str(&header.join(","));
            out.push('\n');
            for s in solutions {
                let row: Vec<String> = s
                    .entries
                    .iter()
                    .flat_map(|e| [e.a.to_string(), e.b.to_string()])
                    .collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            return out;
        }
        out.push_str("check,result\n");
        for c in &self.checks {
            let verdict = if c.pass { "pass" } else { "fail" };
            out.push_str(&format!("{},{}\n", csv_quote(&c.name), verdict));
        }
        out
    }
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
