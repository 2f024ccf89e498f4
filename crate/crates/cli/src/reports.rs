//! Rendering of verification reports. The JSON form is the stable one:
//! `{suite, checks: [{name, params, status, witness?}]}`.

use std::collections::BTreeMap;
use std::fmt::Write;

use qsl_core::report::Report;
use serde::Serialize;

use crate::format::{to_json, Format};

#[derive(Serialize)]
pub struct CheckJson {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct SuiteJson {
    pub suite: String,
    pub checks: Vec<CheckJson>,
}

impl From<&Report> for CheckJson {
    fn from(r: &Report) -> Self {
        CheckJson {
            name: r.identity.clone(),
            params: r.params.iter().cloned().collect(),
            status: r.status.as_str().into(),
            witness: r.witness.clone(),
            notes: r.notes.clone(),
        }
    }
}

fn latex_escape(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            _ => out.push(ch),
        }
    }
    out
}

pub fn render(suite: &str, reports: &[Report], fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(&SuiteJson {
            suite: suite.into(),
            checks: reports.iter().map(CheckJson::from).collect(),
        }),
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(s, "{r}");
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            let _ = write!(s, "{suite}: {passed}/{} checks passed", reports.len());
            s
        }
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{lll}\n\\hline\ncheck & parameters & status \\\\\n\\hline\n");
            for r in reports {
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(
                    s,
                    "\\texttt{{{}}} & {} & {} \\\\",
                    latex_escape(&r.identity),
                    latex_escape(&params.join(", ")),
                    r.status.as_str()
                );
            }
            s.push_str("\\hline\n\\end{tabular}");
            s
        }
    }
}
