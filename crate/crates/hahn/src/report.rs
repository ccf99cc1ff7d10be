//! Stable JSON shapes for decomposition and axiom reports.

use hahn_core::beta::AxiomReport;
use hahn_core::levels::Degree;
use hahn_core::DecompositionReport;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum DegreeJson {
    Finite(usize),
    Infinite(&'static str),
}

impl From<Degree> for DegreeJson {
    fn from(d: Degree) -> Self {
        match d {
            Degree::Finite(n) => DegreeJson::Finite(n),
            Degree::Infinite => DegreeJson::Infinite("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassJson {
    pub id: usize,
    pub class_group: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionJson {
    pub arch: String,
    pub degree: DegreeJson,
    pub classes: Vec<ClassJson>,
    pub level_group: String,
}

impl From<&DecompositionReport> for DecompositionJson {
    fn from(r: &DecompositionReport) -> Self {
        DecompositionJson {
            arch: r.arch_subfield.to_string(),
            degree: r.degree.into(),
            classes: r
                .generator_set
                .iter()
                .zip(&r.class_groups)
                .map(|(c, g)| ClassJson {
                    id: c.0,
                    class_group: g.to_string(),
                })
                .collect(),
            level_group: r.level_group.to_string(),
        }
    }
}

impl DecompositionJson {
    pub fn to_text(&self) -> String {
        let degree = match &self.degree {
            DegreeJson::Finite(n) => n.to_string(),
            DegreeJson::Infinite(s) => s.to_string(),
        };
        let mut out = format!("arch: {}\ndegree: {degree}\n", self.arch);
        for c in &self.classes {
            out += &format!("class{}: {}\n", c.id, c.class_group);
        }
        out += &format!("level_group: {}", self.level_group);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureJson {
    pub inputs: Vec<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomJson {
    pub axiom: u8,
    pub samples_run: usize,
    pub failures: Vec<FailureJson>,
}

impl From<&AxiomReport> for AxiomJson {
    fn from(r: &AxiomReport) -> Self {
        AxiomJson {
            axiom: r.axiom,
            samples_run: r.samples_run,
            failures: r
                .failures
                .iter()
                .map(|f| FailureJson {
                    inputs: f.inputs.iter().map(ToString::to_string).collect(),
                    reason: f.reason.clone(),
                })
                .collect(),
        }
    }
}
