//! JSON shapes of everything the CLI prints.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use revtour_core::enumeration::{CensusEntry, EnumKind};
use revtour_core::theorems::{Scope, TheoremInstance, VerificationReport};
use revtour_core::PairFamily;

/// One line of `enumerate` or `census` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRecord {
    pub n: usize,
    pub kind: &'static str,
    pub pairs: String,
    pub indecomposable: bool,
    pub irreducible: bool,
    pub class: Option<usize>,
}

impl FamilyRecord {
    pub fn from_census(n: usize, kind: EnumKind, e: &CensusEntry) -> Self {
        FamilyRecord {
            n,
            kind: kind.name(),
            pairs: e.family.to_string(),
            indecomposable: true,
            irreducible: e.irreducible,
            class: e.class,
        }
    }

    pub fn evaluate(n: usize, kind: EnumKind, family: &PairFamily) -> Self {
        let t = revtour_core::Tournament::transitive(n)
            .reverse_pairs(family)
            .expect("enumerated pairs lie in 0..n");
        FamilyRecord {
            n,
            kind: kind.name(),
            pairs: family.to_string(),
            indecomposable: t.is_indecomposable(),
            irreducible: family.is_irreducible_by_components(),
            class: None,
        }
    }
}

/// Named booleans kept in their given order.
struct Details<'a>(&'a [(&'static str, bool)]);

impl Serialize for Details<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

fn scope_name(scope: Scope) -> &'static str {
    match scope {
        Scope::Equivalence => "equivalence",
        Scope::RightImpliesLeft => "right-implies-left",
        Scope::Outside => "outside",
    }
}

#[derive(Serialize)]
struct InstanceRecord<'a> {
    n: usize,
    pairs: String,
    lhs: bool,
    rhs: bool,
    scope: &'static str,
    details: Details<'a>,
}

impl<'a> From<&'a TheoremInstance> for InstanceRecord<'a> {
    fn from(i: &'a TheoremInstance) -> Self {
        InstanceRecord {
            n: i.n,
            pairs: i.family.to_string(),
            lhs: i.lhs,
            rhs: i.rhs,
            scope: scope_name(i.scope),
            details: Details(&i.details),
        }
    }
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    theorem: &'static str,
    n_range: [usize; 2],
    checked: usize,
    violations: Vec<InstanceRecord<'a>>,
    recorded: Vec<InstanceRecord<'a>>,
    ms: u64,
}

pub fn report_json(r: &VerificationReport) -> String {
    let rec = ReportRecord {
        theorem: r.theorem.name(),
        n_range: [r.n_range.0, r.n_range.1],
        checked: r.checked,
        violations: r.violations.iter().map(Into::into).collect(),
        recorded: r.recorded.iter().map(Into::into).collect(),
        ms: r.elapsed_ms,
    };
    serde_json::to_string(&rec).expect("plain data serializes")
}

/// `{"m":count,...}` with keys in the given order.
pub fn count_table_json(rows: &[(usize, usize)]) -> String {
    let mut map = serde_json::Serializer::new(Vec::new());
    let mut m = map.serialize_map(Some(rows.len())).expect("in-memory");
    for (k, v) in rows {
        m.serialize_entry(&k.to_string(), v).expect("in-memory");
    }
    m.end().expect("in-memory");
    String::from_utf8(map.into_inner()).expect("json is utf-8")
}

/// `{"<name>":value}` plus any extra string fields.
pub fn verdict_json(name: &str, value: bool, extra: &[(&str, String)]) -> String {
    let mut out = serde_json::Serializer::new(Vec::new());
    let mut m = out.serialize_map(Some(1 + extra.len())).expect("in-memory");
    m.serialize_entry(name, &value).expect("in-memory");
    for (k, v) in extra {
        m.serialize_entry(k, v).expect("in-memory");
    }
    m.end().expect("in-memory");
    String::from_utf8(out.into_inner()).expect("json is utf-8")
}

pub fn family_json(r: &FamilyRecord) -> String {
    serde_json::to_string(r).expect("plain data serializes")
}
