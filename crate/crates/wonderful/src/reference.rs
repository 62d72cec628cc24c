//! Embedded reference tables (versioned JSON), shared by the library and the
//! CLI table emitter. Everything here is comparison data: the engine computes
//! its own tables and diffs them against these.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::root_system::{Family, SimpleType};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Deserialize)]
pub struct ReferenceTables {
    pub schema_version: String,
    pub line_covered_weights: Vec<LineCoveredRow>,
    pub short_root_rows: Vec<ShortRootRow>,
    pub contractions: ContractionFlags,
}

#[derive(Debug, Deserialize)]
pub struct LineCoveredRow {
    pub family: String,
    #[serde(default)]
    pub rank: Option<usize>,
    pub weights: WeightList,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum WeightList {
    All(String),
    Tokens(Vec<String>),
}

/// Expected highest-short-coroot behavior for one non-simply-laced family.
#[derive(Debug, Deserialize)]
pub struct ShortRootRow {
    pub family: String,
    /// Smallest rank for which the row is stated; smaller ranks are
    /// extrapolations and are flagged as such in output.
    pub stated_min_rank: usize,
    pub pairing_index: usize,
    pub pairing_value: i64,
    pub infinity_orbit: Vec<usize>,
    pub coweight_gcd: i64,
}

#[derive(Debug, Deserialize)]
pub struct ContractionFlags {
    pub non_normal: Vec<(String, String)>,
    pub smooth: Vec<(String, String)>,
}

pub fn tables() -> &'static ReferenceTables {
    static TABLES: OnceLock<ReferenceTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let raw = include_str!("../data/reference_tables.json");
        let tables: ReferenceTables =
            serde_json::from_str(raw).expect("embedded reference tables parse");
        assert_eq!(
            tables.schema_version, SCHEMA_VERSION,
            "reference table schema drift"
        );
        tables
    })
}

/// Resolve a symbolic weight token ("3", "rank", "rank-1") at a concrete rank.
fn resolve_token(token: &str, rank: usize) -> usize {
    match token {
        "rank" => rank,
        "rank-1" => rank - 1,
        _ => token.parse().expect("weight token is an index"),
    }
}

/// The reference set of line-covered fundamental weights for a type.
pub fn line_covered_reference(simple_type: SimpleType) -> BTreeSet<usize> {
    let family = simple_type.family().letter().to_string();
    let rank = simple_type.rank();
    let row = tables()
        .line_covered_weights
        .iter()
        .find(|r| r.family == family && r.rank.is_none_or(|rr| rr == rank))
        .expect("every family has a reference row");
    match &row.weights {
        WeightList::All(s) => {
            assert_eq!(s, "all");
            (1..=rank).collect()
        }
        WeightList::Tokens(tokens) => tokens.iter().map(|t| resolve_token(t, rank)).collect(),
    }
}

pub fn short_root_reference(family: Family) -> Option<&'static ShortRootRow> {
    let letter = family.letter().to_string();
    tables().short_root_rows.iter().find(|r| r.family == letter)
}

/// Normality and smoothness of the contraction attached to line weight `i`.
pub fn contraction_flags(simple_type: SimpleType, i: usize) -> (bool, bool) {
    let family = simple_type.family().letter().to_string();
    let rank = simple_type.rank();
    let matches = |pairs: &[(String, String)]| {
        pairs
            .iter()
            .any(|(f, tok)| *f == family && resolve_token(tok, rank) == i)
    };
    let normal = !matches(&tables().contractions.non_normal);
    let smooth = matches(&tables().contractions.smooth);
    (normal, smooth)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(name: &str) -> SimpleType {
        SimpleType::parse(name).unwrap()
    }

    #[test]
    fn schema_version_pinned() {
        assert_eq!(tables().schema_version, "1");
    }

    #[test]
    fn line_covered_rows_resolve() {
        assert_eq!(
            line_covered_reference(t("A5")),
            (1..=5).collect::<BTreeSet<_>>()
        );
        assert_eq!(line_covered_reference(t("B6")), BTreeSet::from([1, 6]));
        assert_eq!(line_covered_reference(t("D7")), BTreeSet::from([1, 6, 7]));
        assert_eq!(line_covered_reference(t("E7")), BTreeSet::from([7]));
        assert_eq!(line_covered_reference(t("E8")), BTreeSet::new());
        assert_eq!(line_covered_reference(t("G2")), BTreeSet::from([1]));
    }

    #[test]
    fn flags_match_the_quoted_lists() {
        assert_eq!(contraction_flags(t("B5"), 1), (false, false));
        assert_eq!(contraction_flags(t("B5"), 5), (true, true));
        assert_eq!(contraction_flags(t("C4"), 4), (false, false));
        assert_eq!(contraction_flags(t("C4"), 1), (true, false));
        assert_eq!(contraction_flags(t("A3"), 1), (true, true));
        assert_eq!(contraction_flags(t("A3"), 2), (true, false));
        assert_eq!(contraction_flags(t("G2"), 1), (true, true));
        assert_eq!(contraction_flags(t("E6"), 1), (true, false));
    }

    #[test]
    fn short_root_rows_present() {
        assert!(short_root_reference(Family::B).is_some());
        assert!(short_root_reference(Family::C).is_some());
        assert!(short_root_reference(Family::F).is_some());
        assert!(short_root_reference(Family::G).is_some());
        assert!(short_root_reference(Family::A).is_none());
        assert!(short_root_reference(Family::E).is_none());
    }
}
