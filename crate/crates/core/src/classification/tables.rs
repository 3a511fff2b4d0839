//! The static factorization-table dataset, pinned by SHA-256.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const TABLES_JSON: &str = include_str!("../../data/factorization_tables.json");

/// Hex SHA-256 of [`TABLES_JSON`].
pub const TABLES_SHA256: &str = "a44660200713739018cf00d4ff22aa2f65fea72a216db4f4e24fd139ea1a1318";

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Tables {
    pub version: u32,
    pub psl2_kk: Psl2KkRow,
    pub both_solvable: Vec<SolvableRow>,
    pub stated_orders: Vec<NamedOrder>,
    pub lie_h_lower: Vec<HLowerRow>,
    pub valuation: Vec<ValuationRow>,
    pub out_table: Vec<OutRow>,
    pub lie_k_bound: Vec<KBoundRow>,
    pub helper_orders: Vec<NamedOrder>,
    pub psl_primitive: PslPrimitive,
}

/// The single row in which one factor meets `Inn(T)` in a subgroup whose
/// order is bounded on both sides.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Psl2KkRow {
    pub id: String,
    pub t: String,
    pub t_order: String,
    pub out: String,
    pub kk_divisible_by: String,
    pub kk_divides: String,
    pub q_max: u64,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct SolvableRow {
    pub id: String,
    pub t: String,
    pub out: u64,
    pub h_min: String,
    pub k_min: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct NamedOrder {
    pub name: String,
    pub order: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct HLowerRow {
    pub id: String,
    pub family: String,
    pub dim: String,
    pub h_divisor: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ValuationRow {
    pub id: String,
    pub p: String,
    pub m_min: Option<u32>,
    pub out_vp_at_most: String,
    pub h_vp_at_least: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct OutRow {
    pub id: String,
    pub family: String,
    pub dim: String,
    pub p: String,
    pub param_min: Option<u32>,
    pub exclude_m2_p2: bool,
    pub qm_mod4: Option<String>,
    pub formula: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct KBoundRow {
    pub id: String,
    pub t: String,
    pub t_order: String,
    pub out: u64,
    pub k_bound: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct PslPrimitive {
    pub n2_chain: Vec<String>,
    pub specials: Vec<PslSpecial>,
    pub n_max: u32,
    pub pfn_max_bits: u32,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct PslSpecial {
    pub id: String,
    pub p: u64,
    pub f: u32,
    pub n: u32,
    pub out: u64,
    pub h_lower: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Parses a dataset; with `pinned`, its digest must match
/// [`TABLES_SHA256`].
pub fn load_tables(json: &str, pinned: bool) -> Result<Tables> {
    if pinned {
        let got = sha256_hex(json.as_bytes());
        if got != TABLES_SHA256 {
            return Err(Error::TableCorrupt {
                row: "digest".into(),
                detail: format!("sha256 {got} does not match pinned {TABLES_SHA256}"),
            });
        }
    }
    serde_json::from_str(json).map_err(|e| Error::TableCorrupt {
        row: "parse".into(),
        detail: e.to_string(),
    })
}

/// The shipped dataset.
pub fn shipped_tables() -> Result<Tables> {
    load_tables(TABLES_JSON, true)
}
