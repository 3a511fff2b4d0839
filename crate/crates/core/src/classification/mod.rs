//! Arithmetic behind the classification of left-simple braces: group order
//! formulas, `|Out|`, valuations, primitive prime divisors, the audited
//! factorization tables, and desk-scale checks of the classification.

pub mod arith;
pub mod audit;
pub mod conditions;
pub mod expr;
pub mod orders;
pub mod tables;
pub mod theorems;

pub use arith::{vp, zsigmondy};
pub use audit::{audit_tables, audit_tables_seeded, AuditReport};
pub use conditions::{check_conditions, evaluate_conditions, ConditionReport, ConditionVerdict, FactorizationWitness};
pub use orders::{out_order, parse_family, psl2_order, Family, PrimePowerParam};
pub use theorems::{check_thm2b, verify_thm1, verify_thm2a, Thm1Report, Thm2aReport, Thm2bReport, THM1_DEFAULT_LIMIT};
