//! Theorem-claim registry, conjecture exploration, catalog scanning, solve
//! caching, and report emission.

mod cache;
mod claims;
mod explore;
mod report;
pub mod sample;
mod scan;

pub use cache::{CacheEntry, SolveCache, CACHE_ENV_VAR};
pub use claims::{
    all_theorems_hold, find_claim, registry, run_all, run_claim, Claim, ClaimKind, RunCtx,
};
pub use explore::{explore_monotone, MonotoneReport};
pub use report::{emit_csv, emit_json, write_report, ClaimRecord, ClaimStatus, ReportFormat};
pub use scan::{for_each_labeled_connected, max_classic_capture_time, scan_graph6, ScanReport};
