//! Large-`N` experiments: limit fits on sequences of `J_N` and the scan
//! across the real axis.

pub mod fit;
pub mod lsq;
pub mod scan;
pub mod sequence;

pub use fit::{fit_limit, fit_power_law, fit_value_limit, kashaev_growth_check, FitReport};
pub use scan::{discontinuity_scan, predicted_log_limit, scan_row, wrapped_distance, ScanRow};
pub use sequence::{collect_sequence, probe, Probe, Sequence, SequenceSample};
