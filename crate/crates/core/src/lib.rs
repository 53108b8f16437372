//! Parametric software cost estimation.
//!
//! Models: the COCOMO81 basic, intermediate and detailed variants
//! ([`cocomo81`]), the COCOMO II application-composition, early-design and
//! post-architecture sub-models ([`cocomo2`]), Putnam's SLIM equations
//! ([`slim`]), Function Point Analysis ([`fpa`]) and Delphi aggregation
//! ([`delphi`]).
//!
//! [`dataset`] carries a 30-project historical corpus and CSV ingestion;
//! [`evaluation`] scores models against a corpus (signed error, MRE, MMRE),
//! compares results with the published benchmark tables and fits power-law
//! constants by log-log regression. Model constants and multiplier tables are
//! overridable through [`config::Registry`].
//!
//! ```
//! use paramcost::{cocomo81::Cocomo81, Mode, SizeKloc};
//!
//! let model = Cocomo81::default();
//! let effort = model.effort_basic(SizeKloc::new(50.0)?, Mode::Organic);
//! assert_eq!(paramcost::table_round(effort), 145);
//! # Ok::<(), paramcost::Error>(())
//! ```

pub mod cocomo2;
pub mod cocomo81;
pub mod config;
pub mod dataset;
pub mod delphi;
pub mod drivers;
mod error;
pub mod evaluation;
pub mod fpa;
pub mod slim;
mod units;

pub use error::{Error, Result, RowError};
pub use units::{
    power_law_effort, table_round, EffortPm, Mode, PowerLawConstants, SizeKloc, EFFORT_TOLERANCE_PM,
    ERROR_TOLERANCE_POINTS,
};
