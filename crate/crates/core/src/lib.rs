//! Exact computation in non-Archimedean valued fields and the function
//! algebras built over them, plus a plane-geometry engine that rewrites a
//! Swiss cheese into classical form with a machine-checkable certificate.

pub mod algebra;
pub mod cheese;
pub mod cyclo;
pub mod error;
pub mod f25;
pub mod galois;
pub mod gen;
pub mod geo;
pub mod padic;
pub mod quadext;
pub mod reps;
pub mod series;

pub use algebra::{AlgebraSpec, Endo, FnTable, StoneSpace};
pub use cheese::{Certificate, SwissCheese};
pub use cyclo::{Cyclo, CycloField};
pub use error::{Error, Result};
pub use f25::F25;
pub use galois::{FieldId, GaloisAut, Value};
pub use geo::{Disc, DiscKind, GeoCtx, Point};
pub use padic::{expand, rational_vlog, sum_series, PAdic, Val, Verdict, DEFAULT_PRECISION};
pub use quadext::QuadExt;
pub use reps::ResidueRepSet;
pub use series::SeriesSpec;
