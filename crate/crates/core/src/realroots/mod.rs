//! Exact real-root machinery: Sturm chains, isolation, certified interval
//! bounds, and the real domains of the character curve.

pub mod algebraic;
pub mod bounds;
pub mod domain;
pub mod intpoly;
pub mod isolate;
pub mod sturm;

pub use algebraic::{cmp_roots, eval_box, sign_at_point, RatInterval, RealAlg};
pub use bounds::{bound_on_interval, bound_on_interval_with, Enclosure};
pub use domain::{compute_s_domain, compute_z_domain, DomainInterval, DomainSet, Endpoint};
pub use intpoly::IntPoly;
pub use isolate::{isolate_in_interval, isolate_in_interval_with, isolate_real_roots, IsolatingInterval};
pub use sturm::{count_real_roots, squarefree_chain, sturm_chain, Bound, RealInterval, SturmChain};
