//! Push-forwards from flag bundles by coefficient extraction, and the
//! closed form for Grassmannian bundles.

mod dp;
mod ftilde;
mod grassmannian;
mod request;

pub use dp::{dp_segre, dp_segre_direct};
pub use ftilde::{block_class, build_ftilde_general, build_ftilde_weight};
pub use grassmannian::{grassmannian_segre, grassmannian_source};
pub use request::{
    dp_pushforward, grassmannian_pushforward, Provenance, PushforwardRequest, PushforwardResult,
    Source,
};
