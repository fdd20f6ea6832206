//! Face-transitive simplicial surfaces from cubic node-transitive graphs.
//!
//! A surface is recovered from its face graph by a vertex-faithful cycle
//! double cover. [`classify::classify_graph`] builds such covers from the
//! arc orbits of subgroups of the graph's automorphism group and keeps the
//! surfaces whose symmetry matches the subgroup.

pub mod cdc;
pub mod classify;
pub mod cli;
pub mod graph;
pub mod perm;
mod refine;
pub mod surface;

/// 64-bit FNV-1a in hex.
pub(crate) fn fnv_hex(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}
