//! 4D zig-zag scan: coefficient indices ordered by coordinate sum
//! k1+k2+k3+k4 (frequency shell), ties broken lexicographically on
//! (k1, k2, k3, k4). Generalizes the JPEG zig-zag to four dimensions.

use std::sync::OnceLock;

use crate::transform::{block_coords, BLOCK_VOLUME};

fn coordinate_sum(index: usize) -> usize {
    let (k1, k2, k3, k4) = block_coords(index);
    k1 + k2 + k3 + k4
}

/// Scan position -> linear block index. The DC coefficient scans first.
pub fn scan_order() -> &'static [u16; BLOCK_VOLUME] {
    static SCAN: OnceLock<[u16; BLOCK_VOLUME]> = OnceLock::new();
    SCAN.get_or_init(|| {
        let mut indices: Vec<u16> = (0..BLOCK_VOLUME as u16).collect();
        // Lexicographic tie-break on (k1,k2,k3,k4) equals linear-index order,
        // so a stable sort by shell alone is enough.
        indices.sort_by_key(|&i| coordinate_sum(i as usize));
        indices.try_into().unwrap()
    })
}

/// Linear block index -> scan position.
pub fn inverse_scan_order() -> &'static [u16; BLOCK_VOLUME] {
    static INV: OnceLock<[u16; BLOCK_VOLUME]> = OnceLock::new();
    INV.get_or_init(|| {
        let mut inv = [0u16; BLOCK_VOLUME];
        for (pos, &index) in scan_order().iter().enumerate() {
            inv[index as usize] = pos as u16;
        }
        inv
    })
}
