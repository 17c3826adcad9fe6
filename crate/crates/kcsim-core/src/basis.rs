//! Computational basis of the chain: bit-encoded spin configurations.
//!
//! Configuration `b` has site `j` excited (↑) iff bit `j` of `b` is set.
//! Site indices run 0..N-1 with neighbour arithmetic modulo N, so the basis
//! index doubles as the array index into state vectors.

use alloc::vec;
use alloc::vec::Vec;

/// One basis configuration of an N-site chain, encoded in the low N bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinConfig(pub u32);

impl SpinConfig {
    /// All sites de-excited.
    pub const VACUUM: SpinConfig = SpinConfig(0);

    /// All `n_sites` sites excited.
    pub fn fully_inverted(n_sites: usize) -> Self {
        SpinConfig(((1u64 << n_sites) - 1) as u32)
    }

    /// Whether site `j` is excited.
    pub fn is_excited(self, site: usize) -> bool {
        (self.0 >> site) & 1 == 1
    }

    /// Total excitation number (popcount).
    pub fn excitation_number(self) -> u32 {
        self.0.count_ones()
    }

    /// Number of excited neighbours ξ = n_{j-1} + n_{j+1} of `site`,
    /// with periodic wrap-around.
    pub fn neighbor_count(self, site: usize, n_sites: usize) -> u8 {
        let left = (site + n_sites - 1) % n_sites;
        let right = (site + 1) % n_sites;
        (self.is_excited(left) as u8) + (self.is_excited(right) as u8)
    }

    /// Number of adjacent excited pairs under the periodic wrap, i.e. the
    /// number of bonds (j, j+1 mod N) with both sites excited.
    pub fn adjacent_excited_pairs(self, n_sites: usize) -> u32 {
        let mask = ((1u64 << n_sites) - 1) as u32;
        let shifted = ((self.0 >> 1) | (self.0 << (n_sites - 1))) & mask;
        (self.0 & shifted).count_ones()
    }

    /// Configuration with site `j` de-excited.
    pub fn lower(self, site: usize) -> Self {
        SpinConfig(self.0 & !(1 << site))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A subset of sites, used for entropy bipartitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SiteSet(pub u32);

impl SiteSet {
    pub const EMPTY: SiteSet = SiteSet(0);

    /// The contiguous block of the first `floor(n_sites / 2)` sites, the
    /// default entropy cut.
    pub fn first_half(n_sites: usize) -> Self {
        SiteSet(((1u64 << (n_sites / 2)) - 1) as u32)
    }

    pub fn from_sites(sites: &[usize]) -> Self {
        let mut mask = 0u32;
        for &s in sites {
            mask |= 1 << s;
        }
        SiteSet(mask)
    }

    pub fn contains(self, site: usize) -> bool {
        (self.0 >> site) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Sites in the set, ascending.
    pub fn sites(self) -> Vec<usize> {
        (0..32).filter(|&s| self.contains(s)).collect()
    }

    /// True when the set covers all of `0..n_sites`.
    pub fn is_full(self, n_sites: usize) -> bool {
        self.0 == (((1u64 << n_sites) - 1) as u32)
    }
}

/// Basis indices grouped by total excitation number.
///
/// The Hamiltonian and the anticommutator part of every dissipator preserve
/// the excitation number, and each jump lowers it by exactly one, so states
/// reached from a basis state only ever populate a few of these groups.
/// Evolution loops use the table to skip the untouched remainder.
#[derive(Debug, Clone)]
pub struct SectorTable {
    pub n_sites: usize,
    /// `sectors[m]` lists all configurations with excitation number `m`,
    /// ascending.
    pub sectors: Vec<Vec<u32>>,
}

impl SectorTable {
    pub fn new(n_sites: usize) -> Self {
        let dim = 1usize << n_sites;
        let mut sectors = vec![Vec::new(); n_sites + 1];
        for b in 0..dim as u32 {
            sectors[b.count_ones() as usize].push(b);
        }
        SectorTable { n_sites, sectors }
    }

    pub fn dim(&self) -> usize {
        1 << self.n_sites
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode_round_trip() {
        for bits in 0..(1u32 << 6) {
            let c = SpinConfig(bits);
            assert_eq!(c.index() as u32, bits);
            let rebuilt: u32 = (0..6).map(|j| (c.is_excited(j) as u32) << j).sum();
            assert_eq!(rebuilt, bits);
        }
    }

    #[test]
    fn popcount_is_excitation_number() {
        assert_eq!(SpinConfig(0b1011).excitation_number(), 3);
        assert_eq!(SpinConfig::VACUUM.excitation_number(), 0);
        assert_eq!(SpinConfig::fully_inverted(8).excitation_number(), 8);
    }

    #[test]
    fn neighbor_counts_wrap() {
        // |↑↑↑⟩, N = 3: both neighbours of every site are excited.
        let all = SpinConfig(0b111);
        assert_eq!(all.neighbor_count(0, 3), 2);
        // |↓↑↓⟩, N = 3: site 1 has no excited neighbour.
        assert_eq!(SpinConfig(0b010).neighbor_count(1, 3), 0);
        // |↑↑↓↓⟩, N = 4: site 1 sees one excited neighbour (site 0).
        assert_eq!(SpinConfig(0b0011).neighbor_count(1, 4), 1);
    }

    #[test]
    fn bond_counting_wraps() {
        assert_eq!(SpinConfig(0b111).adjacent_excited_pairs(3), 3);
        assert_eq!(SpinConfig(0b0011).adjacent_excited_pairs(4), 1);
        assert_eq!(SpinConfig(0b1001).adjacent_excited_pairs(4), 1); // wrap bond (3,0)
        assert_eq!(SpinConfig(0b0101).adjacent_excited_pairs(4), 0);
        assert_eq!(SpinConfig::VACUUM.adjacent_excited_pairs(5), 0);
    }

    #[test]
    fn sector_table_partitions_basis() {
        let t = SectorTable::new(5);
        let total: usize = t.sectors.iter().map(Vec::len).sum();
        assert_eq!(total, 32);
        for (m, sec) in t.sectors.iter().enumerate() {
            for &b in sec {
                assert_eq!(b.count_ones() as usize, m);
            }
        }
    }

    #[test]
    fn site_sets() {
        let half = SiteSet::first_half(6);
        assert_eq!(half.len(), 3);
        assert_eq!(half.sites(), vec![0, 1, 2]);
        assert!(SiteSet::from_sites(&[0, 1, 2, 3]).is_full(4));
        assert!(!half.is_full(6));
    }
}
