//! Signed multi-qubit Pauli strings in the binary symplectic representation.
//!
//! A Pauli operator on `n` qubits is stored as two bitmasks (X and Z
//! components, one bit per qubit, packed into `u64` words) together with a
//! phase. Internally the phase is the exponent of `i` in the ordered product
//! form `i^φ · Π_q X_q^{x_q} Z_q^{z_q}`; the conventional phase of the tensor
//! product of `{I, X, Y, Z}` factors differs from `φ` by one factor of `i`
//! per `Y` (since `Y = iXZ`) and is exposed through
//! [`PauliString::phase_exponent`].
//!
//! The XZ-ordered convention keeps products and conjugations word-parallel:
//! multiplying two strings only needs a popcount of `z₁ & x₂` to track the
//! sign, and CNOT conjugation needs no phase bookkeeping at all.

use std::fmt;

pub(crate) const WORD_BITS: usize = 64;

pub(crate) fn words_for(n_qubits: usize) -> usize {
    n_qubits.div_ceil(WORD_BITS)
}

fn parity_of_and(a: &[u64], b: &[u64]) -> u8 {
    let mut acc = 0u32;
    for (&x, &y) in a.iter().zip(b) {
        acc ^= (x & y).count_ones();
    }
    (acc & 1) as u8
}

/// One axis of a single-qubit Pauli factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// A signed Pauli string `i^k · σ_0 ⊗ σ_1 ⊗ … ⊗ σ_{n−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n_qubits: usize,
    x_bits: Vec<u64>,
    z_bits: Vec<u64>,
    /// Exponent of i in the XZ-ordered form (mod 4). Not the physical phase.
    phase_xz: u8,
}

impl PauliString {
    /// The identity string on `n_qubits` qubits (all-zero masks, phase +1).
    pub fn identity(n_qubits: usize) -> Self {
        let w = words_for(n_qubits);
        Self {
            n_qubits,
            x_bits: vec![0; w],
            z_bits: vec![0; w],
            phase_xz: 0,
        }
    }

    /// A single-qubit Pauli on `qubit` with phase +1.
    pub fn single(n_qubits: usize, qubit: usize, axis: Axis) -> Self {
        assert!(qubit < n_qubits, "qubit {qubit} out of range for n={n_qubits}");
        let mut p = Self::identity(n_qubits);
        let (w, b) = (qubit / WORD_BITS, qubit % WORD_BITS);
        match axis {
            Axis::X => p.x_bits[w] |= 1 << b,
            Axis::Z => p.z_bits[w] |= 1 << b,
            Axis::Y => {
                p.x_bits[w] |= 1 << b;
                p.z_bits[w] |= 1 << b;
                p.phase_xz = 1; // Y = i·XZ
            }
        }
        p
    }

    /// Builds a string from per-qubit axes given as `(qubit, axis)` pairs.
    /// Duplicate qubits are rejected.
    pub fn from_axes(n_qubits: usize, axes: &[(usize, Axis)]) -> Self {
        let mut p = Self::identity(n_qubits);
        for &(q, a) in axes {
            assert!(q < n_qubits, "qubit {q} out of range for n={n_qubits}");
            let (w, b) = (q / WORD_BITS, q % WORD_BITS);
            assert!(
                p.x_bits[w] & (1 << b) == 0 && p.z_bits[w] & (1 << b) == 0,
                "duplicate qubit {q}"
            );
            match a {
                Axis::X => p.x_bits[w] |= 1 << b,
                Axis::Z => p.z_bits[w] |= 1 << b,
                Axis::Y => {
                    p.x_bits[w] |= 1 << b;
                    p.z_bits[w] |= 1 << b;
                    p.phase_xz = (p.phase_xz + 1) & 3;
                }
            }
        }
        p
    }

    /// Parses a label like `"XIZY"`, optionally prefixed by `+`, `-`, `+i`,
    /// `-i`. Qubit 0 is the leftmost character.
    pub fn parse(label: &str) -> Result<Self, String> {
        let (phase_phys, rest) = if let Some(r) = label.strip_prefix("-i") {
            (3u8, r)
        } else if let Some(r) = label.strip_prefix("+i") {
            (1u8, r)
        } else if let Some(r) = label.strip_prefix('i') {
            (1u8, r)
        } else if let Some(r) = label.strip_prefix('-') {
            (2u8, r)
        } else if let Some(r) = label.strip_prefix('+') {
            (0u8, r)
        } else {
            (0u8, label)
        };
        let n = rest.chars().count();
        if n == 0 {
            return Err("empty Pauli label".into());
        }
        let mut p = Self::identity(n);
        for (q, c) in rest.chars().enumerate() {
            let axis = match c {
                'I' => None,
                'X' => Some(Axis::X),
                'Y' => Some(Axis::Y),
                'Z' => Some(Axis::Z),
                other => return Err(format!("bad Pauli character {other:?}")),
            };
            if let Some(a) = axis {
                let s = Self::single(n, q, a);
                p = p.mul(&s);
            }
        }
        p.phase_xz = (p.phase_xz + phase_phys) & 3;
        Ok(p)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn x_bits(&self) -> &[u64] {
        &self.x_bits
    }

    pub fn z_bits(&self) -> &[u64] {
        &self.z_bits
    }

    pub(crate) fn from_raw(n_qubits: usize, x_bits: Vec<u64>, z_bits: Vec<u64>, phase_xz: u8) -> Self {
        debug_assert_eq!(x_bits.len(), words_for(n_qubits));
        debug_assert_eq!(z_bits.len(), words_for(n_qubits));
        Self { n_qubits, x_bits, z_bits, phase_xz: phase_xz & 3 }
    }

    pub(crate) fn phase_xz(&self) -> u8 {
        self.phase_xz
    }

    /// The X/Z bits of `qubit` as `(x, z)`.
    pub fn bits(&self, qubit: usize) -> (bool, bool) {
        let (w, b) = (qubit / WORD_BITS, qubit % WORD_BITS);
        (
            self.x_bits[w] >> b & 1 == 1,
            self.z_bits[w] >> b & 1 == 1,
        )
    }

    /// Number of qubits on which the string acts as `Y`.
    pub fn y_count(&self) -> u32 {
        self.x_bits
            .iter()
            .zip(&self.z_bits)
            .map(|(&x, &z)| (x & z).count_ones())
            .sum()
    }

    /// Number of non-identity factors.
    pub fn weight(&self) -> u32 {
        self.x_bits
            .iter()
            .zip(&self.z_bits)
            .map(|(&x, &z)| (x | z).count_ones())
            .sum()
    }

    /// True if every factor is `I` or `Z`.
    pub fn is_diagonal(&self) -> bool {
        self.x_bits.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.weight() == 0
    }

    /// The physical phase as the exponent `k` of `i^k` in
    /// `i^k · σ_0 ⊗ … ⊗ σ_{n−1}` with `σ ∈ {I, X, Y, Z}`.
    pub fn phase_exponent(&self) -> u8 {
        (self.phase_xz.wrapping_sub(self.y_count() as u8)) & 3
    }

    /// The physical sign for Hermitian strings: `+1.0` or `-1.0`.
    /// Panics when the phase is imaginary.
    pub fn sign(&self) -> f64 {
        match self.phase_exponent() {
            0 => 1.0,
            2 => -1.0,
            k => panic!("Pauli string has imaginary phase i^{k}"),
        }
    }

    /// True when the physical phase is ±1, i.e. the string is Hermitian.
    pub fn is_hermitian(&self) -> bool {
        self.phase_exponent() & 1 == 0
    }

    /// Drops the phase, keeping the bare tensor of `{I, X, Y, Z}` factors.
    pub fn bare(&self) -> Self {
        let mut p = self.clone();
        p.phase_xz = p.y_count() as u8 & 3;
        p
    }

    /// True iff the two strings commute.
    pub fn commutes_with(&self, other: &Self) -> bool {
        assert_eq!(self.n_qubits, other.n_qubits, "qubit count mismatch");
        let s = parity_of_and(&self.x_bits, &other.z_bits)
            ^ parity_of_and(&self.z_bits, &other.x_bits);
        s == 0
    }

    /// Group product `self · other` with exact phase tracking.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_qubits, other.n_qubits, "qubit count mismatch");
        // Moving other's X block left past self's Z block flips a sign per
        // overlapping qubit: Z·X = −X·Z.
        let swap_parity = parity_of_and(&self.z_bits, &other.x_bits);
        let x_bits = self
            .x_bits
            .iter()
            .zip(&other.x_bits)
            .map(|(a, b)| a ^ b)
            .collect();
        let z_bits = self
            .z_bits
            .iter()
            .zip(&other.z_bits)
            .map(|(a, b)| a ^ b)
            .collect();
        let phase_xz = (self.phase_xz + other.phase_xz + 2 * swap_parity) & 3;
        Self {
            n_qubits: self.n_qubits,
            x_bits,
            z_bits,
            phase_xz,
        }
    }

    /// Multiplies `other` into `self` in place.
    pub fn mul_assign(&mut self, other: &Self) {
        assert_eq!(self.n_qubits, other.n_qubits, "qubit count mismatch");
        let swap_parity = parity_of_and(&self.z_bits, &other.x_bits);
        for (a, b) in self.x_bits.iter_mut().zip(&other.x_bits) {
            *a ^= b;
        }
        for (a, b) in self.z_bits.iter_mut().zip(&other.z_bits) {
            *a ^= b;
        }
        self.phase_xz = (self.phase_xz + other.phase_xz + 2 * swap_parity) & 3;
    }

    /// Same X and Z masks, ignoring phase.
    pub fn same_bare_operator(&self, other: &Self) -> bool {
        self.x_bits == other.x_bits && self.z_bits == other.z_bits
    }

    /// Iterator over `(qubit, axis)` for the non-identity factors.
    pub fn factors(&self) -> impl Iterator<Item = (usize, Axis)> + '_ {
        (0..self.n_qubits).filter_map(move |q| {
            let (x, z) = self.bits(q);
            match (x, z) {
                (false, false) => None,
                (true, false) => Some((q, Axis::X)),
                (false, true) => Some((q, Axis::Z)),
                (true, true) => Some((q, Axis::Y)),
            }
        })
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.phase_exponent() {
            0 => write!(f, "+")?,
            1 => write!(f, "+i")?,
            2 => write!(f, "-")?,
            3 => write!(f, "-i")?,
            _ => unreachable!(),
        }
        for q in 0..self.n_qubits {
            let c = match self.bits(q) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_all_zero_with_plus_phase() {
        let p = PauliString::identity(3);
        assert!(p.is_identity());
        assert_eq!(p.phase_exponent(), 0);
    }

    #[test]
    fn single_qubit_products_match_pauli_algebra() {
        // X·Z = −iY, Z·X = iY, X·Y = iZ, Y·X = −iZ, Z·Y = −iX, Y·Z = iX.
        let cases = [
            ("X", "Z", "-iY"),
            ("Z", "X", "iY"),
            ("X", "Y", "iZ"),
            ("Y", "X", "-iZ"),
            ("Z", "Y", "-iX"),
            ("Y", "Z", "iX"),
            ("X", "X", "I"),
            ("Y", "Y", "I"),
            ("Z", "Z", "I"),
        ];
        for (a, b, want) in cases {
            let pa = PauliString::parse(a).unwrap();
            let pb = PauliString::parse(b).unwrap();
            let prod = pa.mul(&pb);
            let expect = PauliString::parse(want).unwrap();
            assert_eq!(prod, expect, "{a}·{b}");
        }
    }

    #[test]
    fn commutation_matches_overlap_parity() {
        let xx = PauliString::parse("XX").unwrap();
        let zz = PauliString::parse("ZZ").unwrap();
        let zi = PauliString::parse("ZI").unwrap();
        assert!(xx.commutes_with(&zz));
        assert!(!xx.commutes_with(&zi));
    }

    #[test]
    fn display_round_trip() {
        for s in ["+XIZY", "-ZZ", "+iXY", "-iYIZ"] {
            let p = PauliString::parse(s).unwrap();
            assert_eq!(p.to_string(), s.replace("+i", "+i"));
            let again = PauliString::parse(&p.to_string()).unwrap();
            assert_eq!(p, again);
        }
    }

    #[test]
    fn phase_exponent_counts_y_factors() {
        // YY = (iXZ)⊗(iXZ): XZ-phase 2, physical phase 0.
        let yy = PauliString::parse("YY").unwrap();
        assert_eq!(yy.phase_exponent(), 0);
        assert_eq!(yy.sign(), 1.0);
        let y = PauliString::parse("Y").unwrap();
        assert_eq!(y.phase_exponent(), 0);
    }

    #[test]
    fn group_closure_on_random_pairs() {
        // Product of two strings is a string with consistent phase; check
        // associativity on a few triples as a smoke test of the phase rule.
        let strs = ["XYZ", "ZZI", "IYX", "YYY", "XIX"];
        for a in strs {
            for b in strs {
                for c in strs {
                    let pa = PauliString::parse(a).unwrap();
                    let pb = PauliString::parse(b).unwrap();
                    let pc = PauliString::parse(c).unwrap();
                    let left = pa.mul(&pb).mul(&pc);
                    let right = pa.mul(&pb.mul(&pc));
                    assert_eq!(left, right, "({a}·{b})·{c}");
                }
            }
        }
    }
}
