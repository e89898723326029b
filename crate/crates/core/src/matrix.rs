//! Explicit gamma matrices over the Gaussian integers.
//!
//! This is an independent route to the Frobenius–Schur sums: instead of the
//! sign bookkeeping in [`crate::clifford`], group elements are realized as
//! dense matrices and characters are read off as traces. Entries stay in
//! `Z[i]`, so every sum is exact.
//!
//! Generators follow the Jordan–Wigner pattern on `⌊n/2⌋` two-level factors:
//! `Z^{⊗k} ⊗ X ⊗ I…` and `Z^{⊗k} ⊗ Y ⊗ I…` for the `k`-th pair, and the full
//! `Z` string as the extra generator when `n` is odd. Negative-metric
//! generators are multiplied by `i`.

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::clifford::{GroupKind, Signature, SignedMonomial};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::scalar::ExactScalar;

/// Largest `n` for the matrix oracle (dimension up to 64).
pub const MATRIX_LIMIT: u32 = 12;

/// Square matrix over `Z[i]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianMatrix<T> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: ExactScalar> GaussianMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        GaussianMatrix {
            dim,
            entries: vec![Complex::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex::one();
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Self {
        let dim = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == dim),
            "matrix rows must be square"
        );
        GaussianMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.entries[row * self.dim + col]
    }

    /// Matrix product; zero entries of `self` are skipped, which makes
    /// products of monomial matrices quadratic rather than cubic.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                let row = &other.entries[k * d..(k + 1) * d];
                let dst = &mut out.entries[i * d..(i + 1) * d];
                for (o, &b) in dst.iter_mut().zip(row) {
                    *o = *o + a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        GaussianMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        GaussianMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-Complex::one())
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        let d = a * b;
        let mut out = Self::zeros(d);
        for i in 0..a {
            for j in 0..a {
                let s = self.get(i, j);
                if s.is_zero() {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        out.entries[(i * b + k) * d + j * b + l] = s * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::zero(), |acc, i| acc + self.get(i, i))
    }

    /// `tr(self · other) = Σ_ij a_ij b_ji`, without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> Complex<T> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut acc = Complex::zero();
        for i in 0..d {
            for j in 0..d {
                let a = self.entries[i * d + j];
                if !a.is_zero() {
                    acc = acc + a * other.entries[j * d + i];
                }
            }
        }
        acc
    }

    /// Whether every entry lies in `{0, ±1, ±i}`-style unit box `|re|, |im| ≤ 1`.
    pub fn entries_bounded_by_one(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.abs() <= T::one() && z.im.abs() <= T::one())
    }

    /// Rows of `[re, im]` pairs, for JSON export.
    pub fn to_pairs(&self) -> Vec<Vec<[T; 2]>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
            .collect()
    }
}

fn c<T: ExactScalar>(re: i8, im: i8) -> Complex<T> {
    Complex::new(
        T::from(re).expect("small constant"),
        T::from(im).expect("small constant"),
    )
}

fn pauli_x<T: ExactScalar>() -> GaussianMatrix<T> {
    GaussianMatrix::from_rows(vec![vec![c(0, 0), c(1, 0)], vec![c(1, 0), c(0, 0)]])
}

fn pauli_y<T: ExactScalar>() -> GaussianMatrix<T> {
    GaussianMatrix::from_rows(vec![vec![c(0, 0), c(0, -1)], vec![c(0, 1), c(0, 0)]])
}

fn pauli_z<T: ExactScalar>() -> GaussianMatrix<T> {
    GaussianMatrix::from_rows(vec![vec![c(1, 0), c(0, 0)], vec![c(0, 0), c(-1, 0)]])
}

fn tensor_string<T: ExactScalar>(factors: &[GaussianMatrix<T>]) -> GaussianMatrix<T> {
    factors
        .iter()
        .fold(GaussianMatrix::identity(1), |acc, f| acc.kron(f))
}

/// The `n` gamma matrices for `sig`, checked against
/// `γ_i γ_j + γ_j γ_i = 2 η_i δ_ij · Id` before being returned.
pub fn build_gammas<T: ExactScalar>(sig: Signature) -> Result<Vec<GaussianMatrix<T>>> {
    let n = sig.n();
    if n > MATRIX_LIMIT {
        return Err(Error::CapExceeded {
            what: "gamma matrix construction",
            n,
            cap: MATRIX_LIMIT,
        });
    }
    let pairs = (n / 2) as usize;
    let (x, y, z, id) = (pauli_x(), pauli_y(), pauli_z(), GaussianMatrix::identity(2));
    let slot = |k: usize, centre: &GaussianMatrix<T>| {
        let mut factors = vec![z.clone(); k];
        factors.push(centre.clone());
        factors.extend(std::iter::repeat_n(id.clone(), pairs - k - 1));
        tensor_string(&factors)
    };
    let mut gammas = Vec::with_capacity(n as usize);
    for k in 0..pairs {
        gammas.push(slot(k, &x));
        gammas.push(slot(k, &y));
    }
    if n % 2 == 1 {
        gammas.push(tensor_string(&vec![z.clone(); pairs]));
    }
    for g in gammas.iter_mut().skip(sig.p() as usize) {
        *g = g.scale(c(0, 1));
    }
    check_clifford_relations(sig, &gammas)?;
    Ok(gammas)
}

/// Verifies the anticommutation relations for every pair of generators.
pub fn check_clifford_relations<T: ExactScalar>(
    sig: Signature,
    gammas: &[GaussianMatrix<T>],
) -> Result<()> {
    if gammas.len() != sig.n() as usize {
        return Err(Error::Inconsistent(format!(
            "{} gamma matrices for n = {}",
            gammas.len(),
            sig.n()
        )));
    }
    let Some(dim) = gammas.first().map(GaussianMatrix::dim) else {
        return Ok(());
    };
    let id = GaussianMatrix::<T>::identity(dim);
    for (i, gi) in gammas.iter().enumerate() {
        for (j, gj) in gammas.iter().enumerate() {
            let anti = gi.mul(gj).add(&gj.mul(gi));
            let expected = if i == j {
                let eta = sig.metric_sign(i as u32)?.value();
                id.scale(c(2 * eta as i8, 0))
            } else {
                GaussianMatrix::zeros(dim)
            };
            if anti != expected {
                return Err(Error::Inconsistent(format!(
                    "gamma {i} and gamma {j} violate the Clifford relation for {sig}"
                )));
            }
        }
    }
    Ok(())
}

/// Matrix realization of the finite Clifford group of one signature.
#[derive(Debug, Clone)]
pub struct GammaRep<T> {
    sig: Signature,
    dim: usize,
    gammas: Vec<GaussianMatrix<T>>,
}

impl<T: ExactScalar> GammaRep<T> {
    pub fn new(sig: Signature) -> Result<Self> {
        let gammas = build_gammas(sig)?;
        Ok(GammaRep {
            sig,
            dim: 1 << (sig.n() / 2),
            gammas,
        })
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// `2^⌊n/2⌋`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gammas(&self) -> &[GaussianMatrix<T>] {
        &self.gammas
    }

    /// `sign · γ_{i1} ⋯ γ_{ik}` in ascending index order.
    pub fn rep_element(&self, m: SignedMonomial) -> Result<GaussianMatrix<T>> {
        self.sig.check_mask(m.mask)?;
        let mut out = GaussianMatrix::identity(self.dim);
        let mut rest = m.mask;
        while rest != 0 {
            out = out.mul(&self.gammas[rest.trailing_zeros() as usize]);
            rest &= rest - 1;
        }
        Ok(if m.sign.is_minus() { out.neg() } else { out })
    }

    /// Visits `(element, matrix)` for every element of the group, building
    /// each positive monomial from its prefix with one multiplication.
    pub fn for_each_element<F>(&self, kind: GroupKind, mut f: F)
    where
        F: FnMut(SignedMonomial, &GaussianMatrix<T>),
    {
        let mut visit_positive = |mask: u64, g: &GaussianMatrix<T>| {
            f(SignedMonomial::new(crate::clifford::Sign::Plus, mask), g);
            f(
                SignedMonomial::new(crate::clifford::Sign::Minus, mask),
                &g.neg(),
            );
        };
        self.descend(
            0,
            0,
            &GaussianMatrix::identity(self.dim),
            kind,
            &mut visit_positive,
        );
    }

    fn descend<F>(
        &self,
        next: u32,
        mask: u64,
        current: &GaussianMatrix<T>,
        kind: GroupKind,
        f: &mut F,
    ) where
        F: FnMut(u64, &GaussianMatrix<T>),
    {
        if next == self.sig.n() {
            if kind.admits(mask) {
                f(mask, current);
            }
            return;
        }
        self.descend(next + 1, mask, current, kind, f);
        let extended = current.mul(&self.gammas[next as usize]);
        self.descend(next + 1, mask | 1 << next, &extended, kind, f);
    }

    /// `(1/|G|) Σ_g tr(g²)` with `g` running over the represented group.
    pub fn fs_sum(&self, kind: GroupKind) -> Result<Ratio<T>> {
        let mut total = Complex::<T>::zero();
        let mut count = 0u64;
        self.for_each_element(kind, |_, g| {
            total = total + g.trace_of_product(g);
            count += 1;
        });
        let order = FiniteGroup::new(self.sig, kind).order();
        if count != order || !total.im.is_zero() {
            return Err(Error::Inconsistent(format!(
                "trace sum {total:?} over {count} of {order} elements for {}",
                self.sig
            )));
        }
        Ok(Ratio::new(total.re, scalar(order)?))
    }

    /// `(1/|G|) Σ_g |tr g|²`, the sum of squared constituent multiplicities.
    pub fn character_norm(&self, kind: GroupKind) -> Result<T> {
        let mut total = T::zero();
        self.for_each_element(kind, |_, g| {
            let t = g.trace();
            total = total + t.re * t.re + t.im * t.im;
        });
        let order = scalar::<T>(FiniteGroup::new(self.sig, kind).order())?;
        if !(total % order).is_zero() {
            return Err(Error::Inconsistent(format!(
                "character norm {total:?}/{order:?} is not an integer for {}",
                self.sig
            )));
        }
        Ok(total / order)
    }
}

fn scalar<T: ExactScalar>(v: u64) -> Result<T> {
    T::from(v).ok_or_else(|| Error::Inconsistent(format!("{v} does not fit the scalar type")))
}

/// Number of spinor irreps in the `2^⌊n/2⌋`-dimensional module restricted to
/// the group: two (`Δ⁺ ⊕ Δ⁻`) for Spin in even `n ≥ 2`, one otherwise.
pub fn constituent_count(sig: Signature, kind: GroupKind) -> u32 {
    let n = sig.n();
    if kind == GroupKind::Spin && n >= 2 && n.is_multiple_of(2) {
        2
    } else {
        1
    }
}

/// `(1/|G|) Σ tr(g²)` over the built representation.
pub fn fs_sum_matrix(sig: Signature, kind: GroupKind) -> Result<Ratio<i64>> {
    GammaRep::<i64>::new(sig)?.fs_sum(kind)
}

pub fn character_norm(sig: Signature, kind: GroupKind) -> Result<i64> {
    GammaRep::<i64>::new(sig)?.character_norm(kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Sign;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use GroupKind::{Pin, Spin};

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    type M = GaussianMatrix<i64>;

    #[test]
    fn two_generators_are_x_and_y() {
        let g = build_gammas::<i64>(sig(2, 0)).unwrap();
        assert_eq!(g, vec![pauli_x::<i64>(), pauli_y()]);
        assert_eq!(g[0].mul(&g[0]), M::identity(2));
    }

    #[test]
    fn mixed_signature_scales_by_i() {
        let g = build_gammas::<i64>(sig(1, 1)).unwrap();
        assert_eq!(g[0], pauli_x());
        assert_eq!(g[1], pauli_y::<i64>().scale(c(0, 1)));
        assert_eq!(g[1].mul(&g[1]), M::identity(2).neg());
    }

    #[test]
    fn three_generators_are_paulis() {
        let g = build_gammas::<i64>(sig(3, 0)).unwrap();
        assert_eq!(g, vec![pauli_x::<i64>(), pauli_y(), pauli_z()]);
    }

    #[test]
    fn small_and_empty_cases() {
        assert!(build_gammas::<i64>(sig(0, 0)).unwrap().is_empty());
        let g = build_gammas::<i64>(sig(0, 1)).unwrap();
        assert_eq!(g[0], M::from_rows(vec![vec![c(0, 1)]]));
        assert!(matches!(
            build_gammas::<i64>(sig(13, 0)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn relations_hold_up_to_twelve() {
        for n in 0..=12u32 {
            for p in 0..=n {
                let rep = GammaRep::<i32>::new(sig(p, n - p)).unwrap();
                assert_eq!(rep.dim(), 1 << (n / 2));
                assert!(rep.gammas().iter().all(|g| g.entries_bounded_by_one()));
            }
        }
    }

    #[test]
    fn broken_relations_are_reported() {
        let mut g = build_gammas::<i64>(sig(2, 0)).unwrap();
        g[1] = g[0].clone();
        assert!(matches!(
            check_clifford_relations(sig(2, 0), &g),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn rep_element_examples() {
        let rep = GammaRep::<i64>::new(sig(2, 0)).unwrap();
        assert_eq!(
            rep.rep_element(SignedMonomial::IDENTITY).unwrap(),
            M::identity(2)
        );
        assert_eq!(
            rep.rep_element(SignedMonomial::MINUS_ONE).unwrap(),
            M::identity(2).neg()
        );
        let xy = rep
            .rep_element(SignedMonomial::new(Sign::Plus, 0b11))
            .unwrap();
        assert_eq!(xy, pauli_z::<i64>().scale(c(0, 1)));
        assert!(rep
            .rep_element(SignedMonomial::new(Sign::Plus, 0b100))
            .is_err());
    }

    #[test]
    fn homomorphism_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..=8u32 {
            for p in 0..=n {
                let s = sig(p, n - p);
                let rep = GammaRep::<i64>::new(s).unwrap();
                for _ in 0..200 {
                    let mut draw = || {
                        let sign = if rng.gen() { Sign::Plus } else { Sign::Minus };
                        SignedMonomial::new(sign, rng.gen_range(0..1u64 << n))
                    };
                    let (a, b) = (draw(), draw());
                    let lhs = rep
                        .rep_element(a)
                        .unwrap()
                        .mul(&rep.rep_element(b).unwrap());
                    assert_eq!(lhs, rep.rep_element(s.mul(a, b)).unwrap());
                    assert!(lhs.entries_bounded_by_one());
                }
            }
        }
    }

    #[test]
    fn traversal_matches_direct_products() {
        let rep = GammaRep::<i64>::new(sig(3, 2)).unwrap();
        for kind in [Pin, Spin] {
            let mut seen = Vec::new();
            rep.for_each_element(kind, |m, g| {
                assert_eq!(*g, rep.rep_element(m).unwrap());
                seen.push(m);
            });
            seen.sort();
            let mut expected = FiniteGroup::new(rep.signature(), kind).enumerate().unwrap();
            expected.sort();
            assert_eq!(seen, expected);
        }
    }

    #[test]
    fn trace_sum_examples() {
        assert_eq!(
            fs_sum_matrix(sig(2, 0), Pin).unwrap(),
            Ratio::from_integer(1)
        );
        assert_eq!(
            fs_sum_matrix(sig(4, 0), Spin).unwrap(),
            Ratio::from_integer(-2)
        );
        assert_eq!(
            fs_sum_matrix(sig(3, 0), Pin).unwrap(),
            Ratio::from_integer(0)
        );
        assert_eq!(character_norm(sig(4, 0), Pin).unwrap(), 1);
        assert_eq!(character_norm(sig(4, 0), Spin).unwrap(), 2);
        assert_eq!(character_norm(sig(3, 0), Spin).unwrap(), 1);
    }

    #[test]
    fn scalar_types_agree() {
        for (p, q) in [(3, 1), (2, 5), (6, 0)] {
            for kind in [Pin, Spin] {
                let a = GammaRep::<i32>::new(sig(p, q))
                    .unwrap()
                    .fs_sum(kind)
                    .unwrap();
                let b = GammaRep::<i128>::new(sig(p, q))
                    .unwrap()
                    .fs_sum(kind)
                    .unwrap();
                assert_eq!(
                    i128::from(*a.numer()) * b.denom(),
                    *b.numer() * i128::from(*a.denom())
                );
            }
        }
    }

    #[test]
    fn kron_and_trace() {
        let xz = pauli_x::<i64>().kron(&pauli_z());
        assert_eq!(xz.dim(), 4);
        assert_eq!(xz.trace(), c(0, 0));
        assert_eq!(xz.trace_of_product(&xz), c(4, 0));
        assert_eq!(M::identity(4).trace(), c(4, 0));
        assert_eq!(
            pauli_y::<i64>().to_pairs(),
            vec![vec![[0, 0], [0, -1]], vec![[0, 1], [0, 0]]]
        );
    }
}
