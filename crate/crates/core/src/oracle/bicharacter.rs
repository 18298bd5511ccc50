//! Finite abelian groups and skew-symmetric bicharacters with values in
//! `{+1, -1}`.
//!
//! Any bicharacter of a finite group into the rationals is automatically
//! `+-1`-valued, so `i8` signs are enough for everything the oracle does.

use std::fmt;

use crate::error::{Error, Result};

/// Largest group order accepted by table constructors; validation walks all
/// pairs and triples, so this stays desk scale.
pub const MAX_GROUP_ORDER: usize = 4096;

/// A finite abelian group presented as a product of cyclic factors
/// `Z_{m_1} x ... x Z_{m_k}`. The trivial group has no factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
}

/// An element of a [`FiniteAbelianGroup`], stored as one residue per cyclic
/// factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl FiniteAbelianGroup {
    /// The trivial group `{1}`.
    pub fn trivial() -> Self {
        FiniteAbelianGroup { moduli: Vec::new() }
    }

    /// The cyclic group `Z_m`.
    pub fn cyclic(m: u64) -> Self {
        Self::new(vec![m]).expect("single positive modulus")
    }

    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::InvalidInput(
                "cyclic factor moduli must be >= 1".into(),
            ));
        }
        let order = moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(usize::try_from(m).ok()?));
        match order {
            Some(o) if o <= MAX_GROUP_ORDER => Ok(FiniteAbelianGroup { moduli }),
            _ => Err(Error::TooLarge {
                detail: "group order".into(),
                cap: MAX_GROUP_ORDER,
            }),
        }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&m| m as usize).product()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.moduli.len()])
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        e.0.len() == self.moduli.len() && e.0.iter().zip(&self.moduli).all(|(&r, &m)| r < m)
    }

    /// Componentwise sum of residues (the group operation).
    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert!(self.contains(a) && self.contains(b));
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect(),
        )
    }

    /// Mixed-radix rank of an element, used as a table index.
    pub fn index_of(&self, e: &GroupElement) -> usize {
        debug_assert!(self.contains(e));
        let mut idx = 0usize;
        for (&r, &m) in e.0.iter().zip(&self.moduli) {
            idx = idx * m as usize + r as usize;
        }
        idx
    }

    pub fn element(&self, mut idx: usize) -> GroupElement {
        let mut residues = vec![0u64; self.moduli.len()];
        for i in (0..self.moduli.len()).rev() {
            let m = self.moduli[i] as usize;
            residues[i] = (idx % m) as u64;
            idx /= m;
        }
        GroupElement(residues)
    }

    pub fn element_from_residues(&self, residues: Vec<u64>) -> Result<GroupElement> {
        let e = GroupElement(
            residues
                .iter()
                .zip(&self.moduli)
                .map(|(&r, &m)| r % m)
                .collect(),
        );
        if residues.len() != self.moduli.len() {
            return Err(Error::InvalidInput(format!(
                "element has {} residues, group has {} cyclic factors",
                residues.len(),
                self.moduli.len()
            )));
        }
        Ok(e)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }
}

/// A `{+1, -1}`-valued map on `G x G`, stored as a full table.
///
/// Constructors do not validate the bicharacter axioms (so that invalid
/// tables can be built and rejected); call [`BicharacterTable::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicharacterTable {
    group: FiniteAbelianGroup,
    values: Vec<i8>,
}

/// Outcome of a successful validation: the parity decomposition of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicharacterReport {
    /// `G_+ = { g : gamma(g, g) = +1 }`.
    pub even_elements: Vec<GroupElement>,
    /// `G_- = { g : gamma(g, g) = -1 }`.
    pub odd_elements: Vec<GroupElement>,
}

impl BicharacterTable {
    /// Builds a table from an arbitrary sign function; not validated.
    pub fn from_fn(
        group: FiniteAbelianGroup,
        f: impl Fn(&GroupElement, &GroupElement) -> i8,
    ) -> Result<Self> {
        let n = group.order();
        let mut values = Vec::with_capacity(n * n);
        for i in 0..n {
            let a = group.element(i);
            for j in 0..n {
                let b = group.element(j);
                let v = f(&a, &b);
                if v != 1 && v != -1 {
                    return Err(Error::InvalidInput(format!(
                        "bicharacter value at ({a}, {b}) must be +-1, got {v}"
                    )));
                }
                values.push(v);
            }
        }
        Ok(BicharacterTable { group, values })
    }

    /// Extends signs on the cyclic generators bimultiplicatively:
    /// `gamma(a, b) = prod s[i][j]^(a_i b_j)`. The result is validated.
    pub fn from_generator_signs(group: FiniteAbelianGroup, signs: Vec<Vec<i8>>) -> Result<Self> {
        let k = group.moduli().len();
        if signs.len() != k || signs.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidInput(format!(
                "generator sign matrix must be {k} x {k}"
            )));
        }
        let table = Self::from_fn(group, |a, b| {
            let mut v = 1i8;
            for (i, &ai) in a.residues().iter().enumerate() {
                for (j, &bj) in b.residues().iter().enumerate() {
                    if signs[i][j] == -1 && (ai * bj) % 2 == 1 {
                        v = -v;
                    }
                }
            }
            v
        })?;
        table.validate()?;
        Ok(table)
    }

    /// `gamma = 1` on the given group: the ordinary Lie algebra case.
    pub fn trivial(group: FiniteAbelianGroup) -> Self {
        Self::from_fn(group, |_, _| 1).expect("constant +1 table")
    }

    /// The standard superalgebra bicharacter `(i, j) -> (-1)^(i j)` on `Z_2`.
    pub fn super_z2() -> Self {
        Self::from_fn(FiniteAbelianGroup::cyclic(2), |a, b| {
            if a.residues()[0] * b.residues()[0] % 2 == 1 {
                -1
            } else {
                1
            }
        })
        .expect("Z_2 super table")
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn gamma(&self, a: &GroupElement, b: &GroupElement) -> i8 {
        let n = self.group.order();
        self.values[self.group.index_of(a) * n + self.group.index_of(b)]
    }

    /// True if `gamma(g, g) = +1`.
    pub fn is_even(&self, g: &GroupElement) -> bool {
        self.gamma(g, g) == 1
    }

    /// Checks skew-symmetry on all pairs and bimultiplicativity on all
    /// triples, then reports the parity decomposition, verifying that `G_+`
    /// is a subgroup of index at most 2.
    pub fn validate(&self) -> Result<BicharacterReport> {
        let n = self.group.order();
        let elems: Vec<GroupElement> = self.group.elements().collect();

        for f in &elems {
            for g in &elems {
                if i32::from(self.gamma(f, g)) * i32::from(self.gamma(g, f)) != 1 {
                    return Err(Error::InvalidBicharacter {
                        reason: "skew-symmetry gamma(f,g)*gamma(g,f) = 1 fails".into(),
                        witness: format!("f = {f}, g = {g}"),
                    });
                }
            }
        }
        for f in &elems {
            for g in &elems {
                for h in &elems {
                    let gh = self.group.mul(g, h);
                    if self.gamma(f, &gh) != self.gamma(f, g) * self.gamma(f, h) {
                        return Err(Error::InvalidBicharacter {
                            reason: "bimultiplicativity gamma(f, gh) = gamma(f,g)gamma(f,h) fails"
                                .into(),
                            witness: format!("f = {f}, g = {g}, h = {h}"),
                        });
                    }
                    if self.gamma(&gh, f) != self.gamma(g, f) * self.gamma(h, f) {
                        return Err(Error::InvalidBicharacter {
                            reason: "bimultiplicativity gamma(gh, f) = gamma(g,f)gamma(h,f) fails"
                                .into(),
                            witness: format!("f = {f}, g = {g}, h = {h}"),
                        });
                    }
                }
            }
        }

        let (even_elements, odd_elements): (Vec<_>, Vec<_>) =
            elems.into_iter().partition(|g| self.is_even(g));

        // G_+ is a subgroup of index <= 2.
        for a in &even_elements {
            for b in &even_elements {
                let ab = self.group.mul(a, b);
                if !self.is_even(&ab) {
                    return Err(Error::InvalidBicharacter {
                        reason: "G_+ is not closed under the group operation".into(),
                        witness: format!("a = {a}, b = {b}"),
                    });
                }
            }
        }
        if even_elements.len() != n && 2 * even_elements.len() != n {
            return Err(Error::InvalidBicharacter {
                reason: format!(
                    "[G : G_+] must be at most 2, but |G| = {n} and |G_+| = {}",
                    even_elements.len()
                ),
                witness: "parity partition".into(),
            });
        }

        Ok(BicharacterReport {
            even_elements,
            odd_elements,
        })
    }
}
