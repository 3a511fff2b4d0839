use std::fmt;

/// A permutation of `0..len`, stored as its image vector.
///
/// Composition follows function composition: `p.compose(q)` is `x ↦ p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(len: usize) -> Perm {
        Perm((0..len as u16).collect())
    }

    /// Wraps an image vector. The caller guarantees it is a bijection.
    pub fn from_images(images: Vec<u16>) -> Perm {
        Perm(images)
    }

    /// Checked constructor.
    pub fn try_from_usize(images: &[usize]) -> Option<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images.iter().map(|&x| x as u16).collect()))
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    pub fn to_usize(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn compose(&self, inner: &Perm) -> Perm {
        debug_assert_eq!(self.len(), inner.len());
        Perm(inner.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut r = vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            r[x as usize] = i as u16;
        }
        Perm(r)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let p = Perm::try_from_usize(&[1, 2, 0]).unwrap();
        let q = Perm::try_from_usize(&[0, 2, 1]).unwrap();
        assert_eq!(p.compose(&q).to_usize(), vec![1, 0, 2]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(Perm::try_from_usize(&[0, 0, 1]).is_none());
    }
}
