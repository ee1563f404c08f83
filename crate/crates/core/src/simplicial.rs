//! Simplicial complexes stored by their minimal non-faces, and the
//! Stanley-Reisner correspondence with square-free monomial ideals.
//!
//! Vertices are 1-based so that vertex `v` matches variable `x_v`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Full face enumeration is refused above this many vertices.
pub const MAX_ENUMERATION_VERTICES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SimplicialComplex {
    vertex_count: usize,
    minimal_nonfaces: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Validates and canonicalizes a list of minimal non-faces.
    ///
    /// Each set is sorted and deduplicated, then the list is sorted by
    /// (size, lexicographic). Nested sets are rejected.
    pub fn new(vertex_count: usize, nonfaces: Vec<Vec<usize>>) -> Result<Self> {
        let mut sets = Vec::with_capacity(nonfaces.len());
        for mut set in nonfaces {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(Error::EmptyNonFace);
            }
            if let Some(&v) = set.iter().find(|&&v| v == 0 || v > vertex_count) {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    n: vertex_count,
                });
            }
            sets.push(set);
        }
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        for (i, small) in sets.iter().enumerate() {
            for large in &sets[i + 1..] {
                if is_subset(small, large) {
                    return Err(Error::NotAntichain(small.clone(), large.clone()));
                }
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            minimal_nonfaces: sets,
        })
    }

    /// The full simplex on `vertex_count` vertices.
    pub fn simplex(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            minimal_nonfaces: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn minimal_nonfaces(&self) -> &[Vec<usize>] {
        &self.minimal_nonfaces
    }

    /// `face` is a face iff it contains no minimal non-face.
    pub fn is_face(&self, face: &[usize]) -> bool {
        !self
            .minimal_nonfaces
            .iter()
            .any(|nf| nf.iter().all(|v| face.contains(v)))
    }

    /// Every face, grouped by size and lexicographic within a size. The
    /// empty face comes first.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>> {
        let masks = self.nonface_masks()?;
        let mut faces: Vec<Vec<usize>> = (0u32..1 << self.vertex_count)
            .filter(|f| masks.iter().all(|nf| f & nf != *nf))
            .map(|f| {
                (0..self.vertex_count)
                    .filter(|b| f >> b & 1 == 1)
                    .map(|b| b + 1)
                    .collect()
            })
            .collect();
        faces.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(faces)
    }

    /// `f[k]` is the number of faces with `k` vertices; `f[0] = 1`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        let masks = self.nonface_masks()?;
        let mut f = vec![0u64; self.vertex_count + 1];
        for face in 0u32..1 << self.vertex_count {
            if masks.iter().all(|nf| face & nf != *nf) {
                f[face.count_ones() as usize] += 1;
            }
        }
        while f.len() > 1 && f.last() == Some(&0) {
            f.pop();
        }
        Ok(f)
    }

    fn nonface_masks(&self) -> Result<Vec<u32>> {
        if self.vertex_count > MAX_ENUMERATION_VERTICES {
            return Err(Error::Resource {
                what: "vertex count for face enumeration",
                value: self.vertex_count,
                limit: MAX_ENUMERATION_VERTICES,
            });
        }
        Ok(self
            .minimal_nonfaces
            .iter()
            .map(|nf| nf.iter().fold(0u32, |m, v| m | 1 << (v - 1)))
            .collect())
    }
}

fn is_subset(small: &[usize], large: &[usize]) -> bool {
    small.iter().all(|v| large.binary_search(v).is_ok())
}

/// The complex whose minimal non-faces are the generator supports of a
/// square-free ideal.
///
/// When every variable occurs in the ideal, a linear generator `x_v` would
/// make `v` a non-vertex; such ideals are rejected.
pub fn sr_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_square_free()) {
        return Err(Error::NotSquareFree(g.to_string()));
    }
    if ideal.missing_variables().is_empty() {
        if let Some(g) = ideal.generators().iter().find(|g| g.degree() == 1) {
            return Err(Error::SingletonNonFace(g.support()[0]));
        }
    }
    SimplicialComplex::new(
        ideal.n(),
        ideal.generators().iter().map(Monomial::support).collect(),
    )
}

/// The Stanley-Reisner ideal: one square-free generator per minimal
/// non-face. The full simplex has none and is rejected.
pub fn sr_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = complex.vertex_count();
    let gens = complex
        .minimal_nonfaces()
        .iter()
        .map(|nf| {
            let mut exps = vec![0u32; n];
            for &v in nf {
                exps[v - 1] = 1;
            }
            Monomial::new(exps)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new_unchecked(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mono;
    use crate::polarize::polarize;

    fn square() -> MonomialIdeal {
        MonomialIdeal::new(4, vec![mono![1, 0, 1, 0], mono![0, 1, 0, 1]]).unwrap()
    }

    #[test]
    fn square_boundary() {
        let k = sr_complex(&square()).unwrap();
        assert_eq!(k.minimal_nonfaces(), &[vec![1, 3], vec![2, 4]][..]);
        assert_eq!(k.f_vector().unwrap(), vec![1, 4, 4]);
        assert_eq!(sr_ideal(&k).unwrap(), square());
    }

    #[test]
    fn simplex_boundary() {
        let i = MonomialIdeal::new(3, vec![mono![1, 1, 1]]).unwrap();
        let k = sr_complex(&i).unwrap();
        assert_eq!(k.minimal_nonfaces(), &[vec![1, 2, 3]][..]);
        assert_eq!(k.f_vector().unwrap(), vec![1, 3, 3]);
    }

    #[test]
    fn polarized_worked_example() {
        let i = MonomialIdeal::new(3, vec![mono![2, 1, 0], mono![2, 0, 4], mono![0, 0, 5]]).unwrap();
        let k = sr_complex(&polarize(&i).ideal().unwrap()).unwrap();
        assert_eq!(k.vertex_count(), 8);
        let mut sizes: Vec<usize> = k.minimal_nonfaces().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 5, 6]);
    }

    #[test]
    fn full_simplex_has_no_ideal() {
        let k = SimplicialComplex::simplex(3);
        assert_eq!(sr_ideal(&k).unwrap_err(), Error::ZeroIdeal);
        assert_eq!(k.f_vector().unwrap(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn point_and_edge() {
        let k = SimplicialComplex::new(3, vec![vec![1, 2], vec![1, 3]]).unwrap();
        assert_eq!(
            sr_ideal(&k).unwrap(),
            MonomialIdeal::new(3, vec![mono![1, 1, 0], mono![1, 0, 1]]).unwrap()
        );
        assert_eq!(
            k.faces().unwrap(),
            vec![vec![], vec![1], vec![2], vec![3], vec![2, 3]]
        );
        assert_eq!(k.f_vector().unwrap(), vec![1, 3, 1]);
        assert!(k.is_face(&[]));
        assert!(k.is_face(&[2, 3]));
        assert!(!k.is_face(&[1, 2]));
    }

    #[test]
    fn rejects_bad_inputs() {
        let cube = MonomialIdeal::new(1, vec![mono![2]]).unwrap();
        assert!(matches!(sr_complex(&cube), Err(Error::NotSquareFree(_))));
        let linear = MonomialIdeal::new(3, vec![mono![1, 0, 0], mono![0, 1, 1]]).unwrap();
        assert_eq!(sr_complex(&linear).unwrap_err(), Error::SingletonNonFace(1));
        assert!(matches!(
            SimplicialComplex::new(3, vec![vec![1], vec![1, 2]]),
            Err(Error::NotAntichain(_, _))
        ));
        assert_eq!(
            SimplicialComplex::new(3, vec![vec![]]).unwrap_err(),
            Error::EmptyNonFace
        );
        assert!(matches!(
            SimplicialComplex::new(3, vec![vec![4]]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn singleton_nonface_with_unused_vertex() {
        let k = SimplicialComplex::new(3, vec![vec![1]]).unwrap();
        let i = sr_ideal(&k).unwrap();
        assert_eq!(i.missing_variables(), vec![2, 3]);
        assert_eq!(sr_complex(&i).unwrap(), k);
        assert_eq!(k.f_vector().unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn enumeration_guard() {
        let k = SimplicialComplex::simplex(25);
        assert!(matches!(k.f_vector(), Err(Error::Resource { limit: 24, .. })));
        assert!(k.faces().is_err());
    }
}
