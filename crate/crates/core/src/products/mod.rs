//! Box products: the filtered Eilenberg–Zilber and Alexander–Whitney maps,
//! tensor products of pages, Künneth comparisons and the induced pairing of
//! spectral sequences.

mod kunneth;
mod paths;
mod tensor;

pub use kunneth::{
    ez_pairing_on_page, kunneth_check, KunnethLevel, KunnethLine, KunnethReport, PairingReport,
};
pub use paths::{aw_map, ez_map, BoxContext, LatticePath, Step};
pub use tensor::{tensor_page, TensorEntry, TensorGenerator, TensorPage};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{directed_cycle, point, sphere};
    use crate::homalg::{HomologyGroup, Ring};

    #[test]
    fn point_factor_is_neutral() {
        let z3 = directed_cycle(3).unwrap();
        for level in [
            KunnethLevel::Magnitude,
            KunnethLevel::OrdinaryPath,
            KunnethLevel::BigradedPath,
            KunnethLevel::Page(1),
        ] {
            let rep = kunneth_check(&point(), &z3, level, Ring::Integers, 4);
            assert_eq!(rep.verdict(), Some(true), "{level:?}");
        }
    }

    #[test]
    fn torus_like_square() {
        let z3 = directed_cycle(3).unwrap();
        let rep = kunneth_check(&z3, &z3, KunnethLevel::Magnitude, Ring::Rationals, 4);
        assert_eq!(rep.verdict(), Some(true));
        let mh22 = rep.lines.iter().find(|l| l.index == (2, 2)).unwrap();
        assert_eq!(mh22.product, HomologyGroup::free(9));
        let rep = kunneth_check(&z3, &z3, KunnethLevel::OrdinaryPath, Ring::Rationals, 4);
        assert_eq!(rep.verdict(), Some(true));
        assert_eq!(
            rep.lines
                .iter()
                .find(|l| l.index == (2, 2))
                .unwrap()
                .product,
            HomologyGroup::free(1)
        );
    }

    #[test]
    fn pairing_is_a_chain_map_and_iso_on_page_one() {
        let z3 = directed_cycle(3).unwrap();
        let s1 = sphere(1).unwrap();
        let rep = ez_pairing_on_page(&z3, &s1, 0, Ring::Rationals, 3).unwrap();
        assert!(rep.commutes);
        let rep = ez_pairing_on_page(&z3, &s1, 1, Ring::Rationals, 3).unwrap();
        assert!(rep.commutes);
        assert!(rep
            .entries
            .values()
            .filter(|e| e.exact)
            .all(|e| e.is_isomorphism));
    }

    #[test]
    fn tensor_differential_squares_to_zero() {
        let z3 = directed_cycle(3).unwrap();
        let pages = crate::mpss::compute_pages(&z3, &[0, 1], 4, Ring::Rationals, false);
        for page in &pages {
            let t = tensor_page(page, page);
            let r = t.r as i64;
            for (&(p, q), d) in &t.differentials {
                if let Some(d2) = t.differentials.get(&(p - r, q + r - 1)) {
                    if d2.cols() == d.rows() && d.rows() > 0 {
                        let comp = d2.mul_in(&crate::homalg::Rationals, d).unwrap();
                        assert!(comp.is_zero_in(&crate::homalg::Rationals), "({p},{q})");
                    }
                }
            }
        }
    }
}
