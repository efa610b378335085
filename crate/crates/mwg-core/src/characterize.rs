//! Decision procedures for drawability of complete multipartite pairs.
//!
//! A pair of complete bipartite graphs admits a mutual witness Gabriel
//! drawing exactly when each graph is a star or `K_{2,2}` and the vertex
//! counts differ by at most two. For pairs where every partition set has
//! size at least two, only `K_{2,2}` against `K_{2,2}` is drawable. Mixed
//! pairs (a size-one class together with three or more classes) are outside
//! the decided territory and rejected explicitly.

use crate::model::GraphSpec;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterizeError {
    #[error("spec {0} is not bipartite; use the multipartite decision")]
    NotBipartite(GraphSpec),
    #[error(
        "pair ({0}, {1}) mixes size-one partition sets with more than two classes; \
         drawability is not decided for this shape"
    )]
    OutOfScope(GraphSpec, GraphSpec),
}

/// Shape classification of a complete bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BipartiteShape {
    /// `K_{1,n-1}` on `n` vertices (`n >= 2`); `K_{1,1}` counts as a star.
    Star(u32),
    /// Exactly `K_{2,2}`.
    K22,
    Other,
}

/// Rule that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    Ok,
    ShapeViolation,
    SizeGap,
    K23Subgraph,
    MultipartiteRule,
}

impl std::fmt::Display for Reason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Reason::Ok => "OK",
            Reason::ShapeViolation => "SHAPE_VIOLATION",
            Reason::SizeGap => "SIZE_GAP",
            Reason::K23Subgraph => "K23_SUBGRAPH",
            Reason::MultipartiteRule => "MULTIPARTITE_RULE",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub drawable: bool,
    pub reason: Reason,
    pub detail: String,
}

impl Verdict {
    fn ok(detail: impl Into<String>) -> Self {
        Verdict {
            drawable: true,
            reason: Reason::Ok,
            detail: detail.into(),
        }
    }

    fn no(reason: Reason, detail: impl Into<String>) -> Self {
        debug_assert!(reason != Reason::Ok);
        Verdict {
            drawable: false,
            reason,
            detail: detail.into(),
        }
    }
}

/// Classify a complete bipartite spec into star / `K_{2,2}` / other.
pub fn classify_bipartite(spec: &GraphSpec) -> Result<BipartiteShape, CharacterizeError> {
    if !spec.is_bipartite() {
        return Err(CharacterizeError::NotBipartite(spec.clone()));
    }
    let sizes = spec.sizes();
    Ok(if sizes == [2, 2] {
        BipartiteShape::K22
    } else if sizes[1] == 1 {
        BipartiteShape::Star(spec.n())
    } else {
        BipartiteShape::Other
    })
}

/// Decide drawability of a pair of complete bipartite graphs. Constant time
/// once the partition sizes are read.
pub fn decide_bipartite_pair(
    spec0: &GraphSpec,
    spec1: &GraphSpec,
) -> Result<Verdict, CharacterizeError> {
    let shape0 = classify_bipartite(spec0)?;
    let shape1 = classify_bipartite(spec1)?;
    for (spec, shape) in [(spec0, &shape0), (spec1, &shape1)] {
        if *shape == BipartiteShape::Other {
            return Ok(Verdict::no(
                Reason::ShapeViolation,
                format!("{spec} is neither a star nor K2,2"),
            ));
        }
    }
    let (n0, n1) = (spec0.n() as i64, spec1.n() as i64);
    let gap = (n0 - n1).abs();
    if gap > 2 {
        return Ok(Verdict::no(
            Reason::SizeGap,
            format!("|n0 - n1| = {gap} exceeds 2"),
        ));
    }
    Ok(Verdict::ok(format!(
        "both of ({spec0}, {spec1}) are stars or K2,2 and |n0 - n1| = {gap} <= 2"
    )))
}

/// Does a complete multipartite spec contain `K_{2,3}` as a subgraph?
/// This happens exactly when two distinct classes have sizes at least 2 and
/// at least 3.
fn has_k23_subgraph(spec: &GraphSpec) -> bool {
    let sizes = spec.sizes();
    sizes.len() >= 2 && sizes[0] >= 3 && sizes[1] >= 2
}

/// Decide drawability for a pair of complete multipartite graphs in which
/// every partition set has size at least two.
pub fn decide_multipartite_all_ge2(
    spec0: &GraphSpec,
    spec1: &GraphSpec,
) -> Result<Verdict, CharacterizeError> {
    if spec0.sizes().contains(&1) || spec1.sizes().contains(&1) {
        return Err(CharacterizeError::OutOfScope(spec0.clone(), spec1.clone()));
    }
    if spec0.sizes() == [2, 2] && spec1.sizes() == [2, 2] {
        return Ok(Verdict::ok("the pair is (K2,2, K2,2)"));
    }
    for spec in [spec0, spec1] {
        if has_k23_subgraph(spec) {
            return Ok(Verdict::no(
                Reason::K23Subgraph,
                format!("{spec} contains K2,3 as a subgraph"),
            ));
        }
    }
    Ok(Verdict::no(
        Reason::MultipartiteRule,
        format!("({spec0}, {spec1}) is not (K2,2, K2,2)"),
    ))
}

/// Route a pair to the applicable decision procedure.
pub fn decide_pair(spec0: &GraphSpec, spec1: &GraphSpec) -> Result<Verdict, CharacterizeError> {
    if spec0.is_bipartite() && spec1.is_bipartite() {
        decide_bipartite_pair(spec0, spec1)
    } else {
        decide_multipartite_all_ge2(spec0, spec1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(sizes: &[u32]) -> GraphSpec {
        GraphSpec::new(sizes).unwrap()
    }

    #[test]
    fn shape_classification() {
        assert_eq!(
            classify_bipartite(&spec(&[5, 1])).unwrap(),
            BipartiteShape::Star(6)
        );
        assert_eq!(classify_bipartite(&spec(&[2, 2])).unwrap(), BipartiteShape::K22);
        assert_eq!(classify_bipartite(&spec(&[3, 2])).unwrap(), BipartiteShape::Other);
        // Two adjacent vertices: K_{1,1} is the 2-vertex star.
        assert_eq!(
            classify_bipartite(&spec(&[1, 1])).unwrap(),
            BipartiteShape::Star(2)
        );
        assert!(classify_bipartite(&spec(&[2, 2, 2])).is_err());
    }

    #[test]
    fn bipartite_decisions() {
        assert!(decide_bipartite_pair(&spec(&[2, 2]), &spec(&[2, 2])).unwrap().drawable);
        assert!(decide_bipartite_pair(&spec(&[2, 2]), &spec(&[5, 1])).unwrap().drawable);
        let v = decide_bipartite_pair(&spec(&[2, 1]), &spec(&[6, 1])).unwrap();
        assert!(!v.drawable);
        assert_eq!(v.reason, Reason::SizeGap);
        let v = decide_bipartite_pair(&spec(&[3, 2]), &spec(&[4, 1])).unwrap();
        assert!(!v.drawable);
        assert_eq!(v.reason, Reason::ShapeViolation);
    }

    #[test]
    fn bipartite_decision_is_symmetric() {
        for a in [&[2u32, 2][..], &[3, 1], &[9, 1], &[3, 3], &[4, 2]] {
            for b in [&[2u32, 2][..], &[3, 1], &[9, 1], &[3, 3], &[4, 2]] {
                let v0 = decide_bipartite_pair(&spec(a), &spec(b)).unwrap();
                let v1 = decide_bipartite_pair(&spec(b), &spec(a)).unwrap();
                assert_eq!(v0.drawable, v1.drawable);
                assert_eq!(v0.reason, v1.reason);
            }
        }
    }

    #[test]
    fn multipartite_decisions() {
        assert!(decide_multipartite_all_ge2(&spec(&[2, 2]), &spec(&[2, 2]))
            .unwrap()
            .drawable);
        let v = decide_multipartite_all_ge2(&spec(&[2, 2, 2]), &spec(&[2, 2])).unwrap();
        assert!(!v.drawable);
        assert_eq!(v.reason, Reason::MultipartiteRule);
        let v = decide_multipartite_all_ge2(&spec(&[2, 2]), &spec(&[3, 3])).unwrap();
        assert!(!v.drawable);
        assert_eq!(v.reason, Reason::K23Subgraph);
        assert!(decide_multipartite_all_ge2(&spec(&[2, 1]), &spec(&[2, 2])).is_err());
    }

    #[test]
    fn multipartite_agrees_with_bipartite_on_shared_domain() {
        for a in 2..=5u32 {
            for b in 2..=5u32 {
                for c in 2..=5u32 {
                    for d in 2..=5u32 {
                        let s0 = spec(&[a, b]);
                        let s1 = spec(&[c, d]);
                        let vb = decide_bipartite_pair(&s0, &s1).unwrap();
                        let vm = decide_multipartite_all_ge2(&s0, &s1).unwrap();
                        assert_eq!(vb.drawable, vm.drawable, "({s0}, {s1})");
                    }
                }
            }
        }
    }
}
