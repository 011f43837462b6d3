//! Spectral report assembly and the automatic certificate dispatch used by
//! `spectrum` and `cert`.

use lap2_core::eigvec::{
    self, bicyclic_no_pm_eigenvector, glue_eigenvectors, nullspace_certificate,
    pattern_eigenvector_no_pm, pattern_preconditions_hold, tree_pm_eigenvector,
    unicyclic_eigenvector, CertError, EigenCertificate,
};
use lap2_core::graph::{Graph, GraphClass};
use lap2_core::matching::maximum_matching;
use lap2_core::spectra::{char_poly, float_spectrum, integral_multiplicity, nullspace_2};

use crate::json::{
    class_name, CertificateJson, MatchingJson, SpectralReportJson,
};

/// Splits a one-edge connection back into its operands using the recorded
/// join edge.
pub fn split_join(g: &Graph) -> Option<(Graph, Graph, usize, usize)> {
    let join = g.meta.join.as_ref()?;
    if join.n1 + join.n2 != g.vertex_count() || join.u >= join.n1 || join.v >= join.n2 {
        return None;
    }
    let mut first = Vec::new();
    let mut second = Vec::new();
    for &(a, b) in g.edges() {
        if a < join.n1 && b < join.n1 {
            first.push((a, b));
        } else if a >= join.n1 && b >= join.n1 {
            second.push((a - join.n1, b - join.n1));
        } else if (a, b) != (join.u, join.n1 + join.v) {
            // A second crossing edge contradicts the join metadata.
            return None;
        }
    }
    let g1 = Graph::new(join.n1, &first).ok()?;
    let g2 = Graph::new(join.n2, &second).ok()?;
    Some((g1, g2, join.u, join.v))
}

/// Structural certificate dispatch: trees through the matching rule,
/// matched unicyclic graphs through the pendant-pair recursion (which
/// bottoms out in the broken-sun search), matching-free broken suns through
/// the zero pattern, recorded joins through gluing or the pattern case
/// analysis, and the exact nullspace as a fallback.
pub fn auto_certificate(g: &Graph) -> Result<EigenCertificate, CertError> {
    if integral_multiplicity(g, 2) == 0 {
        return Err(CertError::PreconditionFailed(
            "eigenvalue 2 has multiplicity 0".into(),
        ));
    }
    match g.classify() {
        Ok(GraphClass::Tree) => {
            let m = maximum_matching(g);
            if m.perfect() {
                tree_pm_eigenvector(g, &m)
            } else {
                nullspace_certificate(g)
            }
        }
        Ok(GraphClass::Unicyclic { .. }) => {
            if maximum_matching(g).perfect() {
                unicyclic_eigenvector(g)
            } else if pattern_preconditions_hold(g) {
                pattern_eigenvector_no_pm(g)
            } else {
                nullspace_certificate(g)
            }
        }
        Ok(GraphClass::Bicyclic { .. }) => {
            if let Some((g1, g2, u, v)) = split_join(g) {
                if pattern_preconditions_hold(&g1) {
                    if let Ok(cert) = bicyclic_no_pm_eigenvector(&g1, &g2, u, v) {
                        return Ok(cert);
                    }
                }
                let glued = auto_certificate(&g1).and_then(|x| {
                    auto_certificate(&g2)
                        .and_then(|y| glue_eigenvectors(&g1, &x, &g2, &y, u, v))
                });
                match glued {
                    Ok(cert) => Ok(cert),
                    Err(_) => nullspace_certificate(g),
                }
            } else {
                nullspace_certificate(g)
            }
        }
        _ => nullspace_certificate(g),
    }
}

/// Full spectral report for one graph.
pub fn spectral_report(g: &Graph) -> SpectralReportJson {
    let class = g.classify();
    let girths = class
        .as_ref()
        .map(|c| c.girths())
        .unwrap_or_default();
    let m = maximum_matching(g);
    let mult2 = integral_multiplicity(g, 2);
    let cp = char_poly(g);
    let spectrum = float_spectrum(g).unwrap_or_default();
    let mut certificates = Vec::new();
    if mult2 >= 1 {
        match auto_certificate(g) {
            Ok(cert) => certificates.push(CertificateJson::from_certificate(&cert)),
            Err(_) => {
                for vector in nullspace_2(g) {
                    let cert = EigenCertificate {
                        graph_id: g.id(),
                        eigenvalue: 2,
                        alphabet: eigvec::ValueAlphabet::General,
                        vector,
                        provenance: eigvec::Provenance::Nullspace,
                    };
                    certificates.push(CertificateJson::from_certificate(&cert));
                }
            }
        }
    }
    SpectralReportJson {
        n: g.vertex_count(),
        m: g.edge_count(),
        class: class_name(&class),
        girths,
        matching: MatchingJson::from_matching(&m),
        mult2,
        xi: cp.xi().iter().map(|x| format!("{x}")).collect(),
        spectrum_float: spectrum,
        certificates,
    }
}
