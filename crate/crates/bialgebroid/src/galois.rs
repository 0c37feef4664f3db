//! Candidate subspace pools and the order-theoretic laws relating the two
//! certified sides of the correspondence.

use crate::core::LeftBialgebroid;
use crate::correspondence::{
    certify_coideal_subring, certify_ideal_coideal, mixed_quotient_tensor, phi_ideal,
    psi_coinvariants, CoidealSubring, IdealCoideal,
};
use crate::hopf::{beta_on_ambient, HopfGaloisData};
use crate::BialgebroidError;
use exact_linalg::{vect, Certification, Field, Matrix, SpanBuilder, Subspace};
use finalg::{extension_tensor_square, purity_check, subalgebra_from_subspace, Purity};

/// Spans of every subset of the standard basis, the zero space included.
pub fn basis_subset_subspaces(field: Field, dim: usize) -> Vec<Subspace> {
    assert!(dim <= 16, "subset enumeration is exponential in the dimension");
    let mut out = Vec::with_capacity(1 << dim);
    for mask in 0..(1usize << dim) {
        let vecs: Vec<Vec<_>> = (0..dim)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| vect::unit(field, dim, i))
            .collect();
        out.push(Subspace::from_vectors(field, dim, &vecs));
    }
    out
}

/// Spans of block indicator sums, one per set partition of the basis index
/// set. These are exactly the unital diagonal-stable candidates.
pub fn partition_block_subspaces(field: Field, dim: usize) -> Vec<Subspace> {
    assert!(dim <= 10, "set partition enumeration grows as the Bell numbers");
    let mut out = Vec::new();
    // restricted growth strings: a[0] = 0, a[i] <= max(a[..i]) + 1
    let mut assignment = vec![0usize; dim];
    loop {
        let blocks = assignment.iter().max().map_or(0, |m| m + 1);
        let mut vecs = vec![vect::zero(field, dim); blocks];
        for (i, &blk) in assignment.iter().enumerate() {
            vecs[blk][i] = field.one();
        }
        out.push(Subspace::from_vectors(field, dim, &vecs));
        // advance to the next restricted growth string
        let mut pos = dim;
        loop {
            if pos <= 1 {
                return out;
            }
            pos -= 1;
            let cap = assignment[..pos].iter().max().copied().unwrap_or(0) + 1;
            if assignment[pos] < cap {
                assignment[pos] += 1;
                for a in assignment[pos + 1..].iter_mut() {
                    *a = 0;
                }
                break;
            }
        }
    }
}

/// Certifies every candidate and keeps the ones that pass.
pub fn ideal_pool(
    b: &LeftBialgebroid,
    candidates: &[Subspace],
) -> Result<Vec<IdealCoideal>, BialgebroidError> {
    let mut out = Vec::new();
    for c in candidates {
        let cert = certify_ideal_coideal(b, c)?;
        if cert.is_certified() {
            out.push(cert);
        }
    }
    Ok(out)
}

/// Certifies every candidate and keeps the ones that pass.
pub fn subring_pool(
    b: &LeftBialgebroid,
    candidates: &[Subspace],
) -> Result<Vec<CoidealSubring>, BialgebroidError> {
    let mut out = Vec::new();
    for c in candidates {
        let cert = certify_coideal_subring(b, c)?;
        if cert.is_certified() {
            out.push(cert);
        }
    }
    Ok(out)
}

const LAW_NAMES: [&str; 7] = [
    "coinvariants-grow-subring",
    "ideal-shrinks",
    "psi-phi-psi-stable",
    "phi-psi-phi-stable",
    "adjunction",
    "psi-monotone",
    "phi-monotone",
];

/// Checks the adjunction laws over the given certified pools: unit and
/// counit containments, idempotency of the composites, the adjunction
/// equivalence itself, and monotonicity of both maps.
pub fn galois_connection_check(
    b: &LeftBialgebroid,
    ideals: &[IdealCoideal],
    subrings: &[CoidealSubring],
) -> Result<Certification, BialgebroidError> {
    for (k, i) in ideals.iter().enumerate() {
        if !i.is_certified() {
            return Err(BialgebroidError::NotCertified(format!(
                "ideal pool entry {k} failed certification"
            )));
        }
    }
    for (k, s) in subrings.iter().enumerate() {
        if !s.is_certified() {
            return Err(BialgebroidError::NotCertified(format!(
                "subring pool entry {k} failed certification"
            )));
        }
    }
    let mut cert = Certification::new();

    let mut psis = Vec::with_capacity(ideals.len());
    for i in ideals {
        psis.push(psi_coinvariants(b, i)?);
    }
    let mut phis = Vec::with_capacity(subrings.len());
    for s in subrings {
        phis.push(phi_ideal(b, s)?);
    }

    let first_failure = |c: &Certification| {
        c.failures().first().map_or_else(String::new, |f| f.name.clone())
    };
    let bad_psi = psis.iter().position(|p| !p.is_certified());
    cert.record(
        "psi-outputs-certified",
        bad_psi.is_none(),
        bad_psi.map_or_else(String::new, |k| {
            format!("ideal {k}: {}", first_failure(&psis[k].certification))
        }),
    );
    let bad_phi = phis.iter().position(|p| !p.is_certified());
    cert.record(
        "phi-outputs-certified",
        bad_phi.is_none(),
        bad_phi.map_or_else(String::new, |k| {
            format!("subring {k}: {}", first_failure(&phis[k].certification))
        }),
    );
    if bad_psi.is_some() || bad_phi.is_some() {
        for name in LAW_NAMES {
            cert.fail(name, "blocked: a first-round image failed certification");
        }
        return Ok(cert);
    }

    // unit of the adjunction: B sits inside the coinvariants of its ideal
    let mut bad = None;
    let mut psi_of_phi = Vec::with_capacity(subrings.len());
    for (k, s) in subrings.iter().enumerate() {
        let back = psi_coinvariants(b, &phis[k])?;
        if bad.is_none() && !back.subspace.contains(&s.subspace)? {
            bad = Some(format!(
                "subring {k}: dim {} not inside dim {}",
                s.subspace.dim(),
                back.subspace.dim()
            ));
        }
        psi_of_phi.push(back);
    }
    cert.record("coinvariants-grow-subring", bad.is_none(), bad.unwrap_or_default());

    // counit of the adjunction: the ideal of the coinvariants sits inside
    let mut bad = None;
    let mut phi_of_psi = Vec::with_capacity(ideals.len());
    for (k, i) in ideals.iter().enumerate() {
        let back = phi_ideal(b, &psis[k])?;
        if bad.is_none() && !i.subspace.contains(&back.subspace)? {
            bad = Some(format!(
                "ideal {k}: dim {} not inside dim {}",
                back.subspace.dim(),
                i.subspace.dim()
            ));
        }
        phi_of_psi.push(back);
    }
    cert.record("ideal-shrinks", bad.is_none(), bad.unwrap_or_default());

    let mut bad = None;
    for k in 0..ideals.len() {
        if !phi_of_psi[k].is_certified() {
            bad = Some(format!("ideal {k}: generated ideal failed certification"));
            break;
        }
        let again = psi_coinvariants(b, &phi_of_psi[k])?;
        if again.subspace != psis[k].subspace {
            bad = Some(format!(
                "ideal {k}: dims {} vs {}",
                again.subspace.dim(),
                psis[k].subspace.dim()
            ));
            break;
        }
    }
    cert.record("psi-phi-psi-stable", bad.is_none(), bad.unwrap_or_default());

    let mut bad = None;
    for k in 0..subrings.len() {
        if !psi_of_phi[k].is_certified() {
            bad = Some(format!("subring {k}: coinvariants failed certification"));
            break;
        }
        let again = phi_ideal(b, &psi_of_phi[k])?;
        if again.subspace != phis[k].subspace {
            bad = Some(format!(
                "subring {k}: dims {} vs {}",
                again.subspace.dim(),
                phis[k].subspace.dim()
            ));
            break;
        }
    }
    cert.record("phi-psi-phi-stable", bad.is_none(), bad.unwrap_or_default());

    // the adjunction equivalence over every pool pair
    let mut bad = None;
    'pairs: for (ki, i) in ideals.iter().enumerate() {
        for (ks, s) in subrings.iter().enumerate() {
            let lhs = i.subspace.contains(&phis[ks].subspace)?;
            let rhs = psis[ki].subspace.contains(&s.subspace)?;
            if lhs != rhs {
                bad = Some(format!("(ideal {ki}, subring {ks}): {lhs} vs {rhs}"));
                break 'pairs;
            }
        }
    }
    cert.record("adjunction", bad.is_none(), bad.unwrap_or_default());

    let mut bad = None;
    'psi_pairs: for (ki, i) in ideals.iter().enumerate() {
        for (kj, j) in ideals.iter().enumerate() {
            if !j.subspace.contains(&i.subspace)? {
                continue;
            }
            if !psis[kj].subspace.contains(&psis[ki].subspace)? {
                bad = Some(format!("(ideal {ki} inside ideal {kj})"));
                break 'psi_pairs;
            }
        }
    }
    cert.record("psi-monotone", bad.is_none(), bad.unwrap_or_default());

    let mut bad = None;
    'phi_pairs: for (ks, s) in subrings.iter().enumerate() {
        for (kt, t) in subrings.iter().enumerate() {
            if !t.subspace.contains(&s.subspace)? {
                continue;
            }
            if !phis[kt].subspace.contains(&phis[ks].subspace)? {
                bad = Some(format!("(subring {ks} inside subring {kt})"));
                break 'phi_pairs;
            }
        }
    }
    cert.record("phi-monotone", bad.is_none(), bad.unwrap_or_default());

    Ok(cert)
}

/// For a certified subring of a left Hopf algebroid: checks that the
/// translation map stays inside the subring's leg, that the extension
/// splits as a module map, and when both hold, that the induced comparison
/// map is an isomorphism and the coinvariants recover the subring.
pub fn gamma_stability_and_xi(
    b: &LeftBialgebroid,
    hg: &HopfGaloisData,
    subring: &CoidealSubring,
) -> Result<Certification, BialgebroidError> {
    if !subring.is_certified() {
        return Err(BialgebroidError::NotCertified(
            "comparison requires a certified subring".into(),
        ));
    }
    let total = b.total();
    let nh = total.dim();
    let field = total.field();
    let mut cert = Certification::new();

    let basis = subring.subspace.basis_vectors();
    let mut leg = SpanBuilder::new(field, hg.domain.dim());
    for w in &basis {
        for j in 0..nh {
            leg.insert(hg.domain.project_pure(&[w, &total.basis_vec(j)]));
        }
    }
    let mut bad = None;
    for (k, w) in basis.iter().enumerate() {
        if !leg.contains(&hg.gamma.mul_vec(w)) {
            bad = Some(format!("basis {k}"));
            break;
        }
    }
    let stable = bad.is_none();
    cert.record("translation-stable-on-subring", stable, bad.unwrap_or_default());

    let (balg, iota) = subalgebra_from_subspace(total, &subring.subspace)?;
    let purity = purity_check(total, &balg, &iota)?;
    let (split, split_witness) = match &purity {
        Purity::Pure { .. } => (true, String::new()),
        Purity::NotPure { witness } => (
            false,
            witness
                .as_ref()
                .map_or_else(|| "no retraction".into(), |(name, _)| name.clone()),
        ),
    };
    cert.record("extension-splits", split, split_witness);

    if !(stable && split) {
        return Ok(cert);
    }

    let ideal = phi_ideal(b, subring)?;
    if !ideal.is_certified() {
        cert.fail(
            "xi-descends-to-extension-tensor",
            "generated ideal failed certification",
        );
        return Ok(cert);
    }
    let quot = ideal.subspace.quotient();
    let target = mixed_quotient_tensor(b, &quot)?;
    let hbh = extension_tensor_square(total, &balg, &iota)?;

    let xi_ambient = target
        .quot
        .projection
        .mul(&quot.projection.kronecker(&Matrix::identity(field, nh)))
        .mul(&b.coring().quot.section)
        .mul(&beta_on_ambient(b));
    let mut bad = None;
    for (k, rel) in hbh.relations.basis_vectors().iter().enumerate() {
        if !vect::is_zero(&xi_ambient.mul_vec(rel)) {
            bad = Some(format!("relation {k}"));
            break;
        }
    }
    let descends = bad.is_none();
    cert.record("xi-descends-to-extension-tensor", descends, bad.unwrap_or_default());
    if !descends {
        return Ok(cert);
    }

    let xi = xi_ambient.mul(&hbh.quot.section);
    let square = xi.rows() == xi.cols();
    let rank = xi.rank();
    cert.record(
        "xi-isomorphism",
        square && rank == xi.rows(),
        format!("{}x{} of rank {rank}", xi.rows(), xi.cols()),
    );

    let recovered = psi_coinvariants(b, &ideal)?;
    cert.record(
        "coinvariants-recover-subring",
        recovered.subspace == subring.subspace,
        format!(
            "recovered dim {} vs subring dim {}",
            recovered.subspace.dim(),
            subring.subspace.dim()
        ),
    );

    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn basis_subset_counts_are_powers_of_two() {
        for dim in 0..=5 {
            let subs = basis_subset_subspaces(Field::Q, dim);
            assert_eq!(subs.len(), 1 << dim);
            let distinct: HashSet<_> = subs.into_iter().collect();
            assert_eq!(distinct.len(), 1 << dim);
        }
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52];
        for (dim, &expected) in bell.iter().enumerate() {
            let subs = partition_block_subspaces(Field::Q, dim);
            assert_eq!(subs.len(), expected, "dimension {dim}");
            let distinct: HashSet<_> = subs.into_iter().collect();
            assert_eq!(distinct.len(), expected);
        }
    }

    #[test]
    fn partition_spans_contain_the_all_ones_vector() {
        let ones = vec![Field::Q.one(); 4];
        for sub in partition_block_subspaces(Field::Q, 4) {
            assert!(sub.contains_vec(&ones));
        }
    }
}
