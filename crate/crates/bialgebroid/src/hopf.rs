//! The canonical map of a left bialgebroid and its inverse: left Hopf
//! structure detection, the translation map, and their certification.

use crate::core::LeftBialgebroid;
use crate::BialgebroidError;
use exact_linalg::{vect, Certification, Matrix};
use finalg::{legwise_product_second_reversed, takeuchi_subspace, tensor_over_A, TensorOverA};

/// Invertible canonical map together with the translation map it induces.
pub struct HopfGaloisData {
    /// Tensor square balanced so that right multiplication by t on the first
    /// leg matches left multiplication by t on the second.
    pub domain: TensorOverA,
    /// x (x) y -> x1 (x) x2 y, from the twisted classes to the coring classes.
    pub beta: Matrix,
    pub beta_inverse: Matrix,
    /// x -> beta^{-1}(x (x) 1), one column per basis element, in twisted classes.
    pub gamma: Matrix,
}

/// Outcome of trying to invert the canonical map.
pub enum HopfGalois {
    LeftHopf(HopfGaloisData),
    NotLeftHopf {
        domain_dim: usize,
        codomain_dim: usize,
        beta_rank: usize,
    },
}

impl HopfGalois {
    pub fn data(&self) -> Option<&HopfGaloisData> {
        match self {
            HopfGalois::LeftHopf(d) => Some(d),
            HopfGalois::NotLeftHopf { .. } => None,
        }
    }
}

/// Canonical map on the un-quotiented tensor ambient: column (i, j) is the
/// coring class of delta(e_i) times e_j in the second leg.
pub(crate) fn beta_on_ambient(b: &LeftBialgebroid) -> Matrix {
    let total = b.total();
    let coring = b.coring();
    let nh = total.dim();
    let field = total.field();
    let d_rep = b.coproduct_representative();
    let mut cols = Vec::with_capacity(nh * nh);
    for i in 0..nh {
        let di = d_rep.col(i);
        for j in 0..nh {
            // multiply the second tensor leg by e_j, one ambient slot at a time
            let mut amb = vect::zero(field, nh * nh);
            for r in 0..nh {
                if di[r * nh..(r + 1) * nh].iter().all(|c| c.is_zero()) {
                    continue;
                }
                for (s, coeff) in di[r * nh..(r + 1) * nh].iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for (u, prod) in total.basis_product(s, j).iter().enumerate() {
                        let term = coeff.mul(prod);
                        amb[r * nh + u] = amb[r * nh + u].add(&term);
                    }
                }
            }
            cols.push(coring.project(&amb));
        }
    }
    Matrix::from_cols(field, cols)
}

/// Builds the balanced domain, descends the canonical map to it, and tries
/// to invert. A non-invertible outcome is data, not an error.
pub fn hopf_galois(b: &LeftBialgebroid) -> Result<HopfGalois, BialgebroidError> {
    let twisted = b.twisted_bimodule();
    let domain = tensor_over_A(&twisted, &twisted)?;
    let beta_full = beta_on_ambient(b);
    for rel in domain.relations.basis_vectors() {
        if !vect::is_zero(&beta_full.mul_vec(&rel)) {
            return Err(BialgebroidError::Incoherent(
                "canonical map does not descend to the balanced tensor square".into(),
            ));
        }
    }
    let beta = beta_full.mul(&domain.quot.section);
    if beta.rows() != beta.cols() {
        return Ok(HopfGalois::NotLeftHopf {
            domain_dim: domain.dim(),
            codomain_dim: b.coring().dim(),
            beta_rank: beta.rank(),
        });
    }
    let beta_inverse = match beta.inverse() {
        Some(inv) => inv,
        None => {
            return Ok(HopfGalois::NotLeftHopf {
                domain_dim: domain.dim(),
                codomain_dim: b.coring().dim(),
                beta_rank: beta.rank(),
            })
        }
    };
    let total = b.total();
    let unit = total.unit_vec();
    let mut cols = Vec::with_capacity(total.dim());
    for i in 0..total.dim() {
        let class = b.coring().project_pure(&[&total.basis_vec(i), &unit]);
        cols.push(beta_inverse.mul_vec(&class));
    }
    let gamma = Matrix::from_cols(total.field(), cols);
    Ok(HopfGalois::LeftHopf(HopfGaloisData {
        domain,
        beta,
        beta_inverse,
        gamma,
    }))
}

/// Certifies that the inverse really inverts and that the translation map
/// lands in the balanced centralizer and is a unital algebra map.
pub fn verify_hopf_galois(b: &LeftBialgebroid, hg: &HopfGaloisData) -> Certification {
    let mut cert = Certification::new();
    let total = b.total();
    let nh = total.dim();
    let field = total.field();

    let id_cod = Matrix::identity(field, hg.beta.rows());
    let id_dom = Matrix::identity(field, hg.beta.cols());
    cert.record(
        "canonical-map-invertible",
        hg.beta.mul(&hg.beta_inverse) == id_cod && hg.beta_inverse.mul(&hg.beta) == id_dom,
        "stored inverse does not invert the canonical map",
    );

    // membership: left t-multiplication on the first leg agrees with right
    // t-multiplication on the second leg on every translation image
    let na = b.base().dim();
    let first: Vec<Matrix> = (0..na).map(|a| b.target_left_mult(a)).collect();
    let second: Vec<Matrix> = (0..na)
        .map(|a| total.right_mult(&b.target_map().col(a)))
        .collect();
    match takeuchi_subspace(&hg.domain, &first, &second) {
        Ok(cent) => {
            let mut bad = None;
            for i in 0..nh {
                if !cent.contains_vec(&hg.gamma.col(i)) {
                    bad = Some(total.label(i).to_string());
                    break;
                }
            }
            cert.record(
                "translation-in-twisted-takeuchi",
                bad.is_none(),
                bad.unwrap_or_default(),
            );
        }
        Err(e) => cert.fail("translation-in-twisted-takeuchi", format!("{e}")),
    }

    // multiplicativity for the product with reversed second legs
    let mut bad = None;
    'mult: for i in 0..nh {
        let rep_i = hg.domain.represent(&hg.gamma.col(i));
        for j in 0..nh {
            let rep_j = hg.domain.represent(&hg.gamma.col(j));
            let prod = hg
                .domain
                .project(&legwise_product_second_reversed(total, &rep_i, &rep_j));
            let expected = hg.gamma.mul_vec(total.basis_product(i, j));
            if prod != expected {
                bad = Some(format!("({}, {})", total.label(i), total.label(j)));
                break 'mult;
            }
        }
    }
    cert.record("translation-multiplicative", bad.is_none(), bad.unwrap_or_default());

    let unit = total.unit_vec();
    cert.record(
        "translation-unital",
        hg.gamma.mul_vec(&unit) == hg.domain.project_pure(&[&unit, &unit]),
        "translation of 1 is not the class of 1 (x) 1",
    );

    cert
}
