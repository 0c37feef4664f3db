//! The two sides of the correspondence: left ideal two-sided coideals,
//! coinvariant-style subrings, the maps between them, and the coring
//! structure induced on a quotient by a certified ideal.

use crate::core::LeftBialgebroid;
use crate::BialgebroidError;
use exact_linalg::{kernel, vect, Certification, Matrix, QuotientMap, SpanBuilder, Subspace};
use finalg::{
    primitive_idempotents, tensor_chain, tensor_over_A, BimoduleStructure, TensorOverA,
};

/// A subspace certified as a left ideal and two-sided coideal.
pub struct IdealCoideal {
    pub subspace: Subspace,
    pub left_ideal: bool,
    pub two_sided_coideal: bool,
    pub certification: Certification,
}

impl IdealCoideal {
    pub fn is_certified(&self) -> bool {
        self.certification.passed()
    }
}

/// A subspace certified as a unital subalgebra containing the target image
/// and stable under the coproduct in the comodule sense.
pub struct CoidealSubring {
    pub subspace: Subspace,
    pub subalgebra: bool,
    pub contains_target: bool,
    pub comodule: bool,
    pub certification: Certification,
}

impl CoidealSubring {
    pub fn is_certified(&self) -> bool {
        self.certification.passed()
    }
}

/// Checks a subspace for the ideal side of the correspondence.
pub fn certify_ideal_coideal(
    b: &LeftBialgebroid,
    subspace: &Subspace,
) -> Result<IdealCoideal, BialgebroidError> {
    let total = b.total();
    let nh = total.dim();
    shape_guard(b, subspace)?;
    let mut cert = Certification::new();
    let basis = subspace.basis_vectors();

    let mut bad = None;
    'absorb: for i in 0..nh {
        for (k, w) in basis.iter().enumerate() {
            if !subspace.contains_vec(&total.multiply(&total.basis_vec(i), w)) {
                bad = Some(format!("({}, basis {k})", total.label(i)));
                break 'absorb;
            }
        }
    }
    let left_ideal = bad.is_none();
    cert.record("ideal-absorbs-left-multiplication", left_ideal, bad.unwrap_or_default());

    let counit = b.counit_map();
    let mut bad = None;
    for (k, w) in basis.iter().enumerate() {
        if !vect::is_zero(&counit.mul_vec(w)) {
            bad = Some(format!("basis {k}"));
            break;
        }
    }
    let counit_ok = bad.is_none();
    cert.record("coideal-counit-vanishes", counit_ok, bad.unwrap_or_default());

    // the coproduct may mix the subspace into either leg, so the admissible
    // target is the class span of v (x) e_j and e_j (x) v
    let coring = b.coring();
    let field = total.field();
    let mut target = SpanBuilder::new(field, coring.dim());
    for w in &basis {
        for j in 0..nh {
            let ej = total.basis_vec(j);
            target.insert(coring.project_pure(&[w, &ej]));
            target.insert(coring.project_pure(&[&ej, w]));
        }
    }
    let delta = b.coproduct();
    let mut bad = None;
    for (k, w) in basis.iter().enumerate() {
        if !target.contains(&delta.mul_vec(w)) {
            bad = Some(format!("basis {k}"));
            break;
        }
    }
    let coproduct_ok = bad.is_none();
    cert.record("coideal-coproduct-contained", coproduct_ok, bad.unwrap_or_default());

    Ok(IdealCoideal {
        subspace: subspace.clone(),
        left_ideal,
        two_sided_coideal: counit_ok && coproduct_ok,
        certification: cert,
    })
}

/// Checks a subspace for the subring side of the correspondence.
pub fn certify_coideal_subring(
    b: &LeftBialgebroid,
    subspace: &Subspace,
) -> Result<CoidealSubring, BialgebroidError> {
    let total = b.total();
    let nh = total.dim();
    shape_guard(b, subspace)?;
    let mut cert = Certification::new();
    let basis = subspace.basis_vectors();

    let mut bad = None;
    'closed: for (k, v) in basis.iter().enumerate() {
        for (l, w) in basis.iter().enumerate() {
            if !subspace.contains_vec(&total.multiply(v, w)) {
                bad = Some(format!("(basis {k}, basis {l})"));
                break 'closed;
            }
        }
    }
    let closed = bad.is_none();
    cert.record("subring-closed-under-product", closed, bad.unwrap_or_default());

    let unital = subspace.contains_vec(&total.unit_vec());
    cert.record("subring-contains-unit", unital, "1 is missing");

    let base = b.base();
    let mut bad = None;
    for a in 0..base.dim() {
        if !subspace.contains_vec(&b.target_map().col(a)) {
            bad = Some(base.label(a).to_string());
            break;
        }
    }
    let contains_target = bad.is_none();
    cert.record("subring-contains-target-image", contains_target, bad.unwrap_or_default());

    // comodule condition: the coproduct sends the subspace into (its own
    // span) tensor the whole algebra, read inside the coring classes
    let coring = b.coring();
    let field = total.field();
    let mut target = SpanBuilder::new(field, coring.dim());
    for w in &basis {
        for j in 0..nh {
            target.insert(coring.project_pure(&[w, &total.basis_vec(j)]));
        }
    }
    let delta = b.coproduct();
    let mut bad = None;
    for (k, w) in basis.iter().enumerate() {
        if !target.contains(&delta.mul_vec(w)) {
            bad = Some(format!("basis {k}"));
            break;
        }
    }
    let comodule = bad.is_none();
    cert.record("subring-comodule", comodule, bad.unwrap_or_default());

    Ok(CoidealSubring {
        subspace: subspace.clone(),
        subalgebra: closed && unital,
        contains_target,
        comodule,
        certification: cert,
    })
}

/// The quotient by a certified ideal, with the inherited coproduct and
/// counit certified as a coring structure.
pub struct QuotientCoring {
    pub quot: QuotientMap,
    pub tensor: TensorOverA,
    /// Quotient-class coordinates of the inherited coproduct.
    pub coproduct: Matrix,
    pub counit: Matrix,
    pub certification: Certification,
}

/// Base bimodule carried by the quotient of the total algebra by a left
/// ideal: both embeddings still act by left multiplication, descended.
fn bar_bimodule(b: &LeftBialgebroid, quot: &QuotientMap) -> BimoduleStructure {
    let base = b.base();
    let mut left = Vec::with_capacity(base.dim());
    let mut right = Vec::with_capacity(base.dim());
    for a in 0..base.dim() {
        left.push(quot.projection.mul(&b.source_left_mult(a)).mul(&quot.section));
        right.push(quot.projection.mul(&b.target_left_mult(a)).mul(&quot.section));
    }
    BimoduleStructure {
        algebra: base.clone(),
        carrier_dim: quot.dim,
        left_action: left,
        right_action: right,
    }
}

/// Tensor of the quotient with the total algebra, balanced so that the
/// descended t-action on the left matches the s-action on the right.
pub(crate) fn mixed_quotient_tensor(
    b: &LeftBialgebroid,
    quot: &QuotientMap,
) -> Result<TensorOverA, BialgebroidError> {
    let bar = bar_bimodule(b, quot);
    let carrier = b.carrier_bimodule();
    Ok(tensor_over_A(&bar, &carrier)?)
}

/// Descends the coproduct and counit to the quotient by an ideal and
/// certifies the result as a coring over the base.
pub fn xi_correspondence(
    b: &LeftBialgebroid,
    ideal: &IdealCoideal,
) -> Result<QuotientCoring, BialgebroidError> {
    if !ideal.is_certified() {
        return Err(BialgebroidError::NotCertified(
            "quotient coring requires a certified ideal".into(),
        ));
    }
    let field = b.total().field();
    let quot = ideal.subspace.quotient();
    let bar = bar_bimodule(b, &quot);
    let tensor = tensor_over_A(&bar, &bar)?;
    let mut cert = Certification::new();

    let ideal_basis = ideal.subspace.basis_vectors();
    let pi_pair = quot.projection.kronecker(&quot.projection);
    let coproduct_full = tensor
        .quot
        .projection
        .mul(&pi_pair)
        .mul(&b.coproduct_representative());
    let mut bad = None;
    for (k, w) in ideal_basis.iter().enumerate() {
        if !vect::is_zero(&coproduct_full.mul_vec(w)) {
            bad = Some(format!("basis {k}"));
            break;
        }
    }
    cert.record("quotient-coproduct-well-defined", bad.is_none(), bad.unwrap_or_default());
    let coproduct = coproduct_full.mul(&quot.section);

    let mut bad = None;
    for (k, w) in ideal_basis.iter().enumerate() {
        if !vect::is_zero(&b.counit_map().mul_vec(w)) {
            bad = Some(format!("basis {k}"));
            break;
        }
    }
    cert.record("quotient-counit-well-defined", bad.is_none(), bad.unwrap_or_default());
    let counit = b.counit_map().mul(&quot.section);

    cert.record(
        "projection-kernel-recovers-ideal",
        kernel(&quot.projection) == ideal.subspace,
        "projection kernel differs from the ideal",
    );

    let q = quot.dim;
    let id_q = Matrix::identity(field, q);
    let d_bar = tensor.quot.section.mul(&coproduct);
    match tensor_chain(&[&bar, &bar, &bar]) {
        Ok(triple) => {
            let one_two = triple.quot.projection.mul(&d_bar.kronecker(&id_q)).mul(&d_bar);
            let two_one = triple.quot.projection.mul(&id_q.kronecker(&d_bar)).mul(&d_bar);
            cert.record(
                "quotient-coassociative",
                one_two == two_one,
                "iterated quotient coproducts differ",
            );
        }
        Err(e) => cert.fail("quotient-coassociative", format!("{e}")),
    }

    // counit cancellation inside the quotient, through the bar actions
    let base = b.base();
    let mut first_cols = Vec::with_capacity(q * q);
    let mut second_cols = vec![vect::zero(field, q); q * q];
    for i in 0..q {
        let eps_i = counit.col(i);
        let mut lam = Matrix::zero(field, q, q);
        let mut rho = Matrix::zero(field, q, q);
        for a in 0..base.dim() {
            if eps_i[a].is_zero() {
                continue;
            }
            lam = lam.add(&bar.left_action[a].scale(&eps_i[a]));
            rho = rho.add(&bar.right_action[a].scale(&eps_i[a]));
        }
        for j in 0..q {
            first_cols.push(lam.col(j));
            // second-leg collapse pairs the counit of slot j with slot i
            second_cols[j * q + i] = rho.col(j);
        }
    }
    let collapse_first = Matrix::from_cols(field, first_cols);
    cert.record(
        "quotient-counit-cancels-first-leg",
        collapse_first.mul(&d_bar) == id_q,
        "first-leg counit collapse is not the identity",
    );
    let collapse_second = Matrix::from_cols(field, second_cols);
    cert.record(
        "quotient-counit-cancels-second-leg",
        collapse_second.mul(&d_bar) == id_q,
        "second-leg counit collapse is not the identity",
    );

    Ok(QuotientCoring { quot, tensor, coproduct, counit, certification: cert })
}

/// Subspace of elements whose coproduct class in (quotient) tensor (total)
/// equals the class of the quotient unit tensor themselves, together with
/// its certification as a subring.
pub fn psi_coinvariants(
    b: &LeftBialgebroid,
    ideal: &IdealCoideal,
) -> Result<CoidealSubring, BialgebroidError> {
    if !ideal.is_certified() {
        return Err(BialgebroidError::NotCertified(
            "coinvariants require a certified ideal".into(),
        ));
    }
    let total = b.total();
    let nh = total.dim();
    let field = total.field();
    let quot = ideal.subspace.quotient();
    let target = mixed_quotient_tensor(b, &quot)?;

    let one_sided = target
        .quot
        .projection
        .mul(&quot.projection.kronecker(&Matrix::identity(field, nh)))
        .mul(&b.coproduct_representative());
    let unit_bar = quot.projection.mul_vec(&total.unit_vec());
    let mut cols = Vec::with_capacity(nh);
    for i in 0..nh {
        cols.push(target.project_pure(&[&unit_bar, &total.basis_vec(i)]));
    }
    let reference = Matrix::from_cols(field, cols);
    let sub = kernel(&one_sided.sub(&reference));

    let mut out = certify_coideal_subring(b, &sub)?;
    // every module over a split semisimple base is flat, which is the
    // precondition for the equalizer to deserve the name
    let flat = primitive_idempotents(b.base()).is_ok();
    out.certification.record(
        "carrier-flat-over-base",
        flat,
        "not certified: base is not split semisimple",
    );
    Ok(out)
}

/// Left ideal generated by the counit-kernel part of a subring, certified
/// as an ideal coideal after the fact.
pub fn phi_ideal(
    b: &LeftBialgebroid,
    subring: &CoidealSubring,
) -> Result<IdealCoideal, BialgebroidError> {
    if !subring.is_certified() {
        return Err(BialgebroidError::NotCertified(
            "ideal generation requires a certified subring".into(),
        ));
    }
    let total = b.total();
    let nh = total.dim();
    let field = total.field();
    let bplus = subring
        .subspace
        .intersect(&b.counit_kernel())
        .map_err(BialgebroidError::Linalg)?;
    let mut span = SpanBuilder::new(field, nh);
    for i in 0..nh {
        let ei = total.basis_vec(i);
        for w in bplus.basis_vectors() {
            span.insert(total.multiply(&ei, &w));
        }
    }
    let ideal = span.into_subspace();
    certify_ideal_coideal(b, &ideal)
}

fn shape_guard(b: &LeftBialgebroid, subspace: &Subspace) -> Result<(), BialgebroidError> {
    let total = b.total();
    if subspace.ambient_dim() != total.dim() || subspace.field() != total.field() {
        return Err(BialgebroidError::Shape(format!(
            "subspace lives in dimension {} over {:?}, total algebra has dimension {}",
            subspace.ambient_dim(),
            subspace.field(),
            total.dim()
        )));
    }
    Ok(())
}
