#include "qmd/dirac.hpp"

namespace qmd {

namespace {

bool positive_real(const ComplexScalar& v) {
    if (!v.is_real()) return false;
    if (v.mode() == ArithMode::Exact) return v.exact_re() > 0;
    return v.to_complex().real() > 0.0;
}

bool nonnegative_real(const ComplexScalar& v) {
    if (!v.is_real()) return false;
    if (v.mode() == ArithMode::Exact) return v.exact_re() >= 0;
    return v.to_complex().real() >= 0.0;
}

}  // namespace

DiracParams::DiracParams(ComplexScalar energy_, ComplexScalar mass_, ComplexScalar hbar_,
                         ComplexScalar c_)
    : energy(std::move(energy_)), mass(std::move(mass_)), hbar(std::move(hbar_)), c(std::move(c_)) {
    const ArithMode m = energy.mode();
    if (mass.mode() != m || hbar.mode() != m || c.mode() != m)
        throw ModeError("Dirac parameters of mixed arithmetic modes");
    if (!positive_real(hbar) || !positive_real(c))
        throw std::invalid_argument("hbar and c must be positive reals");
    if (!nonnegative_real(mass)) throw std::invalid_argument("mass must be a nonnegative real");
    if (!energy.is_real()) throw std::invalid_argument("energy must be real");
}

DiracParams DiracParams::natural(ComplexScalar energy, ComplexScalar mass) {
    auto one = ComplexScalar::one(energy.mode());
    return DiracParams(std::move(energy), std::move(mass), one, one);
}

Quaternion alpha_vector(const DiracParams& p) {
    const ArithMode m = p.mode();
    auto j = ComplexScalar::imaginary(m);
    return Quaternion::vector(-j * p.coeff_a(), -p.coeff_b(), ComplexScalar::zero(m));
}

ComplexScalar matching_kappa(const DiracParams& p) {
    return sqrt_principal(square_of_vector(alpha_vector(p)));
}

TransformA TransformA::standard(ArithMode m) {
    auto O = ComplexScalar::zero(m);
    auto I = ComplexScalar::one(m);
    auto J = ComplexScalar::imaginary(m);
    auto half = ComplexScalar::ratio(1, 2, m);
    Matrix4 fwd(std::array<ComplexScalar, 16>{
        O, -I, I, O,
        J, O, O, -J,
        -I, O, O, -I,
        O, J, J, O});
    Matrix4 inv(std::array<ComplexScalar, 16>{
        O, -J, -I, O,
        -I, O, O, -J,
        I, O, O, -J,
        O, J, -I, O});
    return TransformA{fwd.scale(half), inv};
}

DiffOperator TransformA::forward_op() const {
    return compose(DiffOperator::const_matrix(forward_m),
                   DiffOperator::reflect(3, forward_m.mode()));
}

DiffOperator TransformA::inverse_op() const {
    return compose(DiffOperator::const_matrix(inverse_m),
                   DiffOperator::reflect(3, inverse_m.mode()));
}

AnalyticField transform_A(const AnalyticField& bispinor) {
    return apply_operator(TransformA::standard(bispinor.mode()).forward_op(), bispinor);
}

AnalyticField transform_A_inv(const AnalyticField& quat_field) {
    return apply_operator(TransformA::standard(quat_field.mode()).inverse_op(), quat_field);
}

DiffOperator dirac_quaternionic(const DiracParams& p) {
    return d_alpha(alpha_vector(p));
}

DiffOperator conjugated_dirac(const DiracParams& p) {
    auto a = TransformA::standard(p.mode());
    return -compose(a.inverse_op(), compose(dirac_quaternionic(p), a.forward_op()));
}

namespace {

// Float-mode reconstructions at generic parameter points pick up roundoff
// from the 2x2 solve; comparisons get this slack there and stay exact in
// exact mode.
constexpr double kFloatMatchTol = 1e-12;

bool matrices_match(const Matrix4& a, const Matrix4& b) {
    if (a.mode() == ArithMode::Exact) return a == b;
    return (a - b).sup_norm() <= kFloatMatchTol;
}

bool operators_match(const DiffOperator& a, const DiffOperator& b) {
    if (a.mode() == ArithMode::Exact) return a == b;
    return (a - b).sup_norm() <= kFloatMatchTol;
}

// Pull out the constant term and the three first-derivative coefficients;
// rejects reflections and any other degree pattern.
struct NParts {
    Matrix4 b0, b1, b2, b3;
};

NParts split_conjugated(const DiffOperator& n) {
    const ArithMode m = n.mode();
    NParts parts{Matrix4::zero(m), Matrix4::zero(m), Matrix4::zero(m), Matrix4::zero(m)};
    for (const auto& [key, coeff] : n.terms()) {
        if (key.mask != 0)
            throw ReconstructionError(
                "conjugated Dirac operator has a residual reflection (tilde bookkeeping failure)");
        if (key.total_degree() == 0) {
            parts.b0 = coeff;
        } else if (key.total_degree() == 1) {
            if (key.degree[0] == 1)
                parts.b1 = coeff;
            else if (key.degree[1] == 1)
                parts.b2 = coeff;
            else
                parts.b3 = coeff;
        } else {
            throw ReconstructionError("conjugated Dirac operator has a term of degree > 1");
        }
    }
    return parts;
}

}  // namespace

GammaReconstruction reconstruct_gammas(const DiracParams& p1, const DiracParams& p2) {
    const ArithMode m = p1.mode();
    if (p2.mode() != m) throw ModeError("reconstruction points of different arithmetic modes");
    auto a1 = p1.coeff_a(), b1 = p1.coeff_b();
    auto a2 = p2.coeff_a(), b2 = p2.coeff_b();
    auto det = a1 * b2 - a2 * b1;
    if (det.is_zero())
        throw std::invalid_argument(
            "parameter points do not separate the constant-term coefficients");

    auto n1 = split_conjugated(conjugated_dirac(p1));
    auto n2 = split_conjugated(conjugated_dirac(p2));
    if (!matrices_match(n1.b1, n2.b1) || !matrices_match(n1.b2, n2.b2) ||
        !matrices_match(n1.b3, n2.b3))
        throw ReconstructionError("derivative coefficients depend on the parameter point");

    // B0(a,b) = j*a*P + j*b*Q, solved from the two points
    auto j = ComplexScalar::imaginary(m);
    auto inv = ComplexScalar::one(m) / (j * det);
    Matrix4 p_mat = (n1.b0.scale(b2) - n2.b0.scale(b1)).scale(inv);
    Matrix4 q_mat = (n2.b0.scale(a1) - n1.b0.scale(a2)).scale(inv);

    auto q_inv = q_mat.inverse();
    if (!q_inv) throw ReconstructionError("extracted Q matrix is singular");

    GammaSet set{*q_inv * p_mat, *q_inv * n1.b1, *q_inv * n1.b2, *q_inv * n1.b3, 0};

    // measure the Clifford sign from g0^2 and verify the whole table
    const Matrix4 id = Matrix4::identity(m);
    const Matrix4* g[4] = {&set.g0, &set.g1, &set.g2, &set.g3};
    Matrix4 g0sq = set.g0 * set.g0;
    int s;
    if (matrices_match(g0sq, id))
        s = 1;
    else if (matrices_match(g0sq, -id))
        s = -1;
    else
        throw ReconstructionError("gamma0 squared is not +-identity");
    const int eta[4] = {1, -1, -1, -1};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
            Matrix4 anti = (*g[mu]) * (*g[nu]) + (*g[nu]) * (*g[mu]);
            Matrix4 want = mu == nu
                               ? id.scale(ComplexScalar::integer(2 * s * eta[mu], m))
                               : Matrix4::zero(m);
            if (!matrices_match(anti, want))
                throw ReconstructionError("reconstructed set violates the Clifford relations");
        }
    set.clifford_sign = s;

    // measured sign t with Q = t * g1*g2*g3
    Matrix4 triple = set.g1 * set.g2 * set.g3;
    int t = 0;
    if (matrices_match(q_mat, triple))
        t = 1;
    else if (matrices_match(q_mat, -triple))
        t = -1;

    // measured sign c with D_alpha = c * A (triple * DD) A^{-1} in normal form
    auto a = TransformA::standard(m);
    auto dd = covariant_dirac_operator(set, p1);
    auto conj = compose(a.forward_op(),
                        compose(compose(DiffOperator::const_matrix(triple), dd), a.inverse_op()));
    auto target = dirac_quaternionic(p1);
    int csign = 0;
    if (operators_match(conj, target))
        csign = 1;
    else if (operators_match(-conj, target))
        csign = -1;

    return GammaReconstruction{set, p_mat, q_mat, t, csign};
}

GammaReconstruction reconstruct_gammas(ArithMode m) {
    auto one = ComplexScalar::one(m);
    auto zero = ComplexScalar::zero(m);
    // (a, b) = (1, 0) and (0, 1) in natural units
    return reconstruct_gammas(DiracParams::natural(one, zero), DiracParams::natural(zero, one));
}

DiffOperator covariant_dirac_operator(const GammaSet& g, const DiracParams& p) {
    const ArithMode m = p.mode();
    auto j = ComplexScalar::imaginary(m);
    auto op = DiffOperator::const_matrix(g.g0.scale(j * p.coeff_a()));
    const Matrix4* gk[3] = {&g.g1, &g.g2, &g.g3};
    for (int k = 1; k <= 3; ++k)
        op = op + compose(DiffOperator::const_matrix(*gk[k - 1]), DiffOperator::partial(k, m));
    return op + DiffOperator::scalar(j * p.coeff_b());
}

AnalyticField covariant_residual(const AnalyticField& q, const GammaSet& g,
                                 const DiracParams& p) {
    return apply_operator(covariant_dirac_operator(g, p), q);
}

}  // namespace qmd
