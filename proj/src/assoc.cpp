#include "gqf/assoc.hpp"

namespace gqf {

std::vector<Rat> quad_coeffs(const QMat& m)
{
    std::vector<Rat> out;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i; j < m.cols(); ++j)
            out.push_back(i == j ? m(i, i) : 2 * m(i, j));
    return out;
}

AssocResult associated_form_direct(const GenQuadForm& g)
{
    const int n = g.arity();
    const int m = 2 * n;
    FieldElement w = omega(g.field()), wbar = conj(w);

    // z_i and tau(z_i) as K-linear forms in (x_1, y_1, ..., x_n, y_n)
    auto lin = [&](int i, bool conjugated) {
        std::vector<FieldElement> v(m);
        v[2 * i] = FieldElement(1);
        v[2 * i + 1] = conjugated ? wbar : w;
        return v;
    };

    KMat acc(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            acc(i, j) = FieldElement();
    auto add_product = [&](const FieldElement& c, const std::vector<FieldElement>& u,
                           const std::vector<FieldElement>& v) {
        if (c == FieldElement())
            return;
        for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) {
                FieldElement t = c * u[k] * v[l] / Rat(2);
                acc(k, l) += t;
                acc(l, k) += t;
            }
    };

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            FieldElement a = g.alpha(i, j);
            add_product(a, lin(i, false), lin(j, false));
            add_product(conj(a), lin(i, true), lin(j, true));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            add_product(g.beta(i, j), lin(i, false), lin(j, true));

    return AssocResult{to_rational(acc), "direct"};
}

KMat change_of_basis_T(const QuadField& field, int n)
{
    KMat t(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j)
            t(i, j) = FieldElement();
    FieldElement w = omega(field);
    for (int r = 0; r < n; ++r) {
        t(r, 2 * r) = FieldElement(1);
        t(r, 2 * r + 1) = w;
        t(n + r, 2 * r) = FieldElement(1);
        t(n + r, 2 * r + 1) = conj(w);
    }
    return t;
}

AssocResult associated_matrix_via_T(const GenQuadForm& g)
{
    KMat t = change_of_basis_T(g.field(), g.arity());
    KMat mg = gram_matrix_G(g);
    KMat mq = t.transpose() * mg * t;
    return AssocResult{to_rational(mq), "congruence"};
}

AssocResult binary_associated_matrix(const BinarySextuple& s)
{
    auto coords = [](const FieldElement& e) -> std::pair<Rat, Rat> {
        return {e.x(), e.y()};
    };
    auto [a1, a2] = coords(s.a);
    auto [b1, b2] = coords(s.b);
    auto [c1, c2] = coords(s.c);
    auto [e1, e2] = coords(s.e);
    Rat d = s.d, f = s.f;
    Rat D(s.field.D());

    QMat m(4, 4);
    if (!s.field.half_kind()) {
        m << 2 * a1 + d, 2 * D * a2, b1 + e1, D * (b2 - e2),
            2 * D * a2, D * (2 * a1 - d), D * (b2 + e2), D * (b1 - e1),
            b1 + e1, D * (b2 + e2), 2 * c1 + f, 2 * D * c2,
            D * (b2 - e2), D * (b1 - e1), 2 * D * c2, D * (2 * c1 - f);
    } else {
        Rat p = (1 + D) / 2, q = (1 + 3 * D) / 4, r = (1 - D) / 2, t = (1 - D) / 4;
        QMat m1(2, 2), m2(2, 2), m3(2, 2);
        m1 << 2 * a1 + a2 + d, a1 + p * a2 + d / 2,
            a1 + p * a2 + d / 2, p * a1 + q * a2 + t * d;
        m2 << b1 + b2 / 2 + e1 + e2 / 2, b1 / 2 + p / 2 * b2 + e1 / 2 + t * e2,
            b1 / 2 + p / 2 * b2 + e1 / 2 + p / 2 * e2, p / 2 * b1 + q / 2 * b2 + r / 2 * e1 + t / 2 * e2;
        m3 << 2 * c1 + c2 + f, c1 + p * c2 + f / 2,
            c1 + p * c2 + f / 2, p * c1 + q * c2 + t * f;
        m.block(0, 0, 2, 2) = m1;
        m.block(0, 2, 2, 2) = m2;
        m.block(2, 0, 2, 2) = m2.transpose();
        m.block(2, 2, 2, 2) = m3;
    }
    return AssocResult{m, "binary-closed-form"};
}

DetRelation det_relation_check(const GenQuadForm& g)
{
    const int n = g.arity();
    QMat mq = associated_form_direct(g).MQ;
    Rat det_mq = det_rat(mq);

    KMat mg = gram_matrix_G(g);
    Rat det_mg = rational_value(det_field(mg));

    Rat dn = 1;
    for (int i = 0; i < n; ++i)
        dn *= Rat(g.field().D());

    Rat scaled;
    if (!g.field().half_kind()) {
        Rat two_pow = 1;
        for (int i = 0; i < 2 * n; ++i)
            two_pow *= 2;
        scaled = two_pow * det_mg; // det(2 M_G)
    } else {
        scaled = det_mg;
    }
    return DetRelation{det_mq, scaled, det_mq == dn * scaled};
}

int det_mod4_invariant(const BinarySextuple& s)
{
    if (s.field.half_kind())
        throw std::domain_error("det_mod4_invariant requires D = 2, 3 (mod 4)");
    GenQuadForm g = from_sextuple(s);
    if (classify_integrality(g) == IntegralityClass::Nonintegral)
        throw std::domain_error("det_mod4_invariant requires an integral form");
    if (!is_z_valued(g))
        throw std::domain_error("det_mod4_invariant requires a Z-valued form");
    Rat det_mq = det_rat(binary_associated_matrix(s).MQ);
    Rat quotient = det_mq / (Rat(s.field.D()) * Rat(s.field.D()));
    return static_cast<int>(mod_floor(to_int(quotient), 4));
}

} // namespace gqf
