#include "gqf/genform.hpp"

namespace gqf {

GenQuadForm::GenQuadForm(int n, const QuadField& field) : n_(n), field_(field)
{
    if (n < 1)
        throw std::invalid_argument("GenQuadForm: n must be positive");
}

GenQuadForm GenQuadForm::from_upper(int n, const QuadField& field,
                                    const std::map<std::pair<int, int>, FieldElement>& alpha,
                                    const std::map<std::pair<int, int>, FieldElement>& beta)
{
    GenQuadForm g(n, field);
    for (const auto& [ij, v] : alpha)
        g.set_alpha(ij.first, ij.second, v);
    for (const auto& [ij, v] : beta)
        g.set_beta(ij.first, ij.second, v);
    return g;
}

GenQuadForm GenQuadForm::from_full(int n, const QuadField& field,
                                   const std::map<std::pair<int, int>, FieldElement>& alpha,
                                   const std::map<std::pair<int, int>, FieldElement>& beta,
                                   const std::map<std::pair<int, int>, FieldElement>& gamma)
{
    GenQuadForm g(n, field);
    for (const auto& [ij, v] : alpha)
        g.set_alpha(ij.first, ij.second, v);
    for (const auto& [ij, v] : gamma)
        if (v != conj(g.alpha(ij.first, ij.second)))
            throw std::invalid_argument("gamma coefficient is not the conjugate of alpha");
    for (const auto& [ij, v] : alpha)
        if (v != FieldElement() && gamma.find(ij) == gamma.end())
            throw std::invalid_argument("missing gamma partner for alpha coefficient");
    for (const auto& [ij, v] : beta) {
        auto [i, j] = ij;
        if (i <= j)
            g.set_beta(i, j, v);
    }
    for (const auto& [ij, v] : beta) {
        auto [i, j] = ij;
        if (i > j && v != conj(g.beta(j, i)))
            throw std::invalid_argument("beta_ji is not the conjugate of beta_ij");
    }
    return g;
}

FieldElement GenQuadForm::alpha(int i, int j) const
{
    if (i > j || i < 0 || j >= n_)
        throw std::out_of_range("alpha index");
    auto it = alpha_.find({i, j});
    return it == alpha_.end() ? FieldElement() : it->second;
}

FieldElement GenQuadForm::beta(int i, int j) const
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("beta index");
    if (i > j) {
        auto it = beta_.find({j, i});
        return it == beta_.end() ? FieldElement() : conj(it->second);
    }
    auto it = beta_.find({i, j});
    return it == beta_.end() ? FieldElement() : it->second;
}

void GenQuadForm::set_alpha(int i, int j, const FieldElement& v)
{
    if (i > j || i < 0 || j >= n_)
        throw std::out_of_range("alpha index");
    if (v == FieldElement())
        alpha_.erase({i, j});
    else
        alpha_[{i, j}] = v;
}

void GenQuadForm::set_beta(int i, int j, const FieldElement& v)
{
    if (i > j || i < 0 || j >= n_)
        throw std::out_of_range("set_beta expects i <= j");
    if (i == j && !v.rational())
        throw std::invalid_argument("beta_ii must be rational for a Q-valued form");
    if (v == FieldElement())
        beta_.erase({i, j});
    else
        beta_[{i, j}] = v;
}

GenPoly GenQuadForm::as_genpoly() const
{
    GenPoly g(n_, field_);
    auto unit = [&](int r) {
        MultiIndex m(n_, 0);
        m[r] = 1;
        return m;
    };
    MultiIndex zero(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            FieldElement a = alpha(i, j);
            if (a != FieldElement()) {
                MultiIndex zi = unit(i);
                ++zi[j]; // z_i z_j
                g.add_coeff(zi, zero, a);
                g.add_coeff(zero, zi, conj(a));
            }
        }
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            FieldElement b = beta(i, j);
            if (b != FieldElement())
                g.add_coeff(unit(i), unit(j), b);
        }
    return g;
}

KMat gram_matrix_G(const GenQuadForm& g)
{
    int n = g.arity();
    KMat m(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j)
            m(i, j) = FieldElement();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            FieldElement a = g.alpha(i, j);
            if (i == j) {
                m(i, i) = a;
                m(n + i, n + i) = conj(a);
            } else {
                m(i, j) = m(j, i) = a / Rat(2);
                m(n + i, n + j) = m(n + j, n + i) = conj(a) / Rat(2);
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FieldElement b = g.beta(i, j) / Rat(2);
            m(i, n + j) = b;
            m(n + j, i) = b;
        }
    return m;
}

Rat eval_form(const GenQuadForm& g, const std::vector<FieldElement>& point)
{
    if (static_cast<int>(point.size()) != g.arity())
        throw std::invalid_argument("eval_form: point arity mismatch");
    int n = g.arity();
    std::vector<FieldElement> taus(n);
    for (int r = 0; r < n; ++r)
        taus[r] = conj(point[r]);
    FieldElement sum;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            FieldElement a = g.alpha(i, j);
            if (a != FieldElement())
                sum += a * point[i] * point[j] + conj(a) * taus[i] * taus[j];
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FieldElement b = g.beta(i, j);
            if (b != FieldElement())
                sum += b * point[i] * taus[j];
        }
    return rational_value(sum);
}

IntegralityClass classify_integrality(const GenQuadForm& g)
{
    int n = g.arity();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (!g.alpha(i, j).is_integral() || !g.beta(i, j).is_integral())
                return IntegralityClass::Nonintegral;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i < j && !g.alpha(i, j).in_two_ok())
                return IntegralityClass::Integral;
            if (!g.beta(i, j).in_two_ok())
                return IntegralityClass::Integral;
        }
    return IntegralityClass::Classical;
}

GenQuadForm from_sextuple(const BinarySextuple& s)
{
    GenQuadForm g(2, s.field);
    g.set_alpha(0, 0, s.a);
    g.set_alpha(0, 1, s.b);
    g.set_alpha(1, 1, s.c);
    g.set_beta(0, 0, FieldElement(s.d));
    g.set_beta(0, 1, s.e);
    g.set_beta(1, 1, FieldElement(s.f));
    return g;
}

BinarySextuple to_sextuple(const GenQuadForm& g)
{
    if (g.arity() != 2)
        throw std::invalid_argument("to_sextuple: binary form required");
    return BinarySextuple{g.field(),
                          g.alpha(0, 0),
                          g.alpha(0, 1),
                          g.alpha(1, 1),
                          g.beta(0, 1),
                          rational_value(g.beta(0, 0)),
                          rational_value(g.beta(1, 1))};
}

BinarySextuple parse_sextuple(const QuadField& field, const std::vector<std::string>& t)
{
    if (t.size() != 6)
        throw std::invalid_argument("sextuple needs six entries");
    return BinarySextuple{field,
                          parse_element(t[0], field),
                          parse_element(t[1], field),
                          parse_element(t[2], field),
                          parse_element(t[4], field),
                          rational_value(parse_element(t[3], field)),
                          rational_value(parse_element(t[5], field))};
}

bool is_z_valued(const GenQuadForm& g)
{
    // A quadratic form takes integer values on the whole lattice exactly when
    // Q(b) and Q(b + b') - Q(b) - Q(b') are integers for basis vectors b, b',
    // which is coefficient integrality of the associated form.
    int n = g.arity();
    std::vector<std::vector<FieldElement>> pts;
    for (int r = 0; r < n; ++r) {
        std::vector<FieldElement> p(n);
        p[r] = FieldElement(1);
        pts.push_back(p);
        p[r] = omega(g.field());
        pts.push_back(p);
    }
    std::vector<Rat> diag;
    for (const auto& p : pts) {
        Rat v = eval_form(g, p);
        if (!is_integer(v))
            return false;
        diag.push_back(v);
    }
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            std::vector<FieldElement> sum(n);
            for (int r = 0; r < n; ++r)
                sum[r] = pts[i][r] + pts[j][r];
            if (!is_integer(eval_form(g, sum) - diag[i] - diag[j]))
                return false;
        }
    return true;
}

} // namespace gqf
