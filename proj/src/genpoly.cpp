#include "gqf/genpoly.hpp"

#include <algorithm>

namespace gqf {

void GenPoly::check_key(const MultiIndex& i, const MultiIndex& j) const
{
    if (static_cast<int>(i.size()) != n_ || static_cast<int>(j.size()) != n_)
        throw std::invalid_argument("GenPoly: multi-index arity mismatch");
    for (int c : i)
        if (c < 0)
            throw std::invalid_argument("GenPoly: negative exponent");
    for (int c : j)
        if (c < 0)
            throw std::invalid_argument("GenPoly: negative exponent");
}

void GenPoly::set_coeff(const MultiIndex& i, const MultiIndex& j, const FieldElement& a)
{
    check_key(i, j);
    Key k{i, j};
    if (a == FieldElement())
        coeffs_.erase(k);
    else
        coeffs_[k] = a;
}

void GenPoly::add_coeff(const MultiIndex& i, const MultiIndex& j, const FieldElement& a)
{
    check_key(i, j);
    Key k{i, j};
    FieldElement s = coeff(k) + a;
    if (s == FieldElement())
        coeffs_.erase(k);
    else
        coeffs_[k] = s;
}

int GenPoly::degree() const
{
    int d = 0;
    for (const auto& [k, a] : coeffs_)
        d = std::max(d, weight(k.first) + weight(k.second));
    return d;
}

namespace {

FieldElement pow_elem(const FieldElement& a, int e)
{
    FieldElement r(1);
    for (int i = 0; i < e; ++i)
        r = r * a;
    return r;
}

} // namespace

FieldElement eval(const GenPoly& g, const std::vector<FieldElement>& point)
{
    if (static_cast<int>(point.size()) != g.arity())
        throw std::invalid_argument("eval: point arity mismatch");
    std::vector<FieldElement> taus(point.size());
    for (size_t r = 0; r < point.size(); ++r)
        taus[r] = conj(point[r]);
    FieldElement sum;
    for (const auto& [k, a] : g.coeffs()) {
        FieldElement term = a;
        for (int r = 0; r < g.arity(); ++r)
            term = term * pow_elem(point[r], k.first[r]) * pow_elem(taus[r], k.second[r]);
        sum += term;
    }
    return sum;
}

bool is_q_valued(const GenPoly& g)
{
    for (const auto& [k, a] : g.coeffs()) {
        if (g.coeff({k.second, k.first}) != conj(a))
            return false;
    }
    return true;
}

BasisDecomposition basis_decompose(const GenPoly& g)
{
    if (!is_q_valued(g))
        throw std::domain_error("basis_decompose: polynomial is not Q-valued");
    BasisDecomposition out;
    for (const auto& [k, a] : g.coeffs()) {
        const auto& [i, j] = k;
        if (i < j) {
            auto [s, t] = sqrtd_coords(a);
            out[{i, j}] = {s, t};
        } else if (i == j) {
            out[{i, i}] = {rational_value(a), Rat(0)};
        }
        // keys with i > j are the conjugate partners of stored i < j keys
    }
    return out;
}

GenPoly from_basis_decomposition(int n, const QuadField& field, const BasisDecomposition& d)
{
    GenPoly g(n, field);
    FieldElement sq = sqrt_d(field);
    for (const auto& [k, ab] : d) {
        const auto& [i, j] = k;
        const auto& [a, b] = ab;
        if (i == j) {
            g.add_coeff(i, i, FieldElement(a));
        } else {
            FieldElement alpha = FieldElement(a) + FieldElement(b) * sq;
            g.add_coeff(i, j, alpha);
            g.add_coeff(j, i, conj(alpha));
        }
    }
    return g;
}

GeneratorPoly GeneratorPoly::constant(int n, const Rat& c)
{
    GeneratorPoly p(n);
    p.add_term(std::vector<int>(2 * n, 0), c);
    return p;
}

void GeneratorPoly::add_term(const std::vector<int>& e, const Rat& c)
{
    if (static_cast<int>(e.size()) != 2 * n_)
        throw std::invalid_argument("GeneratorPoly: exponent arity mismatch");
    auto it = coeffs_.find(e);
    Rat s = (it == coeffs_.end() ? Rat(0) : it->second) + c;
    if (s == 0) {
        if (it != coeffs_.end())
            coeffs_.erase(it);
    } else {
        coeffs_[e] = s;
    }
}

GeneratorPoly GeneratorPoly::operator+(const GeneratorPoly& o) const
{
    GeneratorPoly r = *this;
    for (const auto& [e, c] : o.coeffs_)
        r.add_term(e, c);
    return r;
}

GeneratorPoly GeneratorPoly::operator*(const GeneratorPoly& o) const
{
    GeneratorPoly r(n_);
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            std::vector<int> e(2 * n_);
            for (int k = 0; k < 2 * n_; ++k)
                e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    return r;
}

GeneratorPoly GeneratorPoly::scaled(const Rat& c) const
{
    GeneratorPoly r(n_);
    if (c == 0)
        return r;
    for (const auto& [e, k] : coeffs_)
        r.coeffs_[e] = k * c;
    return r;
}

GeneratorPoly GeneratorPoly::times_var(int var_index) const
{
    GeneratorPoly r(n_);
    for (const auto& [e, c] : coeffs_) {
        std::vector<int> e2 = e;
        ++e2[var_index];
        r.coeffs_[e2] = c;
    }
    return r;
}

Rat GeneratorPoly::eval(const std::vector<Rat>& uv) const
{
    if (static_cast<int>(uv.size()) != 2 * n_)
        throw std::invalid_argument("GeneratorPoly::eval: wrong point size");
    Rat sum = 0;
    for (const auto& [e, c] : coeffs_) {
        Rat term = c;
        for (int k = 0; k < 2 * n_; ++k)
            for (int t = 0; t < e[k]; ++t)
                term *= uv[k];
        sum += term;
    }
    return sum;
}

std::vector<Rat> generator_values(const std::vector<FieldElement>& point)
{
    std::vector<Rat> uv;
    uv.reserve(2 * point.size());
    for (const auto& a : point) {
        uv.push_back(trace(a));
        uv.push_back(twisted_diff(a));
    }
    return uv;
}

namespace {

// Rewriter for the two symmetrised monomial families
//   S(i,j) = z^i tau^j + tau^i z^j   and   A(i,j) = sqrt(D)(z^i tau^j - tau^i z^j)
// as polynomials in the u_r, v_r.  Recursion peels one factor of the highest
// active variable; the base case S(i,i) is a product of the norm kernels
// N_r = z_r tau(z_r) = (u_r^2 - v_r^2/D)/4.  The 1/4 is forced by
// (z + tau z)^2 - (z - tau z)^2 = 4 z tau(z).
class Rewriter {
public:
    Rewriter(int n, std::int64_t D) : n_(n), d_(D) {}

    GeneratorPoly norm_kernel(int r) const
    {
        GeneratorPoly p(n_);
        std::vector<int> e(2 * n_, 0);
        e[2 * r] = 2;
        p.add_term(e, Rat(1) / 4);
        e[2 * r] = 0;
        e[2 * r + 1] = 2;
        p.add_term(e, Rat(-1) / (4 * Rat(d_)));
        return p;
    }

    GeneratorPoly sym(const MultiIndex& i, const MultiIndex& j)
    {
        if (i == j) {
            GeneratorPoly p = GeneratorPoly::constant(n_, 2);
            for (int r = 0; r < n_; ++r)
                for (int t = 0; t < i[r]; ++t)
                    p = p * norm_kernel(r);
            return p;
        }
        auto [r, in_i] = top_var(i, j);
        if (in_i) {
            MultiIndex i2 = i;
            --i2[r];
            GeneratorPoly s = sym(i2, j), a = skew(i2, j);
            return (s.times_var(2 * r) + a.times_var(2 * r + 1).scaled(Rat(1) / Rat(d_)))
                .scaled(Rat(1) / 2);
        }
        MultiIndex j2 = j;
        --j2[r];
        GeneratorPoly s = sym(i, j2), a = skew(i, j2);
        return (s.times_var(2 * r) + a.times_var(2 * r + 1).scaled(Rat(-1) / Rat(d_)))
            .scaled(Rat(1) / 2);
    }

    GeneratorPoly skew(const MultiIndex& i, const MultiIndex& j)
    {
        if (i == j)
            return GeneratorPoly(n_);
        auto [r, in_i] = top_var(i, j);
        if (in_i) {
            MultiIndex i2 = i;
            --i2[r];
            GeneratorPoly s = sym(i2, j), a = skew(i2, j);
            return (s.times_var(2 * r + 1) + a.times_var(2 * r)).scaled(Rat(1) / 2);
        }
        MultiIndex j2 = j;
        --j2[r];
        GeneratorPoly s = sym(i, j2), a = skew(i, j2);
        return (a.times_var(2 * r) + s.times_var(2 * r + 1).scaled(-1)).scaled(Rat(1) / 2);
    }

private:
    // Highest variable carrying any exponent, preferring the z-side.
    std::pair<int, bool> top_var(const MultiIndex& i, const MultiIndex& j) const
    {
        for (int r = n_ - 1; r >= 0; --r) {
            if (i[r] > 0)
                return {r, true};
            if (j[r] > 0)
                return {r, false};
        }
        throw std::logic_error("top_var on zero index");
    }

    int n_;
    std::int64_t d_;
};

} // namespace

GeneratorPoly rewrite_in_generators(const GenPoly& g)
{
    if (!is_q_valued(g))
        throw std::domain_error("rewrite_in_generators: polynomial is not Q-valued");
    Rewriter rw(g.arity(), g.field().D());
    GeneratorPoly out(g.arity());
    for (const auto& [k, alpha] : g.coeffs()) {
        const auto& [i, j] = k;
        if (i < j) {
            auto [a, b] = sqrtd_coords(alpha);
            out = out + rw.sym(i, j).scaled(a) + rw.skew(i, j).scaled(b);
        } else if (i == j) {
            out = out + rw.sym(i, i).scaled(rational_value(alpha) / 2);
        }
    }
    return out;
}

} // namespace gqf
