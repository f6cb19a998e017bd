#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gqf/qfield.hpp"

namespace gqf {

// Multi-index with lexicographic order (componentwise, first difference).
using MultiIndex = std::vector<int>;

inline int weight(const MultiIndex& i)
{
    int s = 0;
    for (int c : i)
        s += c;
    return s;
}

// A generalized polynomial sum_{i,j} alpha_{ij} z^i tau(z)^j in n variables
// over Q(sqrt(D)).  Keys are (i, j) pairs; zero coefficients are never stored
// and iteration order is lexicographic on (i, j).
class GenPoly {
public:
    using Key = std::pair<MultiIndex, MultiIndex>;
    using CoeffMap = std::map<Key, FieldElement>;

    GenPoly(int n, const QuadField& field) : n_(n), field_(field)
    {
        if (n < 1)
            throw std::invalid_argument("GenPoly: n must be positive");
    }

    int arity() const { return n_; }
    const QuadField& field() const { return field_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    FieldElement coeff(const Key& k) const
    {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? FieldElement() : it->second;
    }

    void set_coeff(const MultiIndex& i, const MultiIndex& j, const FieldElement& a);
    void add_coeff(const MultiIndex& i, const MultiIndex& j, const FieldElement& a);

    int degree() const;
    bool operator==(const GenPoly& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

private:
    void check_key(const MultiIndex& i, const MultiIndex& j) const;

    int n_;
    QuadField field_;
    CoeffMap coeffs_;
};

FieldElement eval(const GenPoly& g, const std::vector<FieldElement>& point);

bool is_q_valued(const GenPoly& g);

// Coefficients of g in the basis g_ij: for i < j the pair (a, b) multiplies
// g_ij = z^i tau^j + tau^i z^j and g_ji = sqrt(D)(z^i tau^j - tau^i z^j);
// for i = j the first component multiplies g_ii = z^i tau^i.
using BasisDecomposition = std::map<GenPoly::Key, std::pair<Rat, Rat>>;
BasisDecomposition basis_decompose(const GenPoly& g);
GenPoly from_basis_decomposition(int n, const QuadField& field, const BasisDecomposition& d);

// Polynomial with rational coefficients in the 2n generators
// u_r = z_r + tau(z_r), v_r = sqrt(D)(z_r - tau(z_r)), exponent order
// (u_1, v_1, ..., u_n, v_n).
class GeneratorPoly {
public:
    using CoeffMap = std::map<std::vector<int>, Rat>;

    explicit GeneratorPoly(int n) : n_(n) {}
    static GeneratorPoly constant(int n, const Rat& c);

    int arity() const { return n_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    void add_term(const std::vector<int>& e, const Rat& c);

    GeneratorPoly operator+(const GeneratorPoly& o) const;
    GeneratorPoly operator*(const GeneratorPoly& o) const;
    GeneratorPoly scaled(const Rat& c) const;
    GeneratorPoly times_var(int var_index) const; // multiply by u_r (2r) or v_r (2r+1)

    Rat eval(const std::vector<Rat>& uv) const;

private:
    int n_;
    CoeffMap coeffs_;
};

// Values (u_1, v_1, ..., u_n, v_n) of the generators at a point of K^n.
std::vector<Rat> generator_values(const std::vector<FieldElement>& point);

GeneratorPoly rewrite_in_generators(const GenPoly& g);

} // namespace gqf
