#pragma once

#include <map>
#include <vector>

#include "gqf/genpoly.hpp"
#include "gqf/linalg.hpp"
#include "gqf/qfield.hpp"

namespace gqf {

enum class IntegralityClass { Nonintegral, Integral, Classical };

// The compact [a, b, c, d, e, f] notation for a binary generalized form:
// alpha_11 = a, alpha_12 = b, alpha_22 = c, beta_11 = d, beta_12 = e,
// beta_22 = f with d, f rational.
struct BinarySextuple {
    QuadField field;
    FieldElement a, b, c, e;
    Rat d, f;
};

// A generalized quadratic form
//   G = sum_{i<=j} alpha_ij z_i z_j + sum_{i,j} beta_ij z_i tau(z_j)
//     + sum_{i<=j} gamma_ij tau(z_i) tau(z_j)
// with the Q-valued closure built in: gamma_ij = tau(alpha_ij) and
// beta_ji = tau(beta_ij), so beta_ii is rational.  Indices are 0-based,
// upper-triangular storage.
class GenQuadForm {
public:
    GenQuadForm(int n, const QuadField& field);

    // Upper-triangular constructor; beta keys with i > j are rejected.
    static GenQuadForm from_upper(int n, const QuadField& field,
                                  const std::map<std::pair<int, int>, FieldElement>& alpha,
                                  const std::map<std::pair<int, int>, FieldElement>& beta);

    // Full-input constructor: gamma and lower-triangular beta must match
    // their conjugate partners exactly; mismatches are rejected, not fixed.
    static GenQuadForm from_full(int n, const QuadField& field,
                                 const std::map<std::pair<int, int>, FieldElement>& alpha,
                                 const std::map<std::pair<int, int>, FieldElement>& beta,
                                 const std::map<std::pair<int, int>, FieldElement>& gamma);

    int arity() const { return n_; }
    const QuadField& field() const { return field_; }

    FieldElement alpha(int i, int j) const; // i <= j
    FieldElement beta(int i, int j) const;  // any i, j; lower half derived
    FieldElement gamma(int i, int j) const { return conj(alpha(i, j)); }

    void set_alpha(int i, int j, const FieldElement& v);
    void set_beta(int i, int j, const FieldElement& v); // i <= j; beta_ii rational

    GenPoly as_genpoly() const;

    bool operator==(const GenQuadForm& o) const
    {
        return n_ == o.n_ && alpha_ == o.alpha_ && beta_ == o.beta_;
    }

private:
    int n_;
    QuadField field_;
    std::map<std::pair<int, int>, FieldElement> alpha_, beta_; // i <= j only
};

KMat gram_matrix_G(const GenQuadForm& g);

Rat eval_form(const GenQuadForm& g, const std::vector<FieldElement>& point);

IntegralityClass classify_integrality(const GenQuadForm& g);

GenQuadForm from_sextuple(const BinarySextuple& s);
BinarySextuple to_sextuple(const GenQuadForm& g); // binary forms only

BinarySextuple parse_sextuple(const QuadField& field,
                              const std::vector<std::string>& six_texts);

bool is_z_valued(const GenQuadForm& g);

} // namespace gqf
