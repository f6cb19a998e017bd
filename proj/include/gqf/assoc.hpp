#pragma once

#include <string>
#include <vector>

#include "gqf/genform.hpp"
#include "gqf/linalg.hpp"

namespace gqf {

// Result of the G -> Q transformation.  M_Q is the symmetric matrix of the
// associated quadratic form in the variables (x_1, y_1, ..., x_n, y_n).
struct AssocResult {
    QMat MQ;
    std::string provenance; // "direct", "congruence", "binary-closed-form"
};

// Coefficients a_kk, a_kl (k < l) of the quadratic form with matrix m, in the
// row-major upper-triangular order (a_11, a_12, ..., a_1m, a_22, ...).
std::vector<Rat> quad_coeffs(const QMat& m);

// Substitutes z_r = x_r + y_r*w and expands.
AssocResult associated_form_direct(const GenQuadForm& g);

// M_Q = T^t M_G T with the interleaved change-of-basis matrix T.
AssocResult associated_matrix_via_T(const GenQuadForm& g);
KMat change_of_basis_T(const QuadField& field, int n);

// Closed-form quaternary matrix for a binary form, split by D mod 4.
AssocResult binary_associated_matrix(const BinarySextuple& s);

struct DetRelation {
    Rat det_MQ;
    Rat det_MG_scaled; // det(2 M_G) for D = 2,3 (4); det(M_G) for D = 1 (4)
    bool holds;
};

// det(M_Q) = D^n * det(2 M_G) or D^n * det(M_G) according to D mod 4.
DetRelation det_relation_check(const GenQuadForm& g);

// det(M_Q)/D^2 mod 4 for an integral Z-valued binary form, D = 2,3 (mod 4).
int det_mod4_invariant(const BinarySextuple& s);

} // namespace gqf
