#pragma once

#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

#include "gqf/qfield.hpp"
#include "gqf/rational.hpp"

namespace gqf {

using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using KMat = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic>;
using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

Rat det_rat(QMat a);          // Gaussian elimination over Q
Int det_int(const IMat& a);   // fraction-free Bareiss
FieldElement det_field(KMat a);

int rank_mod_p(IMat m, std::int64_t p);

QMat scaled(const QMat& m, const Rat& c); // entrywise; avoids mixed-scalar expressions

QMat to_rational(const KMat& m); // entrywise; throws if any entry is irrational
IMat to_integer(const QMat& m);  // entrywise; throws on non-integers
QMat to_qmat(const IMat& m);

bool is_symmetric(const QMat& m);
bool is_symmetric(const IMat& m);

// Entrywise equality; Eigen's operator== does not deduce cleanly for the
// multiprecision scalar.
bool eq(const QMat& a, const QMat& b);
bool eq(const IMat& a, const IMat& b);

} // namespace gqf
