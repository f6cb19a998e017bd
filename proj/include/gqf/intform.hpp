#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gqf/linalg.hpp"

namespace gqf {

// Integer quadratic form stored through its doubled Gram matrix
// gram2 = 2 M_Q, so integral (possibly non-classical) forms stay integer.
class IntQuadForm {
public:
    explicit IntQuadForm(IMat gram2);

    static IntQuadForm from_MQ(const QMat& mq);          // 2*mq must be integral
    static IntQuadForm from_coeffs(int m, const std::vector<std::int64_t>& upper);

    int dim() const { return static_cast<int>(gram2_.rows()); }
    const IMat& gram2() const { return gram2_; }
    QMat MQ() const { return scaled(to_qmat(gram2_), Rat(1) / 2); }

    bool is_classical() const; // all off-diagonal gram2 entries even
    Int det_gram2() const { return det_int(gram2_); }
    Int det_MQ_times_2m() const { return det_gram2(); } // det(2 M_Q)

    // Q(x) = x^t M_Q x = (x^t gram2 x) / 2; integer for integer forms.
    Rat value(const IVec& x) const;

    bool operator==(const IntQuadForm& o) const { return eq(gram2_, o.gram2_); }

private:
    IMat gram2_;
};

// Bhargava line "det: a b c d e f" -> ternary M_L = [[a, f/2, e/2],
// [f/2, b, d/2], [e/2, d/2, c]]; the stated determinant is verified.
struct BhargavaTernary {
    std::int64_t det;
    std::array<std::int64_t, 6> coeffs; // a b c d e f
    std::string text() const;
};
BhargavaTernary parse_bhargava(std::string_view line);
IntQuadForm ternary_form(const BhargavaTernary& t);
IntQuadForm one_plus(const BhargavaTernary& t); // 1 (+) L, quaternary

struct CriticalSet {
    std::string label;
    std::vector<std::int64_t> values;   // ascending, distinct, positive
    bool requires_classical = false;    // the nine-number criterion does
};

CriticalSet fifteen_theorem_set(); // 1, 2, 3, 5, 6, 7, 10, 14, 15
CriticalSet load_critical_set(const std::string& path, const std::string& label);

bool is_positive_definite(const IntQuadForm& f);

// All x with Q(x) = a, one representative of each +-pair, exhaustive.
std::vector<IVec> representations(const IntQuadForm& f, std::int64_t a);
bool represents(const IntQuadForm& f, std::int64_t a);

struct CriticalCheck {
    bool all_represented;
    std::vector<std::int64_t> missing;
};
CriticalCheck check_critical_set(const IntQuadForm& f, const CriticalSet& s);

// Searches U with U^t M_{f1} U = M_{f2}, det U = +-1; nullopt is a proof of
// non-isometry (the search is exhaustive).  Determinant mismatch short-circuits.
std::optional<IMat> isometry_test(const IntQuadForm& f1, const IntQuadForm& f2);

bool verify_transform(const IMat& u, const IntQuadForm& f1, const IntQuadForm& f2);

} // namespace gqf
