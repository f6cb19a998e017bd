#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gqf/rational.hpp"

namespace gqf {

struct field_mismatch : std::domain_error {
    field_mismatch() : std::domain_error("elements belong to different quadratic fields") {}
};

// The quadratic field Q(sqrt(D)) for squarefree D outside {0, 1}.  Elements
// are written in the integral basis (1, w) where w = sqrt(D) for
// D = 2, 3 (mod 4) and w = (1 + sqrt(D))/2 for D = 1 (mod 4).
class QuadField {
public:
    enum class OmegaKind { Sqrt, Half };

    explicit QuadField(std::int64_t D);

    std::int64_t D() const { return d_; }
    OmegaKind omega_kind() const { return (mod_floor_i(d_, 4) == 1) ? OmegaKind::Half : OmegaKind::Sqrt; }
    bool half_kind() const { return omega_kind() == OmegaKind::Half; }

    bool operator==(const QuadField& o) const { return d_ == o.d_; }

private:
    std::int64_t d_;
};

// x + y*w over Q(sqrt(D)).  A purely rational value is stored with D = 0 and
// is compatible with every field; mixing two distinct nonzero D's throws.
class FieldElement {
public:
    FieldElement() : d_(0), x_(0), y_(0) {}
    FieldElement(const Rat& x) : d_(0), x_(x), y_(0) {}   // NOLINT: implicit by design
    FieldElement(long x) : d_(0), x_(x), y_(0) {}         // NOLINT
    FieldElement(int x) : d_(0), x_(x), y_(0) {}          // NOLINT
    FieldElement(const QuadField& k, Rat x, Rat y);

    std::int64_t D() const { return d_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }
    bool rational() const { return y_ == 0; }

    bool is_integral() const { return is_integer(x_) && is_integer(y_); }
    bool in_two_ok() const { return is_integer(x_ / 2) && is_integer(y_ / 2); }

    FieldElement operator-() const { return raw(d_, -x_, -y_); }
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    FieldElement operator/(const Rat& q) const
    {
        if (q == 0)
            throw std::domain_error("division by zero");
        return raw(d_, x_ / q, y_ / q);
    }
    FieldElement operator/(const FieldElement& o) const; // exact: a*conj(o)/norm(o)

    bool operator==(const FieldElement& o) const { return d_ == o.d_ && x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e);

private:
    static FieldElement raw(std::int64_t d, Rat x, Rat y);

    std::int64_t d_; // 0 when the element is rational
    Rat x_, y_;

    friend FieldElement conj(const FieldElement&);
    friend Rat trace(const FieldElement&);
    friend Rat norm(const FieldElement&);
    friend std::int64_t common_d(const FieldElement&, const FieldElement&);
};

FieldElement conj(const FieldElement& e);
Rat trace(const FieldElement& e);
Rat norm(const FieldElement& e);

inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }

// a = s + t*sqrt(D) with rational s, t (independent of the integral basis).
std::pair<Rat, Rat> sqrtd_coords(const FieldElement& e);

// sqrt(D) * (a - conj(a)); always rational.
Rat twisted_diff(const FieldElement& e);

inline Rat rational_value(const FieldElement& e)
{
    if (!e.rational())
        throw std::domain_error("element is not rational");
    return e.x();
}

FieldElement omega(const QuadField& k);
FieldElement sqrt_d(const QuadField& k); // sqrt(D) itself as an element

// Grammar: <rat> | <rat>w | <rat>(+|-)<rat>w, with "w" / "-w" shorthands for
// coefficient 1.  This is the canonical textual form used by the CLI and the
// data files.
FieldElement parse_element(std::string_view text, const QuadField& k);
std::string format_element(const FieldElement& e);

} // namespace gqf

namespace Eigen {

template <>
struct NumTraits<gqf::FieldElement> : GenericNumTraits<gqf::FieldElement> {
    using Real = gqf::FieldElement;
    using NonInteger = gqf::FieldElement;
    using Nested = gqf::FieldElement;
    using Literal = long;
    static inline Real epsilon() { return {}; }
    static inline Real dummy_precision() { return {}; }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 120,
        MulCost = 120,
    };
};

} // namespace Eigen
