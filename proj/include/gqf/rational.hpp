#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace gqf {

// Exact arithmetic scalars. Expression templates are disabled so these behave
// as plain value types inside Eigen expressions.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline Int to_int(const Rat& r)
{
    if (!is_integer(r))
        throw std::domain_error("to_int: not an integer: " + r.str());
    return num(r);
}

inline std::int64_t to_int64(const Rat& r)
{
    return static_cast<std::int64_t>(to_int(r));
}

// Floored division and the matching remainder (result in [0, m) for m > 0).
inline Int floor_div(const Int& a, const Int& m)
{
    Int q = a / m, r = a % m;
    if (r != 0 && ((r < 0) != (m < 0)))
        --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& m) { return a - m * floor_div(a, m); }

inline std::int64_t mod_floor_i(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// 2-adic valuation; v2(0) is undefined and throws.
inline int v2(Int a)
{
    if (a == 0)
        throw std::domain_error("v2(0) undefined");
    int v = 0;
    while ((a & 1) == 0) {
        a >>= 1;
        ++v;
    }
    return v;
}

inline int v2(const Rat& r) { return v2(num(r)) - v2(den(r)); }

// Inverse of a mod m for odd/general m with gcd(a, m) = 1.
inline Int inv_mod(const Int& a, const Int& m)
{
    Int t = 0, newt = 1, r = m, newr = mod_floor(a, m);
    while (newr != 0) {
        Int q = r / newr;
        Int tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        throw std::domain_error("inv_mod: not invertible");
    return mod_floor(t, m);
}

// Residue of a rational with odd (more generally, invertible) denominator.
inline Int rat_mod(const Rat& r, const Int& m)
{
    return mod_floor(num(r) * inv_mod(den(r), m), m);
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n)
{
    if (n < 0)
        throw std::domain_error("isqrt of negative");
    if (n == 0)
        return 0;
    Int x = Int(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / 2 + 1);
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x)
            return x;
        x = y;
    }
}

// Largest integer x with x^2 <= r (r >= 0 rational).
inline Int floor_sqrt(const Rat& r)
{
    if (r < 0)
        throw std::domain_error("floor_sqrt of negative");
    Int x = isqrt(num(r) / den(r));
    while (Rat((x + 1) * (x + 1)) <= r)
        ++x;
    while (Rat(x * x) > r)
        --x;
    return x;
}

bool is_squarefree(std::int64_t n);

// Parses "p" or "p/q" with optional sign; rejects anything else.
Rat parse_rational(std::string_view text);
std::string format_rational(const Rat& r);

} // namespace gqf

namespace Eigen {

template <>
struct NumTraits<gqf::Rat> : GenericNumTraits<gqf::Rat> {
    using Real = gqf::Rat;
    using NonInteger = gqf::Rat;
    using Nested = gqf::Rat;
    using Literal = long;
    static inline Real epsilon() { return {}; }
    static inline Real dummy_precision() { return {}; }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
};

} // namespace Eigen
