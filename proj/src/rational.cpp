#include "gqf/rational.hpp"

namespace gqf {

bool is_squarefree(std::int64_t n)
{
    if (n == 0)
        return false;
    std::int64_t m = n < 0 ? -n : n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0)
                return false;
        }
    }
    return true;
}

Rat parse_rational(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(p) / Rat(q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

std::string format_rational(const Rat& r)
{
    if (is_integer(r))
        return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

} // namespace gqf
