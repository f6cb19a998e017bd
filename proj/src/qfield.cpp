#include "gqf/qfield.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace gqf {

QuadField::QuadField(std::int64_t D) : d_(D)
{
    if (D == 0 || D == 1)
        throw std::invalid_argument("D must differ from 0 and 1");
    if (!is_squarefree(D))
        throw std::invalid_argument("D must be squarefree, got " + std::to_string(D));
}

FieldElement::FieldElement(const QuadField& k, Rat x, Rat y)
    : d_(y == 0 ? 0 : k.D()), x_(std::move(x)), y_(std::move(y))
{
}

FieldElement FieldElement::raw(std::int64_t d, Rat x, Rat y)
{
    FieldElement e;
    e.d_ = (y == 0) ? 0 : d;
    e.x_ = std::move(x);
    e.y_ = std::move(y);
    return e;
}

std::int64_t common_d(const FieldElement& a, const FieldElement& b)
{
    if (a.d_ == 0)
        return b.d_;
    if (b.d_ == 0 || a.d_ == b.d_)
        return a.d_;
    throw field_mismatch{};
}

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    std::int64_t d = common_d(*this, o);
    x_ += o.x_;
    y_ += o.y_;
    d_ = (y_ == 0) ? 0 : d;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    std::int64_t d = common_d(*this, o);
    x_ -= o.x_;
    y_ -= o.y_;
    d_ = (y_ == 0) ? 0 : d;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    std::int64_t d = common_d(*this, o);
    Rat x, y;
    if (d != 0 && mod_floor_i(d, 4) == 1) {
        // w^2 = w + (D-1)/4
        Rat c = Rat(d - 1) / 4;
        x = x_ * o.x_ + y_ * o.y_ * c;
        y = x_ * o.y_ + y_ * o.x_ + y_ * o.y_;
    } else {
        // w^2 = D
        x = x_ * o.x_ + y_ * o.y_ * Rat(d);
        y = x_ * o.y_ + y_ * o.x_;
    }
    x_ = std::move(x);
    y_ = std::move(y);
    d_ = (y_ == 0) ? 0 : d;
    return *this;
}

FieldElement FieldElement::operator/(const FieldElement& o) const
{
    Rat n = norm(o);
    if (n == 0)
        throw std::domain_error("division by zero element");
    return (*this * conj(o)) / n;
}

FieldElement conj(const FieldElement& e)
{
    if (e.d_ == 0)
        return e;
    if (mod_floor_i(e.d_, 4) == 1)
        return FieldElement::raw(e.d_, e.x_ + e.y_, -e.y_);
    return FieldElement::raw(e.d_, e.x_, -e.y_);
}

Rat trace(const FieldElement& e)
{
    if (e.d_ != 0 && mod_floor_i(e.d_, 4) == 1)
        return 2 * e.x_ + e.y_;
    return 2 * e.x_;
}

Rat norm(const FieldElement& e)
{
    if (e.d_ == 0)
        return e.x_ * e.x_;
    if (mod_floor_i(e.d_, 4) == 1)
        return e.x_ * e.x_ + e.x_ * e.y_ + e.y_ * e.y_ * Rat(1 - e.d_) / 4;
    return e.x_ * e.x_ - Rat(e.d_) * e.y_ * e.y_;
}

std::pair<Rat, Rat> sqrtd_coords(const FieldElement& e)
{
    if (e.D() != 0 && mod_floor_i(e.D(), 4) == 1)
        return {e.x() + e.y() / 2, e.y() / 2};
    return {e.x(), e.y()};
}

Rat twisted_diff(const FieldElement& e)
{
    // sqrt(D)(a - tau(a)) = 2*t*D for a = s + t*sqrt(D)
    auto [s, t] = sqrtd_coords(e);
    (void)s;
    return 2 * t * Rat(e.D());
}

FieldElement omega(const QuadField& k) { return FieldElement(k, 0, 1); }

FieldElement sqrt_d(const QuadField& k)
{
    if (k.half_kind())
        return FieldElement(k, -1, 2); // sqrt(D) = 2w - 1
    return FieldElement(k, 0, 1);
}

namespace {

// One signed term: rational, rational followed by 'w', or bare (+/-)w.
// Returns false when the cursor is at the end.
bool take_term(std::string_view s, size_t& pos, Rat& coeff, bool& is_w, bool first)
{
    if (pos >= s.size())
        return false;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
        if (!first || s[pos] == '-')
            sign = (s[pos] == '-') ? -1 : 1;
        ++pos;
        if (!first && pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
            throw std::invalid_argument("malformed element");
    } else if (!first) {
        throw std::invalid_argument("expected '+' or '-' between terms");
    }
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
        ++pos;
    bool has_digits = pos > start;
    is_w = pos < s.size() && s[pos] == 'w';
    if (is_w)
        ++pos;
    if (!has_digits && !is_w)
        throw std::invalid_argument("malformed element term");
    coeff = has_digits ? parse_rational(s.substr(start, (is_w ? pos - 1 : pos) - start)) : Rat(1);
    coeff *= sign;
    return true;
}

} // namespace

FieldElement parse_element(std::string_view text, const QuadField& k)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty element");

    Rat x = 0, y = 0;
    bool seen_w = false;
    size_t pos = 0;
    for (int n = 0; n < 2; ++n) {
        Rat coeff;
        bool is_w = false;
        if (!take_term(s, pos, coeff, is_w, n == 0))
            break;
        if (is_w) {
            if (seen_w)
                throw std::invalid_argument("duplicate w term");
            seen_w = true;
            y += coeff;
        } else {
            if (n == 1 || seen_w)
                throw std::invalid_argument("rational term must precede the w term");
            x += coeff;
        }
    }
    if (pos != s.size())
        throw std::invalid_argument("trailing characters in element: " + s);
    return FieldElement(k, x, y);
}

std::string format_element(const FieldElement& e)
{
    if (e.rational())
        return format_rational(e.x());
    std::ostringstream os;
    bool have_x = e.x() != 0;
    if (have_x)
        os << format_rational(e.x());
    Rat y = e.y();
    if (have_x && y > 0)
        os << "+";
    if (y == 1)
        os << "w";
    else if (y == -1)
        os << "-w";
    else
        os << format_rational(y) << "w";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e)
{
    return os << format_element(e);
}

} // namespace gqf
