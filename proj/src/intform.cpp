#include "gqf/intform.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gqf {

IntQuadForm::IntQuadForm(IMat gram2) : gram2_(std::move(gram2))
{
    if (!is_symmetric(gram2_))
        throw std::invalid_argument("IntQuadForm: symmetric matrix required");
    for (Eigen::Index i = 0; i < gram2_.rows(); ++i)
        if (gram2_(i, i) % 2 != 0)
            throw std::invalid_argument("IntQuadForm: doubled Gram matrix needs even diagonal");
}

IntQuadForm IntQuadForm::from_MQ(const QMat& mq)
{
    return IntQuadForm(to_integer(scaled(mq, 2)));
}

IntQuadForm IntQuadForm::from_coeffs(int m, const std::vector<std::int64_t>& upper)
{
    if (static_cast<int>(upper.size()) != m * (m + 1) / 2)
        throw std::invalid_argument("from_coeffs: wrong coefficient count");
    IMat g(m, m);
    size_t k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            std::int64_t c = upper[k++];
            if (i == j)
                g(i, i) = 2 * c;
            else
                g(i, j) = g(j, i) = c;
        }
    return IntQuadForm(g);
}

bool IntQuadForm::is_classical() const
{
    for (Eigen::Index i = 0; i < gram2_.rows(); ++i)
        for (Eigen::Index j = i + 1; j < gram2_.cols(); ++j)
            if (gram2_(i, j) % 2 != 0)
                return false;
    return true;
}

Rat IntQuadForm::value(const IVec& x) const
{
    if (x.size() != gram2_.rows())
        throw std::invalid_argument("value: dimension mismatch");
    Int acc = 0;
    for (Eigen::Index i = 0; i < gram2_.rows(); ++i)
        for (Eigen::Index j = 0; j < gram2_.cols(); ++j)
            acc += Int(gram2_(i, j)) * x(i) * x(j);
    return Rat(acc) / 2;
}

std::string BhargavaTernary::text() const
{
    std::ostringstream os;
    os << det << ":";
    for (auto c : coeffs)
        os << " " << c;
    return os.str();
}

BhargavaTernary parse_bhargava(std::string_view line)
{
    std::string s(line);
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("Bhargava line needs 'det: a b c d e f'");
    BhargavaTernary t{};
    t.det = std::stoll(s.substr(0, colon));
    std::istringstream rest(s.substr(colon + 1));
    for (auto& c : t.coeffs)
        if (!(rest >> c))
            throw std::invalid_argument("Bhargava line needs six coefficients: " + s);
    std::string extra;
    if (rest >> extra)
        throw std::invalid_argument("trailing data in Bhargava line: " + s);
    Int det8 = det_int(ternary_form(t).gram2());
    if (det8 != Int(8) * t.det)
        throw std::invalid_argument("Bhargava line determinant mismatch: " + s);
    return t;
}

IntQuadForm ternary_form(const BhargavaTernary& t)
{
    auto [a, b, c, d, e, f] = t.coeffs;
    IMat g(3, 3);
    g << 2 * a, f, e, f, 2 * b, d, e, d, 2 * c;
    return IntQuadForm(g);
}

IntQuadForm one_plus(const BhargavaTernary& t)
{
    auto [a, b, c, d, e, f] = t.coeffs;
    IMat g(4, 4);
    g << 2, 0, 0, 0, 0, 2 * a, f, e, 0, f, 2 * b, d, 0, e, d, 2 * c;
    return IntQuadForm(g);
}

CriticalSet fifteen_theorem_set()
{
    return CriticalSet{"fifteen", {1, 2, 3, 5, 6, 7, 10, 14, 15}, true};
}

CriticalSet load_critical_set(const std::string& path, const std::string& label)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open critical set file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            continue;
        std::string name = line.substr(0, colon);
        if (name != label)
            continue;
        CriticalSet s{label, {}, false};
        std::istringstream rest(line.substr(colon + 1));
        std::int64_t v;
        while (rest >> v)
            s.values.push_back(v);
        if (s.values.empty() || !std::is_sorted(s.values.begin(), s.values.end()) ||
            std::adjacent_find(s.values.begin(), s.values.end()) != s.values.end() ||
            s.values.front() < 1)
            throw std::runtime_error("critical set must be ascending positive integers");
        return s;
    }
    throw std::runtime_error("critical set '" + label + "' not found in " + path);
}

bool is_positive_definite(const IntQuadForm& f)
{
    const IMat& g = f.gram2();
    for (int k = 1; k <= f.dim(); ++k) {
        if (det_int(g.topLeftCorner(k, k)) <= 0)
            return false;
    }
    return true;
}

namespace {

// Q(x) = sum_i c_i (x_i + sum_{j>i} u_ij x_j)^2 for a positive definite form.
struct SquareCompletion {
    std::vector<Rat> pivot;
    QMat shift; // u_ij above the diagonal
};

SquareCompletion complete_squares(const IntQuadForm& f)
{
    const int m = f.dim();
    QMat a = f.MQ();
    SquareCompletion sc;
    sc.shift = QMat(m, m);
    sc.shift.setConstant(Rat(0));
    for (int i = 0; i < m; ++i) {
        Rat c = a(i, i);
        if (c <= 0)
            throw std::domain_error("completion of squares needs a definite form");
        sc.pivot.push_back(c);
        for (int j = i + 1; j < m; ++j)
            sc.shift(i, j) = a(i, j) / c;
        for (int r = i + 1; r < m; ++r)
            for (int s = i + 1; s < m; ++s)
                a(r, s) -= a(i, r) * a(i, s) / c;
    }
    return sc;
}

void enumerate_rec(const SquareCompletion& sc, int i, const Rat& budget, IVec& x,
                   std::vector<IVec>& out, std::int64_t target_doubled,
                   const IntQuadForm& f)
{
    if (i < 0) {
        Int acc = 0;
        for (Eigen::Index r = 0; r < x.size(); ++r)
            for (Eigen::Index s = 0; s < x.size(); ++s)
                acc += Int(f.gram2()(r, s)) * x(r) * x(s);
        if (acc == target_doubled)
            out.push_back(x);
        return;
    }
    Rat center = 0;
    for (Eigen::Index j = i + 1; j < x.size(); ++j)
        center += sc.shift(i, j) * x(j);
    Rat cap = budget / sc.pivot[i];
    if (cap < 0)
        return;
    // integer window |x_i + center| <= sqrt(cap), bounds handled exactly
    Int r = floor_sqrt(cap);
    Rat lo_r = -center - Rat(r) - 1, hi_r = -center + Rat(r) + 1;
    Int lo_i = floor_div(num(lo_r), den(lo_r));
    if (Rat(lo_i) < lo_r)
        ++lo_i;
    Int hi_i = floor_div(num(hi_r), den(hi_r));
    for (Int xi = lo_i; xi <= hi_i; ++xi) {
        Rat dev = Rat(xi) + center;
        Rat used = sc.pivot[i] * dev * dev;
        if (used > budget)
            continue;
        x(i) = static_cast<std::int64_t>(xi);
        enumerate_rec(sc, i - 1, budget - used, x, out, target_doubled, f);
    }
    x(i) = 0;
}

bool sign_canonical(const IVec& x)
{
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x(i) > 0)
            return true;
        if (x(i) < 0)
            return false;
    }
    return false; // zero vector: drop
}

} // namespace

std::vector<IVec> representations(const IntQuadForm& f, std::int64_t a)
{
    if (!is_positive_definite(f))
        throw std::domain_error("representations: positive definite form required");
    if (a <= 0)
        return {};
    SquareCompletion sc = complete_squares(f);
    IVec x = IVec::Zero(f.dim());
    std::vector<IVec> all;
    enumerate_rec(sc, f.dim() - 1, Rat(a), x, all, 2 * a, f);
    std::vector<IVec> out;
    for (const auto& v : all)
        if (sign_canonical(v))
            out.push_back(v);
    return out;
}

bool represents(const IntQuadForm& f, std::int64_t a)
{
    if (a == 0)
        return true;
    return !representations(f, a).empty();
}

CriticalCheck check_critical_set(const IntQuadForm& f, const CriticalSet& s)
{
    if (!is_positive_definite(f))
        throw std::domain_error("check_critical_set: positive definite form required");
    if (s.requires_classical && !f.is_classical())
        throw std::domain_error("critical set '" + s.label +
                                "' certifies universality only for classical forms");
    CriticalCheck out{true, {}};
    for (std::int64_t v : s.values)
        if (!represents(f, v)) {
            out.all_represented = false;
            out.missing.push_back(v);
        }
    return out;
}

std::optional<IMat> isometry_test(const IntQuadForm& f1, const IntQuadForm& f2)
{
    if (f1.dim() != f2.dim())
        throw std::invalid_argument("isometry_test: dimension mismatch");
    if (!is_positive_definite(f1) || !is_positive_definite(f2))
        throw std::domain_error("isometry_test: positive definite forms required");
    if (f1.det_gram2() != f2.det_gram2())
        return std::nullopt;

    const int m = f1.dim();
    const IMat& g1 = f1.gram2();
    const IMat& g2 = f2.gram2();

    // process target basis vectors by ascending norm
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g2(a, a) < g2(b, b); });

    // candidate image vectors per target norm, both signs
    std::vector<std::vector<IVec>> candidates(m);
    for (int k = 0; k < m; ++k) {
        std::int64_t norm2 = g2(order[k], order[k]); // x^t g1 x target
        for (const auto& v : representations(f1, norm2 / 2)) {
            candidates[k].push_back(v);
            candidates[k].push_back(-v);
        }
        if (candidates[k].empty())
            return std::nullopt;
    }

    std::vector<IVec> chosen(m, IVec::Zero(m));
    std::vector<IVec> gram_cache(m, IVec::Zero(m)); // g1 * chosen[k]

    IMat result(m, m);
    auto search = [&](auto&& self, int depth) -> bool {
        if (depth == m) {
            for (int k = 0; k < m; ++k)
                result.col(order[k]) = chosen[k];
            return true;
        }
        for (const auto& v : candidates[depth]) {
            bool ok = true;
            for (int prev = 0; prev < depth && ok; ++prev) {
                std::int64_t want = g2(order[prev], order[depth]);
                std::int64_t got = 0;
                for (int r = 0; r < m; ++r)
                    got += gram_cache[prev](r) * v(r);
                ok = (got == want);
            }
            if (!ok)
                continue;
            chosen[depth] = v;
            gram_cache[depth] = g1 * v;
            if (self(self, depth + 1))
                return true;
        }
        return false;
    };
    if (!search(search, 0))
        return std::nullopt;
    if (!verify_transform(result, f1, f2))
        throw std::logic_error("isometry search produced an invalid transform");
    return result;
}

bool verify_transform(const IMat& u, const IntQuadForm& f1, const IntQuadForm& f2)
{
    if (u.rows() != u.cols() || u.rows() != f1.dim() || f1.dim() != f2.dim())
        return false;
    Int d = det_int(u);
    if (d != 1 && d != -1)
        return false;
    IMat lhs = u.transpose() * f1.gram2() * u;
    return eq(lhs, f2.gram2());
}

} // namespace gqf
