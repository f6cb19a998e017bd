#include "gqf/linalg.hpp"

namespace gqf {

Rat det_rat(QMat a)
{
    const auto n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("det_rat: square matrix required");
    Rat det = 1;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = c; r < n; ++r)
            if (a(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return 0;
        if (pivot != c) {
            a.row(pivot).swap(a.row(c));
            det = -det;
        }
        det *= a(c, c);
        for (Eigen::Index r = c + 1; r < n; ++r) {
            if (a(r, c) == 0)
                continue;
            Rat f = a(r, c) / a(c, c);
            for (Eigen::Index k = c; k < n; ++k)
                a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

Int det_int(const IMat& a)
{
    const auto n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("det_int: square matrix required");
    if (n == 0)
        return 1;
    Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = Int(a(i, j));
    Int prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index pivot = -1;
            for (Eigen::Index r = k + 1; r < n; ++r)
                if (m(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                return 0;
            m.row(pivot).swap(m.row(k));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

FieldElement det_field(KMat a)
{
    const auto n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("det_field: square matrix required");
    FieldElement det(1);
    FieldElement zero;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = c; r < n; ++r)
            if (a(r, c) != zero) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return zero;
        if (pivot != c) {
            a.row(pivot).swap(a.row(c));
            det = -det;
        }
        det = det * a(c, c);
        for (Eigen::Index r = c + 1; r < n; ++r) {
            if (a(r, c) == zero)
                continue;
            FieldElement f = a(r, c) / a(c, c);
            for (Eigen::Index k = c; k < n; ++k)
                a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

int rank_mod_p(IMat m, std::int64_t p)
{
    if (p < 2)
        throw std::invalid_argument("rank_mod_p: p must be prime");
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            throw std::invalid_argument("rank_mod_p: p must be prime");
    const auto rows = m.rows(), cols = m.cols();
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = mod_floor_i(m(i, j), p);
    int rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index c = 0; c < cols && row < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < rows; ++r)
            if (m(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        m.row(pivot).swap(m.row(row));
        std::int64_t inv = static_cast<std::int64_t>(inv_mod(Int(m(row, c)), Int(p)));
        auto mulmod = [p](std::int64_t a, std::int64_t b) {
            return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
        };
        for (Eigen::Index r = row + 1; r < rows; ++r) {
            if (m(r, c) == 0)
                continue;
            std::int64_t f = mulmod(m(r, c), inv);
            for (Eigen::Index k = c; k < cols; ++k)
                m(r, k) = mod_floor_i(m(r, k) - mulmod(f, m(row, k)), p);
        }
        ++row;
        ++rank;
    }
    return rank;
}

QMat scaled(const QMat& m, const Rat& c)
{
    QMat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j) * c;
    return out;
}

QMat to_rational(const KMat& m)
{
    QMat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = rational_value(m(i, j));
    return out;
}

IMat to_integer(const QMat& m)
{
    IMat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = to_int64(m(i, j));
    return out;
}

QMat to_qmat(const IMat& m)
{
    QMat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = Rat(m(i, j));
    return out;
}

bool is_symmetric(const QMat& m)
{
    if (m.rows() != m.cols())
        return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i))
                return false;
    return true;
}

bool is_symmetric(const IMat& m)
{
    if (m.rows() != m.cols())
        return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i))
                return false;
    return true;
}

bool eq(const QMat& a, const QMat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

bool eq(const IMat& a, const IMat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

} // namespace gqf
