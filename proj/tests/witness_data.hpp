#pragma once

#include <vector>

#include "gqf/genform.hpp"
#include "gqf/linalg.hpp"

// Binary witnesses for D in {2, 3, 5, 6, 7, 10} together with their
// quaternary matrices, pinned for the unit and acceptance suites.
namespace witness {

inline gqf::BinarySextuple sextuple(std::int64_t D, const std::vector<std::string>& six)
{
    gqf::QuadField k(D);
    return gqf::parse_sextuple(k, six);
}

inline gqf::QMat mat4(std::initializer_list<std::int64_t> vals)
{
    gqf::QMat m(4, 4);
    int i = 0;
    for (auto v : vals) {
        m(i / 4, i % 4) = gqf::Rat(v);
        ++i;
    }
    return m;
}

inline gqf::BinarySextuple g2() { return sextuple(2, {"1", "-w", "1", "-1", "0", "-1"}); }
inline gqf::BinarySextuple g3() { return sextuple(3, {"2", "-2w", "2", "-3", "-w", "0"}); }
inline gqf::BinarySextuple g5() { return sextuple(5, {"3-w", "0", "1", "-4", "0", "0"}); }
inline gqf::BinarySextuple g6() { return sextuple(6, {"3", "2w", "3", "-5", "w", "-1"}); }
inline gqf::BinarySextuple g7() { return sextuple(7, {"3", "1+2w", "4", "-5", "-1+2w", "3"}); }
inline gqf::BinarySextuple g10() { return sextuple(10, {"3", "w", "5+w", "-5", "w", "7"}); }

inline gqf::QMat mq2()
{
    return mat4({1, 0, 0, -2, 0, 6, -2, 0, 0, -2, 1, 0, -2, 0, 0, 6});
}
inline gqf::QMat mq3()
{
    return mat4({1, 0, 0, -3, 0, 21, -9, 0, 0, -9, 4, 0, -3, 0, 0, 12});
}
inline gqf::QMat mq5()
{
    return mat4({1, -2, 0, 0, -2, 9, 0, 0, 0, 0, 2, 1, 0, 0, 1, 3});
}
inline gqf::QMat mq6()
{
    return mat4({1, 0, 0, 6, 0, 66, 18, 0, 0, 18, 5, 0, 6, 0, 0, 42});
}
inline gqf::QMat mq7()
{
    return mat4({1, 0, 0, 0, 0, 77, 28, 14, 0, 28, 11, 0, 0, 14, 0, 35});
}
inline gqf::QMat mq10()
{
    return mat4({1, 0, 0, 0, 0, 110, 20, 0, 0, 20, 17, 20, 0, 0, 20, 30});
}

} // namespace witness
