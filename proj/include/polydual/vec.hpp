#pragma once

#include "polydual/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace polydual {

using Vec3 = std::array<Int, 3>;   // lattice point / primitive normal
using Vec4 = std::array<Int, 4>;   // element of the rank-3 kernel lattice in Z^4
using Vec3Q = std::array<Rat, 3>;  // rational point (polar-dual vertices)
using Mat3 = std::array<Vec3, 3>;  // rows

inline Vec3 add3(const Vec3& a, const Vec3& b) {
    return {checked_add(a[0], b[0]), checked_add(a[1], b[1]), checked_add(a[2], b[2])};
}

inline Vec3 sub3(const Vec3& a, const Vec3& b) {
    return {checked_sub(a[0], b[0]), checked_sub(a[1], b[1]), checked_sub(a[2], b[2])};
}

inline Vec3 neg3(const Vec3& a) {
    return {checked_neg(a[0]), checked_neg(a[1]), checked_neg(a[2])};
}

inline Vec3 scale3(Int c, const Vec3& a) {
    return {checked_mul(c, a[0]), checked_mul(c, a[1]), checked_mul(c, a[2])};
}

inline bool is_zero3(const Vec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

inline Int dot3(const Vec3& a, const Vec3& b) {
    return checked_add(checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[1])),
                       checked_mul(a[2], b[2]));
}

inline Rat dot3q(const Vec3& n, const Vec3Q& x) {
    return Rat(n[0]) * x[0] + Rat(n[1]) * x[1] + Rat(n[2]) * x[2];
}

inline Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
            checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
            checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
}

// gcd of the absolute coordinates; 0 only for the zero vector.
inline Int content3(const Vec3& a) { return gcd_int(gcd_int(a[0], a[1]), a[2]); }

inline Vec3 primitive3(const Vec3& a) {
    Int g = content3(a);
    if (g == 0) throw InternalInconsistencyError("primitive part of the zero vector");
    return {a[0] / g, a[1] / g, a[2] / g};
}

inline Vec3Q to_rat3(const Vec3& a) { return {Rat(a[0]), Rat(a[1]), Rat(a[2])}; }

inline bool is_integral3(const Vec3Q& a) {
    return a[0].is_integer() && a[1].is_integer() && a[2].is_integer();
}

inline Vec3 to_int3(const Vec3Q& a) {
    if (!is_integral3(a)) throw InternalInconsistencyError("non-integral point where a lattice point was required");
    return {a[0].num(), a[1].num(), a[2].num()};
}

inline Int det3(const Mat3& m) {
    return checked_add(
        checked_sub(checked_mul(m[0][0], checked_sub(checked_mul(m[1][1], m[2][2]), checked_mul(m[1][2], m[2][1]))),
                    checked_mul(m[0][1], checked_sub(checked_mul(m[1][0], m[2][2]), checked_mul(m[1][2], m[2][0])))),
        checked_mul(m[0][2], checked_sub(checked_mul(m[1][0], m[2][1]), checked_mul(m[1][1], m[2][0]))));
}

// adj(m) * m = det(m) * I
inline Mat3 adjugate3(const Mat3& m) {
    auto minor = [&](int r0, int r1, int c0, int c1) {
        return checked_sub(checked_mul(m[r0][c0], m[r1][c1]), checked_mul(m[r0][c1], m[r1][c0]));
    };
    Mat3 a;
    a[0] = {minor(1, 2, 1, 2), checked_neg(minor(0, 2, 1, 2)), minor(0, 1, 1, 2)};
    a[1] = {checked_neg(minor(1, 2, 0, 2)), minor(0, 2, 0, 2), checked_neg(minor(0, 1, 0, 2))};
    a[2] = {minor(1, 2, 0, 1), checked_neg(minor(0, 2, 0, 1)), minor(0, 1, 0, 1)};
    return a;
}

inline Vec3 mat_vec(const Mat3& m, const Vec3& v) {
    return {dot3(m[0], v), dot3(m[1], v), dot3(m[2], v)};
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = checked_add(checked_add(checked_mul(a[i][0], b[0][j]), checked_mul(a[i][1], b[1][j])),
                                  checked_mul(a[i][2], b[2][j]));
    return r;
}

inline std::string str(const Vec3& v) {
    return "(" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) + ")";
}

inline std::string str(const Vec4& v) {
    return "(" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) + ", " +
           std::to_string(v[3]) + ")";
}

inline std::string str(const Vec3Q& v) {
    return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}

// Rank of a family of integer 3-vectors, via exact rational elimination.
inline int rank3(const std::vector<Vec3>& rows) {
    std::vector<Vec3Q> m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(to_rat3(r));
    int rank = 0;
    for (int col = 0; col < 3 && rank < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(m.size()); ++i)
            if (!m[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int i = rank + 1; i < static_cast<int>(m.size()); ++i) {
            if (m[i][col].is_zero()) continue;
            Rat f = m[i][col] / m[rank][col];
            for (int c = col; c < 3; ++c) m[i][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace polydual
