#include "polydual/linalg.hpp"

#include <algorithm>

namespace polydual {

namespace {

Vec4 sub_scaled(const Vec4& a, const Vec4& b, Int q) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = checked_sub(a[i], checked_mul(q, b[i]));
    return r;
}

Vec4 neg4(const Vec4& a) {
    return {checked_neg(a[0]), checked_neg(a[1]), checked_neg(a[2]), checked_neg(a[3])};
}

bool is_zero4(const Vec4& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0; }

// Extended gcd over the four weights: returns u with <w, u> = gcd = 1.
Vec4 weight_inverse(const std::array<Int, 4>& w) {
    // gcd(w0, w1) first, then fold in the rest.
    auto ext = [](Int a, Int b, Int& x, Int& y) {
        // iterative extended Euclid on nonnegative inputs
        Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            Int q = a / b;
            Int t = checked_sub(a, checked_mul(q, b));
            a = b; b = t;
            t = checked_sub(x0, checked_mul(q, x1)); x0 = x1; x1 = t;
            t = checked_sub(y0, checked_mul(q, y1)); y0 = y1; y1 = t;
        }
        x = x0; y = y0;
        return a;
    };
    Int g = w[0];
    Vec4 u{1, 0, 0, 0};
    for (int i = 1; i < 4; ++i) {
        Int x, y;
        Int g2 = ext(g, w[i], x, y);
        for (int j = 0; j < i; ++j) u[j] = checked_mul(u[j], x);
        u[i] = y;
        g = g2;
    }
    if (g != 1) throw InternalInconsistencyError("weight vector is not primitive");
    return u;
}

}  // namespace

WeightSystem WeightSystem::create(Int w0, Int w1, Int w2, Int w3) {
    std::array<Int, 4> w{w0, w1, w2, w3};
    for (Int wi : w)
        if (wi <= 0) throw std::invalid_argument("weights must be positive");
    if (!(w0 <= w1 && w1 <= w2 && w2 <= w3))
        throw std::invalid_argument("weights must be ordered w0 <= w1 <= w2 <= w3");
    for (int skip = 0; skip < 4; ++skip) {
        Int g = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) g = gcd_int(g, w[static_cast<std::size_t>(i)]);
        if (g != 1)
            throw std::invalid_argument("weights are not well-posed: a triple has gcd " + std::to_string(g));
    }
    Int d = checked_add(checked_add(w0, w1), checked_add(w2, w3));
    return WeightSystem(w, d);
}

std::string WeightSystem::str() const {
    return "(" + std::to_string(w_[0]) + ", " + std::to_string(w_[1]) + ", " + std::to_string(w_[2]) + ", " +
           std::to_string(w_[3]) + "; " + std::to_string(degree_) + ")";
}

bool satisfies_weight_equation(const WeightSystem& w, const Vec4& v) {
    Int s = 0;
    for (int i = 0; i < 4; ++i) s = checked_add(s, checked_mul(w.w(i), v[static_cast<std::size_t>(i)]));
    return s == 0;
}

std::vector<Vec4> hermite_normal_form(std::vector<Vec4> rows) {
    std::size_t r = 0;
    for (int c = 0; c < 4 && r < rows.size(); ++c) {
        // Euclidean reduction below row r until at most one nonzero remains.
        while (true) {
            std::size_t piv = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (piv == rows.size() || checked_abs(rows[i][c]) < checked_abs(rows[piv][c])) piv = i;
            }
            if (piv == rows.size()) break;
            std::swap(rows[r], rows[piv]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[r][c];
                rows[i] = sub_scaled(rows[i], rows[r], q);
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] != 0) {
            if (rows[r][c] < 0) rows[r] = neg4(rows[r]);
            for (std::size_t j = 0; j < r; ++j) {
                Int q = div_floor(rows[j][c], rows[r][c]);
                if (q != 0) rows[j] = sub_scaled(rows[j], rows[r], q);
            }
            ++r;
        }
    }
    rows.resize(r);
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero4), rows.end());
    return rows;
}

LatticeBasis kernel_basis(const WeightSystem& w) {
    Vec4 u = weight_inverse(w.weights());
    std::vector<Vec4> gens;
    for (int i = 0; i < 4; ++i) {
        Vec4 g{};
        g[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < 4; ++j)
            g[static_cast<std::size_t>(j)] =
                checked_sub(g[static_cast<std::size_t>(j)], checked_mul(w.w(i), u[static_cast<std::size_t>(j)]));
        gens.push_back(g);
    }
    std::vector<Vec4> hnf = hermite_normal_form(std::move(gens));
    if (hnf.size() != 3) throw InternalInconsistencyError("kernel lattice rank is not 3");
    LatticeBasis basis{hnf[0], hnf[1], hnf[2]};
    for (int i = 0; i < 3; ++i)
        if (!satisfies_weight_equation(w, basis.e(i)))
            throw InternalInconsistencyError("kernel basis vector violates the weight equation");
    return basis;
}

bool spans_same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
    std::vector<Vec4> ha = hermite_normal_form({a.e1, a.e2, a.e3});
    std::vector<Vec4> hb = hermite_normal_form({b.e1, b.e2, b.e3});
    if (ha.size() != 3 || hb.size() != 3)
        throw NonComparableBasesError("basis triple is linearly dependent");
    return ha == hb;
}

bool is_kernel_basis(const WeightSystem& w, const LatticeBasis& basis) {
    for (int i = 0; i < 3; ++i)
        if (!satisfies_weight_equation(w, basis.e(i))) return false;
    return spans_same_lattice(basis, kernel_basis(w));
}

Int lattice_length(const Vec3& u, const Vec3& v) { return content3(sub3(v, u)); }

Vec3 basis_coordinates(const LatticeBasis& basis, const Vec4& v) {
    // Solve x1*e1 + x2*e2 + x3*e3 = v over Z via an invertible 3x3 subsystem.
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            for (int c = b + 1; c < 4; ++c) {
                Mat3 m{Vec3{basis.e1[static_cast<std::size_t>(a)], basis.e2[static_cast<std::size_t>(a)],
                            basis.e3[static_cast<std::size_t>(a)]},
                       Vec3{basis.e1[static_cast<std::size_t>(b)], basis.e2[static_cast<std::size_t>(b)],
                            basis.e3[static_cast<std::size_t>(b)]},
                       Vec3{basis.e1[static_cast<std::size_t>(c)], basis.e2[static_cast<std::size_t>(c)],
                            basis.e3[static_cast<std::size_t>(c)]}};
                Int det = det3(m);
                if (det == 0) continue;
                Vec3 rhs{v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)],
                         v[static_cast<std::size_t>(c)]};
                Vec3 scaled = mat_vec(adjugate3(m), rhs);
                Vec3 x;
                for (int i = 0; i < 3; ++i) {
                    if (scaled[static_cast<std::size_t>(i)] % det != 0)
                        throw NonRepresentableError("vector is not an integral combination of the basis");
                    x[static_cast<std::size_t>(i)] = scaled[static_cast<std::size_t>(i)] / det;
                }
                // Verify all four coordinates, not just the subsystem.
                for (int i = 0; i < 4; ++i) {
                    Int got = checked_add(
                        checked_add(checked_mul(x[0], basis.e1[static_cast<std::size_t>(i)]),
                                    checked_mul(x[1], basis.e2[static_cast<std::size_t>(i)])),
                        checked_mul(x[2], basis.e3[static_cast<std::size_t>(i)]));
                    if (got != v[static_cast<std::size_t>(i)])
                        throw NonRepresentableError("vector lies outside the basis span");
                }
                return x;
            }
        }
    }
    throw NonComparableBasesError("basis triple is linearly dependent");
}

}  // namespace polydual
