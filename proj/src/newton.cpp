#include "polydual/newton.hpp"

#include <algorithm>
#include <cctype>

namespace polydual {

Int Monomial::weighted_degree(const WeightSystem& w) const {
    Int d = 0;
    for (int i = 0; i < 4; ++i)
        d = checked_add(d, checked_mul(w.w(i), exponents[static_cast<std::size_t>(i)]));
    return d;
}

WeightedPolynomial parse_polynomial(std::string_view text) {
    WeightedPolynomial poly;
    std::size_t pos = 0;
    const std::size_t n = text.size();

    auto skip_space = [&] {
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto variable_index = [](char c) -> int {
        switch (std::tolower(static_cast<unsigned char>(c))) {
            case 'w': return 0;
            case 'x': return 1;
            case 'y': return 2;
            case 'z': return 3;
        }
        return -1;
    };

    while (true) {
        skip_space();
        if (pos >= n) throw ParseError("expected a term", pos);

        Monomial m;
        bool factor_seen = false;
        while (true) {
            skip_space();
            if (pos >= n) break;
            char c = text[pos];
            if (c == '+') break;
            if (c == '*') {
                if (!factor_seen) throw ParseError("'*' without a preceding factor", pos);
                ++pos;
                skip_space();
                if (pos >= n) throw ParseError("expected a factor after '*'", pos);
                c = text[pos];
            }
            int var = variable_index(c);
            if (var < 0) throw ParseError(std::string("unexpected character '") + c + "'", pos);
            if (var == 0) poly.projective = true;  // W only occurs in projectivisations
            ++pos;
            Int exp = 1;
            if (pos < n && text[pos] == '^') {
                ++pos;
                if (pos >= n || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw ParseError("expected an exponent after '^'", pos);
                exp = 0;
                while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    exp = checked_add(checked_mul(exp, 10), text[pos] - '0');
                    ++pos;
                }
            }
            m.exponents[static_cast<std::size_t>(var)] =
                checked_add(m.exponents[static_cast<std::size_t>(var)], exp);
            factor_seen = true;
        }
        if (!factor_seen) throw ParseError("empty term", pos);
        if (std::find(poly.monomials.begin(), poly.monomials.end(), m) != poly.monomials.end())
            throw ParseError("duplicate monomial " + to_string(m, true), pos);
        poly.monomials.push_back(m);

        skip_space();
        if (pos >= n) break;
        if (text[pos] != '+') throw ParseError("expected '+'", pos);
        ++pos;
    }
    return poly;
}

std::string to_string(const Monomial& m, bool projective) {
    static const char upper[4] = {'W', 'X', 'Y', 'Z'};
    static const char lower[4] = {'w', 'x', 'y', 'z'};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        Int e = m.exponents[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += projective ? upper[i] : lower[i];
        if (e != 1) out += "^" + std::to_string(e);
    }
    if (out.empty()) out = projective ? "X^0" : "x^0";
    return out;
}

std::string to_string(const WeightedPolynomial& f) {
    std::string out;
    for (const auto& m : f.monomials) {
        if (!out.empty()) out += " + ";
        out += to_string(m, f.projective);
    }
    return out;
}

ExponentMatrix exponent_matrix(const WeightedPolynomial& f) {
    ExponentMatrix mat;
    const int first = f.projective ? 0 : 1;
    for (const auto& m : f.monomials) {
        std::vector<Int> row;
        for (int i = first; i < 4; ++i) row.push_back(m.exponents[static_cast<std::size_t>(i)]);
        mat.rows.push_back(std::move(row));
    }
    return mat;
}

std::string str(InvertibilityKind k) {
    switch (k) {
        case InvertibilityKind::invertible: return "invertible";
        case InvertibilityKind::non_square: return "non-square";
        case InvertibilityKind::singular_matrix: return "singular-matrix";
    }
    return "?";
}

namespace {

// Exact determinant by fraction-free expansion; sizes are at most 4.
Int int_determinant(const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Int>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Int term = checked_mul(m[0][j], int_determinant(sub));
        det = (j % 2 == 0) ? checked_add(det, term) : checked_sub(det, term);
    }
    return det;
}

}  // namespace

InvertibilityReport is_invertible_polynomial(const WeightedPolynomial& f) {
    ExponentMatrix mat = exponent_matrix(f);
    InvertibilityReport report;
    if (mat.row_count() != mat.col_count() || mat.row_count() == 0) {
        report.kind = InvertibilityKind::non_square;
        return report;
    }
    report.symmetric = true;
    for (std::size_t i = 0; i < mat.row_count(); ++i)
        for (std::size_t j = i + 1; j < mat.col_count(); ++j)
            if (mat.rows[i][j] != mat.rows[j][i]) report.symmetric = false;
    report.determinant = int_determinant(mat.rows);
    report.kind = (*report.determinant != 0) ? InvertibilityKind::invertible : InvertibilityKind::singular_matrix;
    return report;
}

Vec3 monomial_to_lattice(const Monomial& m, const WeightSystem& w, const LatticeBasis& basis) {
    if (m.weighted_degree(w) != w.degree())
        throw WrongDegreeError("monomial " + to_string(m, true) + " has weighted degree " +
                               std::to_string(m.weighted_degree(w)) + ", expected " +
                               std::to_string(w.degree()));
    Vec4 v;
    for (int i = 0; i < 4; ++i)
        v[static_cast<std::size_t>(i)] = checked_sub(m.exponents[static_cast<std::size_t>(i)], 1);
    return basis_coordinates(basis, v);
}

std::vector<Monomial> degree_monomials(const WeightSystem& w) {
    std::vector<Monomial> result;
    const Int d = w.degree();
    for (Int a = 0; checked_mul(a, w.w(0)) <= d; ++a) {
        Int ra = checked_sub(d, checked_mul(a, w.w(0)));
        for (Int b = 0; checked_mul(b, w.w(1)) <= ra; ++b) {
            Int rb = checked_sub(ra, checked_mul(b, w.w(1)));
            for (Int c = 0; checked_mul(c, w.w(2)) <= rb; ++c) {
                Int rc = checked_sub(rb, checked_mul(c, w.w(2)));
                if (rc % w.w(3) == 0) result.push_back(Monomial{{a, b, c, rc / w.w(3)}});
            }
        }
    }
    return result;
}

LatticePolytope weight_polytope(const WeightSystem& w, const LatticeBasis& basis) {
    std::vector<Vec3> pts;
    for (const auto& m : degree_monomials(w)) pts.push_back(monomial_to_lattice(m, w, basis));
    return hull(std::move(pts));
}

LatticePolytope newton_polytope(const WeightedPolynomial& f, const WeightSystem& w, const LatticeBasis& basis) {
    std::vector<Vec3> pts;
    for (const auto& m : f.monomials) pts.push_back(monomial_to_lattice(m, w, basis));
    return hull(std::move(pts));
}

}  // namespace polydual
