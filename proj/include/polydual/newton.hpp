#pragma once

#include "polydual/polytope.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace polydual {

/// Monomial in W, X, Y, Z with nonnegative exponents. Affine three-variable
/// polynomials f(x, y, z) use the X, Y, Z slots with the W exponent zero.
struct Monomial {
    std::array<Int, 4> exponents{};  // W, X, Y, Z

    Int weighted_degree(const WeightSystem& w) const;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Support of a weighted-homogeneous polynomial. Coefficients are irrelevant
/// to every computation here and are not stored. `projective` distinguishes
/// four-variable projectivisations (text mentions W) from three-variable
/// singularity polynomials in x, y, z.
struct WeightedPolynomial {
    std::vector<Monomial> monomials;  // in input order, pairwise distinct
    bool projective = false;
};

/// Grammar: terms joined by '+'; a term is a product of factors `V` or `V^n`
/// with V in {W,X,Y,Z} (case-insensitive), n a nonnegative decimal integer,
/// '*' between factors optional, whitespace ignored. Repeated variables in a
/// term accumulate. Duplicate monomials are rejected.
WeightedPolynomial parse_polynomial(std::string_view text);

/// Canonical text form; reparses to the same monomial multiset.
std::string to_string(const WeightedPolynomial& f);
std::string to_string(const Monomial& m, bool projective);

/// Rows = monomials in input order; columns = the variables declared for f
/// (x,y,z for affine polynomials, W,X,Y,Z for projectivisations).
struct ExponentMatrix {
    std::vector<std::vector<Int>> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
};

ExponentMatrix exponent_matrix(const WeightedPolynomial& f);

enum class InvertibilityKind { invertible, non_square, singular_matrix };

struct InvertibilityReport {
    InvertibilityKind kind = InvertibilityKind::non_square;
    bool symmetric = false;                // meaningful for square matrices
    std::optional<Int> determinant;        // present iff square

    bool invertible() const { return kind == InvertibilityKind::invertible; }
};

std::string str(InvertibilityKind k);

/// A polynomial is invertible when its exponent matrix is square and
/// nonsingular; also reports symmetry of square matrices.
InvertibilityReport is_invertible_polynomial(const WeightedPolynomial& f);

/// Basis coordinates of the kernel-lattice vector (exponents - (1,1,1,1)) of
/// a degree-d monomial. WrongDegreeError when the weighted degree is not d.
Vec3 monomial_to_lattice(const Monomial& m, const WeightSystem& w, const LatticeBasis& basis);

/// All degree-d monomials of the weight system, lexicographic in exponents.
std::vector<Monomial> degree_monomials(const WeightSystem& w);

/// Hull of the lattice images of all degree-d monomials: the anticanonical
/// polytope of the weighted projective space in the given basis coordinates.
LatticePolytope weight_polytope(const WeightSystem& w, const LatticeBasis& basis);

/// Hull of the lattice images of f's monomials. WrongDegreeError (naming the
/// offending monomial) when some monomial is not of degree d.
LatticePolytope newton_polytope(const WeightedPolynomial& f, const WeightSystem& w, const LatticeBasis& basis);

}  // namespace polydual
