#pragma once

#include "polydual/vec.hpp"

#include <vector>

namespace polydual {

/// A well-posed weight system (w0, w1, w2, w3; d): weights ascending, every
/// triple of weights coprime, d the sum of the weights.
class WeightSystem {
public:
    static WeightSystem create(Int w0, Int w1, Int w2, Int w3);

    Int w(int i) const { return w_[static_cast<std::size_t>(i)]; }
    const std::array<Int, 4>& weights() const { return w_; }
    Int degree() const { return degree_; }

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

    std::string str() const;

private:
    WeightSystem(const std::array<Int, 4>& w, Int d) : w_(w), degree_(d) {}

    std::array<Int, 4> w_{};
    Int degree_ = 0;
};

/// Ordered basis of the rank-3 kernel lattice {x in Z^4 : <w, x> = 0}.
struct LatticeBasis {
    Vec4 e1{}, e2{}, e3{};

    const Vec4& e(int i) const { return i == 0 ? e1 : (i == 1 ? e2 : e3); }
    friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

bool satisfies_weight_equation(const WeightSystem& w, const Vec4& v);

/// Canonical basis of the kernel lattice of w, full index, deterministic
/// (rows of the Hermite normal form of a generating set).
LatticeBasis kernel_basis(const WeightSystem& w);

/// True iff the two triples generate the same rank-3 sublattice of Z^4,
/// i.e. the change of basis is integral with determinant +-1.
/// Throws NonComparableBasesError when either triple is linearly dependent.
bool spans_same_lattice(const LatticeBasis& a, const LatticeBasis& b);

/// Validates the LatticeBasis invariants against w: weight equation plus
/// full-index generation of the kernel lattice.
bool is_kernel_basis(const WeightSystem& w, const LatticeBasis& basis);

/// gcd of the coordinate differences. The closed segment [u, v] carries
/// lattice_length + 1 lattice points, lattice_length - 1 of them interior.
Int lattice_length(const Vec3& u, const Vec3& v);

/// Coordinates of a kernel-lattice vector in the given basis (exact solve).
/// Throws NonRepresentableError when v is outside the basis span over Z.
Vec3 basis_coordinates(const LatticeBasis& basis, const Vec4& v);

/// Hermite normal form (row style) of the lattice generated by the rows;
/// zero rows dropped. Canonical: equal outputs iff equal row lattices.
std::vector<Vec4> hermite_normal_form(std::vector<Vec4> rows);

}  // namespace polydual
