#include "polydual/fixtures.hpp"

#include <stdexcept>

namespace polydual {

CaseName case_from_string(const std::string& s) {
    if (s == "Q16" || s == "q16") return CaseName::Q16;
    if (s == "S16" || s == "s16") return CaseName::S16;
    throw std::invalid_argument("unknown case '" + s + "' (expected Q16 or S16)");
}

namespace {

CaseFixture make_q16() {
    CaseFixture f{
        .name = "Q16",
        .weights = WeightSystem::create(2, 3, 7, 9),
        .basis = LatticeBasis{{8, 0, -1, -1}, {6, -1, 0, -1}, {5, -1, -1, 0}},
        .affine_text = "x^4z+y^3+xz^2",
        .projective_text = "X^4Z+Y^3+XZ^2+W^6Z+W^7Y",
        .weight_vertices = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {-1, 2, -1}, {4, -3, -3}},
        .monomial_correspondence = {{"W^9X", {1, 0, 0}},
                                    {"W^7Y", {0, 1, 0}},
                                    {"W^6Z", {0, 0, 1}},
                                    {"XZ^2", {0, -1, 1}},
                                    {"Y^3", {-1, 2, -1}},
                                    {"X^7", {4, -3, -3}},
                                    {"X^4Z", {2, -2, -1}}},
        .newton_vertices = {{0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {-1, 2, -1}, {2, -2, -1}},
        .newton_witness = {Rat(-4, 3), Rat(-1), Rat(1, 3)},
        .newton_witness_face = {{0, 1, 0}, {-1, 2, -1}, {2, -2, -1}},
        .gamma = {Vec3{0, -1, 1}, Vec3{-1, 2, -1}},
        .gamma_star = {Vec3{8, 6, 5}, Vec3{2, 0, -1}},
        .stated_gamma_star_count = 5,
        .described_intermediates = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {-1, 2, -1}, {2, -2, -1}, {2, -1, -1}}},
        .described_nonreflexive = {},
        .proof_target_weights = {2, 3, 5, 7},
    };
    return f;
}

CaseFixture make_s16() {
    CaseFixture f{
        .name = "S16",
        .weights = WeightSystem::create(2, 3, 5, 7),
        .basis = LatticeBasis{{6, 0, -1, -1}, {5, -1, 0, -1}, {4, -1, -1, 0}},
        .affine_text = "x^4y+xz^2+y^2z",
        .projective_text = "X^4Y+XZ^2+Y^2Z+W^5Z+W^6Y",
        .weight_vertices = {{1, 0, 0},
                            {0, 1, 0},
                            {0, 0, 1},
                            {0, -1, 1},
                            {-1, 1, 0},
                            {-1, 2, -1},
                            {2, -1, -2},
                            {3, -2, -2}},
        .monomial_correspondence = {{"W^7X", {1, 0, 0}},
                                    {"W^6Y", {0, 1, 0}},
                                    {"W^5Z", {0, 0, 1}},
                                    {"XZ^2", {0, -1, 1}},
                                    {"Y^2Z", {-1, 1, 0}},
                                    {"WY^3", {-1, 2, -1}},
                                    {"X^4Y", {2, -1, -2}},
                                    {"WX^5", {3, -2, -2}}},
        .newton_vertices = {{0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {-1, 1, 0}, {2, -1, -2}},
        .newton_witness = {Rat(-3, 2), Rat(0), Rat(-1)},
        .newton_witness_face = {{0, 0, 1}, {0, -1, 1}, {2, -1, -2}},
        .gamma = {Vec3{0, -1, 1}, Vec3{-1, 1, 0}},
        .gamma_star = {Vec3{6, 5, 4}, Vec3{1, 0, -1}},
        .stated_gamma_star_count = 4,
        // "with n = 1, 2, or with (-1,2,-1)": the hull of the base vertices
        // plus (-1,2,-1) alone is not reflexive (checked below), so the clause
        // resolves to an optional extra vertex on top of the n = 1, 2 family.
        .described_intermediates =
            {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {-1, 1, 0}, {2, -1, -2}, {2, -1, -1}},
             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {-1, 1, 0}, {2, -1, -2}, {3, -2, -2}},
             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {-1, 1, 0}, {2, -1, -2}, {2, -1, -1}, {-1, 2, -1}},
             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {-1, 1, 0}, {2, -1, -2}, {3, -2, -2}, {-1, 2, -1}}},
        .described_nonreflexive =
            {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {-1, 1, 0}, {2, -1, -2}, {-1, 2, -1}}},
        .proof_target_weights = {2, 3, 7, 9},
    };
    return f;
}

}  // namespace

const CaseFixture& fixture(CaseName c) {
    static const CaseFixture q16 = make_q16();
    static const CaseFixture s16 = make_s16();
    return c == CaseName::Q16 ? q16 : s16;
}

}  // namespace polydual
