#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszulkit/tensor.hpp"
#include "oracles.hpp"

using namespace koszulkit;

namespace {

RelatorSpace ym_relators(std::uint32_t s) {
    std::vector<TensorVector> rel;
    for (const auto& row : oracles::ym_relator_rows_euclid(s)) {
        TensorVector v;
        v.degree = 3;
        v.coeffs = row;
        rel.push_back(v);
    }
    return RelatorSpace(s + 1, 3, rel);
}

}  // namespace

TEST_CASE("word_index positional arithmetic") {
    CHECK(word_index({}, 4) == 0);
    CHECK(word_index({0, 1}, 4) == 1);
    CHECK(word_index({3, 2, 1}, 4) == 57);
    CHECK_THROWS_AS(word_index({4}, 4), InputError);
    for (std::uint64_t i = 0; i < 64; ++i)
        CHECK(word_index(word_from_index(i, 3, 4), 4) == i);
}

TEST_CASE("tensor vector construction and concat") {
    TensorVector a = TensorVector::from_terms(4, 1, {{{2}, 3}});
    TensorVector b = TensorVector::from_terms(4, 2, {{{0, 1}, mpq_class("1/2")}});
    TensorVector ab = concat(a, b, 4);
    CHECK(ab.degree == 3);
    REQUIRE(ab.coeffs.size() == 1);
    CHECK(ab.coeffs[0].first == word_index({2, 0, 1}, 4));
    CHECK(ab.coeffs[0].second == mpq_class("3/2"));
    CHECK_THROWS_AS(TensorVector::from_terms(4, 2, {{{0, 1, 2}, 1}}), InputError);
}

TEST_CASE("relator space canonicalization reports dropped dependents") {
    TensorVector r1 = TensorVector::from_terms(2, 2, {{{0, 1}, 1}, {{1, 0}, -1}});
    TensorVector r2 = TensorVector::from_terms(2, 2, {{{0, 1}, 2}, {{1, 0}, -2}});
    TensorVector r3 = TensorVector::from_terms(2, 2, {{{0, 0}, 1}});
    RelatorSpace rs(2, 2, {r1, r2, r3});
    CHECK(rs.dim() == 2);
    CHECK(rs.dropped_dependent() == std::vector<std::size_t>{1});
}

TEST_CASE("shift_embed") {
    RelatorSpace ym = ym_relators(3);
    REQUIRE(ym.dim() == 4);

    CHECK(shift_embed(ym, 0, 3) == ym.space());
    CHECK(shift_embed(ym, 1, 4).dim() == 16);
    CHECK(shift_embed(ym, 0, 4).dim() == 16);

    RelatorSpace free_rel(3, 2, {});
    CHECK(shift_embed(free_rel, 1, 4).dim() == 0);
    CHECK_THROWS_AS(shift_embed(ym, 2, 4), InputError);
}

TEST_CASE("ideal_slice dims for cubic Yang-Mills") {
    RelatorSpace ym = ym_relators(3);
    CHECK(ideal_slice(ym, 2).dim() == 0);
    CHECK(ideal_slice(ym, 3).dim() == 4);
    Subspace i4 = ideal_slice(ym, 4);
    CHECK(i4.dim() == 31);  // 16 + 16 - 1 by inclusion-exclusion
    CHECK(subspace_sum(shift_embed(ym, 0, 4), shift_embed(ym, 1, 4)) == i4);
}

TEST_CASE("dual_koszul_slice for cubic Yang-Mills") {
    RelatorSpace ym = ym_relators(3);
    CHECK(dual_koszul_slice(ym, 3) == ym.space());
    Subspace j4 = dual_koszul_slice(ym, 4);
    CHECK(j4.dim() == 1);
    CHECK(dual_koszul_slice(ym, 5).dim() == 0);
    CHECK(dual_koszul_slice(ym, 2) == Subspace::full(16));

    // the degree-4 slice is spanned by sum_nu nu (x) r_nu = sum_nu r_nu (x) nu
    SparseVecQ b;
    {
        std::vector<SparseVecQ> parts;
        for (std::uint32_t nu = 0; nu < 4; ++nu) {
            TensorVector gen = TensorVector::from_terms(4, 1, {{{nu}, 1}});
            TensorVector rel;
            rel.degree = 3;
            rel.coeffs = oracles::ym_relator_rows_euclid(3)[nu];
            parts.push_back(concat(gen, rel, 4).coeffs);
        }
        SparseVecQ acc;
        for (auto& p : parts) acc.insert(acc.end(), p.begin(), p.end());
        b = normalize_sparse_vec(std::move(acc));
    }
    CHECK(j4.contains(b));

    // intersection of shifts is inside every shift
    CHECK(shift_embed(ym, 0, 4).contains_subspace(j4));
    CHECK(shift_embed(ym, 1, 4).contains_subspace(j4));
}

TEST_CASE("perfect pairing: dim J_n(R) + dim I_n(R_perp) = g^n") {
    RelatorSpace ym = ym_relators(3);
    Subspace rperp = annihilator(ym.space());
    std::vector<TensorVector> dual_rel;
    for (const auto& row : rperp.basis()) {
        TensorVector v;
        v.degree = 3;
        v.coeffs = row;
        dual_rel.push_back(v);
    }
    RelatorSpace dual(4, 3, dual_rel);
    for (std::uint32_t n = 0; n <= 5; ++n) {
        std::uint64_t jn = dual_koszul_slice(ym, n).dim();
        std::uint64_t in = ideal_slice(dual, n).dim();
        std::uint64_t gn = 1;
        for (std::uint32_t k = 0; k < n; ++k) gn *= 4;
        CHECK(jn + in == gn);
    }
}

TEST_CASE("J slices nest into padded lower slices") {
    RelatorSpace ym = ym_relators(3);
    Subspace j4 = dual_koszul_slice(ym, 4);
    Subspace j3 = dual_koszul_slice(ym, 3);
    // J_4 inside E (x) J_3 and J_3 (x) E: check membership of basis vectors
    std::vector<SparseVecQ> left, right;
    for (std::uint32_t lam = 0; lam < 4; ++lam) {
        TensorVector gen = TensorVector::from_terms(4, 1, {{{lam}, 1}});
        for (const auto& row : j3.basis()) {
            TensorVector v;
            v.degree = 3;
            v.coeffs = row;
            left.push_back(concat(gen, v, 4).coeffs);
            right.push_back(concat(v, gen, 4).coeffs);
        }
    }
    Subspace ej3 = Subspace::from_spanning_rows(left, 256);
    Subspace j3e = Subspace::from_spanning_rows(right, 256);
    CHECK(ej3.contains_subspace(j4));
    CHECK(j3e.contains_subspace(j4));
}
