#include <doctest.h>

#include <algorithm>

#include "bca/errors.hpp"
#include "bca/weight.hpp"
#include "support/fixtures.hpp"

using namespace bca;
using bca::testing::cycle_algebra;
using bca::testing::path_algebra;
using bca::testing::set;

namespace {

LocalContactAlgebra smallest_lca(int k) {
    return LocalContactAlgebra(extremal_relation(FiniteBooleanAlgebra(k), Extremal::smallest));
}

// Smallest subset of the bounded elements meeting every interval [a, c] with a << c,
// by increasing-size subset enumeration.
std::size_t brute_min_base(const LocalContactAlgebra& l) {
    std::vector<Mask> bounded;
    for (Mask x = 0; x <= l.universe(); ++x)
        if (l.is_bounded(x)) bounded.push_back(x);
    std::vector<std::pair<Mask, Mask>> intervals;
    for (Mask a : bounded)
        for (Mask c : bounded)
            if (l.way_below(a, c)) intervals.push_back({a, c});
    std::size_t n = bounded.size();
    for (std::size_t r = 0; r <= n; ++r) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
        do {
            bool ok = std::all_of(intervals.begin(), intervals.end(), [&](auto iv) {
                for (std::size_t i = 0; i < n; ++i)
                    if (pick[i] && is_subset(iv.first, bounded[i]) && is_subset(bounded[i], iv.second)) return true;
                return false;
            });
            if (ok) return r;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return n + 1;
}

} // namespace

TEST_CASE("weight of the smallest relation is the size of the algebra") {
    for (int k = 0; k <= 4; ++k) {
        BaseResult r = weight_w_a(smallest_lca(k));
        CHECK(r.cardinality == (std::size_t{1} << k));
        CHECK(r.witness.size() == r.cardinality);
    }
}

TEST_CASE("minimum base agrees with subset enumeration") {
    std::vector<LocalContactAlgebra> cases = {LocalContactAlgebra(path_algebra(2)), LocalContactAlgebra(path_algebra(3)),
                                              LocalContactAlgebra(path_algebra(4)), LocalContactAlgebra(cycle_algebra(3)),
                                              LocalContactAlgebra(cycle_algebra(4), set({0, 1})), smallest_lca(3)};
    for (const auto& l : cases) {
        BaseResult r = minimum_base(l);
        CHECK(r.cardinality == brute_min_base(l));
        CHECK(is_base(l, r.witness));
    }
}

TEST_CASE("frozen base sizes from an independent solver") {
    CHECK(minimum_base(LocalContactAlgebra(path_algebra(2))).cardinality == 2);
    CHECK(minimum_base(LocalContactAlgebra(path_algebra(3))).cardinality == 4);
    CHECK(minimum_base(LocalContactAlgebra(path_algebra(4))).cardinality == 4);
    LocalContactAlgebra c6(cycle_algebra(6));
    BaseResult r = minimum_base(c6);
    CHECK(r.cardinality == 8);
    CHECK(is_base(c6, r.witness));
    CHECK_THROWS_AS(weight_w_a(c6), InputError);
}

TEST_CASE("is_base rejects unbounded members") {
    LocalContactAlgebra l(cycle_algebra(4), set({0, 1}));
    std::vector<Element> d = {l.algebra().element(set({2}))};
    CHECK_THROWS_AS(is_base(l, d), InputError);
}

TEST_CASE("pi-weight equals the atom count") {
    for (int k = 0; k <= 5; ++k) CHECK(pi_weight_a(FiniteBooleanAlgebra(k)).cardinality == static_cast<std::size_t>(k));
    for (int k = 1; k <= 3; ++k) {
        LocalContactAlgebra l = smallest_lca(k);
        CHECK(pi_weight_a(l).cardinality <= weight_w_a(l).cardinality);
    }
}

TEST_CASE("s_part") {
    std::vector<Element> cyc = s_part(cycle_algebra(6));
    REQUIRE(cyc.size() == 2);
    CHECK(cyc[0].atoms == 0);
    CHECK(cyc[1].atoms == 63);
    CHECK(s_part(extremal_relation(FiniteBooleanAlgebra(3), Extremal::smallest)).size() == 8);
    CHECK(s_part(extremal_relation(FiniteBooleanAlgebra(3), Extremal::largest)).size() == 2);
}

TEST_CASE("zero-dimensionality criterion") {
    for (int k = 0; k <= 4; ++k) CHECK(zero_dim_criterion(smallest_lca(k)));
    CHECK_THROWS_AS(zero_dim_criterion(LocalContactAlgebra(cycle_algebra(6))), InputError);
}

TEST_CASE("contact from the whole algebra is the smallest relation") {
    for (int k = 1; k <= 4; ++k) {
        FiniteBooleanAlgebra b(k);
        SubalgebraContact sc = rho_from_subalgebra(Subalgebra::make(b, b.elements()));
        CHECK(sc.ca.rows() == extremal_relation(b, Extremal::smallest).rows());
        CHECK(sc.s_part_is_a0);
        CHECK(sc.a0_is_minimum_base);
        CHECK(sc.a0_dense);
        CHECK(sc.normal);
    }
}

TEST_CASE("contact from a proper subalgebra fails LL6") {
    FiniteBooleanAlgebra b(3);
    std::vector<Element> gens = {b.element(set({0, 1}))};
    Subalgebra a0 = generated_subalgebra(b, gens);
    REQUIRE(a0.size() == 4);
    SubalgebraContact sc = rho_from_subalgebra(a0);
    CHECK_FALSE(sc.a0_dense);
    CHECK(sc.s_part_is_a0);
    // Atoms 0 and 1 share a block, so they touch.
    CHECK(sc.ca.rows() == std::vector<Mask>{set({0, 1}), set({0, 1}), set({2})});
    auto ll6 = std::find_if(sc.way_below_axioms.begin(), sc.way_below_axioms.end(),
                            [](const AxiomVerdict& v) { return v.axiom == Axiom::LL6; });
    REQUIRE(ll6 != sc.way_below_axioms.end());
    CHECK_FALSE(ll6->holds);
    CHECK_FALSE(ll6->witness.empty());
}

TEST_CASE("minimal base inside a given base") {
    LocalContactAlgebra s2 = smallest_lca(2);
    std::vector<Element> all = s2.algebra().elements();
    std::vector<Element> within = minimal_base_within(s2, all);
    CHECK(within.size() == 4);

    // Without 0 the interval [0, 0] has no member.
    std::vector<Element> gens = {s2.algebra().atom(0), s2.algebra().atom(1)};
    CHECK_THROWS_AS(minimal_base_within(s2, gens), InputError);
}
