#include <doctest.h>

#include <set>

#include "bca/errors.hpp"
#include "bca/topology.hpp"
#include "bca/weight.hpp"
#include "support/fixtures.hpp"

using namespace bca;
using bca::testing::set;

namespace {

Mask minimal_neighbourhood(const FiniteSpace& x, int p) {
    Mask u = x.universe();
    for (Mask o : x.opens())
        if ((o >> p) & 1) u &= o;
    return u;
}

// A finite topology's smallest base is its set of distinct minimal neighbourhoods.
std::size_t neighbourhood_count(const FiniteSpace& x) {
    std::set<Mask> distinct;
    for (int p = 0; p < x.point_count(); ++p) distinct.insert(minimal_neighbourhood(x, p));
    return distinct.size();
}

std::size_t minimal_open_count(const FiniteSpace& x) {
    std::size_t n = 0;
    for (Mask o : x.opens()) {
        if (o == 0) continue;
        bool minimal = true;
        for (Mask p : x.opens())
            if (p != 0 && p != o && is_subset(p, o)) minimal = false;
        n += minimal;
    }
    return n;
}

bool has_proper_clopen(const FiniteSpace& x) {
    for (Mask o : x.opens())
        if (o != 0 && o != x.universe() && x.is_open(x.universe() & ~o)) return true;
    return false;
}

// Opens ∅, {1}, {0,1}, {1,2}, X: a three-point model of an interval.
FiniteSpace interval_model() { return FiniteSpace(3, {set({1}), set({0, 1}), set({1, 2})}); }

} // namespace

TEST_CASE("space construction") {
    FiniteSpace x(2, {set({0})});
    CHECK(x.opens() == std::vector<Mask>{0, 1, 3});
    CHECK(x.closure(set({1})) == set({1}));
    CHECK(x.closure(set({0})) == 3);
    CHECK(x.interior(set({1})) == 0);
    CHECK_FALSE(x.is_t1());
    CHECK(FiniteSpace::discrete(3).is_t1());
    CHECK_THROWS_AS(FiniteSpace(3, {set({0, 1}), set({1, 2})}), InputError);
    CHECK_THROWS_AS(FiniteSpace(2, {set({2})}), InputError);
}

TEST_CASE("topology counts on labelled points") {
    std::vector<std::size_t> expected = {1, 1, 4, 29, 355};
    for (int n = 0; n <= 4; ++n) CHECK(enumerate_topologies(n).size() == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("continuous maps") {
    FiniteSpace s(2, {set({0})});
    FiniteSpace d = FiniteSpace::discrete(2);
    CHECK_NOTHROW(ContinuousMap(d, s, {0, 1}));
    CHECK_THROWS_AS(ContinuousMap(s, d, {0, 1}), InputError);
    CHECK_THROWS_AS(ContinuousMap(d, s, {0, 2}), InputError);
    ContinuousMap f(d, s, {1, 0});
    CHECK(f.preimage(set({0})) == set({1}));
    CHECK(f.image(set({0})) == set({1}));
    ContinuousMap g = compose(ContinuousMap::identity(s), f);
    CHECK(g.point_map() == f.point_map());
}

TEST_CASE("order of a family") {
    std::vector<Mask> fam = {set({0}), set({0}), set({1})};
    CHECK(ord(fam) == 1);
    std::vector<Mask> disjoint = {set({0}), set({1})};
    CHECK(ord(disjoint) == 0);
    std::vector<Mask> empty_members = {0, 0};
    CHECK(ord(empty_members) == -1);
    CHECK_THROWS_AS(ord(std::span<const Mask>{}), InputError);
}

TEST_CASE("cover predicates") {
    FiniteSpace d = FiniteSpace::discrete(3);
    std::vector<Mask> coarse = {set({0, 1}), set({1, 2})};
    std::vector<Mask> fine = {set({0, 1}), set({2})};
    CoverReport r = cover_predicates(d, coarse, fine);
    CHECK(r.is_cover);
    CHECK(r.is_refinement);
    CHECK(r.is_shrinking == true);
    CHECK(r.is_swelling == false);
    CHECK(is_swelling(d, fine, coarse) == false);
    std::vector<Mask> one = {7};
    CHECK_THROWS_AS(is_shrinking(d, coarse, one), InputError);
}

TEST_CASE("covering dimension") {
    for (int n = 1; n <= 5; ++n) CHECK(dim_cl(FiniteSpace::discrete(n)) == 0);
    CHECK(dim_cl(FiniteSpace::discrete(0)) == -1);
    CHECK(dim_cl(FiniteSpace::indiscrete(3)) == 0);
    CHECK(dim_cl(interval_model()) == 1);
    for (int n = 0; n <= 3; ++n)
        for (const auto& x : enumerate_topologies(n)) CHECK(dim_cl(x) == dim_cl_all_covers(x));
}

TEST_CASE("regular closed algebra of a discrete space is the smallest relation") {
    for (int n = 1; n <= 4; ++n) {
        RcAlgebra rc = rc_algebra(FiniteSpace::discrete(n));
        CHECK(rc.lca.atom_count() == n);
        CHECK(rc.lca.ca().rows() == extremal_relation(FiniteBooleanAlgebra(n), Extremal::smallest).rows());
        CHECK(rc.lca.is_valid());
        CHECK(zero_dim_criterion(rc.lca));
    }
}

TEST_CASE("regular closed algebra of the interval model") {
    RcAlgebra rc = rc_algebra(interval_model());
    // Regular closed sets are the fixed points of cl int.
    std::vector<Mask> expected;
    for (Mask s = 0; s <= 7; ++s)
        if (interval_model().closure(interval_model().interior(s)) == s) expected.push_back(s);
    std::vector<Mask> got = rc.element_sets;
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    CHECK(rc.element_of(rc.set_of(rc.lca.algebra().one())) == rc.lca.algebra().one());
}

TEST_CASE("regular open algebra is isomorphic through closure") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& x : enumerate_topologies(n)) {
            RcAlgebra rc = rc_algebra(x);
            RoAlgebra ro = ro_algebra(rc);
            CHECK(is_ca_isomorphism(ro.nu, ro.ca, rc.lca.ca()));
            for (Mask m = 0; m <= ro.ca.algebra().universe(); ++m)
                CHECK(rc.set_of(ro.nu(ro.ca.algebra().element(m))) == x.closure(ro.element_sets[m]));
        }
}

TEST_CASE("weights of spaces") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& x : enumerate_topologies(n)) {
            CHECK(weight_of_space(x).cardinality == neighbourhood_count(x));
            CHECK(pi_weight_of_space(x).cardinality == minimal_open_count(x));
        }
    for (int n = 2; n <= 4; ++n) {
        FiniteSpace d = FiniteSpace::discrete(n);
        std::size_t w = weight_of_space(d).cardinality;
        CHECK(w == static_cast<std::size_t>(n));
        CHECK(weight_w_a(rc_algebra(d).lca).cardinality == (std::size_t{1} << n));
    }
}

TEST_CASE("pi-semiregular spaces have matching pi-weights") {
    int count = 0;
    for (int n = 0; n <= 4; ++n)
        for (const auto& x : enumerate_topologies(n))
            if (is_pi_semiregular(x)) {
                ++count;
                CHECK(pi_weight_of_space(x).cardinality == pi_weight_a(rc_algebra(x).lca.algebra()).cardinality);
            }
    CHECK(count > 0);
    CHECK(is_semiregular(FiniteSpace::discrete(3)));
}

TEST_CASE("connectedness") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& x : enumerate_topologies(n)) CHECK(is_connected_space(x) == !has_proper_clopen(x));
    CHECK(is_connected_space(interval_model()));
    CHECK_FALSE(is_connected_space(FiniteSpace::discrete(2)));
    CoAlgebra co = co_algebra(FiniteSpace::discrete(3));
    CHECK(co.algebra.atom_count() == 3);
}

TEST_CASE("Lambda^t reverses composition") {
    std::vector<FiniteSpace> spaces = {FiniteSpace::discrete(1), FiniteSpace::discrete(2), FiniteSpace::discrete(3)};
    auto maps_between = [](const FiniteSpace& a, const FiniteSpace& b) {
        std::vector<ContinuousMap> out;
        std::vector<int> m(static_cast<std::size_t>(a.point_count()), 0);
        while (true) {
            out.emplace_back(a, b, m);
            std::size_t i = 0;
            while (i < m.size() && ++m[i] == b.point_count()) m[i++] = 0;
            if (i == m.size()) break;
        }
        return out;
    };
    for (const auto& x : spaces)
        for (const auto& y : spaces)
            for (const auto& z : spaces) {
                RcAlgebra rx = rc_algebra(x), ry = rc_algebra(y), rz = rc_algebra(z);
                for (const auto& f : maps_between(x, y))
                    for (const auto& g : maps_between(y, z)) {
                        LcaMorphismTable lf = lambda_t_map(f, rx, ry);
                        LcaMorphismTable lg = lambda_t_map(g, ry, rz);
                        CHECK(lambda_t_map(compose(g, f), rx, rz) == compose_diamond(lf, lg));
                    }
            }
}

TEST_CASE("regular shrinking predicates on discrete spaces") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 1; ++k) {
            RegularShrinkingReport r = regular_shrinking_dim_check(FiniteSpace::discrete(n), k);
            CHECK(r.within_hypotheses);
            CHECK(r.shrinking_predicate);
            CHECK(r.interior_predicate);
        }
    CHECK_FALSE(regular_shrinking_dim_check(interval_model(), 0).within_hypotheses);
}

TEST_CASE("Stone dual of a finite algebra is discrete") {
    FiniteSpace x = stone_dual(FiniteBooleanAlgebra(3));
    CHECK(x == FiniteSpace::discrete(3));
}
