#include <doctest.h>

#include <random>

#include "bca/contact.hpp"
#include "bca/errors.hpp"
#include "support/fixtures.hpp"

using namespace bca;
using bca::testing::cycle_algebra;
using bca::testing::path_algebra;
using bca::testing::set;

namespace {

std::vector<Mask> witness_masks(const AxiomVerdict& v) {
    std::vector<Mask> out;
    for (const Element& e : v.witness) out.push_back(e.atoms);
    return out;
}

// Straight from the axiom text, over element masks.
bool brute_c5(const ContactStructure& ca) {
    Mask top = ca.algebra().universe();
    for (Mask a = 0; a <= top; ++a)
        for (Mask b = 0; b <= top; ++b) {
            if (ca.contact(a, b)) continue;
            bool found = false;
            for (Mask c = 0; c <= top && !found; ++c) found = !ca.contact(a, c) && !ca.contact(b, top & ~c);
            if (!found) return false;
        }
    return true;
}

bool brute_ll5(const ContactStructure& ca) {
    Mask top = ca.algebra().universe();
    for (Mask a = 0; a <= top; ++a)
        for (Mask c = 0; c <= top; ++c) {
            if (!ca.way_below(a, c)) continue;
            bool found = false;
            for (Mask b = 0; b <= top && !found; ++b) found = ca.way_below(a, b) && ca.way_below(b, c);
            if (!found) return false;
        }
    return true;
}

} // namespace

TEST_CASE("axiom names round-trip") {
    for (Axiom a : kAllAxioms) CHECK(parse_axiom(axiom_name(a)) == a);
    CHECK(axiom_name(Axiom::LL2p) == "LL2'");
    CHECK_FALSE(parse_axiom("C7").has_value());
}

TEST_CASE("cycle of six: verdicts and first counterexamples") {
    // Values cross-checked with an independent Python brute force.
    ContactStructure c6 = cycle_algebra(6);
    for (Axiom a : {Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4}) CHECK(c6.verdict(a).holds);
    CHECK(c6.is_contact());

    const AxiomVerdict& c5 = c6.verdict(Axiom::C5);
    CHECK_FALSE(c5.holds);
    CHECK(witness_masks(c5) == std::vector<Mask>{set({0}), set({2})});

    const AxiomVerdict& c6v = c6.verdict(Axiom::C6);
    CHECK_FALSE(c6v.holds);
    CHECK(witness_masks(c6v) == std::vector<Mask>{set({0, 3})});

    const AxiomVerdict& ll5 = c6.verdict(Axiom::LL5);
    CHECK_FALSE(ll5.holds);
    CHECK(witness_masks(ll5) == std::vector<Mask>{set({0}), set({0, 1, 5})});

    const AxiomVerdict& ll6 = c6.verdict(Axiom::LL6);
    CHECK_FALSE(ll6.holds);
    CHECK(witness_masks(ll6) == std::vector<Mask>{set({0})});

    for (Axiom a : {Axiom::LL1, Axiom::LL2, Axiom::LL2p, Axiom::LL3, Axiom::LL4, Axiom::LL4p, Axiom::LL7})
        CHECK_MESSAGE(c6.verdict(a).holds, axiom_name(a));

    CHECK(c6.way_below(set({0}), set({0, 1, 5})));
    CHECK_FALSE(c6.way_below(set({0}), set({0, 1})));
    CHECK(is_connected(c6));
}

TEST_CASE("paths: C5, C6 and LL5 against the oracle") {
    ContactStructure p2 = path_algebra(2);
    CHECK(p2.verdict(Axiom::C5).holds);
    CHECK(p2.verdict(Axiom::LL5).holds);
    CHECK(witness_masks(p2.verdict(Axiom::C6)) == std::vector<Mask>{set({0})});

    ContactStructure p3 = path_algebra(3);
    CHECK(witness_masks(p3.verdict(Axiom::C5)) == std::vector<Mask>{set({0}), set({2})});
    CHECK(witness_masks(p3.verdict(Axiom::C6)) == std::vector<Mask>{set({1})});
    CHECK(witness_masks(p3.verdict(Axiom::LL5)) == std::vector<Mask>{set({0}), set({0, 1})});

    ContactStructure p4 = path_algebra(4);
    CHECK(witness_masks(p4.verdict(Axiom::C6)) == std::vector<Mask>{set({0, 2})});
}

TEST_CASE("extremal relations") {
    for (int k = 1; k <= 4; ++k) {
        FiniteBooleanAlgebra b(k);
        ContactStructure s = extremal_relation(b, Extremal::smallest);
        ContactStructure l = extremal_relation(b, Extremal::largest);
        CHECK(s.satisfies(Bundle::normal));
        CHECK(s.satisfies(Bundle::extensional));
        CHECK(l.is_contact());
        CHECK(l.verdict(Axiom::C5).holds);
        CHECK(l.satisfies(Bundle::extensional) == (k == 1));
        CHECK(is_connected(l));
        CHECK(is_connected(s) == (k == 1));
        for (Mask a = 0; a <= b.universe(); ++a) {
            CHECK(s.way_below(a, a));
            CHECK(l.way_below(a, a) == (a == 0 || a == b.universe()));
        }
    }
}

TEST_CASE("C5 and LL5 agree with direct transcriptions on random relations") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(rng() % 5);
        std::vector<Mask> rows(k, 0);
        for (int p = 0; p < k; ++p)
            for (int q = p; q < k; ++q)
                if (p == q || rng() % 2) {
                    rows[p] |= Mask{1} << q;
                    rows[q] |= Mask{1} << p;
                }
        ContactStructure ca(FiniteBooleanAlgebra(k), rows);
        CHECK(ca.verdict(Axiom::C5).holds == brute_c5(ca));
        CHECK(ca.verdict(Axiom::LL5).holds == brute_ll5(ca));
        // C5 and LL5 express the same condition through a << b iff not a C b*.
        CHECK(ca.verdict(Axiom::C5).holds == ca.verdict(Axiom::LL5).holds);
    }
}

TEST_CASE("non-reflexive relation is precontact but not contact") {
    std::vector<Mask> rows = {set({1}), set({0})};
    ContactStructure ca(FiniteBooleanAlgebra(2), rows);
    CHECK(ca.is_precontact());
    CHECK_FALSE(ca.is_contact());
    CHECK_FALSE(ca.verdict(Axiom::C3).holds);
    CHECK_THROWS_AS(is_connected(ca), InputError);
}

TEST_CASE("contact morphisms") {
    // Block doubling of the three-cycle into the six-cycle: atom i goes to {2i, 2i+1}.
    ContactStructure c3 = cycle_algebra(3);
    ContactStructure c6 = cycle_algebra(6);
    std::vector<Element> images = {c6.algebra().element(set({0, 1})), c6.algebra().element(set({2, 3})),
                                   c6.algebra().element(set({4, 5}))};
    auto h = BooleanHomomorphism::from_atom_images(c3.algebra(), c6.algebra(), images);
    CHECK(check_ca_morphism(h, c3, c6, MorphismMode::preserves).holds);
    CHECK(check_ca_morphism(h, c3, c6, MorphismMode::reflects).holds);
    CHECK_FALSE(is_ca_isomorphism(h, c3, c6));

    auto id = BooleanHomomorphism::identity(c6.algebra());
    CHECK(is_ca_isomorphism(id, c6, c6));
    ContactStructure s6 = extremal_relation(c6.algebra(), Extremal::smallest);
    CHECK(check_ca_morphism(id, s6, c6, MorphismMode::preserves).holds);
    LawVerdict r = check_ca_morphism(id, s6, c6, MorphismMode::reflects);
    CHECK_FALSE(r.holds);
}

TEST_CASE("axiom checks refuse large algebras") {
    ContactStructure big = cycle_algebra(kAxiomCheckAtomCap + 1);
    CHECK_THROWS_AS(big.verdict(Axiom::C5), InputError);
}
