#include "bca/contact.hpp"

#include <mutex>

#include "bca/errors.hpp"

namespace bca {

namespace {

constexpr int kReachTableAtomCap = 16;

} // namespace

std::string_view axiom_name(Axiom axiom) {
    switch (axiom) {
    case Axiom::C1: return "C1";
    case Axiom::C2: return "C2";
    case Axiom::C3: return "C3";
    case Axiom::C4: return "C4";
    case Axiom::C5: return "C5";
    case Axiom::C6: return "C6";
    case Axiom::LL1: return "LL1";
    case Axiom::LL2: return "LL2";
    case Axiom::LL2p: return "LL2'";
    case Axiom::LL3: return "LL3";
    case Axiom::LL4: return "LL4";
    case Axiom::LL4p: return "LL4'";
    case Axiom::LL5: return "LL5";
    case Axiom::LL6: return "LL6";
    case Axiom::LL7: return "LL7";
    }
    return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
    for (Axiom a : kAllAxioms)
        if (axiom_name(a) == name) return a;
    return std::nullopt;
}

std::string_view bundle_name(Bundle bundle) {
    switch (bundle) {
    case Bundle::precontact: return "precontact";
    case Bundle::contact: return "contact";
    case Bundle::extensional: return "extensional";
    case Bundle::normal: return "normal";
    }
    return "?";
}

struct ContactStructure::Cache {
    std::array<std::once_flag, kAllAxioms.size()> once;
    std::array<AxiomVerdict, kAllAxioms.size()> verdicts;
};

ContactStructure::ContactStructure(FiniteBooleanAlgebra algebra, std::vector<Mask> rows)
    : algebra_(std::move(algebra)), rows_(std::move(rows)), cache_(std::make_shared<Cache>()) {
    if (static_cast<int>(rows_.size()) != algebra_.atom_count())
        throw InputError("atom relation needs one row per atom");
    for (Mask r : rows_)
        if (!is_subset(r, algebra_.universe())) throw InputError("atom relation row outside algebra");
    if (algebra_.atom_count() <= kReachTableAtomCap) {
        reach_table_.assign(algebra_.size(), 0);
        for (Mask m = 1; m <= algebra_.universe(); ++m)
            reach_table_[m] = reach_table_[m & (m - 1)] | rows_[std::countr_zero(m)];
    }
}

ContactStructure ContactStructure::from_matrix(FiniteBooleanAlgebra algebra,
                                               const std::vector<std::vector<bool>>& matrix) {
    const auto k = static_cast<std::size_t>(algebra.atom_count());
    if (matrix.size() != k) throw InputError("atom matrix must be square in the atom count");
    std::vector<Mask> rows(k, 0);
    for (std::size_t p = 0; p < k; ++p) {
        if (matrix[p].size() != k) throw InputError("atom matrix must be square in the atom count");
        for (std::size_t q = 0; q < k; ++q)
            if (matrix[p][q]) rows[p] |= Mask{1} << q;
    }
    return ContactStructure(std::move(algebra), std::move(rows));
}

Mask ContactStructure::reach(Mask a) const {
    if (!reach_table_.empty()) return reach_table_[a];
    Mask out = 0;
    for (; a != 0; a &= a - 1) out |= rows_[std::countr_zero(a)];
    return out;
}

bool ContactStructure::contact_holds(const Element& a, const Element& b) const {
    algebra_.require(a);
    algebra_.require(b);
    return contact(a.atoms, b.atoms);
}

bool ContactStructure::way_below(const Element& a, const Element& b) const {
    algebra_.require(a);
    algebra_.require(b);
    return way_below(a.atoms, b.atoms);
}

const AxiomVerdict& ContactStructure::verdict(Axiom axiom) const {
    const auto i = static_cast<std::size_t>(axiom);
    std::call_once(cache_->once[i], [&] { cache_->verdicts[i] = check_axiom(*this, axiom); });
    return cache_->verdicts[i];
}

bool ContactStructure::satisfies(Bundle bundle) const {
    auto all = [&](std::initializer_list<Axiom> axioms) {
        for (Axiom a : axioms)
            if (!verdict(a).holds) return false;
        return true;
    };
    switch (bundle) {
    case Bundle::precontact: return all({Axiom::C1, Axiom::C2});
    case Bundle::contact: return all({Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4});
    case Bundle::extensional: return all({Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4, Axiom::C6});
    case Bundle::normal: return all({Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4, Axiom::C5, Axiom::C6});
    }
    return false;
}

ContactStructure from_atom_relation(const FiniteBooleanAlgebra& algebra, std::vector<Mask> rows) {
    return ContactStructure(algebra, std::move(rows));
}

namespace {

class AxiomChecker {
  public:
    explicit AxiomChecker(const ContactStructure& ca)
        : ca_(ca), alg_(ca.algebra()), top_(alg_.universe()) {}

    AxiomVerdict run(Axiom axiom) {
        verdict_.axiom = axiom;
        switch (axiom) {
        case Axiom::C1: c1(); break;
        case Axiom::C2: c2(); break;
        case Axiom::C3: c3(); break;
        case Axiom::C4: c4(); break;
        case Axiom::C5: c5(); break;
        case Axiom::C6: c6(); break;
        case Axiom::LL1: ll1(); break;
        case Axiom::LL2: if (!wb(0, 0)) fail({0, 0}); break;
        case Axiom::LL2p: if (!wb(top_, top_)) fail({top_, top_}); break;
        case Axiom::LL3: ll3(); break;
        case Axiom::LL4: ll4(); break;
        case Axiom::LL4p: ll4p(); break;
        case Axiom::LL5: ll5(); break;
        case Axiom::LL6: ll6(); break;
        case Axiom::LL7: ll7(); break;
        }
        return verdict_;
    }

  private:
    bool C(Mask a, Mask b) const { return ca_.contact(a, b); }
    bool wb(Mask a, Mask b) const { return ca_.way_below(a, b); }
    Mask comp(Mask a) const { return top_ & ~a; }

    void fail(std::initializer_list<Mask> witness) {
        verdict_.holds = false;
        for (Mask m : witness) verdict_.witness.push_back(alg_.element(m));
    }

    void c1() {
        for (Mask a = 0; a <= top_; ++a)
            for (Mask b = 0; b <= top_; ++b)
                if (C(a, b) && (a == 0 || b == 0)) return fail({a, b});
    }

    void c2() {
        for (Mask a = 0; a <= top_; ++a)
            for (Mask b = 0; b <= top_; ++b)
                for (Mask c = 0; c <= top_; ++c) {
                    bool right = C(a, b | c) == (C(a, b) || C(a, c));
                    bool left = C(a | b, c) == (C(a, c) || C(b, c));
                    if (!right || !left) return fail({a, b, c});
                }
    }

    void c3() {
        for (Mask a = 1; a <= top_; ++a)
            if (!C(a, a)) return fail({a});
    }

    void c4() {
        for (Mask a = 0; a <= top_; ++a)
            for (Mask b = 0; b <= top_; ++b)
                if (C(a, b) && !C(b, a)) return fail({a, b});
    }

    void c5() {
        for (Mask a = 0; a <= top_; ++a)
            for (Mask b = 0; b <= top_; ++b) {
                if (C(a, b)) continue;
                bool found = false;
                for (Mask c = 0; c <= top_ && !found; ++c) found = !C(a, c) && !C(b, comp(c));
                if (!found) return fail({a, b});
            }
    }

    void c6() {
        for (Mask a = 0; a <= top_; ++a) {
            if (a == top_) continue;
            bool found = false;
            for (Mask b = 1; b <= top_ && !found; ++b) found = !C(b, a);
            if (!found) return fail({a});
        }
    }

    void ll1() {
        for (Mask a = 0; a <= top_; ++a)
            for (Mask b = 0; b <= top_; ++b)
                if (wb(a, b) && !is_subset(a, b)) return fail({a, b});
    }

    // a <= b << c <= t implies a << t. Checked as the two monotonicity halves
    // (shrinking the left side, then growing the right side), which together
    // are equivalent to the four-variable statement.
    void ll3() {
        for (Mask a = 0; a <= top_; ++a)
            for (Mask c = 0; c <= top_; ++c) {
                if (wb(a, c)) continue;
                const Mask free = comp(a);
                for (Mask extra = 0;; extra = (extra - free) & free) {
                    if (wb(a | extra, c)) return fail({a, a | extra, c, c});
                    if (extra == free) break;
                }
            }
        for (Mask b = 0; b <= top_; ++b)
            for (Mask c = 0; c <= top_; ++c) {
                if (!wb(b, c)) continue;
                const Mask free = comp(c);
                for (Mask extra = 0;; extra = (extra - free) & free) {
                    if (!wb(b, c | extra)) return fail({b, b, c, c | extra});
                    if (extra == free) break;
                }
            }
    }

    void ll4() {
        for (Mask a = 0; a <= top_; ++a)
            for (Mask b = 0; b <= top_; ++b)
                for (Mask c = 0; c <= top_; ++c)
                    if (wb(a, c) && wb(b, c) && !wb(a | b, c)) return fail({a, b, c});
    }

    void ll4p() {
        for (Mask a = 0; a <= top_; ++a)
            for (Mask b = 0; b <= top_; ++b)
                for (Mask c = 0; c <= top_; ++c)
                    if (wb(a, b) && wb(a, c) && !wb(a, b & c)) return fail({a, b, c});
    }

    void ll5() {
        for (Mask a = 0; a <= top_; ++a)
            for (Mask c = 0; c <= top_; ++c) {
                if (!wb(a, c)) continue;
                bool found = false;
                for (Mask b = 0; b <= top_ && !found; ++b) found = wb(a, b) && wb(b, c);
                if (!found) return fail({a, c});
            }
    }

    void ll6() {
        for (Mask a = 1; a <= top_; ++a) {
            bool found = false;
            for (Mask b = 1; b <= top_ && !found; ++b) found = wb(b, a);
            if (!found) return fail({a});
        }
    }

    void ll7() {
        for (Mask a = 0; a <= top_; ++a)
            for (Mask b = 0; b <= top_; ++b)
                if (wb(a, b) && !wb(comp(b), comp(a))) return fail({a, b});
    }

    const ContactStructure& ca_;
    const FiniteBooleanAlgebra& alg_;
    Mask top_;
    AxiomVerdict verdict_;
};

} // namespace

AxiomVerdict check_axiom(const ContactStructure& ca, Axiom axiom) {
    if (ca.atom_count() > kAxiomCheckAtomCap)
        throw InputError("exhaustive axiom checks are limited to " + std::to_string(kAxiomCheckAtomCap) +
                         " atoms");
    return AxiomChecker(ca).run(axiom);
}

ContactStructure extremal_relation(const FiniteBooleanAlgebra& algebra, Extremal which) {
    std::vector<Mask> rows(algebra.atom_count());
    for (int p = 0; p < algebra.atom_count(); ++p)
        rows[p] = which == Extremal::smallest ? Mask{1} << p : algebra.universe();
    return ContactStructure(algebra, std::move(rows));
}

bool is_connected(const ContactStructure& ca) {
    if (!ca.is_contact()) throw InputError("connectedness is defined for contact algebras");
    const Mask top = ca.algebra().universe();
    for (Mask a = 1; a < top; ++a)
        if (!ca.contact(a, top & ~a)) return false;
    return true;
}

LawVerdict check_ca_morphism(const BooleanHomomorphism& h, const ContactStructure& source,
                             const ContactStructure& target, MorphismMode mode) {
    if (!(h.source() == source.algebra()) || !(h.target() == target.algebra()))
        throw InputError("homomorphism does not connect the given contact algebras");
    if (auto law = check_homomorphism(h); !law)
        throw InputError("table is not a Boolean homomorphism (" + law.law + " fails)");
    const Mask top = source.algebra().universe();
    for (Mask a = 0; a <= top; ++a)
        for (Mask b = 0; b <= top; ++b) {
            bool before = source.contact(a, b);
            bool after = target.contact(h.apply(a), h.apply(b));
            bool ok = mode == MorphismMode::preserves ? (!before || after) : (!after || before);
            if (!ok)
                return {false, mode == MorphismMode::preserves ? "preserves contact" : "reflects contact",
                        {source.algebra().element(a), source.algebra().element(b)}};
        }
    return {};
}

bool is_ca_isomorphism(const BooleanHomomorphism& h, const ContactStructure& source,
                       const ContactStructure& target) {
    return h.is_injective() && h.is_surjective() &&
           check_ca_morphism(h, source, target, MorphismMode::preserves).holds &&
           check_ca_morphism(h, source, target, MorphismMode::reflects).holds;
}

} // namespace bca
