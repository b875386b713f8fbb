#include "bca/lca.hpp"

#include <mutex>
#include <numeric>

#include "bca/errors.hpp"

namespace bca {

struct LocalContactAlgebra::Cache {
    std::once_flag once;
    LawVerdict verdict;
};

LocalContactAlgebra::LocalContactAlgebra(ContactStructure ca, Mask bounded_top)
    : ca_(std::move(ca)), bounded_(bounded_top), cache_(std::make_shared<Cache>()) {
    if (!is_subset(bounded_, ca_.algebra().universe()))
        throw InputError("bounded top " + format_atoms(bounded_) + " outside algebra");
}

LocalContactAlgebra::LocalContactAlgebra(ContactStructure ca)
    : LocalContactAlgebra(ca, ca.algebra().universe()) {}

const LawVerdict& LocalContactAlgebra::verdict() const {
    std::call_once(cache_->once, [&] { cache_->verdict = check_lca_axioms(*this); });
    return cache_->verdict;
}

LawVerdict check_lca_axioms(const LocalContactAlgebra& lca) {
    const auto& ca = lca.ca();
    const auto& alg = lca.algebra();
    const Mask top = alg.universe();
    const Mask u = lca.bounded_top();
    for (Axiom axiom : {Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4}) {
        const auto& v = ca.verdict(axiom);
        if (!v.holds) return {false, "contact", v.witness};
    }
    // LC1: bounded a << c interpolates through a bounded b.
    for (Mask a = 0; a <= top; ++a) {
        if (!lca.is_bounded(a)) continue;
        for (Mask c = 0; c <= top; ++c) {
            if (!ca.way_below(a, c)) continue;
            bool found = false;
            for (Mask b = u;; b = (b - 1) & u) {
                if (ca.way_below(a, b) && ca.way_below(b, c)) {
                    found = true;
                    break;
                }
                if (b == 0) break;
            }
            if (!found) return {false, "LC1", {alg.element(a), alg.element(c)}};
        }
    }
    // LC2: contact is monotone under C2, so the best bounded c is u itself.
    for (Mask a = 0; a <= top; ++a)
        for (Mask b = 0; b <= top; ++b)
            if (ca.contact(a, b) && !ca.contact(a, u & b))
                return {false, "LC2", {alg.element(a), alg.element(b)}};
    // LC3: every nonzero a dominates a nonzero bounded b << a.
    for (Mask a = 1; a <= top; ++a) {
        bool found = false;
        for (Mask b = u; b != 0 && !found; b = (b - 1) & u) found = ca.way_below(b, a);
        if (!found) return {false, "LC3", {alg.element(a)}};
    }
    return {};
}

std::vector<std::pair<Mask, Mask>> bounded_way_below_pairs(const LocalContactAlgebra& lca) {
    std::vector<std::pair<Mask, Mask>> out;
    const Mask top = lca.universe();
    for (Mask a = 0; a <= top; ++a) {
        if (!lca.is_bounded(a)) continue;
        for (Mask c = 0; c <= top; ++c)
            if (lca.is_bounded(c) && lca.way_below(a, c)) out.emplace_back(a, c);
    }
    return out;
}

bool is_dv_dense(const LocalContactAlgebra& lca, std::span<const Element> d) {
    std::vector<Mask> members = masks_of(lca.algebra(), d);
    for (Mask m : members)
        if (!lca.is_bounded(m)) throw InputError("dV-dense candidates must be bounded; " + format_atoms(m) + " is not");
    const bool check_fact = lca.is_valid();
    bool order_form = true;
    bool interpolation_form = true;
    for (auto [a, c] : bounded_way_below_pairs(lca)) {
        bool by_order = false;
        bool by_interpolation = false;
        for (Mask x : members) {
            by_order = by_order || (is_subset(a, x) && is_subset(x, c));
            by_interpolation = by_interpolation || (lca.way_below(a, x) && lca.way_below(x, c));
        }
        order_form = order_form && by_order;
        interpolation_form = interpolation_form && by_interpolation;
    }
    if (check_fact && order_form != interpolation_form)
        throw InternalInconsistency("dV-density: order form and interpolation form disagree");
    return order_form;
}

// ---------------------------------------------------------------------------
// Morphism tables

LcaMorphismTable::LcaMorphismTable(LocalContactAlgebra source, LocalContactAlgebra target,
                                   std::vector<Mask> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
    if (table_.size() != source_.algebra().size())
        throw InputError("morphism table must list an image for every source element");
    for (Mask m : table_)
        if (!is_subset(m, target_.universe())) throw InputError("morphism table hits a non-element");
}

LcaMorphismTable LcaMorphismTable::identity(const LocalContactAlgebra& lca) {
    std::vector<Mask> table(lca.algebra().size());
    std::iota(table.begin(), table.end(), Mask{0});
    return LcaMorphismTable(lca, lca, std::move(table));
}

LcaMorphismTable LcaMorphismTable::from_atom_images(const LocalContactAlgebra& source,
                                                    const LocalContactAlgebra& target,
                                                    std::span<const Mask> atom_images) {
    if (static_cast<int>(atom_images.size()) != source.atom_count())
        throw InputError("need one image per source atom");
    std::vector<Mask> table(source.algebra().size(), 0);
    for (Mask x = 1; x <= source.universe(); ++x)
        table[x] = table[x & (x - 1)] | atom_images[std::countr_zero(x)];
    return LcaMorphismTable(source, target, std::move(table));
}

BooleanHomomorphism LcaMorphismTable::as_homomorphism() const {
    return BooleanHomomorphism(source_.algebra(), target_.algebra(),
                               elements_of(target_.algebra(), table_));
}

EmbeddingReport check_lca_embedding(const LcaMorphismTable& t) {
    BooleanHomomorphism h = t.as_homomorphism();
    if (auto law = check_homomorphism(h); !law)
        throw InputError("table is not a Boolean homomorphism (" + law.law + " fails)");
    EmbeddingReport report;
    const auto& src = t.source();
    const auto& tgt = t.target();
    const Mask top = src.universe();
    auto note = [&](std::string what, std::initializer_list<Mask> w) {
        if (!report.failure.empty()) return;
        report.failure = std::move(what);
        for (Mask m : w) report.witness.push_back(src.algebra().element(m));
    };
    for (Mask a = 0; a <= top; ++a)
        for (Mask b = 0; b <= top; ++b) {
            bool before = src.ca().contact(a, b);
            bool after = tgt.ca().contact(t(a), t(b));
            if (before && !after && report.contact_preserved) {
                report.contact_preserved = false;
                note("contact not preserved", {a, b});
            }
            if (after && !before && report.contact_reflected) {
                report.contact_reflected = false;
                note("contact not reflected", {a, b});
            }
        }
    for (Mask a = 0; a <= top; ++a) {
        bool before = src.is_bounded(a);
        bool after = tgt.is_bounded(t(a));
        if (before && !after && report.bounded_preserved) {
            report.bounded_preserved = false;
            note("boundedness not preserved", {a});
        }
        if (after && !before && report.bounded_reflected) {
            report.bounded_reflected = false;
            note("boundedness not reflected", {a});
        }
    }
    report.injective = h.is_injective();
    return report;
}

LcaMorphismTable lower_sharp(const LcaMorphismTable& t) {
    const auto& src = t.source();
    const Mask top = src.universe();
    const Mask u = src.bounded_top();
    std::vector<Mask> sharp(t.table().size(), 0);
    for (Mask a = 0; a <= top; ++a) {
        Mask acc = 0;
        for (Mask b = u;; b = (b - 1) & u) {
            if (src.way_below(b, a)) acc |= t(b);
            if (b == 0) break;
        }
        sharp[a] = acc;
    }
    return LcaMorphismTable(src, t.target(), std::move(sharp));
}

LawVerdict check_dhlc_morphism(const LcaMorphismTable& t) {
    const auto& src = t.source();
    const auto& tgt = t.target();
    const auto& sa = src.algebra();
    const Mask top = src.universe();
    const Mask ttop = tgt.universe();
    if (t(0) != 0) return {false, "DLC1", {sa.zero()}};
    for (Mask a = 0; a <= top; ++a)
        for (Mask b = 0; b <= top; ++b)
            if (t(a & b) != (t(a) & t(b))) return {false, "DLC2", {sa.element(a), sa.element(b)}};
    for (Mask a = 0; a <= top; ++a) {
        if (!src.is_bounded(a)) continue;
        const Mask left = ttop & ~t(top & ~a);
        for (Mask b = 0; b <= top; ++b)
            if (src.way_below(a, b) && !tgt.way_below(left, t(b)))
                return {false, "DLC3", {sa.element(a), sa.element(b)}};
    }
    std::vector<Mask> bounded_images;
    const Mask u = src.bounded_top();
    for (Mask a = u;; a = (a - 1) & u) {
        bounded_images.push_back(t(a));
        if (a == 0) break;
    }
    const Mask tu = tgt.bounded_top();
    for (Mask b = 0; b <= ttop; ++b) {
        if (!is_subset(b, tu)) continue;
        bool found = false;
        for (Mask img : bounded_images)
            if (is_subset(b, img)) {
                found = true;
                break;
            }
        if (!found) return {false, "DLC4", {tgt.algebra().element(b)}};
    }
    LcaMorphismTable sharp = lower_sharp(t);
    for (Mask a = 0; a <= top; ++a)
        if (sharp(a) != t(a)) return {false, "DLC5", {sa.element(a)}};
    return {};
}

LcaMorphismTable compose_diamond(const LcaMorphismTable& t2, const LcaMorphismTable& t1) {
    if (!(t1.target().algebra() == t2.source().algebra()))
        throw InputError("cannot compose: target of the first map is not the source of the second");
    std::vector<Mask> composed(t1.table().size());
    for (std::size_t x = 0; x < composed.size(); ++x) composed[x] = t2(t1(x));
    return lower_sharp(LcaMorphismTable(t1.source(), t2.target(), std::move(composed)));
}

std::vector<LcaMorphismTable> atom_determined_dhlc_morphisms(const LocalContactAlgebra& source,
                                                             const LocalContactAlgebra& target) {
    const int k = source.atom_count();
    const Mask tsize = target.algebra().size();
    std::vector<Mask> images(k, 0);
    std::vector<LcaMorphismTable> out;
    while (true) {
        LcaMorphismTable t = LcaMorphismTable::from_atom_images(source, target, images);
        if (check_dhlc_morphism(t)) out.push_back(std::move(t));
        int i = k - 1;
        while (i >= 0 && images[i] + 1 == tsize) images[i--] = 0;
        if (i < 0) break;
        ++images[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Constructions

ProductLca product_lca(const std::vector<LocalContactAlgebra>& factors) {
    if (factors.empty()) throw InputError("product needs at least one factor");
    int total = 0;
    std::vector<int> offsets;
    for (const auto& f : factors) {
        offsets.push_back(total);
        total += f.atom_count();
    }
    FiniteBooleanAlgebra algebra(total, kDefaultAtomCap);
    std::vector<Mask> rows;
    Mask bounded = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (Mask r : factors[i].ca().rows()) rows.push_back(r << offsets[i]);
        bounded |= factors[i].bounded_top() << offsets[i];
    }
    LocalContactAlgebra product(ContactStructure(algebra, std::move(rows)), bounded);
    std::vector<LcaMorphismTable> projections;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::vector<Mask> table(algebra.size());
        const Mask block = factors[i].universe();
        for (Mask x = 0; x <= algebra.universe(); ++x) table[x] = (x >> offsets[i]) & block;
        projections.emplace_back(product, factors[i], std::move(table));
    }
    return {std::move(product), std::move(projections)};
}

RelativeLca relative_lca(const LocalContactAlgebra& lca, Mask m) {
    if (m == 0) throw InputError("relative LCA needs a nonzero element");
    RelativeAlgebra rel = relative_algebra(lca.algebra(), lca.algebra().element(m));
    std::vector<Mask> rows;
    for (Mask s = m; s != 0; s &= s - 1) rows.push_back(extract_bits(lca.ca().rows()[std::countr_zero(s)] & m, m));
    LocalContactAlgebra relative(ContactStructure(rel.algebra, std::move(rows)),
                                 extract_bits(lca.bounded_top() & m, m));
    return {std::move(rel), std::move(relative)};
}

Completion identity_completion(const LocalContactAlgebra& lca) {
    if (!lca.is_valid()) throw InputError("completion requires a valid LCA (" + lca.verdict().law + " fails)");
    LcaMorphismTable id = LcaMorphismTable::identity(lca);
    std::vector<Element> image;
    const Mask u = lca.bounded_top();
    for (Mask b = 0; b <= lca.universe(); ++b)
        if (is_subset(b, u)) image.push_back(lca.algebra().element(b));
    EmbeddingReport report = check_lca_embedding(id);
    bool dense = is_dv_dense(lca, image);
    return {std::move(id), std::move(report), dense};
}

} // namespace bca
