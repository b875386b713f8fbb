#include "bca/boolean_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include "bca/errors.hpp"
#include "bca/hitting_set.hpp"

namespace bca {

namespace {

std::atomic<AlgebraId> next_algebra_id{1};

// Minimum-set searches enumerate every element; beyond this they are hopeless.
constexpr int kSearchAtomCap = 12;

} // namespace

FiniteBooleanAlgebra::FiniteBooleanAlgebra(int atom_count, int atom_cap)
    : id_(next_algebra_id.fetch_add(1)), atom_count_(atom_count), universe_(low_bits(atom_count)) {
    if (atom_cap > kMaxAtomCap) throw InputError("atom cap exceeds " + std::to_string(kMaxAtomCap));
    if (atom_count < 0) throw InputError("negative atom count");
    if (atom_count > atom_cap)
        throw InputError("atom count " + std::to_string(atom_count) + " exceeds cap " +
                         std::to_string(atom_cap));
}

Element FiniteBooleanAlgebra::atom(int i) const {
    if (i < 0 || i >= atom_count_) throw InputError("atom index out of range");
    return {id_, Mask{1} << i};
}

Element FiniteBooleanAlgebra::element(Mask atoms) const {
    if (!is_subset(atoms, universe_)) throw InputError("atom set " + format_atoms(atoms) + " outside algebra");
    return {id_, atoms};
}

void FiniteBooleanAlgebra::require(const Element& e) const {
    if (e.algebra != id_) throw InputError("element belongs to a different algebra");
}

Element FiniteBooleanAlgebra::join(const Element& a, const Element& b) const {
    require(a);
    require(b);
    return {id_, a.atoms | b.atoms};
}

Element FiniteBooleanAlgebra::meet(const Element& a, const Element& b) const {
    require(a);
    require(b);
    return {id_, a.atoms & b.atoms};
}

Element FiniteBooleanAlgebra::complement(const Element& a) const {
    require(a);
    return {id_, universe_ & ~a.atoms};
}

Element FiniteBooleanAlgebra::symdiff(const Element& a, const Element& b) const {
    require(a);
    require(b);
    return {id_, a.atoms ^ b.atoms};
}

bool FiniteBooleanAlgebra::leq(const Element& a, const Element& b) const {
    require(a);
    require(b);
    return is_subset(a.atoms, b.atoms);
}

std::vector<Element> FiniteBooleanAlgebra::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (Mask m = 0; m <= universe_; ++m) out.push_back({id_, m});
    return out;
}

std::vector<Element> FiniteBooleanAlgebra::atoms() const {
    std::vector<Element> out;
    for (int i = 0; i < atom_count_; ++i) out.push_back(atom(i));
    return out;
}

FiniteBooleanAlgebra make_powerset_algebra(int atom_count, int atom_cap) {
    return FiniteBooleanAlgebra(atom_count, atom_cap);
}

std::variant<Element, bool> boolean_operation(const FiniteBooleanAlgebra& algebra, BoolOp op,
                                              const Element& a, std::optional<Element> b) {
    if (op == BoolOp::complement) {
        if (b) throw InputError("complement takes one operand");
        return algebra.complement(a);
    }
    if (!b) throw InputError("binary operation needs two operands");
    switch (op) {
    case BoolOp::join: return algebra.join(a, *b);
    case BoolOp::meet: return algebra.meet(a, *b);
    case BoolOp::symdiff: return algebra.symdiff(a, *b);
    case BoolOp::leq: return algebra.leq(a, *b);
    case BoolOp::complement: break;
    }
    throw InputError("unknown operation");
}

std::vector<Mask> masks_of(const FiniteBooleanAlgebra& algebra, std::span<const Element> elements) {
    std::vector<Mask> out;
    out.reserve(elements.size());
    for (const auto& e : elements) {
        algebra.require(e);
        out.push_back(e.atoms);
    }
    return out;
}

std::vector<Element> elements_of(const FiniteBooleanAlgebra& algebra, std::span<const Mask> masks) {
    std::vector<Element> out;
    out.reserve(masks.size());
    for (Mask m : masks) out.push_back(algebra.element(m));
    return out;
}

// ---------------------------------------------------------------------------
// Relative algebras

Element RelativeAlgebra::embed(const Element& relative) const {
    algebra.require(relative);
    return parent.element(deposit_bits(relative.atoms, top.atoms));
}

Element RelativeAlgebra::restrict(const Element& x) const {
    parent.require(x);
    if (!is_subset(x.atoms, top.atoms)) throw InputError("element is not below the relative top");
    return algebra.element(extract_bits(x.atoms, top.atoms));
}

Element RelativeAlgebra::relative_complement(const Element& x) const {
    return parent.meet(parent.complement(x), top);
}

RelativeAlgebra relative_algebra(const FiniteBooleanAlgebra& algebra, const Element& u) {
    algebra.require(u);
    if (u.atoms == 0) throw InputError("relative algebra needs a nonzero element");
    return RelativeAlgebra{algebra, FiniteBooleanAlgebra(popcount(u.atoms), kMaxAtomCap), u};
}

// ---------------------------------------------------------------------------
// Density

bool is_dense_subset(const FiniteBooleanAlgebra& algebra, std::span<const Element> subset) {
    const int k = algebra.atom_count();
    // dominated[a]: some nonzero member lies below a (superset closure).
    std::vector<char> dominated(algebra.size(), 0);
    for (const auto& m : subset) {
        algebra.require(m);
        if (m.atoms != 0) dominated[m.atoms] = 1;
    }
    for (int bit = 0; bit < k; ++bit)
        for (Mask a = 0; a <= algebra.universe(); ++a)
            if ((a >> bit) & 1) dominated[a] |= dominated[a ^ (Mask{1} << bit)];
    for (Mask a = 1; a <= algebra.universe(); ++a)
        if (!dominated[a]) return false;
    return true;
}

DenseSetResult min_dense_cardinality(const FiniteBooleanAlgebra& algebra) {
    if (algebra.atom_count() > kSearchAtomCap)
        throw InputError("dense-set search limited to " + std::to_string(kSearchAtomCap) + " atoms");
    // Universe: nonzero elements, index = mask - 1.
    const Mask top = algebra.universe();
    HittingSetProblem problem(static_cast<std::uint32_t>(top));
    for (Mask a = 1; a <= top && top != 0; ++a) {
        std::vector<std::uint32_t> below;
        for (Mask b = a; b != 0; b = (b - 1) & a) below.push_back(static_cast<std::uint32_t>(b - 1));
        problem.add_constraint(std::move(below));
    }
    auto solution = problem.solve();
    if (!solution) throw InternalInconsistency("dense-set search found no solution");
    DenseSetResult out;
    out.cardinality = solution->size();
    for (auto idx : *solution) out.witness.push_back(algebra.element(Mask{idx} + 1));
    return out;
}

// ---------------------------------------------------------------------------
// Subalgebras

bool Subalgebra::contains(const Element& e) const {
    parent_.require(e);
    return std::binary_search(members_.begin(), members_.end(), e.atoms);
}

Subalgebra Subalgebra::make(const FiniteBooleanAlgebra& parent, std::span<const Element> members) {
    std::vector<Mask> ms = masks_of(parent, members);
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    auto has = [&](Mask m) { return std::binary_search(ms.begin(), ms.end(), m); };
    if (!has(0) || !has(parent.universe())) throw InputError("subalgebra must contain 0 and 1");
    for (Mask a : ms) {
        if (!has(parent.universe() & ~a))
            throw InputError("not closed under complement at " + format_atoms(a));
        for (Mask b : ms)
            if (!has(a & b)) throw InputError("not closed under meet at " + format_atoms(a) + ", " + format_atoms(b));
    }
    return Subalgebra(parent, std::move(ms));
}

Subalgebra generated_subalgebra(const FiniteBooleanAlgebra& algebra, std::span<const Element> generators) {
    std::vector<Mask> members;
    std::unordered_set<Mask> seen;
    std::vector<Mask> worklist;
    auto add = [&](Mask m) {
        if (seen.insert(m).second) worklist.push_back(m);
    };
    add(0);
    add(algebra.universe());
    for (Mask g : masks_of(algebra, generators)) add(g);
    while (!worklist.empty()) {
        Mask x = worklist.back();
        worklist.pop_back();
        members.push_back(x);
        add(algebra.universe() & ~x);
        // Snapshot: members may grow while we add meets.
        const std::size_t n = members.size();
        for (std::size_t i = 0; i < n; ++i) add(members[i] & x);
    }
    std::sort(members.begin(), members.end());
    return Subalgebra::make(algebra, elements_of(algebra, members));
}

// ---------------------------------------------------------------------------
// Homomorphisms

BooleanHomomorphism::BooleanHomomorphism(FiniteBooleanAlgebra source, FiniteBooleanAlgebra target,
                                         std::vector<Element> table)
    : source_(std::move(source)), target_(std::move(target)) {
    if (table.size() != source_.size())
        throw InputError("homomorphism table must list an image for every source element");
    table_ = masks_of(target_, table);
}

BooleanHomomorphism BooleanHomomorphism::from_atom_images(const FiniteBooleanAlgebra& source,
                                                          const FiniteBooleanAlgebra& target,
                                                          std::span<const Element> atom_images) {
    if (static_cast<int>(atom_images.size()) != source.atom_count())
        throw InputError("need one image per source atom");
    std::vector<Mask> images = masks_of(target, atom_images);
    std::vector<Element> table;
    table.reserve(source.size());
    for (Mask x = 0; x <= source.universe(); ++x) {
        Mask img = 0;
        for (int i = 0; i < source.atom_count(); ++i)
            if ((x >> i) & 1) img |= images[i];
        table.push_back(target.element(img));
    }
    return BooleanHomomorphism(source, target, std::move(table));
}

BooleanHomomorphism BooleanHomomorphism::identity(const FiniteBooleanAlgebra& algebra) {
    return BooleanHomomorphism(algebra, algebra, algebra.elements());
}

Element BooleanHomomorphism::operator()(const Element& x) const {
    source_.require(x);
    return {target_.id(), table_[x.atoms]};
}

bool BooleanHomomorphism::is_injective() const {
    std::vector<Mask> images = table_;
    std::sort(images.begin(), images.end());
    return std::adjacent_find(images.begin(), images.end()) == images.end();
}

bool BooleanHomomorphism::is_surjective() const {
    std::vector<char> hit(target_.size(), 0);
    for (Mask m : table_) hit[m] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

LawVerdict check_homomorphism(const BooleanHomomorphism& h) {
    const auto& s = h.source();
    const auto& t = h.target();
    if (h.apply(0) != 0) return {false, "zero", {s.zero()}};
    if (h.apply(s.universe()) != t.universe()) return {false, "one", {s.one()}};
    for (Mask a = 0; a <= s.universe(); ++a)
        for (Mask b = 0; b <= s.universe(); ++b)
            if (h.apply(a & b) != (h.apply(a) & h.apply(b)))
                return {false, "meet", {s.element(a), s.element(b)}};
    for (Mask a = 0; a <= s.universe(); ++a)
        if (h.apply(s.universe() & ~a) != (t.universe() & ~h.apply(a)))
            return {false, "complement", {s.element(a)}};
    return {};
}

} // namespace bca
