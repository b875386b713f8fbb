#include "bca/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "bca/errors.hpp"

namespace bca {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Line {
    int number;
    std::string_view key;   // empty for a bare value line
    std::string_view value;
};

/// Splits into non-blank, comment-stripped lines of the form `key: value` or `value`.
std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        raw = trim(raw);
        if (!raw.empty()) {
            const auto colon = raw.find(':');
            if (colon == std::string_view::npos)
                out.push_back({number, {}, raw});
            else
                out.push_back({number, trim(raw.substr(0, colon)), trim(raw.substr(colon + 1))});
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return out;
}

[[noreturn]] void fail_at(int line, const std::string& why) {
    throw InputError("line " + std::to_string(line) + ": " + why);
}

std::vector<long> parse_integers(std::string_view s, int line) {
    std::vector<long> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i >= s.size()) break;
        long value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
        if (ec != std::errc{} || value < 0) fail_at(line, "expected a non-negative integer in '" + std::string(s) + "'");
        i = static_cast<std::size_t>(ptr - s.data());
        if (i < s.size() && s[i] != ' ' && s[i] != '\t') fail_at(line, "unexpected character in '" + std::string(s) + "'");
        out.push_back(value);
    }
    return out;
}

int parse_count(const Line& l, int cap, const char* what) {
    auto values = parse_integers(l.value, l.number);
    if (values.size() != 1) fail_at(l.number, std::string("expected one ") + what + " count");
    if (values[0] > cap) fail_at(l.number, std::string(what) + " count exceeds cap " + std::to_string(cap));
    return static_cast<int>(values[0]);
}

Mask parse_set_at(const Line& l, int limit) {
    try {
        return parse_atoms(l.value, limit);
    } catch (const InputError& e) {
        fail_at(l.number, e.what());
    }
}

} // namespace

AlgebraText parse_algebra_text(std::string_view text, int atom_cap) {
    AlgebraText out;
    bool have_atoms = false;
    bool in_contact_block = false;
    auto add_pair = [&](const Line& l, std::string_view value) {
        if (!have_atoms) fail_at(l.number, "contact before 'atoms:'");
        auto values = parse_integers(value, l.number);
        if (values.size() != 2) fail_at(l.number, "contact pair needs two atom indices");
        for (long v : values)
            if (v >= out.atoms) fail_at(l.number, "atom index " + std::to_string(v) + " out of range");
        out.contact.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
    };
    for (const Line& l : split_lines(text)) {
        if (l.key.empty()) {
            if (!in_contact_block) fail_at(l.number, "expected 'key: value'");
            add_pair(l, l.value);
            continue;
        }
        in_contact_block = false;
        if (l.key == "atoms") {
            if (have_atoms) fail_at(l.number, "duplicate 'atoms:'");
            out.atoms = parse_count(l, atom_cap, "atom");
            have_atoms = true;
        } else if (l.key == "contact") {
            if (l.value.empty())
                in_contact_block = true;
            else
                add_pair(l, l.value);
        } else if (l.key == "bounded") {
            if (!have_atoms) fail_at(l.number, "'bounded:' before 'atoms:'");
            if (out.bounded) fail_at(l.number, "duplicate 'bounded:'");
            out.bounded = parse_set_at(l, out.atoms);
        } else {
            fail_at(l.number, "unknown key '" + std::string(l.key) + "'");
        }
    }
    if (!have_atoms) throw InputError("missing 'atoms:' line");
    return out;
}

LocalContactAlgebra build_lca(const AlgebraText& parsed, bool close_rs, int atom_cap) {
    FiniteBooleanAlgebra algebra(parsed.atoms, atom_cap);
    std::vector<Mask> rows(parsed.atoms, 0);
    for (auto [p, q] : parsed.contact) {
        rows[p] |= Mask{1} << q;
        if (close_rs) rows[q] |= Mask{1} << p;
    }
    if (close_rs)
        for (int p = 0; p < parsed.atoms; ++p) rows[p] |= Mask{1} << p;
    return LocalContactAlgebra(ContactStructure(algebra, std::move(rows)),
                               parsed.bounded.value_or(algebra.universe()));
}

std::string emit_algebra(const LocalContactAlgebra& lca) {
    std::ostringstream out;
    out << "atoms: " << lca.atom_count() << '\n';
    for (int p = 0; p < lca.atom_count(); ++p)
        for (int q = 0; q < lca.atom_count(); ++q)
            if (lca.ca().atoms_related(p, q)) out << "contact: " << p << ' ' << q << '\n';
    out << "bounded: " << format_atoms(lca.bounded_top()) << '\n';
    return out.str();
}

FiniteSpace parse_space_text(std::string_view text, int point_cap) {
    int points = -1;
    std::vector<Mask> opens;
    for (const Line& l : split_lines(text)) {
        if (l.key == "points") {
            if (points >= 0) fail_at(l.number, "duplicate 'points:'");
            points = parse_count(l, point_cap, "point");
        } else if (l.key == "open") {
            if (points < 0) fail_at(l.number, "'open:' before 'points:'");
            opens.push_back(parse_set_at(l, points));
        } else {
            fail_at(l.number, l.key.empty() ? "expected 'key: value'" : "unknown key '" + std::string(l.key) + "'");
        }
    }
    if (points < 0) throw InputError("missing 'points:' line");
    return FiniteSpace(points, std::move(opens), point_cap);
}

std::string emit_space(const FiniteSpace& space) {
    std::ostringstream out;
    out << "points: " << space.point_count() << '\n';
    for (Mask u : space.opens()) out << "open: " << format_atoms(u) << '\n';
    return out.str();
}

std::vector<int> parse_map_text(std::string_view text) {
    std::optional<std::vector<int>> map;
    for (const Line& l : split_lines(text)) {
        if (l.key != "map") fail_at(l.number, "expected 'map:'");
        if (map) fail_at(l.number, "duplicate 'map:'");
        map.emplace();
        for (long v : parse_integers(l.value, l.number)) {
            if (v > 63) fail_at(l.number, "point index too large");
            map->push_back(static_cast<int>(v));
        }
    }
    if (!map) throw InputError("missing 'map:' line");
    return *map;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace bca
