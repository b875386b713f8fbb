#include "bca/bits.hpp"

#include <cctype>

#include "bca/errors.hpp"

namespace bca {

std::string format_atoms(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; m != 0; ++i, m >>= 1) {
        if (!(m & 1)) continue;
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += '}';
    return out;
}

Mask parse_atoms(std::string_view text, int limit) {
    auto fail = [&](const std::string& why) {
        throw InputError("malformed atom set '" + std::string(text) + "': " + why);
    };
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '{') fail("expected '{'");
    ++i;
    Mask out = 0;
    skip_ws();
    if (i < text.size() && text[i] == '}') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                fail("expected index");
            long value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                if (value > 63) fail("index too large");
                ++i;
            }
            if (value >= limit) fail("index " + std::to_string(value) + " out of range");
            out |= Mask{1} << value;
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == '}') {
                ++i;
                break;
            }
            fail("expected ',' or '}'");
        }
    }
    skip_ws();
    if (i != text.size()) fail("trailing characters");
    return out;
}

} // namespace bca
