#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "snevily/field.hpp"
#include "snevily/group.hpp"

namespace snevily {

namespace detail {

struct TextScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!consume(c))
            throw std::invalid_argument(std::string(what) + ": expected '" + c + "' in \"" +
                                        std::string(text) + "\"");
    }

    std::uint64_t parse_uint(const char* what) {
        skip_ws();
        std::uint64_t value = 0;
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin)
            throw std::invalid_argument(std::string(what) + ": expected integer in \"" +
                                        std::string(text) + "\"");
        pos += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    bool done() {
        skip_ws();
        return pos == text.size();
    }
};

}  // namespace detail

/// "2,3,9" -> GroupSpec.
inline GroupSpec parse_group_spec(const std::string& text) {
    detail::TextScanner sc{text};
    std::vector<std::uint64_t> moduli;
    moduli.push_back(sc.parse_uint("group spec"));
    while (sc.consume(',')) moduli.push_back(sc.parse_uint("group spec"));
    if (!sc.done()) throw std::invalid_argument("group spec: trailing characters in \"" + text + "\"");
    return GroupSpec(std::move(moduli));
}

inline std::string format_group_spec(const GroupSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < spec.factor_count(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.moduli()[i]);
    }
    return out;
}

/// "(1,0,4)" -> GroupElement, validated against spec (no silent reduction).
inline GroupElement parse_group_element(const GroupSpec& spec, const std::string& text) {
    detail::TextScanner sc{text};
    sc.expect('(', "group element");
    GroupElement g;
    g.push_back(sc.parse_uint("group element"));
    while (sc.consume(',')) g.push_back(sc.parse_uint("group element"));
    sc.expect(')', "group element");
    if (!sc.done())
        throw std::invalid_argument("group element: trailing characters in \"" + text + "\"");
    spec.require_valid(g);
    return g;
}

/// "(0);(1);(2)" -> element list; empty text gives the empty list.
inline std::vector<GroupElement> parse_element_list(const GroupSpec& spec,
                                                    const std::string& text) {
    detail::TextScanner sc{text};
    std::vector<GroupElement> out;
    if (sc.done()) return out;
    while (true) {
        sc.expect('(', "element list");
        GroupElement g;
        g.push_back(sc.parse_uint("element list"));
        while (sc.consume(',')) g.push_back(sc.parse_uint("element list"));
        sc.expect(')', "element list");
        spec.require_valid(g);
        out.push_back(std::move(g));
        if (sc.done()) break;
        sc.expect(';', "element list");
    }
    return out;
}

inline std::string format_element(const GroupElement& g) {
    std::string out = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g[i]);
    }
    return out + ")";
}

inline std::string format_element_list(const std::vector<GroupElement>& list) {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += ';';
        out += format_element(list[i]);
    }
    return out;
}

/// "gf:p" or "cyc" -> FieldSpec.
inline FieldSpec parse_field_spec(const std::string& text) {
    detail::TextScanner sc{text};
    sc.skip_ws();
    std::string_view rest = sc.text.substr(sc.pos);
    if (rest.rfind("cyc", 0) == 0) {
        sc.pos += 3;
        if (!sc.done())
            throw std::invalid_argument("field spec: trailing characters in \"" + text + "\"");
        return FieldSpec{FieldSpec::Kind::cyclotomic, 0};
    }
    if (rest.rfind("gf", 0) == 0) {
        sc.pos += 2;
        sc.expect(':', "field spec");
        const std::uint64_t p = sc.parse_uint("field spec");
        if (!sc.done())
            throw std::invalid_argument("field spec: trailing characters in \"" + text + "\"");
        return FieldSpec{FieldSpec::Kind::finite, p};
    }
    throw std::invalid_argument("field spec: expected \"gf:p\" or \"cyc\", got \"" + text + "\"");
}

inline std::string format_field_spec(const FieldSpec& fs) {
    if (fs.kind == FieldSpec::Kind::cyclotomic) return "cyc";
    return "gf:" + std::to_string(fs.characteristic);
}

}  // namespace snevily
