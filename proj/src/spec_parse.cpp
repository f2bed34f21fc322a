// SPDX-License-Identifier: Apache-2.0
#include "mtg/spec_parse.hpp"

#include <cctype>
#include <sstream>

#include "mtg/errors.hpp"

namespace mtg {

namespace {

[[noreturn]] void fail(size_t pos, const std::string& what) {
    std::ostringstream msg;
    msg << "spec parse error at position " << pos << ": " << what;
    throw InputError(msg.str());
}

struct Parser {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(pos, std::string("expected '") + c + "'");
        ++pos;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail(start, "expected a family name");
        return text.substr(start, pos - start);
    }

    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail(start, "expected a number");
        long value = 0;
        for (size_t i = start; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000) fail(start, "number too large");
        }
        return static_cast<int>(value);
    }

    std::vector<int> number_list() {
        std::vector<int> out{number()};
        while (peek(',')) {
            ++pos;
            out.push_back(number());
        }
        return out;
    }

    FamilySpec parse_spec() {
        size_t name_pos = pos;
        std::string name = ident();
        if (name == "complement") {
            expect('(');
            FamilySpec child = parse_spec();
            expect(')');
            return normalize_spec(FamilySpec{Family::complement_of, {}, {child}});
        }
        Family kind;
        if (name == "path")
            kind = Family::path;
        else if (name == "cycle")
            kind = Family::cycle;
        else if (name == "complete")
            kind = Family::complete;
        else if (name == "ladder")
            kind = Family::ladder;
        else if (name == "tent")
            kind = Family::tent;
        else if (name == "lforest")
            kind = Family::lforest;
        else if (name == "cluster")
            kind = Family::cluster;
        else if (name == "multipartite")
            kind = Family::multipartite;
        else
            fail(name_pos, "unknown family '" + name + "'");
        expect(':');
        FamilySpec spec{kind, number_list(), {}};
        return spec;
    }
};

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    Parser parser{text};
    FamilySpec spec = parser.parse_spec();
    parser.skip_ws();
    if (parser.pos != text.size())
        fail(parser.pos, "trailing characters");
    spec.validate();
    return spec;
}

FamilySpec normalize_spec(const FamilySpec& spec) {
    if (spec.kind != Family::complement_of) return spec;
    const FamilySpec child = normalize_spec(spec.children[0]);
    switch (child.kind) {
        case Family::complement_of:
            return child.children[0];
        case Family::complete: {
            std::vector<int> singles{child.params[0]};
            return FamilySpec{Family::cluster, singles, {}};
        }
        case Family::multipartite:
            return FamilySpec{Family::cluster, child.params, {}};
        case Family::cluster: {
            long cliques = 0;
            int lone_size = 0;
            for (size_t i = 0; i < child.params.size(); ++i) {
                cliques += child.params[i];
                if (child.params[i] > 0) lone_size = static_cast<int>(i + 1);
            }
            if (cliques == 1)
                return FamilySpec{Family::cluster, {lone_size}, {}};
            if (child.params.size() <= 3 && cliques >= 2) {
                std::vector<int> parts = child.params;
                parts.resize(3, 0);
                return FamilySpec{Family::multipartite, parts, {}};
            }
            break;
        }
        default:
            break;
    }
    return FamilySpec{Family::complement_of, {}, {child}};
}

}  // namespace mtg
