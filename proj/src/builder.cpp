#include "gpd/builder.hpp"

#include "gpd/textio.hpp"

#include <cctype>

namespace gpd {

namespace {

struct Parser {
    const std::string& src;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("builder expression: " + msg + " at position " + std::to_string(pos) + " in '" +
                    src + "'");
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        std::size_t begin = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == begin) fail("expected a name");
        return src.substr(begin, pos - begin);
    }

    int number() {
        skip_ws();
        std::size_t begin = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == begin) fail("expected a number");
        return std::stoi(src.substr(begin, pos - begin));
    }

    std::string path_until_paren() {
        std::size_t begin = pos;
        while (pos < src.size() && src[pos] != ')') ++pos;
        if (pos == src.size()) fail("unterminated file path");
        std::string p = src.substr(begin, pos - begin);
        std::size_t b = p.find_first_not_of(" \t");
        std::size_t e = p.find_last_not_of(" \t");
        return b == std::string::npos ? "" : p.substr(b, e - b + 1);
    }

    FiniteGroupoid expr() {
        std::string name = ident();
        expect('(');
        if (name == "pair") {
            int n = number();
            expect(')');
            return pair_groupoid(n);
        }
        if (name == "cyclic") {
            int n = number();
            expect(')');
            return cyclic_group(n);
        }
        if (name == "sym") {
            int n = number();
            expect(')');
            return symmetric_group(n);
        }
        if (name == "product" || name == "coproduct") {
            FiniteGroupoid a = expr();
            expect(',');
            FiniteGroupoid b = expr();
            expect(')');
            return name == "product" ? product(a, b) : coproduct(a, b);
        }
        if (name == "file") {
            std::string p = path_until_paren();
            expect(')');
            return load_groupoid(p);
        }
        fail("unknown constructor '" + name + "'");
    }
};

}  // namespace

FiniteGroupoid build_groupoid(const std::string& expr) {
    Parser p{expr};
    FiniteGroupoid g = p.expr();
    p.skip_ws();
    if (p.pos != expr.size()) p.fail("trailing input");
    return g;
}

Subgroupoid build_subgroupoid(const FiniteGroupoid& parent, const std::string& spec) {
    if (spec == "discrete") return Subgroupoid::discrete_wide(parent);
    if (spec == "full") return Subgroupoid::full(parent);
    if (spec == "iso") return iso_subgroupoid(parent);
    if (spec.rfind("seed:", 0) == 0) {
        std::vector<Mor> seeds;
        std::string body = spec.substr(5);
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t comma = body.find(',', start);
            std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
            if (!tok.empty()) {
                try {
                    seeds.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw Error("subgroupoid spec: bad morphism index '" + tok + "'");
                }
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return closure(parent, seeds, true);
    }
    std::string path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
    return load_subgroupoid(parent, path);
}

}  // namespace gpd
