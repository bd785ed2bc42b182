#include "gpd/textio.hpp"

#include <fstream>
#include <sstream>

namespace gpd {

namespace {

struct Line {
    int number;
    std::string text;
};

/// Splits into comment-stripped, non-blank lines with 1-based numbers.
std::vector<Line> logical_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream is(text);
    std::string raw;
    int number = 0;
    while (std::getline(is, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::size_t begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = raw.find_last_not_of(" \t\r");
        lines.push_back({number, raw.substr(begin, end - begin + 1)});
    }
    return lines;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw Error(origin + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::int64_t> parse_numbers(const std::string& origin, const Line& line,
                                        const std::string& body) {
    std::vector<std::int64_t> out;
    std::istringstream is(body);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            std::int64_t v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(origin, line.number, "expected an integer, found '" + tok + "'");
        }
    }
    return out;
}

/// "key: value" split; returns false if the line does not start with key.
bool match_key(const Line& line, const std::string& key, std::string* value) {
    if (line.text.rfind(key + ":", 0) != 0) return false;
    *value = line.text.substr(key.size() + 1);
    return true;
}

std::string join(const std::vector<std::int64_t>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    return os.str();
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

std::string serialize_groupoid(const FiniteGroupoid& g) {
    std::ostringstream os;
    os << "objects: " << g.object_count() << "\n";
    os << "morphisms: " << g.morphism_count() << "\n";
    auto row = [&](const char* key, const std::vector<Obj>& xs) {
        os << key << ":";
        for (Obj v : xs) os << " " << v;
        os << "\n";
    };
    row("dom", g.dom_table());
    row("cod", g.cod_table());
    row("id", g.identity_table());
    row("inv", g.inverse_table());
    os << "compose:\n";
    g.compose_table().for_each(
        [&](Mor g2, Mor g1, Mor r) { os << g2 << " " << g1 << " " << r << "\n"; });
    return os.str();
}

FiniteGroupoid parse_groupoid_text(const std::string& text, const std::string& origin) {
    auto lines = logical_lines(text);
    GroupoidData d;
    bool seen[6] = {};
    const char* keys[6] = {"objects", "morphisms", "dom", "cod", "id", "inv"};
    std::int64_t declared_m = -1;
    std::size_t i = 0;
    int compose_line = -1;

    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        std::string value;
        if (line.text == "compose:" || match_key(line, "compose", &value)) {
            compose_line = line.number;
            ++i;
            break;
        }
        bool matched = false;
        for (int kidx = 0; kidx < 6; ++kidx) {
            if (!match_key(line, keys[kidx], &value)) continue;
            if (seen[kidx]) fail(origin, line.number, std::string("duplicate key '") + keys[kidx] + "'");
            seen[kidx] = true;
            matched = true;
            auto nums = parse_numbers(origin, line, value);
            auto as_int32 = [&](std::vector<Obj>* dst) {
                dst->clear();
                for (auto v : nums) {
                    if (v < 0 || v > 1'000'000'000) fail(origin, line.number, "index out of range");
                    dst->push_back(static_cast<Obj>(v));
                }
            };
            switch (kidx) {
                case 0:
                    if (nums.size() != 1 || nums[0] < 1)
                        fail(origin, line.number, "objects: expected one positive count");
                    d.object_count = static_cast<Obj>(nums[0]);
                    break;
                case 1:
                    if (nums.size() != 1 || nums[0] < 0)
                        fail(origin, line.number, "morphisms: expected one count");
                    declared_m = nums[0];
                    break;
                case 2: as_int32(&d.dom); break;
                case 3: as_int32(&d.cod); break;
                case 4: as_int32(&d.identity); break;
                case 5: as_int32(&d.inverse); break;
            }
            break;
        }
        if (!matched) fail(origin, line.number, "unrecognized line '" + line.text + "'");
    }

    for (int kidx = 0; kidx < 6; ++kidx)
        if (!seen[kidx])
            fail(origin, lines.empty() ? 1 : lines.back().number,
                 std::string("missing key '") + keys[kidx] + "'");
    if (compose_line < 0)
        fail(origin, lines.empty() ? 1 : lines.back().number, "missing compose section");
    if (static_cast<std::int64_t>(d.dom.size()) != declared_m)
        fail(origin, compose_line, "dom length does not match the declared morphism count");
    if (static_cast<std::int64_t>(d.cod.size()) != declared_m)
        fail(origin, compose_line, "cod length does not match the declared morphism count");
    if (static_cast<Obj>(d.identity.size()) != d.object_count)
        fail(origin, compose_line, "id length does not match the declared object count");
    if (static_cast<std::int64_t>(d.inverse.size()) != declared_m)
        fail(origin, compose_line, "inv length does not match the declared morphism count");

    std::vector<int> entry_line;
    for (; i < lines.size(); ++i) {
        auto nums = parse_numbers(origin, lines[i], lines[i].text);
        if (nums.size() != 3) fail(origin, lines[i].number, "compose line needs three indices");
        for (auto v : nums)
            if (v < 0 || v >= declared_m) fail(origin, lines[i].number, "compose index out of range");
        d.compose.emplace_back(static_cast<Mor>(nums[0]), static_cast<Mor>(nums[1]),
                               static_cast<Mor>(nums[2]));
        entry_line.push_back(lines[i].number);
    }

    // Structural pre-checks with line attribution before handing over.
    std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
    keyed.reserve(d.compose.size());
    for (std::size_t e = 0; e < d.compose.size(); ++e) {
        auto [g2, g1, r] = d.compose[e];
        (void)r;
        if (d.dom[static_cast<std::size_t>(g2)] != d.cod[static_cast<std::size_t>(g1)])
            fail(origin, entry_line[e],
                 "compose entry for non-composable pair (" + std::to_string(g2) + ", " +
                     std::to_string(g1) + ")");
        keyed.emplace_back(static_cast<std::uint64_t>(g2) * static_cast<std::uint64_t>(declared_m) +
                               static_cast<std::uint64_t>(g1),
                           e);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t e = 1; e < keyed.size(); ++e)
        if (keyed[e].first == keyed[e - 1].first) {
            const auto& [g2, g1, r] = d.compose[keyed[e].second];
            (void)r;
            fail(origin, entry_line[std::max(keyed[e].second, keyed[e - 1].second)],
                 "duplicate compose entry for pair (" + std::to_string(g2) + ", " +
                     std::to_string(g1) + ")");
        }
    // Missing composable pairs, reported against the compose header line.
    std::vector<std::vector<Mor>> by_dom(static_cast<std::size_t>(d.object_count));
    std::vector<std::vector<Mor>> by_cod(static_cast<std::size_t>(d.object_count));
    for (Mor a = 0; a < declared_m; ++a) {
        if (d.dom[static_cast<std::size_t>(a)] >= d.object_count ||
            d.cod[static_cast<std::size_t>(a)] >= d.object_count)
            fail(origin, compose_line, "dom/cod index out of range for morphism " + std::to_string(a));
        by_dom[static_cast<std::size_t>(d.dom[static_cast<std::size_t>(a)])].push_back(a);
        by_cod[static_cast<std::size_t>(d.cod[static_cast<std::size_t>(a)])].push_back(a);
    }
    for (Obj w = 0; w < d.object_count; ++w)
        for (Mor g1 : by_cod[static_cast<std::size_t>(w)])
            for (Mor g2 : by_dom[static_cast<std::size_t>(w)]) {
                std::uint64_t key = static_cast<std::uint64_t>(g2) *
                                        static_cast<std::uint64_t>(declared_m) +
                                    static_cast<std::uint64_t>(g1);
                auto it = std::lower_bound(keyed.begin(), keyed.end(), key,
                                           [](const auto& p, std::uint64_t v) { return p.first < v; });
                if (it == keyed.end() || it->first != key)
                    fail(origin, compose_line,
                         "missing compose entry for composable pair (" + std::to_string(g2) + ", " +
                             std::to_string(g1) + ")");
            }

    try {
        return FiniteGroupoid(std::move(d));
    } catch (const Error& e) {
        fail(origin, compose_line, e.what());
    }
}

FiniteGroupoid load_groupoid(const std::string& path) {
    return parse_groupoid_text(read_file(path), path);
}

std::string serialize_subgroupoid(const Subgroupoid& s) {
    std::ostringstream os;
    os << "objects:";
    for (Obj x : s.objects()) os << " " << x;
    os << "\nmorphisms:";
    for (Mor a : s.morphisms()) os << " " << a;
    os << "\n";
    return os.str();
}

Subgroupoid parse_subgroupoid_text(const FiniteGroupoid& parent, const std::string& text,
                                   const std::string& origin) {
    auto lines = logical_lines(text);
    bool seen_obj = false, seen_mor = false;
    std::vector<Obj> objs;
    std::vector<Mor> mors;
    for (const Line& line : lines) {
        std::string value;
        if (match_key(line, "objects", &value)) {
            if (seen_obj) fail(origin, line.number, "duplicate key 'objects'");
            seen_obj = true;
            for (auto v : parse_numbers(origin, line, value)) {
                if (v < 0 || v >= parent.object_count())
                    fail(origin, line.number, "object index out of range: " + std::to_string(v));
                objs.push_back(static_cast<Obj>(v));
            }
        } else if (match_key(line, "morphisms", &value)) {
            if (seen_mor) fail(origin, line.number, "duplicate key 'morphisms'");
            seen_mor = true;
            for (auto v : parse_numbers(origin, line, value)) {
                if (v < 0 || v >= parent.morphism_count())
                    fail(origin, line.number, "morphism index out of range: " + std::to_string(v));
                mors.push_back(static_cast<Mor>(v));
            }
        } else {
            fail(origin, line.number, "unrecognized line '" + line.text + "'");
        }
    }
    if (!seen_obj || !seen_mor)
        fail(origin, lines.empty() ? 1 : lines.back().number, "missing 'objects' or 'morphisms'");
    return Subgroupoid(parent, std::move(objs), std::move(mors));
}

Subgroupoid load_subgroupoid(const FiniteGroupoid& parent, const std::string& path) {
    return parse_subgroupoid_text(parent, read_file(path), path);
}

std::string serialize_gset(const GSet& x, const std::string& base_reference) {
    std::ostringstream os;
    os << "gset over: " << base_reference << "\n";
    os << "sizes:";
    for (int s : x.carrier_size) os << " " << s;
    os << "\n";
    for (Mor a = 0; a < x.base->morphism_count(); ++a) {
        os << "act " << a << ":";
        for (int img : x.action[static_cast<std::size_t>(a)]) os << " " << img;
        os << "\n";
    }
    return os.str();
}

std::string gset_base_reference(const std::string& text) {
    for (const Line& line : logical_lines(text)) {
        std::string value;
        if (match_key(line, "gset over", &value)) {
            std::size_t b = value.find_first_not_of(' ');
            return b == std::string::npos ? "" : value.substr(b);
        }
    }
    throw Error("gset file: missing 'gset over:' header");
}

GSet parse_gset_text(const FiniteGroupoid& base, const std::string& text,
                     const std::string& origin) {
    auto lines = logical_lines(text);
    std::vector<int> sizes;
    bool seen_sizes = false, seen_over = false;
    std::vector<std::vector<int>> act(static_cast<std::size_t>(base.morphism_count()));
    std::vector<char> seen_act(static_cast<std::size_t>(base.morphism_count()), 0);
    for (const Line& line : lines) {
        std::string value;
        if (match_key(line, "gset over", &value)) {
            if (seen_over) fail(origin, line.number, "duplicate 'gset over' header");
            seen_over = true;
        } else if (match_key(line, "sizes", &value)) {
            if (seen_sizes) fail(origin, line.number, "duplicate key 'sizes'");
            seen_sizes = true;
            for (auto v : parse_numbers(origin, line, value)) sizes.push_back(static_cast<int>(v));
        } else if (line.text.rfind("act ", 0) == 0) {
            std::size_t colon = line.text.find(':');
            if (colon == std::string::npos) fail(origin, line.number, "act line needs a colon");
            auto head = parse_numbers(origin, line, line.text.substr(4, colon - 4));
            if (head.size() != 1 || head[0] < 0 || head[0] >= base.morphism_count())
                fail(origin, line.number, "act line: bad morphism index");
            Mor a = static_cast<Mor>(head[0]);
            if (seen_act[static_cast<std::size_t>(a)])
                fail(origin, line.number, "duplicate act line for morphism " + std::to_string(a));
            seen_act[static_cast<std::size_t>(a)] = 1;
            for (auto v : parse_numbers(origin, line, line.text.substr(colon + 1)))
                act[static_cast<std::size_t>(a)].push_back(static_cast<int>(v));
        } else {
            fail(origin, line.number, "unrecognized line '" + line.text + "'");
        }
    }
    int last = lines.empty() ? 1 : lines.back().number;
    if (!seen_over) fail(origin, last, "missing 'gset over:' header");
    if (!seen_sizes) fail(origin, last, "missing key 'sizes'");
    for (Mor a = 0; a < base.morphism_count(); ++a)
        if (!seen_act[static_cast<std::size_t>(a)])
            fail(origin, last, "missing act line for morphism " + std::to_string(a));
    try {
        return GSet(base, std::move(sizes), std::move(act));
    } catch (const Error& e) {
        fail(origin, last, e.what());
    }
}

std::string serialize_representation(const Representation& r, const std::string& base_reference) {
    std::ostringstream os;
    os << "rep over: " << base_reference << "\n";
    os << "dims:";
    for (int d : r.dim) os << " " << d;
    os << "\n";
    for (Mor a = 0; a < r.base->morphism_count(); ++a) {
        os << "mat " << a << ":\n";
        const QMat& m = r.mat[static_cast<std::size_t>(a)];
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m.at(i, j));
            os << "\n";
        }
    }
    return os.str();
}

std::string representation_base_reference(const std::string& text) {
    for (const Line& line : logical_lines(text)) {
        std::string value;
        if (match_key(line, "rep over", &value)) {
            std::size_t b = value.find_first_not_of(' ');
            return b == std::string::npos ? "" : value.substr(b);
        }
    }
    throw Error("representation file: missing 'rep over:' header");
}

Representation parse_representation_text(const FiniteGroupoid& base, const std::string& text,
                                         const std::string& origin) {
    auto lines = logical_lines(text);
    Representation r;
    r.base = &base;
    bool seen_over = false, seen_dims = false;
    Mor current = -1;
    std::vector<std::vector<QVec>> rows(static_cast<std::size_t>(base.morphism_count()));
    std::vector<char> seen_mat(static_cast<std::size_t>(base.morphism_count()), 0);
    for (const Line& line : lines) {
        std::string value;
        if (match_key(line, "rep over", &value)) {
            if (seen_over) fail(origin, line.number, "duplicate 'rep over' header");
            seen_over = true;
        } else if (match_key(line, "dims", &value)) {
            if (seen_dims) fail(origin, line.number, "duplicate key 'dims'");
            seen_dims = true;
            for (auto v : parse_numbers(origin, line, value)) {
                if (v < 0) fail(origin, line.number, "negative dimension");
                r.dim.push_back(static_cast<int>(v));
            }
            if (static_cast<Obj>(r.dim.size()) != base.object_count())
                fail(origin, line.number, "dims length does not match the object count");
        } else if (line.text.rfind("mat ", 0) == 0) {
            std::size_t colon = line.text.find(':');
            if (colon == std::string::npos) fail(origin, line.number, "mat line needs a colon");
            auto head = parse_numbers(origin, line, line.text.substr(4, colon - 4));
            if (head.size() != 1 || head[0] < 0 || head[0] >= base.morphism_count())
                fail(origin, line.number, "mat line: bad morphism index");
            current = static_cast<Mor>(head[0]);
            if (seen_mat[static_cast<std::size_t>(current)])
                fail(origin, line.number, "duplicate mat block for morphism " + std::to_string(current));
            seen_mat[static_cast<std::size_t>(current)] = 1;
        } else {
            if (current < 0) fail(origin, line.number, "matrix row outside a mat block");
            if (!seen_dims) fail(origin, line.number, "dims must precede matrix rows");
            QVec row;
            std::istringstream is(line.text);
            std::string tok;
            while (is >> tok) {
                auto q = parse_gauss_rat(tok);
                if (!q) fail(origin, line.number, "bad scalar token '" + tok + "'");
                row.push_back(*q);
            }
            if (static_cast<int>(row.size()) != r.dim[static_cast<std::size_t>(base.dom(current))])
                fail(origin, line.number, "matrix row has wrong length");
            rows[static_cast<std::size_t>(current)].push_back(std::move(row));
        }
    }
    int last = lines.empty() ? 1 : lines.back().number;
    if (!seen_over) fail(origin, last, "missing 'rep over:' header");
    if (!seen_dims) fail(origin, last, "missing key 'dims'");
    for (Mor a = 0; a < base.morphism_count(); ++a) {
        int want = r.dim[static_cast<std::size_t>(base.cod(a))];
        if (static_cast<int>(rows[static_cast<std::size_t>(a)].size()) != want)
            fail(origin, last, "mat block for morphism " + std::to_string(a) + " has " +
                                   std::to_string(rows[static_cast<std::size_t>(a)].size()) +
                                   " rows, expected " + std::to_string(want));
        QMat m(static_cast<std::size_t>(want),
               static_cast<std::size_t>(r.dim[static_cast<std::size_t>(base.dom(a))]));
        for (int i = 0; i < want; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(static_cast<std::size_t>(i), j) = rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)][j];
        r.mat.push_back(std::move(m));
    }
    return r;
}

std::string serialize_function(const QVec& fn) {
    std::ostringstream os;
    os << "fn:";
    for (const auto& v : fn) os << " " << to_string(v);
    os << "\n";
    return os.str();
}

QVec parse_function_text(const std::string& text, std::size_t expected_length,
                         const std::string& origin) {
    for (const Line& line : logical_lines(text)) {
        std::string value;
        if (!match_key(line, "fn", &value)) fail(origin, line.number, "expected 'fn:' line");
        QVec fn;
        std::istringstream is(value);
        std::string tok;
        while (is >> tok) {
            auto q = parse_gauss_rat(tok);
            if (!q) fail(origin, line.number, "bad scalar token '" + tok + "'");
            fn.push_back(*q);
        }
        if (fn.size() != expected_length)
            fail(origin, line.number, "function has wrong length");
        return fn;
    }
    throw Error(origin + ": empty function file");
}

std::string serialize_nat_transform(const NatTransform& t) {
    std::ostringstream os;
    for (std::size_t x = 0; x < t.component.size(); ++x) {
        os << "obj " << x << ":\n";
        const QMat& m = t.component[x];
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m.at(i, j));
            os << "\n";
        }
    }
    return os.str();
}

std::string serialize_double_cosets(const DoubleCosetPartition& p) {
    std::ostringstream os;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        os << "block " << p.representatives[b] << ":";
        for (Mor a : p.blocks[b]) os << " " << a;
        os << "\n";
    }
    return os.str();
}

}  // namespace gpd
