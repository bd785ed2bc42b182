#include "gpd/builder.hpp"
#include "gpd/fnspace.hpp"
#include "gpd/generator.hpp"
#include "gpd/textio.hpp"
#include "gpd/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace {

using namespace gpd;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

FiniteGroupoid resolve_groupoid(const std::string& arg) {
    if (arg.find('(') != std::string::npos) return build_groupoid(arg);
    return load_groupoid(arg);
}

/// Loads and axiom-checks; input errors and invalid groupoids both abort.
FiniteGroupoid resolve_valid_groupoid(const std::string& arg) {
    FiniteGroupoid g = resolve_groupoid(arg);
    auto report = validate(g);
    if (!report.empty()) {
        std::ostringstream os;
        os << arg << ": groupoid fails " << report.size() << " axiom check(s):\n";
        for (const auto& v : report) os << "  " << v.axiom << ": " << v.message << "\n";
        throw Error(os.str());
    }
    return g;
}

int cmd_validate(const std::string& arg, bool records) {
    FiniteGroupoid g = resolve_groupoid(arg);
    auto report = validate(g);
    if (records) {
        for (const auto& v : report) {
            std::cout << "violation=" << v.axiom << " witness=";
            for (std::size_t i = 0; i < v.witness.size(); ++i)
                std::cout << (i ? "," : "") << v.witness[i];
            std::cout << "\n";
        }
        std::cout << "violations=" << report.size() << "\n";
    } else if (report.empty()) {
        std::cout << "valid\n";
    } else {
        for (const auto& v : report) std::cout << v.axiom << ": " << v.message << "\n";
        std::cout << report.size() << " violation(s)\n";
    }
    return report.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_info(const std::string& arg, bool records) {
    FiniteGroupoid g = resolve_valid_groupoid(arg);
    if (records) {
        std::cout << "objects=" << g.object_count() << " morphisms=" << g.morphism_count()
                  << " components=" << g.component_count() << "\n";
        for (Obj x = 0; x < g.object_count(); ++x)
            std::cout << "object=" << x << " component=" << g.component_of(x)
                      << " isotropy=" << g.isotropy_order(x) << "\n";
    } else {
        std::cout << "objects: " << g.object_count() << "\n";
        std::cout << "morphisms: " << g.morphism_count() << "\n";
        std::cout << "components: " << g.component_count() << "\n";
        std::cout << "isotropy orders:";
        for (Obj x = 0; x < g.object_count(); ++x) std::cout << " " << g.isotropy_order(x);
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_components(const std::string& arg, bool records) {
    FiniteGroupoid g = resolve_valid_groupoid(arg);
    const auto& comps = g.component_objects();
    if (records) std::cout << "components=" << comps.size() << "\n";
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (records) {
            std::cout << "component=" << c << " objects=";
            for (std::size_t i = 0; i < comps[c].size(); ++i)
                std::cout << (i ? "," : "") << comps[c][i];
            std::cout << "\n";
        } else {
            std::cout << "component " << c << ": objects";
            for (Obj x : comps[c]) std::cout << " " << x;
            std::cout << "\n";
        }
    }
    if (!records) std::cout << comps.size() << " component(s)\n";
    return kExitOk;
}

int cmd_index(const std::string& arg, const std::string& h_spec, bool records) {
    FiniteGroupoid g = resolve_valid_groupoid(arg);
    Subgroupoid h = build_subgroupoid(g, h_spec);
    IndexResult r = coset_index(g, h);
    if (records)
        std::cout << "index=" << r.coset_total << " formula_value=" << r.formula_value << "\n";
    else
        std::cout << r.coset_total << " = " << r.formula_text << "\n";
    return kExitOk;
}

int cmd_cf(const std::string& arg, const std::string& h_spec, const std::string& k_spec,
           bool xhk, bool records) {
    std::int64_t orbit_count = 0;
    Rat average;
    if (xhk) {
        FiniteGroupoid g = resolve_valid_groupoid(arg);
        Subgroupoid h = build_subgroupoid(g, h_spec);
        Subgroupoid k = build_subgroupoid(g, k_spec);
        XhkAction x = x_hk_action(g, h, k);
        average = cf_count(x.gset);
        orbit_count = static_cast<std::int64_t>(orbits(x.gset).members.size());
    } else {
        std::string text = read_file(arg);
        std::string ref = gset_base_reference(text);
        std::filesystem::path base_path(ref);
        if (base_path.is_relative())
            base_path = std::filesystem::path(arg).parent_path() / base_path;
        FiniteGroupoid g = load_groupoid(base_path.string());
        // Keep the base alive for the G-set's lifetime.
        GSet x = parse_gset_text(g, text, arg);
        auto bad = check_gset(x);
        if (!bad.empty()) throw Error(arg + ": " + bad.front());
        average = cf_count(x);
        orbit_count = static_cast<std::int64_t>(orbits(x).members.size());
    }
    if (records)
        std::cout << "orbits=" << orbit_count << " average=" << to_string(average) << "\n";
    else
        std::cout << "orbits = " << orbit_count << "\n";
    return kExitOk;
}

int cmd_double_cosets(const std::string& arg, const std::string& h_spec, const std::string& k_spec,
                      bool records) {
    FiniteGroupoid g = resolve_valid_groupoid(arg);
    Subgroupoid h = build_subgroupoid(g, h_spec);
    Subgroupoid k = build_subgroupoid(g, k_spec);
    DoubleCosetPartition dc = double_cosets(g, h, k);
    if (records) {
        std::cout << "blocks=" << dc.blocks.size() << "\n";
        for (std::size_t b = 0; b < dc.blocks.size(); ++b) {
            std::cout << "block=" << dc.representatives[b] << " members=";
            for (std::size_t i = 0; i < dc.blocks[b].size(); ++i)
                std::cout << (i ? "," : "") << dc.blocks[b][i];
            std::cout << "\n";
        }
    } else {
        std::cout << dc.blocks.size() << " block(s)\n" << serialize_double_cosets(dc);
    }
    return kExitOk;
}

int cmd_characters(const std::string& arg, const std::string& h_spec, const std::string& k_spec,
                   bool records) {
    FiniteGroupoid g = resolve_valid_groupoid(arg);
    Subgroupoid h = build_subgroupoid(g, h_spec);
    Subgroupoid k = build_subgroupoid(g, k_spec.empty() ? h_spec : k_spec);

    std::vector<std::pair<std::string, Representation>> reps;
    reps.emplace_back("Tri", trivial_rep(g));
    reps.emplace_back("C[G/H]", permutation_rep(left_cosets(g, h).gset));
    reps.emplace_back("C[G/K]", permutation_rep(left_cosets(g, k).gset));
    reps.emplace_back("Y_H", y_rep(g, h).rep);
    reps.emplace_back("Y_K", y_rep(g, k).rep);

    std::vector<Mor> endos = g.all_endomorphisms();
    if (!records) {
        std::cout << "endomorphisms:";
        for (Mor e : endos) std::cout << " " << e;
        std::cout << "\n";
    }
    for (const auto& [name, rep] : reps) {
        Character chi = character(rep);
        if (records) {
            for (Mor e : endos)
                std::cout << "rep=" << name << " mor=" << e
                          << " chi=" << to_string(chi.values[static_cast<std::size_t>(e)]) << "\n";
        } else {
            std::cout << "char " << name << ":";
            for (Mor e : endos) std::cout << " " << to_string(chi.values[static_cast<std::size_t>(e)]);
            std::cout << "\n";
        }
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i; j < reps.size(); ++j) {
            GaussRat ip = char_inner_product(reps[i].second, reps[j].second);
            if (records)
                std::cout << "inner=" << reps[i].first << "," << reps[j].first
                          << " value=" << to_string(ip) << "\n";
            else
                std::cout << "<" << reps[i].first << ", " << reps[j].first
                          << "> = " << to_string(ip) << "\n";
        }
    return kExitOk;
}

int cmd_verify_one(const std::string& arg, const std::string& h_spec, const std::string& k_spec,
                   bool records) {
    FiniteGroupoid g = resolve_valid_groupoid(arg);
    Subgroupoid h = build_subgroupoid(g, h_spec);
    Subgroupoid k = build_subgroupoid(g, k_spec);
    if (!h.wide() || !k.wide()) throw Error("verify: --h and --k must be wide subgroupoids");
    VerificationReport r = verify_instance(g, h, k, arg);
    std::cout << r.render(records);
    std::cout << (r.all_ok() ? "all-ok\n" : "failures-present\n");
    return r.all_ok() ? kExitOk : kExitCheckFailed;
}

int cmd_verify_random(int count, std::uint64_t seed, int max_objects, int max_group_order,
                      bool records) {
    bool ok = true;
    for (int i = 0; i < count; ++i) {
        GenInstance inst = gen_random(seed + static_cast<std::uint64_t>(i), max_objects,
                                      max_group_order);
        VerificationReport r = verify_instance(*inst.groupoid, *inst.h, *inst.k, inst.description);
        std::cout << r.render(records);
        ok = ok && r.all_ok();
    }
    std::cout << (ok ? "all-ok\n" : "failures-present\n");
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_gen(std::uint64_t seed, int max_objects, int max_group_order, const std::string& out) {
    GenInstance inst = gen_random(seed, max_objects, max_group_order);
    std::string g_text = serialize_groupoid(*inst.groupoid);
    std::string h_text = serialize_subgroupoid(*inst.h);
    std::string k_text = serialize_subgroupoid(*inst.k);
    if (out.empty()) {
        std::cout << "== groupoid ==\n" << g_text;
        std::cout << "== subgroupoid h ==\n" << h_text;
        std::cout << "== subgroupoid k ==\n" << k_text;
    } else {
        write_file(out + ".gpd", g_text);
        write_file(out + ".h.sub", h_text);
        write_file(out + ".k.sub", k_text);
        std::cout << "wrote " << out << ".gpd, " << out << ".h.sub, " << out << ".k.sub\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite groupoids: double cosets, actions, and exact representation counts"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "records"}));
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for generation");

    std::string g_arg, h_spec, k_spec, out_prefix;
    int count = 10, max_objects = 4, max_group_order = 6;
    bool xhk = false;

    auto* validate_cmd = app.add_subcommand("validate", "check the groupoid axioms");
    validate_cmd->add_option("groupoid", g_arg, "builder expression or file")->required();

    auto* info_cmd = app.add_subcommand("info", "object, morphism, and isotropy summary");
    info_cmd->add_option("groupoid", g_arg)->required();

    auto* comp_cmd = app.add_subcommand("components", "connected components");
    comp_cmd->add_option("groupoid", g_arg)->required();

    auto* index_cmd = app.add_subcommand("index", "left-coset count of a wide subgroupoid");
    index_cmd->add_option("groupoid", g_arg)->required();
    index_cmd->add_option("--h", h_spec, "subgroupoid spec")->required();

    auto* cf_cmd = app.add_subcommand("cf", "orbit count by the fixed-point average");
    cf_cmd->add_option("input", g_arg, "G-set file, or groupoid with --xhk")->required();
    cf_cmd->add_flag("--xhk", xhk, "use the double-coset action of --h, --k");
    cf_cmd->add_option("--h", h_spec);
    cf_cmd->add_option("--k", k_spec);

    auto* dc_cmd = app.add_subcommand("double-cosets", "double-coset blocks");
    dc_cmd->add_option("groupoid", g_arg)->required();
    dc_cmd->add_option("--h", h_spec)->required();
    dc_cmd->add_option("--k", k_spec)->required();

    auto* char_cmd = app.add_subcommand("characters", "characters and inner products");
    char_cmd->add_option("groupoid", g_arg)->required();
    char_cmd->add_option("--h", h_spec)->required();
    char_cmd->add_option("--k", k_spec);

    auto* verify_cmd = app.add_subcommand("verify", "run every theorem check");
    verify_cmd->add_option("groupoid", g_arg);
    verify_cmd->add_option("--h", h_spec);
    verify_cmd->add_option("--k", k_spec);
    bool random_mode = false;
    verify_cmd->add_flag("--random", random_mode, "verify generated instances instead");
    verify_cmd->add_option("--count", count, "number of generated instances");
    verify_cmd->add_option("--max-objects", max_objects);
    verify_cmd->add_option("--max-group-order", max_group_order);

    auto* gen_cmd = app.add_subcommand("gen", "emit a seeded groupoid with two wide subgroupoids");
    gen_cmd->add_option("--max-objects", max_objects);
    gen_cmd->add_option("--max-group-order", max_group_order);
    gen_cmd->add_option("--out", out_prefix, "file prefix (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    bool records = format == "records";
    try {
        if (validate_cmd->parsed()) return cmd_validate(g_arg, records);
        if (info_cmd->parsed()) return cmd_info(g_arg, records);
        if (comp_cmd->parsed()) return cmd_components(g_arg, records);
        if (index_cmd->parsed()) return cmd_index(g_arg, h_spec, records);
        if (cf_cmd->parsed()) {
            if (xhk && (h_spec.empty() || k_spec.empty()))
                throw Error("cf --xhk needs --h and --k");
            return cmd_cf(g_arg, h_spec, k_spec, xhk, records);
        }
        if (dc_cmd->parsed()) return cmd_double_cosets(g_arg, h_spec, k_spec, records);
        if (char_cmd->parsed()) return cmd_characters(g_arg, h_spec, k_spec, records);
        if (verify_cmd->parsed()) {
            if (random_mode) return cmd_verify_random(count, seed, max_objects, max_group_order, records);
            if (g_arg.empty() || h_spec.empty() || k_spec.empty())
                throw Error("verify needs a groupoid with --h and --k, or --random");
            return cmd_verify_one(g_arg, h_spec, k_spec, records);
        }
        if (gen_cmd->parsed()) return cmd_gen(seed, max_objects, max_group_order, out_prefix);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
