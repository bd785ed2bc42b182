#include "gpd/generator.hpp"

#include "gpd/coset.hpp"

#include <random>
#include <sstream>

namespace gpd {

namespace {

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t below(std::uint64_t n) { return engine() % n; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
};

FiniteGroupoid random_component(Rng& rng, int max_objects, int max_group_order,
                                std::ostringstream& desc) {
    int order = rng.range(1, std::max(1, max_group_order));
    bool use_sym3 = order >= 6 && rng.below(2) == 0;
    int pair_size = rng.range(1, std::max(1, max_objects));
    if (use_sym3)
        desc << "sym3";
    else
        desc << "c" << order;
    desc << "xpair" << pair_size;
    FiniteGroupoid group = use_sym3 ? symmetric_group(3) : cyclic_group(order);
    if (pair_size == 1) return group;
    return product(group, pair_groupoid(pair_size));
}

Subgroupoid random_wide_subgroupoid(Rng& rng, const FiniteGroupoid& g, std::ostringstream& desc) {
    int seeds = rng.range(0, 3);
    std::vector<Mor> seed_list;
    for (int i = 0; i < seeds; ++i)
        seed_list.push_back(static_cast<Mor>(rng.below(static_cast<std::uint64_t>(g.morphism_count()))));
    desc << "seed{";
    for (std::size_t i = 0; i < seed_list.size(); ++i) desc << (i ? "," : "") << seed_list[i];
    desc << "}";
    return closure(g, seed_list, true);
}

GenInstance gen_with_components(std::uint64_t seed, int component_count, int max_objects,
                                int max_group_order) {
    Rng rng(seed);
    std::ostringstream desc;
    desc << "seed=" << seed << " ";
    int per_component = std::max(1, max_objects / component_count);

    GenInstance out;
    for (int c = 0; c < component_count; ++c) {
        if (c) desc << "+";
        FiniteGroupoid comp = random_component(rng, per_component, max_group_order, desc);
        if (!out.groupoid)
            out.groupoid = std::make_unique<FiniteGroupoid>(std::move(comp));
        else
            out.groupoid = std::make_unique<FiniteGroupoid>(coproduct(*out.groupoid, comp));
    }
    desc << " h=";
    out.h.emplace(random_wide_subgroupoid(rng, *out.groupoid, desc));
    desc << " k=";
    out.k.emplace(random_wide_subgroupoid(rng, *out.groupoid, desc));
    out.description = desc.str();
    return out;
}

}  // namespace

GenInstance gen_random(std::uint64_t seed, int max_objects, int max_group_order) {
    if (max_objects < 1 || max_group_order < 1)
        throw Error("gen_random: bounds must be at least 1");
    Rng head(seed ^ 0x9e3779b97f4a7c15ull);
    int components = head.range(1, 3);
    return gen_with_components(seed, components, max_objects, max_group_order);
}

GenInstance gen_random_connected(std::uint64_t seed, int max_objects, int max_group_order) {
    if (max_objects < 1 || max_group_order < 1)
        throw Error("gen_random_connected: bounds must be at least 1");
    return gen_with_components(seed, 1, max_objects, max_group_order);
}

GSet gen_random_gset(std::uint64_t seed, const FiniteGroupoid& g) {
    Rng rng(seed);
    int pieces = rng.range(1, 3);
    std::optional<GSet> acc;
    for (int p = 0; p < pieces; ++p) {
        GSet piece = terminal_gset(g);
        switch (rng.range(0, 2)) {
            case 0: break;  // terminal
            case 1:
                piece = representable_gset(
                    g, static_cast<Obj>(rng.below(static_cast<std::uint64_t>(g.object_count()))));
                break;
            case 2: {
                std::vector<Mor> seeds;
                int count = rng.range(0, 2);
                for (int i = 0; i < count; ++i)
                    seeds.push_back(
                        static_cast<Mor>(rng.below(static_cast<std::uint64_t>(g.morphism_count()))));
                piece = left_cosets(g, closure(g, seeds, true)).gset;
                break;
            }
        }
        if (!acc)
            acc.emplace(std::move(piece));
        else
            acc.emplace(disjoint_union(*acc, piece));
    }
    return *acc;
}

}  // namespace gpd
