#include "qpmut/explore.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "qpmut/io.hpp"

namespace qpmut {

std::string seed_canonical_key(const Seed& s) {
    const int r = s.quiver.r();
    std::vector<std::string> names;
    names.reserve(r);
    for (const RationalFunction& v : s.cluster) names.push_back(print_canonical(v));
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return names[a] < names[b]; });

    BMatrix b = b_matrix(s.quiver);
    std::string key;
    for (int k = 0; k < r; ++k) key += names[perm[k]] + ";";
    key += "|";
    // Mutable rows and columns both permuted, frozen rows columns only.
    for (int i = 0; i < b.n; ++i) {
        for (int j = 0; j < r; ++j) {
            long e = i < r ? b.entries[perm[i]][perm[j]] : b.entries[i][perm[j]];
            key += std::to_string(e) + ",";
        }
        key += ";";
    }
    return key;
}

namespace {

std::size_t seed_term_count(const Seed& s) {
    std::size_t t = 0;
    for (const RationalFunction& v : s.cluster) {
        t += v.num().term_count() + v.den().term_count();
    }
    return t;
}

}  // namespace

ExploreResult explore(const Seed& s, int max_depth, std::size_t max_seeds,
                      std::size_t max_terms) {
    if (max_depth < 0) throw input_error("explore: negative depth");
    ExploreResult res;
    std::map<std::string, std::size_t> index;
    std::set<std::string> variables;
    std::vector<int> depth;
    std::size_t total_terms = 0;

    auto add_node = [&](const Seed& node, int d) -> std::size_t {
        std::string key = seed_canonical_key(node);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        if (res.seeds.size() >= max_seeds) {
            res.capped = true;
            return SIZE_MAX;
        }
        total_terms += seed_term_count(node);
        if (total_terms > max_terms) {
            res.capped = true;
            return SIZE_MAX;
        }
        std::size_t id = res.seeds.size();
        index.emplace(std::move(key), id);
        res.seeds.push_back(node);
        depth.push_back(d);
        for (const RationalFunction& v : node.cluster) variables.insert(print_canonical(v));
        return id;
    };

    add_node(s, 0);
    std::size_t next = 0;
    while (next < res.seeds.size() && !res.capped) {
        std::size_t cur = next++;
        if (depth[cur] >= max_depth) continue;
        for (int i = 1; i <= s.quiver.r(); ++i) {
            Seed nb = mutate_seed(res.seeds[cur], i);
            std::size_t to = add_node(nb, depth[cur] + 1);
            if (to == SIZE_MAX) break;
            res.edges.push_back({cur, i, to});
        }
    }
    res.distinct_clusters = res.seeds.size();
    res.distinct_variables = variables.size();
    // Closure holds when no unexplored neighbour remains: nodes cut off by
    // the depth budget must only lead back to known nodes.
    res.closure = !res.capped;
    for (std::size_t k = 0; res.closure && k < res.seeds.size(); ++k) {
        if (depth[k] < max_depth) continue;
        for (int i = 1; i <= s.quiver.r() && res.closure; ++i) {
            Seed nb = mutate_seed(res.seeds[k], i);
            if (index.count(seed_canonical_key(nb)) == 0) res.closure = false;
        }
    }
    return res;
}

}  // namespace qpmut
