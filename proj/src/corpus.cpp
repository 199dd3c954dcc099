#include "eil/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

namespace eil {

namespace {

bool bipartite_connected_spanning(int m, int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m + n));
    for (auto [i, j] : edges) {
        adj[static_cast<std::size_t>(i - 1)].push_back(m + j - 1);
        adj[static_cast<std::size_t>(m + j - 1)].push_back(i - 1);
    }
    std::vector<bool> seen(static_cast<std::size_t>(m + n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == m + n;
}

} // namespace

std::vector<std::vector<std::pair<int, int>>> connected_bipartite_classes(int m, int n) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) all_pairs.emplace_back(i, j);

    std::vector<std::vector<int>> perms_m, perms_n;
    std::vector<int> pm(static_cast<std::size_t>(m));
    std::iota(pm.begin(), pm.end(), 1);
    do perms_m.push_back(pm);
    while (std::next_permutation(pm.begin(), pm.end()));
    std::vector<int> pn(static_cast<std::size_t>(n));
    std::iota(pn.begin(), pn.end(), 1);
    do perms_n.push_back(pn);
    while (std::next_permutation(pn.begin(), pn.end()));

    std::vector<std::vector<std::pair<int, int>>> classes;
    std::set<std::vector<std::pair<int, int>>> seen;
    std::size_t total = all_pairs.size();
    for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < total; ++k)
            if ((mask >> k) & 1u) edges.push_back(all_pairs[k]);
        if (edges.size() < static_cast<std::size_t>(m + n - 1)) continue;
        if (!bipartite_connected_spanning(m, n, edges)) continue;

        std::vector<std::pair<int, int>> least = edges;
        for (const auto& sm : perms_m)
            for (const auto& sn : perms_n) {
                std::vector<std::pair<int, int>> mapped;
                mapped.reserve(edges.size());
                for (auto [i, j] : edges)
                    mapped.emplace_back(sm[static_cast<std::size_t>(i - 1)],
                                        sn[static_cast<std::size_t>(j - 1)]);
                std::sort(mapped.begin(), mapped.end());
                if (mapped < least) least = mapped;
            }
        if (seen.insert(least).second) classes.push_back(least);
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return classes;
}

namespace {

void enumerate_tuples(int len, int lo, int hi, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == len) {
        emit(cur);
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        enumerate_tuples(len, lo, hi, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<CWStructure> cw_corpus(const CorpusOptions& opt) {
    std::vector<CWStructure> out;
    for (int m = 1; m <= opt.m_max; ++m) {
        for (int n = 1; n <= opt.n_max; ++n) {
            if (m + n + m > opt.max_vertices) continue; // every v needs a leaf
            for (const auto& bip : connected_bipartite_classes(m, n)) {
                std::vector<int> s_tuple;
                enumerate_tuples(m, 1, opt.s_max, s_tuple, [&](const std::vector<int>& s) {
                    int base = m + n + std::accumulate(s.begin(), s.end(), 0);
                    if (base > opt.max_vertices) return;
                    std::vector<int> t_tuple;
                    enumerate_tuples(n, 0, opt.t_max, t_tuple, [&](const std::vector<int>& t) {
                        int verts = base + 2 * std::accumulate(t.begin(), t.end(), 0);
                        if (verts > opt.max_vertices) return;
                        CWStructure spec;
                        spec.m = m;
                        spec.n = n;
                        spec.s = s;
                        spec.t = t;
                        spec.bip = bip;
                        out.push_back(std::move(spec));
                    });
                });
            }
        }
    }
    return out;
}

std::vector<SimpleGraph> all_trees(int min_vertices, int max_vertices) {
    std::vector<SimpleGraph> result;
    std::vector<SimpleGraph> level;
    level.push_back(SimpleGraph({"x1"}, {}));
    if (min_vertices <= 1) result.push_back(level.front());

    for (int size = 2; size <= max_vertices; ++size) {
        std::vector<SimpleGraph> next;
        std::unordered_set<std::string> seen;
        std::string leaf = "x" + std::to_string(size);
        for (const SimpleGraph& tree : level) {
            for (int v = 0; v < tree.vertex_count(); ++v) {
                std::vector<std::string> vertices = tree.vertex_labels();
                vertices.push_back(leaf);
                auto edges = tree.edge_labels();
                edges.emplace_back(tree.label(v), leaf);
                SimpleGraph bigger(std::move(vertices), edges);
                if (seen.insert(canonical_key(bigger)).second) next.push_back(std::move(bigger));
            }
        }
        level = std::move(next);
        if (size >= min_vertices)
            for (const auto& t : level) result.push_back(t);
    }
    return result;
}

std::vector<SimpleGraph> random_connected_graphs(int count, int min_vertices, int max_vertices,
                                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(min_vertices, max_vertices);
    std::uniform_real_distribution<double> prob_dist(0.15, 0.6);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<SimpleGraph> out;
    while (static_cast<int>(out.size()) < count) {
        int n = size_dist(rng);
        double p = prob_dist(rng);
        std::vector<std::string> vertices;
        for (int i = 1; i <= n; ++i) vertices.push_back("x" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(vertices[static_cast<std::size_t>(u)],
                                                      vertices[static_cast<std::size_t>(v)]);
        SimpleGraph g(std::move(vertices), edges);
        if (is_connected(g) && g.vertex_count() >= 1) out.push_back(std::move(g));
    }
    return out;
}

} // namespace eil
