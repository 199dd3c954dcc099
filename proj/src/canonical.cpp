#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "eil/errors.hpp"
#include "eil/graph.hpp"

// Canonical labeling for graphs of the size this project handles (<= ~25
// vertices).  Twin classes (vertices with identical open or closed
// neighborhoods) are collapsed first, which removes the large symmetric
// fibers that leaves and pendant triangles create; the decorated quotient is
// then labeled canonically by color refinement with backtracking, taking the
// lexicographically least leaf.  The emitted key encodes the quotient
// adjacency matrix plus per-class (size, clique) decorations, which together
// determine the original graph up to isomorphism, so equal keys mean
// isomorphic graphs and conversely.

namespace eil {

namespace {

struct Quotient {
    int k = 0;
    std::vector<std::uint64_t> adj; // quotient adjacency masks
    std::vector<int> size;          // class sizes
    std::vector<int> clique;        // 1 when the class is a clique of size >= 2
};

Quotient collapse_twins(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t nu = g.neighbors_mask(u), nv = g.neighbors_mask(v);
            bool open_twin = nu == nv;
            bool closed_twin = (nu | (1ull << u)) == (nv | (1ull << v));
            if (open_twin || closed_twin) parent[static_cast<std::size_t>(find(v))] = find(u);
        }
    }
    std::vector<int> root_to_class(static_cast<std::size_t>(n), -1);
    std::vector<int> class_of(static_cast<std::size_t>(n));
    Quotient q;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (root_to_class[static_cast<std::size_t>(r)] < 0) {
            root_to_class[static_cast<std::size_t>(r)] = q.k++;
            q.size.push_back(0);
        }
        class_of[static_cast<std::size_t>(v)] = root_to_class[static_cast<std::size_t>(r)];
        ++q.size[static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)])];
    }
    q.adj.assign(static_cast<std::size_t>(q.k), 0);
    q.clique.assign(static_cast<std::size_t>(q.k), 0);
    for (int u = 0; u < n; ++u) {
        int cu = class_of[static_cast<std::size_t>(u)];
        std::uint64_t m = g.neighbors_mask(u);
        while (m) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            int cv = class_of[static_cast<std::size_t>(v)];
            if (cu == cv)
                q.clique[static_cast<std::size_t>(cu)] = 1;
            else
                q.adj[static_cast<std::size_t>(cu)] |= 1ull << cv;
        }
    }
    return q;
}

using Partition = std::vector<std::vector<int>>;

// One pass of color refinement: split the first splittable cell by the
// multiset of neighbor counts against all cells, ordering the new subcells by
// signature.  Repeats until the partition is equitable.
void refine(const Quotient& q, Partition& part) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint64_t> cell_mask(part.size(), 0);
        for (std::size_t c = 0; c < part.size(); ++c)
            for (int v : part[c]) cell_mask[c] |= 1ull << v;
        for (std::size_t c = 0; c < part.size() && !changed; ++c) {
            if (part[c].size() <= 1) continue;
            std::vector<std::pair<std::vector<int>, int>> sig;
            sig.reserve(part[c].size());
            for (int v : part[c]) {
                std::vector<int> s;
                s.reserve(part.size());
                for (std::size_t d = 0; d < part.size(); ++d)
                    s.push_back(__builtin_popcountll(q.adj[static_cast<std::size_t>(v)] & cell_mask[d]));
                sig.emplace_back(std::move(s), v);
            }
            std::stable_sort(sig.begin(), sig.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            bool splits = false;
            for (std::size_t i = 1; i < sig.size(); ++i)
                if (sig[i].first != sig[0].first) { splits = true; break; }
            if (!splits) continue;
            Partition next;
            next.reserve(part.size() + 2);
            for (std::size_t d = 0; d < part.size(); ++d) {
                if (d != c) {
                    next.push_back(part[d]);
                    continue;
                }
                std::vector<int> group{sig[0].second};
                for (std::size_t i = 1; i < sig.size(); ++i) {
                    if (sig[i].first != sig[i - 1].first) {
                        next.push_back(std::move(group));
                        group.clear();
                    }
                    group.push_back(sig[i].second);
                }
                next.push_back(std::move(group));
            }
            part = std::move(next);
            changed = true;
        }
    }
}

struct CanonicalSearch {
    const Quotient& q;
    std::vector<std::uint8_t> best;
    bool have_best = false;
    long leaves = 0;

    explicit CanonicalSearch(const Quotient& quot) : q(quot) {}

    std::vector<std::uint8_t> leaf_bytes(const Partition& part) const {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(q.k));
        for (const auto& cell : part) order.push_back(cell[0]);
        std::vector<std::uint8_t> bytes;
        bytes.reserve(static_cast<std::size_t>(2 * q.k + q.k * q.k / 8 + 2));
        for (int v : order) {
            bytes.push_back(static_cast<std::uint8_t>(q.size[static_cast<std::size_t>(v)]));
            bytes.push_back(static_cast<std::uint8_t>(q.clique[static_cast<std::size_t>(v)]));
        }
        std::uint8_t acc = 0;
        int nbits = 0;
        for (int i = 0; i < q.k; ++i) {
            for (int j = i + 1; j < q.k; ++j) {
                int bit = (q.adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >>
                           order[static_cast<std::size_t>(j)]) &
                          1;
                acc = static_cast<std::uint8_t>((acc << 1) | bit);
                if (++nbits == 8) {
                    bytes.push_back(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if (nbits > 0) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
        return bytes;
    }

    void run(Partition part) {
        refine(q, part);
        std::size_t target = part.size();
        for (std::size_t c = 0; c < part.size(); ++c)
            if (part[c].size() > 1) { target = c; break; }
        if (target == part.size()) {
            if (++leaves > 2000000)
                throw internal_error("canonical labeling search exploded");
            auto bytes = leaf_bytes(part);
            if (!have_best || bytes < best) {
                best = std::move(bytes);
                have_best = true;
            }
            return;
        }
        std::vector<int> cell = part[target];
        std::sort(cell.begin(), cell.end());
        for (int u : cell) {
            Partition child;
            child.reserve(part.size() + 1);
            for (std::size_t d = 0; d < part.size(); ++d) {
                if (d != target) {
                    child.push_back(part[d]);
                    continue;
                }
                child.push_back({u});
                std::vector<int> rest;
                for (int w : cell)
                    if (w != u) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            run(std::move(child));
        }
    }
};

std::string hex_encode(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::string connected_canonical_key(const SimpleGraph& g) {
    Quotient q = collapse_twins(g);

    // Initial cells group classes by (size, clique flag), smallest first.
    std::vector<int> nodes(static_cast<std::size_t>(q.k));
    std::iota(nodes.begin(), nodes.end(), 0);
    std::stable_sort(nodes.begin(), nodes.end(), [&](int a, int b) {
        auto ka = std::pair(q.size[static_cast<std::size_t>(a)], q.clique[static_cast<std::size_t>(a)]);
        auto kb = std::pair(q.size[static_cast<std::size_t>(b)], q.clique[static_cast<std::size_t>(b)]);
        return ka < kb;
    });
    Partition part;
    for (int v : nodes) {
        bool fresh = part.empty();
        if (!fresh) {
            int prev = part.back()[0];
            fresh = q.size[static_cast<std::size_t>(prev)] != q.size[static_cast<std::size_t>(v)] ||
                    q.clique[static_cast<std::size_t>(prev)] != q.clique[static_cast<std::size_t>(v)];
        }
        if (fresh)
            part.push_back({v});
        else
            part.back().push_back(v);
    }

    CanonicalSearch search(q);
    search.run(std::move(part));
    return "n" + std::to_string(g.vertex_count()) + "k" + std::to_string(q.k) + ":" +
           hex_encode(search.best);
}

} // namespace

std::string canonical_key(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return "n0";
    auto comps = component_masks(g);
    if (comps.size() == 1) return connected_canonical_key(g);
    std::vector<std::string> keys;
    keys.reserve(comps.size());
    for (std::uint64_t mask : comps) keys.push_back(connected_canonical_key(g.induced_by_mask(mask)));
    std::sort(keys.begin(), keys.end());
    std::string out = "U";
    for (const auto& k : keys) {
        out += "(";
        out += k;
        out += ")";
    }
    return out;
}

} // namespace eil
