#include "eil/simplicial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "eil/errors.hpp"
#include "eil/linalg.hpp"

namespace eil {

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 std::vector<std::vector<int>> facets) {
    SimplicialComplex c;
    c.vertices = std::move(vertices);
    int n = static_cast<int>(c.vertices.size());
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= n) throw std::invalid_argument("facet vertex out of range");
    }
    // Drop faces contained in another.
    std::sort(facets.begin(), facets.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& f : facets) {
        bool contained = false;
        for (const auto& g : c.facets) {
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) c.facets.push_back(f);
    }
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

SimplicialComplex independence_complex(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("graph too large");

    // All independent sets, then keep the maximal ones.
    std::vector<std::uint64_t> sets;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors_mask(v);

    std::vector<std::pair<int, std::uint64_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [start, chosen] = stack.back();
        stack.pop_back();
        sets.push_back(chosen);
        for (int v = start; v < n; ++v)
            if (!((chosen >> v) & 1u) && !(adj[static_cast<std::size_t>(v)] & chosen))
                stack.push_back({v + 1, chosen | (1ull << v)});
    }

    std::vector<std::vector<int>> facets;
    for (std::uint64_t s : sets) {
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!((s >> v) & 1u) && !(adj[static_cast<std::size_t>(v)] & s)) maximal = false;
        if (!maximal) continue;
        std::vector<int> f;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1u) f.push_back(v);
        facets.push_back(std::move(f));
    }
    // A graph with no vertices has the single facet ∅, represented by the
    // empty facet list.
    if (n == 0) facets.clear();
    return SimplicialComplex::from_facets(g.vertex_labels(), std::move(facets));
}

namespace detail {

std::vector<long> homology_from_faces(const std::vector<std::vector<std::uint64_t>>& faces_by_card,
                                      const FieldSpec& field) {
    int maxc = static_cast<int>(faces_by_card.size()) - 1;
    // ranks[c] = rank of the boundary map from c-element faces to (c-1)-element faces
    std::vector<long> ranks(static_cast<std::size_t>(maxc) + 2, 0);
    for (int c = 1; c <= maxc; ++c) {
        const auto& rows_faces = faces_by_card[static_cast<std::size_t>(c - 1)];
        const auto& cols_faces = faces_by_card[static_cast<std::size_t>(c)];
        if (cols_faces.empty()) continue;
        std::unordered_map<std::uint64_t, int> row_index;
        row_index.reserve(rows_faces.size() * 2);
        for (std::size_t i = 0; i < rows_faces.size(); ++i)
            row_index.emplace(rows_faces[i], static_cast<int>(i));

        SparseIntMatrix m;
        m.rows = static_cast<int>(rows_faces.size());
        m.cols.reserve(cols_faces.size());
        for (std::uint64_t face : cols_faces) {
            std::vector<std::pair<int, long long>> col;
            col.reserve(static_cast<std::size_t>(c));
            std::uint64_t rest = face;
            int sign = 1;
            while (rest) {
                std::uint64_t low = rest & (~rest + 1);
                auto it = row_index.find(face & ~low);
                if (it == row_index.end()) throw internal_error("complex is not closed under faces");
                col.emplace_back(it->second, sign);
                sign = -sign;
                rest &= rest - 1;
            }
            std::sort(col.begin(), col.end());
            m.cols.push_back(std::move(col));
        }
        ranks[static_cast<std::size_t>(c)] = rank_over_field(m, field);
    }

    std::vector<long> hom(static_cast<std::size_t>(maxc) + 1, 0);
    for (int c = 0; c <= maxc; ++c)
        hom[static_cast<std::size_t>(c)] =
            static_cast<long>(faces_by_card[static_cast<std::size_t>(c)].size()) -
            ranks[static_cast<std::size_t>(c)] - ranks[static_cast<std::size_t>(c) + 1];
    return hom;
}

std::vector<long> independence_homology(const std::vector<std::uint64_t>& adj, int n,
                                        const FieldSpec& field) {
    std::vector<std::vector<std::uint64_t>> faces_by_card(1, {0ull});
    std::vector<std::pair<int, std::uint64_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [start, chosen] = stack.back();
        stack.pop_back();
        int card = __builtin_popcountll(chosen);
        if (card > 0) {
            if (static_cast<std::size_t>(card) >= faces_by_card.size())
                faces_by_card.resize(static_cast<std::size_t>(card) + 1);
            faces_by_card[static_cast<std::size_t>(card)].push_back(chosen);
        }
        for (int v = start; v < n; ++v)
            if (!(adj[static_cast<std::size_t>(v)] & chosen))
                stack.push_back({v + 1, chosen | (1ull << v)});
    }
    for (auto& level : faces_by_card) std::sort(level.begin(), level.end());
    return homology_from_faces(faces_by_card, field);
}

} // namespace detail

std::vector<long> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field) {
    if (!field.is_rationals() && !is_prime(field.p))
        throw std::invalid_argument("invalid field specification");
    if (c.is_void) return {};

    // Downward closure of the facets, grouped by cardinality.
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> queue;
    for (const auto& f : c.facets) {
        std::uint64_t mask = 0;
        for (int v : f) mask |= 1ull << v;
        if (seen.insert(mask).second) queue.push_back(mask);
    }
    if (seen.insert(0).second) queue.push_back(0);
    while (!queue.empty()) {
        std::uint64_t face = queue.back();
        queue.pop_back();
        std::uint64_t rest = face;
        while (rest) {
            std::uint64_t low = rest & (~rest + 1);
            rest &= rest - 1;
            std::uint64_t sub = face & ~low;
            if (seen.insert(sub).second) queue.push_back(sub);
        }
    }
    std::vector<std::vector<std::uint64_t>> faces_by_card;
    for (std::uint64_t mask : seen) {
        int card = __builtin_popcountll(mask);
        if (static_cast<std::size_t>(card) >= faces_by_card.size())
            faces_by_card.resize(static_cast<std::size_t>(card) + 1);
        faces_by_card[static_cast<std::size_t>(card)].push_back(mask);
    }
    for (auto& level : faces_by_card) std::sort(level.begin(), level.end());
    return detail::homology_from_faces(faces_by_card, field);
}

} // namespace eil
