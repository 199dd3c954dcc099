#include "eil/invariants.hpp"

#include <algorithm>
#include <unordered_map>

#include "eil/errors.hpp"

namespace eil {

namespace {

constexpr std::uint64_t bit(int v) { return 1ull << v; }

// --- maximum independent set over adjacency masks ---------------------------

struct MisSolver {
    const std::vector<std::uint64_t>& adj;
    int best = 0;

    explicit MisSolver(const std::vector<std::uint64_t>& a) : adj(a) {}

    int pick(std::uint64_t cand) const {
        int v = -1, d = -1;
        std::uint64_t m = cand;
        while (m) {
            int u = __builtin_ctzll(m);
            m &= m - 1;
            int du = __builtin_popcountll(adj[static_cast<std::size_t>(u)] & cand);
            if (du > d) { d = du; v = u; }
        }
        return v;
    }

    void search(std::uint64_t cand, int size) {
        if (size + __builtin_popcountll(cand) <= best) return;
        if (!cand) { best = std::max(best, size); return; }
        int v = pick(cand);
        std::uint64_t nv = adj[static_cast<std::size_t>(v)] & cand;
        search(cand & ~(nv | bit(v)), size + 1);
        // Excluding v only helps when v has a neighbor left.
        if (nv) search(cand & ~bit(v), size);
    }
};

int max_independent(const std::vector<std::uint64_t>& adj, std::uint64_t cand) {
    MisSolver s(adj);
    s.search(cand, 0);
    return s.best;
}

// Lexicographically least maximum independent subset of `allowed`.
std::uint64_t lex_min_mis(const std::vector<std::uint64_t>& adj, std::uint64_t allowed, int value) {
    std::uint64_t chosen = 0;
    int have = 0;
    int n = static_cast<int>(adj.size());
    for (int v = 0; v < n && have < value; ++v) {
        if (!((allowed >> v) & 1u)) continue;
        std::uint64_t rest = allowed & ~(adj[static_cast<std::size_t>(v)] | bit(v));
        rest &= ~((bit(v) << 1) - 1); // only vertices above v remain eligible
        if (have + 1 + max_independent(adj, rest) >= value) {
            chosen |= bit(v);
            ++have;
            allowed = rest;
        } else {
            allowed &= ~bit(v);
        }
    }
    if (have != value) throw internal_error("lex-min independent set reconstruction failed");
    return chosen;
}

// Plain recursive maximum independent set for graphs too large for masks
// (only the induced-matching conflict graph can get there).
int mis_generic(const std::vector<std::vector<bool>>& adj, const std::vector<int>& cand) {
    if (cand.empty()) return 0;
    int v = cand.back();
    std::vector<int> without(cand.begin(), cand.end() - 1);
    std::vector<int> incl;
    incl.reserve(without.size());
    for (int u : without)
        if (!adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) incl.push_back(u);
    int with_v = 1 + mis_generic(adj, incl);
    if (incl.size() == without.size()) return with_v; // v isolated among candidates
    return std::max(with_v, mis_generic(adj, without));
}

// --- maximum matching --------------------------------------------------------

struct MatchingSolver {
    const std::vector<std::uint64_t>& adj;
    std::unordered_map<std::uint64_t, int> memo;

    explicit MatchingSolver(const std::vector<std::uint64_t>& a) : adj(a) {}

    int solve(std::uint64_t mask) {
        while (mask) {
            int v = __builtin_ctzll(mask);
            if (adj[static_cast<std::size_t>(v)] & mask) break;
            mask &= ~bit(v); // isolated within mask: cannot be matched
        }
        if (!mask) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int v = __builtin_ctzll(mask);
        int best = solve(mask & ~bit(v)); // leave v unmatched
        std::uint64_t nbrs = adj[static_cast<std::size_t>(v)] & mask;
        while (nbrs) {
            int u = __builtin_ctzll(nbrs);
            nbrs &= nbrs - 1;
            best = std::max(best, 1 + solve(mask & ~bit(v) & ~bit(u)));
        }
        memo.emplace(mask, best);
        return best;
    }
};

} // namespace

WitnessedVertexSet independence_number(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors_mask(v);
    int value = max_independent(adj, g.full_mask());
    std::uint64_t w = value == 0 ? 0 : lex_min_mis(adj, g.full_mask(), value);

    WitnessedVertexSet out;
    out.value = value;
    for (int v = 0; v < n; ++v)
        if ((w >> v) & 1u) out.witness.push_back(g.label(v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (((w >> u) & 1u) && ((w >> v) & 1u) && g.adjacent(u, v))
                throw internal_error("independence witness is not independent");
    return out;
}

WitnessedEdgeSet matching_number(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors_mask(v);
    MatchingSolver solver(adj);
    int value = solver.solve(g.full_mask());

    // Lexicographically least witness over the sorted edge list.  Rejected
    // edges must never reappear, so feasibility is tested against matchings
    // that use only later edges.
    auto edges = g.edges();
    std::vector<std::pair<int, int>> witness;
    std::uint64_t avail = g.full_mask();
    int have = 0;
    for (std::size_t e = 0; e < edges.size() && have < value; ++e) {
        auto [a, b] = edges[e];
        if (!((avail >> a) & 1u) || !((avail >> b) & 1u)) continue;
        std::vector<std::uint64_t> later(static_cast<std::size_t>(n), 0);
        for (std::size_t f = e + 1; f < edges.size(); ++f) {
            later[static_cast<std::size_t>(edges[f].first)] |= bit(edges[f].second);
            later[static_cast<std::size_t>(edges[f].second)] |= bit(edges[f].first);
        }
        MatchingSolver rest(later);
        if (have + 1 + rest.solve(avail & ~bit(a) & ~bit(b)) >= value) {
            witness.emplace_back(a, b);
            ++have;
            avail &= ~bit(a) & ~bit(b);
        }
    }
    if (have != value) throw internal_error("matching witness reconstruction failed");

    std::uint64_t used = 0;
    for (auto [a, b] : witness) {
        if ((used & bit(a)) || (used & bit(b)) || !g.adjacent(a, b))
            throw internal_error("matching witness invalid");
        used |= bit(a) | bit(b);
    }

    WitnessedEdgeSet out;
    out.value = value;
    for (auto [a, b] : witness) out.witness.emplace_back(g.label(a), g.label(b));
    return out;
}

WitnessedEdgeSet induced_matching_number(const SimpleGraph& g) {
    auto edges = g.edges();
    int ne = static_cast<int>(edges.size());

    // Two edges conflict when they intersect or some edge of G bridges them.
    auto closed_pair_mask = [&](int e) {
        auto [a, b] = edges[static_cast<std::size_t>(e)];
        return bit(a) | bit(b) | g.neighbors_mask(a) | g.neighbors_mask(b);
    };
    auto endpoint_mask = [&](int e) {
        auto [a, b] = edges[static_cast<std::size_t>(e)];
        return bit(a) | bit(b);
    };

    int value = 0;
    std::vector<int> witness_ids;
    if (ne > 0 && ne <= 64) {
        std::vector<std::uint64_t> conflict(static_cast<std::size_t>(ne), 0);
        for (int e = 0; e < ne; ++e)
            for (int f = e + 1; f < ne; ++f)
                if (closed_pair_mask(e) & endpoint_mask(f)) {
                    conflict[static_cast<std::size_t>(e)] |= bit(f);
                    conflict[static_cast<std::size_t>(f)] |= bit(e);
                }
        std::uint64_t full = ne == 64 ? ~0ull : (1ull << ne) - 1;
        value = max_independent(conflict, full);
        std::uint64_t w = value == 0 ? 0 : lex_min_mis(conflict, full, value);
        for (int e = 0; e < ne; ++e)
            if ((w >> e) & 1u) witness_ids.push_back(e);
    } else if (ne > 64) {
        // Rare: very dense inputs.  Exact but without bitmask acceleration,
        // and without the lex-min refinement pass.
        std::vector<std::vector<bool>> conflict(
            static_cast<std::size_t>(ne), std::vector<bool>(static_cast<std::size_t>(ne), false));
        for (int e = 0; e < ne; ++e)
            for (int f = e + 1; f < ne; ++f)
                if (closed_pair_mask(e) & endpoint_mask(f)) {
                    conflict[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] = true;
                    conflict[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)] = true;
                }
        std::vector<int> cand(static_cast<std::size_t>(ne));
        for (int e = 0; e < ne; ++e) cand[static_cast<std::size_t>(e)] = e;
        value = mis_generic(conflict, cand);
        // Greedy lex-min witness via feasibility checks.
        std::vector<int> chosen;
        std::vector<bool> banned(static_cast<std::size_t>(ne), false);
        for (int e = 0; e < ne && static_cast<int>(chosen.size()) < value; ++e) {
            if (banned[static_cast<std::size_t>(e)]) continue;
            std::vector<int> rest;
            for (int f = e + 1; f < ne; ++f)
                if (!banned[static_cast<std::size_t>(f)] &&
                    !conflict[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)])
                    rest.push_back(f);
            if (static_cast<int>(chosen.size()) + 1 + mis_generic(conflict, rest) >= value)
                chosen.push_back(e);
            else
                banned[static_cast<std::size_t>(e)] = true;
        }
        witness_ids = chosen;
    }

    // Re-validate: pairwise disjoint and unbridged.
    for (std::size_t x = 0; x < witness_ids.size(); ++x)
        for (std::size_t y = x + 1; y < witness_ids.size(); ++y)
            if (closed_pair_mask(witness_ids[x]) & endpoint_mask(witness_ids[y]))
                throw internal_error("induced matching witness invalid");
    if (static_cast<int>(witness_ids.size()) != value)
        throw internal_error("induced matching witness has wrong size");

    WitnessedEdgeSet out;
    out.value = value;
    for (int e : witness_ids) {
        auto [a, b] = edges[static_cast<std::size_t>(e)];
        out.witness.emplace_back(g.label(a), g.label(b));
    }
    return out;
}

namespace {

// Branch and bound for the minimum independent dominating set, with optional
// forced / forbidden vertices so the lex-min witness pass can reuse it.
struct IdomSolver {
    const std::vector<std::uint64_t>& closed; // N[v]
    std::uint64_t full;
    int limit; // only solutions strictly below are recorded
    int best;
    int max_closed;

    IdomSolver(const std::vector<std::uint64_t>& cl, std::uint64_t full_mask, int lim)
        : closed(cl), full(full_mask), limit(lim), best(lim) {
        max_closed = 1;
        for (std::uint64_t m : closed) max_closed = std::max(max_closed, __builtin_popcountll(m));
    }

    void search(std::uint64_t in_set, std::uint64_t banned, std::uint64_t dominated, int size) {
        if (dominated == full) { best = std::min(best, size); return; }
        std::uint64_t undom = full & ~dominated;
        int lb = (__builtin_popcountll(undom) + max_closed - 1) / max_closed;
        if (size + lb >= best) return;
        int v = __builtin_ctzll(undom);
        std::uint64_t cands = closed[static_cast<std::size_t>(v)] & ~banned;
        while (cands) {
            int u = __builtin_ctzll(cands);
            cands &= cands - 1;
            search(in_set | bit(u), banned | closed[static_cast<std::size_t>(u)],
                   dominated | closed[static_cast<std::size_t>(u)], size + 1);
        }
    }

    int solve(std::uint64_t forced_in, std::uint64_t forbidden) {
        best = limit;
        std::uint64_t banned = forbidden;
        std::uint64_t dominated = 0;
        std::uint64_t m = forced_in;
        while (m) {
            int u = __builtin_ctzll(m);
            m &= m - 1;
            // adjacent or forbidden forced vertices make the instance infeasible
            if ((closed[static_cast<std::size_t>(u)] & ~(1ull << u)) & forced_in) return limit;
            if ((forbidden >> u) & 1u) return limit;
            banned |= closed[static_cast<std::size_t>(u)];
            dominated |= closed[static_cast<std::size_t>(u)];
        }
        search(forced_in, banned, dominated, __builtin_popcountll(forced_in));
        return best;
    }
};

} // namespace

WitnessedVertexSet independence_domination(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        closed[static_cast<std::size_t>(v)] = g.neighbors_mask(v) | bit(v);

    IdomSolver solver(closed, g.full_mask(), n + 1);
    int value = solver.solve(0, 0);

    // Lex-min witness: force vertices in ascending order when a solution of
    // the optimal size still exists with everything below them excluded.
    std::uint64_t forced = 0, forbidden = 0;
    int have = 0;
    for (int v = 0; v < n && have < value; ++v) {
        if ((forbidden >> v) & 1u) continue;
        IdomSolver probe(closed, g.full_mask(), value + 1);
        if (probe.solve(forced | bit(v), forbidden) == value) {
            forced |= bit(v);
            ++have;
        } else {
            forbidden |= bit(v);
        }
    }
    if (have != value) throw internal_error("independence domination witness failed");

    // Re-validate independence and domination.
    std::uint64_t covered = 0;
    for (int v = 0; v < n; ++v)
        if ((forced >> v) & 1u) covered |= closed[static_cast<std::size_t>(v)];
    if (covered != g.full_mask())
        throw internal_error("independence domination witness does not dominate");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (((forced >> u) & 1u) && ((forced >> v) & 1u) && g.adjacent(u, v))
                throw internal_error("independence domination witness not independent");

    WitnessedVertexSet out;
    out.value = value;
    for (int v = 0; v < n; ++v)
        if ((forced >> v) & 1u) out.witness.push_back(g.label(v));
    return out;
}

} // namespace eil
