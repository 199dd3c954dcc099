#include "eil/betti.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "eil/errors.hpp"
#include "eil/hilbert.hpp"
#include "eil/invariants.hpp"
#include "eil/simplicial.hpp"

namespace eil {

long BettiTable::beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::projdim() const {
    int p = 0;
    for (const auto& [pos, val] : entries) p = std::max(p, pos.first);
    return p;
}

int BettiTable::regularity() const {
    int r = 0;
    for (const auto& [pos, val] : entries) r = std::max(r, pos.second - pos.first);
    return r;
}

std::vector<std::pair<int, int>> BettiTable::extremal_positions() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [pos, val] : entries) {
        bool dominated = false;
        for (const auto& [other, oval] : entries) {
            if (other == pos) continue;
            if (other.first >= pos.first &&
                other.second - other.first >= pos.second - pos.first) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(pos);
    }
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json BettiTable::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [pos, val] : entries)
        arr.push_back(nlohmann::json::array({pos.first, pos.second, val}));
    return nlohmann::json{{"field", field.name()}, {"entries", arr}};
}

std::string BettiTable::render_table() const {
    int p = projdim();
    int r = regularity();
    std::vector<long> totals(static_cast<std::size_t>(p) + 1, 0);
    for (const auto& [pos, val] : entries) totals[static_cast<std::size_t>(pos.first)] += val;

    auto cell = [](long v) { return v == 0 ? std::string(".") : std::to_string(v); };
    std::vector<std::size_t> width(static_cast<std::size_t>(p) + 1, 1);
    for (int i = 0; i <= p; ++i) {
        width[static_cast<std::size_t>(i)] =
            std::max(width[static_cast<std::size_t>(i)],
                     std::to_string(totals[static_cast<std::size_t>(i)]).size());
        for (int row = 0; row <= r; ++row)
            width[static_cast<std::size_t>(i)] =
                std::max(width[static_cast<std::size_t>(i)], cell(beta(i, i + row)).size());
    }

    std::ostringstream os;
    os << "       ";
    for (int i = 0; i <= p; ++i) {
        os.width(static_cast<std::streamsize>(width[static_cast<std::size_t>(i)]) + 1);
        os << i;
    }
    os << "\ntotal: ";
    for (int i = 0; i <= p; ++i) {
        os.width(static_cast<std::streamsize>(width[static_cast<std::size_t>(i)]) + 1);
        os << totals[static_cast<std::size_t>(i)];
    }
    os << "\n";
    for (int row = 0; row <= r; ++row) {
        os.width(6);
        os << row;
        os << ": ";
        for (int i = 0; i <= p; ++i) {
            os.width(static_cast<std::streamsize>(width[static_cast<std::size_t>(i)]) + 1);
            os << cell(beta(i, i + row));
        }
        os << "\n";
    }
    return os.str();
}

int default_betti_cutoff() {
    if (const char* env = std::getenv("EIL_CUTOFF")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 30) return static_cast<int>(v);
    }
    return 18;
}

namespace {

// Process-wide memo: canonical key (per field) -> reduced homology vector of
// the independence complex of a connected graph.
class HomologyMemo {
public:
    bool lookup(const std::string& key, std::vector<long>& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it == cache_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const std::string& key, const std::vector<long>& value) {
        std::lock_guard<std::mutex> lock(mu_);
        cache_.emplace(key, value);
    }

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, std::vector<long>> cache_;
};

HomologyMemo& global_homology_memo() {
    static HomologyMemo memo;
    return memo;
}

bool all_zero(const std::vector<long>& v) {
    for (long x : v)
        if (x != 0) return false;
    return true;
}

// H~(X * Y) convolution in the shifted index (r = homological degree + 1).
std::vector<long> join_convolve(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<long> component_homology(const SimpleGraph& g, std::uint64_t comp_mask,
                                     const FieldSpec& field,
                                     std::unordered_map<std::uint64_t, std::vector<long>>& local) {
    auto it = local.find(comp_mask);
    if (it != local.end()) return it->second;

    // Relabel the component onto 0..k-1.
    int k = 0;
    std::array<int, 64> place{};
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((comp_mask >> v) & 1u) place[static_cast<std::size_t>(v)] = k++;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!((comp_mask >> v) & 1u)) continue;
        std::uint64_t m = g.neighbors_mask(v) & comp_mask;
        while (m) {
            int u = __builtin_ctzll(m);
            m &= m - 1;
            adj[static_cast<std::size_t>(place[static_cast<std::size_t>(v)])] |=
                1ull << place[static_cast<std::size_t>(u)];
        }
    }

    std::string key = field.name() + "|" + canonical_key(g.induced_by_mask(comp_mask));
    std::vector<long> hom;
    if (!global_homology_memo().lookup(key, hom)) {
        hom = detail::independence_homology(adj, k, field);
        global_homology_memo().store(key, hom);
    }
    local.emplace(comp_mask, hom);
    return hom;
}

} // namespace

BettiTable betti_table(const SimpleGraph& g, const FieldSpec& field, int cutoff) {
    if (!field.is_rationals() && !is_prime(field.p))
        throw std::invalid_argument("invalid field specification");
    int n = g.vertex_count();
    if (n > cutoff || n > 32)
        throw cutoff_error("graph has " + std::to_string(n) +
                           " vertices, above the Betti cutoff " + std::to_string(std::min(cutoff, 32)) +
                           "; raise the cutoff explicitly to proceed");

    BettiTable table;
    table.field = field;
    table.n_vars = n;

    std::unordered_map<std::uint64_t, std::vector<long>> local;
    std::uint64_t limit = 1ull << n;
    for (std::uint64_t w = 0; w < limit; ++w) {
        int j = __builtin_popcountll(w);
        std::vector<long> conv{1};
        bool dead = false;
        for (std::uint64_t comp : component_masks_within(g, w)) {
            if (__builtin_popcountll(comp) == 1) { dead = true; break; } // cone
            std::vector<long> hom = component_homology(g, comp, field, local);
            if (all_zero(hom)) { dead = true; break; }
            conv = join_convolve(conv, hom);
        }
        if (!dead) {
            for (std::size_t r = 0; r < conv.size(); ++r)
                if (conv[r] != 0) table.entries[{j - static_cast<int>(r), j}] += conv[r];
        }
    }
    return table;
}

BettiTable betti_table(const SimpleGraph& g, const FieldSpec& field) {
    return betti_table(g, field, default_betti_cutoff());
}

IntPolynomial betti_alternating_sum(const BettiTable& t) {
    IntPolynomial sum = IntPolynomial::zero();
    for (const auto& [pos, val] : t.entries) {
        IntPolynomial term = IntPolynomial::monomial(val, pos.second);
        sum = (pos.first % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

HomologicalReport homological_report(const SimpleGraph& g, const FieldSpec& field, int cutoff) {
    HomologicalReport rep;
    rep.table = betti_table(g, field, cutoff);
    rep.n = g.vertex_count();
    rep.projdim = rep.table.projdim();
    rep.depth = rep.n - rep.projdim;
    rep.reg = rep.table.regularity();
    rep.dim = independence_number(g).value;
    IntPolynomial h = h_polynomial(g);
    rep.deg_h = *h.degree();
    rep.a_invariant = rep.deg_h - rep.dim;

    bool by_degrees = (rep.deg_h - rep.reg) == (rep.dim - rep.depth);
    bool by_corner = rep.table.beta(rep.projdim, rep.projdim + rep.reg) != 0;
    if (by_degrees != by_corner)
        throw internal_error("extremal-equality checks disagree between degree arithmetic "
                             "and the Betti corner");
    rep.star_equality = by_degrees;
    rep.extremal = rep.table.extremal_positions();
    return rep;
}

HomologicalReport homological_report(const SimpleGraph& g, const FieldSpec& field) {
    return homological_report(g, field, default_betti_cutoff());
}

nlohmann::json HomologicalReport::to_json() const {
    nlohmann::json extremal_json = nlohmann::json::array();
    for (auto [i, j] : extremal) extremal_json.push_back(nlohmann::json::array({i, j}));
    return nlohmann::json{{"n", n},
                          {"projdim", projdim},
                          {"depth", depth},
                          {"reg", reg},
                          {"dim", dim},
                          {"deg_h", deg_h},
                          {"a_invariant", a_invariant},
                          {"star_equality", star_equality},
                          {"extremal", extremal_json},
                          {"betti", table.to_json()}};
}

nlohmann::json StarPackingWitness::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : stars) {
        nlohmann::json leaves = nlohmann::json::array();
        for (const auto& x : s.leaves) leaves.push_back(x);
        arr.push_back(nlohmann::json{{"center", s.center},
                                     {"leaves", leaves},
                                     {"edge", nlohmann::json::array({s.edge.first, s.edge.second})}});
    }
    return nlohmann::json{{"stars", arr}};
}

namespace {

constexpr std::uint64_t bit(int v) { return 1ull << v; }

struct MatchingEnumerator {
    const std::vector<std::pair<int, int>>& edges;
    const std::vector<std::uint64_t>& conflict;
    int target;
    std::vector<int> current;
    std::function<bool(const std::vector<int>&)> visit; // returns true to stop

    bool rec(int from, std::uint64_t banned) {
        if (static_cast<int>(current.size()) == target) return visit(current);
        for (int e = from; e < static_cast<int>(edges.size()); ++e) {
            if ((banned >> e) & 1u) continue;
            current.push_back(e);
            if (rec(e + 1, banned | conflict[static_cast<std::size_t>(e)] | bit(e))) return true;
            current.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<StarPackingWitness> betti_nonvanishing_witness(const SimpleGraph& g, int i, int ell) {
    if (ell < 1 || i < ell) return std::nullopt;
    auto edges = g.edges();
    int ne = static_cast<int>(edges.size());
    if (ne == 0 || ne > 64) {
        if (ne == 0) return std::nullopt;
        throw std::invalid_argument("too many edges for the witness search");
    }

    // Conflict = edges that intersect or are bridged by an edge; induced
    // matchings are exactly the independent sets of this relation.
    std::vector<std::uint64_t> conflict(static_cast<std::size_t>(ne), 0);
    for (int e = 0; e < ne; ++e) {
        auto [a, b] = edges[static_cast<std::size_t>(e)];
        std::uint64_t closed = bit(a) | bit(b) | g.neighbors_mask(a) | g.neighbors_mask(b);
        for (int f = e + 1; f < ne; ++f) {
            auto [c, d] = edges[static_cast<std::size_t>(f)];
            if (closed & (bit(c) | bit(d))) {
                conflict[static_cast<std::size_t>(e)] |= bit(f);
                conflict[static_cast<std::size_t>(f)] |= bit(e);
            }
        }
    }

    std::optional<StarPackingWitness> found;
    MatchingEnumerator enumerator{edges, conflict, ell, {}, {}};
    enumerator.visit = [&](const std::vector<int>& matching) {
        std::uint64_t matched = 0;
        for (int e : matching) {
            auto [a, b] = edges[static_cast<std::size_t>(e)];
            matched |= bit(a) | bit(b);
        }
        int extras_needed = i - ell;
        for (std::uint64_t assign = 0; assign < (1ull << ell); ++assign) {
            std::vector<int> centers(static_cast<std::size_t>(ell));
            std::uint64_t pool_union = 0;
            std::vector<std::uint64_t> pools(static_cast<std::size_t>(ell));
            for (int k = 0; k < ell; ++k) {
                auto [a, b] = edges[static_cast<std::size_t>(matching[static_cast<std::size_t>(k)])];
                int c = ((assign >> k) & 1u) ? b : a;
                centers[static_cast<std::size_t>(k)] = c;
                pools[static_cast<std::size_t>(k)] = g.neighbors_mask(c) & ~matched;
                pool_union |= pools[static_cast<std::size_t>(k)];
            }
            if (__builtin_popcountll(pool_union) < extras_needed) continue;

            // Assign the smallest extras_needed pool vertices, each to the
            // first star whose center sees it.
            StarPackingWitness w;
            w.stars.resize(static_cast<std::size_t>(ell));
            for (int k = 0; k < ell; ++k) {
                auto [a, b] = edges[static_cast<std::size_t>(matching[static_cast<std::size_t>(k)])];
                int c = centers[static_cast<std::size_t>(k)];
                int partner = c == a ? b : a;
                w.stars[static_cast<std::size_t>(k)].center = g.label(c);
                w.stars[static_cast<std::size_t>(k)].leaves.push_back(g.label(partner));
                w.stars[static_cast<std::size_t>(k)].edge = {g.label(a), g.label(b)};
            }
            int taken = 0;
            for (int v = 0; v < g.vertex_count() && taken < extras_needed; ++v) {
                if (!((pool_union >> v) & 1u)) continue;
                for (int k = 0; k < ell; ++k) {
                    if ((pools[static_cast<std::size_t>(k)] >> v) & 1u) {
                        w.stars[static_cast<std::size_t>(k)].leaves.push_back(g.label(v));
                        break;
                    }
                }
                ++taken;
            }
            if (taken != extras_needed) throw internal_error("witness assignment failed");
            found = std::move(w);
            return true;
        }
        return false;
    };
    enumerator.rec(0, 0);

    if (found) {
        // Re-validate the certificate.
        int total_edges = 0;
        std::uint64_t used = 0;
        for (const auto& s : found->stars) {
            int c = g.index_of(s.center);
            std::uint64_t star_verts = bit(c);
            for (const auto& leaf : s.leaves) {
                int x = g.index_of(leaf);
                if (!g.adjacent(c, x)) throw internal_error("witness star edge missing");
                star_verts |= bit(x);
            }
            if (used & star_verts) throw internal_error("witness stars overlap");
            used |= star_verts;
            total_edges += static_cast<int>(s.leaves.size());
        }
        if (total_edges != i) throw internal_error("witness has wrong edge count");
    }
    return found;
}

} // namespace eil
