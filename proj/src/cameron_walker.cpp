#include "eil/cameron_walker.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eil/errors.hpp"
#include "eil/invariants.hpp"

namespace eil {

int CWStructure::sum_s() const { return std::accumulate(s.begin(), s.end(), 0); }
int CWStructure::sum_t() const { return std::accumulate(t.begin(), t.end(), 0); }
int CWStructure::total_vertices() const { return m + n + sum_s() + 2 * sum_t(); }

bool CWStructure::bip_complete() const {
    return static_cast<int>(bip.size()) == m * n;
}

CWStructure CWStructure::checked() const {
    CWStructure c = *this;
    if (c.m < 1 || c.n < 1) throw std::invalid_argument("m and n must be at least 1");
    if (static_cast<int>(c.s.size()) != c.m) throw std::invalid_argument("s must have m entries");
    if (static_cast<int>(c.t.size()) != c.n) throw std::invalid_argument("t must have n entries");
    for (int si : c.s)
        if (si < 1) throw std::invalid_argument("every v needs at least one leaf (s_i >= 1)");
    for (int tj : c.t)
        if (tj < 0) throw std::invalid_argument("t_j must be nonnegative");
    std::sort(c.bip.begin(), c.bip.end());
    c.bip.erase(std::unique(c.bip.begin(), c.bip.end()), c.bip.end());
    for (auto [i, j] : c.bip)
        if (i < 1 || i > c.m || j < 1 || j > c.n)
            throw std::invalid_argument("bipartite edge index out of range");

    // The core must be connected and cover every v and w.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(c.m + c.n));
    for (auto [i, j] : c.bip) {
        adj[static_cast<std::size_t>(i - 1)].push_back(c.m + j - 1);
        adj[static_cast<std::size_t>(c.m + j - 1)].push_back(i - 1);
    }
    std::vector<bool> seen(static_cast<std::size_t>(c.m + c.n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                stack.push_back(v);
            }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::invalid_argument("bipartite core must be connected");
    return c;
}

nlohmann::json CWStructure::to_json() const {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : bip) edges.push_back(nlohmann::json::array({i, j}));
    return nlohmann::json{{"m", m}, {"n", n}, {"s", s}, {"t", t}, {"bip", edges}};
}

CWStructure CWStructure::from_json(const nlohmann::json& j) {
    CWStructure c;
    try {
        c.m = j.at("m").get<int>();
        c.n = j.at("n").get<int>();
        c.s = j.at("s").get<std::vector<int>>();
        c.t = j.at("t").get<std::vector<int>>();
        for (const auto& e : j.at("bip")) {
            if (!e.is_array() || e.size() != 2) throw parse_error(0, "bip entries must be pairs");
            c.bip.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(0, std::string("bad CW structure JSON: ") + e.what());
    }
    return c.checked();
}

SimpleGraph build_cw(const CWStructure& raw) {
    CWStructure spec = raw.checked();
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;

    auto vname = [](int i) { return "v" + std::to_string(i); };
    auto wname = [](int j) { return "w" + std::to_string(j); };

    for (int i = 1; i <= spec.m; ++i)
        for (int k = 1; k <= spec.s[static_cast<std::size_t>(i - 1)]; ++k) {
            std::string x = "x" + std::to_string(i) + "_" + std::to_string(k);
            vertices.push_back(x);
            edges.emplace_back(vname(i), x);
        }
    for (int i = 1; i <= spec.m; ++i) vertices.push_back(vname(i));
    for (int j = 1; j <= spec.n; ++j) vertices.push_back(wname(j));
    for (int j = 1; j <= spec.n; ++j)
        for (int l = 1; l <= spec.t[static_cast<std::size_t>(j - 1)]; ++l) {
            std::string y1 = "y" + std::to_string(j) + "_" + std::to_string(l) + "_1";
            std::string y2 = "y" + std::to_string(j) + "_" + std::to_string(l) + "_2";
            vertices.push_back(y1);
            vertices.push_back(y2);
            edges.emplace_back(wname(j), y1);
            edges.emplace_back(wname(j), y2);
            edges.emplace_back(y1, y2);
        }
    for (auto [i, j] : spec.bip) edges.emplace_back(vname(i), wname(j));

    return SimpleGraph(std::move(vertices), edges);
}

namespace {

bool is_star_graph(const SimpleGraph& g, int& center) {
    int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1) return false;
    for (int c = 0; c < n; ++c) {
        if (g.degree(c) != n - 1) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (v != c && g.degree(v) != 1) ok = false;
        if (ok) {
            center = c;
            return true;
        }
    }
    return false;
}

bool is_star_triangle(const SimpleGraph& g, int& center) {
    int n = g.vertex_count();
    if (n < 3 || n % 2 == 0) return false;
    int t = (n - 1) / 2;
    if (g.edge_count() != 3 * t) return false;
    for (int c = 0; c < n; ++c) {
        if (g.degree(c) != 2 * t) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (v == c) continue;
            if (g.degree(v) != 2) { ok = false; break; }
            // the second neighbor must form a triangle through c
            std::uint64_t others = g.neighbors_mask(v) & ~(1ull << c);
            if (__builtin_popcountll(others) != 1) { ok = false; break; }
            int u = __builtin_ctzll(others);
            if (!g.adjacent(u, c)) ok = false;
        }
        if (ok) {
            center = c;
            return true;
        }
    }
    return false;
}

} // namespace

nlohmann::json CWRecognition::to_json() const {
    nlohmann::json j;
    switch (kind) {
        case CWClass::not_cw: j["kind"] = "not_cw"; break;
        case CWClass::star:
            j["kind"] = "star";
            j["s"] = star_edges;
            break;
        case CWClass::star_triangle:
            j["kind"] = "star_triangle";
            j["t"] = triangles;
            break;
        case CWClass::cameron_walker: j["kind"] = "cameron_walker"; break;
    }
    if (structure) j["structure"] = structure->to_json();
    return j;
}

CWRecognition recognize_cw(const SimpleGraph& g, bool include_star_as_cw) {
    CWRecognition rec;
    int n = g.vertex_count();
    if (n == 0 || g.edge_count() == 0 || !is_connected(g)) return rec;
    if (matching_number(g).value != induced_matching_number(g).value) return rec;

    int center = -1;
    if (is_star_graph(g, center)) {
        rec.kind = CWClass::star;
        rec.star_edges = n - 1;
        if (include_star_as_cw && n >= 3) {
            CWStructure spec;
            spec.m = 1;
            spec.n = 1;
            spec.s = {n - 2};
            spec.t = {0};
            spec.bip = {{1, 1}};
            rec.structure = spec;
        }
        return rec;
    }
    if (is_star_triangle(g, center)) {
        rec.kind = CWClass::star_triangle;
        rec.triangles = (n - 1) / 2;
        return rec;
    }

    // Decompose: degree-1 vertices are leaves; degree-2 adjacent pairs with a
    // common neighbor are pendant-triangle vertices; the rest form the core,
    // split into leaf-bearing v's and the remaining w's.
    std::vector<int> role(static_cast<std::size_t>(n), 0); // 0 core, 1 leaf, 2 triangle
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) role[static_cast<std::size_t>(v)] = 1;
    std::vector<std::pair<std::pair<int, int>, int>> triangles; // ((y1,y2), w)
    for (int a = 0; a < n; ++a) {
        if (g.degree(a) != 2) continue;
        std::uint64_t na = g.neighbors_mask(a);
        std::uint64_t partners = na;
        while (partners) {
            int b = __builtin_ctzll(partners);
            partners &= partners - 1;
            if (b <= a || g.degree(b) != 2) continue;
            std::uint64_t common = na & g.neighbors_mask(b) & ~(1ull << a) & ~(1ull << b);
            if (!common) continue;
            int c = __builtin_ctzll(common);
            triangles.push_back({{a, b}, c});
            role[static_cast<std::size_t>(a)] = 2;
            role[static_cast<std::size_t>(b)] = 2;
        }
    }

    std::vector<int> vs, ws;
    for (int u = 0; u < n; ++u) {
        if (role[static_cast<std::size_t>(u)] != 0) continue;
        bool has_leaf = false;
        std::uint64_t m = g.neighbors_mask(u);
        while (m) {
            int x = __builtin_ctzll(m);
            m &= m - 1;
            if (role[static_cast<std::size_t>(x)] == 1) { has_leaf = true; break; }
        }
        (has_leaf ? vs : ws).push_back(u);
    }

    // A graph with equal matching numbers that is neither a star nor a star
    // triangle always decomposes; anything else here is a bug.
    auto broken = [](const char* what) -> CWRecognition {
        throw internal_error(std::string("Cameron-Walker decomposition failed: ") + what);
    };
    if (vs.empty() || ws.empty()) return broken("core side missing");

    std::vector<int> v_index(static_cast<std::size_t>(n), -1), w_index(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) v_index[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
    for (std::size_t j = 0; j < ws.size(); ++j) w_index[static_cast<std::size_t>(ws[j])] = static_cast<int>(j);

    CWStructure spec;
    spec.m = static_cast<int>(vs.size());
    spec.n = static_cast<int>(ws.size());
    spec.s.assign(vs.size(), 0);
    spec.t.assign(ws.size(), 0);

    for (int u = 0; u < n; ++u) {
        if (role[static_cast<std::size_t>(u)] != 1) continue;
        int host = __builtin_ctzll(g.neighbors_mask(u));
        if (v_index[static_cast<std::size_t>(host)] < 0) return broken("leaf attached off the v side");
        ++spec.s[static_cast<std::size_t>(v_index[static_cast<std::size_t>(host)])];
    }
    for (const auto& [pair, host] : triangles) {
        if (w_index[static_cast<std::size_t>(host)] < 0) return broken("triangle attached off the w side");
        ++spec.t[static_cast<std::size_t>(w_index[static_cast<std::size_t>(host)])];
    }
    for (int u : vs) {
        std::uint64_t m = g.neighbors_mask(u);
        while (m) {
            int x = __builtin_ctzll(m);
            m &= m - 1;
            if (role[static_cast<std::size_t>(x)] != 0) continue;
            if (v_index[static_cast<std::size_t>(x)] >= 0) return broken("edge inside the v side");
            spec.bip.emplace_back(v_index[static_cast<std::size_t>(u)] + 1,
                                  w_index[static_cast<std::size_t>(x)] + 1);
        }
    }
    for (int u : ws) {
        std::uint64_t m = g.neighbors_mask(u);
        while (m) {
            int x = __builtin_ctzll(m);
            m &= m - 1;
            if (role[static_cast<std::size_t>(x)] == 0 && w_index[static_cast<std::size_t>(x)] >= 0)
                return broken("edge inside the w side");
            if (role[static_cast<std::size_t>(x)] == 1) return broken("leaf attached to a w");
        }
    }

    try {
        spec = spec.checked();
    } catch (const std::invalid_argument& e) {
        return broken(e.what());
    }
    rec.kind = CWClass::cameron_walker;
    rec.structure = std::move(spec);
    return rec;
}

CWStructure reduce_leaf_ws(const CWStructure& raw) {
    CWStructure spec = raw.checked();
    while (spec.n > 1) {
        std::vector<int> degree(static_cast<std::size_t>(spec.n), 0);
        std::vector<int> host(static_cast<std::size_t>(spec.n), 0);
        for (auto [i, j] : spec.bip) {
            ++degree[static_cast<std::size_t>(j - 1)];
            host[static_cast<std::size_t>(j - 1)] = i;
        }
        int victim = -1;
        for (int j = 0; j < spec.n; ++j)
            if (degree[static_cast<std::size_t>(j)] == 1 && spec.t[static_cast<std::size_t>(j)] == 0) {
                victim = j;
                break;
            }
        if (victim < 0) break;
        ++spec.s[static_cast<std::size_t>(host[static_cast<std::size_t>(victim)] - 1)];
        spec.t.erase(spec.t.begin() + victim);
        std::vector<std::pair<int, int>> bip;
        for (auto [i, j] : spec.bip) {
            if (j - 1 == victim) continue;
            bip.emplace_back(i, j - 1 > victim ? j - 1 : j);
        }
        spec.bip = std::move(bip);
        --spec.n;
    }
    return spec;
}

CWFlags classify_cw(const CWStructure& raw) {
    CWStructure spec = reduce_leaf_ws(raw);
    CWFlags flags;
    flags.cohen_macaulay = std::all_of(spec.s.begin(), spec.s.end(), [](int x) { return x == 1; }) &&
                           std::all_of(spec.t.begin(), spec.t.end(), [](int x) { return x == 1; });
    flags.all_t_le_1 = std::all_of(spec.t.begin(), spec.t.end(), [](int x) { return x <= 1; });
    flags.complete_bipartite = spec.bip_complete();
    flags.h_deg_equals_reg =
        std::all_of(spec.s.begin(), spec.s.end(), [](int x) { return x == 1; }) &&
        std::all_of(spec.t.begin(), spec.t.end(), [](int x) { return x >= 1; });
    flags.star_convention = spec.m == 1 && spec.n == 1 && spec.t[0] == 0;

    if (flags.star_convention) {
        flags.depth2 = Depth2Case::none;
    } else if (spec.m == 2 &&
               std::all_of(spec.t.begin(), spec.t.end(), [](int x) { return x == 0; })) {
        flags.depth2 = Depth2Case::e1;
    } else if (spec.m == 1 && spec.n == 1 && spec.t[0] == 1) {
        flags.depth2 = Depth2Case::e2;
    } else if (spec.m == 1 && spec.n == 1 && spec.t[0] >= 2 && spec.s[0] == 1) {
        flags.depth2 = Depth2Case::e3;
    }
    return flags;
}

StarEqualityCheck cw_star_equality_check(const CWStructure& raw, bool check_all_subsets) {
    CWStructure spec = raw.checked();
    std::vector<std::uint64_t> w_nbrs(static_cast<std::size_t>(spec.n), 0);
    for (auto [i, j] : spec.bip) w_nbrs[static_cast<std::size_t>(j - 1)] |= 1ull << (i - 1);

    StarEqualityCheck result;
    std::vector<std::vector<int>> failures;
    std::uint64_t limit = 1ull << spec.m;
    for (std::uint64_t v = 0; v < limit; ++v) {
        bool covers_some_w = false;
        long lhs = 0, rhs = __builtin_popcountll(v);
        for (int j = 0; j < spec.n; ++j) {
            if ((w_nbrs[static_cast<std::size_t>(j)] & ~v) == 0) {
                covers_some_w = true;
                lhs += 1;
                rhs += spec.t[static_cast<std::size_t>(j)];
            }
        }
        if (!check_all_subsets && !covers_some_w) continue;
        for (int i = 0; i < spec.m; ++i)
            if ((v >> i) & 1u) lhs += spec.s[static_cast<std::size_t>(i)];
        if (lhs < rhs) {
            std::vector<int> fail;
            for (int i = 0; i < spec.m; ++i)
                if ((v >> i) & 1u) fail.push_back(i + 1);
            failures.push_back(std::move(fail));
        }
    }
    if (!failures.empty()) {
        result.holds = false;
        result.failing_v = *std::min_element(failures.begin(), failures.end());
    }
    return result;
}

CWReport cw_invariants(const CWStructure& raw) {
    CWStructure spec = raw.checked();
    CWReport rep;
    for (int tj : spec.t) rep.dim_and_deg_h += std::max(tj, 1);
    rep.dim_and_deg_h += spec.sum_s();
    rep.reg = spec.sum_t() + spec.m;
    int positive_t = static_cast<int>(std::count_if(spec.t.begin(), spec.t.end(),
                                                    [](int x) { return x > 0; }));
    rep.i_lower = spec.m + positive_t;
    rep.i_upper = std::min(spec.sum_s() + spec.n, spec.sum_t() + spec.m);
    rep.a_invariant = 0;
    rep.flags = classify_cw(spec);
    StarEqualityCheck check = cw_star_equality_check(spec);
    rep.star_equality = check.holds;
    rep.failing_v = check.failing_v;
    return rep;
}

nlohmann::json CWReport::to_json() const {
    nlohmann::json j{{"dim_and_deg_h", dim_and_deg_h},
                     {"reg", reg},
                     {"i_lower", i_lower},
                     {"i_upper", i_upper},
                     {"a_invariant", a_invariant},
                     {"star_equality", star_equality},
                     {"cohen_macaulay", flags.cohen_macaulay},
                     {"all_t_le_1", flags.all_t_le_1},
                     {"complete_bipartite", flags.complete_bipartite},
                     {"h_deg_equals_reg", flags.h_deg_equals_reg}};
    switch (flags.depth2) {
        case Depth2Case::none: j["depth2_case"] = "none"; break;
        case Depth2Case::e1: j["depth2_case"] = "e1"; break;
        case Depth2Case::e2: j["depth2_case"] = "e2"; break;
        case Depth2Case::e3: j["depth2_case"] = "e3"; break;
    }
    if (failing_v) j["failing_V"] = *failing_v;
    return j;
}

CWStructure cw_with_dim_depth(int d, int e) {
    if (e < 2 || d < e) throw std::invalid_argument("need d >= e >= 2");
    CWStructure spec;
    spec.n = 1;
    if (d > e) {
        spec.m = e;
        spec.s.assign(static_cast<std::size_t>(e), 1);
        spec.s[static_cast<std::size_t>(e - 1)] = d - e;
        spec.t = {0};
    } else {
        spec.m = d - 1;
        spec.s.assign(static_cast<std::size_t>(d - 1), 1);
        spec.t = {1};
    }
    for (int i = 1; i <= spec.m; ++i) spec.bip.emplace_back(i, 1);
    return spec.checked();
}

std::optional<CWStructure> cw_with_dim_reg_depth(int d, int r, int e) {
    if (e < 2 || r < e || d < r) throw std::invalid_argument("need d >= r >= e >= 2");
    if (e == 2) {
        if (r == 2) return cw_with_dim_depth(d, 2);
        if (r == d) {
            CWStructure spec;
            spec.m = 1;
            spec.n = 1;
            spec.s = {1};
            spec.t = {d - 1};
            spec.bip = {{1, 1}};
            return spec.checked();
        }
        return std::nullopt; // no example exists for 2 < r < d at depth 2
    }
    CWStructure spec;
    if (d > r) {
        spec.m = e - 1;
        spec.n = 2;
        spec.s.assign(static_cast<std::size_t>(e - 1), 1);
        spec.s[static_cast<std::size_t>(e - 2)] = d - r;
        spec.t = {r - e + 1, 0};
        spec.bip.emplace_back(1, 1);
        for (int i = 1; i <= e - 1; ++i) spec.bip.emplace_back(i, 2);
    } else {
        spec.m = e - 1;
        spec.n = 1;
        spec.s.assign(static_cast<std::size_t>(e - 1), 1);
        spec.t = {d - e + 1};
        for (int i = 1; i <= e - 1; ++i) spec.bip.emplace_back(i, 1);
    }
    return spec.checked();
}

} // namespace eil
