#ifndef EIL_CAMERON_WALKER_HPP
#define EIL_CAMERON_WALKER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eil/graph.hpp"

namespace eil {

// Normal form of a Cameron-Walker graph: a connected bipartite core on
// {v_1..v_m} u {w_1..w_n}, s_i >= 1 leaf edges at each v_i, and t_j >= 0
// pendant triangles at each w_j.  Indices in `bip` are 1-based.
struct CWStructure {
    int m = 0;
    int n = 0;
    std::vector<int> s;
    std::vector<int> t;
    std::vector<std::pair<int, int>> bip;

    int total_vertices() const;
    int sum_s() const;
    int sum_t() const;
    bool bip_complete() const;

    // Throws std::invalid_argument when the invariants fail (sizes, s_i >= 1,
    // t_j >= 0, indices in range, connected bipartite core).  Returns a copy
    // with the edge list sorted and deduplicated.
    CWStructure checked() const;

    bool operator==(const CWStructure&) const = default;

    nlohmann::json to_json() const;
    static CWStructure from_json(const nlohmann::json& j);
};

// Labeled graph of the normal form: leaves x<i>_<k>, core v<i> / w<j>,
// triangle vertices y<j>_<l>_1 and y<j>_<l>_2, in that vertex order.
SimpleGraph build_cw(const CWStructure& spec);

enum class CWClass { not_cw, star, star_triangle, cameron_walker };

struct CWRecognition {
    CWClass kind = CWClass::not_cw;
    std::optional<CWStructure> structure; // present for cameron_walker; for star
                                          // only when include_star_as_cw is set
    int star_edges = 0;                   // s for a star graph
    int triangles = 0;                    // t for a star triangle

    nlohmann::json to_json() const;
};

// Decomposes a connected graph with equal matching and induced matching
// numbers into one of the three shapes; any other input yields not_cw.
// Degree-one vertices always read as leaves (the representation with the
// fewest core w's); with include_star_as_cw a star on >= 3 vertices is
// additionally reported as the m = n = 1, t_1 = 0 structure.
CWRecognition recognize_cw(const SimpleGraph& g, bool include_star_as_cw = false);

// Absorb every w_j that has no triangles and a single core neighbor into a
// leaf of that neighbor.  Fixpoint; keeps n >= 1.
CWStructure reduce_leaf_ws(const CWStructure& spec);

enum class Depth2Case { none, e1, e2, e3 };

struct CWFlags {
    bool cohen_macaulay = false;     // all s_i = 1 and all t_j = 1
    bool all_t_le_1 = false;         // t_j <= 1 for all j
    bool complete_bipartite = false; // core is complete bipartite (after reduction)
    bool h_deg_equals_reg = false;   // all s_i = 1 and all t_j >= 1
    Depth2Case depth2 = Depth2Case::none;
    bool star_convention = false;    // reduced form degenerates to a star
};

// Pattern classification on the reduced normal form.
CWFlags classify_cw(const CWStructure& spec);

struct StarEqualityCheck {
    bool holds = true;
    std::optional<std::vector<int>> failing_v; // 1-based v-indices, subset-lex least
};

// Evaluates, over subsets V of {v_1..v_m},
//   sum_{v_i in V} s_i + #{j : N(w_j) subset V} >= sum_{j : N(w_j) subset V} t_j + |V|.
// This holds for every V exactly when deg h - reg = dim - depth for the built
// graph.  Only subsets containing some w-neighborhood can fail, so the scan
// is restricted to those unless check_all_subsets is set.
StarEqualityCheck cw_star_equality_check(const CWStructure& spec, bool check_all_subsets = false);

struct CWReport {
    int dim_and_deg_h = 0; // sum s_i + sum max(t_j, 1)
    int reg = 0;           // sum t_j + m
    int i_lower = 0;       // m + #{j : t_j > 0}
    int i_upper = 0;       // min(sum s_i + n, sum t_j + m)
    int a_invariant = 0;   // always 0
    bool star_equality = false;
    std::optional<std::vector<int>> failing_v;
    CWFlags flags;

    nlohmann::json to_json() const;
};

// Closed-form invariants; no graph search involved.
CWReport cw_invariants(const CWStructure& spec);

// A structure whose graph has dim = d and depth = e (d >= e >= 2) and
// satisfies the extremal equality.
CWStructure cw_with_dim_depth(int d, int e);

// A structure with dim = deg h = d, reg = r, depth = e when one exists
// (always for e >= 3; for e = 2 exactly when r = 2 or r = d).
std::optional<CWStructure> cw_with_dim_reg_depth(int d, int r, int e);

} // namespace eil

#endif
