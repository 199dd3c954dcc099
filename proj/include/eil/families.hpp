#ifndef EIL_FAMILIES_HPP
#define EIL_FAMILIES_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "eil/graph.hpp"

namespace eil {

enum class FamilyKind { star, star_triangle, path, cycle, g_s };

// Parameterized family reference; the CLI spelling is "star:3", "path:7",
// "cycle:5", "startriangle:2", "gs:3".
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int param = 0;

    static std::optional<FamilySpec> parse(const std::string& text);
    std::string to_string() const;
};

// Labeled family graphs: star with center xv and leaves x1..xs; star
// triangle with center xv and triangles (x1,x2)..(x2t-1,x2t); path and cycle
// x1..xn; and the tree on x1..x_{s+4} made of a star at x_{s+3} over x1..xs
// together with the path x_{s+1} x_{s+2} x_{s+3} x_{s+4}.
SimpleGraph family_graph(const FamilySpec& spec);

// Closed-form predictions.  Fields are absent when no closed form is
// asserted for that family; for the g_s family deg_h is only bounded
// (strictly below dim), recorded via deg_h_strictly_below_dim.
struct FamilyPrediction {
    FamilySpec spec;
    std::optional<int> dim;
    std::optional<int> depth;
    std::optional<int> reg;
    std::optional<int> projdim;
    std::optional<int> deg_h;
    std::optional<bool> star_equality;
    bool deg_h_strictly_below_dim = false;

    nlohmann::json to_json() const;
};

FamilyPrediction family_prediction(const FamilySpec& spec);

} // namespace eil

#endif
