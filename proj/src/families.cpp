#include "eil/families.hpp"

#include <stdexcept>

namespace eil {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::string xlabel(int i) { return "x" + std::to_string(i); }

} // namespace

std::optional<FamilySpec> FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string name = text.substr(0, colon);
    std::string num = text.substr(colon + 1);
    if (num.empty()) return std::nullopt;
    int value = 0;
    for (char c : num) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
        if (value > 1000000) return std::nullopt;
    }
    FamilySpec spec;
    spec.param = value;
    if (name == "star")
        spec.kind = FamilyKind::star;
    else if (name == "startriangle")
        spec.kind = FamilyKind::star_triangle;
    else if (name == "path")
        spec.kind = FamilyKind::path;
    else if (name == "cycle")
        spec.kind = FamilyKind::cycle;
    else if (name == "gs")
        spec.kind = FamilyKind::g_s;
    else
        return std::nullopt;
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string name;
    switch (kind) {
        case FamilyKind::star: name = "star"; break;
        case FamilyKind::star_triangle: name = "startriangle"; break;
        case FamilyKind::path: name = "path"; break;
        case FamilyKind::cycle: name = "cycle"; break;
        case FamilyKind::g_s: name = "gs"; break;
    }
    return name + ":" + std::to_string(param);
}

SimpleGraph family_graph(const FamilySpec& spec) {
    int p = spec.param;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    switch (spec.kind) {
        case FamilyKind::star: {
            if (p < 1) throw std::invalid_argument("star needs s >= 1");
            for (int i = 1; i <= p; ++i) vertices.push_back(xlabel(i));
            vertices.push_back("xv");
            for (int i = 1; i <= p; ++i) edges.emplace_back("xv", xlabel(i));
            break;
        }
        case FamilyKind::star_triangle: {
            if (p < 1) throw std::invalid_argument("star triangle needs t >= 1");
            for (int i = 1; i <= 2 * p; ++i) vertices.push_back(xlabel(i));
            vertices.push_back("xv");
            for (int k = 1; k <= p; ++k) {
                edges.emplace_back("xv", xlabel(2 * k - 1));
                edges.emplace_back("xv", xlabel(2 * k));
                edges.emplace_back(xlabel(2 * k - 1), xlabel(2 * k));
            }
            break;
        }
        case FamilyKind::path: {
            if (p < 2) throw std::invalid_argument("path needs n >= 2");
            for (int i = 1; i <= p; ++i) vertices.push_back(xlabel(i));
            for (int i = 1; i < p; ++i) edges.emplace_back(xlabel(i), xlabel(i + 1));
            break;
        }
        case FamilyKind::cycle: {
            if (p < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (int i = 1; i <= p; ++i) vertices.push_back(xlabel(i));
            for (int i = 1; i < p; ++i) edges.emplace_back(xlabel(i), xlabel(i + 1));
            edges.emplace_back(xlabel(1), xlabel(p));
            break;
        }
        case FamilyKind::g_s: {
            if (p < 1) throw std::invalid_argument("gs needs s >= 1");
            for (int i = 1; i <= p + 4; ++i) vertices.push_back(xlabel(i));
            for (int i = 1; i <= p; ++i) edges.emplace_back(xlabel(p + 3), xlabel(i));
            edges.emplace_back(xlabel(p + 1), xlabel(p + 2));
            edges.emplace_back(xlabel(p + 2), xlabel(p + 3));
            edges.emplace_back(xlabel(p + 3), xlabel(p + 4));
            break;
        }
    }
    return SimpleGraph(std::move(vertices), edges);
}

FamilyPrediction family_prediction(const FamilySpec& spec) {
    family_graph(spec); // parameter validation
    FamilyPrediction pred;
    pred.spec = spec;
    int p = spec.param;
    switch (spec.kind) {
        case FamilyKind::star:
            pred.dim = p;
            pred.deg_h = p;
            pred.reg = 1;
            pred.projdim = p;
            pred.depth = 1;
            pred.star_equality = true;
            break;
        case FamilyKind::star_triangle:
            // dim and deg h have closed forms; the deeper invariants do not.
            pred.dim = p;
            pred.deg_h = (p % 2 == 1) ? p : p - 1;
            pred.reg = p; // equals both matching numbers
            break;
        case FamilyKind::path: {
            pred.dim = ceil_div(p, 2);
            pred.depth = ceil_div(p, 3);
            pred.reg = ceil_div(p - 1, 3);
            pred.projdim = p - ceil_div(p, 3);
            pred.deg_h = (p % 3 == 1) ? ceil_div(p, 2) - 1 : ceil_div(p, 2);
            pred.star_equality = true;
            break;
        }
        case FamilyKind::cycle: {
            pred.dim = ceil_div(p - 1, 2);
            pred.depth = ceil_div(p - 1, 3);
            pred.projdim = p - ceil_div(p - 1, 3);
            pred.reg = p / 3 + (p % 3 == 2 ? 1 : 0);
            int ell = p / 3;
            if (p % 3 == 1)
                pred.deg_h = ceil_div(3 * ell, 2);
            else if (p % 3 == 2)
                pred.deg_h = ceil_div(3 * ell + 1, 2);
            // p % 3 == 0: no closed form asserted; it follows from the other
            // three invariants via the extremal equality.
            pred.star_equality = true;
            break;
        }
        case FamilyKind::g_s:
            pred.dim = p + 2;
            pred.reg = 1;
            pred.projdim = p + 2;
            pred.depth = 2;
            pred.star_equality = true;
            pred.deg_h_strictly_below_dim = true;
            break;
    }
    return pred;
}

nlohmann::json FamilyPrediction::to_json() const {
    nlohmann::json j{{"family", spec.to_string()}};
    auto put = [&](const char* key, const std::optional<int>& v) {
        if (v)
            j[key] = *v;
        else
            j[key] = "not predicted";
    };
    put("dim", dim);
    put("depth", depth);
    put("reg", reg);
    put("projdim", projdim);
    put("deg_h", deg_h);
    if (star_equality)
        j["star_equality"] = *star_equality;
    else
        j["star_equality"] = "not predicted";
    if (deg_h_strictly_below_dim) j["deg_h_strictly_below_dim"] = true;
    return j;
}

} // namespace eil
