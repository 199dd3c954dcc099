#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eil/betti.hpp"
#include "eil/cameron_walker.hpp"
#include "eil/errors.hpp"
#include "eil/families.hpp"
#include "eil/field.hpp"
#include "eil/hilbert.hpp"
#include "eil/invariants.hpp"
#include "eil/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;
constexpr int exit_cutoff = 3;

struct ResolvedInput {
    eil::SimpleGraph graph;
    std::optional<eil::CWStructure> cw_spec; // set when the input was a CW structure
    std::string description;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw eil::parse_error(0, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ResolvedInput resolve_input(const std::string& input) {
    ResolvedInput out;
    if (auto fam = eil::FamilySpec::parse(input)) {
        out.graph = eil::family_graph(*fam);
        out.description = fam->to_string();
        return out;
    }
    std::string text = read_file(input);
    out.description = input;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw eil::parse_error(0, "invalid JSON in " + input);
        if (j.contains("m") && j.contains("bip")) {
            out.cw_spec = eil::CWStructure::from_json(j);
            out.graph = eil::build_cw(*out.cw_spec);
        } else {
            out.graph = eil::graph_from_json(j);
        }
        return out;
    }
    out.graph = eil::parse_graph(text);
    return out;
}

eil::FieldSpec parse_field_or_throw(const std::string& text) {
    auto f = eil::FieldSpec::parse(text);
    if (!f) throw eil::parse_error(0, "field must be 'q' or a prime, got '" + text + "'");
    return *f;
}

void render_invariants_table(const nlohmann::json& j, const eil::BettiTable* table,
                             std::ostream& os) {
    auto row = [&](const char* key) {
        if (j.contains(key)) os << key << ": " << j.at(key).dump() << "\n";
    };
    os << "input: " << j.at("input").get<std::string>() << "\n";
    for (const char* key : {"vertices", "edges", "field", "dim", "deg_h", "h_polynomial",
                            "a_invariant", "matching", "induced_matching",
                            "independence_domination", "projdim", "depth", "reg",
                            "star_equality", "extremal"})
        row(key);
    if (j.contains("betti_skipped")) os << "betti: skipped (" << j.at("betti_skipped").get<std::string>() << ")\n";
    if (j.contains("cw")) os << "cw: " << j.at("cw").dump() << "\n";
    if (j.contains("cw_closed_form")) os << "cw_closed_form: " << j.at("cw_closed_form").dump() << "\n";
    if (table) os << "betti table:\n" << table->render_table();
}

int cmd_invariants(const std::string& input, const std::string& field_text, int cutoff,
                   bool as_table) {
    eil::FieldSpec field = parse_field_or_throw(field_text);
    ResolvedInput in = resolve_input(input);
    const eil::SimpleGraph& g = in.graph;

    nlohmann::json j;
    j["input"] = in.description;
    j["field"] = field.name();
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();

    eil::IntPolynomial h = eil::h_polynomial(g);
    auto independence = eil::independence_number(g);
    j["dim"] = independence.value;
    j["deg_h"] = *h.degree();
    j["h_polynomial"] = h.to_json();
    j["a_invariant"] = eil::a_invariant(g);
    j["matching"] = eil::matching_number(g).value;
    j["induced_matching"] = eil::induced_matching_number(g).value;
    j["independence_domination"] = eil::independence_domination(g).value;
    j["cw"] = eil::recognize_cw(g).to_json();
    if (in.cw_spec) j["cw_closed_form"] = eil::cw_invariants(*in.cw_spec).to_json();

    bool cutoff_hit = false;
    std::optional<eil::BettiTable> table;
    try {
        eil::HomologicalReport hom = eil::homological_report(g, field, cutoff);
        j["projdim"] = hom.projdim;
        j["depth"] = hom.depth;
        j["reg"] = hom.reg;
        j["star_equality"] = hom.star_equality;
        nlohmann::json extremal = nlohmann::json::array();
        for (auto [i, jj] : hom.extremal) extremal.push_back(nlohmann::json::array({i, jj}));
        j["extremal"] = extremal;
        j["betti"] = hom.table.to_json();
        table = hom.table;
    } catch (const eil::cutoff_error& e) {
        cutoff_hit = true;
        j["betti_skipped"] = std::string("cutoff: ") + e.what();
    }

    if (as_table)
        render_invariants_table(j, table ? &*table : nullptr, std::cout);
    else
        std::cout << j.dump(2) << "\n";
    return cutoff_hit ? exit_cutoff : exit_ok;
}

int cmd_verify(const std::string& claim, const std::vector<std::string>& range_args,
               const std::string& config_path, const std::string& field_text, int jobs,
               bool as_table, const std::string& csv_path) {
    eil::FieldSpec field = parse_field_or_throw(field_text);
    eil::RangeMap ranges;
    if (!config_path.empty()) ranges = eil::parse_range_config(read_file(config_path));
    for (const auto& kv : range_args) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw eil::parse_error(0, "--range expects key=value, got '" + kv + "'");
        ranges[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    eil::VerificationReport rep = eil::run_verify(claim, ranges, field, jobs);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw eil::parse_error(0, "cannot write " + csv_path);
        csv << rep.to_csv();
    }
    if (as_table)
        std::cout << rep.to_table();
    else
        std::cout << rep.to_json().dump(2) << "\n";
    return rep.all_pass ? exit_ok : exit_counterexample;
}

int cmd_make_cw(int m, int n, const std::string& s_text, const std::string& t_text,
                const std::string& bip_text, bool as_json) {
    auto parse_ints = [](const std::string& text, const char* what) {
        std::vector<int> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            try {
                out.push_back(std::stoi(item));
            } catch (...) {
                throw eil::parse_error(0, std::string("bad ") + what + " entry: " + item);
            }
        }
        return out;
    };
    eil::CWStructure spec;
    spec.m = m;
    spec.n = n;
    spec.s = parse_ints(s_text, "--s");
    spec.t = parse_ints(t_text, "--t");
    std::stringstream ss(bip_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw eil::parse_error(0, "--bip expects i-j pairs, got '" + item + "'");
        try {
            spec.bip.emplace_back(std::stoi(item.substr(0, dash)),
                                  std::stoi(item.substr(dash + 1)));
        } catch (...) {
            throw eil::parse_error(0, "bad --bip pair: " + item);
        }
    }
    eil::SimpleGraph g = eil::build_cw(spec);
    if (as_json) {
        nlohmann::json j = eil::graph_to_json(g);
        j["cw"] = spec.checked().to_json();
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "vertices:";
    for (const auto& v : g.vertex_labels()) std::cout << " " << v;
    std::cout << "\nedges:";
    for (const auto& [a, b] : g.edge_labels()) std::cout << " " << a << " " << b;
    std::cout << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of edge ideals of finite simple graphs"};
    app.require_subcommand(1);

    std::string input, field_text = "q";
    int cutoff = eil::default_betti_cutoff();
    bool json_flag = false, table_flag = false;

    CLI::App* inv = app.add_subcommand("invariants",
                                       "Compute dim, depth, reg, h-polynomial, matchings and "
                                       "related data for a graph, family spec, or CW structure");
    inv->add_option("input", input,
                    "graph file, family spec (path:7, cycle:5, star:3, startriangle:2, gs:3), "
                    "or CW structure JSON file")
        ->required();
    inv->add_option("--field", field_text, "coefficient field: q or a prime");
    inv->add_option("--cutoff", cutoff, "Betti vertex cutoff");
    inv->add_flag("--json", json_flag, "JSON output (default)");
    inv->add_flag("--table", table_flag, "human-readable output");

    std::string claim, config_path, csv_path;
    std::vector<std::string> range_args;
    int jobs = 1;
    CLI::App* ver = app.add_subcommand("verify", "Replay a claim over its corpus");
    ver->add_option("claim", claim, "claim id; see --list")->required(false);
    ver->add_option("--range", range_args, "override a corpus range, key=value");
    ver->add_option("--config", config_path, "key=value range file");
    ver->add_option("--field", field_text, "coefficient field: q or a prime");
    ver->add_option("--jobs", jobs, "worker threads (results are order-deterministic)");
    ver->add_option("--csv", csv_path, "also write per-instance rows to this CSV file");
    ver->add_flag("--json", json_flag, "JSON output (default)");
    ver->add_flag("--table", table_flag, "human-readable output");
    bool list_claims = false;
    ver->add_flag("--list", list_claims, "list known claim ids");

    int m = 0, n = 0;
    std::string s_text, t_text, bip_text;
    bool make_json = false;
    CLI::App* mk = app.add_subcommand("make-cw", "Emit the graph of a CW structure");
    mk->add_option("--m", m, "number of leaf-bearing core vertices")->required();
    mk->add_option("--n", n, "number of triangle-bearing core vertices")->required();
    mk->add_option("--s", s_text, "comma-separated leaf counts, one per v")->required();
    mk->add_option("--t", t_text, "comma-separated triangle counts, one per w")->required();
    mk->add_option("--bip", bip_text, "core edges as i-j pairs, comma separated")->required();
    mk->add_flag("--json", make_json, "emit JSON instead of the graph file format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (inv->parsed()) return cmd_invariants(input, field_text, cutoff, table_flag);
        if (ver->parsed()) {
            if (list_claims) {
                for (const auto& id : eil::known_claims()) std::cout << id << "\n";
                return exit_ok;
            }
            if (claim.empty()) {
                std::cerr << "error: verify needs a claim id (try --list)\n";
                return exit_usage;
            }
            return cmd_verify(claim, range_args, config_path, field_text, jobs, table_flag,
                              csv_path);
        }
        if (mk->parsed()) return cmd_make_cw(m, n, s_text, t_text, bip_text, make_json);
    } catch (const eil::cutoff_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_cutoff;
    } catch (const eil::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
