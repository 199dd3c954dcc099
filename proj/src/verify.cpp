#include "eil/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "eil/betti.hpp"
#include "eil/cameron_walker.hpp"
#include "eil/corpus.hpp"
#include "eil/errors.hpp"
#include "eil/families.hpp"
#include "eil/hilbert.hpp"
#include "eil/invariants.hpp"
#include "eil/polynomial.hpp"

namespace eil {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json inst = nlohmann::json::array();
    for (const auto& r : instances)
        inst.push_back(nlohmann::json{{"id", r.id}, {"pass", r.pass}, {"details", r.details}});
    return nlohmann::json{{"claim", claim},
                          {"corpus", corpus},
                          {"field", field},
                          {"version", version},
                          {"instances", inst},
                          {"instance_count", instance_count},
                          {"all_pass", all_pass},
                          {"wall_ms", wall_ms}};
}

std::string VerificationReport::to_table() const {
    std::ostringstream os;
    os << "claim:     " << claim << "\n"
       << "corpus:    " << corpus << "\n"
       << "field:     " << field << "\n"
       << "instances: " << instance_count << "\n"
       << "result:    " << (all_pass ? "all pass" : "COUNTEREXAMPLE FOUND") << "\n"
       << "wall:      " << wall_ms << " ms\n";
    int shown = 0;
    for (const auto& r : instances) {
        if (r.pass) continue;
        os << "  FAIL " << r.id << ": " << r.details.dump() << "\n";
        if (++shown == 20) {
            os << "  ...\n";
            break;
        }
    }
    return os.str();
}

std::string VerificationReport::to_csv() const {
    std::ostringstream os;
    os << "instance,pass\n";
    for (const auto& r : instances) os << r.id << "," << (r.pass ? 1 : 0) << "\n";
    return os.str();
}

RangeMap parse_range_config(const std::string& text) {
    RangeMap out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        auto strip = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t\r");
            std::size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string trimmed = strip(line);
        if (trimmed.empty()) continue;
        auto eq = trimmed.find('=');
        if (eq == std::string::npos) throw parse_error(lineno, "expected key=value");
        std::string key = strip(trimmed.substr(0, eq));
        std::string value = strip(trimmed.substr(eq + 1));
        if (key.empty()) throw parse_error(lineno, "empty key");
        out[key] = value;
    }
    return out;
}

namespace {

int range_int(const RangeMap& ranges, const std::string& key, int fallback) {
    auto it = ranges.find(key);
    if (it == ranges.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (...) {
        throw std::invalid_argument("range " + key + " must be an integer, got '" + it->second + "'");
    }
}

CorpusOptions corpus_options(const RangeMap& ranges) {
    CorpusOptions opt;
    opt.m_max = range_int(ranges, "m_max", opt.m_max);
    opt.n_max = range_int(ranges, "n_max", opt.n_max);
    opt.s_max = range_int(ranges, "s_max", opt.s_max);
    opt.t_max = range_int(ranges, "t_max", opt.t_max);
    opt.max_vertices = range_int(ranges, "max_vertices", opt.max_vertices);
    return opt;
}

std::string corpus_description(const CorpusOptions& opt, std::size_t count) {
    std::ostringstream os;
    os << "Cameron-Walker structures with m<=" << opt.m_max << ", n<=" << opt.n_max
       << ", s_i<=" << opt.s_max << ", t_j<=" << opt.t_max << ", vertices<=" << opt.max_vertices
       << " (" << count << " instances)";
    return os.str();
}

std::string spec_id(const CWStructure& spec) {
    std::ostringstream os;
    os << "m" << spec.m << "n" << spec.n << "s";
    for (int x : spec.s) os << x;
    os << "t";
    for (int x : spec.t) os << x;
    os << "b";
    for (auto [i, j] : spec.bip) os << i << j;
    return os.str();
}

// Runs fn over [0, count) with deterministic result ordering.
std::vector<InstanceResult> run_instances(long count, int jobs,
                                          const std::function<InstanceResult(long)>& fn) {
    std::vector<InstanceResult> results(static_cast<std::size_t>(count));
    if (jobs <= 1) {
        for (long i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = fn(i);
        return results;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> workers;
    int nthreads = std::min<long>(jobs, std::max<long>(count, 1));
    workers.reserve(static_cast<std::size_t>(nthreads));
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mu;
    for (int t = 0; t < nthreads; ++t) {
        workers.emplace_back([&] {
            while (true) {
                long i = next.fetch_add(1);
                if (i >= count || failed.load()) break;
                try {
                    results[static_cast<std::size_t>(i)] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!failed.exchange(true)) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (failed.load()) std::rethrow_exception(first_error);
    return results;
}

using ClaimFn = std::function<void(VerificationReport&, const RangeMap&, const FieldSpec&, int)>;

// ---- individual claims ------------------------------------------------------

// a-invariant vanishes; both matching numbers agree with the closed form.
void claim_a_invariant(VerificationReport& rep, const RangeMap& ranges, const FieldSpec&,
                       int jobs) {
    CorpusOptions opt = corpus_options(ranges);
    auto corpus = cw_corpus(opt);
    rep.corpus = corpus_description(opt, corpus.size());
    rep.instances = run_instances(static_cast<long>(corpus.size()), jobs, [&](long idx) {
        const CWStructure& spec = corpus[static_cast<std::size_t>(idx)];
        SimpleGraph g = build_cw(spec);
        InstanceResult r;
        r.id = spec_id(spec);
        int a = a_invariant(g);
        int match = matching_number(g).value;
        int induced = induced_matching_number(g).value;
        int expected_reg = spec.sum_t() + spec.m;
        r.pass = a == 0 && match == induced && match == expected_reg;
        r.details = nlohmann::json{{"a_invariant", a},
                                   {"matching", match},
                                   {"induced_matching", induced},
                                   {"expected", expected_reg}};
        if (!r.pass) {
            r.details["spec"] = spec.to_json();
            r.details["graph"] = graph_to_json(g);
        }
        return r;
    });
}

// deg h = dim = sum s_i + sum max(t_j, 1)
void claim_dim_formula(VerificationReport& rep, const RangeMap& ranges, const FieldSpec&,
                       int jobs) {
    CorpusOptions opt = corpus_options(ranges);
    auto corpus = cw_corpus(opt);
    rep.corpus = corpus_description(opt, corpus.size());
    rep.instances = run_instances(static_cast<long>(corpus.size()), jobs, [&](long idx) {
        const CWStructure& spec = corpus[static_cast<std::size_t>(idx)];
        SimpleGraph g = build_cw(spec);
        InstanceResult r;
        r.id = spec_id(spec);
        int dim = independence_number(g).value;
        int deg_h = *h_polynomial(g).degree();
        int formula = cw_invariants(spec).dim_and_deg_h;
        r.pass = dim == formula && deg_h == formula;
        r.details = nlohmann::json{{"dim", dim}, {"deg_h", deg_h}, {"formula", formula}};
        if (!r.pass) {
            r.details["spec"] = spec.to_json();
            r.details["graph"] = graph_to_json(g);
        }
        return r;
    });
}

// Recursive Hilbert series equals the closed star form; deg h = dim = s.
void claim_star_series(VerificationReport& rep, const RangeMap& ranges, const FieldSpec&,
                       int jobs) {
    int s_max = range_int(ranges, "s_max", 8);
    rep.corpus = "star graphs with 1 <= s <= " + std::to_string(s_max);
    rep.instances = run_instances(s_max, jobs, [&](long idx) {
        int s = static_cast<int>(idx) + 1;
        InstanceResult r;
        r.id = "star:" + std::to_string(s);
        SimpleGraph g = family_graph({FamilyKind::star, s});
        HilbertSeries recursive = k_polynomial(g);
        HilbertSeries closed = star_series(s);
        IntPolynomial h = h_polynomial(g);
        int dim = independence_number(g).value;
        r.pass = recursive.same_series(closed) && *h.degree() == s && dim == s;
        r.details = nlohmann::json{{"s", s},
                                   {"recursive", recursive.to_json()},
                                   {"closed", closed.to_json()},
                                   {"deg_h", *h.degree()},
                                   {"dim", dim}};
        return r;
    });
}

// Same for star triangles, including the parity rule for deg h.
void claim_star_triangle_series(VerificationReport& rep, const RangeMap& ranges, const FieldSpec&,
                                int jobs) {
    int t_max = range_int(ranges, "t_max", 8);
    rep.corpus = "star triangles with 1 <= t <= " + std::to_string(t_max);
    rep.instances = run_instances(t_max, jobs, [&](long idx) {
        int t = static_cast<int>(idx) + 1;
        InstanceResult r;
        r.id = "startriangle:" + std::to_string(t);
        SimpleGraph g = family_graph({FamilyKind::star_triangle, t});
        HilbertSeries recursive = k_polynomial(g);
        HilbertSeries closed = star_triangle_series(t);
        IntPolynomial h = h_polynomial(g);
        int dim = independence_number(g).value;
        int expected_deg = (t % 2 == 1) ? t : t - 1;
        r.pass = recursive.same_series(closed) && *h.degree() == expected_deg && dim == t;
        r.details = nlohmann::json{{"t", t},
                                   {"recursive", recursive.to_json()},
                                   {"closed", closed.to_json()},
                                   {"deg_h", *h.degree()},
                                   {"expected_deg", expected_deg},
                                   {"dim", dim}};
        return r;
    });
}

// i(G) obeys the bounds; with a complete bipartite core it hits the upper one.
void claim_idom_bounds(VerificationReport& rep, const RangeMap& ranges, const FieldSpec&,
                       int jobs) {
    CorpusOptions opt = corpus_options(ranges);
    auto corpus = cw_corpus(opt);
    rep.corpus = corpus_description(opt, corpus.size());
    rep.instances = run_instances(static_cast<long>(corpus.size()), jobs, [&](long idx) {
        const CWStructure& spec = corpus[static_cast<std::size_t>(idx)];
        SimpleGraph g = build_cw(spec);
        InstanceResult r;
        r.id = spec_id(spec);
        CWReport closed = cw_invariants(spec);
        int idom = independence_domination(g).value;
        bool bounds = closed.i_lower <= idom && idom <= closed.i_upper;
        bool complete_case = true;
        if (reduce_leaf_ws(spec).bip_complete()) complete_case = idom == closed.i_upper;
        r.pass = bounds && complete_case;
        r.details = nlohmann::json{{"i", idom},
                                   {"lower", closed.i_lower},
                                   {"upper", closed.i_upper}};
        if (!r.pass) {
            r.details["spec"] = spec.to_json();
            r.details["graph"] = graph_to_json(g);
        }
        return r;
    });
}

// The subset inequality holds exactly when the Betti corner is nonzero,
// equivalently when deg h - reg = dim - depth.
void claim_star_equality_classification(VerificationReport& rep, const RangeMap& ranges,
                                        const FieldSpec& field, int jobs) {
    CorpusOptions opt = corpus_options(ranges);
    opt.max_vertices = range_int(ranges, "max_vertices", 14);
    int cutoff = range_int(ranges, "cutoff", std::max(default_betti_cutoff(), opt.max_vertices));
    auto corpus = cw_corpus(opt);
    rep.corpus = corpus_description(opt, corpus.size()) + " plus the 24-vertex reference graph";
    long count = static_cast<long>(corpus.size()) + 1;
    rep.instances = run_instances(count, jobs, [&](long idx) {
        InstanceResult r;
        if (idx == static_cast<long>(corpus.size())) {
            // 24-vertex reference instance: the inequality fails with witness
            // V = {v2}; the degree arithmetic must agree (depth through i(G)).
            CWStructure spec;
            spec.m = 3;
            spec.n = 4;
            spec.s = {3, 1, 3};
            spec.t = {0, 1, 2, 2};
            spec.bip = {{1, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 4}};
            r.id = "reference-24-vertex";
            SimpleGraph g = build_cw(spec);
            StarEqualityCheck check = cw_star_equality_check(spec);
            int dim = independence_number(g).value;
            int depth = independence_domination(g).value;
            int deg_h = *h_polynomial(g).degree();
            int reg = induced_matching_number(g).value;
            bool degree_side = (deg_h - reg) == (dim - depth);
            r.pass = !check.holds && check.failing_v == std::vector<int>{2} && !degree_side;
            r.details = nlohmann::json{{"holds", check.holds},
                                       {"deg_h", deg_h},
                                       {"reg", reg},
                                       {"dim", dim},
                                       {"depth", depth}};
            if (check.failing_v) r.details["failing_V"] = *check.failing_v;
            if (!r.pass) r.details["graph"] = graph_to_json(g);
            return r;
        }
        const CWStructure& spec = corpus[static_cast<std::size_t>(idx)];
        r.id = spec_id(spec);
        SimpleGraph g = build_cw(spec);
        StarEqualityCheck check = cw_star_equality_check(spec);
        StarEqualityCheck unrestricted = cw_star_equality_check(spec, true);
        HomologicalReport hom = homological_report(g, field, cutoff);
        bool degree_side = (hom.deg_h - hom.reg) == (hom.dim - hom.depth);
        r.pass = check.holds == hom.star_equality && degree_side == hom.star_equality &&
                 check.holds == unrestricted.holds && check.failing_v == unrestricted.failing_v;
        r.details = nlohmann::json{{"subset_check", check.holds},
                                   {"betti_corner", hom.star_equality},
                                   {"degree_side", degree_side}};
        if (check.failing_v) r.details["failing_V"] = *check.failing_v;
        if (!r.pass) {
            r.details["spec"] = spec.to_json();
            r.details["graph"] = graph_to_json(g);
        }
        return r;
    });
}

// t_j <= 1 everywhere forces the equality.
void claim_t_le_1(VerificationReport& rep, const RangeMap& ranges, const FieldSpec&, int jobs) {
    CorpusOptions opt = corpus_options(ranges);
    auto corpus = cw_corpus(opt);
    std::vector<CWStructure> eligible;
    for (const auto& spec : corpus)
        if (std::all_of(spec.t.begin(), spec.t.end(), [](int x) { return x <= 1; }))
            eligible.push_back(spec);
    rep.corpus = corpus_description(opt, corpus.size()) + ", restricted to all t_j <= 1 (" +
                 std::to_string(eligible.size()) + " instances)";
    rep.instances = run_instances(static_cast<long>(eligible.size()), jobs, [&](long idx) {
        const CWStructure& spec = eligible[static_cast<std::size_t>(idx)];
        InstanceResult r;
        r.id = spec_id(spec);
        StarEqualityCheck check = cw_star_equality_check(spec);
        r.pass = check.holds;
        r.details = nlohmann::json{{"holds", check.holds}};
        if (!r.pass) {
            r.details["spec"] = spec.to_json();
            r.details["graph"] = graph_to_json(build_cw(spec));
            if (check.failing_v) r.details["failing_V"] = *check.failing_v;
        }
        return r;
    });
}

// Complete bipartite core: equality iff sum s_i + n >= sum t_j + m.
void claim_complete_bipartite(VerificationReport& rep, const RangeMap& ranges, const FieldSpec&,
                              int jobs) {
    CorpusOptions opt = corpus_options(ranges);
    auto corpus = cw_corpus(opt);
    std::vector<CWStructure> eligible;
    for (const auto& spec : corpus)
        if (spec.bip_complete()) eligible.push_back(spec);
    rep.corpus = corpus_description(opt, corpus.size()) + ", restricted to complete bipartite cores (" +
                 std::to_string(eligible.size()) + " instances)";
    rep.instances = run_instances(static_cast<long>(eligible.size()), jobs, [&](long idx) {
        const CWStructure& spec = eligible[static_cast<std::size_t>(idx)];
        InstanceResult r;
        r.id = spec_id(spec);
        bool expected = spec.sum_s() + spec.n >= spec.sum_t() + spec.m;
        bool holds = cw_star_equality_check(spec).holds;
        r.pass = holds == expected;
        r.details = nlohmann::json{{"holds", holds}, {"expected", expected}};
        if (!r.pass) {
            r.details["spec"] = spec.to_json();
            r.details["graph"] = graph_to_json(build_cw(spec));
        }
        return r;
    });
}

// Depth is at least 2, equals 2 exactly on the three reduced patterns, and
// the Betti-table depth agrees with i(G).
void claim_depth_two(VerificationReport& rep, const RangeMap& ranges, const FieldSpec& field,
                     int jobs) {
    CorpusOptions opt = corpus_options(ranges);
    opt.max_vertices = range_int(ranges, "max_vertices", 14);
    int cutoff = range_int(ranges, "cutoff", std::max(default_betti_cutoff(), opt.max_vertices));
    auto corpus = cw_corpus(opt);
    std::vector<CWStructure> eligible;
    for (const auto& spec : corpus)
        if (!classify_cw(spec).star_convention) eligible.push_back(spec);
    rep.corpus = corpus_description(opt, corpus.size()) +
                 ", excluding star degenerations (" + std::to_string(eligible.size()) +
                 " instances)";
    rep.instances = run_instances(static_cast<long>(eligible.size()), jobs, [&](long idx) {
        const CWStructure& spec = eligible[static_cast<std::size_t>(idx)];
        InstanceResult r;
        r.id = spec_id(spec);
        SimpleGraph g = build_cw(spec);
        int idom = independence_domination(g).value;
        HomologicalReport hom = homological_report(g, field, cutoff);
        Depth2Case pattern = classify_cw(spec).depth2;
        r.pass = hom.depth == idom && hom.depth >= 2 &&
                 ((hom.depth == 2) == (pattern != Depth2Case::none));
        const char* pattern_name = pattern == Depth2Case::none ? "none"
                                   : pattern == Depth2Case::e1 ? "e1"
                                   : pattern == Depth2Case::e2 ? "e2"
                                                               : "e3";
        r.details = nlohmann::json{{"depth_betti", hom.depth},
                                   {"depth_idom", idom},
                                   {"pattern", pattern_name}};
        if (!r.pass) {
            r.details["spec"] = spec.to_json();
            r.details["graph"] = graph_to_json(g);
        }
        return r;
    });
}

// Constructions hitting prescribed dim and depth, checked homologically.
void claim_dim_depth_construction(VerificationReport& rep, const RangeMap& ranges,
                                  const FieldSpec& field, int jobs) {
    int d_max = range_int(ranges, "d_max", 8);
    int cutoff = range_int(ranges, "cutoff", 18);
    std::vector<std::pair<int, int>> params;
    for (int d = 2; d <= d_max; ++d)
        for (int e = 2; e <= d; ++e) params.emplace_back(d, e);
    rep.corpus = "all (d, e) with 2 <= e <= d <= " + std::to_string(d_max);
    rep.instances = run_instances(static_cast<long>(params.size()), jobs, [&](long idx) {
        auto [d, e] = params[static_cast<std::size_t>(idx)];
        InstanceResult r;
        r.id = "d" + std::to_string(d) + "e" + std::to_string(e);
        CWStructure spec = cw_with_dim_depth(d, e);
        SimpleGraph g = build_cw(spec);
        int dim = independence_number(g).value;
        int deg_h = *h_polynomial(g).degree();
        HomologicalReport hom = homological_report(g, field, cutoff);
        int idom = independence_domination(g).value;
        r.pass = dim == d && deg_h == d && hom.depth == e && idom == e && hom.star_equality;
        r.details = nlohmann::json{{"spec", spec.to_json()},
                                   {"dim", dim},
                                   {"deg_h", deg_h},
                                   {"depth", hom.depth},
                                   {"i", idom},
                                   {"star_equality", hom.star_equality}};
        if (!r.pass) {
            r.details["graph"] = graph_to_json(g);
            r.details["report"] = hom.to_json();
        }
        return r;
    });
}

// Constructions hitting prescribed dim, reg, depth; for depth 2 they exist
// exactly when reg = 2 or reg = dim.
void claim_dim_reg_depth_construction(VerificationReport& rep, const RangeMap& ranges,
                                      const FieldSpec& field, int jobs) {
    int d_max = range_int(ranges, "d_max", 7);
    int cutoff = range_int(ranges, "cutoff", 18);
    std::vector<std::tuple<int, int, int>> params;
    for (int d = 2; d <= d_max; ++d)
        for (int r = 2; r <= d; ++r)
            for (int e = 2; e <= r; ++e) params.emplace_back(d, r, e);
    rep.corpus = "all (d, r, e) with 2 <= e <= r <= d <= " + std::to_string(d_max);
    rep.instances = run_instances(static_cast<long>(params.size()), jobs, [&](long idx) {
        auto [d, rr, e] = params[static_cast<std::size_t>(idx)];
        InstanceResult r;
        r.id = "d" + std::to_string(d) + "r" + std::to_string(rr) + "e" + std::to_string(e);
        auto spec = cw_with_dim_reg_depth(d, rr, e);
        if (e == 2 && rr != 2 && rr != d) {
            r.pass = !spec.has_value();
            if (!r.pass) r.details = nlohmann::json{{"unexpected", spec->to_json()}};
            return r;
        }
        if (!spec) {
            r.pass = false;
            r.details = nlohmann::json{{"missing_construction", r.id}};
            return r;
        }
        SimpleGraph g = build_cw(*spec);
        int dim = independence_number(g).value;
        int deg_h = *h_polynomial(g).degree();
        int im = induced_matching_number(g).value;
        int idom = independence_domination(g).value;
        HomologicalReport hom = homological_report(g, field, cutoff);
        r.pass = dim == d && deg_h == d && hom.reg == rr && im == rr && hom.depth == e &&
                 idom == e;
        r.details = nlohmann::json{{"spec", spec->to_json()},
                                   {"dim", dim},
                                   {"deg_h", deg_h},
                                   {"reg", hom.reg},
                                   {"induced_matching", im},
                                   {"depth", hom.depth},
                                   {"i", idom}};
        if (!r.pass) {
            r.details["graph"] = graph_to_json(g);
            r.details["report"] = hom.to_json();
        }
        return r;
    });
}

// Family predictions against computed invariants.
void claim_families(VerificationReport& rep, const RangeMap& ranges, const FieldSpec& field,
                    int jobs) {
    int path_max = range_int(ranges, "path_max", 12);
    int cycle_max = range_int(ranges, "cycle_max", 12);
    int star_max = range_int(ranges, "star_max", 6);
    int gs_max = range_int(ranges, "gs_max", 6);
    int cutoff = range_int(ranges, "cutoff", 18);

    std::vector<FamilySpec> specs;
    for (int n = 2; n <= path_max; ++n) specs.push_back({FamilyKind::path, n});
    for (int n = 3; n <= cycle_max; ++n) specs.push_back({FamilyKind::cycle, n});
    for (int s = 1; s <= star_max; ++s) specs.push_back({FamilyKind::star, s});
    for (int t = 1; t <= star_max; ++t) specs.push_back({FamilyKind::star_triangle, t});
    for (int s = 1; s <= gs_max; ++s) specs.push_back({FamilyKind::g_s, s});
    rep.corpus = "paths 2.." + std::to_string(path_max) + ", cycles 3.." +
                 std::to_string(cycle_max) + ", stars and star triangles 1.." +
                 std::to_string(star_max) + ", tailed spiders 1.." + std::to_string(gs_max);

    rep.instances = run_instances(static_cast<long>(specs.size()), jobs, [&](long idx) {
        const FamilySpec& fam = specs[static_cast<std::size_t>(idx)];
        InstanceResult r;
        r.id = fam.to_string();
        FamilyPrediction pred = family_prediction(fam);
        SimpleGraph g = family_graph(fam);
        HomologicalReport hom = homological_report(g, field, cutoff);
        bool ok = true;
        nlohmann::json mismatches = nlohmann::json::object();
        auto check = [&](const char* key, const std::optional<int>& want, int got) {
            if (want && *want != got) {
                ok = false;
                mismatches[key] = nlohmann::json{{"predicted", *want}, {"computed", got}};
            }
        };
        check("dim", pred.dim, hom.dim);
        check("depth", pred.depth, hom.depth);
        check("reg", pred.reg, hom.reg);
        check("projdim", pred.projdim, hom.projdim);
        check("deg_h", pred.deg_h, hom.deg_h);
        if (pred.star_equality && *pred.star_equality != hom.star_equality) {
            ok = false;
            mismatches["star_equality"] = hom.star_equality;
        }
        if (pred.deg_h_strictly_below_dim && !(hom.deg_h < hom.dim)) {
            ok = false;
            mismatches["deg_h_strictly_below_dim"] = false;
        }
        r.pass = ok;
        r.details = nlohmann::json{{"prediction", pred.to_json()},
                                   {"computed",
                                    nlohmann::json{{"dim", hom.dim},
                                                   {"depth", hom.depth},
                                                   {"reg", hom.reg},
                                                   {"projdim", hom.projdim},
                                                   {"deg_h", hom.deg_h},
                                                   {"star_equality", hom.star_equality}}}};
        if (!ok) r.details["mismatches"] = mismatches;
        return r;
    });
}

// deg h >= reg, with equality exactly when all s_i = 1 and all t_j >= 1.
void claim_deg_h_vs_reg(VerificationReport& rep, const RangeMap& ranges, const FieldSpec&,
                        int jobs) {
    CorpusOptions opt = corpus_options(ranges);
    auto corpus = cw_corpus(opt);
    rep.corpus = corpus_description(opt, corpus.size());
    rep.instances = run_instances(static_cast<long>(corpus.size()), jobs, [&](long idx) {
        const CWStructure& spec = corpus[static_cast<std::size_t>(idx)];
        InstanceResult r;
        r.id = spec_id(spec);
        SimpleGraph g = build_cw(spec);
        int deg_h = *h_polynomial(g).degree();
        int reg = spec.sum_t() + spec.m; // validated against im(G) by the a-invariant claim
        bool flag = classify_cw(spec).h_deg_equals_reg;
        r.pass = deg_h >= reg && ((deg_h == reg) == flag);
        r.details = nlohmann::json{{"deg_h", deg_h}, {"reg", reg}, {"equality_flag", flag}};
        if (!r.pass) {
            r.details["spec"] = spec.to_json();
            r.details["graph"] = graph_to_json(g);
        }
        return r;
    });
}

// Star-packing witnesses characterize nonvanishing Betti entries on trees.
void claim_forest_nonvanishing(VerificationReport& rep, const RangeMap& ranges,
                               const FieldSpec& field, int jobs) {
    int tree_max = range_int(ranges, "tree_max", 10);
    int tree_min = range_int(ranges, "tree_min", 2);
    auto trees = all_trees(tree_min, tree_max);
    rep.corpus = "all trees with " + std::to_string(tree_min) + ".." + std::to_string(tree_max) +
                 " vertices (" + std::to_string(trees.size()) + " instances)";
    FieldSpec second = FieldSpec::gf(2);
    rep.instances = run_instances(static_cast<long>(trees.size()), jobs, [&](long idx) {
        const SimpleGraph& g = trees[static_cast<std::size_t>(idx)];
        InstanceResult r;
        r.id = "tree" + std::to_string(g.vertex_count()) + "#" + std::to_string(idx);
        int n = g.vertex_count();
        BettiTable t1 = betti_table(g, field, std::max(n, default_betti_cutoff()));
        BettiTable t2 = betti_table(g, second, std::max(n, default_betti_cutoff()));
        int max_ell = induced_matching_number(g).value + 1;
        bool ok = true;
        nlohmann::json bad = nlohmann::json::array();
        for (int ell = 1; ell <= max_ell && ok; ++ell) {
            for (int i = ell; i <= n && ok; ++i) {
                bool witness = betti_nonvanishing_witness(g, i, ell).has_value();
                bool nz1 = t1.beta(i, i + ell) != 0;
                bool nz2 = t2.beta(i, i + ell) != 0;
                if (witness != nz1 || witness != nz2) {
                    ok = false;
                    bad.push_back(nlohmann::json{{"i", i},
                                                 {"ell", ell},
                                                 {"witness", witness},
                                                 {"beta_q", nz1},
                                                 {"beta_f2", nz2}});
                }
            }
        }
        r.pass = ok;
        r.details = nlohmann::json{{"projdim_q", t1.projdim()}, {"reg_q", t1.regularity()}};
        if (!ok) {
            r.details["graph"] = graph_to_json(g);
            r.details["mismatches"] = bad;
        }
        return r;
    });
}

const std::map<std::string, ClaimFn>& claim_table() {
    static const std::map<std::string, ClaimFn> table = {
        {"thm-1.1", claim_a_invariant},
        {"prop-1.3", claim_dim_formula},
        {"lem-1.6", claim_star_series},
        {"lem-1.7", claim_star_triangle_series},
        {"lem-2.1", claim_idom_bounds},
        {"thm-2.2", claim_star_equality_classification},
        {"cor-2.4", claim_t_le_1},
        {"cor-2.6", claim_complete_bipartite},
        {"prop-2.8", claim_depth_two},
        {"cor-2.9", claim_dim_depth_construction},
        {"prop-2.11", claim_families},
        {"thm-3.1", claim_deg_h_vs_reg},
        {"thm-3.4", claim_dim_reg_depth_construction},
        {"lem-2.10-forest", claim_forest_nonvanishing},
    };
    return table;
}

} // namespace

std::vector<std::string> known_claims() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : claim_table()) out.push_back(name);
    return out;
}

VerificationReport run_verify(const std::string& claim, const RangeMap& ranges,
                              const FieldSpec& field, int jobs) {
    auto it = claim_table().find(claim);
    if (it == claim_table().end())
        throw std::invalid_argument("unknown claim id: " + claim);
    VerificationReport rep;
    rep.claim = claim;
    rep.field = field.name();
    rep.version = eil_version;
    auto start = std::chrono::steady_clock::now();
    it->second(rep, ranges, field, jobs);
    auto end = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    rep.instance_count = static_cast<long>(rep.instances.size());
    rep.all_pass = std::all_of(rep.instances.begin(), rep.instances.end(),
                               [](const InstanceResult& r) { return r.pass; });
    return rep;
}

} // namespace eil
