#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"
#include "linkless/enumerate.hpp"
#include "linkless/minors.hpp"
#include "linkless/named.hpp"

namespace linkless {

using Rational = boost::rational<long long>;

/// Raised when a request is outside the documented practicality caps.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for requests outside a bound's hypotheses (e.g. n too small).
class ExtremalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Practicality caps. Scans beyond these are refused rather than left to run
// for hours.
inline constexpr int kBipartiteMaxN = 10;
inline constexpr int kCompleteMinorMaxP = 6;
inline constexpr int kCompleteMinorMaxN = 8;
inline constexpr int kTriangleFreeMaxN = 10;
inline constexpr int kTriangleFullMaxN = 9;
inline constexpr int kBipartiteKpMaxP = 6;
inline constexpr int kBipartiteKpMaxN = 10;

enum class MinorExclusion { petersen_family, complete_graph, four_graph_family };

inline std::string to_string(MinorExclusion m) {
    switch (m) {
        case MinorExclusion::petersen_family: return "petersen_family";
        case MinorExclusion::complete_graph: return "K_p";
        case MinorExclusion::four_graph_family: return "four_graph_family";
    }
    return "?";
}

struct BoundSpec {
    std::string name;
    std::string formula;
    ClassFilter class_filter = ClassFilter::all;
    MinorExclusion minor_exclusion = MinorExclusion::petersen_family;
    /// Named-graph patterns, with n substituted, that may exceed the bound.
    std::vector<std::string> exception_graphs;
    /// Open statements get evidence verdicts, never "verified".
    bool conjecture = false;
};

inline BoundSpec bound_spec(const std::string& name) {
    if (name == "bipartite") {
        return {"bipartite", "3n-10", ClassFilter::bipartite, MinorExclusion::petersen_family, {"K_{3,n-3}"}, false};
    }
    if (name == "four_pattern") {
        return {"four_pattern", "3n-10", ClassFilter::bipartite, MinorExclusion::four_graph_family, {"K_{3,n-3}"}, false};
    }
    if (name == "complete_minor") {
        return {"complete_minor", "(p-2)n-C(p-1,2)", ClassFilter::all, MinorExclusion::complete_graph, {}, false};
    }
    if (name == "trfree" || name == "triangle_free_3n10") {
        return {"trfree", "3n-10", ClassFilter::triangle_free, MinorExclusion::petersen_family, {"K_{3,n-3}"}, true};
    }
    if (name == "trfull" || name == "trfull_t_over_3") {
        return {"trfull", "3n-9+t/3", ClassFilter::all, MinorExclusion::petersen_family, {}, true};
    }
    if (name == "kp" || name == "bipartite_kp") {
        return {"kp", "(p-2)n-(p-2)^2", ClassFilter::bipartite, MinorExclusion::complete_graph, {}, true};
    }
    throw ExtremalError("unknown bound '" + name + "'");
}

/// Exact value of a named edge bound. `p` and `t` are ignored by bounds that
/// do not use them.
inline Rational edge_bound(const std::string& name, long long n, long long p = 0, long long t = 0) {
    const std::string key = bound_spec(name).name;
    if (key == "bipartite" || key == "four_pattern" || key == "trfree") return Rational(3 * n - 10);
    if (key == "trfull") return Rational(3 * n - 9) + Rational(t, 3);
    if (key == "complete_minor") return Rational((p - 2) * n - (p - 1) * (p - 2) / 2);
    return Rational((p - 2) * n - (p - 2) * (p - 2));  // kp
}

inline std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

enum class Verdict { verified, counterexample, no_counterexample_at_n };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::counterexample: return "counterexample";
        case Verdict::no_counterexample_at_n: return "no-counterexample-at-n";
    }
    return "?";
}

/// A scanned graph above the bound that avoids every excluded minor.
struct Violator {
    std::string graph6;
    int edges = 0;
    long long triangles = 0;
    /// "none" when no excluded minor was found.
    std::string obstruction = "none";
    /// Isomorphic to one of the bound's stated exceptions.
    bool exception = false;
};

struct SpotCheck {
    long long checked = 0;
    long long mismatches = 0;
};

struct VerificationReport {
    BoundSpec spec;
    int n = 0;
    std::optional<int> p;
    long long classes_scanned = 0;
    /// Scanned graphs whose edge count exceeds the bound.
    long long candidates_at_or_above_bound = 0;
    std::vector<Violator> violators;
    /// For bounds with a stated exception: the exception itself avoids the
    /// excluded minors and has exactly one edge more than the bound.
    std::optional<bool> exception_tight;
    /// Graphs on which the four-pattern test and the Petersen-family test
    /// disagree (four_pattern only).
    std::optional<std::vector<std::string>> disagreements;
    std::optional<SpotCheck> spot_check;
    std::chrono::milliseconds elapsed{0};
    Verdict verdict = Verdict::verified;

    std::size_t exception_count() const {
        return static_cast<std::size_t>(std::count_if(violators.begin(), violators.end(), [](const Violator& v) { return v.exception; }));
    }
};

struct ScanOptions {
    int jobs = 1;
    /// Fraction of scanned graphs re-decided by the contraction-based minor
    /// test; at least one graph is checked when positive.
    double spot_check_rate = 0.0;
};

namespace detail {

struct Classified {
    bool above = false;
    bool avoids = false;  // avoids every excluded minor
    std::optional<bool> secondary;
    bool spot_checked = false;
    bool spot_mismatch = false;
};

inline std::vector<std::size_t> spot_check_indices(std::size_t count, double rate) {
    if (rate <= 0.0 || count == 0) return {};
    std::size_t k = std::max<std::size_t>(1, static_cast<std::size_t>(static_cast<double>(count) * rate));
    k = std::min(k, count);
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng(0x6c696e6bULL);
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, count - 1);
        std::swap(idx[i], idx[pick(rng)]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

inline std::vector<Graph> excluded_patterns(MinorExclusion m, int p) {
    switch (m) {
        case MinorExclusion::petersen_family: return petersen_family().members;
        case MinorExclusion::complete_graph: return {complete_graph(p)};
        case MinorExclusion::four_graph_family: {
            std::vector<Graph> out;
            for (const auto& entry : bipartite_obstructions()) out.push_back(entry.second);
            return out;
        }
    }
    return {};
}

/// Shared scan: enumerate the class with |E| >= min_edges, decide each
/// graph, and fold the results in enumeration order.
inline VerificationReport scan(const BoundSpec& spec, int n, std::optional<int> p, int min_edges,
                               const std::function<bool(const Graph&)>& above, const ScanOptions& options,
                               bool cross_check_family = false) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.spec = spec;
    report.n = n;
    report.p = p;

    std::vector<Graph> graphs;
    if (min_edges <= n * (n - 1) / 2) {
        EnumerationSpec es{n, spec.class_filter, std::max(0, min_edges), -1, false};
        graphs = Enumerator(es).collect(options.jobs);
    }
    const std::vector<Graph> patterns = excluded_patterns(spec.minor_exclusion, p.value_or(0));
    const auto spot = spot_check_indices(graphs.size(), options.spot_check_rate);

    std::vector<Classified> results(graphs.size());
    parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
        const Graph& g = graphs[i];
        Classified& c = results[i];
        c.above = above(g);
        if (!c.above && !cross_check_family) return;
        c.avoids = true;
        for (const Graph& pattern : patterns) {
            if (has_minor(g, pattern)) {
                c.avoids = false;
                break;
            }
        }
        if (cross_check_family) c.secondary = is_linkless(g);
        if (std::binary_search(spot.begin(), spot.end(), i)) {
            c.spot_checked = true;
            bool avoids_again = true;
            for (const Graph& pattern : patterns) avoids_again = avoids_again && !has_minor_by_contraction(g, pattern);
            c.spot_mismatch = avoids_again != c.avoids;
        }
    });

    std::optional<Graph> exception;
    if (!spec.exception_graphs.empty() && n >= 4) exception = complete_bipartite(3, n - 3);

    report.classes_scanned = static_cast<long long>(graphs.size());
    if (cross_check_family) report.disagreements.emplace();
    if (options.spot_check_rate > 0.0) report.spot_check.emplace();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        const Classified& c = results[i];
        if (c.spot_checked) {
            ++report.spot_check->checked;
            report.spot_check->mismatches += c.spot_mismatch ? 1 : 0;
        }
        if (c.secondary && *c.secondary != c.avoids) report.disagreements->push_back(to_graph6(g));
        if (!c.above) continue;
        ++report.candidates_at_or_above_bound;
        if (!c.avoids) continue;
        Violator v;
        v.graph6 = to_graph6(g);
        v.edges = g.edge_count();
        v.triangles = triangle_count(g);
        v.exception = exception && are_isomorphic(g, *exception);
        report.violators.push_back(std::move(v));
    }
    std::sort(report.violators.begin(), report.violators.end(),
              [](const Violator& a, const Violator& b) { return a.graph6 < b.graph6; });
    if (report.disagreements) std::sort(report.disagreements->begin(), report.disagreements->end());

    if (exception) {
        bool avoids = true;
        for (const Graph& pattern : patterns) avoids = avoids && !has_minor(*exception, pattern);
        const Rational b = edge_bound(spec.name, n);
        report.exception_tight = avoids && Rational(exception->edge_count()) == b + 1;
    }

    const bool clean = std::none_of(report.violators.begin(), report.violators.end(),
                                    [](const Violator& v) { return !v.exception; });
    if (!clean) {
        report.verdict = Verdict::counterexample;
    } else {
        report.verdict = spec.conjecture ? Verdict::no_counterexample_at_n : Verdict::verified;
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

// Smallest integer strictly greater than the bound.
inline int first_violating_edge_count(const Rational& bound) {
    long long q = bound.numerator() / bound.denominator();
    if (bound.numerator() < 0 && q * bound.denominator() != bound.numerator()) --q;
    return static_cast<int>(q + 1);
}

}  // namespace detail

/// Bipartite graphs on n vertices with more than 3n-10 edges that have no
/// Petersen-family minor; only K_{3,n-3} is allowed.
inline VerificationReport verify_bipartite_bound(int n, const ScanOptions& options = {}) {
    if (n < 5) throw ExtremalError("the bound holds for n >= 5");
    if (n > kBipartiteMaxN) throw CapExceeded("n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kBipartiteMaxN));
    const Rational bound = edge_bound("bipartite", n);
    return detail::scan(bound_spec("bipartite"), n, std::nullopt, detail::first_violating_edge_count(bound),
                        [bound](const Graph& g) { return Rational(g.edge_count()) > bound; }, options);
}

/// Same scan with the four bipartite obstructions in place of the Petersen
/// family; every scanned graph is also classified by the Petersen-family
/// test and disagreements are listed.
inline VerificationReport verify_four_pattern_bound(int n, const ScanOptions& options = {}) {
    if (n < 5) throw ExtremalError("the bound holds for n >= 5");
    if (n > kBipartiteMaxN) throw CapExceeded("n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kBipartiteMaxN));
    const Rational bound = edge_bound("four_pattern", n);
    return detail::scan(bound_spec("four_pattern"), n, std::nullopt, detail::first_violating_edge_count(bound),
                        [bound](const Graph& g) { return Rational(g.edge_count()) > bound; }, options, true);
}

/// Every graph on n vertices with more than (p-2)n - C(p-1,2) edges has a
/// K_p minor.
inline VerificationReport verify_complete_minor_bound(int p, int n, const ScanOptions& options = {}) {
    if (p < 2 || p > 7) throw ExtremalError("p must lie in 2..7");
    if (n < p - 1) throw ExtremalError("the bound holds for n >= p-1");
    if (p > kCompleteMinorMaxP || n > kCompleteMinorMaxN) {
        throw CapExceeded("(p, n) = (" + std::to_string(p) + ", " + std::to_string(n) + ") exceeds the caps p <= " +
                          std::to_string(kCompleteMinorMaxP) + ", n <= " + std::to_string(kCompleteMinorMaxN));
    }
    const Rational bound = edge_bound("complete_minor", n, p);
    return detail::scan(bound_spec("complete_minor"), n, p, detail::first_violating_edge_count(bound),
                        [bound](const Graph& g) { return Rational(g.edge_count()) > bound; }, options);
}

/// Exhaustive evidence for one of the open statements at a single n.
/// Names: trfree (triangle_free_3n10), trfull (trfull_t_over_3),
/// kp (bipartite_kp).
inline VerificationReport check_conjecture(const std::string& name, int n, std::optional<int> p = std::nullopt,
                                           const ScanOptions& options = {}) {
    const BoundSpec spec = bound_spec(name);
    if (spec.name == "trfree") {
        if (n < 5) throw ExtremalError("the statement concerns n >= 5");
        if (n > kTriangleFreeMaxN) throw CapExceeded("n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kTriangleFreeMaxN));
        const Rational bound = edge_bound("trfree", n);
        return detail::scan(spec, n, std::nullopt, detail::first_violating_edge_count(bound),
                            [bound](const Graph& g) { return Rational(g.edge_count()) > bound; }, options);
    }
    if (spec.name == "trfull") {
        if (n < 7) throw ExtremalError("the statement concerns n >= 7");
        if (n > kTriangleFullMaxN) throw CapExceeded("n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kTriangleFullMaxN));
        // t >= 0, so a violator has |E| > 3n-9.
        return detail::scan(spec, n, std::nullopt, detail::first_violating_edge_count(edge_bound("trfull", n, 0, 0)),
                            [n](const Graph& g) {
                                return Rational(g.edge_count()) > edge_bound("trfull", n, 0, triangle_count(g));
                            },
                            options);
    }
    if (spec.name == "kp") {
        if (!p) throw ExtremalError("the bipartite K_p statement needs p");
        if (*p < 2 || *p > 8) throw ExtremalError("p must lie in 2..8");
        if (n < 2 * *p - 5) throw ExtremalError("the statement concerns n >= 2p-5");
        if (*p > kBipartiteKpMaxP || n > kBipartiteKpMaxN) {
            throw CapExceeded("(p, n) = (" + std::to_string(*p) + ", " + std::to_string(n) + ") exceeds the caps p <= " +
                              std::to_string(kBipartiteKpMaxP) + ", n <= " + std::to_string(kBipartiteKpMaxN));
        }
        const Rational bound = edge_bound("kp", n, *p);
        return detail::scan(spec, n, p, detail::first_violating_edge_count(bound),
                            [bound](const Graph& g) { return Rational(g.edge_count()) > bound; }, options);
    }
    throw ExtremalError("'" + name + "' is not an open statement; use the verify operations");
}

// ---------------------------------------------------------------------------
// Report rendering. Elapsed time is printed only on request so that reports
// compare byte-for-byte across runs and worker counts.

inline nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_timing = false) {
    nlohmann::ordered_json j;
    j["bound"] = r.spec.name;
    j["formula"] = r.spec.formula;
    j["class"] = to_string(r.spec.class_filter);
    j["excluded_minors"] = to_string(r.spec.minor_exclusion);
    j["exceptions"] = r.spec.exception_graphs;
    j["conjecture"] = r.spec.conjecture;
    j["n"] = r.n;
    if (r.p) j["p"] = *r.p;
    if (r.spec.name != "trfull") j["bound_value"] = format_rational(edge_bound(r.spec.name, r.n, r.p.value_or(0)));
    j["classes_scanned"] = r.classes_scanned;
    j["candidates_at_or_above_bound"] = r.candidates_at_or_above_bound;
    auto violators = nlohmann::ordered_json::array();
    for (const Violator& v : r.violators) {
        nlohmann::ordered_json jv;
        jv["graph6"] = v.graph6;
        jv["edges"] = v.edges;
        jv["triangles"] = v.triangles;
        jv["obstruction"] = v.obstruction;
        jv["exception"] = v.exception;
        violators.push_back(std::move(jv));
    }
    j["violators"] = std::move(violators);
    if (r.exception_tight) j["exception_tight"] = *r.exception_tight;
    if (r.disagreements) j["disagreements"] = *r.disagreements;
    if (r.spot_check) j["spot_check"] = {{"checked", r.spot_check->checked}, {"mismatches", r.spot_check->mismatches}};
    if (include_timing) j["elapsed_ms"] = r.elapsed.count();
    j["verdict"] = to_string(r.verdict);
    return j;
}

inline std::string report_to_text(const VerificationReport& r, bool include_timing = false) {
    std::ostringstream out;
    out << "bound:            " << r.spec.name << "  |E| <= " << r.spec.formula << "  (class " << to_string(r.spec.class_filter)
        << ", excluding " << to_string(r.spec.minor_exclusion) << ")\n";
    out << "n:                " << r.n << "\n";
    if (r.p) out << "p:                " << *r.p << "\n";
    if (r.spec.name != "trfull") out << "bound value:      " << format_rational(edge_bound(r.spec.name, r.n, r.p.value_or(0))) << "\n";
    out << "classes scanned:  " << r.classes_scanned << "\n";
    out << "above bound:      " << r.candidates_at_or_above_bound << "\n";
    out << "violators:        " << r.violators.size() << (r.violators.empty() ? "\n" : " (graph6, |E|, t, status)\n");
    for (const Violator& v : r.violators) {
        out << "  " << v.graph6 << "  " << v.edges << "  " << v.triangles << "  "
            << (v.exception ? "exception " + r.spec.exception_graphs.front() : "counterexample") << "\n";
    }
    if (r.exception_tight) out << "exception tight:  " << (*r.exception_tight ? "yes" : "no") << "\n";
    if (r.disagreements) out << "disagreements:    " << r.disagreements->size() << "\n";
    if (r.spot_check) out << "spot check:       " << r.spot_check->checked << " checked, " << r.spot_check->mismatches << " mismatches\n";
    if (include_timing) out << "elapsed:          " << r.elapsed.count() << " ms\n";
    out << "verdict:          " << to_string(r.verdict) << "\n";
    return out.str();
}

}  // namespace linkless
