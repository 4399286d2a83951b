// Monte Carlo estimation of limit probabilities over G(n, n^{-alpha}):
// deterministic per-trial sampling, Wilson intervals, Poisson limits for
// rare-subgraph and tree-component counts, a catalog of structural probes,
// and grid sweeps with CSV/JSON reports.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rgl/builtins.hpp"
#include "rgl/errors.hpp"
#include "rgl/eval.hpp"
#include "rgl/graph.hpp"
#include "rgl/graph_algorithms.hpp"
#include "rgl/oracles.hpp"
#include "rgl/rational.hpp"
#include "rgl/rng.hpp"
#include "rgl/types.hpp"

namespace rgl {

struct SpectrumEstimate {
    std::string target;
    Rational alpha{1, 1};
    int n = 0;
    long long trials = 0;
    long long successes = 0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    std::uint64_t seed = 0;

    double p_hat() const {
        return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
    }
};

// 95% Wilson score interval; the empty sample yields the vacuous [0,1].
inline std::pair<double, double> wilson_interval(long long successes, long long trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    double nn = static_cast<double>(trials);
    double p = static_cast<double>(successes) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double center = (p + z2 / (2.0 * nn)) / denom;
    double spread = (z / denom) * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    double lo = center - spread, hi = center + spread;
    if (lo < 0.0) lo = 0.0;
    if (hi > 1.0) hi = 1.0;
    return {lo, hi};
}

// A named deterministic graph predicate: a sentence, an oracle, or a probe.
struct SpectrumTarget {
    std::string name;
    std::function<bool(const Graph&)> predicate;
};

inline SpectrumTarget target_oracle(BuiltinName b) {
    return {builtin_to_string(b), [b](const Graph& g) { return oracle(g, b); }};
}

inline SpectrumTarget target_formula(const FormulaPtr& phi, std::string name) {
    return {std::move(name), [phi](const Graph& g) { return eval_sentence(g, phi); }};
}

using Probe = SpectrumTarget;

namespace detail_spectrum {

inline int worker_count() {
    const char* env = std::getenv("RGL_THREADS");
    if (!env) return 1;
    int k = std::atoi(env);
    return k < 1 ? 1 : k;
}

// Greedy independent set by repeated minimum-degree selection; a lower
// bound on the independence number, used as its Monte Carlo proxy.
inline int greedy_independent_set(const Graph& g) {
    std::vector<bool> dead(g.n(), false);
    int size = 0;
    while (true) {
        int best = -1, best_deg = g.n() + 1;
        for (int v = 0; v < g.n(); ++v) {
            if (dead[v]) continue;
            int d = 0;
            for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
                if (!dead[u]) ++d;
            if (d < best_deg) {
                best = v;
                best_deg = d;
            }
        }
        if (best < 0) return size;
        ++size;
        dead[best] = true;
        for (int u = g.neighbors(best).first(); u != -1; u = g.neighbors(best).next(u))
            dead[u] = true;
    }
}

inline bool strictly_balanced(const Graph& h) {
    if (h.n() < 2) return false;
    double own = static_cast<double>(h.m()) / h.n();
    for (int mask = 1; mask < (1 << h.n()) - 1; ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < h.n(); ++v)
            if (mask & (1 << v)) vs.push_back(v);
        if (vs.size() < 2) continue;
        Graph sub = h.induced(vs);
        if (static_cast<double>(sub.m()) / sub.n() >= own - 1e-12) return false;
    }
    return true;
}

} // namespace detail_spectrum

// Catalog of structural predicates.  Entries whose thresholds depend on the
// sampling exponent take it as a parameter; all are deterministic per graph.
inline Probe probe_catalog(const std::string& name, const Rational& alpha) {
    double a = alpha.to_double();
    if (name == "deg_concentration") {
        return {name, [a](const Graph& g) {
                    double n = g.n();
                    double mean = std::pow(n, 1.0 - a);
                    double slack = 3.0 * std::pow(n, (1.0 - a) / 2.0) * std::sqrt(std::log(n));
                    for (int v = 0; v < g.n(); ++v)
                        if (std::abs(g.degree(v) - mean) > slack) return false;
                    return true;
                }};
    }
    if (name == "indep_number_window") {
        // Greedy proxy: the greedy set is a lower bound, so it must stay
        // under the asymptotic ceiling of the independence number.
        return {name, [a](const Graph& g) {
                    double n = g.n();
                    double ceiling = 2.0 * (1.0 - a) * std::pow(n, a) * std::log(n);
                    return detail_spectrum::greedy_independent_set(g) <= ceiling;
                }};
    }
    if (name == "nested_neighborhoods") {
        return {name, [](const Graph& g) {
                    for (int u = 0; u < g.n(); ++u)
                        for (int v = 0; v < g.n(); ++v) {
                            if (u == v) continue;
                            if (g.neighbors(u).is_subset_of(g.neighbors(v)) &&
                                g.neighbors(u) != g.neighbors(v))
                                return false;
                        }
                    return true;
                }};
    }
    if (name == "k2m_free") {
        // No complete bipartite subgraph with two vertices on one side and
        // ceil(n^{1/3} ln ln n) on the other.
        return {name, [](const Graph& g) {
                    double n = g.n();
                    int m = static_cast<int>(std::ceil(std::pow(n, 1.0 / 3.0) *
                                                       std::log(std::log(n))));
                    for (int u = 0; u < g.n(); ++u)
                        for (int v = u + 1; v < g.n(); ++v)
                            if (g.neighbors(u).intersect_count(g.neighbors(v)) >= m)
                                return false;
                    return true;
                }};
    }
    if (name == "common_neighbors_floor") {
        return {name, [](const Graph& g) {
                    int m = static_cast<int>(std::ceil(std::pow(g.n(), 1.0 / 3.0)));
                    for (int u = 0; u < g.n(); ++u)
                        for (int v = u + 1; v < g.n(); ++v)
                            if (g.neighbors(u).intersect_count(g.neighbors(v)) < m)
                                return false;
                    return true;
                }};
    }
    if (name == "indep_neighborhood_vertex") {
        return {name, [](const Graph& g) {
                    for (int v = 0; v < g.n(); ++v) {
                        if (g.degree(v) == 0) continue;
                        bool indep = true;
                        const Bitset& nb = g.neighbors(v);
                        for (int u = nb.first(); u != -1 && indep; u = nb.next(u))
                            if (nb.intersects(g.neighbors(u))) indep = false;
                        if (indep) return true;
                    }
                    return false;
                }};
    }
    if (name == "outside_common_exists") {
        // Eight deterministic pseudo-random nontrivial subsets per graph;
        // each must have an outside-common vertex on the chosen side.
        return {name, [](const Graph& g) {
                    if (g.n() < 4) return false;
                    for (int s = 0; s < 8; ++s) {
                        Bitset x(g.n());
                        for (int v = 0; v < g.n(); ++v)
                            if (mix64(0xc0ffee00u + s, v) & 1) x.set(v);
                        if (x.count() < 2 || g.n() - x.count() < 2) continue;
                        bool found = false;
                        for (int v = 0; v < g.n() && !found; ++v)
                            if (!x.test(v) && classify_vertex(g, x, v).outside == Axis::Common)
                                found = true;
                        if (!found) return false;
                    }
                    return true;
                }};
    }
    if (name == "forest_and_component_bound") {
        // Meaningful past the forest threshold: exponent 1 + 1/l bounds
        // components by l+1 vertices.
        if (alpha.num <= alpha.den) throw AlphaOutOfRange("probe needs an exponent above 1");
        long long ell_num = alpha.den, ell_den = alpha.num - alpha.den;
        if (ell_num % ell_den != 0)
            throw AlphaOutOfRange("exponent must be 1 + 1/l for integer l");
        long long ell = ell_num / ell_den;
        return {name, [ell](const Graph& g) {
                    if (!is_forest(g)) return false;
                    for (const auto& c : components(g))
                        if (static_cast<long long>(c.size()) > ell + 1) return false;
                    return true;
                }};
    }
    throw UnknownProbe("no probe named " + name);
}

inline SpectrumEstimate estimate(const SpectrumTarget& target, const Rational& alpha, int n,
                                 long long trials, std::uint64_t seed) {
    SpectrumEstimate est;
    est.target = target.name;
    est.alpha = alpha;
    est.n = n;
    est.trials = trials;
    est.seed = seed;

    int workers = detail_spectrum::worker_count();
    if (workers > trials) workers = trials > 0 ? static_cast<int>(trials) : 1;
    std::vector<long long> partial(workers, 0);
    std::exception_ptr failure;
    auto run = [&](int w) {
        try {
            long long count = 0;
            for (long long t = w; t < trials; t += workers) {
                Graph g = gen_gnp(n, alpha, mix64(seed, static_cast<std::uint64_t>(t)));
                if (target.predicate(g)) ++count;
            }
            partial[w] = count;
        } catch (...) {
            if (!failure) failure = std::current_exception();
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    for (long long c : partial) est.successes += c;
    auto [lo, hi] = wilson_interval(est.successes, est.trials);
    est.ci_low = lo;
    est.ci_high = hi;
    return est;
}

enum class LimitKind { SubgraphCopies, TreeComponent };

// Probability that no copy (as a subgraph / as a whole component) appears
// in the limit, i.e. exp(-lambda) with lambda = 1/|Aut|.  The vanishing
// isolation factor of component counts is dropped, as it tends to one at
// the threshold.
inline double poisson_limit(LimitKind kind, const Graph& h, const Rational& alpha) {
    if (kind == LimitKind::SubgraphCopies) {
        if (!detail_spectrum::strictly_balanced(h))
            throw NotStrictlyBalanced("pattern is not strictly balanced");
        if (!(max_density(h) == Rational(alpha.den, alpha.num)))
            throw NotAtThreshold("exponent is not the reciprocal of the maximum density");
    } else {
        if (!is_forest(h) || components(h).size() != 1)
            throw NotAtThreshold("component pattern must be a tree");
        long long ell = h.n() - 1;
        if (ell < 1 || !(alpha == Rational(ell + 1, ell)))
            throw NotAtThreshold("exponent must be (l+1)/l for the tree's edge count l");
    }
    return std::exp(-1.0 / static_cast<double>(automorphism_count(h)));
}

struct SweepReport {
    std::vector<SpectrumEstimate> rows;

    std::string to_csv() const {
        std::string out = "target,alpha_num,alpha_den,n,trials,successes,p_hat,ci_low,ci_high,seed\n";
        char buf[160];
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%s,%lld,%lld,%d,%lld,%lld,%.6f,%.6f,%.6f,%llu\n",
                          r.target.c_str(), static_cast<long long>(r.alpha.num),
                          static_cast<long long>(r.alpha.den), r.n, r.trials, r.successes,
                          r.p_hat(), r.ci_low, r.ci_high,
                          static_cast<unsigned long long>(r.seed));
            out += buf;
        }
        return out;
    }

    std::string to_json() const {
        std::string out = "[";
        char buf[240];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            std::snprintf(buf, sizeof buf,
                          "%s{\"target\":\"%s\",\"alpha_num\":%lld,\"alpha_den\":%lld,"
                          "\"n\":%d,\"trials\":%lld,\"successes\":%lld,\"p_hat\":%.6f,"
                          "\"ci_low\":%.6f,\"ci_high\":%.6f,\"seed\":%llu}",
                          i ? "," : "", r.target.c_str(), static_cast<long long>(r.alpha.num),
                          static_cast<long long>(r.alpha.den), r.n, r.trials, r.successes,
                          r.p_hat(), r.ci_low, r.ci_high,
                          static_cast<unsigned long long>(r.seed));
            out += buf;
        }
        return out + "]";
    }
};

// Cross product of targets, exponents and sizes; each row draws from a seed
// derived by the row index so reports are reproducible and order-stable.
inline SweepReport sweep(const std::vector<SpectrumTarget>& targets,
                         const std::vector<Rational>& alphas, const std::vector<int>& ns,
                         long long trials, std::uint64_t seed) {
    SweepReport report;
    std::uint64_t row = 0;
    for (const auto& target : targets)
        for (const auto& alpha : alphas)
            for (int n : ns)
                report.rows.push_back(estimate(target, alpha, n, trials, mix64(seed, row++)));
    return report;
}

} // namespace rgl
