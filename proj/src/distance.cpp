#include "barbilian/distance.hpp"

#include "barbilian/error.hpp"
#include "barbilian/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace barbilian {

DistanceResult barbilian_distance(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b,
                                  const SearchOptions& opts) {
    DistanceResult r;
    r.sup = sup_ratio(spec, domain, a, b, opts);
    if (a == b) {
        r.inf = r.sup;
        r.distance = 0.0;
        return r;
    }
    const ExtremumResult sup_ba = sup_ratio(spec, domain, b, a, opts);
    r.inf = sup_ba;
    r.inf.value = 1.0 / sup_ba.value;
    r.inf.log_value = -sup_ba.log_value;
    r.distance = std::max(0.0, r.sup.log_value + sup_ba.log_value);
    return r;
}

namespace {

// Runs body(i) for i in [0, n) on a few threads; the first exception is rethrown.
template <class Body>
void parallel_for(std::int64_t n, Body body) {
    const auto workers =
        static_cast<std::int64_t>(std::clamp<unsigned>(std::thread::hardware_concurrency(), 1u, 16u));
    std::atomic<std::int64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::int64_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::int64_t w = 1; w < std::min(workers, n); ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace

AxiomReport check_axioms(const InfluenceSpec& spec, const Domain& domain, std::int64_t n_triples, std::uint64_t seed,
                         const SearchOptions& opts, const SamplerOptions& sampler_opts) {
    if (n_triples < 1) fail(ErrorCode::Usage, "check_axioms needs at least one triple");
    opts.validate();
    check_compatible(spec, domain);

    JSampler sampler(domain, seed, sampler_opts.allow_near_boundary, sampler_opts.near_boundary);
    std::vector<std::array<Point3, 3>> triples(static_cast<std::size_t>(n_triples));
    for (auto& t : triples) t = {sampler.next(), sampler.next(), sampler.next()};

    struct Violations {
        double symmetry = 0.0;
        double triangle = 0.0;
        double identity = 0.0;
    };
    std::vector<Violations> found(triples.size());
    parallel_for(n_triples, [&](std::int64_t i) {
        const auto& [a, b, c] = triples[static_cast<std::size_t>(i)];
        const double ab = barbilian_distance(spec, domain, a, b, opts).distance;
        const double ba = barbilian_distance(spec, domain, b, a, opts).distance;
        const double ac = barbilian_distance(spec, domain, a, c, opts).distance;
        const double bc = barbilian_distance(spec, domain, b, c, opts).distance;
        const double aa = barbilian_distance(spec, domain, a, a, opts).distance;
        auto& v = found[static_cast<std::size_t>(i)];
        v.symmetry = std::abs(ab - ba);
        v.triangle = std::max(0.0, ac - ab - bc);
        v.identity = std::abs(aa);
    });

    AxiomReport report;
    report.n_samples = n_triples;
    report.worst_triple = triples.front();
    double worst = -1.0;
    for (std::size_t i = 0; i < found.size(); ++i) {
        report.max_symmetry_violation = std::max(report.max_symmetry_violation, found[i].symmetry);
        report.max_identity_violation = std::max(report.max_identity_violation, found[i].identity);
        report.max_triangle_violation = std::max(report.max_triangle_violation, found[i].triangle);
        if (found[i].triangle > worst) {
            worst = found[i].triangle;
            report.worst_triple = triples[i];
        }
    }
    return report;
}

PositivityReport positivity_check(const InfluenceSpec& spec, const Domain& domain, std::int64_t n_pairs,
                                  std::uint64_t seed, double min_separation, const SearchOptions& opts,
                                  const SamplerOptions& sampler_opts) {
    if (n_pairs < 1) fail(ErrorCode::Usage, "positivity_check needs at least one pair");
    JSampler sampler(domain, seed, sampler_opts.allow_near_boundary, sampler_opts.near_boundary);
    std::vector<std::array<Point3, 2>> pairs;
    while (static_cast<std::int64_t>(pairs.size()) < n_pairs) {
        const auto [a, b] = sampler.next_pair();
        if (distance(a, b) >= min_separation) pairs.push_back({a, b});
    }
    std::vector<double> d(pairs.size());
    parallel_for(n_pairs, [&](std::int64_t i) {
        const auto& [a, b] = pairs[static_cast<std::size_t>(i)];
        d[static_cast<std::size_t>(i)] = barbilian_distance(spec, domain, a, b, opts).distance;
    });
    PositivityReport report;
    report.n_pairs = n_pairs;
    report.min_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < report.min_distance) {
            report.min_distance = d[i];
            report.argmin_pair = pairs[i];
        }
    }
    return report;
}

} // namespace barbilian
