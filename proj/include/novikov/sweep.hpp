#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace novikov {

enum class Execution { Serial, Parallel };

/// Outcome of one case of a sweep. metric carries the worst residual for
/// numeric checks and stays 0 for exact ones.
struct CaseOutcome {
    bool ok = true;
    std::string witness;
    double metric = 0.0;
};

struct SweepResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double max_metric = 0.0;
    std::vector<std::string> witnesses;  // first few failures, in case order

    bool ok() const { return failures == 0; }
};

inline constexpr std::size_t kMaxWitnesses = 5;

namespace detail {

inline SweepResult aggregate(std::string name, const std::vector<CaseOutcome>& outcomes) {
    SweepResult r;
    r.name = std::move(name);
    r.cases = outcomes.size();
    for (const auto& o : outcomes) {
        r.max_metric = std::max(r.max_metric, o.metric);
        if (o.ok) continue;
        ++r.failures;
        if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(o.witness);
    }
    return r;
}

template <class Kernel>
CaseOutcome guarded(Kernel& kernel, std::size_t i) {
    try {
        return kernel(i);
    } catch (const std::exception& e) {
        return {false, "case " + std::to_string(i) + ": exception: " + e.what(), 0.0};
    }
}

}  // namespace detail

/// Reference implementation: cases run in order on the calling thread.
template <class Kernel>
SweepResult run_sweep_serial(std::string name, std::size_t cases, Kernel&& kernel) {
    std::vector<CaseOutcome> outcomes(cases);
    for (std::size_t i = 0; i < cases; ++i) outcomes[i] = detail::guarded(kernel, i);
    return detail::aggregate(std::move(name), outcomes);
}

/// Cases run under OpenMP. kernel(i) must depend on i alone; outcomes are
/// stored per index and aggregated in index order, so the result is the same
/// as run_sweep_serial for any thread count.
template <class Kernel>
SweepResult run_sweep_parallel(std::string name, std::size_t cases, Kernel&& kernel) {
    std::vector<CaseOutcome> outcomes(cases);
    const auto n = static_cast<long long>(cases);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < n; ++i) {
        outcomes[static_cast<std::size_t>(i)] = detail::guarded(kernel, static_cast<std::size_t>(i));
    }
    return detail::aggregate(std::move(name), outcomes);
}

template <class Kernel>
SweepResult run_sweep(Execution mode, std::string name, std::size_t cases, Kernel&& kernel) {
    if (mode == Execution::Serial) {
        return run_sweep_serial(std::move(name), cases, std::forward<Kernel>(kernel));
    }
    return run_sweep_parallel(std::move(name), cases, std::forward<Kernel>(kernel));
}

/// No-op without OpenMP.
inline void set_thread_count(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

}  // namespace novikov
