#pragma once

#include "novikov/element.hpp"
#include "novikov/sweep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace novikov {

enum class Identity { Assoc, LeftSym, RightComm, Jacobi, Leibniz, Hamilton, ClosedForms, Iso };

inline constexpr Identity kAllIdentities[] = {
    Identity::Assoc,    Identity::LeftSym,  Identity::RightComm,   Identity::Jacobi,
    Identity::Leibniz,  Identity::Hamilton, Identity::ClosedForms, Identity::Iso};

std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);

/// Parameters a used for the Novikov product in every sweep:
/// b_0, a_1, b_2, a_1 + b_1. Random sweeps also draw one random a per trial.
std::vector<Element> default_params();

struct CheckOptions {
    std::size_t trials = 100;            // random instances per sweep
    std::int64_t max_index = 8;          // index bound for random elements
    std::int64_t assoc_max_index = 6;    // exhaustive basis triples for assoc
    std::int64_t triple_max_index = 4;   // exhaustive basis triples for Novikov axioms
    std::int64_t pair_max_index = 8;     // exhaustive basis pairs (leibniz, iso)
    std::int64_t closed_max_index = 10;  // exhaustive pairs for the closed-form tables
    std::int64_t closure_max_index = 6;  // basis symbols for bracket closure
    std::size_t multipliers = 20;        // random multipliers for leibniz/basis
    std::size_t multiplier_pairs = 50;   // random pairs for bracket closure
    std::size_t numeric_trials = 200;    // random pairs for the floating-point check
    std::vector<double> samples;         // empty means default_samples()
    double tol = 1e-9;
    std::uint64_t seed = 1;
    std::vector<Element> params = default_params();
    Execution mode = Execution::Parallel;
};

/// Runs the sweeps belonging to one identity. Every result is exact except
/// "iso/numeric", whose max_metric is the worst scaled residual.
std::vector<SweepResult> check_identity(Identity id, const CheckOptions& options);

// Individual sweeps, exposed for the acceptance suite and benchmarks.
SweepResult sweep_assoc_basis(std::int64_t max_index, Execution mode);
SweepResult sweep_unity(std::int64_t max_index, Execution mode);
SweepResult sweep_novikov_basis(Identity id, std::int64_t max_index,
                                const std::vector<Element>& params, Execution mode);
SweepResult sweep_novikov_random(Identity id, const CheckOptions& options);
SweepResult sweep_leibniz_basis(std::int64_t max_index, std::size_t multipliers,
                                std::uint64_t seed, Execution mode);
SweepResult sweep_bracket_closure(std::int64_t max_index, std::size_t pairs,
                                  std::uint64_t seed, Execution mode);
SweepResult sweep_closed_forms(std::int64_t max_index, Execution mode);

/// Structural homomorphism checks of phi on all basis pairs up to
/// max_index, for each parameter: phi(uv) = phi(u)phi(v), phi(D0 u) =
/// (phi u)', phi(u o v) = phi(u) phi(a) (phi v)'.
SweepResult sweep_iso_basis(std::int64_t max_index, const std::vector<Element>& params,
                            Execution mode);
/// The same three equalities on random (u, v, a).
SweepResult sweep_iso_random(std::size_t trials, std::int64_t max_index, std::uint64_t seed,
                             Execution mode);
/// |phi(uv)(x) - phi(u)(x) phi(v)(x)| <= tol (1 + |phi(u)(x) phi(v)(x)|) at
/// every sample, on random (u, v).
SweepResult sweep_iso_numeric(std::size_t trials, std::int64_t max_index,
                              const std::vector<double>& samples, double tol,
                              std::uint64_t seed, Execution mode);

/// Random-pair isomorphism report: exact equalities on `trials` random
/// (u, v, a) and the floating-point check on the same number of pairs.
std::vector<SweepResult> check_isomorphism(std::size_t trials, std::int64_t max_index,
                                           const std::vector<double>& samples, double tol,
                                           std::uint64_t seed, Execution mode);

/// One line per sweep: "<name>: <cases> cases, <failures> failures" plus
/// witnesses. Deterministic for a fixed seed.
std::string format_report(const std::vector<SweepResult>& results);

}  // namespace novikov
