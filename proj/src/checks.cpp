#include "novikov/checks.hpp"

#include "novikov/derivation.hpp"
#include "novikov/novikov.hpp"
#include "novikov/random.hpp"
#include "novikov/realization.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace novikov {

namespace {

// Distinct streams per sweep so that sweeps sharing a seed draw
// independent instances.
constexpr std::uint64_t kStreamNovikov = 0x100000000ULL;
constexpr std::uint64_t kStreamLeibniz = 0x200000000ULL;
constexpr std::uint64_t kStreamClosure = 0x300000000ULL;
constexpr std::uint64_t kStreamIso = 0x400000000ULL;
constexpr std::uint64_t kStreamNumeric = 0x500000000ULL;
constexpr std::uint64_t kStreamAssoc = 0x600000000ULL;

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) { return seed ^ stream; }

CaseOutcome fail(std::string witness) { return {false, std::move(witness), 0.0}; }

std::string describe(std::initializer_list<std::pair<const char*, const Element*>> parts) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, e] : parts) {
        if (!first) os << ", ";
        os << label << " = " << to_string(*e);
        first = false;
    }
    return os.str();
}

Element identity_residual(Identity id, const Element& x, const Element& y, const Element& z,
                          const Element& a) {
    switch (id) {
        case Identity::LeftSym:
            return left_symmetry_residual(x, y, z, a);
        case Identity::RightComm:
            return right_commutativity_residual(x, y, z, a);
        case Identity::Jacobi:
            return jacobi_residual(x, y, z, a);
        case Identity::Hamilton: {
            auto [first, second] = hamilton_residuals(x, y, z, a);
            if (!first.is_zero()) return first;
            return second;
        }
        default:
            throw std::invalid_argument("not a triple identity");
    }
}

CaseOutcome triple_case(Identity id, const Element& x, const Element& y, const Element& z,
                        const Element& a) {
    const Element r = identity_residual(id, x, y, z, a);
    if (r.is_zero()) return {};
    return fail(describe({{"x", &x}, {"y", &y}, {"z", &z}, {"a", &a}}) +
                ", residual = " + to_string(r));
}

}  // namespace

std::string_view identity_name(Identity id) {
    switch (id) {
        case Identity::Assoc: return "assoc";
        case Identity::LeftSym: return "leftsym";
        case Identity::RightComm: return "rightcomm";
        case Identity::Jacobi: return "jacobi";
        case Identity::Leibniz: return "leibniz";
        case Identity::Hamilton: return "hamilton";
        case Identity::ClosedForms: return "closedforms";
        case Identity::Iso: return "iso";
    }
    return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
    for (Identity id : kAllIdentities) {
        if (identity_name(id) == name) return id;
    }
    return std::nullopt;
}

std::vector<Element> default_params() {
    return {Element::unity(), canonical_a(1), canonical_b(2), canonical_a(1) + canonical_b(1)};
}

SweepResult sweep_assoc_basis(std::int64_t max_index, Execution mode) {
    const auto basis = basis_up_to(max_index);
    const std::size_t n = basis.size();
    return run_sweep(mode, "assoc/basis", n * n * n, [&](std::size_t i) {
        const Element x = Element::basis(basis[i / (n * n)]);
        const Element y = Element::basis(basis[(i / n) % n]);
        const Element z = Element::basis(basis[i % n]);
        const Element r = associator(x, y, z);
        if (r.is_zero()) return CaseOutcome{};
        return fail(describe({{"x", &x}, {"y", &y}, {"z", &z}}) + ", residual = " + to_string(r));
    });
}

SweepResult sweep_unity(std::int64_t max_index, Execution mode) {
    const auto basis = basis_up_to(max_index);
    const Element one = Element::unity();
    return run_sweep(mode, "assoc/unity", basis.size(), [&](std::size_t i) {
        const Element s = Element::basis(basis[i]);
        if (mul(one, s) == s && mul(s, one) == s) return CaseOutcome{};
        return fail("s = " + to_string(s) + ", b_0 s = " + to_string(mul(one, s)));
    });
}

namespace {

SweepResult sweep_assoc_random(const CheckOptions& o) {
    const std::uint64_t seed = stream_seed(o.seed, kStreamAssoc);
    return run_sweep(o.mode, "assoc/random", o.trials, [&](std::size_t i) {
        auto rng = trial_engine(seed, i);
        const Element x = random_element(rng, o.max_index);
        const Element y = random_element(rng, o.max_index);
        const Element z = random_element(rng, o.max_index);
        const Element r = associator(x, y, z);
        if (!r.is_zero()) {
            return fail(describe({{"x", &x}, {"y", &y}, {"z", &z}}) + ", associator = " +
                        to_string(r));
        }
        if (mul(x, y) != mul(y, x)) {
            return fail(describe({{"x", &x}, {"y", &y}}) + ": not commutative");
        }
        if (mul(x + y, z) != mul(x, z) + mul(y, z)) {
            return fail(describe({{"x", &x}, {"y", &y}, {"z", &z}}) + ": not bilinear");
        }
        return CaseOutcome{};
    });
}

}  // namespace

SweepResult sweep_novikov_basis(Identity id, std::int64_t max_index,
                                const std::vector<Element>& params, Execution mode) {
    const auto basis = basis_up_to(max_index);
    const std::size_t n = basis.size();
    const std::size_t triples = n * n * n;
    return run_sweep(mode, std::string(identity_name(id)) + "/basis", triples * params.size(),
                     [&](std::size_t i) {
                         const std::size_t t = i % triples;
                         const Element& a = params[i / triples];
                         return triple_case(id, Element::basis(basis[t / (n * n)]),
                                            Element::basis(basis[(t / n) % n]),
                                            Element::basis(basis[t % n]), a);
                     });
}

SweepResult sweep_novikov_random(Identity id, const CheckOptions& o) {
    const std::uint64_t seed = stream_seed(o.seed, kStreamNovikov);
    return run_sweep(o.mode, std::string(identity_name(id)) + "/random", o.trials,
                     [&](std::size_t i) {
                         auto rng = trial_engine(seed, i);
                         const Element x = random_element(rng, o.max_index);
                         const Element y = random_element(rng, o.max_index);
                         const Element z = random_element(rng, o.max_index);
                         const Element drawn = random_element(rng, o.max_index);
                         for (const Element& a : o.params) {
                             auto out = triple_case(id, x, y, z, a);
                             if (!out.ok) return out;
                         }
                         return triple_case(id, x, y, z, drawn);
                     });
}

SweepResult sweep_leibniz_basis(std::int64_t max_index, std::size_t multipliers,
                                std::uint64_t seed, Execution mode) {
    const auto basis = basis_up_to(max_index);
    const std::size_t n = basis.size();
    std::vector<MultiplierDerivation> ds{MultiplierDerivation::base()};
    const std::uint64_t s = stream_seed(seed, kStreamLeibniz);
    for (std::size_t k = 0; k < multipliers; ++k) {
        auto rng = trial_engine(s, k);
        ds.emplace_back(random_element(rng, max_index));
    }
    return run_sweep(mode, "leibniz/basis", n * n * ds.size(), [&](std::size_t i) {
        const auto& d = ds[i / (n * n)];
        const Element x = Element::basis(basis[(i / n) % n]);
        const Element y = Element::basis(basis[i % n]);
        const Element r = leibniz_residual(d, x, y);
        if (r.is_zero()) return CaseOutcome{};
        return fail(describe({{"multiplier", &d.multiplier()}, {"x", &x}, {"y", &y}}) +
                    ", residual = " + to_string(r));
    });
}

namespace {

SweepResult sweep_leibniz_random(const CheckOptions& o) {
    const std::uint64_t seed = stream_seed(o.seed, kStreamLeibniz) + 1;
    return run_sweep(o.mode, "leibniz/random", o.trials, [&](std::size_t i) {
        auto rng = trial_engine(seed, i);
        const MultiplierDerivation d(random_element(rng, o.max_index));
        const Element x = random_element(rng, o.max_index);
        const Element y = random_element(rng, o.max_index);
        const Element r = leibniz_residual(d, x, y);
        if (!r.is_zero()) {
            return fail(describe({{"multiplier", &d.multiplier()}, {"x", &x}, {"y", &y}}) +
                        ", residual = " + to_string(r));
        }
        // Jacobi for the derivation bracket, with a third random multiplier.
        const MultiplierDerivation e(random_element(rng, o.max_index));
        const MultiplierDerivation f(random_element(rng, o.max_index));
        const Element jac =
            derivation_bracket(derivation_bracket(d, e), f).multiplier() +
            derivation_bracket(derivation_bracket(e, f), d).multiplier() +
            derivation_bracket(derivation_bracket(f, d), e).multiplier();
        if (!jac.is_zero()) {
            return fail(describe({{"d", &d.multiplier()}, {"e", &e.multiplier()},
                                  {"f", &f.multiplier()}}) +
                        ", derivation Jacobi residual = " + to_string(jac));
        }
        return CaseOutcome{};
    });
}

}  // namespace

SweepResult sweep_bracket_closure(std::int64_t max_index, std::size_t pairs, std::uint64_t seed,
                                  Execution mode) {
    const auto basis = basis_up_to(max_index);
    const std::size_t n = basis.size();
    const std::uint64_t s = stream_seed(seed, kStreamClosure);
    std::vector<std::pair<MultiplierDerivation, MultiplierDerivation>> ds;
    for (std::size_t k = 0; k < pairs; ++k) {
        auto rng = trial_engine(s, k);
        MultiplierDerivation d1(random_element(rng, 8));
        MultiplierDerivation d2(random_element(rng, 8));
        ds.emplace_back(std::move(d1), std::move(d2));
    }
    return run_sweep(mode, "leibniz/bracket-closure", n * ds.size(), [&](std::size_t i) {
        const auto& [d1, d2] = ds[i / n];
        const Element x = Element::basis(basis[i % n]);
        const Element lhs = apply(derivation_bracket(d1, d2), x);
        const Element rhs = apply(d1, apply(d2, x)) - apply(d2, apply(d1, x));
        if (lhs == rhs) return CaseOutcome{};
        return fail(describe({{"d1", &d1.multiplier()}, {"d2", &d2.multiplier()}, {"x", &x}}) +
                    ", bracket = " + to_string(lhs) + ", composition = " + to_string(rhs));
    });
}

SweepResult sweep_closed_forms(std::int64_t max_index, Execution mode) {
    const auto basis = basis_up_to(max_index);
    const std::size_t n = basis.size();
    const Element one = Element::unity();
    return run_sweep(mode, "closedforms/basis", n * n, [&](std::size_t i) {
        const BasisSymbol& s = basis[i / n];
        const BasisSymbol& t = basis[i % n];
        const Element x = Element::basis(s);
        const Element y = Element::basis(t);
        const Element c = circ(x, y, one);
        const Element cc = closed_circ(s, t);
        if (c != cc) {
            return fail(describe({{"x", &x}, {"y", &y}}) + ": circ = " + to_string(c) +
                        ", table = " + to_string(cc));
        }
        const Element br = lie_bracket(x, y, one);
        const Element cb = closed_bracket(s, t);
        if (br != cb) {
            return fail(describe({{"x", &x}, {"y", &y}}) + ": bracket = " + to_string(br) +
                        ", table = " + to_string(cb));
        }
        if (factored_bracket(x, y, one) != br) {
            return fail(describe({{"x", &x}, {"y", &y}}) + ": factored bracket differs");
        }
        return CaseOutcome{};
    });
}

namespace {

CaseOutcome iso_case(const Element& u, const Element& v, const Element& a) {
    const FunctionRepr pu = phi(u);
    const FunctionRepr pv = phi(v);
    if (phi_inv(pu) != u) return fail("phi_inv(phi(u)) != u for u = " + to_string(u));
    if (phi(mul(u, v)) != t_mul(pu, pv)) {
        return fail(describe({{"u", &u}, {"v", &v}}) + ": phi(uv) = " + to_string(phi(mul(u, v))) +
                    ", phi(u)phi(v) = " + to_string(t_mul(pu, pv)));
    }
    if (phi(d0(u)) != t_derivative(pu)) {
        return fail("u = " + to_string(u) + ": phi(D0 u) = " + to_string(phi(d0(u))) +
                    ", d/dx phi(u) = " + to_string(t_derivative(pu)));
    }
    const FunctionRepr novikov_image = phi(circ(u, v, a));
    const FunctionRepr t_side = t_mul(t_mul(pu, phi(a)), t_derivative(pv));
    if (novikov_image != t_side) {
        return fail(describe({{"u", &u}, {"v", &v}, {"a", &a}}) + ": phi(u o v) = " +
                    to_string(novikov_image) + ", T-side = " + to_string(t_side));
    }
    // Transport of aD0: phi((aD0)(v)) = phi(a) * d/dx phi(v).
    if (phi(apply(MultiplierDerivation(a), v)) != t_mul(phi(a), t_derivative(pv))) {
        return fail(describe({{"v", &v}, {"a", &a}}) + ": aD0 does not transport to phi(a) d/dx");
    }
    return {};
}

}  // namespace

SweepResult sweep_iso_basis(std::int64_t max_index, const std::vector<Element>& params,
                            Execution mode) {
    const auto basis = basis_up_to(max_index);
    const std::size_t n = basis.size();
    return run_sweep(mode, "iso/basis", n * n * params.size(), [&](std::size_t i) {
        const Element& a = params[i / (n * n)];
        return iso_case(Element::basis(basis[(i / n) % n]), Element::basis(basis[i % n]), a);
    });
}

SweepResult sweep_iso_random(std::size_t trials, std::int64_t max_index, std::uint64_t seed,
                             Execution mode) {
    const std::uint64_t s = stream_seed(seed, kStreamIso);
    return run_sweep(mode, "iso/random", trials, [&](std::size_t i) {
        auto rng = trial_engine(s, i);
        const Element u = random_element(rng, max_index);
        const Element v = random_element(rng, max_index);
        const Element a = random_element(rng, max_index);
        return iso_case(u, v, a);
    });
}

SweepResult sweep_iso_numeric(std::size_t trials, std::int64_t max_index,
                              const std::vector<double>& samples, double tol, std::uint64_t seed,
                              Execution mode) {
    const std::uint64_t s = stream_seed(seed, kStreamNumeric);
    return run_sweep(mode, "iso/numeric", trials, [&](std::size_t i) {
        auto rng = trial_engine(s, i);
        const Element u = random_element(rng, max_index);
        const Element v = random_element(rng, max_index);
        const FunctionRepr pu = phi(u);
        const FunctionRepr pv = phi(v);
        const FunctionRepr puv = phi(mul(u, v));
        CaseOutcome out;
        for (double x : samples) {
            const double product = eval(pu, x) * eval(pv, x);
            const double residual = std::fabs(eval(puv, x) - product);
            const double scaled = residual / (1.0 + std::fabs(product));
            out.metric = std::max(out.metric, scaled);
            if (scaled > tol && out.ok) {
                std::ostringstream os;
                os << std::setprecision(17) << describe({{"u", &u}, {"v", &v}}) << ", x = " << x
                   << ", residual = " << residual;
                out.ok = false;
                out.witness = os.str();
            }
        }
        return out;
    });
}

std::vector<SweepResult> check_isomorphism(std::size_t trials, std::int64_t max_index,
                                           const std::vector<double>& samples, double tol,
                                           std::uint64_t seed, Execution mode) {
    for (double x : samples) {
        if (static_cast<double>(2 * max_index) * std::fabs(x) > kEvalGuard) {
            throw std::range_error("check_isomorphism: sample outside the eval guard");
        }
    }
    return {sweep_iso_random(trials, max_index, seed, mode),
            sweep_iso_numeric(trials, max_index, samples, tol, seed, mode)};
}

std::vector<SweepResult> check_identity(Identity id, const CheckOptions& o) {
    std::vector<SweepResult> out;
    switch (id) {
        case Identity::Assoc:
            out.push_back(sweep_assoc_basis(o.assoc_max_index, o.mode));
            out.push_back(sweep_unity(20, o.mode));
            out.push_back(sweep_assoc_random(o));
            break;
        case Identity::LeftSym:
        case Identity::RightComm:
        case Identity::Jacobi:
        case Identity::Hamilton:
            out.push_back(sweep_novikov_basis(id, o.triple_max_index, o.params, o.mode));
            out.push_back(sweep_novikov_random(id, o));
            break;
        case Identity::Leibniz:
            out.push_back(sweep_leibniz_basis(o.pair_max_index, o.multipliers, o.seed, o.mode));
            out.push_back(sweep_leibniz_random(o));
            out.push_back(
                sweep_bracket_closure(o.closure_max_index, o.multiplier_pairs, o.seed, o.mode));
            break;
        case Identity::ClosedForms:
            out.push_back(sweep_closed_forms(o.closed_max_index, o.mode));
            break;
        case Identity::Iso: {
            out.push_back(sweep_iso_basis(o.pair_max_index, o.params, o.mode));
            out.push_back(sweep_iso_random(o.trials, o.max_index, o.seed, o.mode));
            const auto samples = o.samples.empty() ? default_samples() : o.samples;
            out.push_back(
                sweep_iso_numeric(o.numeric_trials, o.max_index, samples, o.tol, o.seed, o.mode));
            break;
        }
    }
    return out;
}

std::string format_report(const std::vector<SweepResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures
           << " failures";
        if (r.max_metric > 0.0) os << ", max scaled residual " << std::setprecision(3) << r.max_metric;
        os << '\n';
        for (const auto& w : r.witnesses) os << "    " << w << '\n';
    }
    return os.str();
}

}  // namespace novikov
