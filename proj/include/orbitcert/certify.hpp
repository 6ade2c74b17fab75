#pragma once

#include "orbitcert/integral.hpp"
#include "orbitcert/orbits.hpp"
#include "orbitcert/rootsys.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orbitcert {

// theta = sum of fundamental coweights off the Levi: zero exactly on the
// roots of the Levi, positive on the other positive roots.
Weight theta_for_levi(const RootSystemModel& model, std::span<const std::size_t> levi);

// h = sum of positive coroots of the Levi (twice its rho-check), the
// characteristic of a principal nilpotent of the Levi.
Characteristic h_regular(const RootSystemModel& model, std::span<const std::size_t> levi);

// Half the roots with <alpha, theta> < 0 and <alpha, h> = -1, plus all with
// <alpha, theta> < 0 and <alpha, h> <= -2.
Weight delta(const RootSystemModel& model, std::span<const std::size_t> levi, const Characteristic& h);

// Half the positive roots with <alpha, h> in {0, 1}.
Weight delta_prime(const RootSystemModel& model, const Characteristic& h);

struct SpanResult {
    bool inside = false;
    std::vector<Rational> coefficients; // over the Levi simple roots, on success
    Weight residual;                   // orthogonal residual, zero on success
};

SpanResult in_levi_span(const RootSystemModel& model, const Weight& mu, std::span<const std::size_t> levi);

struct CongruenceResult {
    std::size_t pairs_checked = 0;
    std::vector<std::pair<int, int>> failures; // (k, l) with a residual
};

// For every realized (k, l): the sum of roots with <alpha, theta> = k and
// <alpha, h> = l agrees with the sum for (k, -l) modulo the Levi span.
CongruenceResult congruence_identity(const RootSystemModel& model, std::span<const std::size_t> levi,
                                     const Characteristic& h);

enum class Verdict { pass, fail, undecided };
std::string to_string(Verdict v);

struct ConditionCheck {
    Verdict verdict = Verdict::undecided;
    std::string detail;
    std::optional<Weight> witness; // violating root or span residual
};

// "Antidominant" throughout: <lambda', alpha^vee> is never a positive integer
// on a positive root of the Levi.
ConditionCheck check_A(const RootSystemModel& model, std::span<const std::size_t> levi, const Weight& lambda_prime,
                       bool principal_in_levi);
ConditionCheck check_B(const RootSystemModel& model, const Weight& lambda_prime, const Characteristic& h);
ConditionCheck check_C(const RootSystemModel& model, std::span<const std::size_t> levi, const Characteristic& h,
                       const Weight& lambda_prime);
ConditionCheck check_D(bool principal_in_levi);

struct CertificateInput {
    std::vector<std::size_t> levi; // zero-based simple root indices
    Weight h;
    Weight lambda_prime;
    bool principal_in_levi = false;
};

struct CertificateReport {
    ConditionCheck a, b, c, d;
    std::size_t dim_g = 0;
    std::size_t orbit_dim = 0;
    std::size_t dim_g_lambda = 0; // #integral roots + rank
    std::optional<std::size_t> cor68;
    Weight delta_prime;
    std::vector<std::string> unverified;

    bool passed() const;
    Verdict overall() const;
};

// Throws std::invalid_argument when h is not integral, not in the span of
// the Levi, or (principal_in_levi) not equal to 2 on every Levi simple root.
void validate_input(const RootSystemModel& model, const CertificateInput& input);

CertificateReport certify(const RootSystemModel& model, const CertificateInput& input);

} // namespace orbitcert
