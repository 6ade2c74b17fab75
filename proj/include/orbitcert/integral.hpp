#pragma once

#include "orbitcert/rootsys.hpp"

#include <optional>
#include <span>
#include <vector>

namespace orbitcert {

// Roots whose coroots pair integrally with lambda' = lambda + rho.
struct IntegralSystem {
    Weight lambda_prime;
    std::vector<Weight> roots;         // both signs, model root order
    std::vector<Weight> simple_system; // positive in the model
    std::vector<CartanType> cartan_type; // type of the integral root system
    std::vector<CartanType> coroot_type; // type of its coroot system (B <-> C)
    std::size_t positive_count = 0;
};

IntegralSystem integral_system(const RootSystemModel& model, const Weight& lambda_prime);

struct AntidominantRep {
    std::vector<std::size_t> word; // indices into the simple system, applied left to right
    Weight nu;                     // s_{word.back()} ... s_{word.front()} (mu)
    bool regular = false;          // no positive root of the subsystem is orthogonal to mu
    bool minimal_certified = false;
    std::size_t inversions = 0;    // #{beta > 0 : <mu, beta^vee> > 0}
};

// Greedy descent: reflect at the first simple root with positive pairing
// until <nu, alpha^vee> <= 0 for every simple alpha.
AntidominantRep antidominant_rep(std::span<const Weight> simple_system, const Weight& mu);

// dim g - (#integral roots + rank) when lambda' is strictly positive on the
// simple integral roots, nullopt otherwise.
std::optional<std::size_t> cor68_dim(const RootSystemModel& model, const Weight& lambda_prime);

// dim g - dim g(lambda) + dim O_w with the cell orbit dimension supplied by
// the caller. Throws std::invalid_argument on negative inputs or result.
long prop67_dim(long dim_g, long dim_g_lambda, long dim_ow);

} // namespace orbitcert
