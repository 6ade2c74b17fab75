#include "orbitcert/integral.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitcert {

namespace {

std::vector<CartanType> dual_types(std::vector<CartanType> types) {
    for (auto& t : types) {
        if (t.family == Family::B && t.rank > 2)
            t.family = Family::C;
        else if (t.family == Family::C)
            t.family = Family::B;
    }
    std::stable_sort(types.begin(), types.end(), type_precedes);
    return types;
}

} // namespace

IntegralSystem integral_system(const RootSystemModel& model, const Weight& lambda_prime) {
    IntegralSystem sys;
    sys.lambda_prime = model.canonicalize(lambda_prime);
    for (const auto& alpha : model.roots()) {
        if (!is_integer(coroot_pairing(model.rho(), alpha)))
            throw std::logic_error("rho is not integral");
        if (is_integer(coroot_pairing(sys.lambda_prime, alpha)))
            sys.roots.push_back(alpha);
    }
    sys.positive_count = sys.roots.size() / 2;
    if (sys.roots.empty())
        return sys;
    sys.simple_system = simple_system_of(model, sys.roots, /*use_coroots=*/true);
    sys.cartan_type = identify_type(sys.simple_system);
    std::vector<Weight> coroots;
    for (const auto& a : sys.simple_system)
        coroots.push_back(coroot(a));
    sys.coroot_type = identify_type(coroots);
    if (dual_types(sys.coroot_type) != sys.cartan_type)
        throw std::logic_error("integral system type disagrees with its coroot dual");
    return sys;
}

AntidominantRep antidominant_rep(std::span<const Weight> simple_system, const Weight& mu) {
    AntidominantRep rep;
    rep.nu = mu;
    auto sub = generate_subsystem(simple_system);
    rep.regular = true;
    for (const auto& beta : sub.positive) {
        Rational v = coroot_pairing(mu, beta);
        if (v > 0)
            ++rep.inversions;
        if (v == 0)
            rep.regular = false;
    }
    const std::size_t cap = sub.positive.size() + 1;
    while (true) {
        bool moved = false;
        for (std::size_t i = 0; i < simple_system.size(); ++i)
            if (coroot_pairing(rep.nu, simple_system[i]) > 0) {
                rep.nu = reflect(rep.nu, simple_system[i]);
                rep.word.push_back(i);
                moved = true;
                break;
            }
        if (!moved)
            break;
        if (rep.word.size() > cap)
            throw std::logic_error("antidominant descent did not terminate");
    }
    rep.minimal_certified = rep.regular && rep.word.size() == rep.inversions;
    return rep;
}

std::optional<std::size_t> cor68_dim(const RootSystemModel& model, const Weight& lambda_prime) {
    auto sys = integral_system(model, lambda_prime);
    for (const auto& alpha : sys.simple_system)
        if (coroot_pairing(sys.lambda_prime, alpha) <= 0)
            return std::nullopt;
    return model.dim() - (sys.roots.size() + model.rank());
}

long prop67_dim(long dim_g, long dim_g_lambda, long dim_ow) {
    if (dim_g < 0 || dim_g_lambda < 0 || dim_ow < 0)
        throw std::invalid_argument("dimensions must be non-negative");
    if (dim_g < dim_g_lambda)
        throw std::invalid_argument("dim g(lambda) exceeds dim g");
    long r = dim_g - dim_g_lambda + dim_ow;
    if (r < 0)
        throw std::invalid_argument("negative associated-variety dimension");
    return r;
}

} // namespace orbitcert
