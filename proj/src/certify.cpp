#include "orbitcert/certify.hpp"

#include <map>
#include <stdexcept>

namespace orbitcert {

namespace {

std::string show(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ",";
        s += to_string(w[i]);
    }
    return s + ")";
}

} // namespace

Weight theta_for_levi(const RootSystemModel& model, std::span<const std::size_t> levi) {
    std::vector<bool> in(model.rank(), false);
    for (auto i : levi) {
        if (i >= model.rank())
            throw std::invalid_argument("simple root index out of range");
        in[i] = true;
    }
    Weight theta(model.ambient_dim());
    for (std::size_t i = 0; i < model.rank(); ++i)
        if (!in[i])
            theta += model.fundamental_coweights()[i];
    return theta;
}

Characteristic h_regular(const RootSystemModel& model, std::span<const std::size_t> levi) {
    auto sub = levi_subsystem(model, levi);
    Weight h(model.ambient_dim());
    for (const auto& alpha : sub.positive)
        h += coroot(alpha);
    return make_characteristic(model, h);
}

Weight delta(const RootSystemModel& model, std::span<const std::size_t> levi, const Characteristic& h) {
    const Weight theta = theta_for_levi(model, levi);
    Weight half(model.ambient_dim()), full(model.ambient_dim());
    for (const auto& alpha : model.roots()) {
        if (model.form(alpha, theta) >= 0)
            continue;
        Rational v = model.form(alpha, h.h);
        if (v == -1)
            half += alpha;
        else if (v <= -2)
            full += alpha;
    }
    return half * Rational(1, 2) + full;
}

Weight delta_prime(const RootSystemModel& model, const Characteristic& h) {
    Weight sum(model.ambient_dim());
    for (const auto& alpha : model.positive_roots()) {
        Rational v = model.form(alpha, h.h);
        if (v == 0 || v == 1)
            sum += alpha;
    }
    return sum * Rational(1, 2);
}

SpanResult in_levi_span(const RootSystemModel& model, const Weight& mu, std::span<const std::size_t> levi) {
    auto sub = levi_subsystem(model, levi);
    const Weight target = model.canonicalize(mu);
    const std::size_t k = sub.simple.size();
    SpanResult res;
    if (k == 0) {
        res.inside = target.is_zero();
        res.residual = target;
        return res;
    }
    linalg::Matrix gram(k, k);
    std::vector<Rational> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        rhs[i] = dot(sub.simple[i], target);
        for (std::size_t j = 0; j < k; ++j)
            gram(i, j) = dot(sub.simple[i], sub.simple[j]);
    }
    auto c = linalg::solve(gram, rhs);
    Weight proj(model.ambient_dim());
    for (std::size_t i = 0; i < k; ++i)
        proj += sub.simple[i] * (*c)[i];
    res.residual = target - proj;
    res.inside = res.residual.is_zero();
    if (res.inside)
        res.coefficients = *c;
    return res;
}

CongruenceResult congruence_identity(const RootSystemModel& model, std::span<const std::size_t> levi,
                                     const Characteristic& h) {
    const Weight theta = theta_for_levi(model, levi);
    std::map<std::pair<int, int>, Weight> sums;
    for (const auto& alpha : model.roots()) {
        Rational k = model.form(alpha, theta), l = model.form(alpha, h.h);
        if (!is_integer(k) || !is_integer(l))
            throw std::logic_error("theta or h is not integral on a root");
        auto key = std::make_pair(static_cast<int>(k.get_num().get_si()), static_cast<int>(l.get_num().get_si()));
        auto [it, fresh] = sums.try_emplace(key, Weight(model.ambient_dim()));
        it->second += alpha;
    }
    CongruenceResult res;
    for (const auto& [key, sum] : sums) {
        auto mirror = sums.find({key.first, -key.second});
        Weight other = mirror == sums.end() ? Weight(model.ambient_dim()) : mirror->second;
        ++res.pairs_checked;
        if (!in_levi_span(model, sum - other, levi).inside)
            res.failures.push_back(key);
    }
    return res;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undecided: return "undecided";
    }
    return "?";
}

ConditionCheck check_A(const RootSystemModel& model, std::span<const std::size_t> levi, const Weight& lambda_prime,
                       bool principal_in_levi) {
    if (!principal_in_levi)
        return {Verdict::undecided, "nilpotent is not principal in the Levi; Levi antidominance does not decide A",
                std::nullopt};
    const Weight lp = model.canonicalize(lambda_prime);
    for (const auto& alpha : levi_subsystem(model, levi).positive) {
        Rational v = coroot_pairing(lp, alpha);
        if (is_integer(v) && v > 0)
            return {Verdict::fail, "<lambda', alpha^vee> = " + to_string(v) + " on Levi root " + show(alpha), alpha};
    }
    return {Verdict::pass, "lambda restricted to the Levi is antidominant", std::nullopt};
}

ConditionCheck check_B(const RootSystemModel& model, const Weight& lambda_prime, const Characteristic& h) {
    const auto orbit = orbit_dim_from_h(model, h);
    const auto sys = integral_system(model, lambda_prime);
    for (const auto& alpha : sys.simple_system) {
        if (coroot_pairing(sys.lambda_prime, alpha) <= 0)
            return {Verdict::undecided,
                    "lambda' is not positive on simple integral root " + show(alpha) +
                        "; the associated-variety dimension needs dim O_w (prop67_dim)",
                    alpha};
    }
    const auto va = model.dim() - (sys.roots.size() + model.rank());
    if (va == orbit)
        return {Verdict::pass, "dim VA = " + std::to_string(va) + " = dim O", std::nullopt};
    return {Verdict::fail, "dim VA = " + std::to_string(va) + " but dim O = " + std::to_string(orbit), std::nullopt};
}

ConditionCheck check_C(const RootSystemModel& model, std::span<const std::size_t> levi, const Characteristic& h,
                       const Weight& lambda_prime) {
    auto res = in_levi_span(model, model.canonicalize(lambda_prime) - delta_prime(model, h), levi);
    if (res.inside)
        return {Verdict::pass, "lambda' - delta' lies in the rational span of the Levi roots", std::nullopt};
    return {Verdict::fail, "lambda' - delta' leaves residual " + show(res.residual), res.residual};
}

ConditionCheck check_D(bool principal_in_levi) {
    if (principal_in_levi)
        return {Verdict::pass, "nilpotent is principal in the Levi; the Levi W-algebra is commutative", std::nullopt};
    return {Verdict::undecided, "codimension-one ideal of the Levi W-algebra is not machine-checkable", std::nullopt};
}

void validate_input(const RootSystemModel& model, const CertificateInput& input) {
    auto h = make_characteristic(model, input.h);
    levi_subsystem(model, input.levi);
    if (input.lambda_prime.size() != model.ambient_dim())
        throw std::invalid_argument("lambda' has the wrong number of coordinates");
    if (!in_levi_span(model, h.h, input.levi).inside)
        throw std::invalid_argument("h does not lie in the span of the Levi coroots");
    if (input.principal_in_levi)
        for (auto i : input.levi)
            if (model.form(model.simple_roots()[i], h.h) != 2)
                throw std::invalid_argument("principal_in_levi requires <alpha, h> = 2 on every Levi simple root");
}

bool CertificateReport::passed() const {
    return a.verdict == Verdict::pass && b.verdict == Verdict::pass && c.verdict == Verdict::pass &&
           d.verdict == Verdict::pass;
}

Verdict CertificateReport::overall() const {
    if (passed())
        return Verdict::pass;
    for (const auto* x : {&a, &b, &c, &d})
        if (x->verdict == Verdict::fail)
            return Verdict::fail;
    return Verdict::undecided;
}

CertificateReport certify(const RootSystemModel& model, const CertificateInput& input) {
    validate_input(model, input);
    const auto h = make_characteristic(model, input.h);
    const Weight lp = model.canonicalize(input.lambda_prime);
    CertificateReport r;
    r.a = check_A(model, input.levi, lp, input.principal_in_levi);
    r.b = check_B(model, lp, h);
    r.c = check_C(model, input.levi, h, lp);
    r.d = check_D(input.principal_in_levi);
    r.dim_g = model.dim();
    r.orbit_dim = orbit_dim_from_h(model, h);
    r.dim_g_lambda = integral_system(model, lp).roots.size() + model.rank();
    r.cor68 = cor68_dim(model, lp);
    r.delta_prime = delta_prime(model, h);
    r.unverified.push_back(
        "normalizer of the maximal torus of the reductive centralizer acts on it without nonzero fixed points");
    return r;
}

} // namespace orbitcert
