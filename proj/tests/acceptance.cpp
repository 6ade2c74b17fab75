// One line per acceptance criterion; exit status is the number of failures.
#include "common.hpp"
#include "random_levi.hpp"
#include "table_fixture.hpp"

#include "orbitcert/certify.hpp"
#include "orbitcert/integral.hpp"
#include "orbitcert/lsinduce.hpp"
#include "orbitcert/orbits.hpp"
#include "orbitcert/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace orbitcert;
using namespace testdata;

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
    bool ok = true;
    std::ostringstream why;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok)
                why << what;
            ok = false;
        }
    }
};

std::vector<std::vector<std::size_t>> subsets(std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1u << i))
                idx.push_back(i);
        out.push_back(idx);
    }
    return out;
}

void e8_flagship(Tally& t) {
    auto e8 = RootSystemModel::build("E8");
    auto h = make_characteristic(e8, e8_h());
    auto lp = e8.canonicalize(e8_lambda_prime());
    t.require(h_regular(e8, e8_levi).h == h.h, "(a) h_regular");
    t.require(delta_prime(e8, h) == e8.canonicalize(e8_delta_prime_raw()), "(b) delta'");
    t.require(check_C(e8, e8_levi, h, lp).verdict == Verdict::pass, "(c) check_C");
    t.require(check_A(e8, e8_levi, lp, true).verdict == Verdict::pass, "(d) check_A");
    auto sys = integral_system(e8, lp);
    std::set<Weight> expect;
    for (const auto& r : e8_integral_simple_raw())
        expect.insert(e8.canonicalize(r));
    t.require(type_string(sys.cartan_type) == "A5+A2+A1", "(e) type");
    t.require(std::set<Weight>(sys.simple_system.begin(), sys.simple_system.end()) == expect, "(e) simple roots");
    for (const auto& a : sys.simple_system) {
        Rational v = coroot_pairing(lp, a);
        t.require(v == 1 || v == 2, "(f) pairings");
    }
    auto cor = cor68_dim(e8, lp);
    t.require(cor && *cor == 202 && orbit_dim_from_h(e8, h) == 202 && 248 - 46 == 202, "(g) dimensions");
    t.require(certify(e8, {e8_levi, e8_h(), e8_lambda_prime(), true}).overall() == Verdict::pass, "(h) certify");
}

void table_reproduction(Tally& t) {
    for (const auto& row : levi_realizations) {
        auto m = RootSystemModel::build(row.algebra);
        bool found = false;
        for (const auto& s : subsets(m.rank()))
            if (levi_label(m, s) == row.label && centralizer_dim_from_h(m, h_regular(m, s)) == row.dim_z) {
                found = true;
                break;
            }
        auto rec = rigid_table(row.algebra, row.label);
        t.require(found && rec && static_cast<std::size_t>(rec->dim_z) == row.dim_z,
                  std::string(row.algebra) + "/" + row.label);
    }
}

void delta_congruence(Tally& t) {
    for (const auto& name : {"G2", "F4", "E6", "E7", "E8"}) {
        auto m = RootSystemModel::build(name);
        for (const auto& s : subsets(m.rank())) {
            auto h = h_regular(m, s);
            t.require(in_levi_span(m, delta_prime(m, h) - delta(m, s, h) - m.rho(), s).inside,
                      std::string(name) + " delta residual");
            t.require(congruence_identity(m, s, h).failures.empty(), std::string(name) + " (k,l) identity");
        }
    }
}

void weight_axioms(Tally& t) {
    for (const auto& name : {"A4", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"}) {
        auto m = RootSystemModel::build(name);
        for (std::size_t i = 0; i < m.rank(); ++i) {
            t.require(m.pairing(m.rho(), m.simple_roots()[i]) == 1, std::string(name) + " rho");
            for (std::size_t j = 0; j < m.rank(); ++j)
                t.require(m.pairing(m.fundamental_weights()[i], m.simple_roots()[j]) == (i == j ? 1 : 0),
                          std::string(name) + " fundamental weights");
        }
    }
    auto e8 = RootSystemModel::build("E8");
    t.require(e8.rho() == e8.canonicalize(w({"7", "6", "5", "4", "3", "2", "1", "0", "-22"})), "E8 rho coordinates");
}

void centralizer_equivalence(Tally& t) {
    for (auto type : {Classical::gl, Classical::so, Classical::sp}) {
        const int bound = type == Classical::gl ? 7 : 10;
        for (int n = 1; n <= bound; ++n)
            for (const auto& p : partitions_of(n)) {
                if (!is_parity_valid(p, type) || (type == Classical::sp && n % 2))
                    continue;
                Partition q{p, type};
                t.require(dim_z_partition(q) == centralizer_oracle(q), to_string(type) + " " + std::to_string(n));
            }
    }
}

int levi_orbit_dim_z(const LeviDescriptor& l) {
    int d = 0;
    for (const auto& b : l.gl_blocks)
        d += dim_z_partition(Partition{b.d, Classical::gl});
    if (l.tail)
        d += dim_z_partition(Partition{l.tail->c, l.type});
    return d;
}

void induction_invariants(Tally& t) {
    std::mt19937_64 shuffle_rng(99);
    auto order_free = [&](const LeviDescriptor& l) {
        auto s = l;
        std::shuffle(s.gl_blocks.begin(), s.gl_blocks.end(), shuffle_rng);
        t.require(induce(s) == induce(l), "(d) block order");
    };
    for (auto type : {Classical::so, Classical::sp})
        for (int n = 2; n <= 12; ++n) {
            if (type == Classical::sp && n % 2)
                continue;
            for (const auto& l : enumerate_levis(type, n)) {
                t.require(dim_z_partition(induce(l)) == levi_orbit_dim_z(l), "(a) dimension");
                order_free(l);
            }
        }
    for (auto type : {Classical::gl, Classical::so, Classical::sp}) {
        std::mt19937_64 rng(4242 + static_cast<int>(type));
        int done = 0;
        for (std::uint64_t seed = 0; done < 50; ++seed) {
            auto l = random_levi(type, rng);
            if (!l.is_proper())
                continue;
            t.require(induce(l) == jordan_oracle(l, seed), "(b) oracle " + to_string(type));
            order_free(l);
            ++done;
        }
    }
    for (int n = 2; n <= 6; ++n)
        for (const auto& l : enumerate_levis(Classical::gl, n)) {
            std::vector<int> sum;
            for (const auto& b : l.gl_blocks) {
                sum.resize(std::max(sum.size(), b.d.size()), 0);
                for (std::size_t i = 0; i < b.d.size(); ++i)
                    sum[i] += b.d[i];
            }
            t.require(induce(l).parts == sum && jordan_oracle(l, 1).parts == sum, "(c) gl sum rule");
            order_free(l);
        }
}

void rigidity(Tally& t) {
    for (auto type : {Classical::gl, Classical::so, Classical::sp})
        for (int n = 1; n <= 12; ++n) {
            if (type == Classical::sp && n % 2)
                continue;
            t.require(is_rigid(Partition{std::vector<int>(n, 1), type}, n).rigid, "zero orbit");
            for (const auto& l : enumerate_levis(type, n)) {
                auto p = induce(l);
                auto r = is_rigid(p, n);
                t.require(!r.rigid && r.witness && induce(*r.witness) == p, "induced orbit");
            }
        }
    auto sp4 = [](std::vector<int> p) { return is_rigid(Partition::make(std::move(p), Classical::sp), 4); };
    auto four = sp4({4});
    t.require(sp4({2, 1, 1}).rigid, "sp4 (2,1,1)");
    t.require(!four.rigid && four.witness && four.witness->gl_blocks == std::vector<GlBlock>{{2, {2}}} &&
                  !four.witness->tail,
              "sp4 (4)");
    t.require(!sp4({2, 2}).rigid, "sp4 (2,2)");
}

void data_fidelity(Tally& t) {
    const std::string dir = ORBITCERT_TEST_DATA_DIR;
    t.require(rigid_rows().size() == 34, "rigid rows");
    t.require(duality_rows().size() == 8, "duality rows");
    t.require(rigid_table_json().dump() == rigid_fixture_json(dir).dump(), "rigid JSON");
    t.require(duality_table_json().dump() == duality_fixture_json(dir).dump(), "duality JSON");
}

void integral_properties(Tally& t) {
    for (const auto& name : all_types) {
        auto m = RootSystemModel::build(name);
        std::mt19937_64 rng(std::hash<std::string>{}(name));
        std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
        for (int trial = 0; trial < 200; ++trial) {
            Weight x(m.ambient_dim());
            for (std::size_t i = 0; i < m.rank(); ++i)
                x += m.fundamental_weights()[i] * make_rational(num(rng), den(rng));
            auto sys = integral_system(m, x);
            for (std::size_t i = 0; i < sys.simple_system.size(); ++i)
                for (std::size_t j = i + 1; j < sys.simple_system.size(); ++j)
                    t.require(dot(sys.simple_system[i], sys.simple_system[j]) <= 0, name + " pairwise");
            std::size_t pos = 0;
            for (const auto& c : sys.cartan_type)
                pos += c.positive_root_count();
            t.require(2 * pos == sys.roots.size(), name + " root count");
        }
        auto c = cor68_dim(m, m.rho());
        t.require(c && *c == 0, name + " cor68(rho)");
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Tally&)> run;
        double limit_s;
    };
    const std::vector<Criterion> all{
        {1, "E8 flagship certificate", e8_flagship, 1.0},
        {2, "table reproduction via Levi realizations", table_reproduction, 0},
        {3, "delta congruence sweep", delta_congruence, 30.0},
        {4, "rho and fundamental weight axioms", weight_axioms, 0},
        {5, "centralizer oracle equivalence", centralizer_equivalence, 60.0},
        {6, "induction invariants", induction_invariants, 0},
        {7, "rigidity brute force", rigidity, 0},
        {8, "data fidelity", data_fidelity, 0},
        {9, "integral-system properties", integral_properties, 0},
    };
    int failures = 0;
    for (const auto& c : all) {
        Tally t;
        auto start = Clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_s > 0)
            t.require(secs < c.limit_s, "time limit");
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", secs);
        std::cout << "criterion " << c.id << ": " << (t.ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << timing
                  << ")";
        if (!t.ok)
            std::cout << "  first failure: " << t.why.str();
        std::cout << '\n';
        failures += !t.ok;
    }
    return failures;
}
