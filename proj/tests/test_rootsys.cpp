#include <doctest.h>

#include "common.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace orbitcert;
using namespace testdata;

namespace {

linalg::Matrix ints(std::vector<std::vector<int>> rows) {
    linalg::Matrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("positive root counts and dimensions") {
    struct Row { const char* type; std::size_t pos, rank, dim; };
    for (auto r : {Row{"A1", 1, 1, 3}, Row{"A4", 10, 4, 24}, Row{"B3", 9, 3, 21}, Row{"C3", 9, 3, 21},
                   Row{"D4", 12, 4, 28}, Row{"E6", 36, 6, 78}, Row{"E7", 63, 7, 133}, Row{"E8", 120, 8, 248},
                   Row{"F4", 24, 4, 52}, Row{"G2", 6, 2, 14}, Row{"B2", 4, 2, 10}, Row{"D6", 30, 6, 66}}) {
        CAPTURE(r.type);
        auto m = RootSystemModel::build(r.type);
        CHECK(m.positive_roots().size() == r.pos);
        CHECK(m.rank() == r.rank);
        CHECK(m.dim() == r.dim);
        CHECK(m.roots().size() == 2 * r.pos);
    }
    CHECK(RootSystemModel::build("E8").ambient_dim() == 9);
}

TEST_CASE("type parsing ranges") {
    CHECK_THROWS_AS(CartanType::parse("C2"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("D3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("A33"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("X2"), std::invalid_argument);
    CHECK(CartanType::parse("b3") == CartanType{Family::B, 3});
    CHECK(CartanType::parse("A32").rank == 32);
}

TEST_CASE("A1 and G2 basics") {
    auto a1 = RootSystemModel::build("A1");
    REQUIRE(a1.positive_roots().size() == 1);
    const auto& alpha = a1.positive_roots()[0];
    CHECK(a1.pairing(alpha, alpha) == 2);
    CHECK(a1.rho() == alpha * Rational(1, 2));

    auto g2 = RootSystemModel::build("G2");
    CHECK(g2.positive_roots().size() == 6);
    CHECK(g2.cartan_matrix() == ints({{2, -1}, {-3, 2}}));
    CHECK(dot(g2.simple_roots()[0], g2.simple_roots()[0]) * 3 == dot(g2.simple_roots()[1], g2.simple_roots()[1]));
}

TEST_CASE("standard Cartan matrices") {
    CHECK(RootSystemModel::build("B3").cartan_matrix() == ints({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
    CHECK(RootSystemModel::build("C3").cartan_matrix() == ints({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
    CHECK(RootSystemModel::build("D4").cartan_matrix() ==
          ints({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
    CHECK(RootSystemModel::build("F4").cartan_matrix() ==
          ints({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}));
    CHECK(RootSystemModel::build("A3").cartan_matrix() == ints({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
    // E8: chain a1..a7 with a8 attached to a5.
    auto e8 = RootSystemModel::build("E8").cartan_matrix();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            int expect = i == j ? 2 : 0;
            if ((i + 1 == j || j + 1 == i) && i < 7 && j < 7)
                expect = -1;
            if ((i == 7 && j == 4) || (i == 4 && j == 7))
                expect = -1;
            CHECK(e8(i, j) == expect);
        }
}

TEST_CASE("canonicalize") {
    auto e8 = RootSystemModel::build("E8");
    auto a8 = e8.canonicalize(eps_sum({6, 7, 8}));
    int thirds = 0, twothirds = 0;
    for (std::size_t i = 0; i < 9; ++i) {
        if (a8[i] == Rational(-1, 3)) ++thirds;
        if (a8[i] == Rational(2, 3)) ++twothirds;
    }
    CHECK(thirds == 6);
    CHECK(twothirds == 3);
    CHECK(dot(a8, a8) == 2);
    CHECK(e8.canonicalize(Weight(9)).is_zero());
    CHECK(e8.canonicalize(w({"1", "1", "1", "1", "1", "1", "1", "1", "1"})).is_zero());
    CHECK_THROWS_AS(e8.canonicalize(Weight(8)), std::invalid_argument);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-20, 20);
    for (const auto& t : all_types) {
        auto m = RootSystemModel::build(t);
        for (int trial = 0; trial < 10; ++trial) {
            Weight x(m.ambient_dim());
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = make_rational(d(rng), 1 + std::abs(d(rng)));
            auto c = m.canonicalize(x);
            CHECK(m.canonicalize(c) == c);
            for (const auto& a : m.simple_roots())
                CHECK(m.pairing(x, a) == m.pairing(c, a));
        }
    }
}

TEST_CASE("E8 rho and pairings") {
    auto e8 = RootSystemModel::build("E8");
    CHECK(e8.rho() == e8.canonicalize(w({"7", "6", "5", "4", "3", "2", "1", "0", "-22"})));
    CHECK(e8.pairing(e8.rho(), e8.simple_roots()[0]) == 1);
    auto lp = e8.canonicalize(e8_lambda_prime());
    CHECK(e8.pairing(lp, e8.canonicalize(eps_sum({7, 4, 3}))) == 1);
    CHECK(e8.pairing(lp, e8.simple_roots()[7]) == Rational(5, 6));
    CHECK(e8.pairing(lp, e8.simple_roots()[0]) == Rational(-1, 6));
    CHECK(e8.pairing(lp, e8.simple_roots()[6]) == Rational(1, 3));
    CHECK_THROWS_AS(e8.pairing(lp, e8.canonicalize(eps_diff(1, 9) * Rational(2))), std::invalid_argument);
}

TEST_CASE("E8 fundamental weights in closed form") {
    // pi_i = e_1 + ... + e_i - min(i, 15 - 2i) e_9 for i <= 7, pi_8 = -3 e_9.
    auto e8 = RootSystemModel::build("E8");
    for (int i = 1; i <= 8; ++i) {
        Weight p(9);
        if (i <= 7) {
            for (int j = 0; j < i; ++j)
                p[j] = 1;
            p[8] = -std::min(i, 15 - 2 * i);
        } else {
            p[8] = -3;
        }
        CAPTURE(i);
        CHECK(e8.fundamental_weights()[i - 1] == e8.canonicalize(p));
    }
}

TEST_CASE("rho and fundamental weight axioms for every type") {
    for (const auto& t : all_types) {
        CAPTURE(t);
        auto m = RootSystemModel::build(t);
        Weight sum(m.ambient_dim());
        for (std::size_t i = 0; i < m.rank(); ++i) {
            CHECK(m.pairing(m.rho(), m.simple_roots()[i]) == 1);
            for (std::size_t j = 0; j < m.rank(); ++j) {
                CHECK(m.pairing(m.fundamental_weights()[i], m.simple_roots()[j]) == (i == j ? 1 : 0));
                CHECK(m.form(m.fundamental_coweights()[i], m.simple_roots()[j]) == (i == j ? 1 : 0));
            }
            sum += m.fundamental_weights()[i];
        }
        CHECK(sum == m.rho());
        Weight half(m.ambient_dim());
        for (const auto& a : m.positive_roots())
            half += a;
        CHECK(half * Rational(1, 2) == m.rho());
        for (const auto& a : m.positive_roots()) {
            Rational v = m.pairing(m.rho(), a);
            CHECK(v >= 1);
            bool simple = std::find(m.simple_roots().begin(), m.simple_roots().end(), a) != m.simple_roots().end();
            CHECK((v == 1) == simple);
        }
    }
}

TEST_CASE("levi subsystems") {
    auto e8 = RootSystemModel::build("E8");
    CHECK(levi_subsystem(e8, e8_levi).positive.size() == 16);
    CHECK(levi_subsystem(e8, std::vector<std::size_t>{}).positive.empty());
    std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(levi_subsystem(e8, all).positive.size() == 120);
    CHECK_THROWS_AS(levi_subsystem(e8, std::vector<std::size_t>{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(levi_subsystem(e8, std::vector<std::size_t>{8}), std::invalid_argument);
    CHECK(levi_label(e8, e8_levi) == "A5+A1");

    auto f4 = RootSystemModel::build("F4");
    CHECK(levi_label(f4, std::vector<std::size_t>{0}) == "A1");
    CHECK(levi_label(f4, std::vector<std::size_t>{3}) == "~A1");
    CHECK(levi_label(f4, std::vector<std::size_t>{0, 3}) == "A1+~A1");
    CHECK(levi_label(f4, std::vector<std::size_t>{2, 3}) == "~A2");
    CHECK(levi_label(f4, std::vector<std::size_t>{0, 2}) == "A1+~A1");
    CHECK(levi_label(e8, std::vector<std::size_t>{0, 2}) == "2A1");
}

TEST_CASE("simple systems and the round trip through Levi subsystems") {
    for (const auto& t : {"E6", "F4", "G2", "B3", "C3", "D4"}) {
        auto m = RootSystemModel::build(t);
        const std::size_t r = m.rank();
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < r; ++i)
                if (mask & (1u << i))
                    idx.push_back(i);
            auto sub = levi_subsystem(m, idx);
            std::vector<Weight> both = sub.positive;
            for (const auto& a : sub.positive)
                both.push_back(-a);
            auto simple = simple_system_of(m, both);
            CHECK(std::set<Weight>(simple.begin(), simple.end()) == std::set<Weight>(sub.simple.begin(), sub.simple.end()));
        }
    }
    auto e8 = RootSystemModel::build("E8");
    CHECK(simple_system_of(e8, e8.roots()) == e8.simple_roots());
    const auto& a = e8.positive_roots()[17];
    std::vector<Weight> pm{a, -a};
    CHECK(simple_system_of(e8, pm) == std::vector<Weight>{a});
}

TEST_CASE("identify_type") {
    auto e8 = RootSystemModel::build("E8");
    CHECK(type_string(identify_type(e8.simple_roots())) == "E8");
    std::vector<Weight> pair{e8.simple_roots()[0], e8.simple_roots()[2]};
    CHECK(type_string(identify_type(pair)) == "2A1");

    std::vector<Weight> s;
    for (const auto& x : e8_integral_simple_raw())
        s.push_back(e8.canonicalize(x));
    CHECK(type_string(identify_type(s)) == "A5+A2+A1");
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(s.begin(), s.end(), rng);
        CHECK(type_string(identify_type(s)) == "A5+A2+A1");
    }
    for (const auto& t : all_types) {
        auto m = RootSystemModel::build(t);
        auto simple = m.simple_roots();
        for (int i = 0; i < 5; ++i) {
            std::shuffle(simple.begin(), simple.end(), rng);
            CHECK(type_string(identify_type(simple)) == (t == "B2" ? std::string("B2") : t));
        }
    }
    // Rank-2 double bond reads as B2 from either end.
    auto c3 = RootSystemModel::build("C3");
    std::vector<Weight> c2{c3.simple_roots()[1], c3.simple_roots()[2]};
    CHECK(type_string(identify_type(c2)) == "B2");
    // Affine A2 is not of finite type.
    auto a2 = RootSystemModel::build("A2");
    std::vector<Weight> affine{a2.simple_roots()[0], a2.simple_roots()[1], -(a2.simple_roots()[0] + a2.simple_roots()[1])};
    CHECK_THROWS(identify_type(affine));
}
