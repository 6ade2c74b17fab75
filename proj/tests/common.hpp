#pragma once

#include "orbitcert/rootsys.hpp"

#include <string>
#include <vector>

namespace testdata {

using orbitcert::Rational;
using orbitcert::Weight;

inline Weight w(std::initializer_list<const char*> xs) {
    std::vector<Rational> v;
    for (auto x : xs)
        v.push_back(orbitcert::parse_rational(x));
    return Weight(std::move(v));
}

inline Weight eps_sum(std::initializer_list<int> one_based, std::size_t dim = 9) {
    Weight r(dim);
    for (int i : one_based)
        r[i - 1] += 1;
    return r;
}

inline Weight eps_diff(int i, int j, std::size_t dim = 9) {
    Weight r(dim);
    r[i - 1] += 1;
    r[j - 1] -= 1;
    return r;
}

// E8 nilpotent, principal in a Levi of type A5+A1.
inline const std::vector<std::size_t> e8_levi{0, 1, 2, 3, 4, 6};
inline Weight e8_h() { return w({"5", "3", "1", "-1", "-3", "-5", "1", "-1", "0"}); }
inline Weight e8_lambda_prime() { return w({"1", "7/6", "1/3", "1/2", "2/3", "5/6", "1/6", "-1/6", "-9/2"}); }
inline Weight e8_delta_prime_raw() { return w({"3/2", "1", "2", "1", "3/2", "1/2", "1", "0", "-4"}); }

// Simple roots of the integral system of the example, as printed.
inline std::vector<Weight> e8_integral_simple_raw() {
    return {eps_sum({7, 4, 3}), eps_diff(2, 7), eps_sum({8, 7, 1}), eps_diff(6, 8),
            eps_sum({8, 5, 4}), eps_sum({8, 6, 3}), eps_sum({7, 5, 2}), eps_sum({1, 3, 5})};
}

inline const std::vector<std::string> all_types{"A1", "A2", "A5", "B2", "B3", "B5", "C3", "C4", "D4", "D5",
                                                "E6", "E7", "E8", "F4", "G2"};

} // namespace testdata
