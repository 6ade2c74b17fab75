#include "orbitcert/weight.hpp"

#include <stdexcept>

namespace orbitcert {

Weight Weight::from_ints(std::span<const int> values) {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (int v : values)
        c.emplace_back(v);
    return Weight(std::move(c));
}

bool Weight::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0)
            return false;
    return true;
}

Weight& Weight::operator+=(const Weight& other) {
    if (other.size() != size())
        throw std::invalid_argument("weight dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    if (other.size() != size())
        throw std::invalid_argument("weight dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& scalar) {
    for (auto& c : coords_)
        c *= scalar;
    return *this;
}

Rational dot(const Weight& a, const Weight& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("weight dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace orbitcert
