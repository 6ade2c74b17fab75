#pragma once

#include "orbitcert/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace orbitcert {

// A vector of exact rational coordinates in a model's ambient space.
// Elements of h and h* share this type; the invariant form identifies them.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t dim) : coords_(dim, Rational(0)) {}
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Weight from_ints(std::span<const int> values);

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    Weight& operator*=(const Rational& scalar);

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
    friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
    friend Weight operator-(Weight a) { return a *= Rational(-1); }
    friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Rational> coords_;
};

// Standard dot product of ambient coordinates.
Rational dot(const Weight& a, const Weight& b);

} // namespace orbitcert
