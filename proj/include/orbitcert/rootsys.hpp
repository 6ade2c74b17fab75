#pragma once

#include "orbitcert/linalg.hpp"
#include "orbitcert/rational.hpp"
#include "orbitcert/weight.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitcert {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
    Family family = Family::A;
    int rank = 1;

    std::string str() const;
    // Accepts "E8", "A5", "b3" ... Throws std::invalid_argument on unknown
    // families or ranks outside the supported range.
    static CartanType parse(std::string_view text);

    std::size_t positive_root_count() const;

    friend bool operator==(const CartanType&, const CartanType&) = default;
};

// Ordering used for rendering multisets: larger rank first, then family.
bool type_precedes(const CartanType& a, const CartanType& b);

// "A5+A2+A1", repeated components collapsed as "2A1". Empty input gives "0".
std::string type_string(std::span<const CartanType> components);

// A root subsystem given by a simple system: its positive roots expressed
// both as ambient vectors and as non-negative integer coefficient vectors
// over the simple system.
struct RootSubsystem {
    std::vector<Weight> simple;
    linalg::Matrix cartan;                  // cartan(i, j) = <alpha_i, alpha_j^vee>
    std::vector<Weight> positive;           // ordered by height
    std::vector<std::vector<int>> coefficients;
};

// Enumerates the positive roots spanned by a simple system using root
// strings; only the integer Cartan matrix drives the recursion.
RootSubsystem generate_subsystem(std::span<const Weight> simple);

// Immutable model of a finite root system in exact epsilon-coordinates.
//
// E8 lives in Q^9 modulo the diagonal with simple roots e_i - e_{i+1}
// (i = 1..7) and e_6 + e_7 + e_8; E7 and E6 reuse that ambient with simple
// systems {a2..a7, a8} and {a3..a7, a8}. A_n and G2 live in sum-zero
// hyperplanes as well. B_n, C_n, D_n, F4 use orthonormal coordinates.
class RootSystemModel {
public:
    static RootSystemModel build(const CartanType& type);
    static RootSystemModel build(std::string_view type) { return build(CartanType::parse(type)); }

    const CartanType& type() const { return type_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return simple_.size(); }
    std::size_t dim() const { return 2 * positive_.size() + rank(); }
    // True when the ambient is a quotient by the diagonal.
    bool projective() const { return projective_; }

    const std::vector<Weight>& simple_roots() const { return simple_; }
    const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    const std::vector<std::vector<int>>& positive_coefficients() const { return coefficients_; }
    // Positive roots followed by their negatives, index-aligned.
    const std::vector<Weight>& roots() const { return roots_; }

    Rational form(const Weight& a, const Weight& b) const { return dot(a, b); }

    // Mean subtraction for projective models, identity otherwise.
    // Throws std::invalid_argument on a length mismatch.
    Weight canonicalize(const Weight& raw) const;
    Weight canonicalize(std::span<const Rational> raw) const;

    std::optional<std::size_t> root_index(const Weight& w) const;
    bool is_root(const Weight& w) const { return root_index(w).has_value(); }
    bool is_positive_root(const Weight& w) const;

    // <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha).
    // Throws std::invalid_argument unless alpha is a root.
    Rational pairing(const Weight& lambda, const Weight& alpha) const;

    linalg::Matrix cartan_matrix() const { return cartan_; }

    const Weight& rho() const { return rho_; }
    const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
    const std::vector<Weight>& fundamental_coweights() const { return fundamental_coweights_; }

    // Squared length of the longest roots.
    const Rational& long_length() const { return long_length_; }

private:
    RootSystemModel() = default;

    CartanType type_;
    std::size_t ambient_dim_ = 0;
    bool projective_ = false;
    std::vector<Weight> simple_;
    std::vector<Weight> simple_coroots_;
    std::vector<Weight> positive_;
    std::vector<std::vector<int>> coefficients_;
    std::vector<Weight> roots_;
    std::map<Weight, std::size_t> index_;
    linalg::Matrix cartan_;
    Weight rho_;
    std::vector<Weight> fundamental_weights_;
    std::vector<Weight> fundamental_coweights_;
    Rational long_length_;
};

// 2 alpha / (alpha, alpha).
Weight coroot(const Weight& alpha);

// 2 (lambda, alpha) / (alpha, alpha) for any nonzero alpha.
Rational coroot_pairing(const Weight& lambda, const Weight& alpha);

// s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha.
Weight reflect(const Weight& lambda, const Weight& alpha);

struct LeviSubsystem {
    std::vector<std::size_t> simple_indices;
    std::vector<Weight> simple;
    std::vector<std::size_t> positive_indices; // indices into model.positive_roots()
    std::vector<Weight> positive;
};

// Positive roots lying in the span of the selected simple roots. Indices are
// zero-based; throws std::invalid_argument on out-of-range or repeated ones.
LeviSubsystem levi_subsystem(const RootSystemModel& model, std::span<const std::size_t> simple_indices);

// Simple system of a sub-root-system S, given as a set of roots of the model
// (either sign). Returns the elements of S that are positive in the model
// and indecomposable as a sum of two such elements, in model root order.
// With use_coroots the decomposition test is done on coroots, which is what
// an integral system requires in non-simply-laced types.
// Throws std::invalid_argument when S is not a root subsystem (the result
// fails to generate S with non-negative integer coefficients).
std::vector<Weight> simple_system_of(const RootSystemModel& model, std::span<const Weight> roots,
                                     bool use_coroots = false);

// Classifies a simple system (pairwise non-positive, linearly independent)
// into connected components. Throws std::domain_error when a component is
// not of finite type. Output sorted by type_precedes.
std::vector<CartanType> identify_type(std::span<const Weight> simple_system);

// Bala-Carter style label of a Levi given by simple indices: components of
// type A made of short roots in a non-simply-laced model get a "~" prefix,
// e.g. "A1+~A1", "~A2+A1", "2A1". The empty Levi gives "0".
std::string levi_label(const RootSystemModel& model, std::span<const std::size_t> simple_indices);

} // namespace orbitcert
