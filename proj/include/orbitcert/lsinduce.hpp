#pragma once

#include "orbitcert/linalg.hpp"
#include "orbitcert/orbits.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace orbitcert {

// Raised when an exhaustive search or an oracle would exceed its size bound.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlBlock {
    int k = 0;
    std::vector<int> d; // partition of k

    friend bool operator==(const GlBlock&, const GlBlock&) = default;
};

struct LeviTail {
    int m = 0;
    std::vector<int> c; // parity-valid partition of m for the ambient type

    friend bool operator==(const LeviTail&, const LeviTail&) = default;
};

// Levi subalgebra gl_{k_1} x ... x gl_{k_r} (x X_m) of gl_N, so_N or sp_N,
// each factor carrying a nilpotent orbit.
struct LeviDescriptor {
    Classical type = Classical::gl;
    int ambient = 0;
    std::vector<GlBlock> gl_blocks;
    std::optional<LeviTail> tail; // so/sp only; absent means m = 0

    // Throws std::invalid_argument on any inconsistency.
    void validate() const;
    int tail_size() const { return tail ? tail->m : 0; }
    bool is_proper() const;

    friend bool operator==(const LeviDescriptor&, const LeviDescriptor&) = default;
};

// True when a dominates b (partial sums, zero padded).
bool dominates(std::span<const int> a, std::span<const int> b);

// Dominance-greatest parity-valid partition below `parts`. Linear-time
// greedy; collapse_bruteforce is the normative definition.
Partition collapse(std::vector<int> parts, Classical type);
Partition collapse_bruteforce(std::vector<int> parts, Classical type);

// so partitions with only even parts label two orbits; the partition alone
// cannot tell them apart.
bool is_very_even(const Partition& p);

Partition induce(const LeviDescriptor& levi);

// Bound for the matrix oracles, read from ORBITCERT_MAX_AMBIENT (default 16).
int max_oracle_ambient();
// Bound for is_rigid (default 14).
int max_rigid_ambient();

// Matrix realizations. The bilinear form on Q^N is antidiagonal:
// so: J(i, N-1-i) = 1; sp: J(i, N-1-i) = 1 for i < N/2 and -1 otherwise.
linalg::Matrix form_matrix(Classical type, int n);
bool in_classical_algebra(const linalg::Matrix& x, Classical type);

// Nilpotent of Jordan type p inside gl/so/sp of size p.total().
linalg::Matrix realize_nilpotent(const Partition& p);

// Jordan type of a nilpotent matrix from ranks of its powers.
// Throws std::domain_error if the matrix is not nilpotent.
std::vector<int> jordan_type(const linalg::Matrix& x);

// Levi representative plus
// an integer element of the nilradical with entries drawn from [-9, 9].
// Returns the dominance-greatest Jordan type over the trials.
Partition jordan_oracle(const LeviDescriptor& levi, std::uint64_t seed, int trials = 8);

// dim ker(ad e) on gl/so/sp by exact linear algebra.
int centralizer_oracle(const Partition& p);

struct RigidityResult {
    bool rigid = true;
    std::optional<LeviDescriptor> witness;
};

// Exhaustive search over proper Levi descriptors and their orbits.
RigidityResult is_rigid(const Partition& p, int ambient);

// All proper Levi descriptors of (type, ambient) with every choice of orbit
// data, in the enumeration order used by is_rigid.
std::vector<LeviDescriptor> enumerate_levis(Classical type, int ambient);

} // namespace orbitcert
