#pragma once

#include "orbitcert/rootsys.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitcert {

// Semisimple element h of an sl2-triple, stored as a canonical weight via the
// invariant form. Only integrality on roots is enforced.
struct Characteristic {
    Weight h;
};

// Canonicalizes and checks <alpha, h> in Z for every root.
// Throws std::invalid_argument otherwise.
Characteristic make_characteristic(const RootSystemModel& model, const Weight& raw);

// i -> dim g(i), where g(i) is the ad h eigenspace; g(0) includes the Cartan.
std::map<int, std::size_t> graded_dims(const RootSystemModel& model, const Characteristic& h);

// dim g(0) + dim g(1).
std::size_t centralizer_dim_from_h(const RootSystemModel& model, const Characteristic& h);
std::size_t orbit_dim_from_h(const RootSystemModel& model, const Characteristic& h);

enum class Classical { gl, so, sp };

std::string to_string(Classical c);
Classical parse_classical(std::string_view text);

// so: even parts have even multiplicity; sp: odd parts have even multiplicity.
bool is_parity_valid(std::span<const int> parts, Classical context);

struct Partition {
    std::vector<int> parts;
    Classical context = Classical::gl;

    // Sorts nothing: throws std::invalid_argument unless parts are positive,
    // weakly decreasing and parity-valid for the context.
    static Partition make(std::vector<int> parts, Classical context);

    int total() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

std::vector<int> transpose(std::span<const int> parts);

// gl: sum m_i^2; so: (sum m_i^2 - #odd parts)/2; sp: (sum m_i^2 + #odd parts)/2
// with m the transpose.
int dim_z_partition(const Partition& p);

// All partitions of n in decreasing lexicographic order, (n) first.
std::vector<std::vector<int>> partitions_of(int n);

// Rows of the rigid-orbit table for exceptional algebras. Labels are ASCII:
// "~A1" for a short-root A1, "(3A1)'" for primed classes.
struct OrbitRecord {
    int n;
    std::string algebra;
    std::string bala_carter;
    std::string q_type; // reductive centralizer type, verbatim
    int dim_z;
};

struct DualityRecord {
    int n;
    std::string algebra;
    std::string e_label;
    std::string e_dual_label;
};

std::span<const OrbitRecord> rigid_rows();
std::span<const DualityRecord> duality_rows();
std::optional<OrbitRecord> rigid_table(std::string_view algebra, std::string_view bala_carter);
std::optional<DualityRecord> duality_table(std::string_view algebra, std::string_view e_label);

struct BvCandidate {
    Weight lambda;  // h_dual - rho
    bool even;      // every <alpha_i, h_dual> is even
};

// Throws std::invalid_argument when h_dual is not dominant.
BvCandidate bv_candidate(const RootSystemModel& model, const Characteristic& h_dual);

} // namespace orbitcert
