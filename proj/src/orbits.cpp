#include "orbitcert/orbits.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace orbitcert {

Characteristic make_characteristic(const RootSystemModel& model, const Weight& raw) {
    Characteristic c{model.canonicalize(raw)};
    for (const auto& alpha : model.positive_roots())
        if (!is_integer(model.form(alpha, c.h)))
            throw std::invalid_argument("characteristic is not integral on all roots");
    return c;
}

std::map<int, std::size_t> graded_dims(const RootSystemModel& model, const Characteristic& h) {
    std::map<int, std::size_t> dims;
    dims[0] = model.rank();
    for (const auto& alpha : model.roots()) {
        Rational v = model.form(alpha, h.h);
        if (!is_integer(v))
            throw std::invalid_argument("characteristic is not integral on all roots");
        ++dims[static_cast<int>(v.get_num().get_si())];
    }
    return dims;
}

std::size_t centralizer_dim_from_h(const RootSystemModel& model, const Characteristic& h) {
    auto dims = graded_dims(model, h);
    return dims[0] + (dims.count(1) ? dims[1] : 0);
}

std::size_t orbit_dim_from_h(const RootSystemModel& model, const Characteristic& h) {
    return model.dim() - centralizer_dim_from_h(model, h);
}

std::string to_string(Classical c) {
    switch (c) {
    case Classical::gl: return "gl";
    case Classical::so: return "so";
    case Classical::sp: return "sp";
    }
    return "?";
}

Classical parse_classical(std::string_view text) {
    if (text == "gl" || text == "A")
        return Classical::gl;
    if (text == "so" || text == "B" || text == "D")
        return Classical::so;
    if (text == "sp" || text == "C")
        return Classical::sp;
    throw std::invalid_argument("unknown classical type '" + std::string(text) + "' (expected gl, so or sp)");
}

bool is_parity_valid(std::span<const int> parts, Classical context) {
    if (context == Classical::gl)
        return true;
    const int bad_parity = context == Classical::so ? 0 : 1;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (parts[i] % 2 == bad_parity && (j - i) % 2 == 1)
            return false;
        i = j;
    }
    return true;
}

Partition Partition::make(std::vector<int> parts, Classical context) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    if (!is_parity_valid(parts, context))
        throw std::invalid_argument("partition is not parity-valid for " + to_string(context));
    return Partition{std::move(parts), context};
}

int Partition::total() const {
    int s = 0;
    for (int p : parts)
        s += p;
    return s;
}

std::vector<int> transpose(std::span<const int> parts) {
    std::vector<int> t;
    if (parts.empty())
        return t;
    const int longest = *std::max_element(parts.begin(), parts.end());
    for (int i = 1; i <= longest; ++i) {
        int count = 0;
        for (int p : parts)
            if (p >= i)
                ++count;
        t.push_back(count);
    }
    return t;
}

int dim_z_partition(const Partition& p) {
    if (!is_parity_valid(p.parts, p.context))
        throw std::invalid_argument("partition is not parity-valid for " + to_string(p.context));
    int squares = 0;
    for (int m : transpose(p.parts))
        squares += m * m;
    int odd = 0;
    for (int part : p.parts)
        odd += part % 2;
    switch (p.context) {
    case Classical::gl: return squares;
    case Classical::so: return (squares - odd) / 2;
    case Classical::sp: return (squares + odd) / 2;
    }
    return 0;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

const std::array<OrbitRecord, 34> kRigid{{
    {1, "G2", "A1", "A1", 8},
    {2, "G2", "~A1", "A1", 6},
    {3, "F4", "A1", "C3", 36},
    {4, "F4", "~A1", "A3", 30},
    {5, "F4", "A1+~A1", "A1+A1", 24},
    {6, "F4", "A2+~A1", "A1", 18},
    {7, "F4", "~A2+A1", "A1", 16},
    {8, "E6", "A1", "A5", 56},
    {9, "E6", "3A1", "A2+A1", 38},
    {10, "E6", "2A2+A1", "A1", 24},
    {11, "E7", "A1", "D6", 99},
    {12, "E7", "2A1", "B4+A1", 81},
    {13, "E7", "(3A1)'", "C3+A1", 69},
    {14, "E7", "4A1", "C3", 63},
    {15, "E7", "A2+2A1", "3A1", 51},
    {16, "E7", "2A2+A1", "2A1", 43},
    {17, "E7", "(A3+A1)'", "3A1", 41},
    {18, "E8", "A1", "E7", 190},
    {19, "E8", "2A1", "B6", 156},
    {20, "E8", "3A1", "F4+A1", 136},
    {21, "E8", "4A1", "C4", 120},
    {22, "E8", "A2+A1", "A5", 112},
    {23, "E8", "A2+2A1", "B3+A1", 102},
    {24, "E8", "A2+3A1", "G2+A1", 94},
    {25, "E8", "2A2+A1", "G2+A1", 86},
    {26, "E8", "A3+A1", "B3+A1", 84},
    {27, "E8", "2A2+2A1", "B2", 80},
    {28, "E8", "A3+2A1", "B2+A1", 76},
    {29, "E8", "D4(a1)+A1", "3A1", 72},
    {30, "E8", "A3+A2+A1", "2A1", 66},
    {31, "E8", "2A3", "B2", 60},
    {32, "E8", "A4+A3", "A1", 48},
    {33, "E8", "A5+A1", "2A1", 46},
    {34, "E8", "D5(a1)+A2", "A1", 46},
}};

const std::array<DualityRecord, 8> kDuality{{
    {4, "F4", "~A1", "F4(a1)"},
    {5, "F4", "A1+~A1", "F4(a2)"},
    {12, "E7", "2A1", "E7(a2)"},
    {15, "E7", "A2+2A1", "E7(a4)"},
    {19, "E8", "2A1", "E8(a2)"},
    {22, "E8", "A2+A1", "E8(a4)"},
    {23, "E8", "A2+2A1", "E8(b4)"},
    {29, "E8", "D4(a1)+A1", "E8(a6)"},
}};

} // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (n < 0)
        return out;
    partitions_rec(n, n, cur, out);
    return out;
}

std::span<const OrbitRecord> rigid_rows() {
    return kRigid;
}

std::span<const DualityRecord> duality_rows() {
    return kDuality;
}

std::optional<OrbitRecord> rigid_table(std::string_view algebra, std::string_view bala_carter) {
    for (const auto& r : kRigid)
        if (r.algebra == algebra && r.bala_carter == bala_carter)
            return r;
    return std::nullopt;
}

std::optional<DualityRecord> duality_table(std::string_view algebra, std::string_view e_label) {
    for (const auto& r : kDuality)
        if (r.algebra == algebra && r.e_label == e_label)
            return r;
    return std::nullopt;
}

BvCandidate bv_candidate(const RootSystemModel& model, const Characteristic& h_dual) {
    bool even = true;
    for (const auto& alpha : model.simple_roots()) {
        Rational v = model.form(alpha, h_dual.h);
        if (v < 0)
            throw std::invalid_argument("h_dual is not dominant");
        if (!is_integer(v) || v.get_num() % 2 != 0)
            even = false;
    }
    return {h_dual.h - model.rho(), even};
}

} // namespace orbitcert
