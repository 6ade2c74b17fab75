#include "orbitcert/lsinduce.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <numeric>
#include <random>
#include <string>

namespace orbitcert {

using linalg::Matrix;

namespace {

void check_partition_of(std::span<const int> parts, int total, const char* what) {
    int s = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw std::invalid_argument(std::string(what) + " is not a partition");
        s += parts[i];
    }
    if (s != total)
        throw std::invalid_argument(std::string(what) + " does not sum to its block size");
}

std::vector<int> add_padded(std::span<const int> a, std::span<const int> b, int scale_b) {
    std::vector<int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += scale_b * b[i];
    return out;
}

void strip_zeros(std::vector<int>& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

int env_bound(const char* name, int fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            int b = std::stoi(v);
            if (b > 0)
                return b;
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

} // namespace

void LeviDescriptor::validate() const {
    if (ambient < 0)
        throw std::invalid_argument("negative ambient size");
    int used = 0;
    for (const auto& b : gl_blocks) {
        if (b.k <= 0)
            throw std::invalid_argument("gl block size must be positive");
        check_partition_of(b.d, b.k, "gl block orbit");
        used += type == Classical::gl ? b.k : 2 * b.k;
    }
    if (type == Classical::gl) {
        if (tail && tail->m != 0)
            throw std::invalid_argument("gl Levi descriptors have no classical tail");
    } else if (tail) {
        if (tail->m < 0)
            throw std::invalid_argument("negative tail size");
        check_partition_of(tail->c, tail->m, "tail orbit");
        if (!is_parity_valid(tail->c, type))
            throw std::invalid_argument("tail orbit is not parity-valid for " + to_string(type));
    }
    used += tail_size();
    if (used != ambient)
        throw std::invalid_argument("Levi block sizes do not add up to the ambient size");
    if (type == Classical::sp && ambient % 2 != 0)
        throw std::invalid_argument("sp ambient must be even");
}

bool LeviDescriptor::is_proper() const {
    // gl_1 inside so_2 is the whole algebra, so compare dimensions
    auto classical_dim = [this](int n) {
        return type == Classical::gl ? n * n : type == Classical::so ? n * (n - 1) / 2 : n * (n + 1) / 2;
    };
    int d = classical_dim(tail_size());
    if (type == Classical::gl)
        d = 0;
    for (const auto& b : gl_blocks)
        d += b.k * b.k;
    return d < classical_dim(ambient);
}

bool dominates(std::span<const int> a, std::span<const int> b) {
    long sa = 0, sb = 0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb)
            return false;
    }
    return true;
}

Partition collapse(std::vector<int> parts, Classical type) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    strip_zeros(parts);
    if (type == Classical::gl)
        return Partition{parts, type};
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    if (type == Classical::sp && total % 2 != 0)
        throw std::domain_error("no sp partition of an odd total");
    const int bad = type == Classical::so ? 0 : 1;
    parts.push_back(0);
    while (true) {
        // largest part of the bad parity with odd multiplicity
        int q = -1;
        std::size_t last = 0;
        for (std::size_t i = 0; i < parts.size() && parts[i] > 0;) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i])
                ++j;
            if (parts[i] % 2 == bad && (j - i) % 2 == 1) {
                q = parts[i];
                last = j - 1;
                break;
            }
            i = j;
        }
        if (q < 0)
            break;
        parts[last] -= 1;
        std::size_t k = last + 1;
        while (k < parts.size() && parts[k] >= q - 1)
            ++k;
        if (k == parts.size())
            parts.push_back(0);
        parts[k] += 1;
        if (parts.back() != 0)
            parts.push_back(0);
    }
    strip_zeros(parts);
    return Partition{parts, type};
}

Partition collapse_bruteforce(std::vector<int> parts, Classical type) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    strip_zeros(parts);
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<std::vector<int>> below;
    for (auto& q : partitions_of(total))
        if (is_parity_valid(q, type) && dominates(parts, q))
            below.push_back(std::move(q));
    for (const auto& cand : below) {
        bool greatest = true;
        for (const auto& other : below)
            if (!dominates(cand, other)) {
                greatest = false;
                break;
            }
        if (greatest)
            return Partition{cand, type};
    }
    throw std::domain_error("no dominance-greatest parity-valid partition");
}

bool is_very_even(const Partition& p) {
    if (p.context != Classical::so || p.parts.empty())
        return false;
    return std::all_of(p.parts.begin(), p.parts.end(), [](int x) { return x % 2 == 0; });
}

Partition induce(const LeviDescriptor& levi) {
    levi.validate();
    std::vector<int> gl_sum;
    for (const auto& b : levi.gl_blocks)
        gl_sum = add_padded(gl_sum, b.d, 1);
    if (levi.type == Classical::gl)
        return Partition{gl_sum, Classical::gl};

    const std::vector<int> c = levi.tail ? levi.tail->c : std::vector<int>{};
    Partition folded = collapse(add_padded(c, gl_sum, 2), levi.type);

    // one maximal-Levi step per block, innermost first, in both orders
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<int> cur = c;
        for (std::size_t i = 0; i < levi.gl_blocks.size(); ++i) {
            const auto& b = pass == 0 ? levi.gl_blocks[levi.gl_blocks.size() - 1 - i] : levi.gl_blocks[i];
            cur = collapse(add_padded(cur, b.d, 2), levi.type).parts;
        }
        if (cur != folded.parts)
            throw std::logic_error("induction depends on the block order");
    }
    return folded;
}

int max_oracle_ambient() {
    return env_bound("ORBITCERT_MAX_AMBIENT", 16);
}

int max_rigid_ambient() {
    return 14;
}

Matrix form_matrix(Classical type, int n) {
    Matrix j(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int v = 1;
        if (type == Classical::sp && 2 * i >= n)
            v = -1;
        j(static_cast<std::size_t>(i), static_cast<std::size_t>(n - 1 - i)) = v;
    }
    return j;
}

namespace {

// sigma(X) = -J^{-1} X^T J; the classical algebra is its fixed space.
Matrix sigma(const Matrix& x, const Matrix& j, const Matrix& j_inv) {
    Matrix s = j_inv * x.transpose() * j;
    Matrix neg(s.rows(), s.cols());
    return neg - s;
}

// Upper Jordan block chain sizes `parts` placed along the diagonal from `offset`.
void place_jordan(Matrix& m, std::size_t offset, std::span<const int> parts) {
    for (int q : parts) {
        for (int i = 0; i + 1 < q; ++i)
            m(offset + static_cast<std::size_t>(i), offset + static_cast<std::size_t>(i) + 1) = 1;
        offset += static_cast<std::size_t>(q);
    }
}

struct HyperbolicPair {
    std::vector<Rational> x, y;
};

// Realizes type p with respect to the antidiagonal form J.
Matrix realize_with_form(const std::vector<int>& parts, Classical type) {
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    const std::size_t un = static_cast<std::size_t>(n);
    const int eps = type == Classical::so ? 1 : -1; // B(y, x) = eps B(x, y)
    const int single_parity = type == Classical::so ? 1 : 0;

    // piece model: explicit nilpotent plus its Gram matrix
    Matrix e(un, un), g(un, un);
    std::vector<HyperbolicPair> pairs;
    struct Center {
        std::vector<Rational> z;
        int value;
    };
    std::vector<Center> centers;
    auto unit = [&](std::size_t i) {
        std::vector<Rational> v(un, Rational(0));
        v[i] = 1;
        return v;
    };

    std::size_t off = 0;
    int next_center_sign = 1;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const int q = parts[i];
        const std::size_t uq = static_cast<std::size_t>(q);
        std::size_t mult = j - i;
        std::size_t singles = q % 2 == single_parity ? mult % 2 : 0;
        std::size_t npairs = (mult - singles) / 2;
        for (std::size_t t = 0; t < npairs; ++t) {
            // U (+) U' with B(u_a, u'_b) = delta_ab, e u_{a+1} = u_a, e u'_a = -u'_{a+1}
            for (std::size_t a = 0; a < uq; ++a) {
                if (a + 1 < uq) {
                    e(off + a, off + a + 1) = 1;
                    e(off + uq + a + 1, off + uq + a) = -1;
                }
                g(off + a, off + uq + a) = 1;
                g(off + uq + a, off + a) = eps;
                pairs.push_back({unit(off + a), unit(off + uq + a)});
            }
            off += 2 * uq;
        }
        if (singles) {
            // one Jordan chain, antidiagonal form with alternating signs
            int sign = 1;
            if (q % 2 == 1) {
                const int center_sign = ((q + 1) / 2) % 2 == 0 ? 1 : -1;
                sign = center_sign == next_center_sign ? 1 : -1;
                next_center_sign = -next_center_sign;
            }
            for (std::size_t a = 0; a + 1 < uq; ++a)
                e(off + a, off + a + 1) = 1;
            for (std::size_t a = 0; a < uq; ++a) {
                const int s = ((a + 1) % 2 == 0 ? 1 : -1) * sign;
                g(off + a, off + uq - 1 - a) = s;
            }
            for (std::size_t a = 0; 2 * a + 1 < uq; ++a) {
                auto y = unit(off + uq - 1 - a);
                Rational val = g(off + a, off + uq - 1 - a);
                for (auto& c : y)
                    c /= val;
                pairs.push_back({unit(off + a), y});
            }
            if (q % 2 == 1) {
                std::size_t c = off + uq / 2;
                centers.push_back({unit(c), static_cast<int>(g(c, c).get_num().get_si())});
            }
            off += uq;
        }
        i = j;
    }
    // centers alternate +1, -1, ...; pair neighbours into hyperbolic planes
    std::optional<std::vector<Rational>> middle;
    for (std::size_t c = 0; c + 1 < centers.size(); c += 2) {
        const Rational a = centers[c].value;
        std::vector<Rational> x(un), y(un);
        for (std::size_t r = 0; r < un; ++r) {
            x[r] = centers[c].z[r] + centers[c + 1].z[r];
            y[r] = (centers[c].z[r] - centers[c + 1].z[r]) / (2 * a);
        }
        pairs.push_back({x, y});
    }
    if (centers.size() % 2 == 1)
        middle = centers.back().z;

    const Matrix j = form_matrix(type, n);
    Matrix p(un, un);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const Rational t = j(k, un - 1 - k);
        for (std::size_t r = 0; r < un; ++r) {
            p(r, k) = pairs[k].x[r];
            p(r, un - 1 - k) = pairs[k].y[r] * t;
        }
    }
    if (middle)
        for (std::size_t r = 0; r < un; ++r)
            p(r, un / 2) = (*middle)[r];
    if (!(p.transpose() * g * p == j))
        throw std::logic_error("failed to match the antidiagonal form");
    Matrix out = linalg::inverse(p) * e * p;
    if (!in_classical_algebra(out, type))
        throw std::logic_error("realized nilpotent is not in the classical algebra");
    return out;
}

} // namespace

bool in_classical_algebra(const Matrix& x, Classical type) {
    if (type == Classical::gl)
        return true;
    const Matrix j = form_matrix(type, static_cast<int>(x.rows()));
    return (x.transpose() * j + j * x).is_zero();
}

Matrix realize_nilpotent(const Partition& p) {
    if (!is_parity_valid(p.parts, p.context))
        throw std::invalid_argument("partition is not parity-valid for " + to_string(p.context));
    if (p.context == Classical::gl) {
        const std::size_t n = static_cast<std::size_t>(p.total());
        Matrix m(n, n);
        place_jordan(m, 0, p.parts);
        return m;
    }
    return realize_with_form(p.parts, p.context);
}

std::vector<int> jordan_type(const Matrix& x) {
    const std::size_t n = x.rows();
    std::vector<std::size_t> ranks{n};
    Matrix power = Matrix::identity(n);
    while (ranks.back() > 0) {
        power = power * x;
        std::size_t r = linalg::rank(power);
        if (r == ranks.back())
            throw std::domain_error("matrix is not nilpotent");
        ranks.push_back(r);
    }
    // #{parts >= i} = rank(x^{i-1}) - rank(x^i)
    std::vector<int> at_least;
    for (std::size_t i = 1; i < ranks.size(); ++i)
        at_least.push_back(static_cast<int>(ranks[i - 1] - ranks[i]));
    return transpose(at_least);
}

Partition jordan_oracle(const LeviDescriptor& levi, std::uint64_t seed, int trials) {
    levi.validate();
    if (trials < 1)
        throw std::invalid_argument("trials must be positive");
    if (levi.ambient > max_oracle_ambient())
        throw BoundExceeded("ambient " + std::to_string(levi.ambient) + " exceeds the oracle bound " +
                            std::to_string(max_oracle_ambient()));
    const std::size_t n = static_cast<std::size_t>(levi.ambient);
    const bool gl = levi.type == Classical::gl;

    // block id per coordinate: gl blocks, tail, then mirrored gl blocks
    std::vector<int> block(n, 0);
    Matrix levi_part(n, n);
    std::size_t off = 0;
    int id = 0;
    for (const auto& b : levi.gl_blocks) {
        place_jordan(levi_part, off, b.d);
        for (int i = 0; i < b.k; ++i)
            block[off++] = id;
        ++id;
    }
    const std::size_t m = static_cast<std::size_t>(levi.tail_size());
    const std::size_t tail_off = off;
    if (!gl) {
        for (std::size_t i = 0; i < m; ++i)
            block[off++] = id;
        ++id;
        for (std::size_t bi = levi.gl_blocks.size(); bi-- > 0;) {
            for (int i = 0; i < levi.gl_blocks[bi].k; ++i)
                block[off++] = id;
            ++id;
        }
    }

    Matrix j, j_inv;
    if (!gl) {
        j = form_matrix(levi.type, levi.ambient);
        j_inv = linalg::inverse(j);
        levi_part = levi_part + sigma(levi_part, j, j_inv);
        if (m > 0) {
            Matrix t = realize_with_form(levi.tail->c, levi.type);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c)
                    levi_part(tail_off + r, tail_off + c) = t(r, c);
        }
        if (!in_classical_algebra(levi_part, levi.type))
            throw std::logic_error("Levi representative is not in the classical algebra");
    }

    std::optional<std::vector<int>> best;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(trial));
        std::uniform_int_distribution<int> dist(-9, 9);
        Matrix y(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (block[r] < block[c])
                    y(r, c) = dist(rng);
        if (!gl)
            y = y + sigma(y, j, j_inv);
        auto jt = jordan_type(levi_part + y);
        if (!best || (dominates(jt, *best) && jt != *best))
            best = jt;
    }
    return Partition{*best, levi.type};
}

int centralizer_oracle(const Partition& p) {
    if (!is_parity_valid(p.parts, p.context))
        throw std::invalid_argument("partition is not parity-valid for " + to_string(p.context));
    if (p.total() > max_oracle_ambient())
        throw BoundExceeded("ambient " + std::to_string(p.total()) + " exceeds the oracle bound");
    const Matrix e = realize_nilpotent(p);
    const std::size_t n = e.rows();
    const std::size_t vars = n * n;
    const bool gl = p.context == Classical::gl;
    Matrix sys(gl ? vars : 2 * vars, vars);
    auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < n; ++jj) {
            const std::size_t row = var(i, jj);
            for (std::size_t k = 0; k < n; ++k) {
                sys(row, var(k, jj)) += e(i, k);
                sys(row, var(i, k)) -= e(k, jj);
            }
        }
    if (!gl) {
        const Matrix j = form_matrix(p.context, static_cast<int>(n));
        const Matrix j_inv = linalg::inverse(j);
        // X - sigma(X) = X + J^{-1} X^T J
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jj = 0; jj < n; ++jj) {
                const std::size_t row = vars + var(i, jj);
                sys(row, var(i, jj)) += 1;
                for (std::size_t a = 0; a < n; ++a) {
                    if (j_inv(i, a) == 0)
                        continue;
                    for (std::size_t b = 0; b < n; ++b)
                        if (j(b, jj) != 0)
                            sys(row, var(b, a)) += j_inv(i, a) * j(b, jj);
                }
            }
    }
    return static_cast<int>(vars - linalg::rank(sys));
}

namespace {

void product_choices(const std::vector<int>& sizes, std::size_t idx, std::vector<GlBlock>& cur,
                     const std::function<void(const std::vector<GlBlock>&)>& emit) {
    if (idx == sizes.size()) {
        emit(cur);
        return;
    }
    for (auto& d : partitions_of(sizes[idx])) {
        cur.push_back({sizes[idx], d});
        product_choices(sizes, idx + 1, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<LeviDescriptor> enumerate_levis(Classical type, int ambient) {
    std::vector<LeviDescriptor> out;
    std::vector<GlBlock> cur;
    if (type == Classical::gl) {
        for (const auto& sizes : partitions_of(ambient)) {
            if (sizes.size() < 2)
                continue;
            product_choices(sizes, 0, cur, [&](const std::vector<GlBlock>& blocks) {
                out.push_back(LeviDescriptor{type, ambient, blocks, std::nullopt});
            });
        }
        return out;
    }
    for (int k_total = ambient / 2; k_total >= 1; --k_total) {
        const int m = ambient - 2 * k_total;
        std::vector<std::vector<int>> tails;
        for (auto& c : partitions_of(m))
            if (is_parity_valid(c, type))
                tails.push_back(std::move(c));
        if (tails.empty())
            continue;
        for (const auto& sizes : partitions_of(k_total))
            product_choices(sizes, 0, cur, [&](const std::vector<GlBlock>& blocks) {
                for (const auto& c : tails) {
                    std::optional<LeviTail> tail;
                    if (m > 0)
                        tail = LeviTail{m, c};
                    LeviDescriptor l{type, ambient, blocks, tail};
                    if (l.is_proper())
                        out.push_back(std::move(l));
                }
            });
    }
    return out;
}

RigidityResult is_rigid(const Partition& p, int ambient) {
    if (p.total() != ambient)
        throw std::invalid_argument("partition does not match the ambient size");
    if (!is_parity_valid(p.parts, p.context))
        throw std::invalid_argument("partition is not parity-valid for " + to_string(p.context));
    if (ambient > max_rigid_ambient())
        throw BoundExceeded("ambient " + std::to_string(ambient) + " exceeds the rigidity search bound " +
                            std::to_string(max_rigid_ambient()));
    for (const auto& levi : enumerate_levis(p.context, ambient))
        if (induce(levi).parts == p.parts)
            return {false, levi};
    return {true, std::nullopt};
}

} // namespace orbitcert
