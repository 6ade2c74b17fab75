#include "orbitcert/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace orbitcert {

namespace {

constexpr int kMaxClassicalRank = 32;

struct Component {
    CartanType type;
    std::vector<std::size_t> nodes;
};

int pairing_int(const Rational& r) {
    if (!is_integer(r))
        throw std::domain_error("non-integral Cartan entry " + to_string(r));
    return static_cast<int>(r.get_num().get_si());
}

std::vector<Component> classify_components(std::span<const Weight> simple) {
    const std::size_t n = simple.size();
    if (n == 0)
        return {};
    {
        linalg::Matrix gram(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                gram(i, j) = dot(simple[i], simple[j]);
        if (linalg::rank(gram) != n)
            throw std::invalid_argument("simple system is linearly dependent");
    }
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && dot(simple[i], simple[j]) > 0)
                throw std::invalid_argument("simple system has a positive inner product");
            a[i][j] = pairing_int(coroot_pairing(simple[i], simple[j]));
        }

    std::vector<int> comp(n, -1);
    std::vector<Component> out;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0)
            continue;
        Component c;
        std::vector<std::size_t> stack{start};
        comp[start] = static_cast<int>(out.size());
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            c.nodes.push_back(u);
            for (std::size_t v = 0; v < n; ++v)
                if (v != u && a[u][v] != 0 && comp[v] < 0) {
                    comp[v] = static_cast<int>(out.size());
                    stack.push_back(v);
                }
        }
        std::sort(c.nodes.begin(), c.nodes.end());

        const auto& nodes = c.nodes;
        const int size = static_cast<int>(nodes.size());
        std::map<std::size_t, std::vector<std::size_t>> adj;
        int edges = 0;
        std::vector<std::pair<std::size_t, std::size_t>> multi;
        int triple = 0;
        for (auto u : nodes)
            for (auto v : nodes) {
                if (u >= v || a[u][v] == 0)
                    continue;
                int m = a[u][v] * a[v][u];
                if (m < 1 || m > 3)
                    throw std::domain_error("Cartan matrix is not of finite type");
                ++edges;
                adj[u].push_back(v);
                adj[v].push_back(u);
                if (m == 2)
                    multi.emplace_back(u, v);
                if (m == 3)
                    ++triple;
            }
        if (edges != size - 1)
            throw std::domain_error("Dynkin diagram contains a cycle");
        std::size_t max_degree = 0;
        for (auto u : nodes)
            max_degree = std::max(max_degree, adj[u].size());

        if (triple > 0) {
            if (size != 2)
                throw std::domain_error("Cartan matrix is not of finite type");
            c.type = {Family::G, 2};
        } else if (multi.size() > 1) {
            throw std::domain_error("Cartan matrix is not of finite type");
        } else if (multi.size() == 1) {
            if (max_degree > 2)
                throw std::domain_error("Cartan matrix is not of finite type");
            auto [u, v] = multi.front();
            if (size == 2) {
                c.type = {Family::B, 2};
            } else if (adj[u].size() == 1 || adj[v].size() == 1) {
                auto end = adj[u].size() == 1 ? u : v;
                auto other = end == u ? v : u;
                bool end_short = dot(simple[end], simple[end]) < dot(simple[other], simple[other]);
                c.type = {end_short ? Family::B : Family::C, size};
            } else if (size == 4) {
                c.type = {Family::F, 4};
            } else {
                throw std::domain_error("Cartan matrix is not of finite type");
            }
        } else if (max_degree <= 2) {
            c.type = {Family::A, size};
        } else {
            std::vector<std::size_t> branches;
            for (auto u : nodes)
                if (adj[u].size() >= 3)
                    branches.push_back(u);
            if (branches.size() != 1 || adj[branches.front()].size() != 3)
                throw std::domain_error("Cartan matrix is not of finite type");
            auto b = branches.front();
            std::vector<int> arms;
            for (auto first : adj[b]) {
                int len = 1;
                std::size_t prev = b, cur = first;
                while (adj[cur].size() == 2) {
                    auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                    prev = cur;
                    cur = next;
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms[0] == 1 && arms[1] == 1)
                c.type = {Family::D, size};
            else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
                c.type = {Family::E, size};
            else
                throw std::domain_error("Cartan matrix is not of finite type");
        }
        out.push_back(std::move(c));
    }
    return out;
}

Weight weight_from(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
    Weight w(dim);
    for (const auto& [i, v] : entries)
        w[i] = v;
    return w;
}

} // namespace

std::string CartanType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanType CartanType::parse(std::string_view text) {
    if (text.size() < 2)
        throw std::invalid_argument("unknown Cartan type '" + std::string(text) + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
    auto digits = text.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
        digits.size() > 3)
        throw std::invalid_argument("unknown Cartan type '" + std::string(text) + "'");
    int n = std::stoi(std::string(digits));
    CartanType t;
    t.rank = n;
    switch (f) {
    case 'A': t.family = Family::A; if (n < 1 || n > kMaxClassicalRank) break; return t;
    case 'B': t.family = Family::B; if (n < 2 || n > kMaxClassicalRank) break; return t;
    case 'C': t.family = Family::C; if (n < 3 || n > kMaxClassicalRank) break; return t;
    case 'D': t.family = Family::D; if (n < 4 || n > kMaxClassicalRank) break; return t;
    case 'E': t.family = Family::E; if (n < 6 || n > 8) break; return t;
    case 'F': t.family = Family::F; if (n != 4) break; return t;
    case 'G': t.family = Family::G; if (n != 2) break; return t;
    default:
        throw std::invalid_argument("unknown Cartan type '" + std::string(text) + "'");
    }
    throw std::invalid_argument("rank out of range for type '" + std::string(text) + "'");
}

std::size_t CartanType::positive_root_count() const {
    const std::size_t n = static_cast<std::size_t>(rank);
    switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

bool type_precedes(const CartanType& a, const CartanType& b) {
    if (a.rank != b.rank)
        return a.rank > b.rank;
    return static_cast<char>(a.family) < static_cast<char>(b.family);
}

namespace {

std::string join_labels(std::vector<std::string> labels) {
    if (labels.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < labels.size();) {
        std::size_t j = i;
        while (j < labels.size() && labels[j] == labels[i])
            ++j;
        if (!out.empty())
            out += '+';
        if (j - i > 1)
            out += std::to_string(j - i);
        out += labels[i];
        i = j;
    }
    return out;
}

} // namespace

std::string type_string(std::span<const CartanType> components) {
    std::vector<CartanType> sorted(components.begin(), components.end());
    std::stable_sort(sorted.begin(), sorted.end(), type_precedes);
    std::vector<std::string> labels;
    for (const auto& t : sorted)
        labels.push_back(t.str());
    return join_labels(std::move(labels));
}

Weight coroot(const Weight& alpha) {
    return alpha * (Rational(2) / dot(alpha, alpha));
}

Rational coroot_pairing(const Weight& lambda, const Weight& alpha) {
    Rational n = dot(alpha, alpha);
    if (n == 0)
        throw std::invalid_argument("coroot of the zero vector");
    return 2 * dot(lambda, alpha) / n;
}

Weight reflect(const Weight& lambda, const Weight& alpha) {
    return lambda - alpha * coroot_pairing(lambda, alpha);
}

RootSubsystem generate_subsystem(std::span<const Weight> simple) {
    RootSubsystem sub;
    sub.simple.assign(simple.begin(), simple.end());
    const std::size_t n = simple.size();
    sub.cartan = linalg::Matrix(n, n);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            sub.cartan(i, j) = coroot_pairing(simple[i], simple[j]);
            a[i][j] = pairing_int(sub.cartan(i, j));
        }

    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> layer;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> c(n, 0);
        c[i] = 1;
        known.insert(c);
        layer.push_back(c);
    }
    while (!layer.empty()) {
        for (auto& c : layer)
            sub.coefficients.push_back(c);
        std::vector<std::vector<int>> next;
        std::set<std::vector<int>> next_set;
        for (const auto& c : layer) {
            for (std::size_t i = 0; i < n; ++i) {
                // <beta, alpha_i^vee> from the integer Cartan matrix
                int pair = 0;
                for (std::size_t k = 0; k < n; ++k)
                    pair += c[k] * a[k][i];
                int p = 0;
                auto down = c;
                while (down[i] > 0) {
                    --down[i];
                    if (!known.count(down))
                        break;
                    ++p;
                }
                if (p - pair > 0) {
                    auto up = c;
                    ++up[i];
                    if (!known.count(up) && next_set.insert(up).second)
                        next.push_back(up);
                }
            }
        }
        for (const auto& c : next)
            known.insert(c);
        std::sort(next.begin(), next.end(), std::greater<>());
        layer = std::move(next);
    }
    const std::size_t dim = n == 0 ? 0 : simple.front().size();
    for (const auto& c : sub.coefficients) {
        Weight w(dim);
        for (std::size_t k = 0; k < n; ++k)
            if (c[k] != 0)
                w += simple[k] * Rational(c[k]);
        sub.positive.push_back(std::move(w));
    }
    return sub;
}

RootSystemModel RootSystemModel::build(const CartanType& type) {
    RootSystemModel m;
    m.type_ = type;
    const std::size_t n = static_cast<std::size_t>(type.rank);
    std::vector<Weight> simple;
    switch (type.family) {
    case Family::A:
        m.ambient_dim_ = n + 1;
        m.projective_ = true;
        for (std::size_t i = 0; i < n; ++i)
            simple.push_back(weight_from(n + 1, {{i, 1}, {i + 1, -1}}));
        break;
    case Family::B:
    case Family::C:
    case Family::D:
        m.ambient_dim_ = n;
        for (std::size_t i = 0; i + 1 < n; ++i)
            simple.push_back(weight_from(n, {{i, 1}, {i + 1, -1}}));
        if (type.family == Family::B)
            simple.push_back(weight_from(n, {{n - 1, 1}}));
        else if (type.family == Family::C)
            simple.push_back(weight_from(n, {{n - 1, 2}}));
        else
            simple.push_back(weight_from(n, {{n - 2, 1}, {n - 1, 1}}));
        break;
    case Family::E: {
        m.ambient_dim_ = 9;
        m.projective_ = true;
        std::vector<Weight> e8;
        for (std::size_t i = 0; i < 7; ++i)
            e8.push_back(weight_from(9, {{i, 1}, {i + 1, -1}}));
        e8.push_back(weight_from(9, {{5, 1}, {6, 1}, {7, 1}}));
        const std::size_t skip = 8 - n; // E7 drops a1, E6 drops a1 and a2
        simple.assign(e8.begin() + static_cast<std::ptrdiff_t>(skip), e8.end());
        break;
    }
    case Family::F: {
        m.ambient_dim_ = 4;
        Rational h(1, 2);
        simple.push_back(weight_from(4, {{1, 1}, {2, -1}}));
        simple.push_back(weight_from(4, {{2, 1}, {3, -1}}));
        simple.push_back(weight_from(4, {{3, 1}}));
        simple.push_back(weight_from(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}}));
        break;
    }
    case Family::G:
        m.ambient_dim_ = 3;
        m.projective_ = true;
        simple.push_back(weight_from(3, {{0, 1}, {1, -1}}));
        simple.push_back(weight_from(3, {{0, -2}, {1, 1}, {2, 1}}));
        break;
    }
    for (auto& s : simple)
        s = m.canonicalize(s);
    m.simple_ = simple;
    for (const auto& s : simple)
        m.simple_coroots_.push_back(coroot(s));

    auto sub = generate_subsystem(simple);
    m.cartan_ = sub.cartan;
    m.positive_ = std::move(sub.positive);
    m.coefficients_ = std::move(sub.coefficients);
    if (m.positive_.size() != type.positive_root_count())
        throw std::logic_error("positive root count mismatch for " + type.str());

    m.roots_ = m.positive_;
    for (const auto& r : m.positive_)
        m.roots_.push_back(-r);
    for (std::size_t i = 0; i < m.roots_.size(); ++i)
        m.index_.emplace(m.roots_[i], i);

    m.long_length_ = 0;
    for (const auto& r : m.positive_)
        m.long_length_ = std::max(m.long_length_, dot(r, r));

    m.rho_ = Weight(m.ambient_dim_);
    for (const auto& r : m.positive_)
        m.rho_ += r;
    m.rho_ *= Rational(1, 2);

    const auto inv_cartan = linalg::inverse(m.cartan_);
    linalg::Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram(i, j) = dot(simple[i], simple[j]);
    const auto inv_gram = linalg::inverse(gram);
    for (std::size_t i = 0; i < n; ++i) {
        Weight w(m.ambient_dim_), cw(m.ambient_dim_);
        for (std::size_t k = 0; k < n; ++k) {
            w += simple[k] * inv_cartan(i, k);
            cw += simple[k] * inv_gram(i, k);
        }
        m.fundamental_weights_.push_back(std::move(w));
        m.fundamental_coweights_.push_back(std::move(cw));
    }
    return m;
}

Weight RootSystemModel::canonicalize(std::span<const Rational> raw) const {
    if (raw.size() != ambient_dim_)
        throw std::invalid_argument("expected " + std::to_string(ambient_dim_) + " coordinates, got " +
                                    std::to_string(raw.size()));
    Weight w(std::vector<Rational>(raw.begin(), raw.end()));
    if (projective_) {
        Rational mean = 0;
        for (const auto& c : raw)
            mean += c;
        mean /= Rational(static_cast<long>(raw.size()));
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] -= mean;
    }
    return w;
}

Weight RootSystemModel::canonicalize(const Weight& raw) const {
    return canonicalize(std::span<const Rational>(raw.coords()));
}

std::optional<std::size_t> RootSystemModel::root_index(const Weight& w) const {
    if (w.size() != ambient_dim_)
        return std::nullopt;
    auto it = index_.find(canonicalize(w));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool RootSystemModel::is_positive_root(const Weight& w) const {
    auto i = root_index(w);
    return i && *i < positive_.size();
}

Rational RootSystemModel::pairing(const Weight& lambda, const Weight& alpha) const {
    if (!is_root(alpha))
        throw std::invalid_argument("not a root of " + type_.str());
    return coroot_pairing(canonicalize(lambda), canonicalize(alpha));
}

LeviSubsystem levi_subsystem(const RootSystemModel& model, std::span<const std::size_t> simple_indices) {
    LeviSubsystem levi;
    std::vector<bool> in(model.rank(), false);
    for (auto i : simple_indices) {
        if (i >= model.rank())
            throw std::invalid_argument("simple root index out of range");
        if (in[i])
            throw std::invalid_argument("repeated simple root index");
        in[i] = true;
    }
    for (std::size_t i = 0; i < model.rank(); ++i)
        if (in[i]) {
            levi.simple_indices.push_back(i);
            levi.simple.push_back(model.simple_roots()[i]);
        }
    const auto& coeffs = model.positive_coefficients();
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        bool inside = true;
        for (std::size_t k = 0; k < model.rank() && inside; ++k)
            if (coeffs[r][k] != 0 && !in[k])
                inside = false;
        if (inside) {
            levi.positive_indices.push_back(r);
            levi.positive.push_back(model.positive_roots()[r]);
        }
    }
    return levi;
}

std::vector<Weight> simple_system_of(const RootSystemModel& model, std::span<const Weight> roots, bool use_coroots) {
    std::set<std::size_t> positive;
    for (const auto& r : roots) {
        auto i = model.root_index(r);
        if (!i)
            throw std::invalid_argument("input contains a non-root");
        positive.insert(*i % model.positive_roots().size());
    }
    auto vec = [&](std::size_t i) -> Weight {
        const auto& r = model.positive_roots()[i];
        return use_coroots ? coroot(r) : r;
    };
    std::set<Weight> members;
    for (auto i : positive)
        members.insert(vec(i));

    std::vector<std::size_t> simple_idx;
    for (auto i : positive) {
        const Weight v = vec(i);
        bool decomposable = false;
        for (auto j : positive) {
            if (j == i)
                continue;
            if (members.count(v - vec(j))) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable)
            simple_idx.push_back(i);
    }

    std::vector<Weight> simple_vecs;
    for (auto i : simple_idx)
        simple_vecs.push_back(vec(i));
    for (std::size_t a = 0; a < simple_vecs.size(); ++a)
        for (std::size_t b = a + 1; b < simple_vecs.size(); ++b)
            if (dot(simple_vecs[a], simple_vecs[b]) > 0)
                throw std::invalid_argument("root set is not a subsystem (simple candidates pair positively)");
    if (!simple_vecs.empty()) {
        const std::size_t dim = model.ambient_dim();
        linalg::Matrix basis(dim, simple_vecs.size());
        for (std::size_t c = 0; c < simple_vecs.size(); ++c)
            for (std::size_t r = 0; r < dim; ++r)
                basis(r, c) = simple_vecs[c][r];
        if (linalg::rank(basis) != simple_vecs.size())
            throw std::invalid_argument("root set is not a subsystem (simple candidates are dependent)");
        for (auto i : positive) {
            auto x = linalg::solve(basis, vec(i).coords());
            if (!x)
                throw std::invalid_argument("root set is not a subsystem (not generated by its simple candidates)");
            for (const auto& c : *x)
                if (!is_integer(c) || c < 0)
                    throw std::invalid_argument("root set is not a subsystem (non-positive-integral expansion)");
        }
        if (generate_subsystem(simple_vecs).positive.size() != positive.size())
            throw std::invalid_argument("root set is not a subsystem (not closed)");
    }

    std::vector<Weight> out;
    for (auto i : simple_idx)
        out.push_back(model.positive_roots()[i]);
    return out;
}

std::vector<CartanType> identify_type(std::span<const Weight> simple_system) {
    std::vector<CartanType> out;
    for (const auto& c : classify_components(simple_system))
        out.push_back(c.type);
    std::stable_sort(out.begin(), out.end(), type_precedes);
    return out;
}

std::string levi_label(const RootSystemModel& model, std::span<const std::size_t> simple_indices) {
    auto levi = levi_subsystem(model, simple_indices);
    const auto f = model.type().family;
    const bool laced = !(f == Family::B || f == Family::C || f == Family::F || f == Family::G);
    struct Entry {
        CartanType type;
        bool tilde;
    };
    std::vector<Entry> entries;
    for (const auto& c : classify_components(levi.simple)) {
        bool tilde = false;
        if (!laced && c.type.family == Family::A) {
            const auto& r = levi.simple[c.nodes.front()];
            tilde = dot(r, r) < model.long_length();
        }
        entries.push_back({c.type, tilde});
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.type == b.type)
            return !a.tilde && b.tilde;
        return type_precedes(a.type, b.type);
    });
    std::vector<std::string> labels;
    for (const auto& e : entries)
        labels.push_back((e.tilde ? "~" : "") + e.type.str());
    return join_labels(std::move(labels));
}

} // namespace orbitcert
