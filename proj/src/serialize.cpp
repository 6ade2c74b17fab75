#include "orbitcert/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitcert {

Json to_json(const Weight& w) {
    Json j = Json::array();
    for (std::size_t i = 0; i < w.size(); ++i)
        j.push_back(to_string(w[i]));
    return j;
}

Weight weight_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("weight must be a JSON array");
    std::vector<Rational> coords;
    for (const auto& x : j) {
        if (x.is_string())
            coords.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            coords.emplace_back(x.get<long>());
        else
            throw std::invalid_argument("weight coordinates must be strings \"p/q\" or integers");
    }
    return Weight(std::move(coords));
}

Json to_json(const ConditionCheck& c) {
    Json j = {{"verdict", to_string(c.verdict)}, {"detail", c.detail}};
    if (c.witness)
        j["witness"] = to_json(*c.witness);
    return j;
}

Json to_json(const CertificateReport& r) {
    Json j;
    j["verdict"] = to_string(r.overall());
    j["conditions"] = {{"A", to_json(r.a)}, {"B", to_json(r.b)}, {"C", to_json(r.c)}, {"D", to_json(r.d)}};
    j["dim_g"] = r.dim_g;
    j["orbit_dim"] = r.orbit_dim;
    j["dim_g_lambda"] = r.dim_g_lambda;
    j["cor68"] = r.cor68 ? Json(std::to_string(*r.cor68)) : Json(nullptr);
    j["delta_prime"] = to_json(r.delta_prime);
    j["unverified"] = r.unverified;
    return j;
}

Json to_json(const IntegralSystem& sys, const std::optional<std::size_t>& cor68) {
    Json roots = Json::array();
    for (const auto& a : sys.simple_system)
        roots.push_back(to_json(a));
    return {{"integral_type", type_string(sys.cartan_type)},
            {"simple_roots", roots},
            {"cor68", cor68 ? Json(std::to_string(*cor68)) : Json(nullptr)}};
}

Json to_json(const LeviDescriptor& levi) {
    Json blocks = Json::array();
    for (const auto& b : levi.gl_blocks)
        blocks.push_back({{"k", b.k}, {"d", b.d}});
    Json j = {{"type", to_string(levi.type)}, {"ambient", levi.ambient}, {"gl_blocks", blocks}};
    if (levi.tail)
        j["tail"] = {{"m", levi.tail->m}, {"c", levi.tail->c}};
    return j;
}

LeviDescriptor levi_from_json(const Json& j, std::optional<Classical> type, std::optional<int> ambient) {
    if (!j.is_object())
        throw std::invalid_argument("Levi descriptor must be a JSON object");
    LeviDescriptor levi;
    try {
        if (j.contains("type")) {
            auto t = parse_classical(j.at("type").get<std::string>());
            if (type && *type != t)
                throw std::invalid_argument("Levi type disagrees with --type");
            type = t;
        }
        if (j.contains("ambient")) {
            int n = j.at("ambient").get<int>();
            if (ambient && *ambient != n)
                throw std::invalid_argument("Levi ambient disagrees with --ambient");
            ambient = n;
        }
        if (!type || !ambient)
            throw std::invalid_argument("Levi descriptor needs a type and an ambient size");
        levi.type = *type;
        levi.ambient = *ambient;
        if (j.contains("gl_blocks"))
            for (const auto& b : j.at("gl_blocks"))
                levi.gl_blocks.push_back({b.at("k").get<int>(), b.at("d").get<std::vector<int>>()});
        if (j.contains("tail") && !j.at("tail").is_null()) {
            const auto& t = j.at("tail");
            levi.tail = LeviTail{t.at("m").get<int>(), t.at("c").get<std::vector<int>>()};
        }
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed Levi descriptor: ") + e.what());
    }
    levi.validate();
    return levi;
}

Json rigid_table_json() {
    Json rows = Json::array();
    for (const auto& r : rigid_rows())
        rows.push_back({{"n", r.n}, {"algebra", r.algebra}, {"label", r.bala_carter}, {"q_type", r.q_type},
                        {"dim_z", r.dim_z}});
    return rows;
}

Json duality_table_json() {
    Json rows = Json::array();
    for (const auto& r : duality_rows())
        rows.push_back({{"n", r.n}, {"algebra", r.algebra}, {"label", r.e_label}, {"dual_label", r.e_dual_label}});
    return rows;
}

std::string rigid_table_csv() {
    std::ostringstream out;
    out << "algebra,label,q_type,dim_z\n";
    for (const auto& r : rigid_rows())
        out << r.algebra << ',' << r.bala_carter << ',' << r.q_type << ',' << r.dim_z << '\n';
    return out.str();
}

std::string duality_table_csv() {
    std::ostringstream out;
    out << "algebra,label,dual_label\n";
    for (const auto& r : duality_rows())
        out << r.algebra << ',' << r.e_label << ',' << r.e_dual_label << '\n';
    return out.str();
}

} // namespace orbitcert
