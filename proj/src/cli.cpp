#include "orbitcert/cli.hpp"

#include "orbitcert/certify.hpp"
#include "orbitcert/integral.hpp"
#include "orbitcert/lsinduce.hpp"
#include "orbitcert/orbits.hpp"
#include "orbitcert/rootsys.hpp"
#include "orbitcert/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

namespace orbitcert {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string output = "json";
    std::uint64_t seed = 0;
    std::string type;
    std::string coords = "eps";
    std::string weight;
    std::string root;
    std::string h;
    std::string lambda_prime;
    std::string levi;
    bool principal = false;
    int ambient = -1;
    std::string partition;
    std::string table = "rigid";
    std::string algebra;
    std::string label;
    std::string format = "json";
    std::string kind = "jordan";
    int trials = 8;
};

std::string show(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + to_string(w[i]);
    return s + ")";
}

std::string show(const std::vector<int>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

Weight parse_weight(const RootSystemModel& model, const std::string& text, const std::string& coords) {
    auto values = parse_rational_list(text);
    if (coords == "simple") {
        if (values.size() != model.rank())
            throw UsageError("expected " + std::to_string(model.rank()) + " simple-root coordinates");
        Weight w(model.ambient_dim());
        for (std::size_t i = 0; i < values.size(); ++i)
            w += model.simple_roots()[i] * values[i];
        return model.canonicalize(w);
    }
    if (values.size() != model.ambient_dim())
        throw UsageError("expected " + std::to_string(model.ambient_dim()) + " epsilon coordinates");
    return model.canonicalize(Weight(std::move(values)));
}

std::size_t parse_simple_label(std::string_view s, std::size_t rank) {
    if (!s.empty() && (s.front() == 'a' || s.front() == 'A'))
        s.remove_prefix(1);
    std::size_t idx = 0;
    try {
        std::size_t used = 0;
        idx = std::stoul(std::string(s), &used);
        if (used != s.size())
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw UsageError("bad simple root label");
    }
    if (idx < 1 || idx > rank)
        throw UsageError("simple root label out of range 1.." + std::to_string(rank));
    return idx - 1;
}

std::vector<std::size_t> parse_levi_labels(const std::string& text, std::size_t rank) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (!item.empty())
            out.push_back(parse_simple_label(item, rank));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Partition parse_partition(const std::string& text, Classical type) {
    auto parts = parse_int_list(text);
    std::sort(parts.rbegin(), parts.rend());
    return Partition::make(std::move(parts), type);
}

LeviDescriptor parse_levi_descriptor(const Options& o) {
    Json j;
    try {
        j = Json::parse(o.levi);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("--levi is not valid JSON: ") + e.what());
    }
    std::optional<Classical> type;
    if (!o.type.empty())
        type = parse_classical(o.type);
    std::optional<int> ambient;
    if (o.ambient >= 0)
        ambient = o.ambient;
    return levi_from_json(j, type, ambient);
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_info(const Options& o, std::ostream& out, bool json) {
    auto model = RootSystemModel::build(o.type);
    if (json)
        emit(out, {{"dim", model.dim()}, {"positive_roots", model.positive_roots().size()}, {"rank", model.rank()}});
    else
        out << model.type().str() << ": rank " << model.rank() << ", dim " << model.dim() << ", positive roots "
            << model.positive_roots().size() << '\n';
    return 0;
}

int cmd_pairing(const Options& o, std::ostream& out, bool json) {
    auto model = RootSystemModel::build(o.type);
    Weight w = parse_weight(model, o.weight, o.coords);
    Weight alpha;
    if (!o.root.empty() && (o.root.front() == 'a' || o.root.front() == 'A'))
        alpha = model.simple_roots()[parse_simple_label(o.root, model.rank())];
    else
        alpha = parse_weight(model, o.root, o.coords);
    Rational v = model.pairing(w, alpha);
    if (json)
        emit(out, {{"pairing", to_string(v)}});
    else
        out << to_string(v) << '\n';
    return 0;
}

int cmd_delta_prime(const Options& o, std::ostream& out, bool json) {
    auto model = RootSystemModel::build(o.type);
    auto h = make_characteristic(model, parse_weight(model, o.h, o.coords));
    Weight d = delta_prime(model, h);
    if (json)
        emit(out, {{"delta_prime", to_json(d)}});
    else
        out << show(d) << '\n';
    return 0;
}

int cmd_certify(const Options& o, std::ostream& out, bool json) {
    auto model = RootSystemModel::build(o.type);
    CertificateInput in;
    in.levi = parse_levi_labels(o.levi, model.rank());
    in.principal_in_levi = o.principal;
    if (o.h.empty()) {
        if (!o.principal)
            throw UsageError("--h is required unless --principal is given");
        in.h = h_regular(model, in.levi).h;
    } else {
        in.h = parse_weight(model, o.h, o.coords);
    }
    in.lambda_prime = parse_weight(model, o.lambda_prime, o.coords);
    auto report = certify(model, in);
    if (json) {
        emit(out, to_json(report));
    } else {
        const char* names[] = {"A", "B", "C", "D"};
        const ConditionCheck* checks[] = {&report.a, &report.b, &report.c, &report.d};
        for (int i = 0; i < 4; ++i)
            out << names[i] << ": " << to_string(checks[i]->verdict) << "  " << checks[i]->detail << '\n';
        out << "dim g = " << report.dim_g << ", dim O = " << report.orbit_dim << ", dim g(lambda) = "
            << report.dim_g_lambda << '\n';
        out << "delta' = " << show(report.delta_prime) << '\n';
        for (const auto& u : report.unverified)
            out << "unverified: " << u << '\n';
        out << "verdict: " << to_string(report.overall()) << '\n';
    }
    switch (report.overall()) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::undecided: return 3;
    }
    return 4;
}

int cmd_integral(const Options& o, std::ostream& out, bool json) {
    auto model = RootSystemModel::build(o.type);
    Weight lp = parse_weight(model, o.lambda_prime, o.coords);
    auto sys = integral_system(model, lp);
    auto cor = cor68_dim(model, lp);
    if (json) {
        emit(out, to_json(sys, cor));
    } else {
        out << "integral type: " << type_string(sys.cartan_type) << '\n';
        for (const auto& a : sys.simple_system)
            out << "  " << show(a) << "  <lambda', alpha^vee> = " << to_string(coroot_pairing(sys.lambda_prime, a))
                << '\n';
        out << "cor68: " << (cor ? std::to_string(*cor) : std::string("not applicable")) << '\n';
    }
    return 0;
}

int cmd_induce(const Options& o, std::ostream& out, std::ostream& err, bool json) {
    auto levi = parse_levi_descriptor(o);
    auto p = induce(levi);
    if (is_very_even(p))
        err << "note: very even partition; it labels two orbits\n";
    if (json)
        emit(out, p.parts);
    else
        out << show(p.parts) << '\n';
    return 0;
}

int cmd_rigid(const Options& o, std::ostream& out, bool json) {
    auto type = parse_classical(o.type);
    auto p = parse_partition(o.partition, type);
    auto r = is_rigid(p, p.total());
    if (json) {
        Json j = {{"rigid", r.rigid}};
        if (r.witness)
            j["witness"] = to_json(*r.witness);
        emit(out, j);
    } else {
        out << (r.rigid ? "rigid" : "not rigid");
        if (r.witness)
            out << "; induced from " << to_json(*r.witness).dump();
        out << '\n';
    }
    return 0;
}

int cmd_dimz(const Options& o, std::ostream& out, bool json) {
    auto p = parse_partition(o.partition, parse_classical(o.type));
    int d = dim_z_partition(p);
    if (json)
        emit(out, {{"dim_z", d}});
    else
        out << d << '\n';
    return 0;
}

int cmd_tables(const Options& o, std::ostream& out, bool json) {
    if (o.table != "rigid" && o.table != "duality")
        throw UsageError("--table must be rigid or duality");
    const bool rigid = o.table == "rigid";
    if (!o.label.empty() || !o.algebra.empty()) {
        if (o.label.empty() || o.algebra.empty())
            throw UsageError("--algebra and --label go together");
        if (rigid) {
            auto r = rigid_table(o.algebra, o.label);
            if (!r)
                throw std::invalid_argument("no rigid-table row for " + o.algebra + " " + o.label);
            if (json)
                emit(out, {{"dim_z", r->dim_z}, {"q", r->q_type}});
            else
                out << "q = " << r->q_type << ", dim z = " << r->dim_z << '\n';
        } else {
            auto r = duality_table(o.algebra, o.label);
            if (!r)
                throw std::invalid_argument("no duality-table row for " + o.algebra + " " + o.label);
            if (json)
                emit(out, {{"dual_label", r->e_dual_label}});
            else
                out << r->e_dual_label << '\n';
        }
        return 0;
    }
    if (o.format == "csv")
        out << (rigid ? rigid_table_csv() : duality_table_csv());
    else if (json)
        emit(out, rigid ? rigid_table_json() : duality_table_json());
    else
        for (const auto& row : rigid ? rigid_table_json() : duality_table_json())
            out << row.dump() << '\n';
    return 0;
}

int cmd_oracle(const Options& o, std::ostream& out, bool json) {
    if (o.kind == "jordan") {
        auto levi = parse_levi_descriptor(o);
        auto p = jordan_oracle(levi, o.seed, o.trials);
        if (json)
            emit(out, p.parts);
        else
            out << show(p.parts) << '\n';
        return 0;
    }
    if (o.kind == "centralizer") {
        auto p = parse_partition(o.partition, parse_classical(o.type));
        int d = centralizer_oracle(p);
        if (json)
            emit(out, {{"dim_z", d}});
        else
            out << d << '\n';
        return 0;
    }
    throw UsageError("--kind must be jordan or centralizer");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact root-system, nilpotent-orbit and highest-weight certificate engine", "orbitcert"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", o.seed, "Seed for randomized oracles");

    auto* info = app.add_subcommand("info", "Rank, dimension and positive root count");
    info->add_option("--type", o.type, "Cartan type, e.g. E8")->required();

    auto* pairing = app.add_subcommand("pairing", "<weight, root^vee>");
    pairing->add_option("--type", o.type)->required();
    pairing->add_option("--weight", o.weight, "Comma-separated rationals")->required();
    pairing->add_option("--root", o.root, "Root coordinates or a simple root label a<i>")->required();
    pairing->add_option("--coords", o.coords, "Coordinate system of weight inputs")
        ->check(CLI::IsMember({"eps", "simple"}));

    auto* dprime = app.add_subcommand("delta-prime", "Half-sum of positive roots with <alpha, h> in {0, 1}");
    dprime->add_option("--type", o.type)->required();
    dprime->add_option("--h", o.h)->required();
    dprime->add_option("--coords", o.coords)->check(CLI::IsMember({"eps", "simple"}));

    auto* cert = app.add_subcommand("certify", "Check conditions A-D for a highest-weight certificate");
    cert->add_option("--type", o.type)->required();
    cert->add_option("--levi", o.levi, "Levi simple roots, e.g. a1,a2,a7")->required();
    cert->add_option("--h", o.h, "Characteristic; defaults to the regular one of the Levi with --principal");
    cert->add_option("--lambda-prime", o.lambda_prime, "lambda + rho")->required();
    cert->add_flag("--principal", o.principal, "The nilpotent is principal in the Levi");
    cert->add_option("--coords", o.coords)->check(CLI::IsMember({"eps", "simple"}));

    auto* integral = app.add_subcommand("integral", "Integral root system of lambda'");
    integral->add_option("--type", o.type)->required();
    integral->add_option("--lambda-prime", o.lambda_prime)->required();
    integral->add_option("--coords", o.coords)->check(CLI::IsMember({"eps", "simple"}));

    auto* ind = app.add_subcommand("induce", "Induced orbit of a classical Levi");
    ind->add_option("--type", o.type, "gl, so or sp");
    ind->add_option("--ambient", o.ambient);
    ind->add_option("--levi", o.levi, "Levi descriptor as JSON")->required();

    auto* rigid = app.add_subcommand("rigid", "Rigidity of a classical nilpotent orbit");
    rigid->add_option("--type", o.type, "gl, so or sp")->required();
    rigid->add_option("--partition", o.partition, "Comma-separated parts")->required();

    auto* dimz = app.add_subcommand("dimz", "Centralizer dimension of a classical nilpotent");
    dimz->add_option("--type", o.type, "gl, so or sp")->required();
    dimz->add_option("--partition", o.partition)->required();

    auto* tables = app.add_subcommand("tables", "Embedded rigid-orbit and duality tables");
    tables->add_option("--table", o.table)->check(CLI::IsMember({"rigid", "duality"}));
    tables->add_option("--algebra", o.algebra);
    tables->add_option("--label", o.label);
    tables->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

    auto* oracle = app.add_subcommand("oracle", "Matrix oracles: Jordan type of an induced element, centralizer rank");
    oracle->add_option("--kind", o.kind)->check(CLI::IsMember({"jordan", "centralizer"}));
    oracle->add_option("--type", o.type, "gl, so or sp");
    oracle->add_option("--ambient", o.ambient);
    oracle->add_option("--levi", o.levi, "Levi descriptor as JSON (jordan)");
    oracle->add_option("--partition", o.partition, "Partition (centralizer)");
    oracle->add_option("--trials", o.trials)->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return 2;
    }

    const bool json = o.output == "json";
    try {
        if (*info) return cmd_info(o, out, json);
        if (*pairing) return cmd_pairing(o, out, json);
        if (*dprime) return cmd_delta_prime(o, out, json);
        if (*cert) return cmd_certify(o, out, json);
        if (*integral) return cmd_integral(o, out, json);
        if (*ind) return cmd_induce(o, out, err, json);
        if (*rigid) return cmd_rigid(o, out, json);
        if (*dimz) return cmd_dimz(o, out, json);
        if (*tables) return cmd_tables(o, out, json);
        if (*oracle) return cmd_oracle(o, out, json);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 2;
}

} // namespace orbitcert
