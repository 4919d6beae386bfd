#include "rharm/cli.hpp"

#include <sstream>
#include <stdexcept>

#include "rharm/combinatorics.hpp"
#include "rharm/families.hpp"

namespace rharm::cli {

using nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "markdown") return OutputFormat::Markdown;
    throw std::invalid_argument("unknown format: " + name);
}

FamilyId parse_family(const std::string& name, unsigned r, unsigned alpha) {
    FamilyId id;
    id.r = r;
    id.alpha = alpha;
    if (name == "exp") id.tag = FamilyId::Exponential;
    else if (name == "geom") id.tag = FamilyId::Geometric;
    else if (name == "ggeom") id.tag = FamilyId::GeneralGeometric;
    else if (name == "rexp") id.tag = FamilyId::RExponential;
    else if (name == "rgeom") id.tag = FamilyId::RGeometric;
    else if (name == "rbell") id.tag = FamilyId::RBellMezo;
    else if (name == "rfubini") id.tag = FamilyId::RFubiniNyul;
    else if (name == "hrgeom") id.tag = FamilyId::HarmonicRGeometric;
    else if (name == "hrexp") id.tag = FamilyId::HarmonicRExponential;
    else if (name == "hhrgeom") id.tag = FamilyId::HyperharmonicRGeometric;
    else if (name == "grgeom") id.tag = FamilyId::GeneralRGeometric;
    else if (name == "hhrexp") id.tag = FamilyId::HyperharmonicRExponential;
    else throw std::invalid_argument("unknown family: " + name);
    bool needs_alpha = id.tag == FamilyId::GeneralGeometric ||
                       id.tag == FamilyId::HyperharmonicRGeometric ||
                       id.tag == FamilyId::GeneralRGeometric ||
                       id.tag == FamilyId::HyperharmonicRExponential;
    if (needs_alpha && alpha < 1)
        throw std::invalid_argument("family requires alpha >= 1");
    return id;
}

namespace {

Polynomial family_poly(const FamilyId& f, unsigned n) {
    switch (f.tag) {
        case FamilyId::Exponential: return exponential_poly(n);
        case FamilyId::Geometric: return geometric_poly(n);
        case FamilyId::GeneralGeometric: return general_geometric_poly(n, f.alpha);
        case FamilyId::RExponential: return r_exponential_poly(n, f.r);
        case FamilyId::RGeometric: return r_geometric_poly(n, f.r);
        case FamilyId::RBellMezo: return r_bell_mezo_poly(n, f.r);
        case FamilyId::RFubiniNyul: return r_fubini_nyul_poly(n, f.r);
        case FamilyId::HarmonicRGeometric:
            return harmonic_r_geometric_poly(n, f.r);
        case FamilyId::HarmonicRExponential:
            return harmonic_r_exponential_poly(n, f.r);
        case FamilyId::HyperharmonicRGeometric:
            return hyperharmonic_r_geometric_poly(n, f.r, f.alpha);
        case FamilyId::GeneralRGeometric:
            return general_r_geometric_poly(n, f.r, f.alpha);
        case FamilyId::HyperharmonicRExponential:
            return hyperharmonic_r_exponential_poly(n, f.r, f.alpha);
    }
    throw std::logic_error("unreachable");
}

std::string family_name(const FamilyId& f) {
    switch (f.tag) {
        case FamilyId::Exponential: return "exp";
        case FamilyId::Geometric: return "geom";
        case FamilyId::GeneralGeometric: return "ggeom";
        case FamilyId::RExponential: return "rexp";
        case FamilyId::RGeometric: return "rgeom";
        case FamilyId::RBellMezo: return "rbell";
        case FamilyId::RFubiniNyul: return "rfubini";
        case FamilyId::HarmonicRGeometric: return "hrgeom";
        case FamilyId::HarmonicRExponential: return "hrexp";
        case FamilyId::HyperharmonicRGeometric: return "hhrgeom";
        case FamilyId::GeneralRGeometric: return "grgeom";
        case FamilyId::HyperharmonicRExponential: return "hhrexp";
    }
    return "?";
}

}  // namespace

RunReport cmd_triangle(const std::string& kind, unsigned r, unsigned n_max,
                       unsigned limit) {
    if (kind != "s2" && kind != "s1")
        throw std::invalid_argument("triangle kind must be s2 or s1");
    if (n_max > limit)
        throw std::invalid_argument("n_max exceeds limit");
    RunReport report;
    report.command = "triangle";
    report.params = {{"kind", kind}, {"r", r}, {"n_max", n_max}};
    report.status = "ok";
    ordered_json rows = ordered_json::array();
    for (unsigned n = 0; n <= n_max; ++n) {
        ordered_json row = ordered_json::array();
        for (unsigned k = 0; k <= n; ++k) {
            BigInt v = kind == "s2" ? stirling2_r(n, k, r)
                                    : stirling1_r(n, k, r);
            row.push_back(v.str());
        }
        rows.push_back(std::move(row));
    }
    report.payload = {{"rows", std::move(rows)}};
    return report;
}

namespace {

ordered_json coeff_list(const Polynomial& p, unsigned n) {
    ordered_json list = ordered_json::array();
    for (unsigned i = 0; i <= n; ++i) list.push_back(to_string(p.coeff(i)));
    return list;
}

ordered_json coeff_list(const TruncatedSeries& s) {
    ordered_json list = ordered_json::array();
    for (unsigned i = 0; i <= s.order(); ++i)
        list.push_back(to_string(s.coeff(i)));
    return list;
}

ordered_json family_params(const FamilyId& f, unsigned n) {
    ordered_json params = {{"family", family_name(f)}, {"n", n}};
    params["r"] = f.r;
    params["alpha"] = f.alpha;
    return params;
}

}  // namespace

RunReport cmd_poly(const FamilyId& family, unsigned n) {
    RunReport report;
    report.command = "poly";
    report.params = family_params(family, n);
    report.status = "ok";
    report.payload = {{"coefficients", coeff_list(family_poly(family, n), n)}};
    return report;
}

RunReport cmd_number(const FamilyId& family, unsigned n) {
    RunReport report;
    report.command = "number";
    report.params = family_params(family, n);
    report.status = "ok";
    report.payload = {
        {"value", to_string(family_poly(family, n).eval(Rational(1)))}};
    return report;
}

RunReport cmd_series(const SeriesRequest& req) {
    if (req.order > req.limit)
        throw std::invalid_argument("order exceeds limit");
    if (req.side != "lhs" && req.side != "rhs" && req.side != "both")
        throw std::invalid_argument("side must be lhs, rhs or both");

    IdentityId id = [&]() -> IdentityId {
        if (req.identity_kind == "harmonic")
            return HarmonicClosedForm{req.m, req.r};
        if (req.identity_kind == "hyperharmonic")
            return HyperharmonicClosedForm{req.m, req.r, req.alpha};
        if (req.identity_kind == "multiple")
            return MultipleSum{req.m, req.r, req.s};
        if (req.identity_kind == "hyperharmonic-multiple")
            return HyperharmonicMultipleSum{req.m, req.r, req.s, req.alpha};
        if (req.identity_kind == "transform") {
            GeneratorKind g;
            if (req.generator == "exp") g = {GeneratorKind::Exp, 1};
            else if (req.generator == "geom") g = {GeneratorKind::Geom, 1};
            else if (req.generator == "harmonic")
                g = {GeneratorKind::HarmonicGF, 1};
            else if (req.generator == "hyperharmonic")
                g = {GeneratorKind::HyperharmonicGF, req.alpha};
            else
                throw std::invalid_argument("unknown generator: " +
                                            req.generator);
            return Transformation{g, Polynomial::monomial(req.m), req.r};
        }
        throw std::invalid_argument("unknown identity kind: " +
                                    req.identity_kind);
    }();

    RunReport report;
    report.command = "series";
    report.params = {{"identity", req.identity_kind}, {"m", req.m},
                     {"r", req.r},                    {"s", req.s},
                     {"alpha", req.alpha},            {"order", req.order},
                     {"side", req.side}};
    if (req.identity_kind == "transform")
        report.params["generator"] = req.generator;
    report.status = "ok";

    if (req.side == "lhs") {
        report.payload = {
            {"lhs", coeff_list(lhs_weighted_series(id, req.order))}};
    } else if (req.side == "rhs") {
        report.payload = {
            {"rhs", coeff_list(rhs_closed_form_series(id, req.order))}};
    } else {
        VerifyReport rep = verify_identity(id, req.order);
        report.payload = {{"lhs", coeff_list(rep.lhs)},
                          {"rhs", coeff_list(rep.rhs)},
                          {"equal", rep.equal}};
        if (!rep.equal) {
            report.status = "mismatch";
            report.exit_code = 1;
            unsigned idx = *rep.first_mismatch;
            report.payload["first_mismatch"] = {
                {"index", idx},
                {"lhs", to_string(rep.lhs.coeff(idx))},
                {"rhs", to_string(rep.rhs.coeff(idx))}};
        }
    }
    return report;
}

RunReport cmd_verify(const std::string& suite, const VerifyOptions& opts) {
    std::vector<SuiteResult> results;
    if (suite == "all") {
        results = run_all_suites(opts);
    } else if (suite == "triangles") {
        results.push_back(run_triangles_suite(opts));
    } else if (suite == "families") {
        results.push_back(run_families_suite());
    } else if (suite == "bridges") {
        results.push_back(run_bridges_suite());
    } else if (suite == "operators") {
        results.push_back(run_operators_suite());
    } else if (suite == "closed_forms") {
        results.push_back(run_closed_forms_suite());
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    RunReport report;
    report.command = "verify";
    report.params = {{"suite", suite}};
    bool all_pass = true;
    ordered_json suites = ordered_json::array();
    ordered_json first_mismatch;
    for (const SuiteResult& sr : results) {
        ordered_json checks = ordered_json::array();
        unsigned passed = 0;
        for (const CheckResult& c : sr.checks) {
            if (c.pass) {
                ++passed;
            } else {
                if (all_pass)
                    first_mismatch = {{"suite", sr.name},
                                      {"check", c.name},
                                      {"detail", c.detail}};
                all_pass = false;
                checks.push_back({{"name", c.name},
                                  {"pass", false},
                                  {"detail", c.detail}});
            }
        }
        suites.push_back({{"name", sr.name},
                          {"checks_run", sr.checks.size()},
                          {"checks_passed", passed},
                          {"failures", std::move(checks)}});
    }
    report.status = all_pass ? "ok" : "mismatch";
    report.exit_code = all_pass ? 0 : 1;
    report.payload = {{"suites", std::move(suites)}};
    if (!all_pass) report.payload["first_mismatch"] = std::move(first_mismatch);
    return report;
}

RunReport usage_error(const std::string& command, const std::string& message) {
    RunReport report;
    report.command = command;
    report.params = ordered_json::object();
    report.status = "usage_error";
    report.payload = {{"error", message}};
    report.exit_code = 2;
    return report;
}

namespace {

std::string render_csv(const RunReport& report) {
    std::ostringstream os;
    if (report.status == "usage_error") {
        os << "error," << report.payload["error"].get<std::string>() << "\n";
        return os.str();
    }
    if (report.command == "triangle") {
        unsigned n = 0;
        for (const auto& row : report.payload["rows"]) {
            os << n;
            for (const auto& v : row) os << "," << v.get<std::string>();
            os << "\n";
            ++n;
        }
    } else if (report.command == "poly") {
        bool first = true;
        for (const auto& v : report.payload["coefficients"]) {
            if (!first) os << ",";
            first = false;
            os << v.get<std::string>();
        }
        os << "\n";
    } else if (report.command == "number") {
        os << report.payload["value"].get<std::string>() << "\n";
    } else if (report.command == "series") {
        for (const char* side : {"lhs", "rhs"}) {
            if (!report.payload.contains(side)) continue;
            os << side;
            for (const auto& v : report.payload[side])
                os << "," << v.get<std::string>();
            os << "\n";
        }
        if (report.payload.contains("equal")) {
            os << "equal," << (report.payload["equal"].get<bool>() ? "true" : "false");
            if (report.payload.contains("first_mismatch"))
                os << "," << report.payload["first_mismatch"]["index"];
            os << "\n";
        }
    } else if (report.command == "verify") {
        for (const auto& sr : report.payload["suites"])
            os << sr["name"].get<std::string>() << ","
               << sr["checks_passed"] << "," << sr["checks_run"] << ","
               << (sr["failures"].empty() ? "ok" : "mismatch") << "\n";
    }
    return os.str();
}

std::string render_markdown(const RunReport& report) {
    std::ostringstream os;
    if (report.status == "usage_error") {
        os << "**error:** " << report.payload["error"].get<std::string>()
           << "\n";
        return os.str();
    }
    if (report.command == "triangle") {
        const auto& rows = report.payload["rows"];
        std::size_t width = rows.empty() ? 1 : rows.back().size();
        os << "| n |";
        for (std::size_t k = 0; k < width; ++k) os << " k=" << k << " |";
        os << "\n|---|";
        for (std::size_t k = 0; k < width; ++k) os << "---|";
        os << "\n";
        unsigned n = 0;
        for (const auto& row : rows) {
            os << "| " << n++ << " |";
            for (std::size_t k = 0; k < width; ++k)
                os << " " << (k < row.size() ? row[k].get<std::string>() : "")
                   << " |";
            os << "\n";
        }
    } else if (report.command == "poly") {
        os << "| degree | coefficient |\n|---|---|\n";
        unsigned i = 0;
        for (const auto& v : report.payload["coefficients"])
            os << "| " << i++ << " | " << v.get<std::string>() << " |\n";
    } else if (report.command == "number") {
        os << "value: " << report.payload["value"].get<std::string>() << "\n";
    } else if (report.command == "series") {
        os << "| n |";
        if (report.payload.contains("lhs")) os << " lhs |";
        if (report.payload.contains("rhs")) os << " rhs |";
        os << "\n|---|";
        if (report.payload.contains("lhs")) os << "---|";
        if (report.payload.contains("rhs")) os << "---|";
        os << "\n";
        std::size_t len = report.payload.contains("lhs")
                              ? report.payload["lhs"].size()
                              : report.payload["rhs"].size();
        for (std::size_t i = 0; i < len; ++i) {
            os << "| " << i << " |";
            if (report.payload.contains("lhs"))
                os << " " << report.payload["lhs"][i].get<std::string>() << " |";
            if (report.payload.contains("rhs"))
                os << " " << report.payload["rhs"][i].get<std::string>() << " |";
            os << "\n";
        }
        if (report.payload.contains("equal"))
            os << "\nequal: "
               << (report.payload["equal"].get<bool>() ? "true" : "false")
               << "\n";
    } else if (report.command == "verify") {
        os << "| suite | passed | run | status |\n|---|---|---|---|\n";
        for (const auto& sr : report.payload["suites"])
            os << "| " << sr["name"].get<std::string>() << " | "
               << sr["checks_passed"] << " | " << sr["checks_run"] << " | "
               << (sr["failures"].empty() ? "ok" : "mismatch") << " |\n";
    }
    return os.str();
}

}  // namespace

std::string render(const RunReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: {
            ordered_json doc = {{"command", report.command},
                                {"params", report.params},
                                {"status", report.status},
                                {"payload", report.payload}};
            return doc.dump(2) + "\n";
        }
        case OutputFormat::Csv:
            return render_csv(report);
        case OutputFormat::Markdown:
            return render_markdown(report);
    }
    throw std::logic_error("unreachable");
}

}  // namespace rharm::cli
