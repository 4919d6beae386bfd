#ifndef RHARM_CLI_HPP
#define RHARM_CLI_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "rharm/series.hpp"
#include "rharm/verify.hpp"

namespace rharm::cli {

enum class OutputFormat { Json, Csv, Markdown };

OutputFormat parse_format(const std::string& name);

// Tagged family selector mirroring the library constructors.
struct FamilyId {
    enum Tag {
        Exponential,
        Geometric,
        GeneralGeometric,        // alpha
        RExponential,            // r
        RGeometric,              // r
        RBellMezo,               // r
        RFubiniNyul,             // r
        HarmonicRGeometric,      // r
        HarmonicRExponential,    // r
        HyperharmonicRGeometric,    // r, alpha
        GeneralRGeometric,          // r, alpha
        HyperharmonicRExponential,  // r, alpha
    } tag;
    unsigned r = 0;
    unsigned alpha = 1;
};

// Throws std::invalid_argument on unknown names or invalid parameters.
FamilyId parse_family(const std::string& name, unsigned r, unsigned alpha);

struct RunReport {
    std::string command;
    nlohmann::ordered_json params;
    std::string status;  // "ok" | "mismatch" | "usage_error"
    nlohmann::ordered_json payload;
    int exit_code = 0;
};

RunReport cmd_triangle(const std::string& kind, unsigned r, unsigned n_max,
                       unsigned limit);
RunReport cmd_poly(const FamilyId& family, unsigned n);
RunReport cmd_number(const FamilyId& family, unsigned n);

// identity_kind: harmonic | hyperharmonic | multiple |
// hyperharmonic-multiple | transform (generator picks g for transform).
struct SeriesRequest {
    std::string identity_kind;
    unsigned m = 0, r = 0, s = 0, alpha = 1;
    std::string generator = "exp";
    std::string side = "both";  // lhs | rhs | both
    unsigned order = 0;
    unsigned limit = 1000;
};
RunReport cmd_series(const SeriesRequest& req);

RunReport cmd_verify(const std::string& suite, const VerifyOptions& opts);

std::string render(const RunReport& report, OutputFormat format);

// Wraps an invalid-usage message as a report with exit code 2.
RunReport usage_error(const std::string& command, const std::string& message);

}  // namespace rharm::cli

#endif
