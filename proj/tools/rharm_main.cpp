#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rharm/cli.hpp"

namespace {

int emit(const rharm::cli::RunReport& report, const std::string& format_name,
         const std::string& out_path) {
    std::string text =
        rharm::cli::render(report, rharm::cli::parse_format(format_name));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact r-Stirling / harmonic polynomial families and "
                 "series identity checker"};
    app.require_subcommand(1);

    std::string kind, family = "exp", side = "both", format = "json";
    std::string out_path, suite = "all", corrupt_s2;
    unsigned r = 0, alpha = 1, n = 0, m = 0, s = 0, order = 0;
    unsigned limit_triangle = 500, limit_series = 1000;

    CLI::App* triangle = app.add_subcommand(
        "triangle", "Emit rows 0..n of an r-Stirling triangle");
    triangle->add_option("--kind", kind, "s2 or s1")->required();
    triangle->add_option("--r", r, "shift");
    triangle->add_option("--n", n, "max row")->required();
    triangle->add_option("--limit", limit_triangle, "row cap (default 500)");

    CLI::App* poly = app.add_subcommand(
        "poly", "Emit the coefficient list of a family polynomial");
    poly->add_option("--family", family,
                     "exp|geom|ggeom|rexp|rgeom|rbell|rfubini|hrgeom|hrexp|"
                     "hhrgeom|grgeom|hhrexp")
        ->required();
    poly->add_option("--r", r, "shift");
    poly->add_option("--alpha", alpha, "hyperharmonic/general order");
    poly->add_option("--n", n, "index")->required();

    CLI::App* number = app.add_subcommand(
        "number", "Emit the family polynomial evaluated at 1");
    number->add_option("--family", family)->required();
    number->add_option("--r", r, "shift");
    number->add_option("--alpha", alpha, "hyperharmonic/general order");
    number->add_option("--n", n, "index")->required();

    CLI::App* series = app.add_subcommand(
        "series", "Expand one or both sides of a series identity");
    series->add_option("--kind", kind,
                       "harmonic|hyperharmonic|multiple|"
                       "hyperharmonic-multiple|transform")
        ->required();
    series->add_option("--family", family,
                       "generator for transform: exp|geom|harmonic|"
                       "hyperharmonic");
    series->add_option("--m", m, "monomial degree");
    series->add_option("--r", r, "shift");
    series->add_option("--s", s, "multiple-sum depth");
    series->add_option("--alpha", alpha, "hyperharmonic order");
    series->add_option("--order", order, "truncation order")->required();
    series->add_option("--side", side, "lhs|rhs|both");
    series->add_option("--limit", limit_series, "order cap (default 1000)");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run a verification suite");
    verify
        ->add_option("--suite", suite,
                     "triangles|families|bridges|operators|closed_forms|all")
        ->capture_default_str();
    verify->add_option("--corrupt-s2", corrupt_s2,
                       "test hook: N,K,R entry to perturb");

    for (CLI::App* sub : {triangle, poly, number, series, verify}) {
        sub->add_option("--format", format, "json|csv|markdown")
            ->capture_default_str();
        sub->add_option("--out", out_path, "write report to file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        rharm::cli::RunReport report;
        if (*triangle) {
            report = rharm::cli::cmd_triangle(kind, r, n, limit_triangle);
        } else if (*poly || *number) {
            rharm::cli::FamilyId id = rharm::cli::parse_family(family, r, alpha);
            report = *poly ? rharm::cli::cmd_poly(id, n)
                           : rharm::cli::cmd_number(id, n);
        } else if (*series) {
            rharm::cli::SeriesRequest req;
            req.identity_kind = kind;
            req.m = m;
            req.r = r;
            req.s = s;
            req.alpha = alpha;
            req.generator = family;
            req.side = side;
            req.order = order;
            req.limit = limit_series;
            report = rharm::cli::cmd_series(req);
        } else {
            rharm::VerifyOptions opts;
            if (!corrupt_s2.empty()) {
                unsigned cn, ck, cr;
                char c1, c2;
                std::istringstream is(corrupt_s2);
                if (!(is >> cn >> c1 >> ck >> c2 >> cr) || c1 != ',' ||
                    c2 != ',')
                    throw std::invalid_argument(
                        "--corrupt-s2 expects N,K,R");
                opts.corrupt_s2 = rharm::VerifyOptions::CorruptS2{cn, ck, cr};
            }
            report = rharm::cli::cmd_verify(suite, opts);
        }
        return emit(report, format, out_path);
    } catch (const std::invalid_argument& e) {
        rharm::cli::RunReport report =
            rharm::cli::usage_error(command, e.what());
        try {
            return emit(report, format, out_path);
        } catch (const std::invalid_argument&) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
}
