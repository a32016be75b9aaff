// knotsurg CLI: cable-surgery classification, polynomial invariants and
// cosmetic-surgery obstruction reports over the extern-C library API.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotsurg.h"

namespace {

struct CtxGuard {
    knotsurg_ctx* ctx = knotsurg_ctx_new();
    ~CtxGuard() { knotsurg_ctx_free(ctx); }
};

struct StrGuard {
    char* s = nullptr;
    ~StrGuard() { knotsurg_free_string(s); }
};

// Exit status: 0 ok, 1 input error, 2 resource limit (internal errors
// also map to 1 so scripts see a failure).
int status_to_exit(int code) {
    if (code == KNOTSURG_OK) return 0;
    if (code == KNOTSURG_RESOURCE_LIMIT) return 2;
    return 1;
}

int fail(knotsurg_ctx* ctx, int code) {
    std::cerr << "error: " << knotsurg_last_error(ctx) << "\n";
    return status_to_exit(code);
}

void print_text(const nlohmann::json& j, int indent = 0) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                std::cout << pad << it.key() << ":\n";
                print_text(it.value(), indent + 2);
            } else {
                std::cout << pad << it.key() << ": "
                          << (it.value().is_string() ? it.value().get<std::string>()
                                                     : it.value().dump())
                          << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            std::cout << pad << "-\n";
            print_text(e, indent + 2);
        }
    } else {
        std::cout << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::string report_csv(const nlohmann::json& j) {
    std::string line = j.value("knot", "") + "," + j.value("r", "") + "," + j.value("s", "") + ",";
    if (j.contains("error")) return line + "error:" + j["error"].get<std::string>();
    line += j.value("verdict", "");
    if (j.contains("checks"))
        for (const auto& c : j["checks"])
            line += "," + c.value("id", "") + "=" + c.value("outcome", "");
    return line;
}

void emit(const std::string& json_text, const std::string& format) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else if (format == "csv")
        std::cout << report_csv(j) << "\n";
    else
        print_text(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact-arithmetic Dehn-surgery classification on cable knots and "
        "cosmetic-surgery obstructions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand arguments

    int max_crossings = knotsurg_get_max_crossings(CtxGuard{}.ctx);
    if (const char* env = std::getenv("KNOTSURG_MAX_CROSSINGS")) max_crossings = std::atoi(env);
    std::string table_path, format = "json";
    app.add_option("--max-crossings", max_crossings,
                   "Crossing-count cap for polynomial computations");
    app.add_option("--table", table_path, "Knot table CSV for K(name) references");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string knot, slope_r, slope_s, tau, fit_sample;
    long scan_m = 10, scan_n = 3, fit_q = 2;
    int fit_eps = 1;

    auto* classify = app.add_subcommand("classify", "Case tag and JSJ descriptor of r-surgery");
    classify->add_option("knot", knot, "Knot expression, e.g. C(3,2; T(2,3))")->required();
    classify->add_option("slope", slope_r, "Surgery slope m/n")->required();

    auto* invariants = app.add_subcommand("invariants", "Delta, Delta''(1), V, V'''(1)");
    invariants->add_option("knot", knot, "Knot expression")->required();

    auto* obstruct = app.add_subcommand("obstruct", "Cosmetic-surgery obstruction report");
    obstruct->add_option("knot", knot, "Knot expression")->required();
    obstruct->add_option("r", slope_r, "Slope r")->required();
    obstruct->add_option("s", slope_s, "Slope s (default -r)");
    obstruct->add_option("--tau", tau, "Concordance tau of the knot, when known");

    auto* scan = app.add_subcommand("scan", "Batch obstruction reports over a table and grid");
    scan->add_option("table", table_path, "Knot table CSV")->required();
    scan->add_option("--max-m", scan_m, "Largest slope numerator");
    scan->add_option("--max-n", scan_n, "Largest slope denominator");

    auto* fit = app.add_subcommand("fit", "Fit the cabling constants of the finite-type relations");
    fit->add_option("q", fit_q, "Cabling winding number q >= 2")->required();
    fit->add_option("table", table_path, "Knot table CSV")->required();
    fit->add_option("--sample", fit_sample,
                    "Comma-separated table names (default: every table row)");
    fit->add_option("--epsilon", fit_eps, "Sign of the longitudinal parameter, +1 or -1")
        ->check(CLI::IsMember({1, -1}));

    CLI11_PARSE(app, argc, argv);

    CtxGuard g;
    int rc = knotsurg_set_max_crossings(g.ctx, max_crossings);
    if (rc != KNOTSURG_OK) return fail(g.ctx, rc);
    if (!table_path.empty()) {
        rc = knotsurg_load_table(g.ctx, table_path.c_str());
        if (rc != KNOTSURG_OK) return fail(g.ctx, rc);
    }

    StrGuard out;
    if (classify->parsed()) {
        rc = knotsurg_classify(g.ctx, knot.c_str(), slope_r.c_str(), &out.s);
        if (rc != KNOTSURG_OK) return fail(g.ctx, rc);
        emit(out.s, format);
    } else if (invariants->parsed()) {
        rc = knotsurg_invariants(g.ctx, knot.c_str(), &out.s);
        if (rc != KNOTSURG_OK) return fail(g.ctx, rc);
        emit(out.s, format);
    } else if (obstruct->parsed()) {
        rc = knotsurg_obstruct(g.ctx, knot.c_str(), slope_r.c_str(),
                               slope_s.empty() ? nullptr : slope_s.c_str(),
                               tau.empty() ? nullptr : tau.c_str(), &out.s);
        if (rc != KNOTSURG_OK) return fail(g.ctx, rc);
        emit(out.s, format);
    } else if (scan->parsed()) {
        rc = knotsurg_scan(g.ctx, scan_m, scan_n, &out.s);
        if (rc != KNOTSURG_OK) return fail(g.ctx, rc);
        std::string lines(out.s);
        size_t start = 0;
        while (start < lines.size()) {
            size_t nl = lines.find('\n', start);
            std::string line = lines.substr(start, nl - start);
            if (!line.empty()) {
                if (format == "json")
                    std::cout << line << "\n";  // JSON lines, one report per line
                else
                    emit(line, format);
            }
            if (nl == std::string::npos) break;
            start = nl + 1;
        }
    } else if (fit->parsed()) {
        std::string sample = fit_sample;
        if (sample.empty()) {
            // Default sample: every name in the table, via a scan of the CSV.
            std::ifstream in(table_path);
            std::string line;
            bool first = true;
            while (std::getline(in, line)) {
                size_t comma = line.find(',');
                std::string name = line.substr(0, comma);
                if (name == "name" || name.empty()) continue;
                sample += (first ? "" : ",") + ("K(" + name + ")");
                first = false;
            }
        }
        rc = knotsurg_fit(g.ctx, fit_q, fit_eps, sample.c_str(), &out.s);
        if (rc != KNOTSURG_OK) return fail(g.ctx, rc);
        emit(out.s, format);
    }
    return 0;
}
