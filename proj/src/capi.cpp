#include "knotsurg.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "json.hpp"
#include "jones.hpp"
#include "knot_table.hpp"
#include "pipeline.hpp"

struct knotsurg_ctx {
    int max_crossings = ks::kDefaultMaxCrossings;
    std::unique_ptr<ks::KnotTable> table;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
int guarded(knotsurg_ctx* ctx, F&& f) {
    if (!ctx) return KNOTSURG_INVALID_INPUT;
    try {
        f();
        ctx->last_error.clear();
        return KNOTSURG_OK;
    } catch (const ks::resource_limit_error& e) {
        ctx->last_error = e.what();
        return KNOTSURG_RESOURCE_LIMIT;
    } catch (const ks::input_error& e) {
        ctx->last_error = e.what();
        return KNOTSURG_INVALID_INPUT;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return KNOTSURG_INTERNAL_ERROR;
    }
}

ks::KnotExpr parse_expr(const knotsurg_ctx* ctx, const char* text) {
    if (!text) throw ks::input_error("null knot expression");
    return ks::parse_knot_expr(text, ctx->table.get());
}

std::optional<long> leaf_tau(const knotsurg_ctx* ctx, const ks::KnotExpr& k) {
    if (k.kind == ks::KKind::Leaf && k.tau) return k.tau;
    return std::nullopt;
}

}  // namespace

knotsurg_ctx* knotsurg_ctx_new(void) { return new knotsurg_ctx(); }

void knotsurg_ctx_free(knotsurg_ctx* ctx) { delete ctx; }

int knotsurg_set_max_crossings(knotsurg_ctx* ctx, int cap) {
    return guarded(ctx, [&] {
        if (cap < 0) throw ks::input_error("max_crossings must be non-negative");
        ctx->max_crossings = cap;
    });
}

int knotsurg_get_max_crossings(const knotsurg_ctx* ctx) {
    return ctx ? ctx->max_crossings : -1;
}

int knotsurg_load_table(knotsurg_ctx* ctx, const char* path) {
    return guarded(ctx, [&] {
        if (!path) throw ks::input_error("null table path");
        ctx->table = std::make_unique<ks::KnotTable>(ks::KnotTable::load(path));
    });
}

int knotsurg_load_table_csv(knotsurg_ctx* ctx, const char* csv_content) {
    return guarded(ctx, [&] {
        if (!csv_content) throw ks::input_error("null table content");
        ctx->table = std::make_unique<ks::KnotTable>(ks::KnotTable::from_csv(csv_content));
    });
}

const char* knotsurg_last_error(const knotsurg_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

void knotsurg_free_string(char* s) { std::free(s); }

int knotsurg_normalize_slope(knotsurg_ctx* ctx, const char* slope, char** out_json) {
    return guarded(ctx, [&] {
        if (!slope || !out_json) throw ks::input_error("null argument");
        nlohmann::json j;
        j["slope"] = ks::Slope::parse(slope).str();
        *out_json = dup_string(j.dump());
    });
}

int knotsurg_classify(knotsurg_ctx* ctx, const char* knot_expr, const char* slope,
                      char** out_json) {
    return guarded(ctx, [&] {
        if (!knot_expr || !slope || !out_json) throw ks::input_error("null argument");
        ks::KnotExpr k = ks::reroot_unknot_cable(parse_expr(ctx, knot_expr));
        ks::Slope r = ks::Slope::parse(slope);
        if (k.kind != ks::KKind::Cable)
            throw ks::input_error("classify expects a cable of a non-trivial knot");
        auto [tag, descriptor] = ks::classify_cable_surgery(k.p, k.q, r, *k.companion);
        nlohmann::json j;
        j["knot"] = k.str();
        j["slope"] = r.str();
        j["case"] = ks::case_name(tag);
        j["descriptor"] = nlohmann::json::parse(descriptor.json());
        *out_json = dup_string(j.dump());
    });
}

int knotsurg_invariants(knotsurg_ctx* ctx, const char* knot_expr, char** out_json) {
    return guarded(ctx, [&] {
        if (!knot_expr || !out_json) throw ks::input_error("null argument");
        ks::KnotExpr k = parse_expr(ctx, knot_expr);
        nlohmann::json j;
        j["knot"] = k.str();
        ks::Laurent alex = ks::alexander_of(k);
        j["alexander"] = alex.str();
        j["delta2_at_1"] = ks::delta2(k).str();
        std::string why;
        if (auto v = ks::jones_of(k, ctx->max_crossings, &why)) {
            j["jones"] = v->str();
            j["v3_at_1"] = ks::derivative_at_one(*v, 3).str();
        } else {
            j["jones"] = nullptr;
            j["jones_unavailable"] = why;
        }
        *out_json = dup_string(j.dump());
    });
}

int knotsurg_obstruct(knotsurg_ctx* ctx, const char* knot_expr, const char* r, const char* s,
                      const char* tau_str, char** out_json) {
    return guarded(ctx, [&] {
        if (!knot_expr || !r || !out_json) throw ks::input_error("null argument");
        ks::KnotExpr k = parse_expr(ctx, knot_expr);
        ks::Slope sr = ks::Slope::parse(r);
        ks::Slope ss = (s && *s) ? ks::Slope::parse(s) : sr.negated();
        std::optional<long> tau = leaf_tau(ctx, k);
        if (tau_str && *tau_str) tau = std::stol(tau_str);
        *out_json = dup_string(
            ks::obstruction_report(k, sr, ss, tau, ctx->max_crossings).json());
    });
}

int knotsurg_scan(knotsurg_ctx* ctx, long max_m, long max_n, char** out_json_lines) {
    return guarded(ctx, [&] {
        if (!out_json_lines) throw ks::input_error("null argument");
        if (!ctx->table) throw ks::input_error("no knot table loaded");
        std::ostringstream os;
        for (const auto& rep : ks::scan(*ctx->table, max_m, max_n, ctx->max_crossings))
            os << rep.json() << "\n";
        *out_json_lines = dup_string(os.str());
    });
}

int knotsurg_fit(knotsurg_ctx* ctx, long q, int epsilon_sign, const char* sample_names,
                 char** out_json) {
    return guarded(ctx, [&] {
        if (!sample_names || !out_json) throw ks::input_error("null argument");
        std::vector<ks::KnotExpr> sample;
        std::string names(sample_names);
        // Split on top-level commas only; expression names like T(2,5)
        // contain commas inside parentheses.
        std::string cur;
        int depth = 0;
        auto flush = [&] {
            while (!cur.empty() && isspace(static_cast<unsigned char>(cur.front()))) cur.erase(0, 1);
            while (!cur.empty() && isspace(static_cast<unsigned char>(cur.back()))) cur.pop_back();
            if (!cur.empty()) sample.push_back(parse_expr(ctx, cur.c_str()));
            cur.clear();
        };
        for (char ch : names) {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == ',' && depth == 0) { flush(); continue; }
            cur.push_back(ch);
        }
        flush();
        ks::FitResult f = ks::fit_cabling_constants(q, sample, epsilon_sign, ctx->max_crossings);
        nlohmann::json j;
        j["q"] = q;
        j["epsilon"] = epsilon_sign;
        j["a"] = f.a.str();
        j["b"] = f.b.str();
        j["c"] = f.c.str();
        j["d"] = f.d.str();
        j["e"] = f.e.str();
        j["residual"] = f.residual.str();
        *out_json = dup_string(j.dump());
    });
}
