#include "knot_table.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace ks {

std::vector<std::vector<std::string>> parse_csv(const std::string& content) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    size_t i = 0;
    auto end_field = [&]() {
        row.push_back(field);
        field.clear();
    };
    auto end_row = [&]() {
        end_field();
        bool blank = row.size() == 1 && row[0].empty();
        if (!blank) rows.push_back(row);
        row.clear();
    };
    while (i < content.size()) {
        char c = content[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            end_row();
        } else if (c != '\r') {
            field.push_back(c);
        }
        ++i;
    }
    if (!field.empty() || !row.empty()) end_row();
    return rows;
}

namespace {

std::string trimmed(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

KnotTable KnotTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open knot table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_csv(buf.str());
}

KnotTable KnotTable::from_csv(const std::string& content) {
    KnotTable t;
    auto rows = parse_csv(content);
    for (size_t i = 0; i < rows.size(); ++i) {
        auto& r = rows[i];
        if (i == 0 && !r.empty() && trimmed(r[0]) == "name") continue;  // header
        if (r.size() < 3)
            throw input_error("knot table row needs at least name,kind,payload");
        KnotTableRow row;
        row.name = trimmed(r[0]);
        row.kind = trimmed(r[1]);
        row.payload = trimmed(r[2]);
        row.declared_class = r.size() > 3 ? trimmed(r[3]) : "";
        row.tau = r.size() > 4 ? trimmed(r[4]) : "";
        t.add_row(std::move(row));
    }
    return t;
}

void KnotTable::add_row(KnotTableRow row) {
    if (row.name.empty()) throw input_error("knot table row without a name");
    if (by_name_.count(row.name)) throw input_error("duplicate knot table name: " + row.name);
    by_name_[row.name] = rows_.size();
    rows_.push_back(std::move(row));
}

std::optional<long> KnotTable::tau_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end() || rows_[it->second].tau.empty()) return std::nullopt;
    return std::stol(rows_[it->second].tau);
}

KnotExpr KnotTable::resolve(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw input_error("unknown knot name: " + name);
    if (std::find(resolving_.begin(), resolving_.end(), name) != resolving_.end())
        throw input_error("cyclic knot table reference: " + name);
    const KnotTableRow& row = rows_[it->second];

    LeafClass cls = LeafClass::Unknown;
    if (row.declared_class == "hyperbolic") cls = LeafClass::Hyperbolic;
    else if (row.declared_class == "satellite") cls = LeafClass::SatelliteKnownJSJ;
    else if (!row.declared_class.empty() && row.declared_class != "unknown")
        throw input_error("unknown declared_class '" + row.declared_class + "' for " + name);
    std::optional<long> tau;
    if (!row.tau.empty()) tau = std::stol(row.tau);

    if (row.kind == "braid") return KnotExpr::leaf_braid(name, parse_braid(row.payload), cls, tau);
    if (row.kind == "pd") return KnotExpr::leaf_pd(name, parse_pd(row.payload), cls, tau);
    if (row.kind == "expr") {
        resolving_.push_back(name);
        try {
            KnotExpr k = parse_knot_expr(row.payload, this);
            resolving_.pop_back();
            return k;
        } catch (...) {
            resolving_.pop_back();
            throw;
        }
    }
    throw input_error("unknown knot table kind '" + row.kind + "' for " + name);
}

}  // namespace ks
