#pragma once

#include <map>
#include <string>
#include <vector>

#include "knot_expr.hpp"

namespace ks {

// One row of the knot table CSV:
//   name, kind (expr|pd|braid), payload, declared_class (hyperbolic|unknown), tau
struct KnotTableRow {
    std::string name;
    std::string kind;
    std::string payload;
    std::string declared_class;
    std::string tau;  // blank = unknown
};

// CSV-backed knot table; resolves K(name) references in expressions.
class KnotTable : public KnotResolver {
  public:
    KnotTable() = default;

    static KnotTable load(const std::string& path);
    static KnotTable from_csv(const std::string& content);

    void add_row(KnotTableRow row);

    const std::vector<KnotTableRow>& rows() const { return rows_; }
    bool has(const std::string& name) const { return by_name_.count(name) > 0; }

    // Parses the row into a KnotExpr (leaf or sub-expression).
    KnotExpr resolve(const std::string& name) const override;
    std::optional<long> tau_of(const std::string& name) const;

  private:
    std::vector<KnotTableRow> rows_;
    std::map<std::string, size_t> by_name_;
    mutable std::vector<std::string> resolving_;  // cycle guard
};

// Minimal RFC-4180 style parsing (quoted fields may contain commas).
std::vector<std::vector<std::string>> parse_csv(const std::string& content);

}  // namespace ks
