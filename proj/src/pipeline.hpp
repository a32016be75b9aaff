#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "jones.hpp"
#include "knot_expr.hpp"
#include "knot_table.hpp"

namespace ks {

// Normalized Alexander polynomial of a knot expression: Fox calculus at
// leaves, the quotient formula at torus nodes, and the satellite formula
// Delta_{C_{p,q}(K)}(t) = Delta_K(t^q) * Delta_{T(p,q)}(t) at cable nodes.
Laurent alexander_of(const KnotExpr& k);

// Second derivative of the normalized Alexander polynomial at 1.
Int delta2(const KnotExpr& k);

// Resolves an expression to a single braid closure when possible (cables
// via cable_braid); nullopt for PD-only or invariant-only leaves.
std::optional<BraidWord> to_braid(const KnotExpr& k);

struct V3Result {
    bool available = false;
    Int value;
    std::string reason;  // set when unavailable
};

// Third derivative of the Jones polynomial at 1, or Unavailable with the
// reason (crossing cap exceeded / no diagram).
V3Result v3_check(const KnotExpr& k, int max_crossings = kDefaultMaxCrossings);

// Jones polynomial of the expression when computable under the cap.
std::optional<Laurent> jones_of(const KnotExpr& k, int max_crossings, std::string* why = nullptr);

// Constants of the order-2/order-3 finite-type cabling relations
//   d2(C_{e,q}(K)) = a*d2(K) + b
//   v3(C_{e,q}(K)) = c*v3(K) + d*d2(K) + e
// fit exactly from a sample (the unknot row is always included).
struct FitResult {
    Rat a, b, c, d, e;
    Rat residual;  // exactly 0 when the affine model fits
    std::string str() const;
};

FitResult fit_cabling_constants(long q, const std::vector<KnotExpr>& sample, int epsilon_sign,
                                int max_crossings = kDefaultMaxCrossings);

enum class CheckOutcome { Excludes, Passes, NotApplicable };

struct Check {
    std::string id;
    CheckOutcome outcome;
    std::string detail;
};

struct ObstructionReport {
    std::string knot;
    std::string slope_r, slope_s;
    std::vector<Check> checks;
    bool cosmetic_excluded = false;
    std::optional<std::string> error;  // set on per-row scan failures
    std::string json() const;
    std::string csv_line() const;
};

// Runs every criterion in fixed order (all checks always run):
// KnotComplement, NiWuOpposite, NiWuCongruence, NiWuTau, BoyerLines,
// IchiharaWu, TorusKnotTheorem, CableMainTheorem.
ObstructionReport obstruction_report(const KnotExpr& k, const Slope& r, const Slope& s,
                                     std::optional<long> tau,
                                     int max_crossings = kDefaultMaxCrossings);

// Brute-force reference for the Ni-Wu congruence n^2 = -1 (mod m).
bool niwu_congruence_holds(const Int& m, const Int& n);

// Batch scan: for each table row and each reduced slope m/n with
// 1 <= m <= max_m, 1 <= n <= max_n, the report for (r, -r).  Row failures
// become diagnostic records, not fatal errors.
std::vector<ObstructionReport> scan(const KnotTable& table, long max_m, long max_n,
                                    int max_crossings = kDefaultMaxCrossings);

}  // namespace ks
