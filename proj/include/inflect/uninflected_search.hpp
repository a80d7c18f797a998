#pragma once

#include "inflect/polynomial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace inflect {

/// Values of the scan variables at one lattice point.
using ScanPoint = std::map<std::string, Rational>;

struct ScanVariable {
    std::string name;
    long lo = 0;
    /// Explicit upper bound; when absent it is derived from `bound_witness`.
    std::optional<long> hi;
    /// Univariate polynomial in this variable (scan ring) whose positivity rules a point out.
    std::optional<Polynomial> bound_witness;
    std::string reason;
};

struct ScanConstraint {
    std::string name;
    std::string description;
    std::function<bool(const ScanPoint&)> holds;
    /// Geometric exclusion of known cases rather than a basic range condition.
    bool exclusion = false;
};

/// Survivors satisfying `holds` form an infinite family described by `text`.
/// Substituting `fixed` into the equation must give a multiple of `condition`.
struct Annotation {
    std::string text;
    /// The point is ruled out by a geometric argument outside the diophantine scan.
    bool excluded = false;
};

struct ExceptionalCondition {
    std::string text;
    ScanPoint fixed;
    Polynomial condition;
    std::function<bool(const ScanPoint&)> holds;
};

/// Search for integer points where a degree polynomial vanishes: the
/// `enumerated` variables run over boxes, `solved` is determined linearly.
struct ScanProblem {
    std::string family;
    std::string description;
    RingPtr ring;
    Polynomial equation = Polynomial(make_plain_ring({}));
    std::vector<ScanVariable> enumerated;
    std::string solved;
    /// Extra columns computed from the point, e.g. c2(V) = v^2 - d.
    std::vector<std::pair<std::string, Polynomial>> derived;
    std::vector<ScanConstraint> constraints;
    std::function<Annotation(const ScanPoint&)> annotate;
    std::optional<ExceptionalCondition> exceptional;
};

struct BoundRecord {
    std::string variable;
    long lo = 0;
    long hi = 0;
    std::string reason;
    std::string witness;  // empty for explicit bounds
    long cauchy = 0;      // Cauchy root bound of the witness
    long last_feasible = 0;
};

struct Survivor {
    ScanPoint point;
    std::string annotation;
    bool excluded = false;
    bool exceptional = false;
};

enum class ScanVerdict { empty, empty_after_exclusions, exceptional_condition, survivors_listed };

std::string to_string(ScanVerdict v);
ScanVerdict verdict_from_string(std::string_view text);

struct ScanReport {
    std::string family;
    std::string equation;
    std::string solved;
    std::vector<BoundRecord> bounds;
    long candidates = 0;
    std::vector<Survivor> survivors;
    /// Points where the solved variable drops out of the equation and every value works.
    std::vector<ScanPoint> degenerate;
    std::map<std::string, long> rejections;
    ScanVerdict verdict = ScanVerdict::empty;
    std::string condition;
    /// Verdict and non-exceptional survivors are unchanged when every bound range is doubled.
    std::optional<bool> stable;

    bool operator==(const ScanReport&) const;
};

bool operator==(const BoundRecord&, const BoundRecord&);
bool operator==(const Survivor&, const Survivor&);

struct ScanOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    /// Multiplies every upper bound range; used by the stability check.
    long bound_scale = 1;
    bool check_stability = true;
};

/// Upper bound from a witness: the largest integer in [lo, Cauchy bound] where
/// the witness is <= 0, plus a margin of 5.
BoundRecord derive_bound(const ScanVariable& var);

ScanReport run_scan(const ScanProblem& problem, const ScanOptions& options = {});

// ---------------------------------------------------------------------------
// Families

struct ScanFamilyInfo {
    std::string name;
    int ell = 0;  // codimension for the P3 and Q3 families, 0 otherwise
    std::string description;
};

/// P2_N10, P2_N9, Fe, ProductsBxP1, and P3, Q3 for ell = 2, 3, 4.
std::vector<ScanFamilyInfo> scan_families();

/// Builds the problem for a named family. The equation is computed by the
/// engine from the base presets and compared with the closed form and with a
/// stored expansion; any disagreement throws ConsistencyError.
/// `equation_override` replaces the stored expansion (used to exercise that check).
ScanProblem scan_problem(const std::string& family, int ell = 0,
                         const std::optional<std::string>& equation_override = {});

/// Checks the symbolic claim of an exceptional condition: the equation restricted
/// to `fixed` is a nonzero rational multiple of `condition`.
bool exceptional_condition_holds(const ScanProblem& problem);

struct ExceptionalSummary {
    ScanPoint fixed;
    Polynomial condition;
    std::string text;
    bool verified = false;
};

/// The a = 2 condition of the Fe and ProductsBxP1 families, with any of the
/// family parameters (e, q) substituted. Throws InvalidInput for other families.
ExceptionalSummary exceptional_condition(const std::string& family, const ScanPoint& params = {});

/// Scan over the quadric threefold for codimension ell in 2..4.
ScanReport q3_scan(int ell, const ScanOptions& options = {});

}  // namespace inflect
