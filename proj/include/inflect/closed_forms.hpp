#pragma once

#include "inflect/graded.hpp"
#include "inflect/scroll_model.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace inflect {

struct CheckOutcome {
    bool pass = false;
    std::string expected;
    std::string actual;
    std::string note;
};

/// A closed form kept as text, with a check that recomputes the same
/// quantity through the engine. The check parses `template_text` from the
/// record it is given, so a corrupted copy of a record fails its check.
struct FormulaRecord {
    std::string id;
    std::string group;
    std::string parameters;
    std::string template_text;
    std::string description;
    std::function<CheckOutcome(const FormulaRecord&)> check;

    CheckOutcome run() const { return check(*this); }
};

/// Every record, sorted by id.
const std::vector<FormulaRecord>& formula_registry();

// ---------------------------------------------------------------------------
// Template helpers shared by the registry and the scans.

/// Parses a class on the total space of ScrollGeometry(n, m); the symbol K stands for pi^*K_Y = -C1.
GradedClass class_template(const ScrollGeometry& geo, std::string_view text);

/// Parses a polynomial in the base symbols c_i, v_i plus the scalars
///   d  degree of X (pushforward of L^n),
///   g  sectional genus, 2g - 2 = v1^2 + K v1 (surfaces only),
///   K  canonical class -c1,
///   H  hyperplane class with V = H + H, i.e. v1/2,
/// and rewrites it purely in c_i, v_i.
Polynomial base_template(const ScrollGeometry& geo, std::string_view text);

// ---------------------------------------------------------------------------
// Closed forms generated from their printed parameterized shape.

struct AbelianClass {
    GradedClass value;
    /// Set when ell < 3 (m = 2: ell < 2) so that terms with negative L-powers were dropped.
    bool dropped_terms = false;
};

/// Class of Phi_k over an abelian base of dimension m in {2, 3}.
AbelianClass abelian_class(int n, int m, int k, int ell);

/// Degree over an abelian surface as a polynomial in d and g (ring {d, g}).
Polynomial abelian_degree(int k, int ell);

/// (p/2)(k^5 + 5k^4 + 13k^3 + 19k^2 + 16k + 6); the bracket is always even.
Integer secant_scroll_flexes(int k, const Integer& p);
/// Polarization type (1, p) paired with order k: p = (k+1)^2 + 2.
Integer secant_scroll_p(int k);

/// pi^*((n+2)K + (m+1)v1) + binom(m+1, 2) L.
GradedClass divisor_class(int n, int m);

/// For m = 2: (4-n)d + (n+2)(2g-2) - (n-1)v2 and (4-n)v1^2 + (n+2)(2g-2) - 3v2, as template text.
std::pair<std::string, std::string> divisor_degree_m2(int n);

struct DetailsCase {
    std::string description;
    std::string degree;  // template in d and the case parameters
};

/// Exceptional cases of the lower bound deg >= 3d for threefold scrolls in P^8 (case 1..4).
/// Throws InvalidInput for any other case number.
DetailsCase thm_details_case(int which);

/// Degree for cases 2..4 as a polynomial in d, q, F, G, A, M (degrees of the
/// bundles on the base curve), with the given values substituted. Case 1 is the
/// constant 3 (at d = 7).
Polynomial thm_details_degree(int which, const std::map<std::string, Rational>& values = {});

}  // namespace inflect
