#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "spflag/bundles.hpp"
#include "spflag/fixedpoints.hpp"
#include "spflag/geometry.hpp"
#include "spflag/polytope.hpp"

namespace spflag {

using json = nlohmann::json;

enum class WeightBasis { Eps, Omega };

// Always "p/q", also for integers ("3/1").
std::string rational_to_string(const mpq_class& x);
// Accepts "p/q", "p" or a JSON integer.
mpq_class rational_from_json(const json& j);

// Sorted list of {"q", "weight", "mult"}.
json to_json(const GradedCharacter& ch, const RootSystem& sys, WeightBasis basis);
// Same layout; coefficients must be integers.
json to_json(const LaurentPoly& p, const RootSystem& sys, WeightBasis basis);

// CSV rows "q,weight,mult" with weight entries joined by ';'.
std::string to_csv(const json& character);

json to_json(const Subspace& s);
// Rows of rationals spanning the subspace; rank need not be full.
Subspace subspace_from_json(const json& j, int ambient);

json to_json(const FlagPoint& f, int n);
FlagPoint flag_from_json(const json& j, int n);

json to_json(const ResolutionPoint& pt, const Parabolic& p);
ResolutionPoint resolution_from_json(const json& j, int n);

json to_json(const RationalPoint& pt);
json to_json(const AblReport& r);

json to_json(const AdmissibleCollection& c);

json to_json(const PolytopeSpec& spec, const std::vector<LatticePoint>& points);

json to_json(const BundleLedger& b);

}  // namespace spflag
