#include "spflag/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spflag {

std::string rational_to_string(const mpq_class& x) {
  mpq_class c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw std::invalid_argument("expected a rational string, got " + j.dump());
  const std::string s = j.get<std::string>();
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

namespace {

std::vector<int> convert_weight(const std::vector<int>& eps, const RootSystem& sys, WeightBasis basis) {
  if (basis == WeightBasis::Eps) return eps;
  return eps_to_omega(Weight(eps), sys);
}

json entry(int q, const std::vector<int>& weight, const json& mult) {
  return json{{"q", q}, {"weight", weight}, {"mult", mult}};
}

// Omega coordinates change the sort order, so entries are re-sorted.
json sorted_entries(std::vector<std::pair<std::pair<int, std::vector<int>>, json>> rows) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (auto& [key, mult] : rows) out.push_back(entry(key.first, key.second, mult));
  return out;
}

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json rows_json(const std::vector<Vec>& rows) {
  json out = json::array();
  for (const Vec& v : rows) {
    json r = json::array();
    for (const mpq_class& x : v) r.push_back(rational_to_string(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

json to_json(const GradedCharacter& ch, const RootSystem& sys, WeightBasis basis) {
  std::vector<std::pair<std::pair<int, std::vector<int>>, json>> rows;
  for (const auto& [key, mult] : ch.terms())
    rows.push_back({{key.first, convert_weight(key.second, sys, basis)}, json(mult)});
  return sorted_entries(std::move(rows));
}

json to_json(const LaurentPoly& p, const RootSystem& sys, WeightBasis basis) {
  std::vector<std::pair<std::pair<int, std::vector<int>>, json>> rows;
  for (const auto& [m, c] : p.terms()) {
    if (c.get_den() != 1) throw std::invalid_argument("character coefficient is not an integer");
    rows.push_back({{m.q, convert_weight(m.z, sys, basis)}, integer_json(c.get_num())});
  }
  return sorted_entries(std::move(rows));
}

std::string to_csv(const json& character) {
  std::ostringstream os;
  os << "q,weight,mult\n";
  for (const json& e : character) {
    os << e.at("q").get<int>() << ',';
    bool first = true;
    for (const json& w : e.at("weight")) {
      os << (first ? "" : ";") << w.get<int>();
      first = false;
    }
    const json& m = e.at("mult");
    os << ',' << (m.is_string() ? m.get<std::string>() : m.dump()) << '\n';
  }
  return os.str();
}

json to_json(const Subspace& s) { return rows_json(s.vectors()); }

Subspace subspace_from_json(const json& j, int ambient) {
  if (!j.is_array()) throw std::invalid_argument("subspace must be an array of rows");
  std::vector<Vec> rows;
  for (const json& r : j) {
    if (!r.is_array() || static_cast<int>(r.size()) != ambient)
      throw std::invalid_argument("subspace row must have " + std::to_string(ambient) + " entries");
    Vec v;
    for (const json& x : r) v.push_back(rational_from_json(x));
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, ambient);
}

json to_json(const FlagPoint& f, int n) {
  json spaces = json::array();
  for (const Subspace& s : f.spaces) spaces.push_back(to_json(s));
  return json{{"kind", "flag"}, {"n", n}, {"d", f.d}, {"spaces", spaces}};
}

FlagPoint flag_from_json(const json& j, int n) {
  FlagPoint f;
  f.d = j.at("d").get<std::vector<int>>();
  const json& spaces = j.at("spaces");
  if (!spaces.is_array() || spaces.size() != f.d.size())
    throw std::invalid_argument("flag needs one space per entry of d");
  for (const json& s : spaces) f.spaces.push_back(subspace_from_json(s, 2 * n));
  return f;
}

json to_json(const ResolutionPoint& pt, const Parabolic& p) {
  json spaces = json::array();
  for (const Root& r : p.radical())
    spaces.push_back(json{{"i", r.i}, {"j", r.j}, {"basis", to_json(pt.at(r.i, r.j))}});
  return json{{"kind", "resolution"}, {"n", pt.n}, {"d", p.d()}, {"spaces", spaces}};
}

ResolutionPoint resolution_from_json(const json& j, int n) {
  ResolutionPoint pt{n, {}};
  for (const json& e : j.at("spaces")) {
    const Root r{e.at("i").get<int>(), e.at("j").get<int>()};
    if (!pt.spaces.emplace(r, subspace_from_json(e.at("basis"), 2 * n)).second)
      throw std::invalid_argument("duplicate entry for " + to_string(r));
  }
  return pt;
}

json to_json(const RationalPoint& pt) {
  json z = json::array();
  for (const mpq_class& x : pt.z) z.push_back(rational_to_string(x));
  return json{{"z", z}, {"q", rational_to_string(pt.q)}};
}

json to_json(const AblReport& r) {
  json points = json::array();
  for (const AblPointResult& p : r.points) {
    json e = to_json(p.point);
    e["abl"] = rational_to_string(p.abl);
    e["polytope"] = rational_to_string(p.polytope);
    e["equal"] = p.equal;
    points.push_back(std::move(e));
  }
  return json{{"points", points},
              {"matched", r.matched},
              {"convention", to_string(r.convention)},
              {"resampled", r.resampled}};
}

json to_json(const AdmissibleCollection& c) {
  json sets = json::array();
  for (const Root& r : c.index().roots())
    sets.push_back(json{{"i", r.i}, {"j", r.j}, {"S", members(c.at(r.i, r.j))}});
  return sets;
}

json to_json(const PolytopeSpec& spec, const std::vector<LatticePoint>& points) {
  json roots = json::array();
  for (const Root& r : spec.roots) roots.push_back(json::array({r.i, r.j}));
  json ineqs = json::array();
  for (const Inequality& q : spec.inequalities) {
    json support = json::array();
    for (int idx : q.support) support.push_back(json::array({spec.roots[idx].i, spec.roots[idx].j}));
    ineqs.push_back(json{{"support", support}, {"bound", q.bound}});
  }
  json pts = json::array();
  for (const LatticePoint& p : points) pts.push_back(p.s);
  return json{{"system", spec.system.name()},
              {"lambda", spec.lambda.m},
              {"roots", roots},
              {"inequalities", ineqs},
              {"points", pts}};
}

json to_json(const BundleLedger& b) {
  json omega = json::array();
  for (const auto& [r, c] : b.omega) omega.push_back(json{{"i", r.i}, {"j", r.j}, {"exp", c}});
  json div = json::array();
  for (const auto& [r, c] : b.divisor) div.push_back(json{{"i", r.i}, {"j", r.j}, {"coeff", c}});
  return json{{"omega", omega}, {"divisor", div}};
}

}  // namespace spflag
