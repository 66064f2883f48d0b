#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "spflag/bundles.hpp"
#include "spflag/charring.hpp"
#include "spflag/fixedpoints.hpp"
#include "spflag/geometry.hpp"
#include "spflag/polytope.hpp"

namespace spflag::cli {

namespace {

struct Named {
  Command command;
  const char* name;
};

constexpr Named kCommands[] = {
    {Command::Dim, "dim"},
    {Command::QChar, "qchar"},
    {Command::Weyl, "weyl"},
    {Command::Polytope, "polytope"},
    {Command::FixedPoints, "fixed-points"},
    {Command::AblVerify, "abl-verify"},
    {Command::Discrepancy, "discrepancy"},
    {Command::CheckGeometry, "check-geometry"},
    {Command::Lift, "lift"},
};

// Failure that is not the user's fault: reported with exit status 1.
struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootSystem system_of(const JobConfig& c) {
  if (c.type == Kind::A) {
    if (c.n < 2) throw UsageError("--n must be at least 2 for type A (sl_m with m = n)");
    return RootSystem::type_a(c.n);
  }
  if (c.n < 1) throw UsageError("--n must be at least 1");
  return RootSystem::type_c(c.n);
}

void check_limit(const JobConfig& c, int limit) {
  if (c.n > limit && !c.force)
    throw UsageError("n = " + std::to_string(c.n) + " exceeds the soft limit " + std::to_string(limit) +
                     " for " + command_name(c.command) + "; pass --force to run anyway");
}

void require_type_c(const JobConfig& c) {
  if (c.type != Kind::C) throw UsageError(command_name(c.command) + " is only defined for type C");
}

DominantWeight lambda_of(const JobConfig& c, const RootSystem& sys) {
  if (!c.lambda) throw UsageError(command_name(c.command) + " needs --lambda m1,...,m" + std::to_string(sys.rank()));
  if (static_cast<int>(c.lambda->size()) != sys.rank())
    throw UsageError("--lambda has " + std::to_string(c.lambda->size()) + " entries; " + sys.name() + " needs " +
                     std::to_string(sys.rank()));
  for (int x : *c.lambda)
    if (x < 0) throw UsageError("--lambda entries must be nonnegative");
  return DominantWeight(*c.lambda);
}

Parabolic parabolic_of(const JobConfig& c, const std::optional<std::vector<int>>& from_input = std::nullopt) {
  std::vector<int> d;
  if (c.d) {
    d = *c.d;
    if (from_input && *from_input != d) throw UsageError("--d disagrees with the d recorded in the input file");
  } else if (from_input) {
    d = *from_input;
  } else {
    throw UsageError(command_name(c.command) + " needs --d d1,d2,... (strictly increasing, within 1..n)");
  }
  try {
    validate_d(d, c.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--d: ") + e.what());
  }
  return Parabolic(c.n, d);
}

json read_input(const JobConfig& c) {
  if (c.input.empty()) throw UsageError(command_name(c.command) + " needs --input file.json");
  std::ifstream in(c.input);
  if (!in) throw UsageError("cannot open " + c.input);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + c.input + ": " + e.what());
  }
}

// Input files may record n; it must agree with --n.
void check_input_n(const JobConfig& c, const json& j) {
  if (j.contains("n") && j.at("n").get<int>() != c.n)
    throw UsageError("--n disagrees with the n recorded in " + c.input);
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

std::string character_output(const JobConfig& c, const json& character) {
  return c.format == Format::Csv ? to_csv(character) : emit(character);
}

std::string do_polytope(const JobConfig& c) {
  const RootSystem sys = system_of(c);
  check_limit(c, kSoftMaxN);
  const PolytopeSpec spec = polytope_spec(lambda_of(c, sys), sys);
  const auto points = lattice_points(spec, c.threads);
  if (c.format == Format::Json) return emit(to_json(spec, points));
  std::ostringstream os;
  for (std::size_t t = 0; t < spec.roots.size(); ++t)
    os << (t ? "," : "") << "s" << spec.roots[t].i << "_" << spec.roots[t].j;
  os << '\n';
  for (const LatticePoint& p : points) {
    for (std::size_t t = 0; t < p.s.size(); ++t) os << (t ? "," : "") << p.s[t];
    os << '\n';
  }
  return os.str();
}

std::string do_fixed_points(const JobConfig& c) {
  require_type_c(c);
  system_of(c);
  check_limit(c, kSoftMaxN);
  const auto points = enumerate_fixed_points(c.n);
  if (c.count) return std::to_string(points.size()) + "\n";
  if (c.format == Format::Json) {
    json all = json::array();
    for (const auto& p : points) all.push_back(to_json(p));
    return emit(json{{"n", c.n}, {"count", points.size()}, {"collections", all}});
  }
  std::ostringstream os;
  os << "index,i,j,S\n";
  for (std::size_t t = 0; t < points.size(); ++t)
    for (const Root& r : points[t].index().roots()) {
      os << t << ',' << r.i << ',' << r.j << ',';
      bool first = true;
      for (int l : members(points[t].at(r.i, r.j))) {
        os << (first ? "" : ";") << l;
        first = false;
      }
      os << '\n';
    }
  return os.str();
}

std::string do_abl(const JobConfig& c, bool& ok) {
  require_type_c(c);
  const RootSystem sys = system_of(c);
  check_limit(c, kSoftMaxNAbl);
  if (c.trials < 1) throw UsageError("--trials must be positive");
  const AblReport r = abl_verify(lambda_of(c, sys), c.trials, c.seed, c.threads);
  ok = r.matched && r.convention == Convention::Direct;
  if (c.format == Format::Json) return emit(to_json(r));
  std::ostringstream os;
  os << "index,z,q,abl,polytope,equal\n";
  for (std::size_t t = 0; t < r.points.size(); ++t) {
    const AblPointResult& p = r.points[t];
    os << t << ',';
    for (std::size_t v = 0; v < p.point.z.size(); ++v) os << (v ? ";" : "") << rational_to_string(p.point.z[v]);
    os << ',' << rational_to_string(p.point.q) << ',' << rational_to_string(p.abl) << ','
       << rational_to_string(p.polytope) << ',' << (p.equal ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string do_discrepancy(const JobConfig& c, bool& ok) {
  require_type_c(c);
  system_of(c);
  check_limit(c, kSoftMaxN);
  const Parabolic p = parabolic_of(c);
  const IdentityCheck id = verify_canonical_identity(p);
  const auto tri = discrepancy_b_triangular(p);
  bool oracle_agrees = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "i,j,b,exceptional\n";
  for (const Root& r : p.radical()) {
    const long b = discrepancy_b(r.i, r.j, p);
    const bool ex = is_exceptional(r.i, r.j, p);
    if (tri.at(r) != b) oracle_agrees = false;
    rows.push_back(json{{"i", r.i}, {"j", r.j}, {"b", b}, {"exceptional", ex}});
    csv << r.i << ',' << r.j << ',' << b << ',' << (ex ? "true" : "false") << '\n';
  }
  ok = id.ok && oracle_agrees;
  if (c.format == Format::Csv) return csv.str();
  json out{{"n", c.n},
           {"d", p.d()},
           {"rows", rows},
           {"identity", id.ok},
           {"triangular_agrees", oracle_agrees}};
  if (!id.ok) out["residual"] = to_json(id.residual);
  return emit(out);
}

std::string do_check_geometry(const JobConfig& c, bool& ok) {
  require_type_c(c);
  system_of(c);
  check_limit(c, kSoftMaxN);
  const json in = read_input(c);
  check_input_n(c, in);
  const std::string kind = in.value("kind", "flag");
  std::optional<std::vector<int>> file_d;
  if (in.contains("d")) file_d = in.at("d").get<std::vector<int>>();
  const Parabolic p = parabolic_of(c, file_d);
  json out{{"kind", kind}, {"n", c.n}, {"d", p.d()}};
  if (kind == "flag") {
    FlagPoint f = flag_from_json(json{{"d", p.d()}, {"spaces", in.at("spaces")}}, c.n);
    for (std::size_t t = 0; t < f.d.size(); ++t)
      if (f.spaces[t].dim() != f.d[t])
        throw UsageError("space " + std::to_string(t + 1) + " has dimension " + std::to_string(f.spaces[t].dim()) +
                         ", expected " + std::to_string(f.d[t]));
    ok = in_sp_flag_a(f, c.n);
    out["member"] = ok;
  } else if (kind == "resolution") {
    const ResolutionPoint pt = resolution_from_json(in, c.n);
    try {
      ok = in_resolution(pt, p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    out["member"] = ok;
    if (ok) {
      json divisors = json::array();
      for (const Root& r : p.radical())
        if (in_divisor(pt, r.i, r.j)) divisors.push_back(json::array({r.i, r.j}));
      out["divisors"] = divisors;
      out["open_cell"] = divisors.empty();
    }
  } else {
    throw UsageError("input kind must be \"flag\" or \"resolution\", got \"" + kind + "\"");
  }
  return emit(out);
}

std::string do_lift(const JobConfig& c, bool& ok) {
  require_type_c(c);
  const json in = read_input(c);
  JobConfig cc = c;
  if (cc.n == 0) {
    if (!in.contains("n")) throw UsageError("lift needs --n or an \"n\" field in the input");
    cc.n = in.at("n").get<int>();
  }
  system_of(cc);
  check_limit(cc, kSoftMaxN);
  check_input_n(cc, in);
  std::optional<std::vector<int>> file_d;
  if (in.contains("d")) file_d = in.at("d").get<std::vector<int>>();
  const Parabolic p = parabolic_of(cc, file_d);
  const FlagPoint f = flag_from_json(json{{"d", p.d()}, {"spaces", in.at("spaces")}}, cc.n);
  if (!in_sp_flag_a(f, cc.n)) throw VerificationFailed("input is not a point of the degenerate flag variety");
  ResolutionPoint pt;
  try {
    pt = lift(f, p);
  } catch (const InfeasibleLift& e) {
    throw VerificationFailed(std::string("lift failed: ") + e.what());
  }
  ok = project_pi(pt, p) == f;
  json out = to_json(pt, p);
  out["roundtrip"] = ok;
  return emit(out);
}

std::string dispatch(const JobConfig& c, bool& ok) {
  ok = true;
  switch (c.command) {
    case Command::Dim: {
      const RootSystem sys = system_of(c);
      check_limit(c, kSoftMaxN);
      return std::to_string(dimension(lambda_of(c, sys), sys, c.threads)) + "\n";
    }
    case Command::QChar: {
      const RootSystem sys = system_of(c);
      check_limit(c, kSoftMaxN);
      return character_output(c, to_json(graded_character(lambda_of(c, sys), sys, c.threads), sys, c.basis));
    }
    case Command::Weyl: {
      const RootSystem sys = system_of(c);
      check_limit(c, kSoftMaxN);
      return character_output(c, to_json(weyl_character(lambda_of(c, sys), sys), sys, c.basis));
    }
    case Command::Polytope:
      return do_polytope(c);
    case Command::FixedPoints:
      return do_fixed_points(c);
    case Command::AblVerify:
      return do_abl(c, ok);
    case Command::Discrepancy:
      return do_discrepancy(c, ok);
    case Command::CheckGeometry:
      return do_check_geometry(c, ok);
    case Command::Lift:
      return do_lift(c, ok);
  }
  throw UsageError("unknown command");
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const Named& c : kCommands)
    if (name == c.name) return c.command;
  return std::nullopt;
}

std::string command_name(Command c) {
  for (const Named& x : kCommands)
    if (x.command == c) return x.name;
  return "?";
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Named& c : kCommands) v.emplace_back(c.name);
    return v;
  }();
  return names;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) throw UsageError(what + " is empty");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw UsageError(what + ": \"" + item + "\" is not an integer");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  std::string text;
  bool ok = true;
  try {
    if (config.threads < 1) throw UsageError("--threads must be at least 1");
    text = dispatch(config, ok);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitFailed;
  } catch (const json::exception& e) {
    err << "usage error: bad input file: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream f(config.output, std::ios::binary);
    if (!f || !(f << text)) {
      err << "error: cannot write " << config.output << '\n';
      return kExitFailed;
    }
  }
  if (!ok) {
    err << command_name(config.command) << ": verification failed\n";
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace spflag::cli
