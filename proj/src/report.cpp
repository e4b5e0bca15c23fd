#include "projrep/report.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "projrep/error.hpp"

namespace projrep {

namespace {

ojson tolerances_json(const Tolerances& t) {
  return ojson{{"cocycle", t.cocycle},           {"numeric_cocycle", t.numeric_cocycle},
               {"cluster_gap", t.cluster_gap},   {"rank", t.rank},
               {"integrality", t.integrality},   {"idempotent", t.idempotent},
               {"rep", t.rep},                   {"equality", t.equality}};
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

}  // namespace

ojson group_to_json(const FiniteGroup& g) {
  int points = g.points();
  std::vector<Perm> gens = g.permutations();
  if (gens.empty()) {
    gens = g.regular_generators();
    points = g.order();
  }
  ojson arr = ojson::array();
  for (const auto& p : gens) {
    ojson row = ojson::array();
    for (int x : p) row.push_back(x + 1);
    arr.push_back(std::move(row));
  }
  return ojson{{"name", g.name()}, {"points", points}, {"generators", std::move(arr)}};
}

GroupPtr group_from_json(const ojson& doc, int cap) {
  if (!doc.is_object()) parse_error("group document must be an object");
  if (!doc.contains("name") || !doc["name"].is_string()) parse_error("missing string field 'name'");
  if (!doc.contains("points") || !doc["points"].is_number_integer()) parse_error("missing integer field 'points'");
  if (!doc.contains("generators") || !doc["generators"].is_array()) parse_error("missing array field 'generators'");
  const int points = doc["points"].get<int>();
  if (points < 1) parse_error("'points' must be positive");
  std::vector<Perm> gens;
  for (const auto& row : doc["generators"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != points)
      parse_error("each generator must list " + std::to_string(points) + " images");
    Perm p(points);
    std::vector<char> hit(points, 0);
    for (int i = 0; i < points; ++i) {
      if (!row[i].is_number_integer()) parse_error("images must be integers");
      const int v = row[i].get<int>();
      if (v < 1 || v > points) parse_error("image out of range 1.." + std::to_string(points));
      if (hit[v - 1]) parse_error("generator is not a permutation");
      hit[v - 1] = 1;
      p[i] = v - 1;
    }
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_permutations(doc["name"].get<std::string>(), points, gens, cap);
}

GroupPtr load_group(const std::string& path, int cap) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  ojson doc;
  try {
    doc = ojson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path + ": " + e.what());
  }
  return group_from_json(doc, cap);
}

void export_group(const FiniteGroup& g, const std::string& path) { write_text(path, group_to_json(g).dump(2) + "\n"); }

ojson cayley_table_json(const FiniteGroup& g) {
  return ojson{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}};
}

ojson cocycle_to_json(const Cocycle& a) {
  return ojson{{"group", a.group->name()}, {"modulus", a.modulus}, {"hash", cocycle_hash(a)}, {"table", a.table}};
}

ojson multiplier_to_json(const SchurMultiplier& m) {
  ojson basis = ojson::array();
  for (const auto& c : m.basis()) basis.push_back(cocycle_to_json(c));
  return ojson{{"group", m.group()->name()},
               {"order", m.group()->order()},
               {"invariants", m.invariants()},
               {"size", m.size()},
               {"exact", m.is_exact()},
               {"known", m.is_known()},
               {"modulus", m.modulus()},
               {"basis", std::move(basis)}};
}

ojson degrees_to_json(const TwistedContext& ctx, std::uint64_t seed) {
  ojson reps = ojson::array();
  for (Elem x : ctx.regular.regular_representatives()) reps.push_back(x);
  return ojson{{"group", ctx.group->name()},
               {"coclass", ctx.coclass.exponents()},
               {"coclass_index", ctx.coclass.index()},
               {"coclass_order", ctx.coclass.order()},
               {"cocycle_hash", cocycle_hash(ctx.coclass.representative())},
               {"c_regular_classes", std::move(reps)},
               {"degrees", ctx.degrees()},
               {"seed", seed},
               {"residual", ctx.wedderburn.residual}};
}

ojson rep_to_json(const ProjRep& r, const std::string& cocycle_ref) {
  ojson mats = ojson::array();
  for (Elem g : r.group->generators()) {
    const auto& m = r.mats[g];
    std::vector<double> re, im;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        re.push_back(m(i, j).real());
        im.push_back(m(i, j).imag());
      }
    mats.push_back(ojson{{"element", g}, {"re", re}, {"im", im}});
  }
  return ojson{{"degree", r.degree()}, {"cocycle", cocycle_ref}, {"generators", std::move(mats)},
               {"residual", rep_residual(r)}};
}

ojson check_to_json(const CheckResult& r, const VerifyConfig& cfg) {
  return ojson{{"check", r.check},
               {"group", r.group},
               {"coclass", r.coclass},
               {"coclass_index", r.coclass_index},
               {"cocycle_hash", r.cocycle_hash},
               {"primes", r.primes},
               {"lhs", r.lhs},
               {"rhs", r.rhs},
               {"verdict", std::string(to_string(r.verdict))},
               {"reason", r.reason},
               {"witnesses", r.witnesses},
               {"seed", cfg.seed},
               {"tolerances", tolerances_json(cfg.tol)}};
}

std::string to_jsonl(const std::vector<CheckResult>& results, const VerifyConfig& cfg) {
  std::string out;
  for (const auto& r : results) {
    out += check_to_json(r, cfg).dump();
    out += '\n';
  }
  return out;
}

std::string summary_csv(const std::vector<CheckResult>& results) {
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, SuiteTotals> counts;
  for (const auto& r : results) {
    const auto key = std::make_pair(r.group, r.check);
    if (!counts.count(key)) order.push_back(key);
    auto& c = counts[key];
    if (r.verdict == Verdict::Pass) ++c.pass;
    else if (r.verdict == Verdict::Fail) ++c.fail;
    else ++c.inapplicable;
  }
  std::ostringstream os;
  os << "group,check,pass,fail,inapplicable\n";
  for (const auto& key : order) {
    const auto& c = counts[key];
    os << '"' << key.first << "\"," << key.second << ',' << c.pass << ',' << c.fail << ',' << c.inapplicable << '\n';
  }
  return os.str();
}

SuiteTotals totals(const std::vector<CheckResult>& results) {
  SuiteTotals t;
  for (const auto& r : results) {
    if (r.verdict == Verdict::Pass) ++t.pass;
    else if (r.verdict == Verdict::Fail) ++t.fail;
    else ++t.inapplicable;
  }
  return t;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace projrep
