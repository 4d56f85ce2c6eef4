#include "gcdlcm/json_io.hpp"

#include <algorithm>

#include "gcdlcm/errors.hpp"

namespace gcdlcm {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError("expected an object", path);
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing field '") + key + "'", path + "/" + key);
  }
  return *it;
}

Nat nat_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) {
    throw ParseError("integers must be decimal strings", path);
  }
  const auto& s = j.get_ref<const std::string&>();
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw ParseError("not a decimal natural number: '" + s + "'", path);
  }
  return Nat(s, 10);
}

NatSet natset_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError("expected an array of decimal strings", path);
  std::vector<Nat> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(nat_from_json(j[i], path + "/" + std::to_string(i)));
  }
  return NatSet(std::move(out));
}

std::size_t count_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError("expected a nonnegative integer", path);
  }
  return j.get<std::size_t>();
}

bool bool_from_json(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ParseError("expected a boolean", path);
  return j.get<bool>();
}

std::vector<std::size_t> indices_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError("expected an array of indices", path);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(count_from_json(j[i], path + "/" + std::to_string(i)));
  }
  return out;
}

Json nat_list(const std::vector<Nat>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(nat_to_json(x));
  return out;
}

}  // namespace

std::string mode_name(Mode mode) { return mode == Mode::MinGcd ? "min-gcd" : "max-lcm"; }

Mode parse_mode(const std::string& s) {
  if (s == "min-gcd") return Mode::MinGcd;
  if (s == "max-lcm") return Mode::MaxLcm;
  throw ParseError("unknown mode '" + s + "' (expected min-gcd or max-lcm)", "/mode");
}

std::string method_name(Method method) {
  return method == Method::Exact ? "exact" : "greedy";
}

Method parse_method(const std::string& s) {
  if (s == "exact") return Method::Exact;
  if (s == "greedy") return Method::Greedy;
  throw ParseError("unknown method '" + s + "' (expected exact or greedy)", "/method");
}

Json nat_to_json(const Nat& x) { return to_decimal(x); }

Json natset_to_json(const NatSet& s) { return nat_list(s.elements()); }

Json instance_to_json(const ProblemInstance& inst) {
  return Json{{"A", natset_to_json(inst.a)},
              {"B", natset_to_json(inst.b)},
              {"mode", mode_name(inst.mode)}};
}

ProblemInstance instance_from_json(const Json& j) {
  ProblemInstance inst;
  const auto& mode = field(j, "mode", "");
  if (!mode.is_string()) throw ParseError("mode must be a string", "/mode");
  inst.mode = parse_mode(mode.get<std::string>());
  inst.a = natset_from_json(field(j, "A", ""), "/A");
  if (j.contains("B")) inst.b = natset_from_json(j["B"], "/B");
  try {
    inst.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what(), "");
  }
  return inst;
}

Json cover_to_json(const CoverInstance& inst) {
  return Json{{"sets", inst.sets}, {"universe_size", inst.universe_size}};
}

CoverInstance cover_from_json(const Json& j) {
  CoverInstance inst;
  inst.universe_size = count_from_json(field(j, "universe_size", ""), "/universe_size");
  const auto& sets = field(j, "sets", "");
  if (!sets.is_array()) throw ParseError("expected an array of sets", "/sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    inst.sets.push_back(indices_from_json(sets[i], "/sets/" + std::to_string(i)));
  }
  try {
    inst.normalize();
  } catch (const DomainError& e) {
    throw ParseError(e.what(), "/sets");
  }
  return inst;
}

Json cover_solution_to_json(const CoverSolution& sol) {
  return Json{{"chosen", sol.chosen}, {"optimal", sol.is_optimal}, {"size", sol.size()}};
}

CoverSolution cover_solution_from_json(const Json& j) {
  CoverSolution sol;
  sol.chosen = indices_from_json(field(j, "chosen", ""), "/chosen");
  sol.is_optimal = bool_from_json(field(j, "optimal", ""), "/optimal");
  return sol;
}

Json solution_to_json(const SubsetSolution& sol, bool with_timing) {
  Json stats{{"set_count", sol.stats.set_count},
             {"universe_size", sol.stats.universe_size}};
  if (with_timing) stats["elapsed_ms"] = sol.stats.elapsed.count();
  return Json{{"S", natset_to_json(sol.s)},
              {"achieved", nat_to_json(sol.achieved)},
              {"method", method_name(sol.method)},
              {"optimal", sol.optimal},
              {"size", sol.s.size()},
              {"stats", std::move(stats)},
              {"target", nat_to_json(sol.target)}};
}

SubsetSolution solution_from_json(const Json& j) {
  SubsetSolution sol;
  sol.s = natset_from_json(field(j, "S", ""), "/S");
  sol.achieved = nat_from_json(field(j, "achieved", ""), "/achieved");
  sol.target = nat_from_json(field(j, "target", ""), "/target");
  const auto& method = field(j, "method", "");
  if (!method.is_string()) throw ParseError("method must be a string", "/method");
  sol.method = parse_method(method.get<std::string>());
  sol.optimal = bool_from_json(field(j, "optimal", ""), "/optimal");
  if (j.contains("stats")) {
    const auto& stats = j["stats"];
    if (stats.contains("universe_size")) {
      sol.stats.universe_size = count_from_json(stats["universe_size"], "/stats/universe_size");
    }
    if (stats.contains("set_count")) {
      sol.stats.set_count = count_from_json(stats["set_count"], "/stats/set_count");
    }
    if (stats.contains("elapsed_ms") && stats["elapsed_ms"].is_number()) {
      sol.stats.elapsed = std::chrono::duration<double, std::milli>(
          stats["elapsed_ms"].get<double>());
    }
  }
  return sol;
}

Json basis_to_json(const CoprimeBasis& cb) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < cb.source.size(); ++i) {
    rows.push_back(Json{{"element", nat_to_json(cb.source[i])}, {"row", cb.exponents[i]}});
  }
  return Json{{"basis", nat_list(cb.basis)}, {"exponents", std::move(rows)}};
}

Json reduction_to_json(const CoverReduction& r) {
  return Json{{"cover", cover_to_json(r.cover)},
              {"set_owners", nat_list(r.set_owners)},
              {"universe_labels", nat_list(r.universe_labels)}};
}

Json elimination_to_json(const BEliminationMap& m) {
  Json section = Json::array();
  for (std::size_t i = 0; i < m.reduced.size(); ++i) {
    section.push_back(Json{{"reduced", nat_to_json(m.reduced[i])},
                           {"representative", nat_to_json(m.section[i])}});
  }
  return Json{{"reduced", natset_to_json(m.reduced)}, {"section", std::move(section)}};
}

Json family_to_json(const NatFamily& f) {
  return Json{{"A", natset_to_json(f.values)},
              {"owners", f.owners},
              {"target", nat_to_json(f.target)}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ": " + e.what(),
                     "");
  }
}

}  // namespace gcdlcm
