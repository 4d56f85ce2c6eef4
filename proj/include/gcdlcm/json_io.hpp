#pragma once

#include <string>

#include <json.hpp>

#include "gcdlcm/coprime_basis.hpp"
#include "gcdlcm/reductions.hpp"
#include "gcdlcm/setcover.hpp"
#include "gcdlcm/solver.hpp"

// JSON schemas shared by the CLI and the tests. Integers are decimal strings
// so values of any size survive; counts and indices are plain numbers. Keys
// serialize in alphabetical order (nlohmann::json default object), which
// keeps output byte-stable.

namespace gcdlcm {

using Json = nlohmann::json;

std::string mode_name(Mode mode);
Mode parse_mode(const std::string& s);
std::string method_name(Method method);
Method parse_method(const std::string& s);

Json nat_to_json(const Nat& x);
Json natset_to_json(const NatSet& s);

/// {"A": [...], "B": [...], "mode": "min-gcd"|"max-lcm"}; "B" may be absent.
Json instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const Json& j);

/// {"sets": [[...], ...], "universe_size": n}
Json cover_to_json(const CoverInstance& inst);
CoverInstance cover_from_json(const Json& j);

/// {"chosen": [...], "optimal": bool, "size": n}
Json cover_solution_to_json(const CoverSolution& sol);
CoverSolution cover_solution_from_json(const Json& j);

/// {"S": [...], "achieved", "method", "optimal", "size", "stats", "target"}.
/// stats always carries universe_size and set_count; elapsed_ms is written
/// only when `with_timing` is set, because it varies between runs.
Json solution_to_json(const SubsetSolution& sol, bool with_timing = false);
SubsetSolution solution_from_json(const Json& j);

/// {"basis": [...], "exponents": [{"element": "12", "row": [2, 1]}, ...]}
Json basis_to_json(const CoprimeBasis& cb);

Json reduction_to_json(const CoverReduction& r);
Json elimination_to_json(const BEliminationMap& m);
Json family_to_json(const NatFamily& f);

/// Parses JSON text, turning syntax errors into ParseError with the line.
Json parse_json_text(const std::string& text);

}  // namespace gcdlcm
