#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sumset/matrix.hpp"
#include "sumset/search.hpp"
#include "sumset/solution.hpp"

namespace sumset {

inline constexpr int kSchemaVersion = 1;

// {"schema":1,"m":..,"n":..,"a":[dec...],"b":[dec...],"canonical":bool}
// Integers are decimal strings; rationals render as "num/den".
nlohmann::json pair_to_json(const SolutionPair& p, bool canonical_flag);
nlohmann::json pair_to_json(const SolutionPair& p); // computes the flag
SolutionPair pair_from_json(const nlohmann::json& j); // throws rejected_input

// Row-major 3x3 array of decimal/rational strings.
nlohmann::json matrix_to_json(const SquareMatrix3& m);
SquareMatrix3 matrix_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerifyReport& r);
nlohmann::json report_to_json(const MatrixReport& r);

// Human-readable form mirroring set notation: "A = {...}\nB = {...}\n".
std::string pair_to_text(const SolutionPair& p);

SolutionPair load_pair(const std::string& path);
void save_json(const nlohmann::json& j, std::ostream& out);

// JSON-lines search stream records.
nlohmann::json stream_header(const SearchConfig& cfg);
nlohmann::json stream_footer(std::size_t count, double elapsed_seconds);

// Checkpoint for resumable searches: configuration echo plus the number of
// completed slots and solutions already written.
struct Checkpoint {
    Integer bound_n;
    std::size_t m = 0, n = 0;
    std::size_t completed_slots = 0;
    std::size_t emitted = 0;
};
nlohmann::json checkpoint_to_json(const Checkpoint& c);
Checkpoint checkpoint_from_json(const nlohmann::json& j);

} // namespace sumset
