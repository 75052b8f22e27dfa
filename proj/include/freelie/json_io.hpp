#ifndef FREELIE_JSON_IO_HPP
#define FREELIE_JSON_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "freelie/automaton.hpp"
#include "freelie/errors.hpp"
#include "freelie/free_finder.hpp"
#include "freelie/props.hpp"
#include "freelie/verifier.hpp"

namespace freelie {

using Json = nlohmann::ordered_json;

// Malformed or structurally invalid input. Parse errors carry "line L,
// column C" in the message.
class InputError : public Error {
 public:
  using Error::Error;
};

Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j, bool pretty);

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json to_json(const UfnAutomaton& aut);
LabeledGraph graph_from_json(const Json& j);

// Either file format: a presentation (has "forbidden") is built into its
// Ufnarovsky automaton, an automaton file (has "edges") is determinized.
UfnAutomaton automaton_from_json(const Json& j);

Json bracket_to_json(const BracketTree& t, const Alphabet& alphabet);
BracketTree bracket_from_json(const Json& j, const Alphabet& alphabet);

Json to_json(const FreePairCertificate& cert, const UfnAutomaton& aut);
FreePairCertificate certificate_from_json(const Json& j, const UfnAutomaton& aut);

// Big integers are numbers when they fit in 64 bits and strings otherwise.
Json integer_to_json(const Integer& x);

Json to_json(const GrowthReport& r, const UfnAutomaton& aut);
Json to_json(const LieFreenessReport& r, const UfnAutomaton& aut);
Json to_json(const GroupRelationsReport& r);
Json to_json(const FreeSubgroupReport& r, const UfnAutomaton& aut);
Json to_json(const SuiteReport& r);

}  // namespace freelie

#endif  // FREELIE_JSON_IO_HPP
