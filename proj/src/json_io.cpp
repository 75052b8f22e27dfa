#include "freelie/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace freelie {

namespace {

// Line and column (1-based) of a byte offset.
std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(string_of(e, what));
  return out;
}

std::size_t size_of(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw InputError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Word word_of(const Json& j, const Alphabet& alphabet, const char* what) {
  try {
    return alphabet.from_symbols(strings_of(j, what));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

Json word_json(const Word& w, const Alphabet& alphabet) { return Json(alphabet.to_symbols(w)); }

Alphabet alphabet_of(const Json& j) {
  try {
    return Alphabet(strings_of(j, "alphabet"));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("alphabet: ") + e.what());
  }
}

Json polynomial_json(const std::vector<Integer>& coefficients) {
  Json out = Json::array();
  for (const auto& c : coefficients) out.push_back(integer_to_json(c));
  return out;
}

Json cycle_json(const CyclePair& c, const UfnAutomaton& aut) {
  return Json{{"vertex", aut.name(c.vertex)},
              {"first", word_json(c.first, aut.alphabet())},
              {"second", word_json(c.second, aut.alphabet())}};
}

StateId state_of(const Json& j, const UfnAutomaton& aut, const char* what) {
  const std::string name = string_of(j, what);
  auto q = aut.find_state(name);
  if (!q) throw InvalidCertificate(std::string(what) + ": unknown vertex \"" + name + "\"");
  return *q;
}

const char* method_name(ExpansionMethod m) {
  return m == ExpansionMethod::LeadingTerms ? "leading-terms" : "full-expansion";
}

const char* verdict(bool verified) { return verified ? "Verified" : "Refuted"; }

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at " + location(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << dump(j, true);
}

Json to_json(const Presentation& p) {
  Json forbidden = Json::array();
  for (const auto& w : p.forbidden) forbidden.push_back(word_json(w, p.alphabet));
  return Json{{"alphabet", p.alphabet.symbols()}, {"forbidden", std::move(forbidden)}};
}

Presentation presentation_from_json(const Json& j) {
  Presentation p{alphabet_of(field(j, "alphabet")), {}};
  const Json& forbidden = field(j, "forbidden");
  if (!forbidden.is_array()) throw InputError("forbidden must be an array of words");
  for (const auto& w : forbidden) {
    p.forbidden.push_back(word_of(w, p.alphabet, "forbidden word"));
    if (p.forbidden.back().empty()) throw InputError("forbidden word must be nonempty");
  }
  return p;
}

Json to_json(const UfnAutomaton& aut) {
  Json edges = Json::array();
  for (std::size_t q = 0; q < aut.state_count(); ++q) {
    const auto row = aut.row(static_cast<StateId>(q));
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (row[x] == kDead) continue;
      edges.push_back(Json{{"from", aut.names()[q]},
                           {"label", aut.alphabet().symbol(static_cast<Letter>(x))},
                           {"to", aut.name(row[x])}});
    }
  }
  return Json{{"alphabet", aut.alphabet().symbols()},
              {"vertices", aut.names()},
              {"root", aut.name(aut.root())},
              {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const Json& j) {
  const auto vertices = strings_of(field(j, "vertices"), "vertices");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!index.emplace(vertices[i], i).second) throw InputError("duplicate vertex \"" + vertices[i] + "\"");
  const auto vertex = [&](const Json& v, const char* what) {
    const std::string name = string_of(v, what);
    auto it = index.find(name);
    if (it == index.end()) throw InputError(std::string(what) + ": unknown vertex \"" + name + "\"");
    return it->second;
  };

  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("edges must be an array");
  std::vector<std::string> labels;
  if (j.contains("alphabet")) {
    labels = strings_of(j.at("alphabet"), "alphabet");
  } else {
    for (const auto& e : edges) {
      const std::string l = string_of(field(e, "label"), "label");
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
    }
  }
  if (labels.empty()) throw InputError("automaton has no labels");

  LabeledGraph g{alphabet_of(Json(labels)), vertices, {}, {vertex(field(j, "root"), "root")}};
  for (const auto& e : edges) {
    const std::string l = string_of(field(e, "label"), "label");
    auto x = g.alphabet.find(l);
    if (!x) throw InputError("edge label \"" + l + "\" is not in the alphabet");
    g.edges.push_back({vertex(field(e, "from"), "from"), *x, vertex(field(e, "to"), "to")});
  }
  return g;
}

UfnAutomaton automaton_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a presentation or automaton object");
  try {
    if (j.contains("forbidden")) return build_automaton(normalize_presentation(presentation_from_json(j)));
    if (j.contains("edges")) return determinize_graph(graph_from_json(j));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("input has neither \"forbidden\" nor \"edges\"");
}

Json bracket_to_json(const BracketTree& t, const Alphabet& alphabet) {
  if (t.is_leaf()) return alphabet.symbol(t.letter());
  return Json::array({bracket_to_json(t.left(), alphabet), bracket_to_json(t.right(), alphabet)});
}

BracketTree bracket_from_json(const Json& j, const Alphabet& alphabet) {
  if (j.is_string()) {
    auto x = alphabet.find(j.get<std::string>());
    if (!x) throw InputError("bracket leaf \"" + j.get<std::string>() + "\" is not in the alphabet");
    return BracketTree::leaf(*x);
  }
  if (!j.is_array() || j.size() != 2) throw InputError("bracket node must be a pair");
  return BracketTree::node(bracket_from_json(j[0], alphabet), bracket_from_json(j[1], alphabet));
}

Json to_json(const FreePairCertificate& cert, const UfnAutomaton& aut) {
  const auto& a = aut.alphabet();
  return Json{{"alphabet", a.symbols()},
              {"u", word_json(cert.u, a)},
              {"v", word_json(cert.v, a)},
              {"base_vertex", aut.name(cert.base_vertex)},
              {"cycles", cycle_json(cert.cycles, aut)},
              {"u_exponents", cert.u_exponents},
              {"v_exponents", cert.v_exponents},
              {"bracket_u", bracket_to_json(cert.bracket_u, a)},
              {"bracket_v", bracket_to_json(cert.bracket_v, a)}};
}

FreePairCertificate certificate_from_json(const Json& j, const UfnAutomaton& aut) {
  const auto& a = aut.alphabet();
  if (j.contains("alphabet") && !(alphabet_of(j.at("alphabet")) == a))
    throw AlphabetMismatch("certificate alphabet differs from the automaton's");
  FreePairCertificate c;
  c.u = word_of(field(j, "u"), a, "u");
  c.v = word_of(field(j, "v"), a, "v");
  c.base_vertex = state_of(field(j, "base_vertex"), aut, "base_vertex");
  const Json& cycles = field(j, "cycles");
  c.cycles.vertex = state_of(field(cycles, "vertex"), aut, "cycles.vertex");
  c.cycles.first = word_of(field(cycles, "first"), a, "cycles.first");
  c.cycles.second = word_of(field(cycles, "second"), a, "cycles.second");
  for (auto [key, target] : {std::pair{"u_exponents", &c.u_exponents}, std::pair{"v_exponents", &c.v_exponents}}) {
    const Json& e = field(j, key);
    if (!e.is_array() || e.size() != 2) throw InputError(std::string(key) + " must be a pair");
    (*target)[0] = size_of(e[0], key);
    (*target)[1] = size_of(e[1], key);
  }
  c.bracket_u = bracket_from_json(field(j, "bracket_u"), a);
  c.bracket_v = bracket_from_json(field(j, "bracket_v"), a);
  return c;
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

Json to_json(const GrowthReport& r, const UfnAutomaton& aut) {
  Json growth;
  if (r.kind.exponential) {
    growth = Json{{"kind", "Exponential"}};
    if (r.kind.witness) growth["witness"] = cycle_json(*r.kind.witness, aut);
  } else {
    growth = Json{{"kind", "Polynomial"}, {"degree", r.kind.degree}};
  }
  Json out{{"states", aut.state_count()}, {"counts", polynomial_json(r.counts)}, {"growth", std::move(growth)}};
  if (r.hilbert)
    out["hilbert"] = Json{{"numerator", polynomial_json(r.hilbert->numerator)},
                          {"denominator", polynomial_json(r.hilbert->denominator)}};
  return out;
}

Json to_json(const LieFreenessReport& r, const UfnAutomaton& aut) {
  const Alphabet hall = hall_alphabet();
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json leading = nullptr;
    if (row.leading)
      leading = Json{{"monomial", word_json(row.leading->monomial, aut.alphabet())},
                     {"coefficient", integer_to_json(row.leading->coefficient)}};
    rows.push_back(Json{{"hall_word", hall.format(row.hall_word)},
                        {"substituted", word_json(row.substituted, aut.alphabet())},
                        {"accepted", row.accepted},
                        {"leading", std::move(leading)}});
  }
  Json out{{"verdict", verdict(r.verified)}, {"degree", r.degree}, {"method", method_name(r.method)}};
  if (!r.verified) out["failure"] = r.failure;
  out["rows"] = std::move(rows);
  return out;
}

Json to_json(const GroupRelationsReport& r) {
  Json out{{"verdict", verdict(r.verified)},
           {"n", r.n},
           {"truncation", r.truncation},
           {"tuples_checked", r.tuples_checked},
           {"exhaustive", r.exhaustive}};
  if (r.failing_tuple) {
    Json t = Json::array();
    for (auto i : *r.failing_tuple) t.push_back("x" + std::to_string(i + 1));
    out["failing_tuple"] = std::move(t);
  }
  return out;
}

Json to_json(const FreeSubgroupReport& r, const UfnAutomaton& aut) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"word", format_group_word(row.word)},
                        {"lowest_degree", row.lowest_degree},
                        {"witness", word_json(row.witness, aut.alphabet())},
                        {"coefficient", integer_to_json(row.coefficient)}});
  Json out{{"verdict", verdict(r.verified)},
           {"max_word_length", r.max_word_length},
           {"truncation", r.truncation},
           {"method", method_name(r.method)}};
  if (!r.verified) out["failure"] = r.failure;
  out["rows"] = std::move(rows);
  return out;
}

Json to_json(const SuiteReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties)
    props.push_back(Json{{"name", p.name},
                         {"cases", p.cases},
                         {"failures", p.failures},
                         {"counterexamples", p.counterexamples}});
  return Json{{"suite", suite_name(r.suite)},
              {"seed", r.seed},
              {"passed", r.passed()},
              {"properties", std::move(props)}};
}

}  // namespace freelie
