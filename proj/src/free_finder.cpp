#include "freelie/free_finder.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "freelie/errors.hpp"

namespace freelie {

bool check_well_based(const UfnAutomaton& aut, StateId q, const Word& w) {
  if (!aut.valid_state(q)) throw UnknownState("check_well_based: unknown state " + std::to_string(q));
  return aut.run(q, w) == q;
}

CyclePair find_cycle_pair(const UfnAutomaton& aut) {
  auto pair = search_cycle_pair(aut);
  if (!pair) throw PolynomialGrowth("automaton has polynomial growth: no vertex carries two independent cycles");
  return *pair;
}

namespace {

struct Candidate {
  std::size_t k;
  std::size_t l;
};

std::vector<Candidate> candidate_order(std::size_t cap) {
  std::vector<Candidate> out;
  for (std::size_t total = 4; out.size() < cap; ++total)
    for (std::size_t k = total - 2; k >= 2 && out.size() < cap; --k) out.push_back({k, total - k});
  return out;
}

struct Evaluated {
  bool usable = false;  // false when w_1^k w_2^l is a proper power
  Word word;
  StateId vertex = kDead;
};

Evaluated evaluate(const UfnAutomaton& aut, const CyclePair& cycles, Candidate c) {
  const Word s = cycles.first.power(c.k) + cycles.second.power(c.l);
  if (!is_primitive(s)) return {};
  auto rot = regular_rotation(s);
  // A rotation of a word well-based at q is well-based at q·(moved prefix).
  const StateId vertex = aut.run(cycles.vertex, s.prefix(rot.shift));
  if (vertex == kDead || !check_well_based(aut, vertex, rot.word))
    throw std::logic_error("find_regular_pair: rotated candidate is not well-based");
  return {true, std::move(rot.word), vertex};
}

constexpr std::size_t kBatch = 16;

}  // namespace

FreePairCertificate find_regular_pair(const UfnAutomaton& aut, std::size_t cap, Execution execution) {
  if (cap < 4) throw std::invalid_argument("find_regular_pair: cap must be >= 4");
  const CyclePair cycles = find_cycle_pair(aut);
  const auto order = candidate_order(cap);

  struct Seen {
    Word word;
    Candidate from;
  };
  std::map<StateId, Seen> first_at;
  std::ostringstream log;
  for (std::size_t start = 0; start < order.size(); start += kBatch) {
    const std::size_t count = std::min(kBatch, order.size() - start);
    auto batch = ordered_map(count, execution, [&](std::size_t i) { return evaluate(aut, cycles, order[start + i]); });
    for (std::size_t i = 0; i < count; ++i) {
      const auto& e = batch[i];
      const auto c = order[start + i];
      log << " (" << c.k << "," << c.l << ")";
      if (!e.usable) {
        log << ":cyclic";
        continue;
      }
      log << "@" << aut.name(e.vertex);
      auto [it, inserted] = first_at.try_emplace(e.vertex, Seen{e.word, c});
      if (inserted || it->second.word == e.word) continue;

      FreePairCertificate cert;
      cert.base_vertex = e.vertex;
      cert.cycles = cycles;
      Seen a = it->second, b{e.word, c};
      if (ufn_compare(a.word, b.word) != UfnOutcome::Greater) std::swap(a, b);
      cert.u = a.word;
      cert.v = b.word;
      cert.u_exponents = {a.from.k, a.from.l};
      cert.v_exponents = {b.from.k, b.from.l};
      cert.bracket_u = standard_bracketing(cert.u);
      cert.bracket_v = standard_bracketing(cert.v);
      validate_certificate(aut, cert);
      return cert;
    }
  }
  throw CapExceeded("find_regular_pair: no two regular words share a base vertex after " + std::to_string(cap) +
                    " candidates; cycle vertex " + aut.name(cycles.vertex) + ", w1=" +
                    aut.alphabet().format(cycles.first) + ", w2=" + aut.alphabet().format(cycles.second) +
                    "; candidates:" + log.str());
}

void validate_certificate(const UfnAutomaton& aut, const FreePairCertificate& cert) {
  auto fail = [](const std::string& what) { throw InvalidCertificate("invalid certificate: " + what); };
  if (!aut.valid_state(cert.base_vertex)) fail("unknown base vertex");
  if (cert.u.empty() || cert.v.empty()) fail("empty word");
  if (!aut.alphabet().valid(cert.u) || !aut.alphabet().valid(cert.v)) fail("letter outside the alphabet");
  if (cert.u == cert.v) fail("u == v");
  if (!is_regular(cert.u)) fail("u is not regular");
  if (!is_regular(cert.v)) fail("v is not regular");
  if (ufn_compare(cert.u, cert.v) != UfnOutcome::Greater) fail("u does not dominate v in the Ufnarovsky order");
  if (!check_well_based(aut, cert.base_vertex, cert.u)) fail("u is not well-based at the base vertex");
  if (!check_well_based(aut, cert.base_vertex, cert.v)) fail("v is not well-based at the base vertex");
  if (!(cert.bracket_u == standard_bracketing(cert.u))) fail("bracket_u is not the standard bracketing of u");
  if (!(cert.bracket_v == standard_bracketing(cert.v))) fail("bracket_v is not the standard bracketing of v");
}

}  // namespace freelie
