#include "freelie/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "freelie/errors.hpp"

namespace freelie {

namespace {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Extends `prefix` by every repeat-free sequence avoiding `used`, up to
// `max_len` letters, reporting each sequence (including the empty one).
template <class F>
void repeat_free_sequences(std::size_t alphabet_size, std::size_t max_len, std::vector<bool>& used, Word& prefix,
                           F&& report) {
  report(prefix);
  if (prefix.size() == max_len) return;
  for (std::size_t y = 0; y < alphabet_size; ++y) {
    if (used[y]) continue;
    used[y] = true;
    Word next = prefix;
    next.push_back(static_cast<Letter>(y));
    repeat_free_sequences(alphabet_size, max_len, used, next, report);
    used[y] = false;
  }
}

}  // namespace

Presentation family_A(std::size_t n, GapConvention convention) {
  if (n == 0) throw std::invalid_argument("family_A: n must be >= 1");
  const std::size_t letters = n + 2;
  const std::size_t max_zero_len = convention == GapConvention::Relations ? n : n + 1;
  Presentation p{Alphabet::indexed("x", letters), {}};
  if (max_zero_len < 2) return p;
  // Minimal zero words are x v x with v repeat-free and free of x.
  for (std::size_t x = 0; x < letters; ++x) {
    std::vector<bool> used(letters, false);
    used[x] = true;
    Word empty;
    repeat_free_sequences(letters, max_zero_len - 2, used, empty, [&](const Word& v) {
      const Word xw{static_cast<Letter>(x)};
      p.forbidden.push_back(xw + v + xw);
    });
  }
  std::sort(p.forbidden.begin(), p.forbidden.end(), shortlex_less);
  return p;
}

Presentation normalize_presentation(Presentation p) {
  for (const auto& w : p.forbidden) {
    if (w.empty()) throw std::invalid_argument("normalize_presentation: empty forbidden word");
    if (!p.alphabet.valid(w)) throw std::invalid_argument("normalize_presentation: letter outside the alphabet");
  }
  std::sort(p.forbidden.begin(), p.forbidden.end(), shortlex_less);
  p.forbidden.erase(std::unique(p.forbidden.begin(), p.forbidden.end()), p.forbidden.end());
  std::vector<Word> kept;
  for (const auto& w : p.forbidden) {
    // Shorter words come first, so any proper factor is already in `kept`.
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Word& f) { return w.contains(f); });
    if (!redundant) kept.push_back(w);
  }
  p.forbidden = std::move(kept);
  return p;
}

bool avoids_all(const Word& w, const std::vector<Word>& forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(), [&](const Word& f) { return w.contains(f); });
}

UfnAutomaton::UfnAutomaton(Alphabet alphabet, std::vector<std::string> names, std::vector<StateId> delta, StateId root)
    : alphabet_(std::move(alphabet)), names_(std::move(names)), delta_(std::move(delta)), root_(root) {
  if (names_.empty()) throw std::invalid_argument("automaton needs at least one state");
  if (delta_.size() != names_.size() * alphabet_.size())
    throw std::invalid_argument("automaton transition table has the wrong size");
  if (!valid_state(root_)) throw std::invalid_argument("automaton root out of range");
  for (StateId t : delta_)
    if (t != kDead && !valid_state(t)) throw std::invalid_argument("automaton transition out of range");
}

std::optional<StateId> UfnAutomaton::find_state(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

StateId UfnAutomaton::run(StateId q, const Word& w) const {
  for (std::size_t i = 0; i < w.size() && q != kDead; ++i) {
    if (w[i] >= alphabet_.size()) return kDead;
    q = step(q, w[i]);
  }
  return q;
}

UfnAutomaton build_automaton(const Presentation& p) {
  const std::size_t sigma = p.alphabet.size();
  std::size_t longest = 1;
  for (const auto& f : p.forbidden) longest = std::max(longest, f.size());
  const std::size_t window = longest - 1;

  // Normal words of length <= window, breadth-first, which is shortlex.
  std::vector<Word> states{Word{}};
  std::unordered_map<Word, StateId, WordHash> index{{Word{}, 0}};
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() == window) continue;
    for (std::size_t x = 0; x < sigma; ++x) {
      Word next = states[i];
      next.push_back(static_cast<Letter>(x));
      if (!avoids_all(next, p.forbidden)) continue;
      index.emplace(next, static_cast<StateId>(states.size()));
      states.push_back(std::move(next));
    }
  }

  std::vector<StateId> delta(states.size() * sigma, kDead);
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (std::size_t x = 0; x < sigma; ++x) {
      Word next = states[s];
      next.push_back(static_cast<Letter>(x));
      if (!avoids_all(next, p.forbidden)) continue;
      if (next.size() > window) next = next.suffix(window);
      delta[s * sigma + x] = index.at(next);
    }
  }

  std::vector<std::string> names;
  names.reserve(states.size());
  for (const auto& w : states) names.push_back(p.alphabet.format(w));
  return UfnAutomaton(p.alphabet, std::move(names), std::move(delta), 0);
}

UfnAutomaton determinize_graph(const LabeledGraph& g) {
  const std::size_t sigma = g.alphabet.size();
  for (const auto& e : g.edges)
    if (e.from >= g.vertices.size() || e.to >= g.vertices.size() || e.label >= sigma)
      throw std::invalid_argument("determinize_graph: edge out of range");
  if (g.initial.empty()) throw std::invalid_argument("determinize_graph: no initial vertex");

  std::vector<std::vector<std::vector<std::size_t>>> out(g.vertices.size(), std::vector<std::vector<std::size_t>>(sigma));
  for (const auto& e : g.edges) out[e.from][e.label].push_back(e.to);

  using Subset = std::vector<std::size_t>;
  auto normalize = [](Subset s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };

  std::vector<Subset> subsets{normalize(g.initial)};
  std::map<Subset, StateId> index{{subsets[0], 0}};
  std::vector<StateId> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t x = 0; x < sigma; ++x) {
      Subset next;
      for (auto v : subsets[i]) next.insert(next.end(), out[v][x].begin(), out[v][x].end());
      next = normalize(std::move(next));
      if (next.empty()) {
        delta.push_back(kDead);
        continue;
      }
      auto [it, inserted] = index.try_emplace(next, static_cast<StateId>(subsets.size()));
      if (inserted) subsets.push_back(next);
      delta.push_back(it->second);
    }
  }

  std::vector<std::string> names;
  for (const auto& s : subsets) {
    if (s.size() == 1) {
      names.push_back(g.vertices[s[0]]);
      continue;
    }
    std::string name = "{";
    for (std::size_t i = 0; i < s.size(); ++i) name += (i ? "," : "") + g.vertices[s[i]];
    names.push_back(name + "}");
  }
  UfnAutomaton aut(g.alphabet, std::move(names), std::move(delta), 0);

  // Factor closure: from every state q, whatever q can read the root can
  // read too. Walk the pairs (q·w, root·w).
  const auto n = aut.state_count();
  std::vector<bool> seen(n * n, false);
  std::deque<std::pair<StateId, StateId>> queue;
  for (std::size_t q = 0; q < n; ++q) queue.emplace_back(static_cast<StateId>(q), aut.root());
  while (!queue.empty()) {
    auto [p, r] = queue.front();
    queue.pop_front();
    const auto key = static_cast<std::size_t>(p) * n + static_cast<std::size_t>(r);
    if (seen[key]) continue;
    seen[key] = true;
    for (std::size_t x = 0; x < sigma; ++x) {
      const StateId pn = aut.step(p, static_cast<Letter>(x));
      if (pn == kDead) continue;
      const StateId rn = aut.step(r, static_cast<Letter>(x));
      if (rn == kDead)
        throw NotSubwordClosed("state '" + aut.name(p) + "' reads '" + g.alphabet.symbol(static_cast<Letter>(x)) +
                               "' but the corresponding suffix is rejected");
      queue.emplace_back(pn, rn);
    }
  }
  return aut;
}

namespace {

std::vector<Integer> count_words_serial(const UfnAutomaton& aut, std::size_t K) {
  const std::size_t n = aut.state_count();
  std::vector<Integer> current(n, 0), next(n, 0);
  current[static_cast<std::size_t>(aut.root())] = 1;
  std::vector<Integer> counts;
  counts.reserve(K);
  for (std::size_t k = 1; k <= K; ++k) {
    std::fill(next.begin(), next.end(), Integer(0));
    for (std::size_t s = 0; s < n; ++s) {
      if (current[s] == 0) continue;
      for (StateId t : aut.row(static_cast<StateId>(s)))
        if (t != kDead) next[static_cast<std::size_t>(t)] += current[s];
    }
    Integer total = 0;
    for (const auto& c : next) total += c;
    counts.push_back(total);
    std::swap(current, next);
  }
  return counts;
}

std::vector<Integer> count_words_parallel(const UfnAutomaton& aut, std::size_t K) {
  const std::size_t n = aut.state_count();
  // Pull formulation: each target state sums over its predecessors, so the
  // per-step loop has no write conflicts.
  std::vector<std::vector<std::size_t>> preds(n);
  for (std::size_t s = 0; s < n; ++s)
    for (StateId t : aut.row(static_cast<StateId>(s)))
      if (t != kDead) preds[static_cast<std::size_t>(t)].push_back(s);

  std::vector<Integer> current(n, 0), next(n, 0);
  current[static_cast<std::size_t>(aut.root())] = 1;
  std::vector<Integer> counts;
  counts.reserve(K);
  const auto count = static_cast<long long>(n);
  for (std::size_t k = 1; k <= K; ++k) {
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < count; ++t) {
      Integer sum = 0;
      for (auto s : preds[static_cast<std::size_t>(t)]) sum += current[s];
      next[static_cast<std::size_t>(t)] = std::move(sum);
    }
    Integer total = 0;
    for (const auto& c : next) total += c;
    counts.push_back(total);
    std::swap(current, next);
  }
  return counts;
}

}  // namespace

std::vector<Integer> count_words(const UfnAutomaton& aut, std::size_t K, Execution execution) {
  return execution == Execution::Parallel ? count_words_parallel(aut, K) : count_words_serial(aut, K);
}

std::vector<Integer> growth_function(const std::vector<Integer>& counts) {
  std::vector<Integer> v{1};
  for (const auto& c : counts) v.push_back(v.back() + c);
  return v;
}

namespace {

struct Components {
  std::vector<std::size_t> of;  // component id per state
  std::size_t count = 0;        // ids are in reverse topological order
};

// Iterative Tarjan over the live transition graph.
Components strongly_connected(const UfnAutomaton& aut) {
  const std::size_t n = aut.state_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  Components comp{std::vector<std::size_t>(n, unset), 0};
  std::vector<std::size_t> order(n, unset), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (order[start] != unset) continue;
    std::vector<Frame> frames{{start, 0}};
    order[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      auto& f = frames.back();
      auto row = aut.row(static_cast<StateId>(f.v));
      if (f.edge < row.size()) {
        const StateId t = row[f.edge++];
        if (t == kDead) continue;
        const auto w = static_cast<std::size_t>(t);
        if (order[w] == unset) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], order[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == order[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.of[w] = comp.count;
        } while (w != v);
        ++comp.count;
      }
    }
  }
  return comp;
}

// Number of transitions from q that stay inside q's component.
std::size_t internal_out_degree(const UfnAutomaton& aut, const Components& comp, std::size_t q) {
  std::size_t d = 0;
  for (StateId t : aut.row(static_cast<StateId>(q)))
    if (t != kDead && comp.of[static_cast<std::size_t>(t)] == comp.of[q]) ++d;
  return d;
}

// Breadth-first search over simple paths inside q's component; cycles come
// out in shortlex order of their words.
std::optional<std::pair<Word, Word>> two_simple_cycles(const UfnAutomaton& aut, const Components& comp, StateId q,
                                                       std::size_t budget) {
  struct Path {
    StateId at;
    Word word;
    std::vector<bool> visited;
  };
  const std::size_t n = aut.state_count();
  std::deque<Path> queue;
  {
    Path start{q, Word{}, std::vector<bool>(n, false)};
    start.visited[static_cast<std::size_t>(q)] = true;
    queue.push_back(std::move(start));
  }
  std::optional<Word> first;
  Word first_root;
  std::size_t expanded = 0;
  while (!queue.empty() && expanded++ < budget) {
    Path p = std::move(queue.front());
    queue.pop_front();
    auto row = aut.row(p.at);
    for (std::size_t x = 0; x < row.size(); ++x) {
      const StateId t = row[x];
      if (t == kDead) continue;
      const auto ti = static_cast<std::size_t>(t);
      if (comp.of[ti] != comp.of[static_cast<std::size_t>(q)]) continue;
      Word w = p.word;
      w.push_back(static_cast<Letter>(x));
      if (t == q) {
        Word root = primitive_root(w).root;
        if (!first) {
          first = w;
          first_root = std::move(root);
        } else if (root != first_root) {
          return std::make_pair(*first, w);
        }
        continue;
      }
      if (p.visited[ti]) continue;
      Path next{t, std::move(w), p.visited};
      next.visited[ti] = true;
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

constexpr std::size_t kCycleSearchBudget = 1'000'000;

}  // namespace

std::optional<CyclePair> search_cycle_pair(const UfnAutomaton& aut) {
  const auto comp = strongly_connected(aut);
  std::vector<bool> branching(comp.count, false);
  for (std::size_t q = 0; q < aut.state_count(); ++q)
    if (internal_out_degree(aut, comp, q) >= 2) branching[comp.of[q]] = true;
  for (std::size_t q = 0; q < aut.state_count(); ++q) {
    if (!branching[comp.of[q]]) continue;
    if (auto cycles = two_simple_cycles(aut, comp, static_cast<StateId>(q), kCycleSearchBudget))
      return CyclePair{static_cast<StateId>(q), std::move(cycles->first), std::move(cycles->second)};
  }
  return std::nullopt;
}

GrowthKind classify_growth(const UfnAutomaton& aut) {
  const auto comp = strongly_connected(aut);
  const std::size_t n = aut.state_count();
  bool exponential = false;
  std::vector<bool> cyclic(comp.count, false);
  for (std::size_t q = 0; q < n; ++q) {
    const auto d = internal_out_degree(aut, comp, q);
    if (d >= 2) exponential = true;
    if (d >= 1) cyclic[comp.of[q]] = true;
  }

  GrowthKind kind;
  if (exponential) {
    kind.exponential = true;
    kind.witness = search_cycle_pair(aut);
    if (!kind.witness) throw std::logic_error("classify_growth: branching component without a cycle pair");
    auto r1 = primitive_root(kind.witness->first).root;
    auto r2 = primitive_root(kind.witness->second).root;
    if (r1 == r2) throw std::logic_error("classify_growth: witness cycles share a primitive root");
    return kind;
  }

  // Longest chain of cyclic components in the condensation. Tarjan numbers
  // components in reverse topological order, so successors have smaller ids.
  std::vector<std::vector<std::size_t>> members(comp.count);
  for (std::size_t q = 0; q < n; ++q) members[comp.of[q]].push_back(q);
  std::vector<std::size_t> best(comp.count, 0);
  for (std::size_t c = 0; c < comp.count; ++c) {
    std::size_t below = 0;
    for (auto q : members[c])
      for (StateId t : aut.row(static_cast<StateId>(q)))
        if (t != kDead && comp.of[static_cast<std::size_t>(t)] != c)
          below = std::max(below, best[comp.of[static_cast<std::size_t>(t)]]);
    best[c] = below + (cyclic[c] ? 1 : 0);
  }
  kind.degree = best[comp.of[static_cast<std::size_t>(aut.root())]];
  return kind;
}

}  // namespace freelie
