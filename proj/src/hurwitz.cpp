#include "palf/hurwitz.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "palf/error.hpp"

namespace palf {

std::string HurwitzMove::to_string() const {
  return (direction == Direction::Right ? "R" : "L") + std::to_string(index);
}

Palf apply_move(const Palf& p, const HurwitzMove& m) {
  if (m.index + 1 >= p.cycles.size())
    throw Error("Hurwitz move at index " + std::to_string(m.index) + " needs at least " +
                std::to_string(m.index + 2) + " cycles, factorization has " +
                std::to_string(p.cycles.size()));
  Palf out = p;
  const Curve& a = p.cycles[m.index];
  const Curve& b = p.cycles[m.index + 1];
  if (disjoint_by_construction(a, b)) {
    std::swap(out.cycles[m.index], out.cycles[m.index + 1]);
    return out;
  }
  if (m.direction == HurwitzMove::Direction::Right) {
    out.cycles[m.index] = b;
    out.cycles[m.index + 1] = act_on_curve(twist_word(b), a);
  } else {
    out.cycles[m.index] = act_on_curve(twist_word(a, -1), b);
    out.cycles[m.index + 1] = a;
  }
  return out;
}

namespace {

std::string state_key(const std::vector<Curve>& cycles) {
  std::string key;
  for (const Curve& c : cycles) {
    for (Letter l : c.pi1_class().letters()) {
      key += std::to_string(l);
      key += ',';
    }
    key += '|';
  }
  return key;
}

std::vector<Generator> signed_convex_twists(const Surface& s) {
  std::vector<Generator> gens;
  for (int lo = 1; lo <= s.holes(); ++lo)
    for (int hi = lo; hi <= s.holes(); ++hi)
      for (int sign : {+1, -1}) gens.push_back(Generator::twist(lo, hi, sign));
  return gens;
}

// Key of every accepted target, mapped to the conjugator producing it.
std::unordered_map<std::string, std::vector<Generator>> build_targets(const Palf& q,
                                                                      const SearchOptions& opt) {
  std::unordered_map<std::string, std::vector<Generator>> targets;
  targets.emplace(state_key(q.cycles), std::vector<Generator>{});
  if (!opt.conjugation) return targets;

  const auto gens = signed_convex_twists(q.fiber);
  std::vector<std::vector<Generator>> layer{{}};
  for (int len = 1; len <= opt.conjugator_length; ++len) {
    std::vector<std::vector<Generator>> next;
    for (const auto& prefix : layer)
      for (const Generator& g : gens) {
        auto word = prefix;
        word.push_back(g);
        const MappingWord f(q.fiber, word);
        std::vector<Curve> image;
        image.reserve(q.cycles.size());
        for (const Curve& c : q.cycles) image.push_back(act_on_curve(f, c));
        targets.emplace(state_key(image), word);
        next.push_back(std::move(word));
      }
    layer = std::move(next);
  }
  return targets;
}

struct Node {
  Palf palf;
  std::size_t parent;
  HurwitzMove move;
  int depth;
};

}  // namespace

SearchResult equivalent_within(const Palf& p, const Palf& q, const SearchOptions& options) {
  if (!(p.fiber == q.fiber)) throw SurfaceMismatch();
  SearchResult result;
  if (p.cycles.size() != q.cycles.size() || options.depth < 0) return result;

  const auto targets = build_targets(q, options);
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

  std::vector<Node> nodes;
  nodes.push_back({p, kRoot, {}, 0});
  std::unordered_set<std::string> visited;

  // Children are tested as they are generated. Parents leave the queue in
  // lexicographic order of their move sequences, so the first hit is the
  // least witness of minimal length.
  auto reached = [&](std::size_t id, const std::string& key) {
    const auto hit = targets.find(key);
    if (hit == targets.end()) return false;
    result.found = true;
    result.conjugator = hit->second;
    for (std::size_t at = id; nodes[at].parent != kRoot; at = nodes[at].parent)
      result.moves.insert(result.moves.begin(), nodes[at].move);
    return true;
  };

  const std::string root_key = state_key(p.cycles);
  visited.insert(root_key);
  result.states_explored = 1;
  if (reached(0, root_key)) return result;

  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t id = frontier.front();
    frontier.pop_front();
    if (nodes[id].depth >= options.depth) continue;

    const std::size_t n = nodes[id].palf.cycles.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (auto dir : {HurwitzMove::Direction::Right, HurwitzMove::Direction::Left}) {
        const HurwitzMove move{i, dir};
        Palf next = apply_move(nodes[id].palf, move);
        std::string key = state_key(next.cycles);
        if (!visited.insert(key).second) continue;
        ++result.states_explored;
        const int depth = nodes[id].depth + 1;
        if (depth == options.depth && !targets.contains(key)) continue;
        nodes.push_back({std::move(next), id, move, depth});
        if (reached(nodes.size() - 1, key)) return result;
        frontier.push_back(nodes.size() - 1);
      }
  }
  return result;
}

}  // namespace palf
