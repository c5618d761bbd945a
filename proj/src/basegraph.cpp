#include "helgason/basegraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "helgason/reflections.hpp"

namespace helgason {

using Key = std::vector<Weight>;

std::optional<std::size_t> BaseGraph::find(const Base& base) const {
  const Key key = base.canonical();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].canonical() == key) return i;
  return std::nullopt;
}

bool BaseGraph::connected() const {
  if (nodes.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(nodes.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        queue.push_back(v);
      }
  }
  return count == nodes.size();
}

std::vector<std::vector<std::size_t>> BaseGraph::singular_classes() const {
  // union-find over singular edges
  std::vector<std::size_t> parent(nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges)
    if (e.root_class == RootClass::Singular) {
      const std::size_t a = root(e.from), b = root(e.to);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < nodes.size(); ++i) groups[root(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [_, members] : groups) out.push_back(std::move(members));
  return out;
}

BaseGraph enumerate_bases(const RestrictedRootSystem& system, const Base& seed, bool singular_only) {
  BaseGraph g;
  std::map<Key, std::size_t> index;
  g.nodes.push_back(seed);
  index.emplace(seed.canonical(), 0);
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    const Base current = g.nodes[u];
    for (const auto& alpha : current.simples()) {
      const RootClass cls = classify_root(alpha, system);
      if (singular_only && cls != RootClass::Singular) continue;
      Base next = reflect_base(alpha, current, system);
      auto [it, inserted] = index.emplace(next.canonical(), g.nodes.size());
      if (inserted) g.nodes.push_back(std::move(next));
      g.edges.push_back({u, it->second, alpha, cls});
    }
  }
  return g;
}

std::vector<ClassMember> equivalence_class(const Base& base, const RestrictedRootSystem& system) {
  std::vector<ClassMember> members{{base, {}}};
  std::map<Key, std::size_t> index{{base.canonical(), 0}};
  for (std::size_t u = 0; u < members.size(); ++u) {
    const ClassMember current = members[u];
    for (const auto& alpha : current.base.simples()) {
      if (classify_root(alpha, system) != RootClass::Singular) continue;
      Base next = reflect_base(alpha, current.base, system);
      if (index.emplace(next.canonical(), members.size()).second) {
        auto path = current.path;
        path.push_back(alpha);
        members.push_back({std::move(next), std::move(path)});
      }
    }
  }
  return members;
}

std::optional<Weight> exposed_simple(const Base& base, const Weight& gamma) {
  if (base.contains(gamma)) return gamma;
  const Weight half = Scalar(1, 2) * gamma;
  if (base.contains(half)) return half;
  return std::nullopt;
}

Exposure find_base_exposing(const std::vector<ClassMember>& members, const Weight& gamma) {
  for (const auto& m : members)
    if (auto e = exposed_simple(m.base, gamma)) return {m.base, m.path, *e};
  throw Error(ErrorKind::NotFound, "no base in the class exposes " + gamma.to_string());
}

Exposure find_base_exposing(const Base& base, const Weight& gamma, const RestrictedRootSystem& system) {
  return find_base_exposing(equivalence_class(base, system), gamma);
}

std::vector<Exposure> all_minimal_exposing_paths(const Base& base, const Weight& gamma,
                                                 const RestrictedRootSystem& system, std::size_t cap) {
  if (auto e = exposed_simple(base, gamma)) return {{base, {}, *e}};

  // Layered BFS keeping every shortest-path predecessor.
  struct Node {
    Base base;
    std::size_t depth;
    std::vector<std::pair<std::size_t, Weight>> preds;
  };
  std::vector<Node> nodes{{base, 0, {}}};
  std::map<Key, std::size_t> index{{base.canonical(), 0}};
  std::vector<std::size_t> targets;
  std::size_t frontier_begin = 0;
  while (frontier_begin < nodes.size() && targets.empty()) {
    const std::size_t frontier_end = nodes.size();
    for (std::size_t u = frontier_begin; u < frontier_end; ++u) {
      const Base current = nodes[u].base;
      for (const auto& alpha : current.simples()) {
        if (classify_root(alpha, system) != RootClass::Singular) continue;
        Base next = reflect_base(alpha, current, system);
        auto [it, inserted] = index.emplace(next.canonical(), nodes.size());
        if (inserted) {
          nodes.push_back({std::move(next), nodes[u].depth + 1, {}});
          if (exposed_simple(nodes.back().base, gamma)) targets.push_back(it->second);
        }
        Node& target = nodes[it->second];
        if (target.depth == nodes[u].depth + 1) target.preds.emplace_back(u, alpha);
      }
    }
    frontier_begin = frontier_end;
  }
  if (targets.empty()) throw Error(ErrorKind::NotFound, "no base in the class exposes " + gamma.to_string());

  std::vector<std::vector<Weight>> paths;
  // Walk predecessors back to the seed.
  std::vector<Weight> reversed;
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (paths.size() >= cap * 4) return;
    if (v == 0) {
      paths.emplace_back(reversed.rbegin(), reversed.rend());
      return;
    }
    for (const auto& [u, alpha] : nodes[v].preds) {
      reversed.push_back(alpha);
      self(self, u);
      reversed.pop_back();
    }
  };
  for (std::size_t t : targets) walk(walk, t);
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  if (paths.size() > cap) paths.resize(cap);

  std::vector<Exposure> out;
  for (auto& path : paths) {
    Base b = base;
    for (const auto& alpha : path) b = reflect_base(alpha, b, system);
    const Weight exposed = *exposed_simple(b, gamma);
    out.push_back({std::move(b), std::move(path), exposed});
  }
  return out;
}

}  // namespace helgason
