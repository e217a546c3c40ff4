// ars.hpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Generic abstract-rewriting core. A relation is presented as a
// finite-successor enumerator over a state type S, which makes reflexive-
// transitive closure, joinability and the diamond/commutation conditions
// checkable on finite fragments. Bounded searches that find nothing are
// reported as "no witness within the bound", never as refutations.
//
// S must be copyable, equality-comparable and ordered by a deterministic
// canonical order (operator<).

namespace rewritekit::ars {

inline constexpr std::size_t kDefaultNodeCap = 10000;
inline constexpr std::size_t kDefaultDepthBound = 12;

/// One-step reduction presented as a successor enumerator. The enumerator
/// must be pure and must return a sorted, duplicate-free vector.
template <typename S>
struct Rel {
  std::string label;
  std::function<std::vector<S>(const S&)> successors;
};

/// Pointwise union of two relations over the same state type.
template <typename S>
Rel<S> union_rel(const Rel<S>& r, const Rel<S>& s) {
  Rel<S> u;
  u.label = r.label + " | " + s.label;
  u.successors = [rs = r.successors, ss = s.successors](const S& x) {
    std::vector<S> a = rs(x);
    std::vector<S> b = ss(x);
    std::vector<S> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return u;
}

/// Explored fragment of a relation's reachability graph. `complete` is true
/// iff breadth-first exploration exhausted every reachable state before the
/// node cap was hit; edge sources and targets always lie within `nodes`.
template <typename S>
struct ReductionGraph {
  S root;
  std::set<S> nodes;
  std::map<S, std::vector<S>> edges;  // source -> sorted targets
  bool complete = false;

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& [src, targets] : edges) n += targets.size();
    return n;
  }

  bool has_edge(const S& a, const S& b) const {
    auto it = edges.find(a);
    if (it == edges.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), b);
  }

  const std::vector<S>& successors_of(const S& a) const {
    static const std::vector<S> empty;
    auto it = edges.find(a);
    return it == edges.end() ? empty : it->second;
  }
};

/// Breadth-first presentation of the states reachable from `a`, storing at
/// most `node_cap` states. Hitting the cap is signaled via complete=false,
/// not an error.
template <typename S>
ReductionGraph<S> star_reachable(const Rel<S>& rel, const S& a, std::size_t node_cap) {
  if (node_cap < 1) throw std::invalid_argument("star_reachable: node_cap must be >= 1");
  ReductionGraph<S> g{a, {}, {}, true};
  g.nodes.insert(a);
  std::deque<S> queue{a};
  while (!queue.empty()) {
    S n = std::move(queue.front());
    queue.pop_front();
    for (const S& t : rel.successors(n)) {
      bool stored = g.nodes.count(t) != 0;
      if (!stored) {
        if (g.nodes.size() < node_cap) {
          g.nodes.insert(t);
          queue.push_back(t);
          stored = true;
        } else {
          g.complete = false;
        }
      }
      if (stored) g.edges[n].push_back(t);
    }
  }
  return g;
}

namespace detail {

template <typename S>
struct ReachInfo {
  std::size_t depth;
  std::optional<S> parent;
};

// BFS to a fixed step bound, recording depth and parent for path rebuilding.
template <typename S>
std::map<S, ReachInfo<S>> bounded_reach(const Rel<S>& rel, const S& start,
                                        std::size_t depth_bound) {
  std::map<S, ReachInfo<S>> seen;
  seen.emplace(start, ReachInfo<S>{0, std::nullopt});
  std::deque<S> frontier{start};
  while (!frontier.empty()) {
    S n = std::move(frontier.front());
    frontier.pop_front();
    std::size_t depth = seen.at(n).depth;
    if (depth == depth_bound) continue;
    for (const S& t : rel.successors(n)) {
      if (seen.count(t)) continue;
      seen.emplace(t, ReachInfo<S>{depth + 1, n});
      frontier.push_back(t);
    }
  }
  return seen;
}

template <typename S>
std::vector<S> rebuild_path(const std::map<S, ReachInfo<S>>& reach, const S& meet) {
  std::vector<S> path;
  S cur = meet;
  while (true) {
    const auto& info = reach.at(cur);
    if (!info.parent) break;
    path.push_back(cur);
    cur = *info.parent;
  }
  std::reverse(path.begin(), path.end());
  return path;  // states after the start, ending at meet; empty if start == meet
}

}  // namespace detail

/// Evidence that two states join: a common reduct plus the two step
/// sequences (excluding the start states) leading to it.
template <typename S>
struct JoinWitness {
  S meet;
  std::vector<S> left_path;
  std::vector<S> right_path;
};

/// Searches for a common reduct of b and c, exploring each side to
/// `depth_bound` steps. The meet minimizes combined path length, ties broken
/// by canonical order. Empty result means "none within the bound" only.
template <typename S>
std::optional<JoinWitness<S>> joinable(const Rel<S>& rel, const S& b, const S& c,
                                       std::size_t depth_bound) {
  auto rb = detail::bounded_reach(rel, b, depth_bound);
  auto rc = detail::bounded_reach(rel, c, depth_bound);
  const S* best = nullptr;
  std::size_t best_len = 0;
  for (const auto& [state, info] : rb) {
    auto it = rc.find(state);
    if (it == rc.end()) continue;
    std::size_t len = info.depth + it->second.depth;
    if (best == nullptr || len < best_len) {
      best = &state;
      best_len = len;
    }
  }
  if (best == nullptr) return std::nullopt;
  return JoinWitness<S>{*best, detail::rebuild_path(rb, *best),
                        detail::rebuild_path(rc, *best)};
}

/// A single-step divergence b <- a -> c.
template <typename S>
struct Peak {
  S source;
  S left;
  S right;
};

template <typename S>
struct PeakReport {
  std::size_t sources = 0;
  std::size_t peaks_checked = 0;
  std::vector<Peak<S>> failures;  // peaks with no witness within the bound
  bool ok() const { return failures.empty(); }
};

/// Checks the diamond / local-confluence condition over a finite corpus:
/// every single-step divergence from a corpus element must join within
/// `depth_bound` steps per side.
template <typename S>
PeakReport<S> check_diamond(const Rel<S>& rel, const std::vector<S>& corpus,
                            std::size_t depth_bound) {
  PeakReport<S> report;
  report.sources = corpus.size();
  for (const S& a : corpus) {
    std::vector<S> succ = rel.successors(a);
    for (std::size_t i = 0; i < succ.size(); ++i) {
      for (std::size_t j = i + 1; j < succ.size(); ++j) {
        ++report.peaks_checked;
        if (!joinable(rel, succ[i], succ[j], depth_bound))
          report.failures.push_back({a, succ[i], succ[j]});
      }
    }
  }
  return report;
}

/// Checks that r and s commute over the corpus: for every a ->r b and
/// a ->s c there must be a d with b ->s* d and c ->r* d within the bound.
template <typename S>
PeakReport<S> commute_check(const Rel<S>& r, const Rel<S>& s,
                            const std::vector<S>& corpus, std::size_t depth_bound) {
  PeakReport<S> report;
  report.sources = corpus.size();
  for (const S& a : corpus) {
    std::vector<S> bs = r.successors(a);
    std::vector<S> cs = s.successors(a);
    for (const S& b : bs) {
      auto reach_b = detail::bounded_reach(s, b, depth_bound);
      for (const S& c : cs) {
        ++report.peaks_checked;
        auto reach_c = detail::bounded_reach(r, c, depth_bound);
        bool joined = false;
        for (const auto& [state, info] : reach_b) {
          (void)info;
          if (reach_c.count(state)) {
            joined = true;
            break;
          }
        }
        if (!joined) report.failures.push_back({a, b, c});
      }
    }
  }
  return report;
}

enum class Tribool : std::uint8_t { False, True, Unknown };

inline const char* to_string(Tribool t) {
  switch (t) {
    case Tribool::False: return "false";
    case Tribool::True: return "true";
    case Tribool::Unknown: return "unknown";
  }
  return "unknown";
}

/// Cycle detection and extraction over graph adjacency (iterative DFS).
/// Returns a cycle as [x0, .., xk] with edges x0->..->xk->x0, or empty.
template <typename S>
std::vector<S> find_cycle(const ReductionGraph<S>& g) {
  enum class Color : unsigned char { White, Grey, Black };
  std::map<S, Color> color;
  for (const S& n : g.nodes) color[n] = Color::White;

  struct Frame {
    S node;
    std::size_t next_child = 0;
  };
  for (const S& start : g.nodes) {
    if (color[start] != Color::White) continue;
    std::vector<Frame> stack;
    stack.push_back({start, 0});
    color[start] = Color::Grey;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const std::vector<S>& succ = g.successors_of(top.node);
      if (top.next_child >= succ.size()) {
        color[top.node] = Color::Black;
        stack.pop_back();
        continue;
      }
      const S& child = succ[top.next_child++];
      auto it = color.find(child);
      if (it == color.end()) continue;  // edge out of the stored node set
      if (it->second == Color::Grey) {
        std::vector<S> cycle;
        std::size_t at = stack.size();
        while (at > 0 && !(stack[at - 1].node == child)) --at;
        for (std::size_t i = at > 0 ? at - 1 : 0; i < stack.size(); ++i)
          cycle.push_back(stack[i].node);
        return cycle;
      }
      if (it->second == Color::White) {
        it->second = Color::Grey;
        stack.push_back({child, 0});
      }
    }
  }
  return {};
}

/// Restriction of a graph to its own stored edges, as a relation. Inside a
/// complete graph this agrees with the original relation on every node.
template <typename S>
Rel<S> graph_rel(const ReductionGraph<S>& g, std::string label) {
  auto edges = g.edges;
  return Rel<S>{std::move(label), [edges = std::move(edges)](const S& x) {
                  auto it = edges.find(x);
                  return it == edges.end() ? std::vector<S>{} : it->second;
                }};
}

/// Newman-style verdict for the region reachable from one start state.
template <typename S>
struct NewmanVerdict {
  ReductionGraph<S> graph;
  Tribool terminating = Tribool::Unknown;
  bool locally_confluent = false;
  bool unique_nf = false;
  std::set<S> normal_forms;
  bool exploration_complete = false;  // false: fields describe the explored region only
};

/// Explores from `a`, then checks the Newman ingredients on the explored
/// graph: acyclicity (termination at desk scale), local confluence with
/// joins searched inside the graph, and uniqueness of normal forms.
template <typename S>
NewmanVerdict<S> newman_verify(const Rel<S>& rel, const S& a, std::size_t node_cap) {
  NewmanVerdict<S> verdict{star_reachable(rel, a, node_cap),
                           Tribool::Unknown,
                           false,
                           false,
                           {},
                           false};
  const auto& g = verdict.graph;
  verdict.exploration_complete = g.complete;

  if (g.complete)
    verdict.terminating = find_cycle(g).empty() ? Tribool::True : Tribool::False;
  else
    verdict.terminating = Tribool::Unknown;

  Rel<S> inside = graph_rel(g, rel.label + " (explored)");
  std::vector<S> corpus(g.nodes.begin(), g.nodes.end());
  verdict.locally_confluent =
      check_diamond(inside, corpus, g.nodes.size() + 1).ok();

  for (const S& n : g.nodes)
    if (g.successors_of(n).empty()) verdict.normal_forms.insert(n);
  verdict.unique_nf = verdict.normal_forms.size() <= 1;
  return verdict;
}

/// One line per failing peak, preceded by a count header.
template <typename S, typename Printer>
std::string to_text(const PeakReport<S>& report, Printer print) {
  std::ostringstream out;
  out << "sources=" << report.sources << " peaks=" << report.peaks_checked
      << " failures=" << report.failures.size() << "\n";
  for (const Peak<S>& p : report.failures)
    out << print(p.source) << " | " << print(p.left) << " | " << print(p.right)
        << " | unjoined\n";
  return out.str();
}

}  // namespace rewritekit::ars
