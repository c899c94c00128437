#pragma once

// Exhaustive enumeration of complete wired complexes. Exact-cover style: each
// node picks the least uncovered link edge and branches only over compatible
// candidate faces covering that edge, so every complete face set is reached
// exactly once. Candidate lists shrink monotonically along the recursion.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "wcx/isomorphism.hpp"
#include "wcx/wired.hpp"

namespace wcx {

struct FacePattern {
  std::array<int, 3> corner_links{};  // corner i must lie in this link
};

struct SearchConfig {
  std::vector<WiredFace> seed_faces;
  std::optional<std::vector<FacePattern>> patterns;  // nullopt = all triples
  std::optional<std::uint64_t> max_solutions;
  bool dedup = true;
  int jobs = 1;
  int split_depth = 3;  // tree levels expanded breadth-first before parallel DFS
  std::uint64_t group_bound = 1000000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t faces_generated = 0;
  std::uint64_t solutions = 0;
  std::uint64_t classes = 0;
  bool truncated = false;
  std::int64_t wall_ms = 0;
};

struct SolutionRecord {
  std::vector<WiredFace> faces;         // in discovery order
  std::uint64_t multiplicity = 1;       // raw solutions in this class (dedup on)
};

struct EnumerationResult {
  std::vector<SolutionRecord> complexes;
  SearchStats stats;
};

// All normalized well-formed faces whose corners land in the pattern's links
// (any rotation/reflection matches implicitly via normalization). Sorted,
// duplicate free. Choosing a directed edge (u_i, v_i) for corner i pins the
// whole face: w1 = (v3, u1), w2 = (v1, u2), w3 = (v2, u3).
inline std::vector<WiredFace> generate_potential_faces(
    const LinkArrangement& arr,
    const std::optional<std::vector<FacePattern>>& patterns = std::nullopt) {
  int k = static_cast<int>(arr.links.size());
  std::vector<FacePattern> pats;
  if (patterns) {
    pats = *patterns;
    for (const auto& p : pats)
      for (int li : p.corner_links)
        if (li < 0 || li >= k)
          throw std::invalid_argument("generate_potential_faces: pattern link out of range");
  } else {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c) pats.push_back({{a, b, c}});
  }

  std::vector<std::vector<std::pair<int, int>>> dir(k);  // directed link edges, global ids
  for (int li = 0; li < k; ++li)
    for (auto [a, b] : arr.links[li].edges) {
      dir[li].emplace_back(arr.global(li, a), arr.global(li, b));
      dir[li].emplace_back(arr.global(li, b), arr.global(li, a));
    }

  std::vector<WiredFace> out;
  for (const auto& pat : pats) {
    for (auto [u1, v1] : dir[pat.corner_links[0]])
      for (auto [u2, v2] : dir[pat.corner_links[1]])
        for (auto [u3, v3] : dir[pat.corner_links[2]]) {
          WiredFace f{{Wire{v3, u1}, Wire{v1, u2}, Wire{v2, u3}}};
          if (well_formed(arr, f)) out.push_back(normalize_face(f));
        }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

struct Candidate {
  WiredFace face;
  std::array<int, 3> eids;  // dense ids of the three corners
};

inline std::vector<Candidate> make_candidates(const LinkArrangement& arr,
                                              const std::vector<WiredFace>& faces) {
  std::vector<Candidate> cs;
  cs.reserve(faces.size());
  for (const auto& f : faces) {
    Candidate c{f, {}};
    for (int i = 0; i < 3; ++i) c.eids[i] = arr.edge_id(f.w[i].b, f.w[(i + 1) % 3].a);
    cs.push_back(c);
  }
  return cs;
}

struct SearchShared {
  std::optional<std::uint64_t> cap;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> solutions{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> truncated{false};

  ClassRegistry* registry = nullptr;     // dedup on
  std::mutex raw_mu;                     // dedup off
  std::vector<SolutionRecord>* raw = nullptr;

  void found(const PartialWiredComplex& p) {
    std::uint64_t n = solutions.fetch_add(1) + 1;
    if (registry) {
      registry->add(p);
    } else {
      std::lock_guard<std::mutex> lock(raw_mu);
      raw->push_back({p.faces, 1});
    }
    if (cap && n >= *cap) {
      stop.store(true);
      truncated.store(true);
    }
  }
};

inline void search_dfs(PartialWiredComplex& p, const std::vector<Candidate>& cands,
                       SearchShared& sh) {
  if (sh.stop.load(std::memory_order_relaxed)) return;
  sh.nodes.fetch_add(1, std::memory_order_relaxed);
  if (p.is_complete()) {
    sh.found(p);
    return;
  }
  int e = p.least_uncovered_edge();
  std::vector<Candidate> next;
  for (const Candidate& c : cands) {
    if (c.eids[0] != e && c.eids[1] != e && c.eids[2] != e) continue;
    if (!p.face_compatible(c.face)) continue;
    p.add_face(c.face);
    next.clear();
    for (const Candidate& d : cands)
      if (p.face_compatible(d.face)) next.push_back(d);
    search_dfs(p, next, sh);
    p.remove_last_face();
    if (sh.stop.load(std::memory_order_relaxed)) return;
  }
}

struct Task {
  std::vector<WiredFace> faces;      // faces to replay on top of the seed
  std::vector<Candidate> cands;
};

}  // namespace detail

inline EnumerationResult enumerate_complexes(const LinkArrangement& arr,
                                             const SearchConfig& cfg = {}) {
  auto t0 = std::chrono::steady_clock::now();
  EnumerationResult res;

  auto potential = generate_potential_faces(arr, cfg.patterns);
  res.stats.faces_generated = potential.size();

  PartialWiredComplex seed(arr);
  for (const auto& f : cfg.seed_faces) {
    if (!well_formed(arr, f) || !seed.face_compatible(f))
      throw std::invalid_argument("enumerate: seed faces are not pairwise compatible");
    seed.add_face(f);
  }

  auto cands0 = detail::make_candidates(arr, potential);
  std::vector<detail::Candidate> cands;
  for (const auto& c : cands0)
    if (seed.face_compatible(c.face)) cands.push_back(c);

  IsoGroupSpec spec = IsoGroupSpec::build(arr, cfg.group_bound);
  ClassRegistry registry(spec, cfg.group_bound);

  detail::SearchShared sh;
  sh.cap = cfg.max_solutions;
  std::vector<SolutionRecord> raw;
  if (cfg.dedup)
    sh.registry = &registry;
  else
    sh.raw = &raw;

  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    detail::search_dfs(seed, cands, sh);
  } else {
    // expand the top of the tree breadth-first, then run subtrees in a pool
    std::vector<detail::Task> frontier{{seed.faces, cands}};
    // replaying a task's faces on a fresh complex restores its search state
    std::vector<detail::Task> leaves;
    for (int depth = 0; depth < cfg.split_depth; ++depth) {
      std::vector<detail::Task> nxt;
      for (auto& task : frontier) {
        PartialWiredComplex p(arr);
        for (const auto& f : task.faces) p.add_face(f);
        if (p.is_complete()) {
          leaves.push_back(task);
          continue;
        }
        int e = p.least_uncovered_edge();
        for (const auto& c : task.cands) {
          if (c.eids[0] != e && c.eids[1] != e && c.eids[2] != e) continue;
          if (!p.face_compatible(c.face)) continue;
          p.add_face(c.face);
          detail::Task child;
          child.faces = p.faces;
          for (const auto& d : task.cands)
            if (p.face_compatible(d.face)) child.cands.push_back(d);
          p.remove_last_face();
          nxt.push_back(std::move(child));
        }
        sh.nodes.fetch_add(1, std::memory_order_relaxed);
      }
      frontier = std::move(nxt);
      if (frontier.empty()) break;
    }
    for (auto& t : frontier) leaves.push_back(std::move(t));

    std::atomic<std::size_t> next_task{0};
    auto worker = [&] {
      while (!sh.stop.load()) {
        std::size_t i = next_task.fetch_add(1);
        if (i >= leaves.size()) break;
        PartialWiredComplex p(arr);
        for (const auto& f : leaves[i].faces) p.add_face(f);
        detail::search_dfs(p, leaves[i].cands, sh);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  res.stats.nodes = sh.nodes.load();
  res.stats.solutions = sh.solutions.load();
  res.stats.truncated = sh.truncated.load();
  if (cfg.dedup) {
    for (std::size_t c = 0; c < registry.reps.size(); ++c)
      res.complexes.push_back({registry.reps[c], registry.multiplicity[c]});
    res.stats.classes = registry.reps.size();
  } else {
    res.complexes = std::move(raw);
    res.stats.classes = 0;
  }
  auto t1 = std::chrono::steady_clock::now();
  res.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return res;
}

}  // namespace wcx
