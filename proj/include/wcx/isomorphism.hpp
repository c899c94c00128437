#pragma once

// Isomorphism of wired complexes. The symmetry group acting on global vertex
// labels is generated by (a) permutations of same-type links and (b) link
// automorphisms, each transported through a stored witness bijection from the
// type's representative link. Face rotation/reflection is NOT in the group;
// it is absorbed by normalize_face.
//
// Small groups (order <= bound) get a canonical key: the least byte encoding
// of the sorted normalized face list over all group elements. Larger groups
// fall back to pairwise testing via link-by-link backtracking.

#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wcx/wired.hpp"

namespace wcx {

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline Wire map_wire(const Wire& w, const Permutation& phi) {
  return {phi[w.a], phi[w.b]};
}

inline WiredFace map_face(const WiredFace& f, const Permutation& phi) {
  return {{map_wire(f.w[0], phi), map_wire(f.w[1], phi), map_wire(f.w[2], phi)}};
}

inline std::vector<WiredFace> map_face_set(const std::vector<WiredFace>& faces,
                                           const Permutation& phi) {
  std::vector<WiredFace> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(normalize_face(map_face(f, phi)));
  std::sort(out.begin(), out.end());
  return out;
}

struct IsoGroupSpec {
  const LinkArrangement* arr = nullptr;
  std::vector<int> type_of;                          // link -> type id
  std::vector<std::vector<int>> members;             // type -> ascending link list
  std::vector<int> rep_of_type;                      // type -> first member
  std::vector<std::vector<Permutation>> aut_of_type; // on the representative
  std::vector<Permutation> witness;                  // rep local -> link local
  std::vector<Permutation> witness_inv;
  std::uint64_t order = 1;                           // saturated product

  // order = prod over types |members|! * prod over links |Aut(rep)|
  static IsoGroupSpec build(const LinkArrangement& arr, std::size_t aut_bound = 1000000) {
    IsoGroupSpec s;
    s.arr = &arr;
    int k = static_cast<int>(arr.links.size());
    s.type_of.assign(k, -1);
    s.witness.resize(k);
    s.witness_inv.resize(k);
    for (int i = 0; i < k; ++i) {
      for (int t = 0; t < static_cast<int>(s.rep_of_type.size()); ++t) {
        auto w = graphs_isomorphic(arr.links[s.rep_of_type[t]], arr.links[i]);
        if (w) {
          s.type_of[i] = t;
          s.members[t].push_back(i);
          s.witness[i] = *w;
          break;
        }
      }
      if (s.type_of[i] == -1) {
        s.type_of[i] = static_cast<int>(s.rep_of_type.size());
        s.rep_of_type.push_back(i);
        s.members.push_back({i});
        s.witness[i] = identity_permutation(arr.links[i].n);
        s.aut_of_type.push_back(automorphisms(arr.links[i], aut_bound));
      }
      s.witness_inv[i] = inverse(s.witness[i]);
    }
    for (const auto& m : s.members) {
      std::uint64_t fact = 1;
      for (std::uint64_t r = 2; r <= m.size(); ++r) fact = sat_mul(fact, r);
      s.order = sat_mul(s.order, fact);
    }
    for (int i = 0; i < k; ++i)
      s.order = sat_mul(s.order, s.aut_of_type[s.type_of[i]].size());
    return s;
  }

  // global relabeling for: sigma maps link i to sigma_link[i] (type-preserving),
  // link i additionally twisted by aut index ai[i] of its type's representative
  Permutation global_map(const std::vector<int>& sigma_link,
                         const std::vector<int>& ai) const {
    Permutation phi(arr->total);
    for (int i = 0; i < static_cast<int>(arr->links.size()); ++i) {
      int j = sigma_link[i];
      const Permutation& a = aut_of_type[type_of[i]][ai[i]];
      for (int x = 0; x < arr->links[i].n; ++x)
        phi[arr->offsets[i] + x] = arr->offsets[j] + witness[j][a[witness_inv[i][x]]];
    }
    return phi;
  }
};

namespace detail {

// run fn over every group element's (sigma_link, aut indices); fn returning
// true stops the walk early
template <class Fn>
bool for_each_group_element(const IsoGroupSpec& s, Fn&& fn) {
  int k = static_cast<int>(s.arr->links.size());
  int ntypes = static_cast<int>(s.members.size());
  std::vector<std::vector<int>> perm(ntypes);
  for (int t = 0; t < ntypes; ++t) perm[t] = s.members[t];
  std::vector<int> sigma(k), ai(k, 0);
  auto rebuild_sigma = [&] {
    for (int t = 0; t < ntypes; ++t)
      for (std::size_t r = 0; r < perm[t].size(); ++r) sigma[s.members[t][r]] = perm[t][r];
  };
  while (true) {
    rebuild_sigma();
    while (true) {
      if (fn(sigma, ai)) return true;
      int i = k - 1;  // odometer over per-link aut indices
      while (i >= 0) {
        if (++ai[i] < static_cast<int>(s.aut_of_type[s.type_of[i]].size())) break;
        ai[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
    int t = ntypes - 1;  // odometer over per-type link permutations
    while (t >= 0 && !std::next_permutation(perm[t].begin(), perm[t].end())) --t;
    if (t < 0) return false;
    for (int u = t + 1; u < ntypes; ++u) perm[u] = s.members[u];
  }
}

}  // namespace detail

// 12 bytes per face: the 6 coordinates as big-endian uint16
inline std::vector<std::uint8_t> encode_face_set(const std::vector<WiredFace>& faces) {
  std::vector<std::uint8_t> out;
  out.reserve(faces.size() * 12);
  for (const auto& f : faces)
    for (const auto& w : f.w)
      for (int v : {w.a, w.b}) {
        out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v & 0xff));
      }
  return out;
}

// least encoding of the sorted normalized relabeled face list over the whole
// group; nullopt when the group order exceeds the bound
inline std::optional<std::vector<std::uint8_t>> canonical_key(
    const PartialWiredComplex& p, const IsoGroupSpec& spec,
    std::uint64_t group_bound = 1000000) {
  if (!p.is_complete())
    throw std::logic_error("canonical_key: complex is not complete");
  if (spec.order > group_bound) return std::nullopt;
  std::optional<std::vector<std::uint8_t>> best;
  detail::for_each_group_element(spec, [&](const std::vector<int>& sigma,
                                           const std::vector<int>& ai) {
    Permutation phi = spec.global_map(sigma, ai);
    auto enc = encode_face_set(map_face_set(p.faces, phi));
    if (!best || enc < *best) best = std::move(enc);
    return false;
  });
  return best;
}

inline std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

namespace detail {

struct IsoSearch {
  const LinkArrangement* arrA;
  const LinkArrangement* arrB;
  std::vector<const Graph*> rep_graph;            // per type
  std::vector<std::vector<Permutation>> aut;      // per type, on rep
  std::vector<int> typeA, typeB;                  // per link
  std::vector<Permutation> wA, wAinv, wB;         // witnesses rep -> link
  std::vector<std::vector<WiredFace>> facesA_by_last;  // grouped by max support link
  std::vector<WiredFace> targetB;                 // sorted normalized face set
  std::vector<char> usedB;
  Permutation phi;

  bool in_target(const WiredFace& f) const {
    return std::binary_search(targetB.begin(), targetB.end(), f);
  }

  bool assign(int i) {
    int k = static_cast<int>(arrA->links.size());
    if (i == k) return true;
    for (int j = 0; j < k; ++j) {
      if (usedB[j] || typeB[j] != typeA[i]) continue;
      for (const Permutation& a : aut[typeA[i]]) {
        for (int x = 0; x < arrA->links[i].n; ++x)
          phi[arrA->offsets[i] + x] = arrB->offsets[j] + wB[j][a[wAinv[i][x]]];
        bool ok = true;
        for (const WiredFace& f : facesA_by_last[i])
          if (!in_target(normalize_face(map_face(f, phi)))) {
            ok = false;
            break;
          }
        if (ok) {
          usedB[j] = 1;
          if (assign(i + 1)) return true;
          usedB[j] = 0;
        }
      }
    }
    for (int x = arrA->offsets[i]; x < arrA->offsets[i + 1]; ++x) phi[x] = -1;
    return false;
  }
};

}  // namespace detail

// Witness global vertex bijection carrying A's normalized face set onto B's,
// or nullopt. Exact: backtracking over (target link, automorphism) choices per
// link with face-set pruning after each fully assigned link.
inline std::optional<Permutation> complexes_isomorphic(
    const PartialWiredComplex& A, const PartialWiredComplex& B,
    std::size_t aut_bound = 1000000) {
  if (!A.is_complete() || !B.is_complete())
    throw std::logic_error("complexes_isomorphic: both complexes must be complete");
  const LinkArrangement& arrA = *A.arr;
  const LinkArrangement& arrB = *B.arr;
  int k = static_cast<int>(arrA.links.size());
  if (k != static_cast<int>(arrB.links.size()) || arrA.total != arrB.total ||
      arrA.total_edges != arrB.total_edges)
    return std::nullopt;

  detail::IsoSearch s;
  s.arrA = &arrA;
  s.arrB = &arrB;
  s.typeA.assign(k, -1);
  s.typeB.assign(k, -1);
  s.wA.resize(k);
  s.wAinv.resize(k);
  s.wB.resize(k);
  for (int i = 0; i < k; ++i) {
    for (int t = 0; t < static_cast<int>(s.rep_graph.size()); ++t) {
      auto w = graphs_isomorphic(*s.rep_graph[t], arrA.links[i]);
      if (w) {
        s.typeA[i] = t;
        s.wA[i] = *w;
        break;
      }
    }
    if (s.typeA[i] == -1) {
      s.typeA[i] = static_cast<int>(s.rep_graph.size());
      s.rep_graph.push_back(&arrA.links[i]);
      s.aut.push_back(automorphisms(arrA.links[i], aut_bound));
      s.wA[i] = identity_permutation(arrA.links[i].n);
    }
    s.wAinv[i] = inverse(s.wA[i]);
  }
  std::vector<int> count_by_typeA(s.rep_graph.size(), 0), count_by_typeB(s.rep_graph.size(), 0);
  for (int i = 0; i < k; ++i) ++count_by_typeA[s.typeA[i]];
  for (int j = 0; j < k; ++j) {
    for (int t = 0; t < static_cast<int>(s.rep_graph.size()); ++t) {
      auto w = graphs_isomorphic(*s.rep_graph[t], arrB.links[j]);
      if (w) {
        s.typeB[j] = t;
        s.wB[j] = *w;
        break;
      }
    }
    if (s.typeB[j] == -1) return std::nullopt;  // link type absent from A
    ++count_by_typeB[s.typeB[j]];
  }
  if (count_by_typeA != count_by_typeB) return std::nullopt;

  s.facesA_by_last.assign(k, {});
  for (const WiredFace& f : A.faces) {
    int last = 0;
    for (const Wire& w : f.w)
      last = std::max({last, arrA.link_of[w.a], arrA.link_of[w.b]});
    s.facesA_by_last[last].push_back(f);
  }
  s.targetB = B.normalized_face_set();
  s.usedB.assign(k, 0);
  s.phi.assign(arrA.total, -1);
  if (!s.assign(0)) return std::nullopt;

  // postcondition check: the witness really carries face set onto face set
  if (map_face_set(A.faces, s.phi) != s.targetB)
    throw std::logic_error("complexes_isomorphic: witness failed verification");
  return s.phi;
}

// Online isomorph rejection for the enumerator: canonical keys when the group
// is small, pairwise complexes_isomorphic otherwise. Thread safe.
struct ClassRegistry {
  const IsoGroupSpec* spec = nullptr;
  std::uint64_t group_bound = 1000000;
  bool use_keys = true;

  std::mutex mu;
  std::unordered_map<std::string, std::size_t> index_by_key;
  std::vector<std::vector<WiredFace>> reps;  // face lists, input order preserved
  std::vector<std::uint64_t> multiplicity;

  ClassRegistry(const IsoGroupSpec& s, std::uint64_t bound)
      : spec(&s), group_bound(bound), use_keys(s.order <= bound) {}

  // returns the class index; inserts a new class when unseen
  std::size_t add(const PartialWiredComplex& p) {
    if (use_keys) {
      auto key = canonical_key(p, *spec, group_bound);
      std::string hex = to_hex(*key);
      std::lock_guard<std::mutex> lock(mu);
      auto [it, fresh] = index_by_key.try_emplace(hex, reps.size());
      if (fresh) {
        reps.push_back(p.faces);
        multiplicity.push_back(0);
      }
      ++multiplicity[it->second];
      return it->second;
    }
    std::lock_guard<std::mutex> lock(mu);
    for (std::size_t c = 0; c < reps.size(); ++c) {
      PartialWiredComplex rep(*p.arr);
      for (const auto& f : reps[c]) rep.add_face(f);
      if (complexes_isomorphic(p, rep, group_bound)) {
        ++multiplicity[c];
        return c;
      }
    }
    reps.push_back(p.faces);
    multiplicity.push_back(1);
    return reps.size() - 1;
  }
};

}  // namespace wcx
