#pragma once

// Wired complexes. A wire (a,b) is one triangle side read as "leaves the link
// at vertex a, arrives in the (possibly different) link at vertex b". A wired
// face is three wires; its corners
//
//   {b1,a2}, {b2,a3}, {b3,a1}
//
// must be link edges, and a complete complex covers every link edge exactly
// once. Two wires can coexist in one complex iff they are equal, inverse, or
// touch no common link vertex.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "wcx/arrangement.hpp"

namespace wcx {

struct Wire {
  int a = 0;
  int b = 0;
  auto operator<=>(const Wire&) const = default;
};

struct WiredFace {
  std::array<Wire, 3> w{};
  auto operator<=>(const WiredFace&) const = default;
};

inline bool wires_compatible(const Wire& u, const Wire& v) {
  if (u == v) return true;
  if (u.a == v.b && u.b == v.a) return true;
  return u.a != v.a && u.a != v.b && u.b != v.a && u.b != v.b;
}

// corner i sits between side i and side i+1; returned with endpoints sorted
inline std::array<std::pair<int, int>, 3> corners(const WiredFace& f) {
  std::array<std::pair<int, int>, 3> c;
  for (int i = 0; i < 3; ++i) {
    int u = f.w[i].b, v = f.w[(i + 1) % 3].a;
    c[i] = {std::min(u, v), std::max(u, v)};
  }
  return c;
}

inline WiredFace rotate(const WiredFace& f) { return {{f.w[1], f.w[2], f.w[0]}}; }

inline WiredFace reflect(const WiredFace& f) {
  return {{Wire{f.w[2].b, f.w[2].a}, Wire{f.w[1].b, f.w[1].a}, Wire{f.w[0].b, f.w[0].a}}};
}

// least 6-tuple among the 3 rotations of f and the 3 rotations of its
// reflection; the corner multiset is the same for all 6
inline WiredFace normalize_face(const WiredFace& f) {
  WiredFace best = f, cur = f;
  for (int i = 0; i < 3; ++i) {
    if (cur < best) best = cur;
    cur = rotate(cur);
  }
  cur = reflect(f);
  for (int i = 0; i < 3; ++i) {
    if (cur < best) best = cur;
    cur = rotate(cur);
  }
  return best;
}

// structural checks: wires are in range with a != b, all three corners are
// link edges and pairwise distinct, wires pairwise compatible
inline bool well_formed(const LinkArrangement& arr, const WiredFace& f) {
  for (const Wire& w : f.w) {
    if (w.a < 0 || w.a >= arr.total || w.b < 0 || w.b >= arr.total) return false;
    if (w.a == w.b) return false;
  }
  std::array<int, 3> eid;
  for (int i = 0; i < 3; ++i) {
    eid[i] = arr.edge_id(f.w[i].b, f.w[(i + 1) % 3].a);
    if (eid[i] < 0) return false;
  }
  if (eid[0] == eid[1] || eid[1] == eid[2] || eid[0] == eid[2]) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!wires_compatible(f.w[i], f.w[j])) return false;
  return true;
}

// Arrangement plus a growing face list; add/remove maintain the coverage map
// (per link edge: which face corner covers it) and the wire-class registry
// (per global vertex: its partner, plus the class occurrence count kept at
// the smaller endpoint). remove_last_face exactly undoes add_face.
//
// Holds a non-owning pointer to the arrangement: the LinkArrangement passed
// to the constructor must outlive the complex. In particular, never build
// one from a temporary document (`build_complex(load_wired(f))` is fine only
// as part of a larger full expression that does not keep the result).
struct PartialWiredComplex {
  const LinkArrangement* arr = nullptr;
  std::vector<WiredFace> faces;
  std::vector<int> cover_face;         // per edge id, face index or -1
  std::vector<std::int8_t> cover_corner;  // per edge id, corner 0..2 or -1
  std::vector<int> wire_other;         // per global vertex, partner or -1
  std::vector<int> class_count;        // per global vertex, occurrences at min endpoint
  int covered_edges = 0;

  explicit PartialWiredComplex(const LinkArrangement& a)
      : arr(&a),
        cover_face(a.total_edges, -1),
        cover_corner(a.total_edges, -1),
        wire_other(a.total, -1),
        class_count(a.total, 0) {}

  bool is_complete() const { return covered_edges == arr->total_edges; }

  bool wire_fits_registry(const Wire& w) const {
    if (wire_other[w.a] == -1 && wire_other[w.b] == -1) return true;
    return wire_other[w.a] == w.b && wire_other[w.b] == w.a;
  }

  bool face_compatible(const WiredFace& f) const {
    std::array<int, 3> eid;
    for (int i = 0; i < 3; ++i) {
      eid[i] = arr->edge_id(f.w[i].b, f.w[(i + 1) % 3].a);
      if (eid[i] < 0 || cover_face[eid[i]] != -1) return false;
    }
    if (eid[0] == eid[1] || eid[1] == eid[2] || eid[0] == eid[2]) return false;
    for (int i = 0; i < 3; ++i) {
      if (f.w[i].a == f.w[i].b) return false;
      if (!wire_fits_registry(f.w[i])) return false;
      for (int j = i + 1; j < 3; ++j)
        if (!wires_compatible(f.w[i], f.w[j])) return false;
    }
    return true;
  }

  void add_face(const WiredFace& f) {
    if (!face_compatible(f))
      throw std::logic_error("add_face: face is not compatible with the complex");
    int fi = static_cast<int>(faces.size());
    for (int i = 0; i < 3; ++i) {
      int eid = arr->edge_id(f.w[i].b, f.w[(i + 1) % 3].a);
      cover_face[eid] = fi;
      cover_corner[eid] = static_cast<std::int8_t>(i);
      ++covered_edges;
      const Wire& w = f.w[i];
      wire_other[w.a] = w.b;
      wire_other[w.b] = w.a;
      ++class_count[std::min(w.a, w.b)];
    }
    faces.push_back(f);
  }

  void remove_last_face() {
    if (faces.empty()) throw std::logic_error("remove_last_face: no faces");
    WiredFace f = faces.back();
    faces.pop_back();
    for (int i = 0; i < 3; ++i) {
      int eid = arr->edge_id(f.w[i].b, f.w[(i + 1) % 3].a);
      cover_face[eid] = -1;
      cover_corner[eid] = -1;
      --covered_edges;
      const Wire& w = f.w[i];
      if (--class_count[std::min(w.a, w.b)] == 0) {
        wire_other[w.a] = -1;
        wire_other[w.b] = -1;
      }
    }
  }

  // least uncovered dense edge id, or -1 when complete; dense ids are already
  // ordered by (link index, sorted local pair)
  int least_uncovered_edge() const {
    for (int e = 0; e < arr->total_edges; ++e)
      if (cover_face[e] == -1) return e;
    return -1;
  }

  std::vector<WiredFace> normalized_face_set() const {
    std::vector<WiredFace> out;
    out.reserve(faces.size());
    for (const WiredFace& f : faces) out.push_back(normalize_face(f));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const PartialWiredComplex& o) const {
    return *arr == *o.arr && faces == o.faces && cover_face == o.cover_face &&
           cover_corner == o.cover_corner && wire_other == o.wire_other &&
           class_count == o.class_count && covered_edges == o.covered_edges;
  }
};

}  // namespace wcx
