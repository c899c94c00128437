#pragma once

// Presentation complexes: faces as length-3 cyclic words of signed edge
// labels (1-based; negative = against the edge direction). Vertices are
// either explicit (one init/term vertex per edge) or inferred by merging
// endpoint slots along face corners. Links are recovered per CW vertex with
// edge-end slots as link vertices and face corners as link edges.

#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wcx/wired.hpp"

namespace wcx {

struct EdgeEnds {
  int init_v = -1;
  int term_v = -1;
  bool operator==(const EdgeEnds&) const = default;
};

struct PresentationComplex {
  int edge_count = 0;
  std::vector<std::array<int, 3>> faces;          // signed labels, never 0
  std::optional<std::vector<EdgeEnds>> vertices;  // indexed by label-1
};

// basic well-formedness: labels nonzero and in range, every label used
inline void validate_presentation(const PresentationComplex& p) {
  std::vector<char> seen(p.edge_count, 0);
  for (const auto& f : p.faces)
    for (int s : f) {
      if (s == 0 || std::abs(s) > p.edge_count)
        throw std::invalid_argument("presentation: label out of range");
      seen[std::abs(s) - 1] = 1;
    }
  for (char c : seen)
    if (!c) throw std::invalid_argument("presentation: unused edge label");
  if (p.vertices && static_cast<int>(p.vertices->size()) != p.edge_count)
    throw std::invalid_argument("presentation: endpoint list size mismatch");
}

// endpoint slots: edge l has slot 2(l-1) for its initial end and 2(l-1)+1 for
// its terminal end; a side +l starts at the initial slot and finishes at the
// terminal one, -l the other way around
inline int start_slot(int side) {
  int l = std::abs(side);
  return 2 * (l - 1) + (side < 0 ? 1 : 0);
}
inline int finish_slot(int side) {
  int l = std::abs(side);
  return 2 * (l - 1) + (side < 0 ? 0 : 1);
}

struct VertexAssignment {
  int vertex_count = 0;
  std::vector<int> slot_vertex;     // per slot, CW vertex id
  std::vector<EdgeEnds> endpoints;  // per label, derived view of slot_vertex
};

// disjoint-set merge of finish(s) with start(t) over consecutive sides;
// classes numbered by least contained slot
inline VertexAssignment infer_vertices(const PresentationComplex& p) {
  validate_presentation(p);
  int slots = 2 * p.edge_count;
  std::vector<int> parent(slots);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : p.faces)
    for (int i = 0; i < 3; ++i) {
      int a = find(finish_slot(f[i])), b = find(start_slot(f[(i + 1) % 3]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);  // root = least slot
    }
  VertexAssignment va;
  va.slot_vertex.assign(slots, -1);
  int next_id = 0;
  for (int s = 0; s < slots; ++s) {
    int r = find(s);
    if (va.slot_vertex[r] == -1) va.slot_vertex[r] = next_id++;
    va.slot_vertex[s] = va.slot_vertex[r];
  }
  va.vertex_count = next_id;
  va.endpoints.resize(p.edge_count);
  for (int l = 1; l <= p.edge_count; ++l)
    va.endpoints[l - 1] = {va.slot_vertex[2 * (l - 1)], va.slot_vertex[2 * (l - 1) + 1]};
  return va;
}

// explicit endpoints when present, inferred otherwise
inline VertexAssignment vertex_assignment_of(const PresentationComplex& p) {
  if (!p.vertices) return infer_vertices(p);
  validate_presentation(p);
  VertexAssignment va;
  va.endpoints = *p.vertices;
  va.slot_vertex.assign(2 * p.edge_count, -1);
  int maxv = -1;
  for (int l = 1; l <= p.edge_count; ++l) {
    const EdgeEnds& e = va.endpoints[l - 1];
    if (e.init_v < 0 || e.term_v < 0)
      throw std::invalid_argument("presentation: negative vertex id");
    va.slot_vertex[2 * (l - 1)] = e.init_v;
    va.slot_vertex[2 * (l - 1) + 1] = e.term_v;
    maxv = std::max({maxv, e.init_v, e.term_v});
  }
  va.vertex_count = maxv + 1;
  return va;
}

struct VertexLink {
  std::vector<int> slots;  // ascending global slot ids; link vertex i = slots[i]
  Graph graph;
  bool ok = false;
  std::string issue;
};

struct LinkComputation {
  VertexAssignment assignment;
  std::vector<VertexLink> links;  // one per CW vertex
  bool all_ok = false;
};

// link edges are face corners: {finish slot of side, start slot of next side};
// a corner joining a slot to itself marks the complex malformed, a repeated
// corner pair fails the simple-graph requirement
inline LinkComputation links_of(const PresentationComplex& p) {
  LinkComputation lc;
  lc.assignment = vertex_assignment_of(p);
  int nv = lc.assignment.vertex_count;
  lc.links.resize(nv);
  std::vector<int> local(lc.assignment.slot_vertex.size());
  for (int s = 0; s < static_cast<int>(lc.assignment.slot_vertex.size()); ++s) {
    VertexLink& vl = lc.links[lc.assignment.slot_vertex[s]];
    local[s] = static_cast<int>(vl.slots.size());
    vl.slots.push_back(s);
  }
  std::vector<std::vector<std::pair<int, int>>> edges(nv);
  bool corners_ok = true;
  for (const auto& f : p.faces)
    for (int i = 0; i < 3; ++i) {
      int u = finish_slot(f[i]), v = start_slot(f[(i + 1) % 3]);
      int vu = lc.assignment.slot_vertex[u], vv = lc.assignment.slot_vertex[v];
      if (vu != vv) {  // only possible with explicit vertices
        lc.links[vu].issue = lc.links[vv].issue = "consecutive sides meet different vertices";
        corners_ok = false;
        continue;
      }
      if (u == v) {
        lc.links[vu].issue = "corner loop";
        corners_ok = false;
        continue;
      }
      edges[vu].emplace_back(std::min(local[u], local[v]), std::max(local[u], local[v]));
    }
  lc.all_ok = corners_ok;
  for (int v = 0; v < nv; ++v) {
    VertexLink& vl = lc.links[v];
    if (!vl.issue.empty()) continue;
    std::sort(edges[v].begin(), edges[v].end());
    if (std::adjacent_find(edges[v].begin(), edges[v].end()) != edges[v].end()) {
      vl.issue = "duplicate corner edge";
      lc.all_ok = false;
      continue;
    }
    vl.graph = make_graph(static_cast<int>(vl.slots.size()), edges[v]);
    vl.ok = true;
  }
  return lc;
}

struct VerifyResult {
  std::vector<int> match;                  // per CW vertex: target index or -1
  std::vector<std::string> issue;          // per CW vertex, empty when clean
  std::vector<std::size_t> count_by_target;
  bool pass = false;
};

inline VerifyResult verify_links(const PresentationComplex& p,
                                 const std::vector<Graph>& targets) {
  LinkComputation lc = links_of(p);
  VerifyResult r;
  r.match.assign(lc.links.size(), -1);
  r.issue.assign(lc.links.size(), "");
  r.count_by_target.assign(targets.size(), 0);
  r.pass = true;
  for (std::size_t v = 0; v < lc.links.size(); ++v) {
    if (!lc.links[v].ok) {
      r.issue[v] = lc.links[v].issue;
      r.pass = false;
      continue;
    }
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (graphs_isomorphic(lc.links[v].graph, targets[t])) {
        r.match[v] = static_cast<int>(t);
        ++r.count_by_target[t];
        break;
      }
    if (r.match[v] == -1) {
      r.issue[v] = "link matches no target";
      r.pass = false;
    }
  }
  return r;
}

// first-occurrence labeling: scanning faces in input order and sides in order
// w1,w2,w3, a wire class gets the next unused positive label when first seen,
// and that occurrence's direction becomes the positive one
struct WiredConversion {
  PresentationComplex pres;       // no explicit vertices: the word list alone
  std::vector<Wire> class_dir;    // per label-1, the chosen positive direction
};

inline WiredConversion wired_to_presentation_full(const PartialWiredComplex& w) {
  if (!w.is_complete())
    throw std::logic_error("wired_to_presentation: complex is not complete");
  WiredConversion out;
  std::map<std::pair<int, int>, int> label;  // sorted class pair -> label
  for (const WiredFace& f : w.faces) {
    std::array<int, 3> word{};
    for (int i = 0; i < 3; ++i) {
      const Wire& wire = f.w[i];
      std::pair<int, int> cls{std::min(wire.a, wire.b), std::max(wire.a, wire.b)};
      auto it = label.find(cls);
      if (it == label.end()) {
        it = label.emplace(cls, static_cast<int>(out.class_dir.size()) + 1).first;
        out.class_dir.push_back(wire);
      }
      word[i] = out.class_dir[it->second - 1] == wire ? it->second : -it->second;
    }
    out.pres.faces.push_back(word);
  }
  out.pres.edge_count = static_cast<int>(out.class_dir.size());
  return out;
}

inline PresentationComplex wired_to_presentation(const PartialWiredComplex& w) {
  return wired_to_presentation_full(w).pres;
}

// "every face word can be made all-positive": choose a direction flip per
// edge label and a reading per face (forward or reflected); side with sign
// bit s in face f under flip d is positive iff r_f xor d_l = s. A parity
// union-find decides the xor system.
inline bool positively_orientable(const PresentationComplex& p) {
  validate_presentation(p);
  int f = static_cast<int>(p.faces.size());
  int n = f + p.edge_count;  // face nodes then label nodes
  std::vector<int> parent(n), parity(n, 0);  // parity relative to parent
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    int root = x, par = 0;
    while (parent[root] != root) {
      par ^= parity[root];
      root = parent[root];
    }
    while (parent[x] != root) {  // path compression, keeping parities correct
      int nxt = parent[x], npar = parity[x];
      parent[x] = root;
      parity[x] = par;
      par ^= npar;
      x = nxt;
    }
    return root;
  };
  auto parity_to_root = [&](int x) {
    int par = 0;
    while (parent[x] != x) {
      par ^= parity[x];
      x = parent[x];
    }
    return par;
  };
  for (int fi = 0; fi < f; ++fi)
    for (int side : p.faces[fi]) {
      int s = side < 0 ? 1 : 0;
      int a = fi, b = f + std::abs(side) - 1;
      int ra = find(a), rb = find(b);
      int pa = parity_to_root(a), pb = parity_to_root(b);
      if (ra == rb) {
        if ((pa ^ pb) != s) return false;  // contradictory cycle
      } else {
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ s;
      }
    }
  return true;
}

inline bool positively_orientable(const PartialWiredComplex& w) {
  return positively_orientable(wired_to_presentation(w));
}

struct TypedTriangle {
  std::array<int, 3> edges{};  // 1-based labels; edge i joins verts[i], verts[i+1]
  std::array<int, 3> verts{};  // 0-based CW vertex ids
};

// lossy figure format: edge directions are fixed from the lower-numbered
// endpoint to the higher; loops are unrepresentable and rejected
inline PresentationComplex typed_triangles_to_presentation(
    const std::vector<TypedTriangle>& tris) {
  int max_label = 0, max_vertex = -1;
  for (const auto& t : tris)
    for (int i = 0; i < 3; ++i) {
      if (t.edges[i] < 1) throw std::invalid_argument("typed triangles: labels are 1-based");
      if (t.verts[i] < 0) throw std::invalid_argument("typed triangles: negative vertex id");
      max_label = std::max(max_label, t.edges[i]);
      max_vertex = std::max(max_vertex, t.verts[i]);
    }
  std::vector<EdgeEnds> ends(max_label, EdgeEnds{});
  PresentationComplex p;
  p.edge_count = max_label;
  for (const auto& t : tris) {
    std::array<int, 3> word{};
    for (int i = 0; i < 3; ++i) {
      int u = t.verts[i], v = t.verts[(i + 1) % 3], l = t.edges[i];
      if (u == v)
        throw std::invalid_argument("typed triangles: edge " + std::to_string(l) +
                                    " would be a loop");
      EdgeEnds want{std::min(u, v), std::max(u, v)};
      EdgeEnds& have = ends[l - 1];
      if (have.init_v == -1)
        have = want;
      else if (!(have == want))
        throw std::invalid_argument("typed triangles: edge " + std::to_string(l) +
                                    " has inconsistent endpoints");
      word[i] = u < v ? l : -l;
    }
    p.faces.push_back(word);
  }
  for (int l = 1; l <= max_label; ++l)
    if (ends[l - 1].init_v == -1)
      throw std::invalid_argument("typed triangles: label " + std::to_string(l) +
                                  " never used");
  std::vector<char> vseen(max_vertex + 1, 0);
  for (const auto& t : tris)
    for (int v : t.verts) vseen[v] = 1;
  for (char c : vseen)
    if (!c) throw std::invalid_argument("typed triangles: vertex ids are not contiguous");
  p.vertices = std::move(ends);
  return p;
}

}  // namespace wcx
