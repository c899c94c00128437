#pragma once

// A link arrangement is the ordered list of prescribed vertex links, one per
// CW vertex, glued into a single global vertex numbering: link i's vertices
// occupy the block [offsets[i], offsets[i+1]). Link edges likewise get dense
// global ids, ordered by (link index, sorted local pair).

#include <utility>
#include <vector>

#include "wcx/graph.hpp"

namespace wcx {

struct LinkArrangement {
  std::vector<Graph> links;
  std::vector<int> offsets;    // size links+1, offsets[0] = 0
  std::vector<int> edge_base;  // size links+1, prefix sums of edge counts
  std::vector<int> link_of;    // global vertex id -> link index
  int total = 0;               // global vertex count
  int total_edges = 0;

  int link_index(int global_v) const { return link_of[global_v]; }
  int local(int global_v) const { return global_v - offsets[link_of[global_v]]; }
  int global(int link, int local_v) const { return offsets[link] + local_v; }

  bool same_link(int u, int v) const { return link_of[u] == link_of[v]; }

  // dense id of the link edge {u,v} (global ids), or -1 if u,v do not form
  // an edge inside a single link
  int edge_id(int u, int v) const {
    if (link_of[u] != link_of[v]) return -1;
    int li = link_of[u];
    int a = u - offsets[li], b = v - offsets[li];
    if (a > b) std::swap(a, b);
    const auto& es = links[li].edges;
    auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(a, b));
    if (it == es.end() || *it != std::make_pair(a, b)) return -1;
    return edge_base[li] + static_cast<int>(it - es.begin());
  }

  // inverse of edge_id: global endpoints of a dense edge id, lower link-local first
  std::pair<int, int> edge_vertices(int eid) const {
    int li = 0;
    while (edge_base[li + 1] <= eid) ++li;
    auto [a, b] = links[li].edges[eid - edge_base[li]];
    return {offsets[li] + a, offsets[li] + b};
  }

  bool operator==(const LinkArrangement&) const = default;
};

inline LinkArrangement make_arrangement(std::vector<Graph> links) {
  LinkArrangement arr;
  arr.links = std::move(links);
  arr.offsets.resize(arr.links.size() + 1, 0);
  arr.edge_base.resize(arr.links.size() + 1, 0);
  for (size_t i = 0; i < arr.links.size(); ++i) {
    arr.offsets[i + 1] = arr.offsets[i] + arr.links[i].n;
    arr.edge_base[i + 1] = arr.edge_base[i] + static_cast<int>(arr.links[i].edges.size());
  }
  arr.total = arr.offsets.back();
  arr.total_edges = arr.edge_base.back();
  arr.link_of.resize(arr.total);
  for (size_t i = 0; i < arr.links.size(); ++i)
    for (int v = arr.offsets[i]; v < arr.offsets[i + 1]; ++v) arr.link_of[v] = static_cast<int>(i);
  return arr;
}

}  // namespace wcx
