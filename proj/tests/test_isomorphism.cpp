#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "wcx/enumerate.hpp"
#include "wcx/isomorphism.hpp"

using namespace wcx;

namespace {

PartialWiredComplex build(const LinkArrangement& arr, const std::vector<WiredFace>& faces) {
  PartialWiredComplex p(arr);
  for (const WiredFace& f : faces) p.add_face(f);
  return p;
}

PartialWiredComplex relabeled(const PartialWiredComplex& p, const Permutation& phi) {
  PartialWiredComplex q(*p.arr);
  for (const WiredFace& f : p.faces) q.add_face(map_face(f, phi));
  return q;
}

oracle::FaceSet tuple_set(const std::vector<WiredFace>& faces) {
  oracle::FaceSet out;
  for (const WiredFace& f : faces) out.insert(oracle::face_tuple(normalize_face(f)));
  return out;
}

}  // namespace

TEST_CASE("map_face_set composes and normalizes") {
  auto doc = testutil::load_fixture_wired("v01.wired");
  auto group = automorphisms(doc.arr.links[0]);
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  for (int t = 0; t < 20; ++t) {
    const Permutation& phi = group[pick(rng)];
    const Permutation& psi = group[pick(rng)];
    auto once = map_face_set(map_face_set(doc.faces, phi), psi);
    auto both = map_face_set(doc.faces, compose(psi, phi));
    CHECK(once == both);
  }
  auto id = map_face_set(doc.faces, identity_permutation(16));
  CHECK(id == build(doc.arr, doc.faces).normalized_face_set());
}

TEST_CASE("group spec for a single mk16 link") {
  auto doc = testutil::load_fixture_wired("v01.wired");
  auto spec = IsoGroupSpec::build(doc.arr);
  CHECK(spec.members.size() == 1);
  CHECK(spec.order == 96);  // one link: 1! * |Aut(mk16)|
  // every group element is an edge-preserving global permutation
  std::size_t elements = 0;
  detail::for_each_group_element(spec, [&](const std::vector<int>& sigma,
                                           const std::vector<int>& ai) {
    Permutation phi = spec.global_map(sigma, ai);
    for (auto [u, v] : doc.arr.links[0].edges)
      CHECK(doc.arr.edge_id(phi[u], phi[v]) != -1);
    ++elements;
    return false;
  });
  CHECK(elements == 96);
}

TEST_CASE("canonical key is constant on an isomorphism orbit") {
  auto doc = testutil::load_fixture_wired("v01.wired");
  auto spec = IsoGroupSpec::build(doc.arr);
  auto p = build(doc.arr, doc.faces);
  auto key = canonical_key(p, spec);
  REQUIRE(key.has_value());
  CHECK(key->size() == 8 * 12);  // 12 bytes per face

  auto group = automorphisms(doc.arr.links[0]);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  for (int t = 0; t < 12; ++t) {
    auto q = relabeled(p, group[pick(rng)]);
    CHECK(canonical_key(q, spec) == key);
  }

  // face insertion order is immaterial
  auto shuffled = doc.faces;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(canonical_key(build(doc.arr, shuffled), spec) == key);

  // incomplete complexes have no key
  PartialWiredComplex partial(doc.arr);
  partial.add_face(doc.faces[0]);
  CHECK_THROWS_AS(canonical_key(partial, spec), std::logic_error);
}

TEST_CASE("the 27 bundled complexes have 27 distinct keys") {
  auto first = testutil::load_fixture_wired("v01.wired");
  auto spec = IsoGroupSpec::build(first.arr);
  std::set<std::string> keys;
  for (int i = 1; i <= 27; ++i) {
    auto doc = testutil::load_fixture_wired("v" + testutil::two_digit(i) + ".wired");
    auto key = canonical_key(build(doc.arr, doc.faces), spec);
    REQUIRE(key.has_value());
    keys.insert(to_hex(*key));
  }
  CHECK(keys.size() == 27);
}

TEST_CASE("complexes_isomorphic agrees with the canonical keys") {
  auto doc1 = testutil::load_fixture_wired("v01.wired");
  auto doc2 = testutil::load_fixture_wired("v02.wired");
  auto p1 = build(doc1.arr, doc1.faces);
  auto p2 = build(doc2.arr, doc2.faces);

  // positive: an automorphism relabeling is recognized, with a valid witness
  auto group = automorphisms(doc1.arr.links[0]);
  for (std::size_t g = 0; g < group.size(); g += 17) {
    auto q = relabeled(p1, group[g]);
    auto w = complexes_isomorphic(p1, q);
    REQUIRE(w.has_value());
    CHECK(map_face_set(p1.faces, *w) == q.normalized_face_set());
  }

  // negative: distinct classes, and both engines say so
  CHECK(!complexes_isomorphic(p1, p2));
  auto spec = IsoGroupSpec::build(doc1.arr);
  CHECK(canonical_key(p1, spec) != canonical_key(p2, spec));

  // a few more sample pairs
  for (int i : {3, 9, 14, 20, 27}) {
    auto di = testutil::load_fixture_wired("v" + testutil::two_digit(i) + ".wired");
    auto pi = build(di.arr, di.faces);
    CHECK(!complexes_isomorphic(p1, pi));
    CHECK(complexes_isomorphic(pi, pi).has_value());
  }

  // complexes of different sizes are rejected outright
  auto hexagons = make_arrangement({builtin_graph("cycle:6")});
  SearchConfig cfg;
  cfg.dedup = false;
  auto res = enumerate_complexes(hexagons, cfg);
  auto small = build(hexagons, res.complexes.front().faces);
  CHECK(!complexes_isomorphic(p1, small));

  // incomplete input is a contract violation
  PartialWiredComplex partial(doc1.arr);
  CHECK_THROWS_AS(complexes_isomorphic(partial, p1), std::logic_error);
}

TEST_CASE("complexes_isomorphic matches the dihedral oracle on hexagon complexes") {
  auto arr = make_arrangement({builtin_graph("cycle:6")});
  SearchConfig cfg;
  cfg.dedup = false;
  auto res = enumerate_complexes(arr, cfg);
  REQUIRE(res.complexes.size() == 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      auto pi = build(arr, res.complexes[i].faces);
      auto pj = build(arr, res.complexes[j].faces);
      bool mine = complexes_isomorphic(pi, pj).has_value();
      bool want = oracle::cycle_isomorphic(tuple_set(res.complexes[i].faces),
                                           tuple_set(res.complexes[j].faces), 6);
      INFO("pair " << i << "," << j);
      CHECK(mine == want);
    }
}

TEST_CASE("class registry dedups by key and by pairwise fallback alike") {
  auto doc = testutil::load_fixture_wired("v01.wired");
  auto doc2 = testutil::load_fixture_wired("v02.wired");
  auto spec = IsoGroupSpec::build(doc.arr);
  ClassRegistry reg(spec, 1000000);
  CHECK(reg.use_keys);

  auto p = build(doc.arr, doc.faces);
  auto group = automorphisms(doc.arr.links[0]);
  CHECK(reg.add(p) == 0);
  CHECK(reg.add(relabeled(p, group[5])) == 0);
  CHECK(reg.add(relabeled(p, group[50])) == 0);
  CHECK(reg.add(build(doc2.arr, doc2.faces)) == 1);
  CHECK(reg.reps.size() == 2);
  CHECK(reg.multiplicity == std::vector<std::uint64_t>{3, 1});

  // two hexagon links: group order 2 * 12 * 12 = 288; a bound of 100 forces
  // the pairwise engine, which must produce the same classes as the keys
  auto pair = make_arrangement({builtin_graph("cycle:6"), builtin_graph("cycle:6")});
  auto pair_spec = IsoGroupSpec::build(pair);
  CHECK(pair_spec.order == 288);

  SearchConfig raw_cfg;
  raw_cfg.dedup = false;
  auto raw = enumerate_complexes(pair, raw_cfg);
  REQUIRE(raw.complexes.size() == 301);

  // beyond the bound there is no key, only the pairwise engine
  CHECK(!canonical_key(build(pair, raw.complexes.front().faces), pair_spec, 100)
             .has_value());

  ClassRegistry keyed(pair_spec, 1000000);
  ClassRegistry pairwise(pair_spec, 100);
  CHECK(keyed.use_keys);
  CHECK(!pairwise.use_keys);
  for (const auto& rec : raw.complexes) {
    auto c = build(pair, rec.faces);
    keyed.add(c);
    pairwise.add(c);
  }
  CHECK(keyed.reps.size() == pairwise.reps.size());

  // and both agree with the brute-force relabeling oracle
  std::vector<oracle::FaceSet> sets;
  for (const auto& rec : raw.complexes) sets.push_back(tuple_set(rec.faces));
  CHECK(keyed.reps.size() == oracle::cycle_pair_class_count(sets, 6));

  std::vector<std::uint64_t> km = keyed.multiplicity, pm = pairwise.multiplicity;
  std::sort(km.begin(), km.end());
  std::sort(pm.begin(), pm.end());
  CHECK(km == pm);
}
