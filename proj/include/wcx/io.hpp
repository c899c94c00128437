#pragma once

// Text formats.
//
//   wired:        links <name-or-file> [...]        one face per line:
//                 (a1,b1)(a2,b2)(a3,b3)             global 0-based ids
//   presentation: edges <m>                          faces: three signed ints
//                 optional: vertex <label> <init> <term>
//   triangles:    tri <e1> <e2> <e3> <v1> <v2> <v3>  edge i joins v_i, v_i+1
//   graph:        graph <name> <n>                   then: edge <a> <b>
//
// '#' starts a comment anywhere on a line; blank lines are ignored. Format is
// sniffed from the first keyword. Fixture manifests pair each file with an
// FNV-1a checksum and an expected-properties record.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wcx/enumerate.hpp"
#include "wcx/presentation.hpp"
#include "wcx/wired.hpp"

namespace wcx {

inline std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream probe(raw);
    std::string tok;
    if (probe >> tok) lines.push_back(raw);
  }
  return lines;
}

inline std::string first_keyword(const std::vector<std::string>& lines) {
  if (lines.empty()) return "";
  std::istringstream in(lines.front());
  std::string tok;
  in >> tok;
  return tok;
}

// ---- graphs ----

inline bool is_builtin_graph_name(const std::string& name) {
  return name == "mk16" || name == "k33" || name == "gq22" || name.rfind("cycle:", 0) == 0;
}

inline Graph parse_graph_lines(const std::vector<std::string>& lines) {
  if (first_keyword(lines) != "graph")
    throw std::invalid_argument("graph file: expected leading 'graph <name> <n>' line");
  std::istringstream head(lines.front());
  std::string kw, name;
  int n = -1;
  head >> kw >> name >> n;
  if (n < 0) throw std::invalid_argument("graph file: bad vertex count");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    std::string ekw;
    int a, b;
    if (!(in >> ekw >> a >> b) || ekw != "edge")
      throw std::invalid_argument("graph file: bad edge line: " + lines[i]);
    edges.emplace_back(a, b);
  }
  return make_graph(n, std::move(edges));
}

// builtin name, or a graph file looked up relative to base_dir
inline Graph resolve_graph_spec(const std::string& spec,
                                const std::filesystem::path& base_dir) {
  if (is_builtin_graph_name(spec)) return builtin_graph(spec);
  std::filesystem::path p(spec);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  std::ifstream in(p);
  if (!in) throw std::invalid_argument("cannot open graph '" + spec + "'");
  return parse_graph_lines(content_lines(in));
}

// ---- wired complexes ----

struct WiredDocument {
  std::vector<std::string> link_specs;
  LinkArrangement arr;
  std::vector<WiredFace> faces;  // exactly as written in the file
};

inline WiredFace parse_face_text(const std::string& line) {
  std::array<int, 6> v{};
  std::size_t pos = 0;
  int idx = 0;
  auto skip_ws = [&] {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= line.size() || line[pos] != c)
      throw std::invalid_argument("wired file: bad face line: " + line);
    ++pos;
  };
  auto number = [&] {
    skip_ws();
    std::size_t used = 0;
    int val;
    try {
      val = std::stoi(line.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("wired file: bad face line: " + line);
    }
    pos += used;
    return val;
  };
  for (int w = 0; w < 3; ++w) {
    expect('(');
    v[idx++] = number();
    expect(',');
    v[idx++] = number();
    expect(')');
  }
  skip_ws();
  if (pos != line.size())
    throw std::invalid_argument("wired file: trailing text on face line: " + line);
  return {{Wire{v[0], v[1]}, Wire{v[2], v[3]}, Wire{v[4], v[5]}}};
}

inline WiredDocument parse_wired_lines(const std::vector<std::string>& lines,
                                       const std::filesystem::path& base_dir) {
  if (first_keyword(lines) != "links")
    throw std::invalid_argument("wired file: expected leading 'links ...' line");
  WiredDocument doc;
  std::istringstream head(lines.front());
  std::string tok;
  head >> tok;
  while (head >> tok) doc.link_specs.push_back(tok);
  if (doc.link_specs.empty())
    throw std::invalid_argument("wired file: no links given");
  std::vector<Graph> links;
  for (const auto& spec : doc.link_specs) links.push_back(resolve_graph_spec(spec, base_dir));
  doc.arr = make_arrangement(std::move(links));
  for (std::size_t i = 1; i < lines.size(); ++i) doc.faces.push_back(parse_face_text(lines[i]));
  return doc;
}

inline WiredDocument load_wired(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");
  return parse_wired_lines(content_lines(in), path.parent_path());
}

// faces validated incrementally: every prefix must stay pairwise compatible
inline PartialWiredComplex build_complex(const WiredDocument& doc) {
  PartialWiredComplex p(doc.arr);
  for (std::size_t i = 0; i < doc.faces.size(); ++i) {
    if (!well_formed(doc.arr, doc.faces[i]))
      throw std::invalid_argument("wired file: face " + std::to_string(i + 1) +
                                  " is not well formed");
    if (!p.face_compatible(doc.faces[i]))
      throw std::invalid_argument("wired file: face " + std::to_string(i + 1) +
                                  " is incompatible with the preceding faces");
    p.add_face(doc.faces[i]);
  }
  return p;
}

inline std::string format_face(const WiredFace& f) {
  std::string s;
  for (const Wire& w : f.w)
    s += "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
  return s;
}

inline void write_wired(std::ostream& out, const std::vector<std::string>& link_specs,
                        const std::vector<WiredFace>& faces) {
  out << "links";
  for (const auto& s : link_specs) out << ' ' << s;
  out << '\n';
  for (const auto& f : faces) out << format_face(f) << '\n';
}

// ---- presentation complexes ----

inline PresentationComplex parse_presentation_lines(const std::vector<std::string>& lines) {
  if (first_keyword(lines) != "edges")
    throw std::invalid_argument("presentation file: expected leading 'edges <m>' line");
  PresentationComplex p;
  {
    std::istringstream head(lines.front());
    std::string kw;
    head >> kw >> p.edge_count;
    if (p.edge_count <= 0)
      throw std::invalid_argument("presentation file: bad edge count");
  }
  std::vector<EdgeEnds> ends(p.edge_count, EdgeEnds{});
  bool any_vertex = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    std::istringstream peek(lines[i]);
    std::string lead;
    peek >> lead;
    if (lead == "vertex") {
      std::string kw;
      int l, a, b;
      if (!(in >> kw >> l >> a >> b) || l < 1 || l > p.edge_count || a < 0 || b < 0)
        throw std::invalid_argument("presentation file: bad vertex line: " + lines[i]);
      if (ends[l - 1].init_v != -1)
        throw std::invalid_argument("presentation file: duplicate vertex line for label " +
                                    std::to_string(l));
      ends[l - 1] = {a, b};
      any_vertex = true;
      continue;
    }
    std::array<int, 3> w{};
    if (!(in >> w[0] >> w[1] >> w[2]))
      throw std::invalid_argument("presentation file: bad face line: " + lines[i]);
    std::string extra;
    if (in >> extra)
      throw std::invalid_argument("presentation file: trailing text on face line: " + lines[i]);
    p.faces.push_back(w);
  }
  if (any_vertex) {
    for (int l = 1; l <= p.edge_count; ++l)
      if (ends[l - 1].init_v == -1)
        throw std::invalid_argument("presentation file: vertex lines must cover every label");
    p.vertices = std::move(ends);
  }
  validate_presentation(p);
  return p;
}

inline void write_presentation(std::ostream& out, const PresentationComplex& p) {
  out << "edges " << p.edge_count << '\n';
  for (const auto& f : p.faces) out << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  if (p.vertices)
    for (int l = 1; l <= p.edge_count; ++l)
      out << "vertex " << l << ' ' << (*p.vertices)[l - 1].init_v << ' '
          << (*p.vertices)[l - 1].term_v << '\n';
}

// the bracket display of the face words: [[1,1,2],[3,1,4],...]
inline std::string format_words(const PresentationComplex& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.faces.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(p.faces[i][0]) + "," + std::to_string(p.faces[i][1]) + "," +
         std::to_string(p.faces[i][2]) + "]";
  }
  return s + "]";
}

// ---- typed triangles ----

inline std::vector<TypedTriangle> parse_tri_lines(const std::vector<std::string>& lines) {
  std::vector<TypedTriangle> tris;
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string kw;
    TypedTriangle t;
    if (!(in >> kw >> t.edges[0] >> t.edges[1] >> t.edges[2] >> t.verts[0] >> t.verts[1] >>
          t.verts[2]) ||
        kw != "tri")
      throw std::invalid_argument("triangle file: bad line: " + line);
    std::string extra;
    if (in >> extra)
      throw std::invalid_argument("triangle file: trailing text: " + line);
    tris.push_back(t);
  }
  if (tris.empty()) throw std::invalid_argument("triangle file: no triangles");
  return tris;
}

inline void write_tri(std::ostream& out, const std::vector<TypedTriangle>& tris) {
  for (const auto& t : tris)
    out << "tri " << t.edges[0] << ' ' << t.edges[1] << ' ' << t.edges[2] << ' ' << t.verts[0]
        << ' ' << t.verts[1] << ' ' << t.verts[2] << '\n';
}

// ---- format sniffing ----

enum class FileFormat { wired, presentation, triangles, graph };

inline FileFormat sniff_format(const std::vector<std::string>& lines) {
  std::string kw = first_keyword(lines);
  if (kw == "links") return FileFormat::wired;
  if (kw == "edges") return FileFormat::presentation;
  if (kw == "tri") return FileFormat::triangles;
  if (kw == "graph") return FileFormat::graph;
  throw std::invalid_argument("unrecognized file format (first keyword '" + kw + "')");
}

// any of the three complex formats, reduced to a presentation complex
inline PresentationComplex load_as_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");
  auto lines = content_lines(in);
  switch (sniff_format(lines)) {
    case FileFormat::wired:
      return wired_to_presentation(build_complex(parse_wired_lines(lines, path.parent_path())));
    case FileFormat::presentation:
      return parse_presentation_lines(lines);
    case FileFormat::triangles:
      return typed_triangles_to_presentation(parse_tri_lines(lines));
    default:
      throw std::invalid_argument("'" + path.string() + "' is not a complex file");
  }
}

// ---- checksums and the fixture manifest ----

inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fnv1a64_hex(const std::string& data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

struct FixtureRow {
  std::string id, file, format, digest;
  std::vector<std::pair<std::string, std::string>> props;  // key=value pairs
};

inline std::vector<FixtureRow> parse_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open manifest '" + path.string() + "'");
  std::vector<FixtureRow> rows;
  for (const auto& line : content_lines(in)) {
    std::istringstream ss(line);
    FixtureRow row;
    if (!(ss >> row.id >> row.file >> row.format >> row.digest))
      throw std::invalid_argument("manifest: bad row: " + line);
    std::string kv;
    while (ss >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("manifest: bad property '" + kv + "'");
      row.props.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// evaluate one fixture's expected-properties record; empty result = pass
inline std::vector<std::string> check_fixture(const FixtureRow& row,
                                              const std::filesystem::path& dir) {
  std::vector<std::string> problems;
  std::filesystem::path path = dir / row.file;
  std::string bytes;
  try {
    bytes = read_file_bytes(path);
  } catch (const std::exception& e) {
    return {e.what()};
  }
  if (fnv1a64_hex(bytes) != row.digest)
    problems.push_back("checksum mismatch (transcription drift)");

  PresentationComplex pres;
  std::size_t face_count = 0;
  try {
    std::ifstream in(path);
    auto lines = content_lines(in);
    if (row.format == "wired") {
      auto doc = parse_wired_lines(lines, path.parent_path());
      face_count = doc.faces.size();
      pres = wired_to_presentation(build_complex(doc));
    } else if (row.format == "pres") {
      pres = parse_presentation_lines(lines);
      face_count = pres.faces.size();
    } else if (row.format == "tri") {
      pres = typed_triangles_to_presentation(parse_tri_lines(lines));
      face_count = pres.faces.size();
    } else {
      return {"unknown format '" + row.format + "'"};
    }
  } catch (const std::exception& e) {
    problems.push_back(e.what());
    return problems;
  }

  for (const auto& [key, value] : row.props) {
    if (key == "faces") {
      if (std::to_string(face_count) != value)
        problems.push_back("faces=" + std::to_string(face_count) + ", expected " + value);
    } else if (key == "vertices") {
      int nv = vertex_assignment_of(pres).vertex_count;
      if (std::to_string(nv) != value)
        problems.push_back("vertices=" + std::to_string(nv) + ", expected " + value);
    } else if (key == "links") {
      std::vector<std::string> names;
      std::vector<Graph> targets;
      std::vector<std::size_t> want;
      std::istringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        names.push_back(item.substr(0, colon));
        targets.push_back(builtin_graph(names.back()));
        want.push_back(std::stoul(item.substr(colon + 1)));
      }
      VerifyResult vr = verify_links(pres, targets);
      if (!vr.pass)
        problems.push_back("link verification failed");
      else
        for (std::size_t t = 0; t < names.size(); ++t)
          if (vr.count_by_target[t] != want[t])
            problems.push_back(names[t] + " count " + std::to_string(vr.count_by_target[t]) +
                               ", expected " + std::to_string(want[t]));
    } else if (key == "words") {
      if (format_words(pres) != value)
        problems.push_back("face words differ from expected display");
    } else {
      problems.push_back("unknown property '" + key + "'");
    }
  }
  return problems;
}

}  // namespace wcx
