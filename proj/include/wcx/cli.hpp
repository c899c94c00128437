#pragma once

// Command-line front end. Exit codes: 0 success / positive verdict,
// 1 negative verdict (not isomorphic, verification failed, ...),
// 2 usage or input errors.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wcx/io.hpp"

namespace wcx {

namespace cli_detail {

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

inline int default_jobs() {
  if (const char* env = std::getenv("WCX_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

inline void print_stats(std::ostream& out, const SearchStats& st) {
  out << "nodes=" << st.nodes << '\n'
      << "faces_generated=" << st.faces_generated << '\n'
      << "solutions=" << st.solutions << '\n'
      << "classes=" << st.classes << '\n'
      << "truncated=" << (st.truncated ? 1 : 0) << '\n'
      << "wall_ms=" << st.wall_ms << '\n';
}

inline std::string link_name_of(const std::vector<std::string>& names, int idx) {
  return idx >= 0 && idx < static_cast<int>(names.size()) ? names[idx] : "?";
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wired-complex toolkit: enumerate 2-complexes with prescribed vertex links"};
  app.name("wcx");
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "exhaustively enumerate complete complexes over given links");
  std::string links_csv;
  std::vector<std::string> pattern_strs;
  std::string seed_file, out_dir, stats_file, dedup_str = "on";
  std::uint64_t max_solutions = 0, group_bound = 1000000;
  int jobs = cli_detail::default_jobs(), split_depth = 3;
  enumerate->add_option("--links", links_csv, "comma list of link graphs (name or file)")
      ->required();
  enumerate->add_option("--pattern", pattern_strs,
                        "corner links i,j,k (repeatable; default: all)");
  enumerate->add_option("--seed-file", seed_file, "wired file with initial faces");
  enumerate->add_option("--max-solutions", max_solutions, "stop after this many raw solutions");
  enumerate->add_option("--dedup", dedup_str, "on|off: isomorph rejection (default on)");
  enumerate->add_option("--jobs", jobs, "worker threads (default $WCX_JOBS or 1)");
  enumerate->add_option("--split-depth", split_depth, "tree depth split across workers");
  enumerate->add_option("--group-bound", group_bound,
                        "max symmetry-group order for canonical keys");
  enumerate->add_option("--out", out_dir, "directory for one wired file per class");
  enumerate->add_option("--stats", stats_file, "also write key=value stats to this file");

  // isomorphic
  auto* isomorphic = app.add_subcommand("isomorphic", "test two wired complexes");
  std::string file_a, file_b;
  bool want_witness = false;
  isomorphic->add_option("fileA", file_a)->required();
  isomorphic->add_option("fileB", file_b)->required();
  isomorphic->add_flag("--witness", want_witness, "print the vertex bijection");

  // canonical
  auto* canonical = app.add_subcommand("canonical", "print a complex's canonical key");
  std::string canon_file;
  std::uint64_t canon_bound = 1000000;
  canonical->add_option("file", canon_file)->required();
  canonical->add_option("--group-bound", canon_bound, "max symmetry-group order");

  // convert
  auto* convert = app.add_subcommand("convert", "wired complex -> presentation complex");
  std::string convert_file;
  bool words_only = false;
  convert->add_option("--wired", convert_file, "wired complex file")->required();
  convert->add_flag("--words", words_only, "print the bracket word list only");

  // infer-vertices
  auto* infer = app.add_subcommand("infer-vertices",
                                   "derive CW vertices from the face words");
  std::string infer_file, infer_out;
  infer->add_option("file", infer_file)->required();
  infer->add_option("--out", infer_out, "write the presentation with vertex lines here");

  // verify
  auto* verify = app.add_subcommand("verify", "check every vertex link against targets");
  std::string verify_file, targets_csv;
  verify->add_option("file", verify_file)->required();
  verify->add_option("--targets", targets_csv, "comma list of link graphs")->required();

  // orientable
  auto* orientable = app.add_subcommand("orientable",
                                        "test for an all-positive face orientation");
  std::string orient_file;
  orientable->add_option("file", orient_file)->required();

  // graph-info
  auto* graph_info = app.add_subcommand("graph-info", "vertex/edge/girth/automorphism summary");
  std::string graph_name;
  graph_info->add_option("name", graph_name, "builtin name or graph file")->required();

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "list or check the bundled fixtures");
  bool do_check = false;
  std::string fixtures_dir = "fixtures";
  fixtures->add_flag("--check", do_check, "run every fixture's expected-properties record");
  fixtures->add_option("--dir", fixtures_dir, "fixtures directory (default ./fixtures)");

  std::vector<std::string> argv_storage = {"wcx"};
  for (auto& a : args) argv_storage.push_back(a);
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) {
      if (dedup_str != "on" && dedup_str != "off") {
        err << "error: --dedup expects on|off\n";
        return 2;
      }
      auto specs = cli_detail::split_csv(links_csv);
      std::vector<Graph> link_graphs;
      for (const auto& s : specs)
        link_graphs.push_back(resolve_graph_spec(s, std::filesystem::current_path()));
      LinkArrangement arr = make_arrangement(std::move(link_graphs));

      SearchConfig cfg;
      cfg.dedup = dedup_str == "on";
      cfg.jobs = jobs;
      cfg.split_depth = split_depth;
      cfg.group_bound = group_bound;
      if (max_solutions > 0) cfg.max_solutions = max_solutions;
      if (!pattern_strs.empty()) {
        std::vector<FacePattern> pats;
        for (const auto& ps : pattern_strs) {
          auto parts = cli_detail::split_csv(ps);
          if (parts.size() != 3) {
            err << "error: --pattern expects i,j,k\n";
            return 2;
          }
          pats.push_back({{std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2])}});
        }
        cfg.patterns = std::move(pats);
      }
      if (!seed_file.empty()) {
        WiredDocument seed = load_wired(seed_file);
        if (!(seed.arr == arr)) {
          err << "error: seed file links differ from --links\n";
          return 2;
        }
        cfg.seed_faces = seed.faces;
      }

      EnumerationResult res = enumerate_complexes(arr, cfg);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        int width = res.complexes.size() >= 1000 ? 4 : 3;
        for (std::size_t c = 0; c < res.complexes.size(); ++c) {
          std::string num = std::to_string(c + 1);
          num.insert(0, width - std::min<std::size_t>(width, num.size()), '0');
          std::ofstream f(std::filesystem::path(out_dir) / ("class-" + num + ".wired"));
          write_wired(f, specs, res.complexes[c].faces);
        }
      }
      cli_detail::print_stats(out, res.stats);
      if (!stats_file.empty()) {
        std::ofstream f(stats_file);
        cli_detail::print_stats(f, res.stats);
      }
      return 0;
    }

    if (isomorphic->parsed()) {
      WiredDocument doc_a = load_wired(file_a);  // must outlive the complexes
      WiredDocument doc_b = load_wired(file_b);
      PartialWiredComplex a = build_complex(doc_a);
      PartialWiredComplex b = build_complex(doc_b);
      auto witness = complexes_isomorphic(a, b);
      if (!witness) {
        out << "not-isomorphic\n";
        return 1;
      }
      out << "isomorphic\n";
      if (want_witness)
        for (std::size_t v = 0; v < witness->size(); ++v)
          out << v << " -> " << (*witness)[v] << '\n';
      return 0;
    }

    if (canonical->parsed()) {
      WiredDocument doc = load_wired(canon_file);  // must outlive the complex
      PartialWiredComplex p = build_complex(doc);
      IsoGroupSpec spec = IsoGroupSpec::build(*p.arr, canon_bound);
      auto key = canonical_key(p, spec, canon_bound);
      if (!key) {
        err << "canonical: symmetry group order exceeds bound; pairwise testing required\n";
        return 1;
      }
      out << to_hex(*key) << '\n';
      return 0;
    }

    if (convert->parsed()) {
      PresentationComplex p =
          wired_to_presentation(build_complex(load_wired(convert_file)));
      if (words_only)
        out << format_words(p) << '\n';
      else
        write_presentation(out, p);
      return 0;
    }

    if (infer->parsed()) {
      PresentationComplex p = load_as_presentation(infer_file);
      p.vertices.reset();  // always infer, even when the file carried vertices
      VertexAssignment va = infer_vertices(p);
      out << "vertices=" << va.vertex_count << '\n';
      if (!infer_out.empty()) {
        PresentationComplex q = p;
        q.vertices = va.endpoints;
        std::ofstream f(infer_out);
        write_presentation(f, q);
      }
      return 0;
    }

    if (verify->parsed()) {
      PresentationComplex p = load_as_presentation(verify_file);
      auto names = cli_detail::split_csv(targets_csv);
      std::vector<Graph> targets;
      for (const auto& n : names)
        targets.push_back(resolve_graph_spec(n, std::filesystem::current_path()));
      VerifyResult vr = verify_links(p, targets);
      for (std::size_t v = 0; v < vr.match.size(); ++v) {
        if (vr.match[v] >= 0)
          out << "link " << v << ": " << names[vr.match[v]] << '\n';
        else
          out << "link " << v << ": FAIL (" << vr.issue[v] << ")\n";
      }
      for (std::size_t t = 0; t < names.size(); ++t)
        out << names[t] << "=" << vr.count_by_target[t] << '\n';
      out << "verdict=" << (vr.pass ? "pass" : "fail") << '\n';
      return vr.pass ? 0 : 1;
    }

    if (orientable->parsed()) {
      bool yes = positively_orientable(load_as_presentation(orient_file));
      out << "orientable=" << (yes ? "yes" : "no") << '\n';
      return yes ? 0 : 1;
    }

    if (graph_info->parsed()) {
      Graph g = resolve_graph_spec(graph_name, std::filesystem::current_path());
      bool regular = true;
      for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != g.degree(0)) regular = false;
      out << "vertices=" << g.n << " edges=" << g.edges.size();
      if (regular && g.n > 0)
        out << " regular=" << g.degree(0);
      else
        out << " regular=no";
      auto gi = girth(g);
      out << " girth=" << (gi ? std::to_string(*gi) : "inf");
      try {
        out << " aut=" << automorphisms(g).size() << '\n';
      } catch (const capacity_error&) {
        out << " aut=overflow\n";
      }
      return 0;
    }

    if (fixtures->parsed()) {
      auto rows = parse_manifest(std::filesystem::path(fixtures_dir) / "manifest.txt");
      if (!do_check) {
        for (const auto& r : rows)
          out << r.id << ' ' << r.file << ' ' << r.format << ' ' << r.digest << '\n';
        return 0;
      }
      bool all_ok = true;
      for (const auto& r : rows) {
        auto problems = check_fixture(r, fixtures_dir);
        if (problems.empty()) {
          out << r.id << ": ok\n";
        } else {
          all_ok = false;
          out << r.id << ": FAIL";
          for (const auto& p : problems) out << " — " << p;
          out << '\n';
        }
      }
      return all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace wcx
