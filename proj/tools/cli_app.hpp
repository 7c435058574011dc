#pragma once

// Command-line front end: build, verify, homs and limitset subcommands.
// Exit codes: 0 success, 1 usage or precondition error, 2 computation
// failure (including a check that did not pass).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "origami/origami.hpp"

namespace origami::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

struct GroupFlags {
  std::string kase;
  std::optional<int> n;
  std::optional<double> r;
  std::vector<std::string> grid;
  double tol = kDefaultTolerance;
};

struct Config {
  GroupFlags group;
  std::string out;
  // verify
  std::string subgroup;
  std::vector<std::string> words;
  std::optional<int> cert_depth;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::string from;
  // homs
  std::string target;
  // limitset
  int depth = 5;
  std::string csv;
  std::string ppm;
  int width = 512;
  int height = 512;
  std::vector<double> bbox;
  bool check_containment = false;
  bool nesting = false;
};

/// Parses a grid entry "re" or "re:im".
inline complex parse_grid_value(const std::string& s) {
  std::size_t used = 0;
  try {
    const auto colon = s.find(':');
    const double re = std::stod(s.substr(0, colon), &used);
    if (used != (colon == std::string::npos ? s.size() : colon))
      throw std::invalid_argument(s);
    double im = 0.0;
    if (colon != std::string::npos) {
      const std::string tail = s.substr(colon + 1);
      im = std::stod(tail, &used);
      if (used != tail.size())
        throw std::invalid_argument(s);
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw precondition_error("bad grid value '" + s + "' (expected re or re:im)");
  }
}

inline GroupKind kind_of(const GroupFlags& g) {
  if (g.kase == "a") {
    require(g.n.has_value(), "--case a needs --n");
    require(*g.n >= 2, "--n must be at least 2");
    return GroupKind::case_a(*g.n);
  }
  require(!g.n.has_value(), "--n applies only to --case a");
  return GroupKind::case_b();
}

inline OrigamiSchottkyGroup build_from_flags(const GroupFlags& g) {
  const GroupKind kind = kind_of(g);
  BuildOptions opt;
  opt.circle_parameter = g.r;
  opt.tolerance = g.tol;
  if (!g.grid.empty()) {
    std::vector<complex> grid;
    for (const auto& s : g.grid)
      grid.push_back(parse_grid_value(s));
    opt.grid = grid;
  }
  return build(kind, opt);
}

inline json group_flags_json(const GroupFlags& g) {
  return {{"case", g.kase},
          {"n", g.n ? json(*g.n) : json(nullptr)},
          {"r", g.r ? json(*g.r) : json("adaptive")},
          {"grid", g.grid.empty() ? json("default") : json(g.grid)},
          {"tolerance", g.tol}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw precondition_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Writes via a temporary file in the same directory and a rename.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw precondition_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush())
      throw computation_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

/// Explicit path, else $ORIGAMI_OUT_DIR/<fallback>, else empty (stdout).
inline std::string resolve_output(const std::string& explicit_path, const std::string& fallback) {
  if (!explicit_path.empty())
    return explicit_path;
  if (const char* dir = std::getenv("ORIGAMI_OUT_DIR"); dir && *dir)
    return (std::filesystem::path(dir) / fallback).string();
  return {};
}

inline void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty())
    out << content;
  else
    write_atomic(path, content);
}

inline std::string kind_tag(const GroupKind& k) {
  return k.is_case_a() ? "case_a_n" + std::to_string(k.n) : "case_b";
}

inline int cmd_build(const Config& c, std::ostream& out) {
  const auto g = build_from_flags(c.group);
  json doc = {{"command", "build"}, {"config", group_flags_json(c.group)}, {"group", group_json(g)}};
  emit(resolve_output(c.out, "build_" + kind_tag(g.kind) + ".json"), doc.dump(2) + "\n", out);
  return g.certificate.verdict ? kExitOk : kExitComputation;
}

inline std::vector<Word> subgroup_for(const Config& c, const OrigamiSchottkyGroup& g) {
  const auto& s = c.subgroup;
  if (s == "custom") {
    require(!c.words.empty(), "--subgroup custom needs --word");
    std::vector<Word> out;
    for (const auto& w : c.words)
      out.push_back(parse_word(w, g.presentation.generators));
    return out;
  }
  require(c.words.empty(), "--word applies only to --subgroup custom");
  if (s == "a4") {
    require(!g.kind.is_case_a(), "--subgroup a4 needs --case b");
    return subgroup_words_a4();
  }
  require(g.kind.is_case_a(), "--subgroup " + s + " needs --case a");
  if (s == "odd") {
    require(g.kind.n % 2 == 1 && g.kind.n >= 3, "--subgroup odd needs odd n >= 3");
    return subgroup_words_odd(g.kind.n);
  }
  require(g.kind.n % 2 == 0, "--subgroup even needs even n");
  return subgroup_words_even(g.kind.n);
}

inline int cmd_verify(const Config& c, std::ostream& out) {
  OrigamiSchottkyGroup g = [&] {
    if (c.from.empty())
      return build_from_flags(c.group);
    json doc;
    try {
      doc = json::parse(read_file(c.from));
    } catch (const json::exception& e) {
      throw precondition_error(std::string("cannot parse ") + c.from + ": " + e.what());
    }
    return group_from(doc.contains("group") ? doc.at("group") : doc, c.group.tol);
  }();
  if (!c.from.empty() && !c.group.kase.empty())
    require(kind_of(c.group) == g.kind, "--case/--n disagree with the --from group");
  const auto words = subgroup_for(c, g);
  RealizeOptions opt;
  opt.certificate_depth = c.cert_depth;
  opt.max_cosets = c.max_cosets;
  opt.tolerance = c.group.tol;
  const auto rep = realize_subgroup(g, words, opt);
  json cfg = group_flags_json(c.group);
  cfg["subgroup"] = c.subgroup;
  cfg["words"] = c.words;
  cfg["certificate_depth"] = c.cert_depth ? json(*c.cert_depth) : json("default");
  cfg["max_cosets"] = c.max_cosets;
  cfg["from"] = c.from.empty() ? json(nullptr) : json(c.from);
  json doc = {{"command", "verify"},
              {"config", cfg},
              {"kind", kind_json(g.kind)},
              {"report", report_json(rep, g.presentation)}};
  emit(resolve_output(c.out, "verify_" + kind_tag(g.kind) + "_" + c.subgroup + ".json"),
       doc.dump(2) + "\n", out);
  return rep.passed() ? kExitOk : kExitComputation;
}

inline int cmd_homs(const Config& c, std::ostream& out) {
  const GroupKind kind = kind_of(c.group);
  const auto target = parse_group(c.target);
  const auto p = presentation_for(kind);
  const auto homs = enumerate_homs(p, target, kind);
  json cfg = {{"case", c.group.kase},
              {"n", c.group.n ? json(*c.group.n) : json(nullptr)},
              {"target", c.target}};
  json doc = {{"command", "homs"}, {"config", cfg}, {"kind", kind_json(kind)},
              {"result", homs_json(homs, p, target)}};
  emit(resolve_output(c.out, "homs_" + kind_tag(kind) + "_" + c.target + ".json"),
       doc.dump(2) + "\n", out);
  return kExitOk;
}

inline int cmd_limitset(const Config& c, std::ostream& out, std::ostream& err) {
  require(c.depth >= 1, "--depth must be at least 1");
  require(c.depth <= kMaxOrbitDepth, "--depth must be at most 8");
  RenderOptions ro;
  if (!c.bbox.empty()) {
    require(c.bbox.size() == 4, "--bbox needs xmin xmax ymin ymax");
    ro.xmin = c.bbox[0];
    ro.xmax = c.bbox[1];
    ro.ymin = c.bbox[2];
    ro.ymax = c.bbox[3];
  }
  ro.width = c.width;
  ro.height = c.height;
  require(c.ppm.empty() || (ro.width >= 1 && ro.height >= 1 && ro.width <= 16384 &&
                            ro.height <= 16384 && ro.xmax > ro.xmin && ro.ymax > ro.ymin),
          "invalid image size or bounding box");

  const auto g = build_from_flags(c.group);
  const auto lp = limit_points_through(g, c.depth);
  const std::string tag = kind_tag(g.kind);
  emit(resolve_output(c.csv, "limitset_" + tag + ".csv"), points_csv(lp.points), out);
  if (!c.ppm.empty())
    write_atomic(c.ppm, render_ppm(lp.points, ro));

  const std::size_t outside = count_outside(g, lp.points);
  const std::string summary_path = resolve_output(c.out, "limitset_" + tag + ".json");
  if (!summary_path.empty() || c.check_containment || c.nesting) {
    json cfg = group_flags_json(c.group);
    cfg["depth"] = c.depth;
    cfg["csv"] = c.csv;
    cfg["ppm"] = c.ppm;
    cfg["width"] = c.width;
    cfg["height"] = c.height;
    cfg["bbox"] = {ro.xmin, ro.xmax, ro.ymin, ro.ymax};
    cfg["check_containment"] = c.check_containment;
    json doc = {{"command", "limitset"},
                {"config", cfg},
                {"points", lp.points.size()},
                {"dropped_far", lp.dropped_far},
                {"degenerate", lp.degenerate},
                {"outside_certified_discs", outside}};
    if (c.nesting)
      doc["nesting"] = nesting_json(nesting_report(g, c.depth));
    // With no summary path the CSV already went to stdout; keep it clean.
    if (summary_path.empty())
      err << doc.dump(2) << '\n';
    else
      write_atomic(summary_path, doc.dump(2) + "\n");
  }
  if (c.check_containment && outside != 0)
    return kExitComputation;
  return kExitOk;
}

inline void add_group_flags(CLI::App* cmd, GroupFlags& g, bool with_geometry) {
  cmd->add_option("--case", g.kase, "group family: a (dihedral, needs --n) or b (A4)")
      ->required()
      ->check(CLI::IsMember({"a", "b"}));
  cmd->add_option("--n", g.n, "cone order n >= 2 for case a");
  if (with_geometry) {
    cmd->add_option("--r", g.r, "circle parameter (default adaptive)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--grid", g.grid, "lambda grid values re or re:im (default grid)");
    cmd->add_option("--tol", g.tol, "numerical tolerance")->check(CLI::Range(1e-15, 1e-3));
  }
}

/// Runs the CLI with `out` receiving stdout-bound artifacts and `err`
/// diagnostics; returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Origami-Schottky group construction and verification"};
  app.require_subcommand(1, 1);
  Config c;

  auto* build = app.add_subcommand("build", "construct and certify a group, emit JSON");
  add_group_flags(build, c.group, true);
  build->add_option("--out", c.out, "output JSON path");

  auto* verify = app.add_subcommand("verify", "realize a marked subgroup and check its claims");
  add_group_flags(verify, c.group, true);
  verify->get_option("--case")->required(false);
  verify->add_option("--subgroup", c.subgroup, "odd, even, a4 or custom")
      ->required()
      ->check(CLI::IsMember({"odd", "even", "a4", "custom"}));
  verify->add_option("--word", c.words, "subgroup generator word (custom), e.g. 'T B T^-1'");
  verify->add_option("--cert-depth", c.cert_depth, "word length for freeness/loxodromy checks")
      ->check(CLI::Range(1, 8));
  verify->add_option("--max-cosets", c.max_cosets, "coset enumeration limit")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100'000'000}));
  verify->add_option("--from", c.from, "build JSON to verify instead of rebuilding");
  verify->add_option("--out", c.out, "output JSON path");

  auto* homs = app.add_subcommand("homs", "enumerate homomorphisms into a finite group");
  add_group_flags(homs, c.group, false);
  homs->add_option("--target", c.target, "target group Zm, Dm or A4")->required();
  homs->add_option("--out", c.out, "output JSON path");

  auto* limitset = app.add_subcommand("limitset", "emit limit-set points as CSV and PPM");
  add_group_flags(limitset, c.group, true);
  limitset->add_option("--depth", c.depth, "word length (1..8)");
  limitset->add_option("--csv", c.csv, "CSV output path (default stdout)");
  limitset->add_option("--ppm", c.ppm, "PPM output path");
  limitset->add_option("--width", c.width, "image width in pixels");
  limitset->add_option("--height", c.height, "image height in pixels");
  limitset->add_option("--bbox", c.bbox, "xmin xmax ymin ymax")->expected(4);
  limitset->add_flag("--check-containment", c.check_containment,
                     "exit 2 unless every point lies in the certified discs");
  limitset->add_flag("--nesting", c.nesting, "add the circle nesting report to the summary");
  limitset->add_option("--out", c.out, "summary JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify && c.from.empty() && c.group.kase.empty())
      throw precondition_error("verify needs --case or --from");
    if (*build)
      return cmd_build(c, out);
    if (*verify)
      return cmd_verify(c, out);
    if (*homs)
      return cmd_homs(c, out);
    return cmd_limitset(c, out, err);
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const computation_error& e) {
    err << "computation failed: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace origami::cli
