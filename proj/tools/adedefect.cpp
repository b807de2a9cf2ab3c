// Command-line front end: classify, rank, defect, hodge, gallery.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "adedefect/defect/defect.hpp"
#include "adedefect/error.hpp"
#include "adedefect/gallery/gallery.hpp"
#include "adedefect/hodge/hodge.hpp"
#include "adedefect/io/json_io.hpp"
#include "adedefect/poly/parser.hpp"

namespace {

using namespace ade;

constexpr int kInputError = 2;
constexpr int kUndecided = 3;

struct Job {
  long precision = 256;
  std::string backend = "auto";
  std::string format = "text";
  std::string surface;
  std::string points;
  int cover = 0;
  int degree = -1;
  std::string specialization = "vanishing";
  std::string example;
  std::string export_dir;
  bool list = false;

  RankOptions rank() const { return {parse_backend(backend), precision}; }
  bool json() const { return format == "json"; }
};

// Failure in a named stage; the exit code follows the error code.
struct StageError {
  std::string stage;
  Error error;
};

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw StageError{name, e};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Variables are y0, y1, ...; at least four, more if the text mentions them.
MultiPoly read_surface(const std::string& path) {
  std::string text;
  std::istringstream lines(read_file(path));
  for (std::string line; std::getline(lines, line);)
    if (line.find('#') != 0) text += line + " ";
  int nvars = 4;
  static const std::regex var(R"(y(\d+))");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it)
    nvars = std::max(nvars, std::stoi((*it)[1]) + 1);
  return parse_poly(text, default_variable_names(nvars), {true});
}

std::vector<SingularPointRecord> read_points(const std::string& path) { return parse_points(read_file(path)); }

// Records typed by the classifier when the file gives bare coordinates, then
// checked and framed on the surface.
std::vector<SingularPointRecord> typed_records(const MultiPoly& surface, std::vector<SingularPointRecord> recs,
                                               long precision) {
  for (auto& r : recs)
    if (r.frame_kind != FrameKind::Supplied) r.ade = classify(surface, r.point, {12, precision}).type;
  return verify_inventory(surface, recs, precision);
}

bool all_certified(const std::vector<NamedRank>& ranks) {
  for (const auto& r : ranks)
    if (!r.result.certified) return false;
  return true;
}

void print(const Job& job, const Json& j, const std::string& text) {
  if (job.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string rank_line(const NamedRank& r) {
  std::ostringstream os;
  os << "  " << r.name << " (degree " << r.degree << ", " << r.rows << "x" << r.cols << "): rank " << r.result.rank
     << " [" << to_string(r.result.backend) << (r.result.certified ? ", certified" : ", NOT certified");
  if (r.result.backend == Backend::Numeric) os << ", " << r.result.precision << " bits";
  os << "]\n";
  return os.str();
}

std::string hodge_text(const std::string& label, const HodgeReport& h) {
  std::ostringstream os;
  os << label << " (" << h.formula_id << "): h11 = " << h.h11;
  if (h.h12) os << ", h12 = " << *h.h12;
  if (h.euler) os << ", euler = " << *h.euler;
  if (h.h3_O) os << ", h3(O) = " << *h.h3_O;
  os << ", mu = " << h.mu << ", delta = " << h.delta << "\n";
  for (const auto& c : h.checks)
    os << "  check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.lhs << " vs " << c.rhs << ")\n";
  return os.str();
}

int run_classify(const Job& job) {
  MultiPoly f = stage("read surface", [&] { return read_surface(job.surface); });
  auto recs = stage("read points", [&] { return read_points(job.points); });
  Json out = Json::array();
  std::ostringstream text;
  int code = 0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    Json e{{"index", i}, {"point", point_to_json(recs[i].point)}};
    try {
      Classification c = classify(f, recs[i].point, {12, job.precision});
      e["classification"] = to_json(c);
      SingularPointRecord framed = adapted_frame(f, recs[i].point, c.type, job.precision);
      e["record"] = record_to_json(framed);
      text << i << ": " << c.type.to_string() << " (corank " << c.corank << ", order " << c.order
           << (c.exact ? ", exact" : ", balls") << ")\n";
    } catch (const Error& err) {
      e["error"] = {{"code", std::string(to_string(err.code()))}, {"message", err.what()}};
      text << i << ": " << err.what() << "\n";
      const bool undecided = err.code() == ErrorCode::Undecided || err.code() == ErrorCode::TruncationInsufficient;
      code = std::max(code, undecided ? kUndecided : kInputError);
    }
    out.push_back(e);
  }
  print(job, Json{{"records", out}}, text.str());
  return code;
}

int run_rank(const Job& job) {
  if (job.degree < 0) throw StageError{"arguments", Error(ErrorCode::InvalidInput, "--degree is required")};
  auto recs = stage("read points", [&] { return read_points(job.points); });
  ConditionMatrix m = stage("build matrix", [&] {
    if (job.specialization == "vanishing") {
      std::vector<ProjectivePoint> pts;
      for (const auto& r : recs) pts.push_back(r.point);
      const int nv = pts.empty() ? 4 : pts[0].dim();
      return build_vanishing_matrix(job.degree, pts, nv);
    }
    Specialization s = parse_specialization(job.specialization);
    if (job.surface.empty()) throw Error(ErrorCode::InvalidInput, "--surface is needed for frames");
    MultiPoly f = read_surface(job.surface);
    auto typed = typed_records(f, recs, job.precision);
    return build_condition_matrix(job.degree, typed, s, f.nvars());
  });
  NamedRank r = stage("rank", [&] { return named_rank(job.specialization, m, job.rank()); });
  print(job, to_json(r), rank_line(r));
  return r.result.certified ? 0 : kUndecided;
}

DefectResult cover_defect(const Job& job, int d, const std::vector<SingularPointRecord>& recs) {
  return stage("defect", [&] {
    if (job.cover == 3) return defect_triple(d, recs, job.rank());
    if (job.cover == 2) return defect_double(d, recs, job.rank());
    std::vector<ProjectivePoint> pts;
    for (const auto& r : recs) {
      if (r.ade != ADEType::make(Family::A, 1))
        throw Error(ErrorCode::UnsupportedCover, "covers of degree " + std::to_string(job.cover) + " need nodes");
      pts.push_back(r.point);
    }
    return defect_nfold(d, job.cover, pts, job.rank());
  });
}

int run_defect(const Job& job) {
  if (job.cover < 2) throw StageError{"arguments", Error(ErrorCode::InvalidInput, "--cover N with N >= 2 is required")};
  MultiPoly f = stage("read surface", [&] { return read_surface(job.surface); });
  auto recs = stage("read points", [&] { return read_points(job.points); });
  auto typed = stage("verify points", [&] { return typed_records(f, recs, job.precision); });
  const int d = job.degree >= 0 ? job.degree : f.degree();
  DefectResult r = cover_defect(job, d, typed);
  std::ostringstream text;
  text << "defect (" << r.formula << "): delta = " << r.delta << "\n";
  for (const auto& [k, v] : r.components) text << "  " << k << " = " << v << "\n";
  for (const auto& nr : r.ranks) text << rank_line(nr);
  print(job, to_json(r), text.str());
  return r.certified ? 0 : kUndecided;
}

int run_hodge(const Job& job) {
  if (job.cover < 2) throw StageError{"arguments", Error(ErrorCode::InvalidInput, "--cover N with N >= 2 is required")};
  std::vector<SingularPointRecord> recs;
  int d = job.degree;
  if (job.points != "none") {
    if (job.surface.empty()) throw StageError{"arguments", Error(ErrorCode::InvalidInput, "--surface is required")};
    MultiPoly f = stage("read surface", [&] { return read_surface(job.surface); });
    if (d < 0) d = f.degree();
    auto raw = stage("read points", [&] { return read_points(job.points); });
    recs = stage("verify points", [&] { return typed_records(f, raw, job.precision); });
  }
  if (d < 0) throw StageError{"arguments", Error(ErrorCode::InvalidInput, "--degree is required")};
  Inventory inv;
  for (const auto& r : recs) ++inv[r.ade];
  CoverSpec spec = CoverSpec::from_inventory(d, job.cover, inv);
  DefectResult defect;
  if (!recs.empty()) defect = cover_defect(job, d, recs);
  HodgeReport big = stage("hodge", [&] { return hodge_big_cover(spec, defect.delta); });
  big.rank_inputs = defect.ranks;
  Json out{{"big", to_json(big)}};
  std::string text = hodge_text("big resolution", big);
  try {
    std::vector<NamedRank> ranks = defect.ranks;
    // the smooth branch has empty matrices
    if (recs.empty()) ranks.assign(job.cover == 3 ? 2 : 1, NamedRank{"empty", 0, 0, 0, {0, Backend::Exact, true, 0}});
    HodgeReport small = hodge_small(spec, ranks);
    small.checks.push_back(euler_check(small, spec));
    small.checks.push_back(path_independence(big, small, spec));
    out["small"] = to_json(small);
    text += hodge_text("small resolution", small);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedCover) throw StageError{"hodge", e};
  }
  out["h11"] = big.h11;
  out["h12"] = big.h12 ? Json(*big.h12) : Json(nullptr);
  if (!recs.empty()) out["defect"] = to_json(defect);
  print(job, out, text);
  return defect.certified ? 0 : kUndecided;
}

int run_gallery(const Job& job) {
  if (job.list) {
    Json names = example_names();
    std::string text;
    for (const auto& n : example_names()) text += n + "\n";
    print(job, names, text);
    return 0;
  }
  if (job.example.empty()) throw StageError{"arguments", Error(ErrorCode::InvalidInput, "name an example or --list")};
  ExampleBundle b = stage("load", [&] { return load_example(job.example); });
  if (!job.export_dir.empty()) {
    std::filesystem::create_directories(job.export_dir);
    const auto base = std::filesystem::path(job.export_dir) / b.name;
    std::ofstream(base.string() + ".poly") << b.surface.to_string(default_variable_names(b.nvars)) << "\n";
    Json manifest = bundle_manifest(b);
    std::ofstream(base.string() + ".pts") << manifest["points"].dump(1) << "\n";
    std::ofstream(base.string() + ".json") << manifest.dump(2) << "\n";
    std::cout << base.string() << ".{poly,pts,json}\n";
    return 0;
  }
  ExampleReport r = stage("run " + b.name, [&] { return run_bundle(b, {job.rank(), job.precision}); });
  std::ostringstream text;
  text << b.name << ": " << b.title << "\n  singular points: " << r.nu << "\n";
  for (const auto& nr : r.ranks) text << rank_line(nr);
  text << "  defect: " << r.defect.delta << "\n";
  if (r.has_small) text << hodge_text("small resolution", r.small);
  text << hodge_text("big resolution", r.big);
  text << "matches expected (" << b.expected.source << "): " << (r.matches_expected ? "yes" : "NO") << "\n";
  print(job, to_json(r), text.str());
  return all_certified(r.ranks) ? 0 : kUndecided;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::RankUndecided:
    case ErrorCode::Undecided:
    case ErrorCode::PrecisionExhausted: return kUndecided;
    default: return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defects and Hodge numbers of resolutions of A-D-E threefolds"};
  app.require_subcommand(1);
  Job job;
  auto common = [&](CLI::App* c) {
    c->add_option("--precision", job.precision, "ball precision in bits")->check(CLI::Range(64, 4096));
    c->add_option("--backend", job.backend, "rank backend")->check(CLI::IsMember({"exact", "numeric", "auto"}));
    c->add_option("--format", job.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* classify_cmd = app.add_subcommand("classify", "A-D-E type of each point");
  common(classify_cmd);
  classify_cmd->add_option("--surface", job.surface, ".poly file")->required();
  classify_cmd->add_option("--points", job.points, ".pts file")->required();

  auto* rank_cmd = app.add_subcommand("rank", "rank of a condition matrix");
  common(rank_cmd);
  rank_cmd->add_option("--points", job.points, ".pts file")->required();
  rank_cmd->add_option("--degree", job.degree, "degree of the forms")->required();
  rank_cmd->add_option("--surface", job.surface, ".poly file, needed for derivative columns");
  rank_cmd->add_option("--specialization", job.specialization, "matrix shape")
      ->check(CLI::IsMember({"vanishing", "triple_cusp", "double_A_chain", "quintic_A3", "general_linear_frame"}));

  auto* defect_cmd = app.add_subcommand("defect", "defect of a cyclic cover");
  common(defect_cmd);
  defect_cmd->add_option("--surface", job.surface, ".poly file")->required();
  defect_cmd->add_option("--points", job.points, ".pts file")->required();
  defect_cmd->add_option("--cover", job.cover, "cover degree")->required();
  defect_cmd->add_option("--degree", job.degree, "branch degree (default: the surface's)");

  auto* hodge_cmd = app.add_subcommand("hodge", "Hodge numbers of a cyclic cover");
  common(hodge_cmd);
  hodge_cmd->add_option("--cover", job.cover, "cover degree")->required();
  hodge_cmd->add_option("--degree", job.degree, "branch degree");
  hodge_cmd->add_option("--points", job.points, ".pts file or 'none'")->required();
  hodge_cmd->add_option("--surface", job.surface, ".poly file");

  auto* gallery_cmd = app.add_subcommand("gallery", "bundled examples");
  common(gallery_cmd);
  gallery_cmd->add_option("name", job.example, "example name");
  gallery_cmd->add_flag("--list", job.list, "list the examples");
  gallery_cmd->add_option("--export", job.export_dir, "write NAME.poly, NAME.pts and NAME.json into DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*classify_cmd) return run_classify(job);
    if (*rank_cmd) return run_rank(job);
    if (*defect_cmd) return run_defect(job);
    if (*hodge_cmd) return run_hodge(job);
    return run_gallery(job);
  } catch (const StageError& e) {
    std::cerr << "error in stage '" << e.stage << "': " << e.error.what() << "\n";
    return exit_code(e.error.code());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
}
