// One line per acceptance criterion; exit status is nonzero if any fails.

#include <cstdio>
#include <future>
#include <map>
#include <random>
#include <sstream>

#include "adedefect/error.hpp"
#include "adedefect/gallery/gallery.hpp"
#include "support/ade_samples.hpp"
#include "support/oracles.hpp"

using namespace ade;
using namespace ade::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o) {
  std::printf("AC%-2d %s  %s%s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.str().c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

struct Run {
  ExampleBundle bundle;
  ExampleReport report;
  std::string error;
};

std::map<std::string, Run> run_gallery() {
  std::map<std::string, std::future<Run>> jobs;
  for (const auto& name : example_names())
    jobs[name] = std::async(std::launch::async, [name] {
      Run r;
      try {
        r.bundle = load_example(name);
        r.report = run_bundle(r.bundle);
      } catch (const Error& e) {
        r.error = e.what();
      }
      return r;
    });
  std::map<std::string, Run> out;
  for (auto& [name, f] : jobs) out[name] = f.get();
  return out;
}

std::string ranks_text(const ExampleReport& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.ranks.size(); ++i) s += (i ? "," : "") + std::to_string(r.ranks[i].result.rank);
  return s + ")";
}

// nu, ranks, small h11 and h12 against fixed numbers.
void check_example(Outcome& o, const Run& run, long nu, std::vector<long> ranks, long h11, long h12) {
  const std::string& name = run.bundle.name;
  if (!run.error.empty()) {
    o.require(false, name + ": " + run.error);
    return;
  }
  const ExampleReport& r = run.report;
  o.detail << " " << name << ": nu=" << r.nu << " ranks=" << ranks_text(r) << " h11=" << r.small.h11
           << " h12=" << r.small.h12.value_or(-1);
  o.require(r.nu == nu, name + " nu");
  o.require(r.ranks.size() == ranks.size(), name + " rank count");
  for (std::size_t i = 0; i < ranks.size() && i < r.ranks.size(); ++i) {
    o.require(r.ranks[i].result.rank == ranks[i], name + " rank " + std::to_string(i));
    o.require(r.ranks[i].result.certified, name + " rank certified");
  }
  o.require(r.small.h11 == h11 && r.small.h12 == h12, name + " Hodge numbers");
}

bool is_cover(const Run& r) { return r.error.empty() && r.report.has_small; }

}  // namespace

int main() {
  auto runs = run_gallery();

  {
    Outcome o;
    const Run& run = runs["sextic30"];
    check_example(o, run, 30, {25, 55}, 11, 23);
    o.require(run.bundle.predicted == 30, "predicted count");
    // timed alone, at 256 bits
    RunOptions opts;
    opts.rank.precision = 256;
    opts.precision = 256;
    const double seconds = run_example("sextic30", opts).seconds;
    o.detail << " t=" << seconds << "s";
    o.require(seconds <= 60, "runtime budget");
    report(1, "six-plane sextic: 30 cusps, ranks (25,55), h11=11, h12=23, within 60 s", o);
  }
  {
    Outcome o;
    const long table[9][5] = {{10, 9, 19, 3, 75},  {16, 15, 31, 3, 57}, {18, 17, 35, 3, 51},
                              {18, 16, 34, 5, 53}, {22, 20, 42, 5, 41}, {24, 22, 46, 5, 35},
                              {24, 21, 45, 7, 37}, {26, 23, 49, 7, 31}, {28, 24, 52, 9, 27}};
    for (int i = 0; i < 9; ++i) {
      const Run& run = runs["table72_row" + std::to_string(i + 1)];
      const long* t = table[i];
      check_example(o, run, t[0], {t[1], t[2]}, t[3], t[4]);
      o.require(run.bundle.predicted == run.report.nu, run.bundle.name + " predicted count");
    }
    report(2, "nine table rows reproduce (nu, rank M4, rank M6, h11, h12)", o);
  }
  {
    Outcome o;
    check_example(o, runs["residual27"], 27, {24, 51}, 7, 28);
    report(3, "residual sextic: 27 cusps, ranks (24,51), h11=7, h12=28", o);
  }
  {
    Outcome o;
    check_example(o, runs["cusp36"], 36, {30, 66}, 13, 7);
    report(4, "cube pull-back sextic: 36 cusps, ranks (30,66), h11=13, h12=7", o);
  }
  {
    Outcome o;
    const Run& run = runs["octic64"];
    check_example(o, run, 64, {122}, 7, 27);
    for (const auto& rec : run.report.records) o.require(rec.ade == ADEType::make(Family::A, 3), "A3 type");
    report(5, "fourth-power pull-back octic: 64 A3 points, rank 122, h11=7, h12=27", o);
  }
  {
    Outcome o;
    int cases = 0;
    for (const auto& [name, run] : runs) {
      if (!is_cover(run)) continue;
      ++cases;
      bool found = false;
      for (const auto& c : run.report.small.checks)
        if (c.name == "euler") {
          found = true;
          o.require(c.pass, name + " euler " + std::to_string(c.lhs) + " vs " + std::to_string(c.rhs));
        }
      o.require(found, name + " has no euler check");
    }
    o.detail << " cases=" << cases;
    o.require(cases == 13, "13 cover cases");
    report(6, "2(h11-h12) equals the closed Euler formula on every cover case", o);
  }
  {
    Outcome o;
    int cases = 0;
    for (const auto& [name, run] : runs) {
      if (!is_cover(run)) continue;
      ++cases;
      bool found = false;
      for (const auto& c : run.report.small.checks)
        if (c.name == "path_independence") {
          found = true;
          o.require(c.pass, name + " big h11 " + std::to_string(c.lhs) + " vs shifted " + std::to_string(c.rhs));
        }
      o.require(found, name + " has no path check");
    }
    o.detail << " cases=" << cases;
    o.require(cases == 13, "13 cover cases");
    report(7, "big-resolution h11 from the cover formula equals the shifted small h11", o);
  }
  {
    Outcome o;
    SampleGenerator gen(8086);
    int total = 0, wrong = 0, cut = 0, rows = 0;
    for (const auto& row : normal_form_rows()) {
      ++rows;
      for (int k = 0; k < 50; ++k) {
        Sample s = gen.draw(row, k % 2 == 1);
        ++total;
        try {
          if (classify(s.f, s.point).type != row.type) ++wrong;
        } catch (const Error& e) {
          if (e.code() == ErrorCode::TruncationInsufficient)
            ++cut;
          else
            ++wrong;
        }
      }
    }
    o.detail << " rows=" << rows << " samples=" << total << " misclassified=" << wrong << " truncated=" << cut;
    o.require(wrong == 0, "misclassifications");
    o.require(cut * 20 < total, "truncation rate below 5%");
    report(8, "random semiquasihomogeneous perturbations keep their seeded type", o);
  }
  {
    Outcome o;
    std::mt19937_64 rng(100);
    int agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 12);
      const std::size_t m = dim(rng), n = dim(rng);
      const std::size_t target = std::uniform_int_distribution<std::size_t>(0, std::min(m, n))(rng);
      Matrix<Rational> a = random_low_rank(rng, m, n, target);
      const long oracle = minor_rank(a);
      const long exact = rank_exact(a);
      RankResult num = rank(a, Backend::Numeric);
      if (oracle == exact && exact == num.rank && num.certified)
        ++agree;
      else
        o.require(false, "matrix " + std::to_string(trial) + ": oracle " + std::to_string(oracle) + ", exact " +
                             std::to_string(exact) + ", numeric " + std::to_string(num.rank));
    }
    o.detail << " agree=" << agree << "/100";
    report(9, "numeric rank = exact rank = bordered-minor oracle on 100 random matrices", o);
  }
  {
    Outcome o;
    std::mt19937_64 rng(10);
    int matrices = 0;
    for (const auto& [name, run] : runs) {
      if (!run.error.empty()) {
        o.require(false, name + ": " + run.error);
        continue;
      }
      const auto& recs = run.report.records;
      auto base = example_matrices(run.bundle, recs);
      auto scaled = example_matrices(run.bundle, rescale_points(recs, rng));
      auto framed = example_matrices(run.bundle, reframe(recs, rng));
      for (std::size_t i = 0; i < base.size(); ++i) {
        ++matrices;
        const long r0 = run.report.ranks[i].result.rank;
        const std::string tag = name + " matrix " + std::to_string(i);
        o.require(rank(scaled[i]).rank == r0, tag + " rescaled");
        o.require(rank(framed[i]).rank == r0, tag + " reframed");
        o.require(rank(base[i].permuted_rows(random_permutation(base[i].rows(), rng))).rank == r0, tag + " permuted");
        RankResult p256 = rank(base[i], Backend::Numeric, 256);
        RankResult p512 = rank(base[i], Backend::Numeric, 512);
        o.require(p256.rank == r0 && p512.rank == r0 && p256.certified && p512.certified, tag + " precision");
      }
    }
    o.detail << " matrices=" << matrices;
    report(10, "ranks invariant under rescaling, reframing, basis permutation and 256->512 bits", o);
  }
  return failures == 0 ? 0 : 1;
}
