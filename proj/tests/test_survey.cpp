#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "simplexlab/survey.hpp"

using namespace simplexlab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() /
          ("simplexlab_survey_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  static int counter;
};
int TempDir::counter = 0;

}  // namespace

TEST_CASE("enumerate_empty at tiny determinants") {
  auto one = enumerate_empty(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].canon == CanonicalForm{1, {0, 0, 0, 0, 0}});

  auto two = enumerate_empty(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].canon == CanonicalForm{2, {0, 1, 1, 1, 1}});

  auto five = enumerate_empty(5);
  bool found = false;
  for (const EmptyClass& c : five) found = found || c.canon == CanonicalForm{5, {0, 1, 2, 3, 4}};
  CHECK(found);

  for (const EmptyClass& c : five) {
    CHECK(is_empty(c.representative).empty);
    CHECK(canonical_form(c.representative) == c.canon);
  }
}

TEST_CASE("classes are closed under unit scaling") {
  for (std::int64_t n : {7, 11}) {
    for (const EmptyClass& c : enumerate_empty(n)) {
      const auto& a = c.representative.gen();
      for (std::int64_t u = 1; u < n; ++u) {
        if (gcd_i64(u, n) != 1) continue;
        std::array<std::int64_t, 4> ua;
        for (std::size_t i = 0; i < 4; ++i) ua[i] = u * a[i] % n;
        CHECK(canonical_form(CyclicSimplexSpec(n, ua)) == c.canon);
      }
    }
  }
}

TEST_CASE("survey output is deterministic across job counts") {
  TempDir tmp;
  SurveyOptions a{12, tmp.dir / "a.csv", 1, false, 0};
  SurveyOptions b{12, tmp.dir / "b.csv", 2, false, 0};
  run_survey(a);
  run_survey(b);
  CHECK(slurp(a.csv_path) == slurp(b.csv_path));
}

TEST_CASE("survey resume extends an earlier run") {
  TempDir tmp;
  fs::path part = tmp.dir / "part.csv";
  run_survey(SurveyOptions{6, part, 2, false, 0});
  SurveySummary resumed = run_survey(SurveyOptions{12, part, 2, true, 0});
  CHECK(resumed.completed_through == 12);

  fs::path fresh = tmp.dir / "fresh.csv";
  run_survey(SurveyOptions{12, fresh, 2, false, 0});
  CHECK(slurp(part) == slurp(fresh));
}

TEST_CASE("survey records round-trip through the csv") {
  TempDir tmp;
  fs::path csv = tmp.dir / "records.csv";
  std::vector<SurveyRecord> records;
  SurveySummary summary = run_survey(SurveyOptions{10, csv, 2, false, 0}, &records);
  CHECK(summary.total_classes == static_cast<std::int64_t>(records.size()));

  auto parsed = read_survey_csv(csv);
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(parsed[i].canon == records[i].canon);
    CHECK(parsed[i].width == records[i].width);
    CHECK(parsed[i].functional == records[i].functional);
    CHECK(parsed[i].family.tag == records[i].family.tag);
  }
}

TEST_CASE("survey summary histogram counts the records") {
  TempDir tmp;
  std::vector<SurveyRecord> records;
  SurveySummary summary = run_survey(SurveyOptions{12, tmp.dir / "h.csv", 2, false, 0}, &records);
  std::int64_t total = 0;
  for (const auto& [n, hist] : summary.per_n)
    for (const auto& [w, c] : hist) total += c;
  CHECK(total == summary.total_classes);
  for (const SurveyRecord& rec : records) {
    CHECK(summary.per_n.at(rec.canon.n).at(rec.width) >= 1);
    CHECK(rec.width >= 1);
  }
}

TEST_CASE("small determinants have no class of width three or more") {
  TempDir tmp;
  std::vector<SurveyRecord> records;
  SurveySummary summary = run_survey(SurveyOptions{20, tmp.dir / "w.csv", 2, false, 0}, &records);
  for (const auto& [w, c] : summary.width_totals) CHECK(w <= 2);

  SurveySummary tiny = run_survey(SurveyOptions{1, tmp.dir / "one.csv", 1, false, 0});
  CHECK(tiny.total_classes == 1);
  CHECK(tiny.width_totals.at(1) == 1);
}

TEST_CASE("survey records revalidate against their classes") {
  TempDir tmp;
  std::vector<SurveyRecord> records;
  run_survey(SurveyOptions{12, tmp.dir / "v.csv", 2, false, 0}, &records);
  std::map<std::int64_t, std::vector<EmptyClass>> classes;
  for (const SurveyRecord& rec : records) {
    auto& cls = classes.try_emplace(rec.canon.n, std::vector<EmptyClass>{}).first->second;
    if (cls.empty()) cls = enumerate_empty(rec.canon.n);
    const EmptyClass* match = nullptr;
    for (const EmptyClass& c : cls)
      if (c.canon == rec.canon) match = &c;
    REQUIRE(match != nullptr);
    CHECK(is_empty(match->representative).empty);
    CHECK(match->representative.lattice().dual_member(rec.functional));
    std::int64_t mx = 0, mn = 0;
    for (std::int64_t v : rec.functional) {
      mx = std::max(mx, v);
      mn = std::min(mn, v);
    }
    CHECK(mx - mn == rec.width);
  }
}

TEST_CASE("family matches are reproducible") {
  TempDir tmp;
  std::vector<SurveyRecord> records;
  run_survey(SurveyOptions{12, tmp.dir / "m.csv", 2, false, 0}, &records);
  std::int64_t matched = 0;
  for (const SurveyRecord& rec : records) {
    if (rec.family.tag.empty()) continue;
    ++matched;
    const FamilyMatch& m = rec.family;
    FamilyInstance inst = [&] {
      if (m.kind == FamilyKind::table)
        return instantiate(mmm_table()[static_cast<std::size_t>(m.row_id - 1)], m.drop_index,
                           m.k, m.n);
      if (m.kind == FamilyKind::family_i)
        return family_parametric(FamilyKind::family_i, m.params, m.n, m.drop_index);
      std::array<std::int64_t, 2> xy = {m.params[0], m.params[1]};
      return family_parametric(FamilyKind::family_ii, xy, m.n, m.drop_index);
    }();
    CHECK(canonical_form(inst.spec) == rec.canon);
  }
  CHECK(matched > 0);
}

TEST_CASE("budget clamps the survey and marks it partial") {
  TempDir tmp;
  SurveySummary s = run_survey(SurveyOptions{10, tmp.dir / "b.csv", 1, false, 5});
  CHECK(s.partial);
  CHECK(s.effective_max == 5);
  CHECK(s.completed_through == 5);
  CHECK(s.to_json().find("\"partial\": true") != std::string::npos);

  // resuming past the budget keeps clamping
  SurveySummary s2 = run_survey(SurveyOptions{10, tmp.dir / "b.csv", 1, true, 5});
  CHECK(s2.partial);
  CHECK(s2.completed_through == 5);
}

TEST_CASE("budget comes from the environment with a hard default") {
  ::unsetenv("SIMPLEXLAB_MAX_DET");
  CHECK(survey_budget() == 150);
  ::setenv("SIMPLEXLAB_MAX_DET", "42", 1);
  CHECK(survey_budget() == 42);
  ::setenv("SIMPLEXLAB_MAX_DET", "nope", 1);
  CHECK_THROWS_AS(survey_budget(), std::invalid_argument);
  ::unsetenv("SIMPLEXLAB_MAX_DET");
}

TEST_CASE("resume refuses a tampered csv") {
  TempDir tmp;
  fs::path csv = tmp.dir / "t.csv";
  run_survey(SurveyOptions{8, csv, 1, false, 0});
  // flip a family tag
  std::string text = slurp(csv);
  auto pos = text.rfind(",row");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 5, ",rowX");
  std::ofstream(csv, std::ios::trunc) << text;
  CHECK_THROWS_AS(run_survey(SurveyOptions{10, csv, 1, true, 0}), std::runtime_error);
}
