#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplexlab/mmm.hpp"
#include "simplexlab/simplex.hpp"
#include "simplexlab/width.hpp"

namespace simplexlab {

struct EmptyClass {
  CanonicalForm canon;
  CyclicSimplexSpec representative;
};

// All canonical classes of empty cyclic specs of determinant exactly n,
// each with the first representative found. Deterministic: sorted by
// canonical tuple.
std::vector<EmptyClass> enumerate_empty(std::int64_t n);

// How a surveyed class was produced by one of the known families, if at all.
// `tag` is "" (no match), "row<k>", "i" or "ii"; the remaining fields make
// the match reproducible through instantiate / family_parametric.
struct FamilyMatch {
  std::string tag;
  FamilyKind kind = FamilyKind::table;
  int row_id = 0;
  int drop_index = 0;
  std::int64_t k = 1;
  std::int64_t n = 1;
  std::array<std::int64_t, 3> params{};
};

FamilyMatch match_family(const CanonicalForm& canon);

struct SurveyRecord {
  CanonicalForm canon;
  std::int64_t width = 0;
  std::array<std::int64_t, 4> functional{};
  FamilyMatch family;
};

struct SurveyOptions {
  std::int64_t n_max = 1;
  std::filesystem::path csv_path;
  int jobs = 0;                     // 0 = hardware concurrency
  bool resume = false;              // extend an earlier completed run
  std::int64_t budget_override = 0; // 0 = SIMPLEXLAB_MAX_DET or default
};

struct SurveySummary {
  std::int64_t requested_max = 0;
  std::int64_t effective_max = 0;
  std::int64_t budget = 0;
  bool partial = false;  // set when the budget truncated the request
  std::int64_t completed_through = 0;
  std::int64_t total_classes = 0;
  std::map<std::int64_t, std::map<std::int64_t, std::int64_t>> per_n;  // n -> width -> count
  std::map<std::int64_t, std::int64_t> width_totals;
  double runtime_ms = 0.0;

  std::string to_json() const;
};

// Runs the survey, writes the CSV (schema:
// N,a1,a2,a3,a4,a5,width,y1,y2,y3,y4,family — the a's are the canonical
// 5-tuple) and a JSON summary next to it (<csv stem>.summary.json). Output
// is sorted by (N, tuple) and independent of the job count.
SurveySummary run_survey(const SurveyOptions& opts,
                         std::vector<SurveyRecord>* out_records = nullptr);

std::vector<SurveyRecord> read_survey_csv(const std::filesystem::path& path);

std::filesystem::path summary_path_for(const std::filesystem::path& csv_path);

// Hard default 150; SIMPLEXLAB_MAX_DET overrides.
std::int64_t survey_budget();

}  // namespace simplexlab
