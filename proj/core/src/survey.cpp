#include "simplexlab/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace simplexlab {

namespace {

// Emptiness scan shared by the enumerator: residues of k*a advance
// incrementally; empty iff every nonzero multiple has digit sum > n.
bool empty_scan(std::int64_t n, const std::array<std::int64_t, 4>& a) {
  std::array<std::int64_t, 4> r = {0, 0, 0, 0};
  for (std::int64_t k = 1; k < n; ++k) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      r[i] += a[i];
      if (r[i] >= n) r[i] -= n;
      sum += r[i];
    }
    if (sum <= n) return false;
  }
  return true;
}

std::array<std::int64_t, 5> extend_tuple(std::int64_t n, const std::array<std::int64_t, 4>& a) {
  return {a[0], a[1], a[2], a[3], floor_mod_i64(-(a[0] + a[1] + a[2] + a[3]), n)};
}

// Multiset equality of two sorted-on-demand 3-element collections.
bool same_multiset3(std::array<std::int64_t, 3> a, std::array<std::int64_t, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::optional<FamilyMatch> match_table_row(const CanonicalForm& canon) {
  for (const Quintuple& q : mmm_table()) {
    CanonicalForm row_canon = canonicalize_tuple(canon.n, {q.entries[0], q.entries[1],
                                                           q.entries[2], q.entries[3],
                                                           q.entries[4]});
    if (row_canon != canon) continue;
    for (int j = 1; j <= 5; ++j) {
      try {
        FamilyInstance inst = instantiate(q, j, 1, canon.n);
        if (canonical_form(inst.spec) != canon) continue;  // cannot happen; guards the contract
        FamilyMatch m;
        m.tag = "row" + std::to_string(q.id);
        m.kind = FamilyKind::table;
        m.row_id = q.id;
        m.drop_index = j;
        m.k = 1;
        m.n = canon.n;
        return m;
      } catch (const std::invalid_argument&) {
        continue;  // degenerate projection, try the next coordinate
      }
    }
  }
  return std::nullopt;
}

std::optional<FamilyMatch> match_family_i(const CanonicalForm& canon) {
  std::int64_t n = canon.n;
  const auto& t = canon.tuple;
  for (std::size_t p1 = 0; p1 < 5; ++p1)
    for (std::size_t p2 = 0; p2 < 5; ++p2) {
      if (p1 == p2 || (t[p1] + t[p2]) % n != 0) continue;
      std::array<std::int64_t, 3> rest{};
      std::size_t r = 0;
      for (std::size_t i = 0; i < 5; ++i)
        if (i != p1 && i != p2) rest[r++] = t[i];
      // (x, -x, y, z, -y-z) with x = t[p1]; the remaining three always sum
      // to zero mod n, so any assignment works.
      std::array<std::int64_t, 3> params = {t[p1], rest[0], rest[1]};
      for (int j = 1; j <= 5; ++j) {
        try {
          FamilyInstance inst = family_parametric(FamilyKind::family_i, params, n, j);
          if (canonical_form(inst.spec) != canon) continue;
          FamilyMatch m;
          m.tag = "i";
          m.kind = FamilyKind::family_i;
          m.drop_index = j;
          m.n = n;
          m.params = params;
          return m;
        } catch (const std::invalid_argument&) {
          continue;
        }
      }
    }
  return std::nullopt;
}

std::optional<FamilyMatch> match_family_ii(const CanonicalForm& canon) {
  std::int64_t n = canon.n;
  const auto& t = canon.tuple;
  for (std::size_t px = 0; px < 5; ++px)
    for (std::size_t py = 0; py < 5; ++py) {
      if (px == py) continue;
      std::int64_t x = t[px], y = t[py];
      std::array<std::int64_t, 3> expect = {floor_mod_i64(-2 * x, n), floor_mod_i64(-2 * y, n),
                                            floor_mod_i64(x + y, n)};
      std::array<std::int64_t, 3> rest{};
      std::size_t r = 0;
      for (std::size_t i = 0; i < 5; ++i)
        if (i != px && i != py) rest[r++] = t[i];
      if (!same_multiset3(expect, rest)) continue;
      for (int j = 1; j <= 5; ++j) {
        try {
          std::array<std::int64_t, 2> params = {x, y};
          FamilyInstance inst = family_parametric(FamilyKind::family_ii, params, n, j);
          if (canonical_form(inst.spec) != canon) continue;
          FamilyMatch m;
          m.tag = "ii";
          m.kind = FamilyKind::family_ii;
          m.drop_index = j;
          m.n = n;
          m.params = {x, y, 0};
          return m;
        } catch (const std::invalid_argument&) {
          continue;
        }
      }
    }
  return std::nullopt;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

constexpr const char* kCsvHeader = "N,a1,a2,a3,a4,a5,width,y1,y2,y3,y4,family";

}  // namespace

std::vector<EmptyClass> enumerate_empty(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("enumerate_empty: determinant must be positive");
  std::vector<EmptyClass> out;
  if (n == 1) {
    CyclicSimplexSpec spec(1, {0, 0, 0, 0});
    out.push_back({canonical_form(spec), spec});
    return out;
  }
  // Emptiness and the canonical form are invariant under permuting the four
  // residues, so scanning nondecreasing tuples visits every class; the
  // canonical-form map removes the remaining unit-scaling duplicates.
  std::map<std::array<std::int64_t, 5>, CyclicSimplexSpec> classes;
  std::array<std::int64_t, 4> a{};
  for (a[0] = 0; a[0] < n; ++a[0])
    for (a[1] = a[0]; a[1] < n; ++a[1])
      for (a[2] = a[1]; a[2] < n; ++a[2]) {
        std::int64_t g3 = gcd_i64(gcd_i64(gcd_i64(a[0], a[1]), a[2]), n);
        for (a[3] = a[2]; a[3] < n; ++a[3]) {
          if (gcd_i64(g3, a[3]) != 1) continue;
          if (!empty_scan(n, a)) continue;
          CanonicalForm canon = canonicalize_tuple(n, extend_tuple(n, a));
          classes.try_emplace(canon.tuple, CyclicSimplexSpec(n, a));
        }
      }
  for (const auto& [tuple, spec] : classes) out.push_back({CanonicalForm{n, tuple}, spec});
  return out;
}

FamilyMatch match_family(const CanonicalForm& canon) {
  if (auto m = match_table_row(canon)) return *m;
  if (auto m = match_family_i(canon)) return *m;
  if (auto m = match_family_ii(canon)) return *m;
  return FamilyMatch{};
}

std::int64_t survey_budget() {
  if (const char* env = std::getenv("SIMPLEXLAB_MAX_DET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return v;
    throw std::invalid_argument("SIMPLEXLAB_MAX_DET must be a positive integer");
  }
  return 150;
}

std::filesystem::path summary_path_for(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".summary.json");
  return p;
}

std::vector<SurveyRecord> read_survey_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != split_csv_line(kCsvHeader))
    throw std::runtime_error("survey csv: unexpected header in " + path.string());
  std::vector<SurveyRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 12) throw std::runtime_error("survey csv: malformed row");
    SurveyRecord rec;
    rec.canon.n = std::stoll(f[0]);
    for (std::size_t i = 0; i < 5; ++i) rec.canon.tuple[i] = std::stoll(f[1 + i]);
    rec.width = std::stoll(f[6]);
    for (std::size_t i = 0; i < 4; ++i) rec.functional[i] = std::stoll(f[7 + i]);
    rec.family.tag = f[11];
    out.push_back(std::move(rec));
  }
  return out;
}

SurveySummary run_survey(const SurveyOptions& opts, std::vector<SurveyRecord>* out_records) {
  auto start = std::chrono::steady_clock::now();
  if (opts.n_max < 1) throw std::invalid_argument("survey: n_max must be positive");
  if (opts.csv_path.empty()) throw std::invalid_argument("survey: output path required");

  SurveySummary summary;
  summary.requested_max = opts.n_max;
  summary.budget = opts.budget_override > 0 ? opts.budget_override : survey_budget();
  summary.effective_max = std::min(opts.n_max, summary.budget);
  summary.partial = summary.effective_max < opts.n_max;

  std::int64_t resume_from = 0;
  std::vector<SurveyRecord> records;
  if (opts.resume && std::filesystem::exists(opts.csv_path)) {
    std::ifstream sin(summary_path_for(opts.csv_path));
    if (!sin) throw std::runtime_error("survey resume: summary file missing");
    nlohmann::json old = nlohmann::json::parse(sin);
    resume_from = old.at("completed_through").get<std::int64_t>();
    resume_from = std::min(resume_from, summary.effective_max);
    for (SurveyRecord& rec : read_survey_csv(opts.csv_path)) {
      if (rec.canon.n > resume_from) continue;
      FamilyMatch fresh = match_family(rec.canon);
      if (fresh.tag != rec.family.tag)
        throw std::runtime_error("survey resume: family tag mismatch for " + rec.canon.str());
      rec.family = fresh;
      records.push_back(std::move(rec));
    }
  }

  // Work queue over determinants; each worker owns whole determinants so
  // the per-N record blocks are deterministic regardless of scheduling.
  std::vector<std::int64_t> todo;
  for (std::int64_t n = resume_from + 1; n <= summary.effective_max; ++n) todo.push_back(n);
  std::vector<std::vector<SurveyRecord>> blocks(todo.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr worker_error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      while (true) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= todo.size()) return;
        std::int64_t n = todo[idx];
        std::vector<SurveyRecord> block;
        for (const EmptyClass& cls : enumerate_empty(n)) {
          WidthCertificate cert = width(cls.representative);
          SurveyRecord rec;
          rec.canon = cls.canon;
          rec.width = cert.width;
          rec.functional = cert.functional;
          rec.family = match_family(cls.canon);
          block.push_back(std::move(rec));
        }
        blocks[idx] = std::move(block);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!worker_error) worker_error = std::current_exception();
    }
  };

  unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(todo.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (worker_error) std::rethrow_exception(worker_error);

  for (auto& block : blocks)
    for (auto& rec : block) records.push_back(std::move(rec));
  std::sort(records.begin(), records.end(), [](const SurveyRecord& a, const SurveyRecord& b) {
    if (a.canon.n != b.canon.n) return a.canon.n < b.canon.n;
    return a.canon.tuple < b.canon.tuple;
  });

  summary.completed_through = summary.effective_max;
  summary.total_classes = static_cast<std::int64_t>(records.size());
  for (const SurveyRecord& rec : records) {
    ++summary.per_n[rec.canon.n][rec.width];
    ++summary.width_totals[rec.width];
  }

  std::ofstream out(opts.csv_path, std::ios::trunc);
  if (!out) throw std::runtime_error("survey: cannot write " + opts.csv_path.string());
  out << kCsvHeader << '\n';
  for (const SurveyRecord& rec : records) {
    out << rec.canon.n;
    for (std::int64_t v : rec.canon.tuple) out << ',' << v;
    out << ',' << rec.width;
    for (std::int64_t v : rec.functional) out << ',' << v;
    out << ',' << rec.family.tag << '\n';
  }
  out.close();
  if (!out) throw std::runtime_error("survey: write failed for " + opts.csv_path.string());

  summary.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::ofstream sum_out(summary_path_for(opts.csv_path), std::ios::trunc);
  if (!sum_out) throw std::runtime_error("survey: cannot write summary");
  sum_out << summary.to_json() << '\n';

  if (out_records) *out_records = std::move(records);
  return summary;
}

std::string SurveySummary::to_json() const {
  nlohmann::json j;
  j["requested_max"] = requested_max;
  j["effective_max"] = effective_max;
  j["budget"] = budget;
  j["partial"] = partial;
  j["completed_through"] = completed_through;
  j["total_classes"] = total_classes;
  nlohmann::json per;
  for (const auto& [n, hist] : per_n) {
    nlohmann::json h;
    for (const auto& [w, c] : hist) h[std::to_string(w)] = c;
    per[std::to_string(n)] = h;
  }
  j["per_n"] = per;
  nlohmann::json totals;
  for (const auto& [w, c] : width_totals) totals[std::to_string(w)] = c;
  j["width_totals"] = totals;
  j["runtime_ms"] = runtime_ms;
  return j.dump(2);
}

}  // namespace simplexlab
