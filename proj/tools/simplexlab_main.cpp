// simplexlab command-line front end. One binary, subcommand style; --json
// switches every command to a single machine-readable envelope on stdout.
// Exit codes: 0 = success / all properties hold, 1 = a checked property
// failed (non-empty simplex, lemma violation, ...), 2 = usage or input error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "simplexlab/fp.hpp"
#include "simplexlab/mmm.hpp"
#include "simplexlab/simplex.hpp"
#include "simplexlab/survey.hpp"
#include "simplexlab/width.hpp"

namespace {

using json = nlohmann::json;
using namespace simplexlab;

std::array<std::int64_t, 4> parse_gen(const std::string& text) {
  std::array<std::int64_t, 4> out{};
  std::stringstream in(text);
  std::string tok;
  std::size_t i = 0;
  while (std::getline(in, tok, ',')) {
    if (i >= 4) throw std::invalid_argument("--gen expects exactly 4 comma-separated integers");
    std::size_t used = 0;
    out[i++] = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("--gen: bad integer '" + tok + "'");
  }
  if (i != 4) throw std::invalid_argument("--gen expects exactly 4 comma-separated integers");
  return out;
}

template <typename C>
std::string tuple_str(const C& v) {
  std::string out = "(";
  bool first = true;
  for (auto x : v) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + ")";
}

std::string point_str(const std::vector<Rational>& pt) {
  std::string out = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) out += ',';
    out += pt[i].str();
  }
  return out + ")";
}

json witness_json(const EmptinessWitness& w) {
  json j;
  j["k"] = w.k;
  json pt = json::array();
  for (const Rational& c : w.point) pt.push_back(c.str());
  j["point"] = pt;
  return j;
}

json group_json(const GroupStructure& g) {
  return json{{"invariant_factors", g.invariant_factors}, {"order", g.order}};
}

json certificate_json(const WidthCertificate& c) {
  return json{{"width", c.width},
              {"functional", c.functional},
              {"vertex_values", c.vertex_values},
              {"optimal", c.optimal}};
}

std::string group_str(const GroupStructure& g) {
  if (g.invariant_factors.empty()) return "trivial";
  std::string out = "(";
  for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.invariant_factors[i]);
  }
  return out + ")";
}

// Shared input block: either --det/--gen or a vertices file.
struct SimplexInput {
  std::int64_t det = 0;
  std::string gen_text;
  std::string vertices_path;
  int pivot = 0;

  void attach(CLI::App* cmd) {
    auto* det_opt = cmd->add_option("--det", det, "determinant N of the cyclic spec");
    auto* gen_opt =
        cmd->add_option("--gen", gen_text, "generator residues a1,a2,a3,a4 (requires --det)");
    auto* file_opt = cmd->add_option("--vertices", vertices_path,
                                     "file with 5 vertex lines of 4 integers ('#' comments)");
    cmd->add_option("--pivot", pivot, "pivot vertex for standard-form conversion (0..4)")
        ->check(CLI::Range(0, 4));
    gen_opt->needs(det_opt);
    det_opt->needs(gen_opt);
    file_opt->excludes(det_opt);
    det_opt->excludes(file_opt);
  }

  bool has_spec() const { return det != 0; }
  bool has_vertices() const { return !vertices_path.empty(); }

  void require_any() const {
    if (!has_spec() && !has_vertices())
      throw CLI::ValidationError("input", "provide --det/--gen or --vertices");
  }

  CyclicSimplexSpec spec() const { return CyclicSimplexSpec(det, parse_gen(gen_text)); }

  json inputs_json(const std::string& command) const {
    json j{{"command", command}};
    if (has_spec()) {
      j["det"] = det;
      j["gen"] = parse_gen(gen_text);
    }
    if (has_vertices()) {
      j["vertices"] = vertices_path;
      j["pivot"] = pivot;
    }
    return j;
  }
};

struct Emitter {
  bool json_mode = false;
  json inputs;
  std::vector<std::string> lines;
  json result;

  void say(const std::string& line) { lines.push_back(line); }

  void flush(const std::string& command, double ms) const {
    if (json_mode) {
      json envelope{{"command", command}, {"inputs", inputs}, {"result", result},
                    {"timing_ms", ms}};
      std::cout << envelope.dump(2) << '\n';
    } else {
      for (const auto& l : lines) std::cout << l << '\n';
    }
  }
};

int run_empty(const SimplexInput& in, Emitter& em) {
  EmptinessResult res;
  if (in.has_spec()) {
    res = is_empty(in.spec());
  } else {
    StandardForm sf = to_standard_form(load_simplex_file(in.vertices_path), in.pivot);
    if (sf.spec) {
      res = is_empty(*sf.spec);
    } else {
      em.say("group " + group_str(sf.group) + " non-cyclic");
      em.result["group"] = group_json(sf.group);
      res = is_empty_general(sf.lattice);
    }
  }
  em.result["empty"] = res.empty;
  if (res.empty) {
    em.say("empty");
    return 0;
  }
  const EmptinessWitness& w = *res.witness;
  em.result["witness"] = witness_json(w);
  if (w.k > 0)
    em.say("not empty; witness k=" + std::to_string(w.k) + " point " + point_str(w.point));
  else
    em.say("not empty; witness point " + point_str(w.point));
  return 1;
}

int run_width(const SimplexInput& in, Emitter& em) {
  WidthCertificate cert =
      in.has_spec() ? width(in.spec()) : width_general(load_simplex_file(in.vertices_path));
  em.result = certificate_json(cert);
  em.say("width " + std::to_string(cert.width));
  em.say("functional " + tuple_str(cert.functional));
  em.say("vertex values " + tuple_str(cert.vertex_values));
  em.say(std::string("optimal ") + (cert.optimal ? "yes" : "no"));
  return 0;
}

int run_canon(const SimplexInput& in, Emitter& em) {
  std::optional<CyclicSimplexSpec> spec;
  if (in.has_spec()) {
    spec = in.spec();
  } else {
    StandardForm sf = to_standard_form(load_simplex_file(in.vertices_path), in.pivot);
    if (!sf.spec) {
      em.say("group " + group_str(sf.group) + " non-cyclic; no canonical form");
      em.result["cyclic"] = false;
      em.result["group"] = group_json(sf.group);
      return 0;
    }
    spec = sf.spec;
  }
  CanonicalForm c = canonical_form(*spec);
  em.result["cyclic"] = true;
  em.result["det"] = c.n;
  em.result["tuple"] = c.tuple;
  em.say("canonical N=" + std::to_string(c.n) + " tuple=" + tuple_str(c.tuple));
  return 0;
}

int run_group(const SimplexInput& in, Emitter& em) {
  GroupStructure g;
  if (in.has_spec()) {
    g = in.spec().lattice().group_structure();
  } else {
    g = to_standard_form(load_simplex_file(in.vertices_path), in.pivot).group;
  }
  em.result = group_json(g);
  em.say("invariant factors " + group_str(g) + "; order " + std::to_string(g.order));
  return 0;
}

int run_fp_scan(int lemma, std::int64_t pmax, Emitter& em) {
  std::vector<fp::LemmaReport> reports;
  for (std::int64_t p = 2; p <= pmax; ++p) {
    if (!is_prime(p)) continue;
    if (lemma == 2 && p == 2) continue;
    reports.push_back(lemma == 1   ? fp::verify_lemma1(p)
                      : lemma == 2 ? fp::verify_lemma2(p)
                                   : fp::verify_lemma3(p));
  }
  std::int64_t failures = 0;
  std::string counts;
  json jr = json::array();
  for (const auto& r : reports) {
    failures += r.failures;
    if (!counts.empty()) counts += '+';
    counts += std::to_string(r.subspaces_checked);
    em.say("p=" + std::to_string(r.p) + ": checked " + std::to_string(r.subspaces_checked) +
           ", failures " + std::to_string(r.failures) + ", max m " + std::to_string(r.max_m));
    jr.push_back(json::parse(r.to_json()));
  }
  const char* kind = lemma == 3 ? "planes" : "lines";
  em.say(std::string(kind) + " checked: " + counts + ", failures: " + std::to_string(failures));
  em.result["lemma"] = lemma;
  em.result["reports"] = jr;
  em.result["failures"] = failures;
  return failures == 0 ? 0 : 1;
}

const std::vector<Quintuple>& table_or_file(const std::string& path) {
  static std::vector<Quintuple> external;
  if (path.empty()) return mmm_table();
  external = load_quintuple_table(path);
  return external;
}

int run_mmm_verify(const std::string& table_path, Emitter& em) {
  const auto& table = table_or_file(table_path);
  std::int64_t bad = 0;
  json issues = json::array();
  for (const Quintuple& q : table) {
    QuintupleCheck check = verify_quintuple(q);
    if (check.ok()) continue;
    ++bad;
    for (const std::string& issue : check.issues)
      issues.push_back("row " + std::to_string(q.id) + ": " + issue);
  }
  em.result["rows"] = table.size();
  em.result["failed_rows"] = bad;
  em.result["issues"] = issues;
  if (bad == 0) {
    em.say(std::to_string(table.size()) + " quintuples, all relations orthogonal");
    return 0;
  }
  em.say(std::to_string(bad) + " of " + std::to_string(table.size()) + " quintuples failed");
  for (const auto& i : issues) em.say(i.get<std::string>());
  return 1;
}

struct FamilySelector {
  int row = 0;
  std::string family;
  std::int64_t x = 0, y = 0, z = 0;
  std::int64_t k = 1, n = 0;
  int j = 5;

  void attach(CLI::App* cmd) {
    cmd->add_option("--row", row, "table row id (1-based)");
    cmd->add_option("--family", family, "parametric family: i or ii")
        ->check(CLI::IsMember({"i", "ii"}));
    cmd->add_option("--x", x, "family parameter x");
    cmd->add_option("--y", y, "family parameter y");
    cmd->add_option("--z", z, "family parameter z (family i only)");
    cmd->add_option("--k", k, "generator multiplier, coprime to n");
    cmd->add_option("--n", n, "denominator n")->required();
    cmd->add_option("--j", j, "projection index 1..5")->check(CLI::Range(1, 5));
  }

  json inputs_json() const {
    json j{{"row", row}, {"family", family}, {"n", n}, {"k", k}, {"j", this->j}};
    if (!family.empty()) {
      j["x"] = x;
      j["y"] = y;
      if (family == "i") j["z"] = z;
    }
    return j;
  }

  FamilyInstance make(const std::string& table_path) const {
    if ((row != 0) == !family.empty())
      throw CLI::ValidationError("selector", "choose exactly one of --row or --family");
    if (row != 0) {
      const auto& table = table_or_file(table_path);
      if (row < 1 || row > static_cast<int>(table.size()))
        throw CLI::ValidationError("selector", "row id out of range");
      return instantiate(table[static_cast<std::size_t>(row - 1)], j, k, n);
    }
    if (family == "i") {
      std::array<std::int64_t, 3> params = {x, y, z};
      return family_parametric(FamilyKind::family_i, params, n, j);
    }
    std::array<std::int64_t, 2> params = {x, y};
    return family_parametric(FamilyKind::family_ii, params, n, j);
  }
};

json instance_json(const FamilyInstance& inst) {
  json j;
  j["n"] = inst.n;
  j["k"] = inst.k;
  j["drop_index"] = inst.drop_index;
  j["source"] = inst.source;
  j["gen"] = inst.spec.gen();
  return j;
}

int run_mmm_gen(const FamilySelector& sel, const std::string& table_path, Emitter& em) {
  FamilyInstance inst = sel.make(table_path);
  EmptinessResult res = is_empty(inst.spec);
  CanonicalForm canon = canonical_form(inst.spec);
  em.result = instance_json(inst);
  em.result["empty"] = res.empty;
  em.result["canonical"] = {{"det", canon.n}, {"tuple", canon.tuple}};
  em.say("spec N=" + std::to_string(inst.n) + " gen=" + tuple_str(inst.spec.gen()));
  em.say(res.empty ? "empty" : "not empty");
  em.say("canonical N=" + std::to_string(canon.n) + " tuple=" + tuple_str(canon.tuple));
  return 0;
}

int run_mmm_certify(const FamilySelector& sel, const std::string& table_path, Emitter& em) {
  FamilyInstance inst = sel.make(table_path);
  WidthCertificate cert = certify_instance(inst);
  em.result = certificate_json(cert);
  em.result["instance"] = instance_json(inst);
  em.say("certificate width bound " + std::to_string(cert.width));
  em.say("functional " + tuple_str(cert.functional));
  em.say("vertex values " + tuple_str(cert.vertex_values));
  return 0;
}

// Desk-scale reproduction of the width-bound theorem: every empty instance
// drawn from the table families must have optimal width at most 2 and never
// beyond its relation certificate.
int run_mmm_sweep(std::int64_t nmax, const std::string& table_path, Emitter& em) {
  const auto& table = table_or_file(table_path);
  std::int64_t instances = 0, empty_count = 0, violations = 0;
  std::map<std::pair<std::int64_t, std::array<std::int64_t, 5>>, std::int64_t> width_cache;
  json admissible = json::object();
  for (const Quintuple& q : table) {
    std::vector<std::int64_t> ns;
    for (std::int64_t n = 1; n <= nmax; ++n) {
      bool any_empty = false;
      for (int j = 1; j <= 5; ++j) {
        for (std::int64_t k = 1; k < std::max<std::int64_t>(n, 2); ++k) {
          if (gcd_i64(k, n) != 1) continue;
          std::optional<FamilyInstance> inst;
          try {
            inst = instantiate(q, j, k, n);
          } catch (const std::invalid_argument&) {
            continue;  // degenerate projection for this (j, n)
          }
          ++instances;
          if (!is_empty(inst->spec).empty) continue;
          ++empty_count;
          any_empty = true;
          CanonicalForm canon = canonical_form(inst->spec);
          auto key = std::make_pair(canon.n, canon.tuple);
          auto it = width_cache.find(key);
          std::int64_t w = it != width_cache.end() ? it->second : width(inst->spec).width;
          width_cache.emplace(key, w);
          std::int64_t bound = certify_instance(*inst).width;
          if (w > 2 || w > bound) ++violations;
        }
      }
      if (any_empty) ns.push_back(n);
    }
    admissible["row" + std::to_string(q.id)] = ns;
  }
  em.result["nmax"] = nmax;
  em.result["instances"] = instances;
  em.result["empty_instances"] = empty_count;
  em.result["violations"] = violations;
  em.result["admissible_n"] = admissible;
  em.say("instances " + std::to_string(instances) + ", empty " + std::to_string(empty_count) +
         ", width violations " + std::to_string(violations));
  return violations == 0 ? 0 : 1;
}

int run_mmm_noncyclic(std::int64_t pmax, Emitter& em) {
  std::int64_t empties = 0, failures = 0;
  json jr = json::array();
  for (std::int64_t p = 2; p <= pmax; ++p) {
    if (!is_prime(p)) continue;
    NoncyclicSearchReport rep = search_noncyclic_terminal(p);
    fp::LemmaReport lemma = fp::verify_lemma3(p);
    bool agree = rep.passed() == lemma.passed();
    empties += rep.empty_found;
    failures += rep.witness_failures + rep.group_failures + lemma.failures + (agree ? 0 : 1);
    em.say("p=" + std::to_string(p) + ": planes " + std::to_string(rep.planes_checked) +
           ", empty " + std::to_string(rep.empty_found) + ", digit-sum check " +
           (lemma.passed() ? "ok" : "FAILED"));
    json entry = json::parse(rep.to_json());
    entry["lemma3_failures"] = lemma.failures;
    jr.push_back(entry);
  }
  em.result["reports"] = jr;
  em.result["empty_found"] = empties;
  em.say("empty instances: " + std::to_string(empties));
  return (empties == 0 && failures == 0) ? 0 : 1;
}

int run_counterexample5(std::int64_t p, std::int64_t a, std::int64_t b, Emitter& em) {
  SuperLattice lattice = dim5_counterexample(p, a, b);
  GroupStructure g = lattice.group_structure();
  EmptinessResult res = is_empty_general(lattice);
  em.result["p"] = p;
  em.result["a"] = a;
  em.result["b"] = b;
  em.result["group"] = group_json(g);
  em.result["empty"] = res.empty;
  if (!res.empty) em.result["witness"] = witness_json(*res.witness);
  std::string cyc = g.cyclic() ? "cyclic" : "non-cyclic";
  em.say("group " + group_str(g) + " " + cyc + "; simplex " +
         (res.empty ? "empty" : "not empty"));
  bool expected = !g.cyclic() && res.empty;
  return expected ? 0 : 1;
}

int run_survey(std::int64_t max_det, const std::string& out_path, int jobs, bool resume,
               Emitter& em) {
  SurveyOptions opts;
  opts.n_max = max_det;
  opts.csv_path = out_path;
  opts.jobs = jobs;
  opts.resume = resume;
  SurveySummary summary = run_survey(opts);
  em.result = json::parse(summary.to_json());
  em.result["csv"] = out_path;
  std::string widths;
  for (const auto& [w, c] : summary.width_totals) {
    if (!widths.empty()) widths += ", ";
    widths += std::to_string(w) + ": " + std::to_string(c);
  }
  em.say("N<=" + std::to_string(summary.completed_through) + ": " +
         std::to_string(summary.total_classes) + " classes; widths {" + widths + "}");
  em.say("csv " + out_path);
  if (summary.partial) {
    em.say("PARTIAL: budget " + std::to_string(summary.budget) + " truncated the requested " +
           std::to_string(summary.requested_max) + " (see SIMPLEXLAB_MAX_DET)");
    std::cerr << "warning: partial results, budget " << summary.budget << " < requested "
              << summary.requested_max << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice geometry of empty 4-simplices"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit one JSON envelope on stdout");

  SimplexInput empty_in, width_in, canon_in, group_in;
  auto* cmd_empty = app.add_subcommand("empty", "test whether a simplex is empty");
  empty_in.attach(cmd_empty);
  auto* cmd_width = app.add_subcommand("width", "exact lattice width with certificate");
  width_in.attach(cmd_width);
  auto* cmd_canon = app.add_subcommand("canon", "canonical form of a cyclic spec");
  canon_in.attach(cmd_canon);
  auto* cmd_group = app.add_subcommand("group", "quotient group structure");
  group_in.attach(cmd_group);

  int lemma = 1;
  std::int64_t pmax = 7;
  auto* cmd_fp = app.add_subcommand("fp-scan", "exhaustive digit-sum lemma verification");
  cmd_fp->add_option("--lemma", lemma, "lemma number (1..3)")->required()->check(CLI::Range(1, 3));
  cmd_fp->add_option("--pmax", pmax, "largest prime to scan")->required();

  auto* cmd_mmm = app.add_subcommand("mmm", "stable quintuple families");
  cmd_mmm->require_subcommand(1);
  std::string table_path;
  cmd_mmm->add_option("--table", table_path, "external quintuple table file");
  auto* mmm_verify = cmd_mmm->add_subcommand("verify", "validate the quintuple table");
  FamilySelector gen_sel, cert_sel;
  auto* mmm_gen = cmd_mmm->add_subcommand("gen", "instantiate one family member");
  gen_sel.attach(mmm_gen);
  auto* mmm_certify = cmd_mmm->add_subcommand("certify", "width certificate from a relation");
  cert_sel.attach(mmm_certify);
  std::int64_t sweep_nmax = 60;
  auto* mmm_sweep = cmd_mmm->add_subcommand("sweep", "width-bound sweep over table instances");
  mmm_sweep->add_option("--nmax", sweep_nmax, "largest denominator");
  std::int64_t noncyclic_pmax = 7;
  auto* mmm_noncyclic =
      cmd_mmm->add_subcommand("noncyclic", "search for empty non-cyclic quotients");
  mmm_noncyclic->add_option("--pmax", noncyclic_pmax, "largest prime to scan");

  std::int64_t ce_p = 3, ce_a = 1, ce_b = 1;
  auto* cmd_ce = app.add_subcommand("counterexample5", "dimension-5 non-cyclic empty lattice");
  cmd_ce->add_option("--p", ce_p, "odd prime")->required();
  cmd_ce->add_option("--a", ce_a, "first generator tail, not divisible by p")->required();
  cmd_ce->add_option("--b", ce_b, "second generator tail, not divisible by p")->required();

  std::int64_t survey_max = 20;
  std::string survey_out;
  int survey_jobs = 0;
  bool survey_resume = false;
  auto* cmd_survey = app.add_subcommand("survey", "enumerate empty classes up to a determinant");
  cmd_survey->add_option("--max-det", survey_max, "largest determinant")->required();
  cmd_survey->add_option("--out", survey_out, "CSV output path")->required();
  cmd_survey->add_option("--jobs", survey_jobs, "worker threads (default: all cores)");
  cmd_survey->add_flag("--resume", survey_resume, "extend an earlier completed run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Emitter em;
  em.json_mode = json_mode;
  auto start = std::chrono::steady_clock::now();
  int rc = 2;
  std::string command;
  try {
    if (cmd_empty->parsed()) {
      command = "empty";
      empty_in.require_any();
      em.inputs = empty_in.inputs_json(command);
      rc = run_empty(empty_in, em);
    } else if (cmd_width->parsed()) {
      command = "width";
      width_in.require_any();
      em.inputs = width_in.inputs_json(command);
      rc = run_width(width_in, em);
    } else if (cmd_canon->parsed()) {
      command = "canon";
      canon_in.require_any();
      em.inputs = canon_in.inputs_json(command);
      rc = run_canon(canon_in, em);
    } else if (cmd_group->parsed()) {
      command = "group";
      group_in.require_any();
      em.inputs = group_in.inputs_json(command);
      rc = run_group(group_in, em);
    } else if (cmd_fp->parsed()) {
      command = "fp-scan";
      em.inputs = {{"lemma", lemma}, {"pmax", pmax}};
      rc = run_fp_scan(lemma, pmax, em);
    } else if (cmd_mmm->parsed()) {
      if (mmm_verify->parsed()) {
        command = "mmm verify";
        em.inputs = {{"table", table_path}};
        rc = run_mmm_verify(table_path, em);
      } else if (mmm_gen->parsed()) {
        command = "mmm gen";
        em.inputs = gen_sel.inputs_json();
        rc = run_mmm_gen(gen_sel, table_path, em);
      } else if (mmm_certify->parsed()) {
        command = "mmm certify";
        em.inputs = cert_sel.inputs_json();
        rc = run_mmm_certify(cert_sel, table_path, em);
      } else if (mmm_sweep->parsed()) {
        command = "mmm sweep";
        em.inputs = {{"nmax", sweep_nmax}, {"table", table_path}};
        rc = run_mmm_sweep(sweep_nmax, table_path, em);
      } else {
        command = "mmm noncyclic";
        em.inputs = {{"pmax", noncyclic_pmax}};
        rc = run_mmm_noncyclic(noncyclic_pmax, em);
      }
    } else if (cmd_ce->parsed()) {
      command = "counterexample5";
      em.inputs = {{"p", ce_p}, {"a", ce_a}, {"b", ce_b}};
      rc = run_counterexample5(ce_p, ce_a, ce_b, em);
    } else if (cmd_survey->parsed()) {
      command = "survey";
      em.inputs = {{"max_det", survey_max},
                   {"out", survey_out},
                   {"jobs", survey_jobs},
                   {"resume", survey_resume}};
      rc = run_survey(survey_max, survey_out, survey_jobs, survey_resume, em);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  em.flush(command, ms);
  return rc;
}
