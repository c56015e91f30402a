#include "simplexlab/mmm.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "simplexlab/fp.hpp"
#include "simplexlab/mmm_table_data.hpp"

namespace simplexlab {

namespace {

std::array<std::int64_t, 5> parse_five(const std::string& text, char sep) {
  std::array<std::int64_t, 5> out{};
  std::istringstream in(text);
  for (std::size_t i = 0; i < 5; ++i) {
    std::string tok;
    if (sep == ' ') {
      if (!(in >> tok)) throw std::invalid_argument("quintuple table: expected 5 integers");
    } else {
      if (!std::getline(in, tok, sep))
        throw std::invalid_argument("quintuple table: expected 5 comma-separated integers");
    }
    std::size_t used = 0;
    out[i] = std::stoll(tok, &used);
    if (tok.substr(used).find_first_not_of(" \t\r") != std::string::npos)
      throw std::invalid_argument("quintuple table: bad integer '" + tok + "'");
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("quintuple table: trailing tokens");
  return out;
}

std::array<std::int64_t, 4> drop_coordinate(const std::array<std::int64_t, 5>& v, int drop_index) {
  std::array<std::int64_t, 4> out{};
  std::size_t j = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == static_cast<std::size_t>(drop_index - 1)) continue;
    out[j++] = v[i];
  }
  return out;
}

FamilyInstance make_instance(FamilyKind kind, int row_id, int drop_index, std::int64_t k,
                             std::int64_t n, std::array<std::int64_t, 3> params,
                             const std::array<std::int64_t, 5>& source,
                             std::vector<std::array<std::int64_t, 5>> relations) {
  if (drop_index < 1 || drop_index > 5)
    throw std::invalid_argument("family instance: drop index must be in 1..5");
  if (n < 1) throw std::invalid_argument("family instance: n must be positive");
  if (gcd_i64(k, n) != 1) throw std::invalid_argument("family instance: k and n must be coprime");

  std::array<std::int64_t, 4> proj = drop_coordinate(source, drop_index);
  std::array<std::int64_t, 4> gen{};
  std::int64_t g = n;
  for (std::size_t i = 0; i < 4; ++i) {
    gen[i] = floor_mod(Int{k} * Int{proj[i]}, Int{n}).to_int64();
    g = gcd_i64(g, gen[i]);
  }
  if (g != 1)
    throw std::invalid_argument("family instance: projected generator is degenerate (gcd " +
                                std::to_string(g) + " with n)");
  return FamilyInstance{kind,  row_id, drop_index, k, n, params, source, std::move(relations),
                        CyclicSimplexSpec(n, gen)};
}

}  // namespace

std::vector<Quintuple> parse_quintuple_table(std::string_view text) {
  std::vector<Quintuple> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto bar = line.find('|');
    if (bar == std::string::npos)
      throw std::invalid_argument("quintuple table: missing '|' separator");
    Quintuple q;
    q.id = static_cast<int>(rows.size()) + 1;
    q.entries = parse_five(line.substr(0, bar), ' ');
    std::istringstream rels(line.substr(bar + 1));
    std::string rel;
    while (std::getline(rels, rel, ';')) {
      if (rel.find_first_not_of(" \t\r") == std::string::npos) continue;
      q.relations.push_back(parse_five(rel, ','));
    }
    if (q.relations.empty()) throw std::invalid_argument("quintuple table: row without relations");
    rows.push_back(std::move(q));
  }
  return rows;
}

std::vector<Quintuple> load_quintuple_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quintuple_table(buf.str());
}

const std::vector<Quintuple>& mmm_table() {
  static const std::vector<Quintuple> table = [] {
    std::vector<Quintuple> rows = parse_quintuple_table(detail::kQuintupleTableText);
    for (const Quintuple& q : rows) {
      QuintupleCheck check = verify_quintuple(q);
      if (!check.ok())
        throw std::logic_error("embedded quintuple table is corrupt at row " +
                               std::to_string(q.id) + ": " +
                               (check.issues.empty() ? "sum not zero" : check.issues.front()));
    }
    return rows;
  }();
  return table;
}

QuintupleCheck verify_quintuple(const Quintuple& q) {
  QuintupleCheck out;
  out.id = q.id;
  Int sum{0};
  for (std::int64_t e : q.entries) sum += Int{e};
  out.sum_zero = sum.is_zero();
  if (!out.sum_zero) out.issues.push_back("entries do not sum to zero");
  for (const auto& rel : q.relations) {
    ++out.relations_checked;
    Int dot{0};
    bool in_range = true;
    for (std::size_t i = 0; i < 5; ++i) {
      if (rel[i] < 0 || rel[i] > 2) in_range = false;
      dot += Int{rel[i]} * Int{q.entries[i]};
    }
    if (!in_range) out.issues.push_back("relation has a coefficient outside {0,1,2}");
    if (!dot.is_zero()) out.issues.push_back("relation is not orthogonal to the quintuple");
  }
  return out;
}

FamilyInstance instantiate(const Quintuple& q, int drop_index, std::int64_t k, std::int64_t n) {
  return make_instance(FamilyKind::table, q.id, drop_index, k, n, {}, q.entries, q.relations);
}

const std::vector<std::array<std::int64_t, 5>>& parametric_relations(FamilyKind kind) {
  static const std::vector<std::array<std::int64_t, 5>> rel_i = {{1, 1, 0, 0, 0}};
  static const std::vector<std::array<std::int64_t, 5>> rel_ii = {{2, 1, 0, 0, 0},
                                                                  {0, 0, 2, 1, 0}};
  switch (kind) {
    case FamilyKind::family_i:
      return rel_i;
    case FamilyKind::family_ii:
      return rel_ii;
    default:
      throw std::invalid_argument("parametric_relations: table rows carry their own relations");
  }
}

FamilyInstance family_parametric(FamilyKind kind, std::span<const std::int64_t> params,
                                 std::int64_t n, int drop_index) {
  std::array<std::int64_t, 5> source{};
  std::array<std::int64_t, 3> stored{};
  if (kind == FamilyKind::family_i) {
    if (params.size() != 3) throw std::invalid_argument("family i: expected parameters (x,y,z)");
    std::int64_t x = params[0], y = params[1], z = params[2];
    source = {x, -x, y, z, -y - z};
    stored = {x, y, z};
  } else if (kind == FamilyKind::family_ii) {
    if (params.size() != 2) throw std::invalid_argument("family ii: expected parameters (x,y)");
    std::int64_t x = params[0], y = params[1];
    source = {x, -2 * x, y, -2 * y, x + y};
    stored = {x, y, 0};
  } else {
    throw std::invalid_argument("family_parametric: use instantiate for table rows");
  }
  return make_instance(kind, 0, drop_index, 1, n, stored, source, parametric_relations(kind));
}

WidthCertificate certify_instance(const FamilyInstance& inst) {
  if (inst.relations.empty()) throw std::invalid_argument("certify_instance: no relations");
  std::optional<RelationFunctional> best;
  for (const auto& rel : inst.relations) {
    RelationFunctional rf = functional_from_relation(inst.source, rel, inst.drop_index);
    if (!best || rf.spread < best->spread) best = rf;
  }
  WidthCertificate cert;
  cert.functional = best->functional;
  cert.vertex_values = best->vertex_values;
  cert.width = best->spread;
  cert.optimal = false;
  // The functional annihilates the projected quintuple over Z, hence is dual
  // for every (k, n); recheck against this instance's generator anyway.
  Int dot{0};
  const auto& a = inst.spec.gen();
  for (std::size_t i = 0; i < 4; ++i) dot += Int{cert.functional[i]} * Int{a[i]};
  if (!(dot % Int{inst.n}).is_zero())
    throw std::logic_error("certify_instance: certificate functional is not dual");
  return cert;
}

NoncyclicSearchReport search_noncyclic_terminal(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("search_noncyclic_terminal: p must be prime");
  NoncyclicSearchReport report;
  report.p = p;
  for (const fp::Subspace& plane : fp::subspaces(p, 4, 2)) {
    SuperLattice lattice(4, p, plane.basis);
    ++report.planes_checked;

    GroupStructure g = lattice.group_structure();
    if (g.invariant_factors != std::vector<std::int64_t>{p, p}) ++report.group_failures;

    EmptinessResult res = is_empty_general(lattice);
    if (res.empty) {
      ++report.empty_found;
      continue;
    }
    // Scaled by p, the witness must be a nonzero element of the plane with
    // nonnegative digits summing to at most p.
    std::vector<std::int64_t> scaled;
    std::int64_t sum = 0;
    bool nonzero = false;
    for (const Rational& c : res.witness->point) {
      std::int64_t v = c.num() * (p / c.den());
      scaled.push_back(v);
      sum += v;
      nonzero = nonzero || v != 0;
    }
    if (!nonzero || sum > p || !plane.contains(scaled)) ++report.witness_failures;
  }
  return report;
}

std::string NoncyclicSearchReport::to_json() const {
  nlohmann::json j;
  j["p"] = p;
  j["planes_checked"] = planes_checked;
  j["empty_found"] = empty_found;
  j["witness_failures"] = witness_failures;
  j["group_failures"] = group_failures;
  j["passed"] = passed();
  return j.dump();
}

}  // namespace simplexlab
