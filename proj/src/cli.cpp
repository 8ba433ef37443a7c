#include <json.hpp>

#include <cstdio>

#include "pompeiu/cli.hpp"
#include "pompeiu/polynomial.hpp"

namespace pompeiu {

namespace {

using Json = nlohmann::json;

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

// Fixed-width float serialization keeps documents byte-deterministic.
std::string float_string(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string lattice_to_string(const LatticePoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::vector<LatticePoint> parse_lattice_list(const std::string& text) {
  std::vector<LatticePoint> out;
  LatticePoint cur;
  std::string num;
  bool inside = false;
  auto flush_num = [&] {
    if (!num.empty()) {
      cur.push_back(std::stoll(num));
      num.clear();
    }
  };
  for (char c : text) {
    if (c == '(') {
      inside = true;
      cur.clear();
    } else if (c == ')') {
      flush_num();
      if (!inside || cur.empty()) throw ParseError("malformed lattice point");
      out.push_back(cur);
      inside = false;
    } else if (c == ',') {
      flush_num();
    } else if (c == '-' || (c >= '0' && c <= '9')) {
      num += c;
    } else if (c != ' ' && c != '\t') {
      throw ParseError("malformed lattice point list");
    }
  }
  if (inside || !num.empty()) throw ParseError("malformed lattice point list");
  return out;
}

Json instance_echo(const CopySystem& sys) {
  Json j;
  j["point_count"] = sys.point_count;
  j["copies"] = sys.copies;
  return j;
}

}  // namespace

RunResult run_witness(const std::string& config_text) {
  ProblemConfig cfg = parse_problem(config_text);
  Problem problem = to_problem(cfg);
  SearchOutcome outcome = witness_search(problem, cfg.budget);
  if (outcome.found()) {
    return {0, certificate_document(problem, outcome)};
  }
  Json doc;
  doc["kind"] = "exhaustion_report";
  doc["schema"] = 1;
  doc["placements_explored"] = outcome.exhausted.placements_explored;
  doc["points_interned"] = outcome.exhausted.points_interned;
  doc["saturated"] = outcome.exhausted.saturated;
  doc["note"] =
      "inconclusive: budget exhausted before a forcing certificate appeared; "
      "this is not a nonexistence claim";
  return {1, dump(doc)};
}

RunResult run_verify(const std::string& document_text) {
  std::string diagnostic;
  const bool ok = verify_document(document_text, &diagnostic);
  Json doc;
  doc["kind"] = "verification_report";
  doc["schema"] = 1;
  doc["verified"] = ok;
  if (!ok) doc["diagnostic"] = diagnostic;
  return {ok ? 0 : 1, dump(doc)};
}

RunResult run_color(const std::string& instance_text, std::size_t d) {
  CopySystem sys = parse_copy_system(instance_text);
  auto coloring = color_search(sys, d);
  Json doc;
  doc["kind"] = "coloring";
  doc["schema"] = 1;
  doc["colors_used"] = d;
  doc["instance"] = instance_echo(sys);
  if (coloring) {
    doc["status"] = "found";
    doc["colors"] = coloring->colors;
    return {0, dump(doc)};
  }
  doc["status"] = "obstruction";
  doc["note"] =
      "no equal-quota coloring exists for this finite copy system; the claim "
      "covers this instance only";
  return {1, dump(doc)};
}

RunResult run_transversal(const std::string& instance_text, std::size_t m) {
  CopySystem sys = parse_copy_system(instance_text);
  auto transversal = transversal_search(sys, m);
  Json doc;
  doc["kind"] = "transversal";
  doc["schema"] = 1;
  doc["m"] = m;
  doc["instance"] = instance_echo(sys);
  if (transversal) {
    doc["status"] = "found";
    doc["members"] = transversal->members;
    return {0, dump(doc)};
  }
  doc["status"] = "obstruction";
  doc["note"] =
      "no exact-m transversal exists for this finite copy system; the claim "
      "covers this instance only";
  return {1, dump(doc)};
}

RunResult run_lemma2(long c, long r, long s, long t) {
  auto [n1, n2, n3] = lemma2_relation(BigInt(c), r, s, t);
  Json doc;
  doc["kind"] = "integer_relation";
  doc["schema"] = 1;
  doc["c"] = c;
  doc["exponents"] = {r, s, t};
  doc["modulus"] = std::to_string(c) + "x^2+x+" + std::to_string(c);
  doc["triple"] = {n1.str(), n2.str(), n3.str()};
  doc["coordinate_sum"] = BigInt(n1 + n2 + n3).str();
  return {0, dump(doc)};
}

RunResult run_rotations(long discriminant, std::size_t k, std::size_t size) {
  FieldDescriptor desc =
      discriminant == 0 ? FieldDescriptor{0} : make_descriptor(discriminant);
  auto pool = rotation_pool(desc, k, size);
  Json doc;
  doc["kind"] = "rotation_pool";
  doc["schema"] = 1;
  doc["dimension"] = k;
  doc["field"] = desc.is_rational() ? "q" : "quad(" + std::to_string(desc.d) + ")";
  Json list = Json::array();
  for (const auto& q : pool) {
    Json rows = Json::array();
    for (const auto& row : q.entries()) {
      Json jr = Json::array();
      for (const auto& e : row) jr.push_back(field_to_string(e));
      rows.push_back(jr);
    }
    list.push_back(rows);
  }
  doc["rotations"] = list;
  return {0, dump(doc)};
}

RunResult run_prop1(const std::string& base, const std::string& weights,
                    const std::string& target, const std::string& translations,
                    const std::string& dilations) {
  const FieldDescriptor q{0};
  std::vector<LatticePoint> base_pts = parse_lattice_list(base);
  std::vector<LatticePoint> trans = parse_lattice_list(translations);
  std::vector<LatticePoint> target_list = parse_lattice_list(target);
  if (target_list.size() != 1) throw ParseError("target must be one lattice point");

  std::vector<ComplexElem> ws;
  {
    std::string cur;
    int depth = 0;
    auto flush = [&] {
      if (cur.empty()) return;
      auto w = parse_complex_elem(cur, q);
      if (!w) throw ParseError("malformed weight '" + cur + "'");
      ws.push_back(*w);
      cur.clear();
    };
    for (char c : weights) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ' ' || c == ',')) {
        flush();
        continue;
      }
      cur += c;
    }
    flush();
  }

  std::vector<long long> kappas;
  {
    std::string cur;
    for (char c : dilations + " ") {
      if (c == ' ' || c == ',') {
        if (!cur.empty()) kappas.push_back(std::stoll(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
  }

  Prop1Result res = prop1_force(base_pts, ws, target_list[0], trans, kappas);

  Json doc;
  doc["kind"] = "lattice_forcing";
  doc["schema"] = 1;
  Json points = Json::array();
  for (const auto& p : res.points) points.push_back(lattice_to_string(p));
  doc["points"] = points;
  Json rows = Json::array();
  for (const auto& r : res.rows) {
    Json jr;
    jr["label"] = r.provenance;
    Json terms = Json::array();
    for (const auto& [id, c] : r.terms) {
      Json jt;
      jt["id"] = id;
      jt["coeff"] = complex_to_string(c);
      terms.push_back(jt);
    }
    jr["terms"] = terms;
    rows.push_back(jr);
  }
  doc["rows"] = rows;
  if (res.certificate) {
    doc["status"] = "found";
    Json mults = Json::array();
    for (const auto& [label, lam] : res.certificate->multipliers) {
      Json jm;
      jm["row"] = label;
      jm["value"] = complex_to_string(lam);
      mults.push_back(jm);
    }
    doc["multipliers"] = mults;
    doc["witness_ids"] = res.certificate->witness_points;
    return {0, dump(doc)};
  }
  doc["status"] = "not_forced_within_ranges";
  return {1, dump(doc)};
}

RunResult run_core(const std::string& system_text, long discriminant) {
  FieldDescriptor desc =
      discriminant == 0 ? FieldDescriptor{0} : make_descriptor(discriminant);
  GenSystem sys = parse_gen_system(system_text, desc);
  auto core = infeasible_core(sys);
  Json doc;
  doc["kind"] = "infeasible_core";
  doc["schema"] = 1;
  doc["row_count"] = sys.rows.size();
  if (core) {
    doc["status"] = "infeasible";
    doc["core"] = core->row_indices;
    return {0, dump(doc)};
  }
  doc["status"] = "feasible";
  return {1, dump(doc)};
}

RunResult run_gallery1d(long n, double tolerance, std::size_t samples) {
  if (n < 2) throw ParseError("gallery1d needs n >= 2");
  std::vector<BigRational> a;
  for (long j = 1; j <= n; ++j) a.push_back(BigRational(j));
  ExpCounterexampleReport report = exp_counterexample_1d(a, tolerance, samples);

  Json doc;
  doc["kind"] = "exp_gallery";
  doc["schema"] = 1;
  doc["n"] = n;
  doc["converged"] = report.converged;
  doc["lambda_re"] = float_string(report.lambda.real());
  doc["lambda_im"] = float_string(report.lambda.imag());
  doc["max_residual"] = float_string(report.max_residual);
  doc["note"] = report.note;

  // Remark-4 companion: the periodic transversal meets every copy once,
  // checked exactly over a deterministic rational translation sweep.
  long count_min = 1 << 30, count_max = -1;
  for (long i = 0; i < 64; ++i) {
    BigRational t = make_rational(BigInt(i * i - 7 * i), BigInt(17));
    for (int sign : {+1, -1}) {
      long c = steinhaus_1d_count(n, t, sign);
      count_min = std::min(count_min, c);
      count_max = std::max(count_max, c);
    }
  }
  doc["steinhaus_count_min"] = count_min;
  doc["steinhaus_count_max"] = count_max;
  return {report.converged ? 0 : 1, dump(doc)};
}

}  // namespace pompeiu
