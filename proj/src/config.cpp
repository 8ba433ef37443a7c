#include <sstream>

#include "pompeiu/cli.hpp"

namespace pompeiu {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits a value list on whitespace/commas at parenthesis depth zero;
// parenthesized groups stay whole.
std::vector<std::string> tokenize_list(const std::string& text, long line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') {
      --depth;
      if (depth < 0) throw ParseError("unbalanced ')'", line);
    }
    if (depth == 0 && (c == ' ' || c == '\t' || c == ',')) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw ParseError("unbalanced '('", line);
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct KeyValue {
  std::string key;
  std::string value;
  long line;
};

std::vector<KeyValue> parse_key_values(const std::string& text) {
  std::vector<KeyValue> out;
  std::istringstream in(text);
  std::string raw;
  long line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    auto eq = raw.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value'", line);
    out.push_back({trim(raw.substr(0, eq)), trim(raw.substr(eq + 1)), line});
  }
  return out;
}

long parse_long(const std::string& s, long line) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw ParseError("malformed integer '" + s + "'", line);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError("malformed integer '" + s + "'", line);
  }
}

}  // namespace

std::string point_to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ",";
    out += field_to_string(p.coords[i]);
  }
  return out + ")";
}

std::optional<Point> parse_point(std::string_view text,
                                 const FieldDescriptor& desc,
                                 std::size_t dimension) {
  std::string s(text);
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
  std::string inner = s.substr(1, s.size() - 2);
  Point p;
  std::string cur;
  auto flush = [&]() -> bool {
    auto fe = parse_field_elem(cur, desc);
    if (!fe) return false;
    p.coords.push_back(*fe);
    cur.clear();
    return true;
  };
  for (char c : inner) {
    if (c == ',') {
      if (!flush()) return std::nullopt;
    } else {
      cur += c;
    }
  }
  if (!flush()) return std::nullopt;
  if (p.coords.size() != dimension) return std::nullopt;
  return p;
}

ProblemConfig parse_problem(const std::string& text) {
  ProblemConfig cfg;
  bool have_dimension = false, have_field = false, have_points = false,
       have_weights = false, have_target = false;
  std::string points_value, weights_value, target_value;
  long points_line = 0, weights_line = 0, target_line = 0;

  for (const auto& kv : parse_key_values(text)) {
    if (kv.key == "dimension") {
      long k = parse_long(kv.value, kv.line);
      if (k < 1) throw ParseError("dimension must be >= 1", kv.line);
      cfg.dimension = static_cast<std::size_t>(k);
      have_dimension = true;
    } else if (kv.key == "field") {
      if (kv.value == "q" || kv.value == "rationals") {
        cfg.field = FieldDescriptor{0};
      } else if (kv.value.rfind("quad(", 0) == 0 && kv.value.back() == ')') {
        long d = parse_long(kv.value.substr(5, kv.value.size() - 6), kv.line);
        try {
          cfg.field = make_descriptor(d);
        } catch (const UsageError& e) {
          throw ParseError(e.what(), kv.line);
        }
      } else {
        throw ParseError("field must be 'q' or 'quad(d)'", kv.line);
      }
      have_field = true;
    } else if (kv.key == "points") {
      points_value = kv.value;
      points_line = kv.line;
      have_points = true;
    } else if (kv.key == "weights") {
      weights_value = kv.value;
      weights_line = kv.line;
      have_weights = true;
    } else if (kv.key == "target") {
      target_value = kv.value;
      target_line = kv.line;
      have_target = true;
    } else if (kv.key == "max_placements") {
      cfg.budget.max_placements =
          static_cast<std::size_t>(parse_long(kv.value, kv.line));
    } else if (kv.key == "max_points") {
      cfg.budget.max_points =
          static_cast<std::size_t>(parse_long(kv.value, kv.line));
    } else if (kv.key == "rotation_pool_size") {
      cfg.budget.rotation_pool_size =
          static_cast<std::size_t>(parse_long(kv.value, kv.line));
    } else {
      throw ParseError("unknown key '" + kv.key + "'", kv.line);
    }
  }

  if (!have_dimension) throw ParseError("missing key 'dimension'");
  if (!have_field) throw ParseError("missing key 'field'");
  if (!have_points) throw ParseError("missing key 'points'");
  if (!have_weights) throw ParseError("missing key 'weights'");
  if (!have_target) throw ParseError("missing key 'target'");

  for (const auto& tok : tokenize_list(points_value, points_line)) {
    auto p = parse_point(tok, cfg.field, cfg.dimension);
    if (!p) throw ParseError("malformed point '" + tok + "'", points_line);
    cfg.points.push_back(std::move(*p));
  }
  if (cfg.points.empty()) throw ParseError("empty point list", points_line);

  for (const auto& tok : tokenize_list(weights_value, weights_line)) {
    auto w = parse_complex_elem(tok, cfg.field);
    if (!w) throw ParseError("malformed weight '" + tok + "'", weights_line);
    cfg.weights.push_back(std::move(*w));
  }
  if (cfg.weights.size() != cfg.points.size())
    throw ParseError("need one weight per point", weights_line);

  ComplexElem sum = 0;
  for (const auto& w : cfg.weights) sum += w;
  if (sum.is_zero())
    throw ParseError(
        "weight sum must be nonzero: with sum zero every constant function "
        "satisfies all copy equations and nothing can be forced",
        weights_line);

  auto t = parse_point(target_value, cfg.field, cfg.dimension);
  if (!t) throw ParseError("malformed target '" + target_value + "'", target_line);
  cfg.target = std::move(*t);
  return cfg;
}

Problem to_problem(const ProblemConfig& cfg) {
  return Problem(cfg.dimension, cfg.points, cfg.weights, cfg.target, cfg.field);
}

CopySystem parse_copy_system(const std::string& text) {
  CopySystem sys;
  bool have_points = false;
  for (const auto& kv : parse_key_values(text)) {
    if (kv.key == "points") {
      sys.point_count = static_cast<std::size_t>(parse_long(kv.value, kv.line));
      have_points = true;
    } else if (kv.key == "copy") {
      std::vector<std::size_t> copy;
      for (const auto& tok : tokenize_list(kv.value, kv.line))
        copy.push_back(static_cast<std::size_t>(parse_long(tok, kv.line)));
      if (copy.empty()) throw ParseError("empty copy", kv.line);
      sys.copies.push_back(std::move(copy));
    } else {
      throw ParseError("unknown key '" + kv.key + "'", kv.line);
    }
  }
  if (!have_points) throw ParseError("missing key 'points'");
  try {
    sys.validate();
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
  return sys;
}

GenSystem parse_gen_system(const std::string& text,
                           const FieldDescriptor& desc) {
  GenSystem sys;
  RowLabel label = 0;
  for (const auto& kv : parse_key_values(text)) {
    if (kv.key != "row") throw ParseError("unknown key '" + kv.key + "'", kv.line);
    auto bar = kv.value.find('|');
    if (bar == std::string::npos)
      throw ParseError("row needs '| rhs' part", kv.line);
    auto rhs = parse_complex_elem(trim(kv.value.substr(bar + 1)), desc);
    if (!rhs) throw ParseError("malformed rhs", kv.line);
    std::vector<std::pair<VarId, ComplexElem>> terms;
    for (const auto& tok : tokenize_list(kv.value.substr(0, bar), kv.line)) {
      if (tok.rfind("x", 0) != 0) throw ParseError("term must look like x<id>:<coeff>", kv.line);
      auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw ParseError("term must look like x<id>:<coeff>", kv.line);
      long id = parse_long(tok.substr(1, colon - 1), kv.line);
      if (id < 0) throw ParseError("negative variable id", kv.line);
      auto coeff = parse_complex_elem(tok.substr(colon + 1), desc);
      if (!coeff) throw ParseError("malformed coefficient", kv.line);
      terms.emplace_back(static_cast<VarId>(id), *coeff);
    }
    sys.rows.emplace_back(make_row(std::move(terms), label++), *rhs);
  }
  return sys;
}

}  // namespace pompeiu
