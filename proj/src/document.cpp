#include <json.hpp>

#include <map>
#include <set>

#include "pompeiu/cli.hpp"

namespace pompeiu {

namespace {

using Json = nlohmann::json;  // std::map backing: object keys stay sorted

std::string field_descriptor_string(const FieldDescriptor& desc) {
  return desc.is_rational() ? "q" : "quad(" + std::to_string(desc.d) + ")";
}

std::optional<FieldDescriptor> parse_descriptor_string(const std::string& s) {
  if (s == "q") return FieldDescriptor{0};
  if (s.rfind("quad(", 0) == 0 && s.back() == ')') {
    try {
      return make_descriptor(std::stol(s.substr(5, s.size() - 6)));
    } catch (...) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Json rotation_to_json(const RotationMatrix& q) {
  Json rows = Json::array();
  for (const auto& row : q.entries()) {
    Json jr = Json::array();
    for (const auto& e : row) jr.push_back(field_to_string(e));
    rows.push_back(jr);
  }
  return rows;
}

}  // namespace

std::string certificate_document(const Problem& problem,
                                 const SearchOutcome& outcome) {
  if (!outcome.certificate)
    throw UsageError("certificate_document needs a found certificate");
  const ForcingCertificate& cert = *outcome.certificate;

  Json doc;
  doc["kind"] = "forcing_certificate";
  doc["schema"] = 1;

  Json prob;
  prob["dimension"] = problem.dimension();
  prob["field"] = field_descriptor_string(problem.descriptor());
  Json pts = Json::array();
  for (const auto& p : problem.base()) pts.push_back(point_to_string(p));
  prob["points"] = pts;
  Json ws = Json::array();
  for (const auto& w : problem.weights()) ws.push_back(complex_to_string(w));
  prob["weights"] = ws;
  prob["target"] = point_to_string(problem.target());
  doc["problem"] = prob;

  std::set<RowLabel> cited;
  for (const auto& [label, lam] : cert.multipliers) cited.insert(label);

  std::set<PointId> used_ids;
  Json placements = Json::array();
  for (RowLabel label : cited) {
    const Placement& pl = outcome.placements.at(label);
    Json jp;
    jp["id"] = label;
    jp["rotation"] = rotation_to_json(pl.motion.rotation);
    jp["translation"] = point_to_string(pl.motion.translation);
    jp["image_ids"] = pl.image_ids;
    placements.push_back(jp);
    for (PointId id : pl.image_ids) used_ids.insert(id);
  }
  used_ids.insert(cert.target);
  doc["placements"] = placements;

  Json witness = Json::array();
  for (PointId id : used_ids) {
    Json jw;
    jw["id"] = id;
    jw["coords"] = point_to_string(outcome.store.point(id));
    witness.push_back(jw);
  }
  doc["witness_points"] = witness;

  Json mults = Json::array();
  for (const auto& [label, lam] : cert.multipliers) {
    Json jm;
    jm["placement"] = label;
    jm["value"] = complex_to_string(lam);
    mults.push_back(jm);
  }
  doc["multipliers"] = mults;
  doc["target_id"] = cert.target;
  doc["verification"] = "verified";
  return doc.dump(2) + "\n";
}

bool verify_document(const std::string& document_text, std::string* diagnostic) {
  auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  Json doc = Json::parse(document_text, nullptr, false);
  if (doc.is_discarded()) return fail("document is not valid JSON");

  try {
    if (doc.at("kind") != "forcing_certificate")
      return fail("not a forcing certificate document");

    const Json& prob = doc.at("problem");
    auto desc = parse_descriptor_string(prob.at("field").get<std::string>());
    if (!desc) return fail("malformed field descriptor");
    const std::size_t dim = prob.at("dimension").get<std::size_t>();

    std::vector<Point> base;
    for (const auto& s : prob.at("points")) {
      auto p = parse_point(s.get<std::string>(), *desc, dim);
      if (!p) return fail("malformed base point");
      base.push_back(std::move(*p));
    }
    std::vector<ComplexElem> weights;
    for (const auto& s : prob.at("weights")) {
      auto w = parse_complex_elem(s.get<std::string>(), *desc);
      if (!w) return fail("malformed weight");
      weights.push_back(std::move(*w));
    }
    if (base.empty() || base.size() != weights.size())
      return fail("base/weight count mismatch");
    auto target = parse_point(prob.at("target").get<std::string>(), *desc, dim);
    if (!target) return fail("malformed target");

    // Witness table: exactness means distinct ids carry distinct points.
    std::map<PointId, Point> table;
    std::set<Point> distinct;
    for (const auto& jw : doc.at("witness_points")) {
      PointId id = jw.at("id").get<PointId>();
      auto p = parse_point(jw.at("coords").get<std::string>(), *desc, dim);
      if (!p) return fail("malformed witness point");
      if (!table.emplace(id, *p).second) return fail("duplicate witness id");
      if (!distinct.insert(*p).second)
        return fail("two witness ids intern the same point");
    }
    PointId target_id = doc.at("target_id").get<PointId>();
    auto tit = table.find(target_id);
    if (tit == table.end() || !(tit->second == *target))
      return fail("target id does not resolve to the target point");

    // Re-derive each placement row from its motion.
    std::map<RowLabel, std::map<VarId, ComplexElem>> rows;
    for (const auto& jp : doc.at("placements")) {
      RowLabel label = jp.at("id").get<RowLabel>();
      std::vector<std::vector<FieldElem>> entries;
      for (const auto& jrow : jp.at("rotation")) {
        std::vector<FieldElem> row;
        for (const auto& je : jrow) {
          auto e = parse_field_elem(je.get<std::string>(), *desc);
          if (!e) return fail("malformed rotation entry");
          row.push_back(std::move(*e));
        }
        entries.push_back(std::move(row));
      }
      RigidMotion motion{RotationMatrix(std::move(entries)),  // checks QtQ, det
                         Point{}};
      auto tr = parse_point(jp.at("translation").get<std::string>(), *desc, dim);
      if (!tr) return fail("malformed translation");
      motion.translation = std::move(*tr);

      const auto& ids = jp.at("image_ids");
      if (ids.size() != base.size()) return fail("image id count mismatch");
      std::map<VarId, ComplexElem> row;
      for (std::size_t j = 0; j < base.size(); ++j) {
        PointId id = ids[j].get<PointId>();
        auto pit = table.find(id);
        if (pit == table.end()) return fail("image id missing from witness table");
        if (!(motion.apply(base[j]) == pit->second))
          return fail("image id does not match the recomputed image point");
        auto [it, fresh] = row.emplace(id, weights[j]);
        if (!fresh) it->second += weights[j];
      }
      if (!rows.emplace(label, std::move(row)).second)
        return fail("duplicate placement id");
    }

    // Recompute the multiplier combination from scratch.
    std::map<VarId, ComplexElem> acc;
    for (const auto& jm : doc.at("multipliers")) {
      RowLabel label = jm.at("placement").get<RowLabel>();
      auto lam = parse_complex_elem(jm.at("value").get<std::string>(), *desc);
      if (!lam) return fail("malformed multiplier");
      auto rit = rows.find(label);
      if (rit == rows.end()) return fail("multiplier cites unknown placement");
      for (const auto& [id, c] : rit->second) {
        auto [it, fresh] = acc.emplace(id, *lam * c);
        if (!fresh) it->second += *lam * c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
    if (acc.size() != 1 || acc.begin()->first != target_id ||
        acc.begin()->second != ComplexElem(1))
      return fail("multiplier combination is not the unit row at the target");
  } catch (const Json::exception&) {
    return fail("document misses a required field");
  } catch (const UsageError& e) {
    return fail(e.what());
  }
  if (diagnostic) diagnostic->clear();
  return true;
}

}  // namespace pompeiu
