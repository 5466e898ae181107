#include "twistgen/document.hpp"

#include <fstream>

#include <json.hpp>

#include "twistgen/poly_parser.hpp"

namespace twistgen {

namespace {

using Json = nlohmann::ordered_json;

std::string i2s(std::int64_t v) { return std::to_string(v); }

std::int64_t s2i(const std::string& s) {
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw InputError("malformed document: bad integer '" + s + "'");
  }
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["seed"] = i2s(static_cast<std::int64_t>(r.seed));
  j["samples"] = i2s(r.samples);
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = check_status_name(c.status);
    e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["overall"] = r.overall() ? "pass" : "fail";
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.seed = static_cast<std::uint64_t>(s2i(j.at("seed").get<std::string>()));
  r.samples = static_cast<int>(s2i(j.at("samples").get<std::string>()));
  for (const auto& e : j.at("checks")) {
    CheckResult c;
    c.name = e.at("name").get<std::string>();
    const auto st = check_status_from_name(e.at("status").get<std::string>());
    if (!st) throw InputError("malformed document: bad check status");
    c.status = *st;
    c.witness = e.at("witness").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace

std::string report_to_string(const VerificationReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

std::string document_to_string(const FamilyDocument& doc) {
  const TwistFamily& fam = doc.family;
  Json j;
  j["schema_version"] = doc.schema_version;
  j["family"] = family_name(fam.inputs.family);

  Json inputs;
  inputs["f"] = fam.inputs.f.is_zero() ? "" : fam.inputs.f.str();
  Json ms = Json::array();
  for (const auto m : fam.inputs.m) ms.push_back(i2s(m));
  inputs["m"] = std::move(ms);
  Json cs = Json::array();
  for (const auto& c : fam.inputs.consts) cs.push_back(rat_str(c));
  inputs["consts"] = std::move(cs);
  if (fam.inputs.base_point) {
    inputs["base_point"] = Json::array(
        {rat_str(fam.inputs.base_point->first),
         rat_str(fam.inputs.base_point->second)});
  } else {
    inputs["base_point"] = nullptr;
  }
  j["inputs"] = std::move(inputs);

  j["M"] = i2s(fam.M);
  Json mis = Json::array();
  for (const auto m : fam.M_i) mis.push_back(i2s(m));
  j["M_i"] = std::move(mis);
  j["w"] = Json::array({fam.w[0].str(), fam.w[1].str(), fam.w[2].str()});
  j["T"] = fam.T.str();
  j["D"] = fam.D.str();

  Json curves = Json::array();
  for (const auto& c : fam.curves) {
    Json e;
    e["model_kind"] = model_kind_name(c.kind);
    e["m"] = i2s(c.m);
    e["constant"] = rat_str(c.constant);
    e["equation"] = c.equation_str();
    curves.push_back(std::move(e));
  }
  j["curves"] = std::move(curves);

  Json points = Json::array();
  for (const auto& p : fam.points) {
    Json e;
    e["curve_index"] = i2s(static_cast<std::int64_t>(p.curve_index));
    e["x"] = p.x.str();
    e["y"] = p.y.str();
    points.push_back(std::move(e));
  }
  j["points"] = std::move(points);

  j["verification"] =
      doc.verification ? report_to_json(*doc.verification) : Json(nullptr);
  return j.dump(2) + "\n";
}

FamilyDocument document_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  try {
    FamilyDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    TwistFamily& fam = doc.family;
    const auto famkind = family_from_name(j.at("family").get<std::string>());
    if (!famkind) throw InputError("malformed document: unknown family");
    fam.inputs.family = *famkind;
    const auto& inputs = j.at("inputs");
    const std::string fstr = inputs.at("f").get<std::string>();
    if (!fstr.empty()) fam.inputs.f = parse_poly(fstr);
    for (const auto& m : inputs.at("m"))
      fam.inputs.m.push_back(s2i(m.get<std::string>()));
    for (const auto& c : inputs.at("consts"))
      fam.inputs.consts.push_back(rat_parse(c.get<std::string>()));
    if (!inputs.at("base_point").is_null()) {
      const auto& bp = inputs.at("base_point");
      fam.inputs.base_point = {rat_parse(bp.at(0).get<std::string>()),
                               rat_parse(bp.at(1).get<std::string>())};
    }
    fam.M = s2i(j.at("M").get<std::string>());
    for (const auto& m : j.at("M_i")) fam.M_i.push_back(s2i(m.get<std::string>()));
    for (int i = 0; i < 3; ++i)
      fam.w[i] = FactoredRF::parse(j.at("w").at(i).get<std::string>());
    fam.T = FactoredRF::parse(j.at("T").get<std::string>());
    fam.D = FactoredRF::parse(j.at("D").get<std::string>());
    for (const auto& e : j.at("curves")) {
      CurveModel c;
      const auto kind = model_kind_from_name(e.at("model_kind").get<std::string>());
      if (!kind) throw InputError("malformed document: unknown model kind");
      c.kind = *kind;
      c.m = s2i(e.at("m").get<std::string>());
      c.constant = rat_parse(e.at("constant").get<std::string>());
      if (c.kind == ModelKind::QuadraticTwist) c.f = fam.inputs.f;
      fam.curves.push_back(std::move(c));
    }
    for (const auto& e : j.at("points")) {
      PointOnCurve p;
      p.curve_index =
          static_cast<std::size_t>(s2i(e.at("curve_index").get<std::string>()));
      if (p.curve_index >= fam.curves.size())
        throw InputError("malformed document: point references no curve");
      p.x = FactoredRF::parse(e.at("x").get<std::string>());
      p.y = FactoredRF::parse(e.at("y").get<std::string>());
      fam.points.push_back(std::move(p));
    }
    if (!j.at("verification").is_null())
      doc.verification = report_from_json(j.at("verification"));
    return doc;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

FamilyDocument document_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open document: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return document_from_string(text);
}

void document_save(const FamilyDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write document: " + path);
  out << document_to_string(doc);
}

}  // namespace twistgen
