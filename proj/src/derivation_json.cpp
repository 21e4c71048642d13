#include "mqlogic/derivation_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mqlogic/errors.hpp"
#include "mqlogic/parser.hpp"

namespace mqlogic {

namespace {

Json mult_json(const Multiplicity& m) { return m.is_omega() ? Json("w") : Json(m.count()); }

Multiplicity mult_from(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "w" || s == "omega") return Multiplicity::omega();
    throw SyntaxError("bad multiplicity '" + s + "'", 0);
  }
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) throw SyntaxError("multiplicity must be positive", 0);
  return Multiplicity::finite(j.get<std::uint64_t>());
}

Json side_json(const SchematicSide& s) {
  Json out = Json::array();
  for (const auto& [f, m] : s.plain.entries()) out.push_back(Json::array({to_string(f), mult_json(m)}));
  for (const auto& seg : s.segments) {
    Json item;
    item["family"] = to_string(seg.pattern);
    item["var"] = seg.var;
    item["start"] = seg.start;
    item["mult"] = mult_json(seg.mult);
    out.push_back(item);
  }
  return out;
}

SchematicSide side_from(const Json& j, const Signature& sig) {
  ParseOptions opts;
  opts.allow_free_variables = true;
  SchematicSide s;
  for (const auto& item : j) {
    if (item.is_string()) {
      s.plain.add(parse_formula(item.get<std::string>(), sig, opts));
    } else if (item.is_array() && item.size() == 2) {
      s.plain.add(parse_formula(item[0].get<std::string>(), sig, opts), mult_from(item[1]));
    } else if (item.is_object()) {
      FamilySegment seg{parse_formula(item.at("family").get<std::string>(), sig, opts), item.at("var").get<std::string>(),
                        item.value("start", std::uint64_t{0}), Multiplicity::finite(1)};
      if (item.contains("mult")) seg.mult = mult_from(item["mult"]);
      s.segments.push_back(std::move(seg));
    } else {
      throw SyntaxError("bad sequent item " + item.dump(), 0);
    }
  }
  return s;
}

}  // namespace

Json sequent_to_json(const SchematicSequent& s) {
  Json out;
  out["ant"] = side_json(s.ant);
  out["suc"] = side_json(s.suc);
  return out;
}

SchematicSequent sequent_from_json(const Json& j, const Signature& sig) {
  if (j.is_string()) return parse_schematic_sequent(j.get<std::string>(), sig);
  SchematicSequent s;
  if (j.contains("ant")) s.ant = side_from(j["ant"], sig);
  if (j.contains("suc")) s.suc = side_from(j["suc"], sig);
  return s;
}

Json derivation_to_json(const Derivation& d) {
  Json out;
  if (d.previous_member) {
    out["ref"] = "prev";
    return out;
  }
  out["seq"] = sequent_to_json(d.conclusion);
  out["rule"] = to_string(d.rule);
  out["premises"] = Json::array();
  for (const auto& p : d.premises) out["premises"].push_back(derivation_to_json(p));
  if (d.family) {
    Json fam;
    fam["var"] = d.family->var;
    fam["start"] = d.family->start;
    fam["template"] = derivation_to_json(d.family->tmpl);
    fam["explicit"] = Json::array();
    for (const auto& e : d.family->explicit_members) fam["explicit"].push_back(derivation_to_json(e));
    out["family"] = fam;
  }
  if (d.principal) {
    out["principal"] = {{"side", d.principal->side == Side::Ant ? "ant" : "suc"},
                        {"formula", to_string(d.principal->formula)}};
  }
  return out;
}

Derivation derivation_from_json(const Json& j, const Signature& sig) {
  if (!j.is_object()) throw SyntaxError("derivation node must be an object", 0);
  if (j.contains("ref")) {
    if (j["ref"] != "prev") throw SyntaxError("unknown reference " + j["ref"].dump(), 0);
    return Derivation::previous();
  }
  const auto rule_name = j.at("rule").get<std::string>();
  auto rule = rule_from_string(rule_name);
  if (!rule) throw SyntaxError("unknown rule '" + rule_name + "'", 0);
  Derivation d = Derivation::node(*rule, sequent_from_json(j.at("seq"), sig));
  if (j.contains("premises")) {
    for (const auto& p : j["premises"]) d.premises.push_back(derivation_from_json(p, sig));
  }
  if (j.contains("family")) {
    const auto& f = j["family"];
    UniformFamily fam{f.at("var").get<std::string>(), f.value("start", std::uint64_t{0}),
                      derivation_from_json(f.at("template"), sig), {}};
    if (f.contains("explicit")) {
      for (const auto& e : f["explicit"]) fam.explicit_members.push_back(derivation_from_json(e, sig));
    }
    d = with_family(std::move(d), std::move(fam));
  }
  if (j.contains("principal")) {
    const auto& p = j["principal"];
    const auto side = p.at("side").get<std::string>();
    if (side != "ant" && side != "suc") throw SyntaxError("principal side must be ant or suc", 0);
    ParseOptions opts;
    opts.allow_free_variables = true;
    d.principal = Principal{side == "ant" ? Side::Ant : Side::Suc,
                            parse_formula(p.at("formula").get<std::string>(), sig, opts)};
  }
  return d;
}

DerivationFile load_derivation_file(const std::string& path, const std::optional<std::string>& signature_path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  DerivationFile out;
  const Json* node = &j;
  if (signature_path) {
    out.signature = std::make_shared<Signature>(Signature::load(*signature_path));
  }
  if (j.contains("root")) {
    node = &j["root"];
    if (!out.signature) {
      std::string text;
      const auto& s = j.at("signature");
      if (s.is_string()) {
        text = s.get<std::string>();
      } else {
        for (const auto& line : s) text += line.get<std::string>() + "\n";
      }
      out.signature = std::make_shared<Signature>(Signature::parse(text));
    }
  }
  if (!out.signature) throw SyntaxError("no signature: give --sig or a \"signature\" field", 0);
  out.root = derivation_from_json(*node, *out.signature);
  return out;
}

Json derivation_file_json(const Signature& sig, const Derivation& root) {
  Json out;
  Json lines = Json::array();
  std::istringstream in(sig.render());
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  out["signature"] = lines;
  out["root"] = derivation_to_json(root);
  return out;
}

Json report_to_json(const CheckReport& r) {
  Json out;
  out["ok"] = r.ok;
  out["policy"] = to_string(r.policy);
  out["depth"] = r.depth;
  out["bounded"] = r.bounded;
  out["failedPath"] = r.failed_path;
  out["nodes"] = Json::array();
  for (const auto& n : r.nodes) {
    out["nodes"].push_back({{"path", n.path},
                            {"rule", n.rule},
                            {"sequent", to_string(n.sequent)},
                            {"verdict", to_string(n.verdict.kind)},
                            {"message", n.verdict.message}});
  }
  out["familySpotChecks"] = Json::array();
  for (const auto& s : r.family_spot_checks) {
    out["familySpotChecks"].push_back(
        {{"path", s.path}, {"index", s.index}, {"verdict", to_string(s.verdict.kind)}, {"message", s.verdict.message}});
  }
  return out;
}

}  // namespace mqlogic
