#include "openbook/io.hpp"

#include <algorithm>
#include <sstream>

namespace openbook {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw parse_error(where + ": expected an integer, got '" + s + "'");
  }
}

}  // namespace

CurveWord parse_curve_spec(const PlanarSurface& S, const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "boundary") {
    return boundary_parallel_curve(S, parse_int(rest, "curve spec"));
  }
  if (kind == "partition") {
    std::vector<int> inside;
    for (const std::string& p : split(rest, ','))
      inside.push_back(parse_int(p, "curve spec"));
    return curve_from_partition(S, inside);
  }
  if (kind == "word") {
    CurveWord w;
    if (!rest.empty())
      for (const std::string& p : split(rest, ',')) {
        if (p.empty()) throw parse_error("curve spec: empty crossing");
        char d = p.back();
        if (d != '+' && d != '-')
          throw parse_error("curve spec: crossing must end with + or -");
        w.letters.push_back(Letter{
            parse_int(p.substr(0, p.size() - 1), "curve spec"),
            d == '+' ? 1 : -1});
      }
    return normalize(S, w);
  }
  throw parse_error("curve spec must start with boundary:, partition: or "
                    "word:, got '" + spec + "'");
}

ArcWord parse_arc_spec(const PlanarSurface& S, const std::string& spec) {
  // "from-to[:crossings]" e.g. "1-2", "1-1:2+"
  auto colon = spec.find(':');
  std::string ends = spec.substr(0, colon);
  auto dash = ends.find('-');
  if (dash == std::string::npos)
    throw parse_error("arc spec must look like 1-2[:2+,3-]");
  ArcWord a;
  a.from = parse_int(ends.substr(0, dash), "arc spec");
  a.to = parse_int(ends.substr(dash + 1), "arc spec");
  if (colon != std::string::npos) {
    for (const std::string& p : split(spec.substr(colon + 1), ',')) {
      if (p.empty()) continue;
      char d = p.back();
      if (d != '+' && d != '-')
        throw parse_error("arc spec: crossing must end with + or -");
      a.letters.push_back(Letter{
          parse_int(p.substr(0, p.size() - 1), "arc spec"), d == '+' ? 1 : -1});
    }
  }
  return normalize(S, a);
}

json emit_curve(const PlanarSurface& S, const CurveWord& c) {
  if (auto bp = is_boundary_parallel(S, c))
    return json{{"type", "boundary"}, {"label", *bp}};
  std::vector<int> part = partition_of(S, c);
  if (canonical(S, curve_from_partition(S, part)) == canonical(S, c))
    return json{{"type", "partition"}, {"inside", part}};
  json crossings = json::array();
  for (const Letter& l : c.letters)
    crossings.push_back(json::array({l.chord, l.dir}));
  return json{{"type", "word"}, {"crossings", crossings}};
}

CurveWord parse_curve(const PlanarSurface& S, const json& j,
                      const std::string& where) {
  if (!j.is_object() || !j.contains("type"))
    throw parse_error(where + ": curve must be an object with a type");
  std::string type = j.at("type").get<std::string>();
  try {
    if (type == "boundary")
      return boundary_parallel_curve(S, j.at("label").get<int>());
    if (type == "partition")
      return curve_from_partition(S, j.at("inside").get<std::vector<int>>());
    if (type == "word") {
      CurveWord w;
      for (const auto& x : j.at("crossings"))
        w.letters.push_back(Letter{x.at(0).get<int>(), x.at(1).get<int>()});
      return normalize(S, w);
    }
  } catch (const std::invalid_argument& e) {
    throw parse_error(where + ": " + e.what());
  } catch (const json::exception& e) {
    throw parse_error(where + ": " + e.what());
  }
  throw parse_error(where + ": unknown curve type '" + type + "'");
}

json emit_arc(const ArcWord& a) {
  json crossings = json::array();
  for (const Letter& l : a.letters)
    crossings.push_back(json::array({l.chord, l.dir}));
  return json{{"from", a.from}, {"to", a.to}, {"crossings", crossings}};
}

ArcWord parse_arc(const PlanarSurface& S, const json& j,
                  const std::string& where) {
  try {
    ArcWord a;
    a.from = j.at("from").get<int>();
    a.to = j.at("to").get<int>();
    for (const auto& x : j.at("crossings"))
      a.letters.push_back(Letter{x.at(0).get<int>(), x.at(1).get<int>()});
    return normalize(S, a);
  } catch (const std::invalid_argument& e) {
    throw parse_error(where + ": " + e.what());
  } catch (const json::exception& e) {
    throw parse_error(where + ": " + e.what());
  }
}

json emit_openbook(const OpenBook& ob) {
  const PlanarSurface& S = ob.surface;
  json doc;
  doc["schema"] = kOpenBookSchema;
  doc["boundary_count"] = S.boundary_count;
  json mono = json::array();
  for (const TwistFactor& f : ob.monodromy.factors)
    mono.push_back(json{{"curve", emit_curve(S, f.curve)}, {"power", f.power}});
  doc["monodromy"] = mono;

  json meta = json::object();
  if (ob.metadata.family) {
    const FamilyParams& v = *ob.metadata.family;
    meta["family"] = json{{"p", v.p},
                          {"n", {v.n[0], v.n[1], v.n[2], v.n[3]}}};
  }
  if (!ob.metadata.constructions.empty()) {
    json cs = json::array();
    for (const ConstructionRecord& r : ob.metadata.constructions)
      cs.push_back(json{{"boundary", r.boundary},
                        {"m", r.m},
                        {"exponents", r.exponents},
                        {"gamma", emit_curve(S, r.gamma)},
                        {"new_labels", r.new_labels}});
    meta["constructions"] = cs;
  }
  if (!ob.metadata.named_arcs.empty()) {
    json arcs = json::object();
    for (const auto& [name, a] : ob.metadata.named_arcs)
      arcs[name] = emit_arc(a);
    meta["arcs"] = arcs;
  }
  if (ob.metadata.penner_positive || ob.metadata.penner_negative) {
    json penner = json::object();
    auto emit_mc = [&](const MultiCurve& mc) {
      json arr = json::array();
      for (const CurveWord& c : mc.components) arr.push_back(emit_curve(S, c));
      return arr;
    };
    if (ob.metadata.penner_positive)
      penner["gamma1"] = emit_mc(*ob.metadata.penner_positive);
    if (ob.metadata.penner_negative)
      penner["gamma2"] = emit_mc(*ob.metadata.penner_negative);
    meta["penner"] = penner;
  }
  if (!meta.empty()) doc["metadata"] = meta;
  return doc;
}

OpenBook parse_openbook(const json& doc) {
  if (!doc.is_object()) throw parse_error("document must be a JSON object");
  if (doc.value("schema", std::string()) != kOpenBookSchema)
    throw parse_error("schema: expected '" + std::string(kOpenBookSchema) +
                      "'");
  if (!doc.contains("boundary_count") ||
      !doc.at("boundary_count").is_number_integer())
    throw parse_error("boundary_count: required integer");
  int b = doc.at("boundary_count").get<int>();
  OpenBook ob;
  try {
    ob.surface = make_surface(b);
  } catch (const invalid_argument& e) {
    throw parse_error(std::string("boundary_count: ") + e.what());
  }

  std::vector<TwistFactor> factors;
  if (doc.contains("monodromy")) {
    if (!doc.at("monodromy").is_array())
      throw parse_error("monodromy: expected an array");
    int i = 0;
    for (const auto& f : doc.at("monodromy")) {
      std::string where = "monodromy[" + std::to_string(i++) + "]";
      if (!f.is_object() || !f.contains("curve") || !f.contains("power"))
        throw parse_error(where + ": needs curve and power");
      TwistFactor tf;
      tf.curve = parse_curve(ob.surface, f.at("curve"), where + ".curve");
      tf.power = f.at("power").get<std::int64_t>();
      factors.push_back(std::move(tf));
    }
  }
  try {
    ob.monodromy = make_twist_word(ob.surface, std::move(factors));
  } catch (const invalid_argument& e) {
    throw parse_error(std::string("monodromy: ") + e.what());
  }

  if (doc.contains("metadata")) {
    const json& meta = doc.at("metadata");
    if (meta.contains("family")) {
      FamilyParams v;
      v.p = meta.at("family").at("p").get<std::int64_t>();
      auto n = meta.at("family").at("n");
      for (int i = 0; i < 4; ++i) v.n[i] = n.at(i).get<std::int64_t>();
      ob.metadata.family = v;
    }
    if (meta.contains("constructions")) {
      int i = 0;
      for (const auto& c : meta.at("constructions")) {
        std::string where = "metadata.constructions[" + std::to_string(i++) +
                            "]";
        ConstructionRecord r;
        r.boundary = c.at("boundary").get<int>();
        r.m = c.at("m").get<int>();
        r.exponents = c.at("exponents").get<std::vector<std::int64_t>>();
        r.gamma = parse_curve(ob.surface, c.at("gamma"), where + ".gamma");
        r.new_labels = c.at("new_labels").get<std::vector<int>>();
        ob.metadata.constructions.push_back(std::move(r));
      }
    }
    if (meta.contains("arcs"))
      for (const auto& [name, a] : meta.at("arcs").items())
        ob.metadata.named_arcs.push_back(
            {name, parse_arc(ob.surface, a, "metadata.arcs." + name)});
    if (meta.contains("penner")) {
      auto parse_mc = [&](const json& arr, const std::string& where) {
        MultiCurve mc;
        int i = 0;
        for (const auto& c : arr)
          mc.components.push_back(parse_curve(
              ob.surface, c, where + "[" + std::to_string(i++) + "]"));
        return mc;
      };
      if (meta.at("penner").contains("gamma1"))
        ob.metadata.penner_positive = parse_mc(meta.at("penner").at("gamma1"),
                                               "metadata.penner.gamma1");
      if (meta.at("penner").contains("gamma2"))
        ob.metadata.penner_negative = parse_mc(meta.at("penner").at("gamma2"),
                                               "metadata.penner.gamma2");
    }
  }
  return ob;
}

OpenBook parse_openbook_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("not valid JSON: ") + e.what());
  }
  return parse_openbook(doc);
}

namespace {

json emit_property(const PropertyReport& p) {
  json j;
  j["verdict"] = to_string(p.verdict);
  if (!p.rule.empty()) j["rule"] = p.rule;
  if (!p.witness.empty()) j["witness"] = p.witness;
  return j;
}

}  // namespace

json emit_report(const OpenBook& ob, const Certificate& cert,
                 std::int64_t timing_ms) {
  json doc;
  doc["schema"] = kReportSchema;
  doc["meta"] = json{{"tool", "openbook"},
                     {"version", kToolVersion},
                     {"timing_ms", timing_ms}};
  doc["input"] = emit_openbook(ob);
  doc["config"] = json{{"arc_depth", cert.config.arc_depth},
                       {"cap_subset_limit", cert.config.cap_subset_limit}};

  json fdtc = json::array();
  for (const BoundaryEvidence& ev : cert.fdtc) {
    json e;
    e["boundary"] = ev.boundary;
    if (ev.exact) {
      e["kind"] = "exact";
      e["value"] = ev.exact->exact.str();
      e["provenance"] = ev.exact->provenance;
    } else if (ev.lower) {
      e["kind"] = "lower_bound";
      e["value"] = ev.lower->lower;
      e["provenance"] = ev.lower->provenance;
      e["witness_arc"] = emit_arc(ev.lower->witness_arc);
    } else {
      e["kind"] = "unknown";
    }
    e["right_veering_checked"] = ev.right_veering_checked;
    if (ev.violation) e["left_veering_arc"] = emit_arc(*ev.violation);
    fdtc.push_back(e);
  }
  doc["fdtc"] = fdtc;

  json c;
  c["tight"] = emit_property(cert.tight);
  c["universally_tight"] = emit_property(cert.universally_tight);
  c["overtwisted"] = emit_property(cert.overtwisted);
  c["contact_invariant_zero"] = emit_property(cert.contact_invariant_zero);
  c["fillable"] = emit_property(cert.fillable);
  c["hyperbolic"] = emit_property(cert.hyperbolic);
  if (cert.penner) {
    json p;
    p["verdict"] = cert.penner->verdict;
    p["sign_ok"] = cert.penner->sign_ok;
    p["coverage_ok"] = cert.penner->coverage_ok;
    p["fill_ok"] = cert.penner->fill_ok;
    p["multicurves_ok"] = cert.penner->multicurves_ok;
    if (!cert.penner->diagnostic.empty())
      p["diagnostic"] = cert.penner->diagnostic;
    c["penner"] = p;
  }
  if (cert.cap_witness) {
    c["cap_witness"] = json{
        {"capped_labels", cert.cap_witness->capped_labels},
        {"violating_arc", emit_arc(cert.cap_witness->violating_arc)},
        {"violating_boundary", cert.cap_witness->violating_boundary}};
  }
  doc["certificate"] = c;
  return doc;
}

}  // namespace openbook
