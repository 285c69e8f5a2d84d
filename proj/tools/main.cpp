// command line front end: parses open-book documents, runs constructions
// and analyses, and emits machine-readable reports

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "openbook/classify.hpp"
#include "openbook/io.hpp"

using namespace openbook;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << text;
  }
  fs::rename(tmp, path);
}

void emit_output(const json& doc, const std::string& out) {
  std::string text = doc.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_atomic(out, text);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

std::vector<std::int64_t> parse_i64_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoll(tok));
  return out;
}

MultiCurve parse_multicurve(const PlanarSurface& S, const std::string& s) {
  MultiCurve mc;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';'))
    if (!tok.empty()) mc.components.push_back(parse_curve_spec(S, tok));
  return mc;
}

ClassifyOptions options_from_flags(const PlanarSurface& S,
                                   const std::string& gamma1,
                                   const std::string& gamma2,
                                   const std::string& cap_targets,
                                   int arc_depth, int cap_subset_limit) {
  ClassifyOptions opts;
  if (!gamma1.empty()) opts.gamma1 = parse_multicurve(S, gamma1);
  if (!gamma2.empty()) opts.gamma2 = parse_multicurve(S, gamma2);
  if (!cap_targets.empty()) {
    std::stringstream ss(cap_targets);
    std::string tok;
    while (std::getline(ss, tok, ';'))
      if (!tok.empty()) opts.cap_targets.push_back(parse_int_list(tok));
  }
  opts.arc_depth = arc_depth;
  opts.cap_subset_limit = cap_subset_limit;
  return opts;
}

json analyze_book(const OpenBook& ob, const ClassifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Certificate cert = classify(ob, opts);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  return emit_report(ob, cert, ms);
}

int run_batch(const std::string& manifest_path, std::string out_dir) {
  json manifest = json::parse(slurp(manifest_path));
  if (out_dir.empty()) {
    const char* env = std::getenv("OPENBOOK_OUT_DIR");
    out_dir = env ? env : "openbook-out";
  }
  fs::create_directories(out_dir);

  struct Item {
    std::string name;
    OpenBook ob;
    ClassifyOptions opts;
  };
  std::vector<Item> items;
  int idx = 0;
  for (const auto& entry : manifest.at("inputs")) {
    Item it;
    if (entry.is_string()) {
      it.name = fs::path(entry.get<std::string>()).stem().string();
      it.ob = parse_openbook_text(slurp(entry.get<std::string>()));
    } else {
      it.name = entry.value("name", "input-" + std::to_string(idx));
      it.ob = parse_openbook(entry.at("book"));
    }
    if (manifest.contains("options")) {
      const auto& o = manifest.at("options");
      it.opts.arc_depth = o.value("arc_depth", 4);
      it.opts.cap_subset_limit = o.value("cap_subset_limit", 3);
      if (o.contains("cap_targets"))
        for (const auto& t : o.at("cap_targets"))
          it.opts.cap_targets.push_back(t.get<std::vector<int>>());
    }
    ++idx;
    items.push_back(std::move(it));
  }

  std::vector<std::future<json>> futs;
  for (const Item& it : items)
    futs.push_back(std::async(std::launch::async | std::launch::deferred,
                              [&it] { return analyze_book(it.ob, it.opts); }));

  json summary = json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    json report = futs[i].get();
    write_atomic(fs::path(out_dir) / (items[i].name + ".report.json"),
                 report.dump(2) + "\n");
    const json& c = report.at("certificate");
    json row;
    row["name"] = items[i].name;
    for (const char* prop : {"tight", "universally_tight", "overtwisted",
                             "contact_invariant_zero", "fillable",
                             "hyperbolic"})
      row[prop] = c.at(prop).at("verdict");
    summary.push_back(row);
  }
  write_atomic(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");
  for (const auto& row : summary) {
    std::cout << row.at("name").get<std::string>();
    for (const char* prop : {"tight", "universally_tight", "overtwisted",
                             "contact_invariant_zero", "fillable",
                             "hyperbolic"})
      std::cout << "  " << prop << "=" << row.at(prop).get<std::string>();
    std::cout << "\n";
  }
  std::cout << items.size() << " report(s) written to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"open book calculus on planar pages"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string in_path, out_path, out_dir;
  std::string curve_a, curve_b, gamma1, gamma2, cap_targets;
  std::string family_v, exps;
  int boundary = 0, arc_depth = 4, cap_subset_limit = 3;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the result to this file");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full certificate");
  analyze->add_option("file", in_path, "open book document ('-' for stdin)")
      ->required();
  analyze->add_option("--gamma1", gamma1, "Penner positive multicurve");
  analyze->add_option("--gamma2", gamma2, "Penner negative multicurve");
  analyze->add_option("--cap-targets", cap_targets,
                      "cap-off hints, e.g. '2;3,4'");
  analyze->add_option("--arc-depth", arc_depth, "left-veering search depth");
  analyze->add_option("--cap-subset-limit", cap_subset_limit,
                      "cap-off subset size limit");
  add_out(analyze);

  CLI::App* construct = app.add_subcommand(
      "construct", "replace a boundary by m new ones with positive twists");
  construct->add_option("file", in_path)->required();
  construct->add_option("--boundary", boundary)->required();
  construct->add_option("--n", exps, "exponents n_1,...,n_m")->required();
  add_out(construct);

  CLI::App* family = app.add_subcommand("family", "five-parameter family");
  family->add_option("--v", family_v, "p,n1,n2,n3,n4")->required();
  add_out(family);

  CLI::App* capoff = app.add_subcommand("cap-off", "glue a disc to a binding");
  capoff->add_option("file", in_path)->required();
  capoff->add_option("--boundary", boundary)->required();
  add_out(capoff);

  CLI::App* intersect =
      app.add_subcommand("intersect", "geometric intersection number");
  intersect->add_option("file", in_path)->required();
  intersect->add_option("--a", curve_a, "curve spec")->required();
  intersect->add_option("--b", curve_b, "curve spec")->required();

  CLI::App* fdtc =
      app.add_subcommand("fdtc", "fractional Dehn twist coefficients");
  fdtc->add_option("file", in_path)->required();
  fdtc->add_option("--boundary", boundary, "restrict to one boundary");
  fdtc->add_option("--arc-depth", arc_depth, "left-veering search depth");
  add_out(fdtc);

  CLI::App* penner = app.add_subcommand("penner", "Penner certificate");
  penner->add_option("file", in_path)->required();
  penner->add_option("--gamma1", gamma1, "positive multicurve")->required();
  penner->add_option("--gamma2", gamma2, "negative multicurve")->required();
  add_out(penner);

  CLI::App* batch = app.add_subcommand("batch", "analyze a manifest of books");
  batch->add_option("manifest", in_path)->required();
  batch->add_option("--out-dir", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      OpenBook ob = parse_openbook_text(slurp(in_path));
      ClassifyOptions opts = options_from_flags(
          ob.surface, gamma1, gamma2, cap_targets, arc_depth, cap_subset_limit);
      emit_output(analyze_book(ob, opts), out_path);
    } else if (*construct) {
      OpenBook ob = parse_openbook_text(slurp(in_path));
      ConstructionParams p;
      p.boundary = boundary;
      p.exponents = parse_i64_list(exps);
      p.m = static_cast<int>(p.exponents.size());
      emit_output(emit_openbook(build_construction(ob, p)), out_path);
    } else if (*family) {
      auto vals = parse_i64_list(family_v);
      if (vals.size() != 5)
        throw invalid_argument("--v wants five integers p,n1,n2,n3,n4");
      FamilyParams v;
      v.p = vals[0];
      for (int i = 0; i < 4; ++i) v.n[i] = vals[i + 1];
      emit_output(emit_openbook(build_family(v)), out_path);
    } else if (*capoff) {
      OpenBook ob = parse_openbook_text(slurp(in_path));
      emit_output(emit_openbook(cap_off(ob, boundary)), out_path);
    } else if (*intersect) {
      OpenBook ob = parse_openbook_text(slurp(in_path));
      CurveWord a = parse_curve_spec(ob.surface, curve_a);
      CurveWord b = parse_curve_spec(ob.surface, curve_b);
      std::cout << geometric_intersection(ob.surface, a, b) << "\n";
    } else if (*fdtc) {
      OpenBook ob = parse_openbook_text(slurp(in_path));
      json table = json::array();
      int lo = boundary ? boundary : 1;
      int hi = boundary ? boundary : ob.surface.boundary_count;
      for (int bd = lo; bd <= hi; ++bd) {
        json row;
        row["boundary"] = bd;
        if (auto e = fdtc_exact(ob, bd)) {
          row["kind"] = "exact";
          row["value"] = e->exact.str();
          row["provenance"] = e->provenance;
        } else {
          bool violation = find_left_veering_arc(ob, bd, arc_depth).has_value();
          if (violation) {
            row["kind"] = "unknown";
            row["note"] = "not right-veering at this boundary";
          } else {
            FdtcBound lb = fdtc_lower_bound(ob, bd);
            row["kind"] = "lower_bound";
            row["value"] = lb.lower;
            row["provenance"] = lb.provenance;
            row["right_veering_checked_depth"] = arc_depth;
          }
        }
        table.push_back(row);
        std::cout << "B" << bd << ": "
                  << (row.contains("value") ? row.at("value").dump() : "?")
                  << " (" << row.at("kind").get<std::string>() << ")\n";
      }
      if (!out_path.empty()) write_atomic(out_path, table.dump(2) + "\n");
    } else if (*penner) {
      OpenBook ob = parse_openbook_text(slurp(in_path));
      MultiCurve g1 = parse_multicurve(ob.surface, gamma1);
      MultiCurve g2 = parse_multicurve(ob.surface, gamma2);
      PennerCertificate cert = penner_certificate(ob, g1, g2);
      json out;
      out["verdict"] = cert.verdict;
      out["sign_ok"] = cert.sign_ok;
      out["coverage_ok"] = cert.coverage_ok;
      out["fill_ok"] = cert.fill_ok;
      out["multicurves_ok"] = cert.multicurves_ok;
      if (!cert.diagnostic.empty()) out["diagnostic"] = cert.diagnostic;
      emit_output(out, out_path);
    } else if (*batch) {
      return run_batch(in_path, out_dir);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
