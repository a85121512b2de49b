#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "curv/catalog.hpp"
#include "curv/codec.hpp"
#include "curv/generate.hpp"
#include "curv/transforms.hpp"

namespace fs = std::filesystem;
using curv::Bytes;
using curv::EmbeddedMap;

namespace {

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
}

void write_file(const std::string& path, const std::string& data) {
  write_file(path, Bytes(data.begin(), data.end()));
}

void emit(const std::string& out_path, const std::string& data) {
  if (out_path.empty())
    std::cout << data;
  else
    write_file(out_path, data);
}

void emit_maps(const std::vector<EmbeddedMap>& maps, const std::string& format,
               const std::string& out_path) {
  if (format == "planar_code") {
    const Bytes data = curv::encode_planar_code(maps);
    if (out_path.empty())
      std::cout.write(reinterpret_cast<const char*>(data.data()),
                      static_cast<std::streamsize>(data.size()));
    else
      write_file(out_path, data);
    return;
  }
  std::string text;
  for (const auto& m : maps) {
    if (format == "adj" || format == "json")
      text += curv::encode_ascii_adjacency(m) + "\n";
    else if (format == "dot")
      text += curv::encode_dot(m);
    else
      throw std::runtime_error("unknown format " + format);
  }
  emit(out_path, text);
}

int run_classify(const std::string& which, const std::string& out_dir,
                 const std::string& format) {
  curv::Catalog cat =
      which == "forman" ? curv::classify_forman() : curv::classify_corner();
  const nlohmann::json j = curv::catalog_to_json(cat);
  if (out_dir.empty()) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  fs::create_directories(out_dir);
  const std::string stem = which == "forman" ? "forman" : "corner";
  write_file(out_dir + "/" + stem + ".json", j.dump(2) + "\n");
  if (format == "planar_code" || format == "json")
    write_file(out_dir + "/" + stem + ".plc", curv::catalog_planar_code(cat));
  std::cerr << stem << ": " << cat.sphere.size() << " sphere classes, "
            << cat.projective.size() << " projective classes\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial maps, discrete curvatures and tessellation catalogs"};
  app.require_subcommand(1);

  // classify
  auto* classify = app.add_subcommand("classify", "run a classification pipeline");
  std::string which, out_dir, cformat = "json";
  classify->add_option("positivity", which, "forman or corner")
      ->required()
      ->check(CLI::IsMember({"forman", "corner"}));
  classify->add_option("--out", out_dir, "output directory");
  classify->add_option("--format", cformat, "json|planar_code")
      ->check(CLI::IsMember({"json", "planar_code"}));

  // report
  auto* report = app.add_subcommand("report", "curvature + tessellation report");
  std::string report_file, report_out;
  bool with_dual = false, with_medial = false;
  report->add_option("file", report_file, "input map (planar_code or adjacency)")
      ->required();
  report->add_flag("--dual", with_dual, "include a report for the dual");
  report->add_flag("--medial", with_medial, "include a report for the medial");
  report->add_option("-o,--out", report_out, "output file");

  // transform
  auto* transform = app.add_subcommand("transform", "dual/medial/inverse-medial");
  std::string tkind, tin, tout, tformat = "adj";
  transform->add_option("kind", tkind, "dual|medial|inverse-medial")
      ->required()
      ->check(CLI::IsMember({"dual", "medial", "inverse-medial"}));
  transform->add_option("input", tin, "input map file")->required();
  transform->add_option("-o,--out", tout, "output file");
  transform->add_option("--format", tformat, "planar_code|adj|dot")
      ->check(CLI::IsMember({"planar_code", "adj", "dot"}));

  // gen
  auto* gen = app.add_subcommand("gen", "exhaustive generators");
  gen->require_subcommand(1);
  auto* gen_quad = gen->add_subcommand("quad", "spherical quadrangulations");
  int max_faces = 12;
  bool vp_filter = false;
  std::string gformat = "planar_code", gout;
  gen_quad->add_option("--max-faces", max_faces, "face bound")->required();
  gen_quad->add_flag("--vp-filter", vp_filter, "restrict face patterns");
  gen_quad->add_option("--format", gformat, "planar_code|adj|dot");
  gen_quad->add_option("-o,--out", gout, "output file");
  auto* gen_corner = gen->add_subcommand("corner", "corner-positive candidates");
  std::string cg_format = "planar_code", cg_out;
  gen_corner->add_option("--format", cg_format, "planar_code|adj|dot");
  gen_corner->add_option("-o,--out", cg_out, "output file");
  auto* gen_combos = gen->add_subcommand("combos", "degree combination solver");
  int vmin = 0, vmax = 0;
  bool apply_facts = false;
  gen_combos->add_option("--vmin", vmin)->required();
  gen_combos->add_option("--vmax", vmax)->required();
  gen_combos->add_flag("--apply-facts", apply_facts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return run_classify(which, out_dir, cformat);

    if (*report) {
      const auto maps = curv::decode_auto(read_file(report_file));
      nlohmann::json out = nlohmann::json::array();
      for (const auto& m : maps)
        out.push_back(curv::report_json(m, with_dual, with_medial));
      emit(report_out, (maps.size() == 1 ? out[0] : out).dump(2) + "\n");
      return 0;
    }

    if (*transform) {
      const auto maps = curv::decode_auto(read_file(tin));
      std::vector<EmbeddedMap> results;
      for (const auto& m : maps) {
        if (tkind == "dual") {
          results.push_back(curv::dual(m));
        } else if (tkind == "medial") {
          results.push_back(curv::medial(m));
        } else {
          curv::DualPair pair = curv::inverse_medial(m);
          results.push_back(std::move(pair.primal));
          results.push_back(std::move(pair.dual));
        }
      }
      emit_maps(results, tformat, tout);
      return 0;
    }

    if (*gen_quad) {
      curv::QuadConstraints qc;
      qc.max_faces = max_faces;
      if (vp_filter) qc.allowed_face_patterns = curv::kVpPatterns;
      emit_maps(curv::generate_quadrangulations(qc), gformat, gout);
      return 0;
    }
    if (*gen_corner) {
      emit_maps(curv::generate_corner_candidates(), cg_format, cg_out);
      return 0;
    }
    if (*gen_combos) {
      auto combos = curv::degree_combination_solutions(vmin, vmax);
      if (apply_facts) combos = curv::filter_combinations(combos);
      nlohmann::json out = nlohmann::json::array();
      for (const auto& c : combos) {
        nlohmann::json j{{"v3", c.v3}, {"v4", c.v4}, {"v5", c.v5},
                         {"f3", c.f3}, {"f4", c.f4}, {"f5", c.f5},
                         {"v", c.v},   {"e", c.e},   {"f", c.f}};
        for (int i = 0; i < 10; ++i)
          j[std::string("n") + curv::kPatternNames[i]] = c.n[i];
        out.push_back(std::move(j));
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
