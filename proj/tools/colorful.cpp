#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "colorful/json_io.hpp"
#include "colorful/pipeline.hpp"
#include "colorful/svg.hpp"

namespace fs = std::filesystem;
using colorful::io::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int cmd_gen(std::uint64_t seed, std::int64_t bound, bool keep) {
  colorful::GenSpec spec{seed, bound, keep ? colorful::DegeneracyPolicy::KeepFlagged : colorful::DegeneracyPolicy::Reject};
  const auto g = colorful::random_config(spec);
  json out = colorful::io::to_json(g.config);
  out["seed"] = seed;
  out["bound"] = bound;
  out["retries"] = g.retries;
  if (keep) out["degenerate"] = g.flags.any();
  std::cout << out.dump(2) << '\n';
  return 0;
}

json verify_json(const colorful::ColorConfig& cfg, bool trace, int& status) {
  const auto result = colorful::verify_theorem(cfg);
  if (const auto* u = std::get_if<colorful::Unresolved>(&result)) {
    status = 2;
    return colorful::io::to_json(*u);
  }
  status = 0;
  json out = colorful::io::to_json(std::get<colorful::TheoremCert>(result));
  if (trace) out["trace"] = colorful::io::to_json(colorful::diagnostic_chain(cfg));
  return out;
}

int cmd_verify(const std::string& path, bool trace) {
  int status = 0;
  const json out = verify_json(colorful::io::config_from(read_json(path)), trace, status);
  std::cout << out.dump(2) << '\n';
  return status;
}

int cmd_batch(std::size_t n, std::uint64_t seed, std::int64_t bound, const std::string& dir, unsigned jobs) {
  fs::create_directories(dir);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t red = 0, blue = 0, both = 0, unresolved = 0;
  std::vector<std::string> errors;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) {
      try {
        const auto g = colorful::random_config({seed + k, bound, colorful::DegeneracyPolicy::Reject});
        int status = 0;
        json out = verify_json(g.config, false, status);
        out["seed"] = seed + k;
        out["config"] = colorful::io::to_json(g.config);
        write_file(fs::path(dir) / ("config_" + std::to_string(seed + k) + ".json"), out.dump(2) + "\n");
        std::lock_guard lock(mu);
        if (status != 0)
          ++unresolved;
        else if (out["verdict"] == "red")
          ++red;
        else if (out["verdict"] == "blue")
          ++blue;
        else
          ++both;
      } catch (const std::exception& e) {
        std::lock_guard lock(mu);
        errors.push_back("seed " + std::to_string(seed + k) + ": " + e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  json summary{{"red", red}, {"blue", blue}, {"both", both}, {"unresolved", unresolved}};
  if (!errors.empty()) summary["errors"] = errors;
  write_file(fs::path(dir) / "summary.json", summary.dump(2) + "\n");
  std::cout << summary.dump(2) << '\n';
  return unresolved == 0 && errors.empty() ? 0 : 2;
}

int cmd_lemma(const std::string& path) {
  std::cout << colorful::io::lemma_verdict_json(read_json(path)).dump(2) << '\n';
  return 0;
}

int cmd_draw(const std::string& path, const std::string& svg, bool force) {
  const colorful::ColorConfig cfg = colorful::io::config_from(read_json(path));
  const auto red = colorful::separation_pattern(cfg.red_bodies());
  const auto blue = colorful::separation_pattern(cfg.blue_bodies());
  std::array<colorful::Ray, 3> blue_rays{colorful::Ray(colorful::vec3(1, 0, 0)), colorful::Ray(colorful::vec3(0, 1, 0)),
                                         colorful::Ray(colorful::vec3(0, 0, 1))};
  std::array<colorful::Ray, 3> red_rays = blue_rays;
  if (colorful::holds(red) && colorful::holds(blue)) {
    for (std::size_t k = 0; k < 3; ++k) {
      blue_rays[k] = std::get<colorful::FullPattern>(blue).certs[k].half.normal;
      red_rays[k] = std::get<colorful::FullPattern>(red).certs[k].half.normal;
    }
  } else if (!force) {
    std::cerr << "separation patterns do not both hold; pass --force to draw the available normals\n";
    return 1;
  } else {
    // Forced: use whatever pairwise separations exist, body i against the
    // hull of the other two, or the pair's first body otherwise.
    auto normals = [](const std::array<colorful::ConvexBody, 3>& bodies, std::array<colorful::Ray, 3>& rays) {
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& o1 = bodies[(i + 1) % 3];
        const auto& o2 = bodies[(i + 2) % 3];
        auto r = colorful::separate_bodies(bodies[i], colorful::hull_union(o1, o2));
        if (auto* c = std::get_if<colorful::SeparationCert>(&r)) rays[i] = c->half.normal;
      }
    };
    normals(cfg.blue_bodies(), blue_rays);
    normals(cfg.red_bodies(), red_rays);
  }
  const auto drawing = colorful::build_drawing(blue_rays, red_rays);
  std::optional<colorful::CrossingWitness> crossing;
  auto c = colorful::find_crossing(drawing);
  if (auto* w = std::get_if<colorful::CrossingWitness>(&c)) crossing = *w;
  write_file(svg, colorful::render_svg(drawing, crossing));
  json out{{"drawing", colorful::io::to_json(drawing)}, {"svg", svg}};
  out["crossing"] = crossing ? colorful::io::to_json(*crossing) : json(nullptr);
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for line transversals of three red and three blue triangles"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::int64_t bound = 100;
  bool keep = false, trace = false, force = false;
  std::size_t n = 100;
  std::string input, out_dir = "batch_out", svg;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* gen = app.add_subcommand("gen", "Random configuration as JSON");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--bound", bound)->required()->check(CLI::PositiveNumber);
  gen->add_flag("--keep-degenerate", keep, "Keep degenerate draws instead of resampling");

  auto* verify = app.add_subcommand("verify", "Certify a transversal for one color");
  verify->add_option("config", input)->required()->check(CLI::ExistingFile);
  verify->add_flag("--trace", trace, "Attach the proof-chain diagnostic");

  auto* batch = app.add_subcommand("batch", "Verify N seeded configurations");
  batch->add_option("--n", n)->required();
  batch->add_option("--seed", seed)->required();
  batch->add_option("--bound", bound)->required()->check(CLI::PositiveNumber);
  batch->add_option("--out", out_dir);
  batch->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* lemma = app.add_subcommand("lemma", "Decide a basic or pencil lemma instance");
  lemma->add_option("instance", input)->required()->check(CLI::ExistingFile);

  auto* draw = app.add_subcommand("draw", "Render the sphere drawing of the separation normals");
  draw->add_option("config", input)->required()->check(CLI::ExistingFile);
  draw->add_option("--svg", svg)->required();
  draw->add_flag("--force", force, "Draw even when a separation pattern fails");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return cmd_gen(seed, bound, keep);
    if (*verify) return cmd_verify(input, trace);
    if (*batch) return cmd_batch(n, seed, bound, out_dir, jobs);
    if (*lemma) return cmd_lemma(input);
    if (*draw) return cmd_draw(input, svg, force);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
