#include "upscale/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ios>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "upscale/image.hpp"
#include "upscale/metrics.hpp"
#include "upscale/pipesim.hpp"

namespace upscale::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string dims(std::size_t w, std::size_t h) { return std::to_string(w) + "x" + std::to_string(h); }

ScaleJob job_for(const RunConfig& cfg, std::size_t width, std::size_t height) {
  return ScaleJob(cfg.method, cfg.mode, cfg.scale(), width, height, cfg.qformat());
}

// Deterministic bench input: diagonal ramp with a coarse checker overlay.
Image synthetic_image(std::size_t w, std::size_t h) {
  Image img(w, h);
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x)
      img.set(x, y, static_cast<Pixel>((x + y + (((x / 16) ^ (y / 16)) & 1) * 64) & 0xFF));
  return img;
}

void print_report(std::ostream& out, ReportFormat fmt, const Json& j) {
  if (fmt == ReportFormat::Json) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (v.is_null())
      out << k << ": inf\n";
    else if (v.is_string())
      out << k << ": " << v.get<std::string>() << "\n";
    else
      out << k << ": " << v.dump() << "\n";
  }
}

// Maps library exceptions onto the documented exit statuses.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const PgmError& e) {
    err << "error: malformed PGM: " << e.what() << "\n";
    return kBadPgm;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kDimensionMismatch;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.num < 1) throw std::invalid_argument("--num must be >= 1");
  if (cfg.den < 1) throw std::invalid_argument("--den must be >= 1");
  if (cfg.frac_bits) {
    if (cfg.mode == Mode::Exact && cfg.subcommand != Subcommand::Coeffs)
      throw std::invalid_argument("--frac-bits only applies to --mode fixed");
    if (*cfg.frac_bits < QFormat::kMinFracBits || *cfg.frac_bits > QFormat::kMaxFracBits)
      throw std::invalid_argument("--frac-bits must be in 4..16");
  }
  switch (cfg.subcommand) {
    case Subcommand::Scale:
      if (cfg.input.empty() || cfg.output.empty()) throw std::invalid_argument("scale needs --input and --output");
      break;
    case Subcommand::Compare:
      if (cfg.reference.empty() || cfg.test.empty()) throw std::invalid_argument("compare needs two image paths");
      break;
    case Subcommand::Coeffs:
      break;
    case Subcommand::Bench:
      if (cfg.width < 1 || cfg.height < 1) throw std::invalid_argument("--width and --height must be >= 1");
      if (cfg.repeat < 1) throw std::invalid_argument("--repeat must be >= 1");
      break;
  }
}

int cmd_scale(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(cfg);
    const auto img = load_pgm(cfg.input);
    const auto job = job_for(cfg, img.width(), img.height());
    const auto t0 = Clock::now();
    const auto result = scale_image(img, job);
    const std::chrono::duration<double> wall = Clock::now() - t0;
    save_pgm(cfg.output, result);

    Json j;
    j["method"] = to_string(job.method());
    j["mode"] = to_string(job.mode());
    if (job.mode() == Mode::Fixed) j["frac_bits"] = job.qformat().frac_bits();
    j["input"] = dims(img.width(), img.height());
    j["output"] = dims(result.width(), result.height());
    j["wall_seconds"] = wall.count();
    print_report(out, cfg.format, j);
    return kOk;
  });
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(cfg);
    const auto ref = load_pgm(cfg.reference);
    const auto test = load_pgm(cfg.test);
    const auto q = compare(ref, test);
    Json j;
    j["psnr_db"] = q.identical() ? Json(nullptr) : Json(q.psnr_db);
    j["ssim"] = q.ssim;
    j["width"] = q.width;
    j["height"] = q.height;
    print_report(out, cfg.format, j);
    return kOk;
  });
}

std::string coeffs_table(Method method, Scale scale, QFormat q, LutFormat format) {
  // one full phase period: num outputs over den inputs
  const auto plan = make_axis_plan(method, Mode::Fixed, q, scale, static_cast<std::size_t>(scale.den),
                                   static_cast<std::size_t>(scale.num));
  std::ostringstream os;
  const auto bits = q.word_bits();
  const auto mask = (std::uint64_t{1} << bits) - 1;
  const auto hex_digits = (bits + 3) / 4;
  if (format == LutFormat::Csv) os << "phase,dx,tap,offset,exact,raw,csd\n";
  for (std::size_t p = 0; p < plan.fixed.size(); ++p) {
    for (std::size_t t = 0; t < plan.fixed[p].taps.size(); ++t) {
      const auto& w = plan.fixed[p].taps[t];
      if (format == LutFormat::Csv) {
        os << p << "," << plan.phases.period_phases()[p].dx << "," << t << ","
           << first_tap_offset(method) + static_cast<std::int64_t>(t) << "," << plan.exact[p].taps[t] << ","
           << w.raw << "," << csd_string(w.csd) << "\n";
      } else {
        os << std::hex << std::nouppercase << std::setw(hex_digits) << std::setfill('0')
           << (static_cast<std::uint64_t>(static_cast<std::int64_t>(w.raw)) & mask) << std::dec << "\n";
      }
    }
  }
  return os.str();
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(cfg);
    const auto table = coeffs_table(cfg.method, cfg.scale(), cfg.qformat(), cfg.lut_format);
    if (cfg.output.empty()) {
      out << table;
    } else {
      std::ofstream f(cfg.output);
      if (!f) throw std::ios_base::failure("cannot open " + cfg.output + " for writing");
      f << table;
    }
    return kOk;
  });
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(cfg);
    const auto img = cfg.input.empty() ? synthetic_image(cfg.width, cfg.height) : load_pgm(cfg.input);
    const auto job = job_for(cfg, img.width(), img.height());
    const auto report = simulate(job);

    double best = std::numeric_limits<double>::infinity();
    CycleCounter counted;
    for (int i = 0; i < cfg.repeat; ++i) {
      const auto t0 = Clock::now();
      const auto result = scale_image(img, job, counted);
      const std::chrono::duration<double> wall = Clock::now() - t0;
      best = std::min(best, wall.count());
    }

    Json j;
    j["method"] = to_string(job.method());
    j["mode"] = to_string(job.mode());
    if (job.mode() == Mode::Fixed) j["frac_bits"] = job.qformat().frac_bits();
    j["input"] = dims(job.in_width(), job.in_height());
    j["output"] = dims(job.out_width(), job.out_height());
    j["fill_latency"] = report.fill_latency;
    j["total_cycles"] = report.total_cycles;
    j["outputs"] = report.outputs;
    j["steady_state_rate"] = report.steady_state_rate;
    j["counted_total_cycles"] = counted.total();
    if (report.resources) {
      j["adder_count"] = report.resources->adder_count;
      j["register_count"] = report.resources->register_count;
    }
    j["wall_seconds_best"] = best;
    j["wall_mpix_per_s"] = best > 0 ? static_cast<double>(report.outputs) / best / 1e6 : 0.0;
    print_report(out, cfg.format, j);
    return kOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Streaming bilinear/bicubic image upscaler with a fixed-point hardware model"};
  app.require_subcommand(1);

  const std::map<std::string, Method> methods{{"bilinear", Method::Bilinear}, {"bicubic", Method::Bicubic}};
  const std::map<std::string, Mode> modes{{"exact", Mode::Exact}, {"fixed", Mode::Fixed}};
  const std::map<std::string, ReportFormat> formats{{"text", ReportFormat::Text}, {"json", ReportFormat::Json}};
  const std::map<std::string, LutFormat> lut_formats{{"csv", LutFormat::Csv}, {"memh", LutFormat::Memh}};

  int frac_bits = QFormat::kDefaultFracBits;
  auto add_job_flags = [&](CLI::App* sub, bool with_mode) {
    sub->add_option("--method", cfg.method, "bilinear | bicubic")->transform(CLI::CheckedTransformer(methods));
    if (with_mode) sub->add_option("--mode", cfg.mode, "exact | fixed")->transform(CLI::CheckedTransformer(modes));
    sub->add_option("--num", cfg.num, "scale numerator (>= 1)");
    sub->add_option("--den", cfg.den, "scale denominator (>= 1)");
    return sub->add_option("--frac-bits", frac_bits, "fractional coefficient bits, 4..16 (fixed mode)");
  };

  auto* scale = app.add_subcommand("scale", "Upscale a PGM through the streaming engine");
  scale->add_option("-i,--input", cfg.input, "input PGM")->required();
  scale->add_option("-o,--output", cfg.output, "output PGM")->required();
  auto* scale_fb = add_job_flags(scale, true);
  scale->add_option("--format", cfg.format, "text | json")->transform(CLI::CheckedTransformer(formats));

  auto* cmp = app.add_subcommand("compare", "PSNR and SSIM of a test image against a reference");
  cmp->add_option("reference", cfg.reference, "reference PGM")->required();
  cmp->add_option("test", cfg.test, "test PGM")->required();
  cmp->add_option("--format", cfg.format, "text | json")->transform(CLI::CheckedTransformer(formats));

  auto* coeffs = app.add_subcommand("coeffs", "Export quantized coefficient LUTs");
  auto* coeffs_fb = add_job_flags(coeffs, false);
  coeffs->add_option("--format", cfg.lut_format, "csv | memh")->transform(CLI::CheckedTransformer(lut_formats));
  coeffs->add_option("-o,--output", cfg.output, "write to file instead of stdout");

  auto* bench = app.add_subcommand("bench", "Predicted cycles next to measured throughput");
  auto* bench_fb = add_job_flags(bench, true);
  bench->add_option("-i,--input", cfg.input, "input PGM (default: synthetic image)");
  bench->add_option("--width", cfg.width, "synthetic image width");
  bench->add_option("--height", cfg.height, "synthetic image height");
  bench->add_option("--repeat", cfg.repeat, "timed runs; the best is reported");
  bench->add_option("--format", cfg.format, "text | json")->transform(CLI::CheckedTransformer(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  for (auto* fb : {scale_fb, coeffs_fb, bench_fb})
    if (fb->count() > 0) cfg.frac_bits = frac_bits;

  if (scale->parsed()) {
    cfg.subcommand = Subcommand::Scale;
    return cmd_scale(cfg, out, err);
  }
  if (cmp->parsed()) {
    cfg.subcommand = Subcommand::Compare;
    return cmd_compare(cfg, out, err);
  }
  if (coeffs->parsed()) {
    cfg.subcommand = Subcommand::Coeffs;
    return cmd_coeffs(cfg, out, err);
  }
  cfg.subcommand = Subcommand::Bench;
  return cmd_bench(cfg, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"upscale"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace upscale::cli
