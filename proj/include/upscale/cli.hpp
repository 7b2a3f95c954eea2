#ifndef UPSCALE_CLI_HPP
#define UPSCALE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "upscale/kernel.hpp"
#include "upscale/stream.hpp"

namespace upscale::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoError = 2,
  kBadPgm = 3,
  kDimensionMismatch = 4,
};

enum class Subcommand { Scale, Compare, Coeffs, Bench };
enum class ReportFormat { Text, Json };
enum class LutFormat { Csv, Memh };

struct RunConfig {
  Subcommand subcommand = Subcommand::Scale;
  std::string input;
  std::string output;
  std::string reference;  // compare
  std::string test;       // compare
  Method method = Method::Bicubic;
  Mode mode = Mode::Fixed;
  std::int64_t num = 2;
  std::int64_t den = 1;
  std::optional<int> frac_bits;
  ReportFormat format = ReportFormat::Text;
  LutFormat lut_format = LutFormat::Csv;
  std::size_t width = 256;   // bench, when no input is given
  std::size_t height = 256;
  int repeat = 3;

  QFormat qformat() const { return QFormat(frac_bits.value_or(QFormat::kDefaultFracBits)); }
  Scale scale() const { return {num, den}; }
};

/// Throws std::invalid_argument describing the first invalid flag or combination.
void validate(const RunConfig& cfg);

int cmd_scale(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_coeffs(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Coefficient LUT for one axis at the given scale, as csv (with header) or memh.
std::string coeffs_table(Method method, Scale scale, QFormat q, LutFormat format);

/// Parses argv (argv[0] is the program name), validates, and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upscale::cli

#endif  // UPSCALE_CLI_HPP
