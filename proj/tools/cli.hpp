#pragma once

// Front end for the `yamabe` tool. The command logic lives here, separate
// from main(), so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "yamabe/bounds.hpp"
#include "yamabe/mu_zero.hpp"
#include "yamabe/squeeze.hpp"
#include "yamabe/tables.hpp"

namespace yamabe::cli {

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_format(std::string_view name);

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMissingConstant = 3;
inline constexpr int kExitNumerical = 4;

/// Round to 12 significant digits, the precision of all JSON output.
double canonical(double value);

std::string render_bound(const BoundResult& result, const ModelSpaceParams& params,
                         const GammaInput& gamma, OutputFormat format);
std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat format);
std::string render_table_tn(const std::vector<TnRow>& rows, OutputFormat format);
std::string render_sigma(const std::vector<SigmaBound>& bounds, OutputFormat format);
std::string render_squeeze(const SqueezeMap& map, const SqueezeEvaluation& evaluation,
                           OutputFormat format);

/// Parse and execute a command line. argv[0] is the program name. Data goes
/// to `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yamabe::cli
