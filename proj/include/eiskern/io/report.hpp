#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/precision.hpp"

// Run configuration and deterministic report rendering.
namespace eiskern::io {

using Json = nlohmann::ordered_json;

// Malformed command-line input; the CLI maps it to exit code 1.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* kSchema = "eiskern/1";

enum class Format { Json, Csv, Md };
Format parse_format(const std::string& name);
std::string to_string(Format f);

struct RunConfig {
  PrecisionProfile profile = PrecisionProfile::defaults();
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;  // in command-line order
  Format format = Format::Json;
  unsigned long seed = 20240611UL;
};

Json to_json(const PrecisionProfile& p);
Json to_json(const RunConfig& c);

// Overrides the fields present in `j` (P, N_q, M_tail, H_group, tol_bits); unknown keys and a
// foreign "schema" raise SchemaMismatch, wrong types raise BadData.
PrecisionProfile profile_from_json(const Json& j, PrecisionProfile base = {});
PrecisionProfile load_profile_file(const std::string& path);

// Decimal digits carried by printed values at precision P.
int digits_for(long P);
std::string format_real(const mp::Real& x, long P);
std::string format_complex(const mp::Complex& z, long P);
Json complex_json(const mp::Complex& z, long P);
std::string format_double(double x);  // shortest round-trip form

// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i" and "(a,b)" with decimal a, b. UsageError on anything else.
mp::Complex parse_complex(const std::string& text, mp::Bits prec);

// A report: the config header, a JSON result body and an optional table for CSV / Markdown.
struct Report {
  RunConfig config;
  Json result = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  int status = 0;  // process exit code when the command itself ran
};

std::string render(const Report& r);

}  // namespace eiskern::io
