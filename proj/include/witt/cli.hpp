#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/analysis.hpp"

namespace witt {

/// Thrown for bad flags, config files and literals; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string mode;  // "numeric" or "symbolic"; empty picks the command default
  std::map<std::string, std::string> params;  // l b c a1 a2 as rational strings
  std::optional<Window> window;
  std::vector<GeneratorWord> words;  // override for generate
  std::string seed;
  std::string word;
  std::string vector;
  std::optional<int> s;
  std::optional<int> k;
  std::vector<int> integral_alpha = {1, -1};
  std::string out;
  bool serial = false;
};

std::vector<std::string> command_names();

/// Reads `key = value` lines ('#' starts a comment) into `cfg`.
/// Keys: mode, l, b, c, a1, a2, window, words, seed, word, vector, s, k,
/// integral_alpha, out, serial.
void apply_config_file(const std::string& path, RunConfig& cfg);
void apply_config_entry(const std::string& key, const std::string& value, RunConfig& cfg);

/// "I,R1,R2,margin".
Window parse_window(const std::string& text);

/// Parameters for the command's mode. Throws InputError when numeric mode
/// lacks a parameter value or symbolic mode is given one.
Sl3Params resolve_params(const std::string& command, const RunConfig& cfg);

Report run_command(const std::string& command, const RunConfig& cfg);

/// Full command line: parses, runs, writes the JSON report to `out` (or the
/// --out file) and returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace witt
