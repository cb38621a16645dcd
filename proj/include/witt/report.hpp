#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace witt {

using Json = nlohmann::json;

enum class Verdict { pass, fail, refused, error };

std::string verdict_name(Verdict v);

/// Outcome of one check. Keys of every JSON object are sorted (nlohmann::json
/// uses std::map), so serializing the same report twice gives the same bytes.
struct Report {
  std::string check;
  std::string anchor;
  Verdict verdict = Verdict::pass;
  Json params = Json::object();
  Json window = Json::object();
  Json witnesses = Json::array();
  Json residuals = Json::array();
  Json stats = Json::object();
  std::string message;
  std::vector<Report> subchecks;

  static constexpr std::size_t kMaxResiduals = 64;

  bool passed() const { return verdict == Verdict::pass; }
  /// Records a residual (kept up to kMaxResiduals, always counted) and marks the report failed.
  void add_residual(Json residual);
  void fail(const std::string& why);
  void refuse(const std::string& why);
  /// Appends `sub`; a failing subcheck fails the parent.
  void add_subcheck(Report sub);

  Json to_json() const;
  std::string dump() const { return to_json().dump(2); }

 private:
  std::size_t residual_count_ = 0;
};

/// Exit code for the CLI: 0 pass, 1 fail, 2 input error, 3 refused.
int exit_code(Verdict v);

}  // namespace witt
