#include "witt/report.hpp"

namespace witt {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::refused:
      return "refused";
    case Verdict::error:
      return "error";
  }
  return "error";
}

void Report::add_residual(Json residual) {
  ++residual_count_;
  if (residuals.size() < kMaxResiduals) residuals.push_back(std::move(residual));
  if (verdict == Verdict::pass) verdict = Verdict::fail;
}

void Report::fail(const std::string& why) {
  if (verdict == Verdict::pass) verdict = Verdict::fail;
  if (message.empty()) message = why;
}

void Report::refuse(const std::string& why) {
  verdict = Verdict::refused;
  message = why;
}

void Report::add_subcheck(Report sub) {
  if (!sub.passed() && verdict == Verdict::pass) {
    verdict = sub.verdict == Verdict::refused ? Verdict::refused : Verdict::fail;
  }
  subchecks.push_back(std::move(sub));
}

Json Report::to_json() const {
  Json j;
  j["check"] = check;
  if (!anchor.empty()) j["anchor"] = anchor;
  j["verdict"] = verdict_name(verdict);
  j["params"] = params;
  j["window"] = window;
  j["witnesses"] = witnesses;
  j["residuals"] = residuals;
  j["residual_count"] = residual_count_;
  if (!stats.empty()) j["stats"] = stats;
  if (!message.empty()) j["message"] = message;
  if (!subchecks.empty()) {
    Json subs = Json::array();
    for (const auto& s : subchecks) subs.push_back(s.to_json());
    j["subchecks"] = subs;
  }
  return j;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 0;
    case Verdict::fail:
      return 1;
    case Verdict::error:
      return 2;
    case Verdict::refused:
      return 3;
  }
  return 2;
}

}  // namespace witt
