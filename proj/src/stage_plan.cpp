#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "divgraph/pipeline.hpp"

namespace divgraph {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(std::string_view stage, const std::string& what) {
  throw std::invalid_argument("stage plan: '" + std::string(stage) + "': " + what);
}

std::size_t parse_count(std::string_view stage, std::string_view s) {
  std::size_t mult = 1;
  if (!s.empty() && (s.back() == 'k' || s.back() == 'K')) {
    mult = 1000;
    s.remove_suffix(1);
  } else if (!s.empty() && s.back() == 'M') {
    mult = 1000000;
    s.remove_suffix(1);
  }
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    bad(stage, "expected a nonnegative integer, got '" + std::string(s) + "'");
  }
  return v * mult;
}

double parse_real(std::string_view stage, std::string_view s) {
  std::string buf(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(buf, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != buf.size() || buf.empty()) bad(stage, "expected a number, got '" + buf + "'");
  return v;
}

std::vector<std::string_view> split_arrows(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t len = 0;
    if (text.compare(i, 2, "->") == 0) len = 2;
    else if (text.compare(i, 3, "\xE2\x86\x92") == 0) len = 3;
    if (len) {
      parts.push_back(text.substr(start, i - start));
      i += len;
      start = i;
    } else {
      ++i;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

Stage parse_stage(std::string_view token) {
  token = trim(token);
  const auto open = token.find('[');
  if (open == std::string_view::npos || token.back() != ']') bad(token, "expected name[budget,...]");
  const auto name = trim(token.substr(0, open));
  Stage st;
  if (name == "greedy") st.kind = StageKind::Greedy;
  else if (name == "genetic") st.kind = StageKind::Genetic;
  else if (name == "local_opt") st.kind = StageKind::LocalOpt;
  else bad(token, "unknown stage (valid: greedy, genetic, local_opt)");

  auto body = token.substr(open + 1, token.size() - open - 2);
  bool first = true;
  while (true) {
    const auto comma = body.find(',');
    const auto item = trim(body.substr(0, comma));
    if (first) {
      st.budget = parse_count(token, item);
      first = false;
    } else {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) bad(token, "expected key=value, got '" + std::string(item) + "'");
      const auto key = trim(item.substr(0, eq));
      const auto value = trim(item.substr(eq + 1));
      if (key == "K" && st.kind != StageKind::Greedy) {
        st.K = (value == "inf" || value == "none") ? kNoEscape : parse_count(token, value);
      } else if (key == "alpha" && st.kind == StageKind::Genetic) {
        st.alpha = parse_real(token, value);
      } else {
        bad(token, "unexpected parameter '" + std::string(key) + "'");
      }
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return st;
}

std::string fixed(double v, int digits) {
  if (std::isnan(v)) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string_view to_string(StageKind kind) {
  switch (kind) {
    case StageKind::Greedy: return "greedy";
    case StageKind::Genetic: return "genetic";
    case StageKind::LocalOpt: return "local_opt";
  }
  return "?";
}

StagePlan parse_stage_plan(std::string_view text) {
  StagePlan plan;
  if (trim(text).empty()) throw std::invalid_argument("stage plan is empty");
  for (auto part : split_arrows(text)) plan.stages.push_back(parse_stage(part));
  validate(plan);
  return plan;
}

void validate(const StagePlan& plan) {
  if (plan.stages.empty()) throw std::invalid_argument("stage plan is empty");
  for (std::size_t i = 0; i < plan.stages.size(); ++i) {
    const auto& s = plan.stages[i];
    const std::string where = "stage plan: stage " + std::to_string(i) + " (" + std::string(to_string(s.kind)) + ")";
    if (s.budget == 0) throw std::invalid_argument(where + ": budget must be positive");
    if (s.K == 0) throw std::invalid_argument(where + ": K must be positive or inf");
    if (!(s.alpha >= 0.0 && s.alpha <= 1.0)) throw std::invalid_argument(where + ": alpha must be in [0,1]");
  }
}

std::string to_string(const StagePlan& plan) {
  std::string out;
  for (const auto& s : plan.stages) {
    if (!out.empty()) out += "->";
    out += to_string(s.kind);
    out += '[' + std::to_string(s.budget);
    if (s.kind != StageKind::Greedy) {
      out += ",K=" + (s.K == kNoEscape ? std::string("inf") : std::to_string(s.K));
    }
    if (s.kind == StageKind::Genetic) {
      std::ostringstream a;
      a << s.alpha;
      out += ",alpha=" + a.str();
    }
    out += ']';
  }
  return out;
}

std::string format_run_report(const RunReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-5s %-10s %10s %10s %14s %14s %10s %10s %8s\n", "stage", "kind",
                "budget", "used", "penalty_in", "penalty_out", "attempts", "accepted", "forced");
  out += line;
  for (std::size_t i = 0; i < report.stages.size(); ++i) {
    const auto& s = report.stages[i];
    std::snprintf(line, sizeof line, "%-5zu %-10s %10zu %10zu %14s %14s %10zu %10zu %8zu\n", i,
                  std::string(to_string(s.kind)).c_str(), s.budget, s.used,
                  fixed(s.penalty_before, 6).c_str(), fixed(s.penalty_after, 6).c_str(), s.attempts,
                  s.accepted, s.forced);
    out += line;
  }
  std::snprintf(line, sizeof line, "total used: %zu\n", report.total_used());
  out += line;
  return out;
}

std::string run_report_json(const RunReport& report) {
  nlohmann::json doc;
  doc["total_used"] = report.total_used();
  auto stages = nlohmann::json::array();
  for (const auto& s : report.stages) {
    nlohmann::json j;
    j["kind"] = std::string(to_string(s.kind));
    j["budget"] = s.budget;
    j["used"] = s.used;
    j["penalty_before"] = std::isnan(s.penalty_before) ? nlohmann::json() : nlohmann::json(s.penalty_before);
    j["penalty_after"] = s.penalty_after;
    j["attempts"] = s.attempts;
    j["accepted"] = s.accepted;
    j["forced"] = s.forced;
    stages.push_back(j);
  }
  doc["stages"] = stages;
  return doc.dump();
}

}  // namespace divgraph
