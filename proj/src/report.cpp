#include "wqo/report.hpp"

#include <json.hpp>
#include <sstream>

#include "wqo/text.hpp"

namespace wqo {

namespace {

std::string witness_text(const GoodnessVerdict& v) {
  return v.witness ? format_pair(v.witness->first, v.witness->second) : "-";
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string format_report_text(const WitnessReport& report, bool timings) {
  std::ostringstream out;
  out << "Transform pipeline over " << format_spec(report.spec) << ", height " << report.height
      << ", window " << report.window << "\n";
  out << "source: " << report.source << "\n";
  for (const LevelVerdict& lv : report.levels) {
    const std::size_t k = lv.level;
    out << "level " << k << ": [N]^" << k + 1 << " -> N^" << k << " x w^X_" << report.height - k
        << "  " << binomial(report.window, k + 2) << " pairs  ";
    if (lv.verdict.good()) {
      out << "good, witness " << witness_text(lv.verdict);
    } else {
      out << "bad on window";
    }
    if (timings) out << "  (build " << lv.build_seconds << "s, scan " << lv.scan_seconds << "s)";
    out << "\n";
  }
  if (report.proposition_violations.empty()) {
    out << "badness propagation: holds at every level\n";
  } else {
    out << "badness propagation: VIOLATED after levels " << join(report.proposition_violations)
        << "\n";
  }
  if (!report.echo_failures.empty()) {
    out << "proof-step echo: FAILED at levels " << join(report.echo_failures) << "\n";
  }
  return out.str();
}

std::string format_report_structured(const WitnessReport& report) {
  std::ostringstream out;
  out << "spec=" << format_spec(report.spec) << " height=" << report.height
      << " window=" << report.window << "\n";
  out << "source=" << report.source << "\n";
  for (const LevelVerdict& lv : report.levels) {
    out << "k=" << lv.level << " verdict=" << (lv.verdict.good() ? "good" : "bad")
        << " witness=" << witness_text(lv.verdict) << "\n";
  }
  out << "proposition=" << (report.proposition_violations.empty() ? "ok" : "violated") << "\n";
  out << "echo=" << (report.echo_failures.empty() ? "ok" : "failed") << "\n";
  return out.str();
}

std::string format_report_json(const WitnessReport& report, bool timings) {
  nlohmann::ordered_json j;
  j["spec"] = format_spec(report.spec);
  j["height"] = report.height;
  j["window"] = report.window;
  j["source"] = report.source;
  j["levels"] = nlohmann::ordered_json::array();
  for (const LevelVerdict& lv : report.levels) {
    nlohmann::ordered_json level;
    level["k"] = lv.level;
    level["verdict"] = lv.verdict.good() ? "good" : "bad";
    if (lv.verdict.witness) {
      level["witness"] = {format_node(lv.verdict.witness->first),
                          format_node(lv.verdict.witness->second)};
    } else {
      level["witness"] = nullptr;
    }
    if (timings) {
      level["build_seconds"] = lv.build_seconds;
      level["scan_seconds"] = lv.scan_seconds;
    }
    j["levels"].push_back(std::move(level));
  }
  j["proposition_violations"] = report.proposition_violations;
  j["echo_failures"] = report.echo_failures;
  return j.dump(2) + "\n";
}

}  // namespace wqo
