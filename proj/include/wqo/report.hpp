#pragma once

#include <string>

#include "wqo/transform.hpp"

namespace wqo {

/// Human-readable report. Timings are printed only when requested so that
/// output stays byte-stable by default.
std::string format_report_text(const WitnessReport& report, bool timings = false);

/// Line-oriented schema:
///
///   spec=<spec> height=<n> window=<N>
///   source=<description>
///   k=<k> verdict=<bad|good> witness=<s|t or ->      (one line per level)
///   proposition=<ok|violated>
///   echo=<ok|failed>
std::string format_report_structured(const WitnessReport& report);

/// JSON rendering of the same fields (plus timings when requested).
std::string format_report_json(const WitnessReport& report, bool timings = false);

}  // namespace wqo
