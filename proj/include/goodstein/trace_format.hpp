#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "goodstein/descent.hpp"
#include "goodstein/errors.hpp"
#include "goodstein/sequences.hpp"

namespace goodstein {

enum class OutputFormat { Human, Jsonl, Csv };

/// Accepts "human", "jsonl" or "csv".
std::optional<OutputFormat> parse_output_format(std::string_view name);

class trace_error : public error {
public:
    explicit trace_error(const std::string& what) : error("MalformedTrace", "MalformedTrace: " + what) {}
};

using ordered_json = nlohmann::ordered_json;

/// {"index": 0, "base": "2", "value": "8", "digits": ["1","0","0","0"], "rendered": "1000_2"}
ordered_json record_to_json(const StepRecord& r);

/// Inverse of record_to_json. Throws `trace_error` on missing or mistyped
/// fields and on non-decimal strings.
StepRecord record_from_json(const nlohmann::json& j);

/// {"k": 4, "verdict": "AllStepsDescend" | {"violation_at": i}, "steps_checked": n}
ordered_json certificate_to_json(const DescentCertificate& c);

std::string csv_header();

/// One line, no trailing newline.
std::string format_record(const StepRecord& r, OutputFormat format);
std::string format_summary(const RunOutcome& outcome, OutputFormat format);
std::string format_certificate(const DescentCertificate& c, OutputFormat format);

/// Parses one line of a jsonl trace. Blank lines and the summary and
/// certificate lines written by `run` yield nullopt.
std::optional<StepRecord> parse_trace_line(std::string_view line);

} // namespace goodstein
