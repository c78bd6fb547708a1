#include "goodstein/trace_format.hpp"

#include <limits>
#include <vector>

namespace goodstein {

std::optional<OutputFormat> parse_output_format(std::string_view name)
{
    if (name == "human") {
        return OutputFormat::Human;
    }
    if (name == "jsonl") {
        return OutputFormat::Jsonl;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    return std::nullopt;
}

ordered_json record_to_json(const StepRecord& r)
{
    ordered_json digits = ordered_json::array();
    for (const Natural& d : r.digits.digits()) {
        digits.push_back(d.to_string());
    }
    ordered_json j;
    j["index"] = r.index;
    j["base"] = r.base.to_string();
    j["value"] = r.value.to_string();
    j["digits"] = std::move(digits);
    j["rendered"] = r.rendered;
    return j;
}

namespace {

Natural natural_field(const nlohmann::json& j, const char* key)
{
    const auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
        throw trace_error(std::string("field '") + key + "' must be a decimal string");
    }
    try {
        return Natural::parse(it->get<std::string>());
    } catch (const parse_error& e) {
        throw trace_error(std::string("field '") + key + "': " + e.what());
    }
}

} // namespace

StepRecord record_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) {
        throw trace_error("record is not a JSON object");
    }
    const auto idx = j.find("index");
    if (idx == j.end() || !idx->is_number_unsigned()) {
        throw trace_error("field 'index' must be a non-negative integer");
    }
    StepRecord r;
    r.index = idx->get<std::uint64_t>();
    r.base = natural_field(j, "base");
    r.value = natural_field(j, "value");

    const auto digits = j.find("digits");
    if (digits == j.end() || !digits->is_array()) {
        throw trace_error("field 'digits' must be an array of decimal strings");
    }
    std::vector<Natural> ds;
    ds.reserve(digits->size());
    for (const auto& d : *digits) {
        if (!d.is_string()) {
            throw trace_error("field 'digits' must be an array of decimal strings");
        }
        try {
            ds.push_back(Natural::parse(d.get<std::string>()));
        } catch (const parse_error& e) {
            throw trace_error(std::string("field 'digits': ") + e.what());
        }
    }
    try {
        r.digits = DigitSequence(std::move(ds));
    } catch (const malformed_sequence& e) {
        throw trace_error(std::string("field 'digits': ") + e.what());
    }

    const auto rendered = j.find("rendered");
    if (rendered == j.end() || !rendered->is_string()) {
        throw trace_error("field 'rendered' must be a string");
    }
    r.rendered = rendered->get<std::string>();
    return r;
}

ordered_json certificate_to_json(const DescentCertificate& c)
{
    ordered_json j;
    j["k"] = c.k;
    if (c.verdict.all_steps_descend()) {
        j["verdict"] = "AllStepsDescend";
    } else {
        j["verdict"] = ordered_json{{"violation_at", *c.verdict.violation_at}};
    }
    j["steps_checked"] = c.steps_checked;
    return j;
}

std::string csv_header()
{
    return "index,base,value,rendered";
}

std::string format_record(const StepRecord& r, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Jsonl:
        return record_to_json(r).dump();
    case OutputFormat::Csv:
        return std::to_string(r.index) + ',' + r.base.to_string() + ',' + r.value.to_string() +
               ',' + r.rendered;
    case OutputFormat::Human:
        break;
    }
    return "index=" + std::to_string(r.index) + " base=" + r.base.to_string() +
           " value=" + r.value.to_string() + " rendered=" + r.rendered;
}

std::string format_summary(const RunOutcome& outcome, OutputFormat format)
{
    const std::string status(to_string(outcome.status));
    switch (format) {
    case OutputFormat::Jsonl: {
        ordered_json s;
        s["status"] = status;
        s["steps"] = outcome.steps_emitted;
        return ordered_json{{"summary", std::move(s)}}.dump();
    }
    case OutputFormat::Csv:
        return "# status=" + status + ",steps=" + std::to_string(outcome.steps_emitted);
    case OutputFormat::Human:
        break;
    }
    return "# status=" + status + " steps=" + std::to_string(outcome.steps_emitted);
}

std::string format_certificate(const DescentCertificate& c, OutputFormat format)
{
    if (format == OutputFormat::Jsonl) {
        return ordered_json{{"certificate", certificate_to_json(c)}}.dump();
    }
    return "# certificate " + certificate_to_json(c).dump();
}

std::optional<StepRecord> parse_trace_line(std::string_view line)
{
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
        return std::nullopt;
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw trace_error(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object() && !j.contains("index") &&
        (j.contains("summary") || j.contains("certificate"))) {
        return std::nullopt;
    }
    return record_from_json(j);
}

} // namespace goodstein
