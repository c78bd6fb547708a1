#include "goodstein/cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "goodstein/descent.hpp"
#include "goodstein/hereditary.hpp"
#include "goodstein/numerals.hpp"
#include "goodstein/sequences.hpp"
#include "goodstein/trace_format.hpp"

namespace goodstein::cli {

namespace {

/// Argument that failed validation; the message names the token.
struct bad_argument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Natural parse_natural(const std::string& token, const char* what)
{
    try {
        return Natural::parse(token);
    } catch (const parse_error&) {
        throw bad_argument(std::string("invalid ") + what + " '" + token +
                           "': expected a decimal natural number");
    }
}

Natural parse_base(const std::string& token)
{
    Natural b = parse_natural(token, "base");
    if (b < Natural(2)) {
        throw bad_argument("invalid base '" + token + "': base must be at least 2");
    }
    return b;
}

struct ConvertArgs {
    std::string to_digits;
    std::string to_value;
    std::string base;
};

int cmd_convert(const ConvertArgs& a, std::ostream& out)
{
    const Natural base = parse_base(a.base);
    if (!a.to_digits.empty()) {
        const DigitSequence s = to_digits(parse_natural(a.to_digits, "value"), base);
        if (s.empty()) {
            out << "0\n";
            return kOk;
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            out << (i == 0 ? "" : " ") << s[i];
        }
        out << '\n';
        return kOk;
    }

    std::istringstream tokens(a.to_value);
    std::vector<Natural> digits;
    for (std::string tok; tokens >> tok;) {
        digits.push_back(parse_natural(tok, "digit"));
    }
    // Leading zeros are harmless on the command line.
    std::size_t skip = 0;
    while (skip < digits.size() && digits[skip].is_zero()) {
        ++skip;
    }
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(skip));
    try {
        out << from_digits(DigitSequence(std::move(digits)), base) << '\n';
    } catch (const digit_out_of_range& e) {
        throw bad_argument("invalid digit at index " + std::to_string(e.index() + skip) +
                           ": " + e.what());
    }
    return kOk;
}

struct HereditaryArgs {
    std::string value;
    std::string base = "2";
    std::string render = "text";
};

int cmd_hereditary(const HereditaryArgs& a, std::ostream& out)
{
    const Natural base = parse_base(a.base);
    const HereditaryTree t = build_hereditary(parse_natural(a.value, "value"), base);
    if (a.render == "dot") {
        out << render_tree_dot(t, base);
    } else {
        out << render_tree_text(t, base) << '\n';
    }
    return kOk;
}

struct RunArgs {
    std::string kind;
    std::string start;
    std::string start_base = "2";
    std::uint64_t max_steps = 1'000'000;
    std::uint64_t max_bits = 1'000'000;
    std::string format = "human";
    bool verify = false;
};

int cmd_run(const RunArgs& a, std::ostream& out, std::ostream& err)
{
    SequenceKind kind = SequenceKind::Weak;
    if (a.kind == "decreasing") {
        kind = SequenceKind::Decreasing;
    } else if (a.kind == "strong") {
        kind = SequenceKind::Strong;
    }
    const OutputFormat format = *parse_output_format(a.format);
    if (a.verify && kind != SequenceKind::Weak) {
        throw bad_argument("--verify is only defined for weak runs");
    }
    RunConfig cfg;
    cfg.start_value = parse_natural(a.start, "start");
    if (cfg.start_value.is_zero()) {
        throw bad_argument("invalid start '" + a.start + "': start must be at least 1");
    }
    cfg.start_base = parse_base(a.start_base);
    cfg.max_steps = a.max_steps;
    cfg.max_bits = a.max_bits;
    if (cfg.max_steps < 1) {
        throw bad_argument("invalid max-steps '0': must be at least 1");
    }

    if (format == OutputFormat::Csv) {
        out << csv_header() << '\n';
    }
    DescentVerifier verifier(/*keep_evidence=*/false);
    std::optional<std::string> mismatch;
    const RunOutcome outcome = run(kind, cfg, [&](const StepRecord& r) {
        out << format_record(r, format) << '\n';
        if (a.verify && !mismatch) {
            try {
                verifier.feed(r);
            } catch (const step_mismatch& e) {
                mismatch = e.what();
            }
        }
    });
    out << format_summary(outcome, format) << '\n';

    if (a.verify) {
        if (mismatch) {
            err << "error: " << *mismatch << '\n';
            return kDescentFailed;
        }
        const DescentCertificate cert = verifier.certificate();
        out << format_certificate(cert, format) << '\n';
        return cert.verdict.all_steps_descend() ? kOk : kDescentFailed;
    }
    return outcome.status == RunStatus::TerminatedAtZero ? kOk : kCapReached;
}

int cmd_verify(const std::string& path, std::istream& in, std::ostream& out, std::ostream& err)
{
    std::ifstream file;
    std::istream* src = &in;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) {
            err << "error: cannot open '" << path << "'\n";
            return kBadInput;
        }
        src = &file;
    }

    DescentVerifier verifier;
    std::size_t line_no = 0;
    try {
        for (std::string line; std::getline(*src, line);) {
            ++line_no;
            if (auto rec = parse_trace_line(line)) {
                verifier.feed(*rec);
            }
        }
    } catch (const trace_error& e) {
        err << "error: line " << line_no << ": " << e.what() << '\n';
        return kBadInput;
    } catch (const step_mismatch& e) {
        err << "error: " << e.what() << '\n';
        return kDescentFailed;
    }
    if (verifier.empty()) {
        err << "error: " << empty_run().what() << '\n';
        return kBadInput;
    }
    const DescentCertificate cert = verifier.certificate();
    out << certificate_to_json(cert).dump() << '\n';
    if (!cert.verdict.all_steps_descend()) {
        err << "error: descent violated at index " << *cert.verdict.violation_at << '\n';
        return kDescentFailed;
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"Goodstein sequences and lexicographic descent certificates", "goodstein"};
    app.require_subcommand(1);

    ConvertArgs conv;
    auto* convert = app.add_subcommand("convert", "Convert between values and base-b digits");
    auto* to_d = convert->add_option("--to-digits", conv.to_digits, "Decimal value to expand");
    auto* to_v = convert->add_option("--to-value", conv.to_value,
                                     "Space-separated digits, most significant first");
    to_d->excludes(to_v);
    convert->add_option("--base", conv.base, "Base, at least 2")->required();
    convert->require_option(2);

    HereditaryArgs her;
    auto* hereditary = app.add_subcommand("hereditary", "Hereditary base notation of a value");
    hereditary->add_option("value", her.value, "Decimal value")->required();
    hereditary->add_option("--base", her.base, "Hereditary base, at least 2");
    hereditary->add_option("--render", her.render, "Output form")
        ->check(CLI::IsMember({"text", "dot"}));

    RunArgs ra;
    auto* runc = app.add_subcommand("run", "Stream a decreasing, weak or strong sequence");
    runc->add_option("kind", ra.kind, "Sequence kind")
        ->required()
        ->check(CLI::IsMember({"decreasing", "weak", "strong"}));
    runc->add_option("--start", ra.start, "Seed value, at least 1")->required();
    runc->add_option("--start-base,--base", ra.start_base, "Initial base (default 2)");
    runc->add_option("--max-steps", ra.max_steps, "Maximum records emitted, seed included");
    runc->add_option("--max-bits", ra.max_bits, "Bit-length cap for strong steps");
    runc->add_option("--format", ra.format, "Output format")
        ->check(CLI::IsMember({"human", "jsonl", "csv"}));
    runc->add_flag("--verify", ra.verify, "Check lexicographic descent (weak only)");

    std::string verify_path;
    std::string verify_format = "jsonl";
    auto* verify = app.add_subcommand("verify", "Re-check a jsonl weak-run trace");
    verify->add_option("input", verify_path, "Trace file; stdin when omitted or '-'");
    verify->add_option("--format", verify_format, "Input format")
        ->check(CLI::IsMember({"jsonl"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kBadInput;
    }

    try {
        if (convert->parsed()) {
            return cmd_convert(conv, out);
        }
        if (hereditary->parsed()) {
            return cmd_hereditary(her, out);
        }
        if (runc->parsed()) {
            return cmd_run(ra, out, err);
        }
        return cmd_verify(verify_path, in, out, err);
    } catch (const bad_argument& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const goodstein::error& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
}

} // namespace goodstein::cli
