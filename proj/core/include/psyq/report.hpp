#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace psyq {

/// One failed axiom instance: which axiom, at which witness tuple
/// (1-based elements), and the two sides that disagreed.
struct AxiomFailure {
    std::string axiom;
    std::vector<int> witness;
    std::string lhs;
    std::string rhs;
};

/// Result of an exhaustive axiom check. Failures are capped at
/// max_failures witnesses; `truncated` is set when the cap was hit.
struct AxiomReport {
    static constexpr std::size_t max_failures = 100;

    std::vector<AxiomFailure> failures;
    bool truncated = false;

    bool pass() const { return failures.empty(); }

    void fail(std::string axiom, std::vector<int> witness,
              std::string lhs = "", std::string rhs = "") {
        if (failures.size() >= max_failures) {
            truncated = true;
            return;
        }
        failures.push_back({std::move(axiom), std::move(witness),
                            std::move(lhs), std::move(rhs)});
    }

    std::string summary() const;
};

/// Thrown by validating constructors; carries the full report.
class AxiomError : public std::runtime_error {
public:
    explicit AxiomError(AxiomReport report);
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

/// Precondition violation (e.g. pseudo mode without pI-adequacy).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input text that could not be parsed; line/column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column);
    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

}  // namespace psyq
