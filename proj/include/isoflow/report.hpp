#ifndef ISOFLOW_REPORT_HPP
#define ISOFLOW_REPORT_HPP

// Suite runner plumbing: per-check results with anchors and witnesses,
// deterministic text/JSON reports.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoflow {

enum class CheckStatus { Pass, Fail, Report };

struct CheckResult {
    std::string suite;
    std::string id;
    std::string anchor;   // stable label tying the check to its source identity
    CheckStatus status = CheckStatus::Fail;
    std::string witness;  // failing order, residual note, or discrepancy record
    long ms = 0;
};

struct SuiteConfig {
    int order = 40;
    unsigned digits = 40;
    int degree_cap = 400;
    bool timings = false;  // keep reports byte-identical by default
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckResult> checks;

    int passed = 0;
    int failed = 0;
    int reports = 0;

    void add(CheckResult r);
    bool ok() const { return failed == 0; }
    std::string to_text() const;
    std::string to_json() const;
};

struct UnknownSuite : std::runtime_error {
    explicit UnknownSuite(const std::string& n) : std::runtime_error("unknown suite: " + n) {}
};
struct BadConfig : std::runtime_error {
    explicit BadConfig(const std::string& m) : std::runtime_error("bad configuration: " + m) {}
};

// suite names: rotabaxter, isogenies, conjugation, padehunt, modular,
// lattice, hypergeom, all
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);
std::vector<std::string> suite_names();

// share-directory resolution for the identity corpus (overridable by the
// ISOFLOW_SHARE environment variable)
std::string share_path(const std::string& filename);

}  // namespace isoflow

#endif
