#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "cli/io.hpp"
#include "netpriv/oracle.hpp"

namespace netpriv::cli {

enum class Verb { Analyze, Check, Oracle, Reduce };
enum class Problem { Vector, Entry };
enum class OutputFormat { Json, Text };

struct Request {
    Verb verb = Verb::Analyze;
    std::filesystem::path system;
    SystemFormat system_format = SystemFormat::Auto;
    std::string privacy = "full";
    Problem problem = Problem::Vector;
    std::optional<double> tol_rank;
    std::optional<double> tol_cluster;
    Index max_multiplicity = kDefaultMultiplicityCap;
    bool oracle = false;
    Index oracle_max_n = kDefaultOracleMaxN;
    OutputFormat format = OutputFormat::Json;
    bool debug_rank_path = false;

    // check
    std::optional<std::filesystem::path> output_matrix;
    std::optional<std::string> blocked;

    // reduce
    std::filesystem::path w;
    bool verify = false;
};

struct Outcome {
    int exit_code = 0;
    nlohmann::json report;
};

/// 2 for infeasible inputs, 1 for malformed input or I/O.
int exit_code_for(ErrorCode code);

/// Explicit flag first, then NETPRIV_TOL_RANK, then the library default.
Tolerance resolve_tolerance(const Request& request);

/// Never throws for library errors; they become an `error` report and an exit code.
Outcome run(const Request& request);

/// The report in the requested format, newline terminated.
std::string format_outcome(const Outcome& outcome, OutputFormat format);

}  // namespace netpriv::cli
