#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "c2/arith.hpp"
#include "c2/circle.hpp"
#include "c2/factory.hpp"
#include "output.hpp"

namespace c2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;

struct RunConfig {
    std::string subcommand;
    Format format = Format::csv;
    std::optional<std::string> output;
    std::optional<std::string> cache;  // --cache, else $C2_CACHE
    unsigned threads = 0;

    // search / verify
    unsigned k = 0;
    i64 m_min = 1;
    i64 m_max = 0;
    i64 d_max = kDefaultMaxDiscriminant;
    bool negative = false;
    std::optional<i64> p1;
    std::optional<i64> p2;
    std::optional<i64> M;

    // verify / classgroup
    std::optional<u64> d;
    bool forms = false;

    // singular
    u64 m = 0;
    u64 Q = kDefaultSeriesTruncation;

    // compare
    u64 n_lo = 0;
    u64 n_hi = 0;
    u64 step = 1;
    bool skip_vanishing = false;
};

struct HelpRequested {
    std::string text;
};

/// Parses flags into a RunConfig. Throws CLI::ParseError on bad input and
/// HelpRequested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classgroup(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_singular(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full front end: parse, dispatch, map errors to exit codes {0, 1, 2}.
/// args excludes the program name. Data goes to out (or --output), run
/// metadata and error lines to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c2::cli
