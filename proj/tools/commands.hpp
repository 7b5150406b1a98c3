#pragma once

#include "fixtures.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace innc::cli {

struct CommandResult {
    Json json;
    std::string table;
};

CommandResult cmd_h1(const Fixture& f);
CommandResult cmd_charvar(const Fixture& f, std::size_t k, long order_bound);
/// sub: faces | global | contributing | exp
CommandResult cmd_polytope(const Fixture& f, const std::string& sub);
/// realization: top | hodge | limit. Without chi the limit is tabulated over characters of order <= order_bound.
CommandResult cmd_zeta(const Fixture& f, const std::string& realization, const std::optional<Character>& chi,
                       long order_bound = 4);

struct SelftestOutcome {
    std::size_t passed = 0, failed = 0, skipped = 0;
    std::vector<std::string> lines;
};
/// Checks one fixture against its expected block; empty diff list means it passes.
std::vector<std::string> check_fixture(const Fixture& f);
SelftestOutcome cmd_selftest(const std::vector<std::string>& paths);

/// Parses arguments and runs a command. Exit codes: 0 success, 1 computation error, 2 input error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

/// "x1 + 2*x3 = 1".
std::string hyperplane_text(const RationalVector& a, const Rational& c);

}  // namespace innc::cli
