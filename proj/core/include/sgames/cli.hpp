#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgames {

// Exit codes: 0 success, 1 verification mismatch, 2 invalid input or parse
// failure.
struct CliConfig {
  std::string subcommand;  // count | enumerate | expand | canon | iso | oracle | verify
  int n = 0;
  int n_from = 0;          // count range, inclusive
  int n_to = 0;
  std::string format = "csv";  // count only: csv | json | text
  std::string output;          // empty = stdout
  std::string input;           // expand/canon/iso: path, "-" or empty = stdin
  std::string input2;          // iso: second game
  int oracle_max_n = 5;        // verify: largest brute-forced n
  bool allow_n6 = false;       // opt into the n = 6 brute force
};

int run(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv (without the program name) into a CliConfig and dispatches.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace sgames
