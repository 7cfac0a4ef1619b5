#include "sgames/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sgames/enumeration.hpp"
#include "sgames/json_io.hpp"
#include "sgames/oracle.hpp"

namespace sgames {

namespace {

nlohmann::json read_json_document(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return nlohmann::json::parse(in);
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open input file: " + path);
  return nlohmann::json::parse(file);
}

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    throw std::invalid_argument("range must look like A..B");
  }
  std::size_t used = 0;
  const int from = std::stoi(text.substr(0, dots), &used);
  if (used != dots) throw std::invalid_argument("range must look like A..B");
  const std::string tail = text.substr(dots + 2);
  const int to = std::stoi(tail, &used);
  if (used != tail.size()) throw std::invalid_argument("range must look like A..B");
  if (from > to) throw std::invalid_argument("empty range");
  return {from, to};
}

int run_count(const CliConfig& cfg, std::ostream& out) {
  if (cfg.n_from < 2) throw std::invalid_argument("count requires n >= 2");
  std::vector<CountRecord> records;
  records.reserve(static_cast<std::size_t>(cfg.n_to - cfg.n_from + 1));
  for (int n = cfg.n_from; n <= cfg.n_to; ++n) records.push_back(closed_formulas(n));

  if (cfg.format == "csv") {
    out << count_table_csv(records);
  } else if (cfg.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CountRecord& rec : records) arr.push_back(to_json(rec));
    out << arr.dump() << '\n';
  } else if (cfg.format == "text") {
    for (const CountRecord& rec : records) {
      out << "n=" << rec.n << " cases=" << rec.cases << " violations=" << rec.violations
          << " r1=" << rec.r1_count << " total_pairs=" << rec.total_pairs
          << " symmetric=" << rec.symmetric << " bipartite=" << rec.bipartite << '\n';
    }
  } else {
    throw std::invalid_argument("unknown format: " + cfg.format);
  }
  return 0;
}

int run_enumerate(const CliConfig& cfg, std::ostream& out) {
  for_each_bipartite_canonical(cfg.n, [&out](const VectorGame& vg) {
    out << to_json(vg).dump() << '\n';
  });
  return 0;
}

int run_expand(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  VectorGame vg = vector_game_from_json(read_json_document(cfg.input, in));
  out << to_json(expand(vg)).dump() << '\n';
  return 0;
}

int run_canon(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  SimpleGame g = simple_game_from_json(read_json_document(cfg.input, in));
  out << to_json(canonical_form(g)).dump() << '\n';
  return 0;
}

int run_iso(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  SimpleGame a = simple_game_from_json(read_json_document(cfg.input, in));
  SimpleGame b = simple_game_from_json(read_json_document(cfg.input2, in));
  out << (is_isomorphic(a, b) ? "true" : "false") << '\n';
  return 0;
}

int run_oracle(const CliConfig& cfg, std::ostream& out) {
  const int cap = cfg.allow_n6 ? kOracleMaxPlayers : kOracleMaxPlayers - 1;
  if (cfg.n < 1 || cfg.n > cap) {
    throw std::invalid_argument("oracle supports n in 1.." + std::to_string(cap) +
                                " (use --allow-n6 for n=6)");
  }
  ClassificationReport rep = cfg.n >= 2 ? cross_validate(cfg.n) : classify_by_t(cfg.n);
  out << to_json(rep).dump() << '\n';
  return rep.all_pass() ? 0 : 1;
}

int run_verify(const CliConfig& cfg, std::ostream& out) {
  const int cap = cfg.allow_n6 ? kOracleMaxPlayers : kOracleMaxPlayers - 1;
  if (cfg.oracle_max_n < 2 || cfg.oracle_max_n > cap) {
    throw std::invalid_argument("verify supports --max-n in 2.." + std::to_string(cap) +
                                " (use --allow-n6 for 6)");
  }

  int failures = 0;
  int total = 0;
  auto report = [&](const std::string& name, bool pass) {
    ++total;
    if (!pass) ++failures;
    out << (pass ? "PASS " : "FAIL ") << name << '\n';
  };

  {
    bool ok = true;
    try {
      for (int n = 2; n <= 200; ++n) {
        CountRecord rec = closed_formulas(n);
        ok = ok && rec.total_pairs == rec.cases - rec.violations + rec.r1_count &&
             rec.bipartite == burnside_combine(rec.total_pairs, rec.symmetric);
      }
    } catch (const std::exception&) {
      ok = false;
    }
    report("formula_identity_n2_200", ok);
  }

  {
    bool ok = true;
    try {
      for (int n = 2; n <= 40; n += 2) {
        ok = ok && count_symmetric_direct(n) == closed_formulas(n).symmetric;
      }
    } catch (const std::exception&) {
      ok = false;
    }
    report("symmetric_direct_n2_40", ok);
  }

  {
    bool ok = true;
    for (int n = 2; n <= 12 && ok; ++n) {
      for_each_xyz(n, [&](const XyzDecomposition& d) {
        if (!ok) return;
        VectorGame vg = xyz_to_pair(n, d);
        if (pair_to_xyz(vg) != d) ok = false;
        if (separation_violated_xyz(d) == check_conditions(vg).separation_ok) ok = false;
      });
    }
    report("xyz_roundtrip_and_separation_n2_12", ok);
  }

  {
    bool ok = true;
    for (int n = 2; n <= 12 && ok; ++n) {
      BigInt seen = 0;
      for_each_pair(n, [&seen](const VectorGame&) { ++seen; });
      ok = seen == closed_formulas(n).total_pairs;
    }
    report("pair_count_n2_12", ok);
  }

  {
    bool ok = true;
    for (int n = 2; n <= 12 && ok; ++n) {
      BigInt seen = 0;
      for_each_bipartite_canonical(n, [&seen](const VectorGame&) { ++seen; });
      ok = seen == closed_formulas(n).bipartite;
    }
    report("canonical_count_n2_12", ok);
  }

  for (int n = 2; n <= cfg.oracle_max_n; ++n) {
    ClassificationReport rep = cross_validate(n);
    for (const CheckResult& c : rep.checks) {
      report("oracle_n" + std::to_string(n) + "_" + c.name, c.pass);
    }
  }

  if (failures == 0) {
    out << "verify: all " << total << " checks passed\n";
    return 0;
  }
  out << "verify: " << failures << " of " << total << " checks failed\n";
  return 1;
}

int dispatch(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.subcommand == "count") return run_count(cfg, out);
  if (cfg.subcommand == "enumerate") return run_enumerate(cfg, out);
  if (cfg.subcommand == "expand") return run_expand(cfg, in, out);
  if (cfg.subcommand == "canon") return run_canon(cfg, in, out);
  if (cfg.subcommand == "iso") return run_iso(cfg, in, out);
  if (cfg.subcommand == "oracle") return run_oracle(cfg, out);
  if (cfg.subcommand == "verify") return run_verify(cfg, out);
  throw std::invalid_argument("unknown subcommand: " + cfg.subcommand);
}

}  // namespace

int run(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.output.empty()) return dispatch(cfg, in, out);
    std::ofstream file(cfg.output);
    if (!file) throw std::invalid_argument("cannot open output file: " + cfg.output);
    return dispatch(cfg, in, file);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"counting, enumeration and verification for simple games with "
               "two classes of players"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string range_text;

  CLI::App* count = app.add_subcommand("count", "evaluate the closed-form count table");
  count->add_option("--n", cfg.n, "single player count");
  count->add_option("--n-range", range_text, "inclusive player-count range A..B");
  count->add_option("--format", cfg.format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->default_val("csv");
  count->add_option("--output", cfg.output, "write to a file instead of stdout");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "stream the canonical two-class pairs as JSON lines");
  enumerate->add_option("--n", cfg.n, "player count")->required();
  enumerate->add_option("--output", cfg.output, "write to a file instead of stdout");

  CLI::App* expand_cmd = app.add_subcommand(
      "expand", "expand a vector-game JSON document into a coalition-level game");
  expand_cmd->add_option("input", cfg.input, "input path (default: stdin)");
  expand_cmd->add_option("--output", cfg.output, "write to a file instead of stdout");

  CLI::App* canon = app.add_subcommand(
      "canon", "canonical vector game of a simple-game JSON document");
  canon->add_option("input", cfg.input, "input path (default: stdin)");
  canon->add_option("--output", cfg.output, "write to a file instead of stdout");

  CLI::App* iso = app.add_subcommand("iso", "test two games for isomorphism");
  iso->add_option("first", cfg.input, "first game")->required();
  iso->add_option("second", cfg.input2, "second game")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force classification report with cross-checks");
  oracle->add_option("--n", cfg.n, "player count")->required();
  oracle->add_flag("--allow-n6", cfg.allow_n6, "opt into the 7.8M-game n=6 sweep");
  oracle->add_option("--output", cfg.output, "write to a file instead of stdout");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full triangulation; exit 0 iff every check passes");
  verify->add_option("--max-n", cfg.oracle_max_n, "largest brute-forced n")
      ->default_val(5);
  verify->add_flag("--allow-n6", cfg.allow_n6, "opt into the 7.8M-game n=6 sweep");
  verify->add_option("--output", cfg.output, "write to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  for (CLI::App* sub : {count, enumerate, expand_cmd, canon, iso, oracle, verify}) {
    if (sub->parsed()) cfg.subcommand = sub->get_name();
  }

  if (cfg.subcommand == "count") {
    try {
      if (!range_text.empty()) {
        std::tie(cfg.n_from, cfg.n_to) = parse_range(range_text);
      } else if (count->count("--n") > 0) {
        cfg.n_from = cfg.n_to = cfg.n;
      } else {
        throw std::invalid_argument("count needs --n or --n-range");
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
  }

  return run(cfg, in, out, err);
}

}  // namespace sgames
