// reflendo: endomorphism counts, tables, oracle verification and figure data
// for irreducible spherical reflection groups.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 budget exceeded.

#include "reflendo/reflendo.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace reflendo;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const unsigned v = static_cast<unsigned>(std::stoul(s));
      return {v, v};
    }
    return {static_cast<unsigned>(std::stoul(s.substr(0, dots))), static_cast<unsigned>(std::stoul(s.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + s + "', expected LO..HI");
  }
}

unsigned parse_i2_prime(const std::string& spec) {
  const GroupId id = parse_group_spec(spec);
  if (id.family() != Family::I2 || !is_odd_prime(id.param()))
    throw UsageError("--hom expects I2:p with p an odd prime, got '" + spec + "'");
  return id.param();
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool parse_switch(const std::string& v) {
  if (v == "on") return true;
  if (v == "off") return false;
  throw UsageError("--timestamp expects on|off");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Endomorphism counts of irreducible spherical reflection groups.\n"
               "Group specs: " + std::string(kGroupSpecGrammar)};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "Print |End(W)|, or |Hom(I_2(p), W)| / |Hom(I_2(l), I_2(m))|");
  std::string count_spec;
  std::string count_hom;
  unsigned count_dihedral = 0;
  count->add_option("group", count_spec, "Group spec, e.g. C:4, I2:6, E8")->required();
  count->add_option("--hom", count_hom, "Count Hom(I2:p, group) for an odd prime p");
  count->add_option("--hom-dihedral", count_dihedral, "Count Hom(I_2(l), group) for group I2:m")->check(CLI::Range(2U, 1000000U));

  // table
  auto* table = app.add_subcommand("table", "Emit an endomorphism or homomorphism table");
  std::string table_spec;
  std::string table_hom;
  std::string table_format = "csv";
  table->add_option("group", table_spec, "Group spec")->required();
  table->add_option("--hom", table_hom, "Emit Hom(I2:p, group) instead");
  table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Compare closed forms with brute-force enumeration");
  std::string verify_spec;
  std::string suite;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget;
  std::string verify_timestamp = "on";
  verify_cmd->add_option("group", verify_spec, "Group spec");
  verify_cmd->add_option("--suite", suite, "Named suite")->check(CLI::IsMember({"small"}));
  verify_cmd->add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::Range(1U, 256U));
  verify_cmd->add_option("--budget", budget, "Maximum Cayley table entries (order^2)");
  verify_cmd->add_option("--timestamp", verify_timestamp, "on|off: record elapsed time");

  // figure
  auto* figure = app.add_subcommand("figure", "Export figure data");
  std::string figure_id;
  std::string n_range;
  unsigned p_max = 61;
  std::string figure_format = "csv";
  std::string output;
  std::string figure_timestamp = "on";
  figure->add_option("figure", figure_id, "fig1, fig2 or fig3")->required()->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  figure->add_option("--n", n_range, "Rank range LO..HI (defaults: fig1 3..25, fig2 4..25, fig3 3..50)");
  figure->add_option("--p-max", p_max, "Largest odd prime for fig3");
  figure->add_option("--format", figure_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  figure->add_option("-o,--output", output, "Write to file instead of stdout");
  figure->add_option("--timestamp", figure_timestamp, "on|off: record generation time in metadata");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) {
      const GroupId id = parse_group_spec(count_spec);
      if (!count_hom.empty() && count_dihedral != 0) throw UsageError("--hom and --hom-dihedral are exclusive");
      if (!count_hom.empty()) {
        std::cout << hom_count_I2p(parse_i2_prime(count_hom), id) << "\n";
      } else if (count_dihedral != 0) {
        if (id.family() != Family::I2) throw UsageError("--hom-dihedral needs an I2:m target");
        std::cout << hom_count_dihedral(count_dihedral, id.param()) << "\n";
      } else {
        std::cout << endo_count(id) << "\n";
      }
      return kOk;
    }

    if (*table) {
      const GroupId id = parse_group_spec(table_spec);
      const HomTable t = table_hom.empty() ? endomorphism_table(id) : hom_table_I2p(parse_i2_prime(table_hom), id);
      if (table_format == "json")
        std::cout << to_json(t).dump(2) << "\n";
      else
        write_csv(std::cout, t);
      return kOk;
    }

    if (*verify_cmd) {
      if (suite.empty() == verify_spec.empty()) throw UsageError("verify needs exactly one of GROUP or --suite");
      VerifyOptions options;
      options.budget = Budget::from_environment();
      if (budget) options.budget.max_table_entries = *budget;
      options.threads = threads;
      options.timestamp = parse_switch(verify_timestamp);
      const auto start = std::chrono::steady_clock::now();
      if (!suite.empty()) {
        nlohmann::ordered_json reports = nlohmann::ordered_json::array();
        bool ok = true;
        for (const auto& id : small_suite()) {
          const auto r = verify(id, options);
          ok = ok && r.passed();
          reports.push_back(to_json(r));
        }
        nlohmann::ordered_json out;
        out["suite"] = suite;
        out["pass"] = ok;
        out["reports"] = std::move(reports);
        out["elapsed_ms"] = options.timestamp ? std::chrono::duration_cast<std::chrono::milliseconds>(
                                                    std::chrono::steady_clock::now() - start)
                                                    .count()
                                              : 0;
        std::cout << out.dump(2) << "\n";
        return ok ? kOk : kMismatch;
      }
      const auto r = verify(parse_group_spec(verify_spec), options);
      std::cout << to_json(r).dump(2) << "\n";
      return r.passed() ? kOk : kMismatch;
    }

    if (*figure) {
      FigureDataset d;
      if (figure_id == "fig1") {
        const auto [lo, hi] = n_range.empty() ? std::pair{3U, 25U} : parse_range(n_range);
        d = fig1(lo, hi);
      } else if (figure_id == "fig2") {
        const auto [lo, hi] = n_range.empty() ? std::pair{4U, 25U} : parse_range(n_range);
        d = fig2(lo, hi);
      } else {
        const auto [lo, hi] = n_range.empty() ? std::pair{3U, 50U} : parse_range(n_range);
        d = fig3(p_max, lo, hi);
      }
      if (parse_switch(figure_timestamp)) d.metadata["generated_at"] = utc_now();
      std::ofstream file;
      if (!output.empty()) {
        file.open(output);
        if (!file) throw UsageError("cannot open " + output);
      }
      std::ostream& os = output.empty() ? std::cout : file;
      if (figure_format == "json")
        os << to_json(d).dump(2) << "\n";
      else
        write_csv(os, d);
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n"
              << "raise it with --budget or REFLECT_ENDO_BUDGET\n";
    return kBudget;
  } catch (const GroupSpecError& e) {
    std::cerr << "error: " << e.what() << "\n" << kGroupSpecGrammar << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
