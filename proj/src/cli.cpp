#include "pftzeta/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "pftzeta/graph.hpp"
#include "pftzeta/necklace.hpp"
#include "pftzeta/oracle.hpp"
#include "pftzeta/spec_io.hpp"
#include "pftzeta/zeta.hpp"

namespace pftzeta::cli {
namespace {

StandardPft load(const std::string& path) { return normalize(load_spec_file(path)); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions of periodic-finite-type shifts"};
  app.name("pftzeta");
  app.require_subcommand(1, 1);

  std::string input;
  std::size_t max_n = 12;
  std::size_t omega_period = 0;
  bool dot = false;
  bool json_graph = false;
  bool odd_fast = false;

  auto* normalize_cmd = app.add_subcommand("normalize", "Convert a PFT spec to standard form (JSON)");
  normalize_cmd->add_option("spec", input, "PFT spec JSON file")->required();

  auto* present_cmd = app.add_subcommand("present", "Print the MS presentation (JSON, or DOT with --dot)");
  present_cmd->add_option("spec", input, "PFT spec JSON file")->required();
  auto* dot_flag = present_cmd->add_flag("--dot", dot, "Emit Graphviz DOT");
  present_cmd->add_flag("--json", json_graph, "Emit JSON (default)")->excludes(dot_flag);

  auto* omega_cmd = app.add_subcommand("omega", "List necklace representatives: bits L W N");
  omega_cmd->add_option("T", omega_period, "Period")->required()->check(CLI::PositiveNumber);

  auto* zeta_cmd = app.add_subcommand("zeta", "Compute the zeta function (JSON)");
  zeta_cmd->add_option("spec", input, "PFT spec JSON file")->required();
  zeta_cmd->add_flag("--odd-t-fast", odd_fast, "Use the A_z-only product (odd period only)");

  auto* counts_cmd = app.add_subcommand("counts", "Periodic-point counts via trace sums (TSV)");
  counts_cmd->add_option("spec", input, "PFT spec JSON file")->required();
  counts_cmd->add_option("--max-n", max_n, "Largest n")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all counting paths");
  verify_cmd->add_option("spec", input, "PFT spec JSON file")->required();
  verify_cmd->add_option("--max-n", max_n, "Largest n")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (normalize_cmd->parsed()) {
      out << to_json(load(input)).dump(2) << "\n";
    } else if (present_cmd->parsed()) {
      const Wbg g = build_ms_presentation(load(input));
      if (dot)
        out << to_dot(g);
      else
        out << to_json(g).dump(2) << "\n";
    } else if (omega_cmd->parsed()) {
      for (const auto& z : enumerate_omega(omega_period))
        out << z.bits << " " << z.L << " " << z.W << " " << z.N << "\n";
    } else if (zeta_cmd->parsed()) {
      const StandardPft x = load(input);
      if (odd_fast) {
        const RationalFn f = odd_T_zeta(x);
        nlohmann::json doc = to_json(f);
        doc["product"] = f.to_string();
        out << doc.dump(2) << "\n";
      } else {
        out << to_json(zeta_pft(x)).dump(2) << "\n";
      }
    } else if (counts_cmd->parsed()) {
      TraceCounter counter(load(input));
      for (std::size_t n = 1; n <= max_n; ++n) out << n << "\t" << counter.count(n) << "\n";
    } else if (verify_cmd->parsed()) {
      bool all_ok = true;
      for (const auto& r : verify_counts(load(input), max_n)) {
        out << r.n << " " << r.brute_force << " " << r.cycle_ie << " " << r.traces << " "
            << r.zeta_series << " " << (r.agree ? "OK" : "MISMATCH") << "\n";
        all_ok = all_ok && r.agree;
      }
      return all_ok ? kOk : kMismatch;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const GuardViolation& e) {
    err << "error: " << e.what() << "\n";
    return kGuardViolation;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace pftzeta::cli
