#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "timcm/report.hpp"
#include "timcm/verifier.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

timcm::Topology load_topology(const std::string& path) {
  return timcm::Topology::parse_any(read_file(path));
}

void print_report(const timcm::AnalysisReport& report, const std::string& format) {
  if (format == "json")
    std::cout << timcm::report_json(report).dump(2) << "\n";
  else if (format == "csv")
    std::cout << timcm::report_csv_header() << "\n" << timcm::report_csv_row(report, 1) << "\n";
  else
    std::cout << timcm::report_text(report);
}

int run_verify(const std::string& topo_path, const std::string& sched_path) {
  timcm::Topology t = load_topology(topo_path);
  timcm::Schedule s = timcm::Schedule::parse(read_file(sched_path));
  auto reports = timcm::verify_schedule(t, s);
  for (const timcm::SlotReport& r : reports) {
    if (r.ok()) {
      std::cout << "slot " << r.slot << ": ok\n";
      continue;
    }
    std::cout << "slot " << r.slot << ":";
    for (int u : r.overlap) std::cout << " [user " << u << " both sends and jams]";
    for (auto [sender, other] : r.decode)
      std::cout << " [receiver " << sender << " also hears active transmitter " << other << "]";
    for (auto [sender, receiver] : r.secrecy)
      std::cout << " [receiver " << receiver << " hears sender " << sender << " but no jammer]";
    std::cout << "\n";
  }
  if (!timcm::schedule_valid(reports)) {
    std::cout << "schedule: invalid\n";
    return 1;
  }
  if (!s.slots.empty())
    std::cout << "schedule: valid, symmetric rate " << timcm::symmetric_rate(s).str() << "\n";
  else
    std::cout << "schedule: valid (empty)\n";
  return 0;
}

void run_bounds(const timcm::Topology& t, std::string method, bool smis_only,
                const std::string& format) {
  // Canonical method names, with the report's own vocabulary as aliases.
  if (method == "fractional") method = "lp";
  if (method == "cancellation") method = "thm4";
  if (method == "generator") method = "thm5";
  bool all = method == "all";
  bool feasible = timcm::check_feasibility(t).feasible;
  nlohmann::json j;

  auto emit = [&](const std::string& name, const std::string& value) {
    if (format == "json")
      j[name] = value;
    else
      std::cout << name << ": " << value << "\n";
  };

  if (all || method == "tdma") {
    if (feasible)
      emit("tdma", timcm::Rational(1, t.user_count()).str());
    else
      emit("tdma", "absent");
  }
  if (all || method == "partition") {
    auto p = timcm::best_secure_partition(t);
    emit("partition", p ? p->value.str() : "absent");
  }
  if (all || method == "lp") {
    auto f = timcm::fractional_sis_bound(
        t, smis_only ? timcm::SetFamily::maximum_secure : timcm::SetFamily::all_secure);
    emit("lp", f ? f->value.str() : "absent");
  }
  if (all || method == "thm4") emit("thm4", timcm::cancellation_upper_bound(t).value.str());
  if (all || method == "thm5") emit("thm5", timcm::generator_upper_bound(t).value.str());
  if (all) emit("combined", timcm::combined_upper_bound(t).str());

  if (format == "json") std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symmetric secure rate analysis for partially connected interference networks"};
  app.require_subcommand(1);

  std::string topo_path, sched_path;
  std::string format = "text";
  std::string method = "all";
  int k = 0, t_max = 4, workers = 0;
  bool smis_only = false;

  auto format_check = CLI::IsMember({"text", "json", "csv"});

  auto* cmd_analyze = app.add_subcommand("analyze", "full bound report for one topology");
  cmd_analyze->add_option("file", topo_path, "topology file, matrix text or JSON")->required();
  cmd_analyze->add_option("--format", format, "text, json or csv")->check(format_check);

  auto* cmd_classify = app.add_subcommand("classify", "analyze every isomorphism class on k users");
  cmd_classify->add_option("--k", k, "number of users (1..5)")->required();
  cmd_classify->add_option("--format", format, "text, json or csv")->check(format_check);
  cmd_classify->add_option("--workers", workers, "parallel analyses (default: hardware)");

  auto* cmd_verify = app.add_subcommand("verify", "audit a schedule against a topology");
  cmd_verify->add_option("topology", topo_path, "topology file")->required();
  cmd_verify->add_option("schedule", sched_path, "schedule JSON file")->required();

  auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive best schedule up to a horizon");
  cmd_oracle->add_option("topology", topo_path, "topology file")->required();
  cmd_oracle->add_option("--t-max", t_max, "largest schedule length to try")->required();

  auto* cmd_bounds = app.add_subcommand("bounds", "individual bound values");
  cmd_bounds->add_option("topology", topo_path, "topology file")->required();
  cmd_bounds->add_option("--method", method,
                         "tdma, partition, lp, thm4, thm5 or all");
  cmd_bounds->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd_bounds->add_flag("--smis-only", smis_only,
                       "pack only maximum-cardinality secure sets in the lp method");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cmd_analyze)) {
      print_report(timcm::analyze(load_topology(topo_path)), format);
    } else if (app.got_subcommand(cmd_classify)) {
      if (k < 1 || k > 5) throw std::invalid_argument("classify supports k between 1 and 5");
      timcm::Classification c = timcm::classify_all(k, workers);
      if (format == "json")
        std::cout << timcm::classification_json(c).dump(2) << "\n";
      else if (format == "csv")
        std::cout << timcm::classification_csv(c);
      else
        std::cout << timcm::classification_text(c);
    } else if (app.got_subcommand(cmd_verify)) {
      return run_verify(topo_path, sched_path);
    } else if (app.got_subcommand(cmd_oracle)) {
      timcm::Topology t = load_topology(topo_path);
      timcm::OracleResult r = timcm::brute_force_best_schedule(t, t_max);
      std::cout << "rate: " << r.rate.str() << "\n";
      std::cout << r.schedule.to_json().dump(2) << "\n";
    } else if (app.got_subcommand(cmd_bounds)) {
      const std::set<std::string> methods{"tdma", "partition", "lp",          "thm4",
                                          "thm5", "all",       "fractional", "cancellation",
                                          "generator"};
      if (!methods.count(method)) throw std::invalid_argument("unknown method " + method);
      run_bounds(load_topology(topo_path), method, smis_only, format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
