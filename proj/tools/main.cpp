// skewnet command-line driver.
#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "skewnet/correspondence.hpp"
#include "skewnet/fixture.hpp"
#include "skewnet/pipeline.hpp"

using namespace skewnet;
using nlohmann::json;

namespace {

constexpr int kInputError = 3;

void add_options(CLI::App& app, Options& o, bool& timings) {
  app.add_option("--fields", o.fields, "small fields for enumerations")->delimiter(',')->envname("SKEWNET_FIELDS");
  app.add_option("--prime", o.prime, "working prime")->envname("SKEWNET_PRIME");
  app.add_option("--second-prime", o.second_prime, "second prime for QQ rank checks")->envname("SKEWNET_SECOND_PRIME");
  app.add_option("--degree-cap", o.degree_cap, "largest Macaulay degree")->envname("SKEWNET_DEGREE_CAP");
  app.add_option("--samples", o.samples, "random samples for jw/jw1")->envname("SKEWNET_SAMPLES");
  app.add_option("--seed", o.seed, "sampling seed")->envname("SKEWNET_SEED");
  app.add_option("--workers", o.workers, "worker threads")->envname("SKEWNET_WORKERS")->check(CLI::PositiveNumber);
  app.add_flag("--timings", timings, "record per-check seconds in the report");
}

void print_check(const CheckResult& r) {
  std::cout << r.name << ": " << to_string(r.status) << "\n  " << r.witness << "\n";
  if (!r.text.empty()) std::cout << r.text << (r.text.back() == '\n' ? "" : "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewnet: A-nets of skew forms, Pfaffian cubics and V14 threefolds"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a random fixture");
  std::uint64_t gen_seed = 1;
  long bound = 3;
  std::size_t gen_n = 5, gen_2m = 6, max_attempts = 500;
  std::string kind = "random", gen_out = "-";
  Options gen_opts;
  gen->add_option("--seed", gen_seed)->envname("SKEWNET_SEED");
  gen->add_option("--bound", bound, "entries in [-bound, bound]");
  gen->add_option("--n", gen_n, "dim A");
  gen->add_option("--two-m", gen_2m, "dim V");
  gen->add_option("--fields", gen_opts.fields, "fields of good reduction")->delimiter(',')->envname("SKEWNET_FIELDS");
  gen->add_option("--max-attempts", max_attempts);
  gen->add_option("--kind", kind)->check(CLI::IsMember({"random", "degenerate", "block"}));
  gen->add_option("-o,--out", gen_out, "output path, - for stdout");

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "run every check and write a JSON report");
  std::string pipe_in = "-", report_out = "-";
  Options pipe_opts;
  bool pipe_timings = false;
  pipe->add_option("fixture", pipe_in, "fixture path, - for stdin");
  pipe->add_option("-r,--report", report_out, "report path, - for stdout");
  add_options(*pipe, pipe_opts, pipe_timings);

  // verify
  auto* ver = app.add_subcommand("verify", "run one named check");
  std::string ver_in = "-", check;
  Options ver_opts;
  bool ver_timings = false, ver_json = false, list = false;
  ver->add_option("check", check, "check name");
  ver->add_option("fixture", ver_in, "fixture path, - for stdin");
  ver->add_flag("--json", ver_json, "print the check as JSON");
  ver->add_flag("--list", list, "list check names");
  add_options(*ver, ver_opts, ver_timings);

  // report-diff
  auto* diff = app.add_subcommand("report-diff", "compare two reports, ignoring timings");
  std::string left, right;
  diff->add_option("left", left)->required();
  diff->add_option("right", right)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen) {
      const GeneratedNet g = kind == "random"       ? random_regular_net(gen_seed, bound, gen_n, gen_2m, gen_opts, max_attempts)
                             : kind == "degenerate" ? degenerate_net(gen_seed, bound, max_attempts)
                                                    : GeneratedNet{ANet::block_net(Field::rationals()), 1};
      write_text(gen_out, fixture_text(g.net));
      std::cerr << "attempts: " << g.attempts << "\nfingerprint: " << fingerprint(g.net) << "\n";
      return 0;
    }
    if (*pipe) {
      const ANet net = read_fixture(pipe_in);
      const auto rep = run_pipeline(net, pipe_opts);
      write_text(report_out, rep.to_json(pipe_timings).dump(2) + "\n");
      for (const auto& c : rep.checks)
        std::cerr << c.name << ": " << to_string(c.status) << "\n";
      std::cerr << "overall: " << to_string(rep.overall) << "\n";
      return exit_code(rep.overall);
    }
    if (*ver) {
      if (list) {
        for (const auto& n : check_names()) std::cout << n << "\n";
        return 0;
      }
      if (check.empty()) throw InputError("no check name given");
      const ANet net = read_fixture(ver_in);
      const auto r = run_check(check, net, ver_opts);
      if (ver_json) {
        nlohmann::ordered_json j{{"name", r.name}, {"status", to_string(r.status)}, {"witness", r.witness}, {"data", r.data}};
        if (ver_timings) j["seconds"] = r.seconds;
        std::cout << j.dump(2) << "\n";
      } else {
        print_check(r);
      }
      return exit_code(r.status);
    }
    if (*diff) {
      json a, b;
      try {
        a = json::parse(read_text(left));
        b = json::parse(read_text(right));
      } catch (const json::parse_error& e) {
        throw InputError(e.what());
      }
      const auto d = diff_reports(a, b);
      for (const auto& line : d.differences) std::cout << line << "\n";
      if (d.identical()) std::cout << "identical\n";
      return d.identical() ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
