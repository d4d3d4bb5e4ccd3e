#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "liecheck/chevalley.hpp"
#include "liecheck/forms.hpp"
#include "liecheck/grading.hpp"
#include "liecheck/longroots.hpp"
#include "liecheck/scenarios.hpp"
#include "liecheck/umod.hpp"

using namespace liecheck;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

struct Common {
  std::string type;
  int rank = 0;
  std::uint32_t p = 0;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;
  std::uint64_t budget = 0;
  std::string out;
  unsigned jobs = 0;
  std::string cochar = "highest-root";
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--type", c.type, "root system type A-G");
  app->add_option("--rank", c.rank, "rank")->check(CLI::PositiveNumber);
  app->add_option("--p", c.p, "prime")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "seed (falls back to LIECHECK_SEED)");
  app->add_option("--samples", c.samples, "sample count");
  app->add_option("--budget", c.budget, "enumeration budget");
  app->add_option("--out", c.out, "also write reports to FILE");
  app->add_option("--jobs", c.jobs, "worker threads");
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("LIECHECK_SEED")) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("LIECHECK_SEED is not an integer: ") + env);
  }
  return kDefaultSeed;
}

ScenarioParams params_from(const std::string& name, const Common& c) {
  ScenarioParams sp;
  sp.name = name;
  registry_index(name);
  if (!c.type.empty()) sp.kind = parse_root_kind(c.type);
  if (c.rank) sp.rank = c.rank;
  if (c.p) sp.p = c.p;
  sp.seed = resolve_seed(c);
  if (c.samples) sp.samples = c.samples;
  if (c.budget) sp.budget = c.budget;
  sp.cochar = c.cochar;
  return sp;
}

RootSystem system_from(const Common& c, RootKind dk, int dr) {
  const RootKind k = c.type.empty() ? dk : parse_root_kind(c.type);
  return build_root_system(k, c.rank ? c.rank : (c.type.empty() ? dr : 2));
}

struct Outcome {
  json report;
  int code = kPass;
};

Outcome run_guarded(const ScenarioParams& sp) {
  Outcome o;
  try {
    o.report = run_scenario(sp);
    o.code = status_is_failure(o.report.at("status").get<std::string>()) ? kFail : kPass;
  } catch (const ResourceError& e) {
    o.report = {{"scenario", sp.name}, {"status", "resource-exceeded"}, {"error", e.what()}, {"version", kToolVersion},
                {"seed", sp.seed}};
    o.code = kResource;
  } catch (const UsageError& e) {
    o.report = {{"scenario", sp.name}, {"status", "usage-error"}, {"error", e.what()}, {"version", kToolVersion}, {"seed", sp.seed}};
    o.code = kUsage;
  } catch (const PreconditionError& e) {
    o.report = {{"scenario", sp.name}, {"status", "usage-error"}, {"error", e.what()}, {"version", kToolVersion}, {"seed", sp.seed}};
    o.code = kUsage;
  } catch (const UnsupportedError& e) {
    o.report = {{"scenario", sp.name}, {"status", "usage-error"}, {"error", e.what()}, {"version", kToolVersion}, {"seed", sp.seed}};
    o.code = kUsage;
  }
  if (!o.report.contains("seed")) o.report["seed"] = sp.seed;
  return o;
}

std::vector<Outcome> run_parallel(const std::vector<ScenarioParams>& jobs, unsigned workers) {
  std::vector<Outcome> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) out[i] = run_guarded(jobs[i]);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

int emit(const std::vector<Outcome>& outcomes, const std::string& out_path) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
  }
  int code = kPass;
  for (const auto& o : outcomes) {
    const auto line = o.report.dump();
    std::cout << line << '\n';
    if (file) file << line << '\n';
    if (code == kPass || (code == kFail && o.code > kFail)) code = o.code;
  }
  return code;
}

// One scenario per line: "name [--type X] [--rank N] [--p P] [--samples K] [--budget B] [--cochar C]".
std::vector<ScenarioParams> read_suite(std::istream& in, const Common& defaults) {
  std::vector<ScenarioParams> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok{std::istream_iterator<std::string>(ls), std::istream_iterator<std::string>()};
    if (tok.empty()) continue;
    Common c = defaults;
    const auto where = "suite line " + std::to_string(lineno);
    for (std::size_t i = 1; i < tok.size(); i += 2) {
      if (i + 1 >= tok.size()) throw UsageError(where + ": missing value for " + tok[i]);
      const auto& k = tok[i];
      const auto& v = tok[i + 1];
      try {
        if (k == "--type") c.type = v;
        else if (k == "--rank") c.rank = std::stoi(v);
        else if (k == "--p") c.p = static_cast<std::uint32_t>(std::stoul(v));
        else if (k == "--samples") c.samples = std::stoull(v);
        else if (k == "--budget") c.budget = std::stoull(v);
        else if (k == "--cochar") c.cochar = v;
        else throw UsageError(where + ": unknown option " + k);
      } catch (const std::logic_error&) {
        throw UsageError(where + ": bad value '" + v + "' for " + k);
      }
    }
    out.push_back(params_from(tok[0], c));
  }
  return out;
}

std::vector<ScenarioParams> default_suite(const Common& c) {
  std::vector<ScenarioParams> out;
  for (const auto& name : scenario_registry()) out.push_back(params_from(name, c));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for modular Lie algebras of simple algebraic groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common run_opts, all_opts, roots_opts, sc_opts, span_opts, grading_opts, rep_opts;
  std::string scenario, suite;
  std::vector<std::uint32_t> lambda;

  auto* run = app.add_subcommand("run", "run one scenario and print its JSON report");
  run->add_option("scenario", scenario, "scenario name")->required();
  add_common(run, run_opts);
  run->add_option("--cochar", run_opts.cochar, "cocharacter for the grading scenario");

  auto* all = app.add_subcommand("run-all", "run a suite file (default: every scenario with default parameters)");
  all->add_option("suite", suite, "suite file, one scenario per line");
  add_common(all, all_opts);

  auto* roots = app.add_subcommand("dump-roots", "print the root table");
  add_common(roots, roots_opts);
  auto* sc = app.add_subcommand("dump-sc", "print the structure constants");
  add_common(sc, sc_opts);
  auto* span = app.add_subcommand("span", "enumerate long root elements and print the spanning rank");
  add_common(span, span_opts);
  auto* grading = app.add_subcommand("grading", "print the dimensions of a cocharacter grading");
  add_common(grading, grading_opts);
  grading->add_option("--cochar", grading_opts.cochar, "highest-root, h2, zero or [w1,...]");
  auto* rep = app.add_subcommand("dump-rep", "write the baby Verma module at chi = <e_top, .>");
  add_common(rep, rep_opts);
  rep->add_option("--lambda", lambda, "highest weight values on h_1..h_l");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*run) {
      const auto sp = params_from(scenario, run_opts);
      return emit({run_guarded(sp)}, run_opts.out);
    }
    if (*all) {
      std::vector<ScenarioParams> jobs;
      if (suite.empty()) {
        jobs = default_suite(all_opts);
      } else {
        std::ifstream in(suite);
        if (!in) throw UsageError("cannot read suite file " + suite);
        jobs = read_suite(in, all_opts);
      }
      std::stable_sort(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) {
        return registry_index(a.name) < registry_index(b.name);
      });
      const unsigned workers = all_opts.jobs ? all_opts.jobs : std::max(1u, std::thread::hardware_concurrency());
      return emit(run_parallel(jobs, workers), all_opts.out);
    }
    if (*roots) {
      const auto rs = system_from(roots_opts, RootKind::C, 3);
      for (const auto& r : rs.roots())
        std::cout << format_weight(r.coords) << ' ' << length_name(r.length) << ' ' << r.height << '\n';
      return kPass;
    }
    if (*sc) {
      const auto rs = system_from(sc_opts, RootKind::C, 2);
      for (const auto& line : SCTable(rs).dump(rs)) std::cout << line << '\n';
      return kPass;
    }
    if (*span) {
      const Algebra a(system_from(span_opts, RootKind::C, 2), span_opts.p ? span_opts.p : 3);
      const auto cone = enumerate_cone(a, span_opts.budget ? span_opts.budget : kDefaultConeBudget);
      const auto rk = spanning_rank(cone);
      std::cout << a.name() << " cone_points " << cone.size() << " spanning_rank " << rk << " dim " << a.dim() << '\n';
      return rk == a.dim() ? kPass : kFail;
    }
    if (*grading) {
      const Algebra a(system_from(grading_opts, RootKind::C, 2), grading_opts.p ? grading_opts.p : 5);
      const auto c = parse_cocharacter(a.root_system(), grading_opts.cochar);
      const auto g = cochar_grading(a, c);
      for (const auto& [i, part] : g.parts()) std::cout << i << ' ' << part.size() << '\n';
      return kPass;
    }
    if (*rep) {
      const Algebra a(system_from(rep_opts, RootKind::C, 2), rep_opts.p ? rep_opts.p : 3);
      const InvForm form(a);
      const auto chi = Functional::from_element(form, a.e(a.root_system().highest_root()));
      std::vector<Residue> lam(a.rank(), 0);
      if (!lambda.empty()) {
        if (lambda.size() != a.rank()) throw UsageError("--lambda needs one value per simple root");
        for (std::size_t i = 0; i < lam.size(); ++i) lam[i] = lambda[i] % a.p();
      }
      const Rep m = baby_verma(a, chi, lam);
      if (rep_opts.out.empty()) {
        write_rep(std::cout, m);
      } else {
        std::ofstream f(rep_opts.out);
        if (!f) throw UsageError("cannot write " + rep_opts.out);
        write_rep(f, m);
      }
      return kPass;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
