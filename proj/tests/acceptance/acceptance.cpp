// Acceptance suite: one PASS/FAIL line per criterion, with its runtime limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "liecheck/chevalley.hpp"
#include "liecheck/scenarios.hpp"

using namespace liecheck;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [failed: " << what << "]";
    }
  }
};

json run(const std::string& name, RootKind k, int rank, Residue p, std::optional<std::size_t> samples = std::nullopt) {
  ScenarioParams sp;
  sp.name = name;
  sp.kind = k;
  sp.rank = rank;
  sp.p = p;
  sp.samples = samples;
  return run_scenario(sp);
}

std::string tag(RootKind k, int rank, Residue p) {
  return std::string(1, kind_letter(k)) + std::to_string(rank) + "/F" + std::to_string(p);
}

bool ok_status(const json& r) { return !status_is_failure(r.at("status").get<std::string>()); }

void axioms(Outcome& o) {
  const std::vector<std::pair<RootKind, int>> systems{{RootKind::A, 2}, {RootKind::A, 3}, {RootKind::B, 3},
                                                      {RootKind::C, 2}, {RootKind::C, 3}, {RootKind::C, 4},
                                                      {RootKind::D, 4}, {RootKind::G, 2}, {RootKind::F, 4}};
  std::uint64_t triples = 0;
  for (auto [k, l] : systems)
    for (Residue p : {2u, 3u, 5u, 7u}) {
      const auto r = run("axioms", k, l, p);
      o.require(r["status"] == "pass", "axioms " + tag(k, l, p));
      triples += r["counts"]["jacobi_triples"].get<std::uint64_t>();
    }
  o.note << "36 configurations, " << triples << " Jacobi triples";
}

void spanning(Outcome& o) {
  for (auto [k, l] : std::vector<std::pair<RootKind, int>>{{RootKind::C, 2}, {RootKind::C, 3}, {RootKind::A, 2}, {RootKind::G, 2}})
    for (Residue p : {2u, 3u, 5u}) {
      const auto r = run("span", k, l, p);
      o.require(r["status"] == "pass" && r["counts"]["spanning_rank"] == r["counts"]["dim"], "span " + tag(k, l, p));
    }
  o.note << "12 configurations reach full rank";
}

void kraft_wallach(Outcome& o) {
  std::uint64_t pairs = 0;
  for (auto [l, p] : std::vector<std::pair<int, Residue>>{{2, 3}, {2, 5}, {2, 7}, {3, 3}}) {
    const auto r = run("kraft-wallach", RootKind::C, l, p);
    o.require(r["status"] == "pass" && r["counts"]["nonzero_values"] == 0, "kraft-wallach " + tag(RootKind::C, l, p));
    pairs += r["counts"]["triples_covered"].get<std::uint64_t>();
  }
  o.note << pairs << " (e, x, y) triples, all zero";
}

void lemma32(Outcome& o) {
  for (auto [k, l] : std::vector<std::pair<RootKind, int>>{{RootKind::C, 2}, {RootKind::A, 2}, {RootKind::G, 2}}) {
    const auto r = run("lemma32", k, l, 5, 200);
    o.require(ok_status(r) && r["counts"]["unresolved"] == 0, "lemma32 " + tag(k, l, 5));
    o.note << tag(k, l, 5) << " " << r["status"].get<std::string>() << " (escalated "
           << r["counts"]["escalated"].get<std::size_t>() << "); ";
  }
}

void e_minus(Outcome& o) {
  for (int l : {2, 3}) {
    const Algebra a(build_root_system(RootKind::C, l), 5);
    const auto d = check_e_minus_display(a);
    o.require(d.ok() && d.values_checked == 5, "e^-(t) display for C" + std::to_string(l));
    o.note << "C" << l << ": N_gamma,top=" << d.n_gamma_highest << " N_gamma,-beta=" << d.n_gamma_minus_beta << "; ";
  }
}

void grading(Outcome& o) {
  const auto c2 = run("grading", RootKind::C, 2, 5);
  const json dims{{"-1", 2}, {"-2", 1}, {"0", 4}, {"1", 2}, {"2", 1}};
  o.require(c2["status"] == "pass" && c2["counts"]["dims"] == dims, "C2 grading dims (1,2,4,2,1)");
  for (int l : {2, 3, 4}) {
    const auto r = run("grading", RootKind::C, l, 3);
    o.require(r["status"] == "pass" && r["counts"]["dims"]["-1"] == 2 * l - 2, "dim g(-1) for C" + std::to_string(l));
    for (Residue p : {3u, 5u}) {
      const auto z = run("centre-u", RootKind::C, l, p);
      o.require(z["status"] == "pass" && z["counts"]["centre_dim"] == 1, "centre of nilradical " + tag(RootKind::C, l, p));
    }
  }
  for (int l : {2, 3})
    for (Residue p : {3u, 5u}) {
      const auto cs = run("clear-support", RootKind::C, l, p, 50);
      o.require(cs["status"] == "pass" && cs["counts"]["cleared"] == 50, "clear-support " + tag(RootKind::C, l, p));
      const auto lim = run("limit", RootKind::C, l, p, 50);
      o.require(lim["status"] == "pass" && lim["counts"]["limit_is_e_gamma_at_degree_3"] == 50, "limit " + tag(RootKind::C, l, p));
    }
  o.note << "dims, centres, 200 cleared inputs and limits";
}

void heisenberg(Outcome& o) {
  const auto h = run("heisenberg", RootKind::C, 2, 3);
  const auto r = run("freeness-heisenberg", RootKind::C, 2, 3);
  o.require(h["status"] == "pass", "Heisenberg relations");
  o.require(r["status"] == "pass", "freeness-heisenberg status");
  o.require(r["details"]["rho_e_minus_top_pow_p_is_identity"] == true, "rho(e_-top)^3 = id");
  o.require(r["details"]["e_gamma"]["free"] == true, "free over u(e_gamma)");
  o.require(r["counts"]["rank_rho_e_gamma_pow_p_minus_1"] == 27 && r["counts"]["module_dim"] == 81, "rank 27 in dim 81");
  o.note << "rank(rho(e_gamma)^2) = " << r["counts"]["rank_rho_e_gamma_pow_p_minus_1"].get<int>();
}

void theorem11(Outcome& o) {
  for (Residue p : {3u, 5u}) {
    const auto r = run("theorem11", RootKind::A, 1, p);
    o.require(r["status"] == "pass" && r["counts"]["counterexamples"] == 0, "theorem11 " + tag(RootKind::A, 1, p));
    o.require(r["details"]["modules"].size() == 2 * p, "all chi and lambda for " + tag(RootKind::A, 1, p));
  }
  const auto r = run("theorem11", RootKind::C, 2, 3);
  o.require(r["status"] == "pass" && r["counts"]["counterexamples"] == 0, "theorem11 C2/F3");
  o.require(r["counts"]["candidates"] == 59049, "59049 candidates scanned");
  o.require(r["details"]["modules"][0]["dim"] == 81, "baby Verma of dimension 81");
  o.note << "sp4/F3: " << r["counts"]["candidates"].get<std::uint64_t>() << " candidates, "
         << r["counts"]["nullcone_points"].get<std::uint64_t>() << " in the restricted nullcone, 0 counterexamples";
}

void p2(Outcome& o) {
  for (int l : {2, 3}) {
    const auto r = run("p2-suite", RootKind::C, l, 2);
    o.require(r["status"] == "pass", "p2-suite " + tag(RootKind::C, l, 2));
    const bool exhaustive = r["details"]["nullcone_mode"] == "exhaustive";
    // a sample needs at least 10^4 points; an exhaustive scan covers the whole nullcone
    o.require(exhaustive || r["counts"]["nullcone_points"].get<std::size_t>() >= 10000, "nullcone coverage " + tag(RootKind::C, l, 2));
    o.require(r["details"]["highest_root_neighbours"]["B3"]["ok"] == true && r["details"]["highest_root_neighbours"]["F4"]["ok"] == true,
              "neighbour brackets in B3 and F4");
    o.note << "C" << l << ": " << r["counts"]["pairs"].get<std::size_t>() << " (z, e') pairs over "
           << r["counts"]["nullcone_points"].get<std::size_t>() << " nullcone points ("
           << r["details"]["nullcone_mode"].get<std::string>() << "); ";
  }
}

std::string suite_dump() {
  std::string out;
  for (const auto& name : scenario_registry()) {
    ScenarioParams sp;
    sp.name = name;
    out += strip_timing(run_scenario(sp)).dump() + "\n";
  }
  return out;
}

void determinism(Outcome& o) {
  const auto first = suite_dump();
  const auto second = suite_dump();
  o.require(first == second, "reports differ between runs");
  o.note << scenario_registry().size() << " reports, " << first.size() << " bytes, identical";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit_s;  // 0: no runtime limit
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "algebra axioms on basis tuples", 180, axioms},
      {2, "long root elements span g", 120, spanning},
      {3, "b_f vanishes on E x E for f = <e, .>", 300, kraft_wallach},
      {4, "b_f nonvanishing for u outside E", 180, lemma32},
      {5, "three-term e^-(t) display", 0, e_minus},
      {6, "grading, centre, support clearing and limit", 120, grading},
      {7, "Heisenberg action and freeness on sp4/F3", 0, heisenberg},
      {8, "support variety inclusion at desk scale", 600, theorem11},
      {9, "p = 2 identities", 180, p2},
      {10, "deterministic reports", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.note << " [over the " << c.limit_s << " s limit]";
    }
    failures += !o.ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << timing
              << (c.limit_s > 0 ? " of " + std::to_string(static_cast<int>(c.limit_s)) + "s" : std::string()) << ")  "
              << o.note.str() << std::endl;
  }
  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << criteria.size() - failures << "/"
            << criteria.size() << ")" << std::endl;
  return failures ? 1 : 0;
}
