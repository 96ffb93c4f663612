// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All comparisons are exact integer equalities unless a
// time bound is stated.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "corpus.hpp"
#include "gutmyc/closed_forms.hpp"
#include "gutmyc/formats.hpp"
#include "gutmyc/graph.hpp"
#include "gutmyc/metrics.hpp"
#include "gutmyc/structure_laws.hpp"

namespace {

using namespace gutmyc;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Unlabelled connected graphs with 2 <= n <= 6 plus every labelled connected
// graph on up to 6 vertices.
struct Corpus {
  std::vector<Graph> unlabeled = testing::connected_corpus(2, 6);
  std::vector<Graph> labeled = [] {
    std::vector<Graph> out;
    for (std::size_t n = 2; n <= 6; ++n)
      for (Graph& g : testing::all_labeled_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
  }();

  void for_each(const std::function<void(const Graph&)>& f) const {
    for (const Graph& g : unlabeled) f(g);
    for (const Graph& g : labeled) f(g);
  }
  std::size_t size() const { return unlabeled.size() + labeled.size(); }
};

std::string sz(std::size_t v) { return std::to_string(v); }

Outcome structure_laws(const Corpus& corpus) {
  Outcome o;
  std::size_t checks = 0;
  corpus.for_each([&](const Graph& g) {
    for (Target t : {Target::mu, Target::mu_bar}) {
      const LawReport rep = verify_structure(g, t);
      checks += rep.checked_pairs;
      if (!rep.ok())
        o.fail(rep.graph_id + " " + std::string(to_string(t)) + ": " + sz(rep.degree_mismatches.size()) +
               " degree / " + sz(rep.distance_mismatches.size()) + " distance mismatches");
    }
  });
  if (o.pass) o.detail = sz(corpus.size()) + " graphs x {mu, mu_bar}, " + sz(checks) + " checks, 0 mismatches";
  return o;
}

Outcome diameter_bounds(const Corpus& corpus) {
  Outcome o;
  std::int64_t max_mu = 0;
  corpus.for_each([&](const Graph& g) {
    const std::int64_t d_mu = index_report(mycielskian(g)).diameter;
    const std::int64_t d_bar = index_report(build_target(g, Target::mu_bar)).diameter;
    max_mu = std::max(max_mu, d_mu);
    if (d_mu > 4) o.fail(write_graph6(g) + ": diam(mu) = " + std::to_string(d_mu));
    if (d_bar != 2) o.fail(write_graph6(g) + ": diam(mu_bar) = " + std::to_string(d_bar));
  });
  const std::int64_t p6 = index_report(mycielskian(generate(Family::path, 6))).diameter;
  if (max_mu != 4 || p6 != 4) o.fail("bound 4 not attained (corpus max " + std::to_string(max_mu) + ", P6 " + std::to_string(p6) + ")");
  if (o.pass) o.detail = "max diam(mu) = 4 (attained, e.g. P6), diam(mu_bar) = 2 on all " + sz(corpus.size());
  return o;
}

Outcome partition_oracle(const Corpus& corpus) {
  Outcome o;
  corpus.for_each([&](const Graph& g) {
    for (Target t : {Target::mu, Target::mu_bar}) {
      const Graph h = build_target(g, t);
      const std::int64_t brute = gutman(h, distance_matrix(h));
      const std::int64_t total = direct_class_sums(g, t).total();
      if (brute != total)
        o.fail(write_graph6(g) + " " + std::string(to_string(t)) + ": class total " + std::to_string(total) +
               " != Gut " + std::to_string(brute));
    }
  });
  if (o.pass) o.detail = "class totals equal Gut(target) on " + sz(corpus.size()) + " graphs, both targets";
  return o;
}

Outcome lemmas(const Corpus& corpus) {
  Outcome o;
  auto check = [&](const Graph& g) {
    if (!lemma_degree_sum(g).holds() || !lemma_degree_product(g).holds()) o.fail(write_graph6(g));
  };
  corpus.for_each(check);
  std::mt19937_64 engine(20240601);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 2 + engine() % 49;
    const double p = 0.1 + static_cast<double>(engine() % 81) / 100.0;
    const Graph g = testing::random_connected(n, p, engine);
    check(g);
  }
  if (o.pass) o.detail = "lhs == rhs on " + sz(corpus.size()) + " corpus + 1000 random connected graphs (n <= 50)";
  return o;
}

struct Cmd {
  int code = -1;
  std::string out;
};

Cmd run_cli(const std::string& args, const std::string& input) {
  const std::string cmd = "printf '" + input + "' | " + std::string(GUTMYC_CLI_PATH) + " " + args;
  Cmd r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> csv_rows(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    out.push_back(l);
  }
  return out;
}

Outcome golden_audit() {
  Outcome o;
  struct Golden {
    const char* name;
    Graph g;
    Target t;
    std::int64_t brute;
    std::int64_t printed;
  };
  const std::vector<Golden> golden = {
      {"mu(P3)", generate(Family::path, 3), Target::mu, 209, 179},
      {"mu(C4)", generate(Family::cycle, 4), Target::mu, 700, 580},
      {"mu(K1,3)", generate(Family::star, 4), Target::mu, 448, 376},
      {"mu_bar(K2)", generate(Family::complete, 2), Target::mu_bar, 60, 48},
      {"mu_bar(P3)", generate(Family::path, 3), Target::mu_bar, 334, 178},
  };
  std::string summary;
  for (const auto& gd : golden) {
    const AuditRecord a = audit(gd.g, gd.t);
    const std::int64_t oracle = testing::oracle_indices(build_target(gd.g, gd.t)).gutman;
    if (a.brute_force != gd.brute || oracle != gd.brute || a.printed_theorem != gd.printed)
      o.fail(std::string(gd.name) + ": brute " + std::to_string(a.brute_force) + " (oracle " + std::to_string(oracle) +
             "), printed " + std::to_string(a.printed_theorem));
    summary += std::string(gd.name) + " " + std::to_string(a.brute_force) + "/" + std::to_string(a.printed_theorem) + " ";
  }

  const Cmd t5 = run_cli("audit --theorem 5", "Bg\\n");
  const auto r5 = csv_rows(t5.out);
  if (t5.code != 0 || r5.size() != 2 || r5[1] != "Bg,mu,3,2,true,209,179,30,8,0,0,0,0,0")
    o.fail("theorem 5 CSV on P3 not localised to case 1: " + (r5.size() > 1 ? r5[1] : t5.out));
  const Cmd t6 = run_cli("audit --theorem 6", "Bg\\n");
  const auto r6 = csv_rows(t6.out);
  if (t6.code != 0 || r6.size() != 2 || r6[1] != "Bg,mu_bar,3,2,true,334,178,156,0,0,0,0,0,-4")
    o.fail("theorem 6 CSV on P3 not localised to case 6: " + (r6.size() > 1 ? r6[1] : t6.out));
  const Cmd k2 = run_cli("audit --theorem 6", "A_\\n");
  const auto rk = csv_rows(k2.out);
  if (k2.code != 0 || rk.size() != 2 || rk[1] != "A_,mu_bar,2,1,true,60,48,12,0,0,0,0,0,0")
    o.fail("theorem 6 CSV on K2: " + (rk.size() > 1 ? rk[1] : k2.out));
  if (o.pass) o.detail = summary + "| CSV deltas: thm5 P3 case1 only, thm6 P3 case6 only";
  return o;
}

Outcome printed_case_agreement(const Corpus& corpus) {
  Outcome o;
  std::size_t diam2 = 0;
  corpus.for_each([&](const Graph& g) {
    const IndexReport r = index_report(g);
    const GraphParameters p = GraphParameters::from(r);
    if (r.diameter == 2) {
      ++diam2;
      const auto direct = direct_class_sums(g, Target::mu);
      const auto printed = thm5_cases_printed(p);
      for (PairClass c : {PairClass::apex_original, PairClass::shadow_shadow, PairClass::original_original,
                          PairClass::twin})
        if (direct[c] != printed[c]) o.fail(write_graph6(g) + " thm5 " + std::string(to_string(c)));
    }
    const auto direct = direct_class_sums(g, Target::mu_bar);
    const auto printed = thm6_cases_printed(p);
    for (PairClass c : {PairClass::apex_shadow, PairClass::apex_original, PairClass::shadow_shadow,
                        PairClass::original_original, PairClass::twin})
      if (direct[c] != printed[c]) o.fail(write_graph6(g) + " thm6 " + std::string(to_string(c)));
  });
  if (o.pass)
    o.detail = "thm5 cases 2-5 on " + sz(diam2) + " diameter-2 graphs, thm6 cases 1-5 on " + sz(corpus.size());
  return o;
}

Outcome metric_identities() {
  Outcome o;
  auto check = [&](const Graph& g, std::int64_t r, const std::string& name) {
    const IndexReport rep = index_report(g);
    if (rep.gutman != r * r * rep.wiener || rep.degree_distance != 2 * r * rep.wiener) o.fail(name);
  };
  for (std::size_t n = 3; n <= 20; ++n) check(generate(Family::cycle, n), 2, "C" + sz(n));
  for (std::size_t n = 2; n <= 10; ++n) check(generate(Family::complete, n), static_cast<std::int64_t>(n) - 1, "K" + sz(n));
  if (o.pass) o.detail = "Gut = r^2 W and DD = 2r W on C3..C20, K2..K10";
  return o;
}

Outcome parser_conformance(const Corpus& corpus) {
  Outcome o;
  corpus.for_each([&](const Graph& g) {
    const std::string enc = write_graph6(g);
    if (parse_graph6(enc) != g || write_graph6(parse_graph6(enc)) != enc) o.fail("round trip " + enc);
  });
  const std::pair<const char*, Graph> vectors[] = {
      {"A_", build_graph(2, {{0, 1}})},
      {"Bw", build_graph(3, {{0, 1}, {0, 2}, {1, 2}})},
      {"Cl", build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
  };
  for (const auto& [text, g] : vectors)
    if (parse_graph6(text) != g || write_graph6(g) != text) o.fail(std::string("vector ") + text);
  if (o.pass) o.detail = "round trip on " + sz(corpus.size()) + " graphs; A_, Bw, Cl byte-exact";
  return o;
}

Outcome performance() {
  Outcome o;
  std::mt19937_64 engine(2000);
  const Graph g = testing::random_connected(2000, 0.01, engine);
  const auto start = std::chrono::steady_clock::now();
  const IndexReport rep = index_report(g);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0) o.fail("index_report took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream os;
    os << "n = 2000, m = " << rep.m << ", Gut = " << rep.gutman << " in " << secs << " s (limit 10 s)";
    o.detail = os.str();
  }
  return o;
}

}  // namespace

int main() {
  const Corpus corpus;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 structure laws", [&] { return structure_laws(corpus); }},
      {"2 diameter bounds", [&] { return diameter_bounds(corpus); }},
      {"3 partition oracle", [&] { return partition_oracle(corpus); }},
      {"4 lemmas", [&] { return lemmas(corpus); }},
      {"5 golden audit values", [] { return golden_audit(); }},
      {"6 printed-case agreement", [&] { return printed_case_agreement(corpus); }},
      {"7 metric identities", [] { return metric_identities(); }},
      {"8 parser conformance", [&] { return parser_conformance(corpus); }},
      {"9 performance", [] { return performance(); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
