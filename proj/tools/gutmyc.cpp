// gutmyc: topological indices of graphs, their Mycielskians and the
// complements of their Mycielskians.
//
//   gutmyc compute   [input] [--format graph6|edgelist] [--output json|csv|table]
//   gutmyc transform [input] --mycielskian --complement ...   (applied in order)
//   gutmyc verify    [input] --target mu|mu_bar|both
//   gutmyc audit     [input] --theorem 5|6|both
//   gutmyc generate  --family path|cycle|star|complete|random --n N [--p P --seed S --count K]
//
// Exit codes: 0 success, 1 input or parse error, 2 verification failure or
// precondition violation.

#include <omp.h>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gutmyc/closed_forms.hpp"
#include "gutmyc/errors.hpp"
#include "gutmyc/formats.hpp"
#include "gutmyc/graph.hpp"
#include "gutmyc/metrics.hpp"
#include "gutmyc/structure_laws.hpp"
#include "output.hpp"

namespace {

using namespace gutmyc;
using cli::OutputFormat;
using cli::Row;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheck = 2;
constexpr std::size_t kBatch = 1024;

struct Options {
  std::string input = "-";
  std::string out = "-";
  std::string format = "graph6";
  std::string output;
  std::string id = "graph6";
  int threads = 0;
  bool skip_disconnected = false;
  std::string target = "both";
  std::string theorem = "both";
  std::vector<std::string> transforms;
  std::string family;
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  std::size_t count = 1;
};

// What one input record contributes: output rows, diagnostics, status.
struct Outcome {
  std::vector<Row> rows;
  std::vector<std::string> lines;  // raw lines (graph6 output)
  std::vector<std::string> diagnostics;
  int status = kExitOk;
};

class Streams {
 public:
  explicit Streams(const Options& opt) {
    if (opt.input != "-") {
      file_in_ = std::make_unique<std::ifstream>(opt.input);
      if (!*file_in_) throw Error("cannot open input '" + opt.input + "'");
    }
    if (opt.out != "-") {
      file_out_ = std::make_unique<std::ofstream>(opt.out);
      if (!*file_out_) throw Error("cannot open output '" + opt.out + "'");
    }
  }
  std::istream& in() { return file_in_ ? *file_in_ : std::cin; }
  std::ostream& out() { return file_out_ ? *file_out_ : std::cout; }

 private:
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
};

std::string record_label(const GraphRecord& rec) {
  return "record " + std::to_string(rec.index) + " (line " + std::to_string(rec.line) + ")";
}

std::string graph_id(const Options& opt, const GraphRecord& rec) {
  return opt.id == "index" ? std::to_string(rec.index) : write_graph6(*rec.graph);
}

int merge_status(int a, int b) {
  if (a == kExitInput || b == kExitInput) return kExitInput;
  return std::max(a, b);
}

// Reads records in batches, maps them through `process` (in parallel when a
// batch holds several graphs) and emits results strictly in input order.
int drive(const Options& opt, Streams& io, const std::function<Outcome(const GraphRecord&)>& process,
          cli::RowWriter* writer) {
  const Format format = *parse_format(opt.format);
  GraphReader reader(io.in(), format);
  int status = kExitOk;
  bool done = false;
  while (!done) {
    std::vector<GraphRecord> batch;
    while (batch.size() < kBatch) {
      auto rec = reader.next();
      if (!rec) {
        done = true;
        break;
      }
      batch.push_back(std::move(*rec));
    }
    std::vector<Outcome> results(batch.size());
    const auto count = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic) if (count > 1)
    for (std::int64_t k = 0; k < count; ++k) {
      const GraphRecord& rec = batch[static_cast<std::size_t>(k)];
      Outcome& res = results[static_cast<std::size_t>(k)];
      if (!rec.ok()) {
        res.diagnostics.push_back(rec.error);
        res.status = kExitInput;
        continue;
      }
      try {
        res = process(rec);
      } catch (const std::exception& e) {
        res = Outcome{};
        res.diagnostics.push_back(record_label(rec) + ": " + e.what());
        res.status = kExitInput;
      }
    }
    for (const Outcome& res : results) {
      for (const auto& d : res.diagnostics) std::cerr << "gutmyc: " << d << '\n';
      for (const auto& r : res.rows) writer->write(r);
      for (const auto& l : res.lines) io.out() << l << '\n';
      status = merge_status(status, res.status);
    }
  }
  if (writer) writer->finish();
  io.out().flush();
  return status;
}

OutputFormat output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "table") return OutputFormat::table;
  return OutputFormat::json;
}

int run_compute(const Options& opt) {
  Streams io(opt);
  cli::RowWriter writer(io.out(), output_format(opt.output.empty() ? "json" : opt.output),
                        {"id", "n", "m", "diameter", "wiener", "m1", "m2", "dd", "gutman"});
  return drive(
      opt, io,
      [&](const GraphRecord& rec) {
        Outcome res;
        const Graph& g = *rec.graph;
        if (g.order() == 0 || !is_connected(g)) {
          if (!opt.skip_disconnected) {
            res.status = kExitCheck;
            res.diagnostics.push_back(record_label(rec) + ": " +
                                      (g.order() == 0 ? std::string("empty graph") : std::string("graph is disconnected")));
          }
          return res;
        }
        const IndexReport r = index_report(g);
        Row row;
        row.add("id", graph_id(opt, rec))
            .add("n", r.n)
            .add("m", r.m)
            .add("diameter", r.diameter)
            .add("wiener", r.wiener)
            .add("m1", r.zagreb1)
            .add("m2", r.zagreb2)
            .add("dd", r.degree_distance)
            .add("gutman", r.gutman);
        res.rows.push_back(std::move(row));
        return res;
      },
      &writer);
}

int run_transform(const Options& opt) {
  Streams io(opt);
  return drive(
      opt, io,
      [&](const GraphRecord& rec) {
        Graph g = *rec.graph;
        for (const auto& t : opt.transforms) g = t == "mycielskian" ? mycielskian(g) : complement(g);
        Outcome res;
        res.lines.push_back(write_graph6(g));
        return res;
      },
      nullptr);
}

std::vector<Target> targets_for(const std::string& s) {
  if (s == "mu" || s == "5") return {Target::mu};
  if (s == "mu_bar" || s == "6") return {Target::mu_bar};
  return {Target::mu, Target::mu_bar};
}

json role_pair(const VertexRole& a, const VertexRole& b) { return json::array({a.name(), b.name()}); }

int run_verify(const Options& opt) {
  Streams io(opt);
  cli::RowWriter writer(io.out(), output_format(opt.output.empty() ? "json" : opt.output),
                        {"id", "target", "n", "checked_pairs", "degree_mismatch_count", "distance_mismatch_count", "ok"});
  const auto targets = targets_for(opt.target);
  return drive(
      opt, io,
      [&](const GraphRecord& rec) {
        Outcome res;
        for (Target t : targets) {
          Row row;
          row.add("id", graph_id(opt, rec)).add("target", std::string(to_string(t)));
          try {
            const LawReport rep = verify_structure(*rec.graph, t);
            row.add("n", rep.n)
                .add("checked_pairs", rep.checked_pairs)
                .add("degree_mismatch_count", rep.degree_mismatches.size())
                .add("distance_mismatch_count", rep.distance_mismatches.size())
                .add("ok", rep.ok());
            json deg = json::array();
            for (const auto& d : rep.degree_mismatches)
              deg.push_back({{"role", d.role.name()}, {"predicted", d.predicted}, {"actual", d.actual}});
            json dist = json::array();
            for (const auto& d : rep.distance_mismatches)
              dist.push_back({{"roles", role_pair(d.a, d.b)}, {"predicted", d.predicted}, {"actual", d.actual}});
            row.detail["degree_mismatches"] = std::move(deg);
            row.detail["distance_mismatches"] = std::move(dist);
            if (!rep.ok()) res.status = kExitCheck;
          } catch (const PreconditionError& e) {
            row.add("n", rec.graph->order()).add("ok", false);
            row.detail["error"] = e.what();
            res.diagnostics.push_back(record_label(rec) + ": " + e.what());
            res.status = merge_status(res.status, kExitCheck);
          }
          res.rows.push_back(std::move(row));
        }
        return res;
      },
      &writer);
}

json cases_json(const CaseBreakdown& c) {
  json arr = json::array();
  for (auto v : c.subtotal) arr.push_back(v);
  return arr;
}

int run_audit(const Options& opt) {
  Streams io(opt);
  std::vector<std::string> columns = {"id",          "target", "n", "m", "diameter_ok", "brute_force",
                                      "printed_theorem", "delta"};
  for (int k = 1; k <= 6; ++k) columns.push_back("case" + std::to_string(k) + "_delta");
  cli::RowWriter writer(io.out(), output_format(opt.output.empty() ? "csv" : opt.output), columns);
  const auto targets = targets_for(opt.theorem);
  return drive(
      opt, io,
      [&](const GraphRecord& rec) {
        Outcome res;
        for (Target t : targets) {
          AuditRecord a;
          try {
            a = audit(*rec.graph, t);
          } catch (const PreconditionError& e) {
            res.diagnostics.push_back(record_label(rec) + ": " + e.what());
            res.status = kExitCheck;
            continue;
          }
          Row row;
          row.add("id", opt.id == "index" ? std::to_string(rec.index) : a.graph_id)
              .add("target", std::string(to_string(t)))
              .add("n", a.params.n)
              .add("m", a.params.m)
              .add("diameter_ok", a.diameter_ok)
              .add("brute_force", a.brute_force)
              .add("printed_theorem", a.printed_theorem)
              .add("delta", a.delta);
          for (std::size_t k = 0; k < kPairClassCount; ++k)
            row.add("case" + std::to_string(k + 1) + "_delta", a.case_deltas[k]);
          row.detail["direct_cases"] = cases_json(a.direct_cases);
          row.detail["printed_cases"] = cases_json(a.printed_cases);
          row.detail["printed_cases_delta"] = a.printed_cases_delta;
          if (a.case6_aggregate_reading) row.detail["case6_aggregate_reading"] = *a.case6_aggregate_reading;
          res.rows.push_back(std::move(row));
        }
        return res;
      },
      &writer);
}

int run_generate(const Options& opt) {
  const auto family = parse_family(opt.family);
  if (!family) throw PreconditionError("unknown family '" + opt.family + "'");
  if (*family != Family::random && (opt.p || opt.seed))
    throw PreconditionError("--p and --seed apply to the random family only");
  Streams io(opt);
  if (*family == Family::random) {
    if (!opt.p || !opt.seed) throw PreconditionError("random family requires --p and --seed");
    if (opt.n < 1) throw PreconditionError("generator requires n >= 1");
    std::mt19937_64 engine(*opt.seed);
    for (std::size_t k = 0; k < opt.count; ++k) io.out() << write_graph6(random_graph(opt.n, *opt.p, engine)) << '\n';
  } else {
    const std::string line = write_graph6(generate(*family, opt.n));
    for (std::size_t k = 0; k < opt.count; ++k) io.out() << line << '\n';
  }
  io.out().flush();
  return kExitOk;
}

void add_io_options(CLI::App* sub, Options& opt, bool tabular) {
  sub->add_option("input", opt.input, "Input file, '-' for standard input")->capture_default_str();
  sub->add_option("--format", opt.format, "Input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  sub->add_option("--out", opt.out, "Output file, '-' for standard output")->capture_default_str();
  if (tabular) {
    sub->add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--id", opt.id, "Record id: canonical graph6 or input index")
        ->check(CLI::IsMember({"graph6", "index"}))
        ->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological indices of Mycielskian graphs and their complements"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--threads", opt.threads, "OpenMP threads (0: runtime default)");

  auto* compute = app.add_subcommand("compute", "Distance- and degree-based indices, one record per graph");
  add_io_options(compute, opt, true);
  compute->add_flag("--skip-disconnected", opt.skip_disconnected, "Skip disconnected graphs instead of failing");

  auto* transform = app.add_subcommand("transform", "Apply Mycielskian / complement, left to right");
  add_io_options(transform, opt, false);
  transform->add_flag("--mycielskian", "Replace G by its Mycielskian")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  transform->add_flag("--complement", "Replace G by its complement")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  auto* verify = app.add_subcommand("verify", "Check predicted degrees and distances against BFS");
  add_io_options(verify, opt, true);
  verify->add_option("--target", opt.target)->check(CLI::IsMember({"mu", "mu_bar", "both"}))->capture_default_str();

  auto* audit_cmd = app.add_subcommand("audit", "Compare printed closed forms with brute force");
  add_io_options(audit_cmd, opt, true);
  audit_cmd->add_option("--theorem", opt.theorem, "5: Gut(mu), 6: Gut(mu_bar)")
      ->check(CLI::IsMember({"5", "6", "both"}))
      ->capture_default_str();

  auto* gen = app.add_subcommand("generate", "Emit generated graphs as graph6");
  gen->add_option("--family", opt.family)->required()->check(CLI::IsMember({"path", "cycle", "star", "complete", "random"}));
  gen->add_option("--n", opt.n)->required();
  gen->add_option("--p", opt.p)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", opt.seed);
  gen->add_option("--count", opt.count)->capture_default_str();
  gen->add_option("--out", opt.out)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (opt.threads > 0) omp_set_num_threads(opt.threads);

  try {
    if (*compute) return run_compute(opt);
    if (*transform) {
      for (const CLI::Option* o : transform->parse_order()) {
        if (o->get_name() == "--mycielskian") opt.transforms.push_back("mycielskian");
        if (o->get_name() == "--complement") opt.transforms.push_back("complement");
      }
      return run_transform(opt);
    }
    if (*verify) return run_verify(opt);
    if (*audit_cmd) return run_audit(opt);
    return run_generate(opt);
  } catch (const std::exception& e) {
    std::cerr << "gutmyc: " << e.what() << '\n';
    return kExitInput;
  }
}
