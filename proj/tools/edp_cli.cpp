#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edp/edp.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNotRealized = 1;
constexpr int kBadInput = 2;
constexpr int kViolation = 3;
constexpr int kScale = 4;

edp::DemandGraph read_demand(const std::string& path) {
  if (path == "-") return edp::parse_demand(std::cin);
  std::ifstream in(path);
  if (!in) throw edp::InvalidInput(0, "cannot open " + path);
  return edp::parse_demand(in);
}

edp::Realization read_realization(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw edp::InvalidInput(0, "cannot open " + path);
  return edp::parse_realization(in, n);
}

template <typename Writer>
void write_to(const std::string& path, Writer&& w) {
  if (path.empty() || path == "-") {
    w(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  w(out);
}

json to_json(const edp::SolveReport& r) {
  json j{{"method", r.method},
         {"outcome", edp::to_string(r.outcome)},
         {"n", r.n},
         {"max_degree", r.max_degree},
         {"edges", r.num_edges},
         {"liftings", r.liftings},
         {"max_path_length", r.max_path_length},
         {"millis", r.millis}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.conditions) {
    const auto& c = *r.conditions;
    j["conditions"] = {{"variant", c.variant == edp::DegreeVariant::Deg1 ? "deg1" : "deg2"},
                       {"threshold", c.threshold},
                       {"satisfied", c.satisfied},
                       {"max_degree", c.max_degree},
                       {"e_cross", c.e_cross},
                       {"e_A", c.e_A},
                       {"e_B", c.e_B}};
  }
  if (r.list_bound_held) j["list_bound_held"] = *r.list_bound_held;
  if (r.regular) j["regular"] = *r.regular;
  if (r.method == "edge") {
    j["induction_steps"] = r.induction_steps;
    j["fallback_steps"] = r.fallback_steps;
  }
  return j;
}

edp::RealizeResult run_method(const edp::DemandGraph& d, const std::string& method, bool anyway) {
  const edp::DegreeOptions opt{anyway};
  if (method == "edge") return edp::realize_edge(d);
  if (method == "deg1") return edp::realize_deg1(d, opt);
  if (method == "deg2") return edp::realize_deg2(d, opt);
  if (d.num_edges() <= 2 * d.n() - 3 && d.max_degree() <= d.n()) return edp::realize_edge(d);
  if (edp::degree_conditions(d, edp::DegreeVariant::Deg1).satisfied) return edp::realize_deg1(d);
  auto r = edp::realize_deg2(d, opt);
  if (r.report.outcome == edp::Outcome::ConditionUnmet) r.report.method = "auto";
  return r;
}

std::vector<int> parse_sizes(const std::vector<std::string>& raw) {
  std::vector<int> out;
  for (const auto& s : raw) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(std::stoi(item));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-disjoint paths in K_{n,n} for arbitrary demand multigraphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random demand file");
  int gen_n = 0;
  std::optional<int> gen_edges, gen_degree;
  std::string gen_model = "uniform", gen_out;
  std::uint64_t gen_seed = 1;
  gen->add_option("--n", gen_n, "vertices per class")->required();
  gen->add_option("--edges", gen_edges, "number of demand edges");
  gen->add_option("--max-degree", gen_degree, "degree cap (exact degree for 'regular')");
  gen->add_option("--model", gen_model, "uniform|bundles|matching|regular|extremal-bundle");
  gen->add_option("--seed", gen_seed, "random seed (EDP_SEED overrides)");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  // realize
  auto* realize = app.add_subcommand("realize", "route every demand edge");
  std::string rz_in, rz_method = "auto", rz_out, rz_report;
  bool rz_anyway = false;
  realize->add_option("demand", rz_in, "demand file ('-' for stdin)")->required();
  realize->add_option("--method", rz_method, "edge|deg1|deg2|auto")
      ->check(CLI::IsMember({"edge", "deg1", "deg2", "auto"}));
  realize->add_flag("--attempt-anyway", rz_anyway, "run a degree pipeline even when its threshold fails");
  realize->add_option("-o,--out", rz_out, "realization file (default stdout)");
  realize->add_option("--report", rz_report, "write the JSON report here");

  // verify
  auto* verify = app.add_subcommand("verify", "check a realization against a demand file");
  std::string vf_demand, vf_real;
  verify->add_option("demand", vf_demand)->required();
  verify->add_option("realization", vf_real)->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact search at small scale");
  std::string or_in, or_mode = "edp", or_out;
  edp::SearchBudget budget;
  oracle->add_option("demand", or_in)->required();
  oracle->add_option("--mode", or_mode, "edp|maxedp")->check(CLI::IsMember({"edp", "maxedp"}));
  oracle->add_option("--max-n", budget.max_n);
  oracle->add_option("--max-edges", budget.max_edges);
  oracle->add_option("--max-nodes", budget.max_nodes);
  oracle->add_option("--max-seconds", budget.max_seconds);
  oracle->add_option("-o,--out", or_out, "realization file (default stdout)");

  // maxedp
  auto* maxedp = app.add_subcommand("maxedp", "route a large realizable part of the demands");
  std::string mx_in, mx_part = "shannon", mx_out, mx_sub, mx_report;
  int mx_t = 1;
  maxedp->add_option("demand", mx_in)->required();
  maxedp->add_option("--t", mx_t, "number of matchings to keep")->required()->check(CLI::PositiveNumber);
  maxedp->add_option("--partitioner", mx_part)->check(CLI::IsMember({"shannon", "greedy"}));
  maxedp->add_option("-o,--out", mx_out, "realization of the chosen subgraph (default stdout)");
  maxedp->add_option("--sub-out", mx_sub, "write the chosen subgraph as a demand file");
  maxedp->add_option("--report", mx_report, "write the JSON report here");

  // bench
  auto* bench = app.add_subcommand("bench", "time the realizers on generated instances");
  std::vector<std::string> bn_sizes_raw{"200,400,800,1600"};
  int bn_trials = 5, bn_degree = 8;
  std::string bn_model = "uniform", bn_csv;
  std::vector<std::string> bn_methods{"deg1", "deg2"};
  std::uint64_t bn_seed = 1;
  bench->add_option("--sizes", bn_sizes_raw, "comma-separated n values");
  bench->add_option("--trials", bn_trials)->check(CLI::PositiveNumber);
  bench->add_option("--max-degree", bn_degree);
  bench->add_option("--model", bn_model);
  bench->add_option("--methods", bn_methods)->delimiter(',');
  bench->add_option("--seed", bn_seed);
  bench->add_option("--csv", bn_csv, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto model = edp::parse_model(gen_model);
      if (!model) throw edp::InvalidInput(0, "unknown model " + gen_model);
      if (const char* env = std::getenv("EDP_SEED")) gen_seed = std::stoull(env);
      const edp::GenParams p{gen_n, *model, gen_edges, gen_degree, gen_seed};
      const auto d = edp::generate(p);
      write_to(gen_out, [&](std::ostream& o) { edp::write_demand(o, d); });
      return kOk;
    }

    if (*realize) {
      const auto d = read_demand(rz_in);
      const auto r = run_method(d, rz_method, rz_anyway);
      const json rep = to_json(r.report);
      if (!rz_report.empty()) write_to(rz_report, [&](std::ostream& o) { o << rep.dump(2) << '\n'; });
      std::cerr << rep.dump() << '\n';
      if (!r.ok()) return kNotRealized;
      write_to(rz_out, [&](std::ostream& o) { edp::write_realization(o, *r.realization); });
      return kOk;
    }

    if (*verify) {
      const auto d = read_demand(vf_demand);
      const auto r = read_realization(vf_real, d.n());
      const auto v = edp::verify_realization(d, r);
      if (v.ok()) {
        std::cout << "Ok\n";
        return kOk;
      }
      std::cout << edp::to_string(v.violation) << " label " << v.label << ": " << v.witness << '\n';
      return kViolation;
    }

    if (*oracle) {
      const auto d = read_demand(or_in);
      if (or_mode == "edp") {
        const auto r = edp::edp_decide(d, budget);
        std::cerr << edp::to_string(r.status) << " (" << r.nodes << " nodes)\n";
        if (r.status == edp::OracleStatus::ScaleExceeded) return kScale;
        if (r.status == edp::OracleStatus::Infeasible) return kNotRealized;
        write_to(or_out, [&](std::ostream& o) { edp::write_realization(o, r.realization); });
        return kOk;
      }
      try {
        const auto best = edp::maxedp_exact(d, budget);
        std::cerr << "maximum " << best.sub.graph.num_edges() << " of " << d.num_edges() << " edges\n";
        write_to(or_out, [&](std::ostream& o) {
          o << "# chosen labels:";
          for (int l : best.sub.labels) o << ' ' << l;
          o << '\n';
          edp::write_realization(o, best.realization);
        });
        return kOk;
      } catch (const edp::ScaleExceeded& e) {
        std::cerr << e.what() << '\n';
        return kScale;
      }
    }

    if (*maxedp) {
      const auto d = read_demand(mx_in);
      const auto part = mx_part == "greedy" ? edp::Partitioner::Greedy : edp::Partitioner::Shannon;
      const auto r = edp::maxedp_approx(d, mx_t, part);
      json rep = to_json(r.report);
      const auto& c = r.certificate;
      rep["t"] = r.t;
      rep["capped_edges"] = r.capped_edges;
      rep["selected_edges"] = r.selected_edges;
      rep["trimmed_edges"] = r.trimmed_edges;
      rep["labels"] = r.sub.labels;
      rep["certificate"] = {{"e_input", c.e_input}, {"e_sub", c.e_sub},   {"max_degree", c.max_degree},
                            {"bound", c.bound},     {"holds", c.holds},   {"class_sizes", c.class_sizes}};
      if (!mx_report.empty()) write_to(mx_report, [&](std::ostream& o) { o << rep.dump(2) << '\n'; });
      std::cerr << rep.dump() << '\n';
      if (!mx_sub.empty()) write_to(mx_sub, [&](std::ostream& o) { edp::write_demand(o, r.sub.graph); });
      if (!r.ok()) return kNotRealized;
      write_to(mx_out, [&](std::ostream& o) { edp::write_realization(o, *r.realization); });
      return kOk;
    }

    if (*bench) {
      const auto sizes = parse_sizes(bn_sizes_raw);
      const auto model = edp::parse_model(bn_model);
      if (!model) throw edp::InvalidInput(0, "unknown model " + bn_model);
      if (const char* env = std::getenv("EDP_SEED")) bn_seed = std::stoull(env);
      write_to(bn_csv, [&](std::ostream& o) {
        o << "n,delta,e,method,millis,max_path_len,outcome\n";
        for (int n : sizes) {
          for (int trial = 0; trial < bn_trials; ++trial) {
            const edp::GenParams p{n, *model, std::nullopt, bn_degree,
                                   bn_seed + static_cast<std::uint64_t>(trial) * 1000003ULL + static_cast<std::uint64_t>(n)};
            const auto d = edp::generate(p);
            for (const auto& m : bn_methods) {
              const auto r = run_method(d, m, false);
              o << n << ',' << d.max_degree() << ',' << d.num_edges() << ',' << r.report.method << ','
                << r.report.millis << ',' << r.report.max_path_length << ',' << edp::to_string(r.report.outcome) << '\n';
            }
          }
        }
      });
      return kOk;
    }
  } catch (const edp::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}
