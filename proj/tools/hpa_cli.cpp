// hpa: command-line front end.
//
//   hpa solve    --input inst.json
//   hpa sample   --input inst.json --samples 100 --seed 7 [--radius R]
//   hpa exact    --input inst.json --norm l1|linf|lp:<num>/<den> [--budget N]
//   hpa reduce   --kind coloring|vertex-cover --graph g.txt
//   hpa decode   --kind coloring|vertex-cover --graph g.txt --solution '[0,1,-2]'
//   hpa count    --fixture cube:3 | --genfun f.json [--c 1,2,3]
//   hpa bench    --n 1000 --m 2000,2100 [--instances 5] [--samples 100]
//   hpa generate --n 10 --m 20 [--bound 10]
//
// Exit codes: 0 success, 2 invalid input, 3 oracle budget exhausted.

#include "hpa/bench.hpp"
#include "hpa/core.hpp"
#include "hpa/genfun.hpp"
#include "hpa/json_int.hpp"
#include "hpa/oracle.hpp"
#include "hpa/reductions.hpp"
#include "hpa/sampler.hpp"
#include "hpa/solver.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hpa;

constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct Globals {
  std::uint64_t seed = 0;
  std::string output = "-";
  std::string format = "json";
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph(const std::string& path) {
  std::istringstream in(read_source(path));
  return load_graph(in);
}

// Inline JSON array, or a file holding an array or an object with "y".
IntVector read_vector(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t");
  const std::string text = (first != std::string::npos && arg[first] == '[') ? arg : read_source(arg);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("solution: ") + e.what());
  }
  if (doc.is_object() && doc.contains("y")) return json_to_intvector(doc["y"], "y");
  return json_to_intvector(doc, "solution");
}

IntVector parse_csv_ints(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("--c: empty entry");
    out.push_back(json_to_bigint(json(tok.substr(b, e - b + 1)), "--c"));
  }
  return out;
}

std::string join(std::span<const BigInt> x, char sep) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += sep;
    s += x[i].get_str();
  }
  return s;
}

class Output {
 public:
  explicit Output(const Globals& g) : format_(g.format) {
    if (g.output != "-") {
      file_.open(g.output);
      if (!file_) throw ParseError("cannot write '" + g.output + "'");
    }
    os_ = g.output == "-" ? &std::cout : &file_;
  }
  bool csv() const { return format_ == "csv"; }
  std::ostream& os() { return *os_; }
  void emit(const json& doc) { *os_ << doc.dump(2) << '\n'; }

 private:
  std::string format_;
  std::ofstream file_;
  std::ostream* os_;
};

json solution_json(const SolutionVector& s) {
  return {{"y", intvector_to_json(s.y)}, {"norm1", bigint_to_json(s.norm1)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small-norm integer points avoiding hyperplanes, and lattice-point counting"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Master random seed")->capture_default_str();
  app.add_option("--output,-o", g.output, "Output file ('-' for stdout)")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string input = "-";

  auto* solve_cmd = app.add_subcommand("solve", "Deterministic O(n*m) solver, l1 norm <= (m+n)/2");
  solve_cmd->add_option("--input,-i", input, "Instance JSON ('-' for stdin)")->capture_default_str();

  std::size_t samples = 100;
  std::optional<std::size_t> radius;
  auto* sample_cmd = app.add_subcommand("sample", "Best feasible point among uniform samples of r*B_1");
  sample_cmd->add_option("--input,-i", input, "Instance JSON")->capture_default_str();
  sample_cmd->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber)->capture_default_str();
  sample_cmd->add_option("--radius", radius, "Ball radius (default ceil((m+n)/2))");

  std::string norm_text = "l1";
  std::uint64_t budget = kDefaultOracleBudget;
  auto* exact_cmd = app.add_subcommand("exact", "Exhaustive minimum-norm solution (small n only)");
  exact_cmd->add_option("--input,-i", input, "Instance JSON")->capture_default_str();
  exact_cmd->add_option("--norm", norm_text, "l1, linf or lp:<num>/<den>")->capture_default_str();
  exact_cmd->add_option("--budget", budget, "Feasibility evaluations allowed")->capture_default_str();

  std::string kind, graph_path, solution;
  auto* reduce_cmd = app.add_subcommand("reduce", "Graph file to avoidance instance");
  reduce_cmd->add_option("--kind", kind, "coloring or vertex-cover")
      ->required()
      ->check(CLI::IsMember({"coloring", "vertex-cover"}));
  reduce_cmd->add_option("--graph,-g", graph_path, "Graph file ('p n m' / 'e u v')")->required();

  auto* decode_cmd = app.add_subcommand("decode", "Solution vector back to a coloring or a vertex cover");
  decode_cmd->add_option("--kind", kind, "coloring or vertex-cover")
      ->required()
      ->check(CLI::IsMember({"coloring", "vertex-cover"}));
  decode_cmd->add_option("--graph,-g", graph_path, "Graph file")->required();
  decode_cmd->add_option("--solution,-y", solution, "JSON array, or a file with an array or {\"y\": [...]}")
      ->required();

  std::string fixture, genfun_path, c_text;
  auto* count_cmd = app.add_subcommand("count", "Count lattice points through a short rational generating function");
  auto* fixture_opt = count_cmd->add_option("--fixture", fixture, "interval:<N>, cube:<n> or simplex:<n>:<N>");
  auto* genfun_opt = count_cmd->add_option("--genfun", genfun_path, "Generating function JSON");
  fixture_opt->excludes(genfun_opt);
  count_cmd->add_option("--c", c_text, "Avoidance vector, comma separated (default: computed)");

  std::vector<std::size_t> n_values{1000}, m_values{2000};
  BenchConfig bench_cfg;
  auto* bench_cmd = app.add_subcommand("bench", "Solver vs. sampling on random homogeneous systems");
  bench_cmd->add_option("--n", n_values, "Dimensions")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--m", m_values, "Constraint counts")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--bound", bench_cfg.entry_bound, "Entries drawn from [-bound, bound]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--instances", bench_cfg.instances_per_cell, "Instances per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--samples", samples, "Samples per instance")->check(CLI::PositiveNumber)->capture_default_str();

  std::size_t gen_n = 10, gen_m = 20;
  std::int64_t gen_bound = 10;
  auto* gen_cmd = app.add_subcommand("generate", "Random homogeneous instance");
  gen_cmd->add_option("--n", gen_n, "Dimension")->check(CLI::PositiveNumber)->capture_default_str();
  gen_cmd->add_option("--m", gen_m, "Constraints")->check(CLI::PositiveNumber)->capture_default_str();
  gen_cmd->add_option("--bound", gen_bound, "Entry bound")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    Output out(g);

    if (*solve_cmd) {
      const auto inst = load_instance_string(read_source(input));
      const auto rep = solve_report(inst);
      const bool ok = check_feasible(inst, rep.solution.y);
      if (out.csv()) {
        out.os() << "n,m,dropped,norm1,bound,probes,feasible,y\n"
                 << inst.n() << ',' << inst.m() << ',' << inst.dropped() << ',' << rep.solution.norm1.get_str() << ','
                 << (inst.m() + inst.n()) / 2 << ',' << rep.probes << ',' << ok << ',' << join(rep.solution.y, ' ')
                 << '\n';
      } else {
        json doc = solution_json(rep.solution);
        doc["n"] = inst.n();
        doc["m"] = inst.m();
        doc["dropped"] = inst.dropped();
        doc["bound"] = (inst.m() + inst.n()) / 2;
        doc["probes"] = rep.probes;
        doc["feasible"] = ok;
        out.emit(doc);
      }
    } else if (*sample_cmd) {
      const auto inst = load_instance_string(read_source(input));
      SamplerConfig cfg{samples, g.seed, radius};
      const auto rep = sample_baseline_report(inst, cfg);
      if (out.csv()) {
        out.os() << "n,m,radius,samples,feasible,norm1,y\n"
                 << inst.n() << ',' << inst.m() << ',' << rep.radius << ',' << samples << ',' << rep.feasible << ','
                 << (rep.best ? rep.best->norm1.get_str() : "") << ',' << (rep.best ? join(rep.best->y, ' ') : "")
                 << '\n';
      } else {
        json doc{{"radius", rep.radius}, {"samples", samples}, {"feasible", rep.feasible}, {"seed", g.seed}};
        doc["best"] = rep.best ? solution_json(*rep.best) : json(nullptr);
        out.emit(doc);
      }
    } else if (*exact_cmd) {
      const auto inst = load_instance_string(read_source(input));
      NormKind norm;
      try {
        norm = NormKind::parse(norm_text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      const auto s = exact_solve(inst, norm, budget);
      if (out.csv()) {
        out.os() << "norm,norm1,linf,y\n"
                 << norm_text << ',' << s.norm1.get_str() << ',' << linf_norm(s.y).get_str() << ','
                 << join(s.y, ' ') << '\n';
      } else {
        json doc = solution_json(s);
        doc["norm"] = norm_text;
        doc["linf"] = bigint_to_json(linf_norm(s.y));
        out.emit(doc);
      }
    } else if (*reduce_cmd) {
      const auto gr = read_graph(graph_path);
      const auto inst = kind == "coloring" ? encode_coloring(gr) : encode_vertex_cover(gr);
      out.os() << serialize_instance(inst) << '\n';
    } else if (*decode_cmd) {
      const auto gr = read_graph(graph_path);
      const auto x = read_vector(solution);
      if (kind == "coloring") {
        const auto col = decode_coloring(gr, x);
        if (out.csv()) {
          out.os() << "vertex,color\n";
          for (std::size_t v = 0; v < col.color.size(); ++v) out.os() << v << ',' << col.color[v] << '\n';
        } else {
          out.emit({{"num_colors", col.num_colors}, {"coloring", col.color}});
        }
      } else {
        const auto cover = decode_vertex_cover(gr, x);
        if (out.csv()) {
          out.os() << "vertex\n";
          for (auto v : cover) out.os() << v << '\n';
        } else {
          out.emit({{"cover", cover}, {"size", cover.size()}});
        }
      }
    } else if (*count_cmd) {
      if (fixture.empty() == genfun_path.empty()) throw ParseError("count: give exactly one of --fixture or --genfun");
      const auto f = fixture.empty() ? load_genfun_string(read_source(genfun_path)) : fixture_from_spec(fixture);
      std::optional<IntVector> c;
      if (!c_text.empty()) c = parse_csv_ints(c_text);
      const auto rep = count_via_genfun_report(f, c);
      if (out.csv()) {
        out.os() << "count,terms,c\n" << rep.count.get_str() << ',' << f.terms().size() << ',' << join(rep.c, ' ') << '\n';
      } else {
        out.emit({{"count", bigint_to_json(rep.count)}, {"terms", f.terms().size()}, {"c", intvector_to_json(rep.c)}});
      }
    } else if (*bench_cmd) {
      bench_cfg.n_values = n_values;
      bench_cfg.m_values = m_values;
      bench_cfg.sampler.num_samples = samples;
      bench_cfg.seed = g.seed;
      const auto cells = run_bench(bench_cfg);
      if (out.csv()) {
        write_bench_csv(out.os(), cells);
      } else {
        json rows = json::array();
        for (const auto& c : cells) {
          rows.push_back({{"n", c.n},
                          {"m", c.m},
                          {"instances", c.instances},
                          {"solver_avg_norm", c.solver_avg_norm},
                          {"solver_max_norm", c.solver_max_norm},
                          {"bound", c.bound},
                          {"sampler_avg_norm", std::isnan(c.sampler_avg_norm) ? json(nullptr) : json(c.sampler_avg_norm)},
                          {"sampler_failures", c.sampler_failures},
                          {"solver_ms_avg", c.solver_ms_avg},
                          {"sampler_ms_avg", c.sampler_ms_avg}});
        }
        out.emit({{"seed", g.seed}, {"samples", samples}, {"cells", rows}});
      }
    } else if (*gen_cmd) {
      out.os() << serialize_instance(random_instance(gen_n, gen_m, gen_bound, g.seed)) << '\n';
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "hpa: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InternalInvariantViolation& e) {
    std::cerr << "hpa: internal error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "hpa: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hpa: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "hpa: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
