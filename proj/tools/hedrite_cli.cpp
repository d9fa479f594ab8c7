#include "hedrite/circuits.hpp"
#include "hedrite/enumerate.hpp"
#include "hedrite/golden.hpp"
#include "hedrite/io.hpp"
#include "hedrite/link_export.hpp"
#include "hedrite/report.hpp"
#include "hedrite/structure.hpp"
#include "hedrite/transform.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace hedrite;

namespace {

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw Error("cannot open " + path + " for writing");
    os = &file;
  }
};

std::vector<StreamEntry> load(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  return read_file(path);
}

void write_graph(std::ostream& os, const PlaneGraph& g, const std::string& format) {
  if (format == "jsonl" || !g.is_four_valent()) {
    os << to_json(g).dump() << '\n';
  } else {
    os << encode(g);
  }
}

void write_records(std::ostream& os, const std::vector<HedriteRecord>& batch,
                   const std::string& format) {
  for (const auto& r : batch) {
    if (format == "jsonl") {
      os << record_to_json(r).dump() << '\n';
    } else {
      os << "# " << record_header(r) << '\n' << encode(r.graph);
    }
  }
}

struct EnumerateArgs {
  std::optional<int> i;
  std::optional<int> n;
  std::optional<int> n_max;
  std::string format = "dartcode";
  std::string output;
  int threads = 0;
};

int run_enumerate(const EnumerateArgs& a) {
  Output out(a.output);
  if (a.n) {
    write_records(*out.os, enumerate(*a.i, *a.n, a.threads), a.format);
    return 0;
  }
  full_census(*a.n_max, [&](int i, int, const std::vector<HedriteRecord>& batch) {
    if (!a.i || *a.i == i) write_records(*out.os, batch, a.format);
  }, a.threads);
  return 0;
}

int run_analyze(const std::string& input, const std::string& output) {
  Output out(output);
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& e : load(input)) reports.push_back(analyze(e.graph));
  *out.os << reports.dump(2) << '\n';
  return 0;
}

struct TransformArgs {
  std::string input = "-";
  std::string output;
  std::string format = "dartcode";
  bool dual = false;
  bool medial = false;
  bool mirror = false;
  std::vector<int> gc;
  std::optional<int> inflate;
  std::string inflate_circuit;
  std::optional<int> delete_circuit;
  std::optional<int> reduce;
};

PlaneGraph apply(const TransformArgs& a, const PlaneGraph& g) {
  if (a.dual) return dual(g);
  if (a.medial) return medial(g);
  if (a.mirror) return mirror(g);
  if (!a.gc.empty()) return goldberg_coxeter(g, a.gc[0], a.gc[1]);
  if (a.inflate) return inflate_all(g, *a.inflate);
  if (!a.inflate_circuit.empty()) {
    auto colon = a.inflate_circuit.find(':');
    int idx = std::stoi(a.inflate_circuit.substr(0, colon));
    int t = std::stoi(a.inflate_circuit.substr(colon + 1));
    return inflate_circuit(g, idx, t);
  }
  if (a.delete_circuit) return delete_circuit(g, *a.delete_circuit);
  auto roads = rail_roads(g);
  if (*a.reduce < 0 || *a.reduce >= static_cast<int>(roads.size())) {
    throw Error("rail-road index " + std::to_string(*a.reduce) + " out of range (graph has " +
                std::to_string(roads.size()) + ")");
  }
  return reduce(g, roads[*a.reduce]);
}

int run_transform(const TransformArgs& a) {
  Output out(a.output);
  for (const auto& e : load(a.input)) write_graph(*out.os, apply(a, e.graph), a.format);
  return 0;
}

int run_export(const std::string& input, const std::string& output, const std::string& format) {
  Output out(output);
  int k = 0;
  for (const auto& e : load(input)) {
    LinkDiagram link = to_link(e.graph);
    std::string gauss = gauss_to_string(gauss_code(link));
    std::optional<std::string> dt;
    if (link.components.size() == 1) dt = dt_to_string(dt_code(link));
    if (format == "json") {
      *out.os << nlohmann::json{{"components", link.components.size()},
                                {"crossings", link.crossings},
                                {"composite", link.composite},
                                {"gauss", gauss},
                                {"dt", dt ? nlohmann::json(*dt) : nlohmann::json(nullptr)}}
                     .dump()
              << '\n';
    } else {
      *out.os << "# graph " << ++k << " components=" << link.components.size()
              << " crossings=" << link.crossings << '\n'
              << "gauss " << gauss << '\n';
      if (dt) *out.os << "dt " << *dt << '\n';
    }
  }
  return 0;
}

int run_tables(int n_max, const std::string& golden_path, int threads) {
  std::vector<GoldenRow> rows;
  if (golden_path.empty()) {
    rows = embedded_golden();
  } else {
    std::ifstream in(golden_path);
    if (!in) throw Error("cannot open " + golden_path);
    std::stringstream ss;
    ss << in.rdbuf();
    rows = parse_golden(ss.str());
  }
  int cells = 0, failed = 0;
  full_census(n_max, [&](int i, int n, const std::vector<HedriteRecord>& batch) {
    CellReport rep = compare_cell(i, n, batch, rows);
    if (rep.expected == 0 && rep.found == 0) return;
    ++cells;
    std::cout << (rep.pass() ? "PASS" : "FAIL") << "  i=" << i << " n=" << n
              << "  expected=" << rep.expected << " found=" << rep.found << '\n';
    if (!rep.pass()) {
      ++failed;
      for (const auto& u : rep.unmatched) std::cout << "      " << u << '\n';
    }
  }, threads);
  std::cout << (failed ? "FAIL" : "PASS") << "  " << cells - failed << "/" << cells
            << " cells match\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"i-hedrite census, analysis and transformation tool"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "list all i-hedrites up to isomorphism");
  auto* opt_i = en->add_option("--i", ea.i, "number of 2- and 3-gons")->check(CLI::Range(4, 8));
  auto* opt_n = en->add_option("--n", ea.n, "vertex count")->check(CLI::Range(1, 64));
  auto* opt_nmax = en->add_option("--n-max", ea.n_max, "all vertex counts up to this")
                       ->check(CLI::Range(1, 64));
  opt_n->needs(opt_i)->excludes(opt_nmax);
  en->add_option("--format", ea.format)->check(CLI::IsMember({"dartcode", "jsonl"}));
  en->add_option("--output", ea.output, "file, '-' for stdout");
  en->add_option("--threads", ea.threads)->check(CLI::NonNegativeNumber);

  std::string an_input, an_output;
  auto* an = app.add_subcommand("analyze", "JSON report for each graph of a file");
  an->add_option("--input", an_input, "dart-code or JSON-lines file, '-' for stdin")->required();
  an->add_option("--output", an_output);

  TransformArgs ta;
  auto* tr = app.add_subcommand("transform", "apply one construction to each graph");
  tr->add_option("--input", ta.input)->required();
  tr->add_option("--output", ta.output);
  tr->add_option("--format", ta.format)->check(CLI::IsMember({"dartcode", "jsonl"}));
  auto* ops = tr->add_option_group("operation");
  ops->add_flag("--dual", ta.dual);
  ops->add_flag("--medial", ta.medial);
  ops->add_flag("--mirror", ta.mirror);
  ops->add_option("--gc", ta.gc, "Goldberg-Coxeter parameters k,l")
      ->delimiter(',')
      ->expected(2)
      ->check(CLI::NonNegativeNumber);
  ops->add_option("--inflate", ta.inflate, "t-inflation along every circuit")
      ->check(CLI::PositiveNumber);
  ops->add_option("--inflate-circuit", ta.inflate_circuit, "IDX:T");
  ops->add_option("--delete-circuit", ta.delete_circuit);
  ops->add_option("--reduce", ta.reduce, "collapse the given rail-road");
  ops->require_option(1);

  std::string ex_input, ex_output, ex_format = "text";
  auto* ex = app.add_subcommand("export", "Gauss and Dowker-Thistlethwaite codes");
  ex->add_option("--input", ex_input)->required();
  ex->add_option("--output", ex_output);
  ex->add_option("--format", ex_format)->check(CLI::IsMember({"text", "json"}));

  int tb_nmax = 15, tb_threads = 0;
  std::string tb_golden;
  auto* tb = app.add_subcommand("tables", "compare the census with the catalog");
  tb->add_option("--n-max", tb_nmax)->check(CLI::Range(2, 15));
  tb->add_option("--golden", tb_golden, "catalog TSV replacing the built-in one");
  tb->add_option("--threads", tb_threads)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
    if (en->parsed() && !(opt_n->count() || opt_nmax->count())) {
      throw CLI::ValidationError("enumerate", "give --i with --n, or --n-max");
    }
    if (!ta.inflate_circuit.empty() && ta.inflate_circuit.find(':') == std::string::npos) {
      throw CLI::ValidationError("--inflate-circuit", "expected IDX:T");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (en->parsed()) return run_enumerate(ea);
    if (an->parsed()) return run_analyze(an_input, an_output);
    if (tr->parsed()) return run_transform(ta);
    if (ex->parsed()) return run_export(ex_input, ex_output, ex_format);
    if (tb->parsed()) return run_tables(tb_nmax, tb_golden, tb_threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
