// Command-line front end: exact invariants of edge ideals of small graphs,
// named verification sweeps over graph corpora, and value tables for the
// path/cycle families.
//
//   hdeg invariants --family cycle:6
//   hdeg invariants --input graph.txt --reg
//   hdeg verify thm4.5 --max-n 16
//   hdeg table path --max-n 12
//
// Exit codes: 0 pass, 1 violations found, 2 usage or parse error, 3 budget
// exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdeg/bipartite.hpp"
#include "hdeg/corpus.hpp"
#include "hdeg/errors.hpp"
#include "hdeg/families.hpp"
#include "hdeg/hilbert.hpp"
#include "hdeg/independence.hpp"
#include "hdeg/regularity.hpp"
#include "hdeg/sweeps.hpp"

namespace {

using nlohmann::json;

// Big values fall back to decimal strings; everything in range stays a
// JSON number.
json big_to_json(const hdeg::BigInt& v) {
  static const hdeg::BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const hdeg::BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

json poly_to_json(const hdeg::IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(big_to_json(c));
  return arr;
}

hdeg::Graph parse_family_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw hdeg::ParseError("family spec needs NAME:ARGS", 0);
  std::string name = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);
  auto as_int = [&](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (...) {
      throw hdeg::ParseError("bad family parameter: " + s, 0);
    }
  };
  if (name == "path") return hdeg::path(as_int(args));
  if (name == "cycle") return hdeg::cycle(as_int(args));
  if (name == "star") return hdeg::star(as_int(args));
  if (name == "kbipartite") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw hdeg::ParseError("kbipartite needs a,b", 0);
    return hdeg::complete_bipartite(as_int(args.substr(0, comma)),
                                    as_int(args.substr(comma + 1)));
  }
  throw hdeg::ParseError("unknown family: " + name, 0);
}

hdeg::Graph load_graph(const std::string& input, const std::string& graph6,
                       const std::string& family) {
  int sources = !input.empty() + !graph6.empty() + !family.empty();
  if (sources != 1)
    throw hdeg::ParseError(
        "need exactly one of --input, --graph6, --family", 0);
  if (!graph6.empty()) return hdeg::parse_graph6(graph6);
  if (!family.empty()) return parse_family_spec(family);
  std::ifstream in(input);
  if (!in) throw hdeg::ParseError("cannot open " + input, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return hdeg::parse_edge_list(buf.str());
}

int cmd_invariants(const hdeg::Graph& g, bool with_reg, int subset_cap,
                   int homology_cap, int jobs, int series_terms) {
  json out;
  out["n"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["connected"] = hdeg::is_connected(g);
  out["graph6"] = hdeg::encode_graph6(g);

  hdeg::FVector fv = hdeg::f_vector(g);
  json fvj = json::array();
  for (const auto& c : fv.counts) fvj.push_back(big_to_json(c));
  out["f_vector"] = fvj;
  out["alpha"] = fv.alpha();

  if (g.vertex_count() >= 1) {
    hdeg::HilbertSummary hs = hdeg::summarize(fv);
    out["g"] = big_to_json(hs.g);
    out["h"] = poly_to_json(hs.h);
    out["deg_h"] = hs.deg_h;
    out["pole_order"] = hs.pole_order;
    if (hs.d_prime) out["d_prime"] = *hs.d_prime;
    if (series_terms > 0) {
      json series = json::array();
      for (const auto& c : hdeg::series_coefficients(hs, series_terms))
        series.push_back(big_to_json(c));
      out["hilbert_function"] = series;
    }
  }

  out["mu"] = hdeg::matching_number(g);
  out["nu"] = hdeg::induced_matching_number(g);
  out["cameron_walker"] = hdeg::is_cameron_walker(g);

  auto bip = hdeg::bipartition(g);
  out["bipartite"] = bip.has_value();
  if (bip && hdeg::is_connected(g)) {
    hdeg::BipartiteDecoration dec = hdeg::decorate(g, *bip);
    hdeg::QReport qr = hdeg::q_report(dec, subset_cap);
    out["q"] = qr.q;
    out["x_size"] = qr.x_members.size();
    out["attains_alpha"] = qr.attains_alpha;
  }

  if (with_reg) {
    hdeg::RegularityOptions ropts;
    ropts.cap = homology_cap;
    ropts.jobs = jobs;
    hdeg::RegularityReport rr = hdeg::regularity_homology(g, ropts);
    out["reg"] = rr.reg;
  }

  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& id, const hdeg::SweepOptions& opts) {
  hdeg::SweepReport rep = hdeg::run_check(id, opts);
  json out;
  out["theorem_id"] = rep.theorem_id;
  out["description"] = hdeg::check_description(id);
  out["corpus_spec"] = rep.corpus_spec;
  out["instances_checked"] = rep.instances_checked;
  out["violations"] = rep.violations;
  out["wall_time"] = rep.wall_time;
  out["pass"] = rep.pass();
  std::cout << out.dump(2) << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_table(const std::string& family, int max_n, int brute_budget) {
  bool is_path = family == "path";
  if (is_path)
    std::cout << "n,alpha,p_n,T_n,deg_formula,deg_brute\n";
  else
    std::cout << "n,alpha,c_n,deg_formula,deg_brute\n";
  for (int n = is_path ? 1 : 3; n <= max_n; ++n) {
    auto rep = hdeg::family_degree_report(family, n, brute_budget);
    std::cout << n << "," << rep.alpha << ",";
    if (is_path)
      std::cout << hdeg::path_alt_sum(n).str() << ","
                << hdeg::t_ladder(n).str() << ",";
    else
      std::cout << hdeg::cycle_alt_sum(n).str() << ",";
    std::cout << rep.deg_formula << ",";
    if (rep.deg_brute) std::cout << *rep.deg_brute;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact h-polynomial and regularity toolkit for edge ideals"};
  app.require_subcommand(1);

  // invariants
  std::string input, graph6, family;
  bool with_reg = false;
  int series_terms = 0;
  auto* inv = app.add_subcommand(
      "invariants", "invariants of a single graph as a JSON record");
  inv->add_option("--input", input, "edge-list file (\"n m\" then edges)");
  inv->add_option("--graph6", graph6, "graph6 string");
  inv->add_option("--family", family,
                  "family spec: path:N, cycle:N, star:N, kbipartite:A,B");
  inv->add_flag("--reg", with_reg, "also compute regularity (homology)");
  inv->add_option("--series", series_terms,
                  "print Hilbert function values through this degree");

  // verify
  std::string check_id;
  hdeg::SweepOptions sweep;
  auto* ver = app.add_subcommand("verify", "run a named verification sweep");
  std::string ids_help;
  for (const auto& id : hdeg::known_checks()) ids_help += id + " ";
  ver->add_option("id", check_id, "one of: " + ids_help)->required();
  ver->add_option("--max-n", sweep.max_n, "family/identity bound");
  ver->add_option("--exhaustive", sweep.exhaustive,
                  "cap for exhaustive connected corpora");
  ver->add_option("--exhaustive-bipartite", sweep.exhaustive_bipartite,
                  "cap for exhaustive bipartite corpora");
  ver->add_option("--samples", sweep.samples, "random corpus size");
  ver->add_option("--seed", sweep.seed, "random corpus seed");

  // table
  std::string table_family;
  int table_max_n = 18;
  auto* tab = app.add_subcommand("table", "CSV table for a family");
  tab->add_option("family", table_family, "path or cycle")
      ->required()
      ->check(CLI::IsMember({"path", "cycle"}));
  tab->add_option("--max-n", table_max_n, "last row");

  // shared
  int jobs = 0;
  int subset_cap = 24;
  int homology_cap = 18;
  int brute_budget = 18;
  app.add_option("--jobs", jobs, "worker threads (0 = all cores)");
  app.add_option("--budget", homology_cap,
                 "vertex budget for homology computations");
  app.add_option("--subset-budget", subset_cap,
                 "bit budget for subset enumerations");
  tab->add_option("--brute-budget", brute_budget,
                  "recompute degrees by enumeration up to this n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed())
      return cmd_invariants(load_graph(input, graph6, family), with_reg,
                            subset_cap, homology_cap, jobs, series_terms);
    if (ver->parsed()) {
      sweep.jobs = jobs;
      sweep.subset_cap = subset_cap;
      sweep.homology_cap = homology_cap;
      return cmd_verify(check_id, sweep);
    }
    if (tab->parsed()) return cmd_table(table_family, table_max_n, brute_budget);
  } catch (const hdeg::SubsetBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const hdeg::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const hdeg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hdeg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
