// Command-line surface for the graph-structure library: generators, exact
// kernels (tw, td, minor, menger, wcol), decomposition utilities, the
// partition constructions with certificates, and corpus sweeps.

#include <chrono>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hpart/certificates.hpp"
#include "hpart/construct.hpp"
#include "hpart/errors.hpp"
#include "hpart/generators.hpp"
#include "hpart/io.hpp"
#include "hpart/rng.hpp"

namespace hpart {
namespace {

struct GlobalOpts {
  std::uint64_t budget_nodes = 10'000'000;
  int budget_n = 18;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

ConstructBudget make_budget(const GlobalOpts& opts) {
  ConstructBudget b;
  b.search.nodes = opts.budget_nodes;
  b.exact.max_n = opts.budget_n;
  return b;
}

void emit(const GlobalOpts& opts, const std::string& text) {
  if (opts.out.empty())
    std::cout << text;
  else
    write_text_file(opts.out, text);
}

void emit_json(const GlobalOpts& opts, const json& j) {
  emit(opts, dump_canonical(j));
}

Graph load_graph(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".txt")
    return graph_from_text(read_text_file(path));
  return graph_from_json(load_json_file(path));
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

// ---- gen ----

Graph generate(const std::string& fam, const std::vector<std::string>& params,
               const GlobalOpts& opts) {
  if (fam == "u") {
    if (params.size() != 2) throw InputError("gen u needs: h d");
    return u_graph(std::stoi(params[0]), std::stoi(params[1]));
  }
  if (fam == "random") {
    if (params.size() != 2) throw InputError("gen random needs: n p");
    return random_graph(std::stoi(params[0]), std::stod(params[1]), opts.seed);
  }
  std::vector<int> ip;
  for (const auto& p : params) ip.push_back(std::stoi(p));
  return family(fam, ip);
}

// ---- sweep ----

json run_sweep_row(const json& row, std::uint64_t seed) {
  ConstructBudget budget;
  json out;
  out["check"] = row.at("check");
  const std::string check = row.at("check").get<std::string>();
  bool pass = true;
  if (check == "wcol_bound") {
    const Graph g = row.contains("family")
                        ? family(row.at("family").get<std::string>(),
                                 row.at("params").get<std::vector<int>>())
                        : graph_from_json(row.at("graph"));
    const int h = row.at("h").get<int>();
    const int d = row.at("d").get<int>();
    out["graph_n"] = g.n();
    auto res = wcol_partition(h, d, 0, g, {}, budget);
    verify_wcol_partition(g, h, d, 0, {}, res, budget);
    json per_r = json::array();
    for (int r : row.at("r").get<std::vector<int>>()) {
      auto rep = wcol_order(g, res, h, d, r);
      per_r.push_back(json{{"r", r},
                           {"measured", rep.measured},
                           {"bound", rep.bound}});
      if (static_cast<std::uint64_t>(rep.measured) > rep.bound) pass = false;
    }
    out["rows"] = per_r;
  } else if (check == "lem_uhd") {
    const int h = row.at("h").get<int>();
    const int d = row.at("d").get<int>();
    const int trials = row.at("trials").get<int>();
    const int max_part = row.value("max_part", d);
    const Graph u = u_graph(h, d);
    SplitMix64 rng(seed);
    int ok = 0;
    for (int i = 0; i < trials; ++i) {
      // random partition into parts of size <= max_part
      std::vector<VertexSet> parts;
      for (Vertex v = 0; v < u.n(); ++v) {
        std::vector<int> open;
        for (std::size_t p = 0; p < parts.size(); ++p)
          if (parts[p].count() < max_part) open.push_back(static_cast<int>(p));
        std::uint64_t pick = rng.next_below(open.size() + 1);
        if (pick == open.size()) {
          parts.push_back(VertexSet::single(v));
        } else {
          parts[open[pick]].add(v);
        }
      }
      HPartition hp;
      hp.parts = parts;
      hp.h_graph = quotient(u, parts);
      auto clique = uhd_clique_witness(h, d, hp);
      if (static_cast<int>(clique.size()) == h) ++ok;
    }
    out["trials"] = trials;
    out["witnessed"] = ok;
    pass = (ok == trials);
  } else {
    throw InputError("unknown sweep check: " + check);
  }
  out["pass"] = pass;
  return out;
}

int run_sweep(const std::string& config_path, const GlobalOpts& opts,
              int threads) {
  json cfg = load_json_file(config_path);
  std::uint64_t seed = cfg.value("seed", opts.seed);
  json rows = cfg.value("rows", json::array());
  std::vector<json> results(rows.size());
  const auto t0 = std::chrono::steady_clock::now();
  if (threads > 1) {
    std::vector<std::future<json>> futs;
    for (std::size_t i = 0; i < rows.size(); ++i)
      futs.push_back(std::async(std::launch::async, run_sweep_row, rows[i],
                                seed + i));
    for (std::size_t i = 0; i < rows.size(); ++i) results[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i)
      results[i] = run_sweep_row(rows[i], seed + i);
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  bool all_pass = true;
  for (const auto& r : results)
    if (!r.at("pass").get<bool>()) all_pass = false;
  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << "index,check,pass\n";
    for (std::size_t i = 0; i < results.size(); ++i)
      csv << i << ',' << results[i].at("check").get<std::string>() << ','
          << (results[i].at("pass").get<bool>() ? "pass" : "fail") << '\n';
    emit(opts, csv.str());
  } else {
    json report{{"seed", seed},
                {"rows", results},
                {"all_pass", all_pass},
                {"runtime_ms", ms}};
    emit_json(opts, report);
  }
  return all_pass ? 0 : 2;
}

int run(int argc, char** argv) {
  CLI::App app{"hpart: H-partitions, decompositions, and weak coloring numbers"};
  app.require_subcommand(1);
  GlobalOpts opts;
  app.add_option("--budget-nodes", opts.budget_nodes,
                 "search-node budget for exact minor tests");
  app.add_option("--budget-n", opts.budget_n,
                 "max n for subset-DP kernels (tw, td)");
  app.add_option("--seed", opts.seed, "seed for randomized corpora");
  app.add_option("--out", opts.out, "output file (default: stdout)");
  app.add_option("--format", opts.format, "json|csv|dot")
      ->check(CLI::IsMember({"json", "csv", "dot"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph family");
  std::string gen_family;
  std::vector<std::string> gen_params;
  gen->add_option("family", gen_family,
                  "path|cycle|complete|grid|star|binary_tree_closure|u|random")
      ->required();
  gen->add_option("params", gen_params, "family parameters");

  // wcol
  auto* wc = app.add_subcommand("wcol", "weak coloring numbers");
  std::string wc_graph, wc_order_file;
  int wc_r = 1;
  bool wc_exact = false;
  wc->add_option("--graph", wc_graph)->required();
  wc->add_option("--r", wc_r)->required();
  wc->add_option("--order", wc_order_file, "ordering file (positions array)");
  wc->add_flag("--exact", wc_exact, "minimize over all orderings");

  // tw / td
  auto* tw = app.add_subcommand("tw", "exact treewidth");
  std::string tw_graph;
  tw->add_option("--graph", tw_graph)->required();
  auto* td = app.add_subcommand("td", "exact treedepth");
  std::string td_graph;
  td->add_option("--graph", td_graph)->required();

  // minor
  auto* minor = app.add_subcommand("minor", "exact minor test");
  std::string mi_host, mi_pattern, mi_roots;
  minor->add_option("--host", mi_host)->required();
  minor->add_option("--pattern", mi_pattern)->required();
  minor->add_option("--roots", mi_roots,
                    "json file: list of root vertex sets (attached test)");
  int mi_apex = -1;
  minor->add_option("--apex", mi_apex,
                    "apex count a; pattern file is then H of K_a (+) H");

  // menger
  auto* me = app.add_subcommand("menger", "linkage / separation dichotomy");
  std::string me_graph, me_s, me_t;
  int me_k = 1;
  me->add_option("--graph", me_graph)->required();
  me->add_option("--s", me_s, "comma separated vertex list")->required();
  me->add_option("--t", me_t, "comma separated vertex list")->required();
  me->add_option("--k", me_k)->required();

  // natural
  auto* nat = app.add_subcommand("natural", "natural tree-decomposition");
  std::string nat_graph, nat_td;
  nat->add_option("--graph", nat_graph)->required();
  nat->add_option("--td", nat_td, "input decomposition (default: exact)");

  // helly
  auto* he = app.add_subcommand("helly", "Helly dichotomy on bags");
  std::string he_graph, he_td, he_family;
  int he_d = 1;
  he->add_option("--graph", he_graph)->required();
  he->add_option("--td", he_td, "decomposition json (default: exact)");
  he->add_option("--family", he_family, "json list of vertex sets")->required();
  he->add_option("--d", he_d)->required();

  // capture
  auto* cap = app.add_subcommand("capture", "interface capture");
  std::string cap_graph, cap_td, cap_nodes;
  cap->add_option("--graph", cap_graph)->required();
  cap->add_option("--td", cap_td, "decomposition json (default: exact+natural)");
  cap->add_option("--nodes", cap_nodes, "comma separated tree nodes")
      ->required();

  // partition
  auto* pa = app.add_subcommand("partition", "H-partition constructions");
  std::string pa_algo, pa_graph, pa_roots, pa_strategy = "singleton";
  int pa_h = 1, pa_d = 1, pa_k = 0, pa_t = -1;
  pa->add_option("--algo", pa_algo, "chordal|main|wcol")->required();
  pa->add_option("--graph", pa_graph)->required();
  pa->add_option("--h", pa_h);
  pa->add_option("--d", pa_d);
  pa->add_option("--k", pa_k);
  pa->add_option("--t", pa_t);
  pa->add_option("--roots", pa_roots, "json: list of vertex sets (main) or vertices (wcol)");
  pa->add_option("--base-strategy", pa_strategy, "singleton|chordal");

  // verify
  auto* ve = app.add_subcommand("verify", "verify artifacts");
  std::string ve_what, ve_file, ve_graph;
  ve->add_option("what", ve_what, "certificate|partition")->required();
  ve->add_option("file", ve_file)->required();
  ve->add_option("--graph", ve_graph, "host graph (partition mode)");

  // witness
  auto* wi = app.add_subcommand("witness", "lower-bound witnesses");
  std::string wi_what, wi_partition;
  int wi_h = 1, wi_d = 1;
  wi->add_option("what", wi_what, "uhd")->required();
  wi->add_option("--h", wi_h)->required();
  wi->add_option("--d", wi_d)->required();
  wi->add_option("--partition", wi_partition)->required();

  // bounds
  auto* bo = app.add_subcommand("bounds", "parameter recursions and bounds");
  int bo_h = 1, bo_d = 1, bo_k = 0, bo_t = 1, bo_r = 1;
  bo->add_option("--h", bo_h)->required();
  bo->add_option("--d", bo_d)->required();
  bo->add_option("--k", bo_k)->required();
  bo->add_option("--t", bo_t)->required();
  bo->add_option("--r", bo_r)->required();

  // sweep
  auto* sw = app.add_subcommand("sweep", "run a corpus of checks");
  std::string sw_config;
  int sw_threads = 1;
  sw->add_option("--config", sw_config)->required();
  sw->add_option("--threads", sw_threads, "parallel rows (results stay in config order)");

  CLI11_PARSE(app, argc, argv);
  ConstructBudget budget = make_budget(opts);

  if (*gen) {
    Graph g = generate(gen_family, gen_params, opts);
    if (opts.format == "dot")
      emit(opts, graph_to_dot(g));
    else if (opts.format == "csv")
      emit(opts, graph_to_text(g));
    else
      emit_json(opts, graph_to_json(g));
    return 0;
  }
  if (*wc) {
    Graph g = load_graph(wc_graph);
    json out;
    if (wc_exact) {
      WcolBudget wb;
      wb.max_n = std::min(opts.budget_n, 12);
      auto res = wcol_exact(g, wc_r, wb);
      out["value"] = res.value;
      out["order"] = res.ordering.positions();
    } else {
      Ordering sigma = Ordering::identity(g.n());
      if (!wc_order_file.empty())
        sigma = Ordering::from_positions(
            load_json_file(wc_order_file).get<std::vector<Vertex>>());
      out["value"] = wcol_of_ordering(g, sigma, wc_r);
      out["order"] = sigma.positions();
      json pv = json::array();
      for (Vertex v = 0; v < g.n(); ++v)
        pv.push_back(wreach(g, sigma, v, wc_r).count());
      out["per_vertex"] = pv;
    }
    emit_json(opts, out);
    return 0;
  }
  if (*tw) {
    Graph g = load_graph(tw_graph);
    auto res = exact_treewidth(g, budget.exact);
    emit_json(opts, certify_treewidth(g, res));
    return 0;
  }
  if (*td) {
    Graph g = load_graph(td_graph);
    auto res = exact_treedepth(g, budget.exact);
    emit_json(opts, certify_treedepth(g, res));
    return 0;
  }
  if (*minor) {
    Graph host = load_graph(mi_host);
    Graph pattern = load_graph(mi_pattern);
    if (mi_roots.empty() && mi_apex < 0) {
      auto m = find_model(host, pattern, budget.search);
      emit_json(opts, certify_minor(host, pattern, m, budget.search.nodes));
      return 0;
    }
    std::vector<VertexSet> roots;
    if (!mi_roots.empty())
      for (const auto& r : load_json_file(mi_roots))
        roots.push_back(vertex_set_from_json(r));
    int a = mi_apex >= 0 ? mi_apex : static_cast<int>(roots.size());
    auto am = find_attached_model(host, a, pattern, roots, budget.search);
    json out{{"attached", am.has_value()}};
    if (am) out["model"] = model_to_json(am->model);
    emit_json(opts, out);
    return 0;
  }
  if (*me) {
    Graph g = load_graph(me_graph);
    VertexSet s = VertexSet::of(parse_int_list(me_s));
    VertexSet t = VertexSet::of(parse_int_list(me_t));
    auto res = menger(g, s, t, me_k);
    emit_json(opts, certify_menger(g, s, t, me_k, res));
    return 0;
  }
  if (*nat) {
    Graph g = load_graph(nat_graph);
    TreeDecomposition base =
        nat_td.empty()
            ? exact_treewidth(g, budget.exact).decomposition
            : tree_decomposition_from_json(load_json_file(nat_td));
    auto res = make_natural(g, base);
    emit_json(opts, tree_decomposition_to_json(res));
    return 0;
  }
  if (*he) {
    Graph g = load_graph(he_graph);
    TreeDecomposition base =
        he_td.empty() ? exact_treewidth(g, budget.exact).decomposition
                      : tree_decomposition_from_json(load_json_file(he_td));
    std::vector<VertexSet> fam;
    for (const auto& f : load_json_file(he_family))
      fam.push_back(vertex_set_from_json(f));
    auto res = helly_hit(g, base, fam, he_d);
    json out;
    if (res.disjoint_family) {
      json members = json::array();
      for (const auto& m : *res.disjoint_family)
        members.push_back(vertex_set_to_json(m));
      out["disjoint_family"] = members;
    } else {
      out["hitting_nodes"] = *res.hitting_nodes;
    }
    emit_json(opts, out);
    return 0;
  }
  if (*cap) {
    Graph g = load_graph(cap_graph);
    TreeDecomposition base =
        cap_td.empty()
            ? make_natural(g, exact_treewidth(g, budget.exact).decomposition)
            : tree_decomposition_from_json(load_json_file(cap_td));
    auto res = capture_interfaces(g, base, parse_int_list(cap_nodes));
    emit_json(opts, json{{"nodes", res.nodes},
                         {"x", vertex_set_to_json(res.x)}});
    return 0;
  }
  if (*pa) {
    Graph g = load_graph(pa_graph);
    if (pa_algo == "chordal") {
      auto res = chordal_partition(g, pa_t < 0 ? 4 : pa_t, budget);
      emit_json(opts, certify_chordal(g, pa_t < 0 ? 4 : pa_t, res));
      return 0;
    }
    if (pa_algo == "main") {
      std::vector<VertexSet> roots;
      if (!pa_roots.empty())
        for (const auto& r : load_json_file(pa_roots))
          roots.push_back(vertex_set_from_json(r));
      int t = pa_t > 0 ? pa_t : exact_treewidth(g, budget.exact).width + 1;
      auto strat = pa_strategy == "chordal" ? BaseStrategy::kChordal
                                            : BaseStrategy::kSingleton;
      auto res = main_partition(pa_h, pa_d, pa_k, t, g, roots, strat, budget);
      emit_json(opts, certify_main(g, pa_h, pa_d, pa_k, t, roots, res));
      return 0;
    }
    if (pa_algo == "wcol") {
      std::vector<Vertex> roots;
      if (!pa_roots.empty())
        roots = load_json_file(pa_roots).get<std::vector<Vertex>>();
      auto res = wcol_partition(pa_h, pa_d, pa_k, g, roots, budget);
      emit_json(opts, certify_wcol(g, pa_h, pa_d, pa_k, res));
      return 0;
    }
    throw InputError("unknown partition algorithm: " + pa_algo);
  }
  if (*ve) {
    if (ve_what == "certificate") {
      verify_certificate(load_json_file(ve_file), budget);
      emit_json(opts, json{{"verified", true}});
      return 0;
    }
    if (ve_what == "partition") {
      if (ve_graph.empty())
        throw InputError("verify partition requires --graph");
      Graph g = load_graph(ve_graph);
      HPartition hp = hpartition_from_json(load_json_file(ve_file));
      auto rep = verify_hpartition(g, hp);
      emit_json(opts, json{{"valid", rep.valid},
                           {"width", rep.width},
                           {"reason", rep.reason}});
      return rep.valid ? 0 : 2;
    }
    throw InputError("verify expects 'certificate' or 'partition'");
  }
  if (*wi) {
    if (wi_what != "uhd") throw InputError("witness expects 'uhd'");
    HPartition hp = hpartition_from_json(load_json_file(wi_partition));
    auto clique = uhd_clique_witness(wi_h, wi_d, hp);
    emit_json(opts, json{{"clique", clique}});
    return 0;
  }
  if (*bo) {
    emit_json(opts,
              json{{"h", bo_h},
                   {"d", bo_d},
                   {"k", bo_k},
                   {"t", bo_t},
                   {"r", bo_r},
                   {"tau", tau(bo_h, bo_k)},
                   {"tau_h0", tau(bo_h, 0)},
                   {"c_param", c_param(bo_h, bo_d, bo_k)},
                   {"t_size", t_size(bo_h, bo_d, bo_k)},
                   {"eps_impl", eps_impl(bo_h, bo_d, bo_k, bo_t)},
                   {"grohe_bound", grohe_bound(bo_t, bo_r)},
                   {"wcol_pipeline_bound",
                    wcol_pipeline_bound(bo_h, bo_d, bo_t, bo_r)},
                   {"wcol_chordal_bound",
                    bo_t >= 3 ? wcol_chordal_bound(bo_t, bo_r) : 0}});
    return 0;
  }
  if (*sw) return run_sweep(sw_config, opts, sw_threads);
  return 1;
}

}  // namespace
}  // namespace hpart

int main(int argc, char** argv) {
  try {
    return hpart::run(argc, argv);
  } catch (const hpart::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const hpart::VerifyError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const hpart::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const hpart::InputError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
