#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ulab/construct.hpp"
#include "ulab/edge_coloring.hpp"
#include "ulab/game.hpp"
#include "ulab/graph.hpp"
#include "ulab/random_label.hpp"
#include "ulab/verify.hpp"

namespace ulab::cli {
namespace {

using nlohmann::json;

struct GraphSource {
  std::string file;
  std::string descriptor;

  void attach(CLI::App& app) {
    auto* f = app.add_option("--graph", file, "edge-list file");
    auto* d = app.add_option("--generate", descriptor, "generator descriptor, e.g. cycle:5");
    f->excludes(d);
    d->excludes(f);
  }

  Graph load() const {
    if (file.empty() == descriptor.empty()) {
      throw CLI::ValidationError("graph source", "give exactly one of --graph or --generate");
    }
    return file.empty() ? generate(descriptor) : read_graph_file(file);
  }
};

struct Result {
  json body;
  int code = kOk;
};

json labels_json(const Graph& g, const EdgeLabeling& l) {
  json out = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.push_back({g.edge(e).u, g.edge(e).v, l.at(e)});
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::kMalformed, "cannot write " + path);
}

void print(std::ostream& out, const json& body, bool pretty) {
  if (!pretty) {
    out << body.dump(2) << "\n";
    return;
  }
  if (body.contains("csv")) {
    out << body["csv"].get<std::string>();
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : body.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : body.items()) {
    out << key << std::string(width - key.size() + 2, ' ')
        << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kExact: return "exact";
    case SearchStatus::kKMaxExceeded: return "kmax_exceeded";
    case SearchStatus::kBudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

Result do_label(const Graph& g, const std::string& construction, std::optional<Vertex> root,
                std::uint64_t budget, const std::string& out_path) {
  Result r;
  std::optional<EdgeLabeling> labeling;
  std::optional<int> exact;
  json extra = json::object();
  if (construction == "power2") {
    labeling = power_of_two_labeling(g, budget);
  } else if (construction == "star") {
    labeling = star_labeling(g);
    exact = std::max(1, 2 * g.edge_count() - 2);
  } else if (construction == "tree") {
    auto t = tree_labeling(g, root);
    extra["root"] = t.plan.root;
    extra["multiplier"] = t.plan.multiplier;
    labeling = std::move(t.labeling);
  } else if (construction == "cubic" || construction == "quartic") {
    const auto res = construction == "cubic" ? cubic_labeling(g, budget) : quartic_labeling(g, budget);
    if (res.status == RegularStatus::kClass2) {
      r.body = {{"construction", construction}, {"class", 2}, {"exceeds", *res.exceeds},
                {"verified", false}, {"exact_number", nullptr}};
      r.code = kNegative;
      return r;
    }
    if (res.status == RegularStatus::kUnknown) {
      r.body = {{"construction", construction}, {"class", nullptr}, {"exact_number", nullptr}};
      r.code = kUnknown;
      return r;
    }
    labeling = *res.labeling;
    exact = res.exact_number;
  } else {
    throw CLI::ValidationError("--construction", "expected power2|star|tree|cubic|quartic");
  }
  const bool verified = verify_local(g, *labeling, std::numeric_limits<int>::max()).universal;
  json sidecar = construction_sidecar(construction, *labeling, verified, exact);
  if (!out_path.empty()) {
    write_file(out_path, render_labeling(g, *labeling));
    write_file(out_path + ".json", sidecar.dump(2) + "\n");
  }
  sidecar.update(extra);
  sidecar["labels"] = labels_json(g, *labeling);
  r.body = std::move(sidecar);
  r.code = verified ? kOk : kNegative;
  return r;
}

Result do_number(const Graph& g, int k_max, std::uint64_t budget) {
  const auto res = min_universal_number(g, k_max, budget);
  Result r;
  r.body = {{"exact_number", res.exact ? json(*res.exact) : json(nullptr)},
            {"lower", res.lower},
            {"upper", res.upper ? json(*res.upper) : json(nullptr)},
            {"status", std::string(status_name(res.status))},
            {"nodes", res.nodes}};
  if (res.witness) r.body["witness"] = labels_json(g, *res.witness);
  r.code = res.exact ? kOk : kUnknown;
  return r;
}

std::string interval(std::optional<int> exact, int lower, std::optional<int> upper) {
  if (exact) return std::to_string(*exact);
  return std::to_string(lower) + ".." + (upper ? std::to_string(*upper) : std::string("?"));
}

}  // namespace

std::string catalog_csv(std::string_view name) {
  std::ostringstream csv;
  csv << "graph,n,m,max_degree,lower_bound,exact_number,game_number,edge_class\n";
  for (const auto& entry : catalog(name)) {
    const Graph g = generate(entry.descriptor);
    const auto bound = lower_bound(g);
    const auto number = min_universal_number(g);
    const int game_kmax = number.exact.value_or(kDefaultKMax);
    const auto game = game_number(g, game_kmax);
    std::optional<int> game_upper = number.exact;
    const auto cls = exact_chromatic_index(g);
    csv << entry.name << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << g.max_degree() << ','
        << bound.lower << ',' << interval(number.exact, number.lower, number.upper) << ','
        << interval(game.value, game.lower, game_upper) << ','
        << (cls.verdict == EdgeClass::kClass1   ? "class1"
            : cls.verdict == EdgeClass::kClass2 ? "class2"
                                                : "unknown")
        << '\n';
  }
  return csv.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal edge labelings: construct, verify, optimize, and play the labeling game", "ulab"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  GraphSource source;
  std::function<Result()> action;

  // verify
  std::string labels_path;
  std::string method = "local";
  int max_edges_brute = kDefaultBruteEdgeCap;
  int max_degree_local = kDefaultLocalDegreeCap;
  auto* verify = app.add_subcommand("verify", "check that a labeling is universal");
  source.attach(*verify);
  verify->add_option("--labels", labels_path, "labeling file (u v label)")->required();
  verify->add_option("--method", method)->check(CLI::IsMember({"brute", "local"}));
  verify->add_option("--max-edges-brute", max_edges_brute);
  verify->add_option("--max-degree-local", max_degree_local);
  verify->callback([&] {
    action = [&] {
      const Graph g = source.load();
      const EdgeLabeling l = read_labeling_file(labels_path, g);
      const auto report =
          method == "brute" ? verify_brute(g, l, max_edges_brute) : verify_local(g, l, max_degree_local);
      return Result{to_json(g, report), report.universal ? kOk : kNegative};
    };
  });

  // label
  std::string construction;
  std::optional<Vertex> root;
  std::string out_path;
  std::uint64_t budget = kDefaultSearchBudget;
  auto* label = app.add_subcommand("label", "build a labeling by one of the constructions");
  source.attach(*label);
  label->add_option("--construction", construction)
      ->required()
      ->check(CLI::IsMember({"power2", "star", "tree", "cubic", "quartic"}));
  label->add_option("--root", root, "tree root");
  label->add_option("--out", out_path, "write the labeling here and the sidecar to <out>.json");
  label->add_option("--budget", budget, "search node budget");
  label->callback([&] {
    action = [&] { return do_label(source.load(), construction, root, budget, out_path); };
  });

  // number
  int k_max = kDefaultKMax;
  auto* number = app.add_subcommand("number", "exact universal labeling number");
  source.attach(*number);
  number->add_option("--kmax", k_max);
  number->add_option("--budget", budget);
  number->callback([&] { action = [&] { return do_number(source.load(), k_max, budget); }; });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "degree bounds on the universal labeling number");
  source.attach(*bounds);
  bounds->callback([&] {
    action = [&] {
      const Graph g = source.load();
      const auto b = lower_bound(g);
      return Result{{{"max_degree", g.max_degree()}, {"lower", b.lower}, {"upper", b.upper}, {"reasons", b.reasons}},
                    kOk};
    };
  });

  // sets
  int set_d = 0;
  int set_k = 0;
  std::optional<Label> require;
  std::optional<Label> pair_max;
  auto* sets = app.add_subcommand("sets", "sum-free vertex label sets");
  sets->add_option("--d", set_d)->required();
  sets->add_option("--k", set_k)->required();
  sets->add_option("--require", require);
  sets->add_option("--pairmax", pair_max);
  sets->callback([&] {
    action = [&] {
      const auto found = admissible_vertex_sets(set_d, set_k, {require, pair_max});
      return Result{{{"d", set_d}, {"k", set_k}, {"sets", found}}, kOk};
    };
  });

  // game
  std::string game_mode;
  int game_k = 0;
  std::string fp = "greedy";
  std::string sp = "exhaustive";
  std::uint64_t seed = 0;
  std::uint64_t game_budget = kDefaultGameBudget;
  int game_kmax = 8;
  auto* game = app.add_subcommand("game", "the universal labeling game");
  game->add_option("mode", game_mode)->required()->check(CLI::IsMember({"solve", "play", "number"}));
  source.attach(*game);
  game->add_option("--k", game_k);
  game->add_option("--fp", fp)->check(CLI::IsMember({"two_label", "greedy", "tree"}));
  game->add_option("--sp", sp)->check(CLI::IsMember({"odd_cycle", "high_degree", "exhaustive", "random"}));
  game->add_option("--seed", seed);
  game->add_option("--budget", game_budget);
  game->add_option("--kmax", game_kmax);
  game->callback([&] {
    if (game_mode != "number" && game_k < 1) throw CLI::ValidationError("--k", "required, at least 1");
    action = [&] {
      const Graph g = source.load();
      if (game_mode == "solve") {
        const auto w = solve_game(g, game_k, game_budget);
        if (!w) return Result{{{"k", game_k}, {"winner", nullptr}}, kUnknown};
        return Result{{{"k", game_k}, {"winner", std::string(to_string(*w))}}, kOk};
      }
      if (game_mode == "play") {
        const auto outcome = play(g, game_k, parse_first_strategy(fp), parse_second_strategy(sp), seed, game_budget);
        return Result{transcript_json(g, outcome), kOk};
      }
      const auto res = game_number(g, game_kmax, game_budget);
      return Result{{{"game_number", res.value ? json(*res.value) : json(nullptr)}, {"lower", res.lower}},
                    res.value ? kOk : kUnknown};
    };
  });

  // aeul
  std::string aeul_mode;
  double epsilon = kDefaultEpsilon;
  std::uint64_t trials = 10'000;
  auto* aeul = app.add_subcommand("aeul", "random prime labeling that is universal with high probability");
  aeul->add_option("mode", aeul_mode)->required()->check(CLI::IsMember({"sample", "estimate"}));
  source.attach(*aeul);
  aeul->add_option("--epsilon", epsilon);
  aeul->add_option("--trials", trials);
  aeul->add_option("--seed", seed);
  aeul->callback([&] {
    action = [&] {
      const Graph g = source.load();
      const auto a = aeul_labeling(g, epsilon, seed);
      json body = aeul_sidecar(g, a);
      if (aeul_mode == "sample") {
        body["labels"] = labels_json(g, a.labeling);
      } else {
        body["estimate"] = to_json(estimate_conflict_probability(g, a.labeling, trials, seed));
      }
      return Result{body, kOk};
    };
  });

  // kn
  int kn_n = 0;
  Label kn_f = 0;
  std::uint64_t kn_trials = 1000;
  auto* kn = app.add_subcommand("kn", "uniform random labels on the complete graph");
  kn->add_option("--n", kn_n)->required();
  kn->add_option("--f", kn_f)->required();
  kn->add_option("--trials", kn_trials);
  kn->add_option("--seed", seed);
  kn->callback([&] {
    action = [&] {
      const auto lg = kn_random_labeling(kn_n, kn_f, seed);
      return Result{{{"n", kn_n},
                     {"f", kn_f},
                     {"estimate", to_json(estimate_conflict_probability(lg.graph, lg.labeling, kn_trials, seed))}},
                    kOk};
    };
  });

  // catalog
  std::string catalog_name = "small";
  std::string csv_path;
  auto* cat = app.add_subcommand("catalog", "CSV summary over a built-in graph list");
  cat->add_option("--name", catalog_name);
  cat->add_option("--out", csv_path);
  cat->callback([&] {
    action = [&] {
      const std::string csv = catalog_csv(catalog_name);
      if (csv_path.empty()) return Result{{{"catalog", catalog_name}, {"csv", csv}}, kOk};
      write_file(csv_path, csv);
      return Result{{{"catalog", catalog_name}, {"path", csv_path}, {"csv", csv}}, kOk};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Result r = action();
    print(out, r.body, pretty);
    return r.code;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::kCapExceeded ? kUnknown : kUsage;
  }
}

}  // namespace ulab::cli
