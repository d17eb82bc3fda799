#include "egobw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include "egobw/dynamic.hpp"
#include "egobw/egoscore.hpp"
#include "egobw/graph.hpp"
#include "egobw/parallel.hpp"
#include "egobw/reference.hpp"
#include "egobw/topk.hpp"
#include "egobw/verify.hpp"

namespace egobw::cli {

namespace {

constexpr std::size_t kCompareLimit = 10000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_ranked(std::ostream& out, const Graph& g, const std::vector<ScoredVertex>& entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << i + 1 << '\t' << g.original_id(entries[i].vertex) << '\t' << format_score(entries[i].score) << '\n';
  }
}

struct TopkArgs {
  std::string graph;
  std::size_t k = 0;
  std::string algo = "opt";
  double theta = kDefaultTheta;
};

int cmd_topk(const TopkArgs& a, std::ostream& out) {
  if (a.k < 1) throw UsageError("--k must be at least 1");
  if (!(a.theta >= 1.0)) throw UsageError("--theta must be at least 1");
  Graph g = load_edge_list_file(a.graph);
  TopKResult r = a.algo == "base" ? base_search(g, a.k) : opt_search(g, a.k, a.theta);
  out << "# rank\tvertex\tscore\texact_computations=" << r.exact_computations << '\n';
  write_ranked(out, g, r.entries);
  return kOk;
}

struct ScoreArgs {
  std::string graph;
  std::string parallel = "none";
  unsigned threads = 1;
};

int cmd_score(const ScoreArgs& a, std::ostream& out) {
  if (a.threads < 1) throw UsageError("--threads must be at least 1");
  Graph g = load_edge_list_file(a.graph);
  std::vector<double> scores;
  if (a.parallel == "none") {
    scores = compute_all_scores(g);
  } else {
    auto og = orient(g);
    scores = a.parallel == "vertex" ? vertex_pebw(og, a.threads) : edge_pebw(og, a.threads);
  }
  std::vector<VertexId> by_id(g.num_vertices());
  for (VertexId v = 0; v < by_id.size(); ++v) by_id[v] = v;
  std::sort(by_id.begin(), by_id.end(),
            [&](VertexId x, VertexId y) { return g.original_id(x) < g.original_id(y); });
  out << "# vertex\tscore\n";
  for (VertexId v : by_id) out << g.original_id(v) << '\t' << format_score(scores[v]) << '\n';
  return kOk;
}

struct UpdateArgs {
  std::string graph;
  std::string mode;
  std::size_t k = 0;
  std::string stream;
};

VertexId resolve(const Graph& g, OriginalId id, std::size_t line) {
  auto v = g.find_vertex(id);
  if (!v) throw ParseError(line, "unknown vertex " + std::to_string(id));
  return *v;
}

int cmd_update(const UpdateArgs& a, std::ostream& out) {
  if (a.mode == "lazy" && a.k < 1) throw UsageError("--mode lazy requires --k >= 1");
  Graph g = load_edge_list_file(a.graph);
  std::ifstream in(a.stream);
  if (!in) throw GraphError("cannot open '" + a.stream + "'");
  const auto ops = parse_update_stream(in);

  std::vector<double> scores;
  std::optional<LazyIndex> index;
  if (a.mode == "lazy") index.emplace(g, a.k);
  else scores = compute_all_scores(g);

  for (const auto& op : ops) {
    const bool insert = op.kind == UpdateOp::Kind::kInsert;
    const Graph& current = index ? index->graph() : g;
    VertexId u = resolve(current, op.u, op.line);
    VertexId v = resolve(current, op.v, op.line);
    out << "# " << (insert ? '+' : '-') << ' ' << op.u << ' ' << op.v << '\n';
    try {
      if (index) {
        if (insert) index->insert_edge(u, v);
        else index->remove_edge(u, v);
        write_ranked(out, index->graph(), index->results());
      } else {
        auto changes = insert ? local_insert(g, scores, u, v) : local_delete(g, scores, u, v);
        for (const auto& c : changes) {
          out << g.original_id(c.vertex) << '\t' << format_score(c.before) << '\t' << format_score(c.after) << '\n';
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const GraphError& e) {
      throw ParseError(op.line, e.what());
    }
  }
  return kOk;
}

struct CompareArgs {
  std::string graph;
  std::size_t k = 0;
  bool force = false;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  if (a.k < 1) throw UsageError("--k must be at least 1");
  Graph g = load_edge_list_file(a.graph);
  if (g.num_vertices() > kCompareLimit && !a.force) {
    throw UsageError("graph has " + std::to_string(g.num_vertices()) +
                     " vertices; exact betweenness is only run up to " + std::to_string(kCompareLimit) +
                     " (pass --force to override)");
  }
  const std::size_t k = std::min(a.k, g.num_vertices());
  auto ego = compute_all_scores(g);
  auto full = reference::brandes_betweenness(g);
  auto ego_ranked = rank_all(g, ego);
  auto full_ranked = rank_all(g, full);
  ego_ranked.resize(k);
  full_ranked.resize(k);
  out << "# ego_betweenness\n# rank\tvertex\tscore\n";
  write_ranked(out, g, ego_ranked);
  out << "# betweenness\n# rank\tvertex\tscore\n";
  write_ranked(out, g, full_ranked);
  out << "overlap\t" << format_score(reference::topk_overlap(ego, full, k)) << '\n';
  return kOk;
}

}  // namespace

std::string format_score(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, end);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ego-betweenness centrality: scores, top-k search, updates, checks", "egobw"};
  app.require_subcommand(1);

  TopkArgs topk;
  auto* topk_cmd = app.add_subcommand("topk", "top-k vertices by ego-betweenness");
  topk_cmd->add_option("--k", topk.k, "number of results")->required();
  topk_cmd->add_option("--algo", topk.algo, "search algorithm")->check(CLI::IsMember({"base", "opt"}));
  topk_cmd->add_option("--theta", topk.theta, "re-queue ratio for opt");
  topk_cmd->add_option("graph", topk.graph, "edge list file")->required();

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "ego-betweenness of every vertex");
  score_cmd->add_option("--parallel", score.parallel, "work split")
      ->check(CLI::IsMember({"none", "vertex", "edge"}));
  score_cmd->add_option("--threads", score.threads, "worker threads");
  score_cmd->add_option("graph", score.graph, "edge list file")->required();

  UpdateArgs update;
  auto* update_cmd = app.add_subcommand("update", "apply an edge update stream");
  update_cmd->add_option("--mode", update.mode, "maintenance strategy")
      ->required()
      ->check(CLI::IsMember({"local", "lazy"}));
  update_cmd->add_option("--k", update.k, "result size (lazy)");
  update_cmd->add_option("--stream", update.stream, "update stream file")->required();
  update_cmd->add_option("graph", update.graph, "edge list file")->required();

  verify::VerifyOptions check;
  auto* verify_cmd = app.add_subcommand("verify", "property suite on seeded random graphs");
  verify_cmd->add_option("--trials", check.trials, "random graphs");
  verify_cmd->add_option("--max-n", check.max_n, "largest vertex count");
  verify_cmd->add_option("--seed", check.seed, "corpus seed");

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "top-k overlap with full betweenness");
  compare_cmd->add_option("--k", compare.k, "number of results")->required();
  compare_cmd->add_flag("--force", compare.force, "allow graphs above the size limit");
  compare_cmd->add_option("graph", compare.graph, "edge list file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success) ? kOk : kUsageError;
  }

  try {
    if (*topk_cmd) return cmd_topk(topk, out);
    if (*score_cmd) return cmd_score(score, out);
    if (*update_cmd) return cmd_update(update, out);
    if (*compare_cmd) return cmd_compare(compare, out);
    return verify::run_verify(check, out) ? kOk : kVerificationFailed;
  } catch (const UsageError& e) {
    err << "egobw: " << e.what() << '\n';
    return kUsageError;
  } catch (const GraphError& e) {
    err << "egobw: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace egobw::cli
