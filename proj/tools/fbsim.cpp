// fbsim: similarity search, baselines and evaluation over edge-list graphs.
//
// Exit codes: 0 success, 2 input error, 3 query error, 4 numerical error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fbsim/fbsim.hpp"
#include "json.hpp"

namespace {

using fbsim::Graph;
using fbsim::Measure;
using fbsim::NodeId;
using json = nlohmann::json;

constexpr int kInputError = 2;
constexpr int kQueryError = 3;
constexpr int kNumericalError = 4;

class UnknownLabel : public fbsim::Error {
 public:
  using Error::Error;
};

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

NodeId resolve(const Graph& g, const std::string& label) {
  if (auto id = g.find(label)) return *id;
  std::vector<std::pair<std::size_t, std::string>> near;
  for (const auto& name : g.labels()) near.emplace_back(edit_distance(label, name), name);
  const std::size_t keep = std::min<std::size_t>(5, near.size());
  std::partial_sort(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(keep), near.end());
  std::string msg = "unknown node '" + label + "'";
  if (keep > 0) {
    msg += "; did you mean:";
    for (std::size_t i = 0; i < keep; ++i) msg += " " + near[i].second;
  }
  throw UnknownLabel(msg);
}

/// Writes to the -o path when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw fbsim::Error("cannot write '" + path + "'");
    }
    stream() << std::setprecision(10);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Options shared by every command that runs a measure. Unset optionals keep
// the config-file or built-in default.
struct MeasureOptions {
  std::string config;
  std::optional<double> epsilon, tolerance, lambda, k1, k2;
  std::optional<std::size_t> n, rounds;
  std::optional<std::string> combiner;
  std::size_t max_iterations = 1000;
  std::string dangling = "drop";
  double simrank_c = 0.8;
  std::size_t walk_length = 100;
  std::size_t walks = 10000;
  std::string simrank_estimator = "linearized";
  std::string simrank_walk = "undirected";
  std::uint64_t seed = 42;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "key=value file: epsilon, tolerance, n, lambda, combiner, k1, k2, rounds")
        ->check(CLI::ExistingFile);
    app->add_option("--epsilon", epsilon, "reset probability (PPR, FBS, pSALSA) [0.15]");
    app->add_option("--tolerance", tolerance, "L1 convergence tolerance [1e-6]");
    app->add_option("--max-iterations", max_iterations, "power-iteration cap")->capture_default_str();
    app->add_option("--dangling", dangling, "mass on nodes without out-edges: drop or restart")
        ->check(CLI::IsMember({"drop", "restart"}))
        ->capture_default_str();
    app->add_option("--lambda", lambda, "FBS combiner weight on the forward score [0.5]");
    app->add_option("--combiner", combiner, "FBS combiner: linear or saturation [linear]")
        ->check(CLI::IsMember({"linear", "saturation"}));
    app->add_option("--k1", k1, "saturation constant for the forward score [0.72]");
    app->add_option("--k2", k2, "saturation constant for the backward score [0.3]");
    app->add_option("--n", n, "FBS candidate list size [20]");
    app->add_option("--rounds", rounds, "FBS forward/backward rounds [1]");
    app->add_option("--simrank-c", simrank_c, "SimRank decay")->capture_default_str();
    app->add_option("--walk-length", walk_length, "SimRank walk length T")->capture_default_str();
    app->add_option("--walks", walks, "SimRank walk count R")->capture_default_str();
    app->add_option("--simrank-estimator", simrank_estimator, "linearized or meeting")
        ->check(CLI::IsMember({"linearized", "meeting"}))
        ->capture_default_str();
    app->add_option("--simrank-walk", simrank_walk, "undirected or in (follow in-edges)")
        ->check(CLI::IsMember({"undirected", "in"}))
        ->capture_default_str();
    app->add_option("--seed", seed, "random seed")->capture_default_str();
  }

  fbsim::MeasureSettings settings() const {
    fbsim::MeasureSettings s;
    if (!config.empty()) s.fbs = fbsim::load_fbs_config_file(config);
    if (epsilon) s.fbs.ppr.epsilon = *epsilon;
    if (tolerance) s.fbs.ppr.tolerance = *tolerance;
    if (lambda) s.fbs.combiner.lambda = *lambda;
    if (k1) s.fbs.combiner.k1 = *k1;
    if (k2) s.fbs.combiner.k2 = *k2;
    if (n) s.fbs.n = *n;
    if (rounds) s.fbs.rounds = *rounds;
    if (combiner) {
      s.fbs.combiner.kind =
          *combiner == "saturation" ? fbsim::CombinerKind::kSaturation : fbsim::CombinerKind::kLinear;
    }
    s.fbs.ppr.max_iterations = max_iterations;
    s.fbs.ppr.dangling =
        dangling == "restart" ? fbsim::DanglingPolicy::kRestart : fbsim::DanglingPolicy::kDrop;
    s.fbs.validate();

    s.salsa.alpha = s.fbs.ppr.epsilon;
    s.salsa.tolerance = s.fbs.ppr.tolerance;
    s.salsa.max_iterations = max_iterations;
    s.salsa.validate();

    s.simrank.c = simrank_c;
    s.simrank.walk_length = walk_length;
    s.simrank.samples = walks;
    s.simrank.seed = seed;
    s.simrank.estimator = simrank_estimator == "meeting" ? fbsim::SimRankEstimator::kMeeting
                                                         : fbsim::SimRankEstimator::kLinearized;
    s.simrank.direction =
        simrank_walk == "in" ? fbsim::WalkDirection::kInEdges : fbsim::WalkDirection::kUndirected;
    s.simrank.validate();
    return s;
  }

  json echo() const {
    auto s = settings();
    return {{"epsilon", s.fbs.ppr.epsilon},
            {"tolerance", s.fbs.ppr.tolerance},
            {"dangling", dangling},
            {"n", s.fbs.n},
            {"rounds", s.fbs.rounds},
            {"combiner", s.fbs.combiner.kind == fbsim::CombinerKind::kLinear ? "linear" : "saturation"},
            {"lambda", s.fbs.combiner.lambda},
            {"k1", s.fbs.combiner.k1},
            {"k2", s.fbs.combiner.k2},
            {"simrank_c", simrank_c},
            {"walk_length", walk_length},
            {"walks", walks},
            {"simrank_estimator", simrank_estimator},
            {"simrank_walk", simrank_walk},
            {"seed", seed}};
  }
};

Measure to_measure(const std::string& name) {
  auto m = fbsim::parse_measure(name);
  if (!m) throw fbsim::InvalidArgument("unknown measure '" + name + "'");
  return *m;
}

const std::vector<std::string> kMeasureNames{"ppr", "fbs", "psalsa", "simrank", "adamic-adar"};

// ---------------------------------------------------------------------------

struct StatsCommand {
  std::string graph, communities, output;
  bool undirected = false, as_json = false;

  void run() const {
    Graph g = fbsim::load_edge_list_file(graph, !undirected);
    auto stats = fbsim::compute_stats(g);
    json report{{"nodes", stats.node_count},
                {"edges", stats.edge_count},
                {"directed", g.directed()},
                {"avg_degree", stats.avg_degree},
                {"bridge_fraction", stats.bridge_fraction}};
    if (!communities.empty()) {
      auto comms = fbsim::load_communities_file(communities, g);
      report["modularity"] = fbsim::modularity(g, fbsim::primary_partition(comms));
      report["cpv"] = fbsim::cpv(comms);
    }
    Output out(output);
    if (as_json) {
      out.stream() << report.dump() << '\n';
      return;
    }
    auto& os = out.stream();
    os << "nodes=" << stats.node_count << " edges=" << stats.edge_count
       << " directed=" << (g.directed() ? "true" : "false") << " avg_degree=" << stats.avg_degree
       << " bridge_fraction=" << stats.bridge_fraction;
    if (report.contains("modularity")) {
      os << " modularity=" << report["modularity"].get<double>() << " cpv=" << report["cpv"].get<double>();
    }
    os << '\n';
  }
};

struct QueryCommand {
  std::string graph, query, measure = "fbs", output;
  bool undirected = false, include_zero = false, as_json = false;
  std::size_t k = 10;
  MeasureOptions opts;

  void run() const {
    auto settings = opts.settings();
    Graph g = fbsim::load_edge_list_file(graph, !undirected);
    const NodeId u = resolve(g, query);
    const Measure m = to_measure(measure);
    Output out(output);
    auto& os = out.stream();

    if (m == Measure::kFbs) {
      auto cfg = settings.fbs;
      cfg.include_zero = include_zero;
      auto result = fbsim::fbs_query(g, u, cfg);
      if (as_json) {
        json rows = json::array();
        for (std::size_t i = 0; i < result.candidates.size() && i < k; ++i) {
          const auto& e = result.candidates[i];
          rows.push_back({{"rank", i + 1},
                          {"node", g.label(e.node)},
                          {"forward", e.forward},
                          {"backward", e.backward},
                          {"combined", e.combined}});
        }
        os << json{{"query", query}, {"measure", measure}, {"config", opts.echo()}, {"results", rows}}.dump(2)
           << '\n';
      } else {
        fbsim::write_fbs_tsv(os, g, result, k);
      }
      return;
    }

    auto ranking = fbsim::rank_query(g, u, m, settings, include_zero);
    if (ranking.order.size() > k) ranking.order.resize(k);
    if (as_json) {
      json rows = json::array();
      for (std::size_t i = 0; i < ranking.order.size(); ++i) {
        const NodeId v = ranking.order[i];
        rows.push_back({{"rank", i + 1}, {"node", g.label(v)}, {"score", ranking.scores[v]}});
      }
      os << json{{"query", query}, {"measure", measure}, {"config", opts.echo()}, {"results", rows}}.dump(2)
         << '\n';
    } else {
      fbsim::write_score_tsv(os, g, ranking.scores, ranking.order);
    }
  }
};

/// Up to `count` nodes drawn without replacement from `pool`, ascending.
std::vector<NodeId> sample_nodes(std::vector<NodeId> pool, std::size_t count, std::uint64_t seed) {
  if (count < pool.size()) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(count);
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

struct EvalCommunityCommand {
  std::string graph, communities, output;
  std::vector<std::string> measures{"ppr", "fbs"};
  std::vector<double> lambdas{0.05, 0.5, 0.95};
  std::size_t k = 10, samples = 100;
  bool undirected = false, normalized = false, as_json = false;
  MeasureOptions opts;

  void run() const {
    auto settings = opts.settings();
    Graph g = fbsim::load_edge_list_file(graph, !undirected);
    auto comms = fbsim::load_communities_file(communities, g);
    if (k == 0) throw fbsim::InvalidArgument("--k must be at least 1");

    std::vector<NodeId> labeled;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (!comms.of(u).empty()) labeled.push_back(u);
    }
    if (labeled.empty()) throw fbsim::InvalidArgument("no node of the graph has a community label");
    const auto queries = sample_nodes(labeled, samples, opts.seed);

    struct Curve {
      std::string name;
      std::optional<double> lambda;
      std::vector<double> values;
    };
    std::vector<Curve> curves;
    for (const auto& name : measures) {
      const Measure m = to_measure(name);
      std::vector<std::optional<double>> variants{std::nullopt};
      if (m == Measure::kFbs) variants.assign(lambdas.begin(), lambdas.end());
      for (auto lambda : variants) {
        auto s = settings;
        if (lambda) s.fbs.combiner.lambda = *lambda;
        s.fbs.validate();
        std::vector<std::vector<NodeId>> rankings;
        for (NodeId q : queries) rankings.push_back(fbsim::rank_query(g, q, m, s).order);
        Curve curve{name, lambda, {}};
        for (std::size_t cut = 1; cut <= k; ++cut) {
          curve.values.push_back(fbsim::maj_at_k(queries, rankings, comms, cut, normalized).value);
        }
        curves.push_back(std::move(curve));
      }
    }

    Output out(output);
    auto& os = out.stream();
    if (as_json) {
      json rows = json::array();
      for (const auto& c : curves) {
        json row{{"measure", c.name}, {"maj", c.values}};
        if (c.lambda) row["lambda"] = *c.lambda;
        rows.push_back(row);
      }
      json report{{"metric", normalized ? "MAJ (normalized aj)" : "MAJ"},
                  {"k_max", k},
                  {"queries", queries.size()},
                  {"curves", rows},
                  {"config", opts.echo()}};
      os << report.dump(2) << '\n';
      return;
    }
    os << "# MAJ@k over " << queries.size() << " queries\n";
    os << std::left << std::setw(22) << "measure";
    for (std::size_t cut = 1; cut <= k; ++cut) os << std::right << std::setw(10) << ("k=" + std::to_string(cut));
    os << '\n' << std::fixed << std::setprecision(4);
    for (const auto& c : curves) {
      std::string name = c.name;
      if (c.lambda) {
        std::ostringstream lam;
        lam << c.name << "(lambda=" << *c.lambda << ")";
        name = lam.str();
      }
      os << std::left << std::setw(22) << name;
      for (double v : c.values) os << std::right << std::setw(10) << v;
      os << '\n';
    }
  }
};

struct EvalLinkpredCommand {
  std::string graph, output;
  std::size_t positives = 10000, negatives = 10000, folds = 5;
  std::vector<std::string> feature_sets{"ppr", "fbs", "psalsa", "adamic-adar"};
  bool undirected = false, holdout = false, as_json = false;
  MeasureOptions opts;

  void run() const {
    auto settings = opts.settings();
    Graph g = fbsim::load_edge_list_file(graph, !undirected);
    auto set = fbsim::build_link_prediction_set(g, positives, negatives, opts.seed);

    Graph feature_graph = g;
    if (holdout) {
      std::vector<fbsim::Edge> kept;
      std::set<fbsim::Edge> removed(set.positives.begin(), set.positives.end());
      for (const auto& e : g.edges()) {
        if (!removed.count(e)) kept.push_back(e);
      }
      feature_graph = Graph::from_edges(g.node_count(), kept, g.directed(), g.labels());
    }

    std::vector<fbsim::Edge> pairs = set.positives;
    pairs.insert(pairs.end(), set.negatives.begin(), set.negatives.end());
    std::vector<int> labels(set.positives.size(), 1);
    labels.resize(pairs.size(), 0);

    fbsim::PairFeatures extractor(feature_graph, settings);
    json results = json::array();
    Output out(output);
    auto& os = out.stream();
    if (!as_json) os << "features\tauc\tstd_error\tfold_auc\n";
    for (const auto& spec : feature_sets) {
      std::vector<Measure> members;
      std::stringstream parts(spec);
      for (std::string name; std::getline(parts, name, ',');) members.push_back(to_measure(name));
      if (members.empty()) throw fbsim::InvalidArgument("empty feature set");

      std::vector<std::vector<double>> x;
      x.reserve(pairs.size());
      for (const auto& [u, v] : pairs) {
        std::vector<double> row;
        for (Measure m : members) extractor.append(m, u, v, row);
        x.push_back(std::move(row));
      }
      auto cv = fbsim::logistic_cv_auc(x, labels, folds, opts.seed);
      if (as_json) {
        json roc = json::array();
        for (const auto& p : cv.roc.points) roc.push_back({p.fpr, p.tpr});
        results.push_back({{"features", spec},
                           {"auc", cv.roc.auc},
                           {"std_error", cv.std_error},
                           {"fold_auc", cv.fold_auc},
                           {"roc", roc}});
      } else {
        os << spec << '\t' << cv.roc.auc << '\t' << cv.std_error << '\t';
        for (std::size_t f = 0; f < cv.fold_auc.size(); ++f) os << (f ? "," : "") << cv.fold_auc[f];
        os << '\n';
      }
    }
    if (as_json) {
      json report{{"positives", set.positives.size()},
                  {"negatives", set.negatives.size()},
                  {"folds", folds},
                  {"holdout", holdout},
                  {"results", results},
                  {"config", opts.echo()}};
      os << report.dump(2) << '\n';
    }
  }
};

struct GenCommand {
  std::size_t blocks = 4, size = 50;
  double p_in = 0.2, p_out = 0.01;
  bool undirected = false;
  std::uint64_t seed = 42;
  std::string edges_path, communities_path;

  void run() const {
    auto pp = fbsim::planted_partition(blocks, size, p_in, p_out, !undirected, seed);
    {
      Output out(edges_path);
      fbsim::write_edge_list(out.stream(), pp.graph);
    }
    if (!communities_path.empty()) {
      Output out(communities_path);
      fbsim::write_communities(out.stream(), pp.graph, pp.communities);
    }
  }
};

struct NdcgCommand {
  std::string graph, query, relevance, measure = "fbs", output;
  std::size_t k = 5;
  int judges = 20;
  bool undirected = false, as_json = false;
  MeasureOptions opts;

  void run() const {
    auto settings = opts.settings();
    Graph g = fbsim::load_edge_list_file(graph, !undirected);
    const NodeId u = resolve(g, query);
    std::ifstream in(relevance);
    if (!in) throw fbsim::Error("cannot open '" + relevance + "'");
    fbsim::RelevanceList rel;
    try {
      rel = fbsim::load_relevance(in);
    } catch (const fbsim::ParseError& e) {
      throw fbsim::ParseError(e.detail(), e.line(), relevance);
    }
    rel.validate(judges);

    auto ranking = fbsim::rank_query(g, u, to_measure(measure), settings, /*include_zero=*/true);
    std::vector<std::size_t> position(g.node_count());
    for (std::size_t i = 0; i < ranking.order.size(); ++i) position[ranking.order[i]] = i;

    std::vector<std::size_t> idx(rel.candidates.size());
    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      idx[i] = i;
      nodes.push_back(resolve(g, rel.candidates[i]));
    }
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return position[nodes[a]] < position[nodes[b]]; });
    std::vector<int> ordered;
    for (std::size_t i : idx) ordered.push_back(rel.votes[i]);
    const double value = fbsim::ndcg_at_k(ordered, std::min(k, ordered.size()));

    Output out(output);
    auto& os = out.stream();
    if (as_json) {
      json order = json::array();
      for (std::size_t i : idx) order.push_back({{"candidate", rel.candidates[i]}, {"votes", rel.votes[i]}});
      os << json{{"query", query}, {"measure", measure}, {"k", k}, {"ndcg", value}, {"ranking", order}}.dump(2)
         << '\n';
    } else {
      os << "ndcg@" << k << '\t' << value << '\n';
      for (std::size_t i : idx) os << rel.candidates[i] << '\t' << rel.votes[i] << '\n';
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fbsim: forward backward similarity search and evaluation"};
  app.require_subcommand(1);

  StatsCommand stats;
  auto* stats_cmd = app.add_subcommand("stats", "node/edge counts, average degree, bridges, modularity, CPV");
  stats_cmd->add_option("graph", stats.graph, "edge list")->required()->check(CLI::ExistingFile);
  stats_cmd->add_flag("--undirected", stats.undirected, "read edges as undirected");
  stats_cmd->add_option("--communities", stats.communities, "community file for modularity and CPV")
      ->check(CLI::ExistingFile);
  stats_cmd->add_flag("--json", stats.as_json, "JSON output");
  stats_cmd->add_option("-o,--output", stats.output, "output file");

  QueryCommand query;
  auto* query_cmd = app.add_subcommand("query", "rank nodes by similarity to a query node");
  query_cmd->add_option("graph", query.graph, "edge list")->required()->check(CLI::ExistingFile);
  query_cmd->add_option("-q,--query", query.query, "query node label")->required();
  query_cmd->add_option("--measure", query.measure, "similarity measure")
      ->check(CLI::IsMember(kMeasureNames))
      ->capture_default_str();
  query_cmd->add_option("--k", query.k, "number of results")->capture_default_str();
  query_cmd->add_flag("--include-zero", query.include_zero, "also list zero-score nodes");
  query_cmd->add_flag("--undirected", query.undirected, "read edges as undirected");
  query_cmd->add_flag("--json", query.as_json, "JSON output");
  query_cmd->add_option("-o,--output", query.output, "output file");
  query.opts.attach(query_cmd);

  EvalCommunityCommand community;
  auto* community_cmd = app.add_subcommand("eval-community", "MAJ@k of top-k rankings against ground-truth communities");
  community_cmd->add_option("graph", community.graph, "edge list")->required()->check(CLI::ExistingFile);
  community_cmd->add_option("--communities", community.communities, "community file")
      ->required()
      ->check(CLI::ExistingFile);
  community_cmd->add_option("--measure", community.measures, "measures to evaluate")
      ->check(CLI::IsMember(kMeasureNames))
      ->capture_default_str();
  community_cmd->add_option("--lambdas", community.lambdas, "FBS lambda values")->capture_default_str();
  community_cmd->add_option("--k", community.k, "largest cutoff")->capture_default_str();
  community_cmd->add_option("--samples", community.samples, "number of query nodes")->capture_default_str();
  community_cmd->add_flag("--normalized", community.normalized, "divide the inner aj sum by its rank");
  community_cmd->add_flag("--undirected", community.undirected, "read edges as undirected");
  community_cmd->add_flag("--json", community.as_json, "JSON output");
  community_cmd->add_option("-o,--output", community.output, "output file");
  community.opts.attach(community_cmd);

  EvalLinkpredCommand linkpred;
  auto* linkpred_cmd = app.add_subcommand("eval-linkpred", "link prediction AUC by logistic regression with k-fold CV");
  linkpred_cmd->add_option("graph", linkpred.graph, "edge list")->required()->check(CLI::ExistingFile);
  linkpred_cmd->add_option("--pos", linkpred.positives, "true edges to sample")->capture_default_str();
  linkpred_cmd->add_option("--neg", linkpred.negatives, "non-edges to sample")->capture_default_str();
  linkpred_cmd->add_option("--features", linkpred.feature_sets,
                           "feature sets, each a comma-separated list of measures")
      ->capture_default_str();
  linkpred_cmd->add_option("--folds", linkpred.folds, "cross-validation folds")->capture_default_str();
  linkpred_cmd->add_flag("--holdout", linkpred.holdout, "remove sampled true edges before computing features");
  linkpred_cmd->add_flag("--undirected", linkpred.undirected, "read edges as undirected");
  linkpred_cmd->add_flag("--json", linkpred.as_json, "JSON output (includes ROC points)");
  linkpred_cmd->add_option("-o,--output", linkpred.output, "output file");
  linkpred.opts.attach(linkpred_cmd);

  GenCommand gen;
  auto* gen_cmd = app.add_subcommand("gen", "planted-partition graph and its community file");
  gen_cmd->add_option("--blocks", gen.blocks, "number of communities")->capture_default_str();
  gen_cmd->add_option("--size", gen.size, "nodes per community")->capture_default_str();
  gen_cmd->add_option("--p-in", gen.p_in, "edge probability inside a community")->capture_default_str();
  gen_cmd->add_option("--p-out", gen.p_out, "edge probability across communities")->capture_default_str();
  gen_cmd->add_flag("--undirected", gen.undirected, "undirected edges");
  gen_cmd->add_option("--seed", gen.seed, "random seed")->capture_default_str();
  gen_cmd->add_option("--edges", gen.edges_path, "edge list output (stdout when omitted)");
  gen_cmd->add_option("--communities-out", gen.communities_path, "community file output");

  NdcgCommand ndcg;
  auto* ndcg_cmd = app.add_subcommand("ndcg", "nDCG@k of a measure's ordering of voted candidates");
  ndcg_cmd->add_option("graph", ndcg.graph, "edge list")->required()->check(CLI::ExistingFile);
  ndcg_cmd->add_option("-q,--query", ndcg.query, "query node label")->required();
  ndcg_cmd->add_option("--relevance", ndcg.relevance, "relevance file: candidate<TAB>votes")
      ->required()
      ->check(CLI::ExistingFile);
  ndcg_cmd->add_option("--measure", ndcg.measure, "similarity measure")
      ->check(CLI::IsMember(kMeasureNames))
      ->capture_default_str();
  ndcg_cmd->add_option("--k", ndcg.k, "cutoff")->capture_default_str();
  ndcg_cmd->add_option("--judges", ndcg.judges, "votes per query")->capture_default_str();
  ndcg_cmd->add_flag("--undirected", ndcg.undirected, "read edges as undirected");
  ndcg_cmd->add_flag("--json", ndcg.as_json, "JSON output");
  ndcg_cmd->add_option("-o,--output", ndcg.output, "output file");
  ndcg.opts.attach(ndcg_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*stats_cmd) stats.run();
    if (*query_cmd) query.run();
    if (*community_cmd) community.run();
    if (*linkpred_cmd) linkpred.run();
    if (*gen_cmd) gen.run();
    if (*ndcg_cmd) ndcg.run();
  } catch (const UnknownLabel& e) {
    std::cerr << "fbsim: " << e.what() << '\n';
    return kQueryError;
  } catch (const fbsim::NonConvergence& e) {
    std::cerr << "fbsim: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "fbsim: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
