#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "crn/balance.hpp"
#include "crn/dynamics.hpp"
#include "crn/errors.hpp"
#include "crn/lift.hpp"
#include "crn/subnetwork.hpp"

namespace crn::cli {

namespace {

using nlohmann::json;

// Malformed command-line values; reported with exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------- parsing

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, const char* what) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw InputError(std::string("bad ") + what + ": " + e.what());
    }
  }
  if (out.empty()) throw InputError(std::string("empty ") + what);
  return out;
}

std::vector<double> parse_doubles(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const auto& q : parse_rationals(text, what)) out.push_back(to_double(q));
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t limit, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& q : parse_rationals(text, what)) {
    if (q.get_den() != 1 || q < 1 || q > static_cast<unsigned long>(limit))
      throw InputError(std::string(what) + " must be integers in 1.." + std::to_string(limit));
    out.push_back(q.get_num().get_ui() - 1);
  }
  return out;
}

std::vector<Block> read_partition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open partition file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed partition file '" + path + "': " + e.what());
  }
  if (j.is_object() && j.contains("blocks")) j = j["blocks"];
  if (!j.is_array()) throw InputError("partition file must hold an array of blocks");
  std::vector<Block> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) throw InputError("every block must be an array of split indices");
    Block block;
    for (const auto& i : b) {
      if (!i.is_number_unsigned()) throw InputError("split indices must be positive integers");
      block.push_back(i.get<std::size_t>());
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

ReactionGraph graph_for(const NetworkPtr& net, const std::string& partition_path) {
  if (partition_path.empty()) return canonical_complex_graph(net);
  return ReactionGraph(AdmissiblePartition::from_one_based(net, read_partition(partition_path)));
}

std::vector<Rational> kappa_for(const ReactionNetwork& net, const std::string& text) {
  std::vector<Rational> kappa;
  if (text.empty()) {
    auto rates = net.rational_rates();
    if (!rates) throw InputError("--kappa is required: the network has symbolic rate constants");
    kappa = std::move(*rates);
  } else {
    kappa = parse_rationals(text, "rate constants");
  }
  if (kappa.size() != net.num_reactions())
    throw InputError("expected " + std::to_string(net.num_reactions()) + " rate constants, got " +
                     std::to_string(kappa.size()));
  for (const auto& k : kappa)
    if (k <= 0) throw InputError("rate constants must be positive");
  return kappa;
}

std::size_t partition_cap() {
  const char* env = std::getenv("CRN_MAX_PARTITIONS");
  if (env == nullptr || *env == '\0') return kDefaultPartitionCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw InputError("CRN_MAX_PARTITIONS must be a positive integer");
  return static_cast<std::size_t>(v);
}

// -------------------------------------------------------------- rendering

json number(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational(const Rational& q) { return to_string(q); }

template <class T>
json rational_list(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json int_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json blocks_json(const AdmissiblePartition& p) { return p.one_based(); }

json graph_summary(const ReactionGraph& g) {
  return {{"nodes", g.num_nodes()},
          {"edges", g.num_edges()},
          {"components", g.num_components()},
          {"deficiency", g.deficiency()},
          {"weakly_reversible", g.is_weakly_reversible()}};
}

std::string relation_string(const Relation& r) {
  auto side = [](const std::vector<std::pair<std::size_t, Integer>>& factors) {
    if (factors.empty()) return std::string("1");
    std::string s;
    for (const auto& [node, e] : factors) {
      if (!s.empty()) s += "*";
      s += "K" + std::to_string(node + 1);
      if (e != 1) s += "^" + e.get_str();
    }
    return s;
  };
  return side(r.lhs) + " = " + side(r.rhs);
}

json polynomials(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

void render_text(std::ostream& out, const json& j, int indent);

bool is_scalar_array(const json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
}

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_text(const json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
  return s + "]";
}

bool is_flat(const json& j) {
  if (!j.is_structured()) return true;
  if (!j.is_array()) return false;
  return std::all_of(j.begin(), j.end(), [](const json& e) { return is_scalar_array(e) || !e.is_structured(); });
}

void render_text(std::ostream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << inline_text(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render_text(out, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        out << pad << "- " << inline_text(e) << "\n";
      } else {
        out << pad << "-\n";
        render_text(out, e, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "text") render_text(out, j, 0);
  else out << j.dump(2) << "\n";
}

// --------------------------------------------------------------- commands

struct Options {
  std::string format = "json";
  std::string network;
  std::string partition;
  std::string kappa;
  std::string x;
  std::string x0;
  std::string class_anchor;
  std::string subsets;
  std::string join;
  double t_end = 0.0;
  double dt = 0.0;
  double tol = 0.0;
  bool adaptive = false;
  bool expand = false;
  bool weakly_reversible_only = false;
  bool crn_text = false;
};

int cmd_parse(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  json complexes = json::array();
  for (const auto& c : net->complexes()) complexes.push_back(format_complex(*net, c));
  json reactions = json::array();
  for (std::size_t j = 0; j < net->num_reactions(); ++j) {
    const auto& r = net->reactions()[j];
    reactions.push_back({{"id", j + 1},
                         {"source", format_complex(*net, net->source(j))},
                         {"target", format_complex(*net, net->target(j))},
                         {"rate", r.rate.to_string()}});
  }
  emit(out,
       {{"species", net->species()},
        {"complexes", complexes},
        {"reactions", reactions},
        {"stoichiometric_matrix", int_matrix(net->stoichiometric_matrix())}},
       o.format);
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  emit(out,
       {{"species", net->num_species()},
        {"complexes", net->num_complexes()},
        {"reactions", net->num_reactions()},
        {"rank", net->rank()},
        {"admissible_partitions", number(count_admissible_partitions(*net))},
        {"complex_graph", graph_summary(canonical_complex_graph(net))},
        {"detailed_graph", graph_summary(detailed_graph(net))},
        {"split_graph", graph_summary(canonical_split_graph(net))}},
       o.format);
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  json graphs = json::array();
  std::size_t total = 0;
  for_each_admissible_partition(net, partition_cap(), [&](const AdmissiblePartition& p) {
    ++total;
    ReactionGraph g(p);
    if (o.weakly_reversible_only && !g.is_weakly_reversible()) return true;
    json entry = graph_summary(g);
    entry["partition"] = blocks_json(p);
    graphs.push_back(std::move(entry));
    return true;
  });
  emit(out, {{"admissible_partitions", total}, {"listed", graphs.size()}, {"graphs", graphs}}, o.format);
  return kOk;
}

int cmd_graph_info(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  auto g = graph_for(net, o.partition);
  json labels = json::array();
  json component_of = json::array();
  for (std::size_t k = 0; k < g.num_nodes(); ++k) {
    labels.push_back(format_complex(*net, g.label_complex(k)));
    component_of.push_back(g.component_of(k) + 1);
  }
  json edges = json::array();
  for (std::size_t j = 0; j < g.num_edges(); ++j)
    edges.push_back({{"reaction", j + 1}, {"source", g.edges()[j].source + 1}, {"target", g.edges()[j].target + 1}});
  json report = graph_summary(g);
  report["partition"] = blocks_json(g.partition());
  report["labels"] = labels;
  report["edge_list"] = edges;
  report["component_of"] = component_of;
  report["cayley_matrix"] = int_matrix(cayley_matrix(g));
  report["tree_constants"] = g.is_weakly_reversible() ? polynomials(tree_constants_symbolic(g)) : json(nullptr);
  emit(out, report, o.format);
  return kOk;
}

int cmd_conditions(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  auto g = graph_for(net, o.partition);
  json report = {{"graph", graph_summary(g)}};
  if (!g.is_weakly_reversible()) {
    report["conditions"] = nullptr;
    report["reason"] = "not weakly reversible: no positive node balanced steady states";
    emit(out, report, o.format);
    return kNegative;
  }
  auto c = balance_conditions(g, o.expand);
  json basis = json::array();
  for (const auto& u : c.basis) {
    json v = json::array();
    for (const auto& e : u) v.push_back(number(e));
    basis.push_back(std::move(v));
  }
  json relations = json::array();
  for (const auto& r : c.relations) relations.push_back(relation_string(r));
  report["kernel_basis"] = basis;
  report["relations"] = relations;
  report["tree_constants"] = polynomials(c.tree_constants);
  if (c.expanded) {
    json expanded = json::array();
    for (const auto& e : *c.expanded) expanded.push_back({{"lhs", e.lhs.to_string()}, {"rhs", e.rhs.to_string()}});
    report["expanded"] = expanded;
  }
  emit(out, report, o.format);
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  auto g = graph_for(net, o.partition);
  auto kappa = kappa_for(*net, o.kappa);
  json report = {{"graph", graph_summary(g)}, {"kappa", rational_list(kappa)}};
  if (!g.is_weakly_reversible()) {
    report["balanced"] = false;
    report["reason"] = "not weakly reversible";
    emit(out, report, o.format);
    return kNegative;
  }
  auto check = check_kappa_balanced(g, kappa);
  auto conditions = balance_conditions(g);
  json relations = json::array();
  for (std::size_t i = 0; i < check.relations.size(); ++i) {
    const auto& r = check.relations[i];
    relations.push_back({{"relation", relation_string(conditions.relations[i])},
                         {"lhs", rational(r.lhs)},
                         {"rhs", rational(r.rhs)},
                         {"holds", r.holds}});
  }
  report["balanced"] = check.balanced;
  report["tree_constants"] = rational_list(check.tree_constants);
  report["relations"] = relations;
  emit(out, report, o.format);
  return check.balanced ? kOk : kNegative;
}

json complex_list(const std::vector<std::complex<double>>& values) {
  json out = json::array();
  for (const auto& z : values) out.push_back({{"re", z.real()}, {"im", z.imag()}});
  return out;
}

int cmd_steady_state(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  auto g = graph_for(net, o.partition);
  auto kappa = kappa_for(*net, o.kappa);
  json report = {{"graph", graph_summary(g)}};
  if (!g.is_weakly_reversible()) {
    report["feasible"] = false;
    report["reason"] = "not weakly reversible";
    emit(out, report, o.format);
    return kNegative;
  }
  auto sol = solve_positive_steady_state(g, kappa);
  report["feasible"] = sol.feasible;
  report["log_residual"] = sol.residual;
  if (sol.feasible) report["x"] = sol.x;
  if (sol.feasible && !o.class_anchor.empty()) {
    auto anchor = parse_doubles(o.class_anchor, "class anchor");
    auto birch = birch_point(g, kappa, anchor);
    std::vector<double> kd;
    for (const auto& k : kappa) kd.push_back(to_double(k));
    auto stability = stability_report(*net, kd, birch.x);
    report["birch_point"] = {{"x", birch.x},
                             {"residual", birch.residual},
                             {"membership_error", birch.membership_error},
                             {"iterations", birch.iterations}};
    report["stability"] = {{"verdict", to_string(stability.verdict)},
                           {"eigenvalues", complex_list(stability.eigenvalues)}};
  }
  emit(out, report, o.format);
  return sol.feasible ? kOk : kNegative;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  std::vector<double> kappa;
  for (const auto& k : kappa_for(*net, o.kappa)) kappa.push_back(to_double(k));
  auto x0 = parse_doubles(o.x0, "initial state");
  if (x0.size() != net->num_species())
    throw InputError("expected " + std::to_string(net->num_species()) + " initial concentrations");
  SimulationOptions opts;
  opts.dt = o.dt;
  opts.adaptive = o.adaptive;
  if (o.tol > 0) opts.rel_tol = o.tol;
  auto trace = simulate(*net, kappa, x0, o.t_end, opts);
  if (o.format == "csv") {
    out << "t";
    for (const auto& s : net->species()) out << "," << s;
    out << "\n";
    char buf[32];
    for (std::size_t k = 0; k < trace.times.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", trace.times[k]);
      out << buf;
      for (double v : trace.states[k]) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << "," << buf;
      }
      out << "\n";
    }
    return kOk;
  }
  emit(out,
       {{"species", net->species()},
        {"times", trace.times},
        {"states", trace.states},
        {"final_state", trace.final_state()},
        {"final_residual", trace.final_residual},
        {"reached_steady_state", trace.reached_steady_state},
        {"steps", trace.steps},
        {"rejected_steps", trace.rejected_steps}},
       o.format);
  return kOk;
}

json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  auto g = graph_for(net, o.partition);
  std::vector<std::vector<std::size_t>> subsets;
  for (const auto& part : split(o.subsets, ';')) subsets.push_back(parse_indices(part, net->num_reactions(), "reactions"));
  auto s = make_split(net, subsets);
  auto induced = induced_graphs(g, s);
  json parts = json::array();
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    json species = json::array();
    for (std::size_t sp : s.parts[i].species) species.push_back(net->species()[sp]);
    parts.push_back({{"reactions", one_based(s.parts[i].reactions)},
                     {"species", species},
                     {"complementary", s.has_complement() && i + 1 == s.parts.size()},
                     {"graph", graph_summary(induced.parts[i])}});
  }
  auto feasibility = joint_balance_feasibility(g, s);
  json report = {{"graph", graph_summary(g)},
                 {"parts", parts},
                 {"union_partition", blocks_json(induced.union_graph.partition())},
                 {"union_graph", graph_summary(induced.union_graph)},
                 {"joint_feasible", feasibility.feasible}};
  if (feasibility.feasible) report["witness_kappa"] = rational_list(feasibility.witness_kappa);
  bool negative = !feasibility.feasible;
  if (!o.kappa.empty() || !o.x.empty()) {
    auto kappa = kappa_for(*net, o.kappa);
    auto x = parse_rationals(o.x, "state");
    auto v = decomposition_check(g, s, kappa, x);
    report["verdicts"] = {{"first", v.first},
                          {"second", v.second},
                          {"third", v.third},
                          {"parent_balanced", v.parent_balanced},
                          {"part_balanced", v.part_balanced},
                          {"agree", v.agree()}};
    negative = negative || !v.second;
  }
  emit(out, report, o.format);
  return negative ? kNegative : kOk;
}

int cmd_lift(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  auto g = graph_for(net, o.partition);
  auto lift = lift_network(g);
  const std::string text = format_network(*lift.network());
  if (o.crn_text) {
    out << text;
    return kOk;
  }
  auto lifted_graph = canonical_complex_graph(lift.network());
  emit(out,
       {{"epsilon", lift.epsilon()},
        {"species", lift.network()->species()},
        {"reactions", lift.network()->num_reactions()},
        {"rank", lift.network()->rank()},
        {"deficiency", lifted_graph.deficiency()},
        {"base_deficiency", g.deficiency()},
        {"network", text}},
       o.format);
  return kOk;
}

int cmd_incremental(const Options& o, std::ostream& out) {
  auto net = load_network(o.network);
  auto g = graph_for(net, o.partition);
  auto nodes = parse_indices(o.join, g.num_nodes(), "nodes");
  if (nodes.size() != 2) throw InputError("--join takes two node numbers");
  auto c = incremental_condition(g, nodes[0], nodes[1]);
  json report = {{"before", graph_summary(g)},
                 {"after", graph_summary(c.joined)},
                 {"joined_partition", blocks_json(c.joined.partition())},
                 {"kind", c.kind == StepKind::SameComponent ? "same_component" : "different_components"}};
  if (c.identity) report["identity"] = {{"lhs", c.identity->lhs.to_string()}, {"rhs", c.identity->rhs.to_string()}};
  else report["identity"] = nullptr;
  emit(out, report, o.format);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reaction graphs, node balancing and mass-action dynamics", "crn"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));

  auto network_arg = [&](CLI::App* sub) {
    sub->add_option("network", o.network, "Network file (.crn)")->required();
    sub->fallthrough();
  };
  auto partition_opt = [&](CLI::App* sub) {
    sub->add_option("--partition", o.partition, "Partition JSON (1-based split indices); default: complex graph");
  };

  int (*handler)(const Options&, std::ostream&) = nullptr;
  auto bind = [&](CLI::App* sub, int (*h)(const Options&, std::ostream&)) {
    sub->callback([&handler, h] { handler = h; });
  };

  auto* parse = app.add_subcommand("parse", "Parse a network and print its structure");
  network_arg(parse);
  bind(parse, cmd_parse);

  auto* analyze = app.add_subcommand("analyze", "Rank, deficiencies and weak reversibility of the canonical graphs");
  network_arg(analyze);
  bind(analyze, cmd_analyze);

  auto* graphs = app.add_subcommand("graphs", "Operations on all reaction graphs");
  graphs->require_subcommand(1);
  graphs->fallthrough();
  auto* enumerate = graphs->add_subcommand("enumerate", "List every admissible partition");
  network_arg(enumerate);
  enumerate->add_flag("--weakly-reversible", o.weakly_reversible_only, "List only weakly reversible graphs");
  bind(enumerate, cmd_enumerate);

  auto* graph = app.add_subcommand("graph", "Operations on one reaction graph");
  graph->require_subcommand(1);
  graph->fallthrough();
  auto* info = graph->add_subcommand("info", "Nodes, edges, components and tree constants");
  network_arg(info);
  partition_opt(info);
  bind(info, cmd_graph_info);

  auto* balance = app.add_subcommand("balance", "Node balancing conditions");
  balance->require_subcommand(1);
  balance->fallthrough();
  auto* conditions = balance->add_subcommand("conditions", "Relations on the rate constants");
  network_arg(conditions);
  partition_opt(conditions);
  conditions->add_flag("--expand", o.expand, "Substitute the tree constants");
  bind(conditions, cmd_conditions);
  auto* check = balance->add_subcommand("check", "Test the relations at given rate constants");
  network_arg(check);
  partition_opt(check);
  check->add_option("--kappa", o.kappa, "Comma-separated rate constants");
  bind(check, cmd_check);

  auto* steady = app.add_subcommand("steady-state", "Positive node balanced steady state");
  network_arg(steady);
  partition_opt(steady);
  steady->add_option("--kappa", o.kappa, "Comma-separated rate constants");
  steady->add_option("--class", o.class_anchor, "Point fixing the compatibility class");
  bind(steady, cmd_steady_state);

  auto* sim = app.add_subcommand("simulate", "Integrate the mass-action ODE");
  network_arg(sim);
  sim->add_option("--kappa", o.kappa, "Comma-separated rate constants");
  sim->add_option("--x0", o.x0, "Initial concentrations")->required();
  sim->add_option("--t-end", o.t_end, "End time")->required()->check(CLI::PositiveNumber);
  sim->add_option("--dt", o.dt, "Fixed step (default from the Jacobian at x0)")->check(CLI::PositiveNumber);
  sim->add_flag("--adaptive", o.adaptive, "Use the adaptive Dormand-Prince pair");
  sim->add_option("--tol", o.tol, "Relative tolerance for --adaptive")->check(CLI::PositiveNumber);
  bind(sim, cmd_simulate);

  auto* decompose = app.add_subcommand("decompose", "Split into subnetworks and test joint balance");
  network_arg(decompose);
  partition_opt(decompose);
  decompose->add_option("--subsets", o.subsets, "Reaction subsets, e.g. 1,2,6;3,4")->required();
  decompose->add_option("--kappa", o.kappa, "Rate constants for the verdicts");
  decompose->add_option("--x", o.x, "State for the verdicts");
  bind(decompose, cmd_decompose);

  auto* lift = app.add_subcommand("lift", "Auxiliary network with one species copy per node");
  network_arg(lift);
  partition_opt(lift);
  lift->add_flag("--crn", o.crn_text, "Print the lifted network in .crn form");
  bind(lift, cmd_lift);

  auto* incremental = app.add_subcommand("incremental", "Condition added or kept when two nodes are joined");
  network_arg(incremental);
  partition_opt(incremental);
  incremental->add_option("--join", o.join, "Two node numbers, e.g. 1,5")->required();
  bind(incremental, cmd_incremental);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (o.format == "csv" && handler != cmd_simulate) {
    err << "error: --format csv is only available for simulate\n";
    return kInputError;
  }

  try {
    return handler(o, out);
  } catch (const NotWeaklyReversible& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const NotBalanced& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace crn::cli
