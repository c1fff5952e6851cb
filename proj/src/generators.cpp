#include "netattack/generators.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include "netattack/rng.hpp"

namespace netattack {

std::vector<Edge> generate_ba_edges(const BaParams& params) {
  const std::size_t n = params.n;
  const std::size_t m = params.m;
  if (m < 1 || n <= m) {
    throw std::invalid_argument("BA parameters require n > m >= 1 (got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
  }
  if (n > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
    throw std::invalid_argument("BA node count exceeds id range");
  }

  std::vector<Edge> edges;
  edges.reserve(m * (m - 1) / 2 + (n - m) * m);
  // One baseline entry per node plus one entry per incident edge endpoint:
  // a node is drawn with weight (degree + 1).
  std::vector<NodeId> urn;
  urn.reserve(n + 2 * edges.capacity());

  for (std::size_t a = 0; a < m; ++a) urn.push_back(static_cast<NodeId>(a));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
      urn.push_back(static_cast<NodeId>(a));
      urn.push_back(static_cast<NodeId>(b));
    }
  }

  Rng rng = make_rng(params.seed, Stream::graph);
  std::vector<NodeId> picks;
  picks.reserve(m);
  for (std::size_t i = m; i < n; ++i) {
    const auto fresh = static_cast<NodeId>(i);
    picks.clear();
    while (picks.size() < m) {
      const NodeId t = urn[uniform_below(rng, urn.size())];
      if (std::find(picks.begin(), picks.end(), t) == picks.end()) picks.push_back(t);
    }
    for (NodeId t : picks) {
      edges.emplace_back(t, fresh);
      urn.push_back(t);
      urn.push_back(fresh);
    }
    urn.push_back(fresh);
  }
  return edges;
}

Graph generate_ba(const BaParams& params) {
  const auto edges = generate_ba_edges(params);
  return Graph::build(params.n, edges);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> raw;
  auto intern = [&](const std::string& label) {
    auto [it, fresh] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (fresh) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    std::string u, v, extra;
    if (!(fields >> u >> v)) throw ParseError(line_no, "expected two labels, got '" + std::string(body) + "'");
    if (fields >> extra) throw ParseError(line_no, "unexpected extra field '" + extra + "'");
    const NodeId a = intern(u);
    const NodeId b = intern(v);
    raw.emplace_back(a, b);
  }
  if (in.bad()) throw std::runtime_error("read error after line " + std::to_string(line_no));

  LoadedGraph out;
  out.graph = Graph::build(labels.size(), raw, &out.warnings);
  out.labels = std::move(labels);
  return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, std::size_t node_count, const std::vector<Edge>& edges) {
  out << "# nodes " << node_count << " edges " << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << std::min(u, v) << ' ' << std::max(u, v) << '\n';
}

void write_edge_list(std::ostream& out, const Graph& g) {
  write_edge_list(out, g.node_count(), g.edges());
}

void write_label_table(std::ostream& out, const std::vector<std::string>& labels) {
  out << "label,id\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& l = labels[i];
    if (l.find_first_of(",\"") != std::string::npos) {
      out << '"';
      for (char c : l) {
        if (c == '"') out << '"';
        out << c;
      }
      out << '"';
    } else {
      out << l;
    }
    out << ',' << i << '\n';
  }
}

std::vector<std::pair<int, std::size_t>> degree_histogram(const Graph& g) {
  std::map<int, std::size_t> counts;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const auto v = static_cast<NodeId>(i);
    if (g.alive(v)) ++counts[g.live_degree(v)];
  }
  return {counts.begin(), counts.end()};
}

}  // namespace netattack
