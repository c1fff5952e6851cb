#ifndef NETATTACK_GENERATORS_HPP
#define NETATTACK_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netattack/graph.hpp"

namespace netattack {

/// Barabasi-Albert growth parameters: `m` edges per arriving node.
struct BaParams {
  std::size_t n = 0;
  std::size_t m = 1;
  std::uint64_t seed = 0;
};

/// Preferential-attachment graph. Growth starts from an m-node clique, and
/// every later node links to m distinct earlier nodes drawn from an urn holding
/// one baseline entry per node plus one entry per edge endpoint, i.e. with
/// weight (degree + 1). The baseline keeps the degree-0 seed of m = 1
/// reachable. Exactly C(m,2) + (n-m)*m edges. Deterministic in `seed`.
Graph generate_ba(const BaParams& params);

/// Edges of generate_ba in creation order, each as (smaller, larger). Writing
/// these lines and loading them back reproduces the same dense ids.
std::vector<Edge> generate_ba_edges(const BaParams& params);

/// Raised for unparseable edge-list input; `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;  // labels[id] is the original label
  BuildWarnings warnings;
};

/// Reads whitespace-separated "u v" lines. Blank lines and lines starting
/// with '#' are skipped. Labels are assigned dense ids in first-seen order.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

/// Writes "u v" lines (u < v) preceded by a '#' header with the counts.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, std::size_t node_count, const std::vector<Edge>& edges);

/// "label,id" CSV.
void write_label_table(std::ostream& out, const std::vector<std::string>& labels);

/// (live degree, count) pairs over live nodes, ascending by degree.
std::vector<std::pair<int, std::size_t>> degree_histogram(const Graph& g);

}  // namespace netattack

#endif  // NETATTACK_GENERATORS_HPP
