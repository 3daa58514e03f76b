#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ifam {

// Raised when a caller violates an operation's precondition.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a request exceeds a configured desk-scale limit.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxVertices = 256;
// Full graph-space enumeration is capped at 2^28 graphs (n <= 8).
inline constexpr int kEnumerationBitLimit = 28;

/// Number of vertex pairs n(n-1)/2 on n labeled vertices.
int edge_slots(int n);

/// Rank of the pair (u,v), 1 <= u < v <= n, in lexicographic order.
/// Bit 0 is the edge (1,2).
int edge_index(int u, int v, int n);

/// Inverse of edge_index: the (u,v) pair at a given bit position.
std::pair<int, int> edge_endpoints(int index, int n);

// Subset of the vertex set {1..n}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n);
  static VertexSet of(int n, std::initializer_list<int> members);

  int n() const { return n_; }
  bool contains(int v) const;
  void add(int v);
  void remove(int v);
  int size() const;
  bool empty() const { return size() == 0; }
  bool full() const { return size() == n_; }

  VertexSet complement() const;
  std::vector<int> members() const;
  std::string to_string() const;  // e.g. "{2,4}"

  friend VertexSet operator^(const VertexSet& a, const VertexSet& b);
  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Labeled graph on {1..n}, stored as an edge-indexed bit vector over GF(2).
// Immutable in spirit: operations return new values.
class Graph {
 public:
  Graph() : Graph(1) {}
  explicit Graph(int n);  // empty graph

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // Interprets `bits` as the low edge bits; requires edge_slots(n) <= 64.
  static Graph from_bits(int n, std::uint64_t bits);

  int n() const { return n_; }
  int bit_length() const { return bits_; }  // n(n-1)/2
  int edge_count() const;

  bool test(int index) const;
  bool has_edge(int u, int v) const;
  Graph& set_edge(int u, int v, bool present = true);
  Graph& set_bit(int index, bool value = true);

  bool is_empty() const;
  std::uint64_t low_bits() const;  // requires bit_length() <= 64
  const std::vector<std::uint64_t>& words() const { return words_; }

  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;
  void for_each_edge(const std::function<void(int, int)>& fn) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;
  friend bool operator<(const Graph& a, const Graph& b);  // bit-vector value order

  std::string to_string() const { return encode(*this); }

  friend Graph operator^(const Graph& g, const Graph& h);  // symmetric difference
  friend Graph operator&(const Graph& g, const Graph& h);  // intersection
  friend std::string encode(const Graph& g);

 private:
  void check_same_space(const Graph& other) const;
  int n_ = 1;
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const;
};

/// Symmetric difference of edge sets; the group operation of the edge space.
Graph xor_graphs(const Graph& g, const Graph& h);

/// Bitwise AND of edge sets.
Graph intersect(const Graph& g, const Graph& h);

/// Flips every edge bit.
Graph complement(const Graph& g);

/// Complete bipartite graph B(S): edge (u,v) present iff exactly one of u,v
/// lies in S.  B(empty) = B(full) = empty graph.
Graph bipartite_complete(int n, const VertexSet& s);

/// True iff every edge of h is an edge of g (labeled containment).
bool is_subgraph(const Graph& h, const Graph& g);

/// `n=<k>;<hex>` with bit 0 the least significant bit of the last hex digit,
/// zero-padded to ceil(n(n-1)/2 / 4) digits.
std::string encode(const Graph& g);
Graph decode(std::string_view text);

/// 2^{n(n-1)/2}; capacity error when it does not fit in 64 bits.
std::uint64_t graph_space_size(int n);

/// Visits all graphs on n vertices once, in increasing bit-vector order.
/// Capacity error when edge_slots(n) exceeds kEnumerationBitLimit.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

/// Same enumeration at the bit-code level (bit i of the code = edge bit i).
void for_each_graph_code(int n, const std::function<void(std::uint64_t)>& fn);

}  // namespace ifam
