#include "ifam/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ifam {

namespace {

int checked_n(int n) {
  if (n < 1) throw ArgumentError("vertex count must be at least 1");
  if (n > kMaxVertices)
    throw CapacityError("vertex count " + std::to_string(n) + " exceeds limit " +
                        std::to_string(kMaxVertices));
  return n;
}

std::size_t word_count(int bits) { return static_cast<std::size_t>((bits + 63) / 64); }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

int edge_slots(int n) {
  checked_n(n);
  return n * (n - 1) / 2;
}

int edge_index(int u, int v, int n) {
  checked_n(n);
  if (u < 1 || v < 1 || u > n || v > n)
    throw ArgumentError("vertex out of range in edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ") on n=" + std::to_string(n));
  if (u >= v)
    throw ArgumentError("edge endpoints must satisfy u < v, got (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
  return (u - 1) * n - u * (u - 1) / 2 + (v - u - 1);
}

std::pair<int, int> edge_endpoints(int index, int n) {
  int slots = edge_slots(n);
  if (index < 0 || index >= slots) throw ArgumentError("edge index out of range");
  int u = 1;
  while (index >= n - u) {
    index -= n - u;
    ++u;
  }
  return {u, u + 1 + index};
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int n) : n_(checked_n(n)), words_(word_count(n)) {}

VertexSet VertexSet::of(int n, std::initializer_list<int> members) {
  VertexSet s(n);
  for (int v : members) s.add(v);
  return s;
}

void VertexSet::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for n=" +
                        std::to_string(n_));
}

bool VertexSet::contains(int v) const {
  check_vertex(v);
  return (words_[(v - 1) / 64] >> ((v - 1) % 64)) & 1;
}

void VertexSet::add(int v) {
  check_vertex(v);
  words_[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
}

void VertexSet::remove(int v) {
  check_vertex(v);
  words_[(v - 1) / 64] &= ~(std::uint64_t{1} << ((v - 1) % 64));
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

VertexSet VertexSet::complement() const {
  VertexSet out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  int tail = n_ % 64;
  if (tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

VertexSet operator^(const VertexSet& a, const VertexSet& b) {
  if (a.n_ != b.n_) throw ArgumentError("vertex sets live on different vertex counts");
  VertexSet out(a.n_);
  for (std::size_t i = 0; i < a.words_.size(); ++i) out.words_[i] = a.words_[i] ^ b.words_[i];
  return out;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(checked_n(n)), bits_(n * (n - 1) / 2), words_(word_count(bits_)) {}

Graph Graph::complete(int n) {
  Graph g(n);
  for (std::size_t i = 0; i < g.words_.size(); ++i) g.words_[i] = ~std::uint64_t{0};
  int tail = g.bits_ % 64;
  if (!g.words_.empty() && tail != 0) g.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::vector<std::pair<int, int>>(edges));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    g.set_edge(u, v);
  }
  return g;
}

Graph Graph::from_bits(int n, std::uint64_t bits) {
  Graph g(n);
  if (g.bits_ > 64) throw ArgumentError("from_bits requires at most 64 edge bits");
  if (g.bits_ < 64 && (bits >> g.bits_) != 0)
    throw ArgumentError("bit pattern has bits beyond the edge space");
  if (!g.words_.empty()) g.words_[0] = bits;
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool Graph::test(int index) const {
  if (index < 0 || index >= bits_) throw ArgumentError("edge bit index out of range");
  return (words_[index / 64] >> (index % 64)) & 1;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return test(edge_index(u, v, n_));
}

Graph& Graph::set_bit(int index, bool value) {
  if (index < 0 || index >= bits_) throw ArgumentError("edge bit index out of range");
  std::uint64_t mask = std::uint64_t{1} << (index % 64);
  if (value)
    words_[index / 64] |= mask;
  else
    words_[index / 64] &= ~mask;
  return *this;
}

Graph& Graph::set_edge(int u, int v, bool present) {
  if (u > v) std::swap(u, v);
  return set_bit(edge_index(u, v, n_), present);
}

bool Graph::is_empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::uint64_t Graph::low_bits() const {
  if (bits_ > 64) throw ArgumentError("low_bits requires at most 64 edge bits");
  return words_.empty() ? 0 : words_[0];
}

int Graph::degree(int v) const {
  if (v < 1 || v > n_) throw ArgumentError("vertex out of range");
  int d = 0;
  for (int u = 1; u <= n_; ++u)
    if (u != v && has_edge(std::min(u, v), std::max(u, v))) ++d;
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
  return out;
}

void Graph::for_each_edge(const std::function<void(int, int)>& fn) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      int b = std::countr_zero(bits);
      auto [u, v] = edge_endpoints(static_cast<int>(w) * 64 + b, n_);
      fn(u, v);
      bits &= bits - 1;
    }
  }
}

void Graph::check_same_space(const Graph& other) const {
  if (n_ != other.n_)
    throw ArgumentError("graphs live on different vertex counts (" + std::to_string(n_) +
                        " vs " + std::to_string(other.n_) + ")");
}

bool operator<(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

Graph operator^(const Graph& g, const Graph& h) {
  g.check_same_space(h);
  Graph out(g.n_);
  for (std::size_t i = 0; i < g.words_.size(); ++i) out.words_[i] = g.words_[i] ^ h.words_[i];
  return out;
}

Graph operator&(const Graph& g, const Graph& h) {
  g.check_same_space(h);
  Graph out(g.n_);
  for (std::size_t i = 0; i < g.words_.size(); ++i) out.words_[i] = g.words_[i] & h.words_[i];
  return out;
}

Graph xor_graphs(const Graph& g, const Graph& h) { return g ^ h; }

Graph intersect(const Graph& g, const Graph& h) { return g & h; }

Graph complement(const Graph& g) { return g ^ Graph::complete(g.n()); }

Graph bipartite_complete(int n, const VertexSet& s) {
  if (s.n() != n) throw ArgumentError("vertex set does not match vertex count");
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (s.contains(u) != s.contains(v)) g.set_edge(u, v);
  return g;
}

bool is_subgraph(const Graph& h, const Graph& g) {
  if (h.n() != g.n())
    throw ArgumentError("subgraph test requires a common vertex count");
  return (h & g) == h;
}

std::size_t GraphHash::operator()(const Graph& g) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(g.n());
  for (auto w : g.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h);
}

std::string encode(const Graph& g) {
  static const char* digits = "0123456789abcdef";
  int nibbles = (g.bits_ + 3) / 4;
  std::string hex(nibbles, '0');
  for (int j = 0; j < nibbles; ++j) {
    int value = 0;
    for (int b = 0; b < 4; ++b) {
      int bit = 4 * j + b;
      if (bit < g.bits_ && g.test(bit)) value |= 1 << b;
    }
    hex[nibbles - 1 - j] = digits[value];
  }
  return "n=" + std::to_string(g.n_) + ";" + hex;
}

Graph decode(std::string_view text) {
  if (text.substr(0, 2) != "n=") throw ArgumentError("graph encoding must start with 'n='");
  std::size_t sep = text.find(';');
  if (sep == std::string_view::npos)
    throw ArgumentError("graph encoding is missing the ';' separator");
  int n = 0;
  {
    std::string head(text.substr(2, sep - 2));
    std::size_t pos = 0;
    try {
      n = std::stoi(head, &pos);
    } catch (const std::exception&) {
      throw ArgumentError("invalid vertex count in graph encoding");
    }
    if (pos != head.size() || n < 1) throw ArgumentError("invalid vertex count in graph encoding");
  }
  Graph g(n);
  std::string_view hex = text.substr(sep + 1);
  int nibbles = (g.bit_length() + 3) / 4;
  if (static_cast<int>(hex.size()) != nibbles)
    throw ArgumentError("graph encoding has " + std::to_string(hex.size()) +
                        " hex digits, expected " + std::to_string(nibbles));
  for (int j = 0; j < nibbles; ++j) {
    int value = hex_value(hex[nibbles - 1 - j]);
    if (value < 0) throw ArgumentError("invalid hex digit in graph encoding");
    for (int b = 0; b < 4; ++b) {
      int bit = 4 * j + b;
      if ((value >> b) & 1) {
        if (bit >= g.bit_length())
          throw ArgumentError("graph encoding sets bits beyond the edge space");
        g.set_bit(bit);
      }
    }
  }
  return g;
}

std::uint64_t graph_space_size(int n) {
  int slots = edge_slots(n);
  if (slots > 63)
    throw CapacityError("graph space of n=" + std::to_string(n) + " exceeds 64-bit counting");
  return std::uint64_t{1} << slots;
}

void for_each_graph_code(int n, const std::function<void(std::uint64_t)>& fn) {
  int slots = edge_slots(n);
  if (slots > kEnumerationBitLimit)
    throw CapacityError("exhaustive enumeration capped at " +
                        std::to_string(kEnumerationBitLimit) + " edge bits; n=" +
                        std::to_string(n) + " needs " + std::to_string(slots));
  std::uint64_t total = std::uint64_t{1} << slots;
  for (std::uint64_t code = 0; code < total; ++code) fn(code);
}

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
  for_each_graph_code(n, [&](std::uint64_t code) { fn(Graph::from_bits(n, code)); });
}

}  // namespace ifam
