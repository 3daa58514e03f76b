#pragma once

#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

#include "ifam/graph.hpp"

namespace ifam {

// A deduplicated set of graphs on a common vertex count.
class Family {
 public:
  explicit Family(int n);

  int n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  /// Inserts g; returns false when it was already present.
  /// Throws when g lives on a different vertex count.
  bool insert(Graph g);

  bool contains(const Graph& g) const;

  /// Members in insertion order.
  const std::vector<Graph>& members() const { return members_; }

  /// Members in increasing bit-vector order (the canonical file order).
  std::vector<Graph> sorted_members() const;

  friend bool operator==(const Family& a, const Family& b);

 private:
  int n_;
  std::vector<Graph> members_;
  std::unordered_set<Graph, GraphHash> index_;
};

// Family file format: UTF-8, LF line endings.  Line 1 is `n=<k>`; every
// following line is a full graph encoding for that n.  Lines starting with
// '#' and blank lines are ignored.  Duplicate encodings are rejected.
Family read_family(std::istream& in);
Family read_family_file(const std::string& path);
void write_family(std::ostream& out, const Family& f);
void write_family_file(const std::string& path, const Family& f);

}  // namespace ifam
