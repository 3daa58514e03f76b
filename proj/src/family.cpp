#include "ifam/family.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ifam {

Family::Family(int n) : n_(n) {
  if (n < 1) throw ArgumentError("vertex count must be at least 1");
  if (n > kMaxVertices) throw CapacityError("vertex count exceeds limit");
}

bool Family::insert(Graph g) {
  if (g.n() != n_)
    throw ArgumentError("graph on n=" + std::to_string(g.n()) +
                        " inserted into family on n=" + std::to_string(n_));
  if (index_.contains(g)) return false;
  index_.insert(g);
  members_.push_back(std::move(g));
  return true;
}

bool Family::contains(const Graph& g) const { return g.n() == n_ && index_.contains(g); }

std::vector<Graph> Family::sorted_members() const {
  std::vector<Graph> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Family& a, const Family& b) {
  return a.n_ == b.n_ && a.index_ == b.index_;
}

Family read_family(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ArgumentError("family file, line " + std::to_string(line_no) + ": " + what);
  };

  int n = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (line.substr(0, 2) != "n=" || line.find(';') != std::string::npos)
      fail("expected header of the form n=<k>");
    try {
      std::size_t pos = 0;
      n = std::stoi(line.substr(2), &pos);
      if (pos != line.size() - 2 || n < 1) fail("invalid vertex count in header");
    } catch (const ArgumentError&) {
      throw;
    } catch (const std::exception&) {
      fail("invalid vertex count in header");
    }
    break;
  }
  if (n < 0) throw ArgumentError("family file is missing the n=<k> header");

  Family family(n);
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    Graph g(1);
    try {
      g = decode(line);
    } catch (const ArgumentError& e) {
      fail(e.what());
    }
    if (g.n() != n) fail("graph encoding for n=" + std::to_string(g.n()) +
                         " in a family declared on n=" + std::to_string(n));
    if (!family.insert(std::move(g))) fail("duplicate graph encoding");
  }
  return family;
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open family file: " + path);
  return read_family(in);
}

void write_family(std::ostream& out, const Family& f) {
  out << "n=" << f.n() << "\n";
  for (const Graph& g : f.sorted_members()) out << encode(g) << "\n";
}

void write_family_file(const std::string& path, const Family& f) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open output file: " + path);
  write_family(out, f);
}

}  // namespace ifam
