#include "thin/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "thin/error.hpp"
#include "thin/rational.hpp"

namespace thin {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string &what) {
  throw Error("io.parse", "line " + std::to_string(line) + ": " + what);
}

Vertex one_based(long long v, std::size_t n, std::size_t line) {
  if (v < 1 || static_cast<std::size_t>(v) > n)
    parse_error(line, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return static_cast<Vertex>(v - 1);
}

} // namespace

Rational parse_rational(const std::string &text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos)
      return Rational(BigInt(text));
    BigInt p(text.substr(0, slash)), q(text.substr(slash + 1));
    if (q == 0)
      throw Error("io.parse", "zero denominator in '" + text + "'");
    return Rational(p, q);
  } catch (const std::runtime_error &e) {
    if (dynamic_cast<const Error *>(&e))
      throw;
    throw Error("io.parse", "not a rational: '" + text + "'");
  }
}

Graph read_gr(std::istream &in) {
  std::string line;
  std::size_t lineno = 0, n = 0, m = 0;
  bool header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c')
      continue;
    std::istringstream ls(line);
    if (!header) {
      std::string p, tw;
      if (!(ls >> p >> tw >> n >> m) || p != "p")
        parse_error(lineno, "expected header 'p tw <n> <m>'");
      header = true;
      continue;
    }
    long long u, v;
    if (!(ls >> u >> v))
      parse_error(lineno, "expected an edge '<u> <v>'");
    edges.emplace_back(one_based(u, n, lineno), one_based(v, n, lineno));
  }
  if (!header)
    parse_error(lineno, "missing header");
  if (edges.size() != m)
    parse_error(lineno, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(n, edges);
}

void write_gr(std::ostream &out, const Graph &g) {
  out << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges())
    out << u + 1 << ' ' << v + 1 << '\n';
}

TreeDecomposition read_td(std::istream &in) {
  std::string line;
  std::size_t lineno = 0, num_bags = 0, n = 0, declared = 0;
  bool header = false;
  int root = 0;
  std::optional<int> depth_bound;
  TreeDecomposition td;
  std::vector<std::vector<int>> adj;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") {
      std::string key;
      long long value;
      if (ls >> key >> value) {
        if (key == "root")
          root = static_cast<int>(value - 1);
        else if (key == "depth_bound")
          depth_bound = static_cast<int>(value);
      }
      continue;
    }
    if (!header) {
      std::string td_tag;
      if (tag != "s" || !(ls >> td_tag >> num_bags >> declared >> n) || td_tag != "td")
        parse_error(lineno, "expected header 's td <bags> <width+1> <n>'");
      header = true;
      td.bags.resize(num_bags);
      adj.resize(num_bags);
      continue;
    }
    if (tag == "b") {
      long long id, v;
      if (!(ls >> id) || id < 1 || static_cast<std::size_t>(id) > num_bags)
        parse_error(lineno, "bad bag id");
      auto &bag = td.bags[static_cast<std::size_t>(id - 1)];
      while (ls >> v)
        bag.push_back(one_based(v, n, lineno));
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      if (bag.size() > declared)
        parse_error(lineno, "bag larger than the declared width + 1");
      continue;
    }
    long long a = std::stoll(tag), b;
    if (!(ls >> b))
      parse_error(lineno, "expected a tree edge '<i> <j>'");
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > num_bags || static_cast<std::size_t>(b) > num_bags)
      parse_error(lineno, "tree edge references a missing bag");
    adj[static_cast<std::size_t>(a - 1)].push_back(static_cast<int>(b - 1));
    adj[static_cast<std::size_t>(b - 1)].push_back(static_cast<int>(a - 1));
  }
  if (!header)
    parse_error(lineno, "missing header");
  td.parent.assign(num_bags, -1);
  if (num_bags == 0)
    return td;
  if (root < 0 || static_cast<std::size_t>(root) >= num_bags)
    parse_error(lineno, "root bag out of range");
  std::vector<char> seen(num_bags, 0);
  std::vector<int> stack{root};
  seen[static_cast<std::size_t>(root)] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        td.parent[static_cast<std::size_t>(w)] = u;
        stack.push_back(w);
      }
  }
  if (std::count(seen.begin(), seen.end(), 0) > 0)
    parse_error(lineno, "decomposition tree is not connected");
  td.vertex_depth_bound = depth_bound;
  return td;
}

void write_td(std::ostream &out, const TreeDecomposition &td, std::size_t n) {
  out << "s td " << td.num_bags() << ' ' << td.width() + 1 << ' ' << n << '\n';
  if (int r = td.root(); r >= 0)
    out << "c root " << r + 1 << '\n';
  if (td.vertex_depth_bound)
    out << "c depth_bound " << *td.vertex_depth_bound << '\n';
  for (std::size_t u = 0; u < td.num_bags(); ++u) {
    out << "b " << u + 1;
    for (Vertex v : td.bags[u])
      out << ' ' << v + 1;
    out << '\n';
  }
  for (std::size_t u = 0; u < td.num_bags(); ++u)
    if (td.parent[u] >= 0)
      out << td.parent[u] + 1 << ' ' << u + 1 << '\n';
}

Layering read_layering(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  Layering l;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c')
      continue;
    std::istringstream ls(line);
    long long layer, v;
    if (!(ls >> layer >> v) || layer < 1 || v < 1)
      parse_error(lineno, "expected '<layer> <vertex>' with 1-based values");
    if (l.layers.size() < static_cast<std::size_t>(layer))
      l.layers.resize(static_cast<std::size_t>(layer));
    l.layers[static_cast<std::size_t>(layer - 1)].push_back(static_cast<Vertex>(v - 1));
  }
  for (auto &layer : l.layers)
    std::sort(layer.begin(), layer.end());
  return l;
}

void write_layering(std::ostream &out, const Layering &l) {
  for (std::size_t i = 0; i < l.layers.size(); ++i)
    for (Vertex v : l.layers[i])
      out << i + 1 << ' ' << v + 1 << '\n';
}

Graph read_gr_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("io.open", "cannot open " + path);
  return read_gr(in);
}

void write_gr_file(const std::string &path, const Graph &g) {
  std::ofstream out(path);
  if (!out)
    throw Error("io.open", "cannot write " + path);
  write_gr(out, g);
}

} // namespace thin
