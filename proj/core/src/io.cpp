#include "posetlab/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "posetlab/errors.hpp"

namespace posetlab {

namespace {

struct Line {
  int no = 0;
  std::string text;
};

// Payload lines with comments and blanks stripped.
std::vector<Line> payload_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    size_t i = raw.find_first_not_of(" \t");
    if (i == std::string::npos || raw[i] == '#') continue;
    out.push_back({no, raw});
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

long parse_int(const std::string& tok, int line) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line, "expected integer, got '" + tok + "'");
  return v;
}

}  // namespace

Poset parse_poset(std::istream& in) {
  auto lines = payload_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'p poset' header");
  auto head = tokens_of(lines[0].text);
  if (head.size() != 4 || head[0] != "p" || head[1] != "poset")
    throw ParseError(lines[0].no, "expected 'p poset <n> <#covers>'");
  const long n = parse_int(head[2], lines[0].no);
  const long m = parse_int(head[3], lines[0].no);
  if (n < 0 || m < 0) throw ParseError(lines[0].no, "negative count");

  std::vector<std::pair<int, int>> covers;
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, std::string>> labels;
  std::set<int> labeled;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens_of(lines[i].text);
    if (toks[0] == "c") {
      if (toks.size() != 3)
        throw ParseError(lines[i].no, "expected 'c <lo> <hi>'");
      const long lo = parse_int(toks[1], lines[i].no);
      const long hi = parse_int(toks[2], lines[i].no);
      if (lo < 0 || lo >= n || hi < 0 || hi >= n)
        throw ParseError(lines[i].no, "element id outside [0, n)");
      if (lo == hi) throw ParseError(lines[i].no, "cover is a self-loop");
      if (!seen.insert({static_cast<int>(lo), static_cast<int>(hi)}).second)
        throw ParseError(lines[i].no, "duplicate cover");
      covers.emplace_back(static_cast<int>(lo), static_cast<int>(hi));
    } else if (toks[0] == "l") {
      if (toks.size() != 3)
        throw ParseError(lines[i].no, "expected 'l <id> <label>'");
      const long id = parse_int(toks[1], lines[i].no);
      if (id < 0 || id >= n)
        throw ParseError(lines[i].no, "element id outside [0, n)");
      if (!labeled.insert(static_cast<int>(id)).second)
        throw ParseError(lines[i].no, "duplicate label for element");
      labels.emplace_back(static_cast<int>(id), toks[2]);
    } else {
      throw ParseError(lines[i].no, "unexpected line '" + toks[0] + " ...'");
    }
  }
  if (static_cast<long>(covers.size()) != m)
    throw ParseError(lines.back().no,
                     "header declares " + std::to_string(m) + " covers, found " +
                         std::to_string(covers.size()));
  Poset p = Poset::from_cover_relations(static_cast<int>(n), covers);
  for (auto& [id, lab] : labels) p.set_label(id, lab);
  return p;
}

Poset parse_poset_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_poset(ss);
}

std::string emit_poset(const Poset& p) {
  std::ostringstream out;
  out << "p poset " << p.size() << ' ' << p.cover_relations().size() << '\n';
  for (const auto& [lo, hi] : p.cover_relations())
    out << "c " << lo << ' ' << hi << '\n';
  for (int i = 0; i < p.size(); ++i)
    if (!p.label(i).empty()) out << "l " << i << ' ' << p.label(i) << '\n';
  return out.str();
}

CoverGraph parse_graph(std::istream& in) {
  auto lines = payload_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'p graph' header");
  auto head = tokens_of(lines[0].text);
  if (head.size() != 4 || head[0] != "p" || head[1] != "graph")
    throw ParseError(lines[0].no, "expected 'p graph <n> <m>'");
  const long n = parse_int(head[2], lines[0].no);
  const long m = parse_int(head[3], lines[0].no);
  if (n < 0 || m < 0) throw ParseError(lines[0].no, "negative count");

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens_of(lines[i].text);
    if (toks[0] != "e" || toks.size() != 3)
      throw ParseError(lines[i].no, "expected 'e <u> <v>'");
    long u = parse_int(toks[1], lines[i].no);
    long v = parse_int(toks[2], lines[i].no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lines[i].no, "vertex id outside [0, n)");
    if (u == v) throw ParseError(lines[i].no, "self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({static_cast<int>(u), static_cast<int>(v)}).second)
      throw ParseError(lines[i].no, "duplicate edge");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(lines.back().no,
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  return CoverGraph::from_edges(static_cast<int>(n), std::move(edges));
}

CoverGraph parse_graph_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_graph(ss);
}

std::string emit_graph(const CoverGraph& g) {
  std::ostringstream out;
  out << "p graph " << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& [u, v] : g.edges) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

TreeDecomposition parse_td(std::istream& in) {
  auto lines = payload_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 's td' header");
  auto head = tokens_of(lines[0].text);
  if (head.size() != 5 || head[0] != "s" || head[1] != "td")
    throw ParseError(lines[0].no, "expected 's td <#bags> <width+1> <n>'");
  const long nb = parse_int(head[2], lines[0].no);
  const long w1 = parse_int(head[3], lines[0].no);
  const long n = parse_int(head[4], lines[0].no);
  if (nb < 0 || w1 < 0 || n < 0) throw ParseError(lines[0].no, "negative count");

  TreeDecomposition td;
  td.bags.assign(nb, {});
  std::vector<char> have(nb, 0);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens_of(lines[i].text);
    if (toks[0] == "b") {
      if (toks.size() < 2) throw ParseError(lines[i].no, "expected 'b <id> <v...>'");
      const long id = parse_int(toks[1], lines[i].no);
      if (id < 1 || id > nb) throw ParseError(lines[i].no, "bag id outside [1, #bags]");
      if (have[id - 1]) throw ParseError(lines[i].no, "duplicate bag");
      have[id - 1] = 1;
      std::vector<int> bag;
      for (size_t k = 2; k < toks.size(); ++k) {
        const long v = parse_int(toks[k], lines[i].no);
        if (v < 1 || v > n) throw ParseError(lines[i].no, "vertex id outside [1, n]");
        bag.push_back(static_cast<int>(v - 1));
      }
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      td.bags[id - 1] = std::move(bag);
    } else {
      if (toks.size() != 2) throw ParseError(lines[i].no, "expected '<x> <y>' tree edge");
      const long x = parse_int(toks[0], lines[i].no);
      const long y = parse_int(toks[1], lines[i].no);
      if (x < 1 || x > nb || y < 1 || y > nb || x == y)
        throw ParseError(lines[i].no, "bad tree edge");
      td.edges.emplace_back(static_cast<int>(x - 1), static_cast<int>(y - 1));
    }
  }
  for (long i = 0; i < nb; ++i)
    if (!have[i])
      throw ParseError(lines.back().no, "bag " + std::to_string(i + 1) + " missing");
  if (td.width() + 1 != w1)
    throw ParseError(lines[0].no, "declared width+1 = " + std::to_string(w1) +
                                      " but bags give " +
                                      std::to_string(td.width() + 1));
  return td;
}

TreeDecomposition parse_td_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_td(ss);
}

std::string emit_td(const TreeDecomposition& td, int n_vertices) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n_vertices
      << '\n';
  for (size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [x, y] : td.edges) out << x + 1 << ' ' << y + 1 << '\n';
  return out.str();
}

std::string sniff_format(const std::string& text) {
  std::istringstream ss(text);
  auto lines = payload_lines(ss);
  if (lines.empty()) throw ParseError(1, "empty input");
  auto toks = tokens_of(lines[0].text);
  if (toks.size() >= 2 && toks[0] == "p" &&
      (toks[1] == "poset" || toks[1] == "graph"))
    return toks[1];
  if (toks.size() >= 2 && toks[0] == "s" && toks[1] == "td") return "td";
  throw ParseError(lines[0].no, "unrecognized header");
}

std::string emit_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int v = 0; v < p.size(); ++v) {
    out << "  n" << v;
    if (!p.label(v).empty()) out << " [label=\"" << p.label(v) << "\"]";
    out << ";\n";
  }
  for (int lv = 0; lv < p.height(); ++lv) {
    out << "  { rank=same;";
    for (int v = 0; v < p.size(); ++v)
      if (p.level(v) == lv) out << " n" << v << ';';
    out << " }\n";
  }
  for (const auto& [lo, hi] : p.cover_relations())
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_certificate(const DimCertificate& cert) {
  std::ostringstream out;
  out << "d " << cert.dim << '\n';
  for (size_t c = 0; c < cert.partition.classes.size(); ++c)
    for (const auto& [x, y] : cert.partition.classes[c])
      out << "x " << c + 1 << ' ' << x << ' ' << y << '\n';
  for (const auto& ext : cert.realizer.extensions) {
    out << 'L';
    for (int v : ext.order) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

DimCertificate parse_certificate(std::istream& in) {
  auto lines = payload_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'd' header");
  auto head = tokens_of(lines[0].text);
  if (head.size() != 2 || head[0] != "d")
    throw ParseError(lines[0].no, "expected 'd <dim>'");
  const long d = parse_int(head[1], lines[0].no);
  if (d < 1) throw ParseError(lines[0].no, "dimension must be positive");

  DimCertificate cert;
  cert.dim = static_cast<int>(d);
  cert.partition.classes.assign(d, {});
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens_of(lines[i].text);
    if (toks[0] == "x") {
      if (toks.size() != 4)
        throw ParseError(lines[i].no, "expected 'x <class> <x> <y>'");
      const long c = parse_int(toks[1], lines[i].no);
      if (c < 1 || c > d) throw ParseError(lines[i].no, "class index outside [1, d]");
      cert.partition.classes[c - 1].push_back(
          {static_cast<int>(parse_int(toks[2], lines[i].no)),
           static_cast<int>(parse_int(toks[3], lines[i].no))});
    } else if (toks[0] == "L") {
      std::vector<int> order;
      for (size_t k = 1; k < toks.size(); ++k)
        order.push_back(static_cast<int>(parse_int(toks[k], lines[i].no)));
      cert.realizer.extensions.push_back(LinearExtension::from_order(order));
    } else {
      throw ParseError(lines[i].no, "unexpected line '" + toks[0] + " ...'");
    }
  }
  return cert;
}

DimCertificate parse_certificate_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_certificate(ss);
}

bool verify_certificate(const Poset& p, const DimCertificate& cert) {
  if (cert.dim != cert.partition.size()) return false;
  if (cert.realizer.size() != cert.dim) return false;
  if (!is_partition_of_incomparables(p, cert.partition)) return false;
  for (int c = 0; c < cert.dim; ++c) {
    const auto& ext = cert.realizer.extensions[c];
    if (!p.is_linear_extension(ext)) return false;
    for (const auto& [x, y] : cert.partition.classes[c])
      if (!ext.before(y, x)) return false;
  }
  return verify_realizer(p, cert.realizer);
}

}  // namespace posetlab
