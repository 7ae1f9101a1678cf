#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "posetlab/generators.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/reversibility.hpp"

namespace posetlab {

// Poset text format, 0-based ids:
//   p poset <n> <#covers>
//   c <lo> <hi>        one per cover, duplicates rejected
//   l <id> <label>     optional
//   # comment
Poset parse_poset(std::istream& in);
Poset parse_poset_string(const std::string& text);
std::string emit_poset(const Poset& p);

// Graph text format, 0-based ids:
//   p graph <n> <m>
//   e <u> <v>
CoverGraph parse_graph(std::istream& in);
CoverGraph parse_graph_string(const std::string& text);
std::string emit_graph(const CoverGraph& g);

// PACE-style tree decomposition, 1-based vertex and bag ids in the file:
//   s td <#bags> <width+1> <n>
//   b <bag-id> <v...>
//   <x> <y>            tree edges
TreeDecomposition parse_td(std::istream& in);
TreeDecomposition parse_td_string(const std::string& text);
std::string emit_td(const TreeDecomposition& td, int n_vertices);

// First keyword of the first payload line: "poset", "graph" or "td".
std::string sniff_format(const std::string& text);

// Directed diagram drawing, low to high, ranked by level.
std::string emit_dot(const Poset& p);

// Certificate: "d <dim>", one "x <class> <x> <y>" per pair (classes are
// 1-based), then one "L <v...>" extension per class.
struct DimCertificate {
  int dim = 1;
  ReversiblePartition partition;
  Realizer realizer;
};
std::string emit_certificate(const DimCertificate& cert);
DimCertificate parse_certificate(std::istream& in);
DimCertificate parse_certificate_string(const std::string& text);

// True iff the certificate's classes partition Inc(p), every class is
// reversed by its extension, and the realizer verifies.
bool verify_certificate(const Poset& p, const DimCertificate& cert);

}  // namespace posetlab
