#include "doctest.h"
#include "posetlab/errors.hpp"
#include "posetlab/generators.hpp"
#include "posetlab/io.hpp"
#include "posetlab/reversibility.hpp"
#include "posetlab/sampler.hpp"

using namespace posetlab;

TEST_CASE("poset text round trip") {
  Rng rng(201);
  for (int trial = 0; trial < 20; ++trial) {
    Poset p = sample_random_poset(rng, 1 + static_cast<int>(rand_below(rng, 12)),
                                  3, 0.3);
    Poset q = parse_poset_string(emit_poset(p));
    CHECK(q.size() == p.size());
    CHECK(q.cover_relations() == p.cover_relations());
  }
}

TEST_CASE("poset labels round trip") {
  StandardInstance s = gen_standard_example(3);
  Poset q = parse_poset_string(emit_poset(s.poset));
  REQUIRE(q.has_labels());
  CHECK(q.label(0) == "a1");
  CHECK(q.label(5) == "b3");
}

TEST_CASE("poset parser rejects malformed input with line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_poset_string(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("q poset 2 0\n") == 1);
  CHECK(line_of("p poset 2 1\n") == 1);          // missing cover line
  CHECK(line_of("p poset 2 0\nc 0 1\n") == 2);   // extra cover line
  CHECK(line_of("p poset 2 1\nc 0 5\n") == 2);   // bad id
  CHECK(line_of("p poset 2 2\nc 0 1\nc 0 1\n") == 3);  // duplicate
  CHECK(line_of("p poset 2 1\nc 0 1 9\n") == 2);  // trailing token
  // A missing header is reported at line 1 no matter how many
  // comment lines precede it.
  CHECK(line_of("# only\n# comments\n") == 1);
  CHECK(line_of("p poset 2 0\nl 7 foo\n") == 2);
  CHECK(line_of("p poset x 0\n") == 1);
  // Comments and blank lines are fine.
  CHECK_NOTHROW(parse_poset_string("# top\n\np poset 2 1\n c 0 1 \n"));
  // A cover cycle surfaces as CycleError, not ParseError.
  CHECK_THROWS_AS(parse_poset_string("p poset 2 2\nc 0 1\nc 1 0\n"), CycleError);
}

TEST_CASE("graph text round trip and errors") {
  Rng rng(202);
  for (int trial = 0; trial < 10; ++trial) {
    CoverGraph g =
        sample_connected_graph(rng, 2 + static_cast<int>(rand_below(rng, 10)), 0.4);
    CoverGraph h = parse_graph_string(emit_graph(g));
    CHECK(h.n == g.n);
    CHECK(h.edges == g.edges);
  }
  CHECK_THROWS_AS(parse_graph_string("p graph 2 1\ne 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_string("p graph 2 2\ne 0 1\ne 1 0\n"), ParseError);
}

TEST_CASE("tree decomposition round trip") {
  PhtInstance inst = gen_pht(2, 2);
  const std::string text = emit_td(inst.td, inst.poset.size());
  TreeDecomposition td = parse_td_string(text);
  CHECK(td.bags == inst.td.bags);
  CHECK(td.width() == inst.td.width());
  TdReport rep = verify_tree_decomposition(cover_graph(inst.poset), td);
  CHECK(rep.valid);
}

TEST_CASE("tree decomposition parse errors") {
  CHECK_THROWS_AS(parse_td_string("s td 1 1 1\nb 1 1\nb 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_td_string("s td 2 1 1\nb 1 1\n"), ParseError);
  // Declared width must match the bags.
  CHECK_THROWS_AS(parse_td_string("s td 1 3 2\nb 1 1 2\n"), ParseError);
}

TEST_CASE("format sniffing") {
  CHECK(sniff_format("# hi\np poset 1 0\n") == "poset");
  CHECK(sniff_format("p graph 1 0\n") == "graph");
  CHECK(sniff_format("s td 1 1 1\nb 1 1\n") == "td");
  CHECK_THROWS_AS(sniff_format("nonsense\n"), ParseError);
}

TEST_CASE("dot output mentions every element") {
  StandardInstance s = gen_standard_example(2);
  const std::string dot = emit_dot(s.poset);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("a1") != std::string::npos);
  CHECK(dot.find("b2") != std::string::npos);
  CHECK(dot.find("n0 -> n3") != std::string::npos);
}

TEST_CASE("certificate round trip and verification") {
  StandardInstance s = gen_standard_example(3);
  DimResult res = dim_exact(s.poset);
  DimCertificate cert{res.dim, res.partition,
                      partition_to_realizer(s.poset, res.partition)};
  const std::string text = emit_certificate(cert);
  DimCertificate back = parse_certificate_string(text);
  CHECK(back.dim == cert.dim);
  CHECK(back.partition.classes == cert.partition.classes);
  CHECK(verify_certificate(s.poset, back));

  // Tampering: drop one pair from a class.
  DimCertificate bad = back;
  bad.partition.classes[0].pop_back();
  CHECK(!verify_certificate(s.poset, bad));

  // Tampering: swap an extension for a non-reversing one.
  DimCertificate bad2 = back;
  bad2.realizer.extensions[0] = bad2.realizer.extensions[1];
  CHECK(!verify_certificate(s.poset, bad2));
}
