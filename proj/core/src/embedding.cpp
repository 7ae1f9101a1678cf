#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

#include "posetlab/generators.hpp"

namespace posetlab {

PlanarityResult compute_planar_embedding(const CoverGraph& g) {
  using Graph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::property<boost::vertex_index_t, int>>;
  using Edge = boost::graph_traits<Graph>::edge_descriptor;

  Graph bg(g.n);
  for (const auto& [u, v] : g.edges) boost::add_edge(u, v, bg);

  std::vector<std::vector<Edge>> storage(g.n);
  auto emb_map = boost::make_iterator_property_map(
      storage.begin(), boost::get(boost::vertex_index, bg));

  PlanarityResult res;
  res.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = emb_map);
  if (!res.planar) return res;

  res.embedding.rotation.assign(g.n, {});
  for (int v = 0; v < g.n; ++v)
    for (const Edge& e : storage[v]) {
      const int s = static_cast<int>(boost::source(e, bg));
      const int t = static_cast<int>(boost::target(e, bg));
      res.embedding.rotation[v].push_back(s == v ? t : s);
    }
  return res;
}

}  // namespace posetlab
