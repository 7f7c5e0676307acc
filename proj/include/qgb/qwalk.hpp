#pragma once

#include <string>
#include <vector>

#include "qgb/graph.hpp"
#include "qgb/matrix.hpp"

namespace qgb {

enum class CoinStrategy { kGroverUniform, kDegreeWeighted };

CoinStrategy coin_from_tag(const std::string& tag);
std::string coin_tag(CoinStrategy c);

struct QWalkConfig {
  int steps = 32;
  double w_p = 0.5;  // weight of arcs into nodes of non-increasing degree
  double w_q = 4.0;  // weight of arcs into nodes of higher degree
  CoinStrategy coin = CoinStrategy::kDegreeWeighted;
};

// State space of a coined walk: one basis element per arc, both orientations
// of every undirected edge. Arcs are indexed by (tail, head) ascending.
struct ArcSpace {
  int num_arcs = 0;
  std::vector<int> tail, head;          // per arc
  std::vector<int> node_offset;         // arcs with tail v occupy [offset[v], offset[v+1])
  std::vector<int> reverse;             // index of (head -> tail)
};

ArcSpace build_arc_space(const Graph& g);

// Coin weight vector w for node x: unit vector with entries proportional to
// sqrt(alpha(x->y)); the coin block is the reflection 2|w><w| - I. One walk
// step applies the coin on every node block, then the flip-flop shift
// (x->y) -> (y->x). Amplitudes stay real: the initial state is real and
// both operators are real orthogonal.
void qwalk_step(const ArcSpace& arcs, const std::vector<int>& degrees, const QWalkConfig& cfg,
                std::vector<double>& state);

// Descriptor matrix num_nodes x steps; row v holds the probability of the
// walk occupying an arc with head v after steps 1..T, starting from uniform
// amplitude over all arcs. Edgeless graphs yield all-zero rows plus a
// recorded warning.
Mat qwalk_run(const Graph& g, const QWalkConfig& cfg);

}  // namespace qgb
