#pragma once

#include "hamlab/graph.hpp"

namespace hamlab {

/// Fixed small patterns used by the forbidden/heavy subgraph predicates.
struct PatternLibrary {
  Graph claw;     // K_{1,3}
  Graph p3, p4, p5, p6;
  Graph c3;
  Graph z1;       // triangle with a pendant edge
  Graph z2;       // triangle with a pendant path of length 2
  Graph bull;     // triangle with pendant edges at two of its vertices
  Graph net;      // triangle with a pendant edge at each vertex
  Graph wounded;  // triangle with a pendant edge at one vertex and a
                  // pendant path of length 2 at another (order 6)
  Graph diamond;  // K4 minus an edge
};

const PatternLibrary& patterns();

/// No induced copy of h in g. Requires h connected with at least 2 vertices.
bool is_H_free(const Graph& g, const Graph& h);

/// Every induced copy of h contains two nonadjacent vertices whose degree
/// sum in g is at least n.
bool is_H_o_heavy(const Graph& g, const Graph& h);

/// Every pair of vertices at distance exactly 2 inside an induced copy of h
/// has an endpoint of degree at least n/2 in g.
bool is_H_f_heavy(const Graph& g, const Graph& h);

bool dirac_holds(const Graph& g);  // every vertex heavy
bool ore_holds(const Graph& g);    // every nonadjacent pair heavy

}  // namespace hamlab
