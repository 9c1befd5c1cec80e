#pragma once

#include <gbs/integer.hpp>
#include <gbs/labeled_graph.hpp>
#include <gbs/rational.hpp>
#include <gbs/words.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gbs {

// A maximal subtree with commensurability weights: w(root) = 1 and
// label_from(e) * w(from) = label_to(e) * w(to) along every tree edge.
struct SpanningData {
  std::set<std::string> tree;
  std::string root;
  std::map<std::string, Rational> weights;
};

enum class GbsClass { InfiniteCyclic, Bs11, Bs1Minus1, SolvableBs1n, NonSolvable };

struct Classification {
  GbsClass kind;
  Int n{0};  // set for the three BS(1,n) kinds
  friend bool operator==(const Classification& a, const Classification& b) {
    return a.kind == b.kind && a.n == b.n;
  }
  std::string str() const;
};

enum class ModularClass { Trivial, PlusMinusOne, Other };

// The image of the modular homomorphism, described by the values on the
// stable letters of the non-tree edges.
struct ModularImage {
  std::vector<std::pair<std::string, Rational>> generators;  // by edge id
  ModularClass classification{ModularClass::Trivial};
};

// Indices of the cyclic radical in the vertex groups and their lcm.
struct RadicalData {
  std::map<std::string, Int> radical_exponent;  // vertex -> mu(v)
  Int mu{1};
};

// Element a_1^{e1} a_{-1}^{em1} z^{l} of the extension X of Z by the free
// abelian group on {a_q | q in Im Delta}, with a_q^-1 z a_q = z^q.
struct XElement {
  Int e1{0};
  Int em1{0};
  Int l{0};
  friend bool operator==(const XElement& x, const XElement& y) {
    return x.e1 == y.e1 && x.em1 == y.em1 && x.l == y.l;
  }
};

XElement x_multiply(const XElement& x, const XElement& y);
XElement x_inverse(const XElement& x);
XElement x_power(const XElement& x, const Int& k);

// Element b^{bit} z_k^{j} of X_k (modulus mu*k on the z_k part).
struct XkElement {
  int b{0};
  Int j{0};
  Int modulus{1};
  friend bool operator==(const XkElement& x, const XkElement& y) {
    return x.b == y.b && x.j == y.j && x.modulus == y.modulus;
  }
};

XkElement xk_multiply(const XkElement& x, const XkElement& y);

SpanningData maximal_subtree(const LabeledGraph& graph);

// Contract a non-loop edge whose label at the end `eps` (+1 = from, -1 = to)
// is a unit, multiplying every other label around that end by the product of
// the edge's labels.  The defined group is unchanged.
LabeledGraph elementary_collapse(const LabeledGraph& graph,
                                 const std::string& edge_id, int eps);

// Admissible sign changes making every tree-edge label positive.
LabeledGraph normalize_signs(const LabeledGraph& graph, const SpanningData& s);

bool is_reduced(const LabeledGraph& graph);

// Iterated elementary collapse, lexicographically smallest (edge, end) first.
LabeledGraph reduce(const LabeledGraph& graph);

// Shape classification of a reduced graph.
Classification classify(const LabeledGraph& reduced);

// Delta on the stable letter of each non-tree edge:
// (label_to * w(to)) / (label_from * w(from)).
ModularImage modular_image(const LabeledGraph& reduced, const SpanningData& s);

// Radical index data; requires a reduced, tree-positive graph classified
// NonSolvable with modular image inside {1,-1}.
RadicalData cyclic_radical(const LabeledGraph& reduced, const SpanningData& s);

// Evaluation of the homomorphism sending g_v to z^{mu/mu(v)} and the stable
// letter t_e to a_{Delta(t_e)}.  Words use generators g.<vertex> and
// t.<non-tree edge>.
XElement tau_evaluate(const LabeledGraph& graph, const SpanningData& s,
                      const RadicalData& radical, const ModularImage& image,
                      const GroupWord& word);

XkElement chi_k_map(const XElement& x, const Int& mu, const Int& k);

XkElement tau_k_evaluate(const LabeledGraph& graph, const SpanningData& s,
                         const RadicalData& radical, const ModularImage& image,
                         const GroupWord& word, const Int& k);

// reduce + choose a tree + make it tree-positive; the returned spanning data
// matches the returned graph.
std::pair<LabeledGraph, SpanningData> reduced_positive_form(
    const LabeledGraph& graph);

}  // namespace gbs
