#include <gbs/gbs_graph.hpp>

#include <algorithm>
#include <stdexcept>

namespace gbs {

std::string Classification::str() const {
  switch (kind) {
    case GbsClass::InfiniteCyclic:
      return "infinite-cyclic";
    case GbsClass::Bs11:
      return "bs(1,1)";
    case GbsClass::Bs1Minus1:
      return "bs(1,-1)";
    case GbsClass::SolvableBs1n:
      return "bs(1," + n.str() + ")";
    case GbsClass::NonSolvable:
      return "non-solvable";
  }
  return "?";
}

XElement x_multiply(const XElement& x, const XElement& y) {
  // (a z^l)(a' z^l') = a a' z^{l (-1)^{em1(a')} + l'}
  Int l = mod_floor(y.em1, 2) == 1 ? -x.l : x.l;
  return {x.e1 + y.e1, x.em1 + y.em1, l + y.l};
}

XElement x_inverse(const XElement& x) {
  Int l = mod_floor(x.em1, 2) == 1 ? x.l : -x.l;
  return {-x.e1, -x.em1, l};
}

XElement x_power(const XElement& x, const Int& k) {
  if (k < 0) return x_power(x_inverse(x), -k);
  XElement result;
  XElement base = x;
  Int e = k;
  while (e > 0) {
    if ((e & 1) != 0) result = x_multiply(result, base);
    e >>= 1;
    if (e > 0) base = x_multiply(base, base);
  }
  return result;
}

XkElement xk_multiply(const XkElement& x, const XkElement& y) {
  if (x.modulus != y.modulus)
    throw std::invalid_argument("xk_multiply: mixed moduli");
  Int j = y.b == 1 ? -x.j : x.j;
  return {(x.b + y.b) % 2, mod_floor(j + y.j, x.modulus), x.modulus};
}

SpanningData maximal_subtree(const LabeledGraph& graph) {
  graph.validate();
  SpanningData s;
  s.root = *std::min_element(graph.vertices.begin(), graph.vertices.end());
  s.weights[s.root] = Rational(1);

  // Edges in id order so the chosen tree is deterministic.
  std::vector<const LabeledEdge*> order;
  for (const LabeledEdge& e : graph.edges) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const LabeledEdge* a, const LabeledEdge* b) { return a->id < b->id; });

  bool grew = true;
  while (grew) {
    grew = false;
    for (const LabeledEdge* e : order) {
      bool know_from = s.weights.count(e->from) != 0;
      bool know_to = s.weights.count(e->to) != 0;
      if (know_from == know_to) continue;  // both new or both reached
      if (know_from) {
        // label_from * w(from) = label_to * w(to)
        s.weights[e->to] =
            s.weights[e->from] * Rational(e->label_from, e->label_to);
      } else {
        s.weights[e->from] =
            s.weights[e->to] * Rational(e->label_to, e->label_from);
      }
      s.tree.insert(e->id);
      grew = true;
    }
  }
  return s;
}

LabeledGraph elementary_collapse(const LabeledGraph& graph,
                                 const std::string& edge_id, int eps) {
  const LabeledEdge* edge = graph.find_edge(edge_id);
  if (edge == nullptr)
    throw std::invalid_argument("elementary_collapse: no edge '" + edge_id + "'");
  if (edge->is_loop())
    throw std::invalid_argument("elementary_collapse: cannot collapse a loop");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("elementary_collapse: end must be +1 or -1");
  const Int& unit = eps == 1 ? edge->label_from : edge->label_to;
  if (abs(unit) != 1)
    throw std::invalid_argument("elementary_collapse: label at chosen end is not a unit");

  const std::string dropped = eps == 1 ? edge->from : edge->to;
  const std::string kept = eps == 1 ? edge->to : edge->from;
  const Int factor = edge->label_from * edge->label_to;

  LabeledGraph out;
  for (const std::string& v : graph.vertices)
    if (v != dropped) out.vertices.push_back(v);
  for (const LabeledEdge& e : graph.edges) {
    if (e.id == edge_id) continue;
    LabeledEdge moved = e;
    if (moved.from == dropped) {
      moved.from = kept;
      moved.label_from *= factor;
    }
    if (moved.to == dropped) {
      moved.to = kept;
      moved.label_to *= factor;
    }
    out.edges.push_back(std::move(moved));
  }
  return out;
}

namespace {

void flip_vertex(LabeledGraph& graph, const std::string& v) {
  for (LabeledEdge& e : graph.edges) {
    if (e.from == v) e.label_from = -e.label_from;
    if (e.to == v) e.label_to = -e.label_to;
  }
}

void flip_edge(LabeledEdge& e) {
  e.label_from = -e.label_from;
  e.label_to = -e.label_to;
}

}  // namespace

LabeledGraph normalize_signs(const LabeledGraph& graph, const SpanningData& s) {
  LabeledGraph out = graph;
  // Walk the tree from the root; each step fixes one edge using an edge flip
  // and/or a vertex flip at the child, neither of which touches edges fixed
  // earlier.
  std::set<std::string> done{s.root};
  std::set<std::string> pending = s.tree;
  while (!pending.empty()) {
    bool progressed = false;
    for (auto it = pending.begin(); it != pending.end();) {
      LabeledEdge* e = nullptr;
      for (LabeledEdge& candidate : out.edges)
        if (candidate.id == *it) e = &candidate;
      bool from_done = done.count(e->from) != 0;
      bool to_done = done.count(e->to) != 0;
      if (!from_done && !to_done) {
        ++it;
        continue;
      }
      const std::string child = from_done ? e->to : e->from;
      Int& parent_label = from_done ? e->label_from : e->label_to;
      if (parent_label < 0) flip_edge(*e);
      Int& child_label = from_done ? e->label_to : e->label_from;
      if (child_label < 0) flip_vertex(out, child);
      done.insert(child);
      it = pending.erase(it);
      progressed = true;
    }
    if (!progressed)
      throw std::invalid_argument("normalize_signs: tree does not span the graph");
  }
  return out;
}

bool is_reduced(const LabeledGraph& graph) {
  for (const LabeledEdge& e : graph.edges)
    if (!e.is_loop() && (abs(e.label_from) == 1 || abs(e.label_to) == 1))
      return false;
  return true;
}

LabeledGraph reduce(const LabeledGraph& graph) {
  LabeledGraph current = graph;
  current.validate();
  while (true) {
    const LabeledEdge* best = nullptr;
    int best_eps = 0;
    for (const LabeledEdge& e : current.edges) {
      if (e.is_loop()) continue;
      for (int eps : {1, -1}) {
        const Int& label = eps == 1 ? e.label_from : e.label_to;
        if (abs(label) != 1) continue;
        if (best == nullptr || e.id < best->id ||
            (e.id == best->id && eps > best_eps)) {
          best = &e;
          best_eps = eps;
        }
      }
    }
    if (best == nullptr) return current;
    current = elementary_collapse(current, best->id, best_eps);
  }
}

Classification classify(const LabeledGraph& reduced) {
  if (!is_reduced(reduced))
    throw std::invalid_argument("classify: graph is not reduced");
  if (reduced.vertices.size() == 1 && reduced.edges.empty())
    return {GbsClass::InfiniteCyclic, 0};
  if (reduced.vertices.size() == 1 && reduced.edges.size() == 1) {
    const LabeledEdge& e = reduced.edges.front();
    Int n = 0;
    if (abs(e.label_from) == 1)
      n = e.label_to * e.label_from;  // sign of the unit times the other label
    else if (abs(e.label_to) == 1)
      n = e.label_from * e.label_to;
    if (n != 0) {
      if (n == 1) return {GbsClass::Bs11, 1};
      if (n == -1) return {GbsClass::Bs1Minus1, -1};
      return {GbsClass::SolvableBs1n, n};
    }
  }
  return {GbsClass::NonSolvable, 0};
}

ModularImage modular_image(const LabeledGraph& reduced, const SpanningData& s) {
  if (classify(reduced).kind == GbsClass::InfiniteCyclic)
    throw std::invalid_argument("modular_image: undefined for the infinite cyclic group");
  ModularImage image;
  std::vector<const LabeledEdge*> non_tree;
  for (const LabeledEdge& e : reduced.edges)
    if (!s.tree.count(e.id)) non_tree.push_back(&e);
  std::sort(non_tree.begin(), non_tree.end(),
            [](const LabeledEdge* a, const LabeledEdge* b) { return a->id < b->id; });

  bool seen_minus_one = false;
  bool other = false;
  for (const LabeledEdge* e : non_tree) {
    Rational delta = (Rational(e->label_to) * s.weights.at(e->to)) /
                     (Rational(e->label_from) * s.weights.at(e->from));
    if (delta == Rational(-1)) seen_minus_one = true;
    else if (delta != Rational(1)) other = true;
    image.generators.emplace_back(e->id, delta);
  }
  image.classification = other ? ModularClass::Other
                         : seen_minus_one ? ModularClass::PlusMinusOne
                                          : ModularClass::Trivial;
  return image;
}

RadicalData cyclic_radical(const LabeledGraph& reduced, const SpanningData& s) {
  if (classify(reduced).kind != GbsClass::NonSolvable)
    throw std::invalid_argument("cyclic_radical: requires a non-solvable graph");
  if (modular_image(reduced, s).classification == ModularClass::Other)
    throw std::invalid_argument("cyclic_radical: modular image not within {1,-1}");
  for (const LabeledEdge& e : reduced.edges)
    if (s.tree.count(e.id) && (e.label_from < 0 || e.label_to < 0))
      throw std::invalid_argument("cyclic_radical: graph is not tree-positive");

  // The radical is generated by the lcm over all edge ends of
  // |label * w(end)|; mu(v) is its index in the vertex group.
  Rational level(0);
  for (const LabeledEdge& e : reduced.edges) {
    Rational at_from = rat_abs(Rational(e.label_from) * s.weights.at(e.from));
    Rational at_to = rat_abs(Rational(e.label_to) * s.weights.at(e.to));
    level = level == Rational(0) ? at_from : rational_lcm(level, at_from);
    level = rational_lcm(level, at_to);
  }
  if (level == Rational(0))
    throw std::logic_error("cyclic_radical: no edges in a non-solvable graph");

  RadicalData data;
  data.mu = 1;
  for (const std::string& v : reduced.vertices) {
    Rational index = rat_abs(level / s.weights.at(v));
    if (!index.is_integer() || index.num < 1)
      throw std::logic_error("cyclic_radical: non-integer vertex index");
    data.radical_exponent[v] = index.num;
    data.mu = lcm(data.mu, index.num);
  }

  Int label_product = 1;
  for (const LabeledEdge& e : reduced.edges)
    label_product *= e.label_from * e.label_to;
  if (label_product % data.mu != 0)
    throw std::logic_error("cyclic_radical: index lcm fails to divide the label product");
  return data;
}

namespace {

// Delta values keyed by non-tree edge id, as {1,-1} flags.
std::map<std::string, int> delta_signs(const ModularImage& image) {
  std::map<std::string, int> signs;
  for (const auto& [edge, delta] : image.generators) {
    if (delta == Rational(1))
      signs[edge] = 1;
    else if (delta == Rational(-1))
      signs[edge] = -1;
    else
      throw std::invalid_argument("tau: modular image not within {1,-1}");
  }
  return signs;
}

}  // namespace

XElement tau_evaluate(const LabeledGraph& graph, const SpanningData& s,
                      const RadicalData& radical, const ModularImage& image,
                      const GroupWord& word) {
  (void)s;
  std::map<std::string, int> signs = delta_signs(image);
  XElement acc;
  for (const auto& [gen, exp] : word.terms) {
    XElement base;
    if (gen.rfind("g.", 0) == 0) {
      auto it = radical.radical_exponent.find(gen.substr(2));
      if (it == radical.radical_exponent.end())
        throw parse_error("tau: unknown vertex generator '" + gen + "'");
      base = {0, 0, radical.mu / it->second};
    } else if (gen.rfind("t.", 0) == 0) {
      auto it = signs.find(gen.substr(2));
      if (it == signs.end())
        throw parse_error("tau: unknown stable letter '" + gen + "'");
      base = it->second == 1 ? XElement{1, 0, 0} : XElement{0, 1, 0};
    } else {
      throw parse_error("tau: generators are g.<vertex> and t.<edge>");
    }
    acc = x_multiply(acc, x_power(base, exp));
  }
  (void)graph;
  return acc;
}

XkElement chi_k_map(const XElement& x, const Int& mu, const Int& k) {
  if (k < 1) throw std::invalid_argument("chi_k_map: k must be >= 1");
  Int modulus = mu * k;
  return {static_cast<int>(mod_floor(x.em1, 2)), mod_floor(x.l, modulus),
          modulus};
}

XkElement tau_k_evaluate(const LabeledGraph& graph, const SpanningData& s,
                         const RadicalData& radical, const ModularImage& image,
                         const GroupWord& word, const Int& k) {
  (void)graph;
  (void)s;
  if (k < 1) throw std::invalid_argument("tau_k_evaluate: k must be >= 1");
  std::map<std::string, int> signs = delta_signs(image);
  Int modulus = radical.mu * k;
  XkElement acc{0, 0, modulus};
  for (const auto& [gen, exp] : word.terms) {
    XkElement base{0, 0, modulus};
    if (gen.rfind("g.", 0) == 0) {
      auto it = radical.radical_exponent.find(gen.substr(2));
      if (it == radical.radical_exponent.end())
        throw parse_error("tau_k: unknown vertex generator '" + gen + "'");
      base.j = mod_floor(radical.mu / it->second * exp, modulus);
    } else if (gen.rfind("t.", 0) == 0) {
      auto it = signs.find(gen.substr(2));
      if (it == signs.end())
        throw parse_error("tau_k: unknown stable letter '" + gen + "'");
      if (it->second == -1) base.b = static_cast<int>(mod_floor(exp, 2));
    } else {
      throw parse_error("tau_k: generators are g.<vertex> and t.<edge>");
    }
    acc = xk_multiply(acc, base);
  }
  return acc;
}

std::pair<LabeledGraph, SpanningData> reduced_positive_form(
    const LabeledGraph& graph) {
  LabeledGraph reduced = reduce(graph);
  SpanningData tree = maximal_subtree(reduced);
  LabeledGraph positive = normalize_signs(reduced, tree);
  return {positive, maximal_subtree(positive)};
}

}  // namespace gbs
