#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pathcrystal/energy.hpp"
#include "pathcrystal/symtensor.hpp"

namespace pathcrystal {

// Minimal labeled-digraph writer; nodes and edges are emitted in insertion
// order, so deterministic input gives byte-identical output.
struct DotGraph {
  std::string name = "crystal";
  struct Node {
    std::string id;
    std::string label;
  };
  struct Edge {
    std::string from, to;
    std::string label;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  void write(std::ostream& os) const {
    os << "digraph " << name << " {\n";
    os << "  rankdir=LR;\n";
    for (const auto& n : nodes)
      os << "  \"" << n.id << "\" [label=\"" << n.label << "\"];\n";
    for (const auto& e : edges)
      os << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << e.label
         << "\"];\n";
    os << "}\n";
  }

  std::string str() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }
};

inline std::string box_label(const BoxElem& b) {
  return b.rank() == 2 ? box_to_letters(b) : box_to_string(b);
}

// The crystal graph of B^l: nodes are elements, arrows are f_i, labeled i.
inline DotGraph crystal_graph(int n, int l) {
  DotGraph g;
  for (const BoxElem& b : box_elements(n, l))
    g.nodes.push_back({box_to_string(b), box_label(b)});
  for (const BoxElem& b : box_elements(n, l))
    for (int i = 0; i < n; ++i)
      if (auto img = b.f(i))
        g.edges.push_back({box_to_string(b), box_to_string(*img), std::to_string(i)});
  return g;
}

// The tensor square with energy values in the labels.
inline DotGraph tensor_graph(int n, int l, const EnergyTable& energy) {
  DotGraph g;
  g.name = "tensor_square";
  const auto elems = box_elements(n, l);
  auto id = [](const BoxElem& a, const BoxElem& b) {
    return box_to_string(a) + "x" + box_to_string(b);
  };
  for (const BoxElem& a : elems)
    for (const BoxElem& b : elems)
      g.nodes.push_back({id(a, b), box_label(a) + "(x)" + box_label(b) +
                                       " H=" + std::to_string(energy.at(a, b))});
  for (const BoxElem& a : elems)
    for (const BoxElem& b : elems) {
      Word w({a, b});
      for (int i = 0; i < n; ++i)
        if (auto img = w.f(i))
          g.edges.push_back(
              {id(a, b), id(img->factors[0], img->factors[1]), std::to_string(i)});
    }
  return g;
}

}  // namespace pathcrystal
