#include <map>
#include <sstream>

#include "dlga/fsa.hpp"

namespace dlga {

namespace {

std::string symbol_name(const Automaton& a, Symbol s) { return s == kEpsilon ? "eps" : a.alphabet()->name(s); }

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string export_text(const Automaton& a) {
  std::ostringstream os;
  os << "alphabet:";
  for (const auto& n : a.alphabet()->names()) os << ' ' << n;
  os << "\nstates: " << a.num_states() << "\nstart: " << a.start() << "\naccepts:";
  for (State s = 0; s < a.num_states(); ++s) {
    if (a.is_accepting(s)) os << ' ' << s;
  }
  os << "\ntransitions: " << a.num_edges() << '\n';
  for (State s = 0; s < a.num_states(); ++s) {
    for (const auto& e : a.edges(s)) os << s << ' ' << symbol_name(a, e.symbol) << ' ' << e.target << '\n';
  }
  return os.str();
}

std::string export_dot(const Automaton& a, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
  os << "  init [shape=point];\n";
  for (State s = 0; s < a.num_states(); ++s) {
    os << "  s" << s << " [label=\"" << s << "\"" << (a.is_accepting(s) ? ", shape=doublecircle" : "") << "];\n";
  }
  os << "  init -> s" << a.start() << ";\n";
  for (State s = 0; s < a.num_states(); ++s) {
    std::map<State, std::string> labels;
    for (const auto& e : a.edges(s)) {
      auto& l = labels[e.target];
      if (!l.empty()) l += ", ";
      l += symbol_name(a, e.symbol);
    }
    for (const auto& [t, l] : labels) os << "  s" << s << " -> s" << t << " [label=\"" << dot_escape(l) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string render(const AlphabetPtr& alphabet, const SymbolString& w, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += sep;
    out += alphabet->name(w[k]);
  }
  return out;
}

}  // namespace dlga
