#include "aldlf/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace aldlf {

using nlohmann::json;

namespace {

void check_tabulation(const Afw& a) {
  if (a.atoms.size() > kMaxTabulatedAtoms)
    throw std::invalid_argument(
        "refusing to tabulate the transition function over " +
        std::to_string(a.atoms.size()) + " atoms (cap " +
        std::to_string(kMaxTabulatedAtoms) + ")");
}

}  // namespace

std::string afw_to_json(const Afw& a) {
  check_tabulation(a);
  json states = json::array();
  for (int q = 0; q < a.num_states(); ++q)
    states.push_back(
        {{"index", q}, {"name", a.state_names[q]}, {"accepting", bool(a.accepting[q])}});

  json delta = json::array();
  DeltaCache cache(a);
  for (const Interp& letter : all_letters(a.atoms)) {
    json per_letter = json::array();
    for (int q = 0; q < a.num_states(); ++q)
      per_letter.push_back(
          posbool_to_string(cache.formula(q, letter), a.state_names));
    delta.push_back({{"letter", letter.atoms()}, {"formulas", per_letter}});
  }

  json out{{"atoms", a.atoms},
           {"start", a.start},
           {"states", states},
           {"delta", delta}};
  return out.dump(2);
}

std::string afw_to_dot(const Afw& a) {
  check_tabulation(a);
  std::string out = "digraph afw {\n  rankdir=LR;\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    q += '"';
    return q;
  };
  for (int q = 0; q < a.num_states(); ++q) {
    out += "  n" + std::to_string(q) + " [label=" + quote(a.state_names[q]);
    if (a.accepting[q]) out += ", shape=doublecircle";
    out += "];\n";
  }
  out += "  init [shape=point];\n  init -> n" + std::to_string(a.start) +
         ";\n";
  DeltaCache cache(a);
  for (const Interp& letter : all_letters(a.atoms)) {
    for (int q = 0; q < a.num_states(); ++q) {
      const PosBoolPtr& b = cache.formula(q, letter);
      if (b->kind() == PosBool::Kind::False) continue;
      // One edge per mentioned successor; the full formula rides the label.
      std::vector<bool> seen(a.num_states(), false);
      std::vector<PosBoolPtr> stack{b};
      while (!stack.empty()) {
        PosBoolPtr top = stack.back();
        stack.pop_back();
        switch (top->kind()) {
          case PosBool::Kind::Atom:
            seen[top->move().state] = true;
            break;
          case PosBool::Kind::And:
          case PosBool::Kind::Or:
            stack.push_back(top->lhs());
            stack.push_back(top->rhs());
            break;
          default:
            break;
        }
      }
      std::string label =
          letter.str() + " : " + posbool_to_string(b, a.state_names);
      for (int to = 0; to < a.num_states(); ++to)
        if (seen[to])
          out += "  n" + std::to_string(q) + " -> n" + std::to_string(to) +
                 " [label=" + quote(label) + "];\n";
      if (b->kind() == PosBool::Kind::True)
        out += "  n" + std::to_string(q) + " -> n" + std::to_string(q) +
               " [label=" + quote(letter.str() + " : true") +
               ", style=dotted];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string trace_to_json(const Trace& t) {
  json instants = json::array();
  for (const auto& i : t.instants()) instants.push_back(i.atoms());
  return json{{"instants", instants}}.dump(2);
}

std::string certificate_to_json(const Afw& a, const Certificate& c) {
  json gamma = json::array();
  for (const auto& letter : c.gamma) {
    json triples = json::array();
    for (const auto& t : letter)
      triples.push_back({{"from", t.from},
                         {"dir", t.dir},
                         {"to", t.to},
                         {"from_name", a.state_names[t.from]},
                         {"to_name", a.state_names[t.to]}});
    gamma.push_back(triples);
  }
  json eta = json::array();
  for (const auto& letter : c.eta) {
    json triples = json::array();
    for (const auto& t : letter)
      triples.push_back({{"from", t.from},
                         {"flag", t.flag},
                         {"to", t.to},
                         {"from_name", a.state_names[t.from]},
                         {"to_name", a.state_names[t.to]}});
    eta.push_back(triples);
  }
  return json{{"gamma", gamma}, {"eta", eta}}.dump(2);
}

Certificate certificate_from_json(const Afw& a, const std::string& text) {
  json j = json::parse(text);
  auto state_in_range = [&](int q) {
    if (q < 0 || q >= a.num_states())
      throw std::invalid_argument("certificate names state index " +
                                  std::to_string(q) + " outside the automaton");
    return q;
  };
  Certificate c;
  for (const auto& letter : j.at("gamma")) {
    StrategyLetter l;
    for (const auto& t : letter) {
      int dir = t.at("dir").get<int>();
      if (dir < -1 || dir > 1)
        throw std::invalid_argument("certificate direction out of {-1,0,1}");
      l.push_back(StrategyTriple{state_in_range(t.at("from").get<int>()), dir,
                                 state_in_range(t.at("to").get<int>())});
    }
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    c.gamma.push_back(std::move(l));
  }
  for (const auto& letter : j.at("eta")) {
    AnnotationLetter l;
    for (const auto& t : letter) {
      int flag = t.at("flag").get<int>();
      if (flag < 0 || flag > 1)
        throw std::invalid_argument("certificate flag out of {0,1}");
      l.push_back(AnnotationTriple{state_in_range(t.at("from").get<int>()),
                                   flag,
                                   state_in_range(t.at("to").get<int>())});
    }
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    c.eta.push_back(std::move(l));
  }
  return c;
}

}  // namespace aldlf
