#include "curvetopo/presentation.hpp"

#include <sstream>

namespace curvetopo {

std::string GroupPresentation::serialize() const {
  std::ostringstream os;
  if (!provenance.empty()) os << "# " << provenance << "\n";
  os << "gens:";
  for (auto& g : gens) os << " " << g;
  os << "\n";
  if (!meridian.empty()) {
    bool all = true;
    for (bool m : meridian) all = all && m;
    if (!all) {
      os << "meridians:";
      for (size_t i = 0; i < gens.size(); ++i)
        if (meridian[i]) os << " " << gens[i];
      os << "\n";
    }
  }
  for (auto& r : relators) os << "rel: " << word_str(r, gens) << "\n";
  return os.str();
}

GroupPresentation GroupPresentation::parse(const std::string& text) {
  GroupPresentation p;
  std::istringstream is(text);
  std::string line;
  bool have_meridians = false;
  std::vector<std::string> meridian_names;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (p.provenance.empty() && line.size() > 2)
        p.provenance = line.substr(2);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos)
      fail(errc::invalid_input, "bad presentation line: " + line);
    std::string key = line.substr(0, colon);
    std::string rest = line.substr(colon + 1);
    if (key == "gens") {
      std::istringstream gs(rest);
      std::string g;
      while (gs >> g) p.gens.push_back(g);
    } else if (key == "meridians") {
      have_meridians = true;
      std::istringstream gs(rest);
      std::string g;
      while (gs >> g) meridian_names.push_back(g);
    } else if (key == "rel") {
      if (p.gens.empty())
        fail(errc::invalid_input, "rel before gens in presentation");
      p.relators.push_back(word_parse(rest, p.gens));
    } else {
      fail(errc::invalid_input, "unknown presentation key: " + key);
    }
  }
  if (p.gens.empty()) fail(errc::invalid_input, "presentation without gens");
  if (have_meridians) {
    p.meridian.assign(p.gens.size(), false);
    for (auto& name : meridian_names) {
      bool found = false;
      for (size_t i = 0; i < p.gens.size(); ++i)
        if (p.gens[i] == name) { p.meridian[i] = true; found = true; }
      if (!found) fail(errc::invalid_input, "unknown meridian: " + name);
    }
  }
  return p;
}

bool same_presentation(const GroupPresentation& a, const GroupPresentation& b) {
  return a.gens == b.gens && a.relators == b.relators;
}

} // namespace curvetopo
