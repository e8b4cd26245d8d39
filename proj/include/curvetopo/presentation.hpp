#pragma once

#include "curvetopo/words.hpp"

namespace curvetopo {

// Finitely presented group with named generators; meridian marks record
// which generators are lassos around the curve.
struct GroupPresentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;
  std::vector<bool> meridian; // size = gens.size(); empty = all meridians
  std::string provenance;

  int num_gens() const { return (int)gens.size(); }
  bool is_meridian(int i) const {
    return meridian.empty() ? true : meridian[(size_t)i];
  }
  long total_length() const {
    long n = 0;
    for (auto& r : relators) n += (long)r.size();
    return n;
  }

  // stable text format:
  //   gens: a b c
  //   rel: a b A B
  //   rel: ...
  // optional "meridians: a b" and "# provenance" lines
  std::string serialize() const;
  static GroupPresentation parse(const std::string& text);
};

// structural equality up to nothing (exact), used by replay checks
bool same_presentation(const GroupPresentation& a, const GroupPresentation& b);

} // namespace curvetopo
