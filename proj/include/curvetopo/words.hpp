#pragma once

#include <string>
#include <vector>

#include "curvetopo/error.hpp"

namespace curvetopo {

// Group word: sequence of nonzero signed 1-based generator indices
// (+i = generator i, -i = its inverse).
using Word = std::vector<int>;

Word word_reduce(Word w);             // free reduction
Word word_cyclic_reduce(Word w);      // conjugacy-class representative start
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b); // freely reduced product
Word word_conj(const Word& w, const Word& by);  // by * w * by^-1, reduced
Word word_pow(const Word& w, int e);

// Lexicographically least cyclic rotation among w and w^-1 rotations;
// canonical relator representative.
Word word_cyclic_canon(const Word& w);

// Text form: generator names for positive letters, uppercased first letter
// convention is not assumed; inverse marked by trailing '^-1'-free scheme:
// single-letter names use case (a vs A), longer names use name and name'.
std::string word_str(const Word& w, const std::vector<std::string>& gens);
Word word_parse(const std::string& text, const std::vector<std::string>& gens);

} // namespace curvetopo
