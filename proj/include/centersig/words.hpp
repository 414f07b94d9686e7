#pragma once

#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace csig {

/// Multi-index (i_1, ..., i_k) with positive parts; i_1 is the innermost integration.
using Word = std::vector<int>;

int weight(const Word& w);
inline int length(const Word& w) { return static_cast<int>(w.size()); }
/// Throws InputError unless all parts are positive.
void validate_word(const Word& w);
std::string word_to_string(const Word& w);

/// Ordered sequences over `support` summing to n, lexicographic.
std::vector<Word> compositions(int n, const std::set<int>& support);

/// All words over `support` of weight 1..max_weight, lexicographic (prefix order).
std::vector<Word> words_up_to(int max_weight, const std::set<int>& support);

/// (n - i_1 + 1)(n - i_1 - i_2 + 1)...1 with n = weight(w).
mpz_class coeff_c(const Word& w);

/// All interleavings of u and v, with multiplicity (C(|u|+|v|, |u|) entries).
std::vector<Word> shuffles(const Word& u, const Word& v);

}  // namespace csig
