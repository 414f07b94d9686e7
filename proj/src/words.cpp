#include "centersig/words.hpp"

#include <numeric>

#include "centersig/errors.hpp"

namespace csig {

int weight(const Word& w) { return std::accumulate(w.begin(), w.end(), 0); }

void validate_word(const Word& w) {
  for (int p : w)
    if (p < 1) throw InputError("word parts must be positive integers");
}

std::string word_to_string(const Word& w) {
  std::string s = "(";
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(w[j]);
  }
  return s + ")";
}

namespace {

void compose_dfs(int remaining, const std::set<int>& support, Word& prefix, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part : support) {
    if (part > remaining) break;
    prefix.push_back(part);
    compose_dfs(remaining - part, support, prefix, out);
    prefix.pop_back();
  }
}

void words_dfs(int remaining, const std::set<int>& support, Word& prefix, std::vector<Word>& out) {
  for (int part : support) {
    if (part > remaining) break;
    prefix.push_back(part);
    out.push_back(prefix);
    words_dfs(remaining - part, support, prefix, out);
    prefix.pop_back();
  }
}

void shuffle_rec(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& cur, std::vector<Word>& out) {
  if (i == u.size() && j == v.size()) {
    out.push_back(cur);
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    shuffle_rec(u, i + 1, v, j, cur, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    shuffle_rec(u, i, v, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> compositions(int n, const std::set<int>& support) {
  std::vector<Word> out;
  if (n < 1 || support.empty()) return out;
  Word prefix;
  compose_dfs(n, support, prefix, out);
  return out;
}

std::vector<Word> words_up_to(int max_weight, const std::set<int>& support) {
  std::vector<Word> out;
  Word prefix;
  words_dfs(max_weight, support, prefix, out);
  return out;
}

mpz_class coeff_c(const Word& w) {
  const int n = weight(w);
  mpz_class c = 1;
  int partial = 0;
  for (int p : w) {
    partial += p;
    c *= (n - partial + 1);
  }
  return c;
}

std::vector<Word> shuffles(const Word& u, const Word& v) {
  std::vector<Word> out;
  Word cur;
  shuffle_rec(u, 0, v, 0, cur, out);
  return out;
}

}  // namespace csig
