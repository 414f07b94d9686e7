#include "centersig/iint.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "centersig/errors.hpp"

namespace csig {

namespace {

CoeffFn step(const CoeffSeq& a, int part, const CoeffFn& prev) { return antiderivative(fn_mul(a[part], prev)); }

std::set<int> support_set(const CoeffSeq& a) {
  auto s = a.support();
  return {s.begin(), s.end()};
}

struct Node {
  Word word;
  CoeffFn g;
};

void subtree(const CoeffSeq& a, const std::set<int>& support, int cutoff, Node& node,
             std::map<Word, Scalar>& out) {
  const int w = weight(node.word);
  for (int part : support) {
    if (w + part > cutoff) break;
    Node child{node.word, step(a, part, node.g)};
    child.word.push_back(part);
    out.emplace(child.word, value_at_two_pi(child.g));
    subtree(a, support, cutoff, child, out);
  }
}

}  // namespace

CoeffFn partial_integral(const CoeffSeq& a, const Word& w) {
  validate_word(w);
  CoeffFn g = CoeffFn::constant(Scalar(1));
  for (int part : w) g = step(a, part, g);
  return g;
}

Scalar iint(const CoeffSeq& a, const Word& w) {
  if (w.empty()) return Scalar(1);
  return value_at_two_pi(partial_integral(a, w));
}

Scalar Signature::at(const Word& w) const {
  if (w.empty()) return Scalar(1);
  if (weight(w) > cutoff) throw PreconditionError("word " + word_to_string(w) + " exceeds the signature cutoff");
  auto it = values.find(w);
  return it == values.end() ? Scalar() : it->second;
}

unsigned worker_count() {
  if (const char* env = std::getenv("CENTER_SIG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

Signature signature(const CoeffSeq& a, int cutoff, unsigned threads) {
  if (cutoff < 1) throw InputError("cutoff must be at least 1");
  if (threads == 0) threads = worker_count();
  Signature sig;
  sig.cutoff = cutoff;
  const std::set<int> support = support_set(a);

  // Expand the first two levels sequentially, then hand out subtrees.
  std::vector<Node> frontier;
  const CoeffFn one = CoeffFn::constant(Scalar(1));
  for (int p : support) {
    if (p > cutoff) break;
    Node n1{{p}, step(a, p, one)};
    sig.values.emplace(n1.word, value_at_two_pi(n1.g));
    for (int q : support) {
      if (p + q > cutoff) break;
      Node n2{{p, q}, step(a, q, n1.g)};
      sig.values.emplace(n2.word, value_at_two_pi(n2.g));
      frontier.push_back(std::move(n2));
    }
  }

  std::vector<std::map<Word, Scalar>> parts(frontier.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < frontier.size(); j = next++) subtree(a, support, cutoff, frontier[j], parts[j]);
  };
  const unsigned n_threads = std::min<unsigned>(threads, static_cast<unsigned>(frontier.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& m : parts) sig.values.merge(m);
  return sig;
}

double zero_threshold(const CoeffSeq& a, const Word& w) {
  const int k = length(w);
  double scale = 1e-10 * std::pow(kTwoPi, k) / std::tgamma(k + 1.0);
  return scale * std::pow(a.bound(), weight(w));
}

bool negligible(const Scalar& s, double threshold) {
  if (s.is_exact()) return s.is_zero();
  return s.abs() <= threshold;
}

bool shuffle_product_check(const Signature& sig, const Word& u, const Word& v) {
  if (weight(u) + weight(v) > sig.cutoff) throw PreconditionError("shuffle check exceeds the signature cutoff");
  Scalar lhs = sig.at(u) * sig.at(v);
  Scalar rhs;
  double mag = 0;
  for (const Word& w : shuffles(u, v)) {
    Scalar x = sig.at(w);
    mag += x.abs();
    rhs += x;
  }
  if (lhs.is_exact() && rhs.is_exact()) return lhs == rhs;
  return (lhs - rhs).abs() <= 1e-9 * std::max({1.0, lhs.abs(), mag});
}

bool shuffle_product_check(const CoeffSeq& a, const Word& u, const Word& v) {
  validate_word(u);
  validate_word(v);
  return shuffle_product_check(signature(a, std::max(1, weight(u) + weight(v))), u, v);
}

}  // namespace csig
