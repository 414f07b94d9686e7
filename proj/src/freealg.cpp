#include "centersig/freealg.hpp"

#include <algorithm>

#include "centersig/errors.hpp"

namespace csig {

std::string word_monomial(const Word& w) {
  std::string s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    s.push_back('X');
    s.append(static_cast<std::size_t>(*it - 1), 'Y');
  }
  return s;
}

namespace {

void add_to(NCPoly& p, const std::string& mono, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

}  // namespace

NCSeries::NCSeries(int cutoff) : p_(static_cast<std::size_t>(cutoff) + 1) {
  if (cutoff < 1) throw InputError("cutoff must be at least 1");
  p_[0].emplace("", Scalar(1));
}

void NCSeries::add(const std::string& mono, const Scalar& c) {
  if (mono.size() >= p_.size()) return;
  add_to(p_[mono.size()], mono, c);
}

bool NCSeries::is_identity() const {
  for (std::size_t i = 1; i < p_.size(); ++i)
    if (!p_[i].empty()) return false;
  return true;
}

NCSeries fundamental_solution(const Signature& sig) {
  NCSeries f(sig.cutoff);
  for (const auto& [w, v] : sig.values) f.add(word_monomial(w), v);
  return f;
}

NCSeries fundamental_solution(const CoeffSeq& a, int cutoff) { return fundamental_solution(signature(a, cutoff)); }

NCSeries nc_mul(const NCSeries& f, const NCSeries& g) {
  if (f.cutoff() != g.cutoff()) throw PreconditionError("nc_mul: cutoff mismatch");
  const int n = f.cutoff();
  NCSeries out(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      if (i + j == 0) continue;
      for (const auto& [ma, ca] : f.degree(i))
        for (const auto& [mb, cb] : g.degree(j)) out.add(ma + mb, ca * cb);
    }
  return out;
}

UniversalVerdict is_universal_center(const CoeffSeq& a, const Signature& sig) {
  UniversalVerdict v;
  v.cutoff = sig.cutoff;
  for (const auto& [w, val] : sig.values) {
    if (!negligible(val, zero_threshold(a, w))) {
      v.universal = false;
      v.witnesses.emplace_back(w, val);
    }
  }
  return v;
}

UniversalVerdict is_universal_center(const CoeffSeq& a, int cutoff) {
  return is_universal_center(a, signature(a, cutoff));
}

SPoly to_s_algebra(const NCPoly& p, std::mt19937_64* rng) {
  NCPoly work = p;
  SPoly out;
  while (!work.empty()) {
    auto it = work.begin();
    if (rng) std::advance(it, static_cast<long>((*rng)() % work.size()));
    std::string mono = it->first;
    Scalar c = it->second;
    work.erase(it);
    std::vector<std::size_t> redexes;
    for (std::size_t k = 0; k + 1 < mono.size(); ++k)
      if (mono[k] == 'Y' && mono[k + 1] == 'X') redexes.push_back(k);
    if (redexes.empty()) {
      int xs = static_cast<int>(std::count(mono.begin(), mono.end(), 'X'));
      auto key = std::make_pair(xs, static_cast<int>(mono.size()) - xs);
      auto [o, inserted] = out.emplace(key, c);
      if (!inserted) {
        o->second += c;
        if (o->second.is_zero()) out.erase(o);
      }
      continue;
    }
    std::size_t k = rng ? redexes[(*rng)() % redexes.size()] : redexes.front();
    std::string swapped = mono, squared = mono;
    swapped[k] = 'X';
    swapped[k + 1] = 'Y';
    squared[k + 1] = 'Y';
    add_to(work, swapped, c);
    add_to(work, squared, c);
  }
  return out;
}

IntMatrix diff_matrix(int deg) {
  const auto n = static_cast<std::size_t>(deg) + 1;
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t k = 1; k < n; ++k) m[k - 1][k] = static_cast<long>(k);
  return m;
}

IntMatrix shift_matrix(int deg) {
  const auto n = static_cast<std::size_t>(deg) + 1;
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t k = 1; k < n; ++k) m[k - 1][k] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), inner = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool operator_relation_holds(int deg) {
  IntMatrix d = diff_matrix(deg), l = shift_matrix(deg);
  IntMatrix dl = mat_mul(d, l), ld = mat_mul(l, d), ll = mat_mul(l, l);
  for (std::size_t i = 0; i < dl.size(); ++i)
    for (std::size_t j = 0; j < dl.size(); ++j)
      if (dl[i][j] - ld[i][j] != -ll[i][j]) return false;
  return true;
}

Scalar cn_via_operators(const NCSeries& f, int n) {
  if (n < 1 || n > f.cutoff()) throw PreconditionError("cn_via_operators: n outside 1..cutoff");
  const IntMatrix d = diff_matrix(n), l = shift_matrix(n);
  Scalar total;
  for (const auto& [mono, c] : f.degree(n)) {
    // Coordinates of z^n; apply letters right to left.
    std::vector<mpz_class> v(static_cast<std::size_t>(n) + 1, 0);
    v.back() = 1;
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
      const IntMatrix& op = *it == 'X' ? d : l;
      std::vector<mpz_class> next(v.size(), 0);
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
          if (op[i][j] != 0 && v[j] != 0) next[i] += op[i][j] * v[j];
      v = std::move(next);
    }
    if (v[0] != 0) total += c * Scalar(GaussQ(mpq_class(v[0])));
  }
  return total;
}

Scalar cn_via_operators(const CoeffSeq& a, int n) { return cn_via_operators(fundamental_solution(a, n), n); }

}  // namespace csig
