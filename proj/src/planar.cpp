#include "centersig/planar.hpp"

#include <algorithm>
#include <cmath>

#include "centersig/errors.hpp"

namespace csig {

namespace {

bool zeroish(const Scalar& s) { return s.is_exact() ? s.is_zero() : s.abs() <= 1e-12; }

// cos^a sin^b as a trigonometric polynomial, memoized per call site.
class CircleMonomials {
 public:
  const QuasiTrigPoly& get(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    QuasiTrigPoly v = QuasiTrigPoly::constant(Scalar(1));
    if (a > 0) {
      v = get(a - 1, b) * QuasiTrigPoly::cos();
    } else if (b > 0) {
      v = get(0, b - 1) * QuasiTrigPoly::sin();
    }
    return cache_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::map<std::pair<int, int>, QuasiTrigPoly> cache_;
};

}  // namespace

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::monomial(int i, int j, const Scalar& c) {
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

void BiPoly::add_term(int i, int j, const Scalar& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(i, j), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int BiPoly::min_degree() const {
  int d = terms_.empty() ? 0 : INT32_MAX;
  for (const auto& [k, c] : terms_) d = std::min(d, k.first + k.second);
  return d;
}

int BiPoly::max_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

bool BiPoly::is_homogeneous() const { return min_degree() == max_degree(); }

bool BiPoly::has_y_parity(int sign) const {
  for (const auto& [k, c] : terms_) {
    int s = k.second % 2 == 0 ? 1 : -1;
    if (s != sign) return false;
  }
  return true;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BiPoly BiPoly::scaled(const Scalar& c) const {
  BiPoly r;
  for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
  return r;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) r.add_term(k.first - 1, k.second, c * Scalar(k.first));
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) r.add_term(k.first, k.second - 1, c * Scalar(k.second));
  return r;
}

QuasiTrigPoly BiPoly::on_circle() const {
  CircleMonomials cm;
  QuasiTrigPoly out;
  for (const auto& [k, c] : terms_) out += cm.get(k.first, k.second).scaled(c);
  return out;
}

Complex BiPoly::eval(Complex x, Complex y) const {
  Complex s = 0;
  for (const auto& [k, c] : terms_) s += c.to_complex() * std::pow(x, k.first) * std::pow(y, k.second);
  return s;
}

BiPoly compose(const std::vector<Scalar>& poly, const BiPoly& h) {
  BiPoly result;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    result = result * h;
    result.add_term(0, 0, *it);
  }
  return result;
}

PlanarField::PlanarField(BiPoly f, BiPoly g) : F(std::move(f)), G(std::move(g)) {
  for (const BiPoly* p : {&F, &G})
    for (const auto& [k, c] : p->terms())
      if (k.first + k.second < 2) throw InputError("F and G must not contain constant or linear terms");
}

// ---------------------------------------------------------------------------
// Polar reduction

std::pair<FnSeries, FnSeries> polar_parts(const PlanarField& v, int cutoff) {
  if (cutoff < 1) throw InputError("cutoff must be at least 1");
  CircleMonomials cm;
  std::vector<QuasiTrigPoly> p(static_cast<std::size_t>(cutoff) + 1), q(p.size());
  auto add = [&](std::vector<QuasiTrigPoly>& dst, int k, const QuasiTrigPoly& t, const Scalar& c) {
    if (k <= cutoff) dst[static_cast<std::size_t>(k)] += t.scaled(c);
  };
  // x = r cos, y = r sin; a degree-d monomial of F or G contributes to r^{d-1}.
  for (const auto& [k, c] : v.F.terms()) {
    const int r = k.first + k.second - 1;
    add(p, r, cm.get(k.first + 1, k.second), c);
    add(q, r, cm.get(k.first, k.second + 1), -c);
  }
  for (const auto& [k, c] : v.G.terms()) {
    const int r = k.first + k.second - 1;
    add(p, r, cm.get(k.first, k.second + 1), c);
    add(q, r, cm.get(k.first + 1, k.second), c);
  }
  FnSeries ps(cutoff), qs(cutoff);
  for (int k = 0; k <= cutoff; ++k) {
    ps.set(k, p[static_cast<std::size_t>(k)]);
    qs.set(k, q[static_cast<std::size_t>(k)]);
  }
  return {ps, qs};
}

CoeffSeq polar_reduce(const PlanarField& v, int cutoff) {
  auto [p, q] = polar_parts(v, cutoff);
  FnSeries a = p * q.one_plus_inverse();
  std::vector<CoeffFn> coeffs;
  for (int i = 1; i <= cutoff; ++i) coeffs.push_back(a[i]);
  return CoeffSeq(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Quadratic family

PlanarField dulac_field(const QuadraticParams& l) {
  BiPoly f, g;
  f.add_term(2, 0, -l.l3);
  f.add_term(1, 1, Scalar(2) * l.l2 + l.l5);
  f.add_term(0, 2, l.l6);
  g.add_term(2, 0, l.l2);
  g.add_term(1, 1, Scalar(2) * l.l3 + l.l4);
  g.add_term(0, 2, -l.l2);
  return {f, g};
}

const char* component_name(DulacComponent c) {
  switch (c) {
    case DulacComponent::LotkaVolterra: return "lotka_volterra";
    case DulacComponent::Symmetric: return "symmetric";
    case DulacComponent::Hamiltonian: return "hamiltonian";
    case DulacComponent::Darboux: return "darboux";
  }
  return "";
}

std::set<DulacComponent> dulac_component(const QuadraticParams& l) {
  std::set<DulacComponent> s;
  if (zeroish(l.l3 - l.l6)) s.insert(DulacComponent::LotkaVolterra);
  if (zeroish(l.l2) && zeroish(l.l5)) s.insert(DulacComponent::Symmetric);
  if (zeroish(l.l4) && zeroish(l.l5)) s.insert(DulacComponent::Hamiltonian);
  if (zeroish(l.l5) && zeroish(l.l4 + Scalar(5) * l.l3 - Scalar(5) * l.l6) &&
      zeroish(l.l3 * l.l6 - Scalar(2) * l.l6 * l.l6 - l.l2 * l.l2))
    s.insert(DulacComponent::Darboux);
  return s;
}

std::pair<CoeffFn, CoeffFn> quadratic_fg(const PlanarField& v) {
  for (const BiPoly* p : {&v.F, &v.G})
    if (!p->is_zero() && (p->min_degree() != 2 || p->max_degree() != 2))
      throw PreconditionError("quadratic_fg needs homogeneous quadratic F and G");
  auto [p, q] = polar_parts(v, 1);
  return {p[1], q[1]};
}

CoeffSeq quadratic_seq(const CoeffFn& f, const CoeffFn& g, int cutoff) {
  std::vector<CoeffFn> out;
  CoeffFn term = f;
  const CoeffFn neg_g = fn_scale(g, Scalar(-1));
  for (int i = 1; i <= cutoff; ++i) {
    out.push_back(term);
    term = fn_mul(term, neg_g);
  }
  return CoeffSeq(std::move(out));
}

AbelPair cherkas(const CoeffFn& f, const CoeffFn& g) {
  if (!f.is_symbolic() || !g.is_symbolic()) throw PreconditionError("cherkas needs f and g in symbolic classes");
  AbelPair ab;
  ab.p = fn_sub(f, derivative(g));
  ab.q = fn_scale(fn_mul(f, g), Scalar(-1));
  ab.P = antiderivative(ab.p);
  ab.Q = antiderivative(ab.q);
  return ab;
}

CoeffSeq abel_seq(const AbelPair& ab) { return CoeffSeq({ab.p, ab.q}); }

// ---------------------------------------------------------------------------
// Composition condition

namespace {

// Solves A u = b; returns nullopt when inconsistent.
std::optional<std::vector<GaussQ>> solve_exact(std::vector<std::vector<GaussQ>> a, std::vector<GaussQ> b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    GaussQ inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      GaussQ m = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= m * a[r][j];
      b[i] -= m * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<GaussQ> u(cols);
  for (std::size_t i = 0; i < r; ++i) u[pivot_col[i]] = b[i];
  return u;
}

std::optional<std::vector<Complex>> solve_float(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  double scale = 1e-300;
  for (const auto& row : a)
    for (auto z : row) scale = std::max(scale, std::abs(z));
  for (auto z : b) scale = std::max(scale, std::abs(z));
  const double eps = 1e-9 * scale;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
    if (std::abs(a[p][c]) <= eps) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Complex inv = 1.0 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Complex m = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= m * a[r][j];
      b[i] -= m * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (std::abs(b[i]) > eps) return std::nullopt;
  std::vector<Complex> u(cols);
  for (std::size_t i = 0; i < r; ++i) u[pivot_col[i]] = b[i];
  return u;
}

bool exact_pi_free(const QuasiTrigPoly& f) {
  for (const auto& [k, c] : f.terms())
    if (!c.is_exact() || !c.exact().is_pi_free()) return false;
  return true;
}

GaussQ gauss_of(const Scalar& s) {
  if (s.is_zero()) return GaussQ(0);
  return s.exact().terms().begin()->second;
}

}  // namespace

CompositionResult composition_check(const std::vector<CoeffFn>& atilde, const CoeffFn& q) {
  const QuasiTrigPoly* qt = q.trig();
  if (!qt || !qt->is_pure_trig()) throw PreconditionError("composition_check needs a trigonometric polynomial q");
  if (qt->fourier_degree() == 0) throw PreconditionError("composition_check: q must not be constant");
  CompositionResult res;
  res.ok = true;
  for (const CoeffFn& f : atilde) {
    const QuasiTrigPoly* ft = f.trig();
    if (!ft || !ft->is_pure_trig()) {
      res.ok = false;
      res.polys.emplace_back();
      continue;
    }
    const int deg = ft->fourier_degree() / qt->fourier_degree();
    std::vector<QuasiTrigPoly> powers{QuasiTrigPoly::constant(Scalar(1))};
    for (int j = 1; j <= deg; ++j) powers.push_back(powers.back() * *qt);
    std::set<int> freqs;
    for (const auto& pw : powers)
      for (const auto& [k, c] : pw.terms()) freqs.insert(k.m);
    for (const auto& [k, c] : ft->terms()) freqs.insert(k.m);
    auto coef = [](const QuasiTrigPoly& t, int m) {
      auto it = t.terms().find(TrigKey{0, m});
      return it == t.terms().end() ? Scalar() : it->second;
    };
    bool exact = exact_pi_free(*ft) && exact_pi_free(*qt);
    std::vector<Scalar> poly;
    bool consistent = false;
    if (exact) {
      std::vector<std::vector<GaussQ>> a;
      std::vector<GaussQ> b;
      for (int m : freqs) {
        std::vector<GaussQ> row;
        for (const auto& pw : powers) row.push_back(gauss_of(coef(pw, m)));
        a.push_back(std::move(row));
        b.push_back(gauss_of(coef(*ft, m)));
      }
      if (auto u = solve_exact(std::move(a), std::move(b))) {
        consistent = true;
        for (const auto& g : *u) poly.emplace_back(g);
      }
    } else {
      std::vector<std::vector<Complex>> a;
      std::vector<Complex> b;
      for (int m : freqs) {
        std::vector<Complex> row;
        for (const auto& pw : powers) row.push_back(coef(pw, m).to_complex());
        a.push_back(std::move(row));
        b.push_back(coef(*ft, m).to_complex());
      }
      if (auto u = solve_float(std::move(a), std::move(b))) {
        consistent = true;
        for (auto z : *u) poly.push_back(Scalar::from_float(z));
      }
    }
    while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
    if (!consistent) res.ok = false;
    res.polys.push_back(std::move(poly));
  }
  return res;
}

CoeffFn candidate_q_hamiltonian(const BiPoly& h) { return h.on_circle(); }

CoeffFn candidate_q_symmetric() { return QuasiTrigPoly::cos(); }

}  // namespace csig
