#include "centersig/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "centersig/errors.hpp"

namespace csig {

GaussQ GaussQ::inverse() const {
  mpq_class n = re * re + im * im;
  if (sgn(n) == 0) throw std::domain_error("GaussQ: division by zero");
  return {re / n, -im / n};
}

GaussQ& GaussQ::operator+=(const GaussQ& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussQ& GaussQ::operator/=(const GaussQ& o) { return *this *= o.inverse(); }

mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw InputError("empty rational literal");
  auto dot = s.find('.');
  auto exp_pos = s.find_first_of("eE");
  if (dot != std::string::npos || exp_pos != std::string::npos) {
    // Decimal literal: exact value of the decimal string, not of the nearest double.
    std::string mant = exp_pos == std::string::npos ? s : s.substr(0, exp_pos);
    long exp10 = 0;
    if (exp_pos != std::string::npos) {
      try {
        exp10 = std::stol(s.substr(exp_pos + 1));
      } catch (const std::exception&) {
        throw InputError("bad exponent in '" + text + "'");
      }
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant = mant.substr(1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (char c : mant) {
      if (c == '.') {
        if (seen_dot) throw InputError("bad decimal '" + text + "'");
        seen_dot = true;
      } else if (c >= '0' && c <= '9') {
        digits.push_back(c);
        if (seen_dot) ++frac_digits;
      } else {
        throw InputError("bad decimal '" + text + "'");
      }
    }
    if (digits.empty()) throw InputError("bad decimal '" + text + "'");
    mpz_class num(digits, 10);
    long shift = exp10 - frac_digits;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    mpq_class q = shift >= 0 ? mpq_class(num * p10) : mpq_class(num, p10);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational '" + text + "'");
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

PiPoly::PiPoly(GaussQ c, int pi_degree) {
  if (!c.is_zero()) terms_.emplace(pi_degree, std::move(c));
}

bool PiPoly::is_pi_free() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Complex PiPoly::to_complex() const {
  Complex z = 0;
  for (const auto& [k, c] : terms_) z += c.to_complex() * std::pow(kPi, k);
  return z;
}

void PiPoly::add_term(int k, const GaussQ& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PiPoly& PiPoly::operator*=(const PiPoly& o) {
  if (terms_.empty()) return *this;
  if (o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (terms_.size() == 1 && o.terms_.size() == 1) {
    auto& [k, c] = *terms_.begin();
    const auto& [ok, oc] = *o.terms_.begin();
    GaussQ prod = c * oc;
    int deg = k + ok;
    terms_.clear();
    if (!prod.is_zero()) terms_.emplace(deg, std::move(prod));
    return *this;
  }
  PiPoly out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) out.add_term(k1 + k2, c1 * c2);
  *this = std::move(out);
  return *this;
}

PiPoly PiPoly::operator-() const {
  PiPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

PiPoly PiPoly::times(const GaussQ& c) const {
  PiPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

PiPoly PiPoly::shifted(int pi_power) const {
  PiPoly out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k + pi_power, v);
  return out;
}

// ---------------------------------------------------------------------------

bool Scalar::is_zero() const {
  if (auto p = std::get_if<PiPoly>(&rep_)) return p->is_zero();
  return std::get<Complex>(rep_) == Complex(0.0, 0.0);
}

const PiPoly& Scalar::exact() const {
  if (auto p = std::get_if<PiPoly>(&rep_)) return *p;
  throw std::logic_error("Scalar::exact() on a floating-point value");
}

Complex Scalar::to_complex() const {
  if (auto p = std::get_if<PiPoly>(&rep_)) return p->to_complex();
  return std::get<Complex>(rep_);
}

Scalar Scalar::divided_by(const GaussQ& c, int pi_degree) const {
  if (auto p = std::get_if<PiPoly>(&rep_)) return Scalar(p->times(c.inverse()).shifted(-pi_degree));
  return from_float(std::get<Complex>(rep_) / (c.to_complex() * std::pow(kPi, pi_degree)));
}

Scalar Scalar::times_pi(int k) const {
  if (auto p = std::get_if<PiPoly>(&rep_)) return Scalar(p->shifted(k));
  return from_float(std::get<Complex>(rep_) * std::pow(kPi, k));
}

Scalar Scalar::conj() const {
  if (auto p = std::get_if<PiPoly>(&rep_)) {
    PiPoly out;
    for (const auto& [k, c] : p->terms()) out += PiPoly(c.conj(), k);
    return Scalar(out);
  }
  return from_float(std::conj(std::get<Complex>(rep_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  auto* a = std::get_if<PiPoly>(&rep_);
  auto* b = std::get_if<PiPoly>(&o.rep_);
  if (a && b) {
    *a += *b;
  } else {
    rep_ = to_complex() + o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  auto* a = std::get_if<PiPoly>(&rep_);
  auto* b = std::get_if<PiPoly>(&o.rep_);
  if (a && b) {
    *a -= *b;
  } else {
    rep_ = to_complex() - o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  auto* a = std::get_if<PiPoly>(&rep_);
  auto* b = std::get_if<PiPoly>(&o.rep_);
  if (a && b) {
    *a *= *b;
  } else {
    rep_ = to_complex() * o.to_complex();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (auto p = std::get_if<PiPoly>(&rep_)) return Scalar(-*p);
  return from_float(-std::get<Complex>(rep_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto* pa = std::get_if<PiPoly>(&a.rep_);
  auto* pb = std::get_if<PiPoly>(&b.rep_);
  if (pa && pb) return *pa == *pb;
  return a.to_complex() == b.to_complex();
}

namespace {

std::string superscript(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  if (k < 0) {
    out = "⁻";
    k = -k;
  }
  std::string dec = std::to_string(k);
  for (char c : dec) out += digits[c - '0'];
  return out;
}

std::string pi_factor(int k) {
  if (k == 0) return "";
  if (k == 1) return "π";
  return "π" + superscript(k);
}

// One term c*pi^k without its leading sign; `negative` reports the sign.
std::string format_term(const GaussQ& c, int k, bool& negative) {
  const std::string pf = pi_factor(k);
  auto unit_body = [&](const mpq_class& q, const std::string& unit) {
    mpz_class num = abs(q.get_num());
    std::string s;
    if (num != 1 || (unit.empty() && pf.empty())) s = num.get_str();
    s += unit + pf;
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
  };
  if (sgn(c.im) == 0) {
    negative = sgn(c.re) < 0;
    return unit_body(c.re, "");
  }
  if (sgn(c.re) == 0) {
    negative = sgn(c.im) < 0;
    return unit_body(c.im, "i");
  }
  negative = false;
  std::string s = "(" + c.re.get_str();
  s += sgn(c.im) < 0 ? "-" : "+";
  mpq_class aim = abs(c.im);
  if (aim != 1) s += aim.get_str();
  s += "i)" + pf;
  return s;
}

}  // namespace

std::string Scalar::to_string() const {
  if (auto p = std::get_if<PiPoly>(&rep_)) {
    if (p->is_zero()) return "0";
    std::string out;
    bool first = true;
    // Highest pi-degree first.
    for (auto it = p->terms().rbegin(); it != p->terms().rend(); ++it) {
      bool neg = false;
      std::string body = format_term(it->second, it->first, neg);
      if (first) {
        out += neg ? "-" + body : body;
      } else {
        out += neg ? " - " + body : " + " + body;
      }
      first = false;
    }
    return out;
  }
  Complex z = std::get<Complex>(rep_);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

Scalar pow(const Scalar& base, int e) {
  if (e < 0) throw std::domain_error("Scalar pow: negative exponent");
  Scalar result(1);
  Scalar b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

}  // namespace csig
