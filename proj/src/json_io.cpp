#include "centersig/json_io.hpp"

#include <cctype>
#include <cmath>
#include <cstring>

#include "centersig/errors.hpp"

namespace csig {

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string text) : s_(std::move(text)) {}

  QuasiTrigPoly parse() {
    QuasiTrigPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("expression '" + s_ + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '.' ||
           static_cast<unsigned char>(c) == 0xCF;  // UTF-8 lead byte of π
  }

  QuasiTrigPoly expr() {
    QuasiTrigPoly v = term();
    for (;;) {
      if (accept("+")) {
        v += term();
      } else if (accept("-")) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  QuasiTrigPoly term() {
    QuasiTrigPoly v = unary();
    for (;;) {
      if (accept("*")) {
        v = v * unary();
      } else if (accept("/")) {
        v = divide(v, unary());
      } else if (starts_atom()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  QuasiTrigPoly unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  QuasiTrigPoly power() {
    QuasiTrigPoly base = atom();
    if (!accept("^")) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer");
    int e = std::stoi(s_.substr(start, pos_ - start));
    QuasiTrigPoly r = QuasiTrigPoly::constant(Scalar(1));
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
  }

  QuasiTrigPoly divide(const QuasiTrigPoly& num, const QuasiTrigPoly& den) {
    if (den.terms().size() != 1 || den.terms().begin()->first != TrigKey{0, 0}) fail("division by a non-constant");
    const Scalar& c = den.terms().begin()->second;
    if (!c.is_exact() || !c.exact().is_monomial()) fail("division only by c*pi^k constants");
    const auto& [deg, g] = *c.exact().terms().begin();
    QuasiTrigPoly out;
    for (const auto& [k, v] : num.terms()) out.add_term(k, v.divided_by(g, deg));
    return out;
  }

  // Integer multiple of x (sin/cos) or of i*x (exp).
  int frequency(const QuasiTrigPoly& arg, bool imaginary) {
    if (arg.terms().size() != 1 || arg.terms().begin()->first != TrigKey{1, 0})
      fail("function argument must be k*x" + std::string(imaginary ? " times i" : ""));
    const Scalar& c = arg.terms().begin()->second;
    if (!c.is_exact() || !c.exact().is_pi_free()) fail("non-integer frequency");
    GaussQ g = c.exact().terms().begin()->second;
    mpq_class k = imaginary ? g.im : g.re;
    mpq_class other = imaginary ? g.re : g.im;
    if (sgn(other) != 0 || k.get_den() != 1 || !k.get_num().fits_sint_p()) fail("non-integer frequency");
    return static_cast<int>(k.get_num().get_si());
  }

  QuasiTrigPoly function(const std::string& name) {
    if (!accept("(")) {
      if (name == "exp") fail("exp needs an argument");
      return name == "sin" ? QuasiTrigPoly::sin() : QuasiTrigPoly::cos();
    }
    QuasiTrigPoly arg = expr();
    if (!accept(")")) fail("missing ')'");
    if (name == "exp") return QuasiTrigPoly::exp_i(frequency(arg, true));
    int k = frequency(arg, false);
    return name == "sin" ? QuasiTrigPoly::sin(k) : QuasiTrigPoly::cos(k);
  }

  QuasiTrigPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (accept("(")) {
      QuasiTrigPoly v = expr();
      if (!accept(")")) fail("missing ')'");
      return v;
    }
    for (const char* fn : {"sin", "cos", "exp"})
      if (accept(fn)) return function(fn);
    if (accept("pi") || accept("π")) return QuasiTrigPoly::constant(Scalar::pi_power(superscript()));
    if (accept("x")) return QuasiTrigPoly::x_power(1);
    if (accept("i")) return QuasiTrigPoly::constant(Scalar::i_unit());
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E') && pos_ + 1 < s_.size() &&
          (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '-' || s_[pos_ + 1] == '+')) {
        pos_ += 2;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return QuasiTrigPoly::constant(Scalar(GaussQ(parse_rational(s_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + s_.substr(pos_, 1) + "'");
  }

  // Optional unicode superscript exponent such as "²" or "⁻¹"; defaults to 1.
  int superscript() {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    bool neg = accept("⁻");
    int value = 0;
    bool any = false;
    for (bool progress = true; progress;) {
      progress = false;
      for (int d = 0; d < 10; ++d) {
        if (s_.compare(pos_, std::strlen(digits[d]), digits[d]) == 0) {
          pos_ += std::strlen(digits[d]);
          value = value * 10 + d;
          any = progress = true;
          break;
        }
      }
    }
    if (!any) {
      if (neg) fail("dangling superscript minus");
      return 1;
    }
    return neg ? -value : value;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

Scalar constant_of(const QuasiTrigPoly& f, const std::string& text) {
  if (f.is_zero()) return Scalar();
  if (f.terms().size() != 1 || f.terms().begin()->first != TrigKey{0, 0})
    throw InputError("'" + text + "' is not a constant");
  return f.terms().begin()->second;
}

std::string breakpoint_text(const Breakpoint& b) {
  const mpq_class& q = *b.exact_multiple();
  return Scalar::pi_power(1, GaussQ(q)).to_string();
}

Breakpoint breakpoint_from_json(const json& j) {
  if (j.is_number()) return Breakpoint::radians(j.get<double>());
  if (!j.is_string()) throw InputError("breakpoints must be strings (multiples of pi) or numbers");
  Scalar s = constant_of(parse_expression(j.get<std::string>()), j.get<std::string>());
  if (s.is_zero()) return Breakpoint::zero();
  const PiPoly& p = s.exact();
  if (!p.is_monomial() || p.terms().begin()->first != 1 || sgn(p.terms().begin()->second.im) != 0)
    throw InputError("breakpoint '" + j.get<std::string>() + "' is not a rational multiple of pi");
  return Breakpoint::pi_multiple(p.terms().begin()->second.re);
}

void check_fields(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be an object");
  for (const auto& [key, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw InputError(std::string("unknown field '") + key + "' in " + what);
  }
}

const json& require(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "' in " + what);
  return *it;
}

Scalar rational_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return Scalar();
  return scalar_from_json(*it);
}

QuasiTrigPoly terms_from_json(const json& arr) {
  if (!arr.is_array()) throw InputError("\"terms\" must be an array");
  QuasiTrigPoly f;
  for (const auto& t : arr) {
    check_fields(t, {"p", "m", "re", "im", "pi"}, "trig term");
    int p = t.value("p", 0), m = t.value("m", 0), deg = t.value("pi", 0);
    if (p < 0) throw InputError("trig term power p must be non-negative");
    Scalar re = rational_field(t, "re"), im = rational_field(t, "im");
    Scalar c = (re + im * Scalar::i_unit()).times_pi(deg);
    f.add_term({p, m}, c);
  }
  return f;
}

json terms_to_json(const QuasiTrigPoly& f) {
  json arr = json::array();
  for (const auto& [k, c] : f.terms()) {
    if (c.is_exact()) {
      for (const auto& [deg, g] : c.exact().terms()) {
        json t = {{"p", k.p}, {"m", k.m}, {"re", rational_to_string(g.re)}, {"im", rational_to_string(g.im)}};
        if (deg != 0) t["pi"] = deg;
        arr.push_back(std::move(t));
      }
    } else {
      Complex z = c.to_complex();
      arr.push_back({{"p", k.p}, {"m", k.m}, {"re", z.real()}, {"im", z.imag()}});
    }
  }
  return arr;
}

QuasiTrigPoly piece_from_json(const json& j) {
  if (j.is_string()) return parse_expression(j.get<std::string>());
  if (j.is_array()) {
    QuasiTrigPoly f;
    for (std::size_t k = 0; k < j.size(); ++k) f.add_term({static_cast<int>(k), 0}, scalar_from_json(j[k]));
    return f;
  }
  check_fields(j, {"terms"}, "piece");
  return terms_from_json(require(j, "terms", "piece"));
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_string()) return scalar_from_json(j).to_complex();
  throw InputError("expected a number, [re, im], or an exact string");
}

}  // namespace

QuasiTrigPoly parse_expression(const std::string& text) { return ExprParser(text).parse(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return constant_of(parse_expression(j.get<std::string>()), j.get<std::string>());
  if (j.is_number()) return Scalar::from_float(j.get<double>());
  if (j.is_array()) return Scalar::from_float(complex_from_json(j));
  throw InputError("expected a scalar");
}

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return {{"exact", s.to_string()}};
  Complex z = s.to_complex();
  return {{"float", {z.real(), z.imag()}}};
}

CoeffFn fn_from_json(const json& j) {
  if (j.is_string()) return parse_expression(j.get<std::string>());
  if (j.is_number()) return QuasiTrigPoly::constant(Scalar::from_float(j.get<double>()));
  if (!j.is_object()) throw InputError("coefficient function must be a string or an object");
  const std::string kind = require(j, "kind", "function").get<std::string>();
  if (kind == "trig") {
    check_fields(j, {"kind", "terms"}, "trig function");
    return terms_from_json(require(j, "terms", "trig function"));
  }
  if (kind == "pw") {
    check_fields(j, {"kind", "breaks", "pieces"}, "pw function");
    const json& breaks = require(j, "breaks", "pw function");
    const json& pieces = require(j, "pieces", "pw function");
    if (!breaks.is_array() || !pieces.is_array() || breaks.size() != pieces.size())
      throw InputError("pw function needs equally long \"breaks\" and \"pieces\" arrays");
    std::vector<PiecewisePoly::Piece> out;
    for (std::size_t k = 0; k < breaks.size(); ++k) out.push_back({breakpoint_from_json(breaks[k]), piece_from_json(pieces[k])});
    return PiecewisePoly(std::move(out));
  }
  if (kind == "sampled") {
    check_fields(j, {"kind", "values", "at_zero"}, "sampled function");
    const json& vals = require(j, "values", "sampled function");
    if (!vals.is_array()) throw InputError("\"values\" must be an array");
    std::vector<Complex> v;
    for (const auto& x : vals) v.push_back(complex_from_json(x));
    if (v.size() < Sampled::kMinGrid) throw InputError("sampled function needs at least 64 values");
    if (auto it = j.find("at_zero"); it != j.end()) {
      v.insert(v.begin(), complex_from_json(*it));
      return Sampled(std::move(v));
    }
    return Sampled::from_periodic(std::move(v));
  }
  throw InputError("unknown function kind '" + kind + "'");
}

json fn_to_json(const CoeffFn& f) {
  if (auto t = f.trig()) return {{"kind", "trig"}, {"terms", terms_to_json(*t)}};
  if (auto p = f.piecewise()) {
    json breaks = json::array(), pieces = json::array();
    for (const auto& pc : p->pieces()) {
      if (pc.end.is_exact()) {
        breaks.push_back(breakpoint_text(pc.end));
      } else {
        breaks.push_back(pc.end.value());
      }
      pieces.push_back({{"terms", terms_to_json(pc.f)}});
    }
    return {{"kind", "pw"}, {"breaks", breaks}, {"pieces", pieces}};
  }
  const auto& v = f.sampled()->values();
  json vals = json::array();
  for (std::size_t k = 1; k < v.size(); ++k) vals.push_back({v[k].real(), v[k].imag()});
  return {{"kind", "sampled"}, {"values", vals}, {"at_zero", {v[0].real(), v[0].imag()}}};
}

Word word_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("a word must be a non-empty integer array");
  Word w;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("word parts must be integers");
    w.push_back(x.get<int>());
  }
  validate_word(w);
  return w;
}

json word_to_json(const Word& w) { return json(w); }

std::vector<CoeffFn> coeffs_from_json(const json& j) {
  std::vector<CoeffFn> out;
  if (j.is_array()) {
    for (const auto& f : j) out.push_back(fn_from_json(f));
    return out;
  }
  if (!j.is_object()) throw InputError("coefficients must be an array or an index-keyed object");
  for (const auto& [key, f] : j.items()) {
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(key, &used);
      if (used != key.size()) idx = 0;
    } catch (const std::exception&) {
      idx = 0;
    }
    if (idx < 1 || idx > 64) throw InputError("coefficient key '" + key + "' must be an index 1..64");
    if (out.size() < static_cast<std::size_t>(idx)) out.resize(static_cast<std::size_t>(idx));
    out[static_cast<std::size_t>(idx - 1)] = fn_from_json(f);
  }
  return out;
}

json seq_to_json(const CoeffSeq& a) {
  json arr = json::array();
  for (const auto& f : a.coeffs()) arr.push_back(fn_to_json(f));
  return {{"schema", 1}, {"a", arr}, {"bound", a.bound()}};
}

json ncseries_to_json(const NCSeries& f) {
  json terms = json::array();
  for (int i = 0; i <= f.cutoff(); ++i)
    for (const auto& [mono, c] : f.degree(i)) terms.push_back({{"deg", i}, {"mono", mono}, {"value", scalar_to_json(c)}});
  return {{"N", f.cutoff()}, {"terms", terms}};
}

namespace {

CoeffSeq seq_from(const json& coeffs, const json* bound, bool exact_only) {
  std::vector<CoeffFn> fns = coeffs_from_json(coeffs);
  if (exact_only)
    for (const auto& f : fns)
      if (f.sampled()) throw InputError("--exact: sampled coefficients are not allowed");
  std::optional<double> l;
  if (bound) {
    if (!bound->is_number()) throw InputError("\"bound\" must be a number");
    l = bound->get<double>();
  }
  return CoeffSeq(std::move(fns), l);
}

}  // namespace

Problem parse_problem(const json& j, bool exact_only) {
  check_fields(j, {"schema", "a", "bound", "b", "b_bound", "words", "op", "u", "f", "radii", "r0", "lambda", "t", "mode"},
               "problem");
  if (auto it = j.find("schema"); it != j.end() && !(it->is_number_integer() && it->get<int>() == 1))
    throw InputError("unsupported schema version (expected 1)");
  Problem p;
  auto find = [&](const char* k) -> const json* {
    auto it = j.find(k);
    return it == j.end() ? nullptr : &*it;
  };
  if (const json* a = find("a")) p.a = seq_from(*a, find("bound"), exact_only);
  if (const json* b = find("b")) p.b = seq_from(*b, find("b_bound"), exact_only);
  if (const json* w = find("words")) {
    if (!w->is_array()) throw InputError("\"words\" must be an array of integer arrays");
    for (const auto& x : *w) p.words.push_back(word_from_json(x));
  }
  if (const json* op = find("op")) p.op = op->get<std::string>();
  if (const json* mode = find("mode")) p.mode = mode->get<std::string>();
  if (const json* u = find("u")) {
    if (!u->is_array()) throw InputError("\"u\" must be an array");
    std::vector<CoeffFn> fns;
    for (const auto& x : *u) fns.push_back(fn_from_json(x));
    p.u = std::move(fns);
  }
  if (const json* f = find("f")) {
    check_fields(*f, {"d"}, "\"f\"");
    const json& d = require(*f, "d", "\"f\"");
    if (!d.is_array()) throw InputError("\"d\" must be an array");
    std::vector<Scalar> ds;
    for (const auto& x : d) ds.push_back(scalar_from_json(x));
    p.d = std::move(ds);
  }
  if (const json* r = find("radii")) {
    if (!r->is_array()) throw InputError("\"radii\" must be an array of numbers");
    for (const auto& x : *r) {
      if (!x.is_number()) throw InputError("\"radii\" must be an array of numbers");
      p.radii.push_back(x.get<double>());
    }
  }
  if (const json* r0 = find("r0")) p.r0 = complex_from_json(*r0);
  if (const json* t = find("t")) p.t = scalar_from_json(*t);
  if (const json* l = find("lambda")) {
    if (!l->is_array() || l->size() != 5) throw InputError("\"lambda\" must list l2..l6 (5 entries)");
    p.lambda = QuadraticParams{scalar_from_json((*l)[0]), scalar_from_json((*l)[1]), scalar_from_json((*l)[2]),
                               scalar_from_json((*l)[3]), scalar_from_json((*l)[4])};
  }
  return p;
}

}  // namespace csig
