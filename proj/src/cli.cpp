#include "centersig/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "centersig/centergen.hpp"
#include "centersig/errors.hpp"
#include "centersig/json_io.hpp"
#include "centersig/oracle.hpp"
#include "centersig/pathgroup.hpp"

namespace csig {

namespace {

struct Options {
  std::string input = "-";
  int cutoff = 8;
  double tol = 1e-12;
  bool exact = false;
  bool csv = false;
  bool force = false;
  bool monodromy = false;
};

json read_json(const Options& o, std::istream& in) {
  std::string text;
  if (o.input == "-") {
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(o.input);
    if (!f) throw InputError("cannot open '" + o.input + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string csv_value(const Scalar& s) {
  if (s.is_exact()) return "\"" + s.to_string() + "\"";
  std::ostringstream os;
  os << std::setprecision(17) << s.to_complex().real() << "," << s.to_complex().imag();
  return os.str();
}

std::string csv_word(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + std::to_string(w[k]);
  return s;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json witness_list(const std::vector<std::pair<Word, Scalar>>& ws) {
  json arr = json::array();
  for (const auto& [w, v] : ws) arr.push_back({{"word", word_to_json(w)}, {"value", scalar_to_json(v)}});
  return arr;
}

void cmd_iint(const Options& o, const Problem& p, std::ostream& out) {
  if (p.words.empty()) throw InputError("iint needs a non-empty \"words\" list");
  if (o.csv) out << "word,value\n";
  json arr = json::array();
  for (const Word& w : p.words) {
    Scalar v = iint(p.a, w);
    if (o.csv) {
      out << csv_word(w) << "," << csv_value(v) << "\n";
    } else {
      arr.push_back({{"word", word_to_json(w)}, {"value", scalar_to_json(v)}});
    }
  }
  if (!o.csv) emit(out, {{"results", arr}});
}

void cmd_signature(const Options& o, const Problem& p, std::ostream& out) {
  Signature sig = signature(p.a, o.cutoff);
  if (o.csv) {
    out << "word,value\n";
    for (const auto& [w, v] : sig.values) out << csv_word(w) << "," << csv_value(v) << "\n";
    return;
  }
  json entries = json::array();
  for (const auto& [w, v] : sig.values) entries.push_back({{"word", word_to_json(w)}, {"value", scalar_to_json(v)}});
  json j = {{"cutoff", o.cutoff}, {"entries", entries}};
  if (o.monodromy) j["monodromy"] = ncseries_to_json(fundamental_solution(sig));
  emit(out, j);
}

void cmd_classify(const Options& o, const Problem& p, std::ostream& out) {
  Classification c = classify(p.a, o.cutoff);
  if (c.center) {
    emit(out, {{"verdict", "center"}, {"cutoff", c.cutoff}});
  } else {
    emit(out, {{"verdict", "focus"}, {"order", c.order}, {"c_n", scalar_to_json(c.value)}});
  }
}

void cmd_universal(const Options& o, const Problem& p, std::ostream& out) {
  UniversalVerdict v = is_universal_center(p.a, o.cutoff);
  emit(out, {{"verdict", v.universal}, {"cutoff", v.cutoff}, {"witnesses", witness_list(v.witnesses)}});
}

void cmd_group(const Options& o, const Problem& p, std::ostream& out) {
  if (!p.op) throw InputError("group needs \"op\": concat, inverse, equivalent, or scale");
  const std::string& op = *p.op;
  auto need_b = [&]() -> const CoeffSeq& {
    if (!p.b) throw InputError("op '" + op + "' needs operand \"b\"");
    return *p.b;
  };
  if (op == "concat") {
    emit(out, seq_to_json(concat(p.a, need_b())));
  } else if (op == "inverse") {
    emit(out, seq_to_json(inverse(p.a)));
  } else if (op == "equivalent") {
    Equivalence e = equivalent(p.a, need_b(), o.cutoff);
    json ws = json::array();
    for (const auto& [w, va, vb] : e.witnesses)
      ws.push_back({{"word", word_to_json(w)}, {"a", scalar_to_json(va)}, {"b", scalar_to_json(vb)}});
    emit(out, {{"equivalent_up_to", e.cutoff}, {"verdict", e.equivalent}, {"witnesses", ws}});
  } else if (op == "scale") {
    if (!p.t) throw InputError("op 'scale' needs \"t\"");
    std::string mode = p.mode.value_or("path");
    if (mode != "path" && mode != "graded") throw InputError("\"mode\" must be path or graded");
    emit(out, seq_to_json(scale(p.a, *p.t, mode == "path" ? ScaleMode::Path : ScaleMode::Graded)));
  } else {
    throw InputError("unknown group op '" + op + "'");
  }
}

void cmd_gen_center(const Options& o, const Problem& p, std::ostream& out) {
  if (p.u.has_value() == p.d.has_value()) throw InputError("gen-center needs exactly one of \"u\" or \"f\"");
  if (p.u) {
    emit(out, seq_to_json(from_u_sequence(*p.u, o.cutoff)));
  } else {
    if (p.d->size() > static_cast<std::size_t>(o.cutoff)) throw InputError("more d_k than the cutoff");
    emit(out, seq_to_json(t_map(ReturnSeries(o.cutoff, *p.d), o.cutoff)));
  }
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

void cmd_oracle(const Options& o, const Problem& p, std::ostream& out) {
  OdeTolerance tol;
  tol.rtol = o.tol;
  const double radius = safe_radius(p.a);
  if (p.r0) {
    Trajectory t = trajectory(p.a, *p.r0, tol, o.force);
    json j = {{"r0", complex_json(*p.r0)}, {"safe_radius", radius}, {"v_2pi", complex_json(t.end)}, {"blew_up", t.blew_up}};
    emit(out, j);
    return;
  }
  std::vector<double> radii = p.radii;
  if (radii.empty())
    for (double f : {0.1, 0.2, 0.4, 0.8}) radii.push_back(f * radius);
  DisplacementScan scan = displacement_scan(p.a, radii, tol);
  if (o.csv) {
    out << "r,re_delta,im_delta\n" << std::setprecision(17);
    for (const auto& d : scan.points) out << d.r << "," << d.delta.real() << "," << d.delta.imag() << "\n";
    return;
  }
  const int n = std::min(o.cutoff, 16);
  std::vector<Complex> cs = variational_all(p.a, n, tol);
  json coeffs = json::array();
  for (int k = 1; k <= n; ++k) coeffs.push_back({{"n", k}, {"value", complex_json(cs[static_cast<std::size_t>(k - 1)])}});
  json pts = json::array();
  for (const auto& d : scan.points) pts.push_back({{"r", d.r}, {"delta", complex_json(d.delta)}});
  emit(out, {{"safe_radius", radius},
             {"coefficients", coeffs},
             {"scan", pts},
             {"verdict", scan.center_like ? "center-like" : "not-center"}});
}

void cmd_quadratic(const Options& o, const Problem& p, std::ostream& out) {
  if (!p.lambda) throw InputError("quadratic needs \"lambda\": [l2, l3, l4, l5, l6]");
  const PlanarField field = dulac_field(*p.lambda);
  json comps = json::array();
  for (DulacComponent c : dulac_component(*p.lambda)) comps.push_back(component_name(c));
  const CoeffSeq polar = polar_reduce(field, o.cutoff);
  Classification cl = classify(polar, o.cutoff);
  UniversalVerdict polar_u = is_universal_center(polar, o.cutoff);
  auto [f, g] = quadratic_fg(field);
  const CoeffSeq abel = abel_seq(cherkas(f, g));
  Classification abel_cl = classify(abel, o.cutoff);
  UniversalVerdict abel_u = is_universal_center(abel, o.cutoff);
  json pol = {{"verdict", cl.center ? "center" : "focus"}, {"universal", polar_u.universal}};
  if (!cl.center) {
    pol["order"] = cl.order;
    pol["c_n"] = scalar_to_json(cl.value);
  }
  json ab = {{"verdict", abel_cl.center ? "center" : "focus"}, {"universal", abel_u.universal}};
  if (!abel_cl.center) {
    ab["order"] = abel_cl.order;
    ab["c_n"] = scalar_to_json(abel_cl.value);
  }
  emit(out, {{"cutoff", o.cutoff}, {"components", comps}, {"polar", pol}, {"abel", ab}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"centersig: center conditions via iterated-integral signatures", "centersig"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;
  auto add = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("input", o.input, "problem JSON file ('-' for stdin)");
    sub->add_option("--cutoff", o.cutoff, "weight cutoff N")->check(CLI::Range(1, 24));
    sub->add_option("--tol", o.tol, "ODE relative tolerance")->check(CLI::Range(1e-13, 1e-3));
    sub->add_flag("--exact", o.exact, "reject sampled coefficients");
    sub->add_flag("--csv", o.csv, "CSV output where supported");
    sub->callback([&chosen, name] { chosen = name; });
    return sub;
  };
  add("iint", "basic iterated integrals for listed words");
  add("signature", "all iterated integrals up to the cutoff")->add_flag("--monodromy", o.monodromy,
                                                                        "include the truncated monodromy series");
  add("classify", "center or focus up to the cutoff");
  add("universal", "universal center test up to the cutoff");
  add("group", "concat, inverse, equivalent, scale");
  add("gen-center", "center from a u-sequence or a return series");
  add("oracle", "numerical ODE oracle")->add_flag("--force", o.force, "integrate outside the safe radius");
  add("quadratic", "Dulac-Kapteyn quadratic family report");
  add("selftest", "embedded invariant suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (chosen == "selftest") return selftest(out) ? 0 : 1;
    const Problem p = parse_problem(read_json(o, in), o.exact);
    if (chosen == "iint") cmd_iint(o, p, out);
    if (chosen == "signature") cmd_signature(o, p, out);
    if (chosen == "classify") cmd_classify(o, p, out);
    if (chosen == "universal") cmd_universal(o, p, out);
    if (chosen == "group") cmd_group(o, p, out);
    if (chosen == "gen-center") cmd_gen_center(o, p, out);
    if (chosen == "oracle") cmd_oracle(o, p, out);
    if (chosen == "quadratic") cmd_quadratic(o, p, out);
    return 0;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace csig
