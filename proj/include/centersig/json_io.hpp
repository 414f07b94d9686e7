#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "centersig/freealg.hpp"
#include "centersig/planar.hpp"
#include "centersig/returnmap.hpp"

namespace csig {

using json = nlohmann::ordered_json;

/// Exact expression in x: rationals, decimals, i, pi, x, sin(kx), cos(kx),
/// exp(ikx), with + - * / ^ and implicit multiplication ("2sin(3x)").
/// Bare "sin" and "cos" mean sin x and cos x.
QuasiTrigPoly parse_expression(const std::string& text);

/// String: exact constant expression. Number: float. [re, im]: float complex.
Scalar scalar_from_json(const json& j);
/// {"exact": "2π²/3"} or {"float": [re, im]}.
json scalar_to_json(const Scalar& s);

CoeffFn fn_from_json(const json& j);
json fn_to_json(const CoeffFn& f);

Word word_from_json(const json& j);
json word_to_json(const Word& w);

/// Element of X: an array [a_1, a_2, ...] or an object {"1": a_1, "3": a_3}.
std::vector<CoeffFn> coeffs_from_json(const json& j);
/// Problem file {"schema": 1, "a": [...], "bound": l} for a sequence.
json seq_to_json(const CoeffSeq& a);

json ncseries_to_json(const NCSeries& f);

/// Fields shared by every subcommand's problem file. Unknown fields are rejected.
struct Problem {
  CoeffSeq a;
  std::optional<CoeffSeq> b;
  std::vector<Word> words;
  std::optional<std::string> op;
  std::optional<std::vector<CoeffFn>> u;
  std::optional<std::vector<Scalar>> d;
  std::vector<double> radii;
  std::optional<Complex> r0;
  std::optional<QuadraticParams> lambda;
  std::optional<Scalar> t;
  std::optional<std::string> mode;
};

/// Parses and validates a problem; `exact_only` rejects Sampled coefficients.
Problem parse_problem(const json& j, bool exact_only = false);

}  // namespace csig
