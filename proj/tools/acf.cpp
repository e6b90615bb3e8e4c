// acf: command-line front end over the continued-fraction and Brjuno library.
//
// Exit codes: 0 ok, 1 unexpected failure, 2 parse or domain error,
// 3 precision cap reached, 4 unwritable output, 5 sweep threshold exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acf/acf.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace acf;

namespace {

enum Exit { ok = 0, failure = 1, bad_input = 2, precision = 3, unwritable = 4, over_threshold = 5 };

struct unwritable_output : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  long bits = 128;
  long cap = 65536;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 0;

  Precision prec() const { return {bits, cap}; }
  bool as_json() const { return format == "json"; }
};

Rational parse_rational(const std::string& s) {
  const RealValue v = parse_real(s);
  const Rational* q = v.as_rational();
  if (!q) throw parse_error("expected a rational, got '" + s + "'");
  return *q;
}

std::vector<Rational> parse_alpha_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_rational(item));
  return out;
}

// Writes to --out, or stdout when none is given. Everything is rendered to a
// string first so a failed run leaves no partial file.
void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw unwritable_output("cannot write '" + g.out + "'");
  f << text;
  if (!f.flush()) throw unwritable_output("cannot write '" + g.out + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string str(const Integer& z) { return z.get_str(); }

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string s;
  for (const auto& c : cells) s += (s.empty() ? "" : ",") + c;
  return s + "\n";
}

json terms_json(const std::vector<Term>& terms) {
  json a = json::array();
  for (const auto& t : terms) a.push_back({{"n", t.n}, {"beta_prev", t.beta_prev}, {"x_n", t.x_n}, {"term", t.term}});
  return a;
}

std::string terms_csv(const std::vector<Term>& terms) {
  std::string s = "n,beta_prev,x_n,term\n";
  for (const auto& t : terms) s += csv_line({std::to_string(t.n), fmt15(t.beta_prev), fmt15(t.x_n), fmt15(t.term)});
  return s;
}

// expand ---------------------------------------------------------------------

std::string expand_alpha(const Globals& g, const RealValue& x, const Rational& alpha, std::size_t n) {
  const AlphaExpansion e = alpha_expand(x, AlphaParams(alpha), n, g.prec());
  if (g.as_json()) {
    json j = {{"x", x.to_string()}, {"alpha", alpha.get_str()}, {"integer_part", integer_json(e.integer_part)},
              {"eps0", e.eps0}, {"terminated", e.terminated}};
    json digits = json::array(), conv = json::array(), betas = json::array();
    for (const auto& d : e.digits) digits.push_back({{"a", integer_json(d.a)}, {"eps", d.eps}});
    for (const auto& c : e.convergents) conv.push_back({{"p", integer_json(c.p)}, {"q", integer_json(c.q)}});
    for (const auto& b : e.betas) betas.push_back(to_double(b));
    j["digits"] = digits;
    j["convergents"] = conv;
    j["betas"] = betas;
    return dump(j);
  }
  std::string s = "n,a,eps,p,q,beta\n";
  for (std::size_t k = 0; k < e.convergents.size(); ++k) {
    const Integer& a = k == 0 ? e.integer_part : e.digits[k - 1].a;
    const int eps = k == 0 ? e.eps0 : e.digits[k - 1].eps;
    s += csv_line({std::to_string(k), str(a), std::to_string(eps), str(e.convergents[k].p), str(e.convergents[k].q),
                   fmt15(to_double(e.betas[k]))});
  }
  return s;
}

std::string expand_minus(const Globals& g, const RealValue& x, std::size_t n) {
  // One digit beyond n decides whether index n lies in I_*.
  const MinusExpansion e = minus_expand(x, n + 1, g.prec());
  const Integer shift = floor(x - e.x0, g.prec());
  auto in_star = [&](std::size_t k) { return e.digits[k] == 2; };
  if (g.as_json()) {
    json j = {{"x", x.to_string()}, {"alpha", "0"}, {"integer_part", integer_json(shift)},
              {"reached_one", e.reached_one}};
    json digits = json::array(), conv = json::array(), betas = json::array(), star = json::array();
    for (std::size_t k = 0; k < n; ++k) digits.push_back(integer_json(e.digits[k]));
    for (std::size_t k = 0; k <= n; ++k) {
      conv.push_back({{"p", integer_json(e.p_star[k])}, {"q", integer_json(e.q_star[k])}});
      betas.push_back(to_double(e.betas[k]));
      if (in_star(k)) star.push_back(k);
    }
    j["digits"] = digits;
    j["convergents"] = conv;
    j["betas"] = betas;
    j["I_star"] = star;
    return dump(j);
  }
  std::string s = "n,b,p_star,q_star,beta_star,in_I_star\n";
  for (std::size_t k = 0; k <= n; ++k)
    s += csv_line({std::to_string(k), str(k == 0 ? shift : e.digits[k - 1]), str(e.p_star[k]), str(e.q_star[k]),
                   fmt15(to_double(e.betas[k])), in_star(k) ? "1" : "0"});
  return s;
}

// brjuno / b0 ------------------------------------------------------------------

json result_json(const RealValue& x, const BrjunoResult& r) {
  json j = {{"x", x.to_string()},
            {"N", r.N},
            {"value", r.value},
            {"tail_estimate", r.tail_estimate},
            {"converged", r.converged}};
  if (r.companion_q_series) j["companion_q_series"] = *r.companion_q_series;
  return j;
}

// sweep ----------------------------------------------------------------------

json report_json(const BoundReport& r) {
  json j = {{"kind", r.kind},
            {"alpha", r.alpha.get_str()},
            {"u", r.u},
            {"N", r.N},
            {"corpus_size", r.corpus_size},
            {"observed_sup", r.observed_sup},
            {"threshold", r.threshold},
            {"stable", r.stable},
            {"worst_input", r.worst_input},
            {"doubled_sup", r.doubled_sup}};
  if (!r.aux.empty() || r.aux_threshold > 0) {
    j["log_q_sum_sup"] = r.aux_sup;
    j["log_q_sum_threshold"] = r.aux_threshold;
  }
  return j;
}

std::string figure_json(const Figure& f) {
  json rows = json::array();
  for (const auto& r : f.rows) {
    json row = {{"x", r.x}, {"label", r.label}};
    for (std::size_t i = 0; i < r.values.size(); ++i) row[f.header[i + 1]] = r.values[i];
    rows.push_back(row);
  }
  return dump({{"figure", f.which}, {"header", f.header}, {"rows", rows}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions, Brjuno functions and corpus sweeps"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--precision-bits", g.bits, "starting precision for adaptive reals")->check(CLI::PositiveNumber);
  app.add_option("--precision-cap", g.cap, "precision cap for adaptive reals")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--seed", g.seed, "corpus seed");

  std::string x_text, alpha_text = "1", u_name = "log";
  std::size_t n = 20, N = 200, b0_digits = default_b0_digits;

  auto* expand = app.add_subcommand("expand", "alpha-expansion (alpha = 0: by-excess expansion)");
  expand->add_option("--x", x_text, "p/q, decimal, or (a+b*sqrt(d))/c")->required();
  expand->add_option("--alpha", alpha_text, "alpha in [0,1]");
  expand->add_option("--n", n, "number of digits")->check(CLI::PositiveNumber);

  auto* brjuno = app.add_subcommand("brjuno", "truncated (alpha,u)-Brjuno sum and its term ledger");
  brjuno->add_option("--x", x_text)->required();
  brjuno->add_option("--alpha", alpha_text, "alpha in (0,1]");
  brjuno->add_option("--u", u_name, "log, inv_sqrt or power(sigma)");
  brjuno->add_option("--N", N, "truncation index");

  auto* b0 = app.add_subcommand("b0", "semi-Brjuno function B_0 and its q-series");
  b0->add_option("--x", x_text)->required();
  b0->add_option("--N", b0_digits, "digit budget");

  std::string digits_text, to = "regular", side_name;
  auto* dict = app.add_subcommand("dict", "convert between by-excess and regular digit streams");
  dict->add_option("--digits", digits_text, "digits; end with 'tail2' for 2 repeated or '...' if truncated")
      ->required();
  dict->add_option("--to", to, "regular, minus or complement")->check(CLI::IsMember({"regular", "minus", "complement"}));
  dict->add_option("--side", side_name, "above or below (one-half)")->check(CLI::IsMember({"above", "below"}));

  std::string kind_text, alpha_prime_text = "1";
  std::size_t corpus_size = 1020;
  std::optional<double> threshold;
  auto* sweep = app.add_subcommand("sweep", "observed suprema of difference functions over a corpus");
  sweep->add_option("--kind", kind_text, "alpha_vs_1, b0_vs_qseries, b1_vs_b0even, logq_vs_loga, brjuno_vs_qseries")
      ->required();
  sweep->add_option("--corpus-size", corpus_size);
  sweep->add_option("--alpha", alpha_text);
  sweep->add_option("--alpha-prime", alpha_prime_text);
  sweep->add_option("--u", u_name);
  sweep->add_option("--N", N, "truncation index for alpha > 0");
  sweep->add_option("--b0-digits", b0_digits, "digit budget for B_0");
  sweep->add_option("--threshold", threshold);

  int which = 0;
  std::string lo_text = "0", hi_text = "1";
  std::size_t points = 4096;
  std::vector<std::string> inject;
  std::string fig_u = "inv_sqrt";
  auto* figure = app.add_subcommand("figure", "figure-grid CSV");
  figure->add_option("--which", which, "1: B_{alpha,u}, 2: B_0, 3: B_0 even part and B_1, 4: their difference")
      ->required()
      ->check(CLI::Range(1, 4));
  figure->add_option("--lo", lo_text);
  figure->add_option("--hi", hi_text);
  figure->add_option("--points", points)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  figure->add_option("--alpha", alpha_text);
  figure->add_option("--u", fig_u);
  figure->add_option("--N", N);
  figure->add_option("--b0-digits", b0_digits);
  figure->add_option("--inject", inject, "extra abscissae (e.g. surds) merged into the grid");

  std::string in_path;
  int column = -1;
  auto* holder = app.add_subcommand("holder", "Hoelder exponent from a figure CSV");
  holder->add_option("--in", in_path)->required();
  holder->add_option("--column", column, "value column (default: last)");

  std::string alphas_text = "1,0.5,0";
  std::size_t digit_target = 10000, reps = 3;
  auto* benchc = app.add_subcommand("bench", "expansion throughput");
  benchc->add_option("--alphas", alphas_text, "comma-separated alphas (may be empty)");
  benchc->add_option("--digits", digit_target)->check(CLI::PositiveNumber);
  benchc->add_option("--repetitions", reps)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*expand) {
      const RealValue x = parse_real(x_text);
      const Rational alpha = parse_rational(alpha_text);
      emit(g, alpha == 0 ? expand_minus(g, x, n) : expand_alpha(g, x, alpha, n));
    } else if (*brjuno) {
      const RealValue x = parse_real(x_text);
      const SingularityU u = make_u(u_name);
      const Rational alpha = parse_rational(alpha_text);
      const BrjunoResult r = brjuno_sum(x, alpha, u, N, g.prec());
      if (g.as_json()) {
        json j = result_json(x, r);
        j["alpha"] = alpha.get_str();
        j["u"] = u.name;
        j["terms"] = terms_json(r.terms);
        emit(g, dump(j));
      } else {
        emit(g, terms_csv(r.terms));
        std::cerr << "value=" << fmt15(r.value) << " converged=" << r.converged << "\n";
      }
    } else if (*b0) {
      const RealValue x = parse_real(x_text);
      const SemiBrjunoResult r = semi_brjuno(x, b0_digits, g.prec());
      if (g.as_json()) {
        json j = result_json(x, r);
        j["i_star_sum"] = r.i_star_sum;
        j["i_starstar_sum"] = r.i_starstar_sum;
        j["reached_one"] = r.reached_one;
        j["ledger_dropped"] = r.ledger_dropped;
        j["terms"] = terms_json(r.terms);
        emit(g, dump(j));
      } else {
        emit(g, terms_csv(r.terms));
        std::cerr << "value=" << fmt15(r.value) << " q_series=" << fmt15(r.q_series) << "\n";
      }
    } else if (*dict) {
      const DigitStream in = parse_stream(digits_text);
      DigitStream out;
      if (to == "regular") {
        out = side_name.empty() ? minus_to_regular(in)
                                : minus_to_regular(in, side_name == "above" ? Side::above_half : Side::below_half);
      } else if (to == "minus") {
        out = regular_to_minus(in);
      } else {
        const Complement c = complement_regular(in);
        out = c.digits;
        if (c.boundary) std::cerr << "note: x = 1/2, complement is not canonical\n";
      }
      if (g.as_json()) {
        json d = json::array();
        for (const auto& z : out.digits) d.push_back(integer_json(z));
        const char* tail = out.tail == DigitStream::Tail::finite      ? "finite"
                           : out.tail == DigitStream::Tail::truncated ? "truncated"
                                                                      : "twos_forever";
        emit(g, dump({{"digits", d}, {"tail", tail}}));
      } else {
        emit(g, format_stream(out) + "\n");
      }
    } else if (*sweep) {
      DiffConfig c;
      c.kind = parse_diff_kind(kind_text);
      c.alpha = parse_rational(alpha_text);
      c.alpha_prime = parse_rational(alpha_prime_text);
      c.u = make_u(u_name);
      c.N = N;
      c.b0_digits = b0_digits;
      c.threshold = threshold;
      const auto corpus = make_corpus(corpus_size, g.seed);
      const BoundReport r = diff_report(c, corpus);
      if (g.as_json()) {
        emit(g, dump(report_json(r)));
      } else {
        std::string s = "input,value\n";
        for (std::size_t i = 0; i < corpus.size(); ++i) s += csv_line({corpus[i].label, fmt15(r.values[i])});
        emit(g, s);
      }
      std::cerr << "observed_sup=" << fmt15(r.observed_sup) << " threshold=" << fmt15(r.threshold)
                << " stable=" << r.stable << "\n";
      if (!r.within()) return over_threshold;
    } else if (*figure) {
      GridSpec grid;
      grid.lo = parse_rational(lo_text);
      grid.hi = parse_rational(hi_text);
      grid.points = points;
      grid.alpha = parse_rational(alpha_text);
      grid.u_name = fig_u;
      grid.N = N;
      grid.b0_digits = b0_digits;
      grid.seed = g.seed;
      for (const auto& s : inject) grid.inject.push_back({s, parse_real(s)});
      const Figure f = make_figure(which, grid);
      if (g.as_json()) {
        emit(g, figure_json(f));
      } else {
        std::ostringstream os;
        write_csv(os, f);
        emit(g, os.str());
      }
    } else if (*holder) {
      std::ifstream f(in_path);
      if (!f) throw parse_error("cannot read '" + in_path + "'");
      std::vector<double> xs, ys;
      read_figure_csv(f, xs, ys, column);
      const HolderEstimate h = holder_estimate(xs, ys);
      if (g.as_json()) {
        emit(g, dump({{"exponent", h.exponent}, {"r2", h.r2}, {"scales", h.scales_used}}));
      } else {
        emit(g, "exponent,r2,scales\n" + csv_line({fmt15(h.exponent), fmt15(h.r2), std::to_string(h.scales_used.size())}));
      }
    } else if (*benchc) {
      const auto rows = bench(parse_alpha_list(alphas_text), digit_target, reps);
      std::string s = "alpha,carrier,digits,median_seconds,digits_per_second\n";
      for (const auto& r : rows)
        s += csv_line({r.alpha.get_str(), r.carrier, std::to_string(r.digits), fmt15(r.median_seconds),
                       fmt15(r.digits_per_second)});
      emit(g, s);
    }
  } catch (const unwritable_output& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unwritable;
  } catch (const needs_precision& e) {
    std::cerr << "error: " << e.what() << "\n";
    return precision;
  } catch (const acf::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
  return ok;
}
