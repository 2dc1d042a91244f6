#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "cow/codewalk.hpp"
#include "cow/complexity.hpp"
#include "cow/generators.hpp"
#include "cow/krieger.hpp"
#include "cow/repetition.hpp"
#include "cow/search.hpp"
#include "cow/word.hpp"

namespace py = pybind11;
using namespace cow;

namespace {

Word as_word(const std::string& digits) { return Word::from_digits(digits); }

std::pair<long long, long long> frac(const Rational& r) {
  return {to_int64(numerator(r)), to_int64(denominator(r))};
}

Constraint make_constraint(int alphabet, const std::string& bound, const std::string& cap) {
  Constraint c;
  c.alphabet_size = alphabet;
  c.bound = PowerBound::parse(bound);
  if (!cap.empty()) c.complexity_cap = AffineCap::parse(cap);
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "power-avoiding words, subword complexity, codewalks and run series";

  m.def("generators", [] { return generator_names(); });
  m.def(
      "generate", [](const std::string& name, std::size_t n) { return generate(name, n).digits(); },
      py::arg("name"), py::arg("n"));

  m.def(
      "minimal_period", [](const std::string& w) { return minimal_period(as_word(w)); },
      py::arg("word"));
  m.def(
      "exponent", [](const std::string& w) { return frac(exponent(as_word(w))); }, py::arg("word"));
  m.def(
      "critical_exponent",
      [](const std::string& w) {
        CriticalExponent ce = critical_exponent(as_word(w));
        return py::make_tuple(frac(ce.value), ce.witness.start, ce.witness.length,
                              ce.witness.period);
      },
      py::arg("word"), "((num, den), witness_start, witness_length, witness_period)");
  m.def(
      "check_power_free",
      [](const std::string& w, const std::string& bound) {
        PowerCheck pc = check_power_free(as_word(w), PowerBound::parse(bound));
        py::dict d;
        d["pass"] = pc.pass;
        if (pc.witness)
          d["witness"] = py::make_tuple(pc.witness->start, pc.witness->length, pc.witness->period);
        return d;
      },
      py::arg("word"), py::arg("bound"));
  m.def(
      "runs",
      [](const std::string& w) {
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
        for (const Run& r : runs(as_word(w))) out.emplace_back(r.start, r.length, r.period);
        return out;
      },
      py::arg("word"));
  m.def(
      "fractional_power",
      [](const std::string& x, long long num, long long den) {
        return fractional_power(as_word(x), make_rational(num, den)).digits();
      },
      py::arg("word"), py::arg("num"), py::arg("den"));

  m.def(
      "profile",
      [](const std::string& w, std::size_t n) { return profile(as_word(w), n).values; },
      py::arg("word"), py::arg("n"));
  m.def(
      "stabilized_profile",
      [](const std::string& spec, std::size_t n) {
        ComplexityProfile p = stabilized_profile(GeneratorSpec{spec}, n);
        return py::make_tuple(p.values, p.stabilized, p.source_prefix_length);
      },
      py::arg("spec"), py::arg("n"), "(values, stabilized, source_prefix_length)");
  m.def(
      "special_factor_count",
      [](const std::string& w, std::size_t n) {
        SpecialFactorReport rep = special_factors(as_word(w), n);
        return py::make_tuple(rep.count(), rep.weighted_count());
      },
      py::arg("word"), py::arg("n"));
  m.def(
      "closed_form",
      [](const std::string& name, long long n) { return closed_form(closed_form_name(name), n); },
      py::arg("name"), py::arg("n"), "name in {p_t, p_tprime, D_t, D_tprime}");
  m.def(
      "minimal_forbidden_tm",
      [](int k_max) {
        std::vector<std::string> out;
        for (const Word& w : minimal_forbidden_tm(k_max)) out.push_back(w.digits());
        return out;
      },
      py::arg("k_max"));
  m.def(
      "mu_factorize",
      [](const std::string& w, int levels) {
        MuFactorization f = mu_factorize(as_word(w), levels);
        std::vector<std::string> xs;
        for (const Word& x : f.levels) xs.push_back(x.digits());
        return py::make_tuple(xs, f.residual.digits());
      },
      py::arg("word"), py::arg("levels"));
  m.def(
      "is_symmetric", [](const std::string& w, std::size_t n) { return is_symmetric(as_word(w), n); },
      py::arg("word"), py::arg("n"));

  m.def(
      "encode",
      [](const std::string& w) { return encode(Word::from_digits(w, 3)).str(); },
      py::arg("word"));
  m.def(
      "decode",
      [](const std::string& cwk, const std::string& start) {
        Codewalk c = Codewalk::parse(cwk);
        if (start.empty()) return decode_canonical(c).digits();
        return decode(c, JumpVertex::parse(start)).digits();
      },
      py::arg("cwk"), py::arg("start") = std::string());
  m.def(
      "is_closed_codewalk",
      [](const std::string& cwk) { return is_closed(Codewalk::parse(cwk)); }, py::arg("cwk"));
  m.def(
      "build_ab",
      [](int level) {
        auto [a, b] = build_ab(level);
        return py::make_tuple(a.str(), b.str());
      },
      py::arg("level"));

  m.def(
      "dominant_eigenvalue",
      [](const std::vector<std::vector<long long>>& rows) {
        IntMatrix a;
        for (const auto& r : rows) {
          std::vector<BigInt> row;
          for (long long x : r) row.emplace_back(x);
          a.push_back(std::move(row));
        }
        EigenData e = dominant_eigenvalue(a, 1e-13);
        return py::make_tuple(e.lambda, e.residual);
      },
      py::arg("matrix"));
  m.def(
      "series_exponent",
      [](const std::string& name, int mm) { return frac(series_exponent(series_by_name(name), mm)); },
      py::arg("series"), py::arg("m"), "series in {G1, G2, tauG}");
  m.def(
      "series_limit",
      [](const std::string& name) {
        SeriesLimit lim = series_limit(series_by_name(name));
        return py::make_tuple(lim.value, lim.conforming);
      },
      py::arg("series"));

  m.def(
      "census",
      [](int alphabet, const std::string& bound, std::size_t to, const std::string& cap) {
        return dfs_census(make_constraint(alphabet, bound, cap), to).census;
      },
      py::arg("alphabet"), py::arg("bound"), py::arg("to"), py::arg("cap") = std::string());
  m.def(
      "longest_with_cap",
      [](int alphabet, const std::string& bound, const std::string& cap, std::uint64_t budget) {
        SearchOutcome res = longest_with_cap(make_constraint(alphabet, bound, cap), budget);
        std::vector<std::string> words;
        for (const Word& w : res.maximal_words) words.push_back(w.digits());
        std::optional<std::size_t> ml = res.max_length;
        return py::make_tuple(ml, words, res.nodes);
      },
      py::arg("alphabet"), py::arg("bound"), py::arg("cap") = std::string(),
      py::arg("budget") = kDefaultNodeBudget);
  m.def(
      "split_letter",
      [](const std::string& u, const std::string& v) {
        return split_letter(Word::from_digits(u, 3), Word::from_digits(v, 4)).digits();
      },
      py::arg("u"), py::arg("v"));
}
