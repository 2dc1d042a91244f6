#include "cow/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cow/codewalk.hpp"
#include "cow/complexity.hpp"
#include "cow/generators.hpp"
#include "cow/krieger.hpp"
#include "cow/repetition.hpp"
#include "cow/search.hpp"
#include "cow/word.hpp"

namespace cow::cli {

namespace {

using nlohmann::json;

// "gen:<name>:<n>" or a literal digit string.
Word word_from_ref(const std::string& ref) {
  if (ref.rfind("gen:", 0) == 0) {
    auto rest = ref.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("word reference must be gen:<name>:<n>");
    std::string name = rest.substr(0, colon);
    std::size_t n = std::stoull(rest.substr(colon + 1));
    return generate(name, n);
  }
  return Word::from_digits(ref);
}

Word resolve_word(const std::string& literal, const std::string& from) {
  if (!literal.empty() && !from.empty())
    throw std::invalid_argument("--word and --word-from are mutually exclusive");
  if (!literal.empty()) return Word::from_digits(literal);
  if (!from.empty()) return word_from_ref(from);
  throw std::invalid_argument("a word is required (--word or --word-from)");
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.7f", v);
  return buf;
}

int cmd_gen(const std::string& name, std::size_t length, const std::string& format,
            std::ostream& out) {
  Word w = generate(name, length);
  if (format == "json") {
    json j{{"name", name}, {"length", w.size()}, {"word", w.digits()}};
    out << j.dump() << "\n";
  } else {
    out << w.digits() << "\n";
  }
  return 0;
}

int cmd_complexity(const std::string& spec, const std::string& word, const std::string& from,
                   std::size_t to, const std::string& format, std::ostream& out,
                   std::ostream& err) {
  ComplexityProfile prof;
  if (!spec.empty()) {
    prof = stabilized_profile(GeneratorSpec{spec}, to);
  } else {
    Word w = resolve_word(word, from);
    prof = profile(w, to);
  }
  if (format == "json") {
    json j{{"p", prof.values},
           {"stabilized", prof.stabilized},
           {"source_prefix_length", prof.source_prefix_length}};
    out << j.dump() << "\n";
  } else {
    out << "n,p\n";
    for (std::size_t n = 0; n < prof.values.size(); ++n) out << n << "," << prof.values[n] << "\n";
  }
  if (!prof.stabilized) {
    err << "warning: profile did not stabilize (prefix length "
        << prof.source_prefix_length << ")\n";
    return 1;
  }
  return 0;
}

int cmd_check(const std::string& bound_text, const std::string& word, const std::string& from,
              const std::string& format, std::ostream& out) {
  PowerBound bound = PowerBound::parse(bound_text);
  Word w = resolve_word(word, from);
  PowerCheck result = check_power_free(w, bound);
  if (format == "json") {
    json j{{"bound", bound.str()}, {"pass", result.pass}};
    if (result.witness) {
      j["witness"] = {{"start", result.witness->start},
                      {"length", result.witness->length},
                      {"period", result.witness->period},
                      {"exponent", rational_str(result.witness->exponent())}};
    }
    out << j.dump() << "\n";
  } else if (result.pass) {
    out << "pass\n";
  } else {
    const Run& r = *result.witness;
    out << "fail: exponent " << rational_str(r.exponent()) << " at position " << r.start
        << " (length " << r.length << ", period " << r.period << ")\n";
  }
  return result.pass ? 0 : 1;
}

int cmd_critexp(const std::string& spec, const std::string& word, const std::string& from,
                std::size_t length, const std::string& format, std::ostream& out) {
  if (!spec.empty()) {
    std::vector<RunSeries> series;
    if (spec == "G") series = {g_series(1), g_series(2)};
    if (spec == "tauG") series = {tau_g_series()};
    MorphicCritical mc =
        morphic_critical_exponent(GeneratorSpec{spec}, series, length == 0 ? 10000 : length);
    std::string basis = series.empty() ? "prefix-runs" : "declared-series+prefix-runs";
    if (format == "json") {
      json j{{"spec", spec}, {"value", mc.value}, {"attained", mc.attained}, {"basis", basis}};
      if (mc.attained_value) j["exact"] = rational_str(*mc.attained_value);
      out << j.dump() << "\n";
    } else {
      out << fmt_double(mc.value);
      if (mc.attained_value) out << " (= " << rational_str(*mc.attained_value) << ")";
      out << (mc.attained ? " attained" : " not attained (limit)") << " [" << basis << "]\n";
    }
    return 0;
  }
  Word w = resolve_word(word, from);
  CriticalExponent ce = critical_exponent(w);
  if (format == "json") {
    json j{{"value", rational_str(ce.value)},
           {"witness",
            {{"start", ce.witness.start},
             {"length", ce.witness.length},
             {"period", ce.witness.period}}}};
    out << j.dump() << "\n";
  } else {
    out << rational_str(ce.value) << " witness at " << ce.witness.start << " (length "
        << ce.witness.length << ", period " << ce.witness.period << ")\n";
  }
  return 0;
}

int cmd_codewalk_encode(const std::string& word, std::ostream& out) {
  Codewalk c = encode(Word::from_digits(word));
  out << c.str() << "\n";
  return 0;
}

int cmd_codewalk_decode(const std::string& cwk, const std::string& start, std::ostream& out) {
  Codewalk c = Codewalk::parse(cwk);
  Word w = start.empty() ? decode_canonical(c) : decode(c, JumpVertex::parse(start));
  out << w.digits() << "\n";
  return 0;
}

int cmd_krieger(const std::string& series_name, int m_max, bool limit_only, std::ostream& out) {
  const RunSeries& s = series_by_name(series_name);
  if (limit_only) {
    SeriesLimit lim = series_limit(s);
    out << "series,limit,conforming,numeric_m40,gap\n";
    out << series_name << "," << fmt_double(lim.value) << "," << (lim.conforming ? 1 : 0) << ","
        << fmt_double(lim.numeric_estimate) << "," << lim.gap << "\n";
    return 0;
  }
  out << "m,exponent_exact,exponent_float\n";
  for (int m = 0; m <= m_max; ++m) {
    Rational e = series_exponent(s, m);
    out << m << "," << rational_str(e) << "," << fmt_double(rational_to_double(e)) << "\n";
  }
  return 0;
}

int cmd_search(int alphabet, const std::string& bound_text, const std::string& cap_text,
               const std::string& mode, std::size_t to, std::uint64_t budget,
               const std::string& format, std::ostream& out, std::ostream& err) {
  Constraint c;
  c.alphabet_size = alphabet;
  c.bound = PowerBound::parse(bound_text);
  if (!cap_text.empty()) c.complexity_cap = AffineCap::parse(cap_text);
  if (mode == "census") {
    SearchOutcome res = dfs_census(c, to, budget);
    out << "n,count\n";
    for (std::size_t n = 0; n < res.census.size(); ++n) out << n << "," << res.census[n] << "\n";
    if (res.budget_exhausted) {
      err << "warning: node budget exhausted; counts are partial\n";
      return 1;
    }
    return 0;
  }
  if (mode == "longest") {
    SearchOutcome res = longest_with_cap(c, budget);
    if (!res.max_length) {
      err << "open: node budget exhausted after " << res.nodes << " nodes\n";
      return 1;
    }
    if (format == "csv") {
      out << "max_length,word\n";
      for (const Word& w : res.maximal_words) out << *res.max_length << "," << w.digits() << "\n";
    } else {
      out << "max_length=" << *res.max_length << " (" << res.maximal_words.size()
          << " words, " << res.nodes << " nodes)\n";
      for (const Word& w : res.maximal_words) out << w.digits() << "\n";
    }
    return 0;
  }
  throw std::invalid_argument("mode must be census or longest");
}

int cmd_forbidden(int k_max, const std::string& format, std::ostream& out) {
  std::vector<Word> words = minimal_forbidden_tm(k_max);
  if (format == "csv") {
    out << "length,word\n";
    for (const Word& w : words) out << w.size() << "," << w.digits() << "\n";
  } else {
    for (const Word& w : words) out << w.digits() << "\n";
  }
  return 0;
}

int report_tprime_table(std::ostream& out, std::ostream& err) {
  ComplexityProfile prof = stabilized_profile(GeneratorSpec{"twisted_tm"}, 18);
  out << "n,p\n";
  for (std::size_t n = 0; n <= 18; ++n) {
    out << n << "," << prof.values[n];
    if (!prof.stabilized) out << ",unstabilized";
    out << "\n";
  }
  if (!prof.stabilized) {
    err << "error: profile did not stabilize\n";
    return 1;
  }
  return 0;
}

int report_d_sequences(std::ostream& out, std::ostream& err) {
  ComplexityProfile pt = stabilized_profile(GeneratorSpec{"tm"}, 34);
  ComplexityProfile ptp = stabilized_profile(GeneratorSpec{"twisted_tm"}, 34);
  out << "n,D_t,D_tprime\n";
  for (std::size_t n = 1; n <= 33; ++n)
    out << n << "," << (pt.values[n + 1] - pt.values[n]) << ","
        << (ptp.values[n + 1] - ptp.values[n]) << "\n";
  if (!pt.stabilized || !ptp.stabilized) {
    err << "error: profile did not stabilize\n";
    return 1;
  }
  return 0;
}

int report_table1(std::ostream& out, std::ostream& err) {
  bool all_ok = true;
  out << "item,claim,verified,status,scope\n";
  auto row = [&](const std::string& item, const std::string& claim, const std::string& range,
                 bool ok) {
    out << item << "," << claim << "," << range << "," << (ok ? "pass" : "FAIL")
        << ",empirical desk scale\n";
    all_ok = all_ok && ok;
  };

  row("tm", "overlap-free (2+)", "prefix 4096",
      check_power_free(generate("tm", 4096), PowerBound::parse("2+")).pass);
  row("twisted_tm", "overlap-free (2+)", "prefix 4096",
      check_power_free(generate("twisted_tm", 4096), PowerBound::parse("2+")).pass);
  row("ternary_thue", "square-free", "prefix 4096",
      check_power_free(generate("ternary_thue", 4096), PowerBound::parse("2")).pass);

  {
    ComplexityProfile p = stabilized_profile(GeneratorSpec{"tm"}, 256);
    bool ok = p.stabilized;
    for (std::size_t n = 0; ok && n <= 256; ++n)
      ok = p.values[n] == closed_form(ClosedFormName::p_t, static_cast<std::int64_t>(n));
    row("tm", "p matches closed form", "n<=256", ok);
  }
  {
    ComplexityProfile p = stabilized_profile(GeneratorSpec{"twisted_tm"}, 128);
    bool ok = p.stabilized;
    for (std::size_t n = 0; ok && n <= 128; ++n)
      ok = p.values[n] == closed_form(ClosedFormName::p_tprime, static_cast<std::int64_t>(n));
    row("twisted_tm", "p matches closed form", "n<=128", ok);
  }
  {
    ComplexityProfile p = stabilized_profile(GeneratorSpec{"f12"}, 100);
    bool ok = p.stabilized;
    for (std::size_t n = 2; ok && n <= 100; ++n) ok = p.values[n] == 6 * static_cast<std::int64_t>(n) - 6;
    row("f12", "p = 6n-6", "2<=n<=100", ok);
  }
  {
    ComplexityProfile p = stabilized_profile(GeneratorSpec{"f13"}, 100);
    bool ok = p.stabilized;
    for (std::size_t n = 5; ok && n <= 100; ++n) ok = p.values[n] == 6 * static_cast<std::int64_t>(n);
    row("f13", "p = 6n", "5<=n<=100", ok);
  }
  {
    ComplexityProfile p = stabilized_profile(GeneratorSpec{"G"}, 200);
    bool ok = p.stabilized;
    for (std::size_t n = 0; ok && n <= 200; ++n) ok = p.values[n] == 2 * static_cast<std::int64_t>(n) + 1;
    row("G", "p = 2n+1", "n<=200", ok);
  }
  {
    ComplexityProfile p = stabilized_profile(GeneratorSpec{"tauG"}, 200);
    bool ok = p.stabilized;
    for (std::size_t n = 1; ok && n <= 200; ++n) ok = p.values[n] == 2 * static_cast<std::int64_t>(n);
    row("tauG", "p = 2n", "1<=n<=200", ok);
  }
  {
    ComplexityProfile p = stabilized_profile(GeneratorSpec{"eta"}, 64);
    bool ok = p.stabilized;
    for (std::size_t n = 1; ok && n <= 64; ++n) ok = p.values[n] == 2 * static_cast<std::int64_t>(n);
    row("eta", "p = 2n", "1<=n<=64", ok);
  }

  {
    std::vector<RunSeries> series{g_series(1), g_series(2)};
    MorphicCritical mc = morphic_critical_exponent(GeneratorSpec{"G"}, series, 10000);
    row("G", "critical exponent 2.4808627 (limit)", "series+prefix 1e4",
        !mc.attained && std::abs(mc.value - 2.4808627) < 1e-6);
  }
  {
    std::vector<RunSeries> series{tau_g_series()};
    MorphicCritical mc = morphic_critical_exponent(GeneratorSpec{"tauG"}, series, 10000);
    row("tauG", "critical exponent 5/2 attained", "series+prefix 1e4",
        mc.attained && mc.attained_value == make_rational(5, 2));
  }
  {
    Word w = generate("f12", 10000);
    PowerCheck pc = check_power_free(w, PowerBound::parse("11/6+"));
    bool attained = critical_exponent(w).value == make_rational(11, 6);
    row("f12", "11/6+ -free with 11/6 attained", "prefix 1e4", pc.pass && attained);
  }
  row("gT", "7/3+ -free", "prefix 5400",
      check_power_free(generate("gT", 5400), PowerBound::parse("7/3+")).pass);

  if (!all_ok) {
    err << "error: a report row failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"combinatorics-on-words toolkit: power-avoiding words, subword complexity, "
               "codewalks, run series"};
  app.require_subcommand(1);
  app.fallthrough();  // global options stay usable after a subcommand name
  app.set_config("--config");
  std::uint64_t budget = kDefaultNodeBudget;
  app.add_option("--budget", budget, "node budget for searches")->envname("COW_BUDGET");

  int exit_code = 0;
  std::function<int()> action;

  // gen
  {
    auto* sub = app.add_subcommand("gen", "emit a prefix of a registry word");
    auto name = std::make_shared<std::string>();
    auto length = std::make_shared<std::size_t>(0);
    auto format = std::make_shared<std::string>("plain");
    sub->add_option("name", *name, "generator name")->required();
    sub->add_option("--length", *length, "prefix length")->required();
    sub->add_option("--format", *format, "plain|json");
    sub->callback([&, name, length, format] {
      action = [&, name, length, format] { return cmd_gen(*name, *length, *format, out); };
    });
  }
  // complexity
  {
    auto* sub = app.add_subcommand("complexity", "subword complexity profile");
    auto spec = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto from = std::make_shared<std::string>();
    auto to = std::make_shared<std::size_t>(0);
    auto format = std::make_shared<std::string>("csv");
    sub->add_option("--spec", *spec, "registry word (stabilized profile)");
    sub->add_option("--word", *word, "literal word (exact profile)");
    sub->add_option("--word-from", *from, "word reference gen:<name>:<n>");
    sub->add_option("--to", *to, "maximum factor length")->required();
    sub->add_option("--format", *format, "csv|json");
    sub->callback([&, spec, word, from, to, format] {
      action = [&, spec, word, from, to, format] {
        return cmd_complexity(*spec, *word, *from, *to, *format, out, err);
      };
    });
  }
  // check
  {
    auto* sub = app.add_subcommand("check", "power-freeness check");
    auto bound = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto from = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("plain");
    sub->add_option("--bound", *bound, "power bound, e.g. 2+ or 7/3")->required();
    sub->add_option("--word", *word, "literal word");
    sub->add_option("--word-from", *from, "word reference gen:<name>:<n>");
    sub->add_option("--format", *format, "plain|json");
    sub->callback([&, bound, word, from, format] {
      action = [&, bound, word, from, format] {
        return cmd_check(*bound, *word, *from, *format, out);
      };
    });
  }
  // critexp
  {
    auto* sub = app.add_subcommand("critexp", "critical exponent");
    auto spec = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto from = std::make_shared<std::string>();
    auto length = std::make_shared<std::size_t>(0);
    auto format = std::make_shared<std::string>("plain");
    sub->add_option("--spec", *spec, "registry word (morphic evaluation)");
    sub->add_option("--word", *word, "literal word (exact)");
    sub->add_option("--word-from", *from, "word reference");
    sub->add_option("--length", *length, "prefix length for --spec (default 10000)");
    sub->add_option("--format", *format, "plain|json");
    sub->callback([&, spec, word, from, length, format] {
      action = [&, spec, word, from, length, format] {
        return cmd_critexp(*spec, *word, *from, *length, *format, out);
      };
    });
  }
  // codewalk
  {
    auto* sub = app.add_subcommand("codewalk", "encode/decode square-free ternary words");
    auto* enc = sub->add_subcommand("encode", "word -> codewalk");
    auto word = std::make_shared<std::string>();
    enc->add_option("word", *word, "ternary square-free word")->required();
    enc->callback([&, word] {
      action = [&, word] { return cmd_codewalk_encode(*word, out); };
    });
    auto* dec = sub->add_subcommand("decode", "codewalk -> word");
    auto cwk = std::make_shared<std::string>();
    auto start = std::make_shared<std::string>();
    dec->add_option("cwk", *cwk, "codewalk text, e.g. <2:2212332")->required();
    dec->add_option("--start", *start, "start jump vertex aba, e.g. 010");
    dec->callback([&, cwk, start] {
      action = [&, cwk, start] { return cmd_codewalk_decode(*cwk, *start, out); };
    });
    sub->require_subcommand(1);
  }
  // krieger
  {
    auto* sub = app.add_subcommand("krieger", "run-series exponents and limits");
    auto series = std::make_shared<std::string>();
    auto m_max = std::make_shared<int>(40);
    auto limit_only = std::make_shared<bool>(false);
    sub->add_option("--series", *series, "G1|G2|tauG")->required();
    sub->add_option("--m-max", *m_max, "largest series index (default 40)");
    sub->add_flag("--limit", *limit_only, "print the series limit instead of the table");
    sub->callback([&, series, m_max, limit_only] {
      action = [&, series, m_max, limit_only] {
        return cmd_krieger(*series, *m_max, *limit_only, out);
      };
    });
  }
  // search / census
  {
    auto* sub = app.add_subcommand("search", "constrained backtracking search");
    auto alphabet = std::make_shared<int>(2);
    auto bound = std::make_shared<std::string>();
    auto cap = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("census");
    auto to = std::make_shared<std::size_t>(12);
    auto format = std::make_shared<std::string>("plain");
    sub->add_option("--alphabet", *alphabet, "alphabet size")->required();
    sub->add_option("--bound", *bound, "power bound")->required();
    sub->add_option("--cap", *cap, "complexity cap, e.g. 2n or 2n+1");
    sub->add_option("--mode", *mode, "census|longest");
    sub->add_option("--to", *to, "census horizon");
    sub->add_option("--format", *format, "plain|csv");
    sub->callback([&, alphabet, bound, cap, mode, to, format] {
      action = [&, alphabet, bound, cap, mode, to, format] {
        return cmd_search(*alphabet, *bound, *cap, *mode, *to, budget, *format, out, err);
      };
    });

    auto* cen = app.add_subcommand("census", "census of a power-free language");
    auto calphabet = std::make_shared<int>(2);
    auto cbound = std::make_shared<std::string>();
    auto cto = std::make_shared<std::size_t>(12);
    cen->add_option("--alphabet", *calphabet, "alphabet size")->required();
    cen->add_option("--bound", *cbound, "power bound")->required();
    cen->add_option("--to", *cto, "census horizon")->required();
    cen->callback([&, calphabet, cbound, cto] {
      action = [&, calphabet, cbound, cto] {
        return cmd_search(*calphabet, *cbound, "", "census", *cto, budget, "csv", out, err);
      };
    });
  }
  // forbidden
  {
    auto* sub = app.add_subcommand("forbidden", "minimal forbidden Thue-Morse words");
    auto k_max = std::make_shared<int>(4);
    auto format = std::make_shared<std::string>("plain");
    sub->add_option("--k-max", *k_max, "largest family index (default 4)");
    sub->add_option("--format", *format, "plain|csv");
    sub->callback([&, k_max, format] {
      action = [&, k_max, format] { return cmd_forbidden(*k_max, *format, out); };
    });
  }
  // report
  {
    auto* sub = app.add_subcommand("report", "regenerate numeric artifacts from scratch");
    auto name = std::make_shared<std::string>();
    sub->add_option("name", *name, "tprime_table|D_sequences|table1_summary")->required();
    sub->callback([&, name] {
      action = [&, name] {
        if (*name == "tprime_table") return report_tprime_table(out, err);
        if (*name == "D_sequences") return report_d_sequences(out, err);
        if (*name == "table1_summary") return report_table1(out, err);
        throw std::invalid_argument("unknown report: " + *name);
      };
    });
  }

  std::vector<const char*> argv;
  argv.push_back("cow");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    exit_code = action ? action() : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cow::cli
