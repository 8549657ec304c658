#include "rewb/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rewb/matcher.hpp"
#include "rewb/parser.hpp"
#include "rewb/stringology.hpp"

#ifdef REWB_WITH_ORACLES
#include "rewb/oracles.hpp"
#endif

namespace rewb::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string pattern;
  std::optional<std::string> input;
  std::optional<std::string> input_file;
  std::string algo = "fast";
  bool json = false;
  std::string alphabet = "printable";
  std::vector<std::size_t> sizes;
  bool trim = false;
  std::string family = "abb";
  std::size_t count = 2000;
  std::size_t max_len = 10;
  std::string chars = "ab";
  std::uint64_t seed = 1;
};

std::string read_subject(const Options& o) {
  std::string s;
  if (o.input && o.input_file) throw UsageError("give exactly one of --input and --input-file");
  if (o.input) {
    s = *o.input;
  } else if (o.input_file) {
    std::ifstream in(*o.input_file, std::ios::binary);
    if (!in) throw UsageError("cannot read " + *o.input_file);
    s.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    throw UsageError("give exactly one of --input and --input-file");
  }
  if (o.trim) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  }
  return s;
}

json stats_json(const MatchStats& s) {
  return json{{"delta_steps", s.delta_steps},     {"summary_steps", s.summary_steps},
              {"intmed_steps", s.intmed_steps},   {"match3b_steps", s.match3b_steps},
              {"pre_alpha_steps", s.pre_alpha_steps}, {"repeats", s.repeats}};
}

std::string stats_line(const MatchStats& s) {
  std::ostringstream os;
  os << "delta_steps=" << s.delta_steps << " summary_steps=" << s.summary_steps
     << " intmed_steps=" << s.intmed_steps << " match3b_steps=" << s.match3b_steps
     << " pre_alpha_steps=" << s.pre_alpha_steps << " repeats=" << s.repeats;
  return os.str();
}

void require_oracles() {
#ifndef REWB_WITH_ORACLES
  throw UsageError("this build has no reference oracles (configure with REWB_WITH_ORACLES=ON)");
#endif
}

int cmd_match(const Options& o, std::ostream& out) {
  const Alphabet alphabet = Alphabet::from_spec(o.alphabet);
  const RewbQuery q = parse_rewb(o.pattern);
  const std::string w = read_subject(o);

  json j{{"algo", o.algo}, {"n", w.size()}};
  bool matched = false;
  std::optional<MatchStats> stats;
  if (o.algo == "fast") {
    const MatchVerdict v = match_rewb(q, w, alphabet);
    matched = v.matched;
    stats = v.stats;
  } else if (o.algo == "cubic") {
    require_oracles();
#ifdef REWB_WITH_ORACLES
    const MatchVerdict v = oracle::cubic_match(q, w, alphabet);
    matched = v.matched;
    stats = v.stats;
#endif
  } else {
    require_oracles();
    if (w.size() > kBruteCap) {
      throw UsageError("--algo brute accepts subjects of at most " + std::to_string(kBruteCap) +
                       " bytes");
    }
#ifdef REWB_WITH_ORACLES
    const auto wit = oracle::brute_force_match(q, w, alphabet);
    matched = wit.has_value();
    if (wit) j["witness"] = json{{"beta", wit->beta}, {"i", wit->i}, {"j", wit->j}};
#endif
  }
  j["matched"] = matched;
  if (stats) j["stats"] = stats_json(*stats);

  if (o.json) {
    out << j.dump() << '\n';
  } else {
    out << (matched ? "matched" : "no match") << '\n';
    if (stats) out << stats_line(*stats) << '\n';
    if (j.contains("witness")) {
      out << "witness: beta=\"" << j["witness"]["beta"].get<std::string>()
          << "\" i=" << j["witness"]["i"] << " j=" << j["witness"]["j"] << '\n';
    }
  }
  return matched ? kExitMatched : kExitNoMatch;
}

int cmd_repeats(const Options& o, std::ostream& out) {
  const std::string w = read_subject(o);
  enum_right_maximal_repeats(w, [&](const RepeatRecord& rec) {
    json j{{"repeat", std::string(rec.repeat(w))}, {"len", rec.length}, {"idx", rec.idx}, {"d", rec.d}};
    out << j.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
    return true;
  });
  return kExitMatched;
}

int cmd_check(const Options& o, std::ostream& out) {
  require_oracles();
#ifdef REWB_WITH_ORACLES
  const Alphabet alphabet = Alphabet::from_spec(o.alphabet);
  if (o.chars.empty()) throw UsageError("--chars must not be empty");
  if (o.max_len > kBruteCap) throw UsageError("--max-len exceeds the brute-force cap");
  std::vector<std::string> patterns;
  if (!o.pattern.empty()) {
    patterns.push_back(o.pattern);
  } else {
    patterns = oracle::rewb_corpus();
  }
  std::vector<CompiledRewb> compiled;
  std::vector<RewbQuery> queries;
  for (const auto& p : patterns) {
    queries.push_back(parse_rewb(p));
    compiled.push_back(compile_rewb(queries.back(), alphabet));
  }

  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> len_dist(0, o.max_len);
  std::uniform_int_distribution<std::size_t> char_dist(0, o.chars.size() - 1);
  std::size_t matched = 0;
  for (std::size_t t = 0; t < o.count; ++t) {
    const std::size_t qi = t % patterns.size();
    std::string w(len_dist(rng), ' ');
    for (char& c : w) c = o.chars[char_dist(rng)];

    const bool fast = match_rewb(compiled[qi], w).matched;
    const bool cubic = oracle::cubic_match(compiled[qi], w).matched;
    const bool brute = oracle::brute_force_match(queries[qi], w, alphabet).has_value();
    if (fast != cubic || fast != brute) {
      json j{{"divergence", true}, {"pattern", patterns[qi]}, {"input", w}, {"alphabet", o.alphabet},
             {"fast", fast},       {"cubic", cubic},         {"brute", brute}, {"instance", t},
             {"seed", o.seed}};
      out << j.dump() << '\n';
      return kExitNoMatch;
    }
    matched += fast ? 1 : 0;
  }
  json j{{"instances", o.count}, {"patterns", patterns.size()}, {"matched", matched},
         {"divergences", 0},     {"seed", o.seed}};
  if (o.json) {
    out << j.dump() << '\n';
  } else {
    out << "agreement: " << o.count << " instances over " << patterns.size() << " patterns, "
        << matched << " matched, 0 divergences\n";
  }
#endif
  (void)o;
  (void)out;
  return kExitMatched;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const Alphabet alphabet = Alphabet::from_spec(o.alphabet);
  const CompiledRewb compiled = compile_rewb(parse_rewb(o.pattern), alphabet);
  if (o.family.empty()) throw UsageError("--family must not be empty");
  if (o.sizes.empty()) throw UsageError("--sizes must list at least one size");
  if (o.algo == "brute") throw UsageError("bench supports --algo fast or cubic");
  if (o.algo == "cubic") require_oracles();

  std::optional<std::uint64_t> prev;
  if (!o.json) out << std::setw(8) << "n" << std::setw(16) << "steps" << std::setw(12) << "wall_ms"
                   << std::setw(10) << "ratio" << '\n';
  for (std::size_t n : o.sizes) {
    std::string w;
    while (w.size() < n) w += o.family;
    w.resize(n);

    const auto t0 = std::chrono::steady_clock::now();
    MatchVerdict v;
    if (o.algo == "fast") {
      v = match_rewb(compiled, w, MatchOptions{true});
    } else {
#ifdef REWB_WITH_ORACLES
      v = oracle::cubic_match(compiled, w, MatchOptions{true});
#endif
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const std::uint64_t steps = v.stats.delta_steps;
    json row{{"n", n}, {"steps", steps}, {"wall_ms", ms}, {"matched", v.matched}};
    if (prev && *prev > 0) row["ratio"] = static_cast<double>(steps) / static_cast<double>(*prev);
    if (o.json) {
      out << row.dump() << '\n';
    } else {
      out << std::setw(8) << n << std::setw(16) << steps << std::setw(12) << std::fixed
          << std::setprecision(2) << ms << std::setw(10);
      if (row.contains("ratio")) {
        out << std::setprecision(3) << row["ratio"].get<double>();
      } else {
        out << "-";
      }
      out << '\n';
    }
    prev = steps;
  }
  return kExitMatched;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matcher for regexes with one backreference: e0 (e) e1 \\1 e2"};
  app.name("rewb");
  app.require_subcommand(1);
  Options o;

  auto add_subject = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Subject string");
    sub->add_option("--input-file", o.input_file, "Read the subject from a file, byte for byte");
    sub->add_flag("--trim", o.trim, "Strip trailing newlines from the subject");
  };
  auto add_alphabet = [&](CLI::App* sub) {
    sub->add_option("--alphabet", o.alphabet,
                    "Universe for . and negated classes: printable, bytes, or a class body");
  };

  CLI::App* match = app.add_subcommand("match", "Decide whether the pattern matches the subject");
  match->add_option("--pattern", o.pattern, "Pattern of the form e0(e)e1\\1e2")->required();
  add_subject(match);
  add_alphabet(match);
  match->add_option("--algo", o.algo, "fast, cubic or brute")
      ->check(CLI::IsMember({"fast", "cubic", "brute"}));
  match->add_flag("--json", o.json, "Print one JSON object");

  CLI::App* repeats = app.add_subcommand("repeats", "Print right-maximal repeats as JSON lines");
  add_subject(repeats);

  CLI::App* check = app.add_subcommand("check", "Cross-check fast, cubic and brute on random inputs");
  check->add_option("--pattern", o.pattern, "Single pattern (default: built-in corpus)");
  add_alphabet(check);
  check->add_option("--count", o.count, "Number of instances");
  check->add_option("--max-len", o.max_len, "Longest generated subject");
  check->add_option("--chars", o.chars, "Characters used for generated subjects");
  check->add_option("--seed", o.seed, "Random seed");
  check->add_flag("--json", o.json, "Print the summary as JSON");

  CLI::App* bench = app.add_subcommand("bench", "Count steps over a family of subjects");
  bench->add_option("--pattern", o.pattern, "Pattern of the form e0(e)e1\\1e2")->required();
  bench->add_option("--family", o.family, "Period repeated to each size (default abb)");
  bench->add_option("--sizes", o.sizes, "Comma-separated subject lengths")
      ->delimiter(',')
      ->required();
  bench->add_option("--algo", o.algo, "fast or cubic")->check(CLI::IsMember({"fast", "cubic"}));
  add_alphabet(bench);
  bench->add_flag("--json", o.json, "Print JSON lines");

  std::vector<std::string> argv_storage{"rewb"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitMatched : kExitUsage;
  }

  try {
    if (match->parsed()) return cmd_match(o, out);
    if (repeats->parsed()) return cmd_repeats(o, out);
    if (check->parsed()) return cmd_check(o, out);
    return cmd_bench(o, out);
  } catch (const PatternError& e) {
    err << "rewb: pattern error: " << e.what() << '\n';
  } catch (const RewbFormError& e) {
    err << "rewb: unsupported pattern: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "rewb: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace rewb::cli
