#include "starlike/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "starlike/bounds.hpp"
#include "starlike/error.hpp"
#include "starlike/numeric_text.hpp"
#include "starlike/polylog.hpp"
#include "starlike/report.hpp"
#include "starlike/search.hpp"

namespace starlike::cli {

namespace {

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string &text, char sep = ',') {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  parts.erase(std::remove(parts.begin(), parts.end(), std::string{}), parts.end());
  return parts;
}

template <class F> auto parse_list(const std::string &key, const std::string &text, F &&f) {
  std::vector<decltype(f(std::string{}))> out;
  for (const auto &item : split_list(text)) {
    try {
      out.push_back(f(item));
    } catch (const std::exception &) {
      throw ConfigError("--" + key + ": cannot parse '" + item + "'");
    }
  }
  return out;
}

int parse_int(const std::string &s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size())
    throw std::invalid_argument(s);
  return v;
}

std::uint64_t parse_u64(const std::string &s) {
  std::size_t used = 0;
  const auto v = std::stoull(s, &used);
  if (used != s.size() || s.front() == '-')
    throw std::invalid_argument(s);
  return v;
}

// Expands "fuzz:N" descriptors into N random seeds drawn from the rng seed.
std::vector<SchwarzSeed> resolve_seeds(const SweepConfig &config) {
  std::vector<SchwarzSeed> seeds;
  Rng rng(config.rng_seed);
  for (const auto &text : config.seeds) {
    if (text.rfind("fuzz:", 0) == 0) {
      std::size_t count = 0;
      try {
        count = parse_u64(text.substr(5));
      } catch (const std::exception &) {
        throw ConfigError("--seeds: bad fuzz count in '" + text + "'");
      }
      for (std::size_t i = 0; i < count; ++i)
        seeds.push_back(random_seed(i % 2 ? SeedFamily::Polynomial : SeedFamily::ExpDamp, rng));
      continue;
    }
    try {
      seeds.push_back(parse_seed(text));
    } catch (const Error &e) {
      throw ConfigError(std::string("--seeds: ") + e.what());
    }
  }
  return seeds;
}

// Valid parameter sets of the sweep, logging every skipped combination.
std::vector<ClassParams> resolve_params(const SweepConfig &config, std::ostream &err) {
  std::vector<ClassParams> out;
  for (const auto &[j, k] : config.pairs) {
    for (const auto &A : config.A) {
      for (double B : config.B) {
        try {
          out.push_back(ClassParams::make(j, k, A, B));
        } catch (const Error &e) {
          err << "skipping j=" << j << " k=" << k << " A=" << format_complex(A)
              << " B=" << format_real(B) << ": " << e.what() << "\n";
        }
      }
    }
  }
  return out;
}

int emit_report(const SweepConfig &config, const std::string &command,
                std::vector<ReportRow> rows, std::ostream &out, std::ostream &err) {
  sort_rows(rows);
  ReportMeta meta{command, std::nullopt};
  if (!config.no_timestamp)
    meta.timestamp = utc_timestamp();

  std::ostringstream buffer;
  if (config.format == "csv")
    write_csv(buffer, meta, rows);
  else
    write_json(buffer, meta, rows);

  if (config.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file || !(file << buffer.str()) || !file.flush()) {
      err << "error: cannot write report to '" << config.out << "'\n";
      return kIoError;
    }
  }

  std::size_t failures = 0;
  for (const auto &r : rows) {
    if (r.pass)
      continue;
    ++failures;
    err << "FAIL " << r.theorem << " [" << r.check << "] j=" << r.j << " k=" << r.k
        << " A=" << format_complex(r.A) << " B=" << format_real(r.B)
        << " seed=" << r.seed << " ratio=" << format_real(r.ratio)
        << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
  }
  err << command << ": " << rows.size() << " checks, " << failures << " failures\n";
  return failures == 0 ? kSuccess : kCheckFailure;
}

void validate(const SweepConfig &config) {
  if (config.format != "json" && config.format != "csv")
    throw ConfigError("--format must be json or csv");
  if (!(config.tol >= 0.0) || !(config.sharp_tol >= 0.0))
    throw ConfigError("tolerances must be nonnegative");
  for (double t : config.t)
    if (t > 2.0)
      throw ConfigError("--t: weight exponent " + format_real(t) + " exceeds 2");
}

} // namespace

SweepConfig default_config() {
  SweepConfig c;
  c.pairs = {{1, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {1, 4}};
  c.A = {cplx{1.0, 0.0}, cplx{0.5, 0.0}, cplx{0.8, 0.3}};
  c.B = {0.0, -0.25, -0.5, -0.75, -0.9};
  c.t = {-1.0, 0.0, 1.0, 2.0};
  c.seeds = {"identity", "rotation:1", "expdamp:0:2", "expdamp:2.5:0.5",
             "poly:0.5/0.25i/-0.2", "fuzz:2"};
  return c;
}

int cmd_verify(const SweepConfig &config, std::ostream &out, std::ostream &err) {
  try {
    validate(config);
    const auto seeds = resolve_seeds(config);
    const auto params = resolve_params(config, err);
    for (const auto &p : params)
      for (double t : config.t)
        if (p.B() == -1.0 && t >= 1.0)
          throw ConfigError("the weighted bound diverges at B = -1 for t = " +
                            format_real(t) + "; drop t >= 1 or B = -1");
    if (params.empty() || seeds.empty())
      err << "warning: empty grid, no checks run\n";

    std::vector<ReportRow> rows;
    for (const auto &p : params) {
      for (const auto &s : seeds) {
        const bool identity = std::holds_alternative<seed::Identity>(s);
        const ClassMember member = identity ? extremal_function(p, config.terms)
                                            : member_from_seed(p, s, config.terms);
        VerifyOptions options;
        options.tol = config.tol;
        options.sharpness = true;
        options.sharp_tol = config.sharp_tol;
        if (identity)
          options.d1_perturbation = config.inject_d1;
        auto member_rows = to_rows(verify_member(member, config.t, options));
        rows.insert(rows.end(), member_rows.begin(), member_rows.end());
      }
    }
    return emit_report(config, "verify", std::move(rows), out, err);
  } catch (const ConfigError &e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

int cmd_sharpness(const SweepConfig &config, std::ostream &out, std::ostream &err) {
  try {
    validate(config);
    const auto params = resolve_params(config, err);
    if (!config.slow) {
      for (const auto &p : params) {
        if (std::abs(p.B()) > kSharpnessMaxAbsB) {
          err << "error: equality certification at |B| = " << format_real(std::abs(p.B()))
              << " needs at least 10^4 log coefficients because the tail decays like "
                 "1/n^2; pass --slow to run it\n";
          return kConfigError;
        }
      }
    }
    if (params.empty())
      err << "warning: empty grid, no checks run\n";
    std::vector<ReportRow> rows;
    for (const auto &p : params) {
      try {
        rows.push_back(to_row(check_sharpness(p, config.terms, config.sharp_tol, config.slow)));
      } catch (const Error &e) {
        if (e.code() != Errc::SharpnessFailure)
          throw;
        ReportRow r;
        r.theorem = theorem_tag(Theorem::ThmA);
        r.check = "sharpness";
        r.j = p.j();
        r.k = p.k();
        r.A = p.A();
        r.B = p.B();
        r.seed = "identity";
        r.order = config.terms;
        r.bound = thm_a_bound(p).bound;
        r.pass = false;
        r.note = e.what();
        rows.push_back(std::move(r));
      }
    }
    return emit_report(config, "sharpness", std::move(rows), out, err);
  } catch (const ConfigError &e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

int cmd_search(const SweepConfig &config, std::ostream &out, std::ostream &err) {
  try {
    validate(config);
    const SeedFamily family = parse_family(config.family);
    const auto params = resolve_params(config, err);
    if (params.empty())
      err << "warning: empty grid, no searches run\n";

    struct Entry {
      ClassParams params;
      double t;
      SearchReport report;
    };
    std::vector<Entry> entries;
    for (const auto &p : params) {
      for (double t : config.t) {
        SearchOptions options;
        options.budget = config.budget;
        options.rng_seed = config.rng_seed;
        entries.push_back({p, t, adversarial_search(p, t, family, options)});
      }
    }

    std::ostringstream buffer;
    std::size_t failures = 0;
    buffer << "{\n  \"schema\": \"starlike.search/1\",\n  \"timestamp\": "
           << (config.no_timestamp ? std::string("null") : "\"" + utc_timestamp() + "\"")
           << ",\n  \"family\": \"" << to_string(family) << "\",\n  \"budget\": "
           << config.budget << ",\n  \"rng_seed\": " << config.rng_seed
           << ",\n  \"searches\": [";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto &e = entries[i];
      const bool pass = e.report.max_ratio <= 1.0 + config.tol;
      failures += pass ? 0 : 1;
      buffer << (i ? ",\n" : "\n") << "    {\"params\": {\"j\": " << e.params.j()
             << ", \"k\": " << e.params.k() << ", \"A\": {\"re\": "
             << format_real(e.params.A().real()) << ", \"im\": "
             << format_real(e.params.A().imag()) << "}, \"B\": "
             << format_real(e.params.B()) << "}, \"t\": " << format_real(e.t)
             << ", \"N\": " << e.report.order << ", \"max_ratio\": "
             << format_real(e.report.max_ratio) << ", \"argmax\": \""
             << describe(e.report.argmax) << "\", \"evaluations\": "
             << e.report.evaluations << ", \"converged\": "
             << (e.report.converged ? "true" : "false")
             << ", \"pass\": " << (pass ? "true" : "false") << "}";
      err << e.params.describe() << " t=" << format_real(e.t)
          << ": max ratio " << format_real(e.report.max_ratio) << " at "
          << describe(e.report.argmax) << " after " << e.report.evaluations
          << " evaluations" << (e.report.converged ? "" : " (not converged)") << "\n";
    }
    buffer << (entries.empty() ? "]\n" : "\n  ]\n") << "}\n";

    if (config.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file || !(file << buffer.str()) || !file.flush()) {
        err << "error: cannot write report to '" << config.out << "'\n";
        return kIoError;
      }
    }
    return failures == 0 ? kSuccess : kCheckFailure;
  } catch (const ConfigError &e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

int cmd_polylog(double v, double x, std::ostream &out, std::ostream &err) {
  try {
    out << format_real(li(v, x)) << "\n";
    return kSuccess;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

namespace {

// Flag names shared by the sweep subcommands; each is also a config-file key.
const std::vector<std::string> kValueKeys = {
    "j",   "k",       "pairs", "A",        "B",      "t",      "terms",
    "seeds", "tol",   "sharp-tol", "rng-seed", "out", "format", "family",
    "budget", "inject-fault"};
const std::vector<std::string> kFlagKeys = {"no-timestamp", "slow"};

struct SweepOptions {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option *> value_opts;
  std::map<std::string, bool> flags;
  std::map<std::string, CLI::Option *> flag_opts;
  std::string config_file;
};

void add_sweep_options(CLI::App *sub, SweepOptions &o) {
  for (const auto &key : kValueKeys)
    o.value_opts[key] = sub->add_option("--" + key, o.values[key]);
  for (const auto &key : kFlagKeys)
    o.flag_opts[key] = sub->add_flag("--" + key, o.flags[key]);
  o.value_opts["inject-fault"]->group("");
  sub->add_option("--config", o.config_file, "flat key = value file; flags override it");
}

bool parse_bool(const std::string &s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on")
    return true;
  if (s == "false" || s == "0" || s == "no" || s == "off")
    return false;
  throw ConfigError("not a boolean: '" + s + "'");
}

void apply_config_file(SweepOptions &o) {
  if (o.config_file.empty())
    return;
  std::ifstream file(o.config_file);
  if (!file)
    throw ConfigError("cannot read config file '" + o.config_file + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    if (trim(line).empty())
      continue;
    if (eq == std::string::npos)
      throw ConfigError(o.config_file + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (auto it = o.value_opts.find(key); it != o.value_opts.end()) {
      if (it->second->count() == 0)
        o.values[key] = value;
    } else if (auto f = o.flag_opts.find(key); f != o.flag_opts.end()) {
      if (f->second->count() == 0)
        o.flags[key] = parse_bool(value);
    } else {
      throw ConfigError(o.config_file + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

bool given(const SweepOptions &o, const std::string &key) {
  return o.value_opts.at(key)->count() > 0 || !o.values.at(key).empty();
}

SweepConfig build_config(SweepOptions &o, SweepConfig c) {
  apply_config_file(o);
  const auto &v = o.values;

  if (given(o, "pairs")) {
    c.pairs.clear();
    for (const auto &item : split_list(v.at("pairs"))) {
      const auto jk = split_list(item, ':');
      try {
        if (jk.size() != 2)
          throw std::invalid_argument(item);
        c.pairs.emplace_back(parse_int(jk[0]), parse_int(jk[1]));
      } catch (const std::exception &) {
        throw ConfigError("--pairs: expected j:k, got '" + item + "'");
      }
    }
  }
  if (given(o, "j") || given(o, "k")) {
    const auto js = given(o, "j") ? parse_list("j", v.at("j"), parse_int) : std::vector<int>{0, 1, 2};
    const auto ks = given(o, "k") ? parse_list("k", v.at("k"), parse_int)
                                  : std::vector<int>{1, 2, 3, 4};
    c.pairs.clear();
    for (int j : js)
      for (int k : ks)
        c.pairs.emplace_back(j, k);
  }
  if (given(o, "A"))
    c.A = parse_list("A", v.at("A"), parse_complex);
  if (given(o, "B"))
    c.B = parse_list("B", v.at("B"), parse_real);
  if (given(o, "t"))
    c.t = parse_list("t", v.at("t"), parse_real);
  if (given(o, "seeds"))
    c.seeds = split_list(v.at("seeds"));
  try {
    if (given(o, "terms"))
      c.terms = parse_u64(v.at("terms"));
    if (given(o, "tol"))
      c.tol = parse_real(v.at("tol"));
    if (given(o, "sharp-tol"))
      c.sharp_tol = parse_real(v.at("sharp-tol"));
    if (given(o, "rng-seed"))
      c.rng_seed = parse_u64(v.at("rng-seed"));
    if (given(o, "budget"))
      c.budget = parse_u64(v.at("budget"));
    if (given(o, "inject-fault")) {
      const std::string &f = v.at("inject-fault");
      if (f.rfind("d1:", 0) != 0)
        throw ConfigError("--inject-fault expects d1:VALUE");
      c.inject_d1 = parse_complex(f.substr(3));
    }
  } catch (const ConfigError &) {
    throw;
  } catch (const std::exception &) {
    throw ConfigError("malformed numeric option");
  }
  if (given(o, "out"))
    c.out = v.at("out");
  if (given(o, "format"))
    c.format = v.at("format");
  if (given(o, "family"))
    c.family = v.at("family");
  c.no_timestamp = o.flags.at("no-timestamp");
  c.slow = o.flags.at("slow");
  return c;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Logarithmic-coefficient bounds for Janowski (j,k)-symmetric starlike functions"};
  app.require_subcommand(1);

  SweepOptions verify_opts, sharp_opts, search_opts;
  auto *verify = app.add_subcommand("verify", "check every bound on a parameter/seed grid");
  add_sweep_options(verify, verify_opts);
  auto *sharp = app.add_subcommand("sharpness", "certify equality at the extremal function");
  add_sweep_options(sharp, sharp_opts);
  auto *search = app.add_subcommand("search", "derivative-free search for bound violations");
  add_sweep_options(search, search_opts);

  double v = 2.0;
  double x = 0.0;
  auto *polylog = app.add_subcommand("polylog", "evaluate Li_v(x) on [0, 1]");
  polylog->add_option("--v", v, "order (default 2)");
  polylog->add_option("--x", x, "argument")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*verify)
      return cmd_verify(build_config(verify_opts, default_config()), out, err);
    if (*sharp)
      return cmd_sharpness(build_config(sharp_opts, default_config()), out, err);
    if (*search) {
      SweepConfig base = default_config();
      base.pairs = {{1, 1}};
      base.A = {cplx{1.0, 0.0}};
      base.B = {-0.5};
      base.t = {0.0};
      return cmd_search(build_config(search_opts, base), out, err);
    }
    return cmd_polylog(v, x, out, err);
  } catch (const ConfigError &e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
}

} // namespace starlike::cli
