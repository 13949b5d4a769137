// gaussdeg: command-line front end for the formulas, counters, search and
// table reproduction.
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cache.hpp"
#include "gaussdeg/counting.hpp"
#include "gaussdeg/formulas.hpp"
#include "gaussdeg/lattice.hpp"
#include "gaussdeg/reports.hpp"
#include "gaussdeg/search.hpp"
#include "gaussdeg/table1.hpp"
#include "gaussdeg/version.hpp"

using namespace gaussdeg;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  std::string format;  // empty: per-command default
  std::string out;
  std::string cache_dir;
  bool no_cache = false;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;
  bool alt_g4t2 = false;
  std::string command_line;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw UsageError("cannot write " + g.out);
  f << text;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string timestamp_now() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// Key/value output for scalar results. `primary` is what the bare format prints.
void emit_fields(const Globals& g, const std::vector<std::pair<std::string, json>>& fields,
                 const std::string& primary, const std::string& default_format = "") {
  const std::string fmt = g.format.empty() ? default_format : g.format;
  auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (fmt.empty()) {
    for (const auto& [k, v] : fields) {
      if (k == primary) emit(g, text(v) + "\n");
    }
    return;
  }
  Report r;
  r.name = primary;
  Table t{primary, {}, {{}}};
  for (const auto& [k, v] : fields) {
    t.columns.push_back(k);
    t.rows[0].push_back(text(v));
  }
  r.tables.push_back(t);
  if (fmt == "json") {
    json j = json::object();
    for (const auto& [k, v] : fields) j[k] = v;
    emit(g, j.dump(2) + "\n");
  } else if (fmt == "csv") {
    emit(g, render_csv(r));
  } else {
    emit(g, render_markdown(r));
  }
}

int emit_report(const Globals& g, const Report& r) {
  const std::string fmt = g.format.empty() ? "md" : g.format;
  if (fmt == "json") {
    emit(g, render_json(r).dump(2) + "\n");
  } else if (fmt == "csv") {
    emit(g, render_csv(r));
  } else {
    emit(g, render_markdown(r));
  }
  if (!r.passed()) {
    for (const auto& c : r.checks) {
      if (!c.pass) std::cerr << "FAIL " << c.name << ": expected " << c.expected << ", computed " << c.computed << "\n";
    }
    return kVerifyFailed;
  }
  return kOk;
}

// Runs `compute` unless the cache already holds a result for `spec`.
json cached_run(const Globals& g, const std::string& command, const json& spec,
                const std::function<json()>& compute) {
  const std::string hash = cli::spec_hash({{"command", command}, {"spec", spec}}, kArtifactVersion);
  std::optional<cli::ResultCache> cache;
  if (!g.no_cache && !g.cache_dir.empty()) cache.emplace(g.cache_dir, kArtifactVersion, std::cerr);
  if (cache) {
    if (auto hit = cache->lookup(hash)) {
      json r = hit->result;
      r["cached"] = true;
      r["spec_hash"] = hash;
      return r;
    }
  }
  const auto start = std::chrono::steady_clock::now();
  json r = compute();
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (cache) cache->store({g.command_line, hash, r, wall, kArtifactVersion, timestamp_now()});
  r["cached"] = false;
  r["spec_hash"] = hash;
  return r;
}

SearchSpec load_search_spec(const Globals& g, const std::string& path) {
  SearchSpec s = search_spec_from_json(read_json_file(path));
  if (g.seed) s.seed = *g.seed;
  s.threads = g.threads;
  return s;
}

int cmd_search(const Globals& g, const std::string& path) {
  const SearchSpec s = load_search_spec(g, path);
  json r = cached_run(g, "search", search_spec_to_json(s), [&] { return search_result_to_json(search_max_xi(s)); });
  r["seed"] = s.seed;
  const std::string fmt = g.format.empty() ? "json" : g.format;
  if (fmt == "json") {
    emit(g, r.dump(2) + "\n");
  } else {
    emit_fields(g,
                {{"found", r["found"]},
                 {"best_xi", r["best_xi"]},
                 {"exhaustive", r["exhaustive"]},
                 {"visited", r["visited"]},
                 {"module_rank", r["module_rank"]},
                 {"seed", r["seed"]},
                 {"cached", r["cached"]}},
                "best_xi", fmt);
  }
  return kOk;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--targets: expected LO..HI, got '" + text + "'");
  }
}

int cmd_sweep(const Globals& g, const std::string& path, const std::string& targets) {
  const SearchSpec base = load_search_spec(g, path);
  auto [lo, hi] = parse_range(targets);
  if (lo > hi) throw UsageError("--targets: empty range");
  Report rep;
  rep.name = "sweep";
  Table t{"achievable values, seed " + std::to_string(base.seed),
          {"target", "found", "xi", "exhaustive", "visited", "cached"},
          {}};
  json all = json::array();
  for (std::uint64_t target = lo + lo % 2; target <= hi; target += 2) {
    SearchSpec s = base;
    s.target = target;
    json r = cached_run(g, "sweep", search_spec_to_json(s),
                        [&] { return search_result_to_json(find_xi_value(s, target)); });
    r["target"] = target;
    t.rows.push_back({std::to_string(target), r["found"].dump(), r["best_xi"].dump(), r["exhaustive"].dump(),
                      r["visited"].dump(), r["cached"].dump()});
    rep.checks.push_back({"target " + std::to_string(target), "found", r["found"].get<bool>() ? "found" : "not found",
                          r["found"].get<bool>()});
    all.push_back(std::move(r));
  }
  rep.tables.push_back(std::move(t));
  if ((g.format.empty() ? "json" : g.format) == "json") {
    emit(g, json({{"seed", base.seed}, {"results", all}, {"all_found", rep.passed()}}).dump(2) + "\n");
    return rep.passed() ? kOk : kVerifyFailed;
  }
  return emit_report(g, rep);
}

std::string suggested_case(const BiellipticData& b) {
  if (b.t == 0) return to_string(BiellipticCase::t_zero);
  if (b.t != 2) return to_string(BiellipticCase::generic);
  const bool cprime = cprime_hyperelliptic(b);
  if (b.g == 4) {
    // C'' has genus 2 as well; test it by swapping the two halves.
    BiellipticData swapped = b;
    std::swap(swapped.delta_prime_points, swapped.delta_dprime_points);
    swapped.delta_prime = b.group.sub(b.delta, b.delta_prime);
    if (cprime && cprime_hyperelliptic(swapped)) return to_string(BiellipticCase::g4t2_both_hyperelliptic);
  }
  return to_string(cprime ? BiellipticCase::t2_cprime_hyperelliptic : BiellipticCase::generic);
}

int cmd_count_bielliptic(const Globals& g, const std::string& path) {
  const BiellipticData b = bielliptic_from_json(read_json_file(path));
  const auto x = count_xi_bielliptic(b);
  const std::string c = suggested_case(b);
  std::vector<std::pair<std::string, json>> fields = {
      {"g", b.g}, {"t", b.t}, {"xi", x.xi}, {"xi_tilde", x.xi_tilde}, {"suggested_case", c}};
  if (b.t == 2) fields.emplace_back("cprime_hyperelliptic", cprime_hyperelliptic(b));
  if (b.g >= 4) {
    const auto bc = parse_bielliptic_case(c);
    const bool uses_tilde = bc == BiellipticCase::t2_cprime_hyperelliptic ||
                            (bc == BiellipticCase::g4t2_both_hyperelliptic && g.alt_g4t2);
    const std::uint64_t xi = uses_tilde ? x.xi_tilde : x.xi;
    fields.emplace_back("degree", bielliptic_degree(b.g, b.t, bc, xi, g.alt_g4t2).degree.get_str());
  }
  emit_fields(g, fields, "xi", "json");
  return kOk;
}

std::vector<BigInt> parse_vector(const std::string& text) {
  std::vector<BigInt> v;
  std::string s = text;
  for (char& ch : s) {
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  }
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    try {
      v.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw UsageError("--vector: '" + tok + "' is not an integer");
    }
  }
  return v;
}

void fallthrough_all(CLI::App* app) {
  app->fallthrough();
  for (auto* sub : app->get_subcommands({})) fallthrough_all(sub);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss map degrees and the xi relation count"};
  app.require_subcommand(1);
  Globals g;
  for (int i = 0; i < argc; ++i) g.command_line += (i ? " " : "") + std::string(argv[i]);

  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--out", g.out, "Write output to PATH");
  app.add_option("--cache", g.cache_dir, "Result cache directory");
  app.add_flag("--no-cache", g.no_cache, "Bypass the result cache");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", g.seed, "Seed for randomized searches");
  app.add_flag("--alt-g4t2", g.alt_g4t2, "Use 14 instead of 18 for (g,t)=(4,2) with both halves hyperelliptic");

  int rc = kOk;
  std::function<int()> action;

  // formulas
  auto* formulas = app.add_subcommand("formulas", "Closed-form Gauss degrees");
  formulas->require_subcommand(1);
  int fg = 0, ft = 0;
  std::string fcase = "generic", fd;
  std::string fxi = "0";
  auto* egt = formulas->add_subcommand("egt", "Bielliptic degree");
  egt->add_option("--g", fg)->required();
  egt->add_option("--t", ft)->required();
  egt->add_option("--case", fcase, "t_zero | g4t2_both_hyperelliptic | t2_cprime_hyperelliptic | generic");
  egt->add_option("--xi", fxi, "xi (xi~ for the t2 case)");
  egt->callback([&] {
    action = [&] {
      const auto r = bielliptic_degree(fg, ft, parse_bielliptic_case(fcase), BigInt(fxi), g.alt_g4t2);
      std::vector<std::pair<std::string, json>> fields;
      const json j = report_to_json(r);
      for (const auto& [k, v] : j.items()) fields.emplace_back(k, v);
      emit_fields(g, fields, "degree");
      return kOk;
    };
  });
  auto degree_cmd = [&](const std::string& name, const std::string& help, std::function<BigInt(const DegreeVector&)> f) {
    auto* sub = formulas->add_subcommand(name, help);
    sub->add_option("--d", fd, "Degree vector, e.g. 1,2,2")->required();
    sub->callback([&, name, f] {
      action = [&, name, f] {
        const DegreeVector d = parse_degree(fd);
        emit_fields(g, {{"d", d.to_string()}, {name, f(d).get_str()}}, name);
        return kOk;
      };
    });
  };
  degree_cmd("mu", "Boundary degree at xi = 0", mu);
  degree_cmd("mu-tilde", "Correction term", mu_tilde);
  degree_cmd("bound", "Upper bound for xi", xi_upper_bound);
  auto* jac = formulas->add_subcommand("jacobian", "Jacobian degree");
  jac->add_option("--g", fg)->required();
  jac->callback([&] {
    action = [&] {
      emit_fields(g, {{"g", fg}, {"jacobian", jacobian_degree(fg).get_str()}}, "jacobian");
      return kOk;
    };
  });

  // counting
  std::string spec_path, method = "mitm";
  auto* count = app.add_subcommand("count", "Count xi for a configuration");
  count->add_option("--spec", spec_path, "Configuration JSON")->required();
  count->add_option("--method", method)->check(CLI::IsMember({"naive", "mitm"}));
  count->callback([&] {
    action = [&] {
      const Configuration c = configuration_from_json(read_json_file(spec_path));
      const auto r = count_xi(c, method == "naive" ? CountMethod::naive : CountMethod::meet_in_middle, g.threads);
      emit_fields(g,
                  {{"xi", r.xi},
                   {"total_sum_zero", r.total_sum_zero},
                   {"on_diagonal", r.on_diagonal},
                   {"method", method},
                   {"degree", c.degree().to_string()},
                   {"group", c.group().to_string()}},
                  "xi", "json");
      return kOk;
    };
  });
  auto* cb = app.add_subcommand("count-bielliptic", "Count xi and xi~ from bielliptic divisor data");
  cb->add_option("--spec", spec_path, "Bielliptic data JSON")->required();
  cb->callback([&] { action = [&] { return cmd_count_bielliptic(g, spec_path); }; });

  // search
  auto* search = app.add_subcommand("search", "Maximize xi (or hit a target)");
  search->add_option("--spec", spec_path, "Search spec JSON")->required();
  search->callback([&] { action = [&] { return cmd_search(g, spec_path); }; });
  std::string targets;
  auto* sweep = app.add_subcommand("sweep", "Look for every even xi in a range");
  sweep->add_option("--spec", spec_path, "Search spec JSON")->required();
  sweep->add_option("--targets", targets, "LO..HI")->required();
  sweep->callback([&] { action = [&] { return cmd_sweep(g, spec_path, targets); }; });

  // lattices
  std::string matrix_path, vector_text;
  auto* snf = app.add_subcommand("snf", "Smith invariants of an integer matrix");
  snf->add_option("--matrix", matrix_path, "Matrix JSON")->required();
  snf->callback([&] {
    action = [&] {
      const auto inv = smith_invariants(matrix_from_json(read_json_file(matrix_path)));
      json factors = json::array();
      for (const auto& f : inv.factors) factors.push_back(f.get_str());
      emit_fields(g, {{"rank", inv.rank}, {"factors", factors}}, "factors", "json");
      return kOk;
    };
  });
  auto* member = app.add_subcommand("member", "Membership of a vector in the row lattice");
  member->add_option("--matrix", matrix_path, "Matrix JSON")->required();
  member->add_option("--vector", vector_text, "Comma-separated integers")->required();
  member->callback([&] {
    action = [&] {
      const RowLattice lat(matrix_from_json(read_json_file(matrix_path)));
      emit_fields(g, {{"member", lat.contains(parse_vector(vector_text))}, {"rank", lat.rank()}}, "member", "json");
      return kOk;
    };
  });

  // verification
  auto* verify = app.add_subcommand("verify", "Reproduce and check published tables");
  verify->require_subcommand(1);
  int gmax = 30, degmax = 9;
  verify->add_subcommand("table1", "Table of xi values for g=5")->callback([&] {
    action = [&] { return emit_report(g, table1_report()); };
  });
  verify->add_subcommand("dim5", "Dimension-5 degree tables")->callback([&] {
    action = [&] { return emit_report(g, dim5_report()); };
  });
  auto* mono = verify->add_subcommand("monotonicity", "Bielliptic vs Jacobian degrees");
  mono->add_option("--gmax", gmax)->required();
  mono->callback([&] { action = [&] { return emit_report(g, monotonicity_report(gmax)); }; });
  auto* varley = verify->add_subcommand("varley", "Varley-type configurations");
  varley->add_option("--gmax", gmax)->required();
  varley->callback([&] { action = [&] { return emit_report(g, varley_report(gmax, g.threads)); }; });
  auto* ident = verify->add_subcommand("identities", "Closed-form identities");
  ident->add_option("--degmax", degmax)->required();
  ident->callback([&] { action = [&] { return emit_report(g, identities_report(degmax)); }; });

  fallthrough_all(&app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    rc = action ? action() : kUsage;
  } catch (const SearchTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
