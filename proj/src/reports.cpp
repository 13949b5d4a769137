#include "gaussdeg/reports.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "gaussdeg/counting.hpp"
#include "gaussdeg/error.hpp"
#include "gaussdeg/formulas.hpp"
#include "gaussdeg/table1.hpp"

namespace gaussdeg {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
  os << "\n";
}

void md_table(std::ostringstream& os, const std::vector<std::string>& columns,
              const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(columns.size(), 3);
  for (std::size_t i = 0; i < columns.size(); ++i) width[i] = std::max(width[i], columns[i].size());
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (std::size_t i = 0; i < width.size(); ++i) {
      const std::string c = i < cells.size() ? cells[i] : "";
      os << " " << c << std::string(width[i] - c.size(), ' ') << " |";
    }
    os << "\n";
  };
  line(columns);
  os << "|";
  for (auto w : width) os << std::string(w + 2, '-') << "|";
  os << "\n";
  for (const auto& r : rows) line(r);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string set_to_string(const std::set<long>& s) {
  std::vector<std::string> parts;
  for (long v : s) parts.push_back(std::to_string(v));
  return "{" + join(parts) + "}";
}

// All ordered compositions of n.
void compositions(int n, std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& fn) {
  if (n == 0) {
    if (!prefix.empty()) fn(prefix);
    return;
  }
  for (int p = 1; p <= n; ++p) {
    prefix.push_back(p);
    compositions(n - p, prefix, fn);
    prefix.pop_back();
  }
}

// Largest xi among stored fixtures for degree d whose group needs at most
// `max_generators` torsion generators.
std::uint64_t fixture_max_xi(const DegreeVector& d, std::size_t max_generators) {
  std::uint64_t best = 0;
  for (const auto& f : table1_fixtures()) {
    if (f.config.degree() != d || f.config.group().torsion_generators() > max_generators) continue;
    best = std::max(best, count_xi(f.config).xi);
  }
  return best;
}

}  // namespace

std::string render_csv(const Report& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.tables.size(); ++i) {
    if (i) os << "\n";
    csv_line(os, r.tables[i].columns);
    for (const auto& row : r.tables[i].rows) csv_line(os, row);
  }
  return os.str();
}

std::string render_markdown(const Report& r) {
  std::ostringstream os;
  os << "## " << r.name << "\n";
  for (const auto& t : r.tables) {
    os << "\n### " << t.title << "\n\n";
    md_table(os, t.columns, t.rows);
  }
  if (!r.checks.empty()) {
    os << "\n### checks\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : r.checks) rows.push_back({c.pass ? "pass" : "FAIL", c.name, c.expected, c.computed});
    md_table(os, {"result", "check", "expected", "computed"}, rows);
  }
  for (const auto& n : r.notes) os << "\n- " << n;
  if (!r.notes.empty()) os << "\n";
  os << "\n" << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " checks pass\n";
  return os.str();
}

nlohmann::json render_json(const Report& r) {
  nlohmann::json j;
  j["report"] = r.name;
  j["passed"] = r.passed();
  j["tables"] = nlohmann::json::array();
  for (const auto& t : r.tables) j["tables"].push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  }
  j["notes"] = r.notes;
  return j;
}

Report dim5_report() {
  Report rep;
  rep.name = "dim5";
  const int g = 5;

  struct Locus {
    std::string name;
    BigInt degree;
    std::optional<std::uint64_t> max_xi;
  };
  // Elliptic bases carry at most two torsion generators.
  const std::vector<Locus> loci = {
      {"J5", jacobian_degree(g), std::nullopt},
      {"A5dec", 0, std::nullopt},
      {"E'5_0", bielliptic_base_degree(g, 0, BiellipticCase::t_zero), fixture_max_xi(DegreeVector({5}), 2)},
      {"E'5_1", bielliptic_base_degree(g, 1, BiellipticCase::generic), fixture_max_xi(DegreeVector({1, 4}), 2)},
      {"E'5_2", bielliptic_base_degree(g, 2, BiellipticCase::generic), fixture_max_xi(DegreeVector({2, 3}), 2)},
  };
  Table top{"loci", {"Z"}, {{"deg G(Z)"}, {"max xi"}}};
  for (const auto& l : loci) {
    top.columns.push_back(l.name);
    top.rows[0].push_back(l.degree.get_str());
    top.rows[1].push_back(l.max_xi ? std::to_string(*l.max_xi) : "");
  }

  // The cycle-of-lines base has a cyclic torsion group.
  const std::vector<std::vector<int>> strata = {{1, 1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 3}, {1, 2, 2},
                                                {1, 4},          {2, 3},       {5}};
  Table bottom{"boundary strata", {"d"}, {{"deg G(S_d)"}, {"max xi"}}};
  std::vector<std::pair<BigInt, std::uint64_t>> boundary;
  for (const auto& parts : strata) {
    const DegreeVector d(parts);
    const BigInt deg = boundary_degree(d, 0).degree;
    const std::uint64_t mx = fixture_max_xi(d, 1);
    bottom.columns.push_back(d.to_string());
    bottom.rows[0].push_back(deg.get_str());
    bottom.rows[1].push_back(std::to_string(mx));
    boundary.emplace_back(deg, mx);
  }
  rep.tables = {top, bottom};

  auto row_check = [&](const std::string& name, const std::string& expected, const std::vector<std::string>& row) {
    const std::string computed = join(std::vector<std::string>(row.begin() + 1, row.end()));
    rep.checks.push_back({name, expected, computed, expected == computed});
  };
  row_check("loci degrees", "70,0,70,94,60", top.rows[0]);
  row_check("loci max xi", ",,22,18,20", top.rows[1]);
  row_check("boundary degrees", "30,36,52,44,70,52,70", bottom.rows[0]);
  row_check("boundary max xi", "10,12,14,16,18,20,20", bottom.rows[1]);

  // Every value 0 <= 2k <= max xi is realized, each lowering the degree by 2k.
  std::set<long> derived = {0, 16};  // decomposable; hyperelliptic Jacobians 2^{g-1}
  derived.insert(loci[0].degree.get_si());
  auto add_range = [&](const BigInt& deg, std::uint64_t mx) {
    for (std::uint64_t x = 0; x <= mx; x += 2) derived.insert(deg.get_si() - static_cast<long>(x));
  };
  for (const auto& l : loci) {
    if (l.max_xi) add_range(l.degree, *l.max_xi);
  }
  for (const auto& [deg, mx] : boundary) add_range(deg, mx);
  std::set<long> stated = {0, 16};
  for (long v = 20; v <= 92; v += 2) {
    if (v != 72 && v != 74) stated.insert(v);
  }
  rep.checks.push_back({"achievable Gauss degrees", set_to_string(stated), set_to_string(derived), stated == derived});
  std::vector<std::string> diff;
  for (long v : derived) {
    if (!stated.count(v)) diff.push_back("+" + std::to_string(v));
  }
  for (long v : stated) {
    if (!derived.count(v)) diff.push_back("-" + std::to_string(v));
  }
  if (!diff.empty()) rep.notes.push_back("derived degree set differs from the stated one by " + join(diff, " "));
  return rep;
}

Report monotonicity_report(int gmax) {
  if (gmax < 4) throw InvalidArgument("monotonicity needs gmax >= 4");
  Report rep;
  rep.name = "monotonicity";
  Table t{"bielliptic vs Jacobian degrees", {"g", "deg E_g1", "J_g", "deg E_g2", "deg E_g,floor(g/2)"}, {}};
  for (int g = 4; g <= gmax; ++g) {
    const BigInt jg = jacobian_degree(g);
    std::vector<BigInt> e;  // e[t-1] = deg E_{g,t}
    for (int t = 1; 2 * t <= g; ++t) e.push_back(bielliptic_base_degree(g, t, BiellipticCase::generic));
    bool ok = e[0] > jg;
    for (std::size_t i = 1; i < e.size(); ++i) ok = ok && jg > e[i] && e[i - 1] > e[i];
    t.rows.push_back({std::to_string(g), e[0].get_str(), jg.get_str(), e[1].get_str(), e.back().get_str()});
    rep.checks.push_back({"g=" + std::to_string(g), "E_g1 > J_g > E_gt, decreasing in t",
                          "E_g1=" + e[0].get_str() + " J_g=" + jg.get_str() + " E_g2=" + e[1].get_str(), ok});
  }
  if (gmax >= 7) {
    std::vector<std::string> e2, jg;
    for (int g = 4; g <= 7; ++g) {
      e2.push_back(bielliptic_base_degree(g, 2, BiellipticCase::generic).get_str());
      jg.push_back(jacobian_degree(g).get_str());
    }
    const std::string computed = join(e2, "/") + " vs " + join(jg, "/");
    const std::string expected = "16/60/228/860 vs 20/70/252/924";
    rep.checks.push_back({"g=4..7 table", expected, computed, computed == expected});
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

Report varley_report(int gmax, unsigned threads) {
  if (gmax < 1) throw InvalidArgument("varley needs gmax >= 1");
  Report rep;
  rep.name = "varley";
  Table t{"Varley-type configurations", {"g", "G", "xi", "expected", "Gauss degree"}, {}};
  for (int g = 1; g <= gmax; ++g) {
    const auto v = varley_configuration(g);
    const std::uint64_t xi = count_xi(v.configuration, CountMethod::meet_in_middle, threads).xi;
    const BigInt gauss = mu(v.configuration.degree()) - BigInt(std::to_string(xi));
    t.rows.push_back({std::to_string(g), v.configuration.group().to_string(), std::to_string(xi),
                      std::to_string(v.expected_xi), gauss.get_str()});
    rep.checks.push_back({"g=" + std::to_string(g) + " xi", std::to_string(v.expected_xi), std::to_string(xi),
                          xi == v.expected_xi});
    if (g == 4) rep.checks.push_back({"g=4 Gauss degree", "4", gauss.get_str(), gauss == 4});
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

Report identities_report(int degmax) {
  if (degmax < 1) throw InvalidArgument("identities needs degmax >= 1");
  Report rep;
  rep.name = "identities";
  struct Tally {
    explicit Tally(std::string n) : name(std::move(n)) {}
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    void record(bool ok, const std::string& what) {
      ++cases;
      if (!ok) failures.push_back(what);
    }
  };
  Tally single{"mu((g)) = C(2g-2,g-1)"}, one_rest{"mu((1,g-1)) = C(2g-2,g-1)"},
      ones{"mu((1^g)) = g C(g-1,floor(g/2))"}, two{"mu((t,g-t)) closed form"},
      half{"mu + mu~ = 1/2 k 2^k prod C(2d_i-1,d_i)"}, tilde{"mu~ double sum = closed form"},
      perm{"mu invariant under permutation"}, smooth{"E_gt generic = 1/2 smooth intersection - 2^(g-1)"};

  for (int g = 1; g <= degmax; ++g) {
    const BigInt c = binom(2 * g - 2, g - 1);
    single.record(mu(DegreeVector({g})) == c, "g=" + std::to_string(g));
    if (g >= 2) one_rest.record(mu(DegreeVector({1, g - 1})) == c, "g=" + std::to_string(g));
    ones.record(mu(DegreeVector(std::vector<int>(static_cast<std::size_t>(g), 1))) == g * binom(g - 1, g / 2),
                "g=" + std::to_string(g));
    for (int t = 1; 2 * t <= g; ++t) {
      const BigInt closed = 2 * binom(2 * t - 1, t) * binom(2 * g - 2 * t - 1, g - t) -
                            2 * binom(2 * t - 2, t) * binom(2 * g - 2 * t - 2, g - t);
      const std::string at = "(g,t)=(" + std::to_string(g) + "," + std::to_string(t) + ")";
      two.record(mu(DegreeVector({t, g - t})) == closed, at);
      if (g < 4) continue;  // the bielliptic formulas start at g = 4
      BigInt pow2;
      mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(g - 1));
      smooth.record(bielliptic_base_degree(g, t, BiellipticCase::generic) ==
                        intersection_number_smooth(g, t) / 2 - pow2,
                    at);
    }
    std::vector<int> prefix;
    compositions(g, prefix, [&](const std::vector<int>& parts) {
      const DegreeVector d(parts);
      const BigInt m = mu(d), mt = mu_tilde(d);
      half.record(2 * (m + mt) == intersection_number_boundary(d), d.to_string());
      tilde.record(mt == mu_tilde_closed(d), d.to_string());
      std::vector<int> sorted = parts;
      std::sort(sorted.begin(), sorted.end());
      perm.record(m == mu(DegreeVector(sorted)), d.to_string());
    });
  }

  Table t{"identities, deg <= " + std::to_string(degmax), {"identity", "cases", "failures"}, {}};
  for (const Tally* y : {&single, &one_rest, &ones, &two, &half, &tilde, &perm, &smooth}) {
    t.rows.push_back({y->name, std::to_string(y->cases), std::to_string(y->failures.size())});
    rep.checks.push_back({y->name, std::to_string(y->cases) + " cases hold",
                          y->failures.empty() ? std::to_string(y->cases) + " cases hold"
                                              : "fails at " + join(y->failures, " "),
                          y->failures.empty()});
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

}  // namespace gaussdeg
