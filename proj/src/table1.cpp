#include "gaussdeg/table1.hpp"

#include "gaussdeg/lattice.hpp"

namespace gaussdeg {

namespace detail {
extern const char* const kTable1Json;
}

namespace {

std::vector<Table1Fixture> load_fixtures() {
  const auto doc = nlohmann::json::parse(detail::kTable1Json);
  std::vector<Table1Fixture> out;
  for (const auto& row : doc.at("rows")) {
    Table1Fixture f{configuration_from_json(row), row.at("xi_half").get<std::uint64_t>(),
                    row.at("rank").get<std::size_t>(), std::nullopt, row.value("erratum", std::string())};
    if (row.contains("printed_blocks")) {
      nlohmann::json printed = row;
      printed["blocks"] = row.at("printed_blocks");
      f.printed = configuration_from_json(printed);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t module_rank(const Configuration& c) {
  return RowLattice(build_relation_module(c.degree(), satisfied_relations(c)).matrix).rank();
}

}  // namespace

const std::vector<Table1Fixture>& table1_fixtures() {
  static const std::vector<Table1Fixture> fixtures = load_fixtures();
  return fixtures;
}

std::vector<Table1Row> verify_table1(CountMethod method) {
  std::vector<Table1Row> rows;
  for (const auto& f : table1_fixtures()) {
    Table1Row r;
    r.degree = f.config.degree().to_string();
    r.group = f.config.group().to_string();
    r.expected_xi_half = f.xi_half;
    r.expected_rank = f.rank;
    const auto xi = count_xi(f.config, method);
    r.computed_xi_half = xi.xi / 2;
    r.zero_sum = xi.total_sum_zero;
    r.computed_rank = module_rank(f.config);
    r.pass = xi.xi % 2 == 0 && r.computed_xi_half == r.expected_xi_half && r.computed_rank == r.expected_rank &&
             r.zero_sum && !xi.on_diagonal;
    if (f.printed) {
      const auto p = count_xi(*f.printed, method);
      r.note = "erratum: " + f.erratum + " (printed configuration: xi = " + std::to_string(p.xi) +
               (p.total_sum_zero ? ", zero-sum" : ", sum nonzero") + ")";
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

Report table1_report(CountMethod method) {
  Report rep;
  rep.name = "table1";
  Table t{"xi values for g=5", {"d", "xi/2", "G", "rank"}, {}};
  for (const auto& r : verify_table1(method)) {
    t.rows.push_back({r.degree, std::to_string(r.computed_xi_half), r.group, std::to_string(r.computed_rank)});
    rep.checks.push_back({r.degree + " " + r.group,
                          "xi/2=" + std::to_string(r.expected_xi_half) + " rank=" + std::to_string(r.expected_rank),
                          "xi/2=" + std::to_string(r.computed_xi_half) + " rank=" + std::to_string(r.computed_rank) +
                              (r.zero_sum ? "" : " (sum nonzero)"),
                          r.pass});
    if (!r.note.empty()) rep.notes.push_back(r.degree + " " + r.group + ": " + r.note);
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

}  // namespace gaussdeg
