#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gaussdeg {

/// A rectangular table of preformatted cells.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// One verified claim: what was expected and what came out.
struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct Report {
  std::string name;
  std::vector<Table> tables;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failures() const;
};

/// CSV emits only the tables, separated by one blank line.
std::string render_csv(const Report& r);
std::string render_markdown(const Report& r);
nlohmann::json render_json(const Report& r);

/// Degrees and max-xi rows for the dimension-5 loci and boundary strata,
/// plus the set of Gauss degrees they realize.
Report dim5_report();

/// Compares bielliptic degrees with the Jacobian degree for g = 2..gmax.
Report monotonicity_report(int gmax);

/// Counts xi on the explicit Varley-type configurations for g = 1..gmax.
Report varley_report(int gmax, unsigned threads = 1);

/// Closed-form identities over every degree vector with total <= degmax.
Report identities_report(int degmax);

}  // namespace gaussdeg
