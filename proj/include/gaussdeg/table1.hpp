#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussdeg/counting.hpp"
#include "gaussdeg/reports.hpp"

namespace gaussdeg {

struct Table1Fixture {
  Configuration config;
  std::uint64_t xi_half = 0;
  std::size_t rank = 0;
  /// Set when the published configuration differs from the stored one.
  std::optional<Configuration> printed;
  std::string erratum;
};

/// The thirteen certified fixtures, in table order.
const std::vector<Table1Fixture>& table1_fixtures();

struct Table1Row {
  std::string degree;
  std::string group;
  std::uint64_t expected_xi_half = 0;
  std::uint64_t computed_xi_half = 0;
  std::size_t expected_rank = 0;
  std::size_t computed_rank = 0;
  bool zero_sum = false;
  bool pass = false;
  std::string note;
};

std::vector<Table1Row> verify_table1(CountMethod method = CountMethod::meet_in_middle);

/// Wraps verify_table1 as a printable report. The CSV columns follow the
/// published table without the configuration column.
Report table1_report(CountMethod method = CountMethod::meet_in_middle);

}  // namespace gaussdeg
