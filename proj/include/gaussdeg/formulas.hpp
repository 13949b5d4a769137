#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gaussdeg/bigint.hpp"
#include "gaussdeg/relations.hpp"

namespace gaussdeg {

/// Exact C(n, k); zero unless 0 <= k <= n.
BigInt binom(long n, long k);

/// Degree of the Gauss map on a general Jacobian of genus g: C(2g-2, g-1).
BigInt jacobian_degree(int g);

enum class BiellipticCase { t_zero, g4t2_both_hyperelliptic, t2_cprime_hyperelliptic, generic };

std::string to_string(BiellipticCase c);
BiellipticCase parse_bielliptic_case(const std::string& s);

/// Families a degree belongs to.
enum class Family { jacobian, bielliptic, boundary };

struct GaussDegreeReport {
  Family family = Family::bielliptic;
  int g = 0;
  int t = 0;
  BiellipticCase bcase = BiellipticCase::generic;
  std::vector<int> degree_vector;  // boundary family only
  BigInt xi_input = 0;
  BigInt degree = 0;
};

nlohmann::json report_to_json(const GaussDegreeReport& r);

/// Degree at xi = 0 for the bielliptic family with given case.
/// `alt_g4t2` selects 14 instead of 18 for the (4,2) doubly hyperelliptic case.
BigInt bielliptic_base_degree(int g, int t, BiellipticCase c, bool alt_g4t2 = false);

/// Full degree. `xi` is xi for t_zero, g4t2 and generic, and xi~ for
/// t2_cprime_hyperelliptic. Throws InvalidArgument on an inconsistent case or
/// when xi exceeds the base degree.
GaussDegreeReport bielliptic_degree(int g, int t, BiellipticCase c, const BigInt& xi,
                                    bool alt_g4t2 = false);

/// Boundary degree at xi = 0.
BigInt mu(const DegreeVector& d);

/// Correction term, by direct summation over pairs of 0/1 vectors.
BigInt mu_tilde(const DegreeVector& d);

/// Same quantity via k 2^{k-1} prod C(2d_i-1, d_i) - mu(d).
BigInt mu_tilde_closed(const DegreeVector& d);

/// The variant with C(2d_i - e0_i - einf_i, d_i - e0_i - einf_i) in the
/// product. It does not satisfy the closed form; kept for comparison only.
BigInt mu_tilde_top_shifted(const DegreeVector& d);

GaussDegreeReport boundary_degree(const DegreeVector& d, const BigInt& xi);

/// 2 (C(2t-2,t-1) C(2g-2t,g-t) + C(2t,t) C(2g-2t-2,g-t-1)); 2 C(2g-2,g-1) at t = 0.
BigInt intersection_number_smooth(int g, int t);

/// k 2^k prod C(2d_i-1, d_i).
BigInt intersection_number_boundary(const DegreeVector& d);

/// floor(prod C(2d_k,d_k) / max_k d_k).
BigInt xi_upper_bound(const DegreeVector& d);

}  // namespace gaussdeg
