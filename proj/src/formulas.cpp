#include "gaussdeg/formulas.hpp"

#include <algorithm>

#include "gaussdeg/error.hpp"

namespace gaussdeg {

BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

BigInt pow2(long e) {
  BigInt r = 1;
  r <<= static_cast<mp_bitcnt_t>(e);
  return r;
}

}  // namespace

BigInt jacobian_degree(int g) {
  if (g < 2) throw InvalidArgument("jacobian_degree needs g >= 2");
  return binom(2L * g - 2, g - 1);
}

std::string to_string(BiellipticCase c) {
  switch (c) {
    case BiellipticCase::t_zero: return "t_zero";
    case BiellipticCase::g4t2_both_hyperelliptic: return "g4t2_both_hyperelliptic";
    case BiellipticCase::t2_cprime_hyperelliptic: return "t2_cprime_hyperelliptic";
    case BiellipticCase::generic: return "generic";
  }
  return "generic";
}

BiellipticCase parse_bielliptic_case(const std::string& s) {
  if (s == "t_zero" || s == "t0") return BiellipticCase::t_zero;
  if (s == "g4t2_both_hyperelliptic" || s == "g4t2") return BiellipticCase::g4t2_both_hyperelliptic;
  if (s == "t2_cprime_hyperelliptic" || s == "t2") return BiellipticCase::t2_cprime_hyperelliptic;
  if (s == "generic") return BiellipticCase::generic;
  throw InvalidArgument("unknown bielliptic case '" + s +
                        "' (t_zero, g4t2_both_hyperelliptic, t2_cprime_hyperelliptic, generic)");
}

nlohmann::json report_to_json(const GaussDegreeReport& r) {
  nlohmann::json j;
  switch (r.family) {
    case Family::jacobian:
      j["family"] = "jacobian";
      j["g"] = r.g;
      break;
    case Family::bielliptic:
      j["family"] = "bielliptic";
      j["g"] = r.g;
      j["t"] = r.t;
      j["case"] = to_string(r.bcase);
      break;
    case Family::boundary:
      j["family"] = "boundary";
      j["d"] = r.degree_vector;
      break;
  }
  j["xi_input"] = r.xi_input.get_str();
  j["degree"] = r.degree.get_str();
  return j;
}

BigInt bielliptic_base_degree(int g, int t, BiellipticCase c, bool alt_g4t2) {
  if (g < 4) throw InvalidArgument("bielliptic degree needs g >= 4");
  if (t < 0 || 2 * t > g) throw InvalidArgument("bielliptic degree needs 0 <= t <= g/2");
  switch (c) {
    case BiellipticCase::t_zero:
      if (t != 0) throw InvalidArgument("case t_zero requires t = 0");
      return binom(2L * g - 2, g - 1);
    case BiellipticCase::g4t2_both_hyperelliptic:
      if (g != 4 || t != 2) throw InvalidArgument("case g4t2_both_hyperelliptic requires (g,t) = (4,2)");
      return alt_g4t2 ? 14 : 18;
    case BiellipticCase::t2_cprime_hyperelliptic:
      if (t != 2) throw InvalidArgument("case t2_cprime_hyperelliptic requires t = 2");
      return 2 * binom(2L * g - 4, g - 2) + 4 * binom(2L * g - 6, g - 3) - pow2(g - 2);
    case BiellipticCase::generic:
      if (t < 1) throw InvalidArgument("case generic requires 1 <= t <= g/2");
      return binom(2L * t - 2, t - 1) * binom(2L * g - 2 * t, g - t) +
             binom(2L * t, t) * binom(2L * g - 2 * t - 2, g - t - 1) - pow2(g - 1);
  }
  throw InvalidArgument("unknown case");
}

GaussDegreeReport bielliptic_degree(int g, int t, BiellipticCase c, const BigInt& xi, bool alt_g4t2) {
  if (xi < 0) throw InvalidArgument("xi must be non-negative");
  const BigInt base = bielliptic_base_degree(g, t, c, alt_g4t2);
  if (xi > base) {
    throw InvalidArgument("xi = " + xi.get_str() + " exceeds " + base.get_str() +
                          ", the degree would be negative");
  }
  GaussDegreeReport r;
  r.family = Family::bielliptic;
  r.g = g;
  r.t = t;
  r.bcase = c;
  r.xi_input = xi;
  r.degree = base - xi;
  return r;
}

BigInt mu(const DegreeVector& d) {
  const std::size_t n = d.blocks();
  if (n >= 8 * sizeof(unsigned long)) throw InvalidArgument("too many parts");
  BigInt total = 0;
  for (unsigned long eps = 1; eps < (1UL << n); ++eps) {
    const long e = __builtin_popcountl(eps);
    BigInt term = e * pow2(static_cast<long>(n) - e) * binom(e - 1, (e - 1) / 2);
    for (std::size_t i = 0; i < n && term != 0; ++i) {
      const long di = d.part(i);
      term *= binom(2 * di - 2, di - static_cast<long>((eps >> i) & 1));
    }
    total += term;
  }
  return total;
}

namespace {

template <typename TopFn>
BigInt mu_tilde_sum(const DegreeVector& d, TopFn top) {
  const std::size_t k = d.blocks();
  if (2 * k >= 8 * sizeof(unsigned long)) throw InvalidArgument("too many parts");
  BigInt total = 0;
  for (unsigned long e0 = 0; e0 < (1UL << k); ++e0) {
    for (unsigned long ei = 0; ei < (1UL << k); ++ei) {
      const long w = std::min(__builtin_popcountl(e0), __builtin_popcountl(ei));
      if (w == 0) continue;
      BigInt term = w;
      for (std::size_t i = 0; i < k && term != 0; ++i) {
        const long di = d.part(i);
        const long s = static_cast<long>(((e0 >> i) & 1) + ((ei >> i) & 1));
        term *= binom(top(di, s), di - s);
      }
      total += term;
    }
  }
  return total;
}

}  // namespace

BigInt mu_tilde(const DegreeVector& d) {
  return mu_tilde_sum(d, [](long di, long) { return 2 * di - 2; });
}

BigInt mu_tilde_top_shifted(const DegreeVector& d) {
  return mu_tilde_sum(d, [](long di, long s) { return 2 * di - s; });
}

BigInt mu_tilde_closed(const DegreeVector& d) {
  const long k = static_cast<long>(d.blocks());
  BigInt p = 1;
  for (int di : d.parts()) p *= binom(2L * di - 1, di);
  return k * pow2(k - 1) * p - mu(d);
}

GaussDegreeReport boundary_degree(const DegreeVector& d, const BigInt& xi) {
  if (xi < 0) throw InvalidArgument("xi must be non-negative");
  const BigInt base = mu(d);
  if (xi > base) {
    throw InvalidArgument("xi = " + xi.get_str() + " exceeds mu" + d.to_string() + " = " + base.get_str());
  }
  GaussDegreeReport r;
  r.family = Family::boundary;
  r.g = d.total();
  r.degree_vector = d.parts();
  r.xi_input = xi;
  r.degree = base - xi;
  return r;
}

BigInt intersection_number_smooth(int g, int t) {
  if (g < 2 || t < 0 || 2 * t > g) throw InvalidArgument("intersection number needs g >= 2, 0 <= t <= g/2");
  if (t == 0) return 2 * binom(2L * g - 2, g - 1);
  return 2 * (binom(2L * t - 2, t - 1) * binom(2L * g - 2 * t, g - t) +
              binom(2L * t, t) * binom(2L * g - 2 * t - 2, g - t - 1));
}

BigInt intersection_number_boundary(const DegreeVector& d) {
  const long k = static_cast<long>(d.blocks());
  BigInt p = k * pow2(k);
  for (int di : d.parts()) p *= binom(2L * di - 1, di);
  return p;
}

BigInt xi_upper_bound(const DegreeVector& d) {
  const int dn = *std::max_element(d.parts().begin(), d.parts().end());
  BigInt q;
  const BigInt n = relation_count(d);
  mpz_fdiv_q_ui(q.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(dn));
  return q;
}

}  // namespace gaussdeg
