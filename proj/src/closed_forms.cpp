#include "nichols/closed_forms.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "nichols/braiding.hpp"
#include "nichols/scalar_literal.hpp"
#include "nichols/sym_action.hpp"
#include "nichols/symmetrizer.hpp"

namespace nichols {
namespace {

MultiPoly a_monomial(long long coeff, std::uint32_t da) {
  return MultiPoly::monomial({da, 0, 0}, Rational(static_cast<long>(coeff)));
}

// Every stated coefficient is an integer on its validity range; a remainder
// would mean the validity range is being applied outside itself.
long long exact_div(long long num, long long den) {
  if (num % den != 0)
    throw std::logic_error("closed form: non-integral coefficient");
  return num / den;
}

MultiPoly from_a_rows(
    std::initializer_list<std::pair<std::uint32_t, long long>> rows) {
  MultiPoly p;
  for (const auto& [da, c] : rows) p += a_monomial(c, da);
  return p;
}

}  // namespace

unsigned long long binomial(std::size_t n, long long k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  std::size_t kk = static_cast<std::size_t>(k);
  if (kk > n - kk) kk = n - kk;
  unsigned long long r = 1;
  // Each partial product r * (n-kk+i) is divisible by i.
  for (std::size_t i = 1; i <= kk; ++i) r = r * (n - kk + i) / i;
  return r;
}

unsigned long long cf_orbit_size(std::size_t n, std::size_t k,
                                 WordParity parity) {
  if (k > n) throw std::out_of_range("cf_orbit_size: need 0 <= k <= n");
  std::size_t len = (parity == WordParity::even) ? 2 * n : 2 * n + 1;
  return binomial(len, static_cast<long long>(n - k));
}

MultiPoly cf_tilde_fk(std::uint32_t k, std::size_t n) {
  const long long m = static_cast<long long>(n);
  switch (k) {
    case 0:
      return MultiPoly::one();
    case 1:
      return n >= 2 ? a_monomial(m - 2, 1) : MultiPoly::zero();
    case 2:
      if (n <= 3) return MultiPoly::zero();
      return from_a_rows({{2, exact_div((m - 1) * (m - 4), 2)}, {1, m - 3}});
    case 3:
      if (n <= 4) return MultiPoly::zero();
      if (n == 5) return a_monomial(3, 2);
      return from_a_rows({{3, exact_div((m + 1) * (m - 4) * (m - 6), 6)},
                          {2, m * m - 4 * m - 2}});
    case 4: {
      switch (n) {
        case 5: return from_a_rows({{3, 1}});
        case 6: return from_a_rows({{2, 4}, {3, 4}});
        case 7: return from_a_rows({{2, 10}, {3, 19}, {4, 1}});
        case 8: return from_a_rows({{2, 17}, {3, 52}, {4, 2}});
        default: break;
      }
      if (n <= 4) return MultiPoly::zero();
      const long long m3 = m * m * m;
      return from_a_rows(
          {{4, exact_div((m - 7) * (m3 - 7 * m * m - 14 * m + 96), 24)},
           {3, exact_div(m3 - 6 * m * m - 13 * m + 80, 2)},
           {2, exact_div(m * m - m - 22, 2)}});
    }
    case 5: {
      switch (n) {
        case 6: return from_a_rows({{3, 4}});
        case 7: return from_a_rows({{2, 1}, {3, 19}, {4, 10}});
        case 8: return from_a_rows({{2, 2}, {3, 62}, {4, 32}});
        case 9: return from_a_rows({{2, 3}, {3, 131}, {4, 96}, {5, 4}});
        case 10: return from_a_rows({{2, 4}, {3, 226}, {4, 234}, {5, 10}});
        default: break;
      }
      if (n < 6) return MultiPoly::zero();
      const long long m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m;
      return from_a_rows(
          {{5, exact_div(m5 - 20 * m4 + 75 * m3 + 740 * m2 - 5716 * m + 9360,
                         120)},
           {4, exact_div(m4 - 9 * m3 - 34 * m2 + 474 * m - 936, 6)},
           {3, exact_div(m3 - m2 - 62 * m + 172, 2)},
           {2, m - 6}});
    }
    default:
      throw std::invalid_argument("cf_tilde_fk: closed forms stop at k = 5");
  }
}

long long cf_E(std::uint32_t k, long long s, std::size_t n) {
  const long long m = static_cast<long long>(n);
  switch (k) {
    case 0:
      return s == 0 ? 1 : 0;
    case 1:
      return (s == 3 && n >= 2) ? m - 2 : 0;
    case 2:
      if (s == 6 && n >= 4) return exact_div((m - 1) * (m - 4), 2);
      if (s == 4 && n >= 4) return m - 3;
      return 0;
    case 3:
      if (s == 9 && n >= 6) return exact_div((m + 1) * (m - 4) * (m - 6), 6);
      if (s == 7 && n >= 5) return m * m - 4 * m - 2;
      return 0;
    case 4: {
      if (s == 12 && n == 7) return 1;
      if (s == 10 && n == 6) return 4;
      if (s == 10 && n == 5) return 1;
      const long long m3 = m * m * m;
      if (s == 12 && n >= 8)
        return exact_div((m - 7) * (m3 - 7 * m * m - 14 * m + 96), 24);
      if (s == 10 && n >= 7) return exact_div(m3 - 6 * m * m - 13 * m + 80, 2);
      if (s == 8 && n >= 6) return exact_div(m * m - m - 22, 2);
      return 0;
    }
    case 5: {
      if (s == 15 && n == 9) return 4;
      if (s == 13 && n == 8) return 32;
      // The stated rows skip (s, n) = (13, 7); both the brute-force table and
      // the a^4 coefficient of the explicit F~_5 list at n = 7 give 10.
      if (s == 13 && n == 7) return 10;
      if (s == 11 && n == 7) return 19;
      if (s == 11 && n == 6) return 4;
      const long long m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m;
      if (s == 15 && n >= 10)
        return exact_div(m5 - 20 * m4 + 75 * m3 + 740 * m2 - 5716 * m + 9360,
                         120);
      if (s == 13 && n >= 9)
        return exact_div(m4 - 9 * m3 - 34 * m2 + 474 * m - 936, 6);
      if (s == 11 && n >= 8) return exact_div(m3 - m2 - 62 * m + 172, 2);
      if (s == 9 && n >= 7) return m - 6;
      return 0;
    }
    default:
      throw std::invalid_argument("cf_E: closed forms stop at k = 5");
  }
}

unsigned long long cf_dimension(const DimensionCase& c) {
  switch (c.kind) {
    case DimensionCase::Kind::cartan_a1a1:
      return 4;
    case DimensionCase::Kind::cartan_a2:
      return 27;
    case DimensionCase::Kind::v1b1:
      if (c.param < 2)
        throw std::domain_error(
            "cf_dimension: V_{1b1} needs b a primitive n-th root of 1, n >= 2");
      return static_cast<unsigned long long>(c.param) * c.param;
    case DimensionCase::Kind::b_minus_one:
      if (c.param < 2)
        throw std::domain_error(
            "cf_dimension: the 4m theorem needs m >= 2; m = 1 forces "
            "ae = 1 = b^2, which its hypothesis excludes");
      return 4ull * c.param;
  }
  throw std::logic_error("cf_dimension: unknown case");
}

MultiPoly cf_bminus1_tilde(std::size_t m, BMinusOneVariant variant) {
  if (m == 0) throw std::out_of_range("cf_bminus1_tilde: m >= 1");
  const MultiPoly ae = MultiPoly::var_a() * MultiPoly::var_e();
  const MultiPoly one_minus_ae = MultiPoly::one() - ae;
  // (t)!_{ae} = prod_{j=1..t} (1 + ae + ... + (ae)^{j-1})
  auto ae_qfactorial = [&ae](std::size_t t) {
    MultiPoly r = MultiPoly::one();
    for (std::size_t j = 1; j <= t; ++j) {
      MultiPoly qj;
      MultiPoly p = MultiPoly::one();
      for (std::size_t i = 0; i < j; ++i) {
        qj += p;
        p *= ae;
      }
      r *= qj;
    }
    return r;
  };
  switch (variant) {
    case BMinusOneVariant::odd_power:
      return one_minus_ae.pow(m) * ae_qfactorial(m);
    case BMinusOneVariant::even_diag:
      return one_minus_ae.pow(m - 1) * ae_qfactorial(m - 1);
    case BMinusOneVariant::even_cross: {
      MultiPoly r = one_minus_ae.pow(m - 1) * ae_qfactorial(m - 1) *
                    MultiPoly::var_e().pow(m);
      return (m % 2 == 0) ? -r : r;  // b^{m-1} at b = -1
    }
  }
  throw std::logic_error("cf_bminus1_tilde: unknown variant");
}

namespace {

Word form_word(char fill, std::size_t fill_count, const char* pair,
               std::size_t pair_count) {
  std::string s(fill_count, fill);
  for (std::size_t i = 0; i < pair_count; ++i) s += pair;
  return Word::parse(s);
}

// Collapse a = e = 1, leaving a polynomial in b.
MultiPoly at_a1_e1(const MultiPoly& p) {
  MultiPoly r;
  for (const auto& [x, c] : p.terms()) r.add_term({0, x.b, 0}, c);
  return r;
}

// (t)!_b = prod_{j=1..t} (1 + b + ... + b^{j-1})
MultiPoly b_qfactorial(std::size_t t) {
  MultiPoly r = MultiPoly::one();
  for (std::size_t j = 1; j <= t; ++j) {
    MultiPoly qj;
    for (std::uint32_t i = 0; i < j; ++i) qj.add_term({0, i, 0}, Rational(1));
    r *= qj;
  }
  return r;
}

ClosedFormReport check_orbit_sizes(std::size_t n_max, WordParity parity) {
  ClosedFormReport rep;
  rep.name = parity == WordParity::even ? "orbit_size_even" : "orbit_size_odd";
  rep.pass = true;
  std::size_t checked = 0, max_len = 0;
  std::size_t start = parity == WordParity::even ? 2 : 1;
  for (std::size_t len = start; len <= n_max; len += 2) {
    std::size_t half = len / 2;  // len = 2*half or 2*half + 1
    max_len = len;
    for (std::size_t k = 0; k <= half; ++k) {
      std::vector<Word> forms;
      if (parity == WordParity::even) {
        if (k == 0) {
          forms.push_back(form_word('2', len, "", 0));
        } else {
          forms.push_back(form_word('2', 2 * (half - k), "21", k));
          forms.push_back(form_word('1', 2 * (half - k), "12", k));
        }
      } else {
        forms.push_back(form_word('2', 2 * (half - k) + 1, "12", k));
        forms.push_back(form_word('1', 2 * (half - k) + 1, "21", k));
      }
      unsigned long long want = cf_orbit_size(half, k, parity);
      for (const Word& w : forms) {
        unsigned long long got = orbit(w).size();
        ++checked;
        if (got != want && rep.pass) {
          rep.pass = false;
          std::ostringstream os;
          os << "|O(" << w.str() << ")| = " << got << ", closed form gives "
             << want;
          rep.detail = os.str();
        }
      }
    }
  }
  std::ostringstream os;
  os << "lengths " << start << ".." << max_len << " (step 2), " << checked
     << " orbits";
  rep.range = os.str();
  return rep;
}

ClosedFormReport check_orbit_partition(std::size_t n_max) {
  ClosedFormReport rep;
  rep.name = "orbit_partition_pascal";
  rep.pass = true;
  std::size_t top = std::min<std::size_t>(n_max, 12);
  for (std::size_t n = 1; n <= top; ++n) {
    auto parts = orbit_partition(n);
    unsigned long long sum = 0;
    std::vector<unsigned long long> sizes;
    for (const auto& o : parts) {
      sum += o.size;
      sizes.push_back(o.size);
    }
    std::vector<unsigned long long> want;
    if (n % 2 == 0) {
      std::size_t half = n / 2;
      want.push_back(binomial(n, static_cast<long long>(half)));
      for (std::size_t k = 1; k <= half; ++k) {
        unsigned long long c = binomial(n, static_cast<long long>(half - k));
        want.push_back(c);
        want.push_back(c);
      }
    } else {
      std::size_t half = (n - 1) / 2;
      for (std::size_t k = 0; k <= half; ++k) {
        unsigned long long c = binomial(n, static_cast<long long>(half - k));
        want.push_back(c);
        want.push_back(c);
      }
    }
    std::sort(sizes.begin(), sizes.end());
    std::sort(want.begin(), want.end());
    if ((sum != (1ull << n) || sizes != want) && rep.pass) {
      rep.pass = false;
      std::ostringstream os;
      os << "n = " << n << ": partition sizes do not match the binomial "
         << "pattern (sum " << sum << " vs " << (1ull << n) << ")";
      rep.detail = os.str();
    }
  }
  rep.range = "n = 1.." + std::to_string(top);
  return rep;
}

ClosedFormReport check_ek_tables(std::size_t n_max,
                                 const FaultInjection* fault) {
  ClosedFormReport rep;
  rep.name = "ek_closed_forms";
  rep.pass = true;
  SearchCaps caps;
  std::size_t top = std::min(n_max, caps.subgroup);
  for (std::size_t n = 2; n <= top; ++n) {
    EkTable tab = ek_table(n);
    for (std::uint32_t k = 0; k <= 5; ++k) {
      for (long long s = 0; s <= 3 * static_cast<long long>(k) + 3; ++s) {
        auto it = tab.counts.find({k, static_cast<unsigned long>(s)});
        long long brute = it == tab.counts.end()
                              ? 0
                              : static_cast<long long>(it->second);
        long long closed = cf_E(k, s, n);
        if (fault && fault->k == k && fault->s == s && fault->n == n)
          closed += fault->delta;
        if (brute != closed && rep.pass) {
          rep.pass = false;
          std::ostringstream os;
          os << "E_{" << k << "," << s << "}^" << n << ": brute force "
             << brute << ", closed form " << closed;
          rep.detail = os.str();
        }
      }
    }
  }
  rep.range = "n = 2.." + std::to_string(top) + ", k <= 5, s <= 3k+3";
  return rep;
}

ClosedFormReport check_ek_s_bounds(std::size_t n_max) {
  ClosedFormReport rep;
  rep.name = "ek_s_bounds";
  rep.advisory = true;
  rep.pass = true;
  SearchCaps caps;
  std::size_t top = std::min(n_max, caps.subgroup);
  for (std::size_t n = 2; n <= top; ++n) {
    for (const auto& [ks, count] : ek_table(n).counts) {
      auto [k, s] = ks;
      if (s < k || s > 3 * k || (s - k) % 2 != 0) {
        rep.pass = false;
        std::ostringstream os;
        os << "entry E_{" << k << "," << s << "}^" << n << " = " << count
           << " breaks k <= s <= 3k, s = k mod 2";
        rep.detail = os.str();
        rep.range = "n = 2.." + std::to_string(top) + ", all (k, s)";
        return rep;
      }
    }
  }
  rep.range = "n = 2.." + std::to_string(top) + ", all (k, s)";
  rep.detail = "empirical bound, report-only";
  return rep;
}

ClosedFormReport check_tilde_fk(std::size_t n_max) {
  ClosedFormReport rep;
  rep.name = "tilde_fk_closed_forms";
  rep.pass = true;
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (std::uint32_t k = 0; k <= 5; ++k) {
      MultiPoly got = tilde_f_k(n, k);
      MultiPoly want = cf_tilde_fk(k, n);
      if (got != want && rep.pass) {
        rep.pass = false;
        std::ostringstream os;
        os << "F~_" << k << "(1^" << n << "|1^" << n << "): recursion gives "
           << got.str() << ", closed form " << want.str();
        rep.detail = os.str();
      }
    }
  }
  rep.range = "n = 2.." + std::to_string(n_max) + ", k = 0..5";
  return rep;
}

ClosedFormReport check_f45_boundaries() {
  ClosedFormReport rep;
  rep.name = "tilde_fk_validity_boundary";
  rep.pass = true;
  // The large-n formulas as stated, evaluated below their stated ranges.
  auto general4 = [](long long m) {
    const long long m3 = m * m * m;
    return from_a_rows(
        {{4, (m - 7) * (m3 - 7 * m * m - 14 * m + 96) / 24},
         {3, (m3 - 6 * m * m - 13 * m + 80) / 2},
         {2, (m * m - m - 22) / 2}});
  };
  auto general5 = [](long long m) {
    const long long m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m;
    return from_a_rows(
        {{5, (m5 - 20 * m4 + 75 * m3 + 740 * m2 - 5716 * m + 9360) / 120},
         {4, (m4 - 9 * m3 - 34 * m2 + 474 * m - 936) / 6},
         {3, (m3 - m2 - 62 * m + 172) / 2},
         {2, m - 6}});
  };
  bool f4_at_8 = general4(8) == cf_tilde_fk(4, 8);
  bool f4_at_7 = general4(7) == cf_tilde_fk(4, 7);
  bool f5_at_10 = general5(10) == cf_tilde_fk(5, 10);
  bool f5_at_9 = general5(9) == cf_tilde_fk(5, 9);
  // Expected: each formula already holds one step below its stated range
  // (n = 8 resp. n = 10) and genuinely fails one step further down.
  rep.pass = f4_at_8 && !f4_at_7 && f5_at_10 && !f5_at_9;
  rep.range = "F~_4 at n = 7, 8; F~_5 at n = 9, 10";
  rep.detail = rep.pass
                   ? "stated ranges are conservative by exactly one: the "
                     "formulas already hold at n = 8 (F~_4) and n = 10 (F~_5) "
                     "but fail at n = 7 / n = 9, so the explicit lists are "
                     "required there"
                   : "boundary behaviour differs from the recorded analysis";
  return rep;
}

ClosedFormReport check_ek_bridge(std::size_t n_max) {
  ClosedFormReport rep;
  rep.name = "ek_ftilde_bridge";
  rep.pass = true;
  std::size_t top = std::max<std::size_t>(n_max, 12);
  for (std::size_t n = 2; n <= top; ++n) {
    for (std::uint32_t k = 0; k <= 5; ++k) {
      MultiPoly sum;
      for (std::uint32_t i = 0; i <= k; ++i)
        sum += a_monomial(cf_E(k, 2 * i + k, n), i);
      MultiPoly want = cf_tilde_fk(k, n);
      if (sum != want && rep.pass) {
        rep.pass = false;
        std::ostringstream os;
        os << "k = " << k << ", n = " << n << ": sum_i E_{k,2i+k}^n a^i = "
           << sum.str() << " but F~_k = " << want.str();
        rep.detail = os.str();
      }
    }
  }
  rep.range = "n = 2.." + std::to_string(top) + ", k = 0..5";
  return rep;
}

ClosedFormReport check_qfactorial(bool odd) {
  ClosedFormReport rep;
  rep.name = odd ? "qfactorial_identity_odd" : "qfactorial_identity_even";
  rep.pass = true;
  SymmetrizerEngine<MultiPoly> engine(symbolic_braiding());
  std::size_t checked = 0;
  for (std::size_t h = 0; h <= 6; ++h) {
    for (std::size_t k = 0; k <= h; ++k) {
      std::size_t len = odd ? 2 * h + 1 : 2 * h;
      if (odd ? len > 7 : (h + k > 6 || len == 0)) continue;
      Word x = odd ? form_word('2', 2 * (h - k) + 1, "12", k)
                   : form_word('2', 2 * (h - k), "12", k);
      MultiPoly got = at_a1_e1(tilde_f(x, x, engine));
      MultiPoly want = odd ? b_qfactorial(h + k + 1) * b_qfactorial(h - k)
                           : b_qfactorial(h + k) * b_qfactorial(h - k);
      ++checked;
      if (got != want && rep.pass) {
        rep.pass = false;
        std::ostringstream os;
        os << "F~(" << x.str() << "|" << x.str() << ") at a = e = 1 is "
           << got.str() << ", expected " << want.str();
        rep.detail = os.str();
      }
    }
  }
  std::ostringstream os;
  os << (odd ? "lengths 2n+1 <= 7" : "n + k <= 6, lengths 2n <= 12") << ", "
     << checked << " words";
  rep.range = os.str();
  return rep;
}

ClosedFormReport check_bminus1() {
  ClosedFormReport rep;
  rep.name = "bminus1_intermediates";
  rep.pass = true;
  SymmetrizerEngine<MultiPoly> engine(symbolic_braiding());
  const Rational minus_one(-1);
  for (std::size_t m = 1; m <= 3; ++m) {
    struct Case {
      Word x, y;
      BMinusOneVariant variant;
      const char* tag;
    };
    const Case cases[] = {
        {Word::repeated(1, 2 * m + 1), Word::repeated(1, 2 * m + 1),
         BMinusOneVariant::odd_power, "odd-power"},
        {Word::repeated(2, 2 * m), Word::repeated(2, 2 * m),
         BMinusOneVariant::even_diag, "even-diag"},
        {Word::repeated(2, 2 * m), Word::repeated(1, 2 * m),
         BMinusOneVariant::even_cross, "even-cross"},
    };
    for (const auto& c : cases) {
      MultiPoly got = tilde_f(c.x, c.y, engine).with_b_set_to(minus_one);
      MultiPoly want = cf_bminus1_tilde(m, c.variant);
      if (got != want && rep.pass) {
        rep.pass = false;
        std::ostringstream os;
        os << "m = " << m << " " << c.tag << ": engine gives " << got.str()
           << ", closed form " << want.str();
        rep.detail = os.str();
      }
    }
  }
  rep.range = "m = 1..3, all three variants";
  return rep;
}

ClosedFormReport check_longest_element(std::size_t n_max) {
  ClosedFormReport rep;
  rep.name = "longest_element_leading_term";
  rep.pass = true;
  std::size_t top = std::min<std::size_t>(n_max, 9);
  for (std::size_t len = 4; len <= top; ++len) {
    MultiPoly p = tilde_f_1n(len);
    std::size_t t = len / 2;
    std::uint32_t want_b = static_cast<std::uint32_t>(
        len % 2 == 0 ? t * (t - 1) : t * t);
    std::uint32_t want_a = static_cast<std::uint32_t>(
        len % 2 == 0 ? t * (t - 1) / 2 : t * (t + 1) / 2);
    std::uint32_t got_b = p.degree_in_b();
    MultiPoly lead = p.coeff_of_b(got_b);
    MultiPoly want_lead = a_monomial(1, want_a);
    if ((got_b != want_b || lead != want_lead) && rep.pass) {
      rep.pass = false;
      std::ostringstream os;
      os << "n = " << len << ": top b-degree " << got_b << " with coefficient "
         << lead.str() << ", expected b^" << want_b << " with a^" << want_a;
      rep.detail = os.str();
    }
  }
  rep.range = "n = 4.." + std::to_string(top);
  return rep;
}

ClosedFormReport check_dimensions(std::size_t degree_cap, unsigned jobs) {
  ClosedFormReport rep;
  rep.name = "dimension_theorems";
  rep.pass = true;
  struct Case {
    const char* tag;
    const char* a;
    const char* b;
    const char* e;
    DimensionCase dim_case;
    std::size_t needs_cap;  // degree at which the rank reaches zero
  };
  const Case cases[] = {
      {"Cartan A1xA1", "1", "-1", "1", DimensionCase::cartan_a1a1(), 3},
      {"Cartan A2", "1", "zeta(3)", "zeta(3)^2", DimensionCase::cartan_a2(), 9},
      {"V_{1b1}, n = 3", "1", "zeta(3)", "1", DimensionCase::v1b1(3), 5},
      {"b = -1, m = 2", "-1", "-1", "1", DimensionCase::b_minus_one(2), 5},
  };
  std::vector<std::string> covered;
  for (const auto& c : cases) {
    if (c.needs_cap > degree_cap) continue;
    covered.push_back(c.tag);
    ParamPoint pt(parse_scalar_literal(c.a), parse_scalar_literal(c.b),
                  parse_scalar_literal(c.e));
    GradedProfile prof = nichols_dimension(pt, degree_cap, jobs);
    unsigned long long want = cf_dimension(c.dim_case);
    bool ok = prof.status == GradedProfile::Status::terminated && prof.total &&
              *prof.total == want;
    if (!ok && rep.pass) {
      rep.pass = false;
      std::ostringstream os;
      os << c.tag << " at (" << c.a << ", " << c.b << ", " << c.e << "): ";
      if (prof.total)
        os << "total " << *prof.total;
      else
        os << "no termination under cap " << degree_cap;
      os << ", theorem says " << want;
      rep.detail = os.str();
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < covered.size(); ++i)
    os << (i ? "; " : "") << covered[i];
  os << " (cap " << degree_cap << ")";
  rep.range = os.str();
  return rep;
}

ClosedFormReport check_pascal_profile(std::size_t degree_cap, unsigned jobs) {
  ClosedFormReport rep;
  rep.name = "v1b1_graded_profile";
  rep.advisory = true;
  rep.pass = true;
  rep.range = "b = zeta(4), a = e = 1";
  if (degree_cap < 7) {
    rep.detail = "skipped: needs degree cap >= 7";
    return rep;
  }
  ParamPoint pt(parse_scalar_literal("1"), parse_scalar_literal("zeta(4)"),
                parse_scalar_literal("1"));
  GradedProfile prof = nichols_dimension(pt, degree_cap, jobs);
  std::vector<std::size_t> want = {1, 2, 3, 4, 3, 2, 1, 0};
  if (prof.ranks != want) {
    rep.pass = false;
    std::ostringstream os;
    os << "graded ranks";
    for (auto r : prof.ranks) os << ' ' << r;
    os << " differ from the square-truncated Pascal pattern 1 2 3 4 3 2 1 0";
    rep.detail = os.str();
  } else {
    rep.detail =
        "graded ranks follow the square-truncated Pascal pattern "
        "(observed reading, report-only)";
  }
  return rep;
}

}  // namespace

std::vector<ClosedFormReport> verify_all(std::size_t n_max,
                                         std::size_t degree_cap, unsigned jobs,
                                         const FaultInjection* fault) {
  std::vector<ClosedFormReport> reports;
  reports.push_back(check_orbit_sizes(n_max, WordParity::even));
  reports.push_back(check_orbit_sizes(n_max, WordParity::odd));
  reports.push_back(check_orbit_partition(n_max));
  reports.push_back(check_ek_tables(n_max, fault));
  reports.push_back(check_ek_s_bounds(n_max));
  reports.push_back(check_tilde_fk(n_max));
  reports.push_back(check_f45_boundaries());
  reports.push_back(check_ek_bridge(n_max));
  reports.push_back(check_qfactorial(false));
  reports.push_back(check_qfactorial(true));
  reports.push_back(check_bminus1());
  reports.push_back(check_longest_element(n_max));
  reports.push_back(check_dimensions(degree_cap, jobs));
  reports.push_back(check_pascal_profile(degree_cap, jobs));
  return reports;
}

bool all_passed(const std::vector<ClosedFormReport>& reports) {
  for (const auto& r : reports)
    if (!r.advisory && !r.pass) return false;
  return true;
}

}  // namespace nichols
