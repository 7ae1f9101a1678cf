#include "posetlab/bounds.hpp"

#include <cmath>
#include <sstream>

namespace posetlab {

namespace {

std::string big_str(const BigInt& v) { return v.str(); }

// 4^e with a sanity cap; the exact values get astronomically large.
BigInt pow_big(const BigInt& base, const BigInt& exp, long digit_cap) {
  const double ld = std::log10(base.convert_to<double>());
  const double est = exp.convert_to<double>() * ld;
  if (!(est <= static_cast<double>(digit_cap)) || exp > 4000000000LL)
    throw BudgetExceededError("result near 10^" + std::to_string(est) +
                              " exceeds the digit cap");
  return boost::multiprecision::pow(base, exp.convert_to<unsigned>());
}

}  // namespace

BigInt binomial_multiplicative(const BigInt& n, int k) {
  if (k < 0 || n < 0) return 0;
  if (n < k) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt binomial_pascal(int n, int k) {
  if (k < 0 || n < 0 || n < k) return 0;
  std::vector<BigInt> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

BoundValue wcol_bound(GraphClass cls, int param, int r) {
  if (r < 0) throw DomainError("radius must be >= 0");
  std::ostringstream f;
  switch (cls) {
    case GraphClass::genus: {
      if (param < 0) throw DomainError("genus must be >= 0");
      BigInt v = (2 * BigInt(param) + binomial_multiplicative(r + 2, 2)) *
                 (2 * r + 1);
      f << "(2g + C(r+2,2))(2r+1), g=" << param << ", r=" << r;
      return {v, f.str()};
    }
    case GraphClass::treewidth: {
      if (param < 0) throw DomainError("treewidth must be >= 0");
      BigInt v = binomial_multiplicative(param + r, param);
      f << "C(t+r,t), t=" << param << ", r=" << r;
      return {v, f.str()};
    }
    case GraphClass::minor_free: {
      if (param < 4) throw DomainError("excluded-minor bound needs t >= 4");
      BigInt v = binomial_multiplicative(r + param - 2, param - 2) *
                 (param - 3) * (2 * r + 1);
      f << "C(r+t-2,t-2)(t-3)(2r+1), t=" << param << ", r=" << r;
      return {v, f.str()};
    }
  }
  throw DomainError("unknown graph class");
}

BoundValue dim_upper_bound_from_wcol(const BigInt& c) {
  if (c < 0) throw DomainError("coloring number must be >= 0");
  BoundValue b;
  b.value = pow_big(4, c, 1000000);
  b.formula = "4^c, c=" + big_str(c);
  return b;
}

BoundValue dim_upper_bound(GraphClass cls, int param, int h) {
  if (h < 1) throw DomainError("height must be >= 1");
  BoundValue inner = wcol_bound(cls, param, 3 * h - 3);
  BoundValue b = dim_upper_bound_from_wcol(inner.value);
  b.formula = "4^[" + inner.formula + "], h=" + std::to_string(h);
  return b;
}

BoundValue dim_lower_bound_construction(int h, int t) {
  if (h < 1 || t < 1) throw DomainError("construction needs h >= 1, t >= 1");
  BigInt e = binomial_multiplicative(h + t - 1, t);
  BoundValue b;
  b.value = pow_big(2, e, 1000000);
  b.formula = "2^C(h+t-1,t), h=" + std::to_string(h) + ", t=" + std::to_string(t);
  return b;
}

BoundValue subdivision_threshold(int h, int t, const BigInt& c,
                                 long digits_limit) {
  if (h < 1 || t < 1) throw DomainError("threshold needs h >= 1, t >= 1");
  if (c < 1) throw DomainError("coloring number must be >= 1");

  const BigInt base = binomial_multiplicative(t, 2);  // C(t,2)
  const BigInt c3 = 3 * c;
  const double log10_c3 = std::log10(c3.convert_to<double>());

  // m = C(t,2)^(h^t) explodes first; estimate in logs before touching
  // exact arithmetic.  f >= m + 1 and the result has ~ f*log10(3c)
  // digits, so an oversized m settles the question by itself.
  BigInt m;
  if (base == 0) {
    m = 0;
  } else if (base == 1) {
    m = 1;
  } else {
    const double log10_m =
        std::pow(static_cast<double>(h), static_cast<double>(t)) *
        std::log10(base.convert_to<double>());
    if (!(log10_m <= 30) ||
        std::pow(10.0, log10_m) * log10_c3 > static_cast<double>(digits_limit))
      throw BudgetExceededError("threshold wildly exceeds the digit limit");
    m = pow_big(base, boost::multiprecision::pow(BigInt(h), t), 40);
  }

  const BigInt f = binomial_multiplicative(m + h, h);
  const double est_digits = f.convert_to<double>() * log10_c3;
  if (!(est_digits <= static_cast<double>(digits_limit)))
    throw BudgetExceededError(
        "threshold has about 10^" +
        std::to_string(std::log10(est_digits)) +
        " digits, over the limit of " + std::to_string(digits_limit));

  BoundValue b;
  b.value = pow_big(c3, f, digits_limit + 16);
  b.formula = "(3c)^f, f=C(m+h,h)=" + big_str(f) + ", m=C(t,2)^(h^t)=" +
              big_str(m) + ", c=" + big_str(c);
  return b;
}

}  // namespace posetlab
