#include "gear/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace gear {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto bad = s.find_first_not_of("+-0123456789/");
  if (bad != std::string::npos) throw std::invalid_argument("malformed rational literal: " + s);
  Rational q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

Rational nearest_rational(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::domain_error("nearest_rational: non-finite input");
  if (max_den < 1) throw std::invalid_argument("nearest_rational: max_den must be positive");
  const bool negative = x < 0;
  const Rational target(std::abs(x));

  // Convergents h/k of the continued fraction of |x|, computed exactly.
  mpz_class h_prev = 0, h = 1, k_prev = 1, k = 0;
  Rational rest = target;
  const mpz_class limit = static_cast<long>(max_den);
  Rational best(0);
  while (true) {
    const mpz_class a = rest.get_num() / rest.get_den();  // floor, rest >= 0
    const mpz_class h_next = a * h + h_prev;
    const mpz_class k_next = a * k + k_prev;
    if (k_next > limit) {
      // Largest admissible semiconvergent versus the last convergent.
      const mpz_class t = (limit - k_prev) / k;
      Rational semi(mpz_class(t * h + h_prev), mpz_class(t * k + k_prev));
      Rational conv(h, k);
      semi.canonicalize();
      conv.canonicalize();
      best = abs(semi - target) < abs(conv - target) ? semi : conv;
      break;
    }
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    const Rational frac = rest - Rational(a);
    if (sgn(frac) == 0) {
      best = Rational(h, k);
      best.canonicalize();
      break;
    }
    rest = 1 / frac;
  }
  return negative ? Rational(-best) : best;
}

RationalMatrix nearest_rational(const FloatMatrix& m, std::int64_t max_den) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i)
    out.data()[i] = nearest_rational(m.data()[i], max_den);
  return out;
}

}  // namespace gear
