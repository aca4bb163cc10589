#include "parconn/poly.hpp"

#include <map>

namespace parconn {

namespace {

// ---- integer factoring (trial division, then Pollard rho on the cofactor)

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class pollard_rho(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 50; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      d = gcd_z(diff, n);
    }
    if (d != n) return d;
  }
  return n;
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 20000; p += (p == 2 ? 1 : 2)) {
    if (n < mpz_class(p) * p) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[mpz_class(p)]++;
      n /= p;
    }
  }
  if (n == 1) return;
  std::vector<mpz_class> stack{n};
  while (!stack.empty()) {
    mpz_class m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
      out[m]++;
      continue;
    }
    mpz_class d = pollard_rho(m);
    if (d == m) {
      out[m]++;  // give up splitting; treated as a prime
      continue;
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::map<mpz_class, int> f;
  factor_into(n, f);
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : f) {
    size_t sz = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

bool mpz_sqrt_exact(const mpz_class& a, mpz_class& r) {
  if (a < 0) return false;
  if (!mpz_perfect_square_p(a.get_mpz_t())) return false;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return true;
}

// ---- rational roots

// integer-coefficient primitive copy of p
std::vector<mpz_class> integer_coeffs(const Poly<Rational>& p) {
  mpz_class l = 1;
  for (auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> r;
  mpz_class g = 0;
  for (auto& c : p.coeffs()) {
    mpz_class v = c.num() * (l / c.den());
    r.push_back(v);
    g = gcd_z(g, v);
  }
  if (g != 0 && g != 1)
    for (auto& v : r) v /= g;
  return r;
}

bool find_rational_root(const Poly<Rational>& p, Rational& root) {
  if (p.degree() == 1) {
    root = -p.coeff(0) / p.coeff(1);
    return true;
  }
  if (p.degree() == 2) {
    Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Rational disc = b * b - Rational(4) * a * c, s;
    if (!rational_sqrt(disc, s)) return false;
    root = (-b - s) / (Rational(2) * a);
    return true;
  }
  auto ic = integer_coeffs(p);
  auto num_divs = positive_divisors(ic.front());
  auto den_divs = positive_divisors(ic.back());
  for (auto& d : den_divs)
    for (auto& n : num_divs)
      for (int s : {1, -1}) {
        Rational cand(mpq_class(s * n, d));
        if (p(cand).is_zero()) {
          root = cand;
          return true;
        }
      }
  return false;
}

// ---- Gaussian integers

struct GInt {
  mpz_class re, im;
};

GInt gmul(const GInt& a, const GInt& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

bool gdivides(const GInt& d, const GInt& g, GInt* q = nullptr) {
  mpz_class n = d.re * d.re + d.im * d.im;
  if (n == 0) return false;
  mpz_class x = g.re * d.re + g.im * d.im;
  mpz_class y = g.im * d.re - g.re * d.im;
  if (!mpz_divisible_p(x.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(y.get_mpz_t(), n.get_mpz_t())) return false;
  if (q) *q = {x / n, y / n};
  return true;
}

// all Gaussian divisors of g (nonzero), up to nothing: every associate is listed
std::vector<GInt> gaussian_divisors(const GInt& g) {
  mpz_class n = g.re * g.re + g.im * g.im;
  std::map<mpz_class, int> f;
  factor_into(n, f);
  std::vector<GInt> primes;
  for (auto& [p, e] : f) {
    (void)e;
    if (p == 2) {
      primes.push_back({1, 1});
    } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
      primes.push_back({p, 0});
    } else {
      // p = x^2 + y^2
      mpz_class x = 1, y;
      bool found = false;
      mpz_class lim;
      mpz_sqrt(lim.get_mpz_t(), p.get_mpz_t());
      for (; x <= lim; ++x) {
        mpz_class rest = p - x * x;
        if (mpz_sqrt_exact(rest, y)) {
          found = true;
          break;
        }
      }
      if (!found) continue;
      primes.push_back({x, y});
      primes.push_back({x, -y});
    }
  }
  std::vector<GInt> divs{{1, 0}};
  for (auto& pi : primes) {
    int e = 0;
    GInt rest = g, q;
    while (gdivides(pi, rest, &q)) {
      rest = q;
      ++e;
    }
    size_t sz = divs.size();
    GInt pk{1, 0};
    for (int k = 1; k <= e; ++k) {
      pk = gmul(pk, pi);
      for (size_t i = 0; i < sz; ++i) divs.push_back(gmul(divs[i], pk));
    }
  }
  std::vector<GInt> all;
  const GInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (auto& d : divs)
    for (auto& u : units) all.push_back(gmul(d, u));
  return all;
}

bool find_gaussian_root(const Poly<GaussianRational>& p, GaussianRational& root) {
  if (p.degree() == 1) {
    root = -p.coeff(0) / p.coeff(1);
    return true;
  }
  if (p.degree() == 2) {
    auto a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    GaussianRational disc = b * b - GaussianRational(4) * a * c, s;
    if (!rational_sqrt(disc, s)) return false;
    root = (-b - s) / (GaussianRational(2) * a);
    return true;
  }
  mpz_class l = 1;
  for (auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().den().get_mpz_t());
  }
  auto to_gint = [&](const GaussianRational& c) {
    return GInt{c.re().num() * (l / c.re().den()), c.im().num() * (l / c.im().den())};
  };
  GInt a0 = to_gint(p.coeff(0)), an = to_gint(p.lc());
  auto nd = gaussian_divisors(a0);
  auto dd = gaussian_divisors(an);
  for (auto& d : dd)
    for (auto& n : nd) {
      GaussianRational cand = GaussianRational(Rational(n.re), Rational(n.im)) /
                              GaussianRational(Rational(d.re), Rational(d.im));
      if (p(cand).is_zero()) {
        root = cand;
        return true;
      }
    }
  return false;
}

template <class F, class Finder>
RootsResult<F> split_off_roots(const Poly<F>& p, Finder find) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  RootsResult<F> out;
  Poly<F> rest = p.monic();
  while (rest.degree() >= 1 && is_zero(rest.coeff(0))) {
    out.roots.push_back(F(0));
    rest = Poly<F>::exact_div(rest, Poly<F>::x());
  }
  while (rest.degree() >= 1) {
    F r;
    if (!find(rest, r)) break;
    Poly<F> lin = Poly<F>::linear_root(r);
    while (rest.degree() >= 1) {
      auto [q, rem] = Poly<F>::divmod(rest, lin);
      if (!rem.is_zero()) break;
      out.roots.push_back(r);
      rest = q;
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const F& a, const F& b) { return scalar_less(a, b); });
  out.remainder = rest.monic();
  return out;
}

}  // namespace

bool rational_sqrt(const Rational& a, Rational& out) {
  if (a.sign() < 0) return false;
  mpz_class n, d;
  if (!mpz_sqrt_exact(a.num(), n) || !mpz_sqrt_exact(a.den(), d)) return false;
  out = Rational(mpq_class(n, d));
  return true;
}

bool rational_sqrt(const GaussianRational& a, GaussianRational& out) {
  if (a.is_real() && a.re().sign() >= 0) {
    Rational r;
    if (!rational_sqrt(a.re(), r)) return false;
    out = GaussianRational(r);
    return true;
  }
  Rational modulus;
  if (!rational_sqrt(a.norm(), modulus)) return false;
  Rational x2 = (a.re() + modulus) / Rational(2), y2 = (modulus - a.re()) / Rational(2), x, y;
  if (!rational_sqrt(x2, x) || !rational_sqrt(y2, y)) return false;
  if (x.is_zero()) {
    out = GaussianRational(Rational(0), y);
  } else {
    out = GaussianRational(x, a.im() / (Rational(2) * x));
  }
  return out * out == a;
}

RootsResult<Rational> roots_in_field(const Poly<Rational>& p) {
  return split_off_roots<Rational>(p, find_rational_root);
}

RootsResult<GaussianRational> roots_in_field(const Poly<GaussianRational>& p) {
  return split_off_roots<GaussianRational>(p, find_gaussian_root);
}

}  // namespace parconn
