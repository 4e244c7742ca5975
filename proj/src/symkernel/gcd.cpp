// Multivariate gcd over Q by recursive primitive polynomial remainder
// sequences, with cheap exits for the shapes that dominate in practice
// (constants, monomials, exact divisibility, disjoint variables).

#include <algorithm>

#include "nijkit/error.hpp"
#include "nijkit/poly.hpp"

namespace nijkit {

namespace {

Poly one(std::size_t n) { return Poly::constant(n, Rational(1)); }

Poly divide_by_monomial(const Poly& p, const Monomial& m) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back(Term{m.quotient_of(t.mono), t.coef});
  return Poly::from_terms(p.nvars(), std::move(out));
}

std::vector<bool> variables_of(const Poly& p) {
  std::vector<bool> used(p.nvars(), false);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.mono[i]) used[i] = true;
  return used;
}

Poly exact(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::Internal, "gcd: expected exact division");
  return *q;
}

Poly gcd_rec(const Poly& a, const Poly& b);

// Scales p to integer coefficients with trivial integer content.
Poly numeric_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  for (const auto& t : p.terms()) {
    mpz_class v = mpz_class(t.coef * l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (p.leading().coef < 0) scale = -scale;
  return p * scale;
}

// gcd of the coefficients of p viewed as a polynomial in `var`.
Poly content_in(const Poly& p, std::size_t var) {
  unsigned d = p.degree_in(var);
  std::vector<Poly> coeffs;
  for (unsigned k = 0; k <= d; ++k) {
    Poly c = p.coeff_in(var, k);
    if (!c.is_zero()) coeffs.push_back(std::move(c));
  }
  std::sort(coeffs.begin(), coeffs.end(), [](const Poly& x, const Poly& y) { return x.size() < y.size(); });
  Poly g = coeffs.front();
  for (std::size_t i = 1; i < coeffs.size() && !g.is_constant(); ++i) g = gcd_rec(g, coeffs[i]);
  return g.is_constant() ? one(p.nvars()) : g;
}

Poly primitive_part(const Poly& p, std::size_t var) {
  Poly c = content_in(p, var);
  return numeric_primitive(c.is_constant() ? p : exact(p, c));
}

// Pseudo-remainder of a by b with respect to var.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
  unsigned db = b.degree_in(var);
  Poly lcb = b.coeff_in(var, db);
  Monomial shift(a.nvars());
  while (!a.is_zero()) {
    unsigned da = a.degree_in(var);
    if (da < db) break;
    Poly lca = a.coeff_in(var, da);
    shift.set(var, da - db);
    a = lcb * a - lca * b.mul_monomial(shift, Rational(1));
  }
  return a;
}

Poly gcd_rec(const Poly& a_in, const Poly& b_in) {
  const std::size_t n = a_in.nvars();
  if (a_in.is_zero()) return b_in;
  if (b_in.is_zero()) return a_in;
  if (a_in.is_constant() || b_in.is_constant()) return one(n);

  Monomial ma = a_in.monomial_content(), mb = b_in.monomial_content();
  Monomial gm = ma.gcd(mb);
  Poly a = ma.is_one() ? a_in : divide_by_monomial(a_in, ma);
  Poly b = mb.is_one() ? b_in : divide_by_monomial(b_in, mb);
  Poly gmono = Poly::term(gm, Rational(1));
  if (a.is_constant() || b.is_constant()) return gmono;

  if (a.size() >= b.size()) {
    if (divide_exact(a, b)) return gmono * b;
  } else {
    if (divide_exact(b, a)) return gmono * a;
  }

  // A variable present in only one argument cannot occur in the gcd.
  auto va = variables_of(a), vb = variables_of(b);
  for (std::size_t v = 0; v < n; ++v) {
    if (va[v] && !vb[v]) {
      a = content_in(a, v);
      if (a.is_constant()) return gmono;
      va = variables_of(a);
    } else if (vb[v] && !va[v]) {
      b = content_in(b, v);
      if (b.is_constant()) return gmono;
      vb = variables_of(b);
    }
  }

  std::size_t var = n;
  unsigned best = ~0u;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(va[v] && vb[v])) continue;
    unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }
  if (var == n) return gmono;

  Poly ca = content_in(a, var), cb = content_in(b, var);
  Poly cont = gcd_rec(ca, cb);
  Poly pa = numeric_primitive(ca.is_constant() ? a : exact(a, ca));
  Poly pb = numeric_primitive(cb.is_constant() ? b : exact(b, cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  Poly g;
  for (;;) {
    Poly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = one(n);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  return gmono * cont * g;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::ChartMismatch, "gcd of polynomials on different rings");
  if (a.is_zero() && b.is_zero()) return Poly(a.nvars());
  return gcd_rec(a, b).monic();
}

}  // namespace nijkit
