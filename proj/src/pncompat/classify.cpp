#include "nijkit/error.hpp"
#include "nijkit/pncompat.hpp"

namespace nijkit {

std::string_view to_string(BlockType t) {
  switch (t) {
    case BlockType::Type1: return "Type1";
    case BlockType::Type2: return "Type2";
    case BlockType::Type3: return "Type3";
    case BlockType::Type4: return "Type4";
    case BlockType::Singular: return "Singular";
  }
  return "?";
}

namespace {

// s with s*a = 1 mod b, for coprime a, b.
UPoly inverse_mod(const UPoly& a, const UPoly& b) {
  UPoly r0 = b, r1 = a.divmod(b).second;
  UPoly s0(b.chart()), s1 = UPoly::from_rationals({1});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorCode::Internal, "spectral factors are not coprime");
  return s0 * ScalarField(Chart(), 1 / r0.coeffs()[0].constant_value());
}

ScalarMatrix eval_poly(const UPoly& q, const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  ScalarMatrix acc(m.chart(), n, n);
  ScalarMatrix id = ScalarMatrix::identity(m.chart(), n);
  for (int i = q.degree(); i >= 0; --i)
    acc = acc * m + id * ScalarField(m.chart(), q.coeffs()[static_cast<std::size_t>(i)].constant_value());
  return acc;
}

UPoly power(const UPoly& q, unsigned e) {
  UPoly r = UPoly::from_rationals({1});
  for (unsigned i = 0; i < e; ++i) r = r * q;
  return r;
}

struct Cluster {
  UPoly factor;
  unsigned multiplicity;
  bool complex_pair;
};

}  // namespace

std::vector<BlockTag> classify_semisimple_block(const PNPair& p, std::span<const Rational> point) {
  const OperatorField& L = p.L;
  const std::size_t dim = L.dim();
  if (point.size() != dim) throw Error(ErrorCode::InvalidArgument, "point dimension does not match the chart");
  ScalarMatrix m0 = L.matrix().evaluate(point);
  auto inv = invariant_factors(m0);
  const UPoly& minimal = inv.back();
  if (gcd(minimal, minimal.derivative()).degree() > 0)
    throw Error(ErrorCode::NotSemisimpleAtPoint, "minimal polynomial " + to_string(minimal) + " is not square-free");

  UPoly chi = char_poly(m0);
  std::vector<Cluster> clusters;
  auto parts = squarefree_decomposition(chi);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    UPoly rest = parts[i];
    if (rest.degree() <= 0) continue;
    const unsigned mult = static_cast<unsigned>(i + 1);
    for (const Rational& r : rational_roots(rest)) {
      UPoly lin = UPoly::from_rationals({-r, 1});
      clusters.push_back({lin, mult, false});
      rest = rest.divmod(lin).first;
    }
    if (rest.degree() <= 0) continue;
    bool cpx = false;
    if (rest.degree() == 2) {
      Rational b = rest.coeffs()[1].constant_value(), c = rest.coeffs()[0].constant_value();
      cpx = b * b - 4 * c < 0;
    }
    clusters.push_back({rest, mult, cpx});
  }

  // dL/dx_k at the point, and d(L^2)/dx_k = L dL + dL L
  std::vector<ScalarMatrix> dL, dL2;
  for (std::size_t k = 0; k < dim; ++k) {
    ScalarMatrix dk(L.chart(), dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) dk(i, j) = L(i, j).partial(k);
    ScalarMatrix e = dk.evaluate(point);
    dL.push_back(e);
    dL2.push_back(m0 * e + e * m0);
  }

  std::vector<BlockTag> tags;
  for (const auto& c : clusters) {
    UPoly qm = power(c.factor, c.multiplicity);
    UPoly cofactor = chi.divmod(qm).first;
    // projector onto ker q^m: cofactor * (cofactor^-1 mod q^m)
    UPoly proj = cofactor * inverse_mod(cofactor, qm);
    ScalarMatrix P = eval_poly(proj, m0);
    bool constant = true;
    for (std::size_t k = 0; k < dim && constant; ++k) {
      if (!(P * dL[k]).trace().is_zero()) constant = false;
      if (c.complex_pair && !(P * dL2[k]).trace().is_zero()) constant = false;
    }
    BlockTag t{c.factor, c.multiplicity, c.complex_pair, constant, BlockType::Singular};
    const unsigned block_dim = c.multiplicity * static_cast<unsigned>(c.factor.degree());
    if (!c.complex_pair) {
      if (constant)
        t.type = BlockType::Type2;
      else if (block_dim == 2 && c.factor.degree() == 1)
        t.type = BlockType::Type1;
    } else {
      if (constant)
        t.type = BlockType::Type4;
      else if (block_dim == 4)
        t.type = BlockType::Type3;
    }
    tags.push_back(std::move(t));
  }
  return tags;
}

}  // namespace nijkit
