// Multivariate gcd over Q: heuristic evaluation gcd first, recursive primitive
// pseudo-remainder sequences when it gives up.
#include <algorithm>
#include <optional>

#include "jforge/errors.hpp"
#include "jforge/symexpr/polynomial.hpp"

namespace jforge {

namespace {

using Coeffs = std::vector<Polynomial>;

Coeffs split(const Polynomial& p, int v) {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(p.degree_in(v)) + 1);
  for (const auto& t : p.terms()) {
    Term u = t;
    int k = u.m.e[v];
    u.m.e[v] = 0;
    u.m.deg = static_cast<std::uint16_t>(u.m.deg - k);
    buckets[static_cast<std::size_t>(k)].push_back(std::move(u));
  }
  Coeffs out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(p.chart(), std::move(b)));
  return out;
}

Polynomial join(const Coeffs& cs, int v, const ChartPtr& chart) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (const auto& t : cs[k].terms()) {
      Term u = t;
      u.m.e[v] = static_cast<std::uint8_t>(u.m.e[v] + k);
      u.m.deg = static_cast<std::uint16_t>(u.m.deg + k);
      all.push_back(std::move(u));
    }
  return Polynomial::from_terms(chart, std::move(all));
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Monomial monomial_content(const Polynomial& p) {
  Monomial m = p.leading().m;
  for (const auto& t : p.terms()) m = m.gcd(t.m);
  return m;
}

std::vector<int> used_vars(const Polynomial& p) {
  std::array<bool, kMaxDim> used{};
  for (const auto& t : p.terms())
    for (int i = 0; i < kMaxDim; ++i)
      if (t.m.e[i]) used[i] = true;
  std::vector<int> out;
  for (int i = 0; i < kMaxDim; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return false;
  Rational r = a.leading().c / b.leading().c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.terms()[i].m != b.terms()[i].m) return false;
    if (a.terms()[i].c != r * b.terms()[i].c) return false;
  }
  return true;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, int v) {
  Polynomial g(p.chart());
  for (const auto& c : split(p, v)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) return Polynomial(p.chart(), Rational(1));
  }
  return g;
}

Polynomial prem(const Polynomial& a, const Polynomial& b, int v) {
  Coeffs A = split(a, v), B = split(b, v);
  trim(A);
  trim(B);
  const std::size_t n = B.size() - 1;
  const Polynomial& lcb = B.back();
  int e = static_cast<int>(A.size()) - static_cast<int>(n);
  while (!A.empty() && A.size() - 1 >= n) {
    const std::size_t d = A.size() - 1 - n;
    Polynomial lca = A.back();
    for (auto& c : A) c = c * lcb;
    for (std::size_t k = 0; k <= n; ++k) A[k + d] -= lca * B[k];
    A.pop_back();
    trim(A);
    --e;
  }
  if (A.empty()) return Polynomial(a.chart());
  if (e > 0) {
    Polynomial f = lcb.pow(static_cast<unsigned>(e));
    for (auto& c : A) c = c * f;
  }
  return join(A, v, a.chart());
}

// Gcd of two polynomials that are primitive with respect to v.
Polynomial prs(Polynomial a, Polynomial b, int v) {
  a = primitive_integer(a);
  b = primitive_integer(b);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    Polynomial r = prem(a, b, v);
    if (r.is_zero()) return b;
    if (r.degree_in(v) == 0) return Polynomial(a.chart(), Rational(1));
    r = primitive_integer(exact_div(r, content_in(r, v)));
    a = std::move(b);
    b = std::move(r);
  }
}

Polynomial gcd_rec(const Polynomial& a0, const Polynomial& b0) {
  if (a0.is_zero()) return b0;
  if (b0.is_zero()) return a0;
  ChartPtr chart = common_chart(a0.chart(), b0.chart());
  Polynomial one(chart, Rational(1));
  if (a0.is_constant() || b0.is_constant()) return one;

  Monomial ma = monomial_content(a0), mb = monomial_content(b0);
  Polynomial mono = Polynomial::monomial(chart, ma.gcd(mb), Rational(1));
  if (a0.is_monomial() || b0.is_monomial()) return mono;
  Polynomial a = ma.is_one() ? a0 : exact_div(a0, Polynomial::monomial(chart, ma, Rational(1)));
  Polynomial b = mb.is_one() ? b0 : exact_div(b0, Polynomial::monomial(chart, mb, Rational(1)));

  // Variables present in only one operand cannot occur in the gcd.
  while (true) {
    if (a.is_constant() || b.is_constant()) return mono;
    auto va = used_vars(a), vb = used_vars(b);
    int lone = -1;
    bool in_a = false;
    for (int v : va)
      if (!std::binary_search(vb.begin(), vb.end(), v)) { lone = v; in_a = true; break; }
    if (lone < 0)
      for (int v : vb)
        if (!std::binary_search(va.begin(), va.end(), v)) { lone = v; break; }
    if (lone < 0) break;
    if (in_a) a = content_in(a, lone);
    else b = content_in(b, lone);
  }

  if (proportional(a, b)) return mono * a;
  if (a.total_degree() >= b.total_degree()) {
    if (try_exact_div(a, b)) return mono * b;
  } else if (try_exact_div(b, a)) {
    return mono * a;
  }

  int best = -1, best_deg = 1 << 30;
  for (int v : used_vars(a)) {
    int d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best_deg) { best_deg = d; best = v; }
  }
  Polynomial ca = content_in(a, best), cb = content_in(b, best);
  Polynomial pa = ca.is_constant() ? a : exact_div(a, ca);
  Polynomial pb = cb.is_constant() ? b : exact_div(b, cb);
  Polynomial c = gcd_rec(ca, cb);
  return mono * c * prs(pa, pb, best);
}

// Heuristic gcd: evaluate v at a large integer xi, recurse, rebuild from the
// xi-adic digits and keep the candidate only if it divides both inputs.
// Inputs have integer coefficients.

constexpr std::size_t kHeuBudgetBits = 1u << 22;

mpz_class integer_content(const Polynomial& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.gmp().get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class max_norm(const Polynomial& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    mpz_class c = abs(t.c.gmp().get_num());
    if (c > m) m = c;
  }
  return m;
}

Polynomial divide_integer(const Polynomial& p, const mpz_class& c) {
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) ts.push_back({t.m, Rational(mpz_class(t.c.gmp().get_num() / c))});
  return Polynomial::from_terms(p.chart(), std::move(ts));
}

Polynomial eval_at(const Polynomial& p, int v, const mpz_class& xi) {
  std::vector<mpz_class> pw{1};
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    const std::size_t k = t.m.e[v];
    while (pw.size() <= k) pw.push_back(pw.back() * xi);
    Term u{t.m, Rational(mpz_class(t.c.gmp().get_num() * pw[k]))};
    u.m.deg = static_cast<std::uint16_t>(u.m.deg - k);
    u.m.e[v] = 0;
    ts.push_back(std::move(u));
  }
  return Polynomial::from_terms(p.chart(), std::move(ts));
}

std::optional<Polynomial> interpolate(Polynomial g, int v, const mpz_class& xi) {
  const mpz_class half = xi / 2;
  std::vector<Term> out;
  for (int k = 0; !g.is_zero(); ++k) {
    if (k > 255) return std::nullopt;
    std::vector<Term> digit, rest;
    for (const auto& t : g.terms()) {
      mpz_class c = t.c.gmp().get_num(), r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        Term d{t.m, Rational(r)};
        d.m.e[v] = static_cast<std::uint8_t>(k);
        d.m.deg = static_cast<std::uint16_t>(d.m.deg + k);
        out.push_back(std::move(d));
      }
      mpz_class q = (c - r) / xi;
      if (q != 0) rest.push_back({t.m, Rational(q)});
    }
    g = Polynomial::from_terms(g.chart(), std::move(rest));
  }
  return Polynomial::from_terms(g.chart(), std::move(out));
}

std::optional<Polynomial> heu_gcd(const Polynomial& a0, const Polynomial& b0) {
  if (a0.is_zero() || b0.is_zero()) return std::nullopt;
  const mpz_class ca = integer_content(a0), cb = integer_content(b0);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const Polynomial a = divide_integer(a0, ca), b = divide_integer(b0, cb);
  if (a.is_constant() || b.is_constant()) return Polynomial(a.chart(), Rational(c));

  int v = -1;
  for (int i = kMaxDim - 1; i >= 0 && v < 0; --i)
    if (a.depends_on(i) || b.depends_on(i)) v = i;
  const int deg = std::max(a.degree_in(v), b.degree_in(v));
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(deg + 1) > kHeuBudgetBits) return std::nullopt;
    std::optional<Polynomial> g = heu_gcd(eval_at(a, v, xi), eval_at(b, v, xi));
    if (!g) return std::nullopt;
    std::optional<Polynomial> G = interpolate(*g, v, xi);
    if (G && !G->is_zero()) {
      *G = divide_integer(*G, integer_content(*G));
      if (try_exact_div(a, *G) && try_exact_div(b, *G)) return G->scaled(Rational(c));
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant()) return monic(gcd_rec(a, b));
  try {
    if (auto g = heu_gcd(primitive_integer(a), primitive_integer(b))) {
      ChartPtr chart = common_chart(a.chart(), b.chart());
      return monic(g->with_chart(chart));
    }
  } catch (const DomainError&) {
    // exponent range exceeded while rebuilding; the exact sequence below decides
  }
  return monic(gcd_rec(a, b));
}

}  // namespace jforge
