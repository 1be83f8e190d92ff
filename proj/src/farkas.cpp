#include "qtop/farkas.hpp"

#include <numeric>

#include "qtop/error.hpp"

namespace qtop {

namespace {

struct Row {
  std::vector<Rational> a;  // coefficients of x
  Rational b;               // a.x >= b
  std::vector<Rational> y;  // multipliers of the original rows
};

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  return l;
}

std::vector<Integer> to_primitive_integers(const std::vector<Rational>& v) {
  const Integer l = lcm_of_denominators(v);
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(numerator(Rational(x * l)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

Rational ceil_q(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;
  if (f * d != n && n > 0) ++f;
  return Rational(f);
}

Rational floor_q(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;
  if (f * d != n && n < 0) --f;
  return Rational(f);
}

}  // namespace

HalfSpaceCertificate open_half_space(std::span<const Weight> vectors, std::size_t rank) {
  HalfSpaceCertificate cert;
  const std::size_t d = vectors.size();
  std::vector<Row> rows;
  for (std::size_t j = 0; j < d; ++j) {
    if (vectors[j].rank() != rank) throw Error(Errc::InvalidInput, "vector rank mismatch");
    Row r;
    for (auto x : vectors[j].coords()) r.a.emplace_back(x);
    r.b = 1;
    r.y.assign(d, Rational(0));
    r.y[j] = 1;
    rows.push_back(std::move(r));
  }

  // levels[k] = system before eliminating x_k
  std::vector<std::vector<Row>> levels;
  for (std::size_t k = 0; k <= rank; ++k) {
    for (const auto& r : rows) {
      if (all_zero(r.a)) {
        // 0 >= b with b = sum y > 0
        cert.feasible = false;
        cert.gordan_witness = to_primitive_integers(r.y);
        return cert;
      }
    }
    if (k == rank) break;
    levels.push_back(rows);
    std::vector<Row> next, pos, neg;
    for (auto& r : rows) {
      if (r.a[k] > 0)
        pos.push_back(r);
      else if (r.a[k] < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        const Rational cp = -n.a[k], cn = p.a[k];
        Row c;
        c.a.resize(rank);
        for (std::size_t i = 0; i < rank; ++i) c.a[i] = cp * p.a[i] + cn * n.a[i];
        c.a[k] = 0;
        c.b = cp * p.b + cn * n.b;
        c.y.resize(d);
        for (std::size_t i = 0; i < d; ++i) c.y[i] = cp * p.y[i] + cn * n.y[i];
        next.push_back(std::move(c));
      }
    rows = std::move(next);
  }

  // Back-substitute from the last eliminated variable.
  std::vector<Rational> x(rank, Rational(0));
  for (std::size_t k = rank; k-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const auto& r : levels[k]) {
      if (r.a[k] == 0) continue;
      Rational rest = 0;
      for (std::size_t i = k + 1; i < rank; ++i) rest += r.a[i] * x[i];
      const Rational bound = (r.b - rest) / r.a[k];
      if (r.a[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (!lo && !hi)
      x[k] = 0;
    else if (!hi)
      x[k] = ceil_q(*lo);
    else if (!lo)
      x[k] = floor_q(*hi);
    else
      x[k] = ceil_q(*lo) <= *hi ? ceil_q(*lo) : (*lo + *hi) / 2;
  }
  cert.feasible = true;
  const auto ints = to_primitive_integers(x);
  cert.direction = Weight(rank);
  for (std::size_t i = 0; i < rank; ++i) cert.direction[i] = static_cast<std::int64_t>(ints[i]);
  if (d == 0 && rank > 0) {
    cert.direction = Weight(rank);
    cert.direction[0] = 1;
  }
  for (const auto& w : vectors)
    if (pair(w, cert.direction) < 1) throw Error(Errc::InvalidInput, "half-space back-substitution failed");
  return cert;
}

std::optional<Weight> compact_direction(std::span<const Weight> vectors, std::size_t rank,
                                        std::int64_t radius) {
  const auto cert = open_half_space(vectors, rank);
  if (!cert.feasible) return std::nullopt;
  auto score = [&](const Weight& xi) {
    std::int64_t mn = std::numeric_limits<std::int64_t>::max();
    for (const auto& w : vectors) mn = std::min(mn, pair(w, xi));
    std::int64_t l1 = 0;
    for (auto v : xi.coords()) l1 += v < 0 ? -v : v;
    return Rational(l1, vectors.empty() ? 1 : mn);
  };
  Weight best = cert.direction;
  Rational best_score = score(best);
  Weight cur(rank);
  for (std::size_t i = 0; i < rank; ++i) cur[i] = -radius;
  while (true) {
    bool ok = !cur.is_zero();
    for (const auto& w : vectors)
      if (ok && pair(w, cur) < 1) ok = false;
    if (ok) {
      const Rational s = score(cur);
      if (s < best_score) {
        best = cur;
        best_score = s;
      }
    }
    std::size_t i = rank;
    bool done = true;
    while (i > 0) {
      --i;
      if (cur[i] < radius) {
        ++cur[i];
        done = false;
        break;
      }
      cur[i] = -radius;
    }
    if (done) break;
  }
  return best;
}

}  // namespace qtop
