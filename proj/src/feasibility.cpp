#include "polyslice/feasibility.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>

#include "polyslice/errors.hpp"

namespace polyslice {

LinearSystem& LinearSystem::add(RVector a, Relation rel, Rational b) {
  if (a.dim() != dim_) throw InputError("LinearSystem: row dimension mismatch");
  rows_.push_back(Constraint{std::move(a), rel, std::move(b)});
  return *this;
}

LinearSystem& LinearSystem::less(RVector a, Rational b) {
  return add(std::move(a), Relation::Less, std::move(b));
}
LinearSystem& LinearSystem::less_equal(RVector a, Rational b) {
  return add(std::move(a), Relation::LessEqual, std::move(b));
}
LinearSystem& LinearSystem::greater(const RVector& a, const Rational& b) {
  return add(a * Rational(-1), Relation::Less, -b);
}
LinearSystem& LinearSystem::greater_equal(const RVector& a, const Rational& b) {
  return add(a * Rational(-1), Relation::LessEqual, -b);
}
LinearSystem& LinearSystem::equal(RVector a, Rational b) {
  return add(std::move(a), Relation::Equal, std::move(b));
}

bool LinearSystem::satisfied_by(const RVector& x) const {
  for (const auto& row : rows_) {
    const int s = sgn(dot(row.a, x) - row.b);
    switch (row.rel) {
      case Relation::Less:
        if (s >= 0) return false;
        break;
      case Relation::LessEqual:
        if (s > 0) return false;
        break;
      case Relation::Equal:
        if (s != 0) return false;
        break;
    }
  }
  return true;
}

namespace {

class History {
 public:
  History() = default;
  explicit History(std::size_t bits) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  History operator|(const History& o) const {
    History h = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) h.words_[i] |= o.words_[i];
    return h;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// a.x <= b over the working variables, a primitive integer.
struct Row {
  std::vector<Integer> a;
  Rational b;
  History history;
};

// Divides by the gcd of the coefficients. Returns false for the zero row.
bool normalize(Row& r) {
  Integer g(0);
  for (const auto& c : r.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return false;
  if (g != 1) {
    for (auto& c : r.a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    r.b /= g;
  }
  return true;
}

// Integer coefficients of a rational row, scaled by a positive factor.
std::pair<std::vector<Integer>, Rational> integerize(const RVector& a, const Rational& b) {
  Integer l(1);
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i].get_num() * (l / a[i].get_den());
  return {std::move(out), b * l};
}

struct Substitution {
  // x_var = (b - sum_{j != var} a_j x_j) / a_var
  std::size_t var;
  std::vector<Integer> a;
  Rational b;
};

struct Stage {
  std::size_t var;
  std::vector<Row> rows;  // rows that involve var, before its elimination
};

// Picks a value in [lo, hi] (either side optional), preferring small integers.
Rational pick_in_interval(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  auto floor_of = [](const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
  };
  auto ceil_of = [](const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(c);
  };
  if (!lo && !hi) return Rational(0);
  if (lo && !hi) return ceil_of(*lo);
  if (!lo && hi) return floor_of(*hi);
  const Rational mid = (*lo + *hi) / 2;
  const Rational f = floor_of(mid);
  if (f >= *lo && f <= *hi) return f;
  const Rational c = ceil_of(mid);
  if (c >= *lo && c <= *hi) return c;
  return mid;
}

}  // namespace

std::optional<RVector> solve(const LinearSystem& sys, const FeasibilityOptions& opts) {
  const std::size_t n = sys.dim();
  bool has_strict = false;
  for (const auto& row : sys.rows()) has_strict |= (row.rel == Relation::Less);
  // Working variables: x_0..x_{n-1}, plus the slack s at index n when needed.
  const std::size_t width = n + (has_strict ? 1 : 0);

  std::vector<std::pair<std::vector<Integer>, Rational>> equalities;
  std::vector<Row> rows;
  std::size_t n_ineq = 0;
  for (const auto& row : sys.rows()) n_ineq += (row.rel != Relation::Equal);
  std::size_t next_id = 0;
  for (const auto& row : sys.rows()) {
    auto [a, b] = integerize(row.a, row.b);
    if (row.rel == Relation::Equal) {
      equalities.emplace_back(std::move(a), std::move(b));
      continue;
    }
    Row r;
    r.a = std::move(a);
    r.a.resize(width);
    if (row.rel == Relation::Less) r.a[n] = 1;
    r.b = std::move(b);
    r.history = History(n_ineq);
    r.history.set(next_id++);
    rows.push_back(std::move(r));
  }
  if (has_strict) {
    Row cap;
    cap.a.assign(width, Integer(0));
    cap.a[n] = 1;
    cap.b = 1;
    cap.history = History(n_ineq);
    rows.push_back(std::move(cap));
  }

  // Substitute equalities away.
  std::vector<Substitution> subs;
  for (std::size_t e = 0; e < equalities.size(); ++e) {
    auto& [ea, eb] = equalities[e];
    std::size_t k = 0;
    while (k < n && ea[k] == 0) ++k;
    if (k == n) {
      if (sgn(eb) != 0) return std::nullopt;
      continue;
    }
    const Integer ek = ea[k];
    const Integer abs_ek = abs(ek);
    const int sk = sgn(ek);
    for (std::size_t f = e + 1; f < equalities.size(); ++f) {
      auto& [fa, fb] = equalities[f];
      if (fa[k] == 0) continue;
      const Integer c = fa[k];
      for (std::size_t j = 0; j < n; ++j) fa[j] = fa[j] * ek - ea[j] * c;
      fb = fb * ek - eb * c;
    }
    for (auto& r : rows) {
      if (r.a[k] == 0) continue;
      const Integer c = r.a[k] * sk;
      for (std::size_t j = 0; j < n; ++j) r.a[j] = r.a[j] * abs_ek - ea[j] * c;
      for (std::size_t j = n; j < width; ++j) r.a[j] *= abs_ek;
      r.b = r.b * abs_ek - eb * c;
    }
    subs.push_back(Substitution{k, ea, eb});
  }

  // Drop trivial rows, detect contradictions, normalize.
  auto tidy = [&](std::vector<Row>& rs) -> bool {
    std::map<std::vector<Integer>, std::size_t> seen;
    std::vector<Row> out;
    out.reserve(rs.size());
    for (auto& r : rs) {
      if (!normalize(r)) {
        if (sgn(r.b) < 0) return false;
        continue;
      }
      auto it = seen.find(r.a);
      if (it == seen.end()) {
        seen.emplace(r.a, out.size());
        out.push_back(std::move(r));
      } else if (r.b < out[it->second].b) {
        out[it->second] = std::move(r);
      }
    }
    rs = std::move(out);
    return true;
  };
  if (!tidy(rows)) return std::nullopt;

  std::vector<bool> eliminated(n, false);
  for (const auto& s : subs) eliminated[s.var] = true;
  std::vector<Stage> stages;
  std::size_t n_eliminated = 0;

  while (true) {
    // Choose the live variable with the cheapest elimination.
    std::size_t best = n;
    std::size_t best_cost = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (eliminated[k]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& r : rows) {
        const int s = sgn(r.a[k]);
        pos += (s > 0);
        neg += (s < 0);
      }
      if (pos + neg == 0) {
        eliminated[k] = true;  // free variable, set to 0 later
        continue;
      }
      const std::size_t cost = pos * neg;
      if (best == n || cost < best_cost) {
        best = k;
        best_cost = cost;
      }
    }
    if (best == n) break;
    const std::size_t k = best;
    ++n_eliminated;

    Stage stage{k, {}};
    std::vector<Row> keep, pos, neg;
    for (auto& r : rows) {
      const int s = sgn(r.a[k]);
      if (s == 0) {
        keep.push_back(std::move(r));
      } else {
        stage.rows.push_back(r);
        (s > 0 ? pos : neg).push_back(std::move(r));
      }
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        History h = p.history | q.history;
        if (h.count() > n_eliminated + 1) continue;  // Chernikov: redundant
        Row r;
        r.a.resize(width);
        const Integer fp = -q.a[k];
        const Integer fq = p.a[k];
        for (std::size_t j = 0; j < width; ++j) r.a[j] = fp * p.a[j] + fq * q.a[j];
        r.b = fp * p.b + fq * q.b;
        r.history = std::move(h);
        keep.push_back(std::move(r));
        if (keep.size() > opts.max_rows) {
          throw CapExceeded("Fourier-Motzkin row cap exceeded (" + std::to_string(opts.max_rows) + ")");
        }
      }
    }
    eliminated[k] = true;
    stages.push_back(std::move(stage));
    rows = std::move(keep);
    if (!tidy(rows)) return std::nullopt;
  }

  // Only the slack (if any) remains.
  RVector x(width);
  if (has_strict) {
    std::optional<Rational> lo, hi;
    for (const auto& r : rows) {
      const int s = sgn(r.a[n]);
      const Rational bound = r.b / r.a[n];
      if (s > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else if (s < 0) {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    // hi exists because of the s <= 1 row.
    if (!hi || sgn(*hi) <= 0) return std::nullopt;
    if (lo && *lo > *hi) return std::nullopt;
    x[n] = *hi;
  }

  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t k = it->var;
    std::optional<Rational> lo, hi;
    for (const auto& r : it->rows) {
      Rational rest = r.b;
      for (std::size_t j = 0; j < width; ++j) {
        if (j != k && r.a[j] != 0) rest -= r.a[j] * x[j];
      }
      const Rational bound = rest / r.a[k];
      if (sgn(r.a[k]) > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (lo && hi && *lo > *hi) throw Error("Fourier-Motzkin back-substitution failed");
    x[k] = pick_in_interval(lo, hi);
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rational rest = it->b;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != it->var && it->a[j] != 0) rest -= it->a[j] * x[j];
    }
    x[it->var] = rest / it->a[it->var];
  }

  RVector result(n);
  for (std::size_t i = 0; i < n; ++i) result[i] = x[i];
  if (!sys.satisfied_by(result)) throw Error("Fourier-Motzkin produced an invalid witness");
  return result;
}

}  // namespace polyslice
