#include "opbw/series.hpp"

#include <algorithm>
#include <utility>

#include "opbw/error.hpp"

namespace opbw {

// ---------------------------------------------------------------------------
// QPoly
// ---------------------------------------------------------------------------

QPoly::QPoly(const Rat& r) {
  if (r != 0) terms[0] = r;
}

QPoly QPoly::monomial(const Rat& c, int exp) {
  QPoly p;
  if (c != 0) p.terms[exp] = c;
  return p;
}

bool QPoly::is_rational() const {
  for (const auto& [e, v] : terms)
    if (e != 0) return false;
  return true;
}

Rat QPoly::rational_value() const {
  if (!is_rational())
    throw Error(ErrorKind::BadSeries,
                "coefficient involves the parameter q: " + text());
  auto it = terms.find(0);
  return it == terms.end() ? Rat(0) : it->second;
}

Rat QPoly::coeff(int exp) const {
  auto it = terms.find(exp);
  return it == terms.end() ? Rat(0) : it->second;
}

bool QPoly::nonnegative() const {
  for (const auto& [e, v] : terms)
    if (v < 0) return false;
  return true;
}

QPoly QPoly::inverse() const {
  if (!invertible())
    throw Error(ErrorKind::BadSeries,
                "not a unit in the Laurent ring: " + text());
  const auto& [e, v] = *terms.begin();
  return monomial(Rat(1) / v, -e);
}

QPoly QPoly::operator-() const {
  QPoly out;
  for (const auto& [e, v] : terms) out.terms[e] = -v;
  return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, v] : o.terms) {
    Rat& slot = terms[e];
    slot += v;
    if (slot == 0) terms.erase(e);
  }
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, v] : o.terms) {
    Rat& slot = terms[e];
    slot -= v;
    if (slot == 0) terms.erase(e);
  }
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ea, va] : a.terms)
    for (const auto& [eb, vb] : b.terms) {
      Rat& slot = out.terms[ea + eb];
      slot += va * vb;
      if (slot == 0) out.terms.erase(ea + eb);
    }
  return out;
}

std::string QPoly::text() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, v] : terms) {
    bool neg = v < 0;
    Rat mag = neg ? Rat(-v) : v;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string coef = rat_to_string(mag);
    if (e == 0) {
      out += coef;
    } else {
      if (mag != 1) out += coef + "*";
      out += "q";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// PowerSeries
// ---------------------------------------------------------------------------

PowerSeries PowerSeries::zero(int trunc) {
  if (trunc < 0)
    throw Error(ErrorKind::BadSeries, "negative truncation order");
  PowerSeries f;
  f.trunc = trunc;
  f.c.assign(static_cast<size_t>(trunc) + 1, QPoly());
  return f;
}

const QPoly& PowerSeries::coeff(int degree) const {
  if (degree < 0 || degree > trunc)
    throw Error(ErrorKind::BadSeries,
                "coefficient of degree " + std::to_string(degree) +
                    " beyond truncation " + std::to_string(trunc));
  return c[static_cast<size_t>(degree)];
}

bool PowerSeries::uses_q() const {
  for (const QPoly& x : c)
    if (!x.is_rational()) return true;
  return false;
}

namespace {

PowerSeries truncated(const PowerSeries& f, int trunc) {
  PowerSeries out = PowerSeries::zero(trunc);
  for (int d = 0; d <= trunc; ++d) out.c[d] = f.coeff(d);
  return out;
}

}  // namespace

PowerSeries ps_add(const PowerSeries& f, const PowerSeries& g) {
  PowerSeries out = PowerSeries::zero(std::min(f.trunc, g.trunc));
  for (int d = 0; d <= out.trunc; ++d) out.c[d] = f.coeff(d) + g.coeff(d);
  return out;
}

PowerSeries ps_sub(const PowerSeries& f, const PowerSeries& g) {
  PowerSeries out = PowerSeries::zero(std::min(f.trunc, g.trunc));
  for (int d = 0; d <= out.trunc; ++d) out.c[d] = f.coeff(d) - g.coeff(d);
  return out;
}

PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g) {
  PowerSeries out = PowerSeries::zero(std::min(f.trunc, g.trunc));
  for (int a = 0; a <= out.trunc; ++a) {
    if (f.coeff(a).is_zero()) continue;
    for (int b = 0; a + b <= out.trunc; ++b)
      out.c[a + b] += f.coeff(a) * g.coeff(b);
  }
  return out;
}

PowerSeries ps_scale(const QPoly& s, const PowerSeries& f) {
  PowerSeries out = PowerSeries::zero(f.trunc);
  for (int d = 0; d <= f.trunc; ++d) out.c[d] = s * f.coeff(d);
  return out;
}

PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
  if (!g.coeff(0).is_zero())
    throw Error(ErrorKind::BadSeries,
                "composition requires a zero constant term, got " +
                    g.coeff(0).text());
  int N = std::min(f.trunc, g.trunc);
  PowerSeries gg = truncated(g, N);
  // Horner evaluation f(g) from the top coefficient down.
  PowerSeries acc = PowerSeries::zero(N);
  for (int d = N; d >= 0; --d) {
    acc = ps_mul(acc, gg);
    acc.c[0] += f.coeff(d);
  }
  return acc;
}

PowerSeries ps_invert(const PowerSeries& f) {
  if (!f.coeff(0).invertible())
    throw Error(ErrorKind::BadSeries,
                "inversion requires a unit constant term, got " +
                    f.coeff(0).text());
  QPoly c0inv = f.coeff(0).inverse();
  PowerSeries out = PowerSeries::zero(f.trunc);
  out.c[0] = c0inv;
  for (int n = 1; n <= f.trunc; ++n) {
    QPoly s;
    for (int i = 1; i <= n; ++i) s += f.coeff(i) * out.c[n - i];
    out.c[n] = -(c0inv * s);
  }
  return out;
}

PowerSeries ps_reverse(const PowerSeries& f) {
  if (!f.coeff(0).is_zero())
    throw Error(ErrorKind::BadSeries,
                "reversion requires a zero constant term, got " +
                    f.coeff(0).text());
  if (f.trunc < 1 || !f.coeff(1).invertible())
    throw Error(ErrorKind::BadSeries,
                "reversion requires an invertible linear coefficient");
  QPoly lin_inv = f.coeff(1).inverse();
  PowerSeries g = PowerSeries::zero(f.trunc);
  if (f.trunc >= 1) g.c[1] = lin_inv;
  // Newton-style degree-by-degree correction: the degree-n coefficient of
  // f∘g depends linearly on g_n with slope f_1.
  for (int n = 2; n <= f.trunc; ++n) {
    PowerSeries err = ps_compose(f, g);
    g.c[n] -= lin_inv * err.coeff(n);
  }
  return g;
}

PowerSeries ps_derivative(const PowerSeries& f) {
  if (f.trunc == 0)
    throw Error(ErrorKind::BadSeries,
                "derivative of a degree-0 truncation is unknown");
  PowerSeries out = PowerSeries::zero(f.trunc - 1);
  for (int d = 0; d < f.trunc; ++d)
    out.c[d] = QPoly(Rat(d + 1)) * f.coeff(d + 1);
  return out;
}

PowerSeries ps_negate_arg(const PowerSeries& f) {
  PowerSeries out = f;
  for (int d = 1; d <= f.trunc; d += 2) out.c[d] = -out.c[d];
  return out;
}

PowerSeries ps_scale_arg(const QPoly& a, const PowerSeries& f) {
  PowerSeries out = PowerSeries::zero(f.trunc);
  QPoly pw(Rat(1));
  for (int d = 0; d <= f.trunc; ++d) {
    out.c[d] = pw * f.coeff(d);
    pw = pw * a;
  }
  return out;
}

// --- named series -----------------------------------------------------------

PowerSeries ps_t(int trunc) {
  PowerSeries f = PowerSeries::zero(trunc);
  if (trunc >= 1) f.c[1] = QPoly(Rat(1));
  return f;
}

PowerSeries ps_exp(int trunc) {
  PowerSeries f = PowerSeries::zero(trunc);
  for (int d = 0; d <= trunc; ++d) f.c[d] = QPoly(Rat(1) / factorial(d));
  return f;
}

PowerSeries ps_log(int trunc) {
  PowerSeries f = PowerSeries::zero(trunc);
  for (int d = 1; d <= trunc; ++d)
    f.c[d] = QPoly(Rat(d % 2 == 0 ? -1 : 1) / d);
  return f;
}

PowerSeries ps_geometric(int trunc) {
  PowerSeries f = PowerSeries::zero(trunc);
  for (int d = 0; d <= trunc; ++d) f.c[d] = QPoly(Rat(1));
  return f;
}

PowerSeries ps_com(int trunc) {
  PowerSeries f = ps_exp(trunc);
  f.c[0] = QPoly();
  return f;
}

PowerSeries ps_lie(int trunc) {
  PowerSeries f = PowerSeries::zero(trunc);
  for (int d = 1; d <= trunc; ++d) f.c[d] = QPoly(Rat(1) / d);
  return f;
}

PowerSeries ps_as(int trunc) {
  PowerSeries f = ps_geometric(trunc);
  f.c[0] = QPoly();
  return f;
}

PowerSeries ps_pois(int trunc) {
  // f_Com(t) ∘ (f_Lie(q t) / q).
  PowerSeries inner =
      ps_scale(QPoly::monomial(Rat(1), -1),
               ps_scale_arg(QPoly::monomial(Rat(1), 1), ps_lie(trunc)));
  return ps_compose(ps_com(trunc), inner);
}

PowerSeries ps_lie2_dual(int trunc) {
  PowerSeries f = PowerSeries::zero(trunc);
  for (int d = 1; d <= trunc; ++d) f.c[d] = QPoly(Rat(1) / factorial(d - 1));
  return f;
}

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

int partition_weight(const Partition& p) {
  int w = 0;
  for (int part : p) w += part;
  return w;
}

namespace {

void gen_partitions(int n, int max_part, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error(ErrorKind::BadSeries, "partitions of a negative number");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

Rat z_of(const Partition& p) {
  Rat z(1);
  int run = 0, prev = 0;
  for (int part : p) {
    if (part == prev) {
      ++run;
    } else {
      prev = part;
      run = 1;
    }
    z *= Rat(part) * run;
  }
  return z;
}

// ---------------------------------------------------------------------------
// SymFun
// ---------------------------------------------------------------------------

SymFun SymFun::zero(int trunc) {
  if (trunc < 0)
    throw Error(ErrorKind::BadSeries, "negative truncation order");
  SymFun f;
  f.trunc = trunc;
  return f;
}

Rat SymFun::coeff(const Partition& p) const {
  auto it = c.find(p);
  return it == c.end() ? Rat(0) : it->second;
}

void SymFun::add(const Partition& p, const Rat& v) {
  if (v == 0 || partition_weight(p) > trunc) return;
  Rat& slot = c[p];
  slot += v;
  if (slot == 0) c.erase(p);
}

SymFun sym_add(const SymFun& a, const SymFun& b) {
  SymFun out = SymFun::zero(std::min(a.trunc, b.trunc));
  for (const auto& [p, v] : a.c) out.add(p, v);
  for (const auto& [p, v] : b.c) out.add(p, v);
  return out;
}

SymFun sym_sub(const SymFun& a, const SymFun& b) {
  SymFun out = SymFun::zero(std::min(a.trunc, b.trunc));
  for (const auto& [p, v] : a.c) out.add(p, v);
  for (const auto& [p, v] : b.c) out.add(p, -v);
  return out;
}

SymFun sym_mul(const SymFun& a, const SymFun& b) {
  SymFun out = SymFun::zero(std::min(a.trunc, b.trunc));
  for (const auto& [p, v] : a.c)
    for (const auto& [q, w] : b.c) {
      if (partition_weight(p) + partition_weight(q) > out.trunc) continue;
      Partition merged = p;
      merged.insert(merged.end(), q.begin(), q.end());
      std::sort(merged.begin(), merged.end(), std::greater<int>());
      out.add(merged, v * w);
    }
  return out;
}

SymFun sym_scale(const Rat& r, const SymFun& a) {
  SymFun out = SymFun::zero(a.trunc);
  for (const auto& [p, v] : a.c) out.add(p, r * v);
  return out;
}

SymFun plethysm(const SymFun& outer, const SymFun& inner) {
  if (inner.coeff({}) != 0)
    throw Error(ErrorKind::BadSeries,
                "plethysm requires an inner function without constant term");
  int N = std::min(outer.trunc, inner.trunc);
  // p_k[inner]: every p_j of inner becomes p_{jk}.
  auto stretch = [&](int k) {
    SymFun out = SymFun::zero(N);
    for (const auto& [p, v] : inner.c) {
      Partition q = p;
      for (int& part : q) part *= k;
      out.add(q, v);
    }
    return out;
  };
  SymFun result = SymFun::zero(N);
  for (const auto& [p, v] : outer.c) {
    SymFun term = SymFun::zero(N);
    term.add({}, Rat(1));
    for (int part : p) term = sym_mul(term, stretch(part));
    result = sym_add(result, sym_scale(v, term));
  }
  return result;
}

SymFun epsilon(const SymFun& chi) {
  SymFun out = SymFun::zero(chi.trunc);
  for (const auto& [p, v] : chi.c)
    out.add(p, p.size() % 2 == 0 ? v : -v);
  return out;
}

SymFun d_dp1(const SymFun& chi) {
  if (chi.trunc == 0)
    throw Error(ErrorKind::BadSeries,
                "derivative of a degree-0 truncation is unknown");
  SymFun out = SymFun::zero(chi.trunc - 1);
  for (const auto& [p, v] : chi.c) {
    int ones = 0;
    for (int part : p)
      if (part == 1) ++ones;
    if (ones == 0) continue;
    Partition q(p.begin(), p.end() - 1);  // parts sorted decreasingly: drop a 1
    out.add(q, v * ones);
  }
  return out;
}

SymFun sym_invert(const SymFun& chi) {
  Rat c0 = chi.coeff({});
  if (c0 == 0)
    throw Error(ErrorKind::BadSeries,
                "inversion requires a nonzero constant term");
  // chi = c0 (1 + Y):  chi^{-1} = c0^{-1} Σ (-Y)^k.
  SymFun Y = sym_scale(Rat(1) / c0, chi);
  Y.c.erase(Partition{});
  SymFun acc = SymFun::zero(chi.trunc);
  acc.add({}, Rat(1));
  SymFun power = acc;
  for (int k = 1; k <= chi.trunc; ++k) {
    power = sym_mul(power, Y);
    if (power.c.empty()) break;
    acc = (k % 2 == 0) ? sym_add(acc, power) : sym_sub(acc, power);
  }
  return sym_scale(Rat(1) / c0, acc);
}

PowerSeries egf_of(const SymFun& chi) {
  PowerSeries out = PowerSeries::zero(chi.trunc);
  for (int n = 0; n <= chi.trunc; ++n) {
    Partition ones(static_cast<size_t>(n), 1);
    out.c[n] = QPoly(chi.coeff(ones));
  }
  return out;
}

// --- named characters -------------------------------------------------------

SymFun sym_p(int k, int trunc) {
  SymFun f = SymFun::zero(trunc);
  if (k < 1) throw Error(ErrorKind::BadSeries, "power sums are indexed from 1");
  f.add({k}, Rat(1));
  return f;
}

namespace {

/// exp(Σ_{k<=N} p_k/k) truncated by total degree N; equals Σ_λ p_λ/z_λ.
SymFun exp_psum_over_k(int N) {
  SymFun arg = SymFun::zero(N);
  for (int k = 1; k <= N; ++k) arg.add({k}, Rat(1) / k);
  SymFun acc = SymFun::zero(N);
  acc.add({}, Rat(1));
  SymFun power = acc;
  Rat fact(1);
  for (int j = 1; j <= N; ++j) {
    power = sym_mul(power, arg);
    fact *= j;
    acc = sym_add(acc, sym_scale(Rat(1) / fact, power));
  }
  return acc;
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

SymFun chi_com(int trunc) {
  SymFun f = exp_psum_over_k(trunc);
  f.c.erase(Partition{});
  return f;
}

SymFun chi_lie(int trunc) {
  SymFun f = SymFun::zero(trunc);
  for (int n = 1; n <= trunc; ++n)
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      int mu = moebius(d);
      if (mu == 0) continue;
      Partition p(static_cast<size_t>(n / d), d);
      f.add(p, Rat(mu) / n);
    }
  return f;
}

SymFun chi_lie2_dual(int trunc) {
  SymFun psum = SymFun::zero(trunc);
  for (int k = 1; k <= trunc; ++k) psum.add({k}, Rat(1));
  return sym_mul(psum, exp_psum_over_k(trunc));
}

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama
// ---------------------------------------------------------------------------

namespace {

/// First-column hook lengths ("beta numbers") of mu padded to m rows.
std::vector<int> beta_set(const Partition& mu, int m) {
  std::vector<int> beta(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    int part = i < static_cast<int>(mu.size()) ? mu[i] : 0;
    beta[i] = part + (m - 1 - i);
  }
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  int m = static_cast<int>(beta.size());
  Partition mu;
  for (int i = 0; i < m; ++i) {
    int part = beta[i] - (m - 1 - i);
    if (part > 0) mu.push_back(part);
  }
  return mu;
}

thread_local std::map<std::pair<Partition, Partition>, long long> mn_memo;

}  // namespace

long long sn_character(const Partition& mu, const Partition& lambda) {
  if (partition_weight(mu) != partition_weight(lambda))
    throw Error(ErrorKind::BadSeries,
                "character of mismatched partition weights");
  if (lambda.empty()) return 1;
  auto key = std::make_pair(mu, lambda);
  auto hit = mn_memo.find(key);
  if (hit != mn_memo.end()) return hit->second;

  int k = lambda.front();
  Partition rest(lambda.begin() + 1, lambda.end());
  int m = static_cast<int>(mu.size());
  std::vector<int> beta = beta_set(mu, m);
  long long total = 0;
  // Removing a border strip of size k = moving one beta number down by k
  // into an unoccupied slot; the sign is the number of occupied slots
  // jumped over.
  for (int i = 0; i < m; ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++between;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    long long sub = sn_character(from_beta(std::move(nb)), rest);
    total += (between % 2 == 0) ? sub : -sub;
  }
  mn_memo.emplace(std::move(key), total);
  return total;
}

std::map<Partition, Rat> schur_expand(const SymFun& chi, int max_degree) {
  std::map<Partition, Rat> out;
  int cap = std::min(chi.trunc, max_degree);
  for (int n = 0; n <= cap; ++n) {
    std::vector<std::pair<Partition, Rat>> layer;
    for (const Partition& lam : partitions_of(n)) {
      Rat v = chi.coeff(lam);
      if (v != 0) layer.emplace_back(lam, v);
    }
    if (layer.empty()) continue;
    for (const Partition& mu : partitions_of(n)) {
      Rat total(0);
      for (const auto& [lam, v] : layer) total += v * sn_character(mu, lam);
      if (total != 0) out[mu] = total;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The necessary condition
// ---------------------------------------------------------------------------

SeriesReport necessary_condition_egf(const PowerSeries& f_dual) {
  if (!f_dual.coeff(0).is_zero())
    throw Error(ErrorKind::BadSeries,
                "dual dimension series must have zero constant term");
  if (f_dual.trunc < 1 || !f_dual.coeff(1).invertible())
    throw Error(ErrorKind::BadSeries,
                "dual dimension series must have an invertible linear term");
  PowerSeries inner = ps_derivative(ps_negate_arg(f_dual));
  PowerSeries result = ps_scale(QPoly(Rat(-1)), ps_invert(inner));

  SeriesReport rep;
  for (int d = 0; d <= result.trunc; ++d)
    if (!result.coeff(d).nonnegative()) {
      rep.nonnegative = false;
      rep.violation_degree = d;
      rep.violation_value = result.coeff(d).text();
      break;
    }
  rep.series = std::move(result);
  return rep;
}

SeriesReport necessary_condition_sym(const SymFun& chi_dual, int schur_cap) {
  if (chi_dual.coeff({}) != 0)
    throw Error(ErrorKind::BadSeries,
                "dual character must have zero constant term");
  SymFun inner = d_dp1(epsilon(chi_dual));
  if (inner.coeff({}) == 0)
    throw Error(ErrorKind::BadSeries,
                "dual character must have a nonzero p1 coefficient");
  SymFun result = sym_scale(Rat(-1), sym_invert(inner));

  SeriesReport rep;
  PowerSeries dims = egf_of(result);
  for (int d = 0; d <= dims.trunc; ++d)
    if (dims.coeff(d).rational_value() < 0) {
      rep.nonnegative = false;
      rep.violation_degree = d;
      rep.violation_value = dims.coeff(d).text();
      break;
    }
  std::map<Partition, Rat> schur = schur_expand(result, schur_cap);
  rep.schur_positive = true;
  for (int n = 0; n <= std::min(result.trunc, schur_cap); ++n) {
    for (const Partition& mu : partitions_of(n)) {
      auto it = schur.find(mu);
      if (it != schur.end() && it->second < 0) {
        rep.schur_positive = false;
        if (!rep.violation_partition) {
          rep.violation_partition = mu;
          if (rep.violation_value.empty())
            rep.violation_value = rat_to_string(it->second);
        }
        break;
      }
    }
    if (rep.schur_positive == false) break;
  }
  rep.sym = std::move(result);
  return rep;
}

}  // namespace opbw
