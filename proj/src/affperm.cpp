#include "tnnlag/affperm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "tnnlag/error.hpp"
#include "tnnlag/necklace.hpp"

namespace tnnlag {

namespace {

int pmod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

int half(const AffinePerm& f) {
  if (f.m() % 2 != 0 || f.k() * 2 != f.m())
    throw Error(ErrorKind::ShapeMismatch, "expected (n, 2n), got " + f.str());
  return f.m() / 2;
}

void require_rho(const AffinePerm& f) {
  if (!is_rho_symmetric(f)) throw Error(ErrorKind::NotRhoSymmetric, f.str());
}

}  // namespace

AffinePerm::AffinePerm(int m, std::vector<int> window) : m_(m), w_(std::move(window)) {
  if (static_cast<int>(w_.size()) != m_)
    throw Error(ErrorKind::ShapeMismatch, "window length differs from period");
}

int AffinePerm::k() const {
  if (m_ == 0) return 0;
  long s = 0;
  for (int i = 0; i < m_; ++i) s += w_[static_cast<std::size_t>(i)] - (i + 1);
  return static_cast<int>(s / m_);
}

int AffinePerm::operator()(int i) const {
  int r = pmod(i - 1, m_);
  return w_[static_cast<std::size_t>(r)] + (i - 1 - r);
}

int AffinePerm::inverse(int v) const {
  for (int r = 1; r <= m_; ++r) {
    int d = v - w_[static_cast<std::size_t>(r - 1)];
    if (pmod(d, m_) == 0) return r + d;
  }
  throw Error(ErrorKind::NotBijective, "value " + std::to_string(v) + " not attained by " + str());
}

bool AffinePerm::is_bounded() const {
  for (int i = 1; i <= m_; ++i) {
    int v = (*this)(i);
    if (v < i || v > i + m_) return false;
  }
  return true;
}

std::string AffinePerm::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w_.size(); ++i) os << (i ? "," : "") << w_[i];
  os << ')';
  return os.str();
}

AffinePerm validate(const std::vector<int>& window, int k, int m) {
  if (m < 0 || static_cast<int>(window.size()) != m)
    throw Error(ErrorKind::ShapeMismatch, "window must have length m = " + std::to_string(m));
  std::vector<int> first(static_cast<std::size_t>(m), 0);
  for (int i = 1; i <= m; ++i) {
    int r = pmod(window[static_cast<std::size_t>(i - 1)], m);
    if (first[static_cast<std::size_t>(r)] != 0)
      throw Error(ErrorKind::NotBijective, "index " + std::to_string(i) + " repeats the residue of index " +
                                               std::to_string(first[static_cast<std::size_t>(r)]));
    first[static_cast<std::size_t>(r)] = i;
  }
  long s = 0;
  for (int i = 1; i <= m; ++i) {
    int v = window[static_cast<std::size_t>(i - 1)];
    if (v < i || v > i + m)
      throw Error(ErrorKind::BoundViolation, "index " + std::to_string(i) + ": f(i) = " + std::to_string(v));
    s += v - i;
  }
  if (s != static_cast<long>(k) * m)
    throw Error(ErrorKind::SumMismatch, "sum of f(i) - i is " + std::to_string(s) + ", expected " +
                                            std::to_string(static_cast<long>(k) * m));
  return AffinePerm(m, window);
}

AffinePerm identity_perm(int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  return AffinePerm(m, w);
}

AffinePerm shift_perm(int k, int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) w[static_cast<std::size_t>(i - 1)] = i + k;
  return AffinePerm(m, w);
}

std::vector<Relation> relations(const AffinePerm& f) {
  std::vector<Relation> out;
  const int m = f.m();
  for (int i = 1; i <= m; ++i) {
    const int fi = f(i);
    for (int j = i + 1; j < i + m; ++j) {
      const int fj = f(j);
      if (j <= fj && fj < fi) {
        bool simple = true;
        for (int l = i + 1; l < j && simple; ++l)
          if (fj < f(l) && f(l) < fi) simple = false;
        out.push_back({i, j, RelationKind::alignment, simple});
      } else if (j <= fi && fi < fj && fj <= i + m) {
        bool simple = true;
        for (int l = i + 1; l < j && simple; ++l)
          if (fi < f(l) && f(l) < fj) simple = false;
        out.push_back({i, j, RelationKind::crossing, simple});
      }
    }
  }
  return out;
}

int length(const AffinePerm& f) {
  const int m = f.m();
  int d = 0;
  for (int i = 1; i <= m; ++i) d = std::max(d, std::abs(f(i) - i));
  int count = 0;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= i + 2 * d + 1; ++j)
      if (f(j) < f(i)) ++count;
  return count;
}

int dim(const AffinePerm& f) { return f.k() * (f.m() - f.k()) - length(f); }

AffinePerm right_mul_s(const AffinePerm& f, int i) {
  const int m = f.m();
  int r = pmod(i - 1, m) + 1;
  std::vector<int> w = f.window();
  int a = f(r), b = f(r + 1);
  w[static_cast<std::size_t>(r - 1)] = b;
  int s = pmod(r, m) + 1;  // position r + 1 reduced
  w[static_cast<std::size_t>(s - 1)] = a + (s - (r + 1));
  return AffinePerm(m, w);
}

AffinePerm left_mul_s(const AffinePerm& f, int i) {
  const int m = f.m();
  std::vector<int> w = f.window();
  for (auto& v : w) {
    if (pmod(v - i, m) == 0)
      v += 1;
    else if (pmod(v - i - 1, m) == 0)
      v -= 1;
  }
  return AffinePerm(m, w);
}

AffinePerm right_mul_transposition(const AffinePerm& f, int i, int j) {
  const int m = f.m();
  if (pmod(i - j, m) == 0) throw Error(ErrorKind::IndexOutOfRange, "transposition of congruent positions");
  std::vector<int> w = f.window();
  auto put = [&](int pos, int val) {
    int r = pmod(pos - 1, m) + 1;
    w[static_cast<std::size_t>(r - 1)] = val + (r - pos);
  };
  int fi = f(i), fj = f(j);
  put(i, fj);
  put(j, fi);
  return AffinePerm(m, w);
}

bool is_fsi_greater(const AffinePerm& f, int i) {
  const int m = f.m();
  int r = pmod(i - 1, m) + 1;
  return r + 1 <= f(r + 1) && f(r + 1) < f(r) && f(r) <= r + m;
}

AffinePerm star(const AffinePerm& f, int i, Side side) {
  AffinePerm g = side == Side::right ? right_mul_s(f, i) : left_mul_s(f, i);
  if (g.is_bounded() && length(g) < length(f)) return g;
  return f;
}

bool bruhat_leq(const AffinePerm& f, const AffinePerm& g) {
  if (f.m() != g.m() || f.k() != g.k())
    throw Error(ErrorKind::ShapeMismatch, "bruhat_leq on " + f.str() + " and " + g.str());
  // The order is dual to the Coxeter order: larger elements have larger matroids,
  // hence cyclically smaller necklace entries.
  const int m = f.m();
  for (int i = 1; i <= m; ++i)
    if (!cyclic_leq(imin(g, i), imin(f, i), i, m)) return false;
  return true;
}

std::vector<AffinePerm> covers(const AffinePerm& f) {
  std::vector<AffinePerm> out;
  for (const auto& r : relations(f))
    if (r.kind == RelationKind::alignment && r.simple) out.push_back(right_mul_transposition(f, r.i, r.j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_rho_symmetric(const AffinePerm& f) {
  const int n = half(f);
  for (int x = 1; x <= f.m(); ++x)
    if (f(x) != f.inverse(x + n) + n) return false;
  return true;
}

AffinePerm twist(const AffinePerm& f, int i) {
  require_rho(f);
  const int n = f.m() / 2;
  AffinePerm ls = left_mul_s(f, i + n);
  AffinePerm rs = right_mul_s(f, i);
  if (ls != rs) return left_mul_s(rs, i + n);
  return rs;
}

AffinePerm beta(const AffinePerm& f, int i) {
  AffinePerm t = twist(f, i);
  if (t != f && t.is_bounded() && bruhat_leq(f, t)) return t;
  return f;
}

std::vector<int> beta_descents(const AffinePerm& f) {
  require_rho(f);
  const int m = f.m();
  std::vector<int> out;
  for (int i = 1; i <= m; ++i)
    if (f(i) < f(i + 1) && f(i) != i && f(i + 1) != i + 1 + m) out.push_back(i);
  return out;
}

SymmetricLength symmetric_alignments(const AffinePerm& f) {
  require_rho(f);
  const int m = f.m(), n = m / 2;
  auto norm = [m](int a, int b) {
    int q = a - (pmod(a - 1, m) + 1);
    return std::pair<int, int>(a - q, b - q);
  };
  std::map<std::pair<int, int>, bool> seen;
  std::vector<std::pair<int, int>> all;
  for (const auto& r : relations(f))
    if (r.kind == RelationKind::alignment) all.emplace_back(r.i, r.j);
  SymmetricLength s{0, 0};
  for (const auto& p : all) {
    if (seen.count(p)) continue;
    auto img = norm(f(p.second) + n, f(p.first) + n);
    seen[p] = true;
    seen[img] = true;
    ++s.orbits;
    if (img == p) ++s.central;
  }
  return s;
}

int symmell(const AffinePerm& f) { return symmetric_alignments(f).orbits; }

int symmdim(const AffinePerm& f) {
  const int n = f.m() / 2;
  return n * (n + 1) / 2 - symmell(f);
}

int middle_count(const AffinePerm& f) {
  const int n = half(f);
  int c = 0;
  for (int i = 1; i <= f.m(); ++i)
    if (f(i) == i + n) ++c;
  return c;
}

namespace {

// Order-preserving embedding of period-(m-2) positions into [m] minus {a, b}, extended periodically.
struct Embedding {
  int m_old, m_new;
  std::vector<int> kept;  // kept[t] = new label of old label t+1
  int operator()(int x) const {
    int r = pmod(x - 1, m_old) + 1;
    int q = (x - r) / m_old;
    return kept[static_cast<std::size_t>(r - 1)] + q * m_new;
  }
};

Embedding make_embedding(int m_new, int a, int b) {
  Embedding e{m_new - 2, m_new, {}};
  for (int x = 1; x <= m_new; ++x)
    if (x != a && x != b) e.kept.push_back(x);
  return e;
}

}  // namespace

AffinePerm add_fixed_pair(const AffinePerm& f, int i) {
  const int m_old = f.m();
  if (m_old % 2 != 0 || f.k() * 2 != m_old) throw Error(ErrorKind::ShapeMismatch, "λ_i needs f in B(n-1, 2n-2)");
  if (m_old > 0) require_rho(f);
  const int m = m_old + 2, n = m / 2;
  if (i < 1 || i > m) throw Error(ErrorKind::IndexOutOfRange, "λ_i with i = " + std::to_string(i));
  const int w = i <= n ? i + n : i - n;
  Embedding e = make_embedding(m, i, w);
  std::vector<int> win(static_cast<std::size_t>(m));
  win[static_cast<std::size_t>(i - 1)] = i;
  win[static_cast<std::size_t>(w - 1)] = w + m;
  for (int x = 1; x <= m_old; ++x) win[static_cast<std::size_t>(e(x) - 1)] = e(f(x));
  return AffinePerm(m, win);
}

AffinePerm remove_fixed_pair(const AffinePerm& f, int i) {
  require_rho(f);
  const int m = f.m(), n = m / 2;
  if (i < 1 || i > m || f(i) != i)
    throw Error(ErrorKind::IndexOutOfRange, "no black fixed point at " + std::to_string(i) + " in " + f.str());
  const int w = i <= n ? i + n : i - n;
  Embedding e = make_embedding(m, i, w);
  std::vector<int> inv(static_cast<std::size_t>(m + 1), 0);  // new label -> old label
  for (int x = 1; x <= m - 2; ++x) inv[static_cast<std::size_t>(e(x))] = x;
  std::vector<int> win(static_cast<std::size_t>(m - 2));
  for (int x = 1; x <= m - 2; ++x) {
    int v = f(e(x));
    int r = pmod(v - 1, m) + 1;
    int q = (v - r) / m;
    win[static_cast<std::size_t>(x - 1)] = inv[static_cast<std::size_t>(r)] + q * (m - 2);
  }
  return AffinePerm(m - 2, win);
}

GoingDown going_down(const AffinePerm& f) {
  require_rho(f);
  for (int i = 1; i <= f.m(); ++i)
    if (f(i) == i) return {GoingDown::fixed_pair, i, std::nullopt};
  auto d = beta_descents(f);
  if (d.empty()) throw Error(ErrorKind::NotRhoSymmetric, "no descent found for " + f.str());
  return {GoingDown::predecessor, d.front(), twist(f, d.front())};
}

std::vector<AffinePerm> enumerate(int k, int m, bool rho_symmetric_only) {
  if (m > 10) throw Error(ErrorKind::SizeGuard, "enumerate is limited to m <= 10");
  if (m < 0 || k < 0 || k > m) throw Error(ErrorKind::ShapeMismatch, "need 0 <= k <= m");
  if (rho_symmetric_only && 2 * k != m) return {};
  std::vector<AffinePerm> out;
  std::vector<int> w(static_cast<std::size_t>(m));
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  const long target = static_cast<long>(k) * m;
  auto rec = [&](auto&& self, int pos, long sum) -> void {
    if (pos > m) {
      if (sum == target) {
        AffinePerm f(m, w);
        if (!rho_symmetric_only || is_rho_symmetric(f)) out.push_back(f);
      }
      return;
    }
    long rest = m - pos;  // remaining positions each contribute at most m
    for (int v = pos; v <= pos + m; ++v) {
      long s = sum + (v - pos);
      if (s > target || s + rest * m < target) continue;
      int r = pmod(v, m);
      if (used[static_cast<std::size_t>(r)]) continue;
      used[static_cast<std::size_t>(r)] = true;
      w[static_cast<std::size_t>(pos - 1)] = v;
      self(self, pos + 1, s);
      used[static_cast<std::size_t>(r)] = false;
    }
  };
  rec(rec, 1, 0);
  return out;
}

nlohmann::json to_json(const AffinePerm& f) {
  return {{"k", f.k()}, {"m", f.m()}, {"window", f.window()}};
}

AffinePerm perm_from_json(const nlohmann::json& j) {
  try {
    return validate(j.at("window").get<std::vector<int>>(), j.at("k").get<int>(), j.at("m").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace tnnlag
