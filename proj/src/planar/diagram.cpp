#include "qsym/planar/diagram.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <thread>

#include "qsym/error.hpp"

namespace qsym::planar {

namespace {

// Cyclic position of a boundary label: upper 1..n, then lower n+m down to n+1.
int cyclic_pos(int x, int n, int m) { return x <= n ? x - 1 : n + (n + m - x); }

bool interleave(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

using Pairs = std::vector<std::pair<int, int>>;

// All non-crossing matchings of seq[lo, hi), seq listed in cyclic order.
void enumerate_range(const std::vector<int>& seq, int lo, int hi, std::vector<Pairs>& out) {
  out.clear();
  if (lo >= hi) {
    out.emplace_back();
    return;
  }
  if ((hi - lo) % 2 != 0) return;
  std::vector<Pairs> inner, outer;
  for (int j = lo + 1; j < hi; j += 2) {
    enumerate_range(seq, lo + 1, j, inner);
    enumerate_range(seq, j + 1, hi, outer);
    for (const auto& a : inner)
      for (const auto& b : outer) {
        Pairs p;
        p.reserve(a.size() + b.size() + 1);
        p.emplace_back(seq[lo], seq[j]);
        p.insert(p.end(), a.begin(), a.end());
        p.insert(p.end(), b.begin(), b.end());
        out.push_back(std::move(p));
      }
  }
}

// Filters in contiguous chunks, one thread per chunk, concatenated in input order.
template <class Pred>
std::vector<PairDiagram> parallel_filter(const std::vector<PairDiagram>& in, Pred pred) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || in.size() < 4096) {
    std::vector<PairDiagram> out;
    for (const auto& p : in)
      if (pred(p)) out.push_back(p);
    return out;
  }
  std::vector<std::vector<PairDiagram>> parts(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (in.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      std::size_t b = w * chunk, e = std::min(in.size(), b + chunk);
      for (std::size_t i = b; i < e; ++i)
        if (pred(in[i])) parts[w].push_back(in[i]);
    });
  }
  for (auto& t : threads) t.join();
  std::vector<PairDiagram> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

PairDiagram::PairDiagram(int n, int m, std::vector<std::pair<int, int>> ps)
    : upper(n), lower(m), pairs(std::move(ps)) {
  if (n < 0 || m < 0 || (n + m) % 2 != 0) throw InvalidInput("pair diagram needs an even number of points");
  if (static_cast<int>(pairs.size()) * 2 != n + m) throw InvalidInput("pair diagram is not a perfect matching");
  std::vector<int> seen(n + m + 1, 0);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n + m || a == b) throw InvalidInput("pair diagram point out of range");
    if (seen[a]++ || seen[b]++) throw InvalidInput("pair diagram point used twice");
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (interleave(cyclic_pos(pairs[i].first, n, m), cyclic_pos(pairs[i].second, n, m),
                     cyclic_pos(pairs[j].first, n, m), cyclic_pos(pairs[j].second, n, m)))
        throw InvalidInput("pair diagram is crossing: " + str());
  std::sort(pairs.begin(), pairs.end());
}

std::vector<int> PairDiagram::partner() const {
  std::vector<int> part(points() + 1, 0);
  for (const auto& [a, b] : pairs) {
    part[a] = b;
    part[b] = a;
  }
  return part;
}

int PairDiagram::turnbacks() const {
  int t = 0;
  for (const auto& [a, b] : pairs) t += (a <= upper) == (b <= upper);
  return t;
}

std::string PairDiagram::str() const {
  std::ostringstream os;
  if (upper == 0) os << "NC2(" << lower << "):";
  else os << "NC2(" << upper << "," << lower << "):";
  if (pairs.empty()) os << " ()";
  else os << " ";
  for (const auto& [a, b] : pairs) os << "(" << a << " " << b << ")";
  return os.str();
}

PairDiagram PairDiagram::parse(const std::string& text) {
  static const std::regex head(R"(\s*NC2\((\d+)(?:,(\d+))?\)\s*:\s*(.*))");
  std::smatch mh;
  if (!std::regex_match(text, mh, head)) throw InvalidInput("bad diagram text '" + text + "'");
  int n = 0, m = std::stoi(mh[1]);
  if (mh[2].matched) {
    n = m;
    m = std::stoi(mh[2]);
  }
  static const std::regex pr(R"(\(\s*(\d+)\s+(\d+)\s*\))");
  std::vector<std::pair<int, int>> ps;
  std::string body = mh[3];
  for (auto it = std::sregex_iterator(body.begin(), body.end(), pr); it != std::sregex_iterator(); ++it)
    ps.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
  return PairDiagram(n, m, std::move(ps));
}

PairDiagram identity(int n) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 1; i <= n; ++i) ps.emplace_back(i, n + i);
  return PairDiagram(n, n, std::move(ps));
}

PairDiagram nested_cups(int n) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 1; i <= n; ++i) ps.emplace_back(i, 2 * n + 1 - i);
  return PairDiagram(0, 2 * n, std::move(ps));
}

PairDiagram cup() { return PairDiagram(0, 2, {{1, 2}}); }
PairDiagram cap() { return PairDiagram(2, 0, {{1, 2}}); }

Composite compose(const PairDiagram& p, const PairDiagram& q) {
  if (q.lower != p.upper)
    throw InvalidInput("compose: " + std::to_string(q.lower) + " lower points of the top diagram vs " +
                       std::to_string(p.upper) + " upper points of the bottom one");
  const int qu = q.upper, K = p.upper, pl = p.lower;
  const auto qp = q.partner(), pp = p.partner();
  std::vector<char> visited(K + 1, 0);
  std::vector<std::pair<int, int>> out;

  // Walk from an outer endpoint until the next one; result labels: top i, bottom qu+j.
  auto walk = [&](bool in_q, int x) {
    while (true) {
      if (in_q) {
        int y = qp[x];
        if (y <= qu) return y;
        int t = y - qu;
        visited[t] = 1;
        in_q = false;
        x = t;
      } else {
        int z = pp[x];
        if (z > K) return qu + (z - K);
        visited[z] = 1;
        in_q = true;
        x = qu + z;
      }
    }
  };
  for (int i = 1; i <= qu; ++i) {
    int e = walk(true, i);
    if (i < e) out.emplace_back(i, e);
  }
  for (int j = 1; j <= pl; ++j) {
    int e = walk(false, K + j);
    if (qu + j < e) out.emplace_back(qu + j, e);
  }
  int loops = 0;
  for (int t = 1; t <= K; ++t) {
    if (visited[t]) continue;
    ++loops;
    int cur = t;
    do {
      visited[cur] = 1;
      int a = pp[cur];  // middle point in p
      visited[a] = 1;
      cur = qp[qu + a] - qu;
    } while (cur != t);
  }
  Composite c;
  c.diagram = PairDiagram(qu, pl, std::move(out));
  c.loops = loops;
  c.zigzags = (p.turnbacks() + q.turnbacks() - 2 * loops - c.diagram.turnbacks()) / 2;
  return c;
}

PairDiagram tensor(const PairDiagram& p, const PairDiagram& q) {
  const int n = p.upper + q.upper;
  auto map_p = [&](int x) { return x <= p.upper ? x : n + (x - p.upper); };
  auto map_q = [&](int x) { return x <= q.upper ? p.upper + x : n + p.lower + (x - q.upper); };
  std::vector<std::pair<int, int>> ps;
  for (auto [a, b] : p.pairs) ps.emplace_back(map_p(a), map_p(b));
  for (auto [a, b] : q.pairs) ps.emplace_back(map_q(a), map_q(b));
  return PairDiagram(n, p.lower + q.lower, std::move(ps));
}

PairDiagram involute(const PairDiagram& p) {
  auto map = [&](int x) { return x <= p.upper ? p.lower + x : x - p.upper; };
  std::vector<std::pair<int, int>> ps;
  for (auto [a, b] : p.pairs) ps.emplace_back(map(a), map(b));
  return PairDiagram(p.lower, p.upper, std::move(ps));
}

std::vector<PairDiagram> enumerate_nc2(int n) {
  if (n < 0 || n % 2 != 0) return {};
  return enumerate_nc2(0, n);
}

std::vector<PairDiagram> enumerate_nc2(int n, int m) {
  if (n < 0 || m < 0 || (n + m) % 2 != 0) return {};
  std::vector<int> seq;
  if (n == 0) {
    for (int i = 1; i <= m; ++i) seq.push_back(i);
  } else {
    for (int i = 1; i <= n; ++i) seq.push_back(i);
    for (int i = n + m; i > n; --i) seq.push_back(i);
  }
  std::vector<Pairs> raw;
  enumerate_range(seq, 0, static_cast<int>(seq.size()), raw);
  std::vector<PairDiagram> out;
  out.reserve(raw.size());
  for (auto& ps : raw) {
    PairDiagram d;
    d.upper = n;
    d.lower = m;
    for (auto& [a, b] : ps)
      if (a > b) std::swap(a, b);
    std::sort(ps.begin(), ps.end());
    d.pairs = std::move(ps);
    out.push_back(std::move(d));
  }
  return out;
}

namespace {
PairDiagram shift(const PairDiagram& p, int by) {
  if (p.upper != 0) throw InvalidInput("rotation needs a diagram without upper points");
  const int n = p.lower;
  if (n == 0) return p;
  auto mv = [&](int x) { return ((x - 1 + by) % n + n) % n + 1; };
  std::vector<std::pair<int, int>> ps;
  for (auto [a, b] : p.pairs) {
    int x = mv(a), y = mv(b);
    ps.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(ps.begin(), ps.end());
  PairDiagram r;
  r.lower = n;
  r.pairs = std::move(ps);
  return r;
}
}  // namespace

PairDiagram rotate2(const PairDiagram& p) { return shift(p, 2); }
PairDiagram rotate2_inverse(const PairDiagram& p) { return shift(p, -2); }

std::vector<PairDiagram> nc2_circ(int k) {
  if (k < 0) return {};
  return parallel_filter(enumerate_nc2(2 * k), [](const PairDiagram& p) {
    for (auto [a, b] : p.pairs)
      if (b == a + 1 && a % 2 == 1) return false;
    return true;
  });
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t catalan(int k) { return binomial(2 * k, k) / (k + 1); }

std::int64_t riordan(int k) {
  std::int64_t s = 0;
  for (int i = 0; i <= k; ++i) {
    std::int64_t term = binomial(k, i) * catalan(i);
    s += ((k - i) % 2 == 0) ? term : -term;
  }
  return s;
}

Poly tl_moment(int k) {
  if (k < 0) throw InvalidInput("tl_moment needs k >= 0");
  if (k == 0) return Poly(std::vector<Rational>{-1, 0, 1});
  long fixed = 0;
  for (const auto& p : nc2_circ(k))
    if (rotate2(p) == p) ++fixed;
  return Poly(Rational(fixed));
}

ZetaResult zeta_on_basis(const PairDiagram& p) {
  if (p.upper != 0) throw InvalidInput("zeta_on_basis needs a diagram in NC2(0,2k)");
  const int n = p.lower;
  PairDiagram s = nested_cups(2);
  PairDiagram mid = tensor(tensor(identity(2), p), identity(2));
  PairDiagram close = tensor(identity(n), involute(nested_cups(2)));
  Composite a = compose(mid, s);
  Composite b = compose(close, a.diagram);
  return {b.diagram, a.loops + b.loops, a.zigzags + b.zigzags};
}

Rational cesaro_tau_q(long n, const Rational& d) {
  if (n < 1) throw InvalidInput("cesaro average needs n >= 1");
  Rational sum = d * d - 1;
  if (n > 2) sum += Rational(n - 2);
  return sum / Rational(n);
}

Rational cesaro_tau_q_enumerated(int n, const Rational& d) {
  if (n < 1) throw InvalidInput("cesaro average needs n >= 1");
  Rational sum = 0;
  for (int k = 0; k < n; ++k) sum += tl_moment(k).eval(d);
  return sum / Rational(n);
}

Rational spectral_moment(long k, const Rational& d) {
  Rational m = 1;
  if (k == 0) m += d * d - 2;
  if (k == 1 || k == -1) m -= 1;
  return m;
}

}  // namespace qsym::planar
