#include "haarcay/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "haarcay/error.hpp"

namespace haarcay {

bool is_prime(long long x) {
  if (x < 2) return false;
  for (long long d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

namespace {

using Code = std::vector<int>;

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > static_cast<long long>(kMaxGroupOrder) * 1024) break;
  }
  return r;
}

int mod(long long x, long long m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

void require_order(long long order, const std::string& name) {
  if (order > static_cast<long long>(kMaxGroupOrder))
    throw CapExceeded(name + " has order " + std::to_string(order) + " above cap " +
                      std::to_string(kMaxGroupOrder));
}

/// All tuples of the mixed-radix ranges, lexicographic order.
std::vector<Code> tuples(const std::vector<int>& radix) {
  std::vector<Code> out;
  Code cur(radix.size(), 0);
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(radix.size()) - 1;
    while (i >= 0 && ++cur[i] == radix[i]) cur[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

struct NamedCode {
  std::string label;
  Code code;
};

template <class Mul>
GroupTable table_from_codes(const std::vector<Code>& elems, Mul&& mul, const std::vector<NamedCode>& gens,
                            std::string tag) {
  std::map<Code, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Element>(i));
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto it = index.find(mul(elems[x], elems[y]));
      check(it != index.end(), "product left the normal-form set");
      table[x * n + y] = it->second;
    }
  std::vector<NamedGenerator> named;
  for (const auto& g : gens) named.push_back({g.label, index.at(g.code)});
  return GroupTable(n, std::move(table), std::move(named), std::move(tag));
}

// --- polynomials and matrices over F_p ------------------------------------

using Poly = std::vector<int>;  // coefficient of x^i at index i

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  // m is monic
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    int c = a.back();
    for (int i = 0; i <= dm; ++i) a[shift + i] = mod(a[shift + i] - static_cast<long long>(c) * m[i], p);
    trim(a);
  }
  return a;
}

bool divides(const Poly& d, const Poly& f, int p) { return poly_mod(f, d, p).empty(); }

bool irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    for (const auto& low : tuples(std::vector<int>(d, p))) {
      Poly g(low.begin(), low.end());
      g.push_back(1);
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

using Matrix = std::vector<std::vector<int>>;

Matrix mat_mul(const Matrix& a, const Matrix& b, int p) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = mod(r[i][j] + static_cast<long long>(a[i][k]) * b[k][j], p);
  return r;
}

Matrix mat_identity(std::size_t n) {
  Matrix r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

Code mat_apply(const Matrix& a, const Code& v, int p) {
  Code r(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<long long>(a[i][j]) * v[j];
    r[i] = mod(s, p);
  }
  return r;
}

// --- family builders -------------------------------------------------------

GroupTable build_cyclic(const CyclicSpec& s) {
  require(s.n >= 1, "Cyclic(n) requires n >= 1");
  require_order(s.n, "Cyclic");
  const int n = s.n;
  return table_from_codes(
      tuples({n}), [n](const Code& x, const Code& y) { return Code{(x[0] + y[0]) % n}; },
      {{"a", {1 % n}}}, "Z_" + std::to_string(n));
}

GroupTable build_dihedral(const DihedralSpec& s) {
  require(s.n >= 1, "Dihedral(n) requires n >= 1");
  require_order(2LL * s.n, "Dihedral");
  const int n = s.n;
  // a^i b^j * a^k b^l = a^{i +- k} b^{j+l}
  auto mul = [n](const Code& x, const Code& y) {
    int k = x[1] ? -y[0] : y[0];
    return Code{mod(x[0] + k, n), (x[1] + y[1]) % 2};
  };
  return table_from_codes(tuples({n, 2}), mul, {{"a", {1 % n, 0}}, {"b", {0, 1}}},
                          "D_" + std::to_string(2 * n));
}

GroupTable build_quaternion() {
  // i^s j^t; j i = i^-1 j, j^2 = i^2.
  auto mul = [](const Code& x, const Code& y) {
    if (x[1] == 0) return Code{(x[0] + y[0]) % 4, y[1]};
    int s = mod(x[0] - y[0], 4);
    if (y[1] == 0) return Code{s, 1};
    return Code{(s + 2) % 4, 0};
  };
  return table_from_codes(tuples({4, 2}), mul, {{"i", {1, 0}}, {"j", {0, 1}}}, "Q_8");
}

GroupTable build_mpmn(const MpmnSpec& s) {
  require(is_prime(s.p), "M_p(m,n) requires p prime");
  require(s.m >= 2, "M_p(m,n) requires m >= 2");
  require(s.n >= 1, "M_p(m,n) requires n >= 1");
  require_order(ipow(s.p, s.m + s.n), "M_p(m,n)");
  const int pm = static_cast<int>(ipow(s.p, s.m));
  const int pn = static_cast<int>(ipow(s.p, s.n));
  const int c = static_cast<int>(ipow(s.p, s.m - 1));
  // b^-1 a b = a^r with r = 1 + p^{m-1}; b a b^-1 = a^{r^-1}.
  const int r = 1 + c;
  int rinv = 1;
  while (mod(static_cast<long long>(rinv) * r, pm) != 1) ++rinv;
  std::vector<int> rinv_pow(pn);
  rinv_pow[0] = 1;
  for (int j = 1; j < pn; ++j) rinv_pow[j] = mod(static_cast<long long>(rinv_pow[j - 1]) * rinv, pm);
  check(mod(static_cast<long long>(rinv_pow[pn - 1]) * rinv, pm) == 1, "b-action has wrong order");
  // a^i b^j * a^k b^l = a^{i + k r^{-j}} b^{j+l}
  auto mul = [=](const Code& x, const Code& y) {
    return Code{mod(x[0] + static_cast<long long>(y[0]) * rinv_pow[x[1]], pm), (x[1] + y[1]) % pn};
  };
  std::ostringstream tag;
  tag << "M_" << s.p << "(" << s.m << "," << s.n << ")";
  return table_from_codes(tuples({pm, pn}), mul, {{"a", {1, 0}}, {"b", {0, 1}}, {"c", {c, 0}}}, tag.str());
}

GroupTable build_mpmn1(const Mpmn1Spec& s) {
  require(is_prime(s.p), "M_p(m,n,1) requires p prime");
  require(s.n >= 1, "M_p(m,n,1) requires n >= 1");
  require(s.m >= s.n, "M_p(m,n,1) requires m >= n");
  require(s.p != 2 || s.m + s.n >= 3, "M_2(m,n,1) requires m + n >= 3");
  require_order(ipow(s.p, s.m + s.n + 1), "M_p(m,n,1)");
  const int pm = static_cast<int>(ipow(s.p, s.m));
  const int pn = static_cast<int>(ipow(s.p, s.n));
  const int p = s.p;
  // a^i b^j c^k * a^s b^l c^t = a^{i+s} b^{j+l} c^{k+t-sj}
  auto mul = [=](const Code& x, const Code& y) {
    return Code{(x[0] + y[0]) % pm, (x[1] + y[1]) % pn,
                mod(x[2] + y[2] - static_cast<long long>(y[0]) * x[1], p)};
  };
  std::ostringstream tag;
  tag << "M_" << s.p << "(" << s.m << "," << s.n << ",1)";
  return table_from_codes(tuples({pm, pn, p}), mul,
                          {{"a", {1 % pm, 0, 0}}, {"b", {0, 1 % pn, 0}}, {"c", {0, 0, 1}}}, tag.str());
}

GroupTable build_miller_moreno(const MillerMorenoSpec& s) {
  require(is_prime(s.p) && is_prime(s.q), "Miller-Moreno group requires p and q prime");
  require(s.p != s.q, "Miller-Moreno group requires distinct primes p and q");
  require(s.n >= 1 && s.m >= 1, "Miller-Moreno group requires n >= 1 and m >= 1");
  const long long pn = ipow(s.p, s.n);
  const long long qm = ipow(s.q, s.m);
  require_order(pn * qm, "Miller-Moreno group");
  require((pn - 1) % s.q == 0, "Miller-Moreno group requires q | (p^n - 1)");
  const int p = s.p, n = s.n, q = s.q;

  Matrix act;
  if (s.matrix) {
    act = *s.matrix;
    require(static_cast<int>(act.size()) == n, "action matrix must be n x n");
    for (auto& row : act) {
      require(static_cast<int>(row.size()) == n, "action matrix must be n x n");
      for (auto& v : row) v = mod(v, p);
    }
  } else {
    require(n < q, "Miller-Moreno group requires n < q");
    auto f = cyclotomic_factor(p, n, q);
    require(f.has_value(), "no irreducible factor of degree n of (x^q - 1)/(x - 1) over F_p");
    act.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i + 1 < n; ++i) act[i + 1][i] = 1;
    for (int k = 0; k < n; ++k) act[k][n - 1] = mod(-(*f)[k], p);
  }
  // Multiplicative order exactly q, no nonzero fixed vector.
  require(act != mat_identity(n), "action matrix must have multiplicative order q");
  Matrix pw = mat_identity(n);
  for (int i = 0; i < q; ++i) pw = mat_mul(pw, act, p);
  require(pw == mat_identity(n), "action matrix must have multiplicative order q");
  for (const auto& v : tuples(std::vector<int>(n, p))) {
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) continue;
    require(mat_apply(act, v, p) != v, "action matrix must be fixed-point-free");
  }
  // inv_pows[j] = M^{-j}
  std::vector<Matrix> inv_pows(q);
  Matrix minv = mat_identity(n);
  for (int i = 0; i < q - 1; ++i) minv = mat_mul(minv, act, p);
  inv_pows[0] = mat_identity(n);
  for (int j = 1; j < q; ++j) inv_pows[j] = mat_mul(inv_pows[j - 1], minv, p);

  const int qmi = static_cast<int>(qm);
  // v b^j * w b^k = (v + M^{-j} w) b^{j+k}
  auto mul = [=](const Code& x, const Code& y) {
    Code w(y.begin(), y.begin() + n);
    Code mw = mat_apply(inv_pows[x[n] % q], w, p);
    Code r(n + 1);
    for (int i = 0; i < n; ++i) r[i] = (x[i] + mw[i]) % p;
    r[n] = (x[n] + y[n]) % qmi;
    return r;
  };
  std::vector<int> radix(n, p);
  radix.push_back(qmi);
  Code a(n + 1, 0), b(n + 1, 0);
  a[0] = 1;
  b[n] = 1;
  std::ostringstream tag;
  tag << "Z_" << p << "^" << n << ":Z_" << qm;
  return table_from_codes(tuples(radix), mul, {{"a", a}, {"b", b}}, tag.str());
}

// --- presentations ---------------------------------------------------------

/// Coset enumeration over the trivial subgroup (HLT strategy with
/// coincidence processing). Only meant for the small presentations the
/// catalog uses.
class CosetTable {
public:
  explicit CosetTable(int ngens) : cols_(2 * ngens) { new_coset(); }

  int cols() const { return cols_; }
  int count() const { return static_cast<int>(parent_.size()); }
  bool live(int c) const { return parent_[c] == c; }
  int get(int c, int x) const { return table_[static_cast<std::size_t>(c) * cols_ + x]; }

  void run(const std::vector<std::vector<int>>& relators) {
    for (int c = 0; c < count(); ++c) {
      if (!live(c)) continue;
      for (const auto& r : relators) {
        scan_and_fill(c, r);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x)
        if (get(c, x) < 0) define(c, x);
    }
  }

private:
  static int inv(int x) { return x ^ 1; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }

  int new_coset() {
    if (parent_.size() >= kMaxCosets)
      throw CapExceeded("coset enumeration exceeded " + std::to_string(kMaxCosets) +
                        " cosets (presentation too large or infinite)");
    int c = count();
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, -1);
    return c;
  }

  void define(int c, int x) {
    int d = new_coset();
    at(c, x) = d;
    at(d, inv(x)) = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int c = queue[i];
      for (int x = 0; x < cols_; ++x) {
        int d = get(c, x);
        if (d < 0) continue;
        at(c, x) = -1;
        if (get(d, inv(x)) == c) at(d, inv(x)) = -1;
        int c1 = rep(c), d1 = rep(d);
        if (get(c1, x) >= 0) {
          merge(d1, get(c1, x), queue);
        } else if (get(d1, inv(x)) >= 0) {
          merge(c1, get(d1, inv(x)), queue);
        } else {
          at(c1, x) = d1;
          at(d1, inv(x)) = c1;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && get(f, w[i]) >= 0) f = get(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, inv(w[j])) >= 0) b = get(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inv(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int cols_;
  std::vector<int> parent_;
  std::vector<int> table_;
};

GroupTable build_presented(const PresentedSpec& s) {
  require(s.ngens >= 0, "Presented requires ngens >= 0");
  std::string letters = s.letters;
  if (letters.empty()) {
    for (const auto& r : s.relators)
      for (char ch : r) {
        char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (std::isalpha(static_cast<unsigned char>(ch)) && letters.find(lc) == std::string::npos)
          letters.push_back(lc);
      }
  }
  require(static_cast<int>(letters.size()) == s.ngens,
          "Presented: relators use " + std::to_string(letters.size()) + " generator letters but ngens = " +
              std::to_string(s.ngens));
  for (char ch : letters)
    require(std::islower(static_cast<unsigned char>(ch)), "Presented: generator letters must be lowercase");
  std::vector<std::vector<int>> rels;
  for (const auto& r : s.relators) {
    std::vector<int> w;
    for (char ch : r) {
      char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      auto pos = letters.find(lc);
      require(pos != std::string::npos && std::isalpha(static_cast<unsigned char>(ch)),
              std::string("Presented: relator \"") + r + "\" uses unknown symbol '" + ch + "'");
      w.push_back(static_cast<int>(2 * pos + (std::isupper(static_cast<unsigned char>(ch)) ? 1 : 0)));
    }
    rels.push_back(std::move(w));
  }

  CosetTable ct(s.ngens);
  ct.run(rels);

  // Renumber live cosets by breadth-first (shortlex) order from coset 0.
  std::vector<int> order{0};
  std::vector<int> index(ct.count(), -1);
  index[0] = 0;
  std::vector<int> parent{-1}, via{-1};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int x = 0; x < ct.cols(); ++x) {
      int d = ct.get(order[i], x);
      check(d >= 0 && ct.live(d), "incomplete coset table");
      if (index[d] < 0) {
        index[d] = static_cast<int>(order.size());
        order.push_back(d);
        parent.push_back(static_cast<int>(i));
        via.push_back(x);
      }
    }
  }
  const std::size_t n = order.size();
  require_order(static_cast<long long>(n), "Presented group");
  // act[e][x] = element reached from e by generator column x
  std::vector<std::vector<Element>> act(n, std::vector<Element>(ct.cols()));
  for (std::size_t e = 0; e < n; ++e)
    for (int x = 0; x < ct.cols(); ++x) act[e][x] = static_cast<Element>(index[ct.get(order[e], x)]);
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    table[x * n] = static_cast<Element>(x);
    for (std::size_t y = 1; y < n; ++y)
      table[x * n + y] = act[table[x * n + static_cast<std::size_t>(parent[y])]][via[y]];
  }
  std::vector<NamedGenerator> gens;
  for (std::size_t i = 0; i < letters.size(); ++i)
    gens.push_back({std::string(1, letters[i]), act[0][2 * i]});
  return GroupTable(n, std::move(table), std::move(gens), "Presented<" + letters + ">");
}

GroupTable build_direct_product(const DirectProductSpec& s) {
  std::vector<GroupTable> factors;
  long long total = 1;
  for (const auto& f : s.factors) {
    factors.push_back(build_family(f));
    total *= static_cast<long long>(factors.back().order());
    require_order(total, "DirectProduct");
  }
  std::vector<int> radix;
  for (const auto& f : factors) radix.push_back(static_cast<int>(f.order()));
  auto mul = [&](const Code& x, const Code& y) {
    Code r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      r[i] = static_cast<int>(factors[i].mul(static_cast<Element>(x[i]), static_cast<Element>(y[i])));
    return r;
  };
  std::vector<NamedCode> gens;
  char next = 'a';
  std::string tag;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& g : factors[i].gens()) {
      require(next <= 'z', "DirectProduct: too many generators to label");
      Code c(factors.size(), 0);
      c[i] = static_cast<int>(g.element);
      gens.push_back({std::string(1, next++), c});
    }
    tag += (i ? " x " : "") + factors[i].family_tag();
  }
  return table_from_codes(tuples(radix.empty() ? std::vector<int>{} : radix), mul, gens, tag);
}

}  // namespace

std::optional<std::vector<int>> cyclotomic_factor(int p, int n, int q) {
  if (!is_prime(p) || !is_prime(q) || n < 1) return std::nullopt;
  // (x^q - 1)/(x - 1) = 1 + x + ... + x^{q-1}
  Poly phi(q, 1);
  for (const auto& low : tuples(std::vector<int>(n, p))) {
    Poly f(low.begin(), low.end());
    f.push_back(1);
    if (!divides(f, phi, p)) continue;
    if (!irreducible(f, p)) continue;
    return low;
  }
  return std::nullopt;
}

GroupTable build_family(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> GroupTable {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) return build_cyclic(s);
        else if constexpr (std::is_same_v<T, DihedralSpec>) return build_dihedral(s);
        else if constexpr (std::is_same_v<T, QuaternionSpec>) return build_quaternion();
        else if constexpr (std::is_same_v<T, MpmnSpec>) return build_mpmn(s);
        else if constexpr (std::is_same_v<T, Mpmn1Spec>) return build_mpmn1(s);
        else if constexpr (std::is_same_v<T, MillerMorenoSpec>) return build_miller_moreno(s);
        else if constexpr (std::is_same_v<T, PresentedSpec>) return build_presented(s);
        else return build_direct_product(s);
      },
      spec.value);
}

std::string family_name(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, CyclicSpec>) os << "Z_" << s.n;
        else if constexpr (std::is_same_v<T, DihedralSpec>) os << "D_" << 2 * s.n;
        else if constexpr (std::is_same_v<T, QuaternionSpec>) os << "Q_8";
        else if constexpr (std::is_same_v<T, MpmnSpec>) os << "M_" << s.p << "(" << s.m << "," << s.n << ")";
        else if constexpr (std::is_same_v<T, Mpmn1Spec>)
          os << "M_" << s.p << "(" << s.m << "," << s.n << ",1)";
        else if constexpr (std::is_same_v<T, MillerMorenoSpec>)
          os << "Z_" << s.p << "^" << s.n << ":Z_" << s.q << "^" << s.m;
        else if constexpr (std::is_same_v<T, PresentedSpec>) {
          os << "<" << (s.letters.empty() ? std::to_string(s.ngens) + " gens" : s.letters) << " | ";
          for (std::size_t i = 0; i < s.relators.size(); ++i) os << (i ? "," : "") << s.relators[i];
          os << ">";
        } else {
          for (std::size_t i = 0; i < s.factors.size(); ++i) os << (i ? " x " : "") << family_name(s.factors[i]);
        }
        return os.str();
      },
      spec.value);
}

}  // namespace haarcay
