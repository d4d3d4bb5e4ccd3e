#include "liecheck/chevalley.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace liecheck {

// --- GVec -----------------------------------------------------------------

GVec::GVec(std::vector<Residue> coeffs, Residue p) : p_(p), c_(std::move(coeffs)) {
  for (auto v : c_)
    if (v >= p_) throw ModulusMismatch("GVec coefficient not reduced mod " + std::to_string(p_));
}

GVec GVec::unit(std::size_t dim, std::size_t i, Residue p) {
  GVec v(dim, p);
  v.c_.at(i) = 1;
  return v;
}

void GVec::check(const GVec& o) const {
  if (p_ != o.p_) throw ModulusMismatch("GVec moduli differ");
  if (c_.size() != o.c_.size()) throw DimensionMismatch("GVec lengths differ");
}

bool GVec::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](Residue v) { return v == 0; });
}

GVec& GVec::operator+=(const GVec& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Residue s = c_[i] + o.c_[i];
    c_[i] = s >= p_ ? s - p_ : s;
  }
  return *this;
}

GVec& GVec::operator-=(const GVec& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + (p_ - o.c_[i]);
  return *this;
}

GVec GVec::operator-() const {
  GVec r(*this);
  for (auto& v : r.c_) v = v == 0 ? 0 : p_ - v;
  return r;
}

GVec GVec::scaled(Residue s) const {
  GVec r(*this);
  s %= p_;
  for (auto& v : r.c_) v = static_cast<Residue>(static_cast<std::uint64_t>(v) * s % p_);
  return r;
}

void GVec::axpy(Residue s, const GVec& o) {
  check(o);
  s %= p_;
  if (s == 0) return;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i]) c_[i] = static_cast<Residue>((c_[i] + static_cast<std::uint64_t>(s) * o.c_[i]) % p_);
}

std::string GVec::key() const {
  std::string k;
  if (p_ < 256) {
    k.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) k[i] = static_cast<char>(c_[i]);
  } else {
    k.resize(4 * c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (int b = 0; b < 4; ++b) k[4 * i + b] = static_cast<char>((c_[i] >> (8 * (3 - b))) & 0xff);
  }
  return k;
}

std::string GVec::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

// --- SCTable --------------------------------------------------------------

namespace {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  Fraction operator+(const Fraction& o) const {
    Fraction r{num * o.den + o.num * den, den * o.den};
    const auto g = std::gcd(r.num, r.den);
    if (g > 1) r.num /= g, r.den /= g;
    return r;
  }
};

std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what) {
  if (b == 0 || a % b != 0) throw Error(std::string("non-integral ") + what);
  return a / b;
}

}  // namespace

SCTable::SCTable(const RootSystem& rs) : size_(rs.size()), n_(rs.size() * rs.size(), 0) {
  const std::size_t P = rs.num_positive();
  std::vector<bool> known(size_ * size_, false);

  auto norm = [&](std::size_t i) { return static_cast<std::int64_t>(rs.norm(i)); };
  auto set = [&](std::size_t a, std::size_t b, int v) {
    n_[a * size_ + b] = v;
    n_[b * size_ + a] = -v;
    known[a * size_ + b] = known[b * size_ + a] = true;
  };

  // Reduce any pair to a pair of positive roots with a lower or equal sum,
  // using N_{-a,-b} = -N_{a,b} and N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y)
  // for x + y + z = 0.
  auto get = [&](auto&& self, std::size_t x, std::size_t y) -> std::int64_t {
    const bool px = rs.is_positive(x), py = rs.is_positive(y);
    if (px && py) {
      if (!known[x * size_ + y]) throw Error("structure constant requested before it was fixed");
      return n_[x * size_ + y];
    }
    if (!px && !py) return -self(self, rs.negative(x), rs.negative(y));
    const auto s = rs.sum(x, y);
    if (!s) return 0;
    const std::size_t z = rs.negative(*s);
    if (rs.is_positive(z) == px) return exact_div(self(self, z, x) * norm(z), norm(y), "structure constant");
    return exact_div(self(self, y, z) * norm(z), norm(x), "structure constant");
  };

  for (std::size_t xi = 0; xi < P; ++xi) {
    if (rs.root(xi).height == 1) continue;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < P; ++a)
      for (std::size_t b = a + 1; b < P; ++b)
        if (auto s = rs.sum(a, b); s && *s == xi) pairs.emplace_back(a, b);
    if (pairs.empty()) throw Error("non-simple positive root without a decomposition");
    const auto [alpha, beta] = pairs.front();
    extraspecial_.emplace_back(alpha, beta);
    const int n_ab = rs.string_down(alpha, beta) + 1;
    set(alpha, beta, n_ab);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [g, d] = pairs[k];
      const std::size_t ng = rs.negative(g), nd = rs.negative(d);
      Fraction total;
      if (auto bg = rs.sum(beta, ng)) total = total + Fraction{get(get, beta, ng) * get(get, alpha, nd), norm(*bg)};
      if (auto ag = rs.sum(alpha, ng)) total = total + Fraction{get(get, ng, alpha) * get(get, beta, nd), norm(*ag)};
      const std::int64_t num = norm(xi) * total.num;
      const std::int64_t val = exact_div(num, total.den * n_ab, "special-pair constant");
      set(g, d, static_cast<int>(val));
    }
  }

  for (std::size_t x = 0; x < size_; ++x)
    for (std::size_t y = 0; y < size_; ++y)
      if (rs.sum(x, y) && !(rs.is_positive(x) && rs.is_positive(y)))
        n_[x * size_ + y] = static_cast<int>(get(get, x, y));

  // h_alpha = sum_i k_i (alpha_i, alpha_i)/(alpha, alpha) h_i
  const auto& simple = rs.simple_roots();
  coroot_.resize(size_);
  for (std::size_t a = 0; a < size_; ++a) {
    coroot_[a].resize(simple.size());
    for (std::size_t i = 0; i < simple.size(); ++i)
      coroot_[a][i] = static_cast<int>(exact_div(static_cast<std::int64_t>(rs.root(a).simple_coeffs[i]) *
                                                     norm(simple[i]),
                                                 norm(a), "coroot coefficient"));
  }
}

std::vector<std::string> SCTable::dump(const RootSystem& rs) const {
  std::vector<std::string> lines;
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b)
      if (rs.sum(a, b))
        lines.push_back(format_weight(rs.root(a).coords) + " " + format_weight(rs.root(b).coords) + " " +
                        std::to_string((*this)(a, b)));
  return lines;
}

// --- Algebra --------------------------------------------------------------

struct Algebra::PMap {
  std::string route;
  std::size_t n = 0;
  std::vector<FpMatrix> rho;
  std::vector<std::size_t> pivot_positions;  // flattened n*n indices
  FpMatrix pivot_inverse;
};

Algebra::Algebra(RootSystem rs, Residue p)
    : rs_(std::move(rs)), sc_(rs_), field_(p), dim_(rs_.size() + static_cast<std::size_t>(rs_.rank())) {
  const std::size_t l = rank();
  table_z_.resize(dim_ * dim_);
  const auto& simple = rs_.simple_roots();
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      auto& out = table_z_[i * dim_ + j];
      const bool hi = i < l, hj = j < l;
      if (hi && hj) continue;
      if (hi || hj) {
        const std::size_t h = hi ? i : j;
        const std::size_t r = hi ? j - l : i - l;
        const int w = rs_.pairing(r, simple[h]);
        if (w != 0) out.push_back({root_basis(r), hi ? w : -w});
        continue;
      }
      const std::size_t a = i - l, b = j - l;
      if (rs_.negative(a) == b) {
        const auto& c = sc_.coroot(a);
        for (std::size_t k = 0; k < l; ++k)
          if (c[k] != 0) out.push_back({k, c[k]});
      } else if (auto s = rs_.sum(a, b)) {
        out.push_back({root_basis(*s), sc_(a, b)});
      }
    }
  }
  table_p_.resize(dim_ * dim_);
  for (std::size_t k = 0; k < table_z_.size(); ++k)
    for (const auto& t : table_z_[k]) {
      const Residue c = field_.reduce(t.coeff);
      if (c != 0) table_p_[k].push_back({t.index, c});
    }

  // Divided powers (ad e_alpha)^k / k!, computed over Z.
  divided_.resize(rs_.size());
  for (std::size_t r = 0; r < rs_.size(); ++r) {
    const std::size_t er = root_basis(r);
    for (auto& d : divided_[r]) d.assign(dim_, {});
    for (std::size_t j = 0; j < dim_; ++j) {
      std::vector<std::int64_t> v(dim_, 0);
      v[j] = 1;
      std::int64_t fact = 1;
      for (int k = 1; k <= 4; ++k) {
        std::vector<std::int64_t> w(dim_, 0);
        for (std::size_t m = 0; m < dim_; ++m)
          if (v[m] != 0)
            for (const auto& t : bracket_z(er, m)) w[t.index] += v[m] * t.coeff;
        v = std::move(w);
        const bool zero = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
        if (k == 4) {
          if (!zero) throw Error("ad e_alpha is not nilpotent of order 4");
          break;
        }
        fact *= k;
        for (std::size_t m = 0; m < dim_; ++m) {
          if (v[m] == 0) continue;
          const Residue c = field_.reduce(exact_div(v[m], fact, "divided power"));
          if (c != 0) divided_[r][static_cast<std::size_t>(k - 1)][j].push_back({m, c});
        }
      }
    }
  }
}

std::string Algebra::name() const { return rs_.name() + "/F" + std::to_string(p()); }

std::string Algebra::basis_label(std::size_t b) const {
  if (b < rank()) return "h" + std::to_string(b + 1);
  return "e" + format_weight(rs_.root(b - rank()).coords);
}

GVec Algebra::coroot(std::size_t root) const {
  GVec v = zero();
  const auto& c = sc_.coroot(root);
  for (std::size_t k = 0; k < c.size(); ++k) v.set(k, field_.reduce(c[k]));
  return v;
}

GVec Algebra::from_integers(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != dim_) throw DimensionMismatch("integer vector has wrong length");
  GVec v = zero();
  for (std::size_t i = 0; i < dim_; ++i) v.set(i, field_.reduce(coeffs[i]));
  return v;
}

void Algebra::check_same(const GVec& x) const {
  if (x.modulus() != p()) throw ModulusMismatch("element over F_" + std::to_string(x.modulus()) + " used in " + name());
  if (x.size() != dim_) throw DimensionMismatch("element of length " + std::to_string(x.size()) + " used in " + name());
}

GVec Algebra::bracket(const GVec& x, const GVec& y) const {
  check_same(x);
  check_same(y);
  std::vector<std::uint64_t> acc(dim_, 0);
  const Residue p = this->p();
  std::vector<std::size_t> ynz;
  for (std::size_t j = 0; j < dim_; ++j)
    if (y[j]) ynz.push_back(j);
  for (std::size_t i = 0; i < dim_; ++i) {
    const Residue xi = x[i];
    if (!xi) continue;
    for (const std::size_t j : ynz) {
      const Residue yj = y[j];
      const std::uint64_t s = static_cast<std::uint64_t>(xi) * yj % p;
      for (const auto& t : table_p_[i * dim_ + j]) acc[t.index] += s * t.coeff % p;
    }
  }
  std::vector<Residue> out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<Residue>(acc[k] % p);
  return GVec(std::move(out), p);
}

FpMatrix Algebra::ad(const GVec& x) const {
  check_same(x);
  FpMatrix m(dim_, dim_, p());
  for (std::size_t i = 0; i < dim_; ++i) {
    const Residue xi = x[i];
    if (!xi) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : table_p_[i * dim_ + j]) m(t.index, j) = field_.add(m(t.index, j), field_.mul(xi, t.coeff));
  }
  return m;
}

GVec Algebra::adexp(std::size_t root, Residue t, const GVec& x) const {
  check_same(x);
  if (root >= rs_.size()) throw PreconditionError("adexp: root index out of range");
  t %= p();
  GVec out = x;
  if (t == 0) return out;
  const std::array<Residue, 3> tk{t, field_.mul(t, t), field_.mul(field_.mul(t, t), t)};
  std::vector<std::uint64_t> acc(dim_, 0);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Residue xj = x[j];
    if (!xj) continue;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::uint64_t s = static_cast<std::uint64_t>(xj) * tk[k] % p();
      for (const auto& term : divided_[root][k][j]) acc[term.index] += s * term.coeff % p();
    }
  }
  std::vector<Residue> c(x.coeffs().begin(), x.coeffs().end());
  for (std::size_t m = 0; m < dim_; ++m) c[m] = static_cast<Residue>((c[m] + acc[m]) % p());
  return GVec(std::move(c), p());
}

FpMatrix Algebra::divided_power(std::size_t root, int k) const {
  if (k < 0 || k > 3) throw PreconditionError("divided power index must be in 0..3");
  if (k == 0) return FpMatrix::identity(dim_, p());
  FpMatrix m(dim_, dim_, p());
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& t : divided_[root][static_cast<std::size_t>(k - 1)][j]) m(t.index, j) = t.coeff;
  return m;
}

// --- p-map ----------------------------------------------------------------

namespace {

using IntMat = std::vector<std::int64_t>;  // n x n row-major

IntMat commutator(const IntMat& a, const IntMat& b, std::size_t n) {
  IntMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a[i * n + k], bik = b[i * n + k];
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j] - bik * a[k * n + j];
    }
  return c;
}

// Chevalley generators e_i, f_i of the defining representation, Bourbaki order.
std::size_t defining_generators(const RootSystem& rs, std::vector<IntMat>& e, std::vector<IntMat>& f) {
  const auto l = static_cast<std::size_t>(rs.rank());
  std::size_t n = 0;
  auto E = [&](IntMat& m, std::size_t r, std::size_t c, std::int64_t v) { m[r * n + c] += v; };
  switch (rs.kind()) {
    case RootKind::A:
      n = l + 1;
      for (std::size_t i = 0; i < l; ++i) {
        IntMat x(n * n, 0), y(n * n, 0);
        E(x, i, i + 1, 1);
        E(y, i + 1, i, 1);
        e.push_back(x), f.push_back(y);
      }
      break;
    case RootKind::C:
    case RootKind::D:
      // indices 0..l-1 for +eps_i, l..2l-1 for -eps_i
      n = 2 * l;
      for (std::size_t i = 0; i + 1 < l; ++i) {
        IntMat x(n * n, 0), y(n * n, 0);
        E(x, i, i + 1, 1), E(x, l + i + 1, l + i, -1);
        E(y, i + 1, i, 1), E(y, l + i, l + i + 1, -1);
        e.push_back(x), f.push_back(y);
      }
      {
        IntMat x(n * n, 0), y(n * n, 0);
        if (rs.kind() == RootKind::C) {
          E(x, l - 1, 2 * l - 1, 1);
          E(y, 2 * l - 1, l - 1, 1);
        } else {
          E(x, l - 2, 2 * l - 1, 1), E(x, l - 1, 2 * l - 2, -1);
          E(y, 2 * l - 1, l - 2, 1), E(y, 2 * l - 2, l - 1, -1);
        }
        e.push_back(x), f.push_back(y);
      }
      break;
    case RootKind::B:
      // index 0 for the zero weight, 1..l for +eps_i, l+1..2l for -eps_i
      n = 2 * l + 1;
      for (std::size_t i = 1; i < l; ++i) {
        IntMat x(n * n, 0), y(n * n, 0);
        E(x, i, i + 1, 1), E(x, l + i + 1, l + i, -1);
        E(y, i + 1, i, 1), E(y, l + i, l + i + 1, -1);
        e.push_back(x), f.push_back(y);
      }
      {
        IntMat x(n * n, 0), y(n * n, 0);
        E(x, l, 0, 2), E(x, 0, 2 * l, -1);
        E(y, 0, l, 1), E(y, 2 * l, 0, -2);
        e.push_back(x), f.push_back(y);
      }
      break;
    default:
      throw UnsupportedError("no defining representation for " + rs.name());
  }
  return n;
}

}  // namespace

const Algebra::PMap& Algebra::pmap() const {
  std::call_once(pmap_once_, [this] {
    try {
      auto pm = std::make_shared<PMap>();
      const auto kind = rs_.kind();
      const bool classical = kind == RootKind::A || kind == RootKind::B || kind == RootKind::C || kind == RootKind::D;
      if (classical) {
        if ((kind == RootKind::B || kind == RootKind::D) && p() == 2)
          throw UnsupportedError("the defining representation of " + rs_.name() +
                                 " is not faithful on Lie(Spin) in characteristic 2");
        std::vector<IntMat> eg, fg;
        const std::size_t n = defining_generators(rs_, eg, fg);
        const std::size_t l = rank(), P = rs_.num_positive();
        std::vector<IntMat> rho(dim_);
        const auto& simple = rs_.simple_roots();
        for (std::size_t i = 0; i < l; ++i) {
          rho[root_basis(simple[i])] = eg[i];
          rho[root_basis(rs_.negative(simple[i]))] = fg[i];
          rho[i] = commutator(eg[i], fg[i], n);
        }
        for (std::size_t r = 0; r < P; ++r) {
          if (rs_.root(r).height == 1) continue;
          for (std::size_t i = 0; i < l; ++i) {
            Weight rest = rs_.root(r).coords;
            for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= rs_.root(simple[i]).coords[k];
            auto b = rs_.find(rest);
            if (!b || !rs_.is_positive(*b)) continue;
            for (int sign = 0; sign < 2; ++sign) {
              const std::size_t si = sign ? rs_.negative(simple[i]) : simple[i];
              const std::size_t bb = sign ? rs_.negative(*b) : *b;
              const std::size_t target = sign ? rs_.negative(r) : r;
              auto c = commutator(rho[root_basis(si)], rho[root_basis(bb)], n);
              const std::int64_t nn = sc_(si, bb);
              for (auto& v : c) v = exact_div(v, nn, "defining representation entry");
              rho[root_basis(target)] = std::move(c);
            }
            break;
          }
        }
        for (std::size_t i = 0; i < dim_; ++i)
          for (std::size_t j = 0; j < dim_; ++j) {
            const auto lhs = commutator(rho[i], rho[j], n);
            IntMat rhs(n * n, 0);
            for (const auto& t : bracket_z(i, j))
              for (std::size_t k = 0; k < n * n; ++k) rhs[k] += t.coeff * rho[t.index][k];
            if (lhs != rhs) throw Error("defining representation of " + rs_.name() + " is not a homomorphism");
          }
        pm->route = "defining";
        pm->n = n;
        for (const auto& m : rho) {
          FpMatrix fm(n, n, p());
          for (std::size_t k = 0; k < n * n; ++k) fm(k / n, k % n) = field_.reduce(m[k]);
          pm->rho.push_back(std::move(fm));
        }
      } else {
        pm->route = "adjoint";
        pm->n = dim_;
        for (std::size_t i = 0; i < dim_; ++i) pm->rho.push_back(ad(basis(i)));
      }
      const std::size_t nn = pm->n * pm->n;
      EchelonBasis eb(dim_, p());
      std::vector<Residue> row(dim_);
      for (std::size_t q = 0; q < nn && eb.dim() < dim_; ++q) {
        for (std::size_t j = 0; j < dim_; ++j) row[j] = pm->rho[j].data()[q];
        if (eb.insert(row)) pm->pivot_positions.push_back(q);
      }
      if (eb.dim() < dim_)
        throw UnsupportedError("the " + pm->route + " representation of " + name() +
                               " is not faithful (nontrivial centre); p-map unavailable");
      FpMatrix s(dim_, dim_, p());
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) s(i, j) = pm->rho[j].data()[pm->pivot_positions[i]];
      pm->pivot_inverse = *inverse(s);
      pmap_ = std::move(pm);
    } catch (const UnsupportedError& e) {
      pmap_error_ = e.what();
    }
  });
  if (!pmap_) throw UnsupportedError(pmap_error_);
  return *pmap_;
}

std::string Algebra::p_map_route() const { return pmap().route; }

GVec Algebra::p_power(const GVec& x) const {
  check_same(x);
  const PMap& pm = pmap();
  const std::size_t n = pm.n;
  FpMatrix r(n, n, p());
  {
    std::vector<std::uint64_t> acc(n * n, 0);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!x[j]) continue;
      const auto& d = pm.rho[j].data();
      for (std::size_t k = 0; k < n * n; ++k) acc[k] += static_cast<std::uint64_t>(x[j]) * d[k];
    }
    for (std::size_t k = 0; k < n * n; ++k) r(k / n, k % n) = static_cast<Residue>(acc[k] % p());
  }
  const FpMatrix m = r.pow(p());
  std::vector<Residue> rhs(dim_);
  for (std::size_t i = 0; i < dim_; ++i) rhs[i] = m.data()[pm.pivot_positions[i]];
  GVec y(pm.pivot_inverse.apply(rhs), p());
  // the preimage must reproduce every entry, not just the pivots
  std::vector<std::uint64_t> acc(n * n, 0);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!y[j]) continue;
    const auto& d = pm.rho[j].data();
    for (std::size_t k = 0; k < n * n; ++k) acc[k] += static_cast<std::uint64_t>(y[j]) * d[k];
  }
  for (std::size_t k = 0; k < n * n; ++k)
    if (acc[k] % p() != m.data()[k]) throw Error("p-th power left the image of the representation");
  return y;
}

bool Algebra::is_p_nilpotent(const GVec& x) const {
  GVec y = x;
  for (std::size_t i = 0; i <= dim_; ++i) {
    if (y.is_zero()) return true;
    y = p_power(y);
  }
  return y.is_zero();
}

std::vector<GVec> Algebra::centre() const {
  std::vector<GVec> all;
  for (std::size_t i = 0; i < dim_; ++i) all.push_back(basis(i));
  return subalgebra_centre(all);
}

std::vector<GVec> Algebra::subalgebra_centre(const std::vector<GVec>& span) const {
  EchelonBasis eb(dim_, p());
  std::vector<GVec> basis_vecs;
  for (const auto& s : span) {
    check_same(s);
    if (eb.insert(s.coeffs())) basis_vecs.push_back(s);
  }
  const std::size_t m = basis_vecs.size();
  std::vector<std::vector<GVec>> br(m, std::vector<GVec>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      br[i][j] = bracket(basis_vecs[i], basis_vecs[j]);
      if (!eb.contains(br[i][j].coeffs()))
        throw PreconditionError("subalgebra_centre: span is not closed under the bracket");
    }
  // sum_i c_i [s_i, s_j] = 0 for every j
  FpMatrix sys(m * dim_, m, p());
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t i = 0; i < m; ++i) sys(j * dim_ + k, i) = br[i][j][k];
  const FpMatrix ker = nullspace(sys);
  std::vector<GVec> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    GVec v = zero();
    for (std::size_t i = 0; i < m; ++i) v.axpy(ker(r, i), basis_vecs[i]);
    out.push_back(std::move(v));
  }
  return out;
}

Algebra build_algebra(const RootSystem& rs, Residue p) { return Algebra(rs, p); }

EMinusCheck check_e_minus_display(const Algebra& a) {
  const auto& rs = a.root_system();
  const auto named = type_c_roots(rs);
  const std::size_t minus_beta = rs.negative(named.beta);
  EMinusCheck out;
  out.n_gamma_highest = a.sc()(named.gamma, named.highest);
  out.n_gamma_minus_beta = a.sc()(named.gamma, minus_beta);
  const std::int64_t prod = static_cast<std::int64_t>(out.n_gamma_highest) * out.n_gamma_minus_beta;
  if (prod % 2 != 0) throw Error("N_{gamma,2eps1} N_{gamma,-beta} is odd");
  out.half_product = prod / 2;
  const auto& f = a.field();
  for (Residue t = 0; t < a.p(); ++t) {
    const GVec lhs = a.adexp(named.gamma, t, a.e(named.highest));
    GVec rhs = a.e(named.highest);
    rhs.axpy(f.mul(t, f.reduce(out.n_gamma_highest)), a.e(minus_beta));
    rhs.axpy(f.mul(f.mul(t, t), f.reduce(out.half_product)), a.e(named.minus_two_eps2));
    ++out.values_checked;
    if (!(lhs == rhs)) out.mismatches.push_back(t);
  }
  return out;
}

}  // namespace liecheck
