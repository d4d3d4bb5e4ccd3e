#include "liecheck/umod.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace liecheck {

Rep::Rep(RootKind kind, int rank, Residue p, std::vector<FpMatrix> action, Functional chi)
    : kind_(kind), rank_(rank), p_(p), dim_(0), action_(std::move(action)), chi_(std::move(chi)) {
  if (action_.empty()) throw PreconditionError("representation without basis action");
  dim_ = action_.front().rows();
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("representation matrices differ in size");
    if (m.modulus() != p_) throw ModulusMismatch("representation matrix over the wrong field");
  }
  if (chi_.values().size() != action_.size()) throw DimensionMismatch("p-character length");
  if (chi_.modulus() != p_) throw ModulusMismatch("p-character over the wrong field");
}

FpMatrix Rep::act(const GVec& x) const {
  if (x.size() != action_.size()) throw DimensionMismatch("element and representation differ in dimension");
  if (x.modulus() != p_) throw ModulusMismatch("element and representation over different fields");
  std::vector<std::uint64_t> acc(dim_ * dim_, 0);
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (!x[i]) continue;
    const auto& d = action_[i].data();
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += static_cast<std::uint64_t>(x[i]) * d[k];
  }
  FpMatrix out(dim_, dim_, p_);
  for (std::size_t k = 0; k < acc.size(); ++k) out(k / dim_, k % dim_) = static_cast<Residue>(acc[k] % p_);
  return out;
}

RepCheck verify_rep(const Algebra& a, const Rep& m) {
  RepCheck out;
  if (m.actions().size() != a.dim() || m.p() != a.p()) throw DimensionMismatch("representation does not match the algebra");
  const auto I = FpMatrix::identity(m.dim(), m.p());
  for (std::size_t i = 0; i < a.dim() && out.bracket_ok; ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const auto& x = m.action(i);
      const auto& y = m.action(j);
      if (!(x * y - y * x == m.act(a.bracket(a.basis(i), a.basis(j))))) {
        out.bracket_ok = false;
        out.first_failure = "bracket " + a.basis_label(i) + ", " + a.basis_label(j);
        break;
      }
    }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const GVec b = a.basis(i);
    const Residue c = a.field().pow(m.chi()(b), a.p());
    if (!(m.action(i).pow(a.p()) - m.act(a.p_power(b)) == I.scaled(c))) {
      out.p_character_ok = false;
      if (out.first_failure.empty()) out.first_failure = "p-character at " + a.basis_label(i);
      break;
    }
  }
  return out;
}

Rep baby_verma(const Algebra& a, const Functional& chi, const std::vector<Residue>& lambda) {
  const auto& rs = a.root_system();
  const std::size_t l = a.rank(), P = rs.num_positive(), n = a.dim();
  const Residue p = a.p();
  const auto& F = a.field();
  if (chi.modulus() != p || chi.values().size() != n) throw DimensionMismatch("p-character does not match the algebra");
  if (lambda.size() != l) throw PreconditionError("lambda needs one value per Cartan basis element");
  for (auto v : lambda)
    if (v >= p) throw PreconditionError("lambda values must be residues mod p");
  for (std::size_t i = 0; i < l; ++i)
    if (chi.values()[i]) throw PreconditionError("baby_verma: chi does not vanish on the torus");
  for (std::size_t r = 0; r < P; ++r)
    if (chi.values()[a.root_basis(r)]) throw PreconditionError("baby_verma: chi does not vanish on n_+");
  // lambda(h)^p = lambda(h^[p]) holds for residues since h_i^[p] = h_i
  for (std::size_t i = 0; i < l; ++i)
    if (!(a.p_power(a.h(i)) == a.h(i))) throw PreconditionError("Cartan basis element is not toral");
  for (std::size_t j = 0; j < P; ++j)
    if (!a.p_power(a.e(rs.negative(j))).is_zero())
      throw UnsupportedError("baby_verma: negative root vector with nonzero p-th power");

  // monomial index = sum_j a_j p^j over negative roots j = 0..P-1
  std::size_t D = 1;
  std::vector<std::size_t> weight(P);
  for (std::size_t j = 0; j < P; ++j) {
    weight[j] = D;
    if (D > 1'000'000 / p) throw ResourceError("baby Verma module too large");
    D *= p;
  }
  auto exponent = [&](std::size_t m, std::size_t j) { return (m / weight[j]) % p; };
  auto leading = [&](std::size_t m) {
    for (std::size_t j = 0; j < P; ++j)
      if (exponent(m, j)) return j;
    return P;
  };
  auto neg_basis = [&](std::size_t j) { return a.root_basis(rs.negative(j)); };

  using Col = std::vector<Residue>;
  std::vector<Col> fmemo(P * D);
  std::vector<char> fdone(P * D, 0);
  auto axpy = [&](Col& out, Residue c, const Col& v) {
    if (!c) return;
    for (std::size_t k = 0; k < D; ++k)
      if (v[k]) out[k] = F.add(out[k], F.mul(c, v[k]));
  };

  // f_j . m
  std::function<const Col&(std::size_t, std::size_t)> fcol = [&](std::size_t j, std::size_t m) -> const Col& {
    const std::size_t key = j * D + m;
    if (fdone[key]) return fmemo[key];
    Col out(D, 0);
    const std::size_t k = leading(m);
    if (j < k) {
      out[m + weight[j]] = 1;
    } else if (j == k) {
      const std::size_t e = exponent(m, k);
      if (e + 1 < p) out[m + weight[k]] = 1;
      else out[m - e * weight[k]] = F.pow(chi.values()[neg_basis(j)], p);
    } else {
      const std::size_t rest = m - weight[k];
      const Col inner = fcol(j, rest);
      for (std::size_t m2 = 0; m2 < D; ++m2)
        if (inner[m2]) axpy(out, inner[m2], fcol(k, m2));
      for (const auto& t : a.bracket_basis(neg_basis(j), neg_basis(k))) {
        const auto r = a.basis_root(t.index);
        if (!r || rs.is_positive(*r)) throw Error("bracket of negative root vectors left n_-");
        axpy(out, t.coeff, fcol(*r - P, rest));
      }
    }
    fmemo[key] = std::move(out);
    fdone[key] = 1;
    return fmemo[key];
  };

  std::vector<Col> gmemo(n * D);
  std::vector<char> gdone(n * D, 0);
  // b . m for any basis element b
  std::function<const Col&(std::size_t, std::size_t)> act = [&](std::size_t b, std::size_t m) -> const Col& {
    if (auto r = a.basis_root(b); r && !rs.is_positive(*r)) return fcol(*r - P, m);
    const std::size_t key = b * D + m;
    if (gdone[key]) return gmemo[key];
    Col out(D, 0);
    const std::size_t k = leading(m);
    if (k == P) {
      if (b < l) out[m] = lambda[b];
    } else {
      const std::size_t rest = m - weight[k];
      const Col inner = act(b, rest);
      for (std::size_t m2 = 0; m2 < D; ++m2)
        if (inner[m2]) axpy(out, inner[m2], fcol(k, m2));
      for (const auto& t : a.bracket_basis(b, neg_basis(k))) axpy(out, t.coeff, act(t.index, rest));
    }
    gmemo[key] = std::move(out);
    gdone[key] = 1;
    return gmemo[key];
  };

  std::vector<FpMatrix> mats;
  mats.reserve(n);
  for (std::size_t b = 0; b < n; ++b) {
    FpMatrix mat(D, D, p);
    for (std::size_t m = 0; m < D; ++m) {
      const Col& c = act(b, m);
      for (std::size_t r = 0; r < D; ++r) mat(r, m) = c[r];
    }
    mats.push_back(std::move(mat));
  }
  Rep rep(rs.kind(), rs.rank(), p, std::move(mats), chi);
  const auto chk = verify_rep(a, rep);
  if (!chk.ok()) throw Error("baby Verma module failed its self-check: " + chk.first_failure);
  return rep;
}

namespace {

FpMatrix shifted(const Rep& m, const GVec& z, Residue c) {
  FpMatrix A = m.act(z);
  const PrimeField F(m.p());
  for (std::size_t i = 0; i < m.dim(); ++i) A(i, i) = F.sub(A(i, i), c);
  return A;
}

void require_restricted_nilpotent(const Algebra& a, const GVec& z) {
  if (!a.p_power(z).is_zero()) throw UnsupportedError("freeness test needs z^[p] = 0");
}

}  // namespace

FreenessResult freeness_test(const Algebra& a, const Rep& m, const GVec& z) {
  a.check_same(z);
  require_restricted_nilpotent(a, z);
  FreenessResult out;
  out.eigenvalue = m.chi()(z);
  const FpMatrix A = shifted(m, z, out.eigenvalue);
  const std::size_t D = m.dim();
  out.profile.ranks.push_back(D);
  FpMatrix pw = FpMatrix::identity(D, m.p());
  for (Residue k = 1; k <= m.p(); ++k) {
    pw = pw * A;
    out.profile.ranks.push_back(rank(pw));
  }
  const auto& r = out.profile.ranks;
  std::vector<std::size_t> at_least(m.p() + 2, 0);
  for (Residue k = 1; k <= m.p(); ++k) at_least[k] = r[k - 1] - r[k];
  for (Residue k = 1; k <= m.p(); ++k) out.profile.blocks.push_back(at_least[k] - at_least[k + 1]);
  out.rank_top = r[m.p() - 1];
  out.free = D % m.p() == 0 && out.rank_top == D / m.p();
  return out;
}

bool support_point(const Algebra& a, const Rep& m, const GVec& z) {
  a.check_same(z);
  if (!a.p_power(z).is_zero()) return false;
  return !freeness_test(a, m, z).free;
}

NullconePoints nullcone_enumerate(const Algebra& a, const NullconeOptions& opt) {
  NullconePoints out;
  out.seed = opt.seed;
  const std::size_t n = a.dim();
  const Residue p = a.p();
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  if (total <= static_cast<long double>(opt.budget)) {
    out.mode = "exhaustive";
    std::vector<Residue> c(n, 0);
    while (true) {
      ++out.candidates;
      GVec z(c, p);
      if (a.p_power(z).is_zero()) out.points.push_back(std::move(z));
      std::size_t i = 0;
      while (i < n && ++c[i] == p) c[i++] = 0;
      if (i == n) break;
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
  }
  if (!opt.allow_sampling)
    throw ResourceError("nullcone of " + a.name() + " has " + std::to_string(static_cast<double>(total)) +
                        " candidates, above the budget of " + std::to_string(opt.budget));
  out.mode = "sampled";
  const auto& rs = a.root_system();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Residue> coeff(0, p - 1);
  std::uniform_int_distribution<std::size_t> pick_root(0, rs.size() - 1);
  std::set<GVec> found;
  while (found.size() < opt.samples && out.candidates < opt.max_draws) {
    GVec z = a.zero();
    if (out.candidates % 2 == 0) {
      for (std::size_t i = 0; i < n; ++i) z.set(i, coeff(rng));
    } else {
      for (std::size_t r = 0; r < rs.num_positive(); ++r) z.set(a.root_basis(r), coeff(rng));
      for (int k = 0; k < 4; ++k) {
        const std::size_t r = pick_root(rng);
        z = a.adexp(r, coeff(rng), z);
      }
    }
    ++out.candidates;
    if (a.p_power(z).is_zero()) found.insert(std::move(z));
  }
  out.points.assign(found.begin(), found.end());
  return out;
}

SupportInclusionReport support_inclusion_check(const Algebra& a, const Rep& m, const NullconePoints& zs) {
  SupportInclusionReport out;
  out.candidates = zs.candidates;
  const std::size_t n = a.dim();
  // C(j, i) = chi([b_j, b_i])
  std::vector<Residue> C(n * n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t acc = 0;
      for (const auto& t : a.bracket_basis(j, i)) acc += static_cast<std::uint64_t>(t.coeff) * m.chi().values()[t.index];
      C[j * n + i] = static_cast<Residue>(acc % a.p());
    }
  const Residue p = a.p();
  const std::size_t D = m.dim();
  for (const auto& z : zs.points) {
    if (!a.p_power(z).is_zero()) continue;
    ++out.nullcone_points;
    bool nonvanishing = false;
    for (std::size_t i = 0; i < n && !nonvanishing; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += static_cast<std::uint64_t>(z[j]) * C[j * n + i];
      nonvanishing = acc % p != 0;
    }
    const FpMatrix A = shifted(m, z, m.chi()(z));
    const bool free = D % p == 0 && rank(A.pow(p - 1)) == D / p;
    if (!free) ++out.support_points;
    if (nonvanishing) {
      ++out.chi_nonvanishing;
      if (free) ++out.free_when_nonvanishing;
      else out.counterexamples.push_back(z);
    }
  }
  return out;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

InvertibilityReport invertibility_implies_freeness_check(const Algebra& a, const Rep& m, const GVec& x,
                                                         const GVec& y, const GVec& target) {
  InvertibilityReport out;
  out.hypothesis = rank(m.act(a.bracket(x, y))) == m.dim();
  if (!out.hypothesis) return out;
  out.freeness = freeness_test(a, m, target);
  out.status = out.freeness.free ? CheckStatus::pass : CheckStatus::fail;
  return out;
}

EigenvalueReport eigenvalue_check(const Algebra& a, const Rep& m, const GVec& z) {
  a.check_same(z);
  if (!a.p_power(z).is_zero()) throw PreconditionError("eigenvalue_check needs z^[p] = 0");
  EigenvalueReport out;
  out.chi_z = m.chi()(z);
  out.single_eigenvalue = shifted(m, z, out.chi_z).pow(m.dim()).is_zero();
  return out;
}

P2Report p2_identity_check(const Algebra& a, const InvForm& form, const NullconePoints& zs, const ConePoints& e) {
  if (a.p() != 2) throw PreconditionError("p2_identity_check needs p = 2");
  if (a.root_system().kind() != RootKind::C) throw PreconditionError("p2_identity_check needs type C");
  P2Report out;
  out.cone_points = e.size();
  out.nullcone_points = zs.points.size();
  for (const auto& ep : e.points()) {
    const FpMatrix ad = a.ad(ep);
    if (!(ad * ad).is_zero()) ++out.ad_square_failures;
  }
  for (const auto& z : zs.points)
    for (const auto& ep : e.points()) {
      ++out.pairs;
      const GVec w = a.bracket(z, ep);
      if (!(a.p_power(w) == w.scaled(form(z, ep)))) {
        ++out.p_power_failures;
        if (!out.first_failure) out.first_failure = std::make_pair(z, ep);
      }
    }
  return out;
}

void write_rep(std::ostream& os, const Rep& m) {
  os << "REP dim=" << m.dim() << " p=" << m.p() << " type=" << kind_letter(m.kind()) << " rank=" << m.rank() << '\n';
  os << "CHI";
  for (auto v : m.chi().values()) os << ' ' << v;
  os << '\n';
  for (std::size_t k = 0; k < m.actions().size(); ++k) {
    os << "MATRIX " << k << '\n';
    const auto& mat = m.action(k);
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      for (std::size_t c = 0; c < mat.cols(); ++c) os << (c ? " " : "") << mat(r, c);
      os << '\n';
    }
  }
}

namespace {

std::size_t header_field(const std::string& line, const std::string& name) {
  const auto pos = line.find(name + "=");
  if (pos == std::string::npos) throw UsageError("rep header lacks " + name);
  return std::stoul(line.substr(pos + name.size() + 1));
}

}  // namespace

Rep read_rep(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("REP ", 0) != 0) throw UsageError("rep text must start with REP");
  const std::size_t D = header_field(line, "dim");
  const auto p = static_cast<Residue>(header_field(line, "p"));
  const auto rank = static_cast<int>(header_field(line, "rank"));
  const auto tpos = line.find("type=");
  if (tpos == std::string::npos) throw UsageError("rep header lacks type");
  const RootKind kind = parse_root_kind(line.substr(tpos + 5, 1));
  const PrimeField F(p);

  if (!std::getline(is, line) || line.rfind("CHI", 0) != 0) throw UsageError("rep text lacks a CHI line");
  std::istringstream cs(line.substr(3));
  std::vector<Residue> chi;
  std::int64_t v;
  while (cs >> v) chi.push_back(F.reduce(v));

  std::vector<FpMatrix> mats;
  for (std::size_t k = 0; k < chi.size(); ++k) {
    if (!std::getline(is, line) || line != "MATRIX " + std::to_string(k))
      throw UsageError("expected MATRIX " + std::to_string(k));
    FpMatrix mat(D, D, p);
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c) {
        if (!(is >> v)) throw UsageError("truncated matrix " + std::to_string(k));
        mat(r, c) = F.reduce(v);
      }
    std::getline(is, line);
    mats.push_back(std::move(mat));
  }
  return Rep(kind, rank, p, std::move(mats), Functional(std::move(chi), p));
}

}  // namespace liecheck
