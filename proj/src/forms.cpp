#include "liecheck/forms.hpp"

#include <sstream>
#include <unordered_set>

namespace liecheck {

InvForm::InvForm(const Algebra& a) : p_(a.p()), gram_(a.dim(), a.dim(), a.p()) {
  const auto& rs = a.root_system();
  const std::int64_t L = rs.long_norm();
  const std::size_t l = a.rank();
  const auto& f = a.field();
  const auto& simple = rs.simple_roots();
  // <h_i, h_j> = 2L (a_i, a_j) / ((a_i, a_i)(a_j, a_j))
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const std::int64_t num = 2 * L * rs.inner(simple[i], simple[j]);
      const std::int64_t den = static_cast<std::int64_t>(rs.norm(simple[i])) * rs.norm(simple[j]);
      if (num % den != 0) throw Error("non-integral Cartan form entry");
      gram_(i, j) = f.reduce(num / den);
    }
  // <e_a, e_-a> = L / (a, a)
  for (std::size_t r = 0; r < rs.size(); ++r)
    gram_(a.root_basis(r), a.root_basis(rs.negative(r))) = f.reduce(L / rs.norm(r));

  const FpMatrix ns = nullspace(gram_);
  for (std::size_t r = 0; r < ns.rows(); ++r)
    radical_.emplace_back(std::vector<Residue>(ns.row(r).begin(), ns.row(r).end()), p_);
  if (radical_.empty()) inverse_ = inverse(gram_);
}

Residue InvForm::operator()(const GVec& x, const GVec& y) const {
  if (x.modulus() != p_ || y.modulus() != p_) throw ModulusMismatch("form evaluated across moduli");
  if (x.size() != gram_.rows() || y.size() != gram_.rows()) throw DimensionMismatch("form argument length");
  std::uint64_t acc = 0;
  const std::size_t n = gram_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < n; ++j) row += static_cast<std::uint64_t>(gram_(i, j)) * y[j];
    acc += row % p_ * x[i];
    acc %= p_;
  }
  return static_cast<Residue>(acc);
}

GVec InvForm::dual(const GVec& x) const {
  if (x.modulus() != p_) throw ModulusMismatch("form evaluated across moduli");
  return GVec(gram_.transpose().apply(x.coeffs()), p_);
}

GVec InvForm::represent(std::span<const Residue> values) const {
  if (!inverse_) throw PreconditionError("the invariant form is degenerate; functional has no unique representative");
  // G symmetric: G u = values
  return GVec(inverse_->apply(values), p_);
}

InvForm build_form(const Algebra& a) { return InvForm(a); }

Functional::Functional(std::vector<Residue> values, Residue p) : values_(std::move(values)), p_(p) {
  for (auto v : values_)
    if (v >= p_) throw ModulusMismatch("functional value not reduced");
}

Functional Functional::from_element(const InvForm& form, const GVec& u) {
  auto d = form.dual(u);
  Functional f(std::vector<Residue>(d.coeffs().begin(), d.coeffs().end()), u.modulus());
  f.element_ = u;
  return f;
}

Functional Functional::zero(const Algebra& a) { return Functional(std::vector<Residue>(a.dim(), 0), a.p()); }

Residue Functional::operator()(const GVec& x) const {
  if (x.modulus() != p_) throw ModulusMismatch("functional evaluated across moduli");
  if (x.size() != values_.size()) throw DimensionMismatch("functional argument length");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) acc += static_cast<std::uint64_t>(values_[i]) * x[i];
  return static_cast<Residue>(acc % p_);
}

bool Functional::is_zero() const {
  for (auto v : values_)
    if (v) return false;
  return true;
}

std::string Functional::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << ')';
  return os.str();
}

Residue b_form(const Algebra& a, const InvForm& form, const Functional& f, const GVec& x, const GVec& y) {
  const auto& F = a.field();
  const Residue fxy = f(a.bracket(x, y));
  const Residue second = F.mul(F.mul(4 % a.p(), F.mul(f(x), f(y))), form(x, y));
  return F.add(F.mul(fxy, fxy), second);
}

std::vector<GVec> coadjoint_centralizer(const Algebra& a, const Functional& chi) {
  const std::size_t n = a.dim();
  FpMatrix m(n, n, a.p());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t acc = 0;
      for (const auto& t : a.bracket_basis(j, i)) acc += static_cast<std::uint64_t>(t.coeff) * chi.values()[t.index];
      m(i, j) = static_cast<Residue>(acc % a.p());
    }
  const FpMatrix ns = nullspace(m);
  std::vector<GVec> out;
  for (std::size_t r = 0; r < ns.rows(); ++r)
    out.emplace_back(std::vector<Residue>(ns.row(r).begin(), ns.row(r).end()), a.p());
  return out;
}

bool annihilates_bracket(const Algebra& a, const Functional& chi, const GVec& x) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (chi(a.bracket(x, a.basis(i))) != 0) return false;
  return true;
}

WitnessResult find_witness_e(const Algebra& a, const InvForm& form, const Functional& f, const GVec& x,
                             std::span<const GVec> points) {
  a.check_same(x);
  if (!a.is_p_nilpotent(x)) throw PreconditionError("find_witness_e: x is not p-nilpotent");
  if (annihilates_bracket(a, f, x)) throw PreconditionError("find_witness_e: f([x, g]) = 0");
  if (a.root_system().kind() == RootKind::C && a.p() != 2) {
    const GVec u = form.represent(f.values());
    std::unordered_set<std::string> keys;
    for (const auto& e : points) keys.insert(e.key());
    if (keys.count(u.key()))
      throw PreconditionError("find_witness_e: f = <u, .> with u a long root element (excluded case)");
  }
  WitnessResult out;
  for (const auto& e : points) {
    ++out.points_checked;
    if (f(e) == 0 && f(a.bracket(x, e)) != 0) {
      out.status = WitnessStatus::found;
      out.witness = e;
      return out;
    }
  }
  return out;
}

const std::vector<Residue>& escalation_primes() {
  static const std::vector<Residue> primes{5, 7, 11, 13};
  return primes;
}

std::optional<Residue> next_escalation_prime(Residue p) {
  for (auto q : escalation_primes())
    if (q > p) return q;
  return std::nullopt;
}

}  // namespace liecheck
