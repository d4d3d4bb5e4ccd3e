#include "liecheck/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace liecheck {

RootKind parse_root_kind(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return RootKind::A;
      case 'B': case 'b': return RootKind::B;
      case 'C': case 'c': return RootKind::C;
      case 'D': case 'd': return RootKind::D;
      case 'E': case 'e': return RootKind::E;
      case 'F': case 'f': return RootKind::F;
      case 'G': case 'g': return RootKind::G;
      default: break;
    }
  }
  throw UsageError("unknown root system type '" + s + "'");
}

char kind_letter(RootKind k) { return "ABCDEFG"[static_cast<int>(k)]; }

const char* length_name(LengthClass c) { return c == LengthClass::long_root ? "long" : "short"; }

std::string format_weight(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ']';
  return os.str();
}

namespace {

Weight unit(std::size_t n, std::size_t k, int scale = 1) {
  Weight w(n, 0);
  w[k] = scale;
  return w;
}

Weight operator+(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Weight operator-(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Weight negated(Weight a) {
  for (auto& x : a) x = -x;
  return a;
}

void check_supported(RootKind kind, int rank) {
  bool ok = false;
  switch (kind) {
    case RootKind::A: ok = rank >= 1; break;
    case RootKind::B:
    case RootKind::C: ok = rank >= 2; break;
    case RootKind::D: ok = rank >= 3; break;
    case RootKind::E: ok = rank >= 6 && rank <= 8; break;
    case RootKind::F: ok = rank == 4; break;
    case RootKind::G: ok = rank == 2; break;
  }
  if (!ok || rank > 32)
    throw PreconditionError(std::string("unsupported root system ") + kind_letter(kind) + std::to_string(rank));
}

std::vector<Weight> simple_root_coords(RootKind kind, int l, std::size_t& ambient) {
  std::vector<Weight> s;
  const auto n = static_cast<std::size_t>(l);
  switch (kind) {
    case RootKind::A:
      ambient = n + 1;
      for (std::size_t i = 0; i < n; ++i) s.push_back(unit(ambient, i) - unit(ambient, i + 1));
      break;
    case RootKind::B:
    case RootKind::C:
    case RootKind::D:
      ambient = n;
      for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(unit(n, i) - unit(n, i + 1));
      if (kind == RootKind::B) s.push_back(unit(n, n - 1));
      if (kind == RootKind::C) s.push_back(unit(n, n - 1, 2));
      if (kind == RootKind::D) s.push_back(unit(n, n - 2) + unit(n, n - 1));
      break;
    case RootKind::E: {
      ambient = 8;
      s.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      s.push_back(unit(8, 0, 2) + unit(8, 1, 2));
      for (std::size_t i = 0; i + 2 < n; ++i) s.push_back(unit(8, i + 1, 2) - unit(8, i, 2));
      break;
    }
    case RootKind::F:
      ambient = 4;
      s = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    case RootKind::G:
      ambient = 3;
      s = {{1, -1, 0}, {-2, 1, 1}};
      break;
  }
  return s;
}

}  // namespace

RootSystem::RootSystem(RootKind kind, int rank) : kind_(kind), rank_(rank) {
  check_supported(kind, rank);
  auto simple = simple_root_coords(kind, rank, ambient_);
  generate(simple);
}

std::string RootSystem::name() const { return std::string(1, kind_letter(kind_)) + std::to_string(rank_); }

int RootSystem::inner(const Weight& a, const Weight& b) const {
  if (a.size() != ambient_ || b.size() != ambient_) throw DimensionMismatch("weight has wrong ambient dimension");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

int RootSystem::pairing(const Weight& d, const Weight& a) const {
  const int aa = inner(a, a);
  if (aa == 0) throw PreconditionError("pairing against the zero weight");
  const int num = 2 * inner(d, a);
  if (num % aa != 0)
    throw PreconditionError("pairing " + format_weight(d) + " with " + format_weight(a) + " is not integral");
  return num / aa;
}

void RootSystem::generate(const std::vector<Weight>& simple_coords) {
  const std::size_t l = simple_coords.size();
  cartan_.assign(l, std::vector<int>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) cartan_[i][j] = pairing(simple_coords[i], simple_coords[j]);

  // Positive roots by height via root strings: beta + alpha_i is a root
  // iff p - <beta, alpha_i^vee> > 0, p the length of the downward string.
  std::map<std::vector<int>, std::size_t> seen;  // simple coefficients
  std::vector<std::vector<int>> layer;
  std::vector<std::vector<int>> all;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> c(l, 0);
    c[i] = 1;
    layer.push_back(c);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : layer) {
      if (seen.count(c)) continue;
      seen.emplace(c, all.size());
      all.push_back(c);
    }
    for (const auto& c : layer) {
      for (std::size_t i = 0; i < l; ++i) {
        int p = 0;
        auto down = c;
        while (true) {
          --down[i];
          if (!seen.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (std::size_t j = 0; j < l; ++j) pair += c[j] * cartan_[j][i];
        if (p - pair > 0) {
          auto up = c;
          ++up[i];
          if (!seen.count(up) && std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }

  std::vector<Root> pos;
  for (const auto& c : all) {
    Root r;
    r.simple_coeffs = c;
    r.coords.assign(ambient_, 0);
    r.height = 0;
    for (std::size_t i = 0; i < l; ++i) {
      r.height += c[i];
      for (std::size_t k = 0; k < ambient_; ++k) r.coords[k] += c[i] * simple_coords[i][k];
    }
    pos.push_back(std::move(r));
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords > b.coords;
  });
  long_norm_ = 0;
  for (const auto& r : pos) long_norm_ = std::max(long_norm_, inner(r.coords, r.coords));
  for (auto& r : pos) r.length = inner(r.coords, r.coords) == long_norm_ ? LengthClass::long_root : LengthClass::short_root;

  roots_ = pos;
  for (const auto& r : pos) {
    Root n = r;
    n.coords = negated(r.coords);
    for (auto& x : n.simple_coeffs) x = -x;
    n.height = -r.height;
    roots_.push_back(std::move(n));
  }

  index_.clear();
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i].coords, i);

  simple_.clear();
  for (std::size_t i = 0; i < l; ++i) simple_.push_back(index_of(simple_coords[i]));
  highest_ = num_positive() - 1;
  for (std::size_t i = 0; i < num_positive(); ++i)
    if (roots_[i].height > roots_[highest_].height) highest_ = i;

  const std::size_t n = roots_.size();
  sum_table_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (auto s = find(roots_[i].coords + roots_[j].coords)) sum_table_[i * n + j] = static_cast<int>(*s);
}

std::optional<std::size_t> RootSystem::find(const Weight& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::index_of(const Weight& w) const {
  if (auto i = find(w)) return *i;
  throw PreconditionError(format_weight(w) + " is not a root of " + name());
}

std::optional<std::size_t> RootSystem::sum(std::size_t i, std::size_t j) const {
  const int s = sum_table_[i * roots_.size() + j];
  if (s < 0) return std::nullopt;
  return static_cast<std::size_t>(s);
}

std::size_t RootSystem::count_long() const {
  return static_cast<std::size_t>(std::count_if(roots_.begin(), roots_.end(),
                                                [](const Root& r) { return r.length == LengthClass::long_root; }));
}

int RootSystem::string_down(std::size_t i, std::size_t j) const {
  int r = 0;
  Weight w = roots_[j].coords;
  while (true) {
    w = w - roots_[i].coords;
    if (!find(w)) break;
    ++r;
  }
  return r;
}

Weight RootSystem::epsilon(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > ambient_) throw PreconditionError("epsilon index out of range");
  const int scale = (kind_ == RootKind::E || kind_ == RootKind::F) ? 2 : 1;
  return unit(ambient_, static_cast<std::size_t>(k - 1), scale);
}

RootSystem build_root_system(RootKind kind, int rank) { return RootSystem(kind, rank); }

std::size_t expected_root_count(RootKind kind, int l) {
  const auto n = static_cast<std::size_t>(l);
  switch (kind) {
    case RootKind::A: return n * (n + 1);
    case RootKind::B:
    case RootKind::C: return 2 * n * n;
    case RootKind::D: return 2 * n * (n - 1);
    case RootKind::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case RootKind::F: return 48;
    case RootKind::G: return 12;
  }
  return 0;
}

std::size_t expected_long_root_count(RootKind kind, int l) {
  const auto n = static_cast<std::size_t>(l);
  switch (kind) {
    case RootKind::B: return 2 * n * (n - 1);
    case RootKind::C: return 2 * n;
    case RootKind::F: return 24;
    case RootKind::G: return 6;
    default: return expected_root_count(kind, l);
  }
}

TypeCRoots type_c_roots(const RootSystem& rs) {
  if (rs.kind() != RootKind::C) throw PreconditionError("named type C roots requested for " + rs.name());
  const Weight e1 = rs.epsilon(1), e2 = rs.epsilon(2);
  return TypeCRoots{rs.index_of(e1 + e1), rs.index_of(e2 - e1), rs.index_of(negated(e1 + e2)),
                    rs.index_of(negated(e2 + e2))};
}

std::vector<std::size_t> special_set_R2minus(const RootSystem& rs) {
  if (rs.kind() != RootKind::C) throw PreconditionError("R2- is defined for type C only, got " + rs.name());
  const Weight e1 = rs.epsilon(1), e2 = rs.epsilon(2);
  std::vector<std::size_t> out{rs.index_of(negated(e2 + e2)), rs.index_of(e1 - e2)};
  for (int j = 3; j <= rs.rank(); ++j) {
    out.push_back(rs.index_of(rs.epsilon(j) - e2));
    out.push_back(rs.index_of(negated(e2 + rs.epsilon(j))));
  }
  return out;
}

std::size_t highest_root_neighbour(const RootSystem& rs) {
  const std::size_t top = rs.highest_root();
  for (const std::size_t s : rs.simple_roots())
    if (s != top && rs.pairing(top, s) != 0) return s;
  throw PreconditionError(rs.name() + " has no simple root adjacent to the highest root");
}

}  // namespace liecheck
