#include "esakia/lattice.hpp"

#include <string>
#include <unordered_map>

#include "esakia/error.hpp"
#include "esakia/topology.hpp"

namespace esakia {

Table FiniteLattice::meet_table() const {
  Table t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = meet(a, b);
  return t;
}

Table FiniteLattice::join_table() const {
  Table t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = join(a, b);
  return t;
}

std::string LatticeViolation::describe() const {
  std::string out = axiom;
  if (a >= 0) {
    out += " at (" + std::to_string(a);
    if (b >= 0) out += "," + std::to_string(b);
    if (c >= 0) out += "," + std::to_string(c);
    out += ")";
  }
  return out;
}

std::optional<LatticeViolation> find_lattice_violation(const Table& meet, const Table& join) {
  const int n = static_cast<int>(meet.size());
  if (n == 0 || join.size() != meet.size()) return LatticeViolation{"shape"};
  for (int a = 0; a < n; ++a) {
    const auto& mr = meet[static_cast<std::size_t>(a)];
    const auto& jr = join[static_cast<std::size_t>(a)];
    if (static_cast<int>(mr.size()) != n || static_cast<int>(jr.size()) != n) {
      return LatticeViolation{"shape", a};
    }
    for (int b = 0; b < n; ++b) {
      const int m = mr[static_cast<std::size_t>(b)];
      const int j = jr[static_cast<std::size_t>(b)];
      if (m < 0 || m >= n || j < 0 || j >= n) return LatticeViolation{"range", a, b};
    }
  }
  auto M = [&](int a, int b) { return meet[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  auto J = [&](int a, int b) { return join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  for (int a = 0; a < n; ++a) {
    if (M(a, a) != a) return LatticeViolation{"idempotence(meet)", a};
    if (J(a, a) != a) return LatticeViolation{"idempotence(join)", a};
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (M(a, b) != M(b, a)) return LatticeViolation{"commutativity(meet)", a, b};
      if (J(a, b) != J(b, a)) return LatticeViolation{"commutativity(join)", a, b};
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (M(M(a, b), c) != M(a, M(b, c))) return LatticeViolation{"associativity(meet)", a, b, c};
        if (J(J(a, b), c) != J(a, J(b, c))) return LatticeViolation{"associativity(join)", a, b, c};
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (M(a, J(a, b)) != a) return LatticeViolation{"absorption(meet)", a, b};
      if (J(a, M(a, b)) != a) return LatticeViolation{"absorption(join)", a, b};
    }
  int bottom = 0;
  int top = 0;
  for (int a = 1; a < n; ++a) {
    bottom = M(bottom, a);
    top = J(top, a);
  }
  for (int a = 0; a < n; ++a) {
    if (J(bottom, a) != a) return LatticeViolation{"bounds(bottom)", a};
    if (M(top, a) != a) return LatticeViolation{"bounds(top)", a};
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (M(a, J(b, c)) != J(M(a, b), M(a, c))) return LatticeViolation{"distributivity", a, b, c};
  return std::nullopt;
}

FiniteLattice validate_lattice(const Table& meet, const Table& join, std::vector<std::string> labels) {
  const int n = static_cast<int>(meet.size());
  if (n > FiniteLattice::kMaxElements) {
    throw Error(ErrorCode::SizeCap, "lattice with " + std::to_string(n) + " elements exceeds " +
                                        std::to_string(FiniteLattice::kMaxElements));
  }
  if (auto v = find_lattice_violation(meet, join)) {
    throw Error(v->distributivity() ? ErrorCode::NotDistributive : ErrorCode::NotALattice,
                v->describe());
  }
  if (labels.empty()) {
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::NotALattice, "label count does not match table size");
  }
  FiniteLattice l;
  l.n_ = n;
  l.labels_ = std::move(labels);
  l.meet_.reserve(static_cast<std::size_t>(n * n));
  l.join_.reserve(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      l.meet_.push_back(meet[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
      l.join_.push_back(join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    }
  for (int a = 1; a < n; ++a) {
    l.bottom_ = l.meet(l.bottom_, a);
    l.top_ = l.join(l.top_, a);
  }
  return l;
}

// ---------------------------------------------------------------------------

HeytingAlgebra::HeytingAlgebra(FiniteLattice lattice, std::vector<int> implies)
    : lattice_(std::move(lattice)), implies_(std::move(implies)) {}

Table HeytingAlgebra::implies_table() const {
  const auto n = static_cast<std::size_t>(size());
  Table t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = implies(static_cast<int>(a), static_cast<int>(b));
  return t;
}

HeytingAlgebra heyting_complete(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<int> implies(static_cast<std::size_t>(n * n));
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      // The join of all candidates is the maximum exactly when it is itself a candidate.
      int candidate_join = l.bottom();
      for (int a = 0; a < n; ++a)
        if (l.leq(l.meet(a, b), c)) candidate_join = l.join(candidate_join, a);
      if (!l.leq(l.meet(candidate_join, b), c)) {
        throw Error(ErrorCode::NoMaximum, "{a : a ^ " + std::to_string(b) + " <= " +
                                              std::to_string(c) + "} has no maximum");
      }
      implies[static_cast<std::size_t>(b * n + c)] = candidate_join;
    }
  }
  return HeytingAlgebra(l, std::move(implies));
}

std::optional<std::array<int, 3>> residuation_violation(const HeytingAlgebra& h) {
  const FiniteLattice& l = h.lattice();
  const int n = h.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (l.leq(l.meet(a, b), c) != l.leq(a, h.implies(b, c))) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

GodelVerdict is_godel(const HeytingAlgebra& h) {
  const FiniteLattice& l = h.lattice();
  for (int x = 0; x < h.size(); ++x)
    for (int y = 0; y < h.size(); ++y)
      if (l.join(h.implies(x, y), h.implies(y, x)) != l.top()) return {false, std::pair{x, y}};
  return {};
}

// ---------------------------------------------------------------------------

bool is_prime_filter(const FiniteLattice& l, const PointSet& f) {
  const int n = l.size();
  if (f.empty() || f.contains(l.bottom()) || !f.subset_of(PointSet::full(n))) return false;
  bool ok = true;
  f.for_each([&](int a) {
    for (int b = 0; b < n && ok; ++b) {
      if (l.leq(a, b) && !f.contains(b)) ok = false;             // upset
      if (f.contains(b) && !f.contains(l.meet(a, b))) ok = false;  // meet-closed
    }
  });
  if (!ok) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (f.contains(l.join(a, b)) && !f.contains(a) && !f.contains(b)) return false;
  return true;
}

std::vector<PointSet> prime_filters(const FiniteLattice& l) {
  std::vector<PointSet> out;
  for (int a = 0; a < l.size(); ++a) {
    if (a == l.bottom()) continue;
    PointSet f;
    for (int b = 0; b < l.size(); ++b)
      if (l.leq(a, b)) f.insert(b);
    if (is_prime_filter(l, f)) out.push_back(f);
  }
  sort_canonical(out);
  return out;
}

FinitePoset spectrum(const FiniteLattice& l) {
  const std::vector<PointSet> filters = prime_filters(l);
  std::vector<PointSet> ups(filters.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    for (std::size_t j = 0; j < filters.size(); ++j)
      if (filters[i].subset_of(filters[j])) ups[i].insert(static_cast<Element>(j));
    // A prime filter of a finite lattice is ↑a for its least member a.
    int generator = -1;
    filters[i].for_each([&](int a) {
      if (generator < 0 || l.leq(a, generator)) generator = a;
    });
    labels.push_back("^" + l.label(generator));
  }
  return FinitePoset::from_upsets(std::move(ups), std::move(labels));
}

PointSet gamma(const std::vector<PointSet>& filters, int a) {
  PointSet out;
  for (std::size_t i = 0; i < filters.size(); ++i)
    if (filters[i].contains(a)) out.insert(static_cast<Element>(i));
  return out;
}

PointSet gamma(const FiniteLattice& l, int a) { return gamma(prime_filters(l), a); }

// ---------------------------------------------------------------------------

int SetAlgebra::index_of(const PointSet& s) const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == s) return static_cast<int>(i);
  return -1;
}

std::string format_set(const FinitePoset& p, const PointSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element x) {
    if (!first) out += ",";
    out += p.label(x);
    first = false;
  });
  return out + "}";
}

namespace {

SetAlgebra build_set_algebra(const FinitePoset& p, std::vector<PointSet> family) {
  if (family.size() > static_cast<std::size_t>(FiniteLattice::kMaxElements)) {
    throw Error(ErrorCode::SizeCap, "set algebra with " + std::to_string(family.size()) +
                                        " elements exceeds " +
                                        std::to_string(FiniteLattice::kMaxElements));
  }
  sort_canonical(family);
  std::unordered_map<PointSet, int, PointSetHash> index;
  for (std::size_t i = 0; i < family.size(); ++i) index.emplace(family[i], static_cast<int>(i));
  auto lookup = [&](const PointSet& s, const char* what) {
    auto it = index.find(s);
    if (it == index.end()) {
      throw Error(ErrorCode::NotALattice, std::string("family not closed under ") + what + ": " +
                                              s.to_string());
    }
    return it->second;
  };

  const std::size_t n = family.size();
  Table meet(n, std::vector<int>(n));
  Table join(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(format_set(p, family[a]));
    for (std::size_t b = 0; b < n; ++b) {
      meet[a][b] = lookup(family[a] & family[b], "intersection");
      join[a][b] = lookup(family[a] | family[b], "union");
    }
  }
  FiniteLattice lattice = validate_lattice(meet, join, std::move(labels));

  std::vector<int> implies(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      PointSet value;
      for (Element x = 0; x < p.size(); ++x)
        if ((family[a] & p.up(x)).subset_of(family[b])) value.insert(x);
      auto it = index.find(value);
      if (it == index.end()) {
        throw Error(ErrorCode::ResiduationFailure,
                    "implication " + family[a].to_string() + " -> " + family[b].to_string() +
                        " = " + value.to_string() + " is not in the family");
      }
      implies[a * n + b] = it->second;
    }
  }
  return SetAlgebra{HeytingAlgebra(std::move(lattice), std::move(implies)), std::move(family)};
}

}  // namespace

SetAlgebra upset_algebra(const FinitePoset& p) {
  return build_set_algebra(p, all_upsets(p, static_cast<std::size_t>(FiniteLattice::kMaxElements)));
}

SetAlgebra clopen_upset_algebra(const FinitePoset& p, const FiniteTopology& t) {
  return build_set_algebra(p, clopen_upsets(p, t));
}

}  // namespace esakia
