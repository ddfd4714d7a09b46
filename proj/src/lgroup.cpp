// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#include "mvkit/lgroup.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mvkit {

// ---------------------------------------------------------------------------
// Good sequences
// ---------------------------------------------------------------------------

GoodSequence::GoodSequence(AlgebraPtr base, std::vector<Element> entries) {
  if (!base || !base->is_finite()) {
    throw UnsupportedKind("good sequences require a finite base algebra");
  }
  for (const auto& e : entries) base->require_owned(e);
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (!base->equal(base->oplus(entries[i], entries[i + 1]), entries[i])) {
      throw NotGoodSequence("adjacent absorption fails at position " + std::to_string(i));
    }
  }
  while (!entries.empty() && base->is_zero(entries.back())) entries.pop_back();
  base_ = std::move(base);
  entries_ = std::move(entries);
}

GoodSequence GoodSequence::trusted(AlgebraPtr base, std::vector<Element> entries) {
  while (!entries.empty() && base->is_zero(entries.back())) entries.pop_back();
  GoodSequence g;
  g.base_ = std::move(base);
  g.entries_ = std::move(entries);
  return g;
}

GoodSequence GoodSequence::zero(AlgebraPtr base) {
  return GoodSequence(std::move(base), {});
}

GoodSequence GoodSequence::singleton(const Element& x) {
  return GoodSequence(x.owner(), {x});
}

Element GoodSequence::entry(std::size_t i) const {
  if (i < entries_.size()) return entries_[i];
  return base_->zero();
}

std::string GoodSequence::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += base_->label(entries_[i]);
  }
  return out + "]";
}

namespace {

void require_same_base(const GoodSequence& a, const GoodSequence& b) {
  if (!same_algebra(a.base(), b.base())) {
    throw ForeignElement("good sequences over different base algebras");
  }
}

}  // namespace

GoodSequence good_add(const GoodSequence& a, const GoodSequence& b) {
  require_same_base(a, b);
  const auto& alg = a.base();
  const std::size_t n = a.length() + b.length();
  std::vector<Element> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    Element c = alg->oplus(a.entry(t), b.entry(t));
    for (std::size_t p = 0; p + 1 <= t; ++p) {
      const std::size_t q = t - 1 - p;
      c = alg->oplus(c, alg->odot(a.entry(p), b.entry(q)));
    }
    out.push_back(std::move(c));
  }
  GoodSequence sum = GoodSequence::trusted(alg, std::move(out));
  for (std::size_t i = 0; i + 1 < sum.entries().size(); ++i) {
    if (!alg->equal(alg->oplus(sum.entries()[i], sum.entries()[i + 1]), sum.entries()[i])) {
      throw MvError("good-sequence sum violates absorption (internal)");
    }
  }
  return sum;
}

bool good_leq(const GoodSequence& a, const GoodSequence& b) {
  require_same_base(a, b);
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.base()->leq(a.entry(i), b.entry(i))) return false;
  }
  return true;
}

bool good_equal(const GoodSequence& a, const GoodSequence& b) {
  require_same_base(a, b);
  if (a.length() != b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (!a.base()->equal(a.entries()[i], b.entries()[i])) return false;
  }
  return true;
}

GoodSequence good_join(const GoodSequence& a, const GoodSequence& b) {
  require_same_base(a, b);
  const std::size_t n = std::max(a.length(), b.length());
  std::vector<Element> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.base()->join(a.entry(i), b.entry(i)));
  return GoodSequence::trusted(a.base(), std::move(out));
}

GoodSequence good_meet(const GoodSequence& a, const GoodSequence& b) {
  require_same_base(a, b);
  const std::size_t n = std::max(a.length(), b.length());
  std::vector<Element> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.base()->meet(a.entry(i), b.entry(i)));
  return GoodSequence::trusted(a.base(), std::move(out));
}

std::optional<GoodSequence> good_subtract(const GoodSequence& a, const GoodSequence& b) {
  require_same_base(a, b);
  if (!good_leq(b, a)) return std::nullopt;
  const auto& alg = a.base();
  const std::size_t len = a.length();
  auto carrier = alg->carrier();

  // Backtracking solve of b + c = a: at position t the unknown c[t] enters the
  // sum equation only directly, so candidates are filtered per position and
  // goodness prunes the rest. Cancellativity makes the full solution unique.
  std::vector<Element> c;
  std::size_t budget = 200000;
  std::function<bool(std::size_t)> solve = [&](std::size_t t) -> bool {
    if (budget == 0) return false;
    --budget;
    if (t == len) {
      GoodSequence candidate = GoodSequence::trusted(alg, c);
      return good_equal(good_add(b, candidate), a);
    }
    Element known = b.entry(t);
    for (std::size_t p = 0; p + 1 <= t; ++p) {
      known = alg->oplus(known, alg->odot(b.entry(p), c[t - 1 - p]));
    }
    for (const auto& z : carrier) {
      if (!alg->equal(alg->oplus(known, z), a.entry(t))) continue;
      if (!c.empty() && !alg->equal(alg->oplus(c.back(), z), c.back())) continue;
      c.push_back(z);
      if (solve(t + 1)) return true;
      c.pop_back();
    }
    return false;
  };
  if (!solve(0)) return std::nullopt;
  return GoodSequence::trusted(alg, std::move(c));
}

// ---------------------------------------------------------------------------
// Exact integer / rational linear algebra for membership tests
// ---------------------------------------------------------------------------

namespace {

using VecQ = GroupElement::VecQ;

// Column echelon form of an integer matrix; preserves the generated lattice
// (only unimodular column operations). Membership is solved top-down against
// the pivots.
struct IntEchelon {
  std::uint32_t rows = 0;
  std::vector<std::vector<mpz_class>> cols;  // echelon columns
  std::vector<std::uint32_t> pivot;          // pivot row per column

  static IntEchelon build(std::uint32_t rows, std::vector<std::vector<mpz_class>> input) {
    IntEchelon e;
    e.rows = rows;
    std::vector<std::vector<mpz_class>> remaining = std::move(input);
    for (std::uint32_t r = 0; r < rows; ++r) {
      // Combine columns until at most one has a nonzero entry in row r.
      while (true) {
        int first = -1, second = -1;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
          if (remaining[i][r] != 0) {
            if (first < 0) {
              first = static_cast<int>(i);
            } else {
              second = static_cast<int>(i);
              break;
            }
          }
        }
        if (second < 0) {
          if (first >= 0) {
            auto col = remaining[static_cast<std::size_t>(first)];
            remaining.erase(remaining.begin() + first);
            if (col[r] < 0) {
              for (auto& v : col) v = -v;
            }
            e.cols.push_back(std::move(col));
            e.pivot.push_back(r);
          }
          break;
        }
        auto& A = remaining[static_cast<std::size_t>(first)];
        auto& B = remaining[static_cast<std::size_t>(second)];
        mpz_class g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), A[r].get_mpz_t(),
                   B[r].get_mpz_t());
        const mpz_class ar = A[r] / g, br = B[r] / g;
        for (std::uint32_t k = 0; k < rows; ++k) {
          const mpz_class na = u * A[k] + v * B[k];
          const mpz_class nb = br * A[k] - ar * B[k];
          A[k] = na;
          B[k] = nb;
        }
      }
    }
    return e;
  }

  bool contains(std::vector<mpz_class> v) const {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::uint32_t r = pivot[c];
      if (v[r] == 0) continue;
      if (v[r] % cols[c][r] != 0) return false;
      const mpz_class q = v[r] / cols[c][r];
      for (std::uint32_t k = 0; k < rows; ++k) v[k] -= q * cols[c][k];
    }
    for (const auto& x : v) {
      if (x != 0) return false;
    }
    return true;
  }
};

// Rational row space for Q-span membership.
struct RationalSpan {
  std::uint32_t rows = 0;
  std::vector<VecQ> basis;               // echelonized
  std::vector<std::uint32_t> pivot;

  static RationalSpan build(std::uint32_t rows, std::vector<VecQ> input) {
    RationalSpan s;
    s.rows = rows;
    for (auto& v : input) {
      s.reduce(v);
      std::uint32_t p = rows;
      for (std::uint32_t r = 0; r < rows; ++r) {
        if (!v[r].is_zero()) {
          p = r;
          break;
        }
      }
      if (p == rows) continue;
      const Rational lead = v[p];
      for (auto& x : v) x = x / lead;
      s.basis.push_back(std::move(v));
      s.pivot.push_back(p);
    }
    return s;
  }

  void reduce(VecQ& v) const {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rational f = v[pivot[i]];
      if (f.is_zero()) continue;
      for (std::uint32_t r = 0; r < rows; ++r) v[r] = v[r] - f * basis[i][r];
    }
  }

  bool contains(VecQ v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
  }
};

mpz_class common_denominator(const std::vector<VecQ>& vecs) {
  mpz_class d = 1;
  for (const auto& v : vecs) {
    for (const auto& x : v) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), x.den().get_mpz_t());
      d = l;
    }
  }
  return d;
}

}  // namespace

// Membership machinery is rebuilt on demand from the stored generators; the
// groups are small and immutable so this stays cheap and keeps the type
// header-independent of the solver.
namespace {

struct LatticeSolvers {
  mpz_class denom;
  IntEchelon echelon;
  RationalSpan span;
  bool divisible = false;

  static LatticeSolvers build(std::uint32_t rank, const std::vector<VecQ>& gens,
                              bool divisible) {
    LatticeSolvers s;
    s.divisible = divisible;
    if (divisible) {
      s.span = RationalSpan::build(rank, gens);
    } else {
      s.denom = common_denominator(gens);
      std::vector<std::vector<mpz_class>> cols;
      for (const auto& g : gens) {
        std::vector<mpz_class> col(rank);
        for (std::uint32_t r = 0; r < rank; ++r) {
          col[r] = g[r].num() * (s.denom / g[r].den());
        }
        cols.push_back(std::move(col));
      }
      s.echelon = IntEchelon::build(rank, std::move(cols));
    }
    return s;
  }

  bool contains(const VecQ& v) const {
    if (divisible) return span.contains(v);
    std::vector<mpz_class> w(v.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
      mpz_class scaled_den = v[r].den();
      if (denom % scaled_den != 0) return false;
      w[r] = v[r].num() * (denom / scaled_den);
    }
    return echelon.contains(std::move(w));
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// GroupElement accessors
// ---------------------------------------------------------------------------

const GroupElement::VecQ& GroupElement::vec() const {
  if (const auto* v = std::get_if<VecQ>(&value_)) return *v;
  throw UnsupportedKind("group element does not carry a vector value");
}

const GroupElement::LexValue& GroupElement::lex() const {
  if (const auto* v = std::get_if<LexValue>(&value_)) return *v;
  throw UnsupportedKind("group element does not carry a lex value");
}

const GroupElement::ChangValue& GroupElement::chang() const {
  if (const auto* v = std::get_if<ChangValue>(&value_)) return *v;
  throw UnsupportedKind("group element does not carry a Chang value");
}

// ---------------------------------------------------------------------------
// UnitalGroup factories
// ---------------------------------------------------------------------------

GroupPtr UnitalGroup::rational_lattice(std::uint32_t rank,
                                       std::vector<GroupElement::VecQ> generators,
                                       GroupElement::VecQ unit, bool divisible) {
  for (const auto& g : generators) {
    if (g.size() != rank) throw InvalidParameter("generator dimension mismatch");
  }
  if (unit.size() != rank) throw InvalidParameter("unit dimension mismatch");

  auto solvers = LatticeSolvers::build(rank, generators, divisible);
  if (rank > 0) {
    for (const auto& u : unit) {
      if (u.sign() <= 0) {
        throw InvalidParameter("strong unit must be strictly positive coordinatewise");
      }
    }
    if (!solvers.contains(unit)) {
      throw InvalidParameter("unit does not belong to the group");
    }
    // Lattice-order certificate: rank 1 is linear; otherwise require the group
    // to decompose coordinatewise (each generator's single-coordinate parts
    // are members), which makes join/meet land inside the group.
    if (rank > 1) {
      for (const auto& g : generators) {
        for (std::uint32_t r = 0; r < rank; ++r) {
          VecQ part(rank, Rational::zero());
          part[r] = g[r];
          if (!solvers.contains(part)) {
            throw InvalidParameter(
                "coordinatewise order is not certified as a lattice order for these "
                "generators");
          }
        }
      }
    }
  }

  RationalLattice data;
  data.rank = rank;
  data.generators = std::move(generators);
  data.unit = std::move(unit);
  data.divisible = divisible;
  // Strong-unit certificate per generator: g <= n.u with the concrete n kept.
  for (const auto& g : data.generators) {
    mpz_class n = 0;
    for (std::uint32_t r = 0; r < rank; ++r) {
      if (g[r].sign() > 0) {
        const mpz_class c = (g[r] / data.unit[r]).ceil();
        if (c > n) n = c;
      }
    }
    const auto cert = static_cast<std::uint32_t>(n.get_ui());
    for (std::uint32_t r = 0; r < rank; ++r) {
      if (g[r] > data.unit[r] * Rational(mpz_class(cert), 1)) {
        throw InvalidParameter("strong unit certificate failed re-check");
      }
    }
    data.unit_certs.push_back(cert);
  }

  auto g = std::shared_ptr<UnitalGroup>(new UnitalGroup());
  g->rep_ = GroupRep::rational_lattice;
  g->lattice_ = std::move(data);
  return g;
}

GroupPtr UnitalGroup::integers() { return scaled_integers(1); }

GroupPtr UnitalGroup::rationals() {
  return rational_lattice(1, {{Rational::one()}}, {Rational::one()}, true);
}

GroupPtr UnitalGroup::scaled_integers(std::uint32_t n) {
  if (n == 0) throw InvalidParameter("scaled integers need n >= 1");
  return rational_lattice(1, {{Rational(1, long(n))}}, {Rational::one()}, false);
}

GroupPtr UnitalGroup::lex_pair(GroupPtr first, GroupPtr second, GroupElement unit_first,
                               GroupElement unit_second) {
  if (!first || !second) throw InvalidParameter("null lex component");
  first->require_owned(unit_first);
  second->require_owned(unit_second);
  // Unit of the lex order: the first coordinate must strictly dominate every
  // first-component element eventually, which the all-positive vector test
  // certifies for rational lattices.
  if (first->rep() != GroupRep::rational_lattice) {
    throw UnsupportedKind("lex first component must be a rational lattice group");
  }
  if (first->rank() > 0) {
    for (const auto& c : unit_first.vec()) {
      if (c.sign() <= 0) {
        throw InvalidParameter("lex unit must be strictly positive in the first component");
      }
    }
  }
  auto g = std::shared_ptr<UnitalGroup>(new UnitalGroup());
  g->rep_ = GroupRep::lex_pair;
  LexData data;
  data.first = std::move(first);
  data.second = std::move(second);
  data.unit_first = std::make_shared<const GroupElement>(std::move(unit_first));
  data.unit_second = std::make_shared<const GroupElement>(std::move(unit_second));
  g->lex_ = std::move(data);
  return g;
}

GroupPtr UnitalGroup::chang_group(AlgebraPtr base) {
  if (!base || !base->is_finite()) {
    throw UnsupportedKind("Chang groups are built over finite algebras");
  }
  auto g = std::shared_ptr<UnitalGroup>(new UnitalGroup());
  g->rep_ = GroupRep::chang;
  g->chang_ = ChangData{std::move(base)};
  return g;
}

// ---------------------------------------------------------------------------
// UnitalGroup structure
// ---------------------------------------------------------------------------

std::uint32_t UnitalGroup::rank() const {
  if (rep_ != GroupRep::rational_lattice) throw UnsupportedKind("not a rational lattice");
  return lattice_->rank;
}

bool UnitalGroup::divisible_span() const {
  if (rep_ != GroupRep::rational_lattice) return false;
  return lattice_->divisible;
}

const std::vector<GroupElement::VecQ>& UnitalGroup::generators() const {
  if (rep_ != GroupRep::rational_lattice) throw UnsupportedKind("not a rational lattice");
  return lattice_->generators;
}

const AlgebraPtr& UnitalGroup::chang_base() const {
  if (rep_ != GroupRep::chang) throw UnsupportedKind("not a Chang group");
  return chang_->base;
}

const GroupPtr& UnitalGroup::lex_first() const {
  if (rep_ != GroupRep::lex_pair) throw UnsupportedKind("not a lex pair");
  return lex_->first;
}

const GroupPtr& UnitalGroup::lex_second() const {
  if (rep_ != GroupRep::lex_pair) throw UnsupportedKind("not a lex pair");
  return lex_->second;
}

const std::vector<std::uint32_t>& UnitalGroup::unit_certificates() const {
  if (rep_ != GroupRep::rational_lattice) throw UnsupportedKind("not a rational lattice");
  return lattice_->unit_certs;
}

GroupElement UnitalGroup::zero_element() const {
  switch (rep_) {
    case GroupRep::rational_lattice:
      return mk(GroupElement::VecQ(lattice_->rank, Rational::zero()));
    case GroupRep::lex_pair:
      return mk(GroupElement::LexValue{
          std::make_shared<const GroupElement>(lex_->first->zero_element()),
          std::make_shared<const GroupElement>(lex_->second->zero_element())});
    case GroupRep::chang:
      return mk(GroupElement::ChangValue{GoodSequence::zero(chang_->base),
                                         GoodSequence::zero(chang_->base)});
  }
  throw UnsupportedKind("unknown group rep");
}

GroupElement UnitalGroup::unit() const {
  switch (rep_) {
    case GroupRep::rational_lattice:
      return mk(lattice_->unit);
    case GroupRep::lex_pair:
      return mk(GroupElement::LexValue{lex_->unit_first, lex_->unit_second});
    case GroupRep::chang:
      return mk(GroupElement::ChangValue{GoodSequence::singleton(chang_->base->one()),
                                         GoodSequence::zero(chang_->base)});
  }
  throw UnsupportedKind("unknown group rep");
}

void UnitalGroup::require_owned(const GroupElement& x) const {
  if (x.owner().get() != this) {
    throw ForeignElement("group element belongs to a different group");
  }
}

GroupElement UnitalGroup::chang_normalized(GoodSequence pos, GoodSequence neg) const {
  const GoodSequence common = good_meet(pos, neg);
  if (!common.is_zero()) {
    auto p = good_subtract(pos, common);
    auto n = good_subtract(neg, common);
    if (p && n) {
      return mk(GroupElement::ChangValue{std::move(*p), std::move(*n)});
    }
    // Bounded search gave up; the unnormalized pair is still a valid value
    // because equality always falls back to the monoid equation.
  }
  return mk(GroupElement::ChangValue{std::move(pos), std::move(neg)});
}

// ---------------------------------------------------------------------------
// UnitalGroup arithmetic
// ---------------------------------------------------------------------------

GroupElement UnitalGroup::add(const GroupElement& x, const GroupElement& y) const {
  require_owned(x);
  require_owned(y);
  switch (rep_) {
    case GroupRep::rational_lattice: {
      GroupElement::VecQ out = x.vec();
      for (std::size_t r = 0; r < out.size(); ++r) out[r] += y.vec()[r];
      return mk(std::move(out));
    }
    case GroupRep::lex_pair:
      return mk(GroupElement::LexValue{
          std::make_shared<const GroupElement>(lex_->first->add(*x.lex().first, *y.lex().first)),
          std::make_shared<const GroupElement>(
              lex_->second->add(*x.lex().second, *y.lex().second))});
    case GroupRep::chang:
      return chang_normalized(good_add(x.chang().pos, y.chang().pos),
                              good_add(x.chang().neg, y.chang().neg));
  }
  throw UnsupportedKind("unknown group rep");
}

GroupElement UnitalGroup::negate(const GroupElement& x) const {
  require_owned(x);
  switch (rep_) {
    case GroupRep::rational_lattice: {
      GroupElement::VecQ out = x.vec();
      for (auto& v : out) v = -v;
      return mk(std::move(out));
    }
    case GroupRep::lex_pair:
      return mk(GroupElement::LexValue{
          std::make_shared<const GroupElement>(lex_->first->negate(*x.lex().first)),
          std::make_shared<const GroupElement>(lex_->second->negate(*x.lex().second))});
    case GroupRep::chang:
      return mk(GroupElement::ChangValue{x.chang().neg, x.chang().pos});
  }
  throw UnsupportedKind("unknown group rep");
}

GroupElement UnitalGroup::subtract(const GroupElement& x, const GroupElement& y) const {
  return add(x, negate(y));
}

GroupElement UnitalGroup::scalar(std::int64_t n, const GroupElement& x) const {
  require_owned(x);
  if (n < 0) return negate(scalar(-n, x));
  if (rep_ == GroupRep::rational_lattice) {
    GroupElement::VecQ out = x.vec();
    const Rational f(mpz_class(static_cast<long>(n)), 1);
    for (auto& v : out) v = v * f;
    return mk(std::move(out));
  }
  GroupElement acc = zero_element();
  for (std::int64_t i = 0; i < n; ++i) acc = add(acc, x);
  return acc;
}

bool UnitalGroup::leq(const GroupElement& x, const GroupElement& y) const {
  require_owned(x);
  require_owned(y);
  switch (rep_) {
    case GroupRep::rational_lattice: {
      for (std::size_t r = 0; r < x.vec().size(); ++r) {
        if (x.vec()[r] > y.vec()[r]) return false;
      }
      return true;
    }
    case GroupRep::lex_pair: {
      const auto& f = lex_->first;
      if (f->equal(*x.lex().first, *y.lex().first)) {
        return lex_->second->leq(*x.lex().second, *y.lex().second);
      }
      return f->leq(*x.lex().first, *y.lex().first);  // strict on the first
    }
    case GroupRep::chang:
      return good_leq(good_add(x.chang().pos, y.chang().neg),
                      good_add(y.chang().pos, x.chang().neg));
  }
  throw UnsupportedKind("unknown group rep");
}

bool UnitalGroup::equal(const GroupElement& x, const GroupElement& y) const {
  require_owned(x);
  require_owned(y);
  switch (rep_) {
    case GroupRep::rational_lattice:
      return x.vec() == y.vec();
    case GroupRep::lex_pair:
      return lex_->first->equal(*x.lex().first, *y.lex().first) &&
             lex_->second->equal(*x.lex().second, *y.lex().second);
    case GroupRep::chang:
      return good_equal(good_add(x.chang().pos, y.chang().neg),
                        good_add(y.chang().pos, x.chang().neg));
  }
  throw UnsupportedKind("unknown group rep");
}

bool UnitalGroup::linearly_ordered() const {
  switch (rep_) {
    case GroupRep::rational_lattice:
      return lattice_->rank <= 1;
    case GroupRep::lex_pair:
      return lex_->first->linearly_ordered() && lex_->second->linearly_ordered();
    case GroupRep::chang: {
      // Linear iff the base algebra is a chain.
      const auto& base = chang_->base;
      auto carrier = base->carrier();
      for (std::size_t i = 0; i < carrier.size(); ++i) {
        for (std::size_t j = i + 1; j < carrier.size(); ++j) {
          if (!base->leq(carrier[i], carrier[j]) && !base->leq(carrier[j], carrier[i])) {
            return false;
          }
        }
      }
      return true;
    }
  }
  return false;
}

GroupElement UnitalGroup::join(const GroupElement& x, const GroupElement& y) const {
  require_owned(x);
  require_owned(y);
  switch (rep_) {
    case GroupRep::rational_lattice: {
      GroupElement::VecQ out = x.vec();
      for (std::size_t r = 0; r < out.size(); ++r) out[r] = max(out[r], y.vec()[r]);
      return mk(std::move(out));
    }
    case GroupRep::lex_pair: {
      if (!lex_->first->linearly_ordered()) {
        throw NotALattice("lexicographic product with non-linear first component");
      }
      const auto& f = lex_->first;
      if (f->equal(*x.lex().first, *y.lex().first)) {
        return mk(GroupElement::LexValue{
            x.lex().first, std::make_shared<const GroupElement>(
                               lex_->second->join(*x.lex().second, *y.lex().second))});
      }
      return f->leq(*x.lex().first, *y.lex().first) ? y : x;
    }
    case GroupRep::chang: {
      const GoodSequence left = good_add(x.chang().pos, y.chang().neg);
      const GoodSequence right = good_add(y.chang().pos, x.chang().neg);
      return chang_normalized(good_join(left, right),
                              good_add(x.chang().neg, y.chang().neg));
    }
  }
  throw UnsupportedKind("unknown group rep");
}

GroupElement UnitalGroup::meet(const GroupElement& x, const GroupElement& y) const {
  // x ^ y = -((-x) v (-y))
  return negate(join(negate(x), negate(y)));
}

// ---------------------------------------------------------------------------
// Membership / element construction
// ---------------------------------------------------------------------------

bool UnitalGroup::contains_vec(const GroupElement::VecQ& v) const {
  if (rep_ != GroupRep::rational_lattice) throw UnsupportedKind("not a rational lattice");
  if (v.size() != lattice_->rank) return false;
  return LatticeSolvers::build(lattice_->rank, lattice_->generators, lattice_->divisible)
      .contains(v);
}

GroupElement UnitalGroup::element_from_vec(GroupElement::VecQ v) const {
  if (!contains_vec(v)) {
    throw InvalidParameter("vector is not a member of the group");
  }
  return mk(std::move(v));
}

GroupElement UnitalGroup::element_from_chang(GroupElement::ChangValue v) const {
  if (rep_ != GroupRep::chang) throw UnsupportedKind("not a Chang group");
  if (!same_algebra(v.pos.base(), chang_->base) || !same_algebra(v.neg.base(), chang_->base)) {
    throw ForeignElement("good sequences over a different base algebra");
  }
  return chang_normalized(std::move(v.pos), std::move(v.neg));
}

GroupElement UnitalGroup::element_from_lex(GroupElement first, GroupElement second) const {
  if (rep_ != GroupRep::lex_pair) throw UnsupportedKind("not a lex pair");
  lex_->first->require_owned(first);
  lex_->second->require_owned(second);
  return mk(GroupElement::LexValue{std::make_shared<const GroupElement>(std::move(first)),
                                   std::make_shared<const GroupElement>(std::move(second))});
}

// ---------------------------------------------------------------------------
// Interval support
// ---------------------------------------------------------------------------

bool UnitalGroup::in_interval(const GroupElement& x) const {
  return leq(zero_element(), x) && leq(x, unit());
}

bool UnitalGroup::interval_finite() const {
  switch (rep_) {
    case GroupRep::rational_lattice:
      if (lattice_->rank == 0) return true;
      return !lattice_->divisible;
    case GroupRep::lex_pair:
      return false;
    case GroupRep::chang:
      return true;
  }
  return false;
}

std::vector<GroupElement> UnitalGroup::enumerate_interval() const {
  switch (rep_) {
    case GroupRep::rational_lattice: {
      if (lattice_->rank == 0) return {zero_element()};
      if (lattice_->divisible) throw UnsupportedKind("interval of a divisible span is dense");
      const std::uint32_t k = lattice_->rank;
      auto solvers =
          LatticeSolvers::build(k, lattice_->generators, lattice_->divisible);
      const mpz_class d = common_denominator(lattice_->generators);
      // Points of (1/d)Z^k inside the box [0,u], filtered by membership, in
      // lexicographic order (which extends the coordinatewise order).
      std::vector<mpz_class> max_idx(k);
      mpz_class count = 1;
      for (std::uint32_t r = 0; r < k; ++r) {
        max_idx[r] = (lattice_->unit[r] * Rational(d, 1)).floor();
        count *= max_idx[r] + 1;
        if (count > 1000000) throw TooLarge("interval enumeration past the cap");
      }
      std::vector<GroupElement> out;
      std::vector<mpz_class> idx(k, 0);
      while (true) {
        GroupElement::VecQ v(k);
        for (std::uint32_t r = 0; r < k; ++r) v[r] = Rational(idx[r], d);
        if (solvers.contains(v)) out.push_back(mk(std::move(v)));
        std::int32_t r = static_cast<std::int32_t>(k) - 1;
        while (r >= 0 && idx[static_cast<std::uint32_t>(r)] == max_idx[static_cast<std::uint32_t>(r)]) {
          idx[static_cast<std::uint32_t>(r)] = 0;
          --r;
        }
        if (r < 0) break;
        ++idx[static_cast<std::uint32_t>(r)];
      }
      return out;
    }
    case GroupRep::lex_pair:
      throw UnsupportedKind("lex interval enumeration is not supported");
    case GroupRep::chang: {
      // Every interval element reduces to a singleton class (a positive
      // element below the unit has a good-sequence form with one entry), so
      // the carrier is the image of the base in canonical order.
      std::vector<GroupElement> out;
      for (const auto& x : chang_->base->carrier()) {
        out.push_back(mk(GroupElement::ChangValue{GoodSequence::singleton(x),
                                                  GoodSequence::zero(chang_->base)}));
      }
      return out;
    }
  }
  throw UnsupportedKind("unknown group rep");
}

bool UnitalGroup::canonical_less(const GroupElement& x, const GroupElement& y) const {
  require_owned(x);
  require_owned(y);
  switch (rep_) {
    case GroupRep::rational_lattice: {
      for (std::size_t r = 0; r < x.vec().size(); ++r) {
        if (x.vec()[r] != y.vec()[r]) return x.vec()[r] < y.vec()[r];
      }
      return false;
    }
    case GroupRep::lex_pair: {
      if (!lex_->first->equal(*x.lex().first, *y.lex().first)) {
        return lex_->first->canonical_less(*x.lex().first, *y.lex().first);
      }
      return lex_->second->canonical_less(*x.lex().second, *y.lex().second);
    }
    case GroupRep::chang: {
      const GoodSequence a = good_add(x.chang().pos, y.chang().neg);
      const GoodSequence b = good_add(y.chang().pos, x.chang().neg);
      const auto& base = chang_->base;
      const std::size_t n = std::max(a.length(), b.length());
      for (std::size_t i = 0; i < n; ++i) {
        const auto ra = base->rank_of(a.entry(i));
        const auto rb = base->rank_of(b.entry(i));
        if (ra != rb) return ra < rb;
      }
      return false;
    }
  }
  throw UnsupportedKind("unknown group rep");
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string UnitalGroup::element_str(const GroupElement& x) const {
  require_owned(x);
  switch (rep_) {
    case GroupRep::rational_lattice: {
      std::string out = "[";
      for (std::size_t r = 0; r < x.vec().size(); ++r) {
        if (r) out += ",";
        out += x.vec()[r].str();
      }
      return out + "]";
    }
    case GroupRep::lex_pair:
      return "(" + lex_->first->element_str(*x.lex().first) + ";" +
             lex_->second->element_str(*x.lex().second) + ")";
    case GroupRep::chang: {
      std::string out = x.chang().pos.str();
      if (!x.chang().neg.is_zero()) out += "-" + x.chang().neg.str();
      return out;
    }
  }
  throw UnsupportedKind("unknown group rep");
}

std::string UnitalGroup::describe() const {
  switch (rep_) {
    case GroupRep::rational_lattice: {
      std::ostringstream os;
      os << (lattice_->divisible ? "Q-span" : "Z-span") << "(rank " << lattice_->rank
         << ", " << lattice_->generators.size() << " generators)";
      return os.str();
    }
    case GroupRep::lex_pair:
      return "lex[" + lex_->first->describe() + " ; " + lex_->second->describe() + "]";
    case GroupRep::chang:
      return "chang[" + chang_->base->describe() + "]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Gamma / Xi
// ---------------------------------------------------------------------------

AlgebraPtr gamma(GroupPtr group) {
  if (!group) throw InvalidParameter("null group");
  // Gamma(Q, 1) is identified with the divisible rational chain, the one
  // exactly representable dense algebra.
  if (group->rep() == GroupRep::rational_lattice && group->rank() == 1 &&
      group->divisible_span() && group->unit().vec()[0] == Rational::one()) {
    return Algebra::divisible_rational_chain();
  }
  return Algebra::make_gamma_interval(std::move(group));
}

XiResult xi(AlgebraPtr base) {
  if (!base || !base->is_finite()) {
    throw UnsupportedKind("xi requires a finite base algebra");
  }
  GroupPtr group = UnitalGroup::chang_group(base);
  AlgebraPtr interval = gamma(group);
  std::vector<Element> images;
  for (const auto& x : base->carrier()) {
    GroupElement g = group->element_from_chang(
        GroupElement::ChangValue{GoodSequence::singleton(x), GoodSequence::zero(base)});
    images.push_back(interval->element_from_group(g));
  }
  return XiResult{group, interval, Hom::unchecked(base, interval, std::move(images))};
}

Hom mundici_roundtrip(AlgebraPtr base) {
  if (!base->is_finite() || base->size() > 256) {
    throw TooLarge("round trip supported for finite algebras up to 256 elements");
  }
  XiResult r = xi(base);
  const auto& f = r.unit_embedding;
  const auto& target = r.gamma_algebra;
  const std::uint64_t m = base->size();
  if (target->size() != m) {
    throw RoundTripFailure("interval carrier size differs from the base");
  }
  auto carrier = base->carrier();
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = i + 1; j < m; ++j) {
      if (target->equal(f.apply_rank(i), f.apply_rank(j))) {
        throw RoundTripFailure("natural map is not injective at " +
                               base->label(carrier[i]) + ", " + base->label(carrier[j]));
      }
    }
  }
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!target->equal(f.apply(base->neg(carrier[i])), target->neg(f.apply_rank(i)))) {
      throw RoundTripFailure("negation is not preserved at " + base->label(carrier[i]));
    }
    for (std::uint64_t j = 0; j < m; ++j) {
      const Element lhs = f.apply(base->oplus(carrier[i], carrier[j]));
      const Element rhs = target->oplus(f.apply_rank(i), f.apply_rank(j));
      if (!target->equal(lhs, rhs)) {
        throw RoundTripFailure("sum is not preserved at " + base->label(carrier[i]) +
                               ", " + base->label(carrier[j]));
      }
    }
  }
  if (!target->is_zero(f.apply(base->zero())) || !target->is_one(f.apply(base->one()))) {
    throw RoundTripFailure("constants are not preserved");
  }
  return f;
}

GroupElement xi_map(const Hom& f, const GroupPtr& source_group,
                    const GroupPtr& target_group, const GroupElement& x) {
  if (source_group->rep() != GroupRep::chang || target_group->rep() != GroupRep::chang) {
    throw UnsupportedKind("xi_map acts between Chang groups");
  }
  if (!same_algebra(source_group->chang_base(), f.source()) ||
      !same_algebra(target_group->chang_base(), f.target())) {
    throw ForeignElement("hom endpoints do not match the Chang bases");
  }
  source_group->require_owned(x);
  auto map_seq = [&](const GoodSequence& s) {
    std::vector<Element> entries;
    entries.reserve(s.length());
    for (const auto& e : s.entries()) entries.push_back(f.apply(e));
    return GoodSequence(f.target(), std::move(entries));
  };
  return target_group->element_from_chang(
      GroupElement::ChangValue{map_seq(x.chang().pos), map_seq(x.chang().neg)});
}

}  // namespace mvkit
