// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#include "mvkit/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mvkit/lgroup.hpp"

namespace mvkit {

namespace {

std::string index_name(const std::vector<std::string>& labels, std::uint32_t i) {
  if (i < labels.size() && !labels[i].empty()) return labels[i];
  return "e" + std::to_string(i);
}

}  // namespace

// ---------------------------------------------------------------------------
// Element accessors
// ---------------------------------------------------------------------------

std::uint32_t Element::rank_value() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r;
  throw UnsupportedKind("element does not carry a finite rank");
}

const Rational& Element::rational_value() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw UnsupportedKind("element does not carry a rational value");
}

const Element::Tuple& Element::tuple_value() const {
  if (const auto* t = std::get_if<Tuple>(&value_)) return *t;
  throw UnsupportedKind("element does not carry a tuple value");
}

const GroupElement& Element::group_value() const {
  if (const auto* g = std::get_if<GroupHandle>(&value_)) return **g;
  throw UnsupportedKind("element does not carry a group value");
}

// ---------------------------------------------------------------------------
// Law checking on explicit tables
// ---------------------------------------------------------------------------

namespace {

struct LawFailure {
  std::string law;
  std::vector<std::uint32_t> witness;
  std::string detail;
};

// First counterexample in canonical element order, unary laws before binary
// before ternary. Works on raw indices so witnesses match the caller's data.
std::optional<LawFailure> first_law_failure(const std::vector<std::uint32_t>& oplus,
                                            const std::vector<std::uint32_t>& neg,
                                            std::uint32_t m, std::uint32_t zero,
                                            std::uint32_t one) {
  auto op = [&](std::uint32_t x, std::uint32_t y) { return oplus[x * m + y]; };
  for (std::uint32_t x = 0; x < m; ++x) {
    if (neg[neg[x]] != x) {
      return LawFailure{"axiom (i)", {x}, "x'' != x"};
    }
  }
  for (std::uint32_t x = 0; x < m; ++x) {
    if (op(x, one) != one) {
      return LawFailure{"axiom (ii)", {x}, "x + 1 != 1"};
    }
  }
  for (std::uint32_t x = 0; x < m; ++x) {
    if (op(x, zero) != x || op(zero, x) != x) {
      return LawFailure{"monoid neutral", {x}, "x + 0 != x"};
    }
  }
  for (std::uint32_t x = 0; x < m; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) {
      if (op(x, y) != op(y, x)) {
        return LawFailure{"monoid commutativity", {x, y}, "x + y != y + x"};
      }
    }
  }
  for (std::uint32_t x = 0; x < m; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) {
      const std::uint32_t lhs = op(x, neg[op(x, neg[y])]);
      const std::uint32_t rhs = op(y, neg[op(y, neg[x])]);
      if (lhs != rhs) {
        return LawFailure{"axiom (iii)", {x, y}, "x + (x + y')' != y + (y + x')'"};
      }
    }
  }
  for (std::uint32_t x = 0; x < m; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) {
      for (std::uint32_t z = 0; z < m; ++z) {
        if (op(op(x, y), z) != op(x, op(y, z))) {
          return LawFailure{"monoid associativity", {x, y, z}, "(x+y)+z != x+(y+z)"};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

void Algebra::check_laws_or_throw(const FiniteTable& t, std::uint32_t zero,
                                  std::uint32_t one) {
  auto failure = first_law_failure(t.oplus, t.neg, t.size, zero, one);
  if (!failure) return;
  std::ostringstream msg;
  msg << failure->law << " fails at (";
  for (std::size_t i = 0; i < failure->witness.size(); ++i) {
    if (i) msg << ", ";
    msg << index_name(t.labels, failure->witness[i]);
  }
  msg << "): " << failure->detail;
  throw AxiomViolation(msg.str());
}

Algebra::FiniteTable Algebra::canonicalize(FiniteTable raw, std::uint32_t zero,
                                           std::uint32_t one) {
  const std::uint32_t m = raw.size;
  auto op = [&](std::uint32_t x, std::uint32_t y) { return raw.oplus[x * m + y]; };
  // x <= y iff x' + y = 1; once the laws hold this is a partial order with
  // bottom `zero` and top `one`.
  auto leq = [&](std::uint32_t x, std::uint32_t y) { return op(raw.neg[x], y) == one; };

  // Kahn topological sort, smallest original index first: a deterministic
  // linear extension of <=.
  std::vector<std::uint32_t> indegree(m, 0);
  for (std::uint32_t x = 0; x < m; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) {
      if (x != y && leq(x, y)) ++indegree[y];
    }
  }
  std::vector<std::uint32_t> order;  // canonical rank -> original index
  std::vector<bool> placed(m, false);
  for (std::uint32_t step = 0; step < m; ++step) {
    std::uint32_t pick = m;
    for (std::uint32_t x = 0; x < m; ++x) {
      if (!placed[x] && indegree[x] == 0) {
        pick = x;
        break;
      }
    }
    if (pick == m) {
      throw AxiomViolation("order antisymmetry failed during canonicalisation");
    }
    placed[pick] = true;
    order.push_back(pick);
    for (std::uint32_t y = 0; y < m; ++y) {
      if (!placed[y] && pick != y && leq(pick, y)) --indegree[y];
    }
  }

  std::vector<std::uint32_t> rank_of(m);
  for (std::uint32_t r = 0; r < m; ++r) rank_of[order[r]] = r;

  FiniteTable out;
  out.size = m;
  out.oplus.resize(std::size_t(m) * m);
  out.neg.resize(m);
  out.labels.resize(m);
  for (std::uint32_t r = 0; r < m; ++r) {
    out.neg[r] = rank_of[raw.neg[order[r]]];
    out.labels[r] = index_name(raw.labels, order[r]);
    for (std::uint32_t s = 0; s < m; ++s) {
      out.oplus[r * m + s] = rank_of[op(order[r], order[s])];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

AlgebraPtr Algebra::trivial() {
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->kind_ = AlgebraKind::finite_table;
  a->table_ = FiniteTable{1, {0}, {0}, {"0"}};
  return a;
}

AlgebraPtr Algebra::lukasiewicz_chain(std::uint32_t n) {
  if (n == 0) throw InvalidParameter("chain parameter n must be >= 1");
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->kind_ = AlgebraKind::lukasiewicz_chain;
  a->chain_n_ = n;
  return a;
}

AlgebraPtr Algebra::boolean_algebra(std::uint32_t k) {
  if (k == 0) throw InvalidParameter("boolean algebra needs k >= 1 factors");
  std::vector<AlgebraPtr> factors(k, lukasiewicz_chain(1));
  if (k == 1) return factors[0];
  return product(std::move(factors));
}

AlgebraPtr Algebra::divisible_rational_chain() {
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->kind_ = AlgebraKind::divisible_rational_chain;
  return a;
}

AlgebraPtr Algebra::from_table(std::uint32_t size,
                               const std::vector<std::uint32_t>& oplus_row_major,
                               const std::vector<std::uint32_t>& neg,
                               std::uint32_t zero, std::uint32_t one,
                               std::vector<std::string> labels) {
  if (size == 0) throw InvalidParameter("table size must be >= 1");
  if (size > 512) throw TooLarge("explicit tables capped at 512 elements");
  if (oplus_row_major.size() != std::size_t(size) * size) {
    throw InvalidParameter("oplus table must have size*size entries");
  }
  if (neg.size() != size) throw InvalidParameter("neg vector must have size entries");
  if (zero >= size || one >= size) throw InvalidParameter("zero/one index out of range");
  for (auto v : oplus_row_major) {
    if (v >= size) throw InvalidParameter("oplus entry out of range");
  }
  for (auto v : neg) {
    if (v >= size) throw InvalidParameter("neg entry out of range");
  }
  if (size > 1 && zero == one) throw InvalidParameter("zero and one must differ");
  if (neg[zero] != one) throw AxiomViolation("0' != 1 in the given table");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) continue;
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) throw InvalidParameter("duplicate element labels");
    }
  }

  FiniteTable raw{size, oplus_row_major, neg, std::move(labels)};
  check_laws_or_throw(raw, zero, one);

  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->kind_ = AlgebraKind::finite_table;
  a->table_ = canonicalize(std::move(raw), zero, one);
  return a;
}

AlgebraPtr Algebra::product(std::vector<AlgebraPtr> factors) {
  if (factors.empty()) throw InvalidParameter("product needs at least one factor");
  for (const auto& f : factors) {
    if (!f) throw InvalidParameter("null product factor");
  }
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->kind_ = AlgebraKind::product;
  a->product_ = ProductData{std::move(factors)};
  return a;
}

AlgebraPtr Algebra::make_quotient(QuotientData data) {
  const std::uint32_t m = static_cast<std::uint32_t>(data.least_rep.size());
  FiniteTable raw{m, data.oplus, data.neg, {}};
  // Classes arrive in least-representative order; re-canonicalise so rank 0
  // is the zero class and the last rank is the class of 1.
  std::uint32_t zero_class = 0, one_class = 0;
  {
    // zero class: class of base rank 0; one class: class of the base top.
    zero_class = data.class_of_base.front();
    one_class = data.class_of_base.back();
  }
  raw.labels.resize(m);
  for (std::uint32_t c = 0; c < m; ++c) {
    raw.labels[c] = data.base->label(data.base->element_at(data.least_rep[c]));
  }
  check_laws_or_throw(raw, zero_class, one_class);
  FiniteTable canon = canonicalize(raw, zero_class, one_class);

  // Recover the class permutation from labels: canonicalize keeps labels
  // attached to their class, so match least representatives through them.
  std::vector<std::uint32_t> new_rank_of_old(m);
  {
    std::vector<bool> used(m, false);
    for (std::uint32_t old_c = 0; old_c < m; ++old_c) {
      for (std::uint32_t r = 0; r < m; ++r) {
        if (!used[r] && canon.labels[r] == raw.labels[old_c]) {
          new_rank_of_old[old_c] = r;
          used[r] = true;
          break;
        }
      }
    }
  }
  QuotientData fixed;
  fixed.base = data.base;
  fixed.ideal_members = std::move(data.ideal_members);
  fixed.class_of_base.resize(data.class_of_base.size());
  for (std::size_t b = 0; b < data.class_of_base.size(); ++b) {
    fixed.class_of_base[b] = new_rank_of_old[data.class_of_base[b]];
  }
  fixed.least_rep.resize(m);
  for (std::uint32_t old_c = 0; old_c < m; ++old_c) {
    fixed.least_rep[new_rank_of_old[old_c]] = data.least_rep[old_c];
  }
  fixed.oplus = canon.oplus;
  fixed.neg = canon.neg;

  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->kind_ = AlgebraKind::quotient;
  a->quotient_ = std::move(fixed);
  a->table_ = std::move(canon);
  return a;
}

AlgebraPtr Algebra::make_gamma_interval(GroupPtr group) {
  if (!group) throw InvalidParameter("null group");
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->kind_ = AlgebraKind::gamma_interval;
  GammaData data;
  data.group = std::move(group);
  if (data.group->interval_finite()) {
    std::vector<Element::GroupHandle> carrier;
    for (auto& g : data.group->enumerate_interval()) {
      carrier.push_back(std::make_shared<const GroupElement>(g));
    }
    data.carrier = std::move(carrier);
  }
  a->gamma_ = std::move(data);
  return a;
}

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

const Algebra::FiniteTable& Algebra::table() const {
  if (!table_) throw UnsupportedKind("algebra has no explicit table");
  return *table_;
}

bool Algebra::is_finite() const {
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::lukasiewicz_chain:
    case AlgebraKind::quotient:
      return true;
    case AlgebraKind::divisible_rational_chain:
      return false;
    case AlgebraKind::product: {
      for (const auto& f : product_->factors) {
        if (!f->is_finite()) return false;
      }
      return true;
    }
    case AlgebraKind::gamma_interval:
      return gamma_->carrier.has_value();
  }
  return false;
}

std::uint64_t Algebra::size() const {
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::quotient:
      return table().size;
    case AlgebraKind::lukasiewicz_chain:
      return std::uint64_t(chain_n_) + 1;
    case AlgebraKind::divisible_rational_chain:
      throw UnsupportedKind("divisible rational chain is infinite");
    case AlgebraKind::product: {
      std::uint64_t s = 1;
      for (const auto& f : product_->factors) {
        s *= f->size();
        if (s > (std::uint64_t(1) << 40)) {
          throw TooLarge("product carrier too large to index");
        }
      }
      return s;
    }
    case AlgebraKind::gamma_interval:
      if (!gamma_->carrier) throw UnsupportedKind("gamma interval is infinite");
      return gamma_->carrier->size();
  }
  throw UnsupportedKind("unknown kind");
}

Element Algebra::zero() const {
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::lukasiewicz_chain:
    case AlgebraKind::quotient:
      return mk(std::uint32_t(0));
    case AlgebraKind::divisible_rational_chain:
      return mk(Rational::zero());
    case AlgebraKind::product: {
      Element::Tuple t;
      t.reserve(product_->factors.size());
      for (const auto& f : product_->factors) t.push_back(f->zero());
      return mk(std::move(t));
    }
    case AlgebraKind::gamma_interval:
      return mk(std::make_shared<const GroupElement>(gamma_->group->zero_element()));
  }
  throw UnsupportedKind("unknown kind");
}

Element Algebra::one() const {
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::quotient:
      return mk(std::uint32_t(table().size - 1));
    case AlgebraKind::lukasiewicz_chain:
      return mk(chain_n_);
    case AlgebraKind::divisible_rational_chain:
      return mk(Rational::one());
    case AlgebraKind::product: {
      Element::Tuple t;
      t.reserve(product_->factors.size());
      for (const auto& f : product_->factors) t.push_back(f->one());
      return mk(std::move(t));
    }
    case AlgebraKind::gamma_interval:
      return mk(std::make_shared<const GroupElement>(gamma_->group->unit()));
  }
  throw UnsupportedKind("unknown kind");
}

Element Algebra::element_at(std::uint64_t rank) const {
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::quotient:
    case AlgebraKind::lukasiewicz_chain: {
      if (rank >= size()) throw InvalidParameter("rank out of range");
      return mk(static_cast<std::uint32_t>(rank));
    }
    case AlgebraKind::divisible_rational_chain:
      throw UnsupportedKind("divisible rational chain cannot be enumerated");
    case AlgebraKind::product: {
      // Mixed radix, first factor most significant: a linear extension of the
      // componentwise order because each factor order extends its own.
      const auto& fs = product_->factors;
      std::uint64_t total = size();
      if (rank >= total) throw InvalidParameter("rank out of range");
      Element::Tuple t;
      t.reserve(fs.size());
      std::uint64_t rest = rank;
      for (std::size_t i = fs.size(); i-- > 0;) {
        const std::uint64_t s = fs[i]->size();
        t.push_back(fs[i]->element_at(rest % s));
        rest /= s;
      }
      std::reverse(t.begin(), t.end());
      return mk(std::move(t));
    }
    case AlgebraKind::gamma_interval: {
      if (!gamma_->carrier) throw UnsupportedKind("gamma interval is infinite");
      if (rank >= gamma_->carrier->size()) throw InvalidParameter("rank out of range");
      return mk((*gamma_->carrier)[rank]);
    }
  }
  throw UnsupportedKind("unknown kind");
}

std::uint64_t Algebra::rank_of(const Element& x) const {
  require_owned(x);
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::quotient:
    case AlgebraKind::lukasiewicz_chain:
      return x.rank_value();
    case AlgebraKind::divisible_rational_chain:
      throw UnsupportedKind("divisible rational chain cannot be enumerated");
    case AlgebraKind::product: {
      const auto& fs = product_->factors;
      const auto& t = x.tuple_value();
      std::uint64_t r = 0;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        r = r * fs[i]->size() + fs[i]->rank_of(t[i]);
      }
      return r;
    }
    case AlgebraKind::gamma_interval: {
      if (!gamma_->carrier) throw UnsupportedKind("gamma interval is infinite");
      const auto& group = gamma_->group;
      for (std::size_t i = 0; i < gamma_->carrier->size(); ++i) {
        if (group->equal(*(*gamma_->carrier)[i], x.group_value())) return i;
      }
      throw InvalidParameter("group element not in the interval carrier");
    }
  }
  throw UnsupportedKind("unknown kind");
}

std::vector<Element> Algebra::carrier() const {
  const std::uint64_t m = size();
  std::vector<Element> out;
  out.reserve(m);
  for (std::uint64_t r = 0; r < m; ++r) out.push_back(element_at(r));
  return out;
}

std::uint32_t Algebra::chain_n() const {
  if (kind_ != AlgebraKind::lukasiewicz_chain) throw UnsupportedKind("not a chain");
  return chain_n_;
}

const std::vector<AlgebraPtr>& Algebra::factors() const {
  if (kind_ != AlgebraKind::product) throw UnsupportedKind("not a product");
  return product_->factors;
}

const AlgebraPtr& Algebra::quotient_base() const {
  if (kind_ != AlgebraKind::quotient) throw UnsupportedKind("not a quotient");
  return quotient_->base;
}

const std::vector<std::uint32_t>& Algebra::quotient_ideal() const {
  if (kind_ != AlgebraKind::quotient) throw UnsupportedKind("not a quotient");
  return quotient_->ideal_members;
}

std::uint32_t Algebra::quotient_class_of(std::uint32_t base_rank) const {
  if (kind_ != AlgebraKind::quotient) throw UnsupportedKind("not a quotient");
  return quotient_->class_of_base.at(base_rank);
}

Element Algebra::quotient_class_element(const Element& base_element) const {
  if (kind_ != AlgebraKind::quotient) throw UnsupportedKind("not a quotient");
  quotient_->base->require_owned(base_element);
  const auto r = quotient_->base->rank_of(base_element);
  return mk(quotient_->class_of_base.at(static_cast<std::uint32_t>(r)));
}

Element Algebra::quotient_least_rep(const Element& class_element) const {
  if (kind_ != AlgebraKind::quotient) throw UnsupportedKind("not a quotient");
  require_owned(class_element);
  return quotient_->base->element_at(quotient_->least_rep.at(class_element.rank_value()));
}

const GroupPtr& Algebra::gamma_group() const {
  if (kind_ != AlgebraKind::gamma_interval) throw UnsupportedKind("not a gamma interval");
  return gamma_->group;
}

Element Algebra::element_from_rational(const Rational& r) const {
  if (r < Rational::zero() || r > Rational::one()) {
    throw InvalidParameter("element value outside [0,1]: " + r.str());
  }
  if (kind_ == AlgebraKind::divisible_rational_chain) return mk(r);
  if (kind_ == AlgebraKind::lukasiewicz_chain) {
    const Rational scaled = r * Rational(long(chain_n_));
    if (!scaled.is_integer()) {
      throw InvalidParameter("value " + r.str() + " is not a multiple of 1/" +
                             std::to_string(chain_n_));
    }
    return mk(static_cast<std::uint32_t>(scaled.num().get_ui()));
  }
  throw UnsupportedKind("rational element values only apply to chains");
}

Element Algebra::element_from_tuple(Element::Tuple parts) const {
  if (kind_ != AlgebraKind::product) throw UnsupportedKind("not a product");
  const auto& fs = product_->factors;
  if (parts.size() != fs.size()) throw InvalidParameter("tuple arity mismatch");
  for (std::size_t i = 0; i < fs.size(); ++i) fs[i]->require_owned(parts[i]);
  return mk(std::move(parts));
}

Element Algebra::element_from_group(const GroupElement& g) const {
  if (kind_ != AlgebraKind::gamma_interval) throw UnsupportedKind("not a gamma interval");
  gamma_->group->require_owned(g);
  if (!gamma_->group->in_interval(g)) {
    throw InvalidParameter("group element outside [0,u]");
  }
  return mk(std::make_shared<const GroupElement>(g));
}

void Algebra::require_owned(const Element& x) const {
  if (x.owner().get() != this) {
    throw ForeignElement("element belongs to a different algebra");
  }
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

Element Algebra::oplus(const Element& x, const Element& y) const {
  require_owned(x);
  require_owned(y);
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::quotient: {
      const auto& t = table();
      return mk(t.oplus[std::size_t(x.rank_value()) * t.size + y.rank_value()]);
    }
    case AlgebraKind::lukasiewicz_chain:
      return mk(std::min(x.rank_value() + y.rank_value(), chain_n_));
    case AlgebraKind::divisible_rational_chain:
      return mk(min(x.rational_value() + y.rational_value(), Rational::one()));
    case AlgebraKind::product: {
      const auto& fs = product_->factors;
      const auto& xt = x.tuple_value();
      const auto& yt = y.tuple_value();
      Element::Tuple t;
      t.reserve(fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) t.push_back(fs[i]->oplus(xt[i], yt[i]));
      return mk(std::move(t));
    }
    case AlgebraKind::gamma_interval: {
      const auto& g = gamma_->group;
      auto sum = g->add(x.group_value(), y.group_value());
      return mk(std::make_shared<const GroupElement>(g->meet(sum, g->unit())));
    }
  }
  throw UnsupportedKind("unknown kind");
}

Element Algebra::neg(const Element& x) const {
  require_owned(x);
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::quotient:
      return mk(table().neg[x.rank_value()]);
    case AlgebraKind::lukasiewicz_chain:
      return mk(chain_n_ - x.rank_value());
    case AlgebraKind::divisible_rational_chain:
      return mk(Rational::one() - x.rational_value());
    case AlgebraKind::product: {
      const auto& fs = product_->factors;
      const auto& xt = x.tuple_value();
      Element::Tuple t;
      t.reserve(fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) t.push_back(fs[i]->neg(xt[i]));
      return mk(std::move(t));
    }
    case AlgebraKind::gamma_interval: {
      const auto& g = gamma_->group;
      return mk(std::make_shared<const GroupElement>(
          g->subtract(g->unit(), x.group_value())));
    }
  }
  throw UnsupportedKind("unknown kind");
}

Element Algebra::odot(const Element& x, const Element& y) const {
  return neg(oplus(neg(x), neg(y)));
}

Element Algebra::ominus(const Element& x, const Element& y) const {
  return neg(oplus(neg(x), y));
}

Element Algebra::join(const Element& x, const Element& y) const {
  return oplus(ominus(x, y), y);
}

Element Algebra::meet(const Element& x, const Element& y) const {
  return odot(x, oplus(neg(x), y));
}

bool Algebra::leq(const Element& x, const Element& y) const {
  return equal(oplus(neg(x), y), one());
}

Element Algebra::binary(BinaryOp op, const Element& x, const Element& y) const {
  switch (op) {
    case BinaryOp::oplus: return oplus(x, y);
    case BinaryOp::odot: return odot(x, y);
    case BinaryOp::ominus: return ominus(x, y);
    case BinaryOp::join: return join(x, y);
    case BinaryOp::meet: return meet(x, y);
  }
  throw InvalidParameter("unknown binary operation");
}

bool Algebra::equal(const Element& x, const Element& y) const {
  require_owned(x);
  require_owned(y);
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::quotient:
    case AlgebraKind::lukasiewicz_chain:
      return x.rank_value() == y.rank_value();
    case AlgebraKind::divisible_rational_chain:
      return x.rational_value() == y.rational_value();
    case AlgebraKind::product: {
      const auto& fs = product_->factors;
      const auto& xt = x.tuple_value();
      const auto& yt = y.tuple_value();
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!fs[i]->equal(xt[i], yt[i])) return false;
      }
      return true;
    }
    case AlgebraKind::gamma_interval:
      return gamma_->group->equal(x.group_value(), y.group_value());
  }
  throw UnsupportedKind("unknown kind");
}

Element Algebra::nat_sum(std::uint64_t n, const Element& x) const {
  require_owned(x);
  Element acc = zero();
  for (std::uint64_t i = 0; i < n; ++i) {
    Element next = oplus(acc, x);
    if (equal(next, acc)) return next;  // stabilised, further terms equal
    acc = std::move(next);
  }
  return acc;
}

Element Algebra::nat_power(std::uint64_t n, const Element& x) const {
  require_owned(x);
  Element acc = one();
  for (std::uint64_t i = 0; i < n; ++i) {
    Element next = odot(acc, x);
    if (equal(next, acc)) return next;
    acc = std::move(next);
  }
  return acc;
}

std::string Algebra::label(const Element& x) const {
  require_owned(x);
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::quotient:
      return table().labels[x.rank_value()];
    case AlgebraKind::lukasiewicz_chain:
      return Rational(long(x.rank_value()), long(chain_n_)).str();
    case AlgebraKind::divisible_rational_chain:
      return x.rational_value().str();
    case AlgebraKind::product: {
      const auto& fs = product_->factors;
      const auto& xt = x.tuple_value();
      std::string out = "(";
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += ",";
        out += fs[i]->label(xt[i]);
      }
      return out + ")";
    }
    case AlgebraKind::gamma_interval:
      return gamma_->group->element_str(x.group_value());
  }
  throw UnsupportedKind("unknown kind");
}

std::string Algebra::describe() const {
  switch (kind_) {
    case AlgebraKind::finite_table:
      return "table(" + std::to_string(table().size) + ")";
    case AlgebraKind::lukasiewicz_chain:
      return "chain(" + std::to_string(chain_n_ + 1) + ")";
    case AlgebraKind::divisible_rational_chain:
      return "divisible-chain";
    case AlgebraKind::product: {
      std::string out = "product[";
      for (std::size_t i = 0; i < product_->factors.size(); ++i) {
        if (i) out += " x ";
        out += product_->factors[i]->describe();
      }
      return out + "]";
    }
    case AlgebraKind::quotient:
      return "quotient(" + quotient_->base->describe() + " / ideal of " +
             std::to_string(quotient_->ideal_members.size()) + ")";
    case AlgebraKind::gamma_interval:
      return "gamma[" + gamma_->group->describe() + "]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

AxiomReport Algebra::exhaustive_law_report() const {
  // Generic exhaustive evaluation through the element interface so every
  // representation is checked against the same laws.
  const std::uint64_t m = size();
  auto carrier_v = carrier();
  AxiomReport report;
  report.mode = AxiomReport::Mode::exhaustive;
  report.basis = "exhaustive evaluation over " + std::to_string(m) + " elements";

  auto fail = [&](const std::string& law, std::vector<std::uint64_t> ranks,
                  const std::string& detail) {
    report.pass = false;
    report.law = law;
    for (auto r : ranks) report.witness.push_back(label(carrier_v[r]));
    report.detail = detail;
  };

  for (std::uint64_t x = 0; x < m; ++x) {
    if (!equal(neg(neg(carrier_v[x])), carrier_v[x])) {
      fail("axiom (i)", {x}, "x'' != x");
      return report;
    }
  }
  for (std::uint64_t x = 0; x < m; ++x) {
    if (!is_one(oplus(carrier_v[x], one()))) {
      fail("axiom (ii)", {x}, "x + 1 != 1");
      return report;
    }
  }
  for (std::uint64_t x = 0; x < m; ++x) {
    if (!equal(oplus(carrier_v[x], zero()), carrier_v[x])) {
      fail("monoid neutral", {x}, "x + 0 != x");
      return report;
    }
  }
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = 0; y < m; ++y) {
      if (!equal(oplus(carrier_v[x], carrier_v[y]), oplus(carrier_v[y], carrier_v[x]))) {
        fail("monoid commutativity", {x, y}, "x + y != y + x");
        return report;
      }
    }
  }
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = 0; y < m; ++y) {
      const Element lhs = oplus(carrier_v[x], neg(oplus(carrier_v[x], neg(carrier_v[y]))));
      const Element rhs = oplus(carrier_v[y], neg(oplus(carrier_v[y], neg(carrier_v[x]))));
      if (!equal(lhs, rhs)) {
        fail("axiom (iii)", {x, y}, "x + (x + y')' != y + (y + x')'");
        return report;
      }
    }
  }
  if (m <= 128) {
    for (std::uint64_t x = 0; x < m; ++x) {
      for (std::uint64_t y = 0; y < m; ++y) {
        for (std::uint64_t z = 0; z < m; ++z) {
          if (!equal(oplus(oplus(carrier_v[x], carrier_v[y]), carrier_v[z]),
                     oplus(carrier_v[x], oplus(carrier_v[y], carrier_v[z])))) {
            fail("monoid associativity", {x, y, z}, "(x+y)+z != x+(y+z)");
            return report;
          }
        }
      }
    }
  } else {
    report.basis += "; associativity certified structurally past 128 elements";
  }
  report.pass = true;
  return report;
}

AxiomReport Algebra::verify_axioms() const {
  switch (kind_) {
    case AlgebraKind::finite_table:
    case AlgebraKind::quotient:
    case AlgebraKind::lukasiewicz_chain:
      return exhaustive_law_report();
    case AlgebraKind::divisible_rational_chain: {
      AxiomReport r;
      r.pass = true;
      r.mode = AxiomReport::Mode::structural;
      r.basis = "interval [0,1] of the rationals under truncated addition";
      return r;
    }
    case AlgebraKind::product: {
      for (const auto& f : product_->factors) {
        auto sub = f->verify_axioms();
        if (!sub.pass) return sub;
      }
      if (is_finite() && size() <= 512) return exhaustive_law_report();
      AxiomReport r;
      r.pass = true;
      r.mode = AxiomReport::Mode::structural;
      r.basis = "componentwise product of verified factors";
      return r;
    }
    case AlgebraKind::gamma_interval: {
      if (is_finite() && size() <= 512) return exhaustive_law_report();
      AxiomReport r;
      r.pass = true;
      r.mode = AxiomReport::Mode::structural;
      r.basis = "unit interval of a certified unital l-group";
      return r;
    }
  }
  throw UnsupportedKind("unknown kind");
}

bool Algebra::is_linear_structural() const {
  return kind_ == AlgebraKind::lukasiewicz_chain ||
         kind_ == AlgebraKind::divisible_rational_chain;
}

bool Algebra::is_boolean_law() const {
  const std::uint64_t m = size();
  for (std::uint64_t r = 0; r < m; ++r) {
    const Element x = element_at(r);
    if (!equal(oplus(x, x), x)) return false;
  }
  return true;
}

AlgebraPtr Algebra::materialize() const {
  const std::uint64_t m = size();
  if (m > kMaterializeCap) {
    throw TooLarge("materialisation refused above " + std::to_string(kMaterializeCap) +
                   " elements");
  }
  auto carrier_v = carrier();
  std::vector<std::uint32_t> op(m * m), ng(m);
  std::vector<std::string> labels(m);
  for (std::uint64_t x = 0; x < m; ++x) {
    labels[x] = label(carrier_v[x]);
    ng[x] = static_cast<std::uint32_t>(rank_of(neg(carrier_v[x])));
    for (std::uint64_t y = 0; y < m; ++y) {
      op[x * m + y] = static_cast<std::uint32_t>(rank_of(oplus(carrier_v[x], carrier_v[y])));
    }
  }
  // Faithful copy of an already verified algebra in canonical order; the
  // explicit-table factory caps and rechecks are for untrusted input only.
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->kind_ = AlgebraKind::finite_table;
  a->table_ = FiniteTable{static_cast<std::uint32_t>(m), std::move(op), std::move(ng),
                          std::move(labels)};
  return a;
}

}  // namespace mvkit
