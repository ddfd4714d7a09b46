// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#include "mvkit/morphisms.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace mvkit {

namespace {

struct RankTables {
  std::uint32_t size = 0;
  std::vector<std::uint32_t> oplus;  // row-major
  std::vector<std::uint32_t> neg;

  static RankTables of(const AlgebraPtr& a) {
    RankTables t;
    t.size = static_cast<std::uint32_t>(a->size());
    t.neg.resize(t.size);
    t.oplus.resize(std::size_t(t.size) * t.size);
    auto carrier = a->carrier();
    for (std::uint32_t x = 0; x < t.size; ++x) {
      t.neg[x] = static_cast<std::uint32_t>(a->rank_of(a->neg(carrier[x])));
      for (std::uint32_t y = 0; y < t.size; ++y) {
        t.oplus[std::size_t(x) * t.size + y] =
            static_cast<std::uint32_t>(a->rank_of(a->oplus(carrier[x], carrier[y])));
      }
    }
    return t;
  }

  std::uint32_t op(std::uint32_t x, std::uint32_t y) const {
    return oplus[std::size_t(x) * size + y];
  }
};

// Greedy minimal generating sequence: repeatedly add the least element not
// yet generated. Closure under + and ' from {0,1}.
std::vector<std::uint32_t> greedy_generators(const RankTables& t) {
  std::vector<bool> in(t.size, false);
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t x = 0; x < t.size; ++x) {
        if (!in[x]) continue;
        if (!in[t.neg[x]]) {
          in[t.neg[x]] = true;
          grew = true;
        }
        for (std::uint32_t y = 0; y <= x; ++y) {
          if (!in[y]) continue;
          const std::uint32_t s = t.op(x, y);
          if (!in[s]) {
            in[s] = true;
            grew = true;
          }
        }
      }
    }
  };
  in[0] = true;
  in[t.size - 1] = true;
  close();
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x = 0; x < t.size; ++x) {
    if (!in[x]) {
      gens.push_back(x);
      in[x] = true;
      close();
    }
  }
  return gens;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hom enumeration
// ---------------------------------------------------------------------------

std::vector<Hom> enumerate_homs(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!a->is_finite() || !b->is_finite()) {
    throw UnsupportedKind("hom enumeration needs finite algebras");
  }
  if (a->size() > 64) throw TooLarge("hom enumeration capped at |source| <= 64");
  if (b->size() > 256) throw TooLarge("hom enumeration capped at |target| <= 256");

  const RankTables ta = RankTables::of(a);
  const RankTables tb = RankTables::of(b);
  const std::vector<std::uint32_t> gens = greedy_generators(ta);
  const std::uint32_t kUnset = tb.size;

  std::vector<Hom> out;
  std::vector<std::uint32_t> map(ta.size, kUnset);
  map[0] = 0;
  map[ta.size - 1] = tb.size - 1;

  // Saturate the partial map under the operations; detects conflicts early
  // and, once every generator is placed, defines the map on the whole
  // carrier with the hom property enforced on every pair.
  auto saturate = [&](std::vector<std::uint32_t>& f) -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t x = 0; x < ta.size; ++x) {
        if (f[x] == kUnset) continue;
        const std::uint32_t nx = ta.neg[x];
        const std::uint32_t want = tb.neg[f[x]];
        if (f[nx] == kUnset) {
          f[nx] = want;
          changed = true;
        } else if (f[nx] != want) {
          return false;
        }
        for (std::uint32_t y = 0; y <= x; ++y) {
          if (f[y] == kUnset) continue;
          const std::uint32_t s = ta.op(x, y);
          const std::uint32_t ws = tb.op(f[x], f[y]);
          if (f[s] == kUnset) {
            f[s] = ws;
            changed = true;
          } else if (f[s] != ws) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::function<void(std::size_t, std::vector<std::uint32_t>)> assign =
      [&](std::size_t gi, std::vector<std::uint32_t> f) {
        if (!saturate(f)) return;
        while (gi < gens.size() && f[gens[gi]] != kUnset) ++gi;
        if (gi == gens.size()) {
          for (auto v : f) {
            if (v == kUnset) return;  // cannot happen: gens generate
          }
          std::vector<Element> images;
          images.reserve(ta.size);
          for (std::uint32_t x = 0; x < ta.size; ++x) images.push_back(b->element_at(f[x]));
          out.push_back(Hom::unchecked(a, b, std::move(images)));
          return;
        }
        for (std::uint32_t c = 0; c < tb.size; ++c) {
          auto g = f;
          g[gens[gi]] = c;
          assign(gi + 1, std::move(g));
        }
      };
  assign(0, map);
  return out;
}

HomClassification classify_hom(const Hom& f) {
  HomClassification c{f.injective(), f.surjective(),
                      Ideal::zero_ideal(f.source())};
  std::vector<std::uint32_t> kernel_ranks;
  for (std::uint32_t r = 0; r < f.images().size(); ++r) {
    if (f.target()->is_zero(f.apply_rank(r))) kernel_ranks.push_back(r);
  }
  c.kernel = Ideal::of_members(f.source(), std::move(kernel_ranks));
  return c;
}

// ---------------------------------------------------------------------------
// Catalog generation: exhaustive table search
// ---------------------------------------------------------------------------

namespace {

// Serialized canonical key: lexicographically least (neg, oplus) over all
// relabelings fixing 0 and 1 (which every isomorphism must fix).
std::vector<std::uint32_t> table_key(std::uint32_t m, const std::vector<std::uint32_t>& neg,
                                     const std::vector<std::uint32_t>& oplus) {
  std::vector<std::uint32_t> key;
  key.reserve(m + m * m);
  key.insert(key.end(), neg.begin(), neg.end());
  key.insert(key.end(), oplus.begin(), oplus.end());
  return key;
}

std::vector<std::uint32_t> canonical_key(std::uint32_t m, const std::vector<std::uint32_t>& neg,
                                         const std::vector<std::uint32_t>& oplus) {
  if (m <= 2) return table_key(m, neg, oplus);
  std::vector<std::uint32_t> middle;  // elements 1..m-2 to permute
  for (std::uint32_t x = 1; x + 1 < m; ++x) middle.push_back(x);

  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> perm(m);
  std::vector<std::uint32_t> arrangement = middle;
  do {
    perm[0] = 0;
    perm[m - 1] = m - 1;
    for (std::size_t i = 0; i < arrangement.size(); ++i) {
      perm[middle[i]] = arrangement[i];
    }
    std::vector<std::uint32_t> pneg(m), pop(std::size_t(m) * m);
    for (std::uint32_t x = 0; x < m; ++x) {
      pneg[perm[x]] = perm[neg[x]];
      for (std::uint32_t y = 0; y < m; ++y) {
        pop[std::size_t(perm[x]) * m + perm[y]] = perm[oplus[std::size_t(x) * m + y]];
      }
    }
    auto key = table_key(m, pneg, pop);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return best;
}

// Backtracking search over the free + entries of a fixed involution. Sound
// pruning only: monoid laws, axioms, and theorems valid in every MV-algebra
// (x + x' = 1, antisymmetry of the derived order, x + y = 0 only at 0).
struct TableSearch {
  std::uint32_t m;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> op;  // row-major, kUnset for unknown
  std::uint32_t kUnset;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells;
  std::set<std::vector<std::uint32_t>>* found;

  std::uint32_t get(std::uint32_t x, std::uint32_t y) const {
    return op[std::size_t(x) * m + y];
  }
  void set(std::uint32_t x, std::uint32_t y, std::uint32_t v) {
    op[std::size_t(x) * m + y] = v;
    op[std::size_t(y) * m + x] = v;
  }

  bool consistent_after(std::uint32_t cx, std::uint32_t cy) {
    // Associativity on triples that involve the new cell and are complete.
    for (std::uint32_t a = 0; a < m; ++a) {
      for (std::uint32_t b = 0; b < m; ++b) {
        const std::uint32_t ab = get(a, b);
        if (ab == kUnset) continue;
        for (std::uint32_t c = 0; c < m; ++c) {
          const std::uint32_t bc = get(b, c);
          if (bc == kUnset) continue;
          const std::uint32_t left = get(ab, c);
          const std::uint32_t right = get(a, bc);
          if (left == kUnset || right == kUnset) continue;
          const bool touches = (a == cx && b == cy) || (a == cy && b == cx) ||
                               (b == cx && c == cy) || (b == cy && c == cx) ||
                               (ab == cx && c == cy) || (ab == cy && c == cx) ||
                               (a == cx && bc == cy) || (a == cy && bc == cx);
          if (touches && left != right) return false;
        }
      }
    }
    // Axiom (iii) on evaluable pairs.
    for (std::uint32_t x = 0; x < m; ++x) {
      for (std::uint32_t y = 0; y < m; ++y) {
        const std::uint32_t xny = get(x, neg[y]);
        const std::uint32_t ynx = get(y, neg[x]);
        if (xny == kUnset || ynx == kUnset) continue;
        const std::uint32_t lhs = get(x, neg[xny]);
        const std::uint32_t rhs = get(y, neg[ynx]);
        if (lhs == kUnset || rhs == kUnset) continue;
        if (lhs != rhs) return false;
      }
    }
    // Antisymmetry of x <= y iff x' + y = 1.
    for (std::uint32_t x = 0; x < m; ++x) {
      for (std::uint32_t y = x + 1; y < m; ++y) {
        const std::uint32_t a = get(neg[x], y);
        const std::uint32_t b = get(neg[y], x);
        if (a == kUnset || b == kUnset) continue;
        if (a == m - 1 && b == m - 1) return false;
      }
    }
    return true;
  }

  void run(std::size_t cell) {
    if (cell == free_cells.size()) {
      if (!first_complete_failure()) {
        found->insert(canonical_key(m, neg, op));
      }
      return;
    }
    const auto [x, y] = free_cells[cell];
    // x + y = 0 forces x = y = 0, so nonzero operands get nonzero sums.
    for (std::uint32_t v = 1; v < m; ++v) {
      set(x, y, v);
      if (consistent_after(x, y)) run(cell + 1);
    }
    set(x, y, kUnset);
  }

  // Full check at a leaf; incremental pruning is an optimisation only.
  bool first_complete_failure() const {
    auto get2 = [&](std::uint32_t x, std::uint32_t y) { return get(x, y); };
    for (std::uint32_t x = 0; x < m; ++x) {
      if (neg[neg[x]] != x) return true;
      if (get2(x, m - 1) != m - 1) return true;
      if (get2(x, 0) != x) return true;
    }
    for (std::uint32_t x = 0; x < m; ++x) {
      for (std::uint32_t y = 0; y < m; ++y) {
        if (get2(x, y) != get2(y, x)) return true;
        const std::uint32_t lhs = get2(x, neg[get2(x, neg[y])]);
        const std::uint32_t rhs = get2(y, neg[get2(y, neg[x])]);
        if (lhs != rhs) return true;
        for (std::uint32_t z = 0; z < m; ++z) {
          if (get2(get2(x, y), z) != get2(x, get2(y, z))) return true;
        }
      }
    }
    return false;
  }
};

void enumerate_involutions(std::uint32_t m, std::vector<std::uint32_t>& neg,
                           std::vector<bool>& used, std::uint32_t next,
                           const std::function<void()>& emit) {
  while (next < m && used[next]) ++next;
  if (next >= m) {
    emit();
    return;
  }
  used[next] = true;
  // fixed point
  neg[next] = next;
  enumerate_involutions(m, neg, used, next + 1, emit);
  // paired with a later element
  for (std::uint32_t other = next + 1; other < m; ++other) {
    if (used[other]) continue;
    used[other] = true;
    neg[next] = other;
    neg[other] = next;
    enumerate_involutions(m, neg, used, next + 1, emit);
    used[other] = false;
  }
  used[next] = false;
}

std::vector<std::vector<std::uint32_t>> search_size(std::uint32_t m) {
  std::set<std::vector<std::uint32_t>> found;
  if (m == 1) {
    found.insert(table_key(1, {0}, {0}));
  } else {
    std::vector<std::uint32_t> neg(m, 0);
    std::vector<bool> used(m, false);
    neg[0] = m - 1;
    neg[m - 1] = 0;
    used[0] = used[m - 1] = true;
    enumerate_involutions(m, neg, used, 1, [&]() {
      TableSearch s;
      s.m = m;
      s.neg = neg;
      s.kUnset = m;
      s.op.assign(std::size_t(m) * m, s.kUnset);
      s.found = &found;
      for (std::uint32_t y = 0; y < m; ++y) {
        s.set(0, y, y);
        s.set(m - 1, y, m - 1);
      }
      for (std::uint32_t x = 1; x + 1 < m; ++x) {
        if (s.get(x, neg[x]) == s.kUnset) s.set(x, neg[x], m - 1);
      }
      for (std::uint32_t x = 1; x + 1 < m; ++x) {
        for (std::uint32_t y = x; y + 1 < m; ++y) {
          if (s.get(x, y) == s.kUnset) s.free_cells.emplace_back(x, y);
        }
      }
      s.run(0);
    });
  }
  return {found.begin(), found.end()};
}

AlgebraPtr algebra_from_key(std::uint32_t m, const std::vector<std::uint32_t>& key) {
  std::vector<std::uint32_t> neg(key.begin(), key.begin() + m);
  std::vector<std::uint32_t> oplus(key.begin() + m, key.end());
  if (m == 1) return Algebra::trivial();
  return Algebra::from_table(m, oplus, neg, 0, m - 1);
}

}  // namespace

SmallAlgebraCatalog SmallAlgebraCatalog::generate(std::uint32_t max_size) {
  if (max_size == 0 || max_size > kMaxSupported) {
    throw TooLarge("catalog supported up to size " + std::to_string(kMaxSupported));
  }
  SmallAlgebraCatalog c;
  c.max_size_ = max_size;
  for (std::uint32_t m = 1; m <= max_size; ++m) {
    for (const auto& key : search_size(m)) {
      c.algebras_.push_back(algebra_from_key(m, key));
    }
  }
  return c;
}

void SmallAlgebraCatalog::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw MvError("cannot write catalog file: " + path);
  out << "mvkit-catalog v1\n";
  out << "max-size " << max_size_ << "\n";
  for (const auto& a : algebras_) {
    const RankTables t = RankTables::of(a);
    out << "algebra " << t.size << "\nneg";
    for (auto v : t.neg) out << " " << v;
    out << "\noplus";
    for (auto v : t.oplus) out << " " << v;
    out << "\n";
  }
}

std::optional<SmallAlgebraCatalog> SmallAlgebraCatalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header) || header != "mvkit-catalog v1") return std::nullopt;
  std::string word;
  std::uint32_t max_size = 0;
  if (!(in >> word >> max_size) || word != "max-size") return std::nullopt;

  SmallAlgebraCatalog c;
  c.max_size_ = max_size;
  while (in >> word) {
    if (word != "algebra") return std::nullopt;
    std::uint32_t m = 0;
    if (!(in >> m) || m == 0 || m > kMaxSupported) return std::nullopt;
    std::vector<std::uint32_t> neg(m), oplus(std::size_t(m) * m);
    if (!(in >> word) || word != "neg") return std::nullopt;
    for (auto& v : neg) {
      if (!(in >> v)) return std::nullopt;
    }
    if (!(in >> word) || word != "oplus") return std::nullopt;
    for (auto& v : oplus) {
      if (!(in >> v)) return std::nullopt;
    }
    try {
      if (m == 1) {
        c.algebras_.push_back(Algebra::trivial());
      } else {
        c.algebras_.push_back(Algebra::from_table(m, oplus, neg, 0, m - 1));
      }
    } catch (const MvError&) {
      return std::nullopt;  // corrupted cache; caller regenerates
    }
  }
  return c;
}

SmallAlgebraCatalog SmallAlgebraCatalog::ensure(const std::string& path,
                                                std::uint32_t max_size) {
  if (auto cached = load(path)) {
    if (cached->max_size() >= max_size) return *cached;
  }
  SmallAlgebraCatalog fresh = generate(max_size);
  fresh.save(path);
  return fresh;
}

// ---------------------------------------------------------------------------
// Epi evidence
// ---------------------------------------------------------------------------

EpiEvidence bounded_epi_oracle(const Hom& f, std::uint32_t k,
                               const SmallAlgebraCatalog& catalog) {
  if (k == 0 || k > SmallAlgebraCatalog::kMaxSupported) {
    throw TooLarge("cotarget bound must be between 1 and 8");
  }
  if (catalog.max_size() < k) {
    throw InvalidParameter("catalog does not cover the requested bound");
  }
  if (!f.source()->is_finite() || !f.target()->is_finite()) {
    throw UnsupportedKind("the bounded oracle works on finite algebras");
  }
  if (f.surjective()) {
    EpiEvidence e;
    e.kind = EpiEvidence::Kind::certified;
    e.reason = "surjective";
    e.bound = k;
    return e;
  }

  const std::uint64_t src = f.source()->size();
  for (const auto& c : catalog.algebras()) {
    if (c->size() > k) continue;
    const std::vector<Hom> homs = enumerate_homs(f.target(), c);
    for (std::size_t i = 0; i < homs.size(); ++i) {
      for (std::size_t j = i + 1; j < homs.size(); ++j) {
        bool agree_on_image = true;
        for (std::uint64_t x = 0; x < src && agree_on_image; ++x) {
          const Element mid = f.apply_rank(x);
          if (!c->equal(homs[i].apply(mid), homs[j].apply(mid))) {
            agree_on_image = false;
          }
        }
        if (agree_on_image) {
          EpiEvidence e;
          e.kind = EpiEvidence::Kind::not_epi;
          e.bound = k;
          e.cotarget = c;
          e.alpha = homs[i];
          e.beta = homs[j];
          return e;
        }
      }
    }
  }
  EpiEvidence e;
  e.kind = EpiEvidence::Kind::unknown_up_to;
  e.bound = k;
  return e;
}

EpiEvidence bounded_epi_oracle(const Hom& f, std::uint32_t k) {
  static const SmallAlgebraCatalog catalog =
      SmallAlgebraCatalog::generate(SmallAlgebraCatalog::kMaxSupported);
  return bounded_epi_oracle(f, k, catalog);
}

Hom chain_inclusion(std::uint32_t m, std::uint32_t n) {
  if (m == 0 || n == 0) throw InvalidParameter("chain parameters must be >= 1");
  if (n % m != 0) {
    throw NotASubchain("the (" + std::to_string(m + 1) + ")-chain is not a subchain of the (" +
                       std::to_string(n + 1) + ")-chain");
  }
  AlgebraPtr small = Algebra::lukasiewicz_chain(m);
  AlgebraPtr large = Algebra::lukasiewicz_chain(n);
  const std::uint32_t step = n / m;
  std::vector<Element> images;
  for (std::uint32_t i = 0; i <= m; ++i) images.push_back(large->element_at(i * step));
  return Hom::unchecked(small, large, std::move(images));
}

EpiEvidence chain_inclusion_epi(std::uint32_t m, std::uint32_t n) {
  (void)chain_inclusion(m, n);  // validates m | n, raising NotASubchain otherwise
  EpiEvidence e;
  e.kind = EpiEvidence::Kind::certified;
  e.reason =
      "chain inclusion, torsion-free uniqueness: two homs agreeing on the subchain "
      "agree everywhere because k.x = k.y forces x = y in the enveloping group";
  return e;
}

}  // namespace mvkit
