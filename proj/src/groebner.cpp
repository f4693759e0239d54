#include "lmflat/groebner.hpp"

#include "lmflat/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace lmflat::poly {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::is_unit_ideal() const noexcept {
  return basis_.size() == 1 && basis_.front().is_constant() && !basis_.front().is_zero();
}

bool GroebnerBasis::is_standard(const Monomial& m) const noexcept {
  for (const auto& g : basis_)
    if (g.leading_monomial().divides(m)) return false;
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial& lf = f.leading_monomial();
  const Monomial& lg = g.leading_monomial();
  Monomial l = lf.lcm(lg);
  const PrimeField& F = f.ring()->field();
  Polynomial a = f.times_term(F.inv(f.leading_term().coef), lf.quotient_of(l));
  return a.add_scaled(F.neg(F.inv(g.leading_term().coef)), lg.quotient_of(l), g);
}

namespace {

// Merges a[a_start..] with c*m*b[b_start..]; both inputs sorted descending.
std::vector<Term> merge_tail(const Ring& R, const std::vector<Term>& a, std::size_t a_start,
                             PrimeField::Element c, const Monomial& m, const std::vector<Term>& b,
                             std::size_t b_start) {
  const PrimeField& F = R.field();
  std::vector<Term> out;
  out.reserve(a.size() - a_start + b.size() - b_start);
  std::size_t i = a_start, j = b_start;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial shifted = b[j].mono * m;
    while (i < a.size() && R.compare(a[i].mono, shifted) > 0) out.push_back(a[i++]);
    if (i < a.size() && a[i].mono == shifted) {
      auto v = F.add(a[i].coef, F.mul(c, b[j].coef));
      if (v != 0) out.push_back({v, std::move(shifted)});
      ++i;
    } else {
      out.push_back({F.mul(c, b[j].coef), std::move(shifted)});
    }
    ++j;
  }
  return out;
}

// Reduces f fully against nonzero divisors; the first divisor whose leading
// monomial divides the current leading term is used.
Polynomial reduce_impl(const Polynomial& f, const std::vector<const Polynomial*>& divisors) {
  const RingPtr& ring = f.ring();
  const PrimeField& F = ring->field();
  std::vector<Term> remainder;
  std::vector<Term> cur = f.terms();
  std::size_t start = 0;
  while (start < cur.size()) {
    const Term& lt = cur[start];
    const Polynomial* hit = nullptr;
    for (const Polynomial* g : divisors) {
      if (g->leading_monomial().divides(lt.mono)) {
        hit = g;
        break;
      }
    }
    if (hit) {
      auto c = F.neg(F.mul(lt.coef, F.inv(hit->leading_term().coef)));
      Monomial q = hit->leading_monomial().quotient_of(lt.mono);
      cur = merge_tail(*ring, cur, start + 1, c, q, hit->terms(), 1);
      start = 0;
    } else {
      remainder.push_back(lt);
      ++start;
    }
  }
  // remainder is already sorted descending with nonzero coefficients.
  return Polynomial::from_terms(ring, std::move(remainder));
}

struct Pair {
  std::size_t i, j;  // i < j, indices into the polynomial store
  Monomial lcm;
};

} // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& g : divisors) {
    if (g.ring() != f.ring() && !(*g.ring() == *f.ring()))
      throw std::invalid_argument("ring mismatch");
    if (!g.is_zero()) ptrs.push_back(&g);
  }
  return reduce_impl(f, ptrs);
}

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators) {
  if (generators.empty()) {
    GroebnerBasis empty = buchberger(std::vector<Polynomial>{Polynomial(ring)});
    return empty;
  }
  return buchberger(std::move(generators));
}

GroebnerBasis buchberger(std::vector<Polynomial> generators, MonomialOrder order) {
  if (generators.empty()) throw std::invalid_argument("no generators and no ring");
  const Ring& R = *generators.front().ring();
  auto ring = std::make_shared<const Ring>(R.names(), R.field(), order);
  for (auto& g : generators) g = g.reinterpret(ring);
  return buchberger(std::move(generators));
}

GroebnerBasis buchberger(std::vector<Polynomial> generators) {
  if (generators.empty()) throw std::invalid_argument("no generators and no ring");
  RingPtr ring = generators.front().ring();
  for (const auto& g : generators)
    if (g.ring() != ring && !(*g.ring() == *ring)) throw std::invalid_argument("ring mismatch");

  GroebnerBasis result(ring);
  result.generators_ = generators;

  std::vector<Polynomial> store;   // every basis element ever added
  std::vector<std::size_t> active; // indices into store forming G
  std::vector<Pair> pairs;

  auto lm = [&](std::size_t k) -> const Monomial& { return store[k].leading_monomial(); };

  // Gebauer-Moeller update with new element h = store.back().
  auto update = [&]() {
    const std::size_t h = store.size() - 1;
    const Monomial& lh = lm(h);
    std::vector<Pair> candidates;
    for (std::size_t g : active) candidates.push_back({g, h, lm(g).lcm(lh)});

    // Criteria M and F: drop a candidate whose lcm is divisible by the lcm of a
    // later candidate or of one already kept. Coprime candidates are kept here
    // (they certify the others) and discarded afterwards.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& ca = candidates[a];
      bool keep = lm(ca.i).is_coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (candidates[b].lcm.divides(ca.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(ca.lcm)) keep = false;
      }
      if (keep) kept.push_back(ca);
    }
    std::vector<Pair> fresh;
    for (auto& c : kept)
      if (!lm(c.i).is_coprime(lh)) fresh.push_back(std::move(c));
    result.pairs_skipped_ += candidates.size() - fresh.size();

    // Criterion B on old pairs.
    std::vector<Pair> survivors;
    for (auto& p : pairs) {
      bool chain = lh.divides(p.lcm) && !(lm(p.i).lcm(lh) == p.lcm) && !(lm(p.j).lcm(lh) == p.lcm);
      if (chain) ++result.pairs_skipped_;
      else survivors.push_back(std::move(p));
    }
    pairs = std::move(survivors);
    for (auto& p : fresh) pairs.push_back(std::move(p));

    std::vector<std::size_t> next;
    for (std::size_t g : active)
      if (!lh.divides(lm(g))) next.push_back(g);
    next.push_back(h);
    active = std::move(next);
  };

  auto active_ptrs = [&]() {
    std::vector<const Polynomial*> ptrs;
    for (std::size_t g : active) ptrs.push_back(&store[g]);
    return ptrs;
  };

  // Seed with the generators, each reduced against what is already present.
  for (const auto& g : generators) {
    Polynomial h = reduce_impl(g, active_ptrs());
    if (h.is_zero()) continue;
    store.push_back(h.monic());
    update();
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    Pair p = *best;
    pairs.erase(best);
    ++result.pairs_reduced_;
    Polynomial h = reduce_impl(s_polynomial(store[p.i], store[p.j]), active_ptrs());
    if (h.is_zero()) continue;
    store.push_back(h.monic());
    update();
  }

  // Minimalize, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t a : active) {
    bool redundant = false;
    for (std::size_t b : active) {
      if (a == b) continue;
      if (lm(b).divides(lm(a)) && (!(lm(a) == lm(b)) || b < a)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(store[a]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  std::vector<Polynomial> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const Polynomial*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(&minimal[b]);
    const Term& lt = minimal[a].leading_term();
    std::vector<Term> tail(minimal[a].terms().begin() + 1, minimal[a].terms().end());
    Polynomial t = reduce_impl(Polynomial::from_terms(ring, std::move(tail)), others);
    Polynomial full = Polynomial::from_terms(ring, {lt}) + t;
    reduced.push_back(full.monic());
  }
  result.basis_ = std::move(reduced);
  return result;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (f.ring() != G.ring() && !(*f.ring() == *G.ring()))
    throw std::invalid_argument("ring mismatch");
  std::vector<const Polynomial*> ptrs;
  for (const auto& g : G.basis()) ptrs.push_back(&g);
  return reduce_impl(f, ptrs);
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& G, unsigned d) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(G.ring()->num_vars(), d))
    if (G.is_standard(m)) out.push_back(std::move(m));
  return out;
}

std::size_t hilbert_function(const GroebnerBasis& G, unsigned d) {
  if (!is_graded(G.ring()->order()))
    throw std::invalid_argument("hilbert_function requires a graded monomial order");
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(G.ring()->num_vars(), d))
    if (G.is_standard(m)) ++count;
  return count;
}

namespace {

// Minimum size of a variable set meeting every support (a transversal).
void min_transversal(const std::vector<std::vector<std::size_t>>& supports,
                     std::vector<bool>& chosen, std::size_t size, std::size_t& best) {
  if (size >= best) return;
  const std::vector<std::size_t>* unhit = nullptr;
  for (const auto& s : supports) {
    bool hit = false;
    for (std::size_t v : s)
      if (chosen[v]) {
        hit = true;
        break;
      }
    if (!hit && (!unhit || s.size() < unhit->size())) unhit = &s;
  }
  if (!unhit) {
    best = size;
    return;
  }
  for (std::size_t v : *unhit) {
    chosen[v] = true;
    min_transversal(supports, chosen, size + 1, best);
    chosen[v] = false;
  }
}

} // namespace

int krull_dimension(const GroebnerBasis& G) {
  const std::size_t n = G.ring()->num_vars();
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : G.basis()) {
    if (g.is_zero()) continue;
    std::vector<std::size_t> s;
    const Monomial& m = g.leading_monomial();
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) s.push_back(i);
    if (s.empty()) return -1;
    supports.push_back(std::move(s));
  }
  std::vector<bool> chosen(n, false);
  std::size_t best = n;
  min_transversal(supports, chosen, 0, best);
  return static_cast<int>(n - best);
}

std::vector<std::vector<std::pair<std::size_t, PrimeField::Element>>>
standard_coordinates(const std::vector<Polynomial>& polys, const GroebnerBasis& G, unsigned d) {
  std::map<Monomial, std::size_t> column;
  auto basis = standard_monomials(G, d);
  for (std::size_t k = 0; k < basis.size(); ++k) column.emplace(basis[k], k);
  std::vector<linalg::SparseRow> rows;
  rows.reserve(polys.size());
  for (const auto& f : polys) {
    Polynomial nf = normal_form(f, G);
    linalg::SparseRow row;
    for (const auto& t : nf.terms()) {
      auto it = column.find(t.mono);
      if (it == column.end())
        throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(d));
      row.emplace_back(it->second, t.coef);
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

MultMapRank mult_map_rank(const Polynomial& f, const GroebnerBasis& G, unsigned d) {
  if (!f.is_homogeneous()) throw std::invalid_argument("mult_map_rank: f must be homogeneous");
  if (!is_graded(G.ring()->order()))
    throw std::invalid_argument("mult_map_rank requires a graded monomial order");
  MultMapRank out;
  auto domain = standard_monomials(G, d);
  out.domain_dim = domain.size();
  if (f.is_zero()) return out;
  std::vector<Polynomial> images;
  images.reserve(domain.size());
  for (const auto& m : domain) images.push_back(f.times_term(1, m));
  auto rows = standard_coordinates(images, G, d + static_cast<unsigned>(f.degree()));
  out.rank = linalg::rank(G.ring()->field(), rows);
  return out;
}

std::size_t brute_force_degree_piece(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                     unsigned d, std::size_t entry_cap) {
  const std::size_t n = ring->num_vars();
  const std::size_t cols = count_monomials_of_degree(n, d);
  std::size_t rows = 0;
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw std::invalid_argument("brute_force_degree_piece: inhomogeneous generator");
    if (g.is_zero() || g.degree() > static_cast<int>(d)) continue;
    rows += count_monomials_of_degree(n, d - static_cast<unsigned>(g.degree()));
  }
  if (cols != 0 && rows > entry_cap / cols)
    throw std::length_error("brute_force_degree_piece: " + std::to_string(rows) + " x " +
                            std::to_string(cols) + " exceeds the entry cap of " +
                            std::to_string(entry_cap));
  std::map<Monomial, std::size_t> column;
  auto all = monomials_of_degree(n, d);
  for (std::size_t k = 0; k < all.size(); ++k) column.emplace(all[k], k);

  linalg::RowEchelon ech(ring->field());
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > static_cast<int>(d)) continue;
    for (const auto& m : monomials_of_degree(n, d - static_cast<unsigned>(g.degree()))) {
      linalg::SparseRow row;
      for (const auto& t : g.terms()) row.emplace_back(column.at(t.mono * m), t.coef);
      std::sort(row.begin(), row.end());
      ech.insert(std::move(row));
    }
  }
  return cols - ech.rank();
}

} // namespace lmflat::poly
