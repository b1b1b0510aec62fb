#include "demazure/charring.hpp"

#include <limits>

#include "demazure/errors.hpp"

namespace demazure {

namespace {

void check_same_rank(const LaurentChar& f, const LaurentChar& g) {
  if (f.rank() != g.rank())
    throw RankMismatch("character ranks differ: " + std::to_string(f.rank()) + " vs " +
                       std::to_string(g.rank()));
}

void check_datum_rank(const RootDatum& datum, const LaurentChar& f) {
  if (f.rank() != datum.rank)
    throw RankMismatch("character has rank " + std::to_string(f.rank()) + ", datum has rank " +
                       std::to_string(datum.rank));
}

std::string weight_str(const Weight& w) {
  std::string s = "[";
  for (int k = 0; k < w.rank(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  return s + "]";
}

}  // namespace

LaurentChar LaurentChar::monomial(const Weight& w, const Int& coeff) {
  LaurentChar f(w.rank());
  if (coeff != 0) f.terms_.emplace(w, coeff);
  return f;
}

Int LaurentChar::coeff(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentChar::add_term(const Weight& w, const Int& c) {
  if (c == 0) return;
  if (w.rank() != rank_)
    throw RankMismatch("term has rank " + std::to_string(w.rank()) + ", character has rank " +
                       std::to_string(rank_));
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentChar char_add(const LaurentChar& f, const LaurentChar& g) {
  check_same_rank(f, g);
  LaurentChar out = f;
  for (const auto& [w, c] : g.terms()) out.add_term(w, c);
  return out;
}

LaurentChar char_sub(const LaurentChar& f, const LaurentChar& g) {
  check_same_rank(f, g);
  LaurentChar out = f;
  for (const auto& [w, c] : g.terms()) out.add_term(w, -c);
  return out;
}

LaurentChar char_mul(const LaurentChar& f, const LaurentChar& g) {
  check_same_rank(f, g);
  LaurentChar out(f.rank());
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wg, cg] : g.terms()) out.add_term(wf + wg, cf * cg);
  return out;
}

LaurentChar char_act(const WeylElt& w, const LaurentChar& f) {
  if (w.rank != f.rank())
    throw RankMismatch("element rank " + std::to_string(w.rank) + " vs character rank " +
                       std::to_string(f.rank()));
  LaurentChar out(f.rank());
  for (const auto& [wt, c] : f.terms()) out.add_term(apply(w, wt), c);
  return out;
}

LaurentChar exact_divide_by_positive_root(const RootDatum& datum, const LaurentChar& f,
                                          const RootDatum::PosRoot& beta) {
  check_datum_rank(datum, f);
  LaurentChar quotient(f.rank());
  if (f.is_zero()) return quotient;

  auto pairing = [&](const Weight& w) {
    std::int64_t acc = 0;
    for (int k = 0; k < w.rank(); ++k) acc += beta.coroot_coords[static_cast<std::size_t>(k)] * w[k];
    return acc;
  };

  // If f = q * (1 - e^{-beta}) then every pairing value of q lies in
  // [min_f + 2, max_f], so a pivot below that window proves non-divisibility.
  std::int64_t min_pairing = std::numeric_limits<std::int64_t>::max();
  for (const auto& [w, c] : f.terms()) min_pairing = std::min(min_pairing, pairing(w));

  LaurentChar rem = f;
  while (!rem.is_zero()) {
    const Weight* pivot = nullptr;
    std::int64_t best = 0;
    for (const auto& [w, c] : rem.terms()) {
      std::int64_t p = pairing(w);
      if (!pivot || p >= best) {  // later ties win: lex-greatest among maxima
        pivot = &w;
        best = p;
      }
    }
    if (best < min_pairing + 2)
      throw NotDivisible("remainder term e^" + weight_str(*pivot) +
                         " cannot arise from a quotient against 1 - e^-" +
                         weight_str(beta.weight));
    Weight w = *pivot;
    Int c = rem.coeff(w);
    quotient.add_term(w, c);
    rem.add_term(w, -c);
    rem.add_term(w - beta.weight, c);
  }
  return quotient;
}

LaurentChar exact_divide(const RootDatum& datum, const LaurentChar& f, int i) {
  if (i < 1 || i > datum.rank)
    throw RankMismatch("generator index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(datum.rank));
  RootDatum::PosRoot simple;
  simple.weight = datum.simple_root(i);
  simple.root_coords.assign(static_cast<std::size_t>(datum.rank), 0);
  simple.coroot_coords.assign(static_cast<std::size_t>(datum.rank), 0);
  simple.root_coords[static_cast<std::size_t>(i - 1)] = 1;
  simple.coroot_coords[static_cast<std::size_t>(i - 1)] = 1;
  return exact_divide_by_positive_root(datum, f, simple);
}

LaurentChar symmetrize(const RootDatum& datum, const LaurentChar& f, std::size_t max_group) {
  check_datum_rank(datum, f);
  LaurentChar out(f.rank());
  for (const WeylElt& w : enumerate_group(datum, max_group))
    out = char_add(out, char_act(w, f));
  return out;
}

bool is_invariant(const RootDatum& datum, const LaurentChar& f) {
  check_datum_rank(datum, f);
  for (int i = 1; i <= datum.rank; ++i)
    if (char_act(simple_reflection(datum, i), f) != f) return false;
  return true;
}

Int dimension(const LaurentChar& f) {
  Int acc = 0;
  for (const auto& [w, c] : f.terms()) acc += c;
  return acc;
}

std::vector<Weight> weight_box(int rank, int radius) {
  std::vector<Weight> out;
  Weight cur(std::vector<std::int64_t>(static_cast<std::size_t>(rank), -radius));
  for (;;) {
    out.push_back(cur);
    int k = rank - 1;
    while (k >= 0 && cur.coords[static_cast<std::size_t>(k)] == radius) {
      cur.coords[static_cast<std::size_t>(k)] = -radius;
      --k;
    }
    if (k < 0) break;
    ++cur.coords[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace demazure
