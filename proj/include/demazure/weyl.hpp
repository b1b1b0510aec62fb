#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

// Root data and Weyl groups in exact integer arithmetic.
//
// Conventions, used consistently by every module:
//   * cartan[i][j] = <alpha_j, alpha_i^vee>, so the simple root alpha_j is
//     column j of the Cartan matrix when written in fundamental-weight
//     coordinates.
//   * Weights live in fundamental-weight coordinates; <lambda, alpha_i^vee>
//     is simply coordinate i of lambda.
//   * Generator indices and word letters are 1-based, ranging over
//     1..rank, matching the CLI surface.

namespace demazure {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Lattice point in fundamental-weight coordinates.
struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  std::int64_t operator[](int k) const { return coords[static_cast<std::size_t>(k)]; }

  friend auto operator<=>(const Weight&, const Weight&) = default;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a);
};

// Word in the simple reflections; letters are 1-based generator indices.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend auto operator<=>(const Word&, const Word&) = default;
};

struct RootDatum {
  // Positive root carried in three coordinate systems at once: the
  // fundamental-weight coordinates of beta, the coefficients of beta in the
  // simple-root basis, and the coefficients of beta^vee in the simple-coroot
  // basis.  The last gives coroot pairings <lambda, beta^vee> as a plain dot
  // product with lambda's coordinates.
  struct PosRoot {
    Weight weight;
    std::vector<std::int64_t> root_coords;
    std::vector<std::int64_t> coroot_coords;
  };

  Series series = Series::A;
  int rank = 0;
  std::vector<std::int64_t> cartan;  // row-major rank x rank
  std::vector<int> coxeter;          // row-major; order of s_i s_j, m_ii = 1
  std::vector<PosRoot> pos_roots;    // sorted by root_coords
  std::vector<Weight> pos_weight_index;  // sorted weights of pos_roots, for sign tests

  std::int64_t cartan_at(int i, int j) const;  // 1-based
  int coxeter_order(int i, int j) const;       // 1-based
  Weight simple_root(int i) const;             // column i of the Cartan matrix, 1-based
  bool is_positive_root(const Weight& w) const;
};

// Group element as an integer matrix acting on fundamental-weight
// coordinates, with its Coxeter length cached.  Elements are only comparable
// within one root datum.
struct WeylElt {
  int rank = 0;
  std::vector<std::int64_t> mat;  // row-major rank x rank
  int len = 0;

  bool is_identity() const;
  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    return a.rank == b.rank && a.mat == b.mat;
  }
  friend auto operator<=>(const WeylElt& a, const WeylElt& b) {
    return std::tie(a.rank, a.mat) <=> std::tie(b.rank, b.mat);
  }
};

// Valid finite types: A (rank >= 1), B/C (rank >= 2), D (rank >= 4),
// E6/E7/E8, F4, G2.  Throws UnsupportedType otherwise.
RootDatum build_root_datum(Series series, int rank);
RootDatum build_root_datum(std::string_view type);  // e.g. "A2", "G2", "E8"
std::string type_code(const RootDatum& datum);      // "A2", ...

Weight reflect(const RootDatum& datum, int i, const Weight& lambda);

WeylElt identity_element(const RootDatum& datum);
WeylElt simple_reflection(const RootDatum& datum, int i);
Weight apply(const WeylElt& w, const Weight& lambda);
WeylElt multiply(const RootDatum& datum, const WeylElt& a, const WeylElt& b);
int length(const WeylElt& w);

WeylElt longest_element(const RootDatum& datum);

// ShortLex-least reduced word: repeatedly emit the smallest i with
// len(s_i * w) < len(w) and continue with s_i * w.
Word canonical_word(const RootDatum& datum, const WeylElt& w);
WeylElt word_to_element(const RootDatum& datum, const Word& word);

// All reduced words, in ShortLex order; front() == canonical_word(w).
std::vector<Word> all_reduced_words(const RootDatum& datum, const WeylElt& w);

bool lengths_add(const RootDatum& datum, const WeylElt& a, const WeylElt& b);

// Bruhat order via the lifting property: pick a left descent s of w2; then
// w1 <= w2  iff  min(w1, s*w1) <= s*w2.
bool bruhat_leq(const RootDatum& datum, const WeylElt& a, const WeylElt& b);

inline constexpr std::size_t kDefaultGroupBound = 100000;

// Breadth-first enumeration from the identity by right multiplication.
// Throws GroupTooLarge once more than max_size elements are seen.
std::vector<WeylElt> enumerate_group(const RootDatum& datum,
                                     std::size_t max_size = kDefaultGroupBound);

}  // namespace demazure
