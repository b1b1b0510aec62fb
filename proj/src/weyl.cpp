#include "demazure/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

#include "demazure/errors.hpp"

namespace demazure {

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] -= b.coords[k];
  return r;
}

Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

namespace {

void check_index(const RootDatum& rd, int i) {
  if (i < 1 || i > rd.rank)
    throw RankMismatch("generator index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(rd.rank));
}

void check_weight(const RootDatum& rd, const Weight& w) {
  if (w.rank() != rd.rank)
    throw RankMismatch("weight has rank " + std::to_string(w.rank()) + ", datum has rank " +
                       std::to_string(rd.rank));
}

void check_elt(const RootDatum& rd, const WeylElt& w) {
  if (w.rank != rd.rank)
    throw RankMismatch("element has rank " + std::to_string(w.rank) + ", datum has rank " +
                       std::to_string(rd.rank));
}

// cartan[i][j] = <alpha_j, alpha_i^vee>; rows are indexed by coroots.
std::vector<std::int64_t> make_cartan(Series series, int n) {
  auto unsupported = [&]() -> std::vector<std::int64_t> {
    throw UnsupportedType(std::string(1, static_cast<char>(series)) + std::to_string(n) +
                          " is not a finite type in this classification");
  };
  if (n < 1) return unsupported();

  std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> std::int64_t& { return m[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto bond = [&](int i, int j) { at(i, j) = at(j, i) = -1; };  // 0-based single bond

  switch (series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      if (n < 2) return unsupported();
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      at(n - 1, n - 2) = -2;
      break;
    case Series::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
      if (n < 2) return unsupported();
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      at(n - 2, n - 1) = -2;
      break;
    case Series::D:
      if (n < 4) return unsupported();
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Series::E: {
      if (n < 6 || n > 8) return unsupported();
      // Bourbaki numbering: branch node 4 carries nodes 2, 3, 5.
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      bond(1, 3);
      if (n >= 7) bond(5, 6);
      if (n == 8) bond(6, 7);
      break;
    }
    case Series::F:
      if (n != 4) return unsupported();
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      at(2, 1) = -2;  // alpha_3 short
      break;
    case Series::G:
      if (n != 2) return unsupported();
      // alpha_1 short, so that the first fundamental representation is the
      // 7-dimensional one.
      at(0, 1) = -3;
      at(1, 0) = -1;
      break;
    default:
      return unsupported();
  }
  return m;
}

// Closure of the simple roots under simple reflections, keeping positive
// roots only.  Root and coroot coordinates are tracked side by side; for
// beta = sum c_i alpha_i the reflection s_j subtracts <beta, alpha_j^vee> =
// sum_i c_i a_{ji} from c_j, and dually with the transposed matrix for
// beta^vee.
std::vector<RootDatum::PosRoot> close_positive_roots(const std::vector<std::int64_t>& cartan,
                                                     int n) {
  auto a = [&](int i, int j) { return cartan[static_cast<std::size_t>(i) * n + j]; };
  using Coords = std::vector<std::int64_t>;
  std::set<Coords> seen;
  std::deque<std::pair<Coords, Coords>> queue;  // (root coords, coroot coords)
  for (int i = 0; i < n; ++i) {
    Coords e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    queue.emplace_back(e, e);
  }

  std::vector<RootDatum::PosRoot> out;
  while (!queue.empty()) {
    auto [c, cv] = queue.front();
    queue.pop_front();

    RootDatum::PosRoot pr;
    pr.root_coords = c;
    pr.coroot_coords = cv;
    Weight wt = Weight::zero(n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) wt.coords[static_cast<std::size_t>(k)] += a(k, j) * c[static_cast<std::size_t>(j)];
    pr.weight = wt;
    out.push_back(std::move(pr));

    for (int j = 0; j < n; ++j) {
      std::int64_t pair_root = 0, pair_coroot = 0;
      for (int i = 0; i < n; ++i) {
        pair_root += c[static_cast<std::size_t>(i)] * a(j, i);
        pair_coroot += cv[static_cast<std::size_t>(i)] * a(i, j);
      }
      Coords c2 = c, cv2 = cv;
      c2[static_cast<std::size_t>(j)] -= pair_root;
      cv2[static_cast<std::size_t>(j)] -= pair_coroot;
      bool positive = std::all_of(c2.begin(), c2.end(), [](std::int64_t x) { return x >= 0; });
      if (positive && seen.insert(c2).second) queue.emplace_back(c2, cv2);
    }
  }

  std::sort(out.begin(), out.end(),
            [](const RootDatum::PosRoot& x, const RootDatum::PosRoot& y) {
              return x.root_coords < y.root_coords;
            });
  return out;
}

Weight mat_apply(int rank, const std::vector<std::int64_t>& mat, const Weight& v) {
  Weight out = Weight::zero(rank);
  for (int k = 0; k < rank; ++k) {
    std::int64_t acc = 0;
    for (int j = 0; j < rank; ++j)
      acc += mat[static_cast<std::size_t>(k) * rank + j] * v.coords[static_cast<std::size_t>(j)];
    out.coords[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

int inversion_count(const RootDatum& rd, const std::vector<std::int64_t>& mat) {
  int count = 0;
  for (const auto& pr : rd.pos_roots)
    if (!rd.is_positive_root(mat_apply(rd.rank, mat, pr.weight))) ++count;
  return count;
}

std::vector<std::int64_t> mat_mul(int rank, const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < rank; ++k) {
      std::int64_t aik = a[static_cast<std::size_t>(i) * rank + k];
      if (aik == 0) continue;
      for (int j = 0; j < rank; ++j)
        c[static_cast<std::size_t>(i) * rank + j] += aik * b[static_cast<std::size_t>(k) * rank + j];
    }
  return c;
}

// Smallest left descent of w, or 0 for the identity.
int least_left_descent(const RootDatum& rd, const WeylElt& w) {
  for (int i = 1; i <= rd.rank; ++i) {
    WeylElt sw = multiply(rd, simple_reflection(rd, i), w);
    if (sw.len < w.len) return i;
  }
  return 0;
}

}  // namespace

std::int64_t RootDatum::cartan_at(int i, int j) const {
  return cartan[static_cast<std::size_t>(i - 1) * rank + (j - 1)];
}

int RootDatum::coxeter_order(int i, int j) const {
  return coxeter[static_cast<std::size_t>(i - 1) * rank + (j - 1)];
}

Weight RootDatum::simple_root(int i) const {
  Weight w = Weight::zero(rank);
  for (int k = 0; k < rank; ++k)
    w.coords[static_cast<std::size_t>(k)] = cartan[static_cast<std::size_t>(k) * rank + (i - 1)];
  return w;
}

bool RootDatum::is_positive_root(const Weight& w) const {
  return std::binary_search(pos_weight_index.begin(), pos_weight_index.end(), w);
}

bool WeylElt::is_identity() const { return len == 0; }

RootDatum build_root_datum(Series series, int rank) {
  RootDatum rd;
  rd.series = series;
  rd.rank = rank;
  rd.cartan = make_cartan(series, rank);

  rd.coxeter.assign(static_cast<std::size_t>(rank) * rank, 2);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (i == j) {
        rd.coxeter[static_cast<std::size_t>(i) * rank + j] = 1;
        continue;
      }
      std::int64_t prod = rd.cartan[static_cast<std::size_t>(i) * rank + j] *
                          rd.cartan[static_cast<std::size_t>(j) * rank + i];
      int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      rd.coxeter[static_cast<std::size_t>(i) * rank + j] = m;
    }

  rd.pos_roots = close_positive_roots(rd.cartan, rank);
  rd.pos_weight_index.reserve(rd.pos_roots.size());
  for (const auto& pr : rd.pos_roots) rd.pos_weight_index.push_back(pr.weight);
  std::sort(rd.pos_weight_index.begin(), rd.pos_weight_index.end());
  return rd;
}

RootDatum build_root_datum(std::string_view type) {
  if (type.size() < 2) throw UnsupportedType("type string too short: \"" + std::string(type) + "\"");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  if (c < 'A' || c > 'G')
    throw UnsupportedType("unknown series letter in \"" + std::string(type) + "\"");
  int rank = 0;
  auto digits = type.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw UnsupportedType("cannot parse rank in \"" + std::string(type) + "\"");
  return build_root_datum(static_cast<Series>(c), rank);
}

std::string type_code(const RootDatum& datum) {
  return std::string(1, static_cast<char>(datum.series)) + std::to_string(datum.rank);
}

Weight reflect(const RootDatum& datum, int i, const Weight& lambda) {
  check_index(datum, i);
  check_weight(datum, lambda);
  std::int64_t pairing = lambda.coords[static_cast<std::size_t>(i - 1)];
  Weight out = lambda;
  for (int k = 0; k < datum.rank; ++k)
    out.coords[static_cast<std::size_t>(k)] -= pairing * datum.cartan_at(k + 1, i);
  return out;
}

WeylElt identity_element(const RootDatum& datum) {
  WeylElt w;
  w.rank = datum.rank;
  w.mat.assign(static_cast<std::size_t>(datum.rank) * datum.rank, 0);
  for (int i = 0; i < datum.rank; ++i) w.mat[static_cast<std::size_t>(i) * datum.rank + i] = 1;
  w.len = 0;
  return w;
}

WeylElt simple_reflection(const RootDatum& datum, int i) {
  check_index(datum, i);
  WeylElt w = identity_element(datum);
  for (int k = 0; k < datum.rank; ++k)
    w.mat[static_cast<std::size_t>(k) * datum.rank + (i - 1)] -= datum.cartan_at(k + 1, i);
  w.len = 1;
  return w;
}

Weight apply(const WeylElt& w, const Weight& lambda) {
  if (w.rank != lambda.rank())
    throw RankMismatch("element rank " + std::to_string(w.rank) + " vs weight rank " +
                       std::to_string(lambda.rank()));
  return mat_apply(w.rank, w.mat, lambda);
}

WeylElt multiply(const RootDatum& datum, const WeylElt& a, const WeylElt& b) {
  check_elt(datum, a);
  check_elt(datum, b);
  WeylElt c;
  c.rank = datum.rank;
  c.mat = mat_mul(datum.rank, a.mat, b.mat);
  c.len = inversion_count(datum, c.mat);
  return c;
}

int length(const WeylElt& w) { return w.len; }

WeylElt longest_element(const RootDatum& datum) {
  WeylElt w = identity_element(datum);
  for (;;) {
    bool ascended = false;
    for (int i = 1; i <= datum.rank; ++i) {
      WeylElt ws = multiply(datum, w, simple_reflection(datum, i));
      if (ws.len > w.len) {
        w = std::move(ws);
        ascended = true;
        break;
      }
    }
    if (!ascended) return w;
  }
}

Word canonical_word(const RootDatum& datum, const WeylElt& w) {
  check_elt(datum, w);
  Word out;
  out.letters.reserve(static_cast<std::size_t>(w.len));
  WeylElt cur = w;
  while (!cur.is_identity()) {
    int i = least_left_descent(datum, cur);
    out.letters.push_back(i);
    cur = multiply(datum, simple_reflection(datum, i), cur);
  }
  return out;
}

WeylElt word_to_element(const RootDatum& datum, const Word& word) {
  WeylElt w = identity_element(datum);
  for (int i : word.letters) w = multiply(datum, w, simple_reflection(datum, i));
  return w;
}

std::vector<Word> all_reduced_words(const RootDatum& datum, const WeylElt& w) {
  check_elt(datum, w);
  if (w.is_identity()) return {Word{}};
  std::vector<Word> out;
  for (int i = 1; i <= datum.rank; ++i) {
    WeylElt sw = multiply(datum, simple_reflection(datum, i), w);
    if (sw.len >= w.len) continue;
    for (Word& tail : all_reduced_words(datum, sw)) {
      Word word;
      word.letters.reserve(tail.size() + 1);
      word.letters.push_back(i);
      word.letters.insert(word.letters.end(), tail.letters.begin(), tail.letters.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

bool lengths_add(const RootDatum& datum, const WeylElt& a, const WeylElt& b) {
  return multiply(datum, a, b).len == a.len + b.len;
}

bool bruhat_leq(const RootDatum& datum, const WeylElt& a, const WeylElt& b) {
  check_elt(datum, a);
  check_elt(datum, b);
  WeylElt u = a, w = b;
  for (;;) {
    if (w.is_identity()) return u.is_identity();
    if (u.len > w.len) return false;
    int i = least_left_descent(datum, w);
    WeylElt s = simple_reflection(datum, i);
    WeylElt su = multiply(datum, s, u);
    if (su.len < u.len) u = std::move(su);
    w = multiply(datum, s, w);
  }
}

std::vector<WeylElt> enumerate_group(const RootDatum& datum, std::size_t max_size) {
  std::vector<WeylElt> out;
  std::set<std::vector<std::int64_t>> seen;
  std::deque<WeylElt> queue;
  queue.push_back(identity_element(datum));
  seen.insert(queue.front().mat);
  while (!queue.empty()) {
    WeylElt w = std::move(queue.front());
    queue.pop_front();
    out.push_back(w);
    for (int i = 1; i <= datum.rank; ++i) {
      WeylElt ws = multiply(datum, w, simple_reflection(datum, i));
      if (seen.insert(ws.mat).second) {
        if (seen.size() > max_size)
          throw GroupTooLarge("Weyl group of " + type_code(datum) + " exceeds bound " +
                              std::to_string(max_size));
        queue.push_back(std::move(ws));
      }
    }
  }
  return out;
}

}  // namespace demazure
