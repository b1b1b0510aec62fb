// Acceptance gate: every release-blocking property, one verdict line each.
// Exits 0 iff all criteria hold.  Needs DEMAZURE_CLI_BIN for the CLI
// criterion (ctest sets it).

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "demazure/braid.hpp"
#include "demazure/demazure.hpp"
#include "demazure/harness.hpp"
#include "demazure/json_io.hpp"

using nlohmann::json;
using namespace demazure;

namespace {

struct Outcome {
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;

  void fail(std::string why) {
    if (passed) detail = std::move(why);
    passed = false;
  }
};

std::string weight_str(const Weight& w) {
  std::string s = "[";
  for (int k = 0; k < w.rank(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + "]";
}

// 1. D_i is idempotent on every monomial of the box.
Outcome coprojector_idempotence() {
  Outcome out;
  for (const char* type : {"A2", "B2", "G2", "A3"}) {
    RootDatum rd = build_root_datum(type);
    int radius = rd.rank <= 2 ? 3 : 2;
    for (int i = 1; i <= rd.rank; ++i)
      for (const Weight& lambda : weight_box(rd.rank, radius)) {
        LaurentChar once = demazure_simple(rd, i, LaurentChar::monomial(lambda));
        ++out.cases;
        if (demazure_simple(rd, i, once) != once) {
          out.fail(std::string(type) + ": D_" + std::to_string(i) + " not idempotent at e^" +
                   weight_str(lambda));
          return out;
        }
      }
  }
  return out;
}

// 2. D_{w1} D_{w2} = D_{w1 w2} whenever lengths add.
Outcome weak_braid_action() {
  Outcome out;
  for (const char* type : {"A2", "B2", "G2", "A3"}) {
    RootDatum rd = build_root_datum(type);
    int radius = rd.rank <= 2 ? 2 : 1;
    std::vector<WeylElt> group = enumerate_group(rd);
    std::vector<Weight> box = weight_box(rd.rank, radius);
    for (const WeylElt& w1 : group)
      for (const WeylElt& w2 : group) {
        if (!lengths_add(rd, w1, w2)) continue;
        WeylElt w12 = multiply(rd, w1, w2);
        for (const Weight& lambda : box) {
          LaurentChar m = LaurentChar::monomial(lambda);
          ++out.cases;
          if (demazure_elt(rd, w1, demazure_elt(rd, w2, m)) != demazure_elt(rd, w12, m)) {
            out.fail(std::string(type) + ": additive pair disagrees at e^" + weight_str(lambda));
            return out;
          }
        }
      }
  }
  return out;
}

// 3. All reduced words of w induce the same operator.
Outcome reduced_word_independence() {
  Outcome out;
  for (const char* type : {"A2", "B2", "G2", "A3"}) {
    RootDatum rd = build_root_datum(type);
    std::vector<Weight> box = weight_box(rd.rank, 2);
    for (const WeylElt& w : enumerate_group(rd)) {
      std::vector<Word> words = all_reduced_words(rd, w);
      for (const Weight& lambda : box) {
        LaurentChar m = LaurentChar::monomial(lambda);
        LaurentChar ref = demazure_word(rd, words[0], m);
        for (std::size_t k = 1; k < words.size(); ++k) {
          ++out.cases;
          if (demazure_word(rd, words[k], m) != ref) {
            out.fail(std::string(type) + ": reduced words of an element disagree at e^" +
                     weight_str(lambda));
            return out;
          }
        }
      }
    }
  }
  return out;
}

// 4. demazure_word = demazure_elt after the 0-Hecke fold, on random words.
Outcome word_collapse() {
  Outcome out;
  for (const char* type : {"A2", "B2", "G2"}) {
    RootDatum rd = build_root_datum(type);
    std::vector<Weight> box = weight_box(rd.rank, 2);
    SplitMix64 rng(2024);
    for (int n = 0; n < 1000; ++n) {
      Word word = random_word(rng, rd.rank, 8);
      WeylElt folded = demazure_product(rd, word);
      for (const Weight& lambda : box) {
        LaurentChar m = LaurentChar::monomial(lambda);
        ++out.cases;
        if (demazure_word(rd, word, m) != demazure_elt(rd, folded, m)) {
          out.fail(std::string(type) + ": word does not collapse to its fold at e^" +
                   weight_str(lambda));
          return out;
        }
      }
    }
  }
  return out;
}

// 5. Membership, invariance, and the w0 fixed-point test agree.
Outcome descent_theorem() {
  Outcome out;
  for (const char* type : {"A2", "B2", "G2"}) {
    RootDatum rd = build_root_datum(type);
    SplitMix64 rng(2025);
    for (int n = 0; n < 100; ++n) {
      LaurentChar f = random_char(rng, rd.rank);
      LaurentChar sym = symmetrize(rd, f);
      ++out.cases;
      if (!is_descent_member(rd, sym)) {
        out.fail(std::string(type) + ": symmetrized character rejected");
        return out;
      }
      for (const LaurentChar* g : {&sym, &f}) {
        bool member = is_descent_member(rd, *g);
        ++out.cases;
        if (member != is_invariant(rd, *g) || member != descent_via_w0(rd, *g)) {
          out.fail(std::string(type) + ": membership predicates disagree");
          return out;
        }
      }
    }
  }
  return out;
}

// 6. D_{w0} e^lambda is the irreducible character; dimension anchors.
Outcome character_formula() {
  Outcome out;
  for (const char* type : {"A2", "B2", "G2"}) {
    RootDatum rd = build_root_datum(type);
    WeylElt w0 = longest_element(rd);
    for (std::int64_t x = 0; x <= 2; ++x)
      for (std::int64_t y = 0; y <= 2; ++y) {
        Weight lambda(std::vector<std::int64_t>{x, y});
        LaurentChar chi = weyl_character(rd, lambda);
        ++out.cases;
        if (demazure_elt(rd, w0, LaurentChar::monomial(lambda)) != chi) {
          out.fail(std::string(type) + ": D_w0 e^" + weight_str(lambda) +
                   " is not the irreducible character");
          return out;
        }
        ++out.cases;
        if (dimension(chi) != weyl_dimension(rd, lambda)) {
          out.fail(std::string(type) + ": dimension mismatch at " + weight_str(lambda));
          return out;
        }
      }
  }
  auto anchor = [&out](const char* type, std::vector<std::int64_t> coords, int dim) {
    RootDatum rd = build_root_datum(type);
    Weight lambda(std::move(coords));
    ++out.cases;
    if (weyl_dimension(rd, lambda) != dim)
      out.fail(std::string(type) + " " + weight_str(lambda) + ": expected dimension " +
               std::to_string(dim));
  };
  anchor("A2", {1, 1}, 8);
  anchor("G2", {1, 0}, 7);
  anchor("G2", {0, 1}, 14);
  return out;
}

// 7. Normal-form equality matches brute-force braid-move closure.
Outcome braid_word_problem() {
  Outcome out;
  for (const char* type : {"A2", "B2"}) {
    RootDatum rd = build_root_datum(type);
    std::vector<BraidWord> words{BraidWord{}};
    for (std::size_t start = 0, len = 1; len <= 6; ++len) {
      std::size_t end = words.size();
      for (std::size_t k = start; k < end; ++k)
        for (int i = 1; i <= rd.rank; ++i) {
          BraidWord next = words[k];
          next.letters.push_back(i);
          words.push_back(std::move(next));
        }
      start = end;
    }

    // Closure class of each word, as an id map; braid_equal must agree with
    // "same class" on every pair.
    std::map<std::vector<int>, std::size_t> class_id;
    std::size_t next_id = 0;
    for (const BraidWord& w : words) {
      if (class_id.count(w.letters)) continue;
      std::size_t id = next_id++;
      for (const BraidWord& member : braid_rewrite_class(rd, w)) class_id[member.letters] = id;
    }
    std::vector<NormalForm> nfs;
    nfs.reserve(words.size());
    for (const BraidWord& w : words) nfs.push_back(braid_normal_form(rd, w));

    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = 0; b < words.size(); ++b) {
        ++out.cases;
        bool by_nf = nfs[a] == nfs[b];
        bool by_closure = class_id.at(words[a].letters) == class_id.at(words[b].letters);
        if (by_nf != by_closure) {
          out.fail(std::string(type) + ": normal form and rewrite closure disagree");
          return out;
        }
      }
  }
  return out;
}

// 8. Group sizes, longest lengths, root counts, Bruhat vs subwords.
Outcome combinatorial_anchors() {
  Outcome out;
  struct Anchor {
    const char* type;
    std::size_t group;
    int longest;
  };
  for (const Anchor& a : {Anchor{"A2", 6, 3}, Anchor{"B2", 8, 4}, Anchor{"G2", 12, 6},
                          Anchor{"A3", 24, 6}}) {
    RootDatum rd = build_root_datum(a.type);
    std::vector<WeylElt> group = enumerate_group(rd);
    WeylElt w0 = longest_element(rd);
    ++out.cases;
    if (group.size() != a.group || w0.len != a.longest ||
        rd.pos_roots.size() != static_cast<std::size_t>(a.longest)) {
      out.fail(std::string(a.type) + ": expected |W|=" + std::to_string(a.group) +
               ", len(w0)=" + std::to_string(a.longest) + ", got |W|=" +
               std::to_string(group.size()) + ", len(w0)=" + std::to_string(w0.len) +
               ", roots=" + std::to_string(rd.pos_roots.size()));
      return out;
    }

    // Subword oracle: u <= w iff u is a product of some subsequence of a
    // reduced word of w.
    std::map<std::vector<std::int64_t>, std::set<std::vector<std::int64_t>>> lower;
    for (const WeylElt& w : group) {
      Word word = canonical_word(rd, w);
      std::set<std::vector<std::int64_t>>& below = lower[w.mat];
      for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
        Word sub;
        for (std::size_t k = 0; k < word.size(); ++k)
          if (mask & (std::size_t{1} << k)) sub.letters.push_back(word.letters[k]);
        below.insert(word_to_element(rd, sub).mat);
      }
    }
    for (const WeylElt& u : group)
      for (const WeylElt& w : group) {
        ++out.cases;
        if (bruhat_leq(rd, u, w) != (lower.at(w.mat).count(u.mat) > 0)) {
          out.fail(std::string(a.type) + ": bruhat_leq disagrees with the subword oracle");
          return out;
        }
      }
  }
  return out;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& bin, const std::string& args, const std::string& input) {
  static int counter = 0;
  std::string base =
      "/tmp/demazure_accept_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
  std::string in_path = base + ".in", out_path = base + ".out";
  {
    std::ofstream in(in_path);
    in << input;
  }
  std::string cmd = bin + " " + args + " < " + in_path + " > " + out_path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ostringstream buf;
  buf << std::ifstream(out_path).rdbuf();
  r.out = buf.str();
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
  return r;
}

// 9. CLI: byte-stable round-trip corpus, exit codes, full verify run.
Outcome cli_contract() {
  Outcome out;
  const char* bin = std::getenv("DEMAZURE_CLI_BIN");
  if (!bin) {
    out.fail("DEMAZURE_CLI_BIN is not set");
    return out;
  }

  SplitMix64 rng(2026);
  for (const char* type : {"A1", "A2", "B2", "G2", "A3"}) {
    RootDatum rd = build_root_datum(type);
    for (int n = 0; n < 12; ++n) {
      std::string text = char_to_string(random_char(rng, rd.rank));
      RunResult echo = run_cli(bin, "demazure --type " + std::string(type), text);
      ++out.cases;
      if (echo.code != 0 || echo.out != text + "\n") {
        out.fail(std::string(type) + ": round-trip is not the identity");
        return out;
      }
    }
  }

  auto expect_code = [&](const std::string& args, const std::string& input, int code) {
    if (!out.passed) return;
    ++out.cases;
    RunResult r = run_cli(bin, args, input);
    if (r.code != code)
      out.fail("`" + args + "` exited " + std::to_string(r.code) + ", expected " +
               std::to_string(code));
  };
  expect_code("reduce --type A2 \"1 2 1 1\"", "", 0);
  expect_code("descent-check --type A1",
              "{\"rank\": 1, \"terms\": [{\"weight\": [1], \"coeff\": \"1\"}]}", 1);
  expect_code("reduce --type A2 \"7\"", "", 2);
  expect_code("demazure --type A2 --word \"1\"", "{\"rank\": 3, \"terms\": []}", 3);
  expect_code("weyl-char --type A2 \"-1 0\"", "", 4);
  expect_code("verify --type A2 --suite all --radius 2", "", 0);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double budget_s;  // 0: no explicit budget
  };
  const std::vector<Criterion> criteria{
      {"coprojector idempotence (A2,B2,G2 radius 3; A3 radius 2)", coprojector_idempotence, 60.0},
      {"weak braid action on length-additive pairs", weak_braid_action, 0},
      {"reduced-word independence of Demazure operators", reduced_word_independence, 0},
      {"word collapse through the 0-Hecke fold (3000 words)", word_collapse, 0},
      {"descent membership = invariance = w0 fixed point", descent_theorem, 0},
      {"Demazure character formula with dimension anchors 8/7/14", character_formula, 0},
      {"braid word problem vs rewrite closure (words up to 6)", braid_word_problem, 120.0},
      {"group sizes, longest elements, Bruhat vs subword oracle", combinatorial_anchors, 0},
      {"CLI round-trip, exit codes, full verify", cli_contract, 0},
  };

  bool all_passed = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome out = criteria[k].run();
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[k].budget_s > 0 && elapsed > criteria[k].budget_s && out.passed)
      out.fail("exceeded time budget of " + std::to_string(criteria[k].budget_s) + "s");
    all_passed = all_passed && out.passed;
    char line[512];
    std::snprintf(line, sizeof(line), "%s  %zu. %s  (cases=%zu, %.2fs)%s%s",
                  out.passed ? "PASS" : "FAIL", k + 1, criteria[k].name.c_str(), out.cases,
                  elapsed, out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::cout << line << std::endl;
  }
  std::cout << (all_passed ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILED")
            << std::endl;
  return all_passed ? 0 : 1;
}
