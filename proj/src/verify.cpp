#include "autgrp/verify.hpp"

#include <chrono>
#include <deque>
#include <random>
#include <unordered_set>

#include "autgrp/constructions.hpp"
#include "autgrp/lamplighter.hpp"
#include "autgrp/square_complex.hpp"

namespace autgrp {

namespace {

using nlohmann::ordered_json;

struct WordVecHash {
  size_t operator()(const std::vector<int>& w) const {
    size_t h = 1469598103934665603ull;
    for (int v : w) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t next(std::uint64_t bound) { return rng_() % bound; }
  GroupWord word(const AutomatonPtr& a, int max_len) {
    const int n = a->state_count();
    size_t len = static_cast<size_t>(next(static_cast<std::uint64_t>(max_len) + 1));
    std::vector<SignedGen> letters;
    letters.reserve(len);
    for (size_t i = 0; i < len; ++i) {
      letters.push_back(SignedGen{static_cast<int>(next(static_cast<std::uint64_t>(n))),
                                  next(2) == 1});
    }
    return GroupWord(a, std::move(letters));
  }

 private:
  std::mt19937_64 rng_;
};

GroupWord gen(const AutomatonPtr& a, int i, bool inv = false) {
  return GroupWord(a, {SignedGen{i, inv}});
}

class SuiteRunner {
 public:
  SuiteRunner(const std::string& spec, const VerifyOptions& opt)
      : opt_(opt),
        group_(std::make_shared<FiniteAbelianGroup>(
            FiniteAbelianGroup::parse(spec))),
        ax_(build_automaton_abelian(group_)),
        n_(static_cast<int>(group_->order())) {
    report_.group_spec = group_->spec_string();
    report_.options = opt;
  }

  VerificationReport run() {
    check_parity();
    check_self_duality_witness();
    check_sigma_c_identities();
    check_rigidity_record();
    check_level_transitivity(false);
    check_level_transitivity(true);
    check_first_level_stabilizers();
    check_section_at_zeros();
    check_free_semigroup_census();
    check_pi_closure();
    check_lamplighter_differential();
    check_rooted_permutations_regular();
    check_a0_infinite_order();
    return std::move(report_);
  }

 private:
  template <typename F>
  void record(const std::string& name, ordered_json params, bool informational,
              F&& body) {
    CheckRecord rec;
    rec.name = name;
    rec.parameters = std::move(params);
    rec.informational = informational;
    auto t0 = std::chrono::steady_clock::now();
    try {
      rec.pass = body(rec.details);
    } catch (const undecided_error& e) {
      rec.pass = false;
      rec.details["undecided"] = e.what();
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.details["error"] = e.what();
    }
    if (informational) rec.pass = true;
    auto t1 = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report_.checks.push_back(std::move(rec));
  }

  void check_parity() {
    record("parity_bireversibility_completeness", {{"order", n_}}, false,
           [&](ordered_json& d) {
             SquareComplex direct = build_complex_abelian(*group_);
             SquareComplex via_automaton = complex_from_automaton(*ax_);
             bool routes_agree = direct == via_automaton;
             bool reversible = is_reversible(*ax_);
             bool bireversible = is_bireversible(*ax_);
             bool complete = is_complete(direct);
             bool odd = group_->order() % 2 == 1;
             bool roots = group_->all_elements_have_square_roots();
             d["reversible"] = reversible;
             d["bireversible"] = bireversible;
             d["complex_complete"] = complete;
             d["order_odd"] = odd;
             d["all_square_roots"] = roots;
             d["complex_two_routes_agree"] = routes_agree;
             return reversible && routes_agree && bireversible == complete &&
                    complete == odd && odd == roots;
           });
  }

  void check_self_duality_witness() {
    record("self_duality_witness", {}, false, [&](ordered_json& d) {
      SelfDualityWitness w = check_self_duality(*group_);
      auto phi = ordered_json::object();
      auto psi = ordered_json::object();
      for (int i = 0; i < n_; ++i) {
        phi["a" + group_->label(i)] =
            group_->label(w.state_map[static_cast<size_t>(i)]);
        psi[group_->label(i)] =
            "a" + group_->label(w.letter_map[static_cast<size_t>(i)]);
      }
      d["phi"] = std::move(phi);
      d["psi"] = std::move(psi);
      return true;
    });
  }

  void check_sigma_c_identities() {
    record("sigma_c_identities", {{"pairs", n_ * n_}}, false,
           [&](ordered_json& d) {
             auto failures = ordered_json::array();
             for (int i = 0; i < n_; ++i) {
               for (int j = 0; j < n_; ++j) {
                 GroupWord sigma_i = rigid_translation(ax_, i);
                 bool eq6 = words_equal(sigma_i * gen(ax_, j),
                                        gen(ax_, group_->add(i, j)), opt_.section_cap);
                 bool eq9 = words_equal(gen(ax_, i, true) * gen(ax_, j),
                                        lamp_generator_c(ax_, group_->sub(j, i)),
                                        opt_.section_cap);
                 bool sig = words_equal(sigma_i * rigid_translation(ax_, j),
                                        rigid_translation(ax_, group_->add(i, j)),
                                        opt_.section_cap);
                 bool cgrp = words_equal(
                     lamp_generator_c(ax_, i) * lamp_generator_c(ax_, j),
                     lamp_generator_c(ax_, group_->add(i, j)), opt_.section_cap);
                 if (!(eq6 && eq9 && sig && cgrp)) {
                   failures.push_back({{"i", group_->label(i)},
                                       {"j", group_->label(j)},
                                       {"eq6", eq6},
                                       {"eq9", eq9},
                                       {"sigma_subgroup", sig},
                                       {"c_subgroup", cgrp}});
                 }
               }
             }
             bool b0 = words_equal(first_level_stabilizer_b(ax_, 0), gen(ax_, 0),
                                   opt_.section_cap);
             d["b0_equals_a0"] = b0;
             d["failures"] = failures;
             return failures.empty() && b0;
           });
  }

  // Records, per generator index i, whether the translation word
  // a_0 a_{-i}^-1 acts rigidly (all first-level sections trivial). This holds
  // exactly when i + i = 0; for other i the word still has translation root
  // sigma_i but translates deeper levels as well.
  void check_rigidity_record() {
    record("rigid_translation_behavior", {}, true, [&](ordered_json& d) {
      auto rows = ordered_json::array();
      bool pattern = true;
      for (int i = 0; i < n_; ++i) {
        bool rigid =
            acts_rigidly_as(rigid_translation(ax_, i), i, opt_.section_cap);
        bool doubled_zero = group_->add(i, i) == 0;
        if (rigid != doubled_zero) pattern = false;
        rows.push_back({{"i", group_->label(i)},
                        {"acts_rigidly", rigid},
                        {"doubled_zero", doubled_zero}});
      }
      d["per_generator"] = std::move(rows);
      d["rigid_iff_doubled_zero"] = pattern;
      return true;
    });
  }

  void check_level_transitivity(bool on_dual) {
    const std::string name =
        on_dual ? "dual_level_transitivity" : "level_transitivity";
    record(name, {{"depth", opt_.depth}}, false, [&](ordered_json& d) {
      MealyAutomaton aut = on_dual ? dual(*ax_) : *ax_;
      const long long base = on_dual ? ax_->state_count() : n_;
      auto sizes = ordered_json::array();
      bool ok = true;
      long long expected = 1;
      for (int m = 1; m <= opt_.depth; ++m) {
        expected *= base;
        if (expected > 2'000'000) {
          d["levels_truncated_at"] = m - 1;
          break;
        }
        long long got = orbit_on_level(aut, m);
        sizes.push_back({{"level", m}, {"orbit", got}, {"expected", expected}});
        ok = ok && got == expected;
      }
      d["orbits"] = std::move(sizes);
      return ok;
    });
  }

  void check_first_level_stabilizers() {
    record("first_level_stabilizers", {}, false, [&](ordered_json& d) {
      bool ok = true;
      auto failures = ordered_json::array();
      for (int i = 0; i < n_; ++i) {
        GroupWord b = first_level_stabilizer_b(ax_, i);
        std::vector<int> root = root_permutation(b);
        for (int x = 0; x < n_; ++x) {
          if (root[static_cast<size_t>(x)] != x) {
            ok = false;
            failures.push_back({{"i", group_->label(i)}, {"moved", group_->label(x)}});
          }
        }
        // Section at j is a_{i-j} followed by the translation word of -2i.
        int m2i = group_->negate(group_->add(i, i));
        for (int j = 0; j < n_; ++j) {
          GroupWord expect =
              gen(ax_, group_->sub(i, j)) * rigid_translation(ax_, m2i);
          if (!words_equal(section(b, j), expect, opt_.section_cap)) {
            ok = false;
            failures.push_back(
                {{"i", group_->label(i)}, {"section_at", group_->label(j)}});
          }
        }
      }
      d["failures"] = failures;

      // How often the plain suffix intertwining act(b_{i+j}, i w) = i act(a_j, w)
      // holds; it requires the translation word of i+j to be rigid.
      bool literal = true;
      int suffix_len = n_ <= 4 ? 3 : 2;
      for (int i = 0; i < n_ && literal; ++i) {
        for (int j = 0; j < n_ && literal; ++j) {
          GroupWord b = first_level_stabilizer_b(ax_, group_->add(i, j));
          std::vector<int> w(static_cast<size_t>(suffix_len), 1 % n_);
          std::vector<int> prefixed;
          prefixed.push_back(i);
          prefixed.insert(prefixed.end(), w.begin(), w.end());
          std::vector<int> lhs = act(b, prefixed);
          std::vector<int> rhs = act(gen(ax_, j), w);
          rhs.insert(rhs.begin(), i);
          literal = literal && lhs == rhs;
        }
      }
      d["literal_suffix_intertwining"] = literal;
      return ok;
    });
  }

  void check_section_at_zeros() {
    record("section_at_zeros", {{"max_k", 5}}, false, [&](ordered_json& d) {
      auto failures = ordered_json::array();
      bool plus_variant = true;
      Sampler sampler(opt_.seed + 1);
      std::vector<std::pair<int, int>> pairs;
      if (n_ <= 5) {
        for (int i = 0; i < n_; ++i) {
          for (int j = 0; j < n_; ++j) pairs.emplace_back(i, j);
        }
      } else {
        for (int s = 0; s < 50; ++s) {
          pairs.emplace_back(static_cast<int>(sampler.next(static_cast<std::uint64_t>(n_))),
                             static_cast<int>(sampler.next(static_cast<std::uint64_t>(n_))));
        }
      }
      for (auto [i, j] : pairs) {
        GroupWord prod = gen(ax_, i) * gen(ax_, j);
        int ki = 0;
        for (int k = 1; k <= 5; ++k) {
          ki = group_->add(ki, i);
          std::vector<int> zeros(static_cast<size_t>(k), 0);
          GroupWord sec = section_at(prod, zeros);
          bool minus_ok = words_equal(
              sec, gen(ax_, i) * gen(ax_, group_->sub(j, ki)), opt_.section_cap);
          if (!minus_ok) {
            failures.push_back(
                {{"i", group_->label(i)}, {"j", group_->label(j)}, {"k", k}});
          }
          if (plus_variant &&
              !words_equal(sec, gen(ax_, i) * gen(ax_, group_->add(j, ki)),
                           opt_.section_cap)) {
            plus_variant = false;
          }
        }
      }
      d["pairs_checked"] = pairs.size();
      d["failures"] = failures;
      d["plus_variant_holds"] = plus_variant;
      return failures.empty();
    });
  }

  void check_free_semigroup_census() {
    int length_cap = n_ <= 3 ? 4 : (n_ <= 5 ? 3 : 2);
    record("free_semigroup_census", {{"length_cap", length_cap}}, false,
           [&](ordered_json& d) {
             long long expected = 0;
             long long power = 1;
             for (int k = 1; k <= length_cap; ++k) {
               power *= n_;
               expected += power;
             }
             long long got =
                 distinct_positive_behaviors(ax_, length_cap, opt_.section_cap);
             d["distinct"] = got;
             d["expected"] = expected;
             return got == expected;
           });
  }

  void check_pi_closure() {
    record("pi_closure", {}, false, [&](ordered_json& d) {
      auto failures = ordered_json::array();
      std::vector<std::array<int, 3>> triples;
      if (n_ <= 4) {
        for (int i = 0; i < n_; ++i) {
          for (int j = 0; j < n_; ++j) {
            for (int k = 0; k < n_; ++k) triples.push_back({i, j, k});
          }
        }
      } else {
        Sampler sampler(opt_.seed + 2);
        for (int s = 0; s < 30; ++s) {
          triples.push_back(
              {static_cast<int>(sampler.next(static_cast<std::uint64_t>(n_))),
               static_cast<int>(sampler.next(static_cast<std::uint64_t>(n_))),
               static_cast<int>(sampler.next(static_cast<std::uint64_t>(n_)))});
        }
      }
      for (auto [i, j, k] : triples) {
        GroupWord c = lamp_generator_c(ax_, k);
        auto left = constant_translation(gen(ax_, i, true) * c * gen(ax_, j),
                                         opt_.section_cap);
        auto right = constant_translation(gen(ax_, i) * c * gen(ax_, j, true),
                                          opt_.section_cap);
        int expect_left = group_->add(group_->sub(k, i), j);
        int expect_right = group_->sub(group_->add(i, k), j);
        if (!left || *left != expect_left || !right || *right != expect_right) {
          failures.push_back({{"i", group_->label(i)},
                              {"j", group_->label(j)},
                              {"k", group_->label(k)}});
        }
      }
      d["triples_checked"] = triples.size();
      d["failures"] = failures;
      return failures.empty();
    });
  }

  void check_lamplighter_differential() {
    record("lamplighter_differential",
           {{"samples", opt_.samples}, {"word_len", opt_.word_len}}, false,
           [&](ordered_json& d) {
             Sampler sampler(opt_.seed);
             auto mismatches = ordered_json::array();
             int homomorphism_failures = 0;
             for (int s = 0; s < opt_.samples; ++s) {
               GroupWord u = sampler.word(ax_, opt_.word_len);
               GroupWord v = sampler.word(ax_, opt_.word_len);
               bool we = words_equal(u, v, opt_.section_cap);
               bool le = word_to_lamplighter(u) == word_to_lamplighter(v);
               if (we != le) {
                 mismatches.push_back({{"u", u.str()},
                                       {"v", v.str()},
                                       {"words_equal", we},
                                       {"lamplighter_equal", le}});
               }
               if (s % 5 == 0) {
                 LamplighterElement uv = word_to_lamplighter(u * v);
                 LamplighterElement prod = ll_multiply(
                     *group_, word_to_lamplighter(u), word_to_lamplighter(v));
                 if (!(uv == prod)) ++homomorphism_failures;
               }
             }
             int roundtrips = (opt_.samples * 2) / 5;
             int roundtrip_failures = 0;
             for (int s = 0; s < roundtrips; ++s) {
               GroupWord u = sampler.word(ax_, opt_.word_len);
               GroupWord back = lamplighter_to_word(ax_, word_to_lamplighter(u));
               if (!words_equal(u, back, opt_.section_cap)) ++roundtrip_failures;
               if (!(word_to_lamplighter(back) == word_to_lamplighter(u))) {
                 ++roundtrip_failures;
               }
             }
             d["pair_mismatches"] = mismatches;
             d["homomorphism_failures"] = homomorphism_failures;
             d["roundtrips"] = roundtrips;
             d["roundtrip_failures"] = roundtrip_failures;
             return mismatches.empty() && homomorphism_failures == 0 &&
                    roundtrip_failures == 0;
           });
  }

  void check_rooted_permutations_regular() {
    record("rooted_permutations_regular", {}, false, [&](ordered_json& d) {
      auto failures = ordered_json::array();
      for (int i = 0; i < n_; ++i) {
        std::vector<int> root = root_permutation(gen(ax_, i));
        for (int x = 0; x < n_; ++x) {
          if (root[static_cast<size_t>(x)] != group_->add(x, i)) {
            failures.push_back({{"state", "a" + group_->label(i)}});
            break;
          }
        }
      }
      d["failures"] = failures;
      return failures.empty();
    });
  }

  void check_a0_infinite_order() {
    record("a0_infinite_order", {{"max_power", 20}}, false,
           [&](ordered_json& d) {
             for (int k = 1; k <= 20; ++k) {
               GroupWord w(ax_, std::vector<SignedGen>(
                                    static_cast<size_t>(k), SignedGen{0, false}));
               if (is_identity(w, opt_.section_cap)) {
                 d["trivial_power"] = k;
                 return false;
               }
             }
             return true;
           });
  }

  VerifyOptions opt_;
  std::shared_ptr<const FiniteAbelianGroup> group_;
  AutomatonPtr ax_;
  int n_;
  VerificationReport report_;
};

}  // namespace

bool VerificationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.informational && !c.pass) return false;
  }
  return true;
}

nlohmann::ordered_json VerificationReport::to_json(bool with_timings) const {
  ordered_json j;
  j["schema_version"] = 1;
  j["tool"] = "autgrp";
  j["group"] = group_spec;
  j["parameters"] = {{"depth", options.depth},
                     {"word_len", options.word_len},
                     {"samples", options.samples},
                     {"seed", options.seed},
                     {"section_cap", options.section_cap}};
  auto checks_json = ordered_json::array();
  int passed = 0, failed = 0, informational = 0;
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["parameters"] = c.parameters;
    e["pass"] = c.pass;
    e["informational"] = c.informational;
    e["details"] = c.details;
    if (with_timings) e["wall_ms"] = c.wall_ms;
    checks_json.push_back(std::move(e));
    if (c.informational) {
      ++informational;
    } else if (c.pass) {
      ++passed;
    } else {
      ++failed;
    }
  }
  j["checks"] = std::move(checks_json);
  j["summary"] = {{"passed", passed},
                  {"failed", failed},
                  {"informational", informational}};
  j["verdict"] = all_passed() ? "pass" : "fail";
  return j;
}

VerificationReport verify_suite(const std::string& group_spec,
                                const VerifyOptions& options) {
  return SuiteRunner(group_spec, options).run();
}

long long orbit_on_level(const MealyAutomaton& a, int m) {
  require_permutational(a);
  if (m == 0) return 1;
  std::vector<int> start(static_cast<size_t>(m), 0);
  std::unordered_set<std::vector<int>, WordVecHash> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(start);
  queue.push_back(start);
  MealyAutomaton inv = inverse(a);
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    const MealyAutomaton* machines[] = {&a, &inv};
    for (int q = 0; q < a.state_count(); ++q) {
      for (const MealyAutomaton* machine : machines) {
        std::vector<int> img = act(*machine, q, cur);
        if (!seen.contains(img)) {
          seen.insert(img);
          queue.push_back(std::move(img));
        }
      }
    }
  }
  return static_cast<long long>(seen.size());
}

long long distinct_positive_behaviors(const AutomatonPtr& a, int max_len,
                                      std::uint64_t cap) {
  const int n = a->state_count();
  std::vector<GroupWord> reps;
  std::vector<SignedGen> letters;
  // Enumerate positive words of each length in lexicographic order.
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> idx(static_cast<size_t>(len), 0);
    while (true) {
      letters.clear();
      for (int v : idx) letters.push_back(SignedGen{v, false});
      GroupWord w(a, letters);
      bool fresh = true;
      for (const GroupWord& r : reps) {
        if (words_equal(w, r, cap)) {
          fresh = false;
          break;
        }
      }
      if (fresh) reps.push_back(std::move(w));
      int pos = len - 1;
      while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == n) {
        idx[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return static_cast<long long>(reps.size());
}

}  // namespace autgrp
