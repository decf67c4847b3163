#include "canlift/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "canlift/lifting.hpp"

namespace canlift {

namespace {

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
  return out;
}

}  // namespace

CorollaryReport verify_corollary(const CartanDatum& c, const Weight& lam, const Word& word) {
  CorollaryReport rep;
  CrystalGraph g = generate_crystal(c.rank, lam);
  AffineMap schutz = schutz_affine(c, word, lam);
  IntVec anchor = anchor_constants(c, lam, word);

  Word starred = word;
  for (auto& i : starred) i = star(c, i);
  auto beta_star = roots_along_word(c, starred);
  Weight w0lam = weyl_action(c, longest_word(c), lam);
  Tableau lowest = lowest_element(g);

  std::set<IntVec> images;
  for (const Tableau& b : g.vertices) {
    IntVec t = string_extract(c.rank, b, word);
    IntVec tp = schutz.apply(t);
    rep.table.push_back({b, t, tp});

    // (a) nonnegativity
    for (long long x : tp)
      rep.expect(x >= 0, "negative output coordinate at t=" + vec_str(t));
    // (b) injectivity
    rep.expect(images.insert(tp).second, "duplicate image t'=" + vec_str(tp));
    // (c) weight consistency:
    // lambda - sum t'_k beta_k^(i*) = w0(lambda) + sum t_k alpha_{i_k^*}
    Weight lhs = lam;
    for (std::size_t k = 0; k < tp.size(); ++k) {
      Weight bw = root_to_weight(c, beta_star[k]);
      for (std::size_t r = 0; r < lhs.size(); ++r) lhs[r] -= tp[k] * bw[r];
    }
    Weight rhs = w0lam;
    for (std::size_t k = 0; k < t.size(); ++k) {
      RootVec alpha(c.rank, 0);
      alpha[star(c, word[k]) - 1] = 1;
      Weight aw = root_to_weight(c, alpha);
      for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] += t[k] * aw[r];
    }
    rep.expect(lhs == rhs, "weight identity fails at t=" + vec_str(t));
    // (d) endpoint pins
    if (b == g.vertices[0])
      rep.expect(tp == anchor, "highest weight does not map to the anchor");
    if (b == lowest)
      rep.expect(tp == IntVec(tp.size(), 0), "lowest element does not map to zero");
  }

  // (e) eta-equivariance of evacuation: evac(f_j b) is the f_{j*}-preimage
  // of evac(b).
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    Tableau ev = evacuation(c.rank, g.vertices[v]);
    for (const auto& [j, w] : g.edges[v]) {
      Tableau img = evacuation(c.rank, g.vertices[w]);
      auto back = apply_f(c.rank, img, star(c, j));
      rep.expect(back.has_value() && *back == ev,
                 "equivariance fails on an f_" + std::to_string(j) + " edge");
    }
  }
  return rep;
}

// --- Acceptance criteria ------------------------------------------------------

namespace {

struct Check {
  bool pass = true;
  long long count = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && pass) {
      pass = false;
      first_failure = what;
    }
  }
  std::string detail(const std::string& label) const {
    std::ostringstream os;
    os << count << " " << label;
    if (!pass) os << "; first failure: " << first_failure;
    return os.str();
  }
};

Rat random_positive_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(1, 9);
  return Rat(d(rng), d(rng));
}

RatVec random_positive_point(std::mt19937& rng, std::size_t n) {
  RatVec out(n);
  for (auto& x : out) x = random_positive_rat(rng);
  return out;
}

IntVec random_int_point(std::mt19937& rng, std::size_t n, long long lo, long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  IntVec out(n);
  for (auto& x : out) x = d(rng);
  return out;
}

// 1. FormZeta exactness.
CriterionResult crit_formzeta(unsigned seed) {
  CriterionResult res{1, "FormZeta exactness (A1-A3 all words, A4 sampled)"};
  std::mt19937 rng(seed);
  Check ck;
  for (int rank = 1; rank <= 3; ++rank) {
    CartanDatum c = build_cartan('A', rank);
    for (const Word& w : all_reduced_words(c, longest_word(c)))
      for (int rep = 0; rep < 3; ++rep) {
        auto r = verify_zeta_formula(c, w, random_positive_point(rng, w.size()));
        ck.expect(r.pass, "A" + std::to_string(rank) + " word failed");
      }
  }
  CartanDatum a4 = build_cartan('A', 4);
  auto words4 = all_reduced_words(a4, longest_word(a4));
  std::uniform_int_distribution<std::size_t> pick(0, words4.size() - 1);
  for (int rep = 0; rep < 100; ++rep) {
    const Word& w = words4[pick(rng)];
    auto r = verify_zeta_formula(a4, w, random_positive_point(rng, w.size()));
    ck.expect(r.pass, "A4 sample failed");
  }
  res.pass = ck.pass;
  res.detail = ck.detail("(word, point) pairs, exact rational equality");
  return res;
}

// 2. Rank-2 move soundness.
CriterionResult crit_rank2(unsigned seed) {
  CriterionResult res{2, "rank-2 move soundness (commuting + A2, both sides)"};
  std::mt19937 rng(seed);
  Check ck;
  for (int rep = 0; rep < 100; ++rep) {
    {  // commuting, checked in SL4 on the (1,3) pair
      RatVec in = random_positive_point(rng, 2);
      RatVec out = solve_rank2_move(Rank2Kind::Commuting, TransitionSide::Lusztig).eval(in);
      ck.expect(x_word(3, {1, 3}, in) == x_word(3, {3, 1}, out), "commuting Lusztig");
      RatVec outs = solve_rank2_move(Rank2Kind::Commuting, TransitionSide::String).eval(in);
      ck.expect(x_minus_word(3, {1, 3}, in) == x_minus_word(3, {3, 1}, outs),
                "commuting string");
    }
    {  // A2 in SL3
      RatVec in = random_positive_point(rng, 3);
      RatVec out = solve_rank2_move(Rank2Kind::A2, TransitionSide::Lusztig).eval(in);
      ck.expect(x_word(2, {1, 2, 1}, in) == x_word(2, {2, 1, 2}, out), "A2 Lusztig");
      RatVec outs = solve_rank2_move(Rank2Kind::A2, TransitionSide::String).eval(in);
      ck.expect(x_minus_word(2, {1, 2, 1}, in) == x_minus_word(2, {2, 1, 2}, outs),
                "A2 string");
    }
  }
  res.pass = ck.pass;
  res.detail = ck.detail("exact matrix identities");
  return res;
}

// 3. Tropical coherence: identity and cocycle laws.
CriterionResult crit_coherence(unsigned seed) {
  CriterionResult res{3, "tropical coherence (identity + cocycle)"};
  std::mt19937 rng(seed);
  Check ck;
  auto check_laws = [&](const CartanDatum& c, const std::vector<Word>& words,
                        const std::vector<IntVec>& points) {
    for (const IntVec& t : points) {
      for (const Word& wi : words) {
        ck.expect(transition_lusztig(c, wi, wi, t) == t, "Lusztig identity law");
        ck.expect(transition_string(c, wi, wi, t) == t, "string identity law");
      }
      for (const Word& wi : words)
        for (const Word& wj : words)
          for (const Word& wk : words) {
            ck.expect(transition_lusztig(c, wi, wk, t) ==
                          transition_lusztig(c, wj, wk, transition_lusztig(c, wi, wj, t)),
                      "Lusztig cocycle at t=" + vec_str(t));
            ck.expect(transition_string(c, wi, wk, t) ==
                          transition_string(c, wj, wk, transition_string(c, wi, wj, t)),
                      "string cocycle at t=" + vec_str(t));
          }
    }
  };
  {
    CartanDatum c = build_cartan('A', 2);
    auto words = all_reduced_words(c, longest_word(c));
    std::vector<IntVec> points;
    for (long long x = 0; x <= 20; ++x)
      for (long long y = 0; y <= 20; ++y)
        for (long long z = 0; z <= 20; ++z) points.push_back({x, y, z});
    for (int r = 0; r < 500; ++r) points.push_back(random_int_point(rng, 3, -20, 20));
    check_laws(c, words, points);
  }
  {
    CartanDatum c = build_cartan('A', 3);
    auto all = all_reduced_words(c, longest_word(c));
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Word> words(all.begin(), all.begin() + 5);
    std::vector<IntVec> points;
    points.push_back(IntVec(6, 0));
    for (int k = 0; k < 6; ++k) {
      IntVec e(6, 0);
      e[k] = 1;
      points.push_back(e);
    }
    for (int r = 0; r < 500; ++r) points.push_back(random_int_point(rng, 6, 0, 20));
    check_laws(c, words, points);
  }
  res.pass = ck.pass;
  res.detail = ck.detail("exact law instances");
  return res;
}

// 4. Theorem <=> Corollary at i = i'.
CriterionResult crit_affine(unsigned seed) {
  (void)seed;
  CriterionResult res{4, "theorem reduces to the affine corollary at i = i'"};
  Check ck;
  auto check_datum = [&](const CartanDatum& c, const Weight* lam) {
    Word w0 = longest_word(c);
    int n = (int)w0.size();
    AffineMap z = zeta_trop(c, w0);
    // Structural form of the linear part: -(I + strictly upper Cartan pattern).
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        long long want = j < k ? 0 : (j == k ? -1 : -c.a(w0[k], w0[j]));
        ck.expect(z.m[k][j] == want, "zeta linear part mismatch");
      }
    // PL composite (empty braid path) must detect as the same affine map.
    PLMap composite = lam ? phi_map_pl(c, w0, w0, *lam)
                          : pl_compose(transition_pl(c, w0, w0, TransitionSide::Lusztig),
                                       [&] {
                                         PLMap zp;
                                         zp.arity = n;
                                         for (int k = 0; k < n; ++k) {
                                           AffineForm f{std::vector<long long>(
                                                            z.m[k].begin(), z.m[k].end()),
                                                        0};
                                           AffineForm zero{std::vector<long long>(n, 0), 0};
                                           zp.components.push_back(PLComponent{n, {f}, {zero}});
                                         }
                                         return zp;
                                       }());
    IntVec anchor = lam ? anchor_constants(c, *lam, w0) : IntVec(n, 0);
    for (int k = 0; k < n; ++k) {
      auto form = is_affine(composite.components[k]);
      ck.expect(form.has_value(), "component not affine");
      if (!form) continue;
      ck.expect(form->c == anchor[k], "constant part mismatch");
      for (int j = 0; j < n; ++j)
        ck.expect(form->a[j] == z.m[k][j], "coefficient mismatch");
    }
  };
  Weight a1{2}, a2{1, 1}, a3{0, 1, 0};
  check_datum(build_cartan('A', 1), &a1);
  check_datum(build_cartan('A', 2), &a2);
  check_datum(build_cartan('A', 3), &a3);
  check_datum(build_cartan('B', 2), nullptr);
  check_datum(build_cartan('G', 2), nullptr);
  res.pass = ck.pass;
  res.detail = ck.detail("coefficient-level equalities (A1, A2, A3, B2, G2)");
  return res;
}

// 5. Characterizing conditions (1), (2), (3).
CriterionResult crit_conditions(unsigned seed) {
  CriterionResult res{5, "characterizing conditions (1)-(3)"};
  Check ck;
  {
    CartanDatum c = build_cartan('A', 2);
    auto words = all_reduced_words(c, longest_word(c));
    for (Weight lam : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}}) {
      auto rep = verify_phi_conditions(c, lam, words, 10, seed);
      ck.expect(rep.pass, "A2 " + (rep.failures.empty() ? "" : rep.failures.front()));
    }
  }
  {
    CartanDatum c = build_cartan('A', 3);
    auto words = all_reduced_words(c, longest_word(c));  // all 16 words
    auto rep = verify_phi_conditions(c, {0, 1, 0}, words, 4, seed);
    ck.expect(rep.pass, "A3 " + (rep.failures.empty() ? "" : rep.failures.front()));
  }
  res.pass = ck.pass;
  res.detail = ck.detail("condition suites (A2: 3 weights, A3: omega_2, all word pairs)");
  return res;
}

// 6. Oracle end-to-end.
CriterionResult crit_corollary(unsigned seed) {
  (void)seed;
  CriterionResult res{6, "oracle end-to-end (affine involution on B(lambda))"};
  Check ck;
  long long elements = 0;
  {
    CartanDatum c = build_cartan('A', 1);
    for (long long m = 0; m <= 10; ++m) {
      auto rep = verify_corollary(c, {m}, {1});
      elements += (long long)rep.table.size();
      ck.expect(rep.pass, "A1 m=" + std::to_string(m) +
                              (rep.failures.empty() ? "" : ": " + rep.failures.front()));
    }
  }
  {
    CartanDatum c = build_cartan('A', 2);
    auto words = all_reduced_words(c, longest_word(c));
    for (long long a = 0;; ++a) {
      if (weyl_dimension(2, {a, 0}) > 1000) break;
      for (long long b = 0;; ++b) {
        if (weyl_dimension(2, {a, b}) > 1000) break;
        for (const Word& w : words) {
          auto rep = verify_corollary(c, {a, b}, w);
          elements += (long long)rep.table.size();
          ck.expect(rep.pass, "A2 lambda=(" + std::to_string(a) + "," + std::to_string(b) +
                                  ")" + (rep.failures.empty() ? "" : ": " + rep.failures.front()));
        }
      }
    }
  }
  {
    CartanDatum c = build_cartan('A', 3);
    std::vector<Word> words = {longest_word(c), {3, 2, 3, 1, 2, 3}, {2, 1, 3, 2, 1, 3}};
    for (Weight lam : {Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{1, 0, 1}})
      for (const Word& w : words) {
        auto rep = verify_corollary(c, lam, w);
        elements += (long long)rep.table.size();
        ck.expect(rep.pass, "A3" + (rep.failures.empty() ? "" : ": " + rep.failures.front()));
      }
  }
  {  // regression fixture: A2, omega_1, word (1,2,1)
    CartanDatum c = build_cartan('A', 2);
    auto rep = verify_corollary(c, {1, 0}, {1, 2, 1});
    std::map<IntVec, IntVec> got;
    for (const auto& row : rep.table) got[row.t] = row.tprime;
    std::map<IntVec, IntVec> want{{{0, 0, 0}, {1, 0, 1}},
                                  {{1, 0, 0}, {0, 0, 1}},
                                  {{0, 1, 1}, {0, 0, 0}}};
    ck.expect(got == want, "A2/omega_1 regression table mismatch");
  }
  res.pass = ck.pass;
  res.detail = ck.detail("suites over " + std::to_string(elements) + " crystal elements");
  return res;
}

// 7. transition_string equals oracle re-extraction.
CriterionResult crit_string_oracle(unsigned seed) {
  (void)seed;
  CriterionResult res{7, "string transitions match oracle re-extraction"};
  Check ck;
  auto sweep = [&](const CartanDatum& c, const Weight& lam, const std::vector<Word>& words) {
    CrystalGraph g = generate_crystal(c.rank, lam);
    for (const Tableau& b : g.vertices)
      for (const Word& wi : words) {
        IntVec ti = string_extract(c.rank, b, wi);
        for (const Word& wj : words)
          ck.expect(transition_string(c, wi, wj, ti) == string_extract(c.rank, b, wj),
                    "string transition disagrees with oracle at t=" + vec_str(ti));
      }
  };
  {
    CartanDatum c = build_cartan('A', 1);
    for (long long m = 0; m <= 10; ++m) sweep(c, {m}, {{1}});
  }
  {
    CartanDatum c = build_cartan('A', 2);
    auto words = all_reduced_words(c, longest_word(c));
    for (long long a = 0;; ++a) {
      if (weyl_dimension(2, {a, 0}) > 1000) break;
      for (long long b = 0;; ++b) {
        if (weyl_dimension(2, {a, b}) > 1000) break;
        sweep(c, {a, b}, words);
      }
    }
  }
  {
    CartanDatum c = build_cartan('A', 3);
    std::vector<Word> words = {longest_word(c), {3, 2, 3, 1, 2, 3}, {2, 1, 3, 2, 1, 3}};
    for (Weight lam : {Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{1, 0, 1}})
      sweep(c, lam, words);
  }
  res.pass = ck.pass;
  res.detail = ck.detail("element-level agreements");
  return res;
}

// 8. sl2 closed form.
CriterionResult crit_sl2(unsigned seed) {
  (void)seed;
  CriterionResult res{8, "sl2 closed form t' = m - t"};
  Check ck;
  CartanDatum c = build_cartan('A', 1);
  for (long long m = 0; m <= 10; ++m) {
    CrystalGraph g = generate_crystal(1, {m});
    AffineMap schutz = schutz_affine(c, {1}, {m});
    for (const Tableau& b : g.vertices) {
      IntVec t = string_extract(1, b, {1});
      IntVec tp = schutz.apply(t);
      ck.expect(tp == IntVec{m - t[0]}, "closed form mismatch at m=" + std::to_string(m));
      ck.expect(string_extract(1, evacuation(1, b), {1}) == tp,
                "oracle evacuation disagrees at m=" + std::to_string(m));
    }
  }
  res.pass = ck.pass;
  res.detail = ck.detail("table entries, m = 0..10");
  return res;
}

// 9. Tropicalization well-definedness.
CriterionResult crit_welldef(unsigned seed) {
  CriterionResult res{9, "tropicalization well-definedness on rank-2 pieces"};
  std::mt19937 rng(seed);
  Check ck;
  auto sweep = [&](const RationalMap& map, const std::string& label) {
    int n = map.arity;
    std::vector<IntVec> points;
    std::vector<long long> grid{-20, -13, -5, -1, 0, 1, 4, 12, 20};
    if (n == 2) {
      for (long long x : grid)
        for (long long y : grid) points.push_back({x, y});
    } else {
      for (long long x : grid)
        for (long long y : grid)
          for (long long z : grid) points.push_back({x, y, z});
    }
    for (int r = 0; r < 500; ++r) points.push_back(random_int_point(rng, n, -20, 20));
    for (const SFPtr& comp : map.components) {
      PLComponent original = tropicalize(comp, n);
      auto [p, q] = sf_normalize(comp, n);
      RationalFn fn(p, q);
      PLComponent normalized = tropicalize(sf_from_rational(fn), n);
      for (const IntVec& t : points)
        ck.expect(original.eval(t) == normalized.eval(t),
                  label + " disagreement at t=" + vec_str(t));
    }
  };
  sweep(solve_rank2_move(Rank2Kind::Commuting, TransitionSide::Lusztig), "commuting/Lusztig");
  sweep(solve_rank2_move(Rank2Kind::Commuting, TransitionSide::String), "commuting/string");
  sweep(solve_rank2_move(Rank2Kind::A2, TransitionSide::Lusztig), "A2/Lusztig");
  sweep(solve_rank2_move(Rank2Kind::A2, TransitionSide::String), "A2/string");
  res.pass = ck.pass;
  res.detail = ck.detail("grid evaluations, zero tolerance");
  return res;
}

}  // namespace

CriterionResult run_criterion(int id, unsigned seed) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult res;
  switch (id) {
    case 1: res = crit_formzeta(seed); break;
    case 2: res = crit_rank2(seed); break;
    case 3: res = crit_coherence(seed); break;
    case 4: res = crit_affine(seed); break;
    case 5: res = crit_conditions(seed); break;
    case 6: res = crit_corollary(seed); break;
    case 7: res = crit_string_oracle(seed); break;
    case 8: res = crit_sl2(seed); break;
    case 9: res = crit_welldef(seed); break;
    default: fail(ErrorCode::Usage, "criterion id out of range (1..9)");
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CriterionResult> run_acceptance(unsigned seed, bool print) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) {
    CriterionResult r = run_criterion(id, seed);
    if (print)
      std::printf("%s criterion %d: %s (%s, %.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.detail.c_str(), r.seconds);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace canlift
