#include "canlift/parametrize.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "canlift/crystal.hpp"

namespace canlift {

IntVec AffineMap::apply(const IntVec& t) const {
  if (t.size() != l.size()) fail(ErrorCode::ArityMismatch, "affine map arity mismatch");
  IntVec out = l;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < t.size(); ++c) out[r] += m[r][c] * t[c];
  return out;
}

namespace {

void check_longest(const CartanDatum& c, const Word& word) {
  int big_n = (int)positive_roots(c).size();
  if ((int)word.size() != big_n || !is_reduced(c, word))
    fail(ErrorCode::NotReduced, "expected a reduced word of w0");
}

Rank2Kind move_kind(int len) {
  switch (len) {
    case 2: return Rank2Kind::Commuting;
    case 3: return Rank2Kind::A2;
    default:
      fail(ErrorCode::UnsupportedRank2Type, "rank-2 move of length " + std::to_string(len));
  }
}

const PLMap& piece_pl(Rank2Kind kind, TransitionSide side) {
  // Tropicalization of the derived subtraction-free piece. The (.)^vee twist
  // transposes the Cartan matrix inside the piece; the supported pieces
  // (commuting, A2) are self-dual so no adjustment is needed here.
  static std::map<std::pair<int, int>, PLMap> cache;
  auto key = std::make_pair((int)kind, (int)side);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const RationalMap& raw = solve_rank2_move(kind, side);
  PLMap pl = tropicalize_map(raw.components, raw.arity);
  return cache.emplace(key, std::move(pl)).first->second;
}

const std::vector<BraidMove>& cached_braid_path(const CartanDatum& c, const Word& from,
                                                const Word& to) {
  using Key = std::tuple<char, int, Word, Word>;
  static std::map<Key, std::vector<BraidMove>> cache;
  Key key{c.series, c.rank, from, to};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, braid_path(c, from, to)).first;
  return it->second;
}

IntVec transition_impl(const CartanDatum& c, const Word& from, const Word& to,
                       const IntVec& t, TransitionSide side) {
  if (t.size() != from.size()) fail(ErrorCode::ArityMismatch, "parameter length mismatch");
  const auto& path = cached_braid_path(c, from, to);
  Word w = from;
  IntVec cur = t;
  for (const BraidMove& mv : path) {
    const PLMap& piece = piece_pl(move_kind(mv.len), side);
    std::vector<long long> window(cur.begin() + mv.pos, cur.begin() + mv.pos + mv.len);
    auto out = piece.eval(window);
    std::copy(out.begin(), out.end(), cur.begin() + mv.pos);
    w = apply_braid_move(c, w, mv);
  }
  return cur;
}

// Embed a window component into full arity at 0-based offset.
PLComponent lift_component(const PLComponent& comp, int arity, int offset) {
  auto lift_poly = [&](const TropPoly& p) {
    TropPoly out;
    for (const AffineForm& f : p) {
      AffineForm g{std::vector<long long>(arity, 0), f.c};
      for (std::size_t k = 0; k < f.a.size(); ++k) g.a[offset + k] = f.a[k];
      out.push_back(g);
    }
    return out;
  };
  return PLComponent{arity, lift_poly(comp.pos), lift_poly(comp.neg)};
}

PLMap lift_piece(const PLMap& piece, int arity, int offset) {
  PLMap out = pl_identity(arity);
  for (std::size_t k = 0; k < piece.components.size(); ++k)
    out.components[offset + k] = lift_component(piece.components[k], arity, offset);
  return out;
}

}  // namespace

IntVec transition_lusztig(const CartanDatum& c, const Word& from, const Word& to,
                          const IntVec& t) {
  return transition_impl(c, from, to, t, TransitionSide::Lusztig);
}

IntVec transition_string(const CartanDatum& c, const Word& from, const Word& to,
                         const IntVec& t) {
  return transition_impl(c, from, to, t, TransitionSide::String);
}

PLMap transition_pl(const CartanDatum& c, const Word& from, const Word& to,
                    TransitionSide side) {
  int arity = (int)from.size();
  const auto& path = cached_braid_path(c, from, to);
  PLMap acc = pl_identity(arity);
  for (const BraidMove& mv : path) {
    PLMap step = lift_piece(piece_pl(move_kind(mv.len), side), arity, mv.pos);
    acc = pl_compose(step, acc);
  }
  return acc;
}

AffineMap zeta_trop(const CartanDatum& c, const Word& word) {
  check_longest(c, word);
  int n = (int)word.size();
  AffineMap out;
  out.l.assign(n, 0);
  out.m.assign(n, IntVec(n, 0));
  for (int k = 0; k < n; ++k) {
    out.m[k][k] = -1;
    for (int j = k + 1; j < n; ++j) out.m[k][j] = -c.a(word[k], word[j]);
  }
  return out;
}

IntVec anchor_constants(const CartanDatum& c, const Weight& lam, const Word& word) {
  if (c.series != 'A')
    fail(ErrorCode::UnsupportedType, "anchor constants need the type-A oracle");
  if (!is_dominant(lam)) fail(ErrorCode::NotDominant, "weight not dominant");
  check_longest(c, word);
  using Key = std::tuple<int, Weight, Word>;
  static std::map<Key, IntVec> cache;
  Key key{c.rank, lam, word};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CrystalGraph g = generate_crystal(c.rank, lam);
  IntVec m = string_extract(c.rank, lowest_element(g), word);
  int n = (int)word.size();
  IntVec l(n, 0);
  for (int k = 0; k < n; ++k) {
    l[k] = m[k];
    for (int j = k + 1; j < n; ++j) l[k] += c.a(word[k], word[j]) * m[j];
  }
  return cache.emplace(key, std::move(l)).first->second;
}

IntVec phi_map(const CartanDatum& c, const Word& to, const Word& from,
               const Weight& lam, const IntVec& t) {
  IntVec inner = zeta_trop(c, from).apply(t);
  IntVec moved = transition_lusztig(c, from, to, inner);
  IntVec anchor = anchor_constants(c, lam, to);
  for (std::size_t k = 0; k < moved.size(); ++k) moved[k] += anchor[k];
  return moved;
}

PLMap phi_map_pl(const CartanDatum& c, const Word& to, const Word& from,
                 const Weight& lam) {
  AffineMap z = zeta_trop(c, from);
  int n = (int)from.size();
  PLMap zpl;
  zpl.arity = n;
  for (int k = 0; k < n; ++k) {
    AffineForm f{std::vector<long long>(z.m[k].begin(), z.m[k].end()), z.l[k]};
    AffineForm zero{std::vector<long long>(n, 0), 0};
    zpl.components.push_back(PLComponent{n, {f}, {zero}});
  }
  PLMap out = pl_compose(transition_pl(c, from, to, TransitionSide::Lusztig), zpl);
  IntVec anchor = anchor_constants(c, lam, to);
  for (int k = 0; k < n; ++k)
    for (AffineForm& f : out.components[k].pos) f.c += anchor[k];
  return out;
}

AffineMap schutz_affine(const CartanDatum& c, const Word& word, const Weight& lam) {
  AffineMap out = zeta_trop(c, word);
  IntVec anchor = anchor_constants(c, lam, word);
  out.l = anchor;
  return out;
}

LusztigParam star_relabel(const CartanDatum& c, const LusztigParam& p) {
  LusztigParam out = p;
  for (std::size_t k = 0; k < p.word.size(); ++k) out.word[k] = star(c, p.word[k]);
  return out;
}

namespace {

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

}  // namespace

ConditionReport verify_phi_conditions(const CartanDatum& c, const Weight& lam,
                                      const std::vector<Word>& words,
                                      int samples, unsigned seed) {
  ConditionReport rep;
  int n = (int)words.front().size();

  // Sampling domain: string data of actual crystal elements, so every point
  // certifiably lies in the string cone of its word.
  CrystalGraph g = generate_crystal(c.rank, lam);
  std::vector<int> picked(g.vertices.size());
  for (std::size_t k = 0; k < picked.size(); ++k) picked[k] = (int)k;
  if ((int)picked.size() > samples) {
    std::mt19937 rng(seed);
    std::shuffle(picked.begin(), picked.end(), rng);
    picked.resize(samples);
  }
  std::map<Word, std::vector<IntVec>> data;
  for (const Word& w : words) {
    auto& pts = data[w];
    for (int v : picked) pts.push_back(string_extract(c.rank, g.vertices[v], w));
  }

  // (1) The image of the origin is the anchor.
  for (const Word& wi : words)
    for (const Word& wj : words) {
      IntVec at0 = phi_map(c, wi, wj, lam, IntVec(n, 0));
      rep.expect(at0 == anchor_constants(c, lam, wi),
                 "condition (1) fails for words " + vec_str(IntVec(wi.begin(), wi.end())) +
                     ", " + vec_str(IntVec(wj.begin(), wj.end())));
    }

  // (2) Compatibility with both transition actions, element by element.
  for (const Word& wi : words)
    for (const Word& wj : words)
      for (const Word& wk : words)
        for (std::size_t p = 0; p < picked.size(); ++p) {
          const IntVec& t = data[wj][p];
          IntVec direct = phi_map(c, wi, wj, lam, t);
          IntVec via_lusztig =
              transition_lusztig(c, wk, wi, phi_map(c, wk, wj, lam, t));
          IntVec via_string = phi_map(c, wi, wk, lam, transition_string(c, wj, wk, t));
          rep.expect(direct == via_lusztig,
                     "condition (2), Lusztig route, at t=" + vec_str(t));
          rep.expect(direct == via_string,
                     "condition (2), string route, at t=" + vec_str(t));
        }

  // (3) For i = i', t'_1 + t_1 and t'_k (k != 1) do not depend on t_1
  // (the map is affine there, so integer shifts outside the cone are safe).
  for (const Word& wi : words)
    for (const IntVec& t : data[wi]) {
      IntVec base = phi_map(c, wi, wi, lam, t);
      for (long long shift : {1LL, 7LL}) {
        IntVec t2 = t;
        t2[0] += shift;
        IntVec moved = phi_map(c, wi, wi, lam, t2);
        rep.expect(moved[0] + t2[0] == base[0] + t[0],
                   "condition (3), first coordinate, at t=" + vec_str(t));
        for (int k = 1; k < n; ++k)
          rep.expect(moved[k] == base[k],
                     "condition (3), coordinate " + std::to_string(k + 1) +
                         ", at t=" + vec_str(t));
      }
    }
  return rep;
}

}  // namespace canlift
