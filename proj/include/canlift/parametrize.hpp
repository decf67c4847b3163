#ifndef CANLIFT_PARAMETRIZE_HPP
#define CANLIFT_PARAMETRIZE_HPP

#include <string>
#include <vector>

#include "canlift/cartan.hpp"
#include "canlift/lifting.hpp"
#include "canlift/tropical.hpp"

namespace canlift {

using IntVec = std::vector<long long>;

struct LusztigParam {
  Word word;
  IntVec t;
};

struct StringParam {
  Word word;
  IntVec t;
};

// Affine map t -> l + M t.
struct AffineMap {
  IntVec l;
  std::vector<IntVec> m;

  IntVec apply(const IntVec& t) const;
  bool operator==(const AffineMap& o) const = default;
};

// Tropicalized parametrization-change maps, composed from rank-2 pieces along
// a braid path; the Langlands-dual Cartan matrix drives the piece selection.
IntVec transition_lusztig(const CartanDatum& c, const Word& from, const Word& to,
                          const IntVec& t);
IntVec transition_string(const CartanDatum& c, const Word& from, const Word& to,
                         const IntVec& t);

// Symbolic PL form of a transition map (composition of the window pieces).
PLMap transition_pl(const CartanDatum& c, const Word& from, const Word& to,
                    TransitionSide side);

// Tropical zeta after (.)^vee: t'_k = -t_k - sum_{j>k} a(i_k, i_j) t_j.
AffineMap zeta_trop(const CartanDatum& c, const Word& word);

// l_k = m_k + sum_{j>k} a(i_k, i_j) m_j with m the string extraction of the
// lowest-weight element; type A only (needs the tableau oracle).
IntVec anchor_constants(const CartanDatum& c, const Weight& lam, const Word& word);

// Lusztig parametrization w.r.t. `to` of Phi_lambda(b) given the string
// parametrization t of b w.r.t. `from`.
IntVec phi_map(const CartanDatum& c, const Word& to, const Word& from,
               const Weight& lam, const IntVec& t);

// The map t -> transition(from->to)(zeta_trop(from)(t)) + anchor(lam, to) as a
// PLMap (symbolic; affine when to == from).
PLMap phi_map_pl(const CartanDatum& c, const Word& to, const Word& from,
                 const Weight& lam);

// Affine Schuetzenberger formula: t'_k = l_k - t_k - sum_{j>k} a(i_k,i_j) t_j,
// output read as Lusztig data w.r.t. the star-relabeled word.
AffineMap schutz_affine(const CartanDatum& c, const Word& word, const Weight& lam);

LusztigParam star_relabel(const CartanDatum& c, const LusztigParam& p);

struct ConditionReport {
  bool pass = true;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

// Characterizing conditions of the geometric-lifting family:
// (1) value at 0 is the anchor, (2) compatibility with both transition
// actions, (3) t'_1 + t_1 and t'_k (k != 1) do not depend on t_1.
ConditionReport verify_phi_conditions(const CartanDatum& c, const Weight& lam,
                                      const std::vector<Word>& words,
                                      int samples, unsigned seed);

}  // namespace canlift

#endif
