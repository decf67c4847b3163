#ifndef CANLIFT_LIFTING_HPP
#define CANLIFT_LIFTING_HPP

#include <array>
#include <string>
#include <vector>

#include "canlift/cartan.hpp"
#include "canlift/rational.hpp"
#include "canlift/tropical.hpp"

namespace canlift {

// Exact rational square matrix; the type-A realization lives in SL_{rank+1}.
class GroupMatrix {
 public:
  explicit GroupMatrix(int dim = 1);  // identity
  static GroupMatrix identity(int dim);

  int dim() const { return dim_; }
  Rat& at(int r, int c) { return e_[r * dim_ + c]; }          // 0-based
  const Rat& at(int r, int c) const { return e_[r * dim_ + c]; }

  GroupMatrix operator*(const GroupMatrix& o) const;
  bool operator==(const GroupMatrix& o) const = default;

  GroupMatrix transpose() const;
  GroupMatrix inverse() const;  // exact; fails when singular
  Rat determinant() const;

 private:
  int dim_;
  std::vector<Rat> e_;
};

// Generators of the SL_{n+1} realization; i is 1-based.
GroupMatrix gen_x(int rank, int i, const Rat& t);
GroupMatrix gen_y(int rank, int i, const Rat& t);
GroupMatrix gen_torus(int rank, int i, const Rat& t);  // t^{alpha_i^vee}, t != 0

// x_i(t) = x_{i_1}(t_1)...x_{i_m}(t_m).
GroupMatrix x_word(int rank, const Word& word, const RatVec& t);

// x_{-i}(t) = y_{i_1}(t_1) t_1^{-alpha^vee} ... ; all t_k > 0.
GroupMatrix x_minus_word(int rank, const Word& word, const RatVec& t);

// x -> x^{iota T}: swaps x_i(t) <-> y_i(t) and inverts torus elements.
// Matrix route: D (x^T)^{-1} D^{-1} with D = diag(1,-1,1,...).
GroupMatrix chevalley_omega(const GroupMatrix& x);

// Unique Gaussian decomposition x = L H U (unipotent lower, diagonal,
// unipotent upper); NotInG0 when a leading principal minor vanishes.
struct GaussFactors {
  GroupMatrix lower, diag, upper;
};
GaussFactors gauss_decompose(const GroupMatrix& x);

// zeta(x) = [x^{iota T}]_+.
GroupMatrix zeta(const GroupMatrix& x);

// Closed form of Prop. FormZeta: t'_k = t_k^{-1} prod_{j>k} t_j^{-a(i_j,i_k)}.
RatVec zeta_formula_params(const CartanDatum& c, const Word& word, const RatVec& t);

struct ZetaReport {
  bool pass = false;
  Word word;
  RatVec input, predicted;
  GroupMatrix lhs, rhs;  // x_word(i, t') and zeta(x_minus_word(i, t))
  ZetaReport() : lhs(1), rhs(1) {}
};

// Asserts x_word(i, t') == zeta(x_minus_word(i, t)) exactly.
ZetaReport verify_zeta_formula(const CartanDatum& c, const Word& word, const RatVec& t);

// --- Rank-2 transition pieces ----------------------------------------------

enum class Rank2Kind { Commuting, A2, B2 };
enum class TransitionSide { Lusztig, String };

// Symbolic parameter map (a,b,...) -> (a',b',...) with
// x_{i'}(out) = x_i(in) (Lusztig) or x_{-i'}(out) = x_{-i}(in) (String),
// each component certified subtraction-free.
struct RationalMap {
  int arity = 0;
  std::vector<SFPtr> components;

  RatVec eval(const RatVec& point) const;
};

// Derived by solving the local matrix identity exactly; cached per (kind, side).
const RationalMap& solve_rank2_move(Rank2Kind kind, TransitionSide side);

std::string matrix_to_string(const GroupMatrix& m);

}  // namespace canlift

#endif
