#ifndef CANLIFT_CARTAN_HPP
#define CANLIFT_CARTAN_HPP

#include <string>
#include <vector>

#include "canlift/error.hpp"

namespace canlift {

// A letter sequence (i_1,...,i_m), letters 1-based in 1..rank.
using Word = std::vector<int>;

// Weight in fundamental-weight coordinates.
using Weight = std::vector<long long>;

// Root in simple-root coordinates.
using RootVec = std::vector<long long>;

using IntMat = std::vector<std::vector<long long>>;

// Finite-type Cartan datum. Convention: a(i,j) = <alpha_j, alpha_i^vee>,
// so the i-th row of the matrix pairs against the coroot of alpha_i.
struct CartanDatum {
  char series = 'A';
  int rank = 0;
  std::vector<std::vector<int>> matrix;  // rank x rank

  int a(int i, int j) const {  // 1-based
    if (i < 1 || i > rank || j < 1 || j > rank)
      fail(ErrorCode::IndexOutOfRange, "Cartan index out of range");
    return matrix[i - 1][j - 1];
  }
};

CartanDatum build_cartan(char series, int rank);
CartanDatum langlands_dual(const CartanDatum& c);

// Simple reflection action on weight coordinates: (s_i l)_k = l_k - l_i a(k,i).
Weight simple_reflection(const CartanDatum& c, int i, const Weight& lam);

// Action of s_{i_1}...s_{i_m} on a weight; the empty word is the identity.
Weight weyl_action(const CartanDatum& c, const Word& word, const Weight& lam);

// n x n matrix of the word's action on weight coordinates.
IntMat weyl_matrix(const CartanDatum& c, const Word& word);

// All positive roots, in simple-root coordinates.
std::vector<RootVec> positive_roots(const CartanDatum& c);

// Coxeter length = number of positive roots sent negative.
int weyl_length(const CartanDatum& c, const Word& word);

bool is_reduced(const CartanDatum& c, const Word& word);

// A reduced word of w0 (deterministic: smallest ascent letter first).
Word longest_word(const CartanDatum& c);

// All reduced words of the element given by `word` (which need not be reduced
// itself beyond representing the element). Sorted lexicographically.
std::vector<Word> all_reduced_words(const CartanDatum& c, const Word& word);

// An elementary braid move: replace the alternating subword of length `len`
// starting at 0-based position `pos` by the letter-swapped alternation.
struct BraidMove {
  int pos = 0;
  int len = 2;  // 2, 3, 4 or 6
};

Word apply_braid_move(const CartanDatum& c, const Word& word, const BraidMove& m);

// Moves transforming `from` into `to`; BFS over the reduced-word graph.
std::vector<BraidMove> braid_path(const CartanDatum& c, const Word& from,
                                  const Word& to, std::size_t node_bound = 2000000);

// The involution i -> i* with w0(alpha_i) = -alpha_{i*}.
int star(const CartanDatum& c, int i);

// lambda^omega = -w0(lambda) for dominant lambda.
Weight lambda_omega(const CartanDatum& c, const Weight& lam);

bool is_dominant(const Weight& lam);

// beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) for a reduced word.
std::vector<RootVec> roots_along_word(const CartanDatum& c, const Word& word);

// Root expressed in weight coordinates (alpha_j has k-th coordinate a(k,j)).
Weight root_to_weight(const CartanDatum& c, const RootVec& root);

}  // namespace canlift

#endif
