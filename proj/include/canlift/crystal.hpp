#ifndef CANLIFT_CRYSTAL_HPP
#define CANLIFT_CRYSTAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "canlift/cartan.hpp"
#include "canlift/rational.hpp"

namespace canlift {

// Semistandard Young tableau with entries in 1..n+1 (type A rank n).
struct Tableau {
  std::vector<std::vector<int>> rows;

  bool operator==(const Tableau& o) const = default;
  auto operator<=>(const Tableau& o) const = default;
};

// Column counts of the partition attached to lambda = sum c_i varpi_i.
std::vector<int> shape_from_weight(const Weight& lam);

Tableau highest_weight_tableau(int rank, const Weight& lam);

bool is_semistandard(const Tableau& t, int rank);

// Weight in fundamental-weight coordinates: coord_i = #i - #(i+1).
Weight tableau_weight(int rank, const Tableau& t);

// Kashiwara operators via the signature rule on the row reading word
// (rows bottom-to-top, left-to-right within a row).
int eps(int rank, const Tableau& t, int i);
int phi(int rank, const Tableau& t, int i);
std::optional<Tableau> apply_e(int rank, const Tableau& t, int i);
std::optional<Tableau> apply_f(int rank, const Tableau& t, int i);

struct CrystalGraph {
  int rank = 0;
  Weight lambda;
  std::vector<Tableau> vertices;              // vertices[0] = highest weight
  std::map<Tableau, int> index;
  // edges[v] = list of (i, target index) for f_i.
  std::vector<std::vector<std::pair<int, int>>> edges;
};

CrystalGraph generate_crystal(int rank, const Weight& lam,
                              std::size_t size_bound = 100000);

// Weyl dimension of V(lambda) in type A.
Int weyl_dimension(int rank, const Weight& lam);

Tableau lowest_element(const CrystalGraph& g);

// String parametrization along a reduced word of w0:
// t_1 = eps_{i_1}(b), b <- e_{i_1}^{t_1} b, recurse; ends at the highest.
std::vector<long long> string_extract(int rank, const Tableau& b, const Word& word);

// Schuetzenberger evacuation via rotate-complement-rectify (jeu de taquin).
Tableau evacuation(int rank, const Tableau& t);

// Independent construction of the same involution through the crystal
// recursion eta(highest) = lowest, eta(f_j b) = e_{j*}(eta(b)); used as a
// cross-check on the jeu-de-taquin route.
std::map<Tableau, Tableau> eta_by_recursion(const CrystalGraph& g, const CartanDatum& c);

std::string crystal_to_dot(const CrystalGraph& g);

}  // namespace canlift

#endif
