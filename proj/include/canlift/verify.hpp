#ifndef CANLIFT_VERIFY_HPP
#define CANLIFT_VERIFY_HPP

#include <string>
#include <vector>

#include "canlift/crystal.hpp"
#include "canlift/parametrize.hpp"

namespace canlift {

struct CorollaryRow {
  Tableau b;
  IntVec t;       // string data w.r.t. the word
  IntVec tprime;  // affine image, Lusztig data w.r.t. the starred word
};

struct CorollaryReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<CorollaryRow> table;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 50) failures.push_back(what);
    }
  }
};

// Full oracle validation of the affine involution formula on B(lambda):
// nonnegativity, injectivity, weight consistency, endpoint pins and
// eta-equivariance of evacuation.
CorollaryReport verify_corollary(const CartanDatum& c, const Weight& lam, const Word& word);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

CriterionResult run_criterion(int id, unsigned seed);

// Runs all nine acceptance criteria; prints one pass/fail line per criterion
// when `print` is set.
std::vector<CriterionResult> run_acceptance(unsigned seed, bool print);

}  // namespace canlift

#endif
