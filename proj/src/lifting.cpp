#include "canlift/lifting.hpp"

#include <map>
#include <sstream>

namespace canlift {

GroupMatrix::GroupMatrix(int dim) : dim_(dim), e_(dim * dim, Rat(0)) {
  for (int k = 0; k < dim; ++k) at(k, k) = 1;
}

GroupMatrix GroupMatrix::identity(int dim) { return GroupMatrix(dim); }

GroupMatrix GroupMatrix::operator*(const GroupMatrix& o) const {
  if (dim_ != o.dim_) fail(ErrorCode::LengthMismatch, "matrix dimension mismatch");
  GroupMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      Rat s = 0;
      for (int k = 0; k < dim_; ++k) s += at(r, k) * o.at(k, c);
      out.at(r, c) = s;
    }
  return out;
}

GroupMatrix GroupMatrix::transpose() const {
  GroupMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out.at(r, c) = at(c, r);
  return out;
}

GroupMatrix GroupMatrix::inverse() const {
  GroupMatrix a = *this, inv(dim_);
  // Gauss-Jordan with partial (first-nonzero) pivoting, exact.
  for (int col = 0; col < dim_; ++col) {
    int piv = -1;
    for (int r = col; r < dim_; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) fail(ErrorCode::NotInG0, "singular matrix");
    if (piv != col)
      for (int c = 0; c < dim_; ++c) {
        std::swap(a.at(piv, c), a.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    Rat d = a.at(col, col);
    for (int c = 0; c < dim_; ++c) {
      a.at(col, c) /= d;
      inv.at(col, c) /= d;
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      Rat f = a.at(r, col);
      for (int c = 0; c < dim_; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

Rat GroupMatrix::determinant() const {
  GroupMatrix a = *this;
  Rat det = 1;
  for (int col = 0; col < dim_; ++col) {
    int piv = -1;
    for (int r = col; r < dim_; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      det = -det;
      for (int c = 0; c < dim_; ++c) std::swap(a.at(piv, c), a.at(col, c));
    }
    det *= a.at(col, col);
    for (int r = col + 1; r < dim_; ++r) {
      Rat f = a.at(r, col) / a.at(col, col);
      for (int c = col; c < dim_; ++c) a.at(r, c) -= f * a.at(col, c);
    }
  }
  return det;
}

static void check_gen_index(int rank, int i) {
  if (i < 1 || i > rank) fail(ErrorCode::IndexOutOfRange, "generator index out of range");
}

GroupMatrix gen_x(int rank, int i, const Rat& t) {
  check_gen_index(rank, i);
  GroupMatrix m(rank + 1);
  m.at(i - 1, i) = t;
  return m;
}

GroupMatrix gen_y(int rank, int i, const Rat& t) {
  check_gen_index(rank, i);
  GroupMatrix m(rank + 1);
  m.at(i, i - 1) = t;
  return m;
}

GroupMatrix gen_torus(int rank, int i, const Rat& t) {
  check_gen_index(rank, i);
  if (t == 0) fail(ErrorCode::ZeroTorusParameter, "torus parameter must be nonzero");
  GroupMatrix m(rank + 1);
  m.at(i - 1, i - 1) = t;
  m.at(i, i) = 1 / t;
  return m;
}

GroupMatrix x_word(int rank, const Word& word, const RatVec& t) {
  if (word.size() != t.size()) fail(ErrorCode::LengthMismatch, "word/parameter length mismatch");
  GroupMatrix m(rank + 1);
  for (std::size_t k = 0; k < word.size(); ++k) m = m * gen_x(rank, word[k], t[k]);
  return m;
}

GroupMatrix x_minus_word(int rank, const Word& word, const RatVec& t) {
  if (word.size() != t.size()) fail(ErrorCode::LengthMismatch, "word/parameter length mismatch");
  GroupMatrix m(rank + 1);
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (t[k] <= 0) fail(ErrorCode::NonPositiveParameter, "x_{-i} needs positive parameters");
    m = m * gen_y(rank, word[k], t[k]) * gen_torus(rank, word[k], 1 / t[k]);
  }
  return m;
}

GroupMatrix chevalley_omega(const GroupMatrix& x) {
  int d = x.dim();
  GroupMatrix inv_t = x.transpose().inverse();
  GroupMatrix out(d);
  // Conjugation by D = diag(1,-1,1,...): flips the sign of entries with
  // r+c odd, which is what turns (x^T)^{-1} into the generator-level iota T.
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      out.at(r, c) = ((r + c) % 2 == 0) ? inv_t.at(r, c) : -inv_t.at(r, c);
  return out;
}

GaussFactors gauss_decompose(const GroupMatrix& x) {
  int d = x.dim();
  GroupMatrix u = x, l(d), h(d);
  for (int col = 0; col < d; ++col) {
    if (u.at(col, col) == 0) fail(ErrorCode::NotInG0, "vanishing leading principal minor");
    for (int r = col + 1; r < d; ++r) {
      Rat f = u.at(r, col) / u.at(col, col);
      l.at(r, col) = f;
      for (int c = 0; c < d; ++c) u.at(r, c) -= f * u.at(col, c);
    }
  }
  for (int k = 0; k < d; ++k) {
    h.at(k, k) = u.at(k, k);
    Rat inv = 1 / u.at(k, k);
    for (int c = 0; c < d; ++c) u.at(k, c) *= inv;
  }
  return {l, h, u};
}

GroupMatrix zeta(const GroupMatrix& x) { return gauss_decompose(chevalley_omega(x)).upper; }

RatVec zeta_formula_params(const CartanDatum& c, const Word& word, const RatVec& t) {
  if (word.size() != t.size()) fail(ErrorCode::LengthMismatch, "word/parameter length mismatch");
  std::size_t n = word.size();
  RatVec out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (t[k] <= 0) fail(ErrorCode::NonPositiveParameter, "zeta formula needs positive parameters");
    Rat v = 1 / t[k];
    for (std::size_t j = k + 1; j < n; ++j) {
      int e = -c.a(word[j], word[k]);
      Rat base = t[j];
      if (e < 0) {
        base = 1 / base;
        e = -e;
      }
      for (int r = 0; r < e; ++r) v *= base;
    }
    out[k] = v;
  }
  return out;
}

ZetaReport verify_zeta_formula(const CartanDatum& c, const Word& word, const RatVec& t) {
  if (word.size() != positive_roots(c).size() || !is_reduced(c, word))
    fail(ErrorCode::NotReduced, "expected a reduced word of w0");
  ZetaReport rep;
  rep.word = word;
  rep.input = t;
  rep.predicted = zeta_formula_params(c, word, t);
  rep.lhs = x_word(c.rank, word, rep.predicted);
  rep.rhs = zeta(x_minus_word(c.rank, word, t));
  rep.pass = (rep.lhs == rep.rhs);
  return rep;
}

// --- Rank-2 transition pieces ----------------------------------------------

RatVec RationalMap::eval(const RatVec& point) const {
  RatVec out;
  out.reserve(components.size());
  for (const SFPtr& e : components) out.push_back(sf_eval(e, point));
  return out;
}

namespace {

// Matrices over rational functions, for the local symbolic solves.
using SymMatrix = std::vector<std::vector<RationalFn>>;

SymMatrix sym_identity(int d, int arity) {
  SymMatrix m(d, std::vector<RationalFn>(d, RationalFn::constant(arity, 0)));
  for (int k = 0; k < d; ++k) m[k][k] = RationalFn::constant(arity, 1);
  return m;
}

SymMatrix sym_mul(const SymMatrix& a, const SymMatrix& b) {
  int d = (int)a.size();
  int arity = a[0][0].arity();
  SymMatrix out(d, std::vector<RationalFn>(d, RationalFn::constant(arity, 0)));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      RationalFn s = RationalFn::constant(arity, 0);
      for (int k = 0; k < d; ++k) s = s + a[r][k] * b[k][c];
      out[r][c] = s;
    }
  return out;
}

SymMatrix sym_x(int d, int arity, int i, const RationalFn& t) {
  SymMatrix m = sym_identity(d, arity);
  m[i - 1][i] = t;
  return m;
}

SymMatrix sym_x_minus(int d, int arity, int i, const RationalFn& t) {
  // y_i(t) t^{-alpha_i^vee} in SL_d.
  SymMatrix m = sym_identity(d, arity);
  m[i - 1][i - 1] = t.pow(-1);
  m[i][i - 1] = RationalFn::constant(arity, 1);
  m[i][i] = t;
  return m;
}

bool sym_equal(const RationalFn& a, const RationalFn& b) {
  return (a.num * b.den - b.num * a.den).is_zero();
}

bool sym_matrix_equal(const SymMatrix& a, const SymMatrix& b) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      if (!sym_equal(a[r][c], b[r][c])) return false;
  return true;
}

RationalMap certify(const std::vector<RationalFn>& comps, int arity) {
  RationalMap out;
  out.arity = arity;
  for (const RationalFn& f : comps) out.components.push_back(sf_from_rational(f));
  return out;
}

RationalMap derive_commuting(TransitionSide side) {
  // x_i(a) x_j(b) = x_j(b) x_i(a) whenever a(i,j) = 0; checked in SL4 with
  // (i, j) = (1, 3). Torus factors for distinct i, j commute likewise.
  int arity = 2;
  RationalFn a = RationalFn::variable(arity, 1), b = RationalFn::variable(arity, 2);
  SymMatrix lhs, rhs;
  if (side == TransitionSide::Lusztig) {
    lhs = sym_mul(sym_x(4, arity, 1, a), sym_x(4, arity, 3, b));
    rhs = sym_mul(sym_x(4, arity, 3, b), sym_x(4, arity, 1, a));
  } else {
    lhs = sym_mul(sym_x_minus(4, arity, 1, a), sym_x_minus(4, arity, 3, b));
    rhs = sym_mul(sym_x_minus(4, arity, 3, b), sym_x_minus(4, arity, 1, a));
  }
  if (!sym_matrix_equal(lhs, rhs))
    fail(ErrorCode::Internal, "commuting move identity failed");
  return certify({b, a}, arity);
}

RationalMap derive_a2_lusztig() {
  // Solve x_2(a') x_1(b') x_2(c') = x_1(a) x_2(b) x_1(c) in SL3.
  int arity = 3;
  RationalFn a = RationalFn::variable(arity, 1), b = RationalFn::variable(arity, 2),
             c = RationalFn::variable(arity, 3);
  SymMatrix m = sym_mul(sym_mul(sym_x(3, arity, 1, a), sym_x(3, arity, 2, b)),
                        sym_x(3, arity, 1, c));
  // For the target word: entry (1,2) = b', (1,3) = b'c', (2,3) = a' + c'.
  RationalFn bp = m[0][1];
  RationalFn cp = m[0][2] / m[0][1];
  RationalFn ap = m[1][2] - cp;
  SymMatrix check = sym_mul(sym_mul(sym_x(3, arity, 2, ap), sym_x(3, arity, 1, bp)),
                            sym_x(3, arity, 2, cp));
  if (!sym_matrix_equal(m, check)) fail(ErrorCode::Internal, "A2 Lusztig solve failed");
  return certify({ap, bp, cp}, arity);
}

RationalMap derive_a2_string() {
  // Solve x_{-(2,1,2)}(a',b',c') = x_{-(1,2,1)}(a,b,c) in SL3.
  int arity = 3;
  RationalFn a = RationalFn::variable(arity, 1), b = RationalFn::variable(arity, 2),
             c = RationalFn::variable(arity, 3);
  SymMatrix m = sym_mul(sym_mul(sym_x_minus(3, arity, 1, a), sym_x_minus(3, arity, 2, b)),
                        sym_x_minus(3, arity, 1, c));
  // Target entries: (1,1) = 1/b', (2,1) = 1/a', (3,3) = a'c'.
  RationalFn bp = m[0][0].pow(-1);
  RationalFn ap = m[1][0].pow(-1);
  RationalFn cp = m[2][2] * m[1][0];
  SymMatrix check = sym_mul(sym_mul(sym_x_minus(3, arity, 2, ap), sym_x_minus(3, arity, 1, bp)),
                            sym_x_minus(3, arity, 2, cp));
  if (!sym_matrix_equal(m, check)) fail(ErrorCode::Internal, "A2 string solve failed");
  return certify({ap, bp, cp}, arity);
}

}  // namespace

const RationalMap& solve_rank2_move(Rank2Kind kind, TransitionSide side) {
  static std::map<std::pair<int, int>, RationalMap> cache;
  auto key = std::make_pair((int)kind, (int)side);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RationalMap map;
  switch (kind) {
    case Rank2Kind::Commuting: map = derive_commuting(side); break;
    case Rank2Kind::A2:
      map = side == TransitionSide::Lusztig ? derive_a2_lusztig() : derive_a2_string();
      break;
    case Rank2Kind::B2:
      fail(ErrorCode::UnsupportedRank2Type, "B2 rank-2 pieces are not built");
  }
  return cache.emplace(key, std::move(map)).first->second;
}

std::string matrix_to_string(const GroupMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.dim(); ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < m.dim(); ++c) os << (c ? ", " : "") << m.at(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace canlift
