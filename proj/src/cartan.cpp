#include "canlift/cartan.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace canlift {

namespace {

bool valid_pair(char series, int rank) {
  switch (series) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

}  // namespace

CartanDatum build_cartan(char series, int rank) {
  if (!valid_pair(series, rank))
    fail(ErrorCode::InvalidType, std::string("no finite type ") + series + std::to_string(rank));
  CartanDatum c;
  c.series = series;
  c.rank = rank;
  c.matrix.assign(rank, std::vector<int>(rank, 0));
  auto& a = c.matrix;
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) {  // simply-laced bond (0-based)
    a[i][j] = -1;
    a[j][i] = -1;
  };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case 'B':
      // alpha_1 long, ..., alpha_n short: a(n-1,n) = -1, a(n,n-1) = -2
      for (int i = 0; i + 2 < rank; ++i) chain(i, i + 1);
      a[rank - 2][rank - 1] = -1;
      a[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      for (int i = 0; i + 2 < rank; ++i) chain(i, i + 1);
      a[rank - 2][rank - 1] = -2;
      a[rank - 1][rank - 2] = -1;
      break;
    case 'D':
      for (int i = 0; i + 2 < rank; ++i) chain(i, i + 1);
      chain(rank - 3, rank - 1);
      break;
    case 'E':
      // Bourbaki: node 2 attached to node 4; chain 1-3-4-5-...-n.
      chain(0, 2);
      chain(1, 3);
      for (int i = 2; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case 'F':
      chain(0, 1);
      a[1][2] = -2;
      a[2][1] = -1;
      chain(2, 3);
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return c;
}

CartanDatum langlands_dual(const CartanDatum& c) {
  CartanDatum d = c;
  for (int i = 0; i < c.rank; ++i)
    for (int j = 0; j < c.rank; ++j) d.matrix[i][j] = c.matrix[j][i];
  // The transposed matrix is the Cartan matrix of the dual series.
  if (c.series == 'B') d.series = 'C';
  else if (c.series == 'C') d.series = 'B';
  return d;
}

static void check_letter(const CartanDatum& c, int i) {
  if (i < 1 || i > c.rank) fail(ErrorCode::IndexOutOfRange, "letter out of range");
}

Weight simple_reflection(const CartanDatum& c, int i, const Weight& lam) {
  check_letter(c, i);
  if ((int)lam.size() != c.rank) fail(ErrorCode::LengthMismatch, "weight size != rank");
  Weight out = lam;
  long long li = lam[i - 1];
  for (int k = 1; k <= c.rank; ++k) out[k - 1] -= li * c.a(k, i);
  return out;
}

Weight weyl_action(const CartanDatum& c, const Word& word, const Weight& lam) {
  Weight out = lam;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = simple_reflection(c, *it, out);
  return out;
}

IntMat weyl_matrix(const CartanDatum& c, const Word& word) {
  IntMat m(c.rank, std::vector<long long>(c.rank, 0));
  for (int j = 0; j < c.rank; ++j) {
    Weight e(c.rank, 0);
    e[j] = 1;
    Weight col = weyl_action(c, word, e);
    for (int i = 0; i < c.rank; ++i) m[i][j] = col[i];
  }
  return m;
}

namespace {

// s_i on simple-root coordinates: c -> c - (sum_j a(i,j) c_j) e_i.
RootVec reflect_root(const CartanDatum& c, int i, const RootVec& r) {
  long long pairing = 0;
  for (int j = 1; j <= c.rank; ++j) pairing += c.a(i, j) * r[j - 1];
  RootVec out = r;
  out[i - 1] -= pairing;
  return out;
}

RootVec word_on_root(const CartanDatum& c, const Word& word, const RootVec& r) {
  RootVec out = r;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = reflect_root(c, *it, out);
  return out;
}

bool root_positive(const RootVec& r) {
  for (long long x : r)
    if (x != 0) return x > 0;
  return false;  // zero is not a root
}

}  // namespace

std::vector<RootVec> positive_roots(const CartanDatum& c) {
  std::set<RootVec> roots;
  std::queue<RootVec> q;
  for (int i = 1; i <= c.rank; ++i) {
    RootVec e(c.rank, 0);
    e[i - 1] = 1;
    roots.insert(e);
    q.push(e);
  }
  while (!q.empty()) {
    RootVec r = q.front();
    q.pop();
    for (int i = 1; i <= c.rank; ++i) {
      RootVec s = reflect_root(c, i, r);
      if (root_positive(s) && roots.insert(s).second) q.push(s);
    }
  }
  return std::vector<RootVec>(roots.begin(), roots.end());
}

int weyl_length(const CartanDatum& c, const Word& word) {
  for (int i : word) check_letter(c, i);
  int count = 0;
  for (const RootVec& r : positive_roots(c))
    if (!root_positive(word_on_root(c, word, r))) ++count;
  return count;
}

bool is_reduced(const CartanDatum& c, const Word& word) {
  return weyl_length(c, word) == (int)word.size();
}

Word longest_word(const CartanDatum& c) {
  auto pos = positive_roots(c);
  int big_n = (int)pos.size();
  Word w;
  // w(alpha_i) > 0 means appending s_i increases length.
  while ((int)w.size() < big_n) {
    for (int i = 1; i <= c.rank; ++i) {
      RootVec alpha(c.rank, 0);
      alpha[i - 1] = 1;
      if (root_positive(word_on_root(c, w, alpha))) {
        w.push_back(i);
        break;
      }
    }
  }
  return w;
}

std::vector<Word> all_reduced_words(const CartanDatum& c, const Word& word) {
  // Recurse on right descents, carrying the element as a word.
  std::vector<Word> out;
  struct Rec {
    const CartanDatum& c;
    std::vector<Word>& out;
    void go(const Word& elem, Word& suffix_rev) {
      bool any = false;
      for (int i = 1; i <= c.rank; ++i) {
        RootVec alpha(c.rank, 0);
        alpha[i - 1] = 1;
        if (!root_positive(word_on_root(c, elem, alpha))) {
          any = true;
          Word shorter = elem;
          shorter.push_back(i);  // elem * s_i, length drops by 1
          suffix_rev.push_back(i);
          go(shorter, suffix_rev);
          suffix_rev.pop_back();
        }
      }
      if (!any) {  // identity
        Word w(suffix_rev.rbegin(), suffix_rev.rend());
        out.push_back(w);
      }
    }
  } rec{c, out};
  Word suffix;
  rec.go(word, suffix);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

int braid_order(const CartanDatum& c, int i, int j) {
  int p = c.a(i, j) * c.a(j, i);
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: fail(ErrorCode::InvalidType, "not a finite-type bond");
  }
}

}  // namespace

Word apply_braid_move(const CartanDatum& c, const Word& word, const BraidMove& m) {
  if (m.pos < 0 || m.pos + m.len > (int)word.size())
    fail(ErrorCode::IndexOutOfRange, "braid move out of range");
  int x = word[m.pos], y = word[m.pos + 1];
  if (braid_order(c, x, y) != m.len)
    fail(ErrorCode::InvalidType, "braid move length mismatch");
  Word out = word;
  for (int k = 0; k < m.len; ++k) out[m.pos + k] = (k % 2 == 0) ? y : x;
  return out;
}

std::vector<BraidMove> braid_path(const CartanDatum& c, const Word& from,
                                  const Word& to, std::size_t node_bound) {
  if (from.size() != to.size() || weyl_matrix(c, from) != weyl_matrix(c, to))
    fail(ErrorCode::NotSameElement, "words represent different Weyl elements");
  if (from == to) return {};
  // BFS over the reduced-word graph; parent links reconstruct the path.
  std::map<Word, std::pair<Word, BraidMove>> parent;
  std::queue<Word> q;
  parent.emplace(from, std::make_pair(Word{}, BraidMove{}));
  q.push(from);
  while (!q.empty()) {
    Word w = q.front();
    q.pop();
    int m = (int)w.size();
    for (int p = 0; p + 1 < m; ++p) {
      int x = w[p], y = w[p + 1];
      if (x == y) continue;
      int len = braid_order(c, x, y);
      if (p + len > m) continue;
      bool alternating = true;
      for (int k = 0; k < len && alternating; ++k)
        alternating = (w[p + k] == ((k % 2 == 0) ? x : y));
      if (!alternating) continue;
      BraidMove mv{p, len};
      Word next = apply_braid_move(c, w, mv);
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(w, mv));
      if (next == to) {
        std::vector<BraidMove> path;
        Word cur = next;
        while (cur != from) {
          auto& pr = parent.at(cur);
          path.push_back(pr.second);
          cur = pr.first;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (parent.size() > node_bound)
        fail(ErrorCode::PathSearchExhausted, "braid path search bound exceeded");
      q.push(next);
    }
  }
  fail(ErrorCode::PathSearchExhausted, "no braid path found");
}

int star(const CartanDatum& c, int i) {
  check_letter(c, i);
  Word w0 = longest_word(c);
  RootVec alpha(c.rank, 0);
  alpha[i - 1] = 1;
  RootVec img = word_on_root(c, w0, alpha);
  for (int j = 1; j <= c.rank; ++j) {
    RootVec neg(c.rank, 0);
    neg[j - 1] = -1;
    if (img == neg) return j;
  }
  fail(ErrorCode::Internal, "w0(alpha_i) is not -alpha_j");
}

bool is_dominant(const Weight& lam) {
  for (long long x : lam)
    if (x < 0) return false;
  return true;
}

Weight lambda_omega(const CartanDatum& c, const Weight& lam) {
  if (!is_dominant(lam)) fail(ErrorCode::NotDominant, "weight not dominant");
  Weight w = weyl_action(c, longest_word(c), lam);
  for (auto& x : w) x = -x;
  return w;
}

std::vector<RootVec> roots_along_word(const CartanDatum& c, const Word& word) {
  if (!is_reduced(c, word)) fail(ErrorCode::NotReduced, "word is not reduced");
  std::vector<RootVec> out;
  out.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    RootVec alpha(c.rank, 0);
    alpha[word[k] - 1] = 1;
    Word prefix(word.begin(), word.begin() + k);
    out.push_back(word_on_root(c, prefix, alpha));
  }
  return out;
}

Weight root_to_weight(const CartanDatum& c, const RootVec& root) {
  Weight w(c.rank, 0);
  for (int k = 1; k <= c.rank; ++k)
    for (int j = 1; j <= c.rank; ++j) w[k - 1] += c.a(k, j) * root[j - 1];
  return w;
}

}  // namespace canlift
