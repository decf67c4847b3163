#include "canlift/crystal.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace canlift {

std::vector<int> shape_from_weight(const Weight& lam) {
  if (!is_dominant(lam)) fail(ErrorCode::NotDominant, "weight not dominant");
  int n = (int)lam.size();
  std::vector<int> rows;
  for (int r = 1; r <= n; ++r) {
    long long len = 0;
    for (int i = r; i <= n; ++i) len += lam[i - 1];
    if (len > 0) rows.push_back((int)len);
  }
  return rows;
}

Tableau highest_weight_tableau(int rank, const Weight& lam) {
  if ((int)lam.size() != rank) fail(ErrorCode::LengthMismatch, "weight size != rank");
  Tableau t;
  auto shape = shape_from_weight(lam);
  for (std::size_t r = 0; r < shape.size(); ++r)
    t.rows.push_back(std::vector<int>(shape[r], (int)r + 1));
  return t;
}

bool is_semistandard(const Tableau& t, int rank) {
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    if (r + 1 < t.rows.size() && t.rows[r + 1].size() > row.size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > rank + 1) return false;
      if (c > 0 && row[c] < row[c - 1]) return false;
      if (r > 0 && t.rows[r - 1][c] >= row[c]) return false;
    }
  }
  return true;
}

Weight tableau_weight(int rank, const Tableau& t) {
  std::vector<long long> count(rank + 2, 0);
  for (const auto& row : t.rows)
    for (int e : row) ++count[e];
  Weight w(rank);
  for (int i = 1; i <= rank; ++i) w[i - 1] = count[i] - count[i + 1];
  return w;
}

namespace {

struct Cell {
  int r, c;
};

// Row reading word, bottom-to-top, left-to-right within a row.
std::vector<Cell> reading_order(const Tableau& t) {
  std::vector<Cell> out;
  for (int r = (int)t.rows.size() - 1; r >= 0; --r)
    for (int c = 0; c < (int)t.rows[r].size(); ++c) out.push_back({r, c});
  return out;
}

struct Signature {
  // After cancelling every '-' immediately preceding a '+', the survivors
  // read "+...+-...-".
  std::vector<Cell> plus;   // surviving i-boxes, in reading order
  std::vector<Cell> minus;  // surviving (i+1)-boxes, in reading order
};

Signature signature(const Tableau& t, int i) {
  Signature sig;
  for (const Cell& cell : reading_order(t)) {
    int e = t.rows[cell.r][cell.c];
    if (e == i) {
      if (!sig.minus.empty())
        sig.minus.pop_back();  // a '+' cancels the most recent open '-'
      else
        sig.plus.push_back(cell);
    } else if (e == i + 1) {
      sig.minus.push_back(cell);
    }
  }
  return sig;
}

}  // namespace

int eps(int rank, const Tableau& t, int i) {
  if (i < 1 || i > rank) fail(ErrorCode::IndexOutOfRange, "crystal index out of range");
  return (int)signature(t, i).minus.size();
}

int phi(int rank, const Tableau& t, int i) {
  if (i < 1 || i > rank) fail(ErrorCode::IndexOutOfRange, "crystal index out of range");
  return (int)signature(t, i).plus.size();
}

std::optional<Tableau> apply_e(int rank, const Tableau& t, int i) {
  if (i < 1 || i > rank) fail(ErrorCode::IndexOutOfRange, "crystal index out of range");
  Signature sig = signature(t, i);
  if (sig.minus.empty()) return std::nullopt;
  Tableau out = t;
  Cell cell = sig.minus.front();  // leftmost surviving '-'
  out.rows[cell.r][cell.c] = i;
  return out;
}

std::optional<Tableau> apply_f(int rank, const Tableau& t, int i) {
  if (i < 1 || i > rank) fail(ErrorCode::IndexOutOfRange, "crystal index out of range");
  Signature sig = signature(t, i);
  if (sig.plus.empty()) return std::nullopt;
  Tableau out = t;
  Cell cell = sig.plus.back();  // rightmost surviving '+'
  out.rows[cell.r][cell.c] = i + 1;
  return out;
}

CrystalGraph generate_crystal(int rank, const Weight& lam, std::size_t size_bound) {
  CrystalGraph g;
  g.rank = rank;
  g.lambda = lam;
  Tableau hw = highest_weight_tableau(rank, lam);
  g.vertices.push_back(hw);
  g.index.emplace(hw, 0);
  g.edges.emplace_back();
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int i = 1; i <= rank; ++i) {
      auto next = apply_f(rank, g.vertices[v], i);
      if (!next) continue;
      auto [it, fresh] = g.index.emplace(*next, (int)g.vertices.size());
      if (fresh) {
        g.vertices.push_back(*next);
        g.edges.emplace_back();
        if (g.vertices.size() > size_bound)
          fail(ErrorCode::SizeBound, "crystal exceeds size bound");
        q.push(it->second);
      }
      g.edges[v].emplace_back(i, it->second);
    }
  }
  return g;
}

Int weyl_dimension(int rank, const Weight& lam) {
  if ((int)lam.size() != rank) fail(ErrorCode::LengthMismatch, "weight size != rank");
  if (!is_dominant(lam)) fail(ErrorCode::NotDominant, "weight not dominant");
  std::vector<long long> mu(rank + 1, 0);
  for (int r = 1; r <= rank; ++r)
    for (int i = r; i <= rank; ++i) mu[r - 1] += lam[i - 1];
  Int num = 1, den = 1;
  for (int r = 1; r <= rank + 1; ++r)
    for (int s = r + 1; s <= rank + 1; ++s) {
      num *= Int(mu[r - 1] - mu[s - 1] + s - r);
      den *= Int(s - r);
    }
  return num / den;
}

Tableau lowest_element(const CrystalGraph& g) {
  std::optional<Tableau> found;
  for (const Tableau& t : g.vertices) {
    bool lowest = true;
    for (int i = 1; i <= g.rank && lowest; ++i)
      if (phi(g.rank, t, i) > 0) lowest = false;
    if (lowest) {
      if (found) fail(ErrorCode::NotUnique, "multiple lowest-weight vertices");
      found = t;
    }
  }
  if (!found) fail(ErrorCode::NotUnique, "no lowest-weight vertex");
  return *found;
}

std::vector<long long> string_extract(int rank, const Tableau& b, const Word& word) {
  std::vector<long long> t;
  t.reserve(word.size());
  Tableau cur = b;
  for (int i : word) {
    int k = eps(rank, cur, i);
    t.push_back(k);
    for (int r = 0; r < k; ++r) {
      auto up = apply_e(rank, cur, i);
      if (!up) fail(ErrorCode::ResidueNotHighest, "string extraction underflow");
      cur = *up;
    }
  }
  for (int i = 1; i <= rank; ++i)
    if (eps(rank, cur, i) != 0)
      fail(ErrorCode::ResidueNotHighest, "string extraction did not reach the highest weight");
  return t;
}

namespace {

// One jeu de taquin slide from the inner corner (hr, hc); `len` holds the
// current outer row lengths, `mu` the inner (vacant) row lengths.
void jdt_slide(std::vector<std::vector<int>>& grid, std::vector<int>& len,
               int hr, int hc) {
  int rows = (int)len.size();
  for (;;) {
    bool has_right = hc + 1 < len[hr];
    bool has_below = hr + 1 < rows && hc < len[hr + 1];
    if (!has_right && !has_below) break;
    bool move_below;
    if (!has_right) move_below = true;
    else if (!has_below) move_below = false;
    else move_below = grid[hr + 1][hc] <= grid[hr][hc + 1];
    if (move_below) {
      grid[hr][hc] = grid[hr + 1][hc];
      ++hr;
    } else {
      grid[hr][hc] = grid[hr][hc + 1];
      ++hc;
    }
  }
  // The hole reached the end of its row; drop the cell.
  grid[hr].erase(grid[hr].begin() + hc);
  --len[hr];
}

}  // namespace

Tableau evacuation(int rank, const Tableau& t) {
  int m = rank + 2;  // complement entry e -> m - e with alphabet 1..rank+1
  int rows = (int)t.rows.size();
  if (rows == 0) return t;
  int width = (int)t.rows[0].size();
  // Rotate 180 degrees and complement; rows become a skew tableau inside the
  // rows x width rectangle with inner shape mu.
  std::vector<int> len(rows, width), mu(rows, 0);
  std::vector<std::vector<int>> grid(rows, std::vector<int>(width, 0));
  for (int r = 0; r < rows; ++r) {
    int src = rows - 1 - r;
    int srclen = (int)t.rows[src].size();
    mu[r] = width - srclen;
    for (int c = mu[r]; c < width; ++c)
      grid[r][c] = m - t.rows[src][width - 1 - c];
  }
  // Rectify: repeatedly slide from the bottommost inner corner.
  for (;;) {
    int hr = -1;
    for (int r = rows - 1; r >= 0; --r)
      if (mu[r] > 0) {
        hr = r;
        break;
      }
    if (hr < 0) break;
    jdt_slide(grid, len, hr, mu[hr] - 1);
    --mu[hr];
  }
  Tableau out;
  for (int r = 0; r < rows; ++r) {
    if (len[r] == 0) continue;
    out.rows.push_back(std::vector<int>(grid[r].begin(), grid[r].begin() + len[r]));
  }
  return out;
}

std::map<Tableau, Tableau> eta_by_recursion(const CrystalGraph& g, const CartanDatum& c) {
  std::map<Tableau, Tableau> eta;
  eta.emplace(g.vertices[0], lowest_element(g));
  std::queue<int> q;
  q.push(0);
  std::vector<bool> seen(g.vertices.size(), false);
  seen[0] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    const Tableau& ev = eta.at(g.vertices[v]);
    for (const auto& [i, w] : g.edges[v]) {
      auto img = apply_e(g.rank, ev, star(c, i));
      if (!img) fail(ErrorCode::Internal, "eta recursion: raising operator undefined");
      auto [it, fresh] = eta.emplace(g.vertices[w], *img);
      if (!fresh && it->second != *img)
        fail(ErrorCode::Internal, "eta recursion: inconsistent images");
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
    }
  }
  return eta;
}

std::string crystal_to_dot(const CrystalGraph& g) {
  auto label = [](const Tableau& t) {
    std::ostringstream os;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (r) os << "|";
      for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
        if (c) os << " ";
        os << t.rows[r][c];
      }
    }
    return os.str();
  };
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    os << "  n" << v << " [label=\"" << label(g.vertices[v]) << "\"];\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (const auto& [i, w] : g.edges[v])
      os << "  n" << v << " -> n" << w << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace canlift
