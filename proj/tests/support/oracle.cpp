#include "oracle.hpp"

#include <algorithm>

namespace oracle {

std::size_t dense_rank(Dense rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Q f = rows[r][c] / rows[rank][c];
      for (std::size_t t = c; t < cols; ++t) rows[r][t] -= f * rows[rank][t];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Sorts w in place; returns the permutation sign, or 0 on a repeat.
int sort_sign(Word& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
      if (w[j - 1] == w[j]) return 0;
      std::swap(w[j - 1], w[j]);
      sign = -sign;
    }
  return sign;
}

void add(Form& f, const Word& w, const Q& c) {
  Q& slot = f[w];
  slot += c;
  if (slot == 0) f.erase(w);
}

}  // namespace

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      int s = sort_sign(w);
      if (s) add(out, w, Q(s) * x * y);
    }
  return out;
}

Form differential(const liecohom::LieAlgebra& g, const Form& w) {
  const int n = static_cast<int>(g.dim());
  std::vector<Form> dcov(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const auto& [k, c] : g.bracket_basis(i, j)) add(dcov[k], {i, j}, -c);

  Form out;
  for (const auto& [word, c] : w) {
    // d(w1 ^ ... ^ wk) = sum_t (-1)^t w1 ^ .. ^ d(wt) ^ .. ^ wk
    for (std::size_t t = 0; t < word.size(); ++t) {
      Form left{{Word(word.begin(), word.begin() + t), Q(1)}};
      Form right{{Word(word.begin() + t + 1, word.end()), Q(1)}};
      Form term = wedge(wedge(left, dcov[word[t]]), right);
      const Q sign = t % 2 == 0 ? Q(1) : Q(-1);
      for (const auto& [u, x] : term) add(out, u, sign * c * x);
    }
  }
  return out;
}

std::vector<Word> subsets(int n, int k) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

std::vector<std::size_t> ranks(const liecohom::LieAlgebra& g) {
  const int n = static_cast<int>(g.dim());
  std::vector<std::size_t> out;
  for (int k = 0; k <= n; ++k) {
    const auto src = subsets(n, k);
    const auto dst = subsets(n, k + 1);
    std::map<Word, std::size_t> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
    // one row per source monomial: rank is unchanged by transposition
    Dense m(src.size(), std::vector<Q>(dst.size()));
    for (std::size_t s = 0; s < src.size(); ++s)
      for (const auto& [u, c] : differential(g, Form{{src[s], Q(1)}})) m[s][row_of.at(u)] = c;
    out.push_back(dst.empty() ? 0 : dense_rank(std::move(m)));
  }
  return out;
}

std::uint64_t choose(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<std::uint64_t> kernels(const liecohom::LieAlgebra& g) {
  const auto r = ranks(g);
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < r.size(); ++k) out.push_back(choose(static_cast<int>(g.dim()), static_cast<int>(k)) - r[k]);
  return out;
}

std::vector<std::uint64_t> betti(const liecohom::LieAlgebra& g) {
  const auto r = ranks(g);
  const auto ker = kernels(g);
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < ker.size(); ++k) out.push_back(ker[k] - (k ? r[k - 1] : 0));
  return out;
}

Form from_library(const liecohom::ExteriorForm& f) {
  Form out;
  for (const auto& [mask, c] : f.terms()) {
    Word w;
    for (int i = 0; i < 64; ++i)
      if (mask >> i & 1) w.push_back(i);
    out[w] = c;
  }
  return out;
}

liecohom::ExteriorForm to_library(std::size_t dim, const Form& f) {
  liecohom::ExteriorForm out(dim);
  for (const auto& [w, c] : f) {
    liecohom::Monomial m = 0;
    for (int i : w) m |= liecohom::Monomial{1} << i;
    out.add_term(m, c);
  }
  return out;
}

liecohom::ExteriorForm random_form(std::mt19937& rng, std::size_t dim, std::size_t k, int terms) {
  liecohom::ExteriorForm out(dim);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<std::size_t> idx(dim);
  for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
  for (int t = 0; t < terms; ++t) {
    std::shuffle(idx.begin(), idx.end(), rng);
    liecohom::Monomial m = 0;
    for (std::size_t i = 0; i < k; ++i) m |= liecohom::Monomial{1} << idx[i];
    out.add_term(m, coeff(rng));
  }
  return out;
}

}  // namespace oracle
